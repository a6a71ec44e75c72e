mod common;

use nanoword::kei::groups::{small_groups, FiniteGroup};
use nanoword::kei::{core_of_group, count_colorings, dihedral_kei, fixture, gamma_group, presentation, FiniteKei};
use nanoword::moves::{permute, shift};
use nanoword::presets::{alpha_star, build_triples, curve_datum, link_datum, quasi_datum, KeiDatum};
use nanoword::{apply, enumerate_moves, random_nanophrase, MoveKinds, Nanophrase};
use proptest::prelude::*;

use common::{exhaustive_count, figure_eight, fox_count, fox_count_with, phrase, trefoil};

fn over(datum: &KeiDatum, name: &str) -> FiniteKei {
    fixture(name, datum.quotient_names().to_vec(), datum.quotient_tau()).unwrap()
}

/// Cores with several actions: trivial, inversion (abelian groups) and
/// conjugation by a fixed element paired with conjugation by its inverse.
fn test_keis(datum: &KeiDatum) -> Vec<(String, FiniteKei)> {
    let names = datum.quotient_names().to_vec();
    let tau = datum.quotient_tau();
    let mut out = Vec::new();
    for (gname, g) in small_groups() {
        let n = g.order();
        let id: Vec<usize> = (0..n).collect();
        let mut actions = vec![vec![id.clone(); names.len()]];
        if let Some(inv) = g.inversion() {
            actions.push(vec![inv; names.len()]);
        }
        for c in 1..n {
            let conj = |h: usize| (0..n).map(|x| g.mul(g.mul(h, x), g.inv(h))).collect::<Vec<_>>();
            let action: Vec<Vec<usize>> =
                (0..names.len()).map(|a| if a <= tau[a] { conj(c) } else { conj(g.inv(c)) }).collect();
            if (0..names.len()).all(|a| a != tau[a] || conj(c) == conj(g.inv(c))) {
                actions.push(action);
            }
        }
        for (i, action) in actions.into_iter().enumerate() {
            let k = core_of_group(&g, names.clone(), tau.clone(), action).unwrap();
            out.push((format!("{gname}#{i}"), k));
        }
    }
    out
}

#[test]
fn cores_of_small_groups_are_keis() {
    for datum in [link_datum(), curve_datum(), quasi_datum()] {
        let keis = test_keis(&datum);
        assert!(keis.len() >= 14);
        for (name, k) in keis {
            assert!(k.validate().is_empty(), "{name}");
            let op = k.opposite();
            assert!(op.validate().is_empty(), "{name}");
            assert_eq!(op.opposite(), k, "{name}");
        }
    }
}

#[test]
fn core_of_cyclic_groups_is_dihedral() {
    let d = link_datum();
    for n in [3, 5] {
        let k = dihedral_kei(n, d.quotient_names().to_vec(), d.quotient_tau()).unwrap();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(k.op(0, x, y), (2 * y + n - x) % n);
                assert_eq!(k.op(1, x, y), (2 * y + n - x) % n);
            }
        }
    }
}

#[test]
fn every_single_entry_mutation_of_dihedral3_is_detected() {
    let d = link_datum();
    let base = over(&d, "dihedral3");
    let mut mutations = 0;
    for a in 0..2 {
        for x in 0..3 {
            for y in 0..3 {
                for delta in 1..3 {
                    let mut k = base.clone();
                    k.set_op(a, x, y, base.op(a, x, y) + delta);
                    let bad = k.validate();
                    assert!(!bad.is_empty());
                    assert!(bad.iter().any(|v| v.axiom == 5));
                    mutations += 1;
                }
            }
        }
    }
    assert!(mutations >= 20);
}

#[test]
fn non_automorphism_is_rejected() {
    let d = link_datum();
    let g = FiniteGroup::cyclic(4);
    let bad = vec![vec![0, 2, 1, 3], vec![0, 1, 2, 3]];
    assert!(core_of_group(&g, d.quotient_names().to_vec(), d.quotient_tau(), bad).is_err());
}

#[test]
fn fox_counts_of_fixtures() {
    let d = link_datum();
    let count = |p: &Nanophrase, name: &str| count_colorings(&presentation(p, &d, true).unwrap(), &over(&d, name)).unwrap();
    let star = alpha_star();
    assert_eq!(count(&trefoil(), "dihedral3"), 9);
    assert_eq!(fox_count(&trefoil(), &star, 3), 9);
    assert_eq!(count(&figure_eight(), "dihedral5"), 25);
    assert_eq!(fox_count(&figure_eight(), &star, 5), 25);
    assert_eq!(count(&figure_eight(), "dihedral3"), 3);
    let unknot = phrase(&star, &[("A", "a+")], &["AA"]);
    assert_eq!(count(&unknot, "dihedral3"), 3);
    assert_eq!(count(&unknot, "trivial1"), 1);
}

fn datum_by_index(i: usize) -> KeiDatum {
    [link_datum(), curve_datum(), quasi_datum()][i].clone()
}

proptest! {
    #![proptest_config(common::config(48))]

    #[test]
    fn backtracking_matches_exhaustive(n in 0usize..3, k in 1usize..3, seed in any::<u64>(), which in 0usize..3, hat in any::<bool>()) {
        let datum = datum_by_index(which);
        let p = random_nanophrase(datum.data(), n, k, seed);
        let pres = presentation(&p, &datum, hat).unwrap();
        prop_assume!(pres.generator_count() <= 6);
        for (name, kei) in test_keis(&datum).into_iter().filter(|(_, k)| k.size() <= 4) {
            prop_assert_eq!(count_colorings(&pres, &kei).unwrap(), exhaustive_count(&pres, &kei), "{}", name);
        }
    }

    #[test]
    fn dihedral_counts_match_fox_system(n in 0usize..7, k in 1usize..4, seed in any::<u64>()) {
        let d = link_datum();
        let p = random_nanophrase(d.data(), n, k, seed);
        let pres = presentation(&p, &d, true).unwrap();
        // β-first occurrences are over-passages in the kei, the mirror of the codec table
        prop_assert_eq!(count_colorings(&pres, &over(&d, "dihedral3")).unwrap(), fox_count_with(&p, d.data(), 3, true));
        prop_assert_eq!(count_colorings(&pres, &over(&d, "dihedral5")).unwrap(), fox_count_with(&p, d.data(), 5, true));
    }

    #[test]
    fn hat_counts_are_homotopy_invariant(n in 0usize..5, k in 1usize..3, seed in any::<u64>(), which in 0usize..3) {
        let datum = datum_by_index(which);
        let data = build_triples(&datum);
        prop_assert_eq!(&data, datum.data());
        let p = random_nanophrase(&data, n, k, seed);
        let keis: Vec<FiniteKei> = test_keis(&datum).into_iter().map(|(_, k)| k).filter(|k| k.size() <= 5).collect();
        let counts = |q: &Nanophrase, hat| -> Vec<u64> {
            let pres = presentation(q, &datum, hat).unwrap();
            keis.iter().map(|kei| count_colorings(&pres, kei).unwrap()).collect()
        };
        let (hat_counts, plain_counts) = (counts(&p, true), counts(&p, false));
        let mut moves = enumerate_moves(&p, &data, MoveKinds::HOMOTOPY.without_insertions());
        moves.extend(enumerate_moves(&p, &data, MoveKinds::HOMOTOPY.insertions()).into_iter().step_by(7));
        for mv in moves {
            let q = apply(&p, &data, &mv).unwrap();
            prop_assert_eq!(&counts(&q, true), &hat_counts, "{:?}", mv);
            prop_assert_eq!(&counts(&q, false), &plain_counts, "{:?}", mv);
        }
        if datum.supports_shift_invariance() {
            for r in 0..k {
                if !p.word(r).is_empty() {
                    prop_assert_eq!(&counts(&shift(&p, &data, r).unwrap(), true), &hat_counts);
                }
            }
            for i in 0..k - 1 {
                let q = permute(&p, &data, i).unwrap();
                prop_assert_eq!(&counts(&q, true), &hat_counts);
                prop_assert_eq!(&counts(&q, false), &plain_counts);
            }
        }
    }

    #[test]
    fn reversal_matches_opposite_kei(n in 0usize..6, k in 1usize..3, seed in any::<u64>(), which in 0usize..3, hat in any::<bool>()) {
        let datum = datum_by_index(which);
        let p = random_nanophrase(datum.data(), n, k, seed);
        let reversed = presentation(&p.reversed(), &datum, hat).unwrap();
        let complement = presentation(&p, &datum.complemented(), hat).unwrap();
        for (name, kei) in test_keis(&datum).into_iter().filter(|(_, k)| k.size() <= 6) {
            prop_assert_eq!(
                count_colorings(&reversed, &kei).unwrap(),
                count_colorings(&complement, &kei.opposite()).unwrap(),
                "{}", name
            );
        }
    }
}

#[test]
fn presentation_shape() {
    let d = link_datum();
    let pres = presentation(&trefoil(), &d, true).unwrap();
    assert_eq!(pres.generator_count(), 7);
    assert_eq!(pres.relations().len(), 7);
    assert_eq!(pres.inputs(), vec![0]);
    assert_eq!(pres.outputs(), vec![6]);
    let plain = presentation(&trefoil(), &d, false).unwrap();
    assert_eq!(plain.relations().len(), 6);
    assert!(!plain.is_hat());
}

#[test]
fn gamma_presentation_counts() {
    let d = link_datum();
    let g = gamma_group(&presentation(&trefoil(), &d, false).unwrap());
    // 7 kei generators under two symbols, plus composite action words
    assert!(g.generators.len() >= 14);
    assert_eq!(g.relations.len(), 12);
    let text = g.to_string();
    assert!(text.starts_with("<+x1_0, +x1_1"));
}

