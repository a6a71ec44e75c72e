mod common;

use nanoword::bracket::bracket_star;
use nanoword::codec::{encode, forget_orientation_data, CodecError, Layer, Passage, Sign, SignedGaussCode};
use nanoword::presets::{alpha_0, alpha_star};
use nanoword::{random_nanophrase, LaurentPoly, Nanophrase};
use proptest::prelude::*;

/// A random code: crossing positions from a random Gauss phrase, then an
/// independent choice of which passage is over and of the sign.
fn random_code(n: usize, k: usize, seed: u64, over_first: &[bool], plus: &[bool]) -> SignedGaussCode {
    let shape = random_nanophrase(&alpha_0(), n, k, seed);
    let mut seen = vec![false; n];
    let components = shape
        .words()
        .iter()
        .map(|w| {
            w.iter()
                .map(|id| {
                    let i = id.index();
                    let first = !seen[i];
                    seen[i] = true;
                    let over = over_first[i] == first;
                    Passage {
                        label: format!("c{i}"),
                        layer: if over { Layer::Over } else { Layer::Under },
                        sign: if plus[i] { Sign::Plus } else { Sign::Minus },
                    }
                })
                .collect()
        })
        .collect();
    SignedGaussCode::new(components)
}

fn all_changed(code: &SignedGaussCode) -> SignedGaussCode {
    let mut labels: Vec<String> = code.components.iter().flatten().map(|p| p.label.clone()).collect();
    labels.sort();
    labels.dedup();
    labels.iter().fold(code.clone(), |c, l| c.crossing_changed(l))
}

fn symbol_names(p: &Nanophrase, names: &[String]) -> Vec<String> {
    p.flat().iter().map(|&id| names[p.symbol(id).index()].clone()).collect()
}

#[test]
fn pinned_trefoil() {
    let code = SignedGaussCode::parse_components(&["U1+ O2+ U3+ O1+ U2+ O3+"]).unwrap();
    let p = encode(&code).unwrap();
    let star = alpha_star();
    assert!(p.validate(&star).is_ok());
    let expected = common::trefoil();
    assert!(p.is_isomorphic(&expected));
    let value = LaurentPoly::from_terms([(5, -1), (-3, -1), (-7, 1)]);
    assert_eq!(bracket_star(&p, &star).unwrap(), value);
    // the mirrored table would give b+, a+, b+ and the mirror polynomial
    let mirrored = all_changed(&code);
    let q = encode(&mirrored).unwrap();
    assert!(!q.is_isomorphic(&expected));
    assert_eq!(bracket_star(&q, &star).unwrap(), value.mirror());
}

#[test]
fn malformed_codes() {
    assert!(matches!(Passage::parse("X1+"), Err(CodecError::BadPassage(_))));
    assert!(matches!(Passage::parse("O1"), Err(CodecError::BadPassage(_))));
    assert!(matches!(Passage::parse("O+"), Err(CodecError::BadPassage(_))));
    let once = SignedGaussCode::parse_components(&["O1+ U2+ O2+"]).unwrap();
    assert!(matches!(once.validate(), Err(CodecError::LabelCount { .. })));
    let same = SignedGaussCode::parse_components(&["O1+ O1+"]).unwrap();
    assert!(matches!(encode(&same), Err(CodecError::SameLayer { .. })));
    let sign = SignedGaussCode::parse_components(&["O1+ U1-"]).unwrap();
    assert!(matches!(encode(&sign), Err(CodecError::SignMismatch { .. })));
}

#[test]
fn display_round_trip() {
    let code = SignedGaussCode::parse_components(&["O1+ U2-", "U1+ O2-"]).unwrap();
    let text = code.to_string();
    assert_eq!(text, "O1+ U2- / U1+ O2-");
    let parts: Vec<&str> = text.split('/').collect();
    assert_eq!(SignedGaussCode::parse_components(&parts).unwrap(), code);
}

#[test]
fn hopf_link_words() {
    let code = SignedGaussCode::parse_components(&["O1+ U2+", "U1+ O2+"]).unwrap();
    let p = encode(&code).unwrap();
    assert_eq!(p.len(), 2);
    let names = alpha_star().names().to_vec();
    assert_eq!(symbol_names(&p, &names), ["b+", "a+", "b+", "a+"]);
    assert_eq!(
        bracket_star(&p, &alpha_star()).unwrap(),
        LaurentPoly::from_terms([(4, -1), (-4, -1)])
    );
}

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn encoded_codes_are_valid(n in 0usize..7, k in 1usize..4, seed in any::<u64>(), o in prop::collection::vec(any::<bool>(), 7), s in prop::collection::vec(any::<bool>(), 7)) {
        let code = random_code(n, k, seed, &o, &s);
        prop_assert!(code.validate().is_ok());
        let p = encode(&code).unwrap();
        prop_assert!(p.validate(&alpha_star()).is_ok());
        prop_assert_eq!(p.len(), k);
    }

    #[test]
    fn forgetting_ignores_crossing_changes(n in 1usize..7, k in 1usize..4, seed in any::<u64>(), o in prop::collection::vec(any::<bool>(), 7), s in prop::collection::vec(any::<bool>(), 7), pick in 0usize..7) {
        let code = random_code(n, k, seed, &o, &s);
        let base = forget_orientation_data(&encode(&code).unwrap()).unwrap();
        let changed = code.crossing_changed(&format!("c{}", pick % n));
        prop_assert_eq!(&forget_orientation_data(&encode(&changed).unwrap()).unwrap(), &base);
        // the curve letter records only whether the first passage is under on a + crossing
        let names = alpha_0().names().to_vec();
        let letters = symbol_names(&base, &names);
        let mut seen = vec![false; n];
        let mut expected = Vec::new();
        for p in code.components.iter().flatten() {
            let i: usize = p.label[1..].parse().unwrap();
            let first = !seen[i];
            seen[i] = true;
            let (under_first, plus) = if first { (p.layer == Layer::Under, p.sign == Sign::Plus) } else { (p.layer == Layer::Over, p.sign == Sign::Plus) };
            expected.push(if under_first == plus { "a" } else { "b" }.to_string());
        }
        prop_assert_eq!(letters, expected);
    }

    #[test]
    fn switching_every_crossing_mirrors_the_bracket(n in 0usize..7, k in 1usize..3, seed in any::<u64>(), o in prop::collection::vec(any::<bool>(), 7), s in prop::collection::vec(any::<bool>(), 7)) {
        let code = random_code(n, k, seed, &o, &s);
        let star = alpha_star();
        let b = bracket_star(&encode(&code).unwrap(), &star).unwrap();
        let m = bracket_star(&encode(&all_changed(&code)).unwrap(), &star).unwrap();
        prop_assert_eq!(m, b.mirror());
    }
}
