use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::presentation::{KeiPresentation, Relation};

/// A word in the generators of a group presentation: `(generator, ±1)`.
pub type GroupWord = Vec<(usize, i8)>;

/// A finitely presented group, relations written `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<(GroupWord, GroupWord)>,
}

impl GroupPresentation {
    fn word_text(&self, w: &GroupWord) -> String {
        let mut s = String::new();
        for (i, &(g, e)) in w.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&self.generators[g]);
            if e < 0 {
                s.push_str("^-1");
            }
        }
        s
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(", "))?;
        for (i, (l, r)) in self.relations.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} = {}", self.word_text(l), self.word_text(r))?;
        }
        f.write_str(">")
    }
}

/// Presentation of the group `Γ_X` of the presented kei.
///
/// Generators are `u·s` where `s` is a kei generator (closure relations
/// identify generators first) and `u` is a word in the symbols with
/// adjacent pairs `a τ̄(a)` cancelled. Every length-one prefix `a` yields
/// one relation per kei relation, with `a(x ∗_b y)` replaced by
/// `(a y)(a τ̄(b) x)⁻¹(a y)` and `a(b x)` by `(ab)x`.
pub fn gamma_group(pres: &KeiPresentation) -> GroupPresentation {
    let q = pres.symbols().len();
    let tau = pres.tau();
    let g = pres.generator_count();

    let mut parent: Vec<usize> = (0..g).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for rel in pres.relations() {
        if let Relation::Eq { lhs, rhs } = *rel {
            let (a, b) = (find(&mut parent, lhs), find(&mut parent, rhs));
            parent[a.max(b)] = a.min(b);
        }
    }
    let reps: Vec<usize> = (0..g).filter(|&x| find(&mut parent, x) == x).collect();

    let reduce = |word: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &a in word {
            match out.last() {
                Some(&b) if tau[b] == a => {
                    out.pop();
                }
                _ => out.push(a),
            }
        }
        out
    };

    let mut index: BTreeMap<(Vec<usize>, usize), usize> = BTreeMap::new();
    let mut generators = Vec::new();
    let mut intern = |word: Vec<usize>, s: usize, generators: &mut Vec<String>| -> usize {
        *index.entry((word.clone(), s)).or_insert_with(|| {
            let mut name: String = word.iter().map(|&a| pres.symbols()[a].as_str()).collect();
            name.push_str(&pres.generator_name(s));
            generators.push(name);
            generators.len() - 1
        })
    };
    for a in 0..q {
        for &s in &reps {
            intern(alloc::vec![a], s, &mut generators);
        }
    }

    let mut relations = Vec::new();
    for rel in pres.relations() {
        for a in 0..q {
            match *rel {
                Relation::Act { lhs, symbol, arg } => {
                    let l = intern(alloc::vec![a], find(&mut parent, lhs), &mut generators);
                    let r = intern(reduce(&[a, symbol]), find(&mut parent, arg), &mut generators);
                    relations.push((alloc::vec![(l, 1)], alloc::vec![(r, 1)]));
                }
                Relation::Op { lhs, symbol, left, right } => {
                    let l = intern(alloc::vec![a], find(&mut parent, lhs), &mut generators);
                    let y = intern(alloc::vec![a], find(&mut parent, right), &mut generators);
                    let x = intern(reduce(&[a, tau[symbol]]), find(&mut parent, left), &mut generators);
                    relations.push((alloc::vec![(l, 1)], alloc::vec![(y, 1), (x, -1), (y, 1)]));
                }
                Relation::Eq { .. } => {}
            }
        }
    }
    GroupPresentation { generators, relations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::kei::presentation;
    use crate::phrase::Nanophrase;
    use crate::presets::{alpha_star, link_datum, quasi_datum};

    #[test]
    fn empty_word_gives_free_group() {
        let pres = presentation(&Nanophrase::empty_words(1), &link_datum(), false).unwrap();
        let g = gamma_group(&pres);
        assert_eq!(g.generators, ["+x1_0", "-x1_0"]);
        assert!(g.relations.is_empty());
        assert_eq!(g.to_string(), "<+x1_0, -x1_0 | >");
    }

    #[test]
    fn unknot_generator_count() {
        let p = Nanophrase::from_strs(&alpha_star(), &[("A", "a+")], &["AA"]).unwrap();
        let pres = presentation(&p, &link_datum(), true).unwrap();
        let g = gamma_group(&pres);
        // x1_0 and x1_2 are identified: two kei generators, two symbols
        let length_one = g.generators.iter().filter(|n| n.starts_with(['+', '-']) && !n[1..].starts_with(['+', '-'])).count();
        assert_eq!(length_one, 4);
        assert_eq!(g.relations.len(), 4);
    }

    #[test]
    fn quasi_datum_single_symbol() {
        let d = quasi_datum();
        let p = Nanophrase::from_strs(d.data(), &[("A", "c")], &["AA"]).unwrap();
        let g = gamma_group(&presentation(&p, &d, false).unwrap());
        assert!(g.generators.iter().all(|n| n.trim_start_matches('*').starts_with('x')));
    }
}
