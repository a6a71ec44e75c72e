//! Kauffman bracket, writhe and Jones polynomial of pseudo-links
//! (nanophrases over `α₁`), computed by the crossing expansion on words.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::data::HomotopyData;
use crate::laurent::LaurentPoly;
use crate::phrase::Nanophrase;
use crate::presets::{alpha_1, alpha_star, projection};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketError {
    NotOverAlpha1,
    NotOverAlphaStar,
}

impl fmt::Display for BracketError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketError::NotOverAlpha1 => f.write_str("bracket needs a phrase over alpha_1"),
            BracketError::NotOverAlphaStar => f.write_str("phrase is not over alpha_star"),
        }
    }
}

impl core::error::Error for BracketError {}

/// A pseudo-link reduced to what the bracket sees: words of letter
/// indices and a sign per letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Signed {
    words: Vec<Vec<u32>>,
    signs: Vec<i8>,
}

impl Signed {
    fn of(phrase: &Nanophrase, data: &HomotopyData) -> Self {
        let signs = phrase.letters().iter().map(|l| if data.name(l.symbol) == "1" { 1 } else { -1 }).collect();
        let words = phrase.words().iter().map(|w| w.iter().map(|id| id.0).collect()).collect();
        Signed { words, signs }
    }

    /// Relabels letters in order of first occurrence and drops unused ones.
    fn canonical(&self) -> Signed {
        let mut map = BTreeMap::new();
        let mut signs = Vec::new();
        let words = self
            .words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&l| {
                        *map.entry(l).or_insert_with(|| {
                            signs.push(self.signs[l as usize]);
                            signs.len() as u32 - 1
                        })
                    })
                    .collect()
            })
            .collect();
        Signed { words, signs }
    }
}

/// Evaluates brackets, optionally caching results of sub-phrases by
/// canonical form.
#[derive(Debug, Default)]
pub struct BracketEvaluator {
    memo: Option<BTreeMap<Signed, LaurentPoly>>,
}

impl BracketEvaluator {
    pub fn new() -> Self {
        BracketEvaluator { memo: None }
    }

    pub fn memoized() -> Self {
        BracketEvaluator { memo: Some(BTreeMap::new()) }
    }

    /// Bracket of a phrase over `α₁`.
    pub fn bracket(&mut self, phrase: &Nanophrase, data: &HomotopyData) -> Result<LaurentPoly, BracketError> {
        if *data != alpha_1() {
            return Err(BracketError::NotOverAlpha1);
        }
        Ok(self.eval(Signed::of(phrase, data)))
    }

    fn eval(&mut self, p: Signed) -> LaurentPoly {
        if self.memo.is_none() {
            return self.expand(p);
        }
        let key = p.canonical();
        if let Some(v) = self.memo.as_ref().and_then(|m| m.get(&key)) {
            return v.clone();
        }
        let v = self.expand(key.clone());
        if let Some(m) = self.memo.as_mut() {
            m.insert(key, v.clone());
        }
        v
    }

    fn expand(&mut self, mut p: Signed) -> LaurentPoly {
        // every empty word beyond the last one is a free circle
        let k = p.words.len();
        p.words.retain(|w| !w.is_empty());
        if p.words.is_empty() {
            return LaurentPoly::loop_value().pow(k.saturating_sub(1) as u32);
        }
        let factor = LaurentPoly::loop_value().pow((k - p.words.len()) as u32);

        let first = &p.words[0];
        let a = first[0];
        let eps = p.signs[a as usize] as i32;
        let value = if let Some(j) = first[1..].iter().position(|&l| l == a).map(|j| j + 1) {
            let w: Vec<u32> = first[1..j].to_vec();
            let z: Vec<u32> = first[j + 1..].to_vec();
            if w.is_empty() {
                // ⟨xAAy⟩ = -t^{3ε} ⟨xy⟩
                let mut rest = p.clone();
                rest.words[0] = z;
                -self.eval(rest).shift(3 * eps)
            } else {
                let mut split = p.clone();
                split.words.splice(0..1, [w.clone(), z.clone()]);
                let joined = smoothed(&p, 0, &w, &z);
                self.eval(split).shift(eps) + self.eval(joined).shift(-eps)
            }
        } else {
            // the second occurrence sits in another word: bring that word
            // next to the first one and rotate it to start with A
            let r = p.words.iter().skip(1).position(|w| w.contains(&a)).map(|r| r + 1).expect("Gauss phrase");
            let mut second = p.words.remove(r);
            let i = second.iter().position(|&l| l == a).expect("present");
            second.rotate_left(i);
            let w: Vec<u32> = p.words[0][1..].to_vec();
            let z: Vec<u32> = second[1..].to_vec();
            let mut merged = p.clone();
            let wz: Vec<u32> = w.iter().chain(&z).copied().collect();
            merged.words[0] = wz;
            let joined = smoothed(&p, 0, &w, &z);
            self.eval(merged).shift(eps) + self.eval(joined).shift(-eps)
        };
        &factor * &value
    }
}

/// `(P₁ | w⁻z | P₂)_w`: word `r` replaced by `w` reversed followed by `z`,
/// with letters occurring once in `w` changing sign.
fn smoothed(p: &Signed, r: usize, w: &[u32], z: &[u32]) -> Signed {
    let mut out = p.clone();
    out.words[r] = w.iter().rev().chain(z).copied().collect();
    let mut count = BTreeMap::new();
    for &l in w {
        *count.entry(l).or_insert(0u8) += 1;
    }
    for (l, c) in count {
        if c == 1 {
            out.signs[l as usize] = -out.signs[l as usize];
        }
    }
    out
}

/// Bracket of a phrase over `α₁`.
pub fn bracket(phrase: &Nanophrase, data: &HomotopyData) -> Result<LaurentPoly, BracketError> {
    BracketEvaluator::new().bracket(phrase, data)
}

/// Bracket of a phrase over `α★`, through its underlying pseudo-link.
pub fn bracket_star(phrase: &Nanophrase, data: &HomotopyData) -> Result<LaurentPoly, BracketError> {
    bracket(&to_pseudo_link(phrase, data)?, &alpha_1())
}

fn to_pseudo_link(phrase: &Nanophrase, data: &HomotopyData) -> Result<Nanophrase, BracketError> {
    if *data != alpha_star() {
        return Err(BracketError::NotOverAlphaStar);
    }
    projection("star_to_1").expect("preset").apply(phrase).map_err(|_| BracketError::NotOverAlphaStar)
}

/// Sum of the letter signs of a phrase over `α₁`.
pub fn writhe(phrase: &Nanophrase, data: &HomotopyData) -> Result<i64, BracketError> {
    if *data != alpha_1() {
        return Err(BracketError::NotOverAlpha1);
    }
    Ok(Signed::of(phrase, data).signs.iter().map(|&s| s as i64).sum())
}

/// `J(p) = (-t)^{-3|p|} ⟨p⟩`.
pub fn jones(phrase: &Nanophrase, data: &HomotopyData) -> Result<LaurentPoly, BracketError> {
    let w = writhe(phrase, data)?;
    let b = bracket(phrase, data)?;
    Ok(jones_from(&b, w))
}

pub fn jones_star(phrase: &Nanophrase, data: &HomotopyData) -> Result<LaurentPoly, BracketError> {
    jones(&to_pseudo_link(phrase, data)?, &alpha_1())
}

pub fn writhe_star(phrase: &Nanophrase, data: &HomotopyData) -> Result<i64, BracketError> {
    writhe(&to_pseudo_link(phrase, data)?, &alpha_1())
}

/// Jones normalization of a bracket value with the given writhe.
pub fn jones_from(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    bracket.shift((-3 * writhe) as i32).scale(sign)
}
