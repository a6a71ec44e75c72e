use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{FiniteKei, KeiError};
use crate::phrase::Nanophrase;
use crate::presets::KeiDatum;

/// A defining relation between generators, by global generator index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `x_lhs = ā x_arg`.
    Act { lhs: usize, symbol: usize, arg: usize },
    /// `x_lhs = x_left ∗_ā x_right`.
    Op { lhs: usize, symbol: usize, left: usize, right: usize },
    /// `x_lhs = x_rhs` (closure of a word).
    Eq { lhs: usize, rhs: usize },
}

impl Relation {
    pub fn variables(&self) -> Vec<usize> {
        match *self {
            Relation::Act { lhs, arg, .. } => vec![lhs, arg],
            Relation::Op { lhs, left, right, .. } => vec![lhs, left, right],
            Relation::Eq { lhs, rhs } => vec![lhs, rhs],
        }
    }

    fn holds(&self, kei: &FiniteKei, val: &[usize]) -> bool {
        match *self {
            Relation::Act { lhs, symbol, arg } => val[lhs] == kei.act(symbol, val[arg]),
            Relation::Op { lhs, symbol, left, right } => val[lhs] == kei.op(symbol, val[left], val[right]),
            Relation::Eq { lhs, rhs } => val[lhs] == val[rhs],
        }
    }

    /// The value of `v` implied by this relation when every other
    /// variable in it is already bound.
    fn forces(&self, v: usize, kei: &FiniteKei, val: &[usize]) -> Option<usize> {
        match *self {
            Relation::Act { lhs, symbol, arg } if lhs == v && arg < v => Some(kei.act(symbol, val[arg])),
            Relation::Op { lhs, symbol, left, right } if lhs == v && left < v && right < v => {
                Some(kei.op(symbol, val[left], val[right]))
            }
            Relation::Eq { lhs, rhs } if lhs == v && rhs < v => Some(val[rhs]),
            Relation::Eq { lhs, rhs } if rhs == v && lhs < v => Some(val[lhs]),
            _ => None,
        }
    }
}

/// Generators `x^r_s` (`0 ≤ s ≤ n_r`) and relations of the kei of a phrase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeiPresentation {
    symbols: Vec<String>,
    tau: Vec<usize>,
    word_lengths: Vec<usize>,
    offsets: Vec<usize>,
    relations: Vec<Relation>,
    hat: bool,
}

impl KeiPresentation {
    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn is_hat(&self) -> bool {
        self.hat
    }

    pub fn generator_count(&self) -> usize {
        self.word_lengths.iter().map(|n| n + 1).sum()
    }

    /// Global index of `x^r_s` (`r` 0-based).
    pub fn generator(&self, r: usize, s: usize) -> usize {
        self.offsets[r] + s
    }

    /// `(r, s)` of a global index, `r` 0-based.
    pub fn position(&self, g: usize) -> (usize, usize) {
        let r = self.offsets.iter().rposition(|&o| o <= g).expect("index in range");
        (r, g - self.offsets[r])
    }

    /// Display name `x<r>_<s>` with `r` 1-based.
    pub fn generator_name(&self, g: usize) -> String {
        let (r, s) = self.position(g);
        format!("x{}_{}", r + 1, s)
    }

    pub fn inputs(&self) -> Vec<usize> {
        (0..self.word_lengths.len()).map(|r| self.generator(r, 0)).collect()
    }

    pub fn outputs(&self) -> Vec<usize> {
        (0..self.word_lengths.len()).map(|r| self.generator(r, self.word_lengths[r])).collect()
    }

    pub fn relation_text(&self, rel: &Relation) -> String {
        let n = |g| self.generator_name(g);
        match *rel {
            Relation::Act { lhs, symbol, arg } => format!("{} = {}{}", n(lhs), self.symbols[symbol], n(arg)),
            Relation::Op { lhs, symbol, left, right } => {
                format!("{} = {} *{} {}", n(lhs), n(left), self.symbols[symbol], n(right))
            }
            Relation::Eq { lhs, rhs } => format!("{} = {}", n(lhs), n(rhs)),
        }
    }
}

impl fmt::Display for KeiPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generator_count()).map(|g| self.generator_name(g)).collect();
        let rels: Vec<String> = self.relations.iter().map(|r| self.relation_text(r)).collect();
        write!(f, "[{} : {}]", gens.join(", "), rels.join(", "))
    }
}

/// The kei of a phrase over `datum`; with `hat` the closure relations
/// `x^r_0 = x^r_{n_r}` are added.
pub fn presentation(phrase: &Nanophrase, datum: &KeiDatum, hat: bool) -> Result<KeiPresentation, KeiError> {
    if let Some(l) = phrase.letters().iter().find(|l| !datum.data().contains(l.symbol)) {
        return Err(KeiError::ForeignSymbol { letter: l.name.clone() });
    }
    let word_lengths = phrase.word_lengths();
    let mut offsets = Vec::with_capacity(word_lengths.len());
    let mut acc = 0;
    for n in &word_lengths {
        offsets.push(acc);
        acc += n + 1;
    }
    let mut occ: Vec<_> = phrase.occurrences().into_iter().zip(phrase.letters()).collect();
    occ.sort_by_key(|(o, _)| o.first);
    let x = |(r, i): (usize, usize)| offsets[r] + i;
    let mut relations = Vec::with_capacity(2 * occ.len() + word_lengths.len());
    for (o, letter) in occ {
        let a = datum.class(letter.symbol);
        let (f, s) = (o.first, o.second);
        let (f_prev, s_prev) = ((f.0, f.1 - 1), (s.0, s.1 - 1));
        if datum.in_beta(letter.symbol) {
            relations.push(Relation::Act { lhs: x(f), symbol: a, arg: x(f_prev) });
            relations.push(Relation::Op { lhs: x(s), symbol: a, left: x(s_prev), right: x(f_prev) });
        } else {
            relations.push(Relation::Op { lhs: x(f), symbol: a, left: x(f_prev), right: x(s_prev) });
            relations.push(Relation::Act { lhs: x(s), symbol: a, arg: x(s_prev) });
        }
    }
    if hat {
        for (r, &n) in word_lengths.iter().enumerate() {
            relations.push(Relation::Eq { lhs: offsets[r], rhs: offsets[r] + n });
        }
    }
    Ok(KeiPresentation {
        symbols: datum.quotient_names().to_vec(),
        tau: datum.quotient_tau(),
        word_lengths,
        offsets,
        relations,
        hat,
    })
}

fn check_symbols(pres: &KeiPresentation, kei: &FiniteKei) -> Result<(), KeiError> {
    if pres.symbols != kei.symbols || pres.tau != kei.tau {
        return Err(KeiError::SymbolMismatch);
    }
    Ok(())
}

struct Search<'a> {
    kei: &'a FiniteKei,
    /// relations whose largest variable is the index
    by_last: Vec<Vec<Relation>>,
    val: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, v: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if v == self.val.len() {
            return visit(&self.val);
        }
        let forced = self.by_last[v].iter().find_map(|r| r.forces(v, self.kei, &self.val));
        let candidates = match forced {
            Some(x) => x..x + 1,
            None => 0..self.kei.size(),
        };
        for x in candidates {
            self.val[v] = x;
            if self.by_last[v].iter().all(|r| r.holds(self.kei, &self.val)) && !self.run(v + 1, visit) {
                return false;
            }
        }
        true
    }
}

fn search(pres: &KeiPresentation, kei: &FiniteKei, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<(), KeiError> {
    check_symbols(pres, kei)?;
    let g = pres.generator_count();
    if kei.size() == 0 {
        return Ok(());
    }
    let mut by_last = vec![Vec::new(); g];
    for r in &pres.relations {
        let last = r.variables().into_iter().max().expect("nonempty");
        by_last[last].push(*r);
    }
    Search { kei, by_last, val: vec![0; g] }.run(0, visit);
    Ok(())
}

/// Number of homomorphisms from the presented kei to `kei`, i.e. of
/// generator assignments satisfying every relation.
pub fn count_colorings(pres: &KeiPresentation, kei: &FiniteKei) -> Result<u64, KeiError> {
    let mut n = 0u64;
    search(pres, kei, &mut |_| {
        n += 1;
        true
    })?;
    Ok(n)
}

/// The colorings themselves, in lexicographic order of generator values,
/// stopping after `limit`.
pub fn colorings(pres: &KeiPresentation, kei: &FiniteKei, limit: usize) -> Result<Vec<Vec<usize>>, KeiError> {
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    search(pres, kei, &mut |v| {
        out.push(v.to_vec());
        out.len() < limit
    })?;
    Ok(out)
}
