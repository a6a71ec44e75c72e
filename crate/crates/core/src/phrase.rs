//! Nanowords and nanophrases over a homotopy data.
//!
//! A [`Nanophrase`] stores its letters (name and projection) in a table and
//! its words as sequences of [`LetterId`]s into that table. Every phrase
//! value satisfies the Gauss condition: each letter occurs exactly twice in
//! the concatenation of the words. Nanowords are phrases of length one.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::data::{HomotopyData, Symbol};

/// Index of a letter in the letter table of its phrase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterId(pub u32);

impl LetterId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub name: String,
    pub symbol: Symbol,
}

/// A position inside a phrase: word index and offset in that word, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub word: usize,
    pub offset: usize,
}

impl Slot {
    pub const fn new(word: usize, offset: usize) -> Self {
        Slot { word, offset }
    }
}

/// Where a letter occurs. `first` precedes `second` in reading order.
/// Word indices are 0-based; positions inside a word are 1-based, so the
/// letter at position `i` sits between generators `i - 1` and `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    /// A letter that occurs a number of times other than two.
    NotGauss { letter: String, count: usize },
    /// A declared letter that never occurs.
    Dangling { letter: String },
    /// A word references a letter that is not declared.
    Undeclared { letter: String },
    DuplicateLetter { letter: String },
    UnknownSymbol { letter: String, symbol: String },
    /// An internal letter id outside the letter table.
    BadLetterId { id: u32 },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::NotGauss { letter, count } => {
                write!(f, "letter `{letter}` occurs {count} time(s), expected 2")
            }
            Issue::Dangling { letter } => write!(f, "letter `{letter}` is declared but never occurs"),
            Issue::Undeclared { letter } => write!(f, "letter `{letter}` occurs but is not declared"),
            Issue::DuplicateLetter { letter } => write!(f, "letter `{letter}` is declared twice"),
            Issue::UnknownSymbol { letter, symbol } => {
                write!(f, "letter `{letter}` projects to unknown symbol `{symbol}`")
            }
            Issue::BadLetterId { id } => write!(f, "letter id {id} is out of range"),
        }
    }
}

/// Collected validation problems; empty iff the input is well formed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }

    fn push(&mut self, issue: Issue) {
        self.issues.push(issue);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

/// A phrase as written by a user: letter and symbol names, not yet checked.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPhrase {
    pub letters: Vec<(String, String)>,
    pub words: Vec<Vec<String>>,
}

impl RawPhrase {
    /// Convenience constructor. Each word string is split on `.` when it
    /// contains one and into characters otherwise; `-` is the empty word.
    pub fn from_strs(letters: &[(&str, &str)], words: &[&str]) -> Self {
        let letters = letters.iter().map(|(l, s)| (String::from(*l), String::from(*s))).collect::<Vec<_>>();
        let words = words
            .iter()
            .map(|w| split_word_token(w, |name| letters.iter().any(|(l, _)| l == name)))
            .collect();
        RawPhrase { letters, words }
    }

    /// Checks the phrase against `data`, collecting every problem.
    pub fn validate(&self, data: &HomotopyData) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut declared: BTreeMap<&str, usize> = BTreeMap::new();
        for (name, sym) in &self.letters {
            if declared.insert(name.as_str(), 0).is_some() {
                report.push(Issue::DuplicateLetter { letter: name.clone() });
            }
            if data.symbol(sym).is_none() {
                report.push(Issue::UnknownSymbol { letter: name.clone(), symbol: sym.clone() });
            }
        }
        let mut undeclared: BTreeMap<&str, ()> = BTreeMap::new();
        for l in self.words.iter().flatten() {
            match declared.get_mut(l.as_str()) {
                Some(c) => *c += 1,
                None => {
                    if undeclared.insert(l.as_str(), ()).is_none() {
                        report.push(Issue::Undeclared { letter: l.clone() });
                    }
                }
            }
        }
        for (name, _) in &self.letters {
            match declared.get(name.as_str()).copied().unwrap_or(0) {
                0 => report.push(Issue::Dangling { letter: name.clone() }),
                2 => {}
                count => {
                    // duplicates share one counter; report once
                    if !report.issues.iter().any(|i| matches!(i, Issue::NotGauss { letter, .. } if letter == name)) {
                        report.push(Issue::NotGauss { letter: name.clone(), count });
                    }
                }
            }
        }
        report
    }

    pub fn resolve(&self, data: &HomotopyData) -> Result<Nanophrase, ValidationReport> {
        let report = self.validate(data);
        if !report.is_ok() {
            return Err(report);
        }
        let letters: Vec<Letter> = self
            .letters
            .iter()
            .map(|(n, s)| Letter { name: n.clone(), symbol: data.symbol(s).expect("validated") })
            .collect();
        let index: BTreeMap<&str, LetterId> =
            self.letters.iter().enumerate().map(|(i, (n, _))| (n.as_str(), LetterId(i as u32))).collect();
        let words = self
            .words
            .iter()
            .map(|w| w.iter().map(|l| index[l.as_str()]).collect())
            .collect();
        Nanophrase::new(letters, words)
    }
}

/// Splits one word token into letter names: dot-separated when the token
/// contains `.`, a single letter when the whole token is a known name, and
/// one letter per character otherwise. `-` denotes the empty word.
pub fn split_word_token(token: &str, is_letter: impl Fn(&str) -> bool) -> Vec<String> {
    if token == "-" || token.is_empty() {
        Vec::new()
    } else if token.contains('.') {
        token.split('.').filter(|s| !s.is_empty()).map(String::from).collect()
    } else if is_letter(token) {
        vec![String::from(token)]
    } else {
        token.chars().map(|c| {
            let mut s = String::new();
            s.push(c);
            s
        }).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhraseError {
    /// Operation needs nanowords (phrases of length one).
    NotANanoword { length: usize },
    /// A symbol does not belong to the homotopy data in use.
    ForeignSymbol { letter: String },
}

impl fmt::Display for PhraseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhraseError::NotANanoword { length } => write!(f, "expected a nanoword, got a phrase of length {length}"),
            PhraseError::ForeignSymbol { letter } => {
                write!(f, "letter `{letter}` projects outside the homotopy data")
            }
        }
    }
}

impl core::error::Error for PhraseError {}

/// A nanophrase: an alphabet with projections and a sequence of words whose
/// concatenation is a Gauss word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nanophrase {
    letters: Vec<Letter>,
    words: Vec<Vec<LetterId>>,
}

impl Nanophrase {
    /// Builds a phrase, rejecting anything that violates the Gauss
    /// condition or has duplicate letter names.
    pub fn new(letters: Vec<Letter>, words: Vec<Vec<LetterId>>) -> Result<Self, ValidationReport> {
        let mut report = ValidationReport::default();
        let mut counts = vec![0usize; letters.len()];
        for id in words.iter().flatten() {
            match counts.get_mut(id.index()) {
                Some(c) => *c += 1,
                None => report.push(Issue::BadLetterId { id: id.0 }),
            }
        }
        for (i, l) in letters.iter().enumerate() {
            if letters[..i].iter().any(|o| o.name == l.name) {
                report.push(Issue::DuplicateLetter { letter: l.name.clone() });
            }
            match counts[i] {
                0 => report.push(Issue::Dangling { letter: l.name.clone() }),
                2 => {}
                count => report.push(Issue::NotGauss { letter: l.name.clone(), count }),
            }
        }
        if report.is_ok() {
            Ok(Nanophrase { letters, words })
        } else {
            Err(report)
        }
    }

    /// Builder used by the rewrite engine; inputs come from a valid phrase.
    pub(crate) fn from_parts_unchecked(letters: Vec<Letter>, words: Vec<Vec<LetterId>>) -> Self {
        debug_assert!(Nanophrase::new(letters.clone(), words.clone()).is_ok());
        Nanophrase { letters, words }
    }

    /// The phrase of length zero.
    pub fn empty() -> Self {
        Nanophrase { letters: Vec::new(), words: Vec::new() }
    }

    /// `k` empty words, e.g. `(∅)` for `k = 1`.
    pub fn empty_words(k: usize) -> Self {
        Nanophrase { letters: Vec::new(), words: vec![Vec::new(); k] }
    }

    /// Builds a phrase from letter/symbol names and word strings
    /// (see [`RawPhrase::from_strs`]).
    pub fn from_strs(
        data: &HomotopyData,
        letters: &[(&str, &str)],
        words: &[&str],
    ) -> Result<Self, ValidationReport> {
        RawPhrase::from_strs(letters, words).resolve(data)
    }

    /// Checks symbol membership in `data` together with the Gauss condition.
    pub fn validate(&self, data: &HomotopyData) -> ValidationReport {
        let mut report = match Nanophrase::new(self.letters.clone(), self.words.clone()) {
            Ok(_) => ValidationReport::default(),
            Err(r) => r,
        };
        for l in &self.letters {
            if !data.contains(l.symbol) {
                report.push(Issue::UnknownSymbol { letter: l.name.clone(), symbol: format!("#{}", l.symbol.0) });
            }
        }
        report
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, id: LetterId) -> &Letter {
        &self.letters[id.index()]
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    pub fn letter_id(&self, name: &str) -> Option<LetterId> {
        self.letters.iter().position(|l| l.name == name).map(|i| LetterId(i as u32))
    }

    #[inline]
    pub fn symbol(&self, id: LetterId) -> Symbol {
        self.letters[id.index()].symbol
    }

    pub fn words(&self) -> &[Vec<LetterId>] {
        &self.words
    }

    pub fn word(&self, r: usize) -> &[LetterId] {
        &self.words[r]
    }

    /// Number of words `k`.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word_lengths(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }

    /// The concatenation `w_1 w_2 ⋯ w_k`.
    pub fn flat(&self) -> Vec<LetterId> {
        self.words.iter().flatten().copied().collect()
    }

    pub fn letter_ids(&self) -> impl Iterator<Item = LetterId> {
        (0..self.letters.len() as u32).map(LetterId)
    }

    /// Occurrence index for every letter, indexed by [`LetterId`].
    pub fn occurrences(&self) -> Vec<Occurrence> {
        let mut first: Vec<Option<(usize, usize)>> = vec![None; self.letters.len()];
        let mut out = vec![Occurrence { first: (0, 0), second: (0, 0) }; self.letters.len()];
        for (r, w) in self.words.iter().enumerate() {
            for (j, id) in w.iter().enumerate() {
                let pos = (r, j + 1);
                match first[id.index()] {
                    None => first[id.index()] = Some(pos),
                    Some(f) => out[id.index()] = Occurrence { first: f, second: pos },
                }
            }
        }
        out
    }

    /// Rebuilds a phrase from word lengths and an occurrence index.
    pub fn from_occurrences(
        letters: Vec<Letter>,
        word_lengths: &[usize],
        occurrences: &[Occurrence],
    ) -> Result<Self, ValidationReport> {
        let mut words: Vec<Vec<Option<LetterId>>> = word_lengths.iter().map(|&n| vec![None; n]).collect();
        let mut report = ValidationReport::default();
        for (i, occ) in occurrences.iter().enumerate() {
            for (r, p) in [occ.first, occ.second] {
                match words.get_mut(r).and_then(|w| p.checked_sub(1).and_then(|j| w.get_mut(j))) {
                    Some(cell @ None) => *cell = Some(LetterId(i as u32)),
                    _ => report.push(Issue::BadLetterId { id: i as u32 }),
                }
            }
        }
        if !report.is_ok() {
            return Err(report);
        }
        let mut out = Vec::with_capacity(words.len());
        for w in words {
            let mut word = Vec::with_capacity(w.len());
            for c in w {
                match c {
                    Some(id) => word.push(id),
                    None => return Err(ValidationReport { issues: vec![Issue::BadLetterId { id: u32::MAX }] }),
                }
            }
            out.push(word);
        }
        Nanophrase::new(letters, out)
    }

    /// Occurrence count of every letter inside word `r`.
    pub fn counts_in_word(&self, r: usize) -> Vec<u8> {
        let mut c = vec![0u8; self.letters.len()];
        for id in &self.words[r] {
            c[id.index()] += 1;
        }
        c
    }

    /// Canonical representative of the isomorphism class together with the
    /// map old id → new id. Letters are renamed `X1, X2, …` in order of
    /// first occurrence in the concatenated word.
    pub fn canonical_with_map(&self) -> (Nanophrase, Vec<LetterId>) {
        let mut map = vec![LetterId(u32::MAX); self.letters.len()];
        let mut letters = Vec::with_capacity(self.letters.len());
        for id in self.words.iter().flatten() {
            if map[id.index()].0 == u32::MAX {
                map[id.index()] = LetterId(letters.len() as u32);
                letters.push(Letter {
                    name: format!("X{}", letters.len() + 1),
                    symbol: self.letters[id.index()].symbol,
                });
            }
        }
        let words = self.words.iter().map(|w| w.iter().map(|id| map[id.index()]).collect()).collect();
        (Nanophrase { letters, words }, map)
    }

    pub fn canonical_form(&self) -> Nanophrase {
        self.canonical_with_map().0
    }

    pub fn is_isomorphic(&self, other: &Nanophrase) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// Replaces projections letter by letter.
    pub fn map_symbols(&self, f: impl Fn(LetterId, Symbol) -> Symbol) -> Nanophrase {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, l)| Letter { name: l.name.clone(), symbol: f(LetterId(i as u32), l.symbol) })
            .collect();
        Nanophrase { letters, words: self.words.clone() }
    }

    /// The phrase read from right to left (word order and letters reversed,
    /// projections unchanged).
    pub fn reversed(&self) -> Nanophrase {
        let words = self
            .words
            .iter()
            .rev()
            .map(|w| w.iter().rev().copied().collect())
            .collect();
        Nanophrase { letters: self.letters.clone(), words }
    }

    /// A letter name not used in this phrase, drawn from `X<n>` for increasing `n`.
    pub fn fresh_name(&self, start: usize) -> String {
        let mut n = start.max(1);
        loop {
            let candidate = format!("X{n}");
            if !self.letters.iter().any(|l| l.name == candidate) {
                return candidate;
            }
            n += 1;
        }
    }

    /// Compact single-line rendering used for ordering and diagnostics:
    /// `X1:a+ X2:b+ / X1.X2.X1.X2` with `-` for empty words.
    pub fn compact(&self, data: &HomotopyData) -> String {
        let mut s = String::new();
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&l.name);
            s.push(':');
            s.push_str(data.name(l.symbol));
        }
        s.push_str(" /");
        for w in &self.words {
            s.push(' ');
            if w.is_empty() {
                s.push('-');
            }
            for (j, id) in w.iter().enumerate() {
                if j > 0 {
                    s.push('.');
                }
                s.push_str(&self.letters[id.index()].name);
            }
        }
        s
    }
}

/// Connected sum of two nanowords: `u` followed by `v`. Letters of `v`
/// that clash with letters of `u` are renamed.
pub fn concatenate(data: &HomotopyData, u: &Nanophrase, v: &Nanophrase) -> Result<Nanophrase, PhraseError> {
    for p in [u, v] {
        if p.len() != 1 {
            return Err(PhraseError::NotANanoword { length: p.len() });
        }
        if let Some(l) = p.letters.iter().find(|l| !data.contains(l.symbol)) {
            return Err(PhraseError::ForeignSymbol { letter: l.name.clone() });
        }
    }
    let mut letters = u.letters.clone();
    let offset = letters.len() as u32;
    let mut next = 1;
    for l in &v.letters {
        let name = if letters.iter().any(|o| o.name == l.name) {
            loop {
                let candidate = format!("X{next}");
                next += 1;
                if !letters.iter().any(|o| o.name == candidate) && !v.letters.iter().any(|o| o.name == candidate) {
                    break candidate;
                }
            }
        } else {
            l.name.clone()
        };
        letters.push(Letter { name, symbol: l.symbol });
    }
    let mut word = u.words[0].clone();
    word.extend(v.words[0].iter().map(|id| LetterId(id.0 + offset)));
    Ok(Nanophrase::from_parts_unchecked(letters, vec![word]))
}
