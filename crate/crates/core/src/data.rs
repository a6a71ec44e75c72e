//! Homotopy data: a finite symbol set with an involution, the set of
//! triples licensing the third move, and an optional shift involution.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Index of a symbol inside its [`HomotopyData`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u16);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered triple of symbols, an element of `α × α × α`.
pub type Triple = [Symbol; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DataError {
    EmptySymbolName,
    DuplicateSymbol(String),
    UnknownSymbol(String),
    TooManySymbols(usize),
    /// `tau` table has the wrong length or points outside the symbol set.
    BadTable(&'static str),
    /// The named map is not an involution at this symbol.
    NotInvolution { map: &'static str, symbol: String },
}

impl fmt::Display for DataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataError::EmptySymbolName => write!(f, "symbol names must be non-empty"),
            DataError::DuplicateSymbol(s) => write!(f, "duplicate symbol `{s}`"),
            DataError::UnknownSymbol(s) => write!(f, "unknown symbol `{s}`"),
            DataError::TooManySymbols(n) => write!(f, "{n} symbols exceed the supported maximum"),
            DataError::BadTable(which) => write!(f, "malformed {which} table"),
            DataError::NotInvolution { map, symbol } => {
                write!(f, "{map} is not an involution at `{symbol}`")
            }
        }
    }
}

impl core::error::Error for DataError {}

/// A homotopy data `(α, τ, S)` together with an optional shift involution `ν`.
///
/// Immutable once built; all invariants are checked by [`HomotopyData::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyData {
    names: Vec<String>,
    tau: Vec<Symbol>,
    triples: BTreeSet<Triple>,
    shift: Option<Vec<Symbol>>,
}

impl HomotopyData {
    pub fn new(
        names: Vec<String>,
        tau: Vec<Symbol>,
        triples: BTreeSet<Triple>,
        shift: Option<Vec<Symbol>>,
    ) -> Result<Self, DataError> {
        if names.len() > u16::MAX as usize {
            return Err(DataError::TooManySymbols(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(DataError::EmptySymbolName);
            }
            if names[..i].contains(n) {
                return Err(DataError::DuplicateSymbol(n.clone()));
            }
        }
        let n = names.len();
        check_involution(&names, &tau, "tau")?;
        if let Some(nu) = &shift {
            check_involution(&names, nu, "shift")?;
        }
        if triples.iter().flatten().any(|s| s.index() >= n) {
            return Err(DataError::BadTable("triple"));
        }
        Ok(HomotopyData { names, tau, triples, shift })
    }

    /// Builds data from symbol names; `tau` and `shift` list unordered pairs
    /// (unlisted symbols are fixed points).
    pub fn from_names(
        names: &[&str],
        tau_pairs: &[(&str, &str)],
        triples: &[[&str; 3]],
        shift_pairs: Option<&[(&str, &str)]>,
    ) -> Result<Self, DataError> {
        let names: Vec<String> = names.iter().map(|s| String::from(*s)).collect();
        let lookup = |s: &str| -> Result<Symbol, DataError> {
            names
                .iter()
                .position(|n| n == s)
                .map(|i| Symbol(i as u16))
                .ok_or_else(|| DataError::UnknownSymbol(String::from(s)))
        };
        let pairs_to_map = |pairs: &[(&str, &str)], map: &'static str| -> Result<Vec<Symbol>, DataError> {
            let mut m: Vec<Symbol> = (0..names.len()).map(|i| Symbol(i as u16)).collect();
            for &(a, b) in pairs {
                let (a, b) = (lookup(a)?, lookup(b)?);
                let ok_a = m[a.index()] == a || m[a.index()] == b;
                let ok_b = m[b.index()] == b || m[b.index()] == a;
                if !ok_a || !ok_b {
                    return Err(DataError::NotInvolution { map, symbol: names[a.index()].clone() });
                }
                m[a.index()] = b;
                m[b.index()] = a;
            }
            Ok(m)
        };
        let tau = pairs_to_map(tau_pairs, "tau")?;
        let shift = match shift_pairs {
            Some(p) => Some(pairs_to_map(p, "shift")?),
            None => None,
        };
        let mut set = BTreeSet::new();
        for t in triples {
            set.insert([lookup(t[0])?, lookup(t[1])?, lookup(t[2])?]);
        }
        HomotopyData::new(names, tau, set, shift)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(|i| Symbol(i as u16))
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        self.names.iter().position(|n| n == name).map(|i| Symbol(i as u16))
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.index() < self.names.len()
    }

    #[inline]
    pub fn tau(&self, s: Symbol) -> Symbol {
        self.tau[s.index()]
    }

    /// The shift involution `ν`, if this data carries one.
    #[inline]
    pub fn nu(&self, s: Symbol) -> Option<Symbol> {
        self.shift.as_ref().map(|nu| nu[s.index()])
    }

    pub fn has_shift(&self) -> bool {
        self.shift.is_some()
    }

    pub fn shift_table(&self) -> Option<&[Symbol]> {
        self.shift.as_deref()
    }

    pub fn tau_table(&self) -> &[Symbol] {
        &self.tau
    }

    pub fn triples(&self) -> &BTreeSet<Triple> {
        &self.triples
    }

    #[inline]
    pub fn has_triple(&self, t: Triple) -> bool {
        self.triples.contains(&t)
    }

    /// `S ∩ (α × {a} × {a}) ≠ ∅` for every symbol `a`.
    pub fn is_admissible(&self) -> bool {
        self.symbols()
            .all(|a| self.triples.iter().any(|t| t[1] == a && t[2] == a))
    }

    /// Same symbols and involutions with a different triple set.
    pub fn with_triples(&self, triples: BTreeSet<Triple>) -> Result<Self, DataError> {
        HomotopyData::new(self.names.clone(), self.tau.clone(), triples, self.shift.clone())
    }
}

fn check_involution(names: &[String], map: &[Symbol], which: &'static str) -> Result<(), DataError> {
    if map.len() != names.len() || map.iter().any(|s| s.index() >= names.len()) {
        return Err(DataError::BadTable(which));
    }
    for (i, s) in map.iter().enumerate() {
        if map[s.index()].index() != i {
            return Err(DataError::NotInvolution { map: which, symbol: names[i].clone() });
        }
    }
    Ok(())
}
