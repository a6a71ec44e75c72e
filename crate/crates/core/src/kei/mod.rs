//! Keis over a set with involution: finite tables, the axioms, cores of
//! groups, presentations of phrase keis and coloring counts.

mod gamma;
pub mod groups;
mod presentation;

pub use gamma::{gamma_group, GroupPresentation, GroupWord};
pub use presentation::{colorings, count_colorings, presentation, KeiPresentation, Relation};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use groups::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KeiError {
    /// Table sizes or entries out of range.
    BadTable(&'static str),
    /// `τ̄` is not an involution of the symbol set.
    BadInvolution,
    /// An action that is not a group automorphism.
    NotAutomorphism { symbol: String },
    /// `ā τ̄(ā) g ≠ g`.
    NotTauCompatible { symbol: String },
    /// Kei and presentation are over different symbol sets.
    SymbolMismatch,
    /// A letter of the phrase has a symbol outside the datum.
    ForeignSymbol { letter: String },
}

impl fmt::Display for KeiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeiError::BadTable(what) => write!(f, "malformed {what} table"),
            KeiError::BadInvolution => f.write_str("symbol involution is not an involution"),
            KeiError::NotAutomorphism { symbol } => write!(f, "action of `{symbol}` is not a group automorphism"),
            KeiError::NotTauCompatible { symbol } => {
                write!(f, "action of `{symbol}` composed with its involution partner is not the identity")
            }
            KeiError::SymbolMismatch => f.write_str("kei and presentation use different symbol sets"),
            KeiError::ForeignSymbol { letter } => write!(f, "letter `{letter}` has a symbol outside the datum"),
        }
    }
}

impl core::error::Error for KeiError {}

/// A kei on `{0, …, m-1}` over symbols `ᾱ` with involution `τ̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteKei {
    m: usize,
    symbols: Vec<String>,
    tau: Vec<usize>,
    act: Vec<Vec<usize>>,
    op: Vec<Vec<usize>>,
}

/// A failed axiom instance. `axiom` is 1–5 for (i)–(v); `witness` lists
/// the elements `x, y, z` used (as many as the axiom takes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: u8,
    pub symbol: usize,
    pub witness: Vec<usize>,
}

impl FiniteKei {
    /// Builds a kei from tables: `act[a][x] = āx`, `op[a][x*m + y] = x ∗_ā y`.
    /// Only shapes are checked here; see [`FiniteKei::validate`].
    pub fn new(
        m: usize,
        symbols: Vec<String>,
        tau: Vec<usize>,
        act: Vec<Vec<usize>>,
        op: Vec<Vec<usize>>,
    ) -> Result<Self, KeiError> {
        let q = symbols.len();
        if tau.len() != q || tau.iter().any(|&t| t >= q) {
            return Err(KeiError::BadInvolution);
        }
        if (0..q).any(|a| tau[tau[a]] != a) {
            return Err(KeiError::BadInvolution);
        }
        if act.len() != q || act.iter().any(|p| p.len() != m || p.iter().any(|&x| x >= m)) {
            return Err(KeiError::BadTable("action"));
        }
        for p in &act {
            let mut seen = alloc::vec![false; m];
            for &x in p {
                if core::mem::replace(&mut seen[x], true) {
                    return Err(KeiError::BadTable("action"));
                }
            }
        }
        if op.len() != q || op.iter().any(|t| t.len() != m * m || t.iter().any(|&x| x >= m)) {
            return Err(KeiError::BadTable("operation"));
        }
        Ok(FiniteKei { m, symbols, tau, act, op })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.act[a][x]
    }

    #[inline]
    pub fn op(&self, a: usize, x: usize, y: usize) -> usize {
        self.op[a][x * self.m + y]
    }

    pub fn act_table(&self, a: usize) -> &[usize] {
        &self.act[a]
    }

    pub fn op_table(&self, a: usize) -> &[usize] {
        &self.op[a]
    }

    /// Overwrites one operation entry; meant for building and mutating tables.
    pub fn set_op(&mut self, a: usize, x: usize, y: usize, v: usize) {
        let m = self.m;
        self.op[a][x * m + y] = v % m;
    }

    /// Every violated instance of axioms (i)–(v), in axiom order.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let mut out = Vec::new();
        let m = self.m;
        let mut push = |axiom, symbol, witness: &[usize]| {
            out.push(AxiomViolation { axiom, symbol, witness: witness.to_vec() })
        };
        for a in 0..self.symbols.len() {
            let t = self.tau[a];
            for x in 0..m {
                if self.op(a, self.act(a, x), x) != x {
                    push(1, a, &[x]);
                }
            }
            for x in 0..m {
                for y in 0..m {
                    if self.act(a, self.op(a, x, y)) != self.op(a, self.act(a, x), self.act(a, y)) {
                        push(2, a, &[x, y]);
                    }
                }
            }
            for x in 0..m {
                for y in 0..m {
                    for z in 0..m {
                        let lhs = self.op(a, self.op(a, x, y), z);
                        let rhs = self.op(a, self.op(a, x, self.act(a, z)), self.op(a, y, z));
                        if lhs != rhs {
                            push(3, a, &[x, y, z]);
                        }
                    }
                }
            }
            for x in 0..m {
                if self.act(a, self.act(t, x)) != x {
                    push(4, a, &[x]);
                }
            }
            for x in 0..m {
                for y in 0..m {
                    if self.op(t, self.op(a, x, y), self.act(a, y)) != x {
                        push(5, a, &[x, y]);
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The opposite kei: `āx := τ̄(ā)x`, `x ∗_ā y := x ∗_{τ̄(ā)} y`.
    pub fn opposite(&self) -> FiniteKei {
        FiniteKei {
            m: self.m,
            symbols: self.symbols.clone(),
            tau: self.tau.clone(),
            act: self.tau.iter().map(|&t| self.act[t].clone()).collect(),
            op: self.tau.iter().map(|&t| self.op[t].clone()).collect(),
        }
    }

    /// The same tables over renamed symbols (same count and involution).
    pub fn with_symbol_names(&self, names: Vec<String>) -> Result<FiniteKei, KeiError> {
        if names.len() != self.symbols.len() {
            return Err(KeiError::SymbolMismatch);
        }
        Ok(FiniteKei { symbols: names, ..self.clone() })
    }
}

/// Core of a group: `āg` from `action[a]`, `g ∗_ā h = h (τ̄(ā)g)⁻¹ h`.
pub fn core_of_group(
    group: &FiniteGroup,
    symbols: Vec<String>,
    tau: Vec<usize>,
    action: Vec<Vec<usize>>,
) -> Result<FiniteKei, KeiError> {
    let n = group.order();
    if action.len() != symbols.len() || tau.len() != symbols.len() {
        return Err(KeiError::BadTable("action"));
    }
    for (a, f) in action.iter().enumerate() {
        if !group.is_automorphism(f) {
            return Err(KeiError::NotAutomorphism { symbol: symbols[a].clone() });
        }
    }
    if tau.iter().any(|&t| t >= symbols.len()) {
        return Err(KeiError::BadInvolution);
    }
    for a in 0..symbols.len() {
        if (0..n).any(|g| action[a][action[tau[a]][g]] != g) {
            return Err(KeiError::NotTauCompatible { symbol: symbols[a].clone() });
        }
    }
    let op = (0..symbols.len())
        .map(|a| {
            let f = &action[tau[a]];
            (0..n * n)
                .map(|i| {
                    let (g, h) = (i / n, i % n);
                    group.mul(group.mul(h, group.inv(f[g])), h)
                })
                .collect()
        })
        .collect();
    FiniteKei::new(n, symbols, tau, action, op)
}

/// Core of `group` with every symbol acting trivially.
pub fn trivial_core(group: &FiniteGroup, symbols: Vec<String>, tau: Vec<usize>) -> Result<FiniteKei, KeiError> {
    let id: Vec<usize> = (0..group.order()).collect();
    let action = alloc::vec![id; symbols.len()];
    core_of_group(group, symbols, tau, action)
}

/// Dihedral kei `x ∗ y = 2y - x mod n` with trivial actions.
pub fn dihedral_kei(n: usize, symbols: Vec<String>, tau: Vec<usize>) -> Result<FiniteKei, KeiError> {
    trivial_core(&FiniteGroup::cyclic(n), symbols, tau)
}

pub const FIXTURE_NAMES: [&str; 3] = ["dihedral3", "dihedral5", "trivial1"];

/// Named test keis, instantiated over the given quotient symbols.
pub fn fixture(name: &str, symbols: Vec<String>, tau: Vec<usize>) -> Option<FiniteKei> {
    match name {
        "dihedral3" => dihedral_kei(3, symbols, tau).ok(),
        "dihedral5" => dihedral_kei(5, symbols, tau).ok(),
        "trivial1" => dihedral_kei(1, symbols, tau).ok(),
        _ => None,
    }
}
