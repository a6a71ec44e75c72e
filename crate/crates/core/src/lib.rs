//! Nanowords and nanophrases over homotopy data: the rewrite engine, the
//! bracket polynomial over the α1 data, a Gauss-diagram codec, kei
//! colorings with their presentations, and bounded equivalence search.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bracket;
pub mod codec;
pub mod data;
pub mod kei;
pub mod laurent;
pub mod moves;
pub mod phrase;
pub mod presets;
pub mod random;
pub mod search;

pub use data::{DataError, HomotopyData, Symbol, Triple};
pub use moves::{apply, apply_with_inverse, enumerate_moves, Move, MoveError, MoveKind, MoveKinds, TripleKind};
pub use phrase::{Letter, LetterId, Nanophrase, RawPhrase, Slot, ValidationReport};
pub use bracket::{bracket, bracket_star, jones, writhe, BracketError};
pub use laurent::LaurentPoly;
pub use random::random_nanophrase;
pub use search::{equivalent, reduce, Equivalence, Reduction, SearchBudget};
