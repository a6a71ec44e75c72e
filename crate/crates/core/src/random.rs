//! Seeded random nanophrases for property tests and benchmarks.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::data::{HomotopyData, Symbol};
use crate::phrase::{Letter, LetterId, Nanophrase};

/// A phrase with `n` letters in `k` words: the `2n` occurrences are
/// shuffled uniformly, split into `k` words by a uniform composition
/// (empty words allowed) and given uniform symbols. The result is in
/// canonical form and depends only on the arguments.
///
/// # Panics
/// If `k == 0` while `n > 0`, or if `data` has no symbols while `n > 0`.
pub fn random_nanophrase(data: &HomotopyData, n: usize, k: usize, seed: u64) -> Nanophrase {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_with(&mut rng, data, n, k)
}

pub fn random_with<R: Rng + ?Sized>(rng: &mut R, data: &HomotopyData, n: usize, k: usize) -> Nanophrase {
    assert!(k > 0 || n == 0, "a phrase with letters needs at least one word");
    assert!(!data.is_empty() || n == 0, "no symbols to choose from");
    let mut slots: Vec<LetterId> = (0..n as u32).flat_map(|i| [LetterId(i), LetterId(i)]).collect();
    slots.shuffle(rng);

    // stars and bars: k - 1 bars among 2n + k - 1 places
    let places = 2 * n + k.saturating_sub(1);
    let mut bars: Vec<usize> = index::sample(rng, places, k.saturating_sub(1)).into_vec();
    bars.sort_unstable();
    let mut words = vec![Vec::new(); k];
    let (mut r, mut next) = (0, 0);
    let mut bars = bars.into_iter().peekable();
    for p in 0..places {
        if bars.peek() == Some(&p) {
            bars.next();
            r += 1;
        } else {
            words[r].push(slots[next]);
            next += 1;
        }
    }

    let letters = (0..n)
        .map(|i| Letter {
            name: alloc::format!("X{}", i + 1),
            symbol: Symbol(rng.gen_range(0..data.len()) as u16),
        })
        .collect();
    Nanophrase::new(letters, words).expect("Gauss by construction").canonical_form()
}
