//! Finite groups given by multiplication tables, the small groups used as
//! sources of core keis.

use alloc::vec::Vec;

/// A finite group on `{0, …, n-1}` with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    BadTable,
    NoIdentity,
    NotAssociative { a: usize, b: usize, c: usize },
    NoInverse(usize),
}

impl FiniteGroup {
    /// Checks the table. Element `0` must be the identity.
    pub fn from_table(n: usize, mul: Vec<usize>) -> Result<Self, GroupError> {
        if n == 0 || mul.len() != n * n || mul.iter().any(|&x| x >= n) {
            return Err(GroupError::BadTable);
        }
        if (0..n).any(|x| mul[x] != x || mul[x * n] != x) {
            return Err(GroupError::NoIdentity);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            inv.push((0..n).find(|&b| mul[a * n + b] == 0).ok_or(GroupError::NoInverse(a))?);
        }
        Ok(FiniteGroup { n, mul, inv })
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mul = (0..n * n).map(|i| f(i / n, i % n)).collect();
        FiniteGroup::from_table(n, mul).expect("well-formed construction")
    }

    pub fn cyclic(n: usize) -> Self {
        FiniteGroup::from_fn(n, |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`: `r^i` is `i`, `s r^i` is `n + i`.
    pub fn dihedral(n: usize) -> Self {
        FiniteGroup::from_fn(2 * n, |a, b| {
            let (fa, ia) = (a >= n, a % n);
            let (fb, ib) = (b >= n, b % n);
            // (s^fa r^ia)(s^fb r^ib) = s^(fa+fb) r^(±ia + ib)
            let i = if fb { (n + ib - ia) % n } else { (ia + ib) % n };
            if fa != fb {
                n + i
            } else {
                i
            }
        })
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`, encoded as `sign * 4 + unit`.
    pub fn quaternion() -> Self {
        // unit products: 1, i, j, k with sign
        const T: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        FiniteGroup::from_fn(8, |a, b| {
            let (u, neg) = T[a % 4][b % 4];
            let sign = (a >= 4) ^ (b >= 4) ^ neg;
            u + if sign { 4 } else { 0 }
        })
    }

    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.n;
        FiniteGroup::from_fn(g.n * m, |a, b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `f` (a table of images) is a bijective homomorphism.
    pub fn is_automorphism(&self, f: &[usize]) -> bool {
        if f.len() != self.n || f.iter().any(|&x| x >= self.n) {
            return false;
        }
        let mut seen = alloc::vec![false; self.n];
        for &x in f {
            if core::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        (0..self.n).all(|a| (0..self.n).all(|b| f[self.mul(a, b)] == self.mul(f[a], f[b])))
    }

    /// The automorphism `g ↦ g⁻¹`, available for abelian groups.
    pub fn inversion(&self) -> Option<Vec<usize>> {
        self.is_abelian().then(|| self.inv.clone())
    }
}

/// Every group of order at most 8, up to isomorphism, with a short name.
pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    let z = FiniteGroup::cyclic;
    alloc::vec![
        ("Z1", z(1)),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z2xZ2", FiniteGroup::product(&z(2), &z(2))),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", FiniteGroup::dihedral(3)),
        ("Z7", z(7)),
        ("Z8", z(8)),
        ("Z4xZ2", FiniteGroup::product(&z(4), &z(2))),
        ("Z2xZ2xZ2", FiniteGroup::product(&FiniteGroup::product(&z(2), &z(2)), &z(2))),
        ("D4", FiniteGroup::dihedral(4)),
        ("Q8", FiniteGroup::quaternion()),
    ]
}
