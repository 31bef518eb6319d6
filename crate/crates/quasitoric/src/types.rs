//! Arithmetic of exponent triples.
//!
//! A [`TypeTriple`] (p0, p1, p2) of positive integers governs the powers in a
//! relation F0·h0^p0 + F1·h1^p1 + F2·h2^p2 = 0.  [`TypeTriple::decompose`]
//! splits it into the canonical data (r, s01, s02, s12, t0, t1, t2) with
//!
//! ```text
//! pᵢ = r·sᵢⱼ·sᵢₖ·tᵢ,   d = lcm = r·s01·s02·s12·t0·t1·t2,   wᵢ = d/pᵢ = sⱼₖ·tⱼ·tₖ
//! ```
//!
//! where the sᵢⱼ are pairwise coprime, the tᵢ are pairwise coprime, and tᵢ is
//! coprime to sⱼₖ.  A type is *reduced* when every tᵢ = 1.

use std::fmt;

use num_integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeError {
    /// Type entries must be at least 1.
    ZeroEntry,
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeError::ZeroEntry => write!(f, "type entries must be positive"),
        }
    }
}

impl std::error::Error for TypeError {}

/// A triple of positive exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeTriple([u64; 3]);

impl TypeTriple {
    pub fn new(p: [u64; 3]) -> Result<TypeTriple, TypeError> {
        if p.iter().any(|&x| x == 0) {
            return Err(TypeError::ZeroEntry);
        }
        Ok(TypeTriple(p))
    }

    pub fn entries(&self) -> [u64; 3] {
        self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    /// Canonical decomposition; see the module docs for the identities.
    pub fn decompose(&self) -> TypeDecomposition {
        let [p0, p1, p2] = self.0;
        let r = p0.gcd(&p1).gcd(&p2);
        let (q0, q1, q2) = (p0 / r, p1 / r, p2 / r);
        let s01 = q0.gcd(&q1);
        let s02 = q0.gcd(&q2);
        let s12 = q1.gcd(&q2);
        let t = [q0 / (s01 * s02), q1 / (s01 * s12), q2 / (s02 * s12)];
        let d = wide(r) * wide(s01) * wide(s02) * wide(s12) * wide(t[0]) * wide(t[1]) * wide(t[2]);
        let d = narrow(d);
        let w = [d / p0, d / p1, d / p2];
        TypeDecomposition {
            p: *self,
            r,
            d,
            s01,
            s02,
            s12,
            t,
            w,
        }
    }

    /// The reduced type: qᵢ = g·gcd(pᵢ/g, pⱼ·pₖ/g²) with g = gcd(p0,p1,p2).
    /// Equivalently, divides each entry by its tᵢ.
    pub fn reduce(&self) -> TypeTriple {
        let [p0, p1, p2] = self.0;
        let g = p0.gcd(&p1).gcd(&p2);
        let q = |pi: u64, pj: u64, pk: u64| -> u64 {
            let other = wide(pj) * wide(pk) / (wide(g) * wide(g));
            g * narrow(wide(pi / g).gcd(&other))
        };
        TypeTriple([q(p0, p1, p2), q(p1, p0, p2), q(p2, p0, p1)])
    }

    /// True when the type equals its own reduction (all tᵢ = 1).
    pub fn is_reduced(&self) -> bool {
        self.decompose().t == [1, 1, 1]
    }

    /// Entries sorted ascending, together with the permutation used:
    /// sorted[k] = self[perm[k]].
    pub fn sorted(&self) -> (TypeTriple, [usize; 3]) {
        let mut idx = [0usize, 1, 2];
        idx.sort_by_key(|&i| self.0[i]);
        (
            TypeTriple([self.0[idx[0]], self.0[idx[1]], self.0[idx[2]]]),
            idx,
        )
    }

    /// Applies a coordinate permutation: result[k] = self[perm[k]].
    pub fn permuted(&self, perm: [usize; 3]) -> TypeTriple {
        TypeTriple([self.0[perm[0]], self.0[perm[1]], self.0[perm[2]]])
    }
}

fn wide(x: u64) -> u128 {
    x as u128
}

fn narrow(x: u128) -> u64 {
    u64::try_from(x).expect("type arithmetic exceeds 64 bits")
}

impl fmt::Display for TypeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for TypeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeTriple{self}")
    }
}

/// The canonical decomposition of a type triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeDecomposition {
    pub p: TypeTriple,
    /// gcd of the three entries.
    pub r: u64,
    /// lcm of the three entries.
    pub d: u64,
    pub s01: u64,
    pub s02: u64,
    pub s12: u64,
    pub t: [u64; 3],
    /// Weights wᵢ = d / pᵢ.
    pub w: [u64; 3],
}

impl TypeDecomposition {
    /// s for the pair {i, j}, i ≠ j.
    pub fn s(&self, i: usize, j: usize) -> u64 {
        match (i.min(j), i.max(j)) {
            (0, 1) => self.s01,
            (0, 2) => self.s02,
            (1, 2) => self.s12,
            _ => panic!("s(i, j) needs two distinct indices"),
        }
    }
}

/// Degree compatibility: for every pair, r·sᵢⱼ divides deg Fᵢ − deg Fⱼ.
pub fn degree_compatible(p: &TypeTriple, degrees: [u64; 3]) -> bool {
    let dec = p.decompose();
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    pairs.iter().all(|&(i, j)| {
        let step = (dec.r * dec.s(i, j)) as i128;
        (degrees[i] as i128 - degrees[j] as i128) % step == 0
    })
}
