//! Vector partitions: multisets of nonzero nonnegative integer vectors with a
//! prescribed sum, their count `rho`, and the part-counting polynomial `f_mu(z)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::UniPoly;
use crate::Rational;

/// Default limit on recursion nodes for one enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// A finitely supported vector of nonnegative integers, trailing zeros trimmed.
///
/// The derived ordering is lexicographic, which agrees with comparing the
/// zero-padded infinite sequences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(Vec<usize>);

impl IntVector {
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        IntVector(entries)
    }

    pub fn zero() -> Self {
        IntVector(Vec::new())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The weakly decreasing rearrangement with zeros removed.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().copied())
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(&self, other: &IntVector) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn permuted(&self, perm: &[usize]) -> IntVector {
        let mut v = vec![0; perm.len().max(self.0.len())];
        for (i, &x) in self.0.iter().enumerate() {
            v[perm[i]] = x;
        }
        IntVector::new(v)
    }
}

impl From<&Partition> for IntVector {
    fn from(p: &Partition) -> Self {
        IntVector::new(p.parts().to_vec())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A multiset of nonzero vectors summing to `target`; parts are stored in
/// decreasing lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPartition {
    pub target: IntVector,
    pub parts: Vec<IntVector>,
}

impl VectorPartition {
    /// Distinct parts with their multiplicities.
    pub fn multiplicities(&self) -> Vec<(&IntVector, usize)> {
        let mut out: Vec<(&IntVector, usize)> = Vec::new();
        for p in &self.parts {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for VectorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Nonzero `v` with `v <= remaining` componentwise and `v <= bound`
/// lexicographically, in decreasing lexicographic order.
fn candidates(remaining: &[usize], bound: Option<&[usize]>) -> Vec<Vec<usize>> {
    fn go(
        i: usize,
        remaining: &[usize],
        bound: Option<&[usize]>,
        tight: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == remaining.len() {
            if cur.iter().any(|&x| x > 0) {
                out.push(cur.clone());
            }
            return;
        }
        let limit = match (tight, bound) {
            (true, Some(b)) => remaining[i].min(b.get(i).copied().unwrap_or(0)),
            _ => remaining[i],
        };
        for x in (0..=limit).rev() {
            let still_tight = tight && bound.is_some_and(|b| b.get(i).copied().unwrap_or(0) == x);
            cur.push(x);
            go(i + 1, remaining, bound, still_tight, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, remaining, bound, bound.is_some(), &mut Vec::new(), &mut out);
    out
}

/// Depth-first walk over all vector partitions of `target`, calling `visit`
/// with the parts of each one (in decreasing lexicographic order).
fn walk<F: FnMut(&[Vec<usize>])>(target: &IntVector, budget: u64, mut visit: F) -> Result<u64> {
    struct State<'a, F> {
        nodes: u64,
        budget: u64,
        parts: Vec<Vec<usize>>,
        visit: &'a mut F,
    }
    fn rec<F: FnMut(&[Vec<usize>])>(st: &mut State<'_, F>, remaining: &mut Vec<usize>) -> Result<()> {
        st.nodes += 1;
        if st.nodes > st.budget {
            return Err(Error::budget("vector partition enumeration", format!("more than {} nodes", st.budget), st.budget));
        }
        if remaining.iter().all(|&x| x == 0) {
            (st.visit)(&st.parts);
            return Ok(());
        }
        let bound = st.parts.last().cloned();
        for v in candidates(remaining, bound.as_deref()) {
            for (r, x) in remaining.iter_mut().zip(&v) {
                *r -= x;
            }
            st.parts.push(v);
            rec(st, remaining)?;
            let v = st.parts.pop().expect("part pushed above");
            for (r, x) in remaining.iter_mut().zip(&v) {
                *r += x;
            }
        }
        Ok(())
    }
    let mut st = State {
        nodes: 0,
        budget,
        parts: Vec::new(),
        visit: &mut visit,
    };
    let mut remaining = target.entries().to_vec();
    rec(&mut st, &mut remaining)?;
    Ok(st.nodes)
}

/// All vector partitions of `target`, in decreasing lexicographic order of
/// their part lists.
pub fn enumerate(target: &IntVector, budget: u64) -> Result<Vec<VectorPartition>> {
    let mut out = Vec::new();
    walk(target, budget, |parts| {
        let parts: Vec<IntVector> = parts.iter().map(|p| IntVector::new(p.clone())).collect();
        debug_assert!(parts.iter().all(|p| p.fits_in(target)));
        out.push(VectorPartition {
            target: target.clone(),
            parts,
        });
    })?;
    Ok(out)
}

/// Number of vector partitions of `target`.
pub fn count(target: &IntVector, budget: u64) -> Result<BigUint> {
    let mut n = BigUint::zero();
    walk(target, budget, |_| n += 1u32)?;
    Ok(n)
}

/// `rho(lambda)`: vector partitions of `lambda` read as a vector.
pub fn rho_direct(lambda: &Partition) -> Result<BigUint> {
    count(&IntVector::from(lambda), DEFAULT_NODE_BUDGET)
}

/// `f_mu(z) = sum over vector partitions of mu of z^(number of parts)`.
pub fn f_poly(mu: &Partition) -> Result<UniPoly> {
    f_poly_with_budget(mu, DEFAULT_NODE_BUDGET)
}

pub fn f_poly_with_budget(mu: &Partition, budget: u64) -> Result<UniPoly> {
    let mut counts = vec![BigUint::zero(); mu.size() + 1];
    walk(&IntVector::from(mu), budget, |parts| counts[parts.len()] += BigUint::one())?;
    Ok(UniPoly::new(
        counts
            .into_iter()
            .map(|c| Rational::from_integer(c.into()))
            .collect(),
    ))
}
