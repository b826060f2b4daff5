//! Per-degree transition data between the classical bases.
//!
//! Everything here is keyed by the reverse-lexicographic list of partitions of
//! `n`. Tables are built on first use and shared through a process-wide memo
//! guarded by a read-write lock, so concurrent readers never block each other
//! once a degree is populated.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition};
use crate::Rational;

pub struct DegreeTables {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    z: Vec<Rational>,
    characters: OnceLock<Vec<Vec<i64>>>,
    kostka: OnceLock<Vec<Vec<i64>>>,
    kostka_inverse: OnceLock<Vec<Vec<i64>>>,
    p_to_m: OnceLock<Vec<Vec<i64>>>,
    m_in_p: OnceLock<Vec<Vec<Rational>>>,
    h_in_p: OnceLock<Vec<Vec<Rational>>>,
}

static CACHE: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();

/// Shared tables for degree `n`.
pub fn tables(n: usize) -> Arc<DegreeTables> {
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().expect("table cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let mut w = cache.write().expect("table cache poisoned");
    Arc::clone(w.entry(n).or_insert_with(|| Arc::new(DegreeTables::new(n))))
}

impl DegreeTables {
    fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let z = partitions
            .iter()
            .map(|p| Rational::from_integer(BigInt::from(p.z())))
            .collect();
        DegreeTables {
            n,
            partitions,
            index,
            z,
            characters: OnceLock::new(),
            kostka: OnceLock::new(),
            kostka_inverse: OnceLock::new(),
            p_to_m: OnceLock::new(),
            m_in_p: OnceLock::new(),
            h_in_p: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn z(&self, i: usize) -> &Rational {
        &self.z[i]
    }

    /// `chi[lambda][mu]`, the irreducible character indexed by `lambda` at cycle type `mu`.
    pub fn characters(&self) -> &[Vec<i64>] {
        self.characters.get_or_init(|| {
            let mut memo = HashMap::new();
            self.partitions
                .iter()
                .map(|l| {
                    self.partitions
                        .iter()
                        .map(|m| murnaghan_nakayama(l, m.parts(), &mut memo))
                        .collect()
                })
                .collect()
        })
    }

    /// `K[lambda][mu]`: semistandard tableaux of shape `lambda` and content `mu`.
    pub fn kostka(&self) -> &[Vec<i64>] {
        self.kostka.get_or_init(|| {
            let mut memo = HashMap::new();
            self.partitions
                .iter()
                .map(|l| {
                    self.partitions
                        .iter()
                        .map(|m| kostka_number(l, m.parts(), &mut memo))
                        .collect()
                })
                .collect()
        })
    }

    /// Inverse Kostka numbers indexed so that `s_lambda = sum_mu Kinv[lambda][mu] h_mu`.
    ///
    /// Since `h_mu = sum_lambda K[lambda][mu] s_lambda`, this is the transpose
    /// of the matrix inverse of `K`: `Kinv * K^T = I`. Obtained by
    /// unitriangular back substitution.
    pub fn kostka_inverse(&self) -> &[Vec<i64>] {
        self.kostka_inverse.get_or_init(|| {
            let k = self.kostka();
            let q: Vec<Vec<Rational>> = k
                .iter()
                .map(|row| row.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect();
            let inv = invert_triangular(&q, Triangle::Upper);
            let n = inv.len();
            (0..n)
                .map(|lambda| {
                    (0..n)
                        .map(|mu| {
                            let v = &inv[mu][lambda];
                            assert!(v.is_integer(), "inverse Kostka entry {v} is not integral");
                            i64::try_from(v.to_integer()).expect("inverse Kostka entry overflow")
                        })
                        .collect()
                })
                .collect()
        })
    }

    /// `L[mu][nu]`: coefficient of `m_nu` in `p_mu`.
    pub fn p_to_m(&self) -> &[Vec<i64>] {
        self.p_to_m.get_or_init(|| {
            self.partitions
                .iter()
                .map(|mu| self.partitions.iter().map(|nu| powersum_monomial(mu, nu)).collect())
                .collect()
        })
    }

    /// `M[lambda][mu]`: coefficient of `p_mu` in `m_lambda` (inverse of `p_to_m`).
    pub fn m_in_p(&self) -> &[Vec<Rational>] {
        self.m_in_p.get_or_init(|| {
            let l: Vec<Vec<Rational>> = self
                .p_to_m()
                .iter()
                .map(|row| row.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect();
            invert_triangular(&l, Triangle::Lower)
        })
    }

    /// `H[lambda][mu]`: coefficient of `p_mu` in `h_lambda`, from `h_n = sum_mu p_mu / z_mu`.
    pub fn h_in_p(&self) -> &[Vec<Rational>] {
        self.h_in_p.get_or_init(|| {
            self.partitions
                .iter()
                .map(|lambda| {
                    let mut row = vec![Rational::zero(); self.partitions.len()];
                    let mut acc: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), Rational::one())];
                    for &part in lambda.parts() {
                        let factor = partitions_of(part);
                        let mut next = Vec::with_capacity(acc.len() * factor.len());
                        for (parts, c) in &acc {
                            for mu in &factor {
                                let mut p = parts.clone();
                                p.extend_from_slice(mu.parts());
                                let zmu = Rational::from_integer(BigInt::from(mu.z()));
                                next.push((p, c / zmu));
                            }
                        }
                        acc = next;
                    }
                    for (parts, c) in acc {
                        let key = Partition::from_unsorted(parts);
                        row[self.index[&key]] += c;
                    }
                    row
                })
                .collect()
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Triangle {
    Upper,
    Lower,
}

/// Exact inverse of a triangular matrix with nonzero diagonal.
pub fn invert_triangular(a: &[Vec<Rational>], shape: Triangle) -> Vec<Vec<Rational>> {
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            let outside = match shape {
                Triangle::Upper => j < i,
                Triangle::Lower => j > i,
            };
            assert!(
                !outside || a[i][j].is_zero(),
                "matrix is not {shape:?} triangular at ({i},{j})"
            );
        }
        assert!(!a[i][i].is_zero(), "zero pivot at {i}");
    }
    let at = |i: usize, j: usize| match shape {
        Triangle::Upper => &a[i][j],
        Triangle::Lower => &a[n - 1 - i][n - 1 - j],
    };
    // Solve the upper-triangular case; the lower case is the same problem
    // after reversing both index orders.
    let mut inv = vec![vec![Rational::zero(); n]; n];
    for i in (0..n).rev() {
        inv[i][i] = Rational::one() / at(i, i);
        for j in (i + 1)..n {
            let mut s = Rational::zero();
            for k in (i + 1)..=j {
                let aik = at(i, k);
                if !aik.is_zero() {
                    s += aik * &inv[k][j];
                }
            }
            inv[i][j] = -s / at(i, i);
        }
    }
    match shape {
        Triangle::Upper => inv,
        Triangle::Lower => (0..n)
            .map(|i| (0..n).map(|j| inv[n - 1 - i][n - 1 - j].clone()).collect())
            .collect(),
    }
}

/// Murnaghan–Nakayama: strip rim hooks of length `mu[0]`, recursing on the rest.
pub fn murnaghan_nakayama(
    lambda: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), i64>,
) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    if lambda.size() != mu.iter().sum::<usize>() {
        return 0;
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let reduced = Partition::from_unsorted(
            next.iter().enumerate().map(|(j, &c)| c - (len - 1 - j)),
        );
        total += sign * murnaghan_nakayama(&reduced, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Kostka number by peeling a horizontal strip of size `mu.last()` from `lambda`.
pub fn kostka_number(
    lambda: &Partition,
    mu: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), i64>,
) -> i64 {
    let Some((&last, rest)) = mu.split_last() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    if lambda.size() != mu.iter().sum::<usize>() {
        return 0;
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let parts = lambda.parts();
    let mut total = 0;
    let mut nu = vec![0usize; parts.len()];
    strips(parts, 0, last, &mut nu, &mut |nu| {
        let inner = Partition::from_unsorted(nu.iter().copied());
        total += kostka_number(&inner, rest, memo);
    });
    memo.insert(key, total);
    total
}

// Enumerate nu with lambda/nu a horizontal strip of the given size:
// lambda[i+1] <= nu[i] <= lambda[i].
fn strips(lambda: &[usize], i: usize, remaining: usize, nu: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i == lambda.len() {
        if remaining == 0 {
            f(nu);
        }
        return;
    }
    let lo = lambda.get(i + 1).copied().unwrap_or(0);
    for v in lo..=lambda[i] {
        let removed = lambda[i] - v;
        if removed > remaining {
            continue;
        }
        nu[i] = v;
        strips(lambda, i + 1, remaining - removed, nu, f);
    }
}

/// Number of ways to drop the parts of `mu` into the ordered bins `nu` so that
/// the bins fill exactly; this is the coefficient of `m_nu` in `p_mu`.
pub fn powersum_monomial(mu: &Partition, nu: &Partition) -> i64 {
    if mu.size() != nu.size() {
        return 0;
    }
    let mut layer: HashMap<Vec<usize>, i64> = HashMap::new();
    layer.insert(nu.parts().to_vec(), 1);
    for &part in mu.parts() {
        let mut next: HashMap<Vec<usize>, i64> = HashMap::new();
        for (caps, count) in layer {
            for j in 0..caps.len() {
                if caps[j] >= part {
                    let mut c = caps.clone();
                    c[j] -= part;
                    *next.entry(c).or_insert(0) += count;
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter(|(caps, _)| caps.iter().all(|&c| c == 0))
        .map(|(_, v)| v)
        .sum()
}
