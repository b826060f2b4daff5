//! Integer partitions and the multiset arithmetic built on them.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. It is
//! the key type of every sparse table in the crate, so it is a plain value type
//! with structural equality. The total order sorts by size first and then
//! lexicographically by parts, which groups the terms of a graded series by
//! degree.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validating constructor: parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the given entries and drops zeros. This is the weakly decreasing
    /// rearrangement of a finitely supported vector.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or the empty partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// Distinct part values (decreasing) paired with their multiplicities.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Size of the centralizer of a permutation with this cycle type:
    /// `prod_j m_j! * j^m_j`.
    pub fn z(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (j, m)| {
                acc * factorial(m) * BigUint::from(j).pow(m as u32)
            })
    }

    /// gcd of the parts; `None` for the empty partition.
    pub fn gcd(&self) -> Option<usize> {
        let mut it = self.0.iter().copied();
        let first = it.next()?;
        Some(it.fold(first, |g, p| g.gcd(&p)))
    }

    /// `mu / d`: every part divided by `d`.
    pub fn divide(&self, d: usize) -> Result<Partition> {
        let ok = match self.gcd() {
            Some(g) => d > 0 && g % d == 0,
            None => d == 1,
        };
        if !ok {
            return Err(Error::NotDivisible {
                partition: self.to_string(),
                d,
            });
        }
        Ok(Partition(self.0.iter().map(|p| p / d).collect()))
    }

    /// `n * mu`: every part multiplied by `n`.
    pub fn scale(&self, n: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * n).collect())
    }

    /// Dominance order: `self >= other` when every prefix sum is at least as large.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.largest());
        for i in 1..=self.largest() {
            out.push(self.0.iter().filter(|&&p| p >= i).count());
        }
        Partition(out)
    }

    /// Index suitable for basis names: `4` or `{3,1}`; `∅` for the empty partition.
    pub fn subscript(&self) -> String {
        match self.0.len() {
            0 => "∅".to_string(),
            1 => self.0[0].to_string(),
            _ => format!("{{{self}}}"),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Textual form `3,1,1`; the empty partition is the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::from_unsorted(parts.iter().copied())
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `z_lambda` as a free function.
pub fn z_of(lambda: &Partition) -> BigUint {
    lambda.z()
}

/// Multiset union of parts, re-sorted.
pub fn union<'a, I: IntoIterator<Item = &'a Partition>>(mus: I) -> Partition {
    Partition::from_unsorted(mus.into_iter().flat_map(|m| m.0.iter().copied()))
}

/// `prod_j m_j(lambda)! / (m_j(mu1)! ... m_j(mun)!)`.
pub fn part_multinomial(lambda: &Partition, mus: &[Partition]) -> Result<BigUint> {
    if union(mus) != *lambda {
        return Err(Error::InvalidSplit {
            target: lambda.to_string(),
            parts: mus
                .iter()
                .map(|m| format!("({m})"))
                .collect::<Vec<_>>()
                .join(" "),
        });
    }
    let mut num = BigUint::one();
    for (_, m) in lambda.multiplicities() {
        num *= factorial(m);
    }
    let mut den = BigUint::one();
    for mu in mus {
        for (_, m) in mu.multiplicities() {
            den *= factorial(m);
        }
    }
    Ok(num / den)
}

/// All partitions of `n` in reverse-lexicographic order: `(n), (n-1,1), ..., (1^n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rem: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            current.push(p);
            rec(rem - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Number of partitions of `n` by the standard parts-bounded recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut table = vec![BigUint::default(); n + 1];
    table[0] = BigUint::one();
    for part in 1..=n {
        for total in part..=n {
            let add = table[total - part].clone();
            table[total] += add;
        }
    }
    table[n].clone()
}

/// An unordered split `{mu1, ..., mun}` of a partition into nonempty
/// sub-multisets of its parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    /// Blocks in weakly decreasing order.
    pub blocks: Vec<Partition>,
    /// Number of distinct ordered sequences with this multiset of blocks.
    pub ordered_count: BigUint,
}

/// Every multiset of `n` nonempty partitions whose union is `lambda`.
pub fn multiset_splits(lambda: &Partition, n: usize) -> Vec<Split> {
    let mults = lambda.multiplicities();
    let values: Vec<usize> = mults.iter().map(|&(v, _)| v).collect();
    let remaining: Vec<usize> = mults.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    if n == 0 {
        if lambda.is_empty() {
            out.push(Split {
                blocks: Vec::new(),
                ordered_count: BigUint::one(),
            });
        }
        return out;
    }
    if n > lambda.len() {
        return out;
    }

    let mut chosen: Vec<Vec<usize>> = Vec::new();
    split_rec(&remaining, n, None, &mut chosen, &mut |blocks| {
        let parts: Vec<Partition> = blocks
            .iter()
            .map(|b| {
                Partition::from_unsorted(
                    b.iter()
                        .zip(&values)
                        .flat_map(|(&c, &v)| std::iter::repeat_n(v, c)),
                )
            })
            .collect();
        let mut count = factorial(parts.len());
        let mut i = 0;
        while i < blocks.len() {
            let mut j = i;
            while j < blocks.len() && blocks[j] == blocks[i] {
                j += 1;
            }
            count /= factorial(j - i);
            i = j;
        }
        let mut parts = parts;
        parts.sort_by(|a, b| b.cmp(a));
        out.push(Split {
            blocks: parts,
            ordered_count: count,
        });
    });
    out
}

// Blocks are multiplicity vectors chosen in lexicographically non-increasing
// order so that each multiset of blocks is produced once.
fn split_rec(
    remaining: &[usize],
    k: usize,
    prev: Option<&[usize]>,
    chosen: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if k == 1 {
        if remaining.iter().all(|&c| c == 0) {
            return;
        }
        if let Some(p) = prev {
            if remaining > p {
                return;
            }
        }
        chosen.push(remaining.to_vec());
        emit(chosen);
        chosen.pop();
        return;
    }
    let mut sub = vec![0usize; remaining.len()];
    loop {
        // odometer step
        let mut i = 0;
        loop {
            if i == sub.len() {
                return;
            }
            if sub[i] < remaining[i] {
                sub[i] += 1;
                break;
            }
            sub[i] = 0;
            i += 1;
        }
        if prev.is_some_and(|p| sub.as_slice() > p) {
            continue;
        }
        let rest: Vec<usize> = remaining.iter().zip(&sub).map(|(r, s)| r - s).collect();
        if rest.iter().sum::<usize>() < k - 1 {
            continue;
        }
        chosen.push(sub.clone());
        let last = chosen.last().unwrap().clone();
        split_rec(&rest, k - 1, Some(&last), chosen, emit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_of(&Partition::empty()), BigUint::from(1u32));
        assert_eq!(z_of(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(z_of(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(z_of(&p(&[2, 2, 1])), BigUint::from(8u32));
    }

    #[test]
    fn union_examples() {
        assert_eq!(union(&[p(&[2, 1]), p(&[1])]), p(&[2, 1, 1]));
        assert_eq!(union(&[Partition::empty(), Partition::empty()]), Partition::empty());
        assert_eq!(union(&[p(&[3]), p(&[3])]), p(&[3, 3]));
    }

    #[test]
    fn multinomial_examples_and_rejection() {
        assert_eq!(part_multinomial(&p(&[2, 1]), &[p(&[2]), p(&[1])]).unwrap(), 1u32.into());
        assert_eq!(part_multinomial(&p(&[1, 1]), &[p(&[1]), p(&[1])]).unwrap(), 2u32.into());
        assert_eq!(part_multinomial(&p(&[3, 3]), &[p(&[3, 3])]).unwrap(), 1u32.into());
        assert!(matches!(
            part_multinomial(&p(&[2, 1]), &[p(&[2])]),
            Err(Error::InvalidSplit { .. })
        ));
    }

    #[test]
    fn divide_examples() {
        assert_eq!(p(&[4, 2]).divide(2).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[3]).divide(3).unwrap(), p(&[1]));
        assert_eq!(p(&[2, 2]).divide(1).unwrap(), p(&[2, 2]));
        assert!(p(&[4, 3]).divide(2).is_err());
        assert!(Partition::empty().divide(2).is_err());
        assert_eq!(Partition::empty().divide(1).unwrap(), Partition::empty());
        assert_eq!(Partition::empty().gcd(), None);
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn split_examples() {
        let s = multiset_splits(&p(&[1, 1]), 2);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].blocks, vec![p(&[1]), p(&[1])]);
        assert_eq!(s[0].ordered_count, 1u32.into());

        let s = multiset_splits(&p(&[2, 1]), 2);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].blocks, vec![p(&[2]), p(&[1])]);
        assert_eq!(s[0].ordered_count, 2u32.into());

        let s = multiset_splits(&p(&[3]), 1);
        assert_eq!(s, vec![Split { blocks: vec![p(&[3])], ordered_count: 1u32.into() }]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(p(&[4]).subscript(), "4");
        assert_eq!(p(&[3, 1]).subscript(), "{3,1}");
    }

    #[test]
    fn dominance_and_conjugate() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(!p(&[3, 3]).dominates(&p(&[4, 1, 1])));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }
}
