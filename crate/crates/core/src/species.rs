//! Brute-force hyper-partitions and their symmetric group actions.
//!
//! An order-0 hyper-partition of a label set `U` is `U` itself; an order
//! `m + 1` hyper-partition is a set partition of `U` into nonempty blocks,
//! each carrying an order-`m` hyper-partition of its labels. Objects are kept
//! canonical (labels ascending, blocks ordered by their smallest label), so
//! equality of canonical forms is equality of objects.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::bell::bell_numbers;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::Rational;

/// Default limit on the number of enumerated objects.
pub const DEFAULT_OBJECT_BUDGET: u64 = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HyperPartition {
    /// Order zero: the whole label set as one atom.
    Set(Vec<usize>),
    /// Positive order: blocks of the next order down.
    Blocks(Vec<HyperPartition>),
}

impl HyperPartition {
    pub fn order(&self) -> usize {
        match self {
            HyperPartition::Set(_) => 0,
            HyperPartition::Blocks(b) => match b.first() {
                Some(x) => x.order() + 1,
                None => 1,
            },
        }
    }

    /// Smallest label, `None` for an empty ground set.
    pub fn min_label(&self) -> Option<usize> {
        match self {
            HyperPartition::Set(s) => s.first().copied(),
            HyperPartition::Blocks(b) => b.first().and_then(HyperPartition::min_label),
        }
    }

    /// The ground set, ascending.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_labels(&self, out: &mut Vec<usize>) {
        match self {
            HyperPartition::Set(s) => out.extend_from_slice(s),
            HyperPartition::Blocks(b) => b.iter().for_each(|x| x.collect_labels(out)),
        }
    }

    /// `sigma . self` in canonical form; `perm[i - 1]` is the image of label `i`.
    pub fn relabel(&self, perm: &[usize]) -> HyperPartition {
        match self {
            HyperPartition::Set(s) => {
                let mut v: Vec<usize> = s.iter().map(|&l| perm[l - 1]).collect();
                v.sort_unstable();
                HyperPartition::Set(v)
            }
            HyperPartition::Blocks(b) => {
                let mut v: Vec<HyperPartition> = b.iter().map(|x| x.relabel(perm)).collect();
                v.sort_by_key(HyperPartition::min_label);
                HyperPartition::Blocks(v)
            }
        }
    }

    /// Parses the nested-brace form at a given order, e.g. `{{1,2},{3}}` at order 1.
    pub fn parse(text: &str, order: usize) -> Result<HyperPartition> {
        let compact: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let h = parse_at(&compact, &mut pos, order)?;
        if pos != compact.len() {
            return Err(Error::Parse(format!("trailing input in {text:?}")));
        }
        let labels = h.labels();
        if labels.windows(2).any(|w| w[0] == w[1]) || labels.contains(&0) {
            return Err(Error::Parse(format!("labels in {text:?} must be distinct positive integers")));
        }
        if !h.blocks_nonempty() {
            return Err(Error::Parse(format!("empty block in {text:?}")));
        }
        let identity: Vec<usize> = (1..=labels.last().copied().unwrap_or(0)).collect();
        Ok(h.relabel(&identity))
    }

    fn blocks_nonempty(&self) -> bool {
        match self {
            HyperPartition::Set(_) => true,
            HyperPartition::Blocks(b) => b.iter().all(|x| x.min_label().is_some() && x.blocks_nonempty()),
        }
    }
}

fn parse_at(s: &[char], pos: &mut usize, order: usize) -> Result<HyperPartition> {
    let expect = |pos: &mut usize, c: char| -> Result<()> {
        if s.get(*pos) == Some(&c) {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {c:?} at offset {pos}")))
        }
    };
    expect(pos, '{')?;
    if order == 0 {
        let mut labels = Vec::new();
        while s.get(*pos) != Some(&'}') {
            if !labels.is_empty() {
                expect(pos, ',')?;
            }
            let start = *pos;
            while s.get(*pos).is_some_and(char::is_ascii_digit) {
                *pos += 1;
            }
            let word: String = s[start..*pos].iter().collect();
            labels.push(word.parse().map_err(|_| Error::Parse(format!("bad label {word:?}")))?);
        }
        *pos += 1;
        labels.sort_unstable();
        Ok(HyperPartition::Set(labels))
    } else {
        let mut blocks = Vec::new();
        while s.get(*pos) != Some(&'}') {
            if !blocks.is_empty() {
                expect(pos, ',')?;
            }
            if *pos >= s.len() {
                return Err(Error::Parse("unterminated brace".into()));
            }
            blocks.push(parse_at(s, pos, order - 1)?);
        }
        *pos += 1;
        Ok(HyperPartition::Blocks(blocks))
    }
}

impl fmt::Display for HyperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        match self {
            HyperPartition::Set(s) => {
                for (i, l) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{l}")?;
                }
            }
            HyperPartition::Blocks(b) => {
                for (i, x) in b.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for HyperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A permutation of `{1, ..., n}`; `images[i - 1]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationAction {
    images: Vec<usize>,
}

impl PermutationAction {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(PermutationAction { images })
    }

    pub fn identity(n: usize) -> Self {
        PermutationAction {
            images: (1..=n).collect(),
        }
    }

    /// Consecutive cycles `(1 .. l1)(l1+1 .. l1+l2)...` of type `lambda`.
    pub fn of_type(lambda: &Partition) -> Self {
        let mut images = Vec::with_capacity(lambda.size());
        let mut start = 1;
        for &l in lambda.parts() {
            for i in 0..l {
                images.push(start + (i + 1) % l);
            }
            start += l;
        }
        PermutationAction { images }
    }

    /// A uniformly random conjugate of [`PermutationAction::of_type`].
    pub fn random_of_type<R: Rng + ?Sized>(lambda: &Partition, rng: &mut R) -> Self {
        let base = Self::of_type(lambda);
        let n = lambda.size();
        let mut tau: Vec<usize> = (1..=n).collect();
        tau.shuffle(rng);
        let mut images = vec![0; n];
        for i in 1..=n {
            images[tau[i - 1] - 1] = tau[base.images[i - 1] - 1];
        }
        PermutationAction { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x - 1];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }
}

/// `b_n^(m)` checked against `budget` before any enumeration starts.
pub fn check_budget(m: usize, n: usize, budget: u64) -> Result<()> {
    let needed = bell_numbers(m, n)[n].clone();
    if needed > BigUint::from(budget) {
        return Err(Error::budget(
            format!("order-{m} hyper-partitions of {n} labels"),
            needed,
            budget,
        ));
    }
    Ok(())
}

fn enumerate_on(m: usize, labels: &[usize]) -> Vec<HyperPartition> {
    if m == 0 {
        return vec![HyperPartition::Set(labels.to_vec())];
    }
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<HyperPartition>> = Vec::new();
    set_partitions(m, labels, &mut blocks, &mut out);
    out
}

// The first remaining label opens a new block; every subset of the others may
// join it. Blocks therefore come out ordered by smallest label.
fn set_partitions(
    m: usize,
    remaining: &[usize],
    chosen: &mut Vec<Vec<HyperPartition>>,
    out: &mut Vec<HyperPartition>,
) {
    let Some((&first, rest)) = remaining.split_first() else {
        let mut acc: Vec<Vec<HyperPartition>> = vec![Vec::new()];
        for options in chosen.iter() {
            let mut next = Vec::with_capacity(acc.len() * options.len());
            for prefix in &acc {
                for o in options {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(HyperPartition::Blocks));
        return;
    };
    for mask in (0u64..(1u64 << rest.len())).rev() {
        let mut block = vec![first];
        let mut others = Vec::with_capacity(rest.len());
        for (i, &l) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.push(l);
            } else {
                others.push(l);
            }
        }
        chosen.push(enumerate_on(m - 1, &block));
        set_partitions(m, &others, chosen, out);
        chosen.pop();
    }
}

/// All order-`m` hyper-partitions of `{1, ..., n}`, canonical and distinct.
pub fn enumerate_hyperpartitions(m: usize, n: usize, budget: u64) -> Result<Vec<HyperPartition>> {
    check_budget(m, n, budget)?;
    let labels: Vec<usize> = (1..=n).collect();
    Ok(enumerate_on(m, &labels))
}

/// An enumerated `pi_n^(m)` with an index for orbit computations.
pub struct HyperPartitionSet {
    pub order: usize,
    pub size: usize,
    objects: Vec<HyperPartition>,
    index: HashMap<HyperPartition, usize>,
}

impl HyperPartitionSet {
    pub fn new(m: usize, n: usize, budget: u64) -> Result<Self> {
        let objects = enumerate_hyperpartitions(m, n, budget)?;
        let index = objects.iter().enumerate().map(|(i, h)| (h.clone(), i)).collect();
        Ok(HyperPartitionSet {
            order: m,
            size: n,
            objects,
            index,
        })
    }

    pub fn objects(&self) -> &[HyperPartition] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Number of objects fixed by `sigma`.
    pub fn fixed_points(&self, sigma: &PermutationAction, exec: Execution) -> Result<u64> {
        if sigma.degree() != self.size {
            return Err(Error::InvalidArgument(format!(
                "permutation of {} labels acting on {} labels",
                sigma.degree(),
                self.size
            )));
        }
        let perm = sigma.images();
        Ok(exec.count(&self.objects, |h| &h.relabel(perm) == h) as u64)
    }

    /// Number of orbits of the Young subgroup `S_lambda`, by union-find over
    /// adjacent transpositions inside each factor.
    pub fn orbit_count(&self, lambda: &Partition, exec: Execution) -> Result<u64> {
        if lambda.size() != self.size {
            return Err(Error::InvalidArgument(format!(
                "Young subgroup of ({lambda}) acting on {} labels",
                self.size
            )));
        }
        let mut generators = Vec::new();
        let mut start = 1;
        for &l in lambda.parts() {
            for i in start..start + l - 1 {
                let mut perm: Vec<usize> = (1..=self.size).collect();
                perm.swap(i - 1, i);
                generators.push(perm);
            }
            start += l;
        }
        let mut uf = UnionFind::new(self.objects.len());
        for g in &generators {
            let images = exec.map(&self.objects, |h| self.index[&h.relabel(g)]);
            for (i, j) in images.into_iter().enumerate() {
                uf.union(i, j);
            }
        }
        Ok(uf.components() as u64)
    }

    /// `sum_(lambda |- n) fix(lambda) / z_lambda p_lambda`.
    pub fn frobenius(&self, exec: Execution) -> Result<SymFunc> {
        let mut terms = Vec::new();
        for lambda in partitions_of(self.size) {
            let fix = self.fixed_points(&PermutationAction::of_type(&lambda), exec)?;
            let z = BigInt::from(lambda.z());
            terms.push((lambda, Rational::new(fix.into(), z)));
        }
        Ok(SymFunc::from_terms(Basis::PowerSum, self.size, (), terms))
    }

    /// One line per object: index and nested-brace form.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("index\tobject\n");
        for (i, h) in self.objects.iter().enumerate() {
            out.push_str(&format!("{i}\t{h}\n"));
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Fixed points of `sigma` on `pi_n^(m)`.
pub fn fixed_points(m: usize, sigma: &PermutationAction, budget: u64) -> Result<u64> {
    HyperPartitionSet::new(m, sigma.degree(), budget)?.fixed_points(sigma, Execution::default())
}

/// Orbits of `S_lambda` on `pi_|lambda|^(m)`.
pub fn orbit_count(m: usize, lambda: &Partition, budget: u64) -> Result<u64> {
    HyperPartitionSet::new(m, lambda.size(), budget)?.orbit_count(lambda, Execution::default())
}

/// The Frobenius characteristic of the permutation action on `pi_n^(m)`.
pub fn frobenius_oracle(m: usize, n: usize, budget: u64) -> Result<SymFunc> {
    HyperPartitionSet::new(m, n, budget)?.frobenius(Execution::default())
}

/// Burnside: `sum_(lambda |- n) fix(lambda) / z_lambda`, the orbit count of `S_n`.
pub fn burnside_orbits(set: &HyperPartitionSet, exec: Execution) -> Result<Rational> {
    let f = set.frobenius(exec)?;
    Ok(f.terms().values().sum())
}
