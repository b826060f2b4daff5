use std::collections::HashSet;

use bellsym::partition::{
    multiset_splits, part_multinomial, partition_count, partitions_of, z_of, Partition,
};
use num_bigint::BigUint;
use num_traits::{One, Zero};

fn naive_partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for k in 1..=n.min(max) {
        prefix.push(k);
        naive_partitions(n - k, k, prefix, out);
        prefix.pop();
    }
}

#[test]
fn counts_match_a_naive_generator() {
    for n in 0..=30 {
        let mut naive = Vec::new();
        naive_partitions(n, n, &mut Vec::new(), &mut naive);
        let fast = partitions_of(n);
        assert_eq!(fast.len(), naive.len(), "n = {n}");
        assert_eq!(BigUint::from(fast.len()), partition_count(n));
        let a: HashSet<Vec<usize>> = fast.iter().map(|p| p.parts().to_vec()).collect();
        let b: HashSet<Vec<usize>> = naive.into_iter().collect();
        assert_eq!(a, b);
    }
}

#[test]
fn reverse_lexicographic_order() {
    for n in 1..=12 {
        let ps = partitions_of(n);
        assert_eq!(ps[0], Partition::row(n));
        assert_eq!(ps[ps.len() - 1], Partition::column(n));
        for w in ps.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }
}

#[test]
fn z_scales_under_division() {
    for n in 1..=12 {
        for lambda in partitions_of(n) {
            let g = lambda.gcd().unwrap();
            for d in (1..=g).filter(|d| g % d == 0) {
                let small = lambda.divide(d).unwrap();
                let scale = BigUint::from(d).pow(lambda.len() as u32);
                assert_eq!(z_of(&small) * scale, z_of(&lambda), "{lambda:?} / {d}");
            }
        }
    }
}

#[test]
fn multinomial_matches_z_ratio() {
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            for k in 0..=lambda.len() {
                for split in multiset_splits(&lambda, k) {
                    let direct = part_multinomial(&lambda, &split.blocks).unwrap();
                    let denominator = split.blocks.iter().map(z_of).fold(BigUint::one(), |a, b| a * b);
                    assert_eq!(&direct * &denominator, z_of(&lambda), "{lambda:?} {:?}", split.blocks);
                }
            }
        }
    }
}

/// Ordered sequences of nonempty sub-multisets exhausting `counts`.
fn ordered_compositions(counts: &mut Vec<usize>) -> BigUint {
    if counts.iter().all(|&c| c == 0) {
        return BigUint::one();
    }
    let mut total = BigUint::zero();
    let limits = counts.clone();
    let mut take = vec![0; counts.len()];
    loop {
        let mut i = 0;
        while i < take.len() && take[i] == limits[i] {
            take[i] = 0;
            i += 1;
        }
        if i == take.len() {
            break;
        }
        take[i] += 1;
        for (c, t) in counts.iter_mut().zip(&take) {
            *c -= t;
        }
        total += ordered_compositions(counts);
        for (c, t) in counts.iter_mut().zip(&take) {
            *c += t;
        }
    }
    total
}

#[test]
fn ordered_counts_sum_to_set_compositions() {
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            let from_splits: BigUint = (0..=lambda.len())
                .flat_map(|k| multiset_splits(&lambda, k))
                .map(|s| s.ordered_count)
                .sum();
            let mut counts: Vec<usize> = lambda.multiplicities().iter().map(|&(_, c)| c).collect();
            assert_eq!(from_splits, ordered_compositions(&mut counts), "{lambda:?}");
        }
    }
}

#[test]
fn conjugation_reverses_dominance() {
    for n in 1..=8 {
        let ps = partitions_of(n);
        for a in &ps {
            assert_eq!(a.conjugate().conjugate(), *a);
            for b in &ps {
                assert_eq!(a.dominates(b), b.conjugate().dominates(&a.conjugate()));
            }
        }
    }
}
