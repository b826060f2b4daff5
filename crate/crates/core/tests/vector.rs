use bellsym::bell::{bell_numbers, rho_recursion};
use bellsym::partition::{partition_count, partitions_of, Partition};
use bellsym::vector::{count, enumerate, f_poly, rho_direct, IntVector, DEFAULT_NODE_BUDGET};
use bellsym::Rational;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn direct_count_matches_the_recursion() {
    for n in 0..=7 {
        for lambda in partitions_of(n) {
            assert_eq!(rho_direct(&lambda).unwrap(), rho_recursion(1, &lambda).unwrap(), "{lambda:?}");
        }
    }
}

#[test]
fn part_polynomials() {
    for n in 1..=6 {
        for mu in partitions_of(n) {
            let f = f_poly(&mu).unwrap();
            assert_eq!(f.degree(), Some(n), "{mu:?}");
            assert_eq!(f.coeff(n), Rational::one());
            assert!(f.coeff(0).is_zero());
            assert!(f.is_integral());
            assert!(f.coeffs().iter().all(|c| *c >= Rational::zero()));
            let at_one = f.eval(&Rational::one());
            assert_eq!(at_one, Rational::from_integer(rho_direct(&mu).unwrap().into()));
        }
    }
}

#[test]
fn extreme_shapes() {
    let b = bell_numbers(1, 10);
    for n in 0..=10 {
        assert_eq!(rho_direct(&Partition::column(n)).unwrap(), b[n]);
        assert_eq!(rho_direct(&Partition::row(n)).unwrap(), partition_count(n));
    }
}

#[test]
fn enumeration_is_canonical() {
    let target = IntVector::new(vec![2, 1, 1]);
    let all = enumerate(&target, DEFAULT_NODE_BUDGET).unwrap();
    assert_eq!(BigUint::from(all.len()), count(&target, DEFAULT_NODE_BUDGET).unwrap());
    for vp in &all {
        assert!(vp.parts.windows(2).all(|w| w[0] >= w[1]));
        let mut sum = vec![0; 3];
        for p in &vp.parts {
            assert!(!p.is_zero());
            for (s, x) in sum.iter_mut().zip(p.entries()) {
                *s += x;
            }
        }
        assert_eq!(IntVector::new(sum), target);
    }
}

proptest! {
    #[test]
    fn counts_are_invariant_under_coordinate_permutations(
        entries in prop::collection::vec(0usize..=2, 1..=4),
        perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let v = IntVector::new(entries.clone());
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < entries.len()).collect();
        let w = v.permuted(&perm);
        prop_assert_eq!(count(&v, DEFAULT_NODE_BUDGET).unwrap(), count(&w, DEFAULT_NODE_BUDGET).unwrap());
    }
}
