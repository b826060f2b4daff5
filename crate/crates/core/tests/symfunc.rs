use std::collections::BTreeMap;

use bellsym::partition::{partitions_of, partitions_up_to, Partition};
use bellsym::symfunc::tables::tables;
use bellsym::symfunc::{hall_inner, q, Basis, SymFunc};
use bellsym::Rational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn element(basis: Basis, terms: &[(usize, i64, i64)], cap: usize) -> SymFunc {
    let shapes = partitions_up_to(cap);
    let terms = terms
        .iter()
        .map(|&(i, n, d)| (shapes[i % shapes.len()].clone(), q(n, d)));
    SymFunc::from_terms(basis, cap, (), terms)
}

fn basis_strategy() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_round_trips(
        from in basis_strategy(),
        to in basis_strategy(),
        cap in 0usize..=6,
        terms in prop::collection::vec((0usize..200, -9i64..=9, 1i64..=4), 0..6),
    ) {
        let f = element(from, &terms, cap);
        let there = f.convert(to);
        prop_assert_eq!(there.basis(), to);
        prop_assert_eq!(there.convert(from), f);
    }

    #[test]
    fn schur_routes_agree(
        cap in 0usize..=6,
        terms in prop::collection::vec((0usize..200, -9i64..=9, 1i64..=4), 0..6),
    ) {
        let f = element(Basis::Homogeneous, &terms, cap);
        prop_assert_eq!(f.convert(Basis::Schur), f.schur_via_kostka());
    }
}

#[test]
fn monomial_and_homogeneous_are_dual() {
    for n in 0..=7 {
        let ps = partitions_of(n);
        for a in &ps {
            let m = SymFunc::m(a.parts());
            let s = SymFunc::s(a.parts());
            for b in &ps {
                let delta = if a == b { Rational::one() } else { Rational::zero() };
                assert_eq!(hall_inner(&m, &SymFunc::h(b.parts())), delta, "<m_{a:?}, h_{b:?}>");
                assert_eq!(hall_inner(&s, &SymFunc::s(b.parts())), delta, "<s_{a:?}, s_{b:?}>");
            }
        }
    }
}

#[test]
fn characters_reconstruct_powersum_to_monomial() {
    for n in 1..=7 {
        let t = tables(n);
        let (chi, k, l) = (t.characters(), t.kostka(), t.p_to_m());
        let size = t.partitions().len();
        for mu in 0..size {
            for nu in 0..size {
                let via_schur: i64 = (0..size).map(|lam| chi[lam][mu] * k[lam][nu]).sum();
                assert_eq!(via_schur, l[mu][nu], "n = {n}");
            }
        }
    }
}

#[test]
fn character_columns_are_orthogonal() {
    for n in 1..=7 {
        let t = tables(n);
        let chi = t.characters();
        let size = t.partitions().len();
        for a in 0..size {
            for b in 0..size {
                let dot: i64 = (0..size).map(|l| chi[l][a] * chi[l][b]).sum();
                let want = if a == b { t.z(a).clone() } else { Rational::zero() };
                assert_eq!(Rational::from_integer(dot.into()), want);
            }
        }
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, sign) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            let moved = (p.len() - pos) as i64;
            out.push((v, if moved % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

/// Coefficients of `h_mu` in `det(h_(lambda_i - i + j))`.
fn jacobi_trudi(lambda: &Partition) -> BTreeMap<Partition, i64> {
    let l = lambda.len();
    let mut out = BTreeMap::new();
    'perm: for (sigma, sign) in permutations(l) {
        let mut parts = Vec::new();
        for (i, &j) in sigma.iter().enumerate() {
            let k = lambda.parts()[i] as i64 - i as i64 + j as i64;
            if k < 0 {
                continue 'perm;
            }
            parts.push(k as usize);
        }
        *out.entry(Partition::from_unsorted(parts)).or_insert(0) += sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

#[test]
fn inverse_kostka_matches_jacobi_trudi() {
    for n in 0..=6 {
        let t = tables(n);
        let kinv = t.kostka_inverse();
        for (i, lambda) in t.partitions().iter().enumerate() {
            let jt = jacobi_trudi(lambda);
            for (j, mu) in t.partitions().iter().enumerate() {
                assert_eq!(kinv[i][j], jt.get(mu).copied().unwrap_or(0), "Kinv[{lambda:?}][{mu:?}]");
            }
        }
    }
}

#[test]
fn inverse_kostka_row_example() {
    let s = SymFunc::s(&[2, 1]).convert(Basis::Homogeneous);
    assert_eq!(s, SymFunc::parse_expansion("h_{2,1} - h_3", 3).unwrap());
}
