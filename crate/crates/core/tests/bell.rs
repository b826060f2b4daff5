use bellsym::bell::{
    bell_numbers, bell_table, bell_tower, beta_cleared_rhs, beta_recursion, egf_bell_numbers,
    h_function, h_function_monomial, rho_recursion, stirling2, Route,
};
use bellsym::partition::{factorial, partition_count, partitions_of, Partition};
use bellsym::plethysm::psi;
use bellsym::series::TruncPoly;
use bellsym::symfunc::{q, Basis};
use bellsym::Rational;
use num_bigint::{BigInt, BigUint};

#[test]
fn schur_positive_and_integral() {
    for m in 0..=3 {
        let t = bell_tower(m, 8);
        for n in 0..=8 {
            let coeffs = t.schur_coefficients(n).unwrap();
            assert!(!coeffs.is_empty(), "B_{n}^({m}) vanished");
        }
    }
}

#[test]
fn column_coefficients_are_bell_numbers() {
    for m in 0..=3 {
        let b = bell_numbers(m, 7);
        for n in 0..=7 {
            let col = Partition::column(n);
            assert_eq!(rho_recursion(m, &col).unwrap(), b[n], "rho^({m})(1^{n})");
            assert_eq!(beta_recursion(m, &col).unwrap(), b[n], "beta^({m})(1^{n})");
        }
    }
}

#[test]
fn single_row_counts_partitions() {
    for n in 0..=12 {
        assert_eq!(rho_recursion(1, &Partition::row(n)).unwrap(), partition_count(n));
    }
}

#[test]
fn cleared_denominators_match_the_tower() {
    for m in 0..=2 {
        let t = bell_tower(m + 1, 6);
        for n in 1..=6 {
            for (lambda, beta) in t.beta(n).unwrap() {
                let lhs = factorial(lambda.len()) * beta;
                assert_eq!(lhs, beta_cleared_rhs(m + 1, &lambda).unwrap(), "m = {}, {lambda:?}", m + 1);
            }
        }
    }
}

#[test]
fn psi_of_the_tower_is_the_egf_tower() {
    for m in 0..=4 {
        let t = bell_tower(m, 8);
        let mut series = vec![Rational::from_integer(0.into()); 9];
        for n in 0..=8 {
            series[n] = psi(t.get(n)).coeff(n);
        }
        let e = TruncPoly::monomial(1, q(1, 1), 8).exp();
        let mut tower = e.clone();
        for _ in 0..m {
            tower = tower.compose(&e.sub(&TruncPoly::one(8)));
        }
        assert_eq!(TruncPoly::new(series, 8), tower, "m = {m}");
    }
}

#[test]
fn stirling_and_egf_agree() {
    for m in 0..=4 {
        assert_eq!(bell_numbers(m, 12), egf_bell_numbers(m, 12));
    }
    let s = stirling2(5);
    assert_eq!(s[5][2], BigUint::from(15u32));
}

#[test]
fn h_function_routes_agree() {
    for n in 1..=12 {
        assert_eq!(h_function(n).convert(Basis::Monomial), h_function_monomial(n), "H_{n}");
    }
}

#[test]
fn routes_reject_unsupported_orders() {
    assert!(bell_table(Route::Convolution, 2, 3).is_err());
    for m in 0..=3 {
        for r in Route::ALL.into_iter().filter(|r| r.supports(m)) {
            assert_eq!(bell_table(r, m, 0).unwrap().get(0), &bellsym::symfunc::SymFunc::constant(q(1, 1)));
        }
    }
}

#[test]
fn bell_numbers_as_pairings() {
    let t = bell_tower(2, 6);
    let b: Vec<BigUint> = t.bell_numbers();
    let want: Vec<BigUint> = [1u32, 1, 3, 12, 60, 358, 2471].into_iter().map(BigUint::from).collect();
    assert_eq!(b, want);
    for (n, lambda) in partitions_of(4).into_iter().enumerate() {
        let z = Rational::from_integer(BigInt::from(lambda.z()));
        let c = t.get(4).coeff(&lambda) * z;
        assert!(c.is_integer(), "{n}: {lambda:?}");
    }
}
