use bellsym::bell::bell_tower;
use bellsym::exec::Execution;
use bellsym::partition::{partitions_of, partitions_up_to, Partition};
use bellsym::restriction::{
    coeffs_from_poly, factorization_sides, general_restriction, littlewood_coeffs, plethysm_coeff,
    restriction_poly, schur_residue, tauberian_check, RestrictionReport,
};
use bellsym::symfunc::q;
use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

#[test]
fn residues_are_bell_schur_coefficients() {
    let t = bell_tower(1, 5);
    for n in 0..=5 {
        let coeffs: std::collections::HashMap<Partition, BigUint> =
            t.schur_coefficients(n).unwrap().into_iter().collect();
        for lambda in partitions_of(n) {
            let want = coeffs.get(&lambda).cloned().unwrap_or_default();
            assert_eq!(schur_residue(&lambda).unwrap(), want, "{lambda:?}");
        }
    }
}

#[test]
fn stabilization_is_early_and_nonnegative() {
    for n in 0..=5 {
        for r in RestrictionReport::for_degree(n, 12, Execution::default()).unwrap() {
            assert!(r.stabilization <= n + 1, "{:?}", r.lambda);
            assert!(r.poly.degree().is_none_or(|d| d <= n));
            assert!(r.coeffs.iter().all(|c| !c.is_negative()));
            assert!(r.coeffs[n + 1..].iter().all(|c| *c == BigInt::from(r.residue.clone())));
        }
    }
}

#[test]
fn littlewood_cross_check() {
    for lambda in partitions_up_to(4) {
        let poly = coeffs_from_poly(&restriction_poly(&lambda).unwrap(), 6).unwrap();
        assert_eq!(littlewood_coeffs(&lambda, 6).unwrap(), poly, "{lambda:?}");
    }
}

#[test]
fn single_plethysms_agree_with_the_stream() {
    for lambda in partitions_up_to(3) {
        let poly = coeffs_from_poly(&restriction_poly(&lambda).unwrap(), 4).unwrap();
        for n in 0..=4 {
            assert_eq!(plethysm_coeff(&lambda, n).unwrap(), poly[n], "{lambda:?} n = {n}");
        }
    }
}

#[test]
fn general_coefficients_small_cases() {
    // degree-one parts of e_2(Omega) = (Omega^2 - p_2(Omega))/2 and h_2(Omega) are both h_1
    let a = general_restriction(&Partition::from(&[1, 1][..]), &Partition::row(1)).unwrap();
    let b = general_restriction(&Partition::row(2), &Partition::row(1)).unwrap();
    assert_eq!(a, BigInt::from(1));
    assert_eq!(b, plethysm_coeff(&Partition::row(1), 2).unwrap());
    assert_eq!(general_restriction(&Partition::from(&[1, 1][..]), &Partition::empty()).unwrap(), BigInt::from(0));
}

#[test]
fn factorization_identity() {
    let (lhs, rhs) = factorization_sides(5, 5).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn cesaro_examples() {
    let t = tauberian_check(&Partition::row(2), 100).unwrap();
    for n in 1..=100 {
        assert!(t.error(n) <= q(3, n as i64));
    }
    let t = tauberian_check(&Partition::from(&[2, 2, 1][..]), 200).unwrap();
    assert!(t.converges());
    assert_eq!(t.averages[199], q(198, 200));
    let e = tauberian_check(&Partition::empty(), 10).unwrap();
    assert_eq!(e.residue, BigUint::from(1u32));
}

#[test]
fn horizon_must_cover_the_shape() {
    assert!(tauberian_check(&Partition::row(3), 3).is_err());
}
