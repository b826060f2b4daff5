//! Restriction series `R_lambda(z) = sum_n r_((n),lambda) z^n` and their residues.
//!
//! The main route is the polynomial `P_lambda(z) = (1 - z) R_lambda(z) =
//! sum_mu Kinv[lambda][mu] f_mu(z)`, from which `r_((n),lambda)` are partial
//! sums of coefficients and `A_lambda = P_lambda(1)`. The z-graded expansion
//! of `Omega(z Omega(X))` is kept as an independent check.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{partitions_of, Partition};
use crate::plethysm::{omega, omega_x, pleth, PlethysmContext};
use crate::series::{TruncPoly, UniPoly};
use crate::symfunc::tables::tables;
use crate::symfunc::{Basis, SymFunc};
use crate::vector::{f_poly, rho_direct};
use crate::Rational;

/// `P_lambda(z) = sum_(mu |- |lambda|) Kinv[lambda][mu] f_mu(z)`.
pub fn restriction_poly(lambda: &Partition) -> Result<UniPoly> {
    let t = tables(lambda.size());
    let row = &t.kostka_inverse()[t.index_of(lambda)];
    let mut acc = UniPoly::zero();
    for (mu, &k) in t.partitions().iter().zip(row) {
        if k != 0 {
            acc = acc.add(&f_poly(mu)?.scale(&Rational::from_integer(k.into())));
        }
    }
    Ok(acc)
}

fn integer(r: &Rational, what: impl Fn() -> String) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral {
            what: what(),
            value: r.to_string(),
        })
    }
}

/// `r_((n),lambda)` for `n = 0..=z_cap` as partial sums of the coefficients of `P`.
pub fn coeffs_from_poly(p: &UniPoly, z_cap: usize) -> Result<Vec<BigInt>> {
    let mut acc = Rational::zero();
    (0..=z_cap)
        .map(|n| {
            acc += p.coeff(n);
            integer(&acc, || format!("r_(({n}),lambda)"))
        })
        .collect()
}

/// `Omega(z Omega(X))` in the Schur basis, X-degree up to `x_cap` and z-degree up to `z_cap`.
pub fn littlewood_series(x_cap: usize, z_cap: usize) -> Result<SymFunc<TruncPoly>> {
    let g = SymFunc::z_power(&omega_x(x_cap), 1, z_cap);
    let w = omega(&g, PlethysmContext::with_z(x_cap, z_cap))?;
    Ok(w.convert(Basis::Schur))
}

/// Reads `r_((n),lambda)` for `n = 0..=z_cap` from a precomputed [`littlewood_series`].
pub fn read_littlewood(series: &SymFunc<TruncPoly>, lambda: &Partition, z_cap: usize) -> Result<Vec<BigInt>> {
    let c = series.coeff(lambda);
    (0..=z_cap)
        .map(|n| integer(&c.coeff(n), || format!("r_(({n}),({lambda}))")))
        .collect()
}

/// `r_((n),lambda)` for `n = 0..=z_cap` read from `<s_lambda, Omega(z Omega(X))>`.
///
/// The series is evaluated at X-degree `|lambda|` and again at `|lambda| + 1`;
/// the two windows must agree.
pub fn littlewood_coeffs(lambda: &Partition, z_cap: usize) -> Result<Vec<BigInt>> {
    let a = read_littlewood(&littlewood_series(lambda.size(), z_cap)?, lambda, z_cap)?;
    let b = read_littlewood(&littlewood_series(lambda.size() + 1, z_cap)?, lambda, z_cap)?;
    if a != b {
        return Err(Error::mismatch(
            format!("truncation window for ({lambda})"),
            format!("{a:?} vs {b:?}"),
        ));
    }
    Ok(a)
}

/// `r_((n),lambda) = <s_lambda, h_n(Omega(X))>`, one plethysm per `n`.
pub fn plethysm_coeff(lambda: &Partition, n: usize) -> Result<BigInt> {
    general_restriction(&Partition::row(n), lambda)
}

/// `r_(mu,lambda) = <s_lambda, s_mu(Omega(X))>` for small cases.
pub fn general_restriction(mu: &Partition, lambda: &Partition) -> Result<BigInt> {
    let o = omega_x(lambda.size());
    let v = pleth(&SymFunc::s(mu.parts()), &o)?;
    let c = v.pair_with(&SymFunc::s(lambda.parts()));
    integer(&c, || format!("r_(({mu}),({lambda}))"))
}

/// Restriction coefficients by the polynomial route, cross-checked against
/// the z-graded expansion for `n <= check_cap`.
pub fn restriction_coeffs(lambda: &Partition, z_cap: usize, check_cap: usize) -> Result<Vec<BigInt>> {
    let p = restriction_poly(lambda)?;
    let r = coeffs_from_poly(&p, z_cap)?;
    let k = check_cap.min(z_cap);
    if k > 0 || z_cap == 0 {
        let other = littlewood_coeffs(lambda, k)?;
        if other[..] != r[..=k] {
            return Err(Error::mismatch(
                format!("restriction coefficients of ({lambda})"),
                format!("polynomial route {:?}, plethysm route {other:?}", &r[..=k]),
            ));
        }
    }
    Ok(r)
}

/// `A_lambda = P_lambda(1) = sum_mu Kinv[lambda][mu] rho(mu)`, checked to be a natural number.
pub fn schur_residue(lambda: &Partition) -> Result<BigUint> {
    let t = tables(lambda.size());
    let row = &t.kostka_inverse()[t.index_of(lambda)];
    let mut acc = BigInt::zero();
    for (mu, &k) in t.partitions().iter().zip(row) {
        if k != 0 {
            acc += BigInt::from(k) * BigInt::from(rho_direct(mu)?);
        }
    }
    let via_poly = restriction_poly(lambda)?.eval(&Rational::one());
    if via_poly != Rational::from_integer(acc.clone()) {
        return Err(Error::mismatch(
            format!("A_({lambda})"),
            format!("rho route {acc}, polynomial at 1 gives {via_poly}"),
        ));
    }
    if acc.is_negative() {
        return Err(Error::Negative {
            what: format!("A_({lambda})"),
            value: acc.to_string(),
        });
    }
    Ok(acc.to_biguint().expect("nonnegative"))
}

/// Smallest `s` with `r_n = a` for every `n >= s` (given `r` covers past the degree of `P`).
pub fn stabilization_index(r: &[BigInt], a: &BigInt) -> usize {
    r.iter().rposition(|x| x != a).map_or(0, |i| i + 1)
}

/// Everything known about one `lambda`.
#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub lambda: Partition,
    pub poly: UniPoly,
    pub coeffs: Vec<BigInt>,
    pub residue: BigUint,
    pub stabilization: usize,
}

impl RestrictionReport {
    /// Builds the report with coefficients up to `z_cap` (raised to `|lambda| + 1` if smaller).
    pub fn new(lambda: &Partition, z_cap: usize) -> Result<Self> {
        let poly = restriction_poly(lambda)?;
        if !poly.is_integral() {
            return Err(Error::NonIntegral {
                what: format!("(1 - z) R_({lambda})(z)"),
                value: poly.to_string(),
            });
        }
        let cap = z_cap.max(lambda.size() + 1);
        let coeffs = coeffs_from_poly(&poly, cap)?;
        let residue = schur_residue(lambda)?;
        let stabilization = stabilization_index(&coeffs, &BigInt::from(residue.clone()));
        Ok(RestrictionReport {
            lambda: lambda.clone(),
            poly,
            coeffs,
            residue,
            stabilization,
        })
    }

    /// Reports for every `lambda |- n`, in reverse-lexicographic order.
    pub fn for_degree(n: usize, z_cap: usize, exec: Execution) -> Result<Vec<Self>> {
        exec.map(&partitions_of(n), |l| RestrictionReport::new(l, z_cap))
            .into_iter()
            .collect()
    }

    pub fn tsv_header() -> &'static str {
        "lambda\tP\tA\tstabilization"
    }

    /// `lambda`, comma-separated coefficients of `P`, `A_lambda`, stabilization index.
    pub fn tsv_row(&self) -> String {
        let coeffs: Vec<String> = self.poly.coeffs().iter().map(ToString::to_string).collect();
        format!(
            "{}\t{}\t{}\t{}",
            self.lambda,
            coeffs.join(","),
            self.residue,
            self.stabilization
        )
    }
}

/// Cesàro averages of `r_((k),lambda)` and their distance to `A_lambda`.
///
/// Once `n >= deg P`, `n (average_n - A) = -sum_j (j - 1) P_j` exactly, so the
/// error is `tail_constant / n`. For every `n >= 1` it is at most
/// `bound_constant / n` with `bound_constant = sum_j |j - 1| |P_j|`.
#[derive(Clone, Debug)]
pub struct TauberianReport {
    pub lambda: Partition,
    pub residue: BigUint,
    pub degree: usize,
    /// `(1/n) sum_(k=0)^n r_k` for `n = 1..=horizon`.
    pub averages: Vec<Rational>,
    /// `|sum_j (j - 1) P_j|`.
    pub tail_constant: Rational,
    /// `sum_j |j - 1| |P_j|`.
    pub bound_constant: Rational,
    /// `sum_j |P_j|`, which is not a bound in general.
    pub coefficient_sum: Rational,
    /// Largest `n` with `|average_n - A| > bound_constant / n`.
    pub bound_violation: Option<usize>,
    /// Largest `n` with `|average_n - A| > coefficient_sum / n`.
    pub coefficient_sum_violation: Option<usize>,
}

impl TauberianReport {
    pub fn error(&self, n: usize) -> Rational {
        (&self.averages[n - 1] - Rational::from_integer(BigInt::from(self.residue.clone()))).abs()
    }

    /// Whether `n |average_n - A|` equals the tail constant for every `deg P <= n <= horizon`.
    pub fn tail_is_exact(&self) -> bool {
        (self.degree.max(1)..=self.averages.len())
            .all(|n| self.error(n) * Rational::from_integer(n.into()) == self.tail_constant)
    }

    pub fn converges(&self) -> bool {
        self.bound_violation.is_none() && self.tail_is_exact()
    }
}

/// Cesàro averages up to `horizon` together with their exact error constants.
pub fn tauberian_check(lambda: &Partition, horizon: usize) -> Result<TauberianReport> {
    if horizon < lambda.size() + 1 {
        return Err(Error::InvalidArgument(format!(
            "horizon {horizon} is below |lambda| + 1 = {}",
            lambda.size() + 1
        )));
    }
    let p = restriction_poly(lambda)?;
    let r = coeffs_from_poly(&p, horizon)?;
    let residue = schur_residue(lambda)?;
    let a = Rational::from_integer(BigInt::from(residue.clone()));
    let shifted = |k: usize| Rational::from_integer(BigInt::from(k as i64 - 1));
    let moment: Rational = p.coeffs().iter().enumerate().map(|(k, c)| c * shifted(k)).sum();
    let bound_constant: Rational = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| (c * shifted(k)).abs())
        .sum();
    let coefficient_sum = p.abs_coeff_sum();

    let mut partial = r[0].clone();
    let mut averages = Vec::with_capacity(horizon);
    let mut bound_violation = None;
    let mut coefficient_sum_violation = None;
    for n in 1..=horizon {
        partial += &r[n];
        let nn = Rational::from_integer(n.into());
        let avg = Rational::from_integer(partial.clone()) / &nn;
        let err = (&avg - &a).abs() * &nn;
        if err > bound_constant {
            bound_violation = Some(n);
        }
        if err > coefficient_sum {
            coefficient_sum_violation = Some(n);
        }
        averages.push(avg);
    }
    Ok(TauberianReport {
        lambda: lambda.clone(),
        residue,
        degree: p.degree().unwrap_or(0),
        averages,
        tail_constant: moment.abs(),
        bound_constant,
        coefficient_sum,
        bound_violation,
        coefficient_sum_violation,
    })
}

/// Both sides of `Omega(z Omega_0(X)) = (1 - z) Omega(z Omega(X))` at the given caps.
pub fn factorization_sides(x_cap: usize, z_cap: usize) -> Result<(SymFunc<TruncPoly>, SymFunc<TruncPoly>)> {
    let ctx = PlethysmContext::with_z(x_cap, z_cap);
    let o = omega_x(x_cap);
    let o0 = &o - &SymFunc::constant(Rational::one());
    let lhs = omega(&SymFunc::z_power(&o0, 1, z_cap), ctx)?;
    let one_minus_z = TruncPoly::new(vec![Rational::one(), -Rational::one()], z_cap);
    let rhs = omega(&SymFunc::z_power(&o, 1, z_cap), ctx)?.scale_by(&one_minus_z);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[usize]) -> Partition {
        Partition::from(x)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(restriction_poly(&p(&[1])).unwrap(), UniPoly::from_integers([0, 1]));
        assert_eq!(restriction_poly(&p(&[2])).unwrap(), UniPoly::from_integers([0, 1, 1]));
        assert_eq!(restriction_poly(&Partition::empty()).unwrap(), UniPoly::from_integers([1]));
    }

    #[test]
    fn coefficient_streams() {
        assert_eq!(restriction_coeffs(&p(&[2]), 5, 4).unwrap(), ints(&[0, 1, 2, 2, 2, 2]));
        assert_eq!(restriction_coeffs(&p(&[1]), 3, 3).unwrap(), ints(&[0, 1, 1, 1]));
        assert_eq!(restriction_coeffs(&Partition::empty(), 3, 3).unwrap(), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn residues() {
        assert_eq!(schur_residue(&p(&[2, 2, 1])).unwrap(), 1u32.into());
        assert_eq!(schur_residue(&p(&[3, 2])).unwrap(), 4u32.into());
        assert_eq!(schur_residue(&p(&[1])).unwrap(), 1u32.into());
    }

    #[test]
    fn report_for_two() {
        let r = RestrictionReport::new(&p(&[2]), 20).unwrap();
        assert_eq!(r.residue, 2u32.into());
        assert_eq!(r.stabilization, 2);
        assert_eq!(r.tsv_row(), "2\t0,1,1\t2\t2");
        let e = RestrictionReport::new(&Partition::empty(), 5).unwrap();
        assert_eq!(e.residue, 1u32.into());
        assert_eq!(e.stabilization, 0);
    }

    #[test]
    fn cesaro_for_two() {
        let t = tauberian_check(&p(&[2]), 100).unwrap();
        assert!(t.converges());
        assert_eq!(t.error(100), crate::symfunc::q(1, 100));
        assert!(t.error(100) <= crate::symfunc::q(3, 100));
        let e = tauberian_check(&Partition::empty(), 10).unwrap();
        assert_eq!(e.error(10), crate::symfunc::q(1, 10));
    }

    #[test]
    fn coefficient_sum_is_not_a_bound_for_four() {
        let t = tauberian_check(&p(&[4]), 40).unwrap();
        assert!(t.converges());
        assert_eq!(t.tail_constant, crate::symfunc::q(7, 1));
        assert_eq!(t.coefficient_sum, crate::symfunc::q(5, 1));
        assert_eq!(t.coefficient_sum_violation, Some(40));
    }

    #[test]
    fn plethysm_route_single_values() {
        assert_eq!(plethysm_coeff(&p(&[2]), 3).unwrap(), BigInt::from(2));
        assert_eq!(general_restriction(&p(&[1]), &p(&[1])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn factorization_small() {
        let (l, r) = factorization_sides(3, 3).unwrap();
        assert_eq!(l, r);
    }
}
