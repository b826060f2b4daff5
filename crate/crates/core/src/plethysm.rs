//! Plethystic substitution, the plethystic exponential and the `psi` specialization.
//!
//! Everything is computed in powersums, where `F(G)` is the algebra morphism
//! sending `p_n` to `p_n(G)`, and `p_n` acts on a coefficient `z^k` by
//! `z^k -> z^(n k)`.
//!
//! Substitution into a truncated series is only defined when the result is
//! determined degree by degree: either `F` is finitely supported, or `G` has
//! no constant term. A constant term that is a pure multiple of `z` is also
//! accepted for truncated `F`, at the price of a smaller output window.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::TruncPoly;
use crate::symfunc::{Basis, Coefficient, SymFunc};
use crate::Rational;

/// Truncation window for [`omega`]: X-degree cap and z-degree cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlethysmContext {
    pub degree_cap: usize,
    pub z_cap: usize,
}

impl PlethysmContext {
    pub fn new(degree_cap: usize) -> Self {
        PlethysmContext { degree_cap, z_cap: 0 }
    }

    pub fn with_z(degree_cap: usize, z_cap: usize) -> Self {
        PlethysmContext { degree_cap, z_cap }
    }
}

enum ConstantKind {
    None,
    PureZ,
    Rational(Rational),
}

fn constant_kind<C: Coefficient>(g: &SymFunc<C>) -> ConstantKind {
    match g.terms().get(&Partition::empty()) {
        None => ConstantKind::None,
        Some(c) => {
            let r = c.rational_constant();
            if r.is_zero() {
                ConstantKind::PureZ
            } else {
                ConstantKind::Rational(r)
            }
        }
    }
}

/// `F(G)`, returned in powersums.
///
/// The output is exact up to its effective cap: the product window when both
/// inputs are finitely supported, and otherwise the smallest cap at which
/// every contribution is known.
pub fn pleth<C: Coefficient>(f: &SymFunc<Rational>, g: &SymFunc<C>) -> Result<SymFunc<C>> {
    let f = f.to_powersum();
    let g = g.to_powersum();
    let kind = constant_kind(&g);

    let window: Option<usize> = match f.effective_cap() {
        None => g.effective_cap(),
        Some(nf) => match kind {
            ConstantKind::Rational(r) => {
                return Err(Error::UndefinedPlethysm(format!(
                    "outer function is a truncated series and the inner one has constant term {r}"
                )))
            }
            ConstantKind::None => Some(nf.min(g.effective_cap().unwrap_or(usize::MAX))),
            ConstantKind::PureZ => {
                let zc = C::grade_cap(g.ctx());
                if nf < zc {
                    return Err(Error::UndefinedPlethysm(format!(
                        "outer cap {nf} is below the z-cap {zc} of the inner constant term"
                    )));
                }
                Some((nf - zc).min(g.effective_cap().unwrap_or(usize::MAX)))
            }
        },
    };

    let mut adams: HashMap<usize, SymFunc<C>> = HashMap::new();
    let mut powers: HashMap<(usize, usize), SymFunc<C>> = HashMap::new();
    let mut out: Option<SymFunc<C>> = None;

    for (mu, c) in f.terms() {
        let mut term = g.one_like();
        if let Some(cap) = window {
            term = term.truncate(cap).into_series();
        }
        for (k, j) in mu.multiplicities() {
            let key = (k, j);
            if let std::collections::hash_map::Entry::Vacant(e) = powers.entry(key) {
                let base = adams
                    .entry(k)
                    .or_insert_with(|| {
                        let a = g.adams(k);
                        if matches!(kind, ConstantKind::None) {
                            let low = a.terms().keys().map(Partition::size).min();
                            assert!(
                                low.is_none_or(|d| d >= k),
                                "p_{k} of a constant-free series has a term of degree below {k}"
                            );
                        }
                        match window {
                            Some(cap) => a.truncate(cap).into_series(),
                            None => a,
                        }
                    })
                    .clone();
                e.insert(base.pow(j)?);
            }
            term = term.checked_mul(&powers[&key])?;
        }
        let term = term.scale(c);
        out = Some(match out {
            None => term,
            Some(acc) => acc.checked_add(&term)?,
        });
    }

    Ok(match (out, window) {
        (Some(v), _) => v,
        (None, Some(cap)) => SymFunc::zero_series(Basis::PowerSum, cap, g.ctx()),
        (None, None) => SymFunc::zero(Basis::PowerSum, 0, g.ctx()),
    })
}

/// The plethystic exponential `exp(sum_n p_n(G) / n)`, truncated to `ctx`.
///
/// Computed degree by degree in the joint grading (X-degree plus z-degree)
/// with `E_d = (1/d) sum_k k S_k E_(d-k)`, where `S_k` is the joint-degree-k
/// part of the exponent.
pub fn omega<C: Coefficient>(g: &SymFunc<C>, ctx: PlethysmContext) -> Result<SymFunc<C>> {
    let mut g = g.to_powersum();
    if let ConstantKind::Rational(r) = constant_kind(&g) {
        return Err(Error::RationalConstant(r.to_string()));
    }
    let zc = ctx.z_cap.min(C::grade_cap(g.ctx()));
    g = g.restrict_grade(zc);
    let cap = ctx.degree_cap.min(g.effective_cap().unwrap_or(usize::MAX));
    let joint = cap + zc;
    let cctx = g.ctx();
    let zero = SymFunc::<C>::zero_series(Basis::PowerSum, cap, cctx);

    let mut s = vec![zero.clone(); joint + 1];
    for n in 1..=joint {
        let inv_n = Rational::new(One::one(), n.into());
        for (p, c) in g.adams(n).terms() {
            if p.size() > cap {
                continue;
            }
            for (grade, piece) in c.graded_parts() {
                let d = p.size() + grade;
                assert!(d >= n, "joint degree {d} of p_{n}(G) is below {n}");
                if d <= joint {
                    s[d].add_term(p.clone(), &piece.scale(&inv_n));
                }
            }
        }
    }

    let mut e: Vec<SymFunc<C>> = Vec::with_capacity(joint + 1);
    e.push(zero.one_like().into_series());
    for d in 1..=joint {
        let mut acc = zero.clone();
        for k in 1..=d {
            if s[k].is_zero() || e[d - k].is_zero() {
                continue;
            }
            let prod = s[k].checked_mul(&e[d - k])?;
            acc = acc.checked_add(&prod.scale(&Rational::from_integer(k.into())))?;
        }
        e.push(acc.scale(&Rational::new(One::one(), d.into())));
    }

    let mut total = zero;
    for piece in &e {
        total = total.checked_add(piece)?;
    }
    Ok(total)
}

/// `Omega(X)` itself, `sum_n h_n`, in powersums up to degree `cap`.
pub fn omega_x(cap: usize) -> SymFunc<Rational> {
    omega(&SymFunc::p(&[1]), PlethysmContext::new(cap)).expect("p_1 has no constant term")
}

/// The specialization `p_1 -> p_1`, `p_m -> 0` for `m > 1`, as a series in `p_1`.
pub fn psi(f: &SymFunc<Rational>) -> TruncPoly {
    let p = f.to_powersum();
    let cap = p.degree_cap();
    let coeffs = (0..=cap).map(|k| p.coeff(&Partition::column(k))).collect();
    TruncPoly::new(coeffs, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::q;

    fn part(parts: &[usize]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn adams_composition() {
        let r = pleth(&SymFunc::p(&[2]), &SymFunc::p(&[3])).unwrap();
        assert_eq!(r, SymFunc::p(&[6]));
    }

    #[test]
    fn substitution_at_x() {
        let r = pleth(&SymFunc::h(&[2]), &SymFunc::h(&[1])).unwrap();
        assert_eq!(r.convert(Basis::Homogeneous), SymFunc::h(&[2]));
    }

    #[test]
    fn h2_of_p1_plus_p2() {
        let g = &SymFunc::p(&[1]) + &SymFunc::p(&[2]);
        let r = pleth(&SymFunc::h(&[2]), &g).unwrap();
        let deg4 = r.homogeneous(4);
        assert_eq!(deg4.coeff(&part(&[4])), q(1, 2));
        assert_eq!(deg4.coeff(&part(&[2, 2])), q(1, 2));
        assert_eq!(deg4.len(), 2);
        assert_eq!(r.coeff(&part(&[2, 1])), q(1, 1));
    }

    #[test]
    fn rejects_double_infinite_case() {
        let f = omega_x(3);
        let g = &SymFunc::p(&[1]) + &SymFunc::constant(q(1, 1));
        assert!(matches!(pleth(&f, &g), Err(Error::UndefinedPlethysm(_))));
        assert!(pleth(&SymFunc::h(&[2]), &g).is_ok());
    }

    #[test]
    fn omega_of_x_is_sum_of_h() {
        let o = omega_x(3);
        let mut expect = SymFunc::constant(q(1, 1)).with_cap(3);
        for n in 1..=3 {
            expect = &expect + &SymFunc::h(&[n]).to_powersum();
        }
        assert_eq!(o.with_cap(3), expect.with_cap(3));
    }

    #[test]
    fn omega_rejects_rational_constant() {
        let g = &SymFunc::p(&[1]) + &SymFunc::constant(q(2, 1));
        assert!(matches!(
            omega(&g, PlethysmContext::new(2)),
            Err(Error::RationalConstant(_))
        ));
    }

    #[test]
    fn omega_of_reduced_omega_degree_three() {
        let o0 = &omega_x(3) - &SymFunc::constant(q(1, 1));
        let b = omega(&o0, PlethysmContext::new(3)).unwrap();
        let s3 = b.homogeneous(3).convert(Basis::Schur);
        assert_eq!(s3.to_string(), "s_{2,1} + 3s_3");
    }

    #[test]
    fn psi_examples() {
        assert!(psi(&SymFunc::p(&[2])).is_zero());
        let e = psi(&omega_x(4));
        let fact = [1, 1, 2, 6, 24];
        for (k, f) in fact.iter().enumerate() {
            assert_eq!(e.coeff(k), q(1, *f));
        }
    }

    #[test]
    fn omega_with_z_alphabet() {
        // Omega(X + z) = Omega(X) / (1 - z)
        let zc = 3;
        let g = &SymFunc::p(&[1]).lift(zc)
            + &SymFunc::z_power(&SymFunc::constant(q(1, 1)), 1, zc);
        let lhs = omega(&g, PlethysmContext::with_z(3, zc)).unwrap();
        let geometric = TruncPoly::new(vec![q(1, 1); zc + 1], zc);
        let rhs = omega_x(3).lift(zc).scale_by(&geometric);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncated_outer_with_pure_z_constant_shrinks_window() {
        let zc = 2;
        let g = &SymFunc::p(&[1]).lift(zc)
            + &SymFunc::z_power(&SymFunc::constant(q(1, 1)), 1, zc);
        let r = pleth(&omega_x(5), &g).unwrap();
        assert_eq!(r.effective_cap(), Some(3));
        let direct = omega(&g, PlethysmContext::with_z(3, zc)).unwrap();
        assert_eq!(r, direct);
    }
}
