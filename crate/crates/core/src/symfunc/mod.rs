//! Graded symmetric functions with exact coefficients.
//!
//! A [`SymFunc`] is a sparse map from partitions to coefficients, tagged with
//! the basis it is written in and a degree cap. Powersums are the working
//! basis: products, plethysm and the Hall pairing are all diagonal or
//! multiplicative there, so every other basis is converted through it.
//!
//! Elements remember whether they are finitely supported (an exact element of
//! the polynomial subring) or a truncation of a series. For a finite element
//! the cap is only a window, so it never limits the result of an operation.

mod coeff;
mod json;
mod render;
pub mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use coeff::Coefficient;
pub use json::{SymFuncJson, TermJson};
pub use render::TermOrder;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::TruncPoly;
use crate::Rational;
use tables::tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Homogeneous,
    PowerSum,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::Monomial, Basis::Homogeneous, Basis::PowerSum, Basis::Schur];

    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Homogeneous => "homogeneous",
            Basis::PowerSum => "powersum",
            Basis::Schur => "schur",
        }
    }

    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Homogeneous => 'h',
            Basis::PowerSum => 'p',
            Basis::Schur => 's',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" | "m" => Ok(Basis::Monomial),
            "homogeneous" | "h" => Ok(Basis::Homogeneous),
            "powersum" | "p" => Ok(Basis::PowerSum),
            "schur" | "s" => Ok(Basis::Schur),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SymFunc<C: Coefficient = Rational> {
    basis: Basis,
    degree_cap: usize,
    ctx: C::Ctx,
    finite: bool,
    terms: BTreeMap<Partition, C>,
}

/// Equality compares basis and terms, and the cap unless both sides are
/// finitely supported (where the cap is only a window).
impl<C: Coefficient> PartialEq for SymFunc<C> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.terms == other.terms
            && ((self.finite && other.finite) || self.degree_cap == other.degree_cap)
    }
}

impl<C: Coefficient> SymFunc<C> {
    /// Zero element; counts as finitely supported.
    pub fn zero(basis: Basis, degree_cap: usize, ctx: C::Ctx) -> Self {
        SymFunc {
            basis,
            degree_cap,
            ctx,
            finite: true,
            terms: BTreeMap::new(),
        }
    }

    /// Zero element standing for a truncated series.
    pub fn zero_series(basis: Basis, degree_cap: usize, ctx: C::Ctx) -> Self {
        let mut z = Self::zero(basis, degree_cap, ctx);
        z.finite = false;
        z
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(
        basis: Basis,
        degree_cap: usize,
        ctx: C::Ctx,
        terms: I,
    ) -> Self {
        let mut f = Self::zero(basis, degree_cap, ctx);
        for (p, c) in terms {
            f.add_term(p, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn ctx(&self) -> C::Ctx {
        self.ctx
    }

    /// Whether this is an exact element of the finitely supported subring.
    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// Marks the element as a truncated series rather than an exact polynomial.
    pub fn into_series(mut self) -> Self {
        self.finite = false;
        self
    }

    /// Cap up to which the stored terms are exact; `None` when finitely supported.
    pub fn effective_cap(&self) -> Option<usize> {
        (!self.finite).then_some(self.degree_cap)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, p: &Partition) -> C {
        self.terms.get(p).cloned().unwrap_or_else(|| C::zero_in(self.ctx))
    }

    /// Whether the constant (empty-partition) term vanishes.
    pub fn has_no_constant(&self) -> bool {
        !self.terms.contains_key(&Partition::empty())
    }

    /// Highest degree present.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Adds `c * b_p`; terms above the cap are dropped and mark the element truncated.
    pub fn add_term(&mut self, p: Partition, c: &C) {
        if c.vanishes() {
            return;
        }
        if p.size() > self.degree_cap {
            self.finite = false;
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().vanishes() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    /// Degree-`n` component.
    pub fn homogeneous(&self, n: usize) -> Self {
        let mut out = Self::zero(self.basis, self.degree_cap, self.ctx);
        for (p, c) in &self.terms {
            if p.size() == n {
                out.terms.insert(p.clone(), c.clone());
            }
        }
        out.finite = n <= self.degree_cap;
        out
    }

    /// Drops every term above `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        let mut out = Self::zero(self.basis, cap, self.ctx);
        out.finite = self.finite;
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c);
        }
        if cap < self.degree_cap && !self.finite {
            out.finite = false;
        }
        out
    }

    /// Re-windows a finitely supported element at a larger cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        if self.finite && cap >= self.degree_cap {
            let mut out = self.clone();
            out.degree_cap = cap;
            out
        } else {
            self.truncate(cap)
        }
    }

    pub fn map_coeffs<F: Fn(&C) -> C>(&self, f: F) -> Self {
        let mut out = Self::zero(self.basis, self.degree_cap, self.ctx);
        out.finite = self.finite;
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &f(c));
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn scale_by(&self, k: &C) -> Self {
        let mut out = self.map_coeffs(|c| c.mul_ref(k));
        out.ctx = C::merge_ctx(self.ctx, k.ctx());
        out
    }

    fn same_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.to_string(),
                right: other.basis.to_string(),
            });
        }
        Ok(())
    }

    fn merged_window(&self, other: &Self, finite_cap: usize) -> (usize, bool) {
        match (self.effective_cap(), other.effective_cap()) {
            (None, None) => (finite_cap, true),
            (Some(a), None) => (a, false),
            (None, Some(b)) => (b, false),
            (Some(a), Some(b)) => (a.min(b), false),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        let (cap, finite) = self.merged_window(other, self.degree_cap.max(other.degree_cap));
        let mut out = Self::zero(self.basis, cap, C::merge_ctx(self.ctx, other.ctx));
        for (p, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(p.clone(), c);
        }
        out.finite = finite;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    /// Product. Powersum and homogeneous products are computed directly on
    /// the multiplicative basis; the other bases go through powersums.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        match self.basis {
            Basis::PowerSum | Basis::Homogeneous => Ok(self.mul_multiplicative(other)),
            b => Ok(self.to_powersum().mul_multiplicative(&other.to_powersum()).convert(b)),
        }
    }

    fn mul_multiplicative(&self, other: &Self) -> Self {
        let (cap, finite) = self.merged_window(other, self.degree_cap + other.degree_cap);
        let ctx = C::merge_ctx(self.ctx, other.ctx);
        let mut acc: std::collections::HashMap<Partition, C> = std::collections::HashMap::new();
        let mut dropped = false;
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                if p.size() + q.size() > cap {
                    dropped = true;
                    continue;
                }
                let key = crate::partition::union([p, q]);
                let v = a.mul_ref(b);
                match acc.get_mut(&key) {
                    Some(e) => e.add_assign_ref(&v),
                    None => {
                        acc.insert(key, v);
                    }
                }
            }
        }
        let mut out = Self::zero(self.basis, cap, ctx);
        for (p, c) in acc {
            if !c.vanishes() {
                out.terms.insert(p, c);
            }
        }
        out.finite = finite && !dropped;
        out
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, k: usize) -> Result<Self> {
        let mut acc = self.one_like();
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// The unit in the same basis, window and coefficient domain.
    pub fn one_like(&self) -> Self {
        let mut out = Self::zero(self.basis, self.degree_cap, self.ctx);
        out.add_term(Partition::empty(), &C::from_rational(Rational::one(), self.ctx));
        out
    }

    /// Same element expressed in powersums.
    pub fn to_powersum(&self) -> Self {
        if self.basis == Basis::PowerSum {
            return self.clone();
        }
        let mut out = Self::zero(Basis::PowerSum, self.degree_cap, self.ctx);
        out.finite = self.finite;
        for (lambda, c) in &self.terms {
            let t = tables(lambda.size());
            let i = t.index_of(lambda);
            let row = expansion_row(&t, self.basis, i);
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    out.add_term(t.partitions()[j].clone(), &c.scale(e));
                }
            }
        }
        out
    }

    /// Re-expression in `target`, extracting each coefficient with the Hall
    /// pairing against the dual basis.
    pub fn convert(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let p = self.to_powersum();
        if target == Basis::PowerSum {
            return p;
        }
        let mut by_degree: BTreeMap<usize, Vec<(&Partition, &C)>> = BTreeMap::new();
        for (mu, c) in &p.terms {
            by_degree.entry(mu.size()).or_default().push((mu, c));
        }
        let mut out = Self::zero(target, self.degree_cap, self.ctx);
        out.finite = self.finite;
        for (n, entries) in by_degree {
            let t = tables(n);
            let idx: Vec<usize> = entries.iter().map(|(mu, _)| t.index_of(mu)).collect();
            for lambda_i in 0..t.partitions().len() {
                let row = dual_row(&t, target, lambda_i);
                let mut acc = C::zero_in(self.ctx);
                for ((_, c), &j) in entries.iter().zip(&idx) {
                    if !row[j].is_zero() {
                        acc.add_assign_ref(&c.scale(&row[j]));
                    }
                }
                out.add_term(t.partitions()[lambda_i].clone(), &acc);
            }
        }
        out
    }

    /// Hall inner product `sum_lambda a_lambda b_lambda z_lambda` in powersums.
    pub fn hall_inner(&self, other: &Self) -> C {
        let a = self.to_powersum();
        let b = other.to_powersum();
        let mut acc = C::zero_in(C::merge_ctx(self.ctx, other.ctx));
        for (p, x) in &a.terms {
            if let Some(y) = b.terms.get(p) {
                let zp = Rational::from_integer(BigInt::from(p.z()));
                acc.add_assign_ref(&x.mul_ref(y).scale(&zp));
            }
        }
        acc
    }

    /// Pairing with a rational symmetric function.
    pub fn pair_with(&self, other: &SymFunc<Rational>) -> C {
        let a = self.to_powersum();
        let b = other.to_powersum();
        let mut acc = C::zero_in(self.ctx);
        for (p, x) in &a.terms {
            if let Some(y) = b.terms.get(p) {
                let zp = Rational::from_integer(BigInt::from(p.z()));
                acc.add_assign_ref(&x.scale(&(y * zp)));
            }
        }
        acc
    }

    pub fn render(&self, order: TermOrder) -> String {
        render::render(self, order)
    }

    /// The image under `p_n`: `c p_mu -> adams_n(c) p_{n mu}`. Powersum basis only.
    pub fn adams(&self, n: usize) -> Self {
        assert_eq!(self.basis, Basis::PowerSum, "adams operation needs powersums");
        let mut out = Self::zero(Basis::PowerSum, self.degree_cap * n, self.ctx);
        for (p, c) in &self.terms {
            out.add_term(p.scale(n), &c.adams(n));
        }
        out.finite = self.finite;
        out
    }

    /// Drops coefficient pieces above grade `cap`.
    pub fn restrict_grade(&self, cap: usize) -> Self {
        let mut out = Self::zero(self.basis, self.degree_cap, C::ctx_with_grade_cap(self.ctx, cap));
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &c.truncate_grade(cap));
        }
        out.finite = self.finite;
        out
    }
}

/// Row of the expansion of `basis[i]` in powersums (degree given by the table).
fn expansion_row(t: &tables::DegreeTables, basis: Basis, i: usize) -> Vec<Rational> {
    let n = t.partitions().len();
    match basis {
        Basis::PowerSum => (0..n)
            .map(|j| if i == j { Rational::one() } else { Rational::zero() })
            .collect(),
        Basis::Monomial => t.m_in_p()[i].clone(),
        Basis::Homogeneous => t.h_in_p()[i].clone(),
        Basis::Schur => (0..n)
            .map(|j| Rational::from_integer(t.characters()[i][j].into()) / t.z(j))
            .collect(),
    }
}

/// Weights `w_j` with `[b_lambda] F = sum_j F_{p_j} w_j` for target basis `b`.
fn dual_row(t: &tables::DegreeTables, target: Basis, i: usize) -> Vec<Rational> {
    let n = t.partitions().len();
    match target {
        // coefficient of m_lambda is <F, h_lambda>
        Basis::Monomial => (0..n).map(|j| &t.h_in_p()[i][j] * t.z(j)).collect(),
        // coefficient of h_lambda is <F, m_lambda>
        Basis::Homogeneous => (0..n).map(|j| &t.m_in_p()[i][j] * t.z(j)).collect(),
        Basis::Schur => (0..n)
            .map(|j| Rational::from_integer(t.characters()[i][j].into()))
            .collect(),
        Basis::PowerSum => (0..n)
            .map(|j| if i == j { Rational::one() } else { Rational::zero() })
            .collect(),
    }
}

impl SymFunc<Rational> {
    /// A single basis element `b_lambda`, finitely supported with cap `|lambda|`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let cap = lambda.size();
        Self::from_terms(basis, cap, (), [(lambda, Rational::one())])
    }

    pub fn p(parts: &[usize]) -> Self {
        Self::basis_element(Basis::PowerSum, Partition::from(parts))
    }

    pub fn h(parts: &[usize]) -> Self {
        Self::basis_element(Basis::Homogeneous, Partition::from(parts))
    }

    pub fn m(parts: &[usize]) -> Self {
        Self::basis_element(Basis::Monomial, Partition::from(parts))
    }

    pub fn s(parts: &[usize]) -> Self {
        Self::basis_element(Basis::Schur, Partition::from(parts))
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_terms(Basis::PowerSum, 0, (), [(Partition::empty(), r)])
    }

    /// Schur coefficients through the Kostka matrix: `A_lambda = sum_mu K_{lambda,mu} [h_mu]F`.
    /// Independent of the character-table route used by [`SymFunc::convert`].
    pub fn schur_via_kostka(&self) -> Self {
        let h = self.convert(Basis::Homogeneous);
        let mut out = Self::zero(Basis::Schur, self.degree_cap, ());
        out.finite = self.finite;
        for (mu, c) in h.terms() {
            let t = tables(mu.size());
            let j = t.index_of(mu);
            for (i, lambda) in t.partitions().iter().enumerate() {
                let k = t.kostka()[i][j];
                if k != 0 {
                    out.add_term(lambda.clone(), &(c * Rational::from_integer(k.into())));
                }
            }
        }
        out
    }

    /// Parses the rendered form, e.g. `2s_{2,2} + (3/2)s_{3,1} - s_4`.
    pub fn parse_expansion(text: &str, degree_cap: usize) -> Result<Self> {
        render::parse(text, degree_cap)
    }

    /// The same element over the `z`-series coefficient domain with cap `z_cap`.
    pub fn lift(&self, z_cap: usize) -> SymFunc<TruncPoly> {
        let mut out = SymFunc::zero(self.basis, self.degree_cap, z_cap);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &TruncPoly::constant(c.clone(), z_cap));
        }
        out.finite = self.finite;
        out
    }
}

impl SymFunc<TruncPoly> {
    /// `z^k` times a rational symmetric function.
    pub fn z_power(f: &SymFunc<Rational>, k: usize, z_cap: usize) -> Self {
        f.lift(z_cap).scale_by(&TruncPoly::monomial(k, Rational::one(), z_cap))
    }

    /// Coefficient of `z^k`.
    pub fn z_slice(&self, k: usize) -> SymFunc<Rational> {
        let mut out = SymFunc::zero(self.basis, self.degree_cap, ());
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &c.coeff(k));
        }
        out.finite = self.finite;
        out
    }
}

impl<C: Coefficient> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TermOrder::Ascending))
    }
}

impl<C: Coefficient> Add for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn add(self, rhs: Self) -> SymFunc<C> {
        self.checked_add(rhs).expect("symmetric function addition")
    }
}

impl<C: Coefficient> Sub for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn sub(self, rhs: Self) -> SymFunc<C> {
        self.checked_sub(rhs).expect("symmetric function subtraction")
    }
}

impl<C: Coefficient> Mul for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn mul(self, rhs: Self) -> SymFunc<C> {
        self.checked_mul(rhs).expect("symmetric function product")
    }
}

impl<C: Coefficient> Neg for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn neg(self) -> SymFunc<C> {
        self.neg_ref()
    }
}

/// Hall inner product as a free function.
pub fn hall_inner<C: Coefficient>(f: &SymFunc<C>, g: &SymFunc<C>) -> C {
    f.hall_inner(g)
}

/// Kostka matrix of degree `n`, rows and columns in reverse-lexicographic order.
pub fn kostka_matrix(n: usize) -> Vec<Vec<i64>> {
    tables(n).kostka().to_vec()
}

pub fn inverse_kostka(n: usize) -> Vec<Vec<i64>> {
    tables(n).kostka_inverse().to_vec()
}

/// Convenience for building rationals in tests and tables.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_to_powersum() {
        assert_eq!(SymFunc::h(&[1]).to_powersum(), SymFunc::p(&[1]));
        let h2 = SymFunc::h(&[2]).to_powersum();
        assert_eq!(h2.coeff(&Partition::from(&[2][..])), q(1, 2));
        assert_eq!(h2.coeff(&Partition::from(&[1, 1][..])), q(1, 2));
    }

    #[test]
    fn s11_to_powersum() {
        let s = SymFunc::s(&[1, 1]).to_powersum();
        assert_eq!(s.coeff(&Partition::from(&[2][..])), q(-1, 2));
        assert_eq!(s.coeff(&Partition::from(&[1, 1][..])), q(1, 2));
    }

    #[test]
    fn hall_examples() {
        assert_eq!(SymFunc::p(&[1, 1]).hall_inner(&SymFunc::p(&[1, 1])), q(2, 1));
        assert_eq!(SymFunc::s(&[2]).hall_inner(&SymFunc::s(&[1, 1])), q(0, 1));
        assert_eq!(SymFunc::s(&[2, 1]).hall_inner(&SymFunc::s(&[2, 1])), q(1, 1));
    }

    #[test]
    fn p1_to_monomial() {
        assert_eq!(SymFunc::p(&[1]).convert(Basis::Monomial), SymFunc::m(&[1]));
    }

    #[test]
    fn basis_mismatch_is_an_error() {
        let e = SymFunc::p(&[1]).checked_add(&SymFunc::h(&[1]));
        assert!(matches!(e, Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn finite_products_keep_all_terms() {
        let a = SymFunc::h(&[2]);
        let b = SymFunc::h(&[1]);
        let ab = &a * &b;
        assert!(ab.is_finite());
        assert_eq!(ab, SymFunc::h(&[2, 1]));
        let trunc = SymFunc::h(&[1]).with_cap(1).into_series();
        let c = &a * &trunc;
        assert!(c.is_zero());
        assert_eq!(c.degree_cap(), 1);
    }

    #[test]
    fn schur_products_route_through_powersums() {
        // s_1 * s_1 = s_2 + s_{1,1}
        let prod = &SymFunc::s(&[1]) * &SymFunc::s(&[1]);
        let expect = &SymFunc::s(&[2]) + &SymFunc::s(&[1, 1]);
        assert_eq!(prod, expect);
    }
}
