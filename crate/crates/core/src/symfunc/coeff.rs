use std::fmt;

use num_traits::Zero;

use crate::series::TruncPoly;
use crate::Rational;

/// Coefficient ring of a [`SymFunc`](super::SymFunc).
///
/// Two domains are provided: plain rationals, and rational series in an
/// auxiliary variable `z` truncated at a fixed degree. `Ctx` carries whatever
/// a zero element needs to know (the z-cap for series).
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Ctx: Copy + PartialEq + fmt::Debug + Send + Sync;

    fn zero_in(ctx: Self::Ctx) -> Self;
    fn from_rational(r: Rational, ctx: Self::Ctx) -> Self;
    fn ctx(&self) -> Self::Ctx;
    /// Context of a result combining two operands.
    fn merge_ctx(a: Self::Ctx, b: Self::Ctx) -> Self::Ctx;

    fn vanishes(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn negated(&self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;

    /// Action of `p_n` on the coefficient alphabet.
    fn adams(&self, n: usize) -> Self;
    /// Homogeneous pieces in the coefficient grading, as `(grade, piece)`.
    fn graded_parts(&self) -> Vec<(usize, Self)>;
    /// The grade-zero rational part.
    fn rational_constant(&self) -> Rational;
    /// Lowest grade with a nonzero piece.
    fn min_grade(&self) -> Option<usize>;
    /// Highest grade representable under `ctx` (zero for plain rationals).
    fn grade_cap(ctx: Self::Ctx) -> usize;
    /// Context with the grade cap lowered to at most `cap`.
    fn ctx_with_grade_cap(ctx: Self::Ctx, cap: usize) -> Self::Ctx;
    /// Drops every piece above `cap` and adopts the matching context.
    fn truncate_grade(&self, cap: usize) -> Self;
    fn render(&self) -> String;
    /// The coefficient as a plain rational, when it is one.
    fn as_rational(&self) -> Option<Rational>;
}

impl Coefficient for Rational {
    type Ctx = ();

    fn zero_in(_: ()) -> Self {
        Rational::zero()
    }
    fn from_rational(r: Rational, _: ()) -> Self {
        r
    }
    fn ctx(&self) {}
    fn merge_ctx(_: (), _: ()) {}

    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn adams(&self, _: usize) -> Self {
        self.clone()
    }
    fn graded_parts(&self) -> Vec<(usize, Self)> {
        if Zero::is_zero(self) {
            Vec::new()
        } else {
            vec![(0, self.clone())]
        }
    }
    fn rational_constant(&self) -> Rational {
        self.clone()
    }
    fn min_grade(&self) -> Option<usize> {
        (!Zero::is_zero(self)).then_some(0)
    }
    fn grade_cap(_: ()) -> usize {
        0
    }
    fn ctx_with_grade_cap(_: (), _: usize) {}
    fn truncate_grade(&self, _: usize) -> Self {
        self.clone()
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Coefficient for TruncPoly {
    type Ctx = usize;

    fn zero_in(cap: usize) -> Self {
        TruncPoly::zero(cap)
    }
    fn from_rational(r: Rational, cap: usize) -> Self {
        TruncPoly::constant(r, cap)
    }
    fn ctx(&self) -> usize {
        self.cap()
    }
    fn merge_ctx(a: usize, b: usize) -> usize {
        a.min(b)
    }

    fn vanishes(&self) -> bool {
        TruncPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add(other);
    }
    fn negated(&self) -> Self {
        TruncPoly::neg(self)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale(&self, r: &Rational) -> Self {
        TruncPoly::scale(self, r)
    }
    fn adams(&self, n: usize) -> Self {
        TruncPoly::adams(self, n)
    }
    fn graded_parts(&self) -> Vec<(usize, Self)> {
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(k, c)| (k, TruncPoly::monomial(k, c.clone(), self.cap())))
            .collect()
    }
    fn rational_constant(&self) -> Rational {
        self.coeff(0)
    }
    fn min_grade(&self) -> Option<usize> {
        self.coeffs().iter().position(|c| !Zero::is_zero(c))
    }
    fn grade_cap(cap: usize) -> usize {
        cap
    }
    fn ctx_with_grade_cap(ctx: usize, cap: usize) -> usize {
        ctx.min(cap)
    }
    fn truncate_grade(&self, cap: usize) -> Self {
        self.with_cap(cap)
    }
    fn render(&self) -> String {
        let s = self.render("z");
        let single = self.coeffs().iter().filter(|c| !Zero::is_zero(*c)).count() == 1;
        if single && !s.starts_with('-') {
            s
        } else {
            format!("({s})")
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        (self.coeffs().len() <= 1).then(|| self.coeff(0))
    }
}
