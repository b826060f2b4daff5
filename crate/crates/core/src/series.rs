//! Univariate polynomials and truncated power series over the rationals.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// A power series `sum_k c_k z^k` known exactly up to `z^cap`.
///
/// Doubles as the z-graded coefficient domain of symmetric functions and as
/// the univariate series produced by the `psi` specialization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    coeffs: Vec<Rational>,
    cap: usize,
}

impl TruncPoly {
    pub fn new(mut coeffs: Vec<Rational>, cap: usize) -> Self {
        coeffs.truncate(cap + 1);
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TruncPoly { coeffs, cap }
    }

    pub fn zero(cap: usize) -> Self {
        TruncPoly { coeffs: Vec::new(), cap }
    }

    pub fn constant(c: Rational, cap: usize) -> Self {
        Self::new(vec![c], cap)
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(Rational::one(), cap)
    }

    /// `c * z^k`.
    pub fn monomial(k: usize, c: Rational, cap: usize) -> Self {
        if k > cap {
            return Self::zero(cap);
        }
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v, cap)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        Self::new(self.coeffs.clone(), cap.min(self.cap))
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(v, cap)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            cap: self.cap,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect(), self.cap)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        if self.is_zero() || other.is_zero() {
            return Self::zero(cap);
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(cap + 1);
        let mut v = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                v[i + j] += a * b;
            }
        }
        Self::new(v, cap)
    }

    /// `z^k -> z^(n k)`: the action of the power sum `p_n` on a series in `z`.
    pub fn adams(&self, n: usize) -> Self {
        let mut v = vec![Rational::zero(); ((self.coeffs.len().max(1) - 1) * n + 1).min(self.cap + 1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * n <= self.cap {
                v[k * n] = c.clone();
            }
        }
        Self::new(v, self.cap)
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(inner.coeff(0).is_zero(), "composition needs an inner series without constant term");
        let cap = self.cap.min(inner.cap);
        let mut acc = Self::zero(cap);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone(), cap));
        }
        acc
    }

    /// `exp(self)` for a series without constant term, via `e_n = (1/n) sum_k k s_k e_(n-k)`.
    pub fn exp(&self) -> Self {
        assert!(self.coeff(0).is_zero(), "exp needs a series without constant term");
        let mut e = vec![Rational::one()];
        for n in 1..=self.cap {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let s = self.coeff(k);
                if !s.is_zero() {
                    acc += s * Rational::from_integer(k.into()) * &e[n - k];
                }
            }
            e.push(acc / Rational::from_integer(n.into()));
        }
        Self::new(e, self.cap)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn render(&self, var: &str) -> String {
        render_terms(&self.coeffs, var)
    }
}

impl fmt::Debug for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(z^{})", self.render("z"), self.cap + 1)
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

/// An exact polynomial with rational coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(it: I) -> Self {
        Self::new(it.into_iter().map(|c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn abs_coeff_sum(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn render(&self, var: &str) -> String {
        render_terms(&self.coeffs, var)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

fn render_terms(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let monomial = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        push_term(&mut out, c, &monomial);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Appends `c * name` using the `a + (3/2)b - c` convention.
pub(crate) fn push_term(out: &mut String, c: &Rational, name: &str) {
    let negative = c.is_negative();
    let mag = c.abs();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    if name.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(name);
    } else if mag.is_integer() {
        out.push_str(&format!("{mag}{name}"));
    } else {
        out.push_str(&format!("({mag}){name}"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn exp_of_t_is_factorial_series() {
        let t = TruncPoly::monomial(1, q(1, 1), 5);
        let e = t.exp();
        let expect = [q(1, 1), q(1, 1), q(1, 2), q(1, 6), q(1, 24), q(1, 120)];
        assert_eq!(e.coeffs(), &expect);
    }

    #[test]
    fn compose_exp_minus_one() {
        // exp(exp(t)-1): Bell numbers / n!
        let t = TruncPoly::monomial(1, q(1, 1), 6);
        let inner = t.exp().sub(&TruncPoly::one(6));
        let outer = t.exp();
        let e = outer.compose(&inner);
        let bell = [1, 1, 2, 5, 15, 52, 203];
        let fact = [1, 1, 2, 6, 24, 120, 720];
        for k in 0..=6 {
            assert_eq!(e.coeff(k), q(bell[k], fact[k]));
        }
    }

    #[test]
    fn adams_stretches_exponents() {
        let p = TruncPoly::new(vec![q(1, 1), q(2, 1), q(3, 1)], 5);
        let a = p.adams(2);
        assert_eq!(a.coeffs(), &[q(1, 1), q(0, 1), q(2, 1), q(0, 1), q(3, 1)]);
        assert_eq!(p.adams(3).coeffs(), &[q(1, 1), q(0, 1), q(0, 1), q(2, 1)]);
    }

    #[test]
    fn unipoly_render_and_eval() {
        let p = UniPoly::from_integers([0, 1, 1]);
        assert_eq!(p.to_string(), "z + z^2");
        assert_eq!(p.eval(&q(1, 1)), q(2, 1));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(UniPoly::from_integers([0, 0]).degree(), None);
        assert_eq!(UniPoly::from_integers([1, -2]).to_string(), "1 - 2z");
    }
}
