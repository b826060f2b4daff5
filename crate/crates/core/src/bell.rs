//! Higher order Bell symmetric functions `B_n^(m)` and Bell numbers `b_n^(m)`.
//!
//! `B_n^(m)` is the degree-`n` part of `Omega(Omega_0^(m)(X))`, where
//! `Omega_0^(0) = p_1` and `Omega_0^(k+1) = Omega(Omega_0^(k)) - 1`. Besides that
//! definition (the tower) there are four independent constructions:
//!
//! * the plethystic recursion `B_n^(m+1) = sum_(lambda |- n) prod_j h_(m_j(lambda))(B_j^(m))`;
//! * the monomial recursion for `rho^(m)(lambda)`, the coefficient of `m_lambda`;
//! * the powersum recursion for `beta^(m)(lambda)`, `z_lambda` times the coefficient of `p_lambda`;
//! * for `m = 1`, the convolution `B_(n+1) = sum_k (n-k+1)/(n+1) H_(n-k+1) B_k`.
//!
//! All values are kept in powersums, each `B_n` as a finitely supported
//! homogeneous element.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{factorial, multiset_splits, part_multinomial, partitions_of, Partition};
use crate::plethysm::{omega, pleth, PlethysmContext};
use crate::series::TruncPoly;
use crate::symfunc::{Basis, SymFunc};
use crate::vector::{self, IntVector};
use crate::Rational;

/// Construction used to build a [`BellTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Tower,
    PlethysticRecursion,
    MonomialRecursion,
    PowersumRecursion,
    Convolution,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Tower,
        Route::PlethysticRecursion,
        Route::MonomialRecursion,
        Route::PowersumRecursion,
        Route::Convolution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Tower => "tower",
            Route::PlethysticRecursion => "plethystic-recursion",
            Route::MonomialRecursion => "monomial-recursion",
            Route::PowersumRecursion => "powersum-recursion",
            Route::Convolution => "convolution",
        }
    }

    /// Whether the route is defined for order `m`.
    pub fn supports(self, m: usize) -> bool {
        self != Route::Convolution || m == 1
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown route {s:?}")))
    }
}

/// `B_0^(m), ..., B_N^(m)` built along one route.
#[derive(Clone, Debug)]
pub struct BellTable {
    pub order: usize,
    pub degree_cap: usize,
    pub route: Route,
    values: Vec<SymFunc>,
}

impl BellTable {
    fn new(order: usize, route: Route, values: Vec<SymFunc>) -> Self {
        let degree_cap = values.len() - 1;
        BellTable {
            order,
            degree_cap,
            route,
            values,
        }
    }

    /// `B_n` in powersums.
    pub fn get(&self, n: usize) -> &SymFunc {
        &self.values[n]
    }

    pub fn values(&self) -> &[SymFunc] {
        &self.values
    }

    pub fn in_basis(&self, n: usize, basis: Basis) -> SymFunc {
        self.values[n].convert(basis)
    }

    /// Schur coefficients `A_lambda` of `B_n`, checked to be nonnegative integers.
    pub fn schur_coefficients(&self, n: usize) -> Result<Vec<(Partition, BigUint)>> {
        let s = self.in_basis(n, Basis::Schur);
        natural_coefficients(&s, |_| Rational::one(), "Schur coefficient")
    }

    /// `rho^(m)(lambda)`, read off the monomial expansion of `B_n`.
    pub fn rho(&self, n: usize) -> Result<Vec<(Partition, BigUint)>> {
        let m = self.in_basis(n, Basis::Monomial);
        natural_coefficients(&m, |_| Rational::one(), "monomial coefficient")
    }

    /// `beta^(m)(lambda) = z_lambda [p_lambda] B_n`.
    pub fn beta(&self, n: usize) -> Result<Vec<(Partition, BigUint)>> {
        natural_coefficients(
            &self.values[n],
            |p| Rational::from_integer(BigInt::from(p.z())),
            "scaled powersum coefficient",
        )
    }

    /// `b_n^(m) = <B_n^(m), p_(1^n)>` for every `n` in the table.
    pub fn bell_numbers(&self) -> Vec<BigUint> {
        (0..=self.degree_cap)
            .map(|n| {
                let v = self.values[n].pair_with(&SymFunc::basis_element(Basis::PowerSum, Partition::column(n)));
                to_natural(&v, "Bell number").expect("pairing with p_(1^n) is a nonnegative integer")
            })
            .collect()
    }

    /// First degree where two tables differ.
    pub fn compare(&self, other: &BellTable) -> Result<()> {
        let cap = self.degree_cap.min(other.degree_cap);
        for n in 0..=cap {
            if self.values[n] != other.values[n] {
                return Err(Error::mismatch(
                    format!("B_{n}^({}) between {} and {}", self.order, self.route, other.route),
                    format!("{} vs {}", self.values[n], other.values[n]),
                ));
            }
        }
        Ok(())
    }
}

fn to_natural(r: &Rational, what: &str) -> Result<BigUint> {
    if !r.is_integer() {
        return Err(Error::NonIntegral {
            what: what.into(),
            value: r.to_string(),
        });
    }
    let i = r.to_integer();
    if i.is_negative() {
        return Err(Error::Negative {
            what: what.into(),
            value: i.to_string(),
        });
    }
    Ok(i.to_biguint().expect("nonnegative"))
}

fn natural_coefficients<F: Fn(&Partition) -> Rational>(
    f: &SymFunc,
    weight: F,
    what: &str,
) -> Result<Vec<(Partition, BigUint)>> {
    f.terms()
        .iter()
        .map(|(p, c)| Ok((p.clone(), to_natural(&(c * weight(p)), &format!("{what} at ({p})"))?)))
        .collect()
}

/// Builds the table for `route`; the convolution route needs `m = 1`.
pub fn bell_table(route: Route, m: usize, cap: usize) -> Result<BellTable> {
    match route {
        Route::Tower => Ok(bell_tower(m, cap)),
        Route::PlethysticRecursion => bell_plethystic_recursion(m, cap),
        Route::MonomialRecursion => bell_from_rho(m, cap),
        Route::PowersumRecursion => bell_from_beta(m, cap),
        Route::Convolution if m == 1 => bell_convolution(cap),
        Route::Convolution => Err(Error::InvalidArgument(format!(
            "the convolution route is defined for order 1, not {m}"
        ))),
    }
}

/// `Omega_0^(m)` truncated at degree `cap`.
pub fn reduced_tower(m: usize, cap: usize) -> SymFunc {
    let ctx = PlethysmContext::new(cap);
    let one = SymFunc::constant(Rational::one());
    let mut o = SymFunc::p(&[1]);
    for _ in 0..m {
        o = &omega(&o, ctx).expect("constant-free argument") - &one;
    }
    o
}

fn split_degrees(total: &SymFunc, cap: usize) -> Vec<SymFunc> {
    (0..=cap).map(|n| total.homogeneous(n).truncate(n)).collect()
}

/// The definition: degree pieces of `Omega(Omega_0^(m)(X))`.
pub fn bell_tower(m: usize, cap: usize) -> BellTable {
    let b = omega(&reduced_tower(m, cap), PlethysmContext::new(cap)).expect("constant-free argument");
    BellTable::new(m, Route::Tower, split_degrees(&b, cap))
}

/// `B_n^(m) = sum_(lambda |- n) prod_j h_(m_j(lambda))(B_j^(m-1))`, starting from `B_n^(0) = h_n`.
pub fn bell_plethystic_recursion(m: usize, cap: usize) -> Result<BellTable> {
    let mut level: Vec<SymFunc> = (0..=cap).map(|n| SymFunc::h(&[n]).to_powersum()).collect();
    level[0] = SymFunc::constant(Rational::one());
    for _ in 0..m {
        let mut memo: HashMap<(usize, usize), SymFunc> = HashMap::new();
        let mut next = Vec::with_capacity(cap + 1);
        for n in 0..=cap {
            let mut total = SymFunc::zero(Basis::PowerSum, n, ());
            for lambda in partitions_of(n) {
                let mut term = SymFunc::constant(Rational::one());
                for (j, k) in lambda.multiplicities() {
                    if let std::collections::hash_map::Entry::Vacant(e) = memo.entry((j, k)) {
                        e.insert(pleth(&SymFunc::h(&[k]), &level[j])?);
                    }
                    term = term.checked_mul(&memo[&(j, k)])?;
                }
                total = total.checked_add(&term)?;
            }
            next.push(total.truncate(n));
        }
        level = next;
    }
    Ok(BellTable::new(m, Route::PlethysticRecursion, level))
}

type Memo = Mutex<HashMap<(usize, Partition), BigUint>>;

fn memo_get(memo: &'static OnceLock<Memo>, key: &(usize, Partition)) -> Option<BigUint> {
    memo.get_or_init(Default::default)
        .lock()
        .expect("memo poisoned")
        .get(key)
        .cloned()
}

fn memo_put(memo: &'static OnceLock<Memo>, key: (usize, Partition), v: BigUint) {
    memo.get_or_init(Default::default)
        .lock()
        .expect("memo poisoned")
        .insert(key, v);
}

static RHO: OnceLock<Memo> = OnceLock::new();
static BETA: OnceLock<Memo> = OnceLock::new();

/// `C(k + r - 1, k)`: multisets of size `k` from `r` kinds.
fn multichoose(r: &BigUint, k: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=k {
        num *= r + BigUint::from(i) - BigUint::one();
        den *= BigUint::from(i);
    }
    num / den
}

/// `rho^(m)(lambda)`, the coefficient of `m_lambda` in `B^(m)`, by the monomial recursion
/// `rho^(m+1)(lambda) = sum_phi prod_alpha C(phi(alpha) + rho^(m)(alpha) - 1, phi(alpha))`.
///
/// The sum runs over vector partitions of `lambda` read as a vector, grouped
/// by multiplicity. Every part fits componentwise inside `lambda`, so the
/// index set is finite.
pub fn rho_recursion(m: usize, lambda: &Partition) -> Result<BigUint> {
    if m == 0 || lambda.is_empty() {
        return Ok(BigUint::one());
    }
    let key = (m, lambda.clone());
    if let Some(v) = memo_get(&RHO, &key) {
        return Ok(v);
    }
    let target = IntVector::from(lambda);
    let mut total = BigUint::zero();
    for vp in vector::enumerate(&target, vector::DEFAULT_NODE_BUDGET)? {
        let mut term = BigUint::one();
        for (alpha, phi) in vp.multiplicities() {
            assert!(alpha.fits_in(&target), "part {alpha} escapes {target}");
            let r = rho_recursion(m - 1, &alpha.sorted())?;
            term *= multichoose(&r, phi);
        }
        total += term;
    }
    memo_put(&RHO, key, total.clone());
    Ok(total)
}

/// `sum_(d | gcd mu) d^(l(mu)-1) beta^(m)(mu/d)`.
fn divisor_weight(m: usize, mu: &Partition) -> Result<BigUint> {
    let g = mu.gcd().expect("blocks are nonempty");
    let mut acc = BigUint::zero();
    for d in (1..=g).filter(|d| g.is_multiple_of(*d)) {
        let w = BigUint::from(d).pow(mu.len() as u32 - 1);
        acc += w * beta_recursion(m, &mu.divide(d)?)?;
    }
    Ok(acc)
}

/// Sum over unordered splits into `n` blocks of
/// `(ordered count) * multinomial * prod divisor weights`.
fn split_sum(m: usize, lambda: &Partition, n: usize) -> Result<BigUint> {
    let mut acc = BigUint::zero();
    for split in multiset_splits(lambda, n) {
        let mut term = &split.ordered_count * part_multinomial(lambda, &split.blocks)?;
        for block in &split.blocks {
            term *= divisor_weight(m, block)?;
        }
        acc += term;
    }
    Ok(acc)
}

/// `beta^(m)(lambda)`, `z_lambda` times the coefficient of `p_lambda`, by the powersum recursion.
///
/// The recursion carries `1/n!` factors; a non-integral total is reported as
/// an error.
pub fn beta_recursion(m: usize, lambda: &Partition) -> Result<BigUint> {
    if m == 0 || lambda.is_empty() {
        return Ok(BigUint::one());
    }
    let key = (m, lambda.clone());
    if let Some(v) = memo_get(&BETA, &key) {
        return Ok(v);
    }
    let mut total = Rational::zero();
    for n in 1..=lambda.len() {
        let s = split_sum(m - 1, lambda, n)?;
        total += Rational::new(BigInt::from(s), BigInt::from(factorial(n)));
    }
    let v = to_natural(&total, &format!("beta^({m})({lambda})"))?;
    memo_put(&BETA, key, v.clone());
    Ok(v)
}

/// The integer right-hand side of `l(lambda)! beta^(m)(lambda) = sum_n (l!/n!) (split sum)`.
pub fn beta_cleared_rhs(m: usize, lambda: &Partition) -> Result<BigUint> {
    if m == 0 {
        return Ok(factorial(lambda.len()));
    }
    let l = lambda.len();
    let mut acc = BigUint::zero();
    for n in 1..=l {
        let (q, r) = factorial(l).div_rem(&factorial(n));
        debug_assert!(r.is_zero());
        acc += q * split_sum(m - 1, lambda, n)?;
    }
    Ok(acc)
}

/// `sum_(lambda |- n) rho^(m)(lambda) m_lambda`, in powersums.
pub fn bell_from_rho(m: usize, cap: usize) -> Result<BellTable> {
    let mut values = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut terms = Vec::new();
        for lambda in partitions_of(n) {
            let r = rho_recursion(m, &lambda)?;
            terms.push((lambda, Rational::from_integer(r.into())));
        }
        values.push(SymFunc::from_terms(Basis::Monomial, n, (), terms).to_powersum());
    }
    Ok(BellTable::new(m, Route::MonomialRecursion, values))
}

/// `sum_(lambda |- n) beta^(m)(lambda) / z_lambda p_lambda`.
pub fn bell_from_beta(m: usize, cap: usize) -> Result<BellTable> {
    let mut values = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut terms = Vec::new();
        for lambda in partitions_of(n) {
            let b = beta_recursion(m, &lambda)?;
            let z = BigInt::from(lambda.z());
            terms.push((lambda, Rational::new(b.into(), z)));
        }
        values.push(SymFunc::from_terms(Basis::PowerSum, n, (), terms));
    }
    Ok(BellTable::new(m, Route::PowersumRecursion, values))
}

fn sigma(r: i64, n: usize) -> Rational {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| {
            let d = Rational::from_integer(d.into());
            if r >= 0 {
                num_traits::pow(d, r as usize)
            } else {
                num_traits::pow(d.recip(), (-r) as usize)
            }
        })
        .sum()
}

/// `H_n = sum_(lambda |- n) sigma_(l(lambda)-1)(gcd lambda) / z_lambda p_lambda`.
pub fn h_function(n: usize) -> SymFunc {
    let terms = partitions_of(n).into_iter().map(|lambda| {
        let g = lambda.gcd().unwrap_or(0);
        let c = sigma(lambda.len() as i64 - 1, g) / Rational::from_integer(BigInt::from(lambda.z()));
        (lambda, c)
    });
    SymFunc::from_terms(Basis::PowerSum, n, (), terms)
}

/// `H_n = sum_(lambda |- n) sigma_(-1)(gcd lambda) m_lambda`.
pub fn h_function_monomial(n: usize) -> SymFunc {
    let terms = partitions_of(n).into_iter().map(|lambda| {
        let g = lambda.gcd().unwrap_or(0);
        (lambda, sigma(-1, g))
    });
    SymFunc::from_terms(Basis::Monomial, n, (), terms)
}

/// Order-one table from `B_(n+1) = sum_(k=0)^n (n-k+1)/(n+1) H_(n-k+1) B_k`.
pub fn bell_convolution(cap: usize) -> Result<BellTable> {
    let h: Vec<SymFunc> = (0..=cap).map(|n| if n == 0 { SymFunc::zero(Basis::PowerSum, 0, ()) } else { h_function(n) }).collect();
    let mut values = vec![SymFunc::constant(Rational::one())];
    for n in 0..cap {
        let mut acc = SymFunc::zero(Basis::PowerSum, n + 1, ());
        for k in 0..=n {
            let w = Rational::new((n - k + 1).into(), (n + 1).into());
            acc = acc.checked_add(&h[n - k + 1].checked_mul(&values[k])?.scale(&w))?;
        }
        values.push(acc.truncate(n + 1));
    }
    Ok(BellTable::new(1, Route::Convolution, values))
}

/// `b_0^(m), ..., b_nmax^(m)` from the exponential generating function tower
/// `E^(0)(t) = e^t`, `E^(m+1)(t) = E^(m)(e^t - 1)`.
pub fn egf_bell_numbers(m: usize, nmax: usize) -> Vec<BigUint> {
    let t = TruncPoly::monomial(1, Rational::one(), nmax);
    let e = t.exp();
    let inner = e.sub(&TruncPoly::one(nmax));
    let mut tower = e;
    for _ in 0..m {
        tower = tower.compose(&inner);
    }
    (0..=nmax)
        .map(|n| {
            let v = tower.coeff(n) * Rational::from_integer(BigInt::from(factorial(n)));
            to_natural(&v, "Bell number").expect("EGF coefficients give natural numbers")
        })
        .collect()
}

/// Stirling numbers of the second kind `S(n, k)` for `n, k <= nmax`.
pub fn stirling2(nmax: usize) -> Vec<Vec<BigUint>> {
    let mut s = vec![vec![BigUint::zero(); nmax + 1]; nmax + 1];
    s[0][0] = BigUint::one();
    for n in 1..=nmax {
        for k in 1..=n {
            s[n][k] = &s[n - 1][k - 1] + BigUint::from(k) * &s[n - 1][k];
        }
    }
    s
}

/// `b_n^(m)` from `b_n^(m) = sum_k S(n, k) b_k^(m-1)`, in integers only.
pub fn bell_numbers(m: usize, nmax: usize) -> Vec<BigUint> {
    let s = stirling2(nmax);
    let mut b = vec![BigUint::one(); nmax + 1];
    for _ in 0..m {
        b = (0..=nmax)
            .map(|n| (0..=n).map(|k| &s[n][k] * &b[k]).sum())
            .collect();
    }
    b
}

/// `b_n^(m) = <B_n^(m), p_(1^n)>`, checked against the exponential generating function.
pub fn bell_number(m: usize, n: usize) -> Result<BigUint> {
    let from_sym = bell_tower(m, n).bell_numbers()[n].clone();
    let from_egf = egf_bell_numbers(m, n)[n].clone();
    if from_sym != from_egf {
        return Err(Error::mismatch(
            format!("b_{n}^({m})"),
            format!("pairing gives {from_sym}, generating function gives {from_egf}"),
        ));
    }
    Ok(from_sym)
}

/// One dominance-comparable pair of Schur coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominancePair {
    pub larger: Partition,
    pub smaller: Partition,
    pub a_larger: BigUint,
    pub a_smaller: BigUint,
}

impl DominancePair {
    /// Whether the coefficient weakly increases up the dominance order here.
    pub fn is_monotone(&self) -> bool {
        self.a_larger >= self.a_smaller
    }
}

/// Every pair `lambda > mu` in dominance order at degree `n`, with both Schur coefficients.
pub fn dominance_pairs(table: &BellTable, n: usize) -> Result<Vec<DominancePair>> {
    let coeffs: HashMap<Partition, BigUint> = table.schur_coefficients(n)?.into_iter().collect();
    let get = |p: &Partition| coeffs.get(p).cloned().unwrap_or_default();
    let parts = partitions_of(n);
    let mut out = Vec::new();
    for a in &parts {
        for b in &parts {
            if a != b && a.dominates(b) {
                out.push(DominancePair {
                    larger: a.clone(),
                    smaller: b.clone(),
                    a_larger: get(a),
                    a_smaller: get(b),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::TermOrder;

    fn p(x: &[usize]) -> Partition {
        Partition::from(x)
    }

    #[test]
    fn order_zero_is_h() {
        let t = bell_tower(0, 3);
        for n in 1..=3 {
            assert_eq!(t.in_basis(n, Basis::Homogeneous), SymFunc::h(&[n]));
        }
    }

    #[test]
    fn tower_schur_rows() {
        assert_eq!(bell_tower(1, 4).in_basis(4, Basis::Schur).to_string(), "2s_{2,2} + 2s_{3,1} + 5s_4");
        assert_eq!(bell_tower(4, 3).in_basis(3, Basis::Schur).to_string(), "10s_{2,1} + 15s_3");
    }

    #[test]
    fn plethystic_recursion_rows() {
        let t = bell_plethystic_recursion(1, 2).unwrap();
        assert_eq!(t.in_basis(2, Basis::Schur).to_string(), "2s_2");
        let t = bell_plethystic_recursion(2, 3).unwrap();
        assert_eq!(t.in_basis(3, Basis::Schur).to_string(), "3s_{2,1} + 6s_3");
        assert_eq!(t.get(0), &SymFunc::constant(Rational::one()));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_recursion(1, &p(&[2, 1])).unwrap(), 4u32.into());
        assert_eq!(rho_recursion(1, &p(&[1, 1, 1, 1, 1])).unwrap(), 52u32.into());
        assert_eq!(rho_recursion(2, &p(&[2])).unwrap(), 3u32.into());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_recursion(1, &p(&[2, 1])).unwrap(), 3u32.into());
        assert_eq!(beta_recursion(1, &p(&[1, 1, 1])).unwrap(), 5u32.into());
        assert_eq!(beta_recursion(1, &p(&[3])).unwrap(), 2u32.into());
    }

    #[test]
    fn h_function_examples() {
        assert_eq!(h_function(2).convert(Basis::Monomial).render(TermOrder::Descending), "(3/2)m_2 + m_{1,1}");
        assert_eq!(
            h_function_monomial(5).render(TermOrder::Descending),
            "(6/5)m_5 + m_{4,1} + m_{3,2} + m_{3,1,1} + m_{2,2,1} + m_{2,1,1,1} + m_{1,1,1,1,1}"
        );
        assert_eq!(h_function_monomial(6).coeff(&p(&[3, 3])), crate::symfunc::q(4, 3));
    }

    #[test]
    fn convolution_small() {
        let t = bell_convolution(2).unwrap();
        assert_eq!(t.get(1).convert(Basis::Monomial), SymFunc::m(&[1]));
        assert_eq!(t.in_basis(2, Basis::Monomial).to_string(), "2m_{1,1} + 2m_2");
    }

    #[test]
    fn bell_number_examples() {
        for n in 0..5 {
            assert_eq!(bell_number(0, n).unwrap(), BigUint::one());
        }
        assert_eq!(bell_number(1, 3).unwrap(), 5u32.into());
        assert_eq!(bell_number(1, 5).unwrap(), 52u32.into());
        assert_eq!(bell_number(2, 2).unwrap(), 3u32.into());
    }

    #[test]
    fn stirling_route_matches_generating_function() {
        for m in 0..=4 {
            assert_eq!(bell_numbers(m, 10), egf_bell_numbers(m, 10));
        }
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
    }
}
