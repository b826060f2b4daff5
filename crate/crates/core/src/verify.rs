//! The cross-route verification matrix behind `bellsym verify`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::bell::{bell_numbers, bell_table, egf_bell_numbers, BellTable, Route};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{factorial, partitions_of, Partition};
use crate::plethysm::psi;
use crate::species::{check_budget, HyperPartitionSet, PermutationAction};
use crate::Rational;

/// One row of the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`verify`] for one order and degree.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub order: usize,
    pub degree: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{mark}  {}", c.name)?;
            } else {
                writeln!(f, "{mark}  {:width$}  {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

type Job<'a> = (String, Box<dyn Fn() -> Result<String> + Send + Sync + 'a>);

fn expect_eq<T: PartialEq + fmt::Display>(what: String, left: T, right: T) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::mismatch(what, format!("{left} vs {right}")))
    }
}

/// Runs every identity for order `m` up to degree `n`.
///
/// `seed` drives the random conjugates used in the spot check of fixed-point
/// counts. Fails early with [`Error::BudgetExceeded`] when `b_n^(m)` exceeds `budget`;
/// any identity that does not hold is reported as a failed row.
pub fn verify(m: usize, n: usize, budget: u64, exec: Execution, seed: u64) -> Result<VerifyReport> {
    check_budget(m, n, budget)?;
    let tower = bell_table(Route::Tower, m, n)?;
    let sets = (0..=n)
        .map(|k| HyperPartitionSet::new(m, k, budget))
        .collect::<Result<Vec<_>>>()?;

    let mut jobs: Vec<Job<'_>> = Vec::new();
    for route in Route::ALL.into_iter().filter(|r| *r != Route::Tower && r.supports(m)) {
        let tower = &tower;
        jobs.push((
            format!("route {route} = tower"),
            Box::new(move || {
                bell_table(route, m, n)?.compare(tower)?;
                Ok(format!("B_0..B_{n}"))
            }),
        ));
    }

    let (tower, sets) = (&tower, &sets);
    jobs.push((
        "species count = Bell number".into(),
        Box::new(move || {
            let b = bell_numbers(m, n);
            for (k, set) in sets.iter().enumerate() {
                expect_eq(format!("|pi_{k}^({m})|"), BigUint::from(set.len()), b[k].clone())?;
            }
            Ok(format!("b_{n}^({m}) = {}", b[n]))
        }),
    ));
    jobs.push((
        "fixed points = beta".into(),
        Box::new(move || {
            let mut count = 0;
            for (k, set) in sets.iter().enumerate() {
                for (lambda, beta) in full_table(tower.beta(k)?, k) {
                    let fix = set.fixed_points(&PermutationAction::of_type(&lambda), exec)?;
                    expect_eq(format!("fix({lambda}) on pi_{k}^({m})"), BigUint::from(fix), beta)?;
                    count += 1;
                }
            }
            Ok(format!("{count} cycle types"))
        }),
    ));
    let mut rng = StdRng::seed_from_u64(seed);
    let conjugates: Vec<(usize, Partition, PermutationAction)> = (1..=n)
        .flat_map(|k| partitions_of(k).into_iter().map(move |l| (k, l)))
        .map(|(k, l)| {
            let sigma = PermutationAction::random_of_type(&l, &mut rng);
            (k, l, sigma)
        })
        .collect();
    jobs.push((
        format!("random conjugates (seed {seed})"),
        Box::new(move || {
            for (k, lambda, sigma) in &conjugates {
                expect_eq(format!("cycle type of {:?}", sigma.images()), sigma.cycle_type(), lambda.clone())?;
                let beta = full_table(tower.beta(*k)?, *k)
                    .into_iter()
                    .find(|(p, _)| p == lambda)
                    .map(|(_, b)| b)
                    .unwrap_or_default();
                let fix = sets[*k].fixed_points(sigma, exec)?;
                expect_eq(format!("fix({:?}) on pi_{k}^({m})", sigma.images()), BigUint::from(fix), beta)?;
            }
            Ok(format!("{} permutations", conjugates.len()))
        }),
    ));
    jobs.push((
        "Young orbits = rho".into(),
        Box::new(move || {
            let mut count = 0;
            for (k, set) in sets.iter().enumerate() {
                for (lambda, rho) in full_table(tower.rho(k)?, k) {
                    let orbits = set.orbit_count(&lambda, exec)?;
                    expect_eq(format!("S_({lambda}) orbits on pi_{k}^({m})"), BigUint::from(orbits), rho)?;
                    count += 1;
                }
            }
            Ok(format!("{count} Young subgroups"))
        }),
    ));
    jobs.push((
        "Frobenius characteristic = B_n".into(),
        Box::new(move || {
            for (k, set) in sets.iter().enumerate() {
                let f = set.frobenius(exec)?;
                if &f != tower.get(k) {
                    return Err(Error::mismatch(
                        format!("Frobenius characteristic of pi_{k}^({m})"),
                        format!("{f} vs {}", tower.get(k)),
                    ));
                }
            }
            Ok(format!("degrees 0..{n}"))
        }),
    ));
    jobs.push((
        "psi(B) = EGF tower".into(),
        Box::new(move || {
            let egf = egf_bell_numbers(m, n);
            for k in 0..=n {
                let got = psi(tower.get(k)).coeff(k);
                let want = Rational::new(BigInt::from(egf[k].clone()), BigInt::from(factorial(k)));
                expect_eq(format!("psi(B_{k}^({m}))"), got, want)?;
            }
            Ok(format!("t^0..t^{n}"))
        }),
    ));
    jobs.push((
        "Bell numbers: Stirling = EGF".into(),
        Box::new(move || {
            let a = bell_numbers(m, n);
            let b = egf_bell_numbers(m, n);
            let c = tower.bell_numbers();
            for k in 0..=n {
                expect_eq(format!("b_{k}^({m}) Stirling vs EGF"), &a[k], &b[k])?;
                expect_eq(format!("b_{k}^({m}) pairing vs EGF"), &c[k], &b[k])?;
            }
            Ok(String::new())
        }),
    ));

    let results = exec.map(&jobs, |(_, job)| job());
    let checks = jobs
        .iter()
        .zip(results)
        .map(|((name, _), r)| match r {
            Ok(detail) => Check {
                name: name.clone(),
                passed: true,
                detail,
            },
            Err(e) => Check {
                name: name.clone(),
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect();
    Ok(VerifyReport {
        order: m,
        degree: n,
        checks,
    })
}

/// Expands a sparse coefficient list to every partition of `k`, zeros included.
fn full_table(sparse: Vec<(Partition, BigUint)>, k: usize) -> Vec<(Partition, BigUint)> {
    let map: std::collections::HashMap<_, _> = sparse.into_iter().collect();
    partitions_of(k)
        .into_iter()
        .map(|p| {
            let v = map.get(&p).cloned().unwrap_or_default();
            (p, v)
        })
        .collect()
}

/// Routes that apply to order `m`, each compared against the tower; used by `bell --route all`.
pub fn route_agreement(m: usize, n: usize, exec: Execution) -> Vec<(Route, Result<BellTable>)> {
    let routes: Vec<Route> = Route::ALL.into_iter().filter(|r| r.supports(m)).collect();
    let tables = exec.map(&routes, |&r| bell_table(r, m, n));
    routes.into_iter().zip(tables).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_degree_five() {
        let r = verify(1, 5, 1_000_000, Execution::default(), 7).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), 11);
    }

    #[test]
    fn sequential_matches_parallel() {
        let a = verify(2, 3, 1_000_000, Execution::Sequential, 1).unwrap();
        let b = verify(2, 3, 1_000_000, Execution::Parallel, 1).unwrap();
        assert_eq!(a.checks, b.checks);
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(
            verify(1, 99, 1_000_000, Execution::default(), 0),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
