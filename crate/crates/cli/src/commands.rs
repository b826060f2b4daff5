//! One function per subcommand. Each prints to stdout and reports whether the
//! run counts as a verification failure.

use bellsym::bell::{
    bell_numbers, bell_table, dominance_pairs, egf_bell_numbers, h_function, BellTable, Route,
};
use bellsym::error::{Error, Result};
use bellsym::partition::Partition;
use bellsym::restriction::{restriction_coeffs, tauberian_check, RestrictionReport};
use bellsym::species::HyperPartitionSet;
use bellsym::symfunc::{Basis, SymFunc, TermOrder};
use bellsym::verify::route_agreement;
use serde_json::{json, Value};

use crate::{Format, Outcome, RunConfig};

/// Degree of the z-graded cross-check run alongside each restriction report.
const LITTLEWOOD_CHECK: usize = 6;

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
}

fn tsv_terms(out: &mut String, label: usize, f: &SymFunc) {
    for (p, c) in f.terms() {
        out.push_str(&format!("{label}\t{p}\t{c}\n"));
    }
}

fn print_family(cfg: &RunConfig, letter: &str, first: usize, values: &[SymFunc], order: TermOrder, meta: Value) {
    match cfg.format {
        Format::Plain => {
            for (i, f) in values.iter().enumerate() {
                println!("{letter}_{}: {}", first + i, f.render(order));
            }
        }
        Format::Tsv => {
            let mut out = String::from("n\tpartition\tcoeff\n");
            for (i, f) in values.iter().enumerate() {
                tsv_terms(&mut out, first + i, f);
            }
            print!("{out}");
        }
        Format::Json => {
            let mut meta = meta;
            meta["values"] = serde_json::to_value(values).expect("symmetric functions serialize");
            print_json(&meta);
        }
    }
}

pub fn bell(cfg: &RunConfig, m: usize, n: usize, basis: Basis, route: &str) -> Result<Outcome> {
    let (table, agreement) = if route == "all" {
        let mut tables: Vec<(Route, BellTable)> = Vec::new();
        for (r, t) in route_agreement(m, n, cfg.exec()) {
            tables.push((r, t?));
        }
        let reference = tables[0].1.clone();
        let agreement: Vec<(Route, Option<String>)> = tables
            .iter()
            .map(|(r, t)| (*r, t.compare(&reference).err().map(|e| e.to_string())))
            .collect();
        (reference, Some(agreement))
    } else {
        let r: Route = route.parse()?;
        (bell_table(r, m, n)?, None)
    };

    let values: Vec<SymFunc> = (0..=n).map(|k| table.in_basis(k, basis)).collect();
    let mut meta = json!({
        "order": m,
        "degree": n,
        "basis": basis.name(),
        "route": route,
    });
    if let Some(a) = &agreement {
        meta["routes"] = a
            .iter()
            .map(|(r, e)| json!({"route": r.name(), "agrees": e.is_none(), "detail": e}))
            .collect();
    }
    print_family(cfg, "B", 0, &values, TermOrder::Ascending, meta);

    let Some(agreement) = agreement else {
        return Ok(Outcome::Success);
    };
    let mut ok = true;
    for (r, e) in &agreement {
        let line = match e {
            None => format!("route {r}: agrees"),
            Some(detail) => {
                ok = false;
                format!("route {r}: DISAGREES: {detail}")
            }
        };
        match cfg.format {
            Format::Plain => println!("{line}"),
            Format::Tsv => eprintln!("{line}"),
            Format::Json => {}
        }
    }
    Ok(if ok {
        Outcome::Success
    } else {
        Outcome::VerificationFailed
    })
}

pub fn verify(cfg: &RunConfig, m: usize, n: usize) -> Result<Outcome> {
    let report = bellsym::verify::verify(m, n, cfg.budget, cfg.exec(), cfg.seed)?;
    match cfg.format {
        Format::Plain => {
            println!("order {m}, degrees 0..{n}");
            print!("{report}");
            match report.first_failure() {
                None => println!("all checks passed"),
                Some(c) => println!("first failure: {}", c.name),
            }
        }
        Format::Tsv => {
            println!("check\tstatus\tdetail");
            for c in &report.checks {
                println!("{}\t{}\t{}", c.name, if c.passed { "pass" } else { "fail" }, c.detail);
            }
        }
        Format::Json => print_json(&json!({
            "order": m,
            "degree": n,
            "seed": cfg.seed,
            "passed": report.all_passed(),
            "checks": report.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })),
    }
    if let Some(c) = report.first_failure() {
        eprintln!("verification failed: {}", c.name);
        return Ok(Outcome::VerificationFailed);
    }
    Ok(Outcome::Success)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn restriction(cfg: &RunConfig, lambda: Option<&str>, degree: Option<usize>, horizon: usize) -> Result<Outcome> {
    if let Some(n) = degree {
        let reports = RestrictionReport::for_degree(n, horizon, cfg.exec())?;
        match cfg.format {
            Format::Plain | Format::Tsv => {
                println!("{}", RestrictionReport::tsv_header());
                for r in &reports {
                    println!("{}", r.tsv_row());
                }
            }
            Format::Json => print_json(&Value::Array(
                reports
                    .iter()
                    .map(|r| {
                        json!({
                            "lambda": r.lambda.to_string(),
                            "P": strings(r.poly.coeffs()),
                            "A": r.residue.to_string(),
                            "stabilization": r.stabilization,
                        })
                    })
                    .collect(),
            )),
        }
        return Ok(Outcome::Success);
    }

    let lambda: Partition = lambda.unwrap_or_default().parse()?;
    let report = RestrictionReport::new(&lambda, horizon)?;
    let coeffs = restriction_coeffs(&lambda, horizon, LITTLEWOOD_CHECK)?;
    let cesaro = tauberian_check(&lambda, horizon)?;
    if !cesaro.converges() {
        return Err(Error::mismatch(
            format!("Cesàro limit of ({lambda})"),
            format!("error exceeds {}/n", cesaro.bound_constant),
        ));
    }

    match cfg.format {
        Format::Plain => {
            println!("lambda: ({lambda})");
            println!("P(z) = {}", report.poly.render("z"));
            println!("r_(n): {}", strings(&coeffs).join(", "));
            println!("A = {}", report.residue);
            println!("stabilization index: {}", report.stabilization);
            println!(
                "Cesàro error: n |average - A| = {} for n >= {}, at most {} for all n (sum |P_j| = {})",
                cesaro.tail_constant,
                cesaro.degree.max(1),
                cesaro.bound_constant,
                cesaro.coefficient_sum
            );
            println!("n\taverage\tn*|average - A|");
            for n in 1..=horizon {
                let err = cesaro.error(n) * bellsym::Rational::from_integer(n.into());
                println!("{n}\t{}\t{err}", cesaro.averages[n - 1]);
            }
        }
        Format::Tsv => {
            println!("{}", RestrictionReport::tsv_header());
            println!("{}", report.tsv_row());
        }
        Format::Json => print_json(&json!({
            "lambda": lambda.to_string(),
            "P": strings(report.poly.coeffs()),
            "r": strings(&coeffs),
            "A": report.residue.to_string(),
            "stabilization": report.stabilization,
            "cesaro": {
                "averages": strings(&cesaro.averages),
                "tail_constant": cesaro.tail_constant.to_string(),
                "bound_constant": cesaro.bound_constant.to_string(),
                "coefficient_sum": cesaro.coefficient_sum.to_string(),
            },
        })),
    }
    Ok(Outcome::Success)
}

pub fn hfun(cfg: &RunConfig, n: usize, basis: Basis) -> Result<Outcome> {
    let values: Vec<SymFunc> = (1..=n).map(|k| h_function(k).convert(basis)).collect();
    let meta = json!({"degree": n, "basis": basis.name()});
    print_family(cfg, "H", 1, &values, TermOrder::Descending, meta);
    Ok(Outcome::Success)
}

pub fn bellnum(cfg: &RunConfig, m: usize, nmax: usize) -> Result<Outcome> {
    let values = bell_numbers(m, nmax);
    let egf = egf_bell_numbers(m, nmax);
    if values != egf {
        return Err(Error::mismatch(
            format!("b^({m}) up to {nmax}"),
            format!("Stirling {values:?}, generating function {egf:?}"),
        ));
    }
    match cfg.format {
        Format::Plain => println!("{}", strings(&values).join(",")),
        Format::Tsv => {
            println!("n\tb");
            for (n, b) in values.iter().enumerate() {
                println!("{n}\t{b}");
            }
        }
        Format::Json => print_json(&json!({"order": m, "values": strings(&values)})),
    }
    Ok(Outcome::Success)
}

const OBSERVATION: &str = "OBSERVATION ONLY: Schur coefficients of B_n along dominance-comparable pairs; nothing here is asserted";

pub fn dominance_report(cfg: &RunConfig, m: usize, n: usize) -> Result<Outcome> {
    let table = bell_table(Route::Tower, m, n)?;
    let mut rows = Vec::new();
    for k in 1..=n {
        for pair in dominance_pairs(&table, k)? {
            rows.push((k, pair));
        }
    }
    match cfg.format {
        Format::Plain => {
            println!("{OBSERVATION}");
            for (k, p) in &rows {
                let rel = if p.is_monotone() { ">=" } else { "<" };
                println!(
                    "n={k}  ({}) > ({})  A: {} {rel} {}",
                    p.larger, p.smaller, p.a_larger, p.a_smaller
                );
            }
            let weak = rows.iter().filter(|(_, p)| p.is_monotone()).count();
            println!("{weak} of {} pairs have A_larger >= A_smaller", rows.len());
        }
        Format::Tsv => {
            println!("# {OBSERVATION}");
            println!("n\tlarger\tsmaller\tA_larger\tA_smaller");
            for (k, p) in &rows {
                println!("{k}\t{}\t{}\t{}\t{}", p.larger, p.smaller, p.a_larger, p.a_smaller);
            }
        }
        Format::Json => print_json(&json!({
            "label": OBSERVATION,
            "order": m,
            "degree": n,
            "pairs": rows.iter().map(|(k, p)| json!({
                "n": k,
                "larger": p.larger.to_string(),
                "smaller": p.smaller.to_string(),
                "A_larger": p.a_larger.to_string(),
                "A_smaller": p.a_smaller.to_string(),
            })).collect::<Vec<_>>(),
        })),
    }
    Ok(Outcome::Success)
}

pub fn species_dump(cfg: &RunConfig, m: usize, n: usize) -> Result<Outcome> {
    let set = HyperPartitionSet::new(m, n, cfg.budget)?;
    match cfg.format {
        Format::Plain => {
            for h in set.objects() {
                println!("{h}");
            }
        }
        Format::Tsv => print!("{}", set.to_tsv()),
        Format::Json => print_json(&json!({
            "order": m,
            "degree": n,
            "count": set.len(),
            "objects": strings(set.objects()),
        })),
    }
    Ok(Outcome::Success)
}
