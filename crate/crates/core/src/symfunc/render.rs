use num_traits::{One, Zero};

use super::{Basis, Coefficient, SymFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::push_term;
use crate::Rational;

/// Term order inside each degree; degrees always ascend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TermOrder {
    /// Lexicographically increasing parts: `s_{2,2} + s_{3,1} + s_4`.
    #[default]
    Ascending,
    /// Reverse-lexicographic: `m_2 + m_{1,1}`.
    Descending,
}

pub(super) fn render<C: Coefficient>(f: &SymFunc<C>, order: TermOrder) -> String {
    let mut terms: Vec<(&Partition, &C)> = f.terms().iter().collect();
    if order == TermOrder::Descending {
        terms.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| b.0.parts().cmp(a.0.parts())));
    }
    let mut out = String::new();
    for (p, c) in terms {
        let name = if p.is_empty() {
            String::new()
        } else {
            format!("{}_{}", f.basis().letter(), p.subscript())
        };
        match c.as_rational() {
            Some(r) => push_term(&mut out, &r, &name),
            None => {
                if !out.is_empty() {
                    out.push_str(" + ");
                }
                out.push_str(&c.render());
                out.push_str(&name);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(super) fn parse(text: &str, degree_cap: usize) -> Result<SymFunc<Rational>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty expansion".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for ch in compact.chars() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') {
            if !current.is_empty() {
                pieces.push((negative, std::mem::take(&mut current)));
            }
            negative = ch == '-';
            continue;
        }
        current.push(ch);
    }
    if !current.is_empty() {
        pieces.push((negative, current));
    }

    let mut basis: Option<Basis> = None;
    let mut terms: Vec<(Partition, Rational)> = Vec::new();
    for (neg, piece) in pieces {
        let (coeff_text, rest) = match piece.find(|c: char| c.is_ascii_alphabetic()) {
            Some(i) => (&piece[..i], Some(&piece[i..])),
            None => (piece.as_str(), None),
        };
        let mut c = parse_coeff(coeff_text)?;
        if neg {
            c = -c;
        }
        let lambda = match rest {
            None => Partition::empty(),
            Some(r) => {
                let mut chars = r.chars();
                let letter = chars.next().unwrap();
                let b: Basis = letter.to_string().parse()?;
                if basis.is_some_and(|x| x != b) {
                    return Err(Error::Parse(format!("mixed bases in {text:?}")));
                }
                basis = Some(b);
                let sub = chars.as_str().strip_prefix('_').ok_or_else(|| {
                    Error::Parse(format!("expected '_' after basis letter in {piece:?}"))
                })?;
                let sub = sub.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(sub);
                if sub == "∅" {
                    Partition::empty()
                } else {
                    sub.parse()?
                }
            }
        };
        terms.push((lambda, c));
    }
    Ok(SymFunc::from_terms(
        basis.unwrap_or(Basis::PowerSum),
        degree_cap,
        (),
        terms,
    ))
}

fn parse_coeff(s: &str) -> Result<Rational> {
    if s.is_empty() {
        return Ok(Rational::one());
    }
    let s = s.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(s);
    let r: Rational = s
        .parse()
        .map_err(|e| Error::Parse(format!("bad coefficient {s:?}: {e}")))?;
    if r.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(r)
}
