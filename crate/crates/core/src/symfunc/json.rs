use serde::{Deserialize, Serialize};

use super::{Basis, SymFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::Rational;

/// Wire form: `{"basis": "schur", "degree_cap": 4, "terms": [{"partition": "3,1", "coeff": "5/6"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: String,
    pub degree_cap: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: String,
    pub coeff: String,
}

impl From<&SymFunc<Rational>> for SymFuncJson {
    fn from(f: &SymFunc<Rational>) -> Self {
        SymFuncJson {
            basis: f.basis().name().to_string(),
            degree_cap: f.degree_cap(),
            terms: f
                .terms()
                .iter()
                .map(|(p, c)| TermJson {
                    partition: p.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SymFuncJson> for SymFunc<Rational> {
    type Error = Error;

    fn try_from(j: SymFuncJson) -> Result<Self> {
        let basis: Basis = j.basis.parse()?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let p: Partition = t.partition.parse()?;
            if p.size() > j.degree_cap {
                return Err(Error::Parse(format!(
                    "term ({p}) exceeds degree cap {}",
                    j.degree_cap
                )));
            }
            let c: Rational = t
                .coeff
                .parse()
                .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", t.coeff)))?;
            terms.push((p, c));
        }
        Ok(SymFunc::from_terms(basis, j.degree_cap, (), terms).into_series())
    }
}

impl Serialize for SymFunc<Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        SymFunc::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl SymFunc<Rational> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("symmetric function serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::q;

    #[test]
    fn wire_format() {
        let f = SymFunc::from_terms(
            Basis::PowerSum,
            4,
            (),
            [(Partition::from(&[3, 1][..]), q(5, 6)), (Partition::empty(), q(1, 1))],
        );
        assert_eq!(
            f.to_json(),
            r#"{"basis":"powersum","degree_cap":4,"terms":[{"partition":"","coeff":"1"},{"partition":"3,1","coeff":"5/6"}]}"#
        );
        assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn rejects_bad_terms() {
        assert!(SymFunc::from_json(r#"{"basis":"schur","degree_cap":1,"terms":[{"partition":"2","coeff":"1"}]}"#).is_err());
        assert!(SymFunc::from_json(r#"{"basis":"x","degree_cap":1,"terms":[]}"#).is_err());
        assert!(SymFunc::from_json(r#"{"basis":"schur","degree_cap":1,"terms":[{"partition":"1","coeff":"a"}]}"#).is_err());
    }
}
