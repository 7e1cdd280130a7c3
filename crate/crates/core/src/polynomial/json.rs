use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{PolyError, SparsePolynomial};

/// `{"nvars": k, "terms": [{"exp": [..], "coeff": "p/q"}]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

impl From<&SparsePolynomial> for PolynomialJson {
    fn from(p: &SparsePolynomial) -> Self {
        PolynomialJson {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson {
                    exp: e.to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialJson> for SparsePolynomial {
    type Error = PolyError;

    fn try_from(json: PolynomialJson) -> Result<Self, PolyError> {
        let terms = json
            .terms
            .into_iter()
            .map(|t| {
                BigRational::from_str(t.coeff.trim())
                    .map(|c| (t.exp, c))
                    .map_err(|_| PolyError::InvalidCoefficient(t.coeff))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SparsePolynomial::from_terms(json.nvars, terms)
    }
}

impl Serialize for SparsePolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = PolynomialJson::deserialize(deserializer)?;
        SparsePolynomial::try_from(json).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::ratio;

    #[test]
    fn reads_fraction_strings() {
        let text = r#"{"nvars":2,"terms":[{"exp":[2,0],"coeff":"1/2"},{"exp":[0,2],"coeff":"3"}]}"#;
        let p: SparsePolynomial = serde_json::from_str(text).unwrap();
        assert_eq!(p.coefficient(&[2, 0]), ratio(1, 2));
        assert_eq!(p.coefficient(&[0, 2]), ratio(3, 1));
        // canonical order: [0,2] < [2,0]
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"nvars":2,"terms":[{"exp":[0,2],"coeff":"3"},{"exp":[2,0],"coeff":"1/2"}]}"#
        );
    }

    #[test]
    fn rejects_bad_terms() {
        assert!(serde_json::from_str::<SparsePolynomial>(r#"{"nvars":2,"terms":[{"exp":[1],"coeff":"1"}]}"#).is_err());
        assert!(serde_json::from_str::<SparsePolynomial>(r#"{"nvars":1,"terms":[{"exp":[1],"coeff":"one"}]}"#).is_err());
        assert!(serde_json::from_str::<SparsePolynomial>(r#"{"nvars":1,"terms":[{"exp":[1],"coeff":"1/0"}]}"#).is_err());
    }
}
