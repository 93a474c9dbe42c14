//! JSON form of a polynomial: `{"n": 2, "terms": [{"alpha": [1,0],
//! "re": "-1", "im": "0"}, ...]}` with exact rationals as strings.
//! Round-trips exactly; terms emitted in descending graded-lex order.

use serde::{Deserialize, Serialize};

use super::{CPoly, MultiIndex};
use crate::grat::{format_rational, GRat};

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub alpha: Vec<u32>,
    pub re: String,
    pub im: String,
}

#[derive(Serialize, Deserialize)]
pub struct CPolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

pub fn cpoly_to_json(p: &CPoly) -> CPolyJson {
    let terms = p
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(alpha, c)| TermJson {
            alpha: alpha.exponents().to_vec(),
            re: format_rational(&c.re),
            im: format_rational(&c.im),
        })
        .collect();
    CPolyJson { n: p.nvars(), terms }
}

pub fn cpoly_from_json(j: &CPolyJson) -> Result<CPoly, String> {
    if j.n < 1 {
        return Err("variable count must be >= 1".into());
    }
    let mut p = CPoly::zero(j.n);
    for t in &j.terms {
        if t.alpha.len() != j.n {
            return Err(format!(
                "exponent vector {:?} does not match n={}",
                t.alpha, j.n
            ));
        }
        let c = GRat::from_str_parts(&t.re, &t.im)?;
        p.add_term(MultiIndex::new(t.alpha.clone()), c);
    }
    Ok(p)
}

impl Serialize for CPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        cpoly_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = CPolyJson::deserialize(d)?;
        cpoly_from_json(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse_poly;

    #[test]
    fn json_roundtrip_exact() {
        let p = parse_poly("(1/2+3/4i)*z1^2*z2 - 7/3 + z2^4", None).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        let q: CPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn json_matches_documented_shape() {
        let p = parse_poly("2 - z1 - z2", None).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["n"], 2);
        let terms = v["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 3);
        assert!(terms.iter().any(|t| t["alpha"] == serde_json::json!([1, 0])
            && t["re"] == "-1"
            && t["im"] == "0"));
    }
}
