//! Interchange format: a polynomial is a JSON array of `[e_s, e_q, "c"]`
//! triples in increasing lexicographic order of `(e_s, e_q)`, with the
//! coefficient written as a decimal string so that it survives any JSON
//! reader unchanged.

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::coeff::Coeff;
use super::poly::{LaurentPoly, Mono};

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&(m.s(), m.q(), c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(i32, i32, String)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (a, b, c) in raw {
            let c: Coeff = c.parse().map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))?;
            terms.push((Mono::new(a, b), c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl LaurentPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomials always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_is_sorted_triples_with_string_coefficients() {
        let p = LaurentPoly::from_triples([(1, 0, -2), (-1, 3, 5)]);
        assert_eq!(p.to_json(), r#"[[-1,3,"5"],[1,0,"-2"]]"#);
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn big_coefficients_roundtrip() {
        let p = LaurentPoly::from_triples([(0, 0, i64::MAX)]).pow(3);
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }
}
