//! JSON wire formats shared by every module.
//!
//! * rationals: `"p/q"`, or `"p"` when `q = 1`
//! * Gaussian rationals: same string when real, else `{"re": "p/q", "im": "p/q"}`
//! * polynomials: `[[i, j, coeff], ...]` in descending column order
//! * points: `[x, y]`

use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::field::{FieldElem, Point, Rational};
use super::poly::BivarPoly;

pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    Rational::from_str(t).map_err(|_| format!("invalid rational {s:?}"))
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_real() {
            s.serialize_str(&rational_to_string(&self.re))
        } else {
            #[derive(Serialize)]
            struct Gaussian {
                re: String,
                im: String,
            }
            Gaussian {
                re: rational_to_string(&self.re),
                im: rational_to_string(&self.im),
            }
            .serialize(s)
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Str(String),
    Int(i64),
    Gaussian {
        re: Box<ScalarRepr>,
        #[serde(default)]
        im: Option<Box<ScalarRepr>>,
    },
}

impl ScalarRepr {
    fn to_rational(&self) -> Result<Rational, String> {
        match self {
            ScalarRepr::Str(s) => parse_rational(s),
            ScalarRepr::Int(n) => Ok(Rational::from_integer((*n).into())),
            ScalarRepr::Gaussian { .. } => Err("nested Gaussian value".into()),
        }
    }

    fn to_field(&self) -> Result<FieldElem, String> {
        match self {
            ScalarRepr::Gaussian { re, im } => {
                let re = re.to_rational()?;
                let im = match im {
                    Some(v) => v.to_rational()?,
                    None => Rational::default(),
                };
                Ok(FieldElem::new(re, im))
            }
            other => Ok(FieldElem::real(other.to_rational()?)),
        }
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        ScalarRepr::deserialize(d)?
            .to_field()
            .map_err(de::Error::custom)
    }
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self.sorted_terms();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for ((i, j), c) in &terms {
            seq.serialize_element(&(i, j, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples: Vec<(u32, u32, FieldElem)> = Vec::deserialize(d)?;
        Ok(BivarPoly::from_terms(
            triples.into_iter().map(|(i, j, c)| ((i, j), c)),
        ))
    }
}

/// Serde adapter for a [`Point`] as a two-element array.
pub mod point {
    use super::*;

    pub fn serialize<S: Serializer>(p: &Point, s: S) -> Result<S::Ok, S::Error> {
        (&p.0, &p.1).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Point, D::Error> {
        <(FieldElem, FieldElem)>::deserialize(d)
    }
}

/// Serde adapter for an optional [`Point`].
pub mod opt_point {
    use super::*;

    pub fn serialize<S: Serializer>(p: &Option<Point>, s: S) -> Result<S::Ok, S::Error> {
        match p {
            Some(p) => (&p.0, &p.1).serialize(s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Point>, D::Error> {
        <Option<(FieldElem, FieldElem)>>::deserialize(d)
    }
}
