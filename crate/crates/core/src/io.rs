//! JSON wire formats: complex numbers as `{"re", "im"}` objects and the
//! parameter file.
//!
//! Parameter file: an object with required keys `x1, x2, y1, y2, z1, z2` and
//! optional `y3, z3`. Each value is either `{"re": .., "im": ..}` or
//! `{"modulus": .., "argument": ..}` with the argument in `(−π, π]`.

use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::numerics::ComplexValue;
use crate::params::Params;

#[derive(Serialize, Deserialize)]
struct ReIm {
    re: f64,
    im: f64,
}

/// `#[serde(with = "complex")]` for a `ComplexValue` field.
pub mod complex {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(z: &ComplexValue, s: S) -> Result<S::Ok, S::Error> {
        ReIm { re: z.re, im: z.im }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ComplexValue, D::Error> {
        let v = ReIm::deserialize(d)?;
        Ok(ComplexValue::new(v.re, v.im))
    }
}

/// `#[serde(with = "complex_opt")]` for an `Option<ComplexValue>` field.
pub mod complex_opt {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(z: &Option<ComplexValue>, s: S) -> Result<S::Ok, S::Error> {
        z.map(|z| ReIm { re: z.re, im: z.im }).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<ComplexValue>, D::Error> {
        Ok(Option::<ReIm>::deserialize(d)?.map(|v| ComplexValue::new(v.re, v.im)))
    }
}

/// `#[serde(with = "complex_pair")]` for a `[ComplexValue; 2]` field.
pub mod complex_pair {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(z: &[ComplexValue; 2], s: S) -> Result<S::Ok, S::Error> {
        z.map(|z| ReIm { re: z.re, im: z.im }).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[ComplexValue; 2], D::Error> {
        Ok(<[ReIm; 2]>::deserialize(d)?.map(|v| ComplexValue::new(v.re, v.im)))
    }
}

/// A complex entry of a parameter file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum ComplexInput {
    Cartesian { re: f64, im: f64 },
    Polar { modulus: f64, argument: f64 },
}

impl ComplexInput {
    fn resolve(self, field: &str) -> Result<ComplexValue, Error> {
        match self {
            ComplexInput::Cartesian { re, im } => Ok(ComplexValue::new(re, im)),
            ComplexInput::Polar { modulus, argument } => {
                if !(argument > -PI && argument <= PI) {
                    return Err(Error::Input(format!(
                        "{field}: argument {argument} outside (-pi, pi]"
                    )));
                }
                if modulus < 0.0 {
                    return Err(Error::Input(format!("{field}: negative modulus {modulus}")));
                }
                Ok(ComplexValue::from_polar(modulus, argument))
            }
        }
    }
}

/// On-disk parameter document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub x1: ComplexInput,
    pub x2: ComplexInput,
    pub y1: ComplexInput,
    pub y2: ComplexInput,
    pub z1: ComplexInput,
    pub z2: ComplexInput,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y3: Option<ComplexInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z3: Option<ComplexInput>,
}

impl ParamFile {
    /// Cartesian form of `p`, without a version tag (set `schema_version`
    /// when the file stands alone).
    pub fn from_params(p: &Params) -> Self {
        let cart = |z: ComplexValue| ComplexInput::Cartesian { re: z.re, im: z.im };
        ParamFile {
            schema_version: None,
            x1: cart(p.x1),
            x2: cart(p.x2),
            y1: cart(p.y1),
            y2: cart(p.y2),
            z1: cart(p.z1),
            z2: cart(p.z2),
            y3: p.y3.map(cart),
            z3: p.z3.map(cart),
        }
    }

    pub fn to_params(&self) -> Result<Params, Error> {
        let mut p = Params {
            x1: self.x1.resolve("x1")?,
            x2: self.x2.resolve("x2")?,
            y1: self.y1.resolve("y1")?,
            y2: self.y2.resolve("y2")?,
            z1: self.z1.resolve("z1")?,
            z2: self.z2.resolve("z2")?,
            y3: None,
            z3: None,
        };
        if let Some(y3) = self.y3 {
            p.y3 = Some(y3.resolve("y3")?);
        }
        if let Some(z3) = self.z3 {
            p.z3 = Some(z3.resolve("z3")?);
        }
        p.validate()?;
        Ok(p)
    }
}

/// Parse a parameter document; errors carry the serde line/column context.
pub fn parse_params(text: &str) -> Result<Params, Error> {
    let file: ParamFile = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    file.to_params()
}

pub fn read_params(path: &Path) -> Result<Params, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_params(&text)
}
