//! Specialized parameter tuples.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::Var;
use crate::numerics::{is_finite, ComplexValue};

/// Nonzero complex values for `x1, x2, y1, y2, z1, z2`, with the optional
/// third eigenvalues `y3, z3` used only by the cubic relation check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(with = "crate::io::complex")]
    pub x1: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub x2: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub y1: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub y2: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub z1: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub z2: ComplexValue,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::io::complex_opt"
    )]
    pub y3: Option<ComplexValue>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::io::complex_opt"
    )]
    pub z3: Option<ComplexValue>,
}

impl Params {
    /// Values in the order `x1, x2, y1, y2, z1, z2`.
    pub fn new(values: [ComplexValue; 6]) -> Result<Self, Error> {
        let [x1, x2, y1, y2, z1, z2] = values;
        let p = Params {
            x1,
            x2,
            y1,
            y2,
            z1,
            z2,
            y3: None,
            z3: None,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn from_real(values: [f64; 6]) -> Result<Self, Error> {
        Params::new(values.map(ComplexValue::from))
    }

    pub fn with_cubic(mut self, y3: ComplexValue, z3: ComplexValue) -> Result<Self, Error> {
        self.y3 = Some(y3);
        self.z3 = Some(z3);
        self.validate()?;
        Ok(self)
    }

    pub fn get(&self, v: Var) -> ComplexValue {
        match v {
            Var::X1 => self.x1,
            Var::X2 => self.x2,
            Var::Y1 => self.y1,
            Var::Y2 => self.y2,
            Var::Z1 => self.z1,
            Var::Z2 => self.z2,
        }
    }

    pub fn set(&mut self, v: Var, value: ComplexValue) {
        match v {
            Var::X1 => self.x1 = value,
            Var::X2 => self.x2 = value,
            Var::Y1 => self.y1 = value,
            Var::Y2 => self.y2 = value,
            Var::Z1 => self.z1 = value,
            Var::Z2 => self.z2 = value,
        }
    }

    /// Every value multiplied by `lambda`.
    pub fn scaled(&self, lambda: ComplexValue) -> Params {
        let mut p = *self;
        for v in Var::ALL {
            p.set(v, self.get(v) * lambda);
        }
        p.y3 = self.y3.map(|y| y * lambda);
        p.z3 = self.z3.map(|z| z * lambda);
        p
    }

    /// `x1·x2·y1·y2·z1·z2`, the square of `r`.
    pub fn delta(&self) -> ComplexValue {
        self.x1 * self.x2 * self.y1 * self.y2 * self.z1 * self.z2
    }

    /// Fails with `InvalidParams` naming the first zero or non-finite value.
    pub fn validate(&self) -> Result<(), Error> {
        let optional = [("y3", self.y3), ("z3", self.z3)];
        let required = Var::ALL.map(|v| (v.name(), Some(self.get(v))));
        for (name, value) in required.iter().chain(optional.iter()) {
            if let Some(z) = value {
                if !is_finite(*z) {
                    return Err(Error::InvalidParams(format!("{name} is not finite")));
                }
                if z.norm() == 0.0 {
                    return Err(Error::InvalidParams(format!("{name} must be nonzero")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::c;

    #[test]
    fn rejects_zero_and_nan() {
        let err = Params::from_real([1.0, 1.0, 0.0, 1.0, 1.0, 1.0]).unwrap_err();
        assert_eq!(err, Error::InvalidParams("y1 must be nonzero".into()));
        assert!(Params::from_real([1.0, f64::NAN, 1.0, 1.0, 1.0, 1.0]).is_err());
        let p = Params::from_real([1.0; 6]).unwrap();
        assert!(p.with_cubic(c(0.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn delta_is_product() {
        let p = Params::from_real([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(p.delta(), c(720.0, 0.0));
    }
}
