//! Generator images of the two-dimensional representation, relation
//! residuals, and the conjugator diagonalizing `s1` when `x1 ≠ x2`.
//!
//! With `r = ±√(x1x2y1y2z1z2)`:
//!
//! ```text
//! s1 = [ x1   (y1+y2)/(y1y2) − (z1+z2)x2/r ]    s2 = [ y1+y2     1/x1 ]
//!      [ 0    x2                           ]         [ −y1y2x1   0    ]
//!
//! s3 = [ 0    −r/(y1y2x1x2) ]
//!      [ r    z1+z2         ]
//! ```

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix2::Mat2;
use crate::numerics::{approx_eq, principal_sqrt, ComplexValue};
use crate::params::Params;

/// Which square root of `x1x2y1y2z1z2` is used for `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum RootSign {
    /// The principal root.
    #[default]
    Plus,
    /// Minus the principal root.
    Minus,
}

impl RootSign {
    pub fn value(self) -> f64 {
        match self {
            RootSign::Plus => 1.0,
            RootSign::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> RootSign {
        match self {
            RootSign::Plus => RootSign::Minus,
            RootSign::Minus => RootSign::Plus,
        }
    }
}

impl From<RootSign> for i8 {
    fn from(s: RootSign) -> i8 {
        match s {
            RootSign::Plus => 1,
            RootSign::Minus => -1,
        }
    }
}

impl TryFrom<i8> for RootSign {
    type Error = String;
    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(RootSign::Plus),
            -1 => Ok(RootSign::Minus),
            other => Err(format!("r sign must be +1 or -1, got {other}")),
        }
    }
}

impl std::str::FromStr for RootSign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(RootSign::Plus),
            "-1" | "−1" | "-" => Ok(RootSign::Minus),
            other => Err(format!("r sign must be +1 or -1, got {other:?}")),
        }
    }
}

/// Parameter regime: `x1 = x2` or `x1 ≠ x2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    EqualX,
    DistinctX,
}

/// Images of `s1, s2, s3` with the root that produced them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorTriple {
    pub s1: Mat2,
    pub s2: Mat2,
    pub s3: Mat2,
    #[serde(with = "crate::io::complex")]
    pub r_used: ComplexValue,
    pub r_sign: RootSign,
    /// Parameters the matrices were built from (`x1` replaced by `x2` in the
    /// equal-x builder).
    pub params: Params,
}

impl GeneratorTriple {
    pub fn generators(&self) -> [Mat2; 3] {
        [self.s1, self.s2, self.s3]
    }
}

fn root(delta: ComplexValue, sign: RootSign) -> ComplexValue {
    principal_sqrt(delta) * sign.value()
}

/// Generator images for arbitrary nonzero parameters.
pub fn build_general(p: &Params, r_sign: RootSign) -> Result<GeneratorTriple, Error> {
    p.validate()?;
    let Params {
        x1,
        x2,
        y1,
        y2,
        z1,
        z2,
        ..
    } = *p;
    let r = root(p.delta(), r_sign);
    let zero = ComplexValue::new(0.0, 0.0);
    let s1 = Mat2::new(x1, (y1 + y2) / (y1 * y2) - (z1 + z2) * x2 / r, zero, x2);
    let s2 = Mat2::new(y1 + y2, 1.0 / x1, -y1 * y2 * x1, zero);
    let s3 = Mat2::new(zero, -r / (y1 * y2 * x1 * x2), r, z1 + z2);
    Ok(GeneratorTriple {
        s1,
        s2,
        s3,
        r_used: r,
        r_sign,
        params: *p,
    })
}

/// Generator images in the `x1 = x2` regime; `x1` is ignored and `x2` used
/// for both, with `r = ±√(x2²y1y2z1z2)`.
pub fn build_equal_x(p: &Params, r_sign: RootSign) -> Result<GeneratorTriple, Error> {
    p.validate()?;
    let Params {
        x2, y1, y2, z1, z2, ..
    } = *p;
    let r = root(x2 * x2 * y1 * y2 * z1 * z2, r_sign);
    let zero = ComplexValue::new(0.0, 0.0);
    let s1 = Mat2::new(x2, (y1 + y2) / (y1 * y2) - (z1 + z2) * x2 / r, zero, x2);
    let s2 = Mat2::new(y1 + y2, 1.0 / x2, -y1 * y2 * x2, zero);
    let s3 = Mat2::new(zero, -r / (x2 * x2 * y1 * y2), r, z1 + z2);
    let mut params = *p;
    params.x1 = x2;
    Ok(GeneratorTriple {
        s1,
        s2,
        s3,
        r_used: r,
        r_sign,
        params,
    })
}

/// Builder for the given regime.
pub fn build(p: &Params, regime: Regime, r_sign: RootSign) -> Result<GeneratorTriple, Error> {
    match regime {
        Regime::EqualX => build_equal_x(p, r_sign),
        Regime::DistinctX => build_general(p, r_sign),
    }
}

/// `maxentry(m) / scale`, with a zero scale mapped to the unscaled value.
fn scaled(m: &Mat2, scale: f64) -> f64 {
    if scale > 0.0 {
        m.max_modulus() / scale
    } else {
        m.max_modulus()
    }
}

/// Largest entry of `s1s2s3 − s2s3s1` and `s1s2s3 − s3s1s2`, relative to
/// the largest entry of `s1s2s3`.
pub fn braid_residual(g: &GeneratorTriple) -> f64 {
    let a = g.s1 * g.s2 * g.s3;
    let b = g.s2 * g.s3 * g.s1;
    let c = g.s3 * g.s1 * g.s2;
    let scale = a.max_modulus();
    scaled(&(a - b), scale).max(scaled(&(a - c), scale))
}

/// Relative residual of `∏(m − λ)` over `eigenvalues`, scaled by
/// `∏(maxentry(m) + |λ|)`.
pub fn polynomial_residual(m: &Mat2, eigenvalues: &[ComplexValue]) -> f64 {
    let norm = m.max_modulus();
    let (product, scale) = eigenvalues
        .iter()
        .fold((Mat2::identity(), 1.0), |(acc, s), &l| {
            (acc * m.shift(l), s * (norm + l.norm()))
        });
    scaled(&product, scale)
}

/// Relative residuals of the Hecke relations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeckeResiduals {
    pub s1_quadratic: f64,
    pub s2_quadratic: f64,
    pub s3_quadratic: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s2_cubic: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s3_cubic: Option<f64>,
}

impl HeckeResiduals {
    pub fn max(&self) -> f64 {
        [
            Some(self.s1_quadratic),
            Some(self.s2_quadratic),
            Some(self.s3_quadratic),
            self.s2_cubic,
            self.s3_cubic,
        ]
        .into_iter()
        .flatten()
        .fold(0.0, f64::max)
    }
}

/// `(s1−x1)(s1−x2)`, `(s2−y1)(s2−y2)`, `(s3−z1)(s3−z2)`, and the cubic
/// products when `y3`, `z3` are present.
pub fn hecke_residuals(g: &GeneratorTriple, p: &Params) -> HeckeResiduals {
    HeckeResiduals {
        s1_quadratic: polynomial_residual(&g.s1, &[p.x1, p.x2]),
        s2_quadratic: polynomial_residual(&g.s2, &[p.y1, p.y2]),
        s3_quadratic: polynomial_residual(&g.s3, &[p.z1, p.z2]),
        s2_cubic: p.y3.map(|y3| polynomial_residual(&g.s2, &[p.y1, p.y2, y3])),
        s3_cubic: p.z3.map(|z3| polynomial_residual(&g.s3, &[p.z1, p.z2, z3])),
    }
}

/// Whether `s1(1,2)` is zero relative to the size of its two terms.
pub fn s1_offdiag_vanishes(g: &GeneratorTriple, tol: f64) -> bool {
    let p = &g.params;
    let first = ((p.y1 + p.y2) / (p.y1 * p.y2)).norm();
    let second = ((p.z1 + p.z2) * p.x2 / g.r_used).norm();
    g.s1.b.norm() <= tol * first.max(second)
}

/// `T = [[1, s1(1,2)/(x2 − x1)], [0, 1]]`, so that `T⁻¹ s1 T = diag(x1, x2)`.
///
/// Requires `x1 ≠ x2` and `s1(1,2) ≠ 0` beyond `tol`.
pub fn conjugator_t(g: &GeneratorTriple, tol: f64) -> Result<Mat2, Error> {
    let (x1, x2) = (g.params.x1, g.params.x2);
    if approx_eq(x1, x2, tol) {
        return Err(Error::DegenerateRegime("x1 = x2".into()));
    }
    if s1_offdiag_vanishes(g, tol) {
        return Err(Error::DegenerateRegime("s1(1,2) = 0".into()));
    }
    let one = ComplexValue::new(1.0, 0.0);
    let zero = ComplexValue::new(0.0, 0.0);
    Ok(Mat2::new(one, g.s1.b / (x2 - x1), zero, one))
}
