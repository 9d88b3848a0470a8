//! Complex scalars, the principal square root, and tolerance comparison.
//!
//! Every specialized parameter is a nonzero complex number `ρ·e^{iα}` with the
//! argument taken in the half-open interval `(−π, π]`. The square root used to
//! build the generator matrices is the principal one for that convention:
//! `√(ρ·e^{iα}) = √ρ·e^{iα/2}`, so its result always lies in the closed right
//! half-plane, and on the negative real axis it lands on the positive
//! imaginary axis.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Complex scalar used for all numeric matrix work.
pub type ComplexValue = Complex64;

/// Relative tolerance used for verdicts (condition checks, eigen tests).
pub const DEFAULT_TOL: f64 = 1e-9;

/// Relative tolerance used for self-consistency checks (e.g. `r² = Δ`).
pub const SELF_CHECK_TOL: f64 = 1e-12;

/// Modulus/argument pair with the argument in `(−π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarForm {
    pub modulus: f64,
    pub argument: f64,
}

impl PolarForm {
    pub fn to_complex(self) -> ComplexValue {
        Complex64::from_polar(self.modulus, self.argument)
    }
}

/// Polar form with the principal argument; `0` maps to `(0, 0)`.
pub fn to_polar(z: ComplexValue) -> PolarForm {
    if z.re == 0.0 && z.im == 0.0 {
        return PolarForm {
            modulus: 0.0,
            argument: 0.0,
        };
    }
    let mut argument = z.im.atan2(z.re);
    // atan2 returns -π for a negative real with a negative-zero imaginary part.
    if argument <= -PI {
        argument = PI;
    }
    PolarForm {
        modulus: z.norm(),
        argument,
    }
}

/// Principal square root `√ρ·e^{iα/2}`, `α ∈ (−π, π]`.
///
/// Computed without trigonometry so that exact inputs such as `4`, `−1` and
/// `2i` give exact outputs. A negative real with either signed zero as its
/// imaginary part maps to the positive imaginary axis.
pub fn principal_sqrt(z: ComplexValue) -> ComplexValue {
    let (a, b) = (z.re, z.im);
    if a == 0.0 && b == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let t = ((z.norm() + a.abs()) / 2.0).sqrt();
    if a >= 0.0 {
        Complex64::new(t, b / (2.0 * t))
    } else {
        // α/2 ∈ (π/4, π/2]: imaginary part carries the sign of α, with α = π for b = ±0.
        let im = if b < 0.0 { -t } else { t };
        Complex64::new(b.abs() / (2.0 * t), im)
    }
}

/// `|a − b| ≤ tol · max(1, |a|, |b|)`.
pub fn approx_eq(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
    let scale = 1f64.max(a.norm()).max(b.norm());
    (a - b).norm() <= tol * scale
}

/// Purely relative comparison `|a − b| ≤ tol · max(|a|, |b|)`; invariant
/// under a common rescaling of `a` and `b`.
pub fn rel_eq(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm())
}

/// True when both components are finite.
pub fn is_finite(z: ComplexValue) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Shorthand constructor.
pub fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}
