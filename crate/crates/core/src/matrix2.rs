//! Dense 2×2 complex matrices and the eigenstructure needed to find common
//! invariant lines.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::numerics::{approx_eq, principal_sqrt, ComplexValue};

/// Row-major `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2 {
    #[serde(with = "crate::io::complex")]
    pub a: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub b: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub c: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub d: ComplexValue,
}

/// Column vector `(v1, v2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    #[serde(with = "crate::io::complex")]
    pub v1: ComplexValue,
    #[serde(with = "crate::io::complex")]
    pub v2: ComplexValue,
}

const ZERO: ComplexValue = ComplexValue::new(0.0, 0.0);
const ONE: ComplexValue = ComplexValue::new(1.0, 0.0);

impl Mat2 {
    pub fn new(a: ComplexValue, b: ComplexValue, c: ComplexValue, d: ComplexValue) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn scalar(s: ComplexValue) -> Self {
        Mat2::new(s, ZERO, ZERO, s)
    }

    pub fn diag(p: ComplexValue, q: ComplexValue) -> Self {
        Mat2::new(p, ZERO, ZERO, q)
    }

    pub fn trace(&self) -> ComplexValue {
        self.a + self.d
    }

    pub fn det(&self) -> ComplexValue {
        self.a * self.d - self.b * self.c
    }

    pub fn scale(&self, s: ComplexValue) -> Self {
        Mat2::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// `self − s·I`
    pub fn shift(&self, s: ComplexValue) -> Self {
        Mat2::new(self.a - s, self.b, self.c, self.d - s)
    }

    pub fn entries(&self) -> [ComplexValue; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Largest entry modulus.
    pub fn max_modulus(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.entries()
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn apply(&self, v: Vec2) -> Vec2 {
        Vec2::new(self.a * v.v1 + self.b * v.v2, self.c * v.v1 + self.d * v.v2)
    }

    /// Inverse; fails when `|det| ≤ tol · max(1, maxentry²)`.
    pub fn inverse(&self, tol: f64) -> Result<Mat2, Error> {
        let det = self.det();
        let scale = 1f64.max(self.max_modulus().powi(2));
        if det.norm() <= tol * scale {
            return Err(Error::SingularMatrix { det: det.norm() });
        }
        Ok(Mat2::new(
            self.d / det,
            -self.b / det,
            -self.c / det,
            self.a / det,
        ))
    }

    /// Entrywise comparison with [`approx_eq`].
    pub fn approx_eq(&self, other: &Mat2, tol: f64) -> bool {
        self.entries()
            .iter()
            .zip(other.entries().iter())
            .all(|(x, y)| approx_eq(*x, *y, tol))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Vec2 {
    pub fn new(v1: ComplexValue, v2: ComplexValue) -> Self {
        Vec2 { v1, v2 }
    }

    pub fn e1() -> Self {
        Vec2::new(ONE, ZERO)
    }

    pub fn e2() -> Self {
        Vec2::new(ZERO, ONE)
    }

    pub fn max_modulus(&self) -> f64 {
        self.v1.norm().max(self.v2.norm())
    }

    pub fn is_zero(&self) -> bool {
        self.max_modulus() == 0.0
    }

    /// Scaled so the larger-modulus component is exactly `1`.
    ///
    /// Ties go to the first component. The zero vector is returned unchanged.
    pub fn normalized(&self) -> Vec2 {
        if self.is_zero() {
            return *self;
        }
        if self.v1.norm() >= self.v2.norm() {
            Vec2::new(ONE, self.v2 / self.v1)
        } else {
            Vec2::new(self.v1 / self.v2, ONE)
        }
    }

    /// The 2×2 determinant `|self, other|`.
    pub fn cross(&self, other: &Vec2) -> ComplexValue {
        self.v1 * other.v2 - self.v2 * other.v1
    }
}

/// `|det[a, b]| ≤ tol · ‖a‖∞ · ‖b‖∞`. A zero vector is parallel to anything.
pub fn parallel(a: &Vec2, b: &Vec2, tol: f64) -> bool {
    a.cross(b).norm() <= tol * a.max_modulus() * b.max_modulus()
}

/// Whether `m·v` is parallel to `v`, measured as a backward error:
/// `|det[m·v, v]| ≤ tol · maxentry(m) · ‖v‖∞²`.
pub fn is_eigendirection(m: &Mat2, v: &Vec2, tol: f64) -> bool {
    if v.is_zero() {
        return false;
    }
    m.apply(*v).cross(v).norm() <= tol * m.max_modulus() * v.max_modulus().powi(2)
}

/// Scale-free residual `|det[m·v, v]| / (maxentry(m) · ‖v‖∞²)`.
pub fn eigendirection_residual(m: &Mat2, v: &Vec2) -> f64 {
    let denom = m.max_modulus() * v.max_modulus().powi(2);
    if denom == 0.0 {
        return 0.0;
    }
    m.apply(*v).cross(v).norm() / denom
}

/// Eigenstructure of a 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EigenReport {
    /// A multiple of the identity: every direction is invariant.
    Scalar {
        #[serde(with = "crate::io::complex")]
        eigenvalue: ComplexValue,
    },
    /// Repeated eigenvalue with a single eigendirection.
    Jordan {
        #[serde(with = "crate::io::complex")]
        eigenvalue: ComplexValue,
        direction: Vec2,
    },
    /// Two distinct eigenvalues, each with its own direction.
    Semisimple {
        #[serde(with = "crate::io::complex_pair")]
        eigenvalues: [ComplexValue; 2],
        directions: [Vec2; 2],
    },
}

impl EigenReport {
    pub fn directions(&self) -> Vec<Vec2> {
        match self {
            EigenReport::Scalar { .. } => Vec::new(),
            EigenReport::Jordan { direction, .. } => vec![*direction],
            EigenReport::Semisimple { directions, .. } => directions.to_vec(),
        }
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self, EigenReport::Scalar { .. })
    }
}

/// Kernel direction of a (numerically) rank-one matrix, read off its larger row.
fn null_direction(n: &Mat2) -> Option<Vec2> {
    let row1 = n.a.norm().max(n.b.norm());
    let row2 = n.c.norm().max(n.d.norm());
    let v = if row1 >= row2 {
        Vec2::new(n.b, -n.a)
    } else {
        Vec2::new(n.d, -n.c)
    };
    if v.is_zero() {
        None
    } else {
        Some(v.normalized())
    }
}

/// Classify `m` and return its eigenvalues and normalized eigendirections.
///
/// Eigenvalues come from the characteristic quadratic with the principal root
/// of the discriminant. A root is treated as repeated when
/// `|disc| ≤ tol · maxentry²`.
pub fn eigen_directions(m: &Mat2, tol: f64) -> EigenReport {
    let scale = m.max_modulus();
    let tr = m.trace();
    if scale == 0.0 {
        return EigenReport::Scalar { eigenvalue: ZERO };
    }
    let disc = (m.a - m.d) * (m.a - m.d) + 4.0 * m.b * m.c;
    if disc.norm() <= tol * scale * scale {
        let lambda = tr / 2.0;
        let n = m.shift(lambda);
        return match null_direction(&n) {
            Some(direction) if n.max_modulus() > tol * scale => EigenReport::Jordan {
                eigenvalue: lambda,
                direction,
            },
            _ => EigenReport::Scalar { eigenvalue: lambda },
        };
    }
    let root = principal_sqrt(disc);
    // larger-modulus root first, the other from the determinant to avoid cancellation
    let (plus, minus) = (tr + root, tr - root);
    let big = if plus.norm() >= minus.norm() {
        plus
    } else {
        minus
    } / 2.0;
    let small = if big.norm() == 0.0 {
        (if plus.norm() >= minus.norm() {
            minus
        } else {
            plus
        }) / 2.0
    } else {
        m.det() / big
    };
    let eigenvalues = [big, small];
    let directions = eigenvalues
        .map(|l| null_direction(&m.shift(l)).expect("distinct eigenvalues give a rank-one shift"));
    EigenReport::Semisimple {
        eigenvalues,
        directions,
    }
}

/// All directions that every matrix in `ms` maps to a parallel vector.
///
/// Candidates are the eigendirections of each non-scalar matrix, in list
/// order, deduplicated. If every matrix is scalar, `(1, 0)` is returned.
pub fn common_eigendirections(ms: &[Mat2], tol: f64) -> Vec<Vec2> {
    let reports: Vec<EigenReport> = ms.iter().map(|m| eigen_directions(m, tol)).collect();
    if reports.iter().all(EigenReport::is_scalar) {
        return vec![Vec2::e1()];
    }
    let mut found: Vec<Vec2> = Vec::new();
    for candidate in reports.iter().flat_map(EigenReport::directions) {
        if found.iter().any(|f| parallel(f, &candidate, tol.sqrt())) {
            continue;
        }
        if ms.iter().all(|m| is_eigendirection(m, &candidate, tol)) {
            found.push(candidate);
        }
    }
    found
}

/// First common eigendirection of `ms`, if any.
pub fn common_eigenvector(ms: &[Mat2], tol: f64) -> Option<Vec2> {
    common_eigendirections(ms, tol).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, DEFAULT_TOL};

    fn same_dir(a: Vec2, b: Vec2) -> bool {
        parallel(&a, &b, 1e-12)
    }

    #[test]
    fn products() {
        let i = Mat2::identity();
        assert_eq!(i * i, i);
        let swap = Mat2::from_real(0.0, 1.0, 1.0, 0.0);
        assert_eq!(swap * swap, i);
    }

    #[test]
    fn cayley_hamilton_on_s2() {
        // s2 at x1 = 1, y = (1, 2): [[3, 1], [-2, 0]]
        let s2 = Mat2::from_real(3.0, 1.0, -2.0, 0.0);
        let expected = s2.scale(c(3.0, 0.0)) - Mat2::identity().scale(c(2.0, 0.0));
        assert_eq!(s2 * s2, expected);
        assert_eq!(s2 * s2, Mat2::from_real(7.0, 3.0, -6.0, -2.0));
    }

    #[test]
    fn inverses() {
        let i = Mat2::identity();
        assert_eq!(i.inverse(DEFAULT_TOL).unwrap(), i);
        let d = Mat2::from_real(2.0, 0.0, 0.0, 4.0);
        assert_eq!(
            d.inverse(DEFAULT_TOL).unwrap(),
            Mat2::from_real(0.5, 0.0, 0.0, 0.25)
        );
        let s = Mat2::from_real(1.0, 1.0, 0.0, 0.0);
        assert!(matches!(
            s.inverse(DEFAULT_TOL),
            Err(Error::SingularMatrix { .. })
        ));
        let m = Mat2::new(c(1.0, 2.0), c(-0.5, 0.1), c(3.0, 0.0), c(0.0, -1.0));
        assert!((m * m.inverse(DEFAULT_TOL).unwrap()).approx_eq(&i, 1e-12));
    }

    #[test]
    fn eigen_classification() {
        assert_eq!(
            eigen_directions(&Mat2::identity(), DEFAULT_TOL),
            EigenReport::Scalar {
                eigenvalue: c(1.0, 0.0)
            }
        );
        match eigen_directions(&Mat2::from_real(1.0, 1.0, 0.0, 1.0), DEFAULT_TOL) {
            EigenReport::Jordan {
                eigenvalue,
                direction,
            } => {
                assert_eq!(eigenvalue, c(1.0, 0.0));
                assert!(same_dir(direction, Vec2::e1()));
            }
            other => panic!("expected Jordan, got {other:?}"),
        }
        // s2 at x1 = 1, y = (2, 3): t² − 5t + 6
        let s2 = Mat2::from_real(5.0, 1.0, -6.0, 0.0);
        match eigen_directions(&s2, DEFAULT_TOL) {
            EigenReport::Semisimple {
                eigenvalues,
                directions,
            } => {
                let mut ev: Vec<f64> = eigenvalues.iter().map(|z| z.re).collect();
                ev.sort_by(f64::total_cmp);
                assert!((ev[0] - 2.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
                for (l, v) in eigenvalues.iter().zip(directions.iter()) {
                    // first row of s2 − λ is (5 − λ, 1)
                    let expect = Vec2::new(c(1.0, 0.0), *l - 5.0);
                    assert!(same_dir(*v, expect));
                }
                let ch = s2.shift(eigenvalues[0]) * s2.shift(eigenvalues[1]);
                assert!(ch.max_modulus() < 1e-12);
            }
            other => panic!("expected Semisimple, got {other:?}"),
        }
    }

    #[test]
    fn common_eigenvector_examples() {
        let i = Mat2::identity();
        assert_eq!(common_eigenvector(&[i, i], DEFAULT_TOL), Some(Vec2::e1()));
        // (1, 0) is an eigenvector of both upper-triangular matrices
        let a = Mat2::from_real(1.0, 1.0, 0.0, 2.0);
        let b = Mat2::from_real(3.0, 0.0, 0.0, 4.0);
        let v = common_eigenvector(&[a, b], DEFAULT_TOL).unwrap();
        assert!(same_dir(v, Vec2::e1()));
        let rot = Mat2::from_real(0.0, -1.0, 1.0, 0.0);
        assert_eq!(common_eigenvector(&[a, rot], DEFAULT_TOL), None);
    }

    #[test]
    fn normalization_puts_one_on_the_larger_component() {
        let v = Vec2::new(c(0.0, 2.0), c(1.0, 0.0)).normalized();
        assert_eq!(v.v1, c(1.0, 0.0));
        assert!(approx_eq(v.v2, c(0.0, -0.5), 1e-15));
        let w = Vec2::new(c(0.5, 0.0), c(0.0, -1.0)).normalized();
        assert_eq!(w.v2, c(1.0, 0.0));
    }

    #[test]
    fn nearly_defective_matrix_still_finds_second_direction_through_others() {
        // s1-like upper triangular with x2 − x1 tiny: Jordan by threshold
        let s1 = Mat2::new(c(1.0, 0.0), c(0.7, 0.0), c(0.0, 0.0), c(1.0 + 1e-6, 0.0));
        assert!(matches!(
            eigen_directions(&s1, DEFAULT_TOL),
            EigenReport::Jordan { .. }
        ));
        // eigenvectors (1, 1) and s1's second eigenvector (0.7, 1e-6)
        let t = Mat2::new(c(1.0, 0.0), c(0.7, 0.0), c(1.0, 0.0), c(1e-6, 0.0));
        let tinv = t.inverse(1e-15).unwrap();
        let other = t * Mat2::diag(c(5.0, 0.0), c(-2.0, 0.0)) * tinv;
        let shared = Vec2::new(c(0.7, 0.0), c(1e-6, 0.0));
        assert!(is_eigendirection(&other, &shared, 1e-9));
        let found = common_eigendirections(&[s1, other], DEFAULT_TOL);
        assert!(found.iter().any(|v| same_dir(*v, shared)));
    }
}
