//! Exact arithmetic in `ℤ[x1, x2, y1, y2, z1, z2]` with the root
//! `r = √(x1x2y1y2z1z2)` adjoined, and in its fraction field.
//!
//! * [`Polynomial`]: sparse integer polynomials.
//! * [`ExtElem`]: `p + q·r` with `r²` rewritten on every product.
//! * [`RatElem`]: quotients of `ExtElem`, compared by cross-multiplication.
//!
//! [`substitute`] applies a ring homomorphism given by images of the
//! variables and of `r`; [`eval_numeric`] bridges to complex numbers.

mod ext;
mod poly;
mod rat;

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

pub use ext::ExtElem;
pub use poly::{Monomial, Polynomial, Var};
pub use rat::RatElem;

use crate::numerics::{approx_eq, ComplexValue, DEFAULT_TOL, SELF_CHECK_TOL};
use crate::params::Params;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("image of r does not square to the image of x1*x2*y1*y2*z1*z2")]
    InconsistentRootImage,
    #[error("denominator vanishes")]
    DenominatorVanishes,
}

/// Variable images for [`substitute`]; variables not listed map to themselves.
pub type Assignment = BTreeMap<Var, RatElem>;

fn ext_pows(base: &ExtElem, n: u8) -> Vec<ExtElem> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(ExtElem::one());
    for i in 0..n as usize {
        let next = &out[i] * base;
        out.push(next);
    }
    out
}

/// Image of a polynomial as a single fraction whose denominator is
/// `∏ den_v^{deg_v(p)}` over the assigned variables.
fn polynomial_image(p: &Polynomial, assignment: &Assignment) -> RatElem {
    if p.is_zero() {
        return RatElem::zero();
    }
    struct Image {
        var: Var,
        num_pows: Vec<ExtElem>,
        den_pows: Vec<ExtElem>,
        degree: u8,
    }
    let images: Vec<Image> = assignment
        .iter()
        .filter(|(v, _)| p.degree_in(**v) > 0)
        .map(|(v, img)| {
            let degree = p.degree_in(*v);
            Image {
                var: *v,
                num_pows: ext_pows(img.num(), degree),
                den_pows: ext_pows(img.den(), degree),
                degree,
            }
        })
        .collect();

    let mut num = ExtElem::zero();
    for (m, c) in p.terms() {
        let mut free = *m;
        for img in &images {
            free.0[img.var.index()] = 0;
        }
        let mut t = ExtElem::from(Polynomial::term(c.clone(), free));
        for img in &images {
            let e = m.exponent(img.var);
            t = &t * &img.num_pows[e as usize];
            let rest = img.degree - e;
            if rest > 0 {
                t = &t * &img.den_pows[rest as usize];
            }
        }
        num = &num + &t;
    }
    let den = images.iter().fold(ExtElem::one(), |acc, img| {
        &acc * &img.den_pows[img.degree as usize]
    });
    RatElem::new(num, den).expect("product of nonzero denominators in an integral domain")
}

fn ext_image(e: &ExtElem, assignment: &Assignment, r_image: &RatElem) -> RatElem {
    let p = polynomial_image(&e.p, assignment);
    if e.q.is_zero() {
        return p;
    }
    let q = polynomial_image(&e.q, assignment);
    &p + &(&q * r_image)
}

/// Apply the homomorphism `v ↦ assignment[v]`, `r ↦ r_image`.
///
/// `r_image²` must equal the image of `Δ` (else `InconsistentRootImage`);
/// a denominator that maps to zero gives `DenominatorVanishes`.
pub fn substitute(
    e: &RatElem,
    assignment: &Assignment,
    r_image: &RatElem,
) -> Result<RatElem, AlgebraError> {
    let delta_image = polynomial_image(&Polynomial::delta(), assignment);
    if r_image * r_image != delta_image {
        return Err(AlgebraError::InconsistentRootImage);
    }
    let num = ext_image(e.num(), assignment, r_image);
    let den = ext_image(e.den(), assignment, r_image);
    if den.is_zero() {
        return Err(AlgebraError::DenominatorVanishes);
    }
    num.checked_div(&den)
}

fn eval_polynomial(p: &Polynomial, params: &Params) -> (ComplexValue, f64) {
    let mut value = ComplexValue::new(0.0, 0.0);
    let mut magnitude = 0.0;
    for (m, c) in p.terms() {
        let mut t = ComplexValue::new(c.to_f64().expect("coefficient fits f64"), 0.0);
        for v in Var::ALL {
            let e = m.exponent(v);
            if e > 0 {
                t *= params.get(v).powi(e as i32);
            }
        }
        magnitude += t.norm();
        value += t;
        debug_assert!(c.abs().to_f64().is_some());
    }
    (value, magnitude)
}

fn eval_ext(e: &ExtElem, params: &Params, r_value: ComplexValue) -> (ComplexValue, f64) {
    let (p, mp) = eval_polynomial(&e.p, params);
    let (q, mq) = eval_polynomial(&e.q, params);
    (p + q * r_value, mp + mq * r_value.norm())
}

/// Complex value of `e` at `params` with `r = r_value`.
///
/// `r_value²` must match `Δ(params)` to `1e−9` relative. The denominator is
/// considered vanishing when it cancels to below `1e−12` of the sum of its
/// term magnitudes.
pub fn eval_numeric(
    e: &RatElem,
    params: &Params,
    r_value: ComplexValue,
) -> Result<ComplexValue, AlgebraError> {
    if !approx_eq(r_value * r_value, params.delta(), DEFAULT_TOL) {
        return Err(AlgebraError::InconsistentRootImage);
    }
    let (den, mag) = eval_ext(e.den(), params, r_value);
    if den.norm() <= SELF_CHECK_TOL * mag {
        return Err(AlgebraError::DenominatorVanishes);
    }
    let (num, _) = eval_ext(e.num(), params, r_value);
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c, principal_sqrt};
    use Var::*;

    fn x(v: Var) -> RatElem {
        RatElem::var(v)
    }

    #[test]
    fn identity_substitution_fixes_r() {
        let r = RatElem::r();
        assert_eq!(substitute(&r, &Assignment::new(), &r).unwrap(), r);
    }

    #[test]
    fn substituting_x1_squares_delta() {
        // x1 ↦ x2 y1 z1 / (y2 z2): Δ ↦ x2² y1² z1²
        let image = RatElem::new(
            Polynomial::monomial(1, &[(X2, 1), (Y1, 1), (Z1, 1)]),
            Polynomial::monomial(1, &[(Y2, 1), (Z2, 1)]),
        )
        .unwrap();
        let root = RatElem::from(Polynomial::monomial(1, &[(X2, 1), (Y1, 1), (Z1, 1)]));
        let assignment = Assignment::from([(X1, image)]);
        let got = substitute(&RatElem::from(Polynomial::delta()), &assignment, &root).unwrap();
        assert_eq!(got, root.pow(2));
        let wrong_root = RatElem::from(Polynomial::monomial(1, &[(X2, 1), (Y1, 1)]));
        assert_eq!(
            substitute(&RatElem::r(), &assignment, &wrong_root).unwrap_err(),
            AlgebraError::InconsistentRootImage
        );
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        // 1/(x1 − x2) under x1 ↦ x2; y1 ↦ y2, z1 ↦ z2 give r the image x2 y2 z2
        let e = (x(X1) - x(X2)).inv().unwrap();
        let assignment = Assignment::from([(X1, x(X2)), (Y1, x(Y2)), (Z1, x(Z2))]);
        let root = RatElem::from(Polynomial::monomial(1, &[(X2, 1), (Y2, 1), (Z2, 1)]));
        assert_eq!(
            substitute(&e, &assignment, &root).unwrap_err(),
            AlgebraError::DenominatorVanishes
        );
    }

    #[test]
    fn numeric_evaluation() {
        let p = Params::from_real([1.0, 2.0, 2.0, 1.5, 3.0, 0.5]).unwrap();
        let r = principal_sqrt(p.delta());
        let sum = &x(X1) + &x(Y1);
        assert_eq!(eval_numeric(&sum, &p, r).unwrap(), c(3.0, 0.0));
        let rr = &RatElem::r() * &RatElem::r();
        assert!(approx_eq(
            eval_numeric(&rr, &p, r).unwrap(),
            p.delta(),
            1e-14
        ));
        let bad = (x(X2) - RatElem::constant(2)).inv().unwrap();
        assert_eq!(
            eval_numeric(&bad, &p, r).unwrap_err(),
            AlgebraError::DenominatorVanishes
        );
        assert_eq!(
            eval_numeric(&sum, &p, r + 1.0).unwrap_err(),
            AlgebraError::InconsistentRootImage
        );
    }
}
