//! Exact arithmetic with the adjoined root r: w factors as alpha*beta, and
//! substituting case (i) makes alpha vanish for one root only.

use hecke_g7::exact::{substitute, Assignment, Polynomial, RatElem, Var};
use hecke_g7::identities::{alpha_expr, beta_expr, w_expr};

/// `(w == alpha*beta, alpha vanishes at +root, alpha vanishes at -root)`.
pub fn run_example() -> (bool, bool, bool) {
    let w = w_expr();
    let factored = &alpha_expr() * &beta_expr();
    let root = Polynomial::monomial(1, &[(Var::X2, 1), (Var::Y1, 1), (Var::Z1, 1)]);
    let x1_image = RatElem::new(
        root.clone(),
        Polynomial::monomial(1, &[(Var::Y2, 1), (Var::Z2, 1)]),
    )
    .expect("nonzero denominator");
    let assignment = Assignment::from([(Var::X1, x1_image)]);
    let alpha_at = |r: RatElem| {
        substitute(&alpha_expr(), &assignment, &r)
            .expect("root squares to the image of x1*x2*y1*y2*z1*z2")
            .is_zero()
    };
    let plus = alpha_at(RatElem::from(root.clone()));
    let minus = alpha_at(-RatElem::from(root));
    (w == factored, plus, minus)
}

fn main() {
    let (factors, plus, minus) = run_example();
    println!("w = alpha*beta: {factors}");
    println!("alpha = 0 with r = +x2*y1*z1: {plus}");
    println!("alpha = 0 with r = -x2*y1*z1: {minus}");
    println!("alpha = {}", alpha_expr());
}
