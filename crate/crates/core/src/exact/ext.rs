use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::poly::{forward_owned, Polynomial, Var};

/// `p + q·r` in `ℤ[x1, x2, y1, y2, z1, z2][r] / (r² − Δ)`, `Δ = x1x2y1y2z1z2`.
///
/// Every product rewrites `r²` to `Δ`, so the representation is always of
/// `r`-degree at most one and structural equality is ring equality. `Δ` is
/// not a square, so this ring is an integral domain.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtElem {
    pub p: Polynomial,
    pub q: Polynomial,
}

impl ExtElem {
    pub fn new(p: Polynomial, q: Polynomial) -> Self {
        ExtElem { p, q }
    }

    pub fn zero() -> Self {
        ExtElem::default()
    }

    pub fn one() -> Self {
        ExtElem::from(Polynomial::one())
    }

    /// The adjoined root `r`.
    pub fn r() -> Self {
        ExtElem::new(Polynomial::zero(), Polynomial::one())
    }

    pub fn var(v: Var) -> Self {
        ExtElem::from(Polynomial::var(v))
    }

    pub fn constant(c: i64) -> Self {
        ExtElem::from(Polynomial::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.p.is_one() && self.q.is_zero()
    }

    /// Image under `r ↦ −r`, the nontrivial automorphism.
    pub fn conjugate(&self) -> ExtElem {
        ExtElem::new(self.p.clone(), -&self.q)
    }

    /// `self · conjugate(self) = p² − q²Δ`, an `r`-free polynomial.
    pub fn norm(&self) -> Polynomial {
        &(&self.p * &self.p) - &(&(&self.q * &self.q) * &Polynomial::delta())
    }

    pub fn scale(&self, c: &BigInt) -> ExtElem {
        ExtElem::new(self.p.scale(c), self.q.scale(c))
    }

    pub fn pow(&self, n: u32) -> ExtElem {
        let mut acc = ExtElem::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl From<Polynomial> for ExtElem {
    fn from(p: Polynomial) -> Self {
        ExtElem::new(p, Polynomial::zero())
    }
}

impl From<Var> for ExtElem {
    fn from(v: Var) -> Self {
        ExtElem::var(v)
    }
}

impl From<i64> for ExtElem {
    fn from(c: i64) -> Self {
        ExtElem::constant(c)
    }
}

impl<'a> Add<&'a ExtElem> for &'a ExtElem {
    type Output = ExtElem;
    fn add(self, rhs: &ExtElem) -> ExtElem {
        ExtElem::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl<'a> Sub<&'a ExtElem> for &'a ExtElem {
    type Output = ExtElem;
    fn sub(self, rhs: &ExtElem) -> ExtElem {
        ExtElem::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

/// `(p1 + q1 r)(p2 + q2 r) = (p1 p2 + q1 q2 Δ) + (p1 q2 + p2 q1) r`
impl<'a> Mul<&'a ExtElem> for &'a ExtElem {
    type Output = ExtElem;
    fn mul(self, rhs: &ExtElem) -> ExtElem {
        let qq = &self.q * &rhs.q;
        let p = if qq.is_zero() {
            &self.p * &rhs.p
        } else {
            &(&self.p * &rhs.p) + &(&qq * &Polynomial::delta())
        };
        let q = &(&self.p * &rhs.q) + &(&rhs.p * &self.q);
        ExtElem::new(p, q)
    }
}

impl Neg for &ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        ExtElem::new(-&self.p, -&self.q)
    }
}

impl Neg for ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        -&self
    }
}

forward_owned!(ExtElem, Add add, Sub sub, Mul mul);

/// `p` alone when `q = 0`, otherwise `(p) + (q)*r`.
impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) if self.q.is_one() => f.write_str("r"),
            (true, false) => write!(f, "({})*r", self.q),
            (false, false) => write!(f, "({}) + ({})*r", self.p, self.q),
        }
    }
}
