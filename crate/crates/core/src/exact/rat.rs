use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ext::ExtElem;
use super::poly::{forward_owned, Polynomial, Var};
use super::AlgebraError;

/// Quotient `num / den` of extension-ring elements, `den ≠ 0`.
///
/// No cancellation is ever performed; equality is decided by
/// cross-multiplication, which is sound because the extension ring is an
/// integral domain.
#[derive(Debug, Clone)]
pub struct RatElem {
    num: ExtElem,
    den: ExtElem,
}

impl RatElem {
    pub fn new(num: impl Into<ExtElem>, den: impl Into<ExtElem>) -> Result<Self, AlgebraError> {
        let den = den.into();
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatElem {
            num: num.into(),
            den,
        })
    }

    pub fn zero() -> Self {
        RatElem::from(ExtElem::zero())
    }

    pub fn one() -> Self {
        RatElem::from(ExtElem::one())
    }

    pub fn r() -> Self {
        RatElem::from(ExtElem::r())
    }

    pub fn var(v: Var) -> Self {
        RatElem::from(ExtElem::var(v))
    }

    pub fn constant(c: i64) -> Self {
        RatElem::from(ExtElem::constant(c))
    }

    pub fn num(&self) -> &ExtElem {
        &self.num
    }

    pub fn den(&self) -> &ExtElem {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn inv(&self) -> Result<RatElem, AlgebraError> {
        RatElem::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatElem) -> Result<RatElem, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    /// `r ↦ −r` applied to numerator and denominator.
    pub fn conjugate(&self) -> RatElem {
        RatElem {
            num: self.num.conjugate(),
            den: self.den.conjugate(),
        }
    }

    /// Equivalent fraction with an `r`-free denominator.
    pub fn rationalized(&self) -> RatElem {
        if self.den.q.is_zero() {
            return self.clone();
        }
        let conj = self.den.conjugate();
        RatElem {
            num: &self.num * &conj,
            den: ExtElem::from(self.den.norm()),
        }
    }

    pub fn pow(&self, n: u32) -> RatElem {
        RatElem {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }
}

impl From<ExtElem> for RatElem {
    fn from(num: ExtElem) -> Self {
        RatElem {
            num,
            den: ExtElem::one(),
        }
    }
}

impl From<Polynomial> for RatElem {
    fn from(p: Polynomial) -> Self {
        RatElem::from(ExtElem::from(p))
    }
}

impl From<Var> for RatElem {
    fn from(v: Var) -> Self {
        RatElem::var(v)
    }
}

impl From<i64> for RatElem {
    fn from(c: i64) -> Self {
        RatElem::constant(c)
    }
}

/// Cross-multiplied equality: `a/b = c/d ⇔ a·d = c·b`.
impl PartialEq for RatElem {
    fn eq(&self, other: &RatElem) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<'a> Add<&'a RatElem> for &'a RatElem {
    type Output = RatElem;
    fn add(self, rhs: &RatElem) -> RatElem {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatElem {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RatElem {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RatElem {
    type Output = RatElem;
    fn neg(self) -> RatElem {
        RatElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatElem {
    type Output = RatElem;
    fn neg(self) -> RatElem {
        -&self
    }
}

impl<'a> Sub<&'a RatElem> for &'a RatElem {
    type Output = RatElem;
    fn sub(self, rhs: &RatElem) -> RatElem {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatElem> for &'a RatElem {
    type Output = RatElem;
    fn mul(self, rhs: &RatElem) -> RatElem {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatElem::zero();
        }
        let mul_den = |a: &ExtElem, b: &ExtElem| {
            if a.is_one() {
                b.clone()
            } else if b.is_one() {
                a.clone()
            } else {
                a * b
            }
        };
        RatElem {
            num: &self.num * &rhs.num,
            den: mul_den(&self.den, &rhs.den),
        }
    }
}

forward_owned!(RatElem, Add add, Sub sub, Mul mul);

impl fmt::Display for RatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}
