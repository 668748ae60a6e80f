use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::poly::{LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials. No canonical reduced form is kept;
/// equality is by cross-multiplication.
#[derive(Clone)]
pub struct Fraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Dividing `a` by `b` only when both are small enough for a cheap attempt.
fn try_div(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if a.len() > 400 || b.len() > 400 {
        return None;
    }
    a.div_exact(b).ok()
}

impl Fraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Fraction { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = den.as_term() {
            return Fraction { num: num.mul_term(&m.inv(), &c.recip()), den: LaurentPoly::one() };
        }
        let (mn, num) = num.strip_monomial();
        let (md, den) = den.strip_monomial();
        let shift = mn.div(&md);
        let (num, den) = if den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            (-num, -den)
        } else {
            (num, den)
        };
        let num = num.mul_mono(&shift);
        if let Some(q) = try_div(&num, &den) {
            return Fraction { num: q, den: LaurentPoly::one() };
        }
        Fraction { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator divides the numerator.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.div_exact(&self.den).ok()
    }

    pub fn recip(&self) -> Result<Self> {
        Fraction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i32) -> Self {
        if k >= 0 {
            Self::normalized(self.num.pow(k as u32), self.den.pow(k as u32))
        } else {
            Self::normalized(self.den.pow((-k) as u32), self.num.pow((-k) as u32))
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Fraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        if let Some(q) = try_div(&self.den, p).filter(|_| !self.den.is_one()) {
            return Self::normalized(self.num.clone(), q);
        }
        Self::normalized(&self.num * p, self.den.clone())
    }

    pub fn div_poly(&self, p: &LaurentPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if let Some(q) = try_div(&self.num, p) {
            return Ok(Self::normalized(q, self.den.clone()));
        }
        Ok(Self::normalized(self.num.clone(), &self.den * p))
    }

    pub fn checked_div(&self, other: &Fraction) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::NonExactDivision);
        }
        Ok(self * &Fraction { num: other.den.clone(), den: other.num.clone() })
    }

    pub fn sum<I: IntoIterator<Item = Fraction>>(iter: I) -> Self {
        let mut acc = Fraction::zero();
        for f in iter {
            acc = &acc + &f;
        }
        acc
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Fraction {}

impl From<LaurentPoly> for Fraction {
    fn from(p: LaurentPoly) -> Self {
        Fraction::from_poly(p)
    }
}

impl Add<&Fraction> for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Fraction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if let Some(k) = try_div(&rhs.den, &self.den) {
            return Fraction::normalized(&(&self.num * &k) + &rhs.num, rhs.den.clone());
        }
        if let Some(k) = try_div(&self.den, &rhs.den) {
            return Fraction::normalized(&self.num + &(&rhs.num * &k), self.den.clone());
        }
        Fraction::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub<&Fraction> for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self + &(-rhs)
    }
}

impl Mul<&Fraction> for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        if self.is_zero() || rhs.is_zero() {
            return Fraction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Fraction::from_poly(&self.num * &rhs.num);
        }
        if let Some(a) = try_div(&self.num, &rhs.den) {
            return Fraction::normalized(&a * &rhs.num, self.den.clone());
        }
        if let Some(b) = try_div(&rhs.num, &self.den) {
            return Fraction::normalized(&self.num * &b, rhs.den.clone());
        }
        Fraction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&Fraction> for &Fraction {
    type Output = Fraction;
    fn div(self, rhs: &Fraction) -> Fraction {
        self.checked_div(rhs).expect("division by zero fraction")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Fraction> for Fraction {
            type Output = Fraction;
            fn $f(self, rhs: Fraction) -> Fraction {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Fraction> for Fraction {
            type Output = Fraction;
            fn $f(self, rhs: &Fraction) -> Fraction {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        -&self
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Default for Fraction {
    fn default() -> Self {
        Fraction::zero()
    }
}

impl Fraction {
    pub fn is_one(&self) -> bool {
        self.num == self.den || (self.den.is_one() && self.num.as_constant().map(|c| c.is_one()).unwrap_or(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::monomial::Monomial;
    use crate::kernel::var::Var;

    fn v(x: Var) -> LaurentPoly {
        LaurentPoly::var(x)
    }

    #[test]
    fn cross_multiplication_equality() {
        let x1 = v(Var::X(1));
        let x2 = v(Var::X(2));
        let a = Fraction::new(x1.clone(), x2.clone()).unwrap();
        let b = Fraction::new(&x1 * &x2, x2.pow(2)).unwrap();
        assert_eq!(a, b);
        let one = LaurentPoly::one();
        let t = v(Var::T);
        let c = Fraction::new(one.clone(), &one - &t).unwrap();
        let d = Fraction::new(&one + &t, &one - &t.pow(2)).unwrap();
        assert_eq!(c, d);
        let q = v(Var::Q);
        let e = Fraction::new(q.clone(), t.clone()).unwrap();
        let f = Fraction::new(t.clone(), q.clone()).unwrap();
        assert_ne!(e, f);
    }

    #[test]
    fn arithmetic() {
        let one = LaurentPoly::one();
        let t = v(Var::T);
        let a = Fraction::new(one.clone(), &one - &t).unwrap();
        let b = Fraction::new(t.clone(), &one - &t).unwrap();
        assert_eq!(&a - &b, Fraction::one());
        let m = Monomial::var(Var::Q);
        let c = Fraction::new(LaurentPoly::mono(m), &one + &t).unwrap();
        assert_eq!(&(&c * &c.recip().unwrap()), &Fraction::one());
    }
}
