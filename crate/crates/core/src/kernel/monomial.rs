use std::cmp::Ordering;
use std::fmt;

use super::var::{Var, NVARS};

/// A Laurent monomial stored as a dense exponent vector over the variable registry.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [i16; NVARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; NVARS] };

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn var(v: Var) -> Self {
        Self::pow_of(v, 1)
    }

    pub fn pow_of(v: Var, e: i32) -> Self {
        let mut m = Self::ONE;
        m.exps[v.slot()] = e as i16;
        m
    }

    pub fn from_pairs(pairs: &[(Var, i32)]) -> Self {
        let mut m = Self::ONE;
        for &(v, e) in pairs {
            m.exps[v.slot()] += e as i16;
        }
        m
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.exps[v.slot()] as i32
    }

    pub fn set_exp(&mut self, v: Var, e: i32) {
        self.exps[v.slot()] = e as i16;
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i32 {
        self.exps.iter().map(|&e| e as i32).sum()
    }

    /// Nonzero exponents in registry order.
    pub fn pairs(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(s, &e)| (Var::from_slot(s), e as i32))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a += *b;
        }
        m
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a -= *b;
        }
        m
    }

    pub fn inv(&self) -> Monomial {
        let mut m = *self;
        for a in m.exps.iter_mut() {
            *a = -*a;
        }
        m
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut m = *self;
        for a in m.exps.iter_mut() {
            *a *= k as i16;
        }
        m
    }

    /// True when every exponent of `self` is at least the matching exponent of `other`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a >= b)
    }

    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(*b);
        }
        m
    }

    pub fn join(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
        }
        m
    }

    /// Drop every variable for which `keep` is false.
    pub fn restrict(&self, keep: impl Fn(Var) -> bool) -> Monomial {
        let mut m = *self;
        for (s, a) in m.exps.iter_mut().enumerate() {
            if !keep(Var::from_slot(s)) {
                *a = 0;
            }
        }
        m
    }

    /// Sum of exponents over the variables selected by `sel`.
    pub fn partial_degree(&self, sel: impl Fn(Var) -> bool) -> i32 {
        self.pairs().filter(|(v, _)| sel(*v)).map(|(_, e)| e).sum()
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::ONE
    }
}

/// Graded lexicographic order: total degree first, then the exponent of the
/// earliest variable in registry order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.pairs() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex() {
        let x1 = Monomial::var(Var::X(1));
        let x2 = Monomial::var(Var::X(2));
        assert!(x1 > x2);
        assert!(x2.pow(2) > x1);
        assert!(Monomial::one() < x2);
        assert!(x1.mul(&x2) < x1.pow(2));
    }

    #[test]
    fn arithmetic() {
        let m = Monomial::from_pairs(&[(Var::Q, 2), (Var::X(3), -1)]);
        assert_eq!(m.mul(&m.inv()), Monomial::one());
        assert_eq!(m.degree(), 1);
        assert_eq!(m.to_string(), "q^2 x3^-1");
        assert!(m.divisible_by(&Monomial::from_pairs(&[(Var::Q, 1), (Var::X(3), -2)])));
    }
}
