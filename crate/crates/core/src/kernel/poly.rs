use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::var::Var;
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sparse Laurent polynomial with rational coefficients.
///
/// Terms are kept sorted ascending in graded lexicographic order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, Rational)>,
}

/// Value assigned to a variable by [`LaurentPoly::substitute`]: `coeff * mono`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Value {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl Value {
    pub fn num(r: Rational) -> Self {
        Value { coeff: r, mono: Monomial::one() }
    }

    pub fn int(n: i64) -> Self {
        Self::num(int(n))
    }

    pub fn mono(m: Monomial) -> Self {
        Value { coeff: Rational::one(), mono: m }
    }

    pub fn scaled(c: Rational, m: Monomial) -> Self {
        Value { coeff: c, mono: m }
    }

    pub fn var(v: Var) -> Self {
        Self::mono(Monomial::var(v))
    }
}

fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, c) in &b[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    out
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn mono(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::mono(Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::mono(Monomial::pow_of(v, e))
    }

    /// `1 - m`.
    pub fn one_minus(m: Monomial) -> Self {
        Self::one() - Self::mono(m)
    }

    /// Build from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut map: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&m) {
                Some(x) => *x += c,
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(map)
    }

    fn from_map(map: FxHashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    fn from_sorted(terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// The single term of a monomial-times-constant polynomial.
    pub fn as_term(&self) -> Option<(Monomial, Rational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c.clone())),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Monomial) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn product<'a, I: IntoIterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        let mut acc = Self::one();
        for p in iter {
            acc = &acc * p;
        }
        acc
    }

    pub fn sum<I: IntoIterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut map: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for p in iter {
            for (m, c) in p.terms {
                match map.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(map)
    }

    /// Componentwise minimum and maximum exponents over all terms.
    pub fn exponent_bounds(&self) -> Option<(Monomial, Monomial)> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        let (mut lo, mut hi) = (first, first);
        for (m, _) in it {
            lo = lo.meet(m);
            hi = hi.join(m);
        }
        Some((lo, hi))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut out: Vec<Var> = Vec::new();
        for (m, _) in &self.terms {
            for (v, _) in m.pairs() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out.sort();
        out
    }

    /// Apply a monomial map termwise (e.g. a permutation of variables).
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Rename variables: every occurrence of `from[i]` becomes `to[i]` simultaneously.
    pub fn rename(&self, pairs: &[(Var, Var)]) -> Self {
        self.map_monomials(|m| {
            let mut out = *m;
            for &(a, _) in pairs {
                out.set_exp(a, 0);
            }
            let mut extra = Monomial::one();
            for &(a, b) in pairs {
                extra = extra.mul(&Monomial::pow_of(b, m.exp(a)));
            }
            out.mul(&extra)
        })
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: Var, e: i32) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.exp(v) == e).map(|(m, c)| {
            let mut k = *m;
            k.set_exp(v, 0);
            (k, c.clone())
        }))
    }

    pub fn min_exp(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).min()
    }

    pub fn max_exp(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    /// Substitute values for variables; variables not assigned are kept.
    pub fn substitute(&self, assign: &[(Var, Value)]) -> Result<Self> {
        let mut out: FxHashMap<Monomial, Rational> = FxHashMap::default();
        let mut pow_cache: FxHashMap<(usize, i32), (Rational, Monomial)> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = *m;
            for (idx, (v, val)) in assign.iter().enumerate() {
                let e = m.exp(*v);
                if e == 0 {
                    continue;
                }
                mono.set_exp(*v, 0);
                if val.coeff.is_zero() {
                    if e < 0 {
                        return Err(Error::ZeroSubstitutionIntoNegativePower(v.to_string()));
                    }
                    coeff = Rational::zero();
                    break;
                }
                let (pc, pm) = pow_cache
                    .entry((idx, e))
                    .or_insert_with(|| {
                        let c = if e >= 0 {
                            num_traits::pow(val.coeff.clone(), e as usize)
                        } else {
                            num_traits::pow(val.coeff.recip(), (-e) as usize)
                        };
                        (c, val.mono.pow(e))
                    })
                    .clone();
                coeff *= pc;
                mono = mono.mul(&pm);
            }
            if coeff.is_zero() {
                continue;
            }
            match out.get_mut(&mono) {
                Some(x) => *x += coeff,
                None => {
                    out.insert(mono, coeff);
                }
            }
        }
        Ok(Self::from_map(out))
    }

    /// Substitute polynomials for variables, which must occur with nonnegative exponents.
    pub fn compose(&self, assign: &[(Var, LaurentPoly)]) -> Result<Self> {
        let mut pows: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one()]; assign.len()];
        let mut out: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut factor = LaurentPoly::constant(c.clone());
            for (idx, (v, p)) in assign.iter().enumerate() {
                let e = m.exp(*v);
                if e == 0 {
                    continue;
                }
                if e < 0 {
                    return Err(Error::NegativeExponent(v.to_string()));
                }
                rest.set_exp(*v, 0);
                let table = &mut pows[idx];
                while table.len() <= e as usize {
                    let next = table.last().expect("nonempty") * p;
                    table.push(next);
                }
                factor = &factor * &table[e as usize];
            }
            for (fm, fc) in factor.terms {
                let key = fm.mul(&rest);
                match out.get_mut(&key) {
                    Some(x) => *x += fc,
                    None => {
                        out.insert(key, fc);
                    }
                }
            }
        }
        Ok(Self::from_map(out))
    }

    /// Evaluate completely at rational values; fails if a variable is missing.
    pub fn eval(&self, assign: &[(Var, Rational)]) -> Result<Rational> {
        let vals: Vec<(Var, Value)> = assign.iter().map(|(v, r)| (*v, Value::num(r.clone()))).collect();
        let p = self.substitute(&vals)?;
        p.as_constant()
            .ok_or_else(|| Error::Parse(format!("unassigned variables {:?}", p.vars())))
    }

    /// Exact quotient `self / b`; fails when `b` does not divide `self`.
    pub fn div_exact(&self, b: &LaurentPoly) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((m, c)) = b.as_term() {
            return Ok(self.mul_term(&m.inv(), &c.recip()));
        }
        let (blo, _) = b.exponent_bounds().unwrap();
        let (alo, _) = self.exponent_bounds().unwrap();
        let bp = b.mul_mono(&blo.inv());
        let (lm, lc) = bp.leading().cloned().unwrap();
        let lc_inv = lc.recip();
        let mut rem: BTreeMap<Monomial, Rational> =
            self.terms.iter().map(|(m, c)| (m.div(&alo), c.clone())).collect();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.pop_last() {
            if !rm.divisible_by(&lm) {
                return Err(Error::NonExactDivision);
            }
            let qm = rm.div(&lm);
            let qc = &rc * &lc_inv;
            for (bm, bc) in &bp.terms[..bp.terms.len() - 1] {
                let m = bm.mul(&qm);
                let delta = &qc * bc;
                match rem.get_mut(&m) {
                    Some(x) => {
                        *x -= delta;
                        if x.is_zero() {
                            rem.remove(&m);
                        }
                    }
                    None => {
                        rem.insert(m, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        let shift = alo.div(&blo);
        Ok(LaurentPoly::from_sorted(quot).mul_mono(&shift))
    }

    /// Remove a common monomial factor, normalizing the lowest exponents to zero.
    pub fn strip_monomial(&self) -> (Monomial, Self) {
        match self.exponent_bounds() {
            None => (Monomial::one(), Self::zero()),
            Some((lo, _)) => (lo, self.mul_mono(&lo.inv())),
        }
    }

    pub fn is_symmetric_in(&self, vars: &[Var]) -> bool {
        vars.windows(2).all(|w| self.rename(&[(w[0], w[1]), (w[1], w[0])]) == *self)
    }

    pub fn leading_coeff_sign(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    /// Homogeneous component of the given total degree in the selected variables.
    pub fn component(&self, sel: impl Fn(Var) -> bool, d: i32) -> Self {
        Self::from_sorted(
            self.terms
                .iter()
                .filter(|(m, _)| m.partial_degree(&sel) == d)
                .cloned()
                .collect(),
        )
    }
}

fn mul_polys(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() <= 4 {
        let mut acc: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in &small.terms {
            let shifted: Vec<_> = big.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect();
            acc = if acc.is_empty() { shifted } else { merge(&acc, &shifted, false) };
        }
        return LaurentPoly::from_sorted(acc);
    }
    let mut map: FxHashMap<Monomial, Rational> =
        FxHashMap::with_capacity_and_hasher(big.len() * 2, Default::default());
    for (m1, c1) in &small.terms {
        for (m2, c2) in &big.terms {
            let m = m1.mul(m2);
            let c = c1 * c2;
            match map.get_mut(&m) {
                Some(x) => *x += c,
                None => {
                    map.insert(m, c);
                }
            }
        }
    }
    LaurentPoly::from_map(map)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_sorted(merge(&self.terms, &rhs.terms, false))
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_sorted(merge(&self.terms, &rhs.terms, true))
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_polys(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.is_zero() {
            *self = rhs;
        } else {
            *self += &rhs;
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::mono(m)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::from_int(n)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// `[n]_u = 1 + u + … + u^{n-1}` for a monomial `u`.
pub fn qint(n: usize, u: &Monomial) -> LaurentPoly {
    LaurentPoly::from_terms((0..n).map(|k| (u.pow(k as i32), Rational::one())))
}

/// `[n]_u! = [1]_u [2]_u … [n]_u`.
pub fn qfactorial(n: usize, u: &Monomial) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = &acc * &qint(k, u);
    }
    acc
}
