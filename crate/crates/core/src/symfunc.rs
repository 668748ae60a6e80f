//! Symmetric functions in the power-sum basis with coefficients in Q(q,t).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{int, rat, Fraction, LaurentPoly, Monomial, Var};

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> u64 {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_default() += 1;
        }
        counts
            .iter()
            .map(|(&i, &m)| (i as u64).pow(m as u32) * (1..=m).product::<u64>())
            .product()
    }

    /// All partitions of `n`, largest first part first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse(format!("bad partition `{s}`")));
        }
        Ok(Partition::new(parts))
    }
}

/// `Σ c_λ p_λ`.
#[derive(Clone, Default)]
pub struct SymFunc {
    coeffs: BTreeMap<Partition, Fraction>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    pub fn p(lambda: Partition) -> Self {
        Self::term(lambda, Fraction::one())
    }

    pub fn p_r(r: usize) -> Self {
        Self::p(Partition::new(vec![r]))
    }

    pub fn term(lambda: Partition, c: Fraction) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(lambda, c);
        }
        SymFunc { coeffs }
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Fraction> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Fraction {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Fraction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert_add(&mut self, lambda: Partition, c: Fraction) {
        let entry = self.coeffs.remove(&lambda).unwrap_or_else(Fraction::zero);
        let s = &entry + &c;
        if !s.is_zero() {
            self.coeffs.insert(lambda, s);
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.insert_add(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&Fraction::constant(int(-1))))
    }

    pub fn scale(&self, c: &Fraction) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l, x) in &self.coeffs {
            out.insert_add(l.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l, a) in &self.coeffs {
            for (m, b) in &other.coeffs {
                out.insert_add(l.union(m), a * b);
            }
        }
        out
    }

    /// Replace each `p_r` by `factor(r) p_r`, multiplicatively.
    pub fn map_diagonal(&self, factor: impl Fn(usize) -> Fraction) -> SymFunc {
        let mut cache: BTreeMap<usize, Fraction> = BTreeMap::new();
        let mut out = SymFunc::zero();
        for (l, c) in &self.coeffs {
            let mut f = c.clone();
            for &r in l.parts() {
                let fr = cache.entry(r).or_insert_with(|| factor(r)).clone();
                f = &f * &fr;
            }
            out.insert_add(l.clone(), f);
        }
        out
    }

    pub fn apply(&self, s: &Plethysm) -> Result<SymFunc> {
        s.validate()?;
        Ok(self.map_diagonal(|r| s.factor(r)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(l, c)| {
                    serde_json::json!({
                        "partition": l.parts(),
                        "num": c.num().to_json(),
                        "den": c.den().to_json(),
                    })
                })
                .collect(),
        )
    }
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        let keys: std::collections::BTreeSet<&Partition> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) p[{l}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `e_n` by Newton's identity `n e_n = Σ_{i=1}^n (-1)^{i-1} e_{n-i} p_i`.
pub fn elementary(n: usize) -> SymFunc {
    newton(n, true)
}

/// `h_n` by Newton's identity `n h_n = Σ_{i=1}^n h_{n-i} p_i`.
pub fn complete(n: usize) -> SymFunc {
    newton(n, false)
}

fn newton(n: usize, alternating: bool) -> SymFunc {
    let mut seq = vec![SymFunc::one()];
    for m in 1..=n {
        let mut acc = SymFunc::zero();
        for i in 1..=m {
            let sign = if alternating && i % 2 == 0 { -1 } else { 1 };
            let term = seq[m - i].mul(&SymFunc::p_r(i)).scale(&Fraction::constant(int(sign)));
            acc = acc.add(&term);
        }
        seq.push(acc.scale(&Fraction::constant(rat(1, m as i64))));
    }
    seq.swap_remove(n)
}

/// Plethystic automorphisms, each diagonal on power sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Plethysm {
    /// `p_r ↦ ((1-u)^r / (1-u^r)) p_r`.
    Sigma(Monomial),
    /// The inverse of `Sigma(u)`.
    SigmaInv(Monomial),
    /// `p_r ↦ (-1)^{r-1} p_r`.
    Infinity,
    /// Apply the listed maps right to left.
    Compose(Vec<Plethysm>),
}

impl Plethysm {
    fn validate(&self) -> Result<()> {
        match self {
            Plethysm::Sigma(u) | Plethysm::SigmaInv(u) if u.is_one() => Err(Error::DegeneratePlethysmParameter),
            Plethysm::Compose(v) => v.iter().try_for_each(|s| s.validate()),
            _ => Ok(()),
        }
    }

    pub fn factor(&self, r: usize) -> Fraction {
        let sigma = |u: &Monomial| {
            let one = LaurentPoly::one();
            let num = (&one - &LaurentPoly::mono(*u)).pow(r as u32);
            let den = LaurentPoly::one_minus(u.pow(r as i32));
            (num, den)
        };
        match self {
            Plethysm::Sigma(u) => {
                let (n, d) = sigma(u);
                Fraction::new(n, d).expect("nonzero")
            }
            Plethysm::SigmaInv(u) => {
                let (n, d) = sigma(u);
                Fraction::new(d, n).expect("nonzero")
            }
            Plethysm::Infinity => Fraction::constant(int(if r % 2 == 1 { 1 } else { -1 })),
            Plethysm::Compose(v) => v.iter().fold(Fraction::one(), |acc, s| &acc * &s.factor(r)),
        }
    }

    /// `σ_{q^{-1}} σ_t^{-1}`, the map attached to the third parameter.
    pub fn third() -> Self {
        Plethysm::Compose(vec![
            Plethysm::Sigma(Monomial::pow_of(Var::Q, -1)),
            Plethysm::SigmaInv(Monomial::var(Var::T)),
        ])
    }
}

/// The images `e_n^{(k)}` for k = 1, 2, 3.
pub fn e_k_image(n: usize, k: usize) -> SymFunc {
    let e = elementary(n);
    let qinv = Monomial::pow_of(Var::Q, -1);
    let s = match k {
        1 => return e,
        2 => Plethysm::Compose(vec![
            Plethysm::Sigma(qinv),
            Plethysm::SigmaInv(Monomial::from_pairs(&[(Var::Q, 1), (Var::T, -1)])),
        ]),
        3 => Plethysm::third(),
        _ => panic!("k must be 1, 2 or 3"),
    };
    e.apply(&s).expect("parameters are not 1")
}

/// Truncated `exp(-Σ_j (-1)^j p_j z^j / j)`, coefficient of `z^n` for each n ≤ `order`.
pub fn elementary_generating(order: usize) -> Vec<SymFunc> {
    // Coefficients in z of the exponent.
    let a: Vec<SymFunc> = (0..=order)
        .map(|j| {
            if j == 0 {
                SymFunc::zero()
            } else {
                let sign = if j % 2 == 0 { -1 } else { 1 };
                SymFunc::p_r(j).scale(&Fraction::constant(rat(sign, j as i64)))
            }
        })
        .collect();
    // exp(A) = Σ A^k / k!, truncated.
    let mut result: Vec<SymFunc> = vec![SymFunc::zero(); order + 1];
    result[0] = SymFunc::one();
    let mut power: Vec<SymFunc> = result.clone();
    let mut fact = num_bigint::BigInt::one();
    for k in 1..=order {
        let mut next = vec![SymFunc::zero(); order + 1];
        for i in 0..=order {
            if power[i].is_zero() {
                continue;
            }
            for j in 1..=order - i {
                next[i + j] = next[i + j].add(&power[i].mul(&a[j]));
            }
        }
        power = next;
        fact *= k;
        let inv = Fraction::constant(crate::kernel::Rational::new(num_bigint::BigInt::one(), fact.clone()));
        for d in 0..=order {
            if !power[d].is_zero() {
                result[d] = result[d].add(&power[d].scale(&inv));
            }
        }
    }
    result
}
