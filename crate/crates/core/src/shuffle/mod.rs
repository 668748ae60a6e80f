//! Trigonometric shuffle algebras in two presentations.
//!
//! [`ShuffleCal`] stores the numerator `num` of `num / ∏_{i<j} (x_i - x_j)^2`.
//! [`ShuffleA`] is the Laurent form `V_n · P`, `V_n = ∏_{i≠j} (1 - x_i/x_j)`.
//! Coefficients are Laurent polynomials in `q, t`.

mod eval;
mod identities;

pub use eval::{
    epsilon_basis, expand_at_points, expand_in_epsilon_basis, prime_points, random_points, upsilon,
    upsilon_of_coefficients, Evaluate, ShuffleExpr, EXPANSION_RETRIES,
};
pub use identities::{epsilon_rec_expr, kappa_x_expr, wronski_expr, wronski_lem_expr};

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::kernel::{Fraction, LaurentPoly, Monomial, Rational, Value, Var};
use crate::perm::Perm;
use crate::symfunc::Partition;

/// `q_1 = q^{-1}`, `q_2 = q t^{-1}`, `q_3 = t`.
pub fn qk(k: usize) -> Monomial {
    QTriple::standard().get(k)
}

/// Three monomials in `q, t` with product 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QTriple {
    pub q1: Monomial,
    pub q2: Monomial,
    pub q3: Monomial,
}

impl QTriple {
    pub fn standard() -> Self {
        QTriple {
            q1: Monomial::pow_of(Var::Q, -1),
            q2: Monomial::from_pairs(&[(Var::Q, 1), (Var::T, -1)]),
            q3: Monomial::var(Var::T),
        }
    }

    pub fn get(&self, k: usize) -> Monomial {
        match k {
            1 => self.q1,
            2 => self.q2,
            3 => self.q3,
            _ => panic!("parameter index must be 1, 2 or 3"),
        }
    }

    /// `(q_{σ(1)}, q_{σ(2)}, q_{σ(3)})`.
    pub fn permuted(&self, sigma: &Perm) -> Self {
        QTriple { q1: self.get(sigma.at(1)), q2: self.get(sigma.at(2)), q3: self.get(sigma.at(3)) }
    }
}

/// Rewrites `q, t` so that `(q_1, q_2, q_3)` becomes `(q_{σ(1)}, q_{σ(2)}, q_{σ(3)})`.
pub fn permute_parameters(p: &LaurentPoly, sigma: &Perm) -> Result<LaurentPoly> {
    let t = QTriple::standard().permuted(sigma);
    p.rename(&[(Var::Q, Var::U), (Var::T, Var::V)])
        .substitute(&[(Var::U, Value::mono(t.q1.inv())), (Var::V, Value::mono(t.q3))])
}

fn x(i: usize) -> Var {
    Var::x(i)
}

fn xpoly(i: usize) -> LaurentPoly {
    LaurentPoly::var(x(i))
}

/// `∏_{i<j} (x_i - x_j)` over the given indices, in the given order.
fn vandermonde(idx: &[usize]) -> LaurentPoly {
    let mut d = LaurentPoly::one();
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            d = &d * &(&xpoly(idx[a]) - &xpoly(idx[b]));
        }
    }
    d
}

fn divide_by_vandermonde(p: &LaurentPoly, n: usize) -> Result<LaurentPoly> {
    let mut out = p.clone();
    for i in 1..=n {
        for j in i + 1..=n {
            out = out.div_exact(&(&xpoly(i) - &xpoly(j))).map_err(|_| Error::DenominatorSurvives)?;
        }
    }
    Ok(out)
}

/// `∏_k (x_j - q_k x_i)`.
fn cross_numerator(i: usize, j: usize) -> LaurentPoly {
    let t = QTriple::standard();
    let mut p = LaurentPoly::one();
    for k in 1..=3 {
        p = &p * &(&xpoly(j) - &LaurentPoly::mono(t.get(k).mul(&Monomial::var(x(i)))));
    }
    p
}

fn rename_into(p: &LaurentPoly, targets: &[usize]) -> LaurentPoly {
    let pairs: Vec<(Var, Var)> = targets.iter().enumerate().map(|(m, &i)| (x(m + 1), x(i))).collect();
    p.rename(&pairs)
}

/// Ordered set partitions of `1..=n` into consecutive blocks of the given (positive) sizes.
pub(crate) fn block_assignments(sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if sizes.is_empty() {
        return vec![Vec::new()];
    }
    let reps = Perm::coset_reps(sizes).expect("block sizes are positive");
    reps.iter()
        .map(|w| {
            let mut start = 0;
            sizes
                .iter()
                .map(|&s| {
                    let blk: Vec<usize> = (start + 1..=start + s).map(|p| w.at(p)).collect();
                    start += s;
                    blk
                })
                .collect()
        })
        .collect()
}

/// `Σ_w ∏_a f_a(x_{I_a}) ∏_{a<b} ∏_{i∈I_a, j∈I_b} pair(i, j) / (x_j - x_i)`, computed
/// by multiplying every term by the Vandermonde, summing, and dividing once.
fn coset_sum(factors: &[(&LaurentPoly, usize)], pair: impl Fn(usize, usize) -> LaurentPoly + Sync) -> Result<LaurentPoly> {
    let mut scalar = LaurentPoly::one();
    let mut blocks = Vec::new();
    for (p, g) in factors {
        if *g == 0 {
            scalar = &scalar * *p;
        } else {
            blocks.push((*p, *g));
        }
    }
    let sizes: Vec<usize> = blocks.iter().map(|b| b.1).collect();
    let n: usize = sizes.iter().sum();
    let mut pairs = vec![vec![LaurentPoly::zero(); n + 1]; n + 1];
    for (i, row) in pairs.iter_mut().enumerate().skip(1) {
        for (j, cell) in row.iter_mut().enumerate().skip(1) {
            if i != j {
                *cell = pair(i, j);
            }
        }
    }
    let total: LaurentPoly = block_assignments(&sizes)
        .par_iter()
        .map(|parts| {
            let mut term = LaurentPoly::one();
            let mut flips = 0usize;
            for (a, part) in parts.iter().enumerate() {
                term = &term * &rename_into(blocks[a].0, part);
                term = &term * &vandermonde(part);
                for later in &parts[a + 1..] {
                    for &i in part {
                        for &j in later {
                            term = &term * &pairs[i][j];
                            if i < j {
                                flips += 1;
                            }
                        }
                    }
                }
            }
            if flips % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .reduce(LaurentPoly::zero, |a, b| &a + &b);
    Ok(&divide_by_vandermonde(&total, n)? * &scalar)
}

fn check_alphabet(n: usize, p: &LaurentPoly) -> Result<()> {
    for v in p.vars() {
        let ok = match v {
            Var::Q | Var::T => true,
            Var::X(i) => (i as usize) <= n,
            _ => false,
        };
        if !ok {
            return Err(Error::MixedAlphabets(format!("{v} in a grade-{n} shuffle element")));
        }
    }
    Ok(())
}

fn x_vars(n: usize) -> Vec<Var> {
    (1..=n).map(x).collect()
}

/// `num / ∏_{i<j} (x_i - x_j)^2`, with `num` symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleCal {
    grade: usize,
    num: LaurentPoly,
}

impl ShuffleCal {
    pub fn new(grade: usize, num: LaurentPoly) -> Result<Self> {
        check_alphabet(grade, &num)?;
        if !num.is_symmetric_in(&x_vars(grade)) {
            return Err(Error::VerificationFailure("numerator is not symmetric".into()));
        }
        Ok(ShuffleCal { grade, num })
    }

    pub(crate) fn raw(grade: usize, num: LaurentPoly) -> Self {
        ShuffleCal { grade, num }
    }

    pub fn one() -> Self {
        Self::raw(0, LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self::raw(0, c)
    }

    /// The grade-1 element `x^e`.
    pub fn x_power(e: i32) -> Self {
        Self::raw(1, LaurentPoly::var_pow(x(1), e))
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::raw(self.grade, &self.num * c)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.grade != other.grade {
            return Err(Error::GradeMismatch(self.grade, other.grade));
        }
        Ok(Self::raw(self.grade, &self.num + &other.num))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    /// `(x_1 + … + x_n) · self`.
    pub fn mul_e1(&self) -> Self {
        Self::raw(self.grade, &self.num * &e1(self.grade))
    }

    /// `self / (x_1 + … + x_n)`, failing unless exact.
    pub fn div_e1(&self) -> Result<Self> {
        Ok(Self::raw(self.grade, self.num.div_exact(&e1(self.grade))?))
    }

    pub fn to_a(&self) -> ShuffleA {
        convert_to_a(self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "grade": self.grade, "num": self.num.to_json() })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let grade = v["grade"].as_u64().ok_or_else(|| Error::Parse("missing grade".into()))? as usize;
        Self::new(grade, LaurentPoly::from_json(&v["num"])?)
    }
}

impl std::fmt::Display for ShuffleCal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.grade < 2 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / Δ{}^2", self.num, self.grade)
        }
    }
}

fn e1(n: usize) -> LaurentPoly {
    LaurentPoly::sum((1..=n).map(xpoly))
}

/// `V_n · P` as a symmetric Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleA {
    grade: usize,
    poly: LaurentPoly,
}

impl ShuffleA {
    pub fn new(grade: usize, poly: LaurentPoly) -> Result<Self> {
        check_alphabet(grade, &poly)?;
        if !poly.is_symmetric_in(&x_vars(grade)) {
            return Err(Error::VerificationFailure("polynomial is not symmetric".into()));
        }
        Ok(ShuffleA { grade, poly })
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn to_cal(&self) -> ShuffleCal {
        convert_to_cal(self)
    }

    pub fn satisfies_degbounds(&self) -> bool {
        satisfies_degbounds(&self.poly, self.grade)
    }

    /// Vanishing at `(x, qx, tx, …)` and `(tqx, qx, tx, …)`.
    pub fn wheel_check(&self) -> bool {
        if self.grade < 3 {
            return true;
        }
        let xm = Monomial::var(x(1));
        let q = Monomial::var(Var::Q);
        let t = Monomial::var(Var::T);
        let fams = [[Monomial::one(), q, t], [q.mul(&t), q, t]];
        // Slot 1 is itself rescaled, so route it through an unused variable first.
        let p = self.poly.rename(&[(x(1), Var::U)]);
        fams.iter().all(|f| {
            let assign = [
                (Var::U, Value::mono(f[0].mul(&xm))),
                (x(2), Value::mono(f[1].mul(&xm))),
                (x(3), Value::mono(f[2].mul(&xm))),
            ];
            p.substitute(&assign).map(|r| r.is_zero()).unwrap_or(false)
        })
    }
}

fn v_sign(n: usize) -> bool {
    (n * (n.saturating_sub(1)) / 2) % 2 == 1
}

fn prod_x(n: usize, e: i32) -> Monomial {
    let mut m = Monomial::one();
    for i in 1..=n {
        m.set_exp(x(i), e);
    }
    m
}

/// `V_n = (-1)^{n(n-1)/2} ∏_{i<j} (x_i - x_j)^2 / (x_1⋯x_n)^{n-1}`, so
/// converting is a signed monomial shift.
pub fn convert_to_cal(a: &ShuffleA) -> ShuffleCal {
    let n = a.grade;
    let p = a.poly.mul_mono(&prod_x(n, n.saturating_sub(1) as i32));
    ShuffleCal::raw(n, if v_sign(n) { -p } else { p })
}

pub fn convert_to_a(c: &ShuffleCal) -> ShuffleA {
    let n = c.grade;
    let p = c.num.mul_mono(&prod_x(n, -(n.saturating_sub(1) as i32)));
    ShuffleA { grade: n, poly: if v_sign(n) { -p } else { p } }
}

/// `V_n` as a Laurent polynomial.
pub fn v_n(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                p = &p * &LaurentPoly::one_minus(Monomial::from_pairs(&[(x(i), 1), (x(j), -1)]));
            }
        }
    }
    p
}

/// The product of several elements as one coset sum over ordered set partitions.
pub fn shuffle_product_cal(factors: &[ShuffleCal]) -> Result<ShuffleCal> {
    let n = factors.iter().map(|f| f.grade).sum();
    let fs: Vec<(&LaurentPoly, usize)> = factors.iter().map(|f| (&f.num, f.grade)).collect();
    Ok(ShuffleCal::raw(n, coset_sum(&fs, cross_numerator)?))
}

pub fn shuffle_mul_cal(f: &ShuffleCal, g: &ShuffleCal) -> Result<ShuffleCal> {
    shuffle_product_cal(&[f.clone(), g.clone()])
}

/// Product with `ω̃(x_i / x_j)`, `i` in the first block.
pub fn shuffle_mul_a(p: &ShuffleA, q: &ShuffleA) -> Result<ShuffleA> {
    let fs = [(&p.poly, p.grade), (&q.poly, q.grade)];
    let poly = coset_sum(&fs, |i, j| {
        -cross_numerator(i, j).mul_mono(&Monomial::from_pairs(&[(x(i), -1), (x(j), -1)]))
    })?;
    Ok(ShuffleA { grade: p.grade + q.grade, poly })
}

/// `ε_n(q_k) = ∏_{i<j} (x_i - q_k x_j)(x_i - q_k^{-1} x_j) / (x_i - x_j)^2`.
pub fn epsilon_n(n: usize, k: usize) -> ShuffleCal {
    let u = qk(k);
    let mut p = LaurentPoly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let a = &xpoly(i) - &LaurentPoly::mono(u.mul(&Monomial::var(x(j))));
            let b = &xpoly(i) - &LaurentPoly::mono(u.inv().mul(&Monomial::var(x(j))));
            p = &(&p * &a) * &b;
        }
    }
    ShuffleCal::raw(n, p)
}

/// `ε_λ(q_k)` by iterated binary products.
pub fn epsilon(lambda: &Partition, k: usize) -> Result<ShuffleCal> {
    let mut acc = ShuffleCal::one();
    for &part in lambda.parts() {
        acc = shuffle_mul_cal(&acc, &epsilon_n(part, k))?;
    }
    Ok(acc)
}

/// `ε_λ(q_k)` as a single coset sum over all blocks at once.
pub fn epsilon_closed(lambda: &Partition, k: usize) -> Result<ShuffleCal> {
    let parts: Vec<ShuffleCal> = lambda.parts().iter().map(|&m| epsilon_n(m, k)).collect();
    shuffle_product_cal(&parts)
}

/// `κ_n`, defined by `(x_1 + … + x_n) κ_n = κ_{n-1} * x`.
pub fn kappa(n: usize) -> Result<ShuffleCal> {
    let mut acc = ShuffleCal::one();
    for _ in 0..n {
        acc = shuffle_mul_cal(&acc, &ShuffleCal::x_power(1))?.div_e1()?;
    }
    Ok(acc)
}

/// Vanishing of the numerator at `(x, q_1 x, q_1 q_2 x)` and `(x, q_2 x, q_1 q_2 x)`.
pub fn wheel_check(p: &ShuffleCal) -> bool {
    if p.grade < 3 {
        return true;
    }
    let t = QTriple::standard();
    let x1 = Monomial::var(x(1));
    let q12 = t.q1.mul(&t.q2);
    [t.q1, t.q2].iter().all(|a| {
        let assign = [(x(2), Value::mono(a.mul(&x1))), (x(3), Value::mono(q12.mul(&x1)))];
        p.num.substitute(&assign).map(|r| r.is_zero()).unwrap_or(false)
    })
}

/// `lim x_n → 0`, applied `r` times.
pub fn limit_zero(p: &ShuffleCal, r: usize) -> Result<ShuffleCal> {
    if r > p.grade {
        return Err(Error::IndexOutOfRange { index: r, n: p.grade });
    }
    let mut cur = p.clone();
    for _ in 0..r {
        let n = cur.grade;
        if cur.num.min_exp(x(n)).is_some_and(|e| e < 0) {
            return Err(Error::LimitDiverges);
        }
        let p0 = cur.num.coeff_of_power(x(n), 0);
        cur = ShuffleCal::raw(n - 1, p0.mul_mono(&prod_x(n - 1, -2)));
    }
    Ok(cur)
}

/// `P(x, q_k x, …, q_k^{n-1} x)` as a fraction in `x = x_1`.
pub fn specialize_geometric(p: &ShuffleCal, k: usize) -> Result<Fraction> {
    let u = qk(k);
    let x1 = Monomial::var(x(1));
    let assign: Vec<(Var, Value)> =
        (2..=p.grade).map(|i| (x(i), Value::mono(u.pow(i as i32 - 1).mul(&x1)))).collect();
    let num = p.num.substitute(&assign)?;
    let mut den = LaurentPoly::one();
    for i in 0..p.grade {
        for j in i + 1..p.grade {
            let d = &LaurentPoly::mono(u.pow(i as i32).mul(&x1)) - &LaurentPoly::mono(u.pow(j as i32).mul(&x1));
            den = &den * &(&d * &d);
        }
    }
    Fraction::new(num, den)
}

/// `|i_1 + … + i_r| ≤ r(n - r)` for every monomial and every `r`.
pub fn satisfies_degbounds(p: &LaurentPoly, n: usize) -> bool {
    p.terms().iter().all(|(m, _)| {
        let mut s = 0i64;
        for r in 1..=n {
            s += m.exp(x(r)) as i64;
            if s.unsigned_abs() > (r * (n - r)) as u64 {
                return false;
            }
        }
        true
    })
}

pub(crate) fn eval_vandermonde_sq(xs: &[Rational]) -> Rational {
    let mut d = Rational::from_integer(1.into());
    for a in 0..xs.len() {
        for b in a + 1..xs.len() {
            let diff = &xs[a] - &xs[b];
            d *= &diff * &diff;
        }
    }
    d
}
