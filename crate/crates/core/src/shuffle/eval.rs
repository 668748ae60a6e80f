//! Evaluation at numeric `x` with symbolic `q, t`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use std::sync::{Arc, Mutex};

use super::{block_assignments, epsilon, epsilon_n, eval_vandermonde_sq, qk, ShuffleCal};
use crate::error::{Error, Result};
use crate::kernel::{Fraction, LaurentPoly, Monomial, Rational, Value, Var};
use crate::symfunc::{e_k_image, Partition, SymFunc};

/// Attempts with fresh points before a singular evaluation matrix is reported.
pub const EXPANSION_RETRIES: usize = 5;

pub trait Evaluate: Sync {
    fn grade(&self) -> usize;

    /// The value at `x_i = xs[i-1]`, a Laurent polynomial in `q, t`.
    fn eval_at(&self, xs: &[Rational]) -> Result<LaurentPoly>;
}

impl Evaluate for ShuffleCal {
    fn grade(&self) -> usize {
        ShuffleCal::grade(self)
    }

    fn eval_at(&self, xs: &[Rational]) -> Result<LaurentPoly> {
        if xs.len() != self.grade() {
            return Err(Error::GradeMismatch(self.grade(), xs.len()));
        }
        let assign: Vec<(Var, Value)> =
            xs.iter().enumerate().map(|(i, v)| (Var::x(i + 1), Value::num(v.clone()))).collect();
        let p = self.num().substitute(&assign)?;
        Ok(p.scale(&eval_vandermonde_sq(xs).recip()))
    }
}

/// A lazily evaluated shuffle-algebra expression.
#[derive(Clone, Debug)]
pub enum ShuffleExpr {
    Leaf(ShuffleCal),
    Product(Vec<ShuffleExpr>),
    /// Linear combination of elements of the given grade.
    Sum(usize, Vec<(LaurentPoly, ShuffleExpr)>),
    MulE1(Box<ShuffleExpr>),
    DivE1(Box<ShuffleExpr>),
}

impl ShuffleExpr {
    pub fn leaf(c: ShuffleCal) -> Self {
        ShuffleExpr::Leaf(c)
    }

    pub fn epsilon(lambda: &Partition, k: usize) -> Self {
        ShuffleExpr::Product(lambda.parts().iter().map(|&m| ShuffleExpr::Leaf(epsilon_n(m, k))).collect())
    }

    /// `κ_n` through `(x_1 + … + x_n) κ_n = κ_{n-1} * x`.
    pub fn kappa(n: usize) -> Self {
        if n == 0 {
            return ShuffleExpr::Leaf(ShuffleCal::one());
        }
        let prod = ShuffleExpr::Product(vec![ShuffleExpr::kappa(n - 1), ShuffleExpr::Leaf(ShuffleCal::x_power(1))]);
        ShuffleExpr::DivE1(Box::new(prod))
    }

    pub fn scaled(self, c: LaurentPoly) -> Self {
        ShuffleExpr::Sum(self.grade(), vec![(c, self)])
    }
}

fn omega_at(xi: &Rational, xj: &Rational) -> LaurentPoly {
    // ω(x_j, x_i) = ∏_k (x_j - q_k x_i) / (x_j - x_i)^3
    let mut p = LaurentPoly::one();
    for k in 1..=3 {
        let f = &LaurentPoly::constant(xj.clone()) - &LaurentPoly::term(qk(k), xi.clone());
        p = &p * &f;
    }
    let d = xj - xi;
    p.scale(&(&d * &d * &d).recip())
}

fn e1_at(xs: &[Rational]) -> Rational {
    xs.iter().cloned().sum()
}

impl Evaluate for ShuffleExpr {
    fn grade(&self) -> usize {
        match self {
            ShuffleExpr::Leaf(c) => c.grade(),
            ShuffleExpr::Product(v) => v.iter().map(|e| e.grade()).sum(),
            ShuffleExpr::Sum(g, _) => *g,
            ShuffleExpr::MulE1(e) | ShuffleExpr::DivE1(e) => e.grade(),
        }
    }

    fn eval_at(&self, xs: &[Rational]) -> Result<LaurentPoly> {
        if xs.len() != self.grade() {
            return Err(Error::GradeMismatch(self.grade(), xs.len()));
        }
        match self {
            ShuffleExpr::Leaf(c) => c.eval_at(xs),
            ShuffleExpr::Sum(_, terms) => {
                let mut acc = LaurentPoly::zero();
                for (c, e) in terms {
                    acc += &(c * &e.eval_at(xs)?);
                }
                Ok(acc)
            }
            ShuffleExpr::MulE1(e) => Ok(e.eval_at(xs)?.scale(&e1_at(xs))),
            ShuffleExpr::DivE1(e) => {
                let s = e1_at(xs);
                if s == Rational::from_integer(0.into()) {
                    return Err(Error::NonExactDivision);
                }
                Ok(e.eval_at(xs)?.scale(&s.recip()))
            }
            ShuffleExpr::Product(factors) => {
                let mut scalar = LaurentPoly::one();
                let mut blocks = Vec::new();
                for f in factors {
                    if f.grade() == 0 {
                        scalar = &scalar * &f.eval_at(&[])?;
                    } else {
                        blocks.push(f);
                    }
                }
                let sizes: Vec<usize> = blocks.iter().map(|b| b.grade()).collect();
                let mut acc = LaurentPoly::zero();
                for parts in block_assignments(&sizes) {
                    let mut term = scalar.clone();
                    for (a, part) in parts.iter().enumerate() {
                        let sub: Vec<Rational> = part.iter().map(|&i| xs[i - 1].clone()).collect();
                        term = &term * &blocks[a].eval_at(&sub)?;
                        for later in &parts[a + 1..] {
                            for &i in part {
                                for &j in later {
                                    term = &term * &omega_at(&xs[i - 1], &xs[j - 1]);
                                }
                            }
                        }
                    }
                    acc += term;
                }
                Ok(acc)
            }
        }
    }
}

fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 2u64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// `count` points with distinct prime coordinates, skipping the first `offset` points.
pub fn prime_points(n: usize, count: usize, offset: usize) -> Vec<Vec<Rational>> {
    let ps = primes(n * (count + offset));
    (offset..offset + count)
        .map(|m| ps[m * n..(m + 1) * n].iter().map(|&p| Rational::from_integer(p.into())).collect())
        .collect()
}

/// Random points with distinct positive rational coordinates.
pub fn random_points(n: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut pt: Vec<Rational> = Vec::with_capacity(n);
            while pt.len() < n {
                let v = Rational::new(rng.gen_range(1..=97i64).into(), rng.gen_range(1..=11i64).into());
                if !pt.contains(&v) {
                    pt.push(v);
                }
            }
            pt
        })
        .collect()
}

/// `ε_λ(q_3)` for every `λ ⊢ n`, computed once per grade.
pub fn epsilon_basis(n: usize) -> Result<Arc<Vec<(Partition, ShuffleCal)>>> {
    static CACHE: Mutex<BTreeMap<usize, Arc<Vec<(Partition, ShuffleCal)>>>> = Mutex::new(BTreeMap::new());
    if let Some(b) = CACHE.lock().expect("cache lock").get(&n) {
        return Ok(b.clone());
    }
    let basis = Partition::all(n)
        .into_par_iter()
        .map(|l| Ok((l.clone(), epsilon(&l, 3)?)))
        .collect::<Result<Vec<_>>>()?;
    let basis = Arc::new(basis);
    CACHE.lock().expect("cache lock").insert(n, basis.clone());
    Ok(basis)
}

fn qt_part(m: &Monomial) -> Monomial {
    m.restrict(|v| matches!(v, Var::Q | Var::T))
}

/// Coefficients `c_λ` with `P = Σ_λ c_λ ε_λ(q_3)`, over all `λ ⊢ n`.
///
/// The linear functionals are the coefficients of the dominant `x`-monomials of the
/// numerators. The smallest independent rows determine the solution; all remaining
/// rows are then checked, which by symmetry proves the identity.
pub fn expand_in_epsilon_basis(p: &ShuffleCal) -> Result<BTreeMap<Partition, Fraction>> {
    let n = p.grade();
    if n == 0 {
        let mut out = BTreeMap::new();
        out.insert(Partition::empty(), Fraction::from_poly(p.num().clone()));
        return Ok(out);
    }
    let basis = epsilon_basis(n)?;
    let m = basis.len();
    let mut rows: BTreeMap<Vec<i32>, (Vec<LaurentPoly>, LaurentPoly)> = BTreeMap::new();
    let mut add = |col: Option<usize>, poly: &LaurentPoly| {
        for (mono, c) in poly.terms() {
            let xs: Vec<i32> = (1..=n).map(|i| mono.exp(Var::x(i))).collect();
            if !xs.windows(2).all(|w| w[0] >= w[1]) {
                continue;
            }
            let entry = rows.entry(xs).or_insert_with(|| (vec![LaurentPoly::zero(); m], LaurentPoly::zero()));
            let term = LaurentPoly::term(qt_part(mono), c.clone());
            match col {
                Some(k) => entry.0[k] += &term,
                None => entry.1 += &term,
            }
        }
    };
    for (k, (_, e)) in basis.iter().enumerate() {
        add(Some(k), e.num());
    }
    add(None, p.num());
    let mut rows: Vec<(Vec<LaurentPoly>, LaurentPoly)> = rows.into_values().collect();
    rows.sort_by_key(|(r, b)| r.iter().map(|x| x.len()).sum::<usize>() + b.len());
    let (a, b): (Vec<Vec<LaurentPoly>>, Vec<LaurentPoly>) = rows.into_iter().unzip();
    let coeffs = match crate::kernel::linalg::solve(&a, &b) {
        Ok(c) => c,
        Err(Error::SingularSystem) => return Err(Error::SingularEvaluationMatrix(1)),
        Err(Error::VerificationFailure(_)) => {
            return Err(Error::VerificationFailure("element is not in the span of the ε basis".into()))
        }
        Err(e) => return Err(e),
    };
    Ok(basis.iter().map(|(l, _)| l.clone()).zip(coeffs).collect())
}

/// The same expansion from point evaluations, for elements only available lazily.
///
/// `p(n)` points with distinct prime coordinates determine the coefficients and one
/// further point checks them.
pub fn expand_at_points(p: &dyn Evaluate) -> Result<BTreeMap<Partition, Fraction>> {
    let n = p.grade();
    if n == 0 {
        let mut out = BTreeMap::new();
        out.insert(Partition::empty(), Fraction::from_poly(p.eval_at(&[])?));
        return Ok(out);
    }
    let basis: Vec<(Partition, ShuffleExpr)> =
        Partition::all(n).into_iter().map(|l| (l.clone(), ShuffleExpr::epsilon(&l, 3))).collect();
    let m = basis.len();
    for attempt in 0..EXPANSION_RETRIES {
        let pts = prime_points(n, m + 1, attempt * (m + 1));
        let rows: Vec<Result<(Vec<LaurentPoly>, LaurentPoly)>> = pts
            .par_iter()
            .map(|pt| {
                let row = basis.iter().map(|(_, e)| e.eval_at(pt)).collect::<Result<Vec<_>>>()?;
                Ok((row, p.eval_at(pt)?))
            })
            .collect();
        let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
        let (a, b): (Vec<Vec<LaurentPoly>>, Vec<LaurentPoly>) = rows[..m].iter().cloned().unzip();
        let coeffs = match crate::kernel::linalg::solve(&a, &b) {
            Ok(c) => c,
            Err(Error::SingularSystem) => continue,
            Err(e) => return Err(e),
        };
        let (check_row, check_val) = &rows[m];
        let lhs = Fraction::sum(check_row.iter().zip(&coeffs).map(|(v, c)| c.mul_poly(v)));
        if lhs != Fraction::from_poly(check_val.clone()) {
            return Err(Error::VerificationFailure("ε-expansion fails at a fresh point".into()));
        }
        return Ok(basis.into_iter().map(|(l, _)| l).zip(coeffs).collect());
    }
    Err(Error::SingularEvaluationMatrix(EXPANSION_RETRIES))
}

/// `Υ'(P) = Σ_λ c_λ ∏_i e^{(3)}_{λ_i}`.
pub fn upsilon(p: &ShuffleCal) -> Result<SymFunc> {
    Ok(upsilon_of_coefficients(&expand_in_epsilon_basis(p)?))
}

pub fn upsilon_of_coefficients(coeffs: &BTreeMap<Partition, Fraction>) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lambda, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let mut prod = SymFunc::one();
        for &part in lambda.parts() {
            prod = prod.mul(&e_k_image(part, 3));
        }
        out = out.add(&prod.scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::{epsilon, kappa};
    use crate::symfunc::{elementary, Plethysm};

    #[test]
    fn evaluation_matches_symbolic() {
        let l: Partition = "2,1".parse().unwrap();
        let sym = epsilon(&l, 2).unwrap();
        let lazy = ShuffleExpr::Product(vec![ShuffleExpr::Leaf(epsilon_n(2, 2)), ShuffleExpr::Leaf(epsilon_n(1, 2))]);
        for pt in prime_points(3, 2, 0) {
            assert_eq!(sym.eval_at(&pt).unwrap(), lazy.eval_at(&pt).unwrap());
        }
        let k3 = kappa(3).unwrap();
        for pt in random_points(3, 2, 7) {
            assert_eq!(k3.eval_at(&pt).unwrap(), ShuffleExpr::kappa(3).eval_at(&pt).unwrap());
        }
    }

    #[test]
    fn expansion_of_basis_element() {
        let l: Partition = "2,1".parse().unwrap();
        let c = expand_at_points(&ShuffleExpr::epsilon(&l, 3)).unwrap();
        let d = expand_in_epsilon_basis(&epsilon(&l, 3).unwrap()).unwrap();
        assert_eq!(c, d);
        for (m, v) in c {
            assert_eq!(v.is_one(), m == l);
            assert!(m == l || v.is_zero());
        }
        let zero = ShuffleCal::raw(2, LaurentPoly::zero());
        assert!(expand_in_epsilon_basis(&zero).unwrap().values().all(|v| v.is_zero()));
        let not_in_span = ShuffleCal::raw(3, LaurentPoly::parse("x1^2 x2^2 x3^2").unwrap());
        assert!(expand_in_epsilon_basis(&not_in_span).is_err());
    }

    #[test]
    fn upsilon_of_kappa() {
        for n in 0..=3 {
            let want = elementary(n).apply(&Plethysm::Sigma(Monomial::var(Var::Q))).unwrap();
            assert_eq!(upsilon(&kappa(n).unwrap()).unwrap(), want, "n = {n}");
            let lazy = expand_at_points(&ShuffleExpr::kappa(n)).unwrap();
            assert_eq!(upsilon_of_coefficients(&lazy), want, "n = {n}");
        }
    }
}
