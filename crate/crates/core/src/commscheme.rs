//! K-polynomial, multidegree and degree of the commuting scheme.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::hecke::CenterElement;
use crate::kernel::{LaurentPoly, Monomial, Rational, Value, Var};
use crate::lattice;
use crate::perm::Perm;

/// `K_n`, a Laurent polynomial in `q1, q2, x_1..x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPolynomial {
    pub n: usize,
    pub poly: LaurentPoly,
}

/// `D_n`, a polynomial in `q1, q2, x_1..x_n`, homogeneous of degree `n(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    pub n: usize,
    pub poly: LaurentPoly,
}

impl KPolynomial {
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "n": self.n, "poly": self.poly.to_json() })
    }
}

impl Multidegree {
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "n": self.n, "poly": self.poly.to_json() })
    }
}

fn x(i: usize) -> Var {
    Var::x(i)
}

fn xp(i: usize) -> LaurentPoly {
    LaurentPoly::var(x(i))
}

fn ratio(a: usize, b: usize) -> Monomial {
    Monomial::from_pairs(&[(x(a), 1), (x(b), -1)])
}

fn vandermonde(idx: &[usize]) -> LaurentPoly {
    let mut d = LaurentPoly::one();
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            d = &d * &(&xp(idx[a]) - &xp(idx[b]));
        }
    }
    d
}

/// `K_n` from `e_1 K_n = Σ_i x_i K_{n-1}[x̂_i] ∏_{j≠i} (1 - q1 x_j/x_i)(1 - q2 x_j/x_i)(1 - q1q2 x_i/x_j) / (1 - x_j/x_i)`.
pub fn kpoly(n: usize) -> Result<KPolynomial> {
    let mut k = LaurentPoly::one();
    for m in 2..=n {
        k = sasha_step(&k, m)?;
    }
    Ok(KPolynomial { n, poly: k })
}

fn sasha_step(prev: &LaurentPoly, n: usize) -> Result<LaurentPoly> {
    let q1 = Monomial::var(Var::Q1);
    let q2 = Monomial::var(Var::Q2);
    let q12 = q1.mul(&q2);
    let all: Vec<usize> = (1..=n).collect();
    // Over the common denominator Δ: x_i^n (-1)^{i-1} Δ_î K_{n-1}[x̂_i] ∏_{j≠i} N_ij.
    let num: LaurentPoly = (1..=n)
        .into_par_iter()
        .map(|i| {
            let rest: Vec<usize> = all.iter().copied().filter(|&j| j != i).collect();
            let pairs: Vec<(Var, Var)> = rest.iter().enumerate().map(|(m, &j)| (x(m + 1), x(j))).collect();
            let mut term = prev.rename(&pairs).mul_mono(&Monomial::pow_of(x(i), n as i32));
            term = &term * &vandermonde(&rest);
            for &j in &rest {
                let f = &(&LaurentPoly::one_minus(q1.mul(&ratio(j, i))) * &LaurentPoly::one_minus(q2.mul(&ratio(j, i))))
                    * &LaurentPoly::one_minus(q12.mul(&ratio(i, j)));
                term = &term * &f;
            }
            if i % 2 == 0 {
                -term
            } else {
                term
            }
        })
        .reduce(LaurentPoly::zero, |a, b| &a + &b);
    let mut out = num;
    for i in 1..=n {
        for j in i + 1..=n {
            out = out.div_exact(&(&xp(i) - &xp(j)))?;
        }
    }
    let e1 = LaurentPoly::sum((1..=n).map(xp));
    out.div_exact(&e1)
}

/// `(q1 q2)^{n(n-1)/2} f(1_n)` with `q = q1^{-1}`, `t = (q1 q2)^{-1}`.
pub fn kpoly_from_f(n: usize) -> Result<KPolynomial> {
    let f = lattice::partition_fn_f(&CenterElement::one(n))?;
    let k = (n * n.saturating_sub(1) / 2) as i32;
    let poly = var_convert(&f, VarDirection::QtToQ1Q2)?
        .mul_mono(&Monomial::from_pairs(&[(Var::Q1, k), (Var::Q2, k)]));
    Ok(KPolynomial { n, poly })
}

/// `K_n` as the identity-connectivity partition function with `wt_K` weights.
pub fn kpoly_lattice(n: usize) -> Result<KPolynomial> {
    Ok(KPolynomial { n, poly: lattice::k_polynomial_lattice(n)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarDirection {
    /// `q ↦ q1^{-1}`, `t ↦ (q1 q2)^{-1}`.
    QtToQ1Q2,
    /// `q1 ↦ q^{-1}`, `q2 ↦ q t^{-1}`.
    Q1Q2ToQt,
}

/// Monomial change of parameters between `(q, t)` and `(q1, q2)`.
pub fn var_convert(p: &LaurentPoly, dir: VarDirection) -> Result<LaurentPoly> {
    let (from, to) = match dir {
        VarDirection::QtToQ1Q2 => ([Var::Q, Var::T], [Var::Q1, Var::Q2]),
        VarDirection::Q1Q2ToQt => ([Var::Q1, Var::Q2], [Var::Q, Var::T]),
    };
    if let Some(v) = to.iter().find(|v| p.contains_var(**v)) {
        return Err(Error::MixedAlphabets(format!("{v} already present")));
    }
    let m = |pairs: &[(Var, i32)]| Monomial::from_pairs(pairs);
    let (a, b) = match dir {
        VarDirection::QtToQ1Q2 => (m(&[(Var::Q1, -1)]), m(&[(Var::Q1, -1), (Var::Q2, -1)])),
        VarDirection::Q1Q2ToQt => (m(&[(Var::Q, -1)]), m(&[(Var::Q, 1), (Var::T, -1)])),
    };
    Ok(p.map_monomials(|mono| {
        let (ea, eb) = (mono.exp(from[0]), mono.exp(from[1]));
        let mut out = *mono;
        out.set_exp(from[0], 0);
        out.set_exp(from[1], 0);
        out.mul(&a.pow(ea)).mul(&b.pow(eb))
    }))
}

fn grr_vars(v: Var) -> bool {
    matches!(v, Var::Q1 | Var::Q2 | Var::X(_))
}

/// Lowest homogeneous component of `p(1 - q1, 1 - q2, 1 - x_1, …)` and its degree.
///
/// Negative exponents are cleared by a monomial `M` first: `M(1 - ·)^{-1}` has
/// constant term 1, so it does not change the lowest component.
pub fn grr_expand(p: &LaurentPoly) -> Result<(i32, LaurentPoly)> {
    if p.is_zero() {
        return Ok((0, LaurentPoly::zero()));
    }
    let vars: Vec<Var> = p.vars().into_iter().filter(|v| grr_vars(*v)).collect();
    let mut shift = Monomial::one();
    for v in &vars {
        let lo = p.min_exp(*v).unwrap_or(0);
        if lo < 0 {
            shift.set_exp(*v, -lo);
        }
    }
    let cleared = p.mul_mono(&shift);
    let subs: Vec<(Var, LaurentPoly)> =
        vars.iter().map(|v| (*v, LaurentPoly::one_minus(Monomial::var(*v)))).collect();
    let composed = cleared.compose(&subs)?;
    let Some(lo) = composed.terms().iter().map(|(m, _)| m.partial_degree(grr_vars)).min() else {
        return Ok((0, LaurentPoly::zero()));
    };
    Ok((lo, composed.component(grr_vars, lo)))
}

/// The GRR limit `D_n` of `K_n`; its degree must be `n(n-1)`.
pub fn grr_limit(k: &KPolynomial) -> Result<Multidegree> {
    let (d, poly) = grr_expand(&k.poly)?;
    let want = (k.n * k.n.saturating_sub(1)) as i64;
    if d as i64 != want {
        return Err(Error::DegreeMismatch { expected: want, found: d as i64 });
    }
    Ok(Multidegree { n: k.n, poly })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MdegMethod {
    Lattice,
    Symmetrize,
}

pub fn mdeg(n: usize, method: MdegMethod) -> Result<Multidegree> {
    let poly = match method {
        MdegMethod::Lattice => lattice::mdeg_lattice(n)?,
        MdegMethod::Symmetrize => mdeg_symmetrize(n)?,
    };
    Ok(Multidegree { n, poly })
}

/// `Sym ∏_{i<j} (q1+q2+x_i-x_j)(q1-x_i+x_j)(q2-x_i+x_j) / (x_j - x_i)`, `Sym = (1/n!) Σ_w w`.
fn mdeg_symmetrize(n: usize) -> Result<LaurentPoly> {
    let q1 = LaurentPoly::var(Var::Q1);
    let q2 = LaurentPoly::var(Var::Q2);
    let mut num = LaurentPoly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let d = &xp(i) - &xp(j);
            num = &num * &(&(&q1 + &q2) + &d);
            num = &num * &(&q1 - &d);
            num = &num * &(&q2 - &d);
        }
    }
    // w(∏_{i<j} (x_j - x_i)) = sgn(w) ∏_{i<j} (x_j - x_i)
    let alt: LaurentPoly = Perm::all(n)
        .into_par_iter()
        .map(|w| {
            let pairs: Vec<(Var, Var)> = (1..=n).map(|i| (x(i), x(w.at(i)))).collect();
            let r = num.rename(&pairs);
            if w.sign() < 0 {
                -r
            } else {
                r
            }
        })
        .reduce(LaurentPoly::zero, |a, b| &a + &b);
    let mut out = alt;
    for i in 1..=n {
        for j in i + 1..=n {
            out = out.div_exact(&(&xp(j) - &xp(i)))?;
        }
    }
    let fact: u64 = (1..=n as u64).product();
    Ok(out.scale(&Rational::new(1.into(), fact.into())))
}

/// Constant term in `u` of `(1/n!) ∏_{i<j} (u_i-u_j)(q1-u_i+u_j)(q2-u_i+u_j)(q1+q2+u_i-u_j) / (u_i u_j)`,
/// with `u_i` stored in `x_i`.
pub fn bidegree_constant_term(n: usize) -> LaurentPoly {
    let q1 = LaurentPoly::var(Var::Q1);
    let q2 = LaurentPoly::var(Var::Q2);
    let mut p = LaurentPoly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let d = &xp(i) - &xp(j);
            p = &p * &d;
            p = &p * &(&q1 - &d);
            p = &p * &(&q2 - &d);
            p = &p * &(&(&q1 + &q2) + &d);
        }
    }
    let mut shift = Monomial::one();
    for i in 1..=n {
        shift.set_exp(x(i), -(n.saturating_sub(1) as i32));
    }
    let p = p.mul_mono(&shift);
    let constant = LaurentPoly::from_terms(
        p.terms().iter().filter(|(m, _)| (1..=n).all(|i| m.exp(x(i)) == 0)).cloned(),
    );
    let fact: u64 = (1..=n as u64).product();
    constant.scale(&Rational::new(1.into(), fact.into()))
}

/// `deg C_n` by the transfer-matrix count.
pub fn degree(n: usize) -> Result<BigUint> {
    lattice::degree_dp(n)
}

/// `D_n` at `q1 = q2 = 1`, all `x_i = 0`.
pub fn degree_from_mdeg(d: &Multidegree) -> Result<Rational> {
    let mut assign = vec![(Var::Q1, Rational::from_integer(1.into())), (Var::Q2, Rational::from_integer(1.into()))];
    for i in 1..=d.n {
        assign.push((x(i), Rational::from_integer(0.into())));
    }
    d.poly.eval(&assign)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    /// `K_n(q1, q2) = K_n(q2, q1)`.
    pub swap: bool,
    /// `K_n(q1, q2) = (q1 q2^2)^{n(n-1)/2} K_n(q1, (q1 q2)^{-1})`.
    pub inversion: bool,
}

pub fn symmetry_check(k: &KPolynomial) -> Result<SymmetryReport> {
    let swap = k.poly.rename(&[(Var::Q1, Var::Q2), (Var::Q2, Var::Q1)]) == k.poly;
    let e = (k.n * k.n.saturating_sub(1) / 2) as i32;
    let inv = k
        .poly
        .substitute(&[(Var::Q2, Value::mono(Monomial::from_pairs(&[(Var::Q1, -1), (Var::U, -1)])))])?
        .rename(&[(Var::U, Var::Q2)])
        .mul_mono(&Monomial::from_pairs(&[(Var::Q1, e), (Var::Q2, 2 * e)]));
    Ok(SymmetryReport { swap, inversion: inv == k.poly })
}

/// Coefficients of `K_n` at `x_i = 1` as `(q2 exponent, q1 exponent, coefficient)`.
pub fn x1_table(k: &KPolynomial) -> Result<Vec<(i32, i32, Rational)>> {
    let assign: Vec<(Var, Value)> = (1..=k.n).map(|i| (x(i), Value::int(1))).collect();
    let p = k.poly.substitute(&assign)?;
    let mut out: Vec<(i32, i32, Rational)> =
        p.terms().iter().map(|(m, c)| (m.exp(Var::Q2), m.exp(Var::Q1), c.clone())).collect();
    out.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn small_k() {
        assert!(kpoly(0).unwrap().poly.is_one());
        assert!(kpoly(1).unwrap().poly.is_one());
        let k2 = lp("1 + q1^2 q2 - q1 q2 x1 x2^-1 - q1 q2 - q1 q2 x1^-1 x2 + q1 q2^2");
        assert_eq!(kpoly(2).unwrap().poly, k2);
        assert_eq!(kpoly_from_f(2).unwrap().poly, k2);
    }

    #[test]
    fn three_routes_agree_n3() {
        let a = kpoly(3).unwrap();
        assert_eq!(a, kpoly_from_f(3).unwrap());
        assert_eq!(a, kpoly_lattice(3).unwrap());
    }

    #[test]
    fn conversion() {
        assert_eq!(var_convert(&lp("t"), VarDirection::QtToQ1Q2).unwrap(), lp("q1^-1 q2^-1"));
        assert_eq!(var_convert(&lp("q^-1"), VarDirection::QtToQ1Q2).unwrap(), lp("q1"));
        assert!(var_convert(&lp("q + q1"), VarDirection::QtToQ1Q2).is_err());
        let p = lp("q^2 t^-3 x1 - 5 t + 1");
        let back = var_convert(&var_convert(&p, VarDirection::QtToQ1Q2).unwrap(), VarDirection::Q1Q2ToQt).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn grr_examples() {
        assert_eq!(grr_expand(&lp("1 - q1 q2")).unwrap(), (1, lp("q1 + q2")));
        assert_eq!(grr_expand(&LaurentPoly::one()).unwrap(), (0, LaurentPoly::one()));
        let d2 = grr_limit(&kpoly(2).unwrap()).unwrap();
        assert_eq!(d2, mdeg(2, MdegMethod::Lattice).unwrap());
        assert_eq!(d2, mdeg(2, MdegMethod::Symmetrize).unwrap());
    }

    #[test]
    fn mdeg_small() {
        assert!(mdeg(1, MdegMethod::Lattice).unwrap().poly.is_one());
        assert!(mdeg(1, MdegMethod::Symmetrize).unwrap().poly.is_one());
        assert_eq!(bidegree_constant_term(2), lp("q1^2 + q1 q2 + q2^2"));
    }

    #[test]
    fn symmetries() {
        for n in 1..=3 {
            let r = symmetry_check(&kpoly(n).unwrap()).unwrap();
            assert!(r.swap && r.inversion, "n = {n}");
        }
        let bad = KPolynomial { n: 2, poly: lp("1 + q1") };
        assert!(!symmetry_check(&bad).unwrap().swap);
    }
}
