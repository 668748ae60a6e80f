//! The Hecke algebra `H_n` in the standard basis, its center and the
//! shuffle product on the tower of centers.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{linalg, qint, LaurentPoly, Monomial, Var};
use crate::perm::Perm;
use crate::symfunc::{Partition, SymFunc};

/// Largest grade accepted by [`frobenius_phi`] unless a caller raises it.
pub const PHI_MAX_GRADE: usize = 5;

fn t() -> LaurentPoly {
    LaurentPoly::var(Var::T)
}

fn t_pow(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::T, e)
}

/// `Σ c_w T_w` with Laurent-polynomial coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    coeffs: BTreeMap<Perm, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    pub fn basis(w: Perm) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: Perm, c: LaurentPoly) -> Self {
        let mut e = Self::zero(w.n());
        e.add_term(w, c);
        e
    }

    /// The generator `T_i` of `H_n`.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(Self::basis(Perm::identity(n).mul_simple_right(i)))
    }

    pub fn grade(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Perm, LaurentPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, w: &Perm) -> LaurentPoly {
        self.coeffs.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, w: Perm, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.coeffs.remove(&w);
                }
            }
            None => {
                self.coeffs.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_grade(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (w, x) in &self.coeffs {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    fn check_grade(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GradeMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `T_i · self`.
    pub fn left_gen(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        let tm1 = &t() - &LaurentPoly::one();
        for (w, c) in &self.coeffs {
            let sw = w.mul_simple_left(i);
            if w.left_ascent(i) {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(w.clone(), c * &tm1);
                out.add_term(sw, c * &t());
            }
        }
        out
    }

    /// `self · T_i`.
    pub fn right_gen(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        let tm1 = &t() - &LaurentPoly::one();
        for (w, c) in &self.coeffs {
            let ws = w.mul_simple_right(i);
            if w.right_ascent(i) {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w.clone(), c * &tm1);
                out.add_term(ws, c * &t());
            }
        }
        out
    }

    /// `T_w · self`.
    pub fn left_mul_basis(&self, w: &Perm) -> Self {
        let mut out = self.clone();
        for &i in w.reduced_word().iter().rev() {
            out = out.left_gen(i);
        }
        out
    }

    /// `self · T_w`.
    pub fn right_mul_basis(&self, w: &Perm) -> Self {
        let mut out = self.clone();
        for &i in &w.reduced_word() {
            out = out.right_gen(i);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_grade(other)?;
        let mut out = Self::zero(self.n);
        if self.coeffs.len() <= other.coeffs.len() {
            for (w, c) in &self.coeffs {
                for (v, x) in other.left_mul_basis(w).coeffs {
                    out.add_term(v, &x * c);
                }
            }
        } else {
            for (w, c) in &other.coeffs {
                for (v, x) in self.right_mul_basis(w).coeffs {
                    out.add_term(v, &x * c);
                }
            }
        }
        Ok(out)
    }

    /// Embed into `H_n` on the first `self.grade()` strands.
    pub fn embed(&self, n: usize) -> Self {
        let mut out = Self::zero(n);
        for (w, c) in &self.coeffs {
            out.add_term(w.embed(n), c.clone());
        }
        out
    }

    /// `a ⊗ b ∈ H_{k+l}`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n);
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                out.add_term(u.direct_sum(v), a * b);
            }
        }
        out
    }

    pub fn is_central(&self) -> bool {
        (1..self.n).all(|i| self.left_gen(i) == self.right_gen(i))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(w, c)| serde_json::json!({ "perm": w.to_string(), "coeff": c.to_json() }))
                .collect(),
        )
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) T[{w}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of the center of `H_n`, checked on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CenterElement(HeckeElement);

impl CenterElement {
    pub fn new(h: HeckeElement) -> Result<Self> {
        if !h.is_central() {
            return Err(Error::NotCentral);
        }
        debug_assert!(h.coeffs.iter().all(|(w, c)| h.coeff(&w.inverse()) == *c));
        Ok(CenterElement(h))
    }

    pub fn one(n: usize) -> Self {
        CenterElement(HeckeElement::one(n))
    }

    pub fn inner(&self) -> &HeckeElement {
        &self.0
    }

    pub fn grade(&self) -> usize {
        self.0.n
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        CenterElement(self.0.scale(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(CenterElement(self.0.add(&other.0)?))
    }

    /// Coefficient symmetry `c_v = c_{v^{-1}}`.
    pub fn inverse_symmetric(&self) -> bool {
        self.0.coeffs.iter().all(|(w, c)| self.0.coeff(&w.inverse()) == *c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetrizerKind {
    Complete,
    Anti,
}

/// `S_n = Σ T_w` or `A_n = Σ (-t)^{-|w|} T_w`.
pub fn symmetrizer(n: usize, kind: SymmetrizerKind) -> CenterElement {
    let mut h = HeckeElement::zero(n);
    for w in Perm::all(n) {
        let c = match kind {
            SymmetrizerKind::Complete => LaurentPoly::one(),
            SymmetrizerKind::Anti => {
                let l = w.length() as i32;
                t_pow(-l).scale(&crate::kernel::int(if l % 2 == 0 { 1 } else { -1 }))
            }
        };
        h.add_term(w, c);
    }
    CenterElement(h)
}

pub fn complete_symmetrizer(n: usize) -> CenterElement {
    symmetrizer(n, SymmetrizerKind::Complete)
}

pub fn antisymmetrizer(n: usize) -> CenterElement {
    symmetrizer(n, SymmetrizerKind::Anti)
}

/// `a * b = Σ_{w ∈ S^{k,l}} t^{-|w|} T_w (a ⊗ b) T_{w^{-1}}`.
pub fn center_shuffle(a: &CenterElement, b: &CenterElement) -> Result<CenterElement> {
    let (k, l) = (a.grade(), b.grade());
    if k == 0 {
        return Ok(b.clone());
    }
    if l == 0 {
        return Ok(a.clone());
    }
    let x = a.0.tensor(&b.0);
    let mut out = HeckeElement::zero(k + l);
    for w in Perm::coset_reps(&[k, l])? {
        let term = x.left_mul_basis(&w).right_mul_basis(&w.inverse());
        let c = t_pow(-(w.length() as i32));
        for (v, y) in term.coeffs {
            out.add_term(v, &y * &c);
        }
    }
    if !out.is_central() {
        return Err(Error::CentralityViolation);
    }
    Ok(CenterElement(out))
}

/// Shuffle product of several central elements, left to right.
pub fn center_shuffle_all(items: &[CenterElement]) -> Result<CenterElement> {
    let mut acc = CenterElement::one(0);
    for c in items {
        acc = center_shuffle(&acc, c)?;
    }
    Ok(acc)
}

/// `A_λ = A_{λ1} * ⋯ * A_{λm}`.
pub fn antisymmetrizer_product(lambda: &Partition) -> Result<CenterElement> {
    center_shuffle_all(&lambda.parts().iter().map(|&p| antisymmetrizer(p)).collect::<Vec<_>>())
}

/// `J_{j,n} = Σ_{i<j} t^{i-j+1} T_i ⋯ T_{j-1} ⋯ T_i`.
pub fn jucys_murphy(j: usize, n: usize) -> Result<HeckeElement> {
    if j < 2 || j > n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    let mut h = HeckeElement::zero(n);
    for i in 1..j {
        let mut word: Vec<usize> = (i..j).collect();
        word.extend((i..j - 1).rev());
        let mut e = HeckeElement::one(n);
        for &g in &word {
            e = e.right_gen(g);
        }
        h = h.add(&e.scale(&t_pow(i as i32 - j as i32 + 1)))?;
    }
    Ok(h)
}

/// `Ψ(p_r) = [r]_{t^{-1}} J_{2,r} ⋯ J_{r,r}`.
pub fn psi_p(r: usize) -> Result<CenterElement> {
    if r == 0 {
        return Err(Error::IndexOutOfRange { index: 0, n: 0 });
    }
    let mut h = HeckeElement::one(r);
    for j in 2..=r {
        h = h.mul(&jucys_murphy(j, r)?)?;
    }
    let h = h.scale(&qint(r, &Monomial::pow_of(Var::T, -1)));
    CenterElement::new(h).map_err(|_| Error::CentralityViolation)
}

/// `Ψ(p_λ) = Ψ(p_{λ1}) * ⋯ * Ψ(p_{λm})`.
pub fn psi_partition(lambda: &Partition) -> Result<CenterElement> {
    let parts = lambda.parts().iter().map(|&r| psi_p(r)).collect::<Result<Vec<_>>>()?;
    center_shuffle_all(&parts)
}

/// The inverse of `Ψ`, by an exact solve in the basis `{Ψ(p_λ)}`.
pub fn frobenius_phi(c: &CenterElement) -> Result<SymFunc> {
    frobenius_phi_bounded(c, PHI_MAX_GRADE)
}

pub fn frobenius_phi_bounded(c: &CenterElement, max_grade: usize) -> Result<SymFunc> {
    let n = c.grade();
    if n > max_grade {
        return Err(Error::GradeTooLarge(n, max_grade));
    }
    if n == 0 {
        return Ok(SymFunc::term(Partition::empty(), c.0.coeff(&Perm::identity(0)).into()));
    }
    let parts = Partition::all(n);
    let basis = parts.iter().map(psi_partition).collect::<Result<Vec<_>>>()?;
    let perms = Perm::all(n);
    let rows: Vec<Vec<LaurentPoly>> =
        perms.iter().map(|w| basis.iter().map(|b| b.0.coeff(w)).collect()).collect();
    let rhs: Vec<LaurentPoly> = perms.iter().map(|w| c.0.coeff(w)).collect();
    let x = linalg::solve(&rows, &rhs)?;
    let mut out = SymFunc::zero();
    for (lambda, a) in parts.into_iter().zip(x) {
        out = out.add(&SymFunc::term(lambda, a));
    }
    Ok(out)
}

/// `Ř_i(u) = (1-t) + (1-u) T_i` in `H_n`.
pub fn r_matrix(i: usize, u: &LaurentPoly, n: usize) -> Result<HeckeElement> {
    let one = LaurentPoly::one();
    let gen = HeckeElement::generator(i, n)?;
    HeckeElement::one(n).scale(&(&one - &t())).add(&gen.scale(&(&one - u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::symfunc::{complete, elementary, Plethysm};

    fn tt() -> LaurentPoly {
        t()
    }

    #[test]
    fn quadratic_relation() {
        let t1 = HeckeElement::generator(1, 2).unwrap();
        let sq = t1.mul(&t1).unwrap();
        let want = t1.scale(&(&tt() - &LaurentPoly::one())).add(&HeckeElement::one(2).scale(&tt())).unwrap();
        assert_eq!(sq, want);
        let t2 = HeckeElement::generator(2, 3).unwrap();
        let t1 = HeckeElement::generator(1, 3).unwrap();
        assert_eq!(t1.mul(&t2).unwrap(), HeckeElement::basis("231".parse().unwrap()));
    }

    #[test]
    fn symmetrizers_small() {
        let s2 = complete_symmetrizer(2);
        let a2 = antisymmetrizer(2);
        assert!(s2.inner().mul(a2.inner()).unwrap().is_zero());
        assert_eq!(a2.inner().coeff(&"21".parse().unwrap()), -t_pow(-1));
        assert!(s2.inner().is_central() && a2.inner().is_central());
    }

    #[test]
    fn shuffle_of_units() {
        let u = CenterElement::one(1);
        let p = center_shuffle(&u, &u).unwrap();
        let want = HeckeElement::one(2)
            .scale(&LaurentPoly::from_int(2))
            .add(&HeckeElement::generator(1, 2).unwrap().scale(&(&LaurentPoly::one() - &t_pow(-1))))
            .unwrap();
        assert_eq!(p.inner(), &want);
    }

    #[test]
    fn psi_small() {
        assert_eq!(jucys_murphy(2, 2).unwrap(), HeckeElement::generator(1, 2).unwrap());
        assert_eq!(psi_p(1).unwrap(), CenterElement::one(1));
        let want = HeckeElement::generator(1, 2).unwrap().scale(&(&LaurentPoly::one() + &t_pow(-1)));
        assert_eq!(psi_p(2).unwrap().inner(), &want);
    }

    #[test]
    fn phi_grade_two() {
        assert_eq!(frobenius_phi(&complete_symmetrizer(2)).unwrap(), complete(2));
        assert_eq!(frobenius_phi(&antisymmetrizer(2)).unwrap(), elementary(2));
        let got = frobenius_phi(&CenterElement::one(2)).unwrap();
        let want = complete(2).apply(&Plethysm::Sigma(Monomial::var(Var::T))).unwrap();
        assert_eq!(got, want);
        let _ = rat(1, 2);
    }

    #[test]
    fn r_matrix_special_values() {
        let one = LaurentPoly::one();
        let r = r_matrix(1, &t_pow(-1), 2).unwrap();
        assert_eq!(r, antisymmetrizer(2).inner().scale(&(&one - &tt())));
        let r = r_matrix(1, &tt(), 2).unwrap();
        assert_eq!(r, complete_symmetrizer(2).inner().scale(&(&one - &tt())));
        let r = r_matrix(1, &one, 2).unwrap();
        assert_eq!(r, HeckeElement::one(2).scale(&(&one - &tt())));
    }
}
