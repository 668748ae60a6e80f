//! Row-by-row transfer sweep over the grid, bottom row first.
//!
//! The frontier holds the n vertical cut edges (packed 4 bits each) and the
//! horizontal edge entering the next cell (bits `4n..4n+4`).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rustc_hash::FxHashMap;

use super::{Vertex, VertexClass, WeightScheme, EMPTY};
use crate::error::{Error, Result};
use crate::hecke::CenterElement;
use crate::kernel::{LaurentPoly, Monomial, Var};
use crate::perm::Perm;

/// Default cap on live frontier states.
pub const DEFAULT_STATE_BUDGET: usize = 50_000_000;

#[inline]
fn get(state: u64, slot: usize) -> u8 {
    ((state >> (4 * slot)) & 0xf) as u8
}

#[inline]
fn set(state: u64, slot: usize, label: u8) -> u64 {
    (state & !(0xf << (4 * slot))) | ((label as u64) << (4 * slot))
}

/// Runs the sweep and returns the accumulated value for each top boundary.
///
/// `step(value, i, j, class)` multiplies in the weight of one vertex;
/// `merge` adds a value into an accumulator.
fn sweep<W: Clone + Send>(
    n: usize,
    target: Option<&Perm>,
    init: W,
    budget: usize,
    step: impl Fn(&W, usize, usize, VertexClass) -> Result<W>,
    merge: impl Fn(&mut W, W) -> Result<()>,
) -> Result<FxHashMap<u64, W>> {
    assert!((1..=15).contains(&n), "grid size out of range");
    let mut col_of = vec![n; n + 1];
    if let Some(v) = target {
        let inv = v.inverse();
        for (p, c) in col_of.iter_mut().enumerate().skip(1) {
            *c = inv.at(p);
        }
    }
    let h = n;
    let mut states: FxHashMap<u64, W> = FxHashMap::default();
    states.insert(0, init);
    for i in (1..=n).rev() {
        let mut entering: FxHashMap<u64, W> = FxHashMap::default();
        for (s, w) in states {
            entering.insert(set(s, h, i as u8), w);
        }
        states = entering;
        for j in 1..=n {
            let mut next: FxHashMap<u64, W> =
                FxHashMap::with_capacity_and_hasher(states.len() * 2, Default::default());
            for (s, w) in &states {
                let left = get(*s, h);
                let bottom = get(*s, j - 1);
                for (top, right, class) in Vertex::continuations(left, bottom) {
                    if right != EMPTY && (j == n || j + 1 > col_of[right as usize]) {
                        continue;
                    }
                    if top != EMPTY && j > col_of[top as usize] {
                        continue;
                    }
                    if i == 1 {
                        if let Some(v) = target {
                            if top as usize != v.at(j) {
                                continue;
                            }
                        }
                    }
                    let key = set(set(*s, j - 1, top), h, right);
                    let val = step(w, i, j, class)?;
                    match next.get_mut(&key) {
                        Some(acc) => merge(acc, val)?,
                        None => {
                            next.insert(key, val);
                        }
                    }
                }
            }
            if next.len() > budget {
                return Err(Error::ResourceBudgetExceeded(format!(
                    "{} frontier states exceed the budget of {budget}",
                    next.len()
                )));
            }
            states = next;
        }
    }
    Ok(states)
}

fn top_labels(state: u64, n: usize) -> Option<Perm> {
    Perm::new((0..n).map(|c| get(state, c)).collect()).ok()
}

/// `F_v` for every connectivity `v` at once.
pub fn partition_fn_all(n: usize, scheme: WeightScheme) -> Result<BTreeMap<Perm, LaurentPoly>> {
    poly_sweep(n, None, scheme)
}

/// `F_v` for a single connectivity.
pub fn partition_fn_single(v: &Perm, scheme: WeightScheme) -> Result<LaurentPoly> {
    Ok(poly_sweep(v.n(), Some(v), scheme)?.remove(v).unwrap_or_else(LaurentPoly::zero))
}

fn poly_sweep(n: usize, target: Option<&Perm>, scheme: WeightScheme) -> Result<BTreeMap<Perm, LaurentPoly>> {
    let mut table: FxHashMap<(usize, usize, VertexClass), LaurentPoly> = FxHashMap::default();
    for i in 1..=n {
        for j in 1..=n {
            for c in VertexClass::ALL {
                table.insert((i, j, c), scheme.weight(c, i, j));
            }
        }
    }
    let states = sweep(
        n,
        target,
        LaurentPoly::one(),
        DEFAULT_STATE_BUDGET,
        |w, i, j, c| Ok(w * &table[&(i, j, c)]),
        |acc, w| {
            *acc += w;
            Ok(())
        },
    )?;
    let mut out = BTreeMap::new();
    for (s, w) in states {
        if let Some(v) = top_labels(s, n) {
            if !w.is_zero() {
                out.insert(v, w);
            }
        }
    }
    Ok(out)
}

fn alpha_numerator(n: usize) -> Monomial {
    let k = (n * (n - 1) / 2) as i32;
    Monomial::from_pairs(&[(Var::Q, k), (Var::T, -k)])
}

/// `f(c) = α_n Σ_v c_v F_v(x, qx)` with `α_n = (q/t)^{n(n-1)/2} (1-t)^{-n}`.
pub fn partition_fn_f(c: &CenterElement) -> Result<LaurentPoly> {
    let fs = partition_fn_all(c.grade(), WeightScheme::Wt)?;
    partition_fn_f_with(c, &fs)
}

/// [`partition_fn_f`] for several central elements of the same grade, sharing one sweep.
pub fn partition_fn_f_many(cs: &[CenterElement]) -> Result<Vec<LaurentPoly>> {
    let Some(first) = cs.first() else { return Ok(Vec::new()) };
    let n = first.grade();
    if let Some(bad) = cs.iter().find(|c| c.grade() != n) {
        return Err(Error::GradeMismatch(n, bad.grade()));
    }
    let fs = partition_fn_all(n, WeightScheme::Wt)?;
    cs.iter().map(|c| partition_fn_f_with(c, &fs)).collect()
}

fn partition_fn_f_with(c: &CenterElement, fs: &BTreeMap<Perm, LaurentPoly>) -> Result<LaurentPoly> {
    let n = c.grade();
    if n == 0 {
        return Ok(c.inner().coeff(&Perm::identity(0)));
    }
    if !c.inner().is_central() {
        return Err(Error::NotCentral);
    }
    let mut sum = LaurentPoly::zero();
    for (v, cv) in c.inner().coeffs() {
        if let Some(f) = fs.get(v) {
            sum += &(cv * f);
        }
    }
    let one_minus_t = LaurentPoly::one_minus(Monomial::var(Var::T));
    let sum = sum.div_exact(&one_minus_t.pow(n as u32))?;
    Ok(sum.mul_mono(&alpha_numerator(n)))
}

/// `K_n = (1 - q1 q2)^{-n} Σ_P wt_K(P)` over identity configurations.
pub fn k_polynomial_lattice(n: usize) -> Result<LaurentPoly> {
    let s = partition_fn_single(&Perm::identity(n), WeightScheme::WtK)?;
    let b = LaurentPoly::one_minus(Monomial::from_pairs(&[(Var::Q1, 1), (Var::Q2, 1)]));
    s.div_exact(&b.pow(n as u32))
}

/// `D_n = (q1 + q2)^{-n} Σ_P wt_H(P)` over identity configurations.
pub fn mdeg_lattice(n: usize) -> Result<LaurentPoly> {
    let s = partition_fn_single(&Perm::identity(n), WeightScheme::WtH)?;
    let b = &LaurentPoly::var(Var::Q1) + &LaurentPoly::var(Var::Q2);
    s.div_exact(&b.pow(n as u32))
}

/// Per-class shift so that a configuration contributes exactly `2^{#bends - n}`:
/// `#BendLowerSingle - #BendUpperSingle = n` on every identity configuration.
fn degree_shift(c: VertexClass) -> u32 {
    match c {
        VertexClass::BendLowerPair | VertexClass::BendUpperPair => 1,
        VertexClass::BendUpperSingle => 2,
        _ => 0,
    }
}

/// `deg 𝔠_n = Σ_P 2^{#bends - n}` over identity configurations.
pub fn degree_dp(n: usize) -> Result<BigUint> {
    degree_dp_with_budget(n, DEFAULT_STATE_BUDGET)
}

pub fn degree_dp_with_budget(n: usize, budget: usize) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    let target = Perm::identity(n);
    let fast = sweep(
        n,
        Some(&target),
        1u128,
        budget,
        |w, _, _, c| w.checked_shl(degree_shift(c)).filter(|x| x >> degree_shift(c) == *w).ok_or(Error::NonExactDivision),
        |acc, w| {
            *acc = acc.checked_add(w).ok_or(Error::NonExactDivision)?;
            Ok(())
        },
    );
    match fast {
        Ok(states) => Ok(BigUint::from(states.into_values().sum::<u128>())),
        Err(Error::NonExactDivision) => {
            let states = sweep(
                n,
                Some(&target),
                BigUint::from(1u32),
                budget,
                |w, _, _, c| Ok(w << degree_shift(c)),
                |acc, w| {
                    *acc += w;
                    Ok(())
                },
            )?;
            Ok(states.into_values().sum())
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{count_configs, degree_brute, enumerate_configs};

    #[test]
    fn sweep_matches_enumeration() {
        for n in 1..=3 {
            let all = partition_fn_all(n, WeightScheme::WtGeneral).unwrap();
            assert_eq!(all.len(), (1..=n).product::<usize>());
            for (v, f) in &all {
                let direct: LaurentPoly =
                    LaurentPoly::sum(enumerate_configs(v).iter().map(|c| c.weight(WeightScheme::WtGeneral)));
                assert_eq!(&direct, f, "v = {v}");
            }
        }
        assert_eq!(count_configs(&Perm::identity(2)), 2);
    }

    #[test]
    fn k2_from_weights() {
        let k2 = k_polynomial_lattice(2).unwrap();
        let want = LaurentPoly::parse("1 + q1^2 q2 - q1 q2 x1 x2^-1 - q1 q2 - q1 q2 x1^-1 x2 + q1 q2^2").unwrap();
        assert_eq!(k2, want);
    }

    #[test]
    fn small_f() {
        assert!(partition_fn_f(&CenterElement::one(1)).unwrap().is_one());
        let a2 = crate::hecke::antisymmetrizer(2);
        let want = LaurentPoly::parse("t^-1 - x1 x2^-1 - x1^-1 x2 + t").unwrap();
        assert_eq!(partition_fn_f(&a2).unwrap(), want);
    }

    #[test]
    fn degree_small() {
        for n in 1..=5 {
            assert_eq!(degree_dp(n).unwrap(), degree_brute(n), "n = {n}");
        }
    }
}
