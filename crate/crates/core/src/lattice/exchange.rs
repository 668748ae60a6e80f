use std::collections::BTreeMap;

use crate::error::Result;
use crate::hecke::{r_matrix, HeckeElement};
use crate::kernel::{LaurentPoly, Monomial, Var};
use crate::perm::Perm;

/// Which family of exchange relations drives the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExchangeRoute {
    /// Left multiplication `v ↦ s_i v`, swapping `x_i, x_{i+1}`.
    X,
    /// Right multiplication `v ↦ v s_j`, swapping `y_j, y_{j+1}`.
    Y,
}

fn t() -> LaurentPoly {
    LaurentPoly::var(Var::T)
}

/// `F_{w0} = (1-t)^n t^{n(n-1)/2} ∏_{i+j<n+1} (1 - x_i/y_j) ∏_{i+j>n+1} (1 - t x_i/y_j)`.
pub fn f_longest(n: usize) -> LaurentPoly {
    let mut f = LaurentPoly::one_minus(Monomial::var(Var::T))
        .pow(n as u32)
        .mul_mono(&Monomial::pow_of(Var::T, (n * (n - 1) / 2) as i32));
    for i in 1..=n {
        for j in 1..=n {
            let u = Monomial::from_pairs(&[(Var::x(i), 1), (Var::y(j), -1)]);
            if i + j < n + 1 {
                f = &f * &LaurentPoly::one_minus(u);
            } else if i + j > n + 1 {
                f = &f * &LaurentPoly::one_minus(u.mul(&Monomial::var(Var::T)));
            }
        }
    }
    f
}

/// Every `F_v(x, y)`, obtained from `F_{w0}` by descending along the chosen route.
pub fn exchange_compute_f(n: usize, route: ExchangeRoute) -> Result<BTreeMap<Perm, LaurentPoly>> {
    let mut known = BTreeMap::new();
    known.insert(Perm::longest(n), f_longest(n));
    let mut frontier = vec![Perm::longest(n)];
    while let Some(v) = frontier.pop() {
        let fv = known[&v].clone();
        for k in 1..n {
            let (next, a, b) = match route {
                ExchangeRoute::X if !v.left_ascent(k) => (v.mul_simple_left(k), Var::x(k + 1), Var::x(k)),
                ExchangeRoute::Y if !v.right_ascent(k) => (v.mul_simple_right(k), Var::y(k), Var::y(k + 1)),
                _ => continue,
            };
            if known.contains_key(&next) {
                continue;
            }
            // (1 - t z) τ F_v = (1-t) z F_v + t (1 - z) F_next,  z = a/b
            let z = Monomial::from_pairs(&[(a, 1), (b, -1)]);
            let swapped = fv.rename(&[(a, b), (b, a)]);
            let lhs = &LaurentPoly::one_minus(z.mul(&Monomial::var(Var::T))) * &swapped;
            let rhs = (&LaurentPoly::one() - &t()).mul_mono(&z);
            let num = &lhs - &(&rhs * &fv);
            let den = &t() * &LaurentPoly::one_minus(z);
            known.insert(next.clone(), num.div_exact(&den)?);
            frontier.push(next);
        }
    }
    Ok(known)
}

/// `Z = ∏_{j=1..n} ∏_{i=n..1} Ř_{i+j-1}(x_i / y_j)` in `H_{2n}`.
pub fn formal_partition_function(n: usize) -> Result<HeckeElement> {
    let mut z = HeckeElement::one(2 * n);
    for j in 1..=n {
        for i in (1..=n).rev() {
            let u = LaurentPoly::mono(Monomial::from_pairs(&[(Var::x(i), 1), (Var::y(j), -1)]));
            z = z.mul(&r_matrix(i + j - 1, &u, 2 * n)?)?;
        }
    }
    Ok(z)
}

/// `⟨1| Z |v⟩ = Σ_{u ∈ S^{(2)}} t^{|uv|} Z_{uv}` for `v` acting on the first `n` letters.
pub fn contract_formal_partition_function(z: &HeckeElement, v: &Perm) -> LaurentPoly {
    let n = v.n();
    let v2 = v.embed(2 * n);
    let mut out = LaurentPoly::zero();
    for u in Perm::all(n) {
        let w = Perm::identity(n).direct_sum(&u).compose(&v2);
        let c = z.coeff(&w);
        if !c.is_zero() {
            out += &c.mul_mono(&Monomial::pow_of(Var::T, w.length() as i32));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{partition_fn_all, WeightScheme};

    #[test]
    fn longest_matches_sweep() {
        for n in 1..=3 {
            let all = partition_fn_all(n, WeightScheme::WtGeneral).unwrap();
            assert_eq!(all[&Perm::longest(n)], f_longest(n));
        }
    }

    #[test]
    fn both_routes_n2() {
        let all = partition_fn_all(2, WeightScheme::WtGeneral).unwrap();
        for route in [ExchangeRoute::X, ExchangeRoute::Y] {
            let ex = exchange_compute_f(2, route).unwrap();
            assert_eq!(ex, all, "{route:?}");
        }
    }

    #[test]
    fn formal_contraction_n2() {
        let z = formal_partition_function(2).unwrap();
        let all = partition_fn_all(2, WeightScheme::WtGeneral).unwrap();
        for v in Perm::all(2) {
            assert_eq!(contract_formal_partition_function(&z, &v), all[&v], "v = {v}");
        }
    }
}
