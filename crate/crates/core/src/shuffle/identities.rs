//! Expressions that vanish identically in the shuffle algebra.

use super::{epsilon_n, qk, ShuffleCal, ShuffleExpr};
use crate::kernel::{LaurentPoly, Monomial};

fn one_minus(m: Monomial) -> LaurentPoly {
    LaurentPoly::one_minus(m)
}

fn mono(m: Monomial) -> LaurentPoly {
    LaurentPoly::mono(m)
}

/// `Σ_j (q_k^j - q_l^{n-j}) (1-q_l)^j (1-q_k)^{n-j} ε_{n-j}(q_k) * ε_j(q_l)`.
pub fn wronski_expr(n: usize, k: usize, l: usize) -> ShuffleExpr {
    let (a, b) = (qk(k), qk(l));
    let terms = (0..=n)
        .map(|j| {
            let c = &(&mono(a.pow(j as i32)) - &mono(b.pow((n - j) as i32)))
                * &(&one_minus(b).pow(j as u32) * &one_minus(a).pow((n - j) as u32));
            let prod = ShuffleExpr::Product(vec![
                ShuffleExpr::Leaf(epsilon_n(n - j, k)),
                ShuffleExpr::Leaf(epsilon_n(j, l)),
            ]);
            (c, prod)
        })
        .collect();
    ShuffleExpr::Sum(n, terms)
}

/// `(1 - q_k^{-n}) κ_n - Σ_{j<n} q_k^{-n} (q_k - 1)^{n-j} κ_j * ε_{n-j}(q_k)`,
/// with `kappas[j] = κ_j`.
pub fn wronski_lem_expr(kappas: &[ShuffleExpr], k: usize) -> ShuffleExpr {
    let n = kappas.len() - 1;
    let a = qk(k);
    let inv_n = a.pow(-(n as i32));
    let mut terms = vec![(one_minus(inv_n), kappas[n].clone())];
    for (j, kj) in kappas.iter().enumerate().take(n) {
        let c = &mono(inv_n) * &(&mono(a) - &LaurentPoly::one()).pow((n - j) as u32);
        let prod = ShuffleExpr::Product(vec![kj.clone(), ShuffleExpr::Leaf(epsilon_n(n - j, k))]);
        terms.push((-c, prod));
    }
    ShuffleExpr::Sum(n, terms)
}

/// `(x_1 + … + x_n) κ_n - κ_{n-1} * x`.
pub fn kappa_x_expr(kappa_n: ShuffleExpr, kappa_prev: ShuffleExpr) -> ShuffleExpr {
    let n = crate::shuffle::Evaluate::grade(&kappa_n);
    let prod = ShuffleExpr::Product(vec![kappa_prev, ShuffleExpr::Leaf(ShuffleCal::x_power(1))]);
    ShuffleExpr::Sum(n, vec![(LaurentPoly::one(), ShuffleExpr::MulE1(Box::new(kappa_n))), (LaurentPoly::from_int(-1), prod)])
}

/// `(1 - q_k)(x_1 + … + x_n) ε_n(q_k) - (x * ε_{n-1}(q_k) - q_k ε_{n-1}(q_k) * x)`.
pub fn epsilon_rec_expr(n: usize, k: usize) -> ShuffleExpr {
    let a = qk(k);
    let x = || ShuffleExpr::Leaf(ShuffleCal::x_power(1));
    let e = || ShuffleExpr::Leaf(epsilon_n(n - 1, k));
    ShuffleExpr::Sum(
        n,
        vec![
            (one_minus(a), ShuffleExpr::MulE1(Box::new(ShuffleExpr::Leaf(epsilon_n(n, k))))),
            (LaurentPoly::from_int(-1), ShuffleExpr::Product(vec![x(), e()])),
            (mono(a), ShuffleExpr::Product(vec![e(), x()])),
        ],
    )
}
