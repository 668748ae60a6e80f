//! Named verification suites.
//!
//! Each suite has a default bound on `n`; [`VerifyOptions::max_n`] replaces it, so
//! a single flag scales every suite at once. Randomized evaluation points are
//! drawn from [`VerifyOptions::seed`].

use std::fmt;

use num_bigint::BigUint;
use serde_json::json;

use crate::commscheme::{self, KPolynomial, MdegMethod};
use crate::error::{Error, Result};
use crate::hecke::{self, center_shuffle_all, complete_symmetrizer, CenterElement, HeckeElement};
use crate::kernel::{qfactorial, Fraction, LaurentPoly, Monomial, Rational, Value, Var};
use crate::lattice::{self, ExchangeRoute, WeightScheme};
use crate::perm::Perm;
use crate::shuffle::{self, Evaluate, ShuffleA, ShuffleCal, ShuffleExpr};
use crate::symfunc::{elementary, Partition, Plethysm};

/// Coefficients of `K_3` at `x_i = 1`, as `(q2 exponent, q1 exponent, coefficient)`.
pub const K3_X1_TABLE: [(i32, i32, i64); 22] = [
    (0, 0, 1),
    (1, 1, -8),
    (1, 2, 1),
    (1, 3, 1),
    (2, 1, 1),
    (2, 2, 29),
    (2, 3, -16),
    (2, 4, 1),
    (3, 1, 1),
    (3, 2, -16),
    (3, 3, -27),
    (3, 4, 29),
    (3, 5, -8),
    (3, 6, 1),
    (4, 2, 1),
    (4, 3, 29),
    (4, 4, -16),
    (4, 5, 1),
    (5, 3, -8),
    (5, 4, 1),
    (5, 5, 1),
    (6, 3, 1),
];

pub const DEGREE_12: &str = "1862632561783036151478238040096092649";

/// `K_2` in the `q1, q2` alphabet.
pub const K2: &str = "1 + q1^2 q2 - q1 q2 x1 x2^-1 - q1 q2 - q1 q2 x1^-1 x2 + q1 q2^2";

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Replaces every suite's default bound when set.
    pub max_n: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: None, seed: 2024 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Empty on success, a diff report otherwise.
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub bound: usize,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "suite": self.suite,
            "bound": self.bound,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "passed": c.passed, "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n <= {}): {}", self.suite, self.bound, if self.passed() { "ok" } else { "FAILED" })?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name)?;
            for line in c.detail.lines() {
                writeln!(f, "      {line}")?;
            }
        }
        Ok(())
    }
}

type SuiteFn = fn(usize, &VerifyOptions) -> Result<Vec<CheckOutcome>>;

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    pub default_max_n: usize,
    run: SuiteFn,
}

impl Suite {
    pub fn bound(&self, opts: &VerifyOptions) -> usize {
        opts.max_n.unwrap_or(self.default_max_n)
    }

    /// Runs the suite; an error inside it is reported as a failed check.
    pub fn run(&self, opts: &VerifyOptions) -> SuiteReport {
        let bound = self.bound(opts);
        let checks = match (self.run)(bound, opts) {
            Ok(c) => c,
            Err(e) => vec![fail("suite aborted", e.to_string())],
        };
        SuiteReport { suite: self.name, bound, checks }
    }
}

static SUITES: &[Suite] = &[
    Suite { name: "k-polynomial", description: "K_2 closed form, the K_3 table, agreement of three constructions", default_max_n: 3, run: suite_kpoly },
    Suite { name: "degree", description: "transfer-matrix degree against brute-force enumeration", default_max_n: 6, run: suite_degree },
    Suite { name: "square", description: "f(A_λ) against ε_λ(q_3) and its symmetric-function image", default_max_n: 3, run: suite_square },
    Suite { name: "feqkappa", description: "f(1_n) = V_n κ_n", default_max_n: 4, run: suite_feqkappa },
    Suite { name: "frec", description: "recurrence for f(1_n)", default_max_n: 4, run: suite_frec },
    Suite { name: "yang-baxter", description: "Yang-Baxter equation and unitarity of Ř in H_3", default_max_n: 3, run: suite_yang_baxter },
    Suite { name: "closed-forms", description: "closed forms for f(A_n), f(A_1*…*A_1), F_w0 and ε specializations", default_max_n: 4, run: suite_closed_forms },
    Suite { name: "wheel", description: "wheel conditions and degree bounds for partition functions", default_max_n: 4, run: suite_wheel },
    Suite { name: "wronski", description: "Wronski relations and the three characterizations of κ_n", default_max_n: 4, run: suite_wronski },
    Suite { name: "multidegree", description: "two multidegree formulas, GRR limit, homogeneity", default_max_n: 4, run: suite_multidegree },
    Suite { name: "symmetry", description: "S_3 symmetry of κ_n and the symmetries of K_n", default_max_n: 4, run: suite_symmetry },
    Suite { name: "exchange", description: "exchange recursion against the transfer sweep", default_max_n: 3, run: suite_exchange },
];

pub fn suites() -> &'static [Suite] {
    SUITES
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn pass(name: impl Into<String>) -> CheckOutcome {
    CheckOutcome { name: name.into(), passed: true, detail: String::new() }
}

fn fail(name: impl Into<String>, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome { name: name.into(), passed: false, detail: detail.into() }
}

fn check(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> CheckOutcome {
    if ok {
        pass(name)
    } else {
        fail(name, detail())
    }
}

fn truncated(p: &LaurentPoly, keep: usize) -> String {
    if p.len() <= keep {
        return p.to_string();
    }
    let head = LaurentPoly::from_terms(p.terms()[..keep].iter().cloned());
    format!("{head} + … ({} more terms)", p.len() - keep)
}

/// Equality of two polynomials; on mismatch the detail shows `got - want`.
fn poly_check(name: impl Into<String>, got: &LaurentPoly, want: &LaurentPoly) -> CheckOutcome {
    check(name, got == want, || {
        let d = got - want;
        format!("got - want has {} terms: {}", d.len(), truncated(&d, 6))
    })
}

fn x(i: usize) -> Var {
    Var::x(i)
}

fn xratio(a: usize, b: usize) -> Monomial {
    Monomial::from_pairs(&[(x(a), 1), (x(b), -1)])
}

fn suite_kpoly(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    if bound >= 2 {
        out.push(poly_check("K_2 closed form", &commscheme::kpoly(2)?.poly, &LaurentPoly::parse(K2)?));
    }
    if bound >= 3 {
        let k3 = commscheme::kpoly(3)?;
        let got: Vec<(i32, i32, Rational)> = commscheme::x1_table(&k3)?;
        let want: Vec<(i32, i32, Rational)> =
            K3_X1_TABLE.iter().map(|&(i, j, c)| (i, j, Rational::from_integer(c.into()))).collect();
        out.push(check("K_3 at x = 1 against the coefficient table", got == want, || {
            let extra: Vec<_> = got.iter().filter(|e| !want.contains(e)).collect();
            let missing: Vec<_> = want.iter().filter(|e| !got.contains(e)).collect();
            format!("unexpected {extra:?}\nmissing {missing:?}")
        }));
    }
    for n in 1..=bound.min(3) {
        let a = commscheme::kpoly(n)?;
        out.push(poly_check(format!("K_{n}: recurrence = f(1_n) route"), &a.poly, &commscheme::kpoly_from_f(n)?.poly));
        out.push(poly_check(format!("K_{n}: recurrence = lattice route"), &a.poly, &commscheme::kpoly_lattice(n)?.poly));
    }
    Ok(out)
}

fn suite_degree(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 1..=bound.min(6) {
        let dp = commscheme::degree(n)?;
        let brute = lattice::degree_brute(n);
        out.push(check(format!("degree({n}): sweep = enumeration"), dp == brute, || format!("{dp} vs {brute}")));
    }
    for n in 1..=bound.min(4) {
        let dp = Rational::from_integer(commscheme::degree(n)?.into());
        let from_d = commscheme::degree_from_mdeg(&commscheme::mdeg(n, MdegMethod::Lattice)?)?;
        out.push(check(format!("degree({n}) = D_{n}(1, 1, 0)"), dp == from_d, || format!("{dp} vs {from_d}")));
    }
    if bound >= 12 {
        let d = commscheme::degree(12)?;
        let want: BigUint = DEGREE_12.parse().expect("literal");
        out.push(check("degree(12)", d == want, || format!("{d} vs {want}")));
    }
    Ok(out)
}

fn suite_square(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 1..=bound {
        let lambdas = Partition::all(n);
        let cs = lambdas.iter().map(hecke::antisymmetrizer_product).collect::<Result<Vec<_>>>()?;
        let fs = lattice::partition_fn_f_many(&cs)?;
        for ((l, c), f) in lambdas.iter().zip(&cs).zip(fs) {
            let cal = ShuffleA::new(n, f)?.to_cal();
            let eps = shuffle::epsilon(l, 3)?;
            out.push(poly_check(format!("convert f(A_{l}) = ε_{l}(q_3)"), cal.num(), eps.num()));
            let ups = shuffle::upsilon(&cal)?;
            let want = hecke::frobenius_phi(c)?.apply(&Plethysm::third())?;
            out.push(check(format!("Υ' of f(A_{l}) = σ_(q^-1) σ_t^-1 Φ(A_{l})"), ups == want, || {
                format!("got {ups}\nwant {want}")
            }));
        }
    }
    Ok(out)
}

fn suite_feqkappa(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 1..=bound {
        let f = lattice::partition_fn_f(&CenterElement::one(n))?;
        let k = shuffle::kappa(n)?;
        out.push(poly_check(format!("f(1_{n}) = V_{n} κ_{n}"), &f, k.to_a().poly()));
    }
    Ok(out)
}

/// `Δ · RHS` of the recurrence, with `Δ = ∏_{a<b} (x_a - x_b)`, divided back by `Δ`.
pub fn frec_rhs(n: usize, f_prev: &LaurentPoly) -> Result<LaurentPoly> {
    let q = Monomial::var(Var::Q);
    let t = Monomial::var(Var::T);
    let mut acc = LaurentPoly::zero();
    for i in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&j| j != i).collect();
        let pairs: Vec<(Var, Var)> = others.iter().enumerate().map(|(a, &j)| (x(a + 1), x(j))).collect();
        let mut shift = Monomial::pow_of(x(i), 2 * n as i32 - 1);
        for &j in &others {
            shift = shift.mul(&Monomial::pow_of(x(j), -1));
        }
        let mut term = f_prev.rename(&pairs).mul_mono(&shift);
        for &j in &others {
            let r = xratio(j, i);
            term = &term * &LaurentPoly::one_minus(r.mul(&q.inv()));
            term = &term * &LaurentPoly::one_minus(r.mul(&q).mul(&t.inv()));
            term = &term * &LaurentPoly::one_minus(r.mul(&t));
        }
        for a in 0..others.len() {
            for b in a + 1..others.len() {
                term = &term * &(&LaurentPoly::var(x(others[a])) - &LaurentPoly::var(x(others[b])));
            }
        }
        // (-1)^{n-1} from the denominators, (-1)^{i-1} from reordering Δ
        if (n + i) % 2 == 1 {
            acc -= &term;
        } else {
            acc += &term;
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            acc = acc.div_exact(&(&LaurentPoly::var(x(a)) - &LaurentPoly::var(x(b))))?;
        }
    }
    Ok(acc)
}

fn e1(n: usize) -> LaurentPoly {
    LaurentPoly::sum((1..=n).map(|i| LaurentPoly::var(x(i))))
}

fn suite_frec(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let mut prev = LaurentPoly::one();
    for n in 1..=bound {
        let f = lattice::partition_fn_f(&CenterElement::one(n))?;
        let rhs = frec_rhs(n, &prev)?;
        match rhs.div_exact(&e1(n)) {
            Ok(quot) => out.push(poly_check(format!("n = {n}: RHS / e_1 = f(1_{n})"), &quot, &f)),
            Err(Error::NonExactDivision) => out.push(fail(format!("n = {n}: RHS divisible by e_1"), "remainder is nonzero")),
            Err(e) => return Err(e),
        }
        prev = f;
    }
    Ok(out)
}

fn suite_yang_baxter(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let u = LaurentPoly::var(Var::U);
    let v = LaurentPoly::var(Var::V);
    let uv = &u * &v;
    let uinv = LaurentPoly::var_pow(Var::U, -1);
    let t = Monomial::var(Var::T);
    for n in 3..=bound.max(3) {
        for i in 1..n - 1 {
            let r = |k: usize, z: &LaurentPoly| hecke::r_matrix(k, z, n);
            let lhs = r(i, &u)?.mul(&r(i + 1, &uv)?)?.mul(&r(i, &v)?)?;
            let rhs = r(i + 1, &v)?.mul(&r(i, &uv)?)?.mul(&r(i + 1, &u)?)?;
            out.push(hecke_check(format!("H_{n}: Yang-Baxter at i = {i}"), &lhs, &rhs));
        }
        for i in 1..n {
            let lhs = hecke::r_matrix(i, &uinv, n)?.mul(&hecke::r_matrix(i, &u, n)?)?;
            let c = &LaurentPoly::one_minus(t.mul(&Monomial::var(Var::U)))
                * &LaurentPoly::one_minus(t.mul(&Monomial::pow_of(Var::U, -1)));
            out.push(hecke_check(format!("H_{n}: unitarity at i = {i}"), &lhs, &HeckeElement::one(n).scale(&c)));
        }
    }
    Ok(out)
}

fn hecke_check(name: String, a: &HeckeElement, b: &HeckeElement) -> CheckOutcome {
    check(name, a == b, || match a.sub(b) {
        Ok(d) => format!("difference: {d}"),
        Err(e) => e.to_string(),
    })
}

/// `t^{-n(n-1)/2} ∏_{i≠j} (1 - t x_i/x_j)`.
pub fn f_antisymmetrizer_closed(n: usize) -> LaurentPoly {
    let t = Monomial::var(Var::T);
    let mut p = LaurentPoly::mono(Monomial::pow_of(Var::T, -((n * n.saturating_sub(1) / 2) as i32)));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                p = &p * &LaurentPoly::one_minus(t.mul(&xratio(i, j)));
            }
        }
    }
    p
}

/// `[n]_{t^{-1}}! ∏_{i<j} (1 - q^{-1} t^{j-i})(q - t^{i-j+1})`.
pub fn spec_a1_closed(n: usize) -> LaurentPoly {
    let q = LaurentPoly::var(Var::Q);
    let mut p = qfactorial(n, &Monomial::pow_of(Var::T, -1));
    for i in 1..=n as i32 {
        for j in i + 1..=n as i32 {
            p = &p * &LaurentPoly::one_minus(Monomial::from_pairs(&[(Var::Q, -1), (Var::T, j - i)]));
            p = &p * &(&q - &LaurentPoly::var_pow(Var::T, i - j + 1));
        }
    }
    p
}

/// `∏_{i<j} (q t^i - t^j)(t^{i+1} - q t^j)(t^i - t^{j+1}) / (q t (t^i - t^j)^3)`.
pub fn eps_b0_closed(n: usize) -> Result<Fraction> {
    let q = LaurentPoly::var(Var::Q);
    let tp = |e: usize| LaurentPoly::var_pow(Var::T, e as i32);
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            num = &num * &(&(&q * &tp(i)) - &tp(j));
            num = &num * &(&tp(i + 1) - &(&q * &tp(j)));
            num = &num * &(&tp(i) - &tp(j + 1));
            den = &den * &(&(&q * &tp(1)) * &(&tp(i) - &tp(j)).pow(3));
        }
    }
    Fraction::new(num, den)
}

fn geometric_t(n: usize) -> Vec<(Var, Value)> {
    (1..=n).map(|i| (x(i), Value::mono(Monomial::pow_of(Var::T, i as i32 - 1)))).collect()
}

fn suite_closed_forms(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 1..=bound {
        let f = lattice::partition_fn_f(&hecke::antisymmetrizer(n))?;
        out.push(poly_check(format!("f(A_{n}) factorizes"), &f, &f_antisymmetrizer_closed(n)));
    }
    let small = bound.min(3);
    for n in 1..=small {
        let c = center_shuffle_all(&vec![CenterElement::one(1); n])?;
        let f = lattice::partition_fn_f(&c)?.substitute(&geometric_t(n))?;
        out.push(poly_check(format!("f(A_1^{{*{n}}}) at (1, t, …, t^{})", n - 1), &f, &spec_a1_closed(n)));
    }
    for n in 1..=small {
        let all = lattice::partition_fn_all(n, WeightScheme::WtGeneral)?;
        let got = all.get(&Perm::longest(n)).cloned().unwrap_or_else(LaurentPoly::zero);
        out.push(poly_check(format!("F_w0 closed form, n = {n}"), &got, &lattice::f_longest(n)));
    }
    for n in 1..=small {
        for l in Partition::all(n) {
            let s = shuffle::specialize_geometric(&shuffle::epsilon(&l, 3)?, 3)?;
            if l.parts().iter().all(|&p| p == 1) {
                let want = eps_b0_closed(n)?;
                out.push(check(format!("ε_{l}(x, tx, …)"), s == want, || format!("got {s}\nwant {want}")));
            } else {
                out.push(check(format!("ε_{l}(x, tx, …) = 0"), s.is_zero(), || format!("got {s}")));
            }
        }
    }
    Ok(out)
}

fn suite_wheel(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 1..=bound {
        let mut named: Vec<(String, CenterElement)> = vec![(format!("1_{n}"), CenterElement::one(n))];
        for l in Partition::all(n) {
            named.push((format!("A_{l}"), hecke::antisymmetrizer_product(&l)?));
        }
        named.push((format!("S_{n}"), complete_symmetrizer(n)));
        let cs: Vec<CenterElement> = named.iter().map(|(_, c)| c.clone()).collect();
        let fs = lattice::partition_fn_f_many(&cs)?;
        for ((name, _), f) in named.iter().zip(fs) {
            let a = ShuffleA::new(n, f)?;
            out.push(check(format!("f({name}): wheel"), a.wheel_check() && shuffle::wheel_check(&a.to_cal()), || {
                "does not vanish on a wheel".into()
            }));
            out.push(check(format!("f({name}): degree bounds"), a.satisfies_degbounds(), || {
                "a monomial violates the bounds".into()
            }));
        }
    }
    Ok(out)
}

fn vanishes(name: String, e: &ShuffleExpr, pts: &[Vec<Rational>]) -> Result<CheckOutcome> {
    for (k, p) in pts.iter().enumerate() {
        let v = e.eval_at(p)?;
        if !v.is_zero() {
            return Ok(fail(name, format!("nonzero at point {k}: {}", truncated(&v, 6))));
        }
    }
    Ok(pass(name))
}

fn suite_wronski(bound: usize, opts: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let mut kappas = vec![ShuffleExpr::Leaf(ShuffleCal::one())];
    for n in 1..=bound {
        let pts = shuffle::random_points(n, Partition::all(n).len() + 1, opts.seed ^ n as u64);
        for k in 1..=3 {
            for l in 1..=3 {
                if k != l {
                    out.push(vanishes(format!("n = {n}: Wronski (k, l) = ({k}, {l})"), &shuffle::wronski_expr(n, k, l), &pts)?);
                }
            }
        }
        let kn = shuffle::kappa(n)?;
        let prev = kappas[n - 1].clone();
        kappas.push(ShuffleExpr::Leaf(kn.clone()));
        out.push(vanishes(format!("n = {n}: e_1 κ_n = κ_(n-1) * x"), &shuffle::kappa_x_expr(ShuffleExpr::Leaf(kn.clone()), prev), &pts)?);
        for k in 1..=3 {
            out.push(vanishes(format!("n = {n}: κ_n from ε_j(q_{k})"), &shuffle::wronski_lem_expr(&kappas, k), &pts)?);
        }
        let ups = shuffle::upsilon(&kn)?;
        let want = elementary(n).apply(&Plethysm::Sigma(Monomial::var(Var::Q)))?;
        out.push(check(format!("n = {n}: Υ'(κ_n) = σ_q(e_n)"), ups == want, || format!("got {ups}\nwant {want}")));
    }
    Ok(out)
}

fn homogeneous(p: &LaurentPoly, d: i32) -> bool {
    p.terms().iter().all(|(m, _)| m.degree() == d)
}

fn suite_multidegree(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 1..=bound {
        let lat = commscheme::mdeg(n, MdegMethod::Lattice)?;
        let d = (n * (n - 1)) as i32;
        out.push(check(format!("D_{n} homogeneous of degree {d}"), homogeneous(&lat.poly, d), || {
            "mixed degrees".into()
        }));
        if n <= 4 {
            let sym = commscheme::mdeg(n, MdegMethod::Symmetrize)?;
            out.push(poly_check(format!("D_{n}: lattice = symmetrization"), &lat.poly, &sym.poly));
        }
        if n <= 3 {
            let k: KPolynomial = commscheme::kpoly(n)?;
            let g = commscheme::grr_limit(&k)?;
            out.push(poly_check(format!("grr(K_{n}) = D_{n}"), &g.poly, &lat.poly));
        }
    }
    Ok(out)
}

fn suite_symmetry(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 1..=bound {
        let k = shuffle::kappa(n)?;
        let bad: Vec<String> = Perm::all(3)
            .into_iter()
            .filter_map(|s| match shuffle::permute_parameters(k.num(), &s) {
                Ok(p) if &p == k.num() => None,
                _ => Some(s.to_string()),
            })
            .collect();
        out.push(check(format!("κ_{n} invariant under permuting q_1, q_2, q_3"), bad.is_empty(), || {
            format!("fails for {}", bad.join(", "))
        }));
    }
    for n in 1..=bound.min(3) {
        let rep = commscheme::symmetry_check(&commscheme::kpoly(n)?)?;
        out.push(check(format!("K_{n} symmetric in q1, q2"), rep.swap, String::new));
        out.push(check(format!("K_{n} inversion symmetry"), rep.inversion, String::new));
    }
    Ok(out)
}

fn suite_exchange(bound: usize, _: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for n in 1..=bound {
        let all = lattice::partition_fn_all(n, WeightScheme::WtGeneral)?;
        for route in [ExchangeRoute::X, ExchangeRoute::Y] {
            let ex = lattice::exchange_compute_f(n, route)?;
            let bad: Vec<String> = Perm::all(n)
                .into_iter()
                .filter(|v| ex.get(v) != all.get(v))
                .map(|v| v.to_string())
                .collect();
            out.push(check(format!("n = {n}: {route:?} route reproduces every F_v"), bad.is_empty(), || {
                format!("differs at {}", bad.join(", "))
            }));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<&str> = suites().iter().map(|s| s.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), suites().len());
        assert!(find_suite("yang-baxter").is_some());
        assert!(find_suite("nope").is_none());
    }

    #[test]
    fn small_bounds_pass() {
        let opts = VerifyOptions { max_n: Some(2), seed: 1 };
        for s in suites() {
            let r = s.run(&opts);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn diff_report_on_mismatch() {
        let c = poly_check("x", &LaurentPoly::one(), &LaurentPoly::zero());
        assert!(!c.passed);
        assert!(c.detail.contains("1 terms"));
    }
}
