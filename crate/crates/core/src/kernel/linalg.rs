//! Fraction-free linear algebra over Laurent polynomials.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::fraction::Fraction;
use super::poly::{LaurentPoly, Rational};
use super::var::Var;
use crate::error::{Error, Result};

/// The positive rational `c` making every coefficient of `c · row` an integer with content 1.
fn integral_scale(row: &[LaurentPoly]) -> Rational {
    let mut den = num_bigint::BigInt::one();
    let mut num = num_bigint::BigInt::zero();
    for p in row {
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
    }
    if num.is_zero() {
        return Rational::one();
    }
    Rational::new(den, num)
}

/// Determinant by Bareiss elimination; every division is exact.
pub fn determinant(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut prev = LaurentPoly::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(LaurentPoly::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Rational Gaussian elimination on a numeric matrix; returns pivot rows in order.
fn numeric_pivot_rows(rows: &[Vec<Rational>]) -> Vec<usize> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        if chosen.len() == width {
            break;
        }
        let mut r = row.clone();
        for (piv, b) in &basis {
            if r[*piv].is_zero() {
                continue;
            }
            let f = &r[*piv] / &b[*piv];
            for (x, y) in r.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
        if let Some(piv) = r.iter().position(|x| !x.is_zero()) {
            basis.push((piv, r));
            chosen.push(idx);
        }
    }
    chosen
}

/// Indices of the first rows (in order) that are linearly independent and span the row space.
///
/// Rows found independent after substituting fixed primes for every variable are
/// independent over the function field; only when that test loses rank is the
/// symbolic elimination run.
pub fn independent_rows(rows: &[Vec<LaurentPoly>]) -> Vec<usize> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut vars: Vec<Var> = rows.iter().flatten().flat_map(|p| p.vars()).collect();
    vars.sort();
    vars.dedup();
    const PRIMES: [i64; 12] = [101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157];
    if vars.len() <= PRIMES.len() {
        let assign: Vec<(Var, Rational)> =
            vars.iter().zip(PRIMES).map(|(v, p)| (*v, Rational::from_integer(p.into()))).collect();
        let numeric: Option<Vec<Vec<Rational>>> =
            rows.iter().map(|r| r.iter().map(|p| p.eval(&assign).ok()).collect()).collect();
        if let Some(numeric) = numeric {
            let chosen = numeric_pivot_rows(&numeric);
            if chosen.len() == width.min(rows.len()) {
                return chosen;
            }
        }
    }
    symbolic_independent_rows(rows)
}

fn symbolic_independent_rows(rows: &[Vec<LaurentPoly>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<LaurentPoly>)> = Vec::new();
    let mut chosen = Vec::new();
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    for (idx, row) in rows.iter().enumerate() {
        if chosen.len() == width {
            break;
        }
        let mut r = row.clone();
        for (piv, b) in &basis {
            if r[*piv].is_zero() {
                continue;
            }
            let f = r[*piv].clone();
            let p = b[*piv].clone();
            r = r.iter().zip(b.iter()).map(|(x, y)| &(x * &p) - &(y * &f)).collect();
        }
        if let Some(piv) = r.iter().position(|x| !x.is_zero()) {
            basis.push((piv, r));
            chosen.push(idx);
        }
    }
    chosen
}

/// Solve `a x = b` exactly. `a` may have more rows than columns; the system
/// must have full column rank and be consistent.
pub fn solve(a: &[Vec<LaurentPoly>], b: &[LaurentPoly]) -> Result<Vec<Fraction>> {
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    if cols == 0 {
        return Ok(Vec::new());
    }
    let rows = independent_rows(a);
    if rows.len() < cols {
        return Err(Error::SingularSystem);
    }
    // Row scaling leaves every Cramer ratio unchanged and keeps coefficients small.
    let mut sq: Vec<Vec<LaurentPoly>> = Vec::with_capacity(cols);
    let mut rhs: Vec<LaurentPoly> = Vec::with_capacity(cols);
    for &i in &rows {
        let mut full = a[i].clone();
        full.push(b[i].clone());
        let c = integral_scale(&full);
        rhs.push(full.pop().expect("nonempty").scale(&c));
        sq.push(full.iter().map(|p| p.scale(&c)).collect());
    }
    let det = determinant(&sq)?;
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let mut x = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut mj = sq.clone();
        for (r, v) in rhs.iter().enumerate() {
            mj[r][j] = v.clone();
        }
        x.push(Fraction::new(determinant(&mj)?, det.clone())?);
    }
    for (i, row) in a.iter().enumerate() {
        let lhs = Fraction::sum(row.iter().zip(x.iter()).map(|(c, v)| v.mul_poly(c)));
        if lhs != Fraction::from_poly(b[i].clone()) {
            return Err(Error::VerificationFailure(format!("row {i} inconsistent")));
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::var::Var;

    #[test]
    fn small_system() {
        let t = LaurentPoly::var(Var::T);
        let one = LaurentPoly::one();
        let a = vec![
            vec![one.clone(), t.clone()],
            vec![t.clone(), one.clone()],
            vec![&one + &t, &one + &t],
        ];
        let b = vec![one.clone(), LaurentPoly::zero(), one.clone()];
        let x = solve(&a, &b).unwrap();
        let d = &one - &t.pow(2);
        assert_eq!(x[0], Fraction::new(one.clone(), d.clone()).unwrap());
        assert_eq!(x[1], Fraction::new(-t.clone(), d).unwrap());
    }

    #[test]
    fn determinant_3x3() {
        let m: Vec<Vec<LaurentPoly>> = [[2, 0, 1], [1, 3, 2], [1, 1, 1]]
            .iter()
            .map(|r| r.iter().map(|&v| LaurentPoly::from_int(v)).collect())
            .collect();
        assert_eq!(determinant(&m).unwrap(), LaurentPoly::from_int(0));
        let m2: Vec<Vec<LaurentPoly>> = [[0, 1], [1, 0]]
            .iter()
            .map(|r| r.iter().map(|&v| LaurentPoly::from_int(v)).collect())
            .collect();
        assert_eq!(determinant(&m2).unwrap(), LaurentPoly::from_int(-1));
    }
}
