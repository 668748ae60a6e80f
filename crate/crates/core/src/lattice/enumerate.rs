use num_bigint::BigUint;
use serde_json::json;

use super::{Vertex, VertexClass, WeightScheme, EMPTY};
use crate::error::Result;
use crate::kernel::LaurentPoly;
use crate::perm::Perm;

/// A full assignment of edge labels on the n×n grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathConfig {
    n: usize,
    grid: Vec<Vec<Vertex>>,
}

impl PathConfig {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `grid[i-1][j-1]` is the vertex in row `i`, column `j`.
    pub fn grid(&self) -> &[Vec<Vertex>] {
        &self.grid
    }

    pub fn vertex(&self, i: usize, j: usize) -> &Vertex {
        &self.grid[i - 1][j - 1]
    }

    /// Checks adjacency, boundary labels and vertex admissibility.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 1..=n {
            for j in 1..=n {
                let v = self.vertex(i, j);
                v.classify()?;
                let left = if j == 1 { i as u8 } else { self.vertex(i, j - 1).right };
                let below = if i == n { EMPTY } else { self.vertex(i + 1, j).top };
                if v.left != left || v.bottom != below || (j == n && v.right != EMPTY) {
                    return Err(crate::Error::InadmissibleVertex([v.left, v.bottom, v.right, v.top]));
                }
            }
        }
        self.connectivity()?;
        Ok(())
    }

    pub fn connectivity(&self) -> Result<Perm> {
        Perm::new(self.grid[0].iter().map(|v| v.top).collect())
    }

    pub fn classes(&self) -> impl Iterator<Item = (usize, usize, VertexClass)> + '_ {
        self.grid.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().map(move |(j, v)| (i + 1, j + 1, v.classify().expect("validated")))
        })
    }

    pub fn bends(&self) -> usize {
        self.classes().filter(|(_, _, c)| c.is_bend()).count()
    }

    pub fn weight(&self, scheme: WeightScheme) -> LaurentPoly {
        let mut w = LaurentPoly::one();
        for (i, j, c) in self.classes() {
            w = &w * &scheme.weight(c, i, j);
        }
        w
    }

    pub fn to_json(&self) -> serde_json::Value {
        let grid: Vec<Vec<serde_json::Value>> = self
            .grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        json!({
                            "code": v.classify().map(|c| c.code()).unwrap_or("?"),
                            "labels": [v.left, v.bottom, v.right, v.top],
                        })
                    })
                    .collect()
            })
            .collect();
        json!({
            "n": self.n,
            "connectivity": self.connectivity().map(|p| p.to_string()).unwrap_or_default(),
            "grid": grid,
        })
    }
}

struct Dfs<'a, F: FnMut(&PathConfig)> {
    n: usize,
    v: &'a Perm,
    col_of: Vec<usize>,
    cfg: PathConfig,
    visit: F,
}

impl<F: FnMut(&PathConfig)> Dfs<'_, F> {
    fn go(&mut self, i: usize, j: usize) {
        let n = self.n;
        if i > n {
            (self.visit)(&self.cfg);
            return;
        }
        let (ni, nj) = if j == n { (i + 1, 1) } else { (i, j + 1) };
        let left = if j == 1 { i as u8 } else { self.cfg.grid[i - 1][j - 2].right };
        let top = if i == 1 { self.v.at(j) as u8 } else { self.cfg.grid[i - 2][j - 1].bottom };
        let mut options: Vec<(u8, u8)> = Vec::new();
        if left == top {
            options.push((EMPTY, EMPTY));
            for p in (i + 1)..=n {
                if p as u8 != left {
                    options.push((p as u8, p as u8));
                }
            }
        } else {
            options.push((top, left));
        }
        for (bottom, right) in options {
            if bottom != EMPTY && ((bottom as usize) <= i || j > self.col_of[bottom as usize]) {
                continue;
            }
            if right != EMPTY && (j == n || j + 1 > self.col_of[right as usize] || (right as usize) < i) {
                continue;
            }
            let vx = Vertex::new(left, bottom, right, top);
            if vx.classify().is_err() {
                continue;
            }
            self.cfg.grid[i - 1][j - 1] = vx;
            self.go(ni, nj);
        }
    }
}

/// Visits every configuration with connectivity `v`, in a fixed depth-first order.
pub fn for_each_config(v: &Perm, visit: impl FnMut(&PathConfig)) {
    let n = v.n();
    if n == 0 {
        return;
    }
    let inv = v.inverse();
    let mut col_of = vec![0; n + 1];
    for (p, c) in col_of.iter_mut().enumerate().skip(1) {
        *c = inv.at(p);
    }
    let blank = Vertex::new(0, 0, 0, 0);
    let mut dfs = Dfs {
        n,
        v,
        col_of,
        cfg: PathConfig { n, grid: vec![vec![blank; n]; n] },
        visit,
    };
    dfs.go(1, 1);
}

pub fn enumerate_configs(v: &Perm) -> Vec<PathConfig> {
    let mut out = Vec::new();
    for_each_config(v, |c| out.push(c.clone()));
    out
}

pub fn count_configs(v: &Perm) -> usize {
    let mut k = 0;
    for_each_config(v, |_| k += 1);
    k
}

/// `Σ_P 2^{#bends - n}` over identity configurations, by enumeration.
pub fn degree_brute(n: usize) -> BigUint {
    let mut hist = vec![0u64; 2 * n * n + 1];
    for_each_config(&Perm::identity(n), |c| hist[c.bends()] += 1);
    hist.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(b, &k)| BigUint::from(k) << (b - n))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        assert_eq!(count_configs(&"2431".parse().unwrap()), 5);
        assert_eq!(count_configs(&Perm::identity(3)), 8);
        assert_eq!(count_configs(&Perm::identity(1)), 1);
        assert_eq!(count_configs(&Perm::longest(4)), 1);
        for c in enumerate_configs(&"2431".parse().unwrap()) {
            c.validate().unwrap();
        }
    }

    #[test]
    fn small_degrees() {
        assert_eq!(degree_brute(1), BigUint::from(1u32));
        assert_eq!(degree_brute(2), BigUint::from(3u32));
    }
}
