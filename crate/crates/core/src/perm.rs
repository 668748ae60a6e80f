//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of {1..n} in one-line notation: `w[i-1] = w(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn new(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::MalformedPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    pub fn longest(n: usize) -> Self {
        Perm((1..=n as u8).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// Canonical reduced word `[i1, …, ik]` with `w = s_{i1} ⋯ s_{ik}`,
    /// built by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.descents().first() {
            w = w.mul_simple_right(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Perm(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    /// `s_i ∘ w`: swaps the values i and i+1.
    pub fn mul_simple_left(&self, i: usize) -> Perm {
        Perm(
            self.0
                .iter()
                .map(|&v| {
                    if v as usize == i {
                        (i + 1) as u8
                    } else if v as usize == i + 1 {
                        i as u8
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// `w ∘ s_i`: swaps the positions i and i+1.
    pub fn mul_simple_right(&self, i: usize) -> Perm {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Perm(w)
    }

    /// Whether `s_i w` is longer than `w`.
    pub fn left_ascent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] < inv.0[i]
    }

    /// Whether `w s_i` is longer than `w`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// `u ⊕ v` acting on the first `|u|` and last `|v|` letters.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let k = self.n() as u8;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&v| v + k)).collect())
    }

    /// Extend to {1..n} by fixing the extra letters.
    pub fn embed(&self, n: usize) -> Perm {
        self.direct_sum(&Perm::identity(n - self.n()))
    }

    /// All permutations of {1..n} in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Minimal length representatives of `S_n / (S_{λ1} × ⋯ × S_{λm})`:
    /// permutations increasing on each block of positions.
    pub fn coset_reps(blocks: &[usize]) -> Result<Vec<Perm>> {
        if blocks.iter().any(|&b| b == 0) {
            return Err(Error::EmptyBlock);
        }
        let n: usize = blocks.iter().sum();
        let mut bounds = Vec::new();
        let mut start = 0;
        for &b in blocks {
            bounds.push((start, start + b));
            start += b;
        }
        Ok(Perm::all(n)
            .into_iter()
            .filter(|w| bounds.iter().all(|&(s, e)| w.0[s..e].windows(2).all(|p| p[0] < p[1])))
            .collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedPermutation(s.to_string());
        let vals: Vec<u8> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Perm::new(vals)
    }
}
