//! Coloured lattice paths on the n×n grid.
//!
//! Edge labels are `0` for an empty edge and `1..=n` for paths. Path `i`
//! enters row `i` (rows counted from the top) on the left and leaves through
//! the top edge of column `v⁻¹(i)`, so the top of column `j` carries `v(j)`.

mod enumerate;
mod exchange;
mod sweep;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{LaurentPoly, Monomial, Var};

pub use enumerate::{count_configs, degree_brute, enumerate_configs, for_each_config, PathConfig};
pub use exchange::{
    contract_formal_partition_function, exchange_compute_f, f_longest, formal_partition_function,
    ExchangeRoute,
};
pub use sweep::{
    degree_dp, degree_dp_with_budget, k_polynomial_lattice, mdeg_lattice, partition_fn_all,
    partition_fn_f, partition_fn_f_many, partition_fn_single, DEFAULT_STATE_BUDGET,
};

/// Empty edge label.
pub const EMPTY: u8 = 0;

/// Colour order with the empty label ranked above every path.
pub(crate) fn rank(label: u8) -> u16 {
    if label == EMPTY {
        u16::MAX
    } else {
        label as u16
    }
}

/// The labels around one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub left: u8,
    pub bottom: u8,
    pub right: u8,
    pub top: u8,
}

/// Weight classes of a vertex, refined by whether one or two paths are present.
///
/// `BendLower*`: the lower label turns from left to top.
/// `BendUpper*`: the greater label turns from left to top.
/// `CrossLower*`: the lower label runs horizontally through.
/// `CrossUpper*`: the greater label runs horizontally through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    BendLowerSingle,
    BendLowerPair,
    BendUpperSingle,
    BendUpperPair,
    CrossLowerPair,
    CrossLowerSingle,
    CrossUpperPair,
    CrossUpperSingle,
    Empty,
}

impl VertexClass {
    pub const ALL: [VertexClass; 9] = [
        VertexClass::BendLowerSingle,
        VertexClass::BendLowerPair,
        VertexClass::BendUpperSingle,
        VertexClass::BendUpperPair,
        VertexClass::CrossLowerPair,
        VertexClass::CrossLowerSingle,
        VertexClass::CrossUpperPair,
        VertexClass::CrossUpperSingle,
        VertexClass::Empty,
    ];

    pub fn code(self) -> &'static str {
        match self {
            VertexClass::BendLowerSingle => "1a",
            VertexClass::BendLowerPair => "1b",
            VertexClass::BendUpperSingle => "2a",
            VertexClass::BendUpperPair => "2b",
            VertexClass::CrossLowerPair => "3a",
            VertexClass::CrossLowerSingle => "3b",
            VertexClass::CrossUpperPair => "4a",
            VertexClass::CrossUpperSingle => "4b",
            VertexClass::Empty => "0",
        }
    }

    pub fn is_bend(self) -> bool {
        matches!(
            self,
            VertexClass::BendLowerSingle
                | VertexClass::BendLowerPair
                | VertexClass::BendUpperSingle
                | VertexClass::BendUpperPair
        )
    }
}

impl Vertex {
    pub fn new(left: u8, bottom: u8, right: u8, top: u8) -> Self {
        Vertex { left, bottom, right, top }
    }

    pub fn classify(&self) -> Result<VertexClass> {
        let Vertex { left: l, bottom: b, right: r, top: t } = *self;
        let bad = || Error::InadmissibleVertex([l, b, r, t]);
        if l == t && b == r {
            if l == b {
                return if l == EMPTY { Ok(VertexClass::Empty) } else { Err(bad()) };
            }
            let pair = l != EMPTY && b != EMPTY;
            return Ok(match (rank(l) < rank(b), pair) {
                (true, false) => VertexClass::BendLowerSingle,
                (true, true) => VertexClass::BendLowerPair,
                (false, false) => VertexClass::BendUpperSingle,
                (false, true) => VertexClass::BendUpperPair,
            });
        }
        if l == r && b == t && l != b {
            let pair = l != EMPTY && b != EMPTY;
            return Ok(match (rank(l) < rank(b), pair) {
                (true, true) => VertexClass::CrossLowerPair,
                (true, false) => VertexClass::CrossLowerSingle,
                (false, true) => VertexClass::CrossUpperPair,
                (false, false) => VertexClass::CrossUpperSingle,
            });
        }
        Err(bad())
    }

    /// Every admissible `(top, right)` continuation of a given `(left, bottom)`.
    pub fn continuations(left: u8, bottom: u8) -> impl Iterator<Item = (u8, u8, VertexClass)> {
        let mut out: [(u8, u8, Option<VertexClass>); 2] = [(0, 0, None), (0, 0, None)];
        let bend = Vertex::new(left, bottom, bottom, left).classify().ok();
        if left == bottom {
            out[0] = (EMPTY, EMPTY, bend);
        } else {
            out[0] = (left, bottom, bend);
            out[1] = (bottom, left, Vertex::new(left, bottom, left, bottom).classify().ok());
        }
        out.into_iter().filter_map(|(t, r, c)| c.map(|c| (t, r, c)))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {} {} {}]", self.left, self.bottom, self.right, self.top)
    }
}

/// Boltzmann weight tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightScheme {
    /// Variables `q, t, x`; the general scheme at `y_j = q x_j`.
    Wt,
    /// Variables `t, x, y` with spectral parameter `x_i / y_j`.
    WtGeneral,
    /// Variables `q1, q2, x`.
    WtK,
    /// Variables `q1, q2, x`, additive in `x`.
    WtH,
}

impl WeightScheme {
    /// Weight of a vertex of class `class` in row `i`, column `j`.
    pub fn weight(self, class: VertexClass, i: usize, j: usize) -> LaurentPoly {
        use VertexClass::*;
        let one = LaurentPoly::one();
        let xi = Var::x(i);
        match self {
            WeightScheme::Wt | WeightScheme::WtGeneral => {
                let u = match self {
                    WeightScheme::Wt => Monomial::from_pairs(&[(Var::Q, -1), (xi, 1), (Var::x(j), -1)]),
                    _ => Monomial::from_pairs(&[(xi, 1), (Var::y(j), -1)]),
                };
                let t = LaurentPoly::var(Var::T);
                let one_minus_t = &one - &t;
                match class {
                    BendLowerSingle | BendLowerPair => one_minus_t,
                    BendUpperSingle | BendUpperPair => one_minus_t.mul_mono(&u),
                    CrossLowerPair | CrossLowerSingle => &t * &LaurentPoly::one_minus(u),
                    CrossUpperPair | CrossUpperSingle => LaurentPoly::one_minus(u),
                    Empty => LaurentPoly::one_minus(u.mul(&Monomial::var(Var::T))),
                }
            }
            WeightScheme::WtK => {
                let q1q2 = Monomial::from_pairs(&[(Var::Q1, 1), (Var::Q2, 1)]);
                let r = Monomial::from_pairs(&[(Var::Q1, 1), (xi, 1), (Var::x(j), -1)]);
                let bend = LaurentPoly::one_minus(q1q2);
                let cross = LaurentPoly::one_minus(r);
                match class {
                    BendLowerSingle | BendLowerPair | BendUpperSingle => bend,
                    BendUpperPair => bend.mul_mono(&Monomial::var(Var::Q1)),
                    CrossLowerPair | CrossLowerSingle => cross,
                    CrossUpperPair => cross.mul_mono(&q1q2),
                    CrossUpperSingle => cross.mul_mono(&Monomial::var(Var::Q2)),
                    Empty => {
                        &LaurentPoly::mono(Monomial::from_pairs(&[(xi, 1), (Var::x(j), -1)]))
                            - &LaurentPoly::var(Var::Q2)
                    }
                }
            }
            WeightScheme::WtH => {
                let xi = LaurentPoly::var(xi);
                let xj = LaurentPoly::var(Var::x(j));
                let q1 = LaurentPoly::var(Var::Q1);
                let q2 = LaurentPoly::var(Var::Q2);
                if class.is_bend() {
                    &q1 + &q2
                } else if class == Empty {
                    &(&q2 - &xi) + &xj
                } else {
                    &(&q1 + &xi) - &xj
                }
            }
        }
    }
}

/// Entry of the `H_{2n}` representation matrix for `T_i`.
fn rep_entry(top: u8, left: u8, right: u8, bottom: u8) -> LaurentPoly {
    let (i, j, k, l) = (rank(top), rank(left), rank(right), rank(bottom));
    let t = LaurentPoly::var(Var::T);
    if i == j && k == l && i > k {
        &t - &LaurentPoly::one()
    } else if j == k && i == l && j > i {
        LaurentPoly::one()
    } else if j == k && i == l && j <= i {
        t
    } else {
        LaurentPoly::zero()
    }
}

/// Matrix entry of `Ř(u) = (1-t) + (1-u) T` between the given edge labels.
pub fn r_matrix_entry(v: &Vertex, u: &Monomial) -> LaurentPoly {
    let mut w = &LaurentPoly::one_minus(*u) * &rep_entry(v.top, v.left, v.right, v.bottom);
    if v.top == v.left && v.right == v.bottom {
        w += &(&LaurentPoly::one() - &LaurentPoly::var(Var::T));
    }
    w
}

/// Rebuilds the `Wt` or `WtGeneral` table from the R-matrix over every label
/// pattern with labels in `0..=3` and checks it against [`WeightScheme::weight`].
/// Patterns carrying one path twice never occur on the grid and are skipped.
pub fn weights_from_r(scheme: WeightScheme) -> Result<Vec<(Vertex, VertexClass, LaurentPoly)>> {
    let (i, j) = (1, 2);
    let u = match scheme {
        WeightScheme::Wt => Monomial::from_pairs(&[(Var::Q, -1), (Var::x(i), 1), (Var::x(j), -1)]),
        WeightScheme::WtGeneral => Monomial::from_pairs(&[(Var::x(i), 1), (Var::y(j), -1)]),
        _ => return Err(Error::TableMismatch(format!("{scheme:?} is not an R-matrix scheme"))),
    };
    let mut table = Vec::new();
    for l in 0..4u8 {
        for b in 0..4u8 {
            for r in 0..4u8 {
                for t in 0..4u8 {
                    if (l == b && l != EMPTY) || (r == t && r != EMPTY) {
                        continue;
                    }
                    let v = Vertex::new(l, b, r, t);
                    let w = r_matrix_entry(&v, &u);
                    match v.classify() {
                        Ok(class) => {
                            let expect = scheme.weight(class, i, j);
                            if w != expect {
                                return Err(Error::TableMismatch(format!("{v}: {w} vs {expect}")));
                            }
                            table.push((v, class, w));
                        }
                        Err(_) if w.is_zero() => {}
                        Err(_) => return Err(Error::TableMismatch(format!("{v} should vanish, got {w}"))),
                    }
                }
            }
        }
    }
    Ok(table)
}
