use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::poly::{LaurentPoly, Rational};
use super::var::Var;
use crate::error::{Error, Result};

/// One term of the JSON polynomial format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: BTreeMap<String, i32>,
}

pub fn rational_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad coefficient `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl LaurentPoly {
    /// Terms leading-first, as used by both serializations.
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm {
                coeff: rational_string(c),
                exps: m.pairs().map(|(v, e)| (v.to_string(), e)).collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let mut m = Monomial::one();
            for (name, e) in &t.exps {
                let v: Var = name.parse()?;
                m = m.mul(&Monomial::pow_of(v, *e));
            }
            out.push((m, parse_rational(&t.coeff)?));
        }
        Ok(LaurentPoly::from_terms(out))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms()).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_terms(&terms)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !matches!(prev, Some('^') | Some('/') | Some('*')) {
                if !cur.trim().is_empty() {
                    pieces.push((negative, std::mem::take(&mut cur)));
                    negative = ch == '-';
                } else {
                    negative ^= ch == '-';
                    cur.clear();
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        if !cur.trim().is_empty() {
            pieces.push((negative, cur));
        } else if !pieces.is_empty() || negative {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        let mut terms = Vec::new();
        for (neg, body) in pieces {
            let mut c = Rational::one();
            let mut m = Monomial::one();
            for tok in body.split(|ch: char| ch == '*' || ch.is_whitespace()).filter(|t| !t.is_empty()) {
                if tok.chars().next().map(|ch| ch.is_ascii_digit()).unwrap_or(false) {
                    c *= parse_rational(tok)?;
                } else {
                    let (name, e) = match tok.split_once('^') {
                        Some((n, e)) => {
                            (n, e.parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent `{tok}`")))?)
                        }
                        None => (tok, 1),
                    };
                    let v: Var = name.parse()?;
                    m = m.mul(&Monomial::pow_of(v, e));
                }
            }
            terms.push((m, if neg { -c } else { c }));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} * {m}")?;
            }
        }
        Ok(())
    }
}
