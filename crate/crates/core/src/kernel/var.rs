use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Largest index supported for the `x` and `y` families.
pub const MAX_INDEX: usize = 8;

/// Number of slots in a dense exponent vector.
pub const NVARS: usize = 6 + 2 * MAX_INDEX;

/// A formal variable. The derived order is the registry order
/// q, t, q1, q2, u, v, x1..x8, y1..y8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T,
    Q1,
    Q2,
    U,
    V,
    X(u8),
    Y(u8),
}

impl Var {
    pub fn slot(self) -> usize {
        match self {
            Var::Q => 0,
            Var::T => 1,
            Var::Q1 => 2,
            Var::Q2 => 3,
            Var::U => 4,
            Var::V => 5,
            Var::X(i) => {
                assert!((1..=MAX_INDEX as u8).contains(&i), "x index {i} out of range");
                5 + i as usize
            }
            Var::Y(i) => {
                assert!((1..=MAX_INDEX as u8).contains(&i), "y index {i} out of range");
                5 + MAX_INDEX + i as usize
            }
        }
    }

    pub fn from_slot(s: usize) -> Var {
        match s {
            0 => Var::Q,
            1 => Var::T,
            2 => Var::Q1,
            3 => Var::Q2,
            4 => Var::U,
            5 => Var::V,
            s if s <= 5 + MAX_INDEX => Var::X((s - 5) as u8),
            s => Var::Y((s - 5 - MAX_INDEX) as u8),
        }
    }

    pub fn x(i: usize) -> Var {
        Var::X(i as u8)
    }

    pub fn y(i: usize) -> Var {
        Var::Y(i as u8)
    }

    pub fn is_x(self) -> bool {
        matches!(self, Var::X(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q => write!(f, "q"),
            Var::T => write!(f, "t"),
            Var::Q1 => write!(f, "q1"),
            Var::Q2 => write!(f, "q2"),
            Var::U => write!(f, "u"),
            Var::V => write!(f, "v"),
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("unknown variable `{s}`"));
        let indexed = |rest: &str| -> Result<u8, Error> {
            let i: u8 = rest.parse().map_err(|_| bad())?;
            if i == 0 || i as usize > MAX_INDEX {
                return Err(bad());
            }
            Ok(i)
        };
        match s {
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            "q1" => Ok(Var::Q1),
            "q2" => Ok(Var::Q2),
            "u" => Ok(Var::U),
            "v" => Ok(Var::V),
            _ if s.starts_with('x') => Ok(Var::X(indexed(&s[1..])?)),
            _ if s.starts_with('y') => Ok(Var::Y(indexed(&s[1..])?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_round_trip() {
        for s in 0..NVARS {
            assert_eq!(Var::from_slot(s).slot(), s);
        }
        assert!(Var::Q < Var::T && Var::V < Var::X(1) && Var::X(8) < Var::Y(1));
    }

    #[test]
    fn parse_names() {
        for s in 0..NVARS {
            let v = Var::from_slot(s);
            assert_eq!(v.to_string().parse::<Var>().unwrap(), v);
        }
        assert!("x0".parse::<Var>().is_err());
        assert!("z".parse::<Var>().is_err());
    }
}
