//! Exact matrix rank over the rationals and over prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Coefficient field for homology and Betti numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Field {
    #[default]
    Rationals,
    /// GF(p) for a prime `p < 2^31`.
    Prime(u32),
}

impl Field {
    pub const GF2: Field = Field::Prime(2);

    pub fn prime(p: u32) -> Result<Self, Error> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if is_prime && p < 1 << 31 {
            Ok(Field::Prime(p))
        } else {
            Err(Error::BadParams(format!("{p} is not a supported prime")))
        }
    }

    pub fn rank(&self, matrix: &[Vec<i64>]) -> usize {
        match *self {
            Field::Rationals => rank_rational(matrix),
            Field::Prime(p) => rank_mod_p(matrix, p as u64),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("q"),
            Field::Prime(p) => write!(f, "gf{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "q" | "Q" | "rationals" => Ok(Field::Rationals),
            _ => match s.strip_prefix("gf").map(str::parse) {
                Some(Ok(p)) => Field::prime(p),
                _ => Err(Error::BadParams(format!("unknown field `{s}` (expected q or gfP)"))),
            },
        }
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Field {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

/// Fraction-free (Bareiss) elimination. Every division is exact, so the
/// entries stay integral minors of the input.
pub fn rank_rational(matrix: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> =
        matrix.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        for row in below.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = top[rank][c].clone();
        rank += 1;
    }
    rank
}

pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for j in c..cols {
            m[rank][j] = m[rank][j] * inv % p;
        }
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                row[j] = (row[j] + p - f * pivot_row[j] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}
