//! Coefficient fields and exact matrix ranks.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The coefficient field for cohomology: `GF(p)` for a prime `p`, or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Gf2,
    Gfp(u32),
    Rationals,
}

impl FieldSpec {
    /// `GF(p)`, with `p = 2` normalized to [`FieldSpec::Gf2`].
    pub fn gf(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Ok(if p == 2 { FieldSpec::Gf2 } else { FieldSpec::Gfp(p) })
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Gf2 => 2,
            FieldSpec::Gfp(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64)
            .all(|d| !p.is_multiple_of(d))
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `gf2`, `gfp:<p>` and `q`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gf2" => Ok(FieldSpec::Gf2),
            "q" => Ok(FieldSpec::Rationals),
            _ => {
                let p = s
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown field `{s}`; use gf2, gfp:<p> or q")))?;
                FieldSpec::gf(p)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2 => write!(f, "gf2"),
            FieldSpec::Gfp(p) => write!(f, "gfp:{p}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A sparse matrix with entries `±1`, one row per list of `(column, sign)`.
pub(crate) struct SignMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, bool)>>,
}

impl SignMatrix {
    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Gf2 => rank_gf2(self),
            FieldSpec::Gfp(p) => rank_generic(self, &Gfp(p as u64)),
            FieldSpec::Rationals => rank_generic(self, &Rationals),
        }
    }
}

fn rank_gf2(m: &SignMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.cols];
    let mut rank = 0;
    for r in &m.rows {
        let mut row = vec![0u64; words];
        for &(c, _) in r {
            row[c / 64] ^= 1 << (c % 64);
        }
        while let Some(lead) = row
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + w.trailing_zeros() as usize)
        {
            match &pivots[lead] {
                Some(p) => {
                    for (a, b) in row.iter_mut().zip(p).skip(lead / 64) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

trait Arith {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sign(&self, negative: bool) -> Self::E;
    /// `a - c * b`.
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
}

struct Gfp(u64);

impl Arith for Gfp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sign(&self, negative: bool) -> u64 {
        if negative {
            self.0 - 1
        } else {
            1
        }
    }
    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        let p = self.0;
        (a + p - c * b % p) % p
    }
    fn inv(&self, a: &u64) -> u64 {
        let (mut base, mut e, mut acc) = (*a, self.0 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            e >>= 1;
        }
        acc
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
}

struct Rationals;

impl Arith for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sign(&self, negative: bool) -> BigRational {
        let one = BigRational::one();
        if negative {
            -one
        } else {
            one
        }
    }
    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> BigRational {
        a - c * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::from_integer(BigInt::one()) / a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
}

/// Row-by-row elimination against normalized pivot rows, which have a 1 at
/// their pivot column and zeros before it.
fn rank_generic<F: Arith>(m: &SignMatrix, f: &F) -> usize {
    let mut pivots: Vec<Option<Vec<F::E>>> = vec![None; m.cols];
    let mut rank = 0;
    for r in &m.rows {
        let mut row = vec![f.zero(); m.cols];
        for &(c, neg) in r {
            row[c] = f.sign(neg);
        }
        for c in 0..m.cols {
            if f.is_zero(&row[c]) {
                continue;
            }
            match &pivots[c] {
                Some(p) => {
                    let coef = row[c].clone();
                    for k in c..m.cols {
                        if !f.is_zero(&p[k]) {
                            row[k] = f.sub_mul(&row[k], &coef, &p[k]);
                        }
                    }
                }
                None => {
                    let inv = f.inv(&row[c]);
                    for x in row.iter_mut().skip(c) {
                        *x = f.mul(x, &inv);
                    }
                    pivots[c] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
