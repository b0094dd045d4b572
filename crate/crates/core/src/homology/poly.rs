use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A polynomial in `t` and `t^-1` with nonnegative integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPoly(BTreeMap<i32, u64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `c t^e`.
    pub fn monomial(e: i32, c: u64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: i32, c: u64) {
        if c != 0 {
            *self.0.entry(e).or_insert(0) += c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, e: i32) -> u64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&a, &x) in &self.0 {
            for (&b, &y) in &other.0 {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.0.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, e) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, e) => write!(f, "t^{e}")?,
                (c, 1) => write!(f, "{c}t")?,
                (c, e) => write!(f, "{c}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = LaurentPoly::monomial(-1, 1);
        let q = LaurentPoly::monomial(1, 2);
        assert_eq!(p.mul(&q), LaurentPoly::monomial(0, 2));
        assert_eq!(p.shift(1), LaurentPoly::one());
        assert!(LaurentPoly::zero().mul(&q).is_zero());
        let mut s = q.clone();
        s.add_term(0, 0);
        assert_eq!(s, q);
    }

    #[test]
    fn display_and_json() {
        let mut p = LaurentPoly::monomial(3, 1);
        p.add_term(1, 2);
        p.add_term(0, 1);
        p.add_term(-1, 1);
        assert_eq!(p.to_string(), "t^3 + 2t + 1 + t^-1");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"-1":1,"0":1,"1":2,"3":1}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
