//! Exact scalars: integer-coefficient polynomials in the parameter `x`, and
//! arbitrary-precision rationals for specialization.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational numbers; always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Parse `"p/q"` or `"n"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let parse_int = |s: &str, off: usize| -> Result<BigInt> {
        s.trim().parse::<BigInt>().map_err(|_| Error::Parse {
            pos: off,
            msg: format!("expected an integer, found {s:?}"),
        })
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text, 0)?)),
        Some((num, den)) => {
            let n = parse_int(num, 0)?;
            let d = parse_int(den, num.len() + 1)?;
            if d.is_zero() {
                return Err(Error::Parse {
                    pos: num.len() + 1,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// A polynomial in `x` with arbitrary-precision integer coefficients.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients;
/// the zero polynomial is the empty map.  Exponents are always nonnegative:
/// the diagram product only ever multiplies by nonnegative powers of `x`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, BigInt::from(c))
    }

    pub fn monomial(exp: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `sign * x^exp` — the shape every representing-matrix entry takes.
    pub fn signed_power(sign: i8, exp: u32) -> Self {
        Self::monomial(exp, BigInt::from(sign))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in descending exponent order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    fn insert(&mut self, exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Multiply by `x^exp`.
    pub fn shifted(&self, exp: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, a)| (*e + exp, a.clone())).collect(),
        }
    }

    /// Exact evaluation at a rational point (sparse Horner).
    pub fn evaluate(&self, x0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut prev_exp = 0u32;
        // descending exponents: acc = acc * x0^(gap) + coeff
        for (exp, coeff) in self.terms_desc() {
            if !acc.is_zero() {
                acc *= pow_rational(x0, prev_exp - exp);
            }
            acc += Rational::from_integer(coeff.clone());
            prev_exp = exp;
        }
        if !acc.is_zero() {
            acc *= pow_rational(x0, prev_exp);
        }
        acc
    }
}

fn pow_rational(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, -c);
        }
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms_desc().enumerate() {
            let (sep, shown): (&str, BigInt) = if i == 0 {
                ("", coeff.clone())
            } else if coeff.is_negative() {
                (" - ", -coeff)
            } else {
                (" + ", coeff.clone())
            };
            write!(f, "{sep}")?;
            let unit = shown.magnitude().is_one();
            match (exp, unit, shown.is_negative()) {
                (0, _, _) => write!(f, "{shown}")?,
                (1, true, false) => write!(f, "x")?,
                (1, true, true) => write!(f, "-x")?,
                (1, false, _) => write!(f, "{shown}*x")?,
                (_, true, false) => write!(f, "x^{exp}")?,
                (_, true, true) => write!(f, "-x^{exp}")?,
                (_, false, _) => write!(f, "{shown}*x^{exp}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
