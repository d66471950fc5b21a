//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// The coefficient field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Prime field of order `p`, with `p` prime and `p < 2^31`.
    Prime(u64),
}

impl Field {
    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }
}

/// An element of one of the supported fields, always kept in canonical form:
/// rationals in lowest terms with positive denominator, prime-field residues
/// in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rat(BigRational),
    Fp { value: u64, modulus: u64 },
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldElement {
    pub fn zero(field: Field) -> Self {
        match field {
            Field::Rational => FieldElement::Rat(BigRational::zero()),
            Field::Prime(p) => FieldElement::Fp { value: 0, modulus: p },
        }
    }

    pub fn one(field: Field) -> Self {
        match field {
            Field::Rational => FieldElement::Rat(BigRational::one()),
            Field::Prime(p) => FieldElement::Fp { value: 1, modulus: p },
        }
    }

    /// Embeds a signed integer. Over a prime field the value is reduced mod p.
    pub fn from_int(field: Field, n: i64) -> Self {
        match field {
            Field::Rational => FieldElement::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                FieldElement::Fp { value: r, modulus: p }
            }
        }
    }

    /// Builds a/b in the given field. `b` must be nonzero.
    pub fn from_fraction(field: Field, a: i64, b: i64) -> Result<Self> {
        if b == 0 {
            return Err(Error::ZeroDivision);
        }
        let num = Self::from_int(field, a);
        let den = Self::from_int(field, b);
        num.div(&den)
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rat(_) => Field::Rational,
            FieldElement::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_zero(),
            FieldElement::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_one(),
            FieldElement::Fp { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a + b),
            (FieldElement::Fp { value: a, modulus: p }, FieldElement::Fp { value: b, .. }) => {
                FieldElement::Fp { value: (a + b) % p, modulus: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a - b),
            (FieldElement::Fp { value: a, modulus: p }, FieldElement::Fp { value: b, .. }) => {
                FieldElement::Fp { value: (a + p - b) % p, modulus: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a * b),
            (FieldElement::Fp { value: a, modulus: p }, FieldElement::Fp { value: b, .. }) => {
                let prod = (*a as u128 * *b as u128) % (*p as u128);
                FieldElement::Fp { value: prod as u64, modulus: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rat(a) => FieldElement::Rat(-a),
            FieldElement::Fp { value, modulus } => FieldElement::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(match self {
            FieldElement::Rat(a) => FieldElement::Rat(a.recip()),
            FieldElement::Fp { value, modulus } => FieldElement::Fp {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Returns the value as an i64 if the element is an embedded integer of
    /// small magnitude (rationals with denominator 1, or the prime-field
    /// residue itself).
    pub fn to_small_int(&self) -> Option<i64> {
        match self {
            FieldElement::Rat(r) => {
                if r.denom().is_one() {
                    use num::ToPrimitive;
                    r.numer().to_i64()
                } else {
                    None
                }
            }
            FieldElement::Fp { value, .. } => Some(*value as i64),
        }
    }
}

// extended Euclid; `a` nonzero mod p, p prime
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "modulus must be prime and a nonzero");
    t.rem_euclid(p as i128) as u64
}

/// Dispatch over the four arithmetic operations; the CLI maps onto this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    match op {
        FieldOp::Add => a.add(b),
        FieldOp::Sub => a.sub(b),
        FieldOp::Mul => a.mul(b),
        FieldOp::Div => a.div(b),
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

impl FieldElement {
    /// True when the canonical printed form needs no sign (used by the printer).
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_negative(),
            FieldElement::Fp { .. } => false,
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            FieldElement::Rat(r) => FieldElement::Rat(r.abs()),
            fp => fp.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> FieldElement {
        FieldElement::from_fraction(Field::Rational, a, b).unwrap()
    }

    fn f7(a: i64) -> FieldElement {
        FieldElement::from_int(Field::Prime(7), a)
    }

    #[test]
    fn rational_add() {
        assert_eq!(q(1, 2).add(&q(1, 3)).unwrap(), q(5, 6));
    }

    #[test]
    fn prime_field_mul() {
        assert_eq!(f7(3).mul(&f7(5)).unwrap(), f7(1));
    }

    #[test]
    fn prime_field_div_by_zero() {
        assert_eq!(f7(1).div(&f7(0)), Err(Error::ZeroDivision));
    }

    #[test]
    fn inverse_examples() {
        let f11 = |a| FieldElement::from_int(Field::Prime(11), a);
        assert_eq!(f11(4).inverse().unwrap(), f11(3));
        assert_eq!(q(-2, 3).inverse().unwrap(), q(-3, 2));
        assert_eq!(q(0, 1).inverse(), Err(Error::ZeroDivision));
    }

    #[test]
    fn mixed_fields_rejected() {
        assert_eq!(q(1, 1).add(&f7(1)), Err(Error::FieldMismatch));
    }

    #[test]
    fn canonical_form_is_reduced() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2), q(-1, 2));
        assert_eq!(f7(9), f7(2));
    }

    #[test]
    fn primality_helper() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(7));
        assert!(is_prime_u64(2147483647));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(9));
    }
}
