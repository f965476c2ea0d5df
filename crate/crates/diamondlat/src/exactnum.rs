//! Exact rational and quaternion arithmetic.
//!
//! [`Rational`] is an arbitrary-precision rational kept in canonical form
//! (fully reduced, positive denominator), so equality is structural.
//! [`Quaternion`] is an element of the rational quaternion algebra
//! `ℍ_ℚ = ℚ ⊕ ℚi ⊕ ℚj ⊕ ℚk` with the Hamilton relations
//! `i² = j² = k² = −1`, `ij = k`, `jk = i`, `ki = j` (and `ji = −k`).
//! This is a division ring: every nonzero element is invertible, and no
//! operation in this module ever rounds.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number in canonical form.
///
/// `num_rational::BigRational` already maintains the invariants we rely on:
/// the fraction is reduced after every operation and the denominator is
/// positive, so `==` is structural equality of canonical forms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactNumError {
    /// Attempt to invert zero, or to conjugate by zero.
    DivisionByZero,
    /// A rational string was not of the form `num` or `num/den` with `den > 0`.
    BadRational(String),
}

impl fmt::Display for ExactNumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactNumError::DivisionByZero => write!(f, "division by zero"),
            ExactNumError::BadRational(s) => write!(f, "malformed rational `{s}`"),
        }
    }
}

impl core::error::Error for ExactNumError {}

/// Rational from an integer numerator and nonzero denominator.
///
/// Panics if `den == 0`; parsing untrusted input goes through
/// [`parse_rational`] instead.
pub fn rational(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rational with zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"num"` or `"num/den"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational, ExactNumError> {
    let bad = || ExactNumError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// An element `a + b·i + c·j + d·k` of the rational quaternions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion { a, b, c, d }
    }

    /// Central element `n + 0i + 0j + 0k`.
    pub fn from_int(n: i64) -> Self {
        Quaternion::from_rational(rational(n, 1))
    }

    pub fn from_rational(a: Rational) -> Self {
        Quaternion::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// Quaternion with the four components given as small fractions.
    pub fn from_parts(parts: [(i64, i64); 4]) -> Self {
        let [a, b, c, d] = parts;
        Quaternion::new(
            rational(a.0, a.1),
            rational(b.0, b.1),
            rational(c.0, c.1),
            rational(d.0, d.1),
        )
    }

    pub fn zero() -> Self {
        Quaternion::from_int(0)
    }

    pub fn one() -> Self {
        Quaternion::from_int(1)
    }

    pub fn i() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn j() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    pub fn k() -> Self {
        Quaternion::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True for central elements, i.e. those in ℚ·1.
    pub fn is_central(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Quaternion conjugate `a − bi − cj − dk`.
    pub fn conj(&self) -> Self {
        Quaternion::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// Reduced norm `a² + b² + c² + d²`. Zero only for the zero quaternion.
    pub fn norm_sq(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    /// Multiplicative inverse `x⁻¹ = conj(x) / norm(x)`, exact.
    pub fn inv(&self) -> Result<Self, ExactNumError> {
        if self.is_zero() {
            return Err(ExactNumError::DivisionByZero);
        }
        let n = self.norm_sq();
        let q = self.conj();
        Ok(Quaternion::new(q.a / &n, q.b / &n, q.c / &n, q.d / &n))
    }

    /// Conjugation `c · x · c⁻¹`, a ring automorphism for every `c ≠ 0`.
    pub fn conjugate_by(&self, c: &Quaternion) -> Result<Self, ExactNumError> {
        let cinv = c.inv()?;
        Ok(&(c * self) * &cinv)
    }

    /// The four components as canonical rational strings, `[a, b, c, d]`.
    pub fn to_strings(&self) -> [String; 4] {
        [
            self.a.to_string(),
            self.b.to_string(),
            self.c.to_string(),
            self.d.to_string(),
        ]
    }

    /// Parses a component quadruple as produced by [`Quaternion::to_strings`].
    pub fn from_strings(parts: &[String; 4]) -> Result<Self, ExactNumError> {
        Ok(Quaternion::new(
            parse_rational(&parts[0])?,
            parse_rational(&parts[1])?,
            parse_rational(&parts[2])?,
            parse_rational(&parts[3])?,
        ))
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, coef: &Rational, unit: &str| -> fmt::Result {
            if coef.is_zero() {
                return Ok(());
            }
            let neg = coef < &Rational::zero();
            let abs = if neg { -coef } else { coef.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if unit.is_empty() {
                write!(f, "{abs}")
            } else if abs.is_one() {
                write!(f, "{unit}")
            } else {
                write!(f, "{abs}{unit}")
            }
        };
        term(f, &self.a, "")?;
        term(f, &self.b, "i")?;
        term(f, &self.c, "j")?;
        term(f, &self.d, "k")
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.d + &rhs.d,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.a - &rhs.a,
            &self.b - &rhs.b,
            &self.c - &rhs.c,
            &self.d - &rhs.d,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 + c1 * a2 + d1 * b2 - b1 * d2,
            a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
        )
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: &Quaternion) -> Quaternion {
                (&self).$method(rhs)
            }
        }
        impl $trait<Quaternion> for &Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}
