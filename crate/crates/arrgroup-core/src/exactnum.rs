//! Exact arithmetic in an imaginary quadratic field `K = ℚ(√−d)`.
//!
//! Elements are stored as `re + imc·√−d` with both parts in lowest-terms
//! big rationals, so every sign decision made by the geometry is exact.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors raised by field arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: Q(sqrt(-{0})) vs Q(sqrt(-{1}))")]
    FieldMismatch(u32, u32),
    #[error("invalid field parameter d = {0}: must be a positive square-free integer")]
    InvalidField(i64),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
}

/// The field `ℚ(√−d)`; `d = 1` gives the Gaussian field, `d = 3` contains `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldDesc {
    d: u32,
}

impl FieldDesc {
    /// Validates that `d` is a positive square-free integer.
    pub fn new(d: i64) -> Result<Self, NumError> {
        if d < 1 || d > u32::MAX as i64 {
            return Err(NumError::InvalidField(d));
        }
        let mut k = 2i64;
        while k * k <= d {
            if d % (k * k) == 0 {
                return Err(NumError::InvalidField(d));
            }
            k += 1;
        }
        Ok(FieldDesc { d: d as u32 })
    }

    /// The Gaussian field `ℚ(i)`.
    pub fn gaussian() -> Self {
        FieldDesc { d: 1 }
    }

    /// The Eisenstein field `ℚ(√−3)`.
    pub fn eisenstein() -> Self {
        FieldDesc { d: 3 }
    }

    pub fn d(&self) -> u32 {
        self.d
    }
}

/// Binary field operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element `re + imc·√−d` of a fixed imaginary quadratic field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    re: BigRational,
    imc: BigRational,
    field: FieldDesc,
}

/// Parses a rational literal such as `"3"`, `"-3/2"` or `"0"`.
pub fn parse_rational(s: &str) -> Result<BigRational, NumError> {
    let t = s.trim();
    BigRational::from_str(t).map_err(|_| NumError::BadRational(s.to_string()))
}

/// Builds the rational `p/q`; panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl QuadElem {
    pub fn new(re: BigRational, imc: BigRational, field: FieldDesc) -> Self {
        QuadElem { re, imc, field }
    }

    pub fn zero(field: FieldDesc) -> Self {
        QuadElem::new(BigRational::zero(), BigRational::zero(), field)
    }

    pub fn one(field: FieldDesc) -> Self {
        QuadElem::from_rational(BigRational::one(), field)
    }

    pub fn from_rational(re: BigRational, field: FieldDesc) -> Self {
        QuadElem::new(re, BigRational::zero(), field)
    }

    pub fn from_int(v: i64, field: FieldDesc) -> Self {
        QuadElem::from_rational(BigRational::from_integer(BigInt::from(v)), field)
    }

    /// `√−d` itself.
    pub fn sqrt_neg_d(field: FieldDesc) -> Self {
        QuadElem::new(BigRational::zero(), BigRational::one(), field)
    }

    /// Builds `p + q√−d` from small integer fractions, `(pn/pd) + (qn/qd)√−d`.
    pub fn from_parts(pn: i64, pd: i64, qn: i64, qd: i64, field: FieldDesc) -> Self {
        QuadElem::new(rat(pn, pd), rat(qn, qd), field)
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    /// Real part (exact, since `√−d` is purely imaginary).
    pub fn re_part(&self) -> &BigRational {
        &self.re
    }

    /// Coefficient of `√−d`; its sign is the sign of the imaginary part.
    pub fn imc(&self) -> &BigRational {
        &self.imc
    }

    /// Sign of the imaginary part: −1, 0 or +1.
    pub fn im_sign(&self) -> i8 {
        sign_of(&self.imc)
    }

    /// Compares imaginary parts exactly (both share the factor `√d > 0`).
    pub fn cmp_im(&self, other: &QuadElem) -> Ordering {
        self.imc.cmp(&other.imc)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.imc.is_zero()
    }

    /// True when the imaginary part vanishes.
    pub fn is_rational(&self) -> bool {
        self.imc.is_zero()
    }

    /// Field norm `re² + d·imc²`, a non-negative rational.
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.field.d));
        &self.re * &self.re + d * &self.imc * &self.imc
    }

    pub fn conj(&self) -> QuadElem {
        QuadElem::new(self.re.clone(), -self.imc.clone(), self.field)
    }

    fn check(&self, other: &QuadElem) -> Result<(), NumError> {
        if self.field != other.field {
            Err(NumError::FieldMismatch(self.field.d, other.field.d))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &QuadElem) -> Result<QuadElem, NumError> {
        self.check(other)?;
        Ok(QuadElem::new(&self.re + &other.re, &self.imc + &other.imc, self.field))
    }

    pub fn try_sub(&self, other: &QuadElem) -> Result<QuadElem, NumError> {
        self.check(other)?;
        Ok(QuadElem::new(&self.re - &other.re, &self.imc - &other.imc, self.field))
    }

    pub fn try_mul(&self, other: &QuadElem) -> Result<QuadElem, NumError> {
        self.check(other)?;
        let d = BigRational::from_integer(BigInt::from(self.field.d));
        let re = &self.re * &other.re - d * &self.imc * &other.imc;
        let imc = &self.re * &other.imc + &self.imc * &other.re;
        Ok(QuadElem::new(re, imc, self.field))
    }

    pub fn try_inv(&self) -> Result<QuadElem, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadElem::new(&self.re / &n, -(&self.imc / &n), self.field))
    }

    pub fn try_div(&self, other: &QuadElem) -> Result<QuadElem, NumError> {
        self.check(other)?;
        self.try_mul(&other.try_inv()?)
    }
}

/// Generic entry point for the four field operations.
pub fn field_arith(a: &QuadElem, b: &QuadElem, op: FieldOp) -> Result<QuadElem, NumError> {
    match op {
        FieldOp::Add => a.try_add(b),
        FieldOp::Sub => a.try_sub(b),
        FieldOp::Mul => a.try_mul(b),
        FieldOp::Div => a.try_div(b),
    }
}

/// Sign of a rational as −1, 0 or +1.
pub fn sign_of(q: &BigRational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

// Operator impls are for internal pipelines where every operand comes from the
// same arrangement; they panic on a field mismatch instead of returning errors.
macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a QuadElem> for &'a QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: &'a QuadElem) -> QuadElem {
                self.$try(rhs).expect("operands from different fields")
            }
        }
        impl $tr<QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: QuadElem) -> QuadElem {
                (&self).$try(&rhs).expect("operands from different fields")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.re.clone(), -self.imc.clone(), self.field)
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

impl QuadElem {
    /// Multiplies by a rational scalar.
    pub fn scale(&self, k: &BigRational) -> QuadElem {
        QuadElem::new(&self.re * k, &self.imc * k, self.field)
    }
}

impl fmt::Display for QuadElem {
    /// `3/2 - 2*sqrt(-3)`, `i`, `-1/2*i`; the unit coefficient is omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = if self.field.d == 1 { String::from("i") } else { alloc::format!("sqrt(-{})", self.field.d) };
        let term = |c: &BigRational| if c.is_one() { root.clone() } else { alloc::format!("{}*{}", c, root) };
        match (self.re.is_zero(), self.imc.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.imc.is_negative() {
                    write!(f, "-{}", term(&-self.imc.clone()))
                } else {
                    write!(f, "{}", term(&self.imc))
                }
            }
            (false, false) => {
                if self.imc.is_negative() {
                    write!(f, "{} - {}", self.re, term(&-self.imc.clone()))
                } else {
                    write!(f, "{} + {}", self.re, term(&self.imc))
                }
            }
        }
    }
}
