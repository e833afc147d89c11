//! Arbitrary-precision real scalars.
//!
//! `HPReal` wraps an MPFR float together with its working precision in
//! decimal digits. All elementary functions are correctly rounded by MPFR
//! (error at most 0.5 ulp, well inside the 2 ulp contract). Precision of a
//! binary operation is the maximum of the operand precisions.

use std::cmp::Ordering;
use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

/// Minimum supported working precision in decimal digits.
pub const MIN_DIGITS: u32 = 30;
/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 60;
/// Guard digits added on top of the requested output precision.
pub const GUARD_DIGITS: u32 = 10;

/// Working precision for a requested output precision.
pub fn working_digits(requested: u32) -> u32 {
    requested + GUARD_DIGITS
}

/// Validate a requested precision against the artifact-wide minimum.
pub fn require_min_digits(digits: u32) -> Result<()> {
    if digits < MIN_DIGITS {
        return Err(Error::Config(format!(
            "precision {digits} below minimum of {MIN_DIGITS} decimal digits"
        )));
    }
    Ok(())
}

fn bits_for(digits: u32) -> u32 {
    // log2(10) = 3.3219...; a few spare bits so decimal printing round-trips
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8
}

/// Arbitrary-precision real number carrying its decimal working precision.
#[derive(Clone, Debug)]
pub struct HPReal {
    value: Float,
    digits: u32,
}

impl HPReal {
    fn wrap(value: Float, digits: u32) -> HPReal {
        HPReal { value, digits }
    }

    pub fn zero(digits: u32) -> HPReal {
        HPReal::wrap(Float::new(bits_for(digits)), digits)
    }

    pub fn from_u64(v: u64, digits: u32) -> HPReal {
        HPReal::wrap(Float::with_val(bits_for(digits), v), digits)
    }

    pub fn from_i64(v: i64, digits: u32) -> HPReal {
        HPReal::wrap(Float::with_val(bits_for(digits), v), digits)
    }

    /// Exact rational `num/den` rounded once to the working precision.
    pub fn from_ratio(num: i64, den: i64, digits: u32) -> HPReal {
        let r = rug::Rational::from((num, den));
        HPReal::wrap(Float::with_val(bits_for(digits), r), digits)
    }

    pub fn from_integer(v: &rug::Integer, digits: u32) -> HPReal {
        HPReal::wrap(Float::with_val(bits_for(digits), v), digits)
    }

    pub fn from_rational(v: &rug::Rational, digits: u32) -> HPReal {
        HPReal::wrap(Float::with_val(bits_for(digits), v), digits)
    }

    /// Parse a decimal string (plain or scientific notation).
    pub fn parse(s: &str, digits: u32) -> Result<HPReal> {
        let p = Float::parse(s).map_err(|e| Error::Parse {
            position: 0,
            detail: format!("invalid decimal literal {s:?}: {e}"),
        })?;
        Ok(HPReal::wrap(Float::with_val(bits_for(digits), p), digits))
    }

    pub fn pi(digits: u32) -> HPReal {
        HPReal::wrap(Float::with_val(bits_for(digits), Constant::Pi), digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_sign_negative() && !self.value.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub(crate) fn as_float(&self) -> &Float {
        &self.value
    }

    fn join(&self, other: &HPReal) -> u32 {
        self.digits.max(other.digits)
    }

    fn unary(&self, f: impl FnOnce(Float) -> Float) -> HPReal {
        HPReal::wrap(f(self.value.clone()), self.digits)
    }

    fn unary_checked(
        &self,
        name: &'static str,
        precheck: Option<&str>,
        f: impl FnOnce(Float) -> Float,
    ) -> Result<HPReal> {
        if let Some(msg) = precheck {
            return Err(Error::domain(name, self, msg));
        }
        let out = f(self.value.clone());
        if !out.is_finite() {
            return Err(Error::domain(name, self, "result is not finite"));
        }
        Ok(HPReal::wrap(out, self.digits))
    }

    // -- total elementary functions --

    pub fn neg(&self) -> HPReal {
        self.unary(|v| -v)
    }

    pub fn abs(&self) -> HPReal {
        self.unary(Float::abs)
    }

    pub fn sin(&self) -> HPReal {
        self.unary(Float::sin)
    }

    pub fn cos(&self) -> HPReal {
        self.unary(Float::cos)
    }

    pub fn atan(&self) -> HPReal {
        self.unary(Float::atan)
    }

    pub fn exp(&self) -> HPReal {
        self.unary(Float::exp)
    }

    pub fn sinh(&self) -> HPReal {
        self.unary(Float::sinh)
    }

    pub fn cosh(&self) -> HPReal {
        self.unary(Float::cosh)
    }

    pub fn tanh(&self) -> HPReal {
        self.unary(Float::tanh)
    }

    pub fn asinh(&self) -> HPReal {
        self.unary(Float::asinh)
    }

    pub fn round(&self) -> HPReal {
        self.unary(Float::round)
    }

    pub fn square(&self) -> HPReal {
        self.unary(Float::square)
    }

    // -- partial elementary functions --

    pub fn sqrt(&self) -> Result<HPReal> {
        let pre = if self.is_negative() { Some("argument is negative") } else { None };
        self.unary_checked("sqrt", pre, Float::sqrt)
    }

    pub fn ln(&self) -> Result<HPReal> {
        let pre = if self.value.is_sign_negative() || self.value.is_zero() {
            Some("argument must be positive")
        } else {
            None
        };
        self.unary_checked("log", pre, Float::ln)
    }

    pub fn tan(&self) -> Result<HPReal> {
        self.unary_checked("tan", None, Float::tan)
    }

    pub fn cot(&self) -> Result<HPReal> {
        let pre = if self.value.is_zero() { Some("pole at multiples of pi") } else { None };
        self.unary_checked("cot", pre, Float::cot)
    }

    pub fn acosh(&self) -> Result<HPReal> {
        let one = Float::with_val(self.value.prec(), 1);
        let pre = if self.value < one { Some("argument must be >= 1") } else { None };
        self.unary_checked("acosh", pre, Float::acosh)
    }

    pub fn recip(&self) -> Result<HPReal> {
        let pre = if self.value.is_zero() { Some("division by zero") } else { None };
        self.unary_checked("recip", pre, Float::recip)
    }

    pub fn pow(&self, exponent: &HPReal) -> Result<HPReal> {
        let digits = self.join(exponent);
        let out = self.value.clone().pow(&exponent.value);
        if !out.is_finite() || out.is_nan() {
            return Err(Error::domain("pow", self, "result is not finite"));
        }
        Ok(HPReal::wrap(Float::with_val(bits_for(digits), out), digits))
    }

    pub fn pow_i(&self, exponent: i32) -> HPReal {
        self.unary(|v| v.pow(exponent))
    }

    /// `10^(-e)` at this value's precision; handy for tolerance thresholds.
    pub fn pow10(e: i64, digits: u32) -> HPReal {
        let ten = Float::with_val(bits_for(digits), 10);
        HPReal::wrap(ten.pow(e as i32), digits)
    }

    /// Decimal string with `digits` significant digits.
    ///
    /// Fixed-point notation when the exponent is moderate, scientific
    /// otherwise; the output depends only on the value and `digits`.
    pub fn to_decimal(&self, digits: usize) -> String {
        if !self.value.is_finite() {
            return self.value.to_string();
        }
        if self.value.is_zero() {
            return "0".to_string();
        }
        let raw = self.value.to_string_radix(10, Some(digits.max(1)));
        // raw looks like "-d.ddddde-4" or "d.ddd" (rug may omit the exponent)
        let (mant, exp) = match raw.split_once('e') {
            Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
            None => (raw, 0),
        };
        let neg = mant.starts_with('-');
        let digits_only: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
        let point = mant.find('.').map(|i| if neg { i - 1 } else { i }).unwrap_or(digits_only.len());
        // value = 0.digits_only * 10^(point + exp) in decimal-shift terms
        let dec_exp = point as i64 + exp; // digits before the decimal point
        let sign = if neg { "-" } else { "" };
        let nd = digits_only.len() as i64;
        if dec_exp > nd + 6 || dec_exp < -6 {
            // scientific
            let mut m = digits_only.clone();
            if m.len() > 1 {
                m.insert(1, '.');
            }
            return format!("{sign}{m}e{}", dec_exp - 1);
        }
        if dec_exp <= 0 {
            let zeros = "0".repeat((-dec_exp) as usize);
            format!("{sign}0.{zeros}{digits_only}")
        } else if dec_exp >= nd {
            let zeros = "0".repeat((dec_exp - nd) as usize);
            format!("{sign}{digits_only}{zeros}")
        } else {
            let (a, b) = digits_only.split_at(dec_exp as usize);
            format!("{sign}{a}.{b}")
        }
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(self.digits as usize))
    }
}

impl PartialEq for HPReal {
    fn eq(&self, other: &HPReal) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for HPReal {
    fn partial_cmp(&self, other: &HPReal) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&HPReal> for &HPReal {
            type Output = HPReal;
            fn $method(self, rhs: &HPReal) -> HPReal {
                let digits = self.join(rhs);
                let out = Float::with_val(bits_for(digits), &self.value $op &rhs.value);
                HPReal::wrap(out, digits)
            }
        }
        impl std::ops::$trait<HPReal> for HPReal {
            type Output = HPReal;
            fn $method(self, rhs: HPReal) -> HPReal {
                (&self) $op (&rhs)
            }
        }
        impl std::ops::$trait<&HPReal> for HPReal {
            type Output = HPReal;
            fn $method(self, rhs: &HPReal) -> HPReal {
                (&self) $op rhs
            }
        }
        impl std::ops::$trait<HPReal> for &HPReal {
            type Output = HPReal;
            fn $method(self, rhs: HPReal) -> HPReal {
                self $op (&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl std::ops::Neg for &HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal::neg(self)
    }
}

impl std::ops::Neg for HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal::neg(&self)
    }
}

/// π to the stated precision.
pub fn const_pi(digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    Ok(HPReal::pi(digits))
}

/// Elementary function selector for the dispatch entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElemFn {
    Sin,
    Cos,
    Tan,
    Arctan,
    Log,
    Sqrt,
    Exp,
    Cot,
    Pow,
}

/// Dispatch an elementary function by name. `Pow` requires `y`.
pub fn elem(f: ElemFn, x: &HPReal, y: Option<&HPReal>) -> Result<HPReal> {
    match f {
        ElemFn::Sin => Ok(x.sin()),
        ElemFn::Cos => Ok(x.cos()),
        ElemFn::Tan => x.tan(),
        ElemFn::Arctan => Ok(x.atan()),
        ElemFn::Log => x.ln(),
        ElemFn::Sqrt => x.sqrt(),
        ElemFn::Exp => Ok(x.exp()),
        ElemFn::Cot => x.cot(),
        ElemFn::Pow => {
            let y = y.ok_or_else(|| Error::Config("pow requires a second argument".into()))?;
            x.pow(y)
        }
    }
}
