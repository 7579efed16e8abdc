//! The exact coefficient field: rationals and reduced rational functions in the
//! formal parameters `q`, `t`, plus projectively tracked normalization
//! constants.
//!
//! A [`Scalar`] is either a plain arbitrary-precision rational or a quotient of
//! two bivariate polynomials in canonical reduced form (coprime, denominator
//! monic in the lexicographic order with `t > q`). Canonical form makes
//! equality structural. A parametric value whose quotient reduces to a
//! constant demotes back to a plain rational, so each value has exactly one
//! representation.

mod bipoly;
mod parse;

pub use bipoly::{BiPoly, Rat};

use crate::{Error, Result};
use num::{BigInt, One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub(crate) use bipoly::rat_int;

pub(crate) fn factorial(n: u64) -> Rat {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= BigInt::from(k);
    }
    Rat::from_integer(out)
}

/// Quotient of bivariate polynomials in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QtRational {
    num: BiPoly,
    den: BiPoly,
}

impl QtRational {
    /// Reduces `num/den` to canonical form. Panics if `den` is zero; the
    /// callers guard against that.
    fn reduced(num: BiPoly, den: BiPoly) -> QtRational {
        assert!(!den.is_zero(), "zero denominator in QtRational");
        if num.is_zero() {
            return QtRational {
                num: BiPoly::zero(),
                den: BiPoly::one(),
            };
        }
        let g = BiPoly::gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        QtRational { num, den }
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.den
    }
}

/// An exact field element: plain rational or canonical rational function in
/// `q` and `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Plain(Rat),
    Param(QtRational),
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Plain(Rat::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Plain(Rat::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::Plain(rat_int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Scalar {
        assert!(den != 0);
        Scalar::Plain(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar::Plain(r)
    }

    /// The formal parameter `q`.
    pub fn q() -> Scalar {
        Scalar::from_poly(BiPoly::var_q())
    }

    /// The formal parameter `t`.
    pub fn t() -> Scalar {
        Scalar::from_poly(BiPoly::var_t())
    }

    pub fn from_poly(p: BiPoly) -> Scalar {
        Scalar::make(p, BiPoly::one())
    }

    /// Builds `num/den` in canonical form, demoting constants to plain
    /// rationals.
    fn make(num: BiPoly, den: BiPoly) -> Scalar {
        let r = QtRational::reduced(num, den);
        match (r.num.as_constant(), r.den.as_constant()) {
            (Some(n), Some(d)) => Scalar::Plain(n / d),
            _ => Scalar::Param(r),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Plain(r) => r.is_zero(),
            Scalar::Param(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Plain(r) => r.is_one(),
            Scalar::Param(_) => false,
        }
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, Scalar::Plain(_))
    }

    pub fn as_plain(&self) -> Option<&Rat> {
        match self {
            Scalar::Plain(r) => Some(r),
            Scalar::Param(_) => None,
        }
    }

    fn promote(&self) -> (BiPoly, BiPoly) {
        match self {
            Scalar::Plain(r) => (BiPoly::constant(r.clone()), BiPoly::one()),
            Scalar::Param(p) => (p.num.clone(), p.den.clone()),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, other) {
            (Scalar::Plain(a), Scalar::Plain(b)) => Ok(Scalar::Plain(a / b)),
            _ => {
                let (an, ad) = self.promote();
                let (bn, bd) = other.promote();
                Ok(Scalar::make(an.mul(&bd), ad.mul(&bn)))
            }
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        Scalar::one().checked_div(self)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        match self {
            Scalar::Plain(r) => {
                Scalar::Plain(num::pow::pow(r.clone(), n as usize))
            }
            Scalar::Param(p) => Scalar::make(p.num.pow(n), p.den.pow(n)),
        }
    }

    /// Substitutes rational values for `q` and `t`.
    pub fn eval(&self, q: &Rat, t: &Rat) -> Result<Rat> {
        match self {
            Scalar::Plain(r) => Ok(r.clone()),
            Scalar::Param(p) => {
                let den = p.den.eval(q, t);
                if den.is_zero() {
                    return Err(Error::Pole);
                }
                Ok(p.num.eval(q, t) / den)
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Plain(a), Scalar::Plain(b)) => Scalar::Plain(a + b),
            _ => {
                let (an, ad) = self.promote();
                let (bn, bd) = rhs.promote();
                Scalar::make(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
            }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Plain(a), Scalar::Plain(b)) => Scalar::Plain(a * b),
            _ => {
                let (an, ad) = self.promote();
                let (bn, bd) = rhs.promote();
                Scalar::make(an.mul(&bn), ad.mul(&bd))
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Plain(r) => Scalar::Plain(-r.clone()),
            Scalar::Param(p) => Scalar::Param(QtRational {
                num: p.num.neg(),
                den: p.den.clone(),
            }),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_monomial(out: &mut String, coeff: &Rat, qd: u32, td: u32) {
    use num::Signed;
    let coeff_abs = coeff.abs();
    let mut pieces: Vec<String> = Vec::new();
    if !coeff_abs.is_one() || (qd == 0 && td == 0) {
        pieces.push(coeff_abs.to_string());
    }
    if qd == 1 {
        pieces.push("q".to_string());
    } else if qd > 1 {
        pieces.push(format!("q^{qd}"));
    }
    if td == 1 {
        pieces.push("t".to_string());
    } else if td > 1 {
        pieces.push(format!("t^{td}"));
    }
    out.push_str(&pieces.join("*"));
}

fn poly_string(p: &BiPoly) -> String {
    use num::Signed;
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((td, qd), c)) in p.iter().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        fmt_monomial(&mut out, c, *qd, *td);
    }
    out
}

fn needs_parens(p: &BiPoly) -> bool {
    use num::Signed;
    match p.iter().count() {
        0 | 1 => p
            .iter()
            .next()
            .map(|(_, c)| c.is_negative() || (!c.abs().is_one() && !c.denom().is_one()))
            .unwrap_or(false),
        _ => true,
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Plain(r) => write!(f, "{r}"),
            Scalar::Param(p) => {
                if p.den.is_one() {
                    write!(f, "{}", poly_string(&p.num))
                } else {
                    let num = if needs_parens(&p.num) {
                        format!("({})", poly_string(&p.num))
                    } else {
                        poly_string(&p.num)
                    };
                    let den = if needs_parens(&p.den) {
                        format!("({})", poly_string(&p.den))
                    } else {
                        poly_string(&p.den)
                    };
                    write!(f, "{num}/{den}")
                }
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        parse::parse_scalar(s)
    }
}

/// A multiplicative constant tracked projectively: the square of its
/// determinant-type factor together with a formal exponent, so the full
/// constant is `sqrt(det_square) * exp(exp_arg)` without ever materializing a
/// square root or an exponential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormConstant {
    det_square: Scalar,
    exp_arg: Scalar,
}

impl NormConstant {
    pub fn one() -> NormConstant {
        NormConstant {
            det_square: Scalar::one(),
            exp_arg: Scalar::zero(),
        }
    }

    pub fn new(det_square: Scalar, exp_arg: Scalar) -> NormConstant {
        assert!(!det_square.is_zero(), "NormConstant with zero det_square");
        NormConstant {
            det_square,
            exp_arg,
        }
    }

    pub fn det_square(&self) -> &Scalar {
        &self.det_square
    }

    pub fn exp_arg(&self) -> &Scalar {
        &self.exp_arg
    }

    pub fn is_one(&self) -> bool {
        self.det_square.is_one() && self.exp_arg.is_zero()
    }
}

impl Mul for &NormConstant {
    type Output = NormConstant;
    fn mul(self, rhs: &NormConstant) -> NormConstant {
        NormConstant {
            det_square: &self.det_square * &rhs.det_square,
            exp_arg: &self.exp_arg + &rhs.exp_arg,
        }
    }
}

impl Mul for NormConstant {
    type Output = NormConstant;
    fn mul(self, rhs: NormConstant) -> NormConstant {
        (&self) * (&rhs)
    }
}
