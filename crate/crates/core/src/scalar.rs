//! The base field: exact rationals, or rational functions over the rationals
//! in named parameters.
//!
//! A [`Scalar`] whose value does not depend on any parameter is always stored
//! in the `Rational` variant, so parameter-free arithmetic stays on the fast
//! path and equality is structural in both variants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{fmt_rat, Polynomial};

/// Values for named parameters.
pub type ParameterAssignment = BTreeMap<String, BigRational>;

/// A quotient of polynomials with coprime numerator and denominator and a
/// monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Polynomial::one(),
            });
        }
        let (num, den) = if den.as_constant().is_some() {
            (num, den)
        } else {
            let g = Polynomial::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let (den, lc) = den.monic();
        let num = num.scale(&lc.recip());
        Ok(RationalFunction { num, den })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero den");
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero den")
    }

    fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero den")
    }

    fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Function(Arc<RationalFunction>),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn param(name: &str) -> Self {
        Scalar::Function(Arc::new(RationalFunction::from_poly(Polynomial::var(name))))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar::Rational(q)
    }

    fn from_function(f: RationalFunction) -> Self {
        if f.den.is_one() {
            if let Some(c) = f.num.as_constant() {
                return Scalar::Rational(c);
            }
        }
        Scalar::Function(Arc::new(f))
    }

    fn to_function(&self) -> RationalFunction {
        match self {
            Scalar::Rational(q) => RationalFunction::from_poly(Polynomial::constant(q.clone())),
            Scalar::Function(f) => (**f).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Function(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Function(_) => None,
        }
    }

    /// Names of the parameters this value depends on.
    pub fn parameters(&self) -> BTreeSet<String> {
        match self {
            Scalar::Rational(_) => BTreeSet::new(),
            Scalar::Function(f) => f
                .num
                .variables()
                .union(&f.den.variables())
                .map(|v| v.to_string())
                .collect(),
        }
    }

    /// The (monic) denominator polynomial; one for rationals.
    pub fn denominator(&self) -> Polynomial {
        match self {
            Scalar::Rational(_) => Polynomial::one(),
            Scalar::Function(f) => f.den.clone(),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a / b)),
            _ => Ok(Scalar::from_function(
                self.to_function().mul(&other.to_function().recip()?),
            )),
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        Scalar::one().checked_div(self)
    }

    /// Substitutes rational values for every parameter.
    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<Scalar> {
        match self {
            Scalar::Rational(_) => Ok(self.clone()),
            Scalar::Function(f) => {
                let num = f.num.eval(values).map_err(Error::MissingParameter)?;
                let den = f.den.eval(values).map_err(Error::MissingParameter)?;
                if den.is_zero() {
                    return Err(Error::DenominatorVanishes(format!(
                        "denominator {} of {} vanishes",
                        f.den, self
                    )));
                }
                Ok(Scalar::Rational(num / den))
            }
        }
    }

    /// Parses the textual scalar syntax shared by every file format.
    pub fn parse(text: &str) -> Result<Scalar> {
        Parser::new(text).parse_all()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Rational(q)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse(s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}", fmt_rat(q)),
            Scalar::Function(r) => {
                if r.den.is_one() {
                    write!(f, "{}", r.num)
                } else {
                    write!(f, "({})/({})", r.num, r.den)
                }
            }
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, o: &'a Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ if self.is_zero() => o.clone(),
            _ if o.is_zero() => self.clone(),
            _ => Scalar::from_function(self.to_function().add(&o.to_function())),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, o: &'a Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => self + &(-o),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, o: &'a Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ if self.is_zero() || o.is_zero() => Scalar::zero(),
            (Scalar::Rational(a), Scalar::Function(f)) | (Scalar::Function(f), Scalar::Rational(a)) => {
                if a.is_one() {
                    return Scalar::Function(f.clone());
                }
                Scalar::Function(Arc::new(RationalFunction {
                    num: f.num.scale(a),
                    den: f.den.clone(),
                }))
            }
            _ => Scalar::from_function(self.to_function().mul(&o.to_function())),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Function(f) => Scalar::Function(Arc::new(f.neg())),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, o: Scalar) -> Scalar {
                (&self).$method(&o)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, o: &'a Scalar) -> Scalar {
                (&self).$method(o)
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, o: Scalar) -> Scalar {
                self.$method(&o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (&mut *self, o) {
            *a += b;
            return;
        }
        *self = &*self + o;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (&mut *self, o) {
            *a -= b;
            return;
        }
        *self = &*self - o;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self -= &o;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// Recursive-descent parser for `+ - * / ^`, parentheses, integers and
/// identifiers `[A-Za-z][A-Za-z0-9_]*`.
struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in scalar {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Scalar> {
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        let v = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d).map_err(|_| self.err("division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = self.src[start..self.pos]
                .parse()
                .map_err(|_| self.err("expected a non-negative integer exponent"))?;
            let mut out = Scalar::one();
            for _ in 0..e {
                out = out * &base;
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = self.src[start..self.pos].parse().map_err(|_| self.err("bad integer"))?;
                Ok(Scalar::Rational(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Scalar::param(&self.src[start..self.pos]))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    fn assign(pairs: &[(&str, i64)]) -> ParameterAssignment {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), BigRational::from_integer((*v).into())))
            .collect()
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(s("1/2") + s("1/3"), s("5/6"));
        assert_eq!(s("1/2 + 1/3"), Scalar::frac(5, 6));
        assert_eq!(s("-(3 - 5) * 2"), Scalar::int(4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Scalar::parse("1/0"), Err(Error::Parse(_))));
        assert!(matches!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            s("r1").checked_div(&(s("r1") - s("r1"))),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn cancellation() {
        assert_eq!(s("(s1*s2)/s1"), s("s2"));
        assert_eq!(s("(s1^2 - s2^2)/(s1 + s2)"), s("s1 - s2"));
        assert!(s("r4*s1 - s1*r4").is_zero());
        assert!(s("(s1*s2)/s1 - s2").is_rational());
        assert_eq!(s("s1/s1"), Scalar::one());
    }

    #[test]
    fn instantiation() {
        assert_eq!(
            s("s2*s3/s1")
                .instantiate(&assign(&[("s1", 1), ("s2", 2), ("s3", 3)]))
                .unwrap(),
            Scalar::int(6)
        );
        assert_eq!(s("s1").instantiate(&assign(&[("s1", 5)])).unwrap(), Scalar::int(5));
        assert!(matches!(
            s("s2*s3/s1").instantiate(&assign(&[("s1", 0), ("s2", 1), ("s3", 1)])),
            Err(Error::DenominatorVanishes(_))
        ));
        assert!(matches!(
            s("s2*s3/s1").instantiate(&assign(&[("s1", 2)])),
            Err(Error::MissingParameter(_))
        ));
        assert_eq!(s("r4*s1 - s1*r4").instantiate(&assign(&[])).unwrap(), Scalar::zero());
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "5/6",
            "-3",
            "s1",
            "-r1*r4^2 - r1*r4",
            "(s2*s3)/(s1)",
            "(r2 + 1/2)/(s1^2*r2 - 3)",
        ] {
            let v = s(text);
            assert_eq!(s(&v.to_string()), v, "{text} -> {v}");
        }
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "1 +", "(1", "2 3", "s1 ^ x", "#"] {
            assert!(Scalar::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn parameters_are_collected() {
        let names: Vec<String> = s("r2/s2 - r1/s1").parameters().into_iter().collect();
        assert_eq!(names, ["r1", "r2", "s1", "s2"]);
    }
}
