//! Exact scalar fields: `Q`, `Q(zeta_n)` and `F_p`.
//!
//! A [`FieldDescriptor`] names the field and is a small `Copy` value; a
//! [`Scalar`] pairs a descriptor with a canonical value, so equality of
//! scalars is structural equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use thiserror::Error;

use crate::cyclotomic::{self, RatPoly};

/// Largest admissible prime modulus (products of residues must fit in `u64`).
pub const MAX_PRIME: u64 = (1 << 32) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("scalars from different fields: {0} and {1}")]
    MixedFields(FieldDescriptor, FieldDescriptor),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{field} has no primitive root of unity of order {n}")]
    NoSuchRoot { field: FieldDescriptor, n: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported word size")]
    PrimeTooLarge(u64),
    #[error("cyclotomic order must be at least 1")]
    ZeroCyclotomicOrder,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Which field a descriptor denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Cyclotomic(u32),
    Prime(u64),
}

/// A validated field descriptor. Construct through [`FieldDescriptor::RATIONAL`],
/// [`FieldDescriptor::cyclotomic`] or [`FieldDescriptor::prime`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldDescriptor(FieldKind);

/// Deterministic trial division; `p` is desk scale.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

impl FieldDescriptor {
    pub const RATIONAL: FieldDescriptor = FieldDescriptor(FieldKind::Rational);

    pub fn cyclotomic(n: u32) -> Result<Self, FieldError> {
        if n == 0 {
            return Err(FieldError::ZeroCyclotomicOrder);
        }
        Ok(FieldDescriptor(FieldKind::Cyclotomic(n)))
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p > MAX_PRIME {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldDescriptor(FieldKind::Prime(p)))
    }

    pub fn kind(&self) -> FieldKind {
        self.0
    }

    /// 0 for `Q` and `Q(zeta_n)`, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self.0 {
            FieldKind::Prime(p) => p,
            _ => 0,
        }
    }

    /// Number of elements, or `None` for infinite fields.
    pub fn order(&self) -> Option<u64> {
        match self.0 {
            FieldKind::Prime(p) => Some(p),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        let value = match self.0 {
            FieldKind::Rational => Value::Rational(BigRational::zero()),
            FieldKind::Cyclotomic(_) => Value::Cyclotomic(Vec::new()),
            FieldKind::Prime(_) => Value::Prime(0),
        };
        Scalar {
            field: *self,
            value,
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, x: i64) -> Scalar {
        self.integer(BigInt::from(x))
    }

    pub fn integer(&self, x: BigInt) -> Scalar {
        self.rational(BigRational::from_integer(x))
            .expect("integers embed in every field")
    }

    /// Image of a rational number; fails in `F_p` when `p` divides the denominator.
    pub fn rational(&self, x: BigRational) -> Result<Scalar, FieldError> {
        let value = match self.0 {
            FieldKind::Rational => Value::Rational(x),
            FieldKind::Cyclotomic(n) => {
                let mut v = vec![x];
                cyclotomic::trim(&mut v);
                Value::Cyclotomic(cyclotomic::reduce(v, &cyclotomic::phi_coeffs(n)))
            }
            FieldKind::Prime(p) => {
                let num = bigint_mod(x.numer(), p);
                let den = bigint_mod(x.denom(), p);
                if den == 0 {
                    return Err(FieldError::DivisionByZero);
                }
                Value::Prime(num * pow_mod(den, p - 2, p) % p)
            }
        };
        Ok(Scalar {
            field: *self,
            value,
        })
    }

    /// The class of `z` in `Q[z]/(Phi_n)`; `None` for other fields.
    pub fn generator(&self) -> Option<Scalar> {
        match self.0 {
            FieldKind::Cyclotomic(n) => {
                let v = vec![BigRational::zero(), BigRational::one()];
                Some(Scalar {
                    field: *self,
                    value: Value::Cyclotomic(cyclotomic::reduce(v, &cyclotomic::phi_coeffs(n))),
                })
            }
            _ => None,
        }
    }

    /// Whether the field contains a primitive `n`-th root of unity (and hence
    /// `n` distinct `n`-th roots of unity).
    pub fn has_primitive_root(&self, n: u64) -> bool {
        if n == 0 {
            return false;
        }
        match self.0 {
            FieldKind::Rational => n <= 2,
            FieldKind::Cyclotomic(m) => (m as u64).lcm(&2).is_multiple_of(n),
            FieldKind::Prime(p) => (p - 1) % n == 0,
        }
    }

    /// A primitive `n`-th root of unity.
    ///
    /// In `Q(zeta_m)` this is a power of `z` (or of `-z` when `m` is odd and
    /// `n` divides `2m`); in `F_p` it is the smallest residue of exact order `n`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Scalar, FieldError> {
        if !self.has_primitive_root(n) {
            return Err(FieldError::NoSuchRoot { field: *self, n });
        }
        match self.0 {
            FieldKind::Rational => Ok(if n == 1 { self.one() } else { self.int(-1) }),
            FieldKind::Cyclotomic(m) => {
                let z = self.generator().expect("cyclotomic");
                let m = m as u64;
                if m.is_multiple_of(n) {
                    Ok(z.pow(m / n))
                } else {
                    // m odd: -z has order 2m
                    Ok((-z).pow(2 * m / n))
                }
            }
            FieldKind::Prime(p) => {
                let primes = prime_factors(n);
                let has_order_n = |y: u64| primes.iter().all(|q| pow_mod(y, n / q, p) != 1);
                let seed = (1..p)
                    .map(|x| pow_mod(x, (p - 1) / n, p))
                    .find(|&y| has_order_n(y))
                    .expect("F_p^* is cyclic");
                let smallest = (1..=n)
                    .filter(|k| num_integer::gcd(*k, n) == 1)
                    .map(|k| pow_mod(seed, k, p))
                    .min()
                    .expect("n >= 1");
                Ok(Scalar {
                    field: *self,
                    value: Value::Prime(smallest),
                })
            }
        }
    }

    /// Parses a scalar in this field.
    ///
    /// Accepted forms: integers and fractions (`-3/2`, `7`) in every field;
    /// sums of terms `c*z^k`, `c z`, `z^k` in cyclotomic fields. Whitespace is
    /// ignored.
    pub fn parse_scalar(&self, input: &str) -> Result<Scalar, FieldError> {
        let err = |reason: &str| FieldError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let text: String = input
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if text.is_empty() {
            return Err(err("empty scalar"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = text.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'^' | b'/' | b'*')
            {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);

        let mut poly: RatPoly = Vec::new();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coef_text, exponent) = match body.find('z') {
                None => (body, 0usize),
                Some(pos) => {
                    if !matches!(self.0, FieldKind::Cyclotomic(_)) {
                        return Err(err("variable z is only valid in cyclotomic fields"));
                    }
                    let coef = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                    let tail = &body[pos + 1..];
                    let exponent = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(|| err("malformed exponent"))?
                    };
                    if coef.is_empty() {
                        ("1", exponent)
                    } else {
                        (coef, exponent)
                    }
                }
            };
            let mut coef = parse_fraction(coef_text).ok_or_else(|| err("malformed number"))?;
            if negative {
                coef = -coef;
            }
            let slot = match self.0 {
                FieldKind::Cyclotomic(n) => exponent % n as usize,
                _ => 0,
            };
            if poly.len() <= slot {
                poly.resize(slot + 1, BigRational::zero());
            }
            poly[slot] += coef;
        }
        cyclotomic::trim(&mut poly);

        match self.0 {
            FieldKind::Cyclotomic(n) => Ok(Scalar {
                field: *self,
                value: Value::Cyclotomic(cyclotomic::reduce(poly, &cyclotomic::phi_coeffs(n))),
            }),
            _ => {
                let q = poly.into_iter().next().unwrap_or_else(BigRational::zero);
                self.rational(q)
                    .map_err(|_| err("denominator vanishes in this field"))
            }
        }
    }
}

fn parse_fraction(text: &str) -> Option<BigRational> {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    match text.split_once('/') {
        None => {
            if !digits(text) {
                return None;
            }
            Some(BigRational::from_integer(text.parse().ok()?))
        }
        Some((n, d)) => {
            if !digits(n) || !digits(d) {
                return None;
            }
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
    }
}

impl fmt::Display for FieldDescriptor {
    /// Renders the document header form: `rational`, `cyclotomic 5`, `gf 7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Cyclotomic(n) => write!(f, "cyclotomic {n}"),
            FieldKind::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = FieldError;

    /// Accepts `rational`, `cyclotomic N` / `cyclotomic:N`, `gf P` / `gf:P`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FieldError::Parse {
            input: s.to_string(),
            reason: "expected `rational`, `cyclotomic N` or `gf P`".to_string(),
        };
        let mut parts = s
            .split(|c: char| c.is_whitespace() || c == ':')
            .filter(|t| !t.is_empty());
        let head = parts.next().ok_or_else(err)?;
        let arg = parts.next();
        if parts.next().is_some() {
            return Err(err());
        }
        match (head.to_ascii_lowercase().as_str(), arg) {
            ("rational" | "q", None) => Ok(Self::RATIONAL),
            ("cyclotomic", Some(n)) => Self::cyclotomic(n.parse().map_err(|_| err())?),
            ("gf" | "prime", Some(p)) => Self::prime(p.parse().map_err(|_| err())?),
            _ => Err(err()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    /// Coefficients in `z`, reduced modulo `Phi_n`, trailing zeros stripped.
    Cyclotomic(RatPoly),
    Prime(u64),
}

/// An exact field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldDescriptor,
    value: Value,
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_zero(),
            Value::Cyclotomic(v) => v.is_empty(),
            Value::Prime(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_one(),
            Value::Cyclotomic(v) => v.len() == 1 && v[0].is_one(),
            Value::Prime(r) => *r == 1,
        }
    }

    /// The rational value, when the scalar lies in the prime subfield `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.value {
            Value::Rational(q) => Some(q.clone()),
            Value::Cyclotomic(v) if v.len() <= 1 => {
                Some(v.first().cloned().unwrap_or_else(BigRational::zero))
            }
            _ => None,
        }
    }

    /// The residue in `[0, p)` for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self.value {
            Value::Prime(r) => Some(r),
            _ => None,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields(self.field, other.field))
        }
    }

    fn with(&self, value: Value) -> Scalar {
        Scalar {
            field: self.field,
            value,
        }
    }

    fn modulus(&self) -> u64 {
        match self.field.0 {
            FieldKind::Prime(p) => p,
            _ => unreachable!("modulus of a characteristic-zero field"),
        }
    }

    /// `sum x_k y_k`, normalizing only once at the end. All terms must lie
    /// in `field`.
    pub(crate) fn dot<'a>(
        field: FieldDescriptor,
        pairs: impl Iterator<Item = (&'a Scalar, &'a Scalar)>,
    ) -> Scalar {
        let value = match field.0 {
            FieldKind::Prime(p) => {
                let sum = pairs.fold(0u128, |acc, (x, y)| match (&x.value, &y.value) {
                    (Value::Prime(a), Value::Prime(b)) => {
                        (acc + u128::from(a * b % p)) % u128::from(p)
                    }
                    _ => unreachable!("descriptor and value disagree"),
                });
                Value::Prime(sum as u64)
            }
            FieldKind::Rational => {
                let (mut num, mut den) = (BigInt::zero(), BigInt::one());
                for (x, y) in pairs {
                    let (Value::Rational(a), Value::Rational(b)) = (&x.value, &y.value) else {
                        unreachable!("descriptor and value disagree")
                    };
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let d = a.denom() * b.denom();
                    let l = den.lcm(&d);
                    num = num * (&l / &den) + a.numer() * b.numer() * (&l / &d);
                    den = l;
                }
                Value::Rational(BigRational::new(num, den))
            }
            FieldKind::Cyclotomic(n) => {
                let phi = cyclotomic::phi_coeffs(n);
                let deg = phi.len() - 1;
                let mut acc = vec![BigInt::zero(); 2 * deg];
                let mut den = BigInt::one();
                for (x, y) in pairs {
                    let (Value::Cyclotomic(a), Value::Cyclotomic(b)) = (&x.value, &y.value) else {
                        unreachable!("descriptor and value disagree")
                    };
                    if a.is_empty() || b.is_empty() {
                        continue;
                    }
                    let (na, da) = cyclotomic::integral(a);
                    let (nb, db) = cyclotomic::integral(b);
                    let d = da * db;
                    let l = den.lcm(&d);
                    if l != den {
                        let up = &l / &den;
                        acc.iter_mut().for_each(|c| *c *= &up);
                    }
                    let mut term = vec![BigInt::zero(); na.len() + nb.len() - 1];
                    cyclotomic::add_int_product(&mut term, &na, &nb);
                    let scale = &l / &d;
                    for (c, t) in acc.iter_mut().zip(term) {
                        *c += t * &scale;
                    }
                    den = l;
                }
                Value::Cyclotomic(cyclotomic::from_integral(
                    cyclotomic::reduce_int(acc, &phi),
                    &den,
                ))
            }
        };
        Scalar { field, value }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => self.with(Value::Rational(a + b)),
            (Value::Cyclotomic(a), Value::Cyclotomic(b)) => {
                self.with(Value::Cyclotomic(cyclotomic::add(a, b)))
            }
            (Value::Prime(a), Value::Prime(b)) => self.with(Value::Prime((a + b) % self.modulus())),
            _ => unreachable!("descriptor and value disagree"),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => self.with(Value::Rational(a - b)),
            (Value::Cyclotomic(a), Value::Cyclotomic(b)) => {
                self.with(Value::Cyclotomic(cyclotomic::sub(a, b)))
            }
            (Value::Prime(a), Value::Prime(b)) => {
                let p = self.modulus();
                self.with(Value::Prime((a + p - b) % p))
            }
            _ => unreachable!("descriptor and value disagree"),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        Ok(match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => self.with(Value::Rational(a * b)),
            (Value::Cyclotomic(a), Value::Cyclotomic(b)) => {
                let FieldKind::Cyclotomic(n) = self.field.0 else {
                    unreachable!()
                };
                self.with(Value::Cyclotomic(cyclotomic::mul_mod(
                    a,
                    b,
                    &cyclotomic::phi_coeffs(n),
                )))
            }
            (Value::Prime(a), Value::Prime(b)) => self.with(Value::Prime(a * b % self.modulus())),
            _ => unreachable!("descriptor and value disagree"),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.same_field(other)?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.value {
            Value::Rational(q) => self.with(Value::Rational(q.recip())),
            Value::Cyclotomic(v) => {
                let FieldKind::Cyclotomic(n) = self.field.0 else {
                    unreachable!()
                };
                self.with(Value::Cyclotomic(cyclotomic::inverse_mod(
                    v,
                    &cyclotomic::phi_coeffs(n),
                )))
            }
            Value::Prime(r) => {
                let p = self.modulus();
                self.with(Value::Prime(pow_mod(*r, p - 2, p)))
            }
        })
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Display form without spaces, safe to embed in whitespace-separated rows.
    pub fn to_compact_string(&self) -> String {
        self.to_string()
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(q) => write!(f, "{q}"),
            Value::Prime(r) => write!(f, "{r}"),
            Value::Cyclotomic(v) => {
                if v.is_empty() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (k, c) in v.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let magnitude = c.abs();
                    if first {
                        if c.is_negative() {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
                    }
                    first = false;
                    match (k, magnitude.is_one()) {
                        (0, _) => write!(f, "{magnitude}")?,
                        (1, true) => write!(f, "z")?,
                        (1, false) => write!(f, "{magnitude}*z")?,
                        (_, true) => write!(f, "z^{k}")?,
                        (_, false) => write!(f, "{magnitude}*z^{k}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
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
    };
}

// Mixed-field operands and zero divisors panic here; use the `checked_*`
// methods where the inputs are not already validated.
forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.value {
            Value::Rational(q) => self.with(Value::Rational(-q)),
            Value::Cyclotomic(v) => self.with(Value::Cyclotomic(cyclotomic::neg(v))),
            Value::Prime(r) => {
                let p = self.modulus();
                self.with(Value::Prime((p - r) % p))
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
