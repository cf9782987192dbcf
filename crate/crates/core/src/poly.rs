//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::Matrix;

/// Coefficients lowest degree first, trailing zeros stripped; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldDescriptor,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: FieldDescriptor, mut coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Polynomial::new(field, vec![field.one()])
    }

    /// The monic linear polynomial `t - root`.
    pub fn linear(root: &Scalar) -> Self {
        let f = root.field();
        Polynomial::new(f, vec![-root, f.one()])
    }

    /// `prod (t - r)` over the given roots, in order.
    pub fn from_roots<'a>(
        field: FieldDescriptor,
        roots: impl IntoIterator<Item = &'a Scalar>,
    ) -> Self {
        roots.into_iter().fold(Polynomial::one(field), |acc, r| {
            &acc * &Polynomial::linear(r)
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let id = Matrix::identity(self.field, m.dim());
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zero(self.field, m.dim()), |acc, c| {
                &(&acc * m) + &id.scale(c)
            })
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Quotient and remainder; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let db = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.coeffs[db]
            .inverse()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return (Polynomial::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * bj);
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (
            Polynomial::new(self.field, quot),
            Polynomial::new(self.field, rem),
        )
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inverse().expect("nonzero")),
        }
    }

    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            self.field,
            (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            self.field,
            (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect(),
        )
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(self.field, out)
    }
}

impl fmt::Display for Polynomial {
    /// Renders in the variable `t`, highest degree first, e.g. `t^3 - 6*t^2 + 11*t - 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = text.contains(' ') || text.contains('z');
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text),
            };
            let mag = if compound { format!("({mag})") } else { mag };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}
