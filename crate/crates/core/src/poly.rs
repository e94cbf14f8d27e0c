//! Dense univariate polynomials over a [`Field`].
//!
//! A [`Poly`] is a plain coefficient vector (low degree first, no trailing
//! zeros); arithmetic goes through a [`PolyRing`] that borrows the field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly {
            coeffs: vec![Elem::ONE],
        }
    }

    pub fn x() -> Poly {
        Poly {
            coeffs: vec![Elem::ZERO, Elem::ONE],
        }
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Elem, degree: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_codes(codes: &[u32]) -> Poly {
        Poly::from_coeffs(codes.iter().map(|&c| Elem::from_code(c)).collect())
    }

    /// Parses the comma-separated code list `"1,1,0,1"` (= 1 + x + x^3).
    pub fn parse(text: &str, field: &Field) -> Result<Poly> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = text
            .split(',')
            .map(|tok| {
                let code: u64 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {:?}", tok.trim())))?;
                field.element(code)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    /// Comma-separated code list, the inverse of [`Poly::parse`].
    pub fn to_code_string(&self) -> String {
        self.codes()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn constant_term(&self) -> Elem {
        self.coeffs.first().copied().unwrap_or(Elem::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Elem::ONE
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if *c == Elem::ONE && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial arithmetic over a borrowed field.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'a> {
    field: &'a Field,
}

impl<'a> PolyRing<'a> {
    pub fn new(field: &'a Field) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'a Field {
        self.field
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(&self, n: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[0] = self.field.neg(Elem::ONE);
        coeffs[n] = Elem::ONE;
        Poly::from_coeffs(coeffs)
    }

    /// `x - a`.
    pub fn linear(&self, a: Elem) -> Poly {
        Poly::from_coeffs(vec![self.field.neg(a), Elem::ONE])
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.field.add(a.coeff(i), b.coeff(i)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.field.sub(a.coeff(i), b.coeff(i)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: Elem, a: &Poly) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&x| self.field.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(out[i + j], self.field.mul(x, y));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn product<'p>(&self, factors: impl IntoIterator<Item = &'p Poly>) -> Poly {
        factors
            .into_iter()
            .fold(Poly::one(), |acc, f| self.mul(&acc, f))
    }

    /// `(quot, rem)` with `a = quot * b + rem` and `deg rem < deg b`.
    pub fn divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.field.inv(b.leading())?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let k = self.field.mul(c, lead_inv);
            quot[top - db] = k;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                let s = top - db + j;
                rem[s] = self.field.sub(rem[s], self.field.mul(k, bj));
            }
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.divmod(a, b)?.1)
    }

    /// True iff `d` divides `a`. The zero polynomial divides only itself.
    pub fn divides(&self, d: &Poly, a: &Poly) -> bool {
        if d.is_zero() {
            return a.is_zero();
        }
        self.rem(a, d).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Exact quotient `a / b`, failing when `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(a, b)?;
        if !r.is_zero() {
            return Err(Error::NotAGenerator {
                remainder: r.codes(),
            });
        }
        Ok(q)
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let inv = self
            .field
            .inv(a.leading())
            .expect("nonzero leading coefficient");
        self.scale(inv, a)
    }

    pub fn gcd(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(self.monic(&x))
    }

    /// Monic least common multiple; `lcm(a, 0) = 0`.
    pub fn lcm(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        if a.is_zero() || b.is_zero() {
            return Ok(Poly::zero());
        }
        let g = self.gcd(a, b)?;
        let q = self.divmod(a, &g)?.0;
        Ok(self.monic(&self.mul(&q, b)))
    }

    /// `f*(x) = f(0)^{-1} x^{deg f} f(1/x)`.
    pub fn reciprocal(&self, f: &Poly) -> Result<Poly> {
        let c0 = f.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = self.field.inv(c0)?;
        let rev: Vec<Elem> = f
            .coeffs
            .iter()
            .rev()
            .map(|&c| self.field.mul(inv, c))
            .collect();
        Ok(Poly::from_coeffs(rev))
    }

    pub fn is_self_reciprocal(&self, f: &Poly) -> Result<bool> {
        Ok(self.reciprocal(f)? == *f)
    }

    /// Horner evaluation.
    pub fn eval(&self, f: &Poly, a: Elem) -> Elem {
        f.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| {
            self.field.add(self.field.mul(acc, a), c)
        })
    }

    /// `a^exp mod m`.
    pub fn pow_mod(&self, a: &Poly, mut exp: u64, m: &Poly) -> Poly {
        let mut base = self.rem(a, m).expect("nonzero modulus");
        let mut acc = self.rem(&Poly::one(), m).expect("nonzero modulus");
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m).unwrap();
            }
            base = self.rem(&self.mul(&base, &base), m).unwrap();
            exp >>= 1;
        }
        acc
    }
}
