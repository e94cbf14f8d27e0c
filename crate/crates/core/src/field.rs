//! Arithmetic in a single finite field `F_p[z]/(f)`.
//!
//! Elements are stored by their integer code `sum c_i p^i`, where `c_i` is the
//! coordinate of `z^i` in the power basis of the modulus root. The same code is
//! the I/O encoding used by the CLI. Fields are limited to 2^24 elements.

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

pub const MAX_FIELD_SIZE: u64 = 1 << 24;
const MAX_DEGREE: usize = 24;

type Digits = [u32; MAX_DEGREE];

/// A field element, identified by its integer code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a raw code without range checking; see [`Field::element`].
    pub const fn from_code(code: u32) -> Elem {
        Elem(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for Elem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite field of `p^degree` elements. Prime fields carry no modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u32,
    degree: usize,
    // monic, low degree first, length degree + 1
    modulus: Option<Vec<u32>>,
    size: u32,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge { p, degree: 1 });
        }
        Ok(Field {
            p: p as u32,
            degree: 1,
            modulus: None,
            size: p as u32,
        })
    }

    /// `F_p[z]/(modulus)`; the modulus is checked to be monic and irreducible.
    /// A degree-one modulus yields the prime field itself.
    pub fn extension(p: u64, modulus: &[u32]) -> Result<Field> {
        let base = Field::prime(p)?;
        if modulus.len() < 2
            || *modulus.last().unwrap() != 1
            || modulus.iter().any(|&c| c as u64 >= p)
        {
            return Err(Error::BadModulus);
        }
        let degree = modulus.len() - 1;
        if degree == 1 {
            return Ok(base);
        }
        let size = arith::checked_pow(p, degree as u64)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge {
                p,
                degree: degree as u64,
            })?;
        if !is_irreducible(&base, modulus) {
            return Err(Error::ReducibleModulus(p));
        }
        Ok(Field {
            p: p as u32,
            degree,
            modulus: Some(modulus.to_vec()),
            size: size as u32,
        })
    }

    /// The extension of degree `degree` whose modulus is the first monic
    /// irreducible polynomial when the lower coefficients are scanned in
    /// increasing code order.
    pub fn with_degree(p: u64, degree: usize) -> Result<Field> {
        let base = Field::prime(p)?;
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if degree == 1 {
            return Ok(base);
        }
        let count = arith::checked_pow(p, degree as u64)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge {
                p,
                degree: degree as u64,
            })?;
        for code in 0..count {
            if code % p == 0 {
                // divisible by z
                continue;
            }
            let mut modulus = base_digits(code, p, degree);
            modulus.push(1);
            if is_irreducible(&base, &modulus) {
                return Field::extension(p, &modulus);
            }
        }
        Err(Error::InternalSearchExhausted("irreducible modulus"))
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> u64 {
        self.size as u64
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    pub fn element(&self, code: u64) -> Result<Elem> {
        if code >= self.size as u64 {
            return Err(Error::InvalidElement {
                code,
                size: self.size as u64,
            });
        }
        Ok(Elem(code as u32))
    }

    /// Image of the integer `c` in the prime subfield.
    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size).map(Elem)
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.size
    }

    pub fn coords(&self, a: Elem) -> Vec<u32> {
        self.digits(a)[..self.degree].to_vec()
    }

    pub fn from_coords(&self, coords: &[u32]) -> Elem {
        let mut d = [0u32; MAX_DEGREE];
        for (slot, &c) in d.iter_mut().zip(coords) {
            *slot = c % self.p;
        }
        self.undigits(&d)
    }

    fn digits(&self, a: Elem) -> Digits {
        let mut d = [0u32; MAX_DEGREE];
        let mut v = a.0;
        if self.p == 2 {
            for (i, slot) in d.iter_mut().enumerate().take(self.degree) {
                *slot = (v >> i) & 1;
            }
        } else {
            for slot in d.iter_mut().take(self.degree) {
                *slot = v % self.p;
                v /= self.p;
            }
        }
        d
    }

    fn undigits(&self, d: &Digits) -> Elem {
        let mut v = 0u32;
        for &c in d[..self.degree].iter().rev() {
            v = v * self.p + c;
        }
        Elem(v)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            return Elem((a.0 + b.0) % self.p);
        }
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, y) = (self.digits(a), self.digits(b));
        for i in 0..self.degree {
            x[i] = (x[i] + y[i]) % self.p;
        }
        self.undigits(&x)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        if self.degree == 1 {
            return Elem((self.p - a.0) % self.p);
        }
        let mut x = self.digits(a);
        for c in x.iter_mut().take(self.degree) {
            *c = (self.p - *c) % self.p;
        }
        self.undigits(&x)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        if self.degree == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let modulus = self
            .modulus
            .as_ref()
            .expect("extension field has a modulus");
        if self.p == 2 {
            return Elem(self.mul_binary(a.0, b.0, modulus));
        }
        let p = self.p as u64;
        let d = self.degree;
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] += x[i] as u64 * y[j] as u64;
            }
        }
        for c in prod.iter_mut().take(2 * d - 1) {
            *c %= p;
        }
        for top in (d..2 * d - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (j, &mj) in modulus.iter().take(d).enumerate() {
                let s = top - d + j;
                prod[s] = (prod[s] + c * (p - mj as u64)) % p;
            }
        }
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..d {
            out[i] = prod[i] as u32;
        }
        self.undigits(&out)
    }

    fn mul_binary(&self, a: u32, b: u32, modulus: &[u32]) -> u32 {
        let d = self.degree;
        let mut prod: u64 = 0;
        let mut bb = b;
        let mut shift = 0;
        while bb != 0 {
            if bb & 1 == 1 {
                prod ^= (a as u64) << shift;
            }
            bb >>= 1;
            shift += 1;
        }
        let mut red: u64 = 0;
        for (i, &c) in modulus.iter().enumerate() {
            red |= (c as u64) << i;
        }
        for top in (d..2 * d - 1).rev() {
            if prod >> top & 1 == 1 {
                prod ^= red << (top - d);
            }
        }
        prod as u32
    }

    /// `a^exp`; the exponent is reduced modulo `size - 1` for nonzero `a`.
    pub fn pow(&self, a: Elem, exp: u64) -> Elem {
        if exp == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let mut e = exp % (self.size as u64 - 1);
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.size as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.size as u64 - 1;
        for r in arith::prime_divisors(ord) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == Elem::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// First element, in code order, that generates the multiplicative group.
    pub fn primitive_element(&self) -> Result<Elem> {
        let group = self.size as u64 - 1;
        let primes = arith::prime_divisors(group);
        (1..self.size)
            .map(Elem)
            .find(|&g| primes.iter().all(|&r| self.pow(g, group / r) != Elem::ONE))
            .ok_or(Error::InternalSearchExhausted("primitive element"))
    }
}

fn base_digits(mut code: u64, p: u64, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push((code % p) as u32);
        code /= p;
    }
    out
}

/// Ben-Or test: `f` of degree `d` is irreducible iff
/// `gcd(x^(p^i) - x, f) = 1` for every `1 <= i <= d/2`.
fn is_irreducible(base: &Field, modulus: &[u32]) -> bool {
    let ring = PolyRing::new(base);
    let f = Poly::from_coeffs(modulus.iter().map(|&c| Elem(c)).collect());
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    let x = Poly::x();
    let mut power = x.clone();
    for _ in 0..d / 2 {
        power = ring.pow_mod(&power, base.characteristic(), &f);
        let diff = ring.sub(&power, &x);
        match ring.gcd(&diff, &f) {
            Ok(g) if g.degree() == Some(0) => {}
            _ => return false,
        }
    }
    true
}
