//! The tower `F_p ⊂ F_q ⊂ F_{q^m}` used to factor `x^n - 1` over `F_q`.
//!
//! `F_{q^m}` is realized as a degree `e·m` extension of `F_p`. The copy of
//! `F_q` inside it is generated by `subfield_gen`, and `F_q` itself is the
//! standalone field `F_p[z]/(minpoly of subfield_gen)`, so codes over `F_q`
//! use small element codes while roots of unity live in the big field.

use std::collections::HashMap;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Elem, Field, MAX_FIELD_SIZE};
use crate::matrix::GfMatrix;
use crate::poly::{Poly, PolyRing};

#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u64,
    e: u32,
    m: u64,
    n: usize,
    q: u64,
    prime: Field,
    small: Field,
    big: Field,
    subfield_gen: Elem,
    primitive: Elem,
    alpha: Elem,
    // small code -> big element
    embedding: Vec<Elem>,
    coercion: HashMap<Elem, Elem>,
}

impl FieldTower {
    /// Builds the tower for `q = p^e` and a length `n` coprime to `q`, with
    /// `m = ord_n(q)` and a primitive `n`-th root of unity `alpha`.
    pub fn build(p: u64, e: u32, n: usize) -> Result<FieldTower> {
        let prime = Field::prime(p)?;
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let q = arith::checked_pow(p, e as u64)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge {
                p,
                degree: e as u64,
            })?;
        if arith::gcd(n as u64, q) != 1 {
            return Err(Error::NotCoprime { n: n as u64, q });
        }
        let m = arith::multiplicative_order(q, n as u64);
        let big_degree = e as u64 * m;
        let big_size = arith::checked_pow(p, big_degree)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge {
                p,
                degree: big_degree,
            })?;
        let big = Field::with_degree(p, big_degree as usize)?;
        let primitive = big.primitive_element()?;
        let alpha = big.pow(primitive, (big_size - 1) / n as u64);

        let subfield_gen = if e == 1 {
            Elem::ONE
        } else {
            // F_q^* is the subgroup generated by primitive^((q^m - 1)/(q - 1))
            let h = big.pow(primitive, (big_size - 1) / (q - 1));
            let mut candidates: Vec<Elem> = (0..q - 1).map(|k| big.pow(h, k)).collect();
            candidates.sort();
            candidates
                .into_iter()
                .find(|&g| {
                    let rows = (0..e as u64).map(|i| to_prime_row(&big, big.pow(g, i)));
                    GfMatrix::from_rows(big.degree(), rows)
                        .unwrap()
                        .rank(&prime)
                        == e as usize
                })
                .ok_or(Error::InternalSearchExhausted("subfield generator"))?
        };

        let small = if e == 1 {
            prime.clone()
        } else {
            let ring = PolyRing::new(&big);
            let conjugates: Vec<Poly> = (0..e as u64)
                .map(|i| ring.linear(big.pow(subfield_gen, p.pow(i as u32))))
                .collect();
            let minpoly = ring.product(&conjugates);
            let codes: Vec<u32> = minpoly.codes();
            if codes.iter().any(|&c| c as u64 >= p) {
                return Err(Error::InternalSearchExhausted(
                    "subfield generator minimal polynomial",
                ));
            }
            Field::extension(p, &codes)?
        };

        let gen_powers: Vec<Elem> = (0..e as u64).map(|i| big.pow(subfield_gen, i)).collect();
        let embedding: Vec<Elem> = small
            .elements()
            .map(|a| {
                small
                    .coords(a)
                    .iter()
                    .zip(&gen_powers)
                    .fold(Elem::ZERO, |acc, (&c, &g)| {
                        big.add(acc, big.mul(big.from_int(c as i64), g))
                    })
            })
            .collect();
        let coercion = embedding
            .iter()
            .enumerate()
            .map(|(code, &b)| (b, Elem::from_code(code as u32)))
            .collect();

        Ok(FieldTower {
            p,
            e,
            m,
            n,
            q,
            prime,
            small,
            big,
            subfield_gen,
            primitive,
            alpha,
            embedding,
            coercion,
        })
    }

    /// Same as [`FieldTower::build`] with `q` given as a prime power.
    pub fn for_q(q: u64, n: usize) -> Result<FieldTower> {
        let (p, e) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        FieldTower::build(p, e, n)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `F_{q^m}`.
    pub fn big(&self) -> &Field {
        &self.big
    }

    /// `F_q` as a standalone field; code coefficients live here.
    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn prime_field(&self) -> &Field {
        &self.prime
    }

    pub fn subfield_gen(&self) -> Elem {
        self.subfield_gen
    }

    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn alpha_pow(&self, i: usize) -> Elem {
        self.big.pow(self.alpha, (i % self.n) as u64)
    }

    /// True when `n = q^m - 1`, the setting of trace representations.
    pub fn is_primitive_length(&self) -> bool {
        self.n as u64 + 1 == self.q.pow(self.m as u32)
    }

    /// `a^(q^k)`.
    pub fn frobenius(&self, a: Elem, k: u64) -> Elem {
        let k = k % self.m;
        self.big.pow(a, self.q.pow(k as u32))
    }

    fn check_divisor(&self, k: u64) -> Result<()> {
        if k == 0 || !self.m.is_multiple_of(k) {
            return Err(Error::NotADivisor { k, m: self.m });
        }
        Ok(())
    }

    /// `Tr_{q^m -> q^k}(a) = sum_{i < m/k} a^(q^(k i))`.
    pub fn relative_trace(&self, a: Elem, k: u64) -> Result<Elem> {
        self.check_divisor(k)?;
        let mut acc = Elem::ZERO;
        let mut term = a;
        for _ in 0..self.m / k {
            acc = self.big.add(acc, term);
            term = self.frobenius(term, k);
        }
        Ok(acc)
    }

    /// `Tr_{q^m -> q}`.
    pub fn trace(&self, a: Elem) -> Elem {
        self.relative_trace(a, 1).expect("1 divides m")
    }

    pub fn is_in_subfield(&self, a: Elem, k: u64) -> Result<bool> {
        self.check_divisor(k)?;
        Ok(self.frobenius(a, k) == a)
    }

    /// Expresses an element of the `F_q` copy as an element of [`Self::small`].
    pub fn coerce_to_subfield(&self, a: Elem) -> Result<Elem> {
        self.coercion.get(&a).copied().ok_or(Error::NotInSubfield)
    }

    /// Inverse of [`Self::coerce_to_subfield`].
    pub fn embed(&self, a: Elem) -> Elem {
        self.embedding[a.code() as usize]
    }

    pub fn embed_poly(&self, f: &Poly) -> Poly {
        Poly::from_coeffs(f.coeffs().iter().map(|&c| self.embed(c)).collect())
    }

    /// Coerces every coefficient of a big-field polynomial into `F_q`.
    pub fn coerce_poly(&self, f: &Poly) -> Result<Poly> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|&c| self.coerce_to_subfield(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Evaluates a polynomial over `F_q` at a point of `F_{q^m}`.
    pub fn eval(&self, f: &Poly, a: Elem) -> Elem {
        f.coeffs().iter().rev().fold(Elem::ZERO, |acc, &c| {
            self.big.add(self.big.mul(acc, a), self.embed(c))
        })
    }

    /// True iff `{b, b^q, ..., b^(q^(m-1))}` is an `F_q`-basis of `F_{q^m}`.
    pub fn is_normal(&self, b: Elem) -> bool {
        if b.is_zero() {
            return false;
        }
        // F_q-independence of the orbit = F_p-independence of gamma^s * orbit
        let gen_powers: Vec<Elem> = (0..self.e as u64)
            .map(|s| self.big.pow(self.subfield_gen, s))
            .collect();
        let mut rows = Vec::with_capacity(self.big.degree());
        let mut conj = b;
        for _ in 0..self.m {
            for &g in &gen_powers {
                rows.push(to_prime_row(&self.big, self.big.mul(g, conj)));
            }
            conj = self.frobenius(conj, 1);
        }
        GfMatrix::from_rows(self.big.degree(), rows)
            .unwrap()
            .rank(&self.prime)
            == self.big.degree()
    }

    /// First normal element in code order.
    pub fn find_normal_element(&self) -> Elem {
        let beta = self
            .big
            .elements()
            .find(|&b| self.is_normal(b))
            .expect("normal elements exist in every finite extension");
        assert!(
            !self.trace(beta).is_zero(),
            "trace of a normal element is nonzero"
        );
        beta
    }

    /// Every normal element of `F_{q^m}` over `F_q`, in code order.
    pub fn normal_elements(&self) -> Vec<Elem> {
        self.big.elements().filter(|&b| self.is_normal(b)).collect()
    }
}

fn to_prime_row(big: &Field, a: Elem) -> Vec<Elem> {
    big.coords(a).into_iter().map(Elem::from_code).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let t = FieldTower::build(2, 1, 7).unwrap();
        assert_eq!((t.m(), t.big().size()), (3, 8));
        assert_eq!(t.big().order(t.alpha()).unwrap(), 7);

        let t = FieldTower::build(3, 1, 8).unwrap();
        assert_eq!((t.m(), t.big().size()), (2, 9));
        assert_eq!(t.big().order(t.alpha()).unwrap(), 8);

        let t = FieldTower::build(2, 2, 3).unwrap();
        assert_eq!((t.m(), t.q(), t.big().size()), (1, 4, 4));
        assert_eq!(t.big().order(t.alpha()).unwrap(), 3);
    }

    #[test]
    fn build_errors() {
        assert_eq!(FieldTower::build(4, 1, 3).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FieldTower::build(2, 1, 6).unwrap_err(),
            Error::NotCoprime { n: 6, q: 2 }
        );
        assert_eq!(
            FieldTower::build(3, 2, 6).unwrap_err(),
            Error::NotCoprime { n: 6, q: 9 }
        );
        assert_eq!(FieldTower::build(2, 1, 0).unwrap_err(), Error::ZeroLength);
        assert!(matches!(
            FieldTower::build(2, 1, (1 << 25) - 1),
            Err(Error::FieldTooLarge { .. })
        ));
        assert_eq!(
            FieldTower::for_q(6, 5).unwrap_err(),
            Error::NotPrimePower(6)
        );
    }

    #[test]
    fn alpha_powers_distinct() {
        for (q, n) in [(2, 7), (2, 9), (3, 10), (4, 15), (5, 4), (9, 5)] {
            let t = FieldTower::for_q(q, n).unwrap();
            let mut seen = std::collections::HashSet::new();
            for i in 0..n {
                assert!(seen.insert(t.alpha_pow(i)));
            }
            assert_eq!(t.alpha_pow(n), Elem::ONE);
            assert_eq!(t.alpha_pow(n + 3), t.alpha_pow(3));
        }
    }

    #[test]
    fn frobenius_examples() {
        // q = 2, m = 2: frobenius(w, 1) = w^2
        let t = FieldTower::build(2, 1, 3).unwrap();
        let w = t.alpha();
        assert_eq!(t.frobenius(w, 1), t.big().mul(w, w));
        for a in t.big().elements() {
            assert_eq!(t.frobenius(a, 0), a);
            assert_eq!(t.frobenius(a, t.m()), a);
        }
    }

    #[test]
    fn trace_examples() {
        let t = FieldTower::build(2, 1, 3).unwrap();
        // Tr_{4->2}(w) = w + w^2 = 1
        assert_eq!(t.trace(t.alpha()), Elem::ONE);
        assert_eq!(t.trace(Elem::ZERO), Elem::ZERO);
        assert_eq!(
            t.relative_trace(Elem::ONE, 3),
            Err(Error::NotADivisor { k: 3, m: 2 })
        );

        // Tr_{8->2}: onto F_2, kernel of size 4 (enumerated)
        let t = FieldTower::build(2, 1, 7).unwrap();
        let values: Vec<Elem> = t.big().elements().map(|a| t.trace(a)).collect();
        assert_eq!(values.iter().filter(|v| v.is_zero()).count(), 4);
        assert!(values.contains(&Elem::ONE));
    }

    #[test]
    fn subfield_membership() {
        let t = FieldTower::build(2, 1, 7).unwrap();
        assert!(t.is_in_subfield(Elem::ZERO, 1).unwrap());
        assert!(!t.is_in_subfield(t.alpha(), 1).unwrap());
        assert!(t.is_in_subfield(t.alpha(), 3).unwrap());
        assert_eq!(
            t.is_in_subfield(Elem::ONE, 2),
            Err(Error::NotADivisor { k: 2, m: 3 })
        );
    }

    #[test]
    fn coercion_round_trip() {
        // q = 4 inside F_16
        let t = FieldTower::build(2, 2, 5).unwrap();
        assert_eq!((t.m(), t.big().size()), (2, 16));
        assert_eq!(t.coerce_to_subfield(Elem::ZERO).unwrap(), Elem::ZERO);
        assert_eq!(t.coerce_to_subfield(Elem::ONE).unwrap(), Elem::ONE);
        // the generator maps to the designated symbol z of F_4 (code p = 2)
        assert_eq!(
            t.coerce_to_subfield(t.subfield_gen()).unwrap(),
            Elem::from_code(2)
        );
        let g = t.subfield_gen();
        assert_eq!(t.frobenius(g, 1), g);
        for a in t.small().elements() {
            assert_eq!(t.coerce_to_subfield(t.embed(a)).unwrap(), a);
        }
        // embedding is a ring homomorphism
        for a in t.small().elements() {
            for b in t.small().elements() {
                assert_eq!(
                    t.embed(t.small().mul(a, b)),
                    t.big().mul(t.embed(a), t.embed(b))
                );
                assert_eq!(
                    t.embed(t.small().add(a, b)),
                    t.big().add(t.embed(a), t.embed(b))
                );
            }
        }
        assert_eq!(t.coerce_to_subfield(t.alpha()), Err(Error::NotInSubfield));
    }

    #[test]
    fn normal_elements() {
        // q = 2, m = 2: {w, w^2} is a basis
        let t = FieldTower::build(2, 1, 3).unwrap();
        assert!(t.is_normal(t.alpha()));
        assert!(!t.is_normal(Elem::ONE));
        // q = 2, m = 1: 1 is normal
        let t = FieldTower::build(2, 1, 1).unwrap();
        assert_eq!(t.find_normal_element(), Elem::ONE);
        for (q, n) in [(2, 7), (2, 15), (3, 8), (4, 15), (4, 3), (9, 80)] {
            let t = FieldTower::for_q(q, n).unwrap();
            let b = t.find_normal_element();
            assert!(t.is_normal(b));
            assert!(!t.trace(b).is_zero());
        }
    }

    fn towers_up_to_256() -> Vec<FieldTower> {
        [
            (2, 3),
            (2, 7),
            (2, 15),
            (2, 255),
            (3, 8),
            (3, 26),
            (4, 15),
            (4, 255),
            (16, 255),
            (5, 24),
            (7, 48),
        ]
        .iter()
        .map(|&(q, n)| FieldTower::for_q(q, n).unwrap())
        .collect()
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_subfield_when_q_is_prime() {
        for t in towers_up_to_256().iter().filter(|t| t.e() == 1) {
            let fixed: Vec<Elem> = t
                .big()
                .elements()
                .filter(|&a| t.frobenius(a, 1) == a)
                .collect();
            assert_eq!(fixed.len() as u64, t.p());
            for a in t.big().elements().step_by(7) {
                for b in t.big().elements().step_by(11) {
                    let lhs = t.frobenius(t.big().add(a, b), 1);
                    assert_eq!(lhs, t.big().add(t.frobenius(a, 1), t.frobenius(b, 1)));
                    let lhs = t.frobenius(t.big().mul(a, b), 1);
                    assert_eq!(lhs, t.big().mul(t.frobenius(a, 1), t.frobenius(b, 1)));
                }
            }
        }
    }

    #[test]
    fn trace_transitivity_and_surjectivity() {
        for t in towers_up_to_256() {
            let divisors: Vec<u64> = (1..=t.m()).filter(|k| t.m() % k == 0).collect();
            let mut image = std::collections::HashSet::new();
            for a in t.big().elements() {
                let full = t.trace(a);
                image.insert(full);
                assert!(t.is_in_subfield(full, 1).unwrap());
                for &k in &divisors {
                    let mid = t.relative_trace(a, k).unwrap();
                    assert!(t.is_in_subfield(mid, k).unwrap());
                    // Tr_{q^k -> q}(mid) computed as a sum of q-power conjugates
                    let mut inner = Elem::ZERO;
                    let mut term = mid;
                    for _ in 0..k {
                        inner = t.big().add(inner, term);
                        term = t.frobenius(term, 1);
                    }
                    assert_eq!(inner, full);
                }
            }
            assert_eq!(image.len() as u64, t.q());
        }
    }
}
