//! Cyclic codes as ideals of `F_q[x]/(x^n - 1)`.
//!
//! A [`CodeSpace`] fixes `(q, n)`, the tower with its root of unity `alpha`,
//! the coset table and the minimal polynomials `m_{alpha^j}` of every leader.
//! A [`CyclicCode`] is keyed by its monic generator `g | x^n - 1`; the basic
//! dual zero `BZ(C⊥)` is always derived from `g`, never stored.
//!
//! Leader sets stand for the representatives `alpha^j`: `BZ(C⊥)` is the set
//! of leaders `j` with `m_{alpha^j} | h*(x)`, where `h = (x^n - 1)/g`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cosets::CosetTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Poly, PolyRing};
use crate::tower::FieldTower;

/// Enumeration bound on the number of coset leaders (2^24 codes).
pub const MAX_ENUM_LEADERS: usize = 24;

/// The ambient ring `F_q[x]/(x^n - 1)` with its factorization data.
#[derive(Debug)]
pub struct CodeSpace {
    tower: FieldTower,
    table: CosetTable,
    // aligned with table.cosets()
    minpolys: Vec<Poly>,
    xn1: Poly,
}

impl CodeSpace {
    pub fn new(q: u64, n: usize) -> Result<Arc<CodeSpace>> {
        CodeSpace::from_tower(FieldTower::for_q(q, n)?)
    }

    pub fn from_tower(tower: FieldTower) -> Result<Arc<CodeSpace>> {
        let table = CosetTable::build(tower.q(), tower.n())?;
        let big_ring = PolyRing::new(tower.big());
        let minpolys = table
            .cosets()
            .iter()
            .map(|c| {
                let roots: Vec<Poly> = c
                    .elements()
                    .iter()
                    .map(|&s| big_ring.linear(tower.alpha_pow(s)))
                    .collect();
                tower
                    .coerce_poly(&big_ring.product(&roots))
                    .map_err(|_| Error::CoefficientNotInSubfield)
            })
            .collect::<Result<Vec<_>>>()?;
        let xn1 = PolyRing::new(tower.small()).x_n_minus_one(tower.n());
        Ok(Arc::new(CodeSpace {
            tower,
            table,
            minpolys,
            xn1,
        }))
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn q(&self) -> u64 {
        self.tower.q()
    }

    pub fn n(&self) -> usize {
        self.tower.n()
    }

    /// `F_q`, the coefficient field of every code polynomial.
    pub fn field(&self) -> &Field {
        self.tower.small()
    }

    pub fn ring(&self) -> PolyRing<'_> {
        PolyRing::new(self.tower.small())
    }

    pub fn leaders(&self) -> Vec<usize> {
        self.table.leaders()
    }

    pub fn x_n_minus_one(&self) -> &Poly {
        &self.xn1
    }

    /// `m_{alpha^j}(x) = prod_{s in B_j} (x - alpha^s)`, with coefficients in `F_q`.
    pub fn minpoly(&self, leader: usize) -> Result<&Poly> {
        Ok(&self.minpolys[self.table.position(leader)?])
    }

    /// The irreducible factors of `x^n - 1`, keyed by coset leader.
    pub fn factor_xn_minus_1(&self) -> BTreeMap<usize, Poly> {
        self.table
            .cosets()
            .iter()
            .zip(&self.minpolys)
            .map(|(c, f)| (c.leader(), f.clone()))
            .collect()
    }

    fn check_same(&self, other: &CodeSpace) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch);
        }
        if self.q() != other.q() {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Validates that `gen` divides `x^n - 1` and normalizes it to be monic.
    pub fn code_from_generator(self: &Arc<Self>, gen: &Poly) -> Result<CyclicCode> {
        let ring = self.ring();
        if gen.is_zero() {
            return Err(Error::NotAGenerator {
                remainder: Vec::new(),
            });
        }
        if gen.coeffs().iter().any(|&c| !self.field().contains(c)) {
            return Err(Error::FieldMismatch);
        }
        let rem = ring.rem(&self.xn1, gen)?;
        if !rem.is_zero() {
            return Err(Error::NotAGenerator {
                remainder: rem.codes(),
            });
        }
        Ok(CyclicCode {
            space: Arc::clone(self),
            gen: ring.monic(gen),
        })
    }

    /// The code whose dual has generator `h* = prod_{j in bz} m_{alpha^j}`.
    pub fn code_from_bz_dual(self: &Arc<Self>, bz: &BasicDualZero) -> Result<CyclicCode> {
        let ring = self.ring();
        let mut h_star = Poly::one();
        for &j in bz.leaders() {
            h_star = ring.mul(&h_star, self.minpoly(j)?);
        }
        let h = ring.reciprocal(&h_star)?;
        let gen = ring.div_exact(&self.xn1, &h)?;
        Ok(CyclicCode {
            space: Arc::clone(self),
            gen,
        })
    }

    /// Number of cyclic codes, `2^t`, when `t` is within the enumeration bound.
    pub fn code_count(&self) -> Result<u64> {
        let t = self.table.len();
        if t > MAX_ENUM_LEADERS {
            return Err(Error::TooManyLeaders(t));
        }
        Ok(1 << t)
    }

    /// The code whose generator is the product of `m_{alpha^j}` over the
    /// leaders selected by `mask` (bit `i` selects the `i`-th smallest leader).
    pub fn code_from_factor_mask(self: &Arc<Self>, mask: u64) -> CyclicCode {
        let ring = self.ring();
        let gen = self
            .minpolys
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(Poly::one(), |acc, (_, f)| ring.mul(&acc, f));
        CyclicCode {
            space: Arc::clone(self),
            gen,
        }
    }

    /// Every cyclic code of length `n`, in binary counting order of factor masks.
    pub fn all_codes(self: &Arc<Self>) -> Result<impl Iterator<Item = CyclicCode> + '_> {
        let count = self.code_count()?;
        Ok((0..count).map(move |mask| self.code_from_factor_mask(mask)))
    }

    pub fn zero_code(self: &Arc<Self>) -> CyclicCode {
        CyclicCode {
            space: Arc::clone(self),
            gen: self.xn1.clone(),
        }
    }

    pub fn full_code(self: &Arc<Self>) -> CyclicCode {
        CyclicCode {
            space: Arc::clone(self),
            gen: Poly::one(),
        }
    }
}

/// A set of coset leaders `j`, each standing for `alpha^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BasicDualZero(BTreeSet<usize>);

impl BasicDualZero {
    pub fn new(leaders: impl IntoIterator<Item = usize>) -> Self {
        BasicDualZero(leaders.into_iter().collect())
    }

    /// Like [`BasicDualZero::new`] but checks every member against the table.
    pub fn checked(table: &CosetTable, leaders: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set = BasicDualZero::new(leaders);
        if let Some(&bad) = set.0.iter().find(|&&j| !table.is_leader(j)) {
            return Err(Error::InvalidLeader(bad));
        }
        Ok(set)
    }

    pub fn leaders(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.contains(&j)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intersection(&self, other: &BasicDualZero) -> BasicDualZero {
        BasicDualZero(self.0.intersection(&other.0).copied().collect())
    }

    /// `T \ self`.
    pub fn complement(&self, table: &CosetTable) -> BasicDualZero {
        BasicDualZero::new(table.leaders().into_iter().filter(|j| !self.0.contains(j)))
    }

    /// `sum_{j in self} δ_j`.
    pub fn weight(&self, table: &CosetTable) -> usize {
        self.0
            .iter()
            .map(|&j| table.size_of(j).expect("member is a leader"))
            .sum()
    }
}

/// A cyclic code `C = <g>` of length `n` over `F_q`.
#[derive(Clone)]
pub struct CyclicCode {
    space: Arc<CodeSpace>,
    gen: Poly,
}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CyclicCode")
            .field("q", &self.space.q())
            .field("n", &self.space.n())
            .field("gen", &self.gen.codes())
            .finish()
    }
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.space.q() == other.space.q()
            && self.space.n() == other.space.n()
            && self.gen == other.gen
    }
}

impl Eq for CyclicCode {}

/// Canonical split of `BZ(C⊥)` used by the hull formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullPartition {
    /// Members that are self-paired or whose partner is also in `BZ(C⊥)`.
    pub closed: Vec<usize>,
    /// The remaining members; the hull's basic dual zero.
    pub hull: Vec<usize>,
}

impl CyclicCode {
    pub fn space(&self) -> &Arc<CodeSpace> {
        &self.space
    }

    pub fn generator(&self) -> &Poly {
        &self.gen
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn dim(&self) -> usize {
        self.n() - self.gen.degree().expect("generator is nonzero")
    }

    /// `h(x) = (x^n - 1) / g(x)`.
    pub fn check_polynomial(&self) -> Poly {
        self.space
            .ring()
            .div_exact(self.space.x_n_minus_one(), &self.gen)
            .expect("generator divides x^n - 1")
    }

    /// `C⊥ = <h*(x)>`.
    pub fn dual(&self) -> CyclicCode {
        let ring = self.space.ring();
        let h_star = ring
            .reciprocal(&self.check_polynomial())
            .expect("h(0) != 0");
        CyclicCode {
            space: Arc::clone(&self.space),
            gen: ring.monic(&h_star),
        }
    }

    /// `BZ(C⊥)`: leaders `j` with `m_{alpha^j} | h*(x)`.
    pub fn basic_dual_zero(&self) -> BasicDualZero {
        let ring = self.space.ring();
        let h_star = ring
            .reciprocal(&self.check_polynomial())
            .expect("h(0) != 0");
        let table = self.space.table();
        BasicDualZero::new(
            table
                .leaders()
                .into_iter()
                .zip(&self.space.minpolys)
                .filter(|(_, m)| ring.divides(m, &h_star))
                .map(|(j, _)| j),
        )
    }

    /// Generator of `C ∩ C⊥`, i.e. `lcm(g, h*)`.
    pub fn hull_generator(&self) -> Poly {
        self.space
            .ring()
            .lcm(&self.gen, self.dual().generator())
            .expect("generators are nonzero")
    }

    pub fn hull_code(&self) -> CyclicCode {
        CyclicCode {
            space: Arc::clone(&self.space),
            gen: self.hull_generator(),
        }
    }

    /// Splits `BZ(C⊥)` into the part closed under negation and the rest.
    pub fn hull_partition(&self) -> HullPartition {
        partition(self.space.table(), &self.basic_dual_zero())
    }

    /// `h(C) = sum of δ_j over the non-closed part of BZ(C⊥)`.
    pub fn hull_dimension(&self) -> usize {
        let table = self.space.table();
        self.hull_partition()
            .hull
            .iter()
            .map(|&j| table.size_of(j).unwrap())
            .sum()
    }

    /// LCD test on `BZ(C⊥)`: every member is self-paired or has its partner in the set.
    pub fn is_lcd(&self) -> bool {
        let bz = self.basic_dual_zero();
        let table = self.space.table();
        bz.leaders().iter().all(|&j| {
            let partner = table.neg_pair(j).unwrap();
            partner == j || bz.contains(partner)
        })
    }

    /// LCD test through self-reciprocity of the generator.
    pub fn is_lcd_by_reciprocity(&self) -> bool {
        self.space
            .ring()
            .is_self_reciprocal(&self.gen)
            .expect("generator has nonzero constant term")
    }

    /// Structural one-dimensional hull test on `BZ(C⊥)`: a single member `j`
    /// with `|B_j| = 1`, `B_j ≠ B_{-j}`, `-j ∉ BZ(C⊥)`, while the remaining
    /// members are closed under negation. Returns the witness `j`.
    pub fn one_dim_hull_structural(&self) -> Option<usize> {
        let bz = self.basic_dual_zero();
        let table = self.space.table();
        let neg = |j: usize| table.neg_pair(j).unwrap();
        bz.leaders().iter().copied().find(|&j| {
            table.size_of(j).unwrap() == 1
                && neg(j) != j
                && !bz.contains(neg(j))
                && bz
                    .leaders()
                    .iter()
                    .filter(|&&h| h != j)
                    .all(|&h| neg(h) == h || (neg(h) != j && bz.contains(neg(h))))
        })
    }

    /// Witness leader when `h(C) = 1`. Uses the structural test for
    /// `n = q^m - 1` and the hull partition otherwise.
    pub fn one_dim_hull(&self) -> Option<usize> {
        if self.space.tower().is_primitive_length() {
            return self.one_dim_hull_structural();
        }
        let part = self.hull_partition();
        match part.hull.as_slice() {
            [j] if self.space.table().size_of(*j).unwrap() == 1 => Some(*j),
            _ => None,
        }
    }

    fn check_pair(&self, other: &CyclicCode) -> Result<()> {
        self.space.check_same(&other.space)
    }

    /// `(C, D)` is LCP iff `BZ(C⊥) = T \ BZ(D⊥)`.
    pub fn is_lcp(&self, other: &CyclicCode) -> Result<bool> {
        self.check_pair(other)?;
        Ok(self.basic_dual_zero() == other.basic_dual_zero().complement(self.space.table()))
    }

    /// `g_C · g_D = x^n - 1`.
    pub fn generators_complementary(&self, other: &CyclicCode) -> Result<bool> {
        self.check_pair(other)?;
        Ok(self.space.ring().mul(&self.gen, &other.gen) == *self.space.x_n_minus_one())
    }

    /// `dim(C ∩ D) = sum of δ_j over BZ(C⊥) ∩ BZ(D⊥)`.
    pub fn intersection_dimension(&self, other: &CyclicCode) -> Result<usize> {
        self.check_pair(other)?;
        let shared = self
            .basic_dual_zero()
            .intersection(&other.basic_dual_zero());
        Ok(shared.weight(self.space.table()))
    }

    /// `C ∩ D = <lcm(g_C, g_D)>`.
    pub fn intersection_code(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.check_pair(other)?;
        Ok(CyclicCode {
            space: Arc::clone(&self.space),
            gen: self.space.ring().lcm(&self.gen, &other.gen)?,
        })
    }
}

fn partition(table: &CosetTable, bz: &BasicDualZero) -> HullPartition {
    let (closed, hull) = bz.leaders().iter().partition(|&&j| {
        let partner = table.neg_pair(j).unwrap();
        partner == j || bz.contains(partner)
    });
    HullPartition { closed, hull }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(q: u64, n: usize) -> Arc<CodeSpace> {
        CodeSpace::new(q, n).unwrap()
    }

    fn p(codes: &[u32]) -> Poly {
        Poly::from_codes(codes)
    }

    #[test]
    fn minpolys_length_9_binary() {
        let s = space(2, 9);
        assert_eq!(s.minpoly(0).unwrap(), &p(&[1, 1]));
        assert_eq!(s.minpoly(3).unwrap(), &p(&[1, 1, 1]));
        assert_eq!(s.minpoly(1).unwrap(), &p(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(s.minpoly(2), Err(Error::InvalidLeader(2)));
    }

    #[test]
    fn leader_zero_is_x_minus_one() {
        for (q, n) in [(2, 7), (3, 8), (4, 15), (5, 4), (9, 10)] {
            let s = space(q, n);
            let ring = s.ring();
            assert_eq!(s.minpoly(0).unwrap(), &ring.linear(crate::field::Elem::ONE));
        }
    }

    #[test]
    fn factorization_examples() {
        let f: Vec<Poly> = space(3, 10).factor_xn_minus_1().into_values().collect();
        let mut got = f.clone();
        got.sort();
        let mut want = vec![
            p(&[1, 1]),
            p(&[2, 1]),
            p(&[1, 1, 1, 1, 1]),
            p(&[1, 2, 1, 2, 1]),
        ];
        want.sort();
        assert_eq!(got, want);

        // q = 4, n = 3: three linear factors multiplying to x^3 - 1
        let s = space(4, 3);
        let factors = s.factor_xn_minus_1();
        assert!(factors.values().all(|f| f.degree() == Some(1)));
        assert_eq!(s.ring().product(factors.values()), *s.x_n_minus_one());
    }

    #[test]
    fn minpolys_vanish_on_their_coset() {
        let s = space(2, 7);
        // 2 ∈ B_1
        assert!(s
            .tower()
            .eval(s.minpoly(1).unwrap(), s.tower().alpha_pow(2))
            .is_zero());
        for (q, n) in [(2, 15), (3, 26), (4, 15), (9, 20)] {
            let s = space(q, n);
            for c in s.table().cosets() {
                let m = s.minpoly(c.leader()).unwrap();
                assert_eq!(m.degree(), Some(c.size()));
                assert!(m.is_monic());
                for &e in c.elements() {
                    assert!(s.tower().eval(m, s.tower().alpha_pow(e)).is_zero());
                }
                for &coef in m.coeffs() {
                    assert!(s.tower().is_in_subfield(s.tower().embed(coef), 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn bz_round_trip_and_examples() {
        let s = space(2, 7);
        assert_eq!(
            s.code_from_bz_dual(&BasicDualZero::default()).unwrap(),
            s.zero_code()
        );
        let all = BasicDualZero::new(s.leaders());
        assert_eq!(s.code_from_bz_dual(&all).unwrap(), s.full_code());
        assert_eq!(s.full_code().basic_dual_zero(), all);
        assert!(s.zero_code().basic_dual_zero().is_empty());

        let hamming = s.code_from_generator(s.minpoly(1).unwrap()).unwrap();
        assert_eq!(hamming.dim(), 4);
        assert_eq!(hamming.basic_dual_zero(), BasicDualZero::new([0, 1]));

        for code in s.all_codes().unwrap() {
            let bz = code.basic_dual_zero();
            assert_eq!(s.code_from_bz_dual(&bz).unwrap(), code);
        }
        assert_eq!(
            BasicDualZero::checked(s.table(), [0, 2]).unwrap_err(),
            Error::InvalidLeader(2)
        );
    }

    #[test]
    fn bz_dual_over_f4() {
        let s = space(4, 3);
        let code = s.code_from_bz_dual(&BasicDualZero::new([1])).unwrap();
        let ring = s.ring();
        // h* = x - w, g = (x - 1)(x - w)
        let h_star = s.minpoly(1).unwrap();
        assert_eq!(code.dual().generator(), h_star);
        assert_eq!(code.generator(), &ring.mul(s.minpoly(0).unwrap(), h_star));
        assert_eq!(code.dim(), 1);
    }

    #[test]
    fn dual_examples() {
        let s = space(2, 7);
        assert_eq!(s.zero_code().dual(), s.full_code());
        let ring = s.ring();
        let c = s
            .code_from_generator(&ring.mul(s.minpoly(0).unwrap(), s.minpoly(1).unwrap()))
            .unwrap();
        assert_eq!(c.dual().generator(), s.minpoly(1).unwrap());
        for (q, n) in [(2, 15), (3, 8), (4, 15)] {
            let s = space(q, n);
            for code in s.all_codes().unwrap() {
                assert_eq!(code.dual().dual(), code);
                assert_eq!(code.dim() + code.dual().dim(), n);
            }
        }
    }

    #[test]
    fn generator_validation() {
        let s = space(2, 7);
        assert!(matches!(
            s.code_from_generator(&p(&[1, 0, 1])),
            Err(Error::NotAGenerator { .. })
        ));
        assert!(matches!(
            s.code_from_generator(&Poly::zero()),
            Err(Error::NotAGenerator { .. })
        ));
        assert_eq!(
            s.code_from_generator(&p(&[1, 3])).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn hull_examples() {
        let s = space(2, 7);
        let hamming = s.code_from_generator(s.minpoly(1).unwrap()).unwrap();
        let ring = s.ring();
        assert_eq!(
            hamming.hull_generator(),
            ring.mul(s.minpoly(0).unwrap(), s.minpoly(1).unwrap())
        );
        assert_eq!(hamming.hull_dimension(), 3);
        assert_eq!(hamming.hull_partition().hull, vec![1]);
        assert!(!hamming.is_lcd());
        assert_eq!(s.full_code().hull_dimension(), 0);

        let s = space(2, 9);
        for code in s.all_codes().unwrap() {
            assert_eq!(code.hull_generator(), *s.x_n_minus_one());
            assert_eq!(code.hull_dimension(), 0);
            assert!(code.is_lcd());
        }

        let s = space(4, 3);
        let c = s
            .code_from_generator(&s.ring().mul(s.minpoly(0).unwrap(), s.minpoly(1).unwrap()))
            .unwrap();
        assert_eq!(c.hull_code(), c);
        assert_eq!(c.hull_dimension(), 1);
        assert_eq!(c.one_dim_hull(), Some(1));
    }

    #[test]
    fn hull_formula_matches_lcm_degree() {
        for (q, n) in [
            (2, 7),
            (2, 15),
            (2, 21),
            (3, 8),
            (3, 13),
            (4, 15),
            (5, 4),
            (5, 12),
        ] {
            let s = space(q, n);
            for code in s.all_codes().unwrap() {
                let hull_deg = code.hull_generator().degree().unwrap();
                assert_eq!(code.hull_dimension(), n - hull_deg);
                assert_eq!(code.is_lcd(), code.is_lcd_by_reciprocity());
                assert_eq!(code.is_lcd(), code.hull_dimension() == 0);
                assert_eq!(code.one_dim_hull().is_some(), code.hull_dimension() == 1);
                assert_eq!(
                    code.one_dim_hull_structural().is_some(),
                    code.hull_dimension() == 1
                );
            }
        }
    }

    #[test]
    fn no_one_dim_hull_for_binary_and_ternary_primitive_lengths() {
        for (q, n) in [(2, 3), (2, 7), (2, 15), (3, 8), (3, 26)] {
            let s = space(q, n);
            assert!(s.all_codes().unwrap().all(|c| c.one_dim_hull().is_none()));
        }
    }

    #[test]
    fn lcp_examples() {
        let s = space(2, 7);
        let ring = s.ring();
        let c = s
            .code_from_generator(&ring.mul(s.minpoly(0).unwrap(), s.minpoly(1).unwrap()))
            .unwrap();
        let d = s.code_from_generator(s.minpoly(3).unwrap()).unwrap();
        assert_eq!(c.basic_dual_zero(), BasicDualZero::new([1]));
        assert_eq!(d.basic_dual_zero(), BasicDualZero::new([0, 3]));
        assert!(c.is_lcp(&d).unwrap());
        assert!(c.generators_complementary(&d).unwrap());
        assert_eq!(c.intersection_dimension(&d).unwrap(), 0);
        assert!(!c.is_lcp(&c).unwrap());

        let s9 = space(2, 9);
        for code in s9.all_codes().unwrap() {
            assert!(code.is_lcp(&code.dual()).unwrap());
        }
        let other = space(2, 9).full_code();
        assert_eq!(c.is_lcp(&other), Err(Error::LengthMismatch));
        let other = space(4, 7).full_code();
        assert_eq!(c.intersection_dimension(&other), Err(Error::FieldMismatch));
    }

    #[test]
    fn intersection_examples() {
        let s = space(2, 7);
        let c = s.code_from_generator(s.minpoly(0).unwrap()).unwrap();
        let d = s.code_from_generator(s.minpoly(3).unwrap()).unwrap();
        assert_eq!(c.basic_dual_zero(), BasicDualZero::new([1, 3]));
        assert_eq!(c.intersection_dimension(&d).unwrap(), 3);
        assert_eq!(c.intersection_code(&d).unwrap().dim(), 3);
        for code in s.all_codes().unwrap() {
            assert_eq!(code.intersection_dimension(&code).unwrap(), code.dim());
        }
    }

    #[test]
    fn lemma1_bridge_and_regrouping() {
        for (q, n) in [
            (2, 7),
            (2, 9),
            (2, 15),
            (3, 8),
            (3, 10),
            (4, 3),
            (4, 15),
            (5, 4),
            (2, 23),
            (7, 24),
        ] {
            let s = space(q, n);
            let ring = s.ring();
            let table = s.table();
            for j in s.leaders() {
                let m = s.minpoly(j).unwrap();
                let partner = table.neg_pair(j).unwrap();
                assert_eq!(ring.is_self_reciprocal(m).unwrap(), partner == j);
                assert_eq!(&ring.reciprocal(m).unwrap(), s.minpoly(partner).unwrap());
            }
            let (t1, pairs) = table.split_t1_t2();
            let mut prod = ring.product(t1.iter().map(|&j| s.minpoly(j).unwrap()));
            for (j, _) in pairs {
                let m = s.minpoly(j).unwrap();
                prod = ring.mul(&prod, &ring.mul(m, &ring.reciprocal(m).unwrap()));
            }
            assert_eq!(prod, *s.x_n_minus_one());
        }
    }

    #[test]
    fn too_many_leaders() {
        // x^n - 1 over F_2 for n = 2^k - 1 large enough has > 24 cosets
        let s = space(2, 255);
        assert_eq!(s.table().len(), 35);
        assert!(matches!(
            s.all_codes().err(),
            Some(Error::TooManyLeaders(35))
        ));
    }
}
