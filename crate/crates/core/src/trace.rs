//! Trace representation of cyclic codes of length `n = q^m - 1`.
//!
//! A codeword is `(Tr(sum_j λ_j x^{i_j}))` evaluated at `x = alpha^0, ...,
//! alpha^{n-1}` in that order, with `Tr = Tr_{q^m -> q}`. In this order the
//! set of such words is closed under cyclic shift and coincides with the
//! generator-polynomial code having the same basic dual zero.

use std::sync::Arc;

use crate::cyclic::{BasicDualZero, CodeSpace};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::matrix::GfMatrix;

/// `sum_j Tr(λ_j x^{i_j})` described by aligned exponents and coefficients in `F_{q^m}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceSpec {
    pub exponents: Vec<usize>,
    pub coeffs: Vec<Elem>,
}

impl TraceSpec {
    pub fn new(exponents: Vec<usize>, coeffs: Vec<Elem>) -> Self {
        TraceSpec { exponents, coeffs }
    }

    pub fn single(exponent: usize, coeff: Elem) -> Self {
        TraceSpec::new(vec![exponent], vec![coeff])
    }
}

/// Trace machinery over a code space with `n = q^m - 1`.
#[derive(Debug, Clone)]
pub struct TraceRepr {
    space: Arc<CodeSpace>,
    normal: Elem,
}

impl TraceRepr {
    pub fn new(space: Arc<CodeSpace>) -> Result<Self> {
        if !space.tower().is_primitive_length() {
            return Err(Error::LengthNotQmMinus1 {
                n: space.n() as u64,
            });
        }
        let normal = space.tower().find_normal_element();
        Ok(TraceRepr { space, normal })
    }

    /// Builds the code space of length `q^m - 1`.
    pub fn for_qm(q: u64, m: u32) -> Result<Self> {
        let size = crate::arith::checked_pow(q, m as u64)
            .filter(|&s| s <= crate::field::MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge {
                p: q,
                degree: m as u64,
            })?;
        TraceRepr::new(CodeSpace::new(q, (size - 1) as usize)?)
    }

    pub fn space(&self) -> &Arc<CodeSpace> {
        &self.space
    }

    /// The normal element used to expand coefficients in [`Self::trace_code`].
    pub fn normal_element(&self) -> Elem {
        self.normal
    }

    fn check_shape(&self, spec: &TraceSpec) -> Result<()> {
        if spec.exponents.len() != spec.coeffs.len() {
            return Err(Error::SpecShape {
                exponents: spec.exponents.len(),
                coeffs: spec.coeffs.len(),
            });
        }
        let big = self.space.tower().big();
        if spec.coeffs.iter().any(|&c| !big.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn inner(&self, spec: &TraceSpec, x: Elem) -> Elem {
        let big = self.space.tower().big();
        spec.exponents
            .iter()
            .zip(&spec.coeffs)
            .fold(Elem::ZERO, |acc, (&e, &c)| {
                big.add(acc, big.mul(c, big.pow(x, e as u64)))
            })
    }

    /// The length-`n` word over `F_q` at `x = alpha^0, ..., alpha^{n-1}`.
    pub fn trace_codeword(&self, spec: &TraceSpec) -> Result<Vec<Elem>> {
        self.check_shape(spec)?;
        let tower = self.space.tower();
        (0..self.space.n())
            .map(|i| {
                let value = tower.trace(self.inner(spec, tower.alpha_pow(i)));
                tower.coerce_to_subfield(value)
            })
            .collect()
    }

    /// Generator matrix of the trace code for `bz`: one row per leader `j`
    /// and conjugate `β^(q^r)`, `r < m`, of the normal element `β`.
    pub fn trace_code(&self, bz: &BasicDualZero) -> Result<GfMatrix> {
        let tower = self.space.tower();
        let table = self.space.table();
        let mut rows = Vec::new();
        for &j in bz.leaders() {
            table.position(j)?;
            for r in 0..tower.m() {
                let coeff = tower.frobenius(self.normal, r);
                rows.push(self.trace_codeword(&TraceSpec::single(j, coeff))?);
            }
        }
        GfMatrix::from_rows(self.space.n(), rows)
    }

    fn check_distinct_cosets(&self, spec: &TraceSpec) -> Result<()> {
        self.check_shape(spec)?;
        let table = self.space.table();
        let n = self.space.n();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for &e in &spec.exponents {
            if e % n == 0 {
                return Err(Error::ExponentZero);
            }
            let leader = table.leader_of(e);
            if let Some(&(other, _)) = seen.iter().find(|(_, l)| *l == leader) {
                return Err(Error::DuplicateCoset(other, e));
            }
            seen.push((e, leader));
        }
        Ok(())
    }

    /// Predicted vanishing: `Tr_{q^m -> q^{δ_j}}(λ_j) = 0` for every term,
    /// where `δ_j = |B_{i_j}|`. For `δ_j = m` this forces `λ_j = 0`.
    pub fn vanishing_criterion(&self, spec: &TraceSpec) -> Result<bool> {
        self.check_distinct_cosets(spec)?;
        let tower = self.space.tower();
        let table = self.space.table();
        for (&e, &c) in spec.exponents.iter().zip(&spec.coeffs) {
            let delta = table.size_of(table.leader_of(e))? as u64;
            if !tower.relative_trace(c, delta)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Evaluates `Tr(sum λ_j x^{i_j})` at every `x ∈ F_{q^m}`, zero included.
    pub fn vanishes_directly(&self, spec: &TraceSpec) -> Result<bool> {
        self.check_distinct_cosets(spec)?;
        let tower = self.space.tower();
        Ok(tower
            .big()
            .elements()
            .all(|x| tower.trace(self.inner(spec, x)).is_zero()))
    }

    /// Rank-two test for the words `(Tr(β x^k))` and `(Tr(β x^l))`.
    pub fn independence_check(&self, beta: Elem, k: usize, l: usize) -> Result<bool> {
        let tower = self.space.tower();
        if !tower.big().contains(beta) || !tower.is_normal(beta) {
            return Err(Error::NotNormal);
        }
        let table = self.space.table();
        if table.leader_of(k) == table.leader_of(l) {
            return Err(Error::SameCoset(k, l));
        }
        let rows = [
            self.trace_codeword(&TraceSpec::single(k, beta))?,
            self.trace_codeword(&TraceSpec::single(l, beta))?,
        ];
        let m = GfMatrix::from_rows(self.space.n(), rows)?;
        Ok(m.rank(self.space.field()) == 2)
    }
}
