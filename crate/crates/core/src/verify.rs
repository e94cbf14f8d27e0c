//! Property suites that pit the coset/basic-dual-zero formulas against the
//! brute-force oracle. Each suite returns a [`SuiteReport`] with pass/fail
//! counts and the first counterexample found.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic::{BasicDualZero, CodeSpace, CyclicCode};
use crate::error::Result;
use crate::field::Elem;
use crate::oracle::{generator_matrix, Oracle};
use crate::trace::{TraceRepr, TraceSpec};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// Observed quantities, e.g. how many codes were LCD.
    pub counts: BTreeMap<String, usize>,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        self.checked += 1;
        if let Err(msg) = outcome {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(msg);
            }
        }
    }

    fn absorb(&mut self, outcomes: Vec<std::result::Result<(), String>>) {
        for o in outcomes {
            self.record(o);
        }
    }

    fn count(&mut self, key: &str, value: usize) {
        self.counts.insert(key.to_string(), value);
    }
}

fn describe(code: &CyclicCode) -> String {
    format!("gen=[{}]", code.generator().to_code_string())
}

fn all_codes(space: &Arc<CodeSpace>) -> Result<Vec<CyclicCode>> {
    Ok(space.all_codes()?.collect())
}

/// Hull formula vs `n - deg lcm(g, h*)` vs oracle rank, for every code.
pub fn hull_vs_oracle(space: &Arc<CodeSpace>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("hull_dimension_vs_oracle");
    let codes = all_codes(space)?;
    let oracle = Oracle::new(space.field());
    let n = space.n();
    let outcomes = codes
        .par_iter()
        .map(|c| {
            let formula = c.hull_dimension();
            let by_lcm = n - c.hull_generator().degree().unwrap();
            let brute = oracle.hull_dim(&generator_matrix(c));
            if formula == brute && by_lcm == brute {
                Ok(())
            } else {
                Err(format!(
                    "{}: formula {formula}, lcm {by_lcm}, oracle {brute}",
                    describe(c)
                ))
            }
        })
        .collect();
    report.absorb(outcomes);
    Ok(report)
}

/// `is_lcd ⇔ g self-reciprocal ⇔ h(C) = 0 ⇔ oracle hull = 0`, for every code.
pub fn lcd_agreement(space: &Arc<CodeSpace>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lcd_agreement");
    let codes = all_codes(space)?;
    let oracle = Oracle::new(space.field());
    let results: Vec<(bool, std::result::Result<(), String>)> = codes
        .par_iter()
        .map(|c| {
            let by_bz = c.is_lcd();
            let by_recip = c.is_lcd_by_reciprocity();
            let by_formula = c.hull_dimension() == 0;
            let by_oracle = oracle.hull_dim(&generator_matrix(c)) == 0;
            let ok = by_bz == by_recip && by_bz == by_formula && by_bz == by_oracle;
            let outcome = if ok {
                Ok(())
            } else {
                Err(format!(
                    "{}: bz {by_bz}, reciprocal {by_recip}, formula {by_formula}, oracle {by_oracle}",
                    describe(c)
                ))
            };
            (by_oracle, outcome)
        })
        .collect();
    let lcd = results.iter().filter(|(l, _)| *l).count();
    report.absorb(results.into_iter().map(|(_, o)| o).collect());
    report.count("codes", codes.len());
    report.count("lcd", lcd);
    Ok(report)
}

/// `m_{alpha^j}` self-reciprocal iff `B_j = B_{-j}`, for every leader.
pub fn lemma1_bridge(space: &Arc<CodeSpace>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("self_reciprocal_iff_self_paired");
    let ring = space.ring();
    let table = space.table();
    for j in space.leaders() {
        let recip = ring.is_self_reciprocal(space.minpoly(j)?)?;
        let paired = table.is_self_paired(j)?;
        report.record(if recip == paired {
            Ok(())
        } else {
            Err(format!(
                "leader {j}: self-reciprocal {recip}, self-paired {paired}"
            ))
        });
    }
    Ok(report)
}

/// Counts codes with one-dimensional hull and checks the structural test
/// against the oracle for every code.
pub fn one_dim_hull_census(space: &Arc<CodeSpace>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("one_dim_hull_census");
    let codes = all_codes(space)?;
    let oracle = Oracle::new(space.field());
    let results: Vec<(bool, std::result::Result<(), String>)> = codes
        .par_iter()
        .map(|c| {
            let witness = c.one_dim_hull();
            let brute = oracle.hull_dim(&generator_matrix(c)) == 1;
            let outcome = if witness.is_some() == brute {
                Ok(())
            } else {
                Err(format!(
                    "{}: witness {witness:?}, oracle one-dim {brute}",
                    describe(c)
                ))
            };
            (brute, outcome)
        })
        .collect();
    let found = results.iter().filter(|(b, _)| *b).count();
    report.absorb(results.into_iter().map(|(_, o)| o).collect());
    report.count("codes", codes.len());
    report.count("one_dim_hull", found);
    Ok(report)
}

fn lcp_check(
    oracle: &Oracle<'_>,
    c: &CyclicCode,
    d: &CyclicCode,
) -> (bool, std::result::Result<(), String>) {
    let formula = c.is_lcp(d).unwrap();
    let brute = oracle
        .is_complementary_pair(&generator_matrix(c), &generator_matrix(d))
        .unwrap();
    let identity = c.generators_complementary(d).unwrap();
    let ok = formula == brute && (!formula || identity);
    let outcome = if ok {
        Ok(())
    } else {
        Err(format!(
            "C {} D {}: formula {formula}, oracle {brute}, g_C g_D = x^n - 1: {identity}",
            describe(c),
            describe(d)
        ))
    };
    (formula, outcome)
}

/// LCP test vs oracle over all ordered pairs; LCP pairs must also satisfy
/// `g_C g_D = x^n - 1`.
pub fn lcp_exhaustive(space: &Arc<CodeSpace>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lcp_vs_oracle");
    let codes = all_codes(space)?;
    let oracle = Oracle::new(space.field());
    let results: Vec<_> = (0..codes.len() * codes.len())
        .into_par_iter()
        .map(|k| lcp_check(&oracle, &codes[k / codes.len()], &codes[k % codes.len()]))
        .collect();
    let lcp = results.iter().filter(|(l, _)| *l).count();
    report.absorb(results.into_iter().map(|(_, o)| o).collect());
    report.count("lcp_pairs", lcp);
    Ok(report)
}

fn random_pairs(
    space: &Arc<CodeSpace>,
    samples: usize,
    seed: u64,
) -> Result<Vec<(CyclicCode, CyclicCode)>> {
    let count = space.code_count()?;
    let mut rng = StdRng::seed_from_u64(seed);
    Ok((0..samples)
        .map(|_| {
            let a = rng.gen_range(0..count);
            let b = rng.gen_range(0..count);
            (
                space.code_from_factor_mask(a),
                space.code_from_factor_mask(b),
            )
        })
        .collect())
}

/// LCP test vs oracle on random pairs, half of them forced complementary.
pub fn lcp_sampled(space: &Arc<CodeSpace>, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lcp_vs_oracle_sampled");
    let count = space.code_count()?;
    let oracle = Oracle::new(space.field());
    let mut pairs = random_pairs(space, samples, seed)?;
    // complementary generator masks give LCP pairs; mix them in
    let mut rng = StdRng::seed_from_u64(seed ^ 0x5eed);
    for pair in pairs.iter_mut().skip(1).step_by(2) {
        let mask = rng.gen_range(0..count);
        *pair = (
            space.code_from_factor_mask(mask),
            space.code_from_factor_mask(!mask & (count - 1)),
        );
    }
    let results: Vec<_> = pairs
        .par_iter()
        .map(|(c, d)| lcp_check(&oracle, c, d))
        .collect();
    let lcp = results.iter().filter(|(l, _)| *l).count();
    report.absorb(results.into_iter().map(|(_, o)| o).collect());
    report.count("lcp_pairs", lcp);
    Ok(report)
}

/// `dim(C ∩ D)` from basic dual zeros vs oracle vs `deg lcm`.
pub fn intersection_vs_oracle(
    space: &Arc<CodeSpace>,
    samples: usize,
    seed: u64,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("intersection_dimension_vs_oracle");
    let oracle = Oracle::new(space.field());
    let pairs = random_pairs(space, samples, seed)?;
    let outcomes = pairs
        .par_iter()
        .map(|(c, d)| {
            let formula = c.intersection_dimension(d).unwrap();
            let by_lcm = c.intersection_code(d).unwrap().dim();
            let brute = oracle
                .intersect_dim(&generator_matrix(c), &generator_matrix(d))
                .unwrap();
            if formula == brute && by_lcm == brute {
                Ok(())
            } else {
                Err(format!(
                    "C {} D {}: formula {formula}, lcm {by_lcm}, oracle {brute}",
                    describe(c),
                    describe(d)
                ))
            }
        })
        .collect();
    report.absorb(outcomes);
    Ok(report)
}

/// `BZ((C ∩ D)⊥) = BZ(C⊥) ∩ BZ(D⊥)` on random pairs.
pub fn intersection_bz(space: &Arc<CodeSpace>, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("intersection_basic_dual_zero");
    let pairs = random_pairs(space, samples, seed)?;
    let outcomes = pairs
        .par_iter()
        .map(|(c, d)| {
            let lhs = c.intersection_code(d).unwrap().basic_dual_zero();
            let rhs = c.basic_dual_zero().intersection(&d.basic_dual_zero());
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!(
                    "C {} D {}: {lhs:?} vs {rhs:?}",
                    describe(c),
                    describe(d)
                ))
            }
        })
        .collect();
    report.absorb(outcomes);
    Ok(report)
}

/// Every subset of leaders: trace code and generator-polynomial code have the same row space.
pub fn trace_vs_generator(trace: &TraceRepr) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("trace_code_equals_generator_code");
    let space = trace.space();
    let leaders = space.leaders();
    let count = space.code_count()?;
    let oracle = Oracle::new(space.field());
    let outcomes = (0..count)
        .into_par_iter()
        .map(|mask| {
            let bz = BasicDualZero::new(
                leaders
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &j)| j),
            );
            let traced = trace.trace_code(&bz).map_err(|e| e.to_string())?;
            let code = space.code_from_bz_dual(&bz).map_err(|e| e.to_string())?;
            if oracle
                .codes_equal(&traced, &generator_matrix(&code))
                .unwrap()
            {
                Ok(())
            } else {
                Err(format!(
                    "bz {:?}: trace code differs from {}",
                    bz.to_vec(),
                    describe(&code)
                ))
            }
        })
        .collect();
    report.absorb(outcomes);
    Ok(report)
}

fn vanishing_check(trace: &TraceRepr, spec: &TraceSpec) -> (bool, std::result::Result<(), String>) {
    let predicted = trace.vanishing_criterion(spec).unwrap();
    let direct = trace.vanishes_directly(spec).unwrap();
    let outcome = if predicted == direct {
        Ok(())
    } else {
        Err(format!(
            "exponents {:?} coeffs {:?}: predicted {predicted}, direct {direct}",
            spec.exponents,
            spec.coeffs.iter().map(|c| c.code()).collect::<Vec<_>>()
        ))
    };
    (direct, outcome)
}

/// Vanishing criterion vs direct evaluation: every single-term spec plus
/// `random` multi-term specs, half of whose coefficients are drawn from the
/// kernel of the relevant relative trace.
pub fn vanishing_criterion(trace: &TraceRepr, random: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("trace_vanishing_criterion");
    let space = trace.space();
    let tower = space.tower();
    let table = space.table();
    let big = tower.big();
    let nonzero: Vec<usize> = space.leaders().into_iter().filter(|&j| j != 0).collect();

    let singles: Vec<TraceSpec> = nonzero
        .iter()
        .flat_map(|&j| big.elements().map(move |l| TraceSpec::single(j, l)))
        .collect();
    let single_results: Vec<_> = singles
        .par_iter()
        .map(|s| vanishing_check(trace, s))
        .collect();
    report.count("single_term_specs", singles.len());

    let mut rng = StdRng::seed_from_u64(seed);
    let mut specs = Vec::with_capacity(random);
    if !nonzero.is_empty() {
        for _ in 0..random {
            let terms = rng.gen_range(2..=nonzero.len().max(2)).min(nonzero.len());
            let mut chosen = nonzero.clone();
            for i in 0..terms {
                let k = rng.gen_range(i..chosen.len());
                chosen.swap(i, k);
            }
            chosen.truncate(terms);
            let mut exponents = Vec::new();
            let mut coeffs = Vec::new();
            for &j in &chosen {
                let coset = table.coset(j)?;
                exponents.push(coset.elements()[rng.gen_range(0..coset.size())]);
                let mu = Elem::from_code(rng.gen_range(0..big.size() as u32));
                let lambda = if rng.gen_bool(0.5) {
                    // mu^(q^δ) - mu lies in the kernel of Tr_{q^m -> q^δ}
                    big.sub(tower.frobenius(mu, coset.size() as u64), mu)
                } else {
                    mu
                };
                coeffs.push(lambda);
            }
            specs.push(TraceSpec::new(exponents, coeffs));
        }
    }
    let multi_results: Vec<_> = specs
        .par_iter()
        .map(|s| vanishing_check(trace, s))
        .collect();
    report.count("multi_term_specs", specs.len());

    let vanishing = single_results
        .iter()
        .chain(&multi_results)
        .filter(|(v, _)| *v)
        .count();
    report.absorb(
        single_results
            .into_iter()
            .chain(multi_results)
            .map(|(_, o)| o)
            .collect(),
    );
    report.count("vanishing", vanishing);
    Ok(report)
}

/// Every normal element and every pair of distinct cosets gives independent trace words.
pub fn normal_independence(trace: &TraceRepr) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("normal_element_independence");
    let tower = trace.space().tower();
    let leaders = trace.space().leaders();
    let normals = tower.normal_elements();
    let first = tower.find_normal_element();
    report.record(if normals.first() == Some(&first) {
        Ok(())
    } else {
        Err(format!(
            "find_normal_element returned {first}, scan found {:?}",
            normals.first()
        ))
    });
    let mut cases = Vec::new();
    for &beta in &normals {
        for (a, &k) in leaders.iter().enumerate() {
            for &l in &leaders[a + 1..] {
                cases.push((beta, k, l));
            }
        }
    }
    let outcomes = cases
        .par_iter()
        .map(|&(beta, k, l)| match trace.independence_check(beta, k, l) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("beta {beta}, k {k}, l {l}: dependent")),
            Err(e) => Err(format!("beta {beta}, k {k}, l {l}: {e}")),
        })
        .collect();
    report.absorb(outcomes);
    report.count("normal_elements", normals.len());
    Ok(report)
}

/// Cyclic shifts of random trace codewords stay in the trace code.
pub fn trace_cyclicity(trace: &TraceRepr, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("trace_code_cyclicity");
    let space = trace.space();
    let big = space.tower().big();
    let leaders = space.leaders();
    let oracle = Oracle::new(space.field());
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let chosen: Vec<usize> = leaders
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let coeffs: Vec<Elem> = chosen
            .iter()
            .map(|_| Elem::from_code(rng.gen_range(0..big.size() as u32)))
            .collect();
        let word = trace.trace_codeword(&TraceSpec::new(chosen.clone(), coeffs))?;
        let matrix = trace.trace_code(&BasicDualZero::new(chosen.clone()))?;
        let mut shifted = word.clone();
        shifted.rotate_right(1);
        let ok = oracle.contains(&matrix, &word)? && oracle.contains(&matrix, &shifted)?;
        report.record(if ok {
            Ok(())
        } else {
            Err(format!("bz {chosen:?}: shifted word left the code"))
        });
    }
    Ok(report)
}

/// Suites for a length `n` code space.
pub fn length_suites(
    space: &Arc<CodeSpace>,
    samples: usize,
    seed: u64,
) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        lemma1_bridge(space)?,
        hull_vs_oracle(space)?,
        lcd_agreement(space)?,
        one_dim_hull_census(space)?,
        lcp_sampled(space, samples, seed)?,
        intersection_vs_oracle(space, samples, seed)?,
        intersection_bz(space, samples, seed)?,
    ])
}

/// Trace-representation suites for `n = q^m - 1`.
pub fn trace_suites(trace: &TraceRepr, random: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        trace_vs_generator(trace)?,
        vanishing_criterion(trace, random, seed)?,
        normal_independence(trace)?,
        trace_cyclicity(trace, 50, seed)?,
    ])
}
