//! The randomized-with-verification splitting search.
//!
//! Candidates are combinations of the allowed generators. Each stage first
//! tries derived candidates (single generators, cofactor extractions from
//! single functionals and from small mixes of functionals), then seeded
//! random combinations whose coefficient polynomials grow in degree and
//! coefficient box per round. Every accepted candidate is verified exactly;
//! an exhausted budget is reported as inconclusive, never as a bare "no".

use super::{
    free_basic_certificate, FreeBasicOutcome, ObstructionReport, SplitCertificate, SplitStage,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::LiftedBasis;
use crate::modules::{hom_apply, trace_ideal, HomSubmodule, PresentedModule};
use crate::poly::{FreeVector, Monomial, Polynomial, Ring};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    /// Candidates actually verified across all stages.
    pub candidates: u64,
    /// Sampling rounds completed in the last stage.
    pub rounds: u32,
}

#[derive(Debug, Clone)]
pub enum SplitOutcome {
    Certificate(SplitCertificate, SearchStats),
    Obstruction(ObstructionReport),
    Inconclusive(SearchStats),
}

#[derive(Debug, Clone)]
pub struct SplitRequest<'a> {
    pub module: &'a PresentedModule,
    pub homs: &'a HomSubmodule,
    pub rank: usize,
    /// Candidate generators of the submodule the summand must land in;
    /// defaults to the module's standard generators.
    pub restrict: Option<Vec<FreeVector>>,
    pub seed: u64,
    /// Candidates per rank step.
    pub budget: u64,
}

/// Monomials of the ring of total degree at most `d`, in a fixed order.
pub(crate) fn monomials_up_to(ring: Ring, d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(ring.vars)];
    let mut frontier = out.clone();
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &frontier {
            for i in 0..ring.vars {
                let cand = m.mul(&Monomial::var(ring.vars, i));
                if !out.contains(&cand) {
                    out.push(cand.clone());
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    out
}

pub(crate) fn random_coefficient(rng: &mut ChaCha8Rng, field: Field, box_bound: i64) -> FieldElement {
    match field {
        Field::Rational => FieldElement::from_int(field, rng.gen_range(-box_bound..=box_bound)),
        Field::Prime(p) => FieldElement::from_int(field, rng.gen_range(0..p as i64)),
    }
}

pub(crate) fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: Ring,
    monos: &[Monomial],
    box_bound: i64,
    density: f64,
) -> Polynomial {
    let mut terms = Vec::new();
    for m in monos {
        if rng.gen_bool(density) {
            let c = random_coefficient(rng, ring.field, box_bound);
            if !c.is_zero() {
                terms.push((c, m.clone()));
            }
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// Cofactors of 1 in the ideal generated by `values`, when 1 lies in it.
pub(crate) fn express_one(ring: Ring, values: &[Polynomial]) -> Option<Vec<Polynomial>> {
    let vectors: Vec<FreeVector> =
        values.iter().map(|p| FreeVector { ring, comps: vec![p.clone()] }).collect();
    let lifted = LiftedBasis::new(ring, 1, &vectors);
    let one = FreeVector { ring, comps: vec![Polynomial::one(ring)] };
    lifted.express(&one)
}

pub(crate) fn combine(ring: Ring, rank: usize, coeffs: &[Polynomial], gens: &[FreeVector]) -> FreeVector {
    let mut acc = FreeVector::zero(ring, rank);
    for (c, g) in coeffs.iter().zip(gens) {
        if !c.is_zero() {
            acc = acc.add(&g.scale_poly(c)).expect("rank");
        }
    }
    acc
}

/// Derived candidate coefficient vectors for one stage, deduplicated.
fn derived_candidates(
    ring: Ring,
    s_hat: &[FreeVector],
    e_hat: &[FreeVector],
) -> Vec<Vec<Polynomial>> {
    let t = s_hat.len();
    let mut out: Vec<Vec<Polynomial>> = Vec::new();
    // single generators, then the all-ones combination
    for j in 0..t {
        let mut c = vec![Polynomial::zero(ring); t];
        c[j] = Polynomial::one(ring);
        out.push(c);
    }
    if t > 1 {
        out.push(vec![Polynomial::one(ring); t]);
    }
    // cofactor extraction from each single functional: if the row ideal
    // (f(s_1), ..., f(s_t)) contains 1, its cofactors name a candidate with
    // f(x) = 1 outright
    let mut lambdas: Vec<Vec<FieldElement>> = Vec::new();
    for i in 0..e_hat.len() {
        let mut l = vec![FieldElement::zero(ring.field); e_hat.len()];
        l[i] = FieldElement::one(ring.field);
        lambdas.push(l);
    }
    if e_hat.len() > 1 {
        lambdas.push(vec![FieldElement::one(ring.field); e_hat.len()]);
        lambdas.push(
            (0..e_hat.len())
                .map(|i| FieldElement::from_int(ring.field, if i % 2 == 0 { 1 } else { -1 }))
                .collect(),
        );
    }
    for l in &lambdas {
        if let Some(c) = mixed_row_candidate(ring, s_hat, e_hat, l) {
            out.push(c);
        }
    }
    out
}

/// Builds the functional `f_λ = Σ λ_i f_i` and extracts candidate
/// coefficients from the cofactors of `1` in its row ideal.
fn mixed_row_candidate(
    ring: Ring,
    s_hat: &[FreeVector],
    e_hat: &[FreeVector],
    lambda: &[FieldElement],
) -> Option<Vec<Polynomial>> {
    let rank = e_hat.first()?.rank();
    let mut f = FreeVector::zero(ring, rank);
    for (l, g) in lambda.iter().zip(e_hat) {
        f = f.add(&g.mul_term(l, &Monomial::one(ring.vars))).expect("rank");
    }
    if f.is_zero() {
        return None;
    }
    let row: Vec<Polynomial> = s_hat.iter().map(|s| f.dot(s).expect("rank")).collect();
    express_one(ring, &row)
}

struct StageSearch<'a> {
    ring: Ring,
    module: &'a PresentedModule,
    budget: u64,
    rng: ChaCha8Rng,
    tested: u64,
    rounds: u32,
    seen: HashSet<Vec<Polynomial>>,
}

enum StageOutcome {
    Found { coeffs: Vec<Polynomial>, functional_coeffs: Vec<Polynomial> },
    Exhausted,
}

impl<'a> StageSearch<'a> {
    /// Tries one candidate; returns the functional coefficients over `e_hat`
    /// on success.
    fn try_candidate(
        &mut self,
        s_hat: &[FreeVector],
        e_hat: &[FreeVector],
        coeffs: &[Polynomial],
    ) -> Result<Option<Vec<Polynomial>>> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Ok(None);
        }
        if !self.seen.insert(coeffs.to_vec()) {
            return Ok(None);
        }
        if self.tested >= self.budget {
            return Ok(None);
        }
        self.tested += 1;
        let x = combine(self.ring, self.module.rank, coeffs, s_hat);
        let evals: Vec<Polynomial> =
            e_hat.iter().map(|f| f.dot(&x)).collect::<Result<_>>()?;
        Ok(express_one(self.ring, &evals))
    }

    fn run(
        &mut self,
        s_hat: &[FreeVector],
        e_hat: &[FreeVector],
    ) -> Result<StageOutcome> {
        let t = s_hat.len();
        self.seen.clear();
        for coeffs in derived_candidates(self.ring, s_hat, e_hat) {
            if self.tested >= self.budget {
                return Ok(StageOutcome::Exhausted);
            }
            if let Some(fc) = self.try_candidate(s_hat, e_hat, &coeffs)? {
                return Ok(StageOutcome::Found { coeffs, functional_coeffs: fc });
            }
        }
        let mut round: u32 = 0;
        while self.tested < self.budget {
            let degree = round.min(3);
            let box_bound = ((2 * t as i64) << round.min(18)).max(2);
            let monos = monomials_up_to(self.ring, degree);
            // a couple of random functional mixes per round
            for _ in 0..2 {
                if self.tested >= self.budget {
                    break;
                }
                let lambda: Vec<FieldElement> = (0..e_hat.len())
                    .map(|_| random_coefficient(&mut self.rng, self.ring.field, 2))
                    .collect();
                if let Some(coeffs) = mixed_row_candidate(self.ring, s_hat, e_hat, &lambda) {
                    if let Some(fc) = self.try_candidate(s_hat, e_hat, &coeffs)? {
                        return Ok(StageOutcome::Found { coeffs, functional_coeffs: fc });
                    }
                }
            }
            // random combinations for the rest of the round
            for _ in 0..23 {
                if self.tested >= self.budget {
                    break;
                }
                let coeffs: Vec<Polynomial> = (0..t)
                    .map(|_| random_poly(&mut self.rng, self.ring, &monos, box_bound, 0.6))
                    .collect();
                if let Some(fc) = self.try_candidate(s_hat, e_hat, &coeffs)? {
                    return Ok(StageOutcome::Found { coeffs, functional_coeffs: fc });
                }
            }
            round += 1;
            self.rounds = round;
        }
        Ok(StageOutcome::Exhausted)
    }
}

/// Searches for a rank-`rank` free `E`-summand inside the span of the
/// candidate generators, splitting off one rank at a time and projecting the
/// data after each success.
pub fn split_search(req: &SplitRequest<'_>) -> Result<SplitOutcome> {
    if req.rank == 0 {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    }
    let module = req.module;
    let ring = module.ring;
    let span: Vec<FreeVector> = match &req.restrict {
        Some(gens) => {
            for g in gens {
                module.check_element(g)?;
            }
            gens.clone()
        }
        None => module.standard_generators(),
    };
    for f in &req.homs.gens {
        module.check_element(f)?;
    }

    let t = span.len();
    // projected data, tracked inside M with coefficients over the originals
    let mut s_hat = span.clone();
    let mut e_hat = req.homs.gens.clone();
    let mut s_coeffs: Vec<Vec<Polynomial>> = (0..t)
        .map(|j| {
            (0..t)
                .map(|k| if j == k { Polynomial::one(ring) } else { Polynomial::zero(ring) })
                .collect()
        })
        .collect();
    let mut e_coeffs: Vec<Vec<Polynomial>> = (0..e_hat.len())
        .map(|i| {
            (0..e_hat.len())
                .map(|k| if i == k { Polynomial::one(ring) } else { Polynomial::zero(ring) })
                .collect()
        })
        .collect();

    let mut stages: Vec<SplitStage> = Vec::new();
    let mut total_stats = SearchStats::default();

    for stage_idx in 0..req.rank {
        // a proper trace ideal is a proof of impossibility: some maximal
        // ideal contains every evaluation, capping delta below the target
        let projected_homs = HomSubmodule { module_rank: module.rank, gens: e_hat.clone() };
        let trace = trace_ideal(module, &projected_homs, &s_hat)?;
        if !trace.is_unit_ideal() {
            let witness_point = witness_scan(ring, &trace);
            return Ok(SplitOutcome::Obstruction(ObstructionReport {
                stage: stage_idx,
                trace_ideal: trace,
                witness_point,
                stats: total_stats,
            }));
        }

        let mut search = StageSearch {
            ring,
            module,
            budget: req.budget,
            rng: ChaCha8Rng::seed_from_u64(req.seed.wrapping_add(stage_idx as u64)),
            tested: 0,
            rounds: 0,
            seen: HashSet::new(),
        };
        let outcome = search.run(&s_hat, &e_hat)?;
        total_stats.candidates += search.tested;
        total_stats.rounds = search.rounds;
        match outcome {
            StageOutcome::Exhausted => return Ok(SplitOutcome::Inconclusive(total_stats)),
            StageOutcome::Found { coeffs, functional_coeffs } => {
                let x = combine(ring, module.rank, &coeffs, &s_hat);
                let f = combine(ring, module.rank, &functional_coeffs, &e_hat);
                debug_assert_eq!(hom_apply(&f, &x)?, Polynomial::one(ring));

                // translate to coefficients over the original S and E
                let elem_orig: Vec<Polynomial> = (0..t)
                    .map(|orig| {
                        let mut acc = Polynomial::zero(ring);
                        for (c, row) in coeffs.iter().zip(&s_coeffs) {
                            acc = acc.add_unchecked(&c.mul_unchecked(&row[orig]));
                        }
                        acc
                    })
                    .collect();
                let func_orig: Vec<Polynomial> = (0..req.homs.gens.len())
                    .map(|orig| {
                        let mut acc = Polynomial::zero(ring);
                        for (c, row) in functional_coeffs.iter().zip(&e_coeffs) {
                            acc = acc.add_unchecked(&c.mul_unchecked(&row[orig]));
                        }
                        acc
                    })
                    .collect();
                let stage = SplitStage {
                    element: x.clone(),
                    functional: f.clone(),
                    element_coeffs: elem_orig.clone(),
                    functional_coeffs: func_orig,
                };
                stages.push(stage);

                // project the remaining data into the complement of <x>
                for (j, s) in s_hat.iter_mut().enumerate() {
                    let c = hom_apply(&f, s)?;
                    *s = s.sub(&x.scale_poly(&c))?;
                    for orig in 0..t {
                        let shift = c.mul_unchecked(&elem_orig[orig]);
                        s_coeffs[j][orig] = s_coeffs[j][orig].add_unchecked(&shift.neg());
                    }
                }
                let func_coeff_rows = e_coeffs.clone();
                for (i, g) in e_hat.iter_mut().enumerate() {
                    let c = hom_apply(g, &x)?;
                    *g = g.sub(&f.scale_poly(&c))?;
                    for orig in 0..req.homs.gens.len() {
                        let mut shift = Polynomial::zero(ring);
                        for (fc, row) in functional_coeffs.iter().zip(&func_coeff_rows) {
                            shift = shift.add_unchecked(&fc.mul_unchecked(&row[orig]));
                        }
                        let shift = c.mul_unchecked(&shift);
                        e_coeffs[i][orig] = e_coeffs[i][orig].add_unchecked(&shift.neg());
                    }
                }
            }
        }
    }

    let cert = SplitCertificate { rank: req.rank, stages };
    cert.verify(module, req.homs, &span)?;
    Ok(SplitOutcome::Certificate(cert, total_stats))
}

/// Small deterministic grid scan for a rational point inside the vanishing
/// locus of the trace ideal.
fn witness_scan(ring: Ring, trace: &Ideal) -> Option<Vec<FieldElement>> {
    if ring.vars > 3 {
        return None;
    }
    let values: Vec<i64> = match ring.field {
        Field::Rational => vec![0, 1, -1, 2, -2],
        Field::Prime(p) => (0..(p.min(5) as i64)).collect(),
    };
    let mut point = vec![0usize; ring.vars];
    loop {
        let coords: Vec<FieldElement> =
            point.iter().map(|&i| FieldElement::from_int(ring.field, values[i])).collect();
        if trace
            .gens
            .iter()
            .all(|g| g.evaluate(&coords).map(|v| v.is_zero()).unwrap_or(false))
        {
            return Some(coords);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == ring.vars {
                return None;
            }
            point[k] += 1;
            if point[k] < values.len() {
                break;
            }
            point[k] = 0;
            k += 1;
        }
    }
}
