//! Buchberger engine for ideals and for submodules of free modules.
//!
//! Module Gröbner bases use position-over-term order with lower component
//! index prioritized, which makes component elimination a basis restriction.
//! Pair selection is the normal strategy (minimal lcm total degree, ties by
//! insertion sequence), so identical inputs yield bit-identical reduced bases.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{mono_cmp_unchecked, FreeVector, Monomial, MonomialOrder, Polynomial, Ring};
use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::sync::{Arc, OnceLock};

/// Leading term of a vector under position-over-term: the first nonzero
/// component wins, ties resolved by the monomial order of the ring.
fn vec_lead(v: &FreeVector) -> Option<(usize, FieldElement, Monomial)> {
    for (c, p) in v.comps.iter().enumerate() {
        if !p.is_zero() {
            let (coeff, mono) = &p.terms[0];
            return Some((c, coeff.clone(), mono.clone()));
        }
    }
    None
}

fn pot_cmp(a: &(usize, Monomial), b: &(usize, Monomial), ord: MonomialOrder) -> Ordering {
    match a.0.cmp(&b.0) {
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => mono_cmp_unchecked(&a.1, &b.1, ord),
    }
}

fn single_component(v: &FreeVector) -> Option<usize> {
    let mut found = None;
    for (c, p) in v.comps.iter().enumerate() {
        if !p.is_zero() {
            if found.is_some() {
                return None;
            }
            found = Some(c);
        }
    }
    found
}

/// A reduced Gröbner basis of an ideal (rank 1) or of a submodule of a free
/// module: monic elements, no leading term divides another, tails reduced,
/// sorted ascending by leading term.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    /// Ring whose default order equals the order the basis was computed under.
    pub ring: Ring,
    pub order: MonomialOrder,
    pub rank: usize,
    pub elements: Vec<FreeVector>,
    lts: Vec<(usize, Monomial)>,
}

impl GroebnerBasis {
    /// Runs Buchberger to a reduced basis. Inputs may be in any compatible
    /// ring; they are re-sorted under `order` first.
    pub fn compute(ring: Ring, rank: usize, gens: &[FreeVector], order: MonomialOrder) -> Self {
        let work_ring = ring.with_order(order);
        let mut basis: Vec<FreeVector> = Vec::new();
        for g in gens {
            let g = g.reorder(work_ring);
            if !g.is_zero() {
                basis.push(make_monic(g));
            }
        }

        let mut lts: Vec<(usize, Monomial)> = basis
            .iter()
            .map(|g| {
                let (c, _, m) = vec_lead(g).expect("nonzero");
                (c, m)
            })
            .collect();

        // pair queue keyed by (lcm total degree, insertion sequence)
        let mut queue: BinaryHeap<Reverse<(u32, u64, usize, usize)>> = BinaryHeap::new();
        let mut seq: u64 = 0;
        let push_pairs = |queue: &mut BinaryHeap<Reverse<(u32, u64, usize, usize)>>,
                              lts: &[(usize, Monomial)],
                              j: usize,
                              seq: &mut u64| {
            for i in 0..j {
                if lts[i].0 == lts[j].0 {
                    let lcm = lts[i].1.lcm(&lts[j].1);
                    queue.push(Reverse((lcm.degree(), *seq, i, j)));
                    *seq += 1;
                }
            }
        };
        for j in 0..basis.len() {
            push_pairs(&mut queue, &lts, j, &mut seq);
        }

        let mut done: HashSet<(usize, usize)> = HashSet::new();
        while let Some(Reverse((_, _, i, j))) = queue.pop() {
            let (ci, mi) = &lts[i];
            let (_, mj) = &lts[j];
            let comp = *ci;
            let lcm = mi.lcm(mj);

            // product criterion, sound only when both elements live in one
            // common component (always the case for ideals)
            if mi.coprime(mj) {
                if let (Some(a), Some(b)) = (single_component(&basis[i]), single_component(&basis[j]))
                {
                    if a == b {
                        done.insert((i, j));
                        continue;
                    }
                }
            }

            // chain criterion: both companion pairs already treated
            let chained = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && lts[k].0 == comp
                    && lts[k].1.divides(&lcm)
                    && done.contains(&(i.min(k), i.max(k)))
                    && done.contains(&(j.min(k), j.max(k)))
            });
            if chained {
                continue;
            }

            let qi = mi.div(&lcm);
            let qj = mj.div(&lcm);
            let one = FieldElement::one(ring.field);
            let spoly = basis[i].mul_term(&one, &qi).sub(&basis[j].mul_term(&one, &qj)).expect("rank");
            let (rem, _) = divide(&spoly, &basis, &lts);
            done.insert((i, j));
            if !rem.is_zero() {
                let rem = make_monic(rem);
                let (c, _, m) = vec_lead(&rem).expect("nonzero");
                basis.push(rem);
                lts.push((c, m));
                push_pairs(&mut queue, &lts, basis.len() - 1, &mut seq);
            }
        }

        // minimalize: drop elements whose leading term is divisible by another's
        let n = basis.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            if !keep[i] {
                continue;
            }
            for j in 0..n {
                if i == j || !keep[j] {
                    continue;
                }
                if lts[j].0 == lts[i].0 && lts[j].1.divides(&lts[i].1) {
                    if lts[j].1 == lts[i].1 && j > i {
                        continue; // equal leading terms: keep the earlier one
                    }
                    keep[i] = false;
                    break;
                }
            }
        }
        let minimal: Vec<FreeVector> =
            basis.into_iter().zip(&keep).filter(|(_, &k)| k).map(|(g, _)| g).collect();
        let minimal_lts: Vec<(usize, Monomial)> =
            lts.into_iter().zip(&keep).filter(|(_, &k)| k).map(|(l, _)| l).collect();

        // tail-reduce each element against the others
        let mut reduced: Vec<FreeVector> = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<FreeVector> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let other_lts: Vec<(usize, Monomial)> = minimal_lts
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, l)| l.clone())
                .collect();
            let (rem, _) = divide(&minimal[i], &others, &other_lts);
            debug_assert!(!rem.is_zero());
            reduced.push(make_monic(rem));
        }

        let mut indices: Vec<usize> = (0..reduced.len()).collect();
        indices.sort_by(|&a, &b| pot_cmp(&minimal_lts[a], &minimal_lts[b], order));
        let elements: Vec<FreeVector> = indices.iter().map(|&i| reduced[i].clone()).collect();
        let lts = elements
            .iter()
            .map(|g| {
                let (c, _, m) = vec_lead(g).expect("nonzero");
                (c, m)
            })
            .collect();

        GroebnerBasis { ring: work_ring, order, rank, elements, lts }
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis generates the whole ambient module (for ideals:
    /// contains a unit).
    pub fn is_unit(&self) -> bool {
        if self.rank != 1 {
            return (0..self.rank).all(|c| {
                self.lts.iter().any(|(lc, m)| *lc == c && m.is_one())
            });
        }
        self.lts.iter().any(|(_, m)| m.is_one())
    }

    /// Remainder of `v` on division by the basis: no term of the remainder is
    /// divisible by any leading term.
    pub fn normal_form(&self, v: &FreeVector) -> FreeVector {
        let v = v.reorder(self.ring);
        let (rem, _) = divide(&v, &self.elements, &self.lts);
        rem
    }

    /// Remainder plus cofactors: `v = sum(cofactor_i * element_i) + remainder`
    /// exactly.
    pub fn normal_form_with_cofactors(&self, v: &FreeVector) -> (FreeVector, Vec<Polynomial>) {
        let v = v.reorder(self.ring);
        divide(&v, &self.elements, &self.lts)
    }

    pub fn normal_form_poly(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(self.rank, 1);
        let v = FreeVector { ring: f.ring, comps: vec![f.clone()] };
        self.normal_form(&v).comps.pop().expect("rank 1")
    }

    pub fn reduces_to_zero(&self, v: &FreeVector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn leading_terms(&self) -> &[(usize, Monomial)] {
        &self.lts
    }

    /// Exhaustive S-pair check of the Buchberger criterion; used by the
    /// acceptance suite as an independent soundness gate.
    pub fn all_spairs_reduce_to_zero(&self) -> bool {
        let one = FieldElement::one(self.ring.field);
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                if self.lts[i].0 != self.lts[j].0 {
                    continue;
                }
                let lcm = self.lts[i].1.lcm(&self.lts[j].1);
                let qi = self.lts[i].1.div(&lcm);
                let qj = self.lts[j].1.div(&lcm);
                let s = self.elements[i]
                    .mul_term(&one, &qi)
                    .sub(&self.elements[j].mul_term(&one, &qj))
                    .expect("rank");
                if !self.reduces_to_zero(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks reducedness structurally: monic, pairwise non-divisible leading
    /// terms, fully reduced tails.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.elements.iter().enumerate() {
            let Some((_, coeff, _)) = vec_lead(g) else { return false };
            if !coeff.is_one() {
                return false;
            }
            for (j, (lc, lm)) in self.lts.iter().enumerate() {
                if i == j {
                    continue;
                }
                // no term of g may be divisible by another leading term
                for (cc, p) in g.comps.iter().enumerate() {
                    for (_, m) in &p.terms {
                        if cc == *lc && lm.divides(m) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn make_monic(v: FreeVector) -> FreeVector {
    let (_, coeff, _) = vec_lead(&v).expect("nonzero vector");
    if coeff.is_one() {
        v
    } else {
        let inv = coeff.inverse().expect("nonzero lead");
        v.mul_term(&inv, &Monomial::one(v.ring.vars))
    }
}

/// Multivariate division: returns (remainder, cofactors over `basis`).
/// Inputs must already be sorted under the dividing ring's order.
fn divide(
    f: &FreeVector,
    basis: &[FreeVector],
    lts: &[(usize, Monomial)],
) -> (FreeVector, Vec<Polynomial>) {
    let ring = f.ring;
    let mut work = f.clone();
    let mut rem = FreeVector::zero(ring, f.rank());
    let mut cofactors = vec![Polynomial::zero(ring); basis.len()];
    while let Some((comp, coeff, mono)) = vec_lead(&work) {
        let reducer = (0..basis.len()).find(|&i| lts[i].0 == comp && lts[i].1.divides(&mono));
        match reducer {
            Some(i) => {
                let q = lts[i].1.div(&mono);
                // basis elements are monic
                work = work.sub(&basis[i].mul_term(&coeff, &q)).expect("rank");
                let cterm = Polynomial::from_terms(ring, vec![(coeff, q)]);
                cofactors[i] = cofactors[i].add_unchecked(&cterm);
            }
            None => {
                let t = Polynomial::from_terms(ring, vec![(coeff.clone(), mono.clone())]);
                rem.comps[comp] = rem.comps[comp].add_unchecked(&t);
                work.comps[comp] = work.comps[comp].sub(&t).expect("same ring");
            }
        }
    }
    (rem, cofactors)
}

/// An ideal of the polynomial ring, with a write-once cache for its reduced
/// Gröbner basis under the ring's default order.
#[derive(Debug)]
pub struct Ideal {
    pub ring: Ring,
    pub gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal { ring: self.ring, gens: self.gens.clone(), gb: self.gb.clone() }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens, gb: OnceLock::new() }
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    fn as_vectors(&self) -> Vec<FreeVector> {
        self.gens.iter().map(|g| FreeVector { ring: g.ring, comps: vec![g.clone()] }).collect()
    }

    /// Reduced basis under the ring's default order (cached).
    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.gb
            .get_or_init(|| {
                Arc::new(GroebnerBasis::compute(self.ring, 1, &self.as_vectors(), self.ring.order))
            })
            .clone()
    }

    /// Reduced basis under an explicit order (not cached).
    pub fn groebner_with(&self, order: MonomialOrder) -> GroebnerBasis {
        GroebnerBasis::compute(self.ring, 1, &self.as_vectors(), order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner().normal_form_poly(f).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.groebner().is_unit()
    }

    /// Canonical generators: the reduced basis elements, mapped back to the
    /// ring's own term order.
    pub fn reduced_gens(&self) -> Vec<Polynomial> {
        self.groebner()
            .elements
            .iter()
            .map(|v| v.comps[0].reorder(self.ring))
            .collect()
    }
}

/// A finitely generated submodule of a free module `R^rank`.
#[derive(Debug)]
pub struct Submodule {
    pub ring: Ring,
    pub rank: usize,
    pub gens: Vec<FreeVector>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Submodule {
    fn clone(&self) -> Self {
        Submodule {
            ring: self.ring,
            rank: self.rank,
            gens: self.gens.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.rank == other.rank && self.gens == other.gens
    }
}

impl Submodule {
    pub fn new(ring: Ring, rank: usize, gens: Vec<FreeVector>) -> Self {
        let gens: Vec<FreeVector> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        debug_assert!(gens.iter().all(|g| g.rank() == rank));
        Submodule { ring, rank, gens, gb: OnceLock::new() }
    }

    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.gb
            .get_or_init(|| {
                Arc::new(GroebnerBasis::compute(self.ring, self.rank, &self.gens, self.ring.order))
            })
            .clone()
    }

    pub fn contains(&self, v: &FreeVector) -> bool {
        self.groebner().reduces_to_zero(v)
    }

    /// Equality as submodules, by double inclusion of generators.
    pub fn same_module(&self, other: &Submodule) -> bool {
        self.rank == other.rank
            && other.gens.iter().all(|g| self.contains(g))
            && self.gens.iter().all(|g| other.contains(g))
    }
}

/// Gröbner basis of the graph module `{(input_i, e_i)}`, supporting both
/// expression of members as combinations of the inputs and syzygy extraction
/// from the same computation.
#[derive(Debug, Clone)]
pub struct LiftedBasis {
    pub ring: Ring,
    pub ambient_rank: usize,
    pub input_count: usize,
    gb: GroebnerBasis,
}

impl LiftedBasis {
    pub fn new(ring: Ring, ambient_rank: usize, inputs: &[FreeVector]) -> Self {
        let total = ambient_rank + inputs.len();
        let aug: Vec<FreeVector> = inputs
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut comps = v.comps.clone();
                comps.extend((0..inputs.len()).map(|j| {
                    if i == j {
                        Polynomial::one(ring)
                    } else {
                        Polynomial::zero(ring)
                    }
                }));
                FreeVector { ring, comps }
            })
            .collect();
        let gb = GroebnerBasis::compute(ring, total, &aug, ring.order);
        LiftedBasis { ring, ambient_rank, input_count: inputs.len(), gb }
    }

    /// If `v` lies in the span of the inputs, returns cofactors `c` with
    /// `v = sum(c_i * input_i)` exactly; otherwise `None`.
    pub fn express(&self, v: &FreeVector) -> Option<Vec<Polynomial>> {
        debug_assert_eq!(v.rank(), self.ambient_rank);
        let mut comps = v.comps.clone();
        comps.extend((0..self.input_count).map(|_| Polynomial::zero(self.ring)));
        let lifted = FreeVector { ring: self.ring, comps };
        let rem = self.gb.normal_form(&lifted);
        if rem.comps[..self.ambient_rank].iter().any(|p| !p.is_zero()) {
            return None;
        }
        Some(rem.comps[self.ambient_rank..].iter().map(|p| p.neg().reorder(v.ring)).collect())
    }

    /// Generators of the syzygy module of the inputs, read off from basis
    /// elements supported entirely on the tag block.
    pub fn syzygy_gens(&self) -> Vec<FreeVector> {
        self.gb
            .elements
            .iter()
            .filter(|v| v.comps[..self.ambient_rank].iter().all(|p| p.is_zero()))
            .map(|v| FreeVector {
                ring: self.ring,
                comps: v.comps[self.ambient_rank..]
                    .iter()
                    .map(|p| p.reorder(self.ring))
                    .collect(),
            })
            .collect()
    }
}

/// Syzygies of a list of vectors in `R^rank`: generators of the kernel of
/// `R^t -> R^rank`, `e_i -> gens_i`. Each output is verified to annihilate
/// the inputs exactly.
pub fn syzygies(ring: Ring, rank: usize, gens: &[FreeVector]) -> Submodule {
    let lifted = LiftedBasis::new(ring, rank, gens);
    let syz = lifted.syzygy_gens();
    for s in &syz {
        let mut acc = FreeVector::zero(ring, rank);
        for (c, g) in s.comps.iter().zip(gens) {
            acc = acc.add(&g.scale_poly(c)).expect("rank");
        }
        assert!(acc.is_zero(), "syzygy verification failed");
    }
    Submodule::new(ring, gens.len(), syz)
}

pub fn syzygies_of_ideal(ideal: &Ideal) -> Submodule {
    let vecs: Vec<FreeVector> =
        ideal.gens.iter().map(|g| FreeVector { ring: g.ring, comps: vec![g.clone()] }).collect();
    syzygies(ideal.ring, 1, &vecs)
}

pub fn syzygies_of_module(m: &Submodule) -> Submodule {
    syzygies(m.ring, m.rank, &m.gens)
}

fn lift_poly(p: &Polynomial, target: Ring) -> Polynomial {
    let terms = p
        .terms
        .iter()
        .map(|(c, m)| {
            let mut e = Vec::with_capacity(m.0.len() + 1);
            e.push(0);
            e.extend_from_slice(&m.0);
            (c.clone(), Monomial(e))
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

fn unlift_poly(p: &Polynomial, target: Ring) -> Polynomial {
    let terms = p
        .terms
        .iter()
        .map(|(c, m)| {
            debug_assert_eq!(m.0[0], 0);
            (c.clone(), Monomial(m.0[1..].to_vec()))
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// `I ∩ k[x_{k+1}, ...]` via a block-order basis restriction. `k = 0` returns
/// the reduced basis of `I` itself.
pub fn eliminate(ideal: &Ideal, k: usize) -> Ideal {
    if k == 0 {
        return Ideal::new(ideal.ring, ideal.reduced_gens());
    }
    let gb = ideal.groebner_with(MonomialOrder::Block { first: k });
    let gens: Vec<Polynomial> = gb
        .elements
        .iter()
        .map(|v| &v.comps[0])
        .filter(|p| p.free_of_first(k))
        .map(|p| p.reorder(ideal.ring))
        .collect();
    Ideal::new(ideal.ring, gens)
}

/// `I ∩ J` via the one-tag-variable construction `t·I + (1-t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring;
    let ext = Ring::new(ring.field, ring.vars + 1, MonomialOrder::Block { first: 1 });
    let t = Polynomial::var(ext, 0);
    let one_minus_t = Polynomial::one(ext).sub(&t).expect("same ring");
    let mut gens = Vec::new();
    for f in &a.gens {
        gens.push(lift_poly(f, ext).mul(&t).expect("same ring"));
    }
    for g in &b.gens {
        gens.push(lift_poly(g, ext).mul(&one_minus_t).expect("same ring"));
    }
    let extended = Ideal::new(ext, gens);
    let eliminated = eliminate(&extended, 1);
    Ok(Ideal::new(ring, eliminated.gens.iter().map(|p| unlift_poly(p, ring)).collect()))
}

/// Saturation `I : s^∞` via elimination of `t` from `I + (1 - t·s)`.
pub fn saturate(ideal: &Ideal, s: &Polynomial) -> Result<Ideal> {
    if s.is_zero() {
        return Err(Error::ZeroDivision);
    }
    let ring = ideal.ring;
    let ext = Ring::new(ring.field, ring.vars + 1, MonomialOrder::Block { first: 1 });
    let t = Polynomial::var(ext, 0);
    let mut gens: Vec<Polynomial> = ideal.gens.iter().map(|f| lift_poly(f, ext)).collect();
    gens.push(Polynomial::one(ext).sub(&t.mul(&lift_poly(s, ext)).expect("ring")).expect("ring"));
    let extended = Ideal::new(ext, gens);
    let eliminated = eliminate(&extended, 1);
    Ok(Ideal::new(ring, eliminated.gens.iter().map(|p| unlift_poly(p, ring)).collect()))
}

/// Krull dimension of `ring/I`, computed as the maximum size of a variable
/// subset independent modulo the initial ideal under grevlex. The zero ring
/// has dimension -1.
pub fn krull_dim(ideal: &Ideal) -> i64 {
    let gb = if ideal.ring.order == MonomialOrder::GrevLex {
        (*ideal.groebner()).clone()
    } else {
        ideal.groebner_with(MonomialOrder::GrevLex)
    };
    if gb.is_unit() {
        return -1;
    }
    let n = ideal.ring.vars;
    let lts: Vec<&Monomial> = gb.leading_terms().iter().map(|(_, m)| m).collect();
    let mut best: i64 = 0;
    for mask in 0u64..(1u64 << n) {
        let allowed: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        let size = allowed.iter().filter(|&&b| b).count() as i64;
        if size <= best {
            continue;
        }
        if lts.iter().all(|m| !m.supported_on(&allowed)) {
            best = size;
        }
    }
    best
}
