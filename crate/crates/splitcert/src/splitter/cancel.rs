//! Constructive Bass cancellation.
//!
//! Given a verified isomorphism `α: R ⊕ N → R ⊕ M`, finds a free-basic
//! element `x = x₁ + a·z` where `(a, x₁) = α((1,0))`, then composes three
//! explicit elementary automorphisms of `R ⊕ M` so that the composite `ε`
//! fixes `(1, 0)`; the induced map `N → M` is returned with a full
//! isomorphism verification. Every intermediate identity is exact.

use super::search::{combine, express_one, monomials_up_to, random_poly, SearchStats};
use super::{free_basic_certificate, FreeBasicOutcome};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::LiftedBasis;
use crate::modules::{
    hom_apply, hom_dual, morphism_is_iso, HomSubmodule, IsoVerdict, Morphism, PresentedModule,
};
use crate::poly::{FreeVector, Monomial, Polynomial, Ring};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The data of one cancellation run; every identity re-verifies exactly.
#[derive(Debug, Clone)]
pub struct CancelCertificate {
    /// `α((1,0)) = (a, x₁)`.
    pub a: Polynomial,
    pub x1: FreeVector,
    /// Perturbation with `x = x₁ + a·z` free-basic.
    pub z: FreeVector,
    pub x: FreeVector,
    /// Splitting functional with `functional(x) = 1`.
    pub functional: FreeVector,
    /// Coefficients of the functional over the generators of `Hom(M, R)`.
    pub functional_coeffs: Vec<Polynomial>,
}

#[derive(Debug, Clone)]
pub struct CancelOutcome {
    /// The induced isomorphism `N → M`.
    pub iso: Morphism,
    pub cert: CancelCertificate,
    pub stats: SearchStats,
}

/// Drops the leading `R` coordinate of a module presented as `R ⊕ (rest)`.
fn strip_first(module: &PresentedModule) -> Result<PresentedModule> {
    if module.rank == 0 {
        return Err(Error::NotIso("module has no generators".into()));
    }
    let ring = module.ring;
    let mut cols = Vec::new();
    for col in module.columns() {
        if !col.comps[0].is_zero() {
            return Err(Error::NotIso(
                "module is not presented as R ⊕ (rest): a relation touches the first generator"
                    .into(),
            ));
        }
        cols.push(FreeVector { ring, comps: col.comps[1..].to_vec() });
    }
    PresentedModule::new(ring, module.rank - 1, cols)
}

fn identity_rows(ring: Ring, n: usize) -> Vec<Vec<Polynomial>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) })
                .collect()
        })
        .collect()
}

/// `(r, m) ↦ (r, r·w + m)` on `R ⊕ M`.
fn lower_transvection(ambient: &PresentedModule, w: &FreeVector) -> Morphism {
    let ring = ambient.ring;
    let mut matrix = identity_rows(ring, ambient.rank);
    for (i, entry) in w.comps.iter().enumerate() {
        matrix[1 + i][0] = entry.clone();
    }
    Morphism { source: ambient.clone(), target: ambient.clone(), matrix }
}

/// `(r, m) ↦ (r + ψ(m), m)` on `R ⊕ M`, with `ψ` a functional on `M`.
fn upper_transvection(ambient: &PresentedModule, psi: &FreeVector) -> Morphism {
    let ring = ambient.ring;
    let mut matrix = identity_rows(ring, ambient.rank);
    for (j, entry) in psi.comps.iter().enumerate() {
        matrix[0][1 + j] = entry.clone();
    }
    Morphism { source: ambient.clone(), target: ambient.clone(), matrix }
}

fn pair(ring: Ring, r: &Polynomial, m: &FreeVector) -> FreeVector {
    let mut comps = vec![r.clone()];
    comps.extend(m.comps.iter().cloned());
    FreeVector { ring, comps }
}

/// Cancels the free factor from `α: R ⊕ N ≅ R ⊕ M`, returning a verified
/// isomorphism `N → M`. The local-free-rank hypotheses on `M` are not
/// verified; if no free-basic element surfaces within the budget the search
/// reports `Inconclusive`.
pub fn bass_cancel(alpha: &Morphism, seed: u64, budget: u64) -> Result<CancelOutcome> {
    let n_mod = strip_first(&alpha.source)?;
    let m_mod = strip_first(&alpha.target)?;
    match morphism_is_iso(alpha)? {
        IsoVerdict::Iso(_) => {}
        IsoVerdict::NotSurjective(_) => return Err(Error::NotIso("alpha is not surjective".into())),
        IsoVerdict::NotInjective(_) => return Err(Error::NotIso("alpha is not injective".into())),
    }
    let ring = alpha.target.ring;
    let gm = m_mod.rank;

    // α((1, 0)) = (a, x₁): the first matrix column
    let a = alpha.matrix[0][0].clone();
    let x1 = FreeVector {
        ring,
        comps: (1..alpha.target.rank).map(|i| alpha.matrix[i][0].clone()).collect(),
    };

    let dual = hom_dual(&m_mod);
    let (z, functional, functional_coeffs, stats) =
        find_perturbation(&m_mod, &dual, &a, &x1, seed, budget)?;
    let x = x1.add(&z.scale_poly(&a))?;
    debug_assert_eq!(hom_apply(&functional, &x)?, Polynomial::one(ring));

    // β: (r, m) ↦ (r, r·z + m); sends (a, x₁) to (a, x)
    let beta = lower_transvection(&alpha.target, &z);
    let ax1 = pair(ring, &a, &x1);
    let ax = pair(ring, &a, &x);
    if beta.apply(&ax1)? != ax {
        return Err(Error::CertificateInvalid("beta does not send (a, x1) to (a, x)".into()));
    }

    // γ: (r, m) ↦ (r + ψ(m), m) with ψ = (1 - a)·f; sends (a, x) to (1, x)
    let one_minus_a = Polynomial::one(ring).sub(&a)?;
    let psi = functional.scale_poly(&one_minus_a);
    let gamma = upper_transvection(&alpha.target, &psi);
    let one_x = pair(ring, &Polynomial::one(ring), &x);
    if gamma.apply(&ax)? != one_x {
        return Err(Error::CertificateInvalid("gamma does not send (a, x) to (1, x)".into()));
    }

    // η: (r, m) ↦ (r, m - r·x); sends (1, x) to (1, 0)
    let eta = lower_transvection(&alpha.target, &x.neg());
    let one_zero = pair(ring, &Polynomial::one(ring), &FreeVector::zero(ring, gm));
    if eta.apply(&one_x)? != one_zero {
        return Err(Error::CertificateInvalid("eta does not send (1, x) to (1, 0)".into()));
    }

    // ε = η ∘ γ ∘ β ∘ α fixes (1, 0) exactly
    let eps = eta.compose(&gamma)?.compose(&beta)?.compose(alpha)?;
    let eps_col0 = FreeVector {
        ring,
        comps: (0..alpha.target.rank).map(|i| eps.matrix[i][0].clone()).collect(),
    };
    if eps_col0 != one_zero {
        return Err(Error::CertificateInvalid("epsilon does not fix (1, 0)".into()));
    }

    // induced map on the quotients N -> M: the lower-right block of ε
    let tau_matrix: Vec<Vec<Polynomial>> = (1..alpha.target.rank)
        .map(|i| (1..alpha.source.rank).map(|j| eps.matrix[i][j].clone()).collect())
        .collect();
    let tau = Morphism::new(n_mod, m_mod, tau_matrix)?;
    match morphism_is_iso(&tau)? {
        IsoVerdict::Iso(_) => {}
        _ => {
            return Err(Error::CertificateInvalid(
                "induced map failed the isomorphism check".into(),
            ))
        }
    }

    Ok(CancelOutcome {
        iso: tau,
        cert: CancelCertificate { a, x1, z, x, functional, functional_coeffs },
        stats,
    })
}

/// Searches for `z` making `x₁ + a·z` free-basic, mixing derived candidates
/// (cofactor extraction per functional mix) with seeded random elements.
fn find_perturbation(
    m_mod: &PresentedModule,
    dual: &HomSubmodule,
    a: &Polynomial,
    x1: &FreeVector,
    seed: u64,
    budget: u64,
) -> Result<(FreeVector, FreeVector, Vec<Polynomial>, SearchStats)> {
    let ring = m_mod.ring;
    let gm = m_mod.rank;
    let gens = m_mod.standard_generators();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tested: u64 = 0;
    let mut rounds: u32 = 0;

    let mut try_z = |z: &FreeVector,
                     tested: &mut u64|
     -> Result<Option<(FreeVector, Vec<Polynomial>)>> {
        if *tested >= budget {
            return Ok(None);
        }
        *tested += 1;
        let x = x1.add(&z.scale_poly(a))?;
        match free_basic_certificate(m_mod, dual, &x)? {
            FreeBasicOutcome::Certificate { functional, coeffs } => Ok(Some((functional, coeffs))),
            FreeBasicOutcome::Obstruction { .. } => Ok(None),
        }
    };

    // derived candidates: no perturbation, single generators, and cofactor
    // extraction for the affine constraint f_λ(x₁) + Σ c_j·a·f_λ(e_j) = 1
    let mut derived: Vec<FreeVector> = vec![FreeVector::zero(ring, gm)];
    for g in &gens {
        derived.push(g.clone());
        derived.push(g.neg());
    }
    let mut lambdas: Vec<Vec<FieldElement>> = Vec::new();
    for i in 0..dual.gens.len() {
        let mut l = vec![FieldElement::zero(ring.field); dual.gens.len()];
        l[i] = FieldElement::one(ring.field);
        lambdas.push(l);
    }
    if dual.gens.len() > 1 {
        lambdas.push(vec![FieldElement::one(ring.field); dual.gens.len()]);
    }
    for l in &lambdas {
        let mut f = FreeVector::zero(ring, gm);
        for (c, g) in l.iter().zip(&dual.gens) {
            f = f.add(&g.mul_term(c, &Monomial::one(ring.vars)))?;
        }
        if f.is_zero() {
            continue;
        }
        let rhs = Polynomial::one(ring).sub(&hom_apply(&f, x1)?)?;
        let row: Vec<Polynomial> = gens
            .iter()
            .map(|e| Ok(a.mul_unchecked(&hom_apply(&f, e)?)))
            .collect::<Result<_>>()?;
        let vectors: Vec<FreeVector> =
            row.iter().map(|p| FreeVector { ring, comps: vec![p.clone()] }).collect();
        let lifted = LiftedBasis::new(ring, 1, &vectors);
        if let Some(c) = lifted.express(&FreeVector { ring, comps: vec![rhs] }) {
            derived.push(combine(ring, gm, &c, &gens));
        }
    }
    for z in &derived {
        if let Some((functional, coeffs)) = try_z(z, &mut tested)? {
            return Ok((
                z.clone(),
                functional,
                coeffs,
                SearchStats { candidates: tested, rounds },
            ));
        }
    }

    while tested < budget {
        let degree = rounds.min(3);
        let box_bound = ((2 * gm as i64) << rounds.min(18)).max(2);
        let monos = monomials_up_to(ring, degree);
        for _ in 0..25 {
            if tested >= budget {
                break;
            }
            let z = FreeVector {
                ring,
                comps: (0..gm)
                    .map(|_| random_poly(&mut rng, ring, &monos, box_bound, 0.6))
                    .collect(),
            };
            if let Some((functional, coeffs)) = try_z(&z, &mut tested)? {
                return Ok((z, functional, coeffs, SearchStats { candidates: tested, rounds }));
            }
        }
        rounds += 1;
    }
    Err(Error::Inconclusive { candidates: tested })
}

/// Full re-verification of a cancellation outcome from scratch.
pub fn verify_cancel(alpha: &Morphism, outcome: &CancelOutcome) -> Result<()> {
    let ring = alpha.target.ring;
    let m_mod = strip_first(&alpha.target)?;
    let cert = &outcome.cert;

    // the first column of alpha really is (a, x1)
    if alpha.matrix[0][0] != cert.a {
        return Err(Error::CertificateInvalid("recorded a differs from alpha".into()));
    }
    for (i, c) in cert.x1.comps.iter().enumerate() {
        if alpha.matrix[1 + i][0] != *c {
            return Err(Error::CertificateInvalid("recorded x1 differs from alpha".into()));
        }
    }
    // x = x1 + a z and f(x) = 1
    if cert.x != cert.x1.add(&cert.z.scale_poly(&cert.a))? {
        return Err(Error::CertificateInvalid("x is not x1 + a*z".into()));
    }
    let dual = hom_dual(&m_mod);
    let mut rebuilt = FreeVector::zero(ring, m_mod.rank);
    for (c, f) in cert.functional_coeffs.iter().zip(&dual.gens) {
        rebuilt = rebuilt.add(&f.scale_poly(c))?;
    }
    if rebuilt != cert.functional {
        return Err(Error::CertificateInvalid(
            "functional is not the recorded combination of Hom(M,R) generators".into(),
        ));
    }
    for col in m_mod.columns() {
        if !cert.functional.dot(col)?.is_zero() {
            return Err(Error::CertificateInvalid("functional does not annihilate".into()));
        }
    }
    if hom_apply(&cert.functional, &cert.x)? != Polynomial::one(ring) {
        return Err(Error::CertificateInvalid("f(x) is not 1".into()));
    }
    // elementary maps and their exact identities
    let beta = lower_transvection(&alpha.target, &cert.z);
    let one_minus_a = Polynomial::one(ring).sub(&cert.a)?;
    let gamma = upper_transvection(&alpha.target, &cert.functional.scale_poly(&one_minus_a));
    let eta = lower_transvection(&alpha.target, &cert.x.neg());
    let ax1 = pair(ring, &cert.a, &cert.x1);
    let ax = pair(ring, &cert.a, &cert.x);
    let one_x = pair(ring, &Polynomial::one(ring), &cert.x);
    let one_zero =
        pair(ring, &Polynomial::one(ring), &FreeVector::zero(ring, m_mod.rank));
    if beta.apply(&ax1)? != ax || gamma.apply(&ax)? != one_x || eta.apply(&one_x)? != one_zero {
        return Err(Error::CertificateInvalid("elementary identities failed".into()));
    }
    let eps = eta.compose(&gamma)?.compose(&beta)?.compose(alpha)?;
    for (i, row) in eps.matrix.iter().enumerate() {
        let expect = if i == 0 { Polynomial::one(ring) } else { Polynomial::zero(ring) };
        if row[0] != expect {
            return Err(Error::CertificateInvalid("epsilon does not fix (1,0)".into()));
        }
        for (j, entry) in row.iter().enumerate().skip(1) {
            if i >= 1 && outcome.iso.matrix[i - 1][j - 1] != *entry {
                return Err(Error::CertificateInvalid(
                    "returned map differs from the epsilon block".into(),
                ));
            }
        }
    }
    match morphism_is_iso(&outcome.iso)? {
        IsoVerdict::Iso(_) => Ok(()),
        _ => Err(Error::CertificateInvalid("returned map is not an isomorphism".into())),
    }
}
