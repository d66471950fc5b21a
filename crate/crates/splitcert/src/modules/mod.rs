//! Finitely presented modules and their morphisms.
//!
//! A module is the cokernel of an explicit relation matrix; relations are the
//! matrix columns, elements are length-g vectors read modulo the column span.
//! Functionals `M -> R` are row vectors annihilating every relation column,
//! which makes evaluation representative-independent.

pub mod maxideal;
pub mod snf;

pub use maxideal::{residue_rank, vanishes_at, MaximalIdealSpec};
pub use snf::{snf_decompose, SmithDecomposition};

use crate::error::{Error, Result};
use crate::groebner::{syzygies, Ideal, LiftedBasis, Submodule};
use crate::poly::{FreeVector, Polynomial, Ring};

/// An element of a presented module: a length-g vector read modulo the
/// relation columns.
pub type ModuleElement = FreeVector;

/// A functional `M -> R`: a length-g vector `u` with `u·A = 0` exactly.
pub type HomFunctional = FreeVector;

/// Cokernel of an explicit relation matrix over the ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PresentedModule {
    pub ring: Ring,
    /// Number of generators (ambient rank g).
    pub rank: usize,
    /// Column span of the relation matrix, as a submodule of `R^rank`.
    pub relations: Submodule,
}

impl PresentedModule {
    pub fn new(ring: Ring, rank: usize, relation_columns: Vec<FreeVector>) -> Result<Self> {
        for col in &relation_columns {
            if col.rank() != rank {
                return Err(Error::ArityMismatch { expected: rank, got: col.rank() });
            }
            if col.ring != ring {
                return Err(Error::RingMismatch);
            }
        }
        Ok(PresentedModule { ring, rank, relations: Submodule::new(ring, rank, relation_columns) })
    }

    pub fn free(ring: Ring, rank: usize) -> Self {
        PresentedModule { ring, rank, relations: Submodule::new(ring, rank, Vec::new()) }
    }

    pub fn columns(&self) -> &[FreeVector] {
        &self.relations.gens
    }

    pub fn column_count(&self) -> usize {
        self.relations.gens.len()
    }

    /// The relation matrix as rows: `rank` rows of length `column_count`.
    pub fn matrix_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rank)
            .map(|i| self.columns().iter().map(|col| col.comps[i].clone()).collect())
            .collect()
    }

    /// Two ambient vectors represent the same module element.
    pub fn elements_equal(&self, a: &FreeVector, b: &FreeVector) -> Result<bool> {
        let diff = a.sub(b)?;
        Ok(self.relations.contains(&diff))
    }

    pub fn is_zero_element(&self, a: &FreeVector) -> bool {
        self.relations.contains(a)
    }

    pub fn check_element(&self, a: &FreeVector) -> Result<()> {
        if a.rank() != self.rank {
            return Err(Error::ArityMismatch { expected: self.rank, got: a.rank() });
        }
        if a.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Standard generators of the module (images of the unit vectors).
    pub fn standard_generators(&self) -> Vec<FreeVector> {
        (0..self.rank).map(|i| FreeVector::unit(self.ring, self.rank, i)).collect()
    }
}

/// A finite generating set of an `R`-submodule of `Hom(M, R)`; every
/// generator annihilates the relation columns exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct HomSubmodule {
    pub module_rank: usize,
    pub gens: Vec<HomFunctional>,
}

impl HomSubmodule {
    /// Verifies annihilation of every relation column before accepting.
    pub fn new(module: &PresentedModule, gens: Vec<FreeVector>) -> Result<Self> {
        for g in &gens {
            module.check_element(g)?;
            for col in module.columns() {
                if !g.dot(col)?.is_zero() {
                    return Err(Error::CertificateInvalid(
                        "functional does not annihilate the relations".into(),
                    ));
                }
            }
        }
        Ok(HomSubmodule { module_rank: module.rank, gens })
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Generators of `Hom(M, R)` computed as syzygies of the rows of the
/// relation matrix.
pub fn hom_dual(module: &PresentedModule) -> HomSubmodule {
    let c = module.column_count();
    let gens = if c == 0 {
        module.standard_generators()
    } else {
        let rows: Vec<FreeVector> = module
            .matrix_rows()
            .into_iter()
            .map(|row| FreeVector { ring: module.ring, comps: row })
            .collect();
        syzygies(module.ring, c, &rows).gens
    };
    HomSubmodule::new(module, gens).expect("syzygies of rows annihilate the columns")
}

/// Applies a functional to an element: the dot product, well-defined modulo
/// relations because the functional annihilates them.
pub fn hom_apply(f: &HomFunctional, m: &ModuleElement) -> Result<Polynomial> {
    f.dot(m)
}

/// An `R`-linear map between presented modules, given on ambient generators.
/// `matrix` has `target.rank` rows and `source.rank` columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Morphism {
    pub source: PresentedModule,
    pub target: PresentedModule,
    pub matrix: Vec<Vec<Polynomial>>,
}

impl Morphism {
    pub fn new(
        source: PresentedModule,
        target: PresentedModule,
        matrix: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if matrix.len() != target.rank {
            return Err(Error::ArityMismatch { expected: target.rank, got: matrix.len() });
        }
        for row in &matrix {
            if row.len() != source.rank {
                return Err(Error::ArityMismatch { expected: source.rank, got: row.len() });
            }
        }
        Ok(Morphism { source, target, matrix })
    }

    pub fn identity(module: &PresentedModule) -> Self {
        let n = module.rank;
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(module.ring)
                        } else {
                            Polynomial::zero(module.ring)
                        }
                    })
                    .collect()
            })
            .collect();
        Morphism { source: module.clone(), target: module.clone(), matrix }
    }

    pub fn apply(&self, v: &FreeVector) -> Result<FreeVector> {
        if v.rank() != self.source.rank {
            return Err(Error::ArityMismatch { expected: self.source.rank, got: v.rank() });
        }
        let ring = self.target.ring;
        let comps = self
            .matrix
            .iter()
            .map(|row| {
                let mut acc = Polynomial::zero(ring);
                for (h, x) in row.iter().zip(&v.comps) {
                    acc = acc.add_unchecked(&h.mul_unchecked(x));
                }
                acc
            })
            .collect();
        Ok(FreeVector { ring, comps })
    }

    /// Columns of the matrix as target-ambient vectors.
    pub fn matrix_columns(&self) -> Vec<FreeVector> {
        (0..self.source.rank)
            .map(|j| FreeVector {
                ring: self.target.ring,
                comps: self.matrix.iter().map(|row| row[j].clone()).collect(),
            })
            .collect()
    }

    /// Matrix composition: `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        if other.target.rank != self.source.rank {
            return Err(Error::ArityMismatch {
                expected: self.source.rank,
                got: other.target.rank,
            });
        }
        let cols = other.matrix_columns();
        let new_cols: Vec<FreeVector> =
            cols.iter().map(|c| self.apply(c)).collect::<Result<_>>()?;
        let matrix = (0..self.target.rank)
            .map(|i| new_cols.iter().map(|c| c.comps[i].clone()).collect())
            .collect();
        Morphism::new(other.source.clone(), self.target.clone(), matrix)
    }
}

/// Outcome of the well-definedness test.
#[derive(Debug, Clone, PartialEq)]
pub enum MorphismVerdict {
    WellDefined,
    /// Index of the first source relation column whose image escapes the
    /// target relations.
    Violation(usize),
}

/// A morphism is well-defined iff it maps every source relation into the
/// column span of the target relations.
pub fn morphism_check(h: &Morphism) -> Result<MorphismVerdict> {
    for (idx, col) in h.source.columns().iter().enumerate() {
        let image = h.apply(col)?;
        if !h.target.relations.contains(&image) {
            return Ok(MorphismVerdict::Violation(idx));
        }
    }
    Ok(MorphismVerdict::WellDefined)
}

/// Outcome of the isomorphism test.
#[derive(Debug, Clone)]
pub enum IsoVerdict {
    /// Isomorphism, with an explicit inverse whose composites with the input
    /// are the identity modulo relations (verified).
    Iso(Morphism),
    /// A target generator that is not in the image.
    NotSurjective(FreeVector),
    /// A vector with `H v` zero in the target but `v` nonzero in the source.
    NotInjective(FreeVector),
}

/// Decides isomorphism and produces the inverse witness.
///
/// Surjectivity: every target unit vector must be expressible from the
/// columns of `[H | A_target]`. Injectivity: every syzygy of that matrix,
/// restricted to the `H` block, must lie in the source relations.
pub fn morphism_is_iso(h: &Morphism) -> Result<IsoVerdict> {
    if morphism_check(h)? != MorphismVerdict::WellDefined {
        return Err(Error::NotWellDefined);
    }
    let ring = h.target.ring;
    let gt = h.target.rank;
    let gs = h.source.rank;

    let mut inputs = h.matrix_columns();
    inputs.extend(h.target.columns().iter().cloned());
    let lifted = LiftedBasis::new(ring, gt, &inputs);

    // surjectivity, keeping cofactors for the inverse
    let mut inverse_cols: Vec<Vec<Polynomial>> = Vec::with_capacity(gt);
    for i in 0..gt {
        let e = FreeVector::unit(ring, gt, i);
        match lifted.express(&e) {
            Some(cof) => inverse_cols.push(cof[..gs].to_vec()),
            None => return Ok(IsoVerdict::NotSurjective(e)),
        }
    }

    // injectivity via syzygies of [H | A_target]
    for syz in lifted.syzygy_gens() {
        let v = FreeVector { ring, comps: syz.comps[..gs].to_vec() };
        if !h.source.relations.contains(&v) {
            return Ok(IsoVerdict::NotInjective(v));
        }
    }

    // assemble the inverse: column i expresses e_i in source coordinates
    let inv_matrix: Vec<Vec<Polynomial>> =
        (0..gs).map(|r| (0..gt).map(|c| inverse_cols[c][r].clone()).collect()).collect();
    let inverse = Morphism::new(h.target.clone(), h.source.clone(), inv_matrix)?;
    if morphism_check(&inverse)? != MorphismVerdict::WellDefined {
        return Err(Error::CertificateInvalid("inverse is not well-defined".into()));
    }
    // verify both composites are the identity modulo relations
    let kh = inverse.compose(h)?;
    let id_s = Morphism::identity(&h.source);
    for (c1, c2) in kh.matrix_columns().iter().zip(id_s.matrix_columns().iter()) {
        if !h.source.elements_equal(c1, c2)? {
            return Err(Error::CertificateInvalid("inverse∘map is not the identity".into()));
        }
    }
    let hk = h.compose(&inverse)?;
    let id_t = Morphism::identity(&h.target);
    for (c1, c2) in hk.matrix_columns().iter().zip(id_t.matrix_columns().iter()) {
        if !h.target.elements_equal(c1, c2)? {
            return Err(Error::CertificateInvalid("map∘inverse is not the identity".into()));
        }
    }
    Ok(IsoVerdict::Iso(inverse))
}

/// Block-diagonal direct sum of two presented modules.
pub fn direct_sum(a: &PresentedModule, b: &PresentedModule) -> Result<PresentedModule> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring;
    let rank = a.rank + b.rank;
    let mut cols = Vec::new();
    for col in a.columns() {
        let mut comps = col.comps.clone();
        comps.extend(std::iter::repeat_with(|| Polynomial::zero(ring)).take(b.rank));
        cols.push(FreeVector { ring, comps });
    }
    for col in b.columns() {
        let mut comps: Vec<Polynomial> =
            std::iter::repeat_with(|| Polynomial::zero(ring)).take(a.rank).collect();
        comps.extend(col.comps.iter().cloned());
        cols.push(FreeVector { ring, comps });
    }
    PresentedModule::new(ring, rank, cols)
}

/// Determinant of a square polynomial matrix by Laplace expansion.
pub(crate) fn determinant(ring: Ring, m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(ring);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = entry.mul_unchecked(&determinant(ring, &minor));
        acc = if j % 2 == 0 { acc.add_unchecked(&cof) } else { acc.add_unchecked(&cof.neg()) };
    }
    acc
}

/// Fitting ideal `Fitt_t(M)`: ideal of the (g-t)-minors of the relation
/// matrix; the unit ideal for `t >= g`, zero when the minors outsize the
/// matrix.
pub fn fitting_ideal(module: &PresentedModule, t: usize) -> Ideal {
    let g = module.rank;
    let c = module.column_count();
    if t >= g {
        return Ideal::unit(module.ring);
    }
    let size = g - t;
    if size > c {
        return Ideal::zero(module.ring);
    }
    let rows = module.matrix_rows();
    let mut minors = Vec::new();
    let row_sets = subsets_of_size(g, size);
    let col_sets = subsets_of_size(c, size);
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<Polynomial>> =
                rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
            let d = determinant(module.ring, &sub);
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    Ideal::new(module.ring, minors)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Minimal number of generators of `M` locally at `m`: the ambient rank minus
/// the residue-field rank of the evaluated relation matrix.
pub fn mu_at(module: &PresentedModule, m: &MaximalIdealSpec) -> Result<usize> {
    let rows = module.matrix_rows();
    let r = residue_rank(&module.ring, &rows, m)?;
    Ok(module.rank - r)
}

/// The local invariant `δ^E_m(S, M)`: the residue-field rank of the
/// evaluation matrix `[f_i(s_j) mod m]`.
pub fn delta_at(
    module: &PresentedModule,
    elements: &[ModuleElement],
    homs: &HomSubmodule,
    m: &MaximalIdealSpec,
) -> Result<usize> {
    for s in elements {
        module.check_element(s)?;
    }
    if elements.is_empty() || homs.gens.is_empty() {
        return Ok(0);
    }
    let matrix: Vec<Vec<Polynomial>> = homs
        .gens
        .iter()
        .map(|f| elements.iter().map(|s| hom_apply(f, s)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    residue_rank(&module.ring, &matrix, m)
}

/// Ideal generated by all evaluations `f_i(s_j)`. Being the unit ideal is
/// necessary for a rank-1 free `E`-summand inside the span of `S`.
pub fn trace_ideal(
    module: &PresentedModule,
    homs: &HomSubmodule,
    elements: &[ModuleElement],
) -> Result<Ideal> {
    let mut gens = Vec::new();
    for f in &homs.gens {
        for s in elements {
            module.check_element(s)?;
            gens.push(hom_apply(f, s)?);
        }
    }
    Ok(Ideal::new(module.ring, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldElement};
    use crate::poly::MonomialOrder;

    fn ring2() -> Ring {
        Ring::new(Field::Rational, 2, MonomialOrder::GrevLex)
    }

    fn x(r: Ring) -> Polynomial {
        Polynomial::var(r, 0)
    }

    fn y(r: Ring) -> Polynomial {
        Polynomial::var(r, 1)
    }

    /// R^2 / <(x, y)^T>
    fn koszul_module() -> PresentedModule {
        let r = ring2();
        let col = FreeVector::from_comps(vec![x(r), y(r)]);
        PresentedModule::new(r, 2, vec![col]).unwrap()
    }

    fn origin(r: Ring) -> MaximalIdealSpec {
        MaximalIdealSpec::point(vec![
            FieldElement::zero(r.field),
            FieldElement::zero(r.field),
        ])
    }

    fn point(r: Ring, a: i64, b: i64) -> MaximalIdealSpec {
        MaximalIdealSpec::point(vec![
            FieldElement::from_int(r.field, a),
            FieldElement::from_int(r.field, b),
        ])
    }

    #[test]
    fn dual_of_free_module_is_standard_basis() {
        let r = ring2();
        let m = PresentedModule::free(r, 2);
        let dual = hom_dual(&m);
        assert_eq!(dual.gens.len(), 2);
        assert_eq!(dual.gens[0], FreeVector::unit(r, 2, 0));
        assert_eq!(dual.gens[1], FreeVector::unit(r, 2, 1));
    }

    #[test]
    fn dual_of_koszul_module() {
        let r = ring2();
        let m = koszul_module();
        let dual = hom_dual(&m);
        // generated by (-y, x)
        let expected = FreeVector::from_comps(vec![y(r).neg(), x(r)]);
        let span = Submodule::new(r, 2, dual.gens.clone());
        assert!(span.contains(&expected));
        let span_expected = Submodule::new(r, 2, vec![expected]);
        for g in &dual.gens {
            assert!(span_expected.contains(g));
        }
    }

    #[test]
    fn dual_of_torsion_module_is_zero() {
        let r = ring2();
        let m = PresentedModule::new(r, 1, vec![FreeVector::from_comps(vec![x(r)])]).unwrap();
        let dual = hom_dual(&m);
        assert!(dual.gens.is_empty());
    }

    #[test]
    fn hom_apply_examples() {
        let r = ring2();
        let m = koszul_module();
        let f = FreeVector::from_comps(vec![y(r).neg(), x(r)]);
        let e2 = FreeVector::unit(r, 2, 1);
        assert_eq!(hom_apply(&f, &e2).unwrap(), x(r));
        // any functional kills the relation column
        for col in m.columns() {
            assert!(hom_apply(&f, col).unwrap().is_zero());
        }
        let proj = FreeVector::from_comps(vec![Polynomial::one(r), Polynomial::zero(r)]);
        let v = FreeVector::from_comps(vec![x(r), y(r)]);
        assert_eq!(hom_apply(&proj, &v).unwrap(), x(r));
    }

    #[test]
    fn hom_submodule_rejects_non_annihilating_rows() {
        let r = ring2();
        let m = koszul_module();
        let bad = FreeVector::from_comps(vec![Polynomial::one(r), Polynomial::zero(r)]);
        assert!(HomSubmodule::new(&m, vec![bad]).is_err());
    }

    #[test]
    fn morphism_check_examples() {
        let r = ring2();
        let m = koszul_module();
        let id = Morphism::identity(&m);
        assert_eq!(morphism_check(&id).unwrap(), MorphismVerdict::WellDefined);

        // H = [x]: R/(x) -> R is not well-defined
        let src = PresentedModule::new(r, 1, vec![FreeVector::from_comps(vec![x(r)])]).unwrap();
        let tgt = PresentedModule::free(r, 1);
        let h = Morphism::new(src.clone(), tgt, vec![vec![x(r)]]).unwrap();
        assert_eq!(morphism_check(&h).unwrap(), MorphismVerdict::Violation(0));

        let zero = Morphism::new(
            src.clone(),
            PresentedModule::free(r, 1),
            vec![vec![Polynomial::zero(r)]],
        )
        .unwrap();
        assert_eq!(morphism_check(&zero).unwrap(), MorphismVerdict::WellDefined);
    }

    #[test]
    fn iso_identity_and_swap() {
        let r = ring2();
        let free2 = PresentedModule::free(r, 2);
        let id = Morphism::identity(&free2);
        assert!(matches!(morphism_is_iso(&id).unwrap(), IsoVerdict::Iso(_)));

        let swap = Morphism::new(
            free2.clone(),
            free2.clone(),
            vec![
                vec![Polynomial::zero(r), Polynomial::one(r)],
                vec![Polynomial::one(r), Polynomial::zero(r)],
            ],
        )
        .unwrap();
        match morphism_is_iso(&swap).unwrap() {
            IsoVerdict::Iso(inv) => {
                assert_eq!(inv.matrix, swap.matrix);
            }
            other => panic!("expected iso, got {other:?}"),
        }
    }

    #[test]
    fn multiplication_by_x_not_surjective() {
        let r = Ring::new(Field::Rational, 1, MonomialOrder::GrevLex);
        let free1 = PresentedModule::free(r, 1);
        let h = Morphism::new(free1.clone(), free1, vec![vec![Polynomial::var(r, 0)]]).unwrap();
        match morphism_is_iso(&h).unwrap() {
            IsoVerdict::NotSurjective(w) => {
                assert_eq!(w, FreeVector::unit(r, 1, 0));
            }
            other => panic!("expected not surjective, got {other:?}"),
        }
    }

    #[test]
    fn quotient_collapse_not_injective() {
        // R -> R/(x): ambient identity is surjective but not injective
        let r = ring2();
        let src = PresentedModule::free(r, 1);
        let tgt = PresentedModule::new(r, 1, vec![FreeVector::from_comps(vec![x(r)])]).unwrap();
        let h = Morphism::new(src, tgt, vec![vec![Polynomial::one(r)]]).unwrap();
        match morphism_is_iso(&h).unwrap() {
            IsoVerdict::NotInjective(w) => {
                assert!(!w.is_zero());
            }
            other => panic!("expected not injective, got {other:?}"),
        }
    }

    #[test]
    fn direct_sum_shapes() {
        let r = ring2();
        let free1 = PresentedModule::free(r, 1);
        let torsion = PresentedModule::new(r, 1, vec![FreeVector::from_comps(vec![x(r)])]).unwrap();
        let sum = direct_sum(&free1, &torsion).unwrap();
        assert_eq!(sum.rank, 2);
        assert_eq!(sum.column_count(), 1);
        assert_eq!(sum.columns()[0].comps[0], Polynomial::zero(r));
        assert_eq!(sum.columns()[0].comps[1], x(r));

        let zero = PresentedModule::free(r, 0);
        let same = direct_sum(&torsion, &zero).unwrap();
        assert_eq!(same.rank, 1);
        assert_eq!(same.column_count(), 1);

        let t2 = PresentedModule::new(r, 1, vec![FreeVector::from_comps(vec![y(r)])]).unwrap();
        let both = direct_sum(&torsion, &t2).unwrap();
        assert_eq!(both.rank, 2);
        assert_eq!(both.column_count(), 2);
    }

    #[test]
    fn fitting_ideal_examples() {
        let r = ring2();
        let rx = PresentedModule::new(r, 1, vec![FreeVector::from_comps(vec![x(r)])]).unwrap();
        let f0 = fitting_ideal(&rx, 0);
        assert!(f0.contains(&x(r)));
        assert_eq!(f0.gens.len(), 1);

        let m = koszul_module();
        // 2-minors of a 2x1 matrix do not exist: Fitt_0 = (0)
        assert!(fitting_ideal(&m, 0).is_zero_ideal());
        let f1 = fitting_ideal(&m, 1);
        assert!(f1.contains(&x(r)));
        assert!(f1.contains(&y(r)));

        assert!(fitting_ideal(&m, 2).is_unit_ideal());
        assert!(fitting_ideal(&m, 5).is_unit_ideal());
    }

    #[test]
    fn fitting_ideal_stable_under_redundant_column() {
        let r = ring2();
        let m = koszul_module();
        // add the doubled relation column: same module, same Fitting ideals
        let col = FreeVector::from_comps(vec![x(r), y(r)]);
        let doubled = col.scale_poly(&Polynomial::from_int(r, 2));
        let m2 = PresentedModule::new(r, 2, vec![col, doubled]).unwrap();
        for t in 0..=2 {
            let a = fitting_ideal(&m, t);
            let b = fitting_ideal(&m2, t);
            for g in &a.gens {
                assert!(b.contains(g));
            }
            for g in &b.gens {
                assert!(a.contains(g));
            }
        }
    }

    #[test]
    fn mu_at_examples() {
        let r = ring2();
        let m = koszul_module();
        assert_eq!(mu_at(&m, &origin(r)).unwrap(), 2);
        assert_eq!(mu_at(&m, &point(r, 1, 0)).unwrap(), 1);
        let free3 = PresentedModule::free(r, 3);
        assert_eq!(mu_at(&free3, &point(r, 2, 5)).unwrap(), 3);
    }

    #[test]
    fn delta_at_examples() {
        let r = ring2();
        let free2 = PresentedModule::free(r, 2);
        let gens = free2.standard_generators();
        let dual = hom_dual(&free2);
        assert_eq!(delta_at(&free2, &gens, &dual, &origin(r)).unwrap(), 2);

        let m = koszul_module();
        let gens = m.standard_generators();
        let dual = hom_dual(&m);
        assert_eq!(delta_at(&m, &gens, &dual, &origin(r)).unwrap(), 0);
        assert_eq!(delta_at(&m, &gens, &dual, &point(r, 1, 0)).unwrap(), 1);
        // empty element list
        assert_eq!(delta_at(&m, &[], &dual, &origin(r)).unwrap(), 0);
    }

    #[test]
    fn trace_ideal_examples() {
        let r = ring2();
        let free2 = PresentedModule::free(r, 2);
        let t = trace_ideal(&free2, &hom_dual(&free2), &free2.standard_generators()).unwrap();
        assert!(t.is_unit_ideal());

        let m = koszul_module();
        let t = trace_ideal(&m, &hom_dual(&m), &m.standard_generators()).unwrap();
        assert!(!t.is_unit_ideal());
        assert!(t.contains(&x(r)));
        assert!(t.contains(&y(r)));

        let torsion =
            PresentedModule::new(r, 1, vec![FreeVector::from_comps(vec![x(r)])]).unwrap();
        let t = trace_ideal(&torsion, &hom_dual(&torsion), &torsion.standard_generators()).unwrap();
        assert!(t.is_zero_ideal());
    }

    #[test]
    fn delta_invariant_under_regenerated_hom_generators() {
        // replacing E's generator list by row operations of the same span
        // leaves delta unchanged
        let r = ring2();
        let m = koszul_module();
        let dual = hom_dual(&m);
        let f = &dual.gens[0];
        let doubled = f.scale_poly(&Polynomial::from_int(r, 2));
        let shifted = f.add(&doubled).unwrap();
        let regenerated = HomSubmodule::new(&m, vec![doubled, shifted, f.clone()]).unwrap();
        let gens = m.standard_generators();
        for p in [origin(r), point(r, 1, 0), point(r, 2, -3)] {
            assert_eq!(
                delta_at(&m, &gens, &dual, &p).unwrap(),
                delta_at(&m, &gens, &regenerated, &p).unwrap()
            );
        }
    }
}
