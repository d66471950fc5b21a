//! Maximal ideals and exact residue-field arithmetic.
//!
//! Rational points evaluate directly into the coefficient field. General
//! maximal ideals are given by generators of a zero-dimensional ideal;
//! residue classes are normal forms modulo its Gröbner basis, and inversion
//! solves a finite-dimensional linear system. A failed inversion of a nonzero
//! class proves the ideal was not maximal and surfaces as `NotAField`.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{krull_dim, GroebnerBasis, Ideal};
use crate::linalg::{self, Scalar};
use crate::poly::{mono_cmp_unchecked, Monomial, Polynomial, Ring};
use std::cmp::Ordering;
use std::sync::Arc;

/// A maximal ideal of the polynomial ring: either a rational point or a
/// zero-dimensional ideal whose quotient is checked to be a field lazily.
#[derive(Debug, Clone, PartialEq)]
pub enum MaximalIdealSpec {
    Point(Vec<FieldElement>),
    General(Ideal),
}

impl MaximalIdealSpec {
    pub fn point(coords: Vec<FieldElement>) -> Self {
        MaximalIdealSpec::Point(coords)
    }

    /// Wraps an ideal after checking the quotient is zero-dimensional.
    pub fn general(ideal: Ideal) -> Result<Self> {
        let d = krull_dim(&ideal);
        if d != 0 {
            return Err(Error::NotAField(format!(
                "quotient has Krull dimension {d}, expected 0"
            )));
        }
        Ok(MaximalIdealSpec::General(ideal))
    }

    pub fn check_arity(&self, ring: &Ring) -> Result<()> {
        match self {
            MaximalIdealSpec::Point(coords) => {
                if coords.len() != ring.vars {
                    return Err(Error::ArityMismatch { expected: ring.vars, got: coords.len() });
                }
                Ok(())
            }
            MaximalIdealSpec::General(ideal) => {
                if ideal.ring.compatible(ring) {
                    Ok(())
                } else {
                    Err(Error::RingMismatch)
                }
            }
        }
    }
}

/// Residue-class context shared by all classes of one computation.
#[derive(Debug)]
pub struct ResidueCtx {
    pub ring: Ring,
    gb: GroebnerBasis,
    std_monos: Vec<Monomial>,
}

impl ResidueCtx {
    fn new(ideal: &Ideal) -> Result<Arc<Self>> {
        let gb = ideal.groebner();
        if gb.is_unit() {
            return Err(Error::NotAField("ideal is the unit ideal".into()));
        }
        let ring = ideal.ring;
        let lts: Vec<Monomial> = gb.leading_terms().iter().map(|(_, m)| m.clone()).collect();
        // standard monomials: not divisible by any leading term; finite in
        // dimension zero
        let mut found: Vec<Monomial> = Vec::new();
        let mut frontier = vec![Monomial::one(ring.vars)];
        const CAP: usize = 20_000;
        while let Some(m) = frontier.pop() {
            if found.contains(&m) {
                continue;
            }
            if lts.iter().any(|lt| lt.divides(&m)) {
                continue;
            }
            found.push(m.clone());
            if found.len() > CAP {
                return Err(Error::NotAField("residue ring is not finite-dimensional".into()));
            }
            for i in 0..ring.vars {
                frontier.push(m.mul(&Monomial::var(ring.vars, i)));
            }
        }
        found.sort_by(|a, b| mono_cmp_unchecked(a, b, ring.order));
        Ok(Arc::new(ResidueCtx { ring, gb: (*gb).clone(), std_monos: found }))
    }

    pub fn dimension(&self) -> usize {
        self.std_monos.len()
    }

    fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.gb.normal_form_poly(p).reorder(self.ring)
    }

    /// Coordinates of a reduced polynomial in the standard-monomial basis.
    fn coords(&self, p: &Polynomial) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::zero(self.ring.field); self.std_monos.len()];
        for (c, m) in &p.terms {
            let idx = self
                .std_monos
                .iter()
                .position(|s| s == m)
                .expect("normal form lies in the standard-monomial span");
            out[idx] = c.clone();
        }
        out
    }
}

/// A residue class modulo a zero-dimensional ideal, stored in normal form.
#[derive(Debug, Clone)]
pub struct Residue {
    pub poly: Polynomial,
    ctx: Arc<ResidueCtx>,
}

impl Residue {
    fn wrap(ctx: &Arc<ResidueCtx>, p: &Polynomial) -> Self {
        Residue { poly: ctx.reduce(p), ctx: ctx.clone() }
    }
}

impl Scalar for Residue {
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        // sums of normal forms stay reduced
        Residue { poly: self.poly.add_unchecked(&other.poly), ctx: self.ctx.clone() }
    }

    fn sub(&self, other: &Self) -> Self {
        Residue { poly: self.poly.add_unchecked(&other.poly.neg()), ctx: self.ctx.clone() }
    }

    fn mul(&self, other: &Self) -> Self {
        Residue {
            poly: self.ctx.reduce(&self.poly.mul_unchecked(&other.poly)),
            ctx: self.ctx.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.poly.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let ctx = &self.ctx;
        let n = ctx.std_monos.len();
        // columns: coordinates of f * b for each standard monomial b
        let mut cols: Vec<Vec<FieldElement>> = Vec::with_capacity(n);
        for b in &ctx.std_monos {
            let fb = ctx.reduce(&self.poly.mul_term(
                &FieldElement::one(ctx.ring.field),
                b,
            ));
            cols.push(ctx.coords(&fb));
        }
        let matrix: Vec<Vec<FieldElement>> =
            (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect();
        let rhs = ctx.coords(&Polynomial::one(ctx.ring));
        match linalg::solve(&matrix, &rhs, FieldElement::zero(ctx.ring.field))? {
            Some(sol) => {
                let terms = sol
                    .into_iter()
                    .zip(&ctx.std_monos)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, m)| (c, m.clone()))
                    .collect();
                Ok(Residue { poly: Polynomial::from_terms(ctx.ring, terms), ctx: ctx.clone() })
            }
            None => Err(Error::NotAField(
                "nonzero residue class has no inverse; the ideal is not maximal".into(),
            )),
        }
    }
}

/// Rank of a matrix of polynomials over the residue field at `m`.
pub fn residue_rank(ring: &Ring, matrix: &[Vec<Polynomial>], m: &MaximalIdealSpec) -> Result<usize> {
    m.check_arity(ring)?;
    match m {
        MaximalIdealSpec::Point(coords) => {
            let eval: Vec<Vec<FieldElement>> = matrix
                .iter()
                .map(|row| row.iter().map(|p| p.evaluate(coords)).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            linalg::rank(&eval)
        }
        MaximalIdealSpec::General(ideal) => {
            let ctx = ResidueCtx::new(ideal)?;
            let wrapped: Vec<Vec<Residue>> = matrix
                .iter()
                .map(|row| row.iter().map(|p| Residue::wrap(&ctx, p)).collect())
                .collect();
            linalg::rank(&wrapped)
        }
    }
}

/// True when `p` lies in the maximal ideal (vanishes in the residue field).
pub fn vanishes_at(ring: &Ring, p: &Polynomial, m: &MaximalIdealSpec) -> Result<bool> {
    m.check_arity(ring)?;
    match m {
        MaximalIdealSpec::Point(coords) => Ok(p.evaluate(coords)?.is_zero()),
        MaximalIdealSpec::General(ideal) => Ok(ideal.groebner().normal_form_poly(p).is_zero()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::MonomialOrder;

    fn ring2() -> Ring {
        Ring::new(Field::Rational, 2, MonomialOrder::GrevLex)
    }

    #[test]
    fn non_zero_dimensional_ideal_rejected() {
        let r = ring2();
        let i = Ideal::new(r, vec![Polynomial::var(r, 0)]);
        assert!(matches!(MaximalIdealSpec::general(i), Err(Error::NotAField(_))));
    }

    #[test]
    fn residue_field_with_irreducible_generator() {
        // m = (x^2 + 1, y): residue field Q(i)
        let r = ring2();
        let x = Polynomial::var(r, 0);
        let y = Polynomial::var(r, 1);
        let x2p1 = x.mul(&x).unwrap().add(&Polynomial::one(r)).unwrap();
        let m = MaximalIdealSpec::general(Ideal::new(r, vec![x2p1, y.clone()])).unwrap();
        // rank of [[x]] over Q(i) is 1 since x is invertible there
        assert_eq!(residue_rank(&r, &[vec![x.clone()]], &m).unwrap(), 1);
        assert!(vanishes_at(&r, &y, &m).unwrap());
        assert!(!vanishes_at(&r, &x, &m).unwrap());
    }

    #[test]
    fn non_maximal_zero_dimensional_ideal_fails_on_inversion() {
        // (x^2, y) is zero-dimensional but not maximal: x is a nonzero
        // nilpotent, so inverting it must fail
        let r = ring2();
        let x = Polynomial::var(r, 0);
        let y = Polynomial::var(r, 1);
        let m = MaximalIdealSpec::general(Ideal::new(
            r,
            vec![x.mul(&x).unwrap(), y],
        ))
        .unwrap();
        let err = residue_rank(&r, &[vec![x]], &m);
        assert!(matches!(err, Err(Error::NotAField(_))));
    }

    #[test]
    fn point_rank() {
        let r = ring2();
        let x = Polynomial::var(r, 0);
        let y = Polynomial::var(r, 1);
        let m = MaximalIdealSpec::point(vec![
            FieldElement::from_int(r.field, 0),
            FieldElement::from_int(r.field, 0),
        ]);
        assert_eq!(residue_rank(&r, &[vec![x.clone()], vec![y.clone()]], &m).unwrap(), 0);
        let m1 = MaximalIdealSpec::point(vec![
            FieldElement::from_int(r.field, 1),
            FieldElement::from_int(r.field, 0),
        ]);
        assert_eq!(residue_rank(&r, &[vec![x], vec![y]], &m1).unwrap(), 1);
    }
}
