//! Multivariate monomials, monomial orders, polynomials, and vectors of
//! polynomials over a coefficient field.
//!
//! Terms are kept sorted strictly descending under the ring's order, with no
//! zero coefficients and no duplicate monomials, so equal polynomials have
//! identical representations.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use std::cmp::Ordering;
use std::fmt;

/// A total, multiplicative well-order on monomials.
///
/// `Block { first }` is the elimination order that ranks the first `first`
/// variables above the rest: grevlex on the first block, ties broken by
/// grevlex on the remaining block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block { first: usize },
}

/// Ring descriptor: coefficient field, variable count, and default order.
/// Variables are identified by index; names are CLI-level metadata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    pub field: Field,
    pub vars: usize,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(field: Field, vars: usize, order: MonomialOrder) -> Self {
        Ring { field, vars, order }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Ring { order, ..*self }
    }

    /// Same field and variable count; the order may differ.
    pub fn compatible(&self, other: &Ring) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

/// Dense exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn var(vars: usize, index: usize) -> Self {
        let mut e = vec![0; vars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Support is contained in the variable set marked true.
    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e == 0 || allowed[i])
    }
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // last nonzero entry of a - b: negative means a > b
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {}
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// Compares two monomials of equal arity under `ord`.
pub fn mono_compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.0.len() != b.0.len() {
        return Err(Error::ArityMismatch { expected: a.0.len(), got: b.0.len() });
    }
    Ok(mono_cmp_unchecked(a, b, ord))
}

pub(crate) fn mono_cmp_unchecked(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Ordering {
    match ord {
        MonomialOrder::Lex => lex_cmp(&a.0, &b.0),
        MonomialOrder::GrevLex => grevlex_cmp(&a.0, &b.0),
        MonomialOrder::Block { first } => {
            let k = first.min(a.0.len());
            match grevlex_cmp(&a.0[..k], &b.0[..k]) {
                Ordering::Equal => grevlex_cmp(&a.0[k..], &b.0[k..]),
                o => o,
            }
        }
    }
}

/// A polynomial in canonical form: terms strictly descending under the
/// ring's order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub ring: Ring,
    pub terms: Vec<(FieldElement, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn one(ring: Ring) -> Self {
        Polynomial::constant(ring, FieldElement::one(ring.field))
    }

    pub fn constant(ring: Ring, c: FieldElement) -> Self {
        if c.is_zero() {
            Polynomial::zero(ring)
        } else {
            Polynomial { ring, terms: vec![(c, Monomial::one(ring.vars))] }
        }
    }

    pub fn var(ring: Ring, index: usize) -> Self {
        Polynomial {
            ring,
            terms: vec![(FieldElement::one(ring.field), Monomial::var(ring.vars, index))],
        }
    }

    pub fn from_int(ring: Ring, n: i64) -> Self {
        Polynomial::constant(ring, FieldElement::from_int(ring.field, n))
    }

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(ring: Ring, terms: Vec<(FieldElement, Monomial)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|x, y| mono_cmp_unchecked(&y.1, &x.1, ring.order));
        let mut out: Vec<(FieldElement, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = last.0.add(&c).expect("same field");
                    continue;
                }
            }
            out.push((c, m));
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial { ring, terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, m)| m.is_one())
    }

    /// The constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<FieldElement> {
        if self.is_zero() {
            Some(FieldElement::zero(self.ring.field))
        } else if self.is_constant() {
            Some(self.terms[0].0.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        // merge two descending term lists
        let ord = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match mono_cmp_unchecked(&self.terms[i].1, &other.terms[j].1, ord) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].0.add(&other.terms[j].0).expect("same field");
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring, terms: out }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut acc: Vec<(FieldElement, Monomial)> = Vec::new();
        for (c, m) in &self.terms {
            for (d, n) in &other.terms {
                acc.push((c.mul(d).expect("same field"), m.mul(n)));
            }
        }
        Polynomial::from_terms(self.ring, acc)
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, coeff: &FieldElement, mono: &Monomial) -> Self {
        if coeff.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.mul(coeff).expect("same field"), m.mul(mono)))
                .collect(),
        }
    }

    pub fn scale(&self, coeff: &FieldElement) -> Self {
        self.mul_term(coeff, &Monomial::one(self.ring.vars))
    }

    /// Leading term under an explicit order (not necessarily the ring's).
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(FieldElement, Monomial)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if ord == self.ring.order {
            return Ok(self.terms[0].clone());
        }
        let mut best = &self.terms[0];
        for t in &self.terms[1..] {
            if mono_cmp_unchecked(&t.1, &best.1, ord) == Ordering::Greater {
                best = t;
            }
        }
        Ok(best.clone())
    }

    /// Re-sorts the term list for a ring with a different default order.
    pub fn reorder(&self, ring: Ring) -> Self {
        debug_assert!(self.ring.compatible(&ring));
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Exact evaluation at a point.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.ring.vars {
            return Err(Error::ArityMismatch { expected: self.ring.vars, got: point.len() });
        }
        let mut acc = FieldElement::zero(self.ring.field);
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for all variables (used for Sym-side checks
    /// and for transporting between rings of different arity).
    pub fn substitute(&self, target: Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.vars {
            return Err(Error::ArityMismatch { expected: self.ring.vars, got: images.len() });
        }
        let mut acc = Polynomial::zero(target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul_unchecked(&images[i]);
                }
            }
            acc = acc.add_unchecked(&t);
        }
        Ok(acc)
    }

    /// True if every monomial avoids the first `k` variables.
    pub fn free_of_first(&self, k: usize) -> bool {
        self.terms.iter().all(|(_, m)| m.0[..k].iter().all(|&e| e == 0))
    }

    /// Checks the canonical-form invariant (tests scan results with this).
    pub fn is_canonical(&self) -> bool {
        if self.terms.iter().any(|(c, _)| c.is_zero()) {
            return false;
        }
        self.terms.windows(2).all(|w| {
            mono_cmp_unchecked(&w[0].1, &w[1].1, self.ring.order) == Ordering::Greater
        })
    }
}

/// The three ring operations exposed by the CLI layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    match op {
        PolyOp::Add => f.add(g),
        PolyOp::Sub => f.sub(g),
        PolyOp::Mul => f.mul(g),
    }
}

/// An element of a free module `R^g`: `g` polynomials over one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeVector {
    pub ring: Ring,
    pub comps: Vec<Polynomial>,
}

impl FreeVector {
    pub fn zero(ring: Ring, rank: usize) -> Self {
        FreeVector { ring, comps: vec![Polynomial::zero(ring); rank] }
    }

    pub fn unit(ring: Ring, rank: usize, index: usize) -> Self {
        let mut v = FreeVector::zero(ring, rank);
        v.comps[index] = Polynomial::one(ring);
        v
    }

    pub fn from_comps(comps: Vec<Polynomial>) -> Self {
        assert!(!comps.is_empty(), "rank-0 vectors carry a ring explicitly");
        let ring = comps[0].ring;
        debug_assert!(comps.iter().all(|p| p.ring == ring));
        FreeVector { ring, comps }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::ArityMismatch { expected: self.rank(), got: other.rank() });
        }
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(FreeVector { ring: self.ring, comps })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FreeVector { ring: self.ring, comps: self.comps.iter().map(|p| p.neg()).collect() }
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Self {
        FreeVector {
            ring: self.ring,
            comps: self.comps.iter().map(|c| c.mul_unchecked(p)).collect(),
        }
    }

    pub fn mul_term(&self, coeff: &FieldElement, mono: &Monomial) -> Self {
        FreeVector {
            ring: self.ring,
            comps: self.comps.iter().map(|c| c.mul_term(coeff, mono)).collect(),
        }
    }

    /// Dot product with another vector of the same rank.
    pub fn dot(&self, other: &Self) -> Result<Polynomial> {
        if self.rank() != other.rank() {
            return Err(Error::ArityMismatch { expected: self.rank(), got: other.rank() });
        }
        let mut acc = Polynomial::zero(self.ring);
        for (a, b) in self.comps.iter().zip(&other.comps) {
            acc = acc.add(&a.mul(b)?)?;
        }
        Ok(acc)
    }

    pub fn reorder(&self, ring: Ring) -> Self {
        FreeVector { ring, comps: self.comps.iter().map(|p| p.reorder(ring)).collect() }
    }
}

impl fmt::Display for Polynomial {
    /// Debug-oriented printing with generated names x0, x1, ...; the CLI
    /// printer substitutes declared names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.ring.vars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", crate::render::poly_string(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2(order: MonomialOrder) -> Ring {
        Ring::new(Field::Rational, 2, order)
    }

    fn ring3(order: MonomialOrder) -> Ring {
        Ring::new(Field::Rational, 3, order)
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn lex_first_exponent_decides() {
        // xz vs y^2 under lex x>y>z
        let a = mono(&[1, 0, 1]);
        let b = mono(&[0, 2, 0]);
        assert_eq!(mono_compare(&a, &b, MonomialOrder::Lex).unwrap(), Ordering::Greater);
    }

    #[test]
    fn grevlex_equal_degree_uses_last_difference() {
        // xz vs y^2 under grevlex: difference (1,-2,1), last nonzero positive => xz smaller
        let a = mono(&[1, 0, 1]);
        let b = mono(&[0, 2, 0]);
        assert_eq!(mono_compare(&a, &b, MonomialOrder::GrevLex).unwrap(), Ordering::Less);
    }

    #[test]
    fn equal_monomials_compare_equal() {
        let a = mono(&[2, 1, 0]);
        assert_eq!(mono_compare(&a, &a, MonomialOrder::GrevLex).unwrap(), Ordering::Equal);
        assert_eq!(mono_compare(&a, &a, MonomialOrder::Lex).unwrap(), Ordering::Equal);
    }

    #[test]
    fn arity_mismatch_detected() {
        let a = mono(&[1, 0]);
        let b = mono(&[1, 0, 0]);
        assert!(matches!(
            mono_compare(&a, &b, MonomialOrder::GrevLex),
            Err(Error::ArityMismatch { .. })
        ));
    }

    // brute-force oracle: all degree-2 monomials in 3 vars, sorted descending
    // by hand for grevlex x>y>z
    #[test]
    fn grevlex_order_on_degree_two_matches_reference() {
        let expected = vec![
            mono(&[2, 0, 0]), // x^2
            mono(&[1, 1, 0]), // xy
            mono(&[0, 2, 0]), // y^2
            mono(&[1, 0, 1]), // xz
            mono(&[0, 1, 1]), // yz
            mono(&[0, 0, 2]), // z^2
        ];
        let mut all = expected.clone();
        all.reverse();
        all.sort_by(|a, b| mono_cmp_unchecked(b, a, MonomialOrder::GrevLex));
        assert_eq!(all, expected);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        // any monomial containing the first variable beats any without it
        let a = mono(&[1, 0, 0]);
        let b = mono(&[0, 5, 5]);
        let ord = MonomialOrder::Block { first: 1 };
        assert_eq!(mono_compare(&a, &b, ord).unwrap(), Ordering::Greater);
    }

    fn x(r: Ring) -> Polynomial {
        Polynomial::var(r, 0)
    }

    fn y(r: Ring) -> Polynomial {
        Polynomial::var(r, 1)
    }

    #[test]
    fn add_cancels_to_canonical() {
        let r = ring2(MonomialOrder::GrevLex);
        let f = x(r).add(&y(r)).unwrap();
        let g = x(r).sub(&y(r)).unwrap();
        let sum = f.add(&g).unwrap();
        assert_eq!(sum, x(r).scale(&FieldElement::from_int(r.field, 2)));
        assert!(sum.is_canonical());
    }

    #[test]
    fn product_of_conjugates() {
        let r = ring2(MonomialOrder::GrevLex);
        let f = x(r).add(&y(r)).unwrap();
        let g = x(r).sub(&y(r)).unwrap();
        let prod = f.mul(&g).unwrap();
        let expected = x(r).mul(&x(r)).unwrap().sub(&y(r).mul(&y(r)).unwrap()).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn additive_inverse_gives_empty_terms() {
        let r = ring2(MonomialOrder::GrevLex);
        let f = x(r).add(&Polynomial::one(r)).unwrap();
        let z = f.add(&f.neg()).unwrap();
        assert!(z.is_zero());
        assert!(z.terms.is_empty());
    }

    #[test]
    fn leading_term_grevlex() {
        // x^2 + xy + y: leading term x^2
        let r = ring2(MonomialOrder::GrevLex);
        let f = Polynomial::from_terms(
            r,
            vec![
                (FieldElement::one(r.field), mono(&[2, 0])),
                (FieldElement::one(r.field), mono(&[1, 1])),
                (FieldElement::one(r.field), mono(&[0, 1])),
            ],
        );
        let (c, m) = f.leading_term(MonomialOrder::GrevLex).unwrap();
        assert!(c.is_one());
        assert_eq!(m, mono(&[2, 0]));
    }

    #[test]
    fn leading_term_lex_ignores_degree() {
        let r = ring2(MonomialOrder::Lex);
        // y^5 + x
        let f = Polynomial::from_terms(
            r,
            vec![
                (FieldElement::one(r.field), mono(&[0, 5])),
                (FieldElement::one(r.field), mono(&[1, 0])),
            ],
        );
        let (_, m) = f.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m, mono(&[1, 0]));
    }

    #[test]
    fn leading_term_of_zero_fails() {
        let r = ring2(MonomialOrder::GrevLex);
        assert_eq!(
            Polynomial::zero(r).leading_term(MonomialOrder::GrevLex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn evaluate_examples() {
        let r = ring2(MonomialOrder::GrevLex);
        let f = x(r).mul(&x(r)).unwrap().add(&y(r)).unwrap(); // x^2 + y
        let at = |a: i64, b: i64| {
            vec![FieldElement::from_int(r.field, a), FieldElement::from_int(r.field, b)]
        };
        assert_eq!(f.evaluate(&at(2, 3)).unwrap(), FieldElement::from_int(r.field, 7));
        // at zero: constant term
        let g = f.add(&Polynomial::from_int(r, 5)).unwrap();
        assert_eq!(g.evaluate(&at(0, 0)).unwrap(), FieldElement::from_int(r.field, 5));
        // xy - 1 at (1,1)
        let h = x(r).mul(&y(r)).unwrap().sub(&Polynomial::one(r)).unwrap();
        assert!(h.evaluate(&at(1, 1)).unwrap().is_zero());
    }

    #[test]
    fn evaluate_arity_mismatch() {
        let r = ring3(MonomialOrder::GrevLex);
        let f = Polynomial::var(r, 2);
        assert!(matches!(
            f.evaluate(&[FieldElement::zero(r.field)]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r = ring2(MonomialOrder::GrevLex);
        let s = ring3(MonomialOrder::GrevLex);
        assert_eq!(x(r).add(&x(s)), Err(Error::RingMismatch));
    }

    #[test]
    fn dot_product() {
        let r = ring2(MonomialOrder::GrevLex);
        let v = FreeVector::from_comps(vec![y(r).neg(), x(r)]);
        let w = FreeVector::from_comps(vec![x(r), y(r)]);
        assert!(v.dot(&w).unwrap().is_zero());
    }
}
