//! Smith normal form over a univariate polynomial ring.
//!
//! This is the independent PID-structure oracle: it decomposes a presented
//! module over `k[t]` into invariant factors plus a free part, with the
//! transformation matrices returned and re-checked exactly.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::modules::{determinant, PresentedModule};
use crate::poly::{Monomial, Polynomial, Ring};

#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    /// Unimodular row transform (g x g).
    pub u: Vec<Vec<Polynomial>>,
    /// Unimodular column transform (c x c).
    pub v: Vec<Vec<Polynomial>>,
    /// The diagonal of `U * A * V`, nonzero entries first, monic, each
    /// dividing the next.
    pub invariant_factors: Vec<Polynomial>,
    /// `g` minus the number of nonzero invariant factors.
    pub free_rank: usize,
}

/// Quotient and remainder of univariate polynomial division.
fn divrem(f: &Polynomial, g: &Polynomial) -> (Polynomial, Polynomial) {
    assert!(!g.is_zero());
    let ring = f.ring;
    let mut rem = f.clone();
    let mut quo = Polynomial::zero(ring);
    let gd = g.total_degree().unwrap();
    let glc = g.terms[0].0.clone();
    while !rem.is_zero() {
        let rd = rem.total_degree().unwrap();
        if rd < gd {
            break;
        }
        let rlc = rem.terms[0].0.clone();
        let coeff = rlc.div(&glc).expect("nonzero leading coefficient");
        let mono = Monomial(vec![rd - gd]);
        let term = Polynomial::from_terms(ring, vec![(coeff, mono)]);
        quo = quo.add_unchecked(&term);
        rem = rem.add_unchecked(&g.mul_unchecked(&term).neg());
    }
    (quo, rem)
}

fn identity_matrix(ring: Ring, n: usize) -> Vec<Vec<Polynomial>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) })
                .collect()
        })
        .collect()
}

fn mat_mul(ring: Ring, a: &[Vec<Polynomial>], b: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut acc = Polynomial::zero(ring);
                    for k in 0..inner {
                        acc = acc.add_unchecked(&a[i][k].mul_unchecked(&b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Computes the Smith normal form `U * A * V = D` of the relation matrix and
/// reads off invariant factors and free rank. Fails with `NotUnivariate` on
/// rings with more than one variable.
pub fn snf_decompose(module: &PresentedModule) -> Result<SmithDecomposition> {
    let ring = module.ring;
    if ring.vars != 1 {
        return Err(Error::NotUnivariate);
    }
    let g = module.rank;
    let cols = module.column_count();
    // working copy: g x c
    let mut d: Vec<Vec<Polynomial>> = module.matrix_rows();
    let mut u = identity_matrix(ring, g);
    let mut v = identity_matrix(ring, cols);

    let deg = |p: &Polynomial| p.total_degree().map(|d| d as i64).unwrap_or(-1);

    let steps_cap = 100_000;
    let mut steps = 0;
    for k in 0..g.min(cols) {
        'pivot: loop {
            steps += 1;
            assert!(steps < steps_cap, "Smith normal form did not stabilize");
            // minimal-degree nonzero entry in the trailing submatrix
            let mut best: Option<(usize, usize)> = None;
            for i in k..g {
                for j in k..cols {
                    if !d[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| deg(&d[i][j]) < deg(&d[bi][bj]))
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'pivot };
            d.swap(k, pi);
            u.swap(k, pi);
            if pj != k {
                for row in d.iter_mut() {
                    row.swap(k, pj);
                }
                for row in v.iter_mut() {
                    row.swap(k, pj);
                }
            }

            let mut dirty = false;
            // clear the pivot column
            for i in (k + 1)..g {
                if d[i][k].is_zero() {
                    continue;
                }
                let (q, r) = divrem(&d[i][k], &d[k][k]);
                for j in 0..cols {
                    let t = q.mul_unchecked(&d[k][j]);
                    d[i][j] = d[i][j].add_unchecked(&t.neg());
                }
                for j in 0..g {
                    let t = q.mul_unchecked(&u[k][j]);
                    u[i][j] = u[i][j].add_unchecked(&t.neg());
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            // clear the pivot row
            for j in (k + 1)..cols {
                if d[k][j].is_zero() {
                    continue;
                }
                let (q, r) = divrem(&d[k][j], &d[k][k]);
                for i in 0..g {
                    let t = q.mul_unchecked(&d[i][k]);
                    d[i][j] = d[i][j].add_unchecked(&t.neg());
                }
                for i in 0..cols {
                    let t = q.mul_unchecked(&v[i][k]);
                    v[i][j] = v[i][j].add_unchecked(&t.neg());
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // pivot row and column clear; enforce pivot | trailing entries
            let mut offender = None;
            'scan: for i in (k + 1)..g {
                for j in (k + 1)..cols {
                    if !d[i][j].is_zero() {
                        let (_, r) = divrem(&d[i][j], &d[k][k]);
                        if !r.is_zero() {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
            }
            match offender {
                Some(i) => {
                    // fold the offending row into the pivot row and repeat
                    for j in 0..cols {
                        d[k][j] = d[k][j].add_unchecked(&d[i][j].clone());
                    }
                    for j in 0..g {
                        u[k][j] = u[k][j].add_unchecked(&u[i][j].clone());
                    }
                    continue 'pivot;
                }
                None => break 'pivot,
            }
        }
    }

    // monic normalization of the nonzero diagonal
    for k in 0..g.min(cols) {
        if d[k][k].is_zero() {
            continue;
        }
        let lc = d[k][k].terms[0].0.clone();
        if !lc.is_one() {
            let inv = lc.inverse().expect("nonzero leading coefficient");
            for j in 0..cols {
                d[k][j] = d[k][j].scale(&inv);
            }
            for j in 0..g {
                u[k][j] = u[k][j].scale(&inv);
            }
        }
    }

    let invariant_factors: Vec<Polynomial> =
        (0..g.min(cols)).map(|k| d[k][k].clone()).filter(|p| !p.is_zero()).collect();

    // exactness and unimodularity checks
    let ua = mat_mul(ring, &u, &module.matrix_rows());
    let uav = mat_mul(ring, &ua, &v);
    for (i, row) in uav.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let expect = if i == j && i < invariant_factors.len() {
                invariant_factors[i].clone()
            } else {
                Polynomial::zero(ring)
            };
            if *p != expect {
                return Err(Error::CertificateInvalid("U*A*V is not the Smith diagonal".into()));
            }
        }
    }
    for m in [&u, &v] {
        let det = determinant(ring, m);
        if det.constant_value().map_or(true, |c: FieldElement| c.is_zero()) {
            return Err(Error::CertificateInvalid("transform is not unimodular".into()));
        }
    }
    for w in invariant_factors.windows(2) {
        let (_, r) = divrem(&w[1], &w[0]);
        if !r.is_zero() {
            return Err(Error::CertificateInvalid("invariant factors do not divide".into()));
        }
    }

    let free_rank = g - invariant_factors.len();
    Ok(SmithDecomposition { u, v, invariant_factors, free_rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::{FreeVector, MonomialOrder};

    fn ring1() -> Ring {
        Ring::new(Field::Rational, 1, MonomialOrder::GrevLex)
    }

    fn t(r: Ring) -> Polynomial {
        Polynomial::var(r, 0)
    }

    #[test]
    fn diagonal_input() {
        let r = ring1();
        let t2 = t(r).mul(&t(r)).unwrap();
        let cols = vec![
            FreeVector::from_comps(vec![t(r), Polynomial::zero(r)]),
            FreeVector::from_comps(vec![Polynomial::zero(r), t2.clone()]),
        ];
        let m = PresentedModule::new(r, 2, cols).unwrap();
        let snf = snf_decompose(&m).unwrap();
        assert_eq!(snf.invariant_factors, vec![t(r), t2]);
        assert_eq!(snf.free_rank, 0);
    }

    #[test]
    fn unimodular_column_gives_free_rank_one() {
        // column (t, 1): gcd is 1, free rank 1
        let r = ring1();
        let cols = vec![FreeVector::from_comps(vec![t(r), Polynomial::one(r)])];
        let m = PresentedModule::new(r, 2, cols).unwrap();
        let snf = snf_decompose(&m).unwrap();
        assert_eq!(snf.invariant_factors, vec![Polynomial::one(r)]);
        assert_eq!(snf.free_rank, 1);
    }

    #[test]
    fn zero_matrix_is_fully_free() {
        let r = ring1();
        let m = PresentedModule::free(r, 2);
        let snf = snf_decompose(&m).unwrap();
        assert!(snf.invariant_factors.is_empty());
        assert_eq!(snf.free_rank, 2);
    }

    #[test]
    fn multivariate_rejected() {
        let r = Ring::new(Field::Rational, 2, MonomialOrder::GrevLex);
        let m = PresentedModule::free(r, 1);
        assert_eq!(snf_decompose(&m).unwrap_err(), Error::NotUnivariate);
    }

    #[test]
    fn divisibility_fixup() {
        // matrix diag(t, t+1): invariant factors become (1, t^2 + t)
        let r = ring1();
        let tp1 = t(r).add(&Polynomial::one(r)).unwrap();
        let cols = vec![
            FreeVector::from_comps(vec![t(r), Polynomial::zero(r)]),
            FreeVector::from_comps(vec![Polynomial::zero(r), tp1.clone()]),
        ];
        let m = PresentedModule::new(r, 2, cols).unwrap();
        let snf = snf_decompose(&m).unwrap();
        assert_eq!(snf.invariant_factors.len(), 2);
        assert_eq!(snf.invariant_factors[0], Polynomial::one(r));
        assert_eq!(snf.invariant_factors[1], t(r).mul(&tp1).unwrap());
        assert_eq!(snf.free_rank, 0);
    }
}
