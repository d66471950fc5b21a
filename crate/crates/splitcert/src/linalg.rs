//! Exact dense linear algebra over any field-like scalar.
//!
//! The scalar abstraction lets the same elimination run over `FieldElement`
//! and over residue-class arithmetic modulo a zero-dimensional ideal, where a
//! failed inversion of a nonzero element is a meaningful outcome (the ideal
//! was not maximal).

use crate::error::Result;

pub trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; errs with `NotAField` semantics when the
    /// scalar domain is not actually a field.
    fn inv(&self) -> Result<Self>;
}

impl Scalar for crate::field::FieldElement {
    fn is_zero(&self) -> bool {
        crate::field::FieldElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        crate::field::FieldElement::add(self, other).expect("same field")
    }
    fn sub(&self, other: &Self) -> Self {
        crate::field::FieldElement::sub(self, other).expect("same field")
    }
    fn mul(&self, other: &Self) -> Self {
        crate::field::FieldElement::mul(self, other).expect("same field")
    }
    fn inv(&self) -> Result<Self> {
        self.inverse()
    }
}

/// Row-echelon elimination in place. Returns the pivot columns.
fn echelonize<S: Scalar>(m: &mut Vec<Vec<S>>) -> Result<Vec<usize>> {
    let rows = m.len();
    if rows == 0 {
        return Ok(Vec::new());
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv()?;
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let t = factor.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank<S: Scalar>(matrix: &[Vec<S>]) -> Result<usize> {
    let mut m: Vec<Vec<S>> = matrix.to_vec();
    Ok(echelonize(&mut m)?.len())
}

/// Solves `A x = b`; returns one solution or `None` when inconsistent.
pub fn solve<S: Scalar>(matrix: &[Vec<S>], rhs: &[S], zero: S) -> Result<Option<Vec<S>>> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut aug: Vec<Vec<S>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = echelonize(&mut aug)?;
    // inconsistent iff a pivot lands in the rhs column
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![zero; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Ok(Some(x))
}

/// True when `v` lies in the column span of `matrix`.
pub fn in_column_span<S: Scalar>(matrix: &[Vec<S>], v: &[S]) -> Result<bool> {
    let base = rank(matrix)?;
    let mut extended: Vec<Vec<S>> = matrix.to_vec();
    for (row, val) in extended.iter_mut().zip(v) {
        row.push(val.clone());
    }
    Ok(rank(&extended)? == base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldElement};

    fn q(n: i64) -> FieldElement {
        FieldElement::from_int(Field::Rational, n)
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank(&m).unwrap(), 1);
    }

    #[test]
    fn solve_simple_system() {
        let m = vec![vec![q(1), q(1)], vec![q(0), q(1)]];
        let b = vec![q(3), q(2)];
        let x = solve(&m, &b, q(0)).unwrap().unwrap();
        assert_eq!(x, vec![q(1), q(2)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        let b = vec![q(0), q(1)];
        assert!(solve(&m, &b, q(0)).unwrap().is_none());
    }

    #[test]
    fn column_span_membership() {
        let m = vec![vec![q(1), q(0)], vec![q(0), q(0)]];
        assert!(in_column_span(&m, &[q(5), q(0)]).unwrap());
        assert!(!in_column_span(&m, &[q(0), q(1)]).unwrap());
    }
}
