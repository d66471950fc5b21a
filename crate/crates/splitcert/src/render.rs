//! Deterministic text rendering for polynomials and vectors.
//!
//! Terms print in descending order with `^` powers and explicit `*`, so a
//! printed object re-parses to an equal object and golden-file tests are
//! stable.

use crate::field::FieldElement;
use crate::poly::{FreeVector, Monomial, Polynomial};

fn mono_string(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 1 {
            parts.push(names[i].clone());
        } else if e > 1 {
            parts.push(format!("{}^{}", names[i], e));
        }
    }
    parts.join("*")
}

pub fn poly_string(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, m)) in p.terms.iter().enumerate() {
        let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
        if i == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        let ms = mono_string(m, names);
        if ms.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&ms);
        } else {
            out.push_str(&format!("{}*{}", mag, ms));
        }
    }
    out
}

pub fn vector_string(v: &FreeVector, names: &[String]) -> String {
    let comps: Vec<String> = v.comps.iter().map(|p| poly_string(p, names)).collect();
    format!("({})", comps.join(", "))
}

pub fn field_element_string(c: &FieldElement) -> String {
    c.to_string()
}

/// Default variable names x0, x1, ... used outside the CLI.
pub fn default_names(vars: usize) -> Vec<String> {
    (0..vars).map(|i| format!("x{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::{MonomialOrder, Ring};

    #[test]
    fn renders_signs_and_powers() {
        let r = Ring::new(Field::Rational, 2, MonomialOrder::GrevLex);
        let x = Polynomial::var(r, 0);
        let y = Polynomial::var(r, 1);
        // x^2*y - 2*x + 5/6
        let p = x
            .mul(&x)
            .unwrap()
            .mul(&y)
            .unwrap()
            .sub(&x.scale(&FieldElement::from_int(r.field, 2)))
            .unwrap()
            .add(&Polynomial::constant(
                r,
                FieldElement::from_fraction(r.field, 5, 6).unwrap(),
            ))
            .unwrap();
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(poly_string(&p, &names), "x^2*y - 2*x + 5/6");
        assert_eq!(poly_string(&Polynomial::zero(r), &names), "0");
    }
}
