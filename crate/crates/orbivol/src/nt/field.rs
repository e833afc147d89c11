//! Number field descriptions and the built-in field registry.

use rug::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nt::intpoly::{is_irreducible_deg_le4, poly_disc};

/// A number field given by a monic integer defining polynomial.
#[derive(Clone, Debug)]
pub struct NumberField {
    pub label: String,
    pub degree: u32,
    /// Coefficients in ascending order, constant term first, monic.
    pub poly: Vec<Integer>,
    /// (r₁, r₂) with r₁ + 2r₂ = degree.
    pub signature: (u32, u32),
    pub abs_disc: Integer,
    pub poly_disc: Integer,
    /// |poly_disc| / abs_disc, a perfect square (the index squared).
    pub index_square: Integer,
    pub monogenic: bool,
    pub class_number: Option<u32>,
}

impl NumberField {
    pub fn new(
        label: &str,
        poly_coeffs: &[i64],
        signature: (u32, u32),
        abs_disc: u64,
        class_number: Option<u32>,
    ) -> Result<NumberField> {
        let poly: Vec<Integer> = poly_coeffs.iter().map(|&c| Integer::from(c)).collect();
        let degree = (poly.len() - 1) as u32;
        if signature.0 + 2 * signature.1 != degree {
            return Err(Error::Validation(format!(
                "field {label}: signature ({}, {}) incompatible with degree {degree}",
                signature.0, signature.1
            )));
        }
        if degree <= 4 && !is_irreducible_deg_le4(&poly)? {
            return Err(Error::Validation(format!(
                "field {label}: defining polynomial is reducible over the rationals"
            )));
        }
        let pdisc = poly_disc(&poly)?;
        let abs = Integer::from(abs_disc);
        let pdisc_abs = pdisc.clone().abs();
        if !pdisc_abs.is_divisible(&abs) {
            return Err(Error::Validation(format!(
                "field {label}: |poly disc| {pdisc_abs} is not a multiple of the field discriminant {abs}"
            )));
        }
        let index_square = Integer::from(&pdisc_abs / &abs);
        let (_, rem) = index_square.clone().sqrt_rem(Integer::new());
        if rem != 0 {
            return Err(Error::Validation(format!(
                "field {label}: |poly disc| / field disc = {index_square} is not a perfect square"
            )));
        }
        let monogenic = index_square == 1;
        Ok(NumberField {
            label: label.to_string(),
            degree,
            poly,
            signature,
            abs_disc: abs,
            poly_disc: pdisc,
            index_square,
            monogenic,
            class_number,
        })
    }
}

/// Built-in fields used by the covolume assembly.
///
/// `ell448` is implementer-derived: the source material does not state a
/// defining polynomial for the (D_k, D_l) = (8, 448) field, so the
/// registry ships the quadratic extension of Q(√2) by √(−1 + 2√2), whose
/// relative discriminant has norm 7 = 448/8² and whose dyadic place stays
/// unramified.
pub fn builtin_fields() -> Vec<NumberField> {
    vec![
        NumberField::new("k0", &[-1, -1, 1], (2, 0), 5, Some(1)).unwrap(),
        NumberField::new("qsqrt2", &[-2, 0, 1], (2, 0), 8, Some(1)).unwrap(),
        NumberField::new("ell0", &[-1, 2, 0, -1, 1], (2, 1), 275, None).unwrap(),
        NumberField::new("ell2", &[-1, 0, -1, 0, 1], (2, 1), 400, None).unwrap(),
        NumberField::new("ell448", &[-7, 0, 2, 0, 1], (2, 1), 448, None).unwrap(),
        NumberField::new("ell475", &[-19, 0, 2, 0, 1], (2, 1), 475, None).unwrap(),
    ]
}

pub fn builtin(label: &str) -> Result<NumberField> {
    builtin_fields()
        .into_iter()
        .find(|f| f.label == label)
        .ok_or_else(|| Error::Dependency(format!("no built-in field labelled {label:?}")))
}

/// On-disk field record: `{"label", "poly" (ascending, constant first),
/// "r1", "r2", "abs_disc", "h"?}`.
#[derive(Serialize, Deserialize)]
pub struct FieldRecord {
    pub label: String,
    pub poly: Vec<i64>,
    pub r1: u32,
    pub r2: u32,
    pub abs_disc: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<u32>,
}

/// Load a field-data file (a JSON array of records).
pub fn load_fields(path: &std::path::Path) -> Result<Vec<NumberField>> {
    let text = std::fs::read_to_string(path)?;
    let records: Vec<FieldRecord> = serde_json::from_str(&text)?;
    records
        .into_iter()
        .map(|r| NumberField::new(&r.label, &r.poly, (r.r1, r.r2), r.abs_disc, r.h))
        .collect()
}

/// Resolve `FILE#label` or a bare built-in label.
pub fn resolve_field(spec: &str) -> Result<NumberField> {
    match spec.split_once('#') {
        Some((path, label)) => {
            let fields = load_fields(std::path::Path::new(path))?;
            fields
                .into_iter()
                .find(|f| f.label == label)
                .ok_or_else(|| Error::Dependency(format!("no field labelled {label:?} in {path}")))
        }
        None => builtin(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        let fields = builtin_fields();
        assert_eq!(fields.len(), 6);
        for f in &fields {
            assert_eq!(f.signature.0 + 2 * f.signature.1, f.degree);
        }
        let ell2 = builtin("ell2").unwrap();
        assert!(ell2.monogenic);
        assert_eq!(ell2.poly_disc, Integer::from(-400));
        let ell0 = builtin("ell0").unwrap();
        assert!(ell0.monogenic);
        assert_eq!(ell0.abs_disc, Integer::from(275));
        let e475 = builtin("ell475").unwrap();
        assert!(!e475.monogenic);
        assert_eq!(e475.index_square, Integer::from(4096));
        let e448 = builtin("ell448").unwrap();
        assert!(!e448.monogenic);
        assert_eq!(e448.index_square, Integer::from(256));
    }

    #[test]
    fn invalid_fields_are_rejected() {
        // wrong signature
        assert!(NumberField::new("bad", &[-1, -1, 1], (1, 1), 5, None).is_err());
        // reducible polynomial
        assert!(NumberField::new("bad", &[-1, 0, 1], (2, 0), 5, None).is_err());
        // disc mismatch
        assert!(NumberField::new("bad", &[-1, -1, 1], (2, 0), 7, None).is_err());
    }

    #[test]
    fn field_file_round_trip() {
        let dir = std::env::temp_dir().join("orbivol-field-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("fields.json");
        let recs = vec![FieldRecord {
            label: "k0".into(),
            poly: vec![-1, -1, 1],
            r1: 2,
            r2: 0,
            abs_disc: 5,
            h: Some(1),
        }];
        std::fs::write(&path, serde_json::to_string_pretty(&recs).unwrap()).unwrap();
        let loaded = load_fields(&path).unwrap();
        assert_eq!(loaded.len(), 1);
        assert_eq!(loaded[0].abs_disc, Integer::from(5));
        let via_spec = resolve_field(&format!("{}#k0", path.display())).unwrap();
        assert_eq!(via_spec.label, "k0");
    }
}
