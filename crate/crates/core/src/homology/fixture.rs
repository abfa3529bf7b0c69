//! Text form of a complex:
//!
//! ```text
//! { "twists": [[0], [-2, -2], [-4]],
//!   "maps": [[["x^2", "y^2"]], [["y^2"], ["-x^2"]]] }
//! ```
//!
//! `twists[i]` lists the `k` in `F_i = ⊕ R(k)`, and `maps[i]` is the matrix
//! of `φ_{i+1}: F_{i+1} -> F_i` as rows of polynomial strings.

use serde::{Deserialize, Serialize};

use crate::poly::{parse_poly, FieldSpec, Polynomial};

use super::{FreeComplex, FreeGradedModule, GradedMap, HomologyError};

#[derive(Serialize, Deserialize)]
struct ComplexFixture {
    twists: Vec<Vec<i32>>,
    maps: Vec<Vec<Vec<String>>>,
}

pub fn complex_from_fixture(text: &str, field: FieldSpec) -> Result<FreeComplex, HomologyError> {
    let fx: ComplexFixture = serde_json::from_str(text).map_err(|e| HomologyError::Fixture(e.to_string()))?;
    if fx.twists.len() != fx.maps.len() + 1 {
        return Err(HomologyError::Fixture(format!(
            "{} maps need {} twist lists, found {}",
            fx.maps.len(),
            fx.maps.len() + 1,
            fx.twists.len()
        )));
    }
    let modules: Vec<FreeGradedModule> = fx.twists.iter().map(|t| FreeGradedModule::from_twists(t)).collect();
    let mut maps = Vec::with_capacity(fx.maps.len());
    for (i, rows) in fx.maps.iter().enumerate() {
        let entries = rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, s)| {
                        parse_poly(s, field)
                            .map_err(|e| HomologyError::Fixture(format!("φ{} entry ({r}, {c}) {s:?}: {e}", i + 1)))
                    })
                    .collect::<Result<Vec<Polynomial>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let map = GradedMap::new(field, modules[i + 1].clone(), modules[i].clone(), entries).map_err(|e| match e {
            HomologyError::DegreeMismatch { row, col, expected, entry, .. } => {
                HomologyError::DegreeMismatch { map: Some(i + 1), row, col, expected, entry }
            }
            HomologyError::DimensionMismatch(m) => HomologyError::DimensionMismatch(format!("φ{}: {m}", i + 1)),
            other => other,
        })?;
        maps.push(map);
    }
    FreeComplex::new(maps)
}

pub fn complex_to_fixture(c: &FreeComplex) -> String {
    let fx = ComplexFixture {
        twists: c.modules().iter().map(|m| m.twists()).collect(),
        maps: c
            .maps()
            .iter()
            .map(|m| m.entries().iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&fx).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{koszul_complex, verify_complex};
    use crate::poly::q;

    #[test]
    fn round_trip() {
        let k = koszul_complex(FieldSpec::Rationals, &[q("x"), q("y^2"), q("zt")]).unwrap();
        let text = complex_to_fixture(&k);
        assert_eq!(complex_from_fixture(&text, FieldSpec::Rationals).unwrap(), k);
    }

    #[test]
    fn twist_off_by_one_is_named() {
        let text = r#"{"twists": [[0], [-2, -3]], "maps": [[["x^2", "y^2"]]]}"#;
        match complex_from_fixture(text, FieldSpec::Rationals) {
            Err(HomologyError::DegreeMismatch { map: Some(1), row: 0, col: 1, expected: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_and_verifies() {
        let text = r#"{"twists": [[0], [-2, -2], [-4]], "maps": [[["x^2", "y^2"]], [["y^2"], ["-x^2"]]]}"#;
        let c = complex_from_fixture(text, FieldSpec::Rationals).unwrap();
        assert!(verify_complex(&c));
        let bad = text.replace("-x^2", "x^2");
        assert!(!verify_complex(&complex_from_fixture(&bad, FieldSpec::Rationals).unwrap()));
        assert!(matches!(complex_from_fixture("{", FieldSpec::Rationals), Err(HomologyError::Fixture(_))));
    }
}
