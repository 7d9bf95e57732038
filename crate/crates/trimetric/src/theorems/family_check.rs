//! Closed-form triameter formulas for the named families, verified
//! against the generic algorithm over parameter ranges.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::triameter::triameter;

/// The closed-form triameter of a family member, where one is known:
/// paths 2(n-1), cycles n, complete graphs 3, stars with at least three
/// leaves 6, spiders 2(k1+k2+k3), grids 2(rows+cols-2), Petersen 6.
/// `None` where no formula applies (bistars, parameters too small for
/// the formula's hypotheses).
pub fn expected_triameter(spec: &FamilySpec) -> Option<u32> {
    match *spec {
        FamilySpec::Path { n } if n >= 3 => Some(2 * (n as u32 - 1)),
        FamilySpec::Cycle { n } if n >= 3 => Some(n as u32),
        FamilySpec::Complete { n } if n >= 3 => Some(3),
        FamilySpec::Star { leaves } if leaves >= 3 => Some(6),
        FamilySpec::Spider { k1, k2, k3 } => Some(2 * (k1 + k2 + k3) as u32),
        FamilySpec::Grid { rows, cols } if rows * cols >= 3 => {
            Some(2 * (rows as u32 + cols as u32 - 2))
        }
        FamilySpec::Petersen => Some(6),
        _ => None,
    }
}

/// One family member compared against its formula.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyRow {
    pub spec: String,
    pub n: usize,
    pub computed: u32,
    pub expected: u32,
    pub matches: bool,
}

/// Result of sweeping one family kind over a parameter range.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyVerification {
    pub kind: String,
    pub rows: Vec<FamilyRow>,
    pub mismatches: u64,
}

/// Verifies the closed form for `kind` with every parameter (or sorted
/// parameter tuple) drawn from `from..=to`. Single-parameter kinds need
/// `from >= 3`, grids `from >= 2`, spiders `from >= 1`; `petersen`
/// ignores the range.
pub fn verify_family_formula(kind: &str, from: usize, to: usize) -> Result<FamilyVerification> {
    if from > to {
        return Err(Error::InvalidInput(format!(
            "empty parameter range {from}..={to}"
        )));
    }
    let floor = |min: usize| -> Result<()> {
        if from < min {
            return Err(Error::InvalidInput(format!(
                "family kind {kind:?} needs parameters >= {min} for its formula, got {from}"
            )));
        }
        Ok(())
    };
    let mut specs = Vec::new();
    match kind {
        "path" => {
            floor(3)?;
            specs.extend((from..=to).map(|n| FamilySpec::Path { n }));
        }
        "cycle" => {
            floor(3)?;
            specs.extend((from..=to).map(|n| FamilySpec::Cycle { n }));
        }
        "complete" => {
            floor(3)?;
            specs.extend((from..=to).map(|n| FamilySpec::Complete { n }));
        }
        "star" => {
            floor(3)?;
            specs.extend((from..=to).map(|leaves| FamilySpec::Star { leaves }));
        }
        "spider" => {
            floor(1)?;
            for k1 in from..=to {
                for k2 in k1..=to {
                    for k3 in k2..=to {
                        specs.push(FamilySpec::Spider { k1, k2, k3 });
                    }
                }
            }
        }
        "grid" => {
            floor(2)?;
            for rows in from..=to {
                for cols in rows..=to {
                    specs.push(FamilySpec::Grid { rows, cols });
                }
            }
        }
        "petersen" => specs.push(FamilySpec::Petersen),
        "bistar" => {
            return Err(Error::InvalidInput(
                "bistars have no closed-form triameter to verify".into(),
            ));
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown verifiable family kind {other:?}"
            )));
        }
    }
    let mut rows = Vec::with_capacity(specs.len());
    let mut mismatches = 0;
    for spec in specs {
        let g = spec.generate()?;
        let computed = triameter(&g)?.value;
        let expected = expected_triameter(&spec)
            .expect("range floors guarantee the formula applies");
        let matches = computed == expected;
        if !matches {
            mismatches += 1;
        }
        rows.push(FamilyRow {
            spec: spec.to_string(),
            n: spec.order(),
            computed,
            expected,
            matches,
        });
    }
    Ok(FamilyVerification {
        kind: kind.to_string(),
        rows,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_hold_on_small_ranges() {
        for (kind, from, to, row_count) in [
            ("path", 3, 8, 6),
            ("cycle", 3, 9, 7),
            ("complete", 3, 7, 5),
            ("star", 3, 6, 4),
            ("spider", 1, 3, 10),
            ("grid", 2, 4, 6),
            ("petersen", 1, 1, 1),
        ] {
            let v = verify_family_formula(kind, from, to).unwrap();
            assert_eq!(v.rows.len(), row_count, "{kind}");
            assert_eq!(v.mismatches, 0, "{kind}");
            for row in &v.rows {
                assert!(row.matches);
            }
        }
    }

    #[test]
    fn range_floors_are_enforced() {
        assert!(verify_family_formula("path", 2, 5).is_err());
        assert!(verify_family_formula("star", 1, 5).is_err());
        assert!(verify_family_formula("grid", 1, 3).is_err());
        assert!(verify_family_formula("spider", 0, 2).is_err());
        assert!(verify_family_formula("path", 5, 3).is_err());
    }

    #[test]
    fn unverifiable_kinds_are_rejected() {
        assert!(verify_family_formula("bistar", 3, 4).is_err());
        assert!(verify_family_formula("wheel", 3, 4).is_err());
    }

    #[test]
    fn expected_values_match_hand_calculations() {
        assert_eq!(expected_triameter(&FamilySpec::Path { n: 10 }), Some(18));
        assert_eq!(expected_triameter(&FamilySpec::Path { n: 2 }), None);
        assert_eq!(expected_triameter(&FamilySpec::Star { leaves: 2 }), None);
        assert_eq!(
            expected_triameter(&FamilySpec::Spider { k1: 2, k2: 3, k3: 4 }),
            Some(18)
        );
        assert_eq!(
            expected_triameter(&FamilySpec::Grid { rows: 3, cols: 4 }),
            Some(10)
        );
        assert_eq!(expected_triameter(&FamilySpec::Bistar { n1: 2, n2: 2 }), None);
    }
}
