//! The two Galois actions on a character table and their compatibility.
//!
//! For gcd(ell, n) = 1 the automorphism sigma_ell acts on rows by applying
//! sigma_ell to every entry (the image of an irreducible row is again a
//! row), and on columns by the power map g -> g^ell on class
//! representatives. Both actions are computed independently and the
//! entrywise compatibility
//! `sigma_ell(T[r][c]) = T[rows(r)][c] = T[r][cols(c)]` is machine-checked.

use num_integer::Integer;

use crate::chartab::CharacterTable;
use crate::cyclo::{coprime_residues, GaloisAut, NumberClass};
use crate::permgrp::power_map_on_classes;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaloisError {
    #[error("{ell} is not coprime to the field order {order}")]
    NotCoprime { ell: u64, order: u64 },
    #[error("table is corrupted: sigma_{ell} of row {row} is not a table row")]
    RowMatchFailed { ell: u64, row: usize },
}

/// A Galois automorphism together with the row and column permutations it
/// induces on one table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisTableAction {
    pub ell: u64,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

fn reduce_ell(table: &CharacterTable, ell: i64) -> Result<u64, GaloisError> {
    let n = table.field_order();
    let mut r = ell.rem_euclid(n as i64) as u64;
    if r == 0 {
        r = n;
    }
    if r.gcd(&n) != 1 {
        return Err(GaloisError::NotCoprime { ell: r, order: n });
    }
    Ok(r)
}

/// Row permutation induced by sigma_ell: entry `r` of the result is the
/// index of the row equal to sigma_ell applied entrywise to row `r`.
pub fn row_action(table: &CharacterTable, ell: i64) -> Result<Vec<usize>, GaloisError> {
    let ell = reduce_ell(table, ell)?;
    let aut = GaloisAut::new(table.field_order(), ell as i64).expect("coprimality checked");
    let mut perm = Vec::with_capacity(table.rows().len());
    for (r, row) in table.rows().iter().enumerate() {
        let image: Vec<_> = row
            .iter()
            .map(|e| aut.apply(e).expect("table entries share the field order"))
            .collect();
        let target = table
            .rows()
            .iter()
            .position(|candidate| *candidate == image)
            .ok_or(GaloisError::RowMatchFailed { ell, row: r })?;
        perm.push(target);
    }
    Ok(perm)
}

/// Column permutation induced by g -> g^ell on the conjugacy classes.
pub fn column_action(table: &CharacterTable, ell: i64) -> Result<Vec<usize>, GaloisError> {
    let ell = reduce_ell(table, ell)?;
    Ok(power_map_on_classes(table.group(), table.classes(), ell as i64))
}

/// First entry where the compatibility chain broke.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityWitness {
    pub ell: u64,
    pub row: usize,
    pub class: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub ell: u64,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub compatible: bool,
    pub witness: Option<CompatibilityWitness>,
}

/// Checks `sigma_ell(T[r][c]) = T[rows(r)][c] = T[r][cols(c)]` entrywise.
pub fn verify_compatibility(
    table: &CharacterTable,
    ell: i64,
) -> Result<CompatibilityReport, GaloisError> {
    let reduced = reduce_ell(table, ell)?;
    let row_perm = row_action(table, ell)?;
    let col_perm = column_action(table, ell)?;
    let aut = GaloisAut::new(table.field_order(), reduced as i64).expect("coprime");
    for (r, row) in table.rows().iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            let transformed = aut.apply(entry).expect("shared field order");
            let via_rows = &table.rows()[row_perm[r]][c];
            let via_cols = &table.rows()[r][col_perm[c]];
            if transformed != *via_rows || transformed != *via_cols {
                return Ok(CompatibilityReport {
                    ell: reduced,
                    row_perm,
                    col_perm,
                    compatible: false,
                    witness: Some(CompatibilityWitness { ell: reduced, row: r, class: c }),
                });
            }
        }
    }
    Ok(CompatibilityReport { ell: reduced, row_perm, col_perm, compatible: true, witness: None })
}

/// Combined action object for one ell.
pub fn table_action(table: &CharacterTable, ell: i64) -> Result<GaloisTableAction, GaloisError> {
    let reduced = reduce_ell(table, ell)?;
    Ok(GaloisTableAction {
        ell: reduced,
        row_perm: row_action(table, ell)?,
        col_perm: column_action(table, ell)?,
    })
}

/// Orbits of rows and columns under the full Galois group, plus the degree
/// over Q of the field generated by each row's entries (the index of the
/// row's stabilizer, by the Galois correspondence).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisOrbits {
    pub row_orbits: Vec<Vec<usize>>,
    pub col_orbits: Vec<Vec<usize>>,
    pub row_field_degrees: Vec<u64>,
}

pub fn galois_orbits(table: &CharacterTable) -> GaloisOrbits {
    let n = table.field_order();
    let residues = coprime_residues(n);
    let count = table.rows().len();
    let mut row_images: Vec<Vec<usize>> = vec![Vec::new(); count];
    let mut col_images: Vec<Vec<usize>> = vec![Vec::new(); count];
    let mut stabilizer_sizes = vec![0u64; count];
    for &ell in &residues {
        let rp = row_action(table, ell as i64).expect("coprime by construction");
        let cp = column_action(table, ell as i64).expect("coprime by construction");
        for r in 0..count {
            row_images[r].push(rp[r]);
            if rp[r] == r {
                stabilizer_sizes[r] += 1;
            }
            col_images[r].push(cp[r]);
        }
    }
    let orbits_of = |images: &[Vec<usize>]| {
        let mut seen = vec![false; count];
        let mut orbits = Vec::new();
        for start in 0..count {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = images[start].clone();
            orbit.push(start);
            orbit.sort_unstable();
            orbit.dedup();
            for &m in &orbit {
                seen[m] = true;
            }
            orbits.push(orbit);
        }
        orbits
    };
    let row_orbits = orbits_of(&row_images);
    let col_orbits = orbits_of(&col_images);
    let phi = residues.len() as u64;
    let row_field_degrees = stabilizer_sizes.iter().map(|&s| phi / s).collect();
    GaloisOrbits { row_orbits, col_orbits, row_field_degrees }
}

/// One report line per ell: `ell=<l> rows=<cycles> cols=<cycles> compatible=<bool>`.
pub fn action_report_line(table: &CharacterTable, ell: i64) -> Result<String, GaloisError> {
    let report = verify_compatibility(table, ell)?;
    let row_labels: Vec<String> = table.row_labels().to_vec();
    let col_labels: Vec<String> = table
        .classes()
        .classes()
        .iter()
        .map(|c| table.group().element(c.rep).to_string())
        .collect();
    Ok(format!(
        "ell={} rows={} cols={} compatible={}",
        report.ell,
        perm_cycles_string(&report.row_perm, &row_labels),
        perm_cycles_string(&report.col_perm, &col_labels),
        report.compatible
    ))
}

/// Cycle form of a permutation using the given labels; identity is `()`.
pub fn perm_cycles_string(perm: &[usize], labels: &[String]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut p = start;
        let mut first = true;
        while !seen[p] {
            seen[p] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&labels[p]);
            first = false;
            p = perm[p];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Property used as a cross-check oracle (a classical corollary of the
/// compatibility): the number of rows fixed by sigma_ell equals the number
/// of columns fixed by g -> g^ell, for every coprime ell.
pub fn fixed_rows_equal_fixed_columns(table: &CharacterTable) -> bool {
    for ell in coprime_residues(table.field_order()) {
        let rp = row_action(table, ell as i64).expect("coprime");
        let cp = column_action(table, ell as i64).expect("coprime");
        let fixed_rows = rp.iter().enumerate().filter(|(i, &j)| *i == j).count();
        let fixed_cols = cp.iter().enumerate().filter(|(i, &j)| *i == j).count();
        if fixed_rows != fixed_cols {
            return false;
        }
    }
    true
}

/// Rows fixed by every row action must have rational integer entries.
pub fn rational_rows_are_integral(table: &CharacterTable) -> bool {
    let orbits = galois_orbits(table);
    for (r, &deg) in orbits.row_field_degrees.iter().enumerate() {
        if deg == 1 {
            let ok = table.rows()[r].iter().all(|e| {
                matches!(e.classify(), NumberClass::RationalInteger)
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::compute_character_table;
    use crate::permgrp::builtin;

    fn table_for(name: &str) -> CharacterTable {
        compute_character_table(&builtin(name).unwrap()).unwrap()
    }

    #[test]
    fn a5_row_action_swaps_degree_three_rows() {
        let t = table_for("A5");
        // 7 = 2 (mod 5): swaps the two degree-3 rows, fixes the others
        assert_eq!(row_action(&t, 7).unwrap(), vec![0, 2, 1, 3, 4]);
        // 11 = 1 (mod 5) and 11 = 2 (mod 3): fixes all rows
        assert_eq!(row_action(&t, 11).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(row_action(&t, 1).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn s3_row_action_is_always_trivial() {
        let t = table_for("S3");
        for ell in coprime_residues(6) {
            assert_eq!(row_action(&t, ell as i64).unwrap(), vec![0, 1, 2]);
        }
    }

    #[test]
    fn a5_column_action_swaps_five_cycle_columns() {
        let t = table_for("A5");
        assert_eq!(column_action(&t, 7).unwrap(), vec![0, 1, 2, 4, 3]);
        assert_eq!(column_action(&t, 1).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn s3_column_action_fifth_power() {
        let t = table_for("S3");
        assert_eq!(column_action(&t, 5).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn non_coprime_ell_rejected() {
        let t = table_for("S3");
        assert_eq!(
            row_action(&t, 2).unwrap_err(),
            GaloisError::NotCoprime { ell: 2, order: 6 }
        );
        assert_eq!(
            column_action(&t, 3).unwrap_err(),
            GaloisError::NotCoprime { ell: 3, order: 6 }
        );
    }

    #[test]
    fn compatibility_holds_for_s3_and_a5() {
        for name in ["S3", "A5"] {
            let t = table_for(name);
            for ell in coprime_residues(t.field_order()) {
                let report = verify_compatibility(&t, ell as i64).unwrap();
                assert!(report.compatible, "{name} ell={ell}");
                assert!(report.witness.is_none());
            }
        }
    }

    #[test]
    fn perturbed_table_reports_witness() {
        let t = table_for("A5");
        // swap the two golden-ratio entries of one degree-3 row
        let delta = &t.rows()[1][3] - &t.rows()[1][4];
        let bad = t.perturbed(1, 4, &delta).perturbed(1, 3, &-&delta);
        let report = verify_compatibility(&bad, 7);
        match report {
            Ok(r) => {
                assert!(!r.compatible);
                assert!(r.witness.is_some());
            }
            // row matching may legitimately fail on a corrupted table
            Err(GaloisError::RowMatchFailed { .. }) => {}
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn action_group_laws() {
        let t = table_for("A5");
        let n = t.field_order();
        for &ell in &[7u64, 11, 13] {
            for &m in &[7u64, 17, 29] {
                let composed = ((ell * m) % n) as i64;
                let lhs_rows = row_action(&t, composed).unwrap();
                let rp_m = row_action(&t, m as i64).unwrap();
                let rp_l = row_action(&t, ell as i64).unwrap();
                // sigma_ell . sigma_m moves row r to rp_l[rp_m[r]]
                let rhs_rows: Vec<usize> = (0..rp_m.len()).map(|r| rp_l[rp_m[r]]).collect();
                assert_eq!(lhs_rows, rhs_rows);
                let lhs_cols = column_action(&t, composed).unwrap();
                let cp_m = column_action(&t, m as i64).unwrap();
                let cp_l = column_action(&t, ell as i64).unwrap();
                let rhs_cols: Vec<usize> = (0..cp_m.len()).map(|c| cp_l[cp_m[c]]).collect();
                assert_eq!(lhs_cols, rhs_cols);
            }
        }
    }

    #[test]
    fn a5_orbits() {
        let t = table_for("A5");
        let orbits = galois_orbits(&t);
        assert_eq!(orbits.row_orbits, vec![vec![0], vec![1, 2], vec![3], vec![4]]);
        assert_eq!(orbits.col_orbits, vec![vec![0], vec![1], vec![2], vec![3, 4]]);
        assert_eq!(orbits.row_field_degrees, vec![1, 2, 2, 1, 1]);
    }

    #[test]
    fn s3_orbits_are_singletons() {
        let t = table_for("S3");
        let orbits = galois_orbits(&t);
        assert_eq!(orbits.row_orbits, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(orbits.col_orbits, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(orbits.row_field_degrees, vec![1, 1, 1]);
    }

    #[test]
    fn z5_nontrivial_characters_form_one_orbit() {
        let t = table_for("Z5");
        let orbits = galois_orbits(&t);
        assert_eq!(orbits.row_orbits, vec![vec![0], vec![1, 2, 3, 4]]);
        assert_eq!(orbits.row_field_degrees, vec![1, 4, 4, 4, 4]);
    }

    #[test]
    fn brauer_style_fixed_point_count() {
        for name in ["S3", "S4", "A4", "A5", "D6", "Q8", "Z7"] {
            assert!(fixed_rows_equal_fixed_columns(&table_for(name)), "{name}");
        }
    }

    #[test]
    fn galois_fixed_rows_are_integral() {
        for name in ["A5", "Z5", "Q8", "D5"] {
            assert!(rational_rows_are_integral(&table_for(name)), "{name}");
        }
    }

    #[test]
    fn report_line_format() {
        let t = table_for("A5");
        let line = action_report_line(&t, 7).unwrap();
        assert!(line.starts_with("ell=7 rows=(ch3 ch3') cols="));
        assert!(line.ends_with("compatible=true"));
        let t3 = table_for("S3");
        let line = action_report_line(&t3, 5).unwrap();
        assert_eq!(line, "ell=5 rows=() cols=() compatible=true");
    }
}
