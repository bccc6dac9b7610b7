//! Finite incidence structures: the raw point/line incidence matrix, the
//! three plane axioms, precomputed join/meet tables and projective duality.
//!
//! Axioms checked by [`IncidenceStructure::validate_axioms`]:
//! - PI1: two distinct points lie on exactly one common line;
//! - PI2: two distinct lines share exactly one common point;
//! - PI3: there exist four points, no three of which are collinear.

use crate::error::{Error, Result};

pub const DEFAULT_VIOLATION_CAP: usize = 16;

/// A single axiom failure, pinned to the offending pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Points `p`, `q` lie on `common` common lines (`common != 1`).
    Pi1 { p: u32, q: u32, common: u32 },
    /// Lines `l`, `m` share `common` common points (`common != 1`).
    Pi2 { l: u32, m: u32, common: u32 },
    /// No quadrilateral: every four points contain a collinear triple.
    Pi3,
}

/// Outcome of checking PI1-PI3 on a structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub pi1_ok: bool,
    pub pi2_ok: bool,
    pub pi3_ok: bool,
    /// Offending pairs, capped; `violations_total` counts all of them.
    pub violations: Vec<AxiomViolation>,
    pub violations_total: u64,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.pi1_ok && self.pi2_ok && self.pi3_ok
    }
}

/// Explicit finite incidence table plus (once validated) join/meet tables.
///
/// Equality compares the matrix only; derived tables are deterministic
/// functions of it.
#[derive(Debug, Clone)]
pub struct IncidenceStructure {
    n_points: u32,
    n_lines: u32,
    /// Row-major bitmap: `point_rows[p * blocks_per_row ..]` covers the lines
    /// through point `p`.
    point_rows: Vec<u64>,
    blocks_per_row: usize,
    /// Column bitmap: points on each line, for fast PI2 checks.
    line_cols: Vec<u64>,
    blocks_per_col: usize,
    tables: Option<Tables>,
}

#[derive(Debug, Clone)]
struct Tables {
    join: Vec<u32>,
    meet: Vec<u32>,
    points_on_line: Vec<Vec<u32>>,
    lines_through_point: Vec<Vec<u32>>,
}

impl PartialEq for IncidenceStructure {
    fn eq(&self, other: &Self) -> bool {
        self.n_points == other.n_points
            && self.n_lines == other.n_lines
            && self.point_rows == other.point_rows
    }
}
impl Eq for IncidenceStructure {}

impl IncidenceStructure {
    /// Builds a structure from explicit incidence rows (`rows[p][l]`).
    pub fn from_rows(n_points: u32, n_lines: u32, rows: &[Vec<bool>]) -> Result<Self> {
        if rows.len() != n_points as usize {
            return Err(Error::MalformedMatrix(format!(
                "expected {} rows, got {}",
                n_points,
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n_lines as usize {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    n_lines
                )));
            }
        }
        let blocks_per_row = (n_lines as usize + 63) / 64;
        let blocks_per_col = (n_points as usize + 63) / 64;
        let mut point_rows = vec![0u64; n_points as usize * blocks_per_row];
        let mut line_cols = vec![0u64; n_lines as usize * blocks_per_col];
        for (p, row) in rows.iter().enumerate() {
            for (l, &bit) in row.iter().enumerate() {
                if bit {
                    point_rows[p * blocks_per_row + l / 64] |= 1u64 << (l % 64);
                    line_cols[l * blocks_per_col + p / 64] |= 1u64 << (p % 64);
                }
            }
        }
        Ok(IncidenceStructure {
            n_points,
            n_lines,
            point_rows,
            blocks_per_row,
            line_cols,
            blocks_per_col,
            tables: None,
        })
    }

    pub fn n_points(&self) -> u32 {
        self.n_points
    }

    pub fn n_lines(&self) -> u32 {
        self.n_lines
    }

    #[inline]
    pub fn incident(&self, p: u32, l: u32) -> bool {
        debug_assert!(p < self.n_points && l < self.n_lines);
        let idx = p as usize * self.blocks_per_row + l as usize / 64;
        self.point_rows[idx] >> (l % 64) & 1 == 1
    }

    fn point_row(&self, p: u32) -> &[u64] {
        let start = p as usize * self.blocks_per_row;
        &self.point_rows[start..start + self.blocks_per_row]
    }

    fn line_col(&self, l: u32) -> &[u64] {
        let start = l as usize * self.blocks_per_col;
        &self.line_cols[start..start + self.blocks_per_col]
    }

    /// Number of common lines through two points and the first such line.
    fn common_lines(&self, p: u32, q: u32) -> (u32, Option<u32>) {
        let (a, b) = (self.point_row(p), self.point_row(q));
        let mut count = 0u32;
        let mut first = None;
        for (blk, (&x, &y)) in a.iter().zip(b.iter()).enumerate() {
            let mut both = x & y;
            while both != 0 {
                let bit = both.trailing_zeros();
                let line = (blk * 64) as u32 + bit;
                if first.is_none() {
                    first = Some(line);
                }
                count += 1;
                both &= both - 1;
            }
        }
        (count, first)
    }

    fn common_points(&self, l: u32, m: u32) -> (u32, Option<u32>) {
        let (a, b) = (self.line_col(l), self.line_col(m));
        let mut count = 0u32;
        let mut first = None;
        for (blk, (&x, &y)) in a.iter().zip(b.iter()).enumerate() {
            let mut both = x & y;
            while both != 0 {
                let bit = both.trailing_zeros();
                let point = (blk * 64) as u32 + bit;
                if first.is_none() {
                    first = Some(point);
                }
                count += 1;
                both &= both - 1;
            }
        }
        (count, first)
    }

    pub fn validate_axioms(&self) -> AxiomReport {
        self.validate_axioms_capped(DEFAULT_VIOLATION_CAP)
    }

    /// Checks PI1-PI3 exhaustively, recording up to `cap` offending pairs.
    pub fn validate_axioms_capped(&self, cap: usize) -> AxiomReport {
        let mut report = AxiomReport {
            pi1_ok: true,
            pi2_ok: true,
            pi3_ok: true,
            violations: Vec::new(),
            violations_total: 0,
        };
        for p in 0..self.n_points {
            for q in (p + 1)..self.n_points {
                let (count, _) = self.common_lines(p, q);
                if count != 1 {
                    report.pi1_ok = false;
                    report.violations_total += 1;
                    if report.violations.len() < cap {
                        report
                            .violations
                            .push(AxiomViolation::Pi1 { p, q, common: count });
                    }
                }
            }
        }
        for l in 0..self.n_lines {
            for m in (l + 1)..self.n_lines {
                let (count, _) = self.common_points(l, m);
                if count != 1 {
                    report.pi2_ok = false;
                    report.violations_total += 1;
                    if report.violations.len() < cap {
                        report
                            .violations
                            .push(AxiomViolation::Pi2 { l, m, common: count });
                    }
                }
            }
        }
        if !self.has_quadrilateral() {
            report.pi3_ok = false;
            report.violations_total += 1;
            if report.violations.len() < cap {
                report.violations.push(AxiomViolation::Pi3);
            }
        }
        report
    }

    /// True iff three points have a common line. Works on raw matrices (even
    /// ones violating PI1), so PI3 can be checked independently.
    fn triple_collinear(&self, p: u32, q: u32, r: u32) -> bool {
        let (a, b, c) = (self.point_row(p), self.point_row(q), self.point_row(r));
        a.iter()
            .zip(b.iter())
            .zip(c.iter())
            .any(|((&x, &y), &z)| x & y & z != 0)
    }

    fn has_quadrilateral(&self) -> bool {
        let n = self.n_points;
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    if self.triple_collinear(a, b, c) {
                        continue;
                    }
                    for d in (c + 1)..n {
                        if !self.triple_collinear(a, b, d)
                            && !self.triple_collinear(a, c, d)
                            && !self.triple_collinear(b, c, d)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Precomputes join/meet tables and per-point/per-line index lists.
    /// Requires the axioms to hold.
    pub fn build_tables(&mut self) -> Result<()> {
        if self.tables.is_some() {
            return Ok(());
        }
        if !self.validate_axioms_capped(1).all_ok() {
            return Err(Error::NotAPlane);
        }
        let np = self.n_points as usize;
        let nl = self.n_lines as usize;
        let mut join = vec![u32::MAX; np * np];
        let mut meet = vec![u32::MAX; nl * nl];
        for p in 0..self.n_points {
            for q in (p + 1)..self.n_points {
                let (_, line) = self.common_lines(p, q);
                let l = line.expect("PI1 validated");
                join[p as usize * np + q as usize] = l;
                join[q as usize * np + p as usize] = l;
            }
        }
        for l in 0..self.n_lines {
            for m in (l + 1)..self.n_lines {
                let (_, point) = self.common_points(l, m);
                let p = point.expect("PI2 validated");
                meet[l as usize * nl + m as usize] = p;
                meet[m as usize * nl + l as usize] = p;
            }
        }
        let mut points_on_line = vec![Vec::new(); nl];
        let mut lines_through_point = vec![Vec::new(); np];
        for p in 0..self.n_points {
            for l in 0..self.n_lines {
                if self.incident(p, l) {
                    points_on_line[l as usize].push(p);
                    lines_through_point[p as usize].push(l);
                }
            }
        }
        self.tables = Some(Tables {
            join,
            meet,
            points_on_line,
            lines_through_point,
        });
        Ok(())
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Join of two distinct points via the precomputed table.
    #[inline]
    pub fn join(&self, p: u32, q: u32) -> Option<u32> {
        if p == q {
            return None;
        }
        let t = self.tables.as_ref().expect("tables built");
        Some(t.join[p as usize * self.n_points as usize + q as usize])
    }

    #[inline]
    pub fn meet(&self, l: u32, m: u32) -> Option<u32> {
        if l == m {
            return None;
        }
        let t = self.tables.as_ref().expect("tables built");
        Some(t.meet[l as usize * self.n_lines as usize + m as usize])
    }

    pub fn points_on_line(&self, l: u32) -> &[u32] {
        &self.tables.as_ref().expect("tables built").points_on_line[l as usize]
    }

    pub fn lines_through_point(&self, p: u32) -> &[u32] {
        &self.tables.as_ref().expect("tables built").lines_through_point[p as usize]
    }

    /// Join found by scanning the matrix instead of the table. Test oracle
    /// for table correctness.
    pub fn join_by_scan(&self, p: u32, q: u32) -> Option<u32> {
        if p == q {
            return None;
        }
        (0..self.n_lines).find(|&l| self.incident(p, l) && self.incident(q, l))
    }

    pub fn meet_by_scan(&self, l: u32, m: u32) -> Option<u32> {
        if l == m {
            return None;
        }
        (0..self.n_points).find(|&p| self.incident(p, l) && self.incident(p, m))
    }

    /// Transposed structure: points become lines and vice versa. The input
    /// must satisfy the axioms; the output does too (with PI1/PI2 swapped
    /// witnesses) and carries fresh tables.
    pub fn dualize(&self) -> Result<IncidenceStructure> {
        if !self.validate_axioms_capped(1).all_ok() {
            return Err(Error::NotAPlane);
        }
        let mut rows = vec![vec![false; self.n_points as usize]; self.n_lines as usize];
        for p in 0..self.n_points {
            for l in 0..self.n_lines {
                if self.incident(p, l) {
                    rows[l as usize][p as usize] = true;
                }
            }
        }
        let mut dual = IncidenceStructure::from_rows(self.n_lines, self.n_points, &rows)?;
        dual.build_tables()?;
        Ok(dual)
    }

    /// Dense boolean rows, row-major. Used by the text exporter.
    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        (0..self.n_points)
            .map(|p| (0..self.n_lines).map(|l| self.incident(p, l)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 7 points, 7 lines, 3 points per line.
    pub(crate) fn fano_rows() -> (u32, u32, Vec<Vec<bool>>) {
        let lines: [[usize; 3]; 7] = [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ];
        let mut rows = vec![vec![false; 7]; 7];
        for (l, pts) in lines.iter().enumerate() {
            for &p in pts {
                rows[p][l] = true;
            }
        }
        (7, 7, rows)
    }

    fn fano() -> IncidenceStructure {
        let (np, nl, rows) = fano_rows();
        IncidenceStructure::from_rows(np, nl, &rows).unwrap()
    }

    #[test]
    fn fano_passes_axioms() {
        let report = fano().validate_axioms();
        assert!(report.all_ok());
        assert!(report.violations.is_empty());
        assert_eq!(report.violations_total, 0);
    }

    #[test]
    fn repeated_line_breaks_pi1_and_pi2() {
        // Two lines both containing points {0,1}: PI1 fails for the pair and
        // PI2 fails for the two lines.
        let rows = vec![
            vec![true, true, false],
            vec![true, true, false],
            vec![false, false, true],
            vec![false, false, true],
        ];
        let s = IncidenceStructure::from_rows(4, 3, &rows).unwrap();
        let report = s.validate_axioms();
        assert!(!report.pi1_ok);
        assert!(!report.pi2_ok);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::Pi1 { p: 0, q: 1, common: 2 })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::Pi2 { l: 0, m: 1, common: 2 })));
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn affine_order_two_fails_pi2() {
        // 4 points, 6 lines of size 2: every pair joined once, but parallel
        // lines never meet.
        let pairs = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];
        let mut rows = vec![vec![false; 6]; 4];
        for (l, &(a, b)) in pairs.iter().enumerate() {
            rows[a][l] = true;
            rows[b][l] = true;
        }
        let s = IncidenceStructure::from_rows(4, 6, &rows).unwrap();
        let report = s.validate_axioms();
        assert!(report.pi1_ok);
        assert!(!report.pi2_ok);
        assert!(report.pi3_ok);
    }

    #[test]
    fn violation_cap_bounds_report() {
        // Empty matrix: every point pair violates PI1, every line pair PI2.
        let rows = vec![vec![false; 8]; 8];
        let s = IncidenceStructure::from_rows(8, 8, &rows).unwrap();
        let report = s.validate_axioms_capped(4);
        assert_eq!(report.violations.len(), 4);
        assert!(report.violations_total > 4);
    }

    #[test]
    fn tables_match_scan_on_fano() {
        let mut s = fano();
        s.build_tables().unwrap();
        for p in 0..7 {
            for q in 0..7 {
                assert_eq!(s.join(p, q), s.join_by_scan(p, q));
                assert_eq!(s.meet(p, q), s.meet_by_scan(p, q));
            }
        }
    }

    #[test]
    fn dualize_is_an_involution() {
        let s = fano();
        let dual = s.dualize().unwrap();
        assert!(dual.validate_axioms().all_ok());
        let back = dual.dualize().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn transposing_swaps_pi1_and_pi2_witnesses() {
        // The affine plane of order 2 fails PI2 only; its raw transpose
        // fails PI1 only (dualize itself refuses non-planes, so transpose
        // manually).
        let pairs = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];
        let mut rows = vec![vec![false; 6]; 4];
        for (l, &(a, b)) in pairs.iter().enumerate() {
            rows[a][l] = true;
            rows[b][l] = true;
        }
        let mut transposed = vec![vec![false; 4]; 6];
        for (p, row) in rows.iter().enumerate() {
            for (l, &bit) in row.iter().enumerate() {
                transposed[l][p] = bit;
            }
        }
        let report = IncidenceStructure::from_rows(4, 6, &rows)
            .unwrap()
            .validate_axioms();
        let dual_report = IncidenceStructure::from_rows(6, 4, &transposed)
            .unwrap()
            .validate_axioms();
        assert!(report.pi1_ok && !report.pi2_ok);
        assert!(!dual_report.pi1_ok && dual_report.pi2_ok);
    }

    #[test]
    fn dualize_rejects_non_planes() {
        let rows = vec![vec![false; 3]; 3];
        let s = IncidenceStructure::from_rows(3, 3, &rows).unwrap();
        assert_eq!(s.dualize().unwrap_err(), Error::NotAPlane);
        let mut s2 = IncidenceStructure::from_rows(3, 3, &rows).unwrap();
        assert_eq!(s2.build_tables().unwrap_err(), Error::NotAPlane);
    }

    #[test]
    fn malformed_matrix_is_rejected() {
        let rows = vec![vec![false; 3]; 2];
        assert!(matches!(
            IncidenceStructure::from_rows(3, 3, &rows),
            Err(Error::MalformedMatrix(_))
        ));
        let rows = vec![vec![false; 2], vec![false; 3], vec![false; 3]];
        assert!(matches!(
            IncidenceStructure::from_rows(3, 3, &rows),
            Err(Error::MalformedMatrix(_))
        ));
    }
}
