//! The Hall quasifield of order 9 and the translation plane it coordinatizes.
//!
//! Elements are pairs (a, b) over GF(3), encoded as a + 3b. With the
//! irreducible f(x) = x^2 + 1 the product is
//!   (a,b) * (c,0) = (ac, bc)
//!   (a,b) * (c,d) = (ac - b d^{-1} (c^2+1), ad - bc)        for d != 0.
//! Addition, the right distributive law, unique division and the absence of
//! zero divisors are all re-checked exhaustively by [`validate_quasifield`];
//! the assembled plane is additionally gated by the incidence axioms, so no
//! formula above is trusted unverified.

use crate::error::{Error, Result};
use crate::incidence::IncidenceStructure;
use crate::plane::{FinitePlane, PlaneHandle};

pub const MAX_QUASIFIELD_ORDER: usize = 32;

/// Explicit addition/multiplication tables with designated 0 and 1.
#[derive(Debug, Clone)]
pub struct QuasifieldTable {
    pub order: usize,
    /// Row-major `order x order` tables.
    pub add: Vec<u8>,
    pub mul: Vec<u8>,
}

/// First violation found while checking the quasifield laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuasifieldViolation {
    AdditionNotAbelianGroup { detail: String },
    NotRightDistributive { a: u8, b: u8, m: u8 },
    DivisionNotUnique { a: u8, b: u8, c: u8, solutions: usize },
    ZeroDivisor { a: u8, b: u8 },
    BadIdentity { detail: String },
}

impl QuasifieldTable {
    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.order + b as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        // Additive inverse by table scan; orders here are tiny.
        let neg = (0..self.order as u8)
            .find(|&x| self.add(b, x) == 0)
            .expect("validated group");
        self.add(a, neg)
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("table,row,values\n");
        for (name, table) in [("add", &self.add), ("mul", &self.mul)] {
            for r in 0..self.order {
                let row: Vec<String> = (0..self.order)
                    .map(|c| table[r * self.order + c].to_string())
                    .collect();
                out.push_str(&format!("{},{},{}\n", name, r, row.join(" ")));
            }
        }
        out
    }
}

/// Exhaustively checks every quasifield law; reports the first violation.
pub fn validate_quasifield(t: &QuasifieldTable) -> std::result::Result<(), QuasifieldViolation> {
    let n = t.order as u8;
    assert!(t.order <= MAX_QUASIFIELD_ORDER, "order above supported bound");
    if t.add.len() != t.order * t.order || t.mul.len() != t.order * t.order {
        return Err(QuasifieldViolation::AdditionNotAbelianGroup {
            detail: "tables are not square".into(),
        });
    }

    // Abelian group under addition with identity 0.
    for a in 0..n {
        if t.add(a, 0) != a || t.add(0, a) != a {
            return Err(QuasifieldViolation::AdditionNotAbelianGroup {
                detail: format!("0 is not an additive identity at {a}"),
            });
        }
        if !(0..n).any(|x| t.add(a, x) == 0) {
            return Err(QuasifieldViolation::AdditionNotAbelianGroup {
                detail: format!("{a} has no additive inverse"),
            });
        }
        for b in 0..n {
            if t.add(a, b) != t.add(b, a) {
                return Err(QuasifieldViolation::AdditionNotAbelianGroup {
                    detail: format!("addition not commutative at ({a},{b})"),
                });
            }
            for c in 0..n {
                if t.add(t.add(a, b), c) != t.add(a, t.add(b, c)) {
                    return Err(QuasifieldViolation::AdditionNotAbelianGroup {
                        detail: format!("addition not associative at ({a},{b},{c})"),
                    });
                }
            }
        }
    }

    // Multiplicative identity and zero annihilation.
    for a in 0..n {
        if t.mul(a, 1) != a || t.mul(1, a) != a {
            return Err(QuasifieldViolation::BadIdentity {
                detail: format!("1 is not a two-sided identity at {a}"),
            });
        }
        if t.mul(a, 0) != 0 || t.mul(0, a) != 0 {
            return Err(QuasifieldViolation::BadIdentity {
                detail: format!("0 does not annihilate at {a}"),
            });
        }
    }

    // No zero divisors.
    for a in 1..n {
        for b in 1..n {
            if t.mul(a, b) == 0 {
                return Err(QuasifieldViolation::ZeroDivisor { a, b });
            }
        }
    }

    // Right distributivity: (a+b)m = am + bm.
    for a in 0..n {
        for b in 0..n {
            for m in 0..n {
                if t.mul(t.add(a, b), m) != t.add(t.mul(a, m), t.mul(b, m)) {
                    return Err(QuasifieldViolation::NotRightDistributive { a, b, m });
                }
            }
        }
    }

    // For a != b and any c, x*a = x*b + c has exactly one solution x.
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for c in 0..n {
                let solutions = (0..n).filter(|&x| t.mul(x, a) == t.add(t.mul(x, b), c)).count();
                if solutions != 1 {
                    return Err(QuasifieldViolation::DivisionNotUnique { a, b, c, solutions });
                }
            }
        }
    }

    Ok(())
}

/// The Hall system of order 9: pairs over GF(3), f(x) = x^2 + 1.
pub fn hall9_table() -> QuasifieldTable {
    let order = 9usize;
    let enc = |a: u8, b: u8| a + 3 * b;
    let dec = |e: u8| (e % 3, e / 3);
    let m3 = |x: i16| -> u8 { (x.rem_euclid(3)) as u8 };

    let mut add = vec![0u8; order * order];
    let mut mul = vec![0u8; order * order];
    for x in 0..9u8 {
        let (a, b) = dec(x);
        for y in 0..9u8 {
            let (c, d) = dec(y);
            add[x as usize * order + y as usize] =
                enc(m3(a as i16 + c as i16), m3(b as i16 + d as i16));
            let (a, b, c, d) = (a as i16, b as i16, c as i16, d as i16);
            mul[x as usize * order + y as usize] = if d == 0 {
                enc(m3(a * c), m3(b * c))
            } else {
                // d^{-1} in GF(3): 1 -> 1, 2 -> 2.
                let dinv = d;
                let fc = c * c + 1;
                enc(m3(a * c - b * dinv * fc), m3(a * d - b * c))
            };
        }
    }
    QuasifieldTable { order, add, mul }
}

fn hall9_label(e: u8) -> String {
    let (a, b) = (e % 3, e / 3);
    match b {
        0 => format!("{a}"),
        1 if a == 0 => "u".to_string(),
        1 => format!("{a}+u"),
        _ if a == 0 => format!("{b}u"),
        _ => format!("{a}+{b}u"),
    }
}

/// Builds the projective Hall plane of order 9: 91 points, 91 lines, 10
/// points per line. Affine points are pairs (x, y); lines are the graphs
/// y = x*m + b, the verticals x = c, and the line at infinity.
///
/// Point order: affine (x,y) as 9x+y, then ideal(m) for m = 0..8, then the
/// vertical ideal point. Line order: sloped (m,b) as 9m+b, then vertical(c),
/// then the line at infinity.
pub fn build_hall9() -> Result<PlaneHandle> {
    let t = hall9_table();
    if let Err(v) = validate_quasifield(&t) {
        return Err(Error::ConstructionFailed(format!(
            "hall quasifield violates its laws: {:?}",
            v
        )));
    }

    let n = 91u32;
    let affine = |x: u8, y: u8| (x as usize) * 9 + y as usize;
    let ideal = |m: u8| 81 + m as usize;
    let ideal_vertical = 90usize;
    let sloped = |m: u8, b: u8| (m as usize) * 9 + b as usize;
    let vertical = |c: u8| 81 + c as usize;
    let at_infinity = 90usize;

    let mut rows = vec![vec![false; n as usize]; n as usize];
    for x in 0..9u8 {
        for y in 0..9u8 {
            let p = affine(x, y);
            for m in 0..9u8 {
                for b in 0..9u8 {
                    if t.add(t.mul(x, m), b) == y {
                        rows[p][sloped(m, b)] = true;
                    }
                }
            }
            rows[p][vertical(x)] = true;
        }
    }
    for m in 0..9u8 {
        for b in 0..9u8 {
            rows[ideal(m)][sloped(m, b)] = true;
        }
        rows[ideal(m)][at_infinity] = true;
    }
    for c in 0..9u8 {
        rows[ideal_vertical][vertical(c)] = true;
    }
    rows[ideal_vertical][at_infinity] = true;

    let structure = IncidenceStructure::from_rows(n, n, &rows)?;
    let report = structure.validate_axioms();
    if !report.all_ok() {
        return Err(Error::ConstructionFailed(format!(
            "hall plane fails the incidence axioms: {:?}",
            report.violations.first()
        )));
    }

    let mut point_labels = Vec::with_capacity(n as usize);
    for x in 0..9u8 {
        for y in 0..9u8 {
            point_labels.push(format!("({},{})", hall9_label(x), hall9_label(y)));
        }
    }
    for m in 0..9u8 {
        point_labels.push(format!("ideal({})", hall9_label(m)));
    }
    point_labels.push("ideal(vertical)".to_string());

    let mut line_labels = Vec::with_capacity(n as usize);
    for m in 0..9u8 {
        for b in 0..9u8 {
            line_labels.push(format!("[y=x*({})+{}]", hall9_label(m), hall9_label(b)));
        }
    }
    for c in 0..9u8 {
        line_labels.push(format!("[x={}]", hall9_label(c)));
    }
    line_labels.push("[infinity]".to_string());

    let plane = FinitePlane::new(structure, Some(point_labels), Some(line_labels))?;
    Ok(PlaneHandle::from_finite(plane, "hall9"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::gf::GaloisField;

    #[test]
    fn a_field_is_a_quasifield() {
        let f = GaloisField::new(3).unwrap();
        let order = 3usize;
        let mut add = vec![0u8; 9];
        let mut mul = vec![0u8; 9];
        for a in 0..3u8 {
            for b in 0..3u8 {
                add[a as usize * order + b as usize] =
                    f.add(crate::models::gf::FieldElement(a), crate::models::gf::FieldElement(b)).0;
                mul[a as usize * order + b as usize] =
                    f.mul(crate::models::gf::FieldElement(a), crate::models::gf::FieldElement(b)).0;
            }
        }
        assert_eq!(validate_quasifield(&QuasifieldTable { order, add, mul }), Ok(()));
    }

    #[test]
    fn hall9_table_satisfies_every_law() {
        assert_eq!(validate_quasifield(&hall9_table()), Ok(()));
    }

    #[test]
    fn hall9_multiplication_is_not_left_distributive() {
        // This is what separates the Hall system from a field.
        let t = hall9_table();
        let broken = (0..9u8).any(|a| {
            (0..9u8).any(|b| {
                (0..9u8).any(|c| t.mul(a, t.add(b, c)) != t.add(t.mul(a, b), t.mul(a, c)))
            })
        });
        assert!(broken);
    }

    #[test]
    fn zero_divisor_is_reported_with_its_pair() {
        let mut t = hall9_table();
        t.mul[5 * 9 + 7] = 0;
        match validate_quasifield(&t) {
            Err(QuasifieldViolation::ZeroDivisor { a: 5, b: 7 }) => {}
            other => panic!("expected the (5,7) zero divisor, got {:?}", other),
        }
    }

    #[test]
    fn csv_audit_export_covers_both_tables() {
        let csv = hall9_table().csv();
        assert!(csv.starts_with("table,row,values\n"));
        assert_eq!(csv.lines().filter(|l| l.starts_with("add,")).count(), 9);
        assert_eq!(csv.lines().filter(|l| l.starts_with("mul,")).count(), 9);
    }

    #[test]
    fn hall_plane_has_projective_order_nine() {
        let plane = build_hall9().unwrap();
        assert_eq!(plane.n_points(), Some(91));
        assert_eq!(plane.n_lines(), Some(91));
        let s = plane.structure().unwrap();
        for l in 0..91 {
            assert_eq!(s.points_on_line(l).len(), 10);
        }
        for p in 0..91 {
            assert_eq!(s.lines_through_point(p).len(), 10);
        }
    }
}
