//! Small Galois fields GF(q) for prime powers q <= 16, as explicit tables.
//!
//! Prime-power fields use fixed irreducible moduli so element encodings and
//! every derived table are reproducible:
//!   GF(4)  = GF(2)[x] / (x^2 + x + 1)
//!   GF(8)  = GF(2)[x] / (x^3 + x + 1)
//!   GF(9)  = GF(3)[x] / (x^2 + 1)
//!   GF(16) = GF(2)[x] / (x^4 + x + 1)
//! An element is encoded as the base-p value of its coefficient vector
//! (little-endian), so indices 0 and 1 are always the additive and
//! multiplicative identities.

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// An element of a [`GaloisField`], by table index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u8);

#[derive(Debug, Clone)]
pub struct GaloisField {
    q: u8,
    p: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    modulus: &'static str,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<GaloisField> {
        let (p, degree, modulus, mod_coeffs): (u8, u8, &'static str, &'static [u8]) = match q {
            2 | 3 | 5 | 7 | 11 | 13 => (q as u8, 1, "prime", &[]),
            4 => (2, 2, "x^2+x+1", &[1, 1]),
            8 => (2, 3, "x^3+x+1", &[1, 1, 0]),
            9 => (3, 2, "x^2+1", &[1, 0]),
            16 => (2, 4, "x^4+x+1", &[1, 1, 0, 0]),
            _ => return Err(Error::UnsupportedOrder(q)),
        };
        let q = q as u8;
        let qs = q as usize;
        let to_vec = |e: u8| -> Vec<u8> {
            let mut digits = Vec::with_capacity(degree as usize);
            let mut v = e;
            for _ in 0..degree {
                digits.push(v % p);
                v /= p;
            }
            digits
        };
        let from_vec = |digits: &[u8]| -> u8 {
            digits
                .iter()
                .rev()
                .fold(0u8, |acc, &d| acc * p + d)
        };

        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        let mut neg = vec![0u8; qs];
        for a in 0..q {
            let av = to_vec(a);
            neg[a as usize] = from_vec(
                &av.iter()
                    .map(|&d| (p - d) % p)
                    .collect::<Vec<_>>(),
            );
            for b in 0..q {
                let bv = to_vec(b);
                let sum: Vec<u8> = av.iter().zip(&bv).map(|(&x, &y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = from_vec(&sum);

                // Polynomial product reduced by the modulus (x^degree = -mod_coeffs).
                let mut prod = vec![0u16; 2 * degree as usize];
                for (i, &x) in av.iter().enumerate() {
                    for (j, &y) in bv.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x as u16 * y as u16) % p as u16;
                    }
                }
                for k in (degree as usize..prod.len()).rev() {
                    let coeff = prod[k];
                    if coeff != 0 {
                        prod[k] = 0;
                        for (i, &m) in mod_coeffs.iter().enumerate() {
                            let idx = k - degree as usize + i;
                            let sub = (coeff * m as u16) % p as u16;
                            prod[idx] = (prod[idx] + p as u16 - sub) % p as u16;
                        }
                    }
                }
                let reduced: Vec<u8> = prod[..degree as usize].iter().map(|&x| x as u8).collect();
                mul[a as usize * qs + b as usize] = from_vec(&reduced);
            }
        }

        // Every nonzero element must have an inverse; checked exhaustively.
        let mut inv = vec![0u8; qs];
        for a in 1..q {
            let found = (1..q).find(|&b| mul[a as usize * qs + b as usize] == 1);
            match found {
                Some(b) => inv[a as usize] = b,
                None => {
                    return Err(Error::ConstructionFailed(format!(
                        "element {} of GF({}) has no inverse (modulus {})",
                        a, q, modulus
                    )))
                }
            }
        }

        Ok(GaloisField {
            q,
            p,
            add,
            mul,
            neg,
            inv,
            modulus,
        })
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn modulus(&self) -> &'static str {
        self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            None
        } else {
            Some(FieldElement(self.inv[a.0 as usize]))
        }
    }

    /// Addition or multiplication table as CSV, one row per element, for
    /// external audit.
    pub fn table_csv(&self, which: TableKind) -> String {
        let table = match which {
            TableKind::Addition => &self.add,
            TableKind::Multiplication => &self.mul,
        };
        let mut out = String::new();
        for a in 0..self.q as usize {
            let row: Vec<String> = (0..self.q as usize)
                .map(|b| table[a * self.q as usize + b].to_string())
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Exhaustive audit of the commutative-field laws over the tables.
    pub fn satisfies_field_laws(&self) -> bool {
        let q = self.q;
        for a in (0..q).map(FieldElement) {
            for b in (0..q).map(FieldElement) {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
                for c in (0..q).map(FieldElement) {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return false;
                    }
                    let lhs = self.mul(a, self.add(b, c));
                    let rhs = self.add(self.mul(a, b), self.mul(a, c));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy)]
pub enum TableKind {
    Addition,
    Multiplication,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_orders_build_and_satisfy_field_laws() {
        for &q in &SUPPORTED_ORDERS {
            let f = GaloisField::new(q).unwrap();
            assert_eq!(f.order() as u64, q);
            assert!(f.satisfies_field_laws(), "laws fail for q={q}");
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                assert_eq!(f.mul(a, f.one()), a);
                if a != f.zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn non_prime_powers_are_rejected() {
        for q in [0, 1, 6, 10, 12, 14, 15, 17, 25] {
            assert_eq!(GaloisField::new(q).unwrap_err(), Error::UnsupportedOrder(q));
        }
    }

    #[test]
    fn gf4_generator_arithmetic() {
        // In GF(4) with modulus x^2+x+1, element 2 encodes x: x*x = x+1 = 3.
        let f = GaloisField::new(4).unwrap();
        assert_eq!(f.mul(FieldElement(2), FieldElement(2)), FieldElement(3));
        assert_eq!(f.mul(FieldElement(2), FieldElement(3)), FieldElement(1));
    }

    #[test]
    fn gf9_i_squared_is_minus_one() {
        // Element 3 encodes x with x^2 = -1 = 2.
        let f = GaloisField::new(9).unwrap();
        assert_eq!(f.mul(FieldElement(3), FieldElement(3)), FieldElement(2));
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for &q in &SUPPORTED_ORDERS {
            let f = GaloisField::new(q).unwrap();
            let has_generator = f.elements().skip(1).any(|g| {
                let mut seen = vec![false; q as usize];
                let mut x = f.one();
                for _ in 0..(q - 1) {
                    seen[x.0 as usize] = true;
                    x = f.mul(x, g);
                }
                seen.iter().skip(1).all(|&s| s)
            });
            assert!(has_generator, "no generator for q={q}");
        }
    }

    #[test]
    fn csv_export_has_expected_shape() {
        let f = GaloisField::new(3).unwrap();
        let csv = f.table_csv(TableKind::Multiplication);
        assert_eq!(csv, "0,0,0\n0,1,2\n0,2,1\n");
    }
}
