//! Small finite fields `F_{p^k}`, elements encoded as integers whose base-`p`
//! digits are polynomial coefficients (constant term first).

use crate::arith;
use crate::error::GroupError;

/// Largest field size supported (`2¹²`).
pub const MAX_FIELD_SIZE: u64 = 1 << 12;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    degree: u32,
    size: u64,
    /// Monic modulus, coefficients low to high, length `degree + 1`.
    modulus: Vec<u64>,
    primitive: u64,
}

impl FiniteField {
    /// The field of `size` elements, defined by the first primitive polynomial
    /// in lexicographic (encoding) order.
    pub fn new(size: u64) -> Result<Self, GroupError> {
        let (p, degree) = arith::prime_power(size).ok_or(GroupError::NotPrimePower(size))?;
        if size > MAX_FIELD_SIZE {
            return Err(GroupError::InvalidParameter(format!(
                "field of size {size} exceeds {MAX_FIELD_SIZE}"
            )));
        }
        let k = degree as usize;
        for low in 1..size {
            let mut modulus = digits(low, p, k);
            modulus.push(1);
            let mut field = FiniteField {
                p,
                degree,
                size,
                modulus,
                primitive: 0,
            };
            // x itself, or the root a of (x - a) when degree = 1
            let x = if k == 1 { field.neg(low) } else { p };
            if field.mult_order(x) == size - 1 {
                field.primitive = (1..size)
                    .find(|&a| field.mult_order(a) == size - 1)
                    .expect("primitive element exists");
                return Ok(field);
            }
        }
        unreachable!("a primitive polynomial exists for every prime power")
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Smallest primitive element in encoding order.
    pub fn primitive_element(&self) -> u64 {
        self.primitive
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let k = self.degree as usize;
        let (da, db) = (digits(a, self.p, k), digits(b, self.p, k));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        undigits(&sum, self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let d: Vec<u64> = digits(a, self.p, self.degree as usize)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        undigits(&d, self.p)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let k = self.degree as usize;
        let p = self.p;
        let (da, db) = (digits(a, p, k), digits(b, p, k));
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for top in (k..2 * k).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            // subtract c * x^(top-k) * modulus
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + p * p - c * m % p) % p;
            }
        }
        undigits(&prod[..k], p)
    }

    /// Multiplicative order of a nonzero element; 0 for zero or a non-unit.
    pub fn mult_order(&self, a: u64) -> u64 {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        for k in 1..self.size {
            if x == 1 {
                return k;
            }
            x = self.mul(x, a);
        }
        0
    }
}

fn digits(mut a: u64, p: u64, k: usize) -> Vec<u64> {
    let mut out = vec![0; k];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}
