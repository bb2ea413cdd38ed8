//! Exact arithmetic in `Z[ζ_c] = Z[x]/(Φ_c)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numtheory::divisors;

/// Coefficients of `Φ_c`, lowest degree first.
pub fn cyclotomic_polynomial(c: u64) -> Vec<i64> {
    assert!(c >= 1);
    // x^c - 1
    let mut num = vec![0i64; c as usize + 1];
    num[0] = -1;
    num[c as usize] = 1;
    for d in divisors(c) {
        if d == c {
            continue;
        }
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// Division of integer polynomials by a monic divisor, asserting no remainder.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let q = rem[i + dd];
        quot[i] = q;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= q * b;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// An element of `Z[ζ_c]` in the power basis `1, ζ, ..., ζ^{φ(c)-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycInt {
    pub c: u64,
    pub coeffs: Vec<i64>,
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt(c={}, {:?})", self.c, self.coeffs)
    }
}

impl CycInt {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    pub fn add_assign(&mut self, other: &CycInt) {
        debug_assert_eq!(self.c, other.c);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn sub(&self, other: &CycInt) -> CycInt {
        debug_assert_eq!(self.c, other.c);
        CycInt {
            c: self.c,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Precomputed reductions of `ζ_c^k` for `0 <= k < c`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    c: u64,
    phi: usize,
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn new(c: u64) -> Self {
        let poly = cyclotomic_polynomial(c);
        let phi = poly.len() - 1;
        let mut powers = Vec::with_capacity(c as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..c {
            powers.push(cur.clone());
            // multiply by x and reduce by the monic Φ_c
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..phi - 1]);
            for i in 0..phi {
                next[i] -= top * poly[i];
            }
            cur = next;
        }
        Self { c, phi, powers }
    }

    pub fn conductor(&self) -> u64 {
        self.c
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn zero(&self) -> CycInt {
        CycInt {
            c: self.c,
            coeffs: vec![0; self.phi],
        }
    }

    pub fn from_int(&self, n: i64) -> CycInt {
        let mut z = self.zero();
        z.coeffs[0] = n;
        z
    }

    /// `ζ_c^k`.
    pub fn zeta_pow(&self, k: u64) -> CycInt {
        CycInt {
            c: self.c,
            coeffs: self.powers[(k % self.c) as usize].clone(),
        }
    }

    /// `Σ_k counts[k] ζ^k` for a histogram of exponents modulo `c`.
    pub fn from_exponent_counts(&self, counts: &[i64]) -> CycInt {
        let mut coeffs = vec![0i64; self.phi];
        for (k, &n) in counts.iter().enumerate() {
            if n != 0 {
                for (a, &b) in coeffs.iter_mut().zip(&self.powers[k]) {
                    *a += n * b;
                }
            }
        }
        CycInt { c: self.c, coeffs }
    }

    /// Product in `Z[ζ_c]`.
    pub fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        let mut counts = vec![0i64; self.c as usize];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                counts[(i + j) % self.c as usize] += x * y;
            }
        }
        self.from_exponent_counts(&counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::euler_phi;

    #[test]
    fn cyclotomic_polynomial_examples() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        let mut p36 = vec![0i64; 13];
        p36[0] = 1;
        p36[6] = -1;
        p36[12] = 1;
        assert_eq!(cyclotomic_polynomial(36), p36);
        for c in 1..=60 {
            assert_eq!(cyclotomic_polynomial(c).len() as u64 - 1, euler_phi(c));
        }
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for c in [2u64, 3, 4, 9, 12, 36, 45] {
            let f = CyclotomicField::new(c);
            let mut total = f.zero();
            for k in 0..c {
                total.add_assign(&f.zeta_pow(k));
            }
            assert!(total.is_zero(), "c = {c}");
            for d in divisors(c).into_iter().filter(|&d| d > 1) {
                let mut sub = f.zero();
                for k in 0..d {
                    sub.add_assign(&f.zeta_pow(k * c / d));
                }
                assert!(sub.is_zero());
            }
            assert_eq!(f.mul(&f.zeta_pow(c - 1), &f.zeta_pow(1)), f.from_int(1));
        }
        let f9 = CyclotomicField::new(9);
        let mut s = f9.zeta_pow(1);
        s.add_assign(&f9.zeta_pow(4));
        s.add_assign(&f9.zeta_pow(7));
        assert!(s.is_zero());
    }

    #[test]
    fn trivial_conductor() {
        let f = CyclotomicField::new(1);
        assert_eq!(f.zeta_pow(0), f.from_int(1));
        assert_eq!(f.degree(), 1);
    }
}
