//! Exact arithmetic in a single Galois ring `GR(p^n, d)`.
//!
//! The ring is modelled as `Z_{p^n}[x] / (f)` where `f` is a monic polynomial of
//! degree `d` whose reduction mod `p` is irreducible. Elements are coefficient
//! vectors, lowest degree first, and carry a canonical index
//! `sum_i a_i * (p^n)^i` used for serialization and for dense set encodings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// Default bound on `p^{nd}`; rings above it are rejected rather than risk overflow.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrElement {
    coeffs: Vec<u64>,
}

impl GrElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisRing {
    p: u64,
    n: u32,
    d: u32,
    char: u64,
    /// Monic, `d + 1` coefficients, lowest degree first.
    modulus: Vec<u64>,
    order: usize,
}

impl GaloisRing {
    /// `GR(p^n, d)` with the deterministic modulus: the smallest monic irreducible
    /// polynomial of degree `d` over `GF(p)` (coefficient tuples compared from the
    /// top coefficient down), lifted with the identity map into `Z_{p^n}`.
    pub fn new(p: u64, n: u32, d: u32) -> Result<Self> {
        Self::with_limit(p, n, d, DEFAULT_MAX_ORDER)
    }

    pub fn with_limit(p: u64, n: u32, d: u32, limit: u64) -> Result<Self> {
        check_params(p, n, d, limit)?;
        let modulus = smallest_irreducible(p, d);
        Self::build(p, n, modulus)
    }

    /// A Galois ring over an explicitly supplied monic modulus.
    pub fn with_modulus(p: u64, n: u32, modulus: Vec<u64>, limit: u64) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::BadModulus("degree must be at least 1".into()));
        }
        let d = (modulus.len() - 1) as u32;
        check_params(p, n, d, limit)?;
        let char = p.pow(n);
        if *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= char) {
            return Err(Error::BadModulus(format!(
                "coefficients must lie in [0, {char})"
            )));
        }
        let reduced: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if !is_irreducible_mod_p(&reduced, p) {
            return Err(Error::BadModulus(format!(
                "{modulus:?} is not irreducible modulo {p}"
            )));
        }
        Self::build(p, n, modulus)
    }

    fn build(p: u64, n: u32, modulus: Vec<u64>) -> Result<Self> {
        let d = (modulus.len() - 1) as u32;
        let char = p.pow(n);
        Ok(Self {
            p,
            n,
            d,
            char,
            modulus,
            order: char.pow(d) as usize,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// The characteristic `p^n`.
    pub fn characteristic(&self) -> u64 {
        self.char
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn residue_field_order(&self) -> u64 {
        self.p.pow(self.d)
    }

    pub fn unit_count(&self) -> usize {
        self.order - self.order / self.residue_field_order() as usize
    }

    pub fn is_field(&self) -> bool {
        self.n == 1
    }

    /// Canonical string, e.g. `GR(4,2)` or `GR(9)`.
    pub fn spec(&self) -> String {
        if self.d == 1 {
            format!("GR({})", self.char)
        } else {
            format!("GR({},{})", self.char, self.d)
        }
    }

    /// Whether the modulus is the one [`GaloisRing::new`] would pick.
    pub fn has_default_modulus(&self) -> bool {
        self.modulus == smallest_irreducible(self.p, self.d)
    }

    pub fn element(&self, index: usize) -> GrElement {
        debug_assert!(index < self.order);
        let mut coeffs = vec![0; self.d as usize];
        let mut rest = index as u64;
        for c in coeffs.iter_mut() {
            *c = rest % self.char;
            rest /= self.char;
        }
        GrElement { coeffs }
    }

    pub fn index(&self, a: &GrElement) -> usize {
        a.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.char + c) as usize
    }

    /// Element from at most `d` coefficients (missing ones are zero), reduced mod `p^n`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> GrElement {
        assert!(coeffs.len() <= self.d as usize, "too many coefficients");
        let mut out = vec![0; self.d as usize];
        for (slot, &c) in out.iter_mut().zip(coeffs) {
            *slot = c % self.char;
        }
        GrElement { coeffs: out }
    }

    pub fn zero(&self) -> GrElement {
        GrElement {
            coeffs: vec![0; self.d as usize],
        }
    }

    pub fn one(&self) -> GrElement {
        self.from_int(1)
    }

    pub fn from_int(&self, k: u64) -> GrElement {
        let mut coeffs = vec![0; self.d as usize];
        coeffs[0] = k % self.char;
        GrElement { coeffs }
    }

    /// The class of `x`; for `d = 1` this is `0`.
    pub fn x(&self) -> GrElement {
        if self.d == 1 {
            let mut e = self.zero();
            e.coeffs[0] = (self.char - self.modulus[0]) % self.char;
            e
        } else {
            let mut e = self.zero();
            e.coeffs[1] = 1;
            e
        }
    }

    pub fn add(&self, a: &GrElement, b: &GrElement) -> GrElement {
        GrElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) % self.char)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GrElement) -> GrElement {
        GrElement {
            coeffs: a
                .coeffs
                .iter()
                .map(|&x| (self.char - x) % self.char)
                .collect(),
        }
    }

    pub fn sub(&self, a: &GrElement, b: &GrElement) -> GrElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &GrElement, k: u64) -> GrElement {
        let k = k % self.char;
        GrElement {
            coeffs: a.coeffs.iter().map(|&x| x * k % self.char).collect(),
        }
    }

    pub fn mul(&self, a: &GrElement, b: &GrElement) -> GrElement {
        let d = self.d as usize;
        let m = self.char;
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % m;
            }
        }
        for k in (d..2 * d - 1).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..d {
                let sub = lead * self.modulus[i] % m;
                prod[k - d + i] = (prod[k - d + i] + m - sub) % m;
            }
        }
        prod.truncate(d);
        GrElement { coeffs: prod }
    }

    pub fn pow(&self, a: &GrElement, mut e: u64) -> GrElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, a: &GrElement) -> bool {
        a.coeffs.iter().any(|&c| c % self.p != 0)
    }

    pub fn is_zero(&self, a: &GrElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn inv(&self, a: &GrElement) -> Result<GrElement> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit(self.index(a)));
        }
        Ok(self.pow(a, self.unit_count() as u64 - 1))
    }

    /// Largest `v <= n` with `a` in `p^v R`.
    pub fn valuation(&self, a: &GrElement) -> u32 {
        a.coeffs
            .iter()
            .filter(|&&c| c != 0)
            .map(|&c| crate::numtheory::valuation(c, self.p))
            .min()
            .unwrap_or(self.n)
    }

    /// The Teichmüller representative of the residue class of `a` (zero on `pR`).
    pub fn teichmuller_lift(&self, a: &GrElement) -> GrElement {
        let q = self.residue_field_order();
        let e = q.pow(self.n - 1);
        self.pow(a, e)
    }

    /// The Frobenius automorphism: raise every Teichmüller digit of the p-adic
    /// expansion `a = sum_i t_i p^i` to the `p`-th power.
    pub fn frobenius(&self, a: &GrElement) -> GrElement {
        let mut cur = a.clone();
        let mut out = self.zero();
        let mut pk = 1u64;
        for _ in 0..self.n {
            let t = self.teichmuller_lift(&cur);
            out = self.add(&out, &self.scale(&self.pow(&t, self.p), pk));
            let diff = self.sub(&cur, &t);
            debug_assert!(diff.coeffs.iter().all(|c| c % self.p == 0));
            cur = GrElement {
                coeffs: diff.coeffs.iter().map(|c| c / self.p).collect(),
            };
            pk *= self.p;
        }
        out
    }

    /// `Tr(a) = sum_{i<d} frobenius^i(a)`, as a residue in `[0, p^n)`.
    pub fn trace(&self, a: &GrElement) -> u64 {
        let mut sum = a.clone();
        let mut conj = a.clone();
        for _ in 1..self.d {
            conj = self.frobenius(&conj);
            sum = self.add(&sum, &conj);
        }
        debug_assert!(sum.coeffs[1..].iter().all(|&c| c == 0));
        sum.coeffs[0]
    }

    /// The cyclic Teichmüller group of order `p^d - 1`, sorted by index.
    pub fn teichmuller_group(&self) -> Vec<GrElement> {
        let q = self.residue_field_order();
        let mut out: Vec<GrElement> = Vec::new();
        for rep in 1..q {
            let mut digits = vec![0u64; self.d as usize];
            let mut r = rep;
            for c in digits.iter_mut() {
                *c = r % self.p;
                r /= self.p;
            }
            let mut a = GrElement { coeffs: digits };
            loop {
                let next = self.pow(&a, q);
                if next == a {
                    break;
                }
                a = next;
            }
            out.push(a);
        }
        out.sort_by_key(|a| self.index(a));
        out.dedup();
        out
    }

    /// Principal units `1 + pR`, sorted by index.
    pub fn principal_units(&self) -> Vec<GrElement> {
        let one = self.one();
        let mut out: Vec<GrElement> = (0..self.order)
            .map(|i| self.element(i))
            .filter(|a| a.coeffs.iter().all(|c| c % self.p == 0))
            .map(|a| self.add(&one, &a))
            .collect();
        out.sort_by_key(|a| self.index(a));
        out
    }

    pub fn format_element(&self, a: &GrElement) -> String {
        let mut terms = Vec::new();
        for (i, &c) in a.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, _) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{c}x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

fn check_params(p: u64, n: u32, d: u32, limit: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameters(
            "exponent and degree must be positive".into(),
        ));
    }
    let order = (p as u128)
        .checked_pow(n * d)
        .filter(|&o| o <= limit as u128);
    match order {
        Some(_) => Ok(()),
        None => Err(Error::TooLarge {
            order: (p as u128).saturating_pow(n * d),
            limit,
        }),
    }
}

fn smallest_irreducible(p: u64, d: u32) -> Vec<u64> {
    let count = p.pow(d);
    for v in 0..count {
        let mut f = Vec::with_capacity(d as usize + 1);
        let mut r = v;
        for _ in 0..d {
            f.push(r % p);
            r /= p;
        }
        f.push(1);
        if is_irreducible_mod_p(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

// ---- polynomials over GF(p), lowest degree first, no trailing zeros ----

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead_inv = crate::numtheory::mod_inverse(*b.last().unwrap(), p).unwrap();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() * lead_inv % p;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * bc % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `f` (monic, degree `d`) is irreducible over `GF(p)` iff `gcd(f, x^{p^k} - x) = 1`
/// for every `1 <= k <= d/2`.
fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let d = f.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = poly_rem(&[0, 1], &f, p);
    let mut xpk = x.clone();
    for _ in 1..=d / 2 {
        // xpk <- xpk^p mod f
        let mut acc = vec![1u64];
        for _ in 0..p {
            acc = poly_mulmod(&acc, &xpk, &f, p);
        }
        xpk = acc;
        let mut diff = xpk.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(&f, &trim(diff), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
