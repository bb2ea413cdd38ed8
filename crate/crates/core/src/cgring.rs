//! CG-rings: finite products of Galois rings with pairwise coprime characteristics.
//!
//! Elements are addressed by a global mixed-radix index: the index of the
//! `k`-th component part is weighted by the product of the orders of the
//! components before it. Ideals are `mR` for divisors `m` of the
//! characteristic and are represented by that divisor.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{GaloisRing, GrElement, DEFAULT_MAX_ORDER};
use crate::numtheory::{divisors, gcd, lcm, valuation};
use crate::set::ElementSet;

/// Rings up to this order get full addition and multiplication tables.
const TABLE_LIMIT: usize = 1024;

/// The ideal `mR`, identified by the divisor `m` of the characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ideal {
    m: u64,
}

impl Ideal {
    pub fn generator(self) -> u64 {
        self.m
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}R", self.m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    pub parts: Vec<GrElement>,
    pub index: usize,
}

#[derive(Clone)]
pub struct CGRing {
    components: Vec<GaloisRing>,
    order: usize,
    characteristic: u64,
    strides: Vec<usize>,
    digit_radix: Vec<usize>,
    digit_stride: Vec<usize>,
    comp_mul: Vec<Option<Vec<u32>>>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
    neg_table: Vec<u32>,
    units: ElementSet,
    unit_generators: Vec<usize>,
}

impl PartialEq for CGRing {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

impl Eq for CGRing {}

impl fmt::Debug for CGRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CGRing({})", self.spec())
    }
}

impl fmt::Display for CGRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

impl CGRing {
    pub fn new(components: Vec<GaloisRing>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameters(
                "a CG-ring needs at least one component".into(),
            ));
        }
        Self::with_limit(components, DEFAULT_MAX_ORDER)
    }

    /// Like [`CGRing::new`] but with an explicit order bound. An empty component
    /// list gives the one-element ring.
    pub fn with_limit(components: Vec<GaloisRing>, limit: u64) -> Result<Self> {
        for (i, a) in components.iter().enumerate() {
            if components[..i].iter().any(|b| b.p() == a.p()) {
                return Err(Error::SharedPrime(a.p()));
            }
        }
        let order128: u128 = components.iter().map(|g| g.order() as u128).product();
        if order128 > limit as u128 {
            return Err(Error::TooLarge {
                order: order128,
                limit,
            });
        }
        let order = order128 as usize;
        let characteristic = components.iter().map(|g| g.characteristic()).product();

        let mut strides = Vec::with_capacity(components.len());
        let mut digit_radix = Vec::new();
        let mut digit_stride = Vec::new();
        let mut s = 1usize;
        for g in &components {
            strides.push(s);
            let mut ds = s;
            for _ in 0..g.d() {
                digit_radix.push(g.characteristic() as usize);
                digit_stride.push(ds);
                ds *= g.characteristic() as usize;
            }
            s *= g.order();
        }

        let comp_mul = components
            .iter()
            .map(|g| {
                (g.order() <= TABLE_LIMIT).then(|| {
                    let elems: Vec<GrElement> = (0..g.order()).map(|i| g.element(i)).collect();
                    let mut t = Vec::with_capacity(g.order() * g.order());
                    for a in &elems {
                        for b in &elems {
                            t.push(g.index(&g.mul(a, b)) as u32);
                        }
                    }
                    t
                })
            })
            .collect();

        let mut ring = Self {
            components,
            order,
            characteristic,
            strides,
            digit_radix,
            digit_stride,
            comp_mul,
            add_table: None,
            mul_table: None,
            neg_table: Vec::new(),
            units: ElementSet::new(order),
            unit_generators: Vec::new(),
        };
        ring.neg_table = (0..order).map(|x| ring.neg_digits(x) as u32).collect();
        if order <= TABLE_LIMIT {
            let mut add = Vec::with_capacity(order * order);
            let mut mul = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    add.push(ring.add_digits(a, b) as u32);
                    mul.push(ring.mul_components(a, b) as u32);
                }
            }
            ring.add_table = Some(add);
            ring.mul_table = Some(mul);
        }
        ring.units = ElementSet::from_indices(order, (0..order).filter(|&x| ring.compute_is_unit(x)));
        ring.unit_generators = ring.greedy_unit_generators();
        Ok(ring)
    }

    /// The product ring with the components of `self` followed by those of `other`.
    pub fn product(&self, other: &CGRing) -> Result<CGRing> {
        let mut comps = self.components.clone();
        comps.extend(other.components.iter().cloned());
        CGRing::with_limit(comps, DEFAULT_MAX_ORDER.max(self.order as u64 * other.order as u64))
    }

    pub fn components(&self) -> &[GaloisRing] {
        &self.components
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// The primes `P(R)` in component order.
    pub fn primes(&self) -> Vec<u64> {
        self.components.iter().map(|g| g.p()).collect()
    }

    pub fn component_of_prime(&self, p: u64) -> Option<usize> {
        self.components.iter().position(|g| g.p() == p)
    }

    pub fn is_odd(&self) -> bool {
        self.characteristic % 2 == 1
    }

    pub fn is_field(&self) -> bool {
        self.components.len() == 1 && self.components[0].is_field()
    }

    /// Canonical ring spec, components joined by `x`.
    pub fn spec(&self) -> String {
        if self.components.is_empty() {
            return "GR(1)".into();
        }
        self.components
            .iter()
            .map(|g| g.spec())
            .collect::<Vec<_>>()
            .join("x")
    }

    // ---- element addressing ----

    pub fn part_index(&self, x: usize, k: usize) -> usize {
        (x / self.strides[k]) % self.components[k].order()
    }

    pub fn compose(&self, parts: &[usize]) -> usize {
        parts
            .iter()
            .zip(&self.strides)
            .map(|(&i, &s)| i * s)
            .sum()
    }

    pub fn element(&self, index: usize) -> RingElement {
        let parts = self
            .components
            .iter()
            .enumerate()
            .map(|(k, g)| g.element(self.part_index(index, k)))
            .collect();
        RingElement { parts, index }
    }

    pub fn index_of(&self, parts: &[GrElement]) -> usize {
        let idx: Vec<usize> = self
            .components
            .iter()
            .zip(parts)
            .map(|(g, a)| g.index(a))
            .collect();
        self.compose(&idx)
    }

    pub fn format_element(&self, x: usize) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .map(|(k, g)| g.format_element(&g.element(self.part_index(x, k))))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(", "))
        }
    }

    // ---- arithmetic on indices ----

    fn add_digits(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        for (&r, &s) in self.digit_radix.iter().zip(&self.digit_stride) {
            let da = (a / s) % r;
            let db = (b / s) % r;
            out += ((da + db) % r) * s;
        }
        out
    }

    fn neg_digits(&self, a: usize) -> usize {
        let mut out = 0;
        for (&r, &s) in self.digit_radix.iter().zip(&self.digit_stride) {
            let da = (a / s) % r;
            out += ((r - da) % r) * s;
        }
        out
    }

    fn mul_components(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        for (k, g) in self.components.iter().enumerate() {
            let ia = self.part_index(a, k);
            let ib = self.part_index(b, k);
            let prod = match &self.comp_mul[k] {
                Some(t) => t[ia * g.order() + ib] as usize,
                None => g.index(&g.mul(&g.element(ia), &g.element(ib))),
            };
            out += prod * self.strides[k];
        }
        out
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.from_int(1)
    }

    /// The image of the integer `k` under `Z -> R`.
    pub fn from_int(&self, k: u64) -> usize {
        self.components
            .iter()
            .zip(&self.strides)
            .map(|(g, &s)| (k % g.characteristic()) as usize * s)
            .sum()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.add_table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg_table[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul_table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.mul_components(a, b),
        }
    }

    /// The integer multiple `k * a`.
    pub fn scale(&self, a: usize, k: u64) -> usize {
        self.mul(a, self.from_int(k))
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn compute_is_unit(&self, x: usize) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(k, g)| g.is_unit(&g.element(self.part_index(x, k))))
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.units.contains(x)
    }

    pub fn units(&self) -> &ElementSet {
        &self.units
    }

    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    /// A generating set of `R^×`, chosen greedily by ascending index.
    pub fn unit_generators(&self) -> &[usize] {
        &self.unit_generators
    }

    pub fn inv(&self, x: usize) -> Result<usize> {
        if !self.is_unit(x) {
            return Err(Error::NotAUnit(x));
        }
        let mut parts = Vec::with_capacity(self.components.len());
        for (k, g) in self.components.iter().enumerate() {
            parts.push(g.index(&g.inv(&g.element(self.part_index(x, k)))?));
        }
        Ok(self.compose(&parts))
    }

    fn greedy_unit_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut group = ElementSet::from_indices(self.order, [self.one()]);
        for u in self.units.iter() {
            if group.contains(u) {
                continue;
            }
            gens.push(u);
            let mut powers = vec![self.one()];
            let mut y = u;
            while y != self.one() {
                powers.push(y);
                y = self.mul(y, u);
            }
            let members: Vec<usize> = group.iter().collect();
            for h in members {
                for &w in &powers {
                    group.insert(self.mul(h, w));
                }
            }
        }
        gens
    }

    // ---- ideals ----

    pub fn ideal(&self, m: u64) -> Result<Ideal> {
        if m == 0 || !self.characteristic.is_multiple_of(m) {
            return Err(Error::NotADivisor {
                m,
                c: self.characteristic,
            });
        }
        Ok(Ideal { m })
    }

    pub fn whole(&self) -> Ideal {
        Ideal { m: 1 }
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal {
            m: self.characteristic,
        }
    }

    pub fn is_zero_ideal(&self, i: Ideal) -> bool {
        i.m == self.characteristic
    }

    /// All ideals, ordered by their generator `m`.
    pub fn ideals(&self) -> Vec<Ideal> {
        divisors(self.characteristic)
            .into_iter()
            .map(|m| Ideal { m })
            .collect()
    }

    /// The maximal ideals `pR`.
    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        self.primes().into_iter().map(|p| Ideal { m: p }).collect()
    }

    /// The minimal ideals `(c/p)R`.
    pub fn minimal_ideals(&self) -> Vec<Ideal> {
        self.primes()
            .into_iter()
            .map(|p| Ideal {
                m: self.characteristic / p,
            })
            .collect()
    }

    /// The sum of the minimal ideals of the components.
    pub fn i0(&self) -> Ideal {
        Ideal {
            m: self
                .components
                .iter()
                .map(|g| g.characteristic() / g.p())
                .product(),
        }
    }

    /// The ideal `R_Q` for a set of primes `Q`.
    pub fn prime_part_ideal(&self, primes: &[u64]) -> Ideal {
        Ideal {
            m: self
                .components
                .iter()
                .filter(|g| !primes.contains(&g.p()))
                .map(|g| g.characteristic())
                .product(),
        }
    }

    /// `(mR)^⊥ = (c/m)R` under the identification of `R` with its dual.
    pub fn perp(&self, i: Ideal) -> Ideal {
        Ideal {
            m: self.characteristic / i.m,
        }
    }

    /// Whether `small ⊆ big`.
    pub fn ideal_le(&self, small: Ideal, big: Ideal) -> bool {
        small.m.is_multiple_of(big.m)
    }

    pub fn ideal_sum(&self, a: Ideal, b: Ideal) -> Ideal {
        Ideal { m: gcd(a.m, b.m) }
    }

    pub fn ideal_intersection(&self, a: Ideal, b: Ideal) -> Ideal {
        Ideal { m: lcm(a.m, b.m) }
    }

    /// The exponent of `p_k` in the generator, i.e. `I_k = p^v R_k`.
    pub fn ideal_valuation(&self, i: Ideal, k: usize) -> u32 {
        let g = &self.components[k];
        valuation(i.m, g.p()).min(g.n())
    }

    /// Whether the `k`-th component of the ideal is the whole component ring.
    pub fn ideal_component_is_full(&self, i: Ideal, k: usize) -> bool {
        self.ideal_valuation(i, k) == 0
    }

    pub fn ideal_component_is_zero(&self, i: Ideal, k: usize) -> bool {
        self.ideal_valuation(i, k) == self.components[k].n()
    }

    pub fn ideal_order(&self, i: Ideal) -> usize {
        self.components
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let v = self.ideal_valuation(i, k);
                g.p().pow((g.n() - v) * g.d()) as usize
            })
            .product()
    }

    /// Additive generators of `mR`.
    pub fn ideal_generators(&self, i: Ideal) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut digit = 0;
        for (k, g) in self.components.iter().enumerate() {
            let v = self.ideal_valuation(i, k);
            for _ in 0..g.d() {
                if v < g.n() {
                    gens.push(g.p().pow(v) as usize * self.digit_stride[digit]);
                }
                digit += 1;
            }
        }
        gens
    }

    /// The generator `m_x` with `xR = m_x R`.
    pub fn element_ideal(&self, x: usize) -> Ideal {
        let m = self
            .components
            .iter()
            .enumerate()
            .map(|(k, g)| g.p().pow(g.valuation(&g.element(self.part_index(x, k)))))
            .product();
        Ideal { m }
    }

    pub fn ideal_contains(&self, i: Ideal, x: usize) -> bool {
        self.element_ideal(x).m.is_multiple_of(i.m)
    }

    pub fn ideal_elements(&self, i: Ideal) -> ElementSet {
        ElementSet::from_indices(self.order, (0..self.order).filter(|&x| self.ideal_contains(i, x)))
    }

    /// The orbit `mR^×` of `R^×` through `m`, the set of generators of `mR`.
    pub fn ideal_orbit(&self, i: Ideal) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&x| self.element_ideal(x) == i),
        )
    }

    fn is_union_of_cosets(&self, x: &ElementSet, i: Ideal) -> bool {
        let gens = self.ideal_generators(i);
        x.iter()
            .all(|a| gens.iter().all(|&g| x.contains(self.add(a, g))))
    }

    /// `I_L(X)`: the largest ideal `I` with `X + I = X`.
    pub fn il(&self, x: &ElementSet) -> Result<Ideal> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut ideals = self.ideals();
        ideals.sort_by_key(|&i| (std::cmp::Reverse(self.ideal_order(i)), i.m));
        Ok(ideals
            .into_iter()
            .find(|&i| self.is_union_of_cosets(x, i))
            .expect("the zero ideal always qualifies"))
    }

    /// `I_U(X)`: the smallest ideal containing `X`.
    pub fn iu(&self, x: &ElementSet) -> Result<Ideal> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        let m = x
            .iter()
            .map(|a| self.element_ideal(a).m)
            .fold(self.characteristic, gcd);
        Ok(Ideal { m })
    }

    pub fn annihilator(&self, x: &ElementSet) -> Ideal {
        let m = x.iter().fold(1, |acc, a| {
            let ma = self.element_ideal(a).m;
            lcm(acc, self.characteristic / ma)
        });
        Ideal { m }
    }

    pub fn is_pure_set(&self, x: &ElementSet) -> Result<bool> {
        Ok(self.is_zero_ideal(self.il(x)?))
    }

    // ---- quotients, ideal rings, sub-products ----

    pub fn quotient(&self, i: Ideal) -> Result<Quotient> {
        let i = self.ideal(i.m)?;
        let mut comps = Vec::new();
        let mut kept = Vec::new();
        for (k, g) in self.components.iter().enumerate() {
            let v = self.ideal_valuation(i, k);
            if v == 0 {
                continue;
            }
            let pv = g.p().pow(v);
            let modulus = g.modulus().iter().map(|c| c % pv).collect();
            comps.push(GaloisRing::with_modulus(g.p(), v, modulus, u64::MAX)?);
            kept.push(k);
        }
        let ring = CGRing::with_limit(comps, u64::MAX)?;
        let mut map = Vec::with_capacity(self.order);
        for x in 0..self.order {
            let mut y = 0;
            for (j, &k) in kept.iter().enumerate() {
                let g = &self.components[k];
                let h = &ring.components[j];
                let coeffs: Vec<u64> = g
                    .element(self.part_index(x, k))
                    .coeffs()
                    .iter()
                    .map(|c| c % h.characteristic())
                    .collect();
                y += h.index(&h.from_coeffs(&coeffs)) * ring.strides[j];
            }
            map.push(y as u32);
        }
        let mut section = vec![usize::MAX; ring.order];
        for (x, &y) in map.iter().enumerate() {
            if section[y as usize] == usize::MAX {
                section[y as usize] = x;
            }
        }
        Ok(Quotient {
            ring,
            ideal: i,
            map,
            section,
        })
    }

    /// The ideal `mR` with its own ring structure (identity `m`), realised as
    /// `R / ann(m)` and embedded via `x -> m x`.
    pub fn ideal_ring(&self, m: u64) -> Result<IdealRing> {
        let i = self.ideal(m)?;
        let quotient = self.quotient(self.perp(i))?;
        let embed: Vec<usize> = (0..quotient.ring.order)
            .map(|t| self.scale(quotient.section(t), m))
            .collect();
        let mut locate = vec![u32::MAX; self.order];
        for (t, &x) in embed.iter().enumerate() {
            locate[x] = t as u32;
        }
        Ok(IdealRing {
            ideal: i,
            quotient,
            embed,
            locate,
        })
    }

    /// The sub-product `R_Q` as a ring of its own (components in `Q`, original order).
    pub fn subring(&self, primes: &[u64]) -> Result<SubRing> {
        let positions: Vec<usize> = (0..self.components.len())
            .filter(|&k| primes.contains(&self.components[k].p()))
            .collect();
        let comps = positions.iter().map(|&k| self.components[k].clone()).collect();
        let ring = CGRing::with_limit(comps, u64::MAX)?;
        let embed = (0..ring.order)
            .map(|y| {
                positions
                    .iter()
                    .enumerate()
                    .map(|(j, &k)| ring.part_index(y, j) * self.strides[k])
                    .sum()
            })
            .collect();
        Ok(SubRing {
            ring,
            positions,
            embed,
            strides: self.strides.clone(),
            parent_orders: self.components.iter().map(|g| g.order()).collect(),
        })
    }

    /// `x_Q`: keep the components in `Q`, zero the others.
    pub fn project(&self, x: usize, primes: &[u64]) -> usize {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, g)| primes.contains(&g.p()))
            .map(|(k, _)| self.part_index(x, k) * self.strides[k])
            .sum()
    }

    pub fn project_set(&self, x: &ElementSet, primes: &[u64]) -> ElementSet {
        ElementSet::from_indices(self.order, x.iter().map(|a| self.project(a, primes)))
    }

    /// The units `R_Q^×` acting on `R`: units that are `1` outside `Q`.
    pub fn component_unit_generators(&self, primes: &[u64]) -> Vec<usize> {
        let mut gens = Vec::new();
        for (k, g) in self.components.iter().enumerate() {
            if !primes.contains(&g.p()) {
                continue;
            }
            let sub = self.subring(&[g.p()]).expect("component subring");
            let one_rest: usize = self.one() - self.part_index(self.one(), k) * self.strides[k];
            for &u in sub.ring.unit_generators() {
                gens.push(one_rest + sub.embed(u));
            }
        }
        gens
    }

    // ---- unit-group actions ----

    /// Orbits of a multiplicatively closed set `K ⊆ R^×` on `R`, ordered by least element.
    pub fn orbit_partition(&self, k: &[usize]) -> Result<Vec<Vec<usize>>> {
        let members = ElementSet::from_indices(self.order, k.iter().copied());
        if !members.contains(self.one()) {
            return Err(Error::NotASubgroup("does not contain 1".into()));
        }
        for a in members.iter() {
            if !self.is_unit(a) {
                return Err(Error::NotASubgroup(format!("{a} is not a unit")));
            }
            for b in members.iter() {
                if !members.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "not closed: {a} * {b} = {}",
                        self.mul(a, b)
                    )));
                }
            }
        }
        Ok(self.orbits_unchecked(&members.to_vec()))
    }

    pub(crate) fn orbits_unchecked(&self, k: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = k.iter().map(|&u| self.mul(x, u)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn orbit(&self, x: usize, k: &[usize]) -> ElementSet {
        ElementSet::from_indices(self.order, k.iter().map(|&u| self.mul(x, u)))
    }
}

/// `R/I` together with the projection and its least-index section.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ring: CGRing,
    pub ideal: Ideal,
    map: Vec<u32>,
    section: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn section(&self, y: usize) -> usize {
        self.section[y]
    }

    pub fn project_set(&self, x: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.ring.order(), x.iter().map(|a| self.project(a)))
    }
}

/// The ring `R_I` on an ideal `I = mR`.
#[derive(Clone, Debug)]
pub struct IdealRing {
    pub ideal: Ideal,
    pub quotient: Quotient,
    embed: Vec<usize>,
    locate: Vec<u32>,
}

impl IdealRing {
    pub fn ring(&self) -> &CGRing {
        &self.quotient.ring
    }

    /// The element of `mR ⊆ R` represented by `t`.
    pub fn to_parent(&self, t: usize) -> usize {
        self.embed[t]
    }

    pub fn from_parent(&self, x: usize) -> Option<usize> {
        match self.locate[x] {
            u32::MAX => None,
            t => Some(t as usize),
        }
    }

    /// `f_I(x) = m x`, in the coordinates of `R_I`.
    pub fn f(&self, x: usize) -> usize {
        self.quotient.project(x)
    }
}

/// `R_Q` as a standalone ring with the embedding into and projection from `R`.
#[derive(Clone, Debug)]
pub struct SubRing {
    pub ring: CGRing,
    pub positions: Vec<usize>,
    embed: Vec<usize>,
    strides: Vec<usize>,
    parent_orders: Vec<usize>,
}

impl SubRing {
    pub fn embed(&self, y: usize) -> usize {
        self.embed[y]
    }

    pub fn project(&self, x: usize) -> usize {
        let parts: Vec<usize> = self
            .positions
            .iter()
            .map(|&k| (x / self.strides[k]) % self.parent_orders[k])
            .collect();
        self.ring.compose(&parts)
    }
}
