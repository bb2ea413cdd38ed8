//! S-rings over CG-rings, stored as verified partitions of the ring.

mod closure;
mod structure;
mod verify;

use std::fmt;
use std::sync::Arc;

use crate::cgring::{CGRing, Ideal};
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::subgroup::UnitSubgroup;

pub use closure::{schur_closure, schur_closure_dense};
pub use structure::{assemble_tensor, TensorSplit, WreathCert};
pub use verify::{verify_partition, Axiom, VerifyReport, Violation};

#[derive(Clone)]
pub struct SRing {
    ring: Arc<CGRing>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
}

impl fmt::Debug for SRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SRing")
            .field("ring", &self.ring.spec())
            .field("classes", &self.classes)
            .finish()
    }
}

impl PartialEq for SRing {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.classes == other.classes
    }
}

impl Eq for SRing {}

/// Sorts each class and orders classes by least element.
pub(crate) fn normalize(mut classes: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_unstable_by_key(|c| c.first().copied().unwrap_or(usize::MAX));
    classes
}

/// Groups `0..labels.len()` by label, ordered by least element.
pub(crate) fn classes_from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Vec<Vec<usize>> {
    let mut ids = std::collections::HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (x, l) in labels.iter().enumerate() {
        let id = *ids.entry(l.clone()).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(x);
    }
    classes
}

impl SRing {
    /// Builds the partition without checking the S-ring axioms.
    pub fn from_partition(ring: Arc<CGRing>, classes: Vec<Vec<usize>>) -> Result<Self> {
        let n = ring.order();
        let mut class_of = vec![u32::MAX; n];
        for (i, c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::NotAPartition(format!("class {i} is empty")));
            }
            for &x in c {
                if x >= n {
                    return Err(Error::NotAPartition(format!("{x} is not an element")));
                }
                if class_of[x] != u32::MAX {
                    return Err(Error::NotAPartition(format!("{x} occurs twice")));
                }
                class_of[x] = i as u32;
            }
        }
        if let Some(x) = class_of.iter().position(|&c| c == u32::MAX) {
            return Err(Error::NotAPartition(format!("{x} is not covered")));
        }
        let classes = normalize(classes);
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i as u32;
            }
        }
        Ok(Self {
            ring,
            classes,
            class_of,
        })
    }

    /// Builds the partition and checks every S-ring axiom.
    pub fn new(ring: Arc<CGRing>, classes: Vec<Vec<usize>>) -> Result<Self> {
        let a = Self::from_partition(ring, classes)?;
        let report = a.verify();
        match report.violations.first() {
            None => Ok(a),
            Some(v) => Err(Error::NotAnSRing(v.to_string())),
        }
    }

    pub fn verify(&self) -> VerifyReport {
        verify::verify(self)
    }

    /// The partition into singletons.
    pub fn full(ring: Arc<CGRing>) -> Self {
        let classes = (0..ring.order()).map(|x| vec![x]).collect();
        Self::from_partition(ring, classes).expect("singletons partition the ring")
    }

    /// `{0}` and its complement.
    pub fn rank2(ring: Arc<CGRing>) -> Self {
        let mut classes = vec![vec![0]];
        if ring.order() > 1 {
            classes.push((1..ring.order()).collect());
        }
        Self::from_partition(ring, classes).expect("rank two partition")
    }

    /// `cyc(K, R)`: the orbits of `K` on `R`.
    pub fn cyclotomic(ring: Arc<CGRing>, k: &UnitSubgroup) -> Self {
        let classes = ring.orbits_unchecked(&k.elements());
        Self::from_partition(ring, classes).expect("orbits partition the ring")
    }

    pub fn ring(&self) -> &CGRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<CGRing> {
        &self.ring
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn class_set(&self, i: usize) -> ElementSet {
        ElementSet::from_indices(self.ring.order(), self.classes[i].iter().copied())
    }

    /// Whether `x` is a union of classes.
    pub fn is_a_set(&self, x: &ElementSet) -> bool {
        x.iter().all(|a| {
            self.classes[self.class_of(a)]
                .iter()
                .all(|&b| x.contains(b))
        })
    }

    pub fn is_class(&self, x: &ElementSet) -> bool {
        match x.min() {
            None => false,
            Some(a) => {
                let c = &self.classes[self.class_of(a)];
                c.len() == x.len() && c.iter().all(|&b| x.contains(b))
            }
        }
    }

    pub fn is_a_ideal(&self, i: Ideal) -> bool {
        self.classes.iter().all(|c| {
            let inside = self.ring.ideal_contains(i, c[0]);
            c.iter().all(|&x| self.ring.ideal_contains(i, x) == inside)
        })
    }

    pub fn a_ideals(&self) -> Vec<Ideal> {
        self.ring
            .ideals()
            .into_iter()
            .filter(|&i| self.is_a_ideal(i))
            .collect()
    }

    pub fn is_dense(&self) -> bool {
        self.ring.ideals().into_iter().all(|i| self.is_a_ideal(i))
    }

    /// Whether the classes contained in `R^×` cover `R^×`.
    pub fn units_form_a_set(&self) -> bool {
        self.is_a_set(self.ring.units())
    }

    /// `I_L` of the classes meeting `R^×`, read off the class of `1`.
    pub fn il_of(&self) -> Ideal {
        let one = self.ring.one();
        self.ring
            .il(&self.class_set(self.class_of(one)))
            .expect("classes are non-empty")
    }

    pub fn is_pure(&self) -> bool {
        self.ring.is_zero_ideal(self.il_of())
    }

    pub fn class_il(&self, i: usize) -> Ideal {
        self.ring.il(&self.class_set(i)).expect("classes are non-empty")
    }

    /// Whether every class is invariant under the units of the components in `primes`.
    pub fn is_rational(&self, primes: &[u64]) -> bool {
        let gens = self.ring.component_unit_generators(primes);
        (0..self.rank()).all(|i| self.is_class_rational_with(i, &gens))
    }

    pub fn is_class_rational(&self, i: usize, primes: &[u64]) -> bool {
        let gens = self.ring.component_unit_generators(primes);
        self.is_class_rational_with(i, &gens)
    }

    fn is_class_rational_with(&self, i: usize, gens: &[usize]) -> bool {
        self.classes[i]
            .iter()
            .all(|&x| gens.iter().all(|&u| self.class_of(self.ring.mul(u, x)) == i))
    }

    /// Every class is `R^×`-invariant.
    pub fn is_fully_rational(&self) -> bool {
        self.is_rational(&self.ring.primes())
    }

    /// The constant `|X ∩ (x + H)|` for `x ∈ X`, for an A-ideal `H`.
    pub fn coset_count(&self, h: Ideal, class: usize) -> Result<usize> {
        if !self.is_a_ideal(h) {
            return Err(Error::NotAnAIdeal(h.generator()));
        }
        let x = self.class_set(class);
        let hs = self.ring.ideal_elements(h).to_vec();
        let mut counts = x
            .iter()
            .map(|a| hs.iter().filter(|&&g| x.contains(self.ring.add(a, g))).count());
        let first = counts.next().expect("classes are non-empty");
        if counts.all(|n| n == first) {
            Ok(first)
        } else {
            Err(Error::NotAnSRing(format!(
                "coset intersection sizes vary on class {class}"
            )))
        }
    }

    /// `X^{(m)} = {m x : x in X}`.
    pub fn power_map(&self, class: usize, m: u64) -> ElementSet {
        ElementSet::from_indices(
            self.ring.order(),
            self.classes[class].iter().map(|&x| self.ring.scale(x, m)),
        )
    }

    /// `X^{[p]} = {p x : x ∈ X, |(x + H) ∩ X| ≢ 0 mod p}` with `H = {g : p g = 0}`.
    pub fn frobenius_set(&self, class: usize, p: u64) -> ElementSet {
        let r = &*self.ring;
        let h = r
            .ideal_elements(r.ideal(r.characteristic() / p).expect("p divides c"))
            .to_vec();
        let x = self.class_set(class);
        ElementSet::from_indices(
            r.order(),
            x.iter()
                .filter(|&a| {
                    !(h.iter().filter(|&&g| x.contains(r.add(a, g))).count() as u64).is_multiple_of(p)
                })
                .map(|a| r.scale(a, p)),
        )
    }

    /// The restriction to the A-ideal `I`, as an S-ring over the ideal ring `R_I`.
    pub fn restrict(&self, i: Ideal) -> Result<SRing> {
        if !self.is_a_ideal(i) {
            return Err(Error::NotAnAIdeal(i.generator()));
        }
        let ir = self.ring.ideal_ring(i.generator())?;
        let classes = self
            .classes
            .iter()
            .filter(|c| self.ring.ideal_contains(i, c[0]))
            .map(|c| {
                c.iter()
                    .map(|&x| ir.from_parent(x).expect("element of the ideal"))
                    .collect()
            })
            .collect();
        SRing::from_partition(Arc::new(ir.ring().clone()), classes)
    }

    /// The image under `R -> R/J` for an A-ideal `J`.
    pub fn quotient(&self, j: Ideal) -> Result<SRing> {
        if !self.is_a_ideal(j) {
            return Err(Error::NotAnAIdeal(j.generator()));
        }
        let q = self.ring.quotient(j)?;
        let n = q.ring.order();
        let mut label = vec![u32::MAX; n];
        for (i, c) in self.classes.iter().enumerate() {
            let img = ElementSet::from_indices(n, c.iter().map(|&x| q.project(x)));
            for y in img.iter() {
                if label[y] == u32::MAX {
                    label[y] = i as u32;
                } else {
                    let other = &self.classes[label[y] as usize];
                    let other_img =
                        ElementSet::from_indices(n, other.iter().map(|&x| q.project(x)));
                    if other_img != img {
                        return Err(Error::NotAnSRing(format!(
                            "images of classes {} and {i} overlap without coinciding",
                            label[y]
                        )));
                    }
                }
            }
        }
        SRing::from_partition(Arc::new(q.ring), classes_from_labels(&label))
    }

    /// The S-ring `A ⊗ B` over `R_A × R_B`.
    pub fn tensor(&self, other: &SRing) -> Result<SRing> {
        let ring = Arc::new(self.ring.product(&other.ring)?);
        let n1 = self.ring.order();
        let mut classes = Vec::with_capacity(self.rank() * other.rank());
        for x in &self.classes {
            for y in &other.classes {
                classes.push(
                    y.iter()
                        .flat_map(|&b| x.iter().map(move |&a| a + b * n1))
                        .collect(),
                );
            }
        }
        SRing::from_partition(ring, classes)
    }

    /// Whether the partition is the orbit partition of the class of `1`.
    pub fn is_cyclotomic_by_unit_class(&self) -> Option<UnitSubgroup> {
        let one = self.ring.one();
        let k = self.class_set(self.class_of(one));
        let k = UnitSubgroup::from_members(&self.ring, k).ok()?;
        let cyc = SRing::cyclotomic(self.ring.clone(), &k);
        (cyc.classes == self.classes).then_some(k)
    }

    /// The same partition over a structurally equal ring (used after
    /// rebuilding rings from serialized specs).
    pub fn same_partition(&self, other: &SRing) -> bool {
        self.ring.order() == other.ring.order() && self.classes == other.classes
    }
}
