//! Characters of a CG-ring and dual S-rings.
//!
//! The additive characters are `χ^{(r)}(x) = ζ_c^{e(rx)}` where
//! `e(x) = Σ_k (c/c_k) Tr_k(x_k) mod c`. Since this generating character is
//! faithful, `r -> χ^{(r)}` identifies the character group with `R`, and dual
//! S-rings are partitions of the same index space.

mod cycint;

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

pub use cycint::{cyclotomic_polynomial, CycInt, CyclotomicField};

use crate::cgring::CGRing;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::sring::{classes_from_labels, SRing};
use crate::subgroup::UnitSubgroup;

#[derive(Clone, Debug)]
pub struct Characters {
    ring: Arc<CGRing>,
    field: CyclotomicField,
    exponent: Vec<u32>,
}

impl Characters {
    pub fn new(ring: Arc<CGRing>) -> Self {
        let c = ring.characteristic();
        let exponent = (0..ring.order())
            .map(|x| {
                ring.components()
                    .iter()
                    .enumerate()
                    .map(|(k, g)| {
                        let t = g.trace(&g.element(ring.part_index(x, k)));
                        (c / g.characteristic()) * t % c
                    })
                    .sum::<u64>() as u32
                    % c as u32
            })
            .collect();
        Self {
            field: CyclotomicField::new(c),
            ring,
            exponent,
        }
    }

    pub fn ring(&self) -> &Arc<CGRing> {
        &self.ring
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// `e(x)`, so that `χ^{(1)}(x) = ζ_c^{e(x)}`.
    pub fn exponent(&self, x: usize) -> u32 {
        self.exponent[x]
    }

    /// Whether `r -> χ^{(r)}` is injective, i.e. no nonzero `r` has `e(rR) = 0`.
    pub fn is_faithful(&self) -> bool {
        let r = &*self.ring;
        (1..r.order()).all(|a| (0..r.order()).any(|x| self.exponent[r.mul(a, x)] != 0))
    }

    /// `χ^{(r)}(S) = Σ_{x ∈ S} ζ_c^{e(rx)}`.
    pub fn char_sum(&self, r: usize, s: impl IntoIterator<Item = usize>) -> CycInt {
        let ring = &*self.ring;
        let mut counts = vec![0i64; ring.characteristic() as usize];
        for x in s {
            counts[self.exponent[ring.mul(r, x)] as usize] += 1;
        }
        self.field.from_exponent_counts(&counts)
    }

    /// The dual S-ring: `r ~ r'` iff `χ^{(r)}(X) = χ^{(r')}(X)` for every class `X`.
    pub fn dual(&self, a: &SRing) -> Result<SRing> {
        if *a.ring() != *self.ring {
            return Err(Error::RingMismatch);
        }
        let n = self.ring.order();
        let mut labels = vec![0u32; n];
        for class in a.classes() {
            if class.len() == 1 && class[0] == 0 {
                continue;
            }
            let mut ids: HashMap<(u32, CycInt), u32> = HashMap::new();
            let next: Vec<u32> = (0..n)
                .map(|r| {
                    let key = (labels[r], self.char_sum(r, class.iter().copied()));
                    let fresh = ids.len() as u32;
                    *ids.entry(key).or_insert(fresh)
                })
                .collect();
            labels = next;
        }
        SRing::from_partition(self.ring.clone(), classes_from_labels(&labels))
    }

    /// Looks for characters separating subsets of one `K`-orbit.
    pub fn separation_check(
        &self,
        s: &ElementSet,
        s2: &ElementSet,
        k: &UnitSubgroup,
    ) -> Result<Separation> {
        let r = &*self.ring;
        let x = s.min().ok_or(Error::EmptySet)?;
        let orbit = r.orbit(x, &k.elements());
        if !s.is_subset(&orbit) || !s2.is_subset(&orbit) {
            return Err(Error::NotInSingleOrbit);
        }
        let orbit_pure = r.is_pure_set(&orbit)?;
        let units: Vec<usize> = r.units().to_vec();
        let separating_unit = if s == s2 {
            None
        } else {
            units
                .iter()
                .copied()
                .find(|&u| self.char_sum(u, s.iter()) != self.char_sum(u, s2.iter()))
        };
        let nonzero_unit = units
            .iter()
            .copied()
            .find(|&u| !self.char_sum(u, s.iter()).is_zero());
        Ok(Separation {
            orbit_pure,
            distinct: s != s2,
            separating_unit,
            nonzero_unit,
        })
    }

    /// For the unit character `χ^{(t)}`, a unit `r` with `χ^{(t)}(rS) != 0`.
    pub fn nonzero_translate(&self, t: usize, sep: &Separation) -> Option<usize> {
        let r = &*self.ring;
        let u = sep.nonzero_unit?;
        Some(r.mul(u, r.inv(t).ok()?))
    }

    pub fn check_duality_theorems(&self, a: &SRing) -> Result<DualityReport> {
        check(self, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub orbit_pure: bool,
    pub distinct: bool,
    pub separating_unit: Option<usize>,
    pub nonzero_unit: Option<usize>,
}

impl Separation {
    /// Whether the outcome is what purity of the orbit guarantees.
    pub fn as_guaranteed(&self) -> bool {
        (!self.distinct || self.separating_unit.is_some()) && self.nonzero_unit.is_some()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub ok: bool,
    pub dual_is_sring: bool,
    pub involution: bool,
    pub rank_preserved: bool,
    pub ideals_match: bool,
    pub wreath_match: bool,
    pub tensor_match: bool,
    pub quotient_match: bool,
    pub failures: Vec<String>,
}

fn check(chars: &Characters, a: &SRing) -> Result<DualityReport> {
    let ring = chars.ring.clone();
    let r = &*ring;
    let dual = chars.dual(a)?;
    let mut rep = DualityReport {
        dual_is_sring: dual.verify().ok,
        ..Default::default()
    };
    if !rep.dual_is_sring {
        rep.failures.push("dual partition is not an S-ring".into());
    }
    rep.involution = chars.dual(&dual)? == *a;
    if !rep.involution {
        rep.failures.push("dual of the dual differs from the input".into());
    }
    rep.rank_preserved = dual.rank() == a.rank();
    if !rep.rank_preserved {
        rep.failures.push(format!("rank {} vs dual rank {}", a.rank(), dual.rank()));
    }

    let mut expected: Vec<u64> = a.a_ideals().iter().map(|&i| r.perp(i).generator()).collect();
    expected.sort_unstable();
    let got: Vec<u64> = dual.a_ideals().iter().map(|i| i.generator()).collect();
    rep.ideals_match = expected == got;
    if !rep.ideals_match {
        rep.failures.push(format!("A-ideals {expected:?} vs dual A-ideals {got:?}"));
    }

    let mut mapped: Vec<(u64, u64)> = a
        .nontrivial_wreath_certs()
        .iter()
        .map(|c| (r.perp(c.j).generator(), r.perp(c.i).generator()))
        .collect();
    mapped.sort_unstable();
    let mut dual_certs: Vec<(u64, u64)> = dual
        .nontrivial_wreath_certs()
        .iter()
        .map(|c| (c.i.generator(), c.j.generator()))
        .collect();
    dual_certs.sort_unstable();
    rep.wreath_match = mapped == dual_certs;
    if !rep.wreath_match {
        rep.failures.push(format!(
            "wreath certificates {mapped:?} (perp-swapped) vs dual {dual_certs:?}"
        ));
    }

    rep.tensor_match = true;
    let primes = r.primes();
    for mask in 1..(1u32 << primes.len()) - 1 {
        let q: Vec<u64> = (0..primes.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| primes[i])
            .collect();
        match (a.is_tensor_over(&q), dual.is_tensor_over(&q)) {
            (Ok(sa), Ok(sd)) => {
                let dl = Characters::new(sa.left.ring_arc().clone()).dual(&sa.left)?;
                let dr = Characters::new(sa.right.ring_arc().clone()).dual(&sa.right)?;
                if dl != sd.left || dr != sd.right {
                    rep.tensor_match = false;
                    rep.failures.push(format!("dual factors over {q:?} differ"));
                }
            }
            (Err(_), Err(_)) => {}
            _ => {
                rep.tensor_match = false;
                rep.failures
                    .push(format!("tensor decomposability over {q:?} not preserved"));
            }
        }
    }

    rep.quotient_match = true;
    for j in a.a_ideals() {
        let qa = a.quotient(j)?;
        let lhs = Characters::new(qa.ring_arc().clone()).dual(&qa)?;
        let rhs = dual.restrict(r.perp(j))?;
        if !lhs.same_partition(&rhs) {
            rep.quotient_match = false;
            rep.failures.push(format!(
                "dual of the quotient by {j} differs from the restriction of the dual to {}",
                r.perp(j)
            ));
        }
    }

    rep.ok = rep.failures.is_empty();
    Ok(rep)
}
