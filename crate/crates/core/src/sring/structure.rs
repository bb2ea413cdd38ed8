//! Generalized wreath products and tensor decompositions.

use std::sync::Arc;

use serde::Serialize;

use super::{classes_from_labels, SRing};
use crate::cgring::{CGRing, Ideal};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A pair of A-ideals `J ⊆ I` such that every class outside `I` is a union of `J`-cosets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WreathCert {
    pub i: Ideal,
    pub j: Ideal,
    pub nontrivial: bool,
}

/// `A = A_Q ⊗ A_Q'` with the factors over the sub-products `R_Q` and `R_Q'`.
#[derive(Clone, Debug)]
pub struct TensorSplit {
    pub primes: Vec<u64>,
    pub complement: Vec<u64>,
    pub left: SRing,
    pub right: SRing,
}

impl SRing {
    /// Every `(I, J)` satisfying the `I/J`-condition, ordered by generators.
    pub fn wreath_pairs(&self) -> Vec<WreathCert> {
        let r = self.ring();
        let ideals = self.a_ideals();
        let ils: Vec<Ideal> = (0..self.rank()).map(|k| self.class_il(k)).collect();
        let mut out = Vec::new();
        for &i in &ideals {
            let outside: Vec<Ideal> = self
                .classes()
                .iter()
                .zip(&ils)
                .filter(|(c, _)| !r.ideal_contains(i, c[0]))
                .map(|(_, &il)| il)
                .collect();
            for &j in &ideals {
                if !r.ideal_le(j, i) {
                    continue;
                }
                if outside.iter().all(|&il| r.ideal_le(j, il)) {
                    out.push(WreathCert {
                        i,
                        j,
                        nontrivial: i != r.whole() && !r.is_zero_ideal(j),
                    });
                }
            }
        }
        out
    }

    pub fn nontrivial_wreath_certs(&self) -> Vec<WreathCert> {
        self.wreath_pairs()
            .into_iter()
            .filter(|c| c.nontrivial)
            .collect()
    }

    pub fn is_nontrivial_wreath(&self) -> bool {
        !self.nontrivial_wreath_certs().is_empty()
    }

    /// Detects `A = A_Q ⊗ A_Q'`. The error explains why detection failed.
    pub fn is_tensor_over(&self, primes: &[u64]) -> std::result::Result<TensorSplit, String> {
        let r = self.ring();
        let all = r.primes();
        if let Some(p) = primes.iter().find(|p| !all.contains(p)) {
            return Err(format!("{p} is not a prime of the ring"));
        }
        let q: Vec<u64> = all.iter().copied().filter(|p| primes.contains(p)).collect();
        let qc: Vec<u64> = all.iter().copied().filter(|p| !primes.contains(p)).collect();
        for side in [&q, &qc] {
            let ideal = r.prime_part_ideal(side);
            if !self.is_a_ideal(ideal) {
                return Err(format!("{ideal} is not an A-ideal"));
            }
        }
        let sub_q = r.subring(&q).map_err(|e| e.to_string())?;
        let sub_qc = r.subring(&qc).map_err(|e| e.to_string())?;
        let mut left_label = vec![u32::MAX; sub_q.ring.order()];
        let mut right_label = vec![u32::MAX; sub_qc.ring.order()];
        for (k, c) in self.classes().iter().enumerate() {
            let x = ElementSet::from_indices(r.order(), c.iter().copied());
            let pq = ElementSet::from_indices(
                sub_q.ring.order(),
                c.iter().map(|&a| sub_q.project(a)),
            );
            let pqc = ElementSet::from_indices(
                sub_qc.ring.order(),
                c.iter().map(|&a| sub_qc.project(a)),
            );
            if pq.len() * pqc.len() != x.len() {
                return Err(format!("class {k} is not the product of its projections"));
            }
            for (labels, proj) in [(&mut left_label, &pq), (&mut right_label, &pqc)] {
                for y in proj.iter() {
                    if labels[y] == u32::MAX {
                        labels[y] = k as u32;
                    }
                }
            }
        }
        // Each projection must itself be a class of the factor: projections of
        // different classes are equal or disjoint.
        let left = factor(&sub_q.ring, &left_label, self, |a| sub_q.project(a))?;
        let right = factor(&sub_qc.ring, &right_label, self, |a| sub_qc.project(a))?;
        Ok(TensorSplit {
            primes: q,
            complement: qc,
            left,
            right,
        })
    }
}

fn factor(
    ring: &CGRing,
    labels: &[u32],
    a: &SRing,
    project: impl Fn(usize) -> usize,
) -> std::result::Result<SRing, String> {
    let classes = classes_from_labels(labels);
    let mut group_of = vec![0usize; ring.order()];
    for (g, c) in classes.iter().enumerate() {
        for &y in c {
            group_of[y] = g;
        }
    }
    for owner in a.classes() {
        let img = ElementSet::from_indices(ring.order(), owner.iter().map(|&x| project(x)));
        let g = group_of[img.min().expect("non-empty")];
        if classes[g].len() != img.len() || img.iter().any(|y| group_of[y] != g) {
            return Err("projections of classes overlap".into());
        }
    }
    SRing::from_partition(Arc::new(ring.clone()), classes).map_err(|e| e.to_string())
}

/// Reassembles a tensor product over `ring` from factors given with the primes
/// of the components they live on.
pub fn assemble_tensor(ring: Arc<CGRing>, factors: &[(Vec<u64>, SRing)]) -> Result<SRing> {
    let mut covered: Vec<u64> = factors.iter().flat_map(|(q, _)| q.clone()).collect();
    covered.sort_unstable();
    let mut all = ring.primes();
    all.sort_unstable();
    if covered != all {
        return Err(Error::InvalidParameters(
            "tensor factors must cover each prime exactly once".into(),
        ));
    }
    let mut classes: Vec<Vec<usize>> = vec![vec![0]];
    for (q, a) in factors {
        let sub = ring.subring(q)?;
        if sub.ring != *a.ring() {
            return Err(Error::RingMismatch);
        }
        let sub = &sub;
        let mut next = Vec::with_capacity(classes.len() * a.rank());
        for c in &classes {
            for x in a.classes() {
                next.push(
                    c.iter()
                        .flat_map(|&u| x.iter().map(move |&v| u + sub.embed(v)))
                        .collect(),
                );
            }
        }
        classes = next;
    }
    SRing::from_partition(ring, classes)
}
