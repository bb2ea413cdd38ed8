use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::{classes_from_labels, SRing};
use crate::cgring::CGRing;
use crate::set::ElementSet;

/// The smallest S-ring over `ring` in which every seed is a union of classes.
///
/// Computed as the coarsest refinement of the seed partition that is stable
/// under the convolution counts, negation and multiplication by units.
pub fn schur_closure(ring: Arc<CGRing>, seeds: &[ElementSet]) -> SRing {
    closure(ring, seeds, false)
}

/// Like [`schur_closure`] but additionally forces every ideal to be a union of
/// classes. With no seeds this gives `cyc(R^×, R)`.
pub fn schur_closure_dense(ring: Arc<CGRing>, seeds: &[ElementSet]) -> SRing {
    closure(ring, seeds, true)
}

fn closure(ring: Arc<CGRing>, seeds: &[ElementSet], dense: bool) -> SRing {
    let n = ring.order();
    let initial: Vec<(bool, Vec<bool>, u64)> = (0..n)
        .map(|z| {
            let membership = seeds.iter().map(|s| s.contains(z)).collect();
            let ideal = if dense {
                ring.element_ideal(z).generator()
            } else {
                0
            };
            (z == 0, membership, ideal)
        })
        .collect();
    let mut color = relabel(&initial);
    let mut count = color.iter().copied().max().map_or(0, |m| m as usize + 1);
    let gens = ring.unit_generators().to_vec();
    loop {
        let keys: Vec<(u32, u32, Vec<u32>, Vec<u64>)> = (0..n)
            .into_par_iter()
            .map(|z| {
                let mut pairs: Vec<u64> = (0..n)
                    .map(|x| ((color[x] as u64) << 32) | color[ring.sub(z, x)] as u64)
                    .collect();
                pairs.sort_unstable();
                let units = gens.iter().map(|&u| color[ring.mul(u, z)]).collect();
                (color[z], color[ring.neg(z)], units, pairs)
            })
            .collect();
        let next = relabel(&keys);
        let next_count = next.iter().copied().max().map_or(0, |m| m as usize + 1);
        color = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    SRing::from_partition(ring, classes_from_labels(&color)).expect("labels partition the ring")
}

/// Dense labels in order of first occurrence.
fn relabel<T: Eq + std::hash::Hash>(keys: &[T]) -> Vec<u32> {
    let mut ids: HashMap<&T, u32> = HashMap::new();
    keys.iter()
        .map(|k| {
            let next = ids.len() as u32;
            *ids.entry(k).or_insert(next)
        })
        .collect()
}
