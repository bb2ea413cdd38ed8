use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::SRing;
use crate::cgring::CGRing;
use crate::error::Result;

/// At most this many violations are collected per axiom.
const MAX_REPORTED: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    ZeroClass,
    Negation,
    Convolution,
    UnitInvariance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub detail: String,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {} (witness {:?})", self.axiom, self.detail, self.witness)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Checks the S-ring axioms for an arbitrary partition of `ring`.
pub fn verify_partition(ring: Arc<CGRing>, classes: Vec<Vec<usize>>) -> Result<VerifyReport> {
    Ok(SRing::from_partition(ring, classes)?.verify())
}

pub(super) fn verify(a: &SRing) -> VerifyReport {
    let mut violations = Vec::new();
    zero_class(a, &mut violations);
    negation(a, &mut violations);
    unit_invariance(a, &mut violations);
    convolution(a, &mut violations);
    VerifyReport {
        ok: violations.is_empty(),
        violations,
    }
}

fn zero_class(a: &SRing, out: &mut Vec<Violation>) {
    let c = &a.classes[a.class_of(0)];
    if c.len() != 1 {
        out.push(Violation {
            axiom: Axiom::ZeroClass,
            detail: "the class of 0 is not {0}".into(),
            witness: c.clone(),
        });
    }
}

/// Whether `f` maps class `i` onto a single class of the same size.
fn maps_onto_class(a: &SRing, i: usize, f: impl Fn(usize) -> usize) -> Option<Vec<usize>> {
    let c = &a.classes[i];
    let target = a.class_of(f(c[0]));
    if let Some(&x) = c.iter().find(|&&x| a.class_of(f(x)) != target) {
        return Some(vec![c[0], x]);
    }
    if a.classes[target].len() != c.len() {
        return Some(vec![c[0]]);
    }
    None
}

fn negation(a: &SRing, out: &mut Vec<Violation>) {
    let r = a.ring();
    for i in 0..a.rank() {
        if let Some(witness) = maps_onto_class(a, i, |x| r.neg(x)) {
            out.push(Violation {
                axiom: Axiom::Negation,
                detail: format!("-X is not a class for class {i}"),
                witness,
            });
            if out.len() >= MAX_REPORTED {
                return;
            }
        }
    }
}

fn unit_invariance(a: &SRing, out: &mut Vec<Violation>) {
    let r = a.ring();
    let mut found = 0;
    for &u in r.unit_generators() {
        for i in 0..a.rank() {
            if let Some(mut witness) = maps_onto_class(a, i, |x| r.mul(u, x)) {
                witness.insert(0, u);
                out.push(Violation {
                    axiom: Axiom::UnitInvariance,
                    detail: format!("uX is not a class for class {i} and unit u = {u}"),
                    witness,
                });
                found += 1;
                if found >= MAX_REPORTED {
                    return;
                }
            }
        }
    }
}

fn convolution(a: &SRing, out: &mut Vec<Violation>) {
    let n = a.ring().order();
    let rank = a.rank();
    let found: Vec<Violation> = (0..rank)
        .into_par_iter()
        .map_init(
            || (vec![0u32; n], Vec::<usize>::new(), vec![false; rank]),
            |(counts, touched, class_seen), i| {
                let mut local = Vec::new();
                for j in i..rank {
                    if let Some(v) = check_pair(a, i, j, counts, touched, class_seen) {
                        local.push(v);
                        break;
                    }
                }
                local
            },
        )
        .flatten()
        .collect();
    out.extend(found.into_iter().take(MAX_REPORTED));
}

fn check_pair(
    a: &SRing,
    i: usize,
    j: usize,
    counts: &mut [u32],
    touched: &mut Vec<usize>,
    class_seen: &mut [bool],
) -> Option<Violation> {
    let r = a.ring();
    for &x in &a.classes[i] {
        for &y in &a.classes[j] {
            let z = r.add(x, y);
            if counts[z] == 0 {
                touched.push(z);
            }
            counts[z] += 1;
        }
    }
    let mut result = None;
    for &z in touched.iter() {
        let k = a.class_of(z);
        if class_seen[k] {
            continue;
        }
        class_seen[k] = true;
        if result.is_none() {
            if let Some(&w) = a.classes[k].iter().find(|&&w| counts[w] != counts[z]) {
                result = Some(Violation {
                    axiom: Axiom::Convolution,
                    detail: format!(
                        "classes {i} + {j}: multiplicity {} at {z} but {} at {w}",
                        counts[z], counts[w]
                    ),
                    witness: vec![i, j, z, w],
                });
            }
        }
    }
    for &z in touched.iter() {
        counts[z] = 0;
        class_seen[a.class_of(z)] = false;
    }
    touched.clear();
    result
}
