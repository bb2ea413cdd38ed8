//! Subgroups of the unit group of a CG-ring.

use std::collections::HashSet;

use crate::cgring::{CGRing, Ideal};
use crate::error::{Error, Result};
use crate::numtheory::valuation;
use crate::set::ElementSet;

/// Default bound on the group order accepted by [`all_subgroups`].
pub const DEFAULT_SUBGROUP_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitSubgroup {
    members: ElementSet,
    generators: Vec<usize>,
}

impl UnitSubgroup {
    pub fn trivial(ring: &CGRing) -> Self {
        Self {
            members: ElementSet::from_indices(ring.order(), [ring.one()]),
            generators: Vec::new(),
        }
    }

    pub fn units(ring: &CGRing) -> Self {
        Self {
            members: ring.units().clone(),
            generators: ring.unit_generators().to_vec(),
        }
    }

    /// Validates that `members` is a subgroup of `R^×`.
    pub fn from_members(ring: &CGRing, members: ElementSet) -> Result<Self> {
        if !members.contains(ring.one()) {
            return Err(Error::NotASubgroup("does not contain 1".into()));
        }
        for a in members.iter() {
            if !ring.is_unit(a) {
                return Err(Error::NotASubgroup(format!("{a} is not a unit")));
            }
            for b in members.iter() {
                if !members.contains(ring.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "{a} * {b} = {} is missing",
                        ring.mul(a, b)
                    )));
                }
            }
        }
        Ok(Self {
            members,
            generators: Vec::new(),
        })
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &UnitSubgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &UnitSubgroup) -> UnitSubgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        UnitSubgroup {
            members,
            generators: Vec::new(),
        }
    }

    /// The product `HK`, a subgroup since `R^×` is abelian.
    pub fn join(&self, ring: &CGRing, other: &UnitSubgroup) -> UnitSubgroup {
        let members = ElementSet::from_indices(
            ring.order(),
            self.members
                .iter()
                .flat_map(|a| other.members.iter().map(move |b| ring.mul(a, b))),
        );
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().copied());
        UnitSubgroup {
            members,
            generators,
        }
    }

    /// `{x^k : x in K}`.
    pub fn power(&self, ring: &CGRing, k: u64) -> UnitSubgroup {
        UnitSubgroup {
            members: ElementSet::from_indices(
                ring.order(),
                self.members.iter().map(|x| ring.pow(x, k)),
            ),
            generators: self.generators.iter().map(|&g| ring.pow(g, k)).collect(),
        }
    }
}

fn cyclic_powers(ring: &CGRing, g: usize) -> Vec<usize> {
    let one = ring.one();
    let mut out = vec![one];
    let mut y = g;
    while y != one {
        out.push(y);
        y = ring.mul(y, g);
    }
    out
}

/// The subgroup generated by `gens`.
pub fn subgroup_generated(ring: &CGRing, gens: &[usize]) -> Result<UnitSubgroup> {
    let mut members = ElementSet::from_indices(ring.order(), [ring.one()]);
    for &g in gens {
        if g >= ring.order() || !ring.is_unit(g) {
            return Err(Error::NotAUnit(g));
        }
        if members.contains(g) {
            continue;
        }
        let powers = cyclic_powers(ring, g);
        let current: Vec<usize> = members.iter().collect();
        for h in current {
            for &w in &powers {
                members.insert(ring.mul(h, w));
            }
        }
    }
    Ok(UnitSubgroup {
        members,
        generators: gens.to_vec(),
    })
}

/// Every subgroup of `group`, ordered by order and then by sorted member list.
pub fn all_subgroups(ring: &CGRing, group: &UnitSubgroup) -> Result<Vec<UnitSubgroup>> {
    all_subgroups_with_limit(ring, group, DEFAULT_SUBGROUP_LIMIT)
}

pub fn all_subgroups_with_limit(
    ring: &CGRing,
    group: &UnitSubgroup,
    limit: usize,
) -> Result<Vec<UnitSubgroup>> {
    if group.order() > limit {
        return Err(Error::SubgroupLimit {
            order: group.order(),
            limit,
        });
    }
    let mut cyclics: Vec<UnitSubgroup> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for g in group.members.iter() {
        let c = subgroup_generated(ring, &[g])?;
        if seen_cyclic.insert(c.members.clone()) {
            cyclics.push(c);
        }
    }
    // Every subgroup is a join of cyclic subgroups.
    let mut found: Vec<UnitSubgroup> = vec![UnitSubgroup::trivial(ring)];
    let mut seen: HashSet<ElementSet> = found.iter().map(|h| h.members.clone()).collect();
    let mut frontier = 0;
    while frontier < found.len() {
        let h = found[frontier].clone();
        frontier += 1;
        for c in &cyclics {
            if c.members.is_subset(&h.members) {
                continue;
            }
            let j = h.join(ring, c);
            if seen.insert(j.members.clone()) {
                found.push(j);
            }
        }
    }
    let mut out: Vec<UnitSubgroup> = found
        .into_iter()
        .map(|h| UnitSubgroup {
            generators: minimal_generators(ring, &h.members),
            members: h.members,
        })
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members.to_vec().cmp(&b.members.to_vec()))
    });
    Ok(out)
}

fn minimal_generators(ring: &CGRing, members: &ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = ElementSet::from_indices(ring.order(), [ring.one()]);
    // Prefer elements of large order so that the list stays short.
    let mut candidates: Vec<(usize, usize)> = members
        .iter()
        .map(|g| (cyclic_powers(ring, g).len(), g))
        .collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, g) in candidates {
        if span.contains(g) {
            continue;
        }
        gens.push(g);
        let powers = cyclic_powers(ring, g);
        let current: Vec<usize> = span.iter().collect();
        for h in current {
            for &w in &powers {
                span.insert(ring.mul(h, w));
            }
        }
    }
    gens
}

/// Definitional purity: `I_L(K) = 0`.
pub fn is_pure(ring: &CGRing, k: &UnitSubgroup) -> bool {
    ring.is_pure_set(k.members()).expect("subgroups are non-empty")
}

/// The principal units `1 + pR_p` of the component at `p`, embedded in `R^×`.
pub fn principal_units(ring: &CGRing, p: u64) -> UnitSubgroup {
    let k = ring
        .component_of_prime(p)
        .expect("prime of the ring");
    let one = ring.one();
    let p_ideal = ring.ideal(p).expect("p divides c");
    let members = ElementSet::from_indices(
        ring.order(),
        (0..ring.order()).filter(|&x| {
            let y = ring.sub(x, one);
            ring.ideal_contains(p_ideal, y)
                && (0..ring.components().len()).all(|j| j == k || ring.part_index(y, j) == 0)
        }),
    );
    UnitSubgroup {
        members,
        generators: Vec::new(),
    }
}

/// `log_p` of the number of elements of `L` of order dividing `p`.
pub fn p_rank(ring: &CGRing, l: &UnitSubgroup, p: u64) -> u32 {
    let count = l
        .members
        .iter()
        .filter(|&x| ring.pow(x, p) == ring.one())
        .count() as u64;
    valuation(count, p)
}

/// Purity of a subgroup by the rank criterion, valid in odd characteristic:
/// `L` is pure iff `rank(L ∩ U_p) < d_p` for every prime `p`.
pub fn is_pure_by_rank(ring: &CGRing, l: &UnitSubgroup) -> Result<bool> {
    if !ring.is_odd() {
        return Err(Error::Hypothesis(
            "the rank criterion needs odd characteristic".into(),
        ));
    }
    Ok(ring.components().iter().all(|g| {
        let u = principal_units(ring, g.p());
        let lu = l.intersection(&u);
        p_rank(ring, &lu, g.p()) < g.d()
    }))
}

/// Whether `J` meets every maximal ideal condition `J_p != R_p`.
pub fn is_admissible_ideal(ring: &CGRing, j: Ideal) -> bool {
    ring.primes().iter().all(|&p| j.generator().is_multiple_of(p))
}
