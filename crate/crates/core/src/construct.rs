//! Subdirect products of unit groups and the non-pure dense S-ring over
//! `GR(p^2,d) × GR(q^2,e)` that is not a non-trivial generalized wreath product.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::cgring::{CGRing, Ideal};
use crate::error::{Error, Result};
use crate::galois::GaloisRing;
use crate::numtheory::is_prime;
use crate::set::ElementSet;
use crate::sring::{SRing, VerifyReport};
use crate::subgroup::{subgroup_generated, UnitSubgroup};

/// Default bound on `p^{2d} q^{2e}` for the construction.
pub const DEFAULT_CONSTRUCTION_LIMIT: u64 = 100_000;

/// Two groups with homomorphisms onto the cyclic group `Z_{l0}`.
#[derive(Clone, Debug)]
pub struct SubdirectSpec {
    pub left: UnitSubgroup,
    pub right: UnitSubgroup,
    pub f_left: HashMap<usize, u64>,
    pub f_right: HashMap<usize, u64>,
    pub l0_order: u64,
}

fn check_epimorphism(
    ring: &CGRing,
    group: &UnitSubgroup,
    f: &HashMap<usize, u64>,
    l0: u64,
) -> Result<()> {
    let mut image = vec![false; l0 as usize];
    for a in group.members().iter() {
        let fa = *f
            .get(&a)
            .ok_or_else(|| Error::NotEpimorphism(format!("no value at {a}")))?;
        if fa >= l0 {
            return Err(Error::NotEpimorphism(format!("value {fa} at {a} outside Z_{l0}")));
        }
        image[fa as usize] = true;
        for b in group.members().iter() {
            if f[&ring.mul(a, b)] != (fa + f[&b]) % l0 {
                return Err(Error::NotEpimorphism(format!("not additive at {a}, {b}")));
            }
        }
    }
    if image.iter().any(|&hit| !hit) {
        return Err(Error::NotEpimorphism("not surjective".into()));
    }
    Ok(())
}

/// `{uv : u ∈ left, v ∈ right, f_left(u) = f_right(v)}`.
pub fn subdirect(ring: &CGRing, spec: &SubdirectSpec) -> Result<UnitSubgroup> {
    check_epimorphism(ring, &spec.left, &spec.f_left, spec.l0_order)?;
    check_epimorphism(ring, &spec.right, &spec.f_right, spec.l0_order)?;
    let members = ElementSet::from_indices(
        ring.order(),
        spec.left.members().iter().flat_map(|u| {
            spec.right
                .members()
                .iter()
                .filter(move |v| spec.f_left[&u] == spec.f_right[v])
                .map(move |v| ring.mul(u, v))
        }),
    );
    let l = UnitSubgroup::from_members(ring, members)?;
    let expected = spec.left.order() * spec.right.order() / spec.l0_order as usize;
    if l.order() != expected {
        return Err(Error::NotEpimorphism(format!(
            "fiber product has order {} instead of {expected}",
            l.order()
        )));
    }
    Ok(l)
}

/// The groups of the construction, all as subgroups of `R^×`.
#[derive(Clone, Debug)]
pub struct ConstructionInstance {
    pub p: u64,
    pub d: u32,
    pub q: u64,
    pub e: u32,
    pub ring: Arc<CGRing>,
    pub t_p: UnitSubgroup,
    pub t_q: UnitSubgroup,
    pub principal_p: UnitSubgroup,
    pub principal_q: UnitSubgroup,
    pub u_p: UnitSubgroup,
    pub u_p_complement: UnitSubgroup,
    pub u_q: UnitSubgroup,
    pub u_q_complement: UnitSubgroup,
    pub l1: UnitSubgroup,
    pub l2: UnitSubgroup,
    pub k1: UnitSubgroup,
    pub k2: UnitSubgroup,
    pub k: UnitSubgroup,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub ring: String,
    pub order: usize,
    pub rank: usize,
    pub verification: VerifyReport,
    pub dense: bool,
    pub a_ideals: Vec<Ideal>,
    pub pure: bool,
    pub il_of: Ideal,
    pub il_of_expected: Ideal,
    pub nontrivial_wreath: bool,
    pub tensor_over_p: bool,
    pub order_k1: usize,
    pub order_k1_expected: usize,
    pub order_k2: usize,
    pub order_k2_expected: usize,
    pub order_k: usize,
    pub il_k1: Ideal,
    pub il_k2: Ideal,
    pub product_k1_k2_is_k: bool,
    pub order_k1_cap_k2: usize,
    pub order_k1_cap_k2_expected: usize,
    pub orbits_coincide_deep: bool,
    pub orbits_coincide_shallow: bool,
    pub failures: Vec<String>,
}

impl ConstructionReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub instance: ConstructionInstance,
    pub sring: SRing,
    pub report: ConstructionReport,
}

fn check_hypothesis(p: u64, d: u32, q: u64, e: u32, limit: u64) -> Result<()> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p == q {
        return Err(Error::Hypothesis("p and q must be distinct".into()));
    }
    if d == 0 || e == 0 {
        return Err(Error::InvalidParameters("d and e must be positive".into()));
    }
    let qe = (q as u128).pow(e);
    let pd = (p as u128).pow(d);
    if !(qe - 1).is_multiple_of(p as u128) {
        return Err(Error::Hypothesis(format!("{p} does not divide {q}^{e} - 1")));
    }
    if !(pd - 1).is_multiple_of(q as u128) {
        return Err(Error::Hypothesis(format!("{q} does not divide {p}^{d} - 1")));
    }
    let order = pd * pd * qe * qe;
    if order > limit as u128 {
        return Err(Error::TooLarge { order, limit });
    }
    Ok(())
}

/// Helper for one component of `R`: units embedded with `1` in the other component.
struct Side<'a> {
    ring: &'a CGRing,
    k: usize,
}

impl Side<'_> {
    fn g(&self) -> &GaloisRing {
        &self.ring.components()[self.k]
    }

    fn embed(&self, local: usize) -> usize {
        let mut parts: Vec<usize> = (0..self.ring.components().len())
            .map(|j| self.ring.part_index(self.ring.one(), j))
            .collect();
        parts[self.k] = local;
        self.ring.compose(&parts)
    }

    fn local(&self, x: usize) -> usize {
        self.ring.part_index(x, self.k)
    }

    fn group(&self, locals: impl IntoIterator<Item = usize>) -> Result<UnitSubgroup> {
        let members =
            ElementSet::from_indices(self.ring.order(), locals.into_iter().map(|a| self.embed(a)));
        UnitSubgroup::from_members(self.ring, members)
    }

    /// The subgroup of order `m` of the Teichmüller group.
    fn teichmuller_subgroup(&self, m: u64) -> Result<UnitSubgroup> {
        let g = self.g();
        let one = g.one();
        let locals: Vec<usize> = g
            .teichmuller_group()
            .into_iter()
            .filter(|t| g.pow(t, m) == one)
            .map(|t| g.index(&t))
            .collect();
        self.group(locals)
    }

    fn principal(&self) -> Result<UnitSubgroup> {
        let g = self.g();
        self.group(g.principal_units().iter().map(|a| g.index(a)))
    }

    /// For `1 + p a` with `n = 2`, the coordinates of `a mod p`.
    fn coords(&self, local: usize) -> Vec<u64> {
        let g = self.g();
        let a = g.element(local);
        let p = g.p();
        a.coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let c = if i == 0 { (c + g.characteristic() - 1) % g.characteristic() } else { c };
                (c / p) % p
            })
            .collect()
    }

    /// Splits `u = t w` with `t` Teichmüller and `w` principal.
    #[cfg(test)]
    fn split(&self, local: usize) -> (usize, usize) {
        let g = self.g();
        let u = g.element(local);
        let t = g.teichmuller_lift(&u);
        let w = g.mul(&u, &g.inv(&t).expect("Teichmüller elements are units"));
        (g.index(&t), g.index(&w))
    }
}

/// Discrete logarithms in a cyclic group to its least-index generator.
fn dlog_table(ring: &CGRing, group: &UnitSubgroup) -> HashMap<usize, u64> {
    let n = group.order();
    let gen = group
        .members()
        .iter()
        .find(|&g| {
            let mut y = g;
            let mut ord = 1;
            while y != ring.one() {
                y = ring.mul(y, g);
                ord += 1;
            }
            ord == n
        })
        .expect("cyclic group");
    let mut table = HashMap::new();
    let mut y = ring.one();
    for k in 0..n as u64 {
        table.insert(y, k);
        y = ring.mul(y, gen);
    }
    table
}

/// Builds the groups of the construction without verifying the S-ring.
pub fn construct_instance(p: u64, d: u32, q: u64, e: u32, limit: u64) -> Result<ConstructionInstance> {
    check_hypothesis(p, d, q, e, limit)?;
    let ring = Arc::new(CGRing::with_limit(
        vec![GaloisRing::new(p, 2, d)?, GaloisRing::new(q, 2, e)?],
        limit,
    )?);
    let r = &*ring;
    let sp = Side { ring: r, k: 0 };
    let sq = Side { ring: r, k: 1 };

    let t_p = sp.teichmuller_subgroup(q)?;
    let t_q = sq.teichmuller_subgroup(p)?;
    let principal_p = sp.principal()?;
    let principal_q = sq.principal()?;

    // Cyclic factor: generated by the least-index non-identity principal unit;
    // complement: kernel of the coordinate where that generator is non-zero.
    let (u_p, u_p_complement, j_p) = principal_split(&sp, &principal_p)?;
    let (u_q, u_q_complement, j_q) = principal_split(&sq, &principal_q)?;

    let dlog_tp = dlog_table(r, &t_p);
    let dlog_tq = dlog_table(r, &t_q);

    let functional = |side: &Side, j: usize, x: usize| side.coords(side.local(x))[j];
    let l1 = subdirect(
        r,
        &SubdirectSpec {
            left: t_p.clone(),
            right: u_q.clone(),
            f_left: dlog_tp.clone(),
            f_right: u_q.members().iter().map(|x| (x, functional(&sq, j_q, x))).collect(),
            l0_order: q,
        },
    )?;
    let l2 = subdirect(
        r,
        &SubdirectSpec {
            left: u_p.clone(),
            right: t_q.clone(),
            f_left: u_p.members().iter().map(|x| (x, functional(&sp, j_p, x))).collect(),
            f_right: dlog_tq.clone(),
            l0_order: p,
        },
    )?;

    let k1 = principal_p
        .join(r, &t_q)
        .join(r, &u_q_complement)
        .join(r, &l1);
    let k2 = t_p
        .join(r, &u_p_complement)
        .join(r, &principal_q)
        .join(r, &l2);
    let k = t_p
        .join(r, &principal_p)
        .join(r, &t_q)
        .join(r, &principal_q);

    Ok(ConstructionInstance {
        p,
        d,
        q,
        e,
        ring: ring.clone(),
        t_p,
        t_q,
        principal_p,
        principal_q,
        u_p,
        u_p_complement,
        u_q,
        u_q_complement,
        l1,
        l2,
        k1,
        k2,
        k,
    })
}

fn principal_split(side: &Side, principal: &UnitSubgroup) -> Result<(UnitSubgroup, UnitSubgroup, usize)> {
    let one = side.ring.one();
    let gen = principal
        .members()
        .iter()
        .find(|&x| x != one)
        .ok_or_else(|| Error::InvalidParameters("trivial principal units".into()))?;
    let coords = side.coords(side.local(gen));
    let j = coords.iter().position(|&c| c != 0).expect("non-identity");
    let cyclic = subgroup_generated(side.ring, &[gen])?;
    let complement = UnitSubgroup::from_members(
        side.ring,
        ElementSet::from_indices(
            side.ring.order(),
            principal
                .members()
                .iter()
                .filter(|&x| side.coords(side.local(x))[j] == 0),
        ),
    )?;
    Ok((cyclic, complement, j))
}

/// The partition `orb(K_1, R^×) ∪ orb(K_2, pR ∪ qR)`.
pub fn construction_partition(inst: &ConstructionInstance) -> Result<SRing> {
    let r = &*inst.ring;
    let k1 = inst.k1.elements();
    let k2 = inst.k2.elements();
    let mut seen = vec![false; r.order()];
    let mut classes = Vec::new();
    for x in 0..r.order() {
        if seen[x] {
            continue;
        }
        let group = if r.is_unit(x) { &k1 } else { &k2 };
        let orbit = r.orbit(x, group).to_vec();
        for &y in &orbit {
            seen[y] = true;
        }
        classes.push(orbit);
    }
    SRing::from_partition(inst.ring.clone(), classes)
}

fn orbits_on(r: &CGRing, x: &ElementSet, k: &UnitSubgroup) -> Vec<Vec<usize>> {
    let ks = k.elements();
    let mut seen = ElementSet::new(r.order());
    let mut out = Vec::new();
    for a in x.iter() {
        if seen.contains(a) {
            continue;
        }
        let o = r.orbit(a, &ks);
        seen.union_with(&o);
        out.push(o.to_vec());
    }
    out
}

/// Runs the full verification suite on an instance.
pub fn verify_construction(inst: &ConstructionInstance, a: &SRing) -> ConstructionReport {
    let r = &*inst.ring;
    let (p, q, d, e) = (inst.p, inst.q, inst.d, inst.e);
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };

    let verification = a.verify();
    expect(verification.ok, "the partition is not an S-ring".into());
    let dense = a.is_dense();
    expect(dense, "not dense".into());
    let pure = a.is_pure();
    expect(!pure, "pure".into());
    let il_p = r.ideal(p * q * q).expect("divisor");
    let il_q = r.ideal(p * p * q).expect("divisor");
    let il_of = a.il_of();
    expect(il_of == il_p, format!("I_L of the S-ring is {il_of}, expected {il_p}"));
    let nontrivial_wreath = a.is_nontrivial_wreath();
    expect(!nontrivial_wreath, "a non-trivial wreath certificate exists".into());
    let tensor_over_p = a.is_tensor_over(&[p]).is_ok();
    expect(!tensor_over_p, "decomposes as a tensor product".into());

    let order_k1_expected = (p.pow(d + 1) * q.pow(e)) as usize;
    let order_k2_expected = (p.pow(d) * q.pow(e + 1)) as usize;
    expect(inst.k1.order() == order_k1_expected, format!("|K_1| = {}", inst.k1.order()));
    expect(inst.k2.order() == order_k2_expected, format!("|K_2| = {}", inst.k2.order()));
    let il_k1 = r.il(inst.k1.members()).expect("non-empty");
    let il_k2 = r.il(inst.k2.members()).expect("non-empty");
    expect(il_k1 == il_p, format!("I_L(K_1) = {il_k1}"));
    expect(il_k2 == il_q, format!("I_L(K_2) = {il_k2}"));
    let product_k1_k2_is_k = inst.k1.join(r, &inst.k2).members() == inst.k.members();
    expect(product_k1_k2_is_k, "K_1 K_2 != K".into());
    let cap = inst.k1.intersection(&inst.k2);
    let order_k1_cap_k2_expected = inst.u_p_complement.order()
        * inst.u_q_complement.order()
        * inst.l1.order()
        * inst.l2.order();
    expect(cap.order() == order_k1_cap_k2_expected, format!("|K_1 ∩ K_2| = {}", cap.order()));
    let expected_cap = inst
        .u_p_complement
        .join(r, &inst.u_q_complement)
        .join(r, &inst.l1)
        .join(r, &inst.l2);
    expect(cap.members() == expected_cap.members(), "K_1 ∩ K_2 differs from U'_p U'_q L_1 L_2".into());

    let mut orbits_coincide_deep = true;
    for i in 0..=2u32 {
        for j in 0..=2u32 {
            if !(2..=4).contains(&(i + j)) {
                continue;
            }
            let x = r.ideal_orbit(r.ideal(p.pow(i) * q.pow(j)).expect("divisor"));
            let ok = {
                let base = orbits_on(r, &x, &inst.k);
                base == orbits_on(r, &x, &inst.k1) && base == orbits_on(r, &x, &inst.k2)
            };
            expect(ok, format!("orbits differ on {}{}R^×", p.pow(i), q.pow(j)));
            orbits_coincide_deep &= ok;
        }
    }
    let on_q = r.ideal_orbit(r.ideal(q).expect("divisor"));
    let on_p = r.ideal_orbit(r.ideal(p).expect("divisor"));
    let orbits_coincide_shallow = orbits_on(r, &on_q, &inst.k) == orbits_on(r, &on_q, &inst.k1)
        && orbits_on(r, &on_p, &inst.k) == orbits_on(r, &on_p, &inst.k2);
    expect(orbits_coincide_shallow, "orbits differ on qR^× or pR^×".into());

    ConstructionReport {
        ring: r.spec(),
        order: r.order(),
        rank: a.rank(),
        verification,
        dense,
        a_ideals: a.a_ideals(),
        pure,
        il_of,
        il_of_expected: il_p,
        nontrivial_wreath,
        tensor_over_p,
        order_k1: inst.k1.order(),
        order_k1_expected,
        order_k2: inst.k2.order(),
        order_k2_expected,
        order_k: inst.k.order(),
        il_k1,
        il_k2,
        product_k1_k2_is_k,
        order_k1_cap_k2: cap.order(),
        order_k1_cap_k2_expected,
        orbits_coincide_deep,
        orbits_coincide_shallow,
        failures,
    }
}

/// Builds and verifies the non-pure dense S-ring for `(p, d, q, e)`.
/// A failed check is reported as [`Error::TheoremViolation`].
pub fn build_nonpure_dense(p: u64, d: u32, q: u64, e: u32) -> Result<Construction> {
    build_nonpure_dense_with_limit(p, d, q, e, DEFAULT_CONSTRUCTION_LIMIT)
}

pub fn build_nonpure_dense_with_limit(p: u64, d: u32, q: u64, e: u32, limit: u64) -> Result<Construction> {
    let instance = construct_instance(p, d, q, e, limit)?;
    let sring = construction_partition(&instance)?;
    let report = verify_construction(&instance, &sring);
    if !report.ok() {
        return Err(Error::TheoremViolation(report.failures.join("; ")));
    }
    Ok(Construction {
        instance,
        sring,
        report,
    })
}
