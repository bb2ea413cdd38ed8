//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use cgschur::classify::{
    check_quotient_purity, classify_rational, decompose_pure, DecompositionKind,
};
use cgschur::construct::build_nonpure_dense;
use cgschur::numtheory::{divisors, gcd};
use cgschur::parse::parse_ring;
use cgschur::sring::{schur_closure, SRing};
use cgschur::subgroup::{all_subgroups_with_limit, is_pure, UnitSubgroup};
use cgschur::{CGRing, Characters, CycInt, ElementSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ring(spec: &str) -> Arc<CGRing> {
    Arc::new(parse_ring(spec).unwrap())
}

fn subgroups(r: &CGRing) -> Vec<UnitSubgroup> {
    all_subgroups_with_limit(r, &UnitSubgroup::units(r), 1024).unwrap()
}

#[derive(Default)]
struct Corpus {
    srings: Vec<SRing>,
    seen: HashSet<(String, Vec<Vec<usize>>)>,
}

impl Corpus {
    fn add(&mut self, a: &SRing) {
        if self.seen.insert((a.ring().spec(), a.classes().to_vec())) {
            self.srings.push(a.clone());
        }
    }
}

fn construction(p: u64, d: u32, q: u64, e: u32, corpus: &mut Corpus) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let built = pool
        .install(|| build_nonpure_dense(p, d, q, e))
        .map_err(|e| format!("construction failed: {e}"))?;
    let secs = start.elapsed().as_secs_f64();
    let a = &built.sring;
    let rep = &built.report;
    let r = a.ring();

    ensure!(rep.ok(), "report failures: {:?}", rep.failures);
    ensure!(a.verify().ok, "axioms fail");
    let ideals = r.ideals();
    let a_ideals = ideals
        .iter()
        .filter(|&&i| a.is_a_set(&r.ideal_elements(i)))
        .count();
    ensure!(a_ideals == ideals.len(), "{a_ideals} of {} ideals are A-sets", ideals.len());
    ensure!(a.is_dense() && rep.dense, "not dense");
    ensure!(!a.is_pure() && !rep.pure, "pure");
    // I_L(A) = pR_p inside R_p and zero in R_q.
    let kp = r.component_of_prime(p).unwrap();
    let kq = r.component_of_prime(q).unwrap();
    let il = a.il_of();
    ensure!(
        r.ideal_valuation(il, kp) == 1 && r.ideal_component_is_zero(il, kq),
        "I_L = {il}"
    );
    ensure!(a.nontrivial_wreath_certs().is_empty(), "nontrivial wreath certificate");
    let k1 = p.pow(d + 1) * q.pow(e);
    let k2 = p.pow(d) * q.pow(e + 1);
    ensure!(
        rep.order_k1 == k1 as usize && rep.order_k2 == k2 as usize,
        "|K_1| = {}, |K_2| = {}, expected {k1}, {k2}",
        rep.order_k1,
        rep.order_k2
    );
    ensure!(
        rep.orbits_coincide_deep && rep.orbits_coincide_shallow,
        "orbit identities fail"
    );
    ensure!(secs.total_cmp(&60.0).is_le(), "took {secs:.1}s");
    corpus.add(a);
    Ok(format!(
        "{} order {} rank {}, {} A-ideals, I_L = {il}, |K_1| = {k1}, |K_2| = {k2}, {secs:.2}s",
        r.spec(),
        r.order(),
        a.rank(),
        a_ideals
    ))
}

fn duality_involution(corpus: &mut Corpus) -> Outcome {
    let mut total = 0;
    for spec in ["GR(9)", "GR(4,2)", "GR(25)", "GR(4,2)xGR(9)"] {
        let r = ring(spec);
        let chars = Characters::new(r.clone());
        for k in subgroups(&r) {
            let a = SRing::cyclotomic(r.clone(), &k);
            let d = chars.dual(&a).map_err(|e| e.to_string())?;
            let dd = chars.dual(&d).map_err(|e| e.to_string())?;
            ensure!(dd == a, "{spec}: dual of dual differs for |K| = {}", k.order());
            ensure!(d.rank() == a.rank(), "{spec}: rank changes for |K| = {}", k.order());
            let orbits = r.orbit_partition(&k.elements()).unwrap();
            let expected = SRing::from_partition(r.clone(), orbits).unwrap();
            ensure!(d == expected, "{spec}: dual is not the K-orbit partition");
            corpus.add(&a);
            total += 1;
        }
    }
    Ok(format!("{total} cyclotomic S-rings"))
}

/// Closures of random unions of `K`-orbits for random `K`.
fn random_closures(specs: &[&str], target: usize, seed: u64) -> Vec<SRing> {
    random_closures_with(specs, target, seed, |_, _| true)
}

fn random_closures_with(
    specs: &[&str],
    target: usize,
    seed: u64,
    keep_group: impl Fn(&CGRing, &UnitSubgroup) -> bool,
) -> Vec<SRing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rings: Vec<(Arc<CGRing>, Vec<UnitSubgroup>)> = specs
        .iter()
        .map(|s| {
            let r = ring(s);
            let g = subgroups(&r).into_iter().filter(|k| keep_group(&r, k)).collect();
            (r, g)
        })
        .collect();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for _ in 0..target * 20 {
        if out.len() >= target {
            break;
        }
        let (r, groups) = rings.choose(&mut rng).unwrap();
        let k = groups.choose(&mut rng).unwrap();
        let orbits: Vec<Vec<usize>> = r
            .orbit_partition(&k.elements())
            .unwrap()
            .into_iter()
            .filter(|o| o[0] != r.zero())
            .collect();
        let seeds: Vec<ElementSet> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let mut s = ElementSet::new(r.order());
                for o in &orbits {
                    if rng.gen_bool(0.3) {
                        o.iter().for_each(|&x| s.insert(x));
                    }
                }
                s
            })
            .filter(|s| !s.is_empty())
            .collect();
        let a = schur_closure(r.clone(), &seeds);
        if seen.insert((r.spec(), a.classes().to_vec())) {
            out.push(a);
        }
    }
    out
}

fn wreath_duality(corpus: &mut Corpus) -> Outcome {
    let specs = [
        "GR(4,2)",
        "GR(9)",
        "GR(25)",
        "GR(27)",
        "GR(3,2)",
        "GR(4)xGR(9)",
        "GR(8)xGR(3)",
        "GR(4,2)xGR(9)",
    ];
    let srings = random_closures(&specs, 40, 0x5eed_0004);
    ensure!(srings.len() >= 20, "only {} distinct closures", srings.len());
    let mut with_certs = 0;
    for a in &srings {
        let r = a.ring();
        ensure!(a.verify().ok, "closure over {} is not an S-ring", r.spec());
        let d = Characters::new(a.ring_arc().clone())
            .dual(a)
            .map_err(|e| e.to_string())?;
        let ca = a.nontrivial_wreath_certs();
        let cd = d.nontrivial_wreath_certs();
        ensure!(
            ca.is_empty() == cd.is_empty(),
            "{}: {} certificates vs {} on the dual",
            r.spec(),
            ca.len(),
            cd.len()
        );
        let swapped = |certs: &[cgschur::sring::WreathCert]| -> Vec<(u64, u64)> {
            let mut v: Vec<(u64, u64)> = certs
                .iter()
                .map(|c| (r.perp(c.j).generator(), r.perp(c.i).generator()))
                .collect();
            v.sort_unstable();
            v
        };
        let mut on_dual: Vec<(u64, u64)> =
            cd.iter().map(|c| (c.i.generator(), c.j.generator())).collect();
        on_dual.sort_unstable();
        ensure!(swapped(&ca) == on_dual, "{}: certificates do not swap under perp", r.spec());
        if !ca.is_empty() {
            with_certs += 1;
        }
        corpus.add(a);
        corpus.add(&d);
    }
    Ok(format!(
        "{} closures, {with_certs} with nontrivial certificates",
        srings.len()
    ))
}

/// `{y : #{x ∈ X : px = y} ≢ 0 mod p}`.
fn frobenius_oracle(r: &CGRing, x: &[usize], p: u64) -> ElementSet {
    let mut counts: HashMap<usize, u64> = HashMap::new();
    for &a in x {
        *counts.entry(r.scale(a, p)).or_default() += 1;
    }
    ElementSet::from_indices(
        r.order(),
        counts.into_iter().filter(|&(_, n)| n % p != 0).map(|(y, _)| y),
    )
}

fn schur_wielandt(corpus: &Corpus) -> Outcome {
    let mut classes = 0;
    let mut rational = 0;
    for a in &corpus.srings {
        let r = a.ring();
        let c = r.characteristic();
        for i in 0..a.rank() {
            classes += 1;
            let x = &a.classes()[i];
            for m in (1..c).filter(|&m| gcd(m, c) == 1) {
                let mx = ElementSet::from_indices(r.order(), x.iter().map(|&v| r.scale(v, m)));
                ensure!(a.is_class(&mx), "{}: {m}X is not a class for X = {x:?}", r.spec());
            }
            for p in r.primes() {
                let xp = frobenius_oracle(r, x, p);
                ensure!(xp == a.frobenius_set(i, p), "{}: X^[{p}] disagrees", r.spec());
                ensure!(
                    xp.is_empty() || a.is_a_set(&xp),
                    "{}: X^[{p}] is not a union of classes",
                    r.spec()
                );
                if a.is_class_rational(i, &[p]) {
                    rational += 1;
                    let k = r.component_of_prime(p).unwrap();
                    let il_p_nonzero = !r.ideal_component_is_zero(a.class_il(i), k);
                    ensure!(
                        il_p_nonzero == xp.is_empty(),
                        "{}: X = {x:?}, p = {p}: I_L(X)_p nonzero is {il_p_nonzero}, X^[p] empty is {}",
                        r.spec(),
                        xp.is_empty()
                    );
                }
            }
        }
    }
    Ok(format!(
        "{} S-rings, {classes} classes, {rational} p-rational class checks",
        corpus.srings.len()
    ))
}

fn separation() -> Outcome {
    let mut orbits_checked = 0;
    let mut subsets_checked = 0usize;
    for spec in ["GR(9)", "GR(4,2)", "GR(4)xGR(9)"] {
        let r = ring(spec);
        let chars = Characters::new(r.clone());
        let units = r.units().to_vec();
        let zero = chars.field().zero();
        let mut done: HashSet<Vec<usize>> = HashSet::new();
        for k in subgroups(&r).into_iter().filter(|k| is_pure(&r, k)) {
            for orbit in r.orbit_partition(&k.elements()).unwrap() {
                let set = ElementSet::from_indices(r.order(), orbit.iter().copied());
                if orbit.len() > 12 || !r.is_pure_set(&set).unwrap() || !done.insert(orbit.clone()) {
                    continue;
                }
                orbits_checked += 1;
                let n = orbit.len();
                let point: Vec<Vec<CycInt>> = orbit
                    .iter()
                    .map(|&x| units.iter().map(|&u| chars.char_sum(u, [x])).collect())
                    .collect();
                let mut sig: Vec<Vec<CycInt>> = vec![vec![zero.clone(); units.len()]; 1 << n];
                let mut distinct: HashSet<Vec<Vec<i64>>> = HashSet::new();
                for mask in 1usize..1 << n {
                    let low = mask.trailing_zeros() as usize;
                    let mut s = sig[mask & (mask - 1)].clone();
                    for (v, w) in s.iter_mut().zip(&point[low]) {
                        v.add_assign(w);
                    }
                    ensure!(
                        s.iter().any(|v| !v.is_zero()),
                        "{spec}: no unit character is nonzero on a subset of {orbit:?}"
                    );
                    ensure!(
                        distinct.insert(s.iter().map(|v| v.coeffs.clone()).collect()),
                        "{spec}: two subsets of {orbit:?} are not separated"
                    );
                    sig[mask] = s;
                    subsets_checked += 1;
                }
                // The library check agrees on the extreme pair.
                let full = ElementSet::from_indices(r.order(), orbit.iter().copied());
                let single = ElementSet::from_indices(r.order(), [orbit[0]]);
                let sep = chars.separation_check(&full, &single, &k).unwrap();
                ensure!(sep.orbit_pure && sep.as_guaranteed(), "{spec}: separation_check fails");
                if let (Some(u), Some(t)) = (sep.nonzero_unit, units.first()) {
                    let shift = chars.nonzero_translate(*t, &sep).unwrap();
                    let translated = full.iter().map(|x| r.mul(shift, x));
                    ensure!(!chars.char_sum(*t, translated).is_zero(), "{spec}: translate {u} fails");
                }
            }
        }
    }
    Ok(format!(
        "{orbits_checked} pure orbits, {subsets_checked} nonempty subsets pairwise separated"
    ))
}

fn pure_decomposition(corpus: &mut Corpus) -> Outcome {
    let mut instances: Vec<SRing> = Vec::new();
    let mut from_groups = 0;
    for spec in ["GR(9)xGR(25)", "GR(27)"] {
        let r = ring(spec);
        for k in subgroups(&r).into_iter().filter(|k| is_pure(&r, k)) {
            instances.push(SRing::cyclotomic(r.clone(), &k));
            from_groups += 1;
        }
    }
    // The named rings carry fewer than 20 distinct pure S-rings, so the
    // harness also draws on a few more odd rings.
    let harness_specs = ["GR(9)xGR(25)", "GR(27)", "GR(27)xGR(25)", "GR(9)xGR(5)xGR(7)", "GR(3,2)xGR(25)"];
    let mut harness: Vec<SRing> = random_closures_with(&harness_specs, 60, 0x5eed_0007, is_pure)
        .into_iter()
        .filter(|a| a.is_pure())
        .collect();
    for spec in harness_specs {
        harness.extend(rank2_tensors(&ring(spec)));
    }
    let mut seen = HashSet::new();
    harness.retain(|a| seen.insert((a.ring().spec(), a.classes().to_vec())));
    ensure!(harness.len() >= 20, "only {} harness pure S-rings", harness.len());
    let n_harness = harness.len();
    instances.extend(harness);

    let mut dense = 0;
    let mut rank2_factors = 0;
    for a in &instances {
        let spec = a.ring().spec();
        ensure!(a.verify().ok, "{spec}: input is not an S-ring");
        let d = decompose_pure(a).map_err(|e| format!("{spec}: {e}"))?;
        ensure!(d.kind == DecompositionKind::PureTensor, "{spec}: {:?}", d.reason);
        let back = d.reassemble(a).map_err(|e| e.to_string())?;
        ensure!(back == *a, "{spec}: reassembly differs");
        rank2_factors += d
            .factors
            .iter()
            .filter(|f| f.role == cgschur::classify::FactorRole::Rank2)
            .count();
        if a.is_dense() {
            dense += 1;
            let k = a
                .is_cyclotomic_by_unit_class()
                .ok_or_else(|| format!("{spec}: dense pure S-ring is not cyclotomic"))?;
            ensure!(SRing::cyclotomic(a.ring_arc().clone(), &k) == *a, "{spec}: cyc(K) differs");
        }
        corpus.add(a);
    }
    Ok(format!(
        "{from_groups} pure subgroups + {n_harness} harness S-rings, {dense} dense, {rank2_factors} rank 2 factors"
    ))
}

/// `rank2(R_Q) ⊗ cyc(K, R_Q')` for every non-field `R_Q` and pure `K`.
fn rank2_tensors(r: &Arc<CGRing>) -> Vec<SRing> {
    let primes = r.primes();
    let mut out = Vec::new();
    for mask in 1u32..1 << primes.len() {
        let side = |inside: bool| -> Vec<u64> {
            (0..primes.len())
                .filter(|i| (mask >> i & 1 == 1) == inside)
                .map(|i| primes[i])
                .collect()
        };
        let (q, rest) = (side(true), side(false));
        let left = Arc::new(r.subring(&q).unwrap().ring);
        if left.is_field() {
            continue;
        }
        if rest.is_empty() {
            out.push(SRing::rank2(r.clone()));
            continue;
        }
        let right = Arc::new(r.subring(&rest).unwrap().ring);
        for k in subgroups(&right).into_iter().filter(|k| is_pure(&right, k)) {
            let parts = [
                (q.clone(), SRing::rank2(left.clone())),
                (rest.clone(), SRing::cyclotomic(right.clone(), &k)),
            ];
            let t = cgschur::sring::assemble_tensor(r.clone(), &parts).unwrap();
            out.push(t);
        }
    }
    out
}

/// All set partitions of `0..n`, as block labels.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur.push(b);
            go(i + 1, n, cur, blocks.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

fn rational_classification(corpus: &mut Corpus) -> Outcome {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    let mut per_ring = Vec::new();
    for spec in [
        "GR(4)xGR(9)",
        "GR(8)xGR(3)",
        "GR(4,2)",
        "GR(9)",
        "GR(27)",
        "GR(25)",
        "GR(4,2)xGR(9)",
    ] {
        let r = ring(spec);
        let c = r.characteristic();
        let orbits: Vec<Vec<usize>> = divisors(c)
            .into_iter()
            .filter(|&m| m != c)
            .map(|m| r.ideal_orbit(r.ideal(m).unwrap()).to_vec())
            .collect();
        let mut rational = 0;
        for labels in set_partitions(orbits.len()) {
            let blocks = labels.iter().max().map_or(0, |b| b + 1);
            let mut classes = vec![vec![r.zero()]];
            classes.extend((0..blocks).map(|b| {
                let mut v: Vec<usize> = labels
                    .iter()
                    .zip(&orbits)
                    .filter(|(&l, _)| l == b)
                    .flat_map(|(_, o)| o.iter().copied())
                    .collect();
                v.sort_unstable();
                v
            }));
            let a = SRing::from_partition(r.clone(), classes).unwrap();
            if !a.verify().ok {
                continue;
            }
            rational += 1;
            let d = classify_rational(&a).map_err(|e| format!("{spec} {:?}: {e}", a.classes()))?;
            let kind = match d.kind {
                DecompositionKind::RationalWreath => "wreath",
                DecompositionKind::RationalTensorRank2 => "rank 2 tensor",
                other => return Err(format!("{spec}: unexpected {other:?}")),
            };
            if d.kind == DecompositionKind::RationalTensorRank2 {
                ensure!(d.reassemble(&a).unwrap() == a, "{spec}: reassembly differs");
            } else {
                let cert = d.wreath.unwrap();
                ensure!(
                    cert.nontrivial && a.wreath_pairs().contains(&cert),
                    "{spec}: bad certificate"
                );
            }
            *counts.entry(kind).or_default() += 1;
            corpus.add(&a);
        }
        per_ring.push(format!("{spec}: {rational}"));
    }
    for a in corpus.srings.clone() {
        if a.ring().characteristic() <= 36 && a.is_fully_rational() {
            classify_rational(&a).map_err(|e| format!("{}: {e}", a.ring().spec()))?;
        }
    }
    Ok(format!("{} ({counts:?})", per_ring.join(", ")))
}

fn quotient_purity(corpus: &Corpus) -> Outcome {
    let r = ring("GR(9)xGR(25)");
    let mut applicable = 0;
    let mut groups = 0;
    let mut inputs: Vec<(String, SRing)> = subgroups(&r)
        .into_iter()
        .map(|k| (format!("cyc |K| = {}", k.order()), SRing::cyclotomic(r.clone(), &k)))
        .collect();
    groups += inputs.len();
    inputs.extend(
        corpus
            .srings
            .iter()
            .filter(|a| *a.ring() == *r)
            .map(|a| (format!("corpus rank {}", a.rank()), a.clone())),
    );
    let n_inputs = inputs.len();
    for (label, a) in inputs {
        for m in [15u64, 45, 75, 225] {
            let j = r.ideal(m).unwrap();
            let rep = check_quotient_purity(&a, j).map_err(|e| e.to_string())?;
            if !rep.applicable {
                continue;
            }
            applicable += 1;
            ensure!(rep.ok, "{label}, J = {j}: quotient not pure");
            // direct check: the image of the class of 1 in R/J has trivial I_L
            let q = r.quotient(j).unwrap();
            let one = a.class_set(a.class_of(r.one()));
            let image = q.project_set(&one);
            ensure!(
                q.ring.is_pure_set(&image).unwrap(),
                "{label}, J = {j}: projected class of 1 is not pure"
            );
        }
    }
    ensure!(applicable > 0, "no instance satisfies the hypotheses");

    let z8 = ring("GR(8)");
    let x = ElementSet::from_indices(8, [1, 7]);
    ensure!(z8.is_pure_set(&x).unwrap(), "{{-1, 1}} is not pure in Z_8");
    let i = z8.ideal(4).unwrap();
    let q = z8.quotient(i).unwrap();
    let image = q.project_set(&x);
    ensure!(!q.ring.is_pure_set(&image).unwrap(), "the projection to Z_4 is pure");
    let doubled = ElementSet::from_indices(8, x.iter().map(|v| z8.scale(v, 2)));
    ensure!(!z8.is_pure_set(&doubled).unwrap(), "2X is pure");
    let k = UnitSubgroup::from_members(&z8, x.clone()).unwrap();
    let rep = check_quotient_purity(&SRing::cyclotomic(z8.clone(), &k), i).unwrap();
    ensure!(!rep.applicable, "even characteristic accepted");
    Ok(format!(
        "{groups} subgroups, {n_inputs} S-rings, {applicable} (A, J) pairs meeting the hypotheses; Z_8 example reproduced"
    ))
}

fn ideal_lattice_oracle(r: &CGRing) -> HashSet<ElementSet> {
    let n = r.order();
    let principal: Vec<ElementSet> = (0..n)
        .map(|x| ElementSet::from_indices(n, (0..n).map(|y| r.mul(x, y))))
        .collect();
    let mut found: HashSet<ElementSet> = HashSet::new();
    let mut frontier = vec![ElementSet::from_indices(n, [r.zero()])];
    found.insert(frontier[0].clone());
    while let Some(i) = frontier.pop() {
        for p in &principal {
            let mut sum = ElementSet::new(n);
            for a in i.iter() {
                for b in p.iter() {
                    sum.insert(r.add(a, b));
                }
            }
            if found.insert(sum.clone()) {
                frontier.push(sum);
            }
        }
    }
    found
}

fn structural_sanity() -> Outcome {
    let specs = [
        "GR(4,2)",
        "GR(9)",
        "GR(25)",
        "GR(27)",
        "GR(8)",
        "GR(3,2)",
        "GR(4)xGR(9)",
        "GR(8)xGR(3)",
        "GR(4,2)xGR(9)",
        "GR(9)xGR(25)",
        "GR(9)xGR(4,2)",
    ];
    for spec in specs {
        let r = ring(spec);
        for g in r.components() {
            let q = g.residue_field_order();
            let n = g.n();
            let t: Vec<usize> = g.teichmuller_group().iter().map(|x| g.index(x)).collect();
            let p1: Vec<usize> = g.principal_units().iter().map(|x| g.index(x)).collect();
            ensure!(t.len() as u64 == q - 1, "{spec}: |T| = {}", t.len());
            ensure!(p1.len() as u64 == q.pow(n - 1), "{spec}: |1+pR| = {}", p1.len());
            let mut products = HashSet::new();
            for &a in &t {
                for &b in &p1 {
                    products.insert(g.index(&g.mul(&g.element(a), &g.element(b))));
                }
            }
            let units: HashSet<usize> =
                (0..g.order()).filter(|&i| g.is_unit(&g.element(i))).collect();
            ensure!(products == units, "{spec}: T x (1+pR) is not the unit group");
            ensure!(units.len() as u64 == q.pow(n) - q.pow(n - 1), "{spec}: unit count");
            for &u in &units {
                let x = g.element(u);
                let lift = g.teichmuller_lift(&x);
                ensure!(t.contains(&g.index(&lift)), "{spec}: lift outside T");
                let rest = g.mul(&x, &g.inv(&lift).unwrap());
                ensure!(p1.contains(&g.index(&rest)), "{spec}: u / lift(u) not principal");
            }
        }

        let lattice = ideal_lattice_oracle(&r);
        let listed: HashSet<ElementSet> = r.ideals().into_iter().map(|i| r.ideal_elements(i)).collect();
        ensure!(lattice == listed, "{spec}: {} ideals by closure, {} listed", lattice.len(), listed.len());
        let expected: usize = r.components().iter().map(|g| g.n() as usize + 1).product();
        ensure!(listed.len() == expected, "{spec}: {} ideals", listed.len());

        let chars = Characters::new(r.clone());
        ensure!(chars.is_faithful(), "{spec}: standard character not faithful");
        for i in r.ideals() {
            let m = i.generator();
            let orbit = ElementSet::from_indices(
                r.order(),
                r.units().iter().map(|u| r.scale(u, m)),
            );
            ensure!(orbit == r.ideal_orbit(i), "{spec}: {i} orbit");
            let ir = r.ideal_ring(m).unwrap();
            let sub = ir.ring();
            let units_up = ElementSet::from_indices(
                r.order(),
                sub.units().iter().map(|t| ir.to_parent(t)),
            );
            ensure!(units_up == orbit, "{spec}: units of the ideal ring {i} differ from mR^x");

            let elems = r.ideal_elements(i).to_vec();
            let perp_oracle = ElementSet::from_indices(
                r.order(),
                (0..r.order()).filter(|&x| elems.iter().all(|&y| chars.exponent(r.mul(x, y)) == 0)),
            );
            let perp = r.perp(i);
            ensure!(perp_oracle == r.ideal_elements(perp), "{spec}: perp of {i}");
            ensure!(r.perp(perp) == i, "{spec}: perp is not an involution at {i}");
            ensure!(
                r.ideal_order(i) * r.ideal_order(perp) == r.order(),
                "{spec}: |I||I^perp| != |R| at {i}"
            );
        }
    }
    Ok(format!("{} rings", specs.len()))
}

fn run(n: u32, f: impl FnOnce() -> Outcome) -> (u32, Outcome) {
    let start = Instant::now();
    let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    (n, out.map(|s| format!("{s} [{secs:.1}s]")))
}

fn main() {
    let mut corpus = Corpus::default();
    let mut results = vec![
        run(1, || construction(2, 2, 3, 1, &mut corpus)),
        run(2, || construction(3, 1, 2, 2, &mut corpus)),
        run(3, || duality_involution(&mut corpus)),
        run(4, || wreath_duality(&mut corpus)),
        run(6, separation),
        run(7, || pure_decomposition(&mut corpus)),
        run(8, || rational_classification(&mut corpus)),
    ];
    results.push(run(5, || schur_wielandt(&corpus)));
    results.push(run(9, || quotient_purity(&corpus)));
    results.push(run(10, structural_sanity));
    results.sort_by_key(|(n, _)| *n);

    let mut failed = 0;
    for (n, out) in &results {
        match out {
            Ok(detail) => println!("criterion {n:>2}: pass  {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {why}");
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
