use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use cgschur::classify::{check_nondense_structure, classify_rational, decompose_pure};
use cgschur::construct::{
    construct_instance, construction_partition, verify_construction, DEFAULT_CONSTRUCTION_LIMIT,
};
use cgschur::doc::{ring_moduli, DecompositionDoc, SRingDoc};
use cgschur::galois::DEFAULT_MAX_ORDER;
use cgschur::parse::parse_ring_with_limit;
use cgschur::sring::{schur_closure, schur_closure_dense, verify_partition};
use cgschur::subgroup::{all_subgroups, is_pure, subgroup_generated, UnitSubgroup};
use cgschur::{CGRing, Characters, ElementSet, Error, SRing};
use serde_json::{json, Value};

use crate::{ClassifyCmd, Command, ConstructCmd, DualCmd, EnumerateCmd, RingCmd, SringCmd};

pub struct Output {
    pub value: Value,
    /// False when a verification or theorem check failed.
    pub ok: bool,
}

impl Output {
    fn ok(value: Value) -> Self {
        Self { value, ok: true }
    }

    fn failed(value: Value) -> Self {
        Self { value, ok: false }
    }
}

fn env_limit(var: &str, default: u64) -> Result<u64> {
    match std::env::var(var) {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("{var} must be a positive integer, got {s:?}")),
        Err(_) => Ok(default),
    }
}

fn max_order() -> Result<u64> {
    env_limit("CGSCHUR_MAX_ORDER", DEFAULT_MAX_ORDER)
}

fn parse_ring(spec: &str) -> Result<Arc<CGRing>> {
    Ok(Arc::new(parse_ring_with_limit(spec, max_order()?)?))
}

fn read_doc(path: &Path) -> Result<SRingDoc> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("engine types serialize")
}

fn sring_value(a: &SRing) -> Value {
    to_value(&SRingDoc::from_sring(a))
}

/// The document as an S-ring, or the failed verification report.
fn load_verified(path: &Path) -> Result<std::result::Result<SRing, Output>> {
    let doc = read_doc(path)?;
    let a = match doc.to_partition(max_order()?) {
        Ok(a) => a,
        Err(Error::NotAPartition(why)) => {
            return Ok(Err(Output::failed(json!({
                "ok": false,
                "violations": [{"axiom": "partition", "detail": why}],
            }))))
        }
        Err(e) => return Err(e.into()),
    };
    let report = a.verify();
    if report.ok {
        Ok(Ok(a))
    } else {
        Ok(Err(Output::failed(to_value(&report))))
    }
}

macro_rules! verified {
    ($path:expr) => {
        match load_verified($path)? {
            Ok(a) => a,
            Err(out) => return Ok(out),
        }
    };
}

pub fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Ring(RingCmd::Info { spec }) => ring_info(&spec),
        Command::Sring(c) => sring(c),
        Command::Dual { check, file } => match (check, file) {
            (Some(DualCmd::Check { file }), _) => dual_check(&file),
            (None, Some(file)) => dual(&file),
            (None, None) => bail!("dual needs an S-ring document"),
        },
        Command::Construct(ConstructCmd::T210809a { p, d, q, e, out }) => {
            construct(p, d, q, e, out.as_deref())
        }
        Command::Classify(c) => classify(c),
        Command::Enumerate(EnumerateCmd::Subgroups { spec }) => enumerate_subgroups(&spec),
        Command::Enumerate(EnumerateCmd::Cyc { spec }) => enumerate_cyc(&spec),
    }
}

fn ring_info(spec: &str) -> Result<Output> {
    let r = parse_ring(spec)?;
    let components: Vec<Value> = r
        .components()
        .iter()
        .map(|g| {
            let teich: Vec<usize> = g.teichmuller_group().iter().map(|x| g.index(x)).collect();
            json!({
                "spec": g.spec(),
                "p": g.p(),
                "n": g.n(),
                "d": g.d(),
                "modulus": g.modulus(),
                "order": g.order(),
                "residue_field_order": g.residue_field_order(),
                "unit_count": g.unit_count(),
                "teichmuller_order": teich.len(),
                "teichmuller": teich,
                "principal_unit_order": g.principal_units().len(),
            })
        })
        .collect();
    let maximal = r.maximal_ideals();
    let minimal = r.minimal_ideals();
    let ideals: Vec<Value> = r
        .ideals()
        .into_iter()
        .map(|i| {
            json!({
                "m": i,
                "name": i.to_string(),
                "order": r.ideal_order(i),
                "maximal": maximal.contains(&i),
                "minimal": minimal.contains(&i),
                "perp": r.perp(i),
                "generator_orbit_size": r.ideal_orbit(i).len(),
            })
        })
        .collect();
    Ok(Output::ok(json!({
        "ring": r.spec(),
        "moduli": ring_moduli(&r),
        "order": r.order(),
        "characteristic": r.characteristic(),
        "unit_count": r.unit_count(),
        "unit_generators": r.unit_generators(),
        "components": components,
        "ideal_count": ideals.len(),
        "ideals": ideals,
    })))
}

fn sring(cmd: SringCmd) -> Result<Output> {
    match cmd {
        SringCmd::Cyc { spec, gens } => {
            let r = parse_ring(&spec)?;
            let k = match gens {
                Some(g) => subgroup_generated(&r, &g)?,
                None => UnitSubgroup::units(&r),
            };
            Ok(Output::ok(sring_value(&SRing::cyclotomic(r, &k))))
        }
        SringCmd::Closure { spec, sets, dense } => {
            let r = parse_ring(&spec)?;
            let seeds = sets
                .iter()
                .map(|s| {
                    let elems = s
                        .split(',')
                        .map(|t| t.trim().parse::<usize>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .with_context(|| format!("bad element list {s:?}"))?;
                    if let Some(&x) = elems.iter().find(|&&x| x >= r.order()) {
                        bail!("{x} is not an element of {}", r.spec());
                    }
                    Ok(ElementSet::from_indices(r.order(), elems))
                })
                .collect::<Result<Vec<_>>>()?;
            let a = if dense {
                schur_closure_dense(r, &seeds)
            } else {
                schur_closure(r, &seeds)
            };
            Ok(Output::ok(sring_value(&a)))
        }
        SringCmd::Verify(f) => {
            let doc = read_doc(&f.file)?;
            let ring = Arc::new(doc.ring(max_order()?)?);
            match verify_partition(ring, doc.classes) {
                Ok(report) => Ok(Output {
                    ok: report.ok,
                    value: to_value(&report),
                }),
                Err(Error::NotAPartition(why)) => Ok(Output::failed(json!({
                    "ok": false,
                    "violations": [{"axiom": "partition", "detail": why}],
                }))),
                Err(e) => Err(e.into()),
            }
        }
        SringCmd::Quotient(arg) => {
            let a = verified!(&arg.file);
            let j = a.ring().ideal(arg.ideal)?;
            Ok(Output::ok(sring_value(&a.quotient(j)?)))
        }
        SringCmd::Restrict(arg) => {
            let a = verified!(&arg.file);
            let i = a.ring().ideal(arg.ideal)?;
            Ok(Output::ok(sring_value(&a.restrict(i)?)))
        }
        SringCmd::Tensor { left, right } => {
            let a = verified!(&left);
            let b = verified!(&right);
            Ok(Output::ok(sring_value(&a.tensor(&b)?)))
        }
        SringCmd::Wreath(f) => {
            let a = verified!(&f.file);
            let pairs = a.wreath_pairs();
            let nontrivial: Vec<_> = pairs.iter().filter(|c| c.nontrivial).collect();
            Ok(Output::ok(json!({
                "ring": a.ring().spec(),
                "nontrivial_wreath": !nontrivial.is_empty(),
                "nontrivial": nontrivial,
                "pairs": pairs,
            })))
        }
        SringCmd::Pure(f) => {
            let a = verified!(&f.file);
            Ok(Output::ok(json!({
                "ring": a.ring().spec(),
                "il_of": a.il_of(),
                "pure": a.is_pure(),
                "dense": a.is_dense(),
                "a_ideals": a.a_ideals(),
            })))
        }
        SringCmd::Rational { file, primes } => {
            let a = verified!(&file);
            let primes = primes.unwrap_or_else(|| a.ring().primes());
            if let Some(p) = primes.iter().find(|&&p| a.ring().component_of_prime(p).is_none()) {
                bail!("{p} is not a prime of {}", a.ring().spec());
            }
            let per_class: Vec<bool> = (0..a.rank())
                .map(|i| a.is_class_rational(i, &primes))
                .collect();
            Ok(Output::ok(json!({
                "ring": a.ring().spec(),
                "primes": primes,
                "rational": per_class.iter().all(|&b| b),
                "classes": per_class,
            })))
        }
    }
}

fn dual(path: &Path) -> Result<Output> {
    let a = verified!(path);
    let d = Characters::new(a.ring_arc().clone()).dual(&a)?;
    let mut doc = SRingDoc::from_sring(&d);
    doc.dual_of = Some(path.display().to_string());
    Ok(Output::ok(to_value(&doc)))
}

fn dual_check(path: &Path) -> Result<Output> {
    let a = verified!(path);
    let report = Characters::new(a.ring_arc().clone()).check_duality_theorems(&a)?;
    Ok(Output {
        ok: report.ok,
        value: to_value(&report),
    })
}

fn construct(p: u64, d: u32, q: u64, e: u32, out: Option<&Path>) -> Result<Output> {
    let limit = env_limit("CGSCHUR_MAX_ORDER", DEFAULT_CONSTRUCTION_LIMIT)?;
    let inst = construct_instance(p, d, q, e, limit)?;
    let a = construction_partition(&inst)?;
    let report = verify_construction(&inst, &a);
    let doc = SRingDoc::from_sring(&a);
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&doc)?;
        fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    let groups = [
        ("t_p", &inst.t_p),
        ("t_q", &inst.t_q),
        ("u_p", &inst.u_p),
        ("u_p_complement", &inst.u_p_complement),
        ("u_q", &inst.u_q),
        ("u_q_complement", &inst.u_q_complement),
        ("l1", &inst.l1),
        ("l2", &inst.l2),
        ("k1", &inst.k1),
        ("k2", &inst.k2),
        ("k", &inst.k),
    ];
    let witnesses: serde_json::Map<String, Value> = groups
        .iter()
        .map(|(name, g)| (name.to_string(), json!(g.elements())))
        .collect();
    Ok(Output {
        ok: report.ok(),
        value: json!({
            "report": report,
            "witnesses": witnesses,
            "sring": doc,
        }),
    })
}

fn classify(cmd: ClassifyCmd) -> Result<Output> {
    let decomposition = |d: std::result::Result<cgschur::classify::Decomposition, Error>| match d {
        Ok(d) => Ok(Output::ok(to_value(&DecompositionDoc::from(&d)))),
        Err(Error::TheoremViolation(why)) => Ok(Output::failed(json!({
            "ok": false,
            "theorem_violation": why,
        }))),
        Err(e) => Err(anyhow!(e)),
    };
    match cmd {
        ClassifyCmd::Pure(f) => {
            let a = verified!(&f.file);
            decomposition(decompose_pure(&a))
        }
        ClassifyCmd::Rational(f) => {
            let a = verified!(&f.file);
            decomposition(classify_rational(&a))
        }
        ClassifyCmd::Nondense(f) => {
            let a = verified!(&f.file);
            let report = check_nondense_structure(&a)?;
            Ok(Output {
                ok: report.ok,
                value: to_value(&report),
            })
        }
    }
}

fn unit_subgroups(r: &CGRing) -> Result<Vec<UnitSubgroup>> {
    Ok(all_subgroups(r, &UnitSubgroup::units(r))?)
}

fn enumerate_subgroups(spec: &str) -> Result<Output> {
    let r = parse_ring(spec)?;
    let items: Vec<Value> = unit_subgroups(&r)?
        .iter()
        .map(|k| {
            json!({
                "order": k.order(),
                "generators": k.generators(),
                "pure": is_pure(&r, k),
                "elements": k.elements(),
            })
        })
        .collect();
    Ok(Output::ok(json!({
        "ring": r.spec(),
        "unit_count": r.unit_count(),
        "count": items.len(),
        "subgroups": items,
    })))
}

fn enumerate_cyc(spec: &str) -> Result<Output> {
    let r = parse_ring(spec)?;
    let items: Vec<Value> = unit_subgroups(&r)?
        .iter()
        .map(|k| {
            let a = SRing::cyclotomic(r.clone(), k);
            json!({
                "order": k.order(),
                "generators": k.generators(),
                "rank": a.rank(),
                "pure": a.is_pure(),
                "il_of": a.il_of(),
                "dense": a.is_dense(),
                "fully_rational": a.is_fully_rational(),
                "nontrivial_wreath": a.is_nontrivial_wreath(),
            })
        })
        .collect();
    Ok(Output::ok(json!({
        "ring": r.spec(),
        "count": items.len(),
        "srings": items,
    })))
}
