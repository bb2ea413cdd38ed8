//! Decomposition and classification checkers for S-rings over CG-rings.
//!
//! Each checker decides the structure of its input by exhaustive search. When
//! the input satisfies the hypotheses of a structure theorem and the search
//! still fails, the result is [`Error::TheoremViolation`].

use serde::Serialize;

use crate::cgring::Ideal;
use crate::duality::Characters;
use crate::error::{Error, Result};
use crate::sring::{assemble_tensor, SRing, WreathCert};
use crate::subgroup::is_admissible_ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionKind {
    PureTensor,
    RationalWreath,
    RationalTensorRank2,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorRole {
    Cyclotomic,
    Rank2,
    Other,
}

#[derive(Clone, Debug)]
pub struct Factor {
    /// The primes of the components the factor lives on.
    pub primes: Vec<u64>,
    pub sring: SRing,
    pub role: FactorRole,
    /// For cyclotomic factors, the group `K` with `S = orb(K, R_Q)`.
    pub group: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub factors: Vec<Factor>,
    pub wreath: Option<WreathCert>,
    pub reason: Option<String>,
}

impl Decomposition {
    fn not_applicable(reason: impl Into<String>) -> Self {
        Self {
            kind: DecompositionKind::NotApplicable,
            factors: Vec::new(),
            wreath: None,
            reason: Some(reason.into()),
        }
    }

    /// The tensor product of the factors, over the ring of `like`.
    pub fn reassemble(&self, like: &SRing) -> Result<SRing> {
        let parts: Vec<(Vec<u64>, SRing)> = self
            .factors
            .iter()
            .map(|f| (f.primes.clone(), f.sring.clone()))
            .collect();
        assemble_tensor(like.ring_arc().clone(), &parts)
    }
}

/// Nonempty subsets of `primes`, by size and then lexicographically.
fn prime_subsets(primes: &[u64]) -> Vec<Vec<u64>> {
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    let mut out: Vec<Vec<u64>> = (1u32..1 << sorted.len())
        .map(|mask| {
            (0..sorted.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| sorted[i])
                .collect()
        })
        .collect();
    out.sort_by(|a: &Vec<u64>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// A factor of rank 2 splitting off `A`: either `A` itself (when `Q = P(R)`)
/// or the `R_Q` part of a tensor decomposition.
type Rank2Split = (Vec<u64>, SRing, Option<(Vec<u64>, SRing)>);

fn rank2_split(a: &SRing, require_non_field: bool) -> Option<Rank2Split> {
    let all = a.ring().primes();
    for q in prime_subsets(&all) {
        if q.len() == all.len() {
            if a.rank() == 2 && !(require_non_field && a.ring().is_field()) {
                return Some((all.clone(), a.clone(), None));
            }
            continue;
        }
        if let Ok(split) = a.is_tensor_over(&q) {
            if split.left.rank() == 2 && !(require_non_field && split.left.ring().is_field()) {
                return Some((split.primes, split.left, Some((split.complement, split.right))));
            }
        }
    }
    None
}

/// Splits a pure S-ring over an odd CG-ring into a pure cyclotomic factor and
/// rank 2 factors over non-fields.
pub fn decompose_pure(a: &SRing) -> Result<Decomposition> {
    let ring = a.ring();
    if !ring.is_odd() {
        return Ok(Decomposition::not_applicable("the characteristic is even"));
    }
    if !a.is_pure() {
        return Ok(Decomposition::not_applicable(format!(
            "not pure: I_L = {}",
            a.il_of()
        )));
    }
    let mut factors = Vec::new();
    let mut rest: Option<(Vec<u64>, SRing)> = Some((ring.primes(), a.clone()));
    while let Some((primes, b)) = rest.take() {
        match rank2_split(&b, true) {
            Some((q, left, remainder)) => {
                factors.push(Factor {
                    primes: q,
                    sring: left,
                    role: FactorRole::Rank2,
                    group: None,
                });
                rest = remainder;
            }
            None => {
                if !b.is_dense() {
                    return Err(Error::TheoremViolation(format!(
                        "the remaining factor over {} is not dense",
                        b.ring()
                    )));
                }
                let k = b.is_cyclotomic_by_unit_class().ok_or_else(|| {
                    Error::TheoremViolation(format!(
                        "the dense pure factor over {} is not cyclotomic",
                        b.ring()
                    ))
                })?;
                factors.push(Factor {
                    primes,
                    sring: b,
                    role: FactorRole::Cyclotomic,
                    group: Some(k.elements()),
                });
            }
        }
    }
    let d = Decomposition {
        kind: DecompositionKind::PureTensor,
        factors,
        wreath: None,
        reason: None,
    };
    if d.reassemble(a)? != *a {
        return Err(Error::TheoremViolation(
            "the factors do not reassemble to the input".into(),
        ));
    }
    Ok(d)
}

/// Classifies an S-ring all of whose classes are `R^×`-invariant.
pub fn classify_rational(a: &SRing) -> Result<Decomposition> {
    if !a.is_fully_rational() {
        return Err(Error::Hypothesis(
            "some basic set is not invariant under R^×".into(),
        ));
    }
    if let Some(cert) = a.nontrivial_wreath_certs().first() {
        return Ok(Decomposition {
            kind: DecompositionKind::RationalWreath,
            factors: Vec::new(),
            wreath: Some(*cert),
            reason: None,
        });
    }
    match rank2_split(a, false) {
        Some((q, left, remainder)) => {
            let mut factors = vec![Factor {
                primes: q,
                sring: left,
                role: FactorRole::Rank2,
                group: None,
            }];
            if let Some((qc, right)) = remainder {
                factors.push(Factor {
                    primes: qc,
                    sring: right,
                    role: FactorRole::Other,
                    group: None,
                });
            }
            let d = Decomposition {
                kind: DecompositionKind::RationalTensorRank2,
                factors,
                wreath: None,
                reason: None,
            };
            if d.reassemble(a)? != *a {
                return Err(Error::TheoremViolation(
                    "the factors do not reassemble to the input".into(),
                ));
            }
            Ok(d)
        }
        None => Err(Error::TheoremViolation(
            "rational S-ring with neither a non-trivial wreath certificate nor a rank 2 tensor factor"
                .into(),
        )),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NondenseReport {
    /// Some maximal ideal of `R` is not an A-ideal.
    pub hypothesis_holds: bool,
    pub wreath: Option<WreathCert>,
    pub rank2_factor_primes: Option<Vec<u64>>,
    pub pure: bool,
    /// Pure indecomposable; the same for the dual; pure with all maximal
    /// ideals; pure with all minimal ideals.
    pub equivalent_conditions: Option<[bool; 4]>,
    pub ok: bool,
    pub failures: Vec<String>,
}

fn is_pure_indecomposable(a: &SRing) -> bool {
    a.is_pure() && rank2_split(a, true).is_none()
}

pub fn check_nondense_structure(a: &SRing) -> Result<NondenseReport> {
    let r = a.ring();
    let all_max = r.maximal_ideals().into_iter().all(|i| a.is_a_ideal(i));
    let all_min = r.minimal_ideals().into_iter().all(|i| a.is_a_ideal(i));
    let hypothesis_holds = !all_max;
    let mut failures = Vec::new();
    let mut wreath = None;
    let mut rank2_factor_primes = None;
    if hypothesis_holds {
        wreath = a.nontrivial_wreath_certs().first().copied();
        if wreath.is_none() {
            rank2_factor_primes = rank2_split(a, true).map(|(q, _, _)| q);
            if rank2_factor_primes.is_none() {
                failures.push(
                    "a maximal ideal is not an A-ideal, yet there is neither a wreath certificate nor a rank 2 factor over a non-field"
                        .into(),
                );
            }
        }
    }
    let pure = a.is_pure();
    let equivalent_conditions = if pure {
        let dual = Characters::new(a.ring_arc().clone()).dual(a)?;
        let c = [
            is_pure_indecomposable(a),
            is_pure_indecomposable(&dual),
            all_max,
            all_min,
        ];
        if c.iter().any(|&x| x != c[0]) {
            failures.push(format!("equivalent conditions disagree: {c:?}"));
        }
        Some(c)
    } else {
        None
    };
    Ok(NondenseReport {
        hypothesis_holds,
        wreath,
        rank2_factor_primes,
        pure,
        equivalent_conditions,
        ok: failures.is_empty(),
        failures,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientPurityReport {
    pub applicable: bool,
    pub reason: Option<String>,
    pub ideal: Ideal,
    pub quotient_pure: Option<bool>,
    pub ok: bool,
}

/// Purity of `A_{R/J}` for a pure `A` over an odd ring whose maximal ideals are
/// A-ideals and an A-ideal `J` inside every maximal ideal.
pub fn check_quotient_purity(a: &SRing, j: Ideal) -> Result<QuotientPurityReport> {
    let r = a.ring();
    let j = r.ideal(j.generator())?;
    let reason = if !r.is_odd() {
        Some("the characteristic is even".to_string())
    } else if !a.is_pure() {
        Some("the S-ring is not pure".to_string())
    } else if !r.maximal_ideals().into_iter().all(|i| a.is_a_ideal(i)) {
        Some("some maximal ideal is not an A-ideal".to_string())
    } else if !a.is_a_ideal(j) {
        Some(format!("{j} is not an A-ideal"))
    } else if !is_admissible_ideal(r, j) {
        Some(format!("{j} is not contained in every maximal ideal"))
    } else {
        None
    };
    if reason.is_some() {
        return Ok(QuotientPurityReport {
            applicable: false,
            reason,
            ideal: j,
            quotient_pure: None,
            ok: true,
        });
    }
    let pure = a.quotient(j)?.is_pure();
    Ok(QuotientPurityReport {
        applicable: true,
        reason: None,
        ideal: j,
        quotient_pure: Some(pure),
        ok: pure,
    })
}
