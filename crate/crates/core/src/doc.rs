//! JSON documents exchanged by the command-line tool.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cgring::CGRing;
use crate::classify::{Decomposition, DecompositionKind, FactorRole};
use crate::error::Result;
use crate::parse::{parse_ring_with_limit, parse_ring_with_moduli};
use crate::sring::{SRing, WreathCert};

/// An S-ring: ring spec, per-component moduli and the basic sets as sorted
/// index arrays ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SRingDoc {
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moduli: Option<Vec<Vec<u64>>>,
    pub classes: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_of: Option<String>,
}

pub fn ring_moduli(ring: &CGRing) -> Vec<Vec<u64>> {
    ring.components().iter().map(|g| g.modulus().to_vec()).collect()
}

impl SRingDoc {
    pub fn from_sring(a: &SRing) -> Self {
        Self {
            ring: a.ring().spec(),
            moduli: Some(ring_moduli(a.ring())),
            classes: a.classes().to_vec(),
            dual_of: None,
        }
    }

    pub fn ring(&self, limit: u64) -> Result<CGRing> {
        match &self.moduli {
            Some(m) => parse_ring_with_moduli(&self.ring, m, limit),
            None => parse_ring_with_limit(&self.ring, limit),
        }
    }

    /// The partition, not yet checked against the S-ring axioms.
    pub fn to_partition(&self, limit: u64) -> Result<SRing> {
        SRing::from_partition(Arc::new(self.ring(limit)?), self.classes.clone())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorDoc {
    pub primes: Vec<u64>,
    pub role: FactorRole,
    pub ring: String,
    pub classes: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionDoc {
    pub kind: DecompositionKind,
    pub factors: Vec<FactorDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wreath: Option<WreathCert>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&Decomposition> for DecompositionDoc {
    fn from(d: &Decomposition) -> Self {
        Self {
            kind: d.kind,
            factors: d
                .factors
                .iter()
                .map(|f| FactorDoc {
                    primes: f.primes.clone(),
                    role: f.role,
                    ring: f.sring.ring().spec(),
                    classes: f.sring.classes().to_vec(),
                    group: f.group.clone(),
                })
                .collect(),
            wreath: d.wreath,
            reason: d.reason.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::DEFAULT_MAX_ORDER;
    use crate::parse::parse_ring;

    #[test]
    fn sring_doc_round_trip() {
        let r = Arc::new(parse_ring("GR(4,2)xGR(9)").unwrap());
        let a = SRing::cyclotomic(r.clone(), &crate::subgroup::UnitSubgroup::units(&r));
        let doc = SRingDoc::from_sring(&a);
        let json = serde_json::to_string(&doc).unwrap();
        let back: SRingDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_partition(DEFAULT_MAX_ORDER).unwrap(), a);

        let bare: SRingDoc =
            serde_json::from_str(r#"{"ring":"GR(9)","classes":[[0],[3,6],[1,2,4,5,7,8]]}"#).unwrap();
        assert_eq!(bare.to_partition(DEFAULT_MAX_ORDER).unwrap().rank(), 3);
    }
}
