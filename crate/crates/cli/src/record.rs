use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use weylkit_core::Partition;

/// Everything a result depends on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordKey {
    pub p: u64,
    pub n: usize,
    pub r: u32,
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub target: String,
    pub max_degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
}

impl RecordKey {
    pub fn new(p: u64, lam: &Partition, mu: &Partition, target: &str, max_degree: usize) -> Self {
        RecordKey {
            p,
            n: lam.n(),
            r: lam.r(),
            lambda: lam.parts().to_vec(),
            mu: mu.parts().to_vec(),
            target: target.to_string(),
            max_degree,
            theorem: None,
            d: None,
        }
    }

    /// Hex sha256 of the key's JSON, used as the cache file name.
    pub fn digest(&self) -> String {
        let json = serde_json::to_string(self).expect("keys serialize");
        format!("{:x}", Sha256::digest(json.as_bytes()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub label: String,
    pub degrees: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Timing {
    pub wall_time_ms: u64,
}

/// One computed result. `timing` is excluded from comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub key: RecordKey,
    pub ext_dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<BTreeMap<String, bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shifted_key: Option<RecordKey>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shifted_dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex_isomorphism: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<Annotation>,
    pub engine_version: String,
    pub timing: Timing,
}

impl ResultRecord {
    pub fn new(key: RecordKey, ext_dims: Vec<usize>) -> Self {
        ResultRecord {
            key,
            ext_dims,
            complete: None,
            euler: None,
            hypotheses: None,
            verdict: None,
            shifted_key: None,
            shifted_dims: None,
            complex_isomorphism: None,
            annotations: Vec::new(),
            engine_version: weylkit_core::VERSION.to_string(),
            timing: Timing::default(),
        }
    }

    pub fn same_result(&self, other: &ResultRecord) -> bool {
        let mut a = self.clone();
        a.timing = other.timing;
        &a == other
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Symmetric-group readings of a record: `Hom_S(Δ(λ), Δ(μ))` is a Specht
/// Hom space when `p > 2` and `n ≥ r`, Ext groups agree in degrees up to
/// `p − 2` when `p > 3`, and `Ext^i(Δ(λ), Δ(r))` is symmetric-group
/// cohomology of a Specht module for `i ≤ 2p − 4`.
pub fn annotations(p: u64, lam: &Partition, mu: &Partition, max_degree: usize) -> Vec<Annotation> {
    let (n, r) = (lam.n(), lam.r() as usize);
    let mut out = Vec::new();
    if p <= 2 || n < r || r == 0 {
        return out;
    }
    let upto = |top: usize| (0..=top.min(max_degree)).collect::<Vec<_>>();
    out.push(Annotation {
        label: "specht_hom".into(),
        degrees: vec![0],
    });
    if p > 3 {
        out.push(Annotation {
            label: "specht_ext".into(),
            degrees: upto(p as usize - 2),
        });
    }
    if mu.part(0) as usize == r {
        out.push(Annotation {
            label: "symmetric_group_cohomology".into(),
            degrees: upto(2 * p as usize - 4),
        });
    }
    out
}
