//! Bounded enumeration of CY3 candidates in weighted P2xP2 format, grouped
//! by Hilbert series.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::format::{
    build_with_numerator, format_numerator, weight_matrix, CY3Candidate, CandidateJson,
    FormatWeights,
};
use crate::stratum::{analyze_strata, StrataReport};

/// Which candidates survive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    /// Keep every numerically valid candidate.
    None,
    /// Keep candidates whose generic member is quasismooth with isolated
    /// canonical orbifold points (see [`analyze_strata`]).
    IsolatedOrbifold,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_weight_sum: u32,
    pub max_order_for_dedupe: usize,
    pub filter: Filter,
}

impl SearchConfig {
    pub fn new(max_weight_sum: u32) -> Self {
        SearchConfig {
            max_weight_sum,
            max_order_for_dedupe: 40,
            filter: Filter::IsolatedOrbifold,
        }
    }

    pub fn unfiltered(max_weight_sum: u32) -> Self {
        SearchConfig {
            filter: Filter::None,
            ..SearchConfig::new(max_weight_sum)
        }
    }
}

/// `(numerator coefficients, sorted ambient weights)`.
pub type Key = (Vec<i64>, Vec<u32>);

pub fn canonical_key(c: &CY3Candidate) -> Key {
    (c.numerator_ints(), c.ambient.clone())
}

#[derive(Clone, Debug)]
pub struct Group {
    pub key: Key,
    pub members: Vec<CY3Candidate>,
    /// Strata analysis of the first member; `None` when unfiltered.
    pub strata: Option<StrataReport>,
}

impl Group {
    pub fn id(&self) -> String {
        let s = format!("{:?}|{:?}", self.key.0, self.key.1);
        hex::encode(&Sha256::digest(s.as_bytes())[..8])
    }

    pub fn ambient(&self) -> &[u32] {
        &self.key.1
    }

    pub fn representative(&self) -> &CY3Candidate {
        &self.members[0]
    }

    /// Distinct minor-degree multisets among members.
    pub fn equation_degrees(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.members.iter().map(|c| c.equation_degrees.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn weight_sum(&self) -> u32 {
        self.key.1.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub config: SearchConfig,
    pub groups: Vec<Group>,
    /// Candidates enumerated before filtering.
    pub enumerated: usize,
}

/// Formats with ambient sum at most `bound`, one per transpose pair.
pub fn formats(bound: u32) -> Vec<FormatWeights> {
    let mut out = Vec::new();
    for a11 in 1..=bound / 6 {
        let rem = bound - 6 * a11;
        for r2 in 0..=rem / 4 {
            for c2 in 0..=(rem - 4 * r2) / 4 {
                let rem2 = rem - 4 * (r2 + c2);
                for r3 in 0..=rem2 / 2 {
                    for c3 in 0..=(rem2 - 2 * r3) / 2 {
                        if (r2, r3) <= (c2, c3) {
                            out.push(FormatWeights::new(a11, (r2, r3), (c2, c3)));
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Sorted multisets of size `k` drawn from the sorted multiset `items`.
fn sub_multisets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn go(items: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let mut i = start;
        while i < items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
            let x = items[i];
            while i < items.len() && items[i] == x {
                i += 1;
            }
        }
    }
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Nondecreasing `k`-tuples of positive integers summing to `total`.
fn partitions(total: u32, k: usize, min: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut x = min;
    while x * k as u32 <= total {
        for mut rest in partitions(total - x, k - 1, x) {
            rest.insert(0, x);
            out.push(rest);
        }
        x += 1;
    }
    out
}

/// `(cones, ci)` pairs over `fw`: `ci` has `k + 1` entries taken from the
/// matrix weights, all `>= 2`; the `k` cones make up the CY degree deficit and
/// never coincide with a ci degree.
pub fn cone_ci_choices(fw: &FormatWeights) -> Vec<(Vec<u32>, Vec<u32>)> {
    let wm = weight_matrix(fw);
    let entries = wm.entries();
    let trace = wm.trace();
    let mut out = Vec::new();
    for k in 0..=8 {
        for ci in sub_multisets(&entries, k + 1) {
            if ci[0] < 2 {
                continue;
            }
            let s: u32 = ci.iter().sum();
            if s < trace + k as u32 {
                continue;
            }
            for cones in partitions(s - trace, k, 1) {
                if cones.iter().any(|c| ci.contains(c)) {
                    continue;
                }
                out.push((cones, ci.clone()));
            }
        }
    }
    out
}

fn enumerate_format(fw: &FormatWeights, filter: Filter) -> (usize, Vec<(CY3Candidate, Option<StrataReport>)>) {
    let num = format_numerator(fw).expect("format numerator of a valid format");
    let choices = cone_ci_choices(fw);
    let n = choices.len();
    let out = choices
        .into_iter()
        .filter_map(|(cones, ci)| {
            let c = build_with_numerator(fw, &cones, &ci, &num).expect("enumerated candidate is valid");
            match filter {
                Filter::None => Some((c, None)),
                Filter::IsolatedOrbifold => {
                    let rep = analyze_strata(fw, &cones, &ci);
                    rep.admissible().then_some((c, Some(rep)))
                }
            }
        })
        .collect();
    (n, out)
}

pub fn enumerate(cfg: &SearchConfig) -> SearchResult {
    let fws = formats(cfg.max_weight_sum);
    let batches: Vec<_> = fws
        .par_iter()
        .map(|fw| enumerate_format(fw, cfg.filter))
        .collect();
    let mut enumerated = 0;
    let mut by_key: BTreeMap<Key, Vec<(CY3Candidate, Option<StrataReport>)>> = BTreeMap::new();
    for (n, batch) in batches {
        enumerated += n;
        for (c, rep) in batch {
            by_key.entry(canonical_key(&c)).or_default().push((c, rep));
        }
    }
    let mut groups: Vec<Group> = by_key
        .into_iter()
        .map(|(key, mut ms)| {
            ms.sort_by(|a, b| {
                (a.0.format, &a.0.cones, &a.0.ci_degrees).cmp(&(b.0.format, &b.0.cones, &b.0.ci_degrees))
            });
            let strata = ms[0].1.clone();
            Group {
                key,
                members: ms.into_iter().map(|(c, _)| c).collect(),
                strata,
            }
        })
        .collect();
    groups.sort_by(|a, b| {
        (a.weight_sum(), &a.key.1, &a.key.0).cmp(&(b.weight_sum(), &b.key.1, &b.key.0))
    });
    SearchResult {
        config: *cfg,
        groups,
        enumerated,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    pub id: String,
    pub ambient_weights: Vec<u32>,
    pub numerator_coeffs: Vec<i64>,
    pub equation_degrees: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strata: Option<StrataReport>,
    pub members: Vec<CandidateJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchJson {
    pub max_weight_sum: u32,
    pub filter: Filter,
    pub enumerated: usize,
    pub groups: Vec<GroupJson>,
}

impl SearchResult {
    pub fn to_json(&self) -> SearchJson {
        SearchJson {
            max_weight_sum: self.config.max_weight_sum,
            filter: self.config.filter,
            enumerated: self.enumerated,
            groups: self
                .groups
                .iter()
                .map(|g| GroupJson {
                    id: g.id(),
                    ambient_weights: g.key.1.clone(),
                    numerator_coeffs: g.key.0.clone(),
                    equation_degrees: g.equation_degrees(),
                    strata: g.strata.clone(),
                    members: g.members.iter().map(|c| c.to_json()).collect(),
                })
                .collect(),
        }
    }
}
