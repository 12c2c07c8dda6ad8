//! Published reference values, shipped as JSON next to the crate.

use std::collections::BTreeMap;
use std::path::Path;

use pxp::format::{BasketEntry, FormatWeights, OrbifoldPoint, RationalJson};
use pxp::unproj::{RefKind, TJFormat};
use serde::{Deserialize, Serialize};

/// Environment variable naming a replacement fixture file.
pub const FIXTURE_ENV: &str = "PXP_FIXTURES";

const BUILTIN: &str = include_str!("../fixtures/table1.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureSet {
    pub description: String,
    pub search: SearchFixture,
    pub rows: Vec<Fixture>,
    pub excluded: Vec<Excluded>,
    pub worked: Vec<WorkedCase>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchFixture {
    pub max_weight_sum: u32,
    pub hilbert_series_count: usize,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub row_id: u32,
    pub equation_degrees: Vec<u32>,
    pub ambient: Vec<u32>,
    pub basket: Vec<BasketEntry>,
    pub d3: RationalJson,
    pub h21: i64,
    pub h11_resolved: i64,
    pub families: usize,
    #[serde(default)]
    pub grdb_ids: Vec<u32>,
    #[serde(default)]
    pub notes: Vec<String>,
    pub provenance: String,
}

impl Fixture {
    pub fn key(&self) -> (Vec<u32>, Vec<u32>) {
        (self.equation_degrees.clone(), self.ambient.clone())
    }

    pub fn is_smooth(&self) -> bool {
        self.basket.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Excluded {
    pub row_id: u32,
    pub note: String,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub r: u32,
    pub e: [u32; 3],
}

impl PointJson {
    pub fn point(&self) -> OrbifoldPoint {
        OrbifoldPoint::new(self.r, self.e)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LowCodim {
    pub name: String,
    pub nodes: u64,
    pub grdb_id: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CiExpectation {
    pub pfaffian: usize,
    pub ci_degrees: Vec<i64>,
    pub ambient: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticExpectation {
    pub format: String,
    pub weight: u32,
}

/// A row whose projection and families are worked out in full.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WorkedCase {
    pub row_id: u32,
    pub format: FormatWeights,
    pub cones: Vec<u32>,
    pub ci: Vec<u32>,
    pub center: PointJson,
    /// 1-based `(row, column)` of the centre's coordinate in the weight matrix.
    pub cell: [usize; 2],
    #[serde(default)]
    pub b: Vec<RationalJson>,
    #[serde(default)]
    pub pf_degrees: Vec<i64>,
    pub plane: [u32; 3],
    #[serde(default)]
    pub zero_entry: Option<[usize; 2]>,
    #[serde(default)]
    pub ci_degeneration: Option<CiExpectation>,
    #[serde(default)]
    pub euler_reference: Option<i64>,
    #[serde(default)]
    pub reference_kind: Option<RefKind>,
    pub realizable: Vec<String>,
    pub low_codim: Vec<LowCodim>,
    #[serde(default)]
    pub nodes: BTreeMap<String, u64>,
    #[serde(default)]
    pub raw_nodes: BTreeMap<String, i64>,
    #[serde(default)]
    pub eulers: Vec<i64>,
    #[serde(default)]
    pub classes: Vec<Vec<String>>,
    #[serde(default)]
    pub not_type_one: Vec<PointJson>,
    #[serde(default)]
    pub diagnostic: Option<DiagnosticExpectation>,
    pub provenance: String,
}

impl WorkedCase {
    pub fn realizable_formats(&self) -> Result<Vec<TJFormat>, String> {
        self.realizable.iter().map(|s| s.parse()).collect()
    }

    pub fn cell0(&self) -> (usize, usize) {
        (self.cell[0] - 1, self.cell[1] - 1)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("cannot read fixture file {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed fixture data: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("duplicate fixture row {0}")]
    Duplicate(u32),
}

impl FixtureSet {
    pub fn parse(text: &str) -> Result<FixtureSet, FixtureError> {
        let set: FixtureSet = serde_json::from_str(text)?;
        let mut seen = std::collections::BTreeSet::new();
        for r in &set.rows {
            if !seen.insert(r.row_id) {
                return Err(FixtureError::Duplicate(r.row_id));
            }
        }
        Ok(set)
    }

    pub fn builtin() -> FixtureSet {
        FixtureSet::parse(BUILTIN).expect("bundled fixtures parse")
    }

    pub fn from_path(path: &Path) -> Result<FixtureSet, FixtureError> {
        let text = std::fs::read_to_string(path).map_err(|source| FixtureError::Io {
            path: path.display().to_string(),
            source,
        })?;
        FixtureSet::parse(&text)
    }

    /// The file named by [`FIXTURE_ENV`] if set, otherwise the bundled set.
    pub fn load() -> Result<FixtureSet, FixtureError> {
        match std::env::var_os(FIXTURE_ENV) {
            Some(p) => FixtureSet::from_path(Path::new(&p)),
            None => Ok(FixtureSet::builtin()),
        }
    }

    pub fn row(&self, id: u32) -> Option<&Fixture> {
        self.rows.iter().find(|r| r.row_id == id)
    }

    pub fn worked(&self, id: u32) -> Option<&WorkedCase> {
        self.worked.iter().find(|w| w.row_id == id)
    }

    pub fn excluded(&self, id: u32) -> Option<&Excluded> {
        self.excluded.iter().find(|w| w.row_id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses() {
        let f = FixtureSet::builtin();
        assert_eq!(f.rows.len(), 23);
        assert!(f.row(19).is_none());
        assert!(f.excluded(19).is_some());
        for w in &f.worked {
            assert!(f.row(w.row_id).is_some());
            w.realizable_formats().unwrap();
        }
    }

    #[test]
    fn duplicates_rejected() {
        let mut f = FixtureSet::builtin();
        f.rows.push(f.rows[0].clone());
        let text = serde_json::to_string(&f).unwrap();
        assert!(matches!(FixtureSet::parse(&text), Err(FixtureError::Duplicate(1))));
    }
}
