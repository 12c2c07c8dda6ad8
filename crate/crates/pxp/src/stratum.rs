//! Orbifold points: ambient wellformedness, basket validation, type-I
//! centres, crepant h^{1,1} bookkeeping, and a numerical analysis of the torus
//! strata of a candidate used to keep only those with isolated canonical
//! orbifold points.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::{weight_matrix, BasketEntry, CY3Candidate, FormatWeights, OrbifoldPoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StratumError {
    #[error("no crepant h11 rule for 1/{r} points (only r = 3, 5, 7)")]
    UnsupportedR { r: u32 },
}

fn gcd_all(v: impl IntoIterator<Item = u32>) -> u32 {
    v.into_iter().fold(0, |a, b| a.gcd(&b))
}

/// Every 7 of the 8 weights are coprime.
pub fn wellformed_ambient(weights: &[u32]) -> bool {
    (0..weights.len()).all(|skip| {
        gcd_all(
            weights
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &w)| w),
        ) == 1
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Warn,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCheck {
    pub point: BasketEntry,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub points: Vec<PointCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.verdict != Verdict::Fail)
    }
}

/// Per-point congruence checks for a declared basket.
pub fn validate_basket(c: &CY3Candidate, declared: &[BasketEntry]) -> ValidationReport {
    let mut points = Vec::new();
    for b in declared {
        let mut notes = Vec::new();
        let mut verdict = Verdict::Pass;
        if b.r < 2 || b.e.iter().any(|&e| e == 0 || e >= b.r) {
            notes.push(format!("weights {:?} not in [1, {}]", b.e, b.r.saturating_sub(1)));
            verdict = Verdict::Fail;
        }
        if b.e.iter().sum::<u32>() % b.r.max(1) != 0 {
            notes.push(format!("e1+e2+e3 = {} not divisible by {}", b.e.iter().sum::<u32>(), b.r));
            verdict = Verdict::Fail;
        }
        if b.e.iter().any(|&e| e.gcd(&b.r) != 1) {
            notes.push("some weight not coprime to r: point is not isolated".into());
            verdict = Verdict::Fail;
        }
        let dividing = c.ambient.iter().filter(|&&a| a % b.r == 0).count();
        if dividing == 0 {
            notes.push(format!("no ambient weight divisible by {}", b.r));
            verdict = Verdict::Fail;
        } else if !c.ambient.contains(&b.r) {
            notes.push(format!("{} is not itself an ambient weight", b.r));
            if verdict == Verdict::Pass {
                verdict = Verdict::Warn;
            }
        }
        if dividing >= 4 {
            notes.push(format!(
                "stratum dimension risk: {dividing} ambient weights divisible by {}",
                b.r
            ));
            if verdict == Verdict::Pass {
                verdict = Verdict::Warn;
            }
        }
        points.push(PointCheck {
            point: b.clone(),
            verdict,
            notes,
        });
    }
    ValidationReport { points }
}

/// Weights `(a, b, c)` of the ambient, one copy of `r` removed, with
/// residues `e` mod `r` and `a + b + c = r`: the plane `P(a, b, c)` that a
/// type-I projection contracts.
pub fn type_one_plane(ambient: &[u32], p: &OrbifoldPoint) -> Option<[u32; 3]> {
    let mut rest = ambient.to_vec();
    let pos = rest.iter().position(|&a| a == p.r)?;
    rest.remove(pos);
    let mut want = p.e;
    want.sort_unstable();
    let n = rest.len();
    let mut best: Option<[u32; 3]> = None;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut w = [rest[i], rest[j], rest[k]];
                if w.iter().sum::<u32>() != p.r {
                    continue;
                }
                let mut res = w.map(|x| x % p.r);
                res.sort_unstable();
                if res == want {
                    w.sort_unstable();
                    if best.is_none_or(|b| w < b) {
                        best = Some(w);
                    }
                }
            }
        }
    }
    best
}

/// Basket points that are numerically type-I centres, marked as such.
pub fn type_one_centers(c: &CY3Candidate, basket: &[BasketEntry]) -> Vec<OrbifoldPoint> {
    basket
        .iter()
        .map(BasketEntry::point)
        .filter(|p| type_one_plane(&c.ambient, p).is_some())
        .map(|mut p| {
            p.is_type_one = true;
            p
        })
        .collect()
}

/// `h11` plus 1, 2, 3 for each point of index 3, 5, 7.
pub fn crepant_h11(basket: &[BasketEntry], h11: i64) -> Result<i64, StratumError> {
    let mut out = h11;
    for b in basket {
        let step = match b.r {
            3 => 1,
            5 => 2,
            7 => 3,
            r => return Err(StratumError::UnsupportedR { r }),
        };
        out += step * b.count as i64;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeRecord {
    pub h11_orbifold: i64,
    pub h21: i64,
    pub h11_resolved: i64,
    pub euler: i64,
}

impl HodgeRecord {
    /// Euler number of the orbifold from `h11 = 2` and a stored `h21`.
    pub fn new(basket: &[BasketEntry], h21: i64) -> Result<Self, StratumError> {
        let h11_orbifold = 2;
        Ok(HodgeRecord {
            h11_orbifold,
            h21,
            h11_resolved: crepant_h11(basket, h11_orbifold)?,
            euler: 2 * (h11_orbifold - h21),
        })
    }
}

// ---------------------------------------------------------------------------
// Torus strata of X = C^k F cut by generic forms.
//
// A point of the big ambient (9 Segre coordinates x_ij = s_i t_j and k cone
// coordinates) has support R x C (a rectangle: rank one) plus a cone subset K.
// On that torus a generic form of degree d restricts to a Laurent polynomial
// whose monomials are the characters (alpha, beta, gamma), |alpha| = |beta|.
// ---------------------------------------------------------------------------

/// Why a candidate was rejected by [`analyze_strata`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Defect {
    /// X meets the locus where every Segre coordinate vanishes.
    VertexMeetsX { stratum: String },
    /// Some forms vanishing on a stratum have no independent linear terms.
    NotQuasismooth { stratum: String, index: u32 },
    /// A positive-dimensional locus of index > 1.
    NonIsolated { stratum: String, index: u32, dim: usize },
    /// Local weights not of the form 1/r(a, b, c), gcd = 1, a + b + c = 0 mod r.
    BadLocalType { stratum: String, index: u32, weights: Vec<u32> },
    AmbientNotWellformed,
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::VertexMeetsX { stratum } => write!(f, "X meets the cone vertex on {stratum}"),
            Defect::NotQuasismooth { stratum, index } => {
                write!(f, "not quasismooth on {stratum} (index {index})")
            }
            Defect::NonIsolated { stratum, index, dim } => {
                write!(f, "{dim}-dimensional locus of index {index} on {stratum}")
            }
            Defect::BadLocalType {
                stratum,
                index,
                weights,
            } => write!(f, "local weights {weights:?} mod {index} on {stratum}"),
            Defect::AmbientNotWellformed => write!(f, "ambient not wellformed"),
        }
    }
}

/// A zero-dimensional stratum of index > 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumPoint {
    pub point: OrbifoldPoint,
    pub stratum: String,
    /// Number of forms cutting the stratum down to points; 0 means the
    /// stratum is a single coordinate point.
    pub cutting_forms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataReport {
    pub defect: Option<Defect>,
    pub points: Vec<StratumPoint>,
}

impl StrataReport {
    pub fn admissible(&self) -> bool {
        self.defect.is_none()
    }

    /// Orbifold types found, each with the number of strata realizing it.
    pub fn types(&self) -> BTreeMap<OrbifoldPoint, usize> {
        let mut m = BTreeMap::new();
        for p in &self.points {
            *m.entry(p.point.clone()).or_insert(0) += 1;
        }
        m
    }
}

struct Torus<'a> {
    u: [u32; 3],
    v: [u32; 3],
    cones: &'a [u32],
    rows: Vec<usize>,
    cols: Vec<usize>,
    ks: Vec<usize>,
}

impl Torus<'_> {
    fn label(&self) -> String {
        let r: Vec<String> = self.rows.iter().map(|i| (i + 1).to_string()).collect();
        let c: Vec<String> = self.cols.iter().map(|i| (i + 1).to_string()).collect();
        let k: Vec<String> = self.ks.iter().map(|i| (i + 1).to_string()).collect();
        format!("rows{{{}}} x cols{{{}}} + cones{{{}}}", r.join(","), c.join(","), k.join(","))
    }

    fn dim(&self) -> usize {
        let seg = if self.rows.is_empty() {
            0
        } else {
            self.rows.len() + self.cols.len() - 1
        };
        seg + self.ks.len()
    }

    fn weights(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for &i in &self.rows {
            for &j in &self.cols {
                w.push(self.u[i] + self.v[j]);
            }
        }
        w.extend(self.ks.iter().map(|&k| self.cones[k]));
        w
    }

    /// Characters of degree `d`, at most `cap` of them.
    fn characters(&self, d: u32, cap: usize) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut gamma = vec![0u32; self.ks.len()];
        self.cone_part(d, 0, &mut gamma, cap, &mut out);
        out
    }

    fn cone_part(&self, rem: u32, idx: usize, gamma: &mut Vec<u32>, cap: usize, out: &mut Vec<Vec<i64>>) {
        if out.len() >= cap {
            return;
        }
        if idx == self.ks.len() {
            self.segre_part(rem, gamma, cap, out);
            return;
        }
        let w = self.cones[self.ks[idx]];
        let mut e = 0;
        while e * w <= rem {
            gamma[idx] = e;
            self.cone_part(rem - e * w, idx + 1, gamma, cap, out);
            e += 1;
        }
        gamma[idx] = 0;
    }

    fn segre_part(&self, rem: u32, gamma: &[u32], cap: usize, out: &mut Vec<Vec<i64>>) {
        if self.rows.is_empty() {
            if rem == 0 && out.len() < cap {
                out.push(gamma.iter().map(|&g| g as i64).collect());
            }
            return;
        }
        let minw = self.rows.iter().map(|&i| self.u[i]).min().unwrap()
            + self.cols.iter().map(|&j| self.v[j]).min().unwrap();
        // v >= a11 >= 1, so minw >= 1
        let mut m = 0;
        while m * minw <= rem {
            for a in compositions(m, self.rows.len()) {
                let su: u32 = a.iter().zip(&self.rows).map(|(x, &i)| x * self.u[i]).sum();
                if su > rem {
                    continue;
                }
                for b in compositions(m, self.cols.len()) {
                    let sv: u32 = b.iter().zip(&self.cols).map(|(x, &j)| x * self.v[j]).sum();
                    if su + sv == rem {
                        let mut ch: Vec<i64> = a.iter().map(|&x| x as i64).collect();
                        ch.extend(b.iter().map(|&x| x as i64));
                        ch.extend(gamma.iter().map(|&g| g as i64));
                        out.push(ch);
                        if out.len() >= cap {
                            return;
                        }
                    }
                }
            }
            m += 1;
        }
    }
}

fn compositions(m: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    if n == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for i in 0..=m {
        for mut rest in compositions(m - i, n - 1) {
            rest.insert(0, i);
            out.push(rest);
        }
    }
    out
}

/// Rank of an integer matrix by fraction-free elimination.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let ncol = m[0].len();
    let mut r = 0;
    for c in 0..ncol {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let g = a.gcd(&b);
                let (fa, fb) = (b / g, a / g);
                for j in 0..ncol {
                    m[i][j] = m[i][j] * fb - m[r][j] * fa;
                }
                let h = m[i].iter().fold(0i128, |acc, &x| acc.gcd(&x));
                if h > 1 {
                    m[i].iter_mut().for_each(|x| *x /= h);
                }
            }
        }
        r += 1;
    }
    r
}

/// Generic Laurent polynomials with these supports have a common zero on the
/// torus iff every subfamily spans enough directions.
fn generic_system_solvable(supports: &[Vec<Vec<i64>>]) -> bool {
    let diffs: Vec<Vec<Vec<i64>>> = supports
        .iter()
        .map(|s| {
            s[1..]
                .iter()
                .map(|c| c.iter().zip(&s[0]).map(|(x, y)| x - y).collect())
                .collect()
        })
        .collect();
    let n = supports.len();
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as usize;
        let vs: Vec<Vec<i64>> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .flat_map(|i| diffs[i].iter().cloned())
            .collect();
        if rank(&vs) < k {
            return false;
        }
    }
    true
}

/// Bipartite matching of every form to a distinct direction.
fn perfect_matching(adj: &[Vec<usize>]) -> bool {
    fn augment(b: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &x in &adj[b] {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            if owner[x].is_none() || augment(owner[x].unwrap(), adj, seen, owner) {
                owner[x] = Some(b);
                return true;
            }
        }
        false
    }
    let nx = adj.iter().flatten().copied().max().map_or(0, |m| m + 1);
    let mut owner = vec![None; nx];
    (0..adj.len()).all(|b| {
        let mut seen = vec![false; nx];
        augment(b, adj, &mut seen, &mut owner)
    })
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

/// Numerical singularity analysis of the candidate `C^k F cap (ci forms)`
/// with generic forms: checks the cone vertex, quasismoothness along every
/// torus stratum, and that strata of index > 1 are isolated points of type
/// `1/r(a, b, c)` with `a + b + c = 0 mod r` and each weight coprime to `r`.
pub fn analyze_strata(fw: &FormatWeights, cones: &[u32], ci: &[u32]) -> StrataReport {
    let wm = weight_matrix(fw);
    let (u, v) = (fw.u(), fw.v());
    let mut points = Vec::new();
    let fail = |d: Defect, points: Vec<StratumPoint>| StrataReport {
        defect: Some(d),
        points,
    };

    let mut ambient = wm.entries();
    for d in ci {
        if let Some(i) = ambient.iter().position(|a| a == d) {
            ambient.remove(i);
        }
    }
    ambient.extend_from_slice(cones);
    if !wellformed_ambient(&ambient) {
        return fail(Defect::AmbientNotWellformed, points);
    }

    for rows in subsets(3) {
        for cols in subsets(3) {
            if rows.is_empty() != cols.is_empty() {
                continue;
            }
            for ks in subsets(cones.len()) {
                if rows.is_empty() && ks.is_empty() {
                    continue;
                }
                let t = Torus {
                    u,
                    v,
                    cones,
                    rows: rows.clone(),
                    cols: cols.clone(),
                    ks,
                };
                let naff = t.dim();
                let mut a_forms = Vec::new();
                let mut b_forms = Vec::new();
                let mut empty = false;
                for &d in ci {
                    let ch = t.characters(d, usize::MAX);
                    match ch.len() {
                        0 => b_forms.push(d),
                        1 => {
                            // a single monomial never vanishes on the torus
                            empty = true;
                            break;
                        }
                        _ => a_forms.push(ch),
                    }
                }
                if empty || naff < 1 + a_forms.len() || !generic_system_solvable(&a_forms) {
                    continue;
                }
                let pdim = naff - 1 - a_forms.len();
                let g = gcd_all(t.weights());
                if t.rows.is_empty() {
                    return fail(Defect::VertexMeetsX { stratum: t.label() }, points);
                }
                // normal directions to the stratum inside C^k F, with their weights
                let mut dirs: Vec<Vec<u32>> = Vec::new();
                for l in 0..3 {
                    if !t.cols.contains(&l) {
                        dirs.push(t.rows.iter().map(|&i| wm.a[i][l]).collect());
                    }
                }
                for i in 0..3 {
                    if !t.rows.contains(&i) {
                        dirs.push(t.cols.iter().map(|&j| wm.a[i][j]).collect());
                    }
                }
                for (k, &w) in cones.iter().enumerate() {
                    if !t.ks.contains(&k) {
                        dirs.push(vec![w]);
                    }
                }
                let adj: Vec<Vec<usize>> = b_forms
                    .iter()
                    .map(|&d| {
                        (0..dirs.len())
                            .filter(|&x| {
                                dirs[x]
                                    .iter()
                                    .any(|&w| w <= d && !t.characters(d - w, 1).is_empty())
                            })
                            .collect()
                    })
                    .collect();
                if !perfect_matching(&adj) {
                    return fail(
                        Defect::NotQuasismooth {
                            stratum: t.label(),
                            index: g,
                        },
                        points,
                    );
                }
                if g > 1 {
                    if pdim > 0 {
                        return fail(
                            Defect::NonIsolated {
                                stratum: t.label(),
                                index: g,
                                dim: pdim,
                            },
                            points,
                        );
                    }
                    let mut local: Vec<u32> = dirs.iter().map(|ws| ws[0] % g).collect();
                    let mut ok = true;
                    for &d in &b_forms {
                        match local.iter().position(|&x| x == d % g) {
                            Some(i) => {
                                local.remove(i);
                            }
                            None => ok = false,
                        }
                    }
                    local.sort_unstable();
                    if !ok
                        || local.len() != 3
                        || local.iter().any(|&e| e.gcd(&g) != 1)
                        || local.iter().sum::<u32>() % g != 0
                    {
                        return fail(
                            Defect::BadLocalType {
                                stratum: t.label(),
                                index: g,
                                weights: local,
                            },
                            points,
                        );
                    }
                    points.push(StratumPoint {
                        point: OrbifoldPoint::new(g, [local[0], local[1], local[2]]),
                        stratum: t.label(),
                        cutting_forms: a_forms.len(),
                    });
                }
            }
        }
    }
    StrataReport {
        defect: None,
        points,
    }
}

/// [`analyze_strata`] for an assembled candidate.
pub fn candidate_strata(c: &CY3Candidate) -> StrataReport {
    analyze_strata(&c.format, &c.cones, &c.ci_degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::build_candidate;

    fn entry(r: u32, e: [u32; 3], count: u32) -> BasketEntry {
        BasketEntry { r, e, count }
    }

    fn row7() -> CY3Candidate {
        build_candidate(&FormatWeights::new(1, (0, 1), (1, 0)), &[1, 1, 1], &[2, 2, 2, 3]).unwrap()
    }

    fn row14() -> CY3Candidate {
        build_candidate(&FormatWeights::new(1, (0, 1), (1, 2)), &[1, 1], &[2, 4, 4]).unwrap()
    }

    fn row20() -> CY3Candidate {
        build_candidate(&FormatWeights::new(1, (0, 3), (0, 3)), &[1, 2], &[4, 4, 4]).unwrap()
    }

    #[test]
    fn wellformed_examples() {
        assert!(wellformed_ambient(&[1, 1, 1, 1, 1, 2, 2, 3]));
        assert!(!wellformed_ambient(&[2; 8]));
        assert!(wellformed_ambient(&[1, 1, 1, 2, 2, 3, 3, 5]));
        // seven weights sharing 2
        assert!(!wellformed_ambient(&[1, 2, 2, 2, 2, 2, 2, 2]));
    }

    #[test]
    fn basket_validation() {
        let c = row7();
        assert!(validate_basket(&c, &[entry(3, [1, 1, 1], 1)]).passed());
        let bad = validate_basket(&c, &[entry(3, [1, 1, 2], 1)]);
        assert!(!bad.passed());
        let c = row14();
        let rep = validate_basket(&c, &[entry(3, [2, 2, 2], 1), entry(5, [1, 1, 3], 1)]);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn type_one_examples() {
        let c = row7();
        let t = type_one_centers(&c, &[entry(3, [1, 1, 1], 1)]);
        assert_eq!(t.len(), 1);
        assert!(t[0].is_type_one);
        let c = row14();
        let t = type_one_centers(&c, &[entry(3, [2, 2, 2], 1), entry(5, [1, 1, 3], 1)]);
        assert_eq!(t.iter().map(|p| p.r).collect::<Vec<_>>(), vec![5]);
        let c = row20();
        let p = OrbifoldPoint::new(7, [1, 2, 4]);
        assert_eq!(type_one_plane(&c.ambient, &p), Some([1, 2, 4]));
    }

    #[test]
    fn crepant_examples() {
        assert_eq!(crepant_h11(&[entry(3, [1, 1, 1], 1)], 2), Ok(3));
        assert_eq!(crepant_h11(&[entry(3, [1, 1, 1], 6)], 2), Ok(8));
        assert_eq!(crepant_h11(&[], 2), Ok(2));
        assert_eq!(
            crepant_h11(&[entry(2, [1, 1, 0], 1)], 2),
            Err(StratumError::UnsupportedR { r: 2 })
        );
    }

    #[test]
    fn hodge_record() {
        let h = HodgeRecord::new(&[entry(3, [1, 1, 1], 1)], 62).unwrap();
        assert_eq!(h.euler, -120);
        assert_eq!(h.h11_resolved, 3);
    }

    #[test]
    fn rank_and_matching_helpers() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2, 0], vec![0, 1, 1], vec![1, 3, 1]]), 2);
        assert!(perfect_matching(&[vec![0, 1], vec![0]]));
        assert!(!perfect_matching(&[vec![0], vec![0]]));
    }

    #[test]
    fn strata_of_worked_rows() {
        let rep = candidate_strata(&row7());
        assert!(rep.admissible(), "{:?}", rep.defect);
        assert_eq!(rep.types().keys().cloned().collect::<Vec<_>>(), vec![OrbifoldPoint::new(3, [1, 1, 1])]);

        let rep = candidate_strata(&row14());
        assert!(rep.admissible(), "{:?}", rep.defect);
        let types: Vec<OrbifoldPoint> = rep.types().keys().cloned().collect();
        assert_eq!(types, vec![OrbifoldPoint::new(3, [2, 2, 2]), OrbifoldPoint::new(5, [1, 1, 3])]);

        let rep = candidate_strata(&row20());
        assert!(rep.admissible(), "{:?}", rep.defect);
    }

    #[test]
    fn one_half_curve_rejected() {
        // same format as row 20 but with the weight-7 entry cut: a curve of
        // index 2 through P(2,4,4,4)
        let rep = analyze_strata(&FormatWeights::new(1, (0, 3), (0, 3)), &[2], &[4, 7]);
        assert!(!rep.admissible());
    }
}
