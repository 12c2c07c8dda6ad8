//! Weighted P2xP2 format: weight matrices, the Segre-cone oracle, format
//! numerators, and CY3 candidates cut from cones over the format by weighted
//! complete intersections.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::qseries::{self, RationalForm, SeriesError, TruncSeries};
use crate::{Poly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("Calabi-Yau condition fails: sum of ci degrees {ci_sum} != trace + cones = {required}")]
    CYViolation { ci_sum: u32, required: u32 },
    #[error("degree {degree} cannot be eliminated against an available format weight")]
    NotEliminable { degree: u32 },
    #[error("ambient has {len} weights, expected 8")]
    WrongAmbientSize { len: usize },
    #[error("invalid weight matrix: {0}")]
    BadMatrix(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `(a11, r2, r3, c2, c3)`: `a_ij = a11 + (r2, r2 + r3 partial sums) + (c2, c2 + c3 partial sums)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FormatWeights {
    pub a11: u32,
    pub row_incs: (u32, u32),
    pub col_incs: (u32, u32),
}

impl FormatWeights {
    pub fn new(a11: u32, row_incs: (u32, u32), col_incs: (u32, u32)) -> Self {
        assert!(a11 >= 1, "a11 must be positive");
        FormatWeights {
            a11,
            row_incs,
            col_incs,
        }
    }

    /// `u` normalised with `u1 = 0`.
    pub fn u(&self) -> [u32; 3] {
        let (r2, r3) = self.row_incs;
        [0, r2, r2 + r3]
    }

    /// `v` normalised with `v1 = a11`.
    pub fn v(&self) -> [u32; 3] {
        let (c2, c3) = self.col_incs;
        [self.a11, self.a11 + c2, self.a11 + c2 + c3]
    }

    /// Swap rows and columns.
    pub fn transpose(&self) -> Self {
        FormatWeights {
            a11: self.a11,
            row_incs: self.col_incs,
            col_incs: self.row_incs,
        }
    }

    /// Sum of the ambient weights of any candidate over this format:
    /// `sum a_ij - trace`, which does not depend on cones.
    pub fn ambient_sum(&self) -> u32 {
        let (r2, r3) = self.row_incs;
        let (c2, c3) = self.col_incs;
        6 * self.a11 + 4 * (r2 + c2) + 2 * (r3 + c3)
    }
}

impl fmt::Display for FormatWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {},{} | {},{})",
            self.a11, self.row_incs.0, self.row_incs.1, self.col_incs.0, self.col_incs.1
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightMatrix {
    pub a: [[u32; 3]; 3],
}

impl WeightMatrix {
    /// Accepts any matrix with the additive rank-one shape
    /// `a_ij + a_kl = a_il + a_kj`.
    pub fn from_rows(a: [[u32; 3]; 3]) -> Result<Self, FormatError> {
        for i in 0..3 {
            for k in 0..3 {
                for j in 0..3 {
                    for l in 0..3 {
                        if a[i][j] + a[k][l] != a[i][l] + a[k][j] {
                            return Err(FormatError::BadMatrix(format!(
                                "a{}{} + a{}{} != a{}{} + a{}{}",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1,
                                i + 1,
                                l + 1,
                                k + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
        }
        if a.iter().flatten().any(|&x| x == 0) {
            return Err(FormatError::BadMatrix("zero weight".into()));
        }
        Ok(WeightMatrix { a })
    }

    pub fn entries(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.a.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn trace(&self) -> u32 {
        self.a[0][0] + self.a[1][1] + self.a[2][2]
    }
}

pub fn weight_matrix(fw: &FormatWeights) -> WeightMatrix {
    let (u, v) = (fw.u(), fw.v());
    let mut a = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            a[i][j] = u[i] + v[j];
        }
    }
    WeightMatrix { a }
}

/// Degrees of the nine 2x2 minors, sorted.
pub fn minor_degrees(wm: &WeightMatrix) -> Vec<u32> {
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut out = Vec::with_capacity(9);
    for &(i, k) in &pairs {
        for &(j, l) in &pairs {
            out.push(wm.a[i][j] + wm.a[k][l]);
        }
    }
    out.sort_unstable();
    out
}

/// Number of `alpha` in N^3 with `|alpha| = m`, tabulated by `w . alpha`,
/// restricted to degrees `<= max`.
fn level_counts(w: [u32; 3], m: u32, max: u32) -> Vec<u64> {
    let mut out = vec![0u64; max as usize + 1];
    for i in 0..=m {
        for j in 0..=m - i {
            let k = m - i - j;
            let d = i as u64 * w[0] as u64 + j as u64 * w[1] as u64 + k as u64 * w[2] as u64;
            if d <= max as u64 {
                out[d as usize] += 1;
            }
        }
    }
    out
}

/// Hilbert function of the weighted Segre cone by direct count of bidegree
/// `(m, m)` monomials `s^alpha t^beta` of weighted degree `u.alpha + v.beta`.
pub fn segre_oracle(fw: &FormatWeights, order: usize) -> TruncSeries<Rational> {
    let (u, v) = (fw.u(), fw.v());
    let order32 = order as u32;
    let mut counts = vec![0u64; order + 1];
    // v1 = a11 >= 1 and u1 = 0, so level m starts in degree >= m * a11
    let mut m = 0u32;
    while m * fw.a11 <= order32 {
        let cu = level_counts(u, m, order32);
        let cv = level_counts(v, m, order32);
        for (du, &x) in cu.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (dv, &y) in cv.iter().enumerate().take(order + 1 - du) {
                counts[du + dv] += x * y;
            }
        }
        m += 1;
    }
    TruncSeries::new(counts.into_iter().map(|c| Rational::from_integer(c.into())).collect())
}

/// Socle degree of the format numerator: `2 sum a_ij / 3`.
pub fn format_socle(wm: &WeightMatrix) -> usize {
    let s: u32 = wm.a.iter().flatten().sum();
    debug_assert_eq!(s % 3, 0);
    (2 * s / 3) as usize
}

/// Numerator of the Segre cone's Hilbert series over `prod (1 - t^a_ij)`,
/// recovered from the oracle. Checked to be palindromic.
pub fn format_numerator(fw: &FormatWeights) -> Result<Poly, FormatError> {
    let wm = weight_matrix(fw);
    let bound = format_socle(&wm);
    let s = segre_oracle(fw, bound + qseries::STABILIZATION_MARGIN);
    let p = qseries::recover_numerator(&s, &wm.entries(), bound)?;
    if !qseries::palindrome_check(&p, bound) {
        return Err(FormatError::BadMatrix(format!(
            "format numerator {p} is not palindromic with socle {bound}"
        )));
    }
    Ok(p)
}

/// Cyclic quotient point `1/r(e1, e2, e3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbifoldPoint {
    pub r: u32,
    pub e: [u32; 3],
    #[serde(default)]
    pub is_type_one: bool,
}

impl OrbifoldPoint {
    pub fn new(r: u32, mut e: [u32; 3]) -> Self {
        e.sort_unstable();
        OrbifoldPoint {
            r,
            e,
            is_type_one: false,
        }
    }
}

impl fmt::Display for OrbifoldPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}({},{},{})", self.r, self.e[0], self.e[1], self.e[2])
    }
}

/// Basket entry with multiplicity, as it appears in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasketEntry {
    pub r: u32,
    pub e: [u32; 3],
    pub count: u32,
}

impl BasketEntry {
    pub fn point(&self) -> OrbifoldPoint {
        OrbifoldPoint::new(self.r, self.e)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CY3Candidate {
    pub format: FormatWeights,
    pub cones: Vec<u32>,
    pub ci_degrees: Vec<u32>,
    pub ambient: Vec<u32>,
    pub equation_degrees: Vec<u32>,
    pub hilbert: RationalForm<Rational>,
    pub d3: Rational,
    pub basket: Vec<BasketEntry>,
    pub metadata: BTreeMap<String, serde_json::Value>,
}

fn remove_one(v: &mut Vec<u32>, x: u32) -> bool {
    match v.iter().position(|&y| y == x) {
        Some(i) => {
            v.remove(i);
            true
        }
        None => false,
    }
}

/// Cut the cone `C^k F` over the format by forms of degrees `ci`, each one
/// eliminating a matrix entry of equal weight.
pub fn build_candidate(
    fw: &FormatWeights,
    cones: &[u32],
    ci: &[u32],
) -> Result<CY3Candidate, FormatError> {
    let numerator = format_numerator(fw)?;
    build_with_numerator(fw, cones, ci, &numerator)
}

/// As [`build_candidate`] with the format numerator supplied by the caller.
pub fn build_with_numerator(
    fw: &FormatWeights,
    cones: &[u32],
    ci: &[u32],
    format_num: &Poly,
) -> Result<CY3Candidate, FormatError> {
    let wm = weight_matrix(fw);
    let mut cones = cones.to_vec();
    cones.sort_unstable();
    let mut ci = ci.to_vec();
    ci.sort_unstable();

    let ci_sum: u32 = ci.iter().sum();
    let required = wm.trace() + cones.iter().sum::<u32>();
    if ci_sum != required {
        return Err(FormatError::CYViolation { ci_sum, required });
    }
    let len = 9 + cones.len();
    if len < ci.len() || len - ci.len() != 8 {
        return Err(FormatError::WrongAmbientSize {
            len: len.saturating_sub(ci.len()),
        });
    }
    let mut remaining = wm.entries();
    for &d in &ci {
        if d < 2 || !remove_one(&mut remaining, d) {
            return Err(FormatError::NotEliminable { degree: d });
        }
    }
    // Hilbert series of the cut: N_F prod(1 - t^d) / prod(1 - t^a_ij) prod(1 - t^c).
    // Each (1 - t^d) cancels the factor of the entry it eliminated.
    let mut ambient = remaining;
    ambient.extend_from_slice(&cones);
    ambient.sort_unstable();
    let hilbert = RationalForm::new(format_num.clone(), ambient.clone());
    let d3 = qseries::degree_d3(&hilbert)?;
    Ok(CY3Candidate {
        format: *fw,
        cones,
        ci_degrees: ci,
        ambient,
        equation_degrees: minor_degrees(&wm),
        hilbert,
        d3,
        basket: Vec::new(),
        metadata: BTreeMap::new(),
    })
}

impl CY3Candidate {
    pub fn weight_matrix(&self) -> WeightMatrix {
        weight_matrix(&self.format)
    }

    pub fn numerator(&self) -> &Poly {
        &self.hilbert.numerator
    }

    pub fn socle(&self) -> usize {
        self.ambient.iter().sum::<u32>() as usize
    }

    /// Integer numerator coefficients, padded to the socle.
    pub fn numerator_ints(&self) -> Vec<i64> {
        let n = self.socle();
        (0..=n)
            .map(|k| {
                let c = self.hilbert.numerator.coeff(k);
                assert!(c.is_integer(), "Hilbert numerators are integral");
                i64::try_from(c.to_integer()).expect("numerator coefficient fits i64")
            })
            .collect()
    }

    /// Stable identifier: hash of the defining data.
    pub fn id(&self) -> String {
        let f = &self.format;
        let key = format!(
            "pxp:{}:{},{}:{},{}|cones:{:?}|ci:{:?}",
            f.a11, f.row_incs.0, f.row_incs.1, f.col_incs.0, f.col_incs.1, self.cones, self.ci_degrees
        );
        let h = Sha256::digest(key.as_bytes());
        hex::encode(&h[..8])
    }

    /// `X_{degrees} in P(weights)` with exponent notation.
    pub fn embedding_string(&self) -> String {
        format!(
            "X_{{{}}} in P({})",
            exp_notation(&self.equation_degrees),
            exp_notation(&self.ambient)
        )
    }

    pub fn to_json(&self) -> CandidateJson {
        CandidateJson {
            id: self.id(),
            a11: self.format.a11,
            row_incs: [self.format.row_incs.0, self.format.row_incs.1],
            col_incs: [self.format.col_incs.0, self.format.col_incs.1],
            cones: self.cones.clone(),
            ci_degrees: self.ci_degrees.clone(),
            ambient_weights: self.ambient.clone(),
            equation_degrees: self.equation_degrees.clone(),
            numerator_coeffs: self.numerator_ints(),
            d3: RationalJson::from(&self.d3),
            basket: self.basket.clone(),
            metadata: self.metadata.clone(),
        }
    }

    /// Rebuilds from JSON, recomputing every derived field and rejecting
    /// inconsistent stored values.
    pub fn from_json(j: &CandidateJson) -> Result<CY3Candidate, FormatError> {
        let fw = FormatWeights::new(
            j.a11,
            (j.row_incs[0], j.row_incs[1]),
            (j.col_incs[0], j.col_incs[1]),
        );
        let mut c = build_candidate(&fw, &j.cones, &j.ci_degrees)?;
        if c.ambient != sorted(&j.ambient_weights) || c.d3 != j.d3.to_rational() {
            return Err(FormatError::BadMatrix(format!(
                "stored data for {} disagrees with recomputation",
                j.id
            )));
        }
        c.basket = j.basket.clone();
        c.metadata = j.metadata.clone();
        Ok(c)
    }
}

fn sorted(v: &[u32]) -> Vec<u32> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// `[1,1,1,2,3,3]` renders as `1^3,2,3^2`.
pub fn exp_notation(v: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(v[i].to_string());
        } else {
            parts.push(format!("{}^{}", v[i], j - i));
        }
        i = j;
    }
    parts.join(",")
}

/// Exact rational for JSON: `{"num": n, "den": d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: i64,
    pub den: i64,
}

impl From<&Rational> for RationalJson {
    fn from(q: &Rational) -> Self {
        RationalJson {
            num: i64::try_from(q.numer().clone()).expect("numerator fits i64"),
            den: i64::try_from(q.denom().clone()).expect("denominator fits i64"),
        }
    }
}

impl RationalJson {
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.num.into(), self.den.into())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateJson {
    pub id: String,
    pub a11: u32,
    pub row_incs: [u32; 2],
    pub col_incs: [u32; 2],
    pub cones: Vec<u32>,
    pub ci_degrees: Vec<u32>,
    pub ambient_weights: Vec<u32>,
    pub equation_degrees: Vec<u32>,
    pub numerator_coeffs: Vec<i64>,
    pub d3: RationalJson,
    #[serde(default)]
    pub basket: Vec<BasketEntry>,
    #[serde(default)]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

/// One matrix entry in an equation template.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TemplateEntry {
    Coordinate { degree: u32, name: String },
    Form { degree: u32, name: String },
}

impl TemplateEntry {
    pub fn degree(&self) -> u32 {
        match self {
            TemplateEntry::Coordinate { degree, .. } | TemplateEntry::Form { degree, .. } => *degree,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            TemplateEntry::Coordinate { name, .. } | TemplateEntry::Form { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationTemplate {
    pub matrix: Vec<Vec<TemplateEntry>>,
    pub cone_coordinates: Vec<TemplateEntry>,
    pub minor_degrees: Vec<u32>,
    /// Degrees where the choice of which entries stay coordinates was arbitrary.
    pub ties: Vec<u32>,
}

/// Symbolic 3x3 matrix: entries whose weight survives in the ambient are
/// coordinates `x1, x2, ...`, the rest generic forms `F1_d, F2_d, ...`.
pub fn equation_template(c: &CY3Candidate) -> EquationTemplate {
    let wm = c.weight_matrix();
    let mut avail: BTreeMap<u32, usize> = BTreeMap::new();
    for w in wm.entries() {
        *avail.entry(w).or_default() += 1;
    }
    for d in &c.ci_degrees {
        *avail.get_mut(d).expect("ci degree is a matrix weight") -= 1;
    }
    let mut ties = Vec::new();
    let mut positions: BTreeMap<u32, usize> = BTreeMap::new();
    for w in wm.entries() {
        *positions.entry(w).or_default() += 1;
    }
    for (&d, &n) in &avail {
        if n > 0 && n < positions[&d] {
            ties.push(d);
        }
    }
    let (mut nx, mut nf) = (0, 0);
    let mut matrix = Vec::new();
    for row in &wm.a {
        let mut out = Vec::new();
        for &d in row {
            let slot = avail.get_mut(&d).unwrap();
            if *slot > 0 {
                *slot -= 1;
                nx += 1;
                out.push(TemplateEntry::Coordinate {
                    degree: d,
                    name: format!("x{nx}"),
                });
            } else {
                nf += 1;
                out.push(TemplateEntry::Form {
                    degree: d,
                    name: format!("F{nf}_{d}"),
                });
            }
        }
        matrix.push(out);
    }
    let cone_coordinates = c
        .cones
        .iter()
        .enumerate()
        .map(|(i, &d)| TemplateEntry::Coordinate {
            degree: d,
            name: format!("w{}", i + 1),
        })
        .collect();
    EquationTemplate {
        matrix,
        cone_coordinates,
        minor_degrees: c.equation_degrees.clone(),
        ties,
    }
}

impl fmt::Display for EquationTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|e| format!("{:>6}", e.name())).collect();
            writeln!(f, "  ( {} )", cells.join(" "))?;
        }
        if !self.cone_coordinates.is_empty() {
            let cs: Vec<String> = self
                .cone_coordinates
                .iter()
                .map(|e| format!("{}[{}]", e.name(), e.degree()))
                .collect();
            writeln!(f, "  cone coordinates: {}", cs.join(", "))?;
        }
        write!(f, "  2x2 minors of degrees {}", exp_notation(&self.minor_degrees))?;
        if !self.ties.is_empty() {
            write!(f, "\n  arbitrary coordinate choice in degrees {:?}", self.ties)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(s: &TruncSeries<Rational>) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn weight_matrix_examples() {
        let fw = FormatWeights::new(1, (0, 1), (0, 1));
        assert_eq!(weight_matrix(&fw).a, [[1, 1, 2], [1, 1, 2], [2, 2, 3]]);
        let fw = FormatWeights::new(1, (1, 1), (1, 1));
        assert_eq!(weight_matrix(&fw).a, [[1, 2, 3], [2, 3, 4], [3, 4, 5]]);
        let fw = FormatWeights::new(1, (0, 3), (0, 3));
        assert_eq!(weight_matrix(&fw).a, [[1, 1, 4], [1, 1, 4], [4, 4, 7]]);
    }

    #[test]
    fn minor_degree_examples() {
        let wm = WeightMatrix::from_rows([[1; 3]; 3]).unwrap();
        assert_eq!(minor_degrees(&wm), vec![2; 9]);
        let wm = WeightMatrix::from_rows([[1, 1, 2], [2, 2, 3], [2, 2, 3]]).unwrap();
        assert_eq!(minor_degrees(&wm), vec![3, 3, 4, 4, 4, 4, 4, 5, 5]);
        let wm = WeightMatrix::from_rows([[1, 2, 3], [2, 3, 4], [3, 4, 5]]).unwrap();
        let mut want = vec![4, 5, 6, 5, 6, 7, 6, 7, 8];
        want.sort_unstable();
        assert_eq!(minor_degrees(&wm), want);
    }

    #[test]
    fn non_additive_matrix_rejected() {
        assert!(WeightMatrix::from_rows([[1, 1, 1], [1, 1, 1], [1, 1, 2]]).is_err());
    }

    #[test]
    fn segre_oracle_examples() {
        let straight = FormatWeights::new(1, (0, 0), (0, 0));
        assert_eq!(ints(&segre_oracle(&straight, 3)), vec![1, 9, 36, 100]);
        // weights ((1,1,2),(2,2,3),(2,2,3)): two entries of weight 1; in degree 2
        // five entries of weight 2 and three products of x11, x12
        let fw = FormatWeights::new(1, (1, 0), (0, 1));
        assert_eq!(ints(&segre_oracle(&fw, 2)), vec![1, 2, 8]);
        assert_eq!(ints(&segre_oracle(&FormatWeights::new(2, (3, 1), (0, 5)), 0)), vec![1]);
    }

    #[test]
    fn straight_segre_numerator() {
        let p = format_numerator(&FormatWeights::new(1, (0, 0), (0, 0))).unwrap();
        assert_eq!(p, Poly::from_ints(&[1, 0, -9, 16, -9, 0, 1]));
    }

    #[test]
    fn row7_candidate() {
        let fw = FormatWeights::new(1, (0, 1), (1, 0));
        let c = build_candidate(&fw, &[1, 1, 1], &[2, 2, 2, 3]).unwrap();
        assert_eq!(c.ambient, vec![1, 1, 1, 1, 1, 2, 2, 3]);
        assert_eq!(c.equation_degrees, vec![3, 3, 4, 4, 4, 4, 4, 5, 5]);
        assert_eq!(c.d3, q(22, 3));
        assert_eq!(
            c.numerator_ints(),
            vec![1, 0, 0, -2, -5, 2, 8, 2, -5, -2, 0, 0, 1]
        );
    }

    #[test]
    fn build_errors() {
        let fw = FormatWeights::new(1, (0, 1), (1, 0));
        assert!(matches!(
            build_candidate(&fw, &[1, 1, 1], &[2, 2, 2, 2]),
            Err(FormatError::CYViolation { .. })
        ));
        assert!(matches!(
            build_candidate(&fw, &[1, 1, 3], &[2, 2, 3, 3]),
            Err(FormatError::CYViolation { .. }) | Err(FormatError::NotEliminable { .. })
        ));
        // 6 is not a weight of this format
        assert!(matches!(
            build_candidate(&fw, &[1, 1, 4], &[2, 2, 2, 6]),
            Err(FormatError::NotEliminable { degree: 6 })
        ));
        assert!(matches!(
            build_candidate(&fw, &[1, 1], &[2, 2, 2, 2]),
            Err(FormatError::WrongAmbientSize { .. })
        ));
    }

    #[test]
    fn template_row7() {
        let fw = FormatWeights::new(1, (0, 1), (1, 0));
        let c = build_candidate(&fw, &[1, 1, 1], &[2, 2, 2, 3]).unwrap();
        let t = equation_template(&c);
        let mut forms: Vec<u32> = t
            .matrix
            .iter()
            .flatten()
            .filter(|e| matches!(e, TemplateEntry::Form { .. }))
            .map(|e| e.degree())
            .collect();
        forms.sort_unstable();
        assert_eq!(forms, vec![2, 2, 2, 3]);
        assert_eq!(t.cone_coordinates.len(), 3);
    }

    #[test]
    fn exp_strings() {
        assert_eq!(exp_notation(&[1, 1, 1, 1, 1, 2, 2, 3]), "1^5,2^2,3");
    }

    #[test]
    fn json_round_trip() {
        let fw = FormatWeights::new(1, (1, 1), (1, 1));
        let c = build_candidate(&fw, &[1, 1], &[2, 4, 5]).unwrap();
        let j = c.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back: CandidateJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back, j);
        assert_eq!(CY3Candidate::from_json(&back).unwrap(), c);
        assert_eq!(j.d3, RationalJson { num: 2, den: 1 });
    }
}
