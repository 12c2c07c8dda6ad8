//! Gorenstein projection from a type-I centre to a 5x5 Pfaffian model, and
//! the Tom/Jerry bookkeeping on it: node counts, Euler characteristics,
//! equivalence classes and a higher-embedding-dimension diagnostic.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::{exp_notation, BasketEntry, CY3Candidate, OrbifoldPoint, RationalJson};
use crate::qseries::h2_coefficient;
use crate::stratum::{crepant_h11, type_one_plane};
use crate::{int, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnprojError {
    #[error("{point} is not a numerical type-I centre of this candidate")]
    NotTypeOne { point: String },
    #[error("inconsistent grading: {0}")]
    InconsistentGrading(String),
    #[error("no Pfaffian eliminates a coordinate for the zero entry m{i}{j}")]
    NoElimination { i: usize, j: usize },
    #[error("node count {raw} is not divisible by the plane weight product {divisor}")]
    NonIntegral { raw: String, divisor: u32 },
    #[error("negative node count {0}")]
    Negative(String),
    #[error("bad projection data: {0}")]
    BadCenter(String),
}

/// Tom or Jerry unprojection format, indices 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TJFormat {
    Tom(usize),
    Jerry(usize, usize),
}

impl TJFormat {
    pub fn all() -> Vec<TJFormat> {
        let mut v: Vec<TJFormat> = (1..=5).map(TJFormat::Tom).collect();
        for i in 1..=5 {
            for j in i + 1..=5 {
                v.push(TJFormat::Jerry(i, j));
            }
        }
        v
    }

    pub fn valid(&self) -> bool {
        match *self {
            TJFormat::Tom(i) => (1..=5).contains(&i),
            TJFormat::Jerry(i, j) => 1 <= i && i < j && j <= 5,
        }
    }

    fn permuted(&self, p: &[usize; 5]) -> TJFormat {
        match *self {
            TJFormat::Tom(i) => TJFormat::Tom(p[i - 1] + 1),
            TJFormat::Jerry(i, j) => {
                let (a, b) = (p[i - 1] + 1, p[j - 1] + 1);
                TJFormat::Jerry(a.min(b), a.max(b))
            }
        }
    }

    /// Entries `m_kl` (0-based, k < l) that the format puts into the ideal of D.
    fn in_ideal(&self, k: usize, l: usize) -> bool {
        match *self {
            TJFormat::Tom(i) => k != i - 1 && l != i - 1,
            TJFormat::Jerry(i, j) => [i - 1, j - 1].iter().any(|&x| x == k || x == l),
        }
    }
}

impl fmt::Display for TJFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TJFormat::Tom(i) => write!(f, "Tom{i}"),
            TJFormat::Jerry(i, j) => write!(f, "Jer{i}{j}"),
        }
    }
}

impl std::str::FromStr for TJFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let digits = |t: &str| -> Vec<usize> {
            t.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect()
        };
        let lower = s.to_ascii_lowercase();
        let f = if let Some(rest) = lower.strip_prefix("tom") {
            match digits(rest)[..] {
                [i] => TJFormat::Tom(i),
                _ => return Err(format!("bad Tom format {s}")),
            }
        } else if let Some(rest) = lower.strip_prefix("jer").map(|r| r.trim_start_matches("ry")) {
            match digits(rest)[..] {
                [i, j] => TJFormat::Jerry(i.min(j), i.max(j)),
                _ => return Err(format!("bad Jerry format {s}")),
            }
        } else {
            return Err(format!("unknown format {s}"));
        };
        if f.valid() {
            Ok(f)
        } else {
            Err(format!("index out of range in {s}"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisor {
    /// `D = P(w1, w2, w3)`.
    pub plane_weights: [u32; 3],
    /// Degrees of the four coordinates cutting out D.
    pub generator_degrees: [u32; 4],
}

/// Graded 5x5 skew matrix with `m_ij = b_i + b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfaffianModel {
    pub b: [Rational; 5],
    pub ambient7: Vec<u32>,
    pub divisor: Divisor,
}

impl PfaffianModel {
    pub fn new(b: [Rational; 5], ambient7: Vec<u32>, divisor: Divisor) -> Result<Self, UnprojError> {
        for i in 0..5 {
            for j in i + 1..5 {
                if !(b[i].clone() + b[j].clone()).is_integer() {
                    return Err(UnprojError::InconsistentGrading(format!(
                        "m{}{} = {} is not an integer",
                        i + 1,
                        j + 1,
                        b[i].clone() + b[j].clone()
                    )));
                }
            }
        }
        Ok(PfaffianModel { b, ambient7, divisor })
    }

    fn sum_b(&self) -> Rational {
        self.b.iter().cloned().fold(Rational::zero(), |a, x| a + x)
    }

    /// Entry weight `m_ij`, 1-based.
    pub fn m(&self, i: usize, j: usize) -> i64 {
        to_i64(&(self.b[i - 1].clone() + self.b[j - 1].clone()))
    }

    /// `pf_k = sum b - b_k`, 1-based.
    pub fn pf(&self, k: usize) -> i64 {
        to_i64(&(self.sum_b() - self.b[k - 1].clone()))
    }

    pub fn pf_degrees(&self) -> [i64; 5] {
        [1, 2, 3, 4, 5].map(|k| self.pf(k))
    }

    pub fn adjunction(&self) -> i64 {
        to_i64(&(self.sum_b() * int(2)))
    }

    /// `sum b + b_i`: the syzygy degree through row `i`.
    pub fn sigma(&self, i: usize) -> i64 {
        to_i64(&(self.sum_b() + self.b[i - 1].clone()))
    }

    /// Upper-triangular entry weights, row by row.
    pub fn entry_rows(&self) -> Vec<Vec<i64>> {
        (1..=4)
            .map(|i| (i + 1..=5).map(|j| self.m(i, j)).collect())
            .collect()
    }
}

fn to_i64(q: &Rational) -> i64 {
    assert!(q.is_integer(), "{q} is not an integer");
    q.to_integer().to_i64().expect("degree fits i64")
}

impl fmt::Display for PfaffianModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
        writeln!(f, "b = ({})", b.join(", "))?;
        for (r, row) in self.entry_rows().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "  {}{}", "    ".repeat(r), cells.join(" "))?;
        }
        let mut pf = self.pf_degrees().to_vec();
        pf.sort_unstable();
        let pf: Vec<u32> = pf.iter().map(|&x| x.max(0) as u32).collect();
        writeln!(f, "Y_{{{}}} in P({})", exp_notation(&pf), exp_notation(&self.ambient7))?;
        write!(
            f,
            "D = P({}) cut out by coordinates of degrees {:?}",
            exp_notation(&self.divisor.plane_weights),
            self.divisor.generator_degrees
        )
    }
}

/// Solve `b_i + b_j = m_ij` over the given 1-based entries. The solution must
/// exist and be unique.
pub fn solve_b(known: &[((usize, usize), i64)]) -> Result<[Rational; 5], UnprojError> {
    // augmented rows [coeffs | rhs]
    let mut rows: Vec<[Rational; 6]> = Vec::new();
    for &((i, j), m) in known {
        if !(1..=5).contains(&i) || !(1..=5).contains(&j) || i == j {
            return Err(UnprojError::InconsistentGrading(format!("bad entry index m{i}{j}")));
        }
        let mut r: [Rational; 6] = std::array::from_fn(|_| Rational::zero());
        r[i - 1] = int(1);
        r[j - 1] = int(1);
        r[5] = int(m);
        rows.push(r);
    }
    let mut rank = 0;
    for c in 0..5 {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let piv = rows[rank][c].clone();
        for x in rows[rank].iter_mut() {
            *x = x.clone() / piv.clone();
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..6 {
                    let v = rows[rank][k].clone() * f.clone();
                    rows[i][k] = rows[i][k].clone() - v;
                }
            }
        }
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[5].is_zero()) {
        return Err(UnprojError::InconsistentGrading(
            "entries are not of the form b_i + b_j".into(),
        ));
    }
    if rank < 5 {
        return Err(UnprojError::InconsistentGrading(format!(
            "entries determine only {rank} of 5 grading parameters"
        )));
    }
    Ok(std::array::from_fn(|k| rows[k][5].clone()))
}

/// Project `c` from `center`, with the centre's coordinate at the 0-based
/// cell `z` of the weight matrix. With `(p, q) = z` and complements
/// `i1 < i2`, `j1 < j2`: row one is `(W[p][j1], W[p][j2], W[i1][q], W[i2][q])`,
/// and `b_2, b_3` belong to columns `j1, j2`, `b_4, b_5` to rows `i1, i2`, so
/// `m_24 = W[i1][j1]`, `m_25 = W[i2][j1]`, `m_34 = W[i1][j2]`, `m_35 = W[i2][j2]`.
pub fn project(
    c: &CY3Candidate,
    center: &OrbifoldPoint,
    z: (usize, usize),
) -> Result<PfaffianModel, UnprojError> {
    let plane = type_one_plane(&c.ambient, center).ok_or_else(|| UnprojError::NotTypeOne {
        point: center.to_string(),
    })?;
    let w = c.weight_matrix().a;
    let (p, q) = z;
    if p > 2 || q > 2 || w[p][q] != center.r {
        return Err(UnprojError::BadCenter(format!(
            "cell ({}, {}) does not carry weight {}",
            p + 1,
            q + 1,
            center.r
        )));
    }
    let rows: Vec<usize> = (0..3).filter(|&i| i != p).collect();
    let cols: Vec<usize> = (0..3).filter(|&j| j != q).collect();
    let (i1, i2, j1, j2) = (rows[0], rows[1], cols[0], cols[1]);
    let known = [
        ((1, 2), w[p][j1]),
        ((1, 3), w[p][j2]),
        ((1, 4), w[i1][q]),
        ((1, 5), w[i2][q]),
        ((2, 4), w[i1][j1]),
        ((2, 5), w[i2][j1]),
        ((3, 4), w[i1][j2]),
        ((3, 5), w[i2][j2]),
    ]
    .map(|(ij, m)| (ij, m as i64));
    let b = solve_b(&known)?;

    let mut ambient7 = c.ambient.clone();
    let pos = ambient7.iter().position(|&a| a == center.r).unwrap();
    ambient7.remove(pos);
    let mut gens = [w[i1][j1], w[i2][j1], w[i1][j2], w[i2][j2]];
    gens.sort_unstable();
    let mut rest = ambient7.clone();
    for g in gens {
        match rest.iter().position(|&a| a == g) {
            Some(i) => {
                rest.remove(i);
            }
            None => {
                return Err(UnprojError::BadCenter(format!(
                    "block weight {g} is not a coordinate weight of P({})",
                    exp_notation(&ambient7)
                )))
            }
        }
    }
    let plane_weights: [u32; 3] = [rest[0], rest[1], rest[2]];
    if plane_weights != plane {
        return Err(UnprojError::BadCenter(format!(
            "divisor P({}) differs from the type-I plane P({})",
            exp_notation(&plane_weights),
            exp_notation(&plane)
        )));
    }
    PfaffianModel::new(
        b,
        ambient7,
        Divisor {
            plane_weights,
            generator_degrees: gens,
        },
    )
}

/// First cell (row-major) from which [`project`] succeeds.
pub fn project_auto(c: &CY3Candidate, center: &OrbifoldPoint) -> Result<(PfaffianModel, (usize, usize)), UnprojError> {
    let w = c.weight_matrix().a;
    let mut last = UnprojError::BadCenter(format!("no cell of weight {}", center.r));
    for p in 0..3 {
        for q in 0..3 {
            if w[p][q] == center.r {
                match project(c, center, (p, q)) {
                    Ok(m) => return Ok((m, (p, q))),
                    Err(e @ UnprojError::NotTypeOne { .. }) => return Err(e),
                    Err(e) => last = e,
                }
            }
        }
    }
    Err(last)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ModelStatus {
    AllPositive,
    ZeroEntry { i: usize, j: usize },
    NegativeEntry { i: usize, j: usize },
}

/// A generic model with a non-positive entry weight cannot be quasismooth.
pub fn generic_model_check(m: &PfaffianModel) -> ModelStatus {
    let mut zero = None;
    for i in 1..=5 {
        for j in i + 1..=5 {
            let w = m.m(i, j);
            if w < 0 {
                return ModelStatus::NegativeEntry { i, j };
            }
            if w == 0 && zero.is_none() {
                zero = Some((i, j));
            }
        }
    }
    match zero {
        Some((i, j)) => ModelStatus::ZeroEntry { i, j },
        None => ModelStatus::AllPositive,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiOption {
    /// 1-based index of the eliminating Pfaffian.
    pub pfaffian: usize,
    pub degree: i64,
    /// Entry `m_kl` paired with the constant entry in that Pfaffian.
    pub paired_entry: (usize, usize),
    pub ci_degrees: Vec<i64>,
    pub ambient: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiReport {
    pub chosen: CiOption,
    pub options: Vec<CiOption>,
    /// More than one Pfaffian could do the elimination.
    pub ambiguous: bool,
}

/// With `m_ij` a nonzero constant, each Pfaffian `Pf_k` for `k` outside
/// `{i, j}` contains `m_ij m_ln` and so is linear in the entry `m_ln`. When
/// that entry is a coordinate, `Pf_k` eliminates it and the model is a
/// degenerate complete intersection of the other two.
pub fn ci_degeneration(m: &PfaffianModel, zero: (usize, usize)) -> Result<CiReport, UnprojError> {
    let (i, j) = (zero.0.min(zero.1), zero.0.max(zero.1));
    if m.m(i, j) != 0 {
        return Err(UnprojError::BadCenter(format!("m{i}{j} has weight {}, not 0", m.m(i, j))));
    }
    let comp: Vec<usize> = (1..=5).filter(|&k| k != i && k != j).collect();
    let mut options = Vec::new();
    for &k in &comp {
        let pair: Vec<usize> = comp.iter().copied().filter(|&x| x != k).collect();
        let (l, n) = (pair[0], pair[1]);
        let wt = m.m(l, n);
        if wt > 0 && m.ambient7.contains(&(wt as u32)) {
            let mut ambient = m.ambient7.clone();
            let pos = ambient.iter().position(|&a| a as i64 == wt).unwrap();
            ambient.remove(pos);
            let mut ci: Vec<i64> = comp.iter().filter(|&&x| x != k).map(|&x| m.pf(x)).collect();
            ci.sort_unstable();
            options.push(CiOption {
                pfaffian: k,
                degree: m.pf(k),
                paired_entry: (l, n),
                ci_degrees: ci,
                ambient,
            });
        }
    }
    let chosen = options
        .iter()
        .min_by_key(|o| (o.degree, o.pfaffian))
        .cloned()
        .ok_or(UnprojError::NoElimination { i, j })?;
    Ok(CiReport {
        ambiguous: options.len() > 1,
        chosen,
        options,
    })
}

fn permutations() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let mut p = [0, 1, 2, 3, 4];
    fn heap(k: usize, p: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
        if k == 1 {
            out.push(*p);
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }
    heap(5, &mut p, &mut out);
    out
}

/// Orbits of the 15 formats under index permutations fixing `b`.
pub fn tj_classes(m: &PfaffianModel) -> Vec<Vec<TJFormat>> {
    let sym: Vec<[usize; 5]> = permutations()
        .into_iter()
        .filter(|p| (0..5).all(|i| m.b[p[i]] == m.b[i]))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for f in TJFormat::all() {
        if seen.contains(&f) {
            continue;
        }
        let orbit: BTreeSet<TJFormat> = sym.iter().map(|p| f.permuted(p)).collect();
        seen.extend(orbit.iter().copied());
        out.push(orbit.into_iter().collect());
    }
    out
}

/// The `h^2` coefficient before dividing by the plane weights.
pub fn node_count_raw(m: &PfaffianModel, f: TJFormat) -> Rational {
    let d: Vec<Rational> = m.divisor.generator_degrees.iter().map(|&x| int(x as i64)).collect();
    let (mut numer, mut denom) = (d, Vec::new());
    match f {
        TJFormat::Tom(i) => {
            numer.push(int(m.sigma(i)));
            denom.extend((1..=5).filter(|&k| k != i).map(|k| int(m.pf(k))));
        }
        TJFormat::Jerry(i, j) => {
            numer.extend((1..=5).filter(|&l| l != i && l != j).map(|l| int(m.sigma(l))));
            denom.extend((1..=5).map(|k| int(m.pf(k))));
            denom.push(int(m.adjunction() - m.m(i, j)));
        }
    }
    h2_coefficient(&numer, &denom)
}

/// Expected number of nodes on D for the format, assuming it is nodal.
pub fn node_count(m: &PfaffianModel, f: TJFormat) -> Result<u64, UnprojError> {
    let raw = node_count_raw(m, f);
    let w: u32 = m.divisor.plane_weights.iter().product();
    let n = raw.clone() / int(w as i64);
    if !n.is_integer() {
        return Err(UnprojError::NonIntegral {
            raw: raw.to_string(),
            divisor: w,
        });
    }
    if n.is_negative() {
        return Err(UnprojError::Negative(n.to_string()));
    }
    Ok(n.to_integer().to_u64().expect("node count fits u64"))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum FamilyFormat {
    TomJerry(TJFormat),
    LowCodim(String),
}

impl fmt::Display for FamilyFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyFormat::TomJerry(t) => write!(f, "{t}"),
            FamilyFormat::LowCodim(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub format: FamilyFormat,
    pub nodes: u64,
    pub euler: i64,
    pub equivalence_class: Vec<TJFormat>,
}

/// What the reference Euler number belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RefKind {
    /// The reference is e(Y) of the generic Pfaffian model.
    GenericY,
    /// The reference is e(X) of a family whose projection has this many nodes.
    KnownFamily { nodes: u64 },
}

/// `e(Y)` recovered from the reference.
pub fn euler_of_y(e_reference: i64, kind: RefKind) -> i64 {
    match kind {
        RefKind::GenericY => e_reference,
        RefKind::KnownFamily { nodes } => e_reference - 2 * nodes as i64 + 2,
    }
}

/// `e(X) = e(Y) + 2N - 2` for each record.
pub fn euler_chain(e_reference: i64, kind: RefKind, records: &[(FamilyFormat, u64)]) -> Vec<FamilyRecord> {
    let ey = euler_of_y(e_reference, kind);
    records
        .iter()
        .map(|(f, n)| FamilyRecord {
            format: f.clone(),
            nodes: *n,
            euler: ey + 2 * *n as i64 - 2,
            equivalence_class: match f {
                FamilyFormat::TomJerry(t) => vec![*t],
                FamilyFormat::LowCodim(_) => vec![],
            },
        })
        .collect()
}

/// Coordinates of the ambient of Y: the four cutting out D, then the plane.
fn coordinates(m: &PfaffianModel) -> Vec<(u32, bool)> {
    let mut v: Vec<(u32, bool)> = m.divisor.generator_degrees.iter().map(|&d| (d, true)).collect();
    v.extend(m.divisor.plane_weights.iter().map(|&w| (w, false)));
    v
}

/// Coordinate points `P_w` with `wt w > 1` on Y where fewer than three
/// Pfaffians can contain a monomial `w^k x` (pure power times a linear
/// term), given which entries the format forces into the ideal of D.
pub fn higher_embedding_diagnostic(m: &PfaffianModel, f: TJFormat) -> Vec<String> {
    let coords = coordinates(m);
    let mut warnings = Vec::new();
    let mut done = BTreeSet::new();
    for (wi, &(a, w_gen)) in coords.iter().enumerate() {
        if a <= 1 || !done.insert((a, w_gen)) {
            continue;
        }
        let a = a as i64;
        let pure = |k: usize, l: usize| -> bool {
            let d = m.m(k, l);
            let ideal = f.in_ideal(k - 1, l - 1);
            d >= 0 && d % a == 0 && (!ideal || (w_gen && d > 0))
        };
        let linear = |k: usize, l: usize| -> bool {
            let d = m.m(k, l);
            let ideal = f.in_ideal(k - 1, l - 1);
            coords.iter().enumerate().any(|(xi, &(wx, x_gen))| {
                let r = d - wx as i64;
                xi != wi && r >= 0 && r % a == 0 && (!ideal || x_gen || (w_gen && r > 0))
            })
        };
        let mut has_pure = false;
        let mut n_linear = 0;
        for k in 1..=5 {
            let c: Vec<usize> = (1..=5).filter(|&x| x != k).collect();
            let pairings = [
                ((c[0], c[1]), (c[2], c[3])),
                ((c[0], c[2]), (c[1], c[3])),
                ((c[0], c[3]), (c[1], c[2])),
            ];
            if pairings.iter().any(|&(e, g)| pure(e.0, e.1) && pure(g.0, g.1)) {
                has_pure = true;
            }
            if pairings.iter().any(|&(e, g)| {
                (pure(e.0, e.1) && linear(g.0, g.1)) || (linear(e.0, e.1) && pure(g.0, g.1))
            }) {
                n_linear += 1;
            }
        }
        if !has_pure && n_linear < 3 {
            warnings.push(format!(
                "{f}: the weight-{a} coordinate point lies on Y and a pure power of it times a \
                 linear term can appear in only {n_linear} Pfaffian(s); point of higher embedding dimension"
            ));
        }
    }
    warnings
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub format: FamilyFormat,
    pub equivalence_class: Vec<TJFormat>,
    pub nodes: u64,
    pub euler: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyTable {
    pub embedding: String,
    pub basket: Vec<BasketEntry>,
    pub d3: RationalJson,
    pub h11_resolved: Option<i64>,
    pub euler_y: i64,
    pub rows: Vec<FamilyRow>,
    /// Number of topologically distinct families: distinct Euler numbers.
    pub family_count: usize,
}

/// Inputs for [`family_table`] beyond the candidate.
#[derive(Clone, Debug)]
pub struct FamilyInputs {
    pub model: PfaffianModel,
    /// Formats known to give nodal degenerations; `None` uses every format
    /// with a valid node count and no diagnostic warnings.
    pub realizable: Option<Vec<TJFormat>>,
    pub euler_reference: i64,
    pub reference_kind: RefKind,
    /// Families outside the Tom/Jerry scheme, with their node counts.
    pub extra: Vec<(String, u64)>,
}

/// One row per equivalence class with a realizable member, plus extras.
pub fn family_table(c: &CY3Candidate, inputs: &FamilyInputs) -> Result<FamilyTable, UnprojError> {
    let m = &inputs.model;
    let ey = euler_of_y(inputs.euler_reference, inputs.reference_kind);
    let realizable = |f: &TJFormat| -> bool {
        match &inputs.realizable {
            Some(v) => v.contains(f),
            None => node_count(m, *f).is_ok() && higher_embedding_diagnostic(m, *f).is_empty(),
        }
    };
    let mut rows = Vec::new();
    for class in tj_classes(m) {
        let Some(rep) = class.iter().find(|f| realizable(f)) else {
            continue;
        };
        let nodes = node_count(m, *rep)?;
        rows.push(FamilyRow {
            format: FamilyFormat::TomJerry(*rep),
            equivalence_class: class.clone(),
            nodes,
            euler: ey + 2 * nodes as i64 - 2,
        });
    }
    for (name, nodes) in &inputs.extra {
        rows.push(FamilyRow {
            format: FamilyFormat::LowCodim(name.clone()),
            equivalence_class: vec![],
            nodes: *nodes,
            euler: ey + 2 * *nodes as i64 - 2,
        });
    }
    let eulers: BTreeSet<i64> = rows.iter().map(|r| r.euler).collect();
    Ok(FamilyTable {
        embedding: c.embedding_string(),
        basket: c.basket.clone(),
        d3: RationalJson::from(&c.d3),
        h11_resolved: crepant_h11(&c.basket, 2).ok(),
        euler_y: ey,
        family_count: eulers.len(),
        rows,
    })
}

impl fmt::Display for FamilyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.embedding)?;
        let basket: Vec<String> = self
            .basket
            .iter()
            .map(|b| format!("{}x{}", b.count, b.point()))
            .collect();
        writeln!(
            f,
            "basket: {}   D^3 = {}/{}   h11 resolved: {}   e(Y) = {}",
            if basket.is_empty() { "smooth".into() } else { basket.join(" + ") },
            self.d3.num,
            self.d3.den,
            self.h11_resolved.map_or("-".into(), |h| h.to_string()),
            self.euler_y
        )?;
        writeln!(f, "{:<12} {:>6} {:>7}  class", "format", "nodes", "euler")?;
        for r in &self.rows {
            let class: Vec<String> = r.equivalence_class.iter().map(|t| t.to_string()).collect();
            writeln!(f, "{:<12} {:>6} {:>7}  {}", r.format.to_string(), r.nodes, r.euler, class.join(" "))?;
        }
        write!(f, "families: {}", self.family_count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{build_candidate, FormatWeights};
    use crate::rat;

    fn row7() -> CY3Candidate {
        // rows and columns as in the worked example: ((1,1,2),(2,2,3),(2,2,3))
        build_candidate(&FormatWeights::new(1, (1, 0), (0, 1)), &[1, 1, 1], &[2, 2, 2, 3]).unwrap()
    }

    fn row7_model() -> PfaffianModel {
        project(&row7(), &OrbifoldPoint::new(3, [1, 1, 1]), (2, 2)).unwrap()
    }

    #[test]
    fn row7_projection() {
        let m = row7_model();
        assert_eq!(m.b, [rat(3, 2), rat(1, 2), rat(1, 2), rat(1, 2), rat(3, 2)]);
        assert_eq!(m.pf_degrees(), [3, 4, 4, 4, 3]);
        assert_eq!(m.entry_rows()[0], vec![2, 2, 2, 3]);
        assert_eq!((m.m(2, 3), m.m(4, 5)), (1, 2));
        assert_eq!(m.divisor.plane_weights, [1, 1, 1]);
        assert_eq!(m.divisor.generator_degrees, [1, 1, 2, 2]);
        assert_eq!(m.ambient7, vec![1, 1, 1, 1, 1, 2, 2]);
        assert_eq!(generic_model_check(&m), ModelStatus::AllPositive);
    }

    #[test]
    fn row7_nodes() {
        let m = row7_model();
        let n = |f| node_count(&m, f).unwrap();
        assert_eq!(n(TJFormat::Tom(1)), 10);
        assert_eq!(n(TJFormat::Tom(2)), 12);
        assert_eq!(n(TJFormat::Jerry(1, 2)), 14);
        assert_eq!(n(TJFormat::Jerry(1, 5)), 13);
        assert_eq!(n(TJFormat::Jerry(2, 3)), 16);
        assert_eq!(n(TJFormat::Jerry(2, 5)), 14);
    }

    #[test]
    fn solve_b_examples() {
        assert!(matches!(
            solve_b(&[((1, 2), 1), ((1, 3), 1), ((2, 3), 3), ((4, 5), 1)]),
            Err(UnprojError::InconsistentGrading(_))
        ));
        // a 4-cycle with odd total is inconsistent
        assert!(matches!(
            solve_b(&[((1, 2), 1), ((2, 3), 1), ((3, 4), 1), ((1, 4), 2), ((4, 5), 1)]),
            Err(UnprojError::InconsistentGrading(_))
        ));
    }

    #[test]
    fn not_type_one() {
        let c = row7();
        assert!(matches!(
            project(&c, &OrbifoldPoint::new(3, [2, 2, 2]), (2, 2)),
            Err(UnprojError::NotTypeOne { .. })
        ));
    }

    #[test]
    fn classes_of_row7() {
        let cl = tj_classes(&row7_model());
        use TJFormat::*;
        assert_eq!(
            cl,
            vec![
                vec![Tom(1), Tom(5)],
                vec![Tom(2), Tom(3), Tom(4)],
                // b1 = b5, so swapping 1 and 5 joins Jer1k and Jerk5
                vec![Jerry(1, 2), Jerry(1, 3), Jerry(1, 4), Jerry(2, 5), Jerry(3, 5), Jerry(4, 5)],
                vec![Jerry(1, 5)],
                vec![Jerry(2, 3), Jerry(2, 4), Jerry(3, 4)],
            ]
        );
    }

    #[test]
    fn classes_extremes() {
        let d = Divisor {
            plane_weights: [1, 1, 1],
            generator_degrees: [1, 1, 1, 1],
        };
        let distinct = PfaffianModel::new([1, 2, 3, 4, 5].map(int), vec![1; 7], d.clone()).unwrap();
        assert_eq!(tj_classes(&distinct).len(), 15);
        let equal = PfaffianModel::new([1, 1, 1, 1, 1].map(int), vec![1; 7], d).unwrap();
        let cl = tj_classes(&equal);
        assert_eq!(cl.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![5, 10]);
    }

    #[test]
    fn negative_and_zero_entries() {
        let d = Divisor {
            plane_weights: [1, 1, 1],
            generator_degrees: [1, 1, 1, 1],
        };
        let m = PfaffianModel::new([-2, 1, 1, 1, 1].map(int), vec![1; 7], d).unwrap();
        assert_eq!(generic_model_check(&m), ModelStatus::NegativeEntry { i: 1, j: 2 });
    }

    #[test]
    fn toy_ci_degeneration_reports_options() {
        // b = (1/2, -1/2, 1/2, 3/2, 3/2): m12 = 0, pf = (3, 4, 3, 2, 2).
        // Pf3 pairs with m45 = 3, Pf4 with m35 = 2, Pf5 with m34 = 2.
        let b = [rat(1, 2), rat(-1, 2), rat(1, 2), rat(3, 2), rat(3, 2)];
        let d = Divisor {
            plane_weights: [1, 1, 1],
            generator_degrees: [1, 1, 2, 2],
        };
        let m = PfaffianModel::new(b, vec![1, 1, 1, 1, 1, 2, 2], d).unwrap();
        assert_eq!(m.pf_degrees(), [3, 4, 3, 2, 2]);
        let rep = ci_degeneration(&m, (1, 2)).unwrap();
        let which: Vec<usize> = rep.options.iter().map(|o| o.pfaffian).collect();
        assert_eq!(which, vec![4, 5]);
        assert!(rep.ambiguous);
        assert_eq!(rep.chosen.pfaffian, 4);
        assert_eq!(rep.chosen.ci_degrees, vec![2, 3]);
        assert_eq!(rep.chosen.ambient, vec![1, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn ci_degeneration_needs_a_zero() {
        assert!(ci_degeneration(&row7_model(), (1, 2)).is_err());
    }

    #[test]
    fn euler_chain_trivial() {
        let r = euler_chain(-50, RefKind::GenericY, &[(FamilyFormat::TomJerry(TJFormat::Tom(1)), 1)]);
        assert_eq!(r[0].euler, -50);
    }

    #[test]
    fn format_parsing() {
        assert_eq!("Tom2".parse::<TJFormat>(), Ok(TJFormat::Tom(2)));
        assert_eq!("jer35".parse::<TJFormat>(), Ok(TJFormat::Jerry(3, 5)));
        assert_eq!("Jerry53".parse::<TJFormat>(), Ok(TJFormat::Jerry(3, 5)));
        assert!("Tom6".parse::<TJFormat>().is_err());
        assert!("Jer33".parse::<TJFormat>().is_err());
    }

    #[test]
    fn row7_tom1_no_warnings() {
        assert!(higher_embedding_diagnostic(&row7_model(), TJFormat::Tom(1)).is_empty());
    }
}
