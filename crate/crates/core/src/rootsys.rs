//! Root systems of simple complex Lie algebras and the gradings induced by
//! weighted Dynkin diagrams.
//!
//! Roots are stored as coefficient vectors over the simple roots, so the
//! ad_h-weight of a root is an integer dot product with the diagram labels.
//! Simple roots follow the Bourbaki numbering throughout; for E6 the branch
//! node is 2 and the long chain is 1-3-4-5-6.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest classical rank accepted by the enumeration-heavy code paths.
pub const MAX_CLASSICAL_RANK: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G2" | "G" => Ok(Family::G2),
            "F4" | "F" => Ok(Family::F4),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            "E8" => Ok(Family::E8),
            other => Err(Error::Domain(format!("unknown Lie family `{other}`"))),
        }
    }
}

/// A simple type such as `A4` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "LieTypeRepr", into = "LieTypeRepr")]
pub struct LieType {
    family: Family,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct LieTypeRepr {
    family: Family,
    rank: usize,
}

impl TryFrom<LieTypeRepr> for LieType {
    type Error = Error;
    fn try_from(r: LieTypeRepr) -> Result<Self> {
        LieType::new(r.family, r.rank)
    }
}

impl From<LieType> for LieTypeRepr {
    fn from(t: LieType) -> Self {
        LieTypeRepr {
            family: t.family,
            rank: t.rank,
        }
    }
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            _ => family.fixed_rank() == Some(rank),
        };
        if !ok {
            return Err(Error::RankDomain {
                family: family.to_string(),
                rank,
            });
        }
        Ok(LieType { family, rank })
    }

    /// The exceptional type of the given family.
    pub fn exceptional(family: Family) -> Result<Self> {
        let rank = family.fixed_rank().ok_or_else(|| {
            Error::Domain(format!("{family} is a classical family and needs a rank"))
        })?;
        LieType::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the defining representation for classical types.
    pub fn standard_dim(&self) -> Option<usize> {
        match self.family {
            Family::A => Some(self.rank + 1),
            Family::B => Some(2 * self.rank + 1),
            Family::C | Family::D => Some(2 * self.rank),
            _ => None,
        }
    }

    /// Dimension of the Lie algebra, from the classical closed forms.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_classical() {
            write!(f, "{}{}", self.family, self.rank)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

/// Symmetrized Gram matrix of the simple roots, scaled so every entry is an
/// integer.
fn gram_matrix(t: LieType) -> Vec<Vec<i32>> {
    let n = t.rank;
    let mut g = vec![vec![0i32; n]; n];
    let bond = |g: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.family {
        Family::A => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                bond(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = if i + 1 == n { 2 } else { 4 };
            }
            for i in 0..n - 1 {
                bond(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = if i + 1 == n { 4 } else { 2 };
            }
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, -1);
            }
            bond(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, -1);
            }
            bond(&mut g, n - 3, n - 1, -1);
        }
        Family::G2 => {
            g[0][0] = 2;
            g[1][1] = 6;
            bond(&mut g, 0, 1, -3);
        }
        Family::F4 => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            bond(&mut g, 0, 1, -2);
            bond(&mut g, 1, 2, -2);
            bond(&mut g, 2, 3, -1);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            // Bourbaki: 1-3, 3-4, 4-5, 5-6, ..., and 2-4.
            bond(&mut g, 0, 2, -1);
            bond(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                bond(&mut g, i, i + 1, -1);
            }
        }
    }
    g
}

/// Cartan matrix with entries `<alpha_i^vee, alpha_j>`.
pub fn cartan_matrix(t: LieType) -> Vec<Vec<i32>> {
    let g = gram_matrix(t);
    let n = t.rank;
    let mut a = vec![vec![0i32; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = 2 * g[i][j] / g[i][i];
        }
    }
    a
}

/// A root system given by its Cartan matrix and positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Vec<i32>>,
}

fn pairing(cartan: &[Vec<i32>], root: &[i32], i: usize) -> i32 {
    root.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum()
}

fn height_order(roots: &mut [Vec<i32>]) {
    roots.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
}

/// Positive roots by closure on height using root strings.
fn closure_by_height(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i32; n];
        v[i] = 1;
        v
    };
    let mut all: HashSet<Vec<i32>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i32>> = (0..n).map(unit).collect();
    let mut out = layer.clone();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // length p of the alpha_i-string below beta
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(cartan, beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().filter(|r| !all.contains(r)).collect();
        for r in &layer {
            all.insert(r.clone());
        }
        out.extend(layer.iter().cloned());
    }
    height_order(&mut out);
    out
}

/// Positive roots as the positive part of the Weyl orbit of the simple roots.
fn closure_by_reflection(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = cartan.len();
    let mut all: HashSet<Vec<i32>> = HashSet::new();
    let mut frontier: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            let mut v = vec![0i32; n];
            v[i] = 1;
            v
        })
        .collect();
    for r in &frontier {
        all.insert(r.clone());
    }
    while let Some(root) = frontier.pop() {
        for i in 0..n {
            let mut img = root.clone();
            img[i] -= pairing(cartan, &root, i);
            if all.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }
    let mut pos: Vec<Vec<i32>> = all.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
    height_order(&mut pos);
    pos
}

pub fn build_root_system(t: LieType) -> RootSystem {
    let cartan = cartan_matrix(t);
    let positive_roots = closure_by_height(&cartan);
    RootSystem {
        lie_type: t,
        cartan,
        positive_roots,
    }
}

impl RootSystem {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Positive roots ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    pub fn dim_g(&self) -> usize {
        2 * self.positive_roots.len() + self.rank()
    }

    /// The positive roots recomputed from the Weyl orbit of the simple roots,
    /// independently of the height closure used by [`build_root_system`].
    pub fn positive_roots_by_reflection(&self) -> Vec<Vec<i32>> {
        closure_by_reflection(&self.cartan)
    }

    pub fn highest_root(&self) -> &[i32] {
        self.positive_roots.last().expect("nonempty root system")
    }
}

/// Dynkin diagram of `lie_type` with each simple root labeled 0, 1 or 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedDynkinDiagram {
    lie_type: LieType,
    labels: Vec<u8>,
}

impl WeightedDynkinDiagram {
    pub fn new(lie_type: LieType, labels: Vec<u8>) -> Result<Self> {
        if labels.len() != lie_type.rank() {
            return Err(Error::Domain(format!(
                "{lie_type} needs {} labels, got {}",
                lie_type.rank(),
                labels.len()
            )));
        }
        if let Some(bad) = labels.iter().find(|&&l| l > 2) {
            return Err(Error::Domain(format!("diagram label {bad} is not in {{0,1,2}}")));
        }
        Ok(WeightedDynkinDiagram { lie_type, labels })
    }

    pub fn zero(lie_type: LieType) -> Self {
        WeightedDynkinDiagram {
            lie_type,
            labels: vec![0; lie_type.rank()],
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// ad_h-weight of a root given by simple-root coefficients.
    pub fn weight_of(&self, root: &[i32]) -> i32 {
        root.iter().zip(&self.labels).map(|(c, &l)| c * l as i32).sum()
    }
}

impl fmt::Display for WeightedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.labels {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Dimensions of the ad_h eigenspaces, keyed by integer weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingDims {
    pub dims: BTreeMap<i32, u64>,
}

impl GradingDims {
    pub fn get(&self, j: i32) -> u64 {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn max_weight(&self) -> i32 {
        self.dims.keys().copied().max().unwrap_or(0)
    }

    /// Checks symmetry, total dimension and `dims[0] >= rank`.
    pub fn check(&self, dim_g: usize, rank: usize) -> Result<()> {
        for (&j, &d) in &self.dims {
            if self.get(-j) != d {
                return Err(Error::Consistency(format!("dim g_{j} = {d} but dim g_{} = {}", -j, self.get(-j))));
            }
        }
        if self.total() != dim_g as u64 {
            return Err(Error::Consistency(format!("grading sums to {} instead of {dim_g}", self.total())));
        }
        if self.get(0) < rank as u64 {
            return Err(Error::Consistency("dim g_0 is smaller than the rank".into()));
        }
        Ok(())
    }
}

pub fn ad_grading(rs: &RootSystem, w: &WeightedDynkinDiagram) -> Result<GradingDims> {
    if w.lie_type() != rs.lie_type() {
        return Err(Error::TypeMismatch {
            expected: rs.lie_type().to_string(),
            found: w.lie_type().to_string(),
        });
    }
    let mut dims = BTreeMap::new();
    dims.insert(0, rs.rank() as u64);
    for root in rs.positive_roots() {
        let j = w.weight_of(root);
        *dims.entry(j).or_insert(0) += 1;
        *dims.entry(-j).or_insert(0) += 1;
    }
    Ok(GradingDims { dims })
}
