//! Catalog of noncompact real forms of simple Lie algebras: Cartan
//! decomposition dimensions, Hermitian data, Satake diagrams and the real
//! forms of centralizers of nilpotent elements.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::SignedPartitionData;
use crate::rootsys::{Family, LieType};

/// A real form of a simple complex Lie algebra.
///
/// Classical parameters follow the matrix sizes: `Su { p, q }` is
/// su(p,q), `SuStar { m }` is su*(2m), `SoStar { m }` is so*(2m),
/// `SpR { n }` is sp(2n,R) and `Sp { p, q }` is sp(2p,2q), the form with
/// quaternionic signature (p,q). Exceptional forms are named by the
/// difference `dim m - dim h`, as in `E6^-14`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RealForm {
    Su { p: usize, q: usize },
    Sl { n: usize },
    SuStar { m: usize },
    So { p: usize, q: usize },
    SoStar { m: usize },
    SpR { n: usize },
    Sp { p: usize, q: usize },
    Exceptional { family: Family, index: i32 },
}

/// Noncompact exceptional real forms, by family and index.
pub const EXCEPTIONAL_FORMS: [(Family, i32); 12] = [
    (Family::G2, 2),
    (Family::F4, 4),
    (Family::F4, -20),
    (Family::E6, 6),
    (Family::E6, 2),
    (Family::E6, -14),
    (Family::E6, -26),
    (Family::E7, 7),
    (Family::E7, -5),
    (Family::E7, -25),
    (Family::E8, 8),
    (Family::E8, -24),
];

impl RealForm {
    /// Validates the parameters and returns the form.
    pub fn checked(self) -> Result<Self> {
        self.complex_type()?;
        Ok(self)
    }

    /// The type of the complexification.
    ///
    /// Forms whose complexification is not simple, or is simple only through
    /// a low-rank isomorphism outside the [`LieType`] ranges (so(p,q) with
    /// p+q = 3 or 4, so*(4), sp(2,R), sp(2,0)), are rejected.
    pub fn complex_type(&self) -> Result<LieType> {
        let bad = || Error::Domain(format!("{self} is not a supported simple real form"));
        match *self {
            RealForm::Su { p, q } => LieType::new(Family::A, (p + q).checked_sub(1).ok_or_else(bad)?),
            RealForm::Sl { n } => LieType::new(Family::A, n.checked_sub(1).ok_or_else(bad)?),
            RealForm::SuStar { m } => LieType::new(Family::A, (2 * m).checked_sub(1).ok_or_else(bad)?),
            RealForm::So { p, q } => {
                let n = p + q;
                if n % 2 == 1 {
                    LieType::new(Family::B, n / 2)
                } else {
                    LieType::new(Family::D, n / 2)
                }
            }
            RealForm::SoStar { m } => LieType::new(Family::D, m),
            RealForm::SpR { n } => LieType::new(Family::C, n),
            RealForm::Sp { p, q } => LieType::new(Family::C, p + q),
            RealForm::Exceptional { family, index } => {
                if EXCEPTIONAL_FORMS.contains(&(family, index)) {
                    LieType::exceptional(family)
                } else {
                    Err(bad())
                }
            }
        }
        .map_err(|_| bad())
    }

    /// True for su*, so* and sp(p,q), whose signed data live on reduced
    /// diagrams with every row doubled in the complex partition.
    pub fn is_quaternionic(&self) -> bool {
        matches!(self, RealForm::SuStar { .. } | RealForm::SoStar { .. } | RealForm::Sp { .. })
    }

    pub fn is_compact(&self) -> bool {
        match *self {
            RealForm::Su { p, q } | RealForm::So { p, q } | RealForm::Sp { p, q } => p == 0 || q == 0,
            RealForm::SuStar { m } => m == 1,
            _ => false,
        }
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RealForm::Su { p, q } => write!(f, "su({p},{q})"),
            RealForm::Sl { n } => write!(f, "sl({n},R)"),
            RealForm::SuStar { m } => write!(f, "su*({})", 2 * m),
            RealForm::So { p, q } => write!(f, "so({p},{q})"),
            RealForm::SoStar { m } => write!(f, "so*({})", 2 * m),
            RealForm::SpR { n } => write!(f, "sp({},R)", 2 * n),
            RealForm::Sp { p, q } => write!(f, "sp({},{})", 2 * p, 2 * q),
            RealForm::Exceptional { family, index } => write!(f, "{family}^{index}"),
        }
    }
}

fn parse_args(s: &str) -> Option<Vec<String>> {
    let inner = s.strip_suffix(')')?;
    Some(inner.split(',').map(|t| t.trim().to_string()).collect())
}

fn num(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Domain(format!("`{s}` is not a nonnegative integer")))
}

fn half(s: &str) -> Result<usize> {
    let v = num(s)?;
    if v % 2 == 1 {
        return Err(Error::Domain(format!("`{s}` must be even")));
    }
    Ok(v / 2)
}

impl FromStr for RealForm {
    type Err = Error;

    /// Parses the display form, e.g. `su(2,3)`, `sp(4,R)`, `so*(10)`,
    /// `E6^-14`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace(' ', "");
        let err = || Error::Domain(format!("unrecognized real form `{s}`"));
        if let Some((fam, idx)) = s.split_once('^') {
            let family: Family = fam.parse()?;
            let idx = idx.trim_start_matches('{').trim_end_matches('}');
            let index: i32 = idx.parse().map_err(|_| err())?;
            return RealForm::Exceptional { family, index }.checked();
        }
        let (head, rest) = s.split_once('(').ok_or_else(err)?;
        let args = parse_args(rest).ok_or_else(err)?;
        let real = args.len() == 2 && args[1].eq_ignore_ascii_case("R");
        let form = match (head, args.len()) {
            ("su", 2) => RealForm::Su { p: num(&args[0])?, q: num(&args[1])? },
            ("sl", 2) if real => RealForm::Sl { n: num(&args[0])? },
            ("su*", 1) => RealForm::SuStar { m: half(&args[0])? },
            ("so", 2) => RealForm::So { p: num(&args[0])?, q: num(&args[1])? },
            ("so*", 1) => RealForm::SoStar { m: half(&args[0])? },
            ("sp", 2) if real => RealForm::SpR { n: half(&args[0])? },
            ("sp", 2) => RealForm::Sp { p: half(&args[0])?, q: half(&args[1])? },
            _ => return Err(err()),
        };
        form.checked()
    }
}

/// Dimensions and Hermitian data of a real form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealFormDescriptor {
    pub form: RealForm,
    pub dim_g_real: i64,
    pub dim_h: i64,
    pub dim_m: i64,
    /// `dim m - dim h`.
    pub s: i64,
    pub hermitian: bool,
    pub tube_type: Option<bool>,
    /// Real rank, i.e. the rank of the symmetric space.
    pub ss_rank: i64,
    pub maximal_subtube: Option<RealForm>,
}

fn so_dim(n: usize) -> i64 {
    let n = n as i64;
    n * (n - 1) / 2
}

fn sp_dim(n: usize) -> i64 {
    let n = n as i64;
    n * (2 * n + 1)
}

pub fn describe(form: RealForm) -> Result<RealFormDescriptor> {
    let t = form.complex_type()?;
    let dim_g = t.dim() as i64;
    let (dim_h, hermitian, tube, rank, subtube) = match form {
        RealForm::Su { p, q } => {
            let (a, b) = (p.min(q), p.max(q));
            let herm = a >= 1;
            let sub = (herm && a < b).then_some(RealForm::Su { p: a, q: a });
            ((p * p + q * q) as i64 - 1, herm, a == b, a, sub)
        }
        RealForm::Sl { n } => (so_dim(n), n == 2, true, n - 1, None),
        RealForm::SuStar { m } => (sp_dim(m), false, false, m - 1, None),
        RealForm::So { p, q } => {
            let a = p.min(q);
            let herm = a == 2;
            (so_dim(p) + so_dim(q), herm, true, a, None)
        }
        RealForm::SoStar { m } => {
            let sub = (m % 2 == 1).then_some(RealForm::SoStar { m: m - 1 });
            ((m * m) as i64, true, m % 2 == 0, m / 2, sub)
        }
        RealForm::SpR { n } => ((n * n) as i64, true, true, n, None),
        RealForm::Sp { p, q } => (sp_dim(p) + sp_dim(q), false, false, p.min(q), None),
        RealForm::Exceptional { family, index } => {
            let dim_h = (dim_g - index as i64) / 2;
            let rank = exceptional_rank(family, index);
            match (family, index) {
                (Family::E6, -14) => (dim_h, true, false, rank, Some(RealForm::So { p: 2, q: 8 })),
                (Family::E7, -25) => (dim_h, true, true, rank, None),
                _ => (dim_h, false, false, rank, None),
            }
        }
    };
    let dim_m = dim_g - dim_h;
    Ok(RealFormDescriptor {
        form,
        dim_g_real: dim_g,
        dim_h,
        dim_m,
        s: dim_m - dim_h,
        hermitian,
        tube_type: hermitian.then_some(tube),
        ss_rank: rank as i64,
        maximal_subtube: subtube,
    })
}

fn exceptional_rank(family: Family, index: i32) -> usize {
    match (family, index) {
        (Family::E6, 6) => 6,
        (Family::E6, 2) => 4,
        (Family::E6, -14) | (Family::E6, -26) => 2,
        (Family::E7, 7) => 7,
        (Family::E7, -5) => 4,
        (Family::E7, -25) => 3,
        (Family::E8, 8) => 8,
        (Family::E8, -24) => 4,
        (Family::F4, 4) => 4,
        (Family::F4, -20) => 1,
        (Family::G2, 2) => 2,
        _ => 0,
    }
}

/// Milnor-Wood bound `rank(G/H) (2g - 2)` on the Toledo invariant.
pub fn milnor_wood(d: &RealFormDescriptor, genus: u32) -> Result<i64> {
    if !d.hermitian {
        return Err(Error::Domain(format!("{} is not Hermitian", d.form)));
    }
    if genus < 2 {
        return Err(Error::Domain(format!("genus must be at least 2, got {genus}")));
    }
    Ok(d.ss_rank * (2 * genus as i64 - 2))
}

/// Satake diagram: the black nodes and the arrow involution on the nodes
/// of the Dynkin diagram (Bourbaki numbering, zero based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeDiagram {
    pub lie_type: LieType,
    pub black: BTreeSet<usize>,
    pub arrows: Vec<usize>,
}

impl SatakeDiagram {
    /// Number of simple restricted roots: arrow orbits on the white nodes.
    pub fn real_rank(&self) -> usize {
        let n = self.lie_type.rank();
        (0..n).filter(|&i| !self.black.contains(&i) && self.arrows[i] >= i).count()
    }
}

pub fn satake_diagram(form: RealForm) -> Result<SatakeDiagram> {
    let t = form.complex_type()?;
    let n = t.rank();
    let mut black = BTreeSet::new();
    let mut arrows: Vec<usize> = (0..n).collect();
    // Nodes below are one based.
    let blacken = |set: &mut BTreeSet<usize>, nodes: &[usize]| {
        for &k in nodes {
            set.insert(k - 1);
        }
    };
    match form {
        RealForm::Sl { .. } | RealForm::SpR { .. } => {}
        RealForm::Su { p, q } => {
            let a = p.min(q);
            for (i, a) in arrows.iter_mut().enumerate() {
                *a = n - 1 - i;
            }
            let mid: Vec<usize> = (a + 1..=n - a).collect();
            blacken(&mut black, &mid);
        }
        RealForm::SuStar { m } => {
            let odd: Vec<usize> = (1..=2 * m - 1).step_by(2).collect();
            blacken(&mut black, &odd);
        }
        RealForm::So { p, q } => {
            let a = p.min(q);
            let nn = p + q;
            if nn % 2 == 0 && a + 1 == n {
                arrows.swap(n - 2, n - 1);
            } else if a < n {
                let tail: Vec<usize> = (a + 1..=n).collect();
                blacken(&mut black, &tail);
            }
        }
        RealForm::SoStar { m } => {
            if m % 2 == 0 {
                let odd: Vec<usize> = (1..m).step_by(2).collect();
                blacken(&mut black, &odd);
            } else {
                let odd: Vec<usize> = (1..m - 1).step_by(2).collect();
                blacken(&mut black, &odd);
                arrows.swap(n - 2, n - 1);
            }
        }
        RealForm::Sp { p, q } => {
            let a = p.min(q);
            let mut nodes: Vec<usize> = (1..2 * a).step_by(2).collect();
            nodes.extend(2 * a + 1..=n);
            blacken(&mut black, &nodes);
        }
        RealForm::Exceptional { family, index } => match (family, index) {
            (Family::E6, 2) => {
                arrows = vec![5, 1, 4, 3, 2, 0];
            }
            (Family::E6, -14) => {
                arrows = vec![5, 1, 2, 3, 4, 0];
                blacken(&mut black, &[3, 4, 5]);
            }
            (Family::E6, -26) => blacken(&mut black, &[2, 3, 4, 5]),
            (Family::E7, -5) => blacken(&mut black, &[2, 5, 7]),
            (Family::E7, -25) => blacken(&mut black, &[2, 3, 4, 5]),
            (Family::E8, -24) => blacken(&mut black, &[2, 3, 4, 5]),
            (Family::F4, -20) => blacken(&mut black, &[1, 2, 3]),
            _ => {}
        },
    }
    Ok(SatakeDiagram {
        lie_type: t,
        black,
        arrows,
    })
}

/// One simple or reductive summand of a centralizer real form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CentralizerFactor {
    /// u(p,q)
    U { p: usize, q: usize },
    /// su(p,q)
    Su { p: usize, q: usize },
    /// gl(n,R)
    GlR { n: usize },
    /// sl(n,R)
    SlR { n: usize },
    /// u*(2n) = gl(n,H)
    UStar { n: usize },
    /// su*(2n)
    SuStar { n: usize },
    /// sp(2n,R)
    SpR { n: usize },
    /// so(p,q)
    So { p: usize, q: usize },
    /// sp(2p,2q), quaternionic signature (p,q)
    Sp { p: usize, q: usize },
    /// so*(2n)
    SoStar { n: usize },
}

impl CentralizerFactor {
    fn semisimple_compact(&self) -> bool {
        match *self {
            CentralizerFactor::U { p, q }
            | CentralizerFactor::Su { p, q }
            | CentralizerFactor::So { p, q }
            | CentralizerFactor::Sp { p, q } => p == 0 || q == 0,
            CentralizerFactor::GlR { n } | CentralizerFactor::SlR { n } => n <= 1,
            CentralizerFactor::UStar { n } | CentralizerFactor::SuStar { n } | CentralizerFactor::SoStar { n } => n <= 1,
            CentralizerFactor::SpR { n } => n == 0,
        }
    }

    /// Dimension of the noncompact part of the center.
    fn split_center(&self) -> usize {
        match *self {
            CentralizerFactor::GlR { n } | CentralizerFactor::UStar { n } if n > 0 => 1,
            _ => 0,
        }
    }

    fn compact_center(&self) -> usize {
        match *self {
            CentralizerFactor::U { p, q } if p + q > 0 => 1,
            _ => 0,
        }
    }

    pub fn is_compact(&self) -> bool {
        self.semisimple_compact() && self.split_center() == 0
    }

    pub fn dim(&self) -> i64 {
        let sq = |k: usize| (k * k) as i64;
        match *self {
            CentralizerFactor::U { p, q } => sq(p + q),
            CentralizerFactor::Su { p, q } => (sq(p + q) - 1).max(0),
            CentralizerFactor::GlR { n } => sq(n),
            CentralizerFactor::SlR { n } => (sq(n) - 1).max(0),
            CentralizerFactor::UStar { n } => 4 * sq(n),
            CentralizerFactor::SuStar { n } => (4 * sq(n) - 1).max(0),
            CentralizerFactor::SpR { n } => sp_dim(n),
            CentralizerFactor::So { p, q } => so_dim(p + q),
            CentralizerFactor::Sp { p, q } => sp_dim(p + q),
            CentralizerFactor::SoStar { n } => so_dim(2 * n),
        }
    }

    /// Dimension of a maximal compact subalgebra.
    pub fn max_compact_dim(&self) -> i64 {
        let sq = |k: usize| (k * k) as i64;
        match *self {
            CentralizerFactor::U { p, q } => sq(p) + sq(q),
            CentralizerFactor::Su { p, q } => (sq(p) + sq(q) - 1).max(0),
            CentralizerFactor::GlR { n } | CentralizerFactor::SlR { n } => so_dim(n),
            CentralizerFactor::UStar { n } | CentralizerFactor::SuStar { n } => sp_dim(n),
            CentralizerFactor::SpR { n } | CentralizerFactor::SoStar { n } => sq(n),
            CentralizerFactor::So { p, q } => so_dim(p) + so_dim(q),
            CentralizerFactor::Sp { p, q } => sp_dim(p) + sp_dim(q),
        }
    }

    fn is_empty(&self) -> bool {
        match *self {
            CentralizerFactor::U { p, q }
            | CentralizerFactor::Su { p, q }
            | CentralizerFactor::So { p, q }
            | CentralizerFactor::Sp { p, q } => p + q == 0,
            CentralizerFactor::GlR { n }
            | CentralizerFactor::SlR { n }
            | CentralizerFactor::UStar { n }
            | CentralizerFactor::SuStar { n }
            | CentralizerFactor::SpR { n }
            | CentralizerFactor::SoStar { n } => n == 0,
        }
    }
}

fn signature(f: &mut fmt::Formatter<'_>, name: &str, p: usize, q: usize) -> fmt::Result {
    if p == 0 || q == 0 {
        write!(f, "{name}({})", p + q)
    } else {
        write!(f, "{name}({p},{q})")
    }
}

impl fmt::Display for CentralizerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CentralizerFactor::U { p, q } => signature(f, "u", p, q),
            CentralizerFactor::Su { p, q } => signature(f, "su", p, q),
            CentralizerFactor::GlR { n } => write!(f, "gl({n},R)"),
            CentralizerFactor::SlR { n } => write!(f, "sl({n},R)"),
            CentralizerFactor::UStar { n } => write!(f, "u*({})", 2 * n),
            CentralizerFactor::SuStar { n } => write!(f, "su*({})", 2 * n),
            CentralizerFactor::SpR { n } => write!(f, "sp({},R)", 2 * n),
            CentralizerFactor::So { p, q } => signature(f, "so", p, q),
            CentralizerFactor::Sp { p, q } => {
                if p == 0 || q == 0 {
                    write!(f, "sp({})", p + q)
                } else {
                    write!(f, "sp({},{})", 2 * p, 2 * q)
                }
            }
            CentralizerFactor::SoStar { n } => write!(f, "so*({})", 2 * n),
        }
    }
}

impl FromStr for CentralizerFactor {
    type Err = Error;

    /// Parses the display form; a single argument in `u`, `su`, `so`, `sp`
    /// denotes the compact form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace(' ', "");
        let err = || Error::Domain(format!("unrecognized centralizer factor `{s}`"));
        let (head, rest) = s.split_once('(').ok_or_else(err)?;
        let args = parse_args(rest).ok_or_else(err)?;
        let real = args.len() == 2 && args[1].eq_ignore_ascii_case("R");
        Ok(match (head, args.len()) {
            ("u", 1) => CentralizerFactor::U { p: num(&args[0])?, q: 0 },
            ("su", 1) => CentralizerFactor::Su { p: num(&args[0])?, q: 0 },
            ("so", 1) => CentralizerFactor::So { p: num(&args[0])?, q: 0 },
            ("sp", 1) => CentralizerFactor::Sp { p: num(&args[0])?, q: 0 },
            ("gl", 2) if real => CentralizerFactor::GlR { n: num(&args[0])? },
            ("sl", 2) if real => CentralizerFactor::SlR { n: num(&args[0])? },
            ("sp", 2) if real => CentralizerFactor::SpR { n: half(&args[0])? },
            ("u", 2) => CentralizerFactor::U { p: num(&args[0])?, q: num(&args[1])? },
            ("su", 2) => CentralizerFactor::Su { p: num(&args[0])?, q: num(&args[1])? },
            ("so", 2) => CentralizerFactor::So { p: num(&args[0])?, q: num(&args[1])? },
            ("sp", 2) => CentralizerFactor::Sp { p: half(&args[0])?, q: half(&args[1])? },
            ("u*", 1) => CentralizerFactor::UStar { n: half(&args[0])? },
            ("su*", 1) => CentralizerFactor::SuStar { n: half(&args[0])? },
            ("so*", 1) => CentralizerFactor::SoStar { n: half(&args[0])? },
            _ => return Err(err()),
        })
    }
}

/// Real form of the centralizer of a triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerRealForm {
    pub factors: Vec<CentralizerFactor>,
    /// Whether the sum is cut down by one trace condition, as in s(u(2)+u(1)).
    pub traceless: bool,
    pub is_compact: bool,
}

impl CentralizerRealForm {
    pub fn new(factors: Vec<CentralizerFactor>, traceless: bool) -> Self {
        let factors: Vec<CentralizerFactor> = factors.into_iter().filter(|f| !f.is_empty()).collect();
        let split: usize = factors.iter().map(|f| f.split_center()).sum();
        let split = if traceless && split > 0 { split - 1 } else { split };
        let is_compact = split == 0 && factors.iter().all(|f| f.semisimple_compact());
        CentralizerRealForm {
            factors,
            traceless,
            is_compact,
        }
    }

    pub fn dim(&self) -> i64 {
        let d: i64 = self.factors.iter().map(|f| f.dim()).sum();
        if self.traceless && !self.factors.is_empty() {
            d - 1
        } else {
            d
        }
    }

    /// Dimension of a maximal compact subalgebra; this is `dim (c ∩ h)`
    /// for a normal triple.
    pub fn max_compact_dim(&self) -> i64 {
        let d: i64 = self.factors.iter().map(|f| f.max_compact_dim()).sum();
        let compact_center: usize = self.factors.iter().map(|f| f.compact_center()).sum();
        if self.traceless && compact_center > 0 {
            d - 1
        } else {
            d
        }
    }
}

impl fmt::Display for CentralizerRealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let body = self.factors.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+");
        if self.traceless {
            write!(f, "s({body})")
        } else {
            write!(f, "{body}")
        }
    }
}

impl FromStr for CentralizerRealForm {
    type Err = Error;

    /// Parses sums like `so(7)+so(2)` or `s(u(2)+u(1))`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace(' ', "");
        if s == "0" {
            return Ok(CentralizerRealForm::new(Vec::new(), false));
        }
        let (traceless, body) = match s.strip_prefix("s(").and_then(|b| b.strip_suffix(')')) {
            Some(b) => (true, b.to_string()),
            None => (false, s.clone()),
        };
        let factors = body.split('+').map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(CentralizerRealForm::new(factors, traceless))
    }
}

/// Real form of the centralizer of the triple with signed data `data`.
pub fn centralizer_realform(form: RealForm, data: &SignedPartitionData) -> Result<CentralizerRealForm> {
    if data.form != form {
        return Err(Error::Domain(format!("signed data for {} used with {form}", data.form)));
    }
    let mut factors = Vec::new();
    let traceless = matches!(form, RealForm::Su { .. } | RealForm::Sl { .. } | RealForm::SuStar { .. });
    for (&i, &(p, q)) in &data.signs {
        let r = p + q;
        let even = i % 2 == 0;
        let factor = match form {
            RealForm::Su { .. } => CentralizerFactor::U { p, q },
            RealForm::Sl { .. } => CentralizerFactor::GlR { n: r },
            RealForm::SuStar { .. } => CentralizerFactor::UStar { n: r },
            RealForm::So { .. } if even => CentralizerFactor::SpR { n: r / 2 },
            RealForm::So { .. } => CentralizerFactor::So { p, q },
            RealForm::SoStar { .. } if even => CentralizerFactor::Sp { p, q },
            RealForm::SoStar { .. } => CentralizerFactor::SoStar { n: r },
            RealForm::SpR { .. } if even => CentralizerFactor::So { p, q },
            RealForm::SpR { .. } => CentralizerFactor::SpR { n: r / 2 },
            RealForm::Sp { .. } if even => CentralizerFactor::SoStar { n: r },
            RealForm::Sp { .. } => CentralizerFactor::Sp { p, q },
            RealForm::Exceptional { .. } => {
                return Err(Error::Domain(format!("{form} has no signed partition data")));
            }
        };
        factors.push(factor);
    }
    Ok(CentralizerRealForm::new(factors, traceless))
}
