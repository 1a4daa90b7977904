//! Nilpotent orbit labels: partitions, very even splittings and signed
//! Young diagram data, together with the partition-to-diagram algorithm.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realforms::RealForm;
use crate::rootsys::{Family, LieType, WeightedDynkinDiagram};

/// A partition, stored with its parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain("a partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Partition with `count` parts of each listed size.
    pub fn from_multiplicities(mults: &BTreeMap<usize, usize>) -> Result<Self> {
        let mut parts = Vec::new();
        for (&i, &r) in mults.iter().rev() {
            parts.extend(std::iter::repeat_n(i, r));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The multiplicities `r_i`, keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &i in &self.parts {
            *m.entry(i).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&x| x == i).count()
    }

    pub fn is_very_even(&self) -> bool {
        self.parts.iter().all(|&i| i % 2 == 0)
    }

    /// True when all parts share one parity.
    pub fn is_single_parity(&self) -> bool {
        self.parts.iter().all(|&i| i % 2 == 0) || self.parts.iter().all(|&i| i % 2 == 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&i| i == 1)
    }

    /// The conjugate partition.
    pub fn dual(&self) -> Partition {
        let largest = self.parts[0];
        let parts = (1..=largest).map(|k| self.parts.iter().filter(|&&i| i >= k).count()).collect();
        Partition { parts }
    }

    /// Sorted eigenvalues of h on the standard representation, one string
    /// `i-1, i-3, ..., 1-i` per part.
    pub fn h_weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self
            .parts
            .iter()
            .flat_map(|&i| (0..i).map(move |k| i as i64 - 1 - 2 * k as i64))
            .collect();
        w.sort_by(|a, b| b.cmp(a));
        w
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for (&i, &r) in self.multiplicities().iter().rev() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if r == 1 {
                write!(f, "{i}")?;
            } else {
                write!(f, "{i}^{r}")?;
            }
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,2,1`, `2^2,1` and the bracketed display form `[2^2,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::Domain(format!("empty entry in partition `{s}`")));
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let part: usize = base
                .parse()
                .map_err(|_| Error::Domain(format!("`{base}` is not a positive integer")))?;
            let count: usize = exp
                .parse()
                .map_err(|_| Error::Domain(format!("`{exp}` is not a valid exponent")))?;
            parts.extend(std::iter::repeat_n(part, count));
        }
        Partition::new(parts)
    }
}

/// The two orbits sharing a very even partition in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VeryEvenClass {
    I,
    II,
}

/// A complex nilpotent orbit of a classical algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub partition: Partition,
    pub very_even: Option<VeryEvenClass>,
}

impl OrbitLabel {
    pub fn plain(partition: Partition) -> Self {
        OrbitLabel {
            partition,
            very_even: None,
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        match self.very_even {
            Some(VeryEvenClass::I) => write!(f, "_I"),
            Some(VeryEvenClass::II) => write!(f, "_II"),
            None => Ok(()),
        }
    }
}

fn standard_dim(family: Family, rank: usize) -> Result<usize> {
    match family {
        Family::A => Ok(rank + 1),
        Family::B => Ok(2 * rank + 1),
        Family::C | Family::D => Ok(2 * rank),
        _ => Err(Error::Domain(format!("{family} has no partition labels"))),
    }
}

/// Checks the parity rule of the family (B/D: even parts have even
/// multiplicity; C: odd parts have even multiplicity).
pub fn check_parity(family: Family, p: &Partition) -> Result<()> {
    let (bad_parity, rule) = match family {
        Family::A => return Ok(()),
        Family::B | Family::D => (0, "every even part must have even multiplicity"),
        Family::C => (1, "every odd part must have even multiplicity"),
        _ => return Err(Error::Domain(format!("{family} has no partition labels"))),
    };
    for (i, r) in p.multiplicities() {
        if i % 2 == bad_parity && r % 2 == 1 {
            return Err(Error::Parity {
                family: family.to_string(),
                partition: p.to_string(),
                rule: rule.to_string(),
            });
        }
    }
    Ok(())
}

/// Checks both the size and the parity rule of `p` for the type `t`.
pub fn check_partition(t: LieType, p: &Partition) -> Result<()> {
    let n = standard_dim(t.family(), t.rank())?;
    if p.n() != n {
        return Err(Error::Domain(format!("{t} needs a partition of {n}, got {p} of {}", p.n())));
    }
    check_parity(t.family(), p)
}

/// All partitions of `n` in reverse lexicographic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions labelling nilpotent orbits of the classical family of the
/// given rank, acting on a standard representation of dimension `n`.
///
/// The rank is not required to satisfy the [`LieType`] bounds so that the
/// small isogenous cases (`D2`, `D1`) can be enumerated too.
pub fn enumerate_partitions(family: Family, rank: usize, n: usize) -> Result<Vec<Partition>> {
    if rank == 0 {
        return Err(Error::RankDomain {
            family: family.to_string(),
            rank,
        });
    }
    let expected = standard_dim(family, rank)?;
    if n != expected {
        return Err(Error::Domain(format!(
            "{family}{rank} acts on a space of dimension {expected}, not {n}"
        )));
    }
    Ok(all_partitions(n)
        .into_iter()
        .filter(|p| check_parity(family, p).is_ok())
        .collect())
}

/// All orbit labels of a classical type; very even partitions in type D
/// appear twice.
pub fn orbit_labels(t: LieType) -> Result<Vec<OrbitLabel>> {
    let n = standard_dim(t.family(), t.rank())?;
    let mut out = Vec::new();
    for p in enumerate_partitions(t.family(), t.rank(), n)? {
        if t.family() == Family::D && p.is_very_even() {
            out.push(OrbitLabel {
                partition: p.clone(),
                very_even: Some(VeryEvenClass::I),
            });
            out.push(OrbitLabel {
                partition: p,
                very_even: Some(VeryEvenClass::II),
            });
        } else {
            out.push(OrbitLabel::plain(p));
        }
    }
    Ok(out)
}

/// Weighted Dynkin diagram of the orbit with partition `p`. For a very even
/// partition in type D this is the diagram of the class I orbit.
pub fn weighted_dynkin_from_partition(t: LieType, p: &Partition) -> Result<WeightedDynkinDiagram> {
    check_partition(t, p)?;
    let n = t.rank();
    let w = p.h_weights();
    let h = &w[..if t.family() == Family::A { n + 1 } else { n }];
    let mut labels: Vec<i64> = (0..n.min(h.len() - 1)).map(|k| h[k] - h[k + 1]).collect();
    match t.family() {
        Family::A => {}
        Family::B => labels.push(h[n - 1]),
        Family::C => labels.push(2 * h[n - 1]),
        Family::D => labels.push(h[n - 2] + h[n - 1]),
        _ => unreachable!("checked by check_partition"),
    }
    labels.truncate(n);
    let labels = labels
        .into_iter()
        .map(|l| {
            u8::try_from(l)
                .ok()
                .filter(|&l| l <= 2)
                .ok_or_else(|| Error::Consistency(format!("label {l} computed for {p} in {t}")))
        })
        .collect::<Result<Vec<u8>>>()?;
    WeightedDynkinDiagram::new(t, labels)
}

/// Weighted Dynkin diagram of an orbit label, including class II very even
/// orbits whose diagram swaps the last two labels.
pub fn weighted_dynkin_for_label(t: LieType, label: &OrbitLabel) -> Result<WeightedDynkinDiagram> {
    let w = weighted_dynkin_from_partition(t, &label.partition)?;
    match label.very_even {
        None => Ok(w),
        Some(class) => {
            if t.family() != Family::D || !label.partition.is_very_even() {
                return Err(Error::Domain(format!("{label} is not a very even orbit of type D")));
            }
            if class == VeryEvenClass::I {
                return Ok(w);
            }
            let mut labels = w.labels().to_vec();
            let n = labels.len();
            labels.swap(n - 2, n - 1);
            WeightedDynkinDiagram::new(t, labels)
        }
    }
}

/// Signed Young diagram data of a real nilpotent orbit.
///
/// `signs[i] = (p_i, q_i)` counts rows of length `i` whose leftmost box is
/// `+` or `-`. For the quaternionic families (`su*`, `so*`, `sp(p,q)`) the
/// rows describe the reduced diagram and each row accounts for two rows of
/// the complex partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPartitionData {
    pub form: RealForm,
    pub signs: BTreeMap<usize, (usize, usize)>,
}

impl SignedPartitionData {
    /// The reduced multiplicities `r_i = p_i + q_i`.
    pub fn r(&self, i: usize) -> usize {
        self.signs.get(&i).map_or(0, |&(p, q)| p + q)
    }

    /// The complex partition underlying the data.
    pub fn partition(&self) -> Result<Partition> {
        let k = if self.form.is_quaternionic() { 2 } else { 1 };
        let mults = self.signs.iter().map(|(&i, &(p, q))| (i, k * (p + q))).filter(|&(_, r)| r > 0).collect();
        Partition::from_multiplicities(&mults)
    }

    /// Number of `+` boxes in the diagram.
    pub fn plus_count(&self) -> usize {
        self.signs.iter().map(|(&i, &(p, q))| i.div_ceil(2) * p + (i / 2) * q).sum()
    }
}

impl fmt::Display for SignedPartitionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&i, &(p, q)) in self.signs.iter().rev() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{i}:(+{p},-{q})")?;
        }
        Ok(())
    }
}

enum SignRule {
    /// Plus count must equal the given value.
    Signature(usize),
    /// Plus count must equal the given value and rows of the given parity
    /// come in `+`/`-` pairs.
    PairedSignature { paired_parity: usize, plus: usize },
    /// Any split of each multiplicity.
    Free,
    /// One datum with every row marked `+`.
    Unsigned,
}

/// All signed data for `form` lying over the complex partition `p`.
///
/// Returns an empty list when `p` does not come from a nilpotent orbit of
/// `form` (wrong size, parity, or odd multiplicities for the quaternionic
/// families).
pub fn enumerate_signed_data(form: RealForm, p: &Partition) -> Vec<SignedPartitionData> {
    let Ok(t) = form.complex_type() else {
        return Vec::new();
    };
    if check_partition(t, p).is_err() {
        return Vec::new();
    }
    let mut reduced = p.multiplicities();
    if form.is_quaternionic() {
        if reduced.values().any(|r| r % 2 == 1) {
            return Vec::new();
        }
        for r in reduced.values_mut() {
            *r /= 2;
        }
    }
    let rule = match form {
        RealForm::Su { p, .. } | RealForm::Sp { p, .. } => SignRule::Signature(p),
        RealForm::So { p, .. } => SignRule::PairedSignature {
            paired_parity: 0,
            plus: p,
        },
        RealForm::SpR { n } => SignRule::PairedSignature {
            paired_parity: 1,
            plus: n,
        },
        RealForm::SoStar { .. } => SignRule::Free,
        RealForm::Sl { .. } | RealForm::SuStar { .. } => SignRule::Unsigned,
        RealForm::Exceptional { .. } => return Vec::new(),
    };
    let rows: Vec<(usize, usize)> = reduced.into_iter().rev().collect();
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    signed_rec(form, &rule, &rows, 0, 0, &mut cur, &mut out);
    out
}

fn signed_rec(
    form: RealForm,
    rule: &SignRule,
    rows: &[(usize, usize)],
    idx: usize,
    plus: usize,
    cur: &mut BTreeMap<usize, (usize, usize)>,
    out: &mut Vec<SignedPartitionData>,
) {
    if idx == rows.len() {
        let ok = match *rule {
            SignRule::Signature(target) | SignRule::PairedSignature { plus: target, .. } => plus == target,
            SignRule::Free | SignRule::Unsigned => true,
        };
        if ok {
            out.push(SignedPartitionData {
                form,
                signs: cur.clone(),
            });
        }
        return;
    }
    let (i, r) = rows[idx];
    let choices: Vec<usize> = match *rule {
        SignRule::Unsigned => vec![r],
        SignRule::PairedSignature { paired_parity, .. } if i % 2 == paired_parity => {
            if r % 2 == 1 {
                return;
            }
            vec![r / 2]
        }
        _ => (0..=r).rev().collect(),
    };
    for pi in choices {
        let qi = r - pi;
        let gained = i.div_ceil(2) * pi + (i / 2) * qi;
        if let SignRule::Signature(t) | SignRule::PairedSignature { plus: t, .. } = *rule {
            if plus + gained > t {
                continue;
            }
        }
        cur.insert(i, (pi, qi));
        signed_rec(form, rule, rows, idx + 1, plus + gained, cur, out);
        cur.remove(&i);
    }
}
