//! Explicit integer matrix models of sl2-triples in the classical algebras.
//!
//! Each part `i` of the partition gives a Jordan block with basis
//! `v_0, ..., v_{i-1}` on which `h v_k = (i-1-2k) v_k`, `e v_k = v_{k-1}` and
//! `f v_k = (k+1)(i-1-k) v_{k+1}`. For types B, C and D the invariant form
//! pairs `v_k` with `v_{i-1-k}` with sign `(-1)^k`; a block of the wrong
//! parity for the form is paired with a second block of the same size. All
//! multiplicities are computed as nullities of exact integer systems, with
//! no reference to root systems or closed formulas.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use crate::linalg::Mat;
use crate::linalg::nullity;
use crate::orbits::{check_partition, Partition, SignedPartitionData};
use crate::realforms::RealForm;
use crate::rootsys::{Family, LieType};
use crate::sl2data::Sl2Data;

/// A Jordan block of the standard representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub size: usize,
    pub offset: usize,
    /// The block paired with this one by the invariant form, if not itself.
    pub partner: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSl2Triple {
    pub e: Mat,
    pub h: Mat,
    pub f: Mat,
    pub partition: Partition,
    pub ambient: LieType,
    /// Gram matrix of the invariant form (types B, C, D).
    pub gram: Option<Mat>,
    pub blocks: Vec<Block>,
}

/// Sparse matrix: list of `(row, col, value)`.
type Sparse = Vec<(usize, usize, i64)>;

impl MatrixSl2Triple {
    pub fn dim(&self) -> usize {
        self.h.size()
    }

    fn weights(&self) -> Vec<i64> {
        (0..self.dim()).map(|a| self.h.get(a, a)).collect()
    }

    /// Partner index under the invariant form and the sign `g_a` with
    /// `G[a][pi(a)] = g_a`.
    fn pairing(&self) -> Option<(Vec<usize>, Vec<i64>)> {
        let g = self.gram.as_ref()?;
        let n = self.dim();
        let mut pi = vec![0; n];
        let mut sg = vec![0; n];
        for a in 0..n {
            let b = (0..n).find(|&b| g.get(a, b) != 0).expect("nondegenerate form");
            pi[a] = b;
            sg[a] = g.get(a, b);
        }
        Some((pi, sg))
    }

    /// Basis of the weight-`j` space of the ambient algebra, plus extra
    /// linear constraints (the trace in type A).
    fn weight_basis(&self, j: i64) -> (Vec<Sparse>, Vec<Vec<i64>>) {
        let n = self.dim();
        let w = self.weights();
        let mut basis = Vec::new();
        let mut extra = Vec::new();
        match self.pairing() {
            None => {
                for a in 0..n {
                    for b in 0..n {
                        if w[a] - w[b] == j {
                            basis.push(vec![(a, b, 1)]);
                        }
                    }
                }
                if j == 0 {
                    let row = basis.iter().map(|x: &Sparse| i64::from(x[0].0 == x[0].1)).collect();
                    extra.push(row);
                }
            }
            Some((pi, sg)) => {
                // X = G^T Y with Y skew (B, D) or symmetric (C).
                let symmetric = self.ambient.family() == Family::C;
                for a in 0..n {
                    for b in a..n {
                        if a == b && !symmetric {
                            continue;
                        }
                        if -w[a] - w[b] != j {
                            continue;
                        }
                        let mut x = vec![(pi[a], b, sg[a])];
                        if a != b {
                            let s = if symmetric { 1 } else { -1 };
                            x.push((pi[b], a, s * sg[b]));
                        }
                        basis.push(x);
                    }
                }
            }
        }
        (basis, extra)
    }

    fn ad_e(&self, x: &Sparse) -> Sparse {
        let n = self.dim();
        let mut out = Vec::new();
        for &(r, c, v) in x {
            for i in 0..n {
                let e = self.e.get(i, r);
                if e != 0 {
                    out.push((i, c, e * v));
                }
            }
            for jj in 0..n {
                let e = self.e.get(c, jj);
                if e != 0 {
                    out.push((r, jj, -e * v));
                }
            }
        }
        out
    }
}

fn check_bracket(t: &MatrixSl2Triple) -> Result<()> {
    let (e, h, f) = (&t.e, &t.h, &t.f);
    if h.bracket(e) != e.scale(2) || h.bracket(f) != f.scale(-2) || e.bracket(f) != *h {
        return Err(Error::Consistency(format!("bracket relations fail for {}", t.partition)));
    }
    for x in [e, h, f] {
        let ok = match &t.gram {
            None => x.trace() == 0,
            Some(g) => x.transpose().mul(g).add(&g.mul(x)).is_zero(),
        };
        if !ok {
            return Err(Error::Consistency(format!("triple for {} leaves {}", t.partition, t.ambient)));
        }
    }
    Ok(())
}

/// Builds the Jordan-type triple of the partition in the defining
/// representation of `t`.
pub fn build_matrix_triple(t: LieType, p: &Partition) -> Result<MatrixSl2Triple> {
    if !t.family().is_classical() {
        return Err(Error::Domain(format!("{t} has no matrix model")));
    }
    check_partition(t, p)?;
    let n = p.n();
    let mut e = Mat::zeros(n);
    let mut h = Mat::zeros(n);
    let mut f = Mat::zeros(n);
    let mut blocks = Vec::new();
    let mut offset = 0;
    for &i in p.parts() {
        for k in 0..i {
            h.set(offset + k, offset + k, i as i64 - 1 - 2 * k as i64);
            if k > 0 {
                e.set(offset + k - 1, offset + k, 1);
            }
            if k + 1 < i {
                f.set(offset + k + 1, offset + k, ((k + 1) * (i - 1 - k)) as i64);
            }
        }
        blocks.push(Block {
            size: i,
            offset,
            partner: None,
        });
        offset += i;
    }
    let gram = match t.family() {
        Family::A => None,
        family => {
            let eps: i64 = if family == Family::C { -1 } else { 1 };
            let self_paired_parity = if family == Family::C { 0 } else { 1 };
            let mut g = Mat::zeros(n);
            let mut b = 0;
            while b < blocks.len() {
                let Block { size: i, offset: o, .. } = blocks[b];
                if i % 2 == self_paired_parity {
                    for k in 0..i {
                        g.set(o + k, o + i - 1 - k, if k % 2 == 0 { 1 } else { -1 });
                    }
                    b += 1;
                } else {
                    let o2 = blocks[b + 1].offset;
                    for k in 0..i {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        g.set(o + k, o2 + i - 1 - k, sign);
                        g.set(o2 + i - 1 - k, o + k, eps * sign);
                    }
                    blocks[b].partner = Some(b + 1);
                    blocks[b + 1].partner = Some(b);
                    b += 2;
                }
            }
            Some(g)
        }
    };
    let triple = MatrixSl2Triple {
        e,
        h,
        f,
        partition: p.clone(),
        ambient: t,
        gram,
        blocks,
    };
    check_bracket(&triple)?;
    Ok(triple)
}

/// Sparse maps applied to basis elements to form constraint rows.
fn nullity_of(basis: &[Sparse], maps: &[&dyn Fn(&Sparse) -> Sparse], extra: &[Vec<i64>]) -> Result<usize> {
    let mut index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut rows: Vec<Vec<i64>> = extra.to_vec();
    for (col, x) in basis.iter().enumerate() {
        for (k, map) in maps.iter().enumerate() {
            for (r, c, v) in map(x) {
                let idx = *index.entry((k, r, c)).or_insert_with(|| {
                    rows.push(vec![0; basis.len()]);
                    rows.len() - 1
                });
                rows[idx][col] += v;
            }
        }
    }
    nullity(&rows, basis.len())
}

/// Ad_h weights of the ambient algebra with their multiplicities.
pub fn ad_h_spectrum(m: &MatrixSl2Triple) -> BTreeMap<i64, usize> {
    let top = 2 * (m.partition.parts()[0] as i64 - 1);
    let mut out = BTreeMap::new();
    for j in -top..=top {
        let (basis, extra) = m.weight_basis(j);
        let d = basis.len() - extra.len().min(basis.len());
        if d > 0 {
            out.insert(j, d);
        }
    }
    out
}

/// `n_j = dim (ker ad_e ∩ g_j)`, computed on the matrix model.
pub fn oracle_sl2_data(m: &MatrixSl2Triple) -> Result<Sl2Data> {
    for a in 0..m.dim() {
        for b in 0..m.dim() {
            if a != b && m.h.get(a, b) != 0 {
                return Err(Error::Consistency("h is not diagonal".into()));
            }
        }
    }
    let top = 2 * (m.partition.parts()[0] as i64 - 1);
    let ad_e = |x: &Sparse| m.ad_e(x);
    let mut n = BTreeMap::new();
    for j in 0..=top {
        let (basis, extra) = m.weight_basis(j);
        if basis.is_empty() {
            continue;
        }
        let k = nullity_of(&basis, &[&ad_e], &extra)?;
        if k > 0 {
            n.insert(j as i32, k as i64);
        }
    }
    Sl2Data::from_multiplicities(n)
}

/// An involution of the ambient algebra fixing `h` and negating `e` and
/// `f`, whose fixed algebra is the complexified maximal compact subalgebra
/// of a real form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockInvolutionKind {
    /// `X -> S X S` with `S` diagonal with entries `signs`.
    Inner { signs: Vec<i64> },
    /// `X -> -J X^T J` with `J` the permutation matrix of `perm`.
    Transpose { perm: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockInvolution {
    pub kind: BlockInvolutionKind,
    pub dim_h: usize,
    pub dim_m: usize,
}

impl BlockInvolution {
    fn apply_sparse(&self, x: &Sparse) -> Sparse {
        match &self.kind {
            BlockInvolutionKind::Inner { signs } => x.iter().map(|&(r, c, v)| (r, c, signs[r] * signs[c] * v)).collect(),
            BlockInvolutionKind::Transpose { perm } => x.iter().map(|&(r, c, v)| (perm[c], perm[r], -v)).collect(),
        }
    }

    pub fn apply(&self, x: &Mat) -> Mat {
        let n = x.size();
        let mut out = Mat::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let v = x.get(r, c);
                if v != 0 {
                    for (a, b, w) in self.apply_sparse(&vec![(r, c, v)]) {
                        out.set(a, b, out.get(a, b) + w);
                    }
                }
            }
        }
        out
    }
}

fn signs_for(m: &MatrixSl2Triple, s: &SignedPartitionData) -> Result<Vec<i64>> {
    let bad = |why: &str| Error::Normality(format!("signed data {s} on {}: {why}", m.partition));
    let mut remaining: BTreeMap<usize, (usize, usize)> = s.signs.clone();
    let mut start = vec![0i64; m.blocks.len()];
    for (b, blk) in m.blocks.iter().enumerate() {
        if start[b] != 0 {
            continue;
        }
        let entry = remaining.get_mut(&blk.size).ok_or_else(|| bad("row length missing"))?;
        match blk.partner {
            Some(b2) => {
                if entry.0 == 0 || entry.1 == 0 {
                    return Err(bad("paired rows need one + and one - start"));
                }
                entry.0 -= 1;
                entry.1 -= 1;
                start[b] = 1;
                start[b2] = -1;
            }
            None => {
                if entry.0 > 0 {
                    entry.0 -= 1;
                    start[b] = 1;
                } else if entry.1 > 0 {
                    entry.1 -= 1;
                    start[b] = -1;
                } else {
                    return Err(bad("too few rows"));
                }
            }
        }
    }
    if remaining.values().any(|&(p, q)| p + q > 0) {
        return Err(bad("too many rows"));
    }
    let mut signs = vec![0i64; m.dim()];
    for (b, blk) in m.blocks.iter().enumerate() {
        for k in 0..blk.size {
            signs[blk.offset + k] = if k % 2 == 0 { start[b] } else { -start[b] };
        }
    }
    Ok(signs)
}

/// The involution realizing `form` for which the triple `m` is normal.
pub fn block_involution(m: &MatrixSl2Triple, s: &SignedPartitionData) -> Result<BlockInvolution> {
    let t = s.form.complex_type()?;
    if t != m.ambient {
        return Err(Error::Normality(format!("{} does not complexify to {}", s.form, m.ambient)));
    }
    if s.partition()? != m.partition {
        return Err(Error::Normality(format!("signed data {s} do not lie over {}", m.partition)));
    }
    let kind = match s.form {
        RealForm::Su { .. } | RealForm::So { .. } | RealForm::SpR { .. } => {
            BlockInvolutionKind::Inner { signs: signs_for(m, s)? }
        }
        RealForm::Sl { .. } => {
            let mut perm = vec![0; m.dim()];
            for blk in &m.blocks {
                for k in 0..blk.size {
                    perm[blk.offset + k] = blk.offset + blk.size - 1 - k;
                }
            }
            BlockInvolutionKind::Transpose { perm }
        }
        other => {
            return Err(Error::Normality(format!("no block involution model for {other}")));
        }
    };
    let mut inv = BlockInvolution { kind, dim_h: 0, dim_m: 0 };
    for x in [&m.e, &m.f] {
        if inv.apply(x) != x.scale(-1) {
            return Err(Error::Normality(format!("sigma does not negate e and f for {s}")));
        }
    }
    if inv.apply(&m.h) != m.h {
        return Err(Error::Normality(format!("sigma does not fix h for {s}")));
    }
    let top = 2 * (m.partition.parts()[0] as i64 - 1);
    let plus = |x: &Sparse| {
        let mut y = inv.apply_sparse(x);
        y.extend(x.iter().map(|&(r, c, v)| (r, c, -v)));
        y
    };
    let minus = |x: &Sparse| {
        let mut y = inv.apply_sparse(x);
        y.extend(x.iter().copied());
        y
    };
    let (mut dh, mut dm) = (0, 0);
    for j in -top..=top {
        let (basis, extra) = m.weight_basis(j);
        if basis.is_empty() {
            continue;
        }
        dh += nullity_of(&basis, &[&plus], &extra)?;
        dm += nullity_of(&basis, &[&minus], &extra)?;
    }
    inv.dim_h = dh;
    inv.dim_m = dm;
    Ok(inv)
}

/// Splitting of each highest weight space `V_j` into `σ`-eigenspaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaSplit {
    /// `j -> (dim (h ∩ V_j), dim (m ∩ V_j))`.
    pub splits: BTreeMap<i32, (usize, usize)>,
    /// `dim m - dim h` assembled from the highest weight spaces.
    pub dim_m_minus_dim_h: i64,
    pub involution: BlockInvolution,
}

pub fn oracle_sigma_split(m: &MatrixSl2Triple, s: &SignedPartitionData) -> Result<SigmaSplit> {
    let inv = block_involution(m, s)?;
    let ad_e = |x: &Sparse| m.ad_e(x);
    let plus = |x: &Sparse| {
        let mut y = inv.apply_sparse(x);
        y.extend(x.iter().map(|&(r, c, v)| (r, c, -v)));
        y
    };
    let minus = |x: &Sparse| {
        let mut y = inv.apply_sparse(x);
        y.extend(x.iter().copied());
        y
    };
    let top = 2 * (m.partition.parts()[0] as i64 - 1);
    let mut splits = BTreeMap::new();
    let mut diff = 0i64;
    for j in 0..=top {
        let (basis, extra) = m.weight_basis(j);
        if basis.is_empty() {
            continue;
        }
        let vh = nullity_of(&basis, &[&ad_e, &plus], &extra)?;
        let vm = nullity_of(&basis, &[&ad_e, &minus], &extra)?;
        if vh + vm > 0 {
            splits.insert(j as i32, (vh, vm));
        }
        // A module of odd dimension contributes the sign of its lowest
        // weight vector, the others contribute nothing.
        if j % 2 == 0 {
            diff += vm as i64 - vh as i64;
        }
    }
    Ok(SigmaSplit {
        splits,
        dim_m_minus_dim_h: diff,
        involution: inv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::enumerate_signed_data;

    fn lt(f: Family, r: usize) -> LieType {
        LieType::new(f, r).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn principal_sl3_matrices() {
        let m = build_matrix_triple(lt(Family::A, 2), &part("3")).unwrap();
        let e = Mat::unit(3, 0, 1).add(&Mat::unit(3, 1, 2));
        let f = Mat::unit(3, 1, 0).add(&Mat::unit(3, 2, 1)).scale(2);
        assert_eq!(m.e, e);
        assert_eq!(m.f, f);
        assert_eq!(m.h, Mat::diag(&[2, 0, -2]));
        let d = oracle_sl2_data(&m).unwrap();
        assert_eq!(d.n, [(2, 1), (4, 1)].into_iter().collect());
    }

    #[test]
    fn standard_sl2() {
        let m = build_matrix_triple(lt(Family::A, 1), &part("2")).unwrap();
        assert_eq!(m.e, Mat::unit(2, 0, 1));
        assert_eq!(m.f, Mat::unit(2, 1, 0));
        assert_eq!(m.h, Mat::diag(&[1, -1]));
    }

    #[test]
    fn sl5_221_spectrum_and_data() {
        let m = build_matrix_triple(lt(Family::A, 4), &part("2,2,1")).unwrap();
        let spectrum = ad_h_spectrum(&m);
        assert_eq!(spectrum, [(-2, 4), (-1, 4), (0, 8), (1, 4), (2, 4)].into_iter().collect());
        let d = oracle_sl2_data(&m).unwrap();
        assert_eq!(d.n, [(0, 4), (1, 4), (2, 4)].into_iter().collect());
    }

    #[test]
    fn so6_data() {
        let m = build_matrix_triple(lt(Family::D, 3), &part("2,2,1,1")).unwrap();
        let d = oracle_sl2_data(&m).unwrap();
        assert_eq!(d.n, [(0, 4), (1, 4), (2, 1)].into_iter().collect());
    }

    #[test]
    fn forms_preserved_in_all_types() {
        for (f, r) in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let t = lt(f, r);
            for p in crate::orbits::enumerate_partitions(f, r, t.standard_dim().unwrap()).unwrap() {
                let m = build_matrix_triple(t, &p).unwrap();
                let total: usize = ad_h_spectrum(&m).values().sum();
                assert_eq!(total, t.dim(), "{t} {p}");
            }
        }
    }

    #[test]
    fn su12_split() {
        let form = RealForm::Su { p: 1, q: 2 };
        let p = part("2,1");
        let m = build_matrix_triple(lt(Family::A, 2), &p).unwrap();
        let data = enumerate_signed_data(form, &p);
        assert_eq!(data.len(), 2);
        for d in &data {
            let split = oracle_sigma_split(&m, d).unwrap();
            assert_eq!(split.splits[&1], (1, 1));
            assert_eq!(split.involution.dim_h, 4);
            assert_eq!(split.involution.dim_m, 4);
        }
    }

    #[test]
    fn su22_even_split() {
        let form = RealForm::Su { p: 2, q: 2 };
        let p = part("2,2");
        let m = build_matrix_triple(lt(Family::A, 3), &p).unwrap();
        let data = enumerate_signed_data(form, &p);
        let definite = data.iter().find(|d| d.signs[&2].1 == 0).unwrap();
        let split = oracle_sigma_split(&m, definite).unwrap();
        assert!(!split.splits.contains_key(&1));
        assert_eq!(split.splits[&2], (0, 4));
    }

    #[test]
    fn su23_difference() {
        let form = RealForm::Su { p: 2, q: 3 };
        let p = part("2,2,1");
        let m = build_matrix_triple(lt(Family::A, 4), &p).unwrap();
        for d in enumerate_signed_data(form, &p) {
            let split = oracle_sigma_split(&m, &d).unwrap();
            assert_eq!(split.dim_m_minus_dim_h, 0);
            assert_eq!(split.involution.dim_h, 12);
        }
    }

    #[test]
    fn mismatched_signs_are_not_normal() {
        let p = part("2,2,1");
        let m = build_matrix_triple(lt(Family::B, 2), &p).unwrap();
        let mut d = enumerate_signed_data(RealForm::So { p: 2, q: 3 }, &p).remove(0);
        d.signs.insert(2, (2, 0));
        assert!(matches!(oracle_sigma_split(&m, &d), Err(Error::Normality(_))));
    }
}
