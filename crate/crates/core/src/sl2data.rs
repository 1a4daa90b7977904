//! Multiplicities of the adjoint sl2-module and the closed dimension
//! formulas for classical algebras.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{check_partition, Partition};
use crate::rootsys::{Family, GradingDims, LieType};

/// The adjoint sl2-module data of a triple: `n[j]` copies of the irreducible
/// module of highest weight `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Data {
    /// Nonzero multiplicities only.
    pub n: BTreeMap<i32, i64>,
    pub dim_c: i64,
    pub dim_g0: i64,
    pub dim_v_rho: i64,
    pub dim_g: i64,
}

impl Sl2Data {
    pub fn from_multiplicities(n: BTreeMap<i32, i64>) -> Result<Self> {
        if let Some((&j, &v)) = n.iter().find(|(&j, &v)| v < 0 || j < 0) {
            return Err(Error::InconsistentGrading { weight: j, value: v });
        }
        let n: BTreeMap<i32, i64> = n.into_iter().filter(|&(_, v)| v != 0).collect();
        let dim_c = n.get(&0).copied().unwrap_or(0);
        let dim_g0 = n.iter().filter(|(j, _)| *j % 2 == 0).map(|(_, v)| v).sum();
        let dim_v_rho = n.values().sum();
        let dim_g = n.iter().map(|(&j, &v)| v * (j as i64 + 1)).sum();
        Ok(Sl2Data {
            n,
            dim_c,
            dim_g0,
            dim_v_rho,
            dim_g,
        })
    }

    pub fn get(&self, j: i32) -> i64 {
        self.n.get(&j).copied().unwrap_or(0)
    }

    /// `sum_{even j > 0} n_j`, the dimension of the nontrivial even highest
    /// weight spaces.
    pub fn dim_v_even(&self) -> i64 {
        self.dim_g0 - self.dim_c
    }

    pub fn max_weight(&self) -> i32 {
        self.n.keys().copied().max().unwrap_or(0)
    }
}

/// `n_j = dim g_j - dim g_{j+2}` for `j >= 0`.
pub fn module_multiplicities(g: &GradingDims) -> Result<Sl2Data> {
    let mut n = BTreeMap::new();
    for j in 0..=g.max_weight() {
        let v = g.get(j) as i64 - g.get(j + 2) as i64;
        if v < 0 {
            return Err(Error::InconsistentGrading { weight: j, value: v });
        }
        if v > 0 {
            n.insert(j, v);
        }
    }
    Sl2Data::from_multiplicities(n)
}

/// True when every odd multiplicity vanishes.
pub fn is_even_triple(d: &Sl2Data) -> bool {
    d.n.keys().all(|j| j % 2 == 0)
}

fn classical(t: LieType, p: &Partition) -> Result<Family> {
    if !t.family().is_classical() {
        return Err(Error::Domain(format!("{t} is not classical")));
    }
    check_partition(t, p)?;
    Ok(t.family())
}

/// Dimension of the highest weight space `V_rho = ker ad_e`, from the dual
/// partition `s`: `sum s_i^2 - 1` in type A, `(sum s_i^2 + sum_{i odd} r_i)/2`
/// in type C and `(sum s_i^2 - sum_{i odd} r_i)/2` in types B and D.
pub fn dim_v_rho_formula(t: LieType, p: &Partition) -> Result<i64> {
    let family = classical(t, p)?;
    let s2: i64 = p.dual().parts().iter().map(|&s| (s * s) as i64).sum();
    let odd: i64 = p.multiplicities().iter().filter(|(i, _)| *i % 2 == 1).map(|(_, &r)| r as i64).sum();
    Ok(match family {
        Family::A => s2 - 1,
        Family::C => (s2 + odd) / 2,
        _ => (s2 - odd) / 2,
    })
}

/// `dim g_0`: `dim V_rho` minus the contribution of pairs of parts of
/// opposite parity (`2 i r_i r_j` in type A, `i r_i r_j` otherwise, for
/// `i < j`).
pub fn dim_g0_formula(t: LieType, p: &Partition) -> Result<i64> {
    let family = classical(t, p)?;
    let factor = if family == Family::A { 2 } else { 1 };
    let mults: Vec<(usize, usize)> = p.multiplicities().into_iter().collect();
    let mut correction = 0i64;
    for (a, &(i, ri)) in mults.iter().enumerate() {
        for &(j, rj) in &mults[a + 1..] {
            if (i + j) % 2 == 1 {
                correction += factor * (i * ri * rj) as i64;
            }
        }
    }
    Ok(dim_v_rho_formula(t, p)? - correction)
}

/// Dimension of the centralizer of the triple (the reductive centralizer).
pub fn dim_c_formula(t: LieType, p: &Partition) -> Result<i64> {
    let family = classical(t, p)?;
    let mut total = 0i64;
    for (i, r) in p.multiplicities() {
        let r = r as i64;
        total += match family {
            Family::A => r * r,
            Family::C if i % 2 == 1 => r * (r + 1) / 2,
            Family::C => r * (r - 1) / 2,
            _ if i % 2 == 1 => r * (r - 1) / 2,
            _ => r * (r + 1) / 2,
        };
    }
    if family == Family::A {
        total -= 1;
    }
    Ok(total)
}

/// Multiplicities of the adjoint module from the Clebsch-Gordan rule
/// applied to the standard representation: `V (x) V* - 1` in type A,
/// `Lambda^2 V` in types B and D, `S^2 V` in type C.
pub fn clebsch_gordan_multiplicities(t: LieType, p: &Partition) -> Result<BTreeMap<i32, i64>> {
    let family = classical(t, p)?;
    let mut n: BTreeMap<i32, i64> = BTreeMap::new();
    let mut add = |w: i64, k: i64| {
        *n.entry(w as i32).or_insert(0) += k;
    };
    let degrees: Vec<i64> = p.parts().iter().map(|&i| i as i64 - 1).collect();
    let tensor = |x: i64, y: i64, add: &mut dyn FnMut(i64, i64)| {
        for k in 0..=x.min(y) {
            add(x + y - 2 * k, 1);
        }
    };
    match family {
        Family::A => {
            for &x in &degrees {
                for &y in &degrees {
                    tensor(x, y, &mut add);
                }
            }
            add(0, -1);
        }
        _ => {
            let (start, step) = if family == Family::C { (0, 4) } else { (2, 4) };
            for (a, &x) in degrees.iter().enumerate() {
                let mut w = 2 * x - start;
                while w >= 0 {
                    add(w, 1);
                    w -= step;
                }
                for &y in &degrees[a + 1..] {
                    tensor(x, y, &mut add);
                }
            }
        }
    }
    Ok(n.into_iter().filter(|&(_, v)| v != 0).collect())
}
