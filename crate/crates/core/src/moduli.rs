//! Dimension counts for Slodowy slices in Higgs bundle moduli spaces and the
//! data of the Cayley correspondence for odd magical triples.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{build_matrix_triple, oracle_sigma_split};
use crate::orbits::{Partition, SignedPartitionData};
use crate::realforms::{centralizer_realform, describe, milnor_wood, RealForm, RealFormDescriptor};
use crate::rootsys::Family;

fn check_genus(genus: u32) -> Result<()> {
    if genus < 2 {
        return Err(Error::Domain(format!("genus must be at least 2, got {genus}")));
    }
    Ok(())
}

/// Real dimension of the Slodowy parameter space: the centralizer part
/// contributes `dim (c ∩ h)` and a highest weight space of weight `w`
/// contributes `w + 1` per dimension, all scaled by `2(g-1)`.
pub fn slodowy_parameter_dim(genus: u32, dim_c_cap_h: i64, a: &BTreeMap<i32, i64>) -> Result<i64> {
    check_genus(genus)?;
    if dim_c_cap_h < 0 || a.iter().any(|(&w, &v)| v < 0 || w < 0) {
        return Err(Error::Domain("dimensions and weights must be nonnegative".into()));
    }
    let sections: i64 = a.iter().map(|(&w, &v)| v * (w as i64 + 1)).sum();
    Ok(2 * (genus as i64 - 1) * (dim_c_cap_h + sections))
}

/// `2(g-1) dim_R G`.
pub fn expected_dim(genus: u32, d: &RealFormDescriptor) -> Result<i64> {
    check_genus(genus)?;
    Ok(2 * (genus as i64 - 1) * d.dim_g_real)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlodowyReport {
    pub form: RealForm,
    pub partition: Option<Partition>,
    pub signed: Option<SignedPartitionData>,
    pub genus: u32,
    pub dim_c_cap_h: i64,
    /// `w -> dim (m ∩ V_w)` for `w > 0`.
    pub a: BTreeMap<i32, i64>,
    pub slodowy_param_dim: i64,
    pub expected_dim: i64,
    pub gap: i64,
    pub milnor_wood: Option<i64>,
}

/// Assembles a report from the split of the highest weight spaces.
pub fn report_from_split(
    genus: u32,
    form: RealForm,
    dim_c_cap_h: i64,
    a: BTreeMap<i32, i64>,
) -> Result<SlodowyReport> {
    let d = describe(form)?;
    let param = slodowy_parameter_dim(genus, dim_c_cap_h, &a)?;
    let expected = expected_dim(genus, &d)?;
    let mw = if d.hermitian { Some(milnor_wood(&d, genus)?) } else { None };
    Ok(SlodowyReport {
        form,
        partition: None,
        signed: None,
        genus,
        dim_c_cap_h,
        a,
        slodowy_param_dim: param,
        expected_dim: expected,
        gap: expected - param,
        milnor_wood: mw,
    })
}

/// Rigidity report of a real nilpotent orbit of a classical form. The
/// highest weight splits come from the matrix model, so only the forms it
/// covers (su, sl, so, sp(2n,R)) are supported.
pub fn rigidity_report(genus: u32, form: RealForm, p: &Partition, s: &SignedPartitionData) -> Result<SlodowyReport> {
    check_genus(genus)?;
    if matches!(form, RealForm::Exceptional { .. }) {
        return Err(Error::MissingData(format!(
            "{form}: rigidity reports for exceptional forms come from dataset records"
        )));
    }
    if s.form != form || s.partition()? != *p {
        return Err(Error::Domain(format!("signed data {s} do not describe an orbit of {form} over {p}")));
    }
    let t = form.complex_type()?;
    let m = build_matrix_triple(t, p)?;
    let split = oracle_sigma_split(&m, s)?;
    let dim_c_cap_h = split.splits.get(&0).map_or(0, |&(h, _)| h as i64);
    let centralizer = centralizer_realform(form, s)?;
    if centralizer.max_compact_dim() != dim_c_cap_h {
        return Err(Error::Consistency(format!(
            "{form} {s}: centralizer {centralizer} has maximal compact dimension {} but the matrix model gives {dim_c_cap_h}",
            centralizer.max_compact_dim()
        )));
    }
    let a = split
        .splits
        .iter()
        .filter(|(&w, &(_, m))| w > 0 && m > 0)
        .map(|(&w, &(_, m))| (w, m as i64))
        .collect();
    let mut report = report_from_split(genus, form, dim_c_cap_h, a)?;
    report.partition = Some(p.clone());
    report.signed = Some(s.clone());
    Ok(report)
}

/// A simple or abelian factor of a real Lie algebra, with its dimension and
/// the dimension of a maximal compact subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyFactor {
    pub name: String,
    pub dim: i64,
    pub max_compact_dim: i64,
}

impl CayleyFactor {
    fn new(name: impl Into<String>, dim: i64, max_compact_dim: i64) -> Self {
        CayleyFactor {
            name: name.into(),
            dim,
            max_compact_dim,
        }
    }

    fn compact(name: impl Into<String>, dim: i64) -> Self {
        Self::new(name, dim, dim)
    }
}

impl fmt::Display for CayleyFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Domain of the Cayley map of an odd magical triple: `K^2`-twisted
/// Higgs bundles for the semisimple part of the Cayley real form, extended
/// by the rank one compact factor, together with the sections of `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyDomain {
    pub form: RealForm,
    pub maximal_subtube: RealForm,
    /// The semisimple part of the Cayley real form, extra factor excluded.
    pub tilde_g_real: Vec<CayleyFactor>,
    /// The compact factor centralizing the maximal subtube.
    pub extra_factor: CayleyFactor,
    pub twist_exponent: u32,
    pub m_c: i32,
    pub l_weights: Vec<i32>,
}

impl CayleyDomain {
    fn factors(&self) -> impl Iterator<Item = &CayleyFactor> {
        self.tilde_g_real.iter().chain(std::iter::once(&self.extra_factor))
    }

    pub fn dim(&self) -> i64 {
        self.factors().map(|f| f.dim).sum()
    }

    pub fn max_compact_dim(&self) -> i64 {
        self.factors().map(|f| f.max_compact_dim).sum()
    }
}

impl fmt::Display for CayleyDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.factors().map(|x| x.to_string()).collect();
        f.write_str(&names.join("+"))
    }
}

pub fn cayley_domain(form: RealForm) -> Result<CayleyDomain> {
    let no_odd = || Error::Domain(format!("{form} has no odd magical triple"));
    let (subtube, tilde, extra) = match form {
        RealForm::Su { p, q } if p != q && p.min(q) > 0 => {
            let (a, d) = (p.min(q) as i64, (p as i64 - q as i64).abs());
            (
                RealForm::Su { p: a as usize, q: a as usize },
                vec![CayleyFactor::new(format!("sl({a},C)"), 2 * (a * a - 1), a * a - 1)],
                CayleyFactor::compact(format!("s(u({d})+u(1))"), d * d),
            )
        }
        RealForm::SoStar { m } if m % 2 == 1 && m >= 3 => {
            let k = (m / 2) as i64;
            (
                RealForm::SoStar { m: m - 1 },
                vec![CayleyFactor::new(format!("su*({})", 2 * k), 4 * k * k - 1, k * (2 * k + 1))],
                CayleyFactor::compact("u(1)", 1),
            )
        }
        RealForm::Exceptional { family: Family::E6, index: -14 } => (
            RealForm::So { p: 2, q: 8 },
            vec![CayleyFactor::new("so(1,7)", 28, 21)],
            CayleyFactor::compact("u(1)", 1),
        ),
        _ => return Err(no_odd()),
    };
    Ok(CayleyDomain {
        form,
        maximal_subtube: subtube,
        tilde_g_real: tilde,
        extra_factor: extra,
        twist_exponent: 2,
        m_c: 2,
        l_weights: vec![0],
    })
}
