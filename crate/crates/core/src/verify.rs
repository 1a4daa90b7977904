//! Cross-checks between the independent computations of the crate: closed
//! formulas, root system gradings, Clebsch-Gordan counts and matrix models,
//! plus the tabulated examples, the exceptional dataset and the family
//! classification.
//!
//! Every check walks its cases in increasing size and stops at the first
//! mismatch, which is reported as the counterexample.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dataset::{default_records, evaluate_conditions, ExceptionalOrbitRecord};
use crate::error::{Error, Result};
use crate::magical::{classify_real_form, extended_magical_status, FormFamily, Verdict};
use crate::moduli::rigidity_report;
use crate::oracle::{build_matrix_triple, oracle_sigma_split, oracle_sl2_data};
use crate::orbits::{enumerate_signed_data, orbit_labels, OrbitLabel, Partition, VeryEvenClass};
use crate::realforms::{centralizer_realform, describe, milnor_wood, satake_diagram, RealForm, EXCEPTIONAL_FORMS};
use crate::rootsys::{ad_grading, build_root_system, Family, LieType, RootSystem, WeightedDynkinDiagram};
use crate::sl2data::{
    clebsch_gordan_multiplicities, dim_c_formula, dim_g0_formula, dim_v_rho_formula, is_even_triple,
    module_multiplicities, Sl2Data,
};

/// Largest rank accepted by [`run_suite`].
pub const MAX_VERIFY_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Cases examined, up to and including a failing one.
    pub cases: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_rank: usize,
    pub checks: Vec<CheckResult>,
    pub mismatches: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "PASS {} ({} cases)", c.name, c.cases)?,
                Some(x) => writeln!(f, "FAIL {} (case {}): {x}", c.name, c.cases)?,
            }
        }
        write!(f, "{} mismatches", self.mismatches)
    }
}

fn mismatch(msg: String) -> Error {
    Error::Consistency(msg)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(mismatch(msg()))
    }
}

fn run_check(name: &str, body: impl FnOnce(&mut usize) -> Result<()>) -> CheckResult {
    let mut cases = 0;
    let outcome = body(&mut cases);
    CheckResult {
        name: name.to_string(),
        passed: outcome.is_ok(),
        cases,
        counterexample: outcome.err().map(|e| e.to_string()),
    }
}

/// Classical types of rank at most `max_rank`, by rank then family.
fn classical_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            out.extend(LieType::new(family, rank));
        }
    }
    out
}

/// Distinct partitions of a classical type.
fn partitions(t: LieType) -> Result<Vec<Partition>> {
    let mut seen = BTreeSet::new();
    Ok(orbit_labels(t)?
        .into_iter()
        .map(|l| l.partition)
        .filter(|p| seen.insert(p.clone()))
        .collect())
}

fn grading_data(rs: &RootSystem, w: &WeightedDynkinDiagram) -> Result<Sl2Data> {
    module_multiplicities(&ad_grading(rs, w)?)
}

fn label_data(rs: &RootSystem, label: &OrbitLabel) -> Result<Sl2Data> {
    let w = crate::orbits::weighted_dynkin_for_label(rs.lie_type(), label)?;
    grading_data(rs, &w)
}

fn dim_g0(d: &Sl2Data) -> i64 {
    d.n.iter().filter(|(&j, _)| j % 2 == 0).map(|(_, &n)| n).sum()
}

/// Closed formulas, Clebsch-Gordan counts and root system gradings agree on
/// every orbit label.
fn check_formulas(max_rank: usize) -> CheckResult {
    run_check("formulas_vs_grading", |cases| {
        for t in classical_types(max_rank) {
            let rs = build_root_system(t);
            for label in orbit_labels(t)? {
                *cases += 1;
                let p = &label.partition;
                let d = label_data(&rs, &label)?;
                let cg = clebsch_gordan_multiplicities(t, p)?;
                ensure(d.n == cg, || format!("{t} {label}: grading n {:?}, Clebsch-Gordan n {cg:?}", d.n))?;
                let (c, g0, v) = (dim_c_formula(t, p)?, dim_g0_formula(t, p)?, dim_v_rho_formula(t, p)?);
                ensure(c == d.dim_c, || format!("{t} {label}: dim c formula {c}, grading {}", d.dim_c))?;
                ensure(g0 == dim_g0(&d), || format!("{t} {label}: dim g0 formula {g0}, grading {}", dim_g0(&d)))?;
                ensure(v == d.dim_v_rho, || format!("{t} {label}: dim V_rho formula {v}, grading {}", d.dim_v_rho))?;
            }
        }
        Ok(())
    })
}

/// The matrix model of every partition reproduces the grading data.
fn check_matrix_oracle(max_rank: usize) -> CheckResult {
    run_check("matrix_oracle", |cases| {
        for t in classical_types(max_rank) {
            let rs = build_root_system(t);
            for p in partitions(t)? {
                *cases += 1;
                let w = crate::orbits::weighted_dynkin_from_partition(t, &p)?;
                let d = grading_data(&rs, &w)?;
                let o = oracle_sl2_data(&build_matrix_triple(t, &p)?)?;
                ensure(o.n == d.n, || format!("{t} {p}: matrix model n {:?}, grading n {:?}", o.n, d.n))?;
            }
        }
        Ok(())
    })
}

/// `dim g0 <= dim V_rho`, with equality exactly for single parity
/// partitions.
fn check_parity_lemma(max_rank: usize) -> CheckResult {
    run_check("g0_vs_v_rho", |cases| {
        for t in classical_types(max_rank) {
            for p in partitions(t)? {
                *cases += 1;
                let (g0, v) = (dim_g0_formula(t, &p)?, dim_v_rho_formula(t, &p)?);
                let ok = if p.is_single_parity() { g0 == v } else { g0 < v };
                ensure(ok, || format!("{t} {p}: dim g0 = {g0}, dim V_rho = {v}"))?;
            }
        }
        Ok(())
    })
}

fn table_row(form: RealForm, p: &Partition, expect: [i64; 4]) -> Result<()> {
    let t = form.complex_type()?;
    let rs = build_root_system(t);
    let d = label_data(&rs, &OrbitLabel::plain(p.clone()))?;
    let s = describe(form)?.s;
    let got = [d.get(0), d.get(1), d.get(2), s];
    ensure(got == expect, || format!("{form} {p}: (n0, n1, n2, s) = {got:?}, expected {expect:?}"))?;
    ensure(d.max_weight() <= 2, || format!("{form} {p}: weight above 2"))?;
    ensure(s == d.get(2) - d.get(0), || format!("{form} {p}: s != n2 - n0"))
}

/// Rows of the tabulated su(p,q), so*(4m+2) and E6 examples.
fn check_tables() -> CheckResult {
    run_check("tables", |cases| {
        for q in 2..=6usize {
            for p in 1..q {
                *cases += 1;
                let (pi, d) = (p as i64, (q - p) as i64);
                let mut parts = vec![2; p];
                parts.extend(vec![1; q - p]);
                let expect = [pi * pi - 1 + d * d, 2 * pi * d, pi * pi, 1 - d * d];
                table_row(RealForm::Su { p, q }, &Partition::new(parts)?, expect)?;
            }
        }
        for m in 1..=4usize {
            *cases += 1;
            let mi = m as i64;
            let mut parts = vec![2; 2 * m];
            parts.extend([1, 1]);
            let expect = [mi * (2 * mi + 1) + 1, 4 * mi, mi * (2 * mi - 1), -2 * mi - 1];
            table_row(RealForm::SoStar { m: 2 * m + 1 }, &Partition::new(parts)?, expect)?;
        }
        *cases += 1;
        let form = RealForm::Exceptional { family: Family::E6, index: -14 };
        let t = form.complex_type()?;
        let d = grading_data(&build_root_system(t), &WeightedDynkinDiagram::new(t, vec![1, 0, 0, 0, 0, 1])?)?;
        let s = describe(form)?.s;
        let expect: BTreeMap<i32, i64> = [(0, 22), (1, 16), (2, 8)].into_iter().collect();
        ensure(d.n == expect && d.dim_g == 78, || format!("E6 100001: n = {:?}", d.n))?;
        ensure(s == -14 && s == d.get(2) - d.get(0), || format!("{form}: s = {s}"))
    })
}

/// The extended magical orbits of a classical noncompact form predicted by
/// the classification theorem, with their parity.
pub fn expected_classification(form: RealForm) -> Result<BTreeSet<(OrbitLabel, Verdict)>> {
    let t = form.complex_type()?;
    let mut out = BTreeSet::new();
    if form.is_compact() {
        return Ok(out);
    }
    let plain = |parts: Vec<usize>| Partition::new(parts).map(OrbitLabel::plain);
    let twos = |k: usize, ones: usize| {
        let mut v = vec![2; k];
        v.extend(vec![1; ones]);
        v
    };
    match form {
        RealForm::Su { p, q } => {
            let (a, b) = (p.min(q), p.max(q));
            let verdict = if a == b { Verdict::EvenMagical } else { Verdict::OddMagical };
            out.insert((plain(twos(a, b - a))?, verdict));
        }
        RealForm::Sl { n } => {
            out.insert((plain(vec![n])?, Verdict::EvenMagical));
        }
        RealForm::SpR { n } => {
            out.insert((plain(vec![2 * n])?, Verdict::EvenMagical));
            out.insert((plain(twos(n, 0))?, Verdict::EvenMagical));
        }
        RealForm::SoStar { m } if m % 2 == 1 => {
            out.insert((plain(twos(m - 1, 2))?, Verdict::OddMagical));
        }
        RealForm::SoStar { m } => {
            let partition = Partition::new(twos(m, 0))?;
            for class in [VeryEvenClass::I, VeryEvenClass::II] {
                let label = OrbitLabel {
                    partition: partition.clone(),
                    very_even: Some(class),
                };
                out.insert((label, Verdict::EvenMagical));
            }
        }
        RealForm::So { p, q } => {
            let (n, m) = (p + q, p.min(q));
            if m >= 2 {
                let mut parts = vec![2 * m - 1];
                parts.extend(vec![1; n + 1 - 2 * m]);
                out.insert((plain(parts)?, Verdict::EvenMagical));
            }
            if p.abs_diff(q) == 1 {
                out.insert((plain(vec![n])?, Verdict::EvenMagical));
            }
        }
        RealForm::SuStar { .. } | RealForm::Sp { .. } => {}
        RealForm::Exceptional { .. } => {
            return Err(Error::Domain(format!("{form} is not classical")));
        }
    }
    debug_assert!(out.iter().all(|(l, _)| l.partition.n() == t.standard_dim().unwrap_or(0)));
    Ok(out)
}

/// Size bound of [`FormFamily::forms_up_to`] covering complex rank
/// `max_rank`.
fn family_bound(family: FormFamily, max_rank: usize) -> usize {
    match family {
        FormFamily::Su | FormFamily::Sl => max_rank + 1,
        FormFamily::SuStar => max_rank.div_ceil(2),
        FormFamily::So => 2 * max_rank + 1,
        FormFamily::SoStar | FormFamily::SpR | FormFamily::Sp => max_rank,
    }
}

fn check_classification(max_rank: usize) -> CheckResult {
    run_check("classification", |cases| {
        for family in FormFamily::ALL {
            for form in family.forms_up_to(family_bound(family, max_rank)) {
                *cases += 1;
                let got: BTreeSet<_> = classify_real_form(form)?
                    .into_iter()
                    .map(|c| (c.label, c.status.verdict))
                    .collect();
                let want = expected_classification(form)?;
                let show = |s: &BTreeSet<(OrbitLabel, Verdict)>| {
                    s.iter().map(|(l, v)| format!("{l} {v}")).collect::<Vec<_>>().join(", ")
                };
                ensure(got == want, || format!("{form}: found {{{}}}, expected {{{}}}", show(&got), show(&want)))?;
            }
        }
        Ok(())
    })
}

/// Forms covered by the matrix involutions, of complex rank at most
/// `max_rank`.
fn oracle_forms(max_rank: usize) -> Vec<RealForm> {
    [FormFamily::Su, FormFamily::Sl, FormFamily::So, FormFamily::SpR]
        .into_iter()
        .flat_map(|f| f.forms_up_to(family_bound(f, max_rank)))
        .filter(|f| f.complex_type().is_ok_and(|t| t.rank() <= max_rank))
        .collect()
}

/// Matrix involutions of every signed datum match the real form and the
/// centralizer catalog.
fn check_real_form_oracle(max_rank: usize) -> CheckResult {
    run_check("involution_oracle", |cases| {
        for form in oracle_forms(max_rank) {
            let t = form.complex_type()?;
            let desc = describe(form)?;
            for p in partitions(t)? {
                let m = build_matrix_triple(t, &p)?;
                let d = oracle_sl2_data(&m)?;
                for s in enumerate_signed_data(form, &p) {
                    *cases += 1;
                    let split = oracle_sigma_split(&m, &s)?;
                    let at = || format!("{form} {s}");
                    ensure(split.involution.dim_h as i64 == desc.dim_h, || {
                        format!("{}: involution fixes {} dimensions, dim h = {}", at(), split.involution.dim_h, desc.dim_h)
                    })?;
                    ensure(split.dim_m_minus_dim_h == desc.s, || {
                        format!("{}: highest weights give dim m - dim h = {}, expected {}", at(), split.dim_m_minus_dim_h, desc.s)
                    })?;
                    for (&j, &n) in &d.n {
                        let (h, mm) = split.splits.get(&j).copied().unwrap_or((0, 0));
                        ensure((h + mm) as i64 == n, || format!("{}: V_{j} splits as {h}+{mm}, n_{j} = {n}", at()))?;
                    }
                    let c = centralizer_realform(form, &s)?;
                    let ch = split.splits.get(&0).map_or(0, |&(h, _)| h as i64);
                    ensure(c.dim() == d.dim_c && c.max_compact_dim() == ch, || {
                        format!("{}: centralizer {c} vs n0 = {}, dim c∩h = {ch}", at(), d.dim_c)
                    })?;
                }
            }
        }
        Ok(())
    })
}

/// Real rank of the Hermitian symmetric spaces, from their classification.
fn hermitian_rank(form: RealForm) -> Option<i64> {
    match form {
        RealForm::Su { p, q } if p.min(q) >= 1 => Some(p.min(q) as i64),
        RealForm::SoStar { m } => Some((m / 2) as i64),
        RealForm::SpR { n } => Some(n as i64),
        RealForm::Sl { n: 2 } => Some(1),
        RealForm::So { p, q } if p.min(q) == 2 && p + q >= 5 => Some(2),
        RealForm::Exceptional { family: Family::E6, index: -14 } => Some(2),
        RealForm::Exceptional { family: Family::E7, index: -25 } => Some(3),
        _ => None,
    }
}

/// Slodowy counts vanish exactly on even magical triples, and Milnor-Wood
/// bounds agree with the real rank.
fn check_rigidity(max_rank: usize) -> CheckResult {
    run_check("rigidity", |cases| {
        let forms = FormFamily::Su
            .forms_up_to(6.min(max_rank + 1))
            .into_iter()
            .chain(FormFamily::Sl.forms_up_to(5.min(max_rank + 1)));
        for form in forms {
            let t = form.complex_type()?;
            for p in partitions(t)? {
                if p.is_trivial() {
                    continue;
                }
                for s in enumerate_signed_data(form, &p) {
                    let status = extended_magical_status(form, &p, &s)?;
                    if !status.witness.centralizer_compact {
                        continue;
                    }
                    for genus in [2, 3] {
                        *cases += 1;
                        let r = rigidity_report(genus, form, &p, &s)?;
                        let even = status.verdict == Verdict::EvenMagical;
                        ensure(r.gap >= 0 && (r.gap == 0) == even, || {
                            format!("{form} {s} genus {genus}: gap {} with verdict {}", r.gap, status.verdict)
                        })?;
                    }
                }
            }
        }
        let mut forms: Vec<RealForm> = FormFamily::ALL
            .into_iter()
            .flat_map(|f| f.forms_up_to(family_bound(f, max_rank)))
            .collect();
        forms.extend(EXCEPTIONAL_FORMS.iter().map(|&(family, index)| RealForm::Exceptional { family, index }));
        for form in forms {
            *cases += 1;
            let d = describe(form)?;
            let want = hermitian_rank(form);
            ensure(d.hermitian == want.is_some(), || format!("{form}: Hermitian flag {}", d.hermitian))?;
            let real_rank = satake_diagram(form)?.real_rank() as i64;
            ensure(d.ss_rank == real_rank, || format!("{form}: rank {} vs Satake rank {real_rank}", d.ss_rank))?;
            if let Some(r) = want {
                for genus in 2..=4u32 {
                    let mw = milnor_wood(&d, genus)?;
                    ensure(mw == r * (2 * genus as i64 - 2), || format!("{form} genus {genus}: Milnor-Wood bound {mw}"))?;
                }
            }
        }
        Ok(())
    })
}

/// The records load, and a record meeting all three conditions is an odd
/// triple of a Hermitian form of nontube type.
fn check_dataset(records: &Result<Vec<ExceptionalOrbitRecord>>) -> CheckResult {
    run_check("dataset", |cases| {
        let records = match records {
            Ok(r) => r,
            Err(e) => return Err(mismatch(e.to_string())),
        };
        for r in records {
            *cases += 1;
            let c = evaluate_conditions(r)?;
            if c.all() {
                let d = describe(r.realform)?;
                ensure(d.tube_type == Some(false), || {
                    format!("{}: all conditions hold on a form that is not Hermitian of nontube type", r.source_row)
                })?;
                ensure(!is_even_triple(&r.sl2), || format!("{}: all conditions hold on an even triple", r.source_row))?;
            }
        }
        Ok(())
    })
}

/// Runs every check on types of rank at most `max_rank` against the
/// default dataset.
pub fn run_suite(max_rank: usize) -> Result<VerifyReport> {
    run_suite_with(max_rank, &default_records())
}

/// Runs every check against the given dataset load result; a load error is
/// reported as a failed dataset check.
pub fn run_suite_with(max_rank: usize, records: &Result<Vec<ExceptionalOrbitRecord>>) -> Result<VerifyReport> {
    if !(1..=MAX_VERIFY_RANK).contains(&max_rank) {
        return Err(Error::Domain(format!("rank bound must be between 1 and {MAX_VERIFY_RANK}, got {max_rank}")));
    }
    let checks = vec![
        check_formulas(max_rank),
        check_matrix_oracle(max_rank),
        check_parity_lemma(max_rank),
        check_tables(),
        check_classification(max_rank),
        check_real_form_oracle(max_rank),
        check_rigidity(max_rank),
        check_dataset(records),
    ];
    let mismatches = checks.iter().filter(|c| !c.passed).count();
    Ok(VerifyReport {
        max_rank,
        checks,
        mismatches,
    })
}
