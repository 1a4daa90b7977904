//! Curated records of nilpotent orbits of exceptional real forms and the
//! conditions that decide whether such an orbit is extended magical.
//!
//! Records are stored one JSON object per line:
//!
//! ```text
//! {"realform": "E6^-14", "wdd": [1,0,0,0,0,1], "dim_V_cap_h": 30,
//!  "dim_c_cap_h": 22, "dim_Veven_cap_m": 8, "centralizer": "so(7)+so(2)",
//!  "source_row": "..."}
//! ```
//!
//! Only `realform`, `wdd` and `source_row` are required. The sl2 data of a
//! record are always recomputed from its weighted Dynkin diagram.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::{report_from_split, SlodowyReport};
use crate::realforms::{describe, CentralizerRealForm, RealForm};
use crate::rootsys::{ad_grading, build_root_system, WeightedDynkinDiagram};
use crate::sl2data::{is_even_triple, module_multiplicities, Sl2Data};

/// Environment variable naming a dataset file to use instead of the
/// shipped one.
pub const DATASET_ENV: &str = "MAGICAL_DATASET";

const SHIPPED: &str = include_str!("../data/exceptional_orbits.jsonl");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    realform: String,
    wdd: Vec<u8>,
    #[serde(rename = "dim_V_cap_h", default)]
    dim_v_cap_h: Option<i64>,
    #[serde(default)]
    dim_c_cap_h: Option<i64>,
    #[serde(rename = "dim_Veven_cap_m", default)]
    dim_veven_cap_m: Option<i64>,
    #[serde(default)]
    centralizer: Option<String>,
    source_row: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalOrbitRecord {
    pub realform: RealForm,
    pub wdd: WeightedDynkinDiagram,
    /// `dim (V_rho ∩ h)`.
    pub dim_v_cap_h: Option<i64>,
    /// `dim (c ∩ h)`.
    pub dim_c_cap_h: Option<i64>,
    /// `dim (V_even ∩ m)`, with `V_even` the nontrivial even highest weight
    /// spaces.
    pub dim_veven_cap_m: Option<i64>,
    pub centralizer: Option<CentralizerRealForm>,
    pub source_row: String,
    /// Recomputed from `wdd`.
    pub sl2: Sl2Data,
}

impl ExceptionalOrbitRecord {
    /// `sum_{even j > 0} n_j`.
    pub fn dim_v_even(&self) -> i64 {
        self.sl2.dim_v_even()
    }
}

fn schema(location: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        location: location.to_string(),
        message: message.into(),
    }
}

fn violation(location: &str, message: impl Into<String>) -> Error {
    Error::InvariantViolation {
        location: location.to_string(),
        message: message.into(),
    }
}

fn validate(raw: RawRecord, location: &str) -> Result<ExceptionalOrbitRecord> {
    let form: RealForm = raw.realform.parse().map_err(|e: Error| schema(location, e.to_string()))?;
    if !matches!(form, RealForm::Exceptional { .. }) {
        return Err(schema(location, format!("{form} is not an exceptional real form")));
    }
    let t = form.complex_type().map_err(|e| schema(location, e.to_string()))?;
    let wdd = WeightedDynkinDiagram::new(t, raw.wdd).map_err(|e| schema(location, e.to_string()))?;
    let centralizer = raw
        .centralizer
        .as_deref()
        .map(str::parse::<CentralizerRealForm>)
        .transpose()
        .map_err(|e| schema(location, e.to_string()))?;
    let rs = build_root_system(t);
    let sl2 = module_multiplicities(&ad_grading(&rs, &wdd)?).map_err(|e| violation(location, e.to_string()))?;
    if sl2.dim_g != t.dim() as i64 {
        return Err(violation(location, format!("sl2 data of {wdd} do not add up to dim {t}")));
    }
    let checks = [
        ("dim_V_cap_h", raw.dim_v_cap_h, sl2.dim_v_rho),
        ("dim_c_cap_h", raw.dim_c_cap_h, sl2.dim_c),
        ("dim_Veven_cap_m", raw.dim_veven_cap_m, sl2.dim_v_even()),
    ];
    for (name, value, bound) in checks {
        if let Some(v) = value {
            if v < 0 || v > bound {
                return Err(violation(location, format!("{name} = {v} is outside [0, {bound}] for {wdd}")));
            }
        }
    }
    if let Some(c) = &centralizer {
        if c.dim() > sl2.dim_c {
            return Err(violation(
                location,
                format!("centralizer {c} has dimension {} > n_0 = {}", c.dim(), sl2.dim_c),
            ));
        }
        if let Some(ch) = raw.dim_c_cap_h {
            if c.max_compact_dim() != ch {
                return Err(violation(
                    location,
                    format!("centralizer {c} has maximal compact dimension {} but dim_c_cap_h = {ch}", c.max_compact_dim()),
                ));
            }
        }
    }
    Ok(ExceptionalOrbitRecord {
        realform: form,
        wdd,
        dim_v_cap_h: raw.dim_v_cap_h,
        dim_c_cap_h: raw.dim_c_cap_h,
        dim_veven_cap_m: raw.dim_veven_cap_m,
        centralizer,
        source_row: raw.source_row,
        sl2,
    })
}

/// Parses and validates JSON-lines records. `origin` names the source in
/// diagnostics. Blank lines are ignored.
pub fn parse_records(text: &str, origin: &str) -> Result<Vec<ExceptionalOrbitRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let location = format!("{origin}:{}", i + 1);
        let raw: RawRecord = serde_json::from_str(line).map_err(|e| schema(&location, e.to_string()))?;
        let location = format!("{location} ({})", raw.source_row);
        out.push(validate(raw, &location)?);
    }
    Ok(out)
}

pub fn load_records(path: &Path) -> Result<Vec<ExceptionalOrbitRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_records(&text, &path.display().to_string())
}

/// The shipped records.
pub fn shipped_records() -> Result<Vec<ExceptionalOrbitRecord>> {
    parse_records(SHIPPED, "exceptional_orbits.jsonl")
}

/// The records named by `MAGICAL_DATASET`, or the shipped ones.
pub fn default_records() -> Result<Vec<ExceptionalOrbitRecord>> {
    match std::env::var_os(DATASET_ENV) {
        Some(path) => load_records(Path::new(&path)),
        None => shipped_records(),
    }
}

/// Outcome of the three conditions; a condition whose inputs are absent
/// from the record is false and explained in `notes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// `dim (c ∩ h) = dim c` and the centralizer is compact.
    pub a: bool,
    /// `dim (V_even ∩ m) = dim V_even`.
    pub b: bool,
    /// `dim (V_even ∩ m) - dim (c ∩ h)` equals the index of the form.
    pub c: bool,
    pub notes: Vec<String>,
}

impl ConditionReport {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c
    }
}

pub fn evaluate_conditions(r: &ExceptionalOrbitRecord) -> Result<ConditionReport> {
    let s = describe(r.realform)?.s;
    let mut notes = Vec::new();
    let a = match (r.dim_c_cap_h, &r.centralizer) {
        (Some(ch), _) if ch != r.sl2.dim_c => {
            notes.push(format!("(a): n_0 = {} but dim c∩h = {ch}", r.sl2.dim_c));
            false
        }
        (Some(_), Some(c)) => {
            if !c.is_compact {
                notes.push(format!("(a): centralizer {c} is not compact"));
            }
            c.is_compact
        }
        _ => {
            notes.push("(a): insufficient data".into());
            false
        }
    };
    let b = match r.dim_veven_cap_m {
        Some(v) => {
            if v != r.dim_v_even() {
                notes.push(format!("(b): dim V_even = {} but dim V_even∩m = {v}", r.dim_v_even()));
            }
            v == r.dim_v_even()
        }
        None => {
            notes.push("(b): insufficient data".into());
            false
        }
    };
    let c = match (r.dim_veven_cap_m, r.dim_c_cap_h) {
        (Some(v), Some(ch)) => {
            if v - ch != s {
                notes.push(format!("(c): {v} - {ch} differs from the index {s}"));
            }
            v - ch == s
        }
        _ => {
            notes.push("(c): insufficient data".into());
            false
        }
    };
    Ok(ConditionReport { a, b, c, notes })
}

/// A record that satisfies all three conditions, with its parity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalVerdict {
    pub record: ExceptionalOrbitRecord,
    pub conditions: ConditionReport,
    pub even: bool,
}

/// The extended magical records of `form`. Fails with missing data when
/// the dataset has no record for the form.
pub fn classify_exceptional(records: &[ExceptionalOrbitRecord], form: RealForm) -> Result<Vec<ExceptionalVerdict>> {
    let mine: Vec<_> = records.iter().filter(|r| r.realform == form).collect();
    if mine.is_empty() {
        return Err(Error::MissingData(format!("no dataset records for {form}")));
    }
    let mut out = Vec::new();
    for r in mine {
        let conditions = evaluate_conditions(r)?;
        if conditions.all() {
            out.push(ExceptionalVerdict {
                record: r.clone(),
                conditions,
                even: is_even_triple(&r.sl2),
            });
        }
    }
    Ok(out)
}

/// Splits `total` over the weights in `weights` when the record pins it
/// down: all in `m`, none in `m`, or a single weight.
fn distribute(weights: &[(i32, i64)], in_m: i64) -> Option<BTreeMap<i32, i64>> {
    let total: i64 = weights.iter().map(|&(_, n)| n).sum();
    let out = if in_m == total {
        weights.iter().copied().collect()
    } else if in_m == 0 {
        BTreeMap::new()
    } else if weights.len() == 1 {
        [(weights[0].0, in_m)].into_iter().collect()
    } else {
        return None;
    };
    Some(out.into_iter().filter(|&(_, v)| v > 0).collect())
}

/// Rigidity report of an exceptional orbit from its record. Needs the
/// record to determine `dim (m ∩ V_w)` for every weight.
pub fn rigidity_report_for_record(genus: u32, r: &ExceptionalOrbitRecord) -> Result<SlodowyReport> {
    let missing = || Error::MissingData(format!("{}: the record does not determine dim(m ∩ V_w)", r.source_row));
    let (v_h, c_h, ve_m) = match (r.dim_v_cap_h, r.dim_c_cap_h, r.dim_veven_cap_m) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return Err(missing()),
    };
    let even: Vec<(i32, i64)> = r.sl2.n.iter().filter(|(&j, _)| j > 0 && j % 2 == 0).map(|(&j, &n)| (j, n)).collect();
    let odd: Vec<(i32, i64)> = r.sl2.n.iter().filter(|(&j, _)| j % 2 == 1).map(|(&j, &n)| (j, n)).collect();
    let odd_total: i64 = odd.iter().map(|&(_, n)| n).sum();
    let ve_h = r.dim_v_even() - ve_m;
    let vo_m = odd_total - (v_h - c_h - ve_h);
    if !(0..=odd_total).contains(&vo_m) {
        return Err(violation(&r.source_row, "inconsistent highest weight counts"));
    }
    let mut a = distribute(&even, ve_m).ok_or_else(missing)?;
    a.extend(distribute(&odd, vo_m).ok_or_else(missing)?);
    report_from_split(genus, r.realform, c_h, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn find(rs: &[ExceptionalOrbitRecord], family: Family, index: i32) -> Vec<&ExceptionalOrbitRecord> {
        rs.iter()
            .filter(|r| r.realform == RealForm::Exceptional { family, index })
            .collect()
    }

    #[test]
    fn shipped_file_rows() {
        let rs = shipped_records().unwrap();
        assert_eq!(rs.len(), 6);
        assert_eq!(find(&rs, Family::E6, -14).len(), 2);
        assert_eq!(find(&rs, Family::E7, 7).len(), 2);
        assert_eq!(find(&rs, Family::E8, 8).len(), 1);
        assert_eq!(find(&rs, Family::E6, -26).len(), 1);
        for r in &rs {
            assert_eq!(r.sl2.dim_g, r.realform.complex_type().unwrap().dim() as i64);
        }
    }

    #[test]
    fn conditions_on_shipped_rows() {
        let rs = shipped_records().unwrap();
        for r in find(&rs, Family::E6, -14) {
            let c = evaluate_conditions(r).unwrap();
            assert!(c.all(), "{:?}", c);
            assert_eq!(r.sl2.n, [(0, 22), (1, 16), (2, 8)].into_iter().collect());
        }
        for r in find(&rs, Family::E7, 7) {
            let c = evaluate_conditions(r).unwrap();
            assert!(c.a && !c.b && c.c);
        }
        for r in find(&rs, Family::E8, 8) {
            let c = evaluate_conditions(r).unwrap();
            assert!(c.a && !c.b && c.c);
        }
        let r = find(&rs, Family::E6, -26)[0];
        let c = evaluate_conditions(r).unwrap();
        assert!(!c.a);
        assert!(c.notes[0].contains("n_0 = 22"));
    }

    #[test]
    fn empty_and_blank() {
        assert!(parse_records("", "x").unwrap().is_empty());
        assert!(parse_records("\n  \n", "x").unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_rows() {
        let too_big = r#"{"realform": "E6^-14", "wdd": [1,0,0,0,0,1], "dim_c_cap_h": 23, "source_row": "bad"}"#;
        match parse_records(too_big, "f") {
            Err(Error::InvariantViolation { location, .. }) => assert!(location.contains("f:1") && location.contains("bad")),
            other => panic!("{other:?}"),
        }
        let unknown = r#"{"realform": "E6^-14", "wdd": [1,0,0,0,0,1], "colour": 1, "source_row": "x"}"#;
        assert!(matches!(parse_records(unknown, "f"), Err(Error::Schema { .. })));
        let classical = r#"{"realform": "su(2,3)", "wdd": [0,1,1,0], "source_row": "x"}"#;
        assert!(matches!(parse_records(classical, "f"), Err(Error::Schema { .. })));
        let short = r#"{"realform": "E7^7", "wdd": [1,0,0], "source_row": "x"}"#;
        assert!(matches!(parse_records(short, "f"), Err(Error::Schema { .. })));
    }

    #[test]
    fn exceptional_classification() {
        let rs = shipped_records().unwrap();
        let e6 = classify_exceptional(&rs, RealForm::Exceptional { family: Family::E6, index: -14 }).unwrap();
        assert_eq!(e6.len(), 2);
        assert!(e6.iter().all(|v| !v.even));
        assert!(classify_exceptional(&rs, RealForm::Exceptional { family: Family::E7, index: 7 })
            .unwrap()
            .is_empty());
        assert!(matches!(
            classify_exceptional(&rs, RealForm::Exceptional { family: Family::F4, index: 4 }),
            Err(Error::MissingData(_))
        ));
    }

    #[test]
    fn record_rigidity_needs_column_four() {
        let rs = shipped_records().unwrap();
        assert!(matches!(rigidity_report_for_record(2, &rs[0]), Err(Error::MissingData(_))));
        let line = r#"{"realform": "E6^-14", "wdd": [1,0,0,0,0,1], "dim_V_cap_h": 30, "dim_c_cap_h": 22, "dim_Veven_cap_m": 8, "centralizer": "so(7)+so(2)", "source_row": "t"}"#;
        let r = &parse_records(line, "t").unwrap()[0];
        let rep = rigidity_report_for_record(2, r).unwrap();
        assert_eq!(rep.a, [(1, 8), (2, 8)].into_iter().collect());
        assert_eq!(rep.slodowy_param_dim, 2 * (22 + 16 + 24));
        assert_eq!(rep.expected_dim, 156);
    }
}
