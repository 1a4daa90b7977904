//! `magical`: nilpotent orbit data, extended magical classification,
//! Slodowy parameter counts and the consistency suite.
//!
//! Exit codes: 0 success, 1 verification mismatch or corrupt data, 2
//! argument or domain error, 3 missing data.

mod render;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use magical_core::dataset::{classify_exceptional, default_records, rigidity_report_for_record, ExceptionalVerdict};
use magical_core::magical::{classify_family, classify_real_form, ClassifiedOrbit, FormFamily};
use magical_core::moduli::{rigidity_report, SlodowyReport};
use magical_core::orbits::{check_partition, enumerate_signed_data, orbit_labels, weighted_dynkin_for_label};
use magical_core::realforms::centralizer_realform;
use magical_core::sl2data::clebsch_gordan_multiplicities;
use magical_core::verify::{run_suite, VerifyReport};
use magical_core::{
    ad_grading, build_root_system, describe, module_multiplicities, Error, Family, LieType, Partition, RealForm,
    Result, WeightedDynkinDiagram,
};

use render::{to_json, Grid, OutputFormat};

#[derive(Parser)]
#[command(name = "magical", version, about = "Extended magical sl2-triples in real simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// sl2 data and weighted Dynkin diagram of a complex nilpotent orbit.
    Orbit {
        /// Lie family: A, B, C, D, E6, E7, E8, F4 or G2.
        #[arg(value_name = "TYPE")]
        family: String,
        rank: usize,
        /// Partition such as `2,2,1` or `2^2,1` (classical types).
        #[arg(long, required_unless_present = "wdd", conflicts_with = "wdd")]
        partition: Option<String>,
        /// Weighted Dynkin diagram labels in Bourbaki order, such as `1,0,0,0,0,1`.
        #[arg(long)]
        wdd: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Extended magical orbits of a real form, e.g. `su 2 3`, `sp 1 1`,
    /// `E6 -14`, or of a whole family with `--up-to`.
    #[command(allow_negative_numbers = true)]
    Classify {
        /// su, sl, su*, so, so*, spr, sp, or an exceptional family.
        family: String,
        params: Vec<String>,
        /// Scan every form of the family up to this size.
        #[arg(long, conflicts_with = "params")]
        up_to: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Slodowy parameter count against the expected moduli dimension.
    #[command(allow_negative_numbers = true)]
    Slodowy {
        family: String,
        params: Vec<String>,
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        genus: u32,
        /// Report every signed datum, not only those with compact centralizer.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Cross-check formulas, gradings, matrix models, tables and the dataset.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MissingData(_) | Error::Io(_) => 3,
        Error::Consistency(_) | Error::Schema { .. } | Error::InvariantViolation { .. } => 1,
        _ => 2,
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Domain(format!("`{t}` is not a valid {what}"))))
        .collect()
}

fn parse_form(family: &str, params: &[String]) -> Result<RealForm> {
    if params.is_empty() {
        if let Ok(form) = family.parse::<RealForm>() {
            return Ok(form);
        }
    }
    if let Ok(fam) = family.parse::<Family>() {
        if !fam.is_classical() {
            let [index] = params else {
                return Err(Error::Domain(format!("{fam} takes one parameter, the index of the form")));
            };
            let index = index
                .parse()
                .map_err(|_| Error::Domain(format!("`{index}` is not an integer")))?;
            return RealForm::Exceptional { family: fam, index }.checked();
        }
    }
    let params: Vec<usize> = params
        .iter()
        .map(|p| p.parse().map_err(|_| Error::Domain(format!("`{p}` is not a nonnegative integer"))))
        .collect::<Result<_>>()?;
    family.parse::<FormFamily>()?.form(&params)
}

fn n_columns<'a>(maps: impl IntoIterator<Item = &'a BTreeMap<i32, i64>>) -> Vec<i32> {
    let top = maps.into_iter().filter_map(|m| m.keys().next_back().copied()).max().unwrap_or(0);
    (0..=top).collect()
}

fn n_cells(n: &BTreeMap<i32, i64>, cols: &[i32]) -> Vec<String> {
    cols.iter().map(|j| n.get(j).copied().unwrap_or(0).to_string()).collect()
}

fn emit(format: OutputFormat, json: String, grid: Grid, table: impl FnOnce(&Grid) -> String) -> Result<String> {
    Ok(match format {
        OutputFormat::Json => json,
        OutputFormat::Csv => grid.to_csv().map_err(|e| Error::Io(e.into()))?,
        OutputFormat::Table => table(&grid),
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct OrbitReport {
    #[serde(rename = "type")]
    lie_type: String,
    partition: Option<Partition>,
    wdd: Vec<u8>,
    /// Diagram of the class II orbit of a very even partition.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    wdd_ii: Option<Vec<u8>>,
    n: BTreeMap<i32, i64>,
    dim_c: i64,
    dim_g0: i64,
    dim_v_rho: i64,
    dim_g: i64,
}

fn cmd_orbit(family: &str, rank: usize, partition: Option<&str>, wdd: Option<&str>, format: OutputFormat) -> Result<String> {
    let family: Family = family.parse()?;
    let t = LieType::new(family, rank)?;
    let (partition, w, w_ii) = match (partition, wdd) {
        (Some(p), _) => {
            let p: Partition = p.parse()?;
            check_partition(t, &p)?;
            let labels: Vec<_> = orbit_labels(t)?.into_iter().filter(|l| l.partition == p).collect();
            let w = weighted_dynkin_for_label(t, &labels[0])?;
            let w_ii = match labels.get(1) {
                Some(l) => Some(weighted_dynkin_for_label(t, l)?.labels().to_vec()),
                None => None,
            };
            (Some(p), w, w_ii)
        }
        (None, Some(w)) => (None, WeightedDynkinDiagram::new(t, parse_list(w, "label")?)?, None),
        (None, None) => return Err(Error::Domain("give --partition or --wdd".into())),
    };
    let d = module_multiplicities(&ad_grading(&build_root_system(t), &w)?)?;
    let report = OrbitReport {
        lie_type: t.to_string(),
        partition,
        wdd: w.labels().to_vec(),
        wdd_ii: w_ii,
        dim_g0: d.n.iter().filter(|(&j, _)| j % 2 == 0).map(|(_, &n)| n).sum(),
        n: d.n.clone(),
        dim_c: d.dim_c,
        dim_v_rho: d.dim_v_rho,
        dim_g: d.dim_g,
    };
    let cols = n_columns([&report.n]);
    let join = |v: &[u8]| v.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
    let mut header = vec!["type".to_string(), "partition".into(), "wdd".into()];
    let mut row = vec![
        report.lie_type.clone(),
        report.partition.as_ref().map_or(String::new(), |p| p.to_string()),
        join(&report.wdd),
    ];
    if let Some(w) = &report.wdd_ii {
        header.push("wdd II".into());
        row.push(join(w));
    }
    header.extend(cols.iter().map(|j| format!("n{j}")));
    row.extend(n_cells(&report.n, &cols));
    header.extend(["dim c", "dim g0", "dim V_rho", "dim g"].map(String::from));
    row.extend([report.dim_c, report.dim_g0, report.dim_v_rho, report.dim_g].map(|v| v.to_string()));
    let mut grid = Grid::new(header);
    grid.push(row);
    emit(format, to_json(&report), grid, |g| g.transposed().to_table())
}

#[derive(Debug, Serialize, Deserialize)]
struct ClassifyRow {
    #[serde(flatten)]
    orbit: ClassifiedOrbit,
    n: BTreeMap<i32, i64>,
    s: i64,
}

fn classical_rows(orbits: Vec<ClassifiedOrbit>) -> Result<Vec<ClassifyRow>> {
    orbits
        .into_iter()
        .map(|orbit| {
            let n = clebsch_gordan_multiplicities(orbit.form.complex_type()?, &orbit.label.partition)?;
            let s = describe(orbit.form)?.s;
            Ok(ClassifyRow { orbit, n, s })
        })
        .collect()
}

fn transposed_or_empty(g: &Grid) -> String {
    if g.rows.is_empty() {
        "no extended magical orbits\n".into()
    } else {
        g.transposed().to_table()
    }
}

fn cmd_classify(family: &str, params: &[String], up_to: Option<usize>, format: OutputFormat) -> Result<String> {
    let rows = match up_to {
        Some(bound) => classify_family(family.parse()?, bound)?,
        None => {
            let form = parse_form(family, params)?;
            if let RealForm::Exceptional { .. } = form {
                let verdicts = classify_exceptional(&default_records()?, form)?;
                return render_exceptional(&verdicts, format);
            }
            classify_real_form(form)?
        }
    };
    let rows = classical_rows(rows)?;
    let cols = n_columns(rows.iter().map(|r| &r.n));
    let mut header = vec!["form".to_string(), "orbit".into(), "verdict".into()];
    header.extend(cols.iter().map(|j| format!("n{j}")));
    header.extend(["s", "dim m - dim h", "dim g0 - 2 dim c", "signed data"].map(String::from));
    let mut grid = Grid::new(header);
    for r in &rows {
        let o = &r.orbit;
        let mut row = vec![o.form.to_string(), o.label.to_string(), o.status.verdict.to_string()];
        row.extend(n_cells(&r.n, &cols));
        row.push(r.s.to_string());
        row.push(o.status.witness.dim_m_minus_dim_h.to_string());
        row.push(o.status.witness.dim_g0_minus_2dim_c.to_string());
        row.push(o.signed.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("; "));
        grid.push(row);
    }
    emit(format, to_json(&rows), grid, transposed_or_empty)
}

fn render_exceptional(verdicts: &[ExceptionalVerdict], format: OutputFormat) -> Result<String> {
    let cols = n_columns(verdicts.iter().map(|v| &v.record.sl2.n));
    let mut header = vec!["form".to_string(), "record".into(), "wdd".into(), "verdict".into()];
    header.extend(cols.iter().map(|j| format!("n{j}")));
    header.extend(["s", "dim c∩h", "dim Veven∩m"].map(String::from));
    let mut grid = Grid::new(header);
    for v in verdicts {
        let r = &v.record;
        let mut row = vec![
            r.realform.to_string(),
            r.source_row.clone(),
            r.wdd.labels().iter().map(u8::to_string).collect::<String>(),
            if v.even { "even" } else { "odd" }.to_string(),
        ];
        row.extend(n_cells(&r.sl2.n, &cols));
        row.push(describe(r.realform)?.s.to_string());
        let opt = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
        row.push(opt(r.dim_c_cap_h));
        row.push(opt(r.dim_veven_cap_m));
        grid.push(row);
    }
    emit(format, to_json(&verdicts), grid, transposed_or_empty)
}

fn cmd_slodowy(
    family: &str,
    params: &[String],
    partition: Option<&str>,
    genus: u32,
    all: bool,
    format: OutputFormat,
) -> Result<String> {
    if genus < 2 {
        return Err(Error::Domain(format!("genus must be at least 2, got {genus}")));
    }
    let form = parse_form(family, params)?;
    let reports: Vec<SlodowyReport> = match (form, partition) {
        (RealForm::Exceptional { .. }, Some(_)) => {
            return Err(Error::Domain(format!("{form} orbits come from dataset records, not partitions")));
        }
        (RealForm::Exceptional { .. }, None) => {
            let records = default_records()?;
            let mine: Vec<_> = records.iter().filter(|r| r.realform == form).collect();
            if mine.is_empty() {
                return Err(Error::MissingData(format!("no dataset records for {form}")));
            }
            mine.into_iter()
                .map(|r| rigidity_report_for_record(genus, r))
                .collect::<Result<_>>()?
        }
        (_, None) => return Err(Error::Domain("--partition is required for classical forms".into())),
        (_, Some(p)) => {
            let p: Partition = p.parse()?;
            check_partition(form.complex_type()?, &p)?;
            let mut out = Vec::new();
            for s in enumerate_signed_data(form, &p) {
                if all || centralizer_realform(form, &s)?.is_compact {
                    out.push(rigidity_report(genus, form, &p, &s)?);
                }
            }
            out
        }
    };
    let mut grid = Grid::new([
        "form",
        "orbit",
        "signed data",
        "genus",
        "dim c∩h",
        "dim m∩V_w",
        "parameter dim",
        "expected dim",
        "gap",
        "Milnor-Wood",
    ]);
    for r in &reports {
        let a = r.a.iter().map(|(w, d)| format!("{w}:{d}")).collect::<Vec<_>>().join(" ");
        grid.push(vec![
            r.form.to_string(),
            r.partition.as_ref().map_or("-".into(), |p| p.to_string()),
            r.signed.as_ref().map_or("-".into(), |s| s.to_string()),
            r.genus.to_string(),
            r.dim_c_cap_h.to_string(),
            a,
            r.slodowy_param_dim.to_string(),
            r.expected_dim.to_string(),
            r.gap.to_string(),
            r.milnor_wood.map_or("-".into(), |m| m.to_string()),
        ]);
    }
    emit(format, to_json(&reports), grid, Grid::to_table)
}

fn cmd_verify(max_rank: usize, format: OutputFormat) -> Result<(String, bool)> {
    let report: VerifyReport = run_suite(max_rank)?;
    let mut grid = Grid::new(["check", "passed", "cases", "counterexample"]);
    for c in &report.checks {
        grid.push(vec![
            c.name.clone(),
            c.passed.to_string(),
            c.cases.to_string(),
            c.counterexample.clone().unwrap_or_default(),
        ]);
    }
    let text = emit(format, to_json(&report), grid, |_| format!("{report}\n"))?;
    Ok((text, report.passed()))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let ok = |s: String| (s, true);
    match cli.command {
        Command::Orbit {
            family,
            rank,
            partition,
            wdd,
            format,
        } => cmd_orbit(&family, rank, partition.as_deref(), wdd.as_deref(), format).map(ok),
        Command::Classify {
            family,
            params,
            up_to,
            format,
        } => cmd_classify(&family, &params, up_to, format).map(ok),
        Command::Slodowy {
            family,
            params,
            partition,
            genus,
            all,
            format,
        } => cmd_slodowy(&family, &params, partition.as_deref(), genus, all, format).map(ok),
        Command::Verify { max_rank, format } => cmd_verify(max_rank, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
