//! The extended magical criterion and exhaustive scans over classical real
//! forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{enumerate_signed_data, orbit_labels, OrbitLabel, Partition, SignedPartitionData};
use crate::realforms::{centralizer_realform, describe, RealForm};
use crate::sl2data::{clebsch_gordan_multiplicities, dim_c_formula, dim_g0_formula, is_even_triple, Sl2Data};

/// Sign of the magical involution on `(ad_f)^k v` for a highest weight
/// vector `v` of weight `j`: `+1` on the centralizer, `(-1)^(k+1)` otherwise.
pub fn involution_sign(j: u32, k: u32) -> Result<i8> {
    if k > j {
        return Err(Error::Domain(format!("lowering depth {k} exceeds weight {j}")));
    }
    if j == 0 {
        return Ok(1);
    }
    Ok(if k.is_multiple_of(2) { -1 } else { 1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    NotExtendedMagical,
    EvenMagical,
    OddMagical,
}

impl Verdict {
    pub fn is_magical(self) -> bool {
        self != Verdict::NotExtendedMagical
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotExtendedMagical => "not",
            Verdict::EvenMagical => "even",
            Verdict::OddMagical => "odd",
        })
    }
}

/// The integers and flags entering the criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// `dim m - dim h` of the real form.
    pub dim_m_minus_dim_h: i64,
    /// `dim g_0 - 2 dim c` of the triple.
    pub dim_g0_minus_2dim_c: i64,
    pub centralizer_compact: bool,
    pub even: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicalStatus {
    pub verdict: Verdict,
    pub witness: Witness,
}

impl MagicalStatus {
    pub fn from_witness(witness: Witness) -> Self {
        let verdict = if !witness.centralizer_compact || witness.dim_m_minus_dim_h != witness.dim_g0_minus_2dim_c {
            Verdict::NotExtendedMagical
        } else if witness.even {
            Verdict::EvenMagical
        } else {
            Verdict::OddMagical
        };
        MagicalStatus { verdict, witness }
    }
}

/// Evaluates the criterion for the real orbit with signed data `s` over the
/// partition `p` of the classical form `form`.
pub fn extended_magical_status(form: RealForm, p: &Partition, s: &SignedPartitionData) -> Result<MagicalStatus> {
    if matches!(form, RealForm::Exceptional { .. }) {
        return Err(Error::Domain(format!("{form} is handled through the exceptional dataset")));
    }
    if s.form != form {
        return Err(Error::Domain(format!("signed data for {} used with {form}", s.form)));
    }
    if s.partition()? != *p {
        return Err(Error::Domain(format!("signed data {s} do not lie over {p}")));
    }
    if !enumerate_signed_data(form, p).contains(s) {
        return Err(Error::Domain(format!("{s} is not a valid signature for {form}")));
    }
    let t = form.complex_type()?;
    let d = describe(form)?;
    let c = centralizer_realform(form, s)?;
    let parity = Sl2Data::from_multiplicities(clebsch_gordan_multiplicities(t, p)?)?;
    Ok(MagicalStatus::from_witness(Witness {
        dim_m_minus_dim_h: d.s,
        dim_g0_minus_2dim_c: dim_g0_formula(t, p)? - 2 * dim_c_formula(t, p)?,
        centralizer_compact: c.is_compact,
        even: is_even_triple(&parity),
    }))
}

/// A nilpotent orbit label with the signed data on which the criterion
/// holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedOrbit {
    pub form: RealForm,
    pub label: OrbitLabel,
    pub status: MagicalStatus,
    pub signed: Vec<SignedPartitionData>,
}

/// All extended magical triples of a classical noncompact form, one entry
/// per complex orbit label, in the order of [`orbit_labels`]. The zero
/// orbit is skipped.
pub fn classify_real_form(form: RealForm) -> Result<Vec<ClassifiedOrbit>> {
    if matches!(form, RealForm::Exceptional { .. }) {
        return Err(Error::Domain(format!("{form} is handled through the exceptional dataset")));
    }
    let t = form.complex_type()?;
    if form.is_compact() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for label in orbit_labels(t)? {
        if label.partition.is_trivial() {
            continue;
        }
        let mut found: Option<ClassifiedOrbit> = None;
        for s in enumerate_signed_data(form, &label.partition) {
            let status = extended_magical_status(form, &label.partition, &s)?;
            if !status.verdict.is_magical() {
                continue;
            }
            match &mut found {
                Some(entry) => {
                    if entry.status != status {
                        return Err(Error::Consistency(format!(
                            "{form} {label}: magical signed data disagree on the witness"
                        )));
                    }
                    entry.signed.push(s);
                }
                None => {
                    found = Some(ClassifiedOrbit {
                        form,
                        label: label.clone(),
                        status,
                        signed: vec![s],
                    })
                }
            }
        }
        out.extend(found);
    }
    Ok(out)
}

/// The classical families of noncompact real forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormFamily {
    Su,
    Sl,
    SuStar,
    So,
    SoStar,
    SpR,
    Sp,
}

impl FormFamily {
    pub const ALL: [FormFamily; 7] = [
        FormFamily::Su,
        FormFamily::Sl,
        FormFamily::SuStar,
        FormFamily::So,
        FormFamily::SoStar,
        FormFamily::SpR,
        FormFamily::Sp,
    ];

    /// Number of integer parameters: two for `su`, `so` and `sp`, one
    /// otherwise.
    pub fn arity(self) -> usize {
        match self {
            FormFamily::Su | FormFamily::So | FormFamily::Sp => 2,
            _ => 1,
        }
    }

    pub fn form(self, params: &[usize]) -> Result<RealForm> {
        if params.len() != self.arity() {
            return Err(Error::Domain(format!("{self} takes {} parameter(s)", self.arity())));
        }
        let form = match self {
            FormFamily::Su => RealForm::Su { p: params[0], q: params[1] },
            FormFamily::Sl => RealForm::Sl { n: params[0] },
            FormFamily::SuStar => RealForm::SuStar { m: params[0] },
            FormFamily::So => RealForm::So { p: params[0], q: params[1] },
            FormFamily::SoStar => RealForm::SoStar { m: params[0] },
            FormFamily::SpR => RealForm::SpR { n: params[0] },
            FormFamily::Sp => RealForm::Sp { p: params[0], q: params[1] },
        };
        form.checked()
    }

    /// Supported noncompact forms whose size parameter is at most `bound`:
    /// `p + q` for su, so and sp(2p,2q), `n` for sl(n,R) and sp(2n,R), `m`
    /// for su*(2m) and so*(2m). Two-parameter forms are listed with
    /// `p <= q`.
    pub fn forms_up_to(self, bound: usize) -> Vec<RealForm> {
        let mut out = Vec::new();
        if self.arity() == 2 {
            for total in 2..=bound {
                for p in 1..=total / 2 {
                    out.extend(self.form(&[p, total - p]));
                }
            }
        } else {
            for n in 1..=bound {
                out.extend(self.form(&[n]));
            }
        }
        out.retain(|f| !f.is_compact());
        out
    }
}

impl fmt::Display for FormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormFamily::Su => "su",
            FormFamily::Sl => "sl",
            FormFamily::SuStar => "su*",
            FormFamily::So => "so",
            FormFamily::SoStar => "so*",
            FormFamily::SpR => "spR",
            FormFamily::Sp => "sp",
        })
    }
}

impl FromStr for FormFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "su" => FormFamily::Su,
            "sl" => FormFamily::Sl,
            "su*" | "sustar" => FormFamily::SuStar,
            "so" => FormFamily::So,
            "so*" | "sostar" => FormFamily::SoStar,
            "spr" | "sp_r" => FormFamily::SpR,
            "sp" => FormFamily::Sp,
            _ => return Err(Error::Domain(format!("unknown real form family {s:?}"))),
        })
    }
}

/// Scans every form of the family up to `bound` (see
/// [`FormFamily::forms_up_to`]) and returns the extended magical orbits.
pub fn classify_family(family: FormFamily, bound: usize) -> Result<Vec<ClassifiedOrbit>> {
    let mut out = Vec::new();
    for form in family.forms_up_to(bound) {
        out.extend(classify_real_form(form)?);
    }
    Ok(out)
}
