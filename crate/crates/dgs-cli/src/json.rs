//! Serialized report shapes.
//!
//! Struct fields are declared alphabetically, big integers are decimal
//! strings, and polynomials are ascending coefficient arrays, so the
//! emitted JSON is byte-stable across runs and diffs cleanly.

use dgs_core::certify::{DgsCertificate, PrimeEvidence, Verdict};
use dgs_core::intalg::IntPoly;
use dgs_core::modalg::ModPoly;
use dgs_core::oracle::{CospectralClass, ValidationReport};
use dgs_core::spectral::{PrimeRecord, SpectralProfile};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub fn int_poly(f: &IntPoly) -> Vec<String> {
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn mod_poly(f: &ModPoly) -> Vec<u64> {
    f.coeffs().to_vec()
}

pub fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Inconclusive => "inconclusive",
        Verdict::NotApplicable => "not_applicable",
    }
}

#[derive(Serialize)]
pub struct PrimeRecordJson {
    pub f_lift: Vec<String>,
    pub main_poly: Vec<u64>,
    pub nullity: usize,
    pub p: u64,
    pub phi: Vec<u64>,
    pub q: Vec<u64>,
    pub r: usize,
    pub sfp_phi: Vec<u64>,
    pub sqrt_phi: Vec<u64>,
}

impl From<&PrimeRecord> for PrimeRecordJson {
    fn from(rec: &PrimeRecord) -> Self {
        PrimeRecordJson {
            f_lift: int_poly(&rec.f_lift),
            main_poly: mod_poly(&rec.main_poly),
            nullity: rec.nullity,
            p: rec.p,
            phi: mod_poly(&rec.phi),
            q: mod_poly(&rec.q),
            r: rec.r,
            sfp_phi: mod_poly(&rec.sfp_phi),
            sqrt_phi: mod_poly(&rec.sqrt_phi),
        }
    }
}

#[derive(Serialize)]
pub struct ProfileJson {
    pub chi: Vec<String>,
    pub chi_complement: Vec<String>,
    pub controllable: bool,
    pub det_walk: String,
    pub graph6: String,
    pub order: usize,
    pub primes: Vec<PrimeRecordJson>,
    /// Invariant factors of the walk matrix; absent when singular.
    pub snf: Option<Vec<String>>,
}

impl ProfileJson {
    pub fn new(profile: &SpectralProfile, snf: Option<&[BigInt]>) -> Self {
        ProfileJson {
            chi: int_poly(&profile.chi),
            chi_complement: int_poly(&profile.chi_complement),
            controllable: profile.det_walk != BigInt::from(0),
            det_walk: profile.det_walk.to_string(),
            graph6: profile.graph6.clone(),
            order: profile.order,
            primes: profile.primes.iter().map(PrimeRecordJson::from).collect(),
            snf: snf.map(|fs| fs.iter().map(|f| f.to_string()).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct EvidenceJson {
    pub degree_doubled: bool,
    pub record: PrimeRecordJson,
    pub sfp_matches_nullity: bool,
    pub sqrt_matches_nullity: bool,
}

impl From<&PrimeEvidence> for EvidenceJson {
    fn from(ev: &PrimeEvidence) -> Self {
        EvidenceJson {
            degree_doubled: ev.degree_doubled,
            record: PrimeRecordJson::from(&ev.record),
            sfp_matches_nullity: ev.sfp_matches_nullity,
            sqrt_matches_nullity: ev.sqrt_matches_nullity,
        }
    }
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub controllable: bool,
    pub d_n: Option<String>,
    pub d_n_squarefree: Option<bool>,
    pub det_walk: String,
    pub dgs_established: bool,
    pub evidence: Vec<EvidenceJson>,
    pub family_f: bool,
    pub family_g: Option<bool>,
    pub graph6: String,
    pub main: &'static str,
    pub main0: &'static str,
    pub oracle_confirmed: Option<bool>,
    pub order: usize,
    pub wt: &'static str,
    pub wt2: &'static str,
}

impl From<&DgsCertificate> for CertificateJson {
    fn from(cert: &DgsCertificate) -> Self {
        CertificateJson {
            controllable: cert.controllable,
            d_n: cert.d_n.as_ref().map(|d| d.to_string()),
            d_n_squarefree: cert.d_n_squarefree,
            det_walk: cert.det_walk.to_string(),
            dgs_established: cert.dgs_established(),
            evidence: cert.evidence.iter().map(EvidenceJson::from).collect(),
            family_f: cert.family_f,
            family_g: cert.family_g,
            graph6: cert.graph6.clone(),
            main: verdict(cert.main),
            main0: verdict(cert.main0),
            oracle_confirmed: cert.oracle_confirmed,
            order: cert.order,
            wt: verdict(cert.wt),
            wt2: verdict(cert.wt2),
        }
    }
}

/// One line of the persisted oracle class store.
#[derive(Serialize, Deserialize)]
pub struct ClassRecord {
    pub chi: Vec<String>,
    pub chi_complement: Vec<String>,
    pub members: Vec<String>,
    pub n: usize,
}

impl ClassRecord {
    pub fn new(n: usize, class: &CospectralClass) -> Self {
        ClassRecord {
            chi: int_poly(&class.chi),
            chi_complement: int_poly(&class.chi_complement),
            members: class.members.iter().map(|g| g.to_graph6()).collect(),
            n,
        }
    }
}

#[derive(Serialize)]
pub struct MultiClassJson {
    pub chi: Vec<String>,
    pub chi_complement: Vec<String>,
    pub members: Vec<String>,
}

#[derive(Serialize)]
pub struct OracleReportJson {
    pub checks_performed: usize,
    pub class_count: usize,
    /// The interesting part of the inventory: every class with
    /// nonisomorphic generalized-cospectral members, in full.
    pub multi_member_classes: Vec<MultiClassJson>,
    pub order: usize,
    pub pairs_checked: usize,
    pub singleton_classes: usize,
    pub violations: Vec<String>,
}

impl OracleReportJson {
    pub fn new(report: &ValidationReport, classes: &[CospectralClass]) -> Self {
        let multi: Vec<MultiClassJson> = classes
            .iter()
            .filter(|c| !c.is_singleton())
            .map(|c| MultiClassJson {
                chi: int_poly(&c.chi),
                chi_complement: int_poly(&c.chi_complement),
                members: c.members.iter().map(|g| g.to_graph6()).collect(),
            })
            .collect();
        OracleReportJson {
            checks_performed: report.checks_performed,
            class_count: report.class_count,
            singleton_classes: report.class_count - multi.len(),
            multi_member_classes: multi,
            order: report.order,
            pairs_checked: report.pairs_checked,
            violations: report.violations.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct FamilyMemberJson {
    pub certificate_path: String,
    pub dgs_established: bool,
    pub family_g: Option<bool>,
    pub graph6_path: String,
    pub main: &'static str,
    pub order: usize,
}

#[derive(Serialize)]
pub struct FamilySummaryJson {
    pub depth: usize,
    pub members: Vec<FamilyMemberJson>,
    pub root: usize,
    pub rooted_graph6: String,
    pub seed_graph6: String,
}
