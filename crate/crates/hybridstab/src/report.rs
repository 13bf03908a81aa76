//! Deterministic JSON report types emitted by the command-line front end.
//!
//! Field order is fixed by declaration; everything before `timings_ms` is
//! byte-reproducible for identical inputs, the timings are not and sit last.

use serde::Serialize;

use crate::code::HybridCode;
use crate::correct::{CorrectabilityReport, SetTag, Verdict};
use crate::distance::{AnticommuteDegrees, DistanceResult};

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Inputs,
    pub code: Option<CodeSummary>,
    pub result: Outcome,
    pub timings_ms: Timings,
}

#[derive(Debug, Default, Serialize)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code_file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub errors_file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct CodeSummary {
    pub dim: u64,
    pub sites: usize,
    pub stabilizer_rank: usize,
    pub gauge_pairs: usize,
    pub logical_pairs: usize,
    pub sectors: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hybrid_notation: Option<String>,
}

impl CodeSummary {
    pub fn of(code: &HybridCode, distance: Option<usize>) -> Self {
        CodeSummary {
            dim: code.qudit_dim(),
            sites: code.num_sites(),
            stabilizer_rank: code.stabilizer_rank(),
            gauge_pairs: code.num_gauge_pairs(),
            logical_pairs: code.num_logical_pairs(),
            sectors: code.sector_count(),
            hybrid_notation: hybrid_notation(code, distance),
        }
    }
}

/// `[[n, k:m, d]]` when the sector count is an exact power of the local
/// dimension and a distance is known.
pub fn hybrid_notation(code: &HybridCode, distance: Option<usize>) -> Option<String> {
    let d = distance?;
    let sectors = code.sector_count() as u128;
    let base = code.qudit_dim() as u128;
    let mut m = 0u32;
    let mut acc = 1u128;
    while acc < sectors {
        acc *= base;
        m += 1;
    }
    if acc != sectors {
        return None;
    }
    Some(format!(
        "[[{}, {}:{}, {}]]",
        code.num_sites(),
        code.num_logical_pairs(),
        m,
        d
    ))
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Validate {
        valid: bool,
        failures: Vec<String>,
        dropped_stabilizer_generators: Vec<String>,
    },
    Check {
        verdict: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<WitnessJson>,
        per_sector: Vec<bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle_verdict: Option<bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle_agrees: Option<bool>,
    },
    Distance {
        exact_distance: Option<usize>,
        lower_bound: usize,
        upper_bound: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<String>,
        search_cutoff: usize,
        anticommute_degree: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        anticommute_degree_css: Option<(usize, usize)>,
    },
    Generate {
        family: String,
        output_file: String,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub error_k: usize,
    pub error_l: usize,
    pub error_k_operator: String,
    pub error_l_operator: String,
    pub forbidden_set: String,
}

#[derive(Debug, Default, Serialize)]
pub struct Timings {
    pub total: u128,
}

pub fn check_outcome(
    report: &CorrectabilityReport,
    errors: &[crate::pauli::PauliOperator],
    oracle_verdict: Option<bool>,
) -> Outcome {
    let verdict = match report.verdict {
        Verdict::Correctable => "correctable",
        Verdict::NotCorrectable => "not_correctable",
    };
    let witness = report.witness.as_ref().map(|w| WitnessJson {
        error_k: w.error_k,
        error_l: w.error_l,
        error_k_operator: errors[w.error_k].to_string(),
        error_l_operator: errors[w.error_l].to_string(),
        forbidden_set: format_tag(&w.tag),
    });
    Outcome::Check {
        verdict: verdict.to_string(),
        witness,
        per_sector: report.per_sector.clone(),
        oracle_verdict,
        oracle_agrees: oracle_verdict.map(|v| v == report.is_correctable()),
    }
}

pub fn format_tag(tag: &SetTag) -> String {
    tag.to_string()
}

pub fn distance_outcome(res: &DistanceResult, degrees: &AnticommuteDegrees) -> Outcome {
    Outcome::Distance {
        exact_distance: res.exact_distance,
        lower_bound: res.lower_bound,
        upper_bound: res.upper_bound,
        witness: res.witness.as_ref().map(|w| w.to_string()),
        search_cutoff: res.search_cutoff,
        anticommute_degree: degrees.overall,
        anticommute_degree_css: degrees.css,
    }
}
