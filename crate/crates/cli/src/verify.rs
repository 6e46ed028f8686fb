//! Dispatch from a document and a claim name to the matching check.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use duality_core::closure::ContinuityMode;
use duality_core::duplication::{verify_homeo, verify_main_lemma};
use duality_core::involution::{
    detect_complementation, ortho_fixed_points, verify_co_iso, verify_pi_bicontinuous,
};
use duality_core::mayet::verify_mayet;
use duality_core::report::{first_failure, Check, Witness};
use duality_core::Caps;

use crate::{CliError, PosetDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// the dual of an orthocomplemented poset represents it by clopen sets
    Mayet,
    /// restriction/extension homeomorphism between X and Y
    Homeo,
    /// P is isomorphic to the proper C1-closed C2-open subsets of Y
    MainLemma,
    /// π pulls σ₁(p) back to σ₂(c(p)) and is bicontinuous
    PiBicontinuous,
    /// fixed points of π are the c-orthovaluations
    Fix,
    /// an orthocomplemented P is ortho-isomorphic to CO(Fix π)
    CoIso,
    /// the π-homeomorphism criterion agrees with the complementation axioms
    EocDetect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_family_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_size: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub stats: Stats,
    /// the full report of the underlying check
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub caps: Caps,
    pub mode: ContinuityMode,
}

/// Runs one claim. Input and precondition problems come back as a report
/// with [`Status::Error`], never as a panic.
pub fn run_verify(doc: &PosetDocument, claim: Claim, opts: VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let outcome = dispatch(doc, claim, opts);
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    match outcome {
        Ok((status, witness, stats, details)) => VerificationReport {
            claim,
            status,
            witness,
            stats,
            details,
            wall_time_ms,
        },
        Err(e) => VerificationReport {
            claim,
            status: Status::Error,
            witness: Some(Witness::new(e.to_string(), vec![])),
            stats: Stats {
                p_size: Some(doc.elements.len()),
                ..Stats::default()
            },
            details: Value::Null,
            wall_time_ms,
        },
    }
}

type Outcome = (Status, Option<Witness>, Stats, Value);

fn from_checks(checks: &[Check]) -> (Status, Option<Witness>) {
    match first_failure(checks) {
        None => (Status::Pass, None),
        Some(c) => {
            let mut w = c
                .witness
                .clone()
                .unwrap_or_else(|| Witness::new("check failed", vec![]));
            w.message = format!("{}: {}", c.name, w.message);
            (Status::Fail, Some(w))
        }
    }
}

fn dispatch(doc: &PosetDocument, claim: Claim, opts: VerifyOptions) -> Result<Outcome, CliError> {
    let caps = opts.caps;
    Ok(match claim {
        Claim::Mayet => {
            let e = doc.ortho()?;
            let r = verify_mayet(&e, caps)?;
            let (status, witness) = from_checks(&r.checks);
            let stats = Stats {
                p_size: Some(e.len()),
                x_size: Some(r.x_size),
                closed_family_size: Some(r.closed_family_size),
                family_size: Some(r.clopen_family.len()),
                ..Stats::default()
            };
            (status, witness, stats, to_value(&r))
        }
        Claim::Homeo => {
            let p = doc.poset()?;
            let r = verify_homeo(&p, caps, opts.mode)?;
            let (status, witness) = from_checks(&r.checks);
            let stats = Stats {
                p_size: Some(p.len()),
                e_size: Some(r.e_size),
                x_size: Some(r.x_size),
                y_size: Some(r.y_size),
                ..Stats::default()
            };
            (status, witness, stats, to_value(&r))
        }
        Claim::MainLemma => {
            let p = doc.poset()?;
            let r = verify_main_lemma(&p, caps)?;
            let (status, witness) = from_checks(&r.checks);
            let stats = Stats {
                p_size: Some(p.len()),
                y_size: Some(r.y_size),
                family_size: Some(r.family.len()),
                ..Stats::default()
            };
            (status, witness, stats, to_value(&r))
        }
        Claim::PiBicontinuous => {
            let ip = doc.involuted()?;
            let r = verify_pi_bicontinuous(&ip, caps)?;
            let (status, witness) = from_checks(&r.checks);
            let stats = Stats {
                p_size: Some(ip.len()),
                x_size: Some(r.x_size),
                ..Stats::default()
            };
            (status, witness, stats, to_value(&r))
        }
        Claim::Fix => {
            let ip = doc.involuted()?;
            let (fixed, r) = ortho_fixed_points(&ip, caps)?;
            let (status, witness) = from_checks(&r.checks);
            let stats = Stats {
                p_size: Some(ip.len()),
                x_size: Some(r.x_size),
                y_size: Some(r.fix_size),
                ..Stats::default()
            };
            let mut details = to_value(&r);
            details["fixed_points"] =
                Value::from(fixed.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            (status, witness, stats, details)
        }
        Claim::CoIso => {
            let ip = doc.involuted()?;
            let r = verify_co_iso(&ip, caps)?;
            let (status, witness) = from_checks(&r.checks);
            let stats = Stats {
                p_size: Some(ip.len()),
                x_size: Some(r.x_size),
                y_size: Some(r.y_size),
                family_size: Some(r.clopen_family.len()),
                ..Stats::default()
            };
            (status, witness, stats, to_value(&r))
        }
        Claim::EocDetect => {
            let ip = doc.involuted()?;
            let (_, ev) = detect_complementation(&ip, caps, opts.mode)?;
            let status = if ev.agrees() { Status::Pass } else { Status::Fail };
            let stats = Stats {
                p_size: Some(ip.len()),
                ..Stats::default()
            };
            (status, ev.counterexample.clone(), stats, to_value(&ev))
        }
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}
