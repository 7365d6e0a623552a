//! Extension search strategies and the parameter sweep.

use std::fmt;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use clap::ValueEnum;
use octarep::ilpsolve::{extension_exists_with, witness_extension};
use octarep::{
    closed_form_m3, ep2_extension, solve_tilde_extension, verify_extension, Budget, CandidateExtension, ParkingSpec,
    Space, Status,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cache::TableCache;
use crate::render;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    /// Closed forms, then the triangular solve, then integer programming.
    #[default]
    Auto,
    /// Only the triangular solve on first-row-extended labels.
    Tilde,
    /// Only integer programming.
    Ilp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    TildeSolve,
    IlpMultiplicity,
    IlpCharacter,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::TildeSolve => "tilde-solve",
            Method::IlpMultiplicity => "ilp-multiplicity",
            Method::IlpCharacter => "ilp-character",
        }
    }

    fn ilp(space: Space) -> Self {
        match space {
            Space::Multiplicity => Method::IlpMultiplicity,
            Space::Character => Method::IlpCharacter,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct ExtendReport {
    pub n: usize,
    pub m: u64,
    pub status: Status,
    pub method: Method,
    /// Verified against the target before the report is built.
    pub witness: Option<CandidateExtension>,
    pub nodes: u64,
    pub elapsed: Duration,
    pub note: String,
}

impl ExtendReport {
    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Feasible => 0,
            Status::Infeasible => 3,
            Status::ResourceLimit => 4,
        }
    }

    /// SHA-256 of the canonical JSON rendering of the witness.
    pub fn witness_digest(&self) -> Option<String> {
        let w = self.witness.as_ref()?;
        Some(hex::encode(Sha256::digest(render::multiplicities_json(&w.entries).as_bytes())))
    }
}

pub struct ExtendOptions<'a> {
    pub strategy: Strategy,
    pub space: Space,
    pub budget: Budget,
    pub cache: &'a TableCache,
}

pub fn extend(n: usize, m: u64, opts: &ExtendOptions<'_>) -> Result<ExtendReport> {
    let start = Instant::now();
    let spec = ParkingSpec::new(n, m)?;
    let found = |method: Method, witness: CandidateExtension, nodes: u64, note: String| -> Result<ExtendReport> {
        let check = verify_extension(&witness, &spec);
        if !check.is_valid() {
            bail!("{method} produced a candidate that does not restrict to {spec}: {:?}", check.discrepancies);
        }
        Ok(ExtendReport {
            n,
            m,
            status: Status::Feasible,
            method,
            witness: Some(witness),
            nodes,
            elapsed: start.elapsed(),
            note,
        })
    };

    if opts.strategy == Strategy::Auto {
        if m == 3 {
            return found(Method::ClosedForm, closed_form_m3(n)?, 0, "ceiling-of-thirds formula for m = 3".into());
        }
        if n == 2 && m % 2 == 0 {
            return found(Method::ClosedForm, ep2_extension(m / 2)?, 0, "closed form for n = 2, m even".into());
        }
    }

    if opts.strategy != Strategy::Ilp {
        let tilde = solve_tilde_extension(n, m)?;
        if let Some(ext) = tilde.extension() {
            return found(Method::TildeSolve, ext, 0, "unique solution on first-row-extended labels".into());
        }
        if opts.strategy == Strategy::Tilde {
            let solved: Vec<String> = tilde.solved.iter().map(ToString::to_string).collect();
            return Ok(ExtendReport {
                n,
                m,
                status: Status::Infeasible,
                method: Method::TildeSolve,
                witness: None,
                nodes: 0,
                elapsed: start.elapsed(),
                note: format!(
                    "no nonnegative solution on first-row-extended labels (solved vector ({})); \
                     extensions using other labels are not ruled out",
                    solved.join(", ")
                ),
            });
        }
    }

    let table = (opts.space == Space::Character).then(|| opts.cache.hyp(n + 1));
    let outcome = extension_exists_with(n, m, opts.space, opts.budget, table.as_ref())?;
    let method = Method::ilp(opts.space);
    match outcome.status {
        Status::Feasible => {
            let witness = witness_extension(n, &outcome).ok_or_else(|| anyhow::anyhow!("feasible outcome without witness"))?;
            found(method, witness, outcome.nodes, outcome.certificate_note)
        }
        status => Ok(ExtendReport {
            n,
            m,
            status,
            method,
            witness: None,
            nodes: outcome.nodes,
            elapsed: start.elapsed(),
            note: outcome.certificate_note,
        }),
    }
}

/// One row of the sweep output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub n: usize,
    pub m: u64,
    pub status: String,
    pub method: Method,
    pub witness_digest: Option<String>,
    pub wall_ms: u128,
    pub nodes: u64,
}

impl From<&ExtendReport> for SweepRecord {
    fn from(r: &ExtendReport) -> Self {
        Self {
            n: r.n,
            m: r.m,
            status: r.status.as_str().to_string(),
            method: r.method,
            witness_digest: r.witness_digest(),
            wall_ms: r.elapsed.as_millis(),
            nodes: r.nodes,
        }
    }
}

/// CSV columns written by the sweep; the digest stays in the JSON output.
#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    m: u64,
    status: &'a str,
    method: &'a str,
    wall_ms: u128,
    nodes: u64,
}

pub fn write_csv<W: std::io::Write>(out: W, records: &[SweepRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow {
            n: r.n,
            m: r.m,
            status: &r.status,
            method: r.method.as_str(),
            wall_ms: r.wall_ms,
            nodes: r.nodes,
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Runs `extend` on every `(n, m)` with `n <= n_max`, `m <= m_max` on a pool
/// of `jobs` threads; records come back ordered by `(n, m)`.
pub fn sweep(n_max: usize, m_max: u64, jobs: usize, opts: &ExtendOptions<'_>) -> Result<Vec<SweepRecord>> {
    use rayon::prelude::*;
    let pairs: Vec<(usize, u64)> = (1..=n_max).flat_map(|n| (1..=m_max).map(move |m| (n, m))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    pool.install(|| {
        pairs
            .par_iter()
            .map(|&(n, m)| extend(n, m, opts).map(|r| SweepRecord::from(&r)))
            .collect::<Result<Vec<_>>>()
    })
}
