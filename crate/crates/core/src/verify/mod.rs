//! Seeded randomized campaigns over the multiplicity, parity, orientation and
//! degree identities, with replayable first-failure witnesses.

mod checks;
mod generate;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{Problem, ProblemFile};
use crate::random::CoefficientBounds;

pub use generate::{
    generate_jordan_seed, generate_random_path, jordan_matrix, random_integer_vector,
    random_interior_point, random_interval, random_unimodular, JordanSeed, PathRequest,
};

/// Largest dimension for checks that compute Smith forms.
pub const MAX_SMITH_DIMENSION: usize = 6;
/// Largest dimension for every other check.
pub const MAX_DIMENSION: usize = 8;
pub const MAX_PATH_DEGREE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    ChiAgreement,
    ChiProduct,
    ChiNormalization,
    MalgEquivalence,
    ParityOracle,
    ParityProduct,
    ParitySplit,
    ParityHomotopy,
    OrientationC3,
    DegreeFormulaEquivalence,
    DegreeAxioms,
    LsFormula,
}

impl CheckName {
    pub const ALL: [CheckName; 12] = [
        CheckName::ChiAgreement,
        CheckName::ChiProduct,
        CheckName::ChiNormalization,
        CheckName::MalgEquivalence,
        CheckName::ParityOracle,
        CheckName::ParityProduct,
        CheckName::ParitySplit,
        CheckName::ParityHomotopy,
        CheckName::OrientationC3,
        CheckName::DegreeFormulaEquivalence,
        CheckName::DegreeAxioms,
        CheckName::LsFormula,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::ChiAgreement => "chi-agreement",
            CheckName::ChiProduct => "chi-product",
            CheckName::ChiNormalization => "chi-normalization",
            CheckName::MalgEquivalence => "malg-equivalence",
            CheckName::ParityOracle => "parity-oracle",
            CheckName::ParityProduct => "parity-product",
            CheckName::ParitySplit => "parity-split",
            CheckName::ParityHomotopy => "parity-homotopy",
            CheckName::OrientationC3 => "orientation-c3",
            CheckName::DegreeFormulaEquivalence => "degree-formula-equivalence",
            CheckName::DegreeAxioms => "degree-axioms",
            CheckName::LsFormula => "ls-formula",
        }
    }

    /// Checks whose instances compute Smith forms.
    pub fn uses_smith(self) -> bool {
        matches!(
            self,
            CheckName::ChiAgreement | CheckName::ChiProduct | CheckName::ChiNormalization
        )
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<CheckName>> {
        let s = s.trim();
        if s == "all" {
            return Ok(CheckName::ALL.to_vec());
        }
        let mut out: Vec<CheckName> = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let c = part.parse()?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
        Ok(out)
    }

    fn stream(self) -> u64 {
        0x5645_5249_0000 + self as u64
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

fn default_instances() -> usize {
    50
}

fn default_dims() -> [usize; 2] {
    [1, 3]
}

fn default_degrees() -> [usize; 2] {
    [1, 2]
}

fn all_checks() -> Vec<CheckName> {
    CheckName::ALL.to_vec()
}

/// A randomized campaign. Instance `i` of check `c` depends only on
/// `(seed, c, i)` and the ranges, so any single instance can be replayed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Campaign {
    pub seed: u64,
    #[serde(default = "default_instances")]
    pub instances: usize,
    /// Index of the first instance.
    #[serde(default)]
    pub offset: usize,
    /// Inclusive dimension range.
    #[serde(default = "default_dims")]
    pub dims: [usize; 2],
    /// Inclusive path-degree range.
    #[serde(default = "default_degrees")]
    pub degrees: [usize; 2],
    #[serde(default = "all_checks")]
    pub checks: Vec<CheckName>,
    #[serde(default)]
    pub bounds: CoefficientBounds,
}

impl Campaign {
    pub fn new(seed: u64, instances: usize, checks: Vec<CheckName>) -> Self {
        Campaign {
            seed,
            instances,
            offset: 0,
            dims: default_dims(),
            degrees: default_degrees(),
            checks,
            bounds: CoefficientBounds::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse(format!("invalid campaign: {msg}")));
        if self.instances == 0 {
            return bad("instance count must be at least 1".into());
        }
        let [lo, hi] = self.dims;
        if lo == 0 || lo > hi || hi > MAX_DIMENSION {
            return bad(format!(
                "dimension range {lo}..{hi} must lie within 1..{MAX_DIMENSION}"
            ));
        }
        if hi > MAX_SMITH_DIMENSION {
            if let Some(c) = self.checks.iter().find(|c| c.uses_smith()) {
                return bad(format!(
                    "{c} supports dimensions up to {MAX_SMITH_DIMENSION}"
                ));
            }
        }
        let [dlo, dhi] = self.degrees;
        if dlo == 0 || dlo > dhi || dhi > MAX_PATH_DEGREE {
            return bad(format!(
                "degree range {dlo}..{dhi} must lie within 1..{MAX_PATH_DEGREE}"
            ));
        }
        if self.bounds.numerator < 1 || self.bounds.denominator < 1 {
            return bad("coefficient bounds must be positive".into());
        }
        Ok(())
    }

    /// The single-instance campaign that replays instance `index` of `check`.
    pub fn replay_of(&self, check: CheckName, index: usize) -> Campaign {
        Campaign {
            instances: 1,
            offset: index,
            checks: vec![check],
            ..self.clone()
        }
    }

    /// The CLI invocation running this campaign.
    pub fn command(&self) -> String {
        let checks: Vec<&str> = self.checks.iter().map(|c| c.as_str()).collect();
        let mut cmd = format!(
            "paritydeg verify --seed {} --n {} --offset {} --dims {}..{} --degrees {}..{} --checks {}",
            self.seed,
            self.instances,
            self.offset,
            self.dims[0],
            self.dims[1],
            self.degrees[0],
            self.degrees[1],
            checks.join(",")
        );
        if self.bounds != CoefficientBounds::default() {
            cmd.push_str(&format!(
                " --bounds {}/{}",
                self.bounds.numerator, self.bounds.denominator
            ));
        }
        cmd
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub instance: usize,
    pub message: String,
    /// The failing input, when it fits a single problem file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<ProblemFile>,
    /// A campaign file replaying exactly this instance.
    pub replay: ProblemFile,
    pub replay_command: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: CheckName,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub campaign: Campaign,
    pub checks: Vec<CheckSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn summary(&self, check: CheckName) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let c = &self.campaign;
        let mut out = format!(
            "campaign: seed {}, instances {}..{}, dims {}..{}, degrees {}..{}\n",
            c.seed,
            c.offset,
            c.offset + c.instances,
            c.dims[0],
            c.dims[1],
            c.degrees[0],
            c.degrees[1]
        );
        if self.checks.is_empty() {
            out.push_str("no checks selected\n");
            return out;
        }
        out.push_str(&format!(
            "{:<28}{:>8}{:>8}{:>8}\n",
            "check", "passed", "failed", "skipped"
        ));
        for s in &self.checks {
            out.push_str(&format!(
                "{:<28}{:>8}{:>8}{:>8}",
                s.check.as_str(),
                s.passed,
                s.failed,
                s.skipped
            ));
            if let Some(ms) = s.elapsed_ms {
                out.push_str(&format!("  {ms} ms"));
            }
            out.push('\n');
            if let Some(w) = &s.first_failure {
                out.push_str(&format!(
                    "  first failure at instance {}: {}\n",
                    w.instance, w.message
                ));
                out.push_str(&format!("  replay: {}\n", w.replay_command));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("total time: {ms} ms\n"));
        }
        let failed = self.checks.iter().filter(|s| s.failed > 0).count();
        if failed == 0 {
            out.push_str("result: all checks passed\n");
        } else {
            out.push_str(&format!("result: {failed} check(s) failed\n"));
        }
        out
    }
}

/// Runs `campaign` without timing; the report is a pure function of the campaign.
pub fn run(campaign: &Campaign) -> Result<Report> {
    run_with(campaign, false)
}

/// Instances run in parallel and merge in index order, so the report does not
/// depend on scheduling. Wall-clock timing is added only when `timing` is set.
pub fn run_with(campaign: &Campaign, timing: bool) -> Result<Report> {
    campaign.validate()?;
    let start = Instant::now();
    let mut summaries = Vec::with_capacity(campaign.checks.len());
    for &check in &campaign.checks {
        let t0 = Instant::now();
        let outcomes: Vec<checks::Outcome> = (campaign.offset
            ..campaign.offset + campaign.instances)
            .into_par_iter()
            .map(|i| checks::run_instance(check, campaign, i))
            .collect();
        let mut s = CheckSummary {
            check,
            passed: 0,
            failed: 0,
            skipped: 0,
            first_failure: None,
            elapsed_ms: None,
        };
        for (k, o) in outcomes.into_iter().enumerate() {
            match o.verdict {
                checks::Verdict::Pass => s.passed += 1,
                checks::Verdict::Skip(_) => s.skipped += 1,
                checks::Verdict::Fail(message) => {
                    s.failed += 1;
                    if s.first_failure.is_none() {
                        let instance = campaign.offset + k;
                        let replay = campaign.replay_of(check, instance);
                        s.first_failure = Some(Witness {
                            instance,
                            message,
                            input: o.input,
                            replay_command: replay.command(),
                            replay: ProblemFile::new(Problem::Campaign(replay)),
                        });
                    }
                }
            }
        }
        if timing {
            s.elapsed_ms = Some(t0.elapsed().as_millis() as u64);
        }
        summaries.push(s);
    }
    Ok(Report {
        campaign: campaign.clone(),
        checks: summaries,
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}
