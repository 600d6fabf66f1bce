//! Desk-scale claim harness.
//!
//! Each claim about FS(X,Y) splits into a hypothesis predicate and a
//! conclusion predicate. A check evaluates both, independently, on every
//! instance it is handed: hypothesis-false instances are vacuous (they can
//! never be counterexamples, but they are still counted and their conclusion
//! is still measured, which is how boundary evidence gets recorded). A
//! counterexample exists exactly when the hypothesis holds and the conclusion
//! fails; [`VerificationReport::record`] enforces that rule.
//!
//! Suites (see [`suites`]) bundle fixture instances with seeded random ones.
//! All randomness flows from one recorded seed, instances are generated
//! sequentially and evaluated in parallel, and results are merged back in
//! instance order, so a report is reproducible regardless of thread count.

mod checks;
mod suites;

pub use checks::{
    check_census_symmetry, check_conjecture_8_1, check_lemma_4_1, check_lemma_6_2_instance,
    check_prop_1_6_instance, check_prop_2_2, check_prop_2_3, check_thm_1_10,
    check_thm_1_11_instance, check_thm_1_4, check_thm_1_5, check_thm_2_6, check_thm_2_8,
};
pub use suites::{
    run_claim, run_cor_1_12, run_lem_4_1, run_lem_6_2, run_prop_1_6, run_prop_2_1, run_prop_2_2,
    run_prop_2_3, run_thm_1_10, run_thm_1_11, run_thm_1_4, run_thm_1_5, run_thm_2_6, run_thm_2_8,
    search_conjecture_8_1, ClaimParams, SuiteOptions,
};

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{ConstructError, PairMeta};
use crate::engine::{CensusJson, EngineConfig, EngineError};
use crate::graph::{Graph, GraphError};
use crate::perm::{Bijection, PermError};

/// The claims the harness knows how to exercise. `CONJ_8_1` is the open
/// conjecture behind the `search` command; the rest are proved statements
/// that the suites re-verify at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    Thm1_4,
    Thm1_5,
    Thm1_10,
    Prop2_2,
    Prop2_3,
    Thm2_6,
    Thm2_8,
    Prop1_6,
    Thm1_11,
    Lem4_1,
    Lem6_2,
    Prop2_1,
    Cor1_12,
    Conj8_1,
}

impl ClaimId {
    pub const ALL: [ClaimId; 14] = [
        ClaimId::Thm1_4,
        ClaimId::Thm1_5,
        ClaimId::Thm1_10,
        ClaimId::Prop2_2,
        ClaimId::Prop2_3,
        ClaimId::Thm2_6,
        ClaimId::Thm2_8,
        ClaimId::Prop1_6,
        ClaimId::Thm1_11,
        ClaimId::Lem4_1,
        ClaimId::Lem6_2,
        ClaimId::Prop2_1,
        ClaimId::Cor1_12,
        ClaimId::Conj8_1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Thm1_4 => "THM_1_4",
            ClaimId::Thm1_5 => "THM_1_5",
            ClaimId::Thm1_10 => "THM_1_10",
            ClaimId::Prop2_2 => "PROP_2_2",
            ClaimId::Prop2_3 => "PROP_2_3",
            ClaimId::Thm2_6 => "THM_2_6",
            ClaimId::Thm2_8 => "THM_2_8",
            ClaimId::Prop1_6 => "PROP_1_6",
            ClaimId::Thm1_11 => "THM_1_11",
            ClaimId::Lem4_1 => "LEM_4_1",
            ClaimId::Lem6_2 => "LEM_6_2",
            ClaimId::Prop2_1 => "PROP_2_1",
            ClaimId::Cor1_12 => "COR_1_12",
            ClaimId::Conj8_1 => "CONJ_8_1",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let canon = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == canon)
            .ok_or_else(|| VerifyError::UnknownClaim { input: s.to_string() })
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for ClaimId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ClaimId;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a claim id such as \"THM_1_4\"")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ClaimId, E> {
                v.parse().map_err(E::custom)
            }
        }
        deserializer.deserialize_str(V)
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("unknown claim {input:?}; expected one of THM_1_4, THM_1_5, THM_1_10, PROP_2_2, PROP_2_3, THM_2_6, THM_2_8, PROP_1_6, THM_1_11, LEM_4_1, LEM_6_2, PROP_2_1, COR_1_12, CONJ_8_1")]
    UnknownClaim { input: String },
    #[error("graphs must have the same vertex count; got {left} and {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{claim} needs bipartite inputs: {detail}")]
    BadBipartiteInput { claim: ClaimId, detail: String },
    #[error("{claim} needs the {flag} parameter")]
    MissingParam { claim: ClaimId, flag: &'static str },
    #[error("bad parameter for {claim}: {detail}")]
    BadParam { claim: ClaimId, detail: String },
    #[error("{claim} is checked only up to r = {max}; got r = {got}")]
    ScaleLimit { claim: ClaimId, max: usize, got: usize },
    #[error("counterexample record for {claim} is missing its {field} field")]
    IncompleteRecord { claim: ClaimId, field: &'static str },
    #[error("search region requires 2·min(δ1,δ2) + 3·max(δ1,δ2) ≥ 3n; got {got} < {need}")]
    OutsideSearchRegion { got: usize, need: usize },
    #[error("only generated {got} of {wanted} hypothesis-true instances in {attempts} attempts")]
    GenerationStalled { wanted: usize, got: usize, attempts: usize },
}

/// Outcome of evaluating one instance: both predicates, plus whatever
/// evidence the evaluation produced along the way.
#[derive(Debug, Clone)]
pub struct InstanceCheck {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub census: Option<CensusJson>,
    pub note: Option<String>,
}

/// A self-contained record of a hypothesis-true, conclusion-false instance.
/// Optional fields carry whatever the claim shape needs; [`Counterexample::replay`]
/// recomputes the verdict from the stored data alone.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Counterexample {
    pub claim: ClaimId,
    pub x: Graph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Graph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Bijection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub swap: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<PairMeta>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusJson>,
    #[serde(default)]
    pub note: String,
}

impl Counterexample {
    fn require<'a, T>(
        &self,
        field: &'static str,
        value: &'a Option<T>,
    ) -> Result<&'a T, VerifyError> {
        value.as_ref().ok_or(VerifyError::IncompleteRecord {
            claim: self.claim,
            field,
        })
    }

    /// Re-evaluate the stored instance from scratch. `Ok(true)` means it is
    /// still a genuine counterexample (hypothesis holds, conclusion fails).
    pub fn replay(&self, config: &EngineConfig) -> Result<bool, VerifyError> {
        let chk = match self.claim {
            ClaimId::Thm1_4 => check_thm_1_4(&self.x, self.require("y", &self.y)?, config)?,
            ClaimId::Thm1_5 => check_thm_1_5(&self.x, self.require("y", &self.y)?, config)?,
            ClaimId::Thm1_10 => check_thm_1_10(&self.x, self.require("y", &self.y)?, config)?,
            ClaimId::Prop2_2 => check_prop_2_2(&self.x, self.require("y", &self.y)?, config)?,
            ClaimId::Prop2_3 => {
                // the instance is the pair (K_{r,r}, K_{r,r}) itself
                check_thm_1_10(&self.x, self.require("y", &self.y)?, config)?
            }
            ClaimId::Thm2_6 => check_thm_2_6(self.require("y", &self.y)?, config)?,
            ClaimId::Thm2_8 => check_thm_2_8(self.require("y", &self.y)?, config)?,
            ClaimId::Prop1_6 => check_prop_1_6_instance(
                &self.x,
                self.require("y", &self.y)?,
                self.require("sigma", &self.sigma)?,
                self.require("meta", &self.meta)?,
                config,
            )?,
            ClaimId::Thm1_11 => check_thm_1_11_instance(
                &self.x,
                self.require("y", &self.y)?,
                self.require("sigma", &self.sigma)?,
                self.require("meta", &self.meta)?,
                config,
            )?,
            ClaimId::Lem4_1 => {
                let q = self.require("q", &self.q)?;
                check_lemma_4_1(&self.x, q.iter().copied().collect())?
            }
            ClaimId::Lem6_2 => {
                let &(u, v) = self.require("swap", &self.swap)?;
                check_lemma_6_2_instance(
                    &self.x,
                    self.require("y", &self.y)?,
                    self.require("sigma", &self.sigma)?,
                    u,
                    v,
                    config,
                )?
            }
            ClaimId::Prop2_1 => {
                check_census_symmetry(&self.x, self.require("y", &self.y)?, config)?
            }
            ClaimId::Cor1_12 => {
                // lower-bound rows carry a sigma, upper-bound rows do not
                if self.sigma.is_some() {
                    check_thm_1_11_instance(
                        &self.x,
                        self.require("y", &self.y)?,
                        self.require("sigma", &self.sigma)?,
                        self.require("meta", &self.meta)?,
                        config,
                    )?
                } else {
                    checks::check_cor_1_12_upper(&self.x, self.require("y", &self.y)?, config)?
                }
            }
            ClaimId::Conj8_1 => {
                check_conjecture_8_1(&self.x, self.require("y", &self.y)?, config)?
            }
        };
        Ok(chk.hypothesis && !chk.conclusion)
    }
}

/// Per-claim run summary. `hypothesis_holds` and `conclusion_holds` line up
/// by instance index; `non_vacuous` counts the hypothesis-true entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub instances_checked: usize,
    pub hypothesis_holds: Vec<bool>,
    pub conclusion_holds: Vec<bool>,
    pub non_vacuous: usize,
    pub counterexamples: Vec<Counterexample>,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
    pub elapsed_seconds: f64,
}

impl VerificationReport {
    pub fn new(claim: ClaimId, seed: Option<u64>) -> Self {
        VerificationReport {
            claim,
            instances_checked: 0,
            hypothesis_holds: Vec::new(),
            conclusion_holds: Vec::new(),
            non_vacuous: 0,
            counterexamples: Vec::new(),
            seed,
            notes: Vec::new(),
            elapsed_seconds: 0.0,
        }
    }

    /// Append one instance. A counterexample must be supplied exactly when
    /// the hypothesis holds and the conclusion fails.
    pub fn record(&mut self, check: &InstanceCheck, counterexample: Option<Counterexample>) {
        assert_eq!(
            counterexample.is_some(),
            check.hypothesis && !check.conclusion,
            "a counterexample is recorded iff the hypothesis holds and the conclusion fails"
        );
        if let Some(note) = &check.note {
            self.notes
                .push(format!("instance {}: {note}", self.instances_checked));
        }
        self.hypothesis_holds.push(check.hypothesis);
        self.conclusion_holds.push(check.conclusion);
        if check.hypothesis {
            self.non_vacuous += 1;
        }
        self.instances_checked += 1;
        if let Some(cx) = counterexample {
            self.counterexamples.push(cx);
        }
    }

    pub fn note(&mut self, message: impl Into<String>) {
        self.notes.push(message.into());
    }

    pub fn found_counterexample(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    /// Did the run exercise at least `quota` hypothesis-true instances?
    pub fn meets_non_vacuous_quota(&self, quota: usize) -> bool {
        self.non_vacuous >= quota
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.elapsed_seconds = elapsed.as_secs_f64();
    }

    /// 0 when no counterexample was found, 1 otherwise (the CLI convention).
    pub fn exit_code(&self) -> i32 {
        if self.found_counterexample() {
            1
        } else {
            0
        }
    }
}
