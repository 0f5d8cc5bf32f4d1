//! Parameter sweeps over `(n, k, n0)` for H-graphs whose cycle vertices
//! have a prescribed `Delta_v = m`.
//!
//! `4 Delta` is affine in `t0` with slope `4n`, so each cell has at most
//! one candidate `t0`. A candidate is kept when it is an integer inside the
//! range a gadget of order `n0` with `l` attachments can realize.

use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{self, AnalysisError, Check, Rational, VerifyReport};
use crate::family::{self, build_h, t0_of, FSpec, FamilyError, HParams, Hang};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("t0 = {t0} is below the minimum {min} for n0 = {n0}, l = {l}")]
    Infeasible {
        n0: usize,
        l: usize,
        t0: i64,
        min: i64,
    },
    #[error("hit has no realizing gadget")]
    Unrealized,
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// How many gadget vertices are attached to each cycle vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attach {
    Fixed(usize),
    /// Every gadget vertex is attached (`l = n0`).
    Full,
}

impl Attach {
    fn resolve(self, n0: usize) -> Option<usize> {
        match self {
            Attach::Fixed(l) if l >= 1 && l <= n0 => Some(l),
            Attach::Fixed(_) => None,
            Attach::Full => Some(n0),
        }
    }
}

impl fmt::Display for Attach {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attach::Fixed(l) => write!(f, "{l}"),
            Attach::Full => write!(f, "full"),
        }
    }
}

impl FromStr for Attach {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "full" => Ok(Attach::Full),
            t => match t.parse::<usize>() {
                Ok(l) if l >= 1 => Ok(Attach::Fixed(l)),
                _ => Err(format!(
                    "attachment count must be a positive integer or `full`, got `{s}`"
                )),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub m: i64,
    pub n: RangeInclusive<usize>,
    pub k: RangeInclusive<usize>,
    pub n0: RangeInclusive<usize>,
    /// Attachment modes tried in order; the first that realizes a gadget wins.
    pub attach: Vec<Attach>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepHit {
    pub n: usize,
    pub k: usize,
    pub n0: usize,
    pub t0: i64,
    pub m: i64,
    /// `k / (k + n0)`.
    pub bound: Rational,
    pub realization: Option<FSpec>,
}

impl SweepHit {
    pub fn order(&self) -> usize {
        self.n * (self.k + self.n0)
    }

    pub fn params(&self) -> Option<HParams> {
        self.realization
            .clone()
            .map(|f| HParams::new(self.n, self.k, f))
    }

    fn rank(&self, other: &Self) -> Ordering {
        other
            .bound
            .cmp(&self.bound)
            .then(self.order().cmp(&other.order()))
            .then((self.n, self.k, self.n0).cmp(&(other.n, other.k, other.n0)))
    }
}

/// Why an integral `t0` was discarded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    BelowMinimum { min: i64 },
    AboveMaximum { max: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejected {
    pub n: usize,
    pub k: usize,
    pub n0: usize,
    pub t0: i64,
    pub reason: RejectReason,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    /// Sorted by bound descending, then order ascending.
    pub hits: Vec<SweepHit>,
    pub rejected: Vec<Rejected>,
}

/// Smallest `t0` a gadget of order `n0` with `l` attachments can have.
pub fn t0_min(n0: usize, l: usize) -> i64 {
    2 * n0 as i64 - l as i64
}

/// Largest `t0` considered: `n0` plus the transmission of a path end in `P_{n0}`.
pub fn t0_max(n0: usize) -> i64 {
    let n0 = n0 as i64;
    n0 + n0 * (n0 - 1) / 2
}

/// The unique `t0` with `Delta = m`, if integral.
pub fn solve_t0(n: usize, k: usize, n0: usize, m: i64) -> Option<i64> {
    let (n, k, n0) = (n as i64, k as i64, n0 as i64);
    let base = family::delta_times_four(n, k, n0, 0);
    let rhs = 4 * m - base;
    (rhs % (4 * n) == 0).then(|| rhs / (4 * n))
}

pub fn sweep(config: &SweepConfig) -> SweepOutcome {
    let cells: Vec<(usize, usize, usize)> = config
        .n
        .clone()
        .flat_map(|n| {
            config
                .k
                .clone()
                .flat_map(move |k| config.n0.clone().map(move |n0| (n, k, n0)))
        })
        .filter(|&(n, k, n0)| n >= 3 && k >= 2 && n0 >= 1)
        .collect();

    let results: Vec<Option<Result<SweepHit, Rejected>>> = cells
        .into_par_iter()
        .map(|(n, k, n0)| {
            let t0 = solve_t0(n, k, n0, config.m)?;
            let ls: Vec<usize> = config.attach.iter().filter_map(|a| a.resolve(n0)).collect();
            let min = ls.iter().map(|&l| t0_min(n0, l)).min()?;
            let max = t0_max(n0);
            let reason = if t0 < min {
                Some(RejectReason::BelowMinimum { min })
            } else if t0 > max {
                Some(RejectReason::AboveMaximum { max })
            } else {
                None
            };
            if let Some(reason) = reason {
                return Some(Err(Rejected {
                    n,
                    k,
                    n0,
                    t0,
                    reason,
                }));
            }
            let realization = ls
                .iter()
                .filter(|&&l| t0 >= t0_min(n0, l))
                .find_map(|&l| realize_gadget(n0, l, t0).ok().flatten());
            Some(Ok(SweepHit {
                n,
                k,
                n0,
                t0,
                m: config.m,
                bound: Rational::new(k as i64, (k + n0) as i64),
                realization,
            }))
        })
        .collect();

    let mut outcome = SweepOutcome::default();
    for r in results.into_iter().flatten() {
        match r {
            Ok(hit) => outcome.hits.push(hit),
            Err(rej) => outcome.rejected.push(rej),
        }
    }
    outcome.hits.sort_by(SweepHit::rank);
    outcome.rejected.sort_by_key(|r| (r.n, r.k, r.n0));
    outcome
}

/// `tr_F(center)` of a broom, by arithmetic.
fn broom_center_transmission(leaves: usize, path: usize, hang: Hang) -> i64 {
    let (a, b) = (leaves as i64, path as i64);
    match hang {
        Hang::Center => a + b * (b + 1) / 2,
        Hang::Leaf => a + (b + 1) * (b + 2) / 2 - 1,
    }
}

/// Finds a gadget of order `n0` with `l` attachments and the given `t0`.
///
/// Handles `l = 1` by searching brooms in order of increasing path length,
/// center before leaf, and `l = n0` by the edgeless gadget (which forces
/// `t0 = n0`). Other attachment counts return `None`.
pub fn realize_gadget(n0: usize, l: usize, t0: i64) -> Result<Option<FSpec>, SearchError> {
    let min = t0_min(n0, l);
    if l == 0 || t0 < min {
        return Err(SearchError::Infeasible { n0, l, t0, min });
    }
    let candidate = if l == n0 {
        (t0 == n0 as i64).then_some(FSpec::Empty { l })
    } else if l == 1 {
        let want = t0 - n0 as i64;
        (0..n0)
            .flat_map(|path| [Hang::Center, Hang::Leaf].map(move |hang| (path, hang)))
            .filter(|&(path, hang)| !(hang == Hang::Leaf && (path == 0 || path + 1 == n0)))
            .find(|&(path, hang)| broom_center_transmission(n0 - 1 - path, path, hang) == want)
            .map(|(path, hang)| FSpec::Broom {
                leaves: n0 - 1 - path,
                path,
                hang,
            })
    } else {
        None
    };
    // Accept only what BFS confirms.
    Ok(candidate.filter(|f| t0_of(f) == Ok(t0) && f.order() == n0))
}

#[derive(Debug, Clone)]
pub struct HitReport {
    pub hit: SweepHit,
    pub checks: Vec<Check>,
    pub instance: Option<VerifyReport>,
}

impl HitReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
            && self.instance.as_ref().is_some_and(VerifyReport::passed)
    }

    pub fn r_m(&self) -> Option<Rational> {
        self.instance
            .as_ref()
            .map(|r| analysis::r_m(&r.spectrum, self.hit.m))
    }
}

/// Builds the realized H-graph and checks it by brute force.
pub fn verify_hit(hit: &SweepHit, cap: usize) -> Result<HitReport, SearchError> {
    let fspec = hit.realization.clone().ok_or(SearchError::Unrealized)?;
    let mut checks = vec![
        Check::equal("realization n0", hit.n0, fspec.order()),
        Check::holds(
            "realization t0",
            hit.t0.to_string(),
            t0_of(&fspec).map_or_else(|e| e.to_string(), |t| t.to_string()),
            t0_of(&fspec) == Ok(hit.t0),
        ),
    ];
    if checks.iter().any(|c| !c.pass) {
        return Ok(HitReport {
            hit: hit.clone(),
            checks,
            instance: None,
        });
    }
    let h = build_h(&HParams::new(hit.n, hit.k, fspec))?;
    let report = analysis::verify_instance(&h, cap)?;
    checks.push(Check::holds(
        "delta bfs == m",
        hit.m.to_string(),
        report
            .delta_bfs
            .map_or("cut vertex".into(), |d| d.to_string()),
        report.delta_bfs == Some(hit.m),
    ));
    Ok(HitReport {
        hit: hit.clone(),
        checks,
        instance: Some(report),
    })
}
