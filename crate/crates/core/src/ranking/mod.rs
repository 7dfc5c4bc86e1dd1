//! Rank-prestige algorithms over a [`SocialGraph`].
//!
//! Prestige flows along follow edges: a follower endorses every user it
//! follows. All iterative methods share [`IterationConfig`] and the same sweep
//! driver; each sweep is a pull over follower lists, parallel across users
//! but with every per-user sum evaluated in a fixed order, so results do not
//! depend on the thread count.

mod discount;
mod hits;
mod surfer;
mod tunkrank;
mod twitterrank;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::SocialGraph;
use crate::textfeat::TermVector;

pub use discount::{
    discounted_pagerank, discounted_pagerank_observed, discounted_ratio, paradoxical_ratio,
    prune_graph, pruned_pagerank, raw_ratio, DiscountWeights,
};
pub use hits::{hits, hits_observed, HitsScores, HitsSweep};
pub use surfer::{noderanking, noderanking_observed, pagerank, pagerank_observed};
pub use tunkrank::{tunkrank, tunkrank_observed, DEFAULT_RETWEET_PROBABILITY};
pub use twitterrank::{twitterrank, twitterrank_observed};

/// Stopping rule and damping shared by the iterative methods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationConfig {
    /// Stop once one sweep moves the scores by less than this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Teleportation probability (PageRank's d, TwitterRank's γ).
    pub damping: f64,
}

impl Default for IterationConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 200,
            damping: 0.15,
        }
    }
}

impl IterationConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::input("tolerance must be positive"));
        }
        if self.max_iterations == 0 {
            return Err(Error::input("max_iterations must be at least 1"));
        }
        if !(0.0..1.0).contains(&self.damping) {
            return Err(Error::input("damping must lie in [0, 1)"));
        }
        Ok(())
    }
}

/// The ranking methods known to the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    PageRank,
    Hits,
    NodeRanking,
    TunkRank,
    TwitterRank,
    DiscountedPageRank,
    PrunedPageRank,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::PageRank,
        Method::Hits,
        Method::NodeRanking,
        Method::TunkRank,
        Method::TwitterRank,
        Method::DiscountedPageRank,
        Method::PrunedPageRank,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::PageRank => "pagerank",
            Method::Hits => "hits",
            Method::NodeRanking => "noderanking",
            Method::TunkRank => "tunkrank",
            Method::TwitterRank => "twitterrank",
            Method::DiscountedPageRank => "discounted-pagerank",
            Method::PrunedPageRank => "pruned-pagerank",
        }
    }

    /// Whether the method's output is a probability distribution.
    pub fn conserves_mass(self) -> bool {
        matches!(
            self,
            Method::PageRank
                | Method::NodeRanking
                | Method::TwitterRank
                | Method::DiscountedPageRank
                | Method::PrunedPageRank
        )
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Method::ALL.iter().map(|m| m.as_str()).collect();
                Error::input(format!("unknown method {s:?}; expected one of {}", known.join(", ")))
            })
    }
}

/// Per-user prestige scores produced by one method.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub method: Method,
    pub scores: Vec<f64>,
    pub iterations_used: usize,
    pub converged: bool,
}

impl ScoreVector {
    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.scores.iter().sum()
    }

    /// Copy rescaled to sum to one. Fails when every score is zero.
    pub fn normalized(&self) -> Result<ScoreVector> {
        let total = self.total();
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::input(format!(
                "{} scores sum to {total}; cannot normalize",
                self.method
            )));
        }
        Ok(ScoreVector {
            scores: self.scores.iter().map(|s| s / total).collect(),
            ..self.clone()
        })
    }
}

/// One completed sweep, as seen by an observer.
#[derive(Debug, Clone, Copy)]
pub struct Sweep<'a> {
    /// 1-based sweep number.
    pub iteration: usize,
    pub scores: &'a [f64],
    /// Distance from the previous iterate in the method's convergence norm.
    pub delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Norm {
    L1,
    LInf,
}

impl Norm {
    pub(crate) fn distance(self, a: &[f64], b: &[f64]) -> f64 {
        let diffs = a.iter().zip(b).map(|(x, y)| (x - y).abs());
        match self {
            Norm::L1 => diffs.sum(),
            Norm::LInf => diffs.fold(0.0, f64::max),
        }
    }
}

/// Outcome of [`iterate`]: final scores, sweeps used, convergence flag.
pub(crate) struct FixedPoint {
    pub scores: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Repeats `sweep(current, next)` until the distance between successive
/// iterates falls below the tolerance. The observer sees every iterate.
pub(crate) fn iterate<S>(
    init: Vec<f64>,
    cfg: &IterationConfig,
    norm: Norm,
    mut sweep: S,
    observer: &mut dyn FnMut(&Sweep<'_>),
) -> FixedPoint
where
    S: FnMut(&[f64], &mut [f64]),
{
    let mut current = init;
    let mut next = vec![0.0; current.len()];
    for iteration in 1..=cfg.max_iterations {
        sweep(&current, &mut next);
        let delta = norm.distance(&current, &next);
        std::mem::swap(&mut current, &mut next);
        observer(&Sweep {
            iteration,
            scores: &current,
            delta,
        });
        if delta < cfg.tolerance {
            return FixedPoint {
                scores: current,
                iterations: iteration,
                converged: true,
            };
        }
    }
    FixedPoint {
        scores: current,
        iterations: cfg.max_iterations,
        converged: false,
    }
}

/// `next[i] = Σ_{j ∈ followers(i)} contrib[j]`, evaluated in follower-id
/// order for every `i`.
pub(crate) fn pull(g: &SocialGraph, contrib: &[f64], next: &mut [f64]) {
    next.par_iter_mut()
        .with_min_len(512)
        .enumerate()
        .for_each(|(i, slot)| {
            *slot = g
                .followers(crate::graph::UserId::from(i))
                .iter()
                .map(|j| contrib[j.index()])
                .sum();
        });
}

/// Rescales `v` in place to sum to one. Returns `false` (leaving `v` zeroed)
/// when all mass has vanished.
pub(crate) fn normalize_l1(v: &mut [f64]) -> bool {
    let total: f64 = v.iter().sum();
    if total > 0.0 {
        v.par_iter_mut().with_min_len(4096).for_each(|x| *x /= total);
        true
    } else {
        v.fill(0.0);
        false
    }
}

pub(crate) fn require_nodes(g: &SocialGraph, what: &str) -> Result<()> {
    if g.node_count() == 0 {
        Err(Error::EmptyGraph(format!("{what} needs at least one user")))
    } else {
        Ok(())
    }
}

pub(crate) fn noop(_: &Sweep<'_>) {}

/// Extra per-method inputs for [`run_method`].
#[derive(Debug, Clone, Copy)]
pub struct MethodInputs<'a> {
    /// TunkRank retweet probability.
    pub retweet_probability: f64,
    /// Per-user term vectors and tweet counts, required by TwitterRank.
    pub corpus: Option<(&'a [TermVector], &'a [u64])>,
}

impl Default for MethodInputs<'_> {
    fn default() -> Self {
        Self {
            retweet_probability: DEFAULT_RETWEET_PROBABILITY,
            corpus: None,
        }
    }
}

/// Runs `method` on `g`. HITS reports its authority vector.
pub fn run_method(
    method: Method,
    g: &SocialGraph,
    cfg: &IterationConfig,
    inputs: &MethodInputs<'_>,
) -> Result<ScoreVector> {
    match method {
        Method::PageRank => pagerank(g, cfg),
        Method::Hits => hits(g, cfg).map(|h| h.authority),
        Method::NodeRanking => noderanking(g, cfg),
        Method::TunkRank => tunkrank(g, inputs.retweet_probability, cfg),
        Method::TwitterRank => {
            let (vectors, counts) = inputs
                .corpus
                .ok_or_else(|| Error::input("twitterrank requires a tweet corpus"))?;
            twitterrank(g, vectors, counts, cfg)
        }
        Method::DiscountedPageRank => discounted_pagerank(g, &g.reciprocity_profiles(), cfg),
        Method::PrunedPageRank => pruned_pagerank(g, &g.reciprocity_profiles(), cfg),
    }
}

/// Flat `key = value` ranking settings: `tolerance`, `max_iterations`,
/// `damping` and `retweet_probability`. Missing keys keep their defaults.
pub fn parse_rank_config(text: &str) -> Result<(IterationConfig, f64)> {
    let mut cfg = IterationConfig::default();
    let mut retweet = DEFAULT_RETWEET_PROBABILITY;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, v) = line
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| Error::parse(ln, "expected key = value"))?;
        let bad = || Error::parse(ln, format!("invalid value {v:?} for {key}"));
        match key {
            "tolerance" => cfg.tolerance = v.parse().map_err(|_| bad())?,
            "max_iterations" => cfg.max_iterations = v.parse().map_err(|_| bad())?,
            "damping" => cfg.damping = v.parse().map_err(|_| bad())?,
            "retweet_probability" => retweet = v.parse().map_err(|_| bad())?,
            _ => return Err(Error::parse(ln, format!("unknown key {key:?}"))),
        }
    }
    cfg.validate()?;
    if !(0.0..1.0).contains(&retweet) {
        return Err(Error::input("retweet_probability must lie in [0, 1)"));
    }
    Ok((cfg, retweet))
}
