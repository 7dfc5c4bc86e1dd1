//! TunkRank influence.

use rayon::prelude::*;

use super::{iterate, noop, pull, IterationConfig, Method, Norm, ScoreVector, Sweep};
use crate::error::{Error, Result};
use crate::graph::SocialGraph;

/// Retweet probability measured on the reference crawl (2.87%).
pub const DEFAULT_RETWEET_PROBABILITY: f64 = 0.0287;

pub fn tunkrank(
    g: &SocialGraph,
    retweet_probability: f64,
    cfg: &IterationConfig,
) -> Result<ScoreVector> {
    tunkrank_observed(g, retweet_probability, cfg, &mut noop)
}

/// Fixed point of `I(X) = Σ_{Y ∈ followers(X)} (1 + p·I(Y)) / |following(Y)|`,
/// iterated from all zeros with an L∞ stopping rule. Scores are raw
/// influence values, not a distribution.
pub fn tunkrank_observed(
    g: &SocialGraph,
    retweet_probability: f64,
    cfg: &IterationConfig,
    observer: &mut dyn FnMut(&Sweep<'_>),
) -> Result<ScoreVector> {
    cfg.validate()?;
    if !(0.0..1.0).contains(&retweet_probability) {
        return Err(Error::input(format!(
            "retweet probability {retweet_probability} outside [0, 1)"
        )));
    }
    let n = g.node_count();
    let inv_out: Vec<f64> = g
        .users()
        .map(|u| match g.out_degree(u) {
            0 => 0.0,
            k => 1.0 / k as f64,
        })
        .collect();
    let mut contrib = vec![0.0; n];
    let p = retweet_probability;

    let fp = iterate(
        vec![0.0; n],
        cfg,
        Norm::LInf,
        |x, next| {
            contrib
                .par_iter_mut()
                .with_min_len(4096)
                .zip(x.par_iter().zip(inv_out.par_iter()))
                .for_each(|(c, (xi, w))| *c = (1.0 + p * xi) * w);
            pull(g, &contrib, next);
        },
        observer,
    );
    Ok(ScoreVector {
        method: Method::TunkRank,
        scores: fp.scores,
        iterations_used: fp.iterations,
        converged: fp.converged,
    })
}
