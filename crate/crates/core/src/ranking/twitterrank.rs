//! Topic-free TwitterRank: follower transitions weighted by tweet volume and
//! content similarity, with teleportation proportional to tweet volume.

use rayon::prelude::*;

use super::{
    iterate, noop, normalize_l1, require_nodes, IterationConfig, Method, Norm, ScoreVector, Sweep,
};
use crate::error::{Error, Result};
use crate::graph::{SocialGraph, UserId};
use crate::textfeat::{cosine_sim, TermVector};

pub fn twitterrank(
    g: &SocialGraph,
    term_vectors: &[TermVector],
    tweet_counts: &[u64],
    cfg: &IterationConfig,
) -> Result<ScoreVector> {
    twitterrank_observed(g, term_vectors, tweet_counts, cfg, &mut noop)
}

/// Iterates
/// `TR(i) = (1-γ) Σ_{j→i} P(j,i)·TR(j) + γ·|τ_i|/|τ|` with
/// `P(j,i) = |τ_i| / Σ_{a ∈ L(j)} |τ_a| · sim(j,i)`, where `γ` is
/// `cfg.damping` and `sim` is cosine similarity of term vectors. Similarity
/// makes the transition rows sub-stochastic, so each iterate is rescaled to
/// sum to one.
pub fn twitterrank_observed(
    g: &SocialGraph,
    term_vectors: &[TermVector],
    tweet_counts: &[u64],
    cfg: &IterationConfig,
    observer: &mut dyn FnMut(&Sweep<'_>),
) -> Result<ScoreVector> {
    cfg.validate()?;
    require_nodes(g, "twitterrank")?;
    let n = g.node_count();
    if term_vectors.len() != n || tweet_counts.len() != n {
        return Err(Error::input(format!(
            "twitterrank needs one term vector and tweet count per user ({n}); got {} and {}",
            term_vectors.len(),
            tweet_counts.len()
        )));
    }
    let total: u64 = tweet_counts.iter().sum();
    if total == 0 {
        return Err(Error::input(
            "twitterrank teleportation is undefined when nobody has tweeted",
        ));
    }
    let gamma = cfg.damping;
    let teleport: Vec<f64> = tweet_counts
        .iter()
        .map(|&t| gamma * t as f64 / total as f64)
        .collect();
    // Σ_{a ∈ L(j)} |τ_a| for every follower j.
    let followee_tweets: Vec<u64> = g
        .users()
        .map(|j| g.followees(j).iter().map(|a| tweet_counts[a.index()]).sum())
        .collect();
    // P(j, i) for each follower j of i, laid out in follower-list order.
    let transitions: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let tau_i = tweet_counts[i] as f64;
            g.followers(UserId::from(i))
                .iter()
                .map(|&j| {
                    let denom = followee_tweets[j.index()];
                    if denom == 0 || tau_i == 0.0 {
                        0.0
                    } else {
                        tau_i / denom as f64 * cosine_sim(&term_vectors[j.index()], &term_vectors[i])
                    }
                })
                .collect()
        })
        .collect();

    let fp = iterate(
        vec![1.0 / n as f64; n],
        cfg,
        Norm::L1,
        |x, next| {
            next.par_iter_mut()
                .with_min_len(512)
                .enumerate()
                .for_each(|(i, slot)| {
                    let inflow: f64 = g
                        .followers(UserId::from(i))
                        .iter()
                        .zip(&transitions[i])
                        .map(|(j, p)| p * x[j.index()])
                        .sum();
                    *slot = (1.0 - gamma) * inflow + teleport[i];
                });
            normalize_l1(next);
        },
        observer,
    );
    Ok(ScoreVector {
        method: Method::TwitterRank,
        scores: fp.scores,
        iterations_used: fp.iterations,
        converged: fp.converged,
    })
}
