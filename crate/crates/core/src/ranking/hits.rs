//! HITS hub and authority scores over the whole follower graph.

use rayon::prelude::*;

use super::{require_nodes, IterationConfig, Method, Norm, ScoreVector};
use crate::error::Result;
use crate::graph::{SocialGraph, UserId};

/// Authority and hub vectors, each with unit Euclidean norm (or all zero for
/// a graph without edges).
#[derive(Debug, Clone, PartialEq)]
pub struct HitsScores {
    pub authority: ScoreVector,
    pub hub: ScoreVector,
}

#[derive(Debug, Clone, Copy)]
pub struct HitsSweep<'a> {
    pub iteration: usize,
    pub authority: &'a [f64],
    pub hub: &'a [f64],
    pub delta: f64,
}

pub fn hits(g: &SocialGraph, cfg: &IterationConfig) -> Result<HitsScores> {
    hits_observed(g, cfg, &mut |_| {})
}

/// Alternates `auth(p) = Σ_{q→p} hub(q)` and `hub(p) = Σ_{p→q} auth(q)`,
/// normalizing both to unit 2-norm after every sweep. Starts from uniform
/// positive vectors.
pub fn hits_observed(
    g: &SocialGraph,
    cfg: &IterationConfig,
    observer: &mut dyn FnMut(&HitsSweep<'_>),
) -> Result<HitsScores> {
    cfg.validate()?;
    require_nodes(g, "hits")?;
    let n = g.node_count();
    let wrap = |scores: Vec<f64>, iterations_used, converged| ScoreVector {
        method: Method::Hits,
        scores,
        iterations_used,
        converged,
    };
    if g.edge_count() == 0 {
        return Ok(HitsScores {
            authority: wrap(vec![0.0; n], 0, true),
            hub: wrap(vec![0.0; n], 0, true),
        });
    }

    let start = 1.0 / (n as f64).sqrt();
    let mut auth = vec![start; n];
    let mut hub = vec![start; n];
    let mut next_auth = vec![0.0; n];
    let mut next_hub = vec![0.0; n];

    for iteration in 1..=cfg.max_iterations {
        gather(&hub, &mut next_auth, |u| g.followers(u));
        normalize_l2(&mut next_auth);
        gather(&next_auth, &mut next_hub, |u| g.followees(u));
        normalize_l2(&mut next_hub);

        let delta = Norm::L1
            .distance(&auth, &next_auth)
            .max(Norm::L1.distance(&hub, &next_hub));
        std::mem::swap(&mut auth, &mut next_auth);
        std::mem::swap(&mut hub, &mut next_hub);
        observer(&HitsSweep {
            iteration,
            authority: &auth,
            hub: &hub,
            delta,
        });
        if delta < cfg.tolerance {
            return Ok(HitsScores {
                authority: wrap(auth, iteration, true),
                hub: wrap(hub, iteration, true),
            });
        }
    }
    Ok(HitsScores {
        authority: wrap(auth, cfg.max_iterations, false),
        hub: wrap(hub, cfg.max_iterations, false),
    })
}

fn gather<'g, F>(src: &[f64], dst: &mut [f64], neighbors: F)
where
    F: Fn(UserId) -> &'g [UserId] + Sync,
{
    dst.par_iter_mut()
        .with_min_len(512)
        .enumerate()
        .for_each(|(i, slot)| {
            *slot = neighbors(UserId::from(i))
                .iter()
                .map(|j| src[j.index()])
                .sum();
        });
}

fn normalize_l2(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.par_iter_mut().with_min_len(4096).for_each(|x| *x /= norm);
    }
}
