//! Random-surfer methods: PageRank with uniform sink redistribution, and
//! NodeRanking with a per-user jump probability `1 / (1 + |followees|)`.

use rayon::prelude::*;

use super::{iterate, noop, pull, require_nodes, IterationConfig, Method, Norm, ScoreVector, Sweep};
use crate::error::Result;
use crate::graph::{SocialGraph, UserId};

pub fn pagerank(g: &SocialGraph, cfg: &IterationConfig) -> Result<ScoreVector> {
    pagerank_observed(g, cfg, &mut noop)
}

/// PageRank: `PR(i) = (1-d) Σ_{j→i} PR(j)/|L(j)| + d/N`, with the mass of
/// users that follow nobody spread uniformly every sweep.
pub fn pagerank_observed(
    g: &SocialGraph,
    cfg: &IterationConfig,
    observer: &mut dyn FnMut(&Sweep<'_>),
) -> Result<ScoreVector> {
    cfg.validate()?;
    require_nodes(g, "pagerank")?;
    let n = g.node_count();
    let nf = n as f64;
    let d = cfg.damping;
    let inv_out: Vec<f64> = g
        .users()
        .map(|u| match g.out_degree(u) {
            0 => 0.0,
            k => 1.0 / k as f64,
        })
        .collect();
    let sinks: Vec<usize> = g
        .users()
        .filter(|&u| g.out_degree(u) == 0)
        .map(UserId::index)
        .collect();
    let mut contrib = vec![0.0; n];

    let fp = iterate(
        vec![1.0 / nf; n],
        cfg,
        Norm::L1,
        |x, next| {
            contrib
                .par_iter_mut()
                .with_min_len(4096)
                .zip(x.par_iter().zip(inv_out.par_iter()))
                .for_each(|(c, (xi, w))| *c = xi * w);
            let sink_mass: f64 = sinks.iter().map(|&s| x[s]).sum();
            pull(g, &contrib, next);
            let base = (1.0 - d) * sink_mass / nf + d / nf;
            next.par_iter_mut()
                .with_min_len(4096)
                .for_each(|v| *v = (1.0 - d) * *v + base);
        },
        observer,
    );
    Ok(ScoreVector {
        method: Method::PageRank,
        scores: fp.scores,
        iterations_used: fp.iterations,
        converged: fp.converged,
    })
}

pub fn noderanking(g: &SocialGraph, cfg: &IterationConfig) -> Result<ScoreVector> {
    noderanking_observed(g, cfg, &mut noop)
}

/// NodeRanking on an unweighted graph. User `j` keeps `1 - P_jump(j)` of its
/// score for its followees (split evenly) and teleports `P_jump(j)` of it
/// uniformly over all users. Since `(1 - P_jump(j)) / |L(j)| = P_jump(j)`,
/// both shares are `x[j] / (1 + |L(j)|)`.
pub fn noderanking_observed(
    g: &SocialGraph,
    cfg: &IterationConfig,
    observer: &mut dyn FnMut(&Sweep<'_>),
) -> Result<ScoreVector> {
    cfg.validate()?;
    require_nodes(g, "noderanking")?;
    let n = g.node_count();
    let nf = n as f64;
    let jump: Vec<f64> = g
        .users()
        .map(|u| 1.0 / (1.0 + g.out_degree(u) as f64))
        .collect();
    let mut contrib = vec![0.0; n];

    let fp = iterate(
        vec![1.0 / nf; n],
        cfg,
        Norm::L1,
        |x, next| {
            contrib
                .par_iter_mut()
                .with_min_len(4096)
                .zip(x.par_iter().zip(jump.par_iter()))
                .for_each(|(c, (xi, p))| *c = xi * p);
            let teleport: f64 = contrib.iter().sum::<f64>() / nf;
            pull(g, &contrib, next);
            next.par_iter_mut()
                .with_min_len(4096)
                .for_each(|v| *v += teleport);
        },
        observer,
    );
    Ok(ScoreVector {
        method: Method::NodeRanking,
        scores: fp.scores,
        iterations_used: fp.iterations,
        converged: fp.converged,
    })
}
