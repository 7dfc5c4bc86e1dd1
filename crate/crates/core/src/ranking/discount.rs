//! Reciprocity-discounted follower/followee ratios and the PageRank variants
//! built on them.
//!
//! Reciprocal links are treated as suspect: the *discounted* ratio removes
//! them from both counts. The *paradoxical* ratio picks whichever of the raw
//! and discounted ratios the user would not prefer: the raw ratio when the
//! user has more followers than followees, the discounted ratio otherwise.
//! Used as a weight, it de-weights the endorsements a user hands out, not the
//! user's own score.

use rayon::prelude::*;

use super::{
    iterate, noop, normalize_l1, pagerank, pull, require_nodes, IterationConfig, Method, Norm,
    ScoreVector, Sweep,
};
use crate::error::{Error, Result};
use crate::graph::{IdMapping, ReciprocityProfile, SocialGraph};

/// `followers / followees`; a user with followers but no followees gets
/// `followers` (the missing denominator counts as one), and `0/0` is 0.
pub fn raw_ratio(p: &ReciprocityProfile) -> f64 {
    safe_ratio(p.followers, p.followees)
}

/// `(followers - reciprocal) / (followees - reciprocal)` with the same
/// degenerate-denominator rules as [`raw_ratio`].
pub fn discounted_ratio(p: &ReciprocityProfile) -> f64 {
    safe_ratio(
        p.followers.saturating_sub(p.reciprocal),
        p.followees.saturating_sub(p.reciprocal),
    )
}

/// Raw ratio when `followers > followees`, discounted ratio otherwise.
pub fn paradoxical_ratio(p: &ReciprocityProfile) -> f64 {
    if p.followers > p.followees {
        raw_ratio(p)
    } else {
        discounted_ratio(p)
    }
}

fn safe_ratio(num: u64, den: u64) -> f64 {
    match (num, den) {
        (0, _) => 0.0,
        (n, 0) => n as f64,
        (n, d) => n as f64 / d as f64,
    }
}

/// Per-user paradoxical ratios scaled into `[0, 1]` by the graph maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscountWeights {
    pub ratios: Vec<f64>,
    pub max_ratio: f64,
}

impl DiscountWeights {
    pub fn from_profiles(profiles: &[ReciprocityProfile]) -> Result<Self> {
        let ratios: Vec<f64> = profiles.iter().map(paradoxical_ratio).collect();
        let max_ratio = ratios.iter().copied().fold(0.0, f64::max);
        if !(max_ratio > 0.0) {
            return Err(Error::input(
                "every paradoxical ratio is zero; discount weights are undefined",
            ));
        }
        Ok(Self { ratios, max_ratio })
    }

    pub fn weight(&self, u: usize) -> f64 {
        self.ratios[u] / self.max_ratio
    }
}

fn check_profiles(g: &SocialGraph, profiles: &[ReciprocityProfile]) -> Result<()> {
    if profiles.len() != g.node_count() {
        return Err(Error::input(format!(
            "{} reciprocity profiles for {} users",
            profiles.len(),
            g.node_count()
        )));
    }
    Ok(())
}

pub fn discounted_pagerank(
    g: &SocialGraph,
    profiles: &[ReciprocityProfile],
    cfg: &IterationConfig,
) -> Result<ScoreVector> {
    discounted_pagerank_observed(g, profiles, cfg, &mut noop)
}

/// `PR(i) = Σ_{j→i} PR(j)/|L(j)| · w(j)` with `w(j)` the paradoxical ratio
/// of `j` over the graph maximum, no teleportation, and the iterate rescaled
/// to sum to one after every sweep.
///
/// Users whose followers all carry zero weight end at exactly 0 and tie for
/// the last position. If the weighted graph cannot sustain any mass (no
/// cycle through positive-weight users), every score ends at 0.
pub fn discounted_pagerank_observed(
    g: &SocialGraph,
    profiles: &[ReciprocityProfile],
    cfg: &IterationConfig,
    observer: &mut dyn FnMut(&Sweep<'_>),
) -> Result<ScoreVector> {
    cfg.validate()?;
    require_nodes(g, "discounted pagerank")?;
    check_profiles(g, profiles)?;
    let weights = DiscountWeights::from_profiles(profiles)?;
    let n = g.node_count();
    let scale: Vec<f64> = g
        .users()
        .map(|u| match g.out_degree(u) {
            0 => 0.0,
            k => weights.weight(u.index()) / k as f64,
        })
        .collect();
    let mut contrib = vec![0.0; n];

    let fp = iterate(
        vec![1.0 / n as f64; n],
        cfg,
        Norm::L1,
        |x, next| {
            contrib
                .par_iter_mut()
                .with_min_len(4096)
                .zip(x.par_iter().zip(scale.par_iter()))
                .for_each(|(c, (xi, s))| *c = xi * s);
            pull(g, &contrib, next);
            normalize_l1(next);
        },
        observer,
    );
    Ok(ScoreVector {
        method: Method::DiscountedPageRank,
        scores: fp.scores,
        iterations_used: fp.iterations,
        converged: fp.converged,
    })
}

/// Drops every user whose paradoxical ratio is zero, together with all of
/// their links.
pub fn prune_graph(
    g: &SocialGraph,
    profiles: &[ReciprocityProfile],
) -> Result<(SocialGraph, IdMapping)> {
    check_profiles(g, profiles)?;
    let keep: Vec<bool> = profiles.iter().map(|p| paradoxical_ratio(p) > 0.0).collect();
    if !keep.contains(&true) {
        return Err(Error::EmptyGraph(
            "pruning removed every user (all paradoxical ratios are zero)".into(),
        ));
    }
    g.induced_subgraph(&keep)
}

/// Standard PageRank on the pruned graph, reported in original ids; pruned
/// users score 0.
pub fn pruned_pagerank(
    g: &SocialGraph,
    profiles: &[ReciprocityProfile],
    cfg: &IterationConfig,
) -> Result<ScoreVector> {
    let (sub, mapping) = prune_graph(g, profiles)?;
    let inner = pagerank(&sub, cfg)?;
    let mut scores = vec![0.0; g.node_count()];
    for (new, &s) in inner.scores.iter().enumerate() {
        scores[mapping.old_id(new.into()).index()] = s;
    }
    Ok(ScoreVector {
        method: Method::PrunedPageRank,
        scores,
        iterations_used: inner.iterations_used,
        converged: inner.converged,
    })
}
