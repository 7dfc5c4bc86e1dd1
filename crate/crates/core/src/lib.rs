//! Rank-prestige algorithms for directed social graphs.
//!
//! The crate is organised around an immutable [`SocialGraph`] (follower →
//! followee edges) and five layers built on top of it:
//!
//! - [`graph`]: construction, edge-list I/O and structural statistics
//!   (reciprocity, clustering, degree correlation, power-law slopes,
//!   connected components, diameter).
//! - [`ranking`]: PageRank, HITS, NodeRanking, TunkRank, a similarity-weighted
//!   TwitterRank, the reciprocity-discounted follower/followee ratios, the
//!   PageRank variant that de-weights endorsements by those ratios, and graph
//!   pruning.
//! - [`textfeat`]: tweet tokenization, behavioral summaries, a URL/keyword
//!   spam heuristic, log-likelihood distinctive terms and term vectors.
//! - [`evalkit`]: tie-aware rank tables, prestige shares, cumulative decile
//!   reports, found-curves and top-k Kendall agreement.
//! - [`synthgen`]: seeded synthetic social graphs with labelled celebrities,
//!   close groups, link-exchange spammers and Sybil rings.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod evalkit;
pub mod graph;
pub mod ranking;
pub mod synthgen;
pub mod textfeat;

pub use error::{Error, Result};

pub use graph::{GraphStats, ReciprocityProfile, SocialGraph, UserId};
pub use evalkit::{AgreementCurve, DecileReport, FoundCurve, RankTable};
pub use ranking::{HitsScores, IterationConfig, Method, ScoreVector};
pub use synthgen::{GenConfig, Label, LabeledGraph};
pub use textfeat::{TermVector, Tweet, TweetFeatures};
