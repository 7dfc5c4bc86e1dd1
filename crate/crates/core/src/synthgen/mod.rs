//! Seeded synthetic follower graphs with labelled user classes.
//!
//! Background users follow each other at random and follow back with some
//! probability. On top of them sit celebrities (widely followed, following
//! few), close groups (mutual cliques), link-exchange spammers (mass-follow,
//! keep the follow-backs, drop most of the rest, and befriend each other)
//! and Sybil rings (mutual rings that all endorse one beneficiary).

mod config;
mod corpus;
mod fig1;

pub use config::{parse_config, write_config};
pub use corpus::{generate_corpus, CorpusConfig};
pub use fig1::{scenario_fig1, Fig1Scenario};

use std::collections::HashSet;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::distr::weighted::WeightedIndex;
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution, Poisson};

use crate::error::{Error, Result};
use crate::graph::{SocialGraph, UserId};
use crate::textfeat::Tweet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Legit,
    Celebrity,
    GroupMember,
    Spammer,
    /// Sybil ring members and the beneficiary they endorse.
    Sybil,
}

impl Label {
    pub const ALL: [Label; 5] = [
        Label::Legit,
        Label::Celebrity,
        Label::GroupMember,
        Label::Spammer,
        Label::Sybil,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Legit => "legit",
            Label::Celebrity => "celebrity",
            Label::GroupMember => "group_member",
            Label::Spammer => "spammer",
            Label::Sybil => "sybil",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::input(format!("unknown label {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub n_background: usize,
    pub n_celebrities: usize,
    pub n_close_groups: usize,
    pub group_size: usize,
    pub n_spammers: usize,
    pub n_sybil_rings: usize,
    /// Ring members per ring; each ring also gets one beneficiary.
    pub ring_size: usize,
    /// Mean number of background users each background user follows.
    pub background_follow_rate: f64,
    /// When set, background out-degrees follow `P(k) ∝ k^-exponent` on
    /// `1..=max_out_degree` instead of a Poisson law.
    pub out_degree_exponent: Option<f64>,
    pub max_out_degree: usize,
    /// Chance that a background or group user follows back a new follower.
    pub followback_prob: f64,
    /// Chance that any given background user follows a given celebrity.
    pub celebrity_reach: f64,
    pub celebrity_followees: usize,
    /// Background users each close-group member follows.
    pub group_outward_follows: usize,
    pub spammer_targets: usize,
    /// Chance a spammer drops a target that did not follow back.
    pub spammer_unfollow_prob: f64,
    /// Chance that any two spammers follow each other.
    pub spammer_exchange_prob: f64,
    pub seed: u64,
    pub corpus: Option<CorpusConfig>,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self::benchmark()
    }
}

impl GenConfig {
    /// 10,000 users, 2% of them link-exchange spammers.
    pub fn benchmark() -> Self {
        Self {
            n_background: 9_550,
            n_celebrities: 100,
            n_close_groups: 10,
            group_size: 5,
            n_spammers: 200,
            n_sybil_rings: 10,
            ring_size: 9,
            background_follow_rate: 10.0,
            out_degree_exponent: None,
            max_out_degree: 200,
            followback_prob: 0.3,
            celebrity_reach: 0.05,
            celebrity_followees: 5,
            group_outward_follows: 3,
            spammer_targets: 200,
            spammer_unfollow_prob: 0.8,
            spammer_exchange_prob: 0.8,
            seed: 42,
            corpus: None,
        }
    }

    /// Everything zero except what the caller sets.
    pub fn empty() -> Self {
        Self {
            n_background: 0,
            n_celebrities: 0,
            n_close_groups: 0,
            group_size: 0,
            n_spammers: 0,
            n_sybil_rings: 0,
            ring_size: 0,
            background_follow_rate: 0.0,
            out_degree_exponent: None,
            max_out_degree: 200,
            followback_prob: 0.0,
            celebrity_reach: 0.0,
            celebrity_followees: 0,
            group_outward_follows: 0,
            spammer_targets: 0,
            spammer_unfollow_prob: 0.0,
            spammer_exchange_prob: 0.0,
            seed: 0,
            corpus: None,
        }
    }

    pub fn node_count(&self) -> usize {
        let rings = if self.ring_size > 0 {
            self.n_sybil_rings * (self.ring_size + 1)
        } else {
            0
        };
        self.n_background
            + self.n_celebrities
            + self.n_close_groups * self.group_size
            + self.n_spammers
            + rings
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.node_count();
        if n == 0 {
            return Err(Error::input("configuration generates no users"));
        }
        for (name, p) in [
            ("followback_prob", self.followback_prob),
            ("celebrity_reach", self.celebrity_reach),
            ("spammer_unfollow_prob", self.spammer_unfollow_prob),
            ("spammer_exchange_prob", self.spammer_exchange_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::input(format!("{name} = {p} outside [0, 1]")));
            }
        }
        if !(self.background_follow_rate.is_finite() && self.background_follow_rate >= 0.0) {
            return Err(Error::input("background_follow_rate must be finite and nonnegative"));
        }
        let nb = self.n_background;
        // Groups live inside the background population when there is one.
        if self.n_close_groups > 0 && nb > 0 && self.group_size > nb {
            return Err(Error::input(format!(
                "group_size {} exceeds the {nb} background users",
                self.group_size
            )));
        }
        for (name, k) in [
            ("spammer_targets", self.spammer_targets),
            ("celebrity_followees", self.celebrity_followees),
            ("group_outward_follows", self.group_outward_follows),
        ] {
            if k > nb {
                return Err(Error::input(format!(
                    "{name} = {k} exceeds the {nb} background users"
                )));
            }
        }
        if let Some(a) = self.out_degree_exponent {
            if !(a.is_finite() && a > 0.0) {
                return Err(Error::input("out_degree_exponent must be positive"));
            }
            if self.max_out_degree == 0 {
                return Err(Error::input("max_out_degree must be positive"));
            }
        }
        if let Some(c) = &self.corpus {
            c.validate()?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledGraph {
    pub graph: SocialGraph,
    pub labels: Vec<Label>,
    pub corpus: Option<Vec<Tweet>>,
}

impl LabeledGraph {
    pub fn members(&self, label: Label) -> Vec<UserId> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .map(|(u, _)| UserId::from(u))
            .collect()
    }

    pub fn label_counts(&self) -> Vec<(Label, usize)> {
        Label::ALL
            .iter()
            .map(|&l| (l, self.labels.iter().filter(|&&x| x == l).count()))
            .collect()
    }
}

/// CSV `user_id,label`.
pub fn write_labels<W: Write>(mut w: W, labels: &[Label]) -> Result<()> {
    writeln!(w, "user_id,label")?;
    for (u, l) in labels.iter().enumerate() {
        writeln!(w, "{u},{l}")?;
    }
    Ok(())
}

struct Builder {
    edges: Vec<(u32, u32)>,
    present: HashSet<(u32, u32)>,
}

impl Builder {
    fn follow(&mut self, a: u32, b: u32) -> bool {
        if a != b && self.present.insert((a, b)) {
            self.edges.push((a, b));
            true
        } else {
            false
        }
    }

    fn has(&self, a: u32, b: u32) -> bool {
        self.present.contains(&(a, b))
    }

    fn unfollow(&mut self, a: u32, b: u32) {
        self.present.remove(&(a, b));
    }
}

/// `k` distinct members of `lo..hi`, never `avoid`.
fn pick(rng: &mut ChaCha8Rng, lo: usize, hi: usize, k: usize, avoid: Option<usize>) -> Vec<u32> {
    let inside = avoid.filter(|a| (lo..hi).contains(a));
    let len = hi - lo - usize::from(inside.is_some());
    let k = k.min(len);
    index::sample(rng, len, k)
        .into_iter()
        .map(|i| {
            let v = lo + i;
            match inside {
                Some(a) if v >= a => (v + 1) as u32,
                _ => v as u32,
            }
        })
        .collect()
}

pub fn generate(cfg: &GenConfig) -> Result<LabeledGraph> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.node_count();
    let nb = cfg.n_background;

    // Id blocks in construction order; shuffled at the end.
    let celebs = nb..nb + cfg.n_celebrities;
    let groups_start = celebs.end;
    let spam = groups_start + cfg.n_close_groups * cfg.group_size
        ..groups_start + cfg.n_close_groups * cfg.group_size + cfg.n_spammers;
    let sybil_start = spam.end;

    let mut labels = vec![Label::Legit; n];
    labels[celebs.clone()].fill(Label::Celebrity);
    labels[groups_start..spam.start].fill(Label::GroupMember);
    labels[spam.clone()].fill(Label::Spammer);
    labels[sybil_start..].fill(Label::Sybil);

    let mut b = Builder {
        edges: Vec::new(),
        present: HashSet::new(),
    };
    // Follows received by users who follow back by etiquette, in order.
    let mut courtesy: Vec<(u32, u32)> = Vec::new();

    if nb > 1 {
        let degree = DegreeLaw::new(cfg)?;
        for u in 0..nb {
            let k = degree.sample(&mut rng).min(nb - 1);
            for v in pick(&mut rng, 0, nb, k, Some(u)) {
                if b.follow(u as u32, v) {
                    courtesy.push((u as u32, v));
                }
            }
        }
    }

    for c in celebs.clone() {
        if nb > 0 && cfg.celebrity_reach > 0.0 {
            let fans = Binomial::new(nb as u64, cfg.celebrity_reach)
                .map_err(|e| Error::input(e.to_string()))?
                .sample(&mut rng) as usize;
            for f in pick(&mut rng, 0, nb, fans, None) {
                b.follow(f, c as u32);
            }
        }
        for v in pick(&mut rng, 0, nb, cfg.celebrity_followees, None) {
            if b.follow(c as u32, v) {
                courtesy.push((c as u32, v));
            }
        }
    }

    for g in 0..cfg.n_close_groups {
        let start = groups_start + g * cfg.group_size;
        let members = start..start + cfg.group_size;
        for a in members.clone() {
            for c in members.clone() {
                b.follow(a as u32, c as u32);
            }
        }
        for a in members {
            for v in pick(&mut rng, 0, nb, cfg.group_outward_follows, None) {
                if b.follow(a as u32, v) {
                    courtesy.push((a as u32, v));
                }
            }
        }
    }

    for &(from, to) in &courtesy {
        if rng.random_bool(cfg.followback_prob) {
            b.follow(to, from);
        }
    }

    for s in spam.clone() {
        let s = s as u32;
        for t in pick(&mut rng, 0, nb, cfg.spammer_targets, None) {
            b.follow(s, t);
            if rng.random_bool(cfg.followback_prob) {
                b.follow(t, s);
            } else if !b.has(t, s) && rng.random_bool(cfg.spammer_unfollow_prob) {
                b.unfollow(s, t);
            }
        }
    }
    for i in spam.clone() {
        for j in i + 1..spam.end {
            if rng.random_bool(cfg.spammer_exchange_prob) {
                b.follow(i as u32, j as u32);
                b.follow(j as u32, i as u32);
            }
        }
    }

    if cfg.ring_size > 0 {
        for r in 0..cfg.n_sybil_rings {
            let start = sybil_start + r * (cfg.ring_size + 1);
            let beneficiary = (start + cfg.ring_size) as u32;
            for i in 0..cfg.ring_size {
                let a = (start + i) as u32;
                let c = (start + (i + 1) % cfg.ring_size) as u32;
                b.follow(a, c);
                b.follow(c, a);
                b.follow(a, beneficiary);
            }
        }
    }

    // Relabel ids with a seeded permutation so classes are not contiguous.
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(&mut rng);
    let mut edges: Vec<(u32, u32)> = b
        .edges
        .iter()
        .filter(|e| b.present.contains(e))
        .map(|&(x, y)| (perm[x as usize], perm[y as usize]))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let mut shuffled = vec![Label::Legit; n];
    for (old, &l) in labels.iter().enumerate() {
        shuffled[perm[old] as usize] = l;
    }
    let graph = SocialGraph::build(n, edges)?;
    let corpus = match &cfg.corpus {
        Some(c) => Some(generate_corpus(&graph, &shuffled, c, cfg.seed)?),
        None => None,
    };
    Ok(LabeledGraph {
        graph,
        labels: shuffled,
        corpus,
    })
}

enum DegreeLaw {
    Poisson(Option<Poisson<f64>>),
    Power(WeightedIndex<f64>),
}

impl DegreeLaw {
    fn new(cfg: &GenConfig) -> Result<Self> {
        Ok(match cfg.out_degree_exponent {
            Some(a) => {
                let w: Vec<f64> = (1..=cfg.max_out_degree).map(|k| (k as f64).powf(-a)).collect();
                DegreeLaw::Power(WeightedIndex::new(w).map_err(|e| Error::input(e.to_string()))?)
            }
            None if cfg.background_follow_rate > 0.0 => DegreeLaw::Poisson(Some(
                Poisson::new(cfg.background_follow_rate).map_err(|e| Error::input(e.to_string()))?,
            )),
            None => DegreeLaw::Poisson(None),
        })
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> usize {
        match self {
            DegreeLaw::Poisson(Some(p)) => p.sample(rng) as usize,
            DegreeLaw::Poisson(None) => 0,
            DegreeLaw::Power(w) => w.sample(rng) + 1,
        }
    }
}
