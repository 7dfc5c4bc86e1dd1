//! Synthetic tweets. Legitimate users write about one of a few topics;
//! spammers and Sybils share one promotional vocabulary and almost always
//! include a link, so their term vectors are nearly parallel.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};

use super::Label;
use crate::error::{Error, Result};
use crate::graph::{SocialGraph, UserId};
use crate::textfeat::Tweet;

const TOPICS: [&[&str]; 6] = [
    &["match", "goal", "team", "season", "coach", "league", "score", "win", "fans", "game"],
    &["song", "album", "band", "concert", "guitar", "lyrics", "tour", "vinyl", "drums", "playlist"],
    &["code", "release", "bug", "server", "linux", "compiler", "api", "cloud", "laptop", "open"],
    &["dinner", "recipe", "coffee", "bread", "pasta", "garden", "lunch", "cheese", "soup", "tea"],
    &["flight", "beach", "hotel", "city", "train", "museum", "trip", "island", "map", "sunset"],
    &["vote", "debate", "policy", "election", "senate", "tax", "budget", "reform", "poll", "law"],
];

const PROMO: &[&str] = &[
    "free", "money", "make", "online", "business", "marketing", "seo", "deal", "click", "offer",
    "earn", "traffic", "followers", "affiliate", "internet", "success", "now", "today",
];

const CHATTER: &[&str] = &["today", "really", "great", "love", "new", "thanks", "just", "so", "good"];

const EPOCH_2010: i64 = 1_262_304_000;
const YEAR: i64 = 365 * 86_400;

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig {
    /// Mean tweets per legitimate user (celebrities and group members too).
    pub legit_tweets: f64,
    /// Mean tweets per spammer or Sybil.
    pub spammer_tweets: f64,
    pub words_per_tweet: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            legit_tweets: 6.0,
            spammer_tweets: 40.0,
            words_per_tweet: 8,
        }
    }
}

impl CorpusConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, m) in [
            ("legit_tweets", self.legit_tweets),
            ("spammer_tweets", self.spammer_tweets),
        ] {
            if !(m.is_finite() && m >= 0.0) {
                return Err(Error::input(format!("{name} must be finite and nonnegative")));
            }
        }
        if self.words_per_tweet == 0 {
            return Err(Error::input("words_per_tweet must be positive"));
        }
        Ok(())
    }
}

struct Style {
    url: f64,
    hashtag: f64,
    retweet: f64,
    mention: f64,
}

const LEGIT: Style = Style {
    url: 0.18,
    hashtag: 0.08,
    retweet: 0.03,
    mention: 0.19,
};

const SPAM: Style = Style {
    url: 0.9,
    hashtag: 0.12,
    retweet: 0.03,
    mention: 0.07,
};

fn tweet_count(rng: &mut ChaCha8Rng, mean: f64) -> Result<usize> {
    if mean == 0.0 {
        return Ok(0);
    }
    Ok(Poisson::new(mean)
        .map_err(|e| Error::input(e.to_string()))?
        .sample(rng) as usize)
}

/// Tweets for every user of `graph`, drawn from a stream independent of
/// the graph's own randomness.
pub fn generate_corpus(
    graph: &SocialGraph,
    labels: &[Label],
    cfg: &CorpusConfig,
    seed: u64,
) -> Result<Vec<Tweet>> {
    cfg.validate()?;
    if labels.len() != graph.node_count() {
        return Err(Error::input("one label per user required"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let mut tweets = Vec::new();
    let mut link_id = 0u64;
    for u in graph.users() {
        let abusive = matches!(labels[u.index()], Label::Spammer | Label::Sybil);
        let (vocab, style, mean) = if abusive {
            (PROMO, &SPAM, cfg.spammer_tweets)
        } else {
            let topic = rng.random_range(0..TOPICS.len());
            (TOPICS[topic], &LEGIT, cfg.legit_tweets)
        };
        let followees = graph.followees(u);
        for _ in 0..tweet_count(&mut rng, mean)? {
            let mut parts: Vec<String> = Vec::new();
            let someone = |rng: &mut ChaCha8Rng| -> UserId {
                followees
                    .choose(rng)
                    .copied()
                    .unwrap_or_else(|| UserId(rng.random_range(0..graph.node_count() as u32)))
            };
            if rng.random_bool(style.retweet) {
                parts.push(format!("RT @u{}", someone(&mut rng).0));
            } else if rng.random_bool(style.mention) {
                parts.push(format!("@u{}", someone(&mut rng).0));
            }
            for _ in 0..cfg.words_per_tweet {
                let pool = if rng.random_bool(0.8) { vocab } else { CHATTER };
                parts.push(pool.choose(&mut rng).expect("nonempty vocabulary").to_string());
            }
            if rng.random_bool(style.hashtag) {
                parts.push(format!("#{}", vocab.choose(&mut rng).expect("nonempty vocabulary")));
            }
            if rng.random_bool(style.url) {
                link_id += 1;
                parts.push(format!("http://t.example/{link_id:x}"));
            }
            let ts = EPOCH_2010 + rng.random_range(0..YEAR);
            tweets.push(Tweet::new(u, parts.join(" "))?.with_timestamp(ts));
        }
    }
    Ok(tweets)
}
