//! Flat `key = value` generator configuration. Keys not given keep their
//! benchmark defaults; `#` starts a comment.

use std::io::Write;
use std::str::FromStr;

use super::{CorpusConfig, GenConfig};
use crate::error::{Error, Result};

fn num<T: FromStr>(line: usize, key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::parse(line, format!("invalid value {v:?} for {key}")))
}

pub fn parse_config(text: &str) -> Result<GenConfig> {
    let mut cfg = GenConfig::benchmark();
    let mut corpus: Option<CorpusConfig> = None;
    let mut corpus_on = false;
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
        match key {
            "n_background" => cfg.n_background = num(ln, key, v)?,
            "n_celebrities" => cfg.n_celebrities = num(ln, key, v)?,
            "n_close_groups" => cfg.n_close_groups = num(ln, key, v)?,
            "group_size" => cfg.group_size = num(ln, key, v)?,
            "n_spammers" => cfg.n_spammers = num(ln, key, v)?,
            "n_sybil_rings" => cfg.n_sybil_rings = num(ln, key, v)?,
            "ring_size" => cfg.ring_size = num(ln, key, v)?,
            "background_follow_rate" => cfg.background_follow_rate = num(ln, key, v)?,
            "out_degree_exponent" => {
                cfg.out_degree_exponent = match v {
                    "none" => None,
                    _ => Some(num(ln, key, v)?),
                }
            }
            "max_out_degree" => cfg.max_out_degree = num(ln, key, v)?,
            "followback_prob" => cfg.followback_prob = num(ln, key, v)?,
            "celebrity_reach" => cfg.celebrity_reach = num(ln, key, v)?,
            "celebrity_followees" => cfg.celebrity_followees = num(ln, key, v)?,
            "group_outward_follows" => cfg.group_outward_follows = num(ln, key, v)?,
            "spammer_targets" => cfg.spammer_targets = num(ln, key, v)?,
            "spammer_unfollow_prob" => cfg.spammer_unfollow_prob = num(ln, key, v)?,
            "spammer_exchange_prob" => cfg.spammer_exchange_prob = num(ln, key, v)?,
            "seed" => cfg.seed = num(ln, key, v)?,
            "corpus" => corpus_on = num(ln, key, v)?,
            "corpus_legit_tweets" => corpus.get_or_insert_with(Default::default).legit_tweets = num(ln, key, v)?,
            "corpus_spammer_tweets" => {
                corpus.get_or_insert_with(Default::default).spammer_tweets = num(ln, key, v)?
            }
            "corpus_words_per_tweet" => {
                corpus.get_or_insert_with(Default::default).words_per_tweet = num(ln, key, v)?
            }
            _ => return Err(Error::parse(ln, format!("unknown key {key:?}"))),
        }
    }
    cfg.corpus = if corpus_on {
        Some(corpus.unwrap_or_default())
    } else {
        None
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Writes every key, so the output parses back to the same configuration.
pub fn write_config<W: Write>(mut w: W, cfg: &GenConfig) -> Result<()> {
    writeln!(w, "n_background = {}", cfg.n_background)?;
    writeln!(w, "n_celebrities = {}", cfg.n_celebrities)?;
    writeln!(w, "n_close_groups = {}", cfg.n_close_groups)?;
    writeln!(w, "group_size = {}", cfg.group_size)?;
    writeln!(w, "n_spammers = {}", cfg.n_spammers)?;
    writeln!(w, "n_sybil_rings = {}", cfg.n_sybil_rings)?;
    writeln!(w, "ring_size = {}", cfg.ring_size)?;
    writeln!(w, "background_follow_rate = {}", cfg.background_follow_rate)?;
    match cfg.out_degree_exponent {
        Some(a) => writeln!(w, "out_degree_exponent = {a}")?,
        None => writeln!(w, "out_degree_exponent = none")?,
    }
    writeln!(w, "max_out_degree = {}", cfg.max_out_degree)?;
    writeln!(w, "followback_prob = {}", cfg.followback_prob)?;
    writeln!(w, "celebrity_reach = {}", cfg.celebrity_reach)?;
    writeln!(w, "celebrity_followees = {}", cfg.celebrity_followees)?;
    writeln!(w, "group_outward_follows = {}", cfg.group_outward_follows)?;
    writeln!(w, "spammer_targets = {}", cfg.spammer_targets)?;
    writeln!(w, "spammer_unfollow_prob = {}", cfg.spammer_unfollow_prob)?;
    writeln!(w, "spammer_exchange_prob = {}", cfg.spammer_exchange_prob)?;
    writeln!(w, "seed = {}", cfg.seed)?;
    writeln!(w, "corpus = {}", cfg.corpus.is_some())?;
    if let Some(c) = &cfg.corpus {
        writeln!(w, "corpus_legit_tweets = {}", c.legit_tweets)?;
        writeln!(w, "corpus_spammer_tweets = {}", c.spammer_tweets)?;
        writeln!(w, "corpus_words_per_tweet = {}", c.words_per_tweet)?;
    }
    Ok(())
}
