//! JSON-lines tweets and CSV term reports.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::{DistinctiveTerm, Tweet};
use crate::error::{Error, Result};
use crate::graph::UserId;

#[derive(Serialize, Deserialize)]
struct Record<'a> {
    user: u32,
    text: std::borrow::Cow<'a, str>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    ts: Option<i64>,
}

/// Parses `{"user": .., "text": .., "ts": ..}` lines; blank lines are
/// skipped.
pub fn read_tweets<R: BufRead>(reader: R) -> Result<Vec<Tweet>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: Record<'_> =
            serde_json::from_str(&line).map_err(|e| Error::parse(i + 1, e.to_string()))?;
        let mut t = Tweet::new(UserId(rec.user), rec.text.into_owned())
            .map_err(|e| Error::parse(i + 1, e.to_string()))?;
        t.timestamp = rec.ts;
        out.push(t);
    }
    Ok(out)
}

pub fn parse_tweets(text: &str) -> Result<Vec<Tweet>> {
    read_tweets(text.as_bytes())
}

pub fn write_tweets<W: Write>(mut w: W, tweets: &[Tweet]) -> Result<()> {
    for t in tweets {
        let rec = Record {
            user: t.author.0,
            text: t.text.as_str().into(),
            ts: t.timestamp,
        };
        serde_json::to_writer(&mut w, &rec).map_err(std::io::Error::from)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

/// CSV `term,g2,side`. Terms never contain commas or quotes (they are
/// alphanumeric words joined by spaces).
pub fn write_distinctive_terms<W: Write>(mut w: W, terms: &[DistinctiveTerm]) -> Result<()> {
    writeln!(w, "term,g2,side")?;
    for t in terms {
        writeln!(w, "{},{},{}", t.term, t.g2, t.side)?;
    }
    Ok(())
}
