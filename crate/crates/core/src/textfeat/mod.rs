//! Tweet tokenization and text-derived features.
//!
//! Token rules: a whitespace-delimited chunk starting with `http://`,
//! `https://` or `www.` is a URL. Everything else is scanned for `#tag`
//! hashtags, `@name` mentions and lowercase alphanumeric words; any other
//! character separates tokens. A tweet is a retweet when a word `rt` is
//! immediately followed by a mention, and a conversation when it mentions
//! somebody without being a retweet.

mod behavior;
mod io;
mod spam;
mod terms;
mod vector;

pub use behavior::{behavior_summary, BehaviorSummary};
pub use io::{parse_tweets, read_tweets, write_distinctive_terms, write_tweets};
pub use spam::{spam_score, SpamHeuristicConfig, DEFAULT_SPAM_KEYWORDS};
pub use terms::{
    distinctive_ngrams, distinctive_terms, g2_statistic, DistinctiveTerm, NgramCounts, Side,
    TermCounts,
};
pub use vector::{cosine_sim, term_vector, user_term_vectors, TermVector};

use crate::error::{Error, Result};
use crate::graph::UserId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tweet {
    pub author: UserId,
    pub text: String,
    /// Seconds since the Unix epoch.
    pub timestamp: Option<i64>,
}

impl Tweet {
    pub fn new(author: impl Into<UserId>, text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if text.is_empty() {
            return Err(Error::input("tweet text is empty"));
        }
        Ok(Self {
            author: author.into(),
            text,
            timestamp: None,
        })
    }

    pub fn with_timestamp(mut self, ts: i64) -> Self {
        self.timestamp = Some(ts);
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TweetFeatures {
    pub url_count: u32,
    pub hashtag_count: u32,
    pub mention_count: u32,
    pub is_retweet: bool,
    pub is_conversation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    /// Kept verbatim apart from lowercasing.
    Url(String),
    /// Tag text without the `#`.
    Hashtag(String),
    /// Handle without the `@`.
    Mention(String),
    Word(String),
}

impl Token {
    /// The term this token contributes to a term vector: `#tag`, `@name`,
    /// the URL or the word.
    pub fn term(&self) -> String {
        match self {
            Token::Url(u) => u.clone(),
            Token::Hashtag(h) => format!("#{h}"),
            Token::Mention(m) => format!("@{m}"),
            Token::Word(w) => w.clone(),
        }
    }
}

fn is_url(chunk: &str) -> bool {
    let head: String = chunk.chars().take(8).collect::<String>().to_lowercase();
    head.starts_with("http://") || head.starts_with("https://") || head.starts_with("www.")
}

pub fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    for chunk in text.split_whitespace() {
        if is_url(chunk) {
            out.push(Token::Url(chunk.to_lowercase()));
            continue;
        }
        let chars: Vec<char> = chunk.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_alphanumeric() {
                let end = run_end(&chars, i);
                out.push(Token::Word(lower(&chars[i..end])));
                i = end;
            } else if (c == '#' || c == '@')
                && chars.get(i + 1).is_some_and(|n| n.is_alphanumeric())
            {
                let end = run_end(&chars, i + 1);
                let body = lower(&chars[i + 1..end]);
                out.push(if c == '#' {
                    Token::Hashtag(body)
                } else {
                    Token::Mention(body)
                });
                i = end;
            } else {
                i += 1;
            }
        }
    }
    out
}

fn run_end(chars: &[char], start: usize) -> usize {
    chars[start..]
        .iter()
        .position(|c| !c.is_alphanumeric())
        .map_or(chars.len(), |p| start + p)
}

fn lower(chars: &[char]) -> String {
    chars.iter().collect::<String>().to_lowercase()
}

/// Lowercase word tokens only (no URLs, tags or mentions).
pub fn words(text: &str) -> Vec<String> {
    tokenize(text)
        .into_iter()
        .filter_map(|t| match t {
            Token::Word(w) => Some(w),
            _ => None,
        })
        .collect()
}

pub fn features_of(tokens: &[Token]) -> TweetFeatures {
    let mut f = TweetFeatures::default();
    for (i, t) in tokens.iter().enumerate() {
        match t {
            Token::Url(_) => f.url_count += 1,
            Token::Hashtag(_) => f.hashtag_count += 1,
            Token::Mention(_) => f.mention_count += 1,
            Token::Word(w) => {
                if w == "rt" && matches!(tokens.get(i + 1), Some(Token::Mention(_))) {
                    f.is_retweet = true;
                }
            }
        }
    }
    f.is_conversation = f.mention_count > 0 && !f.is_retweet;
    f
}

pub fn extract_features(t: &Tweet) -> TweetFeatures {
    features_of(&tokenize(&t.text))
}
