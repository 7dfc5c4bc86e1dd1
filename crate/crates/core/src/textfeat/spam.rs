//! URL/keyword spam heuristic over a user's profile and tweets.

use super::{tokenize, words, Token, Tweet};
use crate::error::{Error, Result};

/// The sixty terms most characteristic of spammer biographies in the
/// reference crawl.
pub const DEFAULT_SPAM_KEYWORDS: [&str; 60] = [
    "marketing", "free", "expert", "online marketer",
    "internet", "help", "investor", "weight loss",
    "marketer", "deals", "people", "trump network",
    "online", "make money", "network marketing", "helping others",
    "business", "real estate", "mlm", "media marketing",
    "money", "forex", "blog", "marketing coach",
    "social", "coach", "traffic", "money making",
    "internet marketer", "home", "success", "help people",
    "internet marketing", "real", "online marketing", "forex trading",
    "social media", "news", "network marketer", "helping people",
    "entrepreneur", "money online", "affiliate marketer", "home based",
    "affiliate", "helping", "making money", "home business",
    "network", "tips", "online business", "internet entrepreneur",
    "media", "affiliate marketing", "estate investor", "forex trader",
    "seo", "web", "small business", "business coach",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SpamHeuristicConfig {
    /// Single words or multi-word phrases, matched as consecutive word tokens.
    pub keywords: Vec<String>,
    pub url_weight: f64,
    pub keyword_weight: f64,
    pub name_weight: f64,
    /// A handle ending in at least this many digits matches the name pattern.
    pub min_trailing_digits: usize,
}

impl Default for SpamHeuristicConfig {
    fn default() -> Self {
        Self {
            keywords: DEFAULT_SPAM_KEYWORDS.iter().map(|s| s.to_string()).collect(),
            url_weight: 0.5,
            keyword_weight: 0.3,
            name_weight: 0.2,
            min_trailing_digits: 2,
        }
    }
}

impl SpamHeuristicConfig {
    pub fn validate(&self) -> Result<()> {
        let w = [self.url_weight, self.keyword_weight, self.name_weight];
        if w.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(Error::input("spam weights must be finite and nonnegative"));
        }
        if (w.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
            return Err(Error::input("spam weights must sum to 1"));
        }
        Ok(())
    }

    fn phrases(&self) -> Vec<Vec<String>> {
        self.keywords
            .iter()
            .map(|k| words(k))
            .filter(|p| !p.is_empty())
            .collect()
    }
}

fn contains_phrase(haystack: &[String], phrases: &[Vec<String>]) -> bool {
    phrases
        .iter()
        .any(|p| haystack.windows(p.len()).any(|w| w == p.as_slice()))
}

/// The profile indicator: the handle ends in enough digits or contains a
/// keyword (spaces removed), or the biography contains a keyword.
fn profile_matches(bio: &str, handle: &str, cfg: &SpamHeuristicConfig, phrases: &[Vec<String>]) -> bool {
    let trailing = handle.chars().rev().take_while(char::is_ascii_digit).count();
    if cfg.min_trailing_digits > 0 && trailing >= cfg.min_trailing_digits {
        return true;
    }
    let h = handle.to_lowercase();
    if phrases.iter().any(|p| h.contains(&p.concat())) {
        return true;
    }
    contains_phrase(&words(bio), phrases)
}

/// `url_weight · (share of tweets with a URL) + keyword_weight · (share of
/// tweets with a keyword) + name_weight · [profile matches]`. Without
/// tweets only the profile term contributes.
pub fn spam_score(
    profile_bio: &str,
    handle: &str,
    tweets: &[Tweet],
    cfg: &SpamHeuristicConfig,
) -> Result<f64> {
    cfg.validate()?;
    let phrases = cfg.phrases();
    let profile = if profile_matches(profile_bio, handle, cfg, &phrases) {
        1.0
    } else {
        0.0
    };
    let (mut with_url, mut with_keyword) = (0usize, 0usize);
    for t in tweets {
        let toks = tokenize(&t.text);
        if toks.iter().any(|t| matches!(t, Token::Url(_))) {
            with_url += 1;
        }
        let ws: Vec<String> = toks
            .into_iter()
            .filter_map(|t| match t {
                Token::Word(w) => Some(w),
                _ => None,
            })
            .collect();
        if contains_phrase(&ws, &phrases) {
            with_keyword += 1;
        }
    }
    let (fu, fk) = if tweets.is_empty() {
        (0.0, 0.0)
    } else {
        let n = tweets.len() as f64;
        (with_url as f64 / n, with_keyword as f64 / n)
    };
    let score = cfg.url_weight * fu + cfg.keyword_weight * fk + cfg.name_weight * profile;
    Ok(score.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tweets(texts: &[&str]) -> Vec<Tweet> {
        texts.iter().map(|t| Tweet::new(0u32, *t).unwrap()).collect()
    }

    #[test]
    fn endpoints() {
        let cfg = SpamHeuristicConfig::default();
        let clean = tweets(&["lunch with grandma", "nice sunset today"]);
        assert_eq!(spam_score("cat person", "alice", &clean, &cfg).unwrap(), 0.0);
        let spam = tweets(&["make money fast http://a.b", "free http://c.d"]);
        assert_eq!(spam_score("", "seo_guru99", &spam, &cfg).unwrap(), 1.0);
    }

    #[test]
    fn ten_tweet_hand_case() {
        let cfg = SpamHeuristicConfig::default();
        let mut texts = vec!["look http://x.y"; 4]; // url only
        texts.extend(["great forex tips"; 2]); // keyword only
        texts.push("Make Money at http://z.w"); // both
        texts.extend(["hello there"; 3]); // neither
        // urls 5/10, keywords 3/10, plain handle and bio
        let s = spam_score("I like dogs", "bob", &tweets(&texts), &cfg).unwrap();
        assert_abs_diff_eq!(s, 0.5 * 0.5 + 0.3 * 0.3, epsilon = 1e-15);
        // trailing digits switch the profile indicator on
        let s = spam_score("I like dogs", "bob1984", &tweets(&texts), &cfg).unwrap();
        assert_abs_diff_eq!(s, 0.25 + 0.09 + 0.2, epsilon = 1e-15);
    }

    #[test]
    fn phrases_need_consecutive_words() {
        let cfg = SpamHeuristicConfig {
            keywords: vec!["weight loss".into()],
            ..Default::default()
        };
        let hit = tweets(&["Weight-loss secrets"]);
        let miss = tweets(&["weight gain, no loss"]);
        assert_abs_diff_eq!(spam_score("", "x", &hit, &cfg).unwrap(), 0.3, epsilon = 1e-15);
        assert_eq!(spam_score("", "x", &miss, &cfg).unwrap(), 0.0);
    }

    #[test]
    fn profile_only_without_tweets() {
        let cfg = SpamHeuristicConfig::default();
        assert_abs_diff_eq!(
            spam_score("Internet Marketing expert", "jane", &[], &cfg).unwrap(),
            0.2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(spam_score("", "BestSeoDeals", &[], &cfg).unwrap(), 0.2, epsilon = 1e-15);
        assert_eq!(spam_score("", "jane7", &[], &cfg).unwrap(), 0.0);
    }

    #[test]
    fn rejects_non_convex_weights() {
        let cfg = SpamHeuristicConfig {
            url_weight: 0.9,
            ..Default::default()
        };
        assert!(spam_score("", "", &[], &cfg).is_err());
    }
}
