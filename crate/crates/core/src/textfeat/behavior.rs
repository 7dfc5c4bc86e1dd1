use super::{extract_features, Tweet};
use crate::error::{Error, Result};
use crate::graph::{SocialGraph, UserId};

/// Linking and tweeting behaviour of a group of users.
///
/// Percentages are in `[0, 100]`. URL and hashtag averages are taken over
/// the tweets that contain at least one of them; conversations are counted
/// among non-retweets, and `avg_users_referred` is the mean number of
/// mentions in a conversational tweet.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BehaviorSummary {
    /// Distinct group members found in the graph.
    pub members: usize,
    /// Group members not present in the graph; ignored.
    pub skipped: usize,
    pub tweets: usize,
    pub avg_in_degree: f64,
    pub avg_out_degree: f64,
    pub avg_tweets: f64,
    /// Population standard deviation of tweets per member.
    pub sd_tweets: f64,
    pub pct_tweets_with_urls: f64,
    pub avg_urls_per_url_tweet: f64,
    pub pct_tweets_with_hashtags: f64,
    pub avg_tags_per_tag_tweet: f64,
    pub pct_retweets: f64,
    pub pct_conversations: f64,
    pub avg_users_referred: f64,
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

pub fn behavior_summary(
    corpus: &[Tweet],
    g: &SocialGraph,
    group: &[UserId],
) -> Result<BehaviorSummary> {
    if group.is_empty() {
        return Err(Error::input("behavior summary of an empty group"));
    }
    let n = g.node_count();
    let mut member = vec![false; n];
    let mut skipped = std::collections::BTreeSet::new();
    for &u in group {
        if g.contains(u) {
            member[u.index()] = true;
        } else {
            skipped.insert(u);
        }
    }
    let members: Vec<UserId> = g.users().filter(|u| member[u.index()]).collect();
    let mut s = BehaviorSummary {
        members: members.len(),
        skipped: skipped.len(),
        ..Default::default()
    };
    if members.is_empty() {
        return Ok(s);
    }
    let m = members.len() as f64;
    s.avg_in_degree = members.iter().map(|&u| g.in_degree(u) as f64).sum::<f64>() / m;
    s.avg_out_degree = members.iter().map(|&u| g.out_degree(u) as f64).sum::<f64>() / m;

    let mut per_member = vec![0u64; n];
    let (mut url_tweets, mut urls, mut tag_tweets, mut tags) = (0u64, 0u64, 0u64, 0u64);
    let (mut retweets, mut conversations, mut referred) = (0u64, 0u64, 0u64);
    for t in corpus.iter().filter(|t| g.contains(t.author) && member[t.author.index()]) {
        per_member[t.author.index()] += 1;
        let f = extract_features(t);
        if f.url_count > 0 {
            url_tweets += 1;
            urls += u64::from(f.url_count);
        }
        if f.hashtag_count > 0 {
            tag_tweets += 1;
            tags += u64::from(f.hashtag_count);
        }
        if f.is_retweet {
            retweets += 1;
        }
        if f.is_conversation {
            conversations += 1;
            referred += u64::from(f.mention_count);
        }
    }
    let total: u64 = members.iter().map(|u| per_member[u.index()]).sum();
    s.tweets = total as usize;
    s.avg_tweets = total as f64 / m;
    s.sd_tweets = (members
        .iter()
        .map(|u| (per_member[u.index()] as f64 - s.avg_tweets).powi(2))
        .sum::<f64>()
        / m)
        .sqrt();
    s.pct_tweets_with_urls = 100.0 * ratio(url_tweets, total);
    s.avg_urls_per_url_tweet = ratio(urls, url_tweets);
    s.pct_tweets_with_hashtags = 100.0 * ratio(tag_tweets, total);
    s.avg_tags_per_tag_tweet = ratio(tags, tag_tweets);
    s.pct_retweets = 100.0 * ratio(retweets, total);
    s.pct_conversations = 100.0 * ratio(conversations, total - retweets);
    s.avg_users_referred = ratio(referred, conversations);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use approx::assert_abs_diff_eq;

    fn tw(u: u32, text: &str) -> Tweet {
        Tweet::new(u, text).unwrap()
    }

    fn ids(v: &[u32]) -> Vec<UserId> {
        v.iter().map(|&u| UserId(u)).collect()
    }

    #[test]
    fn all_tweets_with_one_url() {
        let g = build_graph([(0u32, 1u32)], 2).unwrap();
        let corpus = [tw(0, "see http://a.b"), tw(1, "www.c.d now")];
        let s = behavior_summary(&corpus, &g, &ids(&[0, 1])).unwrap();
        assert_eq!(s.pct_tweets_with_urls, 100.0);
        assert_eq!(s.avg_urls_per_url_tweet, 1.0);
    }

    #[test]
    fn no_tweets_still_has_degrees() {
        let g = build_graph([(0u32, 1u32), (2, 1)], 3).unwrap();
        let s = behavior_summary(&[], &g, &ids(&[1])).unwrap();
        assert_eq!(s.avg_in_degree, 2.0);
        assert_eq!(s.avg_out_degree, 0.0);
        assert_eq!(s.tweets, 0);
        assert_eq!(s.avg_tweets, 0.0);
        assert_eq!(s.pct_conversations, 0.0);
        assert_eq!(s.avg_users_referred, 0.0);
    }

    #[test]
    fn hand_tallied_corpus() {
        // 0 -> 1, 0 -> 2, 1 -> 0, 2 -> 0, 3 -> 0.
        let g = build_graph([(0u32, 1u32), (0, 2), (1, 0), (2, 0), (3, 0)], 4).unwrap();
        let corpus = [
            // user 0: 3 tweets
            tw(0, "RT @a look http://x.y http://z.w"), // rt, 2 urls, 1 mention
            tw(0, "@a @b hello #x #y #z"),             // conv (2), 3 tags
            tw(0, "just words"),
            // user 1: 1 tweet
            tw(1, "@c hi www.q.r #t"), // conv (1), 1 url, 1 tag
            // user 2: none
            // user 3 is outside the group
            tw(3, "http://spam.me"),
        ];
        let s = behavior_summary(&corpus, &g, &ids(&[0, 1, 2, 1, 9])).unwrap();
        assert_eq!(s.members, 3);
        assert_eq!(s.skipped, 1);
        assert_eq!(s.tweets, 4);
        // in-degrees 3, 1, 1; out-degrees 2, 1, 1
        assert_abs_diff_eq!(s.avg_in_degree, 5.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.avg_out_degree, 4.0 / 3.0, epsilon = 1e-15);
        // tweets per member 3, 1, 0: mean 4/3, variance (25/9 + 1/9 + 16/9)/3
        assert_abs_diff_eq!(s.avg_tweets, 4.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.sd_tweets, (42.0f64 / 27.0).sqrt(), epsilon = 1e-15);
        assert_eq!(s.pct_tweets_with_urls, 50.0);
        assert_eq!(s.avg_urls_per_url_tweet, 1.5);
        assert_eq!(s.pct_tweets_with_hashtags, 50.0);
        assert_eq!(s.avg_tags_per_tag_tweet, 2.0);
        assert_eq!(s.pct_retweets, 25.0);
        // 2 conversations out of 3 non-retweets
        assert_abs_diff_eq!(s.pct_conversations, 200.0 / 3.0, epsilon = 1e-12);
        assert_eq!(s.avg_users_referred, 1.5);
    }

    #[test]
    fn empty_group_is_an_error() {
        let g = build_graph(Vec::<(u32, u32)>::new(), 2).unwrap();
        assert!(behavior_summary(&[], &g, &[]).is_err());
    }
}
