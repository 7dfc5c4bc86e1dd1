//! Distinctive terms of one corpus against another by Dunning's
//! log-likelihood ratio (G²).

use std::collections::BTreeMap;
use std::fmt;

use super::words;
use crate::error::{Error, Result};

/// Term occurrence counts of one corpus; `total` is the sum of the counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermCounts {
    counts: BTreeMap<String, u64>,
    total: u64,
}

impl TermCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: impl Into<String>, count: u64) {
        *self.counts.entry(term.into()).or_default() += count;
        self.total += count;
    }

    pub fn count(&self, term: &str) -> u64 {
        self.counts.get(term).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> + '_ {
        self.counts.iter().map(|(t, &c)| (t.as_str(), c))
    }
}

impl<S: Into<String>> FromIterator<(S, u64)> for TermCounts {
    fn from_iter<I: IntoIterator<Item = (S, u64)>>(iter: I) -> Self {
        let mut tc = TermCounts::new();
        for (t, c) in iter {
            tc.add(t, c);
        }
        tc
    }
}

/// Unigram and bigram counts of a set of texts (bios or tweets). Bigrams
/// never span two texts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NgramCounts {
    pub unigrams: TermCounts,
    pub bigrams: TermCounts,
}

impl NgramCounts {
    pub fn from_texts<'a>(texts: impl IntoIterator<Item = &'a str>) -> Self {
        let mut out = Self::default();
        for text in texts {
            let ws = words(text);
            for w in &ws {
                out.unigrams.add(w.as_str(), 1);
            }
            for pair in ws.windows(2) {
                out.bigrams.add(format!("{} {}", pair[0], pair[1]), 1);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
    /// Same relative frequency in both corpora.
    Neither,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "a",
            Side::B => "b",
            Side::Neither => "none",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistinctiveTerm {
    pub term: String,
    /// Unsigned G² statistic.
    pub g2: f64,
    /// The corpus in which the term is relatively more frequent.
    pub side: Side,
}

impl DistinctiveTerm {
    /// G² with the sign of the side it favours (positive for corpus A).
    pub fn signed(&self) -> f64 {
        match self.side {
            Side::A => self.g2,
            Side::B => -self.g2,
            Side::Neither => 0.0,
        }
    }
}

fn xlnx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

/// G² for a term seen `a` times in a corpus of `n_a` tokens and `b` times
/// in one of `n_b` tokens.
pub fn g2_statistic(a: u64, n_a: u64, b: u64, n_b: u64) -> f64 {
    let (a, b, n_a, n_b) = (a as f64, b as f64, n_a as f64, n_b as f64);
    let (c, d) = (n_a - a, n_b - b);
    let n = n_a + n_b;
    let cells = xlnx(a) + xlnx(b) + xlnx(c) + xlnx(d);
    let margins = xlnx(a + b) + xlnx(c + d) + xlnx(n_a) + xlnx(n_b);
    (2.0 * (cells - margins + xlnx(n))).max(0.0)
}

fn score_all(a: &TermCounts, b: &TermCounts, out: &mut Vec<DistinctiveTerm>) -> Result<()> {
    if a.total == 0 || b.total == 0 {
        return Err(Error::input("distinctive terms need two nonempty corpora"));
    }
    let mut terms: Vec<&str> = a.counts.keys().map(String::as_str).collect();
    terms.extend(b.counts.keys().map(String::as_str).filter(|t| !a.counts.contains_key(*t)));
    for t in terms {
        let (ca, cb) = (a.count(t), b.count(t));
        // Compare relative frequencies exactly: ca/na vs cb/nb.
        let lhs = u128::from(ca) * u128::from(b.total);
        let rhs = u128::from(cb) * u128::from(a.total);
        let side = match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => Side::A,
            std::cmp::Ordering::Less => Side::B,
            std::cmp::Ordering::Equal => Side::Neither,
        };
        let g2 = if side == Side::Neither {
            0.0
        } else {
            g2_statistic(ca, a.total, cb, b.total)
        };
        out.push(DistinctiveTerm {
            term: t.to_string(),
            g2,
            side,
        });
    }
    Ok(())
}

fn rank(mut all: Vec<DistinctiveTerm>, top_n: usize) -> Vec<DistinctiveTerm> {
    all.sort_by(|x, y| {
        y.signed()
            .total_cmp(&x.signed())
            .then_with(|| x.term.cmp(&y.term))
    });
    all.truncate(top_n);
    all
}

/// Every term of either corpus ranked by signed G², most characteristic
/// of `a` first and most characteristic of `b` last; ties in term order.
pub fn distinctive_terms(
    a: &TermCounts,
    b: &TermCounts,
    top_n: usize,
) -> Result<Vec<DistinctiveTerm>> {
    let mut all = Vec::new();
    score_all(a, b, &mut all)?;
    Ok(rank(all, top_n))
}

/// As [`distinctive_terms`] over unigrams and bigrams together, each order
/// scored against its own corpus size.
pub fn distinctive_ngrams(
    a: &NgramCounts,
    b: &NgramCounts,
    top_n: usize,
) -> Result<Vec<DistinctiveTerm>> {
    let mut all = Vec::new();
    score_all(&a.unigrams, &b.unigrams, &mut all)?;
    if a.bigrams.total > 0 && b.bigrams.total > 0 {
        score_all(&a.bigrams, &b.bigrams, &mut all)?;
    }
    Ok(rank(all, top_n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tc(pairs: &[(&str, u64)]) -> TermCounts {
        pairs.iter().copied().collect()
    }

    #[test]
    fn identical_corpora_score_zero_in_term_order() {
        let a = tc(&[("b", 3), ("a", 2), ("c", 5)]);
        let r = distinctive_terms(&a, &a.clone(), 10).unwrap();
        assert!(r.iter().all(|t| t.g2 == 0.0 && t.side == Side::Neither));
        let names: Vec<_> = r.iter().map(|t| t.term.as_str()).collect();
        assert_eq!(names, ["a", "b", "c"]);
    }

    #[test]
    fn term_only_in_a_by_hand() {
        // Table [[2, 0], [8, 10]]:
        // G² = 2 (2 ln 2 + 8 ln 8 + 10 ln 10 - 2 ln 2 - 18 ln 18 - 2·10 ln 10 + 20 ln 20)
        //    = 2 (8 ln 8 - 18 ln 18 - 10 ln 10 + 20 ln 20)
        let expected = 2.0
            * (8.0 * 8f64.ln() - 18.0 * 18f64.ln() - 10.0 * 10f64.ln() + 20.0 * 20f64.ln());
        assert_abs_diff_eq!(g2_statistic(2, 10, 0, 10), expected, epsilon = 1e-12);
        assert_abs_diff_eq!(expected, 2.995_27, epsilon = 1e-5);

        let a = tc(&[("x", 2), ("y", 8)]);
        let b = tc(&[("y", 10)]);
        let r = distinctive_terms(&a, &b, 1).unwrap();
        assert_eq!(r[0].term, "x");
        assert_eq!(r[0].side, Side::A);
        assert_abs_diff_eq!(r[0].g2, expected, epsilon = 1e-12);
    }

    #[test]
    fn dominant_term_ranks_first() {
        let a = tc(&[("spam", 100), ("the", 500), ("cat", 20)]);
        let b = tc(&[("spam", 1), ("the", 520), ("cat", 25), ("dog", 30)]);
        let r = distinctive_terms(&a, &b, 10).unwrap();
        assert_eq!(r[0].term, "spam");
        assert_eq!(r.last().unwrap().side, Side::B);
    }

    #[test]
    fn swapping_corpora_swaps_sides() {
        let a = tc(&[("p", 7), ("q", 1), ("r", 4)]);
        let b = tc(&[("p", 2), ("q", 6), ("s", 3)]);
        let ab = distinctive_terms(&a, &b, 10).unwrap();
        let ba = distinctive_terms(&b, &a, 10).unwrap();
        for t in &ab {
            let u = ba.iter().find(|u| u.term == t.term).unwrap();
            assert_abs_diff_eq!(t.g2, u.g2, epsilon = 1e-12);
            assert_eq!(t.signed(), -u.signed());
        }
    }

    #[test]
    fn ngrams_from_bios() {
        let a = NgramCounts::from_texts(["Internet marketing guru", "internet marketing"]);
        assert_eq!(a.unigrams.count("internet"), 2);
        assert_eq!(a.bigrams.count("internet marketing"), 2);
        assert_eq!(a.bigrams.total(), 3);
        let b = NgramCounts::from_texts(["dog lover", "coffee and dogs"]);
        let r = distinctive_ngrams(&a, &b, 3).unwrap();
        assert!(r.iter().any(|t| t.term == "internet marketing"));
        assert!(r.iter().all(|t| t.side == Side::A));
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(distinctive_terms(&tc(&[("a", 1)]), &TermCounts::new(), 5).is_err());
    }
}
