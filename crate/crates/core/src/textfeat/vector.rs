use std::collections::BTreeMap;

use super::{tokenize, Tweet};
use crate::error::{Error, Result};

/// Sparse term-frequency vector, sorted by term, all weights positive.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TermVector {
    entries: Vec<(String, f64)>,
}

impl TermVector {
    /// Builds a vector from `(term, weight)` pairs; repeated terms add up.
    pub fn from_weights<I, S>(weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let mut acc: BTreeMap<String, f64> = BTreeMap::new();
        for (term, w) in weights {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::input(format!(
                    "term weights must be positive and finite, got {w}"
                )));
            }
            *acc.entry(term.into()).or_default() += w;
        }
        Ok(Self {
            entries: acc.into_iter().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.entries.iter().map(|(t, w)| (t.as_str(), *w))
    }

    pub fn get(&self, term: &str) -> Option<f64> {
        self.entries
            .binary_search_by(|(t, _)| t.as_str().cmp(term))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|(_, w)| w * w).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::from_weights(self.entries.iter().map(|(t, w)| (t.clone(), w * c)))
    }
}

/// Token frequencies over a user's tweets.
pub fn term_vector<'a>(tweets: impl IntoIterator<Item = &'a Tweet>) -> TermVector {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for t in tweets {
        for tok in tokenize(&t.text) {
            *counts.entry(tok.term()).or_default() += 1;
        }
    }
    TermVector {
        entries: counts.into_iter().map(|(t, c)| (t, c as f64)).collect(),
    }
}

/// One term vector and tweet count per user of an `n`-user graph.
pub fn user_term_vectors(tweets: &[Tweet], n: usize) -> Result<(Vec<TermVector>, Vec<u64>)> {
    let mut by_user: Vec<Vec<&Tweet>> = vec![Vec::new(); n];
    for t in tweets {
        by_user
            .get_mut(t.author.index())
            .ok_or_else(|| {
                Error::input(format!(
                    "tweet author {} is not among the {n} users",
                    t.author.0
                ))
            })?
            .push(t);
    }
    let counts = by_user.iter().map(|v| v.len() as u64).collect();
    let vectors = by_user.into_iter().map(term_vector).collect();
    Ok((vectors, counts))
}

/// Cosine of the angle between two term vectors; 0 if either is empty.
pub fn cosine_sim(a: &TermVector, b: &TermVector) -> f64 {
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    if a == b {
        return 1.0;
    }
    let (mut i, mut j, mut dot) = (0, 0, 0.0);
    let (x, y) = (&a.entries, &b.entries);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                dot += x[i].1 * y[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    (dot / (a.norm() * b.norm())).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tv(pairs: &[(&str, f64)]) -> TermVector {
        TermVector::from_weights(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn cosine_examples() {
        let a = tv(&[("a", 1.0), ("b", 1.0)]);
        assert_eq!(cosine_sim(&a, &a), 1.0);
        assert_eq!(cosine_sim(&a, &tv(&[("c", 2.0)])), 0.0);
        assert_abs_diff_eq!(
            cosine_sim(&a, &tv(&[("a", 1.0)])),
            1.0 / 2f64.sqrt(),
            epsilon = 1e-15
        );
        assert_eq!(cosine_sim(&a, &TermVector::default()), 0.0);
    }

    #[test]
    fn cosine_is_symmetric_and_scale_invariant() {
        let a = tv(&[("x", 3.0), ("y", 1.0), ("z", 0.5)]);
        let b = tv(&[("y", 2.0), ("z", 4.0), ("w", 1.0)]);
        assert_eq!(cosine_sim(&a, &b), cosine_sim(&b, &a));
        assert_abs_diff_eq!(
            cosine_sim(&a.scaled(7.5).unwrap(), &b),
            cosine_sim(&a, &b),
            epsilon = 1e-15
        );
    }

    #[test]
    fn rejects_bad_weights_and_merges_duplicates() {
        assert!(TermVector::from_weights([("a", 0.0)]).is_err());
        assert!(TermVector::from_weights([("a", f64::NAN)]).is_err());
        let v = tv(&[("b", 1.0), ("a", 2.0), ("b", 0.5)]);
        assert_eq!(v.iter().collect::<Vec<_>>(), vec![("a", 2.0), ("b", 1.5)]);
        assert_eq!(v.get("b"), Some(1.5));
        assert_eq!(v.get("c"), None);
    }

    #[test]
    fn term_vector_counts_tokens() {
        let tweets = [
            Tweet::new(0u32, "Free money #free").unwrap(),
            Tweet::new(0u32, "free @you").unwrap(),
        ];
        let v = term_vector(&tweets);
        assert_eq!(v.get("free"), Some(2.0));
        assert_eq!(v.get("#free"), Some(1.0));
        assert_eq!(v.get("@you"), Some(1.0));
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn per_user_vectors() {
        let tweets = [
            Tweet::new(2u32, "hi").unwrap(),
            Tweet::new(0u32, "yo").unwrap(),
            Tweet::new(2u32, "hi again").unwrap(),
        ];
        let (v, c) = user_term_vectors(&tweets, 3).unwrap();
        assert_eq!(c, vec![1, 0, 2]);
        assert!(v[1].is_empty());
        assert_eq!(v[2].get("hi"), Some(2.0));
        assert!(user_term_vectors(&tweets, 2).is_err());
    }
}
