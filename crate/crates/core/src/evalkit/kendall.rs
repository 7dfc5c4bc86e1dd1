//! Top-k Kendall distance with penalty parameter `p` between two ranked
//! heads of possibly different users.

use std::collections::HashMap;

use rayon::prelude::*;

use super::rank_table;
use crate::error::{Error, Result};
use crate::graph::UserId;
use crate::ranking::ScoreVector;

/// Normalized top-k Kendall distance between two best-first lists of equal
/// length `k`, in `[0, 1]`.
///
/// Over all unordered pairs of users drawn from either list:
/// both in both lists costs 1 if the lists order them differently; both in
/// one list and exactly one in the other costs 1 if the first list places
/// the missing user ahead; one only in each list costs 1; both only in the
/// same list costs `p`. The sum is divided by its maximum over disjoint
/// lists, `k² + p·k(k-1)`.
pub fn kendall_topk(a: &[UserId], b: &[UserId], p: f64) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::input(format!(
            "top-k lists differ in length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("penalty {p} outside [0, 1]")));
    }
    let k = a.len();
    if k == 0 {
        return Ok(0.0);
    }
    let pos_a = positions(a)?;
    let pos_b = positions(b)?;

    // Users in both lists, in the order of `a`, mapped to their rank in `b`.
    let shared: Vec<usize> = a.iter().filter_map(|u| pos_b.get(u).copied()).collect();
    let z = shared.len();
    let only = (k - z) as u64;

    let both = inversions(&shared);
    let one_side = missing_ahead(a, &pos_b) + missing_ahead(b, &pos_a);
    let disjoint = only * only;
    let pairs_alone = only * (only.saturating_sub(1)); // 2·C(only, 2)

    // Same integer products in both terms, so disjoint lists give exactly 1.
    let k = k as u64;
    let raw = (both + one_side + disjoint) as f64 + p * pairs_alone as f64;
    Ok(raw / ((k * k) as f64 + p * (k * (k - 1)) as f64))
}

fn positions(list: &[UserId]) -> Result<HashMap<UserId, usize>> {
    let mut m = HashMap::with_capacity(list.len());
    for (i, &u) in list.iter().enumerate() {
        if m.insert(u, i).is_some() {
            return Err(Error::input(format!("user {} repeated in a top-k list", u.0)));
        }
    }
    Ok(m)
}

/// Pairs (absent, present) where `list` ranks the user missing from the
/// other list ahead of one the other list contains.
fn missing_ahead(list: &[UserId], other: &HashMap<UserId, usize>) -> u64 {
    let mut absent_seen = 0u64;
    let mut total = 0u64;
    for u in list {
        if other.contains_key(u) {
            total += absent_seen;
        } else {
            absent_seen += 1;
        }
    }
    total
}

/// Number of inversions in `v` by merge sort.
fn inversions(v: &[usize]) -> u64 {
    let mut buf = v.to_vec();
    let mut tmp = vec![0; v.len()];
    sort_count(&mut buf, &mut tmp)
}

fn sort_count(v: &mut [usize], tmp: &mut [usize]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (l, r) = v.split_at_mut(mid);
        let (tl, tr) = tmp.split_at_mut(mid);
        sort_count(l, tl) + sort_count(r, tr)
    };
    let (mut i, mut j, mut o) = (0, mid, 0);
    while i < mid && j < n {
        if v[i] <= v[j] {
            tmp[o] = v[i];
            i += 1;
        } else {
            tmp[o] = v[j];
            count += (mid - i) as u64;
            j += 1;
        }
        o += 1;
    }
    tmp[o..o + mid - i].copy_from_slice(&v[i..mid]);
    o += mid - i;
    tmp[o..o + n - j].copy_from_slice(&v[j..n]);
    v.copy_from_slice(&tmp[..n]);
    count
}

/// `(k, distance)` points.
#[derive(Debug, Clone, PartialEq)]
pub struct AgreementCurve {
    pub points: Vec<(usize, f64)>,
}

/// [`kendall_topk`] with `p = 0` between the heads of the two rankings at
/// every `k`; tied users are taken in ascending id order.
pub fn agreement_curve(a: &ScoreVector, b: &ScoreVector, ks: &[usize]) -> Result<AgreementCurve> {
    if a.len() != b.len() {
        return Err(Error::input(format!(
            "rankings cover different user sets ({} vs {} users)",
            a.len(),
            b.len()
        )));
    }
    if let Some(&k) = ks.iter().find(|&&k| k > a.len()) {
        return Err(Error::input(format!(
            "k = {k} exceeds the {} ranked users",
            a.len()
        )));
    }
    let (ra, rb) = rayon::join(|| rank_table(a), || rank_table(b));
    let points = ks
        .par_iter()
        .map(|&k| kendall_topk(ra.head(k), rb.head(k), 0.0).map(|d| (k, d)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AgreementCurve { points })
}
