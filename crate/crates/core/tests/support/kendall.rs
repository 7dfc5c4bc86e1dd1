//! Pair-by-pair top-k Kendall distance, straight from the four pair cases,
//! plus an enumerator of every ordered k-subset of a small universe.

#![allow(dead_code)]

use prestigerank::UserId;

/// Unnormalized penalty: the sum over unordered pairs of the union.
pub fn raw_penalty(a: &[UserId], b: &[UserId], p: f64) -> f64 {
    let pos = |l: &[UserId], u: UserId| l.iter().position(|&x| x == u);
    let mut union: Vec<UserId> = a.iter().chain(b).copied().collect();
    union.sort();
    union.dedup();
    let mut total = 0.0;
    for (x, &i) in union.iter().enumerate() {
        for &j in &union[x + 1..] {
            let (ai, aj, bi, bj) = (pos(a, i), pos(a, j), pos(b, i), pos(b, j));
            total += match (ai, aj, bi, bj) {
                // Both ranked by both lists.
                (Some(ai), Some(aj), Some(bi), Some(bj)) => f64::from(u8::from((ai < aj) != (bi < bj))),
                // Both in one list, one of them in the other: the absent one
                // sits below the present one there.
                (Some(ai), Some(aj), Some(_), None) => f64::from(u8::from(aj < ai)),
                (Some(ai), Some(aj), None, Some(_)) => f64::from(u8::from(ai < aj)),
                (Some(_), None, Some(bi), Some(bj)) => f64::from(u8::from(bj < bi)),
                (None, Some(_), Some(bi), Some(bj)) => f64::from(u8::from(bi < bj)),
                // One in each list only.
                (Some(_), None, None, Some(_)) | (None, Some(_), Some(_), None) => 1.0,
                // Both only in the same list.
                (Some(_), Some(_), None, None) | (None, None, Some(_), Some(_)) => p,
                _ => unreachable!("pair drawn from the union"),
            };
        }
    }
    total
}

pub fn normalized(a: &[UserId], b: &[UserId], p: f64) -> f64 {
    let k = a.len() as u64;
    raw_penalty(a, b, p) / ((k * k) as f64 + p * (k * (k - 1)) as f64)
}

/// Every ordered selection of `k` distinct users from `0..universe`.
pub fn arrangements(universe: u32, k: usize) -> Vec<Vec<UserId>> {
    fn go(universe: u32, k: usize, cur: &mut Vec<UserId>, out: &mut Vec<Vec<UserId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for u in 0..universe {
            if !cur.contains(&UserId(u)) {
                cur.push(UserId(u));
                go(universe, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(universe, k, &mut Vec::with_capacity(k), &mut out);
    out
}
