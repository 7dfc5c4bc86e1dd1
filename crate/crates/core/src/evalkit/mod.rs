//! Evaluation of rankings against labelled user groups.

mod io;
mod kendall;

pub use io::{
    read_labels_csv, read_scores_csv, write_agreement_curve, write_decile_report,
    write_found_curves, write_scores_csv, write_shares, ShareRow,
};
pub use kendall::{agreement_curve, kendall_topk, AgreementCurve};

use crate::error::{Error, Result};
use crate::graph::UserId;
use crate::ranking::{Method, ScoreVector};

/// Tie-aware ranking: users tied on score share the mean of the positions
/// they span, so positions sum to `N(N+1)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankTable {
    positions: Vec<f64>,
    order: Vec<UserId>,
}

impl RankTable {
    /// Ranks by descending score; ties are listed by ascending user id.
    pub fn from_scores(scores: &[f64]) -> Self {
        let n = scores.len();
        let mut order: Vec<UserId> = (0..n).map(UserId::from).collect();
        order.sort_by(|a, b| {
            scores[b.index()]
                .total_cmp(&scores[a.index()])
                .then(a.cmp(b))
        });
        let mut positions = vec![0.0; n];
        let mut start = 0;
        while start < n {
            let s = scores[order[start].index()];
            let end = order[start..]
                .iter()
                .position(|u| scores[u.index()] != s)
                .map_or(n, |p| start + p);
            // raw ranks start+1 ..= end
            let mid = (start + 1 + end) as f64 / 2.0;
            for u in &order[start..end] {
                positions[u.index()] = mid;
            }
            start = end;
        }
        Self { positions, order }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn position(&self, u: UserId) -> f64 {
        self.positions[u.index()]
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    /// Users best-first.
    pub fn order(&self) -> &[UserId] {
        &self.order
    }

    pub fn head(&self, k: usize) -> &[UserId] {
        &self.order[..k.min(self.order.len())]
    }
}

pub fn rank_table(s: &ScoreVector) -> RankTable {
    RankTable::from_scores(&s.scores)
}

fn dedup_members(group: &[UserId], n: usize) -> Result<Vec<UserId>> {
    let mut g = group.to_vec();
    g.sort_unstable();
    g.dedup();
    if let Some(u) = g.iter().find(|u| u.index() >= n) {
        return Err(Error::input(format!(
            "user {} outside a ranking of {n} users",
            u.0
        )));
    }
    Ok(g)
}

/// Fraction of the total score held by `group` (a set; repeats count once).
/// TunkRank influence is normalized to a distribution first.
pub fn prestige_share(s: &ScoreVector, group: &[UserId]) -> Result<f64> {
    let normalized;
    let s = if s.method == Method::TunkRank {
        normalized = s.normalized()?;
        &normalized
    } else {
        s
    };
    let total = s.total();
    if !(total > 0.0) {
        return Err(Error::input("prestige share of a zero score vector"));
    }
    let members = dedup_members(group, s.len())?;
    Ok(members.iter().map(|u| s.scores[u.index()]).sum::<f64>() / total)
}

/// A named set of users.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub name: String,
    pub members: Vec<UserId>,
}

impl Group {
    pub fn new(name: impl Into<String>, members: Vec<UserId>) -> Self {
        Self {
            name: name.into(),
            members,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecileRow {
    pub group: String,
    /// 9 down to 1; decile `d` covers the group's best `10 - d` tenths.
    pub decile: u8,
    /// Worst (largest) position in the slice.
    pub boundary: f64,
    pub mean: f64,
    pub median: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DecileReport {
    pub rows: Vec<DecileRow>,
    /// Groups left out because they had no members.
    pub omitted: Vec<String>,
}

fn median_sorted(v: &[f64]) -> f64 {
    let m = v.len();
    if m % 2 == 1 {
        v[m / 2]
    } else {
        (v[m / 2 - 1] + v[m / 2]) / 2.0
    }
}

/// Cumulative decile slices: for `d = 9..=1`, the group's members holding
/// the best `⌈|G|·(10-d)/10⌉` positions, summarized by their worst, mean
/// and median position.
pub fn decile_report(rt: &RankTable, groups: &[Group]) -> Result<DecileReport> {
    let mut report = DecileReport::default();
    for g in groups {
        let members = dedup_members(&g.members, rt.len())?;
        if members.is_empty() {
            report.omitted.push(g.name.clone());
            continue;
        }
        let mut pos: Vec<f64> = members.iter().map(|&u| rt.position(u)).collect();
        pos.sort_by(f64::total_cmp);
        let m = pos.len();
        for d in (1..=9u8).rev() {
            let k = (m * usize::from(10 - d)).div_ceil(10);
            let slice = &pos[..k];
            report.rows.push(DecileRow {
                group: g.name.clone(),
                decile: d,
                boundary: slice[k - 1],
                mean: slice.iter().sum::<f64>() / k as f64,
                median: median_sorted(slice),
            });
        }
    }
    Ok(report)
}

/// `(top_fraction, found_fraction)` points from 0 to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct FoundCurve {
    pub points: Vec<(f64, f64)>,
}

/// For each cut `c = i/resolution`, the fraction of `group` whose position
/// is at most `c·N`.
pub fn found_curve(rt: &RankTable, group: &[UserId], resolution: usize) -> Result<FoundCurve> {
    if resolution == 0 {
        return Err(Error::input("found curve resolution must be positive"));
    }
    let members = dedup_members(group, rt.len())?;
    if members.is_empty() {
        return Err(Error::input("found curve of an empty group"));
    }
    let mut pos: Vec<f64> = members.iter().map(|&u| rt.position(u)).collect();
    pos.sort_by(f64::total_cmp);
    let n = rt.len() as f64;
    let m = pos.len() as f64;
    let points = (0..=resolution)
        .map(|i| {
            // position ≤ i·N/resolution, compared without dividing
            let limit = i as f64 * n;
            let found = pos.partition_point(|&p| p * resolution as f64 <= limit);
            (i as f64 / resolution as f64, found as f64 / m)
        })
        .collect();
    Ok(FoundCurve { points })
}

/// Name of the group holding every ranked user.
pub const ALL_USERS: &str = "all";

/// The all-users group followed by one group per distinct label other than
/// `legit`, in label order.
pub fn label_groups(labels: &[(UserId, String)], n: usize) -> Result<Vec<Group>> {
    let mut by_label: std::collections::BTreeMap<&str, Vec<UserId>> = Default::default();
    for (u, l) in labels {
        if u.index() >= n {
            return Err(Error::input(format!("labelled user {} outside a ranking of {n} users", u.0)));
        }
        if l != "legit" {
            by_label.entry(l).or_default().push(*u);
        }
    }
    let mut groups = vec![Group::new(ALL_USERS, (0..n).map(UserId::from).collect())];
    groups.extend(by_label.into_iter().map(|(l, m)| Group::new(l, m)));
    Ok(groups)
}

/// Everything the evaluation report contains for one ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub deciles: DecileReport,
    pub found: Vec<(String, FoundCurve)>,
    pub shares: Vec<ShareRow>,
}

/// Decile report, found-curves and prestige shares of `groups` under `s`.
/// Empty groups are omitted from the curves and the decile report.
pub fn evaluate(s: &ScoreVector, groups: &[Group], resolution: usize) -> Result<Evaluation> {
    let rt = rank_table(s);
    let deciles = decile_report(&rt, groups)?;
    let mut found = Vec::new();
    let mut shares = Vec::new();
    for g in groups {
        let members = dedup_members(&g.members, s.len())?;
        shares.push(ShareRow {
            group: g.name.clone(),
            members: members.len(),
            share: prestige_share(s, &members)?,
        });
        if !members.is_empty() {
            found.push((g.name.clone(), found_curve(&rt, &members, resolution)?));
        }
    }
    Ok(Evaluation {
        deciles,
        found,
        shares,
    })
}
