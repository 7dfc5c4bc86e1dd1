//! Directed follower graphs.
//!
//! An edge `u → v` means *u follows v*: `v` is one of `u`'s followees and `u`
//! is one of `v`'s followers. Both directions are stored as compressed sparse
//! rows with sorted neighbor lists, so the followee list of a user and its
//! follower list are both contiguous slices.

mod io;
mod stats;

use std::fmt;

use crate::error::{Error, Result};

pub use io::{parse_edge_list, read_edge_list, write_edge_list, write_stats_csv};
pub use stats::{
    clustering_coefficient, components, degree_correlation, degree_slope, diameter,
    graph_reciprocity, graph_stats, histogram_slope, DegreeSide, GraphStats, DEFAULT_DIAMETER_CAP,
};

/// Dense user identifier in `[0, node_count)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct UserId(pub u32);

impl UserId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for UserId {
    fn from(v: u32) -> Self {
        UserId(v)
    }
}

impl From<usize> for UserId {
    fn from(v: usize) -> Self {
        UserId(u32::try_from(v).expect("user id exceeds u32 range"))
    }
}

impl From<i32> for UserId {
    fn from(v: i32) -> Self {
        UserId(u32::try_from(v).expect("user id must be non-negative"))
    }
}

impl fmt::Display for UserId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Follower, followee and reciprocal-link counts of one user.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReciprocityProfile {
    pub followers: u64,
    pub followees: u64,
    /// Users that both follow and are followed by this user.
    pub reciprocal: u64,
}

impl ReciprocityProfile {
    pub fn new(followers: u64, followees: u64, reciprocal: u64) -> Result<Self> {
        if reciprocal > followers.min(followees) {
            return Err(Error::input(format!(
                "reciprocal count {reciprocal} exceeds min(followers={followers}, followees={followees})"
            )));
        }
        Ok(Self {
            followers,
            followees,
            reciprocal,
        })
    }
}

/// Immutable simple directed graph with both adjacency directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocialGraph {
    out_offsets: Vec<usize>,
    out_targets: Vec<UserId>,
    in_offsets: Vec<usize>,
    in_sources: Vec<UserId>,
}

/// Builds a graph from `(follower, followee)` pairs.
///
/// Duplicate edges are collapsed. Self-loops and out-of-range endpoints are
/// rejected.
pub fn build_graph<I, A>(edges: I, node_count: usize) -> Result<SocialGraph>
where
    I: IntoIterator<Item = (A, A)>,
    A: Into<UserId>,
{
    SocialGraph::build(node_count, edges)
}

impl SocialGraph {
    pub fn build<I, A>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, A)>,
        A: Into<UserId>,
    {
        if node_count > u32::MAX as usize {
            return Err(Error::input(format!(
                "node count {node_count} exceeds the u32 id space"
            )));
        }
        let mut pairs: Vec<(UserId, UserId)> = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            for end in [a, b] {
                if end.index() >= node_count {
                    return Err(Error::input(format!(
                        "edge ({a}, {b}) has endpoint {end} outside [0, {node_count})"
                    )));
                }
            }
            if a == b {
                return Err(Error::input(format!("self-loop on user {a}")));
            }
            pairs.push((a, b));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Self::from_sorted_unique(node_count, &pairs))
    }

    /// `pairs` must be sorted, duplicate-free, in range and loop-free.
    pub(crate) fn from_sorted_unique(node_count: usize, pairs: &[(UserId, UserId)]) -> Self {
        let mut out_offsets = vec![0usize; node_count + 1];
        let mut in_offsets = vec![0usize; node_count + 1];
        for &(a, b) in pairs {
            out_offsets[a.index() + 1] += 1;
            in_offsets[b.index() + 1] += 1;
        }
        for i in 0..node_count {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let out_targets: Vec<UserId> = pairs.iter().map(|&(_, b)| b).collect();
        // Sources arrive in ascending order because `pairs` is sorted by source.
        let mut cursor = in_offsets.clone();
        let mut in_sources = vec![UserId(0); pairs.len()];
        for &(a, b) in pairs {
            in_sources[cursor[b.index()]] = a;
            cursor[b.index()] += 1;
        }
        Self {
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
        }
    }

    pub fn empty(node_count: usize) -> Self {
        Self::from_sorted_unique(node_count, &[])
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.out_offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.out_targets.len()
    }

    pub fn users(&self) -> impl ExactSizeIterator<Item = UserId> + Clone {
        (0..self.node_count() as u32).map(UserId)
    }

    /// Users followed by `u`, ascending (the set L(u)).
    #[inline]
    pub fn followees(&self, u: UserId) -> &[UserId] {
        let i = u.index();
        &self.out_targets[self.out_offsets[i]..self.out_offsets[i + 1]]
    }

    /// Users following `u`, ascending (the set M(u)).
    #[inline]
    pub fn followers(&self, u: UserId) -> &[UserId] {
        let i = u.index();
        &self.in_sources[self.in_offsets[i]..self.in_offsets[i + 1]]
    }

    #[inline]
    pub fn out_degree(&self, u: UserId) -> usize {
        let i = u.index();
        self.out_offsets[i + 1] - self.out_offsets[i]
    }

    #[inline]
    pub fn in_degree(&self, u: UserId) -> usize {
        let i = u.index();
        self.in_offsets[i + 1] - self.in_offsets[i]
    }

    pub fn contains(&self, u: UserId) -> bool {
        u.index() < self.node_count()
    }

    pub fn has_edge(&self, from: UserId, to: UserId) -> bool {
        self.contains(from) && self.followees(from).binary_search(&to).is_ok()
    }

    /// All edges in (follower, followee) lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (UserId, UserId)> + '_ {
        self.users()
            .flat_map(move |u| self.followees(u).iter().map(move |&v| (u, v)))
    }

    fn check(&self, u: UserId) -> Result<()> {
        if self.contains(u) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "user {u} outside [0, {})",
                self.node_count()
            )))
        }
    }

    pub fn reciprocity_profile(&self, u: UserId) -> Result<ReciprocityProfile> {
        self.check(u)?;
        Ok(self.profile_unchecked(u))
    }

    fn profile_unchecked(&self, u: UserId) -> ReciprocityProfile {
        ReciprocityProfile {
            followers: self.in_degree(u) as u64,
            followees: self.out_degree(u) as u64,
            reciprocal: sorted_intersection_len(self.followees(u), self.followers(u)) as u64,
        }
    }

    /// Profiles for every user, indexed by id.
    pub fn reciprocity_profiles(&self) -> Vec<ReciprocityProfile> {
        self.users().map(|u| self.profile_unchecked(u)).collect()
    }

    /// Subgraph induced on users with `keep[u]`, renumbered densely in
    /// ascending original-id order.
    pub fn induced_subgraph(&self, keep: &[bool]) -> Result<(SocialGraph, IdMapping)> {
        if keep.len() != self.node_count() {
            return Err(Error::input(format!(
                "keep mask has {} entries for {} users",
                keep.len(),
                self.node_count()
            )));
        }
        let mut to_new = vec![None; self.node_count()];
        let mut to_old = Vec::new();
        for u in self.users() {
            if keep[u.index()] {
                to_new[u.index()] = Some(UserId::from(to_old.len()));
                to_old.push(u);
            }
        }
        let mut pairs = Vec::new();
        for &old in &to_old {
            let a = to_new[old.index()].expect("kept");
            for &v in self.followees(old) {
                if let Some(b) = to_new[v.index()] {
                    pairs.push((a, b));
                }
            }
        }
        let sub = SocialGraph::from_sorted_unique(to_old.len(), &pairs);
        Ok((sub, IdMapping { to_new, to_old }))
    }

    /// Relabels user `u` as `perm[u]`. `perm` must be a permutation of
    /// `0..node_count`.
    pub fn permute(&self, perm: &[UserId]) -> Result<SocialGraph> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::input("permutation length differs from node count"));
        }
        for &p in perm {
            if p.index() >= n || std::mem::replace(&mut seen[p.index()], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        let mut pairs: Vec<(UserId, UserId)> = self
            .edges()
            .map(|(a, b)| (perm[a.index()], perm[b.index()]))
            .collect();
        pairs.sort_unstable();
        Ok(SocialGraph::from_sorted_unique(n, &pairs))
    }

    /// Sorted, duplicate-free neighbors of `u` ignoring edge direction.
    pub fn undirected_neighbors(&self, u: UserId) -> Vec<UserId> {
        let (a, b) = (self.followees(u), self.followers(u));
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    merged.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    merged.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    merged.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        merged.extend_from_slice(&a[i..]);
        merged.extend_from_slice(&b[j..]);
        merged
    }
}

/// Old ↔ new id correspondence produced by [`SocialGraph::induced_subgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdMapping {
    to_new: Vec<Option<UserId>>,
    to_old: Vec<UserId>,
}

impl IdMapping {
    pub fn identity(n: usize) -> Self {
        Self {
            to_new: (0..n).map(|i| Some(UserId::from(i))).collect(),
            to_old: (0..n).map(UserId::from).collect(),
        }
    }

    pub fn new_id(&self, old: UserId) -> Option<UserId> {
        self.to_new.get(old.index()).copied().flatten()
    }

    pub fn old_id(&self, new: UserId) -> UserId {
        self.to_old[new.index()]
    }

    /// Number of users in the original graph.
    pub fn original_len(&self) -> usize {
        self.to_new.len()
    }

    pub fn retained(&self) -> &[UserId] {
        &self.to_old
    }

    pub fn is_identity(&self) -> bool {
        self.to_old.len() == self.to_new.len()
    }
}

pub(crate) fn sorted_intersection_len(a: &[UserId], b: &[UserId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}
