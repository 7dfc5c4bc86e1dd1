//! Structural statistics of a follower graph.
//!
//! Floating-point reductions run sequentially in id order so results are
//! bit-identical regardless of the rayon pool size.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::{sorted_intersection_len, SocialGraph, UserId};
use crate::error::{Error, Result};

/// Graphs larger than this skip the all-pairs BFS diameter.
pub const DEFAULT_DIAMETER_CAP: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeSide {
    In,
    Out,
}

/// Summary row of structural statistics. Statistics that are undefined for the
/// graph at hand (e.g. reciprocity without edges) are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub node_count: usize,
    pub edge_count: usize,
    /// `edge_count / node_count` (one-sided).
    pub average_degree: f64,
    pub reciprocity: Option<f64>,
    pub clustering_coefficient: f64,
    pub degree_correlation: Option<f64>,
    pub indegree_slope: Option<f64>,
    pub outdegree_slope: Option<f64>,
    pub largest_wcc: usize,
    pub largest_scc: usize,
    pub diameter: Option<usize>,
}

pub fn graph_stats(g: &SocialGraph, diameter_cap: usize) -> GraphStats {
    let (largest_wcc, largest_scc) = components(g);
    let n = g.node_count();
    GraphStats {
        node_count: n,
        edge_count: g.edge_count(),
        average_degree: if n == 0 {
            0.0
        } else {
            g.edge_count() as f64 / n as f64
        },
        reciprocity: graph_reciprocity(g).ok(),
        clustering_coefficient: clustering_coefficient(g).unwrap_or(0.0),
        degree_correlation: degree_correlation(g).ok(),
        indegree_slope: degree_slope(g, DegreeSide::In).ok(),
        outdegree_slope: degree_slope(g, DegreeSide::Out).ok(),
        largest_wcc,
        largest_scc,
        diameter: diameter(g, diameter_cap),
    }
}

/// Fraction of directed edges whose reverse edge also exists.
pub fn graph_reciprocity(g: &SocialGraph) -> Result<f64> {
    if g.edge_count() == 0 {
        return Err(Error::undefined("reciprocity of a graph without edges"));
    }
    let mutual: usize = g
        .users()
        .map(|u| sorted_intersection_len(g.followees(u), g.followers(u)))
        .sum();
    Ok(mutual as f64 / g.edge_count() as f64)
}

/// Pearson correlation between per-user in-degree and out-degree.
pub fn degree_correlation(g: &SocialGraph) -> Result<f64> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::undefined("degree correlation of an empty graph"));
    }
    let nf = n as f64;
    let mean_in = g.users().map(|u| g.in_degree(u) as f64).sum::<f64>() / nf;
    let mean_out = g.users().map(|u| g.out_degree(u) as f64).sum::<f64>() / nf;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for u in g.users() {
        let x = g.in_degree(u) as f64 - mean_in;
        let y = g.out_degree(u) as f64 - mean_out;
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::undefined(
            "degree correlation needs variance in both in- and out-degrees",
        ));
    }
    Ok(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// Per-user triangle counts on the undirected projection.
fn triangle_counts(adj: &[Vec<UserId>]) -> Vec<u64> {
    let n = adj.len();
    // Orient each undirected edge from lower to higher (degree, id) rank; every
    // triangle is then found exactly once from its lowest-ranked corner.
    let rank_less = |a: usize, b: usize| (adj[a].len(), a) < (adj[b].len(), b);
    let forward: Vec<Vec<u32>> = (0..n)
        .map(|u| {
            let mut f: Vec<u32> = adj[u]
                .iter()
                .map(|v| v.0)
                .filter(|&v| rank_less(u, v as usize))
                .collect();
            f.sort_unstable();
            f
        })
        .collect();
    let mut counts = vec![0u64; n];
    for u in 0..n {
        for &v in &forward[u] {
            let (a, b) = (&forward[u], &forward[v as usize]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        counts[u] += 1;
                        counts[v as usize] += 1;
                        counts[a[i] as usize] += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    counts
}

fn undirected_adjacency(g: &SocialGraph) -> Vec<Vec<UserId>> {
    g.users()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|u| g.undirected_neighbors(u))
        .collect()
}

/// Mean local clustering coefficient of the undirected projection; users with
/// fewer than two neighbors contribute zero.
pub fn clustering_coefficient(g: &SocialGraph) -> Result<f64> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph("clustering coefficient".into()));
    }
    let adj = undirected_adjacency(g);
    let tri = triangle_counts(&adj);
    let mut total = 0.0;
    for (u, nbrs) in adj.iter().enumerate() {
        let k = nbrs.len() as f64;
        if nbrs.len() >= 2 {
            total += 2.0 * tri[u] as f64 / (k * (k - 1.0));
        }
    }
    Ok(total / n as f64)
}

/// Least-squares slope of `ln(frequency)` against `ln(degree)` over observed
/// degrees `>= 1`, without binning.
pub fn degree_slope(g: &SocialGraph, side: DegreeSide) -> Result<f64> {
    let degrees: Vec<usize> = g
        .users()
        .map(|u| match side {
            DegreeSide::In => g.in_degree(u),
            DegreeSide::Out => g.out_degree(u),
        })
        .collect();
    slope_of_degrees(&degrees)
}

pub(crate) fn slope_of_degrees(degrees: &[usize]) -> Result<f64> {
    let max = degrees.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u64; max + 1];
    for &d in degrees {
        counts[d] += 1;
    }
    let hist: Vec<(usize, f64)> = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(d, &c)| (d, c as f64))
        .collect();
    histogram_slope(&hist)
}

/// Log-log least-squares slope of a `(degree, frequency)` histogram. Points
/// with degree 0 or frequency 0 are ignored.
pub fn histogram_slope(hist: &[(usize, f64)]) -> Result<f64> {
    let points: Vec<(f64, f64)> = hist
        .iter()
        .filter(|&&(d, f)| d >= 1 && f > 0.0)
        .map(|&(d, f)| ((d as f64).ln(), f.ln()))
        .collect();
    if points.len() < 3 {
        return Err(Error::undefined(format!(
            "degree slope needs at least 3 distinct nonzero degrees, found {}",
            points.len()
        )));
    }
    Ok(ols_slope(&points))
}

pub(crate) fn ols_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(x, y) in points {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    sxy / sxx
}

struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a as usize] < self.size[b as usize] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
    }
}

/// Weakly connected component id per user (the id is the union-find root).
fn wcc_roots(g: &SocialGraph) -> Vec<u32> {
    let mut ds = DisjointSet::new(g.node_count());
    for (a, b) in g.edges() {
        ds.union(a.0, b.0);
    }
    (0..g.node_count() as u32).map(|u| ds.find(u)).collect()
}

/// Sizes of the largest strongly connected component, via an iterative
/// Tarjan pass.
fn largest_scc(g: &SocialGraph) -> usize {
    const UNVISITED: u32 = u32::MAX;
    let n = g.node_count();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    // (node, next followee offset)
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut next_index = 0u32;
    let mut best = 0usize;

    for root in 0..n as u32 {
        if index[root as usize] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root as usize] = next_index;
        low[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let succ = g.followees(UserId(v));
            if *pos < succ.len() {
                let w = succ[*pos].0;
                *pos += 1;
                if index[w as usize] == UNVISITED {
                    index[w as usize] = next_index;
                    low[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    call.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent as usize] = low[parent as usize].min(low[v as usize]);
            }
            if low[v as usize] == index[v as usize] {
                let mut size = 0;
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w as usize] = false;
                    size += 1;
                    if w == v {
                        break;
                    }
                }
                best = best.max(size);
            }
        }
    }
    best
}

/// `(largest weakly connected component, largest strongly connected
/// component)` sizes.
pub fn components(g: &SocialGraph) -> (usize, usize) {
    let roots = wcc_roots(g);
    let mut sizes = vec![0usize; g.node_count()];
    for &r in &roots {
        sizes[r as usize] += 1;
    }
    let wcc = sizes.into_iter().max().unwrap_or(0);
    (wcc, largest_scc(g))
}

/// Exact diameter of the undirected projection of the largest weakly
/// connected component, or `None` when the graph has more than `node_cap`
/// users (or no users at all).
pub fn diameter(g: &SocialGraph, node_cap: usize) -> Option<usize> {
    let n = g.node_count();
    if n == 0 || n > node_cap {
        return None;
    }
    let roots = wcc_roots(g);
    let mut sizes = vec![0usize; n];
    for &r in &roots {
        sizes[r as usize] += 1;
    }
    // Ties between equally large components go to the smallest root id.
    let giant = (0..n)
        .max_by_key(|&r| (sizes[r], std::cmp::Reverse(r)))
        .expect("non-empty") as u32;
    let members: Vec<u32> = (0..n as u32)
        .filter(|&u| roots[u as usize] == giant)
        .collect();
    let adj = undirected_adjacency(g);
    members
        .par_iter()
        .map_init(
            || (vec![u32::MAX; n], VecDeque::new()),
            |(dist, queue), &s| {
                dist.fill(u32::MAX);
                queue.clear();
                dist[s as usize] = 0;
                queue.push_back(s);
                let mut ecc = 0;
                while let Some(v) = queue.pop_front() {
                    let d = dist[v as usize];
                    ecc = ecc.max(d);
                    for w in &adj[v as usize] {
                        if dist[w.index()] == u32::MAX {
                            dist[w.index()] = d + 1;
                            queue.push_back(w.0);
                        }
                    }
                }
                ecc as usize
            },
        )
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use approx::assert_abs_diff_eq;

    fn g(n: usize, edges: &[(u32, u32)]) -> SocialGraph {
        build_graph(edges.iter().copied(), n).unwrap()
    }

    fn mutual(n: usize, pairs: &[(u32, u32)]) -> SocialGraph {
        g(
            n,
            &pairs
                .iter()
                .flat_map(|&(a, b)| [(a, b), (b, a)])
                .collect::<Vec<_>>(),
        )
    }

    fn grid(side: u32) -> SocialGraph {
        let mut pairs = Vec::new();
        for r in 0..side {
            for c in 0..side {
                let id = r * side + c;
                if c + 1 < side {
                    pairs.push((id, id + 1));
                }
                if r + 1 < side {
                    pairs.push((id, id + side));
                }
            }
        }
        mutual((side * side) as usize, &pairs)
    }

    #[test]
    fn reciprocity_values() {
        assert_eq!(graph_reciprocity(&g(2, &[(0, 1), (1, 0)])).unwrap(), 1.0);
        assert_eq!(graph_reciprocity(&g(2, &[(0, 1)])).unwrap(), 0.0);
        assert_abs_diff_eq!(
            graph_reciprocity(&g(3, &[(0, 1), (1, 0), (1, 2)])).unwrap(),
            2.0 / 3.0
        );
        assert!(matches!(
            graph_reciprocity(&g(3, &[])),
            Err(Error::UndefinedStatistic(_))
        ));
    }

    #[test]
    fn correlation_of_ring_is_undefined() {
        let ring = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(matches!(
            degree_correlation(&ring),
            Err(Error::UndefinedStatistic(_))
        ));
    }

    #[test]
    fn correlation_of_balanced_degrees_is_one() {
        // Every user's in-degree equals its out-degree, but degrees vary.
        let graph = mutual(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        assert_abs_diff_eq!(degree_correlation(&graph).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn correlation_by_hand() {
        // in = (0, 2, 2, 0), out = (2, 1, 0, 1)
        let graph = g(4, &[(0, 1), (0, 2), (1, 2), (3, 1)]);
        let ins = [0.0, 2.0, 2.0, 0.0];
        let outs = [2.0, 1.0, 0.0, 1.0];
        let mi: f64 = ins.iter().sum::<f64>() / 4.0;
        let mo: f64 = outs.iter().sum::<f64>() / 4.0;
        let cov: f64 = (0..4).map(|i| (ins[i] - mi) * (outs[i] - mo)).sum();
        let vi: f64 = ins.iter().map(|x| (x - mi) * (x - mi)).sum();
        let vo: f64 = outs.iter().map(|x| (x - mo) * (x - mo)).sum();
        let expected = cov / (vi.sqrt() * vo.sqrt());
        // cov = -2, vi = 4, vo = 2
        assert_abs_diff_eq!(expected, -1.0 / 2f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(degree_correlation(&graph).unwrap(), expected, epsilon = 1e-12);
    }

    #[test]
    fn clustering_fixtures() {
        let tri = mutual(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_abs_diff_eq!(clustering_coefficient(&tri).unwrap(), 1.0);
        let star = g(5, &[(1, 0), (2, 0), (3, 0), (4, 0)]);
        assert_abs_diff_eq!(clustering_coefficient(&star).unwrap(), 0.0);
        let pendant = g(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_abs_diff_eq!(
            clustering_coefficient(&pendant).unwrap(),
            (1.0 + 1.0 + 1.0 / 3.0 + 0.0) / 4.0,
            epsilon = 1e-12
        );
    }

    /// Brute-force triangle enumeration over all vertex triples.
    fn brute_clustering(graph: &SocialGraph) -> f64 {
        let n = graph.node_count();
        let adj = |a: usize, b: usize| {
            graph.has_edge(UserId::from(a), UserId::from(b))
                || graph.has_edge(UserId::from(b), UserId::from(a))
        };
        let mut total = 0.0;
        for u in 0..n {
            let nbrs: Vec<usize> = (0..n).filter(|&v| v != u && adj(u, v)).collect();
            let k = nbrs.len();
            if k < 2 {
                continue;
            }
            let mut links = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if adj(nbrs[i], nbrs[j]) {
                        links += 1;
                    }
                }
            }
            total += 2.0 * links as f64 / (k * (k - 1)) as f64;
        }
        total / n as f64
    }

    #[test]
    fn clustering_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.random_range(1..14u32);
            let edges: Vec<(u32, u32)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b)
                .filter(|_| rng.random_bool(0.3))
                .collect();
            let graph = g(n as usize, &edges);
            assert_abs_diff_eq!(
                clustering_coefficient(&graph).unwrap(),
                brute_clustering(&graph),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn slope_of_exact_power_law() {
        // frequency proportional to d^-2 over degrees 1..=100
        let hist: Vec<(usize, f64)> = (1..=100usize)
            .map(|d| (d, 5.0 * (d as f64).powi(-2)))
            .collect();
        assert_abs_diff_eq!(histogram_slope(&hist).unwrap(), -2.0, epsilon = 1e-6);

        // Integer realisation: count(d) = 10000 / d^2 on the divisors of 100.
        let mut degrees = Vec::new();
        for d in (1..=100usize).filter(|d| 100 % d == 0) {
            degrees.extend(std::iter::repeat_n(d, 10_000 / (d * d)));
        }
        assert_abs_diff_eq!(slope_of_degrees(&degrees).unwrap(), -2.0, epsilon = 1e-6);
    }

    #[test]
    fn slope_needs_three_degrees() {
        let ring = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(
            degree_slope(&ring, DegreeSide::In),
            Err(Error::UndefinedStatistic(_))
        ));
    }

    #[test]
    fn component_fixtures() {
        assert_eq!(
            components(&g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])),
            (5, 5)
        );
        assert_eq!(components(&g(3, &[(0, 1), (1, 2)])), (3, 1));
        let joined = g(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        );
        assert_eq!(components(&joined), (6, 3));
        assert_eq!(components(&g(0, &[])), (0, 0));
        assert_eq!(components(&g(3, &[])), (1, 1));
    }

    #[test]
    fn diameter_fixtures() {
        assert_eq!(diameter(&g(4, &[(0, 1), (1, 2), (2, 3)]), 100), Some(3));
        let complete = mutual(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(diameter(&complete, 100), Some(1));
        assert_eq!(diameter(&grid(10), DEFAULT_DIAMETER_CAP), Some(18));
        assert_eq!(diameter(&grid(10), 99), None);
    }

    #[test]
    fn diameter_uses_largest_component() {
        // A 3-path plus a 5-path: the larger component wins.
        let graph = g(9, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 7)]);
        assert_eq!(diameter(&graph, 100), Some(4));
    }

    #[test]
    fn stats_row_is_consistent() {
        let s = graph_stats(&grid(4), DEFAULT_DIAMETER_CAP);
        assert_eq!(s.node_count, 16);
        assert_eq!(s.edge_count, 48);
        assert_abs_diff_eq!(s.average_degree, 3.0);
        assert_eq!(s.reciprocity, Some(1.0));
        assert_eq!((s.largest_wcc, s.largest_scc), (16, 16));
        assert_eq!(s.diameter, Some(6));
        assert_abs_diff_eq!(s.degree_correlation.unwrap(), 1.0, epsilon = 1e-12);
    }
}
