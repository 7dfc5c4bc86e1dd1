//! Dense-matrix reference implementations of the ranking updates, written
//! directly from the defining equations and independent of the library's
//! sparse sweep code. Shared by the integration and acceptance suites.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use prestigerank::graph::SocialGraph;
use prestigerank::textfeat::{cosine_sim, TermVector};
use prestigerank::UserId;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `adj[(i, j)] = 1` when `i` follows `j`.
pub fn adjacency(g: &SocialGraph) -> DMatrix<f64> {
    let n = g.node_count();
    let mut a = DMatrix::zeros(n, n);
    for (x, y) in g.edges() {
        a[(x.index(), y.index())] = 1.0;
    }
    a
}

fn out_degrees(a: &DMatrix<f64>) -> Vec<f64> {
    (0..a.nrows()).map(|i| a.row(i).sum()).collect()
}

/// Solves `(I - (1-d) M) x = (d/N) 1` with `M` column-stochastic and sink
/// columns uniform.
pub fn pagerank(g: &SocialGraph, d: f64) -> Vec<f64> {
    let a = adjacency(g);
    let n = a.nrows();
    let out = out_degrees(&a);
    let m = DMatrix::from_fn(n, n, |i, j| {
        if out[j] == 0.0 {
            1.0 / n as f64
        } else {
            a[(j, i)] / out[j]
        }
    });
    let lhs = DMatrix::identity(n, n) - m * (1.0 - d);
    let rhs = DVector::from_element(n, d / n as f64);
    lhs.lu().solve(&rhs).expect("PageRank system is nonsingular").as_slice().to_vec()
}

/// Stationary vector of `T[i][j] = [j→i]/(1+L_j) + 1/((1+L_j) N)`, found by
/// replacing one balance equation with `Σx = 1`.
pub fn noderanking(g: &SocialGraph) -> Vec<f64> {
    let a = adjacency(g);
    let n = a.nrows();
    let out = out_degrees(&a);
    let t = DMatrix::from_fn(n, n, |i, j| {
        let p = 1.0 / (1.0 + out[j]);
        a[(j, i)] * p + p / n as f64
    });
    let mut lhs = t - DMatrix::identity(n, n);
    let mut rhs = DVector::zeros(n);
    for j in 0..n {
        lhs[(n - 1, j)] = 1.0;
    }
    rhs[n - 1] = 1.0;
    lhs.lu().solve(&rhs).expect("chain is irreducible").as_slice().to_vec()
}

/// Solves `(I - pW) I = W 1` with `W[x][y] = [y→x] / L_y`.
pub fn tunkrank(g: &SocialGraph, p: f64) -> Vec<f64> {
    let a = adjacency(g);
    let n = a.nrows();
    let out = out_degrees(&a);
    let w = DMatrix::from_fn(n, n, |x, y| if out[y] == 0.0 { 0.0 } else { a[(y, x)] / out[y] });
    let rhs = &w * DVector::from_element(n, 1.0);
    let lhs = DMatrix::identity(n, n) - w * p;
    lhs.lu().solve(&rhs).expect("spectral radius below 1").as_slice().to_vec()
}

/// HITS authority and hub limits from the uniform start: the authority
/// vector is the projection of `Aᵀ1` onto the dominant eigenspace of `AᵀA`.
pub fn hits(g: &SocialGraph) -> (Vec<f64>, Vec<f64>) {
    let a = adjacency(g);
    let n = a.nrows();
    if g.edge_count() == 0 {
        return (vec![0.0; n], vec![0.0; n]);
    }
    let ata = a.transpose() * &a;
    let eig = SymmetricEigen::new(ata);
    let top = eig.eigenvalues.iter().cloned().fold(f64::MIN, f64::max);
    let v0 = a.transpose() * DVector::from_element(n, 1.0);
    let mut auth = DVector::zeros(n);
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        if (top - lambda).abs() <= 1e-9 * top {
            let q = eig.eigenvectors.column(k);
            auth += q * q.dot(&v0);
        }
    }
    auth /= auth.norm();
    let mut hub = &a * &auth;
    hub /= hub.norm();
    // Eigenvectors carry floating noise around exact zeros.
    let clean = |v: DVector<f64>| v.iter().map(|x| if x.abs() < 1e-14 { 0.0 } else { *x }).collect();
    (clean(auth), clean(hub))
}

/// Dense power iteration of `x ← Gx / Σ(Gx)`; `None` when it fails to settle
/// within `max_sweeps` (for example on a periodic structure).
pub fn normalized_power(g_mat: &DMatrix<f64>, max_sweeps: usize) -> Option<Vec<f64>> {
    let n = g_mat.nrows();
    let mut x = DVector::from_element(n, 1.0 / n as f64);
    for _ in 0..max_sweeps {
        let mut y = g_mat * &x;
        let s = y.sum();
        if s > 0.0 {
            y /= s;
        }
        let delta = (&y - &x).abs().sum();
        x = y;
        if delta < 1e-14 {
            return Some(x.as_slice().to_vec());
        }
    }
    None
}

/// TwitterRank as the Perron vector of
/// `G = (1-γ) Pᵀ + γ e 1ᵀ`, with `e` the tweet-share vector.
pub fn twitterrank(g: &SocialGraph, vectors: &[TermVector], counts: &[u64], gamma: f64) -> Option<Vec<f64>> {
    let a = adjacency(g);
    let n = a.nrows();
    let total: u64 = counts.iter().sum();
    let mut p = DMatrix::zeros(n, n); // p[(j, i)] = P(j, i)
    for j in 0..n {
        let denom: f64 = (0..n).filter(|&x| a[(j, x)] > 0.0).map(|x| counts[x] as f64).sum();
        for i in 0..n {
            if a[(j, i)] > 0.0 && denom > 0.0 {
                p[(j, i)] = counts[i] as f64 / denom * cosine_sim(&vectors[j], &vectors[i]);
            }
        }
    }
    let e = DVector::from_fn(n, |i, _| counts[i] as f64 / total as f64);
    let gm = p.transpose() * (1.0 - gamma) + &e * DVector::from_element(n, gamma).transpose();
    normalized_power(&gm, 200_000)
}

/// Discounted PageRank as repeated `x ← Wx / Σ(Wx)` with
/// `W[i][j] = [j→i] w_j / L_j`; `weights` are the normalized ratios.
pub fn discounted_pagerank(g: &SocialGraph, weights: &[f64]) -> Option<Vec<f64>> {
    let a = adjacency(g);
    let n = a.nrows();
    let out = out_degrees(&a);
    let w = DMatrix::from_fn(n, n, |i, j| if out[j] == 0.0 { 0.0 } else { a[(j, i)] * weights[j] / out[j] });
    normalized_power(&w, 200_000)
}

/// Seeded random graph on `1..=max_n` users with a random edge density.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> SocialGraph {
    let n = rng.random_range(1..=max_n);
    let density: f64 = rng.random_range(0.1..0.6);
    let mut edges = Vec::new();
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            if a != b && rng.random_bool(density) {
                edges.push((a, b));
            }
        }
    }
    SocialGraph::build(n, edges).expect("valid random graph")
}

/// Random term vectors over a six-word vocabulary and random tweet counts,
/// with at least one tweet overall.
pub fn random_corpus(rng: &mut ChaCha8Rng, n: usize) -> (Vec<TermVector>, Vec<u64>) {
    let vocab = ["a", "b", "c", "d", "e", "f"];
    let vectors = (0..n)
        .map(|_| {
            let mut pairs = Vec::new();
            for t in vocab {
                if rng.random_bool(0.5) {
                    pairs.push((t.to_string(), rng.random_range(1..5) as f64));
                }
            }
            TermVector::from_weights(pairs).expect("positive weights")
        })
        .collect();
    let mut counts: Vec<u64> = (0..n).map(|_| rng.random_range(0..6)).collect();
    if counts.iter().all(|&c| c == 0) {
        counts[0] = 1;
    }
    (vectors, counts)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn linf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn users(v: &[u32]) -> Vec<UserId> {
    v.iter().map(|&u| UserId(u)).collect()
}
