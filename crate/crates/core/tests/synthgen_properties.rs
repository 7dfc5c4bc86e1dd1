//! Statistical and structural properties of the synthetic generator.

use prestigerank::graph::{degree_slope, graph_reciprocity, DegreeSide};
use prestigerank::synthgen::{generate, GenConfig, Label};
use prestigerank::UserId;

fn mean_out_degree(g: &prestigerank::SocialGraph, users: &[UserId]) -> f64 {
    users.iter().map(|&u| g.out_degree(u) as f64).sum::<f64>() / users.len() as f64
}

#[test]
fn same_seed_same_graph_and_labels() {
    let cfg = GenConfig {
        n_background: 800,
        n_spammers: 20,
        n_celebrities: 10,
        n_sybil_rings: 2,
        seed: 5,
        ..GenConfig::benchmark()
    };
    let a = generate(&cfg).unwrap();
    assert_eq!(a, generate(&cfg).unwrap());
    let b = generate(&GenConfig { seed: 6, ..cfg.clone() }).unwrap();
    assert_ne!(a.graph, b.graph);

    let counts: std::collections::HashMap<Label, usize> = a.label_counts().into_iter().collect();
    assert_eq!(counts[&Label::Spammer], 20);
    assert_eq!(counts[&Label::Celebrity], 10);
    assert_eq!(counts[&Label::GroupMember], cfg.n_close_groups * cfg.group_size);
    assert_eq!(counts[&Label::Sybil], 2 * (cfg.ring_size + 1));
    assert_eq!(a.labels.len(), cfg.node_count());
}

#[test]
fn pure_populations_have_their_reciprocity() {
    // Only cliques: every link is reciprocated.
    let cliques = GenConfig {
        n_close_groups: 6,
        group_size: 4,
        ..GenConfig::empty()
    };
    assert_eq!(graph_reciprocity(&generate(&cliques).unwrap().graph).unwrap(), 1.0);

    // Background without follow-back, and celebrities nobody follows back.
    let one_way = GenConfig {
        n_background: 3000,
        background_follow_rate: 1.0,
        n_celebrities: 5,
        celebrity_reach: 0.1,
        celebrity_followees: 3,
        ..GenConfig::empty()
    };
    let r = graph_reciprocity(&generate(&one_way).unwrap().graph).unwrap();
    // Only chance mutual picks among sparse background follows.
    assert!(r < 0.01, "{r}");

    // Full follow-back: only follows received by celebrities stay one-way.
    let courteous = GenConfig {
        followback_prob: 1.0,
        ..one_way
    };
    let lg = generate(&courteous).unwrap();
    for (a, b) in lg.graph.edges() {
        if lg.labels[b.index()] != Label::Celebrity {
            assert!(lg.graph.has_edge(b, a), "{a} -> {b} not followed back");
        }
    }
    assert!(graph_reciprocity(&lg.graph).unwrap() > 0.5);
}

#[test]
fn background_degree_matches_the_configured_rate() {
    let cfg = GenConfig {
        n_background: 20_000,
        background_follow_rate: 12.0,
        seed: 11,
        ..GenConfig::empty()
    };
    let lg = generate(&cfg).unwrap();
    let users: Vec<UserId> = lg.graph.users().collect();
    let mean = mean_out_degree(&lg.graph, &users);
    assert!((mean / 12.0 - 1.0).abs() < 0.05, "mean out-degree {mean}");
}

#[test]
fn benchmark_spammers_follow_far_more_than_background_users() {
    let lg = generate(&GenConfig::benchmark()).unwrap();
    let spam = mean_out_degree(&lg.graph, &lg.members(Label::Spammer));
    let legit = mean_out_degree(&lg.graph, &lg.members(Label::Legit));
    assert!(spam >= 5.0 * legit, "spammers {spam}, background {legit}");
}

#[test]
fn power_law_out_degrees_recover_their_exponent() {
    let cfg = GenConfig {
        n_background: 100_000,
        out_degree_exponent: Some(1.5),
        max_out_degree: 200,
        seed: 3,
        ..GenConfig::empty()
    };
    let g = generate(&cfg).unwrap().graph;
    let slope = degree_slope(&g, DegreeSide::Out).unwrap();
    assert!((slope + 1.5).abs() <= 0.15, "slope {slope}");
}
