//! Three hand-built archetypes: a heavily followed user, a user within a
//! close group of friends, and a user who collects follows by exchanging
//! links. User 0 is always the focal user.

use super::{Label, LabeledGraph};
use crate::error::Result;
use crate::graph::{build_graph, UserId};

#[derive(Debug, Clone, PartialEq)]
pub struct Fig1Scenario {
    pub name: &'static str,
    pub focal: UserId,
    pub graph: LabeledGraph,
}

fn scenario(
    name: &'static str,
    n: usize,
    edges: &[(u32, u32)],
    labels: Vec<Label>,
) -> Result<Fig1Scenario> {
    Ok(Fig1Scenario {
        name,
        focal: UserId(0),
        graph: LabeledGraph {
            graph: build_graph(edges.iter().copied(), n)?,
            labels,
            corpus: None,
        },
    })
}

/// Counts were chosen to give the archetypes' follower/followee ratios:
/// 7/4 = 1.75 for the celebrity, 2/3 ≈ 0.67 for the close-group member and
/// 8/7 ≈ 1.14 for the link exchanger.
pub fn scenario_fig1() -> Result<[Fig1Scenario; 3]> {
    // Seven fans follow the celebrity, who follows four others; no link
    // is reciprocated.
    let mut celeb_edges: Vec<(u32, u32)> = (1..=7).map(|f| (f, 0)).collect();
    celeb_edges.extend((8..=11).map(|t| (0, t)));
    let mut celeb_labels = vec![Label::Legit; 12];
    celeb_labels[0] = Label::Celebrity;

    // Friends 1 and 2 and the focal user follow one another; the focal user
    // also follows user 3, who does not follow back.
    let group_edges = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1), (0, 3)];
    let group_labels = vec![
        Label::GroupMember,
        Label::GroupMember,
        Label::GroupMember,
        Label::Legit,
    ];

    // The exchanger follows seven users who all follow back; one more user
    // follows without being followed.
    let mut spam_edges: Vec<(u32, u32)> = (1..=7).flat_map(|t| [(0, t), (t, 0)]).collect();
    spam_edges.push((8, 0));
    let mut spam_labels = vec![Label::Legit; 9];
    spam_labels[0] = Label::Spammer;

    Ok([
        scenario("celebrity", 12, &celeb_edges, celeb_labels)?,
        scenario("close-group", 4, &group_edges, group_labels)?,
        scenario("link-exchanger", 9, &spam_edges, spam_labels)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranking::{discounted_ratio, raw_ratio};

    #[test]
    fn focal_counts() {
        let [c, g, s] = scenario_fig1().unwrap();
        let prof = |sc: &Fig1Scenario| sc.graph.graph.reciprocity_profile(sc.focal).unwrap();
        let (pc, pg, ps) = (prof(&c), prof(&g), prof(&s));
        assert_eq!((pc.followers, pc.followees, pc.reciprocal), (7, 4, 0));
        assert_eq!((pg.followers, pg.followees, pg.reciprocal), (2, 3, 2));
        assert_eq!((ps.followers, ps.followees, ps.reciprocal), (8, 7, 7));
        assert_eq!(raw_ratio(&pc), 1.75);
        assert_eq!(discounted_ratio(&pc), 1.75);
        assert_eq!(discounted_ratio(&pg), 0.0);
        assert_eq!(discounted_ratio(&ps), 1.0);
    }
}
