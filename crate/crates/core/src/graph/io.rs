use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use super::{GraphStats, SocialGraph, UserId};
use crate::error::{Error, Result};

/// Parses `follower<TAB>followee` lines. Lines starting with `#` are comments
/// except `#nodes=N`, which fixes the node count; without it the count is
/// `max id + 1`.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<SocialGraph> {
    let mut declared: Option<usize> = None;
    let mut pairs: Vec<(UserId, UserId)> = Vec::new();
    let mut max_id: Option<u32> = None;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("nodes=") {
                let n = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| Error::parse(lineno, format!("bad node count: {e}")))?;
                declared = Some(n);
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::parse(lineno, "expected `follower<TAB>followee`"));
        };
        let parse = |s: &str| {
            s.parse::<u32>()
                .map_err(|e| Error::parse(lineno, format!("bad user id {s:?}: {e}")))
        };
        let (a, b) = (parse(a)?, parse(b)?);
        if a == b {
            return Err(Error::parse(lineno, format!("self-loop on user {a}")));
        }
        max_id = max_id.max(Some(a.max(b)));
        pairs.push((UserId(a), UserId(b)));
    }
    let inferred = max_id.map_or(0, |m| m as usize + 1);
    let node_count = match declared {
        Some(n) if n < inferred => {
            return Err(Error::input(format!(
                "#nodes={n} but the edge list references user {}",
                inferred - 1
            )))
        }
        Some(n) => n,
        None => inferred,
    };
    pairs.sort_unstable();
    pairs.dedup();
    Ok(SocialGraph::from_sorted_unique(node_count, &pairs))
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<SocialGraph> {
    parse_edge_list(BufReader::new(File::open(path)?))
}

/// Writes the `#nodes=N` header followed by edges in lexicographic order.
pub fn write_edge_list<W: Write>(mut out: W, graph: &SocialGraph) -> Result<()> {
    writeln!(out, "#nodes={}", graph.node_count())?;
    for (a, b) in graph.edges() {
        writeln!(out, "{a}\t{b}")?;
    }
    out.flush()?;
    Ok(())
}

/// One header row and one data row; undefined statistics are left empty.
pub fn write_stats_csv<W: Write>(mut out: W, s: &GraphStats) -> Result<()> {
    fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
        v.map(|x| x.to_string()).unwrap_or_default()
    }
    writeln!(
        out,
        "nodes,edges,average_degree,reciprocity,clustering_coefficient,degree_correlation,\
         indegree_slope,outdegree_slope,largest_wcc,largest_scc,diameter"
    )?;
    writeln!(
        out,
        "{},{},{},{},{},{},{},{},{},{},{}",
        s.node_count,
        s.edge_count,
        s.average_degree,
        opt(s.reciprocity),
        s.clustering_coefficient,
        opt(s.degree_correlation),
        opt(s.indegree_slope),
        opt(s.outdegree_slope),
        s.largest_wcc,
        s.largest_scc,
        opt(s.diameter),
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_comments() {
        let text = "# crawl\n#nodes=5\n0\t1\n1\t0\n\n";
        let g = parse_edge_list(text.as_bytes()).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn infers_node_count() {
        let g = parse_edge_list("3\t7\n".as_bytes()).unwrap();
        assert_eq!(g.node_count(), 8);
    }

    #[test]
    fn empty_file_with_header() {
        let g = parse_edge_list("#nodes=5\n".as_bytes()).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (5, 0));
    }

    #[test]
    fn reports_bad_line_number() {
        let err = parse_edge_list("0\t1\nx\t2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("0\t1\t2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_edge_list("4\t4\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn header_too_small() {
        assert!(parse_edge_list("#nodes=2\n0\t5\n".as_bytes()).is_err());
    }

    #[test]
    fn write_then_parse() {
        let g = SocialGraph::build(6, [(0u32, 1u32), (5, 2), (2, 5), (3, 1)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&mut buf, &g).unwrap();
        assert_eq!(parse_edge_list(buf.as_slice()).unwrap(), g);
    }

    #[test]
    fn stats_row() {
        let g = SocialGraph::build(2, [(0u32, 1u32), (1, 0)]).unwrap();
        let mut buf = Vec::new();
        write_stats_csv(&mut buf, &super::super::graph_stats(&g, 100)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let row = text.lines().nth(1).unwrap();
        assert!(row.starts_with("2,2,1,1,"), "{row}");
        assert!(row.ends_with(",2,2,1"), "{row}");
    }
}
