//! CSV report formats. Floats are written in shortest round-trip form, so
//! reading a file back yields bit-identical values.

use std::io::{BufRead, Write};

use super::{AgreementCurve, DecileReport, FoundCurve};
use crate::error::{Error, Result};
use crate::graph::UserId;
use crate::ranking::{Method, ScoreVector};

/// `user_id,<method>` header followed by one row per user in id order.
pub fn write_scores_csv<W: Write>(mut w: W, s: &ScoreVector) -> Result<()> {
    writeln!(w, "user_id,{}", s.method)?;
    for (u, v) in s.scores.iter().enumerate() {
        writeln!(w, "{u},{v}")?;
    }
    Ok(())
}

fn data_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|l| (i + 1, l)).map_err(Error::from))
        .filter(|r| !matches!(r, Ok((_, l)) if l.trim().is_empty()))
}

fn split2(line: &str, lineno: usize) -> Result<(&str, &str)> {
    let mut parts = line.split(',');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => Ok((a.trim(), b.trim())),
        _ => Err(Error::parse(lineno, "expected two comma-separated fields")),
    }
}

fn parse_user(s: &str, lineno: usize) -> Result<UserId> {
    s.parse::<u32>()
        .map(UserId)
        .map_err(|_| Error::parse(lineno, format!("bad user id {s:?}")))
}

/// Reads a file written by [`write_scores_csv`]. Rows may come in any order
/// but must cover users `0..N` exactly once.
pub fn read_scores_csv<R: BufRead>(reader: R) -> Result<ScoreVector> {
    let mut lines = data_lines(reader);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header"))??;
    let (first, method) = split2(&header, hl)?;
    if first != "user_id" {
        return Err(Error::parse(hl, "header must start with user_id"));
    }
    let method: Method = method.parse().map_err(|e: Error| Error::parse(hl, e.to_string()))?;
    let mut rows: Vec<Option<f64>> = Vec::new();
    for item in lines {
        let (ln, line) = item?;
        let (u, v) = split2(&line, ln)?;
        let u = parse_user(u, ln)?.index();
        let v: f64 = v
            .parse()
            .map_err(|_| Error::parse(ln, format!("bad score {v:?}")))?;
        if !v.is_finite() {
            return Err(Error::parse(ln, "score is not finite"));
        }
        if rows.len() <= u {
            rows.resize(u + 1, None);
        }
        if rows[u].replace(v).is_some() {
            return Err(Error::parse(ln, format!("user {u} listed twice")));
        }
    }
    let scores = rows
        .into_iter()
        .enumerate()
        .map(|(u, v)| v.ok_or_else(|| Error::input(format!("no score for user {u}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScoreVector {
        method,
        scores,
        iterations_used: 0,
        converged: true,
    })
}

/// `user_id,label` rows (header required).
pub fn read_labels_csv<R: BufRead>(reader: R) -> Result<Vec<(UserId, String)>> {
    let mut lines = data_lines(reader);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header"))??;
    if split2(&header, hl)? != ("user_id", "label") {
        return Err(Error::parse(hl, "header must be user_id,label"));
    }
    let mut out = Vec::new();
    for item in lines {
        let (ln, line) = item?;
        let (u, label) = split2(&line, ln)?;
        if label.is_empty() {
            return Err(Error::parse(ln, "empty label"));
        }
        out.push((parse_user(u, ln)?, label.to_string()));
    }
    Ok(out)
}

pub fn write_decile_report<W: Write>(mut w: W, r: &DecileReport) -> Result<()> {
    writeln!(w, "group,decile,boundary,mean,median")?;
    for row in &r.rows {
        writeln!(
            w,
            "{},{},{},{},{}",
            row.group, row.decile, row.boundary, row.mean, row.median
        )?;
    }
    Ok(())
}

pub fn write_found_curves<W: Write>(mut w: W, curves: &[(String, FoundCurve)]) -> Result<()> {
    writeln!(w, "group,top_fraction,found_fraction")?;
    for (group, c) in curves {
        for (x, y) in &c.points {
            writeln!(w, "{group},{x},{y}")?;
        }
    }
    Ok(())
}

pub fn write_agreement_curve<W: Write>(mut w: W, c: &AgreementCurve) -> Result<()> {
    writeln!(w, "k,distance")?;
    for (k, d) in &c.points {
        writeln!(w, "{k},{d}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShareRow {
    pub group: String,
    pub members: usize,
    pub share: f64,
}

pub fn write_shares<W: Write>(mut w: W, rows: &[ShareRow]) -> Result<()> {
    writeln!(w, "group,members,share")?;
    for r in rows {
        writeln!(w, "{},{},{}", r.group, r.members, r.share)?;
    }
    Ok(())
}
