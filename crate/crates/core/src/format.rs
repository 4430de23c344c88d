//! Line-oriented instance text format.
//!
//! ```text
//! tree <N>
//! parents <p_1> ... <p_N>      # 0 marks the root
//! vertices <n> <delta>
//! v <top> <bottom_1> [<bottom_2> ...]
//! ```
//!
//! Ids in the file are 1-based. `#` starts a comment that runs to the end
//! of the line; blank lines are ignored.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::instance::{HostTree, RdvInstance, Vertex};
use crate::matching::Matching;

pub fn parse_instance(text: &str) -> Result<RdvInstance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let last_line = text.lines().count().max(1);
    let mut next = |what: &str| {
        lines.next().ok_or_else(|| {
            ParseError::new(
                last_line,
                format!("unexpected end of input, expected {what}"),
            )
        })
    };

    let (ln, line) = next("`tree <N>`")?;
    let fields = record(ln, line, "tree")?;
    let [node_count] = fixed::<1>(ln, "tree", &fields)?;

    let (ln, line) = next("`parents ...`")?;
    let parents = record(ln, line, "parents")?;
    if parents.len() != node_count {
        return Err(ParseError::new(
            ln,
            format!("expected {node_count} parents, found {}", parents.len()),
        ));
    }
    let tree = HostTree::from_parents(parents.iter().map(|&p| p.checked_sub(1)).collect());

    let (ln, line) = next("`vertices <n> <delta>`")?;
    let fields = record(ln, line, "vertices")?;
    let [n, delta] = fixed::<2>(ln, "vertices", &fields)?;

    let mut vertices = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, line) = next("a `v` line")?;
        let ids = record(ln, line, "v")?;
        if ids.len() < 2 {
            return Err(ParseError::new(
                ln,
                "`v` needs a top and at least one bottom",
            ));
        }
        if ids.contains(&0) {
            return Err(ParseError::new(ln, "node ids are 1-based; 0 is not a node"));
        }
        vertices.push(Vertex::subtree(
            ids[0] - 1,
            ids[1..].iter().map(|b| b - 1).collect(),
        ));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(ParseError::new(
            ln,
            format!("trailing content after {n} vertices"),
        ));
    }
    Ok(RdvInstance::new(tree, vertices, delta))
}

fn record(ln: usize, line: &str, keyword: &str) -> Result<Vec<usize>, ParseError> {
    let mut tokens = line.split_whitespace();
    match tokens.next() {
        Some(k) if k == keyword => {}
        Some(k) => {
            return Err(ParseError::new(
                ln,
                format!("expected `{keyword}`, found `{k}`"),
            ));
        }
        None => unreachable!("blank lines are filtered"),
    }
    tokens
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| ParseError::new(ln, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

fn fixed<const K: usize>(
    ln: usize,
    keyword: &str,
    fields: &[usize],
) -> Result<[usize; K], ParseError> {
    fields.try_into().map_err(|_| {
        ParseError::new(
            ln,
            format!("`{keyword}` takes {K} field(s), found {}", fields.len()),
        )
    })
}

pub fn write_instance(inst: &RdvInstance) -> String {
    let mut out = String::new();
    writeln!(out, "tree {}", inst.tree.len()).unwrap();
    out.push_str("parents");
    for p in inst.tree.parents() {
        write!(out, " {}", p.map_or(0, |p| p + 1)).unwrap();
    }
    out.push('\n');
    writeln!(out, "vertices {} {}", inst.len(), inst.delta).unwrap();
    for v in &inst.vertices {
        write!(out, "v {}", v.top + 1).unwrap();
        for b in &v.bottoms {
            write!(out, " {}", b + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

/// `matching <size>` then `e <i> <j>` with `i < j`, 1-based, sorted.
pub fn write_matching(m: &Matching) -> String {
    let edges = m.sorted_edges();
    let mut out = format!("matching {}\n", edges.len());
    for (i, j) in edges {
        writeln!(out, "e {} {}", i + 1, j + 1).unwrap();
    }
    out
}
