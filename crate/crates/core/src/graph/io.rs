//! Graph text formats: graph6, edge lists, and the family DSL.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::families::{FamilyKind, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    FamilyDsl,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::FamilyDsl => parse_family(text)?.build(),
    }
}

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses `kind` or `kind:p1,p2,...`.
pub(crate) fn parse_family(text: &str) -> Result<FamilySpec> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let (name, params) = match body.split_once(':') {
        Some((name, params)) => (name.trim(), Some(params)),
        None => (body, None),
    };
    let kind: FamilyKind = name.parse()?;
    let mut values = Vec::new();
    if let Some(params) = params {
        let mut offset = lead + body.find(':').unwrap_or(0) + 1;
        for field in params.split(',') {
            let token = field.trim();
            let value = token.parse::<usize>().map_err(|_| {
                parse_error(offset, format!("`{token}` is not a nonnegative integer"))
            })?;
            values.push(value);
            offset += field.len() + 1;
        }
    }
    Ok(FamilySpec::new(kind, values))
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_family(s)
    }
}

/// Decodes one graph6 string (optionally prefixed by `>>graph6<<`).
fn parse_graph6(text: &str) -> Result<Graph> {
    const HEADER: &str = ">>graph6<<";
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (start, bytes) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_error(
                start + i,
                format!("byte {b:#04x} is outside 63..=126"),
            ));
        }
    }
    let value = |i: usize| -> Result<u64> {
        bytes
            .get(i)
            .map(|&b| u64::from(b - 63))
            .ok_or_else(|| parse_error(start + i, "unexpected end of input"))
    };
    let (n, mut pos) = if bytes.first() != Some(&126) {
        (value(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = (1..4).try_fold(0u64, |acc, i| Ok::<_, Error>((acc << 6) | value(i)?))?;
        (n, 4)
    } else {
        let n = (2..8).try_fold(0u64, |acc, i| Ok::<_, Error>((acc << 6) | value(i)?))?;
        (n, 8)
    };
    let n = n as usize;
    if n > MAX_VERTICES {
        return Err(Error::Construction(format!(
            "graph6 input has {n} vertices; at most {MAX_VERTICES} are supported"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() != pos + needed {
        let offset = start + (pos + needed).min(bytes.len());
        return Err(parse_error(
            offset,
            format!(
                "expected {needed} data byte(s) for {n} vertices, found {}",
                bytes.len().saturating_sub(pos)
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = value(pos + k / 6)?;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    pos += k / 6;
    if k % 6 != 0 {
        let padding = value(pos)? & ((1 << (6 - k % 6)) - 1);
        if padding != 0 {
            return Err(parse_error(start + pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub(crate) fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// One `u v` pair per line, 0-based. Blank lines and `#` comments are
/// skipped. A line holding a single integer before any edge declares the
/// vertex count, which lets isolated vertices be expressed; otherwise the
/// count is one more than the largest endpoint.
fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut col = 0;
        for piece in content.split_whitespace() {
            let at = content[col..].find(piece).map_or(col, |i| col + i);
            tokens.push((offset + at, piece));
            col = at + piece.len();
        }
        let number = |(at, tok): (usize, &str)| {
            tok.parse::<usize>()
                .map_err(|_| parse_error(at, format!("`{tok}` is not a vertex index")))
        };
        match tokens.as_slice() {
            [] => {}
            [single] if edges.is_empty() && declared.is_none() => {
                declared = Some(number(*single)?);
            }
            [a, b] => edges.push((number(*a)?, number(*b)?, a.0)),
            [first, ..] => {
                return Err(parse_error(first.0, "expected exactly two vertex indices"));
            }
        }
        offset += line.len();
    }
    let inferred = edges
        .iter()
        .map(|&(u, v, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = declared.unwrap_or(inferred);
    if n < inferred {
        return Err(parse_error(
            0,
            format!("declared {n} vertices but an edge uses {}", inferred - 1),
        ));
    }
    let mut g = Graph::empty(n)?;
    for (u, v, at) in edges {
        if u == v {
            return Err(parse_error(at, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}
