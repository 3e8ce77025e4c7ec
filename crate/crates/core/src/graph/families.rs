use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// The named graph families, with their vertex labelling:
///
/// - `path:n`, `cycle:n`, `complete:n`: vertices `0..n` in path/cycle order.
/// - `star:k`: centre 0, leaves `1..=k` (so `star:3` is the claw).
/// - `complete_bipartite:a,b` and `complete_tripartite:r,s,t`: parts in order.
/// - `fan:m,n`: the join of `m` independent vertices (`0..m`) with the path
///   `P_n` (`m..m+n` in path order).
/// - `wheel:n`: hub 0 joined to the cycle `C_{n-1}` on `1..n`.
/// - `windmill:n,d`: `d` copies of `K_n` sharing vertex 0.
/// - `squid:m,l1,l2,...`: the cycle `C_m` on `0..m` with paths of lengths
///   `l1, l2, ...` hanging from vertex 0.
/// - `spider:l1,l2,...`: paths of the given lengths hanging from centre 0.
/// - `claw`: `K_{1,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    CompleteTripartite,
    Fan,
    Wheel,
    Windmill,
    Squid,
    Spider,
    Claw,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::Star,
        FamilyKind::CompleteBipartite,
        FamilyKind::CompleteTripartite,
        FamilyKind::Fan,
        FamilyKind::Wheel,
        FamilyKind::Windmill,
        FamilyKind::Squid,
        FamilyKind::Spider,
        FamilyKind::Claw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::Star => "star",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::CompleteTripartite => "complete_tripartite",
            FamilyKind::Fan => "fan",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Windmill => "windmill",
            FamilyKind::Squid => "squid",
            FamilyKind::Spider => "spider",
            FamilyKind::Claw => "claw",
        }
    }

    fn valid_names() -> String {
        FamilyKind::ALL
            .iter()
            .map(|k| k.name())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownFamily {
                kind: s.to_string(),
                valid: FamilyKind::valid_names(),
            })
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family name plus its integer parameters, e.g. `fan:4,6`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Self {
        FamilySpec { kind, params }
    }

    pub fn build(&self) -> Result<Graph> {
        build_family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if !self.params.is_empty() {
            let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            write!(f, ":{}", params.join(","))?;
        }
        Ok(())
    }
}

fn invalid(spec: &FamilySpec, constraint: &str) -> Error {
    Error::Construction(format!("{spec}: {constraint}"))
}

fn arity(spec: &FamilySpec, expected: usize, usage: &str) -> Result<()> {
    if spec.params.len() == expected {
        Ok(())
    } else {
        Err(invalid(
            spec,
            &format!("expected {expected} parameter(s): {usage}"),
        ))
    }
}

fn at_least(spec: &FamilySpec, value: usize, min: usize, name: &str) -> Result<()> {
    if value >= min {
        Ok(())
    } else {
        Err(invalid(spec, &format!("{name} must be at least {min}")))
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut starts = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for &p in parts {
        starts.push(offset..offset + p);
        offset += p;
    }
    for (i, a) in starts.iter().enumerate() {
        for b in &starts[i + 1..] {
            for u in a.clone() {
                for v in b.clone() {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

fn cycle(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Hangs paths of the given lengths off vertex 0 of `base`.
fn attach_legs(base: Graph, legs: &[usize]) -> Result<Graph> {
    let extra: usize = legs.iter().sum();
    let mut g = Graph::empty(base.vertex_count() + extra)?;
    for (u, v) in base.edges() {
        g.add_edge(u, v)?;
    }
    let mut next = base.vertex_count();
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// Constructs the labelled graph for a family specification.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    match spec.kind {
        FamilyKind::Path => {
            arity(spec, 1, "path:n")?;
            at_least(spec, p[0], 1, "n")?;
            path(p[0])
        }
        FamilyKind::Cycle => {
            arity(spec, 1, "cycle:n")?;
            at_least(spec, p[0], 3, "n")?;
            cycle(p[0])
        }
        FamilyKind::Complete => {
            arity(spec, 1, "complete:n")?;
            at_least(spec, p[0], 1, "n")?;
            complete_multipartite(&vec![1; p[0]])
        }
        FamilyKind::Star => {
            arity(spec, 1, "star:leaves")?;
            at_least(spec, p[0], 1, "leaves")?;
            complete_multipartite(&[1, p[0]])
        }
        FamilyKind::Claw => {
            arity(spec, 0, "claw")?;
            complete_multipartite(&[1, 3])
        }
        FamilyKind::CompleteBipartite => {
            arity(spec, 2, "complete_bipartite:a,b")?;
            at_least(spec, p[0].min(p[1]), 1, "part sizes")?;
            complete_multipartite(p)
        }
        FamilyKind::CompleteTripartite => {
            arity(spec, 3, "complete_tripartite:r,s,t")?;
            at_least(spec, p.iter().copied().min().unwrap_or(0), 1, "part sizes")?;
            complete_multipartite(p)
        }
        FamilyKind::Fan => {
            arity(spec, 2, "fan:m,n")?;
            at_least(spec, p[0], 1, "m")?;
            at_least(spec, p[1], 1, "n")?;
            Graph::empty(p[0])?.join(&path(p[1])?)
        }
        FamilyKind::Wheel => {
            arity(spec, 1, "wheel:n")?;
            at_least(spec, p[0], 4, "n")?;
            Graph::empty(1)?.join(&cycle(p[0] - 1)?)
        }
        FamilyKind::Windmill => {
            arity(spec, 2, "windmill:n,d")?;
            let (n, d) = (p[0], p[1]);
            at_least(spec, n, 1, "n")?;
            at_least(spec, d, 1, "d")?;
            let mut g = Graph::empty(d * n - d + 1)?;
            for copy in 0..d {
                let mut members = vec![0];
                members.extend((0..n - 1).map(|i| 1 + copy * (n - 1) + i));
                for (i, &u) in members.iter().enumerate() {
                    for &v in &members[i + 1..] {
                        g.add_edge(u, v)?;
                    }
                }
            }
            Ok(g)
        }
        FamilyKind::Squid => {
            if p.is_empty() {
                return Err(invalid(spec, "expected squid:m,l1,l2,..."));
            }
            at_least(spec, p[0], 2, "cycle length m")?;
            if p[1..].contains(&0) {
                return Err(invalid(spec, "leg lengths must be positive"));
            }
            // A 2-cycle collapses to a single edge in a simple graph.
            let base = if p[0] == 2 { path(2)? } else { cycle(p[0])? };
            attach_legs(base, &p[1..])
        }
        FamilyKind::Spider => {
            if p.is_empty() || p.contains(&0) {
                return Err(invalid(
                    spec,
                    "expected spider:l1,l2,... with positive leg lengths",
                ));
            }
            attach_legs(Graph::empty(1)?, p)
        }
    }
}
