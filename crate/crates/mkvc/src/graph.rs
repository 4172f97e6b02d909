//! Bipartite graph model: two vertex sides with degree-sorted orderings,
//! coverage and residual-degree queries, and the `bkvc` text format.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// One of the two color classes of a bipartite graph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => f.write_str("A"),
            Side::B => f.write_str("B"),
        }
    }
}

/// A vertex reference: side plus 1-based index within that side.
///
/// The derived ordering (side `A` before `B`, then ascending index) is the
/// tie-break order used throughout the solvers.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    pub side: Side,
    pub index: u32,
}

impl VertexRef {
    pub fn new(side: Side, index: u32) -> Self {
        debug_assert!(index >= 1, "vertex indices are 1-based");
        VertexRef { side, index }
    }

    pub fn a(index: u32) -> Self {
        VertexRef::new(Side::A, index)
    }

    pub fn b(index: u32) -> Self {
        VertexRef::new(Side::B, index)
    }

    /// 0-based position within the side's internal arrays.
    pub(crate) fn slot(self) -> usize {
        self.index as usize - 1
    }

    pub(crate) fn from_slot(side: Side, slot: usize) -> Self {
        VertexRef::new(side, slot as u32 + 1)
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side, self.index)
    }
}

impl FromStr for VertexRef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (side, rest) = match s.as_bytes().first() {
            Some(b'A') => (Side::A, &s[1..]),
            Some(b'B') => (Side::B, &s[1..]),
            _ => return Err(format!("vertex ref must start with A or B: {s:?}")),
        };
        let index: u32 = rest
            .parse()
            .map_err(|_| format!("bad vertex index in {s:?}"))?;
        if index == 0 {
            return Err(format!("vertex indices are 1-based: {s:?}"));
        }
        Ok(VertexRef::new(side, index))
    }
}

impl Serialize for VertexRef {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexRef {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// A vertex set together with the exact number of edges it covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    /// Sorted, duplicate-free vertex list.
    pub vertices: Vec<VertexRef>,
    /// Number of distinct edges with at least one endpoint in `vertices`.
    pub coverage: u64,
}

impl Solution {
    /// Builds a solution from a vertex set, computing its coverage.
    pub fn new(graph: &BipartiteGraph, vertices: Vec<VertexRef>) -> Result<Self, GraphError> {
        let coverage = graph.coverage(&vertices)?;
        Ok(Solution::from_parts(vertices, coverage))
    }

    pub(crate) fn from_parts(mut vertices: Vec<VertexRef>, coverage: u64) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Solution { vertices, coverage }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {index} out of range on side {side} (side has {limit} vertices)")]
    VertexOutOfRange {
        side: Side,
        index: u32,
        limit: usize,
    },
    #[error("duplicate edge ({a}, {b})")]
    DuplicateEdge { a: u32, b: u32 },
    #[error("vertex {vertex} lies on side {} but side {expected} was required", .vertex.side)]
    SideMismatch { vertex: VertexRef, expected: Side },
    #[error("k = {k} out of range (maximum {max})")]
    KOutOfRange { k: usize, max: usize },
}

/// Errors from reading the `bkvc` text format. Every variant identifies the
/// offending line where one exists.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `p bkvc <nA> <nB> <m>` header")]
    MissingHeader,
    #[error("line {line}: malformed header {content:?}")]
    MalformedHeader { line: usize, content: String },
    #[error("line {line}: second header record")]
    DuplicateHeader { line: usize },
    #[error("line {line}: malformed edge record {content:?}")]
    MalformedEdge { line: usize, content: String },
    #[error(
        "line {line}: vertex index {index} out of range on side {side} (side has {limit} vertices)"
    )]
    VertexOutOfRange {
        line: usize,
        side: Side,
        index: u64,
        limit: usize,
    },
    #[error("line {line}: duplicate edge ({a}, {b})")]
    DuplicateEdge { line: usize, a: u32, b: u32 },
    #[error("line {line}: edge record exceeds declared edge count m = {declared}")]
    ExtraEdge { line: usize, declared: usize },
    #[error("header declared m = {declared} edges but {found} edge records were found")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: unrecognized record {content:?}")]
    UnexpectedRecord { line: usize, content: String },
}

/// Immutable simple bipartite graph.
///
/// Adjacency is stored both as per-vertex lists and as an edge set with O(1)
/// membership. Each side carries a fixed vertex ordering by decreasing degree,
/// ties broken by ascending index, so that every downstream solver is
/// deterministic.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    n_a: usize,
    n_b: usize,
    adj_a: Vec<Vec<u32>>,
    adj_b: Vec<Vec<u32>>,
    edge_set: HashSet<(u32, u32)>,
    order_a: Vec<u32>,
    order_b: Vec<u32>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n_a == other.n_a && self.n_b == other.n_b && self.edge_set == other.edge_set
    }
}

impl Eq for BipartiteGraph {}

impl BipartiteGraph {
    /// Builds a graph from 1-based `(a, b)` edge pairs. Rejects out-of-range
    /// endpoints and duplicate pairs.
    pub fn new(
        n_a: usize,
        n_b: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, GraphError> {
        let mut adj_a: Vec<Vec<u32>> = vec![Vec::new(); n_a];
        let mut adj_b: Vec<Vec<u32>> = vec![Vec::new(); n_b];
        let mut edge_set = HashSet::new();
        for (a, b) in edges {
            if a == 0 || a as usize > n_a {
                return Err(GraphError::VertexOutOfRange {
                    side: Side::A,
                    index: a,
                    limit: n_a,
                });
            }
            if b == 0 || b as usize > n_b {
                return Err(GraphError::VertexOutOfRange {
                    side: Side::B,
                    index: b,
                    limit: n_b,
                });
            }
            let (sa, sb) = (a - 1, b - 1);
            if !edge_set.insert((sa, sb)) {
                return Err(GraphError::DuplicateEdge { a, b });
            }
            adj_a[sa as usize].push(sb);
            adj_b[sb as usize].push(sa);
        }
        Ok(Self::finish(n_a, n_b, adj_a, adj_b, edge_set))
    }

    fn finish(
        n_a: usize,
        n_b: usize,
        mut adj_a: Vec<Vec<u32>>,
        mut adj_b: Vec<Vec<u32>>,
        edge_set: HashSet<(u32, u32)>,
    ) -> Self {
        // Canonical adjacency order, independent of edge input order.
        for list in adj_a.iter_mut().chain(adj_b.iter_mut()) {
            list.sort_unstable();
        }
        let order_a = degree_order(&adj_a);
        let order_b = degree_order(&adj_b);
        BipartiteGraph {
            n_a,
            n_b,
            adj_a,
            adj_b,
            edge_set,
            order_a,
            order_b,
        }
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    pub fn n_side(&self, side: Side) -> usize {
        match side {
            Side::A => self.n_a,
            Side::B => self.n_b,
        }
    }

    /// Total vertex count over both sides.
    pub fn n_total(&self) -> usize {
        self.n_a + self.n_b
    }

    /// Number of edges, `m`.
    pub fn edge_count(&self) -> usize {
        self.edge_set.len()
    }

    /// Edge membership for 1-based endpoint indices.
    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        if a == 0 || b == 0 {
            return false;
        }
        self.edge_set.contains(&(a - 1, b - 1))
    }

    /// Degree of a vertex; panics on an out-of-range reference.
    pub fn degree(&self, v: VertexRef) -> usize {
        self.check_ref(v).expect("vertex ref out of range");
        self.adj(v.side)[v.slot()].len()
    }

    pub fn check_ref(&self, v: VertexRef) -> Result<(), GraphError> {
        let limit = self.n_side(v.side);
        if v.index == 0 || v.index as usize > limit {
            return Err(GraphError::VertexOutOfRange {
                side: v.side,
                index: v.index,
                limit,
            });
        }
        Ok(())
    }

    pub(crate) fn adj(&self, side: Side) -> &[Vec<u32>] {
        match side {
            Side::A => &self.adj_a,
            Side::B => &self.adj_b,
        }
    }

    pub(crate) fn deg_slot(&self, side: Side, slot: usize) -> usize {
        self.adj(side)[slot].len()
    }

    /// Side ordering by decreasing degree (0-based slots), ties by index.
    pub(crate) fn order(&self, side: Side) -> &[u32] {
        match side {
            Side::A => &self.order_a,
            Side::B => &self.order_b,
        }
    }

    /// The side's vertices ordered by decreasing degree, ties by index.
    pub fn degree_order(&self, side: Side) -> Vec<VertexRef> {
        self.order(side)
            .iter()
            .map(|&s| VertexRef::from_slot(side, s as usize))
            .collect()
    }

    /// Number of distinct edges with at least one endpoint in `set`.
    /// Duplicate references are counted once.
    pub fn coverage(&self, set: &[VertexRef]) -> Result<u64, GraphError> {
        let mut in_a = vec![false; self.n_a];
        let mut in_b = vec![false; self.n_b];
        for &v in set {
            self.check_ref(v)?;
            match v.side {
                Side::A => in_a[v.slot()] = true,
                Side::B => in_b[v.slot()] = true,
            }
        }
        let mut total: u64 = 0;
        for (slot, marked) in in_a.iter().enumerate() {
            if *marked {
                total += self.adj_a[slot].len() as u64;
            }
        }
        for (slot, marked) in in_b.iter().enumerate() {
            if *marked {
                total += self.adj_b[slot].len() as u64;
                // Edges already counted from the A side are deducted so each
                // covered edge contributes exactly once.
                total -= self.adj_b[slot]
                    .iter()
                    .filter(|&&a| in_a[a as usize])
                    .count() as u64;
            }
        }
        Ok(total)
    }

    /// Per-vertex residual degrees on `side`: the number of incident edges
    /// whose opposite endpoint is not in `fixed`. `fixed` must lie entirely on
    /// the opposite side. Index `i` of the result refers to vertex `i + 1`.
    pub fn residual_degrees(
        &self,
        side: Side,
        fixed: &[VertexRef],
    ) -> Result<Vec<u32>, GraphError> {
        let opposite = side.opposite();
        let mut resid: Vec<u32> = self.adj(side).iter().map(|l| l.len() as u32).collect();
        let mut seen = vec![false; self.n_side(opposite)];
        for &v in fixed {
            self.check_ref(v)?;
            if v.side != opposite {
                return Err(GraphError::SideMismatch {
                    vertex: v,
                    expected: opposite,
                });
            }
            if !seen[v.slot()] {
                seen[v.slot()] = true;
                for &nb in &self.adj(opposite)[v.slot()] {
                    resid[nb as usize] -= 1;
                }
            }
        }
        Ok(resid)
    }

    /// Parses the `bkvc` text format. Edge line order is irrelevant: two
    /// parses of the same edge set produce identical graphs and orderings.
    pub fn parse_bkvc(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut adj_a: Vec<Vec<u32>> = Vec::new();
        let mut adj_b: Vec<Vec<u32>> = Vec::new();
        let mut edge_set: HashSet<(u32, u32)> = HashSet::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_ascii_whitespace();
            match tokens.next() {
                Some("c") => continue,
                Some("p") => {
                    if header.is_some() {
                        return Err(ParseError::DuplicateHeader { line });
                    }
                    let malformed = || ParseError::MalformedHeader {
                        line,
                        content: content.to_string(),
                    };
                    if tokens.next() != Some("bkvc") {
                        return Err(malformed());
                    }
                    let mut num = || -> Result<usize, ParseError> {
                        tokens
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(malformed)
                    };
                    let (n_a, n_b, m) = (num()?, num()?, num()?);
                    if tokens.next().is_some() {
                        return Err(malformed());
                    }
                    header = Some((n_a, n_b, m));
                    adj_a = vec![Vec::new(); n_a];
                    adj_b = vec![Vec::new(); n_b];
                }
                Some("e") => {
                    let (n_a, n_b, m) = header.ok_or(ParseError::MissingHeader)?;
                    let malformed = || ParseError::MalformedEdge {
                        line,
                        content: content.to_string(),
                    };
                    let a: u64 = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(malformed)?;
                    let b: u64 = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(malformed)?;
                    if tokens.next().is_some() {
                        return Err(malformed());
                    }
                    if a == 0 || a > n_a as u64 {
                        return Err(ParseError::VertexOutOfRange {
                            line,
                            side: Side::A,
                            index: a,
                            limit: n_a,
                        });
                    }
                    if b == 0 || b > n_b as u64 {
                        return Err(ParseError::VertexOutOfRange {
                            line,
                            side: Side::B,
                            index: b,
                            limit: n_b,
                        });
                    }
                    if edge_set.len() == m {
                        return Err(ParseError::ExtraEdge { line, declared: m });
                    }
                    let (sa, sb) = (a as u32 - 1, b as u32 - 1);
                    if !edge_set.insert((sa, sb)) {
                        return Err(ParseError::DuplicateEdge {
                            line,
                            a: a as u32,
                            b: b as u32,
                        });
                    }
                    adj_a[sa as usize].push(sb);
                    adj_b[sb as usize].push(sa);
                }
                Some(_) => {
                    return Err(ParseError::UnexpectedRecord {
                        line,
                        content: content.to_string(),
                    });
                }
                None => unreachable!("empty content filtered above"),
            }
        }

        let (n_a, n_b, m) = header.ok_or(ParseError::MissingHeader)?;
        if edge_set.len() != m {
            return Err(ParseError::EdgeCountMismatch {
                declared: m,
                found: edge_set.len(),
            });
        }
        Ok(Self::finish(n_a, n_b, adj_a, adj_b, edge_set))
    }

    /// Emits the canonical `bkvc` text: header, then edges sorted by `(a, b)`
    /// ascending. `parse_bkvc(to_bkvc(g))` reproduces `g` exactly.
    pub fn to_bkvc(&self) -> String {
        let mut edges: Vec<(u32, u32)> = self.edge_set.iter().copied().collect();
        edges.sort_unstable();
        let mut out = String::new();
        out.push_str(&format!(
            "p bkvc {} {} {}\n",
            self.n_a,
            self.n_b,
            self.edge_count()
        ));
        for (a, b) in edges {
            out.push_str(&format!("e {} {}\n", a + 1, b + 1));
        }
        out
    }
}

fn degree_order(adj: &[Vec<u32>]) -> Vec<u32> {
    let mut order: Vec<u32> = (0..adj.len() as u32).collect();
    order.sort_unstable_by_key(|&s| (std::cmp::Reverse(adj[s as usize].len()), s));
    order
}
