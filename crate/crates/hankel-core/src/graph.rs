//! Closed graphs on `[n]` under a fixed vertex labelling.
//!
//! A graph is closed (for its labelling) when every edge `{i,j}` with
//! `i < k < j` forces `{i,k}` and `{k,j}` to be edges. Equivalently the
//! maximal cliques are intervals `[a_1,b_1], ..., [a_r,b_r]` with
//! `1 = a_1 < ... < a_r`, `b_1 < ... < b_r = n`, and `a_{i+1} <= b_i + 1`;
//! the graph is connected exactly when `a_{i+1} <= b_i` throughout.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from constructing or parsing closed graphs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// The facet list violates the interval-facet invariants.
    MalformedFacets(String),
    /// Witness `i < k < j`: `{i,j}` is an edge but `{i,k}` or `{k,j}` is not.
    NotClosed { i: usize, k: usize, j: usize },
    /// Input outside the supported shape (empty graph, loops, size bounds).
    DegenerateInput(String),
    /// An operation required a connected graph.
    Disconnected,
    /// Positioned failure in the text format.
    Parse { pos: usize, msg: String },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::MalformedFacets(msg) => write!(f, "malformed facets: {}", msg),
            GraphError::NotClosed { i, k, j } => write!(
                f,
                "not closed: edge {{{},{}}} present but the pair through {} is not",
                i, j, k
            ),
            GraphError::DegenerateInput(msg) => write!(f, "degenerate input: {}", msg),
            GraphError::Disconnected => write!(f, "graph is disconnected"),
            GraphError::Parse { pos, msg } => write!(f, "parse error at byte {}: {}", pos, msg),
        }
    }
}

impl core::error::Error for GraphError {}

/// A closed graph, stored by its interval facets (maximal cliques).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClosedGraph {
    n: usize,
    facets: Vec<(usize, usize)>,
}

impl ClosedGraph {
    /// Builds a closed graph from its maximal-clique intervals.
    ///
    /// Requires `1 = a_1`, `b_r = n`, both coordinate sequences strictly
    /// increasing, `a_i <= b_i`, and coverage `a_{i+1} <= b_i + 1`.
    pub fn from_facets(n: usize, facets: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::DegenerateInput(String::from(
                "vertex set must be nonempty",
            )));
        }
        if facets.is_empty() {
            return Err(GraphError::MalformedFacets(String::from("no facets")));
        }
        for &(a, b) in facets {
            if a < 1 || b > n || a > b {
                return Err(GraphError::MalformedFacets(format!(
                    "[{},{}] is not an interval inside [1,{}]",
                    a, b, n
                )));
            }
        }
        if facets[0].0 != 1 {
            return Err(GraphError::MalformedFacets(String::from(
                "first facet must start at 1",
            )));
        }
        if facets[facets.len() - 1].1 != n {
            return Err(GraphError::MalformedFacets(format!(
                "last facet must end at {}",
                n
            )));
        }
        for w in facets.windows(2) {
            let ((a1, b1), (a2, b2)) = (w[0], w[1]);
            if a2 <= a1 || b2 <= b1 {
                return Err(GraphError::MalformedFacets(format!(
                    "facets [{},{}], [{},{}] are not strictly staggered",
                    a1, b1, a2, b2
                )));
            }
            if a2 > b1 + 1 {
                return Err(GraphError::MalformedFacets(format!(
                    "vertex {} is not covered by any facet",
                    b1 + 1
                )));
            }
        }
        Ok(ClosedGraph {
            n,
            facets: facets.to_vec(),
        })
    }

    /// Recognises a closed graph from an explicit edge set, reporting a
    /// violated closedness triple otherwise.
    pub fn from_edges(n: usize, edges: &BTreeSet<(usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::DegenerateInput(String::from(
                "vertex set must be nonempty",
            )));
        }
        for &(i, j) in edges {
            if i < 1 || j > n || i >= j {
                return Err(GraphError::DegenerateInput(format!(
                    "{{{},{}}} is not an edge on [1,{}]",
                    i, j, n
                )));
            }
        }
        for &(i, j) in edges {
            for k in i + 1..j {
                if !edges.contains(&(i, k)) {
                    return Err(GraphError::NotClosed { i, k, j });
                }
                if !edges.contains(&(k, j)) {
                    return Err(GraphError::NotClosed { i, k, j });
                }
            }
        }
        // Closedness makes {a,b} an edge exactly when [a,b] is a clique, so
        // each vertex's furthest right neighbour spans its candidate facet.
        let mut candidates: Vec<(usize, usize)> = Vec::with_capacity(n);
        for a in 1..=n {
            let reach = edges
                .iter()
                .filter(|&&(i, _)| i == a)
                .map(|&(_, j)| j)
                .max()
                .unwrap_or(a);
            candidates.push((a, reach));
        }
        let facets: Vec<(usize, usize)> = candidates
            .iter()
            .filter(|&&(a, b)| {
                !candidates
                    .iter()
                    .any(|&(a2, b2)| (a2, b2) != (a, b) && a2 <= a && b <= b2)
            })
            .copied()
            .collect();
        let g = Self::from_facets(n, &facets)?;
        debug_assert_eq!(&g.edges(), edges, "facet reconstruction changed the edge set");
        Ok(g)
    }

    /// The complete graph on `[n]`.
    pub fn complete(n: usize) -> Self {
        assert!(n >= 1, "empty vertex set");
        ClosedGraph {
            n,
            facets: vec![(1, n)],
        }
    }

    /// The line (path) graph on `[n]`.
    pub fn line(n: usize) -> Self {
        assert!(n >= 1, "empty vertex set");
        if n == 1 {
            return Self::complete(1);
        }
        ClosedGraph {
            n,
            facets: (1..n).map(|a| (a, a + 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Maximal cliques as intervals, in increasing order.
    pub fn facets(&self) -> &[(usize, usize)] {
        &self.facets
    }

    pub fn max_clique_count(&self) -> usize {
        self.facets.len()
    }

    /// The edge set: all pairs inside some facet.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for &(a, b) in &self.facets {
            for i in a..=b {
                for j in i + 1..=b {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.facets.windows(2).all(|w| w[1].0 <= w[0].1)
    }

    pub fn is_complete(&self) -> bool {
        self.facets.len() == 1
    }

    /// A path: every maximal clique is a single edge. (`K2` counts.)
    pub fn is_line(&self) -> bool {
        self.n >= 2 && self.facets.iter().all(|&(a, b)| b == a + 1)
    }

    /// The combined graph on `[m+n-2]` whose edges are
    /// `{i+k-1, j+l-2}` over edge pairs `{i,j}` of `self`, `{k,l}` of `other`.
    ///
    /// Both inputs must be connected with at least 2 vertices. The edge set
    /// is authoritative; the result is recognised through [`from_edges`],
    /// so a closedness failure would surface as an error rather than being
    /// assumed away.
    ///
    /// [`from_edges`]: ClosedGraph::from_edges
    pub fn combine(&self, other: &ClosedGraph) -> Result<ClosedGraph, GraphError> {
        if self.n < 2 || other.n < 2 {
            return Err(GraphError::DegenerateInput(String::from(
                "combine needs at least 2 vertices on each side",
            )));
        }
        if !self.is_connected() || !other.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut edges = BTreeSet::new();
        for &(i, j) in &self.edges() {
            for &(k, l) in &other.edges() {
                edges.insert((i + k - 1, j + l - 2));
            }
        }
        ClosedGraph::from_edges(self.n + other.n - 2, &edges)
    }

    /// All facet-pair clique candidates `([a+c-1, b+d-2], [a,b], [c,d])` for
    /// the combined graph, in facet order. These are always cliques; which of
    /// them are maximal is exactly what the verifier cross-checks.
    pub fn combine_candidates(
        &self,
        other: &ClosedGraph,
    ) -> Vec<((usize, usize), (usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for &(a, b) in &self.facets {
            for &(c, d) in &other.facets {
                out.push(((a + c - 1, b + d - 2), (a, b), (c, d)));
            }
        }
        out
    }

    /// Every connected closed graph on `[n]`, in increasing facet-list order.
    pub fn enumerate_connected_closed(n: usize) -> Vec<ClosedGraph> {
        assert!(n >= 1, "empty vertex set");
        if n == 1 {
            return vec![ClosedGraph::complete(1)];
        }
        let mut out = Vec::new();
        let mut stack: Vec<(usize, usize)> = Vec::new();
        // First facet starts at 1; each later facet [a,b] needs
        // last_a < a <= last_b (connected) and b > last_b.
        fn extend(
            n: usize,
            stack: &mut Vec<(usize, usize)>,
            out: &mut Vec<ClosedGraph>,
        ) {
            let &(last_a, last_b) = stack.last().expect("nonempty stack");
            if last_b == n {
                out.push(ClosedGraph {
                    n,
                    facets: stack.clone(),
                });
                return;
            }
            for a in last_a + 1..=last_b {
                for b in last_b + 1..=n {
                    stack.push((a, b));
                    extend(n, stack, out);
                    stack.pop();
                }
            }
        }
        for b in 2..=n {
            stack.push((1, b));
            extend(n, &mut stack, &mut out);
            stack.pop();
        }
        out.sort();
        out
    }

    /// Parses `K<n>`, `L<n>`, or an interval list in either text form:
    /// `1-3,2-5` or `[1,3],[2,5]`.
    ///
    /// Interval lists must describe the facets of a closed graph on
    /// `[max b]`; the usual facet invariants apply.
    pub fn parse(input: &str) -> Result<Self, GraphError> {
        let s = input.trim();
        let offset = input.len() - input.trim_start().len();
        if s.is_empty() {
            return Err(GraphError::Parse {
                pos: 0,
                msg: String::from("empty graph spec"),
            });
        }
        if let Some(rest) = s.strip_prefix('K').or_else(|| s.strip_prefix('L')) {
            let n: usize = rest.trim().parse().map_err(|_| GraphError::Parse {
                pos: offset + 1,
                msg: format!("expected an integer after '{}'", &s[..1]),
            })?;
            if n == 0 {
                return Err(GraphError::Parse {
                    pos: offset + 1,
                    msg: String::from("vertex count must be positive"),
                });
            }
            return Ok(if s.starts_with('K') {
                ClosedGraph::complete(n)
            } else {
                ClosedGraph::line(n)
            });
        }
        let mut facets = Vec::new();
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        loop {
            let err = |pos: usize, msg: &str| GraphError::Parse {
                pos: offset + pos,
                msg: String::from(msg),
            };
            pos = skip_ws(bytes, pos);
            let interval = if bytes.get(pos) == Some(&b'[') {
                pos += 1;
                let (a, next) =
                    parse_usize(bytes, pos).ok_or_else(|| err(pos, "expected an integer"))?;
                pos = skip_ws(bytes, next);
                if bytes.get(pos) != Some(&b',') {
                    return Err(err(pos, "expected ','"));
                }
                pos = skip_ws(bytes, pos + 1);
                let (b, next) =
                    parse_usize(bytes, pos).ok_or_else(|| err(pos, "expected an integer"))?;
                pos = skip_ws(bytes, next);
                if bytes.get(pos) != Some(&b']') {
                    return Err(err(pos, "expected ']'"));
                }
                pos += 1;
                (a, b)
            } else {
                let (a, next) =
                    parse_usize(bytes, pos).ok_or_else(|| err(pos, "expected an interval"))?;
                pos = skip_ws(bytes, next);
                if bytes.get(pos) != Some(&b'-') {
                    return Err(err(pos, "expected '-'"));
                }
                let (b, next) = parse_usize(bytes, pos + 1)
                    .ok_or_else(|| err(pos + 1, "expected an integer"))?;
                pos = next;
                (a, b)
            };
            pos = skip_ws(bytes, pos);
            facets.push(interval);
            match bytes.get(pos) {
                None => break,
                Some(b',') => {
                    pos = skip_ws(bytes, pos + 1);
                }
                Some(_) => return Err(err(pos, "expected ',' or end of input")),
            }
        }
        let n = facets.iter().map(|&(_, b)| b).max().unwrap_or(0);
        ClosedGraph::from_facets(n, &facets).map_err(|e| match e {
            GraphError::Parse { .. } => e,
            other => GraphError::Parse {
                pos: offset,
                msg: format!("{}", other),
            },
        })
    }
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while bytes.get(pos).map_or(false, |b| b.is_ascii_whitespace()) {
        pos += 1;
    }
    pos
}

fn parse_usize(bytes: &[u8], start: usize) -> Option<(usize, usize)> {
    let mut pos = skip_ws(bytes, start);
    let begin = pos;
    while bytes.get(pos).map_or(false, |b| b.is_ascii_digit()) {
        pos += 1;
    }
    if pos == begin {
        return None;
    }
    core::str::from_utf8(&bytes[begin..pos])
        .ok()?
        .parse()
        .ok()
        .map(|v| (v, pos))
}

impl fmt::Display for ClosedGraph {
    /// Canonical text form: `K<n>` for complete, `L<n>` for lines, otherwise
    /// the facet list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_complete() {
            return write!(f, "K{}", self.n);
        }
        if self.is_line() {
            return write!(f, "L{}", self.n);
        }
        let mut first = true;
        for &(a, b) in &self.facets {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}-{}", a, b)?;
        }
        Ok(())
    }
}

/// Maximal cliques of an arbitrary graph by Bron-Kerbosch, used as an
/// independent oracle against the interval-facet bookkeeping. Vertices are
/// `1..=n` (n <= 64); cliques come back sorted.
pub fn maximal_cliques_brute(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    assert!(n <= 64, "oracle supports at most 64 vertices");
    let mut adj = vec![0u64; n + 1];
    for &(i, j) in edges {
        assert!(i >= 1 && i < j && j <= n, "edge out of range");
        adj[i] |= 1 << (j - 1);
        adj[j] |= 1 << (i - 1);
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let all: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    fn bk(
        adj: &[u64],
        r: u64,
        mut p: u64,
        mut x: u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p == 0 && x == 0 {
            let mut clique: Vec<usize> = (0..64).filter(|b| r & (1 << b) != 0).map(|b| b + 1).collect();
            clique.sort_unstable();
            out.push(clique);
            return;
        }
        while p != 0 {
            let b = p.trailing_zeros() as usize;
            let v = 1u64 << b;
            bk(adj, r | v, p & adj[b + 1], x & adj[b + 1], out);
            p &= !v;
            x |= v;
        }
    }
    bk(&adj, 0, all, 0, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn g(spec: &str) -> ClosedGraph {
        ClosedGraph::parse(spec).unwrap()
    }

    #[test]
    fn facet_validation() {
        assert!(ClosedGraph::from_facets(4, &[(1, 2), (2, 4)]).is_ok());
        // Gap at vertex 3.
        assert!(matches!(
            ClosedGraph::from_facets(5, &[(1, 2), (4, 5)]),
            Err(GraphError::MalformedFacets(_))
        ));
        // Nested facets are not maximal cliques.
        assert!(matches!(
            ClosedGraph::from_facets(4, &[(1, 4), (2, 3)]),
            Err(GraphError::MalformedFacets(_))
        ));
        assert!(matches!(
            ClosedGraph::from_facets(4, &[(2, 4)]),
            Err(GraphError::MalformedFacets(_))
        ));
        // Disconnected but valid: [1,2], [3,4].
        let h = ClosedGraph::from_facets(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(!h.is_connected());
    }

    #[test]
    fn edges_round_trip_through_facets() {
        for spec in ["K4", "L5", "[1,3],[2,5]", "[1,3],[2,4],[3,5]", "[1,2],[2,5]"] {
            let graph = g(spec);
            let back = ClosedGraph::from_edges(graph.n(), &graph.edges()).unwrap();
            assert_eq!(back, graph, "{spec}");
        }
    }

    #[test]
    fn closedness_witness_on_a_cycle() {
        // The 4-cycle is not closed: {1,4} needs {2,4} through k=2.
        let edges: BTreeSet<(usize, usize)> =
            [(1, 2), (2, 3), (3, 4), (1, 4)].into_iter().collect();
        match ClosedGraph::from_edges(4, &edges) {
            Err(GraphError::NotClosed { i, k, j }) => {
                assert_eq!((i, j), (1, 4));
                assert!(k == 2 || k == 3);
            }
            other => panic!("expected NotClosed, got {:?}", other),
        }
    }

    #[test]
    fn combine_small_cases() {
        assert_eq!(g("K2").combine(&g("K3")).unwrap(), g("K3"));
        assert_eq!(g("K2").combine(&g("K7")).unwrap(), g("K7"));
        assert_eq!(g("L3").combine(&g("L3")).unwrap(), g("L4"));
        assert_eq!(g("K3").combine(&g("K3")).unwrap(), g("K4"));
        // Mixed pair: K2 acts as the identity up to reindexing.
        assert_eq!(g("[1,3],[2,4]").combine(&g("K2")).unwrap(), g("[1,3],[2,4]"));
    }

    #[test]
    fn combine_overlapping_interval_pair() {
        // Facet-pair candidates [3,6] and [2,5] are cliques but not maximal.
        let g1 = g("[1,3],[2,4],[3,5]");
        let g2 = g("[1,3],[2,5]");
        let c = g1.combine(&g2).unwrap();
        assert_eq!(c.n(), 8);
        assert_eq!(c.facets(), &[(1, 4), (2, 6), (3, 7), (4, 8)]);
    }

    #[test]
    fn combine_rejects_degenerate_inputs() {
        assert!(matches!(
            ClosedGraph::complete(1).combine(&g("K3")),
            Err(GraphError::DegenerateInput(_))
        ));
        let disconnected = ClosedGraph::from_facets(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            disconnected.combine(&g("K3")),
            Err(GraphError::Disconnected)
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(ClosedGraph::enumerate_connected_closed(2).len(), 1);
        assert_eq!(ClosedGraph::enumerate_connected_closed(3).len(), 2);
        assert_eq!(ClosedGraph::enumerate_connected_closed(4).len(), 5);
        for graph in ClosedGraph::enumerate_connected_closed(5) {
            assert!(graph.is_connected());
            let back = ClosedGraph::from_edges(graph.n(), &graph.edges()).unwrap();
            assert_eq!(back, graph);
        }
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let graphs = ClosedGraph::enumerate_connected_closed(6);
        for w in graphs.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(g("K5").to_string(), "K5");
        assert_eq!(g("L4").to_string(), "L4");
        assert_eq!(g("L2").to_string(), "K2");
        assert_eq!(g(" [1,3] , [2,5] ").to_string(), "1-3,2-5");
        assert_eq!(g("1-3,2-5"), g("[1,3],[2,5]"));
        assert_eq!(g("[1,2],[2,3]").to_string(), "L3");
        assert!(ClosedGraph::parse("").is_err());
        assert!(ClosedGraph::parse("K0").is_err());
        assert!(ClosedGraph::parse("M3").is_err());
        assert!(ClosedGraph::parse("[1,3],[2,").is_err());
        assert!(ClosedGraph::parse("1-3,2-").is_err());
        assert!(ClosedGraph::parse("3-5,1-3").is_err());
        // Facet problems surface as parse errors with the reason attached.
        assert!(matches!(
            ClosedGraph::parse("[1,3],[1,4]"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn brute_force_cliques_agree_with_facets() {
        for spec in ["K4", "L5", "[1,3],[2,5]", "[1,3],[2,4],[3,5]", "[1,4],[2,6],[3,7],[4,8]"] {
            let graph = g(spec);
            let cliques = maximal_cliques_brute(graph.n(), &graph.edges());
            let expected: Vec<Vec<usize>> = graph
                .facets()
                .iter()
                .map(|&(a, b)| (a..=b).collect())
                .collect();
            assert_eq!(cliques, expected, "{spec}");
        }
    }

    #[test]
    fn brute_force_cliques_on_a_non_interval_graph() {
        // 4-cycle: maximal cliques are its four edges.
        let edges: BTreeSet<(usize, usize)> =
            [(1, 2), (2, 3), (3, 4), (1, 4)].into_iter().collect();
        let cliques = maximal_cliques_brute(4, &edges);
        assert_eq!(
            cliques,
            vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]
        );
    }
}
