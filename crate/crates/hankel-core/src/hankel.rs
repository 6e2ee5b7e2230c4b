//! Generators attached to graph pairs: the 2-minor `g_{e,f}` of the generic
//! Hankel matrix picked out by an edge pair, the scroll quadric `h_{p,q}`
//! picked out by a combined-graph edge, the two ideals they generate, and the
//! telescoping decomposition tying them together.
//!
//! Conventions, in `N = m + n - 1` variables:
//!
//! * edges `e = {i,j}` of a graph on `[m]` and `f = {k,l}` of one on `[n]`
//!   give the minor `g = x_{i+k-1} x_{j+l-1} - x_{i+l-1} x_{j+k-1}`
//!   (rows `i,j`, columns `k,l` of the Hankel matrix `(x_{r+c-1})`);
//! * an edge `{p,q}` of a graph on `[N-1]` gives the scroll quadric
//!   `h = x_p x_{q+1} - x_{p+1} x_q`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;
use crate::graph::ClosedGraph;
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HankelError {
    IndexOutOfRange(String),
    DegenerateInput(String),
    Disconnected,
}

impl fmt::Display for HankelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HankelError::IndexOutOfRange(msg) => write!(f, "index out of range: {}", msg),
            HankelError::DegenerateInput(msg) => write!(f, "degenerate input: {}", msg),
            HankelError::Disconnected => write!(f, "graph is disconnected"),
        }
    }
}

impl core::error::Error for HankelError {}

/// A 2x2 minor of the generic `m x n` Hankel matrix, selected by row pair
/// `e = {i,j}` and column pair `f = {k,l}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MinorSpec {
    m: usize,
    n: usize,
    e: (usize, usize),
    f: (usize, usize),
}

impl MinorSpec {
    pub fn new(
        m: usize,
        n: usize,
        e: (usize, usize),
        f: (usize, usize),
    ) -> Result<Self, HankelError> {
        if m < 2 || n < 2 {
            return Err(HankelError::DegenerateInput(format!(
                "need a matrix with at least 2 rows and columns, got {}x{}",
                m, n
            )));
        }
        if !(1 <= e.0 && e.0 < e.1 && e.1 <= m) {
            return Err(HankelError::IndexOutOfRange(format!(
                "row pair {{{},{}}} is not an increasing pair in [1,{}]",
                e.0, e.1, m
            )));
        }
        if !(1 <= f.0 && f.0 < f.1 && f.1 <= n) {
            return Err(HankelError::IndexOutOfRange(format!(
                "column pair {{{},{}}} is not an increasing pair in [1,{}]",
                f.0, f.1, n
            )));
        }
        Ok(MinorSpec { m, n, e, f })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> (usize, usize) {
        self.e
    }

    pub fn f(&self) -> (usize, usize) {
        self.f
    }

    /// Number of variables of the ambient ring.
    pub fn num_vars(&self) -> usize {
        self.m + self.n - 1
    }

    /// The combined-graph edge `{i+k-1, j+l-2}` this minor sits over.
    pub fn combined_edge(&self) -> ScrollEdge {
        let ((i, j), (k, l)) = (self.e, self.f);
        ScrollEdge {
            p: i + k - 1,
            q: j + l - 2,
        }
    }
}

/// An edge `{p,q}` (p < q) of a graph on `[N-1]`, standing for the scroll
/// quadric `x_p x_{q+1} - x_{p+1} x_q` in `N` variables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ScrollEdge {
    pub p: usize,
    pub q: usize,
}

impl ScrollEdge {
    /// Realizes the quadric in `ring`; needs `q + 1 <= num_vars`.
    pub fn polynomial<F: Field>(&self, ring: &PolyRing<F>) -> Polynomial<F> {
        assert!(self.p >= 1 && self.p < self.q, "not an edge");
        assert!(self.q + 1 <= ring.num_vars(), "edge outside the ring");
        let term = |a: usize, b: usize, sign: i64| {
            (
                Monomial::var(ring.num_vars(), a).mul(&Monomial::var(ring.num_vars(), b)),
                ring.field().from_int(sign),
            )
        };
        ring.from_terms(alloc::vec![
            term(self.p, self.q + 1, 1),
            term(self.p + 1, self.q, -1),
        ])
    }
}

impl fmt::Display for ScrollEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

/// The minor `g = x_{i+k-1} x_{j+l-1} - x_{i+l-1} x_{j+k-1}` as an element of
/// `ring`, which must have `m + n - 1` variables.
pub fn hankel_minor<F: Field>(ring: &PolyRing<F>, spec: &MinorSpec) -> Polynomial<F> {
    assert_eq!(ring.num_vars(), spec.num_vars(), "ring size mismatch");
    let ((i, j), (k, l)) = (spec.e, spec.f);
    let term = |a: usize, b: usize, sign: i64| {
        (
            Monomial::var(ring.num_vars(), a).mul(&Monomial::var(ring.num_vars(), b)),
            ring.field().from_int(sign),
        )
    };
    ring.from_terms(alloc::vec![
        term(i + k - 1, j + l - 1, 1),
        term(i + l - 1, j + k - 1, -1),
    ])
}

/// The ideal generated by the minors `g_{e,f}` over all edge pairs, in
/// `m + n - 1` variables. Duplicate minors are dropped, keeping the first
/// occurrence in (edge of `g1`, edge of `g2`) lexicographic order.
pub fn pair_ideal<F: Field>(
    field: F,
    g1: &ClosedGraph,
    g2: &ClosedGraph,
) -> Result<Ideal<F>, HankelError> {
    let (m, n) = (g1.n(), g2.n());
    if m < 2 || n < 2 {
        return Err(HankelError::DegenerateInput(String::from(
            "both graphs need at least 2 vertices",
        )));
    }
    if !g1.is_connected() || !g2.is_connected() {
        return Err(HankelError::Disconnected);
    }
    let ring = PolyRing::new(field, m + n - 1);
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for &e in &g1.edges() {
        for &f in &g2.edges() {
            let spec = MinorSpec::new(m, n, e, f).expect("edges are valid index pairs");
            let g = hankel_minor(&ring, &spec);
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
    }
    Ok(Ideal::new(ring, gens))
}

/// The ideal generated by the scroll quadrics of the edges of `g`, living in
/// `g.n() + 1` variables. An edgeless graph yields the zero ideal.
pub fn scroll_ideal<F: Field>(field: F, g: &ClosedGraph) -> Ideal<F> {
    let ring = PolyRing::new(field, g.n() + 1);
    let gens: Vec<Polynomial<F>> = g
        .edges()
        .iter()
        .map(|&(p, q)| ScrollEdge { p, q }.polynomial(&ring))
        .collect();
    Ideal::new(ring, gens)
}

/// Writes the minor `g_{e,f}` as a sum of scroll quadrics:
/// `g = sum of h over the returned edges`. At each step the edge
/// `{i+k-1, j+l-2}` is emitted and both index gaps shrink by one (`i := i+1`,
/// `l := l-1`), so the list has length `min(j-i, l-k)` and every emitted edge
/// comes from an edge pair of the original graphs whenever `e` and `f` are
/// edges (closedness supplies `{i+s, j}` and `{k, l-s}`).
pub fn telescoping_decomposition(spec: &MinorSpec) -> Vec<ScrollEdge> {
    let ((mut i, j), (k, mut l)) = (spec.e, spec.f);
    let mut out = Vec::new();
    loop {
        out.push(ScrollEdge {
            p: i + k - 1,
            q: j + l - 2,
        });
        if j - i == 1 || l - k == 1 {
            return out;
        }
        i += 1;
        l -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::groebner::ideal_equal;
    use crate::monomial::MonomialOrder;
    use alloc::string::ToString;

    fn spec(m: usize, n: usize, e: (usize, usize), f: (usize, usize)) -> MinorSpec {
        MinorSpec::new(m, n, e, f).unwrap()
    }

    #[test]
    fn minor_formula_spot_checks() {
        let r = PolyRing::new(Rationals, 5);
        let render = |s: &MinorSpec| {
            r.canonical_string(&hankel_minor(&r, s), MonomialOrder::DegRevLex)
        };
        // e={1,3}, f={1,3} in a 3x3 Hankel matrix: corner minor.
        assert_eq!(render(&spec(3, 3, (1, 3), (1, 3))), "x3^2 - x1*x5");
        // Adjacent rows and columns give a scroll quadric directly.
        assert_eq!(render(&spec(3, 3, (1, 2), (1, 2))), "x2^2 - x1*x3");
        assert_eq!(render(&spec(3, 3, (2, 3), (2, 3))), "x4^2 - x3*x5");
    }

    #[test]
    fn minor_spec_validation() {
        assert!(matches!(
            MinorSpec::new(1, 3, (1, 1), (1, 2)),
            Err(HankelError::DegenerateInput(_))
        ));
        assert!(matches!(
            MinorSpec::new(3, 3, (2, 2), (1, 2)),
            Err(HankelError::IndexOutOfRange(_))
        ));
        assert!(matches!(
            MinorSpec::new(3, 3, (1, 2), (0, 2)),
            Err(HankelError::IndexOutOfRange(_))
        ));
        assert!(matches!(
            MinorSpec::new(3, 3, (1, 4), (1, 2)),
            Err(HankelError::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn scroll_edge_polynomials() {
        let r = PolyRing::new(Rationals, 5);
        let h = ScrollEdge { p: 2, q: 3 }.polynomial(&r);
        assert_eq!(
            r.canonical_string(&h, MonomialOrder::DegRevLex),
            "x3^2 - x2*x4"
        );
        assert_eq!(ScrollEdge { p: 1, q: 4 }.to_string(), "{1,4}");
    }

    #[test]
    fn pair_ideal_of_smallest_pair_matches_scroll_generators() {
        // (K2, K3): the minors are exactly the scroll quadrics of K3 = the
        // combined graph, generator for generator.
        let g1 = ClosedGraph::complete(2);
        let g2 = ClosedGraph::complete(3);
        let i = pair_ideal(Rationals, &g1, &g2).unwrap();
        let combined = g1.combine(&g2).unwrap();
        let j = scroll_ideal(Rationals, &combined);
        assert_eq!(i.ring().num_vars(), 4);
        assert_eq!(i.generators().len(), 3);
        assert_eq!(j.generators().len(), 3);
        assert!(ideal_equal(&i, &j).unwrap());
    }

    #[test]
    fn pair_ideal_deduplicates_minors() {
        // (K3, K3): 9 edge pairs but duplicates collapse.
        let g = ClosedGraph::complete(3);
        let i = pair_ideal(Rationals, &g, &g).unwrap();
        assert!(i.generators().len() < 9);
        // Every minor is still in the ideal.
        let r = i.ring().clone();
        for e in [(1, 2), (1, 3), (2, 3)] {
            for f in [(1, 2), (1, 3), (2, 3)] {
                let g = hankel_minor(&r, &spec(3, 3, e, f));
                assert!(i.contains(&g));
            }
        }
    }

    #[test]
    fn pair_ideal_rejects_bad_graphs() {
        let k1 = ClosedGraph::complete(1);
        let k3 = ClosedGraph::complete(3);
        assert!(matches!(
            pair_ideal(Rationals, &k1, &k3),
            Err(HankelError::DegenerateInput(_))
        ));
        let disconnected = ClosedGraph::from_facets(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            pair_ideal(Rationals, &disconnected, &k3),
            Err(HankelError::Disconnected)
        ));
    }

    #[test]
    fn telescoping_frozen_examples() {
        // Symmetric gaps: two steps.
        let s = spec(3, 3, (1, 3), (1, 3));
        let edges = telescoping_decomposition(&s);
        assert_eq!(edges, alloc::vec![ScrollEdge { p: 1, q: 4 }, ScrollEdge { p: 2, q: 3 }]);
        // Asymmetric gaps: length is the smaller gap.
        let s = spec(3, 3, (1, 2), (1, 3));
        assert_eq!(
            telescoping_decomposition(&s),
            alloc::vec![ScrollEdge { p: 1, q: 3 }]
        );
    }

    #[test]
    fn telescoping_sums_to_the_minor() {
        for m in 2..=5usize {
            for n in 2..=(10 - m) {
                let ring = PolyRing::new(Rationals, m + n - 1);
                for i in 1..=m {
                    for j in i + 1..=m {
                        for k in 1..=n {
                            for l in k + 1..=n {
                                let s = spec(m, n, (i, j), (k, l));
                                let edges = telescoping_decomposition(&s);
                                assert_eq!(
                                    edges.len(),
                                    (j - i).min(l - k),
                                    "length for {:?}",
                                    s
                                );
                                let mut sum = ring.zero();
                                for edge in &edges {
                                    sum = ring.add(&sum, &edge.polynomial(&ring));
                                }
                                assert_eq!(sum, hankel_minor(&ring, &s), "sum for {:?}", s);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn telescoping_edges_lie_in_the_combined_graph() {
        let g1 = ClosedGraph::parse("[1,3],[2,4]").unwrap();
        let g2 = ClosedGraph::parse("[1,2],[2,4]").unwrap();
        let combined = g1.combine(&g2).unwrap();
        let combined_edges = combined.edges();
        for &e in &g1.edges() {
            for &f in &g2.edges() {
                let s = spec(g1.n(), g2.n(), e, f);
                for edge in telescoping_decomposition(&s) {
                    assert!(
                        combined_edges.contains(&(edge.p, edge.q)),
                        "edge {} from e={:?}, f={:?}",
                        edge,
                        e,
                        f
                    );
                }
            }
        }
    }
}
