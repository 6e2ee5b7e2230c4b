//! Graded Betti numbers of `S/I` for a homogeneous ideal, computed as Koszul
//! homology: `beta_{i,j} = dim_k H_i(K(x_1..x_N) tensor S/I)_j`. Chains in
//! internal degree `j` have bases `e_T tensor m` with `|T| = i` and `m` a
//! standard monomial of degree `j - i`, so everything reduces to exact ranks
//! of sparse matrices whose entries come from normal forms of `x_t * m`.
//!
//! The table is complete: entries vanish for `j` beyond the degree of the lcm
//! of the minimal generators of the initial ideal (the Taylor resolution of
//! `S/in(I)` bounds `beta_{i,j}(S/I)` from above), so computing up to that
//! bound captures the whole resolution.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;
use crate::groebner::{initial_ideal, Ideal, MonomialIdeal};
use crate::linalg::SparseMatrix;
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ResolutionError {
    /// The ring has more variables than the configured cap.
    CapExceeded { num_vars: usize, cap: usize },
    /// Some generator is not homogeneous.
    NotHomogeneous,
    ZeroIdeal,
    UnitIdeal,
}

impl fmt::Display for ResolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolutionError::CapExceeded { num_vars, cap } => write!(
                f,
                "Betti computation over {} variables exceeds the cap of {}",
                num_vars, cap
            ),
            ResolutionError::NotHomogeneous => write!(f, "the ideal is not homogeneous"),
            ResolutionError::ZeroIdeal => write!(f, "the zero ideal has no Betti table here"),
            ResolutionError::UnitIdeal => write!(f, "the unit ideal has no Betti table here"),
        }
    }
}

impl core::error::Error for ResolutionError {}

/// The graded Betti numbers of `S/I`, with only nonzero entries stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    num_vars: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Nonzero entries `(i, j) -> beta_{i,j}`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn betti(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity: max `j - i` over nonzero entries.
    pub fn regularity(&self) -> u32 {
        self.entries
            .keys()
            .map(|&(i, j)| (j - i) as u32)
            .max()
            .unwrap_or(0)
    }

    /// Projective dimension: max homological degree with a nonzero entry.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Depth via the Auslander-Buchsbaum formula over the polynomial ring.
    pub fn depth(&self) -> usize {
        self.num_vars - self.proj_dim()
    }

    pub fn is_cohen_macaulay(&self, dim: usize) -> bool {
        self.depth() == dim
    }

    /// True when the resolution of the ideal is linear: writing `d` for the
    /// generator degree, every nonzero `beta_{i,j}` with `i >= 1` has
    /// `j = i + d - 1`.
    pub fn has_linear_resolution(&self) -> bool {
        let Some(d) = self
            .entries
            .keys()
            .filter(|&&(i, _)| i == 1)
            .map(|&(_, j)| j)
            .min()
        else {
            // No generators at all: the zero ideal is vacuously linear.
            return true;
        };
        self.entries
            .keys()
            .filter(|&&(i, _)| i >= 1)
            .all(|&(i, j)| j == i + d - 1)
    }
}

/// All monomials of degree `d` outside the monomial ideal, in increasing
/// lexicographic order of exponent vectors. This is a basis of `(S/I)_d`
/// when the input is `in(I)`.
pub fn standard_monomials(init: &MonomialIdeal, d: u32) -> Vec<Monomial> {
    let n = init.num_vars();
    // Generators grouped by their last occurring variable let the search
    // prune as soon as a prefix is already divisible.
    let mut by_last_var: Vec<Vec<&Monomial>> = vec![Vec::new(); n];
    for g in init.minimal_generators() {
        let last = g.support().last().expect("minimal generators are nonunit") - 1;
        by_last_var[last].push(g);
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn prefix_divisible(gens: &[&Monomial], var: usize, exps: &[u32]) -> bool {
        gens.iter().any(|g| {
            g.exps()[..=var]
                .iter()
                .zip(exps[..=var].iter())
                .all(|(ge, pe)| ge <= pe)
        })
    }
    fn rec(
        by_last_var: &[Vec<&Monomial>],
        remaining: u32,
        var: usize,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        let n = exps.len();
        if var == n - 1 {
            exps[var] = remaining;
            if !prefix_divisible(&by_last_var[var], var, exps) {
                out.push(Monomial::from_exps(exps.clone()));
            }
            exps[var] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[var] = e;
            // A divisible prefix stays divisible under any extension.
            if !prefix_divisible(&by_last_var[var], var, exps) {
                rec(by_last_var, remaining - e, var + 1, exps, out);
            }
        }
        exps[var] = 0;
    }
    rec(&by_last_var, d, 0, &mut exps, &mut out);
    out
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// All size-`k` subsets of `0..n`, each sorted, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(binom(n, k));
    let mut cur: Vec<u8> = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v as u8);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Computes the full graded Betti table of `S/I` for a homogeneous nonzero
/// proper ideal `I`, refusing rings larger than `cap` variables.
pub fn graded_betti<F: Field>(
    ideal: &Ideal<F>,
    cap: usize,
) -> Result<BettiTable, ResolutionError> {
    let ring = ideal.ring();
    let field = ring.field();
    let n = ring.num_vars();
    if n > cap {
        return Err(ResolutionError::CapExceeded { num_vars: n, cap });
    }
    if ideal.is_zero() {
        return Err(ResolutionError::ZeroIdeal);
    }
    if ideal
        .generators()
        .iter()
        .any(|g| g.homogeneous_degree().is_none())
    {
        return Err(ResolutionError::NotHomogeneous);
    }
    let order = MonomialOrder::DegRevLex;
    let gb = ideal.groebner_basis(order);
    if gb.is_unit() {
        return Err(ResolutionError::UnitIdeal);
    }
    let init = initial_ideal(ring, &gb);

    // Taylor bound: all nonzero entries have internal degree at most the
    // degree of the lcm of the minimal generators of in(I).
    let bound = init
        .minimal_generators()
        .iter()
        .fold(Monomial::one(n), |acc, g| acc.lcm(g))
        .degree() as usize;

    let std_basis: Vec<Vec<Monomial>> = (0..=bound)
        .map(|d| standard_monomials(&init, d as u32))
        .collect();
    let std_index: Vec<BTreeMap<&Monomial, usize>> = std_basis
        .iter()
        .map(|ms| ms.iter().enumerate().map(|(i, m)| (m, i)).collect())
        .collect();

    // mult[d][mi][v]: coordinates of x_{v+1} * std_basis[d][mi] in the
    // standard basis of degree d + 1.
    let one_elem = field.one();
    let mut mult: Vec<Vec<Vec<Vec<(usize, F::Elem)>>>> = Vec::with_capacity(bound);
    for d in 0..bound {
        let mut per_mono = Vec::with_capacity(std_basis[d].len());
        for m in &std_basis[d] {
            let mut per_var = Vec::with_capacity(n);
            for v in 1..=n {
                let prod = m.mul(&Monomial::var(n, v));
                let expansion: Vec<(usize, F::Elem)> = if !init.contains(&prod) {
                    vec![(std_index[d + 1][&prod], one_elem.clone())]
                } else {
                    let nf = ring.normal_form(
                        &ring.monomial(prod, one_elem.clone()),
                        gb.elements(),
                        order,
                    );
                    nf.terms()
                        .iter()
                        .map(|(mm, c)| (std_index[d + 1][mm], c.clone()))
                        .collect()
                };
                per_var.push(expansion);
            }
            per_mono.push(per_var);
        }
        mult.push(per_mono);
    }

    let subsets: Vec<Vec<Vec<u8>>> = (0..=n).map(|k| combinations(n, k)).collect();
    let subset_index: Vec<BTreeMap<&[u8], usize>> = subsets
        .iter()
        .map(|ss| {
            ss.iter()
                .enumerate()
                .map(|(i, s)| (s.as_slice(), i))
                .collect()
        })
        .collect();

    // ranks[i][j]: rank of the Koszul differential K_i -> K_{i-1} in
    // internal degree j.
    let mut ranks = vec![vec![0usize; bound + 1]; n + 2];
    for i in 1..=n {
        for j in i..=bound {
            let deg = j - i;
            let dom_t = &subsets[i];
            let dom_m = &std_basis[deg];
            if dom_t.is_empty() || dom_m.is_empty() {
                continue;
            }
            let cod_stride = std_basis[deg + 1].len();
            let nrows = subsets[i - 1].len() * cod_stride;
            let mut cols: Vec<Vec<(usize, F::Elem)>> =
                Vec::with_capacity(dom_t.len() * dom_m.len());
            for t_set in dom_t {
                for (mi, _) in dom_m.iter().enumerate() {
                    let mut col: Vec<(usize, F::Elem)> = Vec::new();
                    for (s, &v) in t_set.iter().enumerate() {
                        let mut t_minus = t_set.clone();
                        t_minus.remove(s);
                        let t_idx = subset_index[i - 1][t_minus.as_slice()];
                        for (target, coeff) in &mult[deg][mi][v as usize] {
                            let value = if s % 2 == 0 {
                                coeff.clone()
                            } else {
                                field.neg(coeff)
                            };
                            col.push((t_idx * cod_stride + target, value));
                        }
                    }
                    cols.push(col);
                }
            }
            let mat = SparseMatrix::from_columns(nrows, cols.len(), cols);
            ranks[i][j] = field.matrix_rank(mat);
        }
    }

    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for i in 0..=n {
        for j in i..=bound {
            let deg = j - i;
            let c = binom(n, i) * std_basis[deg].len();
            if c == 0 {
                continue;
            }
            let r_here = if i == 0 { 0 } else { ranks[i][j] };
            let r_next = if i < n { ranks[i + 1][j] } else { 0 };
            assert!(
                c >= r_here + r_next,
                "rank bookkeeping broke at i={}, j={}",
                i,
                j
            );
            let b = c - r_here - r_next;
            if b > 0 {
                entries.insert((i, j), b as u64);
            }
        }
    }

    // Euler characteristic check per internal degree: the alternating sum of
    // chain dimensions must match the alternating sum of homology dimensions.
    for j in 0..=bound {
        let mut chain: i64 = 0;
        let mut homology: i64 = 0;
        for i in 0..=n.min(j) {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            if j - i <= bound {
                chain += sign * (binom(n, i) * std_basis[j - i].len()) as i64;
            }
            homology += sign * entries.get(&(i, j)).copied().unwrap_or(0) as i64;
        }
        assert_eq!(chain, homology, "Euler check failed in degree {}", j);
    }

    Ok(BettiTable {
        num_vars: n,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::groebner::ideal_equal;
    use crate::poly::PolyRing;

    fn q_ideal(n: usize, gens: &[&str]) -> Ideal<Rationals> {
        let r = PolyRing::new(Rationals, n);
        Ideal::new(
            r.clone(),
            gens.iter().map(|s| r.parse(s).unwrap()).collect(),
        )
    }

    #[test]
    fn standard_monomial_counts_for_the_twisted_cubic() {
        let i = q_ideal(4, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
        let gb = i.groebner_basis(MonomialOrder::DegRevLex);
        let init = initial_ideal(i.ring(), &gb);
        let counts: Vec<usize> = (0..4)
            .map(|d| standard_monomials(&init, d).len())
            .collect();
        assert_eq!(counts, vec![1, 4, 7, 10]);
        for d in 0..4 {
            for m in standard_monomials(&init, d) {
                assert!(!init.contains(&m));
                assert_eq!(m.degree(), d);
            }
        }
    }

    #[test]
    fn betti_of_a_hypersurface() {
        let i = q_ideal(3, &["x1*x2 - x3^2"]);
        let t = graded_betti(&i, 9).unwrap();
        assert_eq!(t.betti(0, 0), 1);
        assert_eq!(t.betti(1, 2), 1);
        assert_eq!(t.entries().len(), 2);
        assert_eq!(t.proj_dim(), 1);
        assert_eq!(t.regularity(), 1);
        assert_eq!(t.depth(), 2);
    }

    #[test]
    fn betti_of_the_twisted_cubic() {
        // Classical: 0 <- S/I <- S <- S(-2)^3 <- S(-3)^2 <- 0.
        let i = q_ideal(4, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
        let t = graded_betti(&i, 9).unwrap();
        assert_eq!(t.betti(0, 0), 1);
        assert_eq!(t.betti(1, 2), 3);
        assert_eq!(t.betti(2, 3), 2);
        assert_eq!(t.entries().len(), 3);
        assert_eq!(t.regularity(), 1);
        assert_eq!(t.proj_dim(), 2);
        assert_eq!(t.depth(), 2);
        assert!(t.is_cohen_macaulay(2));
        assert!(t.has_linear_resolution());
    }

    #[test]
    fn betti_of_a_complete_intersection_of_two_quadrics() {
        // x2^2 - x1*x3 and x3^2 - x2*x4: Koszul resolution, beta_{2,4} = 1.
        let i = q_ideal(4, &["x2^2 - x1*x3", "x3^2 - x2*x4"]);
        let t = graded_betti(&i, 9).unwrap();
        assert_eq!(t.betti(0, 0), 1);
        assert_eq!(t.betti(1, 2), 2);
        assert_eq!(t.betti(2, 4), 1);
        assert_eq!(t.entries().len(), 3);
        assert_eq!(t.regularity(), 2);
        assert!(!t.has_linear_resolution());
        assert!(t.is_cohen_macaulay(2));
    }

    #[test]
    fn betti_of_a_non_cohen_macaulay_ideal() {
        // (x1*x2, x1*x3): pd 2, depth 1, dim 2.
        let i = q_ideal(3, &["x1*x2", "x1*x3"]);
        let t = graded_betti(&i, 9).unwrap();
        assert_eq!(t.betti(1, 2), 2);
        assert_eq!(t.betti(2, 3), 1);
        assert_eq!(t.depth(), 1);
        assert!(!t.is_cohen_macaulay(2));
        assert!(t.has_linear_resolution());
    }

    #[test]
    fn betti_agrees_between_fields() {
        let q = q_ideal(4, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
        let fp = PrimeField::new(32003).unwrap();
        let r = PolyRing::new(fp, 4);
        let p = Ideal::new(
            r.clone(),
            ["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]
                .iter()
                .map(|s| r.parse(s).unwrap())
                .collect(),
        );
        assert_eq!(
            graded_betti(&q, 9).unwrap().entries(),
            graded_betti(&p, 9).unwrap().entries()
        );
    }

    #[test]
    fn error_cases() {
        let i = q_ideal(4, &["x2^2 - x1*x3"]);
        assert_eq!(
            graded_betti(&i, 3),
            Err(ResolutionError::CapExceeded {
                num_vars: 4,
                cap: 3
            })
        );
        let inhom = q_ideal(3, &["x1^2 - x2"]);
        assert_eq!(graded_betti(&inhom, 9), Err(ResolutionError::NotHomogeneous));
        let zero = q_ideal(3, &[]);
        assert_eq!(graded_betti(&zero, 9), Err(ResolutionError::ZeroIdeal));
        // A nonzero constant generator is homogeneous of degree 0, so the
        // homogeneity gate passes and the unit gate must catch it.
        let unit = q_ideal(3, &["2"]);
        assert_eq!(graded_betti(&unit, 9), Err(ResolutionError::UnitIdeal));
    }

    #[test]
    fn betti_respects_ideal_equality() {
        // Same ideal, different generator presentations.
        let a = q_ideal(4, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
        let b = q_ideal(
            4,
            &[
                "x3^2 - x2*x4",
                "x2*x3 - x1*x4",
                "x2^2 - x1*x3",
                "x2^2*x3 - x1*x3^2",
            ],
        );
        assert!(ideal_equal(&a, &b).unwrap());
        assert_eq!(
            graded_betti(&a, 9).unwrap(),
            graded_betti(&b, 9).unwrap()
        );
    }
}
