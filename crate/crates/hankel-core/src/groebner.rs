//! Buchberger's algorithm and the ideal-level operations built on it:
//! membership, equality, elimination, intersection, radical membership, and
//! Krull dimension via the initial ideal.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, SimpleOrder};
use crate::poly::{PolyRing, Polynomial};

/// Errors from ideal-level operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealError {
    /// The two ideals live in different rings.
    RingMismatch,
    /// The operation needs a nonzero ideal.
    ZeroIdeal,
    /// The operation needs a proper ideal.
    UnitIdeal,
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::RingMismatch => write!(f, "ideals live in different rings"),
            IdealError::ZeroIdeal => write!(f, "the zero ideal is not allowed here"),
            IdealError::UnitIdeal => write!(f, "the unit ideal is not allowed here"),
        }
    }
}

impl core::error::Error for IdealError {}

/// A reduced Groebner basis: monic, autoreduced, sorted by increasing lead.
/// This representative is unique for the ideal and order, so structural
/// equality of bases is equality of ideals.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    order: MonomialOrder,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    /// True when the basis generates the unit ideal (reduced basis `{1}`).
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.degree() == 0 && !g.is_zero())
    }

    /// Leading monomials, in basis order.
    pub fn leading_monomials(&self, ring: &PolyRing<F>) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| {
                ring.leading(g, self.order)
                    .expect("basis elements are nonzero")
                    .0
                    .clone()
            })
            .collect()
    }
}

/// An ideal with cached Groebner bases per order.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<Polynomial<F>>,
    cache: RefCell<BTreeMap<MonomialOrder, GroebnerBasis<F>>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; an empty list is the zero ideal.
    pub fn new(ring: PolyRing<F>, gens: Vec<Polynomial<F>>) -> Self {
        let gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(
                g.terms()[0].0.num_vars(),
                ring.num_vars(),
                "generator from another ring"
            );
        }
        Ideal {
            ring,
            gens,
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis under `order`, cached per order.
    pub fn groebner_basis(&self, order: MonomialOrder) -> GroebnerBasis<F> {
        if let Some(gb) = self.cache.borrow().get(&order) {
            return gb.clone();
        }
        let gb = buchberger(&self.ring, &self.gens, order);
        self.cache
            .borrow_mut()
            .insert(order, gb.clone());
        gb
    }

    /// Ideal membership via normal form against the degrevlex basis.
    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.contains_with(f, MonomialOrder::DegRevLex)
    }

    pub fn contains_with(&self, f: &Polynomial<F>, order: MonomialOrder) -> bool {
        if f.is_zero() {
            return true;
        }
        let gb = self.groebner_basis(order);
        self.ring.normal_form(f, gb.elements(), order).is_zero()
    }
}

/// Mathematical equality of ideals, via uniqueness of reduced bases.
pub fn ideal_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool, IdealError> {
    if a.ring != b.ring {
        return Err(IdealError::RingMismatch);
    }
    let order = MonomialOrder::DegRevLex;
    Ok(a.groebner_basis(order).elements() == b.groebner_basis(order).elements())
}

/// Buchberger's algorithm with the normal selection strategy and the product
/// and chain criteria, followed by autoreduction.
///
/// Pairs are processed in increasing lcm degree, ties broken by the index
/// pair, which makes runs deterministic. The chain criterion only skips a
/// pair `(i,j)` when some other basis element's lead divides `lcm(i,j)` and
/// both side pairs were already handled, which is the classically safe form.
pub fn buchberger<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    order: MonomialOrder,
) -> GroebnerBasis<F> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = ring.make_monic(g, order);
        if !basis.contains(&g) {
            basis.push(g);
        }
    }
    let lead = |basis: &[Polynomial<F>], i: usize| -> Monomial {
        ring.leading(&basis[i], order)
            .expect("basis elements are nonzero")
            .0
            .clone()
    };

    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut handled: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            let d = lead(&basis, i).lcm(&lead(&basis, j)).degree();
            pairs.insert((d, i, j));
        }
    }

    while let Some((_, i, j)) = pairs.pop_first() {
        handled.insert((i, j));
        let (mi, mj) = (lead(&basis, i), lead(&basis, j));
        if mi.is_coprime(&mj) {
            continue;
        }
        let lcm = mi.lcm(&mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis, k).divides(&lcm)
                && handled.contains(&(k.min(i), k.max(i)))
                && handled.contains(&(k.min(j), k.max(j)))
        });
        if chain {
            continue;
        }
        let s = ring.s_polynomial(&basis[i], &basis[j], order);
        let h = ring.normal_form(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = ring.make_monic(&h, order);
        let mh = ring.leading(&h, order).expect("nonzero").0.clone();
        let k = basis.len();
        for t in 0..k {
            let d = lead(&basis, t).lcm(&mh).degree();
            pairs.insert((d, t, k));
        }
        basis.push(h);
    }

    reduce_basis(ring, basis, order)
}

/// Turns a Groebner basis into the reduced one: minimal leads, fully
/// tail-reduced, monic, sorted by increasing lead.
fn reduce_basis<F: Field>(
    ring: &PolyRing<F>,
    mut basis: Vec<Polynomial<F>>,
    order: MonomialOrder,
) -> GroebnerBasis<F> {
    // Stable sort: ties keep the (deterministic) discovery order.
    basis.sort_by(|a, b| {
        let (ma, _) = ring.leading(a, order).expect("nonzero");
        let (mb, _) = ring.leading(b, order).expect("nonzero");
        order.compare(ma, mb)
    });
    let mut kept: Vec<Polynomial<F>> = Vec::new();
    let mut kept_leads: Vec<Monomial> = Vec::new();
    for g in basis {
        let (mg, _) = ring.leading(&g, order).expect("nonzero");
        if kept_leads.iter().any(|m| m.divides(mg)) {
            continue;
        }
        kept_leads.push(mg.clone());
        kept.push(g);
    }
    // Tail-reduce each against the rest. Leads are pairwise indivisible, so
    // only tails change and one pass yields the canonical representative.
    let reduced: Vec<Polynomial<F>> = (0..kept.len())
        .map(|idx| {
            let others: Vec<Polynomial<F>> = kept
                .iter()
                .enumerate()
                .filter(|(t, _)| *t != idx)
                .map(|(_, g)| g.clone())
                .collect();
            ring.make_monic(&ring.normal_form(&kept[idx], &others, order), order)
        })
        .collect();
    GroebnerBasis {
        order,
        elements: reduced,
    }
}

/// Intersection of two ideals in the same ring, by eliminating an auxiliary
/// variable `t` from `t*I + (1-t)*J`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>, IdealError> {
    if a.ring != b.ring {
        return Err(IdealError::RingMismatch);
    }
    let ring = &a.ring;
    let ext = ring.extended(1);
    let t = ext.var(1);
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for g in &a.gens {
        gens.push(ext.mul(&t, &g.prepend_vars(1)));
    }
    for g in &b.gens {
        let sh = g.prepend_vars(1);
        gens.push(ext.sub(&sh, &ext.mul(&t, &sh)));
    }
    let order = MonomialOrder::Block {
        split: 1,
        left: SimpleOrder::DegRevLex,
        right: SimpleOrder::DegRevLex,
    };
    let gb = buchberger(&ext, &gens, order);
    // Under an elimination order, the t-free basis elements generate (in
    // fact form a basis of) the intersection.
    let kept: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|g| g.avoids_leading_vars(1))
        .map(|g| g.drop_leading_vars(1))
        .collect();
    Ok(Ideal::new(ring.clone(), kept))
}

/// Radical membership: `f` lies in the radical of `I` iff `1` belongs to
/// `I + (t*f - 1)` in the extended ring.
pub fn radical_membership<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> bool {
    if f.is_zero() {
        return true;
    }
    let ext = ideal.ring.extended(1);
    let t = ext.var(1);
    let mut gens: Vec<Polynomial<F>> = ideal
        .gens
        .iter()
        .map(|g| g.prepend_vars(1))
        .collect();
    gens.push(ext.sub(&ext.mul(&t, &f.prepend_vars(1)), &ext.one()));
    buchberger(&ext, &gens, MonomialOrder::DegRevLex).is_unit()
}

/// A monomial ideal given by its unique minimal generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generating list.
    pub fn new(num_vars: usize, gens: Vec<Monomial>) -> Self {
        let mut sorted = gens;
        sorted.sort_by_key(Monomial::degree);
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in sorted {
            assert_eq!(m.num_vars(), num_vars, "monomial from another ring");
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort();
        MonomialIdeal {
            num_vars,
            gens: minimal,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn minimal_generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

/// The initial ideal of `I` under the basis order.
pub fn initial_ideal<F: Field>(ring: &PolyRing<F>, gb: &GroebnerBasis<F>) -> MonomialIdeal {
    MonomialIdeal::new(ring.num_vars(), gb.leading_monomials(ring))
}

/// Krull dimension of `S/I` for a nonzero proper ideal `I`: the dimension of
/// `S/in(I)`, computed as `N` minus a minimum vertex cover of the supports of
/// the minimal monomial generators. Exhaustive over subsets (the supports
/// live in few variables at the sizes this crate targets).
pub fn krull_dimension<F: Field>(ideal: &Ideal<F>) -> Result<usize, IdealError> {
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    let gb = ideal.groebner_basis(MonomialOrder::DegRevLex);
    if gb.is_unit() {
        return Err(IdealError::UnitIdeal);
    }
    let n = ideal.ring.num_vars();
    let supports: Vec<BTreeSet<usize>> = initial_ideal(&ideal.ring, &gb)
        .minimal_generators()
        .iter()
        .map(|m| m.support().collect())
        .collect();
    let mut vars: Vec<usize> = BTreeSet::from_iter(supports.iter().flatten().copied())
        .into_iter()
        .collect();
    vars.sort_unstable();
    for size in 0..=vars.len() {
        if let Some(_cover) = find_cover(&supports, &vars, size) {
            return Ok(n - size);
        }
    }
    unreachable!("the full variable set is always a cover")
}

fn find_cover(
    supports: &[BTreeSet<usize>],
    vars: &[usize],
    size: usize,
) -> Option<Vec<usize>> {
    fn rec(
        supports: &[BTreeSet<usize>],
        vars: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        size: usize,
    ) -> bool {
        if chosen.len() == size {
            return supports
                .iter()
                .all(|s| s.iter().any(|v| chosen.contains(v)));
        }
        for idx in start..vars.len() {
            chosen.push(vars[idx]);
            if rec(supports, vars, idx + 1, chosen, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(size);
    rec(supports, vars, 0, &mut chosen, size).then_some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use alloc::vec;

    fn ring(n: usize) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, n)
    }

    fn ideal(r: &PolyRing<Rationals>, gens: &[&str]) -> Ideal<Rationals> {
        Ideal::new(
            r.clone(),
            gens.iter().map(|s| r.parse(s).unwrap()).collect(),
        )
    }

    #[test]
    fn scroll_ideal_of_a_path_is_already_reduced() {
        // Quadrics of the line graph on [4] inside 5 variables.
        let r = ring(5);
        let i = ideal(&r, &["x1*x3 - x2^2", "x2*x4 - x3^2", "x3*x5 - x4^2"]);
        let gb = i.groebner_basis(MonomialOrder::DegRevLex);
        assert_eq!(gb.elements().len(), 3);
        assert!(gb
            .elements()
            .iter()
            .all(|g| g.homogeneous_degree() == Some(2)));
        assert!(!gb.is_unit());
    }

    #[test]
    fn full_scroll_basis_gains_one_reduced_tail() {
        // All quadrics x_p*x_{q+1} - x_{p+1}*x_q on [4] inside 5 variables:
        // the reduced basis rewrites x1*x5 - x2*x4 because x2*x4 is itself a
        // lead, leaving x3^2 - x1*x5 in its place.
        let r = ring(5);
        let i = ideal(
            &r,
            &[
                "x1*x3 - x2^2",
                "x1*x4 - x2*x3",
                "x1*x5 - x2*x4",
                "x2*x4 - x3^2",
                "x2*x5 - x3*x4",
                "x3*x5 - x4^2",
            ],
        );
        let gb = i.groebner_basis(MonomialOrder::DegRevLex);
        assert_eq!(gb.elements().len(), 6);
        let printed: Vec<_> = gb
            .elements()
            .iter()
            .map(|g| r.canonical_string(g, MonomialOrder::DegRevLex))
            .collect();
        assert!(printed.contains(&alloc::string::String::from("x3^2 - x1*x5")));
        // Same ideal as the generators, of course.
        let again = ideal(&r, &["x2^2 - x1*x3", "x3^2 - x1*x5", "x2*x3 - x1*x4",
            "x2*x4 - x1*x5", "x3*x4 - x2*x5", "x4^2 - x3*x5"]);
        assert!(ideal_equal(&i, &again).unwrap());
    }

    #[test]
    fn buchberger_discovers_missing_elements() {
        // Two of the twisted-cubic quadrics with overlapping leads do not
        // form a basis alone; their S-polynomial survives reduction.
        let r = ring(4);
        let i = ideal(&r, &["x1*x3 - x2^2", "x1*x4 - x2*x3"]);
        let gb = i.groebner_basis(MonomialOrder::DegRevLex);
        assert!(gb.elements().len() > 2);
        // All original generators still reduce to zero.
        for g in i.generators() {
            assert!(r.normal_form(g, gb.elements(), MonomialOrder::DegRevLex).is_zero());
        }
    }

    #[test]
    fn membership_and_equality() {
        let r = ring(4);
        // Twisted cubic: the three 2-minors of the generic Hankel matrix.
        let i = ideal(&r, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
        assert!(i.contains(&r.parse("x2^2 - x1*x3").unwrap()));
        assert!(i.contains(&r.parse("x1*x3^2 - x1*x2*x4").unwrap()));
        assert!(!i.contains(&r.parse("x1*x3").unwrap()));
        assert!(!i.contains(&r.parse("x2^2").unwrap()));
        let j = ideal(&r, &["x2*x3 - x1*x4", "x3^2 - x2*x4", "x2^2 - x1*x3"]);
        assert!(ideal_equal(&i, &j).unwrap());
        let k = ideal(&r, &["x2^2 - x1*x3"]);
        assert!(!ideal_equal(&i, &k).unwrap());
        assert!(matches!(
            ideal_equal(&i, &ideal(&ring(5), &["x1"])),
            Err(IdealError::RingMismatch)
        ));
    }

    #[test]
    fn unit_ideal_detection() {
        let r = ring(3);
        let i = ideal(&r, &["x1", "x1 - 1"]);
        assert!(i.groebner_basis(MonomialOrder::DegRevLex).is_unit());
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let r = ring(3);
        let a = ideal(&r, &["x1"]);
        let b = ideal(&r, &["x2"]);
        let meet = intersect(&a, &b).unwrap();
        let expected = ideal(&r, &["x1*x2"]);
        assert!(ideal_equal(&meet, &expected).unwrap());
    }

    #[test]
    fn intersection_matches_hand_example() {
        // (x1, x2) ∩ (x2, x3) = (x2, x1*x3).
        let r = ring(3);
        let a = ideal(&r, &["x1", "x2"]);
        let b = ideal(&r, &["x2", "x3"]);
        let meet = intersect(&a, &b).unwrap();
        let expected = ideal(&r, &["x2", "x1*x3"]);
        assert!(ideal_equal(&meet, &expected).unwrap());
    }

    #[test]
    fn radical_membership_detects_nilpotents() {
        let r = ring(3);
        let i = ideal(&r, &["x1^2", "x2"]);
        assert!(radical_membership(&i, &r.parse("x1").unwrap()));
        assert!(radical_membership(&i, &r.parse("x1*x3 + x2").unwrap()));
        assert!(!radical_membership(&i, &r.parse("x3").unwrap()));
        assert!(!i.contains(&r.parse("x1").unwrap()));
    }

    #[test]
    fn krull_dimension_examples() {
        let r = ring(4);
        // Twisted cubic: dim S/I = 2.
        let i = ideal(&r, &["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
        assert_eq!(krull_dimension(&i), Ok(2));
        // A hypersurface has dimension N - 1.
        let h = ideal(&r, &["x1*x2 - x3*x4"]);
        assert_eq!(krull_dimension(&h), Ok(3));
        // Full variable ideal: dimension 0.
        let m = ideal(&r, &["x1", "x2", "x3", "x4"]);
        assert_eq!(krull_dimension(&m), Ok(0));
        assert_eq!(
            krull_dimension(&Ideal::new(r.clone(), vec![])),
            Err(IdealError::ZeroIdeal)
        );
        assert_eq!(
            krull_dimension(&ideal(&r, &["x1 - 1", "x1"])),
            Err(IdealError::UnitIdeal)
        );
    }

    #[test]
    fn monomial_ideal_minimalization() {
        let gens = vec![
            Monomial::from_exps(vec![2, 0, 0]),
            Monomial::from_exps(vec![2, 1, 0]),
            Monomial::from_exps(vec![0, 1, 1]),
        ];
        let mi = MonomialIdeal::new(3, gens);
        assert_eq!(mi.minimal_generators().len(), 2);
        assert!(mi.contains(&Monomial::from_exps(vec![3, 0, 1])));
        assert!(!mi.contains(&Monomial::from_exps(vec![1, 1, 0])));
    }

    #[test]
    fn lex_basis_differs_from_degrevlex() {
        let r = ring(3);
        let i = ideal(&r, &["x1^2 + x2^2 + x3^2 - 1", "x1 - x2"]);
        let grev = i.groebner_basis(MonomialOrder::DegRevLex);
        let lex = i.groebner_basis(MonomialOrder::Lex);
        // Lex eliminates: the smallest element is a polynomial in x2, x3 only.
        assert!(lex.elements()[0].avoids_leading_vars(1));
        assert!(!grev.elements().is_empty());
    }
}
