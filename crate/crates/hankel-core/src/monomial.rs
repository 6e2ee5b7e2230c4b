//! Monomials as dense exponent vectors, and the monomial orders used for
//! Groebner basis computations.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A monomial in a fixed number of variables; `exps[i]` is the exponent of
/// `x_{i+1}`.
///
/// The derived `Ord` is the structural order on exponent vectors and is used
/// only for deterministic containers; term comparisons go through
/// [`MonomialOrder::compare`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: vec![0; num_vars] }
    }

    /// The variable `x_var` (1-based). Panics if out of range.
    pub fn var(num_vars: usize, var: usize) -> Self {
        assert!(var >= 1 && var <= num_vars, "variable index out of range");
        let mut exps = vec![0; num_vars];
        exps[var - 1] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of `x_var` (1-based).
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact division, `None` when `other` does not divide `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// 1-based indices of the variables occurring in this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i + 1)
    }

    /// Reinterprets the monomial in a ring with `k` extra leading variables.
    pub fn prepend_vars(&self, k: usize) -> Monomial {
        let mut exps = vec![0; k];
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    /// Drops the first `k` variables; they must not occur.
    pub fn drop_leading_vars(&self, k: usize) -> Monomial {
        assert!(
            self.exps[..k].iter().all(|&e| e == 0),
            "monomial involves a dropped variable"
        );
        Monomial { exps: self.exps[k..].to_vec() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// The orders usable inside a block of a [`MonomialOrder::Block`] order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SimpleOrder {
    DegRevLex,
    Lex,
}

/// A global monomial order (1 is the minimum; multiplication is monotone).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MonomialOrder {
    /// Degree first, ties broken by the *smallest* last differing exponent.
    DegRevLex,
    /// Pure lexicographic: the first differing exponent decides.
    Lex,
    /// Elimination order: the first `split` variables are compared by
    /// `left`; on a tie the remaining variables are compared by `right`.
    /// Any polynomial whose lead avoids the first block avoids it entirely.
    Block {
        split: usize,
        left: SimpleOrder,
        right: SimpleOrder,
    },
}

impl MonomialOrder {
    /// Compares `u` and `v` under this order. Panics when the monomials live
    /// in different rings.
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        assert_eq!(
            u.num_vars(),
            v.num_vars(),
            "monomials from different rings"
        );
        match self {
            MonomialOrder::DegRevLex => cmp_simple(SimpleOrder::DegRevLex, u.exps(), v.exps()),
            MonomialOrder::Lex => cmp_simple(SimpleOrder::Lex, u.exps(), v.exps()),
            MonomialOrder::Block { split, left, right } => {
                assert!(*split <= u.num_vars(), "block split past the ring");
                cmp_simple(*left, &u.exps()[..*split], &v.exps()[..*split])
                    .then_with(|| cmp_simple(*right, &u.exps()[*split..], &v.exps()[*split..]))
            }
        }
    }

    /// True when the order eliminates the first `k` variables: lead terms
    /// free of them force the whole polynomial free of them.
    pub fn eliminates(&self, k: usize) -> bool {
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::DegRevLex => false,
            MonomialOrder::Block { split, .. } => k <= *split,
        }
    }
}

fn cmp_simple(order: SimpleOrder, u: &[u32], v: &[u32]) -> Ordering {
    match order {
        SimpleOrder::DegRevLex => {
            let du: u32 = u.iter().sum();
            let dv: u32 = v.iter().sum();
            du.cmp(&dv).then_with(|| {
                for (a, b) in u.iter().zip(v).rev() {
                    if a != b {
                        // Smaller trailing exponent means larger monomial.
                        return if a < b { Ordering::Greater } else { Ordering::Less };
                    }
                }
                Ordering::Equal
            })
        }
        SimpleOrder::Lex => {
            for (a, b) in u.iter().zip(v) {
                if a != b {
                    return a.cmp(b);
                }
            }
            Ordering::Equal
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { split, left, right } => {
                write!(f, "block(split={}, {:?}, {:?})", split, left, right)
            }
        }
    }
}
