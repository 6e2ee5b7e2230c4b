//! Multivariate polynomials over an exact coefficient field.
//!
//! Terms are held sorted strictly descending under degrevlex with no zero
//! coefficients; that makes structural equality canonical regardless of which
//! order a computation currently uses. Term order for algorithms is always an
//! explicit [`MonomialOrder`] parameter.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

const CANONICAL: MonomialOrder = MonomialOrder::DegRevLex;

/// A polynomial ring `F[x1..xN]` acting as an explicit context.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    num_vars: usize,
}

/// A polynomial; plain data, operated on through its ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some(d)` when every term has total degree `d` (zero counts as
    /// homogeneous of degree 0), `None` otherwise.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let Some((first, _)) = self.terms.first() else {
            return Some(0);
        };
        let d = first.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == d)
            .then_some(d)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Reinterprets in a ring with `k` extra leading variables.
    pub fn prepend_vars(&self, k: usize) -> Polynomial<F> {
        // Degrevlex order among shifted terms is unchanged, so the invariant
        // survives the term map.
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.prepend_vars(k), c.clone()))
                .collect(),
        }
    }

    /// Drops the first `k` variables; panics if any occurs.
    pub fn drop_leading_vars(&self, k: usize) -> Polynomial<F> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.drop_leading_vars(k), c.clone()))
                .collect(),
        }
    }

    /// True when no term involves any of the first `k` variables.
    pub fn avoids_leading_vars(&self, k: usize) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0))
    }
}

/// A positioned parse failure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl core::error::Error for ParseError {}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, num_vars: usize) -> Self {
        PolyRing { field, num_vars }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// The same coefficient field with `k` extra leading variables.
    pub fn extended(&self, k: usize) -> PolyRing<F> {
        PolyRing::new(self.field.clone(), self.num_vars + k)
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial<F> {
        self.monomial(Monomial::one(self.num_vars), self.field.one())
    }

    pub fn var(&self, var: usize) -> Polynomial<F> {
        self.monomial(Monomial::var(self.num_vars, var), self.field.one())
    }

    pub fn monomial(&self, m: Monomial, c: F::Elem) -> Polynomial<F> {
        assert_eq!(m.num_vars(), self.num_vars, "monomial from another ring");
        if self.field.is_zero(&c) {
            self.zero()
        } else {
            Polynomial { terms: alloc::vec![(m, c)] }
        }
    }

    /// Normalizes an arbitrary term list: sorts, merges, drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        for (m, _) in &terms {
            assert_eq!(m.num_vars(), self.num_vars, "monomial from another ring");
        }
        terms.sort_by(|(a, _), (b, _)| CANONICAL.compare(b, a));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == m => {
                    *acc = self.field.add(acc, &c);
                    if self.field.is_zero(acc) {
                        out.pop();
                    }
                }
                _ => {
                    if !self.field.is_zero(&c) {
                        out.push((m, c));
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (ma, ca) = &a.terms[i];
            let (mb, cb) = &b.terms[j];
            match CANONICAL.compare(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(ca, cb);
                    if !self.field.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), self.field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiplies by the single term `c * m`; term order is preserved because
    /// monomial orders are multiplicative.
    pub fn mul_term(&self, a: &Polynomial<F>, m: &Monomial, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(ma, ca)| (ma.mul(m), self.field.mul(ca, c)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        let mut acc = self.zero();
        for (m, c) in &a.terms {
            acc = self.add(&acc, &self.mul_term(b, m, c));
        }
        acc
    }

    /// Leading term under `order`; `None` for zero. A linear scan except in
    /// the canonical order, where terms are already sorted.
    pub fn leading<'a>(
        &self,
        a: &'a Polynomial<F>,
        order: MonomialOrder,
    ) -> Option<(&'a Monomial, &'a F::Elem)> {
        if order == CANONICAL {
            return a.terms.first().map(|(m, c)| (m, c));
        }
        a.terms
            .iter()
            .max_by(|(ma, _), (mb, _)| order.compare(ma, mb))
            .map(|(m, c)| (m, c))
    }

    pub fn make_monic(&self, a: &Polynomial<F>, order: MonomialOrder) -> Polynomial<F> {
        match self.leading(a, order) {
            None => self.zero(),
            Some((_, lc)) if self.field.is_one(lc) => a.clone(),
            Some((_, lc)) => {
                let inv = self.field.inv(lc);
                self.scale(a, &inv)
            }
        }
    }

    /// Remainder of `f` on division by `basis` under `order`.
    ///
    /// Deterministic: at each step the leading reducible term is cancelled
    /// against the first basis element (in slice order) whose lead divides
    /// it; irreducible leading terms move to the remainder.
    pub fn normal_form(
        &self,
        f: &Polynomial<F>,
        basis: &[Polynomial<F>],
        order: MonomialOrder,
    ) -> Polynomial<F> {
        let leads: Vec<Option<(Monomial, F::Elem)>> = basis
            .iter()
            .map(|g| self.leading(g, order).map(|(m, c)| (m.clone(), c.clone())))
            .collect();
        let mut p = f.clone();
        let mut remainder: Vec<(Monomial, F::Elem)> = Vec::new();
        'outer: while let Some((lm, lc)) = self.leading(&p, order).map(|(m, c)| (m.clone(), c.clone())) {
            for (g, lead) in basis.iter().zip(&leads) {
                let Some((gm, gc)) = lead else { continue };
                if let Some(q) = lm.try_div(gm) {
                    let factor = self.field.div(&lc, gc);
                    p = self.sub(&p, &self.mul_term(g, &q, &factor));
                    continue 'outer;
                }
            }
            // Irreducible lead: retire it. Each pass strictly lowers the
            // leading monomial, so this terminates.
            remainder.push((lm.clone(), lc.clone()));
            p = self.sub(&p, &self.monomial(lm, lc));
        }
        self.from_terms(remainder)
    }

    /// The S-polynomial with monic normalization; `S(f, f) = 0`.
    pub fn s_polynomial(
        &self,
        f: &Polynomial<F>,
        g: &Polynomial<F>,
        order: MonomialOrder,
    ) -> Polynomial<F> {
        let (Some((mf, _)), Some((mg, _))) = (self.leading(f, order), self.leading(g, order))
        else {
            return self.zero();
        };
        let lcm = mf.lcm(mg);
        let uf = lcm.try_div(mf).expect("lcm divisible by lead");
        let ug = lcm.try_div(mg).expect("lcm divisible by lead");
        let fm = self.make_monic(f, order);
        let gm = self.make_monic(g, order);
        self.sub(
            &self.mul_term(&fm, &uf, &self.field.one()),
            &self.mul_term(&gm, &ug, &self.field.one()),
        )
    }

    /// Renders with terms in decreasing `order`; coefficients print as-is.
    pub fn render(&self, f: &Polynomial<F>, order: MonomialOrder) -> String {
        self.render_terms(&self.sorted_terms(f, order))
    }

    /// Renders the canonical representative: terms in decreasing `order`,
    /// coefficients rescaled by [`Field::canonical_scale`] (primitive integer
    /// with positive lead over the rationals, monic over prime fields).
    pub fn canonical_string(&self, f: &Polynomial<F>, order: MonomialOrder) -> String {
        let terms = self.sorted_terms(f, order);
        let mut coeffs: Vec<F::Elem> = terms.iter().map(|(_, c)| c.clone()).collect();
        self.field.canonical_scale(&mut coeffs);
        let rescaled: Vec<(Monomial, F::Elem)> = terms
            .into_iter()
            .map(|(m, _)| m)
            .zip(coeffs)
            .collect();
        self.render_terms(&rescaled)
    }

    fn sorted_terms(&self, f: &Polynomial<F>, order: MonomialOrder) -> Vec<(Monomial, F::Elem)> {
        let mut terms = f.terms.clone();
        terms.sort_by(|(a, _), (b, _)| order.compare(b, a));
        terms
    }

    fn render_terms(&self, terms: &[(Monomial, F::Elem)]) -> String {
        use core::fmt::Write;
        if terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let (neg, mag) = self.field.sign_split(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&mag);
            } else if mag == "1" {
                let _ = write!(out, "{}", m);
            } else {
                let _ = write!(out, "{}*{}", mag, m);
            }
        }
        out
    }

    /// Parses the textual polynomial grammar:
    ///
    /// ```text
    /// poly   := [sign] term (sign term)*
    /// term   := INT | INT '*' factors | factors
    /// factors:= var ('*' var)*
    /// var    := 'x' INT ['^' INT]
    /// ```
    ///
    /// Whitespace is insignificant; coefficients are integers.
    pub fn parse(&self, input: &str) -> Result<Polynomial<F>, ParseError> {
        let mut p = Parser {
            bytes: input.as_bytes(),
            pos: 0,
        };
        let mut terms: Vec<(Monomial, F::Elem)> = Vec::new();
        p.skip_ws();
        if p.at_end() {
            return Err(p.err("empty input"));
        }
        let mut sign = match p.peek() {
            Some(b'+') => {
                p.pos += 1;
                false
            }
            Some(b'-') => {
                p.pos += 1;
                true
            }
            _ => false,
        };
        loop {
            p.skip_ws();
            let (m, c) = self.parse_term(&mut p)?;
            let c = if sign { self.field.neg(&c) } else { c };
            terms.push((m, c));
            p.skip_ws();
            match p.peek() {
                None => break,
                Some(b'+') => {
                    p.pos += 1;
                    sign = false;
                }
                Some(b'-') => {
                    p.pos += 1;
                    sign = true;
                }
                Some(_) => return Err(p.err("expected '+', '-', or end of input")),
            }
        }
        Ok(self.from_terms(terms))
    }

    fn parse_term(&self, p: &mut Parser<'_>) -> Result<(Monomial, F::Elem), ParseError> {
        let mut coeff = self.field.one();
        let mut mono = Monomial::one(self.num_vars);
        let mut saw_factor = false;
        if let Some(d) = p.peek() {
            if d.is_ascii_digit() {
                let n = p.parse_int()?;
                coeff = self.field.from_int(n);
                saw_factor = true;
                p.skip_ws();
                if p.peek() == Some(b'*') {
                    p.pos += 1;
                    p.skip_ws();
                } else {
                    return Ok((mono, coeff));
                }
            }
        }
        loop {
            if p.peek() != Some(b'x') {
                if saw_factor {
                    return Err(p.err("expected a variable after '*'"));
                }
                return Err(p.err("expected a term"));
            }
            p.pos += 1;
            let var_pos = p.pos;
            let var = p.parse_int()? as usize;
            if var < 1 || var > self.num_vars {
                return Err(ParseError {
                    pos: var_pos,
                    msg: alloc::format!(
                        "variable x{} out of range for {} variables",
                        var,
                        self.num_vars
                    ),
                });
            }
            let mut exp = 1u32;
            if p.peek() == Some(b'^') {
                p.pos += 1;
                let e = p.parse_int()?;
                exp = u32::try_from(e).map_err(|_| p.err("exponent out of range"))?;
            }
            let mut exps = mono.exps().to_vec();
            exps[var - 1] = exps[var - 1]
                .checked_add(exp)
                .ok_or_else(|| p.err("exponent overflow"))?;
            mono = Monomial::from_exps(exps);
            saw_factor = true;
            p.skip_ws();
            if p.peek() == Some(b'*') {
                p.pos += 1;
                p.skip_ws();
            } else {
                return Ok((mono, coeff));
            }
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().map_or(false, |b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: String::from(msg),
        }
    }

    fn parse_int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        while self.peek().map_or(false, |b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<i64>().ok())
            .ok_or_else(|| ParseError {
                pos: start,
                msg: String::from("integer out of range"),
            })
    }
}
