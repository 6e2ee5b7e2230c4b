//! Coefficient fields, passed around as explicit contexts.
//!
//! Elements carry no pointer back to their field; every operation takes the
//! field as `&self`. This keeps elements plain data (`u64` for prime fields)
//! and lets the same polynomial code run over any coefficient ring.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, SparseMatrix};

/// A field of exact coefficients.
pub trait Field: Clone + Eq + fmt::Debug {
    type Elem: Clone + Eq + Ord + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    /// Plain decimal rendering, e.g. `7` or `-3/2`.
    fn render(&self, a: &Self::Elem) -> String;

    /// Splits a coefficient into a display sign and magnitude string, so
    /// polynomial printers can fold signs into `+`/`-` separators. Fields
    /// without a meaningful sign report `(false, render)`.
    fn sign_split(&self, a: &Self::Elem) -> (bool, String) {
        (false, self.render(a))
    }

    /// Rescales a nonzero coefficient vector to its canonical representative
    /// (used for content-independent printing). The default makes the first
    /// coefficient 1; the rationals override this with integer content
    /// normalization.
    fn canonical_scale(&self, coeffs: &mut [Self::Elem]) {
        let Some(first) = coeffs.first().cloned() else {
            return;
        };
        let inv = self.inv(&first);
        for c in coeffs.iter_mut() {
            *c = self.mul(c, &inv);
        }
    }

    /// Exact rank of a sparse matrix over this field.
    fn matrix_rank(&self, mat: SparseMatrix<Self::Elem>) -> usize {
        linalg::field_rank(self, mat)
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn render(&self, a: &BigRational) -> String {
        format!("{}", a)
    }

    fn sign_split(&self, a: &BigRational) -> (bool, String) {
        if a.is_negative() {
            (true, format!("{}", -a))
        } else {
            (false, format!("{}", a))
        }
    }

    /// Clears denominators and divides by the numerator content, then fixes
    /// the sign so the first coefficient is positive. The result is the
    /// primitive integer vector proportional to the input.
    fn canonical_scale(&self, coeffs: &mut [BigRational]) {
        if coeffs.is_empty() {
            return;
        }
        let mut denom_lcm = BigInt::one();
        for c in coeffs.iter() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for c in coeffs.iter() {
            content = content.gcd(&(c.numer() * (&denom_lcm / c.denom())));
        }
        if content.is_zero() {
            return;
        }
        if coeffs[0].is_negative() {
            content = -content;
        }
        let factor = BigRational::new(denom_lcm, content);
        for c in coeffs.iter_mut() {
            *c = &*c * &factor;
        }
    }

    /// Rank via fraction-free integer elimination: each row is scaled by the
    /// lcm of its denominators and stripped to primitive form, which leaves
    /// the row space (hence the rank) unchanged.
    fn matrix_rank(&self, mat: SparseMatrix<BigRational>) -> usize {
        let (nrows, ncols, rows) = mat.into_parts();
        let int_rows: Vec<Vec<(u32, BigInt)>> = rows
            .into_iter()
            .map(|row| {
                let mut denom_lcm = BigInt::one();
                for (_, e) in row.iter() {
                    denom_lcm = denom_lcm.lcm(e.denom());
                }
                row.into_iter()
                    .map(|(c, e)| {
                        let scaled = e.numer() * (&denom_lcm / e.denom());
                        (c, scaled)
                    })
                    .collect()
            })
            .collect();
        linalg::integer_rank(nrows, ncols, int_rows)
    }
}

/// Errors from constructing a prime field.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldError {
    /// The requested modulus is not an odd prime.
    NotOddPrime(u64),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotOddPrime(p) => write!(f, "modulus {} is not an odd prime", p),
        }
    }
}

impl core::error::Error for FieldError {}

/// Default modulus for prime-field runs, chosen large enough that random
/// rank degenerations are implausible and small enough that products fit
/// comfortably in u128 intermediates.
pub const DEFAULT_PRIME: u64 = 32003;

/// The field Z/p for a configurable odd prime p.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Validates that `p` is an odd prime (deterministic Miller-Rabin).
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p < 3 || p.is_even() || !is_prime_u64(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }

    fn render(&self, a: &u64) -> String {
        format!("{}", a)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Deterministic Miller-Rabin for u64 (12-base witness set).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn powmod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, n);
        }
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    acc
}
