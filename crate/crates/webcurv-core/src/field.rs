//! Number fields ℚ(α) and their elements.
//!
//! A [`NumberField`] is presented by a monic minimal polynomial over ℚ; a
//! [`FieldScalar`] stores coordinates in the power basis 1, α, …, α^{d−1}.
//! Arithmetic reduces modulo the minimal polynomial. Irreducibility is
//! asserted at construction for the shipped fields (ℚ, ℚ(ξ₃), ℚ(i), ℚ(ξ₆),
//! cyclotomic fields built from Φ_k); arbitrary presentations are accepted
//! with the irreducibility obligation left to the caller.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number, kept reduced with positive
/// denominator by `num-rational`.
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for small integers as rationals.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A number field ℚ(α) with α a root of the stored monic polynomial.
pub struct NumberField {
    label: String,
    /// Minimal polynomial coefficients, ascending degree, monic (last = 1).
    min_poly: Vec<Rational>,
    /// `power_table[j]` = coordinates of α^(d+j) for j = 0..d−1, used to
    /// reduce products without repeated long division.
    power_table: Vec<Vec<Rational>>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.label)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly
    }
}
impl Eq for NumberField {}

/// Shared handle to a number field. Cheap to clone; equality is by minimal
/// polynomial, with a pointer fast path.
pub type Field = Arc<NumberField>;

impl NumberField {
    /// Build a field from a monic minimal polynomial given in ascending
    /// degree order. Degree must be ≥ 1. Irreducibility over ℚ is the
    /// caller's obligation for non-shipped presentations.
    pub fn new(label: &str, min_poly: Vec<Rational>) -> Result<Field> {
        crate::precondition!(min_poly.len() >= 2, "minimal polynomial must have degree >= 1");
        crate::precondition!(
            min_poly.last().unwrap().is_one(),
            "minimal polynomial must be monic"
        );
        let d = min_poly.len() - 1;
        // alpha^d = -(m_0 + m_1 alpha + ... + m_{d-1} alpha^{d-1})
        let mut power_table: Vec<Vec<Rational>> = Vec::with_capacity(d);
        let base: Vec<Rational> = min_poly[..d].iter().map(|c| -c.clone()).collect();
        power_table.push(base.clone());
        for _ in 1..d {
            let prev = power_table.last().unwrap();
            // multiply by alpha: shift, then fold the overflowing alpha^d term
            let carry = prev[d - 1].clone();
            let mut next = vec![Rational::zero(); d];
            for i in 1..d {
                next[i] = prev[i - 1].clone();
            }
            if !carry.is_zero() {
                for i in 0..d {
                    next[i] += &carry * &base[i];
                }
            }
            power_table.push(next);
        }
        Ok(Arc::new(NumberField {
            label: label.to_string(),
            min_poly,
            power_table,
        }))
    }

    /// The rationals, presented as ℚ[t]/(t).
    pub fn rationals() -> Field {
        NumberField::new("Q", vec![Rational::zero(), Rational::one()]).unwrap()
    }

    /// ℚ(ξ₃) with ξ₃ a primitive cube root of unity; minimal polynomial t²+t+1.
    pub fn q_xi3() -> Field {
        NumberField::new("Q(xi3)", vec![int(1), int(1), int(1)]).unwrap()
    }

    /// ℚ(i); minimal polynomial t²+1.
    pub fn q_i() -> Field {
        NumberField::new("Q(i)", vec![int(1), int(0), int(1)]).unwrap()
    }

    /// Cyclotomic field ℚ(ξ_k) presented by the k-th cyclotomic polynomial.
    /// Supports k ≤ 12, which covers every catalog construction.
    pub fn cyclotomic(k: u32) -> Result<Field> {
        let coeffs: Vec<i64> = match k {
            1 => vec![-1, 1],
            2 => vec![1, 1],
            3 => vec![1, 1, 1],
            4 => vec![1, 0, 1],
            5 => vec![1, 1, 1, 1, 1],
            6 => vec![1, -1, 1],
            7 => vec![1, 1, 1, 1, 1, 1, 1],
            8 => vec![1, 0, 0, 0, 1],
            9 => vec![1, 0, 0, 1, 0, 0, 1],
            10 => vec![1, -1, 1, -1, 1],
            11 => vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            12 => vec![1, 0, -1, 0, 1],
            _ => {
                return Err(Error::Unsupported(format!(
                    "cyclotomic field for k = {k} (only k <= 12 is shipped)"
                )))
            }
        };
        NumberField::new(
            &format!("Q(xi{k})"),
            coeffs.into_iter().map(int).collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn min_poly(&self) -> &[Rational] {
        &self.min_poly
    }
}

/// Element of a number field in power-basis coordinates.
#[derive(Clone)]
pub struct FieldScalar {
    field: Field,
    coords: Vec<Rational>,
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for FieldScalar {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.same_field(other)
    }
}
impl Eq for FieldScalar {}

impl FieldScalar {
    pub fn new(field: &Field, mut coords: Vec<Rational>) -> Result<Self> {
        crate::precondition!(
            coords.len() <= field.degree(),
            "too many coordinates for field degree"
        );
        coords.resize(field.degree(), Rational::zero());
        Ok(FieldScalar {
            field: field.clone(),
            coords,
        })
    }

    pub fn zero(field: &Field) -> Self {
        FieldScalar {
            field: field.clone(),
            coords: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Field, r: Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = r;
        FieldScalar {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_rational(field, int(n))
    }

    /// The generator α of the field. For ℚ (degree 1, minpoly t) this is 0.
    pub fn generator(field: &Field) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        if field.degree() >= 2 {
            coords[1] = Rational::one();
        }
        FieldScalar {
            field: field.clone(),
            coords,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// Rational content when the element lies in ℚ ⊂ ℚ(α).
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.same_field(other));
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        FieldScalar {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(self.same_field(other));
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        FieldScalar {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> Self {
        FieldScalar {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.same_field(other));
        let d = self.field.degree();
        if d == 1 {
            return FieldScalar {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &other.coords[0]],
            };
        }
        // schoolbook product, then reduce powers >= d through the table
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut coords: Vec<Rational> = prod[..d].to_vec();
        for (j, c) in prod[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, t) in self.field.power_table[j].iter().enumerate() {
                if !t.is_zero() {
                    coords[i] += c * t;
                }
            }
        }
        FieldScalar {
            field: self.field.clone(),
            coords,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        FieldScalar {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// power-basis representative against the minimal polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            let mut coords = vec![Rational::zero(); self.field.degree()];
            coords[0] = Rational::one() / r;
            return Ok(FieldScalar {
                field: self.field.clone(),
                coords,
            });
        }
        // extended gcd over Q[t]: u*self + v*minpoly = gcd (a unit)
        let mut r0: Vec<Rational> = self.field.min_poly.clone();
        let mut r1: Vec<Rational> = trim(self.coords.clone());
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, rem) = uni_divrem(&r0, &r1);
            let s2 = uni_sub(&s0, &uni_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant (minpoly irreducible), s0 the cofactor
        debug_assert_eq!(r0.len(), 1, "minimal polynomial is not irreducible");
        let c = Rational::one() / &r0[0];
        let mut coords: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        coords.resize(self.field.degree(), Rational::zero());
        Ok(FieldScalar {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldScalar::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Least common multiple of coordinate denominators — used by primitive
    /// normalization in the polynomial layer.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in &self.coords {
            l = num_integer::lcm(l, c.denom().clone());
        }
        l
    }

    /// Gcd of coordinate numerators (content over ℤ after clearing).
    pub fn numerator_gcd(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = num_integer::gcd(g, c.numer().abs());
        }
        g
    }

    /// First nonzero power-basis coordinate, used by the sign normalization
    /// rule: a representative is "positive" when this coordinate is.
    pub fn leading_sign_positive(&self) -> bool {
        for c in &self.coords {
            if !c.is_zero() {
                return c.is_positive();
            }
        }
        true
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*a")?,
                _ => write!(f, "{c}*a^{i}")?,
            }
        }
        Ok(())
    }
}

// --- small dense univariate helpers over Q (ascending coefficients) ---

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn uni_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn uni_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn uni_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if a.len() <= db {
        return (vec![], trim(rem));
    }
    let mut quo = vec![Rational::zero(); a.len() - db];
    let lead = &b[db];
    for i in (db..a.len()).rev() {
        let c = &rem[i] / lead;
        if !c.is_zero() {
            quo[i - db] = c.clone();
            for (j, bc) in b.iter().enumerate() {
                let idx = i - db + j;
                let sub = &c * bc;
                rem[idx] -= sub;
            }
        }
    }
    (trim(quo), trim(rem))
}
