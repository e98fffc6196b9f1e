//! Rational functions in x, y over a number field.
//!
//! Invariants: gcd(num, den) = 1, den ≠ 0, and the denominator is the
//! canonical primitive representative (first nonzero power-basis coordinate
//! of its leading coefficient positive); the compensating unit lives in the
//! numerator. Equality of reduced representatives is structural equality.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::{Field, FieldScalar, Rational};
use crate::poly::{poly_gcd, MultiPoly};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl RatFunc {
    /// Reduce and normalize. Errors on a zero denominator.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: MultiPoly::one(den.field()),
            });
        }
        let g = poly_gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        // normalize the denominator to its canonical class representative
        // and push the compensating field unit into the numerator
        let den_norm = den.normalize_primitive();
        let unit = proportionality(&den, &den_norm).expect("normalization is proportional");
        let num = num.mul_scalar(&unit.inv().expect("unit is nonzero"));
        Ok(RatFunc {
            num,
            den: den_norm,
        })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let field = p.field().clone();
        RatFunc {
            num: p,
            den: MultiPoly::one(&field),
        }
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_poly(MultiPoly::zero(field))
    }

    pub fn one(field: &Field) -> Self {
        Self::from_poly(MultiPoly::one(field))
    }

    pub fn from_scalar(c: FieldScalar) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // reduce by the denominator gcd first to keep the lcm small
        let g = poly_gcd(&self.den, &other.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.div_exact(&g).unwrap(),
                other.den.div_exact(&g).unwrap(),
            )
        };
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field());
        }
        // cross-reduce before multiplying
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::new(n1.mul(&n2), d1.mul(&d2)).expect("nonzero denominator")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&RatFunc::new(other.den.clone(), other.num.clone())?))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn mul_scalar(&self, c: &FieldScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.field());
        }
        RatFunc::new(self.num.mul_scalar(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn dx(&self) -> Self {
        // (n/d)' = (n' d - n d') / d^2
        let num = self
            .num
            .dx()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.dx()));
        RatFunc::new(num, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    pub fn dy(&self) -> Self {
        let num = self
            .num
            .dy()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.dy()));
        RatFunc::new(num, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// Evaluate at a point; errors when the point lies on the polar locus.
    pub fn eval(&self, x: &FieldScalar, y: &FieldScalar) -> Result<FieldScalar> {
        let d = self.den.eval(x, y);
        if d.is_zero() {
            return Err(Error::Precondition(
                "evaluation point lies on the polar locus".into(),
            ));
        }
        self.num.eval(x, y).div(&d)
    }

    pub fn compose(&self, x: &MultiPoly, y: &MultiPoly) -> Result<Self> {
        RatFunc::new(self.num.compose(x, y), self.den.compose(x, y))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Shorthand constructor: num/den from integer term lists.
pub fn ratfn(field: &Field, num: &[(u16, u16, i64)], den: &[(u16, u16, i64)]) -> RatFunc {
    RatFunc::new(
        MultiPoly::from_int_terms(field, num),
        MultiPoly::from_int_terms(field, den),
    )
    .expect("nonzero denominator")
}

/// Scale factor c with a = c·b, or `None` when the two polynomials are not
/// proportional over the field.
pub fn proportionality(a: &MultiPoly, b: &MultiPoly) -> Option<FieldScalar> {
    if a.is_zero() || b.is_zero() {
        return if a.is_zero() && b.is_zero() {
            Some(FieldScalar::one(a.field()))
        } else {
            None
        };
    }
    let (m, cb) = b.leading().unwrap();
    let ca = a.coeff(m.i, m.j);
    if ca.is_zero() {
        return None;
    }
    let r = ca.div(cb).ok()?;
    if a == &b.mul_scalar(&r) {
        Some(r)
    } else {
        None
    }
}

/// Rational content (gcd of numerators, lcm of denominators) of a polynomial.
pub fn integer_content(p: &MultiPoly) -> (BigInt, BigInt) {
    let mut l = BigInt::one();
    for (_, c) in p.terms() {
        l = num_integer::lcm(l, c.denominator_lcm());
    }
    let mut g = BigInt::zero();
    for (_, c) in p.terms() {
        let scaled = c.mul_rational(&Rational::from_integer(l.clone()));
        g = num_integer::gcd(g, scaled.numerator_gcd());
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    (g, l)
}
