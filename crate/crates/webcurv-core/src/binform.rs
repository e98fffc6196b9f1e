//! Binary forms, dense univariate polynomials over the field, resultants,
//! square-free (Yun) decomposition, and field-rational root extraction.
//!
//! Root extraction is complete for base fields of degree ≤ 2 (every catalog
//! computation lives in ℚ, ℚ(ξ₃) or ℚ(i)); over larger fields only rational
//! roots are found and the result is flagged incomplete.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, FieldScalar, Rational};
use crate::poly::MultiPoly;
use crate::{Error, Result};

/// Homogeneous binary form of fixed degree: `coeffs[m]` multiplies
/// x^(degree−m) y^m.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    field: Field,
    degree: usize,
    coeffs: Vec<FieldScalar>,
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm(deg {}: ", self.degree)?;
        for (m, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " +({c})x^{}y^{m}", self.degree - m)?;
            }
        }
        write!(f, ")")
    }
}

impl BinaryForm {
    pub fn new(field: &Field, degree: usize, coeffs: Vec<FieldScalar>) -> Result<Self> {
        crate::precondition!(
            coeffs.len() == degree + 1,
            "coefficient list must have length degree + 1"
        );
        Ok(BinaryForm {
            field: field.clone(),
            degree,
            coeffs,
        })
    }

    pub fn from_ints(field: &Field, degree: usize, coeffs: &[i64]) -> Self {
        Self::new(
            field,
            degree,
            coeffs
                .iter()
                .map(|n| FieldScalar::from_int(field, *n))
                .collect(),
        )
        .unwrap()
    }

    /// The form Π (β_i x − α_i y) vanishing at the points [α_i : β_i].
    ///
    /// In the chart t = y/x a finite point [α : β] contributes the factor
    /// β − α·t; the point [0 : 1] contributes a bare power of x, which keeps
    /// the homogenization exact.
    pub fn from_points(field: &Field, points: &[[FieldScalar; 2]]) -> Result<Self> {
        let mut coeffs = vec![FieldScalar::one(field)];
        for p in points {
            crate::precondition!(
                !(p[0].is_zero() && p[1].is_zero()),
                "configuration points must be projective points"
            );
            if p[0].is_zero() {
                // factor βx: the root at [0:1]; pure scale in t-coordinates
                coeffs = scale(&coeffs, &p[1]);
            } else {
                coeffs = mul_linear(&coeffs, &p[1], &p[0].neg());
            }
        }
        let n = points.len();
        // term c_m t^m homogenizes to c_m x^(n−m) y^m
        let mut out = vec![FieldScalar::zero(field); n + 1];
        for (m, c) in coeffs.iter().enumerate() {
            out[m] = c.clone();
        }
        BinaryForm::new(field, n, out)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[FieldScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficients of the dehomogenization f(1, t), ascending in t.
    pub fn dehomogenized(&self) -> UniPoly {
        UniPoly::new(self.field.clone(), self.coeffs.clone())
    }

    pub fn eval(&self, x: &FieldScalar, y: &FieldScalar) -> FieldScalar {
        let mut acc = FieldScalar::zero(&self.field);
        let mut xp = vec![FieldScalar::one(&self.field)];
        let mut yp = vec![FieldScalar::one(&self.field)];
        for _ in 0..self.degree {
            xp.push(xp.last().unwrap().mul(x));
            yp.push(yp.last().unwrap().mul(y));
        }
        for (m, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.mul(&xp[self.degree - m]).mul(&yp[m]));
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.degree + other.degree;
        let mut out = vec![FieldScalar::zero(&self.field); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BinaryForm {
            field: self.field.clone(),
            degree: n,
            coeffs: out,
        }
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        BinaryForm {
            field: self.field.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Projective proportionality.
    pub fn eq_projective(&self, other: &Self) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let lead = |f: &BinaryForm| f.coeffs.iter().position(|c| !c.is_zero());
        match (lead(self), lead(other)) {
            (Some(i), Some(j)) if i == j => {
                let r = self.coeffs[i].div(&other.coeffs[j]).unwrap();
                self.coeffs
                    .iter()
                    .zip(&other.coeffs)
                    .all(|(a, b)| *a == b.mul(&r))
            }
            (None, None) => true,
            _ => false,
        }
    }
}

fn mul_linear(c: &[FieldScalar], c0: &FieldScalar, c1: &FieldScalar) -> Vec<FieldScalar> {
    // multiply ascending-coefficient poly by (c0 + c1 t)
    let mut out = vec![FieldScalar::zero(c1.field()); c.len() + 1];
    for (i, a) in c.iter().enumerate() {
        out[i] = out[i].add(&a.mul(c0));
        out[i + 1] = out[i + 1].add(&a.mul(c1));
    }
    out
}

fn scale(c: &[FieldScalar], s: &FieldScalar) -> Vec<FieldScalar> {
    c.iter().map(|a| a.mul(s)).collect()
}

/// Dense univariate polynomial over the field, ascending coefficients with
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    field: Field,
    pub coeffs: Vec<FieldScalar>,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<FieldScalar>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: vec![],
        }
    }

    pub fn constant(c: FieldScalar) -> Self {
        let field = c.field().clone();
        Self::new(field, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&FieldScalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &FieldScalar) -> FieldScalar {
        let mut acc = FieldScalar::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul_rational(&Rational::from_integer(BigInt::from(i))));
        }
        Self::new(self.field.clone(), out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out =
            vec![FieldScalar::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.field.clone(), out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![FieldScalar::zero(&self.field); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].sub(c);
        }
        Self::new(self.field.clone(), out)
    }

    /// Euclidean division over the field.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |n| n < dd) {
            return (Self::zero(&self.field), self.clone());
        }
        let lead_inv = d.leading().unwrap().inv().expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![FieldScalar::zero(&self.field); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&lead_inv);
            quo[i - dd] = q.clone();
            for (k, c) in d.coeffs.iter().enumerate() {
                let idx = i - dd + k;
                rem[idx] = rem[idx].sub(&q.mul(c));
            }
        }
        (
            Self::new(self.field.clone(), quo),
            Self::new(self.field.clone(), rem),
        )
    }

    /// Monic gcd over the field.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(l) = a.leading() {
            let inv = l.inv().unwrap();
            a = Self::new(
                a.field.clone(),
                a.coeffs.iter().map(|c| c.mul(&inv)).collect(),
            );
        }
        a
    }

    /// Yun square-free decomposition: returns (factor, multiplicity) pairs
    /// with pairwise coprime square-free factors whose weighted product
    /// reconstructs the monic part of `self`.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        if self.degree().map_or(true, |d| d == 0) {
            return vec![];
        }
        let mut out = Vec::new();
        let d = self.derivative();
        let mut g = self.gcd(&d);
        let mut c = self.div_rem(&g).0;
        let mut i = 1u32;
        while c.degree().map_or(false, |d| d > 0) {
            let c_next = c.gcd(&g);
            let s = c.div_rem(&c_next).0;
            if s.degree().map_or(false, |d| d > 0) {
                out.push((s, i));
            }
            g = g.div_rem(&c_next).0;
            c = c_next;
            i += 1;
        }
        out
    }
}

/// Resultant of two univariate polynomials over the field via Gaussian
/// elimination on the Sylvester matrix. Errors on zero input.
pub fn resultant_uni(p: &UniPoly, q: &UniPoly) -> Result<FieldScalar> {
    let (dp, dq) = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::Precondition(
                "resultant of the zero polynomial".into(),
            ))
        }
    };
    let field = p.field.clone();
    if dp == 0 && dq == 0 {
        return Ok(FieldScalar::one(&field));
    }
    if dp == 0 {
        return Ok(p.coeffs[0].pow(dq as u32));
    }
    if dq == 0 {
        return Ok(q.coeffs[0].pow(dp as u32));
    }
    let n = dp + dq;
    let mut m = vec![vec![FieldScalar::zero(&field); n]; n];
    for r in 0..dq {
        for (k, c) in p.coeffs.iter().enumerate() {
            m[r][r + dp - k] = c.clone();
        }
    }
    for r in 0..dp {
        for (k, c) in q.coeffs.iter().enumerate() {
            m[dq + r][r + dq - k] = c.clone();
        }
    }
    // plain elimination over the field
    let mut det = FieldScalar::one(&field);
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero());
        let pr = match pivot {
            Some(r) => r,
            None => return Ok(FieldScalar::zero(&field)),
        };
        if pr != k {
            m.swap(k, pr);
            det = det.neg();
        }
        det = det.mul(&m[k][k]);
        let inv = m[k][k].inv().unwrap();
        for r in k + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let factor = m[r][k].mul(&inv);
            for c in k..n {
                let sub = factor.mul(&m[k][c]);
                m[r][c] = m[r][c].sub(&sub);
            }
        }
    }
    Ok(det)
}

/// Resultant of two binary forms of their exact degrees (Sylvester on
/// dehomogenized coefficients, which agrees with the biresultant for forms
/// of full degree in x).
pub fn resultant_binforms(p: &BinaryForm, q: &BinaryForm) -> Result<FieldScalar> {
    crate::precondition!(!p.is_zero() && !q.is_zero(), "resultant of zero form");
    let pu = UniPoly::new(p.field.clone(), p.coeffs.clone());
    let qu = UniPoly::new(q.field.clone(), q.coeffs.clone());
    resultant_uni(&pu, &qu)
}

// --- rational and field-rational roots ----------------------------------

/// Exhaustively factor n by trial division up to the bound; returns the
/// factor list and true when the factorization is complete.
fn trial_factor(mut n: BigInt, bound: u64) -> (Vec<(BigInt, u32)>, bool) {
    let mut out = Vec::new();
    if n.is_negative() {
        n = -n;
    }
    if n.is_zero() || n.is_one() {
        return (out, true);
    }
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(bound);
    while &p * &p <= n && p <= bound {
        if n.is_multiple_of(&p) {
            let mut e = 0;
            while n.is_multiple_of(&p) {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1u32;
    }
    if n.is_one() {
        (out, true)
    } else if &n <= &bound || out.is_empty() && n.sqrt().pow(2) != n {
        // leftover is prime (no divisor below its square root)
        out.push((n, 1));
        (out, true)
    } else {
        // leftover could be composite with large factors
        out.push((n, 1));
        (out, false)
    }
}

fn divisors(factors: &[(BigInt, u32)], cap: usize) -> (Vec<BigInt>, bool) {
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = &acc * p;
                next.push(acc.clone());
            }
        }
        out = next;
        if out.len() > cap {
            out.truncate(cap);
            return (out, false);
        }
    }
    (out, true)
}

/// Rational roots of a univariate polynomial over ℚ with multiplicities.
/// The boolean reports whether the search was exhaustive.
pub fn rational_roots(p: &UniPoly) -> (Vec<(Rational, u32)>, bool) {
    let mut complete = true;
    let mut found: Vec<(Rational, u32)> = Vec::new();
    if p.degree().map_or(true, |d| d == 0) {
        return (found, true);
    }
    for (sf, mult) in p.squarefree_decomposition() {
        if sf.degree() == Some(0) {
            continue;
        }
        // strip root 0
        let mut coeffs: Vec<Rational> = sf
            .coeffs
            .iter()
            .map(|c| c.as_rational().cloned().unwrap_or_else(Rational::zero))
            .collect();
        // callers guarantee rational coefficients here
        let mut shift = 0usize;
        while coeffs.first().map_or(false, |c| c.is_zero()) {
            coeffs.remove(0);
            shift += 1;
        }
        if shift > 0 {
            found.push((Rational::zero(), mult));
        }
        if coeffs.len() <= 1 {
            continue;
        }
        if coeffs.len() == 2 {
            // linear: exact root
            found.push(((-&coeffs[0]) / &coeffs[1], mult));
            continue;
        }
        // clear denominators to a primitive integer polynomial
        let mut l = BigInt::one();
        for c in &coeffs {
            l = num_integer::lcm(l, c.denom().clone());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let a0 = ints[0].clone();
        let an = ints.last().unwrap().clone();
        let (f0, c0) = trial_factor(a0, 1_000_000);
        let (fn_, cn) = trial_factor(an, 1_000_000);
        let (d0, cd0) = divisors(&f0, 4096);
        let (dn, cdn) = divisors(&fn_, 4096);
        complete &= c0 && cn && cd0 && cdn;
        let eval = |r: &Rational| -> bool {
            let mut acc = Rational::zero();
            for c in ints.iter().rev() {
                acc = acc * r + Rational::from_integer(c.clone());
            }
            acc.is_zero()
        };
        for num in &d0 {
            for den in &dn {
                if num.gcd(den) != BigInt::one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Rational::new(num * BigInt::from(sign), den.clone());
                    if eval(&cand) {
                        found.push((cand, mult));
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    (found, complete)
}

/// Roots of a univariate polynomial lying in its base field, with
/// multiplicities. Complete for fields of degree ≤ 2; for larger fields
/// only ℚ-rational roots are searched and the flag reports incompleteness
/// when the polynomial could still have roots in the field.
pub fn field_roots(p: &UniPoly) -> Result<(Vec<(FieldScalar, u32)>, bool)> {
    let field = p.field.clone();
    let d = field.degree();
    if p.is_zero() {
        return Err(Error::Precondition("roots of the zero polynomial".into()));
    }
    let mut out: Vec<(FieldScalar, u32)> = Vec::new();
    let mut complete = true;
    for (sf, mult) in p.squarefree_decomposition() {
        let deg = match sf.degree() {
            Some(d) if d > 0 => d,
            _ => continue,
        };
        if d == 1 {
            let (roots, c) = rational_roots(&sf);
            complete &= c;
            for (r, _) in roots {
                out.push((FieldScalar::from_rational(&field, r), mult));
            }
            continue;
        }
        if d == 2 {
            // root u + vα: expand the two power-basis coordinate equations
            // as bivariate polynomials in (u, v) and intersect
            let (pu, pv) = coordinate_system(&sf)?;
            let res_u = crate::geometry::resultant_wrt(&pu, &pv, true)?; // eliminate v
            let res_v = crate::geometry::resultant_wrt(&pu, &pv, false)?;
            if res_u.is_zero() || res_v.is_zero() {
                // common factor: fall back to a direct scan over rational
                // candidates of one coordinate polynomial
                complete = false;
                continue;
            }
            let (us, cu) = rational_roots(&to_unipoly_x(&res_u));
            let (vs, cv) = rational_roots(&to_unipoly_y(&res_v));
            complete &= cu && cv;
            for (u, _) in &us {
                for (v, _) in &vs {
                    let cand = FieldScalar::new(&field, vec![u.clone(), v.clone()])?;
                    if sf.eval(&cand).is_zero() {
                        out.push((cand, mult));
                    }
                }
            }
            let expected = deg; // distinct roots ≤ deg
            let _ = expected;
            continue;
        }
        // degree ≥ 3 extension: rational roots only
        let mut rational_only = true;
        for c in &sf.coeffs {
            if c.as_rational().is_none() {
                rational_only = false;
            }
        }
        if rational_only {
            let coeffs: Vec<FieldScalar> = sf.coeffs.clone();
            let qp = UniPoly::new(field.clone(), coeffs);
            // reuse the d == 1 style search on the rational coordinates
            let rs: Vec<Rational> = qp
                .coeffs
                .iter()
                .map(|c| c.as_rational().cloned().unwrap())
                .collect();
            let q = crate::field::NumberField::rationals();
            let qq = UniPoly::new(
                q.clone(),
                rs.into_iter()
                    .map(|r| FieldScalar::from_rational(&q, r))
                    .collect(),
            );
            let (roots, c) = rational_roots(&qq);
            complete &= c;
            for (r, _) in roots {
                out.push((FieldScalar::from_rational(&field, r), mult));
            }
            if qp.degree().map_or(false, |d| d > 0) {
                complete = false; // non-rational roots in the field not searched
            }
        } else {
            complete = false;
        }
    }
    Ok((out, complete))
}

/// Coordinate decomposition of p(u + vα) over a degree-2 field: the pair of
/// bivariate rational-coefficient polynomials (P₀, P₁) with
/// p(u + vα) = P₀(u,v) + P₁(u,v)·α.
fn coordinate_system(p: &UniPoly) -> Result<(MultiPoly, MultiPoly)> {
    let field = p.field.clone();
    let q = crate::field::NumberField::rationals();
    let (u, v) = crate::poly::xy(&q);
    // powers of (u + vα) as pairs of rational polynomials
    let m = field.min_poly();
    let m0 = m[0].clone();
    let m1 = m[1].clone();
    let mut pw0 = MultiPoly::one(&q);
    let mut pw1 = MultiPoly::zero(&q);
    let mut acc0 = MultiPoly::zero(&q);
    let mut acc1 = MultiPoly::zero(&q);
    for c in &p.coeffs {
        let c0 = MultiPoly::constant(FieldScalar::from_rational(&q, c.coords()[0].clone()));
        let c1 = MultiPoly::constant(FieldScalar::from_rational(&q, c.coords()[1].clone()));
        // (c0 + c1 α)(pw0 + pw1 α) = c0 pw0 + c1 pw1 α² + (c0 pw1 + c1 pw0)α
        // α² = −m0 − m1 α
        let t0 = c0.mul(&pw0).sub(
            &c1.mul(&pw1)
                .mul_rational_ref(&m0),
        );
        let t1 = c0
            .mul(&pw1)
            .add(&c1.mul(&pw0))
            .sub(&c1.mul(&pw1).mul_rational_ref(&m1));
        acc0 = acc0.add(&t0);
        acc1 = acc1.add(&t1);
        // advance power: (pw)·(u + vα)
        let n0 = pw0.mul(&u).sub(&pw1.mul(&v).mul_rational_ref(&m0));
        let n1 = pw0.mul(&v).add(&pw1.mul(&u)).sub(&pw1.mul(&v).mul_rational_ref(&m1));
        pw0 = n0;
        pw1 = n1;
    }
    Ok((acc0, acc1))
}

fn to_unipoly_x(p: &MultiPoly) -> UniPoly {
    let field = p.field().clone();
    let mut coeffs = vec![FieldScalar::zero(&field); p.degree_x() as usize + 1];
    for (m, c) in p.terms() {
        debug_assert_eq!(m.j, 0);
        coeffs[m.i as usize] = c.clone();
    }
    UniPoly::new(field, coeffs)
}

fn to_unipoly_y(p: &MultiPoly) -> UniPoly {
    let field = p.field().clone();
    let mut coeffs = vec![FieldScalar::zero(&field); p.degree_y() as usize + 1];
    for (m, c) in p.terms() {
        debug_assert_eq!(m.i, 0);
        coeffs[m.j as usize] = c.clone();
    }
    UniPoly::new(field, coeffs)
}

/// Field roots of a bivariate polynomial that involves only one variable.
pub fn field_roots_single_var(
    p: &MultiPoly,
    is_y: bool,
) -> Result<Vec<(FieldScalar, u32)>> {
    if p.is_constant() {
        return Ok(vec![]);
    }
    let up = if is_y { to_unipoly_y(p) } else { to_unipoly_x(p) };
    let (roots, _complete) = field_roots(&up)?;
    Ok(roots)
}

/// Square root within the field, when one exists. Complete for degree ≤ 2
/// fields; over larger fields only rational squares are recognized.
pub fn field_sqrt(c: &FieldScalar) -> Option<FieldScalar> {
    let field = c.field().clone();
    if c.is_zero() {
        return Some(FieldScalar::zero(&field));
    }
    if let Some(r) = c.as_rational() {
        if let Some(s) = rational_sqrt(r) {
            return Some(FieldScalar::from_rational(&field, s));
        }
        if field.degree() != 2 {
            return None;
        }
    }
    if field.degree() != 2 {
        return None;
    }
    // z = u + vα with z² = c: with minpoly t² + m₁ t + m₀,
    //   u² − m₀ v² = c₀ and 2uv − m₁ v² = c₁.
    let m = field.min_poly();
    let (m0, m1) = (m[0].clone(), m[1].clone());
    let c0 = c.coords()[0].clone();
    let c1 = c.coords()[1].clone();
    if c1.is_zero() {
        // v = 0 handled above (rational square); try u = (c₁ + m₁v²)/(2v)
        // with v ≠ 0 below as well
    }
    // (c₁ + m₁ v²)² − 4 m₀ v⁴ = 4 c₀ v², quadratic in w = v²:
    // (m₁² − 4m₀) w² + (2 c₁ m₁ − 4 c₀) w + c₁² = 0
    let a = &m1 * &m1 - Rational::from_integer(BigInt::from(4)) * &m0;
    let b = Rational::from_integer(BigInt::from(2)) * &c1 * &m1
        - Rational::from_integer(BigInt::from(4)) * &c0;
    let cc = &c1 * &c1;
    let candidates_w: Vec<Rational> = if a.is_zero() {
        if b.is_zero() {
            vec![]
        } else {
            vec![-cc / b]
        }
    } else {
        let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &a * &cc;
        match rational_sqrt(&disc) {
            None => vec![],
            Some(s) => {
                let two_a = Rational::from_integer(BigInt::from(2)) * &a;
                vec![(-&b + &s) / &two_a, (-&b - &s) / &two_a]
            }
        }
    };
    for w in candidates_w {
        if w.is_negative() && w.denom().is_one() && false {
            continue;
        }
        if let Some(v) = rational_sqrt(&w) {
            for v in [v.clone(), -v] {
                if v.is_zero() {
                    continue;
                }
                let u = (&c1 + &m1 * &v * &v) / (Rational::from_integer(BigInt::from(2)) * &v);
                let z = FieldScalar::new(&field, vec![u, v.clone()]).unwrap();
                if z.mul(&z) == *c {
                    return Some(z);
                }
            }
        }
    }
    // pure rational square residing in a quadratic field
    if let Some(r) = c.as_rational() {
        if let Some(s) = rational_sqrt(r) {
            return Some(FieldScalar::from_rational(&field, s));
        }
        // c rational but its square root is α-proportional: z = vα with
        // z² = v²α² = −v²(m₀ + m₁α): needs m₁ = 0 and c = −v² m₀
        if m1.is_zero() && !m0.is_zero() {
            let v2 = -(r / &m0);
            if let Some(v) = rational_sqrt(&v2) {
                return Some(FieldScalar::new(&field, vec![Rational::zero(), v]).unwrap());
            }
        }
    }
    None
}

/// Exact rational square root when both numerator and denominator are
/// perfect squares.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// A linear factor with multiplicity plus the residual form.
pub struct LinearFactors {
    /// Each factor is a degree-1 binary form βx − αy vanishing at [α : β].
    pub factors: Vec<(BinaryForm, u32)>,
    /// Residual form carrying no field-rational root.
    pub residual: BinaryForm,
    /// True when the residual provably has no field-rational roots (root
    /// search was exhaustive).
    pub complete: bool,
}

/// Extract all field-rational roots of a binary form (including the root at
/// infinity [0 : 1]) with multiplicities, and the residual.
pub fn linear_factors(f: &BinaryForm) -> Result<LinearFactors> {
    crate::precondition!(!f.is_zero(), "factors of the zero form");
    let field = f.field().clone();
    let deh = f.dehomogenized();
    let deg_t = deh.degree().unwrap_or(0);
    let inf_mult = (f.degree() - deg_t) as u32;
    let mut factors = Vec::new();
    if inf_mult > 0 {
        // the factor x, vanishing at [0 : 1]
        let xform = BinaryForm::new(
            &field,
            1,
            vec![FieldScalar::one(&field), FieldScalar::zero(&field)],
        )?;
        factors.push((xform, inf_mult));
    }
    let (roots, complete) = field_roots(&deh)?;
    let mut residual = deh;
    for (t0, mult) in &roots {
        // factor y − t₀x as a form: coeffs [−t₀, 1]
        let lin = BinaryForm::new(&field, 1, vec![t0.neg(), FieldScalar::one(&field)])?;
        factors.push((lin, *mult));
        let divisor = UniPoly::new(field.clone(), vec![t0.neg(), FieldScalar::one(&field)]);
        for _ in 0..*mult {
            let (q, r) = residual.div_rem(&divisor);
            debug_assert!(r.is_zero());
            residual = q;
        }
    }
    // residual re-homogenized to its own degree
    let rdeg = residual.degree().unwrap_or(0);
    let mut rc = residual.coeffs.clone();
    rc.resize(rdeg + 1, FieldScalar::zero(&field));
    let residual = BinaryForm::new(&field, rdeg, rc)?;
    Ok(LinearFactors {
        factors,
        residual,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat, NumberField};

    #[test]
    fn resultant_spec_examples() {
        let f = NumberField::rationals();
        // Res_z(z², z+1) = 1 (3×3 Sylvester determinant)
        let p = UniPoly::new(f.clone(), vec![
            FieldScalar::zero(&f),
            FieldScalar::zero(&f),
            FieldScalar::one(&f),
        ]);
        let q = UniPoly::new(f.clone(), vec![FieldScalar::one(&f), FieldScalar::one(&f)]);
        assert!(resultant_uni(&p, &q).unwrap().is_one());
        // Res(p, p) = 0 for non-constant p
        assert!(resultant_uni(&q, &q).unwrap().is_zero());
        // zero input rejected
        assert!(resultant_uni(&UniPoly::zero(&f), &q).is_err());
    }

    #[test]
    fn resultant_multiplicative_on_forms() {
        let f = NumberField::rationals();
        let a = BinaryForm::from_ints(&f, 2, &[1, 3, 1]);
        let b = BinaryForm::from_ints(&f, 1, &[2, -1]);
        let c = BinaryForm::from_ints(&f, 2, &[1, 0, 4]);
        let lhs = resultant_binforms(&a.mul(&b), &c).unwrap();
        let rhs = resultant_binforms(&a, &c)
            .unwrap()
            .mul(&resultant_binforms(&b, &c).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_roots_basic() {
        let f = NumberField::rationals();
        // (t − 2)²(3t + 1): roots 2 (mult 2), −1/3
        let p = UniPoly::new(
            f.clone(),
            // 3t³ − 11t² + 8t + 4
            vec![
                FieldScalar::from_int(&f, 4),
                FieldScalar::from_int(&f, 8),
                FieldScalar::from_int(&f, -11),
                FieldScalar::from_int(&f, 3),
            ],
        );
        let (roots, complete) = rational_roots(&p);
        assert!(complete);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&(rat(-1, 3), 1)));
        assert!(roots.contains(&(int(2), 2)));
    }

    #[test]
    fn linear_factors_over_q() {
        let f = NumberField::rationals();
        // x² − y² → (x−y)(x+y), residual 1
        let form = BinaryForm::from_ints(&f, 2, &[1, 0, -1]);
        let lf = linear_factors(&form).unwrap();
        assert!(lf.complete);
        assert_eq!(lf.factors.len(), 2);
        assert_eq!(lf.residual.degree(), 0);
        // x² + y²: no rational roots
        let form2 = BinaryForm::from_ints(&f, 2, &[1, 0, 1]);
        let lf2 = linear_factors(&form2).unwrap();
        assert!(lf2.factors.is_empty());
        assert_eq!(lf2.residual.degree(), 2);
        assert!(lf2.complete);
    }

    #[test]
    fn linear_factors_over_qi() {
        // x² + y² over ℚ(i) splits into (x − iy)(x + iy)
        let f = NumberField::q_i();
        let form = BinaryForm::from_ints(&f, 2, &[1, 0, 1]);
        let lf = linear_factors(&form).unwrap();
        assert_eq!(lf.factors.len(), 2);
        assert_eq!(lf.residual.degree(), 0);
        // reconstruction up to unit
        let mut prod = BinaryForm::new(&f, 0, vec![FieldScalar::one(&f)]).unwrap();
        for (lin, m) in &lf.factors {
            for _ in 0..*m {
                prod = prod.mul(lin);
            }
        }
        prod = prod.mul(&lf.residual);
        assert!(prod.eq_projective(&form));
    }

    #[test]
    fn reconstruction_with_infinity_root() {
        let f = NumberField::rationals();
        // x y² (x − 2y): roots [0:1] (from x), [1:0] twice (y²), [2:1]
        let form = BinaryForm::from_points(
            &f,
            &[
                [FieldScalar::zero(&f), FieldScalar::one(&f)],
                [FieldScalar::one(&f), FieldScalar::zero(&f)],
                [FieldScalar::one(&f), FieldScalar::zero(&f)],
                [FieldScalar::from_int(&f, 2), FieldScalar::one(&f)],
            ],
        )
        .unwrap();
        let lf = linear_factors(&form).unwrap();
        let total: u32 = lf.factors.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 4);
        assert_eq!(lf.residual.degree(), 0);
        let mut prod = BinaryForm::new(&f, 0, vec![FieldScalar::one(&f)]).unwrap();
        for (lin, m) in &lf.factors {
            for _ in 0..*m {
                prod = prod.mul(lin);
            }
        }
        prod = prod.mul(&lf.residual);
        assert!(prod.eq_projective(&form));
    }

    #[test]
    fn field_roots_quadratic_extension() {
        // t² + t + 1 over ℚ(ξ₃): roots ξ₃ and ξ₃²
        let f = NumberField::q_xi3();
        let p = UniPoly::new(
            f.clone(),
            vec![
                FieldScalar::one(&f),
                FieldScalar::one(&f),
                FieldScalar::one(&f),
            ],
        );
        let (roots, complete) = field_roots(&p).unwrap();
        assert!(complete);
        assert_eq!(roots.len(), 2);
        let xi = FieldScalar::generator(&f);
        let set: Vec<&FieldScalar> = roots.iter().map(|(r, _)| r).collect();
        assert!(set.contains(&&xi));
        assert!(set.contains(&&xi.pow(2)));
    }

    #[test]
    fn field_sqrt_cases() {
        let f = NumberField::rationals();
        assert_eq!(
            field_sqrt(&FieldScalar::from_rational(&f, rat(9, 4))),
            Some(FieldScalar::from_rational(&f, rat(3, 2)))
        );
        assert_eq!(field_sqrt(&FieldScalar::from_int(&f, 2)), None);
        // over ℚ(i): sqrt(−1) = ±i, sqrt(2i) = 1 + i
        let fi = NumberField::q_i();
        let i = FieldScalar::generator(&fi);
        let s = field_sqrt(&FieldScalar::from_int(&fi, -1)).unwrap();
        assert!(s == i || s == i.neg());
        let two_i = i.mul(&FieldScalar::from_int(&fi, 2));
        let s2 = field_sqrt(&two_i).unwrap();
        assert_eq!(s2.mul(&s2), two_i);
        // over ℚ(ξ₃): sqrt(−3) = 1 + 2ξ₃ (since (1+2ξ₃)² = −3)
        let f3 = NumberField::q_xi3();
        let target = FieldScalar::from_int(&f3, -3);
        let s3 = field_sqrt(&target).unwrap();
        assert_eq!(s3.mul(&s3), target);
    }

    #[test]
    fn yun_decomposition() {
        let f = NumberField::rationals();
        // (t−1)³(t+2): factors of multiplicity 3 and 1
        let a = UniPoly::new(f.clone(), vec![FieldScalar::from_int(&f, -1), FieldScalar::one(&f)]);
        let b = UniPoly::new(f.clone(), vec![FieldScalar::from_int(&f, 2), FieldScalar::one(&f)]);
        let p = a.mul(&a).mul(&a).mul(&b);
        let dec = p.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        let mults: Vec<u32> = dec.iter().map(|(_, m)| *m).collect();
        assert!(mults.contains(&1) && mults.contains(&3));
    }
}
