//! Truncated Taylor expansions at a field-rational base point.
//!
//! A jet stores the coefficients of the shifted monomials
//! (x − x₀)^i (y − y₀)^j for i + j ≤ N; arithmetic truncates at order N.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Field, FieldScalar};
use crate::poly::MultiPoly;
use crate::ratfunc::RatFunc;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct JetSeries {
    pub base: (FieldScalar, FieldScalar),
    pub order: u32,
    /// (i, j) ↦ coefficient of (x − x₀)^i (y − y₀)^j, zero entries dropped.
    coeffs: BTreeMap<(u16, u16), FieldScalar>,
}

impl fmt::Debug for JetSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet(order {}, {} terms)", self.order, self.coeffs.len())
    }
}

impl JetSeries {
    pub fn zero(field: &Field, base: (FieldScalar, FieldScalar), order: u32) -> Self {
        let _ = field;
        JetSeries {
            base,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: FieldScalar, base: (FieldScalar, FieldScalar), order: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((0, 0), c);
        }
        JetSeries {
            base,
            order,
            coeffs,
        }
    }

    pub fn coeff(&self, i: u16, j: u16) -> Option<&FieldScalar> {
        self.coeffs.get(&(i, j))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&(u16, u16), &FieldScalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert(&mut self, key: (u16, u16), c: FieldScalar) {
        if (key.0 as u32 + key.1 as u32) > self.order || c.is_zero() {
            return;
        }
        self.coeffs.insert(key, c);
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.base, other.base);
        let order = self.order.min(other.order);
        let mut out = JetSeries {
            base: self.base.clone(),
            order,
            coeffs: BTreeMap::new(),
        };
        for (k, c) in self.coeffs.iter().chain(other.coeffs.iter()) {
            if (k.0 as u32 + k.1 as u32) > order {
                continue;
            }
            let cur = out
                .coeffs
                .get(k)
                .cloned()
                .map(|x| x.add(c))
                .unwrap_or_else(|| c.clone());
            if cur.is_zero() {
                out.coeffs.remove(k);
            } else {
                out.coeffs.insert(*k, cur);
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        if c.is_zero() {
            return JetSeries {
                base: self.base.clone(),
                order: self.order,
                coeffs: BTreeMap::new(),
            };
        }
        JetSeries {
            base: self.base.clone(),
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, x)| (*k, x.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.base, other.base);
        let order = self.order.min(other.order);
        let mut out = JetSeries {
            base: self.base.clone(),
            order,
            coeffs: BTreeMap::new(),
        };
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                let key = (k1.0 + k2.0, k1.1 + k2.1);
                if (key.0 as u32 + key.1 as u32) > order {
                    continue;
                }
                let add = c1.mul(c2);
                let cur = out
                    .coeffs
                    .get(&key)
                    .cloned()
                    .map(|x| x.add(&add))
                    .unwrap_or(add);
                if cur.is_zero() {
                    out.coeffs.remove(&key);
                } else {
                    out.coeffs.insert(key, cur);
                }
            }
        }
        out
    }

    /// Multiplicative inverse of a jet with nonzero constant term:
    /// geometric-series expansion truncated at the jet order.
    pub fn inv(&self) -> Result<Self> {
        let c0 = self
            .coeff(0, 0)
            .cloned()
            .ok_or(Error::DivisionByZero)?;
        let c0_inv = c0.inv()?;
        // self = c0 (1 − u) with ord(u) ≥ 1; 1/self = c0⁻¹ Σ u^k
        let field = c0.field().clone();
        let mut u = self.scale(&c0_inv.neg());
        u.coeffs.remove(&(0, 0));
        let one = JetSeries::constant(FieldScalar::one(&field), self.base.clone(), self.order);
        let mut acc = one.clone();
        let mut pw = one;
        for _ in 0..self.order {
            pw = pw.mul(&u);
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw);
        }
        Ok(acc.scale(&c0_inv))
    }
}

/// Exact Taylor jet of a polynomial at a base point: expands through the
/// binomial shift x ↦ x₀ + (x − x₀), y ↦ y₀ + (y − y₀).
pub fn poly_jet(p: &MultiPoly, base: &(FieldScalar, FieldScalar), order: u32) -> JetSeries {
    let field = p.field().clone();
    let mut out = JetSeries::zero(&field, base.clone(), order);
    // precompute binomial rows up to needed degree
    let dx = p.degree_x() as usize;
    let dy = p.degree_y() as usize;
    let binom = pascal(dx.max(dy) + 1);
    let xp = powers(&base.0, dx);
    let yp = powers(&base.1, dy);
    for (m, c) in p.terms() {
        // (x₀ + s)^i (y₀ + t)^j, s = x − x₀
        for a in 0..=m.i as usize {
            for b in 0..=m.j as usize {
                if (a + b) as u32 > order {
                    continue;
                }
                let coef = c
                    .mul_rational(&binom[m.i as usize][a])
                    .mul_rational(&binom[m.j as usize][b])
                    .mul(&xp[m.i as usize - a])
                    .mul(&yp[m.j as usize - b]);
                let key = (a as u16, b as u16);
                let cur = out
                    .coeffs
                    .get(&key)
                    .cloned()
                    .map(|x| x.add(&coef))
                    .unwrap_or(coef);
                if cur.is_zero() {
                    out.coeffs.remove(&key);
                } else {
                    out.insert(key, cur);
                }
            }
        }
    }
    out
}

fn pascal(n: usize) -> Vec<Vec<crate::field::Rational>> {
    use num_traits::One;
    let mut rows: Vec<Vec<crate::field::Rational>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![crate::field::Rational::one(); i + 1];
        for k in 1..i {
            row[k] = rows[i - 1][k - 1].clone() + &rows[i - 1][k];
        }
        rows.push(row);
    }
    rows
}

fn powers(c: &FieldScalar, n: usize) -> Vec<FieldScalar> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(FieldScalar::one(c.field()));
    for _ in 0..n {
        out.push(out.last().unwrap().mul(c));
    }
    out
}

/// Exact Taylor jet of a rational function at a point off its polar locus.
pub fn taylor_jet(r: &RatFunc, base: &(FieldScalar, FieldScalar), order: u32) -> Result<JetSeries> {
    let den0 = r.den().eval(&base.0, &base.1);
    if den0.is_zero() {
        return Err(Error::Precondition(
            "base point lies on the polar locus".into(),
        ));
    }
    let num = poly_jet(r.num(), base, order);
    let den = poly_jet(r.den(), base, order);
    Ok(num.mul(&den.inv()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, NumberField};
    use crate::poly::xy;
    use crate::ratfunc::ratfn;

    #[test]
    fn geometric_series() {
        let f = NumberField::rationals();
        // 1/(1 − x) at origin, order 2: 1 + x + x²
        let r = ratfn(&f, &[(0, 0, 1)], &[(0, 0, 1), (1, 0, -1)]);
        let base = (FieldScalar::zero(&f), FieldScalar::zero(&f));
        let j = taylor_jet(&r, &base, 2).unwrap();
        for k in 0..=2u16 {
            assert_eq!(j.coeff(k, 0), Some(&FieldScalar::one(&f)));
        }
        assert!(j.coeff(0, 1).is_none());
    }

    #[test]
    fn exact_expansion_of_xy_at_one_one() {
        let f = NumberField::rationals();
        let r = ratfn(&f, &[(1, 1, 1)], &[(0, 0, 1)]);
        let base = (FieldScalar::one(&f), FieldScalar::one(&f));
        let j = taylor_jet(&r, &base, 2).unwrap();
        // xy = 1 + (x−1) + (y−1) + (x−1)(y−1)
        assert_eq!(j.coeff(0, 0), Some(&FieldScalar::one(&f)));
        assert_eq!(j.coeff(1, 0), Some(&FieldScalar::one(&f)));
        assert_eq!(j.coeff(0, 1), Some(&FieldScalar::one(&f)));
        assert_eq!(j.coeff(1, 1), Some(&FieldScalar::one(&f)));
        assert_eq!(j.coeffs.len(), 4);
    }

    #[test]
    fn hand_partials_oracle() {
        let f = NumberField::rationals();
        // x/(x+y) at (1,1), order 1: 1/2 + (x−1)/4 − (y−1)/4
        let r = ratfn(&f, &[(1, 0, 1)], &[(1, 0, 1), (0, 1, 1)]);
        let base = (FieldScalar::one(&f), FieldScalar::one(&f));
        let j = taylor_jet(&r, &base, 1).unwrap();
        assert_eq!(
            j.coeff(0, 0),
            Some(&FieldScalar::from_rational(&f, rat(1, 2)))
        );
        assert_eq!(
            j.coeff(1, 0),
            Some(&FieldScalar::from_rational(&f, rat(1, 4)))
        );
        assert_eq!(
            j.coeff(0, 1),
            Some(&FieldScalar::from_rational(&f, rat(-1, 4)))
        );
    }

    #[test]
    fn polar_base_point_rejected() {
        let f = NumberField::rationals();
        let r = ratfn(&f, &[(0, 0, 1)], &[(1, 0, 1)]); // 1/x
        let base = (FieldScalar::zero(&f), FieldScalar::zero(&f));
        assert!(taylor_jet(&r, &base, 3).is_err());
    }

    #[test]
    fn jets_respect_sum_and_product() {
        let f = NumberField::rationals();
        let (x, y) = xy(&f);
        let r1 = RatFunc::new(x.add(&y), x.sub(&y)).unwrap();
        let r2 = RatFunc::new(y.mul(&y).add(&MultiPoly::one(&f)), x.clone()).unwrap();
        let base = (FieldScalar::from_int(&f, 2), FieldScalar::from_int(&f, 1));
        let order = 4;
        let j1 = taylor_jet(&r1, &base, order).unwrap();
        let j2 = taylor_jet(&r2, &base, order).unwrap();
        assert_eq!(
            taylor_jet(&r1.add(&r2), &base, order).unwrap(),
            j1.add(&j2)
        );
        assert_eq!(
            taylor_jet(&r1.mul(&r2), &base, order).unwrap(),
            j1.mul(&j2)
        );
    }

    #[test]
    fn recomposition_matches_polynomial() {
        let f = NumberField::rationals();
        let (x, y) = xy(&f);
        let p = x.pow(3).mul(&y).add(&y.pow(2)).sub(&MultiPoly::one(&f));
        let base = (FieldScalar::from_int(&f, -1), FieldScalar::from_int(&f, 2));
        let order = p.total_degree();
        let j = poly_jet(&p, &base, order);
        // recompose: substitute x = x0 + s, y = y0 + t symbolically
        let s = x.sub(&MultiPoly::constant(base.0.clone()));
        let t = y.sub(&MultiPoly::constant(base.1.clone()));
        let mut rec = MultiPoly::zero(&f);
        for (k, c) in j.coeffs() {
            rec = rec.add(
                &s.pow(k.0 as u32)
                    .mul(&t.pow(k.1 as u32))
                    .mul_scalar(c),
            );
        }
        assert_eq!(rec, p);
    }
}
