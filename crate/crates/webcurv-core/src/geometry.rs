//! Differential objects on the affine chart ℂ² ⊂ P².
//!
//! Everything is expressed in the chart z = 1; the line at infinity is
//! handled by explicit projective changes of coordinates (fractional-linear
//! substitution followed by denominator clearing).

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Field, FieldScalar};
use crate::poly::{poly_gcd, squarefree_part, MultiPoly, ZPoly};
use crate::ratfunc::RatFunc;
use crate::{Error, Result};

/// Meromorphic 1-form a·dx + b·dy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneForm {
    pub a: RatFunc,
    pub b: RatFunc,
}

impl OneForm {
    pub fn new(a: RatFunc, b: RatFunc) -> Result<Self> {
        crate::precondition!(!(a.is_zero() && b.is_zero()), "zero 1-form");
        Ok(OneForm { a, b })
    }

    pub fn from_polys(a: MultiPoly, b: MultiPoly) -> Result<Self> {
        Self::new(RatFunc::from_poly(a), RatFunc::from_poly(b))
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn add(&self, other: &Self) -> Self {
        OneForm {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        OneForm {
            a: self.a.sub(&other.a),
            b: self.b.sub(&other.b),
        }
    }

    pub fn mul(&self, f: &RatFunc) -> Self {
        OneForm {
            a: self.a.mul(f),
            b: self.b.mul(f),
        }
    }

    /// The exact differential dR of a rational function.
    pub fn d(r: &RatFunc) -> Self {
        OneForm {
            a: r.dx(),
            b: r.dy(),
        }
    }
}

/// Meromorphic 2-form c·dx∧dy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoForm {
    pub c: RatFunc,
}

impl TwoForm {
    pub fn zero(field: &Field) -> Self {
        TwoForm {
            c: RatFunc::zero(field),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }
}

/// Rational vector field u·∂x + v·∂y.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    pub u: RatFunc,
    pub v: RatFunc,
}

impl VectorField {
    pub fn new(u: RatFunc, v: RatFunc) -> Result<Self> {
        crate::precondition!(!(u.is_zero() && v.is_zero()), "zero vector field");
        Ok(VectorField { u, v })
    }

    /// The radial field x∂x + y∂y.
    pub fn radial(field: &Field) -> Self {
        VectorField {
            u: RatFunc::from_poly(MultiPoly::var_x(field)),
            v: RatFunc::from_poly(MultiPoly::var_y(field)),
        }
    }
}

/// Exterior derivative of a 1-form: d(a dx + b dy) = (∂b/∂x − ∂a/∂y) dx∧dy.
pub fn exterior_d(w: &OneForm) -> TwoForm {
    TwoForm {
        c: w.b.dx().sub(&w.a.dy()),
    }
}

/// Wedge product of two 1-forms: coefficient a₁b₂ − a₂b₁ of dx∧dy.
pub fn wedge(w1: &OneForm, w2: &OneForm) -> TwoForm {
    TwoForm {
        c: w1.a.mul(&w2.b).sub(&w2.a.mul(&w1.b)),
    }
}

/// Contraction i_X ω = a·u + b·v.
pub fn contract(x: &VectorField, w: &OneForm) -> RatFunc {
    w.a.mul(&x.u).add(&w.b.mul(&x.v))
}

/// A holomorphic foliation of the plane presented by its unit-free
/// polynomial 1-form a·dx + b·dy: gcd(a, b) = 1, primitive coefficients,
/// sign-normalized. Equality of classes is structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Foliation {
    a: MultiPoly,
    b: MultiPoly,
}

impl fmt::Debug for Foliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({})dx + ({})dy]", self.a, self.b)
    }
}

impl Foliation {
    /// Normalize a polynomial 1-form to its canonical class representative.
    pub fn new(a: MultiPoly, b: MultiPoly) -> Result<Self> {
        crate::precondition!(!(a.is_zero() && b.is_zero()), "zero defining form");
        let g = poly_gcd(&a, &b);
        let a = a.div_exact(&g).expect("gcd divides");
        let b = b.div_exact(&g).expect("gcd divides");
        // joint normalization with a single unit for the pair, anchored at
        // the graded-lex leader of the two coefficients
        let joint = pick_leader(&a, &b);
        let norm = joint.normalize_primitive();
        let unit = crate::ratfunc::proportionality(&norm, &joint)
            .expect("normalization is proportional");
        Ok(Foliation {
            a: a.mul_scalar(&unit),
            b: b.mul_scalar(&unit),
        })
    }

    /// Foliation of a meromorphic 1-form: clears denominators, then
    /// normalizes.
    pub fn from_one_form(w: &OneForm) -> Result<Self> {
        let den_gcd = poly_gcd(w.a.den(), w.b.den());
        let lcm = w.a.den().mul(&w.b.den().div_exact(&den_gcd).unwrap());
        let a = w.a.num().mul(&lcm.div_exact(w.a.den()).unwrap());
        let b = w.b.num().mul(&lcm.div_exact(w.b.den()).unwrap());
        Foliation::new(a, b)
    }

    /// Level foliation of a rational first integral: [dR].
    pub fn from_first_integral(r: &RatFunc) -> Result<Self> {
        crate::precondition!(!r.is_constant(), "constant first integral");
        Self::from_one_form(&OneForm::d(r))
    }

    /// Pencil of lines through a projective point [p0 : p1 : p2].
    ///
    /// Finite point (x₀, y₀) ↦ (y − y₀)dx − (x − x₀)dy; infinite point
    /// [a : b : 0] ↦ b·dx − a·dy.
    pub fn pencil(field: &Field, p: &[FieldScalar; 3]) -> Result<Self> {
        crate::precondition!(
            !(p[0].is_zero() && p[1].is_zero() && p[2].is_zero()),
            "pencil base point must be a projective point"
        );
        if p[2].is_zero() {
            let a = MultiPoly::constant(p[1].clone());
            let b = MultiPoly::constant(p[0].neg());
            Foliation::new(a, b)
        } else {
            let x0 = p[0].div(&p[2])?;
            let y0 = p[1].div(&p[2])?;
            let (x, y) = crate::poly::xy(field);
            let a = y.sub(&MultiPoly::constant(y0));
            let b = x.sub(&MultiPoly::constant(x0)).neg();
            Foliation::new(a, b)
        }
    }

    pub fn a(&self) -> &MultiPoly {
        &self.a
    }

    pub fn b(&self) -> &MultiPoly {
        &self.b
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn one_form(&self) -> OneForm {
        OneForm {
            a: RatFunc::from_poly(self.a.clone()),
            b: RatFunc::from_poly(self.b.clone()),
        }
    }

    /// Tangent vector field X = b∂x − a∂y (contracts to zero against the
    /// defining form).
    pub fn tangent_field(&self) -> VectorField {
        VectorField {
            u: RatFunc::from_poly(self.b.clone()),
            v: RatFunc::from_poly(self.a.neg()),
        }
    }

    /// Degree as a foliation of P², read off the normal form a dx + b dy +
    /// h(x dy − y dx): the degree of homogeneous h when h ≠ 0, otherwise the
    /// top degree of x·a + y·b minus one (line at infinity invariant).
    pub fn degree(&self) -> u32 {
        let m = self.a.total_degree().max(self.b.total_degree());
        let (x, y) = crate::poly::xy(self.field());
        let radial = x
            .mul(&self.a.homogeneous_part(m))
            .add(&y.mul(&self.b.homogeneous_part(m)));
        if radial.is_zero() {
            // top part is h·(x dy − y dx) with h of degree m − 1
            m - 1
        } else {
            let full = x.mul(&self.a).add(&y.mul(&self.b));
            full.total_degree() - 1
        }
    }

    /// True when the line at infinity is invariant (h = 0 branch of the
    /// degree normal form).
    pub fn infinity_line_invariant(&self) -> bool {
        let m = self.a.total_degree().max(self.b.total_degree());
        let (x, y) = crate::poly::xy(self.field());
        let radial = x
            .mul(&self.a.homogeneous_part(m))
            .add(&y.mul(&self.b.homogeneous_part(m)));
        !radial.is_zero()
    }
}

fn pick_leader(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    // leading of the pair under graded lex, preferring a on ties
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return b.clone();
    }
    let (ma, _) = a.leading().unwrap();
    let (mb, _) = b.leading().unwrap();
    if ma >= mb {
        a.clone()
    } else {
        b.clone()
    }
}

/// An ordered completely decomposable web: pairwise distinct foliations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Web {
    foliations: Vec<Foliation>,
}

impl Web {
    pub fn new(foliations: Vec<Foliation>) -> Result<Self> {
        crate::precondition!(!foliations.is_empty(), "empty web");
        for i in 0..foliations.len() {
            for j in i + 1..foliations.len() {
                if foliations[i] == foliations[j] {
                    return Err(Error::Precondition(
                        "web members must be pairwise distinct foliations".to_string(),
                    ));
                }
            }
        }
        Ok(Web { foliations })
    }

    pub fn k(&self) -> usize {
        self.foliations.len()
    }

    pub fn members(&self) -> &[Foliation] {
        &self.foliations
    }

    pub fn field(&self) -> &Field {
        self.foliations[0].field()
    }

    /// The web with one member removed.
    pub fn without(&self, index: usize) -> Result<Web> {
        crate::precondition!(index < self.k(), "index out of range");
        crate::precondition!(self.k() > 1, "cannot remove the only member");
        let mut f = self.foliations.clone();
        f.remove(index);
        Ok(Web { foliations: f })
    }

    /// Superposition with another foliation.
    pub fn boxtimes(&self, f: Foliation) -> Result<Web> {
        let mut list = self.foliations.clone();
        list.push(f);
        Web::new(list)
    }
}

/// Effective divisor presented by pairwise coprime square-free components
/// with multiplicities.
#[derive(Clone, Debug)]
pub struct Divisor {
    pub components: Vec<(MultiPoly, u32)>,
}

/// Tangency polynomial of two distinct foliations: the primitive
/// sign-normalized coefficient of ω_F ∧ ω_G. Multiplicities are retained.
pub fn tangency(f: &Foliation, g: &Foliation) -> Result<MultiPoly> {
    crate::precondition!(f != g, "tangency of a foliation with itself");
    let t = f.a.mul(&g.b).sub(&g.a.mul(&f.b));
    Ok(t.normalize_primitive())
}

/// Square-free part of the product of all pairwise tangencies.
pub fn discriminant(w: &Web) -> Result<MultiPoly> {
    crate::precondition!(w.k() >= 2, "discriminant needs at least 2 foliations");
    let mut prod = MultiPoly::one(w.field());
    for i in 0..w.k() {
        for j in i + 1..w.k() {
            let t = tangency(&w.members()[i], &w.members()[j])?;
            if t.is_zero() {
                return Err(Error::Precondition(
                    "degenerate web: coincident members".to_string(),
                ));
            }
            prod = prod.mul(&t);
        }
    }
    Ok(squarefree_part(&prod))
}

/// Invariance of an algebraic curve {h = 0}: h divides X_F(h) where X_F is
/// the tangent field b∂x − a∂y.
pub fn is_invariant(h: &MultiPoly, f: &Foliation) -> Result<bool> {
    crate::precondition!(!h.is_constant(), "invariance of a constant");
    let xh = f.b.mul(&h.dx()).sub(&f.a.mul(&h.dy()));
    Ok(xh.is_zero() || h.divides(&xh))
}

/// First-integral test: dR ∧ ω_F = 0 identically.
pub fn is_first_integral(r: &RatFunc, f: &Foliation) -> Result<bool> {
    crate::precondition!(!r.is_constant(), "constant candidate first integral");
    let w = wedge(&OneForm::d(r), &f.one_form());
    Ok(w.is_zero())
}

/// Foliation of the pencil generated by two coprime polynomials: the class
/// of F·dG − G·dF with the fixed polynomial factor removed.
///
/// The caller can cross-check the removed factor against the Darboux degree
/// count through `Foliation::degree`.
pub fn pencil_foliation(f: &MultiPoly, g: &MultiPoly) -> Result<Foliation> {
    crate::precondition!(
        poly_gcd(f, g).is_constant(),
        "pencil generators must be coprime"
    );
    let a = f.mul(&g.dx()).sub(&g.mul(&f.dx()));
    let b = f.mul(&g.dy()).sub(&g.mul(&f.dy()));
    Foliation::new(a, b)
}

/// Affine (or linear) invertible change of coordinates with field
/// coefficients: (x, y) ↦ (m00·x + m01·y + t0, m10·x + m11·y + t1).
#[derive(Clone, Debug)]
pub struct AffineMap {
    pub m: [[FieldScalar; 2]; 2],
    pub t: [FieldScalar; 2],
}

impl AffineMap {
    pub fn linear(m: [[FieldScalar; 2]; 2]) -> Result<Self> {
        let field = m[0][0].field().clone();
        let t = [FieldScalar::zero(&field), FieldScalar::zero(&field)];
        Self::new(m, t)
    }

    pub fn new(m: [[FieldScalar; 2]; 2], t: [FieldScalar; 2]) -> Result<Self> {
        let det = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
        if det.is_zero() {
            return Err(Error::Precondition("singular coordinate change".into()));
        }
        Ok(AffineMap { m, t })
    }

    pub fn identity(field: &Field) -> Self {
        AffineMap {
            m: [
                [FieldScalar::one(field), FieldScalar::zero(field)],
                [FieldScalar::zero(field), FieldScalar::one(field)],
            ],
            t: [FieldScalar::zero(field), FieldScalar::zero(field)],
        }
    }

    pub fn field(&self) -> &Field {
        self.m[0][0].field()
    }

    /// Component polynomials (images of x and y).
    pub fn components(&self) -> (MultiPoly, MultiPoly) {
        let field = self.field();
        let (x, y) = crate::poly::xy(field);
        let px = x
            .mul_scalar(&self.m[0][0])
            .add(&y.mul_scalar(&self.m[0][1]))
            .add(&MultiPoly::constant(self.t[0].clone()));
        let py = x
            .mul_scalar(&self.m[1][0])
            .add(&y.mul_scalar(&self.m[1][1]))
            .add(&MultiPoly::constant(self.t[1].clone()));
        (px, py)
    }

    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        // (self ∘ inner)(p) = self.m · (inner.m · p + inner.t) + self.t
        let m = |r: usize, c: usize| {
            self.m[r][0]
                .mul(&inner.m[0][c])
                .add(&self.m[r][1].mul(&inner.m[1][c]))
        };
        let t = |r: usize| {
            self.m[r][0]
                .mul(&inner.t[0])
                .add(&self.m[r][1].mul(&inner.t[1]))
                .add(&self.t[r])
        };
        AffineMap {
            m: [[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]],
            t: [t(0), t(1)],
        }
    }

    pub fn apply_point(&self, x: &FieldScalar, y: &FieldScalar) -> (FieldScalar, FieldScalar) {
        (
            self.m[0][0].mul(x).add(&self.m[0][1].mul(y)).add(&self.t[0]),
            self.m[1][0].mul(x).add(&self.m[1][1].mul(y)).add(&self.t[1]),
        )
    }
}

/// Pull back a rational function: r ∘ φ.
pub fn pullback_ratfunc(phi: &AffineMap, r: &RatFunc) -> RatFunc {
    let (px, py) = phi.components();
    r.compose(&px, &py)
        .expect("affine substitution keeps denominator nonzero")
}

/// Pull back a 1-form through an affine map (substitution + chain rule):
/// φ*(a dx + b dy) = (a∘φ)dφ₀ + (b∘φ)dφ₁.
pub fn pullback_one_form(phi: &AffineMap, w: &OneForm) -> OneForm {
    let (px, py) = phi.components();
    let a = w.a.compose(&px, &py).unwrap();
    let b = w.b.compose(&px, &py).unwrap();
    OneForm {
        a: a.mul_scalar(&phi.m[0][0]).add(&b.mul_scalar(&phi.m[1][0])),
        b: a.mul_scalar(&phi.m[0][1]).add(&b.mul_scalar(&phi.m[1][1])),
    }
}

/// Pull back a 2-form: substitution times the constant Jacobian determinant.
pub fn pullback_two_form(phi: &AffineMap, w: &TwoForm) -> TwoForm {
    let (px, py) = phi.components();
    let det = phi.m[0][0]
        .mul(&phi.m[1][1])
        .sub(&phi.m[0][1].mul(&phi.m[1][0]));
    TwoForm {
        c: w.c.compose(&px, &py).unwrap().mul_scalar(&det),
    }
}

pub fn pullback_foliation(phi: &AffineMap, f: &Foliation) -> Foliation {
    Foliation::from_one_form(&pullback_one_form(phi, &f.one_form())).expect("nonzero form")
}

pub fn pullback_web(phi: &AffineMap, w: &Web) -> Result<Web> {
    Web::new(
        w.members()
            .iter()
            .map(|f| pullback_foliation(phi, f))
            .collect(),
    )
}

/// Projective change of coordinates given by an invertible 3×3 matrix acting
/// on [x : y : 1]: substitutes x ↦ (m00x+m01y+m02)/(m20x+m21y+m22) etc. and
/// clears denominators. Used to move a chosen line to or from infinity.
pub fn pullback_foliation_projective(
    m: &[[FieldScalar; 3]; 3],
    f: &Foliation,
) -> Result<Foliation> {
    let field = f.field().clone();
    let (x, y) = crate::poly::xy(&field);
    let row = |r: usize| {
        x.mul_scalar(&m[r][0])
            .add(&y.mul_scalar(&m[r][1]))
            .add(&MultiPoly::constant(m[r][2].clone()))
    };
    let p = row(0);
    let q = row(1);
    let r = row(2);
    crate::precondition!(!r.is_zero(), "degenerate projective map");
    // φ*(a dx + b dy) with x = P/R, y = Q/R:
    //   a(P/R, Q/R)(R dP − P dR)/R² + b(P/R, Q/R)(R dQ − Q dR)/R²,
    // cleared by R^(deg+2).
    let deg = f.a.total_degree().max(f.b.total_degree());
    let homog = |poly: &MultiPoly| -> MultiPoly {
        // poly(P/R, Q/R) · R^deg
        let mut acc = MultiPoly::zero(&field);
        for (mono, c) in poly.terms() {
            let e = deg - mono.total();
            let term = p
                .pow(mono.i as u32)
                .mul(&q.pow(mono.j as u32))
                .mul(&r.pow(e))
                .mul_scalar(c);
            acc = acc.add(&term);
        }
        acc
    };
    let ah = homog(&f.a);
    let bh = homog(&f.b);
    let na = ah
        .mul(&r.mul(&p.dx()).sub(&p.mul(&r.dx())))
        .add(&bh.mul(&r.mul(&q.dx()).sub(&q.mul(&r.dx()))));
    let nb = ah
        .mul(&r.mul(&p.dy()).sub(&p.mul(&r.dy())))
        .add(&bh.mul(&r.mul(&q.dy()).sub(&q.mul(&r.dy()))));
    Foliation::new(na, nb)
}

/// Field-rational singular points of a foliation plus a residual
/// certificate.
pub struct SingularPoints {
    pub points: Vec<(FieldScalar, FieldScalar)>,
    /// (Res_y(a,b) as a polynomial in x, Res_x(a,b) as a polynomial in y):
    /// evidence for roots that may escape the field.
    pub residual: (MultiPoly, MultiPoly),
    /// True when every resultant root is field-rational, so `points` is the
    /// full affine singular set.
    pub complete: bool,
}

pub fn singular_points(f: &Foliation) -> Result<SingularPoints> {
    // a normalized foliation with a constant coefficient (possibly zero) has
    // no common zeros at all
    if f.a.is_constant() || f.b.is_constant() {
        return Ok(SingularPoints {
            points: Vec::new(),
            residual: (MultiPoly::one(f.field()), MultiPoly::one(f.field())),
            complete: true,
        });
    }
    let res_x = resultant_wrt(f.a(), f.b(), true)?; // eliminate y → poly in x
    let res_y = resultant_wrt(f.a(), f.b(), false)?; // eliminate x → poly in y
    let xs = crate::binform::field_roots_single_var(&res_x, false)?;
    let ys = crate::binform::field_roots_single_var(&res_y, true)?;
    let mut points = Vec::new();
    for (x0, _) in &xs {
        for (y0, _) in &ys {
            if f.a.eval(x0, y0).is_zero() && f.b.eval(x0, y0).is_zero() {
                points.push((x0.clone(), y0.clone()));
            }
        }
    }
    let found_x: u32 = xs.iter().map(|(_, m)| m).sum();
    let found_y: u32 = ys.iter().map(|(_, m)| m).sum();
    let complete = (res_x.is_constant() || found_x == res_x.total_degree())
        && (res_y.is_constant() || found_y == res_y.total_degree());
    Ok(SingularPoints {
        points,
        residual: (res_x, res_y),
        complete,
    })
}

/// Resultant of two bivariate polynomials eliminating y (when `elim_y`) or x.
pub fn resultant_wrt(a: &MultiPoly, b: &MultiPoly, elim_y: bool) -> Result<MultiPoly> {
    let field = a.field();
    let coeffs = |p: &MultiPoly| -> Vec<MultiPoly> {
        let d = if elim_y { p.degree_y() } else { p.degree_x() } as usize;
        let mut out = vec![MultiPoly::zero(field); d + 1];
        for (m, c) in p.terms() {
            let (k, rest) = if elim_y {
                (m.j as usize, (m.i, 0u16))
            } else {
                (m.i as usize, (0u16, m.j))
            };
            out[k] = out[k].add(&MultiPoly::monomial(field, rest.0, rest.1, c.clone()));
        }
        out
    };
    crate::poly::resultant_z(&ZPoly::new(coeffs(a)), &ZPoly::new(coeffs(b)), field)
}

/// Jacobian data of the tangent vector field (b, −a) at a singular point.
pub struct LinearPart {
    pub matrix: [[FieldScalar; 2]; 2],
    /// Characteristic polynomial is t² − trace·t + det.
    pub trace: FieldScalar,
    pub det: FieldScalar,
    /// Eigenvalue pair when the characteristic polynomial splits over the
    /// base field.
    pub eigenvalues: Option<(FieldScalar, FieldScalar)>,
}

impl LinearPart {
    /// Both orders of the eigenvalue ratio, when defined and nonzero.
    pub fn eigenvalue_ratios(&self) -> Option<(FieldScalar, FieldScalar)> {
        let (l1, l2) = self.eigenvalues.clone()?;
        if l1.is_zero() || l2.is_zero() {
            return None;
        }
        Some((l2.div(&l1).ok()?, l1.div(&l2).ok()?))
    }
}

pub fn linear_part(f: &Foliation, p: &(FieldScalar, FieldScalar)) -> Result<LinearPart> {
    crate::precondition!(
        f.a.eval(&p.0, &p.1).is_zero() && f.b.eval(&p.0, &p.1).is_zero(),
        "point is not singular"
    );
    // X = (b, −a); Jacobian rows are the gradients of the components.
    let j00 = f.b.dx().eval(&p.0, &p.1);
    let j01 = f.b.dy().eval(&p.0, &p.1);
    let j10 = f.a.dx().eval(&p.0, &p.1).neg();
    let j11 = f.a.dy().eval(&p.0, &p.1).neg();
    let trace = j00.add(&j11);
    let det = j00.mul(&j11).sub(&j01.mul(&j10));
    let disc = trace
        .mul(&trace)
        .sub(&det.mul(&FieldScalar::from_int(f.field(), 4)));
    let eigenvalues = crate::binform::field_sqrt(&disc).map(|s| {
        let half = FieldScalar::from_rational(f.field(), crate::field::rat(1, 2));
        (trace.add(&s).mul(&half), trace.sub(&s).mul(&half))
    });
    Ok(LinearPart {
        matrix: [[j00, j01], [j10, j11]],
        trace,
        det,
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;
    use crate::poly::xy;
    use crate::ratfunc::ratfn;

    fn q() -> Field {
        NumberField::rationals()
    }

    fn fol(field: &Field, a: &[(u16, u16, i64)], b: &[(u16, u16, i64)]) -> Foliation {
        Foliation::new(
            MultiPoly::from_int_terms(field, a),
            MultiPoly::from_int_terms(field, b),
        )
        .unwrap()
    }

    #[test]
    fn exterior_d_examples() {
        let f = q();
        let (x, _y) = xy(&f);
        // d(x dy) = dx ∧ dy
        let w = OneForm::from_polys(MultiPoly::zero(&f), x.clone()).unwrap();
        assert_eq!(exterior_d(&w).c, RatFunc::one(&f));
        // d(dF) = 0 for F = xy
        let fxy = ratfn(&f, &[(1, 1, 1)], &[(0, 0, 1)]);
        assert!(exterior_d(&OneForm::d(&fxy)).is_zero());
        // d(y dx − (x−y) dy) = −2 dx∧dy
        let w2 = OneForm::from_polys(
            MultiPoly::from_int_terms(&f, &[(0, 1, 1)]),
            MultiPoly::from_int_terms(&f, &[(1, 0, -1), (0, 1, 1)]),
        )
        .unwrap();
        assert_eq!(
            exterior_d(&w2).c,
            RatFunc::from_scalar(FieldScalar::from_int(&f, -2))
        );
    }

    #[test]
    fn d_of_exact_forms_vanishes_on_random_ratfuncs() {
        let f = q();
        let (x, y) = xy(&f);
        let candidates = [
            RatFunc::new(x.mul(&y).add(&MultiPoly::one(&f)), x.sub(&y)).unwrap(),
            RatFunc::new(x.pow(3).add(&y.pow(2)), y.mul(&x).add(&MultiPoly::one(&f))).unwrap(),
            ratfn(&f, &[(2, 1, 3), (0, 0, -7)], &[(1, 1, 1), (0, 0, 2)]),
        ];
        for r in candidates {
            assert!(exterior_d(&OneForm::d(&r)).is_zero());
        }
    }

    #[test]
    fn wedge_antisymmetric_and_slopes() {
        let f = q();
        let dx = fol(&f, &[(0, 0, 1)], &[]).one_form();
        let dy = fol(&f, &[], &[(0, 0, 1)]).one_form();
        assert_eq!(wedge(&dx, &dy).c, RatFunc::one(&f));
        assert!(wedge(&dx, &dx).is_zero());
        let w1 = OneForm::from_polys(
            MultiPoly::one(&f),
            MultiPoly::constant(FieldScalar::from_int(&f, 2)),
        )
        .unwrap();
        let w2 = OneForm::from_polys(
            MultiPoly::one(&f),
            MultiPoly::constant(FieldScalar::from_int(&f, 5)),
        )
        .unwrap();
        // (dx + a dy) ∧ (dx + b dy) = (b − a) dx∧dy
        assert_eq!(
            wedge(&w1, &w2).c,
            RatFunc::from_scalar(FieldScalar::from_int(&f, 3))
        );
        assert_eq!(wedge(&w2, &w1).c, wedge(&w1, &w2).c.neg());
    }

    #[test]
    fn contraction_examples() {
        let f = q();
        let r = VectorField::radial(&f);
        let (x, y) = xy(&f);
        let dx = OneForm::from_polys(MultiPoly::one(&f), MultiPoly::zero(&f)).unwrap();
        assert_eq!(contract(&r, &dx), RatFunc::from_poly(x.clone()));
        // radial annihilates x dy − y dx
        let radial_form = OneForm::from_polys(y.neg(), x.clone()).unwrap();
        assert!(contract(&r, &radial_form).is_zero());
        // i_R(y dx + x dy) = 2xy
        let w = OneForm::from_polys(y.clone(), x.clone()).unwrap();
        assert_eq!(
            contract(&r, &w),
            RatFunc::from_poly(x.mul(&y).mul_scalar(&FieldScalar::from_int(&f, 2)))
        );
    }

    #[test]
    fn tangency_paper_case() {
        // tangency([d(xy(x−y)(ξ₃x+y))], [dx]) = x (x + (ξ₃²−1) y)² up to unit
        let f = NumberField::q_xi3();
        let (x, y) = xy(&f);
        let xi = FieldScalar::generator(&f);
        let g = x.mul(&y).mul(&x.sub(&y)).mul(&x.mul_scalar(&xi).add(&y));
        let f0 = Foliation::new(g.dx(), g.dy()).unwrap();
        let l1 = Foliation::new(MultiPoly::one(&f), MultiPoly::zero(&f)).unwrap();
        let t = tangency(&f0, &l1).unwrap();
        let lin = x.add(&y.mul_scalar(&xi.pow(2).sub(&FieldScalar::one(&f))));
        let expect = x.mul(&lin).mul(&lin);
        assert!(
            crate::ratfunc::proportionality(&t, &expect).is_some(),
            "tangency = {t}"
        );
        // the canonical representative is unique, so normalizing the
        // expected polynomial gives structural equality
        assert_eq!(t, expect.normalize_primitive());
    }

    #[test]
    fn tangency_trivial_cases() {
        let f = q();
        let dx = fol(&f, &[(0, 0, 1)], &[]);
        let dy = fol(&f, &[], &[(0, 0, 1)]);
        assert!(tangency(&dx, &dy).unwrap().is_one());
        // [d(x³+y³)] vs [dy] → x² up to unit
        let dsum = fol(&f, &[(2, 0, 3)], &[(0, 2, 3)]);
        let t = tangency(&dsum, &dy).unwrap();
        let (x, _) = xy(&f);
        assert!(t.eq_up_to_unit(&x.pow(2)));
        assert!(tangency(&dx, &dx).is_err());
        // symmetry up to normalization
        assert_eq!(tangency(&dsum, &dy).unwrap(), tangency(&dy, &dsum).unwrap());
    }

    #[test]
    fn discriminant_examples() {
        let f = q();
        let dx = fol(&f, &[(0, 0, 1)], &[]);
        let dy = fol(&f, &[], &[(0, 0, 1)]);
        let dsum = fol(&f, &[(0, 0, 1)], &[(0, 0, 1)]);
        let w = Web::new(vec![dx.clone(), dy.clone(), dsum]).unwrap();
        assert!(discriminant(&w).unwrap().is_one());
        // [dx] ⊠ [d(xy)] → x up to unit
        let dxy = fol(&f, &[(0, 1, 1)], &[(1, 0, 1)]);
        let w2 = Web::new(vec![dx, dxy]).unwrap();
        let (x, _) = xy(&f);
        assert!(discriminant(&w2).unwrap().eq_up_to_unit(&x));
    }

    #[test]
    fn bol_linear_subweb_discriminant() {
        // the four pencils of Bol's web: the discriminant is the product of
        // the lines joining the base points; with base points [0:1:0],
        // [1:0:0], (0,1), (1,0) the five affine lines are x, y, x−1, y−1,
        // x+y−1 (the sixth joining line is at infinity)
        let f = q();
        let one = FieldScalar::one(&f);
        let zero = FieldScalar::zero(&f);
        let p = |a: &FieldScalar, b: &FieldScalar, c: &FieldScalar| {
            Foliation::pencil(&f, &[a.clone(), b.clone(), c.clone()]).unwrap()
        };
        let w = Web::new(vec![
            p(&zero, &one, &zero),
            p(&one, &zero, &zero),
            p(&zero, &one, &one),
            p(&one, &zero, &one),
        ])
        .unwrap();
        let (x, y) = xy(&f);
        let expect = x
            .mul(&y)
            .mul(&x.sub(&MultiPoly::one(&f)))
            .mul(&y.sub(&MultiPoly::one(&f)))
            .mul(&x.add(&y).sub(&MultiPoly::one(&f)));
        assert!(discriminant(&w).unwrap().eq_up_to_unit(&expect));
    }

    #[test]
    fn invariance_examples() {
        let f = q();
        let (x, y) = xy(&f);
        let dxy = fol(&f, &[(0, 1, 1)], &[(1, 0, 1)]); // [d(xy)]
        assert!(is_invariant(&x, &dxy).unwrap());
        // h = y invariant for [y dx + dy]
        let fol2 = fol(&f, &[(0, 1, 1)], &[(0, 0, 1)]);
        assert!(is_invariant(&y, &fol2).unwrap());
        // h = x + y not invariant for [dx]
        let dx = fol(&f, &[(0, 0, 1)], &[]);
        assert!(!is_invariant(&x.add(&y), &dx).unwrap());
        assert!(is_invariant(&MultiPoly::one(&f), &dx).is_err());
    }

    #[test]
    fn first_integral_examples() {
        let f = q();
        // R = xy for [y dx + x dy]
        let r = ratfn(&f, &[(1, 1, 1)], &[(0, 0, 1)]);
        let folxy = fol(&f, &[(0, 1, 1)], &[(1, 0, 1)]);
        assert!(is_first_integral(&r, &folxy).unwrap());
        // R = x is not
        let rx = ratfn(&f, &[(1, 0, 1)], &[(0, 0, 1)]);
        assert!(!is_first_integral(&rx, &folxy).unwrap());
        // xy(x+y)(x²+xy+y²)³ for [y(2x+y)³dx + x(2y+x)³dy]
        let (x, y) = xy(&f);
        let big = x
            .mul(&y)
            .mul(&x.add(&y))
            .mul(&x.pow(2).add(&x.mul(&y)).add(&y.pow(2)).pow(3));
        let two = FieldScalar::from_int(&f, 2);
        let a = y.mul(&x.mul_scalar(&two).add(&y).pow(3));
        let b = x.mul(&y.mul_scalar(&two).add(&x).pow(3));
        let catf = Foliation::new(a, b).unwrap();
        assert!(is_first_integral(&RatFunc::from_poly(big), &catf).unwrap());
    }

    #[test]
    fn degree_examples() {
        let f = q();
        // [y(y−1)dx + x(x−1)dy] → 2
        let w = fol(&f, &[(0, 2, 1), (0, 1, -1)], &[(2, 0, 1), (1, 0, -1)]);
        assert_eq!(w.degree(), 2);
        assert!(w.infinity_line_invariant());
        // [dx] → 0
        assert_eq!(fol(&f, &[(0, 0, 1)], &[]).degree(), 0);
        // [x²dx + y²dy] → 2 (h = 0 branch)
        assert_eq!(fol(&f, &[(2, 0, 1)], &[(0, 2, 1)]).degree(), 2);
        // radial pencil: degree 0, h ≠ 0
        let radial = fol(&f, &[(0, 1, 1)], &[(1, 0, -1)]);
        assert_eq!(radial.degree(), 0);
        assert!(!radial.infinity_line_invariant());
    }

    #[test]
    fn pencil_foliation_examples() {
        let f = q();
        let (x, y) = xy(&f);
        // <x, y> → [y dx − x dy] up to unit
        let p = pencil_foliation(&x, &y).unwrap();
        let expect = fol(&f, &[(0, 1, 1)], &[(1, 0, -1)]);
        assert_eq!(p, expect);
        // Bol pencil of conics: d((y²−1)/(x²−1))
        let fx = x.pow(2).sub(&MultiPoly::one(&f));
        let gy = y.pow(2).sub(&MultiPoly::one(&f));
        let b = pencil_foliation(&fx, &gy).unwrap();
        let r = RatFunc::new(gy.clone(), fx.clone()).unwrap();
        assert!(is_first_integral(&r, &b).unwrap());
        assert!(pencil_foliation(&x, &x).is_err());
    }

    #[test]
    fn pullback_functorial_on_forms() {
        let f = q();
        // φ = (x,y) ↦ (y,x) sends dx to dy
        let swap = AffineMap::linear([
            [FieldScalar::zero(&f), FieldScalar::one(&f)],
            [FieldScalar::one(&f), FieldScalar::zero(&f)],
        ])
        .unwrap();
        let dx = OneForm::from_polys(MultiPoly::one(&f), MultiPoly::zero(&f)).unwrap();
        let pb = pullback_one_form(&swap, &dx);
        assert!(pb.a.is_zero());
        assert_eq!(pb.b, RatFunc::one(&f));
        // φ = (2x, y) doubles dx∧dy
        let scale = AffineMap::linear([
            [FieldScalar::from_int(&f, 2), FieldScalar::zero(&f)],
            [FieldScalar::zero(&f), FieldScalar::one(&f)],
        ])
        .unwrap();
        let two_form = TwoForm {
            c: RatFunc::one(&f),
        };
        assert_eq!(
            pullback_two_form(&scale, &two_form).c,
            RatFunc::from_scalar(FieldScalar::from_int(&f, 2))
        );
        // identity fixes foliations; composition is functorial
        let id = AffineMap::identity(&f);
        let w = fol(&f, &[(0, 2, 1), (0, 1, -1)], &[(2, 0, 1), (1, 0, -1)]);
        assert_eq!(pullback_foliation(&id, &w), w);
        let psi = AffineMap::new(
            [
                [FieldScalar::from_int(&f, 1), FieldScalar::from_int(&f, 1)],
                [FieldScalar::from_int(&f, 0), FieldScalar::from_int(&f, 1)],
            ],
            [FieldScalar::from_int(&f, 2), FieldScalar::from_int(&f, 0)],
        )
        .unwrap();
        let chained = pullback_foliation(&psi, &pullback_foliation(&swap, &w));
        let composed = pullback_foliation(&swap.compose(&psi), &w);
        assert_eq!(chained, composed);
    }

    #[test]
    fn tangency_natural_under_pullback() {
        let f = q();
        let phi = AffineMap::new(
            [
                [FieldScalar::from_int(&f, 2), FieldScalar::from_int(&f, 1)],
                [FieldScalar::from_int(&f, 1), FieldScalar::from_int(&f, 1)],
            ],
            [FieldScalar::from_int(&f, 3), FieldScalar::from_int(&f, -1)],
        )
        .unwrap();
        let f1 = fol(&f, &[(0, 1, 1), (0, 0, 2)], &[(1, 0, 1)]);
        let f2 = fol(&f, &[(2, 0, 1)], &[(0, 1, 1), (0, 0, 1)]);
        let lhs =
            tangency(&pullback_foliation(&phi, &f1), &pullback_foliation(&phi, &f2)).unwrap();
        let (px, py) = phi.components();
        let rhs = tangency(&f1, &f2).unwrap().compose(&px, &py);
        assert!(lhs.eq_up_to_unit(&rhs));
    }

    #[test]
    fn degree_invariant_under_linear_pullback() {
        let f = q();
        let phi = AffineMap::linear([
            [FieldScalar::from_int(&f, 1), FieldScalar::from_int(&f, 2)],
            [FieldScalar::from_int(&f, 1), FieldScalar::from_int(&f, -1)],
        ])
        .unwrap();
        for w in [
            fol(&f, &[(0, 2, 1), (0, 1, -1)], &[(2, 0, 1), (1, 0, -1)]),
            fol(&f, &[(2, 0, 3)], &[(0, 2, 3)]),
            fol(&f, &[(0, 1, 1)], &[(1, 0, -1)]),
        ] {
            assert_eq!(pullback_foliation(&phi, &w).degree(), w.degree());
        }
    }

    #[test]
    fn projective_pullback_swaps_infinity() {
        let f = q();
        // the standard Cremona-like chart swap [x:y:z] ↦ [z:y:x] turns the
        // vertical pencil [dx] into the pencil through the origin-image
        let zero = FieldScalar::zero(&f);
        let one = FieldScalar::one(&f);
        let m = [
            [zero.clone(), zero.clone(), one.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [one.clone(), zero.clone(), zero.clone()],
        ];
        let dx = fol(&f, &[(0, 0, 1)], &[]);
        let g = pullback_foliation_projective(&m, &dx).unwrap();
        // x ↦ 1/x: d(1/x) = −dx/x² → class [dx]
        assert_eq!(g, dx);
        // a degree-2 example stays degree 2 under this involution
        let w = fol(&f, &[(2, 0, 1)], &[(0, 2, 1)]);
        let gw = pullback_foliation_projective(&m, &w).unwrap();
        let back = pullback_foliation_projective(&m, &gw).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn singular_points_examples() {
        let f = q();
        // [x²dx + y²dy] → {(0,0)}
        let w = fol(&f, &[(2, 0, 1)], &[(0, 2, 1)]);
        let sp = singular_points(&w).unwrap();
        assert_eq!(sp.points.len(), 1);
        assert!(sp.points[0].0.is_zero() && sp.points[0].1.is_zero());
        // [dx] → none
        let sp2 = singular_points(&fol(&f, &[(0, 0, 1)], &[])).unwrap();
        assert!(sp2.points.is_empty());
        // [y(y−1)dx + x(x−1)dy]: the four affine base points
        let w3 = fol(&f, &[(0, 2, 1), (0, 1, -1)], &[(2, 0, 1), (1, 0, -1)]);
        let sp3 = singular_points(&w3).unwrap();
        let mut pts: Vec<(i64, i64)> = sp3
            .points
            .iter()
            .map(|(a, b)| {
                (
                    i64::try_from(a.as_rational().unwrap().to_integer()).unwrap(),
                    i64::try_from(b.as_rational().unwrap().to_integer()).unwrap(),
                )
            })
            .collect();
        pts.sort_unstable();
        assert_eq!(pts, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert!(sp3.complete);
    }

    #[test]
    fn linear_part_examples() {
        let f = q();
        let origin = (FieldScalar::zero(&f), FieldScalar::zero(&f));
        // radial [x dy − y dx]: ratio 1
        let radial = fol(&f, &[(0, 1, -1)], &[(1, 0, 1)]);
        let lp = linear_part(&radial, &origin).unwrap();
        let (r1, r2) = lp.eigenvalue_ratios().unwrap();
        assert!(r1.is_one() && r2.is_one());
        // [x dx + y dy]: X = (y, −x), ratio −1 over ℚ(i), no split over ℚ
        let fi = NumberField::q_i();
        let w = Foliation::new(MultiPoly::var_x(&fi), MultiPoly::var_y(&fi)).unwrap();
        let lp2 = linear_part(&w, &(FieldScalar::zero(&fi), FieldScalar::zero(&fi))).unwrap();
        let (r1, r2) = lp2.eigenvalue_ratios().unwrap();
        assert_eq!(r1, FieldScalar::from_int(&fi, -1));
        assert_eq!(r2, FieldScalar::from_int(&fi, -1));
        let wq = fol(&f, &[(1, 0, 1)], &[(0, 1, 1)]);
        assert!(linear_part(&wq, &origin).unwrap().eigenvalues.is_none());
        assert!(linear_part(&radial, &(FieldScalar::one(&f), FieldScalar::zero(&f))).is_err());
    }

    #[test]
    fn pencil_constructors() {
        let f = q();
        // lines through [0:1:0] are vertical: the class [dx]
        let inf_vert = [
            FieldScalar::zero(&f),
            FieldScalar::one(&f),
            FieldScalar::zero(&f),
        ];
        let p = Foliation::pencil(&f, &inf_vert).unwrap();
        assert_eq!(p, fol(&f, &[(0, 0, 1)], &[]));
        // finite point (1, 2)
        let pt = [
            FieldScalar::one(&f),
            FieldScalar::from_int(&f, 2),
            FieldScalar::one(&f),
        ];
        let p2 = Foliation::pencil(&f, &pt).unwrap();
        assert_eq!(
            p2,
            fol(&f, &[(0, 1, 1), (0, 0, -2)], &[(1, 0, -1), (0, 0, 1)])
        );
        // homogeneous scale invariance
        let pt2 = [
            FieldScalar::from_int(&f, 2),
            FieldScalar::from_int(&f, 4),
            FieldScalar::from_int(&f, 2),
        ];
        assert_eq!(Foliation::pencil(&f, &pt2).unwrap(), p2);
    }
}
