//! Newton polytopes in the plane and the triangle criterion for absolute
//! irreducibility.
//!
//! A monomial `x^i z^j` sits at the lattice point `(u, v) = (i, j)`.

use std::fmt;

use serde_json::{json, Value};

use crate::bpoly::{BiPoly, Monomial2, Var};
use crate::error::{Error, Result};
use crate::gf::{Elt, FieldCtx};
use crate::upoly::{gcd_u64, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub u: i64,
    pub v: i64,
}

impl LatticePoint {
    pub fn new(u: i64, v: i64) -> LatticePoint {
        LatticePoint { u, v }
    }

    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.u - o.u, self.v - o.v)
    }

    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.u + o.u, self.v + o.v)
    }
}

impl From<Monomial2> for LatticePoint {
    fn from(m: Monomial2) -> Self {
        LatticePoint::new(m.x as i64, m.z as i64)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u)
}

/// Convex lattice polygon (or segment, or point).
///
/// Vertices run counterclockwise from the lexicographically smallest one,
/// with no three collinear.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    vertices: Vec<LatticePoint>,
}

impl LatticePolytope {
    /// Convex hull by Andrew's monotone chain.
    pub fn hull(points: impl IntoIterator<Item = LatticePoint>) -> LatticePolytope {
        let mut pts: Vec<LatticePoint> = points.into_iter().collect();
        pts.sort();
        pts.dedup();
        if pts.len() <= 1 {
            return LatticePolytope { vertices: pts };
        }
        let mut lower: Vec<LatticePoint> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<LatticePoint> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        // lower starts at the lexicographic minimum already
        LatticePolytope { vertices: lower }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Twice the enclosed area.
    pub fn area2(&self) -> i64 {
        let n = self.vertices.len();
        if n < 3 {
            return 0;
        }
        let o = self.vertices[0];
        (1..n - 1).map(|i| cross(o, self.vertices[i], self.vertices[i + 1])).sum()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0] == p,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                cross(a, b, p) == 0 && p.u >= a.u.min(b.u) && p.u <= a.u.max(b.u) && p.v >= a.v.min(b.v) && p.v <= a.v.max(b.v)
            }
            n => (0..n).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % n], p) >= 0),
        }
    }

    pub fn translate(&self, t: LatticePoint) -> LatticePolytope {
        LatticePolytope::hull(self.vertices.iter().map(|p| p.add(t)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.vertices.iter().map(|p| json!([p.u, p.v])).collect())
    }
}

pub fn newton_polytope(f: &BiPoly) -> Result<LatticePolytope> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(LatticePolytope::hull(f.terms().map(|(m, _)| LatticePoint::from(m))))
}

pub fn minkowski_sum(a: &LatticePolytope, b: &LatticePolytope) -> LatticePolytope {
    LatticePolytope::hull(a.vertices.iter().flat_map(|&p| b.vertices.iter().map(move |&q| p.add(q))))
}

/// Twice the area of the triangle `abc`.
pub fn triangle_area2(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i64 {
    cross(a, b, c).abs()
}

/// Inside or on the boundary, by comparing the area with the three sub-triangle areas.
pub fn point_in_triangle(p: LatticePoint, a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<bool> {
    let whole = triangle_area2(a, b, c);
    if whole == 0 {
        return Err(Error::DegenerateTriangle);
    }
    Ok(whole == triangle_area2(p, b, c) + triangle_area2(a, p, c) + triangle_area2(a, b, p))
}

fn gcd4(w: [i64; 4]) -> u64 {
    w.iter().fold(0, |g, &x| gcd_u64(g, x.unsigned_abs()))
}

/// Integral indecomposability of a lattice triangle: `gcd(a - b, a - c) = 1`.
pub fn triangle_indecomposable(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<bool> {
    if triangle_area2(a, b, c) == 0 {
        return Err(Error::DegenerateTriangle);
    }
    let (e1, e2) = (a.sub(b), a.sub(c));
    Ok(gcd4([e1.u, e1.v, e2.u, e2.v]) == 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anchors {
    /// Constant term.
    pub constant: Elt,
    /// Coefficient of `x^d`.
    pub xd: Elt,
    /// Coefficient of `x z^(d-1)`.
    pub xyd1: Elt,
}

/// Evidence that `f(x) - f(y) + a` is absolutely irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub degree: u64,
    pub vertices: Vec<LatticePoint>,
    pub gcd_witness: [i64; 4],
    pub gcd: u64,
    pub anchors: Anchors,
}

impl IrreducibilityCertificate {
    pub fn to_json(&self, ctx: &FieldCtx) -> Value {
        json!({
            "degree": self.degree,
            "vertices": self.vertices.iter().map(|p| json!([p.u, p.v])).collect::<Vec<_>>(),
            "gcd_witness": self.gcd_witness,
            "gcd": self.gcd,
            "anchors": {
                "const": ctx.elt_to_json(self.anchors.constant),
                "xd": ctx.elt_to_json(self.anchors.xd),
                "xyd1": ctx.elt_to_json(self.anchors.xyd1),
            },
        })
    }

    /// Re-checks the certificate against `f` and `a`.
    pub fn verify(&self, f: &UniPoly, a: Elt) -> bool {
        certify_absolutely_irreducible_difference(f, a).as_ref() == Ok(self)
    }
}

/// After the shear `x -> x + y`, `f(x) - f(y) + a` becomes
/// `f(x + z) - f(z) + a` whose Newton polytope is the triangle
/// `(0,0), (1,d-1), (d,0)`; the triangle is integrally indecomposable.
pub fn certify_absolutely_irreducible_difference(f: &UniPoly, a: Elt) -> Result<IrreducibilityCertificate> {
    let ctx = f.ctx();
    let d = f.degree().unwrap_or(0) as u64;
    if d < 2 {
        return Err(Error::Inapplicable(format!("degree {d} < 2")));
    }
    if a.is_zero() {
        return Err(Error::Inapplicable("a = 0".into()));
    }
    if !ctx.contains(a) {
        return Err(Error::CtxMismatch);
    }
    if d.is_multiple_of(ctx.characteristic()) {
        return Err(Error::Inapplicable(format!("characteristic {} divides degree {d}", ctx.characteristic())));
    }
    let mut coeffs = f.coeffs().to_vec();
    coeffs[0] = Elt::ZERO;
    let f0 = UniPoly::from_coeffs(ctx, coeffs);
    let big = &(&BiPoly::from_uni_of_sum(&f0) - &BiPoly::from_uni_in(Var::Z, &f0)) + &BiPoly::constant(ctx, a);
    let poly = newton_polytope(&big)?;
    let di = d as i64;
    let (v0, v1, v2) = (LatticePoint::new(0, 0), LatticePoint::new(1, di - 1), LatticePoint::new(di, 0));
    let expected = LatticePolytope::hull([v0, v1, v2]);
    if poly != expected {
        return Err(Error::Inapplicable(format!("Newton polytope {:?} is not the expected triangle", poly.vertices)));
    }
    let anchors = Anchors {
        constant: big.coeff(Monomial2::new(0, 0)),
        xd: big.coeff(Monomial2::new(d as u32, 0)),
        xyd1: big.coeff(Monomial2::new(1, d as u32 - 1)),
    };
    if anchors.constant.is_zero() || anchors.xd.is_zero() || anchors.xyd1.is_zero() {
        return Err(Error::Inapplicable("vanishing anchor coefficient".into()));
    }
    let (e1, e2) = (v0.sub(v1), v0.sub(v2));
    let gcd_witness = [e1.u, e1.v, e2.u, e2.v];
    let gcd = gcd4(gcd_witness);
    if gcd != 1 {
        return Err(Error::Inapplicable(format!("triangle is decomposable (gcd {gcd})")));
    }
    Ok(IrreducibilityCertificate { degree: d, vertices: poly.vertices, gcd_witness, gcd, anchors })
}
