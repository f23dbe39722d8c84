use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ar::{Catalog, IndecLabel};
use crate::linalg::Scalar;
use crate::quiver::{ExtClass, ExtSpace, HomSpace, Quiver, RepMorphism, Representation};

use super::ClusterError;

/// An indecomposable object of the fundamental domain `ind H ∪ H[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClusterObject {
    Module { label: IndecLabel },
    Shifted { vertex: usize },
}

impl ClusterObject {
    pub fn module(label: IndecLabel) -> Self {
        ClusterObject::Module { label }
    }

    pub fn shifted(vertex: usize) -> Self {
        ClusterObject::Shifted { vertex }
    }

    pub fn label(&self) -> Option<IndecLabel> {
        match *self {
            ClusterObject::Module { label } => Some(label),
            ClusterObject::Shifted { .. } => None,
        }
    }

    /// The H-module standing in for the object: `X` itself, or `P_i` for
    /// `P_i[1]`.
    fn carrier(&self) -> IndecLabel {
        match *self {
            ClusterObject::Module { label } => label,
            ClusterObject::Shifted { vertex } => IndecLabel::projective(vertex),
        }
    }
}

impl fmt::Display for ClusterObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterObject::Module { label } => write!(f, "{label}"),
            ClusterObject::Shifted { vertex } => write!(f, "P{}[1]", vertex + 1),
        }
    }
}

/// One graded piece of a morphism in the derived category between objects
/// of the fundamental domain: a module map or an extension class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DMap {
    Zero,
    Hom(RepMorphism),
    Ext(ExtClass),
}

impl DMap {
    fn add(&self, other: &DMap) -> DMap {
        match (self, other) {
            (DMap::Zero, x) | (x, DMap::Zero) => x.clone(),
            (DMap::Hom(a), DMap::Hom(b)) => DMap::Hom(a.add(b)),
            (DMap::Ext(a), DMap::Ext(b)) => DMap::Ext(a.add(b)),
            _ => unreachable!("graded pieces of one Hom space share their kind"),
        }
    }

    fn scale(&self, c: &Scalar) -> DMap {
        match self {
            DMap::Zero => DMap::Zero,
            DMap::Hom(f) => DMap::Hom(f.scale(c)),
            DMap::Ext(z) => DMap::Ext(z.scale(c)),
        }
    }
}

/// A morphism `X̃ → Ỹ` in the cluster category: `deg0 ∈ Hom_D(X, Y)` and
/// `deg1 ∈ Hom_D(X, FY)` with `F = τ⁻¹[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterMap {
    pub deg0: DMap,
    pub deg1: DMap,
}

impl ClusterMap {
    pub fn zero() -> Self {
        ClusterMap { deg0: DMap::Zero, deg1: DMap::Zero }
    }

    /// A module map viewed in degree 0.
    pub fn from_hom(f: RepMorphism) -> Self {
        ClusterMap { deg0: DMap::Hom(f), deg1: DMap::Zero }
    }

    pub fn add(&self, other: &ClusterMap) -> ClusterMap {
        ClusterMap { deg0: self.deg0.add(&other.deg0), deg1: self.deg1.add(&other.deg1) }
    }

    pub fn scale(&self, c: &Scalar) -> ClusterMap {
        ClusterMap { deg0: self.deg0.scale(c), deg1: self.deg1.scale(c) }
    }
}

#[derive(Clone, Debug)]
enum Piece {
    Zero,
    Hom(Arc<HomSpace>),
    Ext(Arc<ExtSpace>),
}

impl Piece {
    fn dim(&self) -> usize {
        match self {
            Piece::Zero => 0,
            Piece::Hom(h) => h.dim(),
            Piece::Ext(e) => e.dim(),
        }
    }

    fn basis(&self) -> Vec<DMap> {
        match self {
            Piece::Zero => Vec::new(),
            Piece::Hom(h) => h.basis().iter().cloned().map(DMap::Hom).collect(),
            Piece::Ext(e) => e.basis().into_iter().map(DMap::Ext).collect(),
        }
    }

    fn coordinates(&self, m: &DMap) -> Vec<Scalar> {
        match (self, m) {
            (Piece::Hom(h), DMap::Hom(f)) => h.coordinates(f),
            (Piece::Ext(e), DMap::Ext(z)) => e.coordinates(z),
            (_, DMap::Zero) => vec![Scalar::zero(); self.dim()],
            (Piece::Zero, _) => Vec::new(),
            _ => unreachable!("graded piece kind mismatch"),
        }
    }

    fn combine(&self, coeffs: &[Scalar]) -> DMap {
        match self {
            Piece::Zero => DMap::Zero,
            Piece::Hom(h) => DMap::Hom(h.combine(coeffs)),
            Piece::Ext(e) => DMap::Ext(e.combine(coeffs)),
        }
    }
}

/// `Hom_C(X̃, Ỹ) = Hom_D(X, Y) ⊕ Hom_D(X, FY)` with a fixed basis.
#[derive(Clone, Debug)]
pub struct ClusterHomSpace {
    pub source: ClusterObject,
    pub target: ClusterObject,
    deg0: Piece,
    deg1: Piece,
}

impl ClusterHomSpace {
    pub fn dim(&self) -> usize {
        self.deg0.dim() + self.deg1.dim()
    }

    pub fn deg0_dim(&self) -> usize {
        self.deg0.dim()
    }

    pub fn deg1_dim(&self) -> usize {
        self.deg1.dim()
    }

    /// Degree-0 basis elements first, then degree 1.
    pub fn basis(&self) -> Vec<ClusterMap> {
        let zero1 = DMap::Zero;
        let mut out: Vec<ClusterMap> =
            self.deg0.basis().into_iter().map(|d| ClusterMap { deg0: d, deg1: zero1.clone() }).collect();
        out.extend(self.deg1.basis().into_iter().map(|d| ClusterMap { deg0: DMap::Zero, deg1: d }));
        out
    }

    pub fn coordinates(&self, m: &ClusterMap) -> Vec<Scalar> {
        let mut c = self.deg0.coordinates(&m.deg0);
        c.extend(self.deg1.coordinates(&m.deg1));
        c
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> ClusterMap {
        let k = self.deg0.dim();
        ClusterMap { deg0: self.deg0.combine(&coeffs[..k]), deg1: self.deg1.combine(&coeffs[k..]) }
    }
}

/// The cluster category of `H`, restricted to the fundamental domain.
#[derive(Clone)]
pub struct ClusterCategory {
    catalog: Arc<Catalog>,
}

impl ClusterCategory {
    pub fn new(catalog: Arc<Catalog>) -> Self {
        ClusterCategory { catalog }
    }

    pub fn catalog(&self) -> &Arc<Catalog> {
        &self.catalog
    }

    fn quiver(&self) -> &Quiver {
        self.catalog.quiver()
    }

    pub fn check(&self, x: &ClusterObject) -> Result<(), ClusterError> {
        match *x {
            ClusterObject::Module { label } => self.catalog.check_label(&label).map_err(|_| ClusterError::OutOfDomain(*x)),
            ClusterObject::Shifted { vertex } if vertex < self.catalog.vertex_count() => Ok(()),
            _ => Err(ClusterError::OutOfDomain(*x)),
        }
    }

    /// The H-representation carrying the object (`P_i` for `P_i[1]`).
    pub fn carrier(&self, x: &ClusterObject) -> Result<Arc<Representation>, ClusterError> {
        self.check(x)?;
        Ok(self.catalog.realize(&x.carrier())?)
    }

    /// `τ` of the cluster category, which agrees with the shift.
    pub fn tau(&self, x: &ClusterObject) -> ClusterObject {
        match *x {
            ClusterObject::Module { label } => match self.catalog.tau_label(&label) {
                Some(prev) => ClusterObject::module(prev),
                None => match label {
                    IndecLabel::Transjective { vertex, .. } => ClusterObject::shifted(vertex),
                    IndecLabel::Regular { .. } => unreachable!("regular modules always have a translate"),
                },
            },
            ClusterObject::Shifted { vertex } => ClusterObject::module(IndecLabel::injective(vertex)),
        }
    }

    /// `τ⁻¹` of the cluster category.
    pub fn tau_inverse(&self, x: &ClusterObject) -> ClusterObject {
        match *x {
            ClusterObject::Module { label } => match self.catalog.tau_inverse_label(&label) {
                Some(next) => ClusterObject::module(next),
                None => match label {
                    IndecLabel::Transjective { vertex, .. } => ClusterObject::shifted(vertex),
                    IndecLabel::Regular { .. } => unreachable!("regular modules always have a translate"),
                },
            },
            ClusterObject::Shifted { vertex } => ClusterObject::module(IndecLabel::projective(vertex)),
        }
    }

    pub fn hom(&self, x: &ClusterObject, y: &ClusterObject) -> Result<ClusterHomSpace, ClusterError> {
        self.check(x)?;
        self.check(y)?;
        let cat = &self.catalog;
        let (deg0, deg1) = match (*x, *y) {
            (ClusterObject::Module { label: a }, ClusterObject::Module { label: b }) => {
                let deg1 = match cat.tau_inverse_label(&b) {
                    Some(tb) => Piece::Ext(cat.ext(&a, &tb)?),
                    None => Piece::Zero,
                };
                (Piece::Hom(cat.hom(&a, &b)?), deg1)
            }
            (ClusterObject::Module { label: a }, ClusterObject::Shifted { vertex }) => {
                (Piece::Ext(cat.ext(&a, &IndecLabel::projective(vertex))?), Piece::Zero)
            }
            (ClusterObject::Shifted { vertex }, ClusterObject::Module { label: b }) => {
                let deg1 = match cat.tau_inverse_label(&b) {
                    Some(tb) => Piece::Hom(cat.hom(&IndecLabel::projective(vertex), &tb)?),
                    None => Piece::Zero,
                };
                (Piece::Zero, deg1)
            }
            (ClusterObject::Shifted { vertex: i }, ClusterObject::Shifted { vertex: j }) => {
                (Piece::Hom(cat.hom(&IndecLabel::projective(i), &IndecLabel::projective(j))?), Piece::Zero)
            }
        };
        Ok(ClusterHomSpace { source: *x, target: *y, deg0, deg1 })
    }

    pub fn identity(&self, x: &ClusterObject) -> Result<ClusterMap, ClusterError> {
        Ok(ClusterMap::from_hom(RepMorphism::identity(&*self.carrier(x)?)))
    }

    /// `F(g)` for a module map `g: Y → Z` between non-injective catalogued
    /// modules, as a map `τ⁻¹Y → τ⁻¹Z`.
    fn shift_hom(&self, y: IndecLabel, z: IndecLabel, g: &RepMorphism) -> Result<RepMorphism, ClusterError> {
        let space = self.catalog.hom(&y, &z)?;
        let coords = space.coordinates(g);
        let moved = self.catalog.tau_inverse_hom_basis(&y, &z)?;
        let ty = self.catalog.realize(&self.catalog.tau_inverse_label(&y).expect("non-injective"))?;
        let tz = self.catalog.realize(&self.catalog.tau_inverse_label(&z).expect("non-injective"))?;
        let mut out = RepMorphism::zero(&ty, &tz);
        for (c, m) in coords.iter().zip(moved.iter()) {
            out.add_scaled(c, m);
        }
        Ok(out)
    }

    /// `g ∘ f` for `f: X̃ → Ỹ` and `g: Ỹ → Z̃`; only `Ỹ` and `Z̃` matter.
    /// Components of degree two vanish on the fundamental domain and are
    /// dropped.
    pub fn compose(&self, y: &ClusterObject, z: &ClusterObject, g: &ClusterMap, f: &ClusterMap) -> Result<ClusterMap, ClusterError> {
        let q = self.quiver();
        let deg0 = match (&g.deg0, &f.deg0) {
            (DMap::Zero, _) | (_, DMap::Zero) => DMap::Zero,
            (DMap::Hom(g0), DMap::Hom(f0)) => DMap::Hom(g0.after(f0)),
            // Y → P_k[1] after X → Y
            (DMap::Ext(g0), DMap::Hom(f0)) => DMap::Ext(g0.pullback(q, f0)),
            // P_j[1] → P_k[1] after X → P_j[1]
            (DMap::Hom(g0), DMap::Ext(f0)) => DMap::Ext(f0.pushforward(q, g0)),
            (DMap::Ext(_), DMap::Ext(_)) => unreachable!("no extension class starts at a shifted projective"),
        };
        let mut deg1 = DMap::Zero;
        // F(g0) ∘ f1
        if let (DMap::Hom(g0), false) = (&g.deg0, matches!(f.deg1, DMap::Zero)) {
            if let (ClusterObject::Module { label: yl }, ClusterObject::Module { label: zl }) = (*y, *z) {
                if self.catalog.tau_inverse_label(&zl).is_some() {
                    let fg = self.shift_hom(yl, zl, g0)?;
                    deg1 = deg1.add(&match &f.deg1 {
                        DMap::Ext(f1) => DMap::Ext(f1.pushforward(q, &fg)),
                        DMap::Hom(f1) => DMap::Hom(fg.after(f1)),
                        DMap::Zero => DMap::Zero,
                    });
                }
            }
        }
        // g1 ∘ f0
        let term = match (&g.deg1, &f.deg0) {
            (DMap::Zero, _) | (_, DMap::Zero) => DMap::Zero,
            (DMap::Ext(g1), DMap::Hom(f0)) => DMap::Ext(g1.pullback(q, f0)),
            (DMap::Hom(g1), DMap::Ext(f0)) => DMap::Ext(f0.pushforward(q, g1)),
            (DMap::Hom(g1), DMap::Hom(f0)) => DMap::Hom(g1.after(f0)),
            (DMap::Ext(_), DMap::Ext(_)) => unreachable!("no extension class starts at a shifted projective"),
        };
        deg1 = deg1.add(&term);
        Ok(ClusterMap { deg0, deg1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::CatalogOptions;
    use crate::quiver::Quiver;

    fn kronecker() -> ClusterCategory {
        let cat = Catalog::new(Quiver::kronecker(), CatalogOptions::default()).unwrap();
        ClusterCategory::new(Arc::new(cat))
    }

    #[test]
    fn kronecker_projective_homs() {
        let c = kronecker();
        let h = c.hom(&ClusterObject::module(IndecLabel::projective(1)), &ClusterObject::module(IndecLabel::projective(0))).unwrap();
        assert_eq!((h.deg0_dim(), h.deg1_dim()), (2, 0));
        // P_0 → I_0 is deg0 only; I_0 → P_0 lives in degree one
        let p = ClusterObject::module(IndecLabel::projective(0));
        let i = ClusterObject::module(IndecLabel::injective(0));
        assert_eq!(c.hom(&i, &p).unwrap().deg0_dim(), 0);
        assert!(c.hom(&i, &p).unwrap().deg1_dim() > 0);
    }

    #[test]
    fn shifted_projectives() {
        let c = kronecker();
        for v in 0..2 {
            let s = ClusterObject::shifted(v);
            assert_eq!(c.tau(&ClusterObject::module(IndecLabel::projective(v))), s);
            assert_eq!(c.tau(&s), ClusterObject::module(IndecLabel::injective(v)));
            assert_eq!(c.tau_inverse(&c.tau(&s)), s);
            assert!(c.hom(&s, &s).unwrap().dim() >= 1);
        }
        let h = c.hom(&ClusterObject::shifted(1), &ClusterObject::shifted(0)).unwrap();
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn identity_is_neutral() {
        let c = kronecker();
        let objs = [
            ClusterObject::module(IndecLabel::projective(0)),
            ClusterObject::module(IndecLabel::preinjective(1, 1)),
            ClusterObject::module(IndecLabel::regular(0, 0, 2)),
            ClusterObject::shifted(1),
        ];
        for x in &objs {
            for y in &objs {
                let h = c.hom(x, y).unwrap();
                let (ix, iy) = (c.identity(x).unwrap(), c.identity(y).unwrap());
                for f in h.basis() {
                    assert_eq!(h.coordinates(&c.compose(x, y, &f, &ix).unwrap()), h.coordinates(&f));
                    assert_eq!(h.coordinates(&c.compose(y, y, &iy, &f).unwrap()), h.coordinates(&f));
                }
            }
        }
    }

    #[test]
    fn degree_two_vanishes() {
        let c = kronecker();
        let r = ClusterObject::module(IndecLabel::regular(0, 0, 1));
        let h = c.hom(&r, &r).unwrap();
        assert_eq!((h.deg0_dim(), h.deg1_dim()), (1, 1));
        let e = h.basis().into_iter().find(|m| m.deg0 == DMap::Zero).unwrap();
        let ee = c.compose(&r, &r, &e, &e).unwrap();
        assert!(h.coordinates(&ee).iter().all(Scalar::is_zero));
    }
}
