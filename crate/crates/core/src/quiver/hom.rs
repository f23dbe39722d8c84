use std::sync::Arc;

use crate::linalg::{self, Matrix, QuotientMap, Scalar};

use super::{Quiver, QuiverError, RepMorphism, Representation};

/// The map `⊕_v Hom(X_v, Y_v) → ⊕_a Hom(X_{s(a)}, Y_{t(a)})`,
/// `φ ↦ (Y_a φ_{s(a)} − φ_{t(a)} X_a)_a`. Its kernel is `Hom(X, Y)` and its
/// cokernel is `Ext¹(X, Y)`.
fn ringel_matrix(x: &Representation, y: &Representation) -> Matrix {
    let q = x.quiver();
    let (xd, yd) = (x.dims(), y.dims());
    let mut var_off = Vec::with_capacity(xd.len());
    let mut cols = 0;
    for v in 0..xd.len() {
        var_off.push(cols);
        cols += yd[v] * xd[v];
    }
    let rows: usize = q.arrows().iter().map(|a| yd[a.target] * xd[a.source]).sum();
    let mut d = Matrix::zero(rows, cols);
    let mut row_off = 0;
    for (a, arr) in q.arrows().iter().enumerate() {
        let (s, t) = (arr.source, arr.target);
        let (ya, xa) = (y.map(a), x.map(a));
        for i in 0..yd[t] {
            for j in 0..xd[s] {
                let r = row_off + i * xd[s] + j;
                // Y_a φ_s
                for k in 0..yd[s] {
                    let c = &ya[(i, k)];
                    if !c.is_zero() {
                        d[(r, var_off[s] + k * xd[s] + j)] += c;
                    }
                }
                // − φ_t X_a
                for k in 0..xd[t] {
                    let c = &xa[(k, j)];
                    if !c.is_zero() {
                        d[(r, var_off[t] + i * xd[t] + k)] -= c;
                    }
                }
            }
        }
        row_off += yd[t] * xd[s];
    }
    d
}

/// An exact basis of `Hom(X, Y)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    src: Vec<usize>,
    tgt: Vec<usize>,
    basis: Vec<RepMorphism>,
    free: Vec<usize>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RepMorphism] {
        &self.basis
    }

    /// Coordinates of a morphism lying in this space.
    pub fn coordinates(&self, f: &RepMorphism) -> Vec<Scalar> {
        let flat = f.flatten();
        self.free.iter().map(|&c| flat[c].clone()).collect()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> RepMorphism {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut out = RepMorphism::unflatten(&self.src, &self.tgt, &vec![Scalar::zero(); self.flat_len()]);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out.add_scaled(c, b);
        }
        out
    }

    fn flat_len(&self) -> usize {
        self.src.iter().zip(&self.tgt).map(|(a, b)| a * b).sum()
    }
}

pub fn hom_space(x: &Representation, y: &Representation) -> Result<HomSpace, QuiverError> {
    if !x.same_quiver(y) {
        return Err(QuiverError::QuiverMismatch);
    }
    let d = ringel_matrix(x, y);
    let (kernel, free) = linalg::kernel_with_free_columns(&d);
    let basis = kernel.iter().map(|v| RepMorphism::unflatten(x.dims(), y.dims(), v)).collect();
    Ok(HomSpace { src: x.dims().to_vec(), tgt: y.dims().to_vec(), basis, free })
}

/// `(dim Hom(X, Y), dim Ext¹(X, Y))` from a single rank computation.
pub fn hom_ext_dims(x: &Representation, y: &Representation) -> Result<(usize, usize), QuiverError> {
    if !x.same_quiver(y) {
        return Err(QuiverError::QuiverMismatch);
    }
    let d = ringel_matrix(x, y);
    let r = linalg::rank(&d);
    Ok((d.cols() - r, d.rows() - r))
}

pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize, QuiverError> {
    hom_ext_dims(x, y).map(|(h, _)| h)
}

pub fn ext_dim(x: &Representation, y: &Representation) -> Result<usize, QuiverError> {
    hom_ext_dims(x, y).map(|(_, e)| e)
}

/// A cocycle `(ζ_a: X_{s(a)} → Y_{t(a)})_a`, i.e. a morphism from the first
/// syzygy term `⊕_a P_{t(a)}^{x_{s(a)}}` of the standard presentation of `X`
/// into `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass {
    parts: Vec<Matrix>,
}

impl ExtClass {
    pub fn new(parts: Vec<Matrix>) -> Self {
        ExtClass { parts }
    }

    pub fn zero(quiver: &Quiver, x: &[usize], y: &[usize]) -> Self {
        ExtClass { parts: quiver.arrows().iter().map(|a| Matrix::zero(y[a.target], x[a.source])).collect() }
    }

    pub fn parts(&self) -> &[Matrix] {
        &self.parts
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        self.parts.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    fn unflatten(quiver: &Quiver, x: &[usize], y: &[usize], flat: &[Scalar]) -> Self {
        let mut off = 0;
        let parts = quiver
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (y[a.target], x[a.source]);
                let rows = (0..r).map(|i| flat[off + i * c..off + (i + 1) * c].to_vec()).collect();
                off += r * c;
                Matrix::from_rows_shaped(r, c, rows)
            })
            .collect();
        ExtClass { parts }
    }

    /// Image under `g_*` for `g: Y → Y'`.
    pub fn pushforward(&self, quiver: &Quiver, g: &RepMorphism) -> ExtClass {
        ExtClass {
            parts: quiver.arrows().iter().zip(&self.parts).map(|(a, z)| g.at(a.target).mul(z)).collect(),
        }
    }

    /// Image under `f^*` for `f: X' → X`.
    pub fn pullback(&self, quiver: &Quiver, f: &RepMorphism) -> ExtClass {
        ExtClass {
            parts: quiver.arrows().iter().zip(&self.parts).map(|(a, z)| z.mul(f.at(a.source))).collect(),
        }
    }

    pub fn add(&self, other: &ExtClass) -> ExtClass {
        ExtClass { parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &ExtClass) {
        for (a, b) in self.parts.iter_mut().zip(&other.parts) {
            a.add_scaled(c, b);
        }
    }

    pub fn scale(&self, c: &Scalar) -> ExtClass {
        ExtClass { parts: self.parts.iter().map(|m| m.scale(c)).collect() }
    }

    pub fn is_zero_cocycle(&self) -> bool {
        self.parts.iter().all(Matrix::is_zero)
    }
}

/// `Ext¹(X, Y)` as cocycles modulo coboundaries, with a fixed complement basis.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    quiver: Arc<Quiver>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    quotient: QuotientMap,
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.quotient.quotient_dim()
    }

    pub fn basis(&self) -> Vec<ExtClass> {
        (0..self.dim())
            .map(|k| ExtClass::unflatten(&self.quiver, &self.src, &self.tgt, &self.quotient.lift(k)))
            .collect()
    }

    pub fn coordinates(&self, z: &ExtClass) -> Vec<Scalar> {
        self.quotient.coordinates(&z.flatten()).expect("cocycle shape matches")
    }

    pub fn is_trivial(&self, z: &ExtClass) -> bool {
        self.quotient.contains(&z.flatten()).expect("cocycle shape matches")
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> ExtClass {
        ExtClass::unflatten(&self.quiver, &self.src, &self.tgt, &self.quotient.lift_coordinates(coeffs))
    }

    /// The reduced representative of a class.
    pub fn normal_form(&self, z: &ExtClass) -> ExtClass {
        self.combine(&self.coordinates(z))
    }
}

pub fn ext1_space(x: &Representation, y: &Representation) -> Result<ExtSpace, QuiverError> {
    if !x.same_quiver(y) {
        return Err(QuiverError::QuiverMismatch);
    }
    let d = ringel_matrix(x, y);
    let image: Vec<Vec<Scalar>> = (0..d.cols()).map(|j| d.column(j)).collect();
    let quotient = QuotientMap::new(d.rows(), &image).expect("column lengths agree");
    Ok(ExtSpace { quiver: x.quiver().clone(), src: x.dims().to_vec(), tgt: y.dims().to_vec(), quotient })
}

/// Middle term of the extension `0 → Y → E → X → 0` given by `z`, with the
/// inclusion of `Y` and the projection onto `X`.
pub fn extension(x: &Representation, y: &Representation, z: &ExtClass) -> (Representation, RepMorphism, RepMorphism) {
    let q = x.quiver();
    let n = q.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| y.dims()[v] + x.dims()[v]).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let mut m = Matrix::zero(dims[arr.target], dims[arr.source]);
            m.set_block(0, 0, y.map(a));
            m.set_block(0, y.dims()[arr.source], &z.parts[a]);
            m.set_block(y.dims()[arr.target], y.dims()[arr.source], x.map(a));
            m
        })
        .collect();
    let e = Representation::new(q.clone(), dims.clone(), maps).expect("shapes agree");
    let (incl, proj) = Representation::sum_structure(&[y, x]);
    (e, incl[0].clone(), proj[1].clone())
}

/// The class in `Ext¹(X, K)` of an exact sequence `0 → K → M → X → 0`.
pub fn extension_class(
    m: &Representation,
    x: &Representation,
    iota: &RepMorphism,
    pi: &RepMorphism,
) -> ExtClass {
    let q = x.quiver();
    let n = q.vertex_count();
    let sections: Vec<Matrix> = (0..n)
        .map(|v| right_inverse(pi.at(v)).expect("projection is surjective"))
        .collect();
    let parts = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let defect = m.map(a).mul(&sections[arr.source]).sub(&sections[arr.target].mul(x.map(a)));
            linalg::solve_matrix(iota.at(arr.target), &defect).expect("defect lies in the kernel")
        })
        .collect();
    ExtClass { parts }
}

/// Some `s` with `m s = 1`, if `m` has full row rank.
pub fn right_inverse(m: &Matrix) -> Option<Matrix> {
    linalg::solve_matrix(m, &Matrix::identity(m.rows()))
}

pub fn euler_form(quiver: &Quiver, x: &[i64], y: &[i64]) -> i64 {
    quiver.euler_form(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kron() -> Arc<Quiver> {
        Arc::new(Quiver::kronecker())
    }

    #[test]
    fn kronecker_hom_dims() {
        let q = kron();
        let p0 = Representation::projective(&q, 0);
        let p1 = Representation::projective(&q, 1);
        assert_eq!(hom_space(&p1, &p0).unwrap().dim(), 2);
        assert_eq!(hom_space(&p0, &p1).unwrap().dim(), 0);
        let h = hom_space(&p0, &p0).unwrap();
        assert_eq!(h.dim(), 1);
        let id = RepMorphism::identity(&p0);
        assert_eq!(h.combine(&h.coordinates(&id)), id);
    }

    #[test]
    fn kronecker_ext_dims() {
        let q = kron();
        let s0 = Representation::simple(&q, 0);
        let s1 = Representation::simple(&q, 1);
        assert_eq!(ext1_space(&s0, &s1).unwrap().dim(), 2);
        assert_eq!(ext1_space(&s1, &s0).unwrap().dim(), 0);
        let i1 = Representation::injective(&q, 1);
        assert_eq!(ext1_space(&s0, &i1).unwrap().dim(), 0);
        assert_eq!(hom_ext_dims(&s0, &s1).unwrap(), (0, 2));
    }

    #[test]
    fn extensions_are_exact_and_recover_their_class() {
        let q = kron();
        let s0 = Representation::simple(&q, 0);
        let s1 = Representation::simple(&q, 1);
        let ext = ext1_space(&s0, &s1).unwrap();
        for z in ext.basis() {
            let (e, iota, pi) = extension(&s0, &s1, &z);
            assert!(iota.is_morphism(&s1, &e));
            assert!(pi.is_morphism(&e, &s0));
            let back = extension_class(&e, &s0, &iota, &pi);
            assert_eq!(ext.coordinates(&back), ext.coordinates(&z));
            assert_eq!(hom_space(&e, &e).unwrap().dim(), 1);
        }
    }

    #[test]
    fn mismatched_quivers_are_rejected() {
        let a = Representation::simple(&kron(), 0);
        let d4 = Arc::new(Quiver::euclidean(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap());
        let b = Representation::simple(&d4, 0);
        assert!(matches!(hom_space(&a, &b), Err(QuiverError::QuiverMismatch)));
    }
}
