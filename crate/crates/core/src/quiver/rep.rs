use std::sync::Arc;

use crate::linalg::{self, Matrix, QuotientMap, Scalar};

use super::{Quiver, QuiverError};

/// A finite-dimensional representation: a vector space per vertex and a
/// matrix per arrow, with rows indexed by the target space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepMorphism {
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, QuiverError> {
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrows().len() {
            return Err(QuiverError::QuiverMismatch);
        }
        for (a, m) in maps.iter().enumerate() {
            let arr = quiver.arrow(a);
            if m.shape() != (dims[arr.target], dims[arr.source]) {
                return Err(QuiverError::Shape { arrow: a });
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = vec![Matrix::zero(0, 0); quiver.arrows().len()];
        Representation { quiver, dims, maps }
    }

    pub fn simple(quiver: &Arc<Quiver>, i: usize) -> Self {
        let mut dims = vec![0; quiver.vertex_count()];
        dims[i] = 1;
        let maps = quiver.arrows().iter().map(|a| Matrix::zero(dims[a.target], dims[a.source])).collect();
        Representation { quiver: quiver.clone(), dims, maps }
    }

    /// The projective at `i`: basis at `v` is the set of paths `i ⇝ v`.
    pub fn projective(quiver: &Arc<Quiver>, i: usize) -> Self {
        let paths = enumerate_paths(quiver, i, true);
        let index = |p: &Path| paths[p.end].iter().position(|q| q == p).expect("path present");
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let mut maps: Vec<Matrix> = quiver.arrows().iter().map(|a| Matrix::zero(dims[a.target], dims[a.source])).collect();
        for (a, arr) in quiver.arrows().iter().enumerate() {
            for (col, p) in paths[arr.source].iter().enumerate() {
                let extended = p.extend(a, arr.target);
                maps[a][(index(&extended), col)] = Scalar::one();
            }
        }
        Representation { quiver: quiver.clone(), dims, maps }
    }

    /// The injective at `i`: basis at `v` is the set of paths `v ⇝ i`, and an
    /// arrow strips itself off the front of a path.
    pub fn injective(quiver: &Arc<Quiver>, i: usize) -> Self {
        let paths = enumerate_paths(quiver, i, false);
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let mut maps: Vec<Matrix> = quiver.arrows().iter().map(|a| Matrix::zero(dims[a.target], dims[a.source])).collect();
        for (a, arr) in quiver.arrows().iter().enumerate() {
            for (col, p) in paths[arr.source].iter().enumerate() {
                if p.arrows.first() == Some(&a) {
                    let rest = Path { start: arr.target, end: i, arrows: p.arrows[1..].to_vec() };
                    let row = paths[arr.target].iter().position(|q| *q == rest).expect("path present");
                    maps[a][(row, col)] = Scalar::one();
                }
            }
        }
        Representation { quiver: quiver.clone(), dims, maps }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn same_quiver(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.quiver, &other.quiver) || *self.quiver == *other.quiver
    }

    pub fn direct_sum(parts: &[&Representation]) -> Result<Representation, QuiverError> {
        let first = parts.first().ok_or(QuiverError::EmptySum)?;
        if parts.iter().any(|p| !p.same_quiver(first)) {
            return Err(QuiverError::QuiverMismatch);
        }
        if parts.len() == 1 {
            return Ok((*first).clone());
        }
        let n = first.quiver.vertex_count();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..first.maps.len())
            .map(|a| Matrix::block_diag(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        Ok(Representation { quiver: first.quiver.clone(), dims, maps })
    }

    /// Canonical injections into and projections out of `direct_sum(parts)`.
    pub fn sum_structure(parts: &[&Representation]) -> (Vec<RepMorphism>, Vec<RepMorphism>) {
        let n = parts.first().map_or(0, |p| p.quiver.vertex_count());
        let totals: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let mut offsets = vec![0usize; n];
        let mut inj = Vec::with_capacity(parts.len());
        let mut proj = Vec::with_capacity(parts.len());
        for p in parts {
            let mut i_maps = Vec::with_capacity(n);
            let mut p_maps = Vec::with_capacity(n);
            for v in 0..n {
                let mut i_v = Matrix::zero(totals[v], p.dims[v]);
                i_v.set_block(offsets[v], 0, &Matrix::identity(p.dims[v]));
                p_maps.push(i_v.transpose());
                i_maps.push(i_v);
                offsets[v] += p.dims[v];
            }
            inj.push(RepMorphism { maps: i_maps });
            proj.push(RepMorphism { maps: p_maps });
        }
        (inj, proj)
    }

    /// The subrepresentation spanned at each vertex by the columns of
    /// `spans[v]`, with its inclusion. Fails if the spaces are not closed
    /// under the arrows.
    pub fn subrepresentation(&self, spans: &[Matrix]) -> Result<(Representation, RepMorphism), QuiverError> {
        let n = self.quiver.vertex_count();
        let bases: Vec<Matrix> = (0..n)
            .map(|v| {
                let cols = linalg::independent_columns(&spans[v]);
                spans[v].select_columns(&cols)
            })
            .collect();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (a, arr) in self.quiver.arrows().iter().enumerate() {
            let image = self.maps[a].mul(&bases[arr.source]);
            let m = linalg::solve_matrix(&bases[arr.target], &image).ok_or(QuiverError::NotSubrepresentation)?;
            maps.push(m);
        }
        let sub = Representation { quiver: self.quiver.clone(), dims, maps };
        Ok((sub, RepMorphism { maps: bases }))
    }

    /// The sum of the images of the given morphisms into `self`.
    pub fn image_sum(&self, maps_in: &[RepMorphism]) -> (Representation, RepMorphism) {
        let n = self.quiver.vertex_count();
        let spans: Vec<Matrix> = (0..n)
            .map(|v| {
                let blocks: Vec<&Matrix> = maps_in.iter().map(|f| &f.maps[v]).collect();
                if blocks.is_empty() {
                    Matrix::zero(self.dims[v], 0)
                } else {
                    Matrix::hstack(&blocks)
                }
            })
            .collect();
        self.subrepresentation(&spans).expect("images are subrepresentations")
    }

    /// Random representation with this shape and small integer entries.
    pub fn random(quiver: &Arc<Quiver>, dims: &[usize], rng: &mut impl rand::Rng, bound: i64) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (dims[a.target], dims[a.source]);
                let entries: Vec<i64> = (0..r * c).map(|_| rng.gen_range(-bound..=bound)).collect();
                Matrix::from_i64(r, c, &entries)
            })
            .collect();
        Representation { quiver: quiver.clone(), dims: dims.to_vec(), maps }
    }

    /// Conjugates by vertexwise base changes: the result is `g X g⁻¹` and
    /// `g` becomes an isomorphism `self → result`.
    pub fn transport(&self, g: &[Matrix]) -> Representation {
        let inv: Vec<Matrix> = g.iter().map(|m| linalg::inverse(m).expect("invertible base change")).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| g[arr.target].mul(&self.maps[a]).mul(&inv[arr.source]))
            .collect();
        Representation { quiver: self.quiver.clone(), dims: self.dims.clone(), maps }
    }

    /// Same vector spaces and maps, read over another quiver with the same
    /// arrow list. Used when a computation temporarily reindexes a quiver.
    pub fn with_quiver(&self, quiver: Arc<Quiver>) -> Result<Representation, QuiverError> {
        Representation::new(quiver, self.dims.clone(), self.maps.clone())
    }
}

impl RepMorphism {
    pub fn new(maps: Vec<Matrix>) -> Self {
        RepMorphism { maps }
    }

    pub fn zero(x: &Representation, y: &Representation) -> Self {
        RepMorphism { maps: x.dims.iter().zip(&y.dims).map(|(&c, &r)| Matrix::zero(r, c)).collect() }
    }

    pub fn identity(x: &Representation) -> Self {
        RepMorphism { maps: x.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn is_morphism(&self, x: &Representation, y: &Representation) -> bool {
        let shapes_ok = self.maps.len() == x.dims.len()
            && self.maps.iter().enumerate().all(|(v, m)| m.shape() == (y.dims[v], x.dims[v]));
        shapes_ok
            && x.quiver.arrows().iter().enumerate().all(|(a, arr)| {
                y.maps[a].mul(&self.maps[arr.source]) == self.maps[arr.target].mul(&x.maps[a])
            })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &RepMorphism) -> RepMorphism {
        RepMorphism { maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> RepMorphism {
        RepMorphism { maps: self.maps.iter().map(|m| m.scale(c)).collect() }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &RepMorphism) {
        for (a, b) in self.maps.iter_mut().zip(&other.maps) {
            a.add_scaled(c, b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.rows() == m.cols() && linalg::rank(m) == m.rows())
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| linalg::rank(m) == m.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| linalg::rank(m) == m.rows())
    }

    pub fn inverse(&self) -> Option<RepMorphism> {
        let maps = self.maps.iter().map(linalg::inverse).collect::<Option<Vec<_>>>()?;
        Some(RepMorphism { maps })
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for m in &self.maps {
            t += &m.trace();
        }
        t
    }

    /// All entries, vertex by vertex, each matrix row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    pub fn unflatten(src: &[usize], tgt: &[usize], flat: &[Scalar]) -> RepMorphism {
        let mut off = 0;
        let maps = src
            .iter()
            .zip(tgt)
            .map(|(&c, &r)| {
                let rows = (0..r).map(|i| flat[off + i * c..off + (i + 1) * c].to_vec()).collect();
                let m = Matrix::from_rows_shaped(r, c, rows);
                off += r * c;
                m
            })
            .collect();
        RepMorphism { maps }
    }

    /// Combined map into a direct sum: `x → ⊕ y_k`.
    pub fn column(parts: &[&RepMorphism]) -> RepMorphism {
        let n = parts[0].maps.len();
        RepMorphism {
            maps: (0..n).map(|v| Matrix::vstack(&parts.iter().map(|f| &f.maps[v]).collect::<Vec<_>>())).collect(),
        }
    }

    /// Combined map out of a direct sum: `⊕ x_k → y`.
    pub fn row(parts: &[&RepMorphism]) -> RepMorphism {
        let n = parts[0].maps.len();
        RepMorphism {
            maps: (0..n).map(|v| Matrix::hstack(&parts.iter().map(|f| &f.maps[v]).collect::<Vec<_>>())).collect(),
        }
    }
}

/// Kernel of `f: x → y` with its inclusion.
pub fn kernel(x: &Representation, f: &RepMorphism) -> (Representation, RepMorphism) {
    let spans: Vec<Matrix> = (0..x.dims.len())
        .map(|v| Matrix::from_columns(x.dims[v], &linalg::kernel_basis(&f.maps[v])))
        .collect();
    x.subrepresentation(&spans).expect("kernels are subrepresentations")
}

/// Cokernel of `f: x → y` with its projection.
pub fn cokernel(y: &Representation, f: &RepMorphism) -> (Representation, RepMorphism) {
    let n = y.dims.len();
    let quotients: Vec<QuotientMap> = (0..n)
        .map(|v| {
            let image: Vec<Vec<Scalar>> = (0..f.maps[v].cols()).map(|j| f.maps[v].column(j)).collect();
            QuotientMap::new(y.dims[v], &image).expect("lengths agree")
        })
        .collect();
    let proj: Vec<Matrix> = quotients
        .iter()
        .enumerate()
        .map(|(v, q)| {
            let cols: Vec<Vec<Scalar>> = (0..y.dims[v])
                .map(|k| {
                    let mut e = vec![Scalar::zero(); y.dims[v]];
                    e[k] = Scalar::one();
                    q.coordinates(&e).expect("length")
                })
                .collect();
            Matrix::from_columns(q.quotient_dim(), &cols)
        })
        .collect();
    let lifts: Vec<Matrix> = quotients
        .iter()
        .enumerate()
        .map(|(v, q)| Matrix::from_columns(y.dims[v], &(0..q.quotient_dim()).map(|k| q.lift(k)).collect::<Vec<_>>()))
        .collect();
    let dims: Vec<usize> = quotients.iter().map(QuotientMap::quotient_dim).collect();
    let maps = y
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arr)| proj[arr.target].mul(&y.maps[a]).mul(&lifts[arr.source]))
        .collect();
    (Representation { quiver: y.quiver.clone(), dims, maps }, RepMorphism { maps: proj })
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn extend(&self, a: usize, end: usize) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path { start: self.start, end, arrows }
    }
}

/// Paths starting at `i` (when `from` is set) or ending at `i`, grouped by
/// their other endpoint.
fn enumerate_paths(quiver: &Quiver, i: usize, from: bool) -> Vec<Vec<Path>> {
    let n = quiver.vertex_count();
    let mut out: Vec<Vec<Path>> = vec![Vec::new(); n];
    let mut stack = vec![Path { start: i, end: i, arrows: Vec::new() }];
    while let Some(p) = stack.pop() {
        if from {
            for a in quiver.arrows_from(p.end) {
                stack.push(p.extend(a, quiver.arrow(a).target));
            }
            out[p.end].push(p);
        } else {
            for a in quiver.arrows_into(p.start) {
                let mut arrows = vec![a];
                arrows.extend_from_slice(&p.arrows);
                stack.push(Path { start: quiver.arrow(a).source, end: p.end, arrows });
            }
            out[p.start].push(p);
        }
    }
    for group in &mut out {
        group.sort_by(|a, b| a.arrows.cmp(&b.arrows));
    }
    out
}
