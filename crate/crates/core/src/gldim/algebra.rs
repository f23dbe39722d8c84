use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Matrix, Scalar};
use crate::quiver::{hom_space, QuiverError, Representation};

use super::GldimError;

/// A basic finite-dimensional algebra presented as a small category: one
/// object per primitive idempotent, a basis of every `Hom(a, b)` and the
/// structure constants of composition.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    names: Vec<String>,
    dims: Vec<Vec<usize>>,
    // act[(a, b, c)][r]: matrix of u ↦ r ∘ u from Hom(a, b) to Hom(a, c), r ∈ Hom(b, c)
    act: Vec<Vec<Matrix>>,
    // radical basis of each Hom(a, b) as coordinate vectors
    radical: Vec<Vec<Vec<Vec<Scalar>>>>,
}

impl EndAlgebra {
    /// Builds the algebra from `compose(a, b, c, f, g)`, the coordinates of
    /// `g ∘ f` in `Hom(a, c)` for basis elements `f ∈ Hom(a, b)`,
    /// `g ∈ Hom(b, c)`. Every `End(a)` must be local.
    pub fn from_table<E>(
        names: Vec<String>,
        dims: Vec<Vec<usize>>,
        mut compose: impl FnMut(usize, usize, usize, usize, usize) -> Result<Vec<Scalar>, E>,
    ) -> Result<Self, E> {
        let n = names.len();
        let mut act = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut mats = Vec::with_capacity(dims[b][c]);
                    for g in 0..dims[b][c] {
                        let mut cols = Vec::with_capacity(dims[a][b]);
                        for f in 0..dims[a][b] {
                            cols.push(compose(a, b, c, f, g)?);
                        }
                        mats.push(Matrix::from_columns(dims[a][c], &cols));
                    }
                    act.push(mats);
                }
            }
        }
        let mut alg = EndAlgebra { names, dims, act, radical: Vec::new() };
        alg.radical = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| if a == b { alg.local_radical(a) } else { unit_vectors(alg.dims[a][b]) })
                    .collect()
            })
            .collect();
        Ok(alg)
    }

    /// `End_H(M)` for a list of pairwise non-isomorphic indecomposable
    /// representations.
    pub fn of_modules(names: Vec<String>, modules: &[Representation]) -> Result<Self, QuiverError> {
        let n = modules.len();
        let mut homs = Vec::with_capacity(n * n);
        for x in modules {
            for y in modules {
                homs.push(hom_space(x, y)?);
            }
        }
        let dims = (0..n).map(|a| (0..n).map(|b| homs[a * n + b].dim()).collect()).collect();
        Self::from_table(names, dims, |a, b, c, f, g| {
            let gf = homs[b * n + c].basis()[g].after(&homs[a * n + b].basis()[f]);
            Ok(homs[a * n + c].coordinates(&gf))
        })
    }

    pub fn object_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn hom_dim(&self, a: usize, b: usize) -> usize {
        self.dims[a][b]
    }

    pub fn dimension(&self) -> usize {
        self.dims.iter().flatten().sum()
    }

    fn action(&self, a: usize, b: usize, c: usize) -> &[Matrix] {
        let n = self.names.len();
        &self.act[(a * n + b) * n + c]
    }

    /// Coordinates of `g ∘ f`.
    pub fn compose(&self, (a, b, c): (usize, usize, usize), g: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dims[a][c]];
        for (r, m) in self.action(a, b, c).iter().enumerate() {
            if g[r].is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(m.mul_vec(f)) {
                o.add_mul(&g[r], &x);
            }
        }
        out
    }

    fn local_radical(&self, a: usize) -> Vec<Vec<Scalar>> {
        let d = self.dims[a][a];
        let mut traces = Matrix::zero(1, d);
        for (r, m) in self.action(a, a, a).iter().enumerate() {
            traces[(0, r)] = m.trace();
        }
        linalg::kernel_basis(&traces)
    }

    /// Basis of `rad(a, b)`.
    pub fn radical(&self, a: usize, b: usize) -> &[Vec<Scalar>] {
        &self.radical[a][b]
    }

    /// `dim rad(a, b) / rad²(a, b)`: the number of arrows between the
    /// corresponding vertices.
    pub fn irreducible_dim(&self, a: usize, b: usize) -> usize {
        let mut products = Vec::new();
        for k in 0..self.object_count() {
            for f in self.radical(a, k) {
                for g in self.radical(k, b) {
                    products.push(self.compose((a, k, b), g, f));
                }
            }
        }
        self.radical(a, b).len() - linalg::rank_of_vectors(self.dims[a][b], &products)
    }

    /// Least `k` with `rad^k = 0`.
    pub fn loewy_length(&self) -> usize {
        let n = self.object_count();
        let mut power: Vec<Vec<Vec<Vec<Scalar>>>> = self.radical.clone();
        let mut k = 1;
        while power.iter().flatten().any(|v| !v.is_empty()) {
            let mut next = vec![vec![Vec::new(); n]; n];
            for a in 0..n {
                for b in 0..n {
                    let mut products = Vec::new();
                    for c in 0..n {
                        for f in &power[a][c] {
                            for g in self.radical(c, b) {
                                products.push(self.compose((a, c, b), g, f));
                            }
                        }
                    }
                    next[a][b] = linalg::image_basis(&Matrix::from_columns(self.dims[a][b], &products));
                }
            }
            power = next;
            k += 1;
        }
        k
    }

    /// Projective dimension of the simple module at `a`.
    pub fn simple_projective_dimension(&self, a: usize, cutoff: usize) -> Result<usize, GldimError> {
        let radical_of_projective = Submodule {
            generators: vec![a],
            spaces: (0..self.object_count()).map(|b| self.radical(a, b).to_vec()).collect(),
        };
        if radical_of_projective.is_zero() {
            return Ok(0);
        }
        let mut current = radical_of_projective;
        let mut d = 1;
        loop {
            let next = self.syzygy(&current);
            if next.is_zero() {
                return Ok(d);
            }
            d += 1;
            if d > cutoff {
                return Err(GldimError::CutoffReached { simple: self.names[a].clone(), cutoff });
            }
            current = next;
        }
    }

    /// Global dimension: the largest projective dimension of a simple.
    pub fn global_dimension(&self, cutoff: usize) -> Result<usize, GldimError> {
        let dims = (0..self.object_count())
            .into_par_iter()
            .map(|a| self.simple_projective_dimension(a, cutoff))
            .collect::<Vec<_>>()
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?;
        Ok(dims.into_iter().max().unwrap_or(0))
    }

    /// The opposite algebra: `Hom^op(a, b) = Hom(b, a)`.
    pub fn opposite(&self) -> EndAlgebra {
        let n = self.object_count();
        let dims: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| self.dims[b][a]).collect()).collect();
        let mut act = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    // g ∘op f = f ∘ g with g: c → b, f: b → a
                    let original = self.action(c, b, a);
                    let mats = (0..dims[b][c])
                        .map(|g| {
                            let cols: Vec<Vec<Scalar>> = original.iter().map(|m| m.column(g)).collect();
                            Matrix::from_columns(dims[a][c], &cols)
                        })
                        .collect();
                    act.push(mats);
                }
            }
        }
        let radical = (0..n).map(|a| (0..n).map(|b| self.radical[b][a].clone()).collect()).collect();
        EndAlgebra { names: self.names.clone(), dims, act, radical }
    }

    /// Minimal projective resolution of `module`, as the objects generating
    /// each term `P_0, P_1, …`.
    pub fn projective_resolution(&self, module: &ModuleData, cutoff: usize) -> Result<Vec<Vec<usize>>, GldimError> {
        let n = self.object_count();
        let mut tops: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for b in 0..n {
            let mut span = Vec::new();
            for c in 0..n {
                for r in self.radical(c, b) {
                    let fr = module.apply((c, b), r);
                    span.extend((0..fr.cols()).map(|k| fr.column(k)));
                }
            }
            let mut rank = linalg::rank_of_vectors(module.dims[b], &span);
            for x in unit_vectors(module.dims[b]) {
                span.push(x.clone());
                let r = linalg::rank_of_vectors(module.dims[b], &span);
                if r > rank {
                    rank = r;
                    tops.push((b, x));
                } else {
                    span.pop();
                }
            }
        }
        let generators: Vec<usize> = tops.iter().map(|(b, _)| *b).collect();
        let spaces = (0..n)
            .map(|c| {
                let mut cols = Vec::new();
                for (b, x) in &tops {
                    for r in unit_vectors(self.dims[*b][c]) {
                        cols.push(module.apply((*b, c), &r).mul_vec(x));
                    }
                }
                let phi = Matrix::from_columns(module.dims[c], &cols);
                debug_assert_eq!(linalg::rank(&phi), module.dims[c]);
                linalg::kernel_basis(&phi)
            })
            .collect();
        let mut terms = vec![generators.clone()];
        let mut current = Submodule { generators, spaces };
        while !current.is_zero() {
            if terms.len() > cutoff {
                return Err(GldimError::CutoffReached { simple: module.name.clone(), cutoff });
            }
            let next = self.syzygy(&current);
            terms.push(next.generators.clone());
            current = next;
        }
        Ok(terms)
    }

    fn free_dim(&self, generators: &[usize], b: usize) -> usize {
        generators.iter().map(|&g| self.dims[g][b]).sum()
    }

    /// `r ∘ u` for `r ∈ Hom(b, c)` given by coordinates, applied blockwise to
    /// an element `u` of the free module at `b`.
    fn act_on_free(&self, generators: &[usize], (b, c): (usize, usize), r: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.free_dim(generators, c));
        let mut off = 0;
        for &g in generators {
            let len = self.dims[g][b];
            out.extend(self.compose((g, b, c), r, &u[off..off + len]));
            off += len;
        }
        out
    }

    fn radical_part(&self, u: &Submodule, b: usize) -> Vec<Vec<Scalar>> {
        let mut vectors = Vec::new();
        for c in 0..self.object_count() {
            for r in self.radical(c, b) {
                for x in &u.spaces[c] {
                    vectors.push(self.act_on_free(&u.generators, (c, b), r, x));
                }
            }
        }
        vectors
    }

    /// Kernel of the minimal projective cover of `u`, as a submodule of that
    /// cover.
    fn syzygy(&self, u: &Submodule) -> Submodule {
        let n = self.object_count();
        // top: basis vectors of U(b) independent modulo rad U(b)
        let mut tops: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for b in 0..n {
            let len = self.free_dim(&u.generators, b);
            let mut span = self.radical_part(u, b);
            let mut rank = linalg::rank_of_vectors(len, &span);
            for x in &u.spaces[b] {
                span.push(x.clone());
                let r = linalg::rank_of_vectors(len, &span);
                if r > rank {
                    rank = r;
                    tops.push((b, x.clone()));
                } else {
                    span.pop();
                }
            }
        }
        let generators: Vec<usize> = tops.iter().map(|(b, _)| *b).collect();
        let spaces = (0..n)
            .map(|c| {
                let mut cols = Vec::new();
                for (b, x) in &tops {
                    for r in unit_vectors(self.dims[*b][c]) {
                        cols.push(self.act_on_free(&u.generators, (*b, c), &r, x));
                    }
                }
                let phi = Matrix::from_columns(self.free_dim(&u.generators, c), &cols);
                linalg::kernel_basis(&phi)
            })
            .collect();
        Submodule { generators, spaces }
    }
}

/// A module over an [`EndAlgebra`]: its value at each object and, for every
/// pair `(b, c)`, the matrices `F(b) → F(c)` of the basis of `Hom(b, c)`.
#[derive(Clone, Debug)]
pub struct ModuleData {
    pub name: String,
    pub dims: Vec<usize>,
    pub act: Vec<Vec<Vec<Matrix>>>,
}

impl ModuleData {
    fn apply(&self, (b, c): (usize, usize), r: &[Scalar]) -> Matrix {
        let mut out = Matrix::zero(self.dims[c], self.dims[b]);
        for (coeff, m) in r.iter().zip(&self.act[b][c]) {
            if !coeff.is_zero() {
                out.add_scaled(coeff, m);
            }
        }
        out
    }

    /// `Hom(−, target)` restricted to the objects of `alg`, as a module over
    /// the opposite algebra.
    pub fn representable(alg: &EndAlgebra, target: usize) -> ModuleData {
        let n = alg.object_count();
        let dims: Vec<usize> = (0..n).map(|a| alg.hom_dim(a, target)).collect();
        let act = (0..n)
            .map(|a| {
                (0..n)
                    .map(|c| {
                        // r: c → a acts by u ↦ u ∘ r
                        (0..alg.hom_dim(c, a))
                            .map(|r| alg.action(c, a, target).iter().map(|m| m.column(r)).collect::<Vec<_>>())
                            .map(|cols| Matrix::from_columns(dims[c], &cols))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ModuleData { name: alg.names[target].clone(), dims, act }
    }
}

/// A submodule of the free module `⊕_k Hom(generators[k], −)`, given by a
/// basis of its value at each object.
#[derive(Clone, Debug)]
struct Submodule {
    generators: Vec<usize>,
    spaces: Vec<Vec<Vec<Scalar>>>,
}

impl Submodule {
    fn is_zero(&self) -> bool {
        self.spaces.iter().all(Vec::is_empty)
    }
}

fn unit_vectors(d: usize) -> Vec<Vec<Scalar>> {
    (0..d)
        .map(|k| {
            let mut e = vec![Scalar::zero(); d];
            e[k] = Scalar::one();
            e
        })
        .collect()
}

/// Shape data of an [`EndAlgebra`] for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub objects: usize,
    pub dimension: usize,
    pub loewy_length: usize,
    pub arrows: usize,
}

impl EndAlgebra {
    pub fn summary(&self) -> AlgebraSummary {
        let n = self.object_count();
        let arrows = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| self.irreducible_dim(a, b)).sum();
        AlgebraSummary { objects: n, dimension: self.dimension(), loewy_length: self.loewy_length(), arrows }
    }
}
