use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::linalg::{self, Matrix, QuotientMap, Scalar};
use crate::memo::Memo;

use super::category::{ClusterCategory, ClusterHomSpace, ClusterMap, ClusterObject};
use super::ClusterError;

/// `Hom_B(X', Y')`: `Hom_C(X̃, Ỹ)` modulo maps factoring through `add(τT̃)`.
#[derive(Clone, Debug)]
pub struct BHomSpace {
    pub ambient: ClusterHomSpace,
    factoring: QuotientMap,
}

impl BHomSpace {
    pub fn dim(&self) -> usize {
        self.factoring.quotient_dim()
    }

    pub fn factoring_dim(&self) -> usize {
        self.factoring.subspace_dim()
    }

    /// Representatives of a basis of the quotient.
    pub fn basis(&self) -> Vec<ClusterMap> {
        (0..self.dim()).map(|k| self.ambient.combine(&self.factoring.lift(k))).collect()
    }

    pub fn coordinates(&self, m: &ClusterMap) -> Vec<Scalar> {
        self.factoring.coordinates(&self.ambient.coordinates(m)).expect("ambient coordinates")
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> ClusterMap {
        self.ambient.combine(&self.factoring.lift_coordinates(coeffs))
    }

    pub fn is_zero(&self, m: &ClusterMap) -> bool {
        linalg::vec_is_zero(&self.coordinates(m))
    }
}

/// The cluster-tilted algebra `B = End_C(T̃)` through its module category
/// `C / add(τT̃)`.
pub struct ClusterTilted {
    category: ClusterCategory,
    summands: Vec<ClusterObject>,
    tau_summands: Vec<ClusterObject>,
    bhoms: Memo<(ClusterObject, ClusterObject), BHomSpace>,
}

impl ClusterTilted {
    pub fn new(category: ClusterCategory, summands: Vec<ClusterObject>) -> Result<Self, ClusterError> {
        for s in &summands {
            category.check(s)?;
        }
        let mut tau_summands: Vec<ClusterObject> = summands.iter().map(|s| category.tau(s)).collect();
        tau_summands.sort();
        tau_summands.dedup();
        for s in &tau_summands {
            category.check(s)?;
        }
        Ok(ClusterTilted { category, summands, tau_summands, bhoms: Memo::default() })
    }

    pub fn category(&self) -> &ClusterCategory {
        &self.category
    }

    pub fn summands(&self) -> &[ClusterObject] {
        &self.summands
    }

    pub fn tau_summands(&self) -> &[ClusterObject] {
        &self.tau_summands
    }

    pub fn vertex_count(&self) -> usize {
        self.summands.len()
    }

    /// Whether the object is killed by `Hom_C(T̃, −)`.
    pub fn collapses(&self, x: &ClusterObject) -> bool {
        self.tau_summands.contains(x)
    }

    pub fn b_hom(&self, x: &ClusterObject, y: &ClusterObject) -> Result<Arc<BHomSpace>, ClusterError> {
        self.bhoms.get_or_try(&(*x, *y), || {
            let ambient = self.category.hom(x, y)?;
            let mut factoring: Vec<Vec<Scalar>> = Vec::new();
            if ambient.dim() > 0 {
                for w in &self.tau_summands {
                    let into = self.category.hom(x, w)?;
                    if into.dim() == 0 {
                        continue;
                    }
                    let out = self.category.hom(w, y)?;
                    if out.dim() == 0 {
                        continue;
                    }
                    let outs = out.basis();
                    for f in into.basis() {
                        for g in &outs {
                            let gf = self.category.compose(w, y, g, &f)?;
                            factoring.push(ambient.coordinates(&gf));
                        }
                    }
                }
            }
            let factoring = QuotientMap::new(ambient.dim(), &factoring).expect("coordinate lengths agree");
            Ok(BHomSpace { ambient, factoring })
        })
    }

    /// `g ∘ f` in `C / add(τT̃)`, returned as quotient coordinates in
    /// `Hom_B(X', Z')`.
    pub fn compose_coordinates(
        &self,
        (x, y, z): (&ClusterObject, &ClusterObject, &ClusterObject),
        g: &ClusterMap,
        f: &ClusterMap,
    ) -> Result<Vec<Scalar>, ClusterError> {
        let gf = self.category.compose(y, z, g, f)?;
        Ok(self.b_hom(x, z)?.coordinates(&gf))
    }

    /// `X' = Hom_C(T̃, X̃)`, described by its dimension vector over the
    /// vertices of `B`.
    pub fn bmr_image(&self, x: &ClusterObject) -> Result<BModule, ClusterError> {
        let dims = self
            .summands
            .iter()
            .map(|t| self.b_hom(t, x).map(|h| h.dim()))
            .collect::<Result<Vec<_>, _>>()?;
        if dims.iter().all(|&d| d == 0) {
            return Err(ClusterError::CollapsesToZero(*x));
        }
        Ok(BModule { object: *x, dim_vector: dims })
    }

    pub fn b_algebra(&self) -> Result<BAlgebra, ClusterError> {
        let n = self.summands.len();
        let mut hom_dims = vec![vec![0usize; n]; n];
        let mut radical: Vec<Vec<Vec<ClusterMap>>> = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&self.summands[i], &self.summands[j]);
                let h = self.b_hom(a, b)?;
                hom_dims[i][j] = h.dim();
                radical[i][j] = if i == j { self.local_radical(a)? } else { h.basis() };
            }
        }
        let mut irreducible = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut products: Vec<Vec<Scalar>> = Vec::new();
                for k in 0..n {
                    for f in &radical[i][k] {
                        for g in &radical[k][j] {
                            let (a, b, c) = (&self.summands[i], &self.summands[k], &self.summands[j]);
                            products.push(self.compose_coordinates((a, b, c), g, f)?);
                        }
                    }
                }
                let rad2 = linalg::rank_of_vectors(hom_dims[i][j], &products);
                let rad = if i == j { radical[i][i].len() } else { hom_dims[i][j] };
                irreducible[i][j] = rad - rad2;
            }
        }
        Ok(BAlgebra { summands: self.summands.clone(), hom_dims, irreducible })
    }

    /// Basis of the radical of the local ring `End_B(X')`: the kernel of
    /// `x ↦ trace(left multiplication by x)`.
    pub fn local_radical(&self, x: &ClusterObject) -> Result<Vec<ClusterMap>, ClusterError> {
        let h = self.b_hom(x, x)?;
        let basis = h.basis();
        let d = basis.len();
        let mut traces = Matrix::zero(1, d);
        for (k, a) in basis.iter().enumerate() {
            let mut t = Scalar::zero();
            for (m, b) in basis.iter().enumerate() {
                let ab = self.compose_coordinates((x, x, x), a, b)?;
                t = &t + &ab[m];
            }
            traces[(0, k)] = t;
        }
        Ok(linalg::kernel_basis(&traces).into_iter().map(|c| h.combine(&c)).collect())
    }
}

/// A `B`-module `Hom_C(T̃, X̃)` described by its dimension vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BModule {
    pub object: ClusterObject,
    pub dim_vector: Vec<usize>,
}

/// `B = End_C(T̃)` as dimension data: `hom_dims[i][j] = dim Hom_B(T̃_i, T̃_j)`
/// and `irreducible[i][j] = dim rad/rad²` between the summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BAlgebra {
    pub summands: Vec<ClusterObject>,
    pub hom_dims: Vec<Vec<usize>>,
    pub irreducible: Vec<Vec<usize>>,
}

impl BAlgebra {
    pub fn dimension(&self) -> usize {
        self.hom_dims.iter().flatten().sum()
    }

    /// Arrows of the Gabriel quiver of `B`. An irreducible map
    /// `T̃_i → T̃_j` gives an arrow `j → i`: it induces a map between the
    /// projectives `Hom_C(T̃, T̃_i) → Hom_C(T̃, T̃_j)`, and arrows of a
    /// right-module quiver run against maps of projectives.
    pub fn gabriel_arrows(&self) -> Vec<(usize, usize)> {
        let n = self.summands.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for _ in 0..self.irreducible[i][j] {
                    out.push((j, i));
                }
            }
        }
        out.sort();
        out
    }
}
