use serde::{Deserialize, Serialize};

use crate::ar::IndecLabel;
use crate::cluster::{ClusterMap, ClusterObject, ClusterTilted};
use crate::linalg::{self, Matrix, Scalar};

use super::sequence::{factorization_criterion, ApproximationSequence};
use super::{GeneratorError, GeneratorModule, TiltedInstance};

/// Ranks of `0 → Hom_B(S', K') → Hom_B(S', M'_X) → Hom_B(S', X') → 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomRankRow {
    pub summand: ClusterObject,
    pub kernel_dim: usize,
    pub middle_dim: usize,
    pub target_dim: usize,
    pub left_rank: usize,
    pub right_rank: usize,
    pub composite_zero: bool,
}

impl HomRankRow {
    pub fn is_mono(&self) -> bool {
        self.left_rank == self.kernel_dim
    }

    pub fn is_epi(&self) -> bool {
        self.right_rank == self.target_dim
    }

    pub fn is_exact(&self) -> bool {
        self.composite_zero && self.is_mono() && self.is_epi() && self.left_rank + self.right_rank == self.middle_dim
    }
}

/// The image in `mod B` of a canonical sequence, with `Hom_B(S', −)` rank
/// data for every summand `S'` of `M'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSequenceCheck {
    pub sample: IndecLabel,
    pub kernel: Vec<ClusterObject>,
    pub middle: Vec<ClusterObject>,
    /// Whether the connecting map of the sequence vanishes on `tX`.
    pub connecting_factors: bool,
    pub rows: Vec<HomRankRow>,
}

impl BSequenceCheck {
    pub fn is_exact(&self) -> bool {
        self.rows.iter().all(HomRankRow::is_exact)
    }
}

struct Pieces {
    kernel: Vec<ClusterObject>,
    middle: Vec<ClusterObject>,
    // j_{s,k}: K_k → M_s, indexed [s][k]
    j: Vec<Vec<ClusterMap>>,
    // f_s: M_s → X
    f: Vec<ClusterMap>,
}

fn pieces(instance: &TiltedInstance, seq: &ApproximationSequence) -> Result<Pieces, GeneratorError> {
    let catalog = instance.tilting().catalog();
    let middle_split = catalog.split(&seq.middle)?;
    let kernel_split = catalog.split(&seq.kernel)?;
    let j: Vec<Vec<ClusterMap>> = middle_split
        .iter()
        .map(|s| {
            kernel_split
                .iter()
                .map(|k| ClusterMap::from_hom(s.projection.after(&seq.kernel_inclusion).after(&k.inclusion)))
                .collect()
        })
        .collect();
    let f = middle_split.iter().map(|s| ClusterMap::from_hom(seq.map.after(&s.inclusion))).collect();
    Ok(Pieces {
        kernel: kernel_split.iter().map(|k| ClusterObject::module(k.key)).collect(),
        middle: middle_split.iter().map(|s| ClusterObject::module(s.key)).collect(),
        j,
        f,
    })
}

/// Matrix of post-composition `Hom_B(S', ⊕ A_a) → Hom_B(S', ⊕ C_c)` for a
/// map given by components `maps[c][a]: A_a → C_c`.
fn post_composition(
    b: &ClusterTilted,
    s: &ClusterObject,
    sources: &[ClusterObject],
    targets: &[ClusterObject],
    maps: &dyn Fn(usize, usize) -> ClusterMap,
) -> Result<(Matrix, usize, usize), GeneratorError> {
    let target_dims = targets.iter().map(|c| b.b_hom(s, c).map(|h| h.dim())).collect::<Result<Vec<_>, _>>()?;
    let rows: usize = target_dims.iter().sum();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in sources.iter().enumerate() {
        let h = b.b_hom(s, a)?;
        for phi in h.basis() {
            let mut col = Vec::with_capacity(rows);
            for (ci, c) in targets.iter().enumerate() {
                if target_dims[ci] == 0 {
                    continue;
                }
                col.extend(b.compose_coordinates((s, a, c), &maps(ci, ai), &phi)?);
            }
            cols.push(col);
        }
    }
    let width = cols.len();
    Ok((Matrix::from_columns(rows, &cols), rows, width))
}

/// Verifies that `0 → K' → (tX)' ⊕ P'_{X/tX} → X' → 0` is exact in `mod B`
/// and records `Hom_B(S', −)` ranks for every summand of `M'`.
pub fn induced_b_sequence(
    instance: &TiltedInstance,
    generator: &GeneratorModule,
    sample: &IndecLabel,
    seq: &ApproximationSequence,
) -> Result<BSequenceCheck, GeneratorError> {
    let b = instance.algebra();
    let p = pieces(instance, seq)?;
    let x = [ClusterObject::module(*sample)];
    let mut rows = Vec::with_capacity(generator.summands.len());
    let mut probes: Vec<ClusterObject> = b.summands().to_vec();
    probes.extend(generator.summands.iter().filter(|s| !b.summands().contains(s)));
    for s in &probes {
        let (jm, middle_dim, kernel_dim) = post_composition(b, s, &p.kernel, &p.middle, &|c, a| p.j[c][a].clone())?;
        let (fm, target_dim, middle_cols) = post_composition(b, s, &p.middle, &x, &|_, a| p.f[a].clone())?;
        debug_assert_eq!(middle_cols, middle_dim);
        let composite_zero = middle_dim == 0 || fm.mul(&jm).is_zero();
        let row = HomRankRow {
            summand: *s,
            kernel_dim,
            middle_dim,
            target_dim,
            left_rank: linalg::rank(&jm),
            right_rank: linalg::rank(&fm),
            composite_zero,
        };
        if b.summands().contains(s) {
            if !row.is_epi() {
                return Err(GeneratorError::NotEpi { sample: *sample, vertex: *s });
            }
            if !row.is_mono() || !row.is_exact() {
                return Err(GeneratorError::KernelMismatch { sample: *sample, summand: *s });
            }
        }
        if generator.contains(s) {
            rows.push(row);
        }
    }
    let connecting_factors = factorization_criterion(instance.tilting(), &seq.x, &seq.kernel, &seq.connecting)?;
    if !connecting_factors {
        return Err(GeneratorError::CriterionMismatch(*sample));
    }
    Ok(BSequenceCheck { sample: *sample, kernel: p.kernel, middle: p.middle, connecting_factors, rows })
}

/// Every map from a summand of `M'` to `X'` factors through `f'`, and the
/// whole `Hom_B(M', −)` sequence is exact.
pub fn check_approximation(check: &BSequenceCheck) -> Result<(), GeneratorError> {
    for row in &check.rows {
        if !row.is_epi() {
            return Err(GeneratorError::NotApproximation { sample: check.sample, summand: row.summand });
        }
        if !row.is_exact() {
            return Err(GeneratorError::KernelMismatch { sample: check.sample, summand: row.summand });
        }
    }
    Ok(())
}
