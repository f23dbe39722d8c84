//! Tilting modules over a tame hereditary algebra and their torsion pairs.

mod torsion;

pub use torsion::{
    classify_torsion, enumerate_torsion, maximal_cones, preinjective_bound, torsion_part, ConeDecomposition,
    MaximalCone, TorsionClass, TorsionClassification,
};

use std::sync::Arc;

use thiserror::Error;

use crate::ar::{ArError, Catalog, IndecLabel};
use crate::quiver::{self, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TiltingError {
    #[error("not rigid: Ext¹({left}, {right}) ≠ 0")]
    NotRigid { left: IndecLabel, right: IndecLabel },
    #[error("wrong summand count: {found} summands for {expected} vertices")]
    WrongSummandCount { found: usize, expected: usize },
    #[error("preprojective summand out of scope: {0}")]
    Preprojective(IndecLabel),
    #[error("duplicate summand {0}")]
    Duplicate(IndecLabel),
    #[error("no preinjective summand")]
    NoPreinjective,
    #[error("bound insufficient: preinjective scan up to power {bound}")]
    BoundInsufficient { bound: usize },
    #[error(transparent)]
    Ar(#[from] ArError),
}

/// A validated tilting module `T = T_I ⊕ T_R` with preinjective and regular
/// summands only.
#[derive(Clone)]
pub struct TiltingModule {
    catalog: Arc<Catalog>,
    summands: Vec<IndecLabel>,
}

impl std::fmt::Debug for TiltingModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TiltingModule").field("summands", &self.summands).finish()
    }
}

/// Checks that `labels` name `n` distinct, pairwise Ext-orthogonal,
/// non-preprojective indecomposables.
pub fn validate_tilting(catalog: &Arc<Catalog>, labels: &[IndecLabel]) -> Result<TiltingModule, TiltingError> {
    for (k, l) in labels.iter().enumerate() {
        catalog.check_label(l)?;
        if labels[..k].contains(l) {
            return Err(TiltingError::Duplicate(*l));
        }
        if l.is_preprojective() {
            return Err(TiltingError::Preprojective(*l));
        }
    }
    check_rigid(catalog, labels)?;
    let n = catalog.vertex_count();
    if labels.len() != n {
        return Err(TiltingError::WrongSummandCount { found: labels.len(), expected: n });
    }
    if !labels.iter().any(IndecLabel::is_preinjective) {
        return Err(TiltingError::NoPreinjective);
    }
    Ok(TiltingModule { catalog: catalog.clone(), summands: labels.to_vec() })
}

/// The first pair of labels with a non-vanishing Ext¹, if any.
pub fn check_rigid(catalog: &Catalog, labels: &[IndecLabel]) -> Result<(), TiltingError> {
    for a in labels {
        for b in labels {
            if catalog.ext_dim(a, b)? != 0 {
                return Err(TiltingError::NotRigid { left: *a, right: *b });
            }
        }
    }
    Ok(())
}

impl TiltingModule {
    pub fn catalog(&self) -> &Arc<Catalog> {
        &self.catalog
    }

    pub fn summands(&self) -> &[IndecLabel] {
        &self.summands
    }

    pub fn preinjective_part(&self) -> Vec<IndecLabel> {
        self.summands.iter().copied().filter(IndecLabel::is_preinjective).collect()
    }

    pub fn regular_part(&self) -> Vec<IndecLabel> {
        self.summands.iter().copied().filter(IndecLabel::is_regular).collect()
    }

    pub fn summand_reps(&self) -> Result<Vec<Arc<Representation>>, TiltingError> {
        Ok(self.summands.iter().map(|l| self.catalog.realize(l)).collect::<Result<_, _>>()?)
    }

    /// `Ext¹(T, X) = 0`.
    pub fn in_torsion(&self, x: &Representation) -> Result<bool, TiltingError> {
        for t in self.summand_reps()? {
            if quiver::ext_dim(&t, x).map_err(ArError::from)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Hom(T, X) = 0`.
    pub fn in_free(&self, x: &Representation) -> Result<bool, TiltingError> {
        for t in self.summand_reps()? {
            if quiver::hom_dim(&t, x).map_err(ArError::from)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn label_in_torsion(&self, x: &IndecLabel) -> Result<bool, TiltingError> {
        for t in &self.summands {
            if self.catalog.ext_dim(t, x)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn label_in_free(&self, x: &IndecLabel) -> Result<bool, TiltingError> {
        for t in &self.summands {
            if self.catalog.hom_dim(t, x)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::{tau, CatalogOptions};
    use crate::quiver::Quiver;

    fn kronecker() -> Arc<Catalog> {
        Arc::new(Catalog::new(Quiver::kronecker(), CatalogOptions::default()).unwrap())
    }

    #[test]
    fn injectives_are_tilting() {
        let cat = kronecker();
        let t = validate_tilting(&cat, &[IndecLabel::injective(0), IndecLabel::injective(1)]).unwrap();
        assert_eq!(t.preinjective_part().len(), 2);
        assert!(t.regular_part().is_empty());
        let ti1 = cat.realize(&IndecLabel::preinjective(0, 1)).unwrap();
        assert!(!t.in_torsion(&ti1).unwrap());
        assert!(t.in_free(&tau(&cat.realize(&IndecLabel::injective(1)).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn simples_are_not_rigid() {
        let cat = kronecker();
        // S1 = I1 and S2 = P2 on the Kronecker quiver
        let err = check_rigid(&cat, &[IndecLabel::injective(0), IndecLabel::projective(1)]).unwrap_err();
        assert!(matches!(err, TiltingError::NotRigid { .. }));
    }

    #[test]
    fn rejections() {
        let cat = kronecker();
        let i = IndecLabel::injective(0);
        assert_eq!(validate_tilting(&cat, &[i, i]).unwrap_err(), TiltingError::Duplicate(i));
        assert_eq!(
            validate_tilting(&cat, &[i]).unwrap_err(),
            TiltingError::WrongSummandCount { found: 1, expected: 2 }
        );
        let p = IndecLabel::projective(1);
        assert_eq!(validate_tilting(&cat, &[i, p]).unwrap_err(), TiltingError::Preprojective(p));
    }
}
