use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::ar::{cone, Cone, IndecLabel};
use crate::quiver::{hom_space, RepMorphism, Representation};

use super::{TiltingError, TiltingModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionClassification {
    pub torsion_finite: bool,
    pub free_finite: bool,
}

/// The torsion class is finite exactly when `T` has a preinjective summand;
/// the free class is finite exactly when `T` has a preprojective one.
pub fn classify_torsion(t: &TiltingModule) -> TorsionClassification {
    TorsionClassification {
        torsion_finite: t.summands().iter().any(IndecLabel::is_preinjective),
        free_finite: t.summands().iter().any(IndecLabel::is_preprojective),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalCone {
    pub cone: Cone,
    /// Summands of `T` inside the cone.
    pub summands: Vec<IndecLabel>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeDecomposition {
    pub cones: Vec<MaximalCone>,
}

impl ConeDecomposition {
    pub fn contains(&self, label: &IndecLabel) -> bool {
        self.cones.iter().any(|c| c.cone.contains(label))
    }

    pub fn levels(&self) -> Vec<usize> {
        self.cones.iter().map(|c| c.cone.level).collect()
    }
}

/// Cones over regular summands of `T` that lie in no other such cone,
/// ordered by decreasing level.
pub fn maximal_cones(t: &TiltingModule) -> Result<ConeDecomposition, TiltingError> {
    let cat = t.catalog();
    let regular = t.regular_part();
    let cones: Vec<Cone> = regular.iter().map(|r| cone(cat, r)).collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (k, c) in cones.iter().enumerate() {
        let covered = cones.iter().enumerate().any(|(j, d)| j != k && d.contains(&c.vertex));
        if covered {
            continue;
        }
        let summands = regular.iter().copied().filter(|r| c.contains(r)).collect();
        out.push(MaximalCone { cone: c.clone(), summands });
    }
    out.sort_by(|a, b| b.cone.level.cmp(&a.cone.level).then(a.cone.vertex.cmp(&b.cone.vertex)));
    Ok(ConeDecomposition { cones: out })
}

/// Past this power every `τ^k I_i` has `Ext¹(T, τ^k I_i) ≠ 0`.
pub fn preinjective_bound(t: &TiltingModule) -> usize {
    let a_max = t
        .summands()
        .iter()
        .filter_map(|l| match *l {
            IndecLabel::Transjective { power, .. } if l.is_preinjective() => Some(power),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    a_max + 1 + t.catalog().sincerity_threshold()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionClass {
    pub preinjective: Vec<IndecLabel>,
    pub regular: Vec<IndecLabel>,
}

impl TorsionClass {
    pub fn members(&self) -> Vec<IndecLabel> {
        self.preinjective.iter().chain(&self.regular).copied().collect()
    }

    pub fn len(&self) -> usize {
        self.preinjective.len() + self.regular.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, label: &IndecLabel) -> bool {
        self.preinjective.contains(label) || self.regular.contains(label)
    }
}

/// All indecomposables `X` with `Ext¹(T, X) = 0`. Preinjectives are scanned
/// up to [`preinjective_bound`]; regular candidates are the members of the
/// maximal cones.
pub fn enumerate_torsion(t: &TiltingModule) -> Result<TorsionClass, TiltingError> {
    let cat = t.catalog();
    let n = cat.vertex_count();
    let bound = preinjective_bound(t);
    if bound > cat.options().max_power {
        return Err(TiltingError::BoundInsufficient { bound });
    }
    let mut preinjective = Vec::new();
    for power in 0..bound {
        for v in 0..n {
            let l = IndecLabel::preinjective(v, power);
            if t.label_in_torsion(&l)? {
                preinjective.push(l);
            }
        }
    }
    for v in 0..n {
        if t.label_in_torsion(&IndecLabel::preinjective(v, bound))? {
            return Err(TiltingError::BoundInsufficient { bound });
        }
    }
    let cones = maximal_cones(t)?;
    let mut regular = BTreeSet::new();
    for c in &cones.cones {
        for m in &c.cone.members {
            if t.label_in_torsion(m)? {
                regular.insert(*m);
            }
        }
    }
    for tube in cat.tubes().iter().filter(|tb| tb.is_homogeneous()) {
        let mouth = IndecLabel::regular(tube.id, 0, 1);
        debug_assert!(!t.label_in_torsion(&mouth)?, "homogeneous module {mouth} in the torsion class");
    }
    preinjective.sort();
    Ok(TorsionClass { preinjective, regular: regular.into_iter().collect() })
}

/// The torsion submodule `tX`: the trace of `T` in `X`, with its inclusion.
pub fn torsion_part(t: &TiltingModule, x: &Representation) -> Result<(Representation, RepMorphism), TiltingError> {
    let mut maps = Vec::new();
    for s in t.summand_reps()? {
        maps.extend(hom_space(&s, x).map_err(crate::ar::ArError::from)?.basis().iter().cloned());
    }
    Ok(x.image_sum(&maps))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ar::{Catalog, CatalogOptions};
    use crate::quiver::Quiver;
    use crate::tilting::validate_tilting;

    #[test]
    fn kronecker_injectives() {
        let cat = Arc::new(Catalog::new(Quiver::kronecker(), CatalogOptions::default()).unwrap());
        let t = validate_tilting(&cat, &[IndecLabel::injective(0), IndecLabel::injective(1)]).unwrap();
        assert!(classify_torsion(&t).torsion_finite);
        let tc = enumerate_torsion(&t).unwrap();
        assert_eq!(tc.members(), vec![IndecLabel::injective(0), IndecLabel::injective(1)]);
        assert!(maximal_cones(&t).unwrap().cones.is_empty());
        // brute force over the window
        for l in cat.window_labels() {
            assert_eq!(t.label_in_torsion(&l).unwrap(), tc.contains(&l), "{l}");
        }
    }

    #[test]
    fn trace_of_injectives_is_everything_torsion() {
        let cat = Arc::new(Catalog::new(Quiver::kronecker(), CatalogOptions::default()).unwrap());
        let t = validate_tilting(&cat, &[IndecLabel::injective(0), IndecLabel::injective(1)]).unwrap();
        let x = cat.realize(&IndecLabel::regular(0, 0, 2)).unwrap();
        let (tx, incl) = torsion_part(&t, &x).unwrap();
        assert!(incl.is_morphism(&tx, &x));
        assert!(tx.is_zero());
        let i1 = cat.realize(&IndecLabel::injective(1)).unwrap();
        assert_eq!(torsion_part(&t, &i1).unwrap().0.dims(), i1.dims());
    }
}
