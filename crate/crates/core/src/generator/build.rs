use serde::{Deserialize, Serialize};

use crate::ar::{cone_edge, slice_modules, IndecLabel, Slice};
use crate::cluster::ClusterObject;
use crate::linalg;
use crate::tilting::{MaximalCone, TiltingModule, TorsionClass};

use super::{GeneratorError, TiltedInstance};

/// The smallest preinjective slice `τ^k DH` whose successors contain every
/// preinjective torsion module and every preinjective `τT_i`, and with
/// `want_cogenerator` also every preinjective `τ²T_i`.
pub fn choose_slice(t: &TiltingModule, torsion: &TorsionClass, want_cogenerator: bool) -> Slice {
    let mut k = torsion.preinjective.iter().filter_map(preinjective_power).max().unwrap_or(0);
    let shift = if want_cogenerator { 2 } else { 1 };
    for s in t.summands() {
        if let Some(a) = preinjective_power(s) {
            k = k.max(a + shift);
        }
    }
    slice_modules(t.catalog().vertex_count(), k)
}

fn preinjective_power(label: &IndecLabel) -> Option<usize> {
    match *label {
        IndecLabel::Transjective { power, .. } if label.is_preinjective() => Some(power),
        _ => None,
    }
}

/// `M' = N'₁ ⊕ Q' ⊕ H' ⊕ (W₁)' ⊕ … ⊕ (W_m)'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorModule {
    pub slice: Slice,
    /// `T(Σ)`: the preinjectives `τ^j I_i` with `j ≤ k`.
    pub n1: Vec<IndecLabel>,
    pub shifted: Vec<ClusterObject>,
    pub projectives: Vec<IndecLabel>,
    /// Members of each maximal cone.
    pub cones: Vec<Vec<IndecLabel>>,
    /// The distinct objects of `C` whose images are the indecomposable
    /// summands of `M'`, in the order above.
    pub summands: Vec<ClusterObject>,
    /// Listed objects lying in `add(τT̃)`, whose images vanish.
    pub collapsed: Vec<ClusterObject>,
}

impl GeneratorModule {
    pub fn contains(&self, x: &ClusterObject) -> bool {
        self.summands.contains(x)
    }

    /// Summands of `M'₂`.
    pub fn cone_part(&self) -> Vec<ClusterObject> {
        let listed: Vec<ClusterObject> = self.cones.iter().flatten().map(|l| ClusterObject::module(*l)).collect();
        self.summands.iter().filter(|s| listed.contains(s)).copied().collect()
    }
}

pub fn build_generator(instance: &TiltedInstance, slice: Slice) -> Result<GeneratorModule, GeneratorError> {
    let t = instance.tilting();
    let catalog = t.catalog();
    let n = catalog.vertex_count();
    for l in &slice.members {
        catalog.check_label(l)?;
    }
    let n1: Vec<IndecLabel> = (0..=slice.power).flat_map(|p| (0..n).map(move |v| IndecLabel::preinjective(v, p))).collect();
    let shifted: Vec<ClusterObject> = (0..n).map(ClusterObject::shifted).collect();
    let projectives: Vec<IndecLabel> = (0..n).map(IndecLabel::projective).collect();
    let cones: Vec<Vec<IndecLabel>> = instance.cones().cones.iter().map(|c| c.cone.members.clone()).collect();
    let listed = n1
        .iter()
        .map(|l| ClusterObject::module(*l))
        .chain(shifted.iter().copied())
        .chain(projectives.iter().map(|l| ClusterObject::module(*l)))
        .chain(cones.iter().flatten().map(|l| ClusterObject::module(*l)));
    let mut summands: Vec<ClusterObject> = Vec::new();
    let mut collapsed: Vec<ClusterObject> = Vec::new();
    for x in listed {
        if instance.algebra().collapses(&x) {
            if !collapsed.contains(&x) {
                collapsed.push(x);
            }
        } else if !summands.contains(&x) {
            summands.push(x);
        }
    }
    for member in instance.torsion().members() {
        let x = ClusterObject::module(member);
        if !summands.contains(&x) && !collapsed.contains(&x) {
            return Err(GeneratorError::TorsionEscapes(member));
        }
    }
    Ok(GeneratorModule { slice, n1, shifted, projectives, cones, summands, collapsed })
}

/// The injective `B`-modules `Hom_C(T̃, τ²T̃_i)` and those missing from
/// `add(M')`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CogeneratorCheck {
    pub injectives: Vec<ClusterObject>,
    pub missing: Vec<ClusterObject>,
}

impl CogeneratorCheck {
    pub fn is_cogenerator(&self) -> bool {
        self.missing.is_empty()
    }
}

pub fn cogenerator_check(instance: &TiltedInstance, generator: &GeneratorModule) -> CogeneratorCheck {
    let category = instance.algebra().category();
    let injectives: Vec<ClusterObject> =
        instance.algebra().summands().iter().map(|s| category.tau(&category.tau(s))).collect();
    let missing = injectives.iter().filter(|x| !generator.contains(x)).copied().collect();
    CogeneratorCheck { injectives, missing }
}

/// Whether every map from a member of the cone to `target` factors through
/// the cone's edge, compared as ranks of the composition pairing in
/// `mod H`.
pub fn edge_factorization(instance: &TiltedInstance, cone: &MaximalCone, target: &IndecLabel) -> Result<bool, GeneratorError> {
    let catalog = instance.tilting().catalog();
    let edge = cone_edge(catalog, &cone.cone.vertex)?;
    for m in &cone.cone.members {
        let direct = catalog.hom(m, target)?;
        if direct.dim() == 0 {
            continue;
        }
        let mut through = Vec::new();
        for e in &edge {
            let into = catalog.hom(m, e)?;
            let out = catalog.hom(e, target)?;
            for f in into.basis() {
                for g in out.basis() {
                    through.push(direct.coordinates(&g.after(f)));
                }
            }
        }
        if linalg::rank_of_vectors(direct.dim(), &through) < direct.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}
