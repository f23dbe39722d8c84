use std::sync::Arc;

use crate::ar::coxeter_plus;
use crate::linalg::{self, Matrix, QuotientMap, Scalar};
use crate::quiver::{cokernel, ext1_space, extension_class, hom_space, kernel, ExtClass, Quiver, RepMorphism, Representation};
use crate::tilting::{torsion_part, TiltingModule};

use super::GeneratorError;

/// `0 → K → tX ⊕ P_{X/tX} → X → 0` with `f = (i, g)`.
#[derive(Clone, Debug)]
pub struct ApproximationSequence {
    pub x: Representation,
    pub torsion_part: Representation,
    /// `i: tX → X`.
    pub inclusion: RepMorphism,
    pub cover: Representation,
    /// Vertices of the indecomposable summands of the projective cover.
    pub cover_tops: Vec<usize>,
    /// `g: P_{X/tX} → X`, lifting the cover of `X/tX`.
    pub lift: RepMorphism,
    pub middle: Representation,
    /// `f: tX ⊕ P_{X/tX} → X`.
    pub map: RepMorphism,
    pub kernel: Representation,
    /// `j: K → tX ⊕ P_{X/tX}`.
    pub kernel_inclusion: RepMorphism,
    /// The class of the sequence in `Ext¹(X, K)`.
    pub connecting: ExtClass,
}

/// The map `P_v → X` sending the trivial path to `elem ∈ X_v`.
fn from_projective(quiver: &Arc<Quiver>, v: usize, x: &Representation, elem: &[Scalar]) -> Result<(Representation, RepMorphism), GeneratorError> {
    let p = Representation::projective(quiver, v);
    let h = hom_space(&p, x)?;
    let evaluations: Vec<Vec<Scalar>> = h.basis().iter().map(|f| f.at(v).column(0)).collect();
    let coeffs = linalg::solve(&Matrix::from_columns(x.dims()[v], &evaluations), elem).expect("evaluation at the top is bijective");
    Ok((p, h.combine(&coeffs)))
}

pub fn canonical_sequence(t: &TiltingModule, x: &Representation) -> Result<ApproximationSequence, GeneratorError> {
    if coxeter_plus(x).is_zero() {
        return Err(GeneratorError::Projective);
    }
    let quiver = x.quiver().clone();
    let n = quiver.vertex_count();
    let (tx, inclusion) = torsion_part(t, x)?;
    if tx.dims() == x.dims() {
        return Err(GeneratorError::Torsion);
    }
    let (y, p) = cokernel(x, &inclusion);

    let mut cover_tops = Vec::new();
    let mut parts: Vec<Representation> = Vec::new();
    let mut lifts: Vec<RepMorphism> = Vec::new();
    for v in 0..n {
        // rad Y at v: images of the arrows ending at v
        let image: Vec<Vec<Scalar>> = quiver
            .arrows_into(v)
            .flat_map(|a| {
                let m = y.map(a);
                (0..m.cols()).map(move |c| m.column(c))
            })
            .collect();
        let top = QuotientMap::new(y.dims()[v], &image).expect("column lengths agree");
        for k in 0..top.quotient_dim() {
            let target = top.lift(k);
            let preimage = linalg::solve(p.at(v), &target).expect("projection is surjective");
            let (pv, g) = from_projective(&quiver, v, x, &preimage)?;
            cover_tops.push(v);
            parts.push(pv);
            lifts.push(g);
        }
    }
    let cover = if parts.is_empty() {
        Representation::zero(quiver.clone())
    } else {
        Representation::direct_sum(&parts.iter().collect::<Vec<_>>())?
    };
    let middle = Representation::direct_sum(&[&tx, &cover])?;
    let lift = if lifts.is_empty() { RepMorphism::zero(&cover, x) } else { RepMorphism::row(&lifts.iter().collect::<Vec<_>>()) };
    let map = RepMorphism::row(&[&inclusion, &lift]);
    let (k, j) = kernel(&middle, &map);

    let sample = format!("{:?}", x.dim_vector());
    let fail = |reason: &str| GeneratorError::NotExact { sample: sample.clone(), reason: reason.into() };
    if !map.is_morphism(&middle, x) || !map.is_epi() {
        return Err(fail("f is not surjective"));
    }
    if !coxeter_plus(&k).is_zero() {
        return Err(fail("K is not projective"));
    }
    let connecting = extension_class(&middle, x, &j, &map);
    Ok(ApproximationSequence {
        x: x.clone(),
        torsion_part: tx,
        inclusion,
        cover,
        cover_tops,
        lift,
        middle,
        map,
        kernel: k,
        kernel_inclusion: j,
        connecting,
    })
}

/// Whether `h ∈ Ext¹(X, E)` vanishes on the torsion part `tX`, the kernel
/// of the canonical map from `X` into `add(τT)`.
pub fn factorization_criterion(t: &TiltingModule, x: &Representation, e: &Representation, h: &ExtClass) -> Result<bool, GeneratorError> {
    let (tx, inclusion) = torsion_part(t, x)?;
    if tx.is_zero() {
        return Ok(true);
    }
    let restricted = h.pullback(x.quiver(), &inclusion);
    Ok(ext1_space(&tx, e)?.is_trivial(&restricted))
}
