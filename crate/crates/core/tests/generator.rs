mod common;

use repdim_core::ar::{slice_modules, IndecLabel};
use repdim_core::cluster::ClusterObject;
use repdim_core::generator::{
    build_generator, canonical_sequence, choose_slice, cogenerator_check, factorization_criterion, GeneratorError,
};
use repdim_core::quiver::{ExtClass, Representation};

fn module(l: IndecLabel) -> ClusterObject {
    ClusterObject::module(l)
}

#[test]
fn kronecker_dh_generator() {
    let instance = common::kronecker_dh();
    let slice = choose_slice(instance.tilting(), instance.torsion(), false);
    // τT ⊂ T(Σ) forces one step past DH
    assert_eq!(slice.power, 1);
    let g = build_generator(&instance, slice_modules(2, 0)).unwrap();
    assert!(g.cones.is_empty());
    let expected = vec![
        module(IndecLabel::injective(0)),
        module(IndecLabel::injective(1)),
        ClusterObject::shifted(0),
        ClusterObject::shifted(1),
        module(IndecLabel::projective(0)),
        module(IndecLabel::projective(1)),
    ];
    assert_eq!(g.summands, expected);
    assert!(g.collapsed.is_empty());
    let g = build_generator(&instance, slice).unwrap();
    assert_eq!(g.summands, expected);
    assert_eq!(g.collapsed, vec![module(IndecLabel::preinjective(0, 1)), module(IndecLabel::preinjective(1, 1))]);
}

#[test]
fn d4_cogenerator_slice_and_cone_part() {
    let (instance, g) = common::d4_final_generator(true);
    assert_eq!(g.slice.power, 2);
    assert_eq!(g.cone_part(), vec![module(IndecLabel::regular(0, 1, 1))]);
    assert!(cogenerator_check(instance, g).is_cogenerator());
    let (_, plain) = common::d4_final_generator(false);
    assert_eq!(plain.slice.power, 1);
    assert!(!cogenerator_check(instance, plain).is_cogenerator());
}

#[test]
fn summands_unfold_the_definition() {
    let (instance, g) = common::d4_final_generator(true);
    let n = instance.tilting().catalog().vertex_count();
    let mut listed: Vec<ClusterObject> = g.n1.iter().map(|l| module(*l)).collect();
    listed.extend(g.shifted.iter().copied());
    listed.extend(g.projectives.iter().map(|l| module(*l)));
    listed.extend(g.cones.iter().flatten().map(|l| module(*l)));
    listed.sort();
    listed.dedup();
    assert_eq!(g.n1.len(), n * (g.slice.power + 1));
    assert_eq!(g.summands.len() + g.collapsed.len(), listed.len());
    for m in instance.torsion().members() {
        let x = module(m);
        assert!(g.contains(&x) || g.collapsed.contains(&x), "{m}");
    }
}

#[test]
fn kronecker_canonical_sequence_is_a_projective_resolution() {
    let instance = common::kronecker_dh();
    let t = instance.tilting();
    let x = t.catalog().realize(&IndecLabel::preinjective(0, 1)).unwrap();
    assert_eq!(x.dims(), &[3, 2]);
    let seq = canonical_sequence(t, &x).unwrap();
    assert_eq!(seq.torsion_part.dims(), &[0, 0]);
    for v in 0..2 {
        assert_eq!(seq.middle.dims()[v], seq.kernel.dims()[v] + x.dims()[v]);
    }
    assert!(seq.map.is_epi());
    assert!(factorization_criterion(t, &x, &seq.kernel, &seq.connecting).unwrap());
}

#[test]
fn canonical_sequence_rejections() {
    let instance = common::kronecker_dh();
    let t = instance.tilting();
    let p = t.catalog().realize(&IndecLabel::projective(0)).unwrap();
    assert_eq!(canonical_sequence(t, &p).unwrap_err(), GeneratorError::Projective);
    let i = t.catalog().realize(&IndecLabel::injective(1)).unwrap();
    assert_eq!(canonical_sequence(t, &i).unwrap_err(), GeneratorError::Torsion);
}

#[test]
fn zero_classes_always_factor() {
    let instance = common::kronecker_dh();
    let t = instance.tilting();
    let q = t.catalog().quiver().clone();
    let x = t.catalog().realize(&IndecLabel::preinjective(1, 2)).unwrap();
    let e = Representation::projective(&q, 0);
    let zero = ExtClass::zero(&q, x.dims(), e.dims());
    assert!(factorization_criterion(t, &x, &e, &zero).unwrap());
}
