mod common;

use repdim_core::ar::IndecLabel;
use repdim_core::quiver;
use repdim_core::tilting::{enumerate_torsion, maximal_cones, validate_tilting, TiltingError, TiltingModule};

/// Members of the catalog window with `Ext¹(T, X) = 0`.
fn oracle(t: &TiltingModule) -> Vec<IndecLabel> {
    let catalog = t.catalog();
    let summands = t.summand_reps().unwrap();
    let mut out: Vec<IndecLabel> = catalog
        .window_labels()
        .into_iter()
        .filter(|l| {
            let x = catalog.realize(l).unwrap();
            summands.iter().all(|s| quiver::ext_dim(s, &x).unwrap() == 0)
        })
        .collect();
    out.sort();
    out
}

fn sorted(mut v: Vec<IndecLabel>) -> Vec<IndecLabel> {
    v.sort();
    v
}

#[test]
fn kronecker_dh_torsion_is_add_dh() {
    let instance = common::kronecker_dh();
    let torsion = sorted(instance.torsion().members());
    assert_eq!(torsion, vec![IndecLabel::injective(0), IndecLabel::injective(1)]);
    assert_eq!(oracle(instance.tilting()), torsion);
}

#[test]
fn d4_torsion_matches_the_ext_oracle() {
    let instance = common::d4_final();
    let torsion = sorted(enumerate_torsion(instance.tilting()).unwrap().members());
    assert_eq!(oracle(instance.tilting()), torsion);
    for l in &torsion {
        assert!(!instance.tilting().label_in_free(l).unwrap(), "{l} in both classes");
    }
}

#[test]
fn d4_has_one_cone_at_the_regular_summand() {
    let instance = common::d4_final();
    let cones = maximal_cones(instance.tilting()).unwrap();
    assert_eq!(cones.levels(), vec![1]);
    let c = &cones.cones[0];
    assert_eq!(c.cone.vertex, IndecLabel::regular(0, 1, 1));
    assert_eq!(c.summands, vec![IndecLabel::regular(0, 1, 1)]);
    for r in &instance.torsion().regular {
        assert!(cones.contains(r), "{r} outside the cones");
    }
}

#[test]
fn cones_have_triangular_size_and_are_disjoint() {
    let instance = common::d4_final();
    let cones = maximal_cones(instance.tilting()).unwrap();
    let mut seen = Vec::new();
    for c in &cones.cones {
        let m = c.cone.level;
        assert_eq!(c.cone.members.len(), m * (m + 1) / 2);
        for x in &c.cone.members {
            assert!(!seen.contains(x));
            seen.push(*x);
        }
    }
}

#[test]
fn validation_rejects_bad_input() {
    let c = common::catalog(common::kronecker(), 4);
    let i0 = IndecLabel::injective(0);
    let i1 = IndecLabel::injective(1);
    assert!(matches!(validate_tilting(&c, &[i0]), Err(TiltingError::WrongSummandCount { found: 1, expected: 2 })));
    assert!(matches!(validate_tilting(&c, &[i0, i0]), Err(TiltingError::Duplicate(_))));
    assert!(matches!(
        validate_tilting(&c, &[IndecLabel::projective(0), i1]),
        Err(TiltingError::Preprojective(_))
    ));
    assert!(matches!(
        validate_tilting(&c, &[i0, IndecLabel::preinjective(0, 1)]),
        Err(TiltingError::NotRigid { .. })
    ));
}
