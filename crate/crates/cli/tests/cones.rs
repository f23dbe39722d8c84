mod common;

use repdim_core::ar::IndecLabel;
use repdim_core::generator::edge_factorization;

/// Maps from a cone into a tube module outside it factor through the edge.
#[test]
fn example1_maps_out_of_cones_factor_through_edges() {
    let instance = common::fixture("d12_example1.json").instance().unwrap();
    let catalog = instance.tilting().catalog();
    let cones = &instance.cones().cones;
    assert_eq!(cones.len(), 3);
    for c in cones {
        let IndecLabel::Regular { tube, .. } = c.cone.vertex else { panic!("cone at {}", c.cone.vertex) };
        let targets: Vec<IndecLabel> = catalog
            .window_labels()
            .into_iter()
            .filter(|l| matches!(l, IndecLabel::Regular { tube: t, .. } if *t == tube))
            .filter(|l| !c.cone.contains(l))
            .collect();
        assert!(targets.len() > 100);
        for target in &targets {
            assert!(edge_factorization(&instance, c, target).unwrap(), "cone {} -> {target}", c.cone.vertex);
        }
    }
}

#[test]
fn example1_tilting_summands_are_spread_over_the_cones() {
    let instance = common::fixture("d12_example1.json").instance().unwrap();
    let regular = instance.tilting().regular_part();
    let in_cones: usize = instance.cones().cones.iter().map(|c| c.summands.len()).sum();
    assert_eq!(in_cones, regular.len());
    for s in &regular {
        assert!(instance.cones().contains(s), "{s}");
    }
}
