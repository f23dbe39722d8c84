//! DOT pictures of the exceptional tubes, the preinjective component and
//! the Gabriel quiver of `B`.

use std::fmt::Write as _;

use clap::ValueEnum;
use repdim_core::ar::IndecLabel;
use repdim_core::cluster::{ClusterError, ClusterObject};
use repdim_core::generator::{GeneratorModule, SampleWindow, TiltedInstance};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Component {
    /// Exceptional tubes up to their window level, with cones and torsion.
    Tubes,
    /// `τ^k I_i` up to the window power, with the slice and `N'₁`.
    Preinjective,
    /// The Gabriel quiver of `B`.
    BQuiver,
}

pub fn render(
    instance: &TiltedInstance,
    generator: &GeneratorModule,
    window: SampleWindow,
    component: Component,
) -> Result<String, ClusterError> {
    let mut out = String::new();
    match component {
        Component::Tubes => tubes(instance, generator, &mut out),
        Component::Preinjective => preinjective(instance, generator, window, &mut out),
        Component::BQuiver => b_quiver(instance, &mut out)?,
    }
    Ok(out)
}

fn attributes(instance: &TiltedInstance, generator: &GeneratorModule, label: &IndecLabel) -> String {
    let object = ClusterObject::module(*label);
    let mut attrs = vec![format!("label=\"{label}\"")];
    if instance.tilting().summands().contains(label) {
        attrs.push("summand=\"true\"".into());
        attrs.push("shape=box".into());
    }
    if instance.torsion().contains(label) {
        attrs.push("torsion=\"true\"".into());
        attrs.push("style=filled".into());
    }
    if let Some(c) = instance.cones().cones.iter().find(|c| c.cone.contains(label)) {
        attrs.push(format!("cone=\"{}\"", c.cone.vertex));
    }
    if generator.contains(&object) {
        attrs.push("generator=\"true\"".into());
    }
    if instance.algebra().collapses(&object) {
        attrs.push("collapsed=\"true\"".into());
        attrs.push("color=gray".into());
    }
    attrs.join(", ")
}

fn tubes(instance: &TiltedInstance, generator: &GeneratorModule, out: &mut String) {
    let catalog = instance.tilting().catalog();
    writeln!(out, "digraph tubes {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for tube in catalog.tubes().iter().filter(|t| !t.is_homogeneous()) {
        let top = catalog.max_level(tube);
        writeln!(out, "  subgraph cluster_t{} {{", tube.id).unwrap();
        writeln!(out, "    label=\"T{} rank {}\";", tube.id, tube.rank).unwrap();
        for level in 1..=top {
            for ray in 0..tube.rank {
                let l = IndecLabel::regular(tube.id, ray, level);
                writeln!(out, "    \"{l}\" [{}];", attributes(instance, generator, &l)).unwrap();
            }
        }
        for level in 1..top {
            for ray in 0..tube.rank {
                let here = IndecLabel::regular(tube.id, ray, level);
                let up = IndecLabel::regular(tube.id, ray, level + 1);
                let next = IndecLabel::regular(tube.id, (ray + 1) % tube.rank, level);
                writeln!(out, "    \"{here}\" -> \"{up}\";").unwrap();
                writeln!(out, "    \"{up}\" -> \"{next}\";").unwrap();
            }
        }
        writeln!(out, "  }}").unwrap();
    }
    writeln!(out, "}}").unwrap();
}

fn preinjective(instance: &TiltedInstance, generator: &GeneratorModule, window: SampleWindow, out: &mut String) {
    let catalog = instance.tilting().catalog();
    let quiver = catalog.quiver();
    let n = catalog.vertex_count();
    let top = window.power.min(catalog.options().max_power);
    writeln!(out, "digraph preinjective {{").unwrap();
    writeln!(out, "  rankdir=RL;").unwrap();
    for k in 0..=top {
        for v in 0..n {
            let l = IndecLabel::preinjective(v, k);
            let mut attrs = attributes(instance, generator, &l);
            if k == generator.slice.power {
                attrs.push_str(", slice=\"true\", peripheries=2");
            }
            writeln!(out, "  \"{l}\" [{attrs}];").unwrap();
        }
    }
    // an arrow i → j gives τ^k I_j → τ^k I_i and τ^{k+1} I_i → τ^k I_j
    for k in 0..=top {
        for a in quiver.arrows() {
            let (i, j) = (a.source, a.target);
            writeln!(out, "  \"{}\" -> \"{}\";", IndecLabel::preinjective(j, k), IndecLabel::preinjective(i, k)).unwrap();
            if k < top {
                writeln!(out, "  \"{}\" -> \"{}\";", IndecLabel::preinjective(i, k + 1), IndecLabel::preinjective(j, k))
                    .unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
}

fn b_quiver(instance: &TiltedInstance, out: &mut String) -> Result<(), ClusterError> {
    let b = instance.algebra().b_algebra()?;
    writeln!(out, "digraph b_quiver {{").unwrap();
    for (k, s) in b.summands.iter().enumerate() {
        writeln!(out, "  \"{}\" [label=\"{}: {}\"];", k + 1, k + 1, s).unwrap();
    }
    for (s, t) in b.gabriel_arrows() {
        writeln!(out, "  \"{}\" -> \"{}\";", s + 1, t + 1).unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(())
}
