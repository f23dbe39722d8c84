mod common;

use std::collections::{HashMap, HashSet};
use std::path::PathBuf;
use std::process::{Command, Output};

use common::{fixture, fixture_path};
use repdim_cli::{cmd_dot, cmd_torsion, Component};
use repdim_core::ar::IndecLabel;

fn repdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repdim")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("repdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn spec_arg(name: &str) -> String {
    fixture_path(name).display().to_string()
}

#[test]
fn exit_codes() {
    let d4 = spec_arg("d4_final.json");
    assert_eq!(repdim(&["validate", "--spec", &d4]).status.code(), Some(0));
    assert_eq!(repdim(&["gldim", "--spec", &d4]).status.code(), Some(0));
    // the canonical sequence is not exact for every sample
    assert_eq!(repdim(&["verify", "--spec", &d4]).status.code(), Some(2));

    let not_tilting = scratch("not_tilting.json");
    let text = std::fs::read_to_string(fixture_path("d4_final.json")).unwrap().replace(
        r#"{ "kind": "regular", "tube": 0, "ray": 2, "level": 1 }"#,
        r#"{ "kind": "regular", "tube": 0, "ray": 1, "level": 1 }"#,
    );
    std::fs::write(&not_tilting, text).unwrap();
    let out = repdim(&["validate", "--spec", not_tilting.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("tilting: no"));

    let malformed = scratch("malformed.json");
    std::fs::write(&malformed, "{\n  \"name\": \"x\",\n  \"quiver\": [\n}").unwrap();
    let out = repdim(&["torsion", "--spec", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"), "{}", String::from_utf8_lossy(&out.stderr));

    let missing = repdim(&["torsion", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical() {
    let spec = spec_arg("d12_example1.json");
    let run = |tag: &str| {
        let json = scratch(&format!("torsion-{tag}.json"));
        let out = repdim(&["torsion", "--spec", &spec, "--json", json.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        (out.stdout, std::fs::read(&json).unwrap())
    };
    assert_eq!(run("a"), run("b"));
    let gen = |_: u8| repdim(&["generator", "--spec", &spec_arg("ej2.json")]).stdout;
    assert_eq!(gen(0), gen(1));
}

#[test]
fn json_twin_matches_the_library_report() {
    let json = scratch("twin.json");
    let out = repdim(&["torsion", "--spec", &spec_arg("d4_final.json"), "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: serde_json::Value = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    assert_eq!(written, cmd_torsion(&fixture("d4_final.json")).unwrap().json);
}

struct Dot {
    nodes: HashMap<String, String>,
    edges: Vec<(String, String)>,
}

fn quoted(s: &str) -> Option<(&str, &str)> {
    let s = s.trim_start().strip_prefix('"')?;
    let end = s.find('"')?;
    Some((&s[..end], &s[end + 1..]))
}

fn parse_dot(text: &str) -> Dot {
    let mut nodes = HashMap::new();
    let mut edges = Vec::new();
    assert!(text.starts_with("digraph "), "{text}");
    assert_eq!(text.matches('{').count(), text.matches('}').count());
    for line in text.lines() {
        let Some((first, rest)) = quoted(line) else { continue };
        if let Some(rest) = rest.trim_start().strip_prefix("->") {
            let (second, tail) = quoted(rest).expect("edge target");
            assert_eq!(tail.trim(), ";");
            edges.push((first.to_string(), second.to_string()));
        } else {
            let attrs = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix("];")).expect("node attributes");
            nodes.insert(first.to_string(), attrs.to_string());
        }
    }
    Dot { nodes, edges }
}

fn dot(spec: &str, component: Component) -> Dot {
    parse_dot(&cmd_dot(&fixture(spec), component).unwrap().text)
}

#[test]
fn dot_edges_reference_declared_nodes() {
    for spec in common::FIXTURES {
        for component in [Component::Tubes, Component::Preinjective, Component::BQuiver] {
            let d = dot(spec, component);
            assert!(!d.nodes.is_empty(), "{spec} {component:?}");
            for (a, b) in &d.edges {
                assert!(d.nodes.contains_key(a) && d.nodes.contains_key(b), "{spec} {component:?}: {a} -> {b}");
            }
        }
    }
}

#[test]
fn dot_marks_cones_and_torsion() {
    for spec in ["d4_final.json", "d12_example1.json"] {
        let report = cmd_torsion(&fixture(spec)).unwrap().json;
        let tubes = dot(spec, Component::Tubes);
        let preinjective = dot(spec, Component::Preinjective);
        for cone in report["cones"].as_array().unwrap() {
            let vertex = cone["vertex"].as_str().unwrap();
            for m in cone["members"].as_array().unwrap() {
                let attrs = &tubes.nodes[m.as_str().unwrap()];
                assert!(attrs.contains(&format!("cone=\"{vertex}\"")), "{spec}: {m} {attrs}");
            }
        }
        let torsion: HashSet<&str> = ["regular", "preinjective"]
            .iter()
            .flat_map(|k| report[k].as_array().unwrap().iter().map(|v| v.as_str().unwrap()))
            .collect();
        for (name, attrs) in tubes.nodes.iter().chain(&preinjective.nodes) {
            assert_eq!(attrs.contains("torsion=\"true\""), torsion.contains(name.as_str()), "{spec}: {name}");
        }
    }
}

#[test]
fn dot_arrows_are_nonzero_maps() {
    for spec in ["d4_final.json", "ej2.json"] {
        let catalog = fixture(spec).catalog().unwrap();
        let labels: HashMap<String, IndecLabel> =
            catalog.window_labels().into_iter().map(|l| (l.to_string(), l)).collect();
        for component in [Component::Tubes, Component::Preinjective] {
            for (a, b) in dot(spec, component).edges {
                let (x, y) = (labels[&a], labels[&b]);
                assert!(catalog.hom_dim(&x, &y).unwrap() > 0, "{spec}: {a} -> {b}");
                // the preinjective component is directed; tubes are not
                if component == Component::Preinjective {
                    assert_eq!(catalog.hom_dim(&y, &x).unwrap(), 0, "{spec}: {b} -> {a}");
                }
            }
        }
    }
}

#[test]
fn help_lists_the_subcommands() {
    let out = repdim(&["--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for c in ["validate", "torsion", "generator", "verify", "gldim", "dot"] {
        assert!(text.contains(c), "{c}");
    }
}
