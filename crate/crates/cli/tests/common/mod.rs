#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use repdim_cli::InstanceSpec;
use repdim_core::ar::{Catalog, CatalogOptions, IndecLabel};
use repdim_core::quiver::Quiver;
use repdim_core::tilting::{validate_tilting, TiltingModule};

pub const FIXTURES: [&str; 3] = ["ej2.json", "d4_final.json", "d12_example1.json"];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> InstanceSpec {
    InstanceSpec::load(&fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// `Ã_{p,q}`: one source, one sink, paths of `p` and `q` arrows between them.
pub fn a_tilde(p: usize, q: usize) -> Quiver {
    let n = p + q;
    let sink = n - 1;
    let mut arrows = Vec::new();
    let mut walk = |inner: Vec<usize>| {
        let mut prev = 0;
        for v in inner {
            arrows.push((prev, v));
            prev = v;
        }
        arrows.push((prev, sink));
    };
    walk((1..p).collect());
    walk((p..p + q - 1).collect());
    Quiver::euclidean(n, &arrows).unwrap()
}

pub fn d4() -> Quiver {
    Quiver::euclidean(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap()
}

pub fn d5() -> Quiver {
    Quiver::euclidean(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap()
}

/// A tilting module with preinjective and regular summands only, grown
/// greedily from a shuffled candidate list. Retries with fresh shuffles
/// until the greedy pass reaches `n` summands with a preinjective one.
pub fn random_tilting(quiver: Quiver, seed: u64) -> TiltingModule {
    let options = CatalogOptions { max_power: 4, ..CatalogOptions::default() };
    let catalog = Arc::new(Catalog::new(quiver, options).unwrap());
    let n = catalog.vertex_count();
    let mut candidates: Vec<IndecLabel> = (0..=2).flat_map(|a| (0..n).map(move |v| IndecLabel::preinjective(v, a))).collect();
    for t in catalog.tubes().iter().filter(|t| !t.is_homogeneous()) {
        for level in 1..t.rank {
            candidates.extend((0..t.rank).map(|ray| IndecLabel::regular(t.id, ray, level)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        candidates.shuffle(&mut rng);
        let mut chosen: Vec<IndecLabel> = Vec::new();
        for c in &candidates {
            if catalog.ext_dim(c, c).unwrap() != 0 {
                continue;
            }
            let fits = chosen
                .iter()
                .all(|d| catalog.ext_dim(c, d).unwrap() == 0 && catalog.ext_dim(d, c).unwrap() == 0);
            if fits {
                chosen.push(*c);
            }
            if chosen.len() == n {
                break;
            }
        }
        if chosen.len() == n && chosen.iter().any(|l| l.is_preinjective()) {
            return validate_tilting(&catalog, &chosen).unwrap();
        }
    }
    panic!("no tilting module found for seed {seed}");
}
