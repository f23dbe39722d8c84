#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use repdim_core::ar::{Catalog, CatalogOptions, IndecLabel};
use repdim_core::generator::{build_generator, choose_slice, GeneratorModule, TiltedInstance};
use repdim_core::quiver::Quiver;
use repdim_core::tilting::validate_tilting;

pub fn kronecker() -> Quiver {
    Quiver::kronecker()
}

/// 1, 2 → 3 → 4, 5 (0-based: 0, 1 → 2 → 3, 4).
pub fn d4() -> Quiver {
    Quiver::euclidean(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap()
}

pub fn a21() -> Quiver {
    Quiver::euclidean(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
}

pub fn catalog(q: Quiver, max_power: usize) -> Arc<Catalog> {
    Arc::new(Catalog::new(q, CatalogOptions { max_power, ..CatalogOptions::default() }).unwrap())
}

/// `I₅ ⊕ I₄ ⊕ I₁ ⊕ I₂ ⊕ τS₃` on `D̃₄`, the regular summand being the
/// all-ones mouth module of the rank-2 tube containing `S₃`.
pub fn d4_final() -> TiltedInstance {
    let c = catalog(d4(), 8);
    let labels = [
        IndecLabel::injective(4),
        IndecLabel::injective(3),
        IndecLabel::injective(0),
        IndecLabel::injective(1),
        IndecLabel::regular(0, 1, 1),
    ];
    TiltedInstance::new(validate_tilting(&c, &labels).unwrap()).unwrap()
}

pub fn d4_final_generator(want_cogenerator: bool) -> &'static (TiltedInstance, GeneratorModule) {
    static PLAIN: OnceLock<(TiltedInstance, GeneratorModule)> = OnceLock::new();
    static COGENERATOR: OnceLock<(TiltedInstance, GeneratorModule)> = OnceLock::new();
    let cell = if want_cogenerator { &COGENERATOR } else { &PLAIN };
    cell.get_or_init(|| {
        let instance = d4_final();
        let slice = choose_slice(instance.tilting(), instance.torsion(), want_cogenerator);
        let generator = build_generator(&instance, slice).unwrap();
        (instance, generator)
    })
}

pub fn kronecker_dh() -> TiltedInstance {
    let c = catalog(kronecker(), 6);
    let t = validate_tilting(&c, &[IndecLabel::injective(0), IndecLabel::injective(1)]).unwrap();
    TiltedInstance::new(t).unwrap()
}
