mod common;

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use repdim_core::ar::{coxeter_minus, coxeter_plus, Catalog, IndecLabel};
use repdim_core::quiver::{self, find_isomorphism, is_indecomposable};

type Named = (&'static str, Arc<Catalog>, Vec<IndecLabel>);

fn catalogs() -> &'static [Named] {
    static CATALOGS: OnceLock<Vec<Named>> = OnceLock::new();
    CATALOGS.get_or_init(|| {
        [("kronecker", common::kronecker()), ("D~4", common::d4()), ("A~(2,1)", common::a21())]
            .into_iter()
            .map(|(name, q)| {
                let c = common::catalog(q, 3);
                let labels = c.window_labels();
                (name, c, labels)
            })
            .collect()
    })
}

fn pick() -> impl Strategy<Value = (usize, usize, usize)> {
    (0..3usize, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(|(c, i, j)| {
        let n = catalogs()[c].2.len();
        (c, i.index(n), j.index(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn euler_form_is_hom_minus_ext((c, i, j) in pick()) {
        let (_, cat, labels) = &catalogs()[c];
        let (x, y) = (cat.realize(&labels[i]).unwrap(), cat.realize(&labels[j]).unwrap());
        let hom = quiver::hom_dim(&x, &y).unwrap() as i64;
        let ext = quiver::ext_dim(&x, &y).unwrap() as i64;
        prop_assert_eq!(cat.quiver().euler_form(&x.dim_vector(), &y.dim_vector()), hom - ext);
    }

    #[test]
    fn auslander_reiten_formula((c, i, j) in pick()) {
        let (_, cat, labels) = &catalogs()[c];
        let (lx, ly) = (labels[i], labels[j]);
        let (x, y) = (cat.realize(&lx).unwrap(), cat.realize(&ly).unwrap());
        let ext = quiver::ext_dim(&x, &y).unwrap();
        if !lx.is_projective() {
            prop_assert_eq!(ext, quiver::hom_dim(&y, &coxeter_plus(&x)).unwrap());
        }
        if !ly.is_injective() {
            prop_assert_eq!(ext, quiver::hom_dim(&coxeter_minus(&y), &x).unwrap());
        }
    }

    #[test]
    fn translates_follow_the_coxeter_matrix((c, i, _j) in pick()) {
        let (_, cat, labels) = &catalogs()[c];
        let l = labels[i];
        let x = cat.realize(&l).unwrap();
        prop_assert!(is_indecomposable(&x).unwrap());
        if l.is_projective() {
            prop_assert!(coxeter_plus(&x).is_zero());
        } else {
            let tx = coxeter_plus(&x);
            prop_assert_eq!(tx.dim_vector(), cat.coxeter().tau(&x.dim_vector()));
            prop_assert!(find_isomorphism(&x, &coxeter_minus(&tx)).unwrap().is_some());
            if let Some(t) = cat.tau_label(&l).filter(|t| cat.in_window(t)) {
                prop_assert!(find_isomorphism(&tx, &cat.realize(&t).unwrap()).unwrap().is_some());
            }
        }
    }

    #[test]
    fn defect_separates_the_components((c, i, _j) in pick()) {
        let (_, cat, labels) = &catalogs()[c];
        let l = labels[i];
        let d = cat.defect(&cat.dim_vector(&l));
        if l.is_regular() {
            prop_assert_eq!(d, 0);
        } else if l.is_preprojective() {
            prop_assert!(d < 0);
        } else {
            prop_assert!(d > 0);
        }
    }

    #[test]
    fn hom_bases_consist_of_morphisms((c, i, j) in pick()) {
        let (_, cat, labels) = &catalogs()[c];
        let (lx, ly) = (labels[i], labels[j]);
        let (x, y) = (cat.realize(&lx).unwrap(), cat.realize(&ly).unwrap());
        let h = cat.hom(&lx, &ly).unwrap();
        for f in h.basis() {
            prop_assert!(f.is_morphism(&x, &y));
        }
    }
}

#[test]
fn tube_ranks_match_the_type() {
    let ranks = |c: &Catalog| c.tubes().iter().filter(|t| !t.is_homogeneous()).map(|t| t.rank).collect::<Vec<_>>();
    assert_eq!(ranks(&catalogs()[0].1), Vec::<usize>::new());
    assert_eq!(ranks(&catalogs()[1].1), vec![2, 2, 2]);
    assert_eq!(ranks(&catalogs()[2].1), vec![2]);
}

#[test]
fn homogeneous_tubes_are_pairwise_orthogonal() {
    for (name, cat, _) in catalogs() {
        let mouths: Vec<IndecLabel> =
            cat.tubes().iter().filter(|t| t.is_homogeneous()).map(|t| IndecLabel::regular(t.id, 0, 1)).collect();
        assert!(mouths.len() >= 2, "{name}");
        for a in &mouths {
            for b in &mouths {
                let expected = usize::from(a == b);
                assert_eq!(cat.hom_dim(a, b).unwrap(), expected, "{name}: Hom({a}, {b})");
                assert_eq!(cat.ext_dim(a, b).unwrap(), expected, "{name}: Ext({a}, {b})");
            }
        }
    }
}
