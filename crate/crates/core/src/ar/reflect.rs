//! Reflection functors and the Coxeter functors built from them.

use std::sync::Arc;

use crate::linalg::{self, Matrix, QuotientMap, Scalar};
use crate::quiver::{Quiver, RepMorphism, Representation};

/// Data of one reflection step needed to transport morphisms.
enum StepData {
    /// Columns span the kernel of `⊕ X_{s(a)} → X_v` at a sink.
    Sink(Matrix),
    /// Projection onto and section of the cokernel of `X_v → ⊕ X_{t(a)}` at a source.
    Source { proj: Matrix, lift: Matrix },
}

fn stacked_dims(x: &Representation, arrows: &[usize], at_source: bool) -> Vec<usize> {
    let q = x.quiver();
    arrows
        .iter()
        .map(|&a| {
            let arr = q.arrow(a);
            x.dims()[if at_source { arr.source } else { arr.target }]
        })
        .collect()
}

fn reflect_sink(x: &Representation, v: usize, new_quiver: &Arc<Quiver>) -> (Representation, StepData) {
    let q = x.quiver();
    let into: Vec<usize> = q.arrows_into(v).collect();
    let sizes = stacked_dims(x, &into, true);
    let total: usize = sizes.iter().sum();
    let h = if into.is_empty() {
        Matrix::zero(x.dims()[v], 0)
    } else {
        Matrix::hstack(&into.iter().map(|&a| x.map(a)).collect::<Vec<_>>())
    };
    let k = Matrix::from_columns(total, &linalg::kernel_basis(&h));
    let mut dims = x.dims().to_vec();
    dims[v] = k.cols();
    let mut maps = x.maps().to_vec();
    let mut off = 0;
    for (&a, &s) in into.iter().zip(&sizes) {
        maps[a] = k.block(off, 0, s, k.cols());
        off += s;
    }
    let rep = Representation::new(new_quiver.clone(), dims, maps).expect("reflected shapes agree");
    (rep, StepData::Sink(k))
}

fn reflect_source(x: &Representation, v: usize, new_quiver: &Arc<Quiver>) -> (Representation, StepData) {
    let q = x.quiver();
    let out: Vec<usize> = q.arrows_from(v).collect();
    let sizes = stacked_dims(x, &out, false);
    let total: usize = sizes.iter().sum();
    let h = if out.is_empty() {
        Matrix::zero(0, x.dims()[v])
    } else {
        Matrix::vstack(&out.iter().map(|&a| x.map(a)).collect::<Vec<_>>())
    };
    let image: Vec<Vec<Scalar>> = (0..h.cols()).map(|j| h.column(j)).collect();
    let quotient = QuotientMap::new(total, &image).expect("lengths agree");
    let c = quotient.quotient_dim();
    let proj_cols: Vec<Vec<Scalar>> = (0..total)
        .map(|i| {
            let mut e = vec![Scalar::zero(); total];
            e[i] = Scalar::one();
            quotient.coordinates(&e).expect("length")
        })
        .collect();
    let proj = Matrix::from_columns(c, &proj_cols);
    let lift = Matrix::from_columns(total, &(0..c).map(|k| quotient.lift(k)).collect::<Vec<_>>());
    let mut dims = x.dims().to_vec();
    dims[v] = c;
    let mut maps = x.maps().to_vec();
    let mut off = 0;
    for (&a, &s) in out.iter().zip(&sizes) {
        maps[a] = proj.block(0, off, c, s);
        off += s;
    }
    let rep = Representation::new(new_quiver.clone(), dims, maps).expect("reflected shapes agree");
    (rep, StepData::Source { proj, lift })
}

fn transport_step(
    before_x: &Representation,
    f: &RepMorphism,
    v: usize,
    data_x: &StepData,
    data_y: &StepData,
) -> RepMorphism {
    let q = before_x.quiver();
    let mut maps = f.maps().to_vec();
    match (data_x, data_y) {
        (StepData::Sink(kx), StepData::Sink(ky)) => {
            let into: Vec<usize> = q.arrows_into(v).collect();
            let blocks: Vec<&Matrix> = into.iter().map(|&a| f.at(q.arrow(a).source)).collect();
            let sum = if blocks.is_empty() { Matrix::zero(ky.rows(), kx.rows()) } else { Matrix::block_diag(&blocks) };
            maps[v] = linalg::solve_matrix(ky, &sum.mul(kx)).expect("kernels are preserved");
        }
        (StepData::Source { lift: lx, .. }, StepData::Source { proj: py, .. }) => {
            let out: Vec<usize> = q.arrows_from(v).collect();
            let blocks: Vec<&Matrix> = out.iter().map(|&a| f.at(q.arrow(a).target)).collect();
            let sum = if blocks.is_empty() { Matrix::zero(py.cols(), lx.rows()) } else { Matrix::block_diag(&blocks) };
            maps[v] = py.mul(&sum).mul(lx);
        }
        _ => unreachable!("both sides reflect the same way"),
    }
    RepMorphism::new(maps)
}

/// Vertex order for the Coxeter functor: sinks first for `τ`, sources
/// first for `τ⁻¹`.
fn admissible_order(quiver: &Quiver, sinks: bool) -> Vec<usize> {
    let mut order = quiver.topological_order().expect("acyclic");
    if sinks {
        order.reverse();
    }
    order
}

/// The chain of intermediate quivers, so every step reuses one `Arc`.
fn quiver_chain(quiver: &Arc<Quiver>, order: &[usize]) -> Vec<Arc<Quiver>> {
    let mut chain = Vec::with_capacity(order.len());
    let mut cur = (**quiver).clone();
    for (i, &v) in order.iter().enumerate() {
        cur = cur.reflect_at(v);
        if i + 1 == order.len() {
            chain.push(quiver.clone());
        } else {
            chain.push(Arc::new(cur.clone()));
        }
    }
    chain
}

fn coxeter_functor(x: &Representation, sinks: bool) -> (Representation, Vec<(Representation, StepData)>) {
    let order = admissible_order(x.quiver(), sinks);
    let chain = quiver_chain(x.quiver(), &order);
    let mut cur = x.clone();
    let mut steps = Vec::with_capacity(order.len());
    for (&v, q) in order.iter().zip(&chain) {
        let (next, data) = if sinks { reflect_sink(&cur, v, q) } else { reflect_source(&cur, v, q) };
        steps.push((cur, data));
        cur = next;
    }
    (cur, steps)
}

/// Twist by the automorphism of `kQ` that negates every arrow. It fixes
/// objects up to isomorphism on trees and leaves morphisms unchanged.
fn twist(x: Representation) -> Representation {
    let minus = Scalar::from_int(-1);
    let maps = x.maps().iter().map(|m| m.scale(&minus)).collect();
    Representation::new(x.quiver().clone(), x.dims().to_vec(), maps).expect("same shapes")
}

/// `τX`, computed as the twisted Coxeter functor `C⁺` (it kills projective
/// summands). Without the twist, `C⁺` sends the homogeneous module `R_λ` of
/// a non-Kronecker `Ã` quiver to `R_{−λ}`.
pub fn coxeter_plus(x: &Representation) -> Representation {
    twist(coxeter_functor(x, true).0)
}

/// `τ⁻¹X`, computed as the twisted Coxeter functor `C⁻` (it kills injective
/// summands).
pub fn coxeter_minus(x: &Representation) -> Representation {
    twist(coxeter_functor(x, false).0)
}

fn coxeter_on_morphisms(
    x: &Representation,
    y: &Representation,
    fs: &[RepMorphism],
    sinks: bool,
) -> (Representation, Representation, Vec<RepMorphism>) {
    let order = admissible_order(x.quiver(), sinks);
    let (cx, steps_x) = coxeter_functor(x, sinks);
    let (cy, steps_y) = coxeter_functor(y, sinks);
    let mut cur: Vec<RepMorphism> = fs.to_vec();
    for ((&v, (bx, dx)), (_, dy)) in order.iter().zip(&steps_x).zip(&steps_y) {
        cur = cur.iter().map(|f| transport_step(bx, f, v, dx, dy)).collect();
    }
    (cx, cy, cur)
}

/// `C⁻` applied to a family of morphisms `X → Y`.
pub fn coxeter_minus_morphisms(x: &Representation, y: &Representation, fs: &[RepMorphism]) -> Vec<RepMorphism> {
    coxeter_on_morphisms(x, y, fs, false).2
}

/// `C⁺` applied to a family of morphisms `X → Y`.
pub fn coxeter_plus_morphisms(x: &Representation, y: &Representation, fs: &[RepMorphism]) -> Vec<RepMorphism> {
    coxeter_on_morphisms(x, y, fs, true).2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::hom_space;

    #[test]
    fn kronecker_translates() {
        let q = Arc::new(Quiver::kronecker());
        let i0 = Representation::injective(&q, 0);
        assert_eq!(coxeter_plus(&i0).dims(), &[3, 2]);
        let p0 = Representation::projective(&q, 0);
        assert!(coxeter_plus(&p0).is_zero());
        assert_eq!(coxeter_minus(&p0).dims(), &[3, 4]);
        let r = Representation::new(q.clone(), vec![1, 1], vec![Matrix::from_i64(1, 1, &[1]), Matrix::from_i64(1, 1, &[0])]).unwrap();
        let tr = coxeter_plus(&r);
        assert_eq!(tr.dims(), &[1, 1]);
        let h = hom_space(&r, &tr).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.basis()[0].is_iso());
    }

    #[test]
    fn morphisms_are_transported() {
        let q = Arc::new(Quiver::euclidean(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap());
        let p2 = Representation::projective(&q, 2);
        let p0 = Representation::projective(&q, 0);
        let h = hom_space(&p2, &p0).unwrap();
        assert_eq!(h.dim(), 1);
        let moved = coxeter_minus_morphisms(&p2, &p0, h.basis());
        let (a, b) = (coxeter_minus(&p2), coxeter_minus(&p0));
        assert!(moved[0].is_morphism(&a, &b));
        assert!(!moved[0].is_zero());
    }

    #[test]
    fn homogeneous_modules_are_fixed_on_a_tilde() {
        let q = Arc::new(Quiver::euclidean(3, &[(0, 1), (1, 2), (0, 2)]).unwrap());
        let one = Matrix::from_i64(1, 1, &[1]);
        let r = Representation::new(q, vec![1, 1, 1], vec![one.clone(), one, Matrix::from_i64(1, 1, &[2])]).unwrap();
        for moved in [coxeter_plus(&r), coxeter_minus(&r)] {
            assert!(crate::quiver::find_isomorphism(&r, &moved).unwrap().is_some());
        }
    }
}
