use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{self, Matrix, Scalar};

use super::{hom_space, QuiverError, RepMorphism, Representation};

/// The scalar part of an endomorphism of an indecomposable module: its
/// trace divided by the dimension (radical elements are nilpotent).
fn residue(e: &RepMorphism, total_dim: usize) -> Scalar {
    &e.trace() / &Scalar::from_int(total_dim as i64)
}

/// The pairing `(f, g) ↦ residue(g ∘ f)` on `Hom(M, X) × Hom(X, M)`.
/// Its rank is the multiplicity of the indecomposable `M` in `X`.
fn residue_pairing(m: &Representation, x: &Representation) -> Result<(Vec<RepMorphism>, Vec<RepMorphism>, Matrix), QuiverError> {
    let into = hom_space(m, x)?.basis().to_vec();
    let out = hom_space(x, m)?.basis().to_vec();
    let mut p = Matrix::zero(out.len(), into.len());
    for (j, g) in out.iter().enumerate() {
        for (i, f) in into.iter().enumerate() {
            p[(j, i)] = residue(&g.after(f), m.total_dim());
        }
    }
    Ok((into, out, p))
}

/// Number of times the indecomposable `m` occurs as a summand of `x`.
pub fn multiplicity(m: &Representation, x: &Representation) -> Result<usize, QuiverError> {
    if !fits(m, x) {
        return Ok(0);
    }
    let (_, _, p) = residue_pairing(m, x)?;
    Ok(linalg::rank(&p))
}

fn fits(m: &Representation, x: &Representation) -> bool {
    !m.is_zero() && m.dims().iter().zip(x.dims()).all(|(a, b)| a <= b)
}

/// Whether `End(X)` is local: the trace-zero endomorphisms must form a
/// nilpotent subspace.
pub fn is_indecomposable(x: &Representation) -> Result<bool, QuiverError> {
    if x.is_zero() {
        return Ok(false);
    }
    let end = hom_space(x, x)?;
    if end.dim() == 1 {
        return Ok(true);
    }
    let basis = end.basis();
    let traces: Vec<Scalar> = basis.iter().map(RepMorphism::trace).collect();
    let pivot = match traces.iter().position(|t| !t.is_zero()) {
        Some(p) => p,
        None => return Ok(false),
    };
    let trace_free: Vec<RepMorphism> = (0..basis.len())
        .filter(|&i| i != pivot)
        .map(|i| {
            let c = -(&traces[i] / &traces[pivot]);
            let mut e = basis[i].clone();
            e.add_scaled(&c, &basis[pivot]);
            e
        })
        .collect();
    let flat_len = trace_free[0].flatten().len();
    let mut power = trace_free.clone();
    loop {
        let products: Vec<Vec<Scalar>> = trace_free
            .iter()
            .flat_map(|w| power.iter().map(move |u| w.after(u).flatten()))
            .collect();
        let stacked = Matrix::from_rows_shaped(products.len(), flat_len, products.clone());
        let keep = linalg::independent_columns(&stacked.transpose());
        if keep.is_empty() {
            return Ok(true);
        }
        if keep.len() >= power.len() {
            return Ok(false);
        }
        power = keep
            .into_iter()
            .map(|k| RepMorphism::unflatten(x.dims(), x.dims(), &products[k]))
            .collect();
    }
}

/// Multiplicities of the candidate indecomposables in `x`. Fails when the
/// candidates do not account for all of `x`.
pub fn decompose<K: Clone>(x: &Representation, candidates: &[(K, &Representation)]) -> Result<Vec<(K, usize)>, QuiverError> {
    let mut found = Vec::new();
    let mut covered = vec![0usize; x.dims().len()];
    for (key, m) in candidates {
        let mu = multiplicity(m, x)?;
        if mu > 0 {
            for (c, d) in covered.iter_mut().zip(m.dims()) {
                *c += mu * d;
            }
            found.push((key.clone(), mu));
        }
    }
    if covered != x.dims() {
        return Err(QuiverError::Unidentified(x.dims().to_vec()));
    }
    Ok(found)
}

/// One summand of an explicit decomposition: `projection ∘ inclusion = 1`
/// on the summand and the inclusions of all summands together give an
/// isomorphism onto `X`.
#[derive(Clone, Debug)]
pub struct SplitSummand<K> {
    pub key: K,
    pub inclusion: RepMorphism,
    pub projection: RepMorphism,
}

/// Decomposes `x` explicitly into copies of the candidates.
pub fn split<K: Clone>(x: &Representation, candidates: &[(K, &Representation)]) -> Result<Vec<SplitSummand<K>>, QuiverError> {
    let mut keys = Vec::new();
    let mut inclusions: Vec<RepMorphism> = Vec::new();
    let mut covered = vec![0usize; x.dims().len()];
    for (key, m) in candidates {
        if !fits(m, x) {
            continue;
        }
        let (into, _, p) = residue_pairing(m, x)?;
        let cols = linalg::independent_columns(&p);
        if cols.is_empty() {
            continue;
        }
        for &i in &cols {
            keys.push(key.clone());
            inclusions.push(into[i].clone());
            for (c, d) in covered.iter_mut().zip(m.dims()) {
                *c += d;
            }
        }
    }
    if covered != x.dims() {
        return Err(QuiverError::Unidentified(x.dims().to_vec()));
    }
    if inclusions.is_empty() {
        return Ok(Vec::new());
    }
    let total = RepMorphism::row(&inclusions.iter().collect::<Vec<_>>());
    let inverse = total.inverse().ok_or_else(|| QuiverError::Unidentified(x.dims().to_vec()))?;
    let mut offsets = vec![0usize; x.dims().len()];
    let mut out = Vec::with_capacity(keys.len());
    for (key, inc) in keys.into_iter().zip(inclusions) {
        let maps = (0..x.dims().len())
            .map(|v| {
                let d = inc.at(v).cols();
                let block = inverse.at(v).block(offsets[v], 0, d, x.dims()[v]);
                offsets[v] += d;
                block
            })
            .collect();
        out.push(SplitSummand { key, inclusion: inc, projection: RepMorphism::new(maps) });
    }
    Ok(out)
}

/// Some isomorphism `x → y`, if one exists. Tries basis elements first
/// and then seeded random combinations, which for modules with local
/// endomorphism rings find an isomorphism almost surely.
pub fn find_isomorphism(x: &Representation, y: &Representation) -> Result<Option<RepMorphism>, QuiverError> {
    if x.dims() != y.dims() {
        return Ok(None);
    }
    let h = hom_space(x, y)?;
    if h.dim() == 0 {
        return Ok(x.is_zero().then(|| RepMorphism::zero(x, y)));
    }
    if let Some(f) = h.basis().iter().find(|f| f.is_iso()) {
        return Ok(Some(f.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..24 {
        let coeffs: Vec<Scalar> = (0..h.dim()).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect();
        let f = h.combine(&coeffs);
        if f.is_iso() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::Quiver;

    #[test]
    fn decompose_sum_of_projectives() {
        let q = Arc::new(Quiver::kronecker());
        let p0 = Representation::projective(&q, 0);
        let p1 = Representation::projective(&q, 1);
        let x = Representation::direct_sum(&[&p0, &p0]).unwrap();
        let found = decompose(&x, &[("P1", &p0), ("P2", &p1)]).unwrap();
        assert_eq!(found, vec![("P1", 2)]);
        assert!(!is_indecomposable(&x).unwrap());
        assert!(is_indecomposable(&p0).unwrap());
    }

    #[test]
    fn kronecker_regular_at_zero() {
        let q = Arc::new(Quiver::kronecker());
        let r = Representation::new(q.clone(), vec![1, 1], vec![Matrix::from_i64(1, 1, &[1]), Matrix::from_i64(1, 1, &[0])]).unwrap();
        assert!(is_indecomposable(&r).unwrap());
        let split_rep = Representation::new(q.clone(), vec![1, 1], vec![Matrix::zero(1, 1), Matrix::zero(1, 1)]).unwrap();
        assert!(!is_indecomposable(&split_rep).unwrap());
    }

    #[test]
    fn explicit_split_recovers_identity() {
        let q = Arc::new(Quiver::kronecker());
        let p0 = Representation::projective(&q, 0);
        let s1 = Representation::simple(&q, 1);
        let x = Representation::direct_sum(&[&p0, &s1, &p0]).unwrap();
        let parts = split(&x, &[("P", &p0), ("S", &s1)]).unwrap();
        assert_eq!(parts.len(), 3);
        let mut sum = RepMorphism::zero(&x, &x);
        for s in &parts {
            sum = sum.add(&s.inclusion.after(&s.projection));
        }
        assert_eq!(sum, RepMorphism::identity(&x));
    }
}
