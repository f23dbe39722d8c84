use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Scalar};
use crate::quiver::{find_isomorphism, hom_space, Quiver, Representation};

use super::coxeter::{Coxeter, Defect};
use super::reflect::coxeter_plus;
use super::ArError;

/// A rational point `λ` of the projective line indexing a homogeneous tube.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HomogeneousParameter {
    Finite(Scalar),
    Infinity,
}

impl fmt::Display for HomogeneousParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomogeneousParameter::Finite(x) => write!(f, "{x}"),
            HomogeneousParameter::Infinity => write!(f, "inf"),
        }
    }
}

/// A stable tube. The mouth is listed as `E_1, …, E_r` with
/// `τ E_{j+1} = E_j` and `τ E_1 = E_r`.
#[derive(Clone, Debug)]
pub struct Tube {
    pub id: usize,
    pub rank: usize,
    pub mouth: Vec<Vec<i64>>,
    pub parameter: Option<HomogeneousParameter>,
    pub(crate) seed: Representation,
}

impl Tube {
    pub fn is_homogeneous(&self) -> bool {
        self.parameter.is_some()
    }

    /// Dimension vector of the module of the given level on ray `ray`.
    pub fn dim_vector(&self, ray: usize, level: usize) -> Vec<i64> {
        let n = self.mouth[0].len();
        let mut d = vec![0i64; n];
        for k in 0..level {
            for (a, b) in d.iter_mut().zip(&self.mouth[(ray + k) % self.rank]) {
                *a += b;
            }
        }
        d
    }
}

fn is_unit(x: &[i64]) -> Option<usize> {
    let nonzero: Vec<usize> = (0..x.len()).filter(|&v| x[v] != 0).collect();
    (nonzero.len() == 1 && x[nonzero[0]] == 1).then(|| nonzero[0])
}

/// Orbits of mouth dimension vectors: positive real roots below `δ` of
/// defect zero whose `Φ`-orbit is positive and sums to `δ`.
fn mouth_orbits(quiver: &Quiver, coxeter: &Coxeter, defect: &Defect, delta: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let n = delta.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut orbits = Vec::new();
    let mut x = vec![0i64; n];
    loop {
        // next vector in the box 0 ≤ x ≤ δ
        let mut v = 0;
        while v < n && x[v] == delta[v] {
            x[v] = 0;
            v += 1;
        }
        if v == n {
            break;
        }
        x[v] += 1;
        if x == delta || seen.contains(&x) || quiver.quadratic_form(&x) != 1 || defect.of(&x) != 0 {
            continue;
        }
        let mut orbit = vec![x.clone()];
        let mut y = coxeter.tau_inverse(&x);
        let mut ok = true;
        while y != x {
            if y.iter().any(|&c| c < 0) || orbit.len() > defect.period() {
                ok = false;
                break;
            }
            orbit.push(y.clone());
            y = coxeter.tau_inverse(&y);
        }
        if !ok {
            continue;
        }
        let mut sum = vec![0i64; n];
        for o in &orbit {
            for (s, c) in sum.iter_mut().zip(o) {
                *s += c;
            }
        }
        for o in &orbit {
            seen.insert(o.clone());
        }
        if sum == delta {
            orbits.push(orbit);
        }
    }
    orbits
        .into_iter()
        .map(|orbit| {
            // E_1: the simple whose τ-translate is not simple, else the smallest vector
            let r = orbit.len();
            let start = (0..r)
                .filter(|&j| is_unit(&orbit[j]).is_some() && is_unit(&orbit[(j + r - 1) % r]).is_none())
                .min_by_key(|&j| is_unit(&orbit[j]))
                .unwrap_or_else(|| (0..r).min_by(|&a, &b| orbit[a].cmp(&orbit[b])).expect("nonempty orbit"));
            (0..r).map(|k| orbit[(start + k) % r].clone()).collect()
        })
        .collect()
}

/// A brick with dimension vector `x`, found among seeded random
/// representations with small entries.
fn realize_brick(quiver: &Arc<Quiver>, x: &[i64], salt: u64) -> Result<Representation, ArError> {
    let dims: Vec<usize> = x.iter().map(|&c| c as usize).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7b5 ^ salt);
    for attempt in 0..200 {
        let bound = if attempt < 40 { 1 } else { 3 };
        let rep = Representation::random(quiver, &dims, &mut rng, bound);
        if hom_space(&rep, &rep)?.dim() == 1 {
            return Ok(rep);
        }
    }
    Err(ArError::TubeDiscovery(format!("no brick found with dimension vector {x:?}")))
}

pub(crate) fn exceptional_tubes(
    quiver: &Arc<Quiver>,
    coxeter: &Coxeter,
    defect: &Defect,
    delta: &[i64],
    expected_ranks: &[usize],
) -> Result<Vec<Tube>, ArError> {
    let mut orbits = mouth_orbits(quiver, coxeter, defect, delta);
    orbits.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
    let ranks: Vec<usize> = orbits.iter().map(Vec::len).collect();
    if ranks != expected_ranks {
        return Err(ArError::TubeDiscovery(format!("found tube ranks {ranks:?}, expected {expected_ranks:?}")));
    }
    orbits
        .into_iter()
        .enumerate()
        .map(|(id, mouth)| {
            let seed = match is_unit(&mouth[0]) {
                Some(v) => Representation::simple(quiver, v),
                None => realize_brick(quiver, &mouth[0], id as u64)?,
            };
            Ok(Tube { id, rank: mouth.len(), mouth, parameter: None, seed })
        })
        .collect()
}

/// Rational points `0, 1, −1, 2, −2, …`.
fn parameter_sequence() -> impl Iterator<Item = HomogeneousParameter> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![HomogeneousParameter::Finite(Scalar::zero())]
        } else {
            vec![HomogeneousParameter::Finite(Scalar::from_int(k)), HomogeneousParameter::Finite(Scalar::from_int(-k))]
        }
    })
}

fn pencil_point(a: &Representation, b: &Representation, lambda: &HomogeneousParameter) -> Representation {
    match lambda {
        HomogeneousParameter::Infinity => b.clone(),
        HomogeneousParameter::Finite(l) => {
            let maps: Vec<Matrix> = a
                .maps()
                .iter()
                .zip(b.maps())
                .map(|(x, y)| {
                    let mut m = x.clone();
                    m.add_scaled(l, y);
                    m
                })
                .collect();
            Representation::new(a.quiver().clone(), a.dims().to_vec(), maps).expect("same shapes")
        }
    }
}

/// `count` homogeneous tubes, cut out of a pencil `A + λB` of
/// representations of dimension `δ`. For type `Ã` the last arrow carries `λ`
/// and the others `1`; on the Kronecker quiver the tube at `λ` has mouth
/// `K ⇉ K` with maps `1` and `λ`.
pub(crate) fn homogeneous_tubes(
    quiver: &Arc<Quiver>,
    delta: &[i64],
    first_id: usize,
    count: usize,
) -> Result<Vec<Tube>, ArError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let dims: Vec<usize> = delta.iter().map(|&c| c as usize).collect();
    let (a, b) = if dims.iter().all(|&d| d == 1) {
        // Ã: the last arrow carries λ, every other arrow the identity
        let last = quiver.arrows().len() - 1;
        let one = Matrix::from_i64(1, 1, &[1]);
        let zero = Matrix::zero(1, 1);
        let pick = |hit: bool| if hit { one.clone() } else { zero.clone() };
        (
            Representation::new(quiver.clone(), dims.clone(), (0..=last).map(|k| pick(k != last)).collect())?,
            Representation::new(quiver.clone(), dims.clone(), (0..=last).map(|k| pick(k == last)).collect())?,
        )
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4e1);
        (
            Representation::random(quiver, &dims, &mut rng, 2),
            Representation::random(quiver, &dims, &mut rng, 2),
        )
    };
    let mut tubes: Vec<Tube> = Vec::new();
    for lambda in parameter_sequence().take(64) {
        if tubes.len() == count {
            break;
        }
        let r = pencil_point(&a, &b, &lambda);
        if hom_space(&r, &r)?.dim() != 1 {
            continue;
        }
        // a brick of dimension δ is homogeneous exactly when τR ≅ R
        if find_isomorphism(&r, &coxeter_plus(&r))?.is_none() {
            continue;
        }
        // a line in the representation variety may meet one tube twice
        let mut distinct = true;
        for t in &tubes {
            if hom_space(&t.seed, &r)?.dim() != 0 {
                distinct = false;
            }
        }
        if !distinct {
            continue;
        }
        tubes.push(Tube {
            id: first_id + tubes.len(),
            rank: 1,
            mouth: vec![delta.to_vec()],
            parameter: Some(lambda),
            seed: r,
        });
    }
    if tubes.len() < count {
        return Err(ArError::TubeDiscovery("pencil has too few homogeneous points".into()));
    }
    Ok(tubes)
}
