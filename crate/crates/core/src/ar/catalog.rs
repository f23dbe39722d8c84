use std::sync::Arc;

use crate::memo::Memo;
use crate::quiver::{
    self, find_isomorphism, EuclideanType, ExtSpace, HomSpace, Quiver, RepMorphism, Representation, SplitSummand,
};

use super::coxeter::{Coxeter, Defect};
use super::label::{IndecLabel, Side};
use super::reflect::{coxeter_minus, coxeter_minus_morphisms, coxeter_plus};
use super::tubes::{exceptional_tubes, homogeneous_tubes, Tube};
use super::ArError;

/// Which labels count as "the window" when enumerating samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogOptions {
    /// Largest power `k` of `τ^{-k}P_i` and `τ^k I_i`.
    pub max_power: usize,
    /// Largest level in exceptional tubes; `None` means rank + 2 per tube.
    pub max_level: Option<usize>,
    pub homogeneous_tubes: usize,
    pub homogeneous_levels: usize,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions { max_power: 6, max_level: None, homogeneous_tubes: 2, homogeneous_levels: 3 }
    }
}

/// The indecomposables of a tame hereditary algebra, realized on demand.
///
/// All queries are read-only apart from memoization, so a catalog can be
/// shared across threads.
pub struct Catalog {
    quiver: Arc<Quiver>,
    kind: EuclideanType,
    coxeter: Coxeter,
    null_root: Vec<i64>,
    defect: Defect,
    tubes: Vec<Tube>,
    options: CatalogOptions,
    reps: Memo<IndecLabel, Representation>,
    homs: Memo<(IndecLabel, IndecLabel), HomSpace>,
    exts: Memo<(IndecLabel, IndecLabel), ExtSpace>,
    thetas: Memo<IndecLabel, (RepMorphism, RepMorphism)>,
    moved: Memo<(IndecLabel, IndecLabel), Vec<RepMorphism>>,
}

impl Catalog {
    pub fn new(quiver: Quiver, options: CatalogOptions) -> Result<Self, ArError> {
        let kind = quiver.euclidean_type().ok_or(ArError::NotEuclidean)?;
        let quiver = Arc::new(quiver);
        let coxeter = Coxeter::new(&quiver);
        let null_root = quiver.null_root().ok_or(ArError::NotEuclidean)?;
        let defect = Defect::new(&quiver, &coxeter, &null_root, kind.coxeter_period());
        let mut tubes = exceptional_tubes(&quiver, &coxeter, &defect, &null_root, &kind.tube_ranks())?;
        let first = tubes.len();
        tubes.extend(homogeneous_tubes(&quiver, &null_root, first, options.homogeneous_tubes)?);
        Ok(Catalog {
            quiver,
            kind,
            coxeter,
            null_root,
            defect,
            tubes,
            options,
            reps: Memo::default(),
            homs: Memo::default(),
            exts: Memo::default(),
            thetas: Memo::default(),
            moved: Memo::default(),
        })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn euclidean_type(&self) -> EuclideanType {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn coxeter(&self) -> &Coxeter {
        &self.coxeter
    }

    pub fn null_root(&self) -> &[i64] {
        &self.null_root
    }

    pub fn defect(&self, x: &[i64]) -> i64 {
        self.defect.of(x)
    }

    pub fn defect_form(&self) -> &Defect {
        &self.defect
    }

    pub fn tubes(&self) -> &[Tube] {
        &self.tubes
    }

    pub fn tube(&self, id: usize) -> Result<&Tube, ArError> {
        self.tubes.get(id).ok_or(ArError::UnknownTube(id))
    }

    pub fn options(&self) -> &CatalogOptions {
        &self.options
    }

    pub fn max_level(&self, tube: &Tube) -> usize {
        if tube.is_homogeneous() {
            self.options.homogeneous_levels
        } else {
            self.options.max_level.unwrap_or(tube.rank + 2)
        }
    }

    /// Rejects labels that name no module, or lie outside the window.
    pub fn check_label(&self, label: &IndecLabel) -> Result<(), ArError> {
        match *label {
            IndecLabel::Transjective { vertex, power, .. } => {
                if vertex >= self.vertex_count() {
                    Err(ArError::UnknownLabel(*label))
                } else if power > self.options.max_power {
                    Err(ArError::OutOfWindow(*label))
                } else {
                    Ok(())
                }
            }
            IndecLabel::Regular { tube, ray, level } => {
                let t = self.tube(tube)?;
                if ray >= t.rank || level == 0 {
                    Err(ArError::UnknownLabel(*label))
                } else if level > self.max_level(t) {
                    Err(ArError::OutOfWindow(*label))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn in_window(&self, label: &IndecLabel) -> bool {
        self.check_label(label).is_ok()
    }

    pub fn dim_vector(&self, label: &IndecLabel) -> Vec<i64> {
        let n = self.vertex_count();
        match *label {
            IndecLabel::Transjective { side, vertex, power } => {
                let pc = self.quiver.path_counts();
                match side {
                    Side::Preprojective => {
                        let p: Vec<i64> = (0..n).map(|v| pc[vertex][v] as i64).collect();
                        self.coxeter.power(&p, -(power as i64))
                    }
                    Side::Preinjective => {
                        let i: Vec<i64> = (0..n).map(|v| pc[v][vertex] as i64).collect();
                        self.coxeter.power(&i, power as i64)
                    }
                }
            }
            IndecLabel::Regular { tube, ray, level } => self.tubes[tube].dim_vector(ray, level),
        }
    }

    pub fn tau_label(&self, label: &IndecLabel) -> Option<IndecLabel> {
        match *label {
            IndecLabel::Transjective { side: Side::Preprojective, power: 0, .. } => None,
            IndecLabel::Transjective { side: Side::Preprojective, vertex, power } => Some(IndecLabel::preprojective(vertex, power - 1)),
            IndecLabel::Transjective { side: Side::Preinjective, vertex, power } => Some(IndecLabel::preinjective(vertex, power + 1)),
            IndecLabel::Regular { tube, ray, level } => {
                let r = self.tubes[tube].rank;
                Some(IndecLabel::regular(tube, (ray + r - 1) % r, level))
            }
        }
    }

    pub fn tau_inverse_label(&self, label: &IndecLabel) -> Option<IndecLabel> {
        match *label {
            IndecLabel::Transjective { side: Side::Preinjective, power: 0, .. } => None,
            IndecLabel::Transjective { side: Side::Preinjective, vertex, power } => Some(IndecLabel::preinjective(vertex, power - 1)),
            IndecLabel::Transjective { side: Side::Preprojective, vertex, power } => Some(IndecLabel::preprojective(vertex, power + 1)),
            IndecLabel::Regular { tube, ray, level } => {
                let r = self.tubes[tube].rank;
                Some(IndecLabel::regular(tube, (ray + 1) % r, level))
            }
        }
    }

    /// An explicit representation of the labelled module.
    pub fn realize(&self, label: &IndecLabel) -> Result<Arc<Representation>, ArError> {
        self.check_label(label)?;
        self.reps.get_or_try(label, || self.build(label))
    }

    fn build(&self, label: &IndecLabel) -> Result<Representation, ArError> {
        Ok(match *label {
            IndecLabel::Transjective { side: Side::Preprojective, vertex, power: 0 } => Representation::projective(&self.quiver, vertex),
            IndecLabel::Transjective { side: Side::Preinjective, vertex, power: 0 } => Representation::injective(&self.quiver, vertex),
            IndecLabel::Transjective { side: Side::Preprojective, vertex, power } => {
                coxeter_minus(&*self.realize(&IndecLabel::preprojective(vertex, power - 1))?)
            }
            IndecLabel::Transjective { side: Side::Preinjective, vertex, power } => {
                coxeter_plus(&*self.realize(&IndecLabel::preinjective(vertex, power - 1))?)
            }
            IndecLabel::Regular { tube, ray: 0, level: 1 } => self.tubes[tube].seed.clone(),
            IndecLabel::Regular { tube, ray, level: 1 } => coxeter_minus(&*self.realize(&IndecLabel::regular(tube, ray - 1, 1))?),
            IndecLabel::Regular { tube, ray, level } => {
                // 0 → E_j → E_j^l → E_{j+1}^{l-1} → 0, the unique non-split extension
                let r = self.tubes[tube].rank;
                let sub = self.realize(&IndecLabel::regular(tube, ray, 1))?;
                let top = self.realize(&IndecLabel::regular(tube, (ray + 1) % r, level - 1))?;
                let ext = quiver::ext1_space(&top, &sub)?;
                if ext.dim() != 1 {
                    return Err(ArError::TubeDiscovery(format!("Ext between ray neighbours of {label} has dimension {}", ext.dim())));
                }
                quiver::extension(&top, &sub, &ext.basis()[0]).0
            }
        })
    }

    /// The isomorphism `C⁻(realize L) → realize(τ⁻¹L)` and its inverse.
    fn theta(&self, label: &IndecLabel) -> Result<Arc<(RepMorphism, RepMorphism)>, ArError> {
        self.thetas.get_or_try(label, || {
            let next = self.tau_inverse_label(label).ok_or(ArError::InjectiveSummand)?;
            let moved = coxeter_minus(&*self.realize(label)?);
            let target = self.realize(&next)?;
            if *target == moved {
                let id = RepMorphism::identity(&moved);
                return Ok((id.clone(), id));
            }
            let iso = find_isomorphism(&moved, &target)?.ok_or(ArError::TranslateMismatch(*label))?;
            let inv = iso.inverse().expect("isomorphism");
            Ok((iso, inv))
        })
    }

    pub fn hom(&self, x: &IndecLabel, y: &IndecLabel) -> Result<Arc<HomSpace>, ArError> {
        self.homs.get_or_try(&(*x, *y), || Ok(quiver::hom_space(&*self.realize(x)?, &*self.realize(y)?)?))
    }

    pub fn ext(&self, x: &IndecLabel, y: &IndecLabel) -> Result<Arc<ExtSpace>, ArError> {
        self.exts.get_or_try(&(*x, *y), || Ok(quiver::ext1_space(&*self.realize(x)?, &*self.realize(y)?)?))
    }

    pub fn hom_dim(&self, x: &IndecLabel, y: &IndecLabel) -> Result<usize, ArError> {
        Ok(self.hom(x, y)?.dim())
    }

    pub fn ext_dim(&self, x: &IndecLabel, y: &IndecLabel) -> Result<usize, ArError> {
        Ok(self.ext(x, y)?.dim())
    }

    /// `τ⁻¹` applied to the basis of `Hom(X, Y)`, as maps between the
    /// realizations of `τ⁻¹X` and `τ⁻¹Y`.
    pub fn tau_inverse_hom_basis(&self, x: &IndecLabel, y: &IndecLabel) -> Result<Arc<Vec<RepMorphism>>, ArError> {
        self.moved.get_or_try(&(*x, *y), || {
            let basis = self.hom(x, y)?;
            if basis.dim() == 0 {
                return Ok(Vec::new());
            }
            let (rx, ry) = (self.realize(x)?, self.realize(y)?);
            let moved = coxeter_minus_morphisms(&rx, &ry, basis.basis());
            let tx = self.theta(x)?;
            let ty = self.theta(y)?;
            Ok(moved.iter().map(|f| ty.0.after(f).after(&tx.1)).collect())
        })
    }

    /// Labels in the window, in a fixed order: preprojectives, regulars,
    /// preinjectives.
    pub fn window_labels(&self) -> Vec<IndecLabel> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for power in 0..=self.options.max_power {
            for v in 0..n {
                out.push(IndecLabel::preprojective(v, power));
            }
        }
        for t in &self.tubes {
            for level in 1..=self.max_level(t) {
                for ray in 0..t.rank {
                    out.push(IndecLabel::regular(t.id, ray, level));
                }
            }
        }
        for power in 0..=self.options.max_power {
            for v in 0..n {
                out.push(IndecLabel::preinjective(v, power));
            }
        }
        out
    }

    /// The label of an indecomposable representation, searched among window
    /// labels with the same dimension vector.
    pub fn identify(&self, x: &Representation) -> Result<IndecLabel, ArError> {
        let dims = x.dim_vector();
        for label in self.candidates_with_dims(&dims) {
            if find_isomorphism(x, &*self.realize(&label)?)?.is_some() {
                return Ok(label);
            }
        }
        Err(ArError::Unidentified(dims))
    }

    fn candidates_with_dims(&self, dims: &[i64]) -> Vec<IndecLabel> {
        self.window_labels().into_iter().filter(|l| self.dim_vector(l) == dims).collect()
    }

    /// Window labels whose dimension vector fits inside `dims`.
    fn labels_below(&self, dims: &[i64]) -> Vec<IndecLabel> {
        self.window_labels()
            .into_iter()
            .filter(|l| self.dim_vector(l).iter().zip(dims).all(|(a, b)| a <= b))
            .collect()
    }

    /// Multiplicities of catalogued indecomposables in `x`.
    pub fn decompose(&self, x: &Representation) -> Result<Vec<(IndecLabel, usize)>, ArError> {
        let labels = self.labels_below(&x.dim_vector());
        let reps = labels.iter().map(|l| self.realize(l)).collect::<Result<Vec<_>, _>>()?;
        let candidates: Vec<(IndecLabel, &Representation)> = labels.iter().copied().zip(reps.iter().map(|r| &**r)).collect();
        quiver::decompose(x, &candidates).map_err(|e| match e {
            quiver::QuiverError::Unidentified(d) => ArError::Unidentified(d.into_iter().map(|c| c as i64).collect()),
            other => other.into(),
        })
    }

    /// An explicit decomposition of `x` into catalogued indecomposables.
    pub fn split(&self, x: &Representation) -> Result<Vec<SplitSummand<IndecLabel>>, ArError> {
        if x.is_zero() {
            return Ok(Vec::new());
        }
        let labels = self.labels_below(&x.dim_vector());
        let reps = labels.iter().map(|l| self.realize(l)).collect::<Result<Vec<_>, _>>()?;
        let candidates: Vec<(IndecLabel, &Representation)> = labels.iter().copied().zip(reps.iter().map(|r| &**r)).collect();
        quiver::split(x, &candidates).map_err(|e| match e {
            quiver::QuiverError::Unidentified(d) => ArError::Unidentified(d.into_iter().map(|c| c as i64).collect()),
            other => other.into(),
        })
    }

    /// Least `m` such that `Φ^m dim I_i` is sincere for every vertex `i`.
    pub fn sincerity_threshold(&self) -> usize {
        let n = self.vertex_count();
        (0..)
            .find(|&m| {
                (0..n).all(|i| self.dim_vector(&IndecLabel::preinjective(i, m)).iter().all(|&c| c > 0))
            })
            .expect("preinjectives eventually become sincere")
    }
}
