use serde::{Deserialize, Serialize};

use super::catalog::Catalog;
use super::label::IndecLabel;
use super::ArError;

/// The wing below a regular module `E_j^m`: all `E_{j+d}^l` with
/// `d + l ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone {
    pub vertex: IndecLabel,
    pub level: usize,
    pub members: Vec<IndecLabel>,
}

impl Cone {
    pub fn contains(&self, label: &IndecLabel) -> bool {
        self.members.contains(label)
    }
}

fn regular_parts(catalog: &Catalog, vertex: &IndecLabel) -> Result<(usize, usize, usize, usize), ArError> {
    match *vertex {
        IndecLabel::Regular { tube, ray, level } => {
            let rank = catalog.tube(tube)?.rank;
            if ray >= rank || level == 0 {
                return Err(ArError::UnknownLabel(*vertex));
            }
            if level > rank {
                return Err(ArError::ConeTooDeep { level, rank });
            }
            Ok((tube, ray, level, rank))
        }
        _ => Err(ArError::NotRegular(*vertex)),
    }
}

pub fn cone(catalog: &Catalog, vertex: &IndecLabel) -> Result<Cone, ArError> {
    let (tube, ray, m, rank) = regular_parts(catalog, vertex)?;
    let mut members = Vec::with_capacity(m * (m + 1) / 2);
    for level in (1..=m).rev() {
        for d in 0..=m - level {
            members.push(IndecLabel::regular(tube, (ray + d) % rank, level));
        }
    }
    Ok(Cone { vertex: *vertex, level: m, members })
}

/// The coray through the vertex inside its cone, from the vertex down to
/// the mouth: `E_j^m, E_{j+1}^{m-1}, …, E_{j+m-1}^1`.
pub fn cone_edge(catalog: &Catalog, vertex: &IndecLabel) -> Result<Vec<IndecLabel>, ArError> {
    let (tube, ray, m, rank) = regular_parts(catalog, vertex)?;
    Ok((0..m).map(|d| IndecLabel::regular(tube, (ray + d) % rank, m - d)).collect())
}

/// A preinjective complete slice `τ^k DH`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slice {
    pub power: usize,
    pub members: Vec<IndecLabel>,
}

pub fn slice_modules(vertex_count: usize, power: usize) -> Slice {
    Slice { power, members: (0..vertex_count).map(|i| IndecLabel::preinjective(i, power)).collect() }
}
