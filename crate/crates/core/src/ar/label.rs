use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Preprojective,
    Preinjective,
}

/// Symbolic position of an indecomposable module, independent of the
/// matrices realizing it.
///
/// `Transjective { Preprojective, i, k }` is `τ^{-k} P_i` and
/// `Transjective { Preinjective, i, k }` is `τ^k I_i`. `Regular { tube, ray,
/// level }` is the module of regular length `level` on the ray starting at
/// the mouth module `E_ray` of the tube. Vertices and rays are 0-based here;
/// [`fmt::Display`] prints them 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IndecLabel {
    Transjective { side: Side, vertex: usize, power: usize },
    Regular { tube: usize, ray: usize, level: usize },
}

impl IndecLabel {
    pub fn projective(vertex: usize) -> Self {
        IndecLabel::Transjective { side: Side::Preprojective, vertex, power: 0 }
    }

    pub fn injective(vertex: usize) -> Self {
        IndecLabel::Transjective { side: Side::Preinjective, vertex, power: 0 }
    }

    pub fn preprojective(vertex: usize, power: usize) -> Self {
        IndecLabel::Transjective { side: Side::Preprojective, vertex, power }
    }

    pub fn preinjective(vertex: usize, power: usize) -> Self {
        IndecLabel::Transjective { side: Side::Preinjective, vertex, power }
    }

    pub fn regular(tube: usize, ray: usize, level: usize) -> Self {
        IndecLabel::Regular { tube, ray, level }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, IndecLabel::Transjective { side: Side::Preprojective, power: 0, .. })
    }

    pub fn is_injective(&self) -> bool {
        matches!(self, IndecLabel::Transjective { side: Side::Preinjective, power: 0, .. })
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, IndecLabel::Regular { .. })
    }

    pub fn side(&self) -> Option<Side> {
        match self {
            IndecLabel::Transjective { side, .. } => Some(*side),
            IndecLabel::Regular { .. } => None,
        }
    }

    pub fn is_preinjective(&self) -> bool {
        self.side() == Some(Side::Preinjective)
    }

    pub fn is_preprojective(&self) -> bool {
        self.side() == Some(Side::Preprojective)
    }
}

impl fmt::Display for IndecLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IndecLabel::Transjective { side, vertex, power } => {
                let (letter, sign) = match side {
                    Side::Preprojective => ('P', "-"),
                    Side::Preinjective => ('I', ""),
                };
                match power {
                    0 => write!(f, "{letter}{}", vertex + 1),
                    1 => write!(f, "tau{sign}{letter}{}", vertex + 1),
                    k => write!(f, "tau{sign}{k}{letter}{}", vertex + 1),
                }
            }
            IndecLabel::Regular { tube, ray, level } => write!(f, "T{tube}:E{}^{level}", ray + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_one_based() {
        assert_eq!(IndecLabel::projective(0).to_string(), "P1");
        assert_eq!(IndecLabel::preinjective(4, 2).to_string(), "tau2I5");
        assert_eq!(IndecLabel::preprojective(4, 2).to_string(), "tau-2P5");
        assert_eq!(IndecLabel::regular(0, 1, 3).to_string(), "T0:E2^3");
    }

    #[test]
    fn json_round_trip() {
        let l = IndecLabel::regular(1, 0, 2);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(serde_json::from_str::<IndecLabel>(&s).unwrap(), l);
    }
}
