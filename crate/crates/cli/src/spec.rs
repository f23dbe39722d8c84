//! Instance files: a Euclidean quiver, the summands of a tilting module and
//! run options, as one JSON document.
//!
//! Vertices, rays and arrow endpoints are 1-based; tube ids are 0-based and
//! follow the catalog order printed by `validate`.

use std::path::Path;
use std::sync::Arc;

use repdim_core::ar::{Catalog, CatalogOptions, IndecLabel};
use repdim_core::generator::{GeneratorError, TiltedInstance};
use repdim_core::quiver::Quiver;
use repdim_core::tilting::{validate_tilting, TiltingModule};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    /// Expected Euclidean type, e.g. `"D~5"`; checked when present.
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum LabelSpec {
    Projective { vertex: usize },
    Injective { vertex: usize },
    Preprojective { vertex: usize, power: usize },
    Preinjective { vertex: usize, power: usize },
    Regular { tube: usize, ray: usize, level: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecOptions {
    /// Largest transjective power of the sample window.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    /// Largest tube level of the sample window.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<usize>,
    #[serde(default)]
    pub cogenerator: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    /// Catalog bound on transjective powers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_power: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homogeneous_tubes: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub name: String,
    pub quiver: QuiverSpec,
    pub tilting: Vec<LabelSpec>,
    #[serde(default)]
    pub options: SpecOptions,
}

impl InstanceSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        serde_json::from_str(text).map_err(|e| SpecError::Syntax { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn load(path: &Path) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SpecError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::parse(&text)
    }

    /// Command-line flags take precedence over the file's options.
    pub fn with_overrides(mut self, overrides: &SpecOptions) -> Self {
        let o = &mut self.options;
        o.window = overrides.window.or(o.window);
        o.levels = overrides.levels.or(o.levels);
        o.cogenerator |= overrides.cogenerator;
        o.cutoff = overrides.cutoff.or(o.cutoff);
        o.max_power = overrides.max_power.or(o.max_power);
        o.homogeneous_tubes = overrides.homogeneous_tubes.or(o.homogeneous_tubes);
        self
    }

    pub fn quiver(&self) -> Result<Quiver, SpecError> {
        let n = self.quiver.vertices;
        let mut arrows = Vec::with_capacity(self.quiver.arrows.len());
        for (k, &(s, t)) in self.quiver.arrows.iter().enumerate() {
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(field(format!("quiver.arrows[{k}]"), format!("vertex {v} is not in 1..={n}")));
                }
            }
            arrows.push((s - 1, t - 1));
        }
        let q = Quiver::euclidean(n, &arrows).map_err(|e| field("quiver", e))?;
        if let Some(kind) = &self.quiver.kind {
            let found = q.euclidean_type().map(|t| t.to_string()).unwrap_or_default();
            if normalize(kind) != normalize(&found) {
                return Err(field("quiver.type", format!("declared {kind}, arrows give {found}")));
            }
        }
        Ok(q)
    }

    pub fn labels(&self) -> Result<Vec<IndecLabel>, SpecError> {
        let n = self.quiver.vertices;
        self.tilting
            .iter()
            .enumerate()
            .map(|(k, l)| {
                let at = format!("tilting[{k}]");
                let vertex = |v: usize| {
                    if v == 0 || v > n {
                        Err(field(&at, format!("vertex {v} is not in 1..={n}")))
                    } else {
                        Ok(v - 1)
                    }
                };
                Ok(match *l {
                    LabelSpec::Projective { vertex: v } => IndecLabel::projective(vertex(v)?),
                    LabelSpec::Injective { vertex: v } => IndecLabel::injective(vertex(v)?),
                    LabelSpec::Preprojective { vertex: v, power } => IndecLabel::preprojective(vertex(v)?, power),
                    LabelSpec::Preinjective { vertex: v, power } => IndecLabel::preinjective(vertex(v)?, power),
                    LabelSpec::Regular { tube, ray, level } => {
                        if ray == 0 || level == 0 {
                            return Err(field(&at, "ray and level are 1-based"));
                        }
                        IndecLabel::regular(tube, ray - 1, level)
                    }
                })
            })
            .collect()
    }

    /// The catalog, sized so that every summand and the sample window fit.
    pub fn catalog(&self) -> Result<Arc<Catalog>, SpecError> {
        let q = self.quiver()?;
        let labels = self.labels()?;
        let n = q.vertex_count();
        let mut options = CatalogOptions::default();
        if let Some(h) = self.options.homogeneous_tubes {
            options.homogeneous_tubes = h;
        }
        let probe = Catalog::new(q.clone(), options.clone()).map_err(|e| field("quiver", e))?;
        let top = labels
            .iter()
            .filter_map(|l| match *l {
                IndecLabel::Transjective { power, .. } => Some(power),
                IndecLabel::Regular { .. } => None,
            })
            .max()
            .unwrap_or(0);
        let default_power = probe.sincerity_threshold() + top + n;
        options.max_power = self.options.max_power.unwrap_or(default_power).max(self.options.window.unwrap_or(0));
        if let Some(levels) = self.options.levels {
            options.max_level = Some(levels);
        }
        Catalog::new(q, options).map(Arc::new).map_err(|e| field("quiver", e))
    }

    pub fn tilting(&self) -> Result<TiltingModule, SpecError> {
        let catalog = self.catalog()?;
        validate_tilting(&catalog, &self.labels()?).map_err(|e| field("tilting", e))
    }

    pub fn instance(&self) -> Result<TiltedInstance, InstanceError> {
        let t = self.tilting()?;
        Ok(TiltedInstance::new(t)?)
    }
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
}

fn field(name: impl Into<String>, message: impl ToString) -> SpecError {
    SpecError::Field { field: name.into(), message: message.to_string() }
}

fn normalize(kind: &str) -> String {
    kind.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_uppercase()
}

#[cfg(test)]
mod tests {
    use super::*;

    const KRONECKER_DH: &str = r#"{
        "name": "kronecker",
        "quiver": { "type": "A~(1,1)", "vertices": 2, "arrows": [[1, 2], [1, 2]] },
        "tilting": [ { "kind": "injective", "vertex": 1 }, { "kind": "injective", "vertex": 2 } ]
    }"#;

    #[test]
    fn parses_and_validates() {
        let spec = InstanceSpec::parse(KRONECKER_DH).unwrap();
        assert_eq!(spec.labels().unwrap(), vec![IndecLabel::injective(0), IndecLabel::injective(1)]);
        assert_eq!(spec.tilting().unwrap().summands().len(), 2);
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let err = InstanceSpec::parse("{\n  \"name\": \"x\",\n  \"quiver\": 3\n}").unwrap_err();
        assert!(matches!(err, SpecError::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn field_errors_name_the_field() {
        let bad = KRONECKER_DH.replace("\"vertex\": 2 }", "\"vertex\": 3 }");
        let err = InstanceSpec::parse(&bad).unwrap().labels().unwrap_err();
        assert_eq!(err.to_string(), "tilting[1]: vertex 3 is not in 1..=2");
        let wrong_type = KRONECKER_DH.replace("A~(1,1)", "D~4");
        assert!(InstanceSpec::parse(&wrong_type).unwrap().quiver().is_err());
    }

    #[test]
    fn overrides_win() {
        let spec = InstanceSpec::parse(KRONECKER_DH).unwrap();
        let o = SpecOptions { window: Some(3), cogenerator: true, ..Default::default() };
        let spec = spec.with_overrides(&o);
        assert_eq!(spec.options.window, Some(3));
        assert!(spec.options.cogenerator);
    }
}
