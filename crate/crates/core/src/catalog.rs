//! Catalog files: milestones, applications, systems and analysis settings.
//!
//! The native format is TOML with `[config]`, `[[milestone]]`,
//! `[[application]]` and `[[system]]` entries whose keys are the field
//! names of the model types. JSON with the same shape is also accepted.
//! Entries in a file replace bundled entries with the same id.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gates::GateRatios;
use crate::mitigation::{default_pec_cap, QEC_QEM_MAX_OVERHEAD};
use crate::model::{self, Application, Milestone, ModelError, SystemSpec};
use crate::normalize::{DepthConvention, NormalizeOptions};
use crate::workload::{BandThresholds, MONTH_SECONDS, YEAR_SECONDS};

/// Environment variable naming a default catalog file.
pub const CONFIG_ENV: &str = "QCAP_CONFIG";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("IoError: {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("ParseError: {position}: {message}")]
    Parse { position: Position, message: String },
    #[error("ValidationError: {entity}: field '{field}' {message}")]
    Validation {
        entity: String,
        field: String,
        message: String,
    },
}

/// 1-based line and column; `0:0` when the parser gives no location.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl Position {
    fn from_offset(text: &str, offset: usize) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Position { line, column }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

impl From<ModelError> for CatalogError {
    fn from(e: ModelError) -> Self {
        let ModelError::Invalid { entity, field, message } = e;
        CatalogError::Validation {
            entity,
            field: field.to_string(),
            message,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub year_seconds: f64,
    pub month_seconds: f64,
    pub gate_ratios: GateRatios,
    pub depth_convention: DepthConvention,
    /// Routing and magic-state factory factor on physical qubit counts.
    pub overhead: f64,
    pub pec_max_overhead: f64,
    pub qec_qem_max_overhead: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            year_seconds: YEAR_SECONDS,
            month_seconds: MONTH_SECONDS,
            gate_ratios: GateRatios::default(),
            depth_convention: DepthConvention::default(),
            overhead: 1.0,
            pec_max_overhead: default_pec_cap(),
            qec_qem_max_overhead: QEC_QEM_MAX_OVERHEAD,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CatalogError> {
        let checks = [
            ("year_seconds", self.year_seconds, f64::MIN_POSITIVE),
            ("month_seconds", self.month_seconds, f64::MIN_POSITIVE),
            ("gate_ratios.toffoli", self.gate_ratios.toffoli, 0.0),
            ("gate_ratios.rotation", self.gate_ratios.rotation, 0.0),
            ("overhead", self.overhead, 1.0),
            ("pec_max_overhead", self.pec_max_overhead, 1.0),
            ("qec_qem_max_overhead", self.qec_qem_max_overhead, 1.0),
        ];
        for (field, value, min) in checks {
            if !(value.is_finite() && value >= min) {
                return Err(CatalogError::Validation {
                    entity: "config".into(),
                    field: field.into(),
                    message: format!("= {value} must be finite and >= {min}"),
                });
            }
        }
        if self.month_seconds >= self.year_seconds {
            return Err(CatalogError::Validation {
                entity: "config".into(),
                field: "month_seconds".into(),
                message: "must be shorter than year_seconds".into(),
            });
        }
        Ok(())
    }

    pub fn band_thresholds(&self) -> BandThresholds {
        BandThresholds::with_calendar(self.month_seconds, self.year_seconds)
    }

    pub fn normalize_options(&self) -> NormalizeOptions {
        NormalizeOptions {
            depth_convention: self.depth_convention,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Bundled,
    User,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityKind {
    Milestone,
    Application,
    System,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Toml,
    Json,
}

impl Format {
    fn detect(path: Option<&Path>, text: &str) -> Format {
        let by_ext = path.and_then(|p| p.extension()).and_then(|e| e.to_str());
        match by_ext {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            Some(e) if e.eq_ignore_ascii_case("toml") => Format::Toml,
            _ if text.trim_start().starts_with('{') => Format::Json,
            _ => Format::Toml,
        }
    }
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    #[serde(default)]
    config: Config,
    #[serde(default, rename = "milestone")]
    milestones: Vec<Milestone>,
    #[serde(default, rename = "application")]
    applications: Vec<Application>,
    #[serde(default, rename = "system")]
    systems: Vec<SystemSpec>,
}

/// A validated set of analysis inputs. Equality ignores where entries came
/// from.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub milestones: Vec<Milestone>,
    pub applications: Vec<Application>,
    pub systems: Vec<SystemSpec>,
    pub config: Config,
    origins: BTreeMap<(EntityKind, String), Origin>,
}

impl PartialEq for Catalog {
    fn eq(&self, other: &Self) -> bool {
        self.milestones == other.milestones
            && self.applications == other.applications
            && self.systems == other.systems
            && self.config == other.config
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::empty()
    }
}

impl Catalog {
    pub fn empty() -> Self {
        Catalog {
            milestones: Vec::new(),
            applications: Vec::new(),
            systems: Vec::new(),
            config: Config::default(),
            origins: BTreeMap::new(),
        }
    }

    /// The roadmap, workload and system datasets shipped with the crate.
    pub fn bundled() -> Self {
        let mut c = Catalog {
            milestones: model::bundled_milestones(),
            applications: model::bundled_workload(),
            systems: model::bundled_systems(),
            ..Catalog::empty()
        };
        c.mark_all(Origin::Bundled);
        c
    }

    fn mark_all(&mut self, origin: Origin) {
        let keys = self
            .milestones
            .iter()
            .map(|m| (EntityKind::Milestone, m.id.clone()))
            .chain(self.applications.iter().map(|a| (EntityKind::Application, a.id.clone())))
            .chain(self.systems.iter().map(|s| (EntityKind::System, s.id.clone())));
        for k in keys.collect::<Vec<_>>() {
            self.origins.insert(k, origin);
        }
    }

    pub fn origin(&self, kind: EntityKind, id: &str) -> Option<Origin> {
        self.origins.get(&(kind, id.to_string())).copied()
    }

    pub fn application(&self, id: &str) -> Option<&Application> {
        self.applications.iter().find(|a| a.id == id)
    }

    pub fn system(&self, id: &str) -> Option<&SystemSpec> {
        self.systems.iter().find(|s| s.id == id)
    }

    pub fn milestone(&self, id: &str) -> Option<&Milestone> {
        self.milestones.iter().find(|m| m.id == id)
    }

    fn merge(&mut self, file: CatalogFile) {
        self.config = file.config;
        for m in file.milestones {
            self.origins.insert((EntityKind::Milestone, m.id.clone()), Origin::User);
            upsert(&mut self.milestones, m, |x| &x.id);
        }
        for a in file.applications {
            self.origins.insert((EntityKind::Application, a.id.clone()), Origin::User);
            upsert(&mut self.applications, a, |x| &x.id);
        }
        for s in file.systems {
            self.origins.insert((EntityKind::System, s.id.clone()), Origin::User);
            upsert(&mut self.systems, s, |x| &x.id);
        }
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        self.config.validate()?;
        unique("milestone", self.milestones.iter().map(|m| m.id.as_str()))?;
        unique("application", self.applications.iter().map(|a| a.id.as_str()))?;
        unique("system", self.systems.iter().map(|s| s.id.as_str()))?;
        for m in &self.milestones {
            m.validate()?;
        }
        for a in &self.applications {
            a.validate()?;
        }
        for s in &self.systems {
            s.validate()?;
        }
        Ok(())
    }
}

fn upsert<T>(list: &mut Vec<T>, item: T, key: impl Fn(&T) -> &String) {
    match list.iter().position(|x| key(x) == key(&item)) {
        Some(i) => list[i] = item,
        None => list.push(item),
    }
}

fn unique<'a>(kind: &str, ids: impl Iterator<Item = &'a str>) -> Result<(), CatalogError> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(CatalogError::Validation {
                entity: format!("{kind} '{id}'"),
                field: "id".into(),
                message: "is not unique".into(),
            });
        }
    }
    Ok(())
}

fn parse_file(text: &str, format: Format) -> Result<CatalogFile, CatalogError> {
    match format {
        Format::Toml => toml::from_str(text).map_err(|e| CatalogError::Parse {
            position: e.span().map(|s| Position::from_offset(text, s.start)).unwrap_or_default(),
            message: e.message().trim().replace('\n', " "),
        }),
        Format::Json => serde_json::from_str(text).map_err(|e| CatalogError::Parse {
            position: Position {
                line: e.line(),
                column: e.column(),
            },
            message: strip_json_location(&e.to_string()),
        }),
    }
}

fn strip_json_location(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn check_file_ids(file: &CatalogFile) -> Result<(), CatalogError> {
    unique("milestone", file.milestones.iter().map(|m| m.id.as_str()))?;
    unique("application", file.applications.iter().map(|a| a.id.as_str()))?;
    unique("system", file.systems.iter().map(|s| s.id.as_str()))
}

/// Parses catalog text, merging it over the bundled datasets unless
/// `no_bundled` is set.
pub fn load_catalog_str(text: &str, format: Format, no_bundled: bool) -> Result<Catalog, CatalogError> {
    let file = parse_file(text, format)?;
    check_file_ids(&file)?;
    let mut catalog = if no_bundled { Catalog::empty() } else { Catalog::bundled() };
    catalog.merge(file);
    catalog.validate()?;
    Ok(catalog)
}

pub fn load_catalog(path: &Path, no_bundled: bool) -> Result<Catalog, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    load_catalog_str(&text, Format::detect(Some(path), &text), no_bundled)
}

/// Catalog from an explicit path, else from `QCAP_CONFIG`, else bundled
/// data only.
pub fn resolve_catalog(path: Option<&Path>, no_bundled: bool) -> Result<Catalog, CatalogError> {
    let env_path = std::env::var_os(CONFIG_ENV).filter(|p| !p.is_empty()).map(PathBuf::from);
    match path.map(Path::to_path_buf).or(env_path) {
        Some(p) => load_catalog(&p, no_bundled),
        None if no_bundled => Ok(Catalog::empty()),
        None => Ok(Catalog::bundled()),
    }
}

/// Serializes every entry, bundled or not, so the output loads back with
/// `no_bundled` into an equal catalog.
pub fn write_catalog(c: &Catalog, format: Format) -> String {
    let file = CatalogFile {
        config: c.config,
        milestones: c.milestones.clone(),
        applications: c.applications.clone(),
        systems: c.systems.clone(),
    };
    match format {
        Format::Toml => toml::to_string(&file).expect("catalog types serialize to TOML"),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&file).expect("catalog types serialize to JSON");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_keeps_bundled() {
        let c = load_catalog_str("", Format::Toml, false).unwrap();
        assert_eq!(c.applications.len(), 6);
        assert_eq!(c.systems.len(), 9);
        assert_eq!(c.origin(EntityKind::Application, "A"), Some(Origin::Bundled));
        assert_eq!(c.config, Config::default());
    }

    #[test]
    fn override_by_id() {
        let text = r#"
[[application]]
id = "A"
label = "Fermi-Hubbard"
shots = 100
domain_tag = "condensed-matter"
pvec = { n_qubits = 200, n_gates = 1e5 }
"#;
        let c = load_catalog_str(text, Format::Toml, false).unwrap();
        assert_eq!(c.applications.len(), 6);
        assert_eq!(c.application("A").unwrap().shots, 100);
        assert_eq!(c.origin(EntityKind::Application, "A"), Some(Origin::User));
        assert_eq!(c.origin(EntityKind::Application, "B"), Some(Origin::Bundled));
    }

    #[test]
    fn validation_names_field() {
        let text = r#"
[[milestone]]
id = "bad"
vendor = "X"
technology = "other"
year = 2030
n_physical = 10
error_rate = 2.0
"#;
        let err = load_catalog_str(text, Format::Toml, true).unwrap_err();
        match err {
            CatalogError::Validation { entity, field, .. } => {
                assert_eq!(field, "error_rate");
                assert!(entity.contains("bad"));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn unknown_field_is_parse_error() {
        let text = "[[system]]\nid = \"s\"\nmax_gates = 1e6\nclock_hz = 1e3\nmax_qbits = 4\n";
        let err = load_catalog_str(text, Format::Toml, true).unwrap_err();
        let msg = err.to_string();
        assert!(msg.starts_with("ParseError: "), "{msg}");
        assert!(msg.contains("max_qbits"), "{msg}");
        assert!(!msg.contains('\n'));
        let CatalogError::Parse { position, .. } = err else { unreachable!() };
        assert!(position.line >= 1);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let sys = "[[system]]\nid = \"s\"\nmax_gates = 1e6\nclock_hz = 1e3\n";
        let err = load_catalog_str(&format!("{sys}{sys}"), Format::Toml, true).unwrap_err();
        assert!(matches!(err, CatalogError::Validation { ref field, .. } if field == "id"));
    }

    #[test]
    fn json_detected_and_located() {
        assert_eq!(Format::detect(None, "  {\"system\": []}"), Format::Json);
        assert_eq!(Format::detect(Some(Path::new("x.json")), ""), Format::Json);
        assert_eq!(Format::detect(Some(Path::new("x.toml")), "{"), Format::Toml);
        let err = load_catalog_str("{\n  \"system\": [1,\n", Format::Json, true).unwrap_err();
        let CatalogError::Parse { position, .. } = err else { panic!() };
        assert!(position.line >= 2);
    }

    #[test]
    fn round_trip_both_formats() {
        let mut c = Catalog::bundled();
        c.config.overhead = 2.5;
        c.config.depth_convention = DepthConvention::DenseLayers;
        for fmt in [Format::Toml, Format::Json] {
            let back = load_catalog_str(&write_catalog(&c, fmt), fmt, true).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn bad_config_rejected() {
        let err = load_catalog_str("[config]\nyear_seconds = -1.0\n", Format::Toml, true).unwrap_err();
        assert!(matches!(err, CatalogError::Validation { ref field, .. } if field == "year_seconds"));
    }
}
