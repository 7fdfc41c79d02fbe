use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use fdalg_core::bimodule::{bimodule_cosyzygy, bimodule_syzygy, Bimodule};
use fdalg_core::fixtures::IdealSide;
use fdalg_core::io::{self, LoadOptions};
use fdalg_core::{Algebra, Automorphism, Error, Field, ModuleRep, Result};

/// Per-invocation state: global flags and every input read so far.
pub struct Context {
    pub command: String,
    pub seed: u64,
    pub horizon: usize,
    field: Option<Field>,
    q: Option<String>,
    inputs: Vec<(String, Vec<u8>)>,
    pub started: Instant,
}

impl Context {
    pub fn new(command: String, seed: u64, horizon: usize, field: Option<Field>, q: Option<String>) -> Context {
        Context {
            command,
            seed,
            horizon,
            field,
            q,
            inputs: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn inputs(&self) -> &[(String, Vec<u8>)] {
        &self.inputs
    }

    pub fn field(&self) -> Option<Field> {
        self.field
    }

    pub fn load_options(&self) -> LoadOptions {
        let mut parameters = BTreeMap::new();
        if let Some(q) = &self.q {
            parameters.insert("q".to_string(), q.clone());
        }
        LoadOptions {
            field: self.field,
            parameters,
        }
    }

    pub fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| Error::Parse(format!("{}: not valid UTF-8", path.display())))?;
        self.inputs.push((path.display().to_string(), bytes));
        Ok(text)
    }

    pub fn algebra(&mut self, path: &Path) -> Result<Arc<Algebra>> {
        let text = self.read(path)?;
        io::parse_algebra_str(&text, &self.load_options()).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Parses a module SPEC (see `fdalg module --help`).
    pub fn module(&mut self, a: &Arc<Algebra>, spec: &str) -> Result<ModuleRep> {
        let mut parts = Vec::new();
        for item in spec.split(',').map(str::trim) {
            parts.push(self.module_part(a, item)?);
        }
        let first = parts.first().ok_or_else(|| Error::InvalidInput("empty module spec".into()))?;
        let alg = first.algebra().clone();
        if parts.len() == 1 {
            return Ok(parts.pop().expect("one part"));
        }
        ModuleRep::direct_sum_all(&alg, &parts)
    }

    fn module_part(&mut self, a: &Arc<Algebra>, item: &str) -> Result<ModuleRep> {
        let index = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("expected a vertex index, got {s:?}")))
        };
        let gens = |s: &str| s.split(';').map(|g| g.trim().to_string()).collect::<Vec<_>>();
        if item == "regular" {
            Ok(ModuleRep::regular(a))
        } else if item == "dual-regular" {
            Ok(ModuleRep::dual_regular(a))
        } else if let Some(i) = item.strip_prefix("simple:") {
            ModuleRep::simple(a, index(i)?)
        } else if let Some(i) = item.strip_prefix("projective:") {
            ModuleRep::indecomposable_projective(a, index(i)?)
        } else if let Some(g) = item.strip_prefix("left:") {
            io::generated_module(a, &gens(g), IdealSide::Left)
        } else if let Some(g) = item.strip_prefix("right:") {
            io::generated_module(a, &gens(g), IdealSide::Right)
        } else {
            let text = self.read(Path::new(item))?;
            io::parse_module_str(a, &text)
        }
    }

    pub fn automorphism(&mut self, a: &Arc<Algebra>, path: &Path) -> Result<Automorphism> {
        self.read(path)?;
        io::parse_automorphism(path, a, &self.load_options())
    }

    /// Parses a bimodule spec: `regular`, `syzygy:N`, `cosyzygy:N`,
    /// `twist:FILE` or a module file over the enveloping algebra.
    pub fn bimodule(&mut self, a: &Arc<Algebra>, spec: &str) -> Result<Bimodule> {
        let count = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("expected a count, got {s:?}")))
        };
        if spec == "regular" {
            Ok(Bimodule::regular(a))
        } else if let Some(n) = spec.strip_prefix("syzygy:") {
            bimodule_syzygy(a, count(n)?)
        } else if let Some(n) = spec.strip_prefix("cosyzygy:") {
            bimodule_cosyzygy(a, count(n)?)
        } else if let Some(p) = spec.strip_prefix("twist:") {
            let s = self.automorphism(a, Path::new(p))?;
            Ok(Bimodule::twisted(&s))
        } else {
            let text = self.read(Path::new(spec))?;
            let carrier = io::parse_module_str(&a.enveloping(), &text)?;
            Bimodule::new(a, a, carrier)
        }
    }
}
