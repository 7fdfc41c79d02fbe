//! JSON file formats for algebras, modules and automorphisms.
//!
//! Scalars are written as strings (`"1/2"`, `"-3"`); integers are accepted
//! on input as well. An algebra file holds either a quiver presentation or
//! a structure-constant table:
//!
//! ```json
//! {"field": "Q",
//!  "quiver": {"vertices": ["e"],
//!             "arrows": [{"name": "x", "source": "e", "target": "e"}],
//!             "relations": [[{"path": ["x", "x"], "coeff": "1"}]],
//!             "nilpotency": 2}}
//! ```
//!
//! A relation coefficient may also be the symbol `q` or `-q`, filled in
//! from the `parameters` object or an override at load time.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::bimodule::Automorphism;
use crate::error::{Error, Result};
use crate::fixtures::{self, IdealSide};
use crate::matrix::Matrix;
use crate::module::ModuleRep;
use crate::quiver::{Arrow, QuiverPresentation, RelationTerm};
use crate::scalar::{Field, Scalar};

/// A scalar as it appears in a file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn of(s: &Scalar) -> Num {
        Num::Text(s.to_string())
    }

    fn resolve(&self, field: Field, params: &BTreeMap<String, Scalar>) -> Result<Scalar> {
        match self {
            Num::Int(n) => Ok(field.from_i64(*n)),
            Num::Text(t) => {
                let t = t.trim();
                let (neg, name) = match t.strip_prefix('-') {
                    Some(rest) => (true, rest.trim()),
                    None => (false, t),
                };
                if let Some(v) = params.get(name) {
                    return Ok(if neg { &field.zero() - v } else { v.clone() });
                }
                if name.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
                    return Err(Error::Parse(format!("unbound parameter {name:?}")));
                }
                field.parse(t)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub path: Vec<String>,
    pub coeff: Num,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub relations: Vec<Vec<TermFile>>,
    pub nilpotency: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub labels: Vec<String>,
    /// `products[i][j]` is the coordinate vector of `e_i e_j`.
    pub products: Vec<Vec<Vec<Num>>>,
    pub unit: Vec<Num>,
    pub idempotents: Vec<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<Vec<Vec<Num>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableFile>,
}

/// Overrides applied when loading an algebra file.
#[derive(Clone, Debug, Default)]
pub struct LoadOptions {
    /// Used when the file names no field; also replaces the file's field.
    pub field: Option<Field>,
    /// Values for symbolic coefficients, e.g. `q`.
    pub parameters: BTreeMap<String, String>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn vec_of(field: Field, v: &[Num], params: &BTreeMap<String, Scalar>) -> Result<Vec<Scalar>> {
    v.iter().map(|x| x.resolve(field, params)).collect()
}

fn matrix_of(field: Field, rows: &[Vec<Num>], cols: usize, params: &BTreeMap<String, Scalar>) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| vec_of(field, r, params))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, rows)
}

pub fn parse_algebra_str(text: &str, opts: &LoadOptions) -> Result<Arc<Algebra>> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(json_error)?;
    load_algebra(&file, opts)
}

pub fn parse_algebra(path: &Path, opts: &LoadOptions) -> Result<Arc<Algebra>> {
    parse_algebra_str(&read(path)?, opts)
}

pub fn load_algebra(file: &AlgebraFile, opts: &LoadOptions) -> Result<Arc<Algebra>> {
    let field = match (&opts.field, &file.field) {
        (Some(f), _) => *f,
        (None, Some(s)) => s.parse()?,
        (None, None) => Field::Rationals,
    };
    let mut params = BTreeMap::new();
    for (k, v) in &file.parameters {
        params.insert(k.clone(), v.resolve(field, &BTreeMap::new())?);
    }
    for (k, v) in &opts.parameters {
        params.insert(k.clone(), field.parse(v)?);
    }
    match (&file.quiver, &file.table) {
        (Some(q), None) => {
            let relations = q
                .relations
                .iter()
                .map(|rel| {
                    rel.iter()
                        .map(|t| {
                            Ok(RelationTerm {
                                path: t.path.clone(),
                                coeff: t.coeff.resolve(field, &params)?,
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            QuiverPresentation::new(q.vertices.clone(), q.arrows.clone(), relations, q.nilpotency).build(field)
        }
        (None, Some(t)) => {
            let n = t.labels.len();
            let table = t
                .products
                .iter()
                .map(|row| row.iter().map(|v| vec_of(field, v, &params)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let unit = vec_of(field, &t.unit, &params)?;
            let idempotents = t
                .idempotents
                .iter()
                .map(|v| vec_of(field, v, &params))
                .collect::<Result<Vec<_>>>()?;
            let radical = t
                .radical
                .as_ref()
                .map(|r| r.iter().map(|v| vec_of(field, v, &params)).collect::<Result<Vec<_>>>())
                .transpose()?;
            if table.len() != n {
                return Err(Error::Shape(format!("products needs {n} rows")));
            }
            Algebra::from_structure_constants(field, t.labels.clone(), table, unit, idempotents, radical)
        }
        _ => Err(Error::Parse("an algebra file needs exactly one of \"quiver\" or \"table\"".into())),
    }
}

/// File form of an algebra: the quiver presentation when there is one,
/// otherwise the structure constants with the radical basis.
pub fn algebra_to_file(a: &Algebra) -> AlgebraFile {
    let (quiver, table) = match a.presentation() {
        Some(p) => (
            Some(QuiverFile {
                vertices: p.vertices.clone(),
                arrows: p.arrows.clone(),
                relations: p
                    .relations
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|t| TermFile {
                                path: t.path.clone(),
                                coeff: Num::of(&t.coeff),
                            })
                            .collect()
                    })
                    .collect(),
                nilpotency: p.nilpotency,
            }),
            None,
        ),
        None => {
            let vecs = |v: &[Vec<Scalar>]| v.iter().map(|x| x.iter().map(Num::of).collect()).collect();
            (
                None,
                Some(TableFile {
                    labels: a.labels().to_vec(),
                    products: a.table().iter().map(|row| vecs(row)).collect(),
                    unit: a.unit().iter().map(Num::of).collect(),
                    idempotents: vecs(a.idempotents()),
                    radical: Some(vecs(a.radical().basis.basis())),
                }),
            )
        }
    };
    AlgebraFile {
        field: Some(a.field().to_string()),
        fixture: None,
        parameters: BTreeMap::new(),
        quiver,
        table,
    }
}

pub fn emit_algebra(a: &Algebra) -> String {
    to_pretty(&algebra_to_file(a))
}

fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// A module file: explicit action matrices, one per algebra basis element,
/// or a cyclic/finitely generated submodule of the regular module.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<Num>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    /// `left` (default) for the left ideal `A g`, `right` for `g A`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
}

pub fn parse_side(s: &str) -> Result<IdealSide> {
    match s {
        "left" => Ok(IdealSide::Left),
        "right" => Ok(IdealSide::Right),
        other => Err(Error::InvalidInput(format!("side must be left or right, got {other:?}"))),
    }
}

/// The submodule of the regular module generated by `gens`. On the left
/// side it is a right module over the opposite algebra.
pub fn generated_module(a: &Arc<Algebra>, gens: &[String], side: IdealSide) -> Result<ModuleRep> {
    if gens.is_empty() {
        return Err(Error::InvalidInput("at least one generator is needed".into()));
    }
    let elems = gens
        .iter()
        .map(|g| a.parse_element(g))
        .collect::<Result<Vec<_>>>()?;
    let reg = match side {
        IdealSide::Left => ModuleRep::regular(&a.opposite()),
        IdealSide::Right => ModuleRep::regular(a),
    };
    Ok(reg.submodule_span(&elems)?.0)
}

pub fn load_module(a: &Arc<Algebra>, file: &ModuleFile) -> Result<ModuleRep> {
    match (&file.action, &file.generators) {
        (Some(action), None) => {
            if file.side.is_some() {
                return Err(Error::Parse("\"side\" only applies to \"generators\"".into()));
            }
            let f = a.field();
            let d = action.first().map_or(0, |m| m.len());
            let mats = action
                .iter()
                .map(|m| matrix_of(f, m, d, &BTreeMap::new()))
                .collect::<Result<Vec<_>>>()?;
            if mats.is_empty() {
                return Err(Error::Shape("action needs one matrix per basis element".into()));
            }
            ModuleRep::new(a, mats)
        }
        (None, Some(gens)) => {
            let side = file.side.as_deref().map_or(Ok(IdealSide::Left), parse_side)?;
            generated_module(a, gens, side)
        }
        _ => Err(Error::Parse("a module file needs exactly one of \"action\" or \"generators\"".into())),
    }
}

pub fn parse_module_str(a: &Arc<Algebra>, text: &str) -> Result<ModuleRep> {
    let file: ModuleFile = serde_json::from_str(text).map_err(json_error)?;
    load_module(a, &file)
}

pub fn module_to_file(m: &ModuleRep) -> ModuleFile {
    ModuleFile {
        action: Some(
            m.action()
                .iter()
                .map(|x| x.row_vecs().iter().map(|r| r.iter().map(Num::of).collect()).collect())
                .collect(),
        ),
        generators: None,
        side: None,
    }
}

pub fn emit_module(m: &ModuleRep) -> String {
    to_pretty(&module_to_file(m))
}

/// `algebra` is either an inline algebra object or a path relative to the
/// automorphism file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<Value>,
    pub matrix: Vec<Vec<Num>>,
}

/// Loads an automorphism of `a`, checking that an embedded algebra (if
/// any) matches.
pub fn parse_automorphism(path: &Path, a: &Arc<Algebra>, opts: &LoadOptions) -> Result<Automorphism> {
    let file: AutomorphismFile = serde_json::from_str(&read(path)?).map_err(json_error)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    load_automorphism(&file, a, &base, opts)
}

pub fn load_automorphism(
    file: &AutomorphismFile,
    a: &Arc<Algebra>,
    base: &Path,
    opts: &LoadOptions,
) -> Result<Automorphism> {
    if let Some(spec) = &file.algebra {
        let own = match spec {
            Value::String(p) => parse_algebra(&base.join(p), opts)?,
            other => {
                let af: AlgebraFile = serde_json::from_value(other.clone()).map_err(json_error)?;
                load_algebra(&af, opts)?
            }
        };
        if !own.same_structure(a) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let m = matrix_of(a.field(), &file.matrix, a.dim(), &BTreeMap::new())
        .map_err(|e| Error::InvalidAutomorphism(e.to_string()))?;
    Automorphism::new(a, m)
}

pub fn automorphism_to_file(s: &Automorphism, algebra_ref: Option<&str>) -> AutomorphismFile {
    AutomorphismFile {
        algebra: algebra_ref.map(|p| Value::String(p.to_string())),
        matrix: s
            .matrix()
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(Num::of).collect())
            .collect(),
    }
}

/// Parameters for [`emit_examples`].
#[derive(Clone, Debug)]
pub struct ExampleParams {
    pub field: Field,
    pub q: String,
    pub n: usize,
    pub t: String,
}

impl Default for ExampleParams {
    fn default() -> Self {
        ExampleParams {
            field: Field::Rationals,
            q: "2".into(),
            n: 2,
            t: "2".into(),
        }
    }
}

/// An emitted file: relative name and contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmittedFile {
    pub name: String,
    pub contents: String,
}

/// Produces the files for a named fixture: the algebra and a module or
/// automorphism to go with it.
pub fn emit_examples(name: &str, p: &ExampleParams) -> Result<Vec<EmittedFile>> {
    let f = p.field;
    let file = |name: &str, contents: String| EmittedFile {
        name: name.to_string(),
        contents,
    };
    match name {
        "liu-schulz" => {
            let q = f.parse(&p.q)?;
            let a = fixtures::quantum_exterior(f, &q)?;
            let mut af = algebra_to_file(&a);
            af.fixture = Some(name.into());
            af.parameters.insert("q".into(), Num::of(&q));
            if let Some(quiver) = af.quiver.as_mut() {
                quiver.relations[2][1].coeff = Num::Text("q".into());
            }
            let module = ModuleFile {
                generators: Some(vec!["x+y".into()]),
                side: Some("left".into()),
                ..Default::default()
            };
            Ok(vec![
                file("lambda_q.json", to_pretty(&af)),
                file("lambda_q_module.json", to_pretty(&module)),
            ])
        }
        "truncated-poly" => {
            let a = fixtures::truncated_polynomial(f, p.n)?;
            let mut af = algebra_to_file(&a);
            af.fixture = Some(name.into());
            let s = ModuleRep::simple(&a, 0)?;
            let n = p.n;
            Ok(vec![
                file(&format!("kx{n}.json"), to_pretty(&af)),
                file(&format!("kx{n}_simple.json"), emit_module(&s)),
            ])
        }
        "a2" => {
            let a = fixtures::a2_hereditary(f)?;
            let mut af = algebra_to_file(&a);
            af.fixture = Some(name.into());
            Ok(vec![
                file("a2.json", to_pretty(&af)),
                file("a2_simple.json", emit_module(&ModuleRep::simple(&a, 0)?)),
            ])
        }
        "exterior" => {
            let a = fixtures::quantum_exterior(f, &f.one())?;
            let mut af = algebra_to_file(&a);
            af.fixture = Some(name.into());
            Ok(vec![
                file("exterior.json", to_pretty(&af)),
                file("exterior_simple.json", emit_module(&ModuleRep::simple(&a, 0)?)),
            ])
        }
        "kx2-twist" => {
            let a = fixtures::truncated_polynomial(f, 2)?;
            let t = f.parse(&p.t)?;
            let s = fixtures::kx2_twist(&a, &t)?;
            let mut af = algebra_to_file(&a);
            af.fixture = Some(name.into());
            Ok(vec![
                file("kx2.json", to_pretty(&af)),
                file(
                    &format!("kx2_sigma_{}.json", p.t.replace('/', "_").replace('-', "m")),
                    to_pretty(&automorphism_to_file(&s, Some("kx2.json"))),
                ),
            ])
        }
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// Writes emitted files into `dir`, returning their paths.
pub fn write_files(dir: &Path, files: &[EmittedFile]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?;
    files
        .iter()
        .map(|f| {
            let path = dir.join(&f.name);
            fs::write(&path, &f.contents).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            Ok(path)
        })
        .collect()
}
