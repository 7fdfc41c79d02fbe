use std::fmt::Write as _;
use std::sync::Arc;

use fdalg_core::bimodule::{stable_morita_check_seeded, twist_recognize};
use fdalg_core::homological::{complexity_estimate, detect_period, ext_dim, resolve, stable_hom_dim, MIN_COMPLEXITY_HORIZON};
use fdalg_core::io::{self, ExampleParams};
use fdalg_core::module::{is_isomorphic_seeded, strip_projectives};
use fdalg_core::orbit::{degeneration_obstruction, orbit_stats, regular_degeneration_check};
use fdalg_core::{bimodule_syzygy, is_inner, out_order, Algebra, Error, Field, Matrix, ModuleRep, PeriodOutcome, Result};
use serde_json::{json, Value};

use crate::context::Context;
use crate::report::Output;
use crate::{AlgebraCmd, BimoduleCmd, Command, ExamplesArgs, ModuleArg, ModuleCmd, OrbitCmd};

pub fn run(ctx: &mut Context, cmd: Command) -> Result<Output> {
    match cmd {
        Command::Algebra(c) => algebra(ctx, c),
        Command::Module(c) => module(ctx, c),
        Command::Orbit(c) => orbit(ctx, c),
        Command::Bimodule(c) => bimodule(ctx, c),
        Command::Examples(args) => examples(ctx, args),
    }
}

fn output(result: Value, text: String) -> Result<Output> {
    Ok(Output {
        result,
        text,
        csv: None,
    })
}

fn module_of(ctx: &mut Context, a: &Arc<Algebra>, m: &ModuleArg) -> Result<ModuleRep> {
    let side = io::parse_side(&m.side)?;
    match (&m.module, m.generators.is_empty()) {
        (Some(_), false) => Err(Error::InvalidInput("give either --module or --gen, not both".into())),
        (Some(spec), true) => ctx.module(a, spec),
        (None, false) => io::generated_module(a, &m.generators, side),
        (None, true) => Err(Error::InvalidInput("a module is needed: --module SPEC or --gen ELEMENT".into())),
    }
}

fn matrix_json(m: &Matrix) -> Value {
    json!(m
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn elements(a: &Algebra, vs: &[Vec<fdalg_core::Scalar>]) -> Vec<String> {
    vs.iter().map(|v| a.format_element(v)).collect()
}

fn algebra(ctx: &mut Context, cmd: AlgebraCmd) -> Result<Output> {
    match cmd {
        AlgebraCmd::Check(arg) => {
            let a = ctx.algebra(&arg.path)?;
            let rad = a.radical();
            let result = json!({
                "field": a.field().to_string(),
                "dim": a.dim(),
                "labels": a.labels(),
                "vertices": a.num_vertices(),
                "basic": true,
                "radical_dim": rad.dim(),
                "loewy_length": rad.loewy_length(),
                "center_dim": a.center().dim(),
                "commutative": a.is_commutative(),
                "self_injective": a.is_self_injective(),
            });
            let text = format!(
                "field: {}\ndim: {}\nbasis: {}\nvertices: {}\nbasic: true\nradical dim: {}\nLoewy length: {}\ncenter dim: {}\ncommutative: {}\nself-injective: {}\n",
                a.field(),
                a.dim(),
                a.labels().join(", "),
                a.num_vertices(),
                rad.dim(),
                rad.loewy_length(),
                a.center().dim(),
                a.is_commutative(),
                a.is_self_injective()
            );
            output(result, text)
        }
        AlgebraCmd::Center(arg) => {
            let a = ctx.algebra(&arg.path)?;
            let basis = elements(&a, a.center().basis());
            let text = format!("center dim: {}\nbasis: {}\n", basis.len(), basis.join(", "));
            output(json!({"dim": basis.len(), "basis": basis}), text)
        }
        AlgebraCmd::Radical(arg) => {
            let a = ctx.algebra(&arg.path)?;
            let rad = a.radical();
            let basis = elements(&a, rad.basis.basis());
            let layers: Vec<usize> = rad.powers.iter().map(|p| p.dim()).collect();
            let text = format!(
                "radical dim: {}\nbasis: {}\ndims of rad^1, rad^2, ...: {:?}\n",
                basis.len(),
                basis.join(", "),
                layers
            );
            output(json!({"dim": basis.len(), "basis": basis, "power_dims": layers}), text)
        }
    }
}

fn module(ctx: &mut Context, cmd: ModuleCmd) -> Result<Output> {
    match cmd {
        ModuleCmd::Resolve { algebra, module } => {
            let a = ctx.algebra(&algebra.path)?;
            let m = module_of(ctx, &a, &module)?;
            let r = resolve(&m, ctx.horizon);
            let dims = r.dims();
            let syz = r.syzygy_dims();
            let mults: Vec<Vec<usize>> = r.steps.iter().map(|s| s.multiplicities.clone()).collect();
            let complexity = if ctx.horizon >= MIN_COMPLEXITY_HORIZON {
                Some(complexity_estimate(&r)?)
            } else {
                None
            };
            let mut text = format!("module dim: {}\n{:>4}  {:>8}  {:>8}  multiplicities\n", m.dim(), "t", "dim P^t", "dim Ω^t+1");
            let mut csv = String::from("t,projective_dim,syzygy_dim\n");
            for t in 0..dims.len() {
                writeln!(text, "{t:>4}  {:>8}  {:>8}  {:?}", dims[t], syz[t], mults[t]).ok();
                writeln!(csv, "{t},{},{}", dims[t], syz[t]).ok();
            }
            match &complexity {
                Some(c) => writeln!(text, "complexity: {:?}", c.verdict).ok(),
                None => writeln!(text, "complexity: horizon below {MIN_COMPLEXITY_HORIZON}").ok(),
            };
            let result = json!({
                "module_dim": m.dim(),
                "horizon": ctx.horizon,
                "projective_dims": dims,
                "syzygy_dims": syz,
                "multiplicities": mults,
                "complexity": complexity.map(|c| c.verdict),
            });
            Ok(Output {
                result,
                text,
                csv: Some(csv),
            })
        }
        ModuleCmd::Period { algebra, module } => {
            let a = ctx.algebra(&algebra.path)?;
            let m = module_of(ctx, &a, &module)?;
            let rep = detect_period(&m, ctx.horizon, ctx.seed)?;
            let (result, text) = match &rep.outcome {
                PeriodOutcome::Periodic { period, i, j, .. } => (
                    json!({"outcome": "Periodic", "period": period, "i": i, "j": j, "syzygy_dims": rep.syzygy_dims}),
                    format!("periodic: period {period} (Ω^{j} ≅ Ω^{i})\nsyzygy dims: {:?}\n", rep.syzygy_dims),
                ),
                PeriodOutcome::Projective => (
                    json!({"outcome": "Projective", "syzygy_dims": rep.syzygy_dims}),
                    format!("projective after stripping\nsyzygy dims: {:?}\n", rep.syzygy_dims),
                ),
                PeriodOutcome::HorizonExhausted { distinct } => (
                    json!({"outcome": "HorizonExhausted", "distinct": distinct, "horizon": ctx.horizon, "syzygy_dims": rep.syzygy_dims}),
                    format!(
                        "horizon exhausted: Ω^0..Ω^{} are {distinct} pairwise non-isomorphic modules\nsyzygy dims: {:?}\n",
                        ctx.horizon, rep.syzygy_dims
                    ),
                ),
            };
            output(result, text)
        }
        ModuleCmd::Iso { algebra, module, other } => {
            let a = ctx.algebra(&algebra.path)?;
            let m = module_of(ctx, &a, &module)?;
            let n = ctx.module(&a, &other)?;
            let iso = is_isomorphic_seeded(&m, &n, ctx.seed)?;
            let text = match &iso {
                Some(_) => "isomorphic: true\n".to_string(),
                None => "isomorphic: false\n".to_string(),
            };
            output(
                json!({"isomorphic": iso.is_some(), "witness": iso.map(|f| matrix_json(&f.matrix))}),
                text,
            )
        }
        ModuleCmd::Ext {
            algebra,
            module,
            other,
            degree,
        } => {
            if degree == 0 {
                return Err(Error::InvalidInput("degree must be at least 1".into()));
            }
            let a = ctx.algebra(&algebra.path)?;
            let m = module_of(ctx, &a, &module)?;
            let n = ctx.module(&a, &other)?;
            let e = ext_dim(&m, &n, degree)?;
            let stable = if m.algebra().is_self_injective() {
                Some(stable_hom_dim(&m, &n, degree)?)
            } else {
                None
            };
            let mut text = format!("dim Ext^{degree}(M, N) = {e}\n");
            if let Some(s) = stable {
                writeln!(text, "dim Hom_stable(Ω^{degree} M, N) = {s}").ok();
            }
            output(json!({"degree": degree, "ext_dim": e, "stable_hom_dim": stable}), text)
        }
        ModuleCmd::Strip { algebra, module } => {
            let a = ctx.algebra(&algebra.path)?;
            let m = module_of(ctx, &a, &module)?;
            let s = strip_projectives(&m)?;
            let text = format!(
                "module dim: {}\ncore dim: {}\nprojective summands per vertex: {:?}\n",
                m.dim(),
                s.core.dim(),
                s.multiplicities
            );
            output(
                json!({"module_dim": m.dim(), "core_dim": s.core.dim(), "projective_multiplicities": s.multiplicities}),
                text,
            )
        }
    }
}

fn orbit(ctx: &mut Context, cmd: OrbitCmd) -> Result<Output> {
    match cmd {
        OrbitCmd::Stats { algebra, module } => {
            let a = ctx.algebra(&algebra.path)?;
            let m = module_of(ctx, &a, &module)?;
            let st = orbit_stats(&m)?;
            let text = format!(
                "d: {}\nend dim: {}\norbit dim: {}\ncertificate: {:?}\n",
                st.d, st.end_dim, st.orbit_dim, st.certificate
            );
            output(serde_json::to_value(&st).expect("serializable"), text)
        }
        OrbitCmd::Degeneration { algebra, module, other } => {
            let a = ctx.algebra(&algebra.path)?;
            let m = module_of(ctx, &a, &module)?;
            let n = ctx.module(&a, &other)?;
            let v = degeneration_obstruction(&m, &n, &[])?;
            let text = match &v.obstruction {
                Some(o) => format!(
                    "obstruction: dim Hom({0}, N) = {1} < dim Hom({0}, M) = {2}; M does not degenerate to N\n",
                    o.label, o.hom_into_n, o.hom_into_m
                ),
                None => format!("no obstruction found ({} test modules passed)\n", v.passed_tests),
            };
            output(serde_json::to_value(&v).expect("serializable"), text)
        }
        OrbitCmd::RegularDegeneration { algebra, candidate } => {
            let a = ctx.algebra(&algebra.path)?;
            let b = ctx.bimodule(&a, &candidate)?;
            let rep = regular_degeneration_check(&a, &b, ctx.seed)?;
            let mut text = String::new();
            for s in &rep.trace {
                writeln!(
                    text,
                    "step {} [{}] {}: {}",
                    s.step,
                    if s.passed { "ok" } else { "failed" },
                    s.name,
                    s.detail
                )
                .ok();
            }
            writeln!(text, "conclusion: {:?}", rep.conclusion).ok();
            output(serde_json::to_value(&rep).expect("serializable"), text)
        }
    }
}

fn bimodule(ctx: &mut Context, cmd: BimoduleCmd) -> Result<Output> {
    match cmd {
        BimoduleCmd::Syzygy {
            algebra,
            n,
            recognize_twist,
        } => {
            let a = ctx.algebra(&algebra.path)?;
            let omega = bimodule_syzygy(&a, n)?;
            let mut text = format!("dim Ω^{n}(A) as a bimodule: {}\nleft-right projective: true\n", omega.dim());
            let twist = if recognize_twist {
                let t = twist_recognize(&omega)?;
                match &t {
                    Some(s) => writeln!(text, "σ: {}", s.describe().join(", ")).ok(),
                    None => writeln!(text, "not a twisted bimodule").ok(),
                };
                Some(t.map(|s| s.describe()))
            } else {
                None
            };
            output(
                json!({"n": n, "dim": omega.dim(), "left_right_projective": true, "twist": twist}),
                text,
            )
        }
        BimoduleCmd::TwistOrder {
            algebra,
            automorphism,
            bound,
        } => {
            let a = ctx.algebra(&algebra.path)?;
            let s = ctx.automorphism(&a, &automorphism)?;
            let inner = is_inner(&s)?;
            let order = out_order(&s, bound)?;
            let text = format!(
                "σ: {}\ninner: {inner}\norder in Out: {}\n",
                s.describe().join(", "),
                order.map_or(format!("none up to {bound}"), |m| m.to_string())
            );
            output(
                json!({"automorphism": s.describe(), "inner": inner, "out_order": order, "bound": bound}),
                text,
            )
        }
        BimoduleCmd::StableCheck { algebra, x, y } => {
            let a = ctx.algebra(&algebra.path)?;
            let bx = ctx.bimodule(&a, &x)?;
            let by = ctx.bimodule(&a, &y)?;
            let rep = stable_morita_check_seeded(&bx, &by, ctx.seed)?;
            let mut text = String::new();
            for c in &rep.clauses {
                writeln!(text, "[{}] {}: {}", if c.passed { "ok" } else { "failed" }, c.name, c.detail).ok();
            }
            writeln!(text, "stable equivalence of Morita type: {}", rep.passed()).ok();
            let mut result = serde_json::to_value(&rep).expect("serializable");
            result["passed"] = json!(rep.passed());
            output(result, text)
        }
    }
}

fn examples(ctx: &mut Context, args: ExamplesArgs) -> Result<Output> {
    let params = ExampleParams {
        field: ctx.field().unwrap_or(Field::Rationals),
        q: ctx.load_options().parameters.get("q").cloned().unwrap_or_else(|| "2".into()),
        n: args.n,
        t: args.t,
    };
    let files = io::emit_examples(&args.name, &params)?;
    let paths = io::write_files(&args.out, &files)?;
    let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
    let text = names.iter().map(|n| format!("wrote {n}\n")).collect();
    output(json!({"fixture": args.name, "files": names}), text)
}
