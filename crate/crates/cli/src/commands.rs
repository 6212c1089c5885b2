use std::fs;
use std::path::Path;

use hadamard_schemes::actions::{
    aut_group, iso_group, k_orbits, lower_bound, similar_check, sylvester_bound, OrbitOptions,
};
use hadamard_schemes::builder::{build_sh, fission_check, lemma_maps_verify, BuiltScheme};
use hadamard_schemes::hadamard::{aut_x0, equivalence_check, sylvester, write_hadamard, HadamardMatrix};
use hadamard_schemes::scheme::{write_scheme, AssociationScheme};
use hadamard_schemes::tables::{self, TableRow, AUT_X0_ORDER_8};
use hadamard_schemes::Error;
use serde_json::{json, Value};

use crate::inputs::{builtin_scheme, load_hadamard, load_scheme, InputHash};
use crate::{
    BoundCommand, BuildCommand, CliError, Command, GenCommand, HadamardCommand, Outcome, ReproduceCommand,
    SchemeCommand,
};

#[derive(Default)]
pub struct Context {
    pub inputs: Vec<InputHash>,
}

impl Context {
    fn scheme(&mut self, name: &str) -> Result<AssociationScheme, CliError> {
        let (s, h) = load_scheme(name)?;
        self.inputs.push(h);
        Ok(s)
    }

    fn hadamard(&mut self, name: &str) -> Result<HadamardMatrix, CliError> {
        let (m, h) = load_hadamard(name)?;
        self.inputs.push(h);
        Ok(m)
    }
}

/// Axiom failures are results of a verify command, anything else is bad input.
fn verdict<T>(loaded: Result<T, CliError>, what: &str) -> Result<Result<T, Outcome>, CliError> {
    match loaded {
        Ok(v) => Ok(Ok(v)),
        Err(CliError::Invalid(msg)) => {
            Ok(Err(Outcome {
                outputs: json!({ "valid": false, "kind": what, "reason": msg }),
                passed: false,
            }))
        }
        Err(e) => Err(e),
    }
}

fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Runs a command; `None` means the command printed its own output.
pub fn run(command: &Command, ctx: &mut Context) -> Result<Option<Outcome>, CliError> {
    Ok(Some(match command {
        Command::Scheme(c) => match c {
            SchemeCommand::Verify { file } => match verdict(ctx.scheme(file), "scheme")? {
                Ok(s) => Outcome::ok(scheme_summary(&s)),
                Err(o) => o,
            },
            SchemeCommand::Aut { file } => {
                let s = ctx.scheme(file)?;
                Outcome::ok(json!({ "aut_order": aut_group(&s)?.order() }))
            }
            SchemeCommand::Iso { file } => {
                let s = ctx.scheme(file)?;
                Outcome::ok(json!({ "iso_order": iso_group(&s)?.order() }))
            }
            SchemeCommand::Show { name, output } => {
                let s = builtin_scheme(name).ok_or_else(|| CliError::Input(format!("no builtin scheme {name}")))?;
                let text = write_scheme(&s);
                match output {
                    Some(path) => write_output(path, &text)?,
                    None => print!("{text}"),
                }
                return Ok(None);
            }
        },
        Command::Hadamard(c) => match c {
            HadamardCommand::Gen(GenCommand::Sylvester { k, output }) => {
                if *k > 12 {
                    return Err(CliError::Input(format!("2^{k} is too large")));
                }
                let text = write_hadamard(&sylvester(*k));
                match output {
                    Some(path) => write_output(path, &text)?,
                    None => print!("{text}"),
                }
                return Ok(None);
            }
            HadamardCommand::Verify { file } => match verdict(ctx.hadamard(file), "hadamard")? {
                Ok(h) => Outcome::ok(json!({ "valid": true, "order": h.order(), "normalized": h.is_normalized() })),
                Err(o) => o,
            },
            HadamardCommand::Aut { file, fix } => {
                let h = ctx.hadamard(file)?;
                if *fix >= h.order() {
                    return Err(CliError::Input(format!("point {fix} is outside 0..{}", h.order())));
                }
                Outcome::ok(json!({ "fix": fix, "aut_x0_order": aut_x0(&h, *fix).order() }))
            }
            HadamardCommand::Equiv { f1, f2 } => {
                let (a, b) = (ctx.hadamard(f1)?, ctx.hadamard(f2)?);
                Outcome::ok(json!({ "equivalent": equivalence_check(&a, &b)? }))
            }
        },
        Command::Build(BuildCommand::Sh { scheme, hadamard, output }) => {
            let base = ctx.scheme(scheme)?;
            let h = ctx.hadamard(hadamard)?;
            build(&base, &h, output.as_deref())?
        }
        Command::Orbits(args) => {
            let s = ctx.scheme(&args.scheme)?;
            let h = ctx.hadamard(&args.hadamard)?;
            let options = OrbitOptions {
                mode: args.mode.map(Into::into),
                threads: args.threads,
                seed: args.seed,
            };
            let p = k_orbits(&s, &h, &options)?;
            Outcome::ok(serde_json::to_value(p.report(&args.scheme)).expect("report"))
        }
        Command::Similar { scheme, h1, h2 } => {
            let s = ctx.scheme(scheme)?;
            let (a, b) = (ctx.hadamard(h1)?, ctx.hadamard(h2)?);
            Outcome::ok(json!({ "similar": similar_check(&a, &b, &s)? }))
        }
        Command::Bound(args) => match (&args.sylvester, &args.scheme, &args.hadamard) {
            (Some(BoundCommand::Sylvester { n }), _, _) => {
                if !(1..=6).contains(n) {
                    return Err(CliError::Input("the exponent must lie in 1..=6".into()));
                }
                Outcome::ok(json!({ "exponent": n, "bound": sylvester_bound(*n) }))
            }
            (None, Some(scheme), Some(hadamard)) => {
                let s = ctx.scheme(scheme)?;
                let h = ctx.hadamard(hadamard)?;
                if s.order() != h.order() {
                    return Err(Error::DimensionMismatch { scheme: s.order(), matrix: h.order() }.into());
                }
                let aut = aut_group(&s)?.order() as u64;
                let iso = iso_group(&s)?.order() as u64;
                let ax0 = aut_x0(&h, 0).order() as u64;
                Outcome::ok(json!({
                    "aut_order": aut,
                    "iso_order": iso,
                    "aut_x0_order": ax0,
                    "bound": lower_bound(aut, iso, ax0, s.order() as u64),
                }))
            }
            _ => return Err(CliError::Input("bound needs --scheme and --hadamard, or `sylvester N`".into())),
        },
        Command::Reproduce(ReproduceCommand::Table2) => table2()?,
        Command::Reproduce(ReproduceCommand::Table3 { rows, data, threads, seed }) => {
            table3(ctx, rows, data, *threads, *seed)?
        }
    }))
}

fn scheme_summary(s: &AssociationScheme) -> Value {
    let r = s.rank();
    let mut nonzero = 0;
    let mut total = 0u64;
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let v = s.c(a, b, c);
                nonzero += usize::from(v > 0);
                total += v as u64;
            }
        }
    }
    json!({
        "valid": true,
        "order": s.order(),
        "rank": r,
        "valencies": s.valencies(),
        "transpose": (0..r).map(|i| s.star(i)).collect::<Vec<_>>(),
        "thin": s.is_thin(),
        "thin_residue": s.thin_residue(),
        "nonzero_intersection_numbers": nonzero,
        "intersection_number_sum": total,
    })
}

fn build(base: &AssociationScheme, h: &HadamardMatrix, output: Option<&Path>) -> Result<Outcome, CliError> {
    let built: BuiltScheme = match build_sh(base, h) {
        Ok(b) => b,
        Err(e @ Error::DimensionMismatch { .. }) => return Err(e.into()),
        Err(e) => {
            return Ok(Outcome {
                outputs: json!({ "valid": false, "reason": e.to_string() }),
                passed: false,
            })
        }
    };
    let fission = fission_check(&built);
    let lemma = lemma_maps_verify(base, h)?;
    if let Some(path) = output {
        write_output(path, &built.to_text())?;
    }
    Ok(Outcome {
        passed: fission && lemma.all_hold(),
        outputs: json!({
            "valid": true,
            "order": built.scheme.order(),
            "rank": built.scheme.rank(),
            "valencies": built.scheme.valencies(),
            "labels": built.label_line().trim_start_matches("# labels: "),
            "fission": fission,
            "maps": {
                "swap_sides": lemma.swap_sides,
                "row_negation": lemma.row_negation,
                "col_negation": lemma.col_negation,
                "negate_via_side0": lemma.negate_via_side0,
                "negate_via_side1": lemma.negate_via_side1,
            },
        }),
    })
}

fn table2() -> Result<Outcome, CliError> {
    let h = tables::reference_matrix(4).expect("order 4");
    let ax0 = aut_x0(&h, 0).order() as u64;
    let mut rows = Vec::new();
    let mut passed = true;
    for (i, published) in tables::ORDER_4.iter().enumerate() {
        let s = tables::row_scheme(published.name).expect("order-4 schemes are builtin");
        let p = k_orbits(&s, &h, &OrbitOptions::default())?;
        let row = computed_row(published, &s, ax0, p.orbit_sizes_desc(), p.k_orbit_count(), p.similarity_class_count())?;
        let expected_sizes: Vec<u64> = {
            let mut v: Vec<u64> = tables::ORDER_4_ORBITS[i].iter().map(|o| o.0).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        passed &= row["matches"] == json!(true) && p.orbit_sizes_desc() == expected_sizes;
        rows.push(row);
    }
    Ok(Outcome {
        outputs: json!({ "aut_x0_order": ax0, "rows": rows }),
        passed,
    })
}

fn computed_row(
    published: &TableRow,
    s: &AssociationScheme,
    ax0: u64,
    orbit_sizes: Vec<u64>,
    k_orbits: usize,
    classes: usize,
) -> Result<Value, CliError> {
    let aut = aut_group(s)?.order() as u64;
    let iso = iso_group(s)?.order() as u64;
    let bound = lower_bound(aut, iso, ax0, s.order() as u64);
    let matches = (aut, iso, classes as u64, bound.ceiling_u64()) ==
        (published.aut, published.iso, published.classes, Some(published.bound));
    Ok(json!({
        "name": published.name,
        "computed": true,
        "aut_order": aut,
        "iso_order": iso,
        "orbit_sizes": orbit_sizes,
        "k_orbits": k_orbits,
        "similarity_classes": classes,
        "bound": bound,
        "published": published_json(published),
        "matches": matches,
    }))
}

fn published_json(r: &TableRow) -> Value {
    json!({ "aut_order": r.aut, "iso_order": r.iso, "similarity_classes": r.classes, "bound": r.bound })
}

fn table3(ctx: &mut Context, rows: &[String], data: &Path, threads: usize, seed: u64) -> Result<Outcome, CliError> {
    let selected: Vec<&TableRow> = if rows.is_empty() {
        tables::ORDER_8.iter().collect()
    } else {
        rows.iter()
            .map(|name| {
                tables::ORDER_8
                    .iter()
                    .find(|r| r.name == name.as_str())
                    .ok_or_else(|| CliError::Input(format!("no order-8 row {name}")))
            })
            .collect::<Result<_, _>>()?
    };
    let h = tables::reference_matrix(8).expect("order 8");
    let mut out = Vec::new();
    let mut passed = true;
    for published in selected {
        let file = data.join(format!("{}.txt", published.name));
        let scheme = match tables::row_scheme(published.name) {
            Some(s) => Some(s),
            None if file.exists() => Some(ctx.scheme(file.to_str().ok_or_else(|| CliError::Input("path".into()))?)?),
            None => None,
        };
        let row = match scheme {
            Some(s) => {
                let options = OrbitOptions { threads, seed, ..OrbitOptions::default() };
                let p = k_orbits(&s, &h, &options)?;
                computed_row(published, &s, AUT_X0_ORDER_8, p.orbit_sizes_desc(), p.k_orbit_count(), p.similarity_class_count())?
            }
            None => {
                let bound = lower_bound(published.aut, published.iso, AUT_X0_ORDER_8, 8);
                json!({
                    "name": published.name,
                    "computed": false,
                    "bound": bound,
                    "published": published_json(published),
                    "matches": bound.ceiling_u64() == Some(published.bound),
                })
            }
        };
        passed &= row["matches"] == json!(true);
        out.push(row);
    }
    Ok(Outcome {
        outputs: json!({ "aut_x0_order": AUT_X0_ORDER_8, "rows": out }),
        passed,
    })
}
