use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use gcf_core::code::CodeFile;
use gcf_core::search::{export_records, non_checkable_witness_search, ExportFormat, WitnessOptions};
use gcf_core::{
    checkable_test, classify_code_checkable, dual_code, golay_search, min_distance, preset, random_checkable_search,
    reed_muller_experiment, run_suites, CodeSubspace, DistanceOptions, Error, Field, Group, GroupAlgebra, Matrix,
    Presentation, PrincipalityOptions, Result, Scope, SearchOptions, Side, Subspace, VerifyOptions,
};
use serde_json::{json, Value};

use crate::{AlgebraArgs, Cli, CodeCommand, Command, FormatArg, GroupSource, MatrixCommand, PrincipalityArgs, SideArg};

pub fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Group { group, group_out } => cmd_group(cli, group, group_out.as_deref()),
        Command::Code { command } => cmd_code(cli, command),
        Command::Matrix { command } => cmd_matrix(cli, command),
        Command::Check { algebra, code, element, principality } => {
            cmd_check(cli, algebra, code.as_deref(), element.as_deref(), principality)
        }
        Command::Classify { algebra } => cmd_classify(cli, algebra),
        Command::RmExperiment { p, m, principality } => cmd_rm(cli, *p, *m, principality),
        Command::Search { algebra, trials, profile, budget, out, format, timing } => {
            let opts = SearchOptions {
                trials: *trials,
                profile: *profile,
                seed: cli.seed,
                distance_budget: *budget,
                prune: true,
                record_timing: *timing,
            };
            cmd_search(cli, algebra, &opts, out.as_deref(), *format)
        }
        Command::Witness { algebra, trials, principality } => cmd_witness(cli, algebra, *trials, principality),
        Command::Golay { trials } => cmd_golay(cli, *trials),
        Command::Verify { scope, samples, golay_trials } => {
            let opts =
                VerifyOptions { seed: cli.seed, samples: *samples, golay_trials: *golay_trials, ..Default::default() };
            cmd_verify(cli, *scope, &opts)
        }
    }
}

/// Writes to stdout, ignoring write errors such as a closed pipe.
fn emit(cli: &Cli, text: &str, value: Value) {
    let mut out = std::io::stdout().lock();
    let _ = if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json values serialize"))
    } else {
        out.write_all(text.as_bytes())
    };
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Group and the identifier recorded in code file headers.
fn load_group(src: &GroupSource) -> Result<(Group, String)> {
    match (&src.preset, &src.presentation) {
        (Some(name), _) => Ok((preset(name)?, name.clone())),
        (None, Some(path)) => {
            let pres: Presentation = read(path)?.parse()?;
            let id = path.display().to_string();
            let g = Group::from_presentation(&id, &pres, gcf_core::group::DEFAULT_MAX_COSETS)?;
            Ok((g, id))
        }
        (None, None) => Err(Error::UnknownPreset("none given; use --preset or --presentation".into())),
    }
}

/// Group from the flags, falling back to the id in a code file header.
fn load_group_or(src: &GroupSource, id: &str) -> Result<(Group, String)> {
    if src.preset.is_some() || src.presentation.is_some() {
        return load_group(src);
    }
    if Path::new(id).is_file() {
        return load_group(&GroupSource { preset: None, presentation: Some(id.into()) });
    }
    Ok((preset(id)?, id.to_string()))
}

fn load_algebra(args: &AlgebraArgs) -> Result<(GroupAlgebra, String)> {
    let field: Field = args.field.parse()?;
    let (g, id) = load_group(&args.group)?;
    Ok((GroupAlgebra::new(g, &field), id))
}

fn principality_opts(args: &PrincipalityArgs, seed: u64) -> PrincipalityOptions {
    PrincipalityOptions {
        exhaustive_budget: args.exhaustive_budget,
        random_trials: args.random_trials,
        seed,
        ..Default::default()
    }
}

fn cmd_group(cli: &Cli, src: &GroupSource, out: Option<&Path>) -> Result<ExitCode> {
    let (g, id) = load_group(src)?;
    g.verify()?;
    let mut hist = std::collections::BTreeMap::new();
    for o in g.elem_orders() {
        *hist.entry(o).or_insert(0usize) += 1;
    }
    let gens: Vec<String> = g.generators().iter().map(|&x| g.label(x)).collect();
    let mut text =
        format!("group {id}\norder {}\ngenerators {}\nabelian {}\n", g.order(), gens.join(" "), g.is_abelian());
    let orders: Vec<String> = hist.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    let _ = writeln!(text, "element orders {}", orders.join(" "));
    if let Some(path) = out {
        write(path, &g.dump())?;
        let _ = writeln!(text, "table written to {}", path.display());
    }
    emit(
        cli,
        &text,
        json!({"group": id, "order": g.order(), "generators": gens, "abelian": g.is_abelian(), "element_orders": hist}),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_code(cli: &Cli, command: &CodeCommand) -> Result<ExitCode> {
    match command {
        CodeCommand::Principal { algebra, element, side, out } => {
            let (alg, id) = load_algebra(algebra)?;
            let v = alg.parse_element(element)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let code = CodeSubspace::new(alg.principal_ideal(&v, side)?);
            let file = CodeFile::from_code(&id, &code).to_text();
            let mut text = format!("{} side={}\n", code.params(), code.ideal().side().as_str());
            match out {
                Some(path) => {
                    write(path, &file)?;
                    let _ = writeln!(text, "code written to {}", path.display());
                }
                None => text.push_str(&file),
            }
            emit(cli, &text, json!({"n": code.n(), "k": code.k(), "side": code.ideal().side().as_str(), "code": file}));
        }
        CodeCommand::Params { code, budget } => {
            let file = CodeFile::from_text(&read(code)?)?;
            let (n, k, d) = params_of(&file, &DistanceOptions::with_budget(*budget))?;
            let d_text = d.map(|d| d.d.to_string()).unwrap_or_else(|| "-".into());
            emit(cli, &format!("[{n},{k},{d_text}]\n"), json!({"n": n, "k": k, "d": d.map(|d| d.d)}));
        }
        CodeCommand::Distance { code, budget, early_stop } => {
            let file = CodeFile::from_text(&read(code)?)?;
            let opts = DistanceOptions { budget: *budget, early_stop: *early_stop };
            let (_, k, d) = params_of(&file, &opts)?;
            let text = match d {
                _ if k == 0 => "d undefined: the code is zero\n".to_string(),
                Some(d) => format!("d = {} ({})\n", d.d, d.method.as_str()),
                None => unreachable!("nonzero codes have a distance"),
            };
            emit(cli, &text, json!({"k": k, "d": d.map(|d| d.d), "method": d.map(|d| d.method)}));
        }
        CodeCommand::Dual { group, code, out } => {
            let file = CodeFile::from_text(&read(code)?)?;
            let (g, id) = load_group_or(group, &file.group)?;
            let alg = GroupAlgebra::new(g, &file.field);
            let c = file.into_code(&alg)?;
            let dual = dual_code(&alg, &c)?;
            let text_file = CodeFile::from_code(&id, &dual).to_text();
            let mut text = format!("{} side={}\n", dual.params(), dual.ideal().side().as_str());
            match out {
                Some(path) => {
                    write(path, &text_file)?;
                    let _ = writeln!(text, "code written to {}", path.display());
                }
                None => text.push_str(&text_file),
            }
            emit(
                cli,
                &text,
                json!({"n": dual.n(), "k": dual.k(), "side": dual.ideal().side().as_str(), "code": text_file}),
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn params_of(file: &CodeFile, opts: &DistanceOptions) -> Result<(usize, usize, Option<gcf_core::Distance>)> {
    let space = Subspace::row_space(&file.generators);
    let d = min_distance(&space, opts)?;
    Ok((space.ambient_dim(), space.dim(), d))
}

fn read_matrix(path: &Path, field: Option<&str>) -> Result<Matrix> {
    let text = read(path)?;
    let field: Field = match field {
        Some(spec) => spec.parse()?,
        None => {
            let q = text
                .split_whitespace()
                .nth(2)
                .and_then(|t| t.parse::<u32>().ok())
                .ok_or_else(|| Error::MatrixFormat("header must be `rows cols q`".into()))?;
            Field::of_order(q)?
        }
    };
    Matrix::from_text(&field, &text)
}

fn cmd_matrix(cli: &Cli, command: &MatrixCommand) -> Result<ExitCode> {
    let (result, label, rank, out) = match command {
        MatrixCommand::Rref { matrix_in, matrix_out, field } => {
            let m = read_matrix(matrix_in, field.as_deref())?;
            let (r, rank) = m.rref();
            (r, "rref", rank, matrix_out)
        }
        MatrixCommand::Nullspace { matrix_in, matrix_out, field } => {
            let m = read_matrix(matrix_in, field.as_deref())?;
            let rank = m.rank();
            (m.nullspace().basis().clone(), "nullspace", rank, matrix_out)
        }
    };
    let body = result.to_text();
    let mut text = format!("rank {rank}\n");
    match out {
        Some(path) => {
            write(path, &body)?;
            let _ = writeln!(text, "{label} written to {}", path.display());
        }
        None => text.push_str(&body),
    }
    emit(cli, &text, json!({"rank": rank, label: body}));
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(
    cli: &Cli,
    algebra: &AlgebraArgs,
    code: Option<&Path>,
    element: Option<&str>,
    principality: &PrincipalityArgs,
) -> Result<ExitCode> {
    let (alg, _) = load_algebra(algebra)?;
    let ideal = match (code, element) {
        (Some(path), _) => CodeFile::from_text(&read(path)?)?.into_code(&alg)?.ideal().clone(),
        (None, Some(e)) => alg.principal_ideal(&alg.parse_element(e)?, Side::Right)?,
        (None, None) => unreachable!("clap requires --code or --element"),
    };
    let opts = principality_opts(principality, cli.seed);
    let v = checkable_test(&alg, &ideal, &opts)?;
    let status = match v.status {
        gcf_core::CheckabilityStatus::Checkable => "checkable",
        gcf_core::CheckabilityStatus::NotCheckable => "not-checkable",
        gcf_core::CheckabilityStatus::Unknown => "unknown",
    };
    let check = v.check_element.as_ref().map(|e| alg.format_element(e));
    let dual_witness = v.via.witness.as_ref().map(|e| alg.format_element(e));
    let mut text = format!("dim {}\nstatus {status}\nmethod {}\n", ideal.dim(), v.via.method.as_str());
    if let Some(c) = &check {
        let _ = writeln!(text, "check element {c}");
    }
    if let Some(h) = v.via.obstruction_subgroup {
        let _ = writeln!(text, "obstruction subgroup order {h}");
    }
    let _ = writeln!(text, "trials {}\nseed {}", v.via.trials_used, cli.seed);
    emit(
        cli,
        &text,
        json!({
            "dim": ideal.dim(),
            "status": status,
            "method": v.via.method.as_str(),
            "check_element": check,
            "dual_generator": dual_witness,
            "obstruction_subgroup": v.via.obstruction_subgroup,
            "trials": v.via.trials_used,
            "seed": cli.seed,
        }),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(cli: &Cli, algebra: &AlgebraArgs) -> Result<ExitCode> {
    let (alg, id) = load_algebra(algebra)?;
    let g = alg.group();
    let p = alg.field().characteristic() as usize;
    let verdict = classify_code_checkable(g, alg.field());
    let semisimple = g.order() % p != 0;
    let (nilpotent, cyclic) = g.is_p_nilpotent_cyclic_sylow(p);
    let text = format!(
        "code-checkable: {verdict}\ngroup {id} order {}\ncharacteristic {p}\nsemisimple {semisimple}\np-nilpotent {nilpotent}\ncyclic sylow {cyclic}\n",
        g.order()
    );
    emit(
        cli,
        &text,
        json!({
            "group": id,
            "field": alg.field().spec(),
            "code_checkable": verdict,
            "semisimple": semisimple,
            "p_nilpotent": nilpotent,
            "cyclic_sylow": cyclic,
        }),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_rm(cli: &Cli, p: u32, m: u32, principality: &PrincipalityArgs) -> Result<ExitCode> {
    let report = reed_muller_experiment(p, m, &principality_opts(principality, cli.seed))?;
    let mut text = format!("F{p}(C{p}^{m}), top power {}\n r  dim  principal      checkable\n", report.top);
    for row in &report.rows {
        let _ =
            writeln!(text, "{:>2} {:>4}  {:<13}  {:?}", row.r, row.dim, format!("{:?}", row.principal), row.checkable);
    }
    let _ = writeln!(text, "matches expectation {}", report.matches_expectation());
    emit(cli, &text, json!({"report": report, "matches_expectation": report.matches_expectation(), "seed": cli.seed}));
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(
    cli: &Cli,
    algebra: &AlgebraArgs,
    opts: &SearchOptions,
    out: Option<&Path>,
    format: Option<FormatArg>,
) -> Result<ExitCode> {
    let (alg, id) = load_algebra(algebra)?;
    let alg = GroupAlgebra::new(alg.group().clone().with_name(id), alg.field());
    let outcome = random_checkable_search(&alg, opts)?;
    let mut text = format!("{} trials, seed {}\nbest per dimension:\n", outcome.records.len(), opts.seed);
    for (k, r) in &outcome.best {
        let d = r.d.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(text, "  [{},{k},{d}] v = {}  check element {}", r.n, r.generator, r.check_element);
    }
    if let Some(path) = out {
        let fmt = match format {
            Some(FormatArg::Json) => ExportFormat::Json,
            Some(FormatArg::Csv) => ExportFormat::Csv,
            None if path.extension().is_some_and(|e| e == "json") => ExportFormat::Json,
            None => ExportFormat::Csv,
        };
        export_records(&outcome.records, fmt, path)?;
        let _ = writeln!(text, "records written to {}", path.display());
    }
    let best: Vec<_> = outcome.best.values().collect();
    emit(cli, &text, json!({"seed": opts.seed, "trials": outcome.records.len(), "best": best}));
    Ok(ExitCode::SUCCESS)
}

fn cmd_witness(cli: &Cli, algebra: &AlgebraArgs, trials: u64, principality: &PrincipalityArgs) -> Result<ExitCode> {
    let (alg, _) = load_algebra(algebra)?;
    let opts = WitnessOptions { trials, seed: cli.seed, principality: principality_opts(principality, cli.seed) };
    match non_checkable_witness_search(&alg, &opts)? {
        Some(w) => {
            let text = format!(
                "witness {} (dim {})\nstatus not-checkable\nmethod {}\nseed {}\n",
                w.origin,
                w.ideal.dim(),
                w.verdict.via.method.as_str(),
                cli.seed
            );
            let basis: Vec<String> =
                w.ideal.space().vectors().map(|r| gcf_core::algebra::format_coeffs(alg.group(), r)).collect();
            emit(
                cli,
                &text,
                json!({
                    "found": true,
                    "origin": w.origin,
                    "dim": w.ideal.dim(),
                    "method": w.verdict.via.method.as_str(),
                    "basis": basis,
                    "seed": cli.seed,
                }),
            );
        }
        None => emit(
            cli,
            &format!("no exact non-checkable witness found in {trials} trials (seed {})\n", cli.seed),
            json!({"found": false, "seed": cli.seed}),
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_golay(cli: &Cli, trials: u64) -> Result<ExitCode> {
    match golay_search(cli.seed, trials)? {
        Some(hit) => {
            let text = format!(
                "found after {} trials (seed {})\nv = {}\n[24,12,{}] self-dual {}\nA_8 = {} A_12 = {} A_16 = {}\n",
                hit.trials_used,
                cli.seed,
                hit.record.generator,
                hit.record.d.unwrap_or(0),
                hit.self_dual,
                hit.weight_distribution[8],
                hit.weight_distribution[12],
                hit.weight_distribution[16]
            );
            let dist: Vec<String> = hit.weight_distribution.iter().map(u128::to_string).collect();
            emit(
                cli,
                &text,
                json!({
                    "found": true,
                    "trials": hit.trials_used,
                    "seed": cli.seed,
                    "record": hit.record,
                    "self_dual": hit.self_dual,
                    "weight_distribution": dist,
                }),
            );
        }
        None => emit(
            cli,
            &format!("no self-dual [24,12,8] ideal in {trials} trials (seed {})\n", cli.seed),
            json!({"found": false, "trials": trials, "seed": cli.seed}),
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, scope: Scope, opts: &VerifyOptions) -> Result<ExitCode> {
    let report = run_suites(scope, opts);
    let mut text = String::new();
    for c in &report.claims {
        let _ = writeln!(text, "{c}");
    }
    let overall = if report.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(text, "overall {overall} (seed {})", opts.seed);
    emit(cli, &text, json!({"claims": report.claims, "passed": report.passed(), "seed": opts.seed}));
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
