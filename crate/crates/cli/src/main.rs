use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use minw::algebra::{build_algebra, AlgebraData, AlgebraSpec};
use minw::embed::{
    all_cases, atlas_markdown, case_verdicts, catalog, collapsing_levels, conformal_levels, criterion_report, instantiate, tensor_square, CaseId,
    EmbeddingCase, Verdict,
};
use minw::lattice::{is_singular, nth_product, r3_bracket_identities, r3_generators, singular_vector, LambdaPolynomial, LatticeState};
use minw::rational::{fmt_q, parse_q, Q};
use minw::reps::{Reps, DEFAULT_CAP};
use minw::wmin::{build_ope, verify_phi, SL4_TABLE};
use serde_json::{json, Value};

/// JSON Schema of one verdict, as printed by `criterion` and `atlas` in JSON.
const VERDICT_SCHEMA: &str = include_str!("../schema/verdict.schema.json");

#[derive(Parser)]
#[command(name = "minw", version, about = "Conformal embeddings into minimal W-algebras and the lattice realization of W_{-8/3}(sl4)")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Number of instances per parametric family.
    #[arg(long, default_value_t = 6, global = true, value_parser = clap::value_parser!(u16).range(1..=40))]
    grid: u16,
    /// Print only the verdict line.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    #[value(alias = "markdown")]
    Md,
}

#[derive(Subcommand)]
enum Cmd {
    /// The families of the classification tables.
    Catalog,
    /// Collapsing and conformal levels of one case, or of every case on the grid.
    Levels { case: Option<String> },
    /// Verdict of the semisimplicity criterion for a case at level k.
    Criterion {
        case: String,
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Verdicts at every collapsing and conformal level of every case on the grid.
    Atlas,
    /// Decompose V(l) x V(r) for a simple Lie algebra, weights like `3w1` or `w1+w3`.
    Tensor {
        alg: String,
        left: String,
        right: String,
        /// Bound on the number of dominant weights in a character.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// The lambda-bracket identities of the lattice realization.
    VerifyR3,
    /// The sl(4) table in formal k against the fixture, and the map into the lattice realization.
    #[command(alias = "verify-phi")]
    VerifySl4Ope,
    /// The lambda-bracket table of W^k(sl(n), theta), formal in k unless a level is given.
    Ope {
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        level: Option<String>,
    },
    /// Print the JSON Schema of a verdict.
    Schema,
    /// Build v_{l,j} and check that it is singular.
    Singular {
        #[arg(allow_hyphen_values = true)]
        l: i64,
        j: u32,
    },
}

/// Pass/fail of a verification command; usage errors travel as `Err`.
struct Outcome {
    pass: bool,
    out: String,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome { pass: true, out }
    }
}

fn case(s: &str) -> Result<EmbeddingCase> {
    let id = CaseId::parse(s)?;
    Ok(instantiate(&id)?)
}

fn rational(s: &str) -> Result<Q> {
    Ok(parse_q(s)?)
}

fn levels_text(ks: &[Q]) -> String {
    if ks.is_empty() {
        "none".into()
    } else {
        ks.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
    }
}

fn json_out(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn verdict_line(v: &Verdict) -> String {
    let ev: Vec<String> = v.evidence.iter().map(|e| format!("h[{}] = {}{}", e.mu, e.h, if e.integral { " (integral)" } else { "" })).collect();
    let mut s = format!("{} at k = {}: {}", v.case, v.k, v.status.as_str());
    if let (Some(cw), Some(cs)) = (&v.c_w, &v.c_sug) {
        let _ = write!(s, "; c_w = {cw}, c_sug = {cs}");
    }
    if !ev.is_empty() {
        let _ = write!(s, "; {}", ev.join(", "));
    }
    if !v.notes.is_empty() {
        let _ = write!(s, " ({})", v.notes.join("; "));
    }
    s
}

fn cmd_catalog(f: Format) -> Outcome {
    let rows = catalog();
    let out = match f {
        Format::Json => json_out(&serde_json::to_value(&rows).expect("rows serialize")),
        Format::Md => {
            let mut s = String::from("| family | table | g | g^natural | g_{1/2} | h^vee | p(k) |\n|---|---|---|---|---|---|---|\n");
            for r in &rows {
                let _ = writeln!(s, "| {} | {} | {} | {} | {} | {} | {} |", r.family, r.table, r.g, r.gnat, r.g_half, r.h_dual, r.p);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(s, "{:<15} table {}  g = {:<20} g^natural = {:<18} g_1/2 = {:<26} h^vee = {:<10} p(k) = {}", r.family, r.table, r.g, r.gnat, r.g_half, r.h_dual, r.p);
            }
            s
        }
    };
    Outcome::ok(out)
}

fn cmd_levels(f: Format, grid: usize, which: Option<&str>) -> Result<Outcome> {
    let cases: Vec<EmbeddingCase> = match which {
        Some(c) => vec![case(c)?],
        None => all_cases(grid).iter().map(instantiate).collect::<Result<_, _>>()?,
    };
    let rows: Vec<Value> = cases
        .iter()
        .map(|c| {
            json!({
                "case": c.name(),
                "h_dual": fmt_q(&c.h_dual),
                "p": c.p_display(),
                "collapsing": collapsing_levels(c).iter().map(fmt_q).collect::<Vec<_>>(),
                "conformal": conformal_levels(c).iter().map(fmt_q).collect::<Vec<_>>(),
                "excluded": c.excluded,
            })
        })
        .collect();
    let out = match f {
        Format::Json => json_out(&Value::Array(rows)),
        Format::Md => {
            let mut s = String::from("| case | h^vee | p(k) | collapsing | conformal |\n|---|---|---|---|---|\n");
            for c in &cases {
                let _ = writeln!(s, "| {} | {} | {} | {} | {} |", c.name(), fmt_q(&c.h_dual), c.p_display(), levels_text(&collapsing_levels(c)), levels_text(&conformal_levels(c)));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &cases {
                let _ = writeln!(s, "{}: h^vee = {}, p(k) = {}, collapsing: {}, conformal: {}", c.name(), fmt_q(&c.h_dual), c.p_display(), levels_text(&collapsing_levels(c)), levels_text(&conformal_levels(c)));
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn cmd_criterion(f: Format, quiet: bool, c: &str, k: &str) -> Result<Outcome> {
    let c = case(c)?;
    let k = rational(k)?;
    let v = criterion_report(&c, &k);
    let out = match f {
        Format::Json => json_out(&serde_json::to_value(&v)?),
        _ if quiet => format!("{}\n", v.status.as_str()),
        Format::Md => format!("- {}\n", verdict_line(&v)),
        Format::Text => format!("{}\n", verdict_line(&v)),
    };
    Ok(Outcome::ok(out))
}

fn cmd_atlas(f: Format, grid: usize) -> Result<Outcome> {
    let out = match f {
        Format::Md => atlas_markdown(grid),
        Format::Json => {
            let mut all = Vec::new();
            for id in all_cases(grid) {
                all.extend(case_verdicts(&instantiate(&id)?));
            }
            json_out(&serde_json::to_value(&all)?)
        }
        Format::Text => {
            let mut s = String::new();
            for id in all_cases(grid) {
                let c = instantiate(&id)?;
                if let Some(Ok(sq)) = tensor_square(&c) {
                    let _ = writeln!(s, "{}: tensor square ({}) = {}", c.name(), sq.source, sq.display());
                }
                for v in case_verdicts(&c) {
                    let _ = writeln!(s, "  {}", verdict_line(&v));
                }
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn cmd_tensor(f: Format, alg: &str, l: &str, r: &str, cap: usize) -> Result<Outcome> {
    let a = build_algebra(&AlgebraSpec::parse(alg)?)?;
    let mut reps = Reps::new(&a)?;
    reps.cap = cap;
    let (lw, rw) = (a.parse_weight(l)?, a.parse_weight(r)?);
    let (ll, rl) = (reps.labels_of(&a, &lw)?, reps.labels_of(&a, &rw)?);
    let d = reps.tensor_decompose(&ll, &rl)?;
    let mut rows = Vec::new();
    let mut total = 0u128;
    for (w, m) in &d {
        let dim = reps.weyl_dim(w)?;
        total += dim * *m as u128;
        rows.push((AlgebraData::format_labels(w), *m, dim));
    }
    let product = reps.weyl_dim(&ll)? * reps.weyl_dim(&rl)?;
    let pass = total == product;
    let out = match f {
        Format::Json => json_out(&json!({
            "algebra": reps.name,
            "left": AlgebraData::format_labels(&ll),
            "right": AlgebraData::format_labels(&rl),
            "summands": rows.iter().map(|(w, m, d)| json!({"weight": w, "mult": m, "dim": d.to_string()})).collect::<Vec<_>>(),
            "dim_product": product.to_string(),
            "dim_sum": total.to_string(),
        })),
        _ => {
            let parts: Vec<String> = rows.iter().map(|(w, m, _)| if *m == 1 { w.clone() } else { format!("{m}*{w}") }).collect();
            let bullet = if f == Format::Md { "- " } else { "" };
            format!("{bullet}{} x {} = {}\n{bullet}dimensions: {} = {}\n", AlgebraData::format_labels(&ll), AlgebraData::format_labels(&rl), parts.join(" + "), product, total)
        }
    };
    Ok(Outcome { pass, out })
}

fn lambda_text(p: &LambdaPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs.iter().map(|(i, s)| format!("λ^{i}: {s}")).collect::<Vec<_>>().join("; ")
}

fn cmd_verify_r3(f: Format, quiet: bool) -> Outcome {
    let checks = r3_bracket_identities();
    let g = r3_generators();
    let p2 = nth_product(&g.e1, &g.f2, 2);
    let p1 = nth_product(&g.e1, &g.f2, 1);
    let pass = checks.iter().all(|c| c.pass()) && p2 == LatticeState::vacuum().scale_i(10) && p1 == g.h.scale_i(-3).add(&g.j.scale_i(15));
    let out = match f {
        Format::Json => json_out(&json!({
            "pass": pass,
            "brackets": checks.iter().map(|c| json!({"bracket": c.name, "pass": c.pass(), "value": lambda_text(&c.lhs)})).collect::<Vec<_>>(),
            "E1_(2)F2": p2.to_string(),
            "E1_(1)F2": p1.to_string(),
        })),
        _ => {
            let mut s = String::new();
            if !quiet {
                for c in &checks {
                    let _ = writeln!(s, "{} {}: {}", if c.pass() { "PASS" } else { "FAIL" }, c.name, lambda_text(&c.lhs));
                }
                let _ = writeln!(s, "E1_(2)F2 = {p2}\nE1_(1)F2 = {p1}");
            }
            let _ = writeln!(s, "{}: {} of {} brackets", if pass { "pass" } else { "FAIL" }, checks.iter().filter(|c| c.pass()).count(), checks.len());
            s
        }
    };
    Outcome { pass, out }
}

fn cmd_verify_sl4(f: Format, quiet: bool) -> Result<Outcome> {
    let table = build_ope(4, None)?;
    let cmp = table.compare(SL4_TABLE)?;
    let phi = verify_phi()?;
    let table_ok = cmp.iter().all(|p| p.pass);
    let pass = table_ok && phi.pass;
    let out = match f {
        Format::Json => json_out(&json!({ "pass": pass, "formal_table": cmp, "phi": phi })),
        _ => {
            let mut s = String::new();
            if !quiet {
                for p in cmp.iter().chain(&phi.pairs).filter(|p| !p.pass) {
                    let _ = writeln!(s, "FAIL {} {}: {}", p.x, p.y, p.detail.as_deref().unwrap_or(""));
                }
                let _ = writeln!(s, "formal table: {} of {} fixture pairs match", cmp.iter().filter(|p| p.pass).count(), cmp.len());
                let _ = writeln!(s, "phi at k = {}: {} of {} generator pairs", phi.level, phi.pairs.iter().filter(|p| p.pass).count(), phi.pairs.len());
                let _ = writeln!(s, "phi[G(e21) G(e42)] = -(2/9)[E1 F2]: {}", phi.e1_f2_identity);
                let _ = writeln!(s, "phi(omega_sug) = omega: {}; images primary: {}", phi.omega_is_sugawara, phi.sugawara_primary);
            }
            let _ = writeln!(s, "{}", if pass { "pass" } else { "FAIL" });
            s
        }
    };
    Ok(Outcome { pass, out })
}

fn cmd_ope(f: Format, n: usize, level: Option<&str>) -> Result<Outcome> {
    let k = level.map(rational).transpose()?;
    let t = build_ope(n, k.clone())?;
    let text = t.to_text();
    let out = match f {
        Format::Json => json_out(&json!({
            "n": n,
            "level": k.as_ref().map(fmt_q),
            "generators": t.gens.iter().map(|g| g.name()).collect::<Vec<_>>(),
            "entries": text.lines().filter(|l| !l.is_empty() && !l.starts_with('#')).collect::<Vec<_>>(),
        })),
        Format::Md => format!("```\n{text}```\n"),
        Format::Text => text,
    };
    Ok(Outcome::ok(out))
}

fn cmd_singular(f: Format, quiet: bool, l: i64, j: u32) -> Result<Outcome> {
    if !(-2..=2).contains(&l) || j > 2 {
        return Err(anyhow!("singular vectors are built for l in -2..=2 and j in 0..=2"));
    }
    let v = singular_vector(l, j);
    let r = is_singular(l, j, &v);
    let out = match f {
        Format::Json => {
            let mut val = serde_json::to_value(&r)?;
            if !quiet {
                val["vector"] = Value::String(v.to_string());
            }
            json_out(&val)
        }
        _ => {
            let mut s = String::new();
            if !quiet {
                let _ = writeln!(s, "v[{l},{j}] = {v}");
                let _ = writeln!(s, "terms: {}, h(0): {}, j(0): {}, L0: {} (expected {})", r.terms, r.n, r.m, r.l0, r.l0_expected);
            }
            let _ = writeln!(s, "{}", if r.pass { "singular" } else { "FAIL: not singular" });
            s
        }
    };
    Ok(Outcome { pass: r.pass, out })
}

fn run(cli: &Cli) -> Result<Outcome> {
    let f = cli.format;
    let grid = cli.grid as usize;
    match &cli.cmd {
        Cmd::Catalog => Ok(cmd_catalog(f)),
        Cmd::Levels { case } => cmd_levels(f, grid, case.as_deref()),
        Cmd::Criterion { case, k } => cmd_criterion(f, cli.quiet, case, k),
        Cmd::Atlas => cmd_atlas(f, grid),
        Cmd::Tensor { alg, left, right, cap } => cmd_tensor(f, alg, left, right, *cap).context("tensor"),
        Cmd::VerifyR3 => Ok(cmd_verify_r3(f, cli.quiet)),
        Cmd::VerifySl4Ope => cmd_verify_sl4(f, cli.quiet),
        Cmd::Ope { n, level } => cmd_ope(f, *n, level.as_deref()),
        Cmd::Singular { l, j } => cmd_singular(f, cli.quiet, *l, *j),
        Cmd::Schema => Ok(Outcome::ok(VERDICT_SCHEMA.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            print!("{}", o.out);
            if o.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
