//! `strata`: tables, claim verification and presentations for the genus-3
//! strata of abelian differentials.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use strata_core::artin::{
    check_pair, hyperelliptic_group_data, stratum_presentation, GroupPresentation, HyperellipticKey,
};
use strata_core::catalog::{catalog, dimension_consistency};
use strata_core::claims::{run_claims, ClaimContext, ClaimReport};
use strata_core::coxeter::{build_affine, quasi_special_report, AffineType};
use strata_core::degeneration::{
    permutation_weyl_iso, specialize_report, verify_limit_intersections, verify_limit_map,
};
use strata_core::delpezzo::{build_picard, exceptional_table, label_exceptionals, StratumKey};
use strata_core::lattice::OrbitCache;

use render::Table;

const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Style {
    Json,
    Text,
    #[value(name = "gap-style")]
    Gap,
}

#[derive(Parser, Debug)]
#[command(
    name = "strata",
    version,
    about = "Genus-3 strata: root systems, degenerations and Artin presentations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Orbit cache directory.
    #[arg(long, global = true, env = "STRATA_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Do not read or write the orbit cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Catalog of strata with dimensions and models.
    Table,
    /// Run the claim registry.
    Verify {
        /// Only run this claim (repeatable).
        #[arg(long = "claim", value_name = "ID")]
        claims: Vec<String>,
    },
    /// The 56 labelled exceptional classes.
    Exceptional,
    /// Presentation of the orbifold fundamental group of a stratum.
    Present {
        /// (4), (3,1), (2,2), (2,1^2), hyp(4) or hyp(2,2).
        stratum: String,
        /// Output style; defaults to json under `--format json`, otherwise text.
        #[arg(long, value_enum)]
        style: Option<Style>,
        /// For (2,2): the form with one relation per terminal vertex.
        #[arg(long)]
        variant: bool,
    },
    /// Affine Coxeter queries.
    Coxeter {
        #[command(subcommand)]
        query: CoxeterQuery,
    },
    /// Degeneration checks.
    Degeneration {
        #[command(subcommand)]
        action: DegenerationAction,
    },
}

#[derive(Subcommand, Debug)]
enum CoxeterQuery {
    /// Quasi-special vertices of E6~ or E7~.
    QuasiSpecial { affine_type: String },
    /// Image of (Delta_j g_j)(Delta_i g_i)^-1 for quasi-special i, j.
    Translation {
        affine_type: String,
        i: usize,
        j: usize,
    },
}

#[derive(Subcommand, Debug)]
enum DegenerationAction {
    /// Limit intersection rules, limit map, specialization and permutations.
    Verify,
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Claims(String),
    Usage(String),
}

impl From<strata_core::Error> for Failure {
    fn from(e: strata_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Claims(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Table => table(cli.format),
        Command::Verify { claims } => verify(cli, claims),
        Command::Exceptional => exceptional(cli.format),
        Command::Present {
            stratum,
            style,
            variant,
        } => present(cli.format, stratum, *style, *variant),
        Command::Coxeter { query } => coxeter(cli.format, query),
        Command::Degeneration {
            action: DegenerationAction::Verify,
        } => degeneration(cli.format),
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn opt(s: &Option<String>) -> String {
    s.clone().unwrap_or_else(|| "-".into())
}

fn table(format: Format) -> Outcome {
    let records = catalog();
    let dims = dimension_consistency()?;
    if format == Format::Json {
        return Ok(json_text(&json!({
            "schema_version": SCHEMA_VERSION,
            "records": to_value(&records),
            "dimension_checks": to_value(&dims.rows),
        })));
    }
    let mut t = Table::new(&[
        "k",
        "kind",
        "Kodaira type",
        "type of R",
        "boundary",
        "dim H",
        "dim PH",
        "model",
        "model dim",
        "pi_1",
    ]);
    for (r, d) in records.iter().zip(&dims.rows) {
        t.push(vec![
            r.partition.clone(),
            to_value(&r.kind).as_str().unwrap_or_default().to_string(),
            opt(&r.kodaira_type),
            opt(&r.ambient_root_type),
            opt(&r.boundary_subsystem_type),
            r.dim_h.to_string(),
            r.dim_ph.to_string(),
            r.model.clone(),
            format!(
                "{}{}",
                d.model_dimension,
                if d.consistent { "" } else { " (mismatch)" }
            ),
            r.fundamental_group_ref
                .clone()
                .unwrap_or_else(|| "not emitted".into()),
        ]);
    }
    Ok(t.render(format))
}

fn claim_context(cli: &Cli) -> ClaimContext {
    let cache = if cli.no_cache {
        None
    } else {
        let dir = cli
            .cache_dir
            .clone()
            .unwrap_or_else(|| std::env::temp_dir().join("strata-orbit-cache"));
        Some(OrbitCache::new(dir))
    };
    ClaimContext { cache }
}

fn render_report(report: &ClaimReport, format: Format) -> Result<String, Failure> {
    if format == Format::Json {
        let mut s = report.to_json()?;
        s.push('\n');
        return Ok(s);
    }
    if format == Format::Text {
        let mut s = String::new();
        for c in &report.claims {
            s.push_str(&format!(
                "{:<4} {}  {}: {}\n",
                c.id,
                if c.passed { "PASS" } else { "FAIL" },
                c.description,
                c.observed
            ));
        }
        s.push_str(&format!(
            "{}/{} claims passed\n",
            report.passed,
            report.claims.len()
        ));
        return Ok(s);
    }
    let mut t = Table::new(&[
        "id",
        "status",
        "description",
        "anchor",
        "expected",
        "observed",
    ]);
    for c in &report.claims {
        t.push(vec![
            c.id.clone(),
            if c.passed { "pass" } else { "fail" }.into(),
            c.description.clone(),
            c.anchor.clone(),
            c.expected.clone(),
            c.observed.clone(),
        ]);
    }
    Ok(t.render(format))
}

fn verify(cli: &Cli, ids: &[String]) -> Outcome {
    let ctx = claim_context(cli);
    let filter = (!ids.is_empty()).then_some(ids);
    let report = run_claims(filter, &ctx)?;
    let out = render_report(&report, cli.format)?;
    if report.all_passed() {
        Ok(out)
    } else {
        Err(Failure::Claims(out))
    }
}

fn exceptional(format: Format) -> Outcome {
    let rows = exceptional_table(&build_picard())?;
    if format == Format::Json {
        return Ok(json_text(
            &json!({ "schema_version": SCHEMA_VERSION, "exceptionals": to_value(&rows) }),
        ));
    }
    let mut t = Table::new(&["#", "class", "coords (l,e1..e7)", "label", "partner", "eps"]);
    for r in &rows {
        t.push(vec![
            r.index.to_string(),
            r.class.clone(),
            r.coords.join(" "),
            format!("E{}{}", r.sign.symbol(), r.pair),
            r.partner.to_string(),
            format!("{:+}", r.epsilon),
        ]);
    }
    Ok(t.render(format))
}

fn presentation_for(stratum: &str, variant: bool) -> Result<GroupPresentation, Failure> {
    let compact: String = stratum
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_lowercase();
    if let Some(rest) = compact.strip_prefix("hyp") {
        let key = match rest {
            "(4)" | "4" => HyperellipticKey::SingleZero,
            "(2,2)" | "2,2" | "(2^2)" => HyperellipticKey::TwoZeros,
            _ => {
                return Err(Failure::Usage(format!(
                    "unknown hyperelliptic stratum {stratum}"
                )))
            }
        };
        return Ok(hyperelliptic_group_data(3, key)?);
    }
    let key: StratumKey = stratum.parse()?;
    let sp = stratum_presentation(key)?;
    if variant {
        return sp
            .variant
            .ok_or_else(|| Failure::Usage(format!("no variant presentation for {key}")));
    }
    Ok(sp.presentation)
}

fn present(format: Format, stratum: &str, style: Option<Style>, variant: bool) -> Outcome {
    let p = presentation_for(stratum, variant)?;
    let style = style.unwrap_or(if format == Format::Json {
        Style::Json
    } else {
        Style::Text
    });
    Ok(match style {
        Style::Json => {
            let mut s = p.to_json()?;
            s.push('\n');
            s
        }
        Style::Text => p.to_text(),
        Style::Gap => p.to_gap_style(),
    })
}

fn coxeter(format: Format, query: &CoxeterQuery) -> Outcome {
    match query {
        CoxeterQuery::QuasiSpecial { affine_type } => {
            let t: AffineType = affine_type.parse()?;
            let rep = quasi_special_report(&build_affine(t)?)?;
            if format == Format::Json {
                let mut v = to_value(&rep);
                v["schema_version"] = json!(SCHEMA_VERSION);
                return Ok(json_text(&v));
            }
            let mut t = Table::new(&["vertex", "Gamma_i", "quasi-special", "g", "v_i"]);
            for r in &rep.rows {
                t.push(vec![
                    r.vertex.to_string(),
                    r.subdiagram_type.clone(),
                    r.quasi_special.to_string(),
                    r.automorphism.as_ref().map_or("-".into(), |g| g.cycles()),
                    r.vertex_coords.join(" "),
                ]);
            }
            Ok(format!(
                "{}{}",
                if format == Format::Text {
                    format!(
                        "{}: |Aut| = {}\n",
                        rep.affine_type, rep.automorphism_group_order
                    )
                } else {
                    String::new()
                },
                t.render(format)
            ))
        }
        CoxeterQuery::Translation { affine_type, i, j } => {
            let t: AffineType = affine_type.parse()?;
            let real = build_affine(t)?;
            let n = real.diagram().vertices().len();
            if *i >= n || *j >= n {
                return Err(Failure::Usage(format!("vertices of {t} are 0..{}", n - 1)));
            }
            let pc = check_pair(&real, *i, *j)?;
            let ok = pc.opposition_reproduced && pc.translation_reproduced;
            let out = if format == Format::Json {
                let mut v = to_value(&pc);
                v["schema_version"] = json!(SCHEMA_VERSION);
                v["affine_type"] = json!(t.to_string());
                json_text(&v)
            } else {
                format!(
                    "{t}, i = {i}, j = {j}\ng_i = {}, g_j = {}\n(Delta_j g_j)(Delta_i g_i)^-1 = translation by ({})\nequals 2(v_j - v_i): {}\nopposition identities: {}\n",
                    pc.g_i.cycles(),
                    pc.g_j.cycles(),
                    pc.translation.join(", "),
                    pc.translation_reproduced,
                    pc.opposition_reproduced
                )
            };
            if ok {
                Ok(out)
            } else {
                Err(Failure::Claims(out))
            }
        }
    }
}

fn degeneration(format: Format) -> Outcome {
    let pic = build_picard();
    let dict = label_exceptionals(&pic)?;
    let limits = verify_limit_intersections()?;
    let map = verify_limit_map(&dict)?;
    let spec = specialize_report(&pic)?;
    let perms = permutation_weyl_iso(&pic)?;
    let passed = limits.passed() && map.passed() && spec.passed() && perms.passed();
    let out = if format == Format::Json {
        json_text(&json!({
            "schema_version": SCHEMA_VERSION,
            "limit_rules": to_value(&limits),
            "limit_map": to_value(&map),
            "specialize": to_value(&spec),
            "permutations": to_value(&perms),
            "passed": passed,
        }))
    } else {
        let mut t = Table::new(&["check", "result", "detail"]);
        let mark = |b: bool| if b { "pass" } else { "fail" }.to_string();
        t.push(vec![
            "limit intersection rules".into(),
            mark(limits.passed()),
            format!(
                "{} pairs, {} mismatches",
                limits.pairs_checked,
                limits.mismatches.len()
            ),
        ]);
        t.push(vec![
            "limit map preserves intersections".into(),
            mark(map.passed()),
            format!("{} pairs, {} mismatches", map.pairs_checked, map.mismatches),
        ]);
        t.push(vec![
            "eps(alpha) = +1 iff same-sign limit".into(),
            mark(spec.passed()),
            format!(
                "{} true, {} false",
                spec.specialize_true, spec.specialize_false
            ),
        ]);
        t.push(vec![
            "S(B) into W(A7)".into(),
            mark(perms.passed()),
            format!("image order {}", perms.image_order),
        ]);
        t.render(format)
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Claims(out))
    }
}
