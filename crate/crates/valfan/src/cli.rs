//! Command-line front end: config ingestion, classification, partitions,
//! witness enumeration, degeneration checks, JSON output, optional SVG
//! figures.
//!
//! Exit codes: 0 on success, 1 on config validation failure (including
//! malformed config JSON, with the violation list on stderr), 2 on
//! parameter errors. `VALFAN_THREADS` caps internal parallelism.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::cycle::ConfigError;
use crate::degen::{
    polytope, validate_homogeneity, wps_ci_record, MonoidPresentation, RationalPolytope,
};
use crate::exact::format_rat;
use crate::jsonio;
use crate::lattice::h0_anticanonical;
use crate::render;
use crate::special::{self, SpecialError};

#[derive(Debug, Parser)]
#[command(
    name = "valfan",
    version,
    about = "Exact chamber structure of special valuations on del Pezzo surfaces"
)]
pub struct CliRequest {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputOpts {
    /// Also write the JSON document to this path.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one point of the dual complex of a configuration.
    Classify {
        /// Cycle configuration JSON file.
        #[arg(long)]
        config: PathBuf,
        /// Node index, together with --t.
        #[arg(long)]
        node: Option<usize>,
        /// Edge coordinate: exact text like "1/6", "3 - 2*sqrt(2)", "0", "inf".
        #[arg(long)]
        t: Option<String>,
        /// Component vertex index (alternative to --node/--t).
        #[arg(long)]
        vertex: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Compute the chamber partition of the special locus.
    Partition {
        #[arg(long)]
        config: PathBuf,
        /// Witness enumeration height: all coprime (p, q) up to this bound.
        #[arg(long)]
        height: u64,
        /// Render the partitioned circle to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Enumerate unicuspidal witnesses at a node (after contracting any
    /// non-nef components; node indices refer to the contracted cycle).
    Witnesses {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        height: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Print a chamber polytope of the degree-8 family, optionally checking
    /// lattice-point counts against anticanonical dimensions.
    Polytope {
        #[arg(long)]
        k: i64,
        /// Check ehrhart counts for all valid dilations up to this bound.
        #[arg(long)]
        check_ehrhart: Option<u32>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Graded dimension counts of a monoid algebra on generators (i,j,m).
    Hilbert {
        /// Generator triple "i,j,m"; repeatable.
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        /// Report levels 0..=m.
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Exceptional intersection numbers of weighted blow-ups, and the
    /// valuation-ideal colength.
    Intersections {
        /// Single model weights.
        #[arg(long, conflicts_with_all = ["p1", "q1", "p2", "q2"])]
        p: Option<u64>,
        #[arg(long, conflicts_with_all = ["p1", "q1", "p2", "q2"])]
        q: Option<u64>,
        /// First weight vector of a double model.
        #[arg(long, requires_all = ["q1", "p2", "q2"])]
        p1: Option<u64>,
        #[arg(long)]
        q1: Option<u64>,
        #[arg(long)]
        p2: Option<u64>,
        #[arg(long)]
        q2: Option<u64>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Print a boundary complete-intersection record of the degree-8
    /// family with its homogeneity report.
    ValidateExample {
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        out: OutputOpts,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum CliError {
    /// Config validation failure: message plus violation lines.
    Config(String, Vec<String>),
    /// Parameter error.
    Param(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Config(..) => 1,
            CliError::Param(_) => 2,
        }
    }
}

fn config_failure(e: impl std::fmt::Display) -> CliError {
    CliError::Config(e.to_string(), Vec::new())
}

fn param(e: impl std::fmt::Display) -> CliError {
    CliError::Param(e.to_string())
}

fn load_config(path: &PathBuf) -> Result<crate::cycle::CycleConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display()), vec![]))?;
    let config = jsonio::config_from_json(&text).map_err(config_failure)?;
    match config.validate() {
        Ok(v) if v.is_empty() => Ok(config),
        Ok(v) => Err(CliError::Config(
            "configuration is invalid".to_string(),
            v.iter().map(|x| x.to_string()).collect(),
        )),
        Err(e) => Err(config_failure(e)),
    }
}

/// Errors from the classification layer: bad points are parameter errors,
/// invalid configs are config failures, anything else is a bug.
fn special_error(e: SpecialError) -> CliError {
    match e {
        SpecialError::BadPoint(m) => CliError::Param(m),
        // Comparing values over distinct radicands is a degree-4 problem
        // outside the exact layer; reject the coordinate.
        SpecialError::Exact(e) => CliError::Param(e.to_string()),
        SpecialError::Config(ConfigError::Invalid(v)) => CliError::Config(
            "configuration is invalid".to_string(),
            v.iter().map(|x| x.to_string()).collect(),
        ),
        SpecialError::Config(e) => config_failure(e),
        other => panic!("internal error: {other}"),
    }
}

fn configure_threads() {
    if let Ok(v) = std::env::var("VALFAN_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                // Ignore the error when a global pool already exists.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

/// Parses and runs one request from raw arguments.
pub fn run_args<I, S>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let request = match CliRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            // Help and version requests are successes.
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutcome { code, stdout: text, stderr: String::new() }
            } else {
                CliOutcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    configure_threads();
    run(request)
}

/// Executes a parsed request.
pub fn run(request: CliRequest) -> CliOutcome {
    match execute(request) {
        Ok((doc, svg)) => {
            let stdout = jsonio::render(&doc);
            let mut stderr = String::new();
            let mut code = 0;
            if let Some((path, content)) = svg {
                if let Err(e) = std::fs::write(&path, content) {
                    stderr = format!("cannot write {}: {e}\n", path.display());
                    code = 2;
                }
            }
            CliOutcome { code, stdout, stderr }
        }
        Err(e) => {
            let mut stderr = String::new();
            match &e {
                CliError::Config(msg, violations) => {
                    stderr.push_str(&format!("error: {msg}\n"));
                    for v in violations {
                        stderr.push_str(&format!("violation: {v}\n"));
                    }
                }
                CliError::Param(msg) => stderr.push_str(&format!("error: {msg}\n")),
            }
            CliOutcome { code: e.code(), stdout: String::new(), stderr }
        }
    }
}

type CommandOutput = (serde_json::Value, Option<(PathBuf, String)>);

fn execute(request: CliRequest) -> Result<CommandOutput, CliError> {
    match request.command {
        Command::Classify { config, node, t, vertex, out } => {
            let cfg = load_config(&config)?;
            let pt = jsonio::parse_point(&cfg, node, t.as_deref(), vertex)
                .map_err(param)?;
            let verdict = special::classify(&cfg, &pt).map_err(special_error)?;
            let mut doc = jsonio::verdict_value(&verdict);
            doc["point"] = jsonio::point_value(&pt);
            write_output(&out, &doc)?;
            Ok((doc, None))
        }
        Command::Partition { config, height, svg, out } => {
            let cfg = load_config(&config)?;
            let partition = special::partition(&cfg, height).map_err(special_error)?;
            let doc = jsonio::partition_value(&partition);
            write_output(&out, &doc)?;
            let svg_out = svg.map(|path| (path, render::partition_svg(&cfg, &partition)));
            Ok((doc, svg_out))
        }
        Command::Witnesses { config, node, height, out } => {
            let cfg = load_config(&config)?;
            let (nef, _) = cfg.contract_non_nef().map_err(config_failure)?;
            if node >= nef.node_count() {
                return Err(param(format!(
                    "node {node} out of range: the contracted cycle has {} nodes",
                    nef.node_count()
                )));
            }
            let ws = special::witness_set(&nef, node, height).map_err(special_error)?;
            let mut doc = jsonio::witness_set_value(&ws);
            doc["contracted_components"] =
                json!(cfg.component_count() - nef.component_count());
            write_output(&out, &doc)?;
            Ok((doc, None))
        }
        Command::Polytope { k, check_ehrhart, svg, out } => {
            let p = polytope(k);
            let mut doc = json!({
                "k": k,
                "vertices": jsonio::polytope_value(&p),
                "area2": jsonio::rat_value(&p.area2()),
                "denominator_lcm": p.denominator_lcm().to_string(),
            });
            if let Some(mmax) = check_ehrhart {
                doc["ehrhart"] = ehrhart_table(&p, mmax);
            }
            write_output(&out, &doc)?;
            let svg_out = svg.map(|path| (path, render::polytope_svg(&p)));
            Ok((doc, svg_out))
        }
        Command::Hilbert { generators, m, out } => {
            let gens = generators
                .iter()
                .map(|s| parse_generator(s))
                .collect::<Result<Vec<_>, _>>()?;
            let monoid = MonoidPresentation::new(gens).map_err(param)?;
            let levels: Vec<serde_json::Value> = (0..=m)
                .map(|level| json!({ "m": level, "dim": monoid.hilbert(level) }))
                .collect();
            let doc = json!({
                "generators": monoid.generators().iter()
                    .map(|&(i, j, mm)| json!([i, j, mm])).collect::<Vec<_>>(),
                "levels": levels,
            });
            write_output(&out, &doc)?;
            Ok((doc, None))
        }
        Command::Intersections { p, q, p1, q1, p2, q2, out } => {
            let doc = match (p, q, p1, q1, p2, q2) {
                (Some(p), Some(q), None, None, None, None) => {
                    let e2 = crate::blowup::et_self(p, q).map_err(param)?;
                    let col = crate::blowup::colength(p, q).map_err(param)?;
                    json!({
                        "weights": [p, q],
                        "exceptional_square": format_rat(&e2),
                        "colength": col,
                    })
                }
                (None, None, Some(p1), Some(q1), Some(p2), Some(q2)) => {
                    let pi = crate::blowup::pair_intersections(p1, q1, p2, q2)
                        .map_err(param)?;
                    json!({
                        "first": [pi.first.0, pi.first.1],
                        "second": [pi.second.0, pi.second.1],
                        "e1_square": format_rat(&pi.e1_sq),
                        "e2_square": format_rat(&pi.e2_sq),
                        "e1_e2": format_rat(&pi.e1_e2),
                    })
                }
                _ => {
                    return Err(param(
                        "give either --p and --q, or all of --p1 --q1 --p2 --q2",
                    ))
                }
            };
            write_output(&out, &doc)?;
            Ok((doc, None))
        }
        Command::ValidateExample { k, out } => {
            let rec = wps_ci_record(k);
            let report = validate_homogeneity(&rec);
            let mut doc = jsonio::wps_record_value(&rec, &report);
            doc["k"] = json!(k);
            write_output(&out, &doc)?;
            Ok((doc, None))
        }
    }
}

fn ehrhart_table(p: &RationalPolytope, mmax: u32) -> serde_json::Value {
    use num_traits::ToPrimitive;
    let lcm = p.denominator_lcm().to_u32().unwrap_or(u32::MAX);
    let mut rows = Vec::new();
    let mut m = lcm;
    while m <= mmax {
        let count = p.ehrhart(m);
        let h0 = h0_anticanonical(8, m);
        rows.push(json!({
            "m": m,
            "lattice_points": count,
            "h0_anticanonical": h0,
            "match": count == h0,
        }));
        m += lcm;
    }
    serde_json::Value::Array(rows)
}

fn parse_generator(s: &str) -> Result<(u64, u64, u64), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(param(format!("generator `{s}` must be \"i,j,m\"")));
    }
    let nums: Vec<u64> = parts
        .iter()
        .map(|x| x.parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| param(format!("generator `{s}` has non-integer parts")))?;
    Ok((nums[0], nums[1], nums[2]))
}

fn write_output(out: &OutputOpts, doc: &serde_json::Value) -> Result<(), CliError> {
    if let Some(path) = &out.output {
        std::fs::write(path, jsonio::render(doc))
            .map_err(|e| param(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn run_str(args: &[&str]) -> CliOutcome {
        run_args(args.iter().map(|s| s.to_string()))
    }

    fn write_config(name: &str) -> PathBuf {
        use std::sync::atomic::{AtomicUsize, Ordering};
        static COUNTER: AtomicUsize = AtomicUsize::new(0);
        let config = catalog::by_name(name).unwrap();
        let dir = std::env::temp_dir().join("valfan-cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        // Unique file per call: tests run in parallel.
        let id = COUNTER.fetch_add(1, Ordering::Relaxed);
        let path = dir.join(format!("{name}-{}-{id}.json", std::process::id()));
        std::fs::write(&path, jsonio::render(&jsonio::config_to_json(&config))).unwrap();
        path
    }

    #[test]
    fn classify_command() {
        let path = write_config("dp8-nodal");
        let out = run_str(&[
            "valfan", "classify", "--config", path.to_str().unwrap(),
            "--node", "0", "--t", "1/6",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["special"], serde_json::json!(false));
        assert_eq!(doc["case"], serde_json::json!("Irreducible-a"));
        // Deterministic output.
        let again = run_str(&[
            "valfan", "classify", "--config", path.to_str().unwrap(),
            "--node", "0", "--t", "1/6",
        ]);
        assert_eq!(out, again);
    }

    #[test]
    fn exit_codes() {
        // Malformed config: 1, message on stderr.
        let dir = std::env::temp_dir().join("valfan-cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let bad = dir.join("bad.json");
        std::fs::write(&bad, "{ not json").unwrap();
        let out = run_str(&[
            "valfan", "classify", "--config", bad.to_str().unwrap(),
            "--node", "0", "--t", "1",
        ]);
        assert_eq!(out.code, 1);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("error"));

        // Invalid config: 1 with violations on stderr.
        let invalid = dir.join("invalid.json");
        std::fs::write(
            &invalid,
            r#"{"surface": "blowup:0", "components": [[1], [1]]}"#,
        )
        .unwrap();
        let out = run_str(&[
            "valfan", "classify", "--config", invalid.to_str().unwrap(),
            "--node", "0", "--t", "1",
        ]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("violation"));

        // Parameter error: 2.
        let good = write_config("dp8-nodal");
        let out = run_str(&[
            "valfan", "classify", "--config", good.to_str().unwrap(),
            "--node", "5", "--t", "1",
        ]);
        assert_eq!(out.code, 2);
        // Edge coordinates over the wrong radicand cannot be compared with
        // the interval endpoints and are rejected as parameters.
        let out = run_str(&[
            "valfan", "classify", "--config", good.to_str().unwrap(),
            "--node", "0", "--t", "1 + sqrt(3)",
        ]);
        assert_eq!(out.code, 2, "{}", out.stderr);
        let out = run_str(&["valfan", "no-such-command"]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn partition_and_svg() {
        let path = write_config("dp8-nodal");
        let dir = std::env::temp_dir().join("valfan-cli-tests");
        let svg = dir.join("partition.svg");
        let out = run_str(&[
            "valfan", "partition", "--config", path.to_str().unwrap(),
            "--height", "10", "--svg", svg.to_str().unwrap(),
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["region"]["type"], serde_json::json!("open_arc"));
        assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    }

    #[test]
    fn polytope_hilbert_intersections_validate() {
        let out = run_str(&["valfan", "polytope", "--k", "0", "--check-ehrhart", "5"]);
        assert_eq!(out.code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["area2"], serde_json::json!(8));
        let rows = doc["ehrhart"].as_array().unwrap();
        assert_eq!(rows.len(), 5);
        assert!(rows.iter().all(|r| r["match"] == serde_json::json!(true)));

        let out = run_str(&[
            "valfan", "hilbert", "--gen", "1,0,1", "--gen", "0,1,1", "--gen", "0,0,1",
            "--m", "2",
        ]);
        assert_eq!(out.code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["levels"][2]["dim"], serde_json::json!(6));

        let out = run_str(&["valfan", "intersections", "--p", "2", "--q", "3"]);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["exceptional_square"], serde_json::json!("-1/6"));
        assert_eq!(doc["colength"], serde_json::json!(5));

        let out = run_str(&[
            "valfan", "intersections", "--p1", "1", "--q1", "1", "--p2", "1", "--q2", "2",
        ]);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["e1_square"], serde_json::json!("-2"));

        let out = run_str(&["valfan", "validate-example", "--k", "0"]);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["homogeneity"]["homogeneous"], serde_json::json!([true, true]));
        let out = run_str(&["valfan", "validate-example", "--k", "1"]);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["homogeneity"]["homogeneous"], serde_json::json!([false, true]));
    }

    #[test]
    fn witnesses_auto_contracts() {
        let path = write_config("dp8-contractible");
        let out = run_str(&[
            "valfan", "witnesses", "--config", path.to_str().unwrap(),
            "--node", "0", "--height", "8",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["contracted_components"], serde_json::json!(1));
    }
}
