use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use prepieri::algebra::Polynomial;
use prepieri::ninthvar::{fun_rule_sides, NinthContext};
use prepieri::nsym::{immaculate, immaculate_via_rowdet, right_pieri_index_set, right_pieri_sides};
use prepieri::permcomb::{
    binary_compositions, eta_tuple, weak_compositions, xi_tuple, IntTuple, Permutation,
};
use prepieri::prelr::{decompose, reconstruct, t_set, verify_decomposition, verify_prelr_claim};
use prepieri::prepieri::{
    cor_e_sides, cor_h_sides, first_rule_sides, second_rule_sides, CorollaryForm, PieriContext,
};
use prepieri::schur::{alt_pieri_report, complete, elementary, pieri, schur, Partition, PieriKind};
use prepieri::sweep::{run_all, run_criterion, SweepConfig, DEFAULT_SAMPLES, DEFAULT_SEED};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "prepieri", version)]
#[command(about = "Exact verification of pre-Pieri identities and their specializations")]
struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Leave elapsed_ms out of the report so identical runs are byte-identical
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "E", alias = "e")]
    E,
}

impl From<Kind> for PieriKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::H => PieriKind::H,
            Kind::E => PieriKind::E,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Shifted,
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetKind {
    Weak,
    Binary,
    Orbit,
}

fn tuple(s: &str) -> Result<IntTuple, String> {
    s.parse().map_err(|e: prepieri::Error| e.to_string())
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: prepieri::Error| e.to_string())
}

#[derive(Args)]
struct RuleArgs {
    /// Number of rows; defaults to the length of --alpha
    #[arg(long)]
    n: Option<usize>,

    #[arg(long, allow_hyphen_values = true)]
    p: i64,

    /// Comma-separated integers; defaults to n zeros
    #[arg(long, visible_alias = "mu", value_parser = tuple, allow_hyphen_values = true)]
    alpha: Option<IntTuple>,
}

impl RuleArgs {
    fn tuple(&self) -> Result<IntTuple, String> {
        match (self.n, &self.alpha) {
            (Some(n), Some(a)) if a.len() != n => {
                Err(format!("--alpha has {} entries, --n is {n}", a.len()))
            }
            (_, Some(a)) => Ok(a.clone()),
            (Some(n), None) => Ok(IntTuple::zeros(n)),
            (None, None) => Err("one of --n or --alpha is required".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the first rule: sum over weak compositions of p
    VerifyFirst(RuleArgs),

    /// Check the second rule: sum over 0/1 compositions of p
    VerifySecond(RuleArgs),

    /// Check a corollary with its negative-index specialization
    VerifyCor {
        #[arg(long, value_enum)]
        kind: Kind,

        /// shifted reads the tuple as alpha, schur reads it as mu
        #[arg(long, value_enum, default_value_t = Mode::Schur)]
        mode: Mode,

        #[command(flatten)]
        rule: RuleArgs,
    },

    /// List the Pieri expansion of s_lambda times h_p or e_p
    ExpandPieri {
        #[arg(long, value_enum)]
        kind: Kind,

        /// Comma-separated parts; empty for the empty partition
        #[arg(long, value_parser = partition, default_value = "")]
        lambda: Partition,

        #[arg(long)]
        p: i64,
    },

    /// Expand an immaculate function in the H basis words
    ExpandImmaculate {
        #[arg(long, value_parser = tuple, allow_hyphen_values = true, default_value = "")]
        alpha: IntTuple,
    },

    /// Check the right-Pieri rule for immaculate functions
    VerifyImmaculate {
        #[arg(long, value_parser = tuple, allow_hyphen_values = true, default_value = "")]
        alpha: IntTuple,

        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },

    /// Check the ninth-variation Pieri rule
    VerifyFun {
        /// ell+1 entries, the last one 0
        #[arg(long, value_parser = tuple, allow_hyphen_values = true)]
        mu: IntTuple,

        /// ell entries
        #[arg(long, value_parser = tuple, allow_hyphen_values = true, default_value = "")]
        beta: IntTuple,

        #[arg(long, allow_hyphen_values = true)]
        p: i64,

        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },

    /// Decompose T_B for a set B into increasing row-determinants
    Decompose {
        #[arg(long, value_enum)]
        set: SetKind,

        #[arg(long)]
        n: usize,

        /// Required for weak and binary sets
        #[arg(long, allow_hyphen_values = true)]
        p: Option<i64>,

        /// Orbit representatives (repeatable) for --set orbit
        #[arg(long, value_parser = tuple, allow_hyphen_values = true)]
        beta: Vec<IntTuple>,

        /// Also check the specialization X[k,i] -> h[alpha_i + k, i]
        #[arg(long, value_parser = tuple, allow_hyphen_values = true)]
        alpha: Option<IntTuple>,
    },

    /// Run the full verification matrix
    Sweep {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,

        /// Random tuples per parameter point
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,

        /// Restrict to these criteria (repeatable)
        #[arg(long)]
        criterion: Vec<u8>,
    },
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum Verdict {
    Verified,
    Failed,
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    inputs: Value,
    verdict: Verdict,
    equal: bool,
    lhs_terms: Option<usize>,
    rhs_terms: Option<usize>,
    elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip)]
    lines: Vec<String>,
}

impl Report {
    fn new(command: &'static str, inputs: Value, equal: bool) -> Self {
        Report {
            command,
            inputs,
            verdict: if equal {
                Verdict::Verified
            } else {
                Verdict::Failed
            },
            equal,
            lhs_terms: None,
            rhs_terms: None,
            elapsed_ms: None,
            counterexample: None,
            result: None,
            lines: Vec::new(),
        }
    }

    fn sides(command: &'static str, inputs: Value, lhs: &Polynomial, rhs: &Polynomial) -> Self {
        let mut r = Report::new(command, inputs, lhs == rhs);
        r.lhs_terms = Some(lhs.term_count());
        r.rhs_terms = Some(rhs.term_count());
        r.counterexample = counterexample(lhs, rhs);
        r
    }

    fn render_text(&self) -> String {
        let mut out = vec![
            format!("command: {}", self.command),
            format!("inputs: {}", self.inputs),
            format!(
                "verdict: {}",
                if self.equal { "verified" } else { "failed" }
            ),
        ];
        if let Some(t) = self.lhs_terms {
            out.push(format!("lhs_terms: {t}"));
        }
        if let Some(t) = self.rhs_terms {
            out.push(format!("rhs_terms: {t}"));
        }
        if let Some(c) = &self.counterexample {
            out.push(format!("counterexample: {c}"));
        }
        out.extend(self.lines.iter().cloned());
        if let Some(ms) = self.elapsed_ms {
            out.push(format!("elapsed_ms: {ms}"));
        }
        out.join("\n")
    }
}

/// The first monomial on which the two sides disagree, with both coefficients.
fn counterexample(lhs: &Polynomial, rhs: &Polynomial) -> Option<Value> {
    let diff = lhs - rhs;
    let (m, _) = diff.first_term()?;
    Some(json!({
        "monomial": m.to_string(),
        "lhs": lhs.coefficient(m).to_string(),
        "rhs": rhs.coefficient(m).to_string(),
    }))
}

fn run(cmd: &Command) -> Result<Report, String> {
    let err = |e: prepieri::Error| e.to_string();
    let report = match cmd {
        Command::VerifyFirst(args) | Command::VerifySecond(args) => {
            let alpha = args.tuple()?;
            let ctx = PieriContext::new(alpha.clone(), args.p);
            let inputs = json!({"n": alpha.len(), "p": args.p, "alpha": alpha.to_string()});
            if matches!(cmd, Command::VerifyFirst(_)) {
                let (l, r) = first_rule_sides(&ctx).map_err(err)?;
                Report::sides("verify-first", inputs, &l, &r)
            } else {
                let (l, r) = second_rule_sides(&ctx).map_err(err)?;
                Report::sides("verify-second", inputs, &l, &r)
            }
        }
        Command::VerifyCor { kind, mode, rule } => {
            let tuple = rule.tuple()?;
            let n = tuple.len();
            let form = match mode {
                Mode::Shifted => CorollaryForm::Shifted,
                Mode::Schur => CorollaryForm::Schur,
            };
            let (sides, kill) = match kind {
                Kind::H => {
                    let ctx = PieriContext::new(tuple.clone(), rule.p).with_negative_kill([n]);
                    (cor_h_sides(&ctx, form), vec![n])
                }
                Kind::E => {
                    let q = n.saturating_sub(rule.p.clamp(0, n as i64) as usize);
                    let ctx =
                        PieriContext::new(tuple.clone(), rule.p).with_negative_kill(q + 1..=n);
                    (cor_e_sides(&ctx, form), (q + 1..=n).collect())
                }
            };
            let (l, r) = sides.map_err(err)?;
            let inputs = json!({
                "kind": PieriKind::from(*kind).to_string(),
                "mode": match mode { Mode::Shifted => "shifted", Mode::Schur => "schur" },
                "n": n,
                "p": rule.p,
                "tuple": tuple.to_string(),
                "negative_kill": kill,
            });
            Report::sides("verify-cor", inputs, &l, &r)
        }
        Command::ExpandPieri { kind, lambda, p } => {
            let kind = PieriKind::from(*kind);
            let strips = pieri(lambda, *p, kind);
            let multiplier = match kind {
                PieriKind::H => complete(*p),
                PieriKind::E => elementary(*p),
            };
            let lhs = &schur(lambda) * &multiplier;
            let mut rhs = Polynomial::zero(lhs.kind());
            for mu in &strips {
                rhs += &schur(mu);
            }
            let alt = alt_pieri_report(lambda, *p, kind);
            let inputs = json!({"kind": kind.to_string(), "lambda": lambda.to_string(), "p": p});
            let mut r = Report::sides("expand-pieri", inputs, &lhs, &rhs);
            if !(alt.matches_strips && alt.matches_product) {
                r.equal = false;
                r.verdict = Verdict::Failed;
            }
            let names: Vec<String> = strips.iter().map(|m| m.to_string()).collect();
            r.lines.push(format!(
                "partitions: {}",
                names
                    .iter()
                    .map(|s| format!("({s})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            r.lines.push(format!(
                "alternative rule: n={} addends={} zero={} cancelling_pairs={} all_positive={}",
                alt.n, alt.addends, alt.zero_addends, alt.cancelling_pairs, alt.all_positive
            ));
            r.result = Some(json!({
                "partitions": names,
                "alternative": {
                    "n": alt.n,
                    "addends": alt.addends,
                    "zero_addends": alt.zero_addends,
                    "non_partition_addends": alt.non_partition_addends,
                    "cancelling_pairs": alt.cancelling_pairs,
                    "all_positive": alt.all_positive,
                    "matches_strips": alt.matches_strips,
                    "matches_product": alt.matches_product,
                },
            }));
            r
        }
        Command::ExpandImmaculate { alpha } => {
            let direct = immaculate(alpha);
            let via = immaculate_via_rowdet(alpha);
            let mut r = Report::sides(
                "expand-immaculate",
                json!({"alpha": alpha.to_string()}),
                direct.as_polynomial(),
                via.as_polynomial(),
            );
            r.lines.push(format!("expansion: {direct}"));
            r.result = Some(json!({"expansion": direct.to_string()}));
            r
        }
        Command::VerifyImmaculate { alpha, s } => {
            let (l, rhs) = right_pieri_sides(alpha, *s);
            let indices: Vec<String> = right_pieri_index_set(alpha, *s)
                .iter()
                .map(|b| b.to_string())
                .collect();
            let inputs = json!({"alpha": alpha.to_string(), "s": s});
            let mut r = Report::sides(
                "verify-immaculate",
                inputs,
                l.as_polynomial(),
                rhs.as_polynomial(),
            );
            r.lines.push(format!(
                "index set: {}",
                indices
                    .iter()
                    .map(|s| format!("({s})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            r.result = Some(json!({"index_set": indices}));
            r
        }
        Command::VerifyFun { mu, beta, p, q } => {
            let ctx = NinthContext::new(mu.clone(), beta.clone(), *p, *q).map_err(err)?;
            let (l, rhs) = fun_rule_sides(&ctx);
            let inputs = json!({"mu": mu.to_string(), "beta": beta.to_string(), "p": p, "q": q});
            Report::sides("verify-fun", inputs, &l, &rhs)
        }
        Command::Decompose {
            set,
            n,
            p,
            beta,
            alpha,
        } => {
            let need_p = || p.ok_or_else(|| "--p is required for this set".to_string());
            let members: BTreeSet<IntTuple> = match set {
                SetKind::Weak => weak_compositions(*n, need_p()?).collect(),
                SetKind::Binary => binary_compositions(*n, need_p()?).collect(),
                SetKind::Orbit => {
                    if beta.is_empty() {
                        return Err("--set orbit needs at least one --beta".into());
                    }
                    let mut out = BTreeSet::new();
                    for b in beta {
                        for s in Permutation::all(b.len()) {
                            out.insert(b.act(&s).map_err(err)?);
                        }
                    }
                    out
                }
            };
            let m = t_set(&members, *n).map_err(err)?;
            let d = decompose(&m).map_err(err)?;
            let back = reconstruct(&d, *n).map_err(err)?;
            let mut ok = verify_decomposition(&m, alpha.as_ref()).map_err(err)?;
            if let Some(a) = alpha {
                ok &= verify_prelr_claim(&members, a).map_err(err)?;
            }
            let coefficients: Vec<Value> = d
                .coefficients
                .iter()
                .map(|(g, c)| json!({"gamma": g.to_string(), "coefficient": c.to_string()}))
                .collect();
            let predicted = match (set, p) {
                (SetKind::Weak, Some(p)) if *n > 0 => eta_tuple(*n, *p).ok(),
                (SetKind::Binary, Some(p)) => xi_tuple(*n, *p).ok(),
                _ => None,
            };
            let inputs = json!({
                "set": match set { SetKind::Weak => "weak", SetKind::Binary => "binary", SetKind::Orbit => "orbit" },
                "n": n,
                "p": p,
                "beta": beta.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                "alpha": alpha.as_ref().map(|a| a.to_string()),
            });
            let mut r = Report::new("decompose", inputs, ok);
            r.lhs_terms = Some(m.term_count());
            r.rhs_terms = Some(back.term_count());
            for (g, c) in &d.coefficients {
                r.lines.push(format!("coefficient ({g}): {c}"));
            }
            r.result = Some(json!({
                "set_size": members.len(),
                "coefficients": coefficients,
                "predicted_gamma": predicted.map(|t| t.to_string()),
            }));
            r
        }
        Command::Sweep {
            seed,
            samples,
            criterion,
        } => {
            let cfg = SweepConfig {
                seed: *seed,
                samples: *samples,
            };
            let results = if criterion.is_empty() {
                run_all(&cfg)
            } else {
                criterion
                    .iter()
                    .map(|&id| {
                        run_criterion(id, &cfg).ok_or_else(|| format!("unknown criterion {id}"))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            let ok = results.iter().all(|c| c.passed);
            let mut r = Report::new(
                "sweep",
                json!({"seed": seed, "samples": samples, "criteria": criterion}),
                ok,
            );
            r.lines.extend(results.iter().map(|c| c.to_string()));
            r.result = Some(Value::Array(
                results
                    .iter()
                    .map(|c| {
                        json!({
                            "id": c.id,
                            "name": c.name,
                            "passed": c.passed,
                            "checks": c.checks,
                            "failures": c.failures,
                            "notes": c.notes,
                        })
                    })
                    .collect(),
            ));
            r
        }
    };
    Ok(report)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::VerifyFirst(_) => "verify-first",
        Command::VerifySecond(_) => "verify-second",
        Command::VerifyCor { .. } => "verify-cor",
        Command::ExpandPieri { .. } => "expand-pieri",
        Command::ExpandImmaculate { .. } => "expand-immaculate",
        Command::VerifyImmaculate { .. } => "verify-immaculate",
        Command::VerifyFun { .. } => "verify-fun",
        Command::Decompose { .. } => "decompose",
        Command::Sweep { .. } => "sweep",
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("PREPIERI_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            // only fails if a pool already exists
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            if !cli.no_timing {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable report")
                ),
                Format::Text => println!("{}", report.render_text()),
            }
            if report.equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(msg) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({"command": command_name(&cli.command), "error": msg})
                    )
                    .expect("serializable error")
                ),
                Format::Text => eprintln!("error: {msg}"),
            }
            ExitCode::from(EXIT_USAGE)
        }
    }
}
