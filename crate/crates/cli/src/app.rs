//! Argument handling and command dispatch.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cmreg_core::harness::{family, run_suite, SuiteConfig, SuiteReport, CHECK_IDS};
use cmreg_core::homology::betti_multigraded;
use cmreg_core::resolution::{graded_betti, minimal_resolution, Resolution};
use cmreg_core::{with_field, BettiTable, Error, Field, FieldSpec, PolyIdeal, PolyRing, TermOrder};
use serde_json::{json, Value};
use thiserror::Error as ThisError;

use crate::script::{parse, ParseError, Script};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Homology,
    Resolution,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    Product,
    Intersect,
    Colon,
    Sum,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "cmreg", version, about = "Castelnuovo-Mumford regularity of homogeneous ideals")]
pub struct Cli {
    /// Coefficient field: q or p:<prime>. Overrides the script's `over`.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldSpec>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Engine for monomial regularity and Betti numbers.
    #[arg(long, global = true, value_enum, default_value = "homology")]
    pub engine: Engine,
    /// Script with the ring and bindings; `-` or absent reads stdin.
    #[arg(long, short = 's', global = true)]
    pub script: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Run the command written at the end of the script.
    Run { path: Option<PathBuf> },
    /// Regularity of a bound ideal.
    Reg { name: String },
    /// Graded Betti table of a bound ideal.
    Betti { name: String },
    /// Binary ideal operation.
    Op {
        #[arg(value_enum)]
        op: OpKind,
        a: String,
        b: String,
    },
    /// Reduced Gröbner basis (degrevlex).
    Gb { name: String },
    /// Minimal graded free resolution.
    Resolve { name: String },
    /// Saturation A : B^∞.
    Saturate { a: String, b: String },
    /// Run one seeded check.
    Check {
        id: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
    },
    /// The binomial family for given m, n.
    Family {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Run a suite from a JSON config.
    Suite {
        #[arg(long)]
        config: PathBuf,
    },
}

/// Command words written inside a script.
#[derive(Debug, Parser)]
#[command(name = "statement", no_binary_name = true)]
struct Statement {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{file}: {source}")]
    Parse { file: String, source: ParseError },
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotHomogeneous(_) | Error::InvalidConfig(_) | Error::InvalidField(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Compute(e.to_string()),
        }
    }
}

/// What a finished invocation printed and its exit status.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Run `cmreg` with `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stderr: text,
                    code: 2,
                    ..Output::default()
                }
            } else {
                Output {
                    stdout: text,
                    ..Output::default()
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok((stdout, code)) => Output {
            stdout,
            code,
            ..Output::default()
        },
        Err(e) => Output {
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
            ..Output::default()
        },
    }
}

fn read_source(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<(String, String), CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
            Ok((p.display().to_string(), text))
        }
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            Ok(("<stdin>".to_string(), text))
        }
    }
}

fn load_script(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Script, CliError> {
    let (file, text) = read_source(path, stdin)?;
    parse(&text).map_err(|source| CliError::Parse { file, source })
}

/// Returns the rendered output and the exit status.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(String, i32), CliError> {
    match &cli.command {
        Command::Check {
            id,
            trials,
            seed,
            vars,
            maxdeg,
        } => {
            if !CHECK_IDS.contains(&id.as_str()) {
                return Err(CliError::Usage(format!(
                    "unknown check '{id}'; expected one of {}",
                    CHECK_IDS.join(", ")
                )));
            }
            let mut config = SuiteConfig {
                master_seed: *seed,
                field: cli.field.unwrap_or_default(),
                ..SuiteConfig::default()
            };
            config.limits.nvars = *vars;
            config.limits.max_deg = *maxdeg;
            config.limits.max_ci_gens = config.limits.max_ci_gens.min(*vars);
            config.trials.insert(id.clone(), *trials);
            config.validate()?;
            Ok(suite_output(&run_suite(&config)?, cli.format))
        }
        Command::Suite { config } => {
            let (_, text) = read_source(Some(config), stdin)?;
            let mut config = SuiteConfig::from_json(&text)?;
            if let Some(f) = cli.field {
                config.field = f;
            }
            Ok(suite_output(&run_suite(&config)?, cli.format))
        }
        Command::Family { m, n } => {
            let report = family(*m, *n, cli.field.unwrap_or_default())?;
            let code = if report.matches_predictions() { 0 } else { 1 };
            let out = match cli.format {
                Format::Text => report.render_text(),
                Format::Json => pretty(&report.to_json()),
                Format::Csv => {
                    let mut out = String::from("key,value\n");
                    if let Value::Object(map) = report.to_json() {
                        for (k, v) in map {
                            if !v.is_object() {
                                out.push_str(&format!("{k},{v}\n"));
                            }
                        }
                    }
                    out
                }
            };
            Ok((out, code))
        }
        Command::Run { path } => {
            let script = load_script(path.as_ref().or(cli.script.as_ref()), stdin)?;
            let statement = script
                .command
                .clone()
                .ok_or_else(|| CliError::Usage("the script has no command statement".into()))?;
            let parsed = Statement::try_parse_from(&statement.words).map_err(|e| {
                CliError::Usage(format!(
                    "line {}, column {}: {}",
                    statement.pos.line,
                    statement.pos.col,
                    e.render().to_string().lines().next().unwrap_or("bad command")
                ))
            })?;
            if matches!(
                parsed.command,
                Command::Run { .. } | Command::Check { .. } | Command::Family { .. } | Command::Suite { .. }
            ) {
                return Err(CliError::Usage(format!(
                    "'{}' cannot appear inside a script",
                    statement.words[0]
                )));
            }
            on_script(cli, &script, &parsed.command)
        }
        command => {
            let script = load_script(cli.script.as_ref(), stdin)?;
            on_script(cli, &script, command)
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn suite_output(report: &SuiteReport, format: Format) -> (String, i32) {
    let out = match format {
        Format::Text => report.render_text(),
        Format::Json => pretty(&report.to_json()),
        Format::Csv => report.to_csv(),
    };
    (out, if report.success() { 0 } else { 1 })
}

fn on_script(cli: &Cli, script: &Script, command: &Command) -> Result<(String, i32), CliError> {
    let field = cli.field.or(script.field).unwrap_or_default();
    with_field!(field, |f| Session::new(cli, script, f).run(command))
}

struct Session<'a, F: Field> {
    cli: &'a Cli,
    script: &'a Script,
    ring: PolyRing<F>,
}

impl<'a, F: Field> Session<'a, F> {
    fn new(cli: &'a Cli, script: &'a Script, field: F) -> Self {
        let ring = PolyRing::new(script.vars.clone(), TermOrder::DegRevLex, field);
        Session { cli, script, ring }
    }

    fn ideal(&self, name: &str) -> Result<PolyIdeal<F>, CliError> {
        let binding = self.script.binding(name).ok_or_else(|| {
            let known = self.script.names().join(", ");
            CliError::Usage(format!("no ideal named '{name}' (bound: {known})"))
        })?;
        binding.build(&self.ring).map_err(CliError::Usage)
    }

    fn graded(&self, name: &str) -> Result<PolyIdeal<F>, CliError> {
        let ideal = self.ideal(name)?;
        ideal.require_homogeneous().map_err(|e| {
            CliError::Usage(format!("{name}: graded commands need homogeneous generators ({e})"))
        })?;
        if ideal.is_zero() {
            return Err(CliError::Compute(format!("{name} is the zero ideal")));
        }
        Ok(ideal)
    }

    fn run(&self, command: &Command) -> Result<(String, i32), CliError> {
        let out = match command {
            Command::Reg { name } => {
                let table = self.betti(name)?;
                let reg = table
                    .regularity()
                    .ok_or_else(|| CliError::Compute(format!("{name} has an empty Betti table")))?;
                match self.cli.format {
                    Format::Text => format!("{reg}\n"),
                    Format::Json => pretty(&table.to_json()),
                    Format::Csv => format!("regularity\n{reg}\n"),
                }
            }
            Command::Betti { name } => {
                let table = self.betti(name)?;
                match self.cli.format {
                    Format::Text => table.render_text(),
                    Format::Json => pretty(&table.to_json()),
                    Format::Csv => betti_csv(&table),
                }
            }
            Command::Op { op, a, b } => {
                let (i, j) = (self.ideal(a)?, self.ideal(b)?);
                let result = self.op(*op, &i, &j)?;
                self.ideal_output("ideal", &result)
            }
            Command::Gb { name } => {
                let gb = self.ideal(name)?.reduced();
                self.ideal_output("groebner_basis", &gb)
            }
            Command::Saturate { a, b } => {
                let (i, j) = (self.ideal(a)?, self.ideal(b)?);
                let sat = i.saturation(&j)?;
                self.ideal_output("ideal", &sat)
            }
            Command::Resolve { name } => {
                let res = minimal_resolution(&self.graded(name)?)?;
                self.resolution_output(&res)
            }
            _ => unreachable!("handled without a script"),
        };
        Ok((out, 0))
    }

    fn betti(&self, name: &str) -> Result<BettiTable, CliError> {
        let ideal = self.graded(name)?;
        let monomial = ideal.as_monomial_ideal();
        let spec = self.ring.field().spec();
        let (engine, m) = match monomial {
            Some(m) => (self.cli.engine, m),
            None => return Ok(graded_betti(&ideal)?),
        };
        match engine {
            Engine::Homology => Ok(betti_multigraded(&m, spec)?),
            Engine::Resolution => Ok(graded_betti(&ideal)?),
            Engine::Both => {
                let h = betti_multigraded(&m, spec)?;
                let r = graded_betti(&ideal)?;
                if h.graded_eq(&r) {
                    Ok(h)
                } else {
                    Err(CliError::Compute(format!(
                        "engines disagree on {name}\nhomology:\n{}resolution:\n{}",
                        h.render_text(),
                        r.render_text()
                    )))
                }
            }
        }
    }

    fn op(&self, op: OpKind, i: &PolyIdeal<F>, j: &PolyIdeal<F>) -> Result<PolyIdeal<F>, CliError> {
        if let (Some(a), Some(b)) = (i.as_monomial_ideal(), j.as_monomial_ideal()) {
            let m = match op {
                OpKind::Product => a.product(&b)?,
                OpKind::Intersect => a.intersect(&b)?,
                OpKind::Colon => a.colon(&b)?,
                OpKind::Sum => a.sum(&b)?,
            };
            return Ok(PolyIdeal::from_monomial_ideal(&self.ring, &m)?);
        }
        Ok(match op {
            OpKind::Product => i.product(j).reduced(),
            OpKind::Intersect => i.intersect(j)?,
            OpKind::Colon => i.colon(j)?,
            OpKind::Sum => i.sum(j).reduced(),
        })
    }

    fn ideal_output(&self, key: &str, ideal: &PolyIdeal<F>) -> String {
        let gens: Vec<String> = ideal.gens().iter().map(|g| self.ring.render(g)).collect();
        match self.cli.format {
            Format::Text => format!("{}\n", ideal.render()),
            Format::Json => pretty(&json!({ key: gens, "ring": self.ring.names() })),
            Format::Csv => {
                let mut out = String::from("generator\n");
                for g in gens {
                    out.push_str(&format!("\"{g}\"\n"));
                }
                out
            }
        }
    }

    fn resolution_output(&self, res: &Resolution<F>) -> String {
        let table = res.betti_table();
        match self.cli.format {
            Format::Text => {
                let ranks: Vec<String> = res.ranks().iter().map(|r| format!("S^{r}")).collect();
                let mut out = format!("S <- {}\n", ranks.join(" <- "));
                for (k, step) in res.steps().iter().enumerate() {
                    out.push_str(&format!("d{}:\n", k + 1));
                    for r in 0..step.nrows() {
                        let row: Vec<String> =
                            (0..step.ncols()).map(|c| self.ring.render(step.entry(r, c))).collect();
                        out.push_str(&format!("  [{}]\n", row.join(", ")));
                    }
                }
                out.push_str(&table.render_text());
                out
            }
            Format::Json => {
                let mut v = table.to_json();
                let diffs: Vec<Vec<Vec<String>>> = res
                    .steps()
                    .iter()
                    .map(|s| {
                        (0..s.nrows())
                            .map(|r| (0..s.ncols()).map(|c| self.ring.render(s.entry(r, c))).collect())
                            .collect()
                    })
                    .collect();
                v["ranks"] = json!(res.ranks());
                v["differentials"] = json!(diffs);
                pretty(&v)
            }
            Format::Csv => betti_csv(&table),
        }
    }
}

fn betti_csv(table: &BettiTable) -> String {
    let mut out = String::from("i,degree,rank\n");
    for e in table.entries() {
        out.push_str(&format!("{},{},{}\n", e.i, e.degree, e.rank));
    }
    out
}
