mod commands;
mod report;
mod reproduce;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::{CmdResult, FormChoice, SweepRanges};
use lefschetz::lefschetz::Property;
use report::Report;
use std::process::ExitCode;
use std::time::Instant;

/// Weak and strong Lefschetz properties of monomial modules, with exact
/// arithmetic throughout.
#[derive(Parser, Debug)]
#[command(name = "lefschetz", version)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        value_enum,
        env = "LEFSCHETZ_FORMAT",
        default_value = "text",
        global = true
    )]
    format: Format,
    /// Report runtime_ms as 0, making output byte-identical across runs.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ModuleArgs {
    /// Numerator ideal I, e.g. "x^3, y^4".
    #[arg(long, default_value = "1")]
    num: String,
    /// Denominator ideal J; the module is (I + J)/J.
    #[arg(long)]
    den: String,
    /// Number of variables (default: the highest variable mentioned).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    nvars: Option<u8>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyArg {
    Wlp,
    Slp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SweepTarget {
    MainThm,
    Pipeline,
    LgvOracle,
    Type2,
    CsmForms,
    Tensor,
    Lemmas,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReproduceTarget {
    #[value(name = "example-1var")]
    Example1Var,
    ExampleLex,
    #[value(name = "example-3var")]
    Example3Var,
    RemarkTensor,
    #[value(name = "section4-csm")]
    Section4Csm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert series of (I + J)/J and its shape.
    Hilbert(ModuleArgs),
    /// Decide the WLP or SLP of (I + J)/J.
    Check {
        property: PropertyArg,
        #[command(flatten)]
        module: ModuleArgs,
        /// Coefficients of the linear form (default: all ones).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        linear_form: Option<Vec<i64>>,
        /// Extra random linear forms to test.
        #[arg(long, default_value_t = 0)]
        random_forms: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Central simple modules of S/I with respect to a variable.
    Csm {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "x")]
        var: String,
        /// Also evaluate the central-simple-module SLP criterion.
        #[arg(long)]
        criterion: bool,
    },
    /// Binomial determinant and positivity for ascending sequences.
    Lgv {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        a: Vec<i64>,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        b: Vec<i64>,
        /// Count non-intersecting lattice path families by enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Binomial-matrix rank certificate for one map of I/(x^a, y^b).
    Pipeline {
        /// Numerator ideal in x, y.
        #[arg(long)]
        num: String,
        #[arg(short, long)]
        a: u32,
        #[arg(short, long)]
        b: u32,
        /// Source degree.
        #[arg(short, long)]
        i: u32,
        /// Power of x + y.
        #[arg(short, long)]
        d: u32,
    },
    /// Run a parameter sweep.
    Sweep {
        target: SweepTarget,
        #[arg(long, default_value_t = 6)]
        max_a: u32,
        #[arg(long, default_value_t = 6)]
        max_b: u32,
        /// Parameter bound for type2, csm-forms, tensor and lemmas.
        #[arg(long)]
        max: Option<u32>,
        #[arg(long, default_value_t = 7)]
        max_value: i64,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Recompute a worked example and compare with its stated outcome.
    Reproduce { target: ReproduceTarget },
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn dispatch(command: &Command) -> (String, CmdResult) {
    match command {
        Command::Hilbert(m) => (
            "hilbert".into(),
            commands::hilbert(&m.num, &m.den, m.nvars.map(usize::from)),
        ),
        Command::Check {
            property,
            module,
            linear_form,
            random_forms,
            seed,
        } => {
            let p = match property {
                PropertyArg::Wlp => Property::Weak,
                PropertyArg::Slp => Property::Strong,
            };
            let forms = FormChoice {
                linear_form: linear_form.as_deref(),
                random_forms: *random_forms,
                seed: *seed,
            };
            (
                format!("check {}", value_name(*property)),
                commands::check(
                    p,
                    &module.num,
                    &module.den,
                    module.nvars.map(usize::from),
                    &forms,
                ),
            )
        }
        Command::Csm {
            ideal,
            var,
            criterion,
        } => ("csm".into(), commands::csm(ideal, var, *criterion)),
        Command::Lgv { a, b, oracle } => ("lgv".into(), commands::lgv(a, b, *oracle)),
        Command::Pipeline { num, a, b, i, d } => {
            ("pipeline".into(), commands::pipeline(num, *a, *b, *i, *d))
        }
        Command::Sweep {
            target,
            max_a,
            max_b,
            max,
            max_value,
            max_len,
            jobs,
        } => {
            let name = value_name(*target);
            let ranges = SweepRanges {
                max_a: *max_a,
                max_b: *max_b,
                max: *max,
                max_value: *max_value,
                max_len: *max_len,
                jobs: *jobs,
            };
            let r = commands::sweep(&name, &ranges);
            (format!("sweep {name}"), r)
        }
        Command::Reproduce { target } => {
            let name = value_name(*target);
            let r = reproduce::run(&name);
            (format!("reproduce {name}"), r)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (command, outcome) = dispatch(&cli.command);
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let runtime_ms = if cli.deterministic {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    let report = Report {
        command,
        inputs: outcome.inputs,
        result: outcome.result,
        failures: outcome.failures,
        runtime_ms,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
