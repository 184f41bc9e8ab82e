use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lattice_det::diagram::{ferrers, LatticeDiagram};
use lattice_det::mspace::{hilbert, HilbertTable};
use lattice_det::operators::{expand, Axis, StageOrder};
use lattice_det::oracle::{
    run_suite, verify_instance_ordered, OperatorKind, SuiteConfig, SuiteSummary, VerificationReport,
};
use lattice_det::tableau::{
    enumerate_column_families, enumerate_cs_tableaux, psi, psi_explained, ColumnTableauFamily,
    PsiOutcome, ShapeOrbit,
};
use lattice_det::{Composition, Error, Partition, Polynomial};
use serde_json::{json, Value};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "latdet",
    version,
    about = "Lattice diagram determinants and symmetric differential operators"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the determinant of a lattice diagram.
    Delta {
        /// Cells as `p,q;p,q;...`.
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
    },
    /// Apply an operator by moving cells.
    Apply {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Also print the polynomial the sum expands to.
        #[arg(long)]
        expand: bool,
    },
    /// Compare the cell-movement rule with direct differentiation.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = Order::RightToLeft, hide = true)]
        stage_order: Order,
    },
    /// List column-strict tableaux of a shape, or column families of a composition.
    Tableaux {
        /// Partition shape, e.g. `2,1`.
        #[arg(long, conflicts_with = "columns")]
        shape: Option<String>,
        /// Column lengths of a column family, e.g. `1,3,2`.
        #[arg(long)]
        columns: Option<String>,
        /// Largest allowed entry.
        #[arg(long)]
        n: usize,
    },
    /// Apply the sign-reversing involution to a column tableau family.
    Psi {
        /// Columns bottom to top, e.g. `7,8,10|3,9|4,5,6,8`.
        #[arg(long)]
        tableau: String,
        /// The partition whose conjugate's orbit contains the shape.
        #[arg(long)]
        shape_lambda: String,
        /// Largest allowed entry; defaults to the largest entry present.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Bigraded dimensions of the span of all derivatives of the determinant.
    Hilbert {
        #[arg(long, conflicts_with = "ferrers", required_unless_present = "ferrers")]
        diagram: Option<String>,
        /// Use the Ferrers diagram of this partition.
        #[arg(long)]
        ferrers: Option<String>,
    },
    /// Run the exhaustive oracle comparison.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long, value_enum)]
    op: Op,
    /// Degree `k`, or a partition / composition such as `2,1`.
    #[arg(long)]
    param: String,
    #[arg(long, value_enum, default_value_t = AxisArg::X)]
    axis: AxisArg,
    #[arg(long, allow_hyphen_values = true)]
    diagram: String,
}

#[derive(Args)]
struct SuiteArgs {
    /// Config file of `key=value` lines; flags override it.
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    max_cells: Option<usize>,
    #[arg(long)]
    box_rows: Option<usize>,
    #[arg(long)]
    box_cols: Option<usize>,
    #[arg(long)]
    max_weight: Option<usize>,
    /// Comma-separated subset of `x,y`.
    #[arg(long)]
    axes: Option<String>,
    /// Comma-separated subset of `p,e,h,s,ealpha`.
    #[arg(long)]
    operators: Option<String>,
    /// Keep going after the first failure.
    #[arg(long)]
    exhaustive: bool,
    /// Apply columns left to right instead of right to left.
    #[arg(long, hide = true)]
    mutate_stage_order: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    P,
    E,
    H,
    S,
    Ealpha,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::P => "p",
            Op::E => "e",
            Op::H => "h",
            Op::S => "s",
            Op::Ealpha => "ealpha",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    X,
    Y,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Axis {
        match a {
            AxisArg::X => Axis::X,
            AxisArg::Y => Axis::Y,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    RightToLeft,
    LeftToRight,
}

impl From<Order> for StageOrder {
    fn from(o: Order) -> StageOrder {
        match o {
            Order::RightToLeft => StageOrder::RightToLeft,
            Order::LeftToRight => StageOrder::LeftToRight,
        }
    }
}

/// What a command produced: text and JSON renderings plus whether it passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
                );
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => ExitCode::from(EXIT_MISMATCH),
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}

fn run(command: Command) -> lattice_det::Result<Output> {
    match command {
        Command::Delta { diagram } => cmd_delta(&diagram),
        Command::Apply { instance, expand } => cmd_apply(&instance, expand),
        Command::Verify {
            instance,
            stage_order,
        } => cmd_verify(&instance, stage_order.into()),
        Command::Tableaux { shape, columns, n } => cmd_tableaux(shape, columns, n),
        Command::Psi {
            tableau,
            shape_lambda,
            n,
        } => cmd_psi(&tableau, &shape_lambda, n),
        Command::Hilbert { diagram, ferrers } => cmd_hilbert(diagram, ferrers),
        Command::Suite(args) => cmd_suite(&args),
    }
}

fn signed_delta(l: &LatticeDiagram, sign: i64) -> lattice_det::Result<Polynomial> {
    let d = lattice_det::delta(l)?;
    Ok(if sign < 0 { -&d } else { d })
}

fn cmd_delta(diagram: &str) -> lattice_det::Result<Output> {
    let (l, sign) = LatticeDiagram::parse_signed(diagram)?;
    let poly = signed_delta(&l, sign)?;
    Ok(Output::ok(
        poly.to_string(),
        json!({ "diagram": diagram, "delta": poly.to_string() }),
    ))
}

fn parse_instance(
    args: &InstanceArgs,
) -> lattice_det::Result<(OperatorKind, LatticeDiagram, i64, Axis)> {
    let op = OperatorKind::from_parts(args.op.name(), &args.param)?;
    let (l, sign) = LatticeDiagram::parse_signed(&args.diagram)?;
    Ok((op, l, sign, args.axis.into()))
}

fn cmd_apply(args: &InstanceArgs, with_expansion: bool) -> lattice_det::Result<Output> {
    let (op, l, sign, axis) = parse_instance(args)?;
    let sum = op.apply(&l, axis, StageOrder::RightToLeft)?.scaled(sign);
    let mut text = sum.to_string();
    let mut value = json!({
        "operator": op.to_string(),
        "axis": axis.to_string(),
        "diagram": l.to_string(),
        "sum": sum.to_json(),
    });
    if with_expansion {
        let poly = expand(&sum, l.len())?;
        text.push_str(&format!("\n= {poly}"));
        value["polynomial"] = json!(poly.to_string());
    }
    Ok(Output::ok(text, value))
}

fn report_json(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn cmd_verify(args: &InstanceArgs, order: StageOrder) -> lattice_det::Result<Output> {
    let (op, l, _, axis) = parse_instance(args)?;
    let report = verify_instance_ordered(&op, &l, axis, order)?;
    Ok(Output {
        text: report.to_string(),
        json: report_json(&report),
        ok: report.matches,
    })
}

fn cmd_tableaux(
    shape: Option<String>,
    columns: Option<String>,
    n: usize,
) -> lattice_det::Result<Output> {
    let list = match (shape, columns) {
        (Some(s), _) => enumerate_cs_tableaux(&s.parse::<Partition>()?, n),
        (None, Some(c)) => enumerate_column_families(&c.parse::<Composition>()?, n),
        (None, None) => return Err(Error::Usage("give --shape or --columns".into())),
    };
    let lines: Vec<String> = list.iter().map(ToString::to_string).collect();
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    text.push_str(&format!("count: {}", list.len()));
    Ok(Output::ok(
        text,
        json!({ "count": list.len(), "tableaux": lines }),
    ))
}

fn cmd_psi(tableau: &str, lambda: &str, n: Option<usize>) -> lattice_det::Result<Output> {
    let t = ColumnTableauFamily::parse(tableau, n)?;
    let lambda: Partition = lambda.parse()?;
    let orbit = ShapeOrbit::new(&lambda);
    let outcome = psi_explained(&t, &orbit)?;
    let image = outcome.image(&t).clone();
    let back = psi(&image, &orbit)?;
    let involution = back == t;
    let shape = orbit
        .lookup(&t.shape())
        .expect("psi_explained checked the orbit");
    let image_shape = orbit.lookup(&image.shape()).expect("psi keeps the orbit");

    let mut text = vec![
        format!("T        = {t}"),
        format!("λ′       = ({})", orbit.lambda_conj),
        format!("shape    = ({})  sign {:+}", shape.alpha, shape.sign),
    ];
    let mut value = json!({
        "tableau": t.to_string(),
        "lambda_conjugate": orbit.lambda_conj.to_string(),
        "shape": shape.alpha.to_string(),
        "sign": shape.sign,
        "image": image.to_string(),
        "image_shape": image_shape.alpha.to_string(),
        "image_sign": image_shape.sign,
        "involution_holds": involution,
    });
    match &outcome {
        PsiOutcome::Fixed => {
            text.push(format!("Ψ(T)     = {image}  FIXED"));
            value["fixed"] = json!(true);
        }
        PsiOutcome::Moved {
            row,
            j,
            before,
            after,
            ..
        } => {
            text.push(format!(
                "violation at row {}, columns {} and {}",
                row + 1,
                j + 1,
                j + 2
            ));
            text.push(format!("w        = {}", before.word_string()));
            text.push(format!("ŵ before = {}", before.paren_string()));
            text.push(format!("ŵ after  = {}", after.paren_string()));
            text.push(format!("Ψ(T)     = {image}"));
            text.push(format!(
                "shape    = ({})  sign {:+}",
                image_shape.alpha, image_shape.sign
            ));
            value["fixed"] = json!(false);
            value["row"] = json!(row + 1);
            value["column"] = json!(j + 1);
            value["word"] = json!(before.word_string());
            value["paren_before"] = json!(before.paren_string());
            value["paren_after"] = json!(after.paren_string());
        }
    }
    text.push(format!("Ψ(Ψ(T)) = T: {involution}"));
    Ok(Output {
        text: text.join("\n"),
        json: value,
        ok: involution,
    })
}

fn cmd_hilbert(diagram: Option<String>, mu: Option<String>) -> lattice_det::Result<Output> {
    let l = match (diagram, mu) {
        (Some(d), _) => d.parse::<LatticeDiagram>()?,
        (None, Some(m)) => ferrers(&m.parse::<Partition>()?),
        (None, None) => return Err(Error::Usage("give --diagram or --ferrers".into())),
    };
    let table: HilbertTable = hilbert(&l)?;
    let mut value = table.to_json();
    value["diagram"] = json!(l.to_string());
    Ok(Output::ok(table.to_tsv().trim_end().to_string(), value))
}

fn suite_config(args: &SuiteArgs) -> lattice_det::Result<SuiteConfig> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Usage(format!("cannot read config {path}: {e}")))?;
            SuiteConfig::parse(&text)?
        }
        None => SuiteConfig::default(),
    };
    let numbers = [
        ("max_cells", args.max_cells),
        ("box_rows", args.box_rows),
        ("box_cols", args.box_cols),
        ("max_weight", args.max_weight),
    ];
    for (key, value) in numbers {
        if let Some(v) = value {
            config.set(key, &v.to_string())?;
        }
    }
    if let Some(a) = &args.axes {
        config.set("axes", a)?;
    }
    if let Some(o) = &args.operators {
        config.set("operators", o)?;
    }
    if args.exhaustive {
        config.fail_fast = false;
    }
    if args.mutate_stage_order {
        config.stage_order = StageOrder::LeftToRight;
    }
    Ok(config)
}

fn cmd_suite(args: &SuiteArgs) -> lattice_det::Result<Output> {
    let config = suite_config(args)?;
    let summary: SuiteSummary = run_suite(&config)?;
    let value = json!({
        "config": config,
        "total": summary.total,
        "passed": summary.passed,
        "failed": summary.failed,
        "first_failure": summary.first_failure.as_ref().map(report_json),
    });
    Ok(Output {
        text: summary.to_string(),
        ok: summary.all_passed(),
        json: value,
    })
}
