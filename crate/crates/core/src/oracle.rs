//! Brute-force checking of the cell-movement rules against honest symbolic
//! differentiation of `Δ_L`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::diagram::{delta, Cell, LatticeDiagram, SignedDiagramSum};
use crate::error::{parse_err, Error, Result};
use crate::operators::{
    apply_e_alpha_ordered, apply_elementary, apply_homogeneous_complement, apply_power_sum,
    apply_schur_ordered, expand, Axis, StageOrder,
};
use crate::partition::{Composition, Partition};
use crate::poly::Polynomial;
use crate::symfun;

/// A symmetric operator together with its parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OperatorKind {
    PowerSum(usize),
    Elementary(usize),
    Homogeneous(usize),
    Schur(Partition),
    EAlpha(Composition),
}

impl OperatorKind {
    /// Builds an operator from a family letter (`p`, `e`, `h`, `s`, `ealpha`)
    /// and its textual parameter.
    pub fn from_parts(op: &str, param: &str) -> Result<OperatorKind> {
        let degree = || -> Result<usize> {
            let k: usize = param
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {param:?}")))?;
            if k == 0 {
                return parse_err("operator degree must be at least 1");
            }
            Ok(k)
        };
        Ok(match op.trim() {
            "p" => OperatorKind::PowerSum(degree()?),
            "e" => OperatorKind::Elementary(degree()?),
            "h" => OperatorKind::Homogeneous(degree()?),
            "s" => OperatorKind::Schur(param.parse()?),
            "ealpha" => OperatorKind::EAlpha(param.parse()?),
            other => return parse_err(format!("unknown operator {other:?}")),
        })
    }

    pub fn family(&self) -> OperatorFamily {
        match self {
            OperatorKind::PowerSum(_) => OperatorFamily::PowerSum,
            OperatorKind::Elementary(_) => OperatorFamily::Elementary,
            OperatorKind::Homogeneous(_) => OperatorFamily::Homogeneous,
            OperatorKind::Schur(_) => OperatorFamily::Schur,
            OperatorKind::EAlpha(_) => OperatorFamily::EAlpha,
        }
    }

    /// The operator as a polynomial in `x1..xn`.
    pub fn symmetric_polynomial(&self, n: usize) -> Polynomial {
        match self {
            OperatorKind::PowerSum(k) => symfun::power_sum(*k, n),
            OperatorKind::Elementary(k) => symfun::elementary(*k as i64, n),
            OperatorKind::Homogeneous(k) => symfun::homogeneous(*k, n),
            OperatorKind::Schur(lambda) => symfun::schur_jacobi_trudi(lambda, n),
            OperatorKind::EAlpha(alpha) => symfun::elementary_product(alpha, n),
        }
    }

    /// The combinatorial rule. `order` only matters for tableau-based rules.
    pub fn apply(
        &self,
        l: &LatticeDiagram,
        axis: Axis,
        order: StageOrder,
    ) -> Result<SignedDiagramSum> {
        match self {
            OperatorKind::PowerSum(k) => apply_power_sum(*k, l, axis),
            OperatorKind::Elementary(k) => apply_elementary(*k, l, axis),
            OperatorKind::Homogeneous(k) => apply_homogeneous_complement(*k, l, axis),
            OperatorKind::Schur(lambda) => apply_schur_ordered(lambda, l, axis, order),
            OperatorKind::EAlpha(alpha) => apply_e_alpha_ordered(alpha, l, axis, order),
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::PowerSum(k) => write!(f, "p{k}"),
            OperatorKind::Elementary(k) => write!(f, "e{k}"),
            OperatorKind::Homogeneous(k) => write!(f, "h{k}"),
            OperatorKind::Schur(l) => write!(f, "s[{l}]"),
            OperatorKind::EAlpha(a) => write!(f, "e[{a}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OperatorFamily {
    PowerSum,
    Elementary,
    Homogeneous,
    Schur,
    EAlpha,
}

impl OperatorFamily {
    pub const ALL: [OperatorFamily; 5] = [
        OperatorFamily::PowerSum,
        OperatorFamily::Elementary,
        OperatorFamily::Homogeneous,
        OperatorFamily::Schur,
        OperatorFamily::EAlpha,
    ];

    /// Every operator of this family with weight `1..=max_weight`.
    pub fn instances(self, max_weight: usize) -> Vec<OperatorKind> {
        match self {
            OperatorFamily::PowerSum => (1..=max_weight).map(OperatorKind::PowerSum).collect(),
            OperatorFamily::Elementary => (1..=max_weight).map(OperatorKind::Elementary).collect(),
            OperatorFamily::Homogeneous => {
                (1..=max_weight).map(OperatorKind::Homogeneous).collect()
            }
            OperatorFamily::Schur => Partition::all_up_to(max_weight)
                .into_iter()
                .map(OperatorKind::Schur)
                .collect(),
            OperatorFamily::EAlpha => (1..=max_weight)
                .flat_map(Composition::all_positive_of)
                .map(OperatorKind::EAlpha)
                .collect(),
        }
    }
}

impl fmt::Display for OperatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorFamily::PowerSum => "p",
            OperatorFamily::Elementary => "e",
            OperatorFamily::Homogeneous => "h",
            OperatorFamily::Schur => "s",
            OperatorFamily::EAlpha => "ealpha",
        })
    }
}

impl FromStr for OperatorFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "p" => OperatorFamily::PowerSum,
            "e" => OperatorFamily::Elementary,
            "h" => OperatorFamily::Homogeneous,
            "s" => OperatorFamily::Schur,
            "ealpha" => OperatorFamily::EAlpha,
            other => return parse_err(format!("unknown operator family {other:?}")),
        })
    }
}

/// A monomial whose coefficient differs between the two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub monomial: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub diagram: LatticeDiagram,
    pub operator: String,
    pub axis: Axis,
    pub expected: Polynomial,
    pub actual: Polynomial,
    pub matches: bool,
    pub witness: Option<Witness>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.matches { "MATCH" } else { "MISMATCH" };
        writeln!(
            f,
            "{status} {}(∂{}) on [{}]",
            self.operator, self.axis, self.diagram
        )?;
        writeln!(f, "  expected: {}", self.expected)?;
        write!(f, "  actual:   {}", self.actual)?;
        if let Some(w) = &self.witness {
            write!(
                f,
                "\n  witness:  {} (expected coefficient {}, actual {})",
                w.monomial, w.expected, w.actual
            )?;
        }
        Ok(())
    }
}

/// Picks a differing monomial, preferring one that appears on one side only.
fn find_witness(expected: &Polynomial, actual: &Polynomial) -> Option<Witness> {
    let diff = expected.checked_sub(actual).ok()?;
    let pick = diff
        .terms()
        .map(|(m, _)| m)
        .find(|m| {
            expected.coefficient(m).numer().sign() == num_bigint::Sign::NoSign
                || actual.coefficient(m).numer().sign() == num_bigint::Sign::NoSign
        })
        .or_else(|| diff.terms().map(|(m, _)| m).next())?;
    Some(Witness {
        monomial: pick.to_string(),
        expected: expected.coefficient(pick).to_string(),
        actual: actual.coefficient(pick).to_string(),
    })
}

fn report(
    op: &OperatorKind,
    l: &LatticeDiagram,
    axis: Axis,
    expected: Polynomial,
    actual: Polynomial,
) -> VerificationReport {
    let witness = find_witness(&expected, &actual);
    VerificationReport {
        diagram: l.clone(),
        operator: op.to_string(),
        axis,
        matches: witness.is_none(),
        expected,
        actual,
        witness,
    }
}

pub fn verify_instance(
    op: &OperatorKind,
    l: &LatticeDiagram,
    axis: Axis,
) -> Result<VerificationReport> {
    verify_instance_ordered(op, l, axis, StageOrder::RightToLeft)
}

pub fn verify_instance_ordered(
    op: &OperatorKind,
    l: &LatticeDiagram,
    axis: Axis,
    order: StageOrder,
) -> Result<VerificationReport> {
    let n = l.len();
    let operator = symfun::in_axis(&op.symmetric_polynomial(n), axis);
    let expected = delta(l)?.apply_diff_operator(&operator)?;
    let actual = expand(&op.apply(l, axis, order)?, n)?;
    Ok(report(op, l, axis, expected, actual))
}

/// All diagrams with `1..=max_cells` distinct cells inside the box of
/// `box_rows × box_cols` cells, by size and then lexicographically.
pub fn enumerate_universe(
    max_cells: usize,
    box_rows: usize,
    box_cols: usize,
) -> Vec<LatticeDiagram> {
    let cells: Vec<Cell> = (0..box_cols as i64)
        .flat_map(|q| (0..box_rows as i64).map(move |p| Cell::new(p, q)))
        .collect();
    (1..=max_cells.min(cells.len()))
        .flat_map(|k| {
            cells
                .iter()
                .copied()
                .combinations(k)
                .map(|c| {
                    LatticeDiagram::from_sorted(c).expect("box cells are generated in lex order")
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub max_cells: usize,
    pub box_rows: usize,
    pub box_cols: usize,
    pub max_weight: usize,
    pub axes: Vec<Axis>,
    pub operators: Vec<OperatorFamily>,
    pub fail_fast: bool,
    /// Left-to-right exists only to demonstrate a failing suite.
    pub stage_order: StageOrder,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_cells: 4,
            box_rows: 3,
            box_cols: 3,
            max_weight: 3,
            axes: vec![Axis::X, Axis::Y],
            operators: OperatorFamily::ALL.to_vec(),
            fail_fast: true,
            stage_order: StageOrder::RightToLeft,
        }
    }
}

impl SuiteConfig {
    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        let number = || {
            value.parse::<usize>().map_err(|_| {
                Error::Parse(format!(
                    "{key} expects a nonnegative integer, got {value:?}"
                ))
            })
        };
        match key.trim() {
            "max_cells" => self.max_cells = number()?,
            "box_rows" => self.box_rows = number()?,
            "box_cols" => self.box_cols = number()?,
            "max_weight" => self.max_weight = number()?,
            "axes" => {
                self.axes = value.split(',').map(str::parse).collect::<Result<_>>()?;
            }
            "operators" => {
                self.operators = value.split(',').map(str::parse).collect::<Result<_>>()?;
            }
            "fail_fast" => {
                self.fail_fast = match value {
                    "true" | "1" | "yes" => true,
                    "false" | "0" | "no" => false,
                    _ => return parse_err(format!("fail_fast expects true/false, got {value:?}")),
                }
            }
            "stage_order" => {
                self.stage_order = match value {
                    "right-to-left" => StageOrder::RightToLeft,
                    "left-to-right" => StageOrder::LeftToRight,
                    _ => return parse_err(format!("unknown stage_order {value:?}")),
                }
            }
            other => return parse_err(format!("unknown config key {other:?}")),
        }
        Ok(())
    }

    /// Line-oriented `key=value`; `#` starts a comment. Unset keys keep their
    /// defaults.
    pub fn parse(text: &str) -> Result<SuiteConfig> {
        let mut config = SuiteConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", lineno + 1)))?;
            config.set(key, value)?;
        }
        Ok(config)
    }

    pub fn to_text(&self) -> String {
        let order = match self.stage_order {
            StageOrder::RightToLeft => "right-to-left",
            StageOrder::LeftToRight => "left-to-right",
        };
        format!(
            "max_cells={}\nbox_rows={}\nbox_cols={}\nmax_weight={}\naxes={}\noperators={}\nfail_fast={}\nstage_order={}\n",
            self.max_cells,
            self.box_rows,
            self.box_cols,
            self.max_weight,
            self.axes.iter().join(","),
            self.operators.iter().join(","),
            self.fail_fast,
            order
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<VerificationReport>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "instances: {}  passed: {}  failed: {}",
            self.total, self.passed, self.failed
        )?;
        if let Some(r) = &self.first_failure {
            write!(f, "\nfirst failure:\n{r}")?;
        }
        Ok(())
    }
}

/// Checks every (diagram, axis, operator) combination of the configuration
/// in a fixed order.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteSummary> {
    let universe = enumerate_universe(config.max_cells, config.box_rows, config.box_cols);
    let operators: Vec<OperatorKind> = config
        .operators
        .iter()
        .flat_map(|f| f.instances(config.max_weight))
        .collect();
    let mut polys: HashMap<(usize, usize, Axis), Polynomial> = HashMap::new();
    let mut summary = SuiteSummary {
        total: 0,
        passed: 0,
        failed: 0,
        first_failure: None,
    };
    for l in &universe {
        let n = l.len();
        let det = delta(l)?;
        for &axis in &config.axes {
            for (k, op) in operators.iter().enumerate() {
                let operator = polys
                    .entry((k, n, axis))
                    .or_insert_with(|| symfun::in_axis(&op.symmetric_polynomial(n), axis));
                let expected = det.apply_diff_operator(operator)?;
                let actual = expand(&op.apply(l, axis, config.stage_order)?, n)?;
                let r = report(op, l, axis, expected, actual);
                summary.total += 1;
                if r.matches {
                    summary.passed += 1;
                } else {
                    summary.failed += 1;
                    if summary.first_failure.is_none() {
                        summary.first_failure = Some(r);
                    }
                    if config.fail_fast {
                        return Ok(summary);
                    }
                }
            }
        }
    }
    Ok(summary)
}
