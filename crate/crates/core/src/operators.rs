//! Symmetric differential operators acting on lattice diagram determinants
//! through cell movements.
//!
//! Every rule is first written for the X alphabet, where an operator only
//! lowers cells inside their own column. Tableau and subset entries always
//! name cells by their 1-based lex position in the original diagram. This is
//! stable: a stage lowers each cell by at most one row, so two cells of the
//! same column can only swap order by colliding first, and cells of
//! different columns keep their `q` and therefore their relative order.
//!
//! Y-operators go through transposition. With `(Lᵗ, s₀) = transpose(L)`,
//! `f(∂Y)Δ_L = s₀ · swap(f(∂X)Δ_{Lᵗ})`, and each output diagram `D` becomes
//! `Dᵗ` with the extra sign `s_D` of its own transposition.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::diagram::{
    cells_epsilon, complement_cells, delta_with_cap, normalize, transpose, Cell, LatticeDiagram,
    SignedDiagramSum, DEFAULT_DELTA_CAP,
};
use crate::error::{usage, Result};
use crate::partition::{Composition, Partition};
use crate::poly::Polynomial;
use crate::tableau::{
    enumerate_column_families, enumerate_cs_tableaux, ColumnTableauFamily, ShapeOrbit,
};

pub use crate::poly::Axis;

/// Order in which the columns of a tableau are applied when computing `ε′`.
/// Only right-to-left is correct; the other order exists to show that.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum StageOrder {
    #[default]
    RightToLeft,
    LeftToRight,
}

/// The sequence of intermediate cell lists produced while applying a tableau
/// to a diagram, column by column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MovePlan {
    /// `stages[k]` is the cell list after the `k+1`-th applied column, cells
    /// kept in their original positions (not re-sorted).
    pub stages: Vec<Vec<Cell>>,
    /// `ε′(T, L)`: every stage has distinct cells in the positive quadrant.
    pub epsilon_prime: bool,
    /// `∂T(L)`, cell `i` lowered by `|T^{-1}(i)|`.
    pub result: Vec<Cell>,
}

impl MovePlan {
    pub fn coefficient(&self) -> i64 {
        i64::from(self.epsilon_prime)
    }
}

fn require_epsilon(l: &LatticeDiagram) -> Result<()> {
    if l.is_empty() || !l.epsilon() {
        return usage(format!(
            "diagram [{l}] must have distinct cells in the positive quadrant"
        ));
    }
    Ok(())
}

/// Lowers every listed cell (1-based lex positions) by one row.
fn lower(cells: &mut [Cell], entries: &[usize]) {
    for &i in entries {
        cells[i - 1].p -= 1;
    }
}

pub fn epsilon_prime(t: &ColumnTableauFamily, l: &LatticeDiagram) -> Result<MovePlan> {
    epsilon_prime_ordered(t, l, StageOrder::RightToLeft)
}

pub fn epsilon_prime_ordered(
    t: &ColumnTableauFamily,
    l: &LatticeDiagram,
    order: StageOrder,
) -> Result<MovePlan> {
    if let Some(&e) = t.columns().iter().flatten().find(|&&e| e > l.len()) {
        return usage(format!(
            "tableau entry {e} does not name a cell of a {}-cell diagram",
            l.len()
        ));
    }
    let columns: Vec<&Vec<usize>> = match order {
        StageOrder::RightToLeft => t.columns().iter().rev().collect(),
        StageOrder::LeftToRight => t.columns().iter().collect(),
    };
    let mut cells = l.cells().to_vec();
    let mut stages = Vec::with_capacity(columns.len());
    let mut ok = true;
    for col in columns {
        lower(&mut cells, col);
        ok &= cells_epsilon(&cells);
        stages.push(cells.clone());
    }
    Ok(MovePlan {
        stages,
        epsilon_prime: ok,
        result: cells,
    })
}

/// Runs an X-rule directly, or a Y-rule through transposition.
fn on_axis(
    l: &LatticeDiagram,
    axis: Axis,
    rule: impl Fn(&LatticeDiagram) -> Result<SignedDiagramSum>,
) -> Result<SignedDiagramSum> {
    require_epsilon(l)?;
    match axis {
        Axis::X => rule(l),
        Axis::Y => {
            let (lt, s0) = transpose(l);
            let mut out = SignedDiagramSum::new();
            for (d, c) in rule(&lt)?.terms() {
                let (dt, sd) = transpose(d);
                out.add(dt, s0 * sd * c);
            }
            Ok(out)
        }
    }
}

/// `p_k(∂)`: cell `i` drops `k` rows; the sign re-sorts the result.
pub fn apply_power_sum(k: usize, l: &LatticeDiagram, axis: Axis) -> Result<SignedDiagramSum> {
    if k == 0 {
        return usage("power sum degree must be at least 1");
    }
    on_axis(l, axis, |l| {
        let mut out = SignedDiagramSum::new();
        for i in 0..l.len() {
            let mut cells = l.cells().to_vec();
            cells[i].p -= k as i64;
            out.add_cells(cells, 1);
        }
        Ok(out)
    })
}

/// `e_k(∂)`: one term per `k`-subset of cells, each dropping one row.
pub fn apply_elementary(k: usize, l: &LatticeDiagram, axis: Axis) -> Result<SignedDiagramSum> {
    if k == 0 {
        return usage("elementary degree must be at least 1");
    }
    on_axis(l, axis, |l| {
        let mut out = SignedDiagramSum::new();
        for subset in (1..=l.len()).combinations(k) {
            let mut cells = l.cells().to_vec();
            lower(&mut cells, &subset);
            out.add_cells(cells, 1);
        }
        Ok(out)
    })
}

/// `h_k(∂)` through the complement: `k` holes of the box
/// `0..=max_p × 0..=max_q` each move up one row, and the new diagram is what
/// the moved holes leave uncovered.
pub fn apply_homogeneous_complement(
    k: usize,
    l: &LatticeDiagram,
    axis: Axis,
) -> Result<SignedDiagramSum> {
    if k == 0 {
        return usage("homogeneous degree must be at least 1");
    }
    on_axis(l, axis, |l| {
        let rows = l.max_p().unwrap_or(0);
        let cols = l.max_q().unwrap_or(0);
        let holes = complement_cells(l, rows, cols);
        // One extra row so that every lifted hole stays inside the box.
        let ext_holes: BTreeSet<Cell> = complement_cells(l, rows + 1, cols).into_iter().collect();
        let ext_box: Vec<Cell> = (0..=cols)
            .flat_map(|q| (0..=rows + 1).map(move |p| Cell::new(p, q)))
            .collect();
        let mut out = SignedDiagramSum::new();
        for chosen in holes.iter().combinations(k) {
            let mut new_holes: BTreeSet<Cell> = ext_holes.clone();
            for c in &chosen {
                new_holes.remove(c);
            }
            let mut collided = false;
            for c in &chosen {
                if !new_holes.insert(Cell::new(c.p + 1, c.q)) {
                    collided = true;
                    break;
                }
            }
            if collided {
                continue;
            }
            let cells: Vec<Cell> = ext_box
                .iter()
                .filter(|c| !new_holes.contains(c))
                .copied()
                .collect();
            out.add(LatticeDiagram::from_sorted(cells)?, 1);
        }
        Ok(out)
    })
}

fn tableau_sum(
    tableaux: &[ColumnTableauFamily],
    l: &LatticeDiagram,
    order: StageOrder,
) -> Result<SignedDiagramSum> {
    let mut out = SignedDiagramSum::new();
    for t in tableaux {
        let plan = epsilon_prime_ordered(t, l, order)?;
        if plan.epsilon_prime {
            out.add_cells(plan.result, 1);
        }
    }
    Ok(out)
}

/// `e_α(∂) = e_α1(∂) ⋯ e_αℓ(∂)` summed over column families `CT_α`.
pub fn apply_e_alpha(
    alpha: &Composition,
    l: &LatticeDiagram,
    axis: Axis,
) -> Result<SignedDiagramSum> {
    apply_e_alpha_ordered(alpha, l, axis, StageOrder::RightToLeft)
}

pub fn apply_e_alpha_ordered(
    alpha: &Composition,
    l: &LatticeDiagram,
    axis: Axis,
    order: StageOrder,
) -> Result<SignedDiagramSum> {
    on_axis(l, axis, |l| {
        tableau_sum(&enumerate_column_families(alpha, l.len()), l, order)
    })
}

/// `S_λ(∂)`: one term per column-strict tableau, coefficient `ε′(T, L)`.
pub fn apply_schur(lambda: &Partition, l: &LatticeDiagram, axis: Axis) -> Result<SignedDiagramSum> {
    apply_schur_ordered(lambda, l, axis, StageOrder::RightToLeft)
}

pub fn apply_schur_ordered(
    lambda: &Partition,
    l: &LatticeDiagram,
    axis: Axis,
    order: StageOrder,
) -> Result<SignedDiagramSum> {
    on_axis(l, axis, |l| {
        tableau_sum(&enumerate_cs_tableaux(lambda, l.len()), l, order)
    })
}

/// One term of the signed Jacobi-Trudi double sum, before cancellation.
#[derive(Clone, Debug, Serialize)]
pub struct JacobiTrudiTerm {
    pub tableau: ColumnTableauFamily,
    pub sign: i64,
    pub plan: MovePlan,
}

/// All terms `sgn(σ) ε′(T, L) Δ_{∂T(L)}` for `T` in the orbit families,
/// including those with `ε′ = 0`. X alphabet only.
pub fn jacobi_trudi_terms(lambda: &Partition, l: &LatticeDiagram) -> Result<Vec<JacobiTrudiTerm>> {
    require_epsilon(l)?;
    let orbit = ShapeOrbit::new(lambda);
    orbit
        .families(l.len())
        .into_iter()
        .map(|(tableau, sign)| {
            let plan = epsilon_prime(&tableau, l)?;
            Ok(JacobiTrudiTerm {
                tableau,
                sign,
                plan,
            })
        })
        .collect()
}

/// The Jacobi-Trudi expansion summed and canonicalized; equals
/// [`apply_schur`] once the paired terms cancel.
pub fn apply_schur_via_jacobi_trudi(
    lambda: &Partition,
    l: &LatticeDiagram,
    axis: Axis,
) -> Result<SignedDiagramSum> {
    on_axis(l, axis, |l| {
        let mut out = SignedDiagramSum::new();
        for term in jacobi_trudi_terms(lambda, l)? {
            if term.plan.epsilon_prime {
                out.add_cells(term.plan.result, term.sign);
            }
        }
        Ok(out)
    })
}

/// For a Ψ-pair `T`, `T′` that differ in stored columns `j` and `j+1`: with
/// `L̃` the diagram after the columns right of `j+1`, if `∂T_{j+1}(L̃)` and
/// `∂T_j ∂T_{j+1}(L̃)` are both valid then so is `∂T′_{j+1}(L̃)`.
pub fn moved_pair_implication_holds(
    t: &ColumnTableauFamily,
    t_prime: &ColumnTableauFamily,
    j: usize,
    l: &LatticeDiagram,
) -> bool {
    let mut base = l.cells().to_vec();
    for col in t.columns()[j + 2..].iter().rev() {
        lower(&mut base, col);
    }
    if !cells_epsilon(&base) {
        return true;
    }
    let mut after_right = base.clone();
    lower(&mut after_right, &t.columns()[j + 1]);
    let mut after_both = after_right.clone();
    lower(&mut after_both, &t.columns()[j]);
    if !(cells_epsilon(&after_right) && cells_epsilon(&after_both)) {
        return true;
    }
    let mut moved = base;
    lower(&mut moved, &t_prime.columns()[j + 1]);
    cells_epsilon(&moved)
}

pub fn expand(sum: &SignedDiagramSum, nvars: usize) -> Result<Polynomial> {
    expand_with_cap(sum, nvars, DEFAULT_DELTA_CAP)
}

/// `Σ coeff · Δ_D`.
pub fn expand_with_cap(sum: &SignedDiagramSum, nvars: usize, cap: usize) -> Result<Polynomial> {
    let mut out = Polynomial::zero(nvars);
    for (d, c) in sum.terms() {
        if d.len() != nvars {
            return usage(format!("diagram [{d}] does not have {nvars} cells"));
        }
        let term = delta_with_cap(d, cap)?.scale(&crate::poly::rat(c));
        out = out.checked_add(&term)?;
    }
    Ok(out)
}

/// Re-sorted result diagram of a plan, for display.
pub fn plan_result_diagram(plan: &MovePlan) -> (LatticeDiagram, i64) {
    normalize(plan.result.clone())
}
