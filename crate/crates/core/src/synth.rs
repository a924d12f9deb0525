//! Sequence synthesis: enumerate candidate gate sequences, build the
//! sensitivity matrix of first-order response derivatives, select a minimal
//! well-conditioned subset by rank-revealing QR, and apply the offset- and
//! SPAM-robustness refinements.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::errmodel::{response, spam_extended_response, ErrorParameters, SpamLayout};
use crate::error::{GscError, NullSpaceReport};
use crate::linalg::{
    condition_number_real, frobenius_inv_norm, null_space_real, pivoted_qr_real, CMatrix, RMatrix,
};
use crate::pauli::{pauli_basis, PauliBasis};
use crate::Result;

/// Finite-difference step for response derivatives with respect to error
/// parameters (central differences at p = 0).
pub const SENSITIVITY_STEP: f64 = 1e-5;
/// Relative rank threshold on RRQR diagonals.
pub const RANK_THRESHOLD: f64 = 1e-10;
/// Default ceiling on acceptable condition numbers.
pub const DEFAULT_COND_THRESHOLD: f64 = 1e3;

/// Available states, measurements and gates, plus the enumeration depth.
#[derive(Debug, Clone)]
pub struct ExperimentDeclaration {
    pub gate_set: crate::gateset::GateSet,
    pub basis: PauliBasis,
    pub initial_states: Vec<CMatrix>,
    pub measurements: Vec<CMatrix>,
    pub max_length: usize,
}

impl ExperimentDeclaration {
    pub fn new(
        gate_set: crate::gateset::GateSet,
        initial_states: Vec<CMatrix>,
        measurements: Vec<CMatrix>,
        max_length: usize,
    ) -> Result<Self> {
        let d = gate_set.dim();
        let n_qubits = (d as f64).log2().round() as usize;
        let basis = pauli_basis(n_qubits)?;
        if basis.dim != d {
            return Err(GscError::DimensionMismatch(format!(
                "gate dimension {} is not a power of two",
                d
            )));
        }
        if initial_states.is_empty() || measurements.is_empty() || max_length == 0 {
            return Err(GscError::InvalidArgument(
                "need at least one state, one measurement and length ≥ 1".into(),
            ));
        }
        for rho in &initial_states {
            if rho.nrows() != d || rho.ncols() != d {
                return Err(GscError::DimensionMismatch("state dimension".into()));
            }
            let tr = rho.trace();
            if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-12 {
                return Err(GscError::InvalidArgument("state must have unit trace".into()));
            }
            if !crate::linalg::is_hermitian(rho, 1e-10) {
                return Err(GscError::InvalidArgument("state must be Hermitian".into()));
            }
            let eig = nalgebra::SymmetricEigen::new(rho.clone());
            if eig.eigenvalues.iter().any(|&l| l < -1e-12) {
                return Err(GscError::InvalidArgument(
                    "state must be positive semidefinite".into(),
                ));
            }
        }
        for m in &measurements {
            if m.nrows() != d || m.ncols() != d {
                return Err(GscError::DimensionMismatch("measurement dimension".into()));
            }
            if !crate::linalg::is_hermitian(m, 1e-10) {
                return Err(GscError::NotHermitian {
                    tol: 1e-10,
                    dev: crate::linalg::hermiticity_deviation(m),
                });
            }
        }
        Ok(Self {
            gate_set,
            basis,
            initial_states,
            measurements,
            max_length,
        })
    }

    /// Total candidate count N_s = Σ_{l=1..N_l} N_g^l over the enumeration
    /// alphabet (identity excluded).
    pub fn n_candidate_sequences(&self) -> usize {
        let n_g = self.gate_set.alphabet().len();
        (1..=self.max_length).map(|l| n_g.pow(l as u32)).sum()
    }

    pub fn spam_layout(&self) -> SpamLayout {
        SpamLayout {
            n_gates: self.gate_set.len(),
            n_inits: self.initial_states.len(),
            n_meas: self.measurements.len(),
        }
    }
}

/// The standard two-qubit declaration: |00⟩ initial state and the two
/// single-qubit z measurements.
pub fn standard_declaration(max_length: usize) -> ExperimentDeclaration {
    let gate_set = crate::gateset::standard_two_qubit();
    let basis = pauli_basis(2).unwrap();
    let mut rho = CMatrix::zeros(4, 4);
    rho[(0, 0)] = crate::linalg::cr(1.0);
    let m1 = basis.element(12).clone(); // Z⊗I
    let m2 = basis.element(3).clone(); // I⊗Z
    ExperimentDeclaration::new(gate_set, vec![rho], vec![m1, m2], max_length)
        .expect("standard declaration is valid")
}

/// Lexicographic enumeration of all gate sequences up to the declared
/// maximum length, over the non-identity alphabet.
pub fn enumerate_sequences(decl: &ExperimentDeclaration) -> Result<Vec<Vec<usize>>> {
    let alphabet = decl.gate_set.alphabet();
    let n_g = alphabet.len();
    if n_g == 0 {
        return Err(GscError::InvalidArgument("empty enumeration alphabet".into()));
    }
    if (n_g as f64).powi(decl.max_length as i32) > 1e6 {
        return Err(GscError::InvalidArgument(format!(
            "enumeration guard exceeded: {}^{} > 1e6",
            n_g, decl.max_length
        )));
    }
    let mut out = Vec::with_capacity(decl.n_candidate_sequences());
    for len in 1..=decl.max_length {
        let mut digits = vec![0usize; len];
        loop {
            out.push(digits.iter().map(|&i| alphabet[i]).collect());
            // Odometer increment, most significant digit first.
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < n_g {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// Which error-parameter block a sensitivity column refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockRef {
    Gate(usize),
    Init(usize),
    Meas(usize),
}

/// A tracked error direction: one Pauli component of one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorColumn {
    pub block: BlockRef,
    /// Pauli index, 1 ..= d²−1.
    pub k: usize,
}

impl ErrorColumn {
    pub fn label(&self, decl: &ExperimentDeclaration) -> String {
        let pauli = decl.basis.label(self.k);
        match self.block {
            BlockRef::Gate(g) => format!("{}:{}", decl.gate_set.label(g), pauli),
            BlockRef::Init(i) => format!("init{}:{}", i + 1, pauli),
            BlockRef::Meas(m) => format!("meas{}:{}", m + 1, pauli),
        }
    }
}

/// All error columns of one gate block.
pub fn gate_columns(gate: usize, dim: usize) -> Vec<ErrorColumn> {
    (1..dim * dim)
        .map(|k| ErrorColumn {
            block: BlockRef::Gate(gate),
            k,
        })
        .collect()
}

/// One response row: sequence, initial-state index, measurement index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowKey {
    pub seq: Vec<usize>,
    pub state: usize,
    pub meas: usize,
}

/// First derivatives S[r, u] = ∂R_r/∂p_u at p = 0, with row/column metadata
/// and the ideal responses.
#[derive(Debug, Clone)]
pub struct SensitivityMatrix {
    pub entries: RMatrix,
    pub rows: Vec<RowKey>,
    pub columns: Vec<ErrorColumn>,
    pub r0: Vec<f64>,
}

impl SensitivityMatrix {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    /// Restriction to a row subset, preserving order.
    pub fn select_rows(&self, indices: &[usize]) -> SensitivityMatrix {
        let entries = RMatrix::from_fn(indices.len(), self.n_cols(), |i, j| {
            self.entries[(indices[i], j)]
        });
        SensitivityMatrix {
            entries,
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
            columns: self.columns.clone(),
            r0: indices.iter().map(|&i| self.r0[i]).collect(),
        }
    }
}

fn response_with_column(
    decl: &ExperimentDeclaration,
    key: &RowKey,
    column: Option<(&ErrorColumn, f64)>,
) -> Result<f64> {
    let gates = &decl.gate_set;
    let basis = &decl.basis;
    let rho = &decl.initial_states[key.state];
    let m = &decl.measurements[key.meas];
    match column {
        None => {
            let p = ErrorParameters::zeros(gates.len(), gates.dim());
            response(&key.seq, rho, m, &p, gates, basis)
        }
        Some((col, value)) => match col.block {
            BlockRef::Gate(g) => {
                let mut p = ErrorParameters::zeros(gates.len(), gates.dim());
                p.set(g, col.k, value);
                response(&key.seq, rho, m, &p, gates, basis)
            }
            BlockRef::Init(_) | BlockRef::Meas(_) => {
                let layout = decl.spam_layout();
                let mut p = ErrorParameters::zeros(layout.total_blocks(), gates.dim());
                let block = match col.block {
                    BlockRef::Init(i) => layout.init_block(i),
                    BlockRef::Meas(mm) => layout.meas_block(mm),
                    BlockRef::Gate(_) => unreachable!(),
                };
                p.set(block, col.k, value);
                spam_extended_response(
                    &key.seq, key.state, key.meas, rho, m, &p, layout, gates, basis,
                )
            }
        },
    }
}

/// Ideal (zero-error) response of one row.
pub fn ideal_response(decl: &ExperimentDeclaration, key: &RowKey) -> Result<f64> {
    response_with_column(decl, key, None)
}

/// True when the column can affect the row at all; exact structural zeros
/// skip finite differencing.
fn column_touches_row(key: &RowKey, col: &ErrorColumn) -> bool {
    match col.block {
        BlockRef::Gate(g) => key.seq.contains(&g),
        BlockRef::Init(i) => key.state == i,
        BlockRef::Meas(m) => key.meas == m,
    }
}

fn compute_rows(
    decl: &ExperimentDeclaration,
    rows: &[RowKey],
    columns: &[ErrorColumn],
) -> Result<SensitivityMatrix> {
    let computed: Result<Vec<(Vec<f64>, f64)>> = rows
        .par_iter()
        .map(|key| {
            let r0 = response_with_column(decl, key, None)?;
            let mut entries = vec![0.0; columns.len()];
            for (j, col) in columns.iter().enumerate() {
                if !column_touches_row(key, col) {
                    continue;
                }
                let plus = response_with_column(decl, key, Some((col, SENSITIVITY_STEP)))?;
                let minus = response_with_column(decl, key, Some((col, -SENSITIVITY_STEP)))?;
                entries[j] = (plus - minus) / (2.0 * SENSITIVITY_STEP);
            }
            Ok((entries, r0))
        })
        .collect();
    let computed = computed?;
    let entries = RMatrix::from_fn(rows.len(), columns.len(), |i, j| computed[i].0[j]);
    let r0 = computed.iter().map(|(_, r)| *r).collect();
    Ok(SensitivityMatrix {
        entries,
        rows: rows.to_vec(),
        columns: columns.to_vec(),
        r0,
    })
}

/// Builds the sensitivity matrix over all (sequence, state, measurement)
/// rows for the tracked columns, by central differences of the response at
/// zero error.
pub fn sensitivity_matrix(
    decl: &ExperimentDeclaration,
    sequences: &[Vec<usize>],
    columns: &[ErrorColumn],
) -> Result<SensitivityMatrix> {
    let mut rows = Vec::with_capacity(
        sequences.len() * decl.initial_states.len() * decl.measurements.len(),
    );
    for seq in sequences {
        for state in 0..decl.initial_states.len() {
            for meas in 0..decl.measurements.len() {
                rows.push(RowKey {
                    seq: seq.clone(),
                    state,
                    meas,
                });
            }
        }
    }
    compute_rows(decl, &rows, columns)
}

/// Builds a sensitivity matrix directly from explicit row keys.
pub fn sensitivity_matrix_for_rows(
    decl: &ExperimentDeclaration,
    rows: &[RowKey],
    columns: &[ErrorColumn],
) -> Result<SensitivityMatrix> {
    compute_rows(decl, rows, columns)
}

/// Keeps rows whose ideal response vanishes; a symmetric visibility loss on
/// such rows cannot bias the calibration. Returns the survivors and the
/// count of removed rows.
pub fn filter_zero_ideal(s: &SensitivityMatrix) -> (SensitivityMatrix, usize) {
    let keep: Vec<usize> = (0..s.n_rows()).filter(|&i| s.r0[i].abs() < 1e-10).collect();
    let removed = s.n_rows() - keep.len();
    (s.select_rows(&keep), removed)
}

/// What a selected row stands for.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum RowKind {
    /// A measured sequence response.
    Sequence,
    /// A decoherence probe (ideal response 1, appended outside selection).
    Probe,
    /// A synthetic gauge-fixing equation pinning one error column to zero;
    /// not measurable, contributes a fixed zero residual.
    Constraint { column: ErrorColumn },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanRow {
    pub key: RowKey,
    pub r0: f64,
    pub kind: RowKind,
}

/// Complementary pairing: every primary row subtracts a partner row sharing
/// its measurement, cancelling constant per-measurement offsets.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Pairing {
    pub partner_rows: Vec<PlanRow>,
    /// For each primary row, index into `partner_rows` (partners may repeat).
    pub assignment: Vec<usize>,
    pub s_diff_condition: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpamReport {
    pub protected_labels: Vec<String>,
    /// Largest magnitude of any selected-row entry in a protected column.
    pub max_protected_entry: f64,
}

/// A selected calibration plan: N_p rows with an invertible sensitivity
/// matrix and condition diagnostics.
#[derive(Debug, Clone)]
pub struct SequencePlan {
    pub rows: Vec<PlanRow>,
    pub columns: Vec<ErrorColumn>,
    pub s_min: RMatrix,
    pub condition_number: f64,
    /// Frobenius norm of S_min⁻¹.
    pub inv_frobenius: f64,
    pub probe_rows: Vec<PlanRow>,
    pub pairing: Option<Pairing>,
    pub spam_report: Option<SpamReport>,
}

impl SequencePlan {
    pub fn n_params(&self) -> usize {
        self.columns.len()
    }

    /// All rows a backend must evaluate: selected rows, then probe rows,
    /// then pairing partners.
    pub fn evaluation_rows(&self) -> Vec<PlanRow> {
        let mut out = self.rows.clone();
        out.extend(self.probe_rows.iter().cloned());
        if let Some(p) = &self.pairing {
            out.extend(p.partner_rows.iter().cloned());
        }
        out
    }
}

fn rank_deficient_report(
    s: &SensitivityMatrix,
    decl: &ExperimentDeclaration,
    rank: usize,
) -> GscError {
    let dirs = null_space_real(&s.entries, 1e-8);
    GscError::RankDeficient(NullSpaceReport {
        rank,
        n_params: s.n_cols(),
        directions: dirs,
        column_labels: s.columns.iter().map(|c| c.label(decl)).collect(),
    })
}

/// Selects a minimal subset of N_p linearly independent rows by
/// rank-revealing QR on Sᵀ, keeping the rows with the largest pivots.
pub fn select_min_subset(
    s: &SensitivityMatrix,
    decl: &ExperimentDeclaration,
    cond_threshold: f64,
) -> Result<SequencePlan> {
    let n_p = s.n_cols();
    if s.n_rows() < n_p {
        return Err(rank_deficient_report(s, decl, s.n_rows().min(n_p)));
    }
    let qr = pivoted_qr_real(&s.entries.transpose());
    let head = qr.r_diag_abs.first().copied().unwrap_or(0.0);
    let rank = qr
        .r_diag_abs
        .iter()
        .take_while(|&&d| head > 0.0 && d > RANK_THRESHOLD * head)
        .count();
    if rank < n_p {
        return Err(rank_deficient_report(s, decl, rank));
    }
    let mut selected: Vec<usize> = qr.permutation[..n_p].to_vec();
    selected.sort_unstable();
    let s_min_full = s.select_rows(&selected);
    let condition_number = condition_number_real(&s_min_full.entries)?;
    if condition_number > cond_threshold {
        return Err(GscError::ConditionThreshold {
            threshold: cond_threshold,
            best: condition_number,
        });
    }
    let inv_frobenius = frobenius_inv_norm(&s_min_full.entries)?;
    let rows = s_min_full
        .rows
        .iter()
        .zip(&s_min_full.r0)
        .map(|(key, &r0)| PlanRow {
            key: key.clone(),
            r0,
            kind: RowKind::Sequence,
        })
        .collect();
    Ok(SequencePlan {
        rows,
        columns: s.columns.clone(),
        s_min: s_min_full.entries,
        condition_number,
        inv_frobenius,
        probe_rows: Vec::new(),
        pairing: None,
        spam_report: None,
    })
}

/// Tolerance on protected-column entries for SPAM-insensitive selection.
pub const SPAM_PROTECTION_TOL: f64 = 1e-8;

/// Selects rows whose sensitivity to every protected SPAM column vanishes,
/// then picks a minimal well-conditioned subset over the gate columns.
///
/// Candidate rows failing the protection tolerance are discarded before
/// selection; survivors go through the usual RRQR pick ordered by pivot
/// quality, with a greedy swap pass if the condition threshold is not met
/// at first.
pub fn select_spam_insensitive(
    s_extended: &SensitivityMatrix,
    decl: &ExperimentDeclaration,
    protected: &[ErrorColumn],
    cond_threshold: f64,
) -> Result<SequencePlan> {
    let protected_idx: Vec<usize> = protected
        .iter()
        .map(|p| {
            s_extended
                .columns
                .iter()
                .position(|c| c == p)
                .ok_or_else(|| {
                    GscError::InvalidArgument(format!(
                        "protected column {} not present in extended matrix",
                        p.label(decl)
                    ))
                })
        })
        .collect::<Result<_>>()?;
    let gate_cols: Vec<usize> = (0..s_extended.n_cols())
        .filter(|j| !protected_idx.contains(j))
        .filter(|&j| matches!(s_extended.columns[j].block, BlockRef::Gate(_)))
        .collect();

    // Hard per-row constraint: protected entries below tolerance.
    let admissible: Vec<usize> = (0..s_extended.n_rows())
        .filter(|&i| {
            protected_idx
                .iter()
                .all(|&j| s_extended.entries[(i, j)].abs() < SPAM_PROTECTION_TOL)
        })
        .collect();

    let gate_matrix = |rows: &[usize]| -> SensitivityMatrix {
        let sub = s_extended.select_rows(rows);
        let entries = RMatrix::from_fn(rows.len(), gate_cols.len(), |i, j| {
            sub.entries[(i, gate_cols[j])]
        });
        SensitivityMatrix {
            entries,
            rows: sub.rows,
            columns: gate_cols.iter().map(|&j| s_extended.columns[j]).collect(),
            r0: sub.r0,
        }
    };

    let n_p = gate_cols.len();
    let pool = gate_matrix(&admissible);
    if pool.n_rows() < n_p {
        return Err(GscError::SpamSearchExhausted(format!(
            "{} admissible rows for {} parameters under {} protected columns",
            pool.n_rows(),
            n_p,
            protected.len()
        )));
    }
    let qr = pivoted_qr_real(&pool.entries.transpose());
    let head = qr.r_diag_abs.first().copied().unwrap_or(0.0);
    let rank = qr
        .r_diag_abs
        .iter()
        .take_while(|&&d| head > 0.0 && d > RANK_THRESHOLD * head)
        .count();
    if rank < n_p {
        return Err(GscError::SpamSearchExhausted(format!(
            "admissible rows have rank {} < {}; some gate errors are shadowed by the protection constraints",
            rank, n_p
        )));
    }

    // Greedy: take the first N_p pivots; if the condition threshold fails,
    // swap trailing picks for later candidates (bounded backtracking).
    let ranked: Vec<usize> = qr.permutation.clone();
    let mut pick: Vec<usize> = ranked[..n_p].to_vec();
    let eval = |pick: &[usize]| -> f64 {
        let rows: Vec<usize> = pick.iter().map(|&i| admissible[i]).collect();
        let sub = gate_matrix(&rows);
        condition_number_real(&sub.entries).unwrap_or(f64::INFINITY)
    };
    let mut cond = eval(&pick);
    let mut best_cond = cond;
    if cond > cond_threshold {
        'outer: for slot in (0..n_p).rev() {
            for cand in ranked.iter().skip(n_p) {
                if pick.contains(cand) {
                    continue;
                }
                let old = pick[slot];
                pick[slot] = *cand;
                let c = eval(&pick);
                if c < cond {
                    cond = c;
                    best_cond = best_cond.min(c);
                    if cond <= cond_threshold {
                        break 'outer;
                    }
                } else {
                    pick[slot] = old;
                }
            }
        }
    }
    if cond > cond_threshold {
        return Err(GscError::ConditionThreshold {
            threshold: cond_threshold,
            best: best_cond,
        });
    }
    let mut rows: Vec<usize> = pick.iter().map(|&i| admissible[i]).collect();
    rows.sort_unstable();
    let sub = gate_matrix(&rows);
    let condition_number = condition_number_real(&sub.entries)?;
    let inv_frobenius = frobenius_inv_norm(&sub.entries)?;
    let max_protected = rows
        .iter()
        .flat_map(|&i| {
            protected_idx
                .iter()
                .map(move |&j| s_extended.entries[(i, j)].abs())
        })
        .fold(0.0, f64::max);
    let plan_rows = sub
        .rows
        .iter()
        .zip(&sub.r0)
        .map(|(key, &r0)| PlanRow {
            key: key.clone(),
            r0,
            kind: RowKind::Sequence,
        })
        .collect();
    Ok(SequencePlan {
        rows: plan_rows,
        columns: sub.columns.clone(),
        s_min: sub.entries,
        condition_number,
        inv_frobenius,
        probe_rows: Vec::new(),
        pairing: None,
        spam_report: Some(SpamReport {
            protected_labels: protected.iter().map(|c| c.label(decl)).collect(),
            max_protected_entry: max_protected,
        }),
    })
}

/// Assigns a complementary partner (same measurement) to every plan row so
/// that constant per-measurement offsets cancel in the differenced residual
/// while S⁽¹⁾ − S⁽²⁾ stays invertible.
///
/// Partners come one per measurement (shared across all rows using that
/// measurement), searched greedily over the candidate pool; candidates must
/// have zero ideal response.
pub fn build_complementary_pairs(
    plan: &SequencePlan,
    candidates: &SensitivityMatrix,
    decl: &ExperimentDeclaration,
    cond_threshold: f64,
) -> Result<SequencePlan> {
    let n = plan.rows.len();
    let n_meas = decl.measurements.len();
    let mut per_meas: Vec<Vec<usize>> = vec![Vec::new(); n_meas];
    for (i, key) in candidates.rows.iter().enumerate() {
        if candidates.r0[i].abs() < 1e-10 {
            per_meas[key.meas].push(i);
        }
    }
    let meas_used: Vec<bool> = (0..n_meas)
        .map(|m| plan.rows.iter().any(|r| r.key.meas == m && r.kind == RowKind::Sequence))
        .collect();
    for m in 0..n_meas {
        if meas_used[m] && per_meas[m].is_empty() {
            return Err(GscError::PairingFailed {
                threshold: cond_threshold,
                best: f64::INFINITY,
            });
        }
    }

    let col_map: Vec<usize> = plan
        .columns
        .iter()
        .map(|c| {
            candidates
                .columns
                .iter()
                .position(|d| d == c)
                .ok_or_else(|| {
                    GscError::InvalidArgument(format!(
                        "candidate matrix lacks column {}",
                        c.label(decl)
                    ))
                })
        })
        .collect::<Result<_>>()?;

    let s_diff_for = |partner_of_meas: &[usize]| -> RMatrix {
        RMatrix::from_fn(n, plan.columns.len(), |i, j| {
            match plan.rows[i].kind {
                // Constraint rows are synthetic; nothing is subtracted.
                RowKind::Constraint { .. } => plan.s_min[(i, j)],
                _ => {
                    let m = plan.rows[i].key.meas;
                    let cand_row = partner_of_meas[m];
                    plan.s_min[(i, j)] - candidates.entries[(cand_row, col_map[j])]
                }
            }
        })
    };

    // Rank shared-partner candidates per measurement by how little they
    // perturb the plan matrix.
    let mut ranked: Vec<Vec<usize>> = Vec::with_capacity(n_meas);
    for list in &per_meas {
        let mut with_norm: Vec<(usize, f64)> = list
            .iter()
            .map(|&i| {
                let norm: f64 = col_map
                    .iter()
                    .map(|&j| candidates.entries[(i, j)].powi(2))
                    .sum::<f64>()
                    .sqrt();
                (i, norm)
            })
            .collect();
        with_norm.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap().then(a.0.cmp(&b.0)));
        ranked.push(with_norm.into_iter().map(|(i, _)| i).collect());
    }

    const PER_MEAS_BUDGET: usize = 24;
    let mut choice: Vec<usize> = ranked
        .iter()
        .map(|r| r.first().copied().unwrap_or(0))
        .collect();
    let mut best_cond = condition_number_real(&s_diff_for(&choice)).unwrap_or(f64::INFINITY);
    for _pass in 0..2 {
        for m in 0..n_meas {
            if ranked[m].is_empty() || !meas_used[m] {
                continue;
            }
            let mut local = (best_cond, choice[m]);
            for &cand in ranked[m].iter().take(PER_MEAS_BUDGET) {
                choice[m] = cand;
                let cond = condition_number_real(&s_diff_for(&choice)).unwrap_or(f64::INFINITY);
                if cond < local.0 {
                    local = (cond, cand);
                }
            }
            choice[m] = local.1;
            best_cond = local.0;
        }
    }
    if best_cond > cond_threshold {
        return Err(GscError::PairingFailed {
            threshold: cond_threshold,
            best: best_cond,
        });
    }

    let mut partner_rows: Vec<PlanRow> = Vec::new();
    let mut partner_index: Vec<usize> = vec![usize::MAX; n_meas];
    for m in 0..n_meas {
        if ranked[m].is_empty() || !meas_used[m] {
            continue;
        }
        let cand = choice[m];
        partner_index[m] = partner_rows.len();
        partner_rows.push(PlanRow {
            key: candidates.rows[cand].clone(),
            r0: candidates.r0[cand],
            kind: RowKind::Sequence,
        });
    }
    let assignment: Vec<usize> = plan
        .rows
        .iter()
        .map(|r| partner_index[r.key.meas])
        .collect();
    let mut out = plan.clone();
    out.pairing = Some(Pairing {
        partner_rows,
        assignment,
        s_diff_condition: best_cond,
    });
    Ok(out)
}

/// Generates decoherence probe rows: short sequences containing the target
/// gate whose ideal action returns the initial state, giving ideal response
/// 1 for every measurement. They bypass the zero-ideal filter on purpose.
pub fn decoherence_probe_rows(
    decl: &ExperimentDeclaration,
    target_gate: usize,
    sequences: &[Vec<usize>],
) -> Result<Vec<PlanRow>> {
    let mut candidates: Vec<&Vec<usize>> = sequences
        .iter()
        .filter(|s| s.contains(&target_gate))
        .collect();
    // Prefer many target-gate occurrences, then short, then lexicographic.
    candidates.sort_by(|a, b| {
        let ca = a.iter().filter(|&&g| g == target_gate).count();
        let cb = b.iter().filter(|&&g| g == target_gate).count();
        cb.cmp(&ca).then(a.len().cmp(&b.len())).then(a.cmp(b))
    });
    let mut out = Vec::new();
    for state in 0..decl.initial_states.len() {
        for meas in 0..decl.measurements.len() {
            for seq in &candidates {
                let key = RowKey {
                    seq: (*seq).clone(),
                    state,
                    meas,
                };
                let r0 = response_with_column(decl, &key, None)?;
                if (r0 - 1.0).abs() < 1e-10 {
                    out.push(PlanRow {
                        key,
                        r0,
                        kind: RowKind::Probe,
                    });
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Appends synthetic gauge-fixing rows pinning the given columns to zero,
/// with the stated row weight. Constraint rows contribute fixed zero
/// residuals in calibration.
pub fn append_constraint_rows(
    s: &SensitivityMatrix,
    columns: &[ErrorColumn],
    weight: f64,
) -> SensitivityMatrix {
    let extra = columns.len();
    let mut entries = RMatrix::zeros(s.n_rows() + extra, s.n_cols());
    entries
        .view_mut((0, 0), (s.n_rows(), s.n_cols()))
        .copy_from(&s.entries);
    let mut rows = s.rows.clone();
    let mut r0 = s.r0.clone();
    for (i, col) in columns.iter().enumerate() {
        let j = s
            .columns
            .iter()
            .position(|c| c == col)
            .expect("constraint column must be tracked");
        entries[(s.n_rows() + i, j)] = weight;
        rows.push(RowKey {
            seq: Vec::new(),
            state: 0,
            meas: 0,
        });
        r0.push(0.0);
    }
    SensitivityMatrix {
        entries,
        rows,
        columns: s.columns.clone(),
        r0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gateset::z_rotation_toy;
    use crate::linalg::cr;

    #[test]
    fn enumeration_counts() {
        let decl = standard_declaration(4);
        let seqs = enumerate_sequences(&decl).unwrap();
        assert_eq!(seqs.len(), 5 + 25 + 125 + 625);
        assert_eq!(decl.n_candidate_sequences(), 780);
        // Lexicographic within each length.
        assert_eq!(seqs[0], vec![0]);
        assert_eq!(seqs[4], vec![4]);
        assert_eq!(seqs[5], vec![0, 0]);
        assert_eq!(seqs[6], vec![0, 1]);
    }

    #[test]
    fn enumeration_single_gate() {
        let mut rho = CMatrix::zeros(2, 2);
        rho[(0, 0)] = cr(1.0);
        let decl =
            ExperimentDeclaration::new(z_rotation_toy(), vec![rho], vec![crate::pauli::pauli_z()], 3)
                .unwrap();
        let seqs = enumerate_sequences(&decl).unwrap();
        assert_eq!(seqs.len(), 3);
    }

    #[test]
    fn enumeration_guard() {
        let decl = standard_declaration(10);
        assert!(enumerate_sequences(&decl).is_err());
    }

    #[test]
    fn length_eight_count() {
        let decl = standard_declaration(8);
        assert_eq!(decl.n_candidate_sequences(), 488_280);
    }

    #[test]
    fn zero_columns_for_absent_gates() {
        let decl = standard_declaration(2);
        let seqs = vec![vec![1usize, 2]]; // no g1, g4, g5
        let cols: Vec<ErrorColumn> = gate_columns(0, 4)
            .into_iter()
            .chain(gate_columns(3, 4))
            .collect();
        let s = sensitivity_matrix(&decl, &seqs, &cols).unwrap();
        for j in 0..s.n_cols() {
            for i in 0..s.n_rows() {
                assert_eq!(s.entries[(i, j)], 0.0);
            }
        }
    }

    #[test]
    fn toy_declaration_is_rank_deficient() {
        let mut rho = CMatrix::zeros(2, 2);
        rho[(0, 0)] = cr(1.0);
        let decl = ExperimentDeclaration::new(
            z_rotation_toy(),
            vec![rho],
            vec![crate::pauli::pauli_z()],
            3,
        )
        .unwrap();
        let seqs = enumerate_sequences(&decl).unwrap();
        let cols = gate_columns(0, 2);
        let s = sensitivity_matrix(&decl, &seqs, &cols).unwrap();
        match select_min_subset(&s, &decl, DEFAULT_COND_THRESHOLD) {
            Err(GscError::RankDeficient(report)) => {
                assert!(report.rank < report.n_params);
                assert!(!report.directions.is_empty());
            }
            other => panic!(
                "expected rank deficiency, got {:?}",
                other.map(|p| p.condition_number)
            ),
        }
    }

    #[test]
    fn duplicated_row_never_breaks_selection() {
        let decl = standard_declaration(4);
        let seqs = enumerate_sequences(&decl).unwrap();
        let cols = gate_columns(0, 4);
        let s = sensitivity_matrix(&decl, &seqs, &cols).unwrap();
        let (zero_ideal, _) = filter_zero_ideal(&s);
        let mut idx: Vec<usize> = (0..zero_ideal.n_rows()).collect();
        idx.push(0);
        let dup = zero_ideal.select_rows(&idx);
        let plan = select_min_subset(&dup, &decl, DEFAULT_COND_THRESHOLD).unwrap();
        assert_eq!(plan.rows.len(), 15);
        assert!(plan.condition_number.is_finite());
    }

    #[test]
    fn square_invertible_selects_everything() {
        let decl = standard_declaration(4);
        let seqs = enumerate_sequences(&decl).unwrap();
        let cols = gate_columns(0, 4);
        let s = sensitivity_matrix(&decl, &seqs, &cols).unwrap();
        let (zero_ideal, _) = filter_zero_ideal(&s);
        let plan = select_min_subset(&zero_ideal, &decl, DEFAULT_COND_THRESHOLD).unwrap();
        // Re-selecting from exactly the chosen rows returns them all.
        let keys: Vec<RowKey> = plan.rows.iter().map(|r| r.key.clone()).collect();
        let square = sensitivity_matrix_for_rows(&decl, &keys, &cols).unwrap();
        let again = select_min_subset(&square, &decl, DEFAULT_COND_THRESHOLD).unwrap();
        assert_eq!(again.rows.len(), plan.rows.len());
        assert!((again.condition_number - plan.condition_number).abs() < 1e-9);
    }

    #[test]
    fn filter_zero_ideal_splits_probe_rows() {
        let decl = standard_declaration(2);
        let seqs = vec![vec![0usize, 1], vec![0usize, 0]];
        let cols = gate_columns(0, 4);
        let s = sensitivity_matrix(&decl, &seqs, &cols).unwrap();
        let (kept, removed) = filter_zero_ideal(&s);
        // (g1, g1) reproduces |00⟩ for both measurements, and a qubit-1
        // x-rotation leaves the I⊗Z response at 1 → three rows removed.
        assert_eq!(removed, 3);
        assert_eq!(kept.n_rows(), 1);
        assert!(kept.rows.iter().all(|k| k.seq != vec![0usize, 0]));
        let (empty, zero) = filter_zero_ideal(&kept.select_rows(&[]));
        assert_eq!(empty.n_rows(), 0);
        assert_eq!(zero, 0);
    }

    #[test]
    fn probe_row_generator_finds_double_target() {
        let decl = standard_declaration(2);
        let seqs = enumerate_sequences(&decl).unwrap();
        let probes = decoherence_probe_rows(&decl, 0, &seqs).unwrap();
        assert_eq!(probes.len(), 2); // one per measurement
        for p in &probes {
            assert_eq!(p.key.seq, vec![0, 0]);
            assert!((p.r0 - 1.0).abs() < 1e-12);
            assert_eq!(p.kind, RowKind::Probe);
        }
    }
}
