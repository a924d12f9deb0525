//! Gate sets: ordered ideal unitaries plus an identity padding element.

use std::f64::consts::FRAC_PI_4;

use crate::error::GscError;
use crate::linalg::{cr, expm_hermitian, is_unitary, kron, max_abs_diff, CMatrix};
use crate::pauli::{pauli_i, pauli_x, pauli_y, pauli_z};
use crate::Result;

/// A set of quantum gates on a fixed dimension. The identity element pads
/// table rows and carries its own error block, but is excluded from the
/// sequence enumeration alphabet (it adds no information).
#[derive(Debug, Clone)]
pub struct GateSet {
    gates: Vec<CMatrix>,
    labels: Vec<String>,
    identity_index: usize,
    dim: usize,
}

impl GateSet {
    pub fn new(gates: Vec<CMatrix>, labels: Vec<String>, identity_index: usize) -> Result<Self> {
        if gates.is_empty() || gates.len() != labels.len() {
            return Err(GscError::InvalidArgument(
                "gate and label counts must match and be nonzero".into(),
            ));
        }
        let dim = gates[0].nrows();
        for (i, g) in gates.iter().enumerate() {
            if g.nrows() != dim || g.ncols() != dim {
                return Err(GscError::DimensionMismatch(format!(
                    "gate {} is {}x{}, expected {}x{}",
                    i,
                    g.nrows(),
                    g.ncols(),
                    dim,
                    dim
                )));
            }
            if !is_unitary(g, 1e-10) {
                return Err(GscError::NotUnitary {
                    tol: 1e-10,
                    dev: crate::linalg::unitarity_deviation(g),
                });
            }
        }
        if identity_index >= gates.len()
            || max_abs_diff(&gates[identity_index], &CMatrix::identity(dim, dim)) >= 1e-12
        {
            return Err(GscError::InvalidArgument(
                "identity_index must point at an identity element".into(),
            ));
        }
        Ok(Self {
            gates,
            labels,
            identity_index,
            dim,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Total gate count including the identity padding element.
    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn gate(&self, i: usize) -> &CMatrix {
        &self.gates[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    /// Gate indices eligible for sequence enumeration (identity excluded).
    pub fn alphabet(&self) -> Vec<usize> {
        (0..self.gates.len())
            .filter(|&i| i != self.identity_index)
            .collect()
    }
}

/// CNOT with qubit 1 as control, basis order |00⟩,|01⟩,|10⟩,|11⟩.
pub fn cnot() -> CMatrix {
    let mut m = CMatrix::zeros(4, 4);
    m[(0, 0)] = cr(1.0);
    m[(1, 1)] = cr(1.0);
    m[(2, 3)] = cr(1.0);
    m[(3, 2)] = cr(1.0);
    m
}

/// π/2 rotation exp(−i·sign·(π/4)·σ).
fn quarter_rotation(sigma: &CMatrix, sign: f64) -> CMatrix {
    expm_hermitian(&sigma.scale(sign * FRAC_PI_4), 1.0).expect("Pauli generators are Hermitian")
}

/// Sign convention for the four single-qubit π/2 rotations of the standard
/// two-qubit set. `+1` means exp(−i(π/4)σ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationSigns {
    pub g2: i8,
    pub g3: i8,
    pub g4: i8,
    pub g5: i8,
}

impl RotationSigns {
    pub const POSITIVE: RotationSigns = RotationSigns {
        g2: 1,
        g3: 1,
        g4: 1,
        g5: 1,
    };

    /// All 16 sign variants, for the one-time convention reconciliation.
    pub fn all_variants() -> Vec<RotationSigns> {
        let mut out = Vec::with_capacity(16);
        for bits in 0..16u8 {
            let s = |b: u8| if bits >> b & 1 == 0 { 1 } else { -1 };
            out.push(RotationSigns {
                g2: s(0),
                g3: s(1),
                g4: s(2),
                g5: s(3),
            });
        }
        out
    }
}

/// The standard two-qubit set used throughout: an entangling CNOT (g1),
/// π/2 x/y rotations on qubit 1 (g2, g3) and on qubit 2 (g4, g5), plus an
/// identity padding element labeled g8.
pub fn standard_two_qubit_with_signs(signs: RotationSigns) -> GateSet {
    let id = pauli_i();
    let gates = vec![
        cnot(),
        kron(&quarter_rotation(&pauli_x(), signs.g2 as f64), &id),
        kron(&quarter_rotation(&pauli_y(), signs.g3 as f64), &id),
        kron(&id, &quarter_rotation(&pauli_x(), signs.g4 as f64)),
        kron(&id, &quarter_rotation(&pauli_y(), signs.g5 as f64)),
        CMatrix::identity(4, 4),
    ];
    let labels = ["g1", "g2", "g3", "g4", "g5", "g8"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    GateSet::new(gates, labels, 5).expect("standard set is valid")
}

pub fn standard_two_qubit() -> GateSet {
    standard_two_qubit_with_signs(RotationSigns::POSITIVE)
}

/// A deliberately degenerate single-qubit set: one z-rotation plus identity.
/// With a |0⟩ initial state and a Z measurement every coherent error of the
/// rotation commuting with Z is unobservable, which exercises the
/// rank-deficiency reporting path.
pub fn z_rotation_toy() -> GateSet {
    let gates = vec![
        quarter_rotation(&pauli_z(), 1.0),
        CMatrix::identity(2, 2),
    ];
    let labels = vec!["gz".to_string(), "id".to_string()];
    GateSet::new(gates, labels, 1).expect("toy set is valid")
}
