//! Multi-qubit Pauli bases.
//!
//! Basis element `k` is the tensor product selected by the base-4 digits of
//! `k` with qubit 1 as the most significant digit, so for two qubits the
//! flat index of `P_i ⊗ P_j` is `k = 4·i + j`.

use crate::error::GscError;
use crate::linalg::{c, cr, CMatrix};
use crate::Result;

/// Single-qubit identity.
pub fn pauli_i() -> CMatrix {
    CMatrix::identity(2, 2)
}

pub fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[cr(0.0), cr(1.0), cr(1.0), cr(0.0)])
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[cr(0.0), c(0.0, -1.0), c(0.0, 1.0), cr(0.0)])
}

pub fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[cr(1.0), cr(0.0), cr(0.0), cr(-1.0)])
}

fn single(digit: usize) -> CMatrix {
    match digit {
        0 => pauli_i(),
        1 => pauli_x(),
        2 => pauli_y(),
        3 => pauli_z(),
        _ => unreachable!(),
    }
}

const DIGIT_NAMES: [char; 4] = ['I', 'X', 'Y', 'Z'];

/// Ordered Pauli basis on `n_qubits` qubits: 4^n Hermitian unitaries with
/// tr(σ_j σ_k) = d·δ_jk.
#[derive(Debug, Clone)]
pub struct PauliBasis {
    pub n_qubits: usize,
    /// Hilbert space dimension d = 2^n.
    pub dim: usize,
    elements: Vec<CMatrix>,
}

impl PauliBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, k: usize) -> &CMatrix {
        &self.elements[k]
    }

    pub fn elements(&self) -> &[CMatrix] {
        &self.elements
    }

    /// Base-4 digits of `k`, most significant digit first (qubit 1).
    pub fn digits(&self, k: usize) -> Vec<usize> {
        let mut digits = vec![0; self.n_qubits];
        let mut rem = k;
        for slot in digits.iter_mut().rev() {
            *slot = rem % 4;
            rem /= 4;
        }
        digits
    }

    /// Flat index from per-qubit digits, e.g. `[1, 3]` → X⊗Z → 7.
    pub fn index(&self, digits: &[usize]) -> usize {
        assert_eq!(digits.len(), self.n_qubits);
        digits.iter().fold(0, |acc, &d| acc * 4 + d)
    }

    /// Display label such as "XZ" for X⊗Z.
    pub fn label(&self, k: usize) -> String {
        self.digits(k).iter().map(|&d| DIGIT_NAMES[d]).collect()
    }

    /// True when the element acts non-trivially on at most one qubit.
    pub fn is_single_qubit(&self, k: usize) -> bool {
        self.digits(k).iter().filter(|&&d| d != 0).count() <= 1
    }
}

/// Builds the ordered Pauli basis for up to four qubits.
pub fn pauli_basis(n_qubits: usize) -> Result<PauliBasis> {
    if n_qubits == 0 {
        return Err(GscError::InvalidArgument("n_qubits must be ≥ 1".into()));
    }
    if n_qubits > 4 {
        return Err(GscError::InvalidArgument(format!(
            "n_qubits = {} exceeds the supported maximum of 4",
            n_qubits
        )));
    }
    let count = 4usize.pow(n_qubits as u32);
    let mut elements = Vec::with_capacity(count);
    for k in 0..count {
        let mut digits = vec![0usize; n_qubits];
        let mut rem = k;
        for slot in digits.iter_mut().rev() {
            *slot = rem % 4;
            rem /= 4;
        }
        let mut m = single(digits[0]);
        for &d in &digits[1..] {
            m = m.kronecker(&single(d));
        }
        elements.push(m);
    }
    Ok(PauliBasis {
        n_qubits,
        dim: 2usize.pow(n_qubits as u32),
        elements,
    })
}
