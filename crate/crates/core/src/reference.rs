//! Curated reference sequence sets for the standard two-qubit gate set.
//!
//! Each row lists a gate sequence (identity-padded display slots), the
//! measurement used, the ideal response, and the expected first-order
//! response coefficients. Coefficients follow a halved printing convention:
//! the stored value is half of the true derivative, so regression checks
//! double them before comparing against computed sensitivities.

/// One row of a reference sequence set.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceRow {
    /// Display slots including identity padding (gate indices into the
    /// standard two-qubit set; 5 is the identity element).
    pub slots: &'static [usize],
    /// Measurement index: 0 → Z⊗I, 1 → I⊗Z.
    pub meas: usize,
    /// Ideal (zero-error) response.
    pub r0: f64,
    /// Halved coefficients on gate error parameters, as (gate, i, j, value)
    /// with (i, j) the per-qubit Pauli digits.
    pub gate_terms: &'static [(usize, usize, usize, f64)],
    /// Halved coefficients on initialization pseudo-gate errors, as (i, j, value).
    pub init_terms: &'static [(usize, usize, f64)],
    /// Halved coefficients on measurement pseudo-gate errors, as (i, j, value).
    pub meas_terms: &'static [(usize, usize, f64)],
}

impl ReferenceRow {
    /// The executable gate sequence: display slots with identity padding removed.
    pub fn sequence(&self) -> Vec<usize> {
        self.slots.iter().copied().filter(|&g| g != 5).collect()
    }
}

pub const MAIN: &[ReferenceRow] = &[
    ReferenceRow {
        slots: &[0, 1, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 1, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[0, 2, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -1.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 3, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 1, -1.0), (0, 3, 1, -1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 4, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 3, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 1, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(2, 2, 1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 2, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 1, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, 1.0), (0, 2, 2, 1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(3, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 2, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(1, 2, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 2, -1.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 2, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[4, 0, 3, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 3, 1.0), (0, 3, 3, 1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 0, 2],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 0, -2.0), (0, 0, 3, -1.0), (0, 3, 3, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 4, 0, 3],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 2, -1.0), (0, 3, 3, 1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[0, 0, 5, 5],
        meas: 0,
        r0: 1.0,
        gate_terms: &[],
        init_terms: &[],
        meas_terms: &[],
    },
    ReferenceRow {
        slots: &[0, 0, 5, 5],
        meas: 1,
        r0: 1.0,
        gate_terms: &[],
        init_terms: &[],
        meas_terms: &[],
    },
];

pub const SPAM_INSENSITIVE: &[ReferenceRow] = &[
    ReferenceRow {
        slots: &[1, 0, 3, 4, 0, 2, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, 1.0), (0, 0, 1, -1.0), (0, 1, 1, 1.0), (0, 3, 2, -1.0)],
        init_terms: &[(1, 1, 1.0), (2, 2, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 4, 0, 2, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, 1.0), (0, 0, 1, -1.0), (0, 1, 1, 1.0), (0, 3, 3, -1.0)],
        init_terms: &[(1, 1, 1.0), (2, 2, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 4, 0, 1, 4, 3, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 2, -1.0), (0, 3, 3, 1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(0, 1, 1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 3, 0, 4, 0, 1, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, 1.0), (0, 0, 1, -1.0), (0, 2, 1, 1.0), (0, 3, 3, -1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 2, 4, 3, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 2, 2, -1.0), (0, 3, 3, 1.0)],
        init_terms: &[(1, 1, 1.0), (2, 2, -1.0)],
        meas_terms: &[(0, 1, 1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 1, 0, 2, 4, 0, 2, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, 1.0), (0, 3, 0, 1.0), (0, 0, 1, 1.0), (0, 2, 1, 1.0), (0, 1, 2, 1.0), (0, 3, 3, 1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 1, 1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 2, 0, 1, 4, 0, 1, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, 1.0), (0, 3, 0, -1.0), (0, 0, 1, -1.0), (0, 1, 1, 1.0), (0, 2, 2, -1.0), (0, 3, 3, -1.0)],
        init_terms: &[(1, 1, 1.0), (2, 2, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 4, 0, 2, 4, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, 1.0), (0, 2, 2, -1.0), (0, 1, 3, 1.0), (0, 3, 3, -1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 3, 4, 0, 1, 4, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, 1.0), (0, 1, 2, 1.0), (0, 2, 2, 1.0), (0, 3, 3, -1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 3, 0, 4, 0, 1, 4, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, 1.0), (0, 1, 2, 1.0), (0, 2, 3, 1.0), (0, 3, 3, -1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 2, 0, 4, 3, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 2, 2, 1.0), (0, 0, 3, -1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(0, 1, 1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[4, 0, 2, 0, 2, 4, 3, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 3, 1.0), (0, 3, 3, 1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(0, 1, 1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 3, 2, 4, 2, 0, 2],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, 1.0), (0, 0, 1, 1.0), (0, 1, 1, -1.0), (0, 3, 2, 1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(0, 1, 1.0), (1, 1, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 4, 0, 1, 4, 0, 3, 4],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, 1.0), (0, 1, 3, 1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 3, 0, 4, 1, 1, 0, 1],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, 1.0), (0, 0, 1, 1.0), (0, 2, 1, -1.0), (0, 3, 3, 1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(0, 1, 1.0), (2, 1, 1.0)],
    },
];

pub const FULL_SET: &[ReferenceRow] = &[
    ReferenceRow {
        slots: &[1, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(1, 1, 0, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(2, 2, 0, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[3, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(3, 0, 1, -1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[4, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(4, 0, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 1, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 1, -1.0), (0, 2, 2, 1.0), (1, 1, 0, -1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 2, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 1, -1.0), (0, 1, 2, -1.0), (2, 2, 0, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 3, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 1, -1.0), (0, 3, 1, -1.0), (3, 0, 1, -1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 4, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 3, 2, -1.0), (4, 0, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 3, -1.0), (1, 1, 0, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 2, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(1, 2, 0, -1.0), (2, 3, 0, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -1.0), (0, 2, 3, -1.0), (2, 2, 0, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 1, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(1, 3, 0, 1.0), (2, 1, 0, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[3, 4, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(3, 0, 2, -1.0), (4, 0, 3, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[4, 3, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(3, 0, 3, 1.0), (4, 0, 1, -1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 1, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(2, 2, 1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 2, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 1, 2, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(1, 2, 0, -1.0), (1, 3, 0, -1.0), (2, 2, 0, 1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 0, 1.0), (2, 3, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 2, 1.0), (1, 1, 0, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(3, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 3, 0, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -1.0), (0, 2, 2, 1.0), (2, 2, 0, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 2, -1.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 2, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[3, 3, 4, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(3, 0, 2, -1.0), (3, 0, 3, -1.0), (4, 0, 2, 1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, 1.0), (3, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[4, 0, 3, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 3, 1.0), (0, 3, 3, 1.0), (3, 0, 3, 1.0), (4, 0, 1, -1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 0, 1],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 0, 2.0), (0, 0, 3, 1.0), (0, 3, 3, 1.0), (1, 3, 0, 1.0), (2, 1, 0, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 3, 0, 2],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 3, -1.0), (0, 1, 3, -1.0), (3, 0, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(2, 2, 1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 1, 1, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(1, 1, 0, 3.0)],
        init_terms: &[(1, 0, 1.0), (1, 3, 1.0)],
        meas_terms: &[(1, 0, 1.0), (1, 3, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 3, -1.0), (1, 1, 0, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
    },
];

pub const OFFSET_PRIMARY: &[ReferenceRow] = &[
    ReferenceRow {
        slots: &[0, 1, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 1, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 2, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 3, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 1, -1.0), (0, 3, 1, -1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 4, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 3, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -1.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 1, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(2, 2, 1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 2, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 2, 1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(3, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 3, 0, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 2, -1.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 2, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[3, 0, 4, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 3, -1.0), (0, 3, 3, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 0, 2, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 0, -2.0), (0, 0, 3, -1.0), (0, 3, 3, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 4, 0, 3, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 1, 2, -1.0), (0, 3, 3, 1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (2, 2, 1.0)],
    },
];

pub const OFFSET_COMPLEMENT: &[ReferenceRow] = &[
    ReferenceRow {
        slots: &[1, 2, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 1, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[3, 4, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[4, 3, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 0, 1, 0, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -2.0), (0, 1, 1, -1.0), (0, 2, 2, 1.0), (0, 1, 3, -2.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[0, 0, 2, 0, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -2.0), (0, 2, 1, -1.0), (0, 1, 2, -1.0), (0, 2, 3, -2.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 1, 0, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 2, 2, 2.0), (0, 1, 3, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(2, 2, 1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 0, 0, 2],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -3.0), (0, 1, 2, -2.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 3, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 3, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(3, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 1, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, 1.0), (0, 2, 2, 1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 2, 4, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 3, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 0, 3, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 1, -2.0), (0, 3, 1, -2.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 0, 0, 1, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 1, -2.0), (0, 2, 2, 2.0), (0, 1, 3, -1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 0, 1, 4, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -2.0), (0, 3, 2, -2.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (2, 2, 1.0)],
    },
];

pub const EXTENDED_PRIMARY: &[ReferenceRow] = &[
    ReferenceRow {
        slots: &[0, 1, 5, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 1, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 2, 5, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 3, 5, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 1, -1.0), (0, 3, 1, -1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 4, 5, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 3, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 5, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 5, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -1.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 2, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 1, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(3, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 4, 0, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, -1.0), (0, 1, 1, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 4, 0, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 2, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(1, 1, 1.0), (2, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 5, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -1.0), (0, 2, 1, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 3, 2, -1.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 2, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[3, 0, 4, 5, 5, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 3, -1.0), (0, 3, 3, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 0, 2, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 0, -2.0), (0, 0, 3, -1.0), (0, 3, 3, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 3, 0, 2, 5, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 3, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(2, 2, 1.0), (1, 3, -1.0)],
    },
];

pub const EXTENDED_COMPLEMENT: &[ReferenceRow] = &[
    ReferenceRow {
        slots: &[0, 1, 5, 5, 2, 4],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 1, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 2, 5, 5, 0, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -1.0), (0, 2, 1, -1.0), (0, 1, 2, -1.0), (0, 2, 3, -1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 3, 5, 5, 4, 3],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 3, 2, -1.0)],
        init_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[0, 4, 5, 5, 0, 2],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -2.0), (0, 3, 2, -2.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 5, 5, 1, 2],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 0, 5, 5, 2, 0],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 1, 2, -1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 2, 5, 1, 2],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 2, 2, 1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(1, 1, -1.0), (2, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 3, 0, 5, 4, 2],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 3, -1.0), (0, 2, 3, 1.0)],
        init_terms: &[(2, 1, -1.0), (1, 2, -1.0)],
        meas_terms: &[(3, 1, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[1, 4, 0, 5, 2, 4],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 3, 0, -1.0), (0, 3, 1, -1.0)],
        init_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 4, 0, 5, 0, 2],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 2, -1.0), (0, 2, 2, 1.0), (0, 3, 2, -1.0), (0, 1, 3, -1.0)],
        init_terms: &[(1, 1, 1.0), (2, 2, -1.0)],
        meas_terms: &[(0, 2, -1.0), (2, 2, 1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 5, 0, 3],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, -2.0), (0, 2, 1, -2.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(2, 0, -1.0), (2, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 4, 0, 5, 3, 5],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 2, 2, -1.0), (0, 3, 3, 1.0)],
        init_terms: &[(2, 1, 1.0), (1, 2, 1.0)],
        meas_terms: &[(0, 2, -1.0), (1, 2, -1.0)],
    },
    ReferenceRow {
        slots: &[3, 0, 4, 5, 4, 0],
        meas: 1,
        r0: 0.0,
        gate_terms: &[(0, 0, 1, 1.0), (0, 3, 1, 1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(0, 1, -1.0), (3, 1, -1.0)],
    },
    ReferenceRow {
        slots: &[1, 0, 0, 2, 2, 4],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 1, 0, 1.0), (0, 1, 1, 1.0), (0, 2, 2, -1.0), (0, 1, 3, 1.0)],
        init_terms: &[(2, 0, -1.0), (2, 3, -1.0)],
        meas_terms: &[(1, 0, -1.0), (1, 3, -1.0)],
    },
    ReferenceRow {
        slots: &[2, 3, 0, 2, 2, 5],
        meas: 0,
        r0: 0.0,
        gate_terms: &[(0, 2, 0, 1.0), (0, 2, 2, -1.0)],
        init_terms: &[(0, 2, -1.0), (3, 2, -1.0)],
        meas_terms: &[(2, 2, 1.0), (1, 3, -1.0)],
    },
];


/// Syndrome rows of the main entangling-gate set (probe rows excluded).
pub fn main_syndrome_rows() -> &'static [ReferenceRow] {
    &MAIN[..15]
}

/// Decoherence probe rows of the main set (ideal response 1).
pub fn main_probe_rows() -> &'static [ReferenceRow] {
    &MAIN[15..]
}

/// Syndrome rows of the full-gate-set table (the trailing two rows are the
/// shared offset-cancellation partners).
pub fn full_set_syndrome_rows() -> &'static [ReferenceRow] {
    &FULL_SET[..25]
}

/// Shared offset-cancellation rows of the full-gate-set table, one per
/// measurement.
pub fn full_set_offset_rows() -> &'static [ReferenceRow] {
    &FULL_SET[25..]
}
