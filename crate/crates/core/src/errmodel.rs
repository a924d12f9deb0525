//! Coherent error operators, perturbed sequence unitaries and measurement
//! responses, including the SPAM-extended variant with identity pseudo-gates
//! for initialization and measurement errors.

use crate::error::GscError;
use crate::gateset::GateSet;
use crate::linalg::{cr, CMatrix, C64, IM};
use crate::pauli::PauliBasis;
use crate::Result;

/// Coherent error strengths p[g, k] for every gate block over the traceless
/// Pauli basis (k = 1 .. d²−1; the identity component is excluded).
///
/// Flattening to vector form uses u = g·(d²−1) + (k−1), gate blocks in
/// order. SPAM pseudo-gate blocks, when enabled, append after the regular
/// gate blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorParameters {
    n_gates: usize,
    dim: usize,
    values: Vec<f64>,
}

impl ErrorParameters {
    pub fn zeros(n_gates: usize, dim: usize) -> Self {
        Self {
            n_gates,
            dim,
            values: vec![0.0; n_gates * (dim * dim - 1)],
        }
    }

    pub fn from_flat(n_gates: usize, dim: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != n_gates * (dim * dim - 1) {
            return Err(GscError::DimensionMismatch(format!(
                "expected {} error parameters, got {}",
                n_gates * (dim * dim - 1),
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(GscError::InvalidArgument(
                "error parameters must be finite".into(),
            ));
        }
        Ok(Self {
            n_gates,
            dim,
            values,
        })
    }

    pub fn n_gates(&self) -> usize {
        self.n_gates
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of parameters per gate block, d²−1.
    pub fn block_len(&self) -> usize {
        self.dim * self.dim - 1
    }

    pub fn flat(&self) -> &[f64] {
        &self.values
    }

    /// Entry for gate block `g` and Pauli index `k` (1 ..= d²−1).
    pub fn get(&self, g: usize, k: usize) -> f64 {
        assert!(k >= 1 && k <= self.block_len(), "pauli index out of range");
        self.values[g * self.block_len() + (k - 1)]
    }

    pub fn set(&mut self, g: usize, k: usize, value: f64) {
        assert!(k >= 1 && k <= self.block_len(), "pauli index out of range");
        let b = self.block_len();
        self.values[g * b + (k - 1)] = value;
    }

    pub fn block(&self, g: usize) -> &[f64] {
        let b = self.block_len();
        &self.values[g * b..(g + 1) * b]
    }

    /// Small-error regime guard: every |p| below 1.
    pub fn is_small_error(&self) -> bool {
        self.values.iter().all(|v| v.abs() < 1.0)
    }

    /// Euclidean norm of one gate block.
    pub fn block_norm(&self, g: usize) -> f64 {
        self.block(g).iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Coherent error operator for one gate block:
/// Π_k (I − i·p_k·σ_k)/√(1+p_k²), ascending k applied rightmost-first.
pub fn coherent_error_op(p_block: &[f64], basis: &PauliBasis) -> CMatrix {
    let d = basis.dim;
    debug_assert_eq!(p_block.len(), d * d - 1);
    let mut e = CMatrix::identity(d, d);
    for (offset, &p) in p_block.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        let sigma = basis.element(offset + 1);
        let scale = cr(1.0 / (1.0 + p * p).sqrt());
        // F_k = (I − i p σ_k)/√(1+p²); new factors multiply on the left so
        // k = 1 stays rightmost.
        let factor = (CMatrix::identity(d, d) - sigma.map(|z| IM * cr(p) * z)).map(|z| z * scale);
        e = factor * e;
    }
    e
}

/// Derivative of the error operator with respect to its k-th parameter.
fn coherent_error_op_derivative(p_block: &[f64], basis: &PauliBasis, k: usize) -> CMatrix {
    let d = basis.dim;
    let mut e = CMatrix::identity(d, d);
    for (offset, &p) in p_block.iter().enumerate() {
        let sigma = basis.element(offset + 1);
        let factor = if offset + 1 == k {
            // d/dp (I − ipσ)(1+p²)^{−1/2} = (−iσ − pI)(1+p²)^{−3/2}
            let denom = cr((1.0 + p * p).powf(1.5));
            (sigma.map(|z| -IM * z) - CMatrix::identity(d, d).scale(p)).map(|z| z / denom)
        } else {
            if p == 0.0 {
                continue;
            }
            let scale = cr(1.0 / (1.0 + p * p).sqrt());
            (CMatrix::identity(d, d) - sigma.map(|z| IM * cr(p) * z)).map(|z| z * scale)
        };
        e = factor * e;
    }
    e
}

/// Unitary of a gate sequence perturbed by per-gate coherent errors:
/// gates applied in time order (first listed acts first), each preceded by
/// its own error operator. An empty sequence yields the identity.
pub fn sequence_unitary(
    seq: &[usize],
    p: &ErrorParameters,
    gates: &GateSet,
    basis: &PauliBasis,
) -> CMatrix {
    let d = gates.dim();
    let mut u = CMatrix::identity(d, d);
    for &g in seq {
        let e = coherent_error_op(p.block(g), basis);
        u = gates.gate(g) * e * u;
    }
    u
}

fn check_measurement(m: &CMatrix) -> Result<()> {
    if !crate::linalg::is_hermitian(m, 1e-10) {
        return Err(GscError::NotHermitian {
            tol: 1e-10,
            dev: crate::linalg::hermiticity_deviation(m),
        });
    }
    Ok(())
}

fn real_trace(product: CMatrix) -> Result<f64> {
    let tr: C64 = product.trace();
    if tr.im.abs() >= 1e-12 {
        return Err(GscError::InvalidArgument(format!(
            "response has imaginary residue {:e}",
            tr.im
        )));
    }
    Ok(tr.re)
}

/// Measurement response R = tr(U ρ U† M) for a perturbed sequence.
pub fn response(
    seq: &[usize],
    rho: &CMatrix,
    m: &CMatrix,
    p: &ErrorParameters,
    gates: &GateSet,
    basis: &PauliBasis,
) -> Result<f64> {
    check_measurement(m)?;
    let u = sequence_unitary(seq, p, gates, basis);
    real_trace(&u * rho * u.adjoint() * m)
}

/// Block layout of SPAM-extended error parameters: regular gate blocks,
/// then one block per initial state, then one block per measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpamLayout {
    pub n_gates: usize,
    pub n_inits: usize,
    pub n_meas: usize,
}

impl SpamLayout {
    pub fn total_blocks(&self) -> usize {
        self.n_gates + self.n_inits + self.n_meas
    }

    pub fn init_block(&self, i: usize) -> usize {
        debug_assert!(i < self.n_inits);
        self.n_gates + i
    }

    pub fn meas_block(&self, m: usize) -> usize {
        debug_assert!(m < self.n_meas);
        self.n_gates + self.n_inits + m
    }

    pub fn check(&self, p: &ErrorParameters) -> Result<()> {
        if p.n_gates() != self.total_blocks() {
            return Err(GscError::DimensionMismatch(format!(
                "SPAM layout expects {} blocks ({} gates + {} inits + {} measurements), got {}",
                self.total_blocks(),
                self.n_gates,
                self.n_inits,
                self.n_meas,
                p.n_gates()
            )));
        }
        Ok(())
    }
}

/// SPAM-extended response tr(V ρ V† M) with
/// V = E_meas · U_s(p) · E_init, the pseudo-gates being identities carrying
/// their own error blocks. With zero SPAM blocks this reduces exactly to
/// [`response`].
pub fn spam_extended_response(
    seq: &[usize],
    state_index: usize,
    meas_index: usize,
    rho: &CMatrix,
    m: &CMatrix,
    p_extended: &ErrorParameters,
    layout: SpamLayout,
    gates: &GateSet,
    basis: &PauliBasis,
) -> Result<f64> {
    layout.check(p_extended)?;
    check_measurement(m)?;
    let e_init = coherent_error_op(p_extended.block(layout.init_block(state_index)), basis);
    let e_meas = coherent_error_op(p_extended.block(layout.meas_block(meas_index)), basis);
    let u = sequence_unitary(seq, p_extended, gates, basis);
    let v = e_meas * u * e_init;
    real_trace(&v * rho * v.adjoint() * m)
}

/// Analytic first derivative of the ideal-point response with respect to one
/// flat error parameter, for cross-checking finite differences. Evaluated at
/// arbitrary `p` by the product rule over every occurrence of the gate.
pub fn response_derivative(
    seq: &[usize],
    rho: &CMatrix,
    m: &CMatrix,
    p: &ErrorParameters,
    gates: &GateSet,
    basis: &PauliBasis,
    flat_index: usize,
) -> Result<f64> {
    check_measurement(m)?;
    let block = flat_index / p.block_len();
    let k = flat_index % p.block_len() + 1;
    let d = gates.dim();
    let u = sequence_unitary(seq, p, gates, basis);

    // dU = Σ over occurrences t of gate `block`:
    //      (suffix product) · G · dE · (prefix product)
    let mut du = CMatrix::zeros(d, d);
    let mut prefix = CMatrix::identity(d, d); // product of steps before t
    for (t, &g) in seq.iter().enumerate() {
        if g == block {
            let mut suffix = CMatrix::identity(d, d);
            for &g2 in &seq[t + 1..] {
                let e2 = coherent_error_op(p.block(g2), basis);
                suffix = gates.gate(g2) * e2 * suffix;
            }
            let de = coherent_error_op_derivative(p.block(g), basis, k);
            du += suffix * gates.gate(g) * de * &prefix;
        }
        let e = coherent_error_op(p.block(g), basis);
        prefix = gates.gate(g) * e * prefix;
    }
    let term: C64 = (du * rho * u.adjoint() * m).trace();
    Ok(2.0 * term.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gateset::standard_two_qubit;
    use crate::linalg::{c, is_unitary, max_abs_diff};
    use crate::pauli::pauli_basis;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn ket00() -> CMatrix {
        let mut rho = CMatrix::zeros(4, 4);
        rho[(0, 0)] = cr(1.0);
        rho
    }

    fn m1() -> CMatrix {
        pauli_basis(2).unwrap().element(12).clone() // Z⊗I
    }

    fn m2() -> CMatrix {
        pauli_basis(2).unwrap().element(3).clone() // I⊗Z
    }

    fn central_diff(
        seq: &[usize],
        rho: &CMatrix,
        m: &CMatrix,
        p0: &ErrorParameters,
        gates: &GateSet,
        basis: &PauliBasis,
        flat: usize,
        h: f64,
    ) -> f64 {
        let mut plus = p0.clone();
        let mut minus = p0.clone();
        let mut vp = plus.flat().to_vec();
        vp[flat] += h;
        plus = ErrorParameters::from_flat(p0.n_gates(), p0.dim(), vp).unwrap();
        let mut vm = minus.flat().to_vec();
        vm[flat] -= h;
        minus = ErrorParameters::from_flat(p0.n_gates(), p0.dim(), vm).unwrap();
        let rp = response(seq, rho, m, &plus, gates, basis).unwrap();
        let rm = response(seq, rho, m, &minus, gates, basis).unwrap();
        (rp - rm) / (2.0 * h)
    }

    #[test]
    fn zero_error_is_identity() {
        let basis = pauli_basis(2).unwrap();
        let p = vec![0.0; 15];
        let e = coherent_error_op(&p, &basis);
        assert!(max_abs_diff(&e, &CMatrix::identity(4, 4)) < 1e-15);
    }

    #[test]
    fn single_factor_matches_arctan_rotation() {
        let basis = pauli_basis(2).unwrap();
        let mut p = vec![0.0; 15];
        let p_val = 0.3;
        p[11] = p_val; // k = 12 → Z⊗I
        let e = coherent_error_op(&p, &basis);
        let expected = crate::linalg::expm_hermitian(
            &basis.element(12).scale(p_val.atan()),
            1.0,
        )
        .unwrap();
        assert!(max_abs_diff(&e, &expected) < 1e-12);
    }

    #[test]
    fn error_op_always_unitary() {
        let basis = pauli_basis(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let p: Vec<f64> = (0..15).map(|_| rng.random_range(-0.9..0.9)).collect();
            let e = coherent_error_op(&p, &basis);
            assert!(is_unitary(&e, 1e-10));
        }
    }

    #[test]
    fn factor_order_commutator_bound() {
        let basis = pauli_basis(2).unwrap();
        let (ki, kj) = (2usize, 9usize);
        let (pi, pj) = (0.12, 0.07);
        let mut p = vec![0.0; 15];
        p[ki - 1] = pi;
        p[kj - 1] = pj;
        let forward = coherent_error_op(&p, &basis);
        // Same factors applied in the swapped order.
        let factor = |k: usize, p: f64| {
            (CMatrix::identity(4, 4) - basis.element(k).map(|z| IM * cr(p) * z))
                .map(|z| z * cr(1.0 / (1.0 + p * p).sqrt()))
        };
        let swapped = factor(ki, pi) * factor(kj, pj);
        // Spectral norm of the difference: bounded by the commutator term.
        let diff_m = forward.clone() - swapped;
        let diff = diff_m.svd(false, false).singular_values.max();
        assert!(diff > 0.0, "orders should differ at second order");
        assert!(diff <= 2.0 * (pi * pj).abs() + 1e-9, "diff = {}", diff);
    }

    #[test]
    fn sequence_unitary_ideal_product() {
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let p = ErrorParameters::zeros(gates.len(), 4);
        let seq = [0usize, 1, 3];
        let u = sequence_unitary(&seq, &p, &gates, &basis);
        let expected = gates.gate(3) * gates.gate(1) * gates.gate(0);
        assert!(max_abs_diff(&u, &expected) < 1e-13);
        // Empty sequence → identity.
        let empty = sequence_unitary(&[], &p, &gates, &basis);
        assert!(max_abs_diff(&empty, &CMatrix::identity(4, 4)) < 1e-15);
    }

    #[test]
    fn sequence_unitary_identity_pseudo_gate() {
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let mut p = ErrorParameters::zeros(gates.len(), 4);
        p.set(5, 3, 0.2);
        let u = sequence_unitary(&[5], &p, &gates, &basis);
        let e = coherent_error_op(p.block(5), &basis);
        assert!(max_abs_diff(&u, &e) < 1e-15);
    }

    #[test]
    fn sequence_unitary_matches_accumulation_oracle() {
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let flat: Vec<f64> = (0..6 * 15).map(|_| rng.random_range(-0.05..0.05)).collect();
        let p = ErrorParameters::from_flat(6, 4, flat).unwrap();
        let seq = [2usize, 0, 4, 1];
        let u = sequence_unitary(&seq, &p, &gates, &basis);
        // Right-associated accumulation, one matrix at a time.
        let mut oracle = CMatrix::identity(4, 4);
        for &g in seq.iter() {
            let step = gates.gate(g) * coherent_error_op(p.block(g), &basis);
            oracle = step * oracle;
        }
        assert!(max_abs_diff(&u, &oracle) < 1e-13);
    }

    #[test]
    fn ideal_responses() {
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let p = ErrorParameters::zeros(gates.len(), 4);
        // Identity sequence on |00⟩ measured with Z⊗I.
        let r = response(&[5], &ket00(), &m1(), &p, &gates, &basis).unwrap();
        assert!((r - 1.0).abs() < 1e-14);
        // (g1, g1) reproduces the initial state for both measurements.
        for m in [m1(), m2()] {
            let r = response(&[0, 0], &ket00(), &m, &p, &gates, &basis).unwrap();
            assert!((r - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn first_row_derivatives() {
        // Sequence (g1, g2) with M1: ∂R/∂p_{1,XX} = −2, ∂R/∂p_{1,YY} = +2.
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let p0 = ErrorParameters::zeros(gates.len(), 4);
        let seq = [0usize, 1];
        let k_xx = basis.index(&[1, 1]); // 5
        let k_yy = basis.index(&[2, 2]); // 10
        let d_xx = central_diff(&seq, &ket00(), &m1(), &p0, &gates, &basis, k_xx - 1, 1e-5);
        let d_yy = central_diff(&seq, &ket00(), &m1(), &p0, &gates, &basis, k_yy - 1, 1e-5);
        assert!((d_xx + 2.0).abs() < 1e-8, "d_xx = {}", d_xx);
        assert!((d_yy - 2.0).abs() < 1e-8, "d_yy = {}", d_yy);
    }

    #[test]
    fn central_diff_matches_analytic_derivative() {
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let flat: Vec<f64> = (0..6 * 15).map(|_| rng.random_range(-0.02..0.02)).collect();
        let p = ErrorParameters::from_flat(6, 4, flat).unwrap();
        let seq = [1usize, 0, 3];
        for flat_idx in [0usize, 5, 14, 20, 47] {
            let numeric = central_diff(&seq, &ket00(), &m1(), &p, &gates, &basis, flat_idx, 1e-5);
            let analytic =
                response_derivative(&seq, &ket00(), &m1(), &p, &gates, &basis, flat_idx).unwrap();
            assert!(
                (numeric - analytic).abs() < 1e-7,
                "u={}: {} vs {}",
                flat_idx,
                numeric,
                analytic
            );
        }
    }

    #[test]
    fn response_rejects_non_hermitian_measurement() {
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let p = ErrorParameters::zeros(gates.len(), 4);
        let mut m = CMatrix::zeros(4, 4);
        m[(0, 1)] = c(0.0, 0.3);
        assert!(response(&[0], &ket00(), &m, &p, &gates, &basis).is_err());
    }

    #[test]
    fn spam_reduces_to_plain_response() {
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let layout = SpamLayout {
            n_gates: 6,
            n_inits: 1,
            n_meas: 2,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let mut flat = vec![0.0; layout.total_blocks() * 15];
        for v in flat.iter_mut().take(6 * 15) {
            *v = rng.random_range(-0.03..0.03);
        }
        let p_ext = ErrorParameters::from_flat(layout.total_blocks(), 4, flat.clone()).unwrap();
        let p_plain = ErrorParameters::from_flat(6, 4, flat[..6 * 15].to_vec()).unwrap();
        let seq = [0usize, 2];
        let r_spam = spam_extended_response(
            &seq, 0, 0, &ket00(), &m1(), &p_ext, layout, &gates, &basis,
        )
        .unwrap();
        let r_plain = response(&seq, &ket00(), &m1(), &p_plain, &gates, &basis).unwrap();
        assert!((r_spam - r_plain).abs() < 1e-14);
    }

    #[test]
    fn spam_layout_mismatch_rejected() {
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let layout = SpamLayout {
            n_gates: 6,
            n_inits: 1,
            n_meas: 2,
        };
        let p_bad = ErrorParameters::zeros(7, 4);
        assert!(spam_extended_response(
            &[0], 0, 0, &ket00(), &m1(), &p_bad, layout, &gates, &basis
        )
        .is_err());
    }

    #[test]
    fn spam_first_row_init_and_meas_derivatives() {
        // Sequence (g1, g2), M1: init column −2·XX +2·YY; meas column −2·XI −2·XZ.
        let gates = standard_two_qubit();
        let basis = pauli_basis(2).unwrap();
        let layout = SpamLayout {
            n_gates: 6,
            n_inits: 1,
            n_meas: 2,
        };
        let seq = [0usize, 1];
        let h = 1e-5;
        let diff = |block: usize, k: usize| -> f64 {
            let mut flat = vec![0.0; layout.total_blocks() * 15];
            flat[block * 15 + (k - 1)] = h;
            let pp = ErrorParameters::from_flat(layout.total_blocks(), 4, flat.clone()).unwrap();
            flat[block * 15 + (k - 1)] = -h;
            let pm = ErrorParameters::from_flat(layout.total_blocks(), 4, flat).unwrap();
            let rp = spam_extended_response(
                &seq, 0, 0, &ket00(), &m1(), &pp, layout, &gates, &basis,
            )
            .unwrap();
            let rm = spam_extended_response(
                &seq, 0, 0, &ket00(), &m1(), &pm, layout, &gates, &basis,
            )
            .unwrap();
            (rp - rm) / (2.0 * h)
        };
        let init = layout.init_block(0);
        let meas = layout.meas_block(0);
        assert!((diff(init, basis.index(&[1, 1])) + 2.0).abs() < 1e-8);
        assert!((diff(init, basis.index(&[2, 2])) - 2.0).abs() < 1e-8);
        assert!((diff(meas, basis.index(&[1, 0])) + 2.0).abs() < 1e-8);
        assert!((diff(meas, basis.index(&[1, 3])) + 2.0).abs() < 1e-8);
    }
}
