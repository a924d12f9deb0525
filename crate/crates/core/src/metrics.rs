//! Average gate fidelity and leakage on a computational subspace.
//!
//! Both metrics work from the same truncation V_c of a (possibly larger)
//! simulation-space unitary onto the computational subspace, so that
//! fidelity loss and leakage stay consistent:
//!
//!   F = (|tr(V_c† U_t)|² + tr(V_c† V_c)) / (d(d+1)),
//!   L = 1 − tr(V_c† V_c)/d.

use crate::error::GscError;
use crate::linalg::{CMatrix, C64};
use crate::Result;

/// Truncation of `u` to the rows/columns listed in `subspace`.
pub fn truncate(u: &CMatrix, subspace: &[usize]) -> Result<CMatrix> {
    for &i in subspace {
        if i >= u.nrows() || i >= u.ncols() {
            return Err(GscError::DimensionMismatch(format!(
                "subspace index {} out of range for {}x{} matrix",
                i,
                u.nrows(),
                u.ncols()
            )));
        }
    }
    let d = subspace.len();
    Ok(CMatrix::from_fn(d, d, |i, j| u[(subspace[i], subspace[j])]))
}

/// Average gate fidelity of `u` against a target unitary on an explicit
/// computational subspace of the simulation space.
pub fn avg_gate_fidelity_on(u: &CMatrix, target: &CMatrix, subspace: &[usize]) -> Result<f64> {
    let d = subspace.len();
    if target.nrows() != d || target.ncols() != d {
        return Err(GscError::DimensionMismatch(format!(
            "target is {}x{} but subspace has {} states",
            target.nrows(),
            target.ncols(),
            d
        )));
    }
    let vc = truncate(u, subspace)?;
    let overlap: C64 = (vc.adjoint() * target).trace();
    let weight: C64 = (vc.adjoint() * &vc).trace();
    let df = d as f64;
    Ok((overlap.norm_sqr() + weight.re) / (df * (df + 1.0)))
}

/// Average gate fidelity with the computational subspace taken as the first
/// `target.nrows()` simulation states. For same-sized operands this is the
/// plain two-unitary fidelity.
pub fn avg_gate_fidelity(u: &CMatrix, target: &CMatrix) -> Result<f64> {
    let d = target.nrows();
    if u.nrows() < d || u.ncols() < d {
        return Err(GscError::DimensionMismatch(format!(
            "gate is {}x{} but target needs dimension {}",
            u.nrows(),
            u.ncols(),
            d
        )));
    }
    let subspace: Vec<usize> = (0..d).collect();
    avg_gate_fidelity_on(u, target, &subspace)
}

/// Population escaping the computational subspace: L = 1 − tr(V_c†V_c)/d.
pub fn leakage(u: &CMatrix, subspace: &[usize]) -> Result<f64> {
    let vc = truncate(u, subspace)?;
    let weight: C64 = (vc.adjoint() * &vc).trace();
    Ok(1.0 - weight.re / subspace.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, cr, expm_hermitian, kron, CMatrix, IM};
    use crate::pauli::{pauli_basis, pauli_z};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_unitary(n: usize, rng: &mut impl Rng) -> CMatrix {
        let a = CMatrix::from_fn(n, n, |_, _| {
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let h = (&a + a.adjoint()).scale(0.5);
        expm_hermitian(&h, 1.0).unwrap()
    }

    #[test]
    fn fidelity_of_exact_gate_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = random_unitary(4, &mut rng);
        let f = avg_gate_fidelity(&u, &u).unwrap();
        assert!((f - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelity_small_z_rotation() {
        // 1 − F = (d/(d+1))·sin²p for U = exp(−i p Z)·U_t on one qubit.
        let p = 0.01;
        let target = CMatrix::identity(2, 2);
        let u = expm_hermitian(&pauli_z().scale(p), 1.0).unwrap();
        let f = avg_gate_fidelity(&u, &target).unwrap();
        let leading = 2.0 / 3.0 * p * p;
        assert!((1.0 - f - leading).abs() < 5e-9, "1-F = {}", 1.0 - f);
        assert!(((1.0 - f) - 6.667e-5).abs() < 1e-8);
    }

    #[test]
    fn fidelity_global_phase_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let target = random_unitary(4, &mut rng);
        for &phi in &[0.3, 1.2, -2.8] {
            let u = target.map(|z| z * (IM * cr(phi)).exp());
            let f = avg_gate_fidelity(&u, &target).unwrap();
            assert!((f - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn fidelity_dimension_mismatch() {
        let u = CMatrix::identity(2, 2);
        let t = CMatrix::identity(4, 4);
        assert!(avg_gate_fidelity(&u, &t).is_err());
    }

    #[test]
    fn leakage_block_diagonal_is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let block = random_unitary(4, &mut rng);
        let mut u = CMatrix::identity(6, 6);
        for i in 0..4 {
            for j in 0..4 {
                u[(i + 1, j + 1)] = block[(i, j)];
            }
        }
        let l = leakage(&u, &[1, 2, 3, 4]).unwrap();
        assert!(l.abs() < 1e-14);
    }

    #[test]
    fn leakage_one_state_swapped_out() {
        // Swap computational state 0 with leakage state 4 → one column lost.
        let mut u = CMatrix::identity(6, 6);
        u[(0, 0)] = cr(0.0);
        u[(4, 4)] = cr(0.0);
        u[(4, 0)] = cr(1.0);
        u[(0, 4)] = cr(1.0);
        let l = leakage(&u, &[0, 1, 2, 3]).unwrap();
        assert!((l - 0.25).abs() < 1e-14);
    }

    #[test]
    fn leakage_matches_column_norm_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let u = random_unitary(6, &mut rng);
        let sub = [1usize, 2, 3, 4];
        let l = leakage(&u, &sub).unwrap();
        // Element-wise: 1 − mean squared column norms of the 4×4 block.
        let mut acc = 0.0;
        for &j in &sub {
            for &i in &sub {
                acc += u[(i, j)].norm_sqr();
            }
        }
        assert!((l - (1.0 - acc / 4.0)).abs() < 1e-13);
        // Complement identity: leakage + tr(V_c†V_c)/d = 1 exactly.
        let vc = truncate(&u, &sub).unwrap();
        let w: C64 = (vc.adjoint() * &vc).trace();
        assert_eq!(l + w.re / 4.0, 1.0);
    }

    #[test]
    fn leakage_rejects_bad_indices() {
        let u = CMatrix::identity(4, 4);
        assert!(leakage(&u, &[0, 1, 2, 7]).is_err());
    }

    #[test]
    fn subspace_fidelity_consistent_with_small_error() {
        // exp(−i p Z⊗I) error on an embedded two-qubit identity.
        let basis = pauli_basis(2).unwrap();
        let p = 0.02;
        let err = expm_hermitian(&basis.element(12).scale(p), 1.0).unwrap(); // Z⊗I = index 12
        let mut u = CMatrix::identity(6, 6);
        for i in 0..4 {
            for j in 0..4 {
                u[(i + 1, j + 1)] = err[(i, j)];
            }
        }
        let target = kron(&CMatrix::identity(2, 2), &CMatrix::identity(2, 2));
        let f = avg_gate_fidelity_on(&u, &target, &[1, 2, 3, 4]).unwrap();
        // For a single Pauli error exp(−ipσ): 1−F = d/(d+1)·sin²p.
        let expected = 4.0 / 5.0 * p.sin().powi(2);
        assert!((1.0 - f - expected).abs() < 1e-10);
    }
}
