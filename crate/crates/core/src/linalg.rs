//! Complex dense linear algebra used by every other module: propagators,
//! Hermitian/unitary predicates, pivoted QR and condition diagnostics.
//!
//! Matrices are `nalgebra` dynamic matrices over `Complex<f64>` (states,
//! gates, Hamiltonians) or `f64` (sensitivity matrices).

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::GscError;
use crate::Result;

pub type C64 = Complex<f64>;
/// Dense complex matrix (row-major indexing through `(row, col)`).
pub type CMatrix = DMatrix<C64>;
/// Dense real matrix.
pub type RMatrix = DMatrix<f64>;
pub type CVector = DVector<C64>;
pub type RVector = DVector<f64>;

pub const IM: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn cr(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Maximum entry-wise modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// ‖U†U − I‖_max.
pub fn unitarity_deviation(u: &CMatrix) -> f64 {
    let n = u.ncols();
    max_abs_diff(&(u.adjoint() * u), &CMatrix::identity(n, n))
}

pub fn is_unitary(u: &CMatrix, tol: f64) -> bool {
    u.is_square() && unitarity_deviation(u) < tol
}

/// ‖H − H†‖_max.
pub fn hermiticity_deviation(h: &CMatrix) -> f64 {
    max_abs_diff(h, &h.adjoint())
}

pub fn is_hermitian(h: &CMatrix, tol: f64) -> bool {
    h.is_square() && hermiticity_deviation(h) < tol
}

fn check_hermitian(h: &CMatrix, tol: f64) -> Result<()> {
    if !h.is_square() {
        return Err(GscError::DimensionMismatch(format!(
            "expected square matrix, got {}x{}",
            h.nrows(),
            h.ncols()
        )));
    }
    let dev = hermiticity_deviation(h);
    if dev >= tol {
        return Err(GscError::NotHermitian { tol, dev });
    }
    Ok(())
}

/// Propagator exp(−i·H·t) for a Hermitian generator, via eigendecomposition.
///
/// `H` carries angular-frequency units (ns⁻¹), `t` is in ns. The result is
/// unitary up to rounding because the eigenbasis is orthonormal.
pub fn expm_hermitian(h: &CMatrix, t: f64) -> Result<CMatrix> {
    check_hermitian(h, 1e-10)?;
    // Symmetrize first so the eigensolver sees an exactly Hermitian input.
    let hs = (h + h.adjoint()).scale(0.5);
    let eig = nalgebra::SymmetricEigen::new(hs);
    let phases = CVector::from_iterator(
        eig.eigenvalues.len(),
        eig.eigenvalues.iter().map(|&l| (-IM * cr(l * t)).exp()),
    );
    Ok(&eig.eigenvectors * CMatrix::from_diagonal(&phases) * eig.eigenvectors.adjoint())
}

/// Column-pivoted Householder QR of a complex matrix.
///
/// `a * P = q * r` with orthonormal `q` columns, upper-triangular `r`, and
/// `|r[k,k]|` non-increasing. Ties in the pivot choice resolve to the
/// smallest column index so the factorization is deterministic.
#[derive(Debug, Clone)]
pub struct PivotedQr {
    pub q: CMatrix,
    pub r: CMatrix,
    /// `permutation[j]` = original column placed at position j.
    pub permutation: Vec<usize>,
}

impl PivotedQr {
    /// Number of diagonal entries with |r_kk| > threshold·|r_00|.
    pub fn rank(&self, rel_threshold: f64) -> usize {
        let k = self.r.nrows().min(self.r.ncols());
        if k == 0 {
            return 0;
        }
        let head = self.r[(0, 0)].norm();
        if head == 0.0 {
            return 0;
        }
        (0..k)
            .take_while(|&i| self.r[(i, i)].norm() > rel_threshold * head)
            .count()
    }

    pub fn diag_abs(&self) -> Vec<f64> {
        let k = self.r.nrows().min(self.r.ncols());
        (0..k).map(|i| self.r[(i, i)].norm()).collect()
    }
}

pub fn pivoted_qr(a: &CMatrix) -> PivotedQr {
    let (m, n) = a.shape();
    let k = m.min(n);
    let mut r = a.clone();
    let mut q = CMatrix::identity(m, m);
    let mut permutation: Vec<usize> = (0..n).collect();

    let trailing_norm = |r: &CMatrix, row0: usize, col: usize| -> f64 {
        (row0..m).map(|i| r[(i, col)].norm_sqr()).sum::<f64>().sqrt()
    };

    for j in 0..k {
        // Pivot on the largest trailing column norm; strict comparison keeps
        // the smallest index on ties.
        let mut best = j;
        let mut best_norm = trailing_norm(&r, j, j);
        for col in j + 1..n {
            let nv = trailing_norm(&r, j, col);
            if nv > best_norm * (1.0 + 1e-14) && nv > best_norm {
                best = col;
                best_norm = nv;
            }
        }
        if best != j {
            r.swap_columns(j, best);
            permutation.swap(j, best);
        }
        let sigma = best_norm;
        if sigma == 0.0 {
            continue; // trailing block is zero; remaining diagonal stays 0
        }
        let x0 = r[(j, j)];
        let phase = if x0.norm() > 0.0 { x0 / cr(x0.norm()) } else { cr(1.0) };
        let alpha = -phase * cr(sigma);
        // v = x − α e1, stored over rows j..m of a scratch vector.
        let mut v = CVector::zeros(m - j);
        for i in j..m {
            v[i - j] = r[(i, j)];
        }
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = cr(2.0 / vnorm2);
        // r[j.., c] -= v * (beta * v† r[j.., c])
        for col in j..n {
            let mut w = C64::new(0.0, 0.0);
            for i in 0..m - j {
                w += v[i].conj() * r[(j + i, col)];
            }
            w *= beta;
            for i in 0..m - j {
                r[(j + i, col)] -= v[i] * w;
            }
        }
        r[(j, j)] = alpha;
        for i in j + 1..m {
            r[(i, j)] = C64::new(0.0, 0.0);
        }
        // q[:, j..] -= (q[:, j..] v) * beta * v†
        for row in 0..m {
            let mut w = C64::new(0.0, 0.0);
            for i in 0..m - j {
                w += q[(row, j + i)] * v[i];
            }
            w *= beta;
            for i in 0..m - j {
                q[(row, j + i)] -= w * v[i].conj();
            }
        }
    }

    // Thin factors: q is m×k, r is k×n with explicit zeros below the diagonal.
    let q = q.columns(0, k).into_owned();
    let mut r = r.rows(0, k).into_owned();
    for i in 0..k {
        for j in 0..i.min(r.ncols()) {
            r[(i, j)] = C64::new(0.0, 0.0);
        }
    }
    PivotedQr { q, r, permutation }
}

/// Pivoted QR specialized to real matrices (sensitivity matrices are real).
#[derive(Debug, Clone)]
pub struct PivotedQrReal {
    pub r_diag_abs: Vec<f64>,
    pub permutation: Vec<usize>,
}

pub fn pivoted_qr_real(a: &RMatrix) -> PivotedQrReal {
    let complex = a.map(|x| cr(x));
    let qr = pivoted_qr(&complex);
    PivotedQrReal {
        r_diag_abs: qr.diag_abs(),
        permutation: qr.permutation,
    }
}

/// Ratio of largest to smallest singular value; +∞ for singular matrices.
pub fn condition_number(a: &CMatrix) -> Result<f64> {
    if a.iter().all(|z| z.norm() == 0.0) {
        return Err(GscError::InvalidArgument(
            "condition number of the zero matrix is undefined".into(),
        ));
    }
    let svd = a.clone().svd(false, false);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    if min <= max * f64::EPSILON * (a.nrows().max(a.ncols()) as f64) {
        Ok(f64::INFINITY)
    } else {
        Ok(max / min)
    }
}

pub fn condition_number_real(a: &RMatrix) -> Result<f64> {
    condition_number(&a.map(|x| cr(x)))
}

/// Frobenius norm of the inverse of a square real matrix, via SVD.
pub fn frobenius_inv_norm(a: &RMatrix) -> Result<f64> {
    if !a.is_square() {
        return Err(GscError::DimensionMismatch(format!(
            "inverse norm needs a square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let svd = a.clone().svd(false, false);
    let max = svd.singular_values.max();
    if max == 0.0 {
        return Err(GscError::InvalidArgument("zero matrix".into()));
    }
    let mut sum = 0.0;
    for &s in svd.singular_values.iter() {
        if s <= max * f64::EPSILON * (a.nrows() as f64) {
            return Ok(f64::INFINITY);
        }
        sum += 1.0 / (s * s);
    }
    Ok(sum.sqrt())
}

/// Right null-space directions of a real matrix: rows of Vᵀ whose singular
/// value falls below `rel_tol` times the largest one.
pub fn null_space_real(a: &RMatrix, rel_tol: f64) -> Vec<Vec<f64>> {
    let svd = a.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let smax = svd.singular_values.max();
    let mut dirs = Vec::new();
    let k = svd.singular_values.len();
    for i in 0..k {
        if svd.singular_values[i] <= rel_tol * smax {
            dirs.push(v_t.row(i).iter().copied().collect());
        }
    }
    // Columns beyond the number of singular values are always null.
    for i in k..a.ncols() {
        if i < v_t.nrows() {
            dirs.push(v_t.row(i).iter().copied().collect());
        }
    }
    dirs
}

/// Kronecker (tensor) product.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Frobenius norm of a complex matrix.
pub fn fro_norm(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_complex(m: usize, n: usize, rng: &mut impl Rng) -> CMatrix {
        CMatrix::from_fn(m, n, |_, _| {
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    fn random_hermitian(n: usize, rng: &mut impl Rng) -> CMatrix {
        let a = random_complex(n, n, rng);
        (&a + a.adjoint()).scale(0.5)
    }

    fn random_unitary(n: usize, rng: &mut impl Rng) -> CMatrix {
        let h = random_hermitian(n, rng);
        expm_hermitian(&h, 1.0).unwrap()
    }

    /// Scaling-and-squaring Taylor evaluation of exp(−iHt), independent of
    /// the eigendecomposition route.
    fn expm_taylor(h: &CMatrix, t: f64) -> CMatrix {
        let n = h.nrows();
        let norm = fro_norm(h) * t.abs();
        let squarings = (norm.log2().ceil().max(0.0) as u32) + 4;
        let scaled = h.map(|z| -IM * z * cr(t / f64::powi(2.0, squarings as i32)));
        let mut term = CMatrix::identity(n, n);
        let mut sum = CMatrix::identity(n, n);
        for k in 1..30 {
            term = (&term * &scaled).scale(1.0 / k as f64);
            sum += &term;
        }
        let mut result = sum;
        for _ in 0..squarings {
            result = &result * &result;
        }
        result
    }

    #[test]
    fn expm_zero_is_identity() {
        let h = CMatrix::zeros(4, 4);
        let u = expm_hermitian(&h, 3.7).unwrap();
        assert!(max_abs_diff(&u, &CMatrix::identity(4, 4)) < 1e-14);
    }

    #[test]
    fn expm_pauli_x_half_pi() {
        // H = (π/2)·X, t = 1 → −i·X up to rounding.
        let x = CMatrix::from_row_slice(2, 2, &[cr(0.0), cr(1.0), cr(1.0), cr(0.0)]);
        let h = x.scale(std::f64::consts::FRAC_PI_2);
        let u = expm_hermitian(&h, 1.0).unwrap();
        let expected = x.map(|z| -IM * z);
        assert!(max_abs_diff(&u, &expected) < 1e-12);
        assert!(unitarity_deviation(&u) < 1e-12);
    }

    #[test]
    fn expm_matches_taylor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let h = random_hermitian(6, &mut rng);
        let u = expm_hermitian(&h, 0.7).unwrap();
        let oracle = expm_taylor(&h, 0.7);
        assert!(max_abs_diff(&u, &oracle) < 1e-9);
    }

    #[test]
    fn expm_rejects_non_hermitian() {
        let mut a = CMatrix::zeros(2, 2);
        a[(0, 1)] = cr(1.0);
        assert!(matches!(
            expm_hermitian(&a, 1.0),
            Err(GscError::NotHermitian { .. })
        ));
    }

    #[test]
    fn expm_unitarity_large_phase() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..5 {
            let h = random_hermitian(5, &mut rng);
            let t = 1e3 / fro_norm(&h);
            let u = expm_hermitian(&h, t).unwrap();
            assert!(unitarity_deviation(&u) < 1e-10);
        }
    }

    #[test]
    fn qr_identity() {
        let a = CMatrix::identity(4, 4);
        let qr = pivoted_qr(&a);
        for d in qr.diag_abs() {
            assert!((d - 1.0).abs() < 1e-14);
        }
        assert_eq!(qr.rank(1e-10), 4);
    }

    #[test]
    fn qr_duplicated_row_rank_deficient() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut a = random_complex(5, 5, &mut rng);
        let dup = a.row(1).into_owned();
        a.set_row(3, &dup);
        let qr = pivoted_qr(&a.adjoint());
        let diag = qr.diag_abs();
        assert!(diag[4] < 1e-12, "smallest diagonal {}", diag[4]);
        assert_eq!(qr.rank(1e-10), 4);
    }

    #[test]
    fn qr_reconstruction_and_ordering() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &(m, n) in &[(6, 4), (4, 6), (5, 5)] {
            let a = random_complex(m, n, &mut rng);
            let qr = pivoted_qr(&a);
            // A·P as column gather.
            let ap = CMatrix::from_fn(m, n, |i, j| a[(i, qr.permutation[j])]);
            let recon = &qr.q * &qr.r;
            assert!(max_abs_diff(&ap, &recon) < 1e-10 * fro_norm(&a));
            let diag = qr.diag_abs();
            for w in diag.windows(2) {
                assert!(w[0] >= w[1] - 1e-12, "diag not non-increasing: {:?}", diag);
            }
            assert!(unitarity_deviation(&(qr.q.adjoint() * &qr.q).clone()) < 1e-10);
        }
    }

    #[test]
    fn qr_rank_matches_svd_oracle() {
        // 20×15 with known singular values 10 … 1e-6, log-spaced.
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let m = 20;
        let n = 15;
        let u = random_unitary(m, &mut rng);
        let v = random_unitary(n, &mut rng);
        let sigmas: Vec<f64> = (0..n)
            .map(|i| {
                10.0_f64.powf(1.0 + (i as f64) * (-6.0 - 1.0) / ((n - 1) as f64))
            })
            .collect();
        let mut s = CMatrix::zeros(m, n);
        for i in 0..n {
            s[(i, i)] = cr(sigmas[i]);
        }
        let a = &u * s * v.adjoint();
        let qr = pivoted_qr(&a);
        let threshold = 1e-10 * qr.diag_abs()[0];
        let svd_count = sigmas.iter().filter(|&&x| x > threshold).count();
        assert_eq!(qr.rank(1e-10), svd_count);
    }

    #[test]
    fn qr_tie_break_prefers_smallest_index() {
        // Two identical columns: the pivot must take the earlier one.
        let a = CMatrix::from_row_slice(
            2,
            3,
            &[cr(1.0), cr(1.0), cr(0.5), cr(1.0), cr(1.0), cr(0.0)],
        );
        let qr = pivoted_qr(&a);
        assert_eq!(qr.permutation[0], 0);
    }

    #[test]
    fn condition_number_values() {
        assert!((condition_number(&CMatrix::identity(3, 3)).unwrap() - 1.0).abs() < 1e-12);
        let d = CMatrix::from_diagonal(&CVector::from_vec(vec![cr(10.0), cr(0.1)]));
        assert!((condition_number(&d).unwrap() - 100.0).abs() < 1e-9);
        let z = CMatrix::zeros(2, 2);
        assert!(condition_number(&z).is_err());
        let mut sing = CMatrix::zeros(2, 2);
        sing[(0, 0)] = cr(1.0);
        assert!(condition_number(&sing).unwrap().is_infinite());
    }

    #[test]
    fn frobenius_inv_norm_diagonal() {
        let a = RMatrix::from_diagonal(&RVector::from_vec(vec![2.0, 4.0]));
        let expected = (0.25_f64 + 0.0625).sqrt();
        assert!((frobenius_inv_norm(&a).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn null_space_of_rank_deficient() {
        // Column 2 = column 0 + column 1 → one null direction.
        let a = RMatrix::from_row_slice(3, 3, &[1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 2.0]);
        let dirs = null_space_real(&a, 1e-10);
        assert_eq!(dirs.len(), 1);
        let d = &dirs[0];
        // A·d ≈ 0.
        for i in 0..3 {
            let dot: f64 = (0..3).map(|j| a[(i, j)] * d[j]).sum();
            assert!(dot.abs() < 1e-10);
        }
    }
}
