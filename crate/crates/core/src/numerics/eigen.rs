use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{invalid, Error, Result};

/// Eigenpairs of a real symmetric matrix, eigenvalues ascending and
/// eigenvectors stored column-wise in the same order.
#[derive(Debug, Clone)]
pub struct SymEig {
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

impl SymEig {
    pub fn vector(&self, k: usize) -> DVector<f64> {
        self.vectors.column(k).into_owned()
    }
}

/// Dense symmetric eigendecomposition (backed by nalgebra's implicit QR).
pub fn sym_eig(h: &DMatrix<f64>) -> Result<SymEig> {
    let n = h.nrows();
    if n == 0 || n != h.ncols() {
        return Err(invalid(format!("matrix must be square and non-empty, got {}x{}", n, h.ncols())));
    }
    let scale = h.amax().max(f64::MIN_POSITIVE);
    let asym = (h - h.transpose()).amax();
    if asym > 1e-12 * scale {
        return Err(invalid(format!("matrix not symmetric: relative asymmetry {:e}", asym / scale)));
    }
    let eig = SymmetricEigen::try_new(h.clone(), f64::EPSILON, 0)
        .ok_or_else(|| Error::NumericalFailure("symmetric eigensolver did not converge".into()))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(SymEig { values, vectors })
}
