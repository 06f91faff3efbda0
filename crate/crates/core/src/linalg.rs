//! Spike: validate complex SVD via LAPACK and complex gemm via BLAS.

use ndarray::{Array1, Array2};
use ndarray_linalg::SVDDC;
use num_complex::Complex64;

pub type CMat = Array2<Complex64>;
pub type CVec = Array1<Complex64>;

pub fn spike_svd() -> f64 {
    let n = 8;
    let a = CMat::from_shape_fn((n, n), |(i, j)| {
        Complex64::new((i * 3 + j) as f64, (i as f64) - (j as f64))
    });
    let (u, s, vt) = a.svddc(ndarray_linalg::JobSvd::Some).unwrap();
    let u = u.unwrap();
    let vt = vt.unwrap();
    let s_mat = Array2::from_diag(&s.mapv(|x| Complex64::new(x, 0.0)));
    let re = u.dot(&s_mat).dot(&vt);
    (&re - &a).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
