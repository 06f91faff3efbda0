extern crate blas_src;

pub mod linalg;

pub use num_complex::Complex64;
