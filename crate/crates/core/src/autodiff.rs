//! Reverse-mode automatic differentiation over `f64` matrices.
