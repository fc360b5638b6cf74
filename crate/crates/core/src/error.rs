use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid conjugation index {0}, expected 1, 2 or 3")]
    InvalidConjugation(u8),

    #[error("shape mismatch: {op} of {lhs:?} and {rhs:?}")]
    Shape {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    /// `magnitude` is the quartic norm for scalars and |det_q| for matrices.
    #[error("not invertible (magnitude {magnitude:e})")]
    NotInvertible { magnitude: f64 },

    #[error("matrix is not in the image of eta (max structural deviation {deviation:e})")]
    NotInEtaImage { deviation: f64 },

    #[error("eigensolver did not converge: {iterations} iterations, {unconverged} eigenvalues left, last subdiagonal {subdiagonal:e}")]
    NoConvergence {
        iterations: usize,
        unconverged: usize,
        subdiagonal: f64,
    },

    #[error("matrix of order {n} exceeds the eigensolver bound of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("non-finite component in input")]
    NonFinite,
}
