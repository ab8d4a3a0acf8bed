use std::fmt;

use thiserror::Error;

/// Text-format parse failure, optionally tagged with a 1-based line number.
#[derive(Debug, Clone, Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError { line: None, message: message.into() }
    }

    pub fn at_line(line: usize, message: impl Into<String>) -> Self {
        ParseError { line: Some(line), message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {}: {}", n, self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("generator {0} is not invertible mod {1} (det != 1)")]
    NonInvertibleGenerator(String, u32),
    #[error("closure exceeded the configured bound of {0} elements")]
    ClosureBound(usize),
    #[error("cyclic group order must be positive")]
    ZeroOrder,
    #[error("period {period} does not annihilate S_x for x = {x} (S_x^{period}({y}) = {image} != {y})")]
    BadPeriod { period: usize, x: usize, y: usize, image: usize },
    #[error("group elements carry no matrix realization")]
    MissingMatrices,
    #[error("family is not the linear family over (Z_{expected})^2")]
    WrongFamily { expected: u32 },
    #[error("group is not cyclic Z_m under index addition")]
    NotCyclic,
    #[error("axiom check failed: {0}")]
    AxiomFailure(String),
}

#[derive(Debug, Clone, Error)]
pub enum SolveError {
    #[error("system of {unknowns} unknowns exceeds the configured bound of {bound}")]
    BoundExceeded { unknowns: usize, bound: usize },
    #[error("coefficient modulus {0} is not a prime in 2..=251")]
    BadModulus(u64),
}
