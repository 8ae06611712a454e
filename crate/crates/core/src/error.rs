use thiserror::Error;

/// Domain errors shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("degree {degree} is below the minimum {min}")]
    BadDegree { degree: i64, min: i64 },
    #[error("configuration contains the point {0} twice")]
    DuplicatePoint(String),
    #[error("affine map has a singular linear part")]
    SingularAffineMap,
    #[error("fourth point {0} lies on the six-line arrangement")]
    OnArrangement(String),
    #[error("three of the four points are collinear")]
    DegenerateQuadrilateral,
    #[error("expected exactly {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("point {0} lies on the pole locus of the gauge map")]
    OnPoleLocus(String),
    #[error("input has a nonzero imaginary part")]
    NonRealInput,
    #[error("ambient dimension {0} is odd; interpolation curves need an even dimension")]
    OddAmbientDimension(i64),
    #[error("vector field is not Hamiltonian")]
    NotHamiltonian,
    #[error("vector field does not vanish at {0}")]
    NotAZero(String),
    #[error("pencil parameters (a, d) are both zero")]
    ZeroParameters,
    #[error("gradient does not vanish at {0}")]
    NotACriticalPoint(String),
    #[error("polynomial is constant")]
    ConstantInput,
    #[error("plot data has a nonzero imaginary part")]
    NonRealPlotData,
    #[error("interpolated curve has degree {got}, above the bound {bound}")]
    DegreeBoundViolated { got: u32, bound: u32 },
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code used in JSON error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::NonSquare { .. } => "NonSquare",
            Error::BadDegree { .. } => "BadDegree",
            Error::DuplicatePoint(_) => "DuplicatePoint",
            Error::SingularAffineMap => "SingularAffineMap",
            Error::OnArrangement(_) => "OnArrangement",
            Error::DegenerateQuadrilateral => "DegenerateQuadrilateral",
            Error::WrongPointCount { .. } => "WrongPointCount",
            Error::OnPoleLocus(_) => "OnPoleLocus",
            Error::NonRealInput => "NonRealInput",
            Error::OddAmbientDimension(_) => "OddAmbientDimension",
            Error::NotHamiltonian => "NotHamiltonian",
            Error::NotAZero(_) => "NotAZero",
            Error::ZeroParameters => "ZeroParameters",
            Error::NotACriticalPoint(_) => "NotACriticalPoint",
            Error::ConstantInput => "ConstantInput",
            Error::NonRealPlotData => "NonRealPlotData",
            Error::DegreeBoundViolated { .. } => "DegreeBoundViolated",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
