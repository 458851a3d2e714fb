use thiserror::Error;

use crate::bimodule::BimoduleError;
use crate::demazure::DemazureError;
use crate::frobenius::FrobeniusError;
use crate::homspace::HomError;
use crate::laurent::LaurentError;
use crate::matrix::MatrixError;
use crate::root_datum::RootDatumError;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    RootDatum(#[from] RootDatumError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Demazure(#[from] DemazureError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

impl Error {
    /// Stable identifier of the form `module::Variant`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RootDatum(e) => e.code(),
            Error::Laurent(e) => e.code(),
            Error::Demazure(e) => e.code(),
            Error::Matrix(e) => e.code(),
            Error::Frobenius(e) => e.code(),
            Error::Bimodule(e) => e.code(),
            Error::Hom(e) => e.code(),
        }
    }
}
