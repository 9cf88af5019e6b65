//! Verification campaigns, a triangle calculator and SVG figures on top of
//! the `trigroup` library.

pub mod campaign;
pub mod expr;
pub mod figure;
pub mod show;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] trigroup::Error),
    #[error("generator health: {theorem} needed {skips} resamples for {trials} trials")]
    GeneratorHealth { theorem: String, skips: usize, trials: usize },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for HarnessError {
    fn from(e: serde_json::Error) -> Self {
        HarnessError::Parse(e.to_string())
    }
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_HEALTH: i32 = 3;

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Usage(_) | HarnessError::Parse(_) | HarnessError::Io(_) => EXIT_USAGE,
            HarnessError::Core(trigroup::Error::Parse(_) | trigroup::Error::InvalidInput(_)) => EXIT_USAGE,
            HarnessError::Core(_) => EXIT_FAIL,
            HarnessError::GeneratorHealth { .. } => EXIT_HEALTH,
        }
    }
}
