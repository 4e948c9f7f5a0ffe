use std::io;

use thiserror::Error;

use crate::partition::{CylProfile, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid profile: rank and level must be positive (got N={rank}, L={level})")]
    InvalidProfile { rank: usize, level: usize },

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("{partition} is not an {profile}-partition")]
    NotCylindric {
        profile: CylProfile,
        partition: Partition,
    },

    #[error("{partition} has more than {rank} parts")]
    TooManyParts { partition: Partition, rank: usize },

    #[error("strip size {k} exceeds level {level}")]
    StripTooLarge { k: usize, level: usize },

    /// Two independent computations of the same quantity disagreed.
    #[error("identity violated: {0}")]
    IdentityViolation(String),

    /// Reduction modulo the ideal left weight on a non-basis coordinate.
    #[error("non-integral reduction in degree {degree} for {profile}: residue on {partition}")]
    NonIntegralReduction {
        profile: CylProfile,
        degree: usize,
        partition: Partition,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 3,
            Error::IdentityViolation(_) | Error::NonIntegralReduction { .. } => 1,
            _ => 2,
        }
    }
}
