use std::fmt;

use crate::words::Side;

/// A single axiom failure found while validating a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableViolation {
    NotSquare { rows: usize, expected: usize },
    NotClosed { row: String, column: String, entry: String },
    NotAssociative { x: String, y: String, z: String },
    NoIdentity,
    MissingInverse { element: String },
    DuplicateName { name: String },
    BadName { name: String },
    TooLarge { order: usize, limit: usize },
    Empty,
    Trivial,
}

impl fmt::Display for TableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableViolation::NotSquare { rows, expected } => {
                write!(f, "table has {rows} rows or columns, expected {expected}")
            }
            TableViolation::NotClosed { row, column, entry } => {
                write!(f, "not closed: {row}*{column} = {entry} is not an element")
            }
            TableViolation::NotAssociative { x, y, z } => {
                write!(f, "not associative: ({x}*{y})*{z} != {x}*({y}*{z})")
            }
            TableViolation::NoIdentity => write!(f, "no identity"),
            TableViolation::MissingInverse { element } => {
                write!(f, "element {element} has no inverse")
            }
            TableViolation::DuplicateName { name } => write!(f, "duplicate element name {name}"),
            TableViolation::BadName { name } => {
                write!(f, "element name {name:?} is empty or contains reserved characters")
            }
            TableViolation::TooLarge { order, limit } => {
                write!(f, "table order {order} exceeds the limit {limit}")
            }
            TableViolation::Empty => write!(f, "table has no elements"),
            TableViolation::Trivial => write!(f, "factor must be a non-trivial group"),
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid Cayley table: {}", join(.0))]
    InvalidTable(Vec<TableViolation>),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("swap map is not an isomorphism: {0}")]
    InvalidSwap(String),

    #[error("{elem:?} is not an element of {factor}")]
    InvalidElement { factor: String, elem: String },

    #[error("factor {0} has no distinguished generator; write a[name] or b[name]")]
    NoGenerator(Side),

    #[error("factor {0} is not the integers")]
    NotIntegerFactor(Side),

    #[error("operands belong to different group configurations")]
    ConfigMismatch,

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("the configuration has no swap isomorphism")]
    SwapUnavailable,

    #[error("no exact or bounded invariance is known for {kind} on {qm}")]
    NoInvarianceClaim { kind: String, qm: String },

    #[error("pattern {0} is not generic")]
    NonGeneric(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("word would exceed {limit} letters")]
    WordTooLong { limit: usize },

    #[error("defect bound must be positive")]
    ZeroDefect,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    /// Stable machine-readable identifier for the error class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::InvalidTable(_) => "invalid-table",
            Error::InvalidConfig(_) => "invalid-config",
            Error::InvalidSwap(_) => "invalid-swap",
            Error::InvalidElement { .. } => "invalid-element",
            Error::NoGenerator(_) => "no-generator",
            Error::NotIntegerFactor(_) => "not-integer-factor",
            Error::ConfigMismatch => "config-mismatch",
            Error::InvalidAutomorphism(_) => "invalid-automorphism",
            Error::SwapUnavailable => "swap-unavailable",
            Error::NoInvarianceClaim { .. } => "no-invariance-claim",
            Error::NonGeneric(_) => "non-generic",
            Error::Precondition(_) => "precondition",
            Error::WordTooLong { .. } => "word-too-long",
            Error::ZeroDefect => "zero-defect",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
