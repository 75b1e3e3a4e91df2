use thiserror::Error;

/// Errors surfaced by parsing, validation, and saturation.
#[derive(Debug, Error)]
pub enum Error {
    /// A text input failed to parse; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A word is malformed or uses letters outside the presentation.
    #[error("invalid word: {0}")]
    Word(String),

    /// A presentation is malformed (bad identifiers, duplicate names, …).
    #[error("invalid presentation: {0}")]
    Presentation(String),

    /// Graph data violates an invariant (range, determinism, connectivity).
    #[error("invalid graph: {0}")]
    Graph(String),

    /// 2-complex data violates an invariant.
    #[error("invalid complex: {0}")]
    Complex(String),

    /// An automaton was expected to be saturated but is not.
    #[error("automaton is not saturated: {0}")]
    Unsaturated(String),

    /// JSON (de)serialization failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// A saturation run hit its step budget before reaching a fixpoint.
    #[error("saturation budget exhausted")]
    BudgetExhausted,
}
