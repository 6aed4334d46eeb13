use thiserror::Error;

/// Errors raised by the automaton, complex and presentation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing transition for state `{state}` on letter `{letter}`")]
    MissingTransition { state: String, letter: String },
    #[error("duplicate transition for state `{state}` on letter `{letter}`")]
    DuplicateTransition { state: String, letter: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("inverse-closed automaton is missing arrow {0}")]
    BadInverseClosure(String),
    #[error("automaton is not invertible: state `{state}` has {count} arrows with output `{letter}`")]
    NotInvertible {
        state: String,
        letter: String,
        count: usize,
    },
    #[error("automaton is not bireversible")]
    NotBireversible,
    #[error("bireversibility checks disagree: link graph says {link_graph}, eight automata say {eight_automata}")]
    InternalDisagreement {
        link_graph: bool,
        eight_automata: bool,
    },
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("state name `{0}` occurs in both automata")]
    NameCollision(String),
    #[error("orbit exceeded cap of {0} words")]
    OrbitCapExceeded(usize),
    #[error("alphabet is not binary")]
    NotBinary,
    #[error("state `{0}` fixes exactly one of the two letters")]
    DichotomyViolation(String),
    #[error("no endomorphism construction applies: {0}")]
    NotApplicable(String),
    #[error("search space too large: {0}")]
    SizeTooLarge(String),
    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),
    #[error("word has wrong kind for this position: {0}")]
    KindMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
