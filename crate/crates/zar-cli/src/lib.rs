//! Command-line surface and randomized check suites for the `zar` library.
//!
//! The binary parses textual inputs (expressions, places, subsets, ideals),
//! dispatches to the library, and emits JSON on standard output.  Errors are
//! structured JSON on standard error: parse errors exit with code 2, domain
//! errors with code 1.

pub mod dispatch;
pub mod expr;
pub mod suite;
pub mod wire;

/// An error surfaced to the command-line user.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input (bad syntax, unknown selector); exit code 2.
    Parse(String),
    /// Well-formed input outside an operation's domain; exit code 1.
    Domain { code: String, message: String },
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> CliError {
        CliError::Parse(message.into())
    }

    pub fn domain(code: impl Into<String>, message: impl Into<String>) -> CliError {
        CliError::Domain {
            code: code.into(),
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }

    /// The structured form written to standard error.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            CliError::Parse(m) => serde_json::json!({"error": "parse", "message": m}),
            CliError::Domain { code, message } => {
                serde_json::json!({"error": code, "message": message})
            }
        }
    }
}

impl From<zar::Error> for CliError {
    fn from(e: zar::Error) -> CliError {
        CliError::Domain {
            code: error_code(&e).to_string(),
            message: e.to_string(),
        }
    }
}

/// A stable machine-readable code for each library error.
fn error_code(e: &zar::Error) -> &'static str {
    use zar::Error::*;
    match e {
        DuplicateLabel(_) => "duplicate-label",
        UnknownLabel(_) => "unknown-label",
        RelationCycle(_, _) => "relation-cycle",
        InvalidSubset(_) => "invalid-subset",
        InvalidModulus(_) => "invalid-modulus",
        CenterOutsideSubset(_) => "center-outside-subset",
        NotPrime(_) => "not-prime",
        NotIrreducible(_) => "not-irreducible",
        PlaceBaseMismatch(_) => "place-base-mismatch",
        ElemBaseMismatch(_) => "elem-base-mismatch",
        ZeroElement => "zero-element",
        ZeroDenominator => "zero-denominator",
        EmptySubset => "empty-subset",
        ClassSubsetMismatch(_) => "class-subset-mismatch",
        NotPolynomialInT => "not-polynomial-in-t",
        CoefficientOutsideBase(_) => "coefficient-outside-base",
        NotRepresentation(_) => "not-representation",
        RequiresPidBase => "requires-pid-base",
        DegreeCapExceeded { .. } => "degree-cap-exceeded",
        InputTooLarge(_) => "input-too-large",
        EnumerationTooLarge { .. } => "enumeration-too-large",
        InternalCheckFailed(_) => "internal-check-failed",
    }
}
