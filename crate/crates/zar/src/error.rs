//! Crate-wide error type.
//!
//! All fallible operations return [`Error`]. Construction errors (invalid
//! posets, composite moduli, non-irreducible place generators) are reported
//! eagerly; domain errors (valuation of zero, empty subsets, mismatched
//! bases) are reported at the call site.

use alloc::string::String;

/// Everything that can go wrong while building or querying the models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A poset was given the same label twice.
    DuplicateLabel(String),
    /// A label that is not part of the carrier set was referenced.
    UnknownLabel(String),
    /// The reflexive-transitive closure of the given relation is not
    /// antisymmetric; the two labels witness a cycle.
    RelationCycle(String, String),
    /// A subset argument is not contained in the carrier it belongs to.
    InvalidSubset(String),
    /// `spec_zn` needs a modulus `>= 2`.
    InvalidModulus(u64),
    /// The chosen ultrafilter center is not a member of the subset.
    CenterOutsideSubset(String),
    /// A number that must be prime is not.
    NotPrime(u64),
    /// A polynomial that must be irreducible (or monic) is not.
    NotIrreducible(String),
    /// A place is used with a base pair it does not belong to.
    PlaceBaseMismatch(String),
    /// A field element is used with a base pair it does not belong to.
    ElemBaseMismatch(String),
    /// The zero element has no valuation, no support, and no principal open.
    ZeroElement,
    /// A denominator (of a fraction or rational function) is zero.
    ZeroDenominator,
    /// The operation needs a nonempty subset of the space.
    EmptySubset,
    /// An ultrafilter class was paired with a subset it does not live on.
    ClassSubsetMismatch(String),
    /// A rational function in `T` was required to be a polynomial in `T`.
    NotPolynomialInT,
    /// A coefficient had to lie in the base ring `A` but does not.
    CoefficientOutsideBase(String),
    /// The subset does not represent the base ring: its intersection ring
    /// is strictly larger than `A`. The string names an extra element.
    NotRepresentation(String),
    /// The operation is only defined when `A` is a one-dimensional PID with
    /// fraction field `K`, which excludes the constant-field base pair.
    RequiresPidBase,
    /// Factoring over `Q` is only complete when, after removing rational
    /// roots, the residual degree is at most 4.
    DegreeCapExceeded { degree: usize, cap: usize },
    /// An integer exceeded the bound the factorization contract supports.
    InputTooLarge(String),
    /// A place enumeration would produce more candidates than the cap.
    EnumerationTooLarge { bound: u64 },
    /// An internal cross-check failed; this indicates a bug, not bad input.
    InternalCheckFailed(String),
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            Error::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
            Error::RelationCycle(a, b) => {
                write!(f, "relation is not antisymmetric: {a:?} and {b:?} lie on a cycle")
            }
            Error::InvalidSubset(l) => write!(f, "subset member {l} is not in the carrier"),
            Error::InvalidModulus(n) => write!(f, "modulus must be at least 2, got {n}"),
            Error::CenterOutsideSubset(l) => write!(f, "center {l} is not in the subset"),
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::NotIrreducible(p) => write!(f, "{p} is not a monic irreducible polynomial"),
            Error::PlaceBaseMismatch(p) => write!(f, "place {p} does not belong to this base pair"),
            Error::ElemBaseMismatch(e) => {
                write!(f, "element {e} does not belong to this base pair")
            }
            Error::ZeroElement => write!(f, "the zero element is not allowed here"),
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::EmptySubset => write!(f, "the subset must be nonempty"),
            Error::ClassSubsetMismatch(m) => write!(f, "ultrafilter class mismatch: {m}"),
            Error::NotPolynomialInT => write!(f, "expected a polynomial in T"),
            Error::CoefficientOutsideBase(c) => {
                write!(f, "coefficient {c} lies outside the base ring")
            }
            Error::NotRepresentation(w) => write!(
                f,
                "subset does not represent the base ring: its intersection also contains {w}"
            ),
            Error::RequiresPidBase => write!(
                f,
                "operation requires a base ring that is a PID with fraction field K"
            ),
            Error::DegreeCapExceeded { degree, cap } => write!(
                f,
                "cannot certify factorization: residual degree {degree} exceeds cap {cap}"
            ),
            Error::InputTooLarge(s) => write!(f, "input too large for exact factorization: {s}"),
            Error::EnumerationTooLarge { bound } => {
                write!(f, "place enumeration up to {bound} exceeds the size cap")
            }
            Error::InternalCheckFailed(s) => write!(f, "internal cross-check failed: {s}"),
        }
    }
}

impl core::error::Error for Error {}
