//! Error type shared by every module of the crate.

/// Everything that can go wrong in exact local arithmetic.
///
/// Errors are values, not panics: an operation whose mathematical
/// preconditions fail (division by zero, a depth that the torus cannot
/// attain, a character evaluated off its domain) reports *which* contract was
/// violated so sweep drivers can either abort or reroute.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Inversion (or division) of an exact zero.
    #[error("division by zero")]
    DivisionByZero,

    /// The result's valuation (or a required digit) is not determined at the
    /// working precision; raising the context precision fixes this.
    #[error("precision loss: {0}")]
    PrecisionLoss(String),

    /// A predicate (Legendre symbol, squareness) applied to the zero scalar.
    #[error("undefined for the zero scalar")]
    UndefinedForZero,

    /// Input outside the operation's mathematical domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Character evaluation at a shallow element of the *other* rational
    /// conjugacy class in the same stable class. The case formulas cover each
    /// rational class separately and are silent here, so the library refuses
    /// to guess; callers that only need a certified upper bound may substitute
    /// the a-priori bound 2 for |φ(γ)+φ(γ⁻¹)|-type values.
    #[error("cross-class evaluation is ambiguous: {0}")]
    CrossClassAmbiguous(String),

    /// The element is central (or indistinguishable from central at the
    /// working precision), so regular-element data is undefined.
    #[error("not regular: {0}")]
    NotRegular(String),

    /// No element of the requested shape exists (e.g. an integer depth on a
    /// ramified torus, whose filtration only breaks at half-odd indices).
    #[error("no such element: {0}")]
    NoSuchElement(String),

    /// An internal structural invariant failed; indicates a bug or corrupted
    /// input, never a recoverable condition.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// Context construction rejected its inputs (p not an odd prime ≥ 5,
    /// precision overflow, …).
    #[error("invalid context: {0}")]
    InvalidContext(String),
}
