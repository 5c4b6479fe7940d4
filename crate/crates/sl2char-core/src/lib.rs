//! Exact local arithmetic for SL(2) over a p-adic field k = Q_p (p odd, p ≥ 5).
//!
//! The crate is organised bottom-up:
//!
//! * [`padic`] — truncated p-adic scalars with certified precision, Legendre
//!   symbols, square roots, and the quadratic extensions k(√θ) for
//!   θ ∈ {ε, ϖ, εϖ}.
//! * [`tori`] — maximal-torus conjugacy classes of SL(2, k), norm-one torus
//!   elements, depth data, and the Weyl discriminant D(γ).
//! * [`characters`] — finite quotients of the norm-one groups, their character
//!   lattices, formal degrees, Gauss/exponential sums, and the normalized
//!   supercuspidal character magnitudes D(γ)^{1/2}·|Θ_π(γ)|.
//! * [`rootdata`] — root systems from Cartan data, standard Levi subgroups,
//!   and the bound constants h_G, κ, A that control character-ratio decay.
//! * [`filtration`] — affine-root counting on an apartment: filtration
//!   indices, volume exponents, and the unipotent-intersection index
//!   inequalities.
//!
//! All structural quantities (valuations, discriminants, κ, filtration
//! indices) are computed in exact integer/rational arithmetic; only values of
//! characters at roots of unity pass through `f64`, with exponents kept as
//! exact rationals for as long as possible.

pub mod characters;
pub mod err;
pub mod exact;
pub mod filtration;
pub mod padic;
pub mod rootdata;
pub mod tori;

pub use err::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
