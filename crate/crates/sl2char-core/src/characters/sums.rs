//! Gauss sums, residue-field characters, quadratic sign characters of the
//! base field, and the shell exponential sum behind ramified magnitudes.

use num_complex::Complex64;

use crate::err::Error;
use crate::exact::{rat, Rat};
use crate::padic::{
    is_prime, legendre, legendre_i, mul_mod, AdditiveCharacter, FieldContext, PadicScalar,
    ThetaLabel, Val,
};
use crate::tori::TorusElement;
use crate::Result;

use super::QuasiCharacter;

/// A multiplicative character of F_p, held as an exponent against the
/// smallest primitive root: χ(g^j) = e^{2πi·jk/(p−1)}, χ(0) = 0. The
/// discrete-log table makes evaluation O(1) and gives a route to quadratic
/// symbols that is independent of the Euler-criterion implementation.
#[derive(Debug, Clone)]
pub struct MultCharFq {
    p: u64,
    k: u64,
    g: u64,
    dlog: Vec<u64>,
}

impl MultCharFq {
    pub fn new(p: u64, k: u64) -> Result<Self> {
        if !is_prime(p) || p < 3 {
            return Err(Error::DomainError(
                "multiplicative characters need an odd prime residue field".into(),
            ));
        }
        'candidates: for g in 2..p {
            let mut dlog = vec![0u64; p as usize];
            let mut x = 1u64;
            for j in 1..p - 1 {
                x = mul_mod(x, g, p);
                if x == 1 {
                    continue 'candidates;
                }
                dlog[x as usize] = j;
            }
            return Ok(MultCharFq { p, k: k % (p - 1), g, dlog });
        }
        unreachable!("every prime field has a primitive root")
    }

    pub fn trivial(p: u64) -> Result<Self> {
        Self::new(p, 0)
    }

    /// The quadratic character (the k = (p−1)/2 exponent).
    pub fn quadratic(p: u64) -> Result<Self> {
        Self::new(p, (p - 1) / 2)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    /// Exact exponent t ∈ [0, 1) with χ(x) = e^{2πi·t}; None at x ≡ 0.
    pub fn exponent_of(&self, x: u64) -> Option<Rat> {
        let x = x % self.p;
        if x == 0 {
            return None;
        }
        let j = self.dlog[x as usize];
        Some(rat(
            ((self.k as u128 * j as u128) % (self.p as u128 - 1)) as i128,
            (self.p - 1) as i128,
        ))
    }

    pub fn eval(&self, x: u64) -> Complex64 {
        match self.exponent_of(x) {
            None => Complex64::new(0.0, 0.0),
            Some(t) => {
                let t = *t.numer() as f64 / *t.denom() as f64;
                Complex64::from_polar(1.0, std::f64::consts::TAU * t)
            }
        }
    }

    /// ±1 for the quadratic character via dlog parity; 0 at zero.
    pub fn quadratic_value(&self, x: u64) -> i32 {
        let x = x % self.p;
        if x == 0 {
            0
        } else if self.dlog[x as usize] % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Σ_{x ∈ F_p^×} χ(x)·ψ(x) by direct summation.
pub fn gauss_sum(chi: &MultCharFq, psi: &AdditiveCharacter) -> Result<Complex64> {
    if chi.p() != psi.p() {
        return Err(Error::InvalidContext(
            "multiplicative and additive characters live over different residue fields".into(),
        ));
    }
    let mut s = Complex64::new(0.0, 0.0);
    for x in 1..chi.p() {
        s += chi.eval(x) * psi.eval(x as i64);
    }
    Ok(s)
}

/// Quadratic sign character attached to the extension k(√θ): +1 exactly on
/// the norms of k_θ^×. Closed form: the unramified norm group is the
/// even-valuation elements; for a ramified θ the unit part decides through
/// the residue quadratic character, and the odd-valuation sign is pinned by
/// N(√θ) = −θ.
pub fn sgn_theta(ctx: &FieldContext, theta: ThetaLabel, x: &PadicScalar) -> Result<i32> {
    let v = match x.valuation() {
        Val::Known(v) => v,
        Val::Infinity => return Err(Error::UndefinedForZero),
        Val::AtLeast(_) => {
            return Err(Error::PrecisionLoss(
                "sign character needs a certified valuation".into(),
            ))
        }
    };
    let odd = v.rem_euclid(2) == 1;
    if theta == ThetaLabel::Eps {
        return Ok(if odd { -1 } else { 1 });
    }
    let p = ctx.p();
    let unit = ctx.mul(x, &ctx.unit(-v, 1)?).residue(ctx, 1)?;
    let chi_u = legendre(unit, p);
    let chi_m1 = legendre(p - 1, p);
    // sgn(ϖ) = χ(−1) for θ = ϖ and −χ(−1) for θ = εϖ, both forced by
    // sgn(−θ) = sgn(N(√θ)) = +1.
    let uni_sign = match theta {
        ThetaLabel::Pi => chi_m1,
        ThetaLabel::EpsPi => -chi_m1,
        ThetaLabel::Eps => unreachable!(),
    };
    Ok(if odd { uni_sign * chi_u } else { chi_u })
}

/// The normalized shell exponential sum A attached to an exact-depth
/// character φ of a ramified norm-one torus and a shell element γ (depth
/// exactly r toward +1).
///
/// Writing the depth-r shell classes as x_X ↔ 1 + X·ϖ_θ^{2r} + … for
/// X ∈ F_q and Y for the class coordinate of γ, the evaluated form is
///
///   A = (1/(2√q)) · Σ_{X ∈ F_q} χ(X − Y)·φ(x_X),
///
/// with χ the residue quadratic character. The class of γ itself (X = Y) is
/// annihilated by χ(0) = 0, and the class of γ⁻¹ (X = −Y) is kept: with it
/// the substitution U = X − Y turns the sum into φ(x_Y)·Σ_U χ(U)ψ(U) — a
/// unit times a full Gauss sum — so |A| = 1/2 exactly whenever φ has exact
/// depth (ψ nontrivial).
pub fn ramified_exp_sum(
    ctx: &FieldContext,
    phi: &QuasiCharacter,
    gamma: &TorusElement,
) -> Result<Complex64> {
    let theta = phi.theta();
    if !theta.is_ramified() {
        return Err(Error::DomainError(
            "the shell exponential sum is a ramified-torus construction".into(),
        ));
    }
    let r2 = phi.r2();
    if r2 % 2 != 1 {
        return Err(Error::DomainError(
            "ramified filtration breaks sit at half-odd depths ≥ 1/2".into(),
        ));
    }
    if !phi.has_exact_depth() {
        return Err(Error::DomainError(
            "character is trivial on the depth-r shell, so its depth is not exact".into(),
        ));
    }
    let TorusElement::Elliptic { theta: gt, gamma: ev, .. } = gamma else {
        return Err(Error::DomainError("shell elements are elliptic".into()));
    };
    if *gt != theta {
        return Err(Error::DomainError(
            "γ must lie in the torus class the character lives on".into(),
        ));
    }
    let dd = gamma.depth_data(ctx)?;
    if dd.d2 != r2 {
        return Err(Error::DomainError(format!(
            "γ is not in the depth-{} shell toward +1 (its depth is {})",
            crate::exact::fmt_half(r2),
            crate::exact::fmt_half(dd.d2),
        )));
    }
    let p = ctx.p();
    let m = (r2 - 1) / 2;
    // Shell coordinate Y of γ: the leading residue of b/p^m (a unit, since
    // v(γ − 1) = r forces v(b) = m exactly).
    let y = ctx.mul(&ev.b, &ctx.unit(-m, 1)?).residue(ctx, 1)?;
    debug_assert_ne!(y, 0, "shell elements have a unit leading b-digit");

    let mut s = Complex64::new(0.0, 0.0);
    for x in 0..p {
        let k = legendre_i(x as i64 - y as i64, p);
        if k == 0 {
            continue;
        }
        let idx = phi.quotient().shell_class_index(x)?;
        s += f64::from(k) * phi.eval_idx(idx);
    }
    Ok(s / (2.0 * (p as f64).sqrt()))
}
