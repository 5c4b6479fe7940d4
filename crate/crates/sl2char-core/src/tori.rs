//! Maximal tori of SL(2) over the base field: conjugacy-class labels,
//! norm-one torus elements, depth data, and the Weyl discriminant.
//!
//! An elliptic torus is labelled by the quadratic extension k(√θ) it splits
//! over together with a twisting parameter η that distinguishes rational
//! conjugacy classes inside one stable class. The element of the torus is
//! recorded through its eigenvalue a + b√θ, a norm-one element of k(√θ)^×;
//! split elements are recorded through the eigenvalue t ∈ k^×.

use rand::Rng;

use crate::err::Error;
use crate::padic::{FieldContext, PadicScalar, QuadExtScalar, ThetaLabel, Val};
use crate::Result;

/// Twisting parameter distinguishing rational classes of embeddings of the
/// same torus: η = 1 is the standard embedding, η = ϖ the unramified twist,
/// η = ε the ramified twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eta {
    One,
    Pi,
    Eps,
}

impl std::fmt::Display for Eta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Eta::One => "1",
            Eta::Pi => "pi",
            Eta::Eps => "eps",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Eta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Eta::One),
            "pi" => Ok(Eta::Pi),
            "eps" => Ok(Eta::Eps),
            other => Err(Error::DomainError(format!(
                "unknown torus twist '{other}' (expected 1, pi, or eps)"
            ))),
        }
    }
}

/// Conjugacy class of a maximal torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorusClass {
    Elliptic { theta: ThetaLabel, eta: Eta },
    Split,
}

impl TorusClass {
    /// Validated elliptic class constructor. The unramified torus has the
    /// twists η ∈ {1, ϖ}; a ramified torus always has the trivial twist and
    /// acquires the η = ε twist as a separate rational class exactly when
    /// −1 is a non-square (p ≡ 3 mod 4) — otherwise the twisted embedding is
    /// conjugate to the standard one.
    pub fn elliptic(theta: ThetaLabel, eta: Eta, p: u64) -> Result<TorusClass> {
        let ok = match (theta, eta) {
            (ThetaLabel::Eps, Eta::One | Eta::Pi) => true,
            (ThetaLabel::Eps, Eta::Eps) => false,
            (ThetaLabel::Pi | ThetaLabel::EpsPi, Eta::One) => true,
            (ThetaLabel::Pi | ThetaLabel::EpsPi, Eta::Eps) => p % 4 == 3,
            (ThetaLabel::Pi | ThetaLabel::EpsPi, Eta::Pi) => false,
        };
        if ok {
            Ok(TorusClass::Elliptic { theta, eta })
        } else {
            Err(Error::DomainError(format!(
                "(theta, eta) = ({theta}, {eta}) is not a torus class for p = {p}"
            )))
        }
    }

    pub fn theta(&self) -> Option<ThetaLabel> {
        match self {
            TorusClass::Elliptic { theta, .. } => Some(*theta),
            TorusClass::Split => None,
        }
    }

    pub fn eta(&self) -> Option<Eta> {
        match self {
            TorusClass::Elliptic { eta, .. } => Some(*eta),
            TorusClass::Split => None,
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, TorusClass::Split)
    }
}

impl std::fmt::Display for TorusClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TorusClass::Elliptic { theta, eta } => write!(f, "T[{theta},{eta}]"),
            TorusClass::Split => f.write_str("A"),
        }
    }
}

/// Every torus conjugacy class present for this residue characteristic,
/// elliptic classes first, split last.
pub fn legal_classes(p: u64) -> Vec<TorusClass> {
    let mut out = vec![
        TorusClass::Elliptic { theta: ThetaLabel::Eps, eta: Eta::One },
        TorusClass::Elliptic { theta: ThetaLabel::Eps, eta: Eta::Pi },
        TorusClass::Elliptic { theta: ThetaLabel::Pi, eta: Eta::One },
        TorusClass::Elliptic { theta: ThetaLabel::EpsPi, eta: Eta::One },
    ];
    if p % 4 == 3 {
        out.push(TorusClass::Elliptic { theta: ThetaLabel::Pi, eta: Eta::Eps });
        out.push(TorusClass::Elliptic { theta: ThetaLabel::EpsPi, eta: Eta::Eps });
    }
    out.push(TorusClass::Split);
    out
}

/// A regular-or-central element of a maximal torus, stored through its
/// eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusElement {
    Elliptic { theta: ThetaLabel, eta: Eta, gamma: QuadExtScalar },
    Split { t: PadicScalar },
}

/// Depth invariants of a torus element. All depths are stored doubled so
/// that the half-integral depths of ramified elements stay integral.
///
/// * `d2` — doubled depth of γ toward the identity, v(γ − 1);
/// * `d_minus2` — doubled depth toward the central element −1, v(γ + 1);
/// * `d_plus2` — doubled max over the center, max(d2, d_minus2);
/// * `sd2` — doubled singular depth v(α(γ) − 1) = v(λ² − 1), identically
///   d2 + d_minus2; for compact elements min(d2, d_minus2) = 0 makes it
///   coincide with d_plus2;
/// * `compact` — whether the eigenvalue is a unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthData {
    pub d2: i64,
    pub d_minus2: i64,
    pub d_plus2: i64,
    pub sd2: i64,
    pub compact: bool,
}

impl TorusElement {
    /// Wrap a norm-one eigenvalue as an element of the (θ, η) torus class.
    pub fn new_elliptic(
        theta: ThetaLabel,
        eta: Eta,
        gamma: QuadExtScalar,
        ctx: &FieldContext,
    ) -> Result<Self> {
        TorusClass::elliptic(theta, eta, ctx.p())?;
        if gamma.theta != theta {
            return Err(Error::DomainError(format!(
                "eigenvalue lives in k(√{}) but the class is over k(√{theta})",
                gamma.theta
            )));
        }
        // A digit can be lost to cancellation while assembling the norm;
        // anything ≡ 1 to within one digit of working precision passes.
        if !gamma.is_norm_one_to(ctx.prec() as i64 - 1, ctx) {
            return Err(Error::DomainError(
                "eigenvalue is not norm-one at working precision".into(),
            ));
        }
        Ok(TorusElement::Elliptic { theta, eta, gamma })
    }

    /// Wrap a split eigenvalue. The element diag(t, t⁻¹) is determined by
    /// the unordered pair {t, t⁻¹} — the two orderings are conjugate inside
    /// SL(2) — so the representative with v(t) ≤ 0 is the one stored. With
    /// that normalization the literal depth formulas and the discriminant
    /// identity D(γ) = q^(−2d₊) hold on the whole split torus, compact or
    /// not.
    pub fn new_split(t: PadicScalar, ctx: &FieldContext) -> Result<Self> {
        let v = t.valuation().known().map_err(|_| {
            Error::DomainError("split eigenvalue must have a certified valuation".into())
        })?;
        let t = if v > 0 { ctx.inv(&t)? } else { t };
        Ok(TorusElement::Split { t })
    }

    pub fn class(&self) -> TorusClass {
        match self {
            TorusElement::Elliptic { theta, eta, .. } => {
                TorusClass::Elliptic { theta: *theta, eta: *eta }
            }
            TorusElement::Split { .. } => TorusClass::Split,
        }
    }

    /// Depth data of a regular element; central (or not-certainly-regular)
    /// elements are rejected.
    pub fn depth_data(&self, ctx: &FieldContext) -> Result<DepthData> {
        match self {
            TorusElement::Elliptic { theta, gamma, .. } => {
                if !matches!(gamma.b.valuation(), Val::Known(_)) {
                    return Err(Error::NotRegular(
                        "eigenvalue is central at working precision (b = 0)".into(),
                    ));
                }
                let one = QuadExtScalar::one(*theta, ctx);
                let d2 = gamma.sub(&one, ctx).val2().known()?;
                let d_minus2 = gamma.add(&one, ctx).val2().known()?;
                debug_assert_eq!(d2.min(d_minus2), 0, "one of γ∓1 must be a unit (p odd)");
                Ok(DepthData {
                    d2,
                    d_minus2,
                    d_plus2: d2.max(d_minus2),
                    sd2: d2 + d_minus2,
                    compact: true,
                })
            }
            TorusElement::Split { t } => {
                let v = t.valuation().known()?;
                let compact = v == 0;
                let one = ctx.one();
                // An eigenvalue that equals ±1 exactly, or cancels to ±1 at
                // the full working precision, is central rather than deep.
                let d2 = 2 * ctx.sub(t, &one).valuation().known().map_err(|e| match e {
                    Error::UndefinedForZero | Error::PrecisionLoss(_) => {
                        Error::NotRegular("split eigenvalue is 1 at working precision".into())
                    }
                    other => other,
                })?;
                let d_minus2 = 2 * ctx.add(t, &one).valuation().known().map_err(|e| match e {
                    Error::UndefinedForZero | Error::PrecisionLoss(_) => {
                        Error::NotRegular("split eigenvalue is −1 at working precision".into())
                    }
                    other => other,
                })?;
                if compact {
                    debug_assert_eq!(d2.min(d_minus2), 0);
                }
                Ok(DepthData {
                    d2,
                    d_minus2,
                    d_plus2: d2.max(d_minus2),
                    sd2: d2 + d_minus2,
                    compact,
                })
            }
        }
    }

    /// Multiply by the nontrivial central element (eigenvalue γ ↦ −γ).
    /// Swaps d and d_minus while fixing d_plus.
    pub fn negated(&self, ctx: &FieldContext) -> TorusElement {
        match self {
            TorusElement::Elliptic { theta, eta, gamma } => TorusElement::Elliptic {
                theta: *theta,
                eta: *eta,
                gamma: gamma.neg(ctx),
            },
            TorusElement::Split { t } => TorusElement::Split { t: ctx.neg(t) },
        }
    }

    /// Weyl discriminant D(γ) = q^(−2·d₊) as an exact rational power of q.
    /// The same quantity is evaluated independently through the adjoint
    /// action — |det(Ad(γ) − 1 on g/t)| = |(1 − α(γ))(1 − α(γ)⁻¹)| with
    /// α(γ) = γ² the root value — and a disagreement between the two routes
    /// is reported as an invariant violation rather than silently resolved.
    pub fn weyl_discriminant(&self, ctx: &FieldContext) -> Result<crate::exact::Rat> {
        let dd = self.depth_data(ctx)?;
        let e = self.adjoint_disc_exponent(ctx)?;
        if e != dd.d_plus2 {
            return Err(Error::InvariantViolation(format!(
                "discriminant routes disagree: depth gives q^(-{}), adjoint q^(-{e})",
                dd.d_plus2
            )));
        }
        Ok(crate::exact::q_pow(ctx.q(), -dd.d_plus2))
    }

    /// Exponent e of the Weyl discriminant D(γ) = q^(−e) by the adjoint
    /// route. Shares no code with the depth-based route, against which it is
    /// compared; equals the doubled depth d_plus2 (negative for split
    /// non-compact elements).
    pub fn adjoint_disc_exponent(&self, ctx: &FieldContext) -> Result<i64> {
        match self {
            TorusElement::Elliptic { theta, gamma, .. } => {
                let sq = gamma.mul(gamma, ctx);
                let sqi = sq.inv(ctx)?;
                let two = QuadExtScalar::from_base(*theta, ctx.from_i64(2));
                let x = two.sub(&sq, ctx).sub(&sqi, ctx);
                let v2 = x.val2().known().map_err(|e| match e {
                    Error::UndefinedForZero => Error::NotRegular("α(γ) = 1 exactly".into()),
                    other => other,
                })?;
                debug_assert_eq!(v2 % 2, 0, "2 − γ² − γ⁻² is Galois-stable, so its valuation is integral");
                Ok(v2 / 2)
            }
            TorusElement::Split { t } => {
                let one = ctx.one();
                let t2 = ctx.mul(t, t);
                let t2i = ctx.inv(&t2)?;
                let x = ctx.sub(&one, &t2);
                let y = ctx.sub(&one, &t2i);
                let vx = x.valuation().known().map_err(|e| match e {
                    Error::UndefinedForZero => Error::NotRegular("t² = 1 exactly".into()),
                    other => other,
                })?;
                let vy = y.valuation().known()?;
                Ok(vx + vy)
            }
        }
    }
}

/// Residue pairs (a, b) mod p^digits with a² − εb² ≡ 1, i.e. the points of
/// the norm-one circle of the unramified extension at finite level. Built by
/// brute force modulo p and then lifted digit by digit along the tangent
/// line of the conic, so the cost is proportional to the output size.
pub fn circle_points(ctx: &FieldContext, digits: u32) -> Vec<(u64, u64)> {
    assert!(digits >= 1 && digits <= ctx.prec());
    let p = ctx.p();
    let eps = ctx.eps();
    let norm_defect = |a: u64, b: u64, m: u64| -> u64 {
        // a² − εb² − 1 mod m
        let aa = crate::padic::mul_mod(a % m, a % m, m);
        let bb = crate::padic::mul_mod(crate::padic::mul_mod(b % m, b % m, m), eps % m, m);
        let s = (aa + (m - bb)) % m;
        (s + (m - 1)) % m
    };
    let mut pts: Vec<(u64, u64)> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            if norm_defect(a, b, p) == 0 {
                pts.push((a, b));
            }
        }
    }
    for j in 1..digits {
        let pj = ctx.pow(j);
        let pj1 = ctx.pow(j + 1);
        let mut next = Vec::with_capacity(pts.len() * p as usize);
        for &(a, b) in &pts {
            let kappa = (norm_defect(a, b, pj1) / pj) % p;
            // Solve 2a·s − 2εb·t ≡ −κ (mod p) along the tangent direction.
            if a % p != 0 {
                let inv2a = crate::padic::mod_inv(2 * a % p, p).expect("2a is a unit");
                for t in 0..p {
                    let rhs = (2 * eps % p * (b % p) % p * t % p + p - kappa) % p;
                    let s = crate::padic::mul_mod(rhs, inv2a, p);
                    next.push((a + pj * s, b + pj * t));
                }
            } else {
                let inv2eb = crate::padic::mod_inv(2 * eps % p * (b % p) % p, p)
                    .expect("b is a unit when a ≡ 0");
                for s in 0..p {
                    let rhs = (2 * (a % p) * s % p + kappa) % p;
                    let t = crate::padic::mul_mod(rhs, inv2eb, p);
                    next.push((a + pj * s, b + pj * t));
                }
            }
        }
        pts = next;
    }
    pts.sort_unstable();
    pts
}

/// Lift a level-digits circle point to an exact norm-one eigenvalue whose
/// coordinates reduce to the given pair.
pub fn lift_circle_point(
    ctx: &FieldContext,
    a0: u64,
    b0: u64,
    digits: u32,
) -> Result<QuadExtScalar> {
    let m = ctx.pow(digits);
    let eps_scalar = ThetaLabel::Eps.scalar(ctx);
    if a0 % ctx.p() != 0 {
        // Solve for a: the leading unit of 1 + εb² is a square because it is
        // a₀² mod p^digits.
        let b = ctx.from_i64(b0 as i64);
        let u = ctx.add(&ctx.one(), &ctx.mul(&eps_scalar, &ctx.mul(&b, &b)));
        let s = ctx
            .sqrt(&u)?
            .ok_or_else(|| Error::InvariantViolation("1 + εb² must be a square here".into()))?;
        let a = if s.residue(ctx, digits)? == a0 % m { s } else { ctx.neg(&s) };
        debug_assert_eq!(a.residue(ctx, digits)?, a0 % m);
        Ok(QuadExtScalar::new(ThetaLabel::Eps, a, b))
    } else {
        // a₀ ≡ 0 mod p (possible only when −ε is a square): fix a exactly
        // and solve for b instead; (a² − 1)/ε is a unit square.
        let a = ctx.from_i64(a0 as i64);
        let u = ctx.mul(
            &ctx.sub(&ctx.mul(&a, &a), &ctx.one()),
            &ctx.inv(&eps_scalar)?,
        );
        let s = ctx
            .sqrt(&u)?
            .ok_or_else(|| Error::InvariantViolation("(a² − 1)/ε must be a square here".into()))?;
        let b = if s.residue(ctx, digits)? == b0 % m { s } else { ctx.neg(&s) };
        debug_assert_eq!(b.residue(ctx, digits)?, b0 % m);
        Ok(QuadExtScalar::new(ThetaLabel::Eps, a, b))
    }
}

/// Exact norm-one eigenvalue of a ramified torus from its canonical
/// coordinates: a central sign and b mod p^digits. The a-coordinate is
/// reconstructed as sign·√(1 + θb²), taking the square-root branch ≡ 1
/// mod p.
pub fn lift_ramified_point(
    ctx: &FieldContext,
    theta: ThetaLabel,
    sign: i32,
    b0: u64,
) -> Result<QuadExtScalar> {
    assert!(theta.is_ramified());
    assert!(sign == 1 || sign == -1);
    let b = ctx.from_i64(b0 as i64);
    let th = theta.scalar(ctx);
    let u = ctx.add(&ctx.one(), &ctx.mul(&th, &ctx.mul(&b, &b)));
    let s = ctx
        .sqrt(&u)?
        .ok_or_else(|| Error::InvariantViolation("1 + θb² ≡ 1 mod p is a square".into()))?;
    let s1 = if s.residue(ctx, 1)? == 1 { s } else { ctx.neg(&s) };
    let a = if sign == 1 { s1 } else { ctx.neg(&s1) };
    Ok(QuadExtScalar::new(theta, a, b))
}

/// One exact representative per class of T(O)/T_(level⁺), where the level is
/// given doubled: even levels are the integral levels of the unramified
/// torus, odd ones the half-odd levels of a ramified torus.
pub fn enumerate_residue_classes(
    ctx: &FieldContext,
    class: &TorusClass,
    level2: i64,
) -> Result<Vec<TorusElement>> {
    let TorusClass::Elliptic { theta, eta } = *class else {
        return Err(Error::DomainError(
            "residue-class enumeration applies to elliptic classes only".into(),
        ));
    };
    match theta {
        ThetaLabel::Eps => {
            if level2 % 2 != 0 || level2 < 0 {
                return Err(Error::DomainError(
                    "the unramified torus is filtered in integral levels ≥ 0".into(),
                ));
            }
            let digits = (level2 / 2) as u32 + 1;
            if digits + 2 > ctx.prec() {
                return Err(Error::PrecisionLoss(format!(
                    "level {} needs more than the working precision {}",
                    level2 / 2,
                    ctx.prec()
                )));
            }
            circle_points(ctx, digits)
                .into_iter()
                .map(|(a0, b0)| {
                    let gamma = lift_circle_point(ctx, a0, b0, digits)?;
                    TorusElement::new_elliptic(theta, eta, gamma, ctx)
                })
                .collect()
        }
        ThetaLabel::Pi | ThetaLabel::EpsPi => {
            // Half-odd levels; level2 = −1 is the residue quotient {±1}.
            if level2 % 2 == 0 || level2 < -1 {
                return Err(Error::DomainError(
                    "a ramified torus is filtered in half-odd levels ≥ −1/2".into(),
                ));
            }
            let digits = ((level2 + 1) / 2) as u32;
            if digits + 2 > ctx.prec() {
                return Err(Error::PrecisionLoss(format!(
                    "level {level2}/2 needs more than the working precision {}",
                    ctx.prec()
                )));
            }
            let mut out = Vec::with_capacity(2 * ctx.pow(digits) as usize);
            for sign in [1, -1] {
                for b0 in 0..ctx.pow(digits) {
                    let gamma = lift_ramified_point(ctx, theta, sign, b0)?;
                    out.push(TorusElement::new_elliptic(theta, eta, gamma, ctx)?);
                }
            }
            Ok(out)
        }
    }
}

fn random_unit(ctx: &FieldContext, rng: &mut impl Rng) -> u64 {
    loop {
        let u = rng.gen_range(1..ctx.modulus());
        if u % ctx.p() != 0 {
            return u;
        }
    }
}

/// A randomly-chosen regular element of the given class with exactly the
/// requested doubled depth d2 = v(γ − 1). Depth parities are rigid
/// (integral for the unramified and split tori, half-odd for ramified
/// ones), and a parity mismatch reports that no such element exists. The
/// deep direction is always toward +1; callers wanting depth toward −1
/// compose with [`TorusElement::negated`].
pub fn random_element(
    ctx: &FieldContext,
    class: &TorusClass,
    d2: i64,
    rng: &mut impl Rng,
) -> Result<TorusElement> {
    if d2 < 0 {
        return Err(Error::NoSuchElement(
            "compact torus elements have non-negative depth".into(),
        ));
    }
    if d2 / 2 + 3 > ctx.prec() as i64 {
        return Err(Error::PrecisionLoss(format!(
            "depth {} exceeds the working precision budget",
            crate::exact::fmt_half(d2)
        )));
    }
    match *class {
        TorusClass::Elliptic { theta: theta @ ThetaLabel::Eps, eta } => {
            if d2 % 2 != 0 {
                return Err(Error::NoSuchElement(format!(
                    "unramified-torus elements have integral depth, requested {}",
                    crate::exact::fmt_half(d2)
                )));
            }
            let eps_scalar = theta.scalar(ctx);
            let gamma = if d2 == 0 {
                // Any circle element with unit b has depth 0.
                let mut tries = 0;
                loop {
                    let b = ctx.unit(0, random_unit(ctx, rng))?;
                    let u = ctx.add(&ctx.one(), &ctx.mul(&eps_scalar, &ctx.mul(&b, &b)));
                    if let Some(a) = ctx.sqrt(&u)? {
                        break QuadExtScalar::new(theta, a, b);
                    }
                    tries += 1;
                    if tries > 200 {
                        return Err(Error::InvariantViolation(
                            "could not hit a square 1 + εb² in 200 draws".into(),
                        ));
                    }
                }
            } else {
                // b of exact valuation d forces v(γ − 1) = d on the branch a ≡ 1.
                let d = d2 / 2;
                let b = ctx.unit(d, random_unit(ctx, rng))?;
                let u = ctx.add(&ctx.one(), &ctx.mul(&eps_scalar, &ctx.mul(&b, &b)));
                let s = ctx.sqrt(&u)?.expect("1 + εb² ≡ 1 mod p is a square");
                let a = if s.residue(ctx, 1)? == 1 { s } else { ctx.neg(&s) };
                QuadExtScalar::new(theta, a, b)
            };
            TorusElement::new_elliptic(theta, eta, gamma, ctx)
        }
        TorusClass::Elliptic { theta, eta } => {
            if d2 % 2 == 0 {
                return Err(Error::NoSuchElement(format!(
                    "ramified-torus elements have half-odd depth, requested {}",
                    crate::exact::fmt_half(d2)
                )));
            }
            let m = (d2 - 1) / 2;
            let b0 = ctx.unit(m, random_unit(ctx, rng))?;
            let b_res = b0.residue(ctx, ctx.prec() - 1)?;
            let gamma = lift_ramified_point(ctx, theta, 1, b_res)?;
            TorusElement::new_elliptic(theta, eta, gamma, ctx)
        }
        TorusClass::Split => {
            if d2 % 2 != 0 {
                return Err(Error::NoSuchElement(format!(
                    "split-torus elements have integral depth, requested {}",
                    crate::exact::fmt_half(d2)
                )));
            }
            let d = d2 / 2;
            let t = if d == 0 {
                // Any unit residue other than ±1 gives depth 0.
                let r = rng.gen_range(2..ctx.p() - 1);
                let hi = rng.gen_range(0..ctx.pow(ctx.prec() - 1));
                ctx.unit(0, r + ctx.p() * hi)?
            } else {
                ctx.add(&ctx.one(), &ctx.unit(d, random_unit(ctx, rng))?)
            };
            TorusElement::new_split(t, ctx)
        }
    }
}

/// A split element off the maximal compact: eigenvalue of the given nonzero
/// valuation.
pub fn random_split_noncompact(
    ctx: &FieldContext,
    val: i64,
    rng: &mut impl Rng,
) -> Result<TorusElement> {
    if val == 0 {
        return Err(Error::DomainError(
            "a non-compact split eigenvalue needs nonzero valuation".into(),
        ));
    }
    let t = ctx.unit(val, random_unit(ctx, rng))?;
    TorusElement::new_split(t, ctx)
}
