//! Quasi-characters of norm-one tori, supercuspidal parameters, formal
//! degrees, and exact evaluation of normalized trace-character magnitudes.

pub mod degree;
pub mod quotient;
pub mod sums;

pub use degree::{degree_within_volume_window, formal_degree, vol_sl2_o};
pub use quotient::{ClassCoord, TorusQuotient};
pub use sums::{gauss_sum, ramified_exp_sum, sgn_theta, MultCharFq};

use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::err::Error;
use crate::exact::{rat, Magnitude, QSqrt, Rat};
use crate::padic::{FieldContext, QuadExtScalar, ThetaLabel};
use crate::tori::{Eta, TorusClass, TorusElement};
use crate::Result;

/// A character of the finite quotient Q_r = k¹_θ/(k¹_θ)_{r⁺}, i.e. a
/// quasi-character of the norm-one torus of depth ≤ r. Values are recorded
/// as exact exponents over the invariant-factor generators — the value on
/// generator j is e^{2πi·exps[j]/m_j} — so equality of characters is exact
/// and |φ| = 1 by construction.
#[derive(Debug, Clone)]
pub struct QuasiCharacter {
    quotient: Arc<TorusQuotient>,
    exps: Vec<u64>,
}

impl PartialEq for QuasiCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.theta() == other.theta() && self.r2() == other.r2() && self.exps == other.exps
    }
}
impl Eq for QuasiCharacter {}

impl QuasiCharacter {
    pub fn new(quotient: Arc<TorusQuotient>, exps: Vec<u64>) -> Result<Self> {
        let orders = quotient.generator_orders();
        if exps.len() != orders.len() {
            return Err(Error::DomainError(format!(
                "expected {} exponents, got {}",
                orders.len(),
                exps.len()
            )));
        }
        let exps = exps.iter().zip(orders).map(|(&e, &m)| e % m).collect();
        Ok(QuasiCharacter { quotient, exps })
    }

    pub fn theta(&self) -> ThetaLabel {
        self.quotient.theta()
    }

    /// Doubled depth of the quotient the character lives on.
    pub fn r2(&self) -> i64 {
        self.quotient.r2()
    }

    pub fn quotient(&self) -> &Arc<TorusQuotient> {
        &self.quotient
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    /// Exact exponent t ∈ [0, 1) with φ(class i) = e^{2πi·t}.
    pub fn exponent_of_class(&self, i: usize) -> Rat {
        let dlog = self.quotient.dlog(i);
        let orders = self.quotient.generator_orders();
        let mut s = Rat::zero();
        for j in 0..self.exps.len() {
            s += rat((self.exps[j] as i128) * (dlog[j] as i128), orders[j] as i128);
        }
        s - s.floor()
    }

    pub fn eval_idx(&self, i: usize) -> Complex64 {
        let t = self.exponent_of_class(i);
        let t = *t.numer() as f64 / *t.denom() as f64;
        Complex64::from_polar(1.0, std::f64::consts::TAU * t)
    }

    /// Value on a norm-one element through the quotient projection.
    pub fn eval(&self, gamma: &QuadExtScalar, ctx: &FieldContext) -> Result<Complex64> {
        Ok(self.eval_idx(self.quotient.project(gamma, ctx)?))
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Order of φ in the character group.
    pub fn order(&self) -> u64 {
        self.exps
            .iter()
            .zip(self.quotient.generator_orders())
            .map(|(&e, &m)| m / num_integer::gcd(e, m))
            .fold(1, num_integer::lcm)
    }

    pub fn square_is_trivial(&self) -> bool {
        self.order() <= 2
    }

    /// Whether the depth label r is exact: φ must be nontrivial on the image
    /// of the depth-r subgroup. Between filtration breaks that image is
    /// trivial, so only break depths carry exact-depth characters.
    pub fn has_exact_depth(&self) -> bool {
        self.quotient
            .shell_indices()
            .iter()
            .any(|&i| !self.exponent_of_class(i).is_zero())
    }
}

/// All characters of the depth-r quotient, as exponent tuples in
/// lexicographic order; with `exact_depth`, only those nontrivial on the
/// depth-r shell image.
pub fn enumerate_characters(
    ctx: &FieldContext,
    theta: ThetaLabel,
    r2: i64,
    exact_depth: bool,
) -> Result<Vec<QuasiCharacter>> {
    let q = Arc::new(TorusQuotient::build(ctx, theta, r2)?);
    Ok(enumerate_characters_on(&q, exact_depth))
}

/// Same as [`enumerate_characters`], sharing an already-built quotient.
pub fn enumerate_characters_on(
    quotient: &Arc<TorusQuotient>,
    exact_depth: bool,
) -> Vec<QuasiCharacter> {
    let orders: Vec<u64> = quotient.generator_orders().to_vec();
    let mut out = Vec::new();
    let mut exps = vec![0u64; orders.len()];
    loop {
        let ch = QuasiCharacter { quotient: quotient.clone(), exps: exps.clone() };
        if !exact_depth || ch.has_exact_depth() {
            out.push(ch);
        }
        let mut j = orders.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            exps[j] += 1;
            if exps[j] < orders[j] {
                break;
            }
            exps[j] = 0;
        }
    }
}

/// The unique nontrivial quadratic character of the depth-zero unramified
/// quotient — the character behind the four exceptional parameters.
pub fn phi_eps(ctx: &FieldContext) -> Result<QuasiCharacter> {
    let quad: Vec<QuasiCharacter> = enumerate_characters(ctx, ThetaLabel::Eps, 0, true)?
        .into_iter()
        .filter(|c| c.order() == 2)
        .collect();
    if quad.len() != 1 {
        return Err(Error::InvariantViolation(format!(
            "expected a unique quadratic depth-zero character, found {}",
            quad.len()
        )));
    }
    Ok(quad.into_iter().next().expect("checked length"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParamKind {
    Unramified,
    Ramified,
    Exceptional,
}

impl std::fmt::Display for ParamKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ParamKind::Unramified => "unramified",
            ParamKind::Ramified => "ramified",
            ParamKind::Exceptional => "exceptional",
        })
    }
}

/// An admissible supercuspidal parameter (torus class, character, sign).
///
/// Ordinary parameters need φ² ≠ 1 (φ ≠ φ∘inv); the only admissible
/// quadratic case is the exceptional quartet (T^{ε,η}, φ_ε, ±) at depth
/// zero. The sign is carried through to reports but plays no role in any
/// magnitude here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupercuspidalParameter {
    theta: ThetaLabel,
    eta: Eta,
    phi: QuasiCharacter,
    sign: Sign,
    kind: ParamKind,
}

impl SupercuspidalParameter {
    pub fn new(
        class: TorusClass,
        phi: QuasiCharacter,
        sign: Sign,
        ctx: &FieldContext,
    ) -> Result<Self> {
        let TorusClass::Elliptic { theta, eta } = class else {
            return Err(Error::DomainError(
                "the split torus carries no supercuspidal parameters".into(),
            ));
        };
        TorusClass::elliptic(theta, eta, ctx.p())?;
        if phi.theta() != theta {
            return Err(Error::DomainError(format!(
                "character lives on the {} torus but the class is over {theta}",
                phi.theta()
            )));
        }
        if phi.quotient().p() != ctx.p() {
            return Err(Error::InvalidContext(
                "character was built over a different residue field".into(),
            ));
        }
        if !phi.has_exact_depth() {
            return Err(Error::DomainError(
                "the character is trivial on its depth-r shell; rebuild it at its exact depth"
                    .into(),
            ));
        }
        let kind = if !theta.is_ramified() && phi.r2() == 0 && phi.order() == 2 {
            ParamKind::Exceptional
        } else if phi.square_is_trivial() {
            return Err(Error::DomainError(
                "ordinary parameters need φ² ≠ 1; quadratic characters are admissible only in \
                 the exceptional depth-zero case"
                    .into(),
            ));
        } else if theta.is_ramified() {
            debug_assert_eq!(phi.r2() % 2, 1, "ramified breaks are half-odd");
            ParamKind::Ramified
        } else {
            debug_assert_eq!(phi.r2() % 2, 0, "unramified breaks are integral");
            ParamKind::Unramified
        };
        Ok(SupercuspidalParameter { theta, eta, phi, sign, kind })
    }

    pub fn class(&self) -> TorusClass {
        TorusClass::Elliptic { theta: self.theta, eta: self.eta }
    }

    pub fn theta(&self) -> ThetaLabel {
        self.theta
    }

    pub fn eta(&self) -> Eta {
        self.eta
    }

    pub fn phi(&self) -> &QuasiCharacter {
        &self.phi
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn kind(&self) -> ParamKind {
        self.kind
    }

    /// Doubled depth r of the parameter.
    pub fn r2(&self) -> i64 {
        self.phi.r2()
    }

    pub fn formal_degree(&self) -> QSqrt {
        degree::formal_degree(self.kind, self.phi.quotient().p(), self.r2())
    }
}

/// How a reported magnitude is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    Exact,
    UpperBound,
    Zero,
}

impl std::fmt::Display for ValueKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ValueKind::Exact => "exact",
            ValueKind::UpperBound => "upper_bound",
            ValueKind::Zero => "zero",
        })
    }
}

/// Normalized trace-character magnitude D(γ)^{1/2}·|Θ_π(γ)| (or a certified
/// upper bound for it), together with the raw |Θ_π(γ)| obtained by dividing
/// out D^{1/2}. For the deep unramified case both exact branches 1 ∓
/// deg·D^{1/2} are exposed; `normalized` carries the larger one.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterValue {
    pub kind: ValueKind,
    pub normalized: Magnitude,
    pub raw: Magnitude,
    pub branches: Option<(QSqrt, QSqrt)>,
}

/// Normalized magnitude of the trace character of the parametrized
/// representation at a regular torus element.
///
/// The dispatch is on (parameter kind, class of γ, depth d₊(γ) against r):
///
/// * unramified kind — exact everywhere: |φ(γ) + φ(γ⁻¹)| through the
///   quotient projection on the parameter's own class at d₊ ≤ r; the pair
///   1 ∓ deg·D^{1/2} on either unramified class at d₊ > r; 1 − deg·D^{1/2}
///   on the deep compact split set; deg·D^{1/2} on the deep ramified set;
///   zero elsewhere.
/// * ramified kind — exact 1 + |A| (shell exponential sum) on the parameter
///   torus's own depth-r shell; certified upper bounds elsewhere on its
///   support (2 shallow on the own torus, 1 on the other ramified torus's
///   shell, 1 + deg·D^{1/2} deep on the own torus and the deep compact split
///   set, deg·D^{1/2} on the other deep sets); zero off the support.
/// * exceptional kind — the certified bound (1 + D^{1/2})/2 on its support
///   (own class at depth 0, every elliptic class deep, deep compact split);
///   zero off it.
///
/// A γ presented in the *other* unramified class at shallow depth is
/// rejected as [`Error::CrossClassAmbiguous`]: whether such a γ is a
/// rational conjugate of the parameter torus is not decidable from the
/// eigenvalue alone, and the two readings disagree. Callers that only need
/// a certified bound can substitute the shallow-case bound (2, or
/// (1 + D^{1/2})/2 for the exceptional kind), which is sound under either
/// reading.
pub fn character_abs(
    param: &SupercuspidalParameter,
    gamma: &TorusElement,
    ctx: &FieldContext,
) -> Result<CharacterValue> {
    if param.phi.quotient().p() != ctx.p() {
        return Err(Error::InvalidContext(
            "parameter was built over a different residue field".into(),
        ));
    }
    let q = ctx.q();
    let dd = gamma.depth_data(ctx)?;
    let r2 = param.r2();
    let deep = dd.d_plus2 > r2;
    // D(γ)^{1/2} = q^{−d₊}.
    let dsqrt = QSqrt::from_q_half_pow(q, Rat::one(), -dd.d_plus2);
    let deg = param.formal_degree();
    let one = QSqrt::from_int(q, 1);

    let finish = |kind: ValueKind, normalized: Magnitude, branches: Option<(QSqrt, QSqrt)>| {
        let raw = normalized.div_exact(&dsqrt);
        Ok(CharacterValue { kind, normalized, raw, branches })
    };
    let vanish = || {
        Ok(CharacterValue {
            kind: ValueKind::Zero,
            normalized: Magnitude::zero(q),
            raw: Magnitude::zero(q),
            branches: None,
        })
    };

    match (param.kind, gamma) {
        (ParamKind::Unramified, TorusElement::Elliptic { theta: ThetaLabel::Eps, eta, gamma: ev }) => {
            if deep {
                // Deep set of either unramified class: 1 ∓ deg·D^{1/2},
                // both branches exact; deg·D^{1/2} = q^{r−d₊} < 1 here.
                let t = QSqrt::from_q_half_pow(q, Rat::one(), r2 - dd.d_plus2);
                let lo = one.sub(&t);
                let hi = one.add(&t);
                if lo.signum() <= 0 {
                    return Err(Error::InvariantViolation(
                        "deep-case branch 1 − deg·D^(1/2) must stay positive".into(),
                    ));
                }
                finish(ValueKind::Exact, Magnitude::Exact(hi.clone()), Some((lo, hi)))
            } else if *eta == param.eta {
                let idx = param.phi.quotient().project(ev, ctx)?;
                let z = param.phi.eval_idx(idx)
                    + param.phi.eval_idx(param.phi.quotient().inv_idx(idx));
                finish(ValueKind::Exact, Magnitude::Approx(z.norm()), None)
            } else {
                Err(Error::CrossClassAmbiguous(
                    "γ lies in the other unramified class at shallow depth; rational-conjugacy \
                     membership is not decidable from the eigenvalue, so no exact value is \
                     returned (the bound 2 is sound)"
                        .into(),
                ))
            }
        }
        (ParamKind::Unramified, TorusElement::Elliptic { .. }) => {
            if deep {
                finish(ValueKind::Exact, Magnitude::Exact(deg.mul(&dsqrt)), None)
            } else {
                vanish()
            }
        }
        (ParamKind::Unramified, TorusElement::Split { .. }) => {
            if dd.compact && deep {
                let t = QSqrt::from_q_half_pow(q, Rat::one(), r2 - dd.d_plus2);
                let v = one.sub(&t);
                if v.signum() <= 0 || !v.lt(&one) {
                    return Err(Error::InvariantViolation(
                        "deep split value 1 − deg·D^(1/2) must lie in (0, 1)".into(),
                    ));
                }
                finish(ValueKind::Exact, Magnitude::Exact(v), None)
            } else {
                vanish()
            }
        }
        (ParamKind::Ramified, TorusElement::Elliptic { theta, gamma: _, .. })
            if *theta == param.theta =>
        {
            match dd.d_plus2.cmp(&r2) {
                std::cmp::Ordering::Less => {
                    finish(ValueKind::UpperBound, Magnitude::Exact(QSqrt::from_int(q, 2)), None)
                }
                std::cmp::Ordering::Equal => {
                    // Shell hit: exact evaluation through the exponential
                    // sum, after moving γ to the branch near +1.
                    let g_plus =
                        if dd.d2 == r2 { gamma.clone() } else { gamma.negated(ctx) };
                    let a = sums::ramified_exp_sum(ctx, &param.phi, &g_plus)?;
                    finish(ValueKind::Exact, Magnitude::Approx(1.0 + a.norm()), None)
                }
                std::cmp::Ordering::Greater => finish(
                    ValueKind::UpperBound,
                    Magnitude::Exact(one.add(&deg.mul(&dsqrt))),
                    None,
                ),
            }
        }
        (ParamKind::Ramified, TorusElement::Elliptic { theta, .. }) if theta.is_ramified() => {
            // The other ramified torus.
            match dd.d_plus2.cmp(&r2) {
                std::cmp::Ordering::Less => vanish(),
                std::cmp::Ordering::Equal => {
                    finish(ValueKind::UpperBound, Magnitude::Exact(one), None)
                }
                std::cmp::Ordering::Greater => {
                    finish(ValueKind::UpperBound, Magnitude::Exact(deg.mul(&dsqrt)), None)
                }
            }
        }
        (ParamKind::Ramified, TorusElement::Elliptic { .. }) => {
            // Unramified γ never meets the ramified torus off the deep set.
            if deep {
                finish(ValueKind::UpperBound, Magnitude::Exact(deg.mul(&dsqrt)), None)
            } else {
                vanish()
            }
        }
        (ParamKind::Ramified, TorusElement::Split { .. }) => {
            if dd.compact && deep {
                finish(
                    ValueKind::UpperBound,
                    Magnitude::Exact(one.add(&deg.mul(&dsqrt))),
                    None,
                )
            } else {
                vanish()
            }
        }
        (ParamKind::Exceptional, TorusElement::Elliptic { theta: ThetaLabel::Eps, eta, .. }) => {
            let bound = one.add(&dsqrt).scale(rat(1, 2));
            if deep {
                finish(ValueKind::UpperBound, Magnitude::Exact(bound), None)
            } else if *eta == param.eta {
                finish(ValueKind::UpperBound, Magnitude::Exact(bound), None)
            } else {
                Err(Error::CrossClassAmbiguous(
                    "γ lies in the other unramified class at depth zero; rational-conjugacy \
                     membership is not decidable from the eigenvalue, so no exact support \
                     decision is returned (the bound (1 + D^(1/2))/2 is sound)"
                        .into(),
                ))
            }
        }
        (ParamKind::Exceptional, TorusElement::Elliptic { .. }) => {
            // Ramified classes have d₊ ≥ 1/2 > r = 0: always in the deep
            // support of the exceptional quartet.
            if deep {
                let bound = one.add(&dsqrt).scale(rat(1, 2));
                finish(ValueKind::UpperBound, Magnitude::Exact(bound), None)
            } else {
                vanish()
            }
        }
        (ParamKind::Exceptional, TorusElement::Split { .. }) => {
            if dd.compact && deep {
                let bound = one.add(&dsqrt).scale(rat(1, 2));
                finish(ValueKind::UpperBound, Magnitude::Exact(bound), None)
            } else {
                vanish()
            }
        }
    }
}

/// |Θ_π(γ)|/deg(π) (or its certified bound) with the kind flag carried
/// through — the quantity whose decay in the depth is reported by the
/// asymptotics sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioValue {
    pub kind: ValueKind,
    pub value: Magnitude,
}

pub fn conjecture_ratio(
    param: &SupercuspidalParameter,
    gamma: &TorusElement,
    ctx: &FieldContext,
) -> Result<RatioValue> {
    let cv = character_abs(param, gamma, ctx)?;
    Ok(RatioValue { kind: cv.kind, value: cv.raw.div_exact(&param.formal_degree()) })
}

/// Every admissible parameter over the context with depth ≤ r2_max: ordinary
/// parameters from all exact-depth characters with φ² ≠ 1 at every
/// filtration break, plus the exceptional quartet. Deterministic order:
/// classes as listed by [`crate::tori::legal_classes`], depths ascending,
/// characters in enumeration order, sign + before −.
pub fn enumerate_parameters(
    ctx: &FieldContext,
    r2_max: i64,
) -> Result<Vec<SupercuspidalParameter>> {
    let mut out = Vec::new();
    for class in crate::tori::legal_classes(ctx.p()) {
        let TorusClass::Elliptic { theta, .. } = class else { continue };
        let breaks: Vec<i64> = if theta.is_ramified() {
            (0..=r2_max).filter(|r2| r2 % 2 == 1).collect()
        } else {
            (0..=r2_max).filter(|r2| r2 % 2 == 0).collect()
        };
        for r2 in breaks {
            let chars = enumerate_characters(ctx, theta, r2, true)?;
            for phi in chars {
                for sign in [Sign::Plus, Sign::Minus] {
                    match SupercuspidalParameter::new(class, phi.clone(), sign, ctx) {
                        Ok(p) => out.push(p),
                        Err(Error::DomainError(_)) => {} // inadmissible (e.g. quadratic)
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(out)
}
