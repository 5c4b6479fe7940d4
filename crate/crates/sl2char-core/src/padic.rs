//! Scalars of Q_p with tracked precision, and the quadratic extensions k(√θ).
//!
//! All arithmetic is done on integer residues modulo p^N for a working
//! precision N fixed in a [`FieldContext`]. A scalar is either a certified
//! unit times a power of p, or a "small" element about which nothing is known
//! beyond a lower bound on its valuation. Operations propagate the tightest
//! bound they can certify; callers that need an exact valuation go through
//! [`Val::known`], which turns an uncertified bound into a precision error
//! instead of a silent wrong answer.

use num_complex::Complex64;

use crate::err::Error;
use crate::Result;

/// Deterministic Miller–Rabin witness set, valid for all n < 2^64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // n - 1 = d·2^s
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Legendre symbol (a/p) ∈ {−1, 0, 1} by Euler's criterion.
pub fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    let e = mod_pow(a, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

pub fn legendre_i(a: i64, p: u64) -> i32 {
    legendre(a.rem_euclid(p as i64) as u64, p)
}

/// Smallest quadratic non-residue modulo p.
pub fn least_nonresidue(p: u64) -> u64 {
    (2..p).find(|&n| legendre(n, p) == -1).expect("odd prime has a non-residue")
}

/// Certified knowledge about a valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Val {
    /// The valuation is exactly this.
    Known(i64),
    /// Only a lower bound is certified at the working precision.
    AtLeast(i64),
    /// The element is exactly zero.
    Infinity,
}

impl Val {
    /// Extract the exact valuation, failing loudly when only a bound is
    /// available. This is the single choke point that converts precision
    /// exhaustion into an error instead of an arbitrary number.
    pub fn known(self) -> Result<i64> {
        match self {
            Val::Known(v) => Ok(v),
            Val::AtLeast(m) => Err(Error::PrecisionLoss(format!(
                "valuation certified only as ≥ {m}"
            ))),
            Val::Infinity => Err(Error::UndefinedForZero),
        }
    }

    /// Is the valuation certified to be ≥ k?
    pub fn ge(self, k: i64) -> bool {
        match self {
            Val::Known(v) => v >= k,
            Val::AtLeast(m) => m >= k,
            Val::Infinity => true,
        }
    }

    /// Double (pass from integral to half-integral bookkeeping).
    pub fn dbl(self) -> Val {
        self.map(|v| 2 * v)
    }

    pub fn shift(self, k: i64) -> Val {
        self.map(|v| v + k)
    }

    fn map(self, f: impl Fn(i64) -> i64) -> Val {
        match self {
            Val::Known(v) => Val::Known(f(v)),
            Val::AtLeast(m) => Val::AtLeast(f(m)),
            Val::Infinity => Val::Infinity,
        }
    }

    /// Minimum of two valuations in a situation where no cancellation can
    /// occur between the underlying components, so a pair of exact inputs
    /// yields an exact output.
    pub fn min_independent(self, other: Val) -> Val {
        match (self, other) {
            (Val::Infinity, v) | (v, Val::Infinity) => v,
            (Val::Known(x), Val::Known(y)) => Val::Known(x.min(y)),
            (Val::Known(x), Val::AtLeast(y)) | (Val::AtLeast(y), Val::Known(x)) => {
                if y >= x {
                    Val::Known(x)
                } else {
                    Val::AtLeast(y)
                }
            }
            (Val::AtLeast(x), Val::AtLeast(y)) => Val::AtLeast(x.min(y)),
        }
    }
}

/// A scalar of Q_p at finite precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PadicScalar {
    /// Certified only to vanish modulo p^min_val; `i64::MAX` marks the exact
    /// zero (the only scalar with infinite absolute precision).
    Zero { min_val: i64 },
    /// p^val · unit, with `unit` invertible and known modulo p^prec.
    Unit { val: i64, unit: u64, prec: u32 },
}

impl PadicScalar {
    pub const EXACT_ZERO: PadicScalar = PadicScalar::Zero { min_val: i64::MAX };

    pub fn valuation(&self) -> Val {
        match self {
            PadicScalar::Zero { min_val } => {
                if *min_val == i64::MAX {
                    Val::Infinity
                } else {
                    Val::AtLeast(*min_val)
                }
            }
            PadicScalar::Unit { val, .. } => Val::Known(*val),
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self, PadicScalar::Zero { min_val: i64::MAX })
    }

    /// Absolute precision: the scalar is pinned down modulo p^(this value).
    pub fn abs_prec(&self) -> i64 {
        match self {
            PadicScalar::Zero { min_val } => *min_val,
            PadicScalar::Unit { val, prec, .. } => val + *prec as i64,
        }
    }

    /// The residue modulo p^digits as an integer in [0, p^digits), for
    /// scalars that are certified integral to that depth.
    pub fn residue(&self, ctx: &FieldContext, digits: u32) -> Result<u64> {
        let m = ctx.pow(digits);
        match *self {
            PadicScalar::Zero { min_val } => {
                if min_val >= digits as i64 {
                    Ok(0)
                } else {
                    Err(Error::PrecisionLoss(format!(
                        "residue mod p^{digits} requested but scalar is only known mod p^{min_val}"
                    )))
                }
            }
            PadicScalar::Unit { val, unit, prec } => {
                if val < 0 {
                    return Err(Error::DomainError(
                        "residue of a non-integral scalar".into(),
                    ));
                }
                if val >= digits as i64 {
                    return Ok(0);
                }
                if val + (prec as i64) < digits as i64 {
                    return Err(Error::PrecisionLoss(format!(
                        "residue mod p^{digits} requested but scalar has absolute precision {}",
                        val + prec as i64
                    )));
                }
                Ok(mul_mod(unit % m, ctx.pow(val as u32), m))
            }
        }
    }
}

/// The local field data every operation runs against: the residue
/// characteristic p, a working precision N, and a fixed non-residue ε.
///
/// The constructor enforces p ≥ 5 (the case formulas implemented by the rest
/// of the crate are specific to residue characteristic at least five) and
/// p^N < 2^63 so all residue arithmetic fits u64 with u128 intermediates.
#[derive(Debug, Clone)]
pub struct FieldContext {
    p: u64,
    prec: u32,
    eps: u64,
    /// p^0 ..= p^prec
    pows: Vec<u64>,
}

impl FieldContext {
    pub fn new(p: u64, prec: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::DomainError(format!("p = {p} is not prime")));
        }
        if p < 5 {
            return Err(Error::DomainError(format!(
                "residue characteristic must be at least 5, got p = {p}"
            )));
        }
        if prec == 0 {
            return Err(Error::DomainError("working precision must be positive".into()));
        }
        let mut pows = Vec::with_capacity(prec as usize + 1);
        let mut acc: u64 = 1;
        pows.push(acc);
        for _ in 0..prec {
            acc = acc.checked_mul(p).filter(|&m| m < (1 << 63)).ok_or_else(|| {
                Error::DomainError(format!("p^prec = {p}^{prec} does not fit in 63 bits"))
            })?;
            pows.push(acc);
        }
        let eps = least_nonresidue(p);
        Ok(FieldContext { p, prec, eps, pows })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Residue field cardinality (the base field here is Q_p, so q = p).
    pub fn q(&self) -> u64 {
        self.p
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// The fixed least quadratic non-residue modulo p.
    pub fn eps(&self) -> u64 {
        self.eps
    }

    /// p^k for 0 ≤ k ≤ prec.
    pub fn pow(&self, k: u32) -> u64 {
        self.pows[k as usize]
    }

    pub fn modulus(&self) -> u64 {
        self.pows[self.prec as usize]
    }

    pub fn zero(&self) -> PadicScalar {
        PadicScalar::EXACT_ZERO
    }

    pub fn one(&self) -> PadicScalar {
        PadicScalar::Unit { val: 0, unit: 1, prec: self.prec }
    }

    /// Build p^val · unit, validating that `unit` really is a unit.
    pub fn unit(&self, val: i64, unit: u64) -> Result<PadicScalar> {
        let u = unit % self.modulus();
        if u % self.p == 0 {
            return Err(Error::DomainError(format!("{unit} is not a unit modulo {}", self.p)));
        }
        Ok(PadicScalar::Unit { val, unit: u, prec: self.prec })
    }

    pub fn from_i64(&self, n: i64) -> PadicScalar {
        if n == 0 {
            return PadicScalar::EXACT_ZERO;
        }
        let mut mag = n.unsigned_abs();
        let mut val = 0i64;
        while mag % self.p == 0 {
            mag /= self.p;
            val += 1;
        }
        let mut u = mag % self.modulus();
        if n < 0 {
            u = self.modulus() - u;
        }
        PadicScalar::Unit { val, unit: u, prec: self.prec }
    }

    pub fn neg(&self, x: &PadicScalar) -> PadicScalar {
        match *x {
            PadicScalar::Zero { min_val } => PadicScalar::Zero { min_val },
            PadicScalar::Unit { val, unit, prec } => {
                let m = self.pow(prec);
                PadicScalar::Unit { val, unit: m - unit, prec }
            }
        }
    }

    pub fn add(&self, x: &PadicScalar, y: &PadicScalar) -> PadicScalar {
        use PadicScalar::*;
        match (x, y) {
            (Zero { min_val: m1 }, Zero { min_val: m2 }) => Zero { min_val: *m1.min(m2) },
            (Zero { min_val: m }, u @ Unit { .. }) | (u @ Unit { .. }, Zero { min_val: m }) => {
                if *m == i64::MAX {
                    return u.clone();
                }
                let &Unit { val, unit, prec } = u else { unreachable!() };
                if *m <= val {
                    // The uncertified part can dominate: only the bound survives.
                    return Zero { min_val: *m };
                }
                let keep = (*m - val).min(prec as i64) as u32;
                Unit { val, unit: unit % self.pow(keep), prec: keep }
            }
            (Unit { val: v1, unit: u1, prec: n1 }, Unit { val: v2, unit: u2, prec: n2 }) => {
                let (v1, v2, u1, u2, n1, n2) = if v1 <= v2 {
                    (*v1, *v2, *u1, *u2, *n1, *n2)
                } else {
                    (*v2, *v1, *u2, *u1, *n2, *n1)
                };
                // Absolute precision of the sum.
                let abs = (v1 + n1 as i64).min(v2 + n2 as i64);
                let n = (abs - v1) as u32;
                let m = self.pow(n);
                let shift = (v2 - v1) as u32;
                let shifted = if shift >= n { 0 } else { mul_mod(u2 % m, self.pow(shift), m) };
                let s = (u1 % m + shifted) % m;
                if s == 0 {
                    return Zero { min_val: v1 + n as i64 };
                }
                let mut t = 0u32;
                let mut s = s;
                while s % self.p == 0 {
                    s /= self.p;
                    t += 1;
                }
                Unit { val: v1 + t as i64, unit: s % self.pow(n - t), prec: n - t }
            }
        }
    }

    pub fn sub(&self, x: &PadicScalar, y: &PadicScalar) -> PadicScalar {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &PadicScalar, y: &PadicScalar) -> PadicScalar {
        use PadicScalar::*;
        match (x, y) {
            (Zero { min_val: m1 }, Zero { min_val: m2 }) => {
                Zero { min_val: m1.saturating_add(*m2) }
            }
            (Zero { min_val: m }, Unit { val, .. }) | (Unit { val, .. }, Zero { min_val: m }) => {
                Zero { min_val: m.saturating_add(*val) }
            }
            (Unit { val: v1, unit: u1, prec: n1 }, Unit { val: v2, unit: u2, prec: n2 }) => {
                let n = (*n1).min(*n2);
                let m = self.pow(n);
                Unit { val: v1 + v2, unit: mul_mod(u1 % m, u2 % m, m), prec: n }
            }
        }
    }

    pub fn inv(&self, x: &PadicScalar) -> Result<PadicScalar> {
        match *x {
            PadicScalar::Zero { min_val } => {
                if min_val == i64::MAX {
                    Err(Error::DivisionByZero)
                } else {
                    Err(Error::PrecisionLoss(
                        "cannot invert a scalar with uncertified valuation".into(),
                    ))
                }
            }
            PadicScalar::Unit { val, unit, prec } => {
                let m = self.pow(prec);
                let ui = mod_inv(unit, m).expect("stored unit is invertible");
                Ok(PadicScalar::Unit { val: -val, unit: ui, prec })
            }
        }
    }

    /// Square root in Q_p. `Ok(None)` means the scalar is certified not to be
    /// a square (odd valuation or non-residue leading unit); an uncertified
    /// zero cannot be classified and errors out.
    ///
    /// Of the two roots ±s the numerically smaller residue is returned, so
    /// the choice is deterministic.
    pub fn sqrt(&self, x: &PadicScalar) -> Result<Option<PadicScalar>> {
        Ok(self.sqrt_with_residue(x)?.0)
    }

    /// Square root together with the Legendre symbol of the leading unit.
    pub fn sqrt_with_residue(&self, x: &PadicScalar) -> Result<(Option<PadicScalar>, i32)> {
        match *x {
            PadicScalar::Zero { min_val } => {
                if min_val == i64::MAX {
                    Ok((Some(PadicScalar::EXACT_ZERO), 0))
                } else {
                    Err(Error::PrecisionLoss(
                        "cannot extract a square root of a scalar with uncertified valuation"
                            .into(),
                    ))
                }
            }
            PadicScalar::Unit { val, unit, prec } => {
                let sym = legendre(unit, self.p);
                if val % 2 != 0 || sym == -1 {
                    return Ok((None, sym));
                }
                let s = self.sqrt_unit_mod(unit, prec).expect("residue is a square");
                Ok((Some(PadicScalar::Unit { val: val / 2, unit: s, prec }), sym))
            }
        }
    }

    /// Newton lift of a mod-p square root to mod p^n (p odd, so the
    /// derivative 2s is a unit and the lift is unique for each mod-p root).
    fn sqrt_unit_mod(&self, u: u64, n: u32) -> Option<u64> {
        let p = self.p;
        let r0 = (1..p).find(|s| mul_mod(*s, *s, p) == u % p)?;
        let m = self.pow(n);
        let um = u % m;
        let inv2 = mod_inv(2, m).expect("p is odd");
        let mut s = r0;
        for _ in 0..(64 - (n as u64).leading_zeros() + 2) {
            if mul_mod(s, s, m) == um {
                break;
            }
            let si = mod_inv(s, m).expect("root is a unit");
            s = mul_mod((s + mul_mod(um, si, m)) % m, inv2, m);
        }
        debug_assert_eq!(mul_mod(s, s, m), um);
        Some(s.min(m - s))
    }
}

/// Label of the quadratic extension k(√θ): ε is the fixed non-residue, so
/// k(√ε) is the unramified extension; ϖ = p and εϖ give the two ramified
/// ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThetaLabel {
    Eps,
    Pi,
    EpsPi,
}

impl ThetaLabel {
    pub const ALL: [ThetaLabel; 3] = [ThetaLabel::Eps, ThetaLabel::Pi, ThetaLabel::EpsPi];

    /// Valuation of θ (equivalently, doubled valuation of √θ).
    pub fn w(self) -> i64 {
        match self {
            ThetaLabel::Eps => 0,
            ThetaLabel::Pi | ThetaLabel::EpsPi => 1,
        }
    }

    pub fn is_ramified(self) -> bool {
        self != ThetaLabel::Eps
    }

    /// θ as a scalar of the base field.
    pub fn scalar(self, ctx: &FieldContext) -> PadicScalar {
        match self {
            ThetaLabel::Eps => PadicScalar::Unit { val: 0, unit: ctx.eps(), prec: ctx.prec() },
            ThetaLabel::Pi => PadicScalar::Unit { val: 1, unit: 1, prec: ctx.prec() },
            ThetaLabel::EpsPi => PadicScalar::Unit { val: 1, unit: ctx.eps(), prec: ctx.prec() },
        }
    }

    /// Leading unit of θ (1 for ϖ, ε otherwise).
    pub fn unit_part(self, ctx: &FieldContext) -> u64 {
        match self {
            ThetaLabel::Pi => 1,
            ThetaLabel::Eps | ThetaLabel::EpsPi => ctx.eps(),
        }
    }
}

impl std::fmt::Display for ThetaLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ThetaLabel::Eps => "eps",
            ThetaLabel::Pi => "pi",
            ThetaLabel::EpsPi => "epspi",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for ThetaLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eps" => Ok(ThetaLabel::Eps),
            "pi" => Ok(ThetaLabel::Pi),
            "epspi" => Ok(ThetaLabel::EpsPi),
            other => Err(Error::DomainError(format!(
                "unknown quadratic extension label '{other}' (expected eps, pi, or epspi)"
            ))),
        }
    }
}

/// Element a + b√θ of the quadratic extension k(√θ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExtScalar {
    pub theta: ThetaLabel,
    pub a: PadicScalar,
    pub b: PadicScalar,
}

impl QuadExtScalar {
    pub fn new(theta: ThetaLabel, a: PadicScalar, b: PadicScalar) -> Self {
        QuadExtScalar { theta, a, b }
    }

    pub fn one(theta: ThetaLabel, ctx: &FieldContext) -> Self {
        QuadExtScalar { theta, a: ctx.one(), b: ctx.zero() }
    }

    pub fn from_base(theta: ThetaLabel, a: PadicScalar) -> Self {
        QuadExtScalar { theta, a, b: PadicScalar::EXACT_ZERO }
    }

    pub fn add(&self, o: &QuadExtScalar, ctx: &FieldContext) -> Self {
        assert_eq!(self.theta, o.theta, "mixed quadratic extensions");
        QuadExtScalar {
            theta: self.theta,
            a: ctx.add(&self.a, &o.a),
            b: ctx.add(&self.b, &o.b),
        }
    }

    pub fn neg(&self, ctx: &FieldContext) -> Self {
        QuadExtScalar { theta: self.theta, a: ctx.neg(&self.a), b: ctx.neg(&self.b) }
    }

    pub fn sub(&self, o: &QuadExtScalar, ctx: &FieldContext) -> Self {
        self.add(&o.neg(ctx), ctx)
    }

    pub fn mul(&self, o: &QuadExtScalar, ctx: &FieldContext) -> Self {
        assert_eq!(self.theta, o.theta, "mixed quadratic extensions");
        let th = self.theta.scalar(ctx);
        let a = ctx.add(
            &ctx.mul(&self.a, &o.a),
            &ctx.mul(&th, &ctx.mul(&self.b, &o.b)),
        );
        let b = ctx.add(&ctx.mul(&self.a, &o.b), &ctx.mul(&self.b, &o.a));
        QuadExtScalar { theta: self.theta, a, b }
    }

    /// Galois conjugate a − b√θ.
    pub fn conj(&self, ctx: &FieldContext) -> Self {
        QuadExtScalar { theta: self.theta, a: self.a.clone(), b: ctx.neg(&self.b) }
    }

    /// Norm to the base field: a² − θb².
    pub fn norm(&self, ctx: &FieldContext) -> PadicScalar {
        let th = self.theta.scalar(ctx);
        ctx.sub(
            &ctx.mul(&self.a, &self.a),
            &ctx.mul(&th, &ctx.mul(&self.b, &self.b)),
        )
    }

    pub fn trace(&self, ctx: &FieldContext) -> PadicScalar {
        ctx.add(&self.a, &self.a)
    }

    pub fn inv(&self, ctx: &FieldContext) -> Result<Self> {
        let n = self.norm(ctx);
        let ni = ctx.inv(&n)?;
        let c = self.conj(ctx);
        Ok(QuadExtScalar {
            theta: self.theta,
            a: ctx.mul(&c.a, &ni),
            b: ctx.mul(&c.b, &ni),
        })
    }

    pub fn pow(&self, mut k: u64, ctx: &FieldContext) -> Self {
        let mut acc = QuadExtScalar::one(self.theta, ctx);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, ctx);
            }
            base = base.mul(&base, ctx);
            k >>= 1;
        }
        acc
    }

    /// Doubled valuation of a + b√θ.
    ///
    /// {1, √θ} is an integral basis in all three extensions, and the two
    /// components have distinguishable images (different parity of doubled
    /// valuation in the ramified cases, independent residues in the
    /// unramified one), so the valuation is the exact minimum of the
    /// component valuations — no cancellation is possible.
    pub fn val2(&self) -> Val {
        self.a
            .valuation()
            .dbl()
            .min_independent(self.b.valuation().dbl().shift(self.theta.w()))
    }

    /// Is the norm certified to be ≡ 1 at (at least) absolute precision k?
    pub fn is_norm_one_to(&self, k: i64, ctx: &FieldContext) -> bool {
        let d = ctx.sub(&self.norm(ctx), &ctx.one());
        d.valuation().ge(k)
    }
}

/// Additive character of the residue field, x ↦ exp(2πi·c·x/p). The standard
/// choice c = 1 is what the report pipeline uses; other multipliers exist so
/// tests can confirm the advertised magnitudes do not depend on the choice.
#[derive(Debug, Clone, Copy)]
pub struct AdditiveCharacter {
    p: u64,
    c: u64,
}

impl AdditiveCharacter {
    pub fn standard(p: u64) -> Self {
        AdditiveCharacter { p, c: 1 }
    }

    /// c ≡ 0 gives the trivial character (useful for orthogonality edge
    /// cases); every other residue gives a nontrivial one.
    pub fn with_multiplier(p: u64, c: u64) -> Self {
        AdditiveCharacter { p, c: c % p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_trivial(&self) -> bool {
        self.c == 0
    }

    pub fn eval(&self, x: i64) -> Complex64 {
        let r = (x.rem_euclid(self.p as i64) as u64 * self.c) % self.p;
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * r as f64 / self.p as f64)
    }
}
