//! Exact value types for quantities of the shape a + b·√q.
//!
//! Character magnitudes, formal degrees, and discriminant powers all live in
//! the quadratic ring Q[√q] (q the residue cardinality): integral depths give
//! plain rationals, half-odd depths contribute a single √q. Keeping these
//! exact lets acceptance checks assert equality instead of closeness.

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational scalar. `i128` covers every quantity in range here: the
/// largest magnitudes are small powers of q ≤ 100 with exponents ≤ ~20.
pub type Rat = Ratio<i128>;

/// Build a rational from a numerator/denominator pair.
pub fn rat(n: i128, d: i128) -> Rat {
    Rat::new(n, d)
}

/// Exact power q^e for integer e (negative exponents give 1/q^|e|).
pub fn q_pow(q: u64, e: i64) -> Rat {
    let p = (q as i128).checked_pow(e.unsigned_abs() as u32).expect("q^|e| overflows i128");
    if e >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(1, p)
    }
}

/// An exact element a + b·√q of Q[√q].
///
/// √q is irrational for every prime power q > 1 that is not a perfect
/// square; here q is an odd prime, so the representation (a, b) is unique and
/// equality of `QSqrt` values is genuine equality of real numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSqrt {
    pub q: u64,
    pub a: Rat,
    pub b: Rat,
}

impl QSqrt {
    pub fn zero(q: u64) -> Self {
        QSqrt { q, a: Rat::zero(), b: Rat::zero() }
    }

    pub fn from_rat(q: u64, a: Rat) -> Self {
        QSqrt { q, a, b: Rat::zero() }
    }

    pub fn from_int(q: u64, n: i128) -> Self {
        Self::from_rat(q, Rat::from_integer(n))
    }

    /// c·q^{e2/2} with a doubled exponent, so half-integer powers of q stay
    /// exact: even e2 lands in the rational part, odd e2 contributes √q.
    pub fn from_q_half_pow(q: u64, coeff: Rat, e2: i64) -> Self {
        if e2.rem_euclid(2) == 0 {
            QSqrt { q, a: coeff * q_pow(q, e2 / 2), b: Rat::zero() }
        } else {
            // q^{e2/2} = q^{(e2-1)/2} · √q
            QSqrt { q, a: Rat::zero(), b: coeff * q_pow(q, (e2 - 1) / 2) }
        }
    }

    pub fn add(&self, o: &QSqrt) -> Self {
        assert_eq!(self.q, o.q, "mixed residue cardinalities");
        QSqrt { q: self.q, a: self.a + o.a, b: self.b + o.b }
    }

    pub fn sub(&self, o: &QSqrt) -> Self {
        assert_eq!(self.q, o.q, "mixed residue cardinalities");
        QSqrt { q: self.q, a: self.a - o.a, b: self.b - o.b }
    }

    pub fn mul(&self, o: &QSqrt) -> Self {
        assert_eq!(self.q, o.q, "mixed residue cardinalities");
        let qq = Rat::from_integer(self.q as i128);
        QSqrt {
            q: self.q,
            a: self.a * o.a + self.b * o.b * qq,
            b: self.a * o.b + self.b * o.a,
        }
    }

    pub fn scale(&self, c: Rat) -> Self {
        QSqrt { q: self.q, a: self.a * c, b: self.b * c }
    }

    /// Multiplicative inverse via the conjugate a − b√q.
    pub fn inv(&self) -> Option<Self> {
        let qq = Rat::from_integer(self.q as i128);
        let n = self.a * self.a - self.b * self.b * qq;
        if n.is_zero() {
            return None;
        }
        Some(QSqrt { q: self.q, a: self.a / n, b: -self.b / n })
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().expect("rational out of f64 range");
        let b = self.b.to_f64().expect("rational out of f64 range");
        a + b * (self.q as f64).sqrt()
    }

    /// Sign of a + b√q, decided exactly (compare a² with b²q when the terms
    /// have opposite signs).
    pub fn signum(&self) -> i32 {
        let (a, b) = (&self.a, &self.b);
        if a.is_zero() && b.is_zero() {
            return 0;
        }
        if !a.is_negative() && !b.is_negative() {
            return 1;
        }
        if !(-a).is_negative() && !(-b).is_negative() {
            return -1;
        }
        // Opposite strict signs: a + b√q > 0 ⟺ a² sign-dominates b²q.
        let qq = Rat::from_integer(self.q as i128);
        let lhs = a * a;
        let rhs = b * b * qq;
        if a.is_positive() {
            if lhs > rhs { 1 } else if lhs < rhs { -1 } else { 0 }
        } else if lhs > rhs {
            -1
        } else if lhs < rhs {
            1
        } else {
            0
        }
    }

    /// Exact comparison with another element of the same ring.
    pub fn lt(&self, o: &QSqrt) -> bool {
        self.sub(o).signum() < 0
    }

    pub fn le(&self, o: &QSqrt) -> bool {
        self.sub(o).signum() <= 0
    }
}

/// A certified magnitude: exact when it lives in Q[√q], floating point when
/// roots of unity other than ±1 entered (tolerance policy: 1e-9).
#[derive(Debug, Clone, PartialEq)]
pub enum Magnitude {
    Exact(QSqrt),
    Approx(f64),
}

impl Magnitude {
    pub fn zero(q: u64) -> Self {
        Magnitude::Exact(QSqrt::zero(q))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Magnitude::Exact(v) => v.to_f64(),
            Magnitude::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&QSqrt> {
        match self {
            Magnitude::Exact(v) => Some(v),
            Magnitude::Approx(_) => None,
        }
    }

    /// Divide by an exact value (used for |Θ|/deg ratios).
    pub fn div_exact(&self, d: &QSqrt) -> Magnitude {
        match self {
            Magnitude::Exact(v) => {
                let inv = d.inv().expect("division by exact zero");
                Magnitude::Exact(v.mul(&inv))
            }
            Magnitude::Approx(x) => Magnitude::Approx(x / d.to_f64()),
        }
    }

    pub fn mul_exact(&self, m: &QSqrt) -> Magnitude {
        match self {
            Magnitude::Exact(v) => Magnitude::Exact(v.mul(m)),
            Magnitude::Approx(x) => Magnitude::Approx(x * m.to_f64()),
        }
    }
}

/// Round to 12 significant decimal digits, then print the shortest string
/// that round-trips to the rounded value. Used for every inexact report
/// column so repeated runs are byte-identical.
pub fn fmt_f64_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("round-trip of {x:.11e}");
    format!("{rounded}")
}

/// Render an exact value: integers as `n`, rationals as `n/d`, and genuinely
/// irrational values through the 12-digit float path.
pub fn fmt_qsqrt(v: &QSqrt) -> String {
    if v.is_rational() {
        fmt_rat(&v.a)
    } else {
        fmt_f64_sig12(v.to_f64())
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn fmt_magnitude(m: &Magnitude) -> String {
    match m {
        Magnitude::Exact(v) => fmt_qsqrt(v),
        Magnitude::Approx(x) => fmt_f64_sig12(*x),
    }
}

/// Format a doubled half-integer (depth in half-units) as `n` or `n/2`.
pub fn fmt_half(v2: i64) -> String {
    if v2 % 2 == 0 {
        format!("{}", v2 / 2)
    } else {
        format!("{v2}/2")
    }
}
