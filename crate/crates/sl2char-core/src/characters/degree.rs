//! Formal degrees of the three parameter kinds, with the measure
//! normalization they refer to and a depth-consistency window.

use num_traits::One;

use crate::exact::{rat, QSqrt, Rat};

use super::ParamKind;

/// Exact formal degree: q^r for the unramified kind, ½(q+1)·q^{r−1/2} for
/// the ramified kind, and 1/2 for the exceptional depth-zero quartet.
pub fn formal_degree(kind: ParamKind, q: u64, r2: i64) -> QSqrt {
    match kind {
        ParamKind::Unramified => QSqrt::from_q_half_pow(q, Rat::one(), r2),
        ParamKind::Ramified => {
            QSqrt::from_q_half_pow(q, rat(q as i128 + 1, 2), r2 - 1)
        }
        ParamKind::Exceptional => QSqrt::from_rat(q, rat(1, 2)),
    }
}

/// Volume of SL(2, O) in the normalization the degrees are stated against:
/// (q² − 1)·q^{−1/2}.
pub fn vol_sl2_o(q: u64) -> QSqrt {
    let c = Rat::from_integer(q as i128 * q as i128 - 1);
    QSqrt::from_q_half_pow(q, c, -1)
}

/// Degree–depth consistency: the formal degree of a depth-r parameter is
/// sandwiched as q^r/2 ≤ deg ≤ q^{r+3}, the slack being what a maximal
/// compact subgroup modulo its center (dimension 3) can absorb.
pub fn degree_within_volume_window(kind: ParamKind, q: u64, r2: i64) -> bool {
    let deg = formal_degree(kind, q, r2);
    let lo = QSqrt::from_q_half_pow(q, rat(1, 2), r2);
    let hi = QSqrt::from_q_half_pow(q, Rat::one(), r2 + 6);
    lo.le(&deg) && deg.le(&hi)
}
