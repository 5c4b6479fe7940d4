//! Filtration-index bookkeeping on the standard apartment of a split simple
//! group: affine-root counting for lattice indices, volume exponents of the
//! groups L_s, and the unipotent-intersection index inequalities.
//!
//! Everything here is exact counting — an index [a : b] of filtration
//! lattices is reported through its exponent e with [a : b] = q^e, and a
//! volume through −log_q. Buildings never materialize: all indices are
//! apartment-local, computed from the rational values α(x) + n of affine
//! roots.

use crate::err::Error;
use crate::exact::{rat, Rat};
use crate::rootdata::{LeviDescriptor, RootSystem};
use crate::Result;
use num_traits::{ToPrimitive, Zero};

/// A point of the standard apartment, stored by the rational values
/// v_i = α_i(x) of the simple roots (coordinates in the fundamental-coweight
/// basis). Every root value α(x) is then an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApartmentPoint {
    coords: Vec<Rat>,
}

impl ApartmentPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        ApartmentPoint { coords }
    }

    /// The origin — the vertex fixed by the finite Weyl group.
    pub fn origin(rank: usize) -> Self {
        ApartmentPoint { coords: vec![Rat::zero(); rank] }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// α(x) for a root α = Σ cᵢ αᵢ given by its coefficient tuple.
    pub fn alpha(&self, root: &[i64]) -> Rat {
        root.iter()
            .zip(&self.coords)
            .map(|(&c, v)| rat(c as i128, 1) * *v)
            .sum()
    }

    /// Image under the simple reflection s_i: the root values transform by
    /// v_j ↦ v_j − v_i·⟨α_j, α_i^∨⟩ (row i of the Cartan matrix).
    pub fn reflect(&self, rs: &RootSystem, i: usize) -> Self {
        let vi = self.coords[i];
        let coords = self
            .coords
            .iter()
            .zip(&rs.cartan()[i])
            .map(|(v, &a)| *v - vi * rat(a as i128, 1))
            .collect();
        ApartmentPoint { coords }
    }
}

/// The non-origin vertices of the fundamental alcove: x_j has α_i(x_j) =
/// δ_ij/c_j where c_j is the coefficient of α_j in the highest root.
pub fn alcove_vertices(rs: &RootSystem) -> Vec<ApartmentPoint> {
    let c = rs.highest_root();
    (0..rs.rank())
        .map(|j| {
            let mut coords = vec![Rat::zero(); rs.rank()];
            coords[j] = rat(1, c[j] as i128);
            ApartmentPoint::new(coords)
        })
        .collect()
}

/// Barycenter of the fundamental alcove (average of the origin and the
/// other vertices) — a point with every root value strictly between the
/// walls.
pub fn barycenter(rs: &RootSystem) -> ApartmentPoint {
    let c = rs.highest_root();
    let n = rs.rank() as i128;
    ApartmentPoint::new(
        (0..rs.rank()).map(|j| rat(1, (n + 1) * c[j] as i128)).collect(),
    )
}

/// One endpoint of a filtration range: the rational value r, or r⁺ when
/// `open` is set (the first index past r). As a lower endpoint r⁺ means
/// t > r; as an upper endpoint of a half-open range [a, b), b = r⁺ means
/// t ≤ r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub value: Rat,
    pub open: bool,
}

impl Bound {
    pub fn at(value: Rat) -> Self {
        Bound { value, open: false }
    }

    pub fn above(value: Rat) -> Self {
        Bound { value, open: true }
    }

    /// Position on the extended line, for range validation: r⁺ sits just
    /// after r.
    fn key(&self) -> (Rat, bool) {
        (self.value, self.open)
    }
}

/// #{n ∈ Z : a ≤ v + n < b} under the open-flag conventions.
fn integer_steps(v: Rat, a: Bound, b: Bound) -> i64 {
    // Lower endpoint: n ≥ a − v (closed) or n > a − v (open).
    let lo = a.value - v;
    let n_min = if a.open {
        lo.floor().to_integer() + 1
    } else {
        lo.ceil().to_integer()
    };
    // Upper endpoint: n < b − v (closed) or n ≤ b − v (open).
    let hi = b.value - v;
    let n_max = if b.open {
        hi.floor().to_integer()
    } else {
        hi.ceil().to_integer() - 1
    };
    (n_max - n_min + 1).max(0).to_i64().expect("step count fits i64")
}

/// #{(α, n) : α ∈ roots, n ∈ Z, a ≤ α(x) + n < b} — the number of affine
/// roots whose value at x falls in the (half-open, flag-adjusted) range.
pub fn affine_count(x: &ApartmentPoint, a: Bound, b: Bound, roots: &[Vec<i64>]) -> i64 {
    roots.iter().map(|r| integer_steps(x.alpha(r), a, b)).sum()
}

/// Exponent e of a filtration-lattice index [g_{x,a} : g_{x,b}] = q^e (and
/// of the corresponding group index for 0 < a): affine roots over all of Φ,
/// plus the rank-many torus directions when `include_torus`.
pub fn log_index(
    rs: &RootSystem,
    x: &ApartmentPoint,
    a: Bound,
    b: Bound,
    include_torus: bool,
) -> Result<i64> {
    if a.key() > b.key() {
        return Err(Error::DomainError(
            "filtration range has its endpoints out of order".into(),
        ));
    }
    let mut e = affine_count(x, a, b, &rs.all_roots());
    if include_torus {
        e += rs.rank() as i64 * integer_steps(Rat::zero(), a, b);
    }
    Ok(e)
}

/// −log_q vol(L_s/Z) for L_s = G′_{x,0⁺}G_{x,s} with G′ the standard Levi:
/// the exponent of [G_{x,0⁺} : G′_{x,0⁺}G_{x,s}], counting affine roots
/// outside the Levi subsystem with values in [0⁺, s). Torus directions lie
/// inside the Levi (standard Levis have full rank) and never contribute.
/// The ambient normalization vol(G_{[x]}/Z) = 1 contributes a further
/// constant index [G_{[x]} : G_{x,0⁺}] that affine counting cannot see; it
/// is the caller's to supply (default 1).
pub fn vol_ls_exponent(
    rs: &RootSystem,
    levi: &LeviDescriptor,
    x: &ApartmentPoint,
    s: Rat,
) -> Result<i64> {
    if s <= Rat::zero() {
        return Err(Error::DomainError("the group L_s needs s > 0".into()));
    }
    let roots = roots_outside_levi(rs, levi, false)?;
    Ok(affine_count(
        x,
        Bound::above(Rat::zero()),
        Bound::at(s),
        &roots,
    ))
}

/// The roots of G not supported on the Levi subset — all of them, or only
/// the positive ones (the roots of the unipotent radical N of the standard
/// parabolic with this Levi factor).
pub fn roots_outside_levi(
    rs: &RootSystem,
    levi: &LeviDescriptor,
    positive_only: bool,
) -> Result<Vec<Vec<i64>>> {
    if levi.subset().iter().any(|&j| j >= rs.rank()) {
        return Err(Error::DomainError(
            "Levi subset names a simple root outside the system".into(),
        ));
    }
    let outside = |r: &Vec<i64>| {
        !r.iter()
            .enumerate()
            .all(|(j, &c)| c == 0 || levi.subset().contains(&j))
    };
    let mut roots: Vec<Vec<i64>> =
        rs.positive_roots().iter().filter(|r| outside(r)).cloned().collect();
    if !positive_only {
        let neg: Vec<Vec<i64>> =
            roots.iter().map(|r| r.iter().map(|c| -c).collect()).collect();
        roots.extend(neg);
    }
    Ok(roots)
}

/// One part of the unipotent-intersection inequality
/// 2·lhs ≤ dim_n_factor + rhs (exponent form of
/// [J ∩ N′ : J′ ∩ N′]² ≤ q^{dim N}·[J : J′]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexInequalityPart {
    pub lhs_exponent: i64,
    pub rhs_exponent: i64,
    pub dim_n_factor: i64,
    pub holds: bool,
}

fn part(lhs: i64, rhs: i64, dim_n_factor: i64) -> IndexInequalityPart {
    IndexInequalityPart { lhs_exponent: lhs, rhs_exponent: rhs, dim_n_factor, holds: 2 * lhs <= dim_n_factor + rhs }
}

/// The three unipotent-intersection index inequalities for a standard Levi
/// G′ at x, with N the full unipotent radical of a Borel (so dim N = #Φ⁺)
/// and the intersections counted over the positive roots outside the Levi:
///
/// * (i) over [a′, a), for 0 < a′ ≤ a, against q^{dim N};
/// * (ii) over the depth-zero layer [0, 0⁺), against q^{dim N};
/// * (iii) over [0, a), against q^{2·dim N}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexInequalityReport {
    pub part_i: IndexInequalityPart,
    pub part_ii: IndexInequalityPart,
    pub part_iii: IndexInequalityPart,
}

impl IndexInequalityReport {
    pub fn all_hold(&self) -> bool {
        self.part_i.holds && self.part_ii.holds && self.part_iii.holds
    }
}

pub fn check_index_inequalities(
    rs: &RootSystem,
    levi: &LeviDescriptor,
    x: &ApartmentPoint,
    a_prime: Rat,
    a: Rat,
) -> Result<IndexInequalityReport> {
    if a_prime <= Rat::zero() || a < a_prime {
        return Err(Error::DomainError(
            "part (i) needs 0 < a′ ≤ a".into(),
        ));
    }
    let pos_outside = roots_outside_levi(rs, levi, true)?;
    let all_outside = roots_outside_levi(rs, levi, false)?;
    let dim_n = rs.positive_roots().len() as i64;

    let count =
        |roots: &[Vec<i64>], lo: Bound, hi: Bound| affine_count(x, lo, hi, roots);

    let lo_i = Bound::at(a_prime);
    let hi_i = Bound::at(a);
    let part_i = part(count(&pos_outside, lo_i, hi_i), count(&all_outside, lo_i, hi_i), dim_n);

    // Depth-zero layer: exactly the affine roots with value 0 at x.
    let lo_ii = Bound::at(Rat::zero());
    let hi_ii = Bound::above(Rat::zero());
    let part_ii =
        part(count(&pos_outside, lo_ii, hi_ii), count(&all_outside, lo_ii, hi_ii), dim_n);

    let hi_iii = Bound::at(a);
    let part_iii =
        part(count(&pos_outside, lo_ii, hi_iii), count(&all_outside, lo_ii, hi_iii), 2 * dim_n);

    Ok(IndexInequalityReport { part_i, part_ii, part_iii })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_system, standard_levis, TypeLabel};

    fn half(n: i128) -> Rat {
        rat(n, 2)
    }

    #[test]
    fn a1_vertex_unit_interval_counts_the_lie_algebra() {
        let a1 = build_root_system(TypeLabel::A, 1).unwrap();
        let x = ApartmentPoint::origin(1);
        let roots = affine_count(&x, Bound::at(rat(0, 1)), Bound::at(rat(1, 1)), &a1.all_roots());
        assert_eq!(roots, 2);
        let e = log_index(&a1, &x, Bound::at(rat(0, 1)), Bound::at(rat(1, 1)), true).unwrap();
        assert_eq!(e, 3); // dim sl(2)
    }

    #[test]
    fn a1_barycenter_counts_one_root_value_per_half_step() {
        let a1 = build_root_system(TypeLabel::A, 1).unwrap();
        let x = barycenter(&a1); // α(x) = 1/2
        assert_eq!(x.alpha(&[1]), half(1));
        let c = affine_count(&x, Bound::at(half(1)), Bound::at(rat(1, 1)), &a1.all_roots());
        assert_eq!(c, 2); // α + 0 and −α + 1 both take the value 1/2
        let empty: Vec<Vec<i64>> = Vec::new();
        assert_eq!(affine_count(&x, Bound::at(rat(0, 1)), Bound::at(rat(5, 1)), &empty), 0);
    }

    #[test]
    fn c2_vertex_unit_interval_has_full_dimension() {
        let c2 = build_root_system(TypeLabel::C, 2).unwrap();
        let x = ApartmentPoint::origin(2);
        let e = log_index(&c2, &x, Bound::at(rat(0, 1)), Bound::at(rat(1, 1)), true).unwrap();
        assert_eq!(e, 10); // dim sp(4)
    }

    #[test]
    fn log_index_is_additive_over_nested_ranges() {
        let c2 = build_root_system(TypeLabel::C, 2).unwrap();
        for x in [ApartmentPoint::origin(2), barycenter(&c2), alcove_vertices(&c2)[1].clone()] {
            let pts = [
                Bound::at(rat(0, 1)),
                Bound::above(half(1)),
                Bound::at(rat(2, 1)),
                Bound::above(rat(2, 1)),
                Bound::at(rat(7, 2)),
            ];
            for i in 0..pts.len() {
                for j in i..pts.len() {
                    for k in j..pts.len() {
                        let ab = log_index(&c2, &x, pts[i], pts[j], true).unwrap();
                        let bc = log_index(&c2, &x, pts[j], pts[k], true).unwrap();
                        let ac = log_index(&c2, &x, pts[i], pts[k], true).unwrap();
                        assert_eq!(ab + bc, ac);
                    }
                }
            }
        }
        let a = Bound::at(rat(1, 1));
        assert!(matches!(
            log_index(&c2, &ApartmentPoint::origin(2), a, Bound::at(half(1)), true),
            Err(Error::DomainError(_))
        ));
        // Degenerate range [a, a) is empty but legal.
        assert_eq!(
            log_index(&c2, &ApartmentPoint::origin(2), a, a, true).unwrap(),
            0
        );
    }

    #[test]
    fn counts_are_invariant_under_simple_reflections() {
        for (label, rank) in [(TypeLabel::A, 2), (TypeLabel::C, 2), (TypeLabel::G, 2)] {
            let rs = build_root_system(label, rank).unwrap();
            let x = ApartmentPoint::new(vec![rat(1, 3), rat(2, 5)]);
            for i in 0..rank {
                let y = x.reflect(&rs, i);
                for (a, b) in [
                    (Bound::at(rat(0, 1)), Bound::at(rat(1, 1))),
                    (Bound::above(rat(0, 1)), Bound::at(rat(5, 2))),
                    (Bound::at(half(1)), Bound::above(rat(2, 1))),
                ] {
                    assert_eq!(
                        log_index(&rs, &x, a, b, true).unwrap(),
                        log_index(&rs, &y, a, b, true).unwrap(),
                        "{label}_{rank}, reflection {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn volume_exponent_for_the_sl2_torus_levi() {
        let a1 = build_root_system(TypeLabel::A, 1).unwrap();
        let torus = standard_levis(&a1).into_iter().find(|l| l.subset().is_empty()).unwrap();
        let x = ApartmentPoint::origin(1);
        // [0⁺, s): per root direction the integers 0 < n < s.
        for s in 1..=6 {
            let e = vol_ls_exponent(&a1, &torus, &x, rat(s, 1)).unwrap();
            assert_eq!(e, 2 * (s as i64 - 1));
        }
        assert!(matches!(
            vol_ls_exponent(&a1, &torus, &x, rat(0, 1)),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn volume_exponent_grows_by_codimension_per_unit_and_meets_the_lower_bound() {
        for (label, rank) in [(TypeLabel::A, 2), (TypeLabel::C, 2)] {
            let rs = build_root_system(label, rank).unwrap();
            for levi in standard_levis(&rs) {
                let codim = rs.dim() - levi.dim();
                for x in [ApartmentPoint::origin(rank), barycenter(&rs)] {
                    for s2 in 1..=8i128 {
                        let s = half(s2);
                        let e = vol_ls_exponent(&rs, &levi, &x, s).unwrap();
                        // Lower bound (dim G − dim G′)(s − 1).
                        let bound = rat(codim as i128, 1) * (s - rat(1, 1));
                        assert!(
                            rat(e as i128, 1) >= bound,
                            "{label}_{rank} {:?} s={s}",
                            levi.subset()
                        );
                        // One more unit of s adds codim-many affine roots.
                        let e_next =
                            vol_ls_exponent(&rs, &levi, &x, s + rat(1, 1)).unwrap();
                        assert_eq!(e_next - e, codim);
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_volume_decay_mechanism() {
        // For SL(2) the decaying combinations are vol(L_s)^{1/2} itself and
        // q^{r_G s}·vol(L_s): exponents −e(s)/2 and s − e(s) with
        // e(s) = 2(⌈s⌉ − 1) at a vertex.
        let a1 = build_root_system(TypeLabel::A, 1).unwrap();
        let torus = standard_levis(&a1).into_iter().next().unwrap();
        let x = ApartmentPoint::origin(1);
        let mut prev_half: Option<Rat> = None;
        let mut prev_combo: Option<Rat> = None;
        for s2 in 2..=16i128 {
            let s = half(s2);
            let e = vol_ls_exponent(&a1, &torus, &x, s).unwrap();
            let half_log = rat(-(e as i128), 2);
            let combo = s - rat(e as i128, 1);
            if s2 % 2 == 0 {
                // Compare at integer steps, where the count strictly grows.
                if let (Some(ph), Some(pc)) = (prev_half, prev_combo) {
                    assert!(half_log < ph, "vol^(1/2) must decay");
                    assert!(combo < pc, "q^(r_G s)·vol must decay");
                }
                prev_half = Some(half_log);
                prev_combo = Some(combo);
            }
        }
    }

    #[test]
    fn index_inequalities_hold_on_the_a1_grid() {
        let a1 = build_root_system(TypeLabel::A, 1).unwrap();
        let torus = standard_levis(&a1).into_iter().next().unwrap();
        for x in [ApartmentPoint::origin(1), barycenter(&a1)] {
            for a_prime2 in [1i128, 2] {
                for a2 in [2i128, 4] {
                    let rep = check_index_inequalities(
                        &a1,
                        &torus,
                        &x,
                        half(a_prime2),
                        half(a2),
                    )
                    .unwrap();
                    assert!(rep.all_hold(), "a′={a_prime2}/2 a={a2}/2");
                }
            }
        }
    }

    #[test]
    fn index_inequalities_hold_for_c2_on_vertices_and_barycenter() {
        let c2 = build_root_system(TypeLabel::C, 2).unwrap();
        let mut points = vec![ApartmentPoint::origin(2), barycenter(&c2)];
        points.extend(alcove_vertices(&c2));
        let grid: Vec<Rat> = [1i128, 2, 3, 4, 6].iter().map(|&n| half(n)).collect();
        for levi in standard_levis(&c2) {
            for x in &points {
                for &ap in &grid {
                    for &a in &grid {
                        if a < ap {
                            continue;
                        }
                        let rep =
                            check_index_inequalities(&c2, &levi, x, ap, a).unwrap();
                        assert!(
                            rep.all_hold(),
                            "levi {:?}, x {:?}, a′={ap}, a={a}",
                            levi.subset(),
                            x.coords()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_equal_endpoints_give_zero_on_both_sides() {
        let c2 = build_root_system(TypeLabel::C, 2).unwrap();
        let levi = standard_levis(&c2).into_iter().next().unwrap();
        let rep = check_index_inequalities(&c2, &levi, &barycenter(&c2), rat(1, 1), rat(1, 1))
            .unwrap();
        assert_eq!(rep.part_i.lhs_exponent, 0);
        assert_eq!(rep.part_i.rhs_exponent, 0);
        assert!(rep.part_i.holds);
        let bad =
            check_index_inequalities(&c2, &levi, &barycenter(&c2), rat(0, 1), rat(1, 1));
        assert!(matches!(bad, Err(Error::DomainError(_))));
    }

    #[test]
    fn vertices_sit_on_the_alcove_walls() {
        let g2 = build_root_system(TypeLabel::G, 2).unwrap();
        let theta = g2.highest_root().to_vec();
        for v in alcove_vertices(&g2) {
            assert_eq!(v.alpha(&theta), rat(1, 1));
        }
        let b = barycenter(&g2);
        assert!(b.alpha(&theta) < rat(1, 1));
        assert!(b.coords().iter().all(|c| *c > Rat::zero()));
    }
}
