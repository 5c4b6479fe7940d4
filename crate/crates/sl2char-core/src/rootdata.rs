//! Root-system combinatorics for split simple groups and the derived bound
//! constants: height h_G, rank r_G, Weyl order, standard Levi dimensions,
//! the decay exponent κ, the discriminant exponent A, and the shape of the
//! uniform character bound.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::err::Error;
use crate::exact::{rat, Rat};
use crate::Result;

/// Cartan type of a simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeLabel::A => "A",
            TypeLabel::B => "B",
            TypeLabel::C => "C",
            TypeLabel::D => "D",
            TypeLabel::E => "E",
            TypeLabel::F => "F",
            TypeLabel::G => "G",
        })
    }
}

impl FromStr for TypeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(TypeLabel::A),
            "B" | "b" => Ok(TypeLabel::B),
            "C" | "c" => Ok(TypeLabel::C),
            "D" | "d" => Ok(TypeLabel::D),
            "E" | "e" => Ok(TypeLabel::E),
            "F" | "f" => Ok(TypeLabel::F),
            "G" | "g" => Ok(TypeLabel::G),
            other => Err(Error::DomainError(format!("unknown Cartan type {other:?}"))),
        }
    }
}

/// A simple root system in the simple-root basis: every root is an integer
/// coefficient tuple over the simple roots. Positive roots are generated
/// from the Cartan matrix by root-string closure, so the stored set is
/// closed under the usual addition criterion by construction and is checked
/// against the classical counts in tests.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    /// cartan[i][j] = ⟨α_j, α_i^∨⟩.
    cartan: Vec<Vec<i64>>,
    /// Positive roots sorted by (height, coefficients).
    pos_roots: Vec<Vec<i64>>,
    weyl_order: u64,
}

/// Builds the root system for a valid (type, rank) pair: A_n (n ≥ 1),
/// B_n/C_n (n ≥ 2), D_n (n ≥ 4), E_6..E_8, F_4, G_2. Ranks above 12 are
/// rejected: the Levi enumeration below is exponential in the rank and the
/// shipped constants only need small ranks.
pub fn build_root_system(label: TypeLabel, rank: usize) -> Result<RootSystem> {
    let cartan = cartan_matrix(label, rank)?;
    let pos_roots = positive_roots_by_closure(&cartan);
    let weyl_order = weyl_group_order(label, rank);
    Ok(RootSystem { label, rank, cartan, pos_roots, weyl_order })
}

impl RootSystem {
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    /// Rank r_G (dimension of the maximal torus).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// cartan[i][j] = ⟨α_j, α_i^∨⟩.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    /// All roots Φ = Φ⁺ ∪ −Φ⁺.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.pos_roots.clone();
        out.extend(self.pos_roots.iter().map(|r| r.iter().map(|c| -c).collect()));
        out
    }

    /// dim G = rank + #Φ for the split simple group of this type.
    pub fn dim(&self) -> i64 {
        self.rank as i64 + 2 * self.pos_roots.len() as i64
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    /// Height of a root = sum of its simple-root coefficients.
    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// h_G = max height over Φ⁺ (the height of the highest root).
    pub fn height_of_phi(&self) -> i64 {
        self.pos_roots.iter().map(|r| Self::height(r)).max().unwrap_or(0)
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> &[i64] {
        self.pos_roots
            .iter()
            .max_by_key(|r| Self::height(r))
            .expect("a root system has at least one positive root")
    }

    /// ⟨β, α_i^∨⟩ for β in the simple-root basis.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan[i]).map(|(&c, &a)| c * a).sum()
    }
}

fn cartan_matrix(label: TypeLabel, rank: usize) -> Result<Vec<Vec<i64>>> {
    let bad = |msg: &str| Err(Error::DomainError(format!("{label}_{rank}: {msg}")));
    let range_ok = match label {
        TypeLabel::A => rank >= 1,
        TypeLabel::B | TypeLabel::C => rank >= 2,
        TypeLabel::D => rank >= 4,
        TypeLabel::E => (6..=8).contains(&rank),
        TypeLabel::F => rank == 4,
        TypeLabel::G => rank == 2,
    };
    if !range_ok {
        return bad("rank is outside the valid range for this type");
    }
    if rank > 12 {
        return bad("ranks above 12 are not supported");
    }

    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match label {
        TypeLabel::A => {
            for i in 1..rank {
                link(&mut c, i - 1, i);
            }
        }
        TypeLabel::B => {
            // α_rank−1 short: ⟨α_{n−2}, α_{n−1}^∨⟩ = −2.
            for i in 1..rank {
                link(&mut c, i - 1, i);
            }
            c[rank - 1][rank - 2] = -2;
        }
        TypeLabel::C => {
            // α_rank−1 long: ⟨α_{n−1}, α_{n−2}^∨⟩ = −2.
            for i in 1..rank {
                link(&mut c, i - 1, i);
            }
            c[rank - 2][rank - 1] = -2;
        }
        TypeLabel::D => {
            for i in 1..rank - 1 {
                link(&mut c, i - 1, i);
            }
            link(&mut c, rank - 3, rank - 1);
        }
        TypeLabel::E => {
            // Bourbaki numbering: chain 1−3−4−5−…, node 2 attached to 4.
            link(&mut c, 0, 2);
            link(&mut c, 1, 3);
            for i in 3..rank {
                link(&mut c, i - 1, i);
            }
        }
        TypeLabel::F => {
            // α_1, α_2 long; α_3, α_4 short; ⟨α_2, α_3^∨⟩ = −2.
            link(&mut c, 0, 1);
            link(&mut c, 1, 2);
            link(&mut c, 2, 3);
            c[2][1] = -2;
        }
        TypeLabel::G => {
            // α_1 short, α_2 long; ⟨α_2, α_1^∨⟩ = −3.
            link(&mut c, 0, 1);
            c[0][1] = -3;
        }
    }
    Ok(c)
}

/// Root-string closure from the simple roots: β + α_i is a root iff
/// q − ⟨β, α_i^∨⟩ > 0 where q is the largest k with β − k·α_i a root.
/// Processing by height keeps every string's lower part available.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        known.insert(e.clone());
        frontier.push(e);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                let pairing: i64 =
                    beta.iter().zip(&cartan[i]).map(|(&c, &a)| c * a).sum();
                let mut q = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    q += 1;
                }
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<i64>> = known.into_iter().collect();
    out.sort_by_key(|r| (RootSystem::height(r), r.clone()));
    out
}

fn weyl_group_order(label: TypeLabel, rank: usize) -> u64 {
    let fact = |n: usize| (1..=n as u64).product::<u64>();
    match label {
        TypeLabel::A => fact(rank + 1),
        TypeLabel::B | TypeLabel::C => (1u64 << rank) * fact(rank),
        TypeLabel::D => (1u64 << (rank - 1)) * fact(rank),
        TypeLabel::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        TypeLabel::F => 1_152,
        TypeLabel::G => 12,
    }
}

/// A standard Levi subgroup, described by the subset of simple roots it is
/// generated by (together with the full maximal torus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDescriptor {
    subset: Vec<usize>,
    dim: i64,
    excluded: bool,
}

impl LeviDescriptor {
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// dim L = rank(G) + #(roots supported on the subset).
    pub fn dim(&self) -> i64 {
        self.dim
    }

    /// Whether this Levi is excluded from the κ minimum: in type A_n the
    /// irreducible A_{n−1} Levis (dropping one end node of the chain) do not
    /// arise in any supercuspidal datum.
    pub fn excluded(&self) -> bool {
        self.excluded
    }
}

/// True when the root with these coefficients is supported on the subset.
fn supported_on(root: &[i64], subset: &[usize]) -> bool {
    root.iter().enumerate().all(|(j, &c)| c == 0 || subset.contains(&j))
}

/// All proper standard Levi subgroups: one per proper subset of the simple
/// roots (the empty subset is the maximal torus). Deterministic order:
/// subset size, then lexicographic.
pub fn standard_levis(rs: &RootSystem) -> Vec<LeviDescriptor> {
    let rank = rs.rank();
    let mut out = Vec::with_capacity((1usize << rank) - 1);
    for mask in 0..(1u32 << rank) - 1 {
        let subset: Vec<usize> = (0..rank).filter(|&j| mask >> j & 1 == 1).collect();
        let roots_in = rs
            .pos_roots
            .iter()
            .filter(|r| supported_on(r, &subset))
            .count() as i64;
        let dim = rank as i64 + 2 * roots_in;
        let excluded = rs.label() == TypeLabel::A
            && rank >= 2
            && subset.len() == rank - 1
            && (subset == (1..rank).collect::<Vec<_>>()
                || subset == (0..rank - 1).collect::<Vec<_>>());
        out.push(LeviDescriptor { subset, dim, excluded });
    }
    out.sort_by_key(|l| (l.subset.len(), l.subset.clone()));
    out
}

/// One candidate term of the κ minimum.
#[derive(Debug, Clone)]
pub struct LeviTerm {
    pub levi: LeviDescriptor,
    /// dim G − dim L, minus 2r_G when h_G > 1.
    pub numerator: i64,
    /// Nonpositive numerators are surfaced and left out of the minimum
    /// rather than silently minimized over.
    pub flagged_nonpositive: bool,
}

/// The decay constants of the uniform character bound for one group.
#[derive(Debug, Clone)]
pub struct BoundConstants {
    pub label: TypeLabel,
    pub rank: usize,
    pub dim: i64,
    pub pos_root_count: usize,
    pub weyl_order: u64,
    pub h_g: i64,
    pub center_dim: i64,
    /// κ = min over admissible proper standard Levis of
    /// (dim G − dim L − 2r_G)/(2(dim G − dim Z)) when h_G > 1, and of
    /// (dim G − dim L)/(2(dim G − dim Z)) when h_G = 1.
    pub kappa: Rat,
    /// A = r_G·h_G + 1 when h_G > 1, else r_G + 1.
    pub exponent_a: i64,
    pub levi_terms: Vec<LeviTerm>,
}

/// κ and its per-Levi terms. The center dimension is an explicit input
/// (0 for the simply-connected simple types, whose centers are finite).
pub fn kappa(rs: &RootSystem, center_dim: i64) -> Result<BoundConstants> {
    let dim = rs.dim();
    if center_dim < 0 || center_dim >= dim {
        return Err(Error::DomainError(
            "center dimension must lie in [0, dim G)".into(),
        ));
    }
    let h_g = rs.height_of_phi();
    let r_g = rs.rank() as i64;
    let shift = if h_g > 1 { 2 * r_g } else { 0 };
    let denom = 2 * (dim - center_dim);

    let mut levi_terms = Vec::new();
    let mut best: Option<Rat> = None;
    for levi in standard_levis(rs) {
        let numerator = dim - levi.dim() - shift;
        let flagged_nonpositive = numerator <= 0;
        if !levi.excluded() && !flagged_nonpositive {
            let term = rat(numerator as i128, denom as i128);
            best = Some(match best {
                Some(b) if b <= term => b,
                _ => term,
            });
        }
        levi_terms.push(LeviTerm { levi, numerator, flagged_nonpositive });
    }
    let kappa = best.ok_or_else(|| {
        Error::InvariantViolation(
            "no admissible Levi with positive numerator; κ is undefined".into(),
        )
    })?;
    Ok(BoundConstants {
        label: rs.label(),
        rank: rs.rank(),
        dim,
        pos_root_count: rs.positive_roots().len(),
        weyl_order: rs.weyl_order(),
        h_g,
        center_dim,
        kappa,
        exponent_a: exponent_a(rs),
        levi_terms,
    })
}

/// The Weyl-discriminant exponent of the uniform bound:
/// A = r_G·h_G + 1 when h_G > 1, else r_G + 1.
pub fn exponent_a(rs: &RootSystem) -> i64 {
    let h = rs.height_of_phi();
    let r = rs.rank() as i64;
    if h > 1 {
        r * h + 1
    } else {
        r + 1
    }
}

/// The torus-depth threshold A_{γ,Σ} = h_G·sd(γ) + s (h_G > 1) or sd(γ)
/// (h_G = 1), in doubled half-units: sd2 = 2·sd, s2 = 2·s.
pub fn a_gamma_sigma(h_g: i64, sd2: i64, s2: i64) -> i64 {
    debug_assert!(sd2 >= 0 && s2 >= 0, "depths are nonnegative");
    if h_g > 1 {
        h_g * sd2 + s2
    } else {
        sd2
    }
}

/// log_q of the uniform-bound right-hand side
/// C₁·(#W)²·q^{dim G + r_G(A_{γ,Σ}+1)}·D(γ)^{−1}·(r+4)^{r_G}·vol(L_s)^{1/2}
/// as a shape/monotonicity diagnostic (never ground truth). The caller
/// supplies log_q vol(L_s) (from `filtration`) and log_q C₁ (0 for C₁ = 1);
/// the worst cases D(γ)^{−1} ≤ q^{2·#Φ⁺·sd} and s_{d−1} = s = r/2 are
/// substituted for the γ- and datum-dependent pieces.
pub fn main_bound_rhs(
    rs: &RootSystem,
    q: u64,
    r2: i64,
    sd2: i64,
    vol_ls_log_q: f64,
    c1_log_q: f64,
) -> f64 {
    let lq = (q as f64).ln();
    let r_g = rs.rank() as f64;
    let sd = sd2 as f64 / 2.0;
    let r = r2 as f64 / 2.0;
    let h = rs.height_of_phi() as f64;
    let a_gs = if h > 1.0 { h * sd + r / 2.0 } else { sd };
    c1_log_q
        + 2.0 * (rs.weyl_order() as f64).ln() / lq
        + rs.dim() as f64
        + r_g * (a_gs + 1.0)
        + 2.0 * rs.positive_roots().len() as f64 * sd
        + r_g * (r + 4.0).ln() / lq
        + 0.5 * vol_ls_log_q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: TypeLabel, rank: usize) -> RootSystem {
        build_root_system(label, rank).unwrap()
    }

    #[test]
    fn counts_match_classical_closed_forms() {
        let n_ = |n: usize| n as i64;
        for n in 1..=8 {
            let r = rs(TypeLabel::A, n);
            assert_eq!(r.positive_roots().len(), n * (n + 1) / 2, "A_{n} roots");
            assert_eq!(r.dim(), n_(n) * (n_(n) + 2), "A_{n} dim");
            assert_eq!(r.height_of_phi(), n_(n), "A_{n} height");
        }
        for n in 2..=8 {
            for label in [TypeLabel::B, TypeLabel::C] {
                let r = rs(label, n);
                assert_eq!(r.positive_roots().len(), n * n, "{label}_{n} roots");
                assert_eq!(r.dim(), n_(n) * (2 * n_(n) + 1), "{label}_{n} dim");
                assert_eq!(r.height_of_phi(), 2 * n_(n) - 1, "{label}_{n} height");
            }
        }
        for n in 4..=8 {
            let r = rs(TypeLabel::D, n);
            assert_eq!(r.positive_roots().len(), n * (n - 1), "D_{n} roots");
            assert_eq!(r.dim(), n_(n) * (2 * n_(n) - 1), "D_{n} dim");
            assert_eq!(r.height_of_phi(), 2 * n_(n) - 3, "D_{n} height");
        }
        for (rank, pos, dim, h) in [(6, 36, 78, 11), (7, 63, 133, 17), (8, 120, 248, 29)] {
            let r = rs(TypeLabel::E, rank);
            assert_eq!(r.positive_roots().len(), pos);
            assert_eq!(r.dim(), dim);
            assert_eq!(r.height_of_phi(), h);
        }
        let f = rs(TypeLabel::F, 4);
        assert_eq!((f.positive_roots().len(), f.dim(), f.height_of_phi()), (24, 52, 11));
        let g = rs(TypeLabel::G, 2);
        assert_eq!((g.positive_roots().len(), g.dim(), g.height_of_phi()), (6, 14, 5));
    }

    #[test]
    fn height_plus_one_is_the_coxeter_number() {
        let mut all: Vec<RootSystem> = Vec::new();
        for n in 1..=8 {
            all.push(rs(TypeLabel::A, n));
        }
        for n in 2..=8 {
            all.push(rs(TypeLabel::B, n));
            all.push(rs(TypeLabel::C, n));
        }
        for n in 4..=8 {
            all.push(rs(TypeLabel::D, n));
        }
        for n in 6..=8 {
            all.push(rs(TypeLabel::E, n));
        }
        all.push(rs(TypeLabel::F, 4));
        all.push(rs(TypeLabel::G, 2));
        for r in &all {
            let root_count = 2 * r.positive_roots().len() as i64;
            assert_eq!(root_count % r.rank() as i64, 0);
            assert_eq!(
                r.height_of_phi() + 1,
                root_count / r.rank() as i64,
                "{}_{}",
                r.label(),
                r.rank()
            );
        }
    }

    #[test]
    fn g2_positive_roots_are_the_expected_six() {
        let g = rs(TypeLabel::G, 2);
        let expected: Vec<Vec<i64>> = vec![
            vec![0, 1],
            vec![1, 0],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        let mut got = g.positive_roots().to_vec();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
        assert_eq!(g.highest_root(), &[3, 2]);
    }

    #[test]
    fn invalid_type_rank_pairs_are_rejected() {
        for (label, rank) in [
            (TypeLabel::A, 0),
            (TypeLabel::B, 1),
            (TypeLabel::C, 1),
            (TypeLabel::D, 3),
            (TypeLabel::E, 5),
            (TypeLabel::E, 9),
            (TypeLabel::F, 3),
            (TypeLabel::F, 5),
            (TypeLabel::G, 1),
            (TypeLabel::G, 3),
            (TypeLabel::A, 13),
        ] {
            assert!(
                matches!(build_root_system(label, rank), Err(Error::DomainError(_))),
                "{label}_{rank} should be rejected"
            );
        }
    }

    #[test]
    fn weyl_orders_match_known_values() {
        for (label, rank, order) in [
            (TypeLabel::A, 2, 6),
            (TypeLabel::A, 3, 24),
            (TypeLabel::B, 3, 48),
            (TypeLabel::C, 2, 8),
            (TypeLabel::D, 4, 192),
            (TypeLabel::E, 6, 51_840),
            (TypeLabel::F, 4, 1_152),
            (TypeLabel::G, 2, 12),
        ] {
            assert_eq!(rs(label, rank).weyl_order(), order, "{label}_{rank}");
        }
    }

    #[test]
    fn levi_dimensions_match_independent_subsystem_builds() {
        // C_2: torus + two A_1 Levis.
        let c2 = rs(TypeLabel::C, 2);
        let mut dims: Vec<i64> = standard_levis(&c2).iter().map(|l| l.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![2, 4, 4]);

        // Chain subsets of A_5 of size 3 carry an A_3 subsystem.
        let a5 = rs(TypeLabel::A, 5);
        let a3_pos = rs(TypeLabel::A, 3).positive_roots().len() as i64;
        let levi = standard_levis(&a5)
            .into_iter()
            .find(|l| l.subset() == [1, 2, 3])
            .unwrap();
        assert_eq!(levi.dim(), 5 + 2 * a3_pos);

        // The long-node pair of C_3 carries a C_2 subsystem.
        let c3 = rs(TypeLabel::C, 3);
        let c2_pos = rs(TypeLabel::C, 2).positive_roots().len() as i64;
        let levi = standard_levis(&c3)
            .into_iter()
            .find(|l| l.subset() == [1, 2])
            .unwrap();
        assert_eq!(levi.dim(), 3 + 2 * c2_pos);

        // Non-adjacent pair: A_1 × A_1.
        let a3 = rs(TypeLabel::A, 3);
        let levi = standard_levis(&a3)
            .into_iter()
            .find(|l| l.subset() == [0, 2])
            .unwrap();
        assert_eq!(levi.dim(), 3 + 2 * 2);
    }

    #[test]
    fn chain_levis_of_type_a_are_excluded() {
        let a3 = rs(TypeLabel::A, 3);
        for levi in standard_levis(&a3) {
            let is_end_chain = levi.subset() == [0, 1] || levi.subset() == [1, 2];
            assert_eq!(levi.excluded(), is_end_chain, "subset {:?}", levi.subset());
        }
        // The exclusion is specific to type A.
        let c2 = rs(TypeLabel::C, 2);
        assert!(standard_levis(&c2).iter().all(|l| !l.excluded()));
        // A_1 keeps its torus Levi (the κ formula needs it).
        let a1 = rs(TypeLabel::A, 1);
        let levis = standard_levis(&a1);
        assert_eq!(levis.len(), 1);
        assert!(!levis[0].excluded());
    }

    #[test]
    fn kappa_matches_frozen_values() {
        for (label, rank, num, den) in [
            (TypeLabel::A, 1, 1i128, 3i128),
            (TypeLabel::A, 2, 1, 8),
            (TypeLabel::A, 3, 1, 15),
            (TypeLabel::B, 2, 1, 10),
            (TypeLabel::C, 2, 1, 10),
            (TypeLabel::G, 2, 3, 14),
            (TypeLabel::F, 4, 11, 52),
        ] {
            let bc = kappa(&rs(label, rank), 0).unwrap();
            assert_eq!(bc.kappa, rat(num, den), "{label}_{rank}");
        }
    }

    #[test]
    fn kappa_is_positive_for_every_shipped_type() {
        let mut types = vec![
            (TypeLabel::F, 4),
            (TypeLabel::G, 2),
            (TypeLabel::E, 6),
            (TypeLabel::E, 7),
            (TypeLabel::E, 8),
        ];
        for n in 1..=6 {
            types.push((TypeLabel::A, n));
        }
        for n in 2..=5 {
            types.push((TypeLabel::B, n));
            types.push((TypeLabel::C, n));
        }
        for n in 4..=6 {
            types.push((TypeLabel::D, n));
        }
        for (label, rank) in types {
            let bc = kappa(&rs(label, rank), 0).unwrap();
            assert!(bc.kappa > rat(0, 1), "{label}_{rank}: κ = {}", bc.kappa);
            assert!(bc.exponent_a >= 2, "{label}_{rank}");
        }
    }

    #[test]
    fn a2_levis_are_both_excluded_and_flagged() {
        let bc = kappa(&rs(TypeLabel::A, 2), 0).unwrap();
        let singletons: Vec<&LeviTerm> = bc
            .levi_terms
            .iter()
            .filter(|t| t.levi.subset().len() == 1)
            .collect();
        assert_eq!(singletons.len(), 2);
        for t in singletons {
            assert_eq!(t.numerator, 0);
            assert!(t.flagged_nonpositive);
            assert!(t.levi.excluded());
        }
        assert_eq!(bc.kappa, rat(1, 8));
    }

    #[test]
    fn exponent_a_follows_the_height_branch() {
        assert_eq!(exponent_a(&rs(TypeLabel::A, 1)), 2);
        assert_eq!(exponent_a(&rs(TypeLabel::C, 2)), 7);
        assert_eq!(exponent_a(&rs(TypeLabel::G, 2)), 11);
        assert_eq!(exponent_a(&rs(TypeLabel::A, 3)), 10);
        // r_G + 1 exactly when h_G = 1, which happens only for A_1.
        for n in 1..=5 {
            let r = rs(TypeLabel::A, n);
            let is_h1 = r.height_of_phi() == 1;
            assert_eq!(is_h1, n == 1);
            assert_eq!(exponent_a(&r) == r.rank() as i64 + 1, is_h1);
        }
    }

    #[test]
    fn a_gamma_sigma_branches() {
        assert_eq!(a_gamma_sigma(3, 2, 4), 10); // h·sd + s = 3 + 2 doubled
        assert_eq!(a_gamma_sigma(1, 14, 6), 14); // h = 1 ignores s
        assert_eq!(a_gamma_sigma(3, 0, 7), 7); // sd = 0 leaves s
        assert_eq!(a_gamma_sigma(5, 3, 0), 15);
    }

    #[test]
    fn main_bound_rhs_reduces_to_the_polynomial_factor_under_cancellation() {
        let a1 = rs(TypeLabel::A, 1);
        let q = 5u64;
        let lq = (q as f64).ln();
        for r2 in [2i64, 4, 8] {
            // Choose vol so the q-power and Weyl factors cancel exactly.
            let a_gs = 0.0; // h = 1, sd = 0
            let fixed = 2.0 * (a1.weyl_order() as f64).ln() / lq
                + a1.dim() as f64
                + 1.0 * (a_gs + 1.0);
            let f = main_bound_rhs(&a1, q, r2, 0, -2.0 * fixed, 0.0);
            let expected = (r2 as f64 / 2.0 + 4.0).ln() / lq;
            assert!((f - expected).abs() < 1e-12, "r2 = {r2}");
        }
    }

    #[test]
    fn main_bound_rhs_is_finite_on_sl2_grids_and_decays_with_real_slopes() {
        let a1 = rs(TypeLabel::A, 1);
        for r2 in 0..=12 {
            for sd2 in 0..=6 {
                let f = main_bound_rhs(&a1, 5, r2, sd2, -((r2 / 2).max(0) as f64), 0.0);
                assert!(f.is_finite());
            }
        }
        // With the volume exponent growing like (dim G − dim L)(s − 1) for
        // the torus Levi of C_2, the assembled bound eventually decreases
        // in r at fixed γ.
        let c2 = rs(TypeLabel::C, 2);
        let dim_drop = (c2.dim() - 2) as f64; // torus Levi
        let f_at = |r2: i64| {
            let s = r2 as f64 / 4.0; // s = r/2
            main_bound_rhs(&c2, 5, r2, 2, -dim_drop * (s - 1.0).max(0.0), 0.0)
        };
        let tail: Vec<f64> = (10..30).map(|k| f_at(2 * k)).collect();
        for w in tail.windows(2) {
            assert!(w[1] < w[0], "bound shape must decay for large depth");
        }
    }
}
