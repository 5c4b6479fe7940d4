//! Finite quotients of norm-one groups in canonical residue coordinates,
//! with an invariant-factor presentation and discrete logarithms.

use std::collections::BTreeMap;

use crate::err::Error;
use crate::padic::{mul_mod, FieldContext, QuadExtScalar, ThetaLabel};
use crate::tori;
use crate::Result;

/// Canonical coordinates for one class of the quotient.
///
/// The quotient Q_r = k¹_θ/(k¹_θ)_{r⁺} is finite: a norm-one element is
/// pinned down modulo the deep subgroup by finitely many digits of its
/// coordinates. For the unramified extension both coordinates matter; for a
/// ramified extension the a-coordinate is recoverable from b up to the
/// central sign, so only the sign and b are stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassCoord {
    /// Point (a, b) mod p^digits on the circle a² − εb² = 1.
    Circle { a: u64, b: u64 },
    /// Central sign (`plus` = toward +1) and b mod p^digits, with
    /// a = ±√(1 + θb²) on the branch ≡ 1 mod p.
    Ramified { plus: bool, b: u64 },
}

/// The quotient Q_r = k¹_θ/(k¹_θ)_{r⁺} as an explicit finite abelian group:
/// a sorted list of class coordinates, the group law in coordinates, an
/// invariant-factor generating set, and the discrete logarithm of every
/// class with respect to it. Construction is the only step that touches the
/// field context; the finished table is plain integer data and can be shared
/// read-only across threads.
#[derive(Debug)]
pub struct TorusQuotient {
    theta: ThetaLabel,
    r2: i64,
    digits: u32,
    p: u64,
    eps: u64,
    /// p^digits (1 when digits = 0).
    modulus: u64,
    coords: Vec<ClassCoord>,
    index: BTreeMap<ClassCoord, usize>,
    /// For ramified quotients, a_of_b[b] = √(1 + θb²) mod p^digits on the
    /// branch ≡ 1 mod p; empty for unramified quotients.
    a_of_b: Vec<u64>,
    identity: usize,
    gen_idx: Vec<usize>,
    gen_ord: Vec<u64>,
    dlog: Vec<Vec<u64>>,
    shell: Vec<usize>,
}

impl TorusQuotient {
    /// Number of coordinate digits that separate classes: the kernel of the
    /// projection is exactly the elements of depth > r.
    fn digit_count(theta: ThetaLabel, r2: i64) -> Result<u32> {
        if r2 < 0 {
            return Err(Error::DomainError(
                "quotient depth must be ≥ 0".into(),
            ));
        }
        let d = if theta.is_ramified() {
            // Depth > r first bites the b-coordinate at v(b) ≥ ⌈r⌉, giving
            // ⌈r⌉ digits of b next to the central sign; at r = 0 only the
            // sign survives.
            (r2 + 1) / 2
        } else {
            // Depth > r means γ ≡ 1 mod p^(⌊r⌋+1).
            r2 / 2 + 1
        };
        Ok(d as u32)
    }

    pub fn build(ctx: &FieldContext, theta: ThetaLabel, r2: i64) -> Result<Self> {
        let digits = Self::digit_count(theta, r2)?;
        if digits + 2 > ctx.prec() {
            return Err(Error::PrecisionLoss(format!(
                "quotient at depth {} needs more than the working precision {}",
                crate::exact::fmt_half(r2),
                ctx.prec()
            )));
        }
        let p = ctx.p();
        let eps = ctx.eps();
        let modulus = if digits == 0 { 1 } else { ctx.pow(digits) };

        let (coords, a_of_b) = if theta.is_ramified() {
            let mut a_of_b = Vec::with_capacity(modulus as usize);
            for b0 in 0..modulus {
                if digits == 0 {
                    a_of_b.push(0);
                    continue;
                }
                let b = ctx.from_i64(b0 as i64);
                let u = ctx.add(
                    &ctx.one(),
                    &ctx.mul(&theta.scalar(ctx), &ctx.mul(&b, &b)),
                );
                let s = ctx.sqrt(&u)?.ok_or_else(|| {
                    Error::InvariantViolation("1 + θb² ≡ 1 mod p must be a square".into())
                })?;
                let s = if s.residue(ctx, 1)? == 1 { s } else { ctx.neg(&s) };
                a_of_b.push(s.residue(ctx, digits)?);
            }
            let mut coords = Vec::with_capacity(2 * modulus as usize);
            for plus in [false, true] {
                for b in 0..modulus {
                    coords.push(ClassCoord::Ramified { plus, b });
                }
            }
            coords.sort_unstable();
            (coords, a_of_b)
        } else {
            let coords = tori::circle_points(ctx, digits)
                .into_iter()
                .map(|(a, b)| ClassCoord::Circle { a, b })
                .collect::<Vec<_>>();
            (coords, Vec::new())
        };

        let index: BTreeMap<ClassCoord, usize> =
            coords.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let id_coord = if theta.is_ramified() {
            ClassCoord::Ramified { plus: true, b: 0 }
        } else {
            ClassCoord::Circle { a: 1 % modulus, b: 0 }
        };
        let identity = *index
            .get(&id_coord)
            .ok_or_else(|| Error::InvariantViolation("identity class missing".into()))?;

        let mul = |i: usize, j: usize| -> usize {
            let c = mul_coord(coords[i], coords[j], eps, modulus, &a_of_b);
            index[&c]
        };
        let (gen_idx, gen_ord, dlog) = invariant_factors(coords.len(), identity, &mul)?;

        // Image of the depth-r subgroup (k¹_θ)_r inside the quotient. At a
        // filtration break it is a proper nontrivial subgroup; between breaks
        // it collapses to the identity class, so no character has exact depth
        // there.
        let shell_member: Box<dyn Fn(ClassCoord) -> bool> = if theta.is_ramified() {
            if r2 == 0 {
                Box::new(|_| true)
            } else if r2 % 2 == 1 {
                let pm = p.pow(((r2 - 1) / 2) as u32);
                Box::new(move |c| match c {
                    ClassCoord::Ramified { plus, b } => plus && b % pm == 0,
                    ClassCoord::Circle { .. } => unreachable!(),
                })
            } else {
                Box::new(move |c| c == id_coord)
            }
        } else if r2 == 0 {
            Box::new(|_| true)
        } else if r2 % 2 == 0 {
            let pm = p.pow((r2 / 2) as u32);
            Box::new(move |c| match c {
                ClassCoord::Circle { a, b } => a % pm == 1 % pm && b % pm == 0,
                ClassCoord::Ramified { .. } => unreachable!(),
            })
        } else {
            Box::new(move |c| c == id_coord)
        };
        let shell: Vec<usize> = (0..coords.len())
            .filter(|&i| shell_member(coords[i]))
            .collect();

        Ok(TorusQuotient {
            theta,
            r2,
            digits,
            p,
            eps,
            modulus,
            coords,
            index,
            a_of_b,
            identity,
            gen_idx,
            gen_ord,
            dlog,
            shell,
        })
    }

    pub fn theta(&self) -> ThetaLabel {
        self.theta
    }

    pub fn r2(&self) -> i64 {
        self.r2
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn order(&self) -> u64 {
        self.coords.len() as u64
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn coord(&self, i: usize) -> ClassCoord {
        self.coords[i]
    }

    /// Invariant-factor orders m_1 ≥ m_2 ≥ …, each dividing the previous.
    pub fn generator_orders(&self) -> &[u64] {
        &self.gen_ord
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_idx
    }

    /// Exponent tuple of class i over the invariant-factor generators.
    pub fn dlog(&self, i: usize) -> &[u64] {
        &self.dlog[i]
    }

    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        let c = mul_coord(self.coords[i], self.coords[j], self.eps, self.modulus, &self.a_of_b);
        self.index[&c]
    }

    /// Inverse through the coordinate form of conjugation: norm-one inverses
    /// are conjugates, so (a, b) ↦ (a, −b) and the central sign is kept.
    pub fn inv_idx(&self, i: usize) -> usize {
        let c = match self.coords[i] {
            ClassCoord::Circle { a, b } => {
                ClassCoord::Circle { a, b: (self.modulus - b) % self.modulus }
            }
            ClassCoord::Ramified { plus, b } => {
                ClassCoord::Ramified { plus, b: (self.modulus - b) % self.modulus }
            }
        };
        self.index[&c]
    }

    pub fn pow_idx(&self, i: usize, e: u64) -> usize {
        pow_by(&|a, b| self.mul_idx(a, b), i, e, self.identity)
    }

    /// Order of a single class, from its exponent tuple.
    pub fn class_order(&self, i: usize) -> u64 {
        self.dlog[i]
            .iter()
            .zip(&self.gen_ord)
            .map(|(&e, &m)| m / gcd(e, m))
            .fold(1, lcm)
    }

    /// Classes in the image of the depth-r subgroup (sorted).
    pub fn shell_indices(&self) -> &[usize] {
        &self.shell
    }

    /// Class of the shell element with residue-field coordinate x, i.e. the
    /// norm-one element 1 + x·ϖ_θ^{2r} + … (x = 0 giving the identity
    /// class). Only ramified quotients at half-odd depth expose this
    /// parametrization.
    pub fn shell_class_index(&self, x: u64) -> Result<usize> {
        if !self.theta.is_ramified() || self.r2 % 2 == 0 || self.r2 < 1 {
            return Err(Error::DomainError(
                "the residue-field shell parametrization needs a ramified quotient at half-odd depth".into(),
            ));
        }
        let pm = self.p.pow(((self.r2 - 1) / 2) as u32);
        let b = mul_mod(x % self.p, pm, self.modulus);
        let c = ClassCoord::Ramified { plus: true, b };
        Ok(self.index[&c])
    }

    /// Project a norm-one element onto its class index. The projection is a
    /// surjective homomorphism whose kernel is exactly the elements of depth
    /// > r (they reduce to the identity coordinates).
    pub fn project(&self, gamma: &QuadExtScalar, ctx: &FieldContext) -> Result<usize> {
        if gamma.theta != self.theta {
            return Err(Error::DomainError(format!(
                "element lives in k(√{}) but the quotient is over k(√{})",
                gamma.theta, self.theta
            )));
        }
        if ctx.p() != self.p {
            return Err(Error::InvalidContext(
                "quotient was built over a different residue field".into(),
            ));
        }
        let c = if self.theta.is_ramified() {
            let a1 = gamma.a.residue(ctx, 1)?;
            let plus = match a1 {
                1 => true,
                x if x == self.p - 1 => false,
                _ => {
                    return Err(Error::DomainError(
                        "a norm-one element of a ramified extension is ≡ ±1 mod p".into(),
                    ))
                }
            };
            let b = if self.digits == 0 { 0 } else { gamma.b.residue(ctx, self.digits)? };
            ClassCoord::Ramified { plus, b }
        } else {
            ClassCoord::Circle {
                a: gamma.a.residue(ctx, self.digits)?,
                b: gamma.b.residue(ctx, self.digits)?,
            }
        };
        self.index.get(&c).copied().ok_or_else(|| {
            Error::InvariantViolation(
                "residue coordinates of a norm-one element fell outside the enumerated classes"
                    .into(),
            )
        })
    }

    /// Exact norm-one representative of class i.
    pub fn representative(&self, i: usize, ctx: &FieldContext) -> Result<QuadExtScalar> {
        match self.coords[i] {
            ClassCoord::Circle { a, b } => tori::lift_circle_point(ctx, a, b, self.digits),
            ClassCoord::Ramified { plus, b } => {
                tori::lift_ramified_point(ctx, self.theta, if plus { 1 } else { -1 }, b)
            }
        }
    }
}

fn mul_coord(x: ClassCoord, y: ClassCoord, eps: u64, m: u64, a_of_b: &[u64]) -> ClassCoord {
    match (x, y) {
        (ClassCoord::Circle { a: a1, b: b1 }, ClassCoord::Circle { a: a2, b: b2 }) => {
            let a = (mul_mod(a1, a2, m) + mul_mod(eps % m, mul_mod(b1, b2, m), m)) % m;
            let b = (mul_mod(a1, b2, m) + mul_mod(b1, a2, m)) % m;
            ClassCoord::Circle { a, b }
        }
        (ClassCoord::Ramified { plus: s1, b: b1 }, ClassCoord::Ramified { plus: s2, b: b2 }) => {
            // The true a-coordinate of (s, b) is ±a_of_b[b], so the product
            // (a1 + b1√θ)(a2 + b2√θ) has b-coordinate s1·a_of_b[b1]·b2 +
            // s2·b1·a_of_b[b2]; its a-part is ≡ s1s2 mod p (θb1b2 ≡ 0), so
            // the central signs multiply.
            let (a1, a2) = (a_of_b[b1 as usize], a_of_b[b2 as usize]);
            let t1 = mul_mod(a1, b2, m);
            let t1 = if s1 { t1 } else { (m - t1) % m };
            let t2 = mul_mod(b1, a2, m);
            let t2 = if s2 { t2 } else { (m - t2) % m };
            ClassCoord::Ramified { plus: s1 == s2, b: (t1 + t2) % m }
        }
        _ => unreachable!("mixed coordinate kinds in one quotient"),
    }
}

fn pow_by(mul: &dyn Fn(usize, usize) -> usize, x: usize, mut e: u64, id: usize) -> usize {
    let mut base = x;
    let mut acc = id;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Invariant-factor presentation of a finite abelian group given by its
/// multiplication law on indices 0..n.
///
/// Repeatedly picks an element of maximal order in G/S (S = span of the
/// generators found so far), corrects it to have the same order in G — the
/// exponent tuple of its m-th power over the previous generators is
/// divisible by m precisely because earlier generators were chosen of
/// maximal order — and extends the discrete-logarithm table. The resulting
/// orders form a divisibility chain m_1 ≥ m_2 ≥ … with m_{i+1} | m_i. The
/// final pass re-multiplies every exponent tuple out and checks it
/// reproduces its element, so the returned map is a verified bijection
/// Z/m_1 × … × Z/m_k → G.
fn invariant_factors(
    n: usize,
    id: usize,
    mul: &dyn Fn(usize, usize) -> usize,
) -> Result<(Vec<usize>, Vec<u64>, Vec<Vec<u64>>)> {
    let mut dlog: Vec<Option<Vec<u64>>> = vec![None; n];
    dlog[id] = Some(Vec::new());
    let mut members: Vec<usize> = vec![id];
    let mut gen_idx: Vec<usize> = Vec::new();
    let mut gen_ord: Vec<u64> = Vec::new();

    while members.len() < n {
        let quotient_size = (n / members.len()) as u64;
        let mut best: Option<(u64, usize, usize)> = None;
        for x in 0..n {
            if dlog[x].is_some() {
                continue;
            }
            let mut y = x;
            let mut k = 1u64;
            while dlog[y].is_none() {
                y = mul(y, x);
                k += 1;
            }
            if best.as_ref().map_or(true, |&(bk, _, _)| k > bk) {
                best = Some((k, x, y));
            }
            if k == quotient_size {
                break;
            }
        }
        let (m, x, xm) = best.expect("a class outside the span exists");

        let c = dlog[xm].clone().expect("x^m lies in the span");
        let mut g = x;
        for (j, &cj) in c.iter().enumerate() {
            if cj % m != 0 {
                return Err(Error::InvariantViolation(
                    "invariant-factor reduction: exponent not divisible by the coset order".into(),
                ));
            }
            let oj = gen_ord[j];
            let e = (oj - (cj / m) % oj) % oj;
            g = mul(g, pow_by(mul, gen_idx[j], e, id));
        }

        let mut new_dlog: Vec<Option<Vec<u64>>> = vec![None; n];
        let mut new_members = Vec::with_capacity(members.len() * m as usize);
        let mut gp = id;
        for e in 0..m {
            for &s in &members {
                let elem = mul(s, gp);
                if new_dlog[elem].is_some() {
                    return Err(Error::InvariantViolation(
                        "invariant-factor reduction: generator span is not direct".into(),
                    ));
                }
                let mut v = dlog[s].clone().expect("member of the span");
                v.push(e);
                new_dlog[elem] = Some(v);
                new_members.push(elem);
            }
            gp = mul(gp, g);
        }
        dlog = new_dlog;
        members = new_members;
        gen_idx.push(g);
        gen_ord.push(m);
    }

    let dlog: Vec<Vec<u64>> = dlog
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::InvariantViolation("class missed by the span".into())))
        .collect::<Result<_>>()?;

    // Bijectivity re-verification: multiply every tuple back out.
    for (i, exps) in dlog.iter().enumerate() {
        let mut acc = id;
        for (j, &e) in exps.iter().enumerate() {
            acc = mul(acc, pow_by(mul, gen_idx[j], e, id));
        }
        if acc != i {
            return Err(Error::InvariantViolation(
                "discrete-logarithm table failed re-verification".into(),
            ));
        }
    }

    Ok((gen_idx, gen_ord, dlog))
}
