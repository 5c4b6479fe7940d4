//! Deterministic galleries of torus representatives for the sweep commands.

use anyhow::Context;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sl2char_core::exact::fmt_half;
use sl2char_core::padic::FieldContext;
use sl2char_core::tori::{
    legal_classes, random_element, random_split_noncompact, DepthData, TorusClass, TorusElement,
};

use crate::config::{class_code, ClassFilter};

/// One sampled torus representative with its precomputed depth data and a
/// stable id (`<class code>:d<depth>:<i>`, suffix `n` for the negated
/// partner, `w<v>` instead of `d<depth>` for non-compact split eigenvalues
/// of valuation v).
pub struct GammaSample {
    pub id: String,
    pub class_code: String,
    pub element: TorusElement,
    pub dd: DepthData,
}

/// Valuations of the non-compact split eigenvalues every gallery includes.
pub const NONCOMPACT_VALS: [i64; 2] = [-1, -2];

/// One representative per (class, exact depth) cell up to `gd2_max`
/// half-units, each with its negated partner when that changes the depth
/// pattern, plus non-compact split eigenvalues. Order and content are fully
/// determined by (p, filter, gd2_max, seed).
pub fn sweep_gallery(
    ctx: &FieldContext,
    filter: &ClassFilter,
    gd2_max: i64,
    seed: u64,
) -> anyhow::Result<Vec<GammaSample>> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for class in legal_classes(ctx.p()) {
        let code = class_code(&class);
        if !filter.admits(&code) {
            continue;
        }
        let step = match class {
            TorusClass::Elliptic { theta, .. } if theta.is_ramified() => (1, 2),
            _ => (0, 2),
        };
        let mut d2 = step.0;
        while d2 <= gd2_max {
            push_with_negation(ctx, &mut out, &code, d2, 0, || {
                random_element(ctx, &class, d2, &mut rng)
            })?;
            d2 += step.1;
        }
        if class.is_split() {
            for v in NONCOMPACT_VALS {
                let g = random_split_noncompact(ctx, v, &mut rng)
                    .with_context(|| format!("sampling split eigenvalue of valuation {v}"))?;
                let dd = g.depth_data(ctx).context("depth of non-compact sample")?;
                out.push(GammaSample {
                    id: format!("{code}:w{v}:0"),
                    class_code: code.clone(),
                    element: g,
                    dd,
                });
            }
        }
    }
    Ok(out)
}

fn push_with_negation(
    ctx: &FieldContext,
    out: &mut Vec<GammaSample>,
    code: &str,
    d2: i64,
    idx: usize,
    sample: impl FnOnce() -> sl2char_core::Result<TorusElement>,
) -> anyhow::Result<()> {
    let g = sample().with_context(|| format!("sampling {code} at depth {}", fmt_half(d2)))?;
    let dd = g.depth_data(ctx).with_context(|| format!("depth of {code} sample"))?;
    if d2 > 0 {
        // The negated partner has the depth pattern mirrored toward −1 and
        // exercises the branch of every case formula that looks at γ·(−1).
        let n = g.negated(ctx);
        let ndd = n.depth_data(ctx).context("depth of negated sample")?;
        out.push(GammaSample {
            id: format!("{code}:d{}:{idx}", fmt_half(d2)),
            class_code: code.to_string(),
            element: g,
            dd,
        });
        out.push(GammaSample {
            id: format!("{code}:d{}:{idx}n", fmt_half(d2)),
            class_code: code.to_string(),
            element: n,
            dd: ndd,
        });
    } else {
        out.push(GammaSample {
            id: format!("{code}:d{}:{idx}", fmt_half(d2)),
            class_code: code.to_string(),
            element: g,
            dd,
        });
    }
    Ok(())
}

/// The fixed γ for the asymptotics command: one deterministic sample of the
/// requested class and depth.
pub fn fixed_gamma(
    ctx: &FieldContext,
    class: &TorusClass,
    d2: i64,
    seed: u64,
) -> anyhow::Result<GammaSample> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let g = random_element(ctx, class, d2, &mut rng)
        .with_context(|| format!("sampling {} at depth {}", class_code(class), fmt_half(d2)))?;
    let dd = g.depth_data(ctx).context("depth of the fixed γ")?;
    Ok(GammaSample {
        id: format!("{}:d{}:0", class_code(class), fmt_half(d2)),
        class_code: class_code(class),
        element: g,
        dd,
    })
}
