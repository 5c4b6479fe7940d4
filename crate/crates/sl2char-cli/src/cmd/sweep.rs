//! The bound-verification sweep: every admissible parameter against every
//! gallery representative, one CSV row each.

use anyhow::Context;
use sl2char_core::characters::{
    character_abs, enumerate_parameters, CharacterValue, ParamKind, SupercuspidalParameter,
    ValueKind,
};
use sl2char_core::exact::{
    fmt_half, fmt_magnitude, fmt_qsqrt, fmt_rat, q_pow, rat, Magnitude, QSqrt, Rat,
};
use sl2char_core::padic::FieldContext;
use sl2char_core::Error;

use crate::config::SweepConfig;
use crate::gamma::{sweep_gallery, GammaSample};
use crate::report::{CsvOut, SWEEP_COLUMNS};

#[derive(Debug, Default)]
pub struct SweepSummary {
    pub rows: u64,
    pub failures: u64,
    pub zero_rows: u64,
    pub substituted: u64,
    pub worst_margin: f64,
}

/// Run the sweep, stream the CSV, and return the summary. The caller turns
/// `failures > 0` into the exit status.
pub fn run(config: &SweepConfig) -> anyhow::Result<SweepSummary> {
    config.validate()?;
    let mut out = CsvOut::create(config.out.as_deref(), SWEEP_COLUMNS)?;
    let mut summary = SweepSummary { worst_margin: f64::INFINITY, ..Default::default() };
    for &p in &config.ps {
        let ctx = FieldContext::new(p, config.effective_prec())
            .with_context(|| format!("building the p = {p} context"))?;
        let params = enumerate_parameters(&ctx, config.r2_max)
            .with_context(|| format!("enumerating parameters for p = {p}"))?;
        let gallery = sweep_gallery(&ctx, &config.classes, config.gd2_max, config.seed)?;
        for param in &params {
            for g in &gallery {
                let (cv, substituted) =
                    evaluate_with_substitution(param, g, &ctx).with_context(|| {
                        format!(
                            "evaluating ({}, {}, r = {}, {}) at γ = {}",
                            param.kind(),
                            crate::config::class_code(&param.class()),
                            fmt_half(param.r2()),
                            param.sign(),
                            g.id
                        )
                    })?;
                let row = format_row(param, g, &cv, &ctx, config.tol);
                out.line(&row.text)?;
                summary.rows += 1;
                if !row.pass {
                    summary.failures += 1;
                }
                if cv.kind == ValueKind::Zero {
                    summary.zero_rows += 1;
                }
                if substituted {
                    summary.substituted += 1;
                }
                if row.margin < summary.worst_margin {
                    summary.worst_margin = row.margin;
                }
            }
        }
    }
    out.finish()?;
    Ok(summary)
}

/// The exact evaluation, with the certified fallback for γ presented in the
/// other unramified class at shallow depth: the shallow-case bound (2, or
/// (1 + D^{1/2})/2 for the exceptional kind) is sound whether or not such a
/// γ is a rational conjugate of the parameter torus.
fn evaluate_with_substitution(
    param: &SupercuspidalParameter,
    g: &GammaSample,
    ctx: &FieldContext,
) -> anyhow::Result<(CharacterValue, bool)> {
    match character_abs(param, &g.element, ctx) {
        Ok(cv) => Ok((cv, false)),
        Err(Error::CrossClassAmbiguous(_)) => {
            let q = ctx.q();
            let dsqrt = QSqrt::from_q_half_pow(q, rat(1, 1), -g.dd.d_plus2);
            let bound = match param.kind() {
                ParamKind::Exceptional => {
                    QSqrt::from_int(q, 1).add(&dsqrt).scale(rat(1, 2))
                }
                _ => QSqrt::from_int(q, 2),
            };
            let normalized = Magnitude::Exact(bound);
            let raw = normalized.div_exact(&dsqrt);
            Ok((
                CharacterValue { kind: ValueKind::UpperBound, normalized, raw, branches: None },
                true,
            ))
        }
        Err(e) => Err(e.into()),
    }
}

struct FormattedRow {
    text: String,
    pass: bool,
    margin: f64,
}

fn format_row(
    param: &SupercuspidalParameter,
    g: &GammaSample,
    cv: &CharacterValue,
    ctx: &FieldContext,
    tol: f64,
) -> FormattedRow {
    let q = ctx.q();
    let disc: Rat = q_pow(q, -g.dd.d_plus2);
    let dsqrt = QSqrt::from_q_half_pow(q, rat(1, 1), -g.dd.d_plus2);
    let rhs = QSqrt::from_int(q, 2).add(&dsqrt);
    let deg = param.formal_degree();
    let lhs_f = cv.normalized.to_f64();
    let rhs_f = rhs.to_f64();
    let pass = lhs_f <= rhs_f + tol;
    let ratio = cv.raw.div_exact(&deg);
    let text = format!(
        "{p},{theta},{eta},{kind},{sign},{r},{gid},{gclass},{d},{dm},{dp},{sd},{disc},{vk},{nv},{deg},{lhs},{rhs},{ratio},{pass}",
        p = ctx.p(),
        theta = param.theta(),
        eta = param.eta(),
        kind = param.kind(),
        sign = param.sign(),
        r = fmt_half(param.r2()),
        gid = g.id,
        gclass = g.class_code,
        d = fmt_half(g.dd.d2),
        dm = fmt_half(g.dd.d_minus2),
        dp = fmt_half(g.dd.d_plus2),
        sd = fmt_half(g.dd.sd2),
        disc = fmt_rat(&disc),
        vk = cv.kind,
        nv = fmt_magnitude(&cv.normalized),
        deg = fmt_qsqrt(&deg),
        lhs = fmt_magnitude(&cv.normalized),
        rhs = fmt_qsqrt(&rhs),
        ratio = fmt_magnitude(&ratio),
        pass = pass,
    );
    FormattedRow { text, pass, margin: rhs_f - lhs_f }
}

impl SweepSummary {
    pub fn print(&self, ps: &[u64]) {
        let ps: Vec<String> = ps.iter().map(u64::to_string).collect();
        println!(
            "SWEEP p=[{}] rows={} pass={} fail={} substituted_bounds={} zero_rows={} worst_margin={}",
            ps.join(","),
            self.rows,
            self.rows - self.failures,
            self.failures,
            self.substituted,
            self.zero_rows,
            sl2char_core::exact::fmt_f64_sig12(self.worst_margin),
        );
    }
}
