//! Constant table: one row per split simple type with the derived bound
//! exponents.

use anyhow::{anyhow, bail};
use sl2char_core::exact::fmt_rat;
use sl2char_core::rootdata::{build_root_system, kappa, TypeLabel};

use crate::config::SweepConfig;
use crate::report::{CsvOut, KAPPA_COLUMNS};

/// Every type the crate ships constants for, in table order.
pub const SHIPPED_TYPES: [&str; 22] = [
    "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4",
    "D5", "D6", "E6", "E7", "E8", "F4", "G2",
];

pub struct KappaTableSummary {
    pub rows: u64,
    pub skipped: Vec<String>,
}

pub fn run(config: &SweepConfig) -> anyhow::Result<KappaTableSummary> {
    config.validate()?;
    let tokens: Vec<String> = match &config.types {
        None => SHIPPED_TYPES.iter().map(|s| s.to_string()).collect(),
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect(),
    };
    let mut out = CsvOut::create(config.out.as_deref(), KAPPA_COLUMNS)?;
    let mut summary = KappaTableSummary { rows: 0, skipped: Vec::new() };
    for token in tokens {
        match table_row(&token) {
            Ok(fields) => {
                out.row(&fields.iter().map(String::as_str).collect::<Vec<_>>())?;
                summary.rows += 1;
            }
            Err(e) => {
                eprintln!("notice: skipped {token}: {e}");
                summary.skipped.push(token);
            }
        }
    }
    out.finish()?;
    Ok(summary)
}

/// `A1`/`a_1` → (TypeLabel::A, 1).
pub fn parse_type_token(token: &str) -> anyhow::Result<(TypeLabel, usize)> {
    let cleaned: String = token.chars().filter(|c| *c != '_').collect();
    let mut chars = cleaned.chars();
    let letter = chars.next().ok_or_else(|| anyhow!("empty type token"))?;
    let label: TypeLabel = letter.to_string().parse().map_err(|e| anyhow!("{e}"))?;
    let rank: usize = chars.as_str().parse().map_err(|_| {
        anyhow!("'{token}' needs a numeric rank after the series letter (like A1 or G2)")
    })?;
    Ok((label, rank))
}

fn table_row(token: &str) -> anyhow::Result<Vec<String>> {
    let (label, rank) = parse_type_token(token)?;
    let rs = build_root_system(label, rank).map_err(|e| anyhow!("{e}"))?;
    // These groups are the split simple (simply-connected) ones: the center
    // is finite, so its dimension is zero.
    let bc = kappa(&rs, 0).map_err(|e| anyhow!("{e}"))?;
    if *bc.kappa.numer() <= 0 {
        bail!("κ is not positive for {token}; refusing to emit a vacuous bound row");
    }
    let flags: Vec<String> = bc
        .levi_terms
        .iter()
        .filter(|t| t.flagged_nonpositive)
        .map(|t| {
            let subset: Vec<String> =
                t.levi.subset().iter().map(usize::to_string).collect();
            format!("nonpositive[{}]", subset.join(" "))
        })
        .collect();
    Ok(vec![
        format!("{}{}", bc.label, bc.rank),
        bc.rank.to_string(),
        bc.dim.to_string(),
        bc.pos_root_count.to_string(),
        bc.h_g.to_string(),
        bc.rank.to_string(),
        fmt_rat(&bc.kappa),
        bc.exponent_a.to_string(),
        flags.join(";"),
    ])
}
