//! Run configuration: flat key=value files, command-line overrides, and the
//! validation policy (prime size, precision budget, class filters).

use std::collections::BTreeSet;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use sl2char_core::padic::ThetaLabel;
use sl2char_core::tori::{legal_classes, Eta, TorusClass};

/// Every key the config file understands, in canonical render order.
const KNOWN_KEYS: [&str; 14] = [
    "p",
    "prec",
    "r_max",
    "gamma_depth_max",
    "classes",
    "seed",
    "tol",
    "out",
    "c1_log_q",
    "gamma_class",
    "gamma_depth",
    "types",
    "samples",
    "fault",
];

/// Fully-resolved run configuration shared by all commands. Depth-like
/// fields (`r2_max`, `gd2_max`, `gamma_d2`) are in half-units: the stored
/// integer is twice the depth, so ramified half-odd depths stay integral.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub ps: Vec<u64>,
    /// Working precision; `None` means "the policy minimum".
    pub prec: Option<u32>,
    pub r2_max: i64,
    pub gd2_max: i64,
    pub classes: ClassFilter,
    pub seed: u64,
    pub tol: f64,
    pub out: Option<PathBuf>,
    pub c1_log_q: f64,
    /// Torus class of the fixed γ (asymptotics).
    pub gamma_class: String,
    /// Depth of the fixed γ in half-units (asymptotics).
    pub gamma_d2: i64,
    /// Root-system types for the constant table; `None` = the shipped list.
    pub types: Option<String>,
    /// Sample budget for the randomized check suites.
    pub samples: u64,
    /// Fault injection for the check suites (`wrong-legendre`).
    pub fault: Option<String>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            ps: vec![5, 7],
            prec: None,
            r2_max: 6,
            gd2_max: 8,
            classes: ClassFilter::All,
            seed: 17,
            tol: 1e-9,
            out: None,
            c1_log_q: 0.0,
            gamma_class: "eps.1".to_string(),
            gamma_d2: 2,
            types: None,
            samples: 400,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClassFilter {
    All,
    Subset(Vec<String>),
}

impl ClassFilter {
    pub fn admits(&self, code: &str) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::Subset(codes) => codes.iter().any(|c| c == code),
        }
    }

    fn render(&self) -> String {
        match self {
            ClassFilter::All => "all".to_string(),
            ClassFilter::Subset(codes) => codes.join(","),
        }
    }

    fn parse(s: &str) -> anyhow::Result<Self> {
        if s == "all" {
            return Ok(ClassFilter::All);
        }
        let codes: Vec<String> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        if codes.is_empty() {
            bail!("class filter is empty (use 'all' or a comma list of class codes)");
        }
        for c in &codes {
            if parse_class_code(c, 7).is_err() && parse_class_code(c, 5).is_err() {
                bail!("unknown torus class code '{c}' (known: {})", known_codes().join(", "));
            }
        }
        Ok(ClassFilter::Subset(codes))
    }
}

/// CSV/flag-safe torus class code: `eps.1`, `eps.pi`, `pi.1`, `pi.eps`,
/// `epspi.1`, `epspi.eps`, or `split`. (The pretty `T[θ,η]` rendering has a
/// comma in it, so reports use these codes instead.)
pub fn class_code(class: &TorusClass) -> String {
    match class {
        TorusClass::Split => "split".to_string(),
        TorusClass::Elliptic { theta, eta } => format!("{theta}.{eta}"),
    }
}

pub fn known_codes() -> Vec<String> {
    let mut v: Vec<String> = legal_classes(7).iter().map(class_code).collect();
    v.sort();
    v
}

/// Inverse of [`class_code`], validated against the classes that exist for
/// this p.
pub fn parse_class_code(code: &str, p: u64) -> anyhow::Result<TorusClass> {
    if code == "split" {
        return Ok(TorusClass::Split);
    }
    let (t, e) = code
        .split_once('.')
        .ok_or_else(|| anyhow!("malformed torus class code '{code}'"))?;
    let theta: ThetaLabel = t.parse().map_err(|e| anyhow!("{e}"))?;
    let eta: Eta = e.parse().map_err(|e| anyhow!("{e}"))?;
    TorusClass::elliptic(theta, eta, p)
        .map_err(|e| anyhow!("class '{code}' does not exist for p = {p}: {e}"))
}

impl SweepConfig {
    /// Minimum working precision for the configured depth ranges: enough
    /// digits to build every filtration quotient and sample every γ, plus a
    /// fixed guard band — N ≥ ⌈r_max⌉ + ⌈d_max⌉ + 4.
    pub fn policy_min_prec(&self) -> u32 {
        let ceil_units = |x2: i64| -> u32 { ((x2.max(0) + 1) / 2) as u32 };
        ceil_units(self.r2_max) + ceil_units(self.gd2_max.max(self.gamma_d2)) + 4
    }

    /// The precision actually used for field contexts.
    pub fn effective_prec(&self) -> u32 {
        self.prec.unwrap_or_else(|| self.policy_min_prec())
    }

    /// Validate cross-field invariants. Every command calls this after the
    /// file/flag merge.
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.ps.is_empty() {
            bail!("at least one prime is required");
        }
        for &p in &self.ps {
            if !sl2char_core::padic::is_prime(p) {
                bail!("p = {p} is not prime");
            }
            if p < 5 {
                bail!(
                    "p = {p} is too small: the case formulas assume p ≥ 2e+3 \
                     (the base field is unramified over Q_p, so p must be at least 5)"
                );
            }
        }
        if self.r2_max < 0 {
            bail!("r_max must be non-negative (it is a doubled depth)");
        }
        if self.gd2_max < 0 {
            bail!("gamma_depth_max must be non-negative (it is a doubled depth)");
        }
        if self.gamma_d2 < 0 {
            bail!("gamma_depth must be non-negative (it is a doubled depth)");
        }
        if !(self.tol > 0.0) {
            bail!("tol must be positive");
        }
        if self.samples == 0 {
            bail!("samples must be positive");
        }
        let min = self.policy_min_prec();
        if let Some(n) = self.prec {
            if n < min {
                bail!(
                    "prec = {n} is below the policy minimum {min} for r_max = {} and \
                     gamma depth {} (half-units)",
                    self.r2_max,
                    self.gd2_max.max(self.gamma_d2)
                );
            }
        }
        if let Some(f) = &self.fault {
            if f != "wrong-legendre" {
                bail!("unknown fault '{f}' (known: wrong-legendre)");
            }
        }
        // Every requested class must exist for every requested p.
        if let ClassFilter::Subset(codes) = &self.classes {
            for &p in &self.ps {
                if !codes.iter().any(|c| parse_class_code(c, p).is_ok()) {
                    bail!("no requested torus class exists for p = {p}");
                }
            }
        }
        Ok(())
    }

    /// Canonical key=value rendering; [`apply_file`] of the output
    /// reproduces the config exactly.
    pub fn render(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("p={}\n", join_u64(&self.ps)));
        if let Some(n) = self.prec {
            s.push_str(&format!("prec={n}\n"));
        }
        s.push_str(&format!("r_max={}\n", self.r2_max));
        s.push_str(&format!("gamma_depth_max={}\n", self.gd2_max));
        s.push_str(&format!("classes={}\n", self.classes.render()));
        s.push_str(&format!("seed={}\n", self.seed));
        s.push_str(&format!("tol={}\n", fmt_f64_config(self.tol)));
        if let Some(out) = &self.out {
            s.push_str(&format!("out={}\n", out.display()));
        }
        s.push_str(&format!("c1_log_q={}\n", fmt_f64_config(self.c1_log_q)));
        s.push_str(&format!("gamma_class={}\n", self.gamma_class));
        s.push_str(&format!("gamma_depth={}\n", self.gamma_d2));
        if let Some(t) = &self.types {
            s.push_str(&format!("types={t}\n"));
        }
        s.push_str(&format!("samples={}\n", self.samples));
        if let Some(f) = &self.fault {
            s.push_str(&format!("fault={f}\n"));
        }
        s
    }

    /// Apply a key=value config file on top of the current values. Lines are
    /// `key=value`; blank lines and `#` comments are skipped; unknown or
    /// repeated keys are rejected with their line number.
    pub fn apply_file(&mut self, text: &str) -> anyhow::Result<()> {
        let mut seen = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("config line {line_no}: expected key=value, got '{line}'"))?;
            let key = key.trim();
            let value = value.trim();
            if !KNOWN_KEYS.contains(&key) {
                bail!("config line {line_no}: unknown key '{key}'");
            }
            if !seen.insert(key.to_string()) {
                bail!("config line {line_no}: key '{key}' given twice");
            }
            self.apply_pair(key, value)
                .with_context(|| format!("config line {line_no}: bad value for '{key}'"))?;
        }
        Ok(())
    }

    fn apply_pair(&mut self, key: &str, value: &str) -> anyhow::Result<()> {
        match key {
            "p" => self.ps = parse_u64_list(value)?,
            "prec" => self.prec = Some(value.parse()?),
            "r_max" => self.r2_max = value.parse()?,
            "gamma_depth_max" => self.gd2_max = value.parse()?,
            "classes" => self.classes = ClassFilter::parse(value)?,
            "seed" => self.seed = value.parse()?,
            "tol" => self.tol = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value)),
            "c1_log_q" => self.c1_log_q = value.parse()?,
            "gamma_class" => self.gamma_class = value.to_string(),
            "gamma_depth" => self.gamma_d2 = value.parse()?,
            "types" => self.types = Some(value.to_string()),
            "samples" => self.samples = value.parse()?,
            "fault" => self.fault = Some(value.to_string()),
            _ => unreachable!("key list checked by caller"),
        }
        Ok(())
    }
}

pub fn parse_u64_list(s: &str) -> anyhow::Result<Vec<u64>> {
    let v: Vec<u64> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|e| anyhow!("'{t}': {e}")))
        .collect::<anyhow::Result<_>>()?;
    if v.is_empty() {
        bail!("empty list");
    }
    Ok(v)
}

fn join_u64(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Floats in config files render shortest-round-trip, so render → parse is
/// the identity on them.
fn fmt_f64_config(x: f64) -> String {
    format!("{x}")
}
