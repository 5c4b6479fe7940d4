//! CSV emission: schema versioning, the sweep row layout, and deterministic
//! numeric formatting.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

/// Bumped whenever a column list changes; always the first CSV row.
pub const SCHEMA_VERSION: u32 = 1;

pub const SWEEP_COLUMNS: &str = "p,theta,eta,kind,sign,r,gamma_id,gamma_class,d,d_minus,\
                                 d_plus,sd,D,value_kind,normalized_value,deg,lhs,rhs,ratio,pass";
pub const ASYMPTOTICS_COLUMNS: &str = "family,r,deg,ratio,value_kind";
pub const KAPPA_COLUMNS: &str = "type,rank,dim,pos_roots,h_g,r_g,kappa,a_exp,flags";

/// A CSV sink (file or stdout) that always emits the schema row first.
pub struct CsvOut {
    w: BufWriter<Box<dyn Write>>,
}

impl CsvOut {
    pub fn create(path: Option<&Path>, columns: &str) -> anyhow::Result<CsvOut> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(File::create(p)?),
            None => Box::new(io::stdout().lock()),
        };
        let mut out = CsvOut { w: BufWriter::new(sink) };
        out.line(&format!("schema_version,{SCHEMA_VERSION}"))?;
        out.line(columns)?;
        Ok(out)
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        debug_assert!(!s.contains('\n'));
        self.w.write_all(s.as_bytes())?;
        self.w.write_all(b"\n")
    }

    pub fn row(&mut self, fields: &[&str]) -> io::Result<()> {
        debug_assert!(
            fields.iter().all(|f| !f.contains(',') && !f.contains('\n')),
            "CSV fields are comma-free by construction"
        );
        self.line(&fields.join(","))
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.w.flush()
    }
}
