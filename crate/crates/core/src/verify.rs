//! Executable checks of the cylindric Schur expansion and its supporting
//! identities, plus batch scans over parameter grids and structure-constant
//! table export.
//!
//! Reports are buffered and written in a fixed order, so output does not
//! depend on the degree of parallelism.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{fusion_product, pieri_sides, FusionElement};
use crate::partition::{
    enumerate_nl_partitions, partitions_of, CylProfile, Partition, SkewShape,
};
use crate::schur::{cylindric_schur, IntValue, MonomialVector};
use crate::tableaux::{count_cyl_tableaux, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Theorem1,
    Prop1,
    Pieri,
}

impl Check {
    pub fn as_str(&self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Prop1 => "prop1",
            Check::Pieri => "pieri",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One side of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Monomial(MonomialVector),
    Count(BigInt),
    Fusion(FusionElement),
}

impl Serialize for Payload {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Payload::Monomial(v) => v.serialize(s),
            Payload::Count(c) => IntValue(c).serialize(s),
            Payload::Fusion(e) => e.serialize(s),
        }
    }
}

/// Outcome of one check instance.
///
/// For Pieri checks `lam` holds `η`, `mu` is empty and `alpha` is `(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub profile: CylProfile,
    pub check: Check,
    pub lam: Partition,
    pub mu: Partition,
    pub alpha: Option<Weight>,
    pub lhs: Payload,
    pub rhs: Payload,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn status(&self) -> Status {
        if self.lhs == self.rhs {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    /// Serializable view; `lhs`/`rhs` appear on failure or when `verbose`.
    pub fn record(&self, verbose: bool) -> ReportRecord<'_> {
        let show = verbose || !self.passed();
        ReportRecord {
            rank: self.profile.rank(),
            level: self.profile.level(),
            lam: &self.lam,
            mu: &self.mu,
            alpha: self.alpha.as_ref(),
            check: self.check,
            status: self.status(),
            elapsed_ms: self.elapsed_ms,
            lhs: show.then_some(&self.lhs),
            rhs: show.then_some(&self.rhs),
        }
    }
}

/// The JSON-lines report schema.
#[derive(Serialize)]
pub struct ReportRecord<'a> {
    #[serde(rename = "N")]
    rank: usize,
    #[serde(rename = "L")]
    level: usize,
    lam: &'a Partition,
    mu: &'a Partition,
    alpha: Option<&'a Weight>,
    check: Check,
    status: Status,
    elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<&'a Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<&'a Payload>,
}

fn millis(start: Instant) -> u64 {
    start.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
}

/// `d^λ_{μν}` for every `(N,L)`-partition `ν ⊢ |λ/μ|`, in graded-lex order.
fn fusion_column(p: CylProfile, shape: &SkewShape) -> Result<Vec<(Partition, BigInt)>> {
    let mut out = Vec::new();
    for nu in enumerate_nl_partitions(p, shape.size()) {
        let d = fusion_product(p, shape.inner(), &nu)?.coeff(shape.outer());
        out.push((nu, d));
    }
    Ok(out)
}

/// `s^cyl_{λ/μ}` against `Σ_ν d^λ_{μν} s^cyl_ν`, compared in the monomial
/// basis.
pub fn verify_theorem1(p: CylProfile, shape: &SkewShape) -> Result<VerificationReport> {
    let start = Instant::now();
    p.require_cylindric(shape)?;
    let lhs = cylindric_schur(p, shape)?;
    let mut rhs = MonomialVector::zero(shape.size());
    for (nu, d) in fusion_column(p, shape)? {
        if d.sign() != num_bigint::Sign::NoSign {
            rhs.add_scaled(&cylindric_schur(p, &SkewShape::straight(nu))?, &d);
        }
    }
    Ok(VerificationReport {
        profile: p,
        check: Check::Theorem1,
        lam: shape.outer().clone(),
        mu: shape.inner().clone(),
        alpha: None,
        lhs: Payload::Monomial(lhs),
        rhs: Payload::Monomial(rhs),
        elapsed_ms: millis(start),
    })
}

/// `K^cyl_{λ/μ,α}` against `Σ_ν d^λ_{μν} K^cyl_{ν,α}`.
pub fn verify_proposition1(
    p: CylProfile,
    lam: &Partition,
    mu: &Partition,
    alpha: &Weight,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let shape = SkewShape::new(lam.clone(), mu.clone())?;
    p.require_cylindric(&shape)?;
    let lhs = BigInt::from(count_cyl_tableaux(p, &shape, alpha)?);
    let mut rhs = BigInt::default();
    for (nu, d) in fusion_column(p, &shape)? {
        if d.sign() != num_bigint::Sign::NoSign {
            rhs += d * BigInt::from(count_cyl_tableaux(p, &SkewShape::straight(nu), alpha)?);
        }
    }
    Ok(VerificationReport {
        profile: p,
        check: Check::Prop1,
        lam: lam.clone(),
        mu: mu.clone(),
        alpha: Some(alpha.clone()),
        lhs: Payload::Count(lhs),
        rhs: Payload::Count(rhs),
        elapsed_ms: millis(start),
    })
}

/// Reduction of `s_η h_k` against the strip sum `Σ_ρ S_ρ`.
pub fn verify_pieri_report(p: CylProfile, eta: &Partition, k: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let (lhs, rhs) = pieri_sides(p, eta, k)?;
    Ok(VerificationReport {
        profile: p,
        check: Check::Pieri,
        lam: eta.clone(),
        mu: Partition::empty(),
        alpha: Some(Weight::new(vec![k])),
        lhs: Payload::Fusion(lhs),
        rhs: Payload::Fusion(rhs),
        elapsed_ms: millis(start),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Tsv,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "tsv" => Ok(OutputFormat::Tsv),
            other => Err(Error::InvalidConfig(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub n_max: usize,
    pub l_max: usize,
    pub deg_max: usize,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    /// Worker threads; 0 picks automatically.
    pub parallelism: usize,
    pub verbose: bool,
    /// When false, `elapsed_ms` is reported as 0 so output is reproducible
    /// byte for byte.
    pub timing: bool,
}

impl ScanConfig {
    pub fn new(n_max: usize, l_max: usize, deg_max: usize) -> Self {
        ScanConfig {
            n_max,
            l_max,
            deg_max,
            output: None,
            format: OutputFormat::Json,
            parallelism: 0,
            verbose: false,
            timing: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 || self.l_max == 0 {
            return Err(Error::InvalidConfig("n_max and l_max must be at least 1".into()));
        }
        Ok(())
    }

    pub fn profiles(&self) -> Vec<CylProfile> {
        (1..=self.n_max)
            .flat_map(|n| (1..=self.l_max).map(move |l| CylProfile::new(n, l).expect("positive")))
            .collect()
    }
}

/// All `(N,L)`-cylindric shapes `λ/μ` with `|λ| ≤ deg_max`, ordered by `λ`
/// then `μ`, both graded-lex.
pub fn cylindric_shapes(p: CylProfile, deg_max: usize) -> Vec<SkewShape> {
    let all: Vec<Partition> = (0..=deg_max).flat_map(|n| enumerate_nl_partitions(p, n)).collect();
    let mut out = Vec::new();
    for lam in &all {
        for mu in all.iter().take_while(|mu| mu.size() <= lam.size()) {
            if lam.contains(mu) {
                out.push(SkewShape::new(lam.clone(), mu.clone()).expect("contained"));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
enum Instance {
    Theorem(CylProfile, SkewShape),
    Prop(CylProfile, SkewShape, Weight),
    Pieri(CylProfile, Partition, usize),
}

impl Instance {
    fn run(&self) -> Result<VerificationReport> {
        match self {
            Instance::Theorem(p, s) => verify_theorem1(*p, s),
            Instance::Prop(p, s, a) => verify_proposition1(*p, s.outer(), s.inner(), a),
            Instance::Pieri(p, eta, k) => verify_pieri_report(*p, eta, *k),
        }
    }
}

fn scan_instances(config: &ScanConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    for p in config.profiles() {
        for shape in cylindric_shapes(p, config.deg_max) {
            out.push(Instance::Theorem(p, shape.clone()));
            for alpha in partitions_of(shape.size()) {
                out.push(Instance::Prop(p, shape.clone(), Weight::from(&alpha)));
            }
        }
        for n in 0..=config.deg_max {
            for eta in enumerate_nl_partitions(p, n) {
                for k in 0..=p.level().min(config.deg_max - n) {
                    out.push(Instance::Pieri(p, eta.clone(), k));
                }
            }
        }
    }
    out
}

/// Runs every check over the configured grid and returns the reports in
/// canonical order: per profile, each shape's theorem report followed by its
/// proposition reports, then the Pieri reports.
pub fn scan(config: &ScanConfig) -> Result<Vec<VerificationReport>> {
    config.validate()?;
    let instances = scan_instances(config);
    let run = || -> Result<Vec<VerificationReport>> {
        instances.par_iter().map(Instance::run).collect()
    };
    let mut reports = if config.parallelism == 0 {
        run()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.parallelism)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?
            .install(run)?
    };
    if !config.timing {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    Ok(reports)
}

/// Summary of a finished scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub total: usize,
    pub failed: usize,
}

impl ScanSummary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        ScanSummary {
            total: reports.len(),
            failed: reports.iter().filter(|r| !r.passed()).count(),
        }
    }

    /// 0 when every report passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }
}

const TSV_HEADER: &str = "N\tL\tlam\tmu\talpha\tcheck\tstatus\telapsed_ms\tlhs\trhs";

fn weight_hyphenated(w: &Weight) -> String {
    crate::partition::join(w.entries(), "-")
}

/// Writes reports as JSON lines or TSV.
pub fn write_reports<W: Write>(
    reports: &[VerificationReport],
    format: OutputFormat,
    verbose: bool,
    mut out: W,
) -> Result<()> {
    match format {
        OutputFormat::Json => {
            for r in reports {
                serde_json::to_writer(&mut out, &r.record(verbose))?;
                out.write_all(b"\n")?;
            }
        }
        OutputFormat::Tsv => {
            writeln!(out, "{TSV_HEADER}")?;
            for r in reports {
                let show = verbose || !r.passed();
                let payload = |x: &Payload| -> Result<String> {
                    Ok(if show { serde_json::to_string(x)? } else { String::new() })
                };
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.profile.rank(),
                    r.profile.level(),
                    r.lam.hyphenated(),
                    r.mu.hyphenated(),
                    r.alpha.as_ref().map(weight_hyphenated).unwrap_or_default(),
                    r.check.as_str(),
                    if r.passed() { "pass" } else { "fail" },
                    r.elapsed_ms,
                    payload(&r.lhs)?,
                    payload(&r.rhs)?,
                )?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Runs [`scan`] and writes the reports to the configured destination.
pub fn run_scan(config: &ScanConfig) -> Result<ScanSummary> {
    let reports = scan(config)?;
    match &config.output {
        Some(path) => {
            let file = BufWriter::new(File::create(path)?);
            write_reports(&reports, config.format, config.verbose, file)?;
        }
        None => {
            let stdout = std::io::stdout().lock();
            write_reports(&reports, config.format, config.verbose, BufWriter::new(stdout))?;
        }
    }
    Ok(ScanSummary::of(&reports))
}

/// One nonzero structure constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRecord {
    pub mu: Partition,
    pub nu: Partition,
    pub lambda: Partition,
    pub d: BigInt,
}

impl Serialize for FusionRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FusionRecord", 4)?;
        st.serialize_field("mu", &self.mu)?;
        st.serialize_field("nu", &self.nu)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("d", &IntValue(&self.d))?;
        st.end()
    }
}

/// All nonzero `d^λ_{μν}` with `|μ| + |ν| ≤ deg_max`, ordered by `μ`, then
/// `ν`, then `λ`.
pub fn fusion_table(p: CylProfile, deg_max: usize) -> Result<Vec<FusionRecord>> {
    let nl: Vec<Partition> = (0..=deg_max).flat_map(|n| enumerate_nl_partitions(p, n)).collect();
    let pairs: Vec<(&Partition, &Partition)> = nl
        .iter()
        .flat_map(|mu| {
            nl.iter()
                .take_while(move |nu| mu.size() + nu.size() <= deg_max)
                .map(move |nu| (mu, nu))
        })
        .collect();
    let products = pairs
        .par_iter()
        .map(|(mu, nu)| fusion_product(p, mu, nu))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for ((mu, nu), prod) in pairs.into_iter().zip(products) {
        for (lambda, d) in prod.iter() {
            out.push(FusionRecord {
                mu: mu.clone(),
                nu: nu.clone(),
                lambda: lambda.clone(),
                d: d.clone(),
            });
        }
    }
    Ok(out)
}

/// Counts written by [`export_fusion_table`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TableSummary {
    pub pairs: usize,
    pub records: usize,
}

/// Writes the structure constants as JSON lines.
pub fn write_fusion_table<W: Write>(p: CylProfile, deg_max: usize, mut out: W) -> Result<TableSummary> {
    let records = fusion_table(p, deg_max)?;
    let mut pairs = 0;
    let mut last: Option<(&Partition, &Partition)> = None;
    for r in &records {
        if last != Some((&r.mu, &r.nu)) {
            pairs += 1;
            last = Some((&r.mu, &r.nu));
        }
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(TableSummary {
        pairs,
        records: records.len(),
    })
}

pub fn export_fusion_table(p: CylProfile, deg_max: usize, path: impl AsRef<std::path::Path>) -> Result<TableSummary> {
    let file = BufWriter::new(File::create(path)?);
    write_fusion_table(p, deg_max, file)
}
