use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cylschur::verify::{
    run_scan, verify_pieri_report, write_fusion_table, write_reports, ScanSummary,
};
use cylschur::{
    count_cyl_tableaux, cylindric_schur, export_fusion_table, fusion_product, reduce_schur,
    verify_proposition1, verify_theorem1, CylProfile, Error, OutputFormat, Partition, ScanConfig,
    SkewShape, VerificationReport, Weight,
};

#[derive(Parser)]
#[command(name = "cylschur", version, about = "Cylindric Schur functions and fusion coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ProfileArgs {
    /// Rank N.
    #[arg(long)]
    rank: usize,
    /// Level L.
    #[arg(long)]
    level: usize,
}

impl ProfileArgs {
    fn profile(&self) -> Result<CylProfile, Error> {
        CylProfile::new(self.rank, self.level)
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, default_value = "json")]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include lhs/rhs payloads for passing reports.
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Count cylindric tableaux K^cyl_{λ/μ,α}.
    Kcyl {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        lam: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long, default_value = "")]
        alpha: Weight,
    },
    /// Monomial expansion of s^cyl_{λ/μ}.
    Scyl {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        lam: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
    },
    /// Fusion product S_μ S_ν.
    Fusion {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Image of s_λ in the fusion ring.
    Reduce {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        lam: Partition,
    },
    /// Check the expansion of one skew cylindric Schur function.
    VerifyTheorem {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        lam: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the tableau-count identity for one shape and weight.
    VerifyProp {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        lam: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long, default_value = "")]
        alpha: Weight,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the fusion Pieri rule for S_η H_k.
    VerifyPieri {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        eta: Partition,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every check over a grid of profiles and shapes.
    Scan {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        l_max: usize,
        #[arg(long)]
        deg_max: usize,
        /// Worker threads, 0 for automatic.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Report elapsed_ms as 0 for reproducible output.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write all nonzero fusion coefficients as JSON lines.
    ExportTable {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        deg_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    let mut stdout = io::stdout().lock();
    serde_json::to_writer(&mut stdout, value)?;
    writeln!(stdout)?;
    Ok(())
}

fn emit(report: VerificationReport, output: &OutputArgs) -> Result<i32, Error> {
    let reports = [report];
    match &output.out {
        Some(path) => write_reports(&reports, output.format, output.verbose, std::fs::File::create(path)?)?,
        None => write_reports(&reports, output.format, output.verbose, io::stdout().lock())?,
    }
    Ok(ScanSummary::of(&reports).exit_code())
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Kcyl { profile, lam, mu, alpha } => {
            let k = count_cyl_tableaux(profile.profile()?, &SkewShape::new(lam, mu)?, &alpha)?;
            println!("{k}");
            Ok(0)
        }
        Command::Scyl { profile, lam, mu } => {
            print_json(&cylindric_schur(profile.profile()?, &SkewShape::new(lam, mu)?)?)?;
            Ok(0)
        }
        Command::Fusion { profile, mu, nu } => {
            print_json(&fusion_product(profile.profile()?, &mu, &nu)?)?;
            Ok(0)
        }
        Command::Reduce { profile, lam } => {
            print_json(&reduce_schur(profile.profile()?, &lam)?)?;
            Ok(0)
        }
        Command::VerifyTheorem { profile, lam, mu, output } => {
            let report = verify_theorem1(profile.profile()?, &SkewShape::new(lam, mu)?)?;
            emit(report, &output)
        }
        Command::VerifyProp { profile, lam, mu, alpha, output } => {
            emit(verify_proposition1(profile.profile()?, &lam, &mu, &alpha)?, &output)
        }
        Command::VerifyPieri { profile, eta, k, output } => {
            emit(verify_pieri_report(profile.profile()?, &eta, k)?, &output)
        }
        Command::Scan { n_max, l_max, deg_max, jobs, no_timing, output } => {
            let config = ScanConfig {
                output: output.out,
                format: output.format,
                parallelism: jobs,
                verbose: output.verbose,
                timing: !no_timing,
                ..ScanConfig::new(n_max, l_max, deg_max)
            };
            let summary = run_scan(&config)?;
            eprintln!("{} reports, {} failed", summary.total, summary.failed);
            Ok(summary.exit_code())
        }
        Command::ExportTable { profile, deg_max, out } => {
            let p = profile.profile()?;
            let summary = match out {
                Some(path) => export_fusion_table(p, deg_max, path)?,
                None => write_fusion_table(p, deg_max, io::stdout().lock())?,
            };
            eprintln!("{} records from {} pairs", summary.records, summary.pairs);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
