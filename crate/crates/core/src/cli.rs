//! The `equihom` command line.
//!
//! Exit codes: `0` success, `1` a verification found a mismatch, `2` bad
//! usage or parameters.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::characters::{is_prime, CharacterTable};
use crate::complex::{
    matching_complex, pcycle_complex, quillen_complex, quillen_within_guard, ComplexError,
    SimplicialComplex,
};
use crate::formulas::{self, FormulaError};
use crate::homology::{
    betti_with, boundary_matrix, equivariant_decomposition_with, EquivariantDecomposition,
    HomologyOptions,
};
use crate::symfunc::SymmetricFunction;

/// Cache files carry this stamp; bump it when the on-disk format changes.
pub const COMPLEX_CACHE_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "equihom",
    version,
    about = "Exact equivariant homology of matching, p-cycle and Quillen complexes"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads; results do not depend on this.
    #[arg(long, default_value_t = 1, global = true)]
    pub threads: usize,
    /// Directory for character-table and complex caches.
    #[arg(long, env = "EQUIHOM_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Lift the size guards on Quillen complexes and large conjecture checks.
    #[arg(long, global = true)]
    pub allow_large: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    Matching,
    Pcycle,
    Quillen,
}

impl ComplexKind {
    fn slug(self) -> &'static str {
        match self {
            ComplexKind::Matching => "matching",
            ComplexKind::Pcycle => "pcycle",
            ComplexKind::Quillen => "quillen",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct ComplexArgs {
    #[arg(long, value_enum, default_value_t = ComplexKind::Matching)]
    pub complex: ComplexKind,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaName {
    Fp,
    InflationBlock,
    TopConjecture,
    Carre,
    Bouc,
    OddParts,
    EulerPoincare,
    VanishingFloor,
    ChainCharacter,
    DeriveTable,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Fp,
    Carre,
    Quillen,
    Fr,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a complex and print its facet list.
    Build(ComplexArgs),
    /// Reduced Betti numbers.
    Homology(ComplexArgs),
    /// Specht decomposition of each reduced homology group.
    Equivariant {
        #[command(flatten)]
        complex: ComplexArgs,
        /// Only this degree.
        #[arg(long, allow_negative_numbers = true)]
        degree: Option<i64>,
    },
    /// Evaluate a closed-form symmetric function.
    Formula {
        #[arg(value_enum)]
        name: FormulaName,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Derive the M_3(n) table for n = 4..13 and diff it against the stored copy.
    VerifyTable,
    /// Compare top homology of M_p(kp+1) with (e_k[h_p] h_1)|_{k+1}.
    VerifyConjecture {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run the oracle suites.
    CrossCheck {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Print the boundary matrix of a complex in coordinate form.
    Dump {
        #[command(flatten)]
        complex: ComplexArgs,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
}

/// Failure modes mapped onto exit codes.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("verification mismatch")]
    Mismatch,
}

impl From<ComplexError> for Failure {
    fn from(e: ComplexError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<crate::homology::HomologyError> for Failure {
    fn from(e: crate::homology::HomologyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `argv` (program name first) and runs the command on stdout/stderr.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with_io<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let mut buf = String::new();
    let result = execute(&cli, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let g = &cli.global;
    if g.threads == 0 {
        return Err(Failure::Usage("--threads must be at least 1".into()));
    }
    let opts = HomologyOptions::with_threads(g.threads);
    match &cli.command {
        Command::Build(a) => {
            let c = build_complex(a, g)?;
            match g.format {
                Format::Text => out.push_str(&c.to_facet_text()),
                Format::Json => {
                    let v = json!({
                        "complex": c.name(),
                        "dim": c.dim(),
                        "f_vector": c.f_vector(),
                        "facets": c.facets(),
                        "labels": c.labels(),
                    });
                    writeln!(out, "{v}").unwrap();
                }
            }
        }
        Command::Homology(a) => {
            let c = build_complex(a, g)?;
            warm_character_table(a.n, g)?;
            let b = betti_with(&c, &opts)?;
            match g.format {
                Format::Text => {
                    for (k, x) in b.iter().enumerate() {
                        writeln!(out, "b~_{} = {}", k as i64 - 1, x).unwrap();
                    }
                }
                Format::Json => {
                    let degrees: Vec<_> = b
                        .iter()
                        .enumerate()
                        .map(|(k, x)| json!({"i": k as i64 - 1, "betti": x}))
                        .collect();
                    writeln!(out, "{}", json!({"complex": c.name(), "betti": degrees})).unwrap();
                }
            }
        }
        Command::Equivariant { complex, degree } => {
            let c = build_complex(complex, g)?;
            warm_character_table(complex.n, g)?;
            let mut d = equivariant_decomposition_with(&c, &opts)?;
            if let Some(i) = degree {
                if *i < -1 || *i > c.dim() {
                    return Err(Failure::Usage(format!(
                        "degree {i} outside -1..={}",
                        c.dim()
                    )));
                }
                d.degrees.retain(|x| x.degree == *i);
            }
            write_decomposition(out, &d, g.format);
        }
        Command::Formula { name, p, n, k, r } => formula(out, g.format, *name, *p, *n, *k, *r)?,
        Command::VerifyTable => {
            let cmp = formulas::verify_table()?;
            match g.format {
                Format::Text => out.push_str(&cmp.to_text()),
                Format::Json => {
                    let rows: Vec<_> = cmp
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "n": r.n,
                                "i": r.degree,
                                "match": r.matches(),
                                "derived": r.derived.to_json_value(),
                                "expected": r.expected.to_json_value(),
                            })
                        })
                        .collect();
                    let v =
                        json!({"rows": rows, "matched": cmp.matched(), "total": cmp.rows.len()});
                    writeln!(out, "{v}").unwrap();
                }
            }
            if !cmp.all_match() {
                return Err(Failure::Mismatch);
            }
        }
        Command::VerifyConjecture { p, k } => verify_conjecture(out, g, &opts, *p, *k)?,
        Command::CrossCheck { suite } => {
            let outcomes = cross_check(*suite, &opts)?;
            let mut ok = true;
            for o in &outcomes {
                ok &= o.passed;
                match g.format {
                    Format::Text => writeln!(
                        out,
                        "{} {}{}",
                        if o.passed { "PASS" } else { "FAIL" },
                        o.name,
                        o.detail_suffix()
                    )
                    .unwrap(),
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({"check": o.name, "passed": o.passed, "detail": o.detail})
                    )
                    .unwrap(),
                }
            }
            if !ok {
                return Err(Failure::Mismatch);
            }
        }
        Command::Dump { complex, degree } => {
            let c = build_complex(complex, g)?;
            if *degree < 0 || *degree > c.dim() {
                return Err(Failure::Usage(format!(
                    "boundary degree {degree} outside 0..={}",
                    c.dim()
                )));
            }
            out.push_str(&boundary_matrix(&c, *degree).to_coordinate_text());
        }
    }
    Ok(())
}

fn warm_character_table(n: usize, g: &GlobalOpts) -> Result<(), Failure> {
    if let Some(dir) = &g.cache_dir {
        CharacterTable::load_or_compute(n, dir)?;
    }
    Ok(())
}

fn write_decomposition(out: &mut String, d: &EquivariantDecomposition, format: Format) {
    match format {
        Format::Text => out.push_str(&d.to_text()),
        Format::Json => writeln!(out, "{}", d.to_json()).unwrap(),
    }
}

fn validate(a: &ComplexArgs, g: &GlobalOpts) -> Result<(), Failure> {
    if a.p < 2 {
        return Err(Failure::Usage(format!("p = {} must be at least 2", a.p)));
    }
    if a.n > 64 {
        return Err(Failure::Usage(format!(
            "n = {} is beyond what can be enumerated",
            a.n
        )));
    }
    match a.complex {
        ComplexKind::Matching => Ok(()),
        ComplexKind::Pcycle if !is_prime(a.p) => {
            Err(Failure::Usage(format!("p = {} is not prime", a.p)))
        }
        ComplexKind::Pcycle => Ok(()),
        ComplexKind::Quillen if !is_prime(a.p) => {
            Err(Failure::Usage(format!("p = {} is not prime", a.p)))
        }
        ComplexKind::Quillen if !g.allow_large && !quillen_within_guard(a.p, a.n) => {
            Err(Failure::Usage(format!(
                "Quillen complex for p = {}, n = {} exceeds the size guard; pass --allow-large",
                a.p, a.n
            )))
        }
        ComplexKind::Quillen => Ok(()),
    }
}

fn cache_path(dir: &Path, a: &ComplexArgs) -> PathBuf {
    dir.join(format!(
        "complex-{}-p{}-n{}-v{}.txt",
        a.complex.slug(),
        a.p,
        a.n,
        COMPLEX_CACHE_VERSION
    ))
}

/// Builds (or loads from the cache directory) the requested complex.
pub fn build_complex_cached(
    kind: ComplexKind,
    p: usize,
    n: usize,
    allow_large: bool,
    cache_dir: Option<&Path>,
) -> Result<SimplicialComplex, ComplexError> {
    let a = ComplexArgs {
        complex: kind,
        p,
        n,
    };
    let name = match kind {
        ComplexKind::Matching => format!("M_{p}({n})"),
        ComplexKind::Pcycle => format!("C_{p}({n})"),
        ComplexKind::Quillen => format!("QA_{p}(S_{n})"),
    };
    if let Some(dir) = cache_dir {
        if let Ok(text) = std::fs::read_to_string(cache_path(dir, &a)) {
            if let Ok(c) = SimplicialComplex::from_facet_text(name.clone(), &text, Some(n)) {
                return Ok(c);
            }
        }
    }
    let c = match kind {
        ComplexKind::Matching => matching_complex(p, n)?,
        ComplexKind::Pcycle => pcycle_complex(p, n)?,
        ComplexKind::Quillen => quillen_complex(p, n, allow_large)?,
    };
    if let Some(dir) = cache_dir {
        if std::fs::create_dir_all(dir).is_ok() {
            let _ = std::fs::write(cache_path(dir, &a), c.to_facet_text());
        }
    }
    Ok(c)
}

fn build_complex(a: &ComplexArgs, g: &GlobalOpts) -> Result<SimplicialComplex, Failure> {
    validate(a, g)?;
    Ok(build_complex_cached(
        a.complex,
        a.p,
        a.n,
        g.allow_large,
        g.cache_dir.as_deref(),
    )?)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("this formula needs --{flag}")))
}

fn need_prime(v: Option<usize>) -> Result<usize, Failure> {
    let p = need(v, "p")?;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Failure::Usage(format!("p = {p} is not prime")))
    }
}

fn write_symfunc(out: &mut String, f: &SymmetricFunction, format: Format) {
    match format {
        Format::Text => writeln!(out, "{}", f.to_text()).unwrap(),
        Format::Json => writeln!(out, "{}", serde_json::to_string(f).unwrap()).unwrap(),
    }
}

fn formula(
    out: &mut String,
    format: Format,
    name: FormulaName,
    p: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
    r: Option<usize>,
) -> Result<(), Failure> {
    let f = match name {
        FormulaName::Fp => formulas::fp(need_prime(p)?)?,
        FormulaName::InflationBlock => formulas::inflation_block(need(k, "k")?, need_prime(p)?)?,
        FormulaName::TopConjecture => {
            let k = need(k, "k")?;
            if k == 0 {
                return Err(Failure::Usage("k must be at least 1".into()));
            }
            formulas::top_conjecture_value(k, need(p, "p")?)?
        }
        FormulaName::Carre => formulas::carre_form(need(k, "k")?, need(p, "p")?)?,
        FormulaName::Bouc => formulas::bouc_homology(need(n, "n")?, need(r, "r")?),
        FormulaName::OddParts => {
            let k = need(k, "k")?;
            if k == 0 {
                return Err(Failure::Usage("k must be at least 1".into()));
            }
            formulas::odd_parts_top(k)
        }
        FormulaName::EulerPoincare => formulas::euler_poincare_char(need(p, "p")?, need(n, "n")?)?,
        FormulaName::ChainCharacter => {
            crate::homology::chain_character(need(p, "p")?, need(n, "n")?, need(r, "r")?)?
        }
        FormulaName::VanishingFloor => {
            let v = formulas::vanishing_floor(need(p, "p")?, need(n, "n")?);
            match format {
                Format::Text => writeln!(out, "{v}").unwrap(),
                Format::Json => writeln!(out, "{}", json!({ "vanishing_floor": v })).unwrap(),
            }
            return Ok(());
        }
        FormulaName::DeriveTable => {
            let n = need(n, "n")?;
            let t = formulas::derive_table(n)?;
            match format {
                Format::Text => {
                    for (i, f) in &t {
                        writeln!(out, "H~_{i}: {}", f.to_text()).unwrap();
                    }
                }
                Format::Json => {
                    let degrees: Vec<_> = t
                        .iter()
                        .map(|(i, f)| json!({"i": i, "ch": f.to_json_value()}))
                        .collect();
                    writeln!(out, "{}", json!({"n": n, "degrees": degrees})).unwrap();
                }
            }
            return Ok(());
        }
    };
    write_symfunc(out, &f, format);
    Ok(())
}

fn verify_conjecture(
    out: &mut String,
    g: &GlobalOpts,
    opts: &HomologyOptions,
    p: usize,
    k: usize,
) -> Result<(), Failure> {
    if p < 2 || k == 0 {
        return Err(Failure::Usage("need p >= 2 and k >= 1".into()));
    }
    let n = k * p + 1;
    if n > 16 && !g.allow_large {
        return Err(Failure::Usage(format!(
            "M_{p}({n}) exceeds the size guard; pass --allow-large"
        )));
    }
    let c = matching_complex(p, n)?;
    let d = equivariant_decomposition_with(&c, opts)?;
    let direct = d.ch(k as i64 - 1);
    let predicted = formulas::top_conjecture_value(k, p)?;
    let diff = formulas::conjecture_difference(&direct, k, p)?;
    let long = formulas::long_part(&diff, k + 1);
    match g.format {
        Format::Text => {
            writeln!(out, "direct:    {}", direct.to_text()).unwrap();
            writeln!(out, "predicted: {}", predicted.to_text()).unwrap();
            writeln!(out, "difference f = {}", diff.to_text()).unwrap();
            writeln!(out, "length >= {} part of f: {}", k + 1, long.to_text()).unwrap();
        }
        Format::Json => {
            let v = json!({
                "p": p, "k": k, "n": n,
                "direct": direct.to_json_value(),
                "predicted": predicted.to_json_value(),
                "difference": diff.to_json_value(),
                "long_part_zero": long.is_zero(),
            });
            writeln!(out, "{v}").unwrap();
        }
    }
    if diff.is_zero() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

/// Result of one oracle comparison.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn detail_suffix(&self) -> String {
        if self.detail.is_empty() {
            String::new()
        } else {
            format!(": {}", self.detail)
        }
    }
}

fn compare(name: String, a: &SymmetricFunction, b: &SymmetricFunction) -> CheckOutcome {
    if a == b {
        CheckOutcome::new(name, true, "")
    } else {
        CheckOutcome::new(name, false, format!("{} != {}", a.to_text(), b.to_text()))
    }
}

/// Runs the oracle suites: normalizer character three ways, the Carré
/// identity instances, Quillen versus cycle complexes, and the inflation
/// formula for `C_5(n)` against direct computation.
pub fn cross_check(suite: Suite, opts: &HomologyOptions) -> Result<Vec<CheckOutcome>, Failure> {
    let mut v = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Fp {
        for p in [2, 3, 5, 7] {
            let a = formulas::fp(p)?;
            v.push(compare(
                format!("fp({p}) cycle index = brute force"),
                &a,
                &formulas::fp_brute_force(p)?,
            ));
            v.push(compare(
                format!("fp({p}) cycle index = maj form"),
                &a,
                &formulas::fp_via_maj(p)?,
            ));
        }
    }
    if all || suite == Suite::Carre {
        for r in 1..=4 {
            for p in 2..=4 {
                let (lhs, rhs) = formulas::carre_identity(r, p)?;
                v.push(compare(
                    format!("e_{r}[h_{p}]|_{r} = gamma_{r}(h_{r}[h_{}])", p - 1),
                    &lhs,
                    &rhs,
                ));
            }
        }
    }
    if all || suite == Suite::Quillen {
        for n in 4..=8 {
            let q = quillen_complex(3, n, false)?;
            let m = matching_complex(3, n)?;
            let dq = equivariant_decomposition_with(&q, opts)?;
            let dm = equivariant_decomposition_with(&m, opts)?;
            let dims = q.dim() == m.dim();
            v.push(CheckOutcome::new(
                format!("dim QA_3(S_{n}) = dim M_3({n})"),
                dims,
                if dims {
                    String::new()
                } else {
                    format!("{} vs {}", q.dim(), m.dim())
                },
            ));
            v.push(compare(
                format!("top H~ of QA_3(S_{n}) = M_3({n})"),
                &dq.ch(q.dim()),
                &dm.ch(m.dim()),
            ));
        }
        for n in [5, 6] {
            let q = quillen_complex(5, n, false)?;
            let c = pcycle_complex(5, n)?;
            let dq = equivariant_decomposition_with(&q, opts)?;
            let dc = equivariant_decomposition_with(&c, opts)?;
            let same = dq.degrees.len() == dc.degrees.len()
                && dq
                    .degrees
                    .iter()
                    .zip(&dc.degrees)
                    .all(|(a, b)| a.ch == b.ch);
            v.push(CheckOutcome::new(
                format!("H~_* of QA_5(S_{n}) = C_5({n})"),
                same,
                if same {
                    String::new()
                } else {
                    format!("{} vs {}", dq.to_text().trim(), dc.to_text().trim())
                },
            ));
        }
    }
    if all || suite == Suite::Fr {
        for n in 5..=7 {
            let d = formulas::direct_d_table(n, 5, 0, opts)?;
            let predicted = formulas::cycle_complex_char(n, 5, &d)?;
            let c = pcycle_complex(5, n)?;
            let direct = equivariant_decomposition_with(&c, opts)?.ch(c.dim());
            v.push(compare(
                format!("inflation formula = top H~ of C_5({n})"),
                &predicted,
                &direct,
            ));
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["equihom"];
        argv.extend_from_slice(args);
        let code = run_with_io(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn formula_fp_text() {
        let (code, out, _) = run_capture(&["formula", "fp", "--p", "3", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out, "s[3]\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["formula", "fp", "--p", "4"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(
            run_capture(&["build", "--complex", "quillen", "--p", "3", "--n", "10"]).0,
            2
        );
        assert_eq!(
            run_capture(&["equivariant", "--p", "3", "--n", "4", "--degree", "5"]).0,
            2
        );
    }

    #[test]
    fn equivariant_json() {
        let (code, out, _) = run_capture(&[
            "equivariant",
            "--complex",
            "matching",
            "--p",
            "3",
            "--n",
            "4",
            "--degree",
            "0",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim(),
            r#"{"complex":"M_3(4)","degrees":[{"i":0,"betti":3,"specht":[{"partition":[3,1],"mult":1}]}]}"#
        );
    }

    #[test]
    fn verify_table_passes() {
        let (code, out, _) = run_capture(&["verify-table"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("12/12 rows match\n"));
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let args = [
            "equivariant",
            "--complex",
            "pcycle",
            "--p",
            "5",
            "--n",
            "6",
            "--cache-dir",
            d,
        ];
        let first = run_capture(&args);
        let second = run_capture(&args);
        assert_eq!(first.0, 0);
        assert_eq!(first.1, second.1);
        let file = dir
            .path()
            .join(format!("complex-pcycle-p5-n6-v{COMPLEX_CACHE_VERSION}.txt"));
        assert!(file.exists());
        std::fs::write(&file, "garbage").unwrap();
        assert_eq!(run_capture(&args).1, first.1);
    }

    #[test]
    fn dump_coordinates() {
        let (code, out, _) = run_capture(&["dump", "--p", "2", "--n", "4", "--degree", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        assert!(out.lines().all(|l| l.split(' ').count() == 3));
    }
}
