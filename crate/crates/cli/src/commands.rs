use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;
use weylkit_core::ext::{
    build_hom_complex, check_hypotheses, verify_complex_isomorphism, verify_theorem, Target, Theorem, Verdict,
};
use weylkit_core::resolutions::SyResolution;
use weylkit_core::schur::xi_product;
use weylkit_core::shapes::{enumerate_partitions, enumerate_sst};
use weylkit_core::weyl::{gram_matrix, kostka, p_kostka};
use weylkit_core::{Composition, MatrixWeight, Partition, PrimeField, Tableau, WeightSpaceModel};

use crate::args::{
    CacheArgs, ExtArgs, Format, KostkaArgs, OutputArgs, PairArgs, ResolveArgs, SchurMulArgs, StraightenArgs,
    SurveyArgs, TargetArg, VerifyArgs, WeightArgs,
};
use crate::cache::{cached, Cache};
use crate::error::{CliError, CliResult, EXIT_FAIL, EXIT_OK};
use crate::record::{annotations, RecordKey, ResultRecord};

/// Rendered command output and the exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, exit_code: EXIT_OK }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_partition(s: &str, what: &str) -> CliResult<Partition> {
    s.parse().map_err(|e| usage(format!("--{what}: {e}")))
}

fn parse_composition(s: &str, what: &str) -> CliResult<Composition> {
    s.parse().map_err(|e| usage(format!("--{what}: {e}")))
}

fn pad_partition(x: &Partition, n: usize, what: &str) -> CliResult<Partition> {
    x.padded(n).map_err(|e| usage(format!("--{what}: {e}")))
}

/// `λ` and `μ` padded to the common `n`.
pub fn resolve_pair(pair: &PairArgs) -> CliResult<(Partition, Partition)> {
    let lam = parse_partition(&pair.lambda, "lambda")?;
    let mu = parse_partition(&pair.mu, "mu")?;
    let n = pair.n.unwrap_or(lam.n().max(mu.n()));
    let (lam, mu) = (pad_partition(&lam, n, "lambda")?, pad_partition(&mu, n, "mu")?);
    if lam.r() != mu.r() {
        return Err(usage(format!("λ = {lam} and μ = {mu} have different sizes")));
    }
    Ok((lam, mu))
}

fn target_of(t: TargetArg) -> Target {
    match t {
        TargetArg::Weyl => Target::Weyl,
        TargetArg::Simple => Target::Simple,
    }
}

fn open_cache(args: &CacheArgs) -> CliResult<Option<Cache>> {
    args.cache_dir.as_deref().map(Cache::open).transpose()
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

pub fn compute_ext(
    p: u64,
    lam: &Partition,
    mu: &Partition,
    target: Target,
    max_degree: usize,
    d: Option<u32>,
) -> CliResult<ResultRecord> {
    let start = Instant::now();
    let c = build_hom_complex(lam, mu, p, target, max_degree)?;
    let mut key = RecordKey::new(p, lam, mu, target.as_str(), max_degree);
    key.d = d;
    let mut rec = ResultRecord::new(key, c.ext_dims());
    rec.complete = Some(c.is_complete());
    rec.euler = c.complex.euler_characteristic();
    if let Some(d) = d {
        let theorem = match target {
            Target::Weyl => Theorem::WeylPeriodicity,
            Target::Simple => Theorem::SimplePeriodicity,
        };
        rec.hypotheses = Some(check_hypotheses(lam, mu, p, d, theorem)?.flags);
    }
    rec.annotations = annotations(p, lam, mu, max_degree);
    rec.timing.wall_time_ms = elapsed_ms(start);
    Ok(rec)
}

pub fn compute_verify(
    theorem: Theorem,
    p: u64,
    d: u32,
    lam: &Partition,
    mu: &Partition,
    max_degree: usize,
) -> CliResult<ResultRecord> {
    let start = Instant::now();
    let report = verify_theorem(theorem, lam, mu, p, d, max_degree)?;
    let degrees = report.dims.len().saturating_sub(1);
    let mut key = RecordKey::new(p, lam, mu, report.target.as_str(), degrees);
    key.theorem = Some(theorem.code().to_string());
    key.d = Some(d);
    let mut shifted_key = RecordKey::new(p, &report.shifted_lam, &report.shifted_mu, report.target.as_str(), degrees);
    shifted_key.theorem = key.theorem.clone();
    shifted_key.d = Some(d);
    let mut verdict = report.verdict;
    let mut rec = ResultRecord::new(key, report.dims.clone());
    if theorem == Theorem::WeylPeriodicity && report.hypotheses.hold() {
        let iso = verify_complex_isomorphism(lam, mu, p, d, max_degree)?;
        if !iso.identical {
            verdict = Verdict::Fail;
        }
        rec.complex_isomorphism = Some(iso.identical);
    }
    rec.hypotheses = Some(report.hypotheses.flags_through(degrees));
    rec.verdict = Some(verdict.as_str().to_string());
    rec.shifted_key = Some(shifted_key);
    rec.shifted_dims = Some(report.shifted_dims);
    rec.annotations = annotations(p, lam, mu, degrees);
    rec.timing.wall_time_ms = elapsed_ms(start);
    Ok(rec)
}

fn fmt_parts(xs: &[u32]) -> String {
    format!("({})", xs.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

fn ext_table(rec: &ResultRecord) -> String {
    let k = &rec.key;
    let module = if k.target == "simple" { "L" } else { "Δ" };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "Ext^i(Δ{}, {module}{}) over F_{}, n={}, r={}",
        fmt_parts(&k.lambda),
        fmt_parts(&k.mu),
        k.p,
        k.n,
        k.r
    );
    let _ = writeln!(s, "{:>3}  {:>5}", "i", "dim");
    for (i, d) in rec.ext_dims.iter().enumerate() {
        let _ = writeln!(s, "{i:>3}  {d:>5}");
    }
    if let Some(h) = &rec.hypotheses {
        for (name, v) in h {
            let _ = writeln!(s, "{name}: {v}");
        }
    }
    if rec.complete == Some(false) {
        let _ = writeln!(s, "(resolution truncated at degree {})", k.max_degree + 1);
    }
    for a in &rec.annotations {
        let _ = writeln!(s, "note: {} in degrees {:?}", a.label, a.degrees);
    }
    s
}

fn verify_table(rec: &ResultRecord) -> String {
    let k = &rec.key;
    let sk = rec.shifted_key.as_ref().expect("verify records carry a shifted key");
    let shifted = rec.shifted_dims.as_deref().unwrap_or_default();
    let mut s = String::new();
    let theorem: Theorem = k.theorem.as_deref().unwrap_or_default().parse().expect("stored theorem code");
    let _ = writeln!(
        s,
        "theorem {} ({}), p={}, d={}, target {}",
        theorem.code(),
        theorem.name(),
        k.p,
        k.d.unwrap_or(1),
        k.target
    );
    let _ = writeln!(
        s,
        "λ={} μ={}  vs  λ⁺={} μ⁺={}",
        fmt_parts(&k.lambda),
        fmt_parts(&k.mu),
        fmt_parts(&sk.lambda),
        fmt_parts(&sk.mu)
    );
    for (name, v) in rec.hypotheses.iter().flatten() {
        let _ = writeln!(s, "{name}: {v}");
    }
    let _ = writeln!(s, "{:>3}  {:>5}  {:>5}  equal", "i", "dim", "dim⁺");
    for (i, d) in rec.ext_dims.iter().enumerate() {
        let e = shifted.get(i).copied().unwrap_or(0);
        let _ = writeln!(s, "{i:>3}  {d:>5}  {e:>5}  {}", if *d == e { "yes" } else { "no" });
    }
    if let Some(iso) = rec.complex_isomorphism {
        let _ = writeln!(s, "complex isomorphism: {}", if iso { "identical" } else { "differs" });
    }
    let _ = writeln!(s, "verdict: {}", rec.verdict.as_deref().unwrap_or("?"));
    s
}

fn render(format: Format, rec: &ResultRecord, table: fn(&ResultRecord) -> String) -> String {
    match format {
        Format::Json => rec.to_line() + "\n",
        Format::Table => table(rec),
    }
}

pub fn cmd_ext(args: &ExtArgs) -> CliResult<Output> {
    let (lam, mu) = resolve_pair(&args.pair)?;
    let target = target_of(args.target);
    let cache = open_cache(&args.cache)?;
    let mut key = RecordKey::new(args.pair.p, &lam, &mu, target.as_str(), args.pair.max_degree);
    key.d = args.d;
    let rec = cached(cache.as_ref(), &key, args.cache.recheck, || {
        compute_ext(args.pair.p, &lam, &mu, target, args.pair.max_degree, args.d)
    })?;
    Ok(Output::ok(render(args.output.format, &rec, ext_table)))
}

pub fn cmd_verify(args: &VerifyArgs) -> CliResult<Output> {
    let theorem: Theorem = args.theorem.parse().map_err(|e| usage(format!("--theorem: {e}")))?;
    let (lam, mu) = resolve_pair(&args.pair)?;
    let cache = open_cache(&args.cache)?;
    let degrees = if theorem == Theorem::HomBound { 0 } else { args.pair.max_degree };
    let mut key = RecordKey::new(args.pair.p, &lam, &mu, theorem.target().as_str(), degrees);
    key.theorem = Some(theorem.code().to_string());
    key.d = Some(args.d);
    let rec = cached(cache.as_ref(), &key, args.cache.recheck, || {
        compute_verify(theorem, args.pair.p, args.d, &lam, &mu, args.pair.max_degree)
    })?;
    let exit_code = if rec.verdict.as_deref() == Some(Verdict::Fail.as_str()) { EXIT_FAIL } else { EXIT_OK };
    Ok(Output {
        text: render(args.output.format, &rec, verify_table),
        exit_code,
    })
}

/// All `(p, λ, μ)` with `λ ⊴ μ`, in output order.
pub fn survey_grid(primes: &[u64], n: usize, r_min: u32, r_max: u32) -> Vec<(u64, Partition, Partition)> {
    let mut out = Vec::new();
    for &p in primes {
        for r in r_min..=r_max {
            let parts = enumerate_partitions(n, r);
            for lam in &parts {
                for mu in parts.iter().filter(|mu| mu.dominates(lam)) {
                    out.push((p, lam.clone(), mu.clone()));
                }
            }
        }
    }
    out
}

pub fn cmd_survey(args: &SurveyArgs) -> CliResult<Output> {
    for &p in &args.p {
        PrimeField::new(p).map_err(|e| usage(format!("--p: {e}")))?;
    }
    let target = target_of(args.target);
    let cache = open_cache(&args.cache)?;
    let grid = survey_grid(&args.p, args.n, args.r_min, args.r_max);
    let results: Vec<CliResult<ResultRecord>> = grid
        .par_iter()
        .map(|(p, lam, mu)| {
            let key = RecordKey::new(*p, lam, mu, target.as_str(), args.max_degree);
            cached(cache.as_ref(), &key, args.cache.recheck, || {
                compute_ext(*p, lam, mu, target, args.max_degree, None)
            })
        })
        .collect();
    let mut text = String::new();
    let mut first_error = None;
    for (res, (p, lam, mu)) in results.into_iter().zip(&grid) {
        match res {
            Ok(rec) => {
                text.push_str(&rec.to_line());
                text.push('\n');
            }
            Err(e) => {
                eprintln!("p={p} λ={lam} μ={mu}: {e}");
                first_error.get_or_insert(e);
            }
        }
    }
    match first_error {
        // Flush what was computed before reporting the failure.
        Some(e) => {
            write_output(args.out.as_deref(), &text)?;
            Err(e)
        }
        None => Ok(Output::ok(text)),
    }
}

pub fn cmd_straighten(args: &StraightenArgs) -> CliResult<Output> {
    let field = PrimeField::new(args.p).map_err(|e| usage(format!("--p: {e}")))?;
    let mu = parse_partition(&args.mu, "mu")?;
    let rough = Tableau::parse(&args.tableau, None).map_err(|e| usage(format!("--tableau: {e}")))?;
    let n = args.n.unwrap_or(mu.n().max(rough.n()));
    let mu = pad_partition(&mu, n, "mu")?;
    let t = Tableau::parse(&args.tableau, Some(n)).map_err(|e| usage(format!("--tableau: {e}")))?;
    if t.shape() != &mu {
        return Err(usage(format!("tableau {t} has shape {}, not {mu}", t.shape())));
    }
    let model = WeightSpaceModel::build(field, &mu, &t.weight())?;
    let coords = model.straighten(&t)?;
    let terms: Vec<(String, u32)> = model
        .sst()
        .iter()
        .zip(&coords)
        .filter(|(_, &c)| c != 0)
        .map(|(s, &c)| (s.to_string(), c))
        .collect();
    let text = match args.output.format {
        Format::Json => {
            let terms: Vec<_> = terms.iter().map(|(t, c)| json!({"tableau": t, "coefficient": c})).collect();
            json!({"p": args.p, "mu": mu.parts(), "tableau": t.to_string(), "terms": terms}).to_string() + "\n"
        }
        Format::Table if terms.is_empty() => "0\n".to_string(),
        Format::Table => {
            terms.iter().map(|(t, c)| format!("{c}*[{t}]")).collect::<Vec<_>>().join(" + ") + "\n"
        }
    };
    Ok(Output::ok(text))
}

fn weight_pair(mu: &str, alpha: &str, n: Option<usize>) -> CliResult<(Partition, Composition)> {
    let mu = parse_partition(mu, "mu")?;
    let alpha = parse_composition(alpha, "alpha")?;
    let n = n.unwrap_or(mu.n().max(alpha.n()));
    let mu = pad_partition(&mu, n, "mu")?;
    let alpha = alpha.padded(n).map_err(|e| usage(format!("--alpha: {e}")))?;
    if mu.r() != alpha.r() {
        return Err(usage(format!("μ = {mu} and α = {alpha} have different sizes")));
    }
    Ok((mu, alpha))
}

fn number_output(format: Format, name: &str, value: usize, fields: serde_json::Value) -> String {
    match format {
        Format::Table => format!("{value}\n"),
        Format::Json => {
            let mut obj = fields;
            obj[name] = json!(value);
            obj.to_string() + "\n"
        }
    }
}

pub fn cmd_gram(args: &WeightArgs) -> CliResult<Output> {
    let (mu, alpha) = weight_pair(&args.mu, &args.alpha, args.n)?;
    let g = gram_matrix(&mu, &alpha, args.p)?;
    let rows: Vec<Vec<u32>> = (0..g.gram.rows()).map(|r| g.gram.row(r).to_vec()).collect();
    let sst: Vec<String> = enumerate_sst(&mu, &alpha).iter().map(Tableau::to_string).collect();
    let dim = rows.len();
    let text = match args.output.format {
        Format::Json => json!({
            "p": args.p, "mu": mu.parts(), "alpha": alpha.parts(), "basis": sst,
            "gram": rows, "radical_dim": g.radical_dim, "simple_dim": dim - g.radical_dim,
        })
        .to_string()
            + "\n",
        Format::Table => {
            let mut s = String::new();
            for (t, row) in sst.iter().zip(&rows) {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                let _ = writeln!(s, "{:<16}{}", t, cells.join(""));
            }
            let _ = writeln!(s, "radical dim: {}", g.radical_dim);
            let _ = writeln!(s, "dim L(μ)_α: {}", dim - g.radical_dim);
            s
        }
    };
    Ok(Output::ok(text))
}

pub fn cmd_kostka(args: &KostkaArgs) -> CliResult<Output> {
    let (mu, alpha) = weight_pair(&args.mu, &args.alpha, args.n)?;
    let k = kostka(&mu, &alpha);
    Ok(Output::ok(number_output(
        args.output.format,
        "kostka",
        k,
        json!({"mu": mu.parts(), "alpha": alpha.parts()}),
    )))
}

pub fn cmd_p_kostka(args: &WeightArgs) -> CliResult<Output> {
    let (mu, alpha) = weight_pair(&args.mu, &args.alpha, args.n)?;
    let k = p_kostka(&mu, &alpha, args.p)?;
    Ok(Output::ok(number_output(
        args.output.format,
        "p_kostka",
        k,
        json!({"p": args.p, "mu": mu.parts(), "alpha": alpha.parts()}),
    )))
}

pub fn cmd_schur_mul(args: &SchurMulArgs) -> CliResult<Output> {
    let w: MatrixWeight = args.omega.parse().map_err(|e| usage(format!("--omega: {e}")))?;
    let pi: MatrixWeight = args.pi.parse().map_err(|e| usage(format!("--pi: {e}")))?;
    if w.n() != pi.n() || w.total() != pi.total() {
        return Err(usage("ω and π must be n×n matrices with the same total"));
    }
    let product = xi_product(&w, &pi, args.p)?;
    let text = match args.output.format {
        Format::Table => format!("{product}\n"),
        Format::Json => {
            let terms: Vec<_> =
                product.terms().map(|(m, c)| json!({"xi": m.to_string(), "coefficient": c})).collect();
            json!({"p": args.p, "omega": w.to_string(), "pi": pi.to_string(), "terms": terms}).to_string() + "\n"
        }
    };
    Ok(Output::ok(text))
}

pub fn cmd_resolve_info(args: &ResolveArgs) -> CliResult<Output> {
    let lam = parse_partition(&args.lambda, "lambda")?;
    let lam = pad_partition(&lam, args.n.unwrap_or(lam.n()), "lambda")?;
    let res = SyResolution::new(PrimeField::new(2).expect("2 is prime"), &lam);
    let last = args.max_degree.unwrap_or(2 * lam.r() as usize);
    let mut degrees = Vec::new();
    for k in 0..=last {
        let mult = res.multiplicities(k);
        if mult.is_empty() {
            break;
        }
        degrees.push((k, mult));
    }
    let text = match args.output.format {
        Format::Json => {
            let ds: Vec<_> = degrees
                .iter()
                .map(|(k, m)| {
                    let ms: Vec<_> = m.iter().map(|(a, c)| json!({"alpha": a.parts(), "count": c})).collect();
                    json!({"k": k, "summands": m.iter().map(|(_, c)| c).sum::<usize>(), "multiplicities": ms})
                })
                .collect();
            json!({"lambda": lam.parts(), "degrees": ds}).to_string() + "\n"
        }
        Format::Table => {
            let mut s = format!("chain resolution of Δ{}\n", fmt_parts(lam.parts()));
            let _ = writeln!(s, "{:>3}  {:>8}  multiplicities", "k", "summands");
            for (k, m) in &degrees {
                let total: usize = m.iter().map(|(_, c)| c).sum();
                let ms: Vec<String> = m.iter().map(|(a, c)| format!("{}:{c}", fmt_parts(a.parts()))).collect();
                let _ = writeln!(s, "{k:>3}  {total:>8}  {}", ms.join(" "));
            }
            s
        }
    };
    Ok(Output::ok(text))
}

pub fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// The `--out` target of a command, if it has one.
pub fn output_path(command: &crate::args::Command) -> Option<&Path> {
    use crate::args::Command::*;
    let output: Option<&OutputArgs> = match command {
        Ext(a) => Some(&a.output),
        Verify(a) => Some(&a.output),
        Survey(a) => return a.out.as_deref(),
        Straighten(a) => Some(&a.output),
        Gram(a) | PKostka(a) => Some(&a.output),
        Kostka(a) => Some(&a.output),
        SchurMul(a) => Some(&a.output),
        ResolveInfo(a) => Some(&a.output),
    };
    output.and_then(|o| o.out.as_deref())
}

pub fn run(command: &crate::args::Command) -> CliResult<Output> {
    use crate::args::Command::*;
    match command {
        Ext(a) => cmd_ext(a),
        Verify(a) => cmd_verify(a),
        Survey(a) => cmd_survey(a),
        Straighten(a) => cmd_straighten(a),
        Gram(a) => cmd_gram(a),
        Kostka(a) => cmd_kostka(a),
        PKostka(a) => cmd_p_kostka(a),
        SchurMul(a) => cmd_schur_mul(a),
        ResolveInfo(a) => cmd_resolve_info(a),
    }
}
