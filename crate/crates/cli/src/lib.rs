//! The `fga` command line: Fox embeddings, bounded freeness certificates, the
//! metabelian counterexample report, leading-term inspection and p-adic
//! values.
//!
//! [`run`] takes the argument vector and returns the exit code with the text
//! that would be printed, so tests can drive the tool without a subprocess.

pub mod props;
pub mod syntax;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fga_core::exactnum::{padic_value, parse_bigint, parse_rational, CoefficientRing};
use fga_core::filtered::{
    certify_free_group_algebra, certify_theorem_hypotheses, lift_freeness_from_graded, theorem_case_select,
    FilteredModel, FreeKind, MnModel, NcSeriesModel, QmModel, TheoremCase,
};
use fga_core::fox::{certify_group_algebra_freeness, fox_embed_word};
use fga_core::freeobj::GroupWord;
use fga_core::metab::counterexample_report;
use fga_core::ogroup::{certify_free_monoid, normalize_free_monoid_pair, GroupTag};
use fga_core::{Certificate, Extended};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(name = "fga", version, about = "Exact certificates for free objects in filtered rings")]
pub struct Cli {
    /// Worker threads for parallel certifiers (default: all cores)
    #[arg(long, global = true, env = "FGA_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Image of a group word under x_i -> 1 + x_i, truncated at a degree
    Fox(FoxArgs),
    #[command(subcommand)]
    Certify(Certify),
    /// Report on the free metabelian group of rank two
    Counterexample(CounterexampleArgs),
    /// Value, leading term and graded coordinates of one element
    Graded(GradedArgs),
    /// p-adic value of an integer, and the valuation laws on a pair
    Padic(PadicArgs),
    /// Seeded random sweep of the filtration axioms
    Properties(PropertiesArgs),
}

#[derive(Debug, Subcommand)]
pub enum Certify {
    /// Freeness of the monoid generated by two group elements
    Monoid(MonoidArgs),
    /// Hypotheses and free group algebra conclusion of the division ring theorem
    Theorem(TheoremArgs),
    /// Free monoid pair -> normalised pair -> free group algebra
    Corollary(CorollaryArgs),
    /// Injectivity of the Fox embedding on reduced words
    Fox(FoxCertifyArgs),
    /// Freeness checked directly in the ring next to its graded shadow
    Lift(LiftArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct FoxArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long)]
    pub degree: u64,
    /// Number of letters (default: the largest letter used)
    #[arg(long)]
    pub vars: Option<usize>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct FoxCertifyArgs {
    #[arg(long, default_value_t = 2)]
    pub vars: usize,
    #[arg(long, default_value_t = 3)]
    pub length: usize,
    #[arg(long, default_value_t = 6)]
    pub degree: u64,
    /// Z, Q or Fp:p
    #[arg(long, default_value = "Q")]
    pub ring: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct MonoidArgs {
    #[arg(long, default_value = "freemagnus")]
    pub group: GroupTag,
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
    #[arg(long, allow_hyphen_values = true)]
    pub h: String,
    #[arg(long, default_value_t = 6)]
    pub length: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    /// Malcev-Neumann series over an ordered group
    Mn,
    /// Truncated noncommutative polynomials with a weighted degree
    Nc,
    /// Rational group algebra of the free metabelian group
    Qm,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum, default_value = "mn")]
    pub model: ModelKind,
    /// Value group: q, zlex:n or freemagnus (default: freemagnus for mn, q for nc)
    #[arg(long)]
    pub group: Option<GroupTag>,
    /// Coefficients: Q or Fp:p for mn, Z, Q or Fp:p for nc
    #[arg(long)]
    pub ring: Option<String>,
    /// nc only: ';'-separated variable weights in the value group
    #[arg(long, allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// nc only: "p:g", the p-adic coefficient value with g in the value group
    #[arg(long, allow_hyphen_values = true)]
    pub padic: Option<String>,
    /// nc only: truncation degree
    #[arg(long, default_value_t = 6)]
    pub truncation: u64,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// ';'-separated generators
    #[arg(long, allow_hyphen_values = true)]
    pub gens: String,
    #[arg(long, default_value_t = 3)]
    pub length: usize,
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[arg(long, default_value_t = 8)]
    pub budget: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CorollaryArgs {
    #[arg(long, default_value = "freemagnus")]
    pub group: GroupTag,
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
    #[arg(long, allow_hyphen_values = true)]
    pub h: String,
    #[arg(long, default_value_t = 6)]
    pub monoid_length: usize,
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[arg(long, default_value_t = 2)]
    pub length: usize,
    #[arg(long, default_value_t = 8)]
    pub budget: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub gens: String,
    /// monoid, group, algebra or group-algebra
    #[arg(long)]
    pub kind: FreeKind,
    #[arg(long, default_value_t = 3)]
    pub length: usize,
    #[arg(long, default_value_t = 8)]
    pub budget: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CounterexampleArgs {
    #[arg(long, default_value_t = 10)]
    pub monoid_length: usize,
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct GradedArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub element: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct PadicArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    /// The integer to evaluate
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// A second integer; checks the valuation laws on the pair
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Value of p
    #[arg(long, default_value = "1")]
    pub g: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct PropertiesArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[command(flatten)]
    pub out: Output,
}

/// What a run printed and how it ended: 0 on PASS, 1 on FAIL, 2 on usage
/// errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Core(fga_core::Error),
}

impl From<fga_core::Error> for Failure {
    fn from(e: fga_core::Error) -> Self {
        Failure::Core(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn flag<T>(name: &str, r: fga_core::Result<T>) -> Run<T> {
    r.map_err(|e| Failure::Usage(format!("invalid value for --{name}: {e}")))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let result = match pool.build() {
        Ok(pool) => pool.install(|| dispatch(&cli.command)),
        Err(e) => Err(Failure::Usage(format!("invalid value for --threads: {e}"))),
    };
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Core(e)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn emit(cert: &Certificate, out: &Output) -> (i32, String) {
    let text = if out.json { cert.to_json() } else { cert.to_string() };
    (if cert.is_pass() { 0 } else { 1 }, text + "\n")
}

fn emit_value(v: &serde_json::Value, text: String, out: &Output) -> (i32, String) {
    let s = if out.json { serde_json::to_string_pretty(v).expect("json") } else { text };
    (0, s + "\n")
}

fn dispatch(cmd: &Command) -> Run<(i32, String)> {
    match cmd {
        Command::Fox(a) => fox(a),
        Command::Certify(c) => {
            let (cert, out) = match c {
                Certify::Monoid(a) => (monoid(a)?, &a.out),
                Certify::Theorem(a) => (theorem(a)?, &a.out),
                Certify::Corollary(a) => (corollary(a)?, &a.out),
                Certify::Fox(a) => {
                    let ring = flag("ring", CoefficientRing::from_tag(&a.ring))?;
                    (certify_group_algebra_freeness(&ring, a.vars, a.length, a.degree)?, &a.out)
                }
                Certify::Lift(a) => (lift(a)?, &a.out),
            };
            Ok(emit(&cert, out))
        }
        Command::Counterexample(a) => Ok(emit(&counterexample_report(a.monoid_length, a.degree)?, &a.out)),
        Command::Graded(a) => graded(a),
        Command::Padic(a) => padic(a),
        Command::Properties(a) => Ok(emit(&props::property_report(a.seed, a.samples)?, &a.out)),
    }
}

fn fox(a: &FoxArgs) -> Run<(i32, String)> {
    let w: GroupWord = flag("word", a.word.parse())?;
    let n = a.vars.unwrap_or_else(|| w.max_gen().map_or(1, |g| g + 1));
    if w.max_gen().is_some_and(|g| g >= n) {
        return Err(Failure::Usage(format!("invalid value for --vars: {n} is below the letters used in --word")));
    }
    let s = fox_embed_word(&w, n, a.degree)?;
    let v = serde_json::to_value(s.to_json()).expect("json");
    Ok(emit_value(&v, s.to_string(), &a.out))
}

fn monoid(a: &MonoidArgs) -> Run<Certificate> {
    let g = flag("g", a.group.parse_element(&a.g))?;
    let h = flag("h", a.group.parse_element(&a.h))?;
    Ok(certify_free_monoid(&g, &h, a.length)?)
}

impl ModelArgs {
    fn group(&self) -> GroupTag {
        self.group.unwrap_or(match self.model {
            ModelKind::Nc => GroupTag::Q,
            _ => GroupTag::FreeMagnus,
        })
    }

    fn ring(&self, default: &str) -> Run<CoefficientRing> {
        flag("ring", CoefficientRing::from_tag(self.ring.as_deref().unwrap_or(default)))
    }

    fn mn(&self) -> Run<MnModel> {
        flag("ring", MnModel::new(self.group(), self.ring("Q")?))
    }

    fn nc(&self, inferred_vars: usize) -> Run<NcSeriesModel> {
        let weights = match &self.weights {
            Some(ws) => syntax::split_list(ws)
                .into_iter()
                .map(|w| flag("weights", self.group().parse_element(w)))
                .collect::<Run<Vec<_>>>()?,
            None => {
                let one = match self.group() {
                    GroupTag::Q => fga_core::ogroup::OrderedGroupElement::Q(fga_core::Rational::from_integer(1.into())),
                    _ => return Err(Failure::Usage("--weights is required unless --group is q".into())),
                };
                vec![one; inferred_vars.max(1)]
            }
        };
        let padic = match &self.padic {
            None => None,
            Some(s) => {
                let (p, g) = s.split_once(':').ok_or_else(|| Failure::Usage("invalid value for --padic: expected p:g".into()))?;
                Some((flag("padic", parse_bigint(p.trim()))?, flag("padic", self.group().parse_element(g.trim()))?))
            }
        };
        flag("weights", NcSeriesModel::new(self.ring("Z")?, weights, padic, self.truncation))
    }
}

fn nc_vars(list: &str) -> usize {
    list.split(|c: char| !c.is_ascii_alphanumeric())
        .filter_map(|t| t.strip_prefix('x').and_then(|i| i.parse::<usize>().ok()))
        .max()
        .unwrap_or(1)
}

/// Builds the model from `ModelArgs`, parses the `;`-separated `$list` given
/// by flag `$flag`, and evaluates `$body` with `$m` and `$xs` bound.
macro_rules! with_model {
    ($margs:expr, $list:expr, $flag:literal, |$m:ident, $xs:ident| $body:expr) => {{
        let list: &str = $list;
        match $margs.model {
            ModelKind::Mn => {
                let $m = $margs.mn()?;
                let $xs = syntax::split_list(list)
                    .into_iter()
                    .map(|s| flag($flag, syntax::mn_element(&$m, s)))
                    .collect::<Run<Vec<_>>>()?;
                $body
            }
            ModelKind::Nc => {
                let $m = $margs.nc(nc_vars(list))?;
                let $xs = syntax::split_list(list)
                    .into_iter()
                    .map(|s| flag($flag, syntax::nc_element(&$m, s)))
                    .collect::<Run<Vec<_>>>()?;
                $body
            }
            ModelKind::Qm => {
                let $m = QmModel::default();
                let $xs = syntax::split_list(list)
                    .into_iter()
                    .map(|s| flag($flag, syntax::qm_element(s)))
                    .collect::<Run<Vec<_>>>()?;
                $body
            }
        }
    }};
}

fn theorem_on<M: FilteredModel>(m: &M, xs: Vec<M::Elem>, l: usize, d: usize, e: usize) -> Run<Certificate> {
    if xs.is_empty() {
        return Err(Failure::Usage("invalid value for --gens: no generators".into()));
    }
    let hyp = certify_theorem_hypotheses(m, &xs, d)?;
    let (case, gens) = match theorem_case_select(m, &xs)? {
        TheoremCase::A => ("a".to_string(), xs),
        TheoremCase::B { z, generators } => (format!("b (z = {z})"), generators),
    };
    let algebra = certify_free_group_algebra(m, &gens, l, e)?;
    Ok(Certificate::pass("theorem", "the elements 1 + x generate a free group algebra at the given scale")
        .param("model", m.describe())
        .param("case", case)
        .param("L", l)
        .param("d", d)
        .param("e", e)
        .with_checks(vec![hyp, algebra]))
}

fn theorem(a: &TheoremArgs) -> Run<Certificate> {
    with_model!(a.model, &a.gens, "gens", |m, xs| theorem_on(&m, xs, a.length, a.degree, a.budget))
}

fn lift(a: &LiftArgs) -> Run<Certificate> {
    with_model!(a.model, &a.gens, "gens", |m, xs| Ok(lift_freeness_from_graded(&m, &xs, a.kind, a.length, a.budget)?))
}

fn corollary(a: &CorollaryArgs) -> Run<Certificate> {
    let g = flag("g", a.group.parse_element(&a.g))?;
    let h = flag("h", a.group.parse_element(&a.h))?;
    let base = Certificate::pass("corollary", "a free monoid pair yields a free group algebra at the given scale")
        .param("group", a.group.to_string())
        .param("g", g.to_string())
        .param("h", h.to_string())
        .param("monoid_L", a.monoid_length)
        .param("d", a.degree)
        .param("L", a.length)
        .param("e", a.budget);
    let pair = match normalize_free_monoid_pair(&g, &h, a.monoid_length) {
        Ok(p) => p,
        Err(e) => {
            let failed = Certificate::fail("normalize", "normalise the free monoid pair", json!({ "error": e.to_string() }));
            return Ok(base.with_checks(vec![failed]));
        }
    };
    let monoid = certify_free_monoid(&pair.a, &pair.b, a.monoid_length)?;
    let m = MnModel::new(a.group, CoefficientRing::rationals())?;
    let one = fga_core::Rational::from_integer(1.into());
    let xs = vec![m.monomial(pair.a.clone(), one.clone())?, m.monomial(pair.b.clone(), one)?];
    let hyp = certify_theorem_hypotheses(&m, &xs, a.degree)?;
    let algebra = certify_free_group_algebra(&m, &xs, a.length, a.budget)?;
    Ok(base
        .param("a", pair.a.to_string())
        .param("b", pair.b.to_string())
        .param("branch", pair.branch)
        .with_checks(vec![monoid, hyp, algebra]))
}

fn graded_on<M: FilteredModel>(m: &M, f: &M::Elem, out: &Output) -> Run<(i32, String)> {
    let value = m.value(f)?;
    let (lt, coords) = match m.leading_term(f) {
        Ok(lt) => {
            let coords: Vec<_> = m
                .graded_coordinates(&lt)?
                .into_iter()
                .map(|(k, c)| json!({ "key": k.to_string(), "coeff": c.to_string() }))
                .collect();
            (json!(lt.to_string()), json!(coords))
        }
        Err(e) if m.is_zero(f) => (json!(null), json!(e.to_string())),
        Err(e) => (json!(format!("unavailable: {e}")), json!(null)),
    };
    let v = json!({
        "model": m.describe(),
        "element": f.to_string(),
        "value": value.to_string(),
        "value_is_lower_bound": m.value_is_lower_bound(),
        "leading_term": lt,
        "graded": coords,
    });
    let text = format!(
        "element: {f}\nvalue: {value}{}\nleading term: {}",
        if m.value_is_lower_bound() { " (lower bound)" } else { "" },
        lt.as_str().unwrap_or("none")
    );
    Ok(emit_value(&v, text, out))
}

fn graded(a: &GradedArgs) -> Run<(i32, String)> {
    with_model!(a.model, &a.element, "element", |m, xs| match xs.as_slice() {
        [f] => graded_on(&m, f, &a.out),
        _ => Err(Failure::Usage("invalid value for --element: expected exactly one element".into())),
    })
}

fn padic(a: &PadicArgs) -> Run<(i32, String)> {
    let p = flag("p", parse_bigint(&a.p))?;
    let g = flag("g", parse_rational(&a.g))?;
    let x = flag("a", parse_bigint(&a.a))?;
    let vx = flag("p", padic_value(&x, &p, &g))?;
    let Some(b) = &a.b else {
        let v = json!({ "p": p.to_string(), "g": g.to_string(), "a": x.to_string(), "value": vx.to_string() });
        return Ok(emit_value(&v, format!("v_{p}({x}) = {vx}"), &a.out));
    };
    let y = flag("b", parse_bigint(b))?;
    let vy = padic_value(&y, &p, &g)?;
    let vs = padic_value(&(&x + &y), &p, &g)?;
    let vp = padic_value(&(&x * &y), &p, &g)?;
    let zero = fga_core::BigInt::from(0);
    let check = |kind: &str, ok: bool, stmt: &str, w: serde_json::Value| {
        Certificate::from_witness(kind, stmt, (!ok).then_some(w))
    };
    let v1 = check(
        "V.1",
        vx.is_infinite() == (x == zero) && vy.is_infinite() == (y == zero),
        "v(x) = inf iff x = 0",
        json!({ "v(a)": vx.to_string(), "v(b)": vy.to_string() }),
    );
    let v2 = check(
        "V.2",
        vs >= vx.clone().min(vy.clone()),
        "v(a + b) >= min(v(a), v(b))",
        json!({ "v(a+b)": vs.to_string() }),
    );
    let sum: Extended<_> = vx.clone() + vy.clone();
    let v3 = check("V.3", vp == sum, "v(ab) = v(a) + v(b)", json!({ "v(ab)": vp.to_string(), "sum": sum.to_string() }));
    let cert = Certificate::pass("padic-valuation", "valuation laws on the pair")
        .param("p", p.to_string())
        .param("g", g.to_string())
        .param("a", x.to_string())
        .param("b", y.to_string())
        .with_checks(vec![v1, v2, v3]);
    Ok(emit(&cert, &a.out))
}
