//! `puiseux`: command-line front end. Exit status 0 on success, 1 on domain
//! errors, 2 on usage errors; `--json` prints exactly one JSON document.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use puiseux::families::{
    approximate, classify, cyclic_contains, cyclic_factorizations, cyclic_trade, dense_atom_monoid,
    disjoint_prime_noniso, generalized_cyclic_embed, kprimary_antimatter_witness, padic_candidate_atoms,
    sum_kprimary_atom_check, CyclicMembership, FamilySpec, NonIsomorphism, TargetSeq, TradeDirection, Verdict,
};
use puiseux::{
    run_claims, Error, Factorization, FgMonoid, Identity, NonNegRational, NumericalSemigroup, PositiveRational,
    VerifierParams,
};

#[derive(Parser)]
#[command(name = "puiseux", version, about = "Exact computation with Puiseux monoids and numerical semigroups")]
struct Cli {
    /// print one JSON document instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// numerical semigroups over positive integers
    #[command(subcommand)]
    Ns(NsCmd),
    /// finitely generated Puiseux monoids
    #[command(subcommand)]
    Fg(FgCmd),
    /// infinite generating families given by a JSON spec
    #[command(subcommand)]
    Family(FamilyCmd),
    /// monoids generated by the powers of a rational
    #[command(subcommand)]
    Cyclic(CyclicCmd),
    /// constructive witnesses
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// claim verifier
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
struct IntGens {
    /// comma-separated positive integers
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<BigUint>,
}

#[derive(Args)]
struct IntGensX {
    #[command(flatten)]
    gens: IntGens,
    #[arg(long)]
    x: BigUint,
}

#[derive(Subcommand)]
enum NsCmd {
    Mingens(IntGens),
    Frobenius(IntGens),
    Member(IntGensX),
    Factorize(IntGensX),
}

#[derive(Args)]
struct RatGens {
    /// comma-separated rationals `n/d` or integers
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<PositiveRational>,
}

#[derive(Args)]
struct RatGensX {
    #[command(flatten)]
    gens: RatGens,
    #[arg(long)]
    x: NonNegRational,
}

#[derive(Args)]
struct IsoArgs {
    #[command(flatten)]
    gens: RatGens,
    /// generators of the second monoid
    #[arg(long, value_delimiter = ',', required = true)]
    other: Vec<PositiveRational>,
}

#[derive(Subcommand)]
enum FgCmd {
    Atoms(RatGens),
    Member(RatGensX),
    Factorize(RatGensX),
    Lengths(RatGensX),
    Support(RatGensX),
    Iso(IsoArgs),
}

#[derive(Args)]
struct SpecArg {
    /// FamilySpec as a JSON file path or an inline JSON object
    #[arg(long)]
    spec: String,
}

#[derive(Args)]
struct SpecN {
    #[command(flatten)]
    spec: SpecArg,
    #[arg(long)]
    n: u64,
}

#[derive(Args)]
struct ApproxArgs {
    #[command(flatten)]
    spec: SpecArg,
    #[arg(long)]
    target: PositiveRational,
    #[arg(long)]
    eps: PositiveRational,
}

#[derive(Args)]
struct DenseArgs {
    /// comma-separated targets; the Calkin-Wilf order when omitted
    #[arg(long, value_delimiter = ',')]
    target: Vec<NonNegRational>,
    /// partition class of the denominator primes
    #[arg(long, default_value_t = 1)]
    class: u32,
    #[arg(long)]
    n: u64,
}

#[derive(Args)]
struct NonisoArgs {
    #[command(flatten)]
    spec: SpecArg,
    /// second FamilySpec, file path or inline JSON
    #[arg(long)]
    other: String,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// the n-th generator
    Gen(SpecN),
    /// the monoid generated by the first n generators
    Truncate(SpecN),
    Classify(SpecArg),
    Approx(ApproxArgs),
    DenseAtoms(DenseArgs),
    Noniso(NonisoArgs),
}

#[derive(Args)]
struct CyclicX {
    #[arg(long)]
    r: PositiveRational,
    #[arg(long)]
    x: NonNegRational,
    /// largest exponent searched
    #[arg(long, default_value_t = 8)]
    cap: u32,
}

#[derive(Args)]
struct TradeArgs {
    #[arg(long)]
    r: PositiveRational,
    /// multiplicities of r, r^2, ... separated by commas
    #[arg(long, value_delimiter = ',', required = true)]
    z: Vec<BigUint>,
    /// exponent of the lower power involved
    #[arg(long)]
    t: u32,
    #[arg(long, value_parser = ["up", "down"])]
    dir: String,
}

#[derive(Args)]
struct EmbedArgs {
    #[command(flatten)]
    gens: RatGens,
    /// 1-based generator index
    #[arg(long)]
    i: usize,
    #[arg(long)]
    m: u32,
}

#[derive(Subcommand)]
enum CyclicCmd {
    Member(CyclicX),
    Factorize(CyclicX),
    Trade(TradeArgs),
    Embed(EmbedArgs),
}

#[derive(Args)]
struct KprimaryArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    #[arg(long, default_value_t = 100_000)]
    limit: u64,
}

#[derive(Args)]
struct SumkArgs {
    #[arg(long)]
    k: u32,
    /// 1-based prime indices
    #[arg(long, value_delimiter = ',', required = true)]
    s: Vec<u64>,
    #[arg(long)]
    n: u64,
}

#[derive(Subcommand)]
enum WitnessCmd {
    Kprimary(KprimaryArgs),
    PadicAtoms(SpecN),
    SumkAtom(SumkArgs),
}

#[derive(Args)]
struct RunArgs {
    /// claim ids, or `all`
    #[arg(long, value_delimiter = ',', default_value = "all")]
    claims: Vec<String>,
    #[arg(long, default_value_t = VerifierParams::default().truncation)]
    truncation: u64,
    #[arg(long, default_value_t = VerifierParams::default().exponent_cap)]
    cap: u32,
    #[arg(long, default_value_t = VerifierParams::default().search_limit)]
    limit: u64,
    /// also write the JSON report to this file
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    Run(RunArgs),
}

/// A finished command: the plain rendering and the JSON document.
struct Output {
    plain: String,
    json: Value,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<Output, Failure>;

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn uint_json(x: &BigUint) -> Value {
    x.to_u64().map_or_else(|| Value::from(x.to_string()), Value::from)
}

fn int_json(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::from(x.to_string()), Value::from)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

fn load_spec(arg: &str) -> std::result::Result<FamilySpec, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("cannot read spec file {arg}: {e}")))?
    };
    let spec: FamilySpec =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid family spec: {e}")))?;
    spec.validate()?;
    Ok(spec)
}

fn fg(gens: &RatGens) -> std::result::Result<FgMonoid, Failure> {
    Ok(FgMonoid::new(gens.gens.clone())?)
}

fn ns(gens: &IntGens) -> std::result::Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::new(gens.gens.clone())?)
}

fn factorizations_output(x: &NonNegRational, zs: &[Factorization]) -> Output {
    let plain = zs.iter().map(|z| Identity::factorization(x.clone(), z).to_string()).collect::<Vec<_>>();
    Output { plain: plain.join("\n"), json: to_json(&zs) }
}

fn run_ns(cmd: &NsCmd) -> Outcome {
    Ok(match cmd {
        NsCmd::Mingens(a) => {
            let min = ns(a)?.minimal_generators();
            Output { plain: join(&min), json: Value::from(min.iter().map(uint_json).collect::<Vec<_>>()) }
        }
        NsCmd::Frobenius(a) => {
            let f = ns(a)?.frobenius()?;
            Output { plain: f.to_string(), json: int_json(&f) }
        }
        NsCmd::Member(a) => {
            let s = ns(&a.gens)?;
            let witness = s.witness(&a.x);
            let plain = match &witness {
                Some(c) => format!("true\n{}", representation(&s, &a.x, c)),
                None => "false".into(),
            };
            let json = json!({
                "member": witness.is_some(),
                "witness": witness.map(|c| c.iter().map(uint_json).collect::<Vec<_>>()),
            });
            Output { plain, json }
        }
        NsCmd::Factorize(a) => {
            let s = ns(&a.gens)?;
            let reps = s.representations(&a.x);
            let plain: Vec<String> = reps.iter().map(|c| representation(&s, &a.x, c)).collect();
            let json = reps.iter().map(|c| c.iter().map(uint_json).collect::<Vec<_>>()).collect::<Vec<_>>();
            Output {
                plain: plain.join("\n"),
                json: json!({ "generators": to_strings(s.generators()), "representations": json }),
            }
        }
    })
}

fn to_strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// `x = c1*g1 + c2*g2 + ...`, skipping zero coefficients.
fn representation(s: &NumericalSemigroup, x: &BigUint, coeffs: &[BigUint]) -> String {
    let terms: Vec<String> =
        coeffs.iter().zip(s.generators()).filter(|(c, _)| c.bits() > 0).map(|(c, g)| format!("{c}*{g}")).collect();
    if terms.is_empty() {
        format!("{x} = 0")
    } else {
        format!("{x} = {}", terms.join(" + "))
    }
}

fn run_fg(cmd: &FgCmd) -> Outcome {
    Ok(match cmd {
        FgCmd::Atoms(a) => {
            let atoms = fg(a)?.atoms();
            Output { plain: join(&atoms), json: to_json(&atoms) }
        }
        FgCmd::Member(a) => {
            let m = fg(&a.gens)?;
            let witness = m.membership_witness(&a.x);
            let plain = match &witness {
                Some(z) => format!("true\n{}", Identity::factorization(a.x.clone(), z)),
                None => "false".into(),
            };
            Output { plain, json: json!({ "member": witness.is_some(), "witness": witness }) }
        }
        FgCmd::Factorize(a) => factorizations_output(&a.x, &fg(&a.gens)?.factorizations(&a.x)),
        FgCmd::Lengths(a) => {
            let lengths: Vec<BigUint> = fg(&a.gens)?.lengths(&a.x).into_iter().collect();
            Output { plain: join(&lengths), json: Value::from(lengths.iter().map(uint_json).collect::<Vec<_>>()) }
        }
        FgCmd::Support(a) => {
            let support = fg(&a.gens)?.atom_support(&a.x);
            Output { plain: join(&support), json: to_json(&support) }
        }
        FgCmd::Iso(a) => {
            let r = fg(&a.gens)?.isomorphism_witness(&FgMonoid::new(a.other.clone())?);
            let plain = r.as_ref().map_or_else(|| "none".to_string(), ToString::to_string);
            Output { plain, json: to_json(&r) }
        }
    })
}

fn verdict_line(name: &str, v: &Verdict) -> String {
    let value = serde_json::to_value(v.value).expect("serializes");
    let mut line = format!("{name}: {}", value.as_str().unwrap_or_default());
    if let Some(c) = &v.citation {
        line.push_str(&format!(" ({c})"));
    }
    if v.asserted {
        line.push_str(" [asserted]");
    }
    line
}

fn run_family(cmd: &FamilyCmd) -> Outcome {
    Ok(match cmd {
        FamilyCmd::Gen(a) => {
            let g = load_spec(&a.spec.spec)?.generator_at(a.n)?;
            Output { plain: g.to_string(), json: to_json(&g) }
        }
        FamilyCmd::Truncate(a) => {
            let m = load_spec(&a.spec.spec)?.truncate(a.n)?;
            Output { plain: m.to_string(), json: to_json(&m) }
        }
        FamilyCmd::Classify(a) => {
            let r = classify(&load_spec(&a.spec)?);
            let plain = [
                verdict_line("dense", &r.dense),
                verdict_line("atomic", &r.atomic),
                verdict_line("antimatter", &r.antimatter),
                verdict_line("strongly-bounded", &r.strongly_bounded),
                verdict_line("finite", &r.finite_puiseux),
                verdict_line("hereditarily-atomic", &r.hereditarily_atomic),
            ];
            Output { plain: plain.join("\n"), json: to_json(&r) }
        }
        FamilyCmd::Approx(a) => {
            let r = approximate(&load_spec(&a.spec.spec)?, &a.target, &a.eps)?;
            let plain =
                format!("{} = {}*({}), generator {}, gap {}", r.value, r.multiplier, r.generator, r.index, r.gap);
            Output { plain, json: to_json(&r) }
        }
        FamilyCmd::DenseAtoms(a) => {
            let targets = if a.target.is_empty() {
                TargetSeq::CalkinWilf
            } else {
                TargetSeq::Explicit { values: a.target.clone() }
            };
            let r = dense_atom_monoid(&targets, a.class, a.n)?;
            let plain: Vec<String> =
                r.atoms.iter().map(|d| format!("{} {} {} {}", d.k, d.target, d.atom, d.error)).collect();
            Output { plain: plain.join("\n"), json: to_json(&r) }
        }
        FamilyCmd::Noniso(a) => {
            let r = disjoint_prime_noniso(&load_spec(&a.spec.spec)?, &load_spec(&a.other)?);
            let plain = match &r {
                NonIsomorphism::Certificate { support_a, support_b } => {
                    format!("not isomorphic: denominator supports {support_a} and {support_b} are disjoint")
                }
                NonIsomorphism::Inapplicable { reason } => format!("inapplicable: {reason}"),
            };
            Output { plain, json: to_json(&r) }
        }
    })
}

fn run_cyclic(cmd: &CyclicCmd) -> Outcome {
    Ok(match cmd {
        CyclicCmd::Member(a) => {
            let r = cyclic_contains(&a.r, &a.x, a.cap)?;
            let plain = match &r {
                CyclicMembership::Member { factorization } => {
                    format!("true\n{}", Identity::factorization(a.x.clone(), factorization))
                }
                CyclicMembership::NonMember { certificate } => format!("false\n{certificate}"),
                CyclicMembership::UnknownUpTo { cap } => format!("unknown up to exponent {cap}"),
            };
            Output { plain, json: to_json(&r) }
        }
        CyclicCmd::Factorize(a) => factorizations_output(&a.x, &cyclic_factorizations(&a.r, &a.x, a.cap)?),
        CyclicCmd::Trade(a) => {
            let z = Factorization::from_terms(
                a.z.iter().enumerate().filter(|(_, c)| c.bits() > 0).map(|(t, c)| (a.r.pow(t as u32 + 1), c.clone())),
            );
            let dir: TradeDirection = a.dir.parse()?;
            let w = cyclic_trade(&a.r, &z, a.t, dir)?;
            let plain = format!("{} (length {})", Identity::factorization(z.evaluate(), &w), w.length());
            Output { plain, json: json!({ "before": z, "after": w }) }
        }
        CyclicCmd::Embed(a) => {
            let e = generalized_cyclic_embed(&a.gens.gens, a.i, a.m)?;
            Output { plain: e.identity.to_string(), json: to_json(&e) }
        }
    })
}

fn run_witness(cmd: &WitnessCmd) -> Outcome {
    Ok(match cmd {
        WitnessCmd::Kprimary(a) => {
            let w = kprimary_antimatter_witness(&a.primes, a.limit)?;
            Output { plain: format!("{}\n{}", w.integer_identity, w.decomposition), json: to_json(&w) }
        }
        WitnessCmd::PadicAtoms(a) => {
            let r = padic_candidate_atoms(&load_spec(&a.spec.spec)?, a.n)?;
            let mut plain = vec![format!("kept: {}", join(&r.kept))];
            plain.extend(r.excluded.iter().map(|e| format!("excluded {}: {}", e.index, e.identity)));
            Output { plain: plain.join("\n"), json: to_json(&r) }
        }
        WitnessCmd::SumkAtom(a) => {
            let atom = sum_kprimary_atom_check(a.k, &a.s, a.n)?;
            Output { plain: atom.to_string(), json: Value::from(atom) }
        }
    })
}

fn run_verify(cmd: &VerifyCmd) -> Outcome {
    let VerifyCmd::Run(a) = cmd;
    let params = VerifierParams { truncation: a.truncation, exponent_cap: a.cap, search_limit: a.limit };
    let ids: Vec<&str> = a.claims.iter().map(String::as_str).collect();
    let outcomes = run_claims(&ids, &params)?;
    let json = to_json(&outcomes);
    if let Some(path) = &a.report {
        let text = serde_json::to_string_pretty(&json).expect("serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| Failure::Domain(format!("cannot write report {}: {e}", path.display())))?;
    }
    let plain = outcomes
        .iter()
        .map(|o| {
            let status = serde_json::to_value(o.status).expect("serializes");
            format!("{} {} ({})", o.claim_id, status.as_str().unwrap_or_default(), o.citation)
        })
        .collect::<Vec<_>>();
    Ok(Output { plain: lines(&plain), json })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Ns(c) => run_ns(c),
        Command::Fg(c) => run_fg(c),
        Command::Family(c) => run_family(c),
        Command::Cyclic(c) => run_cyclic(c),
        Command::Witness(c) => run_witness(c),
        Command::Verify(c) => run_verify(c),
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializes"));
            } else if !out.plain.is_empty() {
                println!("{}", out.plain);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
