//! Command-line front end: every library operation behind documented file
//! formats, with byte-deterministic text output.
//!
//! Exit codes: 0 for success and ok verdicts, 1 for validation failures
//! (with the witness printed), 2 for malformed input or usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::cardinal::{cantor_diagonal, card, inj_exists, CardinalError};
use crate::cb::{cantor_bernstein, CbError, InjectionTable};
use crate::coherent::{
    lambda_check, lambdas, CoherentError, FiniteCoherentFamily, OmegaFamily, DEFAULT_PROBE_BOUND,
};
use crate::domain::{BinFn, DomainError, EqvTable, FinDomain, DEFAULT_POWERSET_BOUND};
use crate::hf::{
    hf_choice, hf_powerset, hf_union, mem, parse_set_literal, set_literal, transitive_closure,
    zfc_check, BethTower, HfCode, HfError, DEFAULT_BIT_BUDGET,
};
use crate::mostowski::{collapse, MostowskiError, WfGraph};
use crate::order::{
    canonical_product, check_well_order, order_isomorphism, order_type, well_order_via_choice,
    OrderError, WellOrder,
};
use crate::ordinal::{pair_index, unpair, OrdClass, OrdCnf, OrdError};

/// Runtime bounds and seeds, one per invocation; set via flags only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub powerset_bound: usize,
    pub bit_budget: u64,
    pub beth_base: u64,
    pub probe_bound: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            powerset_bound: DEFAULT_POWERSET_BOUND,
            bit_budget: DEFAULT_BIT_BUDGET,
            beth_base: 1,
            probe_bound: DEFAULT_PROBE_BOUND,
            seed: 0,
        }
    }
}

/// What a run produced: exit code, stdout, stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Exit 1: the input was well-formed but failed a check; the witness
    /// goes to stdout.
    Validation(String),
    /// Exit 2: unreadable or malformed input; the message goes to stderr.
    Malformed(String),
}

type CmdResult = Result<String, Failure>;

/// Parses `argv` and runs the selected subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Validation(msg)) => Outcome {
            code: 1,
            stdout: format!("{msg}\n"),
            stderr: String::new(),
        },
        Err(Failure::Malformed(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

#[derive(Parser)]
#[command(name = "relaxkit", version, about = "desk-scale computable set theory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite domains: quotients, powersets, emptiness, fiber unions.
    Domain {
        #[command(subcommand)]
        cmd: DomainCmd,
    },
    /// Cantor-Bernstein bijection from a pair of injections.
    Cb { input: PathBuf },
    /// Well-orders: validation, isomorphisms, products, choice.
    Worder {
        #[command(subcommand)]
        cmd: WorderCmd,
    },
    /// Cantor-normal-form ordinal arithmetic.
    Ord {
        #[command(subcommand)]
        cmd: OrdCmd,
    },
    /// Canonical pair index of two naturals.
    Pairidx { a: u64, b: u64 },
    /// Inverse of the canonical pair index.
    Unpair { n: u64 },
    /// Finite cardinality and the diagonal.
    Cardinal {
        #[command(subcommand)]
        cmd: CardinalCmd,
    },
    /// The Ackermann-coded hereditarily finite universe.
    Hf {
        #[command(subcommand)]
        cmd: HfCmd,
    },
    /// Mostowski collapse of a well-founded graph.
    Collapse {
        input: PathBuf,
        #[arg(long, default_value_t = Config::default().bit_budget)]
        budget: u64,
    },
    /// Coherent families and the coherent-limit demo.
    Coherent {
        #[command(subcommand)]
        cmd: CoherentCmd,
    },
}

#[derive(Subcommand)]
enum DomainCmd {
    /// Quotient a domain by an equivalence table.
    Quotient { input: PathBuf },
    /// Enumerate all binary functions on a domain.
    Powerset {
        input: PathBuf,
        #[arg(long, default_value_t = Config::default().powerset_bound)]
        bound: usize,
    },
    /// Test a binary function (given as a bit string) for emptiness.
    Empty { input: PathBuf, bits: String },
    /// Disjoint union of fibers over a base domain.
    Fibers { input: PathBuf },
}

#[derive(Subcommand)]
enum WorderCmd {
    /// Validate a comparison table as a well-order.
    Check { input: PathBuf },
    /// Maximal order-isomorphism between two well-orders.
    Iso { a: PathBuf, b: PathBuf },
    /// Canonical product with an initial segment of size d.
    Product { input: PathBuf, d: usize },
    /// Order type (the size, for finite orders).
    Type { input: PathBuf },
    /// Enumerate a domain with the least-unused-label choice rule.
    Choice { input: PathBuf },
}

#[derive(Subcommand)]
enum OrdCmd {
    /// Compare two ordinals: lt, eq or gt.
    Cmp {
        a: String,
        b: String,
    },
    Add {
        a: String,
        b: String,
    },
    Mul {
        a: String,
        b: String,
    },
    /// Supremum (maximum) of one or more ordinals.
    Sup {
        #[arg(required = true)]
        xs: Vec<String>,
    },
    /// zero, successor or limit.
    Classify {
        a: String,
    },
}

#[derive(Subcommand)]
enum CardinalCmd {
    /// Diagonal of a table A -> P(A), printed as a bit string.
    Diag { input: PathBuf },
    /// Cardinality of a domain.
    Card { input: PathBuf },
    /// Whether an injection exists between two domains.
    Inj { a: PathBuf, b: PathBuf },
}

#[derive(Subcommand)]
enum HfCmd {
    /// Ackermann code of a set literal.
    Encode {
        literal: String,
        #[arg(long, default_value_t = Config::default().bit_budget)]
        budget: u64,
    },
    /// Set literal of a code.
    Decode { n: String },
    /// Membership test: is m an element of n?
    Mem { m: String, n: String },
    /// Union of the elements of n.
    Union { n: String },
    /// Powerset of n.
    Powerset {
        n: String,
        #[arg(long, default_value_t = Config::default().powerset_bound)]
        bound: usize,
        #[arg(long, default_value_t = Config::default().bit_budget)]
        budget: u64,
    },
    /// Least natural not in n.
    Choice { n: String },
    /// Transitive closure of n.
    Tc { n: String },
    /// Beth rank of n.
    Rank {
        n: String,
        #[arg(long, default_value_t = Config::default().beth_base)]
        base: u64,
        #[arg(long, default_value_t = Config::default().bit_budget)]
        budget: u64,
    },
    /// Rank of n read as a binary function.
    Rankfn {
        n: String,
        #[arg(long, default_value_t = Config::default().beth_base)]
        base: u64,
        #[arg(long, default_value_t = Config::default().bit_budget)]
        budget: u64,
    },
    /// Beth tower value B[k].
    Beth {
        k: u64,
        #[arg(long, default_value_t = Config::default().beth_base)]
        base: u64,
        #[arg(long, default_value_t = Config::default().bit_budget)]
        budget: u64,
    },
    /// Run the ZFC axiom battery over all codes below the bound.
    ZfcCheck {
        #[arg(long, default_value_t = 4096)]
        bound: u64,
        #[arg(long, default_value_t = Config::default().seed)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CoherentCmd {
    /// Check a finite family for coherence.
    Check { input: PathBuf },
    /// Diagonal limit of a finite coherent family.
    Limit { input: PathBuf },
    /// Check a built-in omega family against a built-in sub-theory.
    Demo {
        #[arg(long)]
        family: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = Config::default().probe_bound)]
        probe: usize,
    },
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Domain { cmd } => run_domain(cmd),
        Command::Cb { input } => run_cb(&input),
        Command::Worder { cmd } => run_worder(cmd),
        Command::Ord { cmd } => run_ord(cmd),
        Command::Pairidx { a, b } => {
            if a >= 1 << 32 || b >= 1 << 32 {
                return Err(Failure::Malformed(
                    "pair coordinates must be below 2^32".into(),
                ));
            }
            Ok(format!("{}\n", pair_index(a, b)))
        }
        Command::Unpair { n } => {
            let (a, b) = unpair(n);
            Ok(format!("{a} {b}\n"))
        }
        Command::Cardinal { cmd } => run_cardinal(cmd),
        Command::Hf { cmd } => run_hf(cmd),
        Command::Collapse { input, budget } => run_collapse(&input, budget),
        Command::Coherent { cmd } => run_coherent(cmd),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn run_domain(cmd: DomainCmd) -> CmdResult {
    match cmd {
        DomainCmd::Quotient { input } => {
            let table: EqvTable = read_json(&input)?;
            let q = table.quotient().map_err(domain_failure)?;
            let mut out = format!("classes={}\n", q.classes().labels().join(","));
            for i in 0..q.source().size() {
                out.push_str(&format!("{}={}\n", q.source().label(i), q.class_label(i)));
            }
            Ok(out)
        }
        DomainCmd::Powerset { input, bound } => {
            let domain: FinDomain = read_json(&input)?;
            let ps = domain.powerset(bound).map_err(domain_failure)?;
            Ok(ps.iter().map(|h| h.bit_string() + "\n").collect())
        }
        DomainCmd::Empty { input, bits } => {
            let domain: FinDomain = read_json(&input)?;
            let parsed = parse_bits(&bits)?;
            let h = BinFn::new(domain, parsed).map_err(domain_failure)?;
            Ok(format!("{}\n", yes_no(h.is_empty())))
        }
        DomainCmd::Fibers { input } => {
            #[derive(serde::Deserialize)]
            struct FiberInput {
                base: FinDomain,
                fibers: BTreeMap<String, FinDomain>,
            }
            let parsed: FiberInput = read_json(&input)?;
            let mut fibers = Vec::with_capacity(parsed.base.size());
            for label in parsed.base.labels() {
                match parsed.fibers.get(label) {
                    Some(f) => fibers.push(f.clone()),
                    None => {
                        return Err(Failure::Malformed(format!(
                            "missing fiber for base element \"{label}\""
                        )))
                    }
                }
            }
            let (union, to_base) = crate::domain::union_of_fibers(&parsed.base, &fibers);
            let mut out = String::new();
            for (i, b) in to_base.iter().enumerate() {
                out.push_str(&format!("{}={}\n", union.label(i), parsed.base.label(*b)));
            }
            Ok(out)
        }
    }
}

fn parse_bits(s: &str) -> Result<Vec<bool>, Failure> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Failure::Malformed(format!("bad bit '{c}' in bit string"))),
        })
        .collect()
}

fn run_cb(input: &Path) -> CmdResult {
    #[derive(serde::Deserialize)]
    #[serde(rename_all = "UPPERCASE")]
    struct CbInput {
        a: FinDomain,
        b: FinDomain,
        #[serde(rename = "f")]
        f: BTreeMap<String, String>,
        #[serde(rename = "g")]
        g: BTreeMap<String, String>,
    }
    let parsed: CbInput = read_json(input)?;
    let to_pairs = |m: &BTreeMap<String, String>| -> Vec<(String, String)> {
        m.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    };
    let f = InjectionTable::new(parsed.a.clone(), parsed.b.clone(), &to_pairs(&parsed.f))
        .map_err(|e| cb_failure("f", e))?;
    let g = InjectionTable::new(parsed.b.clone(), parsed.a.clone(), &to_pairs(&parsed.g))
        .map_err(|e| cb_failure("g", e))?;
    let bij = cantor_bernstein(&f, &g).map_err(|e| cb_failure("f", e))?;
    let mut bijection = BTreeMap::new();
    let mut cases = BTreeMap::new();
    for i in 0..parsed.a.size() {
        let a_label = parsed.a.label(i).to_owned();
        bijection.insert(a_label.clone(), parsed.b.label(bij.apply(i)).to_owned());
        cases.insert(a_label, bij.case(i).to_string());
    }
    #[derive(serde::Serialize)]
    struct CbOutput {
        bijection: BTreeMap<String, String>,
        cases: BTreeMap<String, String>,
    }
    let out = serde_json::to_string(&CbOutput { bijection, cases }).expect("output maps serialize");
    Ok(format!("{out}\n"))
}

fn run_worder(cmd: WorderCmd) -> CmdResult {
    match cmd {
        WorderCmd::Check { input } => {
            #[derive(serde::Deserialize)]
            struct CheckInput {
                labels: Vec<String>,
                leq: Vec<Vec<bool>>,
            }
            let parsed: CheckInput = read_json(&input)?;
            let domain =
                FinDomain::new(parsed.labels).map_err(|e| Failure::Malformed(e.to_string()))?;
            let w = check_well_order(&domain, &parsed.leq).map_err(order_failure)?;
            Ok(format!("position={}\n", join(w.positions())))
        }
        WorderCmd::Iso { a, b } => {
            let wa: WellOrder = read_json(&a)?;
            let wb: WellOrder = read_json(&b)?;
            let iso = order_isomorphism(&wa, &wb);
            let mut out = String::new();
            for r in 0..iso.defined_count() {
                let elem = wa.element_at_rank(r);
                let target = *iso.value(elem).expect("defined on the initial segment");
                out.push_str(&format!(
                    "{}={}\n",
                    wa.domain().label(elem),
                    wb.domain().label(target)
                ));
            }
            Ok(out)
        }
        WorderCmd::Product { input, d } => {
            let w: WellOrder = read_json(&input)?;
            let p = canonical_product(&w, d).map_err(order_failure)?;
            Ok(p.labels_in_order()
                .into_iter()
                .map(|l| format!("{l}\n"))
                .collect())
        }
        WorderCmd::Type { input } => {
            let w: WellOrder = read_json(&input)?;
            Ok(format!("{}\n", order_type(&w)))
        }
        WorderCmd::Choice { input } => {
            let domain: FinDomain = read_json(&input)?;
            let w = well_order_via_choice(&domain, |h: &BinFn| {
                let next = (0..h.domain().size())
                    .find(|&i| !h.bit(i))
                    .expect("the rule is only consulted on proper subsets");
                h.domain().label(next).to_owned()
            })
            .map_err(order_failure)?;
            Ok(format!("order={}\n", w.labels_in_order().join(",")))
        }
    }
}

fn run_ord(cmd: OrdCmd) -> CmdResult {
    let parse = |s: &str| s.parse::<OrdCnf>().map_err(ord_failure);
    match cmd {
        OrdCmd::Cmp { a, b } => {
            let verdict = match parse(&a)?.cmp(&parse(&b)?) {
                std::cmp::Ordering::Less => "lt",
                std::cmp::Ordering::Equal => "eq",
                std::cmp::Ordering::Greater => "gt",
            };
            Ok(format!("{verdict}\n"))
        }
        OrdCmd::Add { a, b } => Ok(format!("{}\n", parse(&a)?.add(&parse(&b)?))),
        OrdCmd::Mul { a, b } => Ok(format!("{}\n", parse(&a)?.mul(&parse(&b)?))),
        OrdCmd::Sup { xs } => {
            let parsed: Vec<OrdCnf> = xs.iter().map(|x| parse(x)).collect::<Result<_, _>>()?;
            let sup = OrdCnf::sup(&parsed).map_err(ord_failure)?;
            Ok(format!("{sup}\n"))
        }
        OrdCmd::Classify { a } => {
            let class: OrdClass = parse(&a)?.classify();
            Ok(format!("{class}\n"))
        }
    }
}

fn run_cardinal(cmd: CardinalCmd) -> CmdResult {
    match cmd {
        CardinalCmd::Diag { input } => {
            #[derive(serde::Deserialize)]
            struct DiagInput {
                labels: Vec<String>,
                p: BTreeMap<String, Vec<bool>>,
            }
            let parsed: DiagInput = read_json(&input)?;
            let domain =
                FinDomain::new(parsed.labels).map_err(|e| Failure::Malformed(e.to_string()))?;
            let mut rows = Vec::with_capacity(domain.size());
            for label in domain.labels() {
                let bits = parsed
                    .p
                    .get(label)
                    .ok_or_else(|| Failure::Malformed(format!("missing row for \"{label}\"")))?;
                let row = BinFn::new(domain.clone(), bits.clone())
                    .map_err(|_| cardinal_failure(CardinalError::ShapeMismatch(label.clone())))?;
                rows.push(row);
            }
            let h = cantor_diagonal(&domain, &rows).map_err(cardinal_failure)?;
            Ok(format!("{}\n", h.bit_string()))
        }
        CardinalCmd::Card { input } => {
            let domain: FinDomain = read_json(&input)?;
            Ok(format!("{}\n", card(&domain)))
        }
        CardinalCmd::Inj { a, b } => {
            let da: FinDomain = read_json(&a)?;
            let db: FinDomain = read_json(&b)?;
            Ok(format!("{}\n", yes_no(inj_exists(&da, &db))))
        }
    }
}

fn run_hf(cmd: HfCmd) -> CmdResult {
    let parse_code = |s: &str| s.parse::<HfCode>().map_err(hf_malformed);
    match cmd {
        HfCmd::Encode { literal, budget } => {
            let code = parse_set_literal(&literal, budget).map_err(hf_failure)?;
            Ok(format!("{code}\n"))
        }
        HfCmd::Decode { n } => Ok(format!("{}\n", set_literal(&parse_code(&n)?))),
        HfCmd::Mem { m, n } => Ok(format!(
            "{}\n",
            yes_no(mem(&parse_code(&m)?, &parse_code(&n)?))
        )),
        HfCmd::Union { n } => Ok(format!("{}\n", hf_union(&parse_code(&n)?))),
        HfCmd::Powerset { n, bound, budget } => {
            let p = hf_powerset(&parse_code(&n)?, bound, budget).map_err(hf_failure)?;
            Ok(format!("{p}\n"))
        }
        HfCmd::Choice { n } => Ok(format!("{}\n", hf_choice(&parse_code(&n)?))),
        HfCmd::Tc { n } => Ok(format!("{}\n", transitive_closure(&parse_code(&n)?))),
        HfCmd::Rank { n, base, budget } => {
            let tower = BethTower::with_budget(base, budget);
            let r = tower.rank(&parse_code(&n)?).map_err(hf_failure)?;
            Ok(format!("{r}\n"))
        }
        HfCmd::Rankfn { n, base, budget } => {
            let tower = BethTower::with_budget(base, budget);
            let r = tower.rank_fn(&parse_code(&n)?).map_err(hf_failure)?;
            Ok(format!("{r}\n"))
        }
        HfCmd::Beth { k, base, budget } => {
            let tower = BethTower::with_budget(base, budget);
            let v = tower.value(k).map_err(hf_failure)?;
            Ok(format!("{v}\n"))
        }
        HfCmd::ZfcCheck { bound, seed } => {
            if bound < 2 {
                return Err(Failure::Malformed("bound must be at least 2".into()));
            }
            let report = zfc_check(bound, seed);
            let rendered = report.to_string();
            if report.passed() {
                Ok(rendered)
            } else {
                Err(Failure::Validation(rendered.trim_end().to_owned()))
            }
        }
    }
}

fn run_collapse(input: &Path, budget: u64) -> CmdResult {
    let g: WfGraph = read_json(input)?;
    let codes = collapse(&g, budget).map_err(mostowski_failure)?;
    let mut out = String::new();
    if let Err((x, y)) = g.check_extensional() {
        out.push_str(&format!("not extensional: ({x},{y})\n"));
    }
    let mapping: Vec<String> = codes
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{}={c}", g.nodes().label(i)))
        .collect();
    out.push_str(&format!("{}\n", mapping.join(" ")));
    Ok(out)
}

fn run_coherent(cmd: CoherentCmd) -> CmdResult {
    match cmd {
        CoherentCmd::Check { input } => {
            let fam: FiniteCoherentFamily = read_json(&input)?;
            fam.check_coherent().map_err(coherent_failure)?;
            Ok("ok\n".into())
        }
        CoherentCmd::Limit { input } => {
            let fam: FiniteCoherentFamily = read_json(&input)?;
            let f = fam.limit().map_err(coherent_failure)?;
            let values: Vec<String> = f.iter().map(u32::to_string).collect();
            Ok(format!("F={}\n", values.join(",")))
        }
        CoherentCmd::Demo {
            family,
            lambda,
            probe,
        } => {
            let fam = match family.as_str() {
                "step" => OmegaFamily::Step,
                "constant-0" => OmegaFamily::Constant(0),
                "constant-1" => OmegaFamily::Constant(1),
                other => {
                    return Err(Failure::Malformed(format!(
                        "unknown family \"{other}\" (step, constant-0, constant-1)"
                    )))
                }
            };
            let (lambda_pred, restriction_pred) = match lambda.as_str() {
                "eventually-zero" => lambdas::eventually_zero(),
                "eventually-constant" => lambdas::eventually_constant(),
                "all" => lambdas::all(),
                other => {
                    return Err(Failure::Malformed(format!(
                        "unknown lambda \"{other}\" (eventually-zero, eventually-constant, all)"
                    )))
                }
            };
            let verdict = lambda_check(&fam, lambda_pred, restriction_pred, probe)
                .map_err(coherent_failure)?;
            let mut out = String::new();
            match verdict.first_rejected_stage {
                None => out.push_str("stages=admissible\n"),
                Some(n) => out.push_str(&format!("stages=rejected at {n}\n")),
            }
            out.push_str(&format!(
                "limit={}\n",
                if verdict.limit_admissible {
                    "admissible"
                } else {
                    "rejected"
                }
            ));
            out.push_str(&format!(
                "verdict={}\n",
                if verdict.is_counterexample() {
                    "counterexample"
                } else {
                    "no counterexample"
                }
            ));
            Ok(out)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn domain_failure(e: DomainError) -> Failure {
    match e {
        DomainError::NotEquivalence(_) | DomainError::DomainTooLarge { .. } => {
            Failure::Validation(e.to_string())
        }
        _ => Failure::Malformed(e.to_string()),
    }
}

fn order_failure(e: OrderError) -> Failure {
    match e {
        OrderError::NotLinear(_) | OrderError::BadChoice { .. } | OrderError::BadBound { .. } => {
            Failure::Validation(e.to_string())
        }
        _ => Failure::Malformed(e.to_string()),
    }
}

fn cb_failure(which: &str, e: CbError) -> Failure {
    match e {
        CbError::NotInjective { first, second } => {
            Failure::Validation(format!("not injective: {which} ({first},{second})"))
        }
        _ => Failure::Malformed(format!("{which}: {e}")),
    }
}

fn ord_failure(e: OrdError) -> Failure {
    Failure::Malformed(e.to_string())
}

fn cardinal_failure(e: CardinalError) -> Failure {
    Failure::Validation(e.to_string())
}

fn hf_malformed(e: HfError) -> Failure {
    Failure::Malformed(e.to_string())
}

fn hf_failure(e: HfError) -> Failure {
    match e {
        HfError::Parse { .. } | HfError::DuplicateElement(_) => Failure::Malformed(e.to_string()),
        _ => Failure::Validation(e.to_string()),
    }
}

fn mostowski_failure(e: MostowskiError) -> Failure {
    match e {
        MostowskiError::NotWellFounded(_) => Failure::Validation(e.to_string()),
        MostowskiError::Code(inner) => hf_failure(inner),
        _ => Failure::Malformed(e.to_string()),
    }
}

fn coherent_failure(e: CoherentError) -> Failure {
    match e {
        CoherentError::Malformed(_) => Failure::Malformed(e.to_string()),
        _ => Failure::Validation(e.to_string()),
    }
}

/// Which library operations each subcommand exercises (directly or through
/// the calls it makes). The coverage test checks that every operation is
/// reachable from at least one subcommand.
pub const DISPATCH_COVERAGE: &[(&str, &[&str])] = &[
    ("domain quotient", &["make_domain", "quotient"]),
    ("domain powerset", &["make_domain", "powerset"]),
    ("domain empty", &["make_domain", "is_empty"]),
    ("domain fibers", &["make_domain", "union_of_fibers"]),
    ("cb", &["make_domain", "cantor_bernstein"]),
    ("worder check", &["make_domain", "check_well_order"]),
    (
        "worder iso",
        &["order_isomorphism", "recursion", "recursive_extension"],
    ),
    ("worder product", &["canonical_product", "pair_index"]),
    ("worder type", &["order_type"]),
    ("worder choice", &["well_order_via_choice"]),
    ("ord cmp", &["ord_cmp", "omega_pow"]),
    ("ord add", &["ord_add"]),
    ("ord mul", &["ord_mul"]),
    ("ord sup", &["ord_sup"]),
    ("ord classify", &["classify"]),
    ("pairidx", &["pair_index"]),
    ("unpair", &["unpair"]),
    ("cardinal diag", &["cantor_diagonal"]),
    ("cardinal card", &["card"]),
    ("cardinal inj", &["inj_exists"]),
    ("hf encode", &["encode"]),
    ("hf decode", &["decode"]),
    ("hf mem", &["mem"]),
    ("hf union", &["hf_union"]),
    ("hf powerset", &["hf_powerset"]),
    ("hf choice", &["hf_choice"]),
    ("hf tc", &["transitive_closure"]),
    ("hf rank", &["rank"]),
    ("hf rankfn", &["rank_fn"]),
    ("hf beth", &["beth_mini"]),
    (
        "hf zfc-check",
        &["zfc_check", "hf_separation", "hf_replacement"],
    ),
    (
        "collapse",
        &[
            "check_well_founded",
            "check_extensional",
            "wf_recursion",
            "collapse",
        ],
    ),
    ("coherent check", &["check_coherent"]),
    ("coherent limit", &["limit"]),
    ("coherent demo", &["omega_limit", "lambda_check"]),
];

/// Every public operation of the kernel, by module.
pub const OPERATIONS: &[&str] = &[
    // domain
    "make_domain",
    "quotient",
    "powerset",
    "is_empty",
    "union_of_fibers",
    // cb
    "cantor_bernstein",
    // order
    "check_well_order",
    "recursion",
    "recursive_extension",
    "order_isomorphism",
    "order_type",
    "well_order_via_choice",
    "canonical_product",
    // ordinal
    "ord_cmp",
    "ord_add",
    "ord_mul",
    "omega_pow",
    "ord_sup",
    "classify",
    "pair_index",
    "unpair",
    // cardinal
    "inj_exists",
    "card",
    "cantor_diagonal",
    // hf
    "mem",
    "decode",
    "encode",
    "hf_union",
    "hf_powerset",
    "hf_separation",
    "hf_replacement",
    "hf_choice",
    "transitive_closure",
    "beth_mini",
    "rank",
    "rank_fn",
    "zfc_check",
    // mostowski
    "check_well_founded",
    "check_extensional",
    "wf_recursion",
    "collapse",
    // coherent
    "check_coherent",
    "limit",
    "omega_limit",
    "lambda_check",
];
