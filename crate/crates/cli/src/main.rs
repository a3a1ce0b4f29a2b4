//! `groth`: expand, count, apply, verify, graph and suite.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on a
//! usage error.

use std::io::Write;
use std::process::ExitCode;

// A closed pipe (`groth ... | head`) is not an error worth a panic.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

use clap::{Args, Parser, Subcommand};
use grothendieck::graphs::{
    commutator_check, enumerative_identity_check, moebius_from_cauchy, normal_ordering_check, q_coefficient,
    walk_sum, Direction, EnumerativeIdentity, FilteredGraph, GraphKind, NormalOrdering, Param, Relation,
};
use grothendieck::identities::{verify, verify_all_pairs, BetaSpec, IdentityName, IdentitySpec};
use grothendieck::module::ModuleElement;
use grothendieck::report::VerificationReport;
use grothendieck::schur_ops::{OpContext, OpExpr};
use grothendieck::suite::{run_criterion, CRITERIA};
use grothendieck::symfun::{basis_expand, schur_expand, Basis, Evaluator, Kind, Route, SymFunId};
use grothendieck::tableau::{count, enumerate, Family, TableauShape};
use grothendieck::{Cap, Error, Partition, Ring};
use serde_json::json;

#[derive(Parser)]
#[command(name = "groth", version, about = "Symmetric Grothendieck polynomials, exactly")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true, env = "GROTH_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one symmetric function as a truncated polynomial.
    Expand(ExpandArgs),
    /// Count (or list) tableaux of a family on a shape.
    Count(CountArgs),
    /// Apply an operator word to a partition.
    Apply(ApplyArgs),
    /// Check one named identity.
    Verify(VerifyArgs),
    /// Filtered Young graphs.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Run the acceptance battery.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// G, Gskew, g, J, j, s, h or e.
    #[arg(long)]
    family: String,
    /// `λ//μ` for G and J, `λ/μ` for the others, a degree for h and e.
    #[arg(long)]
    shape: String,
    #[arg(long, default_value_t = 2)]
    vars: usize,
    #[arg(long, default_value_t = 4)]
    xcap: u32,
    #[arg(long, default_value_t = 4)]
    bcap: u32,
    #[arg(long, default_value = "operator")]
    route: Route,
    /// Expand in the schur, G or g basis instead of monomials.
    #[arg(long)]
    basis: Option<Basis>,
}

#[derive(Args)]
struct CountArgs {
    /// SVT, RPP, MSVT, SSYT, ISVT, ST, IT or SYT.
    #[arg(long)]
    family: Family,
    #[arg(long)]
    shape: String,
    /// Largest entry (ignored for SYT).
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Print the fillings, not just their number.
    #[arg(long)]
    list: bool,
    /// Bound on the number of entries; required to list MSVT.
    #[arg(long)]
    max_entries: Option<usize>,
}

#[derive(Args)]
struct ApplyArgs {
    /// Written left to right, rightmost acts first: `ut2 ut1`, `A(x1) B(y1)`.
    #[arg(long)]
    word: String,
    #[arg(long)]
    partition: Partition,
    #[arg(long, default_value_t = 1)]
    xvars: usize,
    #[arg(long, default_value_t = 1)]
    yvars: usize,
    #[arg(long, default_value_t = 3)]
    xcap: u32,
    #[arg(long, default_value_t = 3)]
    ycap: u32,
    #[arg(long, default_value_t = 4)]
    bcap: u32,
}

#[derive(Args)]
struct VerifyArgs {
    name: IdentityName,
    #[arg(long, default_value = "-")]
    mu: Partition,
    #[arg(long, default_value = "-")]
    nu: Partition,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    xvars: usize,
    #[arg(long, default_value_t = 2)]
    yvars: usize,
    #[arg(long, default_value_t = 4)]
    xcap: u32,
    #[arg(long, default_value_t = 4)]
    ycap: u32,
    #[arg(long, default_value_t = 5)]
    bcap: u32,
    /// formal, 0, 1 or -1; defaults to what the identity needs.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<BetaSpec>,
    /// Ignore --mu/--nu and run every pair of weight at most this.
    #[arg(long)]
    all_pairs: Option<usize>,
    /// With --all-pairs, only pairs with ν ⊆ μ.
    #[arg(long)]
    nested: bool,
}

#[derive(Args)]
struct GraphParams {
    #[arg(long)]
    kind: GraphKind,
    /// Rank bound N.
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value = "formal", allow_hyphen_values = true)]
    beta: Param,
    #[arg(long, default_value = "formal", allow_hyphen_values = true)]
    kappa: Param,
}

impl GraphParams {
    fn build(&self) -> FilteredGraph {
        FilteredGraph::build(self.kind, self.beta, self.kappa, self.n)
    }
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Export vertices and weighted edges.
    Build(GraphParams),
    /// Check the commutation relation of a graph.
    Check {
        #[command(flatten)]
        graph: GraphParams,
        /// Defaults to the relation matching the graph.
        #[arg(long)]
        relation: Option<Relation>,
    },
    /// Rebuild the Möbius graph from the Cauchy filtration at rank N.
    FromCauchy {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Weighted sum over walks of a given length.
    Walk {
        #[command(flatten)]
        graph: GraphParams,
        #[arg(long)]
        from: Partition,
        #[arg(long)]
        to: Partition,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value = "up")]
        direction: Direction,
    },
    /// Normal ordering of D^n U^m against its closed form.
    NormalOrder {
        /// weyl or shifted.
        #[arg(long)]
        template: NormalOrdering,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 10)]
        rank: usize,
    },
    /// Both forms of q_n(i, j).
    Q {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// The enumerative identities behind the walk counts.
    Enumerative {
        /// signedFf, Fg, frobeniusAnalogue or fubini.
        #[arg(long)]
        which: EnumerativeIdentity,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value = "-")]
        mu: Partition,
        #[arg(long, default_value = "-")]
        nu: Partition,
        #[arg(long, default_value_t = 8)]
        rank: usize,
    },
}

#[derive(Args)]
struct SuiteArgs {
    /// Run only these criteria, e.g. `1,4,11`.
    #[arg(long, value_delimiter = ',')]
    criteria: Vec<u8>,
}

/// A failure with the flag it came from, if known.
struct UsageError(String);

impl UsageError {
    fn at(flag: &str) -> impl Fn(Error) -> UsageError + '_ {
        move |e| UsageError(format!("{flag}: {e}"))
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    let json = cli.json;
    let result = match cli.command {
        Command::Expand(a) => expand(a, json),
        Command::Count(a) => count_cmd(a, json),
        Command::Apply(a) => apply(a, json),
        Command::Verify(a) => verify_cmd(a, json),
        Command::Graph(g) => graph(g, json),
        Command::Suite(a) => suite(a, json),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &impl serde::Serialize) {
    out!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn expand(a: ExpandArgs, json: bool) -> Outcome {
    let ring = Ring::builder()
        .scalar("b", Cap::Finite(a.bcap))
        .indexed("x", a.vars, Cap::Finite(a.xcap))
        .build()
        .map_err(UsageError::at("--vars"))?;
    let id = SymFunId::parse(&a.family, &a.shape).map_err(UsageError::at("--shape"))?;
    let ev = Evaluator::for_alphabet(&ring, "x")?;
    let f = ev.evaluate(&id, a.route)?;
    let ai = ring.alphabet_index("x")?;
    match a.basis {
        None => {
            if json {
                print_json(&f.to_json());
            } else {
                out!("{f}");
            }
        }
        Some(Basis::Schur) => {
            let e = schur_expand(&f, ai).map_err(UsageError::at("--basis"))?;
            if json {
                print_json(&e.to_json());
            } else {
                out!("{e}");
            }
        }
        Some(b @ (Basis::GBasis | Basis::GdBasis)) => {
            let kind = if b == Basis::GBasis { Kind::G } else { Kind::Gd };
            let e = basis_expand(&f, &ev, kind).map_err(UsageError::at("--basis"))?;
            if json {
                let j = e.expansion.to_json();
                print_json(&json!({ "basis": j.basis, "terms": j.terms, "residual": e.residual.to_string() }));
            } else {
                out!("{}", e.expansion);
                if !e.residual.is_zero() {
                    out!("residual: {}", e.residual);
                }
            }
        }
        Some(Basis::Monomial) => return Err(UsageError("--basis: use schur, G or g".into())),
    }
    Ok(true)
}

fn count_cmd(a: CountArgs, json: bool) -> Outcome {
    let shape = TableauShape::parse_for(a.family, &a.shape).map_err(UsageError::at("--shape"))?;
    if a.list {
        let all = enumerate(a.family, &shape, a.n, a.max_entries).map_err(UsageError::at("--family"))?;
        if json {
            print_json(&all.iter().map(|t| t.to_json()).collect::<Vec<_>>());
        } else {
            for t in &all {
                let cells: Vec<String> = t
                    .cells
                    .iter()
                    .map(|((r, c), e)| {
                        let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                        format!("({r},{c}):{{{}}}", e.join(","))
                    })
                    .collect();
                out!("{}", cells.join(" "));
            }
        }
        return Ok(true);
    }
    let n = count(a.family, &shape, a.n).map_err(UsageError::at("--family"))?;
    if json {
        print_json(&json!({ "family": a.family, "shape": shape.to_string(), "n": a.n, "count": n }));
    } else {
        out!("{n}");
    }
    Ok(true)
}

fn apply(a: ApplyArgs, json: bool) -> Outcome {
    let ring = Ring::builder()
        .scalar("b", Cap::Finite(a.bcap))
        .indexed("x", a.xvars, Cap::Finite(a.xcap))
        .indexed("y", a.yvars, Cap::Finite(a.ycap))
        .build()?;
    let ctx = OpContext::with_default_beta(&ring)?;
    let word = OpExpr::parse_word(&ctx, &a.word).map_err(UsageError::at("--word"))?;
    let v = word.apply(&ctx, &ModuleElement::basis(&ring, a.partition))?;
    if json {
        print_json(&v.to_json());
    } else {
        out!("{v}");
    }
    Ok(true)
}

fn report(r: &VerificationReport, json: bool) -> Outcome {
    if json {
        print_json(r);
    } else {
        out!("{r}");
    }
    Ok(r.passed())
}

fn verify_cmd(a: VerifyArgs, json: bool) -> Outcome {
    let mut spec = IdentitySpec::new(a.name)
        .mu(a.mu)
        .nu(a.nu)
        .k(a.k)
        .vars(a.xvars, a.yvars)
        .caps(a.xcap, a.ycap, a.bcap);
    if let Some(b) = a.beta {
        spec = spec.beta(b);
    }
    let r = match a.all_pairs {
        Some(w) => verify_all_pairs(&spec, w, a.nested),
        None => verify(&spec),
    }
    .map_err(UsageError::at("--beta/--mu/--nu"))?;
    report(&r, json)
}

fn graph(g: GraphCommand, json: bool) -> Outcome {
    match g {
        GraphCommand::Build(p) => {
            let graph = p.build();
            if json {
                print_json(&graph.to_json());
            } else {
                let j = graph.to_json();
                out!("{} vertices", j.vertices.len());
                for (label, edges) in [("up", &j.up_edges), ("down", &j.down_edges)] {
                    for e in edges {
                        out!("{label} {} -> {}: {}", e.from, e.to, e.weight);
                    }
                }
            }
            Ok(true)
        }
        GraphCommand::Check { graph, relation } => {
            let rel = relation.unwrap_or(Relation::for_kind(graph.kind));
            let r = commutator_check(&graph.build(), rel).map_err(UsageError::at("--relation"))?;
            report(&r, json)
        }
        GraphCommand::FromCauchy { n } => report(&moebius_from_cauchy(n)?, json),
        GraphCommand::Walk {
            graph,
            from,
            to,
            steps,
            direction,
        } => {
            let w = walk_sum(&graph.build(), &from, &to, steps, direction).map_err(UsageError::at("--from/--to"))?;
            if json {
                print_json(&w.to_json());
            } else {
                out!("{w}");
            }
            Ok(true)
        }
        GraphCommand::NormalOrder { template, n, m, rank } => report(&normal_ordering_check(template, n, m, rank)?, json),
        GraphCommand::Q { n, i, j } => {
            let q = q_coefficient(n, i, j);
            if json {
                print_json(&json!({
                    "n": n, "i": i, "j": j,
                    "alternating": q.alternating, "eulerian": q.eulerian, "literal": q.literal,
                }));
            } else {
                out!("alternating {} eulerian {} literal {}", q.alternating, q.eulerian, q.literal);
            }
            Ok(q.alternating == q.eulerian)
        }
        GraphCommand::Enumerative {
            which,
            m,
            n,
            mu,
            nu,
            rank,
        } => report(&enumerative_identity_check(which, m, n, &mu, &nu, rank)?, json),
    }
}

fn suite(a: SuiteArgs, json: bool) -> Outcome {
    for id in &a.criteria {
        if !CRITERIA.iter().any(|(i, _)| i == id) {
            return Err(UsageError(format!("--criteria: no criterion {id}")));
        }
    }
    let mut results = Vec::new();
    for (id, _) in CRITERIA {
        if a.criteria.is_empty() || a.criteria.contains(&id) {
            let r = run_criterion(id)?;
            if !json {
                out!("{}", r.line());
            }
            results.push(r);
        }
    }
    let passed = results.iter().all(|r| r.report.passed());
    if json {
        print_json(&results);
    } else {
        let n = results.iter().filter(|r| r.report.passed()).count();
        out!("{n}/{} criteria passed", results.len());
    }
    Ok(passed)
}
