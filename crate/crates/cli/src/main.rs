//! `ringlab`: command-line front end for ringlab-core.
//!
//! Exit codes: 0 success, 1 check failure (invalid ring, failed theorem),
//! 2 usage or parse error, 3 budget exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ringlab_core::harness::{
    build_corpus, emit_report, load_ring, registry, run_theorem_suite, save_ring, search_counterexample, Corpus,
    CorpusSpec, Format, HarnessError, Recipe, RngRecipe, SearchQuery, SuiteOptions,
};
use ringlab_core::poly::{
    check_coefficient_nil_transfer, check_lemma_products, check_nilradical_identity,
    polyring_nil_reversible_bounded, PolyError,
};
use ringlab_core::predicates::{PredicateError, Property, PropertyReport};
use ringlab_core::ring::{ideal_generated_by, Elem};
use ringlab_core::{FiniteRing, Limits};

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Finite ring property checker and theorem harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Budget {
    /// Nominal candidate budget for polynomial sweeps.
    #[arg(long, default_value_t = Limits::default().poly_budget)]
    poly_budget: u64,
    /// Largest ring any construction may produce.
    #[arg(long, default_value_t = Limits::default().order_cap)]
    order_cap: usize,
}

impl Budget {
    fn limits(self) -> Limits {
        Limits {
            poly_budget: self.poly_budget,
            order_cap: self.order_cap,
            ..Limits::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a ring or algebra file and check the ring axioms.
    Validate { file: PathBuf },
    /// Evaluate properties of a ring.
    Props {
        file: PathBuf,
        /// Property name, e.g. nil-reversible or armendariz:2 (repeatable).
        #[arg(long = "prop")]
        props: Vec<String>,
        /// Every ring-level property (the default when no --prop is given).
        #[arg(long)]
        all: bool,
        /// Generator of the ideal for reduced-ideal / bounded-index
        /// (element name or [index]; repeatable).
        #[arg(long = "ideal")]
        ideal: Vec<String>,
        #[arg(long, default_value = "text")]
        format: String,
        #[command(flatten)]
        budget: Budget,
    },
    /// Build a ring from a recipe and write it as a ring file.
    ///
    /// Recipes: zmod N | product A B | matrix A K | tri A K | cong2 A |
    /// trivext A | dorroh A M [--gen G].. | quotient A --gen G.. |
    /// polytrunc A M [--alpha K] | alg FILE-OR-NAME, or a full recipe
    /// expression such as 'polytrunc(alg(GF4),2,1)'. A ring argument A is a
    /// ring file or a recipe expression; `null(K)` as the rng of dorroh is
    /// the zero-multiplication Z_K.
    Construct {
        recipe: String,
        args: Vec<String>,
        /// Ideal generator (element name or [index]; repeatable).
        #[arg(long = "gen")]
        gens: Vec<String>,
        /// Automorphism index for polytrunc (0 is the identity).
        #[arg(long, default_value_t = 0)]
        alpha: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Expand the default corpus and print its manifest.
    Corpus {
        #[arg(long, default_value_t = 1024)]
        max_order: usize,
        /// Write the manifest here instead of standard output.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Write every member as a ring file into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the implication checks over a corpus.
    Theorems {
        /// Directory of ring files; default: the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 1024)]
        max_order: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value = "text")]
        format: String,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// List corpus rings with every required and no forbidden property.
    Search {
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<String>,
        #[arg(long, default_value_t = 1024)]
        max_order: usize,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Polynomial checks on one ring up to a degree bound.
    PolySuite {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        budget: Budget,
    },
}

/// Failure with its exit code.
struct Exit(u8, String);

impl From<HarnessError> for Exit {
    fn from(e: HarnessError) -> Self {
        let code = match &e {
            _ if e.is_budget() => 3,
            HarnessError::Ring(_) | HarnessError::Construction(_) => 1,
            _ => 2,
        };
        Exit(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit(2, msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Exit> {
    match cmd {
        Command::Validate { file } => {
            let r = load_ring(&file, &Limits::default())?;
            println!("ok: {} (order {}, {})", r.name(), r.order(), if r.is_commutative() { "commutative" } else { "noncommutative" });
            Ok(0)
        }
        Command::Props {
            file,
            props,
            all,
            ideal,
            format,
            budget,
        } => props_cmd(&file, &props, all, &ideal, &format, budget.limits()),
        Command::Construct {
            recipe,
            args,
            gens,
            alpha,
            output,
            budget,
        } => {
            let limits = budget.limits();
            let recipe = construct_recipe(&recipe, &args, &gens, alpha, &limits)?;
            let r = recipe.build(&limits)?;
            match output {
                Some(p) => {
                    save_ring(&r, &p)?;
                    eprintln!("wrote {} (order {}) to {}", r.name(), r.order(), p.display());
                }
                None => print!("{}", ringlab_core::harness::ring_to_text(&r)),
            }
            Ok(0)
        }
        Command::Corpus { max_order, manifest, out } => {
            let corpus = build_corpus(&CorpusSpec::default().with_max_order(max_order), &Limits::default());
            let text = corpus.manifest();
            match manifest {
                Some(p) => write(&p, text.as_bytes())?,
                None => print!("{text}"),
            }
            if let Some(dir) = out {
                std::fs::create_dir_all(&dir).map_err(|e| Exit(2, format!("{}: {e}", dir.display())))?;
                for (i, e) in corpus.entries.iter().enumerate() {
                    save_ring(&e.ring, &dir.join(file_name(i, &e.id)))?;
                }
            }
            Ok(0)
        }
        Command::Theorems {
            corpus,
            max_order,
            report,
            format,
            jobs,
            budget,
        } => {
            let format: Format = format.parse()?;
            let limits = budget.limits();
            let corpus = load_corpus(corpus.as_deref(), max_order, &limits)?;
            let rep = run_theorem_suite(&corpus, &registry(), &SuiteOptions { limits, jobs });
            let bytes = emit_report(&rep, format);
            match report {
                Some(p) => {
                    write(&p, &bytes)?;
                    eprintln!(
                        "{} rings, {} checks: {} pass, {} fail, {} hypothesis not met, {} skipped",
                        rep.corpus.rings,
                        rep.theorems.len(),
                        rep.totals.pass,
                        rep.totals.fail,
                        rep.totals.hypothesis_not_met,
                        rep.totals.skipped_budget
                    );
                }
                None => print!("{}", String::from_utf8_lossy(&bytes)),
            }
            Ok(if rep.failures() > 0 { 1 } else { 0 })
        }
        Command::Search {
            require,
            forbid,
            max_order,
            corpus,
            budget,
        } => {
            let query = SearchQuery::parse(&require, &forbid).map_err(|e| usage(e.to_string()))?;
            let limits = budget.limits();
            let corpus = load_corpus(corpus.as_deref(), max_order, &limits)?;
            let res = search_counterexample(&corpus, &query, &limits);
            println!(
                "require [{}] forbid [{}]: {} ({} of {} rings)",
                res.require.join(","),
                res.forbid.join(","),
                res.outcome,
                res.found.len(),
                corpus.len()
            );
            for hit in &res.found {
                println!("{}", hit.ring);
                for w in &hit.witnesses {
                    if let Some(wit) = &w.witness {
                        let roles: Vec<String> =
                            wit.elements.iter().map(|r| format!("{}=[{}] {}", r.role, r.element, r.label)).collect();
                        println!("  {} fails: {:?} {}", w.property, wit.kind, roles.join(", "));
                    }
                }
            }
            for u in &res.undecided {
                println!("undecided {}: {}", u.unit, u.reason);
            }
            Ok(0)
        }
        Command::PolySuite { file, degree, budget } => poly_suite(&file, degree, budget.limits()),
    }
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), Exit> {
    std::fs::write(path, bytes).map_err(|e| Exit(2, format!("{}: {e}", path.display())))
}

fn file_name(i: usize, id: &str) -> String {
    let clean: String = id
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    format!("{i:03}-{clean}.ring")
}

fn load_corpus(dir: Option<&Path>, max_order: usize, limits: &Limits) -> Result<Corpus, Exit> {
    let spec = match dir {
        None => CorpusSpec::default(),
        Some(d) => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(d)
                .map_err(|e| Exit(2, format!("{}: {e}", d.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "ring" || x == "alg"))
                .collect();
            files.sort();
            CorpusSpec::from_files(files)
        }
    };
    let corpus = build_corpus(&spec.with_max_order(max_order), limits);
    if dir.is_some() {
        if let Some(k) = corpus.skipped.first() {
            return Err(Exit(2, format!("{}: {}", k.recipe, k.reason)));
        }
    }
    Ok(corpus)
}

/// A ring argument: an existing file, or a recipe expression.
fn source(arg: &str) -> Result<Recipe, Exit> {
    if Path::new(arg).is_file() {
        return Ok(Recipe::File(PathBuf::from(arg)));
    }
    arg.parse().map_err(|e: HarnessError| usage(format!("`{arg}` is neither a file nor a recipe: {e}")))
}

fn resolve(r: &FiniteRing, names: &[String]) -> Result<Vec<Elem>, Exit> {
    names
        .iter()
        .map(|n| r.element_by_name(n).ok_or_else(|| usage(format!("{} has no element `{n}`", r.name()))))
        .collect()
}

fn number(s: Option<&String>, what: &str) -> Result<usize, Exit> {
    s.ok_or_else(|| usage(format!("missing {what}")))?
        .parse()
        .map_err(|_| usage(format!("{what} must be a number")))
}

fn construct_recipe(name: &str, args: &[String], gens: &[String], alpha: usize, limits: &Limits) -> Result<Recipe, Exit> {
    if name.contains('(') {
        return source(name);
    }
    let arg = |i: usize| -> Result<Recipe, Exit> {
        source(args.get(i).ok_or_else(|| usage(format!("{name}: missing ring argument {}", i + 1)))?)
    };
    let boxed = |i| arg(i).map(Box::new);
    let expect = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(usage(format!("{name} takes {n} argument(s), got {}", args.len())))
        }
    };
    Ok(match name {
        "zmod" => {
            expect(1)?;
            Recipe::Zmod(number(args.first(), "modulus")?)
        }
        "product" => {
            expect(2)?;
            Recipe::Product(boxed(0)?, boxed(1)?)
        }
        "matrix" | "tri" => {
            expect(2)?;
            let k = number(args.get(1), "matrix size")?;
            if name == "matrix" {
                Recipe::Matrix(boxed(0)?, k)
            } else {
                Recipe::Tri(boxed(0)?, k)
            }
        }
        "cong2" => {
            expect(1)?;
            Recipe::Cong2(boxed(0)?)
        }
        "trivext" => {
            expect(1)?;
            Recipe::TrivExt(boxed(0)?)
        }
        "dorroh" => {
            expect(2)?;
            let m = number(args.get(1), "coefficient modulus")?;
            let a = &args[0];
            let rng = if let Some(k) = a.strip_prefix("null(").and_then(|s| s.strip_suffix(')')) {
                RngRecipe::Null(k.parse().map_err(|_| usage("null(K) needs a number"))?)
            } else if gens.is_empty() {
                RngRecipe::Whole(boxed(0)?)
            } else {
                let base = arg(0)?;
                let g = resolve(&base.build(limits)?, gens)?;
                RngRecipe::Ideal(Box::new(base), g)
            };
            Recipe::Dorroh(rng, m)
        }
        "quotient" => {
            expect(1)?;
            if gens.is_empty() {
                return Err(usage("quotient needs at least one --gen"));
            }
            let base = arg(0)?;
            let g = resolve(&base.build(limits)?, gens)?;
            // Reject generators of the whole ring early with a clear message.
            let r = base.build(limits)?;
            if ideal_generated_by(&r, &g).map_err(|e| Exit(1, e.to_string()))?.is_whole() {
                eprintln!("note: the generators span the whole ring; the quotient is the zero ring");
            }
            Recipe::Quotient(Box::new(base), g)
        }
        "polytrunc" => {
            expect(2)?;
            Recipe::PolyTrunc(boxed(0)?, number(args.get(1), "truncation degree")?, alpha)
        }
        "alg" => {
            expect(1)?;
            if Path::new(&args[0]).is_file() {
                Recipe::File(PathBuf::from(&args[0]))
            } else {
                Recipe::Alg(args[0].clone())
            }
        }
        _ => return Err(usage(format!("unknown recipe `{name}`"))),
    })
}

fn print_report(r: &FiniteRing, rep: &PropertyReport) {
    let mut line = format!("{}: {}", rep.property, rep.value);
    if let Some(d) = rep.bounded {
        line.push_str(&format!(" (bounded d={d})"));
    }
    if let Some(m) = rep.index {
        line.push_str(&format!(" index={m}"));
    }
    if let Some(w) = &rep.witness {
        line.push_str(&format!("  witness {}", w.describe(r)));
    }
    line.push_str(&format!("  [{} lookups]", rep.cost));
    println!("{line}");
}

fn props_cmd(file: &Path, props: &[String], all: bool, ideal: &[String], format: &str, limits: Limits) -> Result<u8, Exit> {
    let json = match format {
        "text" => false,
        "json" => true,
        _ => return Err(usage(format!("unknown format `{format}`"))),
    };
    let r = load_ring(file, &limits)?;
    let mut wanted: Vec<Property> = props
        .iter()
        .map(|p| p.parse())
        .collect::<Result<_, PredicateError>>()
        .map_err(|e| usage(e.to_string()))?;
    if all || wanted.is_empty() {
        wanted.extend(Property::RING_LEVEL);
        if !ideal.is_empty() {
            wanted.extend([Property::ReducedIdeal, Property::BoundedIndex]);
        }
    }
    let ideal = if ideal.is_empty() {
        None
    } else {
        Some(ideal_generated_by(&r, &resolve(&r, ideal)?).map_err(|e| Exit(1, e.to_string()))?)
    };
    let mut code = 0;
    let mut reports = Vec::new();
    for p in wanted {
        let res = if p.is_ideal_level() {
            match &ideal {
                Some(i) => p.evaluate_on(&r, i),
                None => return Err(usage(format!("{p} needs --ideal"))),
            }
        } else {
            p.evaluate(&r, &limits)
        };
        match res {
            Ok(rep) => {
                if !json {
                    print_report(&r, &rep);
                }
                reports.push(rep);
            }
            Err(e @ PredicateError::BudgetExceeded { .. }) => {
                eprintln!("{p}: skipped, {e}");
                code = 3;
            }
            Err(e) => return Err(Exit(1, format!("{p}: {e}"))),
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    }
    Ok(code)
}

fn poly_suite(file: &Path, d: usize, limits: Limits) -> Result<u8, Exit> {
    let r = load_ring(file, &limits)?;
    let mut code = 0u8;
    let mut budget_hit = false;
    let mut show = |label: &str, res: Result<PropertyReport, PolyError>, must_hold: bool| match res {
        Ok(rep) => {
            print_report(&r, &rep);
            if must_hold && !rep.value {
                code = 1;
            }
            Some(rep.value)
        }
        Err(PolyError::HypothesisNotMet(why)) => {
            println!("{label}: not applicable ({why})");
            None
        }
        Err(e @ (PolyError::Predicate(PredicateError::BudgetExceeded { .. }) | PolyError::ExponentCapExceeded { .. })) => {
            println!("{label}: skipped ({e})");
            budget_hit = true;
            None
        }
        Err(e) => {
            println!("{label}: error ({e})");
            code = 1;
            None
        }
    };
    let prop = |p: Property| p.evaluate(&r, &limits).map_err(PolyError::from);
    let nr = show("nil-reversible", prop(Property::NilReversible), false) == Some(true);
    let arm = show(&format!("armendariz:{d}"), prop(Property::Armendariz(d)), false) == Some(true);
    show(&format!("nil-armendariz:{d}"), prop(Property::NilArmendariz(d)), nr);
    show(&format!("central-armendariz:{d}"), prop(Property::CentralArmendariz(d)), false);
    let semi = show("semicommutative", prop(Property::Semicommutative), false) == Some(true);
    let sq = show("square-zero", prop(Property::SquareZero), false) == Some(true);
    show(&format!("nilradical-identity:{d}"), check_nilradical_identity(&r, d, &limits), true);
    show(&format!("coefficient-transfer:2:{d}"), check_coefficient_nil_transfer(&r, 2, d, &limits), true);
    let expect_poly = (arm && nr) || (semi && sq);
    show(&format!("polyring-nil-reversible:{d}"), polyring_nil_reversible_bounded(&r, d, &limits), expect_poly);
    show("lemma-products", check_lemma_products(&r), true);
    if code == 0 && budget_hit {
        code = 3;
    }
    Ok(code)
}
