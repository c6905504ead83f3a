use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use twistlab_core::conuclei::{self, NELSON_SEARCH_BOUND};
use twistlab_core::representation as rep;
use twistlab_core::search::{self, Constraints, MorphismKind, SearchSpec, DEFAULT_BOUND};
use twistlab_core::{twist, varieties, Algebra, Elem, NcaPair, Signature, Subset, UnaryMap, Verdict};

use twistlab::io::{self, AlgebraTable, UnaryMapFile};
use twistlab::{corpus, dot, suite};

/// `println!` that exits quietly once stdout is closed, as under `| head`.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        if let Err(e) = writeln!(std::io::stdout(), $($t)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

#[derive(Parser)]
#[command(name = "twistlab", version, about = "Exact computation with finite residuated lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra or decide membership in a variety.
    Check {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value_t = Variety::Rl)]
        variety: Variety,
        /// Conucleus for `--variety inca`: a map file, `term:nelson` or `term:kalman`.
        #[arg(long, default_value = "term:nelson")]
        tau: String,
    },
    /// Build a twist structure over a base algebra.
    Twist {
        base: PathBuf,
        /// The cyclic element, by index or name.
        #[arg(long, required_unless_present = "full")]
        iota: Option<String>,
        /// Restrict to pairs whose join (or ⊕) lies in this filter.
        #[arg(long, requires = "iota")]
        filter: Option<PathBuf>,
        /// Filtered twist over a Brouwerian base: `a∧b <= ι`, `a∨b ∈ F`.
        #[arg(long, requires = "filter", conflicts_with = "inca")]
        brouwerian: bool,
        /// Filtered twist over an involutive base: `ab <= ι`, `a⊕b ∈ F`.
        #[arg(long, requires = "filter")]
        inca: bool,
        /// The full twist `L × L` with unit `(e, ⊤)`.
        #[arg(long, conflicts_with_all = ["iota", "filter"])]
        full: bool,
        /// Print a Hasse diagram with the maximal set in gray.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Gray the τ_Tw image instead of the maximal set.
        #[arg(long, requires = "dot")]
        tau_image: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check, build the image of, or enumerate conuclei.
    Conucleus {
        #[command(subcommand)]
        action: ConucleusAction,
    },
    /// Run the representation theorems on a Nelson conucleus algebra.
    Represent {
        algebra: PathBuf,
        /// A map file, `term:nelson` (`(x∧e)²`) or `term:kalman` (`x∧e`).
        #[arg(long, default_value = "term:nelson")]
        tau: String,
        /// Write every checked instance as JSON lines.
        #[arg(long)]
        emit_proof_log: Option<PathBuf>,
    },
    /// Enumerate residuated lattices up to isomorphism, one JSON object per line.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        commutative: bool,
        #[arg(long)]
        integral: bool,
        #[arg(long)]
        involutive: bool,
        #[arg(long)]
        distributive: bool,
        #[arg(long)]
        bounded: bool,
        #[arg(long)]
        idempotent: bool,
        #[arg(long)]
        odd: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Skip this many results, to resume an earlier run.
        #[arg(long, default_value_t = 0)]
        skip: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        /// Emit every labeled product on each lattice, not one per class.
        #[arg(long)]
        all_labelings: bool,
    },
    /// Find homomorphisms, embeddings or isomorphisms between two algebras.
    Morphisms {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Hom)]
        kind: Kind,
        /// Comma-separated operations or presets (lattice, residuated,
        /// involutive, brouwerian); defaults to everything both carry.
        #[arg(long)]
        signature: Option<String>,
    },
    /// List the subuniverses of an algebra.
    Subalgebras {
        algebra: PathBuf,
        #[arg(long)]
        signature: Option<String>,
    },
    /// Run every verifier over the fixture corpus.
    PaperSuite {
        /// Load the corpus from this directory instead of building it.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Re-emit an algebra as JSON or DOT, or write the fixture corpus.
    Export {
        #[arg(required_unless_present = "corpus")]
        algebra: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Relabel to the canonical form first.
        #[arg(long)]
        canonical: bool,
        /// Write every fixture into this directory.
        #[arg(long, conflicts_with = "algebra")]
        corpus: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConucleusAction {
    Check {
        algebra: PathBuf,
        map: PathBuf,
        #[arg(long, value_enum, default_value_t = Level::Conucleus)]
        level: Level,
    },
    /// Print the image algebra.
    Image { algebra: PathBuf, map: PathBuf },
    /// Print every Nelson conucleus, one map per line.
    Enumerate {
        algebra: PathBuf,
        #[arg(long, default_value_t = NELSON_SEARCH_BOUND)]
        bound: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variety {
    Rl,
    Kalman,
    Nelson,
    Npc,
    Nt,
    Nt0,
    Brouwerian,
    Inca,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Level {
    Weak,
    Conucleus,
    Nelson,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hom,
    Embed,
    Iso,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e)
            if e
                .downcast_ref::<std::io::Error>()
                .is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Check { algebra, variety, tau } => check(&algebra, variety, &tau),
        Command::Twist {
            base,
            iota,
            filter,
            brouwerian,
            inca,
            full,
            dot,
            tau_image,
            json,
        } => {
            let l = io::read_algebra(&base)?;
            let tw = if full {
                twist::full_twist(&l)?
            } else {
                let iota = element(&l, iota.as_deref().expect("clap requires --iota"))?;
                match filter {
                    None => twist::twist(&l, iota)?,
                    Some(path) => {
                        let f = io::read_subset(&path)?.for_algebra(&l)?;
                        if inca {
                            twist::inca_twist(&l, iota, &f)?
                        } else if brouwerian {
                            twist::sendlewski_twist(&l, iota, &f)?
                        } else {
                            bail!("--filter needs --brouwerian or --inca");
                        }
                    }
                }
            };
            print_twist(&tw, dot, tau_image, json)?;
            Ok(true)
        }
        Command::Conucleus { action } => conucleus(action),
        Command::Represent {
            algebra,
            tau,
            emit_proof_log,
        } => represent(&algebra, &tau, emit_proof_log.as_deref()),
        Command::Enumerate {
            size,
            commutative,
            integral,
            involutive,
            distributive,
            bounded,
            idempotent,
            odd,
            count_only,
            limit,
            skip,
            bound,
            all_labelings,
        } => {
            let mut c = Constraints::empty();
            for (on, flag) in [
                (commutative, Constraints::COMMUTATIVE),
                (integral, Constraints::INTEGRAL),
                (involutive, Constraints::INVOLUTIVE),
                (distributive, Constraints::DISTRIBUTIVE),
                (bounded, Constraints::BOUNDED),
                (idempotent, Constraints::IDEMPOTENT),
                (odd, Constraints::ODD),
            ] {
                c.set(flag, on);
            }
            let mut spec = SearchSpec::new(size).with(c).bound(bound).canonical_only(!all_labelings);
            spec.limit = limit.map(|l| l + skip);
            let stream = search::enumerate_residuated_lattices(&spec)?.skip(skip);
            if count_only {
                out!("{}", stream.count());
            } else {
                let mut out = BufWriter::new(std::io::stdout().lock());
                for a in stream {
                    writeln!(out, "{}", serde_json::to_string(&AlgebraTable::from(&a))?)?;
                }
            }
            Ok(true)
        }
        Command::Morphisms {
            source,
            target,
            kind,
            signature,
        } => {
            let a = io::read_algebra(&source)?;
            let b = io::read_algebra(&target)?;
            let sig = match signature {
                Some(s) => parse_signature(&s)?,
                None => Signature::of(&a) & Signature::of(&b),
            };
            let kind = match kind {
                Kind::Hom => MorphismKind::Hom,
                Kind::Embed => MorphismKind::Embed,
                Kind::Iso => MorphismKind::Iso,
            };
            let found = search::find_homomorphisms(&a, &b, sig, kind)?;
            out!("{} map(s) preserving {}", found.len(), signature_names(sig));
            for m in &found {
                let parts: Vec<String> = a.elements().map(|x| format!("{}↦{}", a.name(x), b.name(m.apply(x)))).collect();
                out!("{:?}  {}", m.table, parts.join(" "));
            }
            Ok(!found.is_empty())
        }
        Command::Subalgebras { algebra, signature } => {
            let a = io::read_algebra(&algebra)?;
            let sig = match signature {
                Some(s) => parse_signature(&s)?,
                None => Signature::of(&a),
            };
            let subs = search::subalgebras(&a, sig)?;
            out!("{} subuniverse(s) for {}", subs.len(), signature_names(sig));
            for s in &subs {
                out!("{:?}  {}", s.to_vec(), names_of(&a, s));
            }
            Ok(true)
        }
        Command::PaperSuite { fixtures } => {
            let corpus = match fixtures {
                None => corpus::corpus()?,
                Some(dir) => load_corpus(&dir)?,
            };
            let results = suite::run(&corpus);
            let width = results.iter().map(|r| r.key.len()).max().unwrap_or(0);
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                out!("{status}  {:width$}  {:>5}  {}", r.key, r.instances, r.statement);
                if !r.passed {
                    out!("      {}", r.detail.replace('\n', "\n      "));
                }
            }
            let passed = results.iter().filter(|r| r.passed).count();
            out!("{passed}/{} claims pass", results.len());
            Ok(passed == results.len())
        }
        Command::Export {
            algebra,
            format,
            canonical,
            corpus,
        } => {
            if let Some(dir) = corpus {
                corpus::write_corpus(&dir)?;
                return Ok(true);
            }
            let path = algebra.expect("clap requires an algebra");
            let mut a = io::read_algebra(&path)?;
            if canonical {
                a = search::canonical_form(&a);
            }
            match format {
                Format::Json => print!("{}", io::algebra_json(&a)),
                Format::Dot => print!("{}", dot::hasse(&a, &stem(&path), None)),
            }
            Ok(true)
        }
    }
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "algebra".into(), |s| s.to_string_lossy().into_owned())
}

fn load_corpus(dir: &Path) -> Result<Vec<corpus::Fixture>> {
    corpus::corpus()?
        .into_iter()
        .map(|f| {
            let algebra = io::read_algebra(&dir.join(format!("{}.json", f.name)))?;
            Ok(corpus::Fixture { algebra, ..f })
        })
        .collect()
}

/// An element given by index or by name.
fn element(a: &Algebra, s: &str) -> Result<Elem> {
    if let Some(x) = a.elements().find(|&x| a.name(x) == s) {
        return Ok(x);
    }
    match s.parse::<Elem>() {
        Ok(x) if x < a.size() => Ok(x),
        _ => bail!("no element `{s}` in an algebra of size {}", a.size()),
    }
}

fn parse_signature(s: &str) -> Result<Signature> {
    let mut sig = Signature::empty();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let flag = Signature::from_name(&part.to_uppercase()).ok_or_else(|| anyhow!("unknown operation `{part}`"))?;
        sig |= flag;
    }
    Ok(sig)
}

fn signature_names(sig: Signature) -> String {
    let names: Vec<String> = [
        Signature::JOIN,
        Signature::MEET,
        Signature::PROD,
        Signature::LDIV,
        Signature::RDIV,
        Signature::INVOL,
        Signature::UNIT,
        Signature::BOTTOM,
    ]
    .into_iter()
    .filter(|f| sig.contains(*f))
    .map(|f| sig_flag_name(f).to_lowercase())
    .collect();
    format!("{{{}}}", names.join(", "))
}

fn sig_flag_name(f: Signature) -> &'static str {
    Signature::all()
        .iter_names()
        .find(|(_, g)| *g == f)
        .map_or("?", |(n, _)| n)
}

fn names_of(a: &Algebra, s: &Subset) -> String {
    let v: Vec<&str> = s.iter().map(|x| a.name(x)).collect();
    format!("{{{}}}", v.join(", "))
}

fn show_verdict(a: &Algebra, v: &Verdict) {
    out!("{}: {}", v.name, if v.holds { "PASS" } else { "FAIL" });
    for ax in v.failed_axioms() {
        let ws: Vec<_> = v.witnesses.iter().filter(|w| w.axiom == ax).collect();
        let t: Vec<&str> = ws[0].tuple.iter().map(|&x| a.name(x)).collect();
        let more = if ws.len() > 1 { format!(" (+{} more)", ws.len() - 1) } else { String::new() };
        out!("  {ax} fails at ({}){more}", t.join(", "));
    }
}

fn tau_from(a: &Algebra, spec: &str) -> Result<UnaryMap> {
    Ok(match spec {
        "term:nelson" => conuclei::nelson_term_tau(a)?,
        "term:kalman" => conuclei::kalman_term_tau(a)?,
        path => io::read_unary_map(Path::new(path))?.for_algebra(a)?,
    })
}

fn check(path: &Path, variety: Variety, tau: &str) -> Result<bool> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let table: AlgebraTable = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let report = twistlab_core::validate(&table.clone().into())?;
    if !report.is_certified() {
        out!("residuated lattice: FAIL");
        print!("{report}");
        return Ok(false);
    }
    let a = table.certify()?;
    let v = match variety {
        Variety::Rl => {
            let p = a.profile();
            out!("residuated lattice: PASS");
            out!(
                "  commutative {} integral {} distributive {} involutive {} odd {} brouwerian {}",
                p.commutative, p.integral, p.distributive, p.involutive, p.odd, p.brouwerian
            );
            return Ok(true);
        }
        Variety::Kalman => varieties::is_kalman(&a)?,
        Variety::Nelson => varieties::is_nelson_rl(&a)?,
        Variety::Npc => varieties::is_npc(&a)?,
        Variety::Nt => varieties::is_nt(&a)?,
        Variety::Nt0 => varieties::is_nt0(&a)?,
        Variety::Brouwerian => varieties::is_brouwerian(&a)?,
        Variety::Inca => {
            let t = tau_from(&a, tau)?;
            rep::inca_check(&NcaPair::new(a.clone(), t)?)?
        }
    };
    show_verdict(&a, &v);
    Ok(v.holds)
}

fn print_twist(tw: &twist::Twist, as_dot: bool, tau_image: bool, as_json: bool) -> Result<()> {
    let a = &tw.algebra;
    if as_json {
        print!("{}", io::algebra_json(a));
        return Ok(());
    }
    let title = match tw.iota {
        Some(i) => format!("Tw(L,{})", tw.base.name(i)),
        None => "Tw(L)".into(),
    };
    let highlight = match tw.iota {
        Some(_) if tau_image => Some(twist::tau_tw(tw)?.image()),
        Some(_) if tw.pairs.len() == twist::twist(&tw.base, tw.iota.unwrap())?.size() => Some(twist::maximal_set(tw)?),
        _ => None,
    };
    if as_dot {
        print!("{}", dot::hasse(a, &title, highlight.as_ref()));
        return Ok(());
    }
    out!("{title}: {} elements", a.size());
    let all: Vec<&str> = a.elements().map(|x| a.name(x)).collect();
    out!("elements: {}", all.join(" "));
    if let Some(e) = a.unit() {
        out!("unit: {}", a.name(e));
    }
    if let Some(b) = a.bottom() {
        out!("bottom: {}", a.name(b));
    }
    if let Some(m) = highlight {
        out!("maximal set: {}", names_of(a, &m));
    }
    Ok(())
}

fn conucleus(action: ConucleusAction) -> Result<bool> {
    match action {
        ConucleusAction::Check { algebra, map, level } => {
            let a = io::read_algebra(&algebra)?;
            let d = io::read_unary_map(&map)?.for_algebra(&a)?;
            let v = match level {
                Level::Weak => conuclei::is_weak_conucleus(&a, &d)?,
                Level::Conucleus => conuclei::is_conucleus(&a, &d)?,
                Level::Nelson => conuclei::is_nelson_conucleus(&a, &d)?,
            };
            show_verdict(&a, &v);
            Ok(v.holds)
        }
        ConucleusAction::Image { algebra, map } => {
            let a = io::read_algebra(&algebra)?;
            let d = io::read_unary_map(&map)?.for_algebra(&a)?;
            let img = conuclei::conucleus_image(&a, &d)?;
            print!("{}", io::algebra_json(&img.algebra));
            Ok(true)
        }
        ConucleusAction::Enumerate { algebra, bound } => {
            let a = io::read_algebra(&algebra)?;
            let parent = stem(&algebra);
            for t in conuclei::enumerate_nelson_conuclei(&a, bound)? {
                let f = UnaryMapFile {
                    parent: parent.clone(),
                    table: t.table,
                };
                out!("{}", serde_json::to_string(&f)?);
            }
            Ok(true)
        }
    }
}

/// Prints the outcome of one theorem; errors count as failures.
fn report<T, E: std::fmt::Display>(key: &str, r: Result<T, E>, ok: impl FnOnce(&T) -> Option<String>) -> (bool, Option<T>) {
    match r {
        Ok(v) => match ok(&v) {
            None => {
                out!("PASS  {key}");
                (true, Some(v))
            }
            Some(why) => {
                out!("FAIL  {key}: {why}");
                (false, Some(v))
            }
        },
        Err(e) => {
            out!("FAIL  {key}: {e}");
            (false, None)
        }
    }
}

fn verdict_ok(v: &Verdict) -> Option<String> {
    (!v.holds).then(|| v.to_string().trim_end().to_string())
}

fn represent(path: &Path, tau: &str, log: Option<&Path>) -> Result<bool> {
    let a = io::read_algebra(path)?;
    let t = tau_from(&a, tau)?;
    let p = NcaPair::new(a.clone(), t)?;
    out!("algebra: {} ({} elements)", stem(path), a.size());
    let all: Vec<String> = a.elements().map(|x| format!("{}↦{}", a.name(x), a.name(p.t(x)))).collect();
    out!("τ: {}", all.join(" "));
    let mut all_pass = true;
    let (ok, ph) = report("thm:representation", rep::phi(&p), |_| None);
    all_pass &= ok;
    if let Some(ph) = &ph {
        let base: Vec<&str> = ph.image.embedding.iter().map(|&x| a.name(x)).collect();
        out!("  base A_τ: {{{}}}", base.join(", "));
        out!("  ι = τ(∼e) = {}", a.name(ph.image.embedding[ph.iota]));
        out!("  φ: {:?}", ph.morphism.table);
        out!("  onto the twist: {}", if ph.surjective { "yes" } else { "no" });
    }
    all_pass &= report("thm:adjunction", rep::adjunction_on_pair(&p), verdict_ok).0;
    all_pass &= report("thm:rasiowa", rep::rasiowa_round_trip(&p), verdict_ok).0;
    if a.is_commutative() && varieties::is_nt(&a)?.holds {
        let (ok, s) = report("thm:sendlewski", rep::sendlewski_isomorphism(&a), |_| None);
        all_pass &= ok;
        if let Some(s) = s {
            let h = &s.data.h;
            let f: Vec<&str> = s.data.filter.iter().map(|x| a.name(h.embedding[x])).collect();
            out!("  F_A: {{{}}}", f.join(", "));
        }
    } else {
        out!("n/a   thm:sendlewski: not Nelson-type");
    }
    if a.is_commutative() && a.bottom().is_some() && rep::inca_check(&p)?.holds {
        let (ok, s) = report("thm:inca", rep::inca_isomorphism(&p), |_| None);
        all_pass &= ok;
        if let Some(s) = s {
            let f: Vec<&str> = s.filter.iter().map(|x| a.name(s.embedding[x])).collect();
            out!("  F_A: {{{}}}", f.join(", "));
        }
    } else {
        out!("n/a   thm:inca: needs a commutative algebra with bottom satisfying IT1");
    }
    if let (Some(path), Some(ph)) = (log, &ph) {
        write_proof_log(path, &p, ph)?;
    }
    Ok(all_pass)
}

/// One JSON line per checked instance of `φ` preserving an operation or `τ`.
fn write_proof_log(path: &Path, p: &NcaPair, ph: &rep::Phi) -> Result<()> {
    let a = p.algebra();
    let tw = &ph.twist.algebra;
    let f = |x: Elem| ph.morphism.apply(x);
    let mut out = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
    for (sig, op) in Signature::RESIDUATED.binary_ops() {
        let name = sig_flag_name(sig).to_lowercase();
        for x in a.elements() {
            for y in a.elements() {
                let (lhs, rhs) = (f(op(a, x, y)), op(tw, f(x), f(y)));
                let line = json!({"claim": "thm:representation", "op": name, "args": [x, y], "lhs": lhs, "rhs": rhs, "ok": lhs == rhs});
                writeln!(out, "{line}")?;
            }
        }
    }
    let tau_tw = twist::tau_tw(&ph.twist)?;
    for x in a.elements() {
        let (lhs, rhs) = (f(a.neg(x)), tw.neg(f(x)));
        writeln!(out, "{}", json!({"claim": "thm:representation", "op": "invol", "args": [x], "lhs": lhs, "rhs": rhs, "ok": lhs == rhs}))?;
        let (lhs, rhs) = (f(p.t(x)), tau_tw.apply(f(x)));
        writeln!(out, "{}", json!({"claim": "thm:representation", "op": "tau", "args": [x], "lhs": lhs, "rhs": rhs, "ok": lhs == rhs}))?;
    }
    out.flush()?;
    Ok(())
}
