//! The `cmdual` command line: file inputs, JSON reports and exit codes
//! (0 every verdict true, 1 a verdict false, 2 bad usage).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Ring;
use crate::complex::{parse_complex, parse_filtration, parse_subcomplex, Region, SimplicialComplex, Subcomplex};
use crate::functor::{preimage, verify_naturality, SimplicialMap, StarLocalMap};
use crate::identities::sweep;
use crate::local::{cm_check, link_crosscheck, local_homology, uct_check, HCosheaf, HSheaf};
use crate::mv::{verify_duality, Item};
use crate::report::{stalk_labels, Group};
use crate::sections::{compactly_determined_dual, lf_h0_check};
use crate::sheaf::{cosheaf_chain_complex, sheaf_cochain_complex, Support, Variant};
use crate::simplicial::{chains, cochains};
use crate::{Error, Result};

pub const SCHEMA: &str = "cmdual-report/1";

#[derive(Debug, Parser)]
#[command(name = "cmdual", version, about = "Exact local homology and Cohen–Macaulay duality checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// z, q or fp:<prime>.
    #[arg(long, default_value = "z")]
    pub ring: String,
    /// Complex file. `naturality` takes it twice: source, then target.
    #[arg(long, required = true)]
    pub complex: Vec<PathBuf>,
    /// Full subcomplex file (`vertices: ...`).
    #[arg(long)]
    pub subcomplex: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for the parallel sweeps.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coefficients {
    /// Constant coefficients.
    R,
    /// Cohomology of the local homology sheaf.
    HLower,
    /// Homology of the local cohomology cosheaf.
    HUpper,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simplicial, sheaf or cosheaf (co)homology.
    Homology {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "r")]
        coefficients: Coefficients,
        /// With a subcomplex: use `L` itself instead of the pair `(X, L)`.
        #[arg(long)]
        on_subcomplex: bool,
        #[arg(long)]
        dim: Option<i32>,
        #[arg(long)]
        degree: Option<i32>,
    },
    /// Local homology stalks, the link cross-check and the pairing check.
    Local {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dim: Option<i32>,
        #[arg(long)]
        degree: Option<i32>,
    },
    /// The Cohen–Macaulay condition with witnesses.
    CheckCm {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dim: Option<i32>,
    },
    /// `[X]⌢−` for one duality item; `L` defaults to `X`.
    Duality {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        item: String,
    },
    /// Naturality squares along a star-local map; the subcomplex lives in the target.
    Naturality {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        map: PathBuf,
        /// All eight items when omitted.
        #[arg(long)]
        item: Option<String>,
    },
    /// `H_0` of `h^n` against the dual of the sections of `h_n`.
    Sections {
        #[command(flatten)]
        common: Common,
        /// `stage: v ...` lines, increasing, ending at `L`.
        #[arg(long)]
        filtration: Option<PathBuf>,
    },
    /// Every chain-level identity, generator by generator.
    Identities {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Homology { common, .. }
            | Command::Local { common, .. }
            | Command::CheckCm { common, .. }
            | Command::Duality { common, .. }
            | Command::Naturality { common, .. }
            | Command::Sections { common, .. }
            | Command::Identities { common } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Homology { .. } => "homology",
            Command::Local { .. } => "local",
            Command::CheckCm { .. } => "check-cm",
            Command::Duality { .. } => "duality",
            Command::Naturality { .. } => "naturality",
            Command::Sections { .. } => "sections",
            Command::Identities { .. } => "identities",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema: &'static str,
    pub command: &'static str,
    pub ring: Ring,
    /// Vertex order used, per input complex.
    pub order: Vec<Vec<String>>,
    /// Whether the input order was changed to put `L^vc` before `L`.
    pub reordered: bool,
    pub verdict: bool,
    pub report: Value,
}

struct Outcome {
    order: Vec<Vec<String>>,
    reordered: bool,
    verdict: bool,
    report: Value,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex(&read(path)?)
}

fn load_sub(x: &SimplicialComplex, path: Option<&PathBuf>) -> Result<Option<Subcomplex>> {
    path.map(|p| parse_subcomplex(&read(p)?, x)).transpose()
}

fn one_complex(common: &Common) -> Result<SimplicialComplex> {
    match common.complex.as_slice() {
        [p] => load_complex(p),
        _ => Err(Error::Usage("expected exactly one --complex".into())),
    }
}

/// `x` reoriented so that `L^vc` comes first, and whether anything moved.
fn oriented(x: &SimplicialComplex, l: &Subcomplex) -> (SimplicialComplex, bool) {
    if l.has_vc_before(x) {
        (x.clone(), false)
    } else {
        (l.orient_vc_before(x), true)
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn failure(order: Vec<Vec<String>>, reordered: bool, e: &Error) -> Outcome {
    Outcome {
        order,
        reordered,
        verdict: false,
        report: json!({ "error": e.to_string() }),
    }
}

/// Errors that are mathematical verdicts rather than bad input.
fn is_verdict(e: &Error) -> bool {
    matches!(e, Error::Hypothesis(_) | Error::NotStarLocal(_) | Error::TorsionStalk(_) | Error::NotPure(_))
}

fn homology(x: &SimplicialComplex, l: Option<Subcomplex>, on_sub: bool, coefficients: Coefficients, n: i32, degree: Option<i32>, ring: Ring) -> Result<Value> {
    let region = match (l, on_sub) {
        (None, _) => Region::Whole,
        (Some(l), true) => Region::Sub(l),
        (Some(l), false) => Region::Relative(l),
    };
    let degrees: Vec<i32> = match degree {
        Some(d) => vec![d],
        None => (0..=x.dim().max(0) as i32).collect(),
    };
    let plain = |b: &crate::chain::Graded<crate::complex::Simplex>, k: i32| -> Vec<String> { b.at(k).iter().map(|s| x.display(s)).collect() };
    let out = match coefficients {
        Coefficients::R => {
            let c = chains(x, &region, ring)?;
            let d = cochains(x, &region, ring)?;
            json!({
                "homology": degrees.iter().map(|&k| (k.to_string(), Group::new(&c.complex.homology(k), &plain(&c.basis, k)))).collect::<std::collections::BTreeMap<_, _>>(),
                "cohomology": degrees.iter().map(|&k| (k.to_string(), Group::new(&d.complex.homology(-k), &plain(&d.basis, -k)))).collect::<std::collections::BTreeMap<_, _>>(),
            })
        }
        Coefficients::HLower => {
            let hs = HSheaf::build(x, n, ring)?;
            let c = sheaf_cochain_complex(x, hs.sheaf(), &region, Support::Plain)?;
            json!({
                "n": n,
                "cohomology": degrees.iter().map(|&k| (k.to_string(), Group::new(&c.complex.homology(-k), &stalk_labels(x, &c.basis, -k, false)))).collect::<std::collections::BTreeMap<_, _>>(),
            })
        }
        Coefficients::HUpper => {
            let hc = HCosheaf::build(x, n, ring)?;
            let c = cosheaf_chain_complex(x, hc.cosheaf(), &region, Variant::Finite)?;
            json!({
                "n": n,
                "homology": degrees.iter().map(|&k| (k.to_string(), Group::new(&c.complex.homology(k), &stalk_labels(x, &c.basis, k, false)))).collect::<std::collections::BTreeMap<_, _>>(),
            })
        }
    };
    Ok(out)
}

fn local(x: &SimplicialComplex, n: i32, degree: Option<i32>, ring: Ring) -> Result<(bool, Value)> {
    let degrees: Vec<i32> = match degree {
        Some(d) => vec![d],
        None => (0..=x.dim() as i32).collect(),
    };
    let mut verdict = true;
    let mut rows = Vec::new();
    for s in x.all_simplices() {
        let groups: std::collections::BTreeMap<String, String> = degrees
            .iter()
            .map(|&k| Ok((k.to_string(), Group::new(&local_homology(x, s, k, ring)?, &[]).summary())))
            .collect::<Result<_>>()?;
        let link = link_crosscheck(x, s, ring)?;
        let uct = uct_check(x, s, n, ring)?;
        verdict &= link && (uct.holds() || !uct.torsion_free);
        rows.push(json!({ "simplex": x.display(s), "local_homology": groups, "link_crosscheck": link, "uct": uct }));
    }
    Ok((verdict, json!({ "n": n, "simplices": rows })))
}

fn run_command(cmd: &Command, ring: Ring) -> Result<Outcome> {
    let common = cmd.common();
    let single = || -> Result<(SimplicialComplex, Option<Subcomplex>)> {
        let x = one_complex(common)?;
        let l = load_sub(&x, common.subcomplex.as_ref())?;
        Ok((x, l))
    };
    match cmd {
        Command::Homology { coefficients, on_subcomplex, dim, degree, .. } => {
            let (x, l) = single()?;
            let n = dim.unwrap_or(x.dim() as i32);
            let order = vec![x.order_labels()];
            match homology(&x, l, *on_subcomplex, *coefficients, n, *degree, ring) {
                Ok(report) => Ok(Outcome { order, reordered: false, verdict: true, report }),
                Err(e) if is_verdict(&e) => Ok(failure(order, false, &e)),
                Err(e) => Err(e),
            }
        }
        Command::Local { dim, degree, .. } => {
            let (x, _) = single()?;
            let (verdict, report) = local(&x, dim.unwrap_or(x.dim() as i32), *degree, ring)?;
            Ok(Outcome { order: vec![x.order_labels()], reordered: false, verdict, report })
        }
        Command::CheckCm { dim, .. } => {
            let (x, l) = single()?;
            let n = dim.unwrap_or(x.dim() as i32);
            let given = l.is_some();
            let r = cm_check(&x, &l.unwrap_or_else(|| Subcomplex::whole(&x)), n, ring)?;
            let verdict = if given { r.locally_cm_at_l } else { r.cm };
            Ok(Outcome { order: vec![x.order_labels()], reordered: false, verdict, report: to_value(&r) })
        }
        Command::Duality { item, .. } => {
            let item: Item = item.parse()?;
            let (x, l) = single()?;
            let l = l.unwrap_or_else(|| Subcomplex::whole(&x));
            let (y, reordered) = oriented(&x, &l);
            let order = vec![y.order_labels()];
            match verify_duality(&y, &l, item, ring) {
                Ok(r) => Ok(Outcome { order, reordered, verdict: r.iso, report: to_value(&r) }),
                Err(e) if is_verdict(&e) => Ok(failure(order, reordered, &e)),
                Err(e) => Err(e),
            }
        }
        Command::Naturality { map, item, .. } => {
            let [source, target] = common.complex.as_slice() else {
                return Err(Error::Usage("naturality needs --complex <source> --complex <target>".into()));
            };
            let (x, y) = (load_complex(source)?, load_complex(target)?);
            let k = load_sub(&y, common.subcomplex.as_ref())?.unwrap_or_else(|| Subcomplex::whole(&y));
            let text = read(map)?;
            let l = preimage(&SimplicialMap::parse(&x, &y, &text)?, &k);
            let ((xo, rx), (yo, ry)) = (oriented(&x, &l), oriented(&y, &k));
            let order = vec![xo.order_labels(), yo.order_labels()];
            let f = match StarLocalMap::new(SimplicialMap::parse(&xo, &yo, &text)?) {
                Ok(f) => f,
                Err(e) => return Ok(failure(order, rx || ry, &e)),
            };
            let items: Vec<Item> = match item {
                Some(i) => vec![i.parse()?],
                None => Item::ALL.to_vec(),
            };
            let mut verdict = true;
            let mut reports = Vec::new();
            for i in items {
                match verify_naturality(&f, &k, i, ring) {
                    Ok(r) => {
                        verdict &= r.commutes;
                        reports.push(to_value(&r));
                    }
                    Err(e) if is_verdict(&e) => {
                        verdict = false;
                        reports.push(json!({ "item": i, "error": e.to_string() }));
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok(Outcome { order, reordered: rx || ry, verdict, report: json!({ "squares": reports }) })
        }
        Command::Sections { filtration, .. } => {
            let (x, l) = single()?;
            let l = l.unwrap_or_else(|| Subcomplex::whole(&x));
            let order = vec![x.order_labels()];
            let stages = filtration.as_ref().map(|p| read(p).and_then(|t| parse_filtration(&t, &x))).transpose()?;
            let run = || -> Result<(bool, Value)> {
                let h0 = lf_h0_check(&x, &l, ring)?;
                let mut verdict = h0.iso;
                let mut report = json!({ "lf_h0": h0 });
                if let Some(stages) = &stages {
                    if stages.last() != Some(&l) {
                        return Err(Error::Usage("the last filtration stage must be the subcomplex".into()));
                    }
                    let c = compactly_determined_dual(&x, stages, ring)?;
                    verdict &= c.iso;
                    report["colimit"] = to_value(&c);
                }
                Ok((verdict, report))
            };
            match run() {
                Ok((verdict, report)) => Ok(Outcome { order, reordered: false, verdict, report }),
                Err(e) if is_verdict(&e) => Ok(failure(order, false, &e)),
                Err(e) => Err(e),
            }
        }
        Command::Identities { .. } => {
            let (x, l) = single()?;
            let l = l.unwrap_or_else(|| Subcomplex::whole(&x));
            let (y, reordered) = oriented(&x, &l);
            let r = sweep(&y, &l, ring)?;
            Ok(Outcome { order: vec![y.order_labels()], reordered, verdict: r.holds(), report: to_value(&r) })
        }
    }
}

/// Runs one parsed command and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let common = cli.command.common();
    if let Some(t) = common.threads {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let outcome = common.ring.parse::<Ring>().and_then(|ring| run_command(&cli.command, ring).map(|o| (ring, o)));
    let (ring, o) = match outcome {
        Ok(x) => x,
        Err(e) => {
            eprintln!("cmdual: {e}");
            return 2;
        }
    };
    let envelope = Envelope {
        schema: SCHEMA,
        command: cli.command.name(),
        ring,
        order: o.order,
        reordered: o.reordered,
        verdict: o.verdict,
        report: o.report,
    };
    let text = serde_json::to_string_pretty(&envelope).expect("reports serialize") + "\n";
    let written = match &common.out {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("cmdual: {e}");
        return 2;
    }
    if envelope.verdict {
        0
    } else {
        1
    }
}

/// Parses `args` (including the program name) and runs.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}
