//! Subcommand implementations.
//!
//! Exit-code contract: 0 on success, 1 when a check or verification fails,
//! 2 on malformed input (surfaced as `Err`). With `--json` every command
//! prints a single machine-readable object on stdout; arc sets are always
//! emitted in canonically sorted order so outputs can be diffed across
//! closure methods.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use diamondlat::birkhoff::{birkhoff_repr, closure_dldc, downset_lattice, DownsetLattice, QuasiOrder};
use diamondlat::diamond::ArcSet;
use diamondlat::lattice::Arc;
use diamondlat::ncpoly::wedderburn;
use diamondlat::pseudoroots::{DerivationRule, GenerationReport, PseudoRootError, PseudoRootLattice};
use diamondlat::FiniteLattice;

use crate::formats;
use crate::suites::{run_suites, SuiteConfig, DEFAULT_SEED, SUITE_NAMES};

#[derive(Parser, Debug)]
#[command(
    name = "diamondlat",
    version,
    about = "Diamond closures on cover graphs of finite modular lattices, \
             with Wedderburn pseudo-root lattices over the rational quaternions"
)]
pub struct Cli {
    /// Emit machine-readable JSON on stdout
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized verification suites
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Trial-count override for randomized verification suites
    #[arg(long, global = true)]
    pub trials: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lattice file operations
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Diamond closure of an arc set, by any of the three routes
    Closure {
        #[arg(long, value_enum)]
        method: Method,
        /// Host lattice file (defaults to the one named in the arcs file)
        #[arg(long, conflicts_with = "poset")]
        lattice: Option<PathBuf>,
        /// Pointed poset file; the host becomes its downset lattice
        #[arg(long)]
        poset: Option<PathBuf>,
        /// Arc-set file
        #[arg(long)]
        arcs: PathBuf,
    },
    /// The minimal monic polynomial vanishing on a quaternion set
    Wedderburn {
        /// Quaternion-set file
        #[arg(long)]
        set: PathBuf,
    },
    /// Build the Wedderburn lattice of a quaternion set, print its
    /// pseudo-root table, and replay the diamond closure of a base arc set
    /// (the zero arcs by default) through the conjugation formulas
    Pseudoroots {
        /// Quaternion-set file
        #[arg(long)]
        set: PathBuf,
        /// Base arc-set file (indices into the built lattice)
        #[arg(long)]
        arcs: Option<PathBuf>,
    },
    /// Emit a standard corpus lattice as a lattice file
    Gen {
        /// Family spec: boolean:N, chain:N, m3, n5, divisor:N, or
        /// product(SPEC,SPEC)
        #[arg(long)]
        family: String,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite (`--suite all` runs every criterion)
    Verify {
        #[arg(long)]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LatticeAction {
    /// Validate the lattice axioms and report ranked/modular/distributive
    Check { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Fixpoint over spanned diamonds (any host)
    Naive,
    /// Sublattice packing merge (modular hosts)
    Mldc,
    /// Quasi-order merge on the Birkhoff representation (distributive hosts)
    Dldc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    CheckFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::CheckFailed => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Lattice {
            action: LatticeAction::Check { ref file },
        } => lattice_check(file, cli.json),
        Command::Closure {
            method,
            ref lattice,
            ref poset,
            ref arcs,
        } => closure(method, lattice.as_deref(), poset.as_deref(), arcs, cli.json),
        Command::Wedderburn { ref set } => wedderburn_cmd(set, cli.json),
        Command::Pseudoroots { ref set, ref arcs } => {
            pseudoroots_cmd(set, arcs.as_deref(), cli.json)
        }
        Command::Gen {
            ref family,
            ref out,
        } => gen_cmd(family, out.as_deref(), cli.json),
        Command::Verify { ref suite } => {
            let cfg = SuiteConfig {
                seed: cli.seed.unwrap_or(DEFAULT_SEED),
                trials: cli.trials,
            };
            verify_cmd(suite, &cfg, cli.json)
        }
    }
}

fn lattice_check(file: &std::path::Path, json: bool) -> Result<Outcome> {
    let (n, rel, names) = formats::load_lattice_relation(file)?;
    match FiniteLattice::build(n, rel, Some(names)) {
        Ok(l) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "valid": true,
                        "elements": l.len(),
                        "cover_arcs": l.covers().len(),
                        "bottom": l.bottom(),
                        "top": l.top(),
                        "height": l.height().of(l.top()),
                        "ranked": l.is_ranked(),
                        "modular": l.is_modular(),
                        "distributive": l.is_distributive(),
                    }))?
                );
            } else {
                println!("valid lattice with {} elements, {} cover arcs", l.len(), l.covers().len());
                println!("bottom: {}  top: {}  height: {}", l.name(l.bottom()), l.name(l.top()), l.height().of(l.top()));
                println!("ranked: {}", l.is_ranked());
                println!("modular: {}", l.is_modular());
                println!("distributive: {}", l.is_distributive());
            }
            Ok(Outcome::Success)
        }
        Err(e) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "valid": false, "error": e.to_string() }))?
                );
            } else {
                println!("invalid: {e}");
            }
            Ok(Outcome::CheckFailed)
        }
    }
}

enum Host {
    Lattice(FiniteLattice),
    Downsets(Box<DownsetLattice>),
}

impl Host {
    fn lattice(&self) -> &FiniteLattice {
        match self {
            Host::Lattice(l) => l,
            Host::Downsets(dl) => &dl.lattice,
        }
    }
}

fn quasi_order_json(q: &QuasiOrder) -> serde_json::Value {
    let pairs: Vec<(usize, usize)> = (0..q.len())
        .flat_map(|i| (0..q.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && q.rel(i, j))
        .collect();
    json!({ "pairs": pairs })
}

fn closure(
    method: Method,
    lattice_path: Option<&std::path::Path>,
    poset_path: Option<&std::path::Path>,
    arcs_path: &std::path::Path,
    json_out: bool,
) -> Result<Outcome> {
    let (arc_list, referenced) = formats::load_arcs(arcs_path)?;
    let host = if let Some(p) = poset_path {
        let poset = formats::load_poset(p)?;
        let dl = downset_lattice(&poset).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
        Host::Downsets(Box::new(dl))
    } else {
        let path = lattice_path
            .map(PathBuf::from)
            .or(referenced)
            .context("no host lattice: pass --lattice/--poset or name one in the arcs file")?;
        Host::Lattice(formats::load_lattice(&path)?)
    };
    let l = host.lattice();
    let base = ArcSet::new(l, arc_list.iter().copied().collect())
        .map_err(|e| anyhow::anyhow!("{}: {e}", arcs_path.display()))?;

    let mut packing_json = None;
    let mut quasi_json = None;
    let closed: BTreeSet<Arc> = match method {
        Method::Naive => base.closure_naive().arcs().clone(),
        Method::Mldc => {
            let (closed, packing) = base
                .closure_mldc()
                .map_err(|e| anyhow::anyhow!("mldc closure: {e}"))?;
            packing_json = Some(json!(packing
                .blocks()
                .iter()
                .map(|b| b.iter().copied().collect::<Vec<_>>())
                .collect::<Vec<_>>()));
            closed.arcs().clone()
        }
        Method::Dldc => match &host {
            Host::Downsets(dl) => {
                let (closed, family) =
                    closure_dldc(dl, &base).map_err(|e| anyhow::anyhow!("dldc closure: {e}"))?;
                quasi_json = Some(json!(family.iter().map(quasi_order_json).collect::<Vec<_>>()));
                closed.arcs().clone()
            }
            Host::Lattice(l) => {
                let repr =
                    birkhoff_repr(l).map_err(|e| anyhow::anyhow!("dldc needs a distributive host: {e}"))?;
                let mapped: BTreeSet<Arc> = base
                    .arcs()
                    .iter()
                    .map(|a| Arc::new(repr.to_downset[a.top], repr.to_downset[a.bottom]))
                    .collect();
                let mapped = ArcSet::new(&repr.downsets.lattice, mapped)
                    .expect("isomorphism preserves covers");
                let (closed, family) = closure_dldc(&repr.downsets, &mapped)
                    .map_err(|e| anyhow::anyhow!("dldc closure: {e}"))?;
                quasi_json = Some(json!(family.iter().map(quasi_order_json).collect::<Vec<_>>()));
                closed
                    .arcs()
                    .iter()
                    .map(|a| Arc::new(repr.from_downset[a.top], repr.from_downset[a.bottom]))
                    .collect()
            }
        },
    };
    let generates_all = closed.len() == l.covers().len();

    if json_out {
        let mut obj = json!({
            "method": format!("{method:?}").to_lowercase(),
            "input_arcs": formats::arcs_json(base.arcs()),
            "closure": formats::arcs_json(&closed),
            "closure_size": closed.len(),
            "generates_all": generates_all,
        });
        if let Some(p) = packing_json {
            obj["packing"] = p;
        }
        if let Some(q) = quasi_json {
            obj["quasi_orders"] = q;
        }
        println!("{}", serde_json::to_string_pretty(&obj)?);
    } else {
        println!(
            "closure of {} arcs has {} arcs ({} of {} cover arcs)",
            base.len(),
            closed.len(),
            closed.len(),
            l.covers().len()
        );
        for a in &closed {
            println!("  {} -> {}", l.name(a.top), l.name(a.bottom));
        }
        if let Some(p) = packing_json {
            println!("packing blocks: {p}");
        }
        if let Some(q) = quasi_json {
            println!("quasi-order family: {q}");
        }
        println!("generates all arcs: {generates_all}");
    }
    Ok(Outcome::Success)
}

fn wedderburn_cmd(set_path: &std::path::Path, json_out: bool) -> Result<Outcome> {
    let set = formats::load_quaternion_set(set_path)?;
    let f = wedderburn(&set);
    if json_out {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "set": set.iter().map(formats::quaternion_json).collect::<Vec<_>>(),
                "degree": f.degree(),
                "coefficients": formats::poly_json(&f),
                "display": f.to_string(),
            }))?
        );
    } else {
        println!("f_S = {f}");
        println!("degree: {:?}", f.degree().unwrap_or(0));
    }
    Ok(Outcome::Success)
}

fn rule_json(rule: &DerivationRule) -> serde_json::Value {
    match rule {
        DerivationRule::Given => json!({ "op": "given" }),
        DerivationRule::Up { operands } => json!({
            "op": "diamond_up",
            "operands": [[operands.0.top, operands.0.bottom], [operands.1.top, operands.1.bottom]],
        }),
        DerivationRule::Down { operands } => json!({
            "op": "diamond_down",
            "operands": [[operands.0.top, operands.0.bottom], [operands.1.top, operands.1.bottom]],
        }),
    }
}

fn generation_json(rep: &GenerationReport) -> serde_json::Value {
    json!({
        "base": formats::arcs_json(&rep.base),
        "closure": formats::arcs_json(&rep.closure),
        "complete": rep.complete,
        "exact": rep.is_exact(),
        "degenerate_diamonds": rep.degenerate.len(),
        "steps": rep.steps.iter().map(|s| json!({
            "arc": [s.arc.top, s.arc.bottom],
            "value": formats::quaternion_json(&s.value),
            "rule": rule_json(&s.rule),
        })).collect::<Vec<_>>(),
        "mismatches": rep.mismatches.iter().map(|m| json!({
            "arc": [m.arc.top, m.arc.bottom],
            "derived": formats::quaternion_json(&m.derived),
            "stored": formats::quaternion_json(&m.stored),
        })).collect::<Vec<_>>(),
    })
}

fn pseudoroots_cmd(
    set_path: &std::path::Path,
    arcs_path: Option<&std::path::Path>,
    json_out: bool,
) -> Result<Outcome> {
    let set = formats::load_quaternion_set(set_path)?;
    let pl = match PseudoRootLattice::build(&set) {
        Ok(pl) => pl,
        Err(e @ PseudoRootError::TooLarge { .. }) => bail!("{}: {e}", set_path.display()),
        Err(e) => {
            // structural invariant failed: an assertion failure, not bad input
            eprintln!("invariant failure while building the lattice: {e}");
            return Ok(Outcome::CheckFailed);
        }
    };
    let base: BTreeSet<Arc> = match arcs_path {
        Some(p) => formats::load_arcs(p)?.0.into_iter().collect(),
        None => pl.zero_arcs(),
    };
    let report = pl
        .generation_check(&base)
        .map_err(|e| anyhow::anyhow!("generation check: {e}"))?;
    let l = pl.lattice();

    if json_out {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "set": set.iter().map(formats::quaternion_json).collect::<Vec<_>>(),
                "f_s": formats::poly_json(pl.f_s()),
                "f_s_display": pl.f_s().to_string(),
                "generic": pl.generic_check(),
                "lattice": { "elements": l.len(), "cover_arcs": l.covers().len() },
                "psi": pl.psi_table().iter().map(|(a, v)| json!({
                    "arc": [a.top, a.bottom],
                    "top": l.name(a.top),
                    "bottom": l.name(a.bottom),
                    "value": formats::quaternion_json(v),
                })).collect::<Vec<_>>(),
                "generation": generation_json(&report),
            }))?
        );
    } else {
        println!("f_S = {}", pl.f_s());
        println!(
            "lattice: {} polynomials, {} cover arcs, generic: {}",
            l.len(),
            l.covers().len(),
            pl.generic_check()
        );
        println!("pseudo-roots:");
        for (a, v) in pl.psi_table() {
            println!("  {} -> {}  :  {v}", l.name(a.top), l.name(a.bottom));
        }
        println!(
            "replay of {} base arcs: closure {} arcs, complete: {}, exact: {}",
            report.base.len(),
            report.closure.len(),
            report.complete,
            report.is_exact()
        );
        for s in &report.steps {
            let how = match &s.rule {
                DerivationRule::Given => "given".to_string(),
                DerivationRule::Up { operands } => format!(
                    "diamond_up from ({}->{}, {}->{})",
                    operands.0.top, operands.0.bottom, operands.1.top, operands.1.bottom
                ),
                DerivationRule::Down { operands } => format!(
                    "diamond_down from ({}->{}, {}->{})",
                    operands.0.top, operands.0.bottom, operands.1.top, operands.1.bottom
                ),
            };
            println!("  psi({} -> {}) = {}  [{how}]", s.arc.top, s.arc.bottom, s.value);
        }
        for m in &report.mismatches {
            println!(
                "  MISMATCH at {} -> {}: derived {} stored {}",
                m.arc.top, m.arc.bottom, m.derived, m.stored
            );
        }
    }
    Ok(if report.is_exact() {
        Outcome::Success
    } else {
        Outcome::CheckFailed
    })
}

/// Builds one of the standard corpus lattices from a family spec.
pub fn make_standard(spec: &str) -> Result<FiniteLattice> {
    let spec = spec.trim();
    if let Some(inner) = spec.strip_prefix("product(").and_then(|s| s.strip_suffix(')')) {
        let mut depth = 0usize;
        let mut split = None;
        for (idx, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    split = Some(idx);
                    break;
                }
                _ => {}
            }
        }
        let idx = split.context("product(...) needs two comma-separated factors")?;
        let a = make_standard(&inner[..idx])?;
        let b = make_standard(&inner[idx + 1..])?;
        return Ok(FiniteLattice::product(&a, &b));
    }
    match spec.split_once(':') {
        Some(("boolean", k)) => {
            let k: u32 = k.parse().context("boolean:N needs an integer")?;
            if k > 12 {
                bail!("boolean:{k} is too large (limit 12)");
            }
            Ok(FiniteLattice::boolean(k))
        }
        Some(("chain", n)) => {
            let n: usize = n.parse().context("chain:N needs an integer")?;
            if n == 0 || n > 4096 {
                bail!("chain:{n} out of range (1..=4096)");
            }
            Ok(FiniteLattice::chain(n))
        }
        Some(("divisor", m)) => {
            let m: u64 = m.parse().context("divisor:N needs an integer")?;
            if m == 0 || m > 1_000_000 {
                bail!("divisor:{m} out of range (1..=1000000)");
            }
            Ok(FiniteLattice::divisor_lattice(m))
        }
        None if spec == "m3" => Ok(FiniteLattice::m3()),
        None if spec == "n5" => Ok(FiniteLattice::n5()),
        _ => bail!("unknown family `{spec}` (boolean:N, chain:N, m3, n5, divisor:N, product(A,B))"),
    }
}

fn gen_cmd(family: &str, out: Option<&std::path::Path>, _json: bool) -> Result<Outcome> {
    let l = make_standard(family)?;
    let file = formats::lattice_to_file(&l);
    let text = serde_json::to_string_pretty(&file)?;
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(Outcome::Success)
}

fn verify_cmd(suite: &str, cfg: &SuiteConfig, json_out: bool) -> Result<Outcome> {
    if suite != "all" && !SUITE_NAMES.contains(&suite) {
        bail!("unknown suite `{suite}`; expected one of {SUITE_NAMES:?} or `all`");
    }
    let reports = run_suites(suite, cfg)?;
    let all_passed = reports.iter().all(|r| r.passed);
    if json_out {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "seed": cfg.seed,
                "passed": all_passed,
                "suites": reports.iter().map(|r| json!({
                    "suite": r.suite,
                    "criterion": r.criterion,
                    "passed": r.passed,
                    "details": r.details,
                })).collect::<Vec<_>>(),
            }))?
        );
    } else {
        for r in &reports {
            println!("{}", r.headline());
            for extra in r.details.iter().skip(1) {
                println!("      {extra}");
            }
        }
        println!(
            "{} of {} suites passed (seed {})",
            reports.iter().filter(|r| r.passed).count(),
            reports.len(),
            cfg.seed
        );
    }
    Ok(if all_passed {
        Outcome::Success
    } else {
        Outcome::CheckFailed
    })
}
