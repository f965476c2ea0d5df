//! Reproducible verification suites, one per acceptance criterion.
//!
//! Every suite is deterministic given its seed, prints one pass/fail line,
//! and uses exact equality everywhere — the objects under test are discrete
//! or exact-rational, so there are no tolerances to tune.

use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::{bail, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use diamondlat::birkhoff::{
    all_extensions, birkhoff_repr, closure_dldc, downset_lattice, extension_sublattice,
    join_irreducibles, order_from_family, BirkhoffRepr, PointedPoset,
};
use diamondlat::diamond::{ArcSet, CsPacking};
use diamondlat::exactnum::{rational, Quaternion};
use diamondlat::iso::posets_isomorphic;
use diamondlat::lattice::Arc;
use diamondlat::ncpoly::NCPoly;
use diamondlat::pseudoroots::{diamond_down, diamond_up, PseudoRootLattice};
use diamondlat::FiniteLattice;

pub const DEFAULT_SEED: u64 = 2026;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub criterion: usize,
    pub passed: bool,
    pub details: Vec<String>,
}

impl SuiteReport {
    pub fn headline(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let detail = self.details.first().cloned().unwrap_or_default();
        format!(
            "[{status}] criterion {:>2} {}: {detail}",
            self.criterion, self.suite
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides the per-criterion default trial counts when set.
    pub trials: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            trials: None,
        }
    }
}

pub const SUITE_NAMES: [&str; 10] = [
    "closure-exhaustive",
    "closure-random",
    "closed-bijection",
    "nonmodular-control",
    "generating-families",
    "birkhoff-roundtrip",
    "wedderburn-random",
    "weakening-replay",
    "worked-example",
    "closure-axioms",
];

pub fn run_suites(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    let run_one = |n: &str| -> Result<SuiteReport> {
        Ok(match n {
            "closure-exhaustive" => closure_exhaustive(),
            "closure-random" => closure_random(cfg),
            "closed-bijection" => closed_bijection(),
            "nonmodular-control" => nonmodular_control(),
            "generating-families" => generating_families(),
            "birkhoff-roundtrip" => birkhoff_roundtrip(cfg),
            "wedderburn-random" => wedderburn_random(cfg),
            "weakening-replay" => weakening_replay(cfg),
            "worked-example" => worked_example(),
            "closure-axioms" => closure_axioms(cfg),
            other => bail!("unknown suite `{other}`; expected one of {SUITE_NAMES:?} or `all`"),
        })
    };
    if name == "all" {
        SUITE_NAMES.iter().map(|n| run_one(n)).collect()
    } else {
        Ok(vec![run_one(name)?])
    }
}

fn report(
    suite: &'static str,
    criterion: usize,
    failures: Vec<String>,
    summary: String,
) -> SuiteReport {
    let passed = failures.is_empty();
    let mut details = vec![summary];
    details.extend(failures);
    SuiteReport {
        suite,
        criterion,
        passed,
        details,
    }
}

fn subset_arcs(covers: &[Arc], mask: usize) -> BTreeSet<Arc> {
    covers
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &a)| a)
        .collect()
}

fn random_arcs(l: &FiniteLattice, rng: &mut StdRng, p: f64) -> BTreeSet<Arc> {
    l.covers().iter().copied().filter(|_| rng.random_bool(p)).collect()
}

/// The closure of an arc set computed through the Birkhoff representation:
/// map into the downset lattice, run the quasi-order procedure, map back.
fn dldc_via_repr(repr: &BirkhoffRepr, l: &FiniteLattice, arcs: &BTreeSet<Arc>) -> BTreeSet<Arc> {
    let mapped: BTreeSet<Arc> = arcs
        .iter()
        .map(|a| Arc::new(repr.to_downset[a.top], repr.to_downset[a.bottom]))
        .collect();
    let mapped = ArcSet::new(&repr.downsets.lattice, mapped).expect("isomorphism preserves covers");
    let (closed, _) = closure_dldc(&repr.downsets, &mapped).expect("valid downset host");
    let back: BTreeSet<Arc> = closed
        .arcs()
        .iter()
        .map(|a| Arc::new(repr.from_downset[a.top], repr.from_downset[a.bottom]))
        .collect();
    debug_assert!(back.iter().all(|a| l.covers().contains(a)));
    back
}

/// Criterion 1: naive, packing-merge and quasi-order closures agree on every
/// one of the 4096 arc subsets of the cover graph of 2^[3].
fn closure_exhaustive() -> SuiteReport {
    let started = Instant::now();
    let l = FiniteLattice::boolean(3);
    let covers = l.covers().to_vec();
    let repr = birkhoff_repr(&l).expect("2^[3] is distributive");
    let mut failures = Vec::new();
    let total = 1usize << covers.len();
    for mask in 0..total {
        let base = ArcSet::new(&l, subset_arcs(&covers, mask)).expect("cover arcs");
        let naive = base.closure_naive();
        let (mldc, _) = base.closure_mldc().expect("modular host");
        if naive != mldc {
            failures.push(format!("subset {mask:#014b}: naive ≠ mldc"));
        }
        let dldc = dldc_via_repr(&repr, &l, base.arcs());
        if &dldc != naive.arcs() {
            failures.push(format!("subset {mask:#014b}: naive ≠ dldc"));
        }
        if failures.len() > 5 {
            break;
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    report(
        "closure-exhaustive",
        1,
        failures,
        format!("naive = mldc = dldc on all {total} arc subsets of 2^[3] ({elapsed:.1}s)"),
    )
}

/// Criterion 2: the same agreement on random subsets across the modular
/// corpus, with the quasi-order route added on the distributive members.
fn closure_random(cfg: &SuiteConfig) -> SuiteReport {
    let trials = cfg.trials.unwrap_or(500);
    let corpus: Vec<(&str, FiniteLattice)> = vec![
        ("2^[4]", FiniteLattice::boolean(4)),
        ("M3", FiniteLattice::m3()),
        ("M3×chain:2", FiniteLattice::product(&FiniteLattice::m3(), &FiniteLattice::chain(2))),
        (
            "chain:3×chain:3",
            FiniteLattice::product(&FiniteLattice::chain(3), &FiniteLattice::chain(3)),
        ),
        ("divisors(360)", FiniteLattice::divisor_lattice(360)),
    ];
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    let mut dldc_checked = 0usize;
    for (name, l) in &corpus {
        let repr = l.is_distributive().then(|| birkhoff_repr(l).expect("distributive"));
        for trial in 0..trials {
            let density = [0.15, 0.35, 0.55, 0.75][trial % 4];
            let base = ArcSet::new(l, random_arcs(l, &mut rng, density)).expect("cover arcs");
            let naive = base.closure_naive();
            let (mldc, _) = base.closure_mldc().expect("modular corpus");
            if naive != mldc {
                failures.push(format!("{name} trial {trial}: naive ≠ mldc"));
            }
            if let Some(repr) = &repr {
                dldc_checked += 1;
                if &dldc_via_repr(repr, l, base.arcs()) != naive.arcs() {
                    failures.push(format!("{name} trial {trial}: naive ≠ dldc"));
                }
            }
            if failures.len() > 5 {
                break;
            }
        }
    }
    report(
        "closure-random",
        2,
        failures,
        format!(
            "naive = mldc on {trials} random subsets × {} lattices, dldc on {dldc_checked} distributive cases",
            corpus.len()
        ),
    )
}

fn all_cs_packing_arc_sets(l: &FiniteLattice) -> (usize, BTreeSet<BTreeSet<Arc>>) {
    assert!(l.len() <= 16);
    let blocks: Vec<BTreeSet<usize>> = (0..1u32 << l.len())
        .map(|mask| {
            (0..l.len())
                .filter(|&x| mask >> x & 1 == 1)
                .collect::<BTreeSet<_>>()
        })
        .filter(|k| k.len() >= 2 && l.is_sublattice(k))
        .filter(|k| l.is_cover_preserving(k).expect("sublattice"))
        .collect();
    fn extend(
        l: &FiniteLattice,
        blocks: &[BTreeSet<usize>],
        start: usize,
        chosen: &mut Vec<BTreeSet<usize>>,
        count: &mut usize,
        out: &mut BTreeSet<BTreeSet<Arc>>,
    ) {
        *count += 1;
        let packing = CsPacking::new(l, chosen.clone()).expect("blocks validated");
        out.insert(packing.induced_arcs(l));
        for i in start..blocks.len() {
            if chosen.iter().all(|b| b.is_disjoint(&blocks[i])) {
                chosen.push(blocks[i].clone());
                extend(l, blocks, i + 1, chosen, count, out);
                chosen.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut count = 0;
    extend(l, &blocks, 0, &mut Vec::new(), &mut count, &mut out);
    (count, out)
}

fn all_diamond_closed_arc_sets(l: &FiniteLattice) -> BTreeSet<BTreeSet<Arc>> {
    let covers = l.covers().to_vec();
    assert!(covers.len() <= 16);
    (0..1usize << covers.len())
        .map(|mask| subset_arcs(&covers, mask))
        .filter(|arcs| {
            ArcSet::new(l, arcs.clone())
                .expect("cover arcs")
                .is_diamond_closed()
        })
        .collect()
}

/// Criterion 3: on 2^[2], 2^[3] and M3, packings of nontrivial
/// cover-preserving sublattices biject with diamond-closed arc sets.
fn closed_bijection() -> SuiteReport {
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for (name, l) in [
        ("2^[2]", FiniteLattice::boolean(2)),
        ("2^[3]", FiniteLattice::boolean(3)),
        ("M3", FiniteLattice::m3()),
    ] {
        let closed = all_diamond_closed_arc_sets(&l);
        let (packing_count, packed) = all_cs_packing_arc_sets(&l);
        if packed != closed {
            failures.push(format!(
                "{name}: packing image has {} sets, {} are diamond-closed",
                packed.len(),
                closed.len()
            ));
        }
        if packing_count != packed.len() {
            failures.push(format!(
                "{name}: {} packings map onto {} arc sets (not injective)",
                packing_count,
                packed.len()
            ));
        }
        summary.push(format!("{name}: {} closed sets ↔ {} packings", closed.len(), packing_count));
    }
    report("closed-bijection", 3, failures, summary.join("; "))
}

/// Criterion 4: on the pentagon, some diamond-closed set is not realized by
/// any packing of cover-preserving sublattices.
fn nonmodular_control() -> SuiteReport {
    let n5 = FiniteLattice::n5();
    let closed = all_diamond_closed_arc_sets(&n5);
    let (_, packed) = all_cs_packing_arc_sets(&n5);
    let outside: Vec<&BTreeSet<Arc>> = closed.iter().filter(|s| !packed.contains(*s)).collect();
    let failures = if outside.is_empty() {
        vec!["every closed set on N5 came from a packing".to_string()]
    } else {
        Vec::new()
    };
    report(
        "nonmodular-control",
        4,
        failures,
        format!(
            "N5 has {} diamond-closed sets, {} outside the packing correspondence",
            closed.len(),
            outside.len()
        ),
    )
}

fn atom_arcs(n: u32) -> BTreeSet<Arc> {
    (0..n).map(|i| Arc::new(1usize << i, 0)).collect()
}

fn two_chain_arcs(n: u32) -> BTreeSet<Arc> {
    let n = n as usize;
    let mut arcs = BTreeSet::new();
    for i in 1..n {
        arcs.insert(Arc::new((1 << (i + 1)) - 1, (1 << i) - 1));
    }
    let top_bits = |s: usize| ((1usize << s) - 1) << (n - s);
    for i in 0..=n.saturating_sub(2) {
        arcs.insert(Arc::new(top_bits(i + 2), top_bits(i + 1)));
    }
    arcs
}

/// Criterion 5: on 2^[n] for n = 3, 4, 5, the atom arcs and the two-chain
/// family both diamond-generate the whole cover graph, and dropping one atom
/// arc at n = 3 loses generation.
fn generating_families() -> SuiteReport {
    let mut failures = Vec::new();
    for n in 3u32..=5 {
        let l = FiniteLattice::boolean(n);
        for (what, arcs) in [("atom arcs", atom_arcs(n)), ("two-chain family", two_chain_arcs(n))] {
            let base = ArcSet::new(&l, arcs).expect("cover arcs");
            if !base.generates_all().expect("modular") {
                failures.push(format!("2^[{n}]: {what} failed to generate"));
            }
        }
    }
    let l = FiniteLattice::boolean(3);
    let mut weakened = atom_arcs(3);
    weakened.remove(&Arc::new(0b100, 0));
    let base = ArcSet::new(&l, weakened).expect("cover arcs");
    if base.generates_all().expect("modular") {
        failures.push("2^[3]: dropping an atom arc should lose generation".to_string());
    }
    report(
        "generating-families",
        5,
        failures,
        "atom and two-chain families generate 2^[n] for n = 3, 4, 5; weakened family does not"
            .to_string(),
    )
}

fn random_pointed_poset(rng: &mut StdRng) -> PointedPoset {
    let middles = rng.random_range(0..=4);
    let mut pairs = Vec::new();
    for i in 0..middles {
        for j in i + 1..middles {
            if rng.random_bool(0.4) {
                pairs.push((i, j));
            }
        }
    }
    PointedPoset::from_middles(middles, &pairs).expect("acyclic by construction")
}

/// Every labeled pointed poset with at most two middle elements.
fn tiny_posets() -> Vec<PointedPoset> {
    vec![
        PointedPoset::from_middles(0, &[]).unwrap(),
        PointedPoset::from_middles(1, &[]).unwrap(),
        PointedPoset::from_middles(2, &[]).unwrap(),
        PointedPoset::from_middles(2, &[(0, 1)]).unwrap(),
        PointedPoset::from_middles(2, &[(1, 0)]).unwrap(),
    ]
}

/// Criterion 6: downset lattice → join-irreducibles recovers random pointed
/// posets up to isomorphism, and the extension ↔ sublattice correspondence
/// is a bijection on every pointed poset with at most four elements.
fn birkhoff_roundtrip(cfg: &SuiteConfig) -> SuiteReport {
    let trials = cfg.trials.unwrap_or(50);
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let p = random_pointed_poset(&mut rng);
        let dl = downset_lattice(&p).expect("small poset");
        let recovered = join_irreducibles(&dl.lattice).expect("downset lattices are distributive");
        if !posets_isomorphic(&recovered, &p) {
            failures.push(format!("trial {trial}: join-irreducible poset not isomorphic"));
        }
    }
    let mut extensions_checked = 0usize;
    for p in tiny_posets() {
        let dl = downset_lattice(&p).expect("tiny");
        for q in all_extensions(&p) {
            extensions_checked += 1;
            let sub = extension_sublattice(&dl, &q).expect("pointed extension");
            let masks: Vec<u64> = sub.iter().map(|&i| dl.masks()[i]).collect();
            if order_from_family(&p, &masks) != q {
                failures.push("extension → sublattice → order differs".to_string());
            }
        }
        let n = dl.lattice.len();
        for mask in 1u32..1 << n {
            let sub: BTreeSet<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if !dl.lattice.is_sublattice(&sub) {
                continue;
            }
            let masks: Vec<u64> = sub.iter().map(|&i| dl.masks()[i]).collect();
            let q = order_from_family(&p, &masks);
            if extension_sublattice(&dl, &q).expect("pointed") != sub {
                failures.push("sublattice → order → sublattice differs".to_string());
            }
        }
    }
    report(
        "birkhoff-roundtrip",
        6,
        failures,
        format!("{trials} random posets recovered; bijection exhaustive over {extensions_checked} extensions"),
    )
}

/// Random quaternions with numerators up to 3 and denominators up to 2.
fn random_quaternion(rng: &mut StdRng) -> Quaternion {
    let part = |rng: &mut StdRng| rational(rng.random_range(-3..=3), rng.random_range(1..=2));
    Quaternion::new(part(rng), part(rng), part(rng), part(rng))
}

/// The shared random sets for the Wedderburn and replay suites: sizes cycle
/// through 2, 3, 4.
fn sample_sets(seed: u64, trials: usize) -> Vec<Vec<Quaternion>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..trials)
        .map(|t| {
            let size = [2, 3, 4][t % 3];
            (0..size).map(|_| random_quaternion(&mut rng)).collect()
        })
        .collect()
}

/// Criterion 7: over random quaternion sets, the Wedderburn lattice builds
/// with all its exactness invariants, every maximal chain factors `f_S`, and
/// every diamond's pseudo-roots satisfy the sum/product identities.
fn wedderburn_random(cfg: &SuiteConfig) -> SuiteReport {
    let trials = cfg.trials.unwrap_or(100);
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut chains_checked = 0usize;
    let mut diamonds_checked = 0usize;
    for (t, s) in sample_sets(cfg.seed, trials).iter().enumerate() {
        // build verifies gcrd/lclm closure, modularity and ψ exactness
        let pl = match PseudoRootLattice::build(s) {
            Ok(pl) => pl,
            Err(e) => {
                failures.push(format!("trial {t}: build failed: {e}"));
                continue;
            }
        };
        let f = pl.f_s();
        for alpha in s {
            if f.eval_right(alpha) != Quaternion::zero()
                || !NCPoly::t_minus(alpha).right_divides(f).expect("monic")
            {
                failures.push(format!("trial {t}: f_S does not vanish on its set"));
            }
        }
        for chain in pl.lattice().maximal_chains() {
            chains_checked += 1;
            let roots = pl.chain_factorization(&chain).expect("maximal chain");
            let product = roots
                .iter()
                .fold(NCPoly::one(), |acc, xi| &acc * &NCPoly::t_minus(xi));
            if &product != f {
                failures.push(format!("trial {t}: chain factorization mismatch"));
            }
        }
        for d in ArcSet::full(pl.lattice()).diamonds() {
            diamonds_checked += 1;
            let rel = pl.relation_of(&d);
            if !rel.holds() || !rel.sum_product_identities() {
                failures.push(format!("trial {t}: diamond identities fail"));
            }
        }
        if failures.len() > 5 {
            break;
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    report(
        "wedderburn-random",
        7,
        failures,
        format!(
            "{trials} random sets: {chains_checked} chain factorizations and {diamonds_checked} diamonds exact ({elapsed:.1}s)"
        ),
    )
}

/// Criterion 8: replaying the diamond closure of the zero arcs reproduces
/// every pseudo-root exactly through the conjugation operations; generic
/// size-3 sets derive the full 12-arc cover graph.
fn weakening_replay(cfg: &SuiteConfig) -> SuiteReport {
    let trials = cfg.trials.unwrap_or(100);
    let mut failures = Vec::new();
    let mut generic3 = 0usize;
    for (t, s) in sample_sets(cfg.seed, trials).iter().enumerate() {
        let pl = match PseudoRootLattice::build(s) {
            Ok(pl) => pl,
            Err(e) => {
                failures.push(format!("trial {t}: build failed: {e}"));
                continue;
            }
        };
        let rep = match pl.generation_check(&pl.zero_arcs()) {
            Ok(rep) => rep,
            Err(e) => {
                failures.push(format!("trial {t}: replay failed: {e}"));
                continue;
            }
        };
        if !rep.is_exact() {
            failures.push(format!("trial {t}: {} pseudo-roots mismatched", rep.mismatches.len()));
        }
        if !rep.complete {
            failures.push(format!("trial {t}: replay did not cover the closure"));
        }
        if s.len() == 3 && pl.generic_check() {
            generic3 += 1;
            if rep.closure.len() != 12 || pl.lattice().covers().len() != 12 {
                failures.push(format!("trial {t}: generic size-3 set should derive 12 arcs"));
            }
        }
        if failures.len() > 5 {
            break;
        }
    }
    report(
        "weakening-replay",
        8,
        failures,
        format!("{trials} replays exact and complete; {generic3} generic size-3 sets covered all 12 arcs"),
    )
}

/// Criterion 9: the fixed worked example at S = {i, j}, as literal values.
fn worked_example() -> SuiteReport {
    let mut failures = Vec::new();
    let (i, j) = (Quaternion::i(), Quaternion::j());
    let pl = PseudoRootLattice::build(&[i.clone(), j.clone()]).expect("small set");
    let t2_plus_1 = NCPoly::from_coeffs(vec![Quaternion::one(), Quaternion::zero(), Quaternion::one()]);
    if pl.f_s() != &t2_plus_1 {
        failures.push(format!("f_S = {} instead of t^2 + 1", pl.f_s()));
    }
    let top = pl.lattice().top();
    let ti = pl.poly_of_subset(0b01);
    let tj = pl.poly_of_subset(0b10);
    if pl.psi(&Arc::new(top, ti)) != Some(&-&i) || pl.psi(&Arc::new(top, tj)) != Some(&-&j) {
        failures.push("upper pseudo-roots are not (−i, −j)".to_string());
    }
    match diamond_down(&-&i, &-&j) {
        Ok(pair) if pair == (i.clone(), j.clone()) => {}
        other => failures.push(format!("diamond_down(−i, −j) = {other:?}, expected (i, j)")),
    }
    match diamond_up(&i, &j) {
        Ok(pair) if pair == (-&i, -&j) => {}
        other => failures.push(format!("diamond_up(i, j) = {other:?}, expected (−i, −j)")),
    }
    report(
        "worked-example",
        9,
        failures,
        "S = {i, j}: f_S = t^2 + 1, upper pseudo-roots (−i, −j), diamond_down inverts".to_string(),
    )
}

/// Criterion 10: extensivity, monotonicity and idempotence of the naive
/// closure on random nested pairs over the corpus.
fn closure_axioms(cfg: &SuiteConfig) -> SuiteReport {
    let trials = cfg.trials.unwrap_or(200);
    let corpus: Vec<(&str, FiniteLattice)> = vec![
        ("2^[3]", FiniteLattice::boolean(3)),
        ("2^[4]", FiniteLattice::boolean(4)),
        ("M3", FiniteLattice::m3()),
        ("N5", FiniteLattice::n5()),
        ("M3×chain:2", FiniteLattice::product(&FiniteLattice::m3(), &FiniteLattice::chain(2))),
        (
            "chain:3×chain:3",
            FiniteLattice::product(&FiniteLattice::chain(3), &FiniteLattice::chain(3)),
        ),
        ("divisors(360)", FiniteLattice::divisor_lattice(360)),
    ];
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    for (name, l) in &corpus {
        for trial in 0..trials {
            let small = random_arcs(l, &mut rng, 0.3);
            let mut big = small.clone();
            big.extend(random_arcs(l, &mut rng, 0.3));
            let small = ArcSet::new(l, small).expect("cover arcs");
            let big = ArcSet::new(l, big).expect("cover arcs");
            let cs = small.closure_naive();
            if !small.is_subset_of(&cs) {
                failures.push(format!("{name} trial {trial}: not extensive"));
            }
            if !cs.is_subset_of(&big.closure_naive()) {
                failures.push(format!("{name} trial {trial}: not monotone"));
            }
            if cs.closure_naive() != cs {
                failures.push(format!("{name} trial {trial}: not idempotent"));
            }
            if failures.len() > 5 {
                break;
            }
        }
    }
    report(
        "closure-axioms",
        10,
        failures,
        format!("{trials} nested pairs per lattice × {} lattices", corpus.len()),
    )
}
