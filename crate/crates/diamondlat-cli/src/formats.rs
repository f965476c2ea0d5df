//! JSON file formats consumed and produced by the CLI.
//!
//! - lattice: `{ "elements": [names...], "leq": [[i,j],...] }`; the listed
//!   relation is reflexively and transitively closed on load.
//! - arc set: `{ "lattice": <path>, "arcs": [[top,bottom],...] }`; the
//!   lattice path is optional and resolved relative to the arc file.
//! - pointed poset: `{ "elements": [...], "leq": [[i,j],...], "bottom": i,
//!   "top": j }`.
//! - quaternion set: `{ "elements": [[a,b,c,d],...] }` with each component a
//!   rational string `"num"` or `"num/den"`.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use diamondlat::birkhoff::PointedPoset;
use diamondlat::exactnum::Quaternion;
use diamondlat::lattice::{reflexive_transitive_closure, Arc};
use diamondlat::{FiniteLattice, NCPoly};

#[derive(Debug, Serialize, Deserialize)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub leq: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ArcsFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<String>,
    pub arcs: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub leq: Vec<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct QuatSetFile {
    pub elements: Vec<[String; 4]>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// The closed relation matrix of a lattice file, before lattice validation.
pub fn load_lattice_relation(path: &Path) -> Result<(usize, Vec<bool>, Vec<String>)> {
    let file: LatticeFile = read_json(path)?;
    let n = file.elements.len();
    let mut rel = vec![false; n * n];
    for (x, y) in file.leq {
        if x >= n || y >= n {
            bail!("leq pair ({x}, {y}) out of range for {n} elements");
        }
        rel[x * n + y] = true;
    }
    reflexive_transitive_closure(n, &mut rel);
    Ok((n, rel, file.elements))
}

pub fn load_lattice(path: &Path) -> Result<FiniteLattice> {
    let (n, rel, names) = load_lattice_relation(path)?;
    FiniteLattice::build(n, rel, Some(names))
        .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

/// The arc list of an arcs file together with its optional lattice path,
/// resolved relative to the arc file's directory.
pub fn load_arcs(path: &Path) -> Result<(Vec<Arc>, Option<PathBuf>)> {
    let file: ArcsFile = read_json(path)?;
    let arcs = file
        .arcs
        .iter()
        .map(|&(top, bottom)| Arc::new(top, bottom))
        .collect();
    let lattice = file.lattice.map(|rel_path| {
        let p = PathBuf::from(&rel_path);
        if p.is_absolute() {
            p
        } else {
            path.parent().unwrap_or_else(|| Path::new(".")).join(p)
        }
    });
    Ok((arcs, lattice))
}

pub fn load_poset(path: &Path) -> Result<PointedPoset> {
    let file: PosetFile = read_json(path)?;
    let n = file.elements.len();
    let mut rel = vec![false; n * n];
    for (x, y) in file.leq {
        if x >= n || y >= n {
            bail!("leq pair ({x}, {y}) out of range for {n} elements");
        }
        rel[x * n + y] = true;
    }
    reflexive_transitive_closure(n, &mut rel);
    PointedPoset::new(n, rel, file.bottom, file.top, Some(file.elements))
        .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

pub fn load_quaternion_set(path: &Path) -> Result<Vec<Quaternion>> {
    let file: QuatSetFile = read_json(path)?;
    file.elements
        .iter()
        .map(|parts| {
            Quaternion::from_strings(parts).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
        })
        .collect()
}

/// Lattice file contents for an in-memory lattice: the strict order pairs.
pub fn lattice_to_file(l: &FiniteLattice) -> LatticeFile {
    let elements = (0..l.len()).map(|x| l.name(x)).collect();
    let leq = (0..l.len())
        .flat_map(|x| (0..l.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && l.leq(x, y))
        .collect();
    LatticeFile { elements, leq }
}

pub fn quaternion_json(q: &Quaternion) -> serde_json::Value {
    serde_json::json!(q.to_strings())
}

pub fn poly_json(p: &NCPoly) -> serde_json::Value {
    serde_json::Value::Array(p.coeffs().iter().map(quaternion_json).collect())
}

pub fn arcs_json(arcs: &BTreeSet<Arc>) -> serde_json::Value {
    serde_json::Value::Array(
        arcs.iter()
            .map(|a| serde_json::json!([a.top, a.bottom]))
            .collect(),
    )
}
