//! The diamond-closure operator on arc sets of cover graphs.
//!
//! A *diamond* is a quadruple of cover arcs `x → {y, z} → w`; an arc set
//! spans it when it contains the two top arcs (the out-V) or the two bottom
//! arcs (the in-V). A set is diamond-closed within an ambient arc set when
//! every spanned diamond of the ambient set is wholly contained, and the
//! closure `⋄(B)` is the least diamond-closed superset.
//!
//! Two routes compute the closure:
//!
//! - [`ArcSet::closure_naive`] runs the definition as a worklist fixpoint
//!   and is valid on any host lattice;
//! - [`ArcSet::closure_mldc`] requires a modular host and instead merges
//!   generated sublattices: vertex components of `B` generate disjoint
//!   cover-preserving sublattices which are fused while they intersect, and
//!   the induced arcs of the final packing equal `⋄(B)`.
//!
//! On modular hosts the diamond-closed sets are exactly the induced arc
//! sets of packings of cover-preserving sublattices ([`CsPacking`]), with
//! connected closed sets corresponding to single sublattices;
//! [`ArcSet::packing_of_closed`] recovers that canonical form.
//! [`ArcSet::updown_normalize`] rewrites a geodesic inside a closed set
//! into one that does all of its up steps first, by repeatedly replacing a
//! down-up corner with the spanned diamond's upper half.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{Arc, FiniteLattice};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiamondError {
    /// An arc is not a cover arc of the host lattice.
    NotCoverArc(Arc),
    /// The left operand must be a subset of the ambient arc set.
    NotSubset(Arc),
    /// The operation is only defined over modular host lattices.
    HostNotModular,
    /// The arc set was required to be diamond-closed.
    NotDiamondClosed,
    /// The two vertices lie in different components of the arc set.
    NotConnected { x: usize, y: usize },
    /// No path of length `d(x, y)` exists inside the arc set.
    NoGeodesic { x: usize, y: usize },
    /// A conclusion guaranteed by the structure theory failed; this reports
    /// an implementation bug, not a user error.
    InvariantViolation(&'static str),
}

impl fmt::Display for DiamondError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiamondError::NotCoverArc(a) => {
                write!(f, "{} → {} is not a cover arc of the host", a.top, a.bottom)
            }
            DiamondError::NotSubset(a) => {
                write!(f, "arc {} → {} lies outside the ambient set", a.top, a.bottom)
            }
            DiamondError::HostNotModular => write!(f, "host lattice is not modular"),
            DiamondError::NotDiamondClosed => write!(f, "arc set is not diamond-closed"),
            DiamondError::NotConnected { x, y } => {
                write!(f, "{x} and {y} are in different components")
            }
            DiamondError::NoGeodesic { x, y } => {
                write!(f, "no geodesic between {x} and {y} inside the arc set")
            }
            DiamondError::InvariantViolation(what) => write!(f, "invariant violated: {what}"),
        }
    }
}

impl core::error::Error for DiamondError {}

/// Four cover arcs `top → {left, right} → bottom` with `left < right`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Diamond {
    pub top: usize,
    pub left: usize,
    pub right: usize,
    pub bottom: usize,
}

impl Diamond {
    pub fn arcs(&self) -> [Arc; 4] {
        [
            Arc::new(self.top, self.left),
            Arc::new(self.top, self.right),
            Arc::new(self.left, self.bottom),
            Arc::new(self.right, self.bottom),
        ]
    }

    pub fn out_v(&self) -> [Arc; 2] {
        [Arc::new(self.top, self.left), Arc::new(self.top, self.right)]
    }

    pub fn in_v(&self) -> [Arc; 2] {
        [
            Arc::new(self.left, self.bottom),
            Arc::new(self.right, self.bottom),
        ]
    }
}

/// A set of cover arcs of a host lattice.
#[derive(Clone)]
pub struct ArcSet<'a> {
    host: &'a FiniteLattice,
    arcs: BTreeSet<Arc>,
}

impl fmt::Debug for ArcSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.arcs.iter().map(|a| (a.top, a.bottom))).finish()
    }
}

impl PartialEq for ArcSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        assert!(
            core::ptr::eq(self.host, other.host),
            "arc sets over different hosts"
        );
        self.arcs == other.arcs
    }
}

impl Eq for ArcSet<'_> {}

impl<'a> ArcSet<'a> {
    pub fn new(host: &'a FiniteLattice, arcs: BTreeSet<Arc>) -> Result<Self, DiamondError> {
        let covers: BTreeSet<Arc> = host.covers().iter().copied().collect();
        if let Some(&bad) = arcs.iter().find(|a| !covers.contains(a)) {
            return Err(DiamondError::NotCoverArc(bad));
        }
        Ok(ArcSet { host, arcs })
    }

    pub fn empty(host: &'a FiniteLattice) -> Self {
        ArcSet {
            host,
            arcs: BTreeSet::new(),
        }
    }

    /// The full cover graph of the host.
    pub fn full(host: &'a FiniteLattice) -> Self {
        ArcSet {
            host,
            arcs: host.covers().iter().copied().collect(),
        }
    }

    pub fn host(&self) -> &'a FiniteLattice {
        self.host
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.contains(arc)
    }

    pub fn is_subset_of(&self, other: &ArcSet) -> bool {
        assert!(core::ptr::eq(self.host, other.host), "different hosts");
        self.arcs.is_subset(&other.arcs)
    }

    /// The spanned vertex set `V(A)`: endpoints of at least one arc.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.arcs
            .iter()
            .flat_map(|a| [a.top, a.bottom])
            .collect()
    }

    /// The arc-components: maximal subsets connected through shared
    /// vertices. They partition the arc set; the vertex sets of the
    /// components partition `V(A)`.
    pub fn arc_components(&self) -> Vec<ArcSet<'a>> {
        let arcs: Vec<Arc> = self.arcs.iter().copied().collect();
        let mut by_vertex: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, a) in arcs.iter().enumerate() {
            by_vertex.entry(a.top).or_default().push(i);
            by_vertex.entry(a.bottom).or_default().push(i);
        }
        let mut seen = vec![false; arcs.len()];
        let mut components = Vec::new();
        for start in 0..arcs.len() {
            if seen[start] {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(i) = stack.pop() {
                comp.insert(arcs[i]);
                for v in [arcs[i].top, arcs[i].bottom] {
                    for &j in &by_vertex[&v] {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            components.push(ArcSet {
                host: self.host,
                arcs: comp,
            });
        }
        components
    }

    /// Vertex sets of the arc-components, in the same order.
    pub fn vertex_components(&self) -> Vec<BTreeSet<usize>> {
        self.arc_components().iter().map(ArcSet::vertices).collect()
    }

    /// All diamonds whose four arcs lie in this set.
    pub fn diamonds(&self) -> Vec<Diamond> {
        let mut tops: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        let mut bottoms: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        let mut out_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut into: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for a in &self.arcs {
            out_of.entry(a.top).or_default().push(a.bottom);
            into.entry(a.bottom).or_default().push(a.top);
        }
        for (&x, heads) in &out_of {
            for (ia, &y) in heads.iter().enumerate() {
                for &z in &heads[ia + 1..] {
                    let key = (y.min(z), y.max(z));
                    tops.entry(key).or_default().push(x);
                }
            }
        }
        for (&w, tails) in &into {
            for (ia, &y) in tails.iter().enumerate() {
                for &z in &tails[ia + 1..] {
                    let key = (y.min(z), y.max(z));
                    bottoms.entry(key).or_default().push(w);
                }
            }
        }
        let mut out = Vec::new();
        for (&(left, right), xs) in &tops {
            if let Some(ws) = bottoms.get(&(left, right)) {
                for &top in xs {
                    for &bottom in ws {
                        out.push(Diamond {
                            top,
                            left,
                            right,
                            bottom,
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn spans(&self, d: &Diamond) -> bool {
        d.out_v().iter().all(|a| self.arcs.contains(a))
            || d.in_v().iter().all(|a| self.arcs.contains(a))
    }

    fn contains_diamond(&self, d: &Diamond) -> bool {
        d.arcs().iter().all(|a| self.arcs.contains(a))
    }

    /// Diamond-closure predicate with respect to an ambient arc set: every
    /// diamond of the ambient set spanned by `self` lies inside `self`.
    pub fn is_diamond_closed_within(&self, ambient: &ArcSet) -> Result<bool, DiamondError> {
        assert!(core::ptr::eq(self.host, ambient.host), "different hosts");
        if let Some(&bad) = self.arcs.difference(&ambient.arcs).next() {
            return Err(DiamondError::NotSubset(bad));
        }
        Ok(ambient
            .diamonds()
            .iter()
            .all(|d| !self.spans(d) || self.contains_diamond(d)))
    }

    /// Diamond-closure with respect to the full cover graph of the host.
    pub fn is_diamond_closed(&self) -> bool {
        self.is_diamond_closed_within(&ArcSet::full(self.host))
            .expect("self consists of cover arcs")
    }

    /// Least diamond-closed superset of `self` within the ambient set, by a
    /// worklist fixpoint over spanned diamonds. The result is independent of
    /// the processing order.
    pub fn closure_naive_within(&self, ambient: &ArcSet) -> Result<ArcSet<'a>, DiamondError> {
        assert!(core::ptr::eq(self.host, ambient.host), "different hosts");
        if let Some(&bad) = self.arcs.difference(&ambient.arcs).next() {
            return Err(DiamondError::NotSubset(bad));
        }
        let diamonds = ambient.diamonds();
        let mut by_arc: BTreeMap<Arc, Vec<usize>> = BTreeMap::new();
        for (i, d) in diamonds.iter().enumerate() {
            for a in d.arcs() {
                by_arc.entry(a).or_default().push(i);
            }
        }
        let mut s = ArcSet {
            host: self.host,
            arcs: self.arcs.clone(),
        };
        let mut queued = vec![true; diamonds.len()];
        let mut queue: VecDeque<usize> = (0..diamonds.len()).collect();
        while let Some(i) = queue.pop_front() {
            queued[i] = false;
            let d = &diamonds[i];
            if !s.spans(d) || s.contains_diamond(d) {
                continue;
            }
            for a in d.arcs() {
                if s.arcs.insert(a) {
                    for &j in by_arc.get(&a).into_iter().flatten() {
                        if !queued[j] {
                            queued[j] = true;
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
        Ok(s)
    }

    /// Closure within the full cover graph.
    pub fn closure_naive(&self) -> ArcSet<'a> {
        self.closure_naive_within(&ArcSet::full(self.host))
            .expect("self consists of cover arcs")
    }

    /// Diamond closure on a modular host through the packing procedure:
    /// generate a sublattice from each vertex component, merge intersecting
    /// blocks (lexicographically first pair, for determinism) until the
    /// blocks are disjoint, and take the arcs induced on each block.
    pub fn closure_mldc(&self) -> Result<(ArcSet<'a>, CsPacking), DiamondError> {
        let blocks = self.mldc_blocks(|_| 0)?;
        let packing = CsPacking { blocks };
        let arcs = packing.induced_arcs(self.host);
        Ok((
            ArcSet {
                host: self.host,
                arcs,
            },
            packing,
        ))
    }

    /// The merge loop with an injectable choice of which intersecting pair
    /// merges next; the final packing does not depend on it.
    fn mldc_blocks(
        &self,
        mut choose: impl FnMut(&[(usize, usize)]) -> usize,
    ) -> Result<Vec<BTreeSet<usize>>, DiamondError> {
        if !self.host.is_modular() {
            return Err(DiamondError::HostNotModular);
        }
        let mut blocks: Vec<BTreeSet<usize>> = self
            .vertex_components()
            .iter()
            .map(|y| self.host.sublattice_generated(y))
            .collect();
        blocks.sort();
        loop {
            let mut intersecting = Vec::new();
            for i in 0..blocks.len() {
                for j in i + 1..blocks.len() {
                    if !blocks[i].is_disjoint(&blocks[j]) {
                        intersecting.push((i, j));
                    }
                }
            }
            if intersecting.is_empty() {
                return Ok(blocks);
            }
            let (i, j) = intersecting[choose(&intersecting)];
            let union: BTreeSet<usize> = blocks[i].union(&blocks[j]).copied().collect();
            let merged = self.host.sublattice_generated(&union);
            blocks.remove(j);
            blocks.remove(i);
            blocks.push(merged);
            blocks.sort();
        }
    }

    /// The canonical CS-packing of a diamond-closed set on a modular host:
    /// its blocks are the vertex components, each a cover-preserving
    /// sublattice inducing exactly the arcs of its component.
    pub fn packing_of_closed(&self) -> Result<CsPacking, DiamondError> {
        if !self.host.is_modular() {
            return Err(DiamondError::HostNotModular);
        }
        if !self.is_diamond_closed() {
            return Err(DiamondError::NotDiamondClosed);
        }
        let mut blocks = Vec::new();
        for comp in self.arc_components() {
            let k = comp.vertices();
            if !self.host.is_sublattice(&k) {
                return Err(DiamondError::InvariantViolation(
                    "component of a closed set is not a sublattice",
                ));
            }
            if !self.host.is_cover_preserving(&k).expect("sublattice") {
                return Err(DiamondError::InvariantViolation(
                    "component of a closed set is not cover-preserving",
                ));
            }
            if self.host.induced_arcs(&k) != comp.arcs {
                return Err(DiamondError::InvariantViolation(
                    "component arcs differ from the arcs induced by its vertex set",
                ));
            }
            blocks.push(k);
        }
        blocks.sort();
        Ok(CsPacking { blocks })
    }

    /// Whether `self` diamond-generates the entire cover graph of its
    /// (modular) host.
    pub fn generates_all(&self) -> Result<bool, DiamondError> {
        if !self.host.is_modular() {
            return Err(DiamondError::HostNotModular);
        }
        Ok(self.closure_naive().arcs == ArcSet::full(self.host).arcs)
    }

    /// Rewrites a geodesic from `x` to `y` inside a diamond-closed set into
    /// an up-down path of the same length (a path whose up steps all precede
    /// its down steps), by repeatedly replacing a down-then-up corner with
    /// the top of the diamond it spans. The vertex ending the up segment is
    /// `x ∨ y`.
    pub fn updown_normalize(&self, x: usize, y: usize) -> Result<Vec<usize>, DiamondError> {
        if !self.host.is_modular() {
            return Err(DiamondError::HostNotModular);
        }
        if !self.is_diamond_closed() {
            return Err(DiamondError::NotDiamondClosed);
        }
        if x == y {
            return Ok(vec![x]);
        }
        let mut path = self
            .shortest_path(x, y)
            .ok_or(DiamondError::NotConnected { x, y })?;
        let h = self.host.height();
        let d = h.of(self.host.join(x, y)) - h.of(self.host.meet(x, y));
        if path.len() - 1 != d {
            return Err(DiamondError::NoGeodesic { x, y });
        }
        // eliminate inversions: a down step immediately followed by an up step
        loop {
            let corner = (1..path.len() - 1).find(|&i| {
                self.host.leq(path[i], path[i - 1]) && self.host.leq(path[i], path[i + 1])
            });
            let Some(i) = corner else { break };
            let top = self.host.join(path[i - 1], path[i + 1]);
            debug_assert!(self.arcs.contains(&Arc::new(top, path[i - 1])));
            debug_assert!(self.arcs.contains(&Arc::new(top, path[i + 1])));
            path[i] = top;
        }
        debug_assert!(is_up_down(self.host, &path));
        debug_assert_eq!(
            *path.iter().max_by_key(|&&v| h.of(v)).expect("nonempty"),
            self.host.join(x, y)
        );
        Ok(path)
    }

    fn shortest_path(&self, x: usize, y: usize) -> Option<Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for a in &self.arcs {
            adj.entry(a.top).or_default().push(a.bottom);
            adj.entry(a.bottom).or_default().push(a.top);
        }
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([x]);
        parent.insert(x, x);
        while let Some(v) = queue.pop_front() {
            if v == y {
                let mut path = vec![y];
                let mut cur = y;
                while cur != x {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in adj.get(&v).into_iter().flatten() {
                if !parent.contains_key(&w) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

fn is_up_down(host: &FiniteLattice, path: &[usize]) -> bool {
    let mut seen_down = false;
    for w in path.windows(2) {
        let up = host.leq(w[0], w[1]);
        if up && seen_down {
            return false;
        }
        if !up {
            seen_down = true;
        }
    }
    true
}

/// A packing of pairwise-disjoint nontrivial cover-preserving sublattices.
///
/// Blocks are kept with at least two elements: a singleton block induces no
/// arcs, and excluding them makes the packing ↔ closed-arc-set
/// correspondence one-to-one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsPacking {
    blocks: Vec<BTreeSet<usize>>,
}

impl CsPacking {
    pub fn new(host: &FiniteLattice, mut blocks: Vec<BTreeSet<usize>>) -> Result<Self, DiamondError> {
        blocks.sort();
        let packing = CsPacking { blocks };
        packing.validate(host)?;
        Ok(packing)
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn validate(&self, host: &FiniteLattice) -> Result<(), DiamondError> {
        for (i, block) in self.blocks.iter().enumerate() {
            if block.len() < 2 {
                return Err(DiamondError::InvariantViolation(
                    "packing block with fewer than two elements",
                ));
            }
            match host.is_cover_preserving(block) {
                Ok(true) => {}
                Ok(false) => {
                    return Err(DiamondError::InvariantViolation(
                        "packing block is not cover-preserving",
                    ))
                }
                Err(_) => {
                    return Err(DiamondError::InvariantViolation(
                        "packing block is not a sublattice",
                    ))
                }
            }
            for other in &self.blocks[i + 1..] {
                if !block.is_disjoint(other) {
                    return Err(DiamondError::InvariantViolation(
                        "packing blocks intersect",
                    ));
                }
            }
        }
        Ok(())
    }

    /// `C_𝔎`: the union of the arc sets induced on each block. Arcs between
    /// different blocks are not included.
    pub fn induced_arcs(&self, host: &FiniteLattice) -> BTreeSet<Arc> {
        self.blocks
            .iter()
            .flat_map(|k| host.induced_arcs(k))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}
