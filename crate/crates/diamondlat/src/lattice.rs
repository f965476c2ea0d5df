//! Finite lattices as explicit combinatorial objects.
//!
//! A [`FiniteLattice`] stores the full order relation together with
//! precomputed meet/join tables, the cover graph, and the height function;
//! the structural predicates (ranked, modular, distributive) are decided
//! once at build time. Cover arcs are directed from the larger element to
//! the smaller one, a convention shared by every module in this crate.
//!
//! [`FiniteLattice::build`] validates its input and reports the first
//! violated axiom instead of a bare boolean, so a malformed relation can be
//! diagnosed (`NotTransitive { a, b, c }`, `NoJoin { a, b }`, ...).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    Empty,
    NotReflexive { element: usize },
    NotAntisymmetric { a: usize, b: usize },
    NotTransitive { a: usize, b: usize, c: usize },
    /// The pair has no unique least upper bound.
    NoJoin { a: usize, b: usize },
    /// The pair has no unique greatest lower bound.
    NoMeet { a: usize, b: usize },
    /// A set claimed to be a sublattice is not closed at this pair.
    NotSublattice { a: usize, b: usize },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::Empty => write!(f, "empty ground set"),
            LatticeError::NotReflexive { element } => {
                write!(f, "not a partial order: {element} is not ≤ itself")
            }
            LatticeError::NotAntisymmetric { a, b } => {
                write!(f, "not a partial order: {a} ≤ {b} and {b} ≤ {a}")
            }
            LatticeError::NotTransitive { a, b, c } => {
                write!(f, "not a partial order: {a} ≤ {b} ≤ {c} but not {a} ≤ {c}")
            }
            LatticeError::NoJoin { a, b } => {
                write!(f, "not a lattice: {a} and {b} have no unique least upper bound")
            }
            LatticeError::NoMeet { a, b } => {
                write!(f, "not a lattice: {a} and {b} have no unique greatest lower bound")
            }
            LatticeError::NotSublattice { a, b } => {
                write!(f, "not a sublattice: not closed under meet/join at {a}, {b}")
            }
        }
    }
}

impl core::error::Error for LatticeError {}

/// A cover arc, directed from the covering element down to the covered one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Arc {
    pub top: usize,
    pub bottom: usize,
}

impl Arc {
    pub fn new(top: usize, bottom: usize) -> Self {
        Arc { top, bottom }
    }
}

/// Height of every element: the length of the longest directed path down to
/// the minimum in the cover graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightMap {
    h: Vec<usize>,
}

impl HeightMap {
    pub fn of(&self, x: usize) -> usize {
        self.h[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.h
    }
}

/// In-place reflexive-transitive closure (Warshall) of a flattened `n × n`
/// relation.
pub fn reflexive_transitive_closure(n: usize, rel: &mut [bool]) {
    assert_eq!(rel.len(), n * n);
    for x in 0..n {
        rel[x * n + x] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if rel[i * n + k] {
                for j in 0..n {
                    if rel[k * n + j] {
                        rel[i * n + j] = true;
                    }
                }
            }
        }
    }
}

#[derive(Clone)]
pub struct FiniteLattice {
    n: usize,
    leq: Vec<bool>,
    names: Option<Vec<String>>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    covers: Vec<Arc>,
    covers_up: Vec<Vec<usize>>,
    covers_down: Vec<Vec<usize>>,
    height: HeightMap,
    ranked: bool,
    modular: bool,
    distributive: bool,
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("n", &self.n)
            .field("covers", &self.covers.len())
            .field("modular", &self.modular)
            .field("distributive", &self.distributive)
            .finish()
    }
}

impl FiniteLattice {
    /// Validates a flattened `n × n` relation (`leq[x*n + y]` means `x ≤ y`)
    /// and builds the lattice with all derived structure precomputed.
    pub fn build(
        n: usize,
        leq: Vec<bool>,
        names: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        assert_eq!(leq.len(), n * n, "relation matrix must be n × n");
        if let Some(ref names) = names {
            assert_eq!(names.len(), n, "one name per element");
        }
        let at = |x: usize, y: usize| leq[x * n + y];

        for x in 0..n {
            if !at(x, x) {
                return Err(LatticeError::NotReflexive { element: x });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && at(x, y) && at(y, x) {
                    return Err(LatticeError::NotAntisymmetric { a: x, b: y });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !at(a, b) {
                    continue;
                }
                for c in 0..n {
                    if at(b, c) && !at(a, c) {
                        return Err(LatticeError::NotTransitive { a, b, c });
                    }
                }
            }
        }

        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for x in 0..n {
            for y in x..n {
                let j = unique_bound(n, &leq, x, y, true)
                    .ok_or(LatticeError::NoJoin { a: x, b: y })?;
                let m = unique_bound(n, &leq, x, y, false)
                    .ok_or(LatticeError::NoMeet { a: x, b: y })?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }

        let bottom = (0..n).reduce(|a, b| meet[a * n + b]).expect("n > 0");
        let top = (0..n).reduce(|a, b| join[a * n + b]).expect("n > 0");

        let mut covers = Vec::new();
        let mut covers_up = vec![Vec::new(); n];
        let mut covers_down = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if x == y || !at(x, y) {
                    continue;
                }
                let gap = (0..n).any(|z| z != x && z != y && at(x, z) && at(z, y));
                if !gap {
                    covers.push(Arc::new(y, x));
                    covers_up[x].push(y);
                    covers_down[y].push(x);
                }
            }
        }
        covers.sort();

        // longest path down to bottom; process elements by down-set size so
        // everything below is already done
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (0..n).filter(|&z| at(z, x)).count());
        let mut h = vec![0usize; n];
        for &x in &order {
            h[x] = covers_down[x].iter().map(|&y| h[y] + 1).max().unwrap_or(0);
        }
        let height = HeightMap { h };

        let ranked = covers
            .iter()
            .all(|a| height.of(a.top) == height.of(a.bottom) + 1);
        let height_modular = ranked
            && (0..n).all(|x| {
                (x..n).all(|y| {
                    height.of(x) + height.of(y)
                        == height.of(meet[x * n + y]) + height.of(join[x * n + y])
                })
            });
        let distributive = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    meet[x * n + join[y * n + z]]
                        == join[meet[x * n + y] * n + meet[x * n + z]]
                })
            })
        });

        let lattice = FiniteLattice {
            n,
            leq,
            names,
            join,
            meet,
            bottom,
            top,
            covers,
            covers_up,
            covers_down,
            height,
            ranked,
            modular: height_modular,
            distributive,
        };
        // the three modularity characterizations must agree
        debug_assert_eq!(lattice.modular, lattice.modular_by_neighbors());
        debug_assert_eq!(lattice.modular, lattice.modular_by_law());
        debug_assert!(!lattice.distributive || lattice.modular);
        Ok(lattice)
    }

    /// Builds from a list of `(smaller, larger)` pairs. Reflexive pairs are
    /// implied; the relation is otherwise taken literally, so a
    /// non-transitive input is reported as such.
    pub fn from_pairs(
        n: usize,
        pairs: &[(usize, usize)],
        names: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(x, y) in pairs {
            assert!(x < n && y < n, "element index out of range");
            leq[x * n + y] = true;
        }
        FiniteLattice::build(n, leq, names)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // a valid lattice has at least one element
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// All cover arcs `y → x` (y covers x), sorted.
    pub fn covers(&self) -> &[Arc] {
        &self.covers
    }

    /// Elements covering `x`.
    pub fn covers_up(&self, x: usize) -> &[usize] {
        &self.covers_up[x]
    }

    /// Elements covered by `x`.
    pub fn covers_down(&self, x: usize) -> &[usize] {
        &self.covers_down[x]
    }

    pub fn height(&self) -> &HeightMap {
        &self.height
    }

    /// Ranked: every cover raises the height by exactly one; equivalently,
    /// all directed cover paths between two comparable elements have the
    /// same length.
    pub fn is_ranked(&self) -> bool {
        self.ranked
    }

    /// Modular, decided by the rank characterization (ranked and
    /// `h(x) + h(y) = h(x∧y) + h(x∨y)`); the neighbor-relation and
    /// modular-law characterizations are asserted to agree in debug builds.
    pub fn is_modular(&self) -> bool {
        self.modular
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive
    }

    /// Modularity via ∨-neighbors = ∧-neighbors: for all pairs, x∨y covers
    /// both iff both cover x∧y.
    pub fn modular_by_neighbors(&self) -> bool {
        (0..self.n).all(|x| {
            (x + 1..self.n).all(|y| self.vee_neighbors(x, y) == self.wedge_neighbors(x, y))
        })
    }

    /// Modularity via the defining law: x ≤ y implies (x∨w)∧y = x∨(w∧y).
    pub fn modular_by_law(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                !self.leq(x, y)
                    || (0..self.n).all(|w| {
                        self.meet(self.join(x, w), y) == self.join(x, self.meet(w, y))
                    })
            })
        })
    }

    /// `x ∼∨ y`: the join covers both.
    pub fn vee_neighbors(&self, x: usize, y: usize) -> bool {
        let j = self.join(x, y);
        x != y && self.covers_down[j].contains(&x) && self.covers_down[j].contains(&y)
    }

    /// `x ∼∧ y`: both cover the meet.
    pub fn wedge_neighbors(&self, x: usize, y: usize) -> bool {
        let m = self.meet(x, y);
        x != y && self.covers_up[m].contains(&x) && self.covers_up[m].contains(&y)
    }

    /// `x ∼⋄ y`: both of the above, so x∨y → {x, y} → x∧y is a diamond.
    pub fn diamond_neighbors(&self, x: usize, y: usize) -> bool {
        self.vee_neighbors(x, y) && self.wedge_neighbors(x, y)
    }

    /// Least superset of `ys` closed under pairwise meet and join. The empty
    /// set and singletons are already closed.
    pub fn sublattice_generated(&self, ys: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut k: Vec<usize> = ys.iter().copied().collect();
        let mut member = vec![false; self.n];
        for &x in &k {
            member[x] = true;
        }
        let mut i = 0;
        while i < k.len() {
            let x = k[i];
            for idx in 0..=i {
                let y = k[idx];
                for z in [self.join(x, y), self.meet(x, y)] {
                    if !member[z] {
                        member[z] = true;
                        k.push(z);
                    }
                }
            }
            i += 1;
        }
        k.into_iter().collect()
    }

    /// Verifies closure under meet and join, reporting the first failing pair.
    pub fn check_sublattice(&self, k: &BTreeSet<usize>) -> Result<(), LatticeError> {
        for &x in k {
            assert!(x < self.n, "element index out of range");
            for &y in k {
                if !k.contains(&self.join(x, y)) || !k.contains(&self.meet(x, y)) {
                    return Err(LatticeError::NotSublattice { a: x, b: y });
                }
            }
        }
        Ok(())
    }

    pub fn is_sublattice(&self, k: &BTreeSet<usize>) -> bool {
        self.check_sublattice(k).is_ok()
    }

    /// Whether the sublattice `k` is cover-preserving: its internal covers
    /// are covers of the ambient lattice. Decided by the path criterion —
    /// every comparable pair of `k` is joined by a directed cover path of
    /// the ambient lattice that stays inside `k`.
    pub fn is_cover_preserving(&self, k: &BTreeSet<usize>) -> Result<bool, LatticeError> {
        self.check_sublattice(k)?;
        for &y in k {
            // directed reachability from y through cover arcs within k
            let mut reached = BTreeSet::new();
            reached.insert(y);
            let mut stack = vec![y];
            while let Some(v) = stack.pop() {
                for &w in &self.covers_down[v] {
                    if k.contains(&w) && reached.insert(w) {
                        stack.push(w);
                    }
                }
            }
            for &x in k {
                if self.lt(x, y) && !reached.contains(&x) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All ambient cover arcs with both endpoints in `k` (the induced arc
    /// set, with no sublattice requirement on `k`).
    pub fn induced_arcs(&self, k: &BTreeSet<usize>) -> BTreeSet<Arc> {
        self.covers
            .iter()
            .copied()
            .filter(|a| k.contains(&a.top) && k.contains(&a.bottom))
            .collect()
    }

    /// Undirected distance in the cover graph, by breadth-first search.
    /// `None` when the cover graph is disconnected between them (impossible
    /// in a valid lattice, but kept total for induced subgraphs).
    pub fn cover_distance(&self, x: usize, y: usize) -> Option<usize> {
        if x == y {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[x] = 0;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(x);
        while let Some(v) = queue.pop_front() {
            for &w in self.covers_up[v].iter().chain(&self.covers_down[v]) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if w == y {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// All maximal chains as directed cover paths from the top to the bottom.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut chains = Vec::new();
        let mut path = vec![self.top];
        self.chains_from(self.top, &mut path, &mut chains);
        chains
    }

    fn chains_from(&self, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == self.bottom {
            out.push(path.clone());
            return;
        }
        for &w in &self.covers_down[v] {
            path.push(w);
            self.chains_from(w, path, out);
            path.pop();
        }
    }
}

fn unique_bound(n: usize, leq: &[bool], x: usize, y: usize, upper: bool) -> Option<usize> {
    let at = |a: usize, b: usize| leq[a * n + b];
    let bound = |z: usize| {
        if upper {
            at(x, z) && at(y, z)
        } else {
            at(z, x) && at(z, y)
        }
    };
    let mut best: Option<usize> = None;
    for z in 0..n {
        if !bound(z) {
            continue;
        }
        best = match best {
            None => Some(z),
            Some(b) => {
                let tighter = if upper { at(z, b) } else { at(b, z) };
                Some(if tighter { z } else { b })
            }
        };
    }
    // best is extremal among bounds only if it compares against all of them
    let b = best?;
    for z in 0..n {
        if bound(z) {
            let ok = if upper { at(b, z) } else { at(z, b) };
            if !ok {
                return None;
            }
        }
    }
    Some(b)
}

// Standard families used as the test corpus.
impl FiniteLattice {
    /// Boolean lattice `2^[k]`; element index = subset bitmask.
    pub fn boolean(k: u32) -> Self {
        assert!(k <= 12, "boolean lattice limited to 2^12 elements");
        let n = 1usize << k;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = x & !y == 0;
            }
        }
        let names = (0..n).map(|m| subset_name(m, k)).collect();
        FiniteLattice::build(n, leq, Some(names)).expect("boolean lattice is valid")
    }

    /// Chain with `len ≥ 1` elements, 0 at the bottom.
    pub fn chain(len: usize) -> Self {
        assert!(len >= 1);
        let mut leq = vec![false; len * len];
        for x in 0..len {
            for y in x..len {
                leq[x * len + y] = true;
            }
        }
        let names = (0..len).map(|i| i.to_string()).collect();
        FiniteLattice::build(len, leq, Some(names)).expect("chain is valid")
    }

    /// The diamond M₃: bottom, three incomparable atoms, top. Modular but
    /// not distributive.
    pub fn m3() -> Self {
        let names = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        FiniteLattice::from_pairs(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
            Some(names),
        )
        .expect("m3 is valid")
    }

    /// The pentagon N₅: 0 < x < z < 1 and 0 < y < 1. Not modular.
    pub fn n5() -> Self {
        let names = ["0", "x", "z", "y", "1"].map(String::from).to_vec();
        FiniteLattice::from_pairs(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 4),
                (2, 4),
                (3, 4),
            ],
            Some(names),
        )
        .expect("n5 is valid")
    }

    /// Direct product, ordered componentwise. Index = `ia * b.len() + ib`.
    pub fn product(a: &FiniteLattice, b: &FiniteLattice) -> Self {
        let n = a.n * b.n;
        let mut leq = vec![false; n * n];
        for xa in 0..a.n {
            for xb in 0..b.n {
                for ya in 0..a.n {
                    for yb in 0..b.n {
                        leq[(xa * b.n + xb) * n + (ya * b.n + yb)] =
                            a.leq(xa, ya) && b.leq(xb, yb);
                    }
                }
            }
        }
        let names = (0..a.n)
            .flat_map(|xa| (0..b.n).map(move |xb| (xa, xb)))
            .map(|(xa, xb)| format!("({},{})", a.name(xa), b.name(xb)))
            .collect();
        FiniteLattice::build(n, leq, Some(names)).expect("product of lattices is valid")
    }

    /// Divisors of `m` ordered by divisibility.
    pub fn divisor_lattice(m: u64) -> Self {
        assert!(m >= 1);
        let mut divs: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
        divs.sort_unstable();
        let n = divs.len();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = divs[y] % divs[x] == 0;
            }
        }
        let names = divs.iter().map(|d| d.to_string()).collect();
        FiniteLattice::build(n, leq, Some(names)).expect("divisor lattice is valid")
    }
}

fn subset_name(mask: usize, k: u32) -> String {
    let members: Vec<String> = (0..k)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_two_from_subset_relation() {
        let l = FiniteLattice::boolean(2);
        assert_eq!(l.len(), 4);
        assert_eq!(l.covers().len(), 4);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 3);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 2), 0);
    }

    #[test]
    fn pentagon_is_a_valid_lattice() {
        let l = FiniteLattice::n5();
        assert_eq!(l.len(), 5);
        assert_eq!(l.join(1, 3), 4);
        assert_eq!(l.meet(2, 3), 0);
    }

    #[test]
    fn missing_transitivity_is_reported() {
        // 0 ≤ 1 ≤ 2 without 0 ≤ 2
        let err = FiniteLattice::from_pairs(3, &[(0, 1), (1, 2)], None).unwrap_err();
        assert_eq!(err, LatticeError::NotTransitive { a: 0, b: 1, c: 2 });
    }

    #[test]
    fn non_lattice_posets_are_reported() {
        // two incomparable tops above two incomparable bottoms: no unique bounds
        let mut leq = vec![false; 16];
        for x in 0..4 {
            leq[x * 4 + x] = true;
        }
        for (x, y) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            leq[x * 4 + y] = true;
        }
        let err = FiniteLattice::build(4, leq, None).unwrap_err();
        assert_eq!(err, LatticeError::NoJoin { a: 0, b: 1 });
    }

    #[test]
    fn cover_arcs_of_small_lattices() {
        let chain = FiniteLattice::chain(3);
        assert_eq!(
            chain.covers(),
            &[Arc::new(1, 0), Arc::new(2, 1)]
        );
        assert_eq!(FiniteLattice::m3().covers().len(), 6);
    }

    #[test]
    fn heights() {
        let b3 = FiniteLattice::boolean(3);
        assert_eq!(b3.height().of(b3.bottom()), 0);
        assert_eq!(b3.height().of(b3.top()), 3);
        let n5 = FiniteLattice::n5();
        assert_eq!(n5.height().of(n5.top()), 3); // through the 0 < x < z < 1 chain
        assert_eq!(n5.height().of(3), 1);
    }

    #[test]
    fn ranked_predicate() {
        assert!(FiniteLattice::boolean(4).is_ranked());
        assert!(FiniteLattice::m3().is_ranked());
        assert!(!FiniteLattice::n5().is_ranked());
    }

    #[test]
    fn modular_predicate_on_corpus() {
        assert!(FiniteLattice::boolean(3).is_modular());
        assert!(FiniteLattice::m3().is_modular());
        assert!(!FiniteLattice::n5().is_modular());
        for l in [
            FiniteLattice::boolean(3),
            FiniteLattice::m3(),
            FiniteLattice::n5(),
            FiniteLattice::chain(4),
            FiniteLattice::divisor_lattice(60),
        ] {
            assert_eq!(l.is_modular(), l.modular_by_neighbors());
            assert_eq!(l.is_modular(), l.modular_by_law());
        }
    }

    #[test]
    fn distributive_predicate() {
        assert!(FiniteLattice::boolean(3).is_distributive());
        assert!(!FiniteLattice::m3().is_distributive());
        assert!(FiniteLattice::chain(5).is_distributive());
        let grid = FiniteLattice::product(&FiniteLattice::chain(2), &FiniteLattice::chain(3));
        assert_eq!(grid.len(), 6);
        assert!(grid.is_distributive());
    }

    #[test]
    fn m3_fails_distributivity_at_the_atoms() {
        let l = FiniteLattice::m3();
        let (a, b, c) = (1, 2, 3);
        assert_eq!(l.meet(a, l.join(b, c)), a);
        assert_eq!(l.join(l.meet(a, b), l.meet(a, c)), l.bottom());
    }

    #[test]
    fn generated_sublattices() {
        let l = FiniteLattice::boolean(2);
        assert_eq!(l.sublattice_generated(&BTreeSet::new()), BTreeSet::new());
        let single: BTreeSet<_> = [2].into();
        assert_eq!(l.sublattice_generated(&single), single);
        let atoms: BTreeSet<_> = [1, 2].into();
        assert_eq!(
            l.sublattice_generated(&atoms),
            BTreeSet::from([0, 1, 2, 3])
        );
        let chain: BTreeSet<_> = [0, 1, 3].into();
        assert_eq!(l.sublattice_generated(&chain), chain);
    }

    #[test]
    fn cover_preserving_examples() {
        let l = FiniteLattice::boolean(2);
        let all: BTreeSet<_> = (0..4).collect();
        assert!(l.is_cover_preserving(&all).unwrap());
        let ends: BTreeSet<_> = [0, 3].into();
        assert!(!l.is_cover_preserving(&ends).unwrap());
        let chain: BTreeSet<_> = [0, 1, 3].into();
        assert!(l.is_cover_preserving(&chain).unwrap());
        let not_closed: BTreeSet<_> = [1, 2].into();
        assert_eq!(
            l.is_cover_preserving(&not_closed),
            Err(LatticeError::NotSublattice { a: 1, b: 2 })
        );
    }

    #[test]
    fn induced_arc_sets() {
        let l = FiniteLattice::boolean(2);
        let all: BTreeSet<_> = (0..4).collect();
        assert_eq!(l.induced_arcs(&all), l.covers().iter().copied().collect());
        let ends: BTreeSet<_> = [0, 3].into();
        assert!(l.induced_arcs(&ends).is_empty());

        let b3 = FiniteLattice::boolean(3);
        let square: BTreeSet<_> = [0b000, 0b001, 0b010, 0b011].into();
        assert_eq!(b3.induced_arcs(&square).len(), 4);
    }

    #[test]
    fn standard_family_shapes() {
        let b3 = FiniteLattice::boolean(3);
        assert_eq!((b3.len(), b3.covers().len()), (8, 12));
        let c4 = FiniteLattice::chain(4);
        assert_eq!((c4.len(), c4.covers().len()), (4, 3));
        let d360 = FiniteLattice::divisor_lattice(360);
        assert_eq!(d360.len(), 24);
        assert!(d360.is_distributive());
    }

    #[test]
    fn maximal_chains_of_boolean_cube() {
        let b3 = FiniteLattice::boolean(3);
        let chains = b3.maximal_chains();
        assert_eq!(chains.len(), 6); // 3! orderings
        for chain in &chains {
            assert_eq!(chain.len(), 4);
            assert_eq!(chain[0], b3.top());
            assert_eq!(chain[3], b3.bottom());
        }
    }

    #[test]
    fn distances_match_heights_in_modular_lattices() {
        for l in [
            FiniteLattice::boolean(3),
            FiniteLattice::m3(),
            FiniteLattice::divisor_lattice(36),
        ] {
            assert!(l.is_modular());
            for x in 0..l.len() {
                for y in 0..l.len() {
                    let d = l.cover_distance(x, y).unwrap();
                    let h = l.height();
                    assert_eq!(d, h.of(l.join(x, y)) - h.of(l.meet(x, y)));
                    assert_eq!(
                        d,
                        2 * h.of(l.join(x, y)) - h.of(x) - h.of(y)
                    );
                }
            }
        }
    }
}
