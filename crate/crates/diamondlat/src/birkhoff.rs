//! Downset representations of finite distributive lattices.
//!
//! Every finite distributive lattice is the lattice of *downsets* of a
//! pointed poset: subsets that are downward closed, contain the distinguished
//! bottom and exclude the distinguished top. Downsets are carried around as
//! `u64` bitmasks over the poset elements, which makes unions, intersections
//! and closure checks cheap.
//!
//! Sublattices of a downset lattice correspond one-to-one to *extensions* of
//! the pointed order: pointed quasi-orders at least as strong as it. The
//! correspondence sends an extension to its own downsets, and a family of
//! downsets `𝒴` to the order `i ≤^𝒴 j ⇔ every member containing j contains
//! i`. A sublattice is cover-preserving exactly when every equivalence class
//! of its extension, other than the classes of the two endpoints, is a
//! singleton.
//!
//! [`closure_dldc`] computes the diamond closure of an arc set on this
//! representation: each arc component induces an extension, and compatible
//! extensions (those whose union keeps the endpoints in different classes)
//! are intersected until none remain. The input generates the whole cover
//! graph exactly when the procedure ends at the base order itself.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diamond::ArcSet;
use crate::lattice::{reflexive_transitive_closure, Arc, FiniteLattice, LatticeError};

/// Downsets of posets with up to this many elements can be enumerated.
pub const MAX_POSET_ELEMENTS: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BirkhoffError {
    NotPartialOrder(LatticeError),
    /// The bottom/top elements do not bound everything, or coincide.
    NotPointed,
    /// Too many poset elements to enumerate downsets.
    TooLarge { elements: usize },
    /// The quasi-order does not contain the base order.
    NotExtension,
    /// The quasi-order merges the classes of the bottom and top.
    ExtensionNotPointed,
    /// A mask is not a downset of the given order.
    NotDownset,
    /// `downset_covers` requires nested downsets.
    NotNested,
    NotDistributive,
    /// A conclusion guaranteed by the representation theory failed;
    /// reports an implementation bug.
    Invariant(&'static str),
}

impl fmt::Display for BirkhoffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BirkhoffError::NotPartialOrder(e) => write!(f, "{e}"),
            BirkhoffError::NotPointed => write!(f, "order is not pointed"),
            BirkhoffError::TooLarge { elements } => {
                write!(f, "poset with {elements} elements exceeds the enumeration limit")
            }
            BirkhoffError::NotExtension => write!(f, "quasi-order does not extend the base order"),
            BirkhoffError::ExtensionNotPointed => {
                write!(f, "extension merges the bottom and top classes")
            }
            BirkhoffError::NotDownset => write!(f, "set is not a downset"),
            BirkhoffError::NotNested => write!(f, "downsets are not nested"),
            BirkhoffError::NotDistributive => write!(f, "lattice is not distributive"),
            BirkhoffError::Invariant(what) => write!(f, "invariant violated: {what}"),
        }
    }
}

impl core::error::Error for BirkhoffError {}

/// A finite poset with distinguished bottom and top elements bounding
/// everything, and bottom ≠ top.
#[derive(Clone, Debug)]
pub struct PointedPoset {
    n: usize,
    leq: Vec<bool>,
    bottom: usize,
    top: usize,
    names: Option<Vec<String>>,
}

impl PointedPoset {
    pub fn new(
        n: usize,
        leq: Vec<bool>,
        bottom: usize,
        top: usize,
        names: Option<Vec<String>>,
    ) -> Result<Self, BirkhoffError> {
        assert_eq!(leq.len(), n * n);
        if let Some(ref names) = names {
            assert_eq!(names.len(), n);
        }
        let at = |x: usize, y: usize| leq[x * n + y];
        for x in 0..n {
            if !at(x, x) {
                return Err(BirkhoffError::NotPartialOrder(LatticeError::NotReflexive {
                    element: x,
                }));
            }
            for y in 0..n {
                if x != y && at(x, y) && at(y, x) {
                    return Err(BirkhoffError::NotPartialOrder(
                        LatticeError::NotAntisymmetric { a: x, b: y },
                    ));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if at(a, b) {
                    for c in 0..n {
                        if at(b, c) && !at(a, c) {
                            return Err(BirkhoffError::NotPartialOrder(
                                LatticeError::NotTransitive { a, b, c },
                            ));
                        }
                    }
                }
            }
        }
        if bottom == top
            || !(0..n).all(|x| at(bottom, x) && at(x, top))
        {
            return Err(BirkhoffError::NotPointed);
        }
        Ok(PointedPoset {
            n,
            leq,
            bottom,
            top,
            names,
        })
    }

    /// Builds a pointed poset from a partial order on `m` middle elements
    /// (indices `0..m`), adjoining a fresh bottom `m` and top `m + 1`. The
    /// middle relation is transitively closed before validation.
    pub fn from_middles(m: usize, pairs: &[(usize, usize)]) -> Result<Self, BirkhoffError> {
        let n = m + 2;
        let mut leq = vec![false; n * n];
        for &(x, y) in pairs {
            assert!(x < m && y < m, "middle index out of range");
            leq[x * n + y] = true;
        }
        let (bottom, top) = (m, m + 1);
        for x in 0..n {
            leq[bottom * n + x] = true;
            leq[x * n + top] = true;
        }
        reflexive_transitive_closure(n, &mut leq);
        PointedPoset::new(n, leq, bottom, top, None)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn leq_matrix(&self) -> &[bool] {
        &self.leq
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
            None if x == self.bottom => "bot".to_string(),
            None if x == self.top => "top".to_string(),
            None => x.to_string(),
        }
    }

    /// Elements other than the bottom and top.
    pub fn middles(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&x| x != self.bottom && x != self.top)
    }

    /// The base order viewed as a quasi-order on the same ground set.
    pub fn as_quasi_order(&self) -> QuasiOrder {
        QuasiOrder {
            n: self.n,
            rel: self.leq.clone(),
        }
    }
}

/// A reflexive transitive relation on a poset's ground set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuasiOrder {
    n: usize,
    rel: Vec<bool>,
}

impl fmt::Debug for QuasiOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.rel(i, j))
            .collect();
        write!(f, "QuasiOrder{pairs:?}")
    }
}

impl QuasiOrder {
    pub fn new(n: usize, rel: Vec<bool>) -> Result<Self, BirkhoffError> {
        assert_eq!(rel.len(), n * n);
        let at = |x: usize, y: usize| rel[x * n + y];
        for x in 0..n {
            if !at(x, x) {
                return Err(BirkhoffError::NotPartialOrder(LatticeError::NotReflexive {
                    element: x,
                }));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if at(a, b) {
                    for c in 0..n {
                        if at(b, c) && !at(a, c) {
                            return Err(BirkhoffError::NotPartialOrder(
                                LatticeError::NotTransitive { a, b, c },
                            ));
                        }
                    }
                }
            }
        }
        Ok(QuasiOrder { n, rel })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rel(&self, x: usize, y: usize) -> bool {
        self.rel[x * self.n + y]
    }

    /// The equivalence class id of every element (mutual relatedness).
    pub fn class_ids(&self) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.n];
        let mut next = 0;
        for x in 0..self.n {
            if ids[x] != usize::MAX {
                continue;
            }
            for y in x..self.n {
                if self.rel(x, y) && self.rel(y, x) {
                    ids[y] = next;
                }
            }
            next += 1;
        }
        ids
    }

    /// Equivalence classes as element sets.
    pub fn classes(&self) -> Vec<BTreeSet<usize>> {
        let ids = self.class_ids();
        let count = ids.iter().max().map_or(0, |&m| m + 1);
        let mut classes = vec![BTreeSet::new(); count];
        for (x, &id) in ids.iter().enumerate() {
            classes[id].insert(x);
        }
        classes
    }

    pub fn is_extension_of(&self, p: &PointedPoset) -> bool {
        self.n == p.n && (0..self.n * self.n).all(|i| !p.leq[i] || self.rel[i])
    }

    /// Pointed over `p`: the classes of bottom and top are distinct.
    /// Since the bottom lies below everything, this is `¬(top ≤* bottom)`.
    pub fn is_pointed_over(&self, p: &PointedPoset) -> bool {
        !self.rel(p.top, p.bottom)
    }

    /// Relation intersection, again a quasi-order.
    pub fn intersect(&self, other: &QuasiOrder) -> QuasiOrder {
        assert_eq!(self.n, other.n);
        let rel = self
            .rel
            .iter()
            .zip(&other.rel)
            .map(|(&a, &b)| a && b)
            .collect();
        QuasiOrder { n: self.n, rel }
    }

    /// Transitive closure of the relation union.
    pub fn union_closure(&self, other: &QuasiOrder) -> QuasiOrder {
        assert_eq!(self.n, other.n);
        let mut rel: Vec<bool> = self
            .rel
            .iter()
            .zip(&other.rel)
            .map(|(&a, &b)| a || b)
            .collect();
        reflexive_transitive_closure(self.n, &mut rel);
        QuasiOrder { n: self.n, rel }
    }
}

fn check_extension(p: &PointedPoset, q: &QuasiOrder) -> Result<(), BirkhoffError> {
    if !q.is_extension_of(p) {
        return Err(BirkhoffError::NotExtension);
    }
    if !q.is_pointed_over(p) {
        return Err(BirkhoffError::ExtensionNotPointed);
    }
    Ok(())
}

/// Downset test for a mask under an arbitrary quasi-order on `p`'s ground set.
pub fn is_downset(p: &PointedPoset, q: &QuasiOrder, mask: u64) -> bool {
    if mask >> p.bottom & 1 == 0 || mask >> p.top & 1 == 1 {
        return false;
    }
    for j in 0..p.n {
        if mask >> j & 1 == 1 {
            for i in 0..p.n {
                if q.rel(i, j) && mask >> i & 1 == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// All downsets of the quasi-order, as sorted masks.
pub fn downset_masks(p: &PointedPoset, q: &QuasiOrder) -> Result<Vec<u64>, BirkhoffError> {
    if p.n > MAX_POSET_ELEMENTS {
        return Err(BirkhoffError::TooLarge { elements: p.n });
    }
    let middles: Vec<usize> = p.middles().collect();
    let mut out = Vec::new();
    for choice in 0u64..(1 << middles.len()) {
        let mut mask = 1u64 << p.bottom;
        for (pos, &e) in middles.iter().enumerate() {
            if choice >> pos & 1 == 1 {
                mask |= 1 << e;
            }
        }
        if is_downset(p, q, mask) {
            out.push(mask);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The lattice of all downsets of a pointed order (or of an extension of
/// one), ordered by inclusion. Join is union, meet is intersection, and the
/// result is always distributive.
#[derive(Clone, Debug)]
pub struct DownsetLattice {
    pub poset: PointedPoset,
    pub lattice: FiniteLattice,
    masks: Vec<u64>,
    index: BTreeMap<u64, usize>,
}

impl DownsetLattice {
    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// Lattice element index of a downset mask.
    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }
}

fn mask_name(p: &PointedPoset, mask: u64) -> String {
    let members: Vec<String> = (0..p.n)
        .filter(|&e| mask >> e & 1 == 1)
        .map(|e| p.name(e))
        .collect();
    format!("{{{}}}", members.join(","))
}

fn downset_lattice_from_masks(
    p: &PointedPoset,
    masks: Vec<u64>,
) -> Result<DownsetLattice, BirkhoffError> {
    let n = masks.len();
    let mut leq = vec![false; n * n];
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            leq[i * n + j] = a & !b == 0;
        }
    }
    let names = masks.iter().map(|&m| mask_name(p, m)).collect();
    let lattice = FiniteLattice::build(n, leq, Some(names))
        .map_err(|_| BirkhoffError::Invariant("downsets failed to form a lattice"))?;
    if !lattice.is_distributive() {
        return Err(BirkhoffError::Invariant("downset lattice is not distributive"));
    }
    let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    Ok(DownsetLattice {
        poset: p.clone(),
        lattice,
        masks,
        index,
    })
}

/// The lattice of all downsets of the pointed order itself.
pub fn downset_lattice(p: &PointedPoset) -> Result<DownsetLattice, BirkhoffError> {
    let masks = downset_masks(p, &p.as_quasi_order())?;
    downset_lattice_from_masks(p, masks)
}

/// The lattice of all downsets of a pointed extension of `p`.
pub fn downset_lattice_of_extension(
    p: &PointedPoset,
    q: &QuasiOrder,
) -> Result<DownsetLattice, BirkhoffError> {
    check_extension(p, q)?;
    let masks = downset_masks(p, q)?;
    downset_lattice_from_masks(p, masks)
}

/// The order `≤^𝒴` induced by a family of downsets: `i ≤^𝒴 j` iff every
/// member containing `j` also contains `i`. Always extends the base order;
/// the empty family yields the total relation.
pub fn order_from_family(p: &PointedPoset, family: &[u64]) -> QuasiOrder {
    let base = p.as_quasi_order();
    for &mask in family {
        assert!(is_downset(p, &base, mask), "family member is not a downset");
    }
    let n = p.n;
    let mut rel = vec![true; n * n];
    for i in 0..n {
        for j in 0..n {
            for &mask in family {
                if mask >> j & 1 == 1 && mask >> i & 1 == 0 {
                    rel[i * n + j] = false;
                    break;
                }
            }
        }
    }
    QuasiOrder { n, rel }
}

/// The sublattice of the host downset lattice corresponding to a pointed
/// extension: the downsets of the base order that are also downsets of the
/// extension.
pub fn extension_sublattice(
    dl: &DownsetLattice,
    q: &QuasiOrder,
) -> Result<BTreeSet<usize>, BirkhoffError> {
    check_extension(&dl.poset, q)?;
    Ok((0..dl.masks.len())
        .filter(|&i| is_downset(&dl.poset, q, dl.masks[i]))
        .collect())
}

/// Whether the sublattice of an extension is cover-preserving: every
/// equivalence class other than the classes of bottom and top is a
/// singleton.
pub fn is_cover_preserving_extension(
    p: &PointedPoset,
    q: &QuasiOrder,
) -> Result<bool, BirkhoffError> {
    check_extension(p, q)?;
    let ids = q.class_ids();
    let keep = [ids[p.bottom], ids[p.top]];
    Ok(q.classes()
        .iter()
        .enumerate()
        .all(|(id, class)| keep.contains(&id) || class.len() == 1))
}

/// Cover relation between nested downsets of an extension: `d` covers `c`
/// iff `d − c` is a single equivalence class, maximal among the classes
/// inside `d`.
pub fn downset_covers(
    p: &PointedPoset,
    q: &QuasiOrder,
    d: u64,
    c: u64,
) -> Result<bool, BirkhoffError> {
    if !is_downset(p, q, d) || !is_downset(p, q, c) {
        return Err(BirkhoffError::NotDownset);
    }
    if c & !d != 0 {
        return Err(BirkhoffError::NotNested);
    }
    let diff = d & !c;
    if diff == 0 {
        return Ok(false);
    }
    let ids = q.class_ids();
    let members: Vec<usize> = (0..p.n).filter(|&e| diff >> e & 1 == 1).collect();
    let class = ids[members[0]];
    // the difference must be exactly one class
    if members.iter().any(|&e| ids[e] != class)
        || (0..p.n).any(|e| ids[e] == class && diff >> e & 1 == 0)
    {
        return Ok(false);
    }
    // ... and maximal among classes inside d: nothing in d strictly above it
    let rep = members[0];
    for e in 0..p.n {
        if d >> e & 1 == 1 && ids[e] != class && q.rel(rep, e) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compatibility of two extensions: the transitive closure of their union
/// keeps the bottom and top in different classes. Equivalent to their
/// sublattices having a common element.
pub fn compatible(p: &PointedPoset, q1: &QuasiOrder, q2: &QuasiOrder) -> bool {
    debug_assert!(q1.is_extension_of(p) && q2.is_extension_of(p));
    q1.union_closure(q2).is_pointed_over(p)
}

/// Cover arcs of the sublattice `𝓓(P, ≤*)` inside the host downset lattice.
fn sublattice_cover_arcs(
    dl: &DownsetLattice,
    q: &QuasiOrder,
) -> Result<BTreeSet<Arc>, BirkhoffError> {
    let masks = downset_masks(&dl.poset, q)?;
    let mut arcs = BTreeSet::new();
    for &d in &masks {
        for &c in &masks {
            if c == d || c & !d != 0 {
                continue;
            }
            let between = masks
                .iter()
                .any(|&z| z != c && z != d && c & !z == 0 && z & !d == 0);
            if between {
                continue;
            }
            let top = dl
                .index_of(d)
                .ok_or(BirkhoffError::Invariant("extension downset missing from host"))?;
            let bottom = dl
                .index_of(c)
                .ok_or(BirkhoffError::Invariant("extension downset missing from host"))?;
            arcs.insert(Arc::new(top, bottom));
        }
    }
    Ok(arcs)
}

/// Diamond closure on a downset lattice through quasi-order merging.
///
/// Each arc component induces the extension of its spanned downsets;
/// compatible extensions are replaced by their intersection until the family
/// is pairwise incompatible. The closure is the union of the cover graphs of
/// the final sublattices, and the input generates the entire cover graph iff
/// the family ends as the base order alone.
pub fn closure_dldc<'a>(
    dl: &'a DownsetLattice,
    a: &ArcSet<'a>,
) -> Result<(ArcSet<'a>, Vec<QuasiOrder>), BirkhoffError> {
    assert!(
        core::ptr::eq(a.host(), &dl.lattice),
        "arc set must live on the downset lattice"
    );
    let mut family: Vec<QuasiOrder> = a
        .arc_components()
        .iter()
        .map(|comp| {
            let masks: Vec<u64> = comp.vertices().iter().map(|&v| dl.masks[v]).collect();
            order_from_family(&dl.poset, &masks)
        })
        .collect();
    family.sort();
    loop {
        let pair = (0..family.len())
            .flat_map(|i| (i + 1..family.len()).map(move |j| (i, j)))
            .find(|&(i, j)| compatible(&dl.poset, &family[i], &family[j]));
        let Some((i, j)) = pair else { break };
        let merged = family[i].intersect(&family[j]);
        family.remove(j);
        family.remove(i);
        family.push(merged);
        family.sort();
    }
    let mut arcs = BTreeSet::new();
    let host_covers: BTreeSet<Arc> = dl.lattice.covers().iter().copied().collect();
    for q in &family {
        for arc in sublattice_cover_arcs(dl, q)? {
            if !host_covers.contains(&arc) {
                return Err(BirkhoffError::Invariant(
                    "final sublattice is not cover-preserving",
                ));
            }
            arcs.insert(arc);
        }
    }
    let closed = ArcSet::new(&dl.lattice, arcs)
        .map_err(|_| BirkhoffError::Invariant("closure produced a non-cover arc"))?;
    Ok((closed, family))
}

/// The pointed poset of join-irreducible elements of a distributive lattice
/// (elements covering exactly one element), with fresh bottom and top
/// sentinels adjoined as the last two indices.
pub fn join_irreducibles(l: &FiniteLattice) -> Result<PointedPoset, BirkhoffError> {
    Ok(birkhoff_repr_parts(l)?.0)
}

/// A distributive lattice together with its canonical downset representation
/// and the index maps between the two.
#[derive(Clone, Debug)]
pub struct BirkhoffRepr {
    pub poset: PointedPoset,
    pub downsets: DownsetLattice,
    /// Host lattice element → element of `downsets.lattice`.
    pub to_downset: Vec<usize>,
    /// Element of `downsets.lattice` → host lattice element.
    pub from_downset: Vec<usize>,
}

/// Canonical Birkhoff representation of a distributive lattice: the downset
/// lattice of its join-irreducible poset, with the isomorphism
/// `x ↦ {j irreducible : j ≤ x}` made explicit in both directions.
pub fn birkhoff_repr(l: &FiniteLattice) -> Result<BirkhoffRepr, BirkhoffError> {
    let (poset, irreducibles) = birkhoff_repr_parts(l)?;
    let downsets = downset_lattice(&poset)?;
    let mut to_downset = vec![usize::MAX; l.len()];
    let mut from_downset = vec![usize::MAX; downsets.lattice.len()];
    for x in 0..l.len() {
        let mut mask = 1u64 << poset.bottom();
        for (pos, &j) in irreducibles.iter().enumerate() {
            if l.leq(j, x) {
                mask |= 1 << pos;
            }
        }
        let idx = downsets
            .index_of(mask)
            .ok_or(BirkhoffError::Invariant("join-irreducible image is not a downset"))?;
        if from_downset[idx] != usize::MAX {
            return Err(BirkhoffError::Invariant("representation map is not injective"));
        }
        to_downset[x] = idx;
        from_downset[idx] = x;
    }
    if l.len() != downsets.lattice.len() {
        return Err(BirkhoffError::Invariant("representation map is not onto"));
    }
    Ok(BirkhoffRepr {
        poset,
        downsets,
        to_downset,
        from_downset,
    })
}

fn birkhoff_repr_parts(l: &FiniteLattice) -> Result<(PointedPoset, Vec<usize>), BirkhoffError> {
    if !l.is_distributive() {
        return Err(BirkhoffError::NotDistributive);
    }
    let irreducibles: Vec<usize> = (0..l.len()).filter(|&x| l.covers_down(x).len() == 1).collect();
    let m = irreducibles.len();
    let pairs: Vec<(usize, usize)> = irreducibles
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| {
            irreducibles
                .iter()
                .enumerate()
                .filter(move |&(j, &y)| i != j && l.leq(x, y))
                .map(move |(j, _)| (i, j))
        })
        .collect();
    let mut poset = PointedPoset::from_middles(m, &pairs)?;
    poset.names = Some(
        irreducibles
            .iter()
            .map(|&x| l.name(x))
            .chain(["bot".to_string(), "top".to_string()])
            .collect(),
    );
    Ok((poset, irreducibles))
}

/// All pointed extensions of a pointed poset, by brute force over the
/// non-forced pairs. Intended for small posets only.
pub fn all_extensions(p: &PointedPoset) -> Vec<QuasiOrder> {
    let n = p.n;
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && !p.leq(i, j))
        .collect();
    assert!(free.len() <= 20, "extension enumeration limited to tiny posets");
    let mut out = Vec::new();
    for choice in 0u64..(1 << free.len()) {
        let mut rel = p.leq.clone();
        for (pos, &(i, j)) in free.iter().enumerate() {
            if choice >> pos & 1 == 1 {
                rel[i * n + j] = true;
            }
        }
        let Ok(q) = QuasiOrder::new(n, rel) else {
            continue; // not transitive as chosen; its closure appears elsewhere
        };
        if q.is_pointed_over(p) {
            out.push(q);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antichain(n: usize) -> PointedPoset {
        PointedPoset::from_middles(n, &[]).unwrap()
    }

    fn relate(rel: &mut [bool], n: usize, i: usize, j: usize) {
        rel[i * n + j] = true;
    }

    #[test]
    fn downsets_of_trivial_poset() {
        let p = antichain(0);
        let dl = downset_lattice(&p).unwrap();
        assert_eq!(dl.lattice.len(), 1);
        assert_eq!(dl.masks(), &[1 << p.bottom()]);
    }

    #[test]
    fn downsets_of_antichain_form_a_cube() {
        let p = antichain(3);
        let dl = downset_lattice(&p).unwrap();
        assert_eq!(dl.lattice.len(), 8);
        assert_eq!(dl.lattice.covers().len(), 12);
        assert!(dl.lattice.is_distributive());
    }

    #[test]
    fn downsets_of_a_two_chain_form_a_three_chain() {
        let p = PointedPoset::from_middles(2, &[(0, 1)]).unwrap();
        let dl = downset_lattice(&p).unwrap();
        assert_eq!(dl.lattice.len(), 3);
        assert_eq!(dl.lattice.covers().len(), 2);
    }

    #[test]
    fn pointedness_is_validated() {
        // bottom equal to top is rejected at the poset level
        let err = PointedPoset::new(1, vec![true], 0, 0, None).unwrap_err();
        assert_eq!(err, BirkhoffError::NotPointed);
    }

    #[test]
    fn order_from_all_downsets_recovers_the_base_order() {
        for p in [antichain(2), antichain(3), PointedPoset::from_middles(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()] {
            let dl = downset_lattice(&p).unwrap();
            let q = order_from_family(&p, dl.masks());
            assert_eq!(q, p.as_quasi_order());
        }
    }

    #[test]
    fn order_from_the_empty_family_is_total() {
        let p = antichain(2);
        let q = order_from_family(&p, &[]);
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert!(q.rel(i, j));
            }
        }
        assert!(!q.is_pointed_over(&p));
    }

    #[test]
    fn order_from_a_single_downset() {
        let p = antichain(2);
        let mask = 1 << p.bottom() | 1 << 0; // {bot, first middle}
        let q = order_from_family(&p, &[mask]);
        // i ≤ j iff (j in D implies i in D)
        assert!(q.rel(0, 1));
        assert!(!q.rel(1, 0));
        assert!(q.rel(p.bottom(), p.top()));
    }

    #[test]
    fn extension_sublattice_of_the_base_is_everything() {
        let p = antichain(2);
        let dl = downset_lattice(&p).unwrap();
        let all = extension_sublattice(&dl, &p.as_quasi_order()).unwrap();
        assert_eq!(all.len(), dl.lattice.len());
    }

    #[test]
    fn extension_sublattice_of_a_merged_pair() {
        // merging the two middles of 2^[2] leaves the diagonal {bot} ⊂ {bot,a,b}
        let p = antichain(2);
        let dl = downset_lattice(&p).unwrap();
        let n = p.len();
        let mut rel = p.leq_matrix().to_vec();
        relate(&mut rel, n, 0, 1);
        relate(&mut rel, n, 1, 0);
        let q = QuasiOrder::new(n, rel).unwrap();
        let sub = extension_sublattice(&dl, &q).unwrap();
        let masks: Vec<u64> = sub.iter().map(|&i| dl.masks()[i]).collect();
        let b = 1u64 << p.bottom();
        assert_eq!(masks, vec![b, b | 0b11]);
    }

    #[test]
    fn extension_roundtrip_on_small_posets() {
        for p in [
            antichain(1),
            antichain(2),
            PointedPoset::from_middles(2, &[(0, 1)]).unwrap(),
        ] {
            let dl = downset_lattice(&p).unwrap();
            for q in all_extensions(&p) {
                let sub = extension_sublattice(&dl, &q).unwrap();
                let masks: Vec<u64> = sub.iter().map(|&i| dl.masks()[i]).collect();
                assert_eq!(order_from_family(&p, &masks), q, "sublattice → order → sublattice");
            }
        }
    }

    #[test]
    fn cover_preserving_extensions() {
        let p = antichain(2);
        assert!(is_cover_preserving_extension(&p, &p.as_quasi_order()).unwrap());
        let n = p.len();
        // merge the two middles: a two-element class away from the endpoints
        let mut rel = p.leq_matrix().to_vec();
        relate(&mut rel, n, 0, 1);
        relate(&mut rel, n, 1, 0);
        let q = QuasiOrder::new(n, rel).unwrap();
        assert!(!is_cover_preserving_extension(&p, &q).unwrap());
        // merge a middle downward into the bottom class: still cover-preserving
        let mut rel = p.leq_matrix().to_vec();
        relate(&mut rel, n, 0, p.bottom());
        reflexive_transitive_closure(n, &mut rel);
        let q = QuasiOrder::new(n, rel).unwrap();
        assert!(is_cover_preserving_extension(&p, &q).unwrap());
        let dl = downset_lattice(&p).unwrap();
        let sub = extension_sublattice(&dl, &q).unwrap();
        assert!(dl.lattice.is_cover_preserving(&sub).unwrap());
    }

    #[test]
    fn downset_cover_relation() {
        let p = antichain(2);
        let q = p.as_quasi_order();
        let b = 1u64 << p.bottom();
        assert!(!downset_covers(&p, &q, b, b).unwrap());
        assert!(downset_covers(&p, &q, b | 0b01, b).unwrap());
        assert!(!downset_covers(&p, &q, b | 0b11, b).unwrap());
        assert_eq!(
            downset_covers(&p, &q, b, b | 0b01).unwrap_err(),
            BirkhoffError::NotNested
        );
        // under a merged-middle extension the two-element step is a cover
        let n = p.len();
        let mut rel = p.leq_matrix().to_vec();
        relate(&mut rel, n, 0, 1);
        relate(&mut rel, n, 1, 0);
        let merged = QuasiOrder::new(n, rel).unwrap();
        assert!(downset_covers(&p, &merged, b | 0b11, b).unwrap());
    }

    #[test]
    fn compatibility_examples() {
        let p = antichain(2);
        let base = p.as_quasi_order();
        assert!(compatible(&p, &base, &base));
        let n = p.len();
        // q1 forces top ≤ middle 0, q2 forces middle 0 ≤ bottom: union chains top to bottom
        let mut rel1 = p.leq_matrix().to_vec();
        relate(&mut rel1, n, p.top(), 0);
        let mut rel2 = p.leq_matrix().to_vec();
        relate(&mut rel2, n, 0, p.bottom());
        reflexive_transitive_closure(n, &mut rel1);
        reflexive_transitive_closure(n, &mut rel2);
        let q1 = QuasiOrder::new(n, rel1).unwrap();
        let q2 = QuasiOrder::new(n, rel2).unwrap();
        assert!(q1.is_pointed_over(&p) && q2.is_pointed_over(&p));
        assert!(!compatible(&p, &q1, &q2));
        assert!(compatible(&p, &q1, &base));
    }

    #[test]
    fn intersection_matches_compatibility() {
        let p = antichain(2);
        let dl = downset_lattice(&p).unwrap();
        for q1 in all_extensions(&p) {
            for q2 in all_extensions(&p) {
                let meet_nonempty = {
                    let s1 = extension_sublattice(&dl, &q1).unwrap();
                    let s2 = extension_sublattice(&dl, &q2).unwrap();
                    !s1.is_disjoint(&s2)
                };
                assert_eq!(compatible(&p, &q1, &q2), meet_nonempty);
            }
        }
    }

    #[test]
    fn join_irreducibles_of_standard_lattices() {
        let b3 = FiniteLattice::boolean(3);
        let p = join_irreducibles(&b3).unwrap();
        assert_eq!(p.len(), 5); // three incomparable middles plus sentinels
        assert!(p.middles().all(|x| p.middles().all(|y| x == y || !p.leq(x, y))));

        let c4 = FiniteLattice::chain(4);
        let p = join_irreducibles(&c4).unwrap();
        assert_eq!(p.len(), 5); // a 3-chain of middles plus sentinels

        assert_eq!(
            join_irreducibles(&FiniteLattice::m3()).unwrap_err(),
            BirkhoffError::NotDistributive
        );
    }

    #[test]
    fn birkhoff_representation_is_an_isomorphism() {
        for l in [
            FiniteLattice::boolean(3),
            FiniteLattice::chain(5),
            FiniteLattice::product(&FiniteLattice::chain(2), &FiniteLattice::chain(3)),
            FiniteLattice::divisor_lattice(60),
        ] {
            let repr = birkhoff_repr(&l).unwrap();
            assert_eq!(repr.downsets.lattice.len(), l.len());
            for x in 0..l.len() {
                for y in 0..l.len() {
                    assert_eq!(
                        l.leq(x, y),
                        repr.downsets
                            .lattice
                            .leq(repr.to_downset[x], repr.to_downset[y])
                    );
                }
                assert_eq!(repr.from_downset[repr.to_downset[x]], x);
            }
        }
    }

    #[test]
    fn dldc_on_the_empty_arc_set() {
        let p = antichain(3);
        let dl = downset_lattice(&p).unwrap();
        let empty = ArcSet::empty(&dl.lattice);
        let (closed, family) = closure_dldc(&dl, &empty).unwrap();
        assert!(closed.is_empty());
        assert!(family.is_empty());
    }

    #[test]
    fn dldc_atom_arcs_generate_the_cube() {
        let p = antichain(3);
        let dl = downset_lattice(&p).unwrap();
        let bottom = dl.lattice.bottom();
        let arcs: BTreeSet<Arc> = dl
            .lattice
            .covers_up(bottom)
            .iter()
            .map(|&a| Arc::new(a, bottom))
            .collect();
        let b = ArcSet::new(&dl.lattice, arcs).unwrap();
        let (closed, family) = closure_dldc(&dl, &b).unwrap();
        assert_eq!(closed, ArcSet::full(&dl.lattice));
        assert_eq!(family, vec![p.as_quasi_order()]);
    }

    #[test]
    fn dldc_connected_input_matches_the_naive_closure() {
        let p = PointedPoset::from_middles(3, &[(0, 1)]).unwrap();
        let dl = downset_lattice(&p).unwrap();
        let host = &dl.lattice;
        // a small connected arc set: two covers out of the bottom's upset
        let bottom = host.bottom();
        let ups = host.covers_up(bottom);
        let arcs: BTreeSet<Arc> = [
            Arc::new(ups[0], bottom),
            Arc::new(ups[1], bottom),
        ]
        .into();
        let b = ArcSet::new(host, arcs).unwrap();
        let (closed, family) = closure_dldc(&dl, &b).unwrap();
        assert_eq!(family.len(), 1);
        assert_eq!(closed, b.closure_naive());
        // Connected case: closure is the cover graph of 𝓓(P, ≤^{𝓛(A)}).
        let masks: Vec<u64> = b.vertices().iter().map(|&v| dl.masks()[v]).collect();
        let q = order_from_family(&p, &masks);
        assert_eq!(family[0], q);
        let expected = sublattice_cover_arcs(&dl, &q).unwrap();
        assert_eq!(closed.arcs(), &expected);
    }

    #[test]
    fn intersection_of_compatible_orders_is_the_union_family_order() {
        let p = antichain(3);
        let dl = downset_lattice(&p).unwrap();
        let exts = all_extensions(&p);
        let mut checked = 0;
        for q1 in exts.iter().take(40) {
            for q2 in exts.iter().take(40) {
                if !compatible(&p, q1, q2) {
                    continue;
                }
                let s1 = extension_sublattice(&dl, q1).unwrap();
                let s2 = extension_sublattice(&dl, q2).unwrap();
                let union_masks: Vec<u64> = s1
                    .union(&s2)
                    .map(|&i| dl.masks()[i])
                    .collect();
                assert_eq!(order_from_family(&p, &union_masks), q1.intersect(q2));
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}
