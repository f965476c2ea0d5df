//! Lattices of Wedderburn polynomials over the rational quaternions and the
//! pseudo-roots labelling their cover arcs.
//!
//! For a finite list `S` of quaternions, [`PseudoRootLattice::build`]
//! computes the minimal monic polynomial `f_T` vanishing on each index
//! subset `T ⊆ S`, deduplicates coincident polynomials, and orders the
//! result by right divisibility. That order is a modular lattice whose meet
//! is the GCRD and whose join is the LCLM; both closures are verified
//! against the general algorithms at build time. Every cover arc `r → q`
//! drops the degree by exactly one, so `r = (t − ξ)·q` for a unique `ξ`:
//! the *pseudo-root* `ψ(r → q)`, stored from the exact quotient.
//!
//! Across a diamond the four pseudo-roots are linked by
//! `(t − u₁)(t − v₁) = (t − u₂)(t − v₂)`, equivalently `u₁ + v₁ = u₂ + v₂`
//! and `u₁v₁ = u₂v₂`. Solving those equations in the division ring gives
//! the conjugation formulas
//!
//! ```text
//! diamond_up:   u₁ = (v₁ − v₂) v₂ (v₁ − v₂)⁻¹,   u₂ = (v₂ − v₁) v₁ (v₂ − v₁)⁻¹
//! diamond_down: v₁ = (u₁ − u₂)⁻¹ u₂ (u₁ − u₂),   v₂ = (u₂ − u₁)⁻¹ u₁ (u₂ − u₁)
//! ```
//!
//! Note the companion root is conjugated: `u₁` arises from `v₂`, not `v₁`.
//! A frequently quoted variant conjugates the root on the same chain
//! instead; exact computation at `(i, j)` shows that variant fails the
//! factorization identity, so the forms above are the ones implemented, and
//! both operations check the identity by exact polynomial multiplication in
//! debug builds.
//!
//! [`PseudoRootLattice::generation_check`] replays a diamond closure while
//! rederiving every new arc's pseudo-root from already-derived ones via
//! `diamond_up`/`diamond_down` and compares each value with the stored `ψ`
//! exactly, witnessing that diamond generation implies rational generation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diamond::{ArcSet, Diamond};
use crate::exactnum::Quaternion;
use crate::lattice::{Arc, FiniteLattice};
use crate::ncpoly::NCPoly;

/// Subsets of up to this many quaternions can be built (2^|S| polynomials).
pub const MAX_SET_SIZE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PseudoRootError {
    TooLarge { size: usize },
    /// The two pseudo-roots of a diamond operation coincide.
    DegenerateDiamond,
    /// The path is not a maximal top-to-bottom cover path.
    NotMaximalPath,
    /// An arc outside the lattice's cover graph.
    UnknownArc(Arc),
    /// A structural guarantee failed; reports an implementation bug.
    Invariant(&'static str),
}

impl fmt::Display for PseudoRootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PseudoRootError::TooLarge { size } => {
                write!(f, "set of {size} elements exceeds the limit of {MAX_SET_SIZE}")
            }
            PseudoRootError::DegenerateDiamond => write!(f, "degenerate diamond: equal pseudo-roots"),
            PseudoRootError::NotMaximalPath => write!(f, "not a maximal cover path"),
            PseudoRootError::UnknownArc(a) => {
                write!(f, "{} → {} is not a cover arc of the lattice", a.top, a.bottom)
            }
            PseudoRootError::Invariant(what) => write!(f, "invariant violated: {what}"),
        }
    }
}

impl core::error::Error for PseudoRootError {}

/// Pseudo-roots across one diamond: upper pair over lower pair, chainwise,
/// satisfying `(t − u₁)(t − v₁) = (t − u₂)(t − v₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondRelation {
    pub upper: (Quaternion, Quaternion),
    pub lower: (Quaternion, Quaternion),
}

impl DiamondRelation {
    pub fn from_lower(v1: &Quaternion, v2: &Quaternion) -> Result<Self, PseudoRootError> {
        let upper = diamond_up(v1, v2)?;
        Ok(DiamondRelation {
            upper,
            lower: (v1.clone(), v2.clone()),
        })
    }

    pub fn from_upper(u1: &Quaternion, u2: &Quaternion) -> Result<Self, PseudoRootError> {
        let lower = diamond_down(u1, u2)?;
        Ok(DiamondRelation {
            upper: (u1.clone(), u2.clone()),
            lower,
        })
    }

    /// The factorization identity, by exact polynomial multiplication.
    pub fn holds(&self) -> bool {
        let chain1 = &NCPoly::t_minus(&self.upper.0) * &NCPoly::t_minus(&self.lower.0);
        let chain2 = &NCPoly::t_minus(&self.upper.1) * &NCPoly::t_minus(&self.lower.1);
        chain1 == chain2
    }

    /// The equivalent coefficient identities `u₁+v₁ = u₂+v₂`, `u₁v₁ = u₂v₂`.
    pub fn sum_product_identities(&self) -> bool {
        let (u1, u2) = (&self.upper.0, &self.upper.1);
        let (v1, v2) = (&self.lower.0, &self.lower.1);
        u1 + v1 == u2 + v2 && u1 * v1 == u2 * v2
    }
}

/// Transports a distinct pair of lower pseudo-roots to the upper pair of a
/// diamond by conjugation with their difference.
pub fn diamond_up(
    v1: &Quaternion,
    v2: &Quaternion,
) -> Result<(Quaternion, Quaternion), PseudoRootError> {
    let diff = v1 - v2;
    if diff.is_zero() {
        return Err(PseudoRootError::DegenerateDiamond);
    }
    let u1 = v2.conjugate_by(&diff).expect("difference is nonzero");
    let u2 = v1.conjugate_by(&(-&diff)).expect("difference is nonzero");
    debug_assert!(DiamondRelation {
        upper: (u1.clone(), u2.clone()),
        lower: (v1.clone(), v2.clone()),
    }
    .holds());
    Ok((u1, u2))
}

/// Inverse of [`diamond_up`]: recovers the lower pair from a distinct upper
/// pair by conjugation with the inverse difference.
pub fn diamond_down(
    u1: &Quaternion,
    u2: &Quaternion,
) -> Result<(Quaternion, Quaternion), PseudoRootError> {
    let diff = u1 - u2;
    if diff.is_zero() {
        return Err(PseudoRootError::DegenerateDiamond);
    }
    let inv = diff.inv().expect("difference is nonzero");
    let v1 = u2.conjugate_by(&inv).expect("inverse is nonzero");
    let v2 = u1.conjugate_by(&(-&inv)).expect("inverse is nonzero");
    debug_assert!(DiamondRelation {
        upper: (u1.clone(), u2.clone()),
        lower: (v1.clone(), v2.clone()),
    }
    .holds());
    Ok((v1, v2))
}

/// The lattice `{f_T : T ⊆ S}` under right divisibility, with pseudo-roots
/// on its cover arcs.
#[derive(Clone, Debug)]
pub struct PseudoRootLattice {
    elements: Vec<Quaternion>,
    polys: Vec<NCPoly>,
    lattice: FiniteLattice,
    psi: BTreeMap<Arc, Quaternion>,
    subset_poly: Vec<usize>,
}

impl PseudoRootLattice {
    pub fn build(elements: &[Quaternion]) -> Result<Self, PseudoRootError> {
        let k = elements.len();
        if k > MAX_SET_SIZE {
            return Err(PseudoRootError::TooLarge { size: k });
        }

        // f over every index subset, adding elements in increasing index order
        let mut by_mask: Vec<NCPoly> = Vec::with_capacity(1 << k);
        by_mask.push(NCPoly::one());
        for mask in 1usize..1 << k {
            let high = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
            let f = by_mask[mask & !(1 << high)]
                .lclm_linear(&elements[high])
                .expect("f stays monic");
            by_mask.push(f);
        }

        let mut polys: Vec<NCPoly> = by_mask.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        polys.sort_by_key(|p| (p.degree(), p.clone()));
        let index_of: BTreeMap<NCPoly, usize> =
            polys.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let subset_poly: Vec<usize> = by_mask.iter().map(|f| index_of[f]).collect();

        let n = polys.len();
        let mut leq = vec![false; n * n];
        for (i, p) in polys.iter().enumerate() {
            for (j, q) in polys.iter().enumerate() {
                leq[i * n + j] = p.right_divides(q).expect("f_T are monic");
            }
        }
        let names = polys.iter().map(|p| p.to_string()).collect();
        let lattice = FiniteLattice::build(n, leq, Some(names))
            .map_err(|_| PseudoRootError::Invariant("divisibility order is not a lattice"))?;
        if !lattice.is_modular() {
            return Err(PseudoRootError::Invariant("divisibility lattice is not modular"));
        }

        // closure under gcrd/lclm, and agreement with the lattice tables
        for i in 0..n {
            for j in i + 1..n {
                let g = polys[i].gcrd(&polys[j]).expect("monic nonzero");
                let h = polys[i].lclm(&polys[j]).expect("monic nonzero");
                let (Some(&gi), Some(&hi)) = (index_of.get(&g), index_of.get(&h)) else {
                    return Err(PseudoRootError::Invariant(
                        "polynomials are not closed under gcrd/lclm",
                    ));
                };
                if lattice.meet(i, j) != gi || lattice.join(i, j) != hi {
                    return Err(PseudoRootError::Invariant(
                        "lattice meet/join disagree with gcrd/lclm",
                    ));
                }
            }
        }

        // every cover drops the degree by one and carries an exact quotient
        let mut psi = BTreeMap::new();
        for &arc in lattice.covers() {
            let (quot, rem) = polys[arc.top]
                .right_divide(&polys[arc.bottom])
                .expect("divisor is monic");
            if !rem.is_zero() || quot.degree() != Some(1) || !quot.is_monic() {
                return Err(PseudoRootError::Invariant(
                    "cover arc is not an exact degree-one quotient",
                ));
            }
            let xi = -&quot.coeff(0);
            debug_assert_eq!(
                &NCPoly::t_minus(&xi) * &polys[arc.bottom],
                polys[arc.top]
            );
            psi.insert(arc, xi);
        }

        Ok(PseudoRootLattice {
            elements: elements.to_vec(),
            polys,
            lattice,
            psi,
            subset_poly,
        })
    }

    pub fn elements(&self) -> &[Quaternion] {
        &self.elements
    }

    pub fn polys(&self) -> &[NCPoly] {
        &self.polys
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// `ψ(r → q)`: the pseudo-root of a cover arc.
    pub fn psi(&self, arc: &Arc) -> Option<&Quaternion> {
        self.psi.get(arc)
    }

    pub fn psi_table(&self) -> &BTreeMap<Arc, Quaternion> {
        &self.psi
    }

    /// Lattice element holding `f_T` for an index subset of `S`.
    pub fn poly_of_subset(&self, mask: usize) -> usize {
        self.subset_poly[mask]
    }

    /// The full Wedderburn polynomial `f_S`.
    pub fn f_s(&self) -> &NCPoly {
        &self.polys[self.subset_poly[self.subset_poly.len() - 1]]
    }

    /// The zero arcs `f_{{s}} → 1`, one per element of `S`; their
    /// pseudo-roots are the elements themselves.
    pub fn zero_arcs(&self) -> BTreeSet<Arc> {
        let one = self.subset_poly[0];
        (0..self.elements.len())
            .map(|i| Arc::new(self.subset_poly[1 << i], one))
            .collect()
    }

    /// Genericity, detected empirically: all `2^|S|` polynomials distinct
    /// with `deg f_T = |T|`, so the lattice is the full Boolean shape.
    pub fn generic_check(&self) -> bool {
        self.polys.len() == self.subset_poly.len()
            && self
                .subset_poly
                .iter()
                .enumerate()
                .all(|(mask, &p)| self.polys[p].degree() == Some(mask.count_ones() as usize))
    }

    /// The four stored pseudo-roots of one diamond of the cover graph,
    /// paired chainwise (upper over lower).
    pub fn relation_of(&self, d: &Diamond) -> DiamondRelation {
        DiamondRelation {
            upper: (
                self.psi[&Arc::new(d.top, d.left)].clone(),
                self.psi[&Arc::new(d.top, d.right)].clone(),
            ),
            lower: (
                self.psi[&Arc::new(d.left, d.bottom)].clone(),
                self.psi[&Arc::new(d.right, d.bottom)].clone(),
            ),
        }
    }

    /// Pseudo-roots along a maximal cover path from `f_S` down to `1`,
    /// topmost factor first, so the factors multiply back to `f_S` in the
    /// returned order.
    pub fn chain_factorization(&self, path: &[usize]) -> Result<Vec<Quaternion>, PseudoRootError> {
        if path.first() != Some(&self.lattice.top()) || path.last() != Some(&self.lattice.bottom()) {
            return Err(PseudoRootError::NotMaximalPath);
        }
        let mut roots = Vec::with_capacity(path.len().saturating_sub(1));
        for w in path.windows(2) {
            let arc = Arc::new(w[0], w[1]);
            let xi = self.psi.get(&arc).ok_or(PseudoRootError::NotMaximalPath)?;
            roots.push(xi.clone());
        }
        debug_assert_eq!(
            &roots
                .iter()
                .fold(NCPoly::one(), |acc, xi| &acc * &NCPoly::t_minus(xi)),
            self.f_s()
        );
        Ok(roots)
    }

    /// Replays the diamond closure of `base`, deriving every newly closed
    /// arc's pseudo-root from already-derived ones via the diamond
    /// operations and comparing each value exactly with the stored `ψ`.
    pub fn generation_check(
        &self,
        base: &BTreeSet<Arc>,
    ) -> Result<GenerationReport, PseudoRootError> {
        for arc in base {
            if !self.psi.contains_key(arc) {
                return Err(PseudoRootError::UnknownArc(*arc));
            }
        }
        let base_set = ArcSet::new(&self.lattice, base.clone()).expect("arcs are covers");
        let closure = base_set.closure_naive();
        let diamonds = closure.diamonds();

        let mut known: BTreeMap<Arc, Quaternion> = BTreeMap::new();
        let mut steps = Vec::new();
        for arc in base {
            let value = self.psi[arc].clone();
            known.insert(*arc, value.clone());
            steps.push(DerivationStep {
                arc: *arc,
                value,
                rule: DerivationRule::Given,
            });
        }
        let mut mismatches = Vec::new();
        let mut degenerate = Vec::new();
        loop {
            let mut progressed = false;
            for d in &diamonds {
                let upper = [Arc::new(d.top, d.left), Arc::new(d.top, d.right)];
                let lower = [Arc::new(d.left, d.bottom), Arc::new(d.right, d.bottom)];
                let derive_lower =
                    upper.iter().all(|a| known.contains_key(a)) && !lower.iter().all(|a| known.contains_key(a));
                let derive_upper =
                    lower.iter().all(|a| known.contains_key(a)) && !upper.iter().all(|a| known.contains_key(a));
                let (from, to, rule, result) = if derive_lower {
                    let r = diamond_down(&known[&upper[0]], &known[&upper[1]]);
                    (upper, lower, DerivationRule::Down { operands: (upper[0], upper[1]) }, r)
                } else if derive_upper {
                    let r = diamond_up(&known[&lower[0]], &known[&lower[1]]);
                    (lower, upper, DerivationRule::Up { operands: (lower[0], lower[1]) }, r)
                } else {
                    continue;
                };
                let _ = from;
                match result {
                    Ok((first, second)) => {
                        for (arc, value) in [(to[0], first), (to[1], second)] {
                            if known.contains_key(&arc) {
                                continue;
                            }
                            if value != self.psi[&arc] {
                                mismatches.push(Mismatch {
                                    arc,
                                    derived: value,
                                    stored: self.psi[&arc].clone(),
                                });
                                continue;
                            }
                            known.insert(arc, value.clone());
                            steps.push(DerivationStep {
                                arc,
                                value,
                                rule: rule.clone(),
                            });
                            progressed = true;
                        }
                    }
                    Err(PseudoRootError::DegenerateDiamond) => {
                        // reroute: another spanning diamond may still derive
                        // these arcs; the event itself is reported
                        degenerate.push(*d);
                    }
                    Err(e) => return Err(e),
                }
            }
            if !progressed {
                break;
            }
        }
        let complete = closure.arcs().iter().all(|a| known.contains_key(a));
        Ok(GenerationReport {
            base: base.clone(),
            closure: closure.arcs().clone(),
            steps,
            mismatches,
            degenerate,
            complete,
        })
    }
}

/// How one pseudo-root was obtained during a closure replay.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationRule {
    /// Part of the base set; value read off the lattice.
    Given,
    /// Derived from the in-V below it.
    Up { operands: (Arc, Arc) },
    /// Derived from the out-V above it.
    Down { operands: (Arc, Arc) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub arc: Arc,
    pub value: Quaternion,
    pub rule: DerivationRule,
}

/// A derived value disagreeing with the stored pseudo-root. Always empty for
/// valid lattices; reported rather than silently accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub arc: Arc,
    pub derived: Quaternion,
    pub stored: Quaternion,
}

/// The derivation tree of a closure replay.
#[derive(Debug, Clone)]
pub struct GenerationReport {
    pub base: BTreeSet<Arc>,
    pub closure: BTreeSet<Arc>,
    pub steps: Vec<DerivationStep>,
    pub mismatches: Vec<Mismatch>,
    pub degenerate: Vec<Diamond>,
    /// Every closure arc received a derived pseudo-root.
    pub complete: bool,
}

impl GenerationReport {
    pub fn is_exact(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Quaternion as Q;

    fn t2_plus_1() -> NCPoly {
        NCPoly::from_coeffs(vec![Q::one(), Q::zero(), Q::one()])
    }

    #[test]
    fn empty_set_gives_the_one_element_lattice() {
        let pl = PseudoRootLattice::build(&[]).unwrap();
        assert_eq!(pl.lattice().len(), 1);
        assert_eq!(pl.f_s(), &NCPoly::one());
        assert!(pl.generic_check());
    }

    #[test]
    fn the_quadratic_example() {
        let pl = PseudoRootLattice::build(&[Q::i(), Q::j()]).unwrap();
        assert_eq!(pl.lattice().len(), 4);
        assert_eq!(pl.f_s(), &t2_plus_1());
        assert!(pl.generic_check());

        let top = pl.lattice().top();
        let one = pl.poly_of_subset(0);
        let ti = pl.poly_of_subset(0b01);
        let tj = pl.poly_of_subset(0b10);
        assert_eq!(pl.psi(&Arc::new(ti, one)), Some(&Q::i()));
        assert_eq!(pl.psi(&Arc::new(tj, one)), Some(&Q::j()));
        assert_eq!(pl.psi(&Arc::new(top, ti)), Some(&-Q::i()));
        assert_eq!(pl.psi(&Arc::new(top, tj)), Some(&-Q::j()));
    }

    #[test]
    fn central_elements_give_the_commutative_product() {
        let pl = PseudoRootLattice::build(&[Q::from_int(1), Q::from_int(2)]).unwrap();
        assert_eq!(pl.lattice().len(), 4);
        assert_eq!(
            pl.f_s(),
            &NCPoly::from_coeffs(vec![Q::from_int(2), Q::from_int(-3), Q::one()])
        );
        assert!(pl.generic_check());
        // one chain factors as (t−2)(t−1), the other as (t−1)(t−2)
        let factorizations: BTreeSet<Vec<Quaternion>> = pl
            .lattice()
            .maximal_chains()
            .iter()
            .map(|chain| pl.chain_factorization(chain).unwrap())
            .collect();
        assert_eq!(
            factorizations,
            BTreeSet::from([
                vec![Q::from_int(1), Q::from_int(2)],
                vec![Q::from_int(2), Q::from_int(1)],
            ])
        );
    }

    #[test]
    fn i_j_k_collapse_to_m3() {
        use crate::iso::lattices_isomorphic;
        let pl = PseudoRootLattice::build(&[Q::i(), Q::j(), Q::k()]).unwrap();
        // all three pairs share f = t² + 1, so only five polynomials remain
        assert_eq!(pl.lattice().len(), 5);
        assert_eq!(pl.f_s(), &t2_plus_1());
        assert!(!pl.generic_check());
        assert!(pl.lattice().is_modular());
        assert!(!pl.lattice().is_distributive());
        assert!(lattices_isomorphic(pl.lattice(), &FiniteLattice::m3()));
    }

    #[test]
    fn opposite_imaginary_units_stay_generic() {
        let pl = PseudoRootLattice::build(&[Q::i(), -Q::i()]).unwrap();
        assert_eq!(pl.lattice().len(), 4);
        assert!(pl.generic_check());
    }

    #[test]
    fn repeated_elements_collapse() {
        let pl = PseudoRootLattice::build(&[Q::from_int(1), Q::from_int(1)]).unwrap();
        assert_eq!(pl.lattice().len(), 2);
        assert!(!pl.generic_check());
    }

    #[test]
    fn diamond_up_and_down_worked_example() {
        let (u1, u2) = diamond_up(&Q::i(), &Q::j()).unwrap();
        assert_eq!((u1.clone(), u2.clone()), (-Q::i(), -Q::j()));
        assert_eq!(diamond_down(&u1, &u2).unwrap(), (Q::i(), Q::j()));
        // central case swaps the roots
        assert_eq!(
            diamond_up(&Q::from_int(1), &Q::from_int(2)).unwrap(),
            (Q::from_int(2), Q::from_int(1))
        );
        assert_eq!(
            diamond_down(&Q::from_int(2), &Q::from_int(1)).unwrap(),
            (Q::from_int(1), Q::from_int(2))
        );
        assert_eq!(
            diamond_up(&Q::i(), &Q::i()).unwrap_err(),
            PseudoRootError::DegenerateDiamond
        );
    }

    #[test]
    fn chain_factorizations_of_the_quadratic() {
        let pl = PseudoRootLattice::build(&[Q::i(), Q::j()]).unwrap();
        let chains = pl.lattice().maximal_chains();
        assert_eq!(chains.len(), 2);
        let mut seen = BTreeSet::new();
        for chain in &chains {
            let roots = pl.chain_factorization(chain).unwrap();
            let product = roots
                .iter()
                .fold(NCPoly::one(), |acc, xi| &acc * &NCPoly::t_minus(xi));
            assert_eq!(&product, pl.f_s());
            seen.insert(roots);
        }
        assert!(seen.contains(&vec![-Q::i(), Q::i()]));
        assert!(seen.contains(&vec![-Q::j(), Q::j()]));
    }

    #[test]
    fn chain_factorization_rejects_partial_paths() {
        let pl = PseudoRootLattice::build(&[Q::i(), Q::j()]).unwrap();
        let top = pl.lattice().top();
        let ti = pl.poly_of_subset(0b01);
        assert_eq!(
            pl.chain_factorization(&[top, ti]),
            Err(PseudoRootError::NotMaximalPath)
        );
    }

    #[test]
    fn generation_from_the_zero_arcs() {
        let pl = PseudoRootLattice::build(&[Q::i(), Q::j()]).unwrap();
        let report = pl.generation_check(&pl.zero_arcs()).unwrap();
        assert!(report.is_exact());
        assert!(report.complete);
        assert!(report.degenerate.is_empty());
        assert_eq!(report.closure.len(), 4);
        // the two derived upper arcs carry −i and −j
        let derived: BTreeSet<_> = report
            .steps
            .iter()
            .filter(|s| s.rule != DerivationRule::Given)
            .map(|s| s.value.clone())
            .collect();
        assert_eq!(derived, BTreeSet::from([-Q::i(), -Q::j()]));
    }

    #[test]
    fn generation_with_everything_given_derives_nothing() {
        let pl = PseudoRootLattice::build(&[Q::i(), Q::j()]).unwrap();
        let all: BTreeSet<Arc> = pl.lattice().covers().iter().copied().collect();
        let report = pl.generation_check(&all).unwrap();
        assert!(report.is_exact() && report.complete);
        assert!(report
            .steps
            .iter()
            .all(|s| s.rule == DerivationRule::Given));
    }

    #[test]
    fn build_rejects_oversized_sets() {
        let s = vec![Q::i(); MAX_SET_SIZE + 1];
        assert_eq!(
            PseudoRootLattice::build(&s).unwrap_err(),
            PseudoRootError::TooLarge {
                size: MAX_SET_SIZE + 1
            }
        );
    }
}
