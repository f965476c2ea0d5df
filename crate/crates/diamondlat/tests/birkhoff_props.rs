//! The sublattice/extension correspondence and the quasi-order form of the
//! diamond closure, checked exhaustively at small sizes.

use std::collections::BTreeSet;

use diamondlat::birkhoff::{
    all_extensions, closure_dldc, compatible, downset_covers, downset_lattice,
    extension_sublattice, is_cover_preserving_extension, order_from_family, PointedPoset,
};
use diamondlat::diamond::ArcSet;
use diamondlat::lattice::Arc;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every labeled pointed poset with at most three middle elements,
/// enumerated by filtering the strict relations on the middles.
fn tiny_posets() -> Vec<PointedPoset> {
    let mut out = Vec::new();
    for middles in 0usize..=3 {
        let pairs: Vec<(usize, usize)> = (0..middles)
            .flat_map(|i| (0..middles).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .collect();
        'choice: for choice in 0u32..1 << pairs.len() {
            let rel: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(idx, _)| choice >> idx & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let has = |x: usize, y: usize| rel.contains(&(x, y));
            for &(x, y) in &rel {
                if has(y, x) {
                    continue 'choice; // not antisymmetric
                }
                for z in 0..middles {
                    if has(y, z) && !has(x, z) {
                        continue 'choice; // not transitive
                    }
                }
            }
            out.push(PointedPoset::from_middles(middles, &rel).unwrap());
        }
    }
    // 1 + 1 + 3 + 19 labeled posets of sizes 0..=3
    assert_eq!(out.len(), 24);
    out
}

#[test]
fn extension_to_sublattice_and_back_is_the_identity() {
    for p in tiny_posets() {
        let dl = downset_lattice(&p).unwrap();
        for q in all_extensions(&p) {
            let sub = extension_sublattice(&dl, &q).unwrap();
            assert!(!sub.is_empty());
            assert!(dl.lattice.is_sublattice(&sub));
            let masks: Vec<u64> = sub.iter().map(|&i| dl.masks()[i]).collect();
            assert_eq!(order_from_family(&p, &masks), q);
        }
    }
}

#[test]
fn sublattice_to_extension_and_back_is_the_identity() {
    for p in tiny_posets() {
        let dl = downset_lattice(&p).unwrap();
        let n = dl.lattice.len();
        for mask in 1u32..1 << n {
            let sub: BTreeSet<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if !dl.lattice.is_sublattice(&sub) {
                continue;
            }
            let masks: Vec<u64> = sub.iter().map(|&i| dl.masks()[i]).collect();
            let q = order_from_family(&p, &masks);
            assert!(q.is_extension_of(&p) && q.is_pointed_over(&p));
            assert_eq!(extension_sublattice(&dl, &q).unwrap(), sub);
        }
    }
}

#[test]
fn generated_sublattices_through_the_induced_order() {
    let mut rng = StdRng::seed_from_u64(5);
    for p in tiny_posets() {
        let dl = downset_lattice(&p).unwrap();
        let n = dl.lattice.len();
        for _ in 0..40 {
            let sample: BTreeSet<usize> = (0..n).filter(|_| rng.random_bool(0.4)).collect();
            if sample.is_empty() {
                continue;
            }
            let generated = dl.lattice.sublattice_generated(&sample);
            let masks: Vec<u64> = sample.iter().map(|&i| dl.masks()[i]).collect();
            let via_order = extension_sublattice(&dl, &order_from_family(&p, &masks)).unwrap();
            assert_eq!(generated, via_order);
        }
    }
}

#[test]
fn cover_preserving_agreement_between_the_two_sides() {
    for p in tiny_posets() {
        let dl = downset_lattice(&p).unwrap();
        for q in all_extensions(&p) {
            let by_classes = is_cover_preserving_extension(&p, &q).unwrap();
            let sub = extension_sublattice(&dl, &q).unwrap();
            let by_lattice = dl.lattice.is_cover_preserving(&sub).unwrap();
            assert_eq!(by_classes, by_lattice);
        }
    }
}

#[test]
fn downset_cover_relation_matches_the_lattice() {
    for p in tiny_posets() {
        let dl = downset_lattice(&p).unwrap();
        let q = p.as_quasi_order();
        let masks = dl.masks();
        for (i, &d) in masks.iter().enumerate() {
            for (j, &c) in masks.iter().enumerate() {
                if c & !d != 0 {
                    continue;
                }
                let by_classes = downset_covers(&p, &q, d, c).unwrap();
                let by_lattice = dl.lattice.covers().contains(&Arc::new(i, j));
                assert_eq!(by_classes, by_lattice);
            }
        }
    }
}

#[test]
fn compatibility_iff_sublattices_intersect() {
    for p in tiny_posets() {
        let dl = downset_lattice(&p).unwrap();
        let exts = all_extensions(&p);
        for q1 in &exts {
            for q2 in &exts {
                let s1 = extension_sublattice(&dl, q1).unwrap();
                let s2 = extension_sublattice(&dl, q2).unwrap();
                assert_eq!(compatible(&p, q1, q2), !s1.is_disjoint(&s2));
            }
        }
    }
}

#[test]
fn connected_generation_criterion() {
    // connected A generates the whole cover graph iff for every j ≰ i some
    // spanned downset contains i and not j
    let mut rng = StdRng::seed_from_u64(17);
    let p = PointedPoset::from_middles(3, &[(0, 1)]).unwrap();
    let dl = downset_lattice(&p).unwrap();
    let host = &dl.lattice;
    let mut both_outcomes = BTreeSet::new();
    for _ in 0..120 {
        let arcs: BTreeSet<Arc> = host
            .covers()
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.45))
            .collect();
        let a = ArcSet::new(host, arcs).unwrap();
        if a.is_empty() || a.arc_components().len() != 1 {
            continue;
        }
        let generates = a.closure_naive() == ArcSet::full(host);
        let spanned: Vec<u64> = a.vertices().iter().map(|&v| dl.masks()[v]).collect();
        let criterion = (0..p.len()).all(|i| {
            (0..p.len()).all(|j| {
                p.leq(j, i)
                    || spanned
                        .iter()
                        .any(|&m| m >> i & 1 == 1 && m >> j & 1 == 0)
            })
        });
        assert_eq!(generates, criterion);
        both_outcomes.insert(generates);
    }
    assert_eq!(both_outcomes.len(), 2, "sampling should hit both outcomes");
}

#[test]
fn dldc_agrees_with_the_naive_closure() {
    let mut rng = StdRng::seed_from_u64(29);
    for p in [
        PointedPoset::from_middles(3, &[]).unwrap(),
        PointedPoset::from_middles(3, &[(0, 1), (0, 2)]).unwrap(),
        PointedPoset::from_middles(4, &[(0, 1), (2, 3)]).unwrap(),
    ] {
        let dl = downset_lattice(&p).unwrap();
        let host = &dl.lattice;
        for trial in 0..80 {
            let density = [0.15, 0.35, 0.6][trial % 3];
            let arcs: BTreeSet<Arc> = host
                .covers()
                .iter()
                .copied()
                .filter(|_| rng.random_bool(density))
                .collect();
            let a = ArcSet::new(host, arcs).unwrap();
            let (closed, family) = closure_dldc(&dl, &a).unwrap();
            assert_eq!(closed, a.closure_naive());
            assert_eq!(closed, a.closure_mldc().unwrap().0);
            // pairwise incompatible family
            for (i, q1) in family.iter().enumerate() {
                for q2 in &family[i + 1..] {
                    assert!(!compatible(&p, q1, q2));
                }
            }
            // generates everything iff the family is exactly the base order
            let generates = closed == ArcSet::full(host);
            assert_eq!(
                generates,
                family.len() == 1 && family[0] == p.as_quasi_order()
            );
        }
    }
}
