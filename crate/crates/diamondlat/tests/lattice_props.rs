//! Structural properties of the lattice corpus: agreement of the modularity
//! characterizations, the exchange behaviour of covers under join/meet, the
//! distance formula, and the closure-map axioms of sublattice generation.

use std::collections::BTreeSet;

use diamondlat::FiniteLattice;

fn corpus() -> Vec<FiniteLattice> {
    vec![
        FiniteLattice::boolean(2),
        FiniteLattice::boolean(3),
        FiniteLattice::boolean(4),
        FiniteLattice::chain(1),
        FiniteLattice::chain(5),
        FiniteLattice::m3(),
        FiniteLattice::n5(),
        FiniteLattice::product(&FiniteLattice::m3(), &FiniteLattice::chain(2)),
        FiniteLattice::product(&FiniteLattice::chain(3), &FiniteLattice::chain(3)),
        FiniteLattice::divisor_lattice(360),
    ]
}

#[test]
fn the_three_modularity_characterizations_agree() {
    for l in corpus() {
        assert_eq!(l.is_modular(), l.modular_by_neighbors());
        assert_eq!(l.is_modular(), l.modular_by_law());
    }
}

#[test]
fn ranked_iff_all_cover_paths_between_comparable_elements_have_equal_length() {
    for l in corpus() {
        // enumerate directed cover paths from y down to x
        fn path_lengths(
            l: &FiniteLattice,
            from: usize,
            to: usize,
            len: usize,
            out: &mut BTreeSet<usize>,
        ) {
            if from == to {
                out.insert(len);
                return;
            }
            for &w in l.covers_down(from) {
                if l.leq(to, w) {
                    path_lengths(l, w, to, len + 1, out);
                }
            }
        }
        let mut all_equal = true;
        for y in 0..l.len() {
            for x in 0..l.len() {
                if !l.lt(x, y) {
                    continue;
                }
                let mut lengths = BTreeSet::new();
                path_lengths(&l, y, x, 0, &mut lengths);
                all_equal &= lengths.len() == 1;
            }
        }
        assert_eq!(l.is_ranked(), all_equal);
    }
}

#[test]
fn cover_exchange_under_join_and_meet_in_modular_lattices() {
    // for a cover x' → x and any y, exactly one of the two alternatives holds
    for l in corpus().into_iter().filter(FiniteLattice::is_modular) {
        let covers_in = |a: usize, b: usize| l.covers_down(a).contains(&b);
        for arc in l.covers() {
            let (xp, x) = (arc.top, arc.bottom);
            for y in 0..l.len() {
                let same_join = l.join(xp, y) == l.join(x, y);
                let meet_covers = covers_in(l.meet(xp, y), l.meet(x, y));
                let join_covers = covers_in(l.join(xp, y), l.join(x, y));
                let same_meet = l.meet(xp, y) == l.meet(x, y);
                let first = same_join && meet_covers;
                let second = join_covers && same_meet;
                assert!(first ^ second, "exactly one alternative must hold");
            }
        }
    }
}

#[test]
fn distance_formula_in_modular_lattices() {
    for l in corpus().into_iter().filter(FiniteLattice::is_modular) {
        let h = l.height();
        for x in 0..l.len() {
            for y in 0..l.len() {
                let d = l.cover_distance(x, y).expect("cover graph is connected");
                assert_eq!(d, h.of(l.join(x, y)) - h.of(l.meet(x, y)));
                assert_eq!(d, 2 * h.of(l.join(x, y)) - h.of(x) - h.of(y));
                assert_eq!(d, h.of(x) + h.of(y) - 2 * h.of(l.meet(x, y)));
            }
        }
    }
}

#[test]
fn sublattice_generation_is_a_closure_map() {
    for l in [FiniteLattice::boolean(3), FiniteLattice::m3(), FiniteLattice::n5()] {
        let subsets: Vec<BTreeSet<usize>> = (0..1u32 << l.len())
            .step_by(3) // thin the 2^n loop; still hundreds of subsets
            .map(|mask| (0..l.len()).filter(|&x| mask >> x & 1 == 1).collect())
            .collect();
        for ys in &subsets {
            let closed = l.sublattice_generated(ys);
            assert!(ys.is_subset(&closed), "extensive");
            assert_eq!(l.sublattice_generated(&closed), closed, "idempotent");
            assert!(l.is_sublattice(&closed));
            let mut bigger = ys.clone();
            bigger.insert(l.top());
            assert!(
                closed.is_subset(&l.sublattice_generated(&bigger)),
                "monotone"
            );
        }
    }
}

#[test]
fn cover_preserving_path_criterion_matches_direct_cover_comparison() {
    // oracle: compute the sublattice's own covers and compare to the induced arcs
    for l in [FiniteLattice::boolean(3), FiniteLattice::m3(), FiniteLattice::n5()] {
        for mask in 0..1u32 << l.len() {
            let k: BTreeSet<usize> = (0..l.len()).filter(|&x| mask >> x & 1 == 1).collect();
            if !l.is_sublattice(&k) || k.is_empty() {
                continue;
            }
            let elems: Vec<usize> = k.iter().copied().collect();
            let mut internal_covers = BTreeSet::new();
            for &y in &elems {
                for &x in &elems {
                    if !l.lt(x, y) {
                        continue;
                    }
                    let between = elems.iter().any(|&z| l.lt(x, z) && l.lt(z, y));
                    if !between {
                        internal_covers.insert((y, x));
                    }
                }
            }
            let induced: BTreeSet<(usize, usize)> = l
                .induced_arcs(&k)
                .into_iter()
                .map(|a| (a.top, a.bottom))
                .collect();
            let oracle = internal_covers == induced;
            assert_eq!(l.is_cover_preserving(&k).unwrap(), oracle);
        }
    }
}
