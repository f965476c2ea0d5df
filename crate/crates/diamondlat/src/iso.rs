//! Brute-force order-isomorphism search for small posets and lattices.

use alloc::vec;
use alloc::vec::Vec;

use crate::birkhoff::PointedPoset;
use crate::lattice::FiniteLattice;

/// Searches for a bijection `f` with `x ≤ y ⇔ f(x) ≤ f(y)` by backtracking,
/// pruning on (down-set size, up-set size) signatures. Intended for orders
/// of a few dozen elements.
pub fn order_isomorphism(
    n: usize,
    leq_a: impl Fn(usize, usize) -> bool,
    m: usize,
    leq_b: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    if n != m {
        return None;
    }
    let sig = |leq: &dyn Fn(usize, usize) -> bool, x: usize| {
        let below = (0..n).filter(|&z| leq(z, x)).count();
        let above = (0..n).filter(|&z| leq(x, z)).count();
        (below, above)
    };
    let sig_a: Vec<_> = (0..n).map(|x| sig(&leq_a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| sig(&leq_b, x)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    // assign the most constrained element first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| sig_b.iter().filter(|&&s| s == sig_a[x]).count());

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        pos: usize,
        order: &[usize],
        sig_a: &[(usize, usize)],
        sig_b: &[(usize, usize)],
        leq_a: &impl Fn(usize, usize) -> bool,
        leq_b: &impl Fn(usize, usize) -> bool,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(pos) else {
            return true;
        };
        for y in 0..image.len() {
            if used[y] || sig_b[y] != sig_a[x] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&z| {
                leq_a(x, z) == leq_b(y, image[z]) && leq_a(z, x) == leq_b(image[z], y)
            });
            if !consistent {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if assign(pos + 1, order, sig_a, sig_b, leq_a, leq_b, image, used) {
                return true;
            }
            image[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    if assign(0, &order, &sig_a, &sig_b, &leq_a, &leq_b, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

pub fn posets_isomorphic(a: &PointedPoset, b: &PointedPoset) -> bool {
    order_isomorphism(a.len(), |x, y| a.leq(x, y), b.len(), |x, y| b.leq(x, y)).is_some()
}

/// Lattice isomorphism coincides with order isomorphism on finite lattices.
pub fn lattices_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    order_isomorphism(a.len(), |x, y| a.leq(x, y), b.len(), |x, y| b.leq(x, y)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FiniteLattice;

    #[test]
    fn cube_is_isomorphic_to_a_product_of_chains() {
        let c2 = FiniteLattice::chain(2);
        let cube = FiniteLattice::product(&FiniteLattice::product(&c2, &c2), &c2);
        assert!(lattices_isomorphic(&cube, &FiniteLattice::boolean(3)));
    }

    #[test]
    fn m3_and_n5_are_not_isomorphic() {
        assert!(!lattices_isomorphic(&FiniteLattice::m3(), &FiniteLattice::n5()));
        assert!(!lattices_isomorphic(
            &FiniteLattice::m3(),
            &FiniteLattice::boolean(2)
        ));
    }

    #[test]
    fn the_found_map_preserves_order() {
        let a = FiniteLattice::divisor_lattice(12);
        let b = FiniteLattice::product(&FiniteLattice::chain(3), &FiniteLattice::chain(2));
        let f = order_isomorphism(a.len(), |x, y| a.leq(x, y), b.len(), |x, y| b.leq(x, y))
            .expect("divisors of 12 form a 3×2 grid");
        for x in 0..a.len() {
            for y in 0..a.len() {
                assert_eq!(a.leq(x, y), b.leq(f[x], f[y]));
            }
        }
    }
}
