//! Noncommutative polynomials in a central variable `t` over the rational
//! quaternions.
//!
//! A polynomial is a coefficient vector `p₀ + p₁t + ⋯ + p_k t^k`; since `t`
//! is central the coefficients may be kept on the left of the powers, but
//! coefficient order inside products matters. The conventions used
//! throughout:
//!
//! - products preserve factor order: `(pq)_k = Σ_{i+j=k} p_i · q_j`;
//! - right evaluation: `p(α) = Σ p_i α^i`, with each power multiplying its
//!   coefficient on the right. `α` is a zero of `p` iff `t − α` right-divides
//!   `p`;
//! - right division: for monic `d`, `p = s·d + r` with `deg r < deg d`, and
//!   both `s` and `r` are unique;
//! - monicization always multiplies by the inverse of the leading coefficient
//!   on the *left*, which preserves right divisors.
//!
//! `gcrd` is the greatest common right divisor (the monic generator of the
//! left ideal `R[t]p + R[t]q`), computed by the Euclidean algorithm on right
//! remainders. `lclm` is the least common left multiple (the monic generator
//! of `R[t]p ∩ R[t]q`); the general case is found by solving the bounded
//! degree cofactor equation `u·p = v·q` as an exact linear system over the
//! division ring. When a linear factor is adjoined one at a time,
//! [`NCPoly::lclm_linear`] uses the closed form
//! `lclm(p, t−α) = (t − cαc⁻¹)·p` with `c = p(α)`, which is what
//! [`wedderburn`] folds to build the minimal monic polynomial vanishing on a
//! finite set.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::Quaternion;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// A divisor (or an `lclm` argument) was required to be monic.
    NotMonic,
    /// Division by the zero polynomial.
    ZeroDivisor,
    /// `gcrd(0, 0)` is undefined.
    BothZero,
    /// The cofactor linear system was inconsistent. Unreachable for valid
    /// inputs; reported instead of silently producing a wrong multiple.
    CofactorSolveFailed,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NotMonic => write!(f, "polynomial must be monic"),
            PolyError::ZeroDivisor => write!(f, "division by the zero polynomial"),
            PolyError::BothZero => write!(f, "gcrd of two zero polynomials"),
            PolyError::CofactorSolveFailed => write!(f, "cofactor system had no solution"),
        }
    }
}

impl core::error::Error for PolyError {}

/// Noncommutative polynomial; `coeffs[i]` is the coefficient of `t^i`.
///
/// Invariant: the last stored coefficient is nonzero, and the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NCPoly {
    coeffs: Vec<Quaternion>,
}

impl NCPoly {
    pub fn from_coeffs(mut coeffs: Vec<Quaternion>) -> Self {
        while coeffs.last().is_some_and(Quaternion::is_zero) {
            coeffs.pop();
        }
        NCPoly { coeffs }
    }

    pub fn zero() -> Self {
        NCPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        NCPoly::constant(Quaternion::one())
    }

    pub fn constant(c: Quaternion) -> Self {
        NCPoly::from_coeffs(vec![c])
    }

    /// The monic linear polynomial `t − α`.
    pub fn t_minus(alpha: &Quaternion) -> Self {
        NCPoly::from_coeffs(vec![-alpha, Quaternion::one()])
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Quaternion {
        self.coeffs.get(k).cloned().unwrap_or_else(Quaternion::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Quaternion::is_one)
    }

    pub fn leading(&self) -> Option<&Quaternion> {
        self.coeffs.last()
    }

    /// Left-multiplies by the inverse of the leading coefficient; `None` for
    /// the zero polynomial. Left scaling preserves right divisors.
    pub fn monicized(&self) -> Option<NCPoly> {
        let lead = self.leading()?;
        if lead.is_one() {
            return Some(self.clone());
        }
        let inv = lead.inv().expect("leading coefficient is nonzero");
        Some(self.scale_left(&inv))
    }

    /// The polynomial `c · p` (every coefficient multiplied by `c` on the left).
    pub fn scale_left(&self, c: &Quaternion) -> NCPoly {
        NCPoly::from_coeffs(self.coeffs.iter().map(|p| c * p).collect())
    }

    /// Right evaluation `p(α) = Σ p_i α^i`, by Horner's scheme with the
    /// variable fed in on the right of the accumulator.
    pub fn eval_right(&self, alpha: &Quaternion) -> Quaternion {
        let mut acc = Quaternion::zero();
        for p in self.coeffs.iter().rev() {
            acc = &(&acc * alpha) + p;
        }
        acc
    }

    /// Euclidean right division by a monic divisor: `self = q·d + r` with
    /// `deg r < deg d`. Quotient and remainder are unique.
    pub fn right_divide(&self, d: &NCPoly) -> Result<(NCPoly, NCPoly), PolyError> {
        if d.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if !d.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let dd = d.degree().expect("divisor is nonzero");
        let pd = match self.degree() {
            Some(pd) if pd >= dd => pd,
            _ => return Ok((NCPoly::zero(), self.clone())),
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Quaternion::zero(); pd - dd + 1];
        for k in (dd..=pd).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[k - dd + i] = &rem[k - dd + i] - &(&c * dc);
            }
            rem[k] = Quaternion::zero();
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((NCPoly::from_coeffs(quot), NCPoly::from_coeffs(rem)))
    }

    /// Whether `self` (monic) right-divides `p`, i.e. `p = s·self` exactly.
    pub fn right_divides(&self, p: &NCPoly) -> Result<bool, PolyError> {
        let (_, r) = p.right_divide(self)?;
        Ok(r.is_zero())
    }

    /// Greatest common right divisor: the monic generator of the left ideal
    /// sum, by the Euclidean algorithm with each remainder monicized.
    pub fn gcrd(&self, other: &NCPoly) -> Result<NCPoly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let bm = b.monicized().expect("nonzero");
            let (_, r) = a.right_divide(&bm)?;
            a = bm;
            b = r;
        }
        Ok(a.monicized().expect("not both zero"))
    }

    /// Least common left multiple of two monic polynomials: the monic
    /// polynomial of degree `deg p + deg q − deg gcrd(p, q)` right-divisible
    /// by both.
    pub fn lclm(&self, other: &NCPoly) -> Result<NCPoly, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if !self.is_monic() || !other.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let g = self.gcrd(other)?;
        let dp = self.degree().expect("nonzero");
        let dq = other.degree().expect("nonzero");
        let dg = g.degree().expect("gcrd is nonzero");
        if dq == dg {
            // q = g right-divides p
            return Ok(self.clone());
        }
        if dp == dg {
            return Ok(other.clone());
        }
        let h = solve_cofactor_system(self, other, dq - dg, dp - dg)?;
        debug_assert!(h.is_monic());
        debug_assert!(self.right_divides(&h) == Ok(true));
        debug_assert!(other.right_divides(&h) == Ok(true));
        Ok(h)
    }

    /// Least common left multiple of a monic `p` with the linear `t − α`:
    /// `p` itself when `p(α) = 0`, otherwise `(t − cαc⁻¹)·p` with `c = p(α)`.
    pub fn lclm_linear(&self, alpha: &Quaternion) -> Result<NCPoly, PolyError> {
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let c = self.eval_right(alpha);
        if c.is_zero() {
            return Ok(self.clone());
        }
        let xi = alpha.conjugate_by(&c).expect("c is nonzero");
        Ok(&NCPoly::t_minus(&xi) * self)
    }
}

/// The Wedderburn polynomial `f_S`: the minimal monic polynomial vanishing on
/// every element of `s`, built by folding [`NCPoly::lclm_linear`]. Elements
/// already annihilated mid-fold are skipped, so repeated or coincident
/// entries simply lower the degree, and the result does not depend on the
/// fold order.
pub fn wedderburn(s: &[Quaternion]) -> NCPoly {
    let mut f = NCPoly::one();
    for alpha in s {
        f = f.lclm_linear(alpha).expect("fold keeps f monic");
    }
    f
}

/// Solves `u·p = v·q` with `deg u = du`, `deg v = dv`, `u`, `v` monic, and
/// returns the common value `u·p`, the least common left multiple.
///
/// Writing the unknown coefficients on the left, every equation has the form
/// `Σ_r x_r · m_r = rhs`; Gaussian elimination works over a division ring as
/// long as every row scaling multiplies on the right.
fn solve_cofactor_system(
    p: &NCPoly,
    q: &NCPoly,
    du: usize,
    dv: usize,
) -> Result<NCPoly, PolyError> {
    let m = p.degree().expect("nonzero") + du;
    let unknowns = du + dv; // u_0..u_{du−1}, v_0..v_{dv−1}; leading coefficients are 1
    let mut mat: Vec<Vec<Quaternion>> = Vec::with_capacity(m);
    let mut rhs: Vec<Quaternion> = Vec::with_capacity(m);
    for k in 0..m {
        let mut row = Vec::with_capacity(unknowns);
        for i in 0..du {
            row.push(if k >= i { p.coeff(k - i) } else { Quaternion::zero() });
        }
        for j in 0..dv {
            row.push(if k >= j { -&q.coeff(k - j) } else { Quaternion::zero() });
        }
        mat.push(row);
        let lead_p = if k >= du { p.coeff(k - du) } else { Quaternion::zero() };
        let lead_q = if k >= dv { q.coeff(k - dv) } else { Quaternion::zero() };
        rhs.push(&lead_q - &lead_p);
    }

    // Reduced row echelon form, pivoting column by column.
    let mut pivot_row_of: Vec<Option<usize>> = vec![None; unknowns];
    let mut rank = 0;
    for col in 0..unknowns {
        let Some(pivot) = (rank..m).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        rhs.swap(rank, pivot);
        let scale = mat[rank][col].inv().expect("pivot is nonzero");
        for entry in mat[rank].iter_mut() {
            *entry = &*entry * &scale;
        }
        rhs[rank] = &rhs[rank] * &scale;
        for r in 0..m {
            if r == rank || mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].clone();
            for s in 0..unknowns {
                let delta = &mat[rank][s] * &factor;
                mat[r][s] = &mat[r][s] - &delta;
            }
            let delta = &rhs[rank] * &factor;
            rhs[r] = &rhs[r] - &delta;
        }
        pivot_row_of[col] = Some(rank);
        rank += 1;
    }
    let consistent = (rank..m).all(|r| rhs[r].is_zero());
    if !consistent || pivot_row_of.iter().any(Option::is_none) {
        return Err(PolyError::CofactorSolveFailed);
    }

    let mut u = Vec::with_capacity(du + 1);
    for col in 0..du {
        u.push(rhs[pivot_row_of[col].expect("checked")].clone());
    }
    u.push(Quaternion::one());
    let h = &NCPoly::from_coeffs(u) * p;
    if !h.is_monic() {
        return Err(PolyError::CofactorSolveFailed);
    }
    Ok(h)
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        NCPoly::from_coeffs(coeffs)
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        NCPoly::from_coeffs(coeffs)
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        if self.is_zero() || rhs.is_zero() {
            return NCPoly::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut coeffs = vec![Quaternion::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        NCPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: NCPoly) -> NCPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: &NCPoly) -> NCPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<NCPoly> for &NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: NCPoly) -> NCPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let needs_parens = !c.is_central();
            if k == 0 {
                if needs_parens {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
                continue;
            }
            if c.is_one() {
                // bare power
            } else if needs_parens {
                write!(f, "({c})")?;
            } else {
                write!(f, "{c}")?;
            }
            if k == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
