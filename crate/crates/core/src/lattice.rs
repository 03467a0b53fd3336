//! Integer lattices attached to θ: Hermite and Smith normal forms, the fixed
//! lattice P^θ, the quotient P^θ/(1+θ)P, and the parity solution set E.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, RVec, Rational};
use crate::rootsys::RootSystem;
use crate::subsystems::SuperorthogonalSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("matrix has the wrong shape")]
    DimensionMismatch,
    #[error("θ does not act integrally on the lattice")]
    NotIntegral,
    #[error("θ is not an involution on the lattice")]
    NotInvolution,
    #[error("pairing with a coroot is not an integer")]
    NonIntegralPairing,
    #[error("P^θ/(1+θ)P is not an elementary abelian 2-group")]
    NotElementaryTwoGroup,
    #[error("superorthogonal set too large for the parity solver ({0} > 64)")]
    TooManyRoots(usize),
}

/// Which lattice plays the role of P.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LatticeMode {
    /// Weight lattice, in fundamental-weight coordinates.
    #[default]
    Weight,
    /// Root lattice, in simple-root coordinates.
    Root,
}

impl LatticeMode {
    pub fn as_str(self) -> &'static str {
        match self {
            LatticeMode::Weight => "weight",
            LatticeMode::Root => "root",
        }
    }
}

impl core::str::FromStr for LatticeMode {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "weight" => Ok(LatticeMode::Weight),
            "root" => Ok(LatticeMode::Root),
            _ => Err(()),
        }
    }
}

pub type BigMatrix = Vec<Vec<BigInt>>;

pub fn to_big(m: &[Vec<i64>]) -> BigMatrix {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn identity(n: usize) -> BigMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn big_mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> BigMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn row_axpy(m: &mut [Vec<BigInt>], dst: usize, q: &BigInt, src: usize) {
    // row[dst] -= q * row[src]
    let s = m[src].clone();
    for (d, x) in m[dst].iter_mut().zip(&s) {
        *d -= q * x;
    }
}

fn col_axpy(m: &mut [Vec<BigInt>], dst: usize, q: &BigInt, src: usize) {
    for row in m.iter_mut() {
        let x = row[src].clone();
        row[dst] -= q * x;
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U·M = H`, `U`
/// unimodular, pivots positive and entries above a pivot reduced into
/// `[0, pivot)`. Zero rows come last.
pub fn hermite_normal_form(m: &[Vec<BigInt>]) -> (BigMatrix, BigMatrix) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut h = m.to_vec();
    let mut u = identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&a, &b| h[a][c].abs().cmp(&h[b][c].abs()).then(a.cmp(&b)));
            let Some(p) = pivot else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                row_axpy(&mut h, i, &q, r);
                row_axpy(&mut u, i, &q, r);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                row_axpy(&mut h, i, &q, r);
                row_axpy(&mut u, i, &q, r);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(S, U, V)` with `S = U·M·V` diagonal,
/// nonnegative, each diagonal entry dividing the next.
pub fn smith_normal_form(m: &[Vec<BigInt>]) -> (BigMatrix, BigMatrix, BigMatrix) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut s = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if s[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { return (s, u, v) };
            s.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut s, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if !s[i][t].is_zero() {
                    let q = s[i][t].div_floor(&s[t][t]);
                    row_axpy(&mut s, i, &q, t);
                    row_axpy(&mut u, i, &q, t);
                    clean &= s[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !s[t][j].is_zero() {
                    let q = s[t][j].div_floor(&s[t][t]);
                    col_axpy(&mut s, j, &q, t);
                    col_axpy(&mut v, j, &q, t);
                    clean &= s[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s[i][j].is_multiple_of(&s[t][t])));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut s, t, &minus_one, i);
                    row_axpy(&mut u, t, &minus_one, i);
                }
                None => break,
            }
        }
        if s[t][t].is_negative() {
            for x in s[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -&*x;
            }
        }
    }
    (s, u, v)
}

/// Diagonal entries of the Smith form, including zeros up to `min(rows, cols)`.
pub fn invariant_factors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let (s, _, _) = smith_normal_form(m);
    let k = s.len().min(s.first().map_or(0, |r| r.len()));
    (0..k).map(|i| s[i][i].clone()).collect()
}

/// θ as an integer matrix acting on column vectors of lattice coordinates.
/// `theta_rows[i]` is θ(α_i) in simple-root coordinates.
pub fn theta_on_lattice(rs: &RootSystem, theta_rows: &[Vec<i64>], mode: LatticeMode) -> Result<Vec<Vec<i64>>, LatticeError> {
    let l = rs.rank();
    if theta_rows.len() != l || theta_rows.iter().any(|r| r.len() != l) {
        return Err(LatticeError::DimensionMismatch);
    }
    let t: Vec<Vec<i64>> = arith::transpose(theta_rows);
    match mode {
        LatticeMode::Root => Ok(t),
        LatticeMode::Weight => {
            let c = rs.fundamental_weight_basis();
            let cinv = arith::inverse(&c).expect("Cartan matrix is invertible");
            let tr: Vec<RVec> = t.iter().map(|r| arith::to_rvec(r)).collect();
            let m = arith::mat_mul(&arith::mat_mul(&c, &tr), &cinv);
            m.iter().map(|r| arith::as_integral(r).ok_or(LatticeError::NotIntegral)).collect()
        }
    }
}

/// Converts lattice coordinates to simple-root coordinates.
pub fn to_root_coords(rs: &RootSystem, mode: LatticeMode, v: &[i64]) -> RVec {
    let r = arith::to_rvec(v);
    match mode {
        LatticeMode::Root => r,
        LatticeMode::Weight => rs.from_weight_coords(&r),
    }
}

/// A sublattice of ℤ^n given by a basis (rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    pub ambient_rank: usize,
    pub basis: Vec<Vec<i64>>,
}

impl IntegerLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of `v` in the basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        let b: Vec<RVec> = self.basis.iter().map(|r| arith::to_rvec(r)).collect();
        let c = arith::coordinates_in(&b, &arith::to_rvec(v))?;
        arith::as_integral(&c)
    }

    /// Saturated in ℤ^n: every invariant factor of the basis matrix is 1.
    pub fn is_saturated(&self) -> bool {
        invariant_factors(&to_big(&self.basis)).iter().all(|d| d.is_one())
    }
}

fn check_involution(m: &[Vec<i64>]) -> Result<(), LatticeError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(LatticeError::DimensionMismatch);
    }
    for i in 0..n {
        for j in 0..n {
            let x: i64 = (0..n).map(|k| m[i][k] * m[k][j]).sum();
            if x != (i == j) as i64 {
                return Err(LatticeError::NotInvolution);
            }
        }
    }
    Ok(())
}

fn big_to_i64(rows: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("lattice entries fit in i64")).collect())
        .collect()
}

/// `ker(θ − 1) ∩ ℤ^n`, as a saturated basis taken from the HNF transform of
/// `(θ − 1)^T`.
pub fn fixed_lattice(theta: &[Vec<i64>]) -> Result<IntegerLattice, LatticeError> {
    check_involution(theta)?;
    let n = theta.len();
    let kt: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| theta[j][i] - (i == j) as i64).collect()).collect();
    let (h, u) = hermite_normal_form(&to_big(&kt));
    let basis: Vec<Vec<BigInt>> = (0..n).filter(|&i| h[i].iter().all(Zero::is_zero)).map(|i| u[i].clone()).collect();
    Ok(IntegerLattice { ambient_rank: n, basis: big_to_i64(&basis) })
}

/// The r with `P^θ/(1+θ)P ≅ (ℤ/2)^r`.
pub fn torsion_two_rank(theta: &[Vec<i64>]) -> Result<usize, LatticeError> {
    let fixed = fixed_lattice(theta)?;
    let n = theta.len();
    let k = fixed.rank();
    if k == 0 {
        return Ok(0);
    }
    let mut images = Vec::with_capacity(n);
    for j in 0..n {
        let v: Vec<i64> = (0..n).map(|i| theta[i][j] + (i == j) as i64).collect();
        images.push(fixed.coordinates(&v).ok_or(LatticeError::NotIntegral)?);
    }
    let factors = invariant_factors(&to_big(&images));
    if factors.len() < k || factors.iter().any(|d| !d.is_one() && *d != BigInt::from(2)) {
        return Err(LatticeError::NotElementaryTwoGroup);
    }
    Ok(factors.iter().filter(|d| **d == BigInt::from(2)).count())
}

/// A subspace of GF(2)^m, stored as a basis of bitmasks (bit i = ε_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonSet {
    pub m: usize,
    pub basis: Vec<u64>,
}

impl EpsilonSet {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All 2^dim members, in the order of their coefficient vectors.
    pub fn members(&self) -> Vec<u64> {
        (0u64..1 << self.dim())
            .map(|c| {
                self.basis
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| c >> k & 1 == 1)
                    .fold(0, |acc, (_, b)| acc ^ b)
            })
            .collect()
    }

    pub fn contains(&self, eps: u64) -> bool {
        let mut rows = self.basis.clone();
        rows.push(eps);
        gf2_rank(&rows) == self.dim()
    }

    pub fn to_bits(&self, eps: u64) -> Vec<bool> {
        (0..self.m).map(|i| eps >> i & 1 == 1).collect()
    }
}

pub fn gf2_rank(rows: &[u64]) -> usize {
    gf2_basis(rows).len()
}

/// Reduced echelon basis of the span of `rows`.
pub fn gf2_basis(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut x = r;
        for &b in &basis {
            let top = 63 - b.leading_zeros();
            if x >> top & 1 == 1 {
                x ^= b;
            }
        }
        if x != 0 {
            let top = 63 - x.leading_zeros();
            for b in basis.iter_mut() {
                if *b >> top & 1 == 1 {
                    *b ^= x;
                }
            }
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Solutions ε ∈ GF(2)^m of `popcount(ε & e) even` for every equation `e`.
pub fn gf2_nullspace(m: usize, equations: &[u64]) -> Vec<u64> {
    let rows = gf2_basis(equations);
    let pivots: Vec<u32> = rows.iter().map(|r| 63 - r.leading_zeros()).collect();
    let mut out = Vec::new();
    for free in 0..m as u32 {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = 1u64 << free;
        for (r, &p) in rows.iter().zip(&pivots) {
            if r >> free & 1 == 1 {
                v |= 1 << p;
            }
        }
        out.push(v);
    }
    out
}

/// For each μ (lattice coordinates), the mask of `i` with `<μ, α_i^∨>` odd.
pub fn parity_masks(rs: &RootSystem, b: &SuperorthogonalSet, mus: &[Vec<i64>], mode: LatticeMode) -> Result<Vec<u64>, LatticeError> {
    if b.len() > 64 {
        return Err(LatticeError::TooManyRoots(b.len()));
    }
    mus.iter()
        .map(|mu| {
            if mu.len() != rs.rank() {
                return Err(LatticeError::DimensionMismatch);
            }
            let r = to_root_coords(rs, mode, mu);
            let mut mask = 0u64;
            for (i, &a) in b.roots.iter().enumerate() {
                let p: Rational = rs.pairing(&r, a);
                if !p.is_integer() {
                    return Err(LatticeError::NonIntegralPairing);
                }
                if p.to_integer().is_odd() {
                    mask |= 1 << i;
                }
            }
            Ok(mask)
        })
        .collect()
}

/// `E = {ε : Σ ε_i <μ, α_i^∨> ≡ 0 mod 2 for all μ ∈ P^θ}`, from a basis of P^θ.
pub fn epsilon_set(rs: &RootSystem, b: &SuperorthogonalSet, p_theta: &IntegerLattice, mode: LatticeMode) -> Result<EpsilonSet, LatticeError> {
    let eqs = parity_masks(rs, b, &p_theta.basis, mode)?;
    Ok(EpsilonSet { m: b.len(), basis: gf2_nullspace(b.len(), &eqs) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(m: &[&[i64]]) -> BigMatrix {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn hnf_examples() {
        let id = big(&[&[1, 0], &[0, 1]]);
        assert_eq!(hermite_normal_form(&id), (id.clone(), id.clone()));
        let m = big(&[&[2, 4], &[6, 8]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(big_mat_mul(&u, &m), h);
        assert!(h[1][0].is_zero());
        assert!(h[0][1] >= BigInt::zero() && h[0][1] < h[1][1]);
        let det = &u[0][0] * &u[1][1] - &u[0][1] * &u[1][0];
        assert_eq!(det.abs(), BigInt::one());
        let z = big(&[&[0, 0], &[0, 0]]);
        assert_eq!(hermite_normal_form(&z), (z.clone(), id));
    }

    #[test]
    fn snf_examples() {
        assert_eq!(invariant_factors(&big(&[&[2, 0], &[0, 3]])), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(invariant_factors(&big(&[&[2, 0], &[0, 2]])), vec![BigInt::from(2), BigInt::from(2)]);
        let m = big(&[&[3, 1, 4, 1], &[5, 9, 2, 6], &[5, 3, 5, 8], &[9, 7, 9, 3]]);
        let (s, u, v) = smith_normal_form(&m);
        assert_eq!(big_mat_mul(&big_mat_mul(&u, &m), &v), s);
        let prod: BigInt = (0..4).map(|i| s[i][i].clone()).product();
        // determinant by cofactor expansion over rationals
        let r: Vec<RVec> = [[3, 1, 4, 1], [5, 9, 2, 6], [5, 3, 5, 8], [9, 7, 9, 3]]
            .iter()
            .map(|row| arith::to_rvec(row))
            .collect();
        let det = det_rational(&r);
        assert_eq!(Rational::from(prod.to_i64().unwrap()), det.abs());
        for i in 0..3 {
            assert!(s[i + 1][i + 1].is_multiple_of(&s[i][i]));
        }
    }

    fn det_rational(m: &[RVec]) -> Rational {
        let mut a = m.to_vec();
        let n = a.len();
        let mut det = Rational::from(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return Rational::zero() };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c];
            for r in c + 1..n {
                let f = a[r][c] / a[c][c];
                for k in c..n {
                    let x = a[c][k];
                    a[r][k] -= f * x;
                }
            }
        }
        det
    }

    #[test]
    fn fixed_lattice_examples() {
        let id = vec![vec![1, 0], vec![0, 1]];
        let f = fixed_lattice(&id).unwrap();
        assert_eq!(f.rank(), 2);
        assert!(f.is_saturated());
        let neg = vec![vec![-1, 0], vec![0, -1]];
        assert_eq!(fixed_lattice(&neg).unwrap().rank(), 0);
        assert_eq!(torsion_two_rank(&neg).unwrap(), 0);
        let swap = vec![vec![0, 1], vec![1, 0]];
        let f = fixed_lattice(&swap).unwrap();
        assert_eq!(f.rank(), 1);
        assert!(f.basis[0] == vec![1, 1] || f.basis[0] == vec![-1, -1]);
        assert!(fixed_lattice(&[vec![1, 1], vec![0, 1]]).is_err());
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(torsion_two_rank(&[vec![1]]).unwrap(), 1);
        for n in 1..5 {
            let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
            assert_eq!(torsion_two_rank(&id).unwrap(), n);
        }
        // node swap on ℤ²: P^θ = ℤ(1,1) = (1+θ)ℤ², r = 0
        assert_eq!(torsion_two_rank(&[vec![0, 1], vec![1, 0]]).unwrap(), 0);
        let brute = brute_two_rank(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(brute, 0);
        // reflection-like θ = diag(1, −1): P^θ = ℤe1, (1+θ)P = 2ℤe1
        assert_eq!(torsion_two_rank(&[vec![1, 0], vec![0, -1]]).unwrap(), 1);
        assert_eq!(brute_two_rank(&[vec![1, 0], vec![0, -1]]), 1);
    }

    /// log2 of the number of cosets of (1+θ)P in P^θ among fixed vectors of a box.
    fn brute_two_rank(theta: &[Vec<i64>]) -> usize {
        let f = fixed_lattice(theta).unwrap();
        let n = theta.len();
        let img = |x: &[i64]| -> Vec<i64> { (0..n).map(|i| x[i] + (0..n).map(|j| theta[i][j] * x[j]).sum::<i64>()).collect() };
        let mut sub = Vec::new();
        let mut fixed = Vec::new();
        let range = -3i64..=3;
        let mut stack = vec![Vec::new()];
        while let Some(v) = stack.pop() {
            if v.len() == n {
                sub.push(img(&v));
                if f.coordinates(&v).is_some() {
                    fixed.push(v);
                }
                continue;
            }
            for x in range.clone() {
                let mut w = v.clone();
                w.push(x);
                stack.push(w);
            }
        }
        let b: Vec<RVec> = f.basis.iter().map(|r| arith::to_rvec(r)).collect();
        let coords = |v: &[i64]| arith::as_integral(&arith::coordinates_in(&b, &arith::to_rvec(v)).unwrap()).unwrap();
        // cosets of sub inside fixed, reduced mod 2 in P^θ coordinates
        let subm: Vec<u64> = sub.iter().map(|v| mask2(&coords(v))).collect();
        let fixm: Vec<u64> = fixed.iter().map(|v| mask2(&coords(v))).collect();
        gf2_rank(&fixm) - gf2_rank(&subm)
    }

    fn mask2(v: &[i64]) -> u64 {
        v.iter().enumerate().filter(|(_, x)| x.rem_euclid(2) == 1).fold(0, |m, (i, _)| m | 1 << i)
    }

    #[test]
    fn weight_lattice_theta() {
        let a2 = RootSystem::new("A2".parse().unwrap());
        let t = theta_on_lattice(&a2, &[vec![0, 1], vec![1, 0]], LatticeMode::Weight).unwrap();
        assert_eq!(t, vec![vec![0, 1], vec![1, 0]]);
        let f = fixed_lattice(&t).unwrap();
        assert_eq!(f.rank(), 1);
        let id = theta_on_lattice(&a2, &[vec![1, 0], vec![0, 1]], LatticeMode::Weight).unwrap();
        assert_eq!(id, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn epsilon_sl2() {
        let a1 = RootSystem::new("A1".parse().unwrap());
        let b = SuperorthogonalSet { roots: vec![0] };
        let t = theta_on_lattice(&a1, &[vec![1]], LatticeMode::Weight).unwrap();
        let p = fixed_lattice(&t).unwrap();
        let e = epsilon_set(&a1, &b, &p, LatticeMode::Weight).unwrap();
        assert_eq!(e.members(), vec![0]);
        // root lattice: <α, α^∨> = 2 is even
        let p = fixed_lattice(&theta_on_lattice(&a1, &[vec![1]], LatticeMode::Root).unwrap()).unwrap();
        let e = epsilon_set(&a1, &b, &p, LatticeMode::Root).unwrap();
        assert_eq!(e.members(), vec![0, 1]);
        let empty = epsilon_set(&a1, &SuperorthogonalSet::default(), &p, LatticeMode::Root).unwrap();
        assert_eq!(empty.members(), vec![0]);
    }

    #[test]
    fn nullspace_matches_enumeration() {
        let eqs = [0b1011u64, 0b0110, 0b1101];
        let ns = gf2_nullspace(4, &eqs);
        let e = EpsilonSet { m: 4, basis: ns };
        let mut members = e.members();
        members.sort_unstable();
        let brute: Vec<u64> = (0..16u64).filter(|x| eqs.iter().all(|q| (x & q).count_ones() % 2 == 0)).collect();
        assert_eq!(members, brute);
    }
}
