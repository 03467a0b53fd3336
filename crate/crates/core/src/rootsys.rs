//! Root systems of the simple types A–G in simple-root coordinates.
//!
//! Roots are stored as integer vectors in the basis of simple roots. The
//! symmetric form is the Cartan matrix symmetrized with the smallest
//! integral diagonal whose minimum is 2 (so every root of a simply-laced
//! type has squared length 2, and all form values are integers).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::arith::{self, RVec, Rational};
use crate::weylperm::Perm;

/// Index into [`RootSystem::roots`].
pub type RootIndex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G];

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Series::ALL.into_iter().find(|s| s.letter() == c.to_ascii_uppercase())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSystemError {
    #[error("invalid Cartan type {series:?}{rank}")]
    InvalidType { series: Series, rank: usize },
    #[error("cannot parse Cartan type {0:?}")]
    Unparsable(String),
    #[error("linear map does not preserve the root set")]
    NotRootPreserving,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A simple Cartan type such as `E8` or `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match series {
            Series::A | Series::B | Series::C => rank >= 1,
            Series::D => rank >= 2,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(RootSystemError::InvalidType { series, rank })
        }
    }

    /// All non-redundant simple types of rank at most `max_rank`
    /// (A_n n≥1, B_n n≥2, C_n n≥3, D_n n≥4, E6–E8, F4, G2).
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            let candidates = [
                (Series::A, 1),
                (Series::B, 2),
                (Series::C, 3),
                (Series::D, 4),
                (Series::E, 6),
                (Series::F, 4),
                (Series::G, 2),
            ];
            for (series, min) in candidates {
                if rank >= min {
                    if let Ok(t) = CartanType::new(series, rank) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    /// Order of the Weyl group from the classical formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// Cartan matrix in Bourbaki numbering, `a[i][j] = <α_i, α_j^∨>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = alloc::vec![alloc::vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Series::D => {
                for i in 1..n.saturating_sub(1) {
                    link(i - 1, i);
                }
                if n >= 3 {
                    link(n - 3, n - 1);
                }
            }
            Series::E => {
                link(0, 2);
                link(2, 3);
                link(1, 3);
                for i in 4..n {
                    link(i - 1, i);
                }
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Series::G => link(0, 1),
        }
        match self.series {
            // α_n short
            Series::B if n >= 2 => a[n - 2][n - 1] = -2,
            // α_n long
            Series::C if n >= 2 => a[n - 1][n - 2] = -2,
            Series::F => a[1][2] = -2,
            Series::G => a[1][0] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootSystemError;

    /// Accepts `G2`, `G_2`, `g2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootSystemError::Unparsable(s.into());
        let mut chars = s.trim().chars();
        let series = chars.next().and_then(Series::from_letter).ok_or_else(bad)?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest.parse::<usize>().map_err(|_| bad())?;
        CartanType::new(series, rank)
    }
}

/// An immutable table of roots with the symmetric form and precomputed
/// coroot pairings and reflections.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    npos: usize,
    lookup: BTreeMap<Vec<i64>, RootIndex>,
    norms: Vec<i64>,
    /// `pairings[i * n + j] = <root_i, root_j^∨>`.
    pairings: Vec<i32>,
    negation: Vec<u32>,
    reflections: Vec<Perm>,
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Self {
        let cartan = ctype.cartan_matrix();
        let l = ctype.rank;
        let norms_simple = symmetrizer(&cartan);
        // (α_i, α_j) = a_ij (α_j, α_j) / 2
        let form: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| cartan[i][j] * norms_simple[j] / 2).collect())
            .collect();

        // Orbit of the simple roots under the simple reflections.
        let mut found: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..l {
            let mut e = alloc::vec![0i64; l];
            e[i] = 1;
            if found.insert(e.clone(), ()).is_none() {
                queue.push(e);
            }
        }
        while let Some(beta) = queue.pop() {
            for i in 0..l {
                let c: i64 = (0..l).map(|k| beta[k] * cartan[k][i]).sum();
                if c == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= c;
                if found.insert(img.clone(), ()).is_none() {
                    queue.push(img);
                }
            }
        }
        let mut positives: Vec<Vec<i64>> =
            found.into_keys().filter(|r| r.iter().all(|&x| x >= 0)).collect();
        // height ascending, then lexicographically decreasing so α_1..α_l come first
        positives.sort_by(|a, b| {
            let (ha, hb) = (a.iter().sum::<i64>(), b.iter().sum::<i64>());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = positives.len();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));

        let lookup: BTreeMap<Vec<i64>, RootIndex> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let n = roots.len();
        let ip = |a: &[i64], b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..l {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..l {
                    s += a[i] * form[i][j] * b[j];
                }
            }
            s
        };
        let norms: Vec<i64> = roots.iter().map(|r| ip(r, r)).collect();
        let mut pairings = alloc::vec![0i32; n * n];
        for i in 0..n {
            for j in 0..n {
                pairings[i * n + j] = (2 * ip(&roots[i], &roots[j]) / norms[j]) as i32;
            }
        }
        let negation: Vec<u32> = (0..n).map(|i| ((i + npos) % n) as u32).collect();
        let mut rs = RootSystem {
            ctype,
            cartan,
            form,
            roots,
            npos,
            lookup,
            norms,
            pairings,
            negation,
            reflections: Vec::new(),
        };
        rs.reflections = (0..n)
            .map(|a| {
                let images = (0..n)
                    .map(|b| {
                        let c = rs.pairing_index(b, a) as i64;
                        let img: Vec<i64> =
                            rs.roots[b].iter().zip(&rs.roots[a]).map(|(x, y)| x - c * y).collect();
                        rs.lookup[&img] as u32
                    })
                    .collect();
                Perm::from_images(images)
            })
            .collect();
        rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the form on the simple roots.
    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: RootIndex) -> &[i64] {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn is_positive(&self, i: RootIndex) -> bool {
        i < self.npos
    }

    /// Simple roots are stored first: index `i < rank` is `α_{i+1}`.
    pub fn simple_roots(&self) -> core::ops::Range<RootIndex> {
        0..self.rank()
    }

    pub fn index_of(&self, v: &[i64]) -> Option<RootIndex> {
        self.lookup.get(v).copied()
    }

    pub fn index_of_rational(&self, v: &[Rational]) -> Option<RootIndex> {
        arith::as_integral(v).and_then(|v| self.index_of(&v))
    }

    pub fn negate(&self, i: RootIndex) -> RootIndex {
        self.negation[i] as usize
    }

    pub fn negation_perm(&self) -> &[u32] {
        &self.negation
    }

    pub fn norm(&self, i: RootIndex) -> i64 {
        self.norms[i]
    }

    /// `<root_i, root_j^∨>`.
    pub fn pairing_index(&self, i: RootIndex, j: RootIndex) -> i32 {
        self.pairings[i * self.roots.len() + j]
    }

    pub fn inner_roots(&self, i: RootIndex, j: RootIndex) -> i64 {
        self.pairing_index(i, j) as i64 * self.norms[j] / 2
    }

    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let l = self.rank();
        let mut s = Rational::zero();
        for i in 0..l {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..l {
                s += a[i] * b[j] * self.form[i][j];
            }
        }
        s
    }

    pub fn inner_with_root(&self, mu: &[Rational], beta: RootIndex) -> Rational {
        let l = self.rank();
        let r = &self.roots[beta];
        let mut s = Rational::zero();
        for i in 0..l {
            if mu[i].is_zero() {
                continue;
            }
            for j in 0..l {
                s += mu[i] * (self.form[i][j] * r[j]);
            }
        }
        s
    }

    pub fn root_vec(&self, i: RootIndex) -> RVec {
        arith::to_rvec(&self.roots[i])
    }

    /// `<μ, β^∨> = 2(μ, β)/(β, β)`.
    pub fn pairing(&self, mu: &[Rational], beta: RootIndex) -> Rational {
        self.inner_with_root(mu, beta) * 2 / self.norms[beta]
    }

    /// Half the sum of the given roots.
    pub fn weyl_vector(&self, positive_subset: impl IntoIterator<Item = RootIndex>) -> RVec {
        let mut acc = arith::zero_vec(self.rank());
        let half = Rational::new(1, 2);
        for i in positive_subset {
            arith::add_scaled_int(&mut acc, half, &self.roots[i]);
        }
        acc
    }

    /// `s_α(μ) = μ − <μ, α^∨> α`.
    pub fn reflect(&self, alpha: RootIndex, mu: &[Rational]) -> RVec {
        let c = self.pairing(mu, alpha);
        let mut out = mu.to_vec();
        arith::add_scaled_int(&mut out, -c, &self.roots[alpha]);
        out
    }

    /// The reflection `s_α` as a permutation of root indices.
    pub fn reflection(&self, alpha: RootIndex) -> &Perm {
        &self.reflections[alpha]
    }

    /// Permutation induced on the roots by a linear map given as a matrix
    /// acting on column vectors of simple-root coordinates.
    pub fn root_permutation(&self, linear_map: &[RVec]) -> Result<Perm, RootSystemError> {
        let l = self.rank();
        if linear_map.len() != l || linear_map.iter().any(|r| r.len() != l) {
            return Err(RootSystemError::DimensionMismatch { expected: l, got: linear_map.len() });
        }
        let n = self.num_roots();
        let mut images = Vec::with_capacity(n);
        let mut hit = alloc::vec![false; n];
        for i in 0..n {
            let img = arith::mat_vec(linear_map, &self.root_vec(i));
            let j = self.index_of_rational(&img).ok_or(RootSystemError::NotRootPreserving)?;
            if core::mem::replace(&mut hit[j], true) {
                return Err(RootSystemError::NotRootPreserving);
            }
            images.push(j as u32);
        }
        Ok(Perm::from_images(images))
    }

    /// Permutation induced by the integral map sending `α_i` to `images[i]`
    /// (rows are images of simple roots).
    pub fn root_permutation_from_rows(&self, rows: &[Vec<i64>]) -> Result<Perm, RootSystemError> {
        let l = self.rank();
        if rows.len() != l || rows.iter().any(|r| r.len() != l) {
            return Err(RootSystemError::DimensionMismatch { expected: l, got: rows.len() });
        }
        let cols: Vec<RVec> = (0..l).map(|i| (0..l).map(|j| Rational::from(rows[j][i])).collect()).collect();
        self.root_permutation(&cols)
    }

    /// Matrix (acting on column vectors of simple-root coordinates) of the
    /// linear map induced by a root permutation.
    pub fn perm_matrix(&self, perm: &Perm) -> Vec<Vec<i64>> {
        let l = self.rank();
        let cols: Vec<&Vec<i64>> = (0..l).map(|i| &self.roots[perm.image(i)]).collect();
        (0..l).map(|r| (0..l).map(|c| cols[c][r]).collect()).collect()
    }

    /// Applies the linear map induced by `perm` to a rational vector.
    pub fn apply_perm(&self, perm: &Perm, mu: &[Rational]) -> RVec {
        let l = self.rank();
        let mut out = arith::zero_vec(l);
        for (i, &c) in mu.iter().enumerate().take(l) {
            if !c.is_zero() {
                arith::add_scaled_int(&mut out, c, &self.roots[perm.image(i)]);
            }
        }
        out
    }

    /// Checks that `perm` is induced by a form-preserving linear map that
    /// commutes with negation.
    pub fn is_root_automorphism(&self, perm: &Perm) -> bool {
        let n = self.num_roots();
        if perm.degree() != n {
            return false;
        }
        if (0..n).any(|i| perm.image(self.negate(i)) != self.negate(perm.image(i))) {
            return false;
        }
        let l = self.rank();
        for i in 0..l {
            for j in 0..l {
                if self.inner_roots(perm.image(i), perm.image(j)) != self.form[i][j] {
                    return false;
                }
            }
        }
        (0..n).all(|i| {
            let img = self.apply_perm(perm, &self.root_vec(i));
            self.index_of_rational(&img) == Some(perm.image(i))
        })
    }

    /// Simple-root coordinates → fundamental-weight coordinates:
    /// `c_j = <μ, α_j^∨>`.
    pub fn to_weight_coords(&self, mu: &[Rational]) -> RVec {
        let l = self.rank();
        (0..l).map(|j| (0..l).map(|i| mu[i] * self.cartan[i][j]).sum()).collect()
    }

    /// Change-of-basis matrix (rows act on column vectors) from simple-root
    /// coordinates to fundamental-weight coordinates.
    pub fn fundamental_weight_basis(&self) -> Vec<RVec> {
        arith::transpose(&self.cartan)
            .into_iter()
            .map(|r| r.into_iter().map(Rational::from).collect())
            .collect()
    }

    pub fn from_weight_coords(&self, w: &[Rational]) -> RVec {
        let inv = arith::inverse(&self.fundamental_weight_basis()).expect("Cartan matrix is invertible");
        arith::mat_vec(&inv, w)
    }

    /// All permutations of the simple nodes preserving the Cartan matrix.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let l = self.rank();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(l);
        let mut used = alloc::vec![false; l];
        fn extend(
            a: &[Vec<i64>],
            current: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            let k = current.len();
            if k == a.len() {
                out.push(current.clone());
                return;
            }
            for cand in 0..a.len() {
                if used[cand] {
                    continue;
                }
                let consistent = (0..k).all(|p| a[p][k] == a[current[p]][cand] && a[k][p] == a[cand][current[p]]);
                if consistent {
                    used[cand] = true;
                    current.push(cand);
                    extend(a, current, used, out);
                    current.pop();
                    used[cand] = false;
                }
            }
        }
        extend(&self.cartan, &mut current, &mut used, &mut out);
        out
    }

    /// Permutation of roots induced by a diagram automorphism of the simple
    /// nodes.
    pub fn diagram_perm(&self, nodes: &[usize]) -> Result<Perm, RootSystemError> {
        let l = self.rank();
        let rows: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                let mut e = alloc::vec![0; l];
                e[nodes[i]] = 1;
                e
            })
            .collect();
        self.root_permutation_from_rows(&rows)
    }
}

/// Squared lengths of the simple roots making `a_ij d_j` symmetric, scaled so
/// the shortest root in each component has squared length 2.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let l = cartan.len();
    let mut d: Vec<Option<Rational>> = alloc::vec![None; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::from(1));
        let mut comp = alloc::vec![start];
        let mut stack = alloc::vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..l {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    // a_ij d_j = a_ji d_i
                    d[j] = Some(d[i].unwrap() * cartan[j][i] / cartan[i][j]);
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        let min = comp.iter().map(|&i| d[i].unwrap()).min().unwrap();
        for &i in &comp {
            d[i] = Some(d[i].unwrap() / min * 2);
        }
    }
    d.into_iter().map(|x| x.unwrap().to_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, to_rvec};
    use alloc::vec;
    use alloc::string::ToString;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn root_counts() {
        assert_eq!(rs("A2").num_roots(), 6);
        assert_eq!(rs("A2").num_positive(), 3);
        assert_eq!(rs("G2").num_roots(), 12);
        assert_eq!(rs("G2").num_positive(), 6);
        // dim E8 − rank = 248 − 8
        assert_eq!(rs("E8").num_roots(), 240);
        assert_eq!(rs("E8").num_positive(), 120);
        assert_eq!(rs("F4").num_roots(), 48);
        assert_eq!(rs("B3").num_roots(), 18);
        assert_eq!(rs("D4").num_roots(), 24);
        assert_eq!(rs("E6").num_roots(), 72);
        assert_eq!(rs("E7").num_roots(), 126);
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(CartanType::new(Series::E, 5).is_err());
        assert!(CartanType::new(Series::F, 3).is_err());
        assert!(CartanType::new(Series::G, 3).is_err());
        assert!(CartanType::new(Series::D, 1).is_err());
        assert!(CartanType::new(Series::A, 0).is_err());
        assert!("X3".parse::<CartanType>().is_err());
        assert_eq!("e_8".parse::<CartanType>().unwrap().to_string(), "E8");
    }

    #[test]
    fn pairings_match_cartan_entries() {
        let a1 = rs("A1");
        assert_eq!(a1.pairing(&a1.root_vec(0), 0), rat(2));
        let a2 = rs("A2");
        assert_eq!(a2.pairing(&a2.root_vec(0), 1), rat(-1));
        // G2: α_1 short, α_2 long
        let g2 = rs("G2");
        assert!(g2.norm(1) > g2.norm(0));
        assert_eq!(g2.pairing(&g2.root_vec(1), 0), rat(-3));
        for t in CartanType::all_up_to(8) {
            let r = RootSystem::new(t);
            for i in 0..t.rank {
                for j in 0..t.rank {
                    assert_eq!(r.pairing_index(i, j) as i64, r.cartan_matrix()[i][j], "{t} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn simply_laced_roots_have_length_two() {
        for s in ["A5", "D6", "E8"] {
            let r = rs(s);
            assert!((0..r.num_roots()).all(|i| r.norm(i) == 2));
        }
    }

    #[test]
    fn weyl_vector_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_vector([]), vec![rat(0)]);
        assert_eq!(a1.weyl_vector([0]), vec![Rational::new(1, 2)]);
        // The two positive systems {β}, {−β} of the rank-one subsystem {±(α1+α2)}
        // give Weyl vectors exchanged by s_β.
        let a2 = rs("A2");
        let beta = a2.index_of(&[1, 1]).unwrap();
        let plus = a2.weyl_vector([beta]);
        let minus = a2.weyl_vector([a2.negate(beta)]);
        assert_eq!(a2.reflect(beta, &plus), minus);
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.reflect(0, &a2.root_vec(0)), to_rvec(&[-1, 0]));
        assert_eq!(a2.reflect(0, &a2.root_vec(1)), to_rvec(&[1, 1]));
        let b2 = rs("B2");
        let perp = (0..b2.num_roots()).find(|&i| b2.inner_roots(i, 0) == 0).unwrap();
        assert_eq!(b2.reflect(0, &b2.root_vec(perp)), b2.root_vec(perp));
    }

    #[test]
    fn root_permutation_examples() {
        let a2 = rs("A2");
        let id = vec![to_rvec(&[1, 0]), to_rvec(&[0, 1])];
        assert!(a2.root_permutation(&id).unwrap().is_identity());
        let neg = vec![to_rvec(&[-1, 0]), to_rvec(&[0, -1])];
        let p = a2.root_permutation(&neg).unwrap();
        for i in 0..6 {
            assert_eq!(p.image(i), a2.negate(i));
        }
        // s_{α1} on A2: an involution with no fixed root (no root is orthogonal to α1)
        let s1 = vec![to_rvec(&[-1, 1]), to_rvec(&[0, 1])];
        let p = a2.root_permutation(&s1).unwrap();
        assert_eq!(&p, a2.reflection(0));
        assert!(p.compose(&p).is_identity());
        assert_eq!((0..6).filter(|&i| p.image(i) == i).count(), 0);
        // On A3, s_{α1} fixes exactly the roots orthogonal to α1 (±α3).
        let a3 = rs("A3");
        let s = a3.reflection(0);
        let fixed: Vec<_> = (0..a3.num_roots()).filter(|&i| s.image(i) == i).collect();
        let perp: Vec<_> = (0..a3.num_roots()).filter(|&i| a3.inner_roots(i, 0) == 0).collect();
        assert_eq!(fixed, perp);
        assert_eq!(fixed.len(), 2);
        // not root preserving
        let bad = vec![to_rvec(&[2, 0]), to_rvec(&[0, 1])];
        assert_eq!(a2.root_permutation(&bad), Err(RootSystemError::NotRootPreserving));
    }

    #[test]
    fn diagram_automorphism_counts() {
        assert_eq!(rs("A1").diagram_automorphisms().len(), 1);
        assert_eq!(rs("A4").diagram_automorphisms().len(), 2);
        assert_eq!(rs("D4").diagram_automorphisms().len(), 6);
        assert_eq!(rs("D5").diagram_automorphisms().len(), 2);
        assert_eq!(rs("E6").diagram_automorphisms().len(), 2);
        assert_eq!(rs("E7").diagram_automorphisms().len(), 1);
        assert_eq!(rs("B3").diagram_automorphisms().len(), 1);
        assert_eq!(rs("G2").diagram_automorphisms().len(), 1);
    }

    #[test]
    fn weight_coordinates_round_trip() {
        let g2 = rs("G2");
        let mu = to_rvec(&[2, 1]);
        let w = g2.to_weight_coords(&mu);
        assert_eq!(g2.from_weight_coords(&w), mu);
        // fundamental weight ω1 of A1 is α/2
        let a1 = rs("A1");
        assert_eq!(a1.from_weight_coords(&[rat(1)]), vec![Rational::new(1, 2)]);
    }
}
