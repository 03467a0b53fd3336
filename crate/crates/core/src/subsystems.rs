//! Root subsystems: simple systems, irreducible components and their types,
//! the θ-swapped splitting of Φ^c, the dominant positive system of Φ^im, and
//! the superorthogonal set B.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::arith::{self, RVec, Rational};
use crate::involution::RootClassification;
use crate::rootset::RootSet;
use crate::rootsys::{CartanType, RootIndex, RootSystem, Series};
use crate::weylperm::{self, Perm, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubsystemError {
    #[error("positivity vector is orthogonal to root {root:?}")]
    OrthogonalToPositivity { root: Vec<i64> },
    #[error("component Cartan matrix matches no finite type")]
    UnknownType,
    #[error("Φ^c splitting precondition violated: {0}")]
    SplitPrecondition(&'static str),
    #[error("no regular vector found in the θ-fixed part of span(Φ^c)")]
    NoRegularVector,
    #[error("superorthogonal set: member {root:?} is not noncompact imaginary")]
    CompactInB { root: Vec<i64> },
    #[error("superorthogonal set: span contains the extra root {root:?}")]
    NotSuperorthogonal { root: Vec<i64> },
}

/// How the positive half of a subsystem is chosen.
#[derive(Clone, Copy, Debug)]
pub enum Positivity<'a> {
    /// Intersect with the global positive half.
    Inherited,
    /// Members with positive inner product against the vector.
    Vector(&'a [Rational]),
    /// An explicitly given positive half.
    Explicit(&'a RootSet),
}

pub fn positive_half(rs: &RootSystem, members: &RootSet, positivity: Positivity<'_>) -> Result<RootSet, SubsystemError> {
    match positivity {
        Positivity::Inherited => Ok(RootSet::from_predicate(rs.num_roots(), |i| members.contains(i) && rs.is_positive(i))),
        Positivity::Explicit(p) => Ok(p.intersection(members)),
        Positivity::Vector(v) => {
            let mut out = RootSet::new(rs.num_roots());
            for i in members.iter() {
                let d = rs.inner_with_root(v, i);
                if d.is_zero() {
                    return Err(SubsystemError::OrthogonalToPositivity { root: rs.root(i).to_vec() });
                }
                if d.is_positive() {
                    out.insert(i);
                }
            }
            Ok(out)
        }
    }
}

/// Positive members that are not the sum of two positive members, in index
/// order.
pub fn simple_roots_of(rs: &RootSystem, members: &RootSet, positivity: Positivity<'_>) -> Result<Vec<RootIndex>, SubsystemError> {
    let pos = positive_half(rs, members, positivity)?;
    Ok(indecomposables(rs, &pos))
}

fn indecomposables(rs: &RootSystem, pos: &RootSet) -> Vec<RootIndex> {
    let l = rs.rank();
    let list: Vec<usize> = pos.iter().collect();
    let mut diff = alloc::vec![0i64; l];
    list.iter()
        .copied()
        .filter(|&a| {
            !list.iter().any(|&b| {
                for k in 0..l {
                    diff[k] = rs.root(a)[k] - rs.root(b)[k];
                }
                rs.index_of(&diff).is_some_and(|c| pos.contains(c))
            })
        })
        .collect()
}

/// Connected components of the non-orthogonality graph on `members`, each
/// sorted, ordered by smallest index.
pub fn irreducible_components(rs: &RootSystem, members: &RootSet) -> Vec<RootSet> {
    let n = rs.num_roots();
    let mut seen = RootSet::new(n);
    let mut out = Vec::new();
    for start in members.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = RootSet::new(n);
        let mut stack = alloc::vec![start];
        seen.insert(start);
        while let Some(x) = stack.pop() {
            comp.insert(x);
            for y in members.iter() {
                if !seen.contains(y) && rs.inner_roots(x, y) != 0 {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn candidates(rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for s in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
        if let Ok(t) = CartanType::new(s, rank) {
            if s == Series::C && rank < 3 {
                continue;
            }
            out.push(t);
        }
    }
    out
}

fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = map.len();
        if k == a.len() {
            return true;
        }
        for c in 0..b.len() {
            if used[c] || a[k][k] != b[c][c] {
                continue;
            }
            if (0..k).all(|p| a[p][k] == b[map[p]][c] && a[k][p] == b[c][map[p]]) {
                used[c] = true;
                map.push(c);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[c] = false;
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut alloc::vec![false; b.len()])
}

/// Cartan type of an irreducible simple system.
pub fn identify_irreducible(rs: &RootSystem, simple: &[RootIndex]) -> Result<CartanType, SubsystemError> {
    let m: Vec<Vec<i64>> = simple
        .iter()
        .map(|&i| simple.iter().map(|&j| rs.pairing_index(i, j) as i64).collect())
        .collect();
    candidates(simple.len())
        .into_iter()
        .find(|t| isomorphic(&m, &t.cartan_matrix()))
        .ok_or(SubsystemError::UnknownType)
}

/// Types of the irreducible components of a simple system, grouped by the
/// connectivity of the simple roots and ordered by smallest index.
pub fn identify_type(rs: &RootSystem, simple: &[RootIndex]) -> Result<Vec<CartanType>, SubsystemError> {
    simple_components(rs, simple)
        .iter()
        .map(|c| identify_irreducible(rs, c))
        .collect()
}

fn simple_components(rs: &RootSystem, simple: &[RootIndex]) -> Vec<Vec<RootIndex>> {
    let mut assigned = alloc::vec![false; simple.len()];
    let mut out = Vec::new();
    for s in 0..simple.len() {
        if assigned[s] {
            continue;
        }
        assigned[s] = true;
        let mut comp = alloc::vec![s];
        let mut k = 0;
        while k < comp.len() {
            let x = simple[comp[k]];
            for t in 0..simple.len() {
                if !assigned[t] && rs.inner_roots(x, simple[t]) != 0 {
                    assigned[t] = true;
                    comp.push(t);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp.into_iter().map(|t| simple[t]).collect());
    }
    out
}

/// A subsystem of Φ with a chosen positive half.
#[derive(Clone, Debug)]
pub struct Subsystem {
    pub members: RootSet,
    pub positive: RootSet,
    pub simple_roots: Vec<RootIndex>,
    pub components: Vec<(RootSet, CartanType)>,
}

impl Subsystem {
    pub fn new(rs: &RootSystem, members: RootSet, positivity: Positivity<'_>) -> Result<Self, SubsystemError> {
        let positive = positive_half(rs, &members, positivity)?;
        let simple_roots = indecomposables(rs, &positive);
        let mut components = Vec::new();
        for simple in simple_components(rs, &simple_roots) {
            let t = identify_irreducible(rs, &simple)?;
            let comp = RootSet::from_predicate(rs.num_roots(), |i| {
                members.contains(i) && simple.iter().any(|&s| rs.inner_roots(i, s) != 0)
            });
            components.push((comp, t));
        }
        Ok(Subsystem { members, positive, simple_roots, components })
    }

    pub fn types(&self) -> Vec<CartanType> {
        self.components.iter().map(|c| c.1).collect()
    }

    /// Product of the component Weyl group orders.
    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.1.weyl_order()).product()
    }

    pub fn reflections(&self, rs: &RootSystem) -> Vec<Perm> {
        weylperm::reflections(rs, &self.simple_roots)
    }

    pub fn weyl_group(&self, rs: &RootSystem) -> PermGroup {
        PermGroup::generate(rs.num_roots(), &self.reflections(rs))
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }
}

/// `Φ^c = Ψ1 ⊔ Ψ2` with `(Ψ1, Ψ2) = 0` and `θ(Ψ1) = Ψ2`.
#[derive(Clone, Debug)]
pub struct ThetaSplit {
    pub psi1: RootSet,
    pub psi2: RootSet,
    /// Simple roots of Ψ1 for the positivity defined by `v0`.
    pub psi1_simple: Vec<RootIndex>,
    pub v0: RVec,
}

/// Splits a θ-stable subsystem without real or imaginary roots into two
/// orthogonal halves exchanged by θ, using a θ-fixed regular vector.
pub fn split_theta_swapped(rs: &RootSystem, cls: &RootClassification, phi_c: &Subsystem) -> Result<ThetaSplit, SubsystemError> {
    let n = rs.num_roots();
    let members = &phi_c.members;
    if !members.is_disjoint(&cls.real) || !members.is_disjoint(&cls.imaginary) {
        return Err(SubsystemError::SplitPrecondition("Φ^c meets Φ^re or Φ^im"));
    }
    if members.map(cls.theta_perm.images()) != *members {
        return Err(SubsystemError::SplitPrecondition("Φ^c is not θ-stable"));
    }
    if members.is_empty() {
        return Ok(ThetaSplit { psi1: RootSet::new(n), psi2: RootSet::new(n), psi1_simple: Vec::new(), v0: arith::zero_vec(rs.rank()) });
    }
    let theta = &cls.theta_perm;
    let rho_c = rs.weyl_vector(phi_c.positive.iter());
    let mut base = rho_c.clone();
    arith::add_assign(&mut base, &rs.apply_perm(theta, &rho_c));
    let base = arith::scale(&base, Rational::new(1, 2));

    let sums: Vec<RVec> = phi_c
        .positive
        .iter()
        .map(|g| {
            let mut v = rs.root_vec(g);
            arith::add_scaled_int(&mut v, Rational::from(1), rs.root(theta.image(g)));
            v
        })
        .collect();
    let v1_basis: Vec<RVec> = arith::independent_subset(&sums).into_iter().map(|i| sums[i].clone()).collect();

    let regular = |v: &[Rational]| members.iter().all(|a| !rs.inner_with_root(v, a).is_zero());
    let v0 = find_regular(&base, &v1_basis, regular).ok_or(SubsystemError::NoRegularVector)?;

    let positive = positive_half(rs, members, Positivity::Vector(&v0))?;
    let simple = indecomposables(rs, &positive);
    let mut psi1 = RootSet::new(n);
    let mut psi2 = RootSet::new(n);
    for comp in irreducible_components(rs, members) {
        if psi1.contains(comp.iter().next().unwrap()) || psi2.contains(comp.iter().next().unwrap()) {
            continue;
        }
        let image = comp.map(theta.images());
        if image == comp || !image.is_disjoint(&comp) {
            return Err(SubsystemError::SplitPrecondition("θ stabilizes a component of Φ^c"));
        }
        psi1 = psi1.union(&comp);
        psi2 = psi2.union(&image);
    }
    let psi1_simple = simple.into_iter().filter(|&s| psi1.contains(s)).collect();
    Ok(ThetaSplit { psi1, psi2, psi1_simple, v0 })
}

/// `base + Σ c_k basis[k]` for the first coefficient vector, in order of
/// growing max-norm and then lexicographically, that makes `regular` true.
fn find_regular(base: &[Rational], basis: &[RVec], regular: impl Fn(&[Rational]) -> bool) -> Option<RVec> {
    if regular(base) {
        return Some(base.to_vec());
    }
    let d = basis.len();
    if d == 0 {
        return None;
    }
    for radius in 1i64..=8 {
        let width = (2 * radius + 1) as usize;
        let total = width.checked_pow(d as u32)?;
        for code in 0..total {
            let mut c = code;
            let mut coeffs = Vec::with_capacity(d);
            for _ in 0..d {
                coeffs.push((c % width) as i64 - radius);
                c /= width;
            }
            if coeffs.iter().all(|x| x.abs() < radius) {
                continue;
            }
            let mut v = base.to_vec();
            for (k, &x) in coeffs.iter().enumerate() {
                if x != 0 {
                    arith::add_assign(&mut v, &arith::scale(&basis[k], Rational::from(x)));
                }
            }
            if regular(&v) {
                return Some(v);
            }
        }
    }
    None
}

/// A positive system of Φ^im for which ρ^{im,c} is dominant.
#[derive(Clone, Debug)]
pub struct ImaginaryPositiveSystem {
    pub positive: RootSet,
    /// Half-sum of the compact imaginary roots that are globally positive.
    pub rho_im_c: RVec,
    /// Imaginary roots used to break ties among roots orthogonal to ρ^{im,c}.
    pub tie_break: Vec<RootIndex>,
}

pub fn dominant_imaginary_positive_system(rs: &RootSystem, cls: &RootClassification) -> ImaginaryPositiveSystem {
    let rho_im_c = rs.weyl_vector(cls.compact_imaginary.iter().filter(|&i| rs.is_positive(i)));
    let pos_im: Vec<usize> = cls.imaginary.iter().filter(|&i| rs.is_positive(i)).collect();
    let vecs: Vec<RVec> = pos_im.iter().map(|&i| rs.root_vec(i)).collect();
    let tie_break: Vec<usize> = arith::independent_subset(&vecs).into_iter().map(|k| pos_im[k]).collect();
    let basis: Vec<RVec> = tie_break.iter().map(|&i| rs.root_vec(i)).collect();
    let positive = RootSet::from_predicate(rs.num_roots(), |i| {
        if !cls.imaginary.contains(i) {
            return false;
        }
        let d = rs.inner_with_root(&rho_im_c, i);
        if !d.is_zero() {
            return d.is_positive();
        }
        let coords = arith::coordinates_in(&basis, &rs.root_vec(i)).expect("imaginary roots lie in the span of the basis");
        coords.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive())
    });
    ImaginaryPositiveSystem { positive, rho_im_c, tie_break }
}

/// `Φ^{im,ρ}`: imaginary roots orthogonal to ρ^{im,c}.
pub fn phi_im_rho(rs: &RootSystem, cls: &RootClassification, rho_im_c: &[Rational]) -> RootSet {
    RootSet::from_predicate(rs.num_roots(), |i| cls.imaginary.contains(i) && rs.inner_with_root(rho_im_c, i).is_zero())
}

/// Roots α_1..α_m whose rational span meets Φ only in ±α_i.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperorthogonalSet {
    pub roots: Vec<RootIndex>,
}

impl SuperorthogonalSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `Π s_{α_i}^{ε_i}`; the factors commute.
    pub fn product(&self, rs: &RootSystem, eps: &[bool]) -> Perm {
        let mut w = Perm::identity(rs.num_roots());
        for (&a, &e) in self.roots.iter().zip(eps) {
            if e {
                w = w.compose(rs.reflection(a));
            }
        }
        w
    }
}

/// First root of Φ other than ±roots lying in the rational span of `roots`,
/// or `None` if the set is superorthogonal. Linearly dependent input yields
/// a witness from the set itself.
pub fn superorthogonality_witness(rs: &RootSystem, roots: &[RootIndex]) -> Option<RootIndex> {
    let basis: Vec<RVec> = roots.iter().map(|&i| rs.root_vec(i)).collect();
    if arith::rank(&basis) < basis.len() {
        return Some(roots[arith::independent_subset(&basis).len().min(roots.len() - 1)]);
    }
    (0..rs.num_roots()).find(|&b| {
        let own = roots.iter().any(|&a| a == b || rs.negate(a) == b);
        !own && arith::coordinates_in(&basis, &rs.root_vec(b)).is_some()
    })
}

pub fn is_superorthogonal(rs: &RootSystem, roots: &[RootIndex]) -> bool {
    superorthogonality_witness(rs, roots).is_none()
}

/// B: simple roots of Φ^{im,ρ} with respect to the given positive system of
/// Φ^im, checked to be noncompact and superorthogonal.
pub fn superorthogonal_b(rs: &RootSystem, cls: &RootClassification, im: &ImaginaryPositiveSystem) -> Result<SuperorthogonalSet, SubsystemError> {
    let rho_part = phi_im_rho(rs, cls, &im.rho_im_c);
    let pos = im.positive.intersection(&rho_part);
    let roots = indecomposables(rs, &pos);
    if let Some(&a) = roots.iter().find(|&&a| !cls.noncompact_imaginary.contains(a)) {
        return Err(SubsystemError::CompactInB { root: rs.root(a).to_vec() });
    }
    if let Some(b) = superorthogonality_witness(rs, &roots) {
        return Err(SubsystemError::NotSuperorthogonal { root: rs.root(b).to_vec() });
    }
    Ok(SuperorthogonalSet { roots })
}
