//! The combinatorial datum of a real form with a θ-stable Cartan subalgebra:
//! an isometric involution θ of the root lattice together with the
//! compact/noncompact grading of the θ-fixed roots.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{self, RVec};
use crate::rootset::RootSet;
use crate::rootsys::{CartanType, RootIndex, RootSystem, RootSystemError};
use crate::subsystems::{Positivity, Subsystem, SubsystemError};
use crate::weylperm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvolutionError {
    #[error("theta has the wrong shape: expected {expected}x{expected}")]
    DimensionMismatch { expected: usize },
    #[error("theta is not an involution")]
    NotInvolution,
    #[error("theta does not map the root set onto itself")]
    NotRootPreserving,
    #[error("theta does not preserve the inner product")]
    NotIsometry,
    #[error("grading seed {root:?} is not a root")]
    SeedNotRoot { root: Vec<i64> },
    #[error("grading seed {root:?} is not an imaginary root")]
    SeedNotImaginary { root: Vec<i64> },
    #[error("grading seed {root:?} has sign {sign}, expected +1 or -1")]
    InvalidSign { root: Vec<i64>, sign: i64 },
    #[error("grading is inconsistent at root {root:?}")]
    GradingInconsistent { root: Vec<i64> },
    #[error("grading does not determine a sign for root {root:?}")]
    GradingUnderdetermined { root: Vec<i64> },
    #[error("invalid Vogan diagram: {0}")]
    InvalidVogan(String),
}

impl From<RootSystemError> for InvolutionError {
    fn from(e: RootSystemError) -> Self {
        match e {
            RootSystemError::DimensionMismatch { expected, .. } => InvolutionError::DimensionMismatch { expected },
            _ => InvolutionError::NotRootPreserving,
        }
    }
}

impl InvolutionError {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            InvolutionError::DimensionMismatch { .. } => "DimensionMismatch",
            InvolutionError::NotInvolution => "NotInvolution",
            InvolutionError::NotRootPreserving => "NotRootPreserving",
            InvolutionError::NotIsometry => "NotIsometry",
            InvolutionError::SeedNotRoot { .. } => "SeedNotRoot",
            InvolutionError::SeedNotImaginary { .. } => "SeedNotImaginary",
            InvolutionError::InvalidSign { .. } => "InvalidSign",
            InvolutionError::GradingInconsistent { .. } => "GradingInconsistent",
            InvolutionError::GradingUnderdetermined { .. } => "GradingUnderdetermined",
            InvolutionError::InvalidVogan(_) => "InvalidVogan",
        }
    }
}

/// θ as the images of the simple roots (row `i` is θ(α_i) in simple-root
/// coordinates) plus sign seeds for imaginary roots. `+1` means compact.
#[derive(Clone, Debug)]
pub struct InvolutionDatum {
    pub rs: Arc<RootSystem>,
    pub theta: Vec<Vec<i64>>,
    pub grading_seed: Vec<(Vec<i64>, i64)>,
}

impl InvolutionDatum {
    pub fn new(rs: Arc<RootSystem>, theta: Vec<Vec<i64>>, grading_seed: Vec<(Vec<i64>, i64)>) -> Self {
        InvolutionDatum { rs, theta, grading_seed }
    }

    /// θ = id with every simple root compact: the compact real form.
    pub fn compact(rs: Arc<RootSystem>) -> Self {
        let l = rs.rank();
        let theta = identity_rows(l);
        let seed = (0..l).map(|i| (rs.root(i).to_vec(), 1)).collect();
        InvolutionDatum { rs, theta, grading_seed: seed }
    }

    /// θ = −id: every root real.
    pub fn split(rs: Arc<RootSystem>) -> Self {
        let l = rs.rank();
        let theta = identity_rows(l).into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
        InvolutionDatum { rs, theta, grading_seed: Vec::new() }
    }

    /// Datum whose θ is the linear map induced by a root permutation, with
    /// signs given on the listed imaginary roots.
    pub fn from_perm(rs: Arc<RootSystem>, theta: &Perm, seeds: &[(RootIndex, i64)]) -> Self {
        let l = rs.rank();
        let rows = (0..l).map(|i| rs.root(theta.image(i)).to_vec()).collect();
        let grading_seed = seeds.iter().map(|&(r, s)| (rs.root(r).to_vec(), s)).collect();
        InvolutionDatum { rs, theta: rows, grading_seed }
    }

    /// Applies θ to a rational vector in simple-root coordinates.
    pub fn apply(&self, mu: &[arith::Rational]) -> RVec {
        let mut out = arith::zero_vec(self.rs.rank());
        for (c, row) in mu.iter().zip(&self.theta) {
            if !c.is_zero() {
                arith::add_scaled_int(&mut out, *c, row);
            }
        }
        out
    }

    pub fn validate(&self) -> Result<RootClassification, InvolutionError> {
        validate(self)
    }
}

fn identity_rows(l: usize) -> Vec<Vec<i64>> {
    (0..l)
        .map(|i| {
            let mut e = alloc::vec![0; l];
            e[i] = 1;
            e
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    Real,
    Imaginary,
    Complex,
}

/// Real / imaginary / complex roots, the compact/noncompact split of the
/// imaginary roots, and the Weyl vectors ρ^re, ρ^im for the positive halves
/// inherited from Φ.
#[derive(Clone, Debug)]
pub struct RootClassification {
    pub theta_perm: Perm,
    pub kinds: Vec<RootKind>,
    /// `+1` compact, `-1` noncompact, `0` for non-imaginary roots.
    pub signs: Vec<i8>,
    pub real: RootSet,
    pub imaginary: RootSet,
    pub complex: RootSet,
    pub compact_imaginary: RootSet,
    pub noncompact_imaginary: RootSet,
    pub rho_re: RVec,
    pub rho_im: RVec,
}

impl RootClassification {
    pub fn theta(&self, i: RootIndex) -> RootIndex {
        self.theta_perm.image(i)
    }

    pub fn positive_part(&self, rs: &RootSystem, set: &RootSet) -> RootSet {
        RootSet::from_indices(set.universe(), set.iter().filter(|&i| rs.is_positive(i)))
    }
}

pub fn validate(datum: &InvolutionDatum) -> Result<RootClassification, InvolutionError> {
    let rs = &*datum.rs;
    let l = rs.rank();
    let n = rs.num_roots();
    if datum.theta.len() != l || datum.theta.iter().any(|r| r.len() != l) {
        return Err(InvolutionError::DimensionMismatch { expected: l });
    }
    // θ² = 1
    for i in 0..l {
        let mut sq = alloc::vec![0i64; l];
        for (k, &c) in datum.theta[i].iter().enumerate() {
            for (s, x) in sq.iter_mut().zip(&datum.theta[k]) {
                *s += c * x;
            }
        }
        if sq.iter().enumerate().any(|(j, &x)| x != (i == j) as i64) {
            return Err(InvolutionError::NotInvolution);
        }
    }
    let theta_perm = rs.root_permutation_from_rows(&datum.theta)?;
    for i in 0..l {
        for j in 0..l {
            if rs.inner_roots(theta_perm.image(i), theta_perm.image(j)) != rs.form()[i][j] {
                return Err(InvolutionError::NotIsometry);
            }
        }
    }

    let kinds: Vec<RootKind> = (0..n)
        .map(|i| {
            let t = theta_perm.image(i);
            if t == i {
                RootKind::Imaginary
            } else if t == rs.negate(i) {
                RootKind::Real
            } else {
                RootKind::Complex
            }
        })
        .collect();
    let real = RootSet::from_predicate(n, |i| kinds[i] == RootKind::Real);
    let imaginary = RootSet::from_predicate(n, |i| kinds[i] == RootKind::Imaginary);
    let complex = RootSet::from_predicate(n, |i| kinds[i] == RootKind::Complex);

    let signs = extend_grading(rs, &imaginary, &datum.grading_seed)?;
    let compact_imaginary = RootSet::from_predicate(n, |i| signs[i] == 1);
    let noncompact_imaginary = RootSet::from_predicate(n, |i| signs[i] == -1);

    let rho_re = rs.weyl_vector(real.iter().filter(|&i| rs.is_positive(i)));
    let rho_im = rs.weyl_vector(imaginary.iter().filter(|&i| rs.is_positive(i)));
    Ok(RootClassification {
        theta_perm,
        kinds,
        signs,
        real,
        imaginary,
        complex,
        compact_imaginary,
        noncompact_imaginary,
        rho_re,
        rho_im,
    })
}

/// Extends seed signs multiplicatively over the imaginary roots:
/// `sign(−α) = sign(α)` and `sign(α+β) = sign(α) sign(β)`.
fn extend_grading(
    rs: &RootSystem,
    imaginary: &RootSet,
    seeds: &[(Vec<i64>, i64)],
) -> Result<Vec<i8>, InvolutionError> {
    let n = rs.num_roots();
    let mut signs = alloc::vec![0i8; n];
    let inconsistent = |i: usize| InvolutionError::GradingInconsistent { root: rs.root(i).to_vec() };

    let assign = |signs: &mut [i8], i: usize, s: i8| -> Result<bool, InvolutionError> {
        let mut changed = false;
        for j in [i, rs.negate(i)] {
            match signs[j] {
                0 => {
                    signs[j] = s;
                    changed = true;
                }
                x if x != s => return Err(inconsistent(j)),
                _ => {}
            }
        }
        Ok(changed)
    };

    for (root, sign) in seeds {
        let i = rs.index_of(root).ok_or_else(|| InvolutionError::SeedNotRoot { root: root.clone() })?;
        if !imaginary.contains(i) {
            return Err(InvolutionError::SeedNotImaginary { root: root.clone() });
        }
        if *sign != 1 && *sign != -1 {
            return Err(InvolutionError::InvalidSign { root: root.clone(), sign: *sign });
        }
        assign(&mut signs, i, *sign as i8)?;
    }

    let im: Vec<usize> = imaginary.iter().collect();
    let l = rs.rank();
    let mut changed = true;
    while changed {
        changed = false;
        for &a in &im {
            if signs[a] == 0 {
                continue;
            }
            for &b in &im {
                if signs[b] == 0 {
                    continue;
                }
                let sum: Vec<i64> = (0..l).map(|k| rs.root(a)[k] + rs.root(b)[k]).collect();
                if let Some(c) = rs.index_of(&sum) {
                    let s = signs[a] * signs[b];
                    changed |= assign(&mut signs, c, s)?;
                }
            }
        }
    }
    if let Some(&i) = im.iter().find(|&&i| signs[i] == 0) {
        return Err(InvolutionError::GradingUnderdetermined { root: rs.root(i).to_vec() });
    }
    Ok(signs)
}

/// Dynkin diagram with an involution of the nodes and a set of painted
/// (noncompact) fixed nodes. Node indices are 0-based here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoganDiagram {
    pub ctype: CartanType,
    pub involution: Vec<usize>,
    pub painted: Vec<usize>,
}

impl VoganDiagram {
    pub fn new(ctype: CartanType, involution: Vec<usize>, painted: Vec<usize>) -> Self {
        VoganDiagram { ctype, involution, painted }
    }

    pub fn trivial(ctype: CartanType, painted: Vec<usize>) -> Self {
        VoganDiagram { ctype, involution: (0..ctype.rank).collect(), painted }
    }
}

/// `ε(α, β) = (−1)^{Σ a_i b_j c_ij}` with `c_ii = 1` and `c_ij = 1` for linked
/// `i < j`: a bimultiplicative sign cocycle giving structure constants of a
/// simply-laced Lie algebra, `[e_α, e_β] = ε(α, β) e_{α+β}`.
fn cocycle(cartan: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let l = cartan.len();
    let mut e = 0i64;
    for i in 0..l {
        for j in i..l {
            if i == j || cartan[i][j] != 0 {
                e += a[i] * b[j];
            }
        }
    }
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Builds the datum of a Vogan diagram: θ permutes the simple roots by the
/// diagram involution and acts on `x_{α_i}` by `−1` on painted nodes. The
/// sign of θ on every θ-fixed root space is computed through brackets of
/// simple root vectors and emitted as a seed.
pub fn from_vogan(diagram: &VoganDiagram, rs: Arc<RootSystem>) -> Result<InvolutionDatum, InvolutionError> {
    let l = diagram.ctype.rank;
    if rs.cartan_type() != diagram.ctype {
        return Err(InvolutionError::InvalidVogan("root system type differs from diagram type".into()));
    }
    let sigma = &diagram.involution;
    if sigma.len() != l || sigma.iter().any(|&x| x >= l) {
        return Err(InvolutionError::InvalidVogan("involution must permute the nodes".into()));
    }
    if (0..l).any(|i| sigma[sigma[i]] != i) {
        return Err(InvolutionError::InvalidVogan("node map is not of order at most 2".into()));
    }
    let a = rs.cartan_matrix();
    if (0..l).any(|i| (0..l).any(|j| a[sigma[i]][sigma[j]] != a[i][j])) {
        return Err(InvolutionError::InvalidVogan("node map is not a diagram automorphism".into()));
    }
    for &p in &diagram.painted {
        if p >= l {
            return Err(InvolutionError::InvalidVogan(alloc::format!("painted node {} out of range", p + 1)));
        }
        if sigma[p] != p {
            return Err(InvolutionError::InvalidVogan(alloc::format!("painted node {} is not fixed", p + 1)));
        }
    }
    let theta_perm = rs.diagram_perm(sigma)?;
    let npos = rs.num_positive();
    // η(α) with θ(e_α) = η(α) e_θ(α) for positive α, by height
    let mut eta = alloc::vec![0i64; npos];
    for i in 0..l {
        eta[i] = if diagram.painted.contains(&i) { -1 } else { 1 };
    }
    for r in l..npos {
        let root = rs.root(r);
        let (beta, i) = (0..l)
            .find_map(|i| {
                let mut b = root.to_vec();
                b[i] -= 1;
                rs.index_of(&b).filter(|&j| rs.is_positive(j)).map(|j| (j, i))
            })
            .expect("every non-simple positive root has a positive predecessor");
        let (tb, ti) = (rs.root(theta_perm.image(beta)), rs.root(theta_perm.image(i)));
        eta[r] = eta[beta] * eta[i] * cocycle(a, tb, ti) * cocycle(a, rs.root(beta), rs.root(i));
    }
    let rows = (0..l).map(|i| rs.root(theta_perm.image(i)).to_vec()).collect();
    let seeds = (0..npos)
        .filter(|&r| theta_perm.image(r) == r)
        .map(|r| (rs.root(r).to_vec(), eta[r]))
        .collect();
    Ok(InvolutionDatum { rs, theta: rows, grading_seed: seeds })
}

/// `Φ^c`: roots orthogonal to both ρ^re and ρ^im, with inherited positivity.
pub fn compute_phi_c(rs: &RootSystem, cls: &RootClassification) -> Result<Subsystem, SubsystemError> {
    let members = RootSet::from_predicate(rs.num_roots(), |i| {
        rs.inner_with_root(&cls.rho_re, i).is_zero() && rs.inner_with_root(&cls.rho_im, i).is_zero()
    });
    Subsystem::new(rs, members, Positivity::Inherited)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::vec;

    fn rs(s: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(s.parse().unwrap()))
    }

    #[test]
    fn compact_and_split_data() {
        let g2 = rs("G2");
        let c = InvolutionDatum::compact(g2.clone()).validate().unwrap();
        assert_eq!(c.compact_imaginary.count(), 12);
        assert!(arith::is_zero(&c.rho_re));
        let s = InvolutionDatum::split(g2.clone()).validate().unwrap();
        assert_eq!(s.real.count(), 12);
        assert!(arith::is_zero(&s.rho_im));
        assert!(s.imaginary.is_empty());
    }

    #[test]
    fn sl2r_compact_cartan() {
        let a1 = rs("A1");
        let d = InvolutionDatum::new(a1, vec![vec![1]], vec![(vec![1], -1)]);
        let c = d.validate().unwrap();
        assert_eq!(c.noncompact_imaginary.count(), 2);
        assert!(c.compact_imaginary.is_empty());
        assert_eq!(c.rho_im, vec![rat(1) / 2]);
    }

    #[test]
    fn validation_errors() {
        let a2 = rs("A2");
        let not_inv = InvolutionDatum::new(a2.clone(), vec![vec![0, 1], vec![-1, -1]], vec![]);
        assert_eq!(not_inv.validate().unwrap_err(), InvolutionError::NotInvolution);
        let b2 = rs("B2");
        // swapping a long and a short simple root: involutive and integral but no isometry
        let swap = InvolutionDatum::new(b2.clone(), vec![vec![0, 1], vec![1, 0]], vec![]);
        let e = swap.validate().unwrap_err();
        assert!(matches!(e, InvolutionError::NotRootPreserving | InvolutionError::NotIsometry), "{e:?}");
        let scaled = InvolutionDatum::new(a2.clone(), vec![vec![1, 0], vec![2, -1]], vec![]);
        assert_eq!(scaled.validate().unwrap_err(), InvolutionError::NotRootPreserving);
        let under = InvolutionDatum::new(a2.clone(), vec![vec![1, 0], vec![0, 1]], vec![(vec![1, 0], 1)]);
        assert_eq!(under.validate().unwrap_err().kind(), "GradingUnderdetermined");
        let incons = InvolutionDatum::new(
            a2.clone(),
            vec![vec![1, 0], vec![0, 1]],
            vec![(vec![1, 0], 1), (vec![0, 1], 1), (vec![1, 1], -1)],
        );
        assert_eq!(incons.validate().unwrap_err().kind(), "GradingInconsistent");
        let not_im = InvolutionDatum::new(a2.clone(), vec![vec![-1, 0], vec![0, -1]], vec![(vec![1, 0], 1)]);
        assert_eq!(not_im.validate().unwrap_err().kind(), "SeedNotImaginary");
        let not_root = InvolutionDatum::new(a2.clone(), vec![vec![1, 0], vec![0, 1]], vec![(vec![2, 0], 1)]);
        assert_eq!(not_root.validate().unwrap_err().kind(), "SeedNotRoot");
        let bad_sign = InvolutionDatum::new(a2, vec![vec![1, 0], vec![0, 1]], vec![(vec![1, 0], 0)]);
        assert_eq!(bad_sign.validate().unwrap_err().kind(), "InvalidSign");
    }

    #[test]
    fn b2_swap_is_rejected_as_not_root_preserving() {
        // α1 ↦ α2 sends a long root to a short one; the image of α1+α2 is not a root in the right place
        let b2 = rs("B2");
        let d = InvolutionDatum::new(b2, vec![vec![0, 1], vec![1, 0]], vec![]);
        assert!(d.validate().is_err());
    }

    #[test]
    fn vogan_examples() {
        let a1 = rs("A1");
        let d = from_vogan(&VoganDiagram::trivial(a1.cartan_type(), vec![0]), a1).unwrap();
        let c = d.validate().unwrap();
        assert_eq!(c.noncompact_imaginary.count(), 2);

        let g2 = rs("G2");
        let d = from_vogan(&VoganDiagram::trivial(g2.cartan_type(), vec![]), g2).unwrap();
        assert_eq!(d.validate().unwrap().compact_imaginary.count(), 12);

        // A2 with the node swap: α1+α2 is fixed by θ, every other root is complex.
        let a2 = rs("A2");
        let v = VoganDiagram::new(a2.cartan_type(), vec![1, 0], vec![]);
        let c = from_vogan(&v, a2.clone()).unwrap().validate().unwrap();
        let top = a2.index_of(&[1, 1]).unwrap();
        assert_eq!(c.imaginary, RootSet::from_indices(6, [top, a2.negate(top)]));
        assert!(c.real.is_empty());
        assert_eq!(c.complex.count(), 4);
        // [x_α1, x_α2] ↦ [x_α2, x_α1] = −[x_α1, x_α2]
        assert_eq!(c.signs[top], -1);

        let bad = VoganDiagram::new(a2.cartan_type(), vec![1, 0], vec![0]);
        assert!(matches!(from_vogan(&bad, a2.clone()), Err(InvolutionError::InvalidVogan(_))));
        let bad = VoganDiagram::new(a2.cartan_type(), vec![0, 0], vec![]);
        assert!(from_vogan(&bad, a2).is_err());
    }

    #[test]
    fn phi_c_examples() {
        let g2 = rs("G2");
        let c = InvolutionDatum::compact(g2.clone()).validate().unwrap();
        assert!(compute_phi_c(&g2, &c).unwrap().members.is_empty());
        let c = InvolutionDatum::split(g2.clone()).validate().unwrap();
        assert!(compute_phi_c(&g2, &c).unwrap().members.is_empty());
        // A2 swap: ρ^im = (α1+α2)/2 is orthogonal to no root, so Φ^c is empty.
        let a2 = rs("A2");
        let v = VoganDiagram::new(a2.cartan_type(), vec![1, 0], vec![]);
        let c = from_vogan(&v, a2.clone()).unwrap().validate().unwrap();
        let brute: Vec<usize> = (0..6)
            .filter(|&i| a2.inner_with_root(&c.rho_re, i).is_zero() && a2.inner_with_root(&c.rho_im, i).is_zero())
            .collect();
        assert!(brute.is_empty());
        assert!(compute_phi_c(&a2, &c).unwrap().members.is_empty());
    }

    #[test]
    fn theta_fixes_rho_im_and_negates_rho_re() {
        let a3 = rs("A3");
        // θ = −(diagram flip): real roots ±(α1+α2+α3)... check the general identities
        let flip = a3.diagram_perm(&[2, 1, 0]).unwrap();
        let neg = Perm::from_images(a3.negation_perm().to_vec());
        let theta = neg.compose(&flip);
        let d = InvolutionDatum::from_perm(a3.clone(), &theta, &[]);
        let c = d.validate().unwrap();
        assert_eq!(d.apply(&c.rho_im), c.rho_im);
        assert_eq!(d.apply(&c.rho_re), arith::scale(&c.rho_re, rat(-1)));
        assert!(!c.real.is_empty());
    }
}
