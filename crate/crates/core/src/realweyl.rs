//! The real Weyl group `(W^c)^θ ⋉ (W^re × (A ⋉ W^{im,c}))` of a datum.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::RVec;
use crate::involution::{compute_phi_c, InvolutionDatum, InvolutionError, RootClassification};
use crate::lattice::{self, EpsilonSet, IntegerLattice, LatticeError, LatticeMode};
use crate::rootsys::{CartanType, RootSystem};
use crate::subsystems::{self, ImaginaryPositiveSystem, Positivity, Subsystem, SubsystemError, SuperorthogonalSet, ThetaSplit};
use crate::weylperm::{self, Perm, PermGroup};

/// Above this size of B only a basis of E is filtered.
const FULL_FILTER_MAX_M: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealWeylError {
    #[error(transparent)]
    Invalid(#[from] InvolutionError),
    #[error("lattice: {0}")]
    Lattice(#[from] LatticeError),
    #[error("invariant violated [{identity}]: {detail}")]
    Invariant { identity: &'static str, detail: String },
}

impl RealWeylError {
    fn invariant(identity: &'static str, detail: impl Into<String>) -> Self {
        RealWeylError::Invariant { identity, detail: detail.into() }
    }

    /// Validation failures are input errors; everything else is internal.
    pub fn is_input_error(&self) -> bool {
        matches!(self, RealWeylError::Invalid(_))
    }
}

impl From<SubsystemError> for RealWeylError {
    fn from(e: SubsystemError) -> Self {
        let identity = match e {
            SubsystemError::CompactInB { .. } => "B ⊂ Φ^{im,nc}",
            SubsystemError::NotSuperorthogonal { .. } => "B is superorthogonal",
            SubsystemError::SplitPrecondition(_) | SubsystemError::NoRegularVector => "Φ^c = Ψ1 ⊔ θ(Ψ1)",
            SubsystemError::UnknownType => "subsystem has a finite Cartan type",
            SubsystemError::OrthogonalToPositivity { .. } => "positivity vector is regular",
        };
        RealWeylError::invariant(identity, format!("{e}"))
    }
}

#[derive(Clone, Debug)]
pub struct RealWeylDecomposition {
    pub ctype: CartanType,
    pub lattice_mode: LatticeMode,
    pub classification: RootClassification,
    pub phi_c: Subsystem,
    pub split: ThetaSplit,
    pub psi1: Subsystem,
    pub phi_re: Subsystem,
    pub phi_im: Subsystem,
    pub phi_im_c: Subsystem,
    pub im_positive: ImaginaryPositiveSystem,
    pub b: SuperorthogonalSet,
    pub p_theta: IntegerLattice,
    pub torsion_two_rank: usize,
    pub epsilon: EpsilonSet,
    /// ε-vectors (bitmasks over B) whose products generate A.
    pub a_basis: Vec<u64>,
    /// Some ε ∈ E gave a product outside W^{im,2}.
    pub a_filter_nontrivial: bool,
    /// (W^c)^θ maps compact imaginary roots to compact ones. Holds for every
    /// datum coming from a real form; without it the factors do not assemble
    /// into a semidirect product.
    pub grading_c_theta_stable: bool,
    pub gens_c_theta: Vec<Perm>,
    pub gens_re: Vec<Perm>,
    pub gens_a: Vec<Perm>,
    pub gens_im_c: Vec<Perm>,
    /// `(|(W^c)^θ|, |W^re|, |A|, |W^{im,c}|)`.
    pub orders: [u128; 4],
    pub total_order: u128,
}

impl RealWeylDecomposition {
    pub fn rho_im_c(&self) -> &RVec {
        &self.im_positive.rho_im_c
    }

    pub fn all_generators(&self) -> Vec<Perm> {
        let mut g = self.gens_c_theta.clone();
        g.extend(self.gens_re.iter().cloned());
        g.extend(self.gens_a.iter().cloned());
        g.extend(self.gens_im_c.iter().cloned());
        g
    }
}

pub fn compute(datum: &InvolutionDatum, mode: LatticeMode) -> Result<RealWeylDecomposition, RealWeylError> {
    let rs: &RootSystem = &datum.rs;
    let cls = datum.validate()?;

    let phi_c = compute_phi_c(rs, &cls)?;
    let split = subsystems::split_theta_swapped(rs, &cls, &phi_c)?;
    let psi1 = Subsystem::new(rs, split.psi1.clone(), Positivity::Inherited)?;
    let phi_re = Subsystem::new(rs, cls.real.clone(), Positivity::Inherited)?;
    let phi_im = Subsystem::new(rs, cls.imaginary.clone(), Positivity::Inherited)?;
    let phi_im_c = Subsystem::new(rs, cls.compact_imaginary.clone(), Positivity::Inherited)?;

    let fixed = weylperm::theta_fixed_subgroup_decomposition(rs, &cls, &split.psi1_simple, &phi_re.simple_roots, &phi_im.simple_roots);
    let gens_im_c = phi_im_c.reflections(rs);

    let im_positive = subsystems::dominant_imaginary_positive_system(rs, &cls);
    let b = subsystems::superorthogonal_b(rs, &cls, &im_positive)?;

    let theta_p = lattice::theta_on_lattice(rs, &datum.theta, mode)?;
    let p_theta = lattice::fixed_lattice(&theta_p)?;
    let torsion_two_rank = lattice::torsion_two_rank(&theta_p)?;
    let epsilon = lattice::epsilon_set(rs, &b, &p_theta, mode)?;

    let in_q = |w: &Perm| -> Result<bool, RealWeylError> {
        let im2 = weylperm::w_im2_membership(w, &cls.compact_imaginary);
        if !weylperm::q_membership(rs, w, &im_positive.rho_im_c) {
            return Err(RealWeylError::invariant("B-products fix ρ^{im,c}", w.cycle_string()));
        }
        Ok(im2)
    };
    let candidates = if b.len() <= FULL_FILTER_MAX_M { epsilon.members() } else { epsilon.basis.clone() };
    let mut kept = Vec::new();
    for &eps in &candidates {
        if in_q(&b.product(rs, &epsilon.to_bits(eps)))? {
            kept.push(eps);
        }
    }
    let a_filter_nontrivial = kept.len() < candidates.len();
    let a_basis = lattice::gf2_basis(&kept);
    let gens_a: Vec<Perm> = a_basis.iter().map(|&e| b.product(rs, &epsilon.to_bits(e))).collect();

    let grading_c_theta_stable = fixed
        .c_theta
        .iter()
        .all(|g| weylperm::w_im2_membership(g, &cls.compact_imaginary));

    let orders = [psi1.weyl_order(), phi_re.weyl_order(), 1u128 << a_basis.len(), phi_im_c.weyl_order()];
    let total_order = orders.iter().product();
    Ok(RealWeylDecomposition {
        ctype: rs.cartan_type(),
        lattice_mode: mode,
        classification: cls,
        phi_c,
        split,
        psi1,
        phi_re,
        phi_im,
        phi_im_c,
        im_positive,
        b,
        p_theta,
        torsion_two_rank,
        epsilon,
        a_basis,
        a_filter_nontrivial,
        grading_c_theta_stable,
        gens_c_theta: fixed.c_theta,
        gens_re: fixed.re,
        gens_a,
        gens_im_c,
        orders,
        total_order,
    })
}

/// Re-checks the structure of a decomposition with BSGS order and membership
/// computations. The semidirect-product checks involving (W^c)^θ and
/// `A ⋉ W^{im,c}` need `grading_c_theta_stable` and are skipped without it.
pub fn check_structure(rs: &RootSystem, dec: &RealWeylDecomposition) -> Result<(), RealWeylError> {
    let n = rs.num_roots();
    let theta = &dec.classification.theta_perm;
    let fail = RealWeylError::invariant;

    let total: u128 = dec.orders.iter().product();
    if total != dec.total_order {
        return Err(fail("total order = product of factor orders", format!("{} != {}", dec.total_order, total)));
    }
    let factors = [
        ("|(W^c)^θ| = |W(Ψ1)|", &dec.gens_c_theta),
        ("|W^re| from its Cartan type", &dec.gens_re),
        ("|A| = 2^dim", &dec.gens_a),
        ("|W^{im,c}| from its Cartan type", &dec.gens_im_c),
    ];
    for (k, (identity, gens)) in factors.iter().enumerate() {
        let ord = PermGroup::generate(n, gens).order();
        if ord != dec.orders[k] {
            return Err(fail(identity, format!("generated order {} != {}", ord, dec.orders[k])));
        }
    }

    for g in dec.all_generators() {
        if !g.commutes_with(theta) {
            return Err(fail("W(g,h) ≤ W(Φ)^θ", g.cycle_string()));
        }
        if !rs.is_root_automorphism(&g) {
            return Err(fail("generators lie in W(Φ)", g.cycle_string()));
        }
    }

    for (i, a) in dec.gens_a.iter().enumerate() {
        if !a.compose(a).is_identity() {
            return Err(fail("A is elementary abelian", format!("generator {} is not an involution", a.cycle_string())));
        }
        for b in &dec.gens_a[i + 1..] {
            if !a.commutes_with(b) {
                return Err(fail("A is elementary abelian", format!("{} and {} do not commute", a.cycle_string(), b.cycle_string())));
            }
        }
        if !weylperm::w_im2_membership(a, &dec.classification.compact_imaginary) {
            return Err(fail("A ⊆ W^{im,2}", a.cycle_string()));
        }
        if !weylperm::q_membership(rs, a, dec.rho_im_c()) {
            return Err(fail("A ⊆ Q", a.cycle_string()));
        }
    }

    let im_c = PermGroup::generate(n, &dec.gens_im_c);
    for a in &dec.gens_a {
        for h in &dec.gens_im_c {
            if !im_c.contains(&a.conjugate(h)) {
                return Err(fail("A normalizes W^{im,c}", format!("{} by {}", h.cycle_string(), a.cycle_string())));
            }
        }
    }
    let re = PermGroup::generate(n, &dec.gens_re);
    let im = dec.phi_im.weyl_group(rs);
    let gens_im = dec.phi_im.reflections(rs);
    for g in &dec.gens_c_theta {
        for (gens, grp) in [(&dec.gens_re, &re), (&gens_im, &im)] {
            if let Some(h) = gens.iter().find(|h| !grp.contains(&g.conjugate(h))) {
                return Err(fail("(W^c)^θ normalizes W^re and W^im", format!("{} by {}", h.cycle_string(), g.cycle_string())));
            }
        }
    }
    if !dec.grading_c_theta_stable {
        return Ok(());
    }
    let mut normal_gens = dec.gens_re.clone();
    normal_gens.extend(dec.gens_a.iter().cloned());
    normal_gens.extend(dec.gens_im_c.iter().cloned());
    let normal = PermGroup::generate(n, &normal_gens);
    for g in &dec.gens_c_theta {
        for h in &normal_gens {
            if !normal.contains(&g.conjugate(h)) {
                return Err(fail("(W^c)^θ normalizes W^re × (A ⋉ W^{im,c})", format!("{} by {}", h.cycle_string(), g.cycle_string())));
            }
        }
    }
    for r in &dec.gens_re {
        for h in dec.gens_a.iter().chain(&dec.gens_im_c) {
            if !r.commutes_with(h) {
                return Err(fail("W^re and W^im commute", format!("{} and {}", r.cycle_string(), h.cycle_string())));
            }
        }
    }

    let ai = PermGroup::generate(n, &[dec.gens_a.clone(), dec.gens_im_c.clone()].concat()).order();
    if ai != dec.orders[2] * dec.orders[3] {
        return Err(fail("A ∩ W^{im,c} = 1", format!("|A W^{{im,c}}| = {ai}")));
    }
    let all = PermGroup::generate(n, &dec.all_generators()).order();
    if all != dec.total_order {
        return Err(fail("factors intersect trivially", format!("generated order {all} != {}", dec.total_order)));
    }
    Ok(())
}
