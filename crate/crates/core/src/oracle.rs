//! Brute-force checks of the decomposition by enumerating Weyl groups at
//! small rank. Nothing here reuses the constructive shortcuts of
//! [`realweyl`](crate::realweyl): groups are enumerated and subsets are cut
//! out by their defining conditions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;

use crate::arith::{self, Rational};
use crate::involution::InvolutionDatum;
use crate::lattice::{self, LatticeMode};
use crate::realweyl::{self, RealWeylDecomposition, RealWeylError};
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;
use crate::subsystems::{self, Positivity, Subsystem};
use crate::weylperm::{self, Perm, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_group_order: u128,
    pub max_rank: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_group_order: 200_000, max_rank: 4 }
    }
}

impl OracleBudget {
    pub fn admits(&self, rs: &RootSystem) -> Result<(), OracleError> {
        let order = rs.cartan_type().weyl_order();
        if rs.rank() > self.max_rank || order > self.max_group_order {
            return Err(OracleError::BudgetExceeded { rank: rs.rank(), order });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("budget exceeded: rank {rank}, |W| = {order}")]
    BudgetExceeded { rank: usize, order: u128 },
    #[error(transparent)]
    Pipeline(#[from] RealWeylError),
}

/// Outcome of checking one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub identity: &'static str,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<Perm>,
}

impl Verdict {
    fn pass(identity: &'static str) -> Self {
        Verdict { identity, passed: true, detail: String::new(), witness: None }
    }

    fn fail(identity: &'static str, detail: String, witness: Option<Perm>) -> Self {
        Verdict { identity, passed: false, detail, witness }
    }

    fn check(identity: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(identity)
        } else {
            Self::fail(identity, detail(), None)
        }
    }
}

/// All elements of W(Φ), by breadth-first closure over simple reflections.
pub fn enumerate_weyl(rs: &RootSystem, budget: &OracleBudget) -> Result<Vec<Perm>, OracleError> {
    budget.admits(rs)?;
    let gens: Vec<Perm> = rs.simple_roots().map(|i| rs.reflection(i).clone()).collect();
    Ok(closure(rs.num_roots(), &gens))
}

fn closure(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let id = Perm::identity(degree);
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    seen.insert(id.clone());
    let mut out = alloc::vec![id];
    let mut k = 0;
    while k < out.len() {
        for s in gens {
            let h = s.compose(&out[k]);
            if !seen.contains(&h) {
                seen.insert(h.clone());
                out.push(h);
            }
        }
        k += 1;
    }
    out
}

/// `W(Φ)^θ = (W^c)^θ ⋉ (W^re × W^im)`: the centralizer of θ, enumerated by
/// definition, against the group built from the three generator lists.
pub fn check_theta_centralizer(rs: &RootSystem, dec: &RealWeylDecomposition, weyl: &[Perm]) -> Vec<Verdict> {
    let n = rs.num_roots();
    let theta = &dec.classification.theta_perm;
    let centralizer: Vec<&Perm> = weyl.iter().filter(|w| w.commutes_with(theta)).collect();
    let gens_im = dec.phi_im.reflections(rs);
    let c_grp = PermGroup::generate(n, &dec.gens_c_theta);
    let re_grp = PermGroup::generate(n, &dec.gens_re);
    let im_grp = PermGroup::generate(n, &gens_im);
    let all_gens = [dec.gens_c_theta.clone(), dec.gens_re.clone(), gens_im.clone()].concat();
    let built = PermGroup::generate(n, &all_gens);
    let mut out = Vec::new();

    let missing = centralizer.iter().find(|w| !built.contains(w));
    out.push(match missing {
        Some(w) => Verdict::fail("W(Φ)^θ ⊆ (W^c)^θ (W^re × W^im)", "centralizer element not generated".into(), Some((*w).clone())),
        None => Verdict::check("W(Φ)^θ = (W^c)^θ (W^re × W^im)", built.order() == centralizer.len() as u128, || {
            format!("|generated| = {}, |centralizer| = {}", built.order(), centralizer.len())
        }),
    });

    let product = c_grp.order() * re_grp.order() * im_grp.order();
    out.push(Verdict::check("(W^c)^θ ∩ W^re W^im = 1 and W^re ∩ W^im = 1", product == centralizer.len() as u128, || {
        format!("{} · {} · {} != {}", c_grp.order(), re_grp.order(), im_grp.order(), centralizer.len())
    }));
    out.push(Verdict::check("|(W^c)^θ| = |W(Ψ1)|", c_grp.order() == dec.psi1.weyl_order(), || {
        format!("{} != {}", c_grp.order(), dec.psi1.weyl_order())
    }));

    let mut normal = Verdict::pass("W^re, W^im ⊴ W(Φ)^θ");
    'outer: for g in &all_gens {
        for (sub, grp) in [(&dec.gens_re, &re_grp), (&gens_im, &im_grp)] {
            for h in sub {
                let c = g.conjugate(h);
                if !grp.contains(&c) {
                    normal = Verdict::fail("W^re, W^im ⊴ W(Φ)^θ", format!("conjugate of {h:?} by {g:?}"), Some(c));
                    break 'outer;
                }
            }
        }
    }
    out.push(normal);
    out
}

/// `B ⊂ Φ^{im,nc}` superorthogonal; `W^{im,2} = Q ⋉ W^{im,c}`;
/// `Q = W^{im,2} ∩ W(Φ^{im,ρ})`; and A consists of the E-products in Q.
pub fn check_imaginary_structure(rs: &RootSystem, dec: &RealWeylDecomposition, budget: &OracleBudget) -> Result<Vec<Verdict>, OracleError> {
    let n = rs.num_roots();
    let cls = &dec.classification;
    let im_order = dec.phi_im.weyl_order();
    if im_order > budget.max_group_order {
        return Err(OracleError::BudgetExceeded { rank: rs.rank(), order: im_order });
    }
    let mut out = Vec::new();

    // (i) by definition
    let b = &dec.b.roots;
    let nc = b.iter().all(|&a| cls.imaginary.contains(a) && cls.signs[a] == -1);
    out.push(Verdict::check("B ⊂ Φ^{im,nc}", nc, || format!("B = {b:?}")));
    let orth = b.iter().all(|&x| b.iter().all(|&y| x == y || rs.inner_roots(x, y) == 0));
    let mut extra = None;
    if orth {
        // for orthogonal B the projection onto span(B) is Σ (β,α)/(α,α) α
        for beta in 0..n {
            if b.iter().any(|&a| a == beta || rs.negate(a) == beta) {
                continue;
            }
            let mut proj = arith::zero_vec(rs.rank());
            for &a in b {
                let c = Rational::new(rs.inner_roots(beta, a), rs.norm(a));
                arith::add_scaled_int(&mut proj, c, rs.root(a));
            }
            if proj == rs.root_vec(beta) {
                extra = Some(beta);
                break;
            }
        }
    }
    out.push(Verdict::check("B is superorthogonal", orth && extra.is_none(), || match extra {
        Some(beta) => format!("root {:?} lies in span(B)", rs.root(beta)),
        None => "B is not pairwise orthogonal".into(),
    }));

    let rho = dec.rho_im_c();
    let w_im = closure(n, &dec.phi_im.reflections(rs));
    let preserves = |w: &Perm| cls.compact_imaginary.iter().all(|a| cls.compact_imaginary.contains(w.image(a)));
    let w_im2: Vec<&Perm> = w_im.iter().filter(|w| preserves(w)).collect();
    let q: Vec<&Perm> = w_im2.iter().copied().filter(|w| rs.apply_perm(w, rho) == *rho).collect();
    let im_c = PermGroup::generate(n, &dec.gens_im_c);

    // (ii)
    let meet = q.iter().filter(|w| im_c.contains(w)).count();
    let ok = q.len() as u128 * im_c.order() == w_im2.len() as u128 && meet == 1 && (w_im2.len() as u128).is_multiple_of(im_c.order());
    out.push(Verdict::check("W^{im,2} = Q ⋉ W^{im,c}", ok, || {
        format!("|W^im2| = {}, |Q| = {}, |W^imc| = {}, |Q ∩ W^imc| = {meet}", w_im2.len(), q.len(), im_c.order())
    }));
    let stray = w_im2.iter().find(|w| !(0..q.len()).any(|k| im_c.contains(&q[k].inverse().compose(w))));
    out.push(match stray {
        Some(w) => Verdict::fail("W^{im,2} = Q W^{im,c}", "element outside Q W^{im,c}".into(), Some((*w).clone())),
        None => Verdict::pass("W^{im,2} = Q W^{im,c}"),
    });

    // (iii)
    let rho_sub = subsystems::phi_im_rho(rs, cls, rho);
    let rho_grp = Subsystem::new(rs, rho_sub, Positivity::Inherited)
        .map_err(RealWeylError::from)?
        .weyl_group(rs);
    let q_set: BTreeSet<&Perm> = q.iter().copied().collect();
    let bad = w_im2.iter().find(|w| rho_grp.contains(w) != q_set.contains(*w));
    out.push(match bad {
        Some(w) => Verdict::fail("Q = W^{im,2} ∩ W(Φ^{im,ρ})", "inclusion fails".into(), Some((*w).clone())),
        None => Verdict::pass("Q = W^{im,2} ∩ W(Φ^{im,ρ})"),
    });

    // A = {Π s_α^ε : ε ∈ E} ∩ Q, and A ⊆ Q
    let a_grp = PermGroup::generate(n, &dec.gens_a);
    let expected: BTreeSet<Perm> = dec
        .epsilon
        .members()
        .into_iter()
        .map(|e| dec.b.product(rs, &dec.epsilon.to_bits(e)))
        .filter(|w| q_set.contains(w))
        .collect();
    let got: BTreeSet<Perm> = a_grp.elements().collect();
    out.push(Verdict::check("A = Q ∩ {Π s_α^ε : ε ∈ E}", expected == got, || {
        format!("|expected| = {}, |A| = {}", expected.len(), got.len())
    }));
    Ok(out)
}

/// `<μ, α^∨>` straight from the definition in the chosen coordinates.
fn coroot_pairing(rs: &RootSystem, mode: LatticeMode, mu: &[i64], alpha: usize) -> Rational {
    let a = rs.root(alpha);
    let form = rs.form();
    let l = rs.rank();
    let norm = rs.norm(alpha);
    match mode {
        // α^∨ = Σ a_k |α_k|²/|α|² α_k^∨ and <ω_j, α_k^∨> = δ_jk
        LatticeMode::Weight => (0..l).map(|j| Rational::new(mu[j] * a[j] * form[j][j], norm)).sum(),
        LatticeMode::Root => {
            let ip: i64 = (0..l).map(|i| (0..l).map(|j| mu[i] * form[i][j] * a[j]).sum::<i64>()).sum();
            Rational::new(2 * ip, norm)
        }
    }
}

/// θ-fixed lattice vectors in the box `[-r, r]^ℓ`, grown until they span P^θ.
pub fn fixed_spanning_set(theta_p: &[Vec<i64>], p_theta: &lattice::IntegerLattice) -> Vec<Vec<i64>> {
    let l = theta_p.len();
    for r in 2i64.. {
        let width = (2 * r + 1) as usize;
        let mut out = Vec::new();
        for code in 0..width.pow(l as u32) {
            let mut c = code;
            let v: Vec<i64> = (0..l)
                .map(|_| {
                    let x = (c % width) as i64 - r;
                    c /= width;
                    x
                })
                .collect();
            let tv: Vec<i64> = (0..l).map(|i| (0..l).map(|j| theta_p[i][j] * v[j]).sum()).collect();
            if tv == v && v.iter().any(|&x| x != 0) {
                out.push(v);
            }
        }
        let coords: Vec<Vec<i64>> = out.iter().filter_map(|v| p_theta.coordinates(v)).collect();
        if p_theta.rank() == 0 {
            return out;
        }
        if coords.len() == out.len() {
            let f = lattice::invariant_factors(&lattice::to_big(&coords));
            if f.len() >= p_theta.rank() && f.iter().take(p_theta.rank()).all(|d| d == &num_bigint::BigInt::from(1)) {
                return out;
            }
        }
    }
    unreachable!()
}

/// E from the parity matrix on a basis versus all 2^m vectors tested against
/// a spanning set of P^θ.
pub fn check_epsilon(rs: &RootSystem, datum: &InvolutionDatum, dec: &RealWeylDecomposition) -> Result<Verdict, OracleError> {
    let m = dec.b.len();
    if m > 20 {
        return Err(OracleError::BudgetExceeded { rank: rs.rank(), order: 1u128 << m });
    }
    let theta_p = lattice::theta_on_lattice(rs, &datum.theta, dec.lattice_mode).map_err(RealWeylError::from)?;
    let span = fixed_spanning_set(&theta_p, &dec.p_theta);
    let pair: Vec<Vec<Rational>> = span
        .iter()
        .map(|mu| dec.b.roots.iter().map(|&a| coroot_pairing(rs, dec.lattice_mode, mu, a)).collect())
        .collect();
    if pair.iter().flatten().any(|p| !p.is_integer()) {
        return Ok(Verdict::fail("E from a basis of P^θ", "non-integral pairing".into(), None));
    }
    let brute: Vec<u64> = (0u64..1 << m)
        .filter(|&e| {
            pair.iter().all(|row| {
                let s: i64 = (0..m).filter(|i| e >> i & 1 == 1).map(|i| row[i].to_integer()).sum();
                s.is_even()
            })
        })
        .collect();
    let mut got = dec.epsilon.members();
    got.sort_unstable();
    Ok(Verdict::check("E from a basis of P^θ equals E from a spanning set", got == brute, || {
        format!("nullspace {got:?} vs enumeration {brute:?}")
    }))
}

/// Every check for one datum: pipeline structure, θ-centralizer, imaginary
/// structure and E.
pub fn check_all(datum: &InvolutionDatum, mode: LatticeMode, budget: &OracleBudget) -> Result<Vec<Verdict>, OracleError> {
    let rs = &*datum.rs;
    budget.admits(rs)?;
    let dec = realweyl::compute(datum, mode)?;
    let mut out = Vec::new();
    out.push(match realweyl::check_structure(rs, &dec) {
        Ok(()) => Verdict::pass("decomposition structure"),
        Err(e) => Verdict::fail("decomposition structure", format!("{e}"), None),
    });
    let weyl = enumerate_weyl(rs, budget)?;
    out.extend(check_theta_centralizer(rs, &dec, &weyl));
    out.extend(check_imaginary_structure(rs, &dec, budget)?);
    out.push(check_epsilon(rs, datum, &dec)?);
    let theta = &dec.classification.theta_perm;
    let total = PermGroup::generate(rs.num_roots(), &dec.all_generators());
    let inside = total.elements().all(|w| w.commutes_with(theta));
    out.push(Verdict::check("W(g,h) ⊆ W(Φ)^θ", inside, String::new));
    Ok(out)
}

/// Involutive automorphisms of Φ, from `W · {±1} · diagram symmetries`,
/// deduplicated and sorted.
pub fn root_involutions(rs: &RootSystem, weyl: &[Perm]) -> Vec<Perm> {
    let neg = Perm::from_images(rs.negation_perm().to_vec());
    let mut outer = Vec::new();
    for sigma in rs.diagram_automorphisms() {
        let d = rs.diagram_perm(&sigma).expect("diagram automorphism");
        outer.push(neg.compose(&d));
        outer.push(d);
    }
    let mut found = BTreeSet::new();
    for w in weyl {
        for o in &outer {
            let t = w.compose(o);
            if t.compose(&t).is_identity() {
                found.insert(t);
            }
        }
    }
    found.into_iter().collect()
}

/// All gradings of θ's imaginary roots: characters of the imaginary root
/// lattice, one per sign choice on a simple system of Φ^im.
pub fn all_gradings(rs: &Arc<RootSystem>, theta: &Perm) -> Vec<InvolutionDatum> {
    let im = RootSet::from_predicate(rs.num_roots(), |i| theta.image(i) == i);
    let simple = subsystems::simple_roots_of(rs, &im, Positivity::Inherited).expect("inherited positivity");
    (0u64..1 << simple.len())
        .map(|mask| {
            let seeds: Vec<(usize, i64)> = simple
                .iter()
                .enumerate()
                .map(|(k, &r)| (r, if mask >> k & 1 == 1 { -1 } else { 1 }))
                .collect();
            InvolutionDatum::from_perm(rs.clone(), theta, &seeds)
        })
        .collect()
}

/// Data whose factor orders equal `target`, over every involution of Φ and
/// every grading.
pub fn search_matching_datum(
    rs: &Arc<RootSystem>,
    target: [u128; 4],
    mode: LatticeMode,
    budget: &OracleBudget,
) -> Result<Vec<InvolutionDatum>, OracleError> {
    let weyl = enumerate_weyl(rs, budget)?;
    let mut out = Vec::new();
    for theta in root_involutions(rs, &weyl) {
        for datum in all_gradings(rs, &theta) {
            let dec = realweyl::compute(&datum, mode)?;
            if dec.orders == target {
                out.push(datum);
            }
        }
    }
    Ok(out)
}

/// A random valid datum: θ uniform among the involutions of
/// `W · {±1} · diagram symmetries` (by rejection), grading uniform among the
/// characters of the imaginary root lattice.
pub fn random_datum<R: Rng + ?Sized>(rs: &Arc<RootSystem>, weyl: &PermGroup, rng: &mut R) -> InvolutionDatum {
    let neg = Perm::from_images(rs.negation_perm().to_vec());
    let diagrams = rs.diagram_automorphisms();
    let theta = loop {
        let w = weyl.random_element(rng);
        let sigma = &diagrams[rng.gen_range(0..diagrams.len())];
        let mut t = w.compose(&rs.diagram_perm(sigma).expect("diagram automorphism"));
        if rng.gen_bool(0.5) {
            t = t.compose(&neg);
        }
        if t.compose(&t).is_identity() {
            break t;
        }
    };
    let im = RootSet::from_predicate(rs.num_roots(), |i| theta.image(i) == i);
    let simple = subsystems::simple_roots_of(rs, &im, Positivity::Inherited).expect("inherited positivity");
    let seeds: Vec<(usize, i64)> = simple.iter().map(|&r| (r, if rng.gen_bool(0.5) { -1 } else { 1 })).collect();
    InvolutionDatum::from_perm(rs.clone(), &theta, &seeds)
}

/// Stabilizer of `v` in W(Ψ) by enumeration, against the group generated by
/// reflections in the simple roots of Ψ orthogonal to `v`.
pub fn check_stabilizer_of_dominant(rs: &RootSystem, sub: &Subsystem, v: &[Rational]) -> Verdict {
    let n = rs.num_roots();
    let elems = closure(n, &sub.reflections(rs));
    let stab = elems.iter().filter(|w| rs.apply_perm(w, v) == v).count();
    let fixed: Vec<usize> = sub.simple_roots.iter().copied().filter(|&a| rs.inner_with_root(v, a).is_zero()).collect();
    let grp = PermGroup::generate(n, &weylperm::reflections(rs, &fixed));
    Verdict::check("Stab_W(Ψ)(v) = W(Ψ^v)", grp.order() == stab as u128 && grp.generators().iter().all(|g| rs.apply_perm(g, v) == v), || {
        format!("|stab| = {stab}, |W(Ψ^v)| = {}", grp.order())
    })
}

/// Pointwise stabilizer of several vectors by enumeration, against the Weyl
/// group of the roots orthogonal to all of them.
pub fn check_pointwise_stabilizer(rs: &RootSystem, sub: &Subsystem, vs: &[Vec<Rational>]) -> Verdict {
    let n = rs.num_roots();
    let elems = closure(n, &sub.reflections(rs));
    let stab = elems.iter().filter(|w| vs.iter().all(|v| rs.apply_perm(w, v) == *v)).count();
    let perp = RootSet::from_predicate(n, |i| sub.members.contains(i) && vs.iter().all(|v| rs.inner_with_root(v, i).is_zero()));
    let order = match Subsystem::new(rs, perp, Positivity::Inherited) {
        Ok(s) => s.weyl_group(rs).order(),
        Err(e) => return Verdict::fail("pointwise stabilizer is a reflection subgroup", format!("{e}"), None),
    };
    Verdict::check("pointwise stabilizer is a reflection subgroup", order == stab as u128, || {
        format!("|stab| = {stab}, |W(perp)| = {order}")
    })
}
