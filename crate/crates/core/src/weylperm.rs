//! Permutations of root indices and permutation groups with a base and
//! strong generating set.
//!
//! Weyl group elements act faithfully on the roots, so every group in the
//! decomposition is stored as a group of permutations of root indices. Order
//! and membership come from a stabilizer chain built by the deterministic
//! Schreier–Sims algorithm.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use rand::Rng;

use crate::involution::RootClassification;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

/// A permutation of `0..degree`, stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

/// Weyl group elements are root permutations.
pub type WeylElement = Perm;

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    /// Panics if `images` is not a permutation.
    pub fn from_images(images: Vec<u32>) -> Self {
        let p = Perm { images };
        assert!(p.is_valid(), "image array is not a permutation");
        p
    }

    pub fn try_from_images(images: Vec<u32>) -> Option<Self> {
        let p = Perm { images };
        p.is_valid().then_some(p)
    }

    fn is_valid(&self) -> bool {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        self.images.iter().all(|&x| {
            let x = x as usize;
            x < n && !core::mem::replace(&mut seen[x], true)
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `self ∘ g ∘ self⁻¹`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        self.compose(g).compose(&self.inverse())
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &x)| i as u32 != x).map(|(i, _)| i)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Disjoint cycle notation on 0-based points, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{x}");
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl core::ops::Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("generator {index} is not a root automorphism")]
    InvalidGenerator { index: usize },
    #[error("generator {index} has degree {got}, expected {expected}")]
    DegreeMismatch { index: usize, expected: usize, got: usize },
}

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    /// Indices into `PermGroup::strong` of the generators fixing the earlier base points.
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// `transversal[β]` maps the base point to `β`.
    transversal: Vec<Option<Perm>>,
    inverse: Vec<Option<Perm>>,
    done: BTreeSet<(u32, usize)>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut transversal = alloc::vec![None; degree];
        let mut inverse = alloc::vec![None; degree];
        transversal[base as usize] = Some(Perm::identity(degree));
        inverse[base as usize] = Some(Perm::identity(degree));
        Level { base, gens: Vec::new(), orbit: alloc::vec![base], transversal, inverse, done: BTreeSet::new() }
    }

    fn extend_orbit(&mut self, strong: &[Perm]) {
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k] as usize;
            for &g in &self.gens {
                let s = &strong[g];
                let gamma = s.image(beta);
                if self.transversal[gamma].is_none() {
                    let u = s.compose(self.transversal[beta].as_ref().unwrap());
                    self.inverse[gamma] = Some(u.inverse());
                    self.transversal[gamma] = Some(u);
                    self.orbit.push(gamma as u32);
                }
            }
            k += 1;
        }
    }
}

/// A permutation group with a stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    /// Builds the stabilizer chain of the group generated by `gens`.
    pub fn generate(degree: usize, gens: &[Perm]) -> Self {
        let mut generators: Vec<Perm> = Vec::new();
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() && !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        let mut grp = PermGroup { degree, generators: generators.clone(), strong: generators, levels: Vec::new() };
        grp.schreier_sims();
        grp
    }

    /// Like [`generate`](Self::generate) but first checks that every
    /// generator is a root automorphism of `rs`.
    pub fn generate_checked(rs: &RootSystem, gens: &[Perm]) -> Result<Self, GroupError> {
        let n = rs.num_roots();
        for (index, g) in gens.iter().enumerate() {
            if g.degree() != n {
                return Err(GroupError::DegreeMismatch { index, expected: n, got: g.degree() });
            }
            if !rs.is_root_automorphism(g) {
                return Err(GroupError::InvalidGenerator { index });
            }
        }
        Ok(Self::generate(n, gens))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, &[])
    }

    fn schreier_sims(&mut self) {
        for s in 0..self.strong.len() {
            if self.strong[s].is_identity() {
                continue;
            }
            if self.levels.iter().all(|l| self.strong[s].image(l.base as usize) == l.base as usize) {
                let p = self.strong[s].first_moved_point().unwrap();
                self.levels.push(Level::new(p as u32, self.degree));
            }
        }
        for i in 0..self.levels.len() {
            self.refresh_level(i);
        }

        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut jump = None;
            'pairs: for k in 0..self.levels[lvl].orbit.len() {
                let beta = self.levels[lvl].orbit[k];
                for gi in 0..self.levels[lvl].gens.len() {
                    let g = self.levels[lvl].gens[gi];
                    if !self.levels[lvl].done.insert((beta, g)) {
                        continue;
                    }
                    let level = &self.levels[lvl];
                    let s = &self.strong[g];
                    let gamma = s.image(beta as usize);
                    // h = u_γ⁻¹ ∘ s ∘ u_β fixes the base point
                    let h = level.inverse[gamma]
                        .as_ref()
                        .unwrap()
                        .compose(&s.compose(level.transversal[beta as usize].as_ref().unwrap()));
                    if h.is_identity() {
                        continue;
                    }
                    let (j, residue) = self.sift_from(h, lvl + 1);
                    if j == self.levels.len() && residue.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let p = residue.first_moved_point().unwrap();
                        self.levels.push(Level::new(p as u32, self.degree));
                    }
                    self.strong.push(residue);
                    let new = self.strong.len() - 1;
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(new);
                        let strong = &self.strong;
                        self.levels[l].extend_orbit(strong);
                    }
                    jump = Some(j);
                    break 'pairs;
                }
            }
            match jump {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    fn refresh_level(&mut self, i: usize) {
        let bases: Vec<usize> = self.levels[..i].iter().map(|l| l.base as usize).collect();
        let gens: Vec<usize> = (0..self.strong.len())
            .filter(|&s| bases.iter().all(|&b| self.strong[s].image(b) == b))
            .collect();
        self.levels[i].gens = gens;
        let strong = &self.strong;
        self.levels[i].extend_orbit(strong);
    }

    /// Sifts `g` starting at `start`; returns the level where sifting
    /// stopped (`levels.len()` if it passed every level) and the residue.
    fn sift_from(&self, mut g: Perm, start: usize) -> (usize, Perm) {
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(level.base as usize);
            match &level.inverse[beta] {
                Some(uinv) => g = uinv.compose(&g),
                None => return (j, g),
            }
        }
        (self.levels.len(), g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (j, r) = self.sift_from(g.clone(), 0);
        j == self.levels.len() && r.is_identity()
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    /// Every element, as products of transversal elements. Only sensible for
    /// small groups.
    pub fn elements(&self) -> Elements<'_> {
        Elements { group: self, counter: alloc::vec![0; self.levels.len()], finished: false }
    }

    /// A uniformly distributed element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for level in &self.levels {
            let beta = level.orbit[rng.gen_range(0..level.orbit.len())] as usize;
            g = g.compose(level.transversal[beta].as_ref().unwrap());
        }
        g
    }

    /// Naive closure count; used to cross-check the stabilizer chain.
    pub fn closure_order(&self, limit: usize) -> Option<usize> {
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let id = Perm::identity(self.degree);
        seen.insert(id.images.clone());
        let mut frontier = alloc::vec![id];
        while let Some(g) = frontier.pop() {
            for s in &self.generators {
                let h = s.compose(&g);
                if seen.insert(h.images.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    frontier.push(h);
                }
            }
        }
        Some(seen.len())
    }
}

pub struct Elements<'a> {
    group: &'a PermGroup,
    counter: Vec<usize>,
    finished: bool,
}

impl Iterator for Elements<'_> {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        if self.finished {
            return None;
        }
        let mut g = Perm::identity(self.group.degree);
        for (level, &k) in self.group.levels.iter().zip(&self.counter) {
            let beta = level.orbit[k] as usize;
            g = g.compose(level.transversal[beta].as_ref().unwrap());
        }
        // mixed-radix increment
        let mut pos = self.counter.len();
        loop {
            if pos == 0 {
                self.finished = true;
                break;
            }
            pos -= 1;
            self.counter[pos] += 1;
            if self.counter[pos] < self.group.levels[pos].orbit.len() {
                break;
            }
            self.counter[pos] = 0;
        }
        Some(g)
    }
}

/// Reflections in the given roots.
pub fn reflections(rs: &RootSystem, roots: &[usize]) -> Vec<Perm> {
    roots.iter().map(|&a| rs.reflection(a).clone()).collect()
}

/// Generators of the Weyl group of the full root system.
pub fn weyl_group(rs: &RootSystem) -> PermGroup {
    let simple: Vec<usize> = rs.simple_roots().collect();
    PermGroup::generate(rs.num_roots(), &reflections(rs, &simple))
}

/// The three generator lists of `W(Φ)^θ = (W^c)^θ ⋉ (W^re × W^im)`.
#[derive(Clone, Debug)]
pub struct ThetaFixedGenerators {
    pub c_theta: Vec<Perm>,
    pub re: Vec<Perm>,
    pub im: Vec<Perm>,
}

/// `s_α s_θ(α)` over the simple roots of Ψ1, and the simple reflections of
/// Φ^re and Φ^im.
pub fn theta_fixed_subgroup_decomposition(
    rs: &RootSystem,
    cls: &RootClassification,
    psi1_simple: &[usize],
    re_simple: &[usize],
    im_simple: &[usize],
) -> ThetaFixedGenerators {
    let c_theta = psi1_simple
        .iter()
        .map(|&a| rs.reflection(a).compose(rs.reflection(cls.theta(a))))
        .collect();
    ThetaFixedGenerators { c_theta, re: reflections(rs, re_simple), im: reflections(rs, im_simple) }
}

/// `w ∈ W^{im,2}` test: `w` maps the compact imaginary roots onto themselves.
pub fn w_im2_membership(w: &Perm, compact_imaginary: &RootSet) -> bool {
    compact_imaginary.iter().all(|i| compact_imaginary.contains(w.image(i)))
}

/// `w ∈ Q` test for `w ∈ W^{im,2}`: `w` fixes `ρ^{im,c}`.
pub fn q_membership(rs: &RootSystem, w: &Perm, rho_im_c: &[crate::arith::Rational]) -> bool {
    rs.apply_perm(w, rho_im_c) == rho_im_c
}

/// Orbit of a point under the group generated by `gens`.
pub fn orbit(point: usize, gens: &[Perm]) -> Vec<usize> {
    let mut seen = BTreeMap::new();
    seen.insert(point, ());
    let mut out = alloc::vec![point];
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let y = g.image(out[k]);
            if seen.insert(y, ()).is_none() {
                out.push(y);
            }
        }
        k += 1;
    }
    out
}
