//! JSON and text renderings of a decomposition.

use rwg_core::{realweyl::RealWeylDecomposition, Perm, RootSystem, Subsystem};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    #[serde(rename = "type")]
    pub ctype: String,
    pub lattice: &'static str,
    /// `[|(W^c)^θ|, |W^re|, |A|, |W^{im,c}|]`
    pub orders: [u128; 4],
    pub total_order: u128,
    pub root_counts: RootCounts,
    pub component_types: ComponentTypes,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    pub epsilon_basis: Vec<Vec<u8>>,
    pub a_basis: Vec<Vec<u8>>,
    pub a_filter_nontrivial: bool,
    pub grading_c_theta_stable: bool,
    pub fixed_lattice_rank: usize,
    pub torsion_two_rank: usize,
    pub generators: Generators,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootCounts {
    pub real: usize,
    pub imaginary: usize,
    pub complex: usize,
    pub compact_imaginary: usize,
    pub noncompact_imaginary: usize,
    pub phi_c: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentTypes {
    pub re: Vec<String>,
    pub im: Vec<String>,
    pub im_c: Vec<String>,
    pub c: Vec<String>,
    pub psi1: Vec<String>,
}

/// Generators in cycle notation on 0-based root indices (see `rwg roots`).
#[derive(Clone, Debug, Serialize)]
pub struct Generators {
    pub c_theta: Vec<String>,
    pub re: Vec<String>,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    pub im_c: Vec<String>,
}

fn types(s: &Subsystem) -> Vec<String> {
    s.types().iter().map(|t| t.to_string()).collect()
}

fn cycles(gens: &[Perm]) -> Vec<String> {
    gens.iter().map(Perm::cycle_string).collect()
}

fn bits(m: usize, e: u64) -> Vec<u8> {
    (0..m).map(|i| (e >> i & 1) as u8).collect()
}

impl Report {
    pub fn new(rs: &RootSystem, dec: &RealWeylDecomposition) -> Self {
        let cls = &dec.classification;
        let m = dec.b.len();
        Report {
            ctype: dec.ctype.to_string(),
            lattice: dec.lattice_mode.as_str(),
            orders: dec.orders,
            total_order: dec.total_order,
            root_counts: RootCounts {
                real: cls.real.count(),
                imaginary: cls.imaginary.count(),
                complex: cls.complex.count(),
                compact_imaginary: cls.compact_imaginary.count(),
                noncompact_imaginary: cls.noncompact_imaginary.count(),
                phi_c: dec.phi_c.members.count(),
            },
            component_types: ComponentTypes {
                re: types(&dec.phi_re),
                im: types(&dec.phi_im),
                im_c: types(&dec.phi_im_c),
                c: types(&dec.phi_c),
                psi1: types(&dec.psi1),
            },
            b: dec.b.roots.iter().map(|&i| rs.root(i).to_vec()).collect(),
            epsilon_basis: dec.epsilon.basis.iter().map(|&e| bits(m, e)).collect(),
            a_basis: dec.a_basis.iter().map(|&e| bits(m, e)).collect(),
            a_filter_nontrivial: dec.a_filter_nontrivial,
            grading_c_theta_stable: dec.grading_c_theta_stable,
            fixed_lattice_rank: dec.p_theta.rank(),
            torsion_two_rank: dec.torsion_two_rank,
            generators: Generators {
                c_theta: cycles(&dec.gens_c_theta),
                re: cycles(&dec.gens_re),
                a: cycles(&dec.gens_a),
                im_c: cycles(&dec.gens_im_c),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let list = |v: &[String]| if v.is_empty() { "-".to_string() } else { v.join(" × ") };
        let [c, re, a, imc] = self.orders;
        let _ = writeln!(s, "type            {} ({} lattice)", self.ctype, self.lattice);
        let _ = writeln!(s, "orders          (W^c)^θ = {c}, W^re = {re}, A = {a}, W^im,c = {imc}");
        let _ = writeln!(s, "total order     {}", self.total_order);
        let r = &self.root_counts;
        let _ = writeln!(
            s,
            "roots           real {}, imaginary {} (compact {}, noncompact {}), complex {}, Φ^c {}",
            r.real, r.imaginary, r.compact_imaginary, r.noncompact_imaginary, r.complex, r.phi_c
        );
        let t = &self.component_types;
        let _ = writeln!(s, "Φ^re            {}", list(&t.re));
        let _ = writeln!(s, "Φ^im            {}", list(&t.im));
        let _ = writeln!(s, "Φ^im,c          {}", list(&t.im_c));
        let _ = writeln!(s, "Φ^c             {} (Ψ1 {})", list(&t.c), list(&t.psi1));
        let _ = writeln!(s, "B               {:?}", self.b);
        let _ = writeln!(s, "E basis         {:?}", self.epsilon_basis);
        let _ = writeln!(s, "P^θ             rank {}, P^θ/(1+θ)P = (Z/2)^{}", self.fixed_lattice_rank, self.torsion_two_rank);
        if self.a_filter_nontrivial {
            let _ = writeln!(s, "note            some ε ∈ E were dropped by the W^im,2 filter");
        }
        if !self.grading_c_theta_stable {
            let _ = writeln!(s, "warning         grading is not (W^c)^θ-stable; no real form has this datum");
        }
        s
    }
}
