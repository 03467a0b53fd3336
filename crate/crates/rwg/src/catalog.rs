//! Built-in data: compact and split forms of every type up to rank 8, Vogan
//! diagrams of the maximally compact Cartan subalgebras, and two small
//! hand-checked data.

use rwg_core::{CartanType, RootSystem};

use crate::descriptor::Descriptor;

pub const MAX_RANK: usize = 8;

#[derive(Clone, Debug)]
pub struct Entry {
    pub id: String,
    pub summary: String,
    pub descriptor: Descriptor,
}

/// θ = s_β for the long root β = 3α1 + α2, with α1 ⊥ β noncompact.
fn g2_intermediate() -> Descriptor {
    Descriptor::from_theta("G2".parse().unwrap(), vec![vec![1, 0], vec![-3, -1]], vec![(vec![1, 0], -1)])
}

fn sl2r_compact() -> Descriptor {
    Descriptor::from_theta("A1".parse().unwrap(), vec![vec![1]], vec![(vec![1], -1)])
}

/// The nontrivial diagram involution used for outer forms (0-based), if any:
/// the lexicographically smallest one.
pub fn outer_involution(t: CartanType) -> Option<Vec<usize>> {
    let rs = RootSystem::new(t);
    rs.diagram_automorphisms()
        .into_iter()
        .filter(|s| s.iter().enumerate().any(|(i, &x)| i != x) && s.iter().enumerate().all(|(i, &x)| s[x] == i))
        .min()
}

pub fn entries() -> Vec<Entry> {
    let types = CartanType::all_up_to(MAX_RANK);
    let mut out = Vec::new();
    for &t in &types {
        let l = t.rank;
        let id: Vec<usize> = (1..=l).collect();
        out.push(Entry {
            id: format!("compact:{t}"),
            summary: format!("compact form of {t}, θ = 1"),
            descriptor: Descriptor::from_vogan(t, id.clone(), Vec::new()),
        });
        let neg: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| -((i == j) as i64)).collect()).collect();
        out.push(Entry {
            id: format!("split:{t}"),
            summary: format!("split Cartan subalgebra of {t}, θ = −1"),
            descriptor: Descriptor::from_theta(t, neg, Vec::new()),
        });
    }
    for &t in &types {
        for p in 1..=t.rank {
            out.push(Entry {
                id: format!("vogan:{t}:p{p}"),
                summary: format!("Vogan diagram of {t} with node {p} painted"),
                descriptor: Descriptor::from_vogan(t, (1..=t.rank).collect(), vec![p]),
            });
        }
    }
    for &t in &types {
        let Some(sigma) = outer_involution(t) else { continue };
        let one_based: Vec<usize> = sigma.iter().map(|&x| x + 1).collect();
        out.push(Entry {
            id: format!("vogan:{t}:swap"),
            summary: format!("Vogan diagram of {t} with the diagram involution, nothing painted"),
            descriptor: Descriptor::from_vogan(t, one_based.clone(), Vec::new()),
        });
        for p in (0..t.rank).filter(|&i| sigma[i] == i) {
            out.push(Entry {
                id: format!("vogan:{t}:swap:p{}", p + 1),
                summary: format!("Vogan diagram of {t} with the diagram involution, node {} painted", p + 1),
                descriptor: Descriptor::from_vogan(t, one_based.clone(), vec![p + 1]),
            });
        }
    }
    out.push(Entry {
        id: "sl2R:compactCSA".into(),
        summary: "sl(2,R) at its compact Cartan subalgebra".into(),
        descriptor: sl2r_compact(),
    });
    out.push(Entry {
        id: "g2:intermediate".into(),
        summary: "split G2 at the Cartan subalgebra with one real and one noncompact imaginary pair".into(),
        descriptor: g2_intermediate(),
    });
    out
}

pub fn lookup(id: &str) -> Option<Entry> {
    entries().into_iter().find(|e| e.id == id)
}
