//! Brute-force campaign: every identity on catalog-like data and on at least
//! a hundred random data per rank 2..=4.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rwg_core::involution::from_vogan;
use rwg_core::oracle::{self, OracleBudget, Verdict};
use rwg_core::weylperm::weyl_group;
use rwg_core::{CartanType, InvolutionDatum, LatticeMode, RootSystem};

const PER_RANK: usize = 120;

fn failures(label: &str, verdicts: &[Verdict]) -> Vec<String> {
    verdicts
        .iter()
        .filter(|v| !v.passed)
        .map(|v| format!("{label}: [{}] {}", v.identity, v.detail))
        .collect()
}

fn run(label: &str, datum: &InvolutionDatum, mode: LatticeMode) -> Vec<String> {
    let verdicts = oracle::check_all(datum, mode, &OracleBudget::default()).unwrap_or_else(|e| panic!("{label}: {e}"));
    assert!(verdicts.len() >= 10, "{label}: only {} checks", verdicts.len());
    failures(label, &verdicts)
}

fn types_of_rank(r: usize) -> Vec<CartanType> {
    CartanType::all_up_to(r).into_iter().filter(|t| t.rank == r).collect()
}

#[test]
fn catalog_like_data_pass() {
    let mut bad = Vec::new();
    for t in CartanType::all_up_to(4) {
        let rs = Arc::new(RootSystem::new(t));
        let id: Vec<usize> = (0..t.rank).collect();
        let mut data = vec![
            (format!("compact {t}"), InvolutionDatum::compact(rs.clone())),
            (format!("split {t}"), InvolutionDatum::split(rs.clone())),
        ];
        for p in 0..t.rank {
            let v = rwg_core::VoganDiagram::new(t, id.clone(), vec![p]);
            data.push((format!("vogan {t} p{p}"), from_vogan(&v, rs.clone()).unwrap()));
        }
        for (label, d) in &data {
            for mode in [LatticeMode::Weight, LatticeMode::Root] {
                bad.extend(run(&format!("{label} {}", mode.as_str()), d, mode));
            }
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn fuzzed_data_pass() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut bad = Vec::new();
    for rank in 2..=4 {
        let systems: Vec<_> = types_of_rank(rank)
            .into_iter()
            .map(|t| {
                let rs = Arc::new(RootSystem::new(t));
                let w = weyl_group(&rs);
                (rs, w)
            })
            .collect();
        for k in 0..PER_RANK {
            let (rs, w) = &systems[k % systems.len()];
            let datum = oracle::random_datum(rs, w, &mut rng);
            datum.validate().expect("random data are valid");
            let mode = if k % 3 == 2 { LatticeMode::Root } else { LatticeMode::Weight };
            bad.extend(run(&format!("rank {rank} #{k} {}", rs.cartan_type()), &datum, mode));
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn budget_is_enforced() {
    let rs = Arc::new(RootSystem::new("E6".parse().unwrap()));
    let err = oracle::check_all(&InvolutionDatum::compact(rs), LatticeMode::Weight, &OracleBudget::default()).unwrap_err();
    assert!(matches!(err, oracle::OracleError::BudgetExceeded { rank: 6, .. }));
}
