//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
//! fails. Run with `cargo test -p rwg --test acceptance`.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rwg::catalog;
use rwg::cli::{analyze_descriptor, fuzz_data, Format};
use rwg_core::oracle::{self, OracleBudget, Verdict};
use rwg_core::realweyl::{self, RealWeylDecomposition};
use rwg_core::{CartanType, InvolutionDatum, LatticeMode, RootSystem};
use serde_json::Value;

const FUZZ_PER_RANK: usize = 100;

type Outcome = Result<String, String>;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_rwg")
}

fn run_bin(args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(bin()).args(args).output().map_err(|e| format!("spawn: {e}"))?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn analyze_orders(id: &str) -> Result<(Value, Duration), String> {
    let start = Instant::now();
    let (stdout, code) = run_bin(&["analyze", &format!("catalog:{id}")])?;
    let elapsed = start.elapsed();
    if code != 0 {
        return Err(format!("{id}: exit {code}"));
    }
    let v: Value = serde_json::from_slice(&stdout).map_err(|e| format!("{id}: {e}"))?;
    Ok((v, elapsed))
}

fn orders_of(v: &Value) -> Vec<u128> {
    v["orders"].as_array().map(|a| a.iter().filter_map(|x| x.as_u64()).map(u128::from).collect()).unwrap_or_default()
}

fn types() -> Vec<CartanType> {
    CartanType::all_up_to(catalog::MAX_RANK)
}

fn criterion_compact() -> Outcome {
    let mut slowest = Duration::ZERO;
    for t in types() {
        let (v, dt) = analyze_orders(&format!("compact:{t}"))?;
        let w = t.weyl_order();
        if orders_of(&v) != [1, 1, 1, w] || v["total_order"].as_u64().map(u128::from) != Some(w) {
            return Err(format!("{t}: orders {:?}, expected (1,1,1,{w})", orders_of(&v)));
        }
        if dt > Duration::from_secs(30) {
            return Err(format!("{t}: {dt:?} exceeds 30 s"));
        }
        slowest = slowest.max(dt);
    }
    Ok(format!("{} types, slowest {slowest:.2?}", types().len()))
}

fn criterion_split() -> Outcome {
    for t in types() {
        let (v, _) = analyze_orders(&format!("split:{t}"))?;
        let w = t.weyl_order();
        if orders_of(&v) != [1, w, 1, 1] {
            return Err(format!("{t}: orders {:?}, expected (1,{w},1,1)", orders_of(&v)));
        }
    }
    Ok(format!("{} types", types().len()))
}

fn criterion_g2() -> Outcome {
    let start = Instant::now();
    let rs = Arc::new(RootSystem::new("G2".parse().unwrap()));
    let found = oracle::search_matching_datum(&rs, [1, 2, 2, 1], LatticeMode::Weight, &OracleBudget::default()).map_err(|e| e.to_string())?;
    let first = found.first().ok_or("no G2 datum with orders (1,2,2,1)")?;
    let dec = realweyl::compute(first, LatticeMode::Weight).map_err(|e| e.to_string())?;
    realweyl::check_structure(&rs, &dec).map_err(|e| e.to_string())?;
    let dt = start.elapsed();
    if dec.orders != [1, 2, 2, 1] || dec.total_order != 4 {
        return Err(format!("pipeline gives {:?}, total {}", dec.orders, dec.total_order));
    }
    if dt > Duration::from_secs(60) {
        return Err(format!("{dt:?} exceeds 60 s"));
    }
    Ok(format!("{} matching data, total order 4, {dt:.2?}", found.len()))
}

fn criterion_sl2r() -> Outcome {
    let datum = catalog::lookup("sl2R:compactCSA").ok_or("missing catalog entry")?.descriptor.to_datum().map_err(|e| e.to_string())?;
    let dec = realweyl::compute(&datum, LatticeMode::Weight).map_err(|e| e.to_string())?;
    if dec.total_order != 1 {
        return Err(format!("total order {}", dec.total_order));
    }
    if dec.b.len() != 1 || dec.epsilon.dim() != 0 {
        return Err(format!("|B| = {}, dim E = {}", dec.b.len(), dec.epsilon.dim()));
    }
    Ok("total order 1, E = {(0)}".into())
}

/// Catalog entries admitted by the oracle budget plus fuzzed data of ranks
/// 2, 3 and 4.
fn campaign_data() -> Result<Vec<(String, InvolutionDatum)>, String> {
    let budget = OracleBudget::default();
    let mut data = Vec::new();
    for e in catalog::entries() {
        let d = e.descriptor.to_datum().map_err(|err| format!("{}: {err}", e.id))?;
        if budget.admits(&d.rs).is_ok() {
            data.push((e.id, d));
        }
    }
    for rank in 2..=4 {
        data.extend(fuzz_data(rank, FUZZ_PER_RANK, 0xACCE97 + rank as u64, &budget).map_err(|e| e.to_string())?);
    }
    Ok(data)
}

struct Campaign {
    data: usize,
    centralizer: Vec<Verdict>,
    imaginary: Vec<Verdict>,
    epsilon: Vec<Verdict>,
    errors: Vec<String>,
    elapsed: Duration,
}

fn run_campaign() -> Campaign {
    let start = Instant::now();
    let budget = OracleBudget::default();
    let mut c = Campaign { data: 0, centralizer: Vec::new(), imaginary: Vec::new(), epsilon: Vec::new(), errors: Vec::new(), elapsed: Duration::ZERO };
    let data = match campaign_data() {
        Ok(d) => d,
        Err(e) => {
            c.errors.push(e);
            return c;
        }
    };
    c.data = data.len();
    for (label, datum) in &data {
        let rs = &*datum.rs;
        let dec = match realweyl::compute(datum, LatticeMode::Weight) {
            Ok(d) => d,
            Err(e) => {
                c.errors.push(format!("{label}: {e}"));
                continue;
            }
        };
        let tag = |mut v: Verdict| {
            v.detail = format!("{label}: {}", v.detail);
            v
        };
        match oracle::enumerate_weyl(rs, &budget) {
            Ok(weyl) => c.centralizer.extend(oracle::check_theta_centralizer(rs, &dec, &weyl).into_iter().map(tag)),
            Err(e) => c.errors.push(format!("{label}: {e}")),
        }
        match oracle::check_imaginary_structure(rs, &dec, &budget) {
            Ok(v) => c.imaginary.extend(v.into_iter().map(tag)),
            Err(e) => c.errors.push(format!("{label}: {e}")),
        }
        match oracle::check_epsilon(rs, datum, &dec) {
            Ok(v) => c.epsilon.push(tag(v)),
            Err(e) => c.errors.push(format!("{label}: {e}")),
        }
    }
    c.elapsed = start.elapsed();
    c
}

fn verdicts_outcome(c: &Campaign, verdicts: &[Verdict]) -> Outcome {
    if let Some(e) = c.errors.first() {
        return Err(format!("{} campaign errors, first: {e}", c.errors.len()));
    }
    if c.elapsed > Duration::from_secs(600) {
        return Err(format!("campaign took {:?}", c.elapsed));
    }
    let failed: Vec<&Verdict> = verdicts.iter().filter(|v| !v.passed).collect();
    match failed.first() {
        Some(v) => Err(format!("{} failures, first [{}] {}", failed.len(), v.identity, v.detail)),
        None => Ok(format!("{} data, {} checks, 0 failures, campaign {:.2?}", c.data, verdicts.len(), c.elapsed)),
    }
}

fn criterion_structure() -> Outcome {
    let mut checked = 0;
    let mut run = |label: &str, datum: &InvolutionDatum| -> Result<(), String> {
        let dec: RealWeylDecomposition = realweyl::compute(datum, LatticeMode::Weight).map_err(|e| format!("{label}: {e}"))?;
        realweyl::check_structure(&datum.rs, &dec).map_err(|e| format!("{label}: {e}"))?;
        if dec.total_order != dec.orders.iter().product::<u128>() {
            return Err(format!("{label}: total order is not the product"));
        }
        checked += 1;
        Ok(())
    };
    for e in catalog::entries() {
        run(&e.id, &e.descriptor.to_datum().map_err(|err| err.to_string())?)?;
    }
    let budget = OracleBudget { max_group_order: u128::MAX, max_rank: catalog::MAX_RANK };
    for rank in 2..=6 {
        for (label, d) in fuzz_data(rank, 20, 0x5714 + rank as u64, &budget).map_err(|e| e.to_string())? {
            run(&label, &d)?;
        }
    }
    Ok(format!("{checked} data"))
}

fn criterion_determinism() -> Outcome {
    let entries = catalog::entries();
    for e in &entries {
        let a = analyze_descriptor(&e.descriptor, None, false, Format::Json).map_err(|err| format!("{}: {err}", e.id))?;
        let b = analyze_descriptor(&e.descriptor, None, false, Format::Json).map_err(|err| format!("{}: {err}", e.id))?;
        if a != b {
            return Err(format!("{}: reports differ within a process", e.id));
        }
        // the binary prints the same report plus a newline
        let (out, code) = run_bin(&["analyze", "--no-check", &format!("catalog:{}", e.id)])?;
        if code != 0 || out != format!("{a}\n").into_bytes() {
            return Err(format!("{}: binary output differs from the library report", e.id));
        }
    }
    Ok(format!("{} catalog entries, in-process and across processes", entries.len()))
}

fn main() -> ExitCode {
    let mut ok = true;
    let mut report = |n: usize, name: &str, outcome: Outcome| {
        match &outcome {
            Ok(msg) => println!("PASS {n} {name}: {msg}"),
            Err(msg) => println!("FAIL {n} {name}: {msg}"),
        }
        ok &= outcome.is_ok();
    };
    report(1, "compact data", criterion_compact());
    report(2, "split data", criterion_split());
    report(3, "G2 anchor (1,2,2,1)", criterion_g2());
    report(4, "sl(2,R) compact Cartan", criterion_sl2r());
    let campaign = run_campaign();
    report(5, "oracle: θ-centralizer", verdicts_outcome(&campaign, &campaign.centralizer));
    report(6, "oracle: imaginary structure", verdicts_outcome(&campaign, &campaign.imaginary));
    report(7, "oracle: E-set", verdicts_outcome(&campaign, &campaign.epsilon));
    report(8, "structural invariants", criterion_structure());
    report(9, "determinism", criterion_determinism());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
