use std::fmt::Write as _;
use std::time::Instant;

use cytrans::exceptional::{DelPezzoModel, DualGraph, SmallExceptionalLocus};
use cytrans::golden::{list_golden, run_golden};
use cytrans::milnor::{milnor_fiber_betti, milnor_oracle, milnor_orlik};
use cytrans::polyring::linalg::{bareiss_rank, sparse_rank, sparsify};
use cytrans::report::{parse_records, render_table};
use cytrans::transition::{
    fill_table, htype_conifold, htype_small, milnor_constraint, verify_table, SmallTransitionSpec,
    TypeIITransitionSpec,
};
use cytrans::{BettiVector, Corner, Format, HomologicalType, HypersurfaceGerm, SingularityGerm};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::Output;

type Step = Result<String, String>;

fn golden() -> Step {
    for name in list_golden() {
        let r = run_golden(name).map_err(|e| format!("{name}: {e}"))?;
        if let Some(c) = r.checks.iter().find(|c| !c.passed) {
            return Err(format!("{name}: {} {}", c.name, c.detail));
        }
        let text = render_table(&r, Format::Records);
        if parse_records(&text).map_err(|e| e.to_string())? != vec![r] {
            return Err(format!("{name}: records do not round-trip"));
        }
    }
    Ok(format!("{} embedded scenarios", list_golden().len()))
}

fn brieskorn_pham() -> Step {
    let mut count = 0;
    for n in 1..=4u32 {
        for code in 0..5u32.pow(n) {
            let a: Vec<u32> = (0..n).map(|i| 2 + code / 5u32.pow(i) % 5).collect();
            let g = HypersurfaceGerm::brieskorn_pham(&a).map_err(|e| e.to_string())?;
            let want: u64 = a.iter().map(|&e| u64::from(e - 1)).product();
            let oracle = milnor_oracle(&g).map_err(|e| format!("{a:?}: {e}"))?;
            let formula = milnor_orlik(g.weight_system()).map_err(|e| format!("{a:?}: {e}"))?;
            if oracle != want || formula != want {
                return Err(format!("{a:?}: oracle {oracle}, formula {formula}, product {want}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} exponent tuples"))
}

fn random_tables(rng: &mut ChaCha8Rng, cases: usize) -> Step {
    for case in 0..cases {
        let k2 = rng.gen_range(0..=1u64);
        let k1 = rng.gen_range(u64::from(k2 == 0)..=4);
        let c1 = rng.gen_range(-4i64..=40);
        let c2 = c1 + 2 * rng.gen_range(-3i64..=30);
        let h = HomologicalType::new(k1, k2, c1, c2).map_err(|e| e.to_string())?;
        let which = if rng.gen_bool(0.5) { Corner::Y } else { Corner::Ytilde };
        let (need3, h11) = match which {
            Corner::Y => ((-c1).max(-c1 - c2).max(0), h.k() + rng.gen_range(0..20)),
            Corner::Ytilde => (c2.max(c1 + c2).max(0), rng.gen_range(0..20)),
        };
        let h21 = (need3 as u64).div_ceil(2) + rng.gen_range(0..150);
        let corner = BettiVector([1, 0, h11, 2 + 2 * h21, h11, 0, 1]);
        let t = fill_table(&h, &corner, which).map_err(|e| format!("case {case}: {e}"))?;
        if let Some(c) = verify_table(&t).into_iter().find(|c| !c.passed) {
            return Err(format!("case {case} {h}: {} {}", c.name, c.detail));
        }
        let back = match which {
            Corner::Y => fill_table(&h, &t.ytilde, Corner::Ytilde),
            Corner::Ytilde => fill_table(&h, &t.y, Corner::Y),
        }
        .map_err(|e| format!("case {case}: {e}"))?;
        if (back.y, back.ybar, back.ytilde) != (t.y, t.ybar, t.ytilde) {
            return Err(format!("case {case} {h}: corner round trip differs"));
        }
    }
    Ok(format!("{cases} random tables"))
}

fn ranks(rng: &mut ChaCha8Rng, cases: usize) -> Step {
    for case in 0..cases {
        let rows = rng.gen_range(1..8);
        let cols = rng.gen_range(1..8);
        let m: Vec<Vec<BigInt>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| BigInt::from(if rng.gen_bool(0.6) { 0 } else { rng.gen_range(-4i64..=4) }))
                    .collect()
            })
            .collect();
        let dense = bareiss_rank(&m);
        let sparse = sparse_rank(m.iter().map(|r| sparsify(r)).collect());
        if dense != sparse {
            return Err(format!("case {case}: Bareiss {dense}, sparse {sparse}"));
        }
    }
    Ok(format!("{cases} random matrices"))
}

fn reductions() -> Step {
    for nodes in 1..30u64 {
        for k in 1..=nodes {
            let locus =
                SmallExceptionalLocus::uniform(nodes as usize, DualGraph::A(1), SingularityGerm::node()).unwrap();
            let small = htype_small(&SmallTransitionSpec::new(locus, k).unwrap()).unwrap();
            if small != htype_conifold(nodes, k).unwrap() {
                return Err(format!("N = {nodes}, k = {k}"));
            }
        }
    }
    Ok("A1 trees over nodes are conifold".into())
}

fn guards() -> Step {
    let odd = milnor_fiber_betti(45, true, None).unwrap();
    if TypeIITransitionSpec::new(DelPezzoModel::elliptic(2).unwrap(), odd).is_ok() {
        return Err("odd elliptic Milnor number accepted".into());
    }
    if milnor_constraint(7, 0).is_ok() {
        return Err("d = 7 with b2 = 0 accepted".into());
    }
    let locus = SmallExceptionalLocus::uniform(2, DualGraph::A(1), SingularityGerm::node()).unwrap();
    if SmallTransitionSpec::new(locus, 3).is_ok() {
        return Err("k > min(n, m) accepted".into());
    }
    Ok("invalid inputs rejected".into())
}

pub fn run(seed: u64, cases: usize) -> Output {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = String::new();
    let mut passed = true;
    let mut record = |name: &str, start: Instant, step: Step| {
        let took = start.elapsed();
        match step {
            Ok(msg) => writeln!(text, "PASS {name}: {msg} ({took:.2?})"),
            Err(msg) => {
                passed = false;
                writeln!(text, "FAIL {name}: {msg} ({took:.2?})")
            }
        }
        .expect("write to string");
    };
    let t = Instant::now();
    record("golden scenarios", t, golden());
    let t = Instant::now();
    record("Brieskorn-Pham oracle", t, brieskorn_pham());
    let t = Instant::now();
    record("table identities", t, random_tables(&mut rng, cases));
    let t = Instant::now();
    record("rank routes", t, ranks(&mut rng, cases));
    let t = Instant::now();
    record("node reduction", t, reductions());
    let t = Instant::now();
    record("guards", t, guards());
    Output { text, passed }
}
