use std::process::ExitCode;
use std::time::{Duration, Instant};

use cytrans::exceptional::{DelPezzoModel, DualGraph, SmallExceptionalLocus};
use cytrans::golden::run_golden;
use cytrans::hodge::{ci_euler, euler_from_betti, griffiths_h21};
use cytrans::milnor::{icis_milnor, milnor_fiber_betti, milnor_oracle, milnor_orlik};
use cytrans::polyring::{parse_poly_infer, parse_rational};
use cytrans::transition::{
    coxeter_number, defect, fill_table, milnor_constraint, verify_table, SmallTransitionSpec, TypeIITransitionSpec,
};
use cytrans::{
    BettiVector, CISpec, CompleteIntersectionGerm, Corner, Error, HomologicalType, HypersurfaceGerm, SingularityGerm,
    WPSHypersurfaceSpec, WeightSystem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn row(b2: u64, b3: u64, b4: u64) -> BettiVector {
    BettiVector([1, 0, b2, b3, b4, 0, 1])
}

type Rows = [(u64, u64, u64); 3];

const GOLDEN: [(&str, Rows); 7] = [
    ("quintic-plane", [(2, 174, 2), (1, 189, 2), (1, 204, 1)]),
    ("namikawa-a2", [(21, 8, 21), (19, 18, 21), (19, 40, 19)]),
    ("typeII-d3", [(2, 182, 2), (1, 188, 1), (1, 204, 1)]),
    ("typeII-d2", [(2, 174, 2), (1, 181, 1), (1, 208, 1)]),
    ("typeII-d1", [(2, 156, 2), (1, 164, 1), (1, 214, 1)]),
    ("typeII-d4", [(2, 134, 2), (1, 139, 1), (1, 148, 1)]),
    ("typeII-elliptic-d2", [(2, 174, 2), (1, 172, 1), (1, 208, 1)]),
];

fn golden_tables() -> Outcome {
    for (name, rows) in GOLDEN {
        let r = run_golden(name).map_err(|e| format!("{name}: {e}"))?;
        let want = rows.map(|(a, b, c)| row(a, b, c));
        let got = [r.rows.y, r.rows.ybar, r.rows.ytilde];
        ensure(got == want, || format!("{name}: got {got:?}"))?;
    }
    Ok("7 tables reproduced exactly".into())
}

fn ws(weights: &[&str], degree: i64) -> WeightSystem {
    let w = weights.iter().map(|s| parse_rational(s).unwrap()).collect();
    WeightSystem::new(w, cytrans::polyring::rat(degree)).unwrap()
}

fn milnor_numbers() -> Outcome {
    let formula = [
        (ws(&["1", "1", "1", "1"], 3), 16),
        (ws(&["1", "1", "1", "2"], 4), 27),
        (ws(&["1", "1", "2", "3"], 6), 50),
        (ws(&["3", "3", "2", "2"], 6), 4),
        (ws(&["1", "1", "2", "4/5"], 4), 36),
        (ws(&["1", "1", "2", "2/3"], 4), 45),
        (ws(&["1", "1", "1", "1"], 2), 1),
    ];
    for (w, want) in &formula {
        let got = milnor_orlik(w).map_err(|e| e.to_string())?;
        ensure(got == *want, || format!("{w}: {got} != {want}"))?;
    }
    let icis = icis_milnor(&CompleteIntersectionGerm::two_generic_quadrics_dim3());
    ensure(icis == 9, || format!("two quadrics: {icis}"))?;

    let oracle = [
        ("x^3 + y^3 + z^3 + w^3", [1, 1, 1, 1], 3, 16),
        ("x^4 + y^4 + z^4 + w^2", [1, 1, 1, 2], 4, 27),
        ("x^6 + y^6 + z^3 + w^2", [1, 1, 2, 3], 6, 50),
        ("x^2 - u^2 - y^3 + v^3", [3, 3, 2, 2], 6, 4),
        ("x^2 + y^2 + z^2 + w^2", [1, 1, 1, 1], 2, 1),
    ];
    let mut slowest = Duration::ZERO;
    for (text, weights, degree, want) in oracle {
        let (f, _) = parse_poly_infer(text).unwrap();
        let g = HypersurfaceGerm::new(f, WeightSystem::from_integers(&weights, degree).unwrap())
            .map_err(|e| e.to_string())?;
        let start = Instant::now();
        let got = milnor_oracle(&g).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(got == want, || format!("oracle {text}: {got} != {want}"))?;
        ensure(got == milnor_orlik(g.weight_system()).unwrap(), || format!("{text}: routes disagree"))?;
        ensure(took < Duration::from_secs(10), || format!("{text}: oracle took {took:?}"))?;
    }
    Ok(format!("8 values; oracle agrees on 5 germs, slowest {slowest:.2?}"))
}

fn hodge_data() -> Outcome {
    for (weights, degree, want) in [([1, 1, 1, 1, 1], 5, 101), ([1, 1, 1, 1, 2], 6, 103), ([1, 1, 1, 2, 3], 8, 106)] {
        let spec = WPSHypersurfaceSpec::new(weights, degree, None).map_err(|e| e.to_string())?;
        let got = griffiths_h21(&spec).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("P{weights:?}[{degree}]: h21 = {got} != {want}"))?;
    }
    for (ambient, degrees, ytilde_b3, want) in [(4, vec![5], 204, -200), (5, vec![3, 3], 148, -144)] {
        let chi = ci_euler(&CISpec::new(ambient, degrees.clone()).unwrap());
        ensure(chi == want, || format!("{degrees:?} in P{ambient}: {chi} != {want}"))?;
        let alt = euler_from_betti(&row(1, ytilde_b3, 1));
        ensure(alt == chi, || format!("{degrees:?}: Ytilde row sums to {alt}, not {chi}"))?;
    }
    Ok("h21 = 101, 103, 106; euler = -200, -144".into())
}

fn homological_types() -> Outcome {
    let want = [
        ("quintic-plane", (1, 0, 15, 15), 1),
        ("namikawa-a2", (2, 0, 10, 22), 2),
        ("typeII-d3", (0, 1, 6, 16), 0),
        ("typeII-d2", (0, 1, 7, 27), 0),
        ("typeII-d1", (0, 1, 8, 50), 0),
        ("typeII-d4", (0, 1, 5, 9), 0),
        ("typeII-elliptic-d2", (0, 1, -2, 36), 0),
    ];
    for (name, (k1, k2, c1, c2), d) in want {
        let r = run_golden(name).map_err(|e| e.to_string())?;
        let h = HomologicalType::new(k1, k2, c1, c2).unwrap();
        ensure(r.htype == h, || format!("{name}: {} != {h}", r.htype))?;
        let got = defect(&r.table());
        ensure(got == d, || format!("{name}: defect {got} != {d}"))?;
    }
    Ok("7 types and defects 1,2,0,0,0,0,0".into())
}

fn coxeter() -> Outcome {
    for (name, d, want) in [("typeII-d1", 1, 30), ("typeII-d2", 2, 18), ("typeII-d3", 3, 12), ("typeII-d4", 4, 8)] {
        let h = run_golden(name).map_err(|e| e.to_string())?.htype;
        let ck = h.c() + h.k() as i64;
        let cox = coxeter_number(d).unwrap().map(|v| v as i64);
        ensure(cox == Some(want) && ck == want, || format!("d={d}: c+k = {ck}, coxeter {cox:?}"))?;
    }
    Ok("c+k = 30, 18, 12, 8".into())
}

fn brieskorn_pham() -> Outcome {
    let mut tuples: Vec<Vec<u32>> = Vec::new();
    for n in 1..=4u32 {
        for code in 0..5u32.pow(n) {
            tuples.push((0..n).map(|i| 2 + code / 5u32.pow(i) % 5).collect());
        }
    }
    for a in &tuples {
        let g = HypersurfaceGerm::brieskorn_pham(a).map_err(|e| format!("{a:?}: {e}"))?;
        let product: u64 = a.iter().map(|&e| u64::from(e - 1)).product();
        let oracle = milnor_oracle(&g).map_err(|e| format!("{a:?}: {e}"))?;
        let formula = milnor_orlik(g.weight_system()).map_err(|e| format!("{a:?}: {e}"))?;
        ensure(oracle == product && formula == product, || {
            format!("{a:?}: oracle {oracle}, formula {formula}, product {product}")
        })?;
    }
    Ok(format!("{} exponent tuples agree", tuples.len()))
}

fn random_round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    for case in 0..500 {
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
        let corner = row(h11, 2 + 2 * h21, h11);

        let t = fill_table(&h, &corner, which).map_err(|e| format!("case {case} {h}: {e}"))?;
        if let Some(c) = verify_table(&t).into_iter().find(|c| !c.passed) {
            return Err(format!("case {case} {h}: {} {}", c.name, c.detail));
        }
        let other = match which {
            Corner::Y => fill_table(&h, &t.ytilde, Corner::Ytilde),
            Corner::Ytilde => fill_table(&h, &t.y, Corner::Y),
        }
        .map_err(|e| format!("case {case}: {e}"))?;
        ensure((other.y, other.ybar, other.ytilde) == (t.y, t.ybar, t.ytilde), || {
            format!("case {case} {h}: corner round trip changed the table")
        })?;
    }
    Ok("500 seeded cases verify and round-trip".into())
}

fn guards() -> Outcome {
    let odd = milnor_fiber_betti(45, true, None).unwrap();
    let r = TypeIITransitionSpec::new(DelPezzoModel::elliptic(2).unwrap(), odd);
    ensure(matches!(r, Err(Error::Parity(_))), || format!("odd elliptic m_p: {r:?}"))?;

    let r = milnor_constraint(7, 0);
    ensure(matches!(r, Err(Error::OutOfRange(_))), || format!("d=7, b2=0: {r:?}"))?;

    let locus = SmallExceptionalLocus::uniform(2, DualGraph::A(1), SingularityGerm::node()).unwrap();
    let r = SmallTransitionSpec::new(locus, 3);
    ensure(matches!(r, Err(Error::OutOfRange(_))), || format!("k > min(n,m): {r:?}"))?;
    Ok("odd elliptic m_p, d=7 with b2=0, k > min(n,m) rejected".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1  golden tables", golden_tables),
        ("2  Milnor numbers", milnor_numbers),
        ("3  Hodge data", hodge_data),
        ("4  homological types", homological_types),
        ("5  Coxeter cross-check", coxeter),
        ("6a Brieskorn-Pham equivalence", brieskorn_pham),
        ("6b randomized tables", random_round_trips),
        ("6c guards", guards),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("PASS {name}: {msg} ({:.2?})", t.elapsed()),
            Err(msg) => {
                failures += 1;
                println!("FAIL {name}: {msg} ({:.2?})", t.elapsed());
            }
        }
    }
    println!("acceptance: {} of 8 criteria passed in {:.2?}", 8 - failures, start.elapsed());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
