use cytrans::golden::{list_golden, run_golden};
use cytrans::report::{parse_records, render_table, Format};
use cytrans::BettiVector;

fn row(b2: u64, b3: u64, b4: u64) -> BettiVector {
    BettiVector([1, 0, b2, b3, b4, 0, 1])
}

#[test]
fn every_golden_scenario_passes_its_checks() {
    for name in list_golden() {
        let r = run_golden(name).unwrap();
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{name}: {failed:?}");
        assert!(r.checks.iter().any(|c| c.name == "expected_Ytilde"), "{name}");
    }
}

#[test]
fn golden_rows() {
    let cases = [
        ("quintic-plane", [(2, 174, 2), (1, 189, 2), (1, 204, 1)]),
        ("namikawa-a2", [(21, 8, 21), (19, 18, 21), (19, 40, 19)]),
        ("typeII-d3", [(2, 182, 2), (1, 188, 1), (1, 204, 1)]),
        ("typeII-d2", [(2, 174, 2), (1, 181, 1), (1, 208, 1)]),
        ("typeII-d1", [(2, 156, 2), (1, 164, 1), (1, 214, 1)]),
        ("typeII-d4", [(2, 134, 2), (1, 139, 1), (1, 148, 1)]),
        ("typeII-elliptic-d2", [(2, 174, 2), (1, 172, 1), (1, 208, 1)]),
    ];
    for (name, rows) in cases {
        let r = run_golden(name).unwrap();
        let [y, ybar, ytilde] = rows.map(|(a, b, c)| row(a, b, c));
        assert_eq!((r.rows.y, r.rows.ybar, r.rows.ytilde), (y, ybar, ytilde), "{name}");
    }
}

#[test]
fn records_are_stable_and_round_trip() {
    for name in list_golden() {
        let r = run_golden(name).unwrap();
        let text = render_table(&r, Format::Records);
        assert_eq!(text, render_table(&run_golden(name).unwrap(), Format::Records));
        assert_eq!(parse_records(&text).unwrap(), vec![r]);
    }
}

#[test]
fn quintic_plane_text_rows() {
    let text = render_table(&run_golden("quintic-plane").unwrap(), Format::Text);
    assert!(text.contains("Y    2  174    2"));
    assert!(text.contains("Ȳ    1  189    2"));
    assert!(text.contains("Ỹ    1  204    1"));
}
