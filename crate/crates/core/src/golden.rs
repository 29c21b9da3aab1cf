//! Scenario files shipped with the crate.

use crate::error::{Error, Result};
use crate::report::ReportRecord;
use crate::scenario::{evaluate, parse_scenario};

const GOLDEN: [(&str, &str); 7] = [
    ("quintic-plane", include_str!("../golden/quintic-plane.toml")),
    ("namikawa-a2", include_str!("../golden/namikawa-a2.toml")),
    ("typeII-d1", include_str!("../golden/typeII-d1.toml")),
    ("typeII-d2", include_str!("../golden/typeII-d2.toml")),
    ("typeII-d3", include_str!("../golden/typeII-d3.toml")),
    ("typeII-d4", include_str!("../golden/typeII-d4.toml")),
    ("typeII-elliptic-d2", include_str!("../golden/typeII-elliptic-d2.toml")),
];

pub fn list_golden() -> Vec<&'static str> {
    GOLDEN.iter().map(|(n, _)| *n).collect()
}

pub fn golden_source(name: &str) -> Option<&'static str> {
    GOLDEN.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn run_golden(name: &str) -> Result<ReportRecord> {
    let text = golden_source(name).ok_or_else(|| {
        Error::MissingInput(format!("no embedded scenario named `{name}`; try one of {}", list_golden().join(", ")))
    })?;
    evaluate(&parse_scenario(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_names_matching_files() {
        let names = list_golden();
        assert_eq!(names.len(), 7);
        for n in names {
            let s = parse_scenario(golden_source(n).unwrap()).unwrap();
            assert_eq!(s.name, n);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(run_golden("quartic"), Err(Error::MissingInput(_))));
    }
}
