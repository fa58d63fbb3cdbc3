//! Embedded presentations with their standard unit actions.

use crate::coherence::UnitAction;
use crate::io::parse_operad;
use crate::operad::OperadPresentation;

pub const NAMES: [&str; 3] = ["associative", "dendriform", "tridendriform"];

const ASSOCIATIVE: &str = include_str!("../presets/associative.json");
const DENDRIFORM: &str = include_str!("../presets/dendriform.json");
const TRIDENDRIFORM: &str = include_str!("../presets/tridendriform.json");

/// The file text of a preset, byte for byte.
pub fn source(name: &str) -> Option<&'static str> {
    match name {
        "associative" => Some(ASSOCIATIVE),
        "dendriform" => Some(DENDRIFORM),
        "tridendriform" => Some(TRIDENDRIFORM),
        _ => None,
    }
}

pub fn load(name: &str) -> Option<(OperadPresentation, UnitAction)> {
    let file = parse_operad(source(name)?).expect("presets are valid");
    Some((
        file.presentation,
        file.unit_action.expect("presets carry a unit action"),
    ))
}

/// `≺, ≻` with `α = (1, 0)`, `β = (0, 1)`.
pub fn dendriform() -> (OperadPresentation, UnitAction) {
    load("dendriform").unwrap()
}

/// `≺, ≻, *` with `α = (1, 0, 0)`, `β = (0, 1, 0)`.
pub fn tridendriform() -> (OperadPresentation, UnitAction) {
    load("tridendriform").unwrap()
}

/// One associative generator with `α = β = 1`.
pub fn associative() -> (OperadPresentation, UnitAction) {
    load("associative").unwrap()
}
