//! Model files shipped with the crate.

use crate::format::{parse_model, ModelFile};

pub const PRESETS: [(&str, &str); 4] = [
    ("p2", include_str!("../presets/p2.model")),
    ("p1xp1", include_str!("../presets/p1xp1.model")),
    (
        "tp1-selfdual",
        include_str!("../presets/tp1-selfdual.model"),
    ),
    ("tp1-linear", include_str!("../presets/tp1-linear.model")),
];

pub fn names() -> Vec<&'static str> {
    PRESETS.iter().map(|(n, _)| *n).collect()
}

pub fn text(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parsed preset. Panics on an unknown name.
pub fn model(name: &str) -> ModelFile {
    let t = text(name).unwrap_or_else(|| panic!("no preset `{}`", name));
    parse_model(t).expect("shipped presets parse")
}
