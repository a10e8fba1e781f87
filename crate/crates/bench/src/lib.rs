//! Inputs shared by the benchmarks in `benches/`.

use polyfaces::charts::{Configuration, EpsilonPath};

/// An evenly spaced configuration of `n` interior points.
pub fn even_configuration(n: usize) -> Configuration {
    let t = (1..=n).map(|i| format!("{i}/{}", n + 1)).collect::<Vec<_>>().join(",");
    t.parse().expect("evenly spaced points are interior")
}

/// A path whose points split into nested clusters near both ends.
pub fn nested_path(n: usize) -> EpsilonPath {
    let half = n / 2;
    let coords: Vec<String> = (0..n)
        .map(|i| if i < half { format!("e^{}", half - i) } else { format!("1 - e^{}", i - half + 1) })
        .collect();
    coords.join(",").parse().expect("coordinates increase for small e")
}
