//! Built-in link scenarios with explicit measurement-derived parameter
//! boxes: a free-space optical link (high transmittance, strong daylight
//! background) and a telecom-fiber link (lower transmittance, faint
//! background).

use covertq_core::{PolicyParams, Result as CoreResult, UncertaintyBox};

#[derive(Debug, Clone, Copy)]
pub struct ScenarioPreset {
    pub name: &'static str,
    pub eta_min: f64,
    pub eta_max: f64,
    pub nb_min: f64,
    pub nb_max: f64,
    pub n: u64,
    pub delta: f64,
}

pub const PRESETS: [ScenarioPreset; 2] = [
    ScenarioPreset {
        name: "fso",
        eta_min: 0.90,
        eta_max: 0.98,
        nb_min: 0.02,
        nb_max: 0.12,
        n: 100_000_000,
        delta: 0.05,
    },
    ScenarioPreset {
        name: "fiber",
        eta_min: 0.80,
        eta_max: 0.90,
        nb_min: 0.001,
        nb_max: 0.02,
        n: 100_000_000,
        delta: 0.05,
    },
];

impl ScenarioPreset {
    pub fn uncertainty_box(&self) -> CoreResult<UncertaintyBox> {
        UncertaintyBox::explicit(self.eta_min, self.eta_max, self.nb_min, self.nb_max)
    }

    pub fn policy(&self) -> CoreResult<PolicyParams> {
        PolicyParams::new(self.n, self.delta)
    }
}
