//! Threshold profiles: every numeric cap and coefficient used by templates,
//! classification and peeling, as a function of the clique number.
//!
//! The `paper` kind evaluates the polynomial formulas of the proof; `desk`
//! profiles are small constants so that the machinery engages on graphs with
//! a few hundred vertices. Fractional thresholds such as `ω^{s+2}/14` are kept
//! as exact fractions and compared by cross-multiplication.
//!
//! Quantities that come from Ramsey counting rather than template tuning
//! (`ω^s`, `ω^{s+1}`) are evaluated from the actual `ω` under both kinds.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("unknown profile {0:?}")]
    Unknown(String),
    #[error("profile {name}: partLower {lower} exceeds partUpper {upper}")]
    PartBounds { name: String, lower: u128, upper: u128 },
    #[error("profile {name} at omega {omega}: crossCap*(omega-1) = {lhs} is not below partLower {lower}")]
    CrossCap {
        name: String,
        omega: usize,
        lhs: u128,
        lower: u128,
    },
    #[error("profile config: {0}")]
    Config(String),
}

/// An exact non-negative fraction `num / den` used as a count threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Frac {
    pub num: u128,
    pub den: u128,
}

impl Frac {
    pub const fn whole(num: u128) -> Frac {
        Frac { num, den: 1 }
    }

    /// `x ≤ num/den`.
    pub fn admits(self, x: usize) -> bool {
        (x as u128).saturating_mul(self.den) <= self.num
    }

    /// `x < num/den`.
    pub fn exceeds(self, x: usize) -> bool {
        (x as u128).saturating_mul(self.den) < self.num
    }
}

fn pow(base: usize, exp: usize) -> u128 {
    (base as u128).saturating_pow(exp.min(u32::MAX as usize) as u32)
}

/// Constant thresholds of a desk profile. Field names follow the config file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct DeskConstants {
    #[serde(default)]
    pub kind: Option<String>,
    pub s: usize,
    pub part_lower: u64,
    pub part_upper: u64,
    pub cross_cap: u64,
    pub l0_weight: u64,
    pub part_bonus: u64,
    pub min_value: u64,
    pub dense_cap: u64,
    pub pure_cap: u64,
    pub z_cap: u64,
    pub small_cutoff: u64,
    pub peel_count: u64,
    pub out_nbr_cap: u64,
    pub base_omega: usize,
    #[serde(default = "default_c")]
    pub c: u32,
    #[serde(default)]
    pub d: Option<u32>,
}

fn default_c() -> u32 {
    2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PaperTag {
    #[serde(rename = "paper")]
    Paper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PaperFormula {
    pub kind: PaperTag,
    pub s: usize,
    pub c: u32,
    #[serde(default)]
    pub d: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProfileSpec {
    Paper(PaperFormula),
    Desk(DeskConstants),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdProfile {
    pub name: String,
    pub spec: ProfileSpec,
}

/// All thresholds of a profile evaluated at one clique number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    pub s: usize,
    pub omega: usize,
    pub part_lower: u128,
    pub part_upper: u128,
    pub cross_cap: u128,
    pub l0_weight: u128,
    pub part_bonus: u128,
    pub min_value: u128,
    /// Dense: fewer than this many `u`-neighbours missed by `v` per part.
    pub dense_cap: Frac,
    /// Pure: at most this many non-neighbours in each seen part.
    pub pure_cap: Frac,
    /// `Z`: at most this many non-neighbours in every part.
    pub z_cap: Frac,
    /// `m`: index sets with at most this many pure vertices are small.
    pub small_cutoff: u128,
    /// Number of cliques peeled from the large side.
    pub peel_count: u128,
    /// Forward-degree cap between peeled layers.
    pub out_nbr_cap: u128,
    /// `ω^s`.
    pub ramsey_cap: u128,
    /// `ω^{s+1}`.
    pub incomp_cap: u128,
    pub c: u32,
    pub d: u32,
    pub base_omega: usize,
}

impl Thresholds {
    pub fn check(&self, name: &str) -> Result<(), ProfileError> {
        if self.part_lower > self.part_upper {
            return Err(ProfileError::PartBounds {
                name: name.into(),
                lower: self.part_lower,
                upper: self.part_upper,
            });
        }
        let lhs = self.cross_cap.saturating_mul(self.omega.saturating_sub(1) as u128);
        if self.omega > 0 && lhs >= self.part_lower {
            return Err(ProfileError::CrossCap {
                name: name.into(),
                omega: self.omega,
                lhs,
                lower: self.part_lower,
            });
        }
        Ok(())
    }

    /// Bound on the chromatic number of one dense group before a biclique
    /// of side `partUpper` must appear: `partUpper^c`.
    pub fn kst_cap(&self) -> u128 {
        self.part_upper.saturating_pow(self.c)
    }
}

impl ThresholdProfile {
    pub fn paper(s: usize, c: u32) -> Self {
        ThresholdProfile {
            name: format!("PAPER-s{s}-c{c}"),
            spec: ProfileSpec::Paper(PaperFormula {
                kind: PaperTag::Paper,
                s,
                c,
                d: None,
            }),
        }
    }

    /// The shipped desk profile for `H_s`-free inputs.
    pub fn desk(s: usize) -> Self {
        ThresholdProfile {
            name: format!("DESK{s}"),
            spec: ProfileSpec::Desk(DeskConstants {
                kind: None,
                s,
                part_lower: 2,
                part_upper: 6,
                cross_cap: 0,
                l0_weight: 3,
                part_bonus: 2,
                min_value: 8,
                dense_cap: 1,
                pure_cap: 1,
                z_cap: 1,
                small_cutoff: 2,
                peel_count: 2,
                out_nbr_cap: 4,
                base_omega: 2,
                c: 2,
                d: None,
            }),
        }
    }

    /// Built-in names: `DESK1`, `DESK2`, `DESK3`, `PAPER` (s=1, c=2) and
    /// `PAPER-s<S>-c<C>`.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "DESK1" => Some(Self::desk(1)),
            "DESK2" => Some(Self::desk(2)),
            "DESK3" => Some(Self::desk(3)),
            "PAPER" => Some(Self::paper(1, 2)),
            _ => {
                let rest = name.strip_prefix("PAPER-s")?;
                let (s, c) = rest.split_once("-c")?;
                Some(Self::paper(s.parse().ok()?, c.parse().ok()?))
            }
        }
    }

    pub fn s(&self) -> usize {
        match &self.spec {
            ProfileSpec::Paper(p) => p.s,
            ProfileSpec::Desk(d) => d.s,
        }
    }

    pub fn is_paper(&self) -> bool {
        matches!(self.spec, ProfileSpec::Paper(_))
    }

    pub fn at(&self, omega: usize) -> Thresholds {
        let s = self.s();
        let w = omega;
        match &self.spec {
            ProfileSpec::Paper(p) => {
                let d = p.d.unwrap_or(((p.c + 1) as usize * (s + 7) + 1) as u32);
                Thresholds {
                    s,
                    omega,
                    part_lower: pow(w, s + 5),
                    part_upper: pow(w, s + 6).saturating_mul(14),
                    cross_cap: pow(w, s + 3),
                    l0_weight: pow(w, s + 5).saturating_mul(7),
                    part_bonus: pow(w, s + 5),
                    min_value: pow(w, s + 6).saturating_mul(28),
                    dense_cap: Frac { num: pow(w, s + 2), den: 14 },
                    pure_cap: Frac { num: pow(w, s + 2), den: 7 },
                    z_cap: Frac { num: pow(w, s + 2), den: 4 },
                    small_cutoff: pow(w, s).saturating_mul(s as u128 + 1),
                    peel_count: pow(w, s + 2),
                    out_nbr_cap: pow(w, s + 7),
                    ramsey_cap: pow(w, s),
                    incomp_cap: pow(w, s + 1),
                    c: p.c,
                    d,
                    base_omega: 200.max((s + 1).isqrt()),
                }
            }
            ProfileSpec::Desk(k) => Thresholds {
                s,
                omega,
                part_lower: k.part_lower as u128,
                part_upper: k.part_upper as u128,
                cross_cap: k.cross_cap as u128,
                l0_weight: k.l0_weight as u128,
                part_bonus: k.part_bonus as u128,
                min_value: k.min_value as u128,
                dense_cap: Frac::whole(k.dense_cap as u128),
                pure_cap: Frac::whole(k.pure_cap as u128),
                z_cap: Frac::whole(k.z_cap as u128),
                small_cutoff: k.small_cutoff as u128,
                peel_count: k.peel_count as u128,
                out_nbr_cap: k.out_nbr_cap as u128,
                ramsey_cap: pow(w, s),
                incomp_cap: pow(w, s + 1),
                c: k.c,
                d: k.d.unwrap_or(((k.c + 1) as usize * (s + 7) + 1) as u32),
                base_omega: k.base_omega,
            },
        }
    }
}

/// A profiles config file: `{"profiles": {"NAME": <spec>, ...}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileSet {
    pub profiles: BTreeMap<String, ProfileSpec>,
}

impl ProfileSet {
    pub fn from_json(text: &str) -> Result<Self, ProfileError> {
        serde_json::from_str(text).map_err(|e| ProfileError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, ProfileError> {
        let text = std::fs::read_to_string(path).map_err(|e| ProfileError::Config(e.to_string()))?;
        Self::from_json(&text)
    }

    /// Looks a name up in the file first, then among the built-ins.
    pub fn resolve(&self, name: &str) -> Result<ThresholdProfile, ProfileError> {
        if let Some(spec) = self.profiles.get(name) {
            return Ok(ThresholdProfile {
                name: name.to_string(),
                spec: spec.clone(),
            });
        }
        ThresholdProfile::builtin(name).ok_or_else(|| ProfileError::Unknown(name.to_string()))
    }
}
