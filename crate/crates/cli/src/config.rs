//! Experiment configuration: a JSON or TOML file, then flag overrides.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use twistlab::farey::Slope;
use twistlab::heegaard::HeegaardData;
use twistlab::homology::TwistWord;
use twistlab::linalg::is_prime;
use twistlab::{IntMatrix, Side, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    TopologyProbe,
    HeegaardScan,
    FareyScan,
    FixedClassScan,
    Snf,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::TopologyProbe => "topology-probe",
            Kind::HeegaardScan => "heegaard-scan",
            Kind::FareyScan => "farey-scan",
            Kind::FixedClassScan => "fixed-class-scan",
            Kind::Snf => "snf",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Both,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WindowConfig {
    pub radius: i64,
    pub rho: f64,
}

impl Default for WindowConfig {
    fn default() -> Self {
        WindowConfig { radius: 50, rho: Window::DEFAULT_FRACTION }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TopologyParams {
    /// Catalog key, see `twistlab list`.
    pub group: String,
    /// `cofinite-identity`, `identity`, `whole` or `empty`.
    pub subset: String,
    pub samples: usize,
}

impl Default for TopologyParams {
    fn default() -> Self {
        TopologyParams { group: "d4".into(), subset: "cofinite-identity".into(), samples: 8 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HeegaardParams {
    /// Explicit splitting; wins over `random_genus` and `lens`.
    pub splitting: Option<HeegaardData>,
    /// Random splitting of this genus, drawn from the seed.
    pub random_genus: Option<usize>,
    /// `[p, q]` for the genus-one splitting of `L(p, q)`.
    pub lens: [i64; 2],
    /// Twist class; defaults to `b_1`.
    pub twist_class: Option<Vec<i64>>,
    pub primes: Vec<u64>,
    pub side: Side,
}

impl Default for HeegaardParams {
    fn default() -> Self {
        HeegaardParams {
            splitting: None,
            random_genus: None,
            lens: [5, 2],
            twist_class: None,
            primes: vec![2, 3, 5],
            side: Side::Right,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FareyParams {
    pub a: Option<Slope>,
    pub b: Option<Slope>,
    pub c: Option<Slope>,
    /// Height bound for slopes drawn from the seed.
    pub max_height: i64,
}

impl Default for FareyParams {
    fn default() -> Self {
        FareyParams { a: None, b: None, c: None, max_height: 10 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FixedClassParams {
    pub genus: usize,
    /// Defaults to the alternating chain product.
    pub word: Option<TwistWord>,
    /// Defaults to `a_1`.
    pub class: Option<Vec<i64>>,
}

impl Default for FixedClassParams {
    fn default() -> Self {
        FixedClassParams { genus: 1, word: None, class: None }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SnfParams {
    pub matrix: Option<IntMatrix>,
}

impl Default for SnfParams {
    fn default() -> Self {
        SnfParams { matrix: Some(twistlab::linalg::Matrix::from_i64_rows(&[[2, 4], [6, 8]])) }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub kind: Option<Kind>,
    pub seed: u64,
    pub window: WindowConfig,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub topology: TopologyParams,
    pub heegaard: HeegaardParams,
    pub farey: FareyParams,
    pub fixed_class: FixedClassParams,
    pub snf: SnfParams,
}

impl ExperimentConfig {
    /// Reads TOML for a `.toml` extension and JSON otherwise.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let is_toml = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("toml"));
        if is_toml {
            toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
        } else {
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
        }
    }

    pub fn window(&self) -> Result<Window> {
        Window::new(self.window.radius, self.window.rho).context("invalid window")
    }

    pub fn validate(&self, kind: Kind) -> Result<()> {
        if let Some(k) = self.kind {
            if k != kind {
                bail!("config is for {}, not {}", k.name(), kind.name());
            }
        }
        self.window()?;
        if let Some(&p) = self.heegaard.primes.iter().find(|&&p| !is_prime(p)) {
            bail!("{p} is not prime");
        }
        if self.format == Format::Both && self.out.is_none() {
            bail!("--format both needs --out");
        }
        Ok(())
    }

    /// The part of the configuration that determines the result, embedded in
    /// every report.
    pub fn effective(&self, kind: Kind) -> serde_json::Value {
        let params = match kind {
            Kind::TopologyProbe => serde_json::to_value(&self.topology),
            Kind::HeegaardScan => serde_json::to_value(&self.heegaard),
            Kind::FareyScan => serde_json::to_value(&self.farey),
            Kind::FixedClassScan => serde_json::to_value(&self.fixed_class),
            Kind::Snf => serde_json::to_value(&self.snf),
        }
        .expect("parameters serialize");
        serde_json::json!({
            "kind": kind.name(),
            "seed": self.seed,
            "window": self.window,
            "params": params,
        })
    }
}
