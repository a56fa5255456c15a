use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use tri_inscribe::approx::{fptas_ab, fptas_alpha};
use tri_inscribe::convex::{
    largest_ab_convex_rotating, largest_alpha_convex_axis, largest_alpha_convex_rotating, largest_homothet_convex,
};
use tri_inscribe::rotation::{largest_ab_simple_rotating, largest_alpha_simple_axis, largest_alpha_simple_rotating, SweepConfig};
use tri_inscribe::simple::largest_ab_simple_axis;
use tri_inscribe::{AnglePair, Error, Point, Polygon, SolveReport};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariantName {
    ConvexAbFixed,
    ConvexAbRot,
    ConvexAAxis,
    ConvexARot,
    ConvexAbFptas,
    ConvexAFptas,
    SimpleAbAxis,
    SimpleAbRot,
    SimpleAAxis,
    SimpleARot,
}

impl VariantName {
    pub fn name(self) -> &'static str {
        match self {
            Self::ConvexAbFixed => "convex-ab-fixed",
            Self::ConvexAbRot => "convex-ab-rot",
            Self::ConvexAAxis => "convex-a-axis",
            Self::ConvexARot => "convex-a-rot",
            Self::ConvexAbFptas => "convex-ab-fptas",
            Self::ConvexAFptas => "convex-a-fptas",
            Self::SimpleAbAxis => "simple-ab-axis",
            Self::SimpleAbRot => "simple-ab-rot",
            Self::SimpleAAxis => "simple-a-axis",
            Self::SimpleARot => "simple-a-rot",
        }
    }

    pub fn needs_beta(self) -> bool {
        matches!(self, Self::ConvexAbFixed | Self::ConvexAbRot | Self::ConvexAbFptas | Self::SimpleAbAxis | Self::SimpleAbRot)
    }

    pub fn needs_eps(self) -> bool {
        matches!(self, Self::ConvexAbFptas | Self::ConvexAFptas)
    }

    pub fn is_convex(self) -> bool {
        self.name().starts_with("convex")
    }

    pub fn is_sampled(self) -> bool {
        matches!(self, Self::SimpleAbRot | Self::SimpleAAxis | Self::SimpleARot)
    }
}

/// Solver input with all angles in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveRequest {
    pub variant: VariantName,
    pub alpha: f64,
    pub beta: Option<f64>,
    pub eps: Option<f64>,
    /// Base inclination for `convex-ab-fixed`.
    pub orientation: f64,
    /// Sweep settings for sampled variants; `None` picks the size default.
    pub sweep: Option<SweepConfig>,
}

impl SolveRequest {
    pub fn new(variant: VariantName, alpha: f64) -> Self {
        Self { variant, alpha, beta: None, eps: None, orientation: 0.0, sweep: None }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let v = self.variant.name();
        match (self.variant.needs_beta(), self.beta) {
            (true, None) => return Err(CliError::Validation(format!("{v} requires --beta"))),
            (false, Some(_)) => return Err(CliError::Validation(format!("{v} does not take --beta"))),
            _ => {}
        }
        match (self.variant.needs_eps(), self.eps) {
            (true, None) => return Err(CliError::Validation(format!("{v} requires --eps"))),
            (false, Some(_)) => return Err(CliError::Validation(format!("{v} does not take --eps"))),
            _ => {}
        }
        if !self.orientation.is_finite() {
            return Err(CliError::Validation("orientation must be finite".into()));
        }
        Ok(())
    }
}

pub fn run_solver(poly: &Polygon, req: &SolveRequest) -> Result<SolveReport<f64>, CliError> {
    req.validate()?;
    if req.variant.is_convex() {
        poly.require_convex()?;
    }
    solve_valid(poly, req)
}

/// Like [`run_solver`], but vertex indices in convexity errors refer to
/// `input`, the vertex list as read (possibly clockwise).
pub fn run_solver_on_input(input: &[Point], poly: &Polygon, req: &SolveRequest) -> Result<SolveReport<f64>, CliError> {
    req.validate()?;
    if req.variant.is_convex() {
        if let Err(Error::NotConvex(i)) = poly.require_convex() {
            let at = poly.vertex(i);
            let index = input.iter().position(|&v| v == at).unwrap_or(i);
            return Err(Error::NotConvex(index).into());
        }
    }
    solve_valid(poly, req)
}

fn solve_valid(poly: &Polygon, req: &SolveRequest) -> Result<SolveReport<f64>, CliError> {
    let ab = || AnglePair::new(req.alpha, req.beta.unwrap_or_default());
    let eps = req.eps.unwrap_or_default();
    let sweep = req.sweep.unwrap_or_else(|| SweepConfig::for_size(poly.len()));
    let report = match req.variant {
        VariantName::ConvexAbFixed => largest_homothet_convex(poly, ab()?, req.orientation),
        VariantName::ConvexAbRot => largest_ab_convex_rotating(poly, ab()?),
        VariantName::ConvexAAxis => largest_alpha_convex_axis(poly, req.alpha),
        VariantName::ConvexARot => largest_alpha_convex_rotating(poly, req.alpha),
        VariantName::ConvexAbFptas => fptas_ab(poly, ab()?, eps),
        VariantName::ConvexAFptas => fptas_alpha(poly, req.alpha, eps),
        VariantName::SimpleAbAxis => largest_ab_simple_axis(poly, ab()?),
        VariantName::SimpleAbRot => largest_ab_simple_rotating(poly, ab()?, sweep),
        VariantName::SimpleAAxis => largest_alpha_simple_axis(poly, req.alpha, sweep),
        VariantName::SimpleARot => largest_alpha_simple_rotating(poly, req.alpha, sweep),
    }?;
    Ok(report)
}
