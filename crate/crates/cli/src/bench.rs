//! Timing harness over the generator suites; writes CSV.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use tri_inscribe::oracle::{gen_lower_bound_fixture, gen_random_convex, gen_random_simple, FixtureKind};
use tri_inscribe::Polygon;

use crate::solve::{run_solver, SolveRequest, VariantName};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Convex,
    Simple,
    Fixtures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    ArcCluster,
    Cubic,
}

/// Suite member of size `n`; fixtures ignore the seed.
pub fn generate_polygon(suite: Suite, fixture: Fixture, n: usize, seed: u64) -> Polygon {
    match suite {
        Suite::Convex => gen_random_convex(n, seed),
        Suite::Simple => gen_random_simple(n, seed),
        Suite::Fixtures => {
            let kind = match fixture {
                Fixture::ArcCluster => FixtureKind::ArcCluster,
                Fixture::Cubic => FixtureKind::Cubic,
            };
            gen_lower_bound_fixture(kind, n)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchPlan {
    pub suite: Suite,
    pub fixture: Fixture,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    /// Empty means the suite's default variant.
    pub variants: Vec<VariantName>,
    pub alpha: f64,
    pub beta: f64,
    pub eps: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub variant: &'static str,
    pub n: usize,
    pub seed: u64,
    pub area: f64,
    /// Seconds.
    pub wall_time: f64,
    pub candidates: u64,
}

impl BenchPlan {
    fn default_variants(&self) -> Vec<VariantName> {
        match (self.suite, self.fixture) {
            (Suite::Convex, _) | (Suite::Fixtures, Fixture::ArcCluster) => vec![VariantName::ConvexAbRot],
            (Suite::Fixtures, Fixture::Cubic) => vec![VariantName::ConvexARot],
            (Suite::Simple, _) => vec![VariantName::SimpleAbAxis],
        }
    }

    fn polygon(&self, n: usize, seed: u64) -> Polygon {
        generate_polygon(self.suite, self.fixture, n, seed)
    }

    pub fn rows(&self) -> impl Iterator<Item = Result<BenchRow, CliError>> + '_ {
        let variants = if self.variants.is_empty() { self.default_variants() } else { self.variants.clone() };
        self.sizes.iter().flat_map(move |&n| {
            let variants = variants.clone();
            self.seeds.iter().flat_map(move |&seed| {
                let poly = self.polygon(n, seed);
                variants.clone().into_iter().map(move |v| {
                    let mut req = SolveRequest::new(v, self.alpha);
                    req.beta = v.needs_beta().then_some(self.beta);
                    req.eps = v.needs_eps().then_some(self.eps);
                    let r = run_solver(&poly, &req)?;
                    Ok(BenchRow {
                        variant: v.name(),
                        n,
                        seed,
                        area: r.area,
                        wall_time: r.stats.wall_time,
                        candidates: r.stats.candidates_evaluated,
                    })
                })
            })
        })
    }

    /// Header is always written, even with no sizes.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
        let io = |e: csv::Error| CliError::Io(e.to_string());
        w.write_record(["variant", "n", "seed", "area", "wall_time", "candidates"]).map_err(io)?;
        for row in self.rows() {
            w.serialize(row?).map_err(io)?;
            w.flush().map_err(|e| CliError::Io(e.to_string()))?;
        }
        w.flush().map_err(|e| CliError::Io(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(sizes: Vec<usize>) -> BenchPlan {
        BenchPlan {
            suite: Suite::Convex,
            fixture: Fixture::ArcCluster,
            sizes,
            seeds: vec![1, 2],
            variants: vec![],
            alpha: 1.0,
            beta: 1.0,
            eps: 0.1,
        }
    }

    #[test]
    fn empty_sizes_give_header_only() {
        let mut buf = Vec::new();
        plan(vec![]).write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "variant,n,seed,area,wall_time,candidates\n");
    }

    #[test]
    fn one_row_per_size_and_seed() {
        let mut buf = Vec::new();
        plan(vec![6, 8]).write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 5);
        assert!(text.lines().nth(1).unwrap().starts_with("convex-ab-rot,6,1,"));
    }
}
