//! Seeded searches for counterexamples to two open questions: whether all
//! cycles rainbow forces a rainbow kernel, and whether tournaments without
//! monochromatic triangles whose strongly connected `k`-subtournaments
//! carry at least `k - 2` colors always have one.
//!
//! Explorers only collect evidence. Each instance yields one report line,
//! and instances that pass the filter but lack a rainbow kernel are kept
//! verbatim.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::checks::{check_all_cycles_rainbow, check_fk_hypothesis};
use crate::digraph::{serialize_digraph, serialize_tournament, Vertex};
use crate::error::{Error, Result};
use crate::generators::{random_digraph, random_tournament};
use crate::kernels::{rainbow_kernel, rainbow_kernel_tournament};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExploreConfig {
    pub n_max: usize,
    pub seeds: u64,
    pub base_seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelOutcome {
    /// The instance was filtered out.
    Untested,
    Found(Vec<Vertex>),
    Missing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceRecord {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub passed_filter: bool,
    pub kernel: KernelOutcome,
    /// Serialized instance when it is a counterexample.
    pub counterexample: Option<String>,
}

impl InstanceRecord {
    /// File name used for a saved counterexample.
    pub fn instance_name(&self, prefix: &str) -> String {
        format!("{prefix}-seed-{}.txt", self.seed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExploreReport {
    pub name: &'static str,
    pub records: Vec<InstanceRecord>,
}

impl ExploreReport {
    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.passed_filter).count()
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records.iter().filter(|r| r.counterexample.is_some())
    }
}

fn validate(config: &ExploreConfig, n_min: usize) -> Result<()> {
    if config.n_max < n_min {
        return Err(Error::InvalidParameter(format!(
            "--n must be at least {n_min}, got {}",
            config.n_max
        )));
    }
    Ok(())
}

fn seeds(config: &ExploreConfig) -> Vec<u64> {
    (0..config.seeds)
        .map(|i| config.base_seed.wrapping_add(i))
        .collect()
}

/// Random digraphs on `2..=n_max` vertices, kept when every cycle is
/// rainbow, then searched for a rainbow kernel.
pub fn explore_problem1(config: &ExploreConfig) -> Result<ExploreReport> {
    validate(config, 2)?;
    let records = seeds(config)
        .into_par_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=config.n_max);
            let m = rng.gen_range(1..=n);
            let density = rng.gen_range(0.15..0.6);
            let d = random_digraph(n, m, density, rng.gen())?;
            let passed = check_all_cycles_rainbow(&d)?.is_none();
            let kernel = if passed {
                match rainbow_kernel(&d)? {
                    Some(cert) => KernelOutcome::Found(cert.kernel),
                    None => KernelOutcome::Missing,
                }
            } else {
                KernelOutcome::Untested
            };
            let counterexample = (kernel == KernelOutcome::Missing).then(|| serialize_digraph(&d));
            Ok(InstanceRecord {
                seed,
                n,
                m: d.m(),
                passed_filter: passed,
                kernel,
                counterexample,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExploreReport {
        name: "problem1",
        records,
    })
}

/// Random tournaments on `4..=n_max` vertices, kept when they have no
/// monochromatic triangle and every strongly connected `k`-subtournament
/// with `k >= 4` has at least `k - 2` colors, then searched for a rainbow
/// kernel.
pub fn explore_fk(config: &ExploreConfig) -> Result<ExploreReport> {
    validate(config, 4)?;
    let records = seeds(config)
        .into_par_iter()
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(4..=config.n_max);
            let m = rng.gen_range(2..=n);
            let t = random_tournament(n, m, rng.gen())?;
            let passed = check_fk_hypothesis(&t)?.satisfied;
            let kernel = if passed {
                match rainbow_kernel_tournament(&t) {
                    Some(v) => KernelOutcome::Found(vec![v]),
                    None => KernelOutcome::Missing,
                }
            } else {
                KernelOutcome::Untested
            };
            let counterexample =
                (kernel == KernelOutcome::Missing).then(|| serialize_tournament(&t));
            Ok(InstanceRecord {
                seed,
                n,
                m: t.m(),
                passed_filter: passed,
                kernel,
                counterexample,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExploreReport {
        name: "fk",
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::find_monochromatic_triangle;
    use crate::generators::{rainbow_tournament, t5_star};

    #[test]
    fn problem1_small_run() {
        let config = ExploreConfig {
            n_max: 6,
            seeds: 200,
            base_seed: 0,
        };
        let report = explore_problem1(&config).unwrap();
        assert_eq!(report.records.len(), 200);
        assert!(report.records.windows(2).all(|w| w[0].seed < w[1].seed));
        assert!(report.passed() > 0);
        assert_eq!(report.counterexamples().count(), 0);
        assert_eq!(report, explore_problem1(&config).unwrap());
    }

    #[test]
    fn fk_small_run() {
        let config = ExploreConfig {
            n_max: 6,
            seeds: 60,
            base_seed: 7,
        };
        let report = explore_fk(&config).unwrap();
        assert_eq!(report.records[0].seed, 7);
        for r in &report.records {
            assert_eq!(r.passed_filter, r.kernel != KernelOutcome::Untested);
        }
        assert!(explore_fk(&ExploreConfig { n_max: 3, ..config }).is_err());
    }

    #[test]
    fn fk_reference_instances() {
        let t5 = t5_star();
        assert_eq!(find_monochromatic_triangle(&t5), None);
        assert_eq!(rainbow_kernel_tournament(&t5), None);
        assert!(!check_fk_hypothesis(&t5).unwrap().satisfied);
        for seed in 0..20 {
            let r = rainbow_tournament(6, seed).unwrap();
            assert!(check_fk_hypothesis(&r).unwrap().satisfied);
            assert!(rainbow_kernel_tournament(&r).is_some());
        }
    }
}
