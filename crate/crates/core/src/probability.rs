//! Code-space probability model and draw simulation.
//!
//! A dataset is imagined to have a finite space of valid codes. Coding one
//! interview draws `draw_size` distinct codes from it; the unique codebook is
//! the set of codes seen so far. [`expected_unique`] is the analytic mean of
//! that process and the oracle for [`simulate_code_space`].

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ProbabilityError {
    #[error("domain error: {0}")]
    DomainError(String),
}

fn domain(msg: String) -> ProbabilityError {
    ProbabilityError::DomainError(msg)
}

/// Probability that at least one of `codes_next_interview` new codes falls
/// outside the `unique_codes` already seen: `1 - (unique/space)^codes`.
pub fn p_at_least_one_unique(
    unique_codes: u64,
    code_space: u64,
    codes_next_interview: u32,
) -> Result<f64, ProbabilityError> {
    if unique_codes < 1 || codes_next_interview < 1 {
        return Err(domain(
            "unique_codes and codes_next_interview must be at least 1".into(),
        ));
    }
    if code_space < unique_codes {
        return Err(domain(format!(
            "code space {code_space} is smaller than the {unique_codes} codes already seen"
        )));
    }
    let seen = unique_codes as f64 / code_space as f64;
    // 1 - x^n loses precision near x = 1; -expm1(n ln x) does not.
    Ok(-(f64::from(codes_next_interview) * seen.ln()).exp_m1())
}

/// [`p_at_least_one_unique`] over every space size in `spaces`.
pub fn probability_curve(
    unique_codes: u64,
    codes_next_interview: u32,
    spaces: std::ops::RangeInclusive<u64>,
) -> Result<Vec<(u64, f64)>, ProbabilityError> {
    if *spaces.start() < unique_codes {
        return Err(domain(format!(
            "curve starts at space {}, below the {unique_codes} codes already seen",
            spaces.start()
        )));
    }
    spaces
        .map(|s| p_at_least_one_unique(unique_codes, s, codes_next_interview).map(|p| (s, p)))
        .collect()
}

/// Mean unique count after `iterations` draws of `draw_size` distinct codes:
/// `space * (1 - (1 - draw/space)^iterations)`.
pub fn expected_unique(
    code_space: u64,
    iterations: u32,
    draw_size: u64,
) -> Result<f64, ProbabilityError> {
    if code_space < 1 || draw_size < 1 {
        return Err(domain("code_space and draw_size must be at least 1".into()));
    }
    if draw_size > code_space {
        return Err(domain(format!(
            "draw size {draw_size} exceeds code space {code_space}"
        )));
    }
    let space = code_space as f64;
    let miss = 1.0 - draw_size as f64 / space;
    Ok(space * (1.0 - miss.powi(iterations as i32)))
}

/// Same mean when each of the `iterations * draw_size` picks is independent
/// (sampling with replacement): `space * (1 - (1 - 1/space)^(iterations*draw))`.
pub fn expected_unique_with_replacement(
    code_space: u64,
    iterations: u32,
    draw_size: u64,
) -> Result<f64, ProbabilityError> {
    if code_space < 1 || draw_size < 1 {
        return Err(domain("code_space and draw_size must be at least 1".into()));
    }
    let space = code_space as f64;
    let picks = iterations as f64 * draw_size as f64;
    Ok(space * (1.0 - (1.0 - 1.0 / space).powf(picks)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationConfig {
    pub code_space: u64,
    pub iterations: u32,
    pub draw_size: u64,
    pub replications: u32,
    pub seed: u64,
    /// Draw each code independently instead of `draw_size` distinct codes.
    #[serde(default)]
    pub with_replacement: bool,
}

impl SimulationConfig {
    pub fn new(
        code_space: u64,
        iterations: u32,
        draw_size: u64,
        replications: u32,
        seed: u64,
    ) -> Self {
        Self {
            code_space,
            iterations,
            draw_size,
            replications,
            seed,
            with_replacement: false,
        }
    }

    pub fn validate(&self) -> Result<(), ProbabilityError> {
        if self.code_space < 1 || self.iterations < 1 || self.draw_size < 1 || self.replications < 1
        {
            return Err(domain(
                "code_space, iterations, draw_size and replications must be at least 1".into(),
            ));
        }
        if self.draw_size > self.code_space {
            return Err(domain(format!(
                "draw size {} exceeds code space {}",
                self.draw_size, self.code_space
            )));
        }
        if self.code_space > usize::MAX as u64 {
            return Err(domain("code space too large".into()));
        }
        Ok(())
    }

    /// Analytic mean unique count after `iteration` draws under this config.
    pub fn expected_unique_after(&self, iteration: u32) -> Result<f64, ProbabilityError> {
        if self.with_replacement {
            expected_unique_with_replacement(self.code_space, iteration, self.draw_size)
        } else {
            expected_unique(self.code_space, iteration, self.draw_size)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationStats {
    pub iteration: u32,
    pub mean_total: f64,
    pub mean_unique: f64,
    /// Sample standard deviation across replications.
    pub stddev_unique: f64,
}

impl IterationStats {
    pub fn std_error(&self, replications: u32) -> f64 {
        self.stddev_unique / f64::from(replications).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationResult {
    pub config: SimulationConfig,
    pub per_iteration: Vec<IterationStats>,
}

/// Unique-count trajectory of one replication. Replication `r` draws from
/// its own ChaCha stream `r` under `config.seed`, so trajectories do not
/// depend on scheduling.
pub fn simulate_replication(config: &SimulationConfig, replication: u32) -> Vec<u64> {
    let space = config.code_space as usize;
    let draw = config.draw_size as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(u64::from(replication));
    let mut seen = vec![false; space];
    let mut unique = 0u64;
    let mut trajectory = Vec::with_capacity(config.iterations as usize);
    let mut mark = |code: usize, unique: &mut u64| {
        if !seen[code] {
            seen[code] = true;
            *unique += 1;
        }
    };
    for _ in 0..config.iterations {
        if config.with_replacement {
            for _ in 0..draw {
                mark(rng.random_range(0..space), &mut unique);
            }
        } else {
            for code in index::sample(&mut rng, space, draw) {
                mark(code, &mut unique);
            }
        }
        trajectory.push(unique);
    }
    trajectory
}

/// Monte Carlo over `config.replications` independent replications.
pub fn simulate_code_space(
    config: &SimulationConfig,
) -> Result<SimulationResult, ProbabilityError> {
    config.validate()?;
    let trajectories: Vec<Vec<u64>> = (0..config.replications)
        .into_par_iter()
        .map(|r| simulate_replication(config, r))
        .collect();
    let n = f64::from(config.replications);
    let per_iteration = (0..config.iterations as usize)
        .map(|i| {
            let mean = trajectories.iter().map(|t| t[i] as f64).sum::<f64>() / n;
            let var = if config.replications > 1 {
                trajectories
                    .iter()
                    .map(|t| (t[i] as f64 - mean).powi(2))
                    .sum::<f64>()
                    / (n - 1.0)
            } else {
                0.0
            };
            IterationStats {
                iteration: i as u32 + 1,
                mean_total: ((i + 1) as u64 * config.draw_size) as f64,
                mean_unique: mean,
                stddev_unique: var.sqrt(),
            }
        })
        .collect();
    Ok(SimulationResult {
        config: config.clone(),
        per_iteration,
    })
}
