//! Summary statistics over a finished run.
//!
//! Time averages run over `frames[burn_in..]`. The Gini index uses the number
//! of agents as its sample size, not the resistor count.

use crate::engine::{RunResult, StepFrame};
use crate::error::{Error, Result};
use crate::params::Strategy;

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    /// Mean fraction of cooperating agents.
    pub c_avg: f64,
    /// Delivered power relative to the optimum N * P_typ / 4.
    pub p_util: f64,
    pub gini: f64,
    /// Time mean of the average resistor count per agent.
    pub a_avg_mean: f64,
    /// Time-averaged power of each agent.
    pub p_i_avg: Vec<f64>,
}

impl MetricsReport {
    pub fn from_run(run: &RunResult, burn_in: usize) -> Result<Self> {
        let p_i_avg = time_avg_power(&run.frames, burn_in)?;
        let p_typ = run.params.p_typ();
        Ok(MetricsReport {
            c_avg: avg_cooperation(&run.frames, burn_in)?,
            p_util: power_utilisation(&p_i_avg, p_typ),
            gini: gini_index(&p_i_avg)?,
            a_avg_mean: mean_a_avg(&run.frames, burn_in)?,
            p_i_avg,
        })
    }
}

fn retained(frames: &[StepFrame], burn_in: usize) -> Result<&[StepFrame]> {
    if burn_in >= frames.len() {
        return Err(Error::domain(format!(
            "burn-in {burn_in} leaves no frame out of {}",
            frames.len()
        )));
    }
    Ok(&frames[burn_in..])
}

/// Fraction of agents in state `s`, one value per frame.
pub fn strategy_fraction(frame: &StepFrame, s: Strategy) -> f64 {
    frame.count(s) as f64 / frame.strategies.len() as f64
}

/// Spatio-temporal mean fraction of cooperators.
pub fn avg_cooperation(frames: &[StepFrame], burn_in: usize) -> Result<f64> {
    let kept = retained(frames, burn_in)?;
    let total: f64 = kept
        .iter()
        .map(|f| strategy_fraction(f, Strategy::Cooperate))
        .sum();
    Ok(total / kept.len() as f64)
}

/// Per-agent arithmetic mean of the power over the retained frames.
pub fn time_avg_power(frames: &[StepFrame], burn_in: usize) -> Result<Vec<f64>> {
    let kept = retained(frames, burn_in)?;
    let mut sums = vec![0.0; kept[0].power.len()];
    for f in kept {
        for (s, p) in sums.iter_mut().zip(&f.power) {
            *s += p;
        }
    }
    let t = kept.len() as f64;
    Ok(sums.into_iter().map(|s| s / t).collect())
}

pub fn mean_a_avg(frames: &[StepFrame], burn_in: usize) -> Result<f64> {
    let kept = retained(frames, burn_in)?;
    Ok(kept.iter().map(|f| f.a_avg).sum::<f64>() / kept.len() as f64)
}

/// `4 * sum(P_i_avg) / (N * P_typ)`; exactly 1 when every agent sits at the optimum.
pub fn power_utilisation(p_i_avg: &[f64], p_typ: f64) -> f64 {
    if p_i_avg.is_empty() {
        return 0.0;
    }
    4.0 * p_i_avg.iter().sum::<f64>() / (p_i_avg.len() as f64 * p_typ)
}

/// Gini index of non-negative values: 0 for equality, approaching 1 when a
/// single value holds everything.
pub fn gini_index(values: &[f64]) -> Result<f64> {
    let total: f64 = values.iter().sum();
    if values.is_empty() || !(total > 0.0) {
        return Err(Error::domain("Gini index needs at least one positive value"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let ranked: f64 = sorted
        .iter()
        .enumerate()
        .map(|(i, x)| (i + 1) as f64 * x)
        .sum();
    Ok(2.0 / n * ranked / total - (n + 1.0) / n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(strategies: &[i64], power: &[f64]) -> StepFrame {
        StepFrame {
            t: 0,
            strategies: strategies.iter().map(|&v| Strategy::from_value(v).unwrap()).collect(),
            a: vec![1; strategies.len()],
            power: power.to_vec(),
            n: strategies.len() as u64,
            a_avg: 1.0,
        }
    }

    /// Mean absolute difference over all ordered pairs.
    fn gini_mad(x: &[f64]) -> f64 {
        let n = x.len() as f64;
        let mean = x.iter().sum::<f64>() / n;
        let mut s = 0.0;
        for a in x {
            for b in x {
                s += (a - b).abs();
            }
        }
        s / (2.0 * n * n * mean)
    }

    #[test]
    fn cooperation_averages() {
        let all_c = vec![frame(&[-1, -1], &[1.0, 1.0]); 3];
        assert_eq!(avg_cooperation(&all_c, 0).unwrap(), 1.0);
        let none = vec![frame(&[0, 1], &[1.0, 1.0]); 3];
        assert_eq!(avg_cooperation(&none, 0).unwrap(), 0.0);
        let mixed = vec![frame(&[-1, 0], &[1.0, 1.0]), frame(&[-1, -1], &[1.0, 1.0])];
        assert_eq!(avg_cooperation(&mixed, 0).unwrap(), 0.75);
        assert_eq!(avg_cooperation(&mixed, 1).unwrap(), 1.0);
        assert!(avg_cooperation(&mixed, 2).is_err());
    }

    #[test]
    fn fractions_sum_to_one() {
        let f = frame(&[-1, 0, 1, 1, -1, 0, 0], &[1.0; 7]);
        let total: f64 = Strategy::ALL.iter().map(|&s| strategy_fraction(&f, s)).sum();
        assert!((total - 1.0).abs() < 1e-15);
    }

    #[test]
    fn power_averages() {
        let constant = vec![frame(&[0], &[0.3]); 4];
        assert_eq!(time_avg_power(&constant, 0).unwrap(), vec![0.3]);
        let alt: Vec<_> = (0..10).map(|t| frame(&[0], &[if t % 2 == 0 { 1.0 } else { 3.0 }])).collect();
        assert_eq!(time_avg_power(&alt, 0).unwrap(), vec![2.0]);
    }

    #[test]
    fn power_average_matches_streaming_mean() {
        use rand::Rng;
        let mut rng = crate::rng::substream(8, crate::rng::Stream::Dynamics);
        let frames: Vec<_> = (0..777)
            .map(|_| {
                let p: Vec<f64> = (0..5).map(|_| rng.gen::<f64>() * 0.2 + 1e-4).collect();
                frame(&[0; 5], &p)
            })
            .collect();
        let got = time_avg_power(&frames, 13).unwrap();
        // Welford running mean
        let mut mean = vec![0.0; 5];
        for (k, f) in frames[13..].iter().enumerate() {
            for (m, p) in mean.iter_mut().zip(&f.power) {
                *m += (p - *m) / (k + 1) as f64;
            }
        }
        for (g, m) in got.iter().zip(&mean) {
            assert!((g - m).abs() / m < 1e-12);
        }
    }

    #[test]
    fn utilisation_at_optimum_is_one() {
        let p_typ = 0.5;
        assert!((power_utilisation(&[p_typ / 4.0; 7], p_typ) - 1.0).abs() < 1e-15);
        assert_eq!(power_utilisation(&[0.0; 3], p_typ), 0.0);
    }

    #[test]
    fn gini_examples() {
        assert_eq!(gini_index(&[2.0; 5]).unwrap(), 0.0);
        assert!((gini_index(&[1.0, 3.0]).unwrap() - 0.25).abs() < 1e-15);
        assert!((gini_mad(&[1.0, 3.0]) - 0.25).abs() < 1e-15);
        for n in [10usize, 100, 10_000] {
            let mut v = vec![0.0; n];
            v[n - 1] = 1.0;
            let g = gini_index(&v).unwrap();
            assert!((g - (n as f64 - 1.0) / n as f64).abs() < 1e-12);
        }
        assert!(gini_index(&[0.0, 0.0]).is_err());
        assert!(gini_index(&[]).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn gini_agrees_with_mean_difference(v in prop::collection::vec(0.0f64..10.0, 1..60)) {
                prop_assume!(v.iter().sum::<f64>() > 1e-9);
                let g = gini_index(&v).unwrap();
                prop_assert!((g - gini_mad(&v)).abs() < 1e-9);
                prop_assert!((-1e-12..=1.0).contains(&g));
            }
        }
    }
}
