use std::time::Duration;

use serde::Serialize;

/// Internal counters of a run.
///
/// * `c_pair` – critical pairs handed out by `Select`
/// * `l_matrix` – largest number of rows in any reduction matrix
/// * `reductor` – reducer rows appended by symbolic preprocessing (seed rows excluded)
/// * `round` – number of reduction rounds
/// * `solved` – variables fixed by middle solving
/// * `h_deg_gb`, `gb_size` – maximal degree and size of the reduced basis
/// * `*_unreduced` – the same two quantities for the live basis before interreduction
/// * `r_time` – time spent in the reduction step (S-polynomials and normal forms included)
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub c_pair: usize,
    pub l_matrix: usize,
    pub reductor: usize,
    pub round: usize,
    pub solved: usize,
    pub h_deg_gb: u32,
    pub gb_size: usize,
    pub h_deg_gb_unreduced: u32,
    pub gb_size_unreduced: usize,
    pub r_time: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatEvent {
    PairsSelected(usize),
    MatrixBuilt { rows: usize },
    ReducerAppended,
    RoundCompleted,
    VariableSolved,
    ReductionTime(Duration),
}

impl RunStats {
    pub fn record(&mut self, event: StatEvent) {
        match event {
            StatEvent::PairsSelected(k) => self.c_pair += k,
            StatEvent::MatrixBuilt { rows } => self.l_matrix = self.l_matrix.max(rows),
            StatEvent::ReducerAppended => self.reductor += 1,
            StatEvent::RoundCompleted => self.round += 1,
            StatEvent::VariableSolved => self.solved += 1,
            StatEvent::ReductionTime(d) => self.r_time += d,
        }
    }

    /// Equality of every counter except `solved` and the timer.
    pub fn same_work(&self, other: &RunStats) -> bool {
        let strip = |s: &RunStats| RunStats {
            solved: 0,
            r_time: Duration::ZERO,
            ..s.clone()
        };
        strip(self) == strip(other)
    }
}

/// Flat JSON record of a run.
#[derive(Clone, Debug, Serialize)]
pub struct StatsReport {
    pub c_pair: usize,
    pub l_matrix: usize,
    pub reductor: usize,
    pub round: usize,
    pub solved: usize,
    pub h_deg_gb: u32,
    pub gb_size: usize,
    pub r_time_ms: f64,
    pub algorithm: String,
    pub order: String,
    pub n_vars: usize,
    pub n_eqs: usize,
    pub seed: Option<u64>,
    pub gb_size_unreduced: usize,
    pub h_deg_gb_unreduced: u32,
}

impl StatsReport {
    pub fn new(stats: &RunStats, algorithm: &str, order: &str, n_vars: usize, n_eqs: usize, seed: Option<u64>) -> Self {
        StatsReport {
            c_pair: stats.c_pair,
            l_matrix: stats.l_matrix,
            reductor: stats.reductor,
            round: stats.round,
            solved: stats.solved,
            h_deg_gb: stats.h_deg_gb,
            gb_size: stats.gb_size,
            r_time_ms: stats.r_time.as_secs_f64() * 1e3,
            algorithm: algorithm.to_string(),
            order: order.to_string(),
            n_vars,
            n_eqs,
            seed,
            gb_size_unreduced: stats.gb_size_unreduced,
            h_deg_gb_unreduced: stats.h_deg_gb_unreduced,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_counts_accumulate() {
        let mut s = RunStats::default();
        s.record(StatEvent::PairsSelected(3));
        s.record(StatEvent::PairsSelected(5));
        assert_eq!(s.c_pair, 8);
    }

    #[test]
    fn largest_matrix_kept() {
        let mut s = RunStats::default();
        s.record(StatEvent::MatrixBuilt { rows: 10 });
        s.record(StatEvent::MatrixBuilt { rows: 7 });
        assert_eq!(s.l_matrix, 10);
        assert_eq!(s.solved, 0);
    }

    #[test]
    fn json_keys() {
        let r = StatsReport::new(&RunStats::default(), "ms-f4", "grevlex", 3, 2, Some(7));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in [
            "c_pair",
            "l_matrix",
            "reductor",
            "round",
            "solved",
            "h_deg_gb",
            "gb_size",
            "r_time_ms",
            "algorithm",
            "order",
            "n_vars",
            "n_eqs",
            "seed",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["seed"], 7);
    }
}
