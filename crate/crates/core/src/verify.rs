//! Named verification suites. Each produces one [`Check`] per length (or per
//! construction triple) so failures point at a concrete case.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{theorem_lower_bound, theorem_upper_bound, verify_lemma4};
use crate::error::{Error, Result};
use crate::extremal::{paper_table, sd_max, SearchConfig};
use crate::game::{g1_with, paper_strategy_word, GameSolver, Mover, G1_MAX_LEN};
use crate::subseq::{brute_force_sd, las_length, lps_length, sd, BRUTE_FORCE_MAX_LEN};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemma4,
    Bounds,
    Oracle,
    Peeling,
    Invariance,
    Game,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Lemma4,
        Suite::Bounds,
        Suite::Oracle,
        Suite::Peeling,
        Suite::Invariance,
        Suite::Game,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma4 => "lemma4",
            Suite::Bounds => "bounds",
            Suite::Oracle => "oracle",
            Suite::Peeling => "peeling",
            Suite::Invariance => "invariance",
            Suite::Game => "game",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Lemma4 => 4,
            Suite::Bounds => 20,
            Suite::Oracle => 14,
            Suite::Peeling => 14,
            Suite::Invariance => 12,
            Suite::Game => 10,
        }
    }

    /// Largest accepted `--max-n`.
    pub fn max_n_limit(self) -> usize {
        match self {
            Suite::Lemma4 => 7,
            Suite::Bounds => crate::extremal::DEFAULT_MAX_SEARCH_LEN,
            Suite::Oracle => BRUTE_FORCE_MAX_LEN,
            Suite::Peeling => 24,
            Suite::Invariance => 20,
            Suite::Game => G1_MAX_LEN,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_suite(suite: Suite, max_n: usize, config: &SearchConfig) -> Result<SuiteReport> {
    if max_n > suite.max_n_limit() {
        return Err(Error::LengthBudgetExceeded {
            what: suite.name(),
            length: max_n,
            limit: suite.max_n_limit(),
        });
    }
    let checks = match suite {
        Suite::Lemma4 => lemma4(max_n)?,
        Suite::Bounds => bounds(max_n, config)?,
        Suite::Oracle => oracle(max_n)?,
        Suite::Peeling => peeling(max_n),
        Suite::Invariance => invariance(max_n, config)?,
        Suite::Game => game(max_n)?,
    };
    Ok(SuiteReport {
        suite,
        max_n,
        checks,
    })
}

fn lemma4(max_n: usize) -> Result<Vec<Check>> {
    Ok(verify_lemma4(max_n as u32, true)?
        .into_iter()
        .map(|c| {
            Check::new(
                format!(
                    "construction n={} alpha={} beta={}",
                    c.params.n, c.params.alpha, c.params.beta
                ),
                c.passed,
                format!(
                    "length {} bound {} computed {}",
                    c.length, c.bound, c.computed
                ),
            )
        })
        .collect())
}

fn bounds(max_n: usize, config: &SearchConfig) -> Result<Vec<Check>> {
    let published = paper_table();
    let mut out = Vec::new();
    for n in 2..=max_n {
        let row = sd_max(n, config)?;
        let lower = theorem_lower_bound(n)?;
        let upper = theorem_upper_bound(n);
        let mut passed = lower <= row.sd_n && row.sd_n <= upper;
        let mut detail = format!("{lower} <= S_d({n}) = {} <= {upper}", row.sd_n);
        if let Some(&p) = published.get(&n) {
            passed &= row.sd_n == lower && row.sd_n == p;
            detail.push_str(&format!(", lower bound exact, published {p}"));
        }
        out.push(Check::new(format!("bounds n={n}"), passed, detail));
    }
    Ok(out)
}

fn oracle(max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for len in 0..=max_n {
        let mut bad = None;
        for w in Word::all_of_length(len) {
            if sd(w).value != brute_force_sd(w)? {
                bad = Some(w);
                break;
            }
        }
        out.push(Check::new(
            format!("oracle length {len}"),
            bad.is_none(),
            match bad {
                None => format!("{} words agree", 1u64 << len),
                Some(w) => format!("first disagreement at {w}"),
            },
        ));
    }
    Ok(out)
}

fn peeling(max_n: usize) -> Vec<Check> {
    (2..=max_n)
        .map(|len| {
            let bad = Word::all_of_length(len).find(|&w| {
                if w.letter(1) == w.letter(len) {
                    lps_length(w) != 2 + lps_length(w.inner())
                } else {
                    las_length(w) != 2 + las_length(w.inner())
                }
            });
            Check::new(
                format!("peeling length {len}"),
                bad.is_none(),
                match bad {
                    None => "matching ends peel LPS, differing ends peel LAS".to_string(),
                    Some(w) => format!("fails at {w}"),
                },
            )
        })
        .collect()
}

fn invariance(max_n: usize, config: &SearchConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for len in 0..=max_n {
        let bad = Word::all_of_length(len).find(|&w| {
            let v = sd(w).value;
            v != sd(w.reverse()).value || v != sd(w.complement()).value
        });
        out.push(Check::new(
            format!("group invariance length {len}"),
            bad.is_none(),
            bad.map_or_else(String::new, |w| format!("fails at {w}")),
        ));
    }
    let unpruned = SearchConfig {
        canonical_pruning: false,
        ..config.clone()
    };
    for n in 1..=max_n {
        let a = sd_max(n, config)?.sd_n;
        let b = sd_max(n, &unpruned)?.sd_n;
        out.push(Check::new(
            format!("pruning n={n}"),
            a == b,
            format!("pruned {a}, unpruned {b}"),
        ));
    }
    Ok(out)
}

fn game(max_n: usize) -> Result<Vec<Check>> {
    let mut solver = GameSolver::new();
    let mut out = Vec::new();
    for n in 6..=max_n {
        let word = paper_strategy_word(n)?;
        let v = solver.value(word, Mover::Minimizer)?;
        let (g, arg) = g1_with(&mut solver, n)?;
        out.push(Check::new(
            format!("game n={n}"),
            v + 4 >= n && g + 4 >= n,
            format!(
                "strategy word {word} value {v}, g1 = {g} at {arg}, bound {}",
                n - 4
            ),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let cfg = SearchConfig::with_workers(2);
        for s in Suite::ALL {
            let max_n = s.default_max_n().min(9);
            let r = run_suite(s, max_n, &cfg).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.checks.iter().find(|c| !c.passed));
        }
    }

    #[test]
    fn guards() {
        let cfg = SearchConfig::default();
        assert!(run_suite(Suite::Lemma4, 8, &cfg).is_err());
        assert!(run_suite(Suite::Game, 15, &cfg).is_err());
        assert!(run_suite(Suite::Oracle, 23, &cfg).is_err());
    }
}
