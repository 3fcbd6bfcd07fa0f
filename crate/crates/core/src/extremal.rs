//! Exhaustive computation of `S_d(n)`, the largest deletion distance over all
//! words of length `n`.
//!
//! Reversal and complement preserve `S_d`, so only orbit-canonical words are
//! evaluated. The integer range `0..2^n` is split into contiguous chunks, one
//! per worker; partial results are merged in chunk order, which makes the
//! output independent of the worker count.

use std::collections::BTreeMap;
use std::num::NonZeroUsize;
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bounds::{theorem_lower_bound, theorem_upper_bound};
use crate::error::{Error, Result};
use crate::subseq::symmetric_subsequence_lengths;
use crate::word::Word;

/// Default enumeration guard.
pub const DEFAULT_MAX_SEARCH_LEN: usize = 28;

/// Published values of `S_d(n)` for `n = 1..=20`.
const PUBLISHED: [usize; 20] = [0, 0, 1, 1, 1, 2, 2, 2, 3, 4, 4, 4, 5, 5, 5, 6, 7, 7, 7, 8];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdTableRow {
    pub n: usize,
    #[serde(rename = "sd")]
    pub sd_n: usize,
    /// `None` for `n < 2`, where the lower-bound formula is not stated.
    pub lower: Option<usize>,
    pub upper: usize,
    /// Canonical extremal words in increasing order, capped by the config.
    pub extremal: Vec<Word>,
    #[serde(skip)]
    pub words_scanned: u64,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub worker_count: NonZeroUsize,
    pub extremal_limit: usize,
    /// Report progress to stderr at most this often.
    pub progress_interval: Option<Duration>,
    pub max_length: usize,
    /// Skip words that are not orbit-canonical. Disabled only to check that
    /// the pruning is sound.
    pub canonical_pruning: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            worker_count: NonZeroUsize::MIN,
            extremal_limit: 8,
            progress_interval: None,
            max_length: DEFAULT_MAX_SEARCH_LEN,
            canonical_pruning: true,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(workers: usize) -> Self {
        SearchConfig {
            worker_count: NonZeroUsize::new(workers).unwrap_or(NonZeroUsize::MIN),
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Default)]
struct Partial {
    best: usize,
    extremal: Vec<Word>,
    scanned: u64,
}

fn scan_range(n: usize, start: u64, end: u64, config: &SearchConfig, report: bool) -> Partial {
    let mut part = Partial::default();
    let limit = config.extremal_limit;
    let started = Instant::now();
    let mut last_report = started;
    for bits in start..end {
        let word = Word::from_bits_unchecked(bits, n);
        if config.canonical_pruning && !word.is_canonical() {
            continue;
        }
        part.scanned += 1;
        let (lps, las) = symmetric_subsequence_lengths(word);
        let value = n - lps.max(las);
        if value > part.best {
            part.best = value;
            part.extremal.clear();
        }
        if value == part.best && part.extremal.len() < limit {
            let canonical = word.canonical_form();
            if !part.extremal.contains(&canonical) {
                part.extremal.push(canonical);
            }
        }
        if report && part.scanned % (1 << 16) == 0 {
            if let Some(every) = config.progress_interval {
                let now = Instant::now();
                if now - last_report >= every {
                    last_report = now;
                    eprintln!(
                        "n={n}: {:.1}% of first chunk, best so far {}",
                        100.0 * (bits - start) as f64 / (end - start) as f64,
                        part.best
                    );
                }
            }
        }
    }
    part
}

/// Exact `S_d(n)` together with its bounds and a sample of extremal words.
pub fn sd_max(n: usize, config: &SearchConfig) -> Result<SdTableRow> {
    if n < 1 {
        return Err(Error::Domain {
            what: "sd_max",
            n: n as i64,
            min: 1,
        });
    }
    if n > config.max_length {
        return Err(Error::LengthBudgetExceeded {
            what: "exhaustive search",
            length: n,
            limit: config.max_length,
        });
    }
    let total = 1u64 << n;
    let workers = (config.worker_count.get() as u64).min(total);
    let chunk = total.div_ceil(workers);
    let partials: Vec<Partial> = if workers == 1 {
        vec![scan_range(n, 0, total, config, true)]
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|k| {
                    let start = k * chunk;
                    let end = ((k + 1) * chunk).min(total);
                    s.spawn(move || scan_range(n, start, end, config, k == 0))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };

    let best = partials.iter().map(|p| p.best).max().unwrap_or(0);
    let mut extremal: Vec<Word> = partials
        .iter()
        .filter(|p| p.best == best)
        .flat_map(|p| p.extremal.iter().copied())
        .collect();
    extremal.sort();
    extremal.dedup();
    extremal.truncate(config.extremal_limit);

    Ok(SdTableRow {
        n,
        sd_n: best,
        lower: theorem_lower_bound(n).ok(),
        upper: theorem_upper_bound(n),
        extremal,
        words_scanned: partials.iter().map(|p| p.scanned).sum(),
    })
}

pub fn compute_table(n_min: usize, n_max: usize, config: &SearchConfig) -> Result<Vec<SdTableRow>> {
    if n_min > n_max {
        return Err(Error::Domain {
            what: "compute_table upper end",
            n: n_max as i64,
            min: n_min as i64,
        });
    }
    if n_max > config.max_length {
        return Err(Error::LengthBudgetExceeded {
            what: "exhaustive search",
            length: n_max,
            limit: config.max_length,
        });
    }
    (n_min..=n_max).map(|n| sd_max(n, config)).collect()
}

/// The published table of `S_d(n)` for `1 <= n <= 20`.
pub fn paper_table() -> BTreeMap<usize, usize> {
    PUBLISHED
        .iter()
        .enumerate()
        .map(|(i, &v)| (i + 1, v))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: usize,
    pub computed: usize,
    pub published: usize,
}

/// Rows whose `n` is covered by the published table but disagree with it.
pub fn compare_with_paper(rows: &[SdTableRow]) -> Vec<Mismatch> {
    let table = paper_table();
    rows.iter()
        .filter_map(|r| {
            let &published = table.get(&r.n)?;
            (published != r.sd_n).then_some(Mismatch {
                n: r.n,
                computed: r.sd_n,
                published,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subseq::{brute_force_sd, sd};
    use crate::word::parse_word;

    #[test]
    fn published_table_values() {
        let t = paper_table();
        assert_eq!(t.len(), 20);
        assert_eq!(t[&10], 4);
        assert_eq!(t[&17], 7);
        assert_eq!(t[&1], 0);
    }

    #[test]
    fn small_rows() {
        let cfg = SearchConfig::default();
        assert_eq!(sd_max(1, &cfg).unwrap().sd_n, 0);
        let two = sd_max(2, &cfg).unwrap();
        assert_eq!(two.sd_n, 0);
        assert_eq!(two.lower, Some(0));
        assert_eq!(two.upper, 1);

        // Brute force over all 8 length-3 words.
        let oracle = Word::all_of_length(3)
            .map(|w| brute_force_sd(w).unwrap())
            .max()
            .unwrap();
        let three = sd_max(3, &cfg).unwrap();
        assert_eq!(three.sd_n, oracle);
        assert_eq!(three.sd_n, 1);
        let aab = parse_word("aab").unwrap();
        assert!(three.extremal.contains(&aab.canonical_form()));
        assert_eq!(sd_max(1, &cfg).unwrap().lower, None);
    }

    #[test]
    fn n10_and_conjecture_failure() {
        let row = sd_max(10, &SearchConfig::with_workers(4)).unwrap();
        assert_eq!(row.sd_n, 4);
        assert!(row.sd_n as f64 > 10.0 / 3.0);
    }

    #[test]
    fn guards() {
        let cfg = SearchConfig::default();
        assert!(matches!(sd_max(0, &cfg), Err(Error::Domain { .. })));
        assert!(matches!(
            sd_max(29, &cfg),
            Err(Error::LengthBudgetExceeded { limit: 28, .. })
        ));
        assert!(compute_table(5, 4, &cfg).is_err());
        assert!(compute_table(1, 64, &cfg).is_err());
    }

    #[test]
    fn extremal_words_are_canonical_and_extremal() {
        let cfg = SearchConfig {
            extremal_limit: 5,
            ..SearchConfig::with_workers(3)
        };
        for row in compute_table(1, 14, &cfg).unwrap() {
            assert!(!row.extremal.is_empty());
            assert!(row.extremal.len() <= 5);
            assert!(row.extremal.windows(2).all(|p| p[0] < p[1]));
            for w in &row.extremal {
                assert_eq!(w.len(), row.n);
                assert_eq!(*w, w.canonical_form());
                assert_eq!(sd(*w).value, row.sd_n);
            }
        }
    }

    #[test]
    fn deterministic_across_worker_counts() {
        for n in [1, 2, 5, 9, 13, 16] {
            let a = sd_max(n, &SearchConfig::with_workers(1)).unwrap();
            let b = sd_max(n, &SearchConfig::with_workers(4)).unwrap();
            let c = sd_max(n, &SearchConfig::with_workers(7)).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, c);
            assert_eq!(a.words_scanned, b.words_scanned);
        }
    }

    #[test]
    fn pruning_is_sound() {
        for n in 1..=12 {
            let pruned = sd_max(n, &SearchConfig::default()).unwrap();
            let full = sd_max(
                n,
                &SearchConfig {
                    canonical_pruning: false,
                    ..SearchConfig::default()
                },
            )
            .unwrap();
            assert_eq!(pruned.sd_n, full.sd_n, "n={n}");
            assert_eq!(full.words_scanned, 1 << n);
            assert!(pruned.words_scanned < full.words_scanned || n == 1);
        }
    }

    #[test]
    fn mismatch_detection() {
        let cfg = SearchConfig::with_workers(4);
        let mut rows = compute_table(1, 12, &cfg).unwrap();
        assert!(compare_with_paper(&rows).is_empty());
        rows[9].sd_n = 5;
        assert_eq!(
            compare_with_paper(&rows),
            vec![Mismatch {
                n: 10,
                computed: 5,
                published: 4
            }]
        );
        let beyond: Vec<SdTableRow> = (21..=24)
            .map(|n| SdTableRow {
                n,
                sd_n: 0,
                lower: None,
                upper: n / 2,
                extremal: vec![],
                words_scanned: 0,
            })
            .collect();
        assert!(compare_with_paper(&beyond).is_empty());
    }

    #[test]
    fn row_json_shape() {
        let row = sd_max(10, &SearchConfig::default()).unwrap();
        let json = serde_json::to_string(&row).unwrap();
        assert!(
            json.starts_with(r#"{"n":10,"sd":4,"lower":4,"upper":5,"extremal":["#),
            "{json}"
        );
        let back: SdTableRow = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
