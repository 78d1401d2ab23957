//! Escalating comparison of a graph pair: cheap screens, then level-1,
//! level-2, … spectra until one differs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::level::{level_matrix_of, Flavor};
use crate::spectral::{compare_spectra, default_tolerance, spectrum, SpectrumVerdict};

#[derive(Debug, Clone, PartialEq)]
pub struct DistinguishOptions {
    /// Highest level to check; defaults to `⌊N/2⌋`.
    pub max_level: Option<usize>,
    pub flavor: Flavor,
    /// Overrides the per-level default tolerance.
    pub tol: Option<f64>,
    pub skip_screens: bool,
    /// Keep checking levels after the first difference.
    pub all_levels: bool,
    /// Allow levels above `⌊N/2⌋`.
    pub force: bool,
}

impl Default for DistinguishOptions {
    fn default() -> Self {
        Self {
            max_level: None,
            flavor: Flavor::Adjacency,
            tol: None,
            skip_screens: false,
            all_levels: false,
            force: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScreenCheck {
    pub name: &'static str,
    pub equal: bool,
    pub first: String,
    pub second: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LevelStatus {
    Compared(SpectrumVerdict),
    /// The level was refused by a size guard.
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelCheck {
    pub level: usize,
    pub flavor: Flavor,
    pub dim: u128,
    #[serde(flatten)]
    pub status: LevelStatus,
}

impl LevelCheck {
    pub fn verdict(&self) -> Option<&SpectrumVerdict> {
        match &self.status {
            LevelStatus::Compared(v) => Some(v),
            LevelStatus::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Conclusion {
    ProvedNonIsomorphic { reason: String },
    IndistinguishableUpToLevel { level: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistinguishReport {
    pub n_vertices: [usize; 2],
    pub max_level: usize,
    pub screens: Vec<ScreenCheck>,
    pub levels_checked: Vec<LevelCheck>,
    /// The level whose spectra first differed; `0` when a screen (vertex
    /// count, edge count or degree sequence) already separated the pair.
    pub first_distinguishing_level: Option<usize>,
    pub conclusion: Conclusion,
}

impl DistinguishReport {
    pub fn proved_non_isomorphic(&self) -> bool {
        matches!(self.conclusion, Conclusion::ProvedNonIsomorphic { .. })
    }
}

fn screens(g1: &Graph, g2: &Graph) -> Vec<ScreenCheck> {
    let edges = (g1.edge_count(), g2.edge_count());
    let degrees = (g1.degree_sequence(), g2.degree_sequence());
    vec![
        ScreenCheck {
            name: "edge count",
            equal: edges.0 == edges.1,
            first: edges.0.to_string(),
            second: edges.1.to_string(),
        },
        ScreenCheck {
            name: "degree sequence",
            equal: degrees.0 == degrees.1,
            first: format!("{:?}", degrees.0),
            second: format!("{:?}", degrees.1),
        },
    ]
}

pub fn distinguish(g1: &Graph, g2: &Graph, opts: &DistinguishOptions) -> Result<DistinguishReport> {
    let (n, n2) = (g1.n_vertices(), g2.n_vertices());
    let ceiling = n / 2;
    let max_level = opts.max_level.unwrap_or(ceiling);
    if max_level > ceiling && !opts.force {
        return Err(Error::Guard {
            what: "requested level",
            actual: max_level as u128,
            limit: ceiling as u128,
            hint: " (levels above N/2 repeat lower levels by complementation; use --force)".into(),
        });
    }
    let mut report = DistinguishReport {
        n_vertices: [n, n2],
        max_level,
        screens: Vec::new(),
        levels_checked: Vec::new(),
        first_distinguishing_level: None,
        conclusion: Conclusion::IndistinguishableUpToLevel { level: 0 },
    };

    if n != n2 {
        report.screens.push(ScreenCheck {
            name: "vertex count",
            equal: false,
            first: n.to_string(),
            second: n2.to_string(),
        });
        report.first_distinguishing_level = Some(0);
        report.conclusion = Conclusion::ProvedNonIsomorphic {
            reason: "vertex count".into(),
        };
        return Ok(report);
    }

    if !opts.skip_screens {
        report.screens = screens(g1, g2);
        if let Some(failed) = report.screens.iter().find(|s| !s.equal) {
            report.first_distinguishing_level = Some(0);
            report.conclusion = Conclusion::ProvedNonIsomorphic {
                reason: failed.name.into(),
            };
            if !opts.all_levels {
                return Ok(report);
            }
        }
    }

    let mut last_compared = 0;
    for level in 1..=max_level {
        let check = compare_level(g1, g2, level, opts)?;
        let different = check.verdict().is_some_and(SpectrumVerdict::is_different);
        if check.verdict().is_some() {
            last_compared = level;
        }
        report.levels_checked.push(check);
        if different && report.first_distinguishing_level.is_none() {
            report.first_distinguishing_level = Some(level);
            report.conclusion = Conclusion::ProvedNonIsomorphic {
                reason: format!("level {level} {} spectrum", opts.flavor),
            };
            if !opts.all_levels {
                break;
            }
        }
    }
    if report.first_distinguishing_level.is_none() {
        report.conclusion = Conclusion::IndistinguishableUpToLevel {
            level: last_compared,
        };
    }
    Ok(report)
}

fn compare_level(
    g1: &Graph,
    g2: &Graph,
    level: usize,
    opts: &DistinguishOptions,
) -> Result<LevelCheck> {
    let dim = crate::subset::binomial(g1.n_vertices(), level).unwrap_or(u128::MAX);
    let (m1, m2) = match (
        level_matrix_of(g1, level, opts.flavor),
        level_matrix_of(g2, level, opts.flavor),
    ) {
        (Ok(a), Ok(b)) => (a.into_matrix(), b.into_matrix()),
        (Err(e), _) | (_, Err(e)) if e.is_guard() => {
            return Ok(LevelCheck {
                level,
                flavor: opts.flavor,
                dim,
                status: LevelStatus::Skipped {
                    reason: e.to_string(),
                },
            });
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let tol = opts.tol.unwrap_or_else(|| default_tolerance([&m1, &m2]));
    let (s1, s2) = std::thread::scope(|scope| {
        let first = scope.spawn(|| spectrum(&m1));
        let second = spectrum(&m2);
        (first.join().expect("eigensolver thread panicked"), second)
    });
    Ok(LevelCheck {
        level,
        flavor: opts.flavor,
        dim,
        status: LevelStatus::Compared(compare_spectra(&s1, &s2, tol)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{graph_b, star_a};
    use crate::graph::Permutation;

    #[test]
    fn screens_catch_the_cospectral_pair() {
        let r = distinguish(&star_a(), &graph_b(), &DistinguishOptions::default()).unwrap();
        assert!(r.proved_non_isomorphic());
        assert_eq!(r.first_distinguishing_level, Some(0));
        assert_eq!(
            r.conclusion,
            Conclusion::ProvedNonIsomorphic {
                reason: "degree sequence".into()
            }
        );
        assert!(r.levels_checked.is_empty());
        assert_eq!(r.screens[1].first, "[4, 1, 1, 1, 1]");
    }

    #[test]
    fn spectra_separate_the_pair_at_level_two() {
        let opts = DistinguishOptions {
            skip_screens: true,
            ..Default::default()
        };
        let r = distinguish(&star_a(), &graph_b(), &opts).unwrap();
        assert_eq!(r.first_distinguishing_level, Some(2));
        assert_eq!(r.levels_checked.len(), 2);
        assert!(!r.levels_checked[0].verdict().unwrap().is_different());
        assert!(r.levels_checked[1].verdict().unwrap().is_different());
    }

    #[test]
    fn isomorphic_pair_stays_together() {
        let g = Graph::new(
            8,
            [
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (1, 5),
                (2, 7),
            ],
        )
        .unwrap();
        let p = Permutation::new(vec![8, 3, 5, 1, 2, 7, 4, 6]).unwrap();
        let h = g.apply_permutation(&p).unwrap();
        for flavor in [Flavor::Adjacency, Flavor::Laplacian] {
            let opts = DistinguishOptions {
                flavor,
                ..Default::default()
            };
            let r = distinguish(&g, &h, &opts).unwrap();
            assert_eq!(
                r.conclusion,
                Conclusion::IndistinguishableUpToLevel { level: 4 }
            );
            assert_eq!(r.first_distinguishing_level, None);
            assert_eq!(r.levels_checked.len(), 4);
        }
    }

    #[test]
    fn vertex_count_mismatch_is_immediate() {
        let r = distinguish(
            &star_a(),
            &Graph::empty(4).unwrap(),
            &DistinguishOptions::default(),
        )
        .unwrap();
        assert_eq!(
            r.conclusion,
            Conclusion::ProvedNonIsomorphic {
                reason: "vertex count".into()
            }
        );
    }

    #[test]
    fn all_levels_continues_past_the_first_difference() {
        let opts = DistinguishOptions {
            all_levels: true,
            ..Default::default()
        };
        let r = distinguish(&star_a(), &graph_b(), &opts).unwrap();
        assert_eq!(r.first_distinguishing_level, Some(0));
        assert_eq!(r.levels_checked.len(), 2);
    }

    #[test]
    fn levels_above_the_ceiling_need_force() {
        let opts = DistinguishOptions {
            max_level: Some(3),
            ..Default::default()
        };
        assert!(distinguish(&star_a(), &star_a(), &opts)
            .unwrap_err()
            .is_guard());
        let opts = DistinguishOptions {
            max_level: Some(5),
            force: true,
            ..Default::default()
        };
        let r = distinguish(&star_a(), &star_a(), &opts).unwrap();
        assert_eq!(r.levels_checked.len(), 5);
    }

    #[test]
    fn guarded_levels_are_skipped_not_fatal() {
        let g = Graph::empty(320).unwrap();
        let opts = DistinguishOptions {
            max_level: Some(2),
            ..Default::default()
        };
        let r = distinguish(&g, &g, &opts).unwrap();
        // C(320, 2) = 51040 is over the guard; level 1 still runs
        assert_eq!(r.levels_checked.len(), 2);
        assert!(matches!(
            r.levels_checked[1].status,
            LevelStatus::Skipped { .. }
        ));
        assert_eq!(r.levels_checked[1].dim, 51040);
        assert_eq!(
            r.conclusion,
            Conclusion::IndistinguishableUpToLevel { level: 1 }
        );
    }
}
