//! Partitioning a catalog of graphs by successively finer invariants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::level::{level_matrix_of, Flavor};
use crate::spectral::{compare_spectra, spectrum, Spectrum};

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogOptions {
    /// Highest spectral level; defaults to `⌊N/2⌋`.
    pub max_level: Option<usize>,
    pub flavor: Flavor,
    pub tol: Option<f64>,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        Self {
            max_level: None,
            flavor: Flavor::Adjacency,
            tol: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stage {
    pub invariant: String,
    /// Bucket sizes after this stage, largest first.
    pub bucket_sizes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogReport {
    pub n_graphs: usize,
    pub n_vertices: usize,
    pub max_level: usize,
    pub stages: Vec<Stage>,
    /// Final buckets of graph names, in catalog order.
    pub buckets: Vec<Vec<String>>,
    /// Pairs no checked invariant could separate.
    pub unresolved_pairs: Vec<[String; 2]>,
}

/// Buckets `graphs` by degree sequence, then by level-1, level-2, …
/// spectra. Refinement stops at a level that hits a size guard.
pub fn partition(graphs: &[(String, Graph)], opts: &CatalogOptions) -> Result<CatalogReport> {
    if graphs.len() < 2 {
        return Err(Error::SizeMismatch {
            expected: 2,
            actual: graphs.len(),
        });
    }
    let n = graphs[0].1.n_vertices();
    if let Some((_, g)) = graphs.iter().find(|(_, g)| g.n_vertices() != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: g.n_vertices(),
        });
    }
    let max_level = opts.max_level.unwrap_or(n / 2).min(n);

    let mut stages = Vec::new();
    let mut buckets: Vec<Vec<usize>> = Vec::new();
    let mut keys: Vec<(usize, Vec<usize>)> = Vec::new();
    for (k, (_, g)) in graphs.iter().enumerate() {
        let key = (g.edge_count(), g.degree_sequence());
        match keys.iter().position(|x| *x == key) {
            Some(b) => buckets[b].push(k),
            None => {
                keys.push(key);
                buckets.push(vec![k]);
            }
        }
    }
    stages.push(stage("degree sequence".into(), &buckets, None));

    for level in 1..=max_level {
        let name = format!("level {level} {} spectrum", opts.flavor);
        match refine(graphs, &buckets, level, opts) {
            Ok(next) => {
                buckets = next;
                stages.push(stage(name, &buckets, None));
            }
            Err(e) if e.is_guard() => {
                stages.push(stage(name, &buckets, Some(e.to_string())));
                break;
            }
            Err(e) => return Err(e),
        }
    }

    let names = |b: &Vec<usize>| b.iter().map(|&k| graphs[k].0.clone()).collect::<Vec<_>>();
    let mut unresolved_pairs = Vec::new();
    for b in &buckets {
        for (i, &x) in b.iter().enumerate() {
            for &y in &b[i + 1..] {
                unresolved_pairs.push([graphs[x].0.clone(), graphs[y].0.clone()]);
            }
        }
    }
    Ok(CatalogReport {
        n_graphs: graphs.len(),
        n_vertices: n,
        max_level,
        stages,
        buckets: buckets.iter().map(names).collect(),
        unresolved_pairs,
    })
}

fn stage(invariant: String, buckets: &[Vec<usize>], skipped: Option<String>) -> Stage {
    let mut bucket_sizes: Vec<usize> = buckets.iter().map(Vec::len).collect();
    bucket_sizes.sort_unstable_by(|a, b| b.cmp(a));
    Stage {
        invariant,
        bucket_sizes,
        skipped,
    }
}

fn refine(
    graphs: &[(String, Graph)],
    buckets: &[Vec<usize>],
    level: usize,
    opts: &CatalogOptions,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for bucket in buckets {
        if bucket.len() < 2 {
            out.push(bucket.clone());
            continue;
        }
        let mut spectra: Vec<(Spectrum, i64)> = Vec::with_capacity(bucket.len());
        for &k in bucket {
            let m = level_matrix_of(&graphs[k].1, level, opts.flavor)?.into_matrix();
            spectra.push((spectrum(&m), m.max_abs_row_sum()));
        }
        // representatives are first members; membership is tested against them
        let mut split: Vec<Vec<usize>> = Vec::new();
        for (pos, &k) in bucket.iter().enumerate() {
            let (s, scale) = &spectra[pos];
            let home = split.iter().position(|members| {
                let rep = bucket.iter().position(|&x| x == members[0]).unwrap();
                let (r, rscale) = &spectra[rep];
                let tol = opts
                    .tol
                    .unwrap_or(1e-8 * (*scale.max(rscale)).max(1) as f64);
                !compare_spectra(s, r, tol).is_different()
            });
            match home {
                Some(h) => split[h].push(k),
                None => split.push(vec![k]),
            }
        }
        out.extend(split);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{graph_b, star_a};
    use crate::graph::Permutation;

    #[test]
    fn relabeled_copy_shares_a_bucket() {
        let a = star_a();
        let a2 = a
            .apply_permutation(&Permutation::new(vec![5, 4, 3, 2, 1]).unwrap())
            .unwrap();
        let graphs = vec![
            ("A".to_string(), a),
            ("B".into(), graph_b()),
            ("A'".into(), a2),
        ];
        let r = partition(&graphs, &CatalogOptions::default()).unwrap();
        assert_eq!(
            r.buckets,
            vec![vec!["A".to_string(), "A'".into()], vec!["B".into()]]
        );
        assert_eq!(r.stages[0].bucket_sizes, vec![2, 1]);
        assert_eq!(r.stages.len(), 3);
        assert_eq!(r.unresolved_pairs, vec![["A".to_string(), "A'".into()]]);
    }

    #[test]
    fn spectra_split_what_degrees_cannot() {
        // 6-cycle vs two triangles: both 2-regular, spectra differ at level 1
        let c6 = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]).unwrap();
        let tt = Graph::new(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]).unwrap();
        let r = partition(
            &[("c6".into(), c6), ("tt".into(), tt)],
            &CatalogOptions::default(),
        )
        .unwrap();
        assert_eq!(r.stages[0].bucket_sizes, vec![2]);
        assert_eq!(r.stages[1].bucket_sizes, vec![1, 1]);
        assert!(r.unresolved_pairs.is_empty());
    }

    #[test]
    fn rejects_bad_catalogs() {
        assert!(partition(&[("A".into(), star_a())], &CatalogOptions::default()).is_err());
        let mixed = vec![
            ("A".into(), star_a()),
            ("E".into(), Graph::empty(4).unwrap()),
        ];
        assert!(matches!(
            partition(&mixed, &CatalogOptions::default()),
            Err(Error::SizeMismatch {
                expected: 5,
                actual: 4
            })
        ));
    }
}
