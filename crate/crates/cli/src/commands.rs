use std::path::Path;

use exciton::catalog::{partition, CatalogOptions};
use exciton::distinguish::{distinguish as run_distinguish, DistinguishOptions};
use exciton::level::check_level;
use exciton::oracle::{
    block_diagonal_check, brute_force_isomorphic, verify_block_equivalence, IsomorphismResult,
    MAX_FULL_VERTICES,
};
use exciton::{
    char_poly_exact, compare_spectra, formats, level_matrix, level_matrix_of, spectral, Flavor,
    Format, Graph,
};
use serde_json::{json, Value};

use crate::input::{read_catalog, read_graph, CliError, CliResult, InputSpec};
use crate::output::{emit, number, numbers, round_floats, write_stdout, Context};

fn describe(path: &Path, format: Format, g: &Graph) -> Value {
    json!({
        "path": path.display().to_string(),
        "format": format.name(),
        "n_vertices": g.n_vertices(),
        "n_edges": g.edge_count(),
    })
}

fn check_ceiling(g: &Graph, level: usize, force: bool) -> CliResult<()> {
    let ceiling = g.n_vertices() / 2;
    if level > ceiling && !force {
        return Err(CliError::Core(exciton::Error::Guard {
            what: "requested level",
            actual: level as u128,
            limit: ceiling as u128,
            hint: " (levels above N/2 repeat lower levels by complementation; use --force)".into(),
        }));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn spectrum(
    ctx: &Context,
    path: &Path,
    spec: &InputSpec,
    level: usize,
    flavor: Flavor,
    tol: Option<f64>,
    exact: bool,
    force: bool,
) -> CliResult<()> {
    let (g, format) = read_graph(path, spec)?;
    check_ceiling(&g, level, force)?;
    let m = level_matrix_of(&g, level, flavor)?.into_matrix();
    let tol = tol.unwrap_or_else(|| spectral::default_tolerance([&m]));
    let s = spectral::spectrum(&m);
    let groups: Vec<Value> = s
        .grouped(tol)
        .into_iter()
        .map(|(value, multiplicity)| json!({"value": number(value), "multiplicity": multiplicity}))
        .collect();
    let mut body = json!({
        "level": level,
        "flavor": flavor,
        "dim": m.dim(),
        "tolerance": number(tol),
        "spectrum": numbers(s.values()),
        "grouped": s.render_grouped(tol),
        "multiplicities": groups,
    });
    if exact {
        let poly = char_poly_exact(&m)?;
        body["char_poly"] = json!({
            "coefficients_descending": poly.coefficients_descending(),
            "display": poly.to_string(),
        });
    }
    emit(ctx, "spectrum", json!([describe(path, format, &g)]), body);
    Ok(())
}

pub fn distinguish(
    ctx: &Context,
    first: &Path,
    second: &Path,
    spec: &InputSpec,
    opts: &DistinguishOptions,
) -> CliResult<()> {
    let (g1, f1) = read_graph(first, spec)?;
    let (g2, f2) = read_graph(second, spec)?;
    let report = run_distinguish(&g1, &g2, opts)?;
    let body = round_floats(serde_json::to_value(&report).expect("report serializes"));
    emit(
        ctx,
        "distinguish",
        json!([describe(first, f1, &g1), describe(second, f2, &g2)]),
        body,
    );
    Ok(())
}

pub fn convert(
    ctx: &Context,
    path: &Path,
    spec: &InputSpec,
    to: Format,
    level: Option<usize>,
    output: Option<&Path>,
) -> CliResult<()> {
    let (g, format) = read_graph(path, spec)?;
    let exported = match level {
        Some(n) => level_matrix(&g, n)?.to_graph()?,
        None => g.clone(),
    };
    let text = formats::write_graph(&exported, to);
    match output {
        Some(out) => {
            std::fs::write(out, &text).map_err(|e| CliError::Io(out.to_path_buf(), e))?;
            let body = json!({
                "output": out.display().to_string(),
                "to": to.name(),
                "level": level,
                "n_vertices": exported.n_vertices(),
                "n_edges": exported.edge_count(),
            });
            emit(ctx, "convert", json!([describe(path, format, &g)]), body);
        }
        None => write_stdout(&text),
    }
    Ok(())
}

pub fn batch(ctx: &Context, path: &Path, spec: &InputSpec, opts: &CatalogOptions) -> CliResult<()> {
    let entries = read_catalog(path, spec)?;
    if entries.graphs.len() < 2 {
        return Err(CliError::Usage(format!(
            "catalog needs at least two readable graphs, found {}",
            entries.graphs.len()
        )));
    }
    let report = partition(&entries.graphs, opts).map_err(|e| match e {
        exciton::Error::SizeMismatch { expected, actual } => CliError::Usage(format!(
            "catalog mixes vertex counts ({expected} and {actual})"
        )),
        other => CliError::Core(other),
    })?;
    let mut body = round_floats(serde_json::to_value(&report).expect("report serializes"));
    body["skipped"] = json!(entries.warnings.len());
    body["warnings"] = json!(entries.warnings);
    emit(
        ctx,
        "batch",
        json!([{"path": path.display().to_string()}]),
        body,
    );
    Ok(())
}

pub fn oracle_block(
    ctx: &Context,
    path: &Path,
    spec: &InputSpec,
    level: Option<usize>,
) -> CliResult<()> {
    let (g, format) = read_graph(path, spec)?;
    let level = level.unwrap_or(g.n_vertices() / 2);
    let blocks_match = verify_block_equivalence(&g, level)?;
    let full = if g.n_vertices() <= MAX_FULL_VERTICES {
        Some(block_diagonal_check(&g)?)
    } else {
        None
    };
    let pass = blocks_match && full.unwrap_or(true);
    let body = json!({
        "mode": "block",
        "level": level,
        "dim": check_level(g.n_vertices(), level, 0)?,
        "block_matches_level_matrix": blocks_match,
        "full_hamiltonian_block_diagonal": full,
        "pass": pass,
    });
    emit(
        ctx,
        "oracle-check",
        json!([describe(path, format, &g)]),
        body,
    );
    Ok(())
}

pub fn oracle_isomorphism(
    ctx: &Context,
    path: &Path,
    second: Option<&Path>,
    spec: &InputSpec,
    level: Option<usize>,
) -> CliResult<()> {
    let second =
        second.ok_or_else(|| CliError::Usage("isomorphism mode needs two graphs".into()))?;
    let (g1, f1) = read_graph(path, spec)?;
    let (g2, f2) = read_graph(second, spec)?;
    let brute = brute_force_isomorphic(&g1, &g2)?;
    let max_level = level.unwrap_or(g1.n_vertices() / 2);

    let mut levels = Vec::new();
    let mut any_different = false;
    for n in 1..=max_level {
        let m1 = level_matrix(&g1, n)?.into_matrix();
        let m2 = level_matrix(&g2, n)?.into_matrix();
        let v = compare_spectra(
            &spectral::spectrum(&m1),
            &spectral::spectrum(&m2),
            spectral::default_tolerance([&m1, &m2]),
        );
        any_different |= v.is_different();
        levels.push(json!({
            "level": n,
            "outcome": v.outcome,
            "max_gap": number(v.max_gap),
            "tolerance_used": number(v.tolerance_used),
        }));
    }
    let (verdict, witness) = match &brute {
        IsomorphismResult::Isomorphic(w) => ("isomorphic", Some(w.images().to_vec())),
        IsomorphismResult::NonIsomorphic => ("non_isomorphic", None),
    };
    // A spectral difference between isomorphic graphs would be a soundness bug.
    let consistent = !(any_different && brute.is_isomorphic());
    let body = json!({
        "mode": "isomorphism",
        "brute_force": verdict,
        "witness": witness,
        "levels": levels,
        "invariants_differ": any_different,
        "consistent": consistent,
        "pass": consistent,
    });
    emit(
        ctx,
        "oracle-check",
        json!([describe(path, f1, &g1), describe(second, f2, &g2)]),
        body,
    );
    Ok(())
}
