use std::fmt;
use std::path::{Path, PathBuf};

use exciton::{formats, Format, Graph};

#[derive(Debug, Clone, Default)]
pub struct InputSpec {
    pub format: Option<Format>,
    pub vertices: Option<usize>,
}

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, exciton::Error),
    Core(exciton::Error),
    Usage(String),
}

impl CliError {
    /// 2 for bad input, 3 for size-guard refusals.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_, e) | CliError::Core(e) if e.is_guard() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Parse(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<exciton::Error> for CliError {
    fn from(e: exciton::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn infer_format(path: &Path) -> Format {
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
        .as_deref()
    {
        Some("hex") => Format::Hex,
        Some("g6" | "graph6") => Format::Graph6,
        _ => Format::EdgeList,
    }
}

pub fn resolve_format(path: &Path, spec: &InputSpec) -> Format {
    spec.format.unwrap_or_else(|| infer_format(path))
}

pub fn read_graph(path: &Path, spec: &InputSpec) -> CliResult<(Graph, Format)> {
    let format = resolve_format(path, spec);
    if format == Format::Hex && spec.vertices.is_none() {
        return Err(CliError::Usage(format!(
            "{}: hex input needs --vertices",
            path.display()
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    let g = formats::read_graph(&text, format, spec.vertices)
        .map_err(|e| CliError::Parse(path.to_path_buf(), e))?;
    Ok((g, format))
}

pub struct CatalogEntries {
    pub graphs: Vec<(String, Graph)>,
    pub warnings: Vec<String>,
}

/// A directory holds one graph per file; a file holds one hex or graph6
/// graph per line.
pub fn read_catalog(path: &Path, spec: &InputSpec) -> CliResult<CatalogEntries> {
    let mut graphs = Vec::new();
    let mut warnings = Vec::new();
    if path.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| CliError::Io(path.to_path_buf(), e))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        files.sort();
        for file in files {
            let name = file
                .file_name()
                .map_or_else(String::new, |n| n.to_string_lossy().into_owned());
            match read_graph(&file, spec) {
                Ok((g, _)) => graphs.push((name, g)),
                Err(e) => warnings.push(format!("skipped {e}")),
            }
        }
    } else {
        let format = resolve_format(path, spec);
        if format == Format::EdgeList {
            return Err(CliError::Usage(
                "edge-list catalogs must be directories with one graph per file".into(),
            ));
        }
        if format == Format::Hex && spec.vertices.is_none() {
            return Err(CliError::Usage("hex catalogs need --vertices".into()));
        }
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        for (k, line) in text.lines().enumerate() {
            let body = line.split_once('#').map_or(line, |(h, _)| h).trim();
            if body.is_empty() {
                continue;
            }
            let name = format!("line {}", k + 1);
            match formats::read_graph(body, format, spec.vertices) {
                Ok(g) => graphs.push((name, g)),
                Err(e) => warnings.push(format!("skipped {name}: {e}")),
            }
        }
    }
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    Ok(CatalogEntries { graphs, warnings })
}
