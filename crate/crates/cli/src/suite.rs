//! Golden-file regression over a directory of spec files.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::{analyze_file, to_json, CliError, Options};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteEntry {
    pub spec: String,
    pub status: String,
    /// First differing line (1-based) against the golden, when drifted.
    pub first_diff_line: Option<usize>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub schema: &'static str,
    pub entries: Vec<SuiteEntry>,
    pub pass: bool,
}

pub fn golden_path(spec: &Path) -> PathBuf {
    spec.with_extension("golden.json")
}

pub fn spec_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let rd = fs::read_dir(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut specs: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "spec"))
        .collect();
    if specs.is_empty() {
        return Err(CliError::Validation(format!("no .spec files in {}", dir.display())));
    }
    specs.sort();
    Ok(specs)
}

fn first_diff(a: &str, b: &str) -> Option<(usize, String)> {
    let (mut la, mut lb) = (a.lines(), b.lines());
    let mut n = 0;
    loop {
        n += 1;
        match (la.next(), lb.next()) {
            (None, None) => return None,
            (x, y) if x == y => continue,
            (x, y) => {
                return Some((
                    n,
                    format!("expected {:?}, got {:?}", y.unwrap_or("<eof>"), x.unwrap_or("<eof>")),
                ))
            }
        }
    }
}

/// Recomputes every spec in `dir` and compares against `<name>.golden.json`;
/// with `bless`, rewrites the goldens instead.
pub fn verify_suite(dir: &Path, opts: &Options, bless: bool) -> Result<SuiteSummary, CliError> {
    let specs = spec_files(dir)?;
    let results: Vec<(PathBuf, Result<String, CliError>)> = std::thread::scope(|s| {
        let handles: Vec<_> = specs
            .iter()
            .map(|p| s.spawn(move || (p.clone(), analyze_file(p, opts, false).map(|r| to_json(&r)))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    });
    let mut entries = Vec::new();
    for (path, result) in results {
        let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let golden = golden_path(&path);
        let entry = match result {
            Err(e) => SuiteEntry {
                spec: name,
                status: "error".into(),
                first_diff_line: None,
                detail: Some(e.to_string()),
            },
            Ok(text) if bless => {
                fs::write(&golden, &text).map_err(|e| CliError::Io(format!("{}: {e}", golden.display())))?;
                SuiteEntry {
                    spec: name,
                    status: "blessed".into(),
                    first_diff_line: None,
                    detail: None,
                }
            }
            Ok(text) => match fs::read_to_string(&golden) {
                Err(_) => SuiteEntry {
                    spec: name,
                    status: "missing-golden".into(),
                    first_diff_line: None,
                    detail: Some(golden.display().to_string()),
                },
                Ok(expected) => match first_diff(&text, &expected) {
                    None => SuiteEntry {
                        spec: name,
                        status: "match".into(),
                        first_diff_line: None,
                        detail: None,
                    },
                    Some((line, detail)) => SuiteEntry {
                        spec: name,
                        status: "drift".into(),
                        first_diff_line: Some(line),
                        detail: Some(detail),
                    },
                },
            },
        };
        entries.push(entry);
    }
    let pass = entries.iter().all(|e| e.status == "match" || e.status == "blessed");
    Ok(SuiteSummary {
        schema: crate::report::SCHEMA,
        entries,
        pass,
    })
}
