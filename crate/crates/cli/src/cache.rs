//! Append-only JSONL cache of exact game values.
//!
//! One `{"graph6": .., "k": .., "value": ..}` object per line, `null` for ∞.
//! Each entry is written with a single `write_all` on a file opened in append
//! mode, under a mutex, so concurrent workers never interleave lines. A torn
//! last line from an interrupted run is skipped on load.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use locgame::graph::encode_graph6;
use locgame::{GameValue, Graph, Solver};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Serialize, Deserialize)]
struct Entry {
    graph6: String,
    k: usize,
    value: GameValue,
}

pub struct ValueCache {
    path: Option<PathBuf>,
    known: Mutex<HashMap<(String, usize), GameValue>>,
    file: Option<Mutex<File>>,
    cap: Option<usize>,
}

impl ValueCache {
    /// `cap` overrides the solver's default vertex cap.
    pub fn open(path: Option<&Path>, cap: Option<usize>) -> CliResult<Self> {
        let mut known = HashMap::new();
        let mut file = None;
        if let Some(path) = path {
            if path.exists() {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                for (i, line) in text.lines().enumerate() {
                    match serde_json::from_str::<Entry>(line) {
                        Ok(e) => {
                            known.insert((e.graph6, e.k), e.value);
                        }
                        Err(err) if !line.trim().is_empty() => {
                            eprintln!("cache {}: skipping line {}: {err}", path.display(), i + 1);
                        }
                        Err(_) => {}
                    }
                }
            }
            let f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| CliError::io(path, e))?;
            file = Some(Mutex::new(f));
        }
        Ok(ValueCache {
            path: path.map(Path::to_path_buf),
            known: Mutex::new(known),
            file,
            cap,
        })
    }

    pub fn len(&self) -> usize {
        self.known.lock().expect("cache lock").len()
    }

    /// Cached value if present, otherwise solved and recorded.
    pub fn value(&self, g: &Graph, k: usize) -> locgame::Result<GameValue> {
        let key = (encode_graph6(g), k);
        if let Some(&v) = self.known.lock().expect("cache lock").get(&key) {
            return Ok(v);
        }
        let solver = match self.cap {
            Some(cap) => Solver::with_cap(g, k, cap)?,
            None => Solver::new(g, k)?,
        };
        let value = solver.value();
        self.record(key, value);
        Ok(value)
    }

    fn record(&self, key: (String, usize), value: GameValue) {
        let mut known = self.known.lock().expect("cache lock");
        if known.insert(key.clone(), value).is_some() {
            return;
        }
        if let Some(file) = &self.file {
            let entry = Entry {
                graph6: key.0,
                k: key.1,
                value,
            };
            let mut line = serde_json::to_string(&entry).expect("entry serializes");
            line.push('\n');
            let mut f = file.lock().expect("cache file lock");
            if let Err(e) = f.write_all(line.as_bytes()) {
                let path = self.path.as_deref().unwrap_or(Path::new("?"));
                eprintln!("cache {}: write failed: {e}", path.display());
            }
        }
    }
}
