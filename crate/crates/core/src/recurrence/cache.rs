//! Line-based persistence for coefficient tables.
//!
//! ```text
//! # jm-expand cache v1
//! a 3 4 5
//! c 2 1,1 1
//! ```
//!
//! Each entry is `kind k partition value`, whitespace separated, with the partition in the
//! usual comma syntax (`-` for the empty partition). A file whose first line is not the
//! current header is treated as stale and ignored.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_bigint::BigInt;

use super::{Engine, Kind};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub const CACHE_HEADER: &str = "# jm-expand cache v1";

/// Loads entries into `engine`. Returns the number of entries read; a missing or stale file
/// yields zero.
pub fn load_cache(engine: &Engine, path: &Path) -> Result<usize> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e.into()),
    };
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some(CACHE_HEADER) {
        return Ok(0);
    }
    let mut count = 0;
    for (no, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Error::Cache(format!("line {}: {what}: {line:?}", no + 2));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [kind, k, lam, value] = fields[..] else {
            return Err(bad("expected four fields"));
        };
        let kind: Kind = kind.parse().map_err(|_| bad("unknown kind"))?;
        let k: usize = k.parse().map_err(|_| bad("bad degree"))?;
        let lam: Partition = lam.parse().map_err(|_| bad("bad partition"))?;
        let value: BigInt = value.parse().map_err(|_| bad("bad value"))?;
        engine.insert(kind, k, lam, value)?;
        count += 1;
    }
    Ok(count)
}

/// Writes every memoized entry of `engine`, sorted, replacing the file.
pub fn save_cache(engine: &Engine, path: &Path) -> Result<usize> {
    let entries = engine.entries();
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        writeln!(w, "{CACHE_HEADER}")?;
        for (kind, k, lam, v) in &entries {
            writeln!(w, "{kind} {k} {lam} {v}")?;
        }
        w.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(entries.len())
}
