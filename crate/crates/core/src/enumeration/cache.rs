//! Plain-text on-disk cache of `P^s_n` values, one file per generator count.
//!
//! ```text
//! pcat-cache v1 s=<s>
//! 1 <P^s_1>
//! 2 <P^s_2>
//! ...
//! ```

use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use num_traits::Zero;

use super::{word_count_bound, BigCount, PeriTable};
use crate::error::{Error, Result};

/// Environment variable naming the cache directory.
pub const CACHE_ENV_VAR: &str = "PCAT_CACHE_DIR";

const HEADER_PREFIX: &str = "pcat-cache v1 s=";

pub fn cache_file_name(s: u64) -> String {
    format!("pcat-s{s}.txt")
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::CacheIo {
        path: path.to_path_buf(),
        source,
    }
}

fn integrity(path: &Path, reason: impl Into<String>) -> Error {
    Error::CacheIntegrity {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

/// Loads and validates the cache for `s`. Returns `Ok(None)` when no file exists.
pub fn load_cache(dir: &Path, s: u64) -> Result<Option<PeriTable>> {
    let path = dir.join(cache_file_name(s));
    let file = match fs::File::open(&path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io_err(&path)(e)),
    };
    let mut lines = BufReader::new(file).lines();
    let header = match lines.next() {
        Some(line) => line.map_err(io_err(&path))?,
        None => return Err(integrity(&path, "empty file")),
    };
    let expected = format!("{HEADER_PREFIX}{s}");
    if header.trim_end() != expected {
        return Err(integrity(&path, format!("bad header `{header}`")));
    }
    let mut values: Vec<BigCount> = vec![BigUint::zero()];
    for line in lines {
        let line = line.map_err(io_err(&path))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(n_field), Some(v_field), None) = (fields.next(), fields.next(), fields.next())
        else {
            return Err(integrity(&path, format!("malformed line `{line}`")));
        };
        let n: usize = n_field
            .parse()
            .map_err(|_| integrity(&path, format!("bad index `{n_field}`")))?;
        if n != values.len() {
            return Err(integrity(
                &path,
                format!("expected index {}, found {n}", values.len()),
            ));
        }
        let v: BigUint = v_field
            .parse()
            .map_err(|_| integrity(&path, format!("bad value at n={n}")))?;
        if v > word_count_bound(s, n as u64)? {
            return Err(integrity(&path, format!("value at n={n} exceeds the word bound")));
        }
        values.push(v);
    }
    let mut check = PeriTable::new(s)?;
    check.extend_to(2.min(values.len() - 1))?;
    for (n, v) in check.values().iter().enumerate() {
        if &values[n] != v {
            return Err(integrity(&path, format!("recomputed P_{n} disagrees")));
        }
    }
    Ok(Some(PeriTable::from_values(s, values)))
}

/// Writes the table atomically (temp file in the same directory, then rename).
pub fn save_cache(dir: &Path, table: &PeriTable) -> Result<PathBuf> {
    let path = dir.join(cache_file_name(table.s()));
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err(dir))?;
    {
        let mut w = io::BufWriter::new(tmp.as_file_mut());
        writeln!(w, "{HEADER_PREFIX}{}", table.s()).map_err(io_err(&path))?;
        for (n, v) in table.values().iter().enumerate().skip(1) {
            writeln!(w, "{n} {v}").map_err(io_err(&path))?;
        }
        w.flush().map_err(io_err(&path))?;
    }
    tmp.persist(&path).map_err(|e| io_err(&path)(e.error))?;
    Ok(path)
}

/// `P^s_0 ..= P^s_{n_max}`, reading and refreshing the cache in `cache_dir` if given.
pub fn build_table(s: u64, n_max: usize, cache_dir: Option<&Path>) -> Result<PeriTable> {
    if n_max == 0 {
        return Err(Error::domain("n_max must be >= 1"));
    }
    let Some(dir) = cache_dir else {
        let mut t = PeriTable::new(s)?;
        t.extend_to(n_max)?;
        return Ok(t);
    };
    let mut table = match load_cache(dir, s)? {
        Some(t) => t,
        None => PeriTable::new(s)?,
    };
    if table.n_max() < n_max {
        table.extend_to(n_max)?;
        save_cache(dir, &table)?;
    }
    let mut values = table.values().to_vec();
    values.truncate(n_max + 1);
    Ok(PeriTable::from_values(s, values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let t = build_table(1, 1, None).unwrap();
        assert_eq!(t.values(), &[BigUint::zero(), BigUint::from(1u32)]);
    }

    #[test]
    fn round_trip_and_reuse() {
        let dir = tempfile::tempdir().unwrap();
        let t = build_table(2, 12, Some(dir.path())).unwrap();
        let text = fs::read_to_string(dir.path().join(cache_file_name(2))).unwrap();
        assert!(text.starts_with("pcat-cache v1 s=2\n1 2\n2 12\n3 120\n"));
        let shorter = build_table(2, 5, Some(dir.path())).unwrap();
        assert_eq!(shorter.values(), &t.values()[..6]);
        let loaded = load_cache(dir.path(), 2).unwrap().unwrap();
        assert_eq!(loaded, t);
        assert!(load_cache(dir.path(), 3).unwrap().is_none());
    }

    #[test]
    fn corrupt_entries_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(cache_file_name(1));
        let cases = [
            "pcat-cache v1 s=2\n1 1\n",
            "pcat-cache v1 s=1\n1 1\n3 12\n",
            "pcat-cache v1 s=1\n1 2\n",
            "pcat-cache v1 s=1\n1 1\n2 3\n3 19\n",
            "pcat-cache v1 s=1\n1 1\n2 x\n",
            "",
        ];
        for text in cases {
            fs::write(&path, text).unwrap();
            let err = build_table(1, 4, Some(dir.path())).unwrap_err();
            assert!(matches!(err, Error::CacheIntegrity { .. }), "{text:?}: {err}");
        }
    }

    #[test]
    fn unwritable_dir_is_io_error() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, "x").unwrap();
        let err = build_table(1, 3, Some(&blocker.join("sub"))).unwrap_err();
        assert!(matches!(err, Error::CacheIo { .. }), "{err}");
    }
}
