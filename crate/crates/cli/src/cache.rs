//! On-disk cache of character tables.
//!
//! Each table is one JSON file, `B{n}.json` or `S{n}.json`, written through a
//! temporary file in the same directory and renamed into place, so concurrent
//! readers never see a partial table.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use octarep::hypchar::{class_size, group_order, HypCharacterTable};
use octarep::{sym_class_size, SymCharacterTable};
use serde::{Deserialize, Serialize};

/// Serialized form of a character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub group: String,
    pub n: usize,
    pub labels: Vec<String>,
    pub classes: Vec<String>,
    pub values: Vec<Vec<i64>>,
}

impl TableFile {
    pub fn from_hyp(t: &HypCharacterTable) -> Self {
        Self {
            group: "B".into(),
            n: t.n(),
            labels: t.labels().iter().map(ToString::to_string).collect(),
            classes: t.classes().iter().map(ToString::to_string).collect(),
            values: t.values().to_vec(),
        }
    }

    pub fn from_sym(t: &SymCharacterTable) -> Self {
        let labels: Vec<String> = t.labels().iter().map(ToString::to_string).collect();
        Self { group: "S".into(), n: t.n(), classes: labels.clone(), labels, values: t.values().to_vec() }
    }

    /// Rebuilds a `B_n` table, rejecting anything that is not the genuine
    /// table: wrong labels, wrong shape, or rows that are not orthonormal.
    pub fn to_hyp(&self, n: usize) -> Result<HypCharacterTable> {
        self.check_header("B", n)?;
        let table = HypCharacterTable::from_values(n, self.values.clone())?;
        let labels: Vec<String> = table.labels().iter().map(ToString::to_string).collect();
        let classes: Vec<String> = table.classes().iter().map(ToString::to_string).collect();
        if labels != self.labels || classes != self.classes {
            bail!("labels or classes differ from B_{n}");
        }
        let sizes = table.classes().iter().map(|c| Ok(class_size(n, c)?)).collect::<Result<Vec<u128>>>()?;
        check_orthonormal(&self.values, &sizes, group_order(n))?;
        Ok(table)
    }

    pub fn to_sym(&self, n: usize) -> Result<SymCharacterTable> {
        self.check_header("S", n)?;
        let table = SymCharacterTable::from_values(n, self.values.clone())?;
        let labels: Vec<String> = table.labels().iter().map(ToString::to_string).collect();
        if labels != self.labels || labels != self.classes {
            bail!("labels or classes differ from S_{n}");
        }
        let sizes: Vec<u128> = table.labels().iter().map(sym_class_size).collect();
        check_orthonormal(&self.values, &sizes, sizes.iter().sum())?;
        Ok(table)
    }

    fn check_header(&self, group: &str, n: usize) -> Result<()> {
        if self.group != group || self.n != n {
            bail!("file holds {}_{}, expected {group}_{n}", self.group, self.n);
        }
        Ok(())
    }
}

fn check_orthonormal(values: &[Vec<i64>], sizes: &[u128], order: u128) -> Result<()> {
    for (i, a) in values.iter().enumerate() {
        for (j, b) in values.iter().enumerate().skip(i) {
            let s: i128 = (0..sizes.len()).map(|c| sizes[c] as i128 * i128::from(a[c]) * i128::from(b[c])).sum();
            if s != if i == j { order as i128 } else { 0 } {
                bail!("rows {i} and {j} are not orthonormal");
            }
        }
    }
    Ok(())
}

/// Character tables, loaded from `dir` when possible and computed otherwise.
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: Option<PathBuf>,
    quiet: bool,
}

impl TableCache {
    /// A cache at `dir`. A directory that does not exist disables
    /// persistence with a warning.
    pub fn new(dir: Option<PathBuf>, quiet: bool) -> Self {
        let dir = dir.filter(|d| {
            let ok = d.is_dir();
            if !ok && !quiet {
                eprintln!("warning: cache directory {} does not exist; tables stay in memory", d.display());
            }
            ok
        });
        Self { dir, quiet }
    }

    pub fn hyp(&self, n: usize) -> HypCharacterTable {
        self.get(&format!("B{n}.json"), |f| f.to_hyp(n), || {
            let t = HypCharacterTable::new(n);
            let f = TableFile::from_hyp(&t);
            (t, f)
        })
    }

    pub fn sym(&self, n: usize) -> SymCharacterTable {
        self.get(&format!("S{n}.json"), |f| f.to_sym(n), || {
            let t = SymCharacterTable::new(n);
            let f = TableFile::from_sym(&t);
            (t, f)
        })
    }

    fn get<T>(&self, name: &str, load: impl Fn(&TableFile) -> Result<T>, compute: impl Fn() -> (T, TableFile)) -> T {
        let Some(dir) = &self.dir else {
            return compute().0;
        };
        let path = dir.join(name);
        if path.exists() {
            let loaded = fs::read_to_string(&path)
                .context("unreadable")
                .and_then(|s| serde_json::from_str::<TableFile>(&s).context("not a table file"))
                .and_then(|f| load(&f));
            match loaded {
                Ok(t) => return t,
                Err(e) => self.warn(&format!("corrupt cache file {}: {e:#}; recomputing", path.display())),
            }
        }
        let (table, file) = compute();
        if let Err(e) = store(dir, &path, &file) {
            self.warn(&format!("could not write {}: {e:#}", path.display()));
        }
        table
    }

    fn warn(&self, msg: &str) {
        if !self.quiet {
            eprintln!("warning: {msg}");
        }
    }
}

fn store(dir: &Path, path: &Path, file: &TableFile) -> Result<()> {
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, file)?;
    tmp.write_all(b"\n")?;
    tmp.persist(path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(Some(dir.path().to_path_buf()), true);
        let first = cache.hyp(3);
        assert!(dir.path().join("B3.json").exists());
        let again = cache.hyp(3);
        assert_eq!(first, again);
        assert_eq!(cache.sym(4), SymCharacterTable::new(4));
        let text = fs::read_to_string(dir.path().join("S4.json")).unwrap();
        let file: TableFile = serde_json::from_str(&text).unwrap();
        assert_eq!(file.to_sym(4).unwrap(), SymCharacterTable::new(4));
    }

    #[test]
    fn b2_file_shape() {
        let file = TableFile::from_hyp(&HypCharacterTable::new(2));
        assert_eq!((file.labels.len(), file.classes.len()), (5, 5));
        assert_eq!(file.group, "B");
    }

    #[test]
    fn corrupt_files_are_replaced() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("B2.json");
        fs::write(&path, "{not json").unwrap();
        let cache = TableCache::new(Some(dir.path().to_path_buf()), true);
        assert_eq!(cache.hyp(2), HypCharacterTable::new(2));
        let file: TableFile = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(file, TableFile::from_hyp(&HypCharacterTable::new(2)));

        // Well-formed JSON with a wrong value is caught by orthogonality.
        let mut bad = file.clone();
        bad.values[1][1] += 1;
        fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
        assert!(bad.to_hyp(2).is_err());
        assert_eq!(cache.hyp(2), HypCharacterTable::new(2));
    }

    #[test]
    fn missing_directory_computes_in_memory() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(Some(dir.path().join("absent")), true);
        assert_eq!(cache.hyp(2), HypCharacterTable::new(2));
        assert!(!dir.path().join("absent").exists());
    }
}
