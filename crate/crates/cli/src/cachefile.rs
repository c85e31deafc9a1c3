//! Persistence for the coefficient memo tables: newline-delimited records
//! `kind|lambda|mu|nu|value` using the partition text syntax. The file is
//! read once at start and rewritten once at exit; a missing file means a
//! cold start, a corrupt line aborts with its line number.

use std::fs;
use std::path::Path;

use heis_core::cache::{export_entries, import_entries, CacheEntry, CacheKind};
use heis_core::partitions::Partition;

pub fn load(path: &Path) -> Result<usize, String> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(format!("cannot read cache file {}: {e}", path.display())),
    };
    let mut entries = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('|').collect();
        if fields.len() != 5 {
            return Err(format!(
                "cache parse error at line {line_no}: expected 5 fields, got {}",
                fields.len()
            ));
        }
        let kind = CacheKind::from_label(fields[0]).ok_or_else(|| {
            format!(
                "cache parse error at line {line_no}: unknown kind {:?}",
                fields[0]
            )
        })?;
        let parse = |tag: &str, s: &str| -> Result<Partition, String> {
            s.parse().map_err(|_| {
                format!("cache parse error at line {line_no}: bad {tag} partition {s:?}")
            })
        };
        let lambda = parse("lambda", fields[1])?;
        let mu = parse("mu", fields[2])?;
        let nu = parse("nu", fields[3])?;
        let value: i64 = fields[4].parse().map_err(|_| {
            format!(
                "cache parse error at line {line_no}: bad value {:?}",
                fields[4]
            )
        })?;
        entries.push(CacheEntry {
            kind,
            lambda,
            mu,
            nu,
            value,
        });
    }
    let count = entries.len();
    import_entries(entries);
    Ok(count)
}

pub fn save(path: &Path) -> std::io::Result<usize> {
    let entries = export_entries();
    let mut out = String::new();
    for e in &entries {
        out.push_str(&format!(
            "{}|{}|{}|{}|{}\n",
            e.kind.label(),
            e.lambda,
            e.mu,
            e.nu,
            e.value
        ));
    }
    fs::write(path, out)?;
    Ok(entries.len())
}
