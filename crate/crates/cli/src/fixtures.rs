//! Fixture corpus: structured text files pinning published reference values,
//! one check per line. `heis verify` replays every check and reports
//! per-file pass/fail.
//!
//! Line grammar (fields separated by `|`, partitions in text syntax, the
//! empty partition written `-`, expansions as `part=coeff;part=coeff`):
//!
//! ```text
//! product|lambda|mu|expansion
//! kronecker|lambda|mu|expansion
//! component|lambda|mu|degree|expansion
//! heisenberg|lambda|mu|degree:expansion|degree:expansion|...
//! stable|lambda|mu|nu|value          (extended sequences)
//! recover|lambda|mu|nu|value
//! aguiar|lambda|mu|nu|value
//! onset|lambda|mu|d|h|value
//! conset|lambda|mu|nu|d|h|value
//! rbound|lambda|mu|nu|d|h|value
//! straighten|seq|sign|partition      (partition empty when sign = 0)
//! tablecell|lambda|mu|d|h|n|nu|value (empty value = blank cell)
//! ```

use std::fs;
use std::path::Path;

use heis_core::heisenberg::{aguiar_coefficient, heisenberg_component, heisenberg_product};
use heis_core::jacobi_trudi::{recover_aguiar, straighten};
use heis_core::kronecker::kronecker_product;
use heis_core::lr::{schur_product, SchurExpansion};
use heis_core::partitions::{IntSequence, Partition};
use heis_core::stability::{
    coefficient_onset, family_coefficient, recovery_bound, stabilization_onset, stable_aguiar,
};

use crate::output::{CheckFailure, FileReport};

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|_| format!("bad partition {s:?}"))
}

fn parse_sequence(s: &str) -> Result<IntSequence, String> {
    s.parse().map_err(|_| format!("bad sequence {s:?}"))
}

fn parse_int<T: std::str::FromStr>(s: &str) -> Result<T, String> {
    s.trim().parse().map_err(|_| format!("bad integer {s:?}"))
}

fn parse_expansion(s: &str, degree: u32) -> Result<SchurExpansion, String> {
    let mut out = SchurExpansion::new(degree);
    for piece in s.split(';') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (part, coeff) = piece
            .rsplit_once('=')
            .ok_or_else(|| format!("bad term {piece:?}"))?;
        out.add_term(parse_partition(part)?, parse_int(coeff)?)
            .map_err(|e| e.to_string())?;
    }
    Ok(out)
}

fn expansion_diff(got: &SchurExpansion, want: &SchurExpansion) -> Option<String> {
    if got == want {
        return None;
    }
    let mut notes = Vec::new();
    for (p, c) in want.iter() {
        let g = got.coefficient(p);
        if g != c {
            notes.push(format!("{p}: computed {g}, pinned {c}"));
        }
    }
    for (p, c) in got.iter() {
        if want.coefficient(p) == 0 {
            notes.push(format!("{p}: computed {c}, pinned 0"));
        }
    }
    Some(notes.join("; "))
}

fn run_check(line: &str) -> Result<Option<String>, String> {
    let fields: Vec<&str> = line.split('|').collect();
    let kind = fields[0];
    let arity = |n: usize| -> Result<(), String> {
        if fields.len() != n + 1 {
            return Err(format!(
                "{kind} expects {n} fields, got {}",
                fields.len() - 1
            ));
        }
        Ok(())
    };
    match kind {
        "product" | "kronecker" => {
            arity(3)?;
            let lambda = parse_partition(fields[1])?;
            let mu = parse_partition(fields[2])?;
            let got = if kind == "product" {
                schur_product(&lambda, &mu).map_err(|e| e.to_string())?
            } else {
                kronecker_product(&lambda, &mu).map_err(|e| e.to_string())?
            };
            let want = parse_expansion(fields[3], got.degree())?;
            Ok(expansion_diff(&got, &want))
        }
        "component" => {
            arity(4)?;
            let lambda = parse_partition(fields[1])?;
            let mu = parse_partition(fields[2])?;
            let degree: u32 = parse_int(fields[3])?;
            let got = heisenberg_component(&lambda, &mu, degree).map_err(|e| e.to_string())?;
            let want = parse_expansion(fields[4], degree)?;
            Ok(expansion_diff(&got, &want))
        }
        "heisenberg" => {
            if fields.len() < 4 {
                return Err("heisenberg expects at least 3 fields".to_string());
            }
            let lambda = parse_partition(fields[1])?;
            let mu = parse_partition(fields[2])?;
            let got = heisenberg_product(&lambda, &mu).map_err(|e| e.to_string())?;
            let mut notes = Vec::new();
            let mut seen = Vec::new();
            for piece in &fields[3..] {
                let (degree, terms) = piece
                    .split_once(':')
                    .ok_or_else(|| format!("bad component entry {piece:?}"))?;
                let degree: u32 = parse_int(degree)?;
                seen.push(degree);
                let want = parse_expansion(terms, degree)?;
                let empty = SchurExpansion::new(degree);
                let have = got.component(degree).unwrap_or(&empty);
                if let Some(diff) = expansion_diff(have, &want) {
                    notes.push(format!("degree {degree}: {diff}"));
                }
            }
            for (degree, component) in got.iter() {
                if !seen.contains(&degree) && !component.is_empty() {
                    notes.push(format!("degree {degree}: computed but not pinned"));
                }
            }
            Ok((!notes.is_empty()).then(|| notes.join("; ")))
        }
        "stable" => {
            arity(4)?;
            let lambda = parse_sequence(fields[1])?;
            let mu = parse_sequence(fields[2])?;
            let nu = parse_sequence(fields[3])?;
            let want: i64 = parse_int(fields[4])?;
            let got = stable_aguiar(&lambda, &mu, &nu).map_err(|e| e.to_string())?;
            Ok((got != want).then(|| format!("computed {got}, pinned {want}")))
        }
        "recover" | "aguiar" => {
            arity(4)?;
            let lambda = parse_partition(fields[1])?;
            let mu = parse_partition(fields[2])?;
            let nu = parse_partition(fields[3])?;
            let want: i64 = parse_int(fields[4])?;
            let got = if kind == "recover" {
                recover_aguiar(&lambda, &mu, &nu).map_err(|e| e.to_string())?
            } else {
                aguiar_coefficient(&lambda, &mu, &nu).map_err(|e| e.to_string())?
            };
            Ok((got != want).then(|| format!("computed {got}, pinned {want}")))
        }
        "onset" => {
            arity(5)?;
            let lambda = parse_partition(fields[1])?;
            let mu = parse_partition(fields[2])?;
            let d: i64 = parse_int(fields[3])?;
            let h: i64 = parse_int(fields[4])?;
            let want: i64 = parse_int(fields[5])?;
            let got = stabilization_onset(&lambda, &mu, d, h).map_err(|e| e.to_string())?;
            Ok((got != want).then(|| format!("computed {got}, pinned {want}")))
        }
        "conset" | "rbound" => {
            arity(6)?;
            let lambda = parse_partition(fields[1])?;
            let mu = parse_partition(fields[2])?;
            let nu = parse_partition(fields[3])?;
            let d: i64 = parse_int(fields[4])?;
            let h: i64 = parse_int(fields[5])?;
            let want: i64 = parse_int(fields[6])?;
            let got = if kind == "conset" {
                coefficient_onset(&lambda, &mu, &nu, d, h).map_err(|e| e.to_string())?
            } else {
                recovery_bound(&lambda, &mu, &nu, d, h).map_err(|e| e.to_string())?
            };
            Ok((got != want).then(|| format!("computed {got}, pinned {want}")))
        }
        "straighten" => {
            arity(3)?;
            let seq = parse_sequence(fields[1])?;
            let sign: i64 = parse_int(fields[2])?;
            let got = straighten(&seq);
            let want_shape = if sign == 0 {
                None
            } else {
                Some(parse_partition(fields[3])?)
            };
            let matches = got.sign() == sign && got.partition() == want_shape.as_ref();
            Ok((!matches).then(|| {
                format!(
                    "computed sign {} shape {:?}, pinned sign {sign} shape {:?}",
                    got.sign(),
                    got.partition().map(|p| p.to_string()),
                    want_shape.map(|p| p.to_string())
                )
            }))
        }
        "tablecell" => {
            arity(7)?;
            let lambda = parse_partition(fields[1])?;
            let mu = parse_partition(fields[2])?;
            let d: i64 = parse_int(fields[3])?;
            let h: i64 = parse_int(fields[4])?;
            let n: i64 = parse_int(fields[5])?;
            let nu = parse_partition(fields[6])?;
            let embeds_ok = lambda.embed(n).to_partition().is_some()
                && mu.embed(n - d).to_partition().is_some()
                && nu.embed(n + h).to_partition().is_some();
            let value =
                family_coefficient(&lambda, &mu, &nu, d, h, n).map_err(|e| e.to_string())?;
            let got = embeds_ok.then_some(value);
            let want: Option<i64> = if fields[7].trim().is_empty() {
                None
            } else {
                Some(parse_int(fields[7])?)
            };
            if !embeds_ok && value != 0 {
                return Err("blank cell with a nonzero coefficient".to_string());
            }
            Ok((got != want).then(|| {
                let show = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or("blank".into());
                format!("computed {}, pinned {}", show(got), show(want))
            }))
        }
        other => Err(format!("unknown check kind {other:?}")),
    }
}

pub fn run_file(path: &Path) -> Result<FileReport, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read fixture {}: {e}", path.display()))?;
    let mut checks = 0;
    let mut failures = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        checks += 1;
        match run_check(line) {
            Ok(None) => {}
            Ok(Some(diff)) => failures.push(CheckFailure {
                line: index + 1,
                message: diff,
            }),
            Err(e) => failures.push(CheckFailure {
                line: index + 1,
                message: format!("check error: {e}"),
            }),
        }
    }
    Ok(FileReport {
        file: path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string()),
        checks,
        failures,
    })
}

pub fn run_directory(dir: &Path) -> Result<Vec<FileReport>, String> {
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(|e| format!("cannot read fixtures directory {}: {e}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|e| e == "txt").unwrap_or(false))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(format!("no fixture files in {}", dir.display()));
    }
    paths.iter().map(|p| run_file(p)).collect()
}
