//! Process-wide memo tables. Every cached value is a pure function of its
//! key, so the tables behave as idempotent write-once maps and are safe to
//! share across threads; a race simply inserts the same value twice.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::Result;
use crate::lr::SchurExpansion;
use crate::partitions::Partition;

type Memo<K, V> = RwLock<HashMap<K, V>>;
pub(crate) type StableProfile = Arc<BTreeMap<Partition, i64>>;

#[derive(Default)]
pub(crate) struct Tables {
    pub lr: Memo<(Partition, Partition, Partition), i64>,
    pub skew: Memo<(Partition, Partition), Arc<SchurExpansion>>,
    pub schur_product: Memo<(Partition, Partition), Arc<SchurExpansion>>,
    pub character: Memo<(Partition, Partition), i64>,
    pub kron_triple: Memo<(Partition, Partition, Partition), i64>,
    pub kron_product: Memo<(Partition, Partition), Arc<SchurExpansion>>,
    pub component: Memo<(Partition, Partition, u32), Arc<SchurExpansion>>,
    pub aguiar: Memo<(Partition, Partition, Partition), i64>,
    pub stable: Memo<(Partition, Partition, i64, i64), StableProfile>,
}

pub(crate) fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(Tables::default)
}

/// Looks up `key`, computing and inserting on a miss. The lock is never held
/// across `compute`, so cached computations may recurse into the same table.
pub(crate) fn get_or_try_insert<K, V, F>(memo: &Memo<K, V>, key: K, compute: F) -> Result<V>
where
    K: Eq + Hash + Clone,
    V: Clone,
    F: FnOnce() -> Result<V>,
{
    if let Some(hit) = memo.read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let value = compute()?;
    memo.write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| value.clone());
    Ok(value)
}

/// Orders an unordered pair of partitions; used to canonicalize keys of
/// symmetric coefficients.
pub(crate) fn sorted_pair(a: &Partition, b: &Partition) -> (Partition, Partition) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

pub(crate) fn sorted_triple(
    a: &Partition,
    b: &Partition,
    c: &Partition,
) -> (Partition, Partition, Partition) {
    let mut v = [a, b, c];
    v.sort();
    (v[0].clone(), v[1].clone(), v[2].clone())
}

/// Coefficient families that can be persisted by the command-line cache.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheKind {
    Lr,
    Kronecker,
    Aguiar,
}

impl CacheKind {
    pub fn label(self) -> &'static str {
        match self {
            CacheKind::Lr => "lr",
            CacheKind::Kronecker => "kronecker",
            CacheKind::Aguiar => "aguiar",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        match s {
            "lr" => Some(CacheKind::Lr),
            "kronecker" => Some(CacheKind::Kronecker),
            "aguiar" => Some(CacheKind::Aguiar),
            _ => None,
        }
    }
}

/// One persisted coefficient.
#[derive(Debug, Clone)]
pub struct CacheEntry {
    pub kind: CacheKind,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub value: i64,
}

/// Snapshot of the persistable memo tables, sorted for stable output.
pub fn export_entries() -> Vec<CacheEntry> {
    let t = tables();
    let mut out = Vec::new();
    let mut dump = |kind: CacheKind, map: &Memo<(Partition, Partition, Partition), i64>| {
        let guard = map.read().unwrap();
        let mut items: Vec<_> = guard.iter().collect();
        items.sort_by(|a, b| a.0.cmp(b.0));
        for ((l, m, n), &v) in items {
            out.push(CacheEntry {
                kind,
                lambda: l.clone(),
                mu: m.clone(),
                nu: n.clone(),
                value: v,
            });
        }
    };
    dump(CacheKind::Lr, &t.lr);
    dump(CacheKind::Kronecker, &t.kron_triple);
    dump(CacheKind::Aguiar, &t.aguiar);
    out
}

/// Seeds the memo tables with previously exported coefficients. Keys are
/// canonicalized the same way the computing paths canonicalize them.
pub fn import_entries(entries: impl IntoIterator<Item = CacheEntry>) {
    let t = tables();
    for e in entries {
        match e.kind {
            CacheKind::Lr => {
                let (a, b) = sorted_pair(&e.lambda, &e.mu);
                t.lr.write().unwrap().insert((a, b, e.nu), e.value);
            }
            CacheKind::Kronecker => {
                let key = sorted_triple(&e.lambda, &e.mu, &e.nu);
                t.kron_triple.write().unwrap().insert(key, e.value);
            }
            CacheKind::Aguiar => {
                let (a, b) = sorted_pair(&e.lambda, &e.mu);
                t.aguiar.write().unwrap().insert((a, b, e.nu), e.value);
            }
        }
    }
}
