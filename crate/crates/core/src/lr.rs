//! Littlewood–Richardson coefficients and Schur-basis products, computed by
//! enumerating semistandard skew tableaux whose reverse reading word is a
//! lattice permutation. Tableaux are filled in reading order (rows top to
//! bottom, each row right to left) so the lattice prefix condition and the
//! semistandard constraints prune dead branches immediately.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cache::{self, tables};
use crate::error::{Error, Result};
use crate::partitions::{partitions_containing, Partition};

/// A homogeneous integer combination of Schur functions: a finite map from
/// partitions of `degree` to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    degree: u32,
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new(degree: u32) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(partition: Partition, coefficient: i64) -> Self {
        let mut e = SchurExpansion::new(partition.size());
        e.add_term(partition, coefficient).unwrap();
        e
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `s_partition`, 0 if absent.
    pub fn coefficient(&self, partition: &Partition) -> i64 {
        self.terms.get(partition).copied().unwrap_or(0)
    }

    /// Terms in ascending lexicographic order of the indexing partition.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn add_term(&mut self, partition: Partition, coefficient: i64) -> Result<()> {
        if partition.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: partition.size(),
                right: self.degree,
            });
        }
        if coefficient == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(partition).or_insert(0);
        *slot = slot.checked_add(coefficient).ok_or(Error::Overflow)?;
        if *slot == 0 {
            // removing requires the key again; retain is simplest here
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn add(&mut self, other: &SchurExpansion) -> Result<()> {
        self.add_scaled(other, 1)
    }

    pub fn add_scaled(&mut self, other: &SchurExpansion, factor: i64) -> Result<()> {
        if factor == 0 {
            return Ok(());
        }
        for (p, c) in other.iter() {
            let scaled = c.checked_mul(factor).ok_or(Error::Overflow)?;
            self.add_term(p.clone(), scaled)?;
        }
        Ok(())
    }
}

impl FromIterator<(Partition, i64)> for SchurExpansion {
    fn from_iter<T: IntoIterator<Item = (Partition, i64)>>(iter: T) -> Self {
        let mut items = iter.into_iter().peekable();
        let degree = items.peek().map(|(p, _)| p.size()).unwrap_or(0);
        let mut e = SchurExpansion::new(degree);
        for (p, c) in items {
            e.add_term(p, c).unwrap();
        }
        e
    }
}

/// One cell of a skew shape in reading order, with the indices of the
/// already-filled neighbours that constrain it.
struct Cell {
    above: Option<usize>,
    right: Option<usize>,
}

fn reading_cells(outer: &Partition, inner: &Partition) -> Vec<Cell> {
    let rows = outer.len();
    let mut index_of = vec![BTreeMap::new(); rows];
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = inner.part(r);
        let hi = outer.part(r);
        for col in (lo..hi).rev() {
            let above = if r > 0 && inner.part(r - 1) <= col && col < outer.part(r - 1) {
                Some(index_of[r - 1][&col])
            } else {
                None
            };
            let right = if col + 1 < hi {
                Some(cells.len() - 1)
            } else {
                None
            };
            index_of[r].insert(col, cells.len());
            cells.push(Cell { above, right });
        }
    }
    cells
}

enum Sink<'a> {
    Count(&'a mut i64),
    Collect(&'a mut BTreeMap<Partition, i64>),
}

struct Filling<'a> {
    cells: Vec<Cell>,
    entries: Vec<u8>,
    counts: Vec<u32>,
    weight_cap: Option<Vec<u32>>,
    max_letter: usize,
    sink: Sink<'a>,
}

impl Filling<'_> {
    fn fill(&mut self, idx: usize) {
        if idx == self.cells.len() {
            match &mut self.sink {
                Sink::Count(total) => **total += 1,
                Sink::Collect(map) => {
                    let weight = Partition::new(self.counts.clone()).expect("lattice weight");
                    *map.entry(weight).or_insert(0) += 1;
                }
            }
            return;
        }
        let cell = &self.cells[idx];
        let mut hi = match cell.right {
            Some(r) => self.entries[r] as usize,
            None => self.max_letter,
        };
        hi = hi.min(self.max_letter);
        let lo = match cell.above {
            Some(a) => self.entries[a] as usize + 1,
            None => 1,
        };
        for letter in lo..=hi {
            // lattice prefix condition: placing `letter` needs a spare
            // occurrence of `letter - 1` earlier in the reading word
            if letter > 1 && self.counts[letter - 2] <= self.counts[letter - 1] {
                continue;
            }
            if let Some(cap) = &self.weight_cap {
                if self.counts[letter - 1] >= cap[letter - 1] {
                    continue;
                }
            }
            self.entries[idx] = letter as u8;
            self.counts[letter - 1] += 1;
            self.fill(idx + 1);
            self.counts[letter - 1] -= 1;
        }
    }
}

fn count_lattice_fillings(outer: &Partition, inner: &Partition, weight: &Partition) -> i64 {
    if !inner.contained_in(outer) || inner.size() + weight.size() != outer.size() {
        return 0;
    }
    let cells = reading_cells(outer, inner);
    debug_assert_eq!(cells.len() as u32, outer.size() - inner.size());
    let mut total = 0;
    let max_letter = weight.len();
    let mut filling = Filling {
        cells,
        entries: Vec::new(),
        counts: vec![0; max_letter],
        weight_cap: Some(weight.parts().to_vec()),
        max_letter,
        sink: Sink::Count(&mut total),
    };
    filling.entries = vec![0; filling.cells.len()];
    filling.fill(0);
    total
}

/// All lattice weights of the skew shape `outer/inner` with multiplicity;
/// this is the Schur expansion of the skew Schur function.
fn lattice_weights(outer: &Partition, inner: &Partition) -> BTreeMap<Partition, i64> {
    let cells = reading_cells(outer, inner);
    let mut map = BTreeMap::new();
    let max_letter = outer.len();
    let mut filling = Filling {
        cells,
        entries: Vec::new(),
        counts: vec![0; max_letter],
        weight_cap: None,
        max_letter,
        sink: Sink::Collect(&mut map),
    };
    filling.entries = vec![0; filling.cells.len()];
    filling.fill(0);
    map
}

/// The Littlewood–Richardson coefficient `c_{lambda,mu}^{nu}`: the number of
/// lattice skew tableaux of shape `nu/mu` and weight `lambda`. Zero whenever
/// the sizes do not add up or a containment fails.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    if !mu.contained_in(nu) || !lambda.contained_in(nu) {
        return 0;
    }
    let (a, b) = cache::sorted_pair(lambda, mu);
    let key = (a, b, nu.clone());
    if let Some(&hit) = tables().lr.read().unwrap().get(&key) {
        return hit;
    }
    // enumerate the variant with fewer cells
    let value = if lambda.size() <= mu.size() {
        count_lattice_fillings(nu, mu, lambda)
    } else {
        count_lattice_fillings(nu, lambda, mu)
    };
    tables().lr.write().unwrap().insert(key, value);
    value
}

/// Same coefficient with the convention that any argument failing to be a
/// partition contributes 0.
pub fn lr_coefficient_seq(
    lambda: Option<&Partition>,
    mu: Option<&Partition>,
    nu: Option<&Partition>,
) -> i64 {
    match (lambda, mu, nu) {
        (Some(l), Some(m), Some(n)) => lr_coefficient(l, m, n),
        _ => 0,
    }
}

/// The ordinary product of Schur functions in the Schur basis.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> Result<Arc<SchurExpansion>> {
    let key = cache::sorted_pair(lambda, mu);
    cache::get_or_try_insert(&tables().schur_product, key.clone(), || {
        let (small, base) = (&key.0, &key.1);
        let (small, base) = if small.size() <= base.size() {
            (small, base)
        } else {
            (base, small)
        };
        let mut out = SchurExpansion::new(lambda.size() + mu.size());
        for nu in partitions_containing(base, small.size()) {
            let c = lr_coefficient(small, base, &nu);
            if c != 0 {
                out.add_term(nu, c)?;
            }
        }
        Ok(Arc::new(out))
    })
}

/// Schur expansion of the skew Schur function `s_{outer/inner}`; empty when
/// `inner` is not contained in `outer`.
pub(crate) fn skew_expansion(outer: &Partition, inner: &Partition) -> Result<Arc<SchurExpansion>> {
    let key = (outer.clone(), inner.clone());
    cache::get_or_try_insert(&tables().skew, key, || {
        if !inner.contained_in(outer) {
            return Ok(Arc::new(SchurExpansion::new(0)));
        }
        let degree = outer.size() - inner.size();
        let mut out = SchurExpansion::new(degree);
        for (weight, count) in lattice_weights(outer, inner) {
            out.add_term(weight, count)?;
        }
        Ok(Arc::new(out))
    })
}

/// Multiplies a homogeneous expansion by a single Schur function.
pub(crate) fn expansion_times_schur(
    expansion: &SchurExpansion,
    factor: &Partition,
) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::new(expansion.degree() + factor.size());
    for (p, c) in expansion.iter() {
        out.add_scaled(&*schur_product(p, factor)?, c)?;
    }
    Ok(out)
}
