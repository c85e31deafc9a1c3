//! The Heisenberg product of Schur functions and its Aguiar coefficients.
//!
//! The degree-l component of `s_lambda # s_mu` factors through restriction
//! to `S_a x S_b x S_c`, a diagonal Kronecker product in the middle block,
//! and a two-step induction:
//!
//! ```text
//! a^{nu}_{lambda,mu} = sum c_{alpha,beta}^{lambda} c_{eta,rho}^{mu}
//!                          g_{beta,eta}^{delta} c_{alpha,delta}^{tau}
//!                          c_{tau,rho}^{nu}
//! ```
//!
//! summed over `alpha |- a`, `rho |- c`, `tau |- n`, `beta, eta, delta |- b`.
//! The implementation walks only the nonzero tuples: the `(beta, eta)` pairs
//! come from the two skew expansions, the `delta` sum is one Kronecker
//! product of degree-b expansions, and the remaining two factors are ordinary
//! Schur products applied to whole expansions.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cache::{self, tables};
use crate::error::{Error, Result};
use crate::kronecker::kronecker_product;
use crate::lr::{expansion_times_schur, skew_expansion, SchurExpansion};
use crate::partitions::{partitions_of, Partition};

/// Degree bookkeeping for one component: `a = l - m`, `b = n + m - l`,
/// `c = l - n`, so that `a + b = n`, `b + c = m`, `a + b + c = l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeisenbergIndex {
    pub n: u32,
    pub m: u32,
    pub l: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl HeisenbergIndex {
    pub fn new(n: u32, m: u32, l: u32) -> Result<Self> {
        let min = n.max(m);
        let max = n + m;
        if l < min || l > max {
            return Err(Error::DegreeOutOfRange {
                degree: l,
                min,
                max,
            });
        }
        Ok(HeisenbergIndex {
            n,
            m,
            l,
            a: l - m,
            b: n + m - l,
            c: l - n,
        })
    }
}

/// A finite sum of homogeneous Schur expansions, keyed by degree. The value
/// of a full Heisenberg product, with component degrees running from
/// `max(n, m)` to `n + m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedExpansion {
    components: BTreeMap<u32, SchurExpansion>,
}

impl GradedExpansion {
    pub fn new() -> Self {
        GradedExpansion::default()
    }

    /// The single-term expansion `1 * s_p` concentrated in degree `|p|`.
    pub fn from_partition(p: &Partition) -> Self {
        let mut g = GradedExpansion::new();
        g.components
            .insert(p.size(), SchurExpansion::from_term(p.clone(), 1));
        g
    }

    pub fn component(&self, degree: u32) -> Option<&SchurExpansion> {
        self.components.get(&degree)
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.components.keys().copied()
    }

    /// Components in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &SchurExpansion)> {
        self.components.iter().map(|(&l, e)| (l, e))
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn insert_component(&mut self, expansion: SchurExpansion) -> Result<()> {
        if expansion.is_empty() {
            return Ok(());
        }
        match self.components.entry(expansion.degree()) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(expansion);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add(&expansion)?;
            }
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &GradedExpansion, factor: i64) -> Result<()> {
        for (_, e) in other.iter() {
            let mut scaled = SchurExpansion::new(e.degree());
            scaled.add_scaled(e, factor)?;
            self.insert_component(scaled)?;
        }
        self.components.retain(|_, e| !e.is_empty());
        Ok(())
    }

    /// Coefficient of `s_nu` across all degrees.
    pub fn coefficient(&self, nu: &Partition) -> i64 {
        self.component(nu.size())
            .map(|e| e.coefficient(nu))
            .unwrap_or(0)
    }
}

impl FromIterator<SchurExpansion> for GradedExpansion {
    fn from_iter<T: IntoIterator<Item = SchurExpansion>>(iter: T) -> Self {
        let mut g = GradedExpansion::new();
        for e in iter {
            g.insert_component(e).unwrap();
        }
        g
    }
}

fn component_inner(
    lambda: &Partition,
    mu: &Partition,
    idx: HeisenbergIndex,
) -> Result<SchurExpansion> {
    let mut acc = SchurExpansion::new(idx.l);
    for alpha in partitions_of(idx.a) {
        let lambda_skew = skew_expansion(lambda, &alpha)?;
        if lambda_skew.is_empty() {
            continue;
        }
        for rho in partitions_of(idx.c) {
            let mu_skew = skew_expansion(mu, &rho)?;
            if mu_skew.is_empty() {
                continue;
            }
            // diagonal restriction of the two degree-b blocks
            let mut middle = SchurExpansion::new(idx.b);
            for (beta, cb) in lambda_skew.iter() {
                for (eta, ce) in mu_skew.iter() {
                    let factor = cb.checked_mul(ce).ok_or(Error::Overflow)?;
                    middle.add_scaled(&*kronecker_product(beta, eta)?, factor)?;
                }
            }
            // induct back up in two Pieri-style steps
            let lifted = expansion_times_schur(&middle, &alpha)?;
            let lifted = expansion_times_schur(&lifted, &rho)?;
            acc.add(&lifted)?;
        }
    }
    Ok(acc)
}

/// The degree-l component of `s_lambda # s_mu`.
pub fn heisenberg_component(
    lambda: &Partition,
    mu: &Partition,
    l: u32,
) -> Result<Arc<SchurExpansion>> {
    let idx = HeisenbergIndex::new(lambda.size(), mu.size(), l)?;
    let (a, b) = cache::sorted_pair(lambda, mu);
    cache::get_or_try_insert(&tables().component, (a, b, l), || {
        let expansion = component_inner(lambda, mu, idx)?;
        // record the coefficients for cache persistence
        {
            let mut aguiar = tables().aguiar.write().unwrap();
            let key = cache::sorted_pair(lambda, mu);
            for (nu, c) in expansion.iter() {
                aguiar.insert((key.0.clone(), key.1.clone(), nu.clone()), c);
            }
        }
        Ok(Arc::new(expansion))
    })
}

/// The full Heisenberg product `s_lambda # s_mu` with all components.
pub fn heisenberg_product(lambda: &Partition, mu: &Partition) -> Result<GradedExpansion> {
    let n = lambda.size();
    let m = mu.size();
    let mut out = GradedExpansion::new();
    for l in n.max(m)..=n + m {
        out.insert_component((*heisenberg_component(lambda, mu, l)?).clone())?;
    }
    Ok(out)
}

/// The Aguiar coefficient: the multiplicity of `s_nu` in `s_lambda # s_mu`.
/// Zero when `|nu|` lies outside the component range.
pub fn aguiar_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    let n = lambda.size();
    let m = mu.size();
    let l = nu.size();
    if l < n.max(m) || l > n + m {
        return Ok(0);
    }
    let key = cache::sorted_pair(lambda, mu);
    if let Some(&hit) =
        tables()
            .aguiar
            .read()
            .unwrap()
            .get(&(key.0.clone(), key.1.clone(), nu.clone()))
    {
        return Ok(hit);
    }
    let value = heisenberg_component(lambda, mu, l)?.coefficient(nu);
    tables()
        .aguiar
        .write()
        .unwrap()
        .insert((key.0, key.1, nu.clone()), value);
    Ok(value)
}

/// Bilinear extension of the Heisenberg product to graded expansions.
pub fn graded_product(x: &GradedExpansion, y: &GradedExpansion) -> Result<GradedExpansion> {
    let mut out = GradedExpansion::new();
    for (_, xe) in x.iter() {
        for (sigma, cx) in xe.iter() {
            for (_, ye) in y.iter() {
                for (pi, cy) in ye.iter() {
                    let factor = cx.checked_mul(cy).ok_or(Error::Overflow)?;
                    out.add_scaled(&heisenberg_product(sigma, pi)?, factor)?;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn expansion(pairs: &[(&str, i64)]) -> SchurExpansion {
        pairs.iter().map(|&(s, c)| (p(s), c)).collect()
    }

    #[test]
    fn index_bookkeeping() {
        let idx = HeisenbergIndex::new(4, 3, 5).unwrap();
        assert_eq!((idx.a, idx.b, idx.c), (2, 2, 1));
        assert_eq!(idx.a + idx.b, idx.n);
        assert_eq!(idx.b + idx.c, idx.m);
        assert!(HeisenbergIndex::new(1, 1, 5).is_err());
        assert!(HeisenbergIndex::new(4, 3, 3).is_err());
    }

    #[test]
    fn unit_and_tiny_products() {
        // the empty partition is the unit
        let got = heisenberg_product(&Partition::empty(), &p("2,1")).unwrap();
        assert_eq!(got.degrees().collect::<Vec<_>>(), vec![3]);
        assert_eq!(got.coefficient(&p("2,1")), 1);

        // hand evaluation: top degree is the ordinary product, degree 1 is
        // the Kronecker product s_1 * s_1 = s_1
        let got = heisenberg_product(&p("1"), &p("1")).unwrap();
        assert_eq!(
            got.component(2).unwrap(),
            &expansion(&[("2", 1), ("1,1", 1)])
        );
        assert_eq!(got.component(1).unwrap(), &expansion(&[("1", 1)]));
        assert_eq!(got.degrees().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn published_full_product_111_11() {
        // verified display; the published rendering drops the s_{2,2,1} term
        // of the top component, which the dimension identity rules out
        let got = heisenberg_product(&p("1,1,1"), &p("1,1")).unwrap();
        assert_eq!(
            got.component(3).unwrap(),
            &expansion(&[("3", 1), ("2,1", 1)])
        );
        assert_eq!(
            got.component(4).unwrap(),
            &expansion(&[("3,1", 1), ("2,2", 1), ("2,1,1", 2), ("1,1,1,1", 1)])
        );
        assert_eq!(
            got.component(5).unwrap(),
            &expansion(&[("2,2,1", 1), ("2,1,1,1", 1), ("1,1,1,1,1", 1)])
        );
    }

    #[test]
    fn published_aguiar_values() {
        assert_eq!(
            aguiar_coefficient(&p("1,1,1"), &p("1,1"), &p("3")).unwrap(),
            1
        );
        assert_eq!(
            aguiar_coefficient(&p("1,1,1"), &p("1,1"), &p("2,1,1")).unwrap(),
            2
        );
        assert_eq!(
            aguiar_coefficient(&p("2,1,1"), &p("2,1"), &p("2,2")).unwrap(),
            2
        );
        // out-of-range degree gives zero
        assert_eq!(
            aguiar_coefficient(&p("1"), &p("1"), &p("1,1,1")).unwrap(),
            0
        );
    }

    #[test]
    fn published_components() {
        let got = heisenberg_component(&p("2,1,1"), &p("2,1"), 4).unwrap();
        assert_eq!(
            *got,
            expansion(&[
                ("4", 1),
                ("3,1", 3),
                ("2,2", 2),
                ("2,1,1", 3),
                ("1,1,1,1", 1)
            ])
        );

        let got = heisenberg_component(&p("3,1,1"), &p("3,1"), 5).unwrap();
        assert_eq!(
            *got,
            expansion(&[
                ("5", 1),
                ("4,1", 3),
                ("3,2", 4),
                ("3,1,1", 4),
                ("2,2,1", 4),
                ("2,1,1,1", 3),
                ("1,1,1,1,1", 1),
            ])
        );

        let got = heisenberg_component(&p("1"), &p("1"), 2).unwrap();
        assert_eq!(*got, expansion(&[("2", 1), ("1,1", 1)]));

        assert!(heisenberg_component(&p("1"), &p("1"), 5).is_err());
    }

    #[test]
    fn graded_product_matches_pointwise() {
        let x = GradedExpansion::from_partition(&p("2,1"));
        let y = GradedExpansion::from_partition(&p("1,1"));
        let got = graded_product(&x, &y).unwrap();
        assert_eq!(got, heisenberg_product(&p("2,1"), &p("1,1")).unwrap());
    }
}
