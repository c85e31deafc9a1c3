//! Independent, deliberately slow reference implementations used as ground
//! truth in tests: Schur polynomials as semistandard-tableau generating
//! functions, Littlewood-Richardson coefficients by polynomial
//! multiplication and leading-monomial elimination, Kronecker coefficients
//! through Young permutation modules, and raw Jacobi-Trudi determinants.
//!
//! Nothing here shares a computational path with the fast modules; that
//! independence is the whole point, so there is no memoization and no
//! pruning beyond skipping multiplications by zero.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partitions::{IntSequence, Partition};

/// A sparse integer polynomial in a fixed number of variables, keyed by
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u16>, i64>,
}

impl MonomialPolynomial {
    pub fn zero(vars: usize) -> Self {
        MonomialPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, value: i64) -> Self {
        let mut p = MonomialPolynomial::zero(vars);
        if value != 0 {
            p.terms.insert(vec![0; vars], value);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u16]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: Vec<u16>, coefficient: i64) {
        debug_assert_eq!(exponents.len(), self.vars);
        if coefficient == 0 {
            return;
        }
        let slot = self.terms.entry(exponents).or_insert(0);
        *slot += coefficient;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add_scaled(&mut self, other: &MonomialPolynomial, factor: i64) {
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), c * factor);
        }
    }

    pub fn mul(&self, other: &MonomialPolynomial) -> MonomialPolynomial {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = MonomialPolynomial::zero(self.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let exponents: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exponents, ca * cb);
            }
        }
        out
    }

    /// The lexicographically greatest exponent vector.
    pub fn leading_exponent(&self) -> Option<&Vec<u16>> {
        self.terms.last_key_value().map(|(e, _)| e)
    }

    /// Applies a transposition of two variables; used to spot-check symmetry.
    pub fn swap_vars(&self, i: usize, j: usize) -> MonomialPolynomial {
        let mut out = MonomialPolynomial::zero(self.vars);
        for (e, &c) in &self.terms {
            let mut swapped = e.clone();
            swapped.swap(i, j);
            out.add_term(swapped, c);
        }
        out
    }
}

fn ssyt_fill(
    shape: &Partition,
    vars: usize,
    row: usize,
    col: usize,
    grid: &mut Vec<Vec<u16>>,
    content: &mut Vec<u16>,
    out: &mut MonomialPolynomial,
) {
    if row == shape.len() {
        out.add_term(content.clone(), 1);
        return;
    }
    let (next_row, next_col) = if col + 1 < shape.parts()[row] as usize {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let min = {
        let left = if col > 0 { grid[row][col - 1] } else { 1 };
        let above = if row > 0 && col < shape.parts()[row - 1] as usize {
            grid[row - 1][col] + 1
        } else {
            1
        };
        left.max(above)
    };
    for entry in min..=vars as u16 {
        grid[row][col] = entry;
        content[(entry - 1) as usize] += 1;
        ssyt_fill(shape, vars, next_row, next_col, grid, content, out);
        content[(entry - 1) as usize] -= 1;
    }
}

/// The Schur polynomial as the content generating function of semistandard
/// tableaux of the given shape with entries at most `vars`.
pub fn schur_poly(shape: &Partition, vars: usize) -> Result<MonomialPolynomial> {
    if vars < shape.len() {
        return Err(Error::TooFewVariables {
            needed: shape.len(),
            got: vars,
        });
    }
    let mut out = MonomialPolynomial::zero(vars);
    let mut grid: Vec<Vec<u16>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut content = vec![0u16; vars];
    if shape.is_empty() {
        out.add_term(content, 1);
        return Ok(out);
    }
    ssyt_fill(shape, vars, 0, 0, &mut grid, &mut content, &mut out);
    Ok(out)
}

/// Rewrites a symmetric polynomial in the Schur basis by repeatedly
/// subtracting the Schur polynomial of the leading (dominant) exponent.
pub fn decompose_into_schur(mut poly: MonomialPolynomial) -> Result<Vec<(Partition, i64)>> {
    let vars = poly.vars();
    let mut out = Vec::new();
    while let Some(leading) = poly.leading_exponent().cloned() {
        assert!(
            leading.windows(2).all(|w| w[0] >= w[1]),
            "leading exponent of a symmetric polynomial must be dominant"
        );
        let parts: Vec<u32> = leading
            .iter()
            .take_while(|&&e| e > 0)
            .map(|&e| u32::from(e))
            .collect();
        let shape = Partition::new(parts).expect("weakly decreasing by the check above");
        let c = poly.coefficient(&leading);
        poly.add_scaled(&schur_poly(&shape, vars)?, -c);
        out.push((shape, c));
    }
    Ok(out)
}

/// Littlewood-Richardson coefficient by expanding the product of two Schur
/// polynomials and eliminating leading monomials.
pub fn lr_via_polynomials(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    if lambda.size() + mu.size() != nu.size() {
        return Ok(0);
    }
    let vars = ((lambda.size() + mu.size()) as usize).max(nu.len()).max(1);
    let product = schur_poly(lambda, vars)?.mul(&schur_poly(mu, vars)?);
    let decomposition = decompose_into_schur(product)?;
    Ok(decomposition
        .into_iter()
        .find(|(shape, _)| shape == nu)
        .map(|(_, c)| c)
        .unwrap_or(0))
}

// --- Kronecker coefficients through Young permutation modules ---

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for slot in 0..n {
            let mut next = smaller.clone();
            next.insert(slot, n - 1);
            out.push(next);
        }
    }
    out
}

fn cycle_type(perm: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = perm[at];
            len += 1;
        }
        cycles.push(len);
    }
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    cycles
}

/// Number of ways to split the multiset of cycle lengths into labeled blocks
/// with the prescribed sums; this is the permutation character of the Young
/// module indexed by the block sums.
fn distribute(cycles: &[u32], remaining: &mut Vec<u32>) -> i64 {
    let Some((&first, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for i in 0..remaining.len() {
        if remaining[i] >= first {
            remaining[i] -= first;
            total += distribute(rest, remaining);
            remaining[i] += first;
        }
    }
    total
}

/// Kronecker coefficient computed from scratch: class data by enumerating
/// all permutations, irreducible characters by unitriangular elimination of
/// Young permutation characters along the dominance-compatible
/// lexicographic order, and finally a triple inner product.
pub fn kronecker_via_perm_modules(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<i64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: mu.size().max(nu.size()),
        });
    }
    if n > 6 {
        return Err(Error::OracleLimit(n, 6));
    }

    // classes by brute-force bucketing
    let mut class_sizes: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for perm in permutations(n as usize) {
        *class_sizes.entry(cycle_type(&perm)).or_insert(0) += 1;
    }
    let order: i64 = class_sizes.values().sum();

    // shapes in descending lexicographic order refine dominance downward
    let mut shapes: Vec<Vec<u32>> = class_sizes.keys().cloned().collect();
    shapes.sort_by(|a, b| b.cmp(a));
    let classes: Vec<(Vec<u32>, i64)> = class_sizes.into_iter().collect();

    let inner = |a: &[i64], b: &[i64]| -> i64 {
        let dot: i64 = classes
            .iter()
            .zip(a.iter().zip(b))
            .map(|((_, size), (x, y))| size * x * y)
            .sum();
        assert_eq!(dot % order, 0, "inner product must be integral");
        dot / order
    };

    let mut irreducibles: Vec<(Vec<u32>, Vec<i64>)> = Vec::new();
    for shape in shapes {
        let mut character: Vec<i64> = classes
            .iter()
            .map(|(cycles, _)| {
                let mut bins = shape.clone();
                distribute(cycles, &mut bins)
            })
            .collect();
        for (_, earlier) in &irreducibles {
            let mult = inner(&character, earlier);
            if mult != 0 {
                for (slot, e) in character.iter_mut().zip(earlier) {
                    *slot -= mult * e;
                }
            }
        }
        assert_eq!(inner(&character, &character), 1, "must be irreducible");
        irreducibles.push((shape, character));
    }

    let find = |p: &Partition| -> &Vec<i64> {
        irreducibles
            .iter()
            .find(|(shape, _)| shape.as_slice() == p.parts())
            .map(|(_, chi)| chi)
            .expect("every shape appears as a cycle type")
    };
    let (ca, cb, cc) = (find(lambda), find(mu), find(nu));
    let dot: i64 = classes
        .iter()
        .zip(ca.iter().zip(cb.iter().zip(cc)))
        .map(|((_, size), (x, (y, z)))| size * x * y * z)
        .sum();
    assert_eq!(dot % order, 0);
    Ok(dot / order)
}

// --- raw Jacobi-Trudi determinants ---

/// Complete homogeneous symmetric polynomial of degree k, or zero for k < 0
/// and one for k = 0.
pub fn h_poly(k: i64, vars: usize) -> MonomialPolynomial {
    if k < 0 {
        return MonomialPolynomial::zero(vars);
    }
    let mut out = MonomialPolynomial::zero(vars);
    let mut exponents = vec![0u16; vars];
    fn fill(var: usize, left: u16, exponents: &mut Vec<u16>, out: &mut MonomialPolynomial) {
        if var + 1 == exponents.len() || exponents.is_empty() {
            if let Some(last) = exponents.last_mut() {
                *last = left;
            } else if left > 0 {
                return;
            }
            out.add_term(exponents.clone(), 1);
            if let Some(last) = exponents.last_mut() {
                *last = 0;
            }
            return;
        }
        for e in 0..=left {
            exponents[var] = e;
            fill(var + 1, left - e, exponents, out);
            exponents[var] = 0;
        }
    }
    if vars == 0 {
        if k == 0 {
            out.add_term(vec![], 1);
        }
        return out;
    }
    fill(0, k as u16, &mut exponents, &mut out);
    out
}

/// The determinant `det(h_{seq_j + i - j})` expanded as a polynomial, by
/// cofactor expansion along the first row with shared minors.
pub fn jacobi_trudi_determinant(seq: &IntSequence, vars: usize) -> Result<MonomialPolynomial> {
    let l = seq.len();
    if vars < l {
        return Err(Error::TooFewVariables {
            needed: l,
            got: vars,
        });
    }
    if l == 0 {
        return Ok(MonomialPolynomial::constant(vars, 1));
    }
    let entry = |row: usize, col: usize| -> i64 {
        // 1-indexed i, j in the classical formula
        seq.entries()[col] + (row as i64 + 1) - (col as i64 + 1)
    };
    fn det(
        row: usize,
        cols: &[usize],
        entry: &dyn Fn(usize, usize) -> i64,
        vars: usize,
    ) -> MonomialPolynomial {
        if cols.is_empty() {
            return MonomialPolynomial::constant(vars, 1);
        }
        let mut out = MonomialPolynomial::zero(vars);
        for (pos, &col) in cols.iter().enumerate() {
            let k = entry(row, col);
            if k < 0 {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
            let minor = det(row + 1, &rest, entry, vars);
            if minor.is_zero() {
                continue;
            }
            let term = h_poly(k, vars).mul(&minor);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            out.add_scaled(&term, sign);
        }
        out
    }
    let cols: Vec<usize> = (0..l).collect();
    Ok(det(0, &cols, &entry, vars))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> IntSequence {
        s.parse().unwrap()
    }

    #[test]
    fn schur_poly_small() {
        let got = schur_poly(&p("1"), 2).unwrap();
        assert_eq!(got.coefficient(&[1, 0]), 1);
        assert_eq!(got.coefficient(&[0, 1]), 1);
        assert_eq!(got.term_count(), 2);

        let got = schur_poly(&p("2"), 2).unwrap();
        assert_eq!(got.coefficient(&[2, 0]), 1);
        assert_eq!(got.coefficient(&[1, 1]), 1);
        assert_eq!(got.coefficient(&[0, 2]), 1);
        assert_eq!(got.term_count(), 3);

        let got = schur_poly(&p("1,1"), 2).unwrap();
        assert_eq!(got.coefficient(&[1, 1]), 1);
        assert_eq!(got.term_count(), 1);

        assert!(schur_poly(&p("1,1,1"), 2).is_err());
    }

    #[test]
    fn schur_poly_is_symmetric() {
        for shape in ["2,1", "3,1", "2,2,1"] {
            let poly = schur_poly(&p(shape), 4).unwrap();
            for (i, j) in [(0usize, 1usize), (1, 3), (0, 3)] {
                assert_eq!(poly, poly.swap_vars(i, j), "{shape} swap {i},{j}");
            }
        }
    }

    #[test]
    fn lr_via_polynomials_examples() {
        assert_eq!(lr_via_polynomials(&p("1"), &p("1"), &p("2")).unwrap(), 1);
        assert_eq!(lr_via_polynomials(&p("1"), &p("1"), &p("1,1")).unwrap(), 1);
        // pinned regression value, first computed by this oracle
        assert_eq!(
            lr_via_polynomials(&p("2,1"), &p("2,1"), &p("3,2,1")).unwrap(),
            2
        );
    }

    #[test]
    fn kronecker_via_perm_modules_examples() {
        assert_eq!(
            kronecker_via_perm_modules(&p("1,1"), &p("1,1"), &p("2")).unwrap(),
            1
        );
        // pinned regression value, first computed by this oracle
        assert_eq!(
            kronecker_via_perm_modules(&p("2,1"), &p("2,1"), &p("1,1,1")).unwrap(),
            1
        );
        for mu in crate::partitions::partitions_of(3) {
            for nu in crate::partitions::partitions_of(3) {
                let want = i64::from(mu == nu);
                assert_eq!(kronecker_via_perm_modules(&p("3"), &mu, &nu).unwrap(), want);
            }
        }
        assert!(kronecker_via_perm_modules(&p("7"), &p("7"), &p("7")).is_err());
    }

    #[test]
    fn h_poly_basics() {
        assert_eq!(h_poly(-1, 3).term_count(), 0);
        assert_eq!(h_poly(0, 3).coefficient(&[0, 0, 0]), 1);
        assert_eq!(h_poly(2, 2).term_count(), 3);
        // h_k equals s_(k)
        for k in 1..=4i64 {
            let shape = Partition::new(vec![k as u32]).unwrap();
            assert_eq!(h_poly(k, 3), schur_poly(&shape, 3).unwrap());
        }
    }

    #[test]
    fn determinant_examples() {
        let det = jacobi_trudi_determinant(&seq("2,1"), 4).unwrap();
        assert_eq!(det, schur_poly(&p("2,1"), 4).unwrap());

        let det = jacobi_trudi_determinant(&seq("1,3"), 4).unwrap();
        let mut neg = MonomialPolynomial::zero(4);
        neg.add_scaled(&schur_poly(&p("2,2"), 4).unwrap(), -1);
        assert_eq!(det, neg);

        let det = jacobi_trudi_determinant(&seq("1,2,1"), 4).unwrap();
        assert!(det.is_zero());
    }
}
