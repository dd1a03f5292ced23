//! Partition combinatorics for the symmetric-group structure of the
//! multilinear symmetric subspace: the slot-multiplicity map α ↦ w(α),
//! Kostka numbers by semistandard tableau enumeration, Specht dimensions by
//! the hook length formula, and the resulting decomposition table.

use std::fmt;

use crate::coeff::binomial;
use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {:?}",
                parts
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the entries and drops zeros.
    pub fn from_unsorted(mut entries: Vec<usize>) -> Self {
        entries.retain(|&e| e > 0);
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: entries }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Multiplicity of the part `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Dominance order: every prefix sum of `self` is at least the matching
    /// prefix sum of `other`. Only meaningful for equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order, from `(n)` down to
/// `(1,…,1)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    gen_partitions(n, n, &mut acc, &mut out);
    out
}

fn gen_partitions(remaining: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: acc.clone() });
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        acc.push(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop();
    }
}

/// The slot-multiplicity partition of `n+2` attached to `α ⊢ n`: with `i_j`
/// the multiplicity of the part `j` in `α`, this is
/// `sort(n+2 − Σ_j i_j, i_1, …, i_n)` with zero entries dropped.
pub fn w_alpha(alpha: &Partition) -> Result<Partition> {
    let n = alpha.size();
    if n == 0 {
        return Err(Error::InvalidPartition(
            "w(α) needs a partition of a positive integer".into(),
        ));
    }
    let mut entries = vec![n + 2 - alpha.len()];
    for j in 1..=n {
        entries.push(alpha.multiplicity(j));
    }
    let w = Partition::from_unsorted(entries);
    debug_assert_eq!(w.size(), n + 2);
    Ok(w)
}

/// Kostka number: semistandard Young tableaux of shape `beta` and content
/// `mu`, counted by backtracking over row-major fillings (rows weakly
/// increase, columns strictly increase).
pub fn kostka(beta: &Partition, mu: &Partition) -> Result<u64> {
    if beta.size() != mu.size() {
        return Err(Error::SizeMismatch {
            shape: beta.size(),
            content: mu.size(),
        });
    }
    if beta.is_empty() {
        return Ok(1);
    }
    // quick reject: positive count needs dominance
    if !beta.dominates(mu) {
        return Ok(0);
    }
    let shape = beta.parts().to_vec();
    let mut remaining = mu.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();
    let mut count = 0u64;
    fill(&shape, &mut rows, &mut remaining, 0, 0, &mut count);
    Ok(count)
}

fn fill(
    shape: &[usize],
    rows: &mut Vec<Vec<usize>>,
    remaining: &mut Vec<usize>,
    r: usize,
    c: usize,
    count: &mut u64,
) {
    if r == shape.len() {
        *count += 1;
        return;
    }
    let (nr, nc) = if c + 1 == shape[r] { (r + 1, 0) } else { (r, c + 1) };
    let min_value = {
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 && c < shape[r - 1] { rows[r - 1][c] + 1 } else { 1 };
        left.max(above)
    };
    for v in min_value..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        remaining[v - 1] -= 1;
        rows[r][c] = v;
        fill(shape, rows, remaining, nr, nc, count);
        remaining[v - 1] += 1;
    }
}

/// Dimension of the irreducible module of shape `beta`, by the hook length
/// formula: `|beta|!` over the product of all hook lengths.
pub fn specht_dim(beta: &Partition) -> u64 {
    let parts = beta.parts();
    let conj: Vec<usize> = (0..parts.first().copied().unwrap_or(0))
        .map(|c| parts.iter().filter(|&&p| p > c).count())
        .collect();
    let mut hooks: u128 = 1;
    for (r, &row_len) in parts.iter().enumerate() {
        for (c, &col_len) in conj.iter().enumerate().take(row_len) {
            let arm = row_len - c - 1;
            let leg = col_len - r - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    let mut num: u128 = 1;
    for i in 1..=beta.size() {
        num *= i as u128;
    }
    assert_eq!(num % hooks, 0, "hook product must divide the factorial");
    (num / hooks) as u64
}

/// Multiplicities of every shape `β ⊢ n+2` in the multilinear symmetric
/// component on `n+2` variables, listed in reverse-lexicographic order with
/// zero entries kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTable {
    pub n: usize,
    pub entries: Vec<(Partition, u64)>,
}

impl DecompositionTable {
    pub fn multiplicity(&self, beta: &Partition) -> u64 {
        self.entries
            .iter()
            .find(|(b, _)| b == beta)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }

    /// Σ multiplicity × irreducible dimension.
    pub fn total_dim(&self) -> u64 {
        self.entries
            .iter()
            .map(|(b, m)| m * specht_dim(b))
            .sum()
    }
}

/// Decomposition of the multilinear symmetric component on `n+2` variables:
/// the multiplicity of shape `β` is `Σ_{α ⊢ n} kostka(β, w(α))`.
pub fn sym_decomposition(n: usize) -> Result<DecompositionTable> {
    if n < 1 {
        return Err(Error::InvalidPartition(
            "decomposition is defined for n ≥ 1".into(),
        ));
    }
    let weights: Vec<Partition> = partitions(n)
        .iter()
        .map(w_alpha)
        .collect::<Result<_>>()?;
    let mut entries = Vec::new();
    for beta in partitions(n + 2) {
        let mut mult = 0u64;
        for w in &weights {
            mult += kostka(&beta, w)?;
        }
        entries.push((beta, mult));
    }
    Ok(DecompositionTable { n, entries })
}

/// Whether the shape `β ⊢ n+2` occurs in the decomposition:
/// `β_1 − 2 ≥ Σ_{j≥3} (j−2)·β_j`.
pub fn is_admissible(beta: &Partition) -> Result<bool> {
    if beta.size() < 3 {
        return Err(Error::InvalidPartition(format!(
            "admissibility concerns partitions of at least 3, got {}",
            beta
        )));
    }
    let parts = beta.parts();
    let lhs = parts[0] as i64 - 2;
    let rhs: i64 = parts
        .iter()
        .enumerate()
        .skip(2)
        .map(|(idx, &p)| (idx as i64 - 1) * p as i64)
        .sum();
    Ok(lhs >= rhs)
}

/// `C(2n+1, n+1)`: the dimension the decomposition table must reproduce.
pub fn expected_total_dim(n: usize) -> u64 {
    binomial((2 * n + 1) as u64, (n + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1]).is_ok());
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(pt(&[3, 1]).to_string(), "(3,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(
            partitions(3),
            vec![pt(&[3]), pt(&[2, 1]), pt(&[1, 1, 1])]
        );
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(8).len(), 22);
        // reverse-lexicographic: each successor is lexicographically smaller
        let ps = partitions(6);
        for w in ps.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }

    #[test]
    fn w_alpha_values() {
        assert_eq!(w_alpha(&pt(&[1])).unwrap(), pt(&[2, 1]));
        assert_eq!(w_alpha(&pt(&[2])).unwrap(), pt(&[3, 1]));
        assert_eq!(w_alpha(&pt(&[1, 1])).unwrap(), pt(&[2, 2]));
        for n in 2..=7 {
            assert_eq!(w_alpha(&pt(&[n])).unwrap(), pt(&[n + 1, 1]));
        }
        assert!(w_alpha(&Partition::empty()).is_err());
    }

    #[test]
    fn w_alpha_is_a_partition_of_n_plus_2() {
        for n in 1..=8 {
            for alpha in partitions(n) {
                let w = w_alpha(&alpha).unwrap();
                assert_eq!(w.size(), n + 2, "α = {}", alpha);
                assert!(w.parts().windows(2).all(|p| p[0] >= p[1]));
            }
        }
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&pt(&[2, 1]), &pt(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&pt(&[1, 1, 1]), &pt(&[2, 1])).unwrap(), 0);
        for beta in partitions(5) {
            assert_eq!(kostka(&beta, &beta).unwrap(), 1, "β = {}", beta);
        }
        // row content (n) fits only the single-row shape
        assert_eq!(kostka(&pt(&[4]), &pt(&[4])).unwrap(), 1);
        assert_eq!(kostka(&pt(&[3, 1]), &pt(&[4])).unwrap(), 0);
        assert!(matches!(
            kostka(&pt(&[2]), &pt(&[1])),
            Err(Error::SizeMismatch { shape: 2, content: 1 })
        ));
    }

    #[test]
    fn kostka_positive_iff_dominance() {
        for n in 1..=6 {
            let ps = partitions(n);
            for beta in &ps {
                for mu in &ps {
                    let k = kostka(beta, mu).unwrap();
                    assert_eq!(k > 0, beta.dominates(mu), "β = {}, μ = {}", beta, mu);
                }
            }
        }
    }

    #[test]
    fn youngs_rule_dimension_sum() {
        // Σ_β K(β,μ)·dim S^β = |μ|!/(μ_1!…μ_k!)
        for n in 1..=6usize {
            for mu in partitions(n) {
                let sum: u64 = partitions(n)
                    .iter()
                    .map(|beta| kostka(beta, &mu).unwrap() * specht_dim(beta))
                    .sum();
                let mut perm_dim = (1..=n as u128).product::<u128>();
                for &p in mu.parts() {
                    perm_dim /= (1..=p as u128).product::<u128>();
                }
                assert_eq!(sum as u128, perm_dim, "μ = {}", mu);
            }
        }
    }

    #[test]
    fn specht_dims() {
        assert_eq!(specht_dim(&pt(&[4])), 1);
        assert_eq!(specht_dim(&pt(&[2, 1])), 2);
        assert_eq!(specht_dim(&pt(&[2, 2])), 2);
        assert_eq!(specht_dim(&pt(&[3, 1])), 3);
        assert_eq!(specht_dim(&pt(&[1, 1, 1, 1])), 1);
        assert_eq!(specht_dim(&Partition::empty()), 1);
        // dimensions of the S_5 irreducibles: 1,4,5,6,5,4,1
        let dims: Vec<u64> = partitions(5).iter().map(specht_dim).collect();
        assert_eq!(dims, vec![1, 4, 5, 6, 5, 4, 1]);
        // Σ (dim)^2 = n!
        for n in 1..=7usize {
            let sum: u128 = partitions(n)
                .iter()
                .map(|b| (specht_dim(b) as u128).pow(2))
                .sum();
            assert_eq!(sum, (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn decomposition_small_tables() {
        let t1 = sym_decomposition(1).unwrap();
        assert_eq!(t1.multiplicity(&pt(&[3])), 1);
        assert_eq!(t1.multiplicity(&pt(&[2, 1])), 1);
        assert_eq!(t1.multiplicity(&pt(&[1, 1, 1])), 0);
        assert_eq!(t1.total_dim(), 3);

        let t2 = sym_decomposition(2).unwrap();
        assert_eq!(t2.multiplicity(&pt(&[4])), 2);
        assert_eq!(t2.multiplicity(&pt(&[3, 1])), 2);
        assert_eq!(t2.multiplicity(&pt(&[2, 2])), 1);
        assert_eq!(t2.multiplicity(&pt(&[2, 1, 1])), 0);
        assert_eq!(t2.multiplicity(&pt(&[1, 1, 1, 1])), 0);
        assert_eq!(t2.total_dim(), 10);

        assert!(sym_decomposition(0).is_err());
    }

    #[test]
    fn decomposition_matches_middle_binomials() {
        for n in 1..=5 {
            let t = sym_decomposition(n).unwrap();
            assert_eq!(t.total_dim(), expected_total_dim(n), "n = {n}");
        }
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&pt(&[3])).unwrap());
        assert!(!is_admissible(&pt(&[1, 1, 1])).unwrap());
        assert!(!is_admissible(&pt(&[2, 1, 1])).unwrap());
        assert!(is_admissible(&pt(&[2, 2])).unwrap());
        assert!(is_admissible(&pt(&[2, 1])).unwrap());
        assert!(is_admissible(&pt(&[2])).is_err());
        assert!(is_admissible(&pt(&[1, 1])).is_err());
    }

    #[test]
    fn admissibility_matches_positive_multiplicity() {
        for n in 1..=5 {
            let t = sym_decomposition(n).unwrap();
            for (beta, mult) in &t.entries {
                assert_eq!(
                    is_admissible(beta).unwrap(),
                    *mult > 0,
                    "n = {n}, β = {beta}"
                );
            }
        }
    }
}
