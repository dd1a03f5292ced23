//! The differential polynomial algebra F{X} with one derivation.
//!
//! Elements are commutative polynomials in the derivative symbols `x_k^(i)`
//! (generator index `k ≥ 1`, order `i ≥ 0`) with exact rational coefficients.
//! The derivation `D` raises orders and extends to products by the Leibniz
//! rule. Values are immutable; every operation is a pure function.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::coeff::{coeff_int, render_coeff_abs, Coeff};

/// A single derivative symbol `x_k^(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffVar {
    /// Generator index `k`, at least 1.
    pub var: u32,
    /// Derivation order `i`.
    pub order: u32,
}

impl DiffVar {
    pub fn new(var: u32, order: u32) -> Self {
        assert!(var >= 1, "generator index must be at least 1");
        DiffVar { var, order }
    }

    /// The symbol with the order raised by one.
    pub fn derived(self) -> Self {
        DiffVar {
            var: self.var,
            order: self.order + 1,
        }
    }
}

impl fmt::Display for DiffVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            0 => write!(f, "x{}", self.var),
            1 => write!(f, "x{}'", self.var),
            2 => write!(f, "x{}''", self.var),
            k => write!(f, "x{}^({})", self.var, k),
        }
    }
}

/// A commutative product of derivative symbols, kept as a sorted factor
/// list. The empty list is the unit monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DiffMonomial {
    factors: Vec<DiffVar>,
}

impl DiffMonomial {
    /// The unit monomial `1`.
    pub fn unit() -> Self {
        DiffMonomial::default()
    }

    /// Builds a monomial from factors in any order.
    pub fn from_factors(mut factors: Vec<DiffVar>) -> Self {
        factors.sort_unstable();
        DiffMonomial { factors }
    }

    /// The single-symbol monomial `x_k^(order)`.
    pub fn var(var: u32, order: u32) -> Self {
        DiffMonomial {
            factors: vec![DiffVar::new(var, order)],
        }
    }

    pub fn factors(&self) -> &[DiffVar] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Standard degree: the number of factors.
    pub fn deg(&self) -> usize {
        self.factors.len()
    }

    /// Differential degree: the sum of the orders.
    pub fn diff_degree(&self) -> usize {
        self.factors.iter().map(|v| v.order as usize).sum()
    }

    /// Number of factors of the variable `k`.
    pub fn var_degree(&self, var: u32) -> usize {
        self.factors.iter().filter(|v| v.var == var).count()
    }

    /// Largest generator index present; 0 for the unit monomial.
    pub fn max_var(&self) -> u32 {
        self.factors.iter().map(|v| v.var).max().unwrap_or(0)
    }

    /// Per-variable degrees `(deg_{x_1}, …, deg_{x_n})` with `n = max_var()`.
    pub fn var_degrees(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.max_var() as usize];
        for v in &self.factors {
            out[(v.var - 1) as usize] += 1;
        }
        out
    }

    /// Largest order with which `var` occurs, if at all.
    pub fn max_order_of(&self, var: u32) -> Option<u32> {
        self.factors
            .iter()
            .filter(|v| v.var == var)
            .map(|v| v.order)
            .max()
    }

    /// Orders of all factors of `var`, ascending.
    pub fn orders_of(&self, var: u32) -> Vec<u32> {
        self.factors
            .iter()
            .filter(|v| v.var == var)
            .map(|v| v.order)
            .collect()
    }

    /// Product of two monomials (multiset union of factors).
    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        DiffMonomial::from_factors(factors)
    }

    /// Leibniz derivative, as a list of (monomial, multiplicity) pairs.
    pub fn derive_terms(&self) -> Vec<(DiffMonomial, Coeff)> {
        let mut out = Vec::with_capacity(self.factors.len());
        for i in 0..self.factors.len() {
            let mut factors = self.factors.clone();
            factors[i] = factors[i].derived();
            out.push((DiffMonomial::from_factors(factors), Coeff::one()));
        }
        out
    }

    /// Formal partial with respect to `x_var^(order)`: multiplicity times the
    /// monomial with one such factor removed, or `None` if the symbol is
    /// absent.
    pub fn partial(&self, var: u32, order: u32) -> Option<(DiffMonomial, Coeff)> {
        let target = DiffVar::new(var, order);
        let mult = self.factors.iter().filter(|&&v| v == target).count();
        if mult == 0 {
            return None;
        }
        let mut factors = self.factors.clone();
        let pos = factors.iter().position(|&v| v == target).unwrap();
        factors.remove(pos);
        Some((DiffMonomial { factors }, coeff_int(mult as i64)))
    }
}

impl Ord for DiffMonomial {
    /// Graded lexicographic order: by differential degree, then by the
    /// sorted factor list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.diff_degree()
            .cmp(&other.diff_degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for DiffMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DiffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.factors.len() {
            let v = self.factors[i];
            let mut run = 1;
            while i + run < self.factors.len() && self.factors[i + run] == v {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", v)?;
            if run > 1 {
                write!(f, "^{}", run)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Outcome of a multidegree query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multidegree {
    /// The zero polynomial is homogeneous of every multidegree.
    Zero,
    /// Every monomial has these per-variable degrees.
    Homogeneous(Vec<usize>),
    /// Monomials with different per-variable degrees are present.
    Mixed,
}

impl Multidegree {
    pub fn homogeneous(&self) -> Option<&[usize]> {
        match self {
            Multidegree::Homogeneous(v) => Some(v),
            _ => None,
        }
    }
}

/// A differential polynomial: a finite rational linear combination of
/// [`DiffMonomial`]s. The zero polynomial is the empty combination.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiffPoly {
    terms: BTreeMap<DiffMonomial, Coeff>,
}

impl DiffPoly {
    pub fn zero() -> Self {
        DiffPoly::default()
    }

    pub fn constant(c: Coeff) -> Self {
        DiffPoly::from_terms([(DiffMonomial::unit(), c)])
    }

    pub fn one() -> Self {
        DiffPoly::constant(Coeff::one())
    }

    /// The generator `x_k`.
    pub fn gen(var: u32) -> Self {
        DiffPoly::var(var, 0)
    }

    /// The symbol `x_k^(order)` as a polynomial.
    pub fn var(var: u32, order: u32) -> Self {
        DiffPoly::monomial(DiffMonomial::var(var, order))
    }

    pub fn monomial(m: DiffMonomial) -> Self {
        DiffPoly::from_terms([(m, Coeff::one())])
    }

    /// Collects terms, merging duplicates and pruning zero coefficients.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (DiffMonomial, Coeff)>,
    {
        let mut map: BTreeMap<DiffMonomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        DiffPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&DiffMonomial, &Coeff)> {
        self.terms.iter()
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &DiffMonomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return DiffPoly::zero();
        }
        DiffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// The derivation `D`, extended by linearity and the Leibniz rule.
    pub fn derive(&self) -> Self {
        let mut out: Vec<(DiffMonomial, Coeff)> = Vec::new();
        for (m, c) in &self.terms {
            for (dm, mult) in m.derive_terms() {
                out.push((dm, c * mult));
            }
        }
        DiffPoly::from_terms(out)
    }

    /// `D` applied `n` times.
    pub fn derive_n(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derive();
        }
        p
    }

    /// Formal partial derivative with respect to `x_var^(order)`, treating
    /// each symbol as an independent polynomial variable.
    pub fn partial(&self, var: u32, order: u32) -> Self {
        DiffPoly::from_terms(
            self.terms
                .iter()
                .filter_map(|(m, c)| m.partial(var, order).map(|(pm, mult)| (pm, c * mult))),
        )
    }

    /// Largest generator index occurring in any term; 0 for constants.
    pub fn max_var(&self) -> u32 {
        self.terms.keys().map(|m| m.max_var()).max().unwrap_or(0)
    }

    /// Largest order with which `var` occurs anywhere in the support.
    pub fn max_order_of(&self, var: u32) -> Option<u32> {
        self.terms.keys().filter_map(|m| m.max_order_of(var)).max()
    }

    /// Multidegree of the polynomial, padded to the largest variable index.
    pub fn multidegree(&self) -> Multidegree {
        if self.is_zero() {
            return Multidegree::Zero;
        }
        let n = self.max_var() as usize;
        let pad = |m: &DiffMonomial| {
            let mut v = m.var_degrees();
            v.resize(n, 0);
            v
        };
        let mut it = self.terms.keys();
        let first = pad(it.next().unwrap());
        for m in it {
            if pad(m) != first {
                return Multidegree::Mixed;
            }
        }
        Multidegree::Homogeneous(first)
    }

    /// Differential degree if every term shares it.
    pub fn uniform_diff_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.diff_degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl Add for &DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        DiffPoly::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl Sub for &DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        self + &(-rhs)
    }
}

impl Neg for &DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        DiffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out: Vec<(DiffMonomial, Coeff)> = Vec::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.push((ma.mul(mb), ca * cb));
            }
        }
        DiffPoly::from_terms(out)
    }
}

impl Add for DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: DiffPoly) -> DiffPoly {
        &self + &rhs
    }
}

impl Sub for DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: DiffPoly) -> DiffPoly {
        &self - &rhs
    }
}

impl Neg for DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        -&self
    }
}

impl Mul for DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: DiffPoly) -> DiffPoly {
        &self * &rhs
    }
}

impl fmt::Display for DiffPoly {
    /// Canonical text form: terms in descending monomial order, exact
    /// rational coefficients, explicit `*` and `^`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Coeff::zero();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs_one = c.abs().is_one();
            if m.is_unit() {
                write!(f, "{}", render_coeff_abs(c))?;
            } else if abs_one {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", render_coeff_abs(c), m)?;
            }
        }
        Ok(())
    }
}

/// All monomials with per-variable degrees `lambda` and differential degree
/// `d`, in ascending canonical order. This is the monomial basis of one
/// multigraded component of F{X}.
pub fn component_basis(lambda: &[usize], d: usize) -> Vec<DiffMonomial> {
    let mut out = Vec::new();
    let mut factors: Vec<DiffVar> = Vec::new();
    distribute(lambda, 0, d, &mut factors, &mut out);
    out.sort_unstable();
    out
}

fn distribute(
    lambda: &[usize],
    var_idx: usize,
    remaining: usize,
    factors: &mut Vec<DiffVar>,
    out: &mut Vec<DiffMonomial>,
) {
    if var_idx == lambda.len() {
        if remaining == 0 {
            out.push(DiffMonomial::from_factors(factors.clone()));
        }
        return;
    }
    let var = (var_idx + 1) as u32;
    let count = lambda[var_idx];
    if count == 0 {
        distribute(lambda, var_idx + 1, remaining, factors, out);
        return;
    }
    // weakly increasing order multisets for this variable's factors
    let mut orders = Vec::with_capacity(count);
    weakly_increasing(count, remaining, 0, &mut orders, &mut |orders, used| {
        let start = factors.len();
        for &o in orders.iter() {
            factors.push(DiffVar::new(var, o));
        }
        distribute(lambda, var_idx + 1, remaining - used, factors, out);
        factors.truncate(start);
    });
}

fn weakly_increasing(
    len: usize,
    max_sum: usize,
    min: usize,
    acc: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32], usize),
) {
    if len == 0 {
        let used: usize = acc.iter().map(|&o| o as usize).sum();
        f(acc, used);
        return;
    }
    let used: usize = acc.iter().map(|&o| o as usize).sum();
    for o in min..=(max_sum - used) {
        // remaining slots must be able to stay within the budget
        if used + o * len > max_sum {
            break;
        }
        acc.push(o as u32);
        weakly_increasing(len - 1, max_sum, o, acc, f);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{coeff_int, coeff_ratio};
    use proptest::prelude::*;

    fn m(factors: &[(u32, u32)]) -> DiffMonomial {
        DiffMonomial::from_factors(factors.iter().map(|&(v, o)| DiffVar::new(v, o)).collect())
    }

    fn p(terms: &[(i64, &[(u32, u32)])]) -> DiffPoly {
        DiffPoly::from_terms(terms.iter().map(|&(c, fs)| (m(fs), coeff_int(c))))
    }

    #[test]
    fn canonical_form_is_permutation_invariant() {
        let a = m(&[(1, 2), (2, 0), (1, 0)]);
        let b = m(&[(2, 0), (1, 0), (1, 2)]);
        assert_eq!(a, b);
        assert_eq!(a.factors(), &[
            DiffVar::new(1, 0),
            DiffVar::new(1, 2),
            DiffVar::new(2, 0)
        ]);
    }

    #[test]
    fn add_examples() {
        let x1 = DiffPoly::gen(1);
        assert_eq!(&x1 + &DiffPoly::zero(), x1);

        let x1p = DiffPoly::var(1, 1);
        assert!((&x1p + &x1p.scale(&coeff_int(-1))).is_zero());

        let x1x2 = p(&[(1, &[(1, 0), (2, 0)])]);
        assert_eq!(&x1x2 + &x1x2, p(&[(2, &[(1, 0), (2, 0)])]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            &DiffPoly::gen(1) * &DiffPoly::gen(2),
            p(&[(1, &[(1, 0), (2, 0)])])
        );
        assert_eq!(
            &DiffPoly::var(1, 1) * &DiffPoly::var(1, 1),
            p(&[(1, &[(1, 1), (1, 1)])])
        );
        let sum = &DiffPoly::gen(1) + &DiffPoly::gen(2);
        assert_eq!(
            &sum * &DiffPoly::gen(1),
            p(&[(1, &[(1, 0), (1, 0)]), (1, &[(1, 0), (2, 0)])])
        );
    }

    #[test]
    fn derive_examples() {
        let x1x2 = p(&[(1, &[(1, 0), (2, 0)])]);
        assert_eq!(
            x1x2.derive(),
            p(&[(1, &[(1, 1), (2, 0)]), (1, &[(1, 0), (2, 1)])])
        );

        let x1sq = p(&[(1, &[(1, 0), (1, 0)])]);
        assert_eq!(x1sq.derive(), p(&[(2, &[(1, 0), (1, 1)])]));

        // D(2x1'x1x2 − 3x1²x2') = 2x1''x1x2 + 2(x1')²x2 − 3x1²x2'' − 4x1'x1x2'
        let g = p(&[
            (2, &[(1, 1), (1, 0), (2, 0)]),
            (-3, &[(1, 0), (1, 0), (2, 1)]),
        ]);
        let expected = p(&[
            (2, &[(1, 2), (1, 0), (2, 0)]),
            (2, &[(1, 1), (1, 1), (2, 0)]),
            (-3, &[(1, 0), (1, 0), (2, 2)]),
            (-4, &[(1, 1), (1, 0), (2, 1)]),
        ]);
        assert_eq!(g.derive(), expected);
    }

    #[test]
    fn partial_examples() {
        let sq = p(&[(1, &[(1, 1), (1, 1)])]);
        assert_eq!(sq.partial(1, 1), p(&[(2, &[(1, 1)])]));

        let x1x2 = p(&[(1, &[(1, 0), (2, 0)])]);
        assert_eq!(x1x2.partial(1, 0), DiffPoly::gen(2));
        assert!(x1x2.partial(2, 1).is_zero());
    }

    #[test]
    fn degree_examples() {
        let w = m(&[(1, 2), (1, 0), (2, 0)]);
        assert_eq!(w.deg(), 3);
        assert_eq!(w.diff_degree(), 2);
        assert_eq!(w.var_degrees(), vec![2, 1]);

        let unit = DiffMonomial::unit();
        assert_eq!(unit.deg(), 0);
        assert_eq!(unit.diff_degree(), 0);

        let h = m(&[(1, 3)]);
        assert_eq!(h.deg(), 1);
        assert_eq!(h.diff_degree(), 3);
    }

    #[test]
    fn multidegree_examples() {
        let f = p(&[
            (2, &[(1, 2), (1, 0), (2, 0)]),
            (-3, &[(1, 0), (1, 0), (2, 2)]),
        ]);
        assert_eq!(f.multidegree(), Multidegree::Homogeneous(vec![2, 1]));

        let g = &DiffPoly::gen(1) + &p(&[(1, &[(1, 0), (2, 0)])]);
        assert_eq!(g.multidegree(), Multidegree::Mixed);

        assert_eq!(DiffPoly::zero().multidegree(), Multidegree::Zero);
    }

    #[test]
    fn rendering_matches_grammar() {
        assert_eq!(DiffPoly::zero().to_string(), "0");
        assert_eq!(DiffPoly::var(1, 5).to_string(), "x1^(5)");
        let f = p(&[
            (2, &[(1, 2), (1, 0), (2, 0)]),
            (2, &[(1, 1), (1, 1), (2, 0)]),
            (-3, &[(1, 0), (1, 0), (2, 2)]),
            (-4, &[(1, 1), (1, 0), (2, 1)]),
        ]);
        assert_eq!(
            f.to_string(),
            "2*x1'^2*x2 + 2*x1*x1''*x2 - 4*x1*x1'*x2' - 3*x1^2*x2''"
        );
        let half = DiffPoly::from_terms([(m(&[(1, 1)]), coeff_ratio(1, 2))]);
        assert_eq!(half.to_string(), "1/2*x1'");
        assert_eq!(
            (&DiffPoly::gen(2) - &DiffPoly::gen(1)).to_string(),
            "x2 - x1"
        );
        assert_eq!(
            (&DiffPoly::gen(1) - &DiffPoly::gen(2)).to_string(),
            "-x2 + x1"
        );
    }

    #[test]
    fn component_basis_small() {
        assert_eq!(
            component_basis(&[1, 1], 1),
            vec![m(&[(1, 0), (2, 1)]), m(&[(1, 1), (2, 0)])],
        );
        assert_eq!(component_basis(&[2], 1), vec![m(&[(1, 0), (1, 1)])]);
        assert_eq!(component_basis(&[], 0), vec![DiffMonomial::unit()]);
        assert!(component_basis(&[], 1).is_empty());
        // multiset orders, not sequences: {0,0,2} and {0,1,1} for λ=(3), d=2
        assert_eq!(component_basis(&[3], 2).len(), 2);
    }

    fn arb_poly() -> impl Strategy<Value = DiffPoly> {
        let factor = (1u32..=3, 0u32..=3);
        let mono = proptest::collection::vec(factor, 0..=3);
        let term = (mono, -10i64..=10, 1i64..=4);
        proptest::collection::vec(term, 0..=4).prop_map(|ts| {
            DiffPoly::from_terms(ts.into_iter().map(|(fs, num, den)| {
                (
                    DiffMonomial::from_factors(
                        fs.into_iter().map(|(v, o)| DiffVar::new(v, o)).collect(),
                    ),
                    coeff_ratio(num, den),
                )
            }))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn leibniz_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derive();
            let rhs = &(&a.derive() * &b) + &(&a * &b.derive());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn partials_commute(a in arb_poly(), k in 1u32..=3, i in 0u32..=3, l in 1u32..=3, j in 0u32..=3) {
            prop_assert_eq!(
                a.partial(k, i).partial(l, j),
                a.partial(l, j).partial(k, i)
            );
        }

        #[test]
        fn mul_commutes_and_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn exact_addition_roundtrip(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn derive_shifts_grading(fs in proptest::collection::vec((1u32..=3, 0u32..=3), 1..=4)) {
            let mono = DiffMonomial::from_factors(
                fs.into_iter().map(|(v, o)| DiffVar::new(v, o)).collect(),
            );
            let lambda = mono.var_degrees();
            let d = mono.diff_degree();
            let derived = DiffPoly::monomial(mono).derive();
            for (m, _) in derived.terms() {
                let mut padded = m.var_degrees();
                padded.resize(lambda.len(), 0);
                prop_assert_eq!(padded, lambda.clone());
                prop_assert_eq!(m.diff_degree(), d + 1);
            }
        }
    }

    #[test]
    fn exact_rational_arithmetic_with_large_values() {
        let big = "123456789012345678901234567890";
        let c1: Coeff = format!("{big}/97").parse().unwrap();
        let c2: Coeff = format!("-{big}/89").parse().unwrap();
        let a = DiffPoly::from_terms([(m(&[(1, 0)]), c1)]);
        let b = DiffPoly::from_terms([(m(&[(1, 0)]), c2)]);
        assert_eq!(&(&a + &b) - &b, a);
    }
}
