//! The symmetrized tensor picture of multigraded components of F{X}.
//!
//! A homogeneous polynomial of multidegree `(N_1, …, N_n)` is transformed
//! into a polynomial in slot variables `e[k,j]` (`1 ≤ j ≤ N_k`), where a
//! monomial's orders for variable `k` are distributed over the group's slots
//! as exponents and averaged over all slot permutations. The Euler operator
//! has a simple image on that side: drop the last slot of the group by the
//! substitution `e[k,N_k] ↦ −(all other slot variables)` and scale by `N_k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::coeff::{coeff_int, factorial, render_coeff_abs, Coeff};
use crate::diffpoly::{DiffPoly, Multidegree};
use crate::error::{Error, Result};
use crate::variational::euler;

/// Slot variable `e[group, slot]`, both indices 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorVar {
    pub group: u32,
    pub slot: u32,
}

impl TensorVar {
    pub fn new(group: u32, slot: u32) -> Self {
        assert!(group >= 1 && slot >= 1, "indices are 1-based");
        TensorVar { group, slot }
    }
}

impl fmt::Display for TensorVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]", self.group, self.slot)
    }
}

/// Slot counts `(N_1, …, N_n)` per variable group. Entries may be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupShape(pub Vec<usize>);

impl GroupShape {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Slot count of group `k` (1-based); zero when out of range.
    pub fn slots(&self, k: u32) -> usize {
        self.0.get((k - 1) as usize).copied().unwrap_or(0)
    }

    /// The shape with group `k` holding one slot fewer.
    pub fn decremented(&self, k: u32) -> Result<GroupShape> {
        if self.slots(k) == 0 {
            return Err(Error::EmptyGroup { var: k });
        }
        let mut v = self.0.clone();
        v[(k - 1) as usize] -= 1;
        Ok(GroupShape(v))
    }

    /// True when `e[group, slot]` is a variable of this shape.
    pub fn contains(&self, v: TensorVar) -> bool {
        (v.slot as usize) <= self.slots(v.group)
    }

    /// All slot variables, group-major.
    pub fn vars(&self) -> Vec<TensorVar> {
        let mut out = Vec::new();
        for (i, &n) in self.0.iter().enumerate() {
            for j in 1..=n {
                out.push(TensorVar::new((i + 1) as u32, j as u32));
            }
        }
        out
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", n)?;
        }
        write!(f, ")")
    }
}

/// Commutative monomial in slot variables, kept as a sorted factor list.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorMonomial {
    factors: Vec<TensorVar>,
}

impl TensorMonomial {
    pub fn unit() -> Self {
        TensorMonomial::default()
    }

    pub fn from_factors(mut factors: Vec<TensorVar>) -> Self {
        factors.sort_unstable();
        TensorMonomial { factors }
    }

    pub fn factors(&self) -> &[TensorVar] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        TensorMonomial::from_factors(factors)
    }

    /// Exponent of `e[group, slot]` in this monomial.
    pub fn exponent(&self, v: TensorVar) -> usize {
        self.factors.iter().filter(|&&w| w == v).count()
    }

    /// The monomial with slots `a` and `b` of group `k` exchanged.
    fn swap_slots(&self, k: u32, a: u32, b: u32) -> Self {
        TensorMonomial::from_factors(
            self.factors
                .iter()
                .map(|&v| {
                    if v.group == k && v.slot == a {
                        TensorVar::new(k, b)
                    } else if v.group == k && v.slot == b {
                        TensorVar::new(k, a)
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }
}

impl Ord for TensorMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for TensorMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorMonomial {
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

/// Polynomial in the slot variables of a fixed shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    shape: GroupShape,
    terms: BTreeMap<TensorMonomial, Coeff>,
}

impl TensorPoly {
    pub fn zero(shape: GroupShape) -> Self {
        TensorPoly {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(shape: GroupShape) -> Self {
        TensorPoly::from_terms(shape, [(TensorMonomial::unit(), Coeff::one())])
    }

    pub fn from_terms<I>(shape: GroupShape, terms: I) -> Self
    where
        I: IntoIterator<Item = (TensorMonomial, Coeff)>,
    {
        let mut map: BTreeMap<TensorMonomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert!(m.factors().iter().all(|&v| shape.contains(v)));
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(m).or_insert_with(Coeff::zero);
            *entry += c;
            // prune in a second pass to keep the loop simple
        }
        map.retain(|_, c| !c.is_zero());
        TensorPoly { shape, terms: map }
    }

    pub fn shape(&self) -> &GroupShape {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&TensorMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &TensorMonomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        assert_eq!(self.shape, other.shape, "shape mismatch in addition");
        TensorPoly::from_terms(
            self.shape.clone(),
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        self.add(&other.scale(&coeff_int(-1)))
    }

    pub fn scale(&self, c: &Coeff) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero(self.shape.clone());
        }
        TensorPoly {
            shape: self.shape.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &TensorPoly) -> TensorPoly {
        assert_eq!(self.shape, other.shape, "shape mismatch in multiplication");
        let mut out = Vec::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.push((ma.mul(mb), ca * cb));
            }
        }
        TensorPoly::from_terms(self.shape.clone(), out)
    }

    pub fn pow(&self, n: usize) -> TensorPoly {
        let mut acc = TensorPoly::one(self.shape.clone());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Invariance under every adjacent slot transposition within each group.
    pub fn is_symmetrized(&self) -> bool {
        for (i, &n) in self.shape.0.iter().enumerate() {
            let k = (i + 1) as u32;
            for j in 1..n {
                let swapped = TensorPoly::from_terms(
                    self.shape.clone(),
                    self.terms
                        .iter()
                        .map(|(m, c)| (m.swap_slots(k, j as u32, (j + 1) as u32), c.clone())),
                );
                if swapped != *self {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for TensorPoly {
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

/// Transform of a homogeneous polynomial, in the shape given by its own
/// multidegree (padded to the largest variable index).
pub fn gd_transform(f: &DiffPoly) -> Result<TensorPoly> {
    match f.multidegree() {
        Multidegree::Zero => Ok(TensorPoly::zero(GroupShape(vec![]))),
        Multidegree::Mixed => Err(Error::NotHomogeneous),
        Multidegree::Homogeneous(lambda) => gd_transform_in_shape(f, &GroupShape(lambda)),
    }
}

/// Transform of `f` viewed in an explicit shape; every monomial of `f` must
/// have exactly the shape's per-variable degrees.
pub fn gd_transform_in_shape(f: &DiffPoly, shape: &GroupShape) -> Result<TensorPoly> {
    let n = shape.len();
    let mut out = TensorPoly::zero(shape.clone());
    for (mono, coeff) in f.terms() {
        let mut degs = mono.var_degrees();
        degs.resize(degs.len().max(n), 0);
        if degs != shape.0 {
            return Err(Error::ShapeMismatch(format!(
                "monomial {} has degrees {:?}, expected {}",
                mono, degs, shape
            )));
        }
        // per-group distinct slot assignments with their weights
        let mut group_terms: Vec<Vec<(Vec<TensorVar>, Coeff)>> = Vec::with_capacity(n);
        for k in 1..=n as u32 {
            let orders = mono.orders_of(k);
            group_terms.push(group_arrangements(k, &orders));
        }
        // cartesian product over groups
        let mut acc: Vec<(Vec<TensorVar>, Coeff)> = vec![(Vec::new(), coeff.clone())];
        for terms in &group_terms {
            let mut next = Vec::with_capacity(acc.len() * terms.len());
            for (fs, c) in &acc {
                for (gfs, gc) in terms {
                    let mut fs2 = fs.clone();
                    fs2.extend_from_slice(gfs);
                    next.push((fs2, c * gc));
                }
            }
            acc = next;
        }
        out = out.add(&TensorPoly::from_terms(
            shape.clone(),
            acc.into_iter()
                .map(|(fs, c)| (TensorMonomial::from_factors(fs), c)),
        ));
    }
    Ok(out)
}

/// Distinct assignments of an order multiset to the slots of one group.
/// Assigning order `o` to slot `j` contributes `o` factors `e[k,j]`; each
/// distinct assignment carries weight `(Π_v mult_v!) / N_k!` so the total
/// over all assignments matches the average over all `N_k!` permutations.
fn group_arrangements(k: u32, orders: &[u32]) -> Vec<(Vec<TensorVar>, Coeff)> {
    let n = orders.len();
    if n == 0 {
        return vec![(Vec::new(), Coeff::one())];
    }
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &o in orders {
        *counts.entry(o).or_insert(0) += 1;
    }
    let mut weight_num = num_bigint::BigInt::from(1);
    for &c in counts.values() {
        weight_num *= factorial(c);
    }
    let weight = Coeff::new(weight_num, factorial(n));

    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(n);
    arrange(&mut counts, n, &mut current, &mut |assignment| {
        let mut factors = Vec::new();
        for (j, &o) in assignment.iter().enumerate() {
            for _ in 0..o {
                factors.push(TensorVar::new(k, (j + 1) as u32));
            }
        }
        out.push((factors, weight.clone()));
    });
    out
}

fn arrange(
    counts: &mut BTreeMap<u32, usize>,
    remaining: usize,
    current: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if remaining == 0 {
        f(current);
        return;
    }
    let values: Vec<u32> = counts
        .iter()
        .filter(|&(_, &c)| c > 0)
        .map(|(&v, _)| v)
        .collect();
    for v in values {
        *counts.get_mut(&v).unwrap() -= 1;
        current.push(v);
        arrange(counts, remaining - 1, current, f);
        current.pop();
        *counts.get_mut(&v).unwrap() += 1;
    }
}

/// The Euler operator on the transformed side: substitute
/// `e[k,N_k] ↦ −(Σ_{j<N_k} e[k,j] + Σ_{i≠k} Σ_j e[i,j])`, multiply by `N_k`,
/// and view the result in the shape with group `k` one slot smaller.
pub fn gd_euler(tp: &TensorPoly, k: u32) -> Result<TensorPoly> {
    let dec = tp.shape().decremented(k)?;
    let nk = tp.shape().slots(k);
    let last = TensorVar::new(k, nk as u32);
    let substitution = {
        let mut terms = Vec::new();
        for v in dec.vars() {
            terms.push((TensorMonomial::from_factors(vec![v]), -Coeff::one()));
        }
        TensorPoly::from_terms(dec.clone(), terms)
    };
    let mut powers = vec![TensorPoly::one(dec.clone())];
    let mut out = TensorPoly::zero(dec.clone());
    for (m, c) in tp.terms() {
        let p = m.exponent(last);
        while powers.len() <= p {
            let next = powers.last().unwrap().mul(&substitution);
            powers.push(next);
        }
        let rest = TensorMonomial::from_factors(
            m.factors().iter().copied().filter(|&v| v != last).collect(),
        );
        let rest_poly = TensorPoly::from_terms(dec.clone(), [(rest, c.clone())]);
        out = out.add(&rest_poly.mul(&powers[p]));
    }
    Ok(out.scale(&coeff_int(nk as i64)))
}

/// Both sides of the intertwining relation for `E^k`: the transform of
/// `E^k f` against the slot-substitution image of the transform of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommuteReport {
    /// Transform of `E^k f`, in the decremented shape.
    pub transformed_euler: TensorPoly,
    /// `Ê^k` applied to the transform of `f`.
    pub euler_transformed: TensorPoly,
}

impl CommuteReport {
    pub fn holds(&self) -> bool {
        self.transformed_euler == self.euler_transformed
    }
}

/// Computes both sides of the intertwining relation for variable `k` on a
/// homogeneous `f`.
pub fn commute_check(f: &DiffPoly, k: u32) -> Result<CommuteReport> {
    let Multidegree::Homogeneous(mut lambda) = f.multidegree() else {
        return Err(Error::NotHomogeneous);
    };
    lambda.resize(lambda.len().max(k as usize), 0);
    let shape = GroupShape(lambda);
    let dec = shape.decremented(k)?;
    let transformed_euler = gd_transform_in_shape(&euler(f, k), &dec)?;
    let euler_transformed = gd_euler(&gd_transform_in_shape(f, &shape)?, k)?;
    Ok(CommuteReport {
        transformed_euler,
        euler_transformed,
    })
}
