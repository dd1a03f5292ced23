//! Variational calculus on F{X}: Euler operators, exact antiderivatives,
//! the symmetric subspace, and the null-Lagrangian criterion.
//!
//! The Euler operator for the variable `x_k` is
//! `E^k = Σ_i (−D)^i ∂/∂x_k^(i)`, truncated at the largest order with which
//! `x_k` occurs. On each multigraded component the kernel of all `E^k`
//! coincides with the image of `D`, which is what makes the antiderivative
//! and the symmetry test exact linear-algebra problems.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coeff::{binomial, Coeff};
use crate::diffpoly::{component_basis, DiffMonomial, DiffPoly, Multidegree};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Solve};
use crate::novikov::is_novikov_element;

/// `E^k f = Σ_{i=0}^{max order of x_k in f} (−D)^i ∂f/∂x_k^(i)`.
pub fn euler(f: &DiffPoly, k: u32) -> DiffPoly {
    let Some(max) = f.max_order_of(k) else {
        return DiffPoly::zero();
    };
    let mut acc = DiffPoly::zero();
    for i in 0..=max {
        let term = f.partial(k, i).derive_n(i as usize);
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `E^1 f, …, E^n f` for `n = max_var(f)`.
pub fn euler_all(f: &DiffPoly) -> Vec<DiffPoly> {
    euler_upto(f, f.max_var())
}

/// `E^1 f, …, E^n f` for a caller-chosen `n`.
pub fn euler_upto(f: &DiffPoly, n: u32) -> Vec<DiffPoly> {
    (1..=n).map(|k| euler(f, k)).collect()
}

/// True when every Euler operator annihilates `f`.
pub fn is_null_lagrangian(f: &DiffPoly) -> bool {
    euler_all(f).iter().all(|e| e.is_zero())
}

/// The unique `g` with `D(g) = f` and zero constant term, computed by exact
/// linear solves on each multigraded component. Fails with [`Error::NotExact`]
/// when `f` is not a derivative.
pub fn antiderivative(f: &DiffPoly) -> Result<DiffPoly> {
    type Component = Vec<(DiffMonomial, Coeff)>;
    let n = f.max_var() as usize;
    let mut components: BTreeMap<(Vec<usize>, usize), Component> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut lambda = m.var_degrees();
        lambda.resize(n, 0);
        components
            .entry((lambda, m.diff_degree()))
            .or_default()
            .push((m.clone(), c.clone()));
    }
    let mut out = DiffPoly::zero();
    for ((lambda, d), terms) in components {
        if d == 0 {
            // D raises the derivative order of every monomial
            return Err(Error::NotExact);
        }
        let pre = component_basis(&lambda, d - 1);
        let tgt = component_basis(&lambda, d);
        let index: BTreeMap<&DiffMonomial, usize> =
            tgt.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = Matrix::zeros(tgt.len(), pre.len());
        for (j, u) in pre.iter().enumerate() {
            for (m, c) in DiffPoly::monomial(u.clone()).derive().terms() {
                let i = index[m];
                mat.set(i, j, mat.get(i, j) + c);
            }
        }
        let mut b = vec![Coeff::zero(); tgt.len()];
        for (m, c) in terms {
            b[index[&m]] = c;
        }
        match mat.solve(&b) {
            Solve::Inconsistent => return Err(Error::NotExact),
            Solve::Solution(x) => {
                out = &out
                    + &DiffPoly::from_terms(
                        pre.iter().cloned().zip(x),
                    );
            }
        }
    }
    debug_assert_eq!(&out.derive(), f);
    Ok(out)
}

/// A basis element of the symmetric subspace S⟨X⟩: either a generator `x_k`
/// or the derivative of a monomial `u` with `deg(u) − d(u) = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymBasisElem {
    Generator(u32),
    Derived(DiffMonomial),
}

impl SymBasisElem {
    /// The element as a differential polynomial.
    pub fn poly(&self) -> DiffPoly {
        match self {
            SymBasisElem::Generator(k) => DiffPoly::gen(*k),
            SymBasisElem::Derived(u) => DiffPoly::monomial(u.clone()).derive(),
        }
    }
}

/// Basis of the multidegree-`lambda` component of S⟨X⟩: the generator when
/// `|lambda| = 1`, otherwise the derivatives of the monomials with factor
/// degrees `lambda` and derivative order `|lambda| − 2`.
pub fn sym_basis(lambda: &[usize]) -> Result<Vec<SymBasisElem>> {
    if lambda.is_empty() || lambda.contains(&0) {
        return Err(Error::InvalidMultidegree(format!(
            "multidegree entries must be positive, got {:?}",
            lambda
        )));
    }
    let total: usize = lambda.iter().sum();
    if total == 1 {
        return Ok(vec![SymBasisElem::Generator(1)]);
    }
    Ok(component_basis(lambda, total - 2)
        .into_iter()
        .map(SymBasisElem::Derived)
        .collect())
}

/// Dimension of the multilinear part of S⟨X⟩ in `n` variables:
/// 1 for `n = 1`, otherwise `C(2n−3, n−1)`.
pub fn sym_multilinear_dim(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidMultidegree(
            "multilinear component needs at least one variable".into(),
        ));
    }
    if n == 1 {
        return Ok(1);
    }
    Ok(binomial((2 * n - 3) as u64, (n - 1) as u64))
}

/// Witness that `f` is symmetric: `f = generator_part + D(antiderivative)`
/// with the antiderivative supported on monomials with `deg − d = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymCertificate {
    pub generator_part: DiffPoly,
    pub antiderivative: DiffPoly,
}

/// Splits `f` into its bare-generator part and the rest, then decides
/// membership in S⟨X⟩ by computing an exact antiderivative of the rest and
/// checking its support grading. Returns the witness, or `None` when `f` is
/// not symmetric.
pub fn symmetric_certificate(f: &DiffPoly) -> Option<SymCertificate> {
    let mut gen_terms = Vec::new();
    let mut rest_terms = Vec::new();
    for (m, c) in f.terms() {
        let bare_generator = m.deg() == 1 && m.diff_degree() == 0;
        if bare_generator {
            gen_terms.push((m.clone(), c.clone()));
        } else {
            rest_terms.push((m.clone(), c.clone()));
        }
    }
    let generator_part = DiffPoly::from_terms(gen_terms);
    let rest = DiffPoly::from_terms(rest_terms);
    let g = antiderivative(&rest).ok()?;
    let in_span = g.terms().all(|(m, _)| m.deg() == m.diff_degree() + 2);
    in_span.then_some(SymCertificate {
        generator_part,
        antiderivative: g,
    })
}

pub fn is_symmetric(f: &DiffPoly) -> bool {
    symmetric_certificate(f).is_some()
}

/// The three equivalent statements of the null-Lagrangian criterion for a
/// homogeneous Novikov element, each evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    /// `f` lies in the symmetric subspace.
    pub condition1: bool,
    /// Every Euler operator annihilates `f`.
    pub condition2: bool,
    /// Some Euler operator annihilates `f`.
    pub condition3: bool,
    /// `E^1 f, …, E^n f` for the variables of the multidegree.
    pub euler: Vec<DiffPoly>,
    /// Witness when `condition1` holds.
    pub certificate: Option<SymCertificate>,
}

impl CriterionReport {
    /// The three conditions agree (as the criterion asserts they must).
    pub fn consistent(&self) -> bool {
        self.condition1 == self.condition2 && self.condition2 == self.condition3
    }
}

/// Evaluates the criterion on `f`, which must be a Novikov element,
/// homogeneous of a multidegree with every entry positive, and of degree
/// at least 2.
pub fn criterion_check(f: &DiffPoly) -> Result<CriterionReport> {
    let Multidegree::Homogeneous(lambda) = f.multidegree() else {
        return Err(Error::NotHomogeneous);
    };
    if lambda.contains(&0) {
        return Err(Error::HypothesesNotMet(
            "every variable up to the largest index must occur",
        ));
    }
    let total: usize = lambda.iter().sum();
    if total < 2 {
        return Err(Error::HypothesesNotMet("degree must be at least 2"));
    }
    if !is_novikov_element(f) {
        return Err(Error::NotNovikov);
    }
    let euler = euler_upto(f, lambda.len() as u32);
    let condition2 = euler.iter().all(|e| e.is_zero());
    let condition3 = euler.iter().any(|e| e.is_zero());
    let certificate = symmetric_certificate(f);
    let condition1 = certificate.is_some();
    Ok(CriterionReport {
        condition1,
        condition2,
        condition3,
        euler,
        certificate,
    })
}

/// Exactness data for the component of multidegree `lambda` and derivative
/// order `d`: the image of `D` inside it versus the joint kernel of the
/// Euler operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    /// Dimension of the component.
    pub dim_component: usize,
    /// Dimension of `D`(previous component).
    pub rank_d: usize,
    /// Dimension of the joint kernel of `E^1, …, E^n` on the component.
    pub dim_ker_euler: usize,
    /// Every `D`-image in the component is annihilated by every `E^k`.
    pub contained: bool,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.contained && self.rank_d == self.dim_ker_euler
    }
}

/// Verifies `ker E = im D` on one multigraded component by exact rank
/// computations.
pub fn exactness_check(lambda: &[usize], d: usize) -> Result<ExactnessReport> {
    if lambda.is_empty() || lambda.contains(&0) {
        return Err(Error::InvalidMultidegree(format!(
            "multidegree entries must be positive, got {:?}",
            lambda
        )));
    }
    let n = lambda.len() as u32;
    let tgt = component_basis(lambda, d);

    let (rank_d, contained) = if d == 0 {
        (0, true)
    } else {
        let pre = component_basis(lambda, d - 1);
        let index: BTreeMap<&DiffMonomial, usize> =
            tgt.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = Matrix::zeros(tgt.len(), pre.len());
        let mut contained = true;
        for (j, u) in pre.iter().enumerate() {
            let du = DiffPoly::monomial(u.clone()).derive();
            for (m, c) in du.terms() {
                let i = index[m];
                mat.set(i, j, mat.get(i, j) + c);
            }
            if euler_upto(&du, n).iter().any(|e| !e.is_zero()) {
                contained = false;
            }
        }
        (mat.rank(), contained)
    };

    // stack the coordinate matrices of all E^k (each maps the component to
    // the one with λ_k lowered); the joint kernel is the nullspace
    let mut out_bases = Vec::new();
    for k in 1..=lambda.len() {
        let mut dec = lambda.to_vec();
        dec[k - 1] -= 1;
        while dec.last() == Some(&0) {
            dec.pop();
        }
        out_bases.push(component_basis(&dec, d));
    }
    let height: usize = out_bases.iter().map(|b| b.len()).sum();
    let mut stacked = Matrix::zeros(height, tgt.len());
    for (j, u) in tgt.iter().enumerate() {
        let mut offset = 0;
        for (k, out_basis) in out_bases.iter().enumerate() {
            let index: BTreeMap<&DiffMonomial, usize> =
                out_basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let e = euler(&DiffPoly::monomial(u.clone()), (k + 1) as u32);
            for (m, c) in e.terms() {
                stacked.set(offset + index[m], j, c.clone());
            }
            offset += out_basis.len();
        }
    }
    let dim_ker_euler = tgt.len() - stacked.rank();

    Ok(ExactnessReport {
        dim_component: tgt.len(),
        rank_d,
        dim_ker_euler,
        contained,
    })
}
