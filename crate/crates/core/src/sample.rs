//! Seedable random elements for property tests and the self-test command.

use rand::Rng;

use crate::coeff::{coeff_int, Coeff};
use crate::diffpoly::{component_basis, DiffMonomial, DiffPoly, DiffVar};

/// Bounds for random differential polynomials.
#[derive(Clone, Copy, Debug)]
pub struct PolySampler {
    /// Variables are drawn from `1..=vars`.
    pub vars: u32,
    pub max_terms: usize,
    pub max_factors: usize,
    pub max_order: u32,
    /// Coefficients are nonzero integers in `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
}

impl Default for PolySampler {
    fn default() -> Self {
        PolySampler {
            vars: 3,
            max_terms: 4,
            max_factors: 4,
            max_order: 3,
            coeff_bound: 9,
        }
    }
}

impl PolySampler {
    pub fn coeff(&self, rng: &mut impl Rng) -> Coeff {
        loop {
            let c = rng.random_range(-self.coeff_bound..=self.coeff_bound);
            if c != 0 {
                return coeff_int(c);
            }
        }
    }

    pub fn monomial(&self, rng: &mut impl Rng) -> DiffMonomial {
        let len = rng.random_range(1..=self.max_factors);
        DiffMonomial::from_factors(
            (0..len)
                .map(|_| {
                    DiffVar::new(
                        rng.random_range(1..=self.vars),
                        rng.random_range(0..=self.max_order),
                    )
                })
                .collect(),
        )
    }

    pub fn poly(&self, rng: &mut impl Rng) -> DiffPoly {
        let terms = rng.random_range(1..=self.max_terms);
        DiffPoly::from_terms((0..terms).map(|_| (self.monomial(rng), self.coeff(rng))))
    }

    /// Random element of the span of the multidegree-`lambda`, order-`d`
    /// component (zero if the component is empty).
    pub fn component_element(
        &self,
        rng: &mut impl Rng,
        lambda: &[usize],
        d: usize,
    ) -> DiffPoly {
        DiffPoly::from_terms(
            component_basis(lambda, d)
                .into_iter()
                .map(|m| (m, self.coeff(rng))),
        )
    }

    /// Random homogeneous element of the free Novikov algebra with factor
    /// degrees `lambda`.
    pub fn novikov_element(&self, rng: &mut impl Rng, lambda: &[usize]) -> DiffPoly {
        let total: usize = lambda.iter().sum();
        assert!(total >= 1, "multidegree must be nonempty");
        self.component_element(rng, lambda, total - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::novikov::is_novikov_element;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_under_seed() {
        let s = PolySampler::default();
        let a = s.poly(&mut ChaCha8Rng::seed_from_u64(7));
        let b = s.poly(&mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
    }

    #[test]
    fn respects_bounds() {
        let s = PolySampler {
            vars: 2,
            max_terms: 3,
            max_factors: 3,
            max_order: 2,
            coeff_bound: 5,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = s.poly(&mut rng);
            assert!(!p.is_zero());
            assert!(p.num_terms() <= 3);
            assert!(p.max_var() <= 2);
            for (m, c) in p.terms() {
                assert!(m.deg() <= 3);
                assert!(m.factors().iter().all(|v| v.order <= 2));
                assert!(c.is_integer());
                // like terms may merge, so the bound scales with max_terms
                assert!(c.numer().magnitude() <= &(3u32 * 5).into());
            }
        }
    }

    #[test]
    fn component_elements_live_in_their_component() {
        let s = PolySampler::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let f = s.novikov_element(&mut rng, &[2, 1]);
            assert!(is_novikov_element(&f));
            for (m, _) in f.terms() {
                assert_eq!(m.var_degrees(), vec![2, 1]);
            }
        }
        // empty component yields zero
        assert!(s.component_element(&mut rng, &[], 3).is_zero());
    }
}
