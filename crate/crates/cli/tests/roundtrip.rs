//! The canonical renderer and the parser are mutual inverses.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use novikov_cli::parse_diff;
use novikov_core::sample::PolySampler;

proptest! {
    #[test]
    fn rendered_polynomials_parse_back(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sampler = PolySampler { vars: 4, max_terms: 5, max_factors: 4, max_order: 5, coeff_bound: 99 };
        let p = sampler.poly(&mut rng);
        let back = parse_diff(&p.to_string()).expect("canonical form should parse");
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rendered_fractions_parse_back(n in -200i64..200, d in 1i64..40) {
        let p = novikov_core::DiffPoly::constant(novikov_core::coeff::coeff_ratio(n, d));
        let back = parse_diff(&p.to_string()).expect("constants should parse");
        prop_assert_eq!(back, p);
    }
}
