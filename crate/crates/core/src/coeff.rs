//! Exact rational coefficients and small combinatorial helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Scalar type of every algebra in this crate: an arbitrary-precision
/// rational kept in lowest terms.
pub type Coeff = BigRational;

/// The integer `n` as a coefficient.
pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// The fraction `num/den` as a coefficient. Panics if `den` is zero.
pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k), exact.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// Renders a coefficient as `p` or `p/q`.
pub fn render_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders `|c|`; used when the sign is emitted separately.
pub fn render_coeff_abs(c: &Coeff) -> String {
    render_coeff(&c.abs())
}
