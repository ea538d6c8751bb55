//! Exact scalars, dense matrices and sparse polynomials.
//!
//! Everything downstream reduces to ranks of matrices over `Q` or `GF(p)`;
//! nothing in the crate touches floating point.

mod field;
mod matrix;
mod poly;

pub use field::{
    add_mod, inv_mod, is_prime_u64, mul_mod, pow_mod, reduce_bigint, reduce_i64, sub_mod, Field,
    Modulus, Scalar, CHECKED_PRIME_BOUND, MAX_MODULUS,
};
pub use matrix::{rank_integer, rank_mod_p, EchelonFp, Matrix};
pub use poly::{eval_monomials, eval_monomials_mod, monomials, Exponent, MPoly, UniPolyFp};

/// `C(a, b)` with the convention `C(a, b) = 0` when `b < 0` or `a < b`.
pub fn binom(a: i64, b: i64) -> i128 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc
}
