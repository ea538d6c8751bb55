//! Affine points and Riemann-Roch bases for `y^2 = f(x)` over `GF(p)`.

use crate::exact::{mul_mod, pow_mod, sub_mod, Field, MPoly, Scalar, UniPolyFp};

/// A square root of `a` modulo an odd prime `p`, if one exists (Tonelli-Shanks).
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .unwrap();
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// All affine points of `y^2 = f(x)` over `GF(p)`, sorted.
pub fn affine_points(f: &[u64], p: u64) -> Vec<(u64, u64)> {
    let poly = UniPolyFp::new(p, f.to_vec());
    let mut out = Vec::new();
    for x in 0..p {
        let v = poly.eval(x);
        if let Some(r) = sqrt_mod(v, p) {
            if r == 0 {
                out.push((x, 0));
            } else {
                let (lo, hi) = if r < p - r { (r, p - r) } else { (p - r, r) };
                out.push((x, lo));
                out.push((x, hi));
            }
        }
    }
    out
}

/// Basis of `L(n * inf)` on `y^2 = f(x)` with the point at infinity of pole
/// orders `ord(x) = 2`, `ord(y) = 2g + 1`, sorted by pole order.
pub(crate) fn riemann_roch_basis(field: Field, genus: u32, n: u32) -> Vec<MPoly> {
    let mut funcs: Vec<(u32, MPoly)> = Vec::new();
    for i in 0..=n / 2 {
        funcs.push((2 * i, MPoly::monomial(vec![i, 0], Scalar::one(field))));
    }
    let y_ord = 2 * genus + 1;
    let mut i = 0;
    while 2 * i + y_ord <= n {
        funcs.push((
            2 * i + y_ord,
            MPoly::monomial(vec![i, 1], Scalar::one(field)),
        ));
        i += 1;
    }
    funcs.sort_by_key(|(ord, _)| *ord);
    funcs.into_iter().map(|(_, f)| f).collect()
}

/// `f(x)` coefficients for `x^3 + a x + b`.
pub(crate) fn weierstrass(a: i64, b: i64, p: u64) -> Vec<u64> {
    let r = |v: i64| crate::exact::reduce_i64(v, p);
    vec![r(b), r(a), 0, 1]
}

/// `4a^3 + 27b^2 != 0` in `GF(p)`.
pub(crate) fn weierstrass_nonsingular(a: u64, b: u64, p: u64) -> bool {
    let a3 = mul_mod(mul_mod(a, a, p), a, p);
    let lhs = mul_mod(4 % p, a3, p);
    let rhs = mul_mod(27 % p, mul_mod(b, b, p), p);
    sub_mod(0, lhs, p) != rhs
}
