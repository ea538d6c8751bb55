//! Closed-form bounds on the number of degree-`m` hypersurfaces containing a
//! nondegenerate variety of dimension `n` and codimension `c`, and exhaustive
//! checks of the identities relating them.
//!
//! All values are exact `i128`. Binomials follow `C(a, b) = 0` for `b < 0`
//! or `a < b`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::binom;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(msg()))
    }
}

// Unchecked forms. The recurrences below evaluate them one step outside the
// documented ranges (n = 0, m = 1), where the binomial convention still
// gives the right boundary values.
fn f_raw(n: i64, c: i64, m: i64) -> i128 {
    binom(m + n + c, n + c) - ((c + 1) as i128 * binom(m + n - 1, n) + binom(m + n - 1, n - 1))
}

fn g_raw(t: i64, n: i64, c: i64, m: i64) -> i128 {
    binom(m + n + c, n + c)
        - ((c + 2) as i128 * binom(m + n - 1, n) + binom(m + n - 1, n - 1)
            - binom(m + t - 3, t - 2))
}

fn h_raw(k: i64, n: i64, c: i64, m: i64) -> i128 {
    binom(m + n + c, m)
        - ((c + k) as i128 * binom(m + n - 1, n)
            + (2 - k) as i128 * binom(m + n - 2, n - 1)
            + binom(m + n - 2, n - 2))
}

/// Value of `a_m` for varieties of minimal degree `c + 1`.
pub fn f(n: u32, c: u32, m: u32) -> Result<i128> {
    ensure(n >= 1 && c >= 1 && m >= 1, || {
        format!("F needs n, c, m >= 1 (got n={n}, c={c}, m={m})")
    })?;
    Ok(f_raw(n as i64, c as i64, m as i64))
}

/// Value of `a_m` for varieties of degree `c + 2` and arithmetic depth `t`.
pub fn g(t: u32, n: u32, c: u32, m: u32) -> Result<i128> {
    ensure((1..=n + 1).contains(&t), || {
        format!("G needs 1 <= t <= n+1 (got t={t}, n={n})")
    })?;
    ensure(n >= 1 && c >= 1 && m >= 2, || {
        format!("G needs n, c >= 1 and m >= 2 (got n={n}, c={c}, m={m})")
    })?;
    Ok(g_raw(t as i64, n as i64, c as i64, m as i64))
}

/// Value of `a_m` for arithmetically Cohen-Macaulay varieties of degree `c + k`.
pub fn h(k: u32, n: u32, c: u32, m: u32) -> Result<i128> {
    ensure((1..=c + 1).contains(&k), || {
        format!("H needs 1 <= k <= c+1 (got k={k}, c={c})")
    })?;
    ensure(n >= 1 && m >= 1, || {
        format!("H needs n, m >= 1 (got n={n}, m={m})")
    })?;
    Ok(h_raw(k as i64, n as i64, c as i64, m as i64))
}

/// `C(c+1+m, m) - (d m + 1 - g)`: the value of `a_m` for a curve of genus `g`
/// and degree `d` in `P^{c+1}` whose deficiency module vanishes in degree `m`.
pub fn u(c: u32, g: u32, d: u32, m: u32) -> Result<i128> {
    ensure(c >= 2 && d > c && m >= 1, || {
        format!("u needs c >= 2, d >= c+1, m >= 1 (got c={c}, d={d}, m={m})")
    })?;
    Ok(binom((c + 1 + m) as i64, m as i64) - (d as i128 * m as i128 + 1 - g as i128))
}

/// Varieties attaining a value of the bound sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Witness {
    /// Degree `c + 1`.
    MinimalDegree,
    /// Degree `c + 2`, depth `n + 1`.
    DelPezzo,
    /// Degree `c + 2`, arithmetic depth `depth`.
    AlmostMinimalDepth {
        depth: u32,
    },
    /// Arithmetically Cohen-Macaulay, degree `c + k`.
    AcmDegreeCPlusK {
        k: u32,
    },
    /// Curve of arithmetic genus `g` and degree `d`.
    CurveGenusDegree {
        g: u32,
        d: u32,
    },
    Unknown,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::MinimalDegree => write!(f, "minimal degree"),
            Witness::DelPezzo => write!(f, "del Pezzo (degree c+2, depth n+1)"),
            Witness::AlmostMinimalDepth { depth } => {
                write!(f, "degree c+2, depth {depth}")
            }
            Witness::AcmDegreeCPlusK { k } => write!(f, "ACM of degree c+{k}"),
            Witness::CurveGenusDegree { g, d } => write!(f, "curve with g={g}, d={d}"),
            Witness::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub value: i128,
    pub witness: Witness,
}

/// The `k`-th largest attainable value of `a_m` and who attains it.
///
/// `candidates` lists the closed forms that were compared; `witnesses`
/// lists those attaining `value` (two entries when they tie).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaAnswer {
    pub value: i128,
    pub witnesses: Vec<Witness>,
    pub candidates: Vec<Candidate>,
}

impl DeltaAnswer {
    fn single(value: i128, witness: Witness) -> DeltaAnswer {
        DeltaAnswer {
            value,
            witnesses: vec![witness],
            candidates: vec![Candidate { value, witness }],
        }
    }
}

/// `m^2 + mn - n^2 - 5m - n + 6`, whose sign decides the fourth value.
pub fn delta4_discriminant(n: u32, m: u32) -> i64 {
    let (n, m) = (n as i64, m as i64);
    m * m + m * n - n * n - 5 * m - n + 6
}

/// Largest values of `a_m` for `k = 1..4` over all dimensions.
pub fn delta_small(n: u32, c: u32, m: u32, k: u32) -> Result<DeltaAnswer> {
    ensure(n >= 1 && c >= 2 && m >= 2, || {
        format!("delta needs n >= 1, c >= 2, m >= 2 (got n={n}, c={c}, m={m})")
    })?;
    match k {
        1 => Ok(DeltaAnswer::single(f(n, c, m)?, Witness::MinimalDegree)),
        2 => Ok(DeltaAnswer::single(g(n + 1, n, c, m)?, Witness::DelPezzo)),
        3 => {
            let value = g(n, n, c, m)?;
            let mut ans = DeltaAnswer::single(value, Witness::AlmostMinimalDepth { depth: n });
            if m == 2 && c >= 3 {
                let w = Witness::AcmDegreeCPlusK { k: 3 };
                ans.witnesses.push(w);
                ans.candidates.push(Candidate {
                    value: h(3, n, c, m)?,
                    witness: w,
                });
            }
            Ok(ans)
        }
        4 => {
            if n == 1 {
                return Err(Error::NotCovered(
                    "k=4 needs n >= 2; for curves with m >= c use delta_curve".into(),
                ));
            }
            if m < 3 {
                return Err(Error::NotCovered(format!("k=4 needs m >= 3 (got m={m})")));
            }
            let a = Candidate {
                value: g(n - 1, n, c, m)?,
                witness: Witness::AlmostMinimalDepth { depth: n - 1 },
            };
            let b = Candidate {
                value: h(3, n, c, m)?,
                witness: Witness::AcmDegreeCPlusK { k: 3 },
            };
            let disc = delta4_discriminant(n, m);
            let witnesses = match disc.cmp(&0) {
                std::cmp::Ordering::Greater => vec![a.witness],
                std::cmp::Ordering::Less => vec![b.witness],
                std::cmp::Ordering::Equal => vec![a.witness, b.witness],
            };
            Ok(DeltaAnswer {
                value: a.value.max(b.value),
                witnesses,
                candidates: vec![a, b],
            })
        }
        _ => Err(Error::NotCovered(format!(
            "k={k} is only known for curves with m >= c (see delta_curve)"
        ))),
    }
}

/// The `(g, d)` pair indexed by `k`, where `k = C(d-c, 2) + (d - c - g)`.
pub fn curve_index(c: u32, k: u32) -> Result<(u32, u32)> {
    let kmax = binom(c as i64, 2) as u32 + c;
    ensure(c >= 2 && (1..=kmax).contains(&k), || {
        format!("k must lie in 1..={kmax} for c={c} (got {k})")
    })?;
    let tri = |j: u32| j * j.saturating_sub(1) / 2;
    let j = (1..=c)
        .find(|&j| tri(j) < k && k <= tri(j) + j)
        .expect("k in range");
    Ok((tri(j) + j - k, c + j))
}

/// Largest values of `a_m` for curves, valid once `m >= c`.
pub fn delta_curve(c: u32, m: u32, k: u32) -> Result<DeltaAnswer> {
    ensure(m >= c, || {
        format!("delta_curve needs m >= c (got m={m}, c={c})")
    })?;
    let (g, d) = curve_index(c, k)?;
    Ok(DeltaAnswer::single(
        u(c, g, d, m)?,
        Witness::CurveGenusDegree { g, d },
    ))
}

/// Outcome of one identity family over the grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Family {
    name: &'static str,
    checked: usize,
    counterexample: Option<String>,
}

impl Family {
    fn new(name: &'static str) -> Family {
        Family {
            name,
            checked: 0,
            counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, at: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(at());
        }
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name,
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

fn strictly_decreasing(v: &[i128]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

/// Checks the nine identity families over `1 <= n <= n_max`,
/// `2 <= c <= c_max`, `2 <= m <= m_max`.
///
/// The `G` recurrence is checked with the depth index lowered on the
/// hyperplane-section term, `G_t(n, m) = G_t(n, m-1) + G_{t-1}(n-1, m)`;
/// with the same `t` on both sides it fails already at `(t,n,c,m) = (2,1,2,2)`.
pub fn identity_suite(n_max: u32, c_max: u32, m_max: u32) -> Vec<IdentityCheck> {
    let mut f_rec = Family::new("F recurrence F(n,m) = F(n,m-1) + F(n-1,m)");
    let mut g_rec = Family::new("G recurrence G_t(n,m) = G_t(n,m-1) + G_{t-1}(n-1,m)");
    let mut fg_chain = Family::new("chain F > G_{n+1} > G_n > ... > G_1");
    let mut h_rec = Family::new("H recurrence H_k(n,m) = H_k(n,m-1) + H_k(n-1,m)");
    let mut h_eq = Family::new("H_1 = F and H_2 = G_{n+1}");
    let mut h_chain = Family::new("chain H_1 > H_2 > ... > H_c");
    let mut m2_eq = Family::new("G_n = H_3 at m = 2");
    let mut m3_gt = Family::new("G_n > H_3 for m >= 3");
    let mut diagram = Family::new("two-column diagram of F, G_t and H_k");

    for n in 1..=n_max as i64 {
        for c in 2..=c_max as i64 {
            for m in 2..=m_max as i64 {
                let at = || format!("n={n}, c={c}, m={m}");
                let fv = f_raw(n, c, m);
                f_rec.check(fv == f_raw(n, c, m - 1) + f_raw(n - 1, c, m), at);
                for t in 1..=n + 1 {
                    g_rec.check(
                        g_raw(t, n, c, m) == g_raw(t, n, c, m - 1) + g_raw(t - 1, n - 1, c, m),
                        || format!("t={t}, n={n}, c={c}, m={m}"),
                    );
                }
                let mut col: Vec<i128> = vec![fv];
                col.extend((1..=n + 1).rev().map(|t| g_raw(t, n, c, m)));
                fg_chain.check(strictly_decreasing(&col), at);
                for k in 1..=c + 1 {
                    h_rec.check(
                        h_raw(k, n, c, m) == h_raw(k, n, c, m - 1) + h_raw(k, n - 1, c, m),
                        || format!("k={k}, n={n}, c={c}, m={m}"),
                    );
                }
                let hs: Vec<i128> = (1..=c + 1).map(|k| h_raw(k, n, c, m)).collect();
                h_eq.check(hs[0] == fv && hs[1] == g_raw(n + 1, n, c, m), at);
                h_chain.check(strictly_decreasing(&hs[..c as usize]), at);
                let gn = g_raw(n, n, c, m);
                if m == 2 {
                    m2_eq.check(gn == hs[2], at);
                } else {
                    m3_gt.check(gn > hs[2], at);
                }
                // Left column H_1 > ... > H_{c+1}, right column F > G_{n+1} > ... > G_1,
                // joined by H_1 = F, H_2 = G_{n+1}, H_3 <= G_n with equality only at m = 2.
                let rungs = hs[0] == col[0]
                    && hs[1] == col[1]
                    && hs[2] <= col[2]
                    && ((hs[2] == col[2]) == (m == 2));
                diagram.check(
                    rungs && strictly_decreasing(&hs) && strictly_decreasing(&col),
                    at,
                );
            }
        }
    }
    vec![
        f_rec.finish(),
        g_rec.finish(),
        fg_chain.finish(),
        h_rec.finish(),
        h_eq.finish(),
        h_chain.finish(),
        m2_eq.finish(),
        m3_gt.finish(),
        diagram.finish(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Binomials from Pascal's triangle, independent of `binom`.
    fn pascal(a: i64, b: i64) -> i128 {
        if b < 0 || a < b || a < 0 {
            return 0;
        }
        let mut row = vec![1i128];
        for _ in 0..a {
            let mut next = vec![1i128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row[b as usize]
    }

    #[test]
    fn f_values() {
        assert_eq!(f(1, 2, 2).unwrap(), 3);
        assert_eq!(f(2, 3, 2).unwrap(), 6);
        assert_eq!(f(1, 3, 3).unwrap(), 22);
        assert!(f(0, 3, 3).is_err());
    }

    #[test]
    fn g_values() {
        assert_eq!(g(2, 1, 3, 2).unwrap(), 5);
        assert_eq!(g(3, 2, 4, 2).unwrap(), 9);
        assert_eq!(g(2, 1, 2, 2).unwrap(), 2);
        assert!(g(3, 1, 2, 2).is_err());
        assert!(g(0, 1, 2, 2).is_err());
    }

    #[test]
    fn h_values() {
        for n in 1..=4 {
            for c in 2..=6 {
                for m in 1..=6 {
                    assert_eq!(h(1, n, c, m).unwrap(), f(n, c, m).unwrap());
                }
            }
        }
        assert_eq!(h(3, 1, 3, 2).unwrap(), 4);
        assert_eq!(h(2, 2, 3, 3).unwrap(), g(3, 2, 3, 3).unwrap());
        assert!(h(5, 1, 3, 2).is_err());
    }

    #[test]
    fn u_values() {
        assert_eq!(u(2, 0, 3, 2).unwrap(), 3);
        assert_eq!(u(2, 0, 4, 2).unwrap(), 1);
        for c in 2..=8 {
            for m in 1..=8 {
                assert_eq!(u(c, 0, c + 1, m).unwrap(), f(1, c, m).unwrap());
            }
        }
    }

    #[test]
    fn closed_forms_match_pascal_oracle() {
        for n in 1..=5i64 {
            for c in 2..=7i64 {
                for m in 2..=7i64 {
                    let fv = pascal(m + n + c, n + c)
                        - ((c + 1) as i128 * pascal(m + n - 1, n) + pascal(m + n - 1, n - 1));
                    assert_eq!(f(n as u32, c as u32, m as u32).unwrap(), fv);
                }
            }
        }
    }

    #[test]
    fn delta_small_values() {
        assert_eq!(delta_small(1, 3, 2, 1).unwrap().value, 6);
        assert_eq!(delta_small(1, 3, 2, 2).unwrap().value, 5);
        let tie = delta_small(2, 4, 3, 4).unwrap();
        assert_eq!(delta4_discriminant(2, 3), 0);
        let gv = g(1, 2, 4, 3).unwrap();
        let hv = h(3, 2, 4, 3).unwrap();
        assert_eq!(gv, hv);
        assert_eq!(tie.value, gv);
        assert_eq!(tie.witnesses.len(), 2);
        assert!(matches!(delta_small(1, 4, 3, 4), Err(Error::NotCovered(_))));
        assert!(matches!(delta_small(2, 4, 3, 5), Err(Error::NotCovered(_))));
        assert!(matches!(delta_small(2, 4, 2, 4), Err(Error::NotCovered(_))));
        let two = delta_small(1, 3, 2, 3).unwrap();
        assert_eq!(two.value, binom(4, 2) - 2);
        assert_eq!(two.witnesses.len(), 2);
        assert_eq!(delta_small(1, 2, 2, 3).unwrap().witnesses.len(), 1);
    }

    #[test]
    fn delta4_branch_follows_difference() {
        for n in 2..=5u32 {
            for c in 2..=7u32 {
                for m in 3..=7u32 {
                    let ans = delta_small(n, c, m, 4).unwrap();
                    let diff = g(n - 1, n, c, m).unwrap() - h(3, n, c, m).unwrap();
                    assert_eq!(diff.signum(), delta4_discriminant(n, m).signum() as i128);
                    // (m+n-4)! / (n! (m-2)!) times the discriminant
                    let num: i128 = (1..=(m + n - 4) as i128).product();
                    let den: i128 =
                        (1..=n as i128).product::<i128>() * (1..=(m - 2) as i128).product::<i128>();
                    assert_eq!(diff * den, num * delta4_discriminant(n, m) as i128);
                    assert_eq!(ans.value, diff.max(0) + h(3, n, c, m).unwrap());
                }
            }
        }
    }

    #[test]
    fn curve_index_by_search() {
        // Exhaustive search over the admissible region as an oracle.
        for c in 2..=8u32 {
            for k in 1..=(c * (c - 1) / 2 + c) {
                let mut hits = vec![];
                for g in 0..c {
                    for d in (c + 1 + g)..=(2 * c) {
                        let j = d - c;
                        if j * (j - 1) / 2 + (j - g) == k {
                            hits.push((g, d));
                        }
                    }
                }
                assert_eq!(hits, vec![curve_index(c, k).unwrap()], "c={c} k={k}");
            }
        }
        assert_eq!(curve_index(4, 1).unwrap(), (0, 5));
        assert_eq!(curve_index(4, 3).unwrap(), (0, 6));
        assert_eq!(curve_index(4, 2).unwrap(), (1, 6));
        assert!(curve_index(4, 11).is_err());
        assert!(curve_index(4, 0).is_err());
        assert_eq!(delta_curve(4, 4, 1).unwrap().value, u(4, 0, 5, 4).unwrap());
        assert!(delta_curve(4, 3, 1).is_err());
    }

    #[test]
    fn delta_curve_strictly_decreasing() {
        for c in 2..=7u32 {
            for m in c..=c + 2 {
                let vals: Vec<i128> = (1..=(c * (c - 1) / 2 + c))
                    .map(|k| delta_curve(c, m, k).unwrap().value)
                    .collect();
                assert!(strictly_decreasing(&vals), "c={c} m={m}: {vals:?}");
            }
        }
    }

    #[test]
    fn identity_suite_passes() {
        let report = identity_suite(5, 7, 7);
        assert_eq!(report.len(), 9);
        for r in &report {
            assert!(r.passed(), "{}: {:?}", r.name, r.counterexample);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn same_depth_g_recurrence_is_false() {
        let lhs = g_raw(2, 1, 2, 2);
        assert_ne!(lhs, g_raw(2, 1, 2, 1) + g_raw(2, 0, 2, 2));
        assert_eq!(lhs, g_raw(2, 1, 2, 1) + g_raw(1, 0, 2, 2));
    }

    #[test]
    fn classical_specializations() {
        for n in 1..=5u32 {
            for c in 2..=7u32 {
                let cc = binom(c as i64 + 1, 2);
                assert_eq!(f(n, c, 2).unwrap(), cc);
                assert_eq!(g(n + 1, n, c, 2).unwrap(), cc - 1);
            }
        }
        for c in 2..=8u32 {
            let r = (c + 1) as i64;
            for m in 2..=8u32 {
                let top = pascal(r + m as i64, r);
                assert_eq!(f(1, c, m).unwrap(), top - (m as i128 * r as i128 + 1));
                assert_eq!(g(2, 1, c, m).unwrap(), top - m as i128 * (r as i128 + 1));
            }
        }
    }

    proptest! {
        #[test]
        fn g_chain_strict(n in 1u32..7, c in 2u32..10, m in 2u32..10) {
            let mut prev = f(n, c, m).unwrap();
            for t in (1..=n + 1).rev() {
                let cur = g(t, n, c, m).unwrap();
                prop_assert!(prev > cur);
                prev = cur;
            }
        }

        #[test]
        fn h_gap_is_binomial(n in 1u32..7, c in 2u32..10, m in 2u32..10, k in 1u32..10) {
            prop_assume!(k <= c);
            let gap = h(k, n, c, m).unwrap() - h(k + 1, n, c, m).unwrap();
            prop_assert_eq!(gap, pascal((m + n - 2) as i64, n as i64));
        }

        #[test]
        fn gn_minus_h3(n in 1u32..7, c in 2u32..10, m in 2u32..10) {
            prop_assume!(c >= 2);
            prop_assert_eq!(
                g(n, n, c, m).unwrap(),
                h(3, n, c, m).unwrap() + pascal((m + n - 3) as i64, n as i64)
            );
        }

        #[test]
        fn quadric_values(n in 1u32..8, c in 2u32..12, t in 1u32..9, k in 1u32..13) {
            prop_assume!(t <= n + 1 && k <= c + 1);
            let cc = binom(c as i64 + 1, 2);
            prop_assert_eq!(g(t, n, c, 2).unwrap(), cc + t as i128 - n as i128 - 2);
            prop_assert_eq!(h(k, n, c, 2).unwrap(), cc + 1 - k as i128);
        }
    }
}
