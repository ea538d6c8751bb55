//! Hypersurfaces through sampled varieties: `a_m`, the deficiency profile
//! `h^1(I_C(m))` of curves, regularity, and the checks built on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    binom, eval_monomials, eval_monomials_mod, monomials, EchelonFp, Matrix, Scalar, UniPolyFp,
};
use crate::formulas;
use crate::pointconfig::PointConfig;
use crate::rng::{derive_seed, seeded};
use crate::varieties::{Domain, ParamVariety};

/// Consecutive batches with unchanged rank before a surface value is accepted.
pub const STABLE_BATCHES: usize = 3;
/// Batch limit for surfaces.
pub const MAX_BATCHES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    /// Curve value from more than `m d` distinct points: no sampling error.
    Exact,
    /// Surface value whose rank stayed fixed over the stabilization window.
    Stabilized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypersurfaceCount {
    pub m: u32,
    pub value: usize,
    pub certainty: Certainty,
    pub samples: usize,
}

fn forms(amb: usize, m: u32) -> usize {
    binom((amb as u32 + m) as i64, m as i64) as usize
}

/// Number of independent degree-`m` forms vanishing on `v`.
pub fn a_m(v: &ParamVariety, m: u32, seed: u64) -> Result<HypersurfaceCount> {
    if v.is_curve() {
        let count = m as usize * v.degree() as usize + 1;
        let pts = v.sample_points(count, seed)?;
        Ok(HypersurfaceCount {
            m,
            value: pts.h0_ideal(m),
            certainty: Certainty::Exact,
            samples: count,
        })
    } else {
        stabilized(v, m, seed)
    }
}

fn stabilized(v: &ParamVariety, m: u32, seed: u64) -> Result<HypersurfaceCount> {
    let monos = monomials(v.amb() + 1, m);
    let width = monos.len();
    let batch = 2 * width;
    let mut rng = seeded(derive_seed(seed, m as u64));
    let mut unchanged = 0;
    let mut samples = 0;
    let mut last_rank = usize::MAX;
    let field = v.field();
    match field.modulus() {
        Some(p) => {
            let mut ech = EchelonFp::new(p, width);
            for _ in 0..MAX_BATCHES {
                for t in v.random_params(batch, &mut rng)? {
                    let img: Vec<u64> = v
                        .eval(&t)?
                        .iter()
                        .map(|x| x.as_residue().unwrap())
                        .collect();
                    ech.insert(eval_monomials_mod(&monos, &img, p));
                }
                samples += batch;
                if ech.rank() == last_rank {
                    unchanged += 1;
                    if unchanged == STABLE_BATCHES {
                        return Ok(HypersurfaceCount {
                            m,
                            value: width - last_rank,
                            certainty: Certainty::Stabilized,
                            samples,
                        });
                    }
                } else {
                    unchanged = 0;
                    last_rank = ech.rank();
                }
            }
        }
        None => {
            let mut basis: Vec<Vec<Scalar>> = Vec::new();
            for _ in 0..MAX_BATCHES {
                let mut rows = basis.clone();
                for t in v.random_params(batch, &mut rng)? {
                    rows.push(eval_monomials(&monos, &v.eval(&t)?));
                }
                samples += batch;
                let (r, pivots) = Matrix::from_rows(field, rows)?.rref();
                basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
                if basis.len() == last_rank {
                    unchanged += 1;
                    if unchanged == STABLE_BATCHES {
                        return Ok(HypersurfaceCount {
                            m,
                            value: width - last_rank,
                            certainty: Certainty::Stabilized,
                            samples,
                        });
                    }
                } else {
                    unchanged = 0;
                    last_rank = basis.len();
                }
            }
        }
    }
    Err(Error::NotStabilized(format!(
        "rank of degree-{m} evaluation on {} did not settle within {MAX_BATCHES} batches",
        v.label()
    )))
}

fn curve_meta(v: &ParamVariety) -> Result<(u32, u32, u32)> {
    if !v.is_curve() {
        return Err(Error::Unsupported(format!("{} is not a curve", v.label())));
    }
    let g = v
        .genus()
        .ok_or_else(|| Error::Unsupported(format!("{} has no recorded genus", v.label())))?;
    let c = v.amb() as u32 - 1;
    let d = v.degree();
    if d > 2 * c + 1 {
        return Err(Error::Unsupported(format!(
            "h1 needs d <= 2c+1, got d={d}, c={c}"
        )));
    }
    Ok((c, g, d))
}

/// `h^1(I_C(m)) = a_m - u(c,g,d,m)` for a curve with `d <= 2c+1`.
pub fn h1_ideal(v: &ParamVariety, m: u32, seed: u64) -> Result<i128> {
    if m < 1 {
        return Err(Error::OutOfRange("h1 is computed for m >= 1".into()));
    }
    let (c, g, d) = curve_meta(v)?;
    let a = a_m(v, m, seed)?.value as i128;
    let h1 = a - formulas::u(c, g, d, m)?;
    if h1 < 0 {
        return Err(Error::Verification(format!(
            "negative h1 = {h1} at m={m} for {}: recorded genus or degree is wrong",
            v.label()
        )));
    }
    Ok(h1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileEntry {
    pub m: u32,
    pub a_m: usize,
    pub u: i128,
    pub h1: i128,
}

/// `h^1(I_C(m))` for `m = 1, 2, ...` up to the first zero at `m >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeficiencyProfile {
    pub label: String,
    pub c: u32,
    pub d: u32,
    pub g: u32,
    pub entries: Vec<ProfileEntry>,
    pub reg: u32,
}

impl DeficiencyProfile {
    /// `h^1` values, `entries[0]` being `m = 1`. The final entry is zero.
    pub fn h1_values(&self) -> Vec<i128> {
        self.entries.iter().map(|e| e.h1).collect()
    }

    /// Nonzero part of the profile.
    pub fn nonzero_prefix(&self) -> Vec<i128> {
        let v = self.h1_values();
        let last = v.iter().rposition(|&h| h != 0).map_or(0, |i| i + 1);
        v[..last].to_vec()
    }

    /// `h^1(I_C(m))`, zero past the computed range.
    pub fn h1(&self, m: u32) -> i128 {
        self.entries.iter().find(|e| e.m == m).map_or(0, |e| e.h1)
    }

    pub fn linearly_normal(&self) -> bool {
        self.h1(1) == 0
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("m,a_m,u,h1\n");
        for e in &self.entries {
            s.push_str(&format!("{},{},{},{}\n", e.m, e.a_m, e.u, e.h1));
        }
        s
    }
}

pub fn deficiency_profile(v: &ParamVariety, seed: u64) -> Result<DeficiencyProfile> {
    let (c, g, d) = curve_meta(v)?;
    let mut entries = Vec::new();
    let mut m = 1;
    loop {
        let a = a_m(v, m, derive_seed(seed, m as u64))?.value;
        let u = formulas::u(c, g, d, m)?;
        let h1 = a as i128 - u;
        if h1 < 0 {
            return Err(Error::Verification(format!(
                "negative h1 = {h1} at m={m} for {}",
                v.label()
            )));
        }
        entries.push(ProfileEntry { m, a_m: a, u, h1 });
        if h1 == 0 && m >= 2 {
            break;
        }
        if m > d + 2 {
            return Err(Error::Verification(format!(
                "h1 profile of {} did not vanish by m={m}",
                v.label()
            )));
        }
        m += 1;
    }
    let last_nonzero = entries.iter().rev().find(|e| e.h1 != 0).map(|e| e.m);
    // h^1(O_C(l-2)) vanishes for l >= 3 and equals g at l = 2
    let reg = match last_nonzero {
        Some(k) => (k + 2).max(if g == 0 { 2 } else { 3 }),
        None if g == 0 => 2,
        None => 3,
    };
    Ok(DeficiencyProfile {
        label: v.label().to_string(),
        c,
        d,
        g,
        entries,
        reg,
    })
}

/// As [`deficiency_profile`], with the entries extended or cut to
/// `m = 1..=m_max`. `reg` still comes from the full profile.
pub fn profile_table(v: &ParamVariety, m_max: u32, seed: u64) -> Result<DeficiencyProfile> {
    let mut p = deficiency_profile(v, seed)?;
    p.entries.truncate(m_max as usize);
    for m in p.entries.len() as u32 + 1..=m_max {
        let a = a_m(v, m, derive_seed(seed, m as u64))?.value;
        let u = formulas::u(p.c, p.g, p.d, m)?;
        p.entries.push(ProfileEntry {
            m,
            a_m: a,
            u,
            h1: a as i128 - u,
        });
    }
    Ok(p)
}

fn check_strict_hypothesis(p: &DeficiencyProfile) -> Result<()> {
    if p.d > 2 * p.c {
        return Err(Error::Unsupported(format!(
            "hypothesis d <= 2c violated (d={}, c={})",
            p.d, p.c
        )));
    }
    if p.linearly_normal() {
        return Err(Error::Unsupported("curve is linearly normal".into()));
    }
    Ok(())
}

/// `h1(m-1) > h1(m)` for `2 <= m <= reg-1`.
pub fn verify_monotonic(p: &DeficiencyProfile) -> Result<bool> {
    check_strict_hypothesis(p)?;
    Ok((2..p.reg).all(|m| p.h1(m - 1) > p.h1(m)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegBoundCheck {
    pub reg: u32,
    pub bound: i64,
    pub holds: bool,
    pub equality: bool,
    /// On equality: `h1(m) = d-c-g-m` for `1 <= m <= d-c-g`.
    pub extremal_profile: Option<bool>,
}

impl RegBoundCheck {
    pub fn passed(&self) -> bool {
        self.holds && self.extremal_profile != Some(false)
    }
}

/// `reg <= d-c+1-g`, and the forced profile when equality holds.
pub fn verify_reg_bound(p: &DeficiencyProfile) -> Result<RegBoundCheck> {
    check_strict_hypothesis(p)?;
    let e = p.d as i64 - p.c as i64 - p.g as i64;
    let bound = e + 1;
    let equality = p.reg as i64 == bound;
    let extremal_profile =
        equality.then(|| (1..=e.max(0) as u32).all(|m| p.h1(m) == (e - m as i64) as i128));
    Ok(RegBoundCheck {
        reg: p.reg,
        bound,
        holds: p.reg as i64 <= bound,
        equality,
        extremal_profile,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveClass {
    RationalNormal,
    LinearlyNormalGenusOne,
    ProjectedRationalNormal,
    LinearlyNormalGenusTwo,
    RationalWithFourSecant,
    ProjectedGenusOne,
    LinearlyNormalGenusThree,
    /// `k` is in range but `(g, d, h^1(I(1)))` matches no listed case.
    Unlisted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct A2Classification {
    pub a2: usize,
    pub k: u32,
    pub h1_2: i128,
    /// `h1(2) = 2(d-c)-1-g-k`.
    pub h1_identity: bool,
    pub class: CurveClass,
}

/// Reads off `k` from `a_2 = C(c+1,2)+1-k` and names the case of the
/// classification of curves with `k <= 4`.
pub fn classify_a2_curve(v: &ParamVariety, seed: u64) -> Result<A2Classification> {
    let (c, g, d) = curve_meta(v)?;
    let a1 = a_m(v, 1, derive_seed(seed, 1))?.value as i128;
    let a2 = a_m(v, 2, derive_seed(seed, 2))?.value;
    let top = binom(c as i64 + 1, 2) + 1;
    let k = top - a2 as i128;
    if k > c as i128 {
        return Err(Error::OutOfRange(format!(
            "k = {k} > c = {c}, outside the classified range k <= c"
        )));
    }
    if k < 1 {
        return Err(Error::Verification(format!("a_2 = {a2} exceeds C(c+1,2)")));
    }
    let k = k as u32;
    let h1_1 = a1 - formulas::u(c, g, d, 1)?;
    let h1_2 = a2 as i128 - formulas::u(c, g, d, 2)?;
    let h1_identity = h1_2 == 2 * (d as i128 - c as i128) - 1 - g as i128 - k as i128;
    let class = match (k, g, d as i64 - c as i64, h1_1 == 0) {
        (1, 0, 1, _) => CurveClass::RationalNormal,
        (2, 1, 2, true) => CurveClass::LinearlyNormalGenusOne,
        (3, 0, 2, false) if c >= 3 => CurveClass::ProjectedRationalNormal,
        (3, 2, 3, true) if c >= 3 => CurveClass::LinearlyNormalGenusTwo,
        (4, 0, 3, false) if c >= 4 => CurveClass::RationalWithFourSecant,
        (4, 1, 3, false) if c >= 4 => CurveClass::ProjectedGenusOne,
        (4, 3, 4, true) if c >= 4 => CurveClass::LinearlyNormalGenusThree,
        _ => CurveClass::Unlisted,
    };
    Ok(A2Classification {
        a2,
        k,
        h1_2,
        h1_identity,
        class,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub a_m: usize,
    pub bound: i128,
    pub holds: bool,
}

/// `a_m <= H_k(n,c,m)` for `d >= c+k`.
pub fn bound_check(v: &ParamVariety, m: u32, k: u32, seed: u64) -> Result<BoundCheck> {
    let (n, c) = (v.dim() as u32, v.codim() as u32);
    if k < 1 || k > c + 1 {
        return Err(Error::OutOfRange(format!("need 1 <= k <= c+1, got k={k}")));
    }
    if v.degree() < c + k {
        return Err(Error::OutOfRange(format!(
            "need d >= c+k, got d={}",
            v.degree()
        )));
    }
    let a = a_m(v, m, seed)?.value;
    let bound = formulas::h(k, n, c, m)?;
    Ok(BoundCheck {
        a_m: a,
        bound,
        holds: a as i128 <= bound,
    })
}

/// `(a_2(C), h^0(I_Gamma(2)))` for a reduced hyperplane section `Gamma` of a
/// curve parametrized by `P^1` over a prime field, the second term computed in
/// the hyperplane. The hyperplane passes through `c+1` random curve points and
/// is resampled until the residual intersection splits into distinct points.
pub fn hyperplane_section_quadrics(v: &ParamVariety, seed: u64) -> Result<(usize, usize)> {
    let p = v
        .field()
        .modulus()
        .ok_or_else(|| Error::Unsupported("hyperplane sections need a prime field".into()))?;
    if !v.is_curve() || !matches!(v.domain(), Domain::Projective { .. }) {
        return Err(Error::Unsupported(
            "hyperplane sections are taken of rational curves".into(),
        ));
    }
    let field = v.field();
    let d = v.degree() as usize;
    let amb = v.amb();
    for attempt in 0..400 {
        let params = v.distinct_curve_params(amb, derive_seed(seed, attempt))?;
        let rows = params
            .iter()
            .map(|t| v.eval(t))
            .collect::<Result<Vec<_>>>()?;
        let ns = Matrix::from_rows(field, rows)?.nullspace();
        if ns.len() != 1 {
            continue;
        }
        let h: Vec<u64> = ns[0].iter().map(|x| x.as_residue().unwrap()).collect();
        let mut coeffs = vec![0u64; d + 1];
        for (hi, f) in h.iter().zip(v.coords()) {
            for (e, a) in f.terms() {
                let i = e[1] as usize;
                coeffs[i] = crate::exact::add_mod(
                    coeffs[i],
                    crate::exact::mul_mod(*hi, a.as_residue().unwrap(), p),
                    p,
                );
            }
        }
        let pull = UniPolyFp::new(p, coeffs);
        if pull.degree() != Some(d) || !pull.is_squarefree() || pull.count_distinct_roots() != d {
            continue;
        }
        let pts: Vec<Vec<Scalar>> = (0..p)
            .filter(|&t| pull.eval(t) == 0)
            .map(|t| v.eval(&[Scalar::one(field), Scalar::residue(field, t)]))
            .collect::<Result<_>>()?;
        let gamma = PointConfig::new(field, amb, pts)?;
        let a2 = a_m(v, 2, derive_seed(seed, 0xA2))?.value;
        let in_hyperplane = forms(amb - 1, 2) - gamma.hilbert(2);
        return Ok((a2, in_hyperplane));
    }
    Err(Error::Construction(
        "no split hyperplane section found".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;
    use crate::varieties::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn twisted_cubic_and_elliptic_quartic() {
        let f = gf(10007);
        let tc = rational_normal_curve(3, f).unwrap();
        assert_eq!(a_m(&tc, 2, 1).unwrap().value, 3);
        let e = elliptic_normal_curve(2, f, 2, 3).unwrap();
        assert_eq!(a_m(&e, 2, 1).unwrap().value, 2);
        for m in 1..4 {
            assert_eq!(h1_ideal(&e, m, 5).unwrap(), 0);
        }
    }

    #[test]
    fn surface_values_stabilize() {
        let f = gf(10007);
        let s = scroll_surface(1, 2, f).unwrap();
        let r = a_m(&s, 2, 3).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.certainty, Certainty::Stabilized);
        let q = scroll_surface(1, 1, Field::Rational).unwrap();
        assert_eq!(a_m(&q, 2, 3).unwrap().value, 1);
    }

    #[test]
    fn rational_curve_over_q() {
        let tc = rational_normal_curve(3, Field::Rational).unwrap();
        assert_eq!(a_m(&tc, 2, 9).unwrap().value, 3);
    }

    #[test]
    fn scroll_example_profile() {
        let v = scroll_section_curve(1, 3, 5, gf(10007), 42).unwrap();
        let p = deficiency_profile(&v, 1).unwrap();
        assert_eq!(p.nonzero_prefix(), vec![4, 4, 2, 1]);
        assert_eq!(p.reg, 6);
        assert!(verify_monotonic(&p).is_err());
    }

    #[test]
    fn multisecant_equality_case() {
        let v = multisecant_projection(4, 4, 0, gf(10007), 7).unwrap();
        let p = deficiency_profile(&v, 1).unwrap();
        assert_eq!(p.nonzero_prefix(), vec![2, 1]);
        assert_eq!(p.reg, 4);
        assert!(verify_monotonic(&p).unwrap());
        let r = verify_reg_bound(&p).unwrap();
        assert!(r.equality && r.passed());
    }

    #[test]
    fn projected_elliptic_equality() {
        let v = multisecant_projection(4, 4, 1, gf(10007), 3).unwrap();
        let p = deficiency_profile(&v, 1).unwrap();
        assert_eq!(p.nonzero_prefix(), vec![1]);
        assert_eq!(p.reg, 3);
        assert!(verify_reg_bound(&p).unwrap().equality);
    }

    #[test]
    fn genus_two_is_acm() {
        let v = hyperelliptic_g2_curve(3, gf(10007), &[1, 2, 0, 3, 0, 1]).unwrap();
        let p = deficiency_profile(&v, 4).unwrap();
        assert!(p.nonzero_prefix().is_empty());
        assert_eq!(p.reg, 3);
        assert_eq!(
            classify_a2_curve(&v, 1).unwrap().class,
            CurveClass::LinearlyNormalGenusTwo
        );
    }

    #[test]
    fn classification_cases() {
        let f = gf(10007);
        let tc = rational_normal_curve(3, f).unwrap();
        let r = classify_a2_curve(&tc, 1).unwrap();
        assert_eq!((r.k, r.class), (1, CurveClass::RationalNormal));
        let e = elliptic_normal_curve(3, f, 2, 3).unwrap();
        assert_eq!(
            classify_a2_curve(&e, 1).unwrap().class,
            CurveClass::LinearlyNormalGenusOne
        );
        let pr = general_projection(&rational_normal_curve(6, f).unwrap(), 0, 2).unwrap();
        let r = classify_a2_curve(&pr, 1).unwrap();
        assert_eq!((r.k, r.class), (3, CurveClass::ProjectedRationalNormal));
        assert!(r.h1_identity);
    }

    #[test]
    fn profile_csv() {
        let v = multisecant_projection(4, 4, 0, gf(10007), 7).unwrap();
        let csv = deficiency_profile(&v, 1).unwrap().to_csv();
        assert!(csv.starts_with("m,a_m,u,h1\n1,"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn quartic_bound() {
        let v = general_projection(&rational_normal_curve(4, gf(10007)).unwrap(), 0, 5).unwrap();
        let b = bound_check(&v, 2, 2, 1).unwrap();
        assert_eq!((b.a_m, b.bound), (1, 2));
        let tc = rational_normal_curve(3, gf(10007)).unwrap();
        let eq = bound_check(&tc, 3, 1, 1).unwrap();
        assert_eq!(eq.a_m as i128, eq.bound);
    }

    #[test]
    fn section_bound() {
        let v = multisecant_projection(4, 4, 0, gf(10007), 7).unwrap();
        let (a2, sec) = hyperplane_section_quadrics(&v, 3).unwrap();
        assert!(a2 <= sec);
    }

    #[test]
    fn refuses_high_degree() {
        let v = scroll_section_curve(1, 3, 6, gf(10007), 1).unwrap();
        assert!(matches!(h1_ideal(&v, 1, 1), Err(Error::Unsupported(_))));
    }
}
