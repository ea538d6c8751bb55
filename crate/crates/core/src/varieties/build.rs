//! Constructors for the concrete varieties and projections.

use super::planecurve::{riemann_roch_basis, weierstrass, weierstrass_nonsingular};
use super::{verify_curve, Construction, Domain, ParamVariety};
use crate::error::{Error, Result};
use crate::exact::{monomials, Field, MPoly, Matrix, Scalar, UniPolyFp};
use crate::rng::{derive_seed, random_nonzero, random_scalar, seeded, SeededRng};

/// Attempts per randomized construction before giving up.
const RETRY_BUDGET: u64 = 8;

fn binary_monomial(field: Field, a: u32, b: u32) -> MPoly {
    MPoly::monomial(vec![a, b], Scalar::one(field))
}

/// `(s^r, s^{r-1} t, ..., t^r)`.
pub fn rational_normal_curve(r: u32, field: Field) -> Result<ParamVariety> {
    if r < 2 {
        return Err(Error::OutOfRange(format!(
            "rational normal curve needs r >= 2, got {r}"
        )));
    }
    Ok(ParamVariety {
        label: format!("rnc({r})"),
        n: 1,
        amb: r as usize,
        field,
        coords: (0..=r).map(|i| binary_monomial(field, r - i, i)).collect(),
        degree: r,
        genus: Some(0),
        linearly_normal: true,
        domain: Domain::Projective { blocks: vec![2] },
        construction: Construction::RationalNormalCurve { r },
        seed: 0,
    })
}

/// `S(a, b)`: coordinates `u s^{a-i} t^i` and `v s^{b-j} t^j` in `(s, t, u, v)`.
pub fn scroll_surface(a: u32, b: u32, field: Field) -> Result<ParamVariety> {
    if a < 1 || b < 1 {
        return Err(Error::OutOfRange(format!(
            "scroll needs a, b >= 1, got ({a}, {b})"
        )));
    }
    let one = Scalar::one(field);
    let mut coords = Vec::new();
    for i in 0..=a {
        coords.push(MPoly::monomial(vec![a - i, i, 1, 0], one.clone()));
    }
    for j in 0..=b {
        coords.push(MPoly::monomial(vec![b - j, j, 0, 1], one.clone()));
    }
    Ok(ParamVariety {
        label: format!("S({a},{b})"),
        n: 2,
        amb: (a + b + 1) as usize,
        field,
        coords,
        degree: a + b,
        genus: None,
        linearly_normal: true,
        domain: Domain::Projective { blocks: vec![2, 2] },
        construction: Construction::Scroll { a, b },
        seed: 0,
    })
}

/// Quadratic monomials in `(x, y, z)`, in graded-lex order.
pub fn veronese_surface(field: Field) -> ParamVariety {
    let coords = monomials(3, 2)
        .into_iter()
        .map(|e| MPoly::monomial(e, Scalar::one(field)))
        .collect();
    ParamVariety {
        label: "veronese".into(),
        n: 2,
        amb: 5,
        field,
        coords,
        degree: 4,
        genus: None,
        linearly_normal: true,
        domain: Domain::Projective { blocks: vec![3] },
        construction: Construction::Veronese,
        seed: 0,
    }
}

fn random_binary_form(field: Field, deg: u32, rng: &mut SeededRng) -> MPoly {
    let terms = (0..=deg).map(|i| (vec![deg - i, i], random_scalar(field, rng, 9)));
    MPoly::from_terms(field, 2, terms).expect("binary form")
}

fn check_failed(v: &ParamVariety, seed: u64) -> Result<Option<String>> {
    let check = verify_curve(v, seed)?;
    Ok((!check.passed()).then(|| check.failures().join(", ")))
}

/// Curve of class `H + kF` on `S(a, b)`: the fiber coordinate `[u:v]` is set
/// to `[beta(s,t) : alpha(s,t)]` with random forms of degrees `b+k` and `a+k`,
/// so the curve has degree `a+b+k` in `P^{a+b+1}`.
pub fn scroll_section_curve(
    a: u32,
    b: u32,
    k: u32,
    field: Field,
    seed: u64,
) -> Result<ParamVariety> {
    if a < 1 || b < 1 {
        return Err(Error::OutOfRange(format!(
            "scroll needs a, b >= 1, got ({a}, {b})"
        )));
    }
    let d = a + b + k;
    let mut last = String::new();
    for attempt in 0..RETRY_BUDGET {
        let mut rng = seeded(derive_seed(seed, attempt));
        let beta = random_binary_form(field, b + k, &mut rng);
        let alpha = random_binary_form(field, a + k, &mut rng);
        let mut coords = Vec::new();
        for i in 0..=a {
            coords.push(binary_monomial(field, a - i, i).mul(&beta)?);
        }
        for j in 0..=b {
            coords.push(binary_monomial(field, b - j, j).mul(&alpha)?);
        }
        let v = ParamVariety {
            label: format!("section(S({a},{b}),H+{k}F)"),
            n: 1,
            amb: (a + b + 1) as usize,
            field,
            coords,
            degree: d,
            genus: Some(0),
            linearly_normal: d as usize == (a + b + 1) as usize,
            domain: Domain::Projective { blocks: vec![2] },
            construction: Construction::ScrollSection { a, b, k },
            seed,
        };
        if k == 0 {
            // class H lies in a hyperplane; only the degree is meaningful
            return Ok(v);
        }
        match check_failed(&v, derive_seed(seed, 1000 + attempt))? {
            None => return Ok(v),
            Some(why) => last = why,
        }
    }
    Err(Error::Construction(format!(
        "no valid section of class H+{k}F on S({a},{b}) after {RETRY_BUDGET} attempts: {last}"
    )))
}

fn prime_of(field: Field, what: &str) -> Result<u64> {
    match field.modulus() {
        Some(p) if p > 3 => Ok(p),
        _ => Err(Error::InvalidField(format!(
            "{what} needs a prime field GF(p) with p > 3"
        ))),
    }
}

/// Linearly normal elliptic curve of degree `c+2` in `P^{c+1}` from
/// `y^2 = x^3 + a x + b`, embedded by `L((c+2) O)`.
pub fn elliptic_normal_curve(c: u32, field: Field, a: i64, b: i64) -> Result<ParamVariety> {
    let p = prime_of(field, "elliptic curve")?;
    if c < 2 {
        return Err(Error::OutOfRange(format!(
            "elliptic normal curve needs c >= 2, got {c}"
        )));
    }
    let f = weierstrass(a, b, p);
    if !weierstrass_nonsingular(f[1], f[0], p) {
        return Err(Error::Construction(format!(
            "y^2 = x^3 + {a}x + {b} is singular over GF({p})"
        )));
    }
    let n = c + 2;
    Ok(ParamVariety {
        label: format!("elliptic(c={c})"),
        n: 1,
        amb: (c + 1) as usize,
        field,
        coords: riemann_roch_basis(field, 1, n),
        degree: n,
        genus: Some(1),
        linearly_normal: true,
        domain: Domain::PlaneCurve { f },
        construction: Construction::Elliptic { c, a, b },
        seed: 0,
    })
}

/// Linearly normal genus-2 curve of degree `c+3` in `P^{c+1}` from
/// `y^2 = f(x)`, `deg f = 5`, embedded by `L((c+3) inf)`.
pub fn hyperelliptic_g2_curve(c: u32, field: Field, f: &[i64]) -> Result<ParamVariety> {
    let p = prime_of(field, "genus-2 curve")?;
    if c < 2 {
        return Err(Error::OutOfRange(format!(
            "genus-2 curve needs c >= 2, got {c}"
        )));
    }
    let fp: Vec<u64> = f.iter().map(|&x| crate::exact::reduce_i64(x, p)).collect();
    let poly = UniPolyFp::new(p, fp.clone());
    if poly.degree() != Some(5) {
        return Err(Error::Construction(format!(
            "f must have degree 5 over GF({p})"
        )));
    }
    if !poly.is_squarefree() {
        return Err(Error::Construction(format!(
            "f is not squarefree over GF({p})"
        )));
    }
    let n = c + 3;
    Ok(ParamVariety {
        label: format!("genus2(c={c})"),
        n: 1,
        amb: (c + 1) as usize,
        field,
        coords: riemann_roch_basis(field, 2, n),
        degree: n,
        genus: Some(2),
        linearly_normal: true,
        domain: Domain::PlaneCurve {
            f: poly.coeffs().to_vec(),
        },
        construction: Construction::Genus2 { c, f: f.to_vec() },
        seed: 0,
    })
}

/// A linear subspace `Λ` of `P^ambient`, given by spanning vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionCenter {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl ProjectionCenter {
    pub fn new(field: Field, ambient: usize, basis: Vec<Vec<Scalar>>) -> Result<ProjectionCenter> {
        if basis.is_empty() {
            return Err(Error::Malformed("empty projection center".into()));
        }
        if basis.iter().any(|v| v.len() != ambient + 1) {
            return Err(Error::Malformed(format!(
                "center vectors must have {} coordinates",
                ambient + 1
            )));
        }
        let m = Matrix::from_rows(field, basis.clone())?;
        if m.rank() != basis.len() {
            return Err(Error::Malformed(
                "center basis is linearly dependent".into(),
            ));
        }
        Ok(ProjectionCenter { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Projective dimension of `Λ`.
    pub fn dim(&self) -> usize {
        self.basis.len() - 1
    }
}

/// Projection from `center`: the new coordinates are the linear forms
/// vanishing on `Λ`, applied to the old ones. Curves are certified after
/// projecting; a failed certificate means the center met the secant variety.
pub fn project(v: &ParamVariety, center: &ProjectionCenter) -> Result<ParamVariety> {
    if center.ambient != v.amb {
        return Err(Error::Malformed(format!(
            "center lives in P^{} but the variety in P^{}",
            center.ambient, v.amb
        )));
    }
    let new_amb = v.amb - center.dim() - 1;
    if new_amb < v.n + 2 {
        return Err(Error::OutOfRange(format!(
            "projecting to P^{new_amb} leaves codimension below 2"
        )));
    }
    let lambda = Matrix::from_rows(v.field, center.basis.clone())?;
    let forms = lambda.nullspace();
    debug_assert_eq!(forms.len(), new_amb + 1);
    let coords = forms
        .iter()
        .map(|h| MPoly::linear_combination(h, &v.coords))
        .collect::<Result<Vec<_>>>()?;
    let out = ParamVariety {
        label: format!("proj{}({})", center.dim(), v.label),
        n: v.n,
        amb: new_amb,
        field: v.field,
        coords,
        degree: v.degree,
        genus: v.genus,
        linearly_normal: false,
        domain: v.domain.clone(),
        construction: Construction::Projection {
            source: Box::new(v.construction.clone()),
            center_dim: center.dim() as u32,
        },
        seed: v.seed,
    };
    if out.is_curve() {
        if let Some(why) = check_failed(&out, derive_seed(v.seed, 0xC0FFEE))? {
            return Err(Error::SecantLocus(format!("{}: {why}", out.label)));
        }
    }
    Ok(out)
}

/// Projection from a random `center_dim`-plane, retried on failure.
pub fn general_projection(v: &ParamVariety, center_dim: u32, seed: u64) -> Result<ParamVariety> {
    let mut last = None;
    for attempt in 0..RETRY_BUDGET {
        let mut rng = seeded(derive_seed(seed, attempt));
        let basis: Vec<Vec<Scalar>> = (0..=center_dim)
            .map(|_| {
                (0..=v.amb)
                    .map(|_| random_scalar(v.field, &mut rng, 50))
                    .collect()
            })
            .collect();
        let Ok(center) = ProjectionCenter::new(v.field, v.amb, basis) else {
            continue;
        };
        match project(v, &center) {
            Ok(mut out) => {
                out.seed = seed;
                return Ok(out);
            }
            Err(e @ Error::OutOfRange(_)) => return Err(e),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::Construction("no independent center found".into())))
}

fn random_elliptic(c: u32, field: Field, rng: &mut SeededRng) -> Result<ParamVariety> {
    let p = prime_of(field, "elliptic curve")?;
    use rand::Rng;
    loop {
        let a = rng.gen_range(0..p) as i64;
        let b = rng.gen_range(1..p) as i64;
        if weierstrass_nonsingular(a as u64, b as u64, p) {
            return elliptic_normal_curve(c, field, a, b);
        }
    }
}

fn random_genus2(c: u32, field: Field, rng: &mut SeededRng) -> Result<ParamVariety> {
    let p = prime_of(field, "genus-2 curve")?;
    use rand::Rng;
    loop {
        let mut f: Vec<i64> = (0..5).map(|_| rng.gen_range(0..p) as i64).collect();
        f.push(1);
        let fp: Vec<u64> = f.iter().map(|&x| x as u64).collect();
        if UniPolyFp::new(p, fp).is_squarefree() {
            return hyperelliptic_g2_curve(c, field, &f);
        }
    }
}

/// A genus-`g` curve of degree `d = c+k-1` in `P^{c+1}` with a `(k-g)`-secant
/// line: the linearly normal source curve in `P^{d-g}` is projected from a
/// general `(k-3-g)`-plane inside the span of `k-g` of its points.
pub fn multisecant_projection(
    c: u32,
    k: u32,
    g: u32,
    field: Field,
    seed: u64,
) -> Result<ParamVariety> {
    if c < 2 || k < 1 || k > c {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= c, got c={c}, k={k}"
        )));
    }
    if g + 3 > k {
        return Err(Error::OutOfRange(format!(
            "need g <= k-3, got g={g}, k={k}"
        )));
    }
    if g > 2 {
        return Err(Error::Unsupported(format!(
            "source curves are implemented for g <= 2, got g={g}"
        )));
    }
    let d = c + k - 1;
    let mut last = None;
    for attempt in 0..RETRY_BUDGET {
        let s = derive_seed(seed, attempt);
        let mut rng = seeded(s);
        let source = match g {
            0 => rational_normal_curve(d, field)?,
            1 => random_elliptic(d - 2, field, &mut rng)?,
            _ => random_genus2(d - 3, field, &mut rng)?,
        };
        let secant = source.sample_points((k - g) as usize, derive_seed(s, 1))?;
        let basis: Vec<Vec<Scalar>> = (0..k - 2 - g)
            .map(|_| {
                let coeffs: Vec<Scalar> = secant
                    .points()
                    .iter()
                    .map(|_| random_nonzero(field, &mut rng, 20))
                    .collect();
                (0..=source.amb)
                    .map(|col| {
                        coeffs
                            .iter()
                            .zip(secant.points())
                            .fold(Scalar::zero(field), |acc, (a, pt)| &acc + &(a * &pt[col]))
                    })
                    .collect()
            })
            .collect();
        let Ok(center) = ProjectionCenter::new(field, source.amb, basis) else {
            continue;
        };
        let source = ParamVariety { seed: s, ..source };
        match project(&source, &center) {
            Ok(mut out) => {
                out.label = format!("multisecant(c={c},k={k},g={g})");
                out.construction = Construction::Multisecant { c, k, g };
                out.seed = seed;
                return Ok(out);
            }
            Err(e @ Error::OutOfRange(_)) => return Err(e),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::Construction("no independent center found".into())))
}

/// Rebuilds a variety from its recipe.
pub(crate) fn build(construction: &Construction, field: Field, seed: u64) -> Result<ParamVariety> {
    let mut v = match construction {
        Construction::RationalNormalCurve { r } => rational_normal_curve(*r, field)?,
        Construction::Scroll { a, b } => scroll_surface(*a, *b, field)?,
        Construction::Veronese => veronese_surface(field),
        Construction::ScrollSection { a, b, k } => scroll_section_curve(*a, *b, *k, field, seed)?,
        Construction::Elliptic { c, a, b } => elliptic_normal_curve(*c, field, *a, *b)?,
        Construction::Genus2 { c, f } => hyperelliptic_g2_curve(*c, field, f)?,
        Construction::Projection { source, center_dim } => {
            let src = build(source, field, derive_seed(seed, 0x5EED))?;
            general_projection(&src, *center_dim, seed)?
        }
        Construction::Multisecant { c, k, g } => multisecant_projection(*c, *k, *g, field, seed)?,
    };
    v.seed = seed;
    Ok(v)
}
