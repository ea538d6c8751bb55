//! Parametrized projective varieties: rational normal curves and scrolls,
//! the Veronese surface, curves on scrolls, elliptic and genus-2 curves
//! over prime fields, and linear projections of all of these.

mod build;
mod planecurve;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Field, MPoly, Scalar};
use crate::pointconfig::PointConfig;
use crate::rng::{random_scalar, seeded, SeededRng};

pub use build::{
    elliptic_normal_curve, general_projection, hyperelliptic_g2_curve, multisecant_projection,
    project, rational_normal_curve, scroll_section_curve, scroll_surface, veronese_surface,
    ProjectionCenter,
};
pub use planecurve::{affine_points, sqrt_mod};
pub use verify::{verify_curve, CurveCheck};

/// Parameter space of a parametrization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    /// Product of projective spaces; `blocks[i]` homogeneous variables each.
    /// Coordinates are multihomogeneous in these blocks.
    Projective { blocks: Vec<usize> },
    /// Affine plane curve `y^2 = f(x)` over a prime field; coordinates are
    /// polynomials in `(x, y)`. `f` is stored lowest degree first.
    PlaneCurve { f: Vec<u64> },
}

/// Recipe from which a variety is rebuilt deterministically given a field
/// and a seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Construction {
    RationalNormalCurve {
        r: u32,
    },
    Scroll {
        a: u32,
        b: u32,
    },
    Veronese,
    /// Curve of class `H + kF` on `S(a, b)`.
    ScrollSection {
        a: u32,
        b: u32,
        k: u32,
    },
    /// `y^2 = x^3 + a x + b`, embedded in `P^{c+1}` with degree `c+2`.
    Elliptic {
        c: u32,
        a: i64,
        b: i64,
    },
    /// `y^2 = f(x)` with `deg f = 5`, embedded in `P^{c+1}` with degree `c+3`.
    Genus2 {
        c: u32,
        f: Vec<i64>,
    },
    /// Projection of `source` from a random `center_dim`-plane.
    Projection {
        source: Box<Construction>,
        center_dim: u32,
    },
    /// Projection of a genus-`g` curve of degree `c+k-1` from a plane inside
    /// the span of `k-g` of its points.
    Multisecant {
        c: u32,
        k: u32,
        g: u32,
    },
}

/// A variety given by coordinate polynomials on a parameter domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamVariety {
    pub(crate) label: String,
    pub(crate) n: usize,
    pub(crate) amb: usize,
    pub(crate) field: Field,
    pub(crate) coords: Vec<MPoly>,
    pub(crate) degree: u32,
    pub(crate) genus: Option<u32>,
    pub(crate) linearly_normal: bool,
    pub(crate) domain: Domain,
    pub(crate) construction: Construction,
    pub(crate) seed: u64,
}

/// JSON-facing summary from which the variety can be rebuilt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    pub label: String,
    pub n: usize,
    pub c: usize,
    pub d: u32,
    /// Arithmetic genus for curves, `-1` otherwise.
    pub g: i64,
    pub field: Field,
    pub seed: u64,
    pub construction: Construction,
}

impl ParamVariety {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn amb(&self) -> usize {
        self.amb
    }

    pub fn codim(&self) -> usize {
        self.amb - self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coords(&self) -> &[MPoly] {
        &self.coords
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn genus(&self) -> Option<u32> {
        self.genus
    }

    pub fn linearly_normal(&self) -> bool {
        self.linearly_normal
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn is_curve(&self) -> bool {
        self.n == 1
    }

    pub fn param_nvars(&self) -> usize {
        self.coords[0].nvars()
    }

    pub fn descriptor(&self) -> Descriptor {
        Descriptor {
            label: self.label.clone(),
            n: self.n,
            c: self.codim(),
            d: self.degree,
            g: self.genus.map_or(-1, i64::from),
            field: self.field,
            seed: self.seed,
            construction: self.construction.clone(),
        }
    }

    /// Rebuilds the variety a descriptor was taken from.
    pub fn from_descriptor(desc: &Descriptor) -> Result<ParamVariety> {
        let v = build::build(&desc.construction, desc.field, desc.seed)?;
        if v.degree != desc.d || v.n != desc.n || v.codim() != desc.c {
            return Err(Error::Malformed(format!(
                "descriptor metadata (n={}, c={}, d={}) disagrees with construction (n={}, c={}, d={})",
                desc.n,
                desc.c,
                desc.d,
                v.n,
                v.codim(),
                v.degree
            )));
        }
        Ok(v)
    }

    /// Builds from a recipe; see [`Construction`].
    pub fn build(construction: &Construction, field: Field, seed: u64) -> Result<ParamVariety> {
        build::build(construction, field, seed)
    }

    /// Image of a parameter point.
    pub fn eval(&self, params: &[Scalar]) -> Result<Vec<Scalar>> {
        self.coords.iter().map(|f| f.eval(params)).collect()
    }

    /// Image of a parameter point given as residues; prime fields only.
    pub fn eval_mod(&self, params: &[u64]) -> Vec<u64> {
        let p = self.field.modulus().expect("prime field");
        self.coords.iter().map(|f| f.eval_mod(params, p)).collect()
    }

    /// Random parameter points; not necessarily distinct, never on the
    /// plane-curve point at infinity.
    pub fn random_params(&self, count: usize, rng: &mut SeededRng) -> Result<Vec<Vec<Scalar>>> {
        match &self.domain {
            Domain::Projective { .. } => Ok((0..count)
                .map(|_| {
                    (0..self.param_nvars())
                        .map(|_| random_scalar(self.field, rng, 30))
                        .collect()
                })
                .collect()),
            Domain::PlaneCurve { f } => {
                let pts = affine_points(f, self.field.modulus().unwrap());
                if pts.is_empty() {
                    return Err(Error::FieldTooSmall("curve has no affine points".into()));
                }
                use rand::Rng;
                Ok((0..count)
                    .map(|_| {
                        let (x, y) = pts[rng.gen_range(0..pts.len())];
                        vec![
                            Scalar::residue(self.field, x),
                            Scalar::residue(self.field, y),
                        ]
                    })
                    .collect())
            }
        }
    }

    /// Parameter points of a curve with pairwise distinct images, drawn
    /// without replacement from all parameter points over the base field.
    pub fn distinct_curve_params(&self, count: usize, seed: u64) -> Result<Vec<Vec<Scalar>>> {
        let mut rng = seeded(seed);
        let field = self.field;
        match &self.domain {
            Domain::Projective { blocks } if blocks.len() == 1 && blocks[0] == 2 => {
                match field.modulus() {
                    Some(p) => {
                        let avail = p as usize + 1;
                        if count > avail {
                            return Err(Error::FieldTooSmall(format!(
                                "{count} distinct points of P^1 need p+1 >= {count}, but p = {p}"
                            )));
                        }
                        let idx = rand::seq::index::sample(&mut rng, avail, count);
                        Ok(idx
                            .into_iter()
                            .map(|i| {
                                if i == p as usize {
                                    vec![Scalar::zero(field), Scalar::one(field)]
                                } else {
                                    vec![Scalar::one(field), Scalar::residue(field, i as u64)]
                                }
                            })
                            .collect())
                    }
                    None => {
                        let span = 10 * count + 20;
                        let idx = rand::seq::index::sample(&mut rng, span, count);
                        Ok(idx
                            .into_iter()
                            .map(|i| {
                                vec![
                                    Scalar::one(field),
                                    Scalar::from_i64(field, i as i64 - span as i64 / 2),
                                ]
                            })
                            .collect())
                    }
                }
            }
            Domain::PlaneCurve { f } => {
                let p = field.modulus().unwrap();
                let pts = affine_points(f, p);
                if count > pts.len() {
                    return Err(Error::FieldTooSmall(format!(
                        "{count} points requested but the curve has only {} affine points over GF({p})",
                        pts.len()
                    )));
                }
                let idx = rand::seq::index::sample(&mut rng, pts.len(), count);
                Ok(idx
                    .into_iter()
                    .map(|i| {
                        let (x, y) = pts[i];
                        vec![Scalar::residue(field, x), Scalar::residue(field, y)]
                    })
                    .collect())
            }
            Domain::Projective { .. } => Err(Error::Unsupported(
                "distinct parameter sampling is for curves".into(),
            )),
        }
    }

    /// `count` distinct points on the variety, deterministic in `seed`.
    pub fn sample_points(&self, count: usize, seed: u64) -> Result<PointConfig> {
        let pts = if self.is_curve() {
            self.distinct_curve_params(count, seed)?
                .iter()
                .map(|t| self.eval(t))
                .collect::<Result<Vec<_>>>()?
        } else {
            let mut rng = seeded(seed);
            let mut seen = std::collections::HashSet::new();
            let mut out = Vec::with_capacity(count);
            let mut budget = 20 * count + 100;
            while out.len() < count {
                if budget == 0 {
                    return Err(Error::FieldTooSmall(format!(
                        "could not draw {count} distinct points"
                    )));
                }
                budget -= 1;
                let t = self.random_params(1, &mut rng)?.pop().unwrap();
                let img = self.eval(&t)?;
                if img.iter().all(Scalar::is_zero) {
                    continue;
                }
                let key = PointConfig::new(self.field, self.amb, vec![img.clone()])?;
                if seen.insert(key.points()[0].clone()) {
                    out.push(img);
                }
            }
            out
        };
        PointConfig::new(self.field, self.amb, pts)
    }
}

#[cfg(test)]
mod tests;
