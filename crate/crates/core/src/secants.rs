//! Secant varieties of the quadratic embedding `nu_2(X)`: dimensions by
//! Terracini's lemma and the deficiency invariants built from them.

use serde::Serialize;

use crate::cohomology::a_m;
use crate::error::{Error, Result};
use crate::exact::{binom, monomials, EchelonFp, Field, MPoly, Matrix, Scalar};
use crate::rng::{derive_seed, seeded};
use crate::varieties::{Domain, ParamVariety};

pub const DEFAULT_TRIALS: usize = 3;
/// Smallest modulus accepted for Terracini ranks.
pub const MIN_TERRACINI_PRIME: u64 = 1_000_000;

/// `nu_2` of a parametrized variety.
#[derive(Debug, Clone)]
pub struct QuadraticEmbedding {
    base: ParamVariety,
    pairs: Vec<(usize, usize)>,
    coords2: Vec<MPoly>,
    partials: Vec<Vec<MPoly>>,
    a2: usize,
}

impl QuadraticEmbedding {
    pub fn new(v: &ParamVariety, seed: u64) -> Result<QuadraticEmbedding> {
        if !matches!(v.domain(), Domain::Projective { .. }) {
            return Err(Error::Unsupported(format!(
                "{} has no global polynomial parametrization",
                v.label()
            )));
        }
        let pairs: Vec<(usize, usize)> = monomials(v.amb() + 1, 2)
            .into_iter()
            .map(|e| {
                let mut idx = e
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize));
                (idx.next().unwrap(), idx.next().unwrap())
            })
            .collect();
        let coords2 = pairs
            .iter()
            .map(|&(i, j)| v.coords()[i].mul(&v.coords()[j]))
            .collect::<Result<Vec<_>>>()?;
        let partials = (0..v.param_nvars())
            .map(|x| v.coords().iter().map(|f| f.diff(x)).collect())
            .collect();
        let a2 = a_m(v, 2, derive_seed(seed, 0xA2))?.value;
        Ok(QuadraticEmbedding {
            base: v.clone(),
            pairs,
            coords2,
            partials,
            a2,
        })
    }

    pub fn base(&self) -> &ParamVariety {
        &self.base
    }

    /// Products `x_i x_j` of the base coordinates, in graded-lex order.
    pub fn coords2(&self) -> &[MPoly] {
        &self.coords2
    }

    /// Ambient dimension `N` of the quadratic embedding.
    pub fn big_n(&self) -> usize {
        self.coords2.len() - 1
    }

    pub fn a2(&self) -> usize {
        self.a2
    }

    /// Dimension of the linear span of `nu_2(X)`.
    pub fn span_dim(&self) -> usize {
        self.big_n() - self.a2
    }

    /// Rows of the affine-cone tangent space of `nu_2(X)` at `t`: the point
    /// and its partial derivatives.
    fn tangent_rows(&self, t: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        let phi = self.base.eval(t)?;
        let mut rows = vec![self.pairs.iter().map(|&(i, j)| &phi[i] * &phi[j]).collect()];
        for dx in &self.partials {
            let dphi = dx.iter().map(|f| f.eval(t)).collect::<Result<Vec<_>>>()?;
            rows.push(
                self.pairs
                    .iter()
                    .map(|&(i, j)| &(&dphi[i] * &phi[j]) + &(&phi[i] * &dphi[j]))
                    .collect(),
            );
        }
        Ok(rows)
    }

    /// `s_0, s_1, ..., s_kmax` from one set of random points.
    fn trial(&self, kmax: usize, seed: u64) -> Result<Vec<usize>> {
        let mut rng = seeded(seed);
        let field = self.base.field();
        let width = self.coords2.len();
        let mut out = Vec::with_capacity(kmax + 1);
        match field.modulus() {
            Some(p) => {
                let mut ech = EchelonFp::new(p, width);
                for _ in 0..=kmax {
                    let t = self.base.random_params(1, &mut rng)?.pop().unwrap();
                    for row in self.tangent_rows(&t)? {
                        ech.insert(row.iter().map(|x| x.as_residue().unwrap()).collect());
                    }
                    out.push(ech.rank().saturating_sub(1));
                }
            }
            None => {
                let mut basis: Vec<Vec<Scalar>> = Vec::new();
                for _ in 0..=kmax {
                    let t = self.base.random_params(1, &mut rng)?.pop().unwrap();
                    let mut rows = basis.clone();
                    rows.extend(self.tangent_rows(&t)?);
                    let (r, pivots) = Matrix::from_rows(field, rows)?.rref();
                    basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
                    out.push(basis.len().saturating_sub(1));
                }
            }
        }
        Ok(out)
    }

    /// `s_k` for `k = 0..=kmax`, each the maximum over `trials` point sets.
    pub fn secant_dims(&self, kmax: usize, trials: usize, seed: u64) -> Result<Vec<usize>> {
        if let Some(p) = self.base.field().modulus() {
            if p < MIN_TERRACINI_PRIME {
                return Err(Error::FieldTooSmall(format!(
                    "Terracini ranks need p > {MIN_TERRACINI_PRIME}, got {p}"
                )));
            }
        }
        let mut best = vec![0; kmax + 1];
        for i in 0..trials.max(1) {
            let s = self.trial(kmax, derive_seed(seed, i as u64))?;
            for (b, x) in best.iter_mut().zip(s) {
                *b = (*b).max(x);
            }
        }
        Ok(best)
    }

    /// `dim S^k nu_2(X)`.
    pub fn secant_dim(&self, k: usize, trials: usize, seed: u64) -> Result<usize> {
        Ok(self.secant_dims(k, trials, seed)?[k])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZakInvariants {
    pub label: String,
    pub n: usize,
    pub c: usize,
    pub d: u32,
    /// `s[k] = dim S^k Y` for `k = 0..=k2`.
    pub s: Vec<usize>,
    /// `delta[k-1] = delta_k` for `k = 1..=k2`.
    pub delta: Vec<i64>,
    pub ell2: usize,
    pub k2: usize,
    pub delta2: i64,
    pub a2: usize,
    pub zak4_ok: bool,
    pub trials: usize,
    pub seed: u64,
}

impl ZakInvariants {
    /// `delta_k`, taken as zero past `k2` as in the tabulated rows.
    pub fn delta_k(&self, k: usize) -> i64 {
        if k == 0 || k > self.k2 {
            0
        } else {
            self.delta[k - 1]
        }
    }

    /// `delta_k` from the definition, equal to `n+1` past `k2`.
    fn delta_raw(&self, k: usize) -> i64 {
        if k > self.k2 {
            self.n as i64 + 1
        } else {
            self.delta_k(k)
        }
    }

    /// The general constraints on `delta_k`, each with its outcome.
    pub fn structure_checks(&self) -> Vec<(&'static str, bool)> {
        let (n, c) = (self.n, self.c);
        let a2 = self.a2 as i64;
        let cn = c + n;
        let vanish = (1..=c.min(self.k2)).all(|k| self.delta_k(k) == 0);
        let capped = (c + 1..=cn).all(|k| self.delta_raw(k) <= (k - c) as i64);
        let monotone = (self.ell2..cn).all(|k| self.delta_raw(k) < self.delta_raw(k + 1));
        let extremal = (c + 1..=cn)
            .find(|&k| self.delta_raw(k) == (k - c) as i64)
            .is_none_or(|k0| {
                (k0..=cn).all(|k| self.delta_raw(k) == (k - c) as i64) && self.k2 == cn
            });
        let tail: i64 = (self.ell2 + 1..=cn).map(|k| self.delta_raw(k)).sum();
        let base = binom(c as i64 + 1, 2) as i64 - binom(n as i64 + 1, 2) as i64;
        let (lhs, rhs) = (tail + base, self.delta2 + base);
        let chain = a2 <= lhs && lhs <= rhs && ((a2 == lhs && lhs == rhs) == (self.k2 == cn));
        vec![
            ("delta_k = 0 for k <= c", vanish),
            ("delta_k <= k-c for c < k <= c+n", capped),
            ("delta_k strictly increasing on [ell2, c+n]", monotone),
            ("delta_k = k-c persists once attained", extremal),
            ("a_2 = delta^2 - (k2+1)(n+1) + C(c+n+2,2)", self.zak4_ok),
            ("a_2 inequality chain, equality iff k2 = c+n", chain),
        ]
    }
}

fn invariants_once(q: &QuadraticEmbedding, trials: usize, seed: u64) -> Result<ZakInvariants> {
    let v = q.base();
    let n = v.dim();
    let span = q.span_dim();
    // each step adds at most n+1, so the span is reached by k = span
    let s_all = q.secant_dims(span, trials, seed)?;
    let k2 = s_all.iter().position(|&s| s == span).ok_or_else(|| {
        Error::Verification(format!(
            "secant dimensions of {} stall at {} below the span {span}",
            v.label(),
            s_all.last().unwrap()
        ))
    })?;
    let s = s_all[..=k2].to_vec();
    let delta: Vec<i64> = (1..=k2)
        .map(|k| s[k - 1] as i64 + n as i64 + 1 - s[k] as i64)
        .collect();
    let ell2 = (1..=k2).rev().find(|&k| delta[k - 1] == 0).unwrap_or(0);
    let delta2: i64 = delta[ell2..].iter().sum();
    let c = v.codim();
    let zak4 = delta2 - (k2 as i64 + 1) * (n as i64 + 1) + binom((c + n + 2) as i64, 2) as i64;
    Ok(ZakInvariants {
        label: v.label().to_string(),
        n,
        c,
        d: v.degree(),
        s,
        delta,
        ell2,
        k2,
        delta2,
        a2: q.a2(),
        zak4_ok: zak4 == q.a2() as i64,
        trials,
        seed,
    })
}

/// Secant invariants of `v`, retrying once with doubled trials when the
/// Terracini ranks look undersampled.
pub fn zak_invariants(v: &ParamVariety, trials: usize, seed: u64) -> Result<ZakInvariants> {
    let q = QuadraticEmbedding::new(v, seed)?;
    match invariants_once(&q, trials, seed) {
        Ok(z) if z.zak4_ok => Ok(z),
        _ => {
            let z = invariants_once(&q, 2 * trials.max(1), derive_seed(seed, 2))?;
            if z.zak4_ok {
                Ok(z)
            } else {
                Err(Error::Verification(format!(
                    "a_2 identity fails for {} even with {} trials",
                    v.label(),
                    z.trials
                )))
            }
        }
    }
}

/// Recomputes the secant dimensions of the same construction over `Q` and
/// reports whether they agree with `z`.
pub fn confirm_over_rationals(v: &ParamVariety, z: &ZakInvariants) -> Result<bool> {
    let vq = ParamVariety::build(v.construction(), Field::Rational, v.seed())?;
    let q = QuadraticEmbedding::new(&vq, z.seed)?;
    if q.span_dim() != *z.s.last().unwrap() {
        return Ok(false);
    }
    Ok(q.secant_dims(z.k2, z.trials, z.seed)? == z.s)
}

/// Depth class of a tabulated row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Table2Row {
    /// Degree `c+1`.
    MinimalDegree,
    /// Degree `c+2`, depth 1.
    AlmostMinimalDepthOne,
    /// Degree `c+2`, depth `n`.
    AlmostMinimalDepthN,
    /// Degree `c+2`, depth `n+1`.
    DelPezzo,
    /// Degree `c+3`, depth `n+1`.
    DegreeCPlus3Acm,
}

impl Table2Row {
    /// `delta_{c+1}, ..., delta_{c+n+1}` for a variety of dimension `n`.
    pub fn expected(self, n: usize) -> Vec<i64> {
        (1..=n as i64 + 1)
            .map(|i| {
                let last = i == n as i64 + 1;
                match self {
                    Table2Row::AlmostMinimalDepthOne => i - 1,
                    _ if last => 0,
                    Table2Row::MinimalDegree => i,
                    Table2Row::AlmostMinimalDepthN | Table2Row::DegreeCPlus3Acm => match i {
                        1 => 0,
                        2 => 1,
                        _ => i,
                    },
                    Table2Row::DelPezzo => match i {
                        1 => 0,
                        _ => i,
                    },
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table2Comparison {
    pub row: Table2Row,
    pub label: String,
    pub first_k: usize,
    pub expected: Vec<i64>,
    pub computed: Vec<i64>,
}

impl Table2Comparison {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

/// Compares `delta_{c+1..c+n+1}` of `z` with a tabulated row.
pub fn table2_row(z: &ZakInvariants, row: Table2Row) -> Table2Comparison {
    let first_k = z.c + 1;
    Table2Comparison {
        row,
        label: z.label.clone(),
        first_k,
        expected: row.expected(z.n),
        computed: (first_k..=z.c + z.n + 1).map(|k| z.delta_k(k)).collect(),
    }
}
