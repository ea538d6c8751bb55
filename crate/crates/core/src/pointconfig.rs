//! Finite point sets in `P^c`: Hilbert functions, regularity, position
//! properties, and extraction of a spanning 3-regular subset of `2c+1` points.

use std::collections::HashSet;
use std::fmt::Write as _;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    binom, eval_monomials, eval_monomials_mod, monomials, rank_mod_p, Field, Matrix, Scalar,
};

/// Default limit on the number of points for [`PointConfig::nu_vector`].
pub const NU_SIZE_CAP: usize = 16;

/// Number of `(2c+1)`-subsets tried in lexicographic order before switching
/// to the frame-guided construction.
const LEX_BUDGET: usize = 5000;

/// A set of distinct points of `P^c`, each normalized so that its first
/// nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    c: usize,
    field: Field,
    points: Vec<Vec<Scalar>>,
}

fn normalize(mut v: Vec<Scalar>) -> Result<Vec<Scalar>> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .cloned()
        .ok_or_else(|| Error::Malformed("zero vector is not a projective point".into()))?;
    let inv = lead.inv()?;
    for x in v.iter_mut() {
        *x = &*x * &inv;
    }
    Ok(v)
}

fn rank_rows(field: Field, rows: &[&[Scalar]]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    if let Field::Prime(m) = field {
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|x| x.as_residue().unwrap()))
            .collect();
        return rank_mod_p(rows.len(), cols, data, m.get());
    }
    let entries = rows.iter().flat_map(|r| r.iter().cloned()).collect();
    Matrix::new(field, rows.len(), cols, entries)
        .expect("well-formed rows")
        .rank()
}

impl PointConfig {
    /// Validates, normalizes and checks distinctness. Repeated or zero
    /// points are rejected rather than dropped.
    pub fn new(field: Field, c: usize, points: Vec<Vec<Scalar>>) -> Result<PointConfig> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(points.len());
        for (i, p) in points.into_iter().enumerate() {
            if p.len() != c + 1 {
                return Err(Error::Malformed(format!(
                    "point {i} has {} coordinates, expected {}",
                    p.len(),
                    c + 1
                )));
            }
            for x in &p {
                field.check_same(x.field())?;
            }
            let p = normalize(p).map_err(|_| Error::Malformed(format!("point {i} is zero")))?;
            if !seen.insert(p.clone()) {
                return Err(Error::Malformed(format!(
                    "point {i} repeats an earlier point"
                )));
            }
            out.push(p);
        }
        Ok(PointConfig {
            c,
            field,
            points: out,
        })
    }

    pub fn from_i64(field: Field, c: usize, rows: &[Vec<i64>]) -> Result<PointConfig> {
        let pts = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_i64(field, x)).collect())
            .collect();
        PointConfig::new(field, c, pts)
    }

    /// The `c+1` coordinate points of `P^c`.
    pub fn coordinate_points(field: Field, c: usize) -> PointConfig {
        let rows: Vec<Vec<i64>> = (0..=c)
            .map(|i| (0..=c).map(|j| (i == j) as i64).collect())
            .collect();
        PointConfig::from_i64(field, c, &rows).expect("coordinate points are valid")
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Scalar>] {
        &self.points
    }

    /// The points at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> PointConfig {
        PointConfig {
            c: self.c,
            field: self.field,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Image in `P^{c-1}` under projection from `center`, which must not be
    /// one of the points; fails if two points share a line with `center`.
    pub fn project_from(&self, center: &[Scalar]) -> Result<PointConfig> {
        if self.c < 2 || center.len() != self.c + 1 {
            return Err(Error::Malformed(format!(
                "center needs {} coordinates and c >= 2",
                self.c + 1
            )));
        }
        let forms = Matrix::from_rows(self.field, vec![center.to_vec()])?.nullspace();
        if forms.len() != self.c {
            return Err(Error::Malformed("projection center is zero".into()));
        }
        let images = self
            .points
            .iter()
            .map(|pt| {
                forms
                    .iter()
                    .map(|h| {
                        h.iter()
                            .zip(pt)
                            .fold(Scalar::zero(self.field), |acc, (a, x)| &acc + &(a * x))
                    })
                    .collect()
            })
            .collect();
        PointConfig::new(self.field, self.c - 1, images)
    }

    fn rank_of(&self, indices: &[usize]) -> usize {
        let rows: Vec<&[Scalar]> = indices.iter().map(|&i| self.points[i].as_slice()).collect();
        rank_rows(self.field, &rows)
    }

    /// Dimension of the linear span, `-1` for the empty set.
    pub fn span_dim(&self) -> i64 {
        let all: Vec<usize> = (0..self.len()).collect();
        self.rank_of(&all) as i64 - 1
    }

    /// Number of conditions imposed on degree-`m` forms.
    pub fn hilbert(&self, m: u32) -> usize {
        if self.is_empty() {
            return 0;
        }
        let monos = monomials(self.c + 1, m);
        if let Field::Prime(md) = self.field {
            let p = md.get();
            let mut data = Vec::with_capacity(self.len() * monos.len());
            for pt in &self.points {
                let r: Vec<u64> = pt.iter().map(|x| x.as_residue().unwrap()).collect();
                data.extend(eval_monomials_mod(&monos, &r, p));
            }
            return rank_mod_p(self.len(), monos.len(), data, p);
        }
        let entries = self
            .points
            .iter()
            .flat_map(|pt| eval_monomials(&monos, pt))
            .collect();
        Matrix::new(self.field, self.len(), monos.len(), entries)
            .expect("well-formed evaluation matrix")
            .rank()
    }

    /// Dimension of the space of degree-`m` forms vanishing on the points.
    pub fn h0_ideal(&self, m: u32) -> usize {
        binom((self.c as u32 + m) as i64, m as i64) as usize - self.hilbert(m)
    }

    /// Least `r >= 1` with `hilbert(r-1) = |points|`.
    pub fn regularity(&self) -> u32 {
        let n = self.len();
        let mut r = 1;
        while self.hilbert(r - 1) < n {
            r += 1;
        }
        r
    }

    /// True when some degree-`m` form vanishes on every point but `index`.
    pub fn separates_point(&self, index: usize, m: u32) -> bool {
        let rest: Vec<usize> = (0..self.len()).filter(|&i| i != index).collect();
        self.subset(&rest).h0_ideal(m) > self.h0_ideal(m)
    }

    pub fn nu_vector(&self) -> Result<NuVector> {
        self.nu_vector_capped(NU_SIZE_CAP)
    }

    /// For each `0 <= i < c`, the number of points on each `i`-plane spanned
    /// by `i+1` independent points. Enumerates all subsets, so refuses inputs
    /// larger than `cap`.
    pub fn nu_vector_capped(&self, cap: usize) -> Result<NuVector> {
        if self.len() > cap {
            return Err(Error::Complexity(format!(
                "nu-vector enumeration limited to {cap} points, got {}",
                self.len()
            )));
        }
        let spans = self.span_dim() == self.c as i64;
        let mut min = Vec::with_capacity(self.c);
        let mut max = Vec::with_capacity(self.c);
        for i in 0..self.c {
            let mut lo = usize::MAX;
            let mut hi = 0;
            for subset in (0..self.len()).combinations(i + 1) {
                if self.rank_of(&subset) != i + 1 {
                    continue;
                }
                let mut with = subset.clone();
                with.push(0);
                let count = (0..self.len())
                    .filter(|&q| {
                        *with.last_mut().unwrap() = q;
                        self.rank_of(&with) == i + 1
                    })
                    .count();
                lo = lo.min(count);
                hi = hi.max(count);
            }
            if hi == 0 {
                // no independent (i+1)-subset: the points span less than an i-plane
                lo = 0;
            }
            min.push(lo);
            max.push(hi);
        }
        let semi_uniform = spans && min == max;
        Ok(NuVector {
            values: min,
            max,
            semi_uniform,
        })
    }

    fn certify_three_regular(&self, indices: &[usize]) -> bool {
        let sub = self.subset(indices);
        sub.span_dim() == self.c as i64 && sub.hilbert(2) == sub.len()
    }

    /// A spanning 3-regular subset of `2c+1` points.
    ///
    /// Tries `(2c+1)`-subsets in lexicographic order (up to a budget), then
    /// the frame-guided construction for semi-uniform sets that are not in
    /// general position, then the rest of the lexicographic scan. Every
    /// candidate is certified by the Hilbert function before it is returned.
    pub fn extract_three_regular(&self) -> Result<PointConfig> {
        let c = self.c;
        let want = 2 * c + 1;
        if self.span_dim() != c as i64 {
            return Err(Error::OutOfRange("points do not span P^c".into()));
        }
        if self.len() < want {
            return Err(Error::OutOfRange(format!(
                "need at least {want} points, got {}",
                self.len()
            )));
        }
        if self.len() <= NU_SIZE_CAP && !self.nu_vector()?.semi_uniform {
            return Err(Error::Verification(
                "points are not in linear semi-uniform position".into(),
            ));
        }
        let mut lex = (0..self.len()).combinations(want);
        for subset in lex.by_ref().take(LEX_BUDGET) {
            if self.certify_three_regular(&subset) {
                return Ok(self.subset(&subset));
            }
        }
        if let Some(subset) = self.guided_subset() {
            return Ok(self.subset(&subset));
        }
        for subset in lex {
            if self.certify_three_regular(&subset) {
                return Ok(self.subset(&subset));
            }
        }
        Err(Error::Verification(
            "no spanning 3-regular subset found".into(),
        ))
    }

    /// Builds `{p_0..p_c} ∪ {q_1..q_c}` from a frame of the configuration:
    /// with the frame sent to the coordinate points, `q_j` for `j <= i+1`
    /// has support `{0..i+1} \ {j}` and `q_j` for `j >= i+2` has support
    /// `{1..i} ∪ {j}`.
    fn guided_subset(&self) -> Option<Vec<usize>> {
        let c = self.c;
        let frames = (0..self.len())
            .combinations(c + 1)
            .filter(|f| self.rank_of(f) == c + 1)
            .take(64);
        for frame in frames {
            let rows: Vec<Vec<Scalar>> = frame.iter().map(|&i| self.points[i].clone()).collect();
            let inv = Matrix::from_rows(self.field, rows).ok()?.inverse()?;
            let coords: Vec<Vec<bool>> = self
                .points
                .iter()
                .map(|pt| {
                    (0..=c)
                        .map(|col| {
                            let mut acc = Scalar::zero(self.field);
                            for (r, x) in pt.iter().enumerate() {
                                acc = &acc + &(x * inv.get(r, col));
                            }
                            !acc.is_zero()
                        })
                        .collect()
                })
                .collect();
            let in_frame = |q: usize| frame.contains(&q);
            for i in 1..c {
                let mut chosen = frame.clone();
                let mut ok = true;
                for j in 1..=c {
                    let allowed = |k: usize| {
                        if j <= i + 1 {
                            k <= i + 1 && k != j
                        } else {
                            (1..=i).contains(&k) || k == j
                        }
                    };
                    let pick = (0..self.len()).find(|&q| {
                        !in_frame(q)
                            && !chosen.contains(&q)
                            && (0..=c).all(|k| coords[q][k] == allowed(k))
                    });
                    match pick {
                        Some(q) => chosen.push(q),
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    chosen.sort_unstable();
                    if self.certify_three_regular(&chosen) {
                        return Some(chosen);
                    }
                }
            }
        }
        None
    }

    /// Text form: `field p|Q`, then `c npoints`, then one point per line.
    /// Points are written in canonical form, so write∘read is the identity
    /// on written files.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self.field {
            Field::Rational => s.push_str("field Q\n"),
            Field::Prime(m) => writeln!(s, "field {}", m.get()).unwrap(),
        }
        writeln!(s, "{} {}", self.c, self.len()).unwrap();
        for pt in &self.points {
            let ints: Vec<String> = match self.field {
                Field::Prime(_) => pt
                    .iter()
                    .map(|x| x.as_residue().unwrap().to_string())
                    .collect(),
                Field::Rational => primitive_integers(pt)
                    .into_iter()
                    .map(|x| x.to_string())
                    .collect(),
            };
            s.push_str(&ints.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the format written by [`PointConfig::to_text`]; blank lines and
    /// lines starting with `#` are ignored.
    pub fn from_text(text: &str) -> Result<PointConfig> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Malformed("empty point file".into()))?;
        let spec = header
            .strip_prefix("field ")
            .ok_or_else(|| Error::Malformed(format!("expected 'field p|Q', got '{header}'")))?
            .trim();
        let field = if spec == "Q" {
            Field::Rational
        } else {
            let p: u64 = spec
                .parse()
                .map_err(|_| Error::Malformed(format!("bad field '{spec}'")))?;
            Field::prime(p)?
        };
        let dims = lines
            .next()
            .ok_or_else(|| Error::Malformed("missing 'c npoints' line".into()))?;
        let nums: Vec<usize> = dims
            .split_whitespace()
            .map(|t| t.parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Malformed(format!("bad size line '{dims}'")))?;
        let [c, n] = nums[..] else {
            return Err(Error::Malformed(format!("bad size line '{dims}'")));
        };
        let mut pts = Vec::with_capacity(n);
        for line in lines.by_ref().take(n) {
            let coords: Vec<Scalar> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<BigInt>()
                        .map(|v| Scalar::from_bigint(field, &v))
                        .map_err(|_| Error::Malformed(format!("bad coordinate '{t}'")))
                })
                .collect::<Result<_>>()?;
            pts.push(coords);
        }
        if pts.len() != n {
            return Err(Error::Malformed(format!(
                "expected {n} points, found {}",
                pts.len()
            )));
        }
        if lines.next().is_some() {
            return Err(Error::Malformed("trailing lines after points".into()));
        }
        PointConfig::new(field, c, pts)
    }
}

/// Integer vector proportional to a rational point, with gcd 1 and positive
/// first nonzero entry.
fn primitive_integers(pt: &[Scalar]) -> Vec<BigInt> {
    let rats: Vec<_> = pt
        .iter()
        .map(|x| x.as_rational().unwrap().clone())
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// Counts of points on spans of independent subsets, per dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NuVector {
    /// Smallest count seen for each `i`; the common count when semi-uniform.
    pub values: Vec<usize>,
    /// Largest count seen for each `i`.
    pub max: Vec<usize>,
    pub semi_uniform: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn twisted_cubic_points(field: Field, ts: &[i64]) -> PointConfig {
        let rows: Vec<Vec<i64>> = ts.iter().map(|&t| vec![1, t, t * t, t * t * t]).collect();
        PointConfig::from_i64(field, 3, &rows).unwrap()
    }

    /// All points of `P^c(GF(q))` in normalized form.
    fn projective_space(q: u64, c: usize) -> PointConfig {
        let mut rows = vec![];
        for lead in 0..=c {
            let free = c - lead;
            for n in 0..(q as usize).pow(free as u32) {
                let mut v = vec![0i64; c + 1];
                v[lead] = 1;
                let mut n = n;
                for slot in v.iter_mut().skip(lead + 1) {
                    *slot = (n % q as usize) as i64;
                    n /= q as usize;
                }
                rows.push(v);
            }
        }
        PointConfig::from_i64(gf(q), c, &rows).unwrap()
    }

    #[test]
    fn span_dims() {
        let f = gf(101);
        assert_eq!(PointConfig::coordinate_points(f, 3).span_dim(), 3);
        let line: Vec<Vec<i64>> = (0..5).map(|t| vec![1, t, 0, 0]).collect();
        assert_eq!(PointConfig::from_i64(f, 3, &line).unwrap().span_dim(), 1);
        let tc = twisted_cubic_points(Field::Rational, &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(tc.span_dim(), 3);
    }

    #[test]
    fn hilbert_examples() {
        let q = Field::Rational;
        let pts = PointConfig::coordinate_points(q, 2);
        assert_eq!(pts.hilbert(2), 3);
        assert_eq!(pts.h0_ideal(2), 3);
        assert_eq!(pts.hilbert(0), 1);
        // five points on the conic xz = y^2
        let rows: Vec<Vec<i64>> = (0..5).map(|t| vec![1, t, t * t]).collect();
        let conic = PointConfig::from_i64(q, 2, &rows).unwrap();
        assert_eq!(conic.hilbert(2), 5);
        assert_eq!(conic.h0_ideal(2), 1);
        for c in 2..=5 {
            let pts = PointConfig::coordinate_points(q, c);
            assert_eq!(pts.h0_ideal(2), (c + 2) * (c + 1) / 2 - (c + 1));
        }
    }

    #[test]
    fn regularity_examples() {
        let f = gf(101);
        assert_eq!(PointConfig::coordinate_points(f, 3).regularity(), 2);
        let rows: Vec<Vec<i64>> = (0..4).map(|t| vec![1, t, 0, 0]).collect();
        assert_eq!(PointConfig::from_i64(f, 3, &rows).unwrap().regularity(), 4);
        let tc = twisted_cubic_points(f, &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(tc.regularity(), 3);
    }

    #[test]
    fn rejects_degenerate_input() {
        let f = gf(7);
        assert!(PointConfig::from_i64(f, 2, &[vec![0, 0, 0]]).is_err());
        assert!(PointConfig::from_i64(f, 2, &[vec![1, 2, 3], vec![2, 4, 6]]).is_err());
        assert!(PointConfig::from_i64(f, 2, &[vec![1, 2]]).is_err());
        // 7 = 0 in GF(7)
        assert!(PointConfig::from_i64(f, 1, &[vec![7, 14]]).is_err());
    }

    #[test]
    fn nu_vectors() {
        let f = gf(101);
        let tc = twisted_cubic_points(f, &[0, 1, 2, 3, 4, 5, 6]);
        let nu = tc.nu_vector().unwrap();
        assert_eq!(nu.values, vec![1, 2, 3]);
        assert!(nu.semi_uniform);
        let bad = PointConfig::from_i64(
            f,
            2,
            &[vec![1, 0, 0], vec![1, 1, 0], vec![1, 2, 0], vec![0, 0, 1]],
        )
        .unwrap();
        assert!(!bad.nu_vector().unwrap().semi_uniform);
        let cp = PointConfig::coordinate_points(f, 3).nu_vector().unwrap();
        assert_eq!(cp.values, vec![1, 2, 3]);
        assert!(cp.semi_uniform);
        let big = twisted_cubic_points(f, &(0..17).collect::<Vec<_>>());
        assert!(matches!(big.nu_vector(), Err(Error::Complexity(_))));
    }

    #[test]
    fn finite_geometries_are_semi_uniform() {
        // P^2(GF(2)): lines carry 3 points
        let fano = projective_space(2, 2);
        assert_eq!(fano.len(), 7);
        let nu = fano.nu_vector().unwrap();
        assert!(nu.semi_uniform);
        assert_eq!(nu.values, vec![1, 3]);
        let p2f3 = projective_space(3, 2);
        assert_eq!(p2f3.nu_vector().unwrap().values, vec![1, 4]);
        let p3f2 = projective_space(2, 3);
        assert_eq!(p3f2.len(), 15);
        assert_eq!(p3f2.nu_vector().unwrap().values, vec![1, 3, 7]);
    }

    #[test]
    fn extraction_on_general_position_points() {
        let f = gf(10007);
        let tc = twisted_cubic_points(f, &[3, 1, 4, 15, 9, 26, 5, 35, 8]);
        let sub = tc.extract_three_regular().unwrap();
        assert_eq!(sub.len(), 7);
        assert_eq!(sub.span_dim(), 3);
        assert!(sub.regularity() <= 3);
        let exact = twisted_cubic_points(f, &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(exact.extract_three_regular().unwrap(), exact);
    }

    #[test]
    fn extraction_on_non_general_semi_uniform_sets() {
        for pts in [
            projective_space(2, 2),
            projective_space(3, 2),
            projective_space(2, 3),
        ] {
            let sub = pts.extract_three_regular().unwrap();
            assert_eq!(sub.len(), 2 * pts.c() + 1);
            assert_eq!(sub.span_dim(), pts.c() as i64);
            assert!(sub.regularity() <= 3);
        }
        // the affine plane over GF(3): 9 points, lines of 3
        let rows: Vec<Vec<i64>> = (0..3)
            .flat_map(|x| (0..3).map(move |y| vec![1, x, y]))
            .collect();
        let ag = PointConfig::from_i64(gf(3), 2, &rows).unwrap();
        assert!(ag.nu_vector().unwrap().semi_uniform);
        let sub = ag.extract_three_regular().unwrap();
        assert!(sub.regularity() <= 3 && sub.span_dim() == 2);
    }

    #[test]
    fn guided_construction_alone_certifies() {
        for pts in [
            projective_space(2, 2),
            projective_space(2, 3),
            projective_space(3, 2),
        ] {
            let idx = pts.guided_subset().expect("guided construction");
            assert_eq!(idx.len(), 2 * pts.c() + 1);
            assert!(pts.subset(&idx).regularity() <= 3);
        }
    }

    #[test]
    fn separation() {
        let f = gf(101);
        let cp = PointConfig::coordinate_points(f, 2);
        assert!((0..3).all(|i| cp.separates_point(i, 1)));
        let rows: Vec<Vec<i64>> = (0..4).map(|t| vec![1, t, 0]).collect();
        let line = PointConfig::from_i64(f, 2, &rows).unwrap();
        assert!(!line.separates_point(1, 2));
        let tc = twisted_cubic_points(f, &[0, 1, 2, 3, 4, 5, 6]);
        assert!((0..7).all(|i| tc.separates_point(i, 2)));
    }

    #[test]
    fn text_roundtrip() {
        let f = gf(10007);
        let tc = twisted_cubic_points(f, &[0, 1, 2, 3, -4]);
        let text = tc.to_text();
        let back = PointConfig::from_text(&text).unwrap();
        assert_eq!(back, tc);
        assert_eq!(back.to_text(), text);

        let q = Field::Rational;
        let pts = PointConfig::new(
            q,
            2,
            vec![
                vec![q.int(0), q.int(-2), q.int(4)],
                vec![
                    Scalar::from_ratio(q, 1, 2).unwrap(),
                    Scalar::from_ratio(q, -1, 3).unwrap(),
                    q.int(1),
                ],
            ],
        )
        .unwrap();
        let text = pts.to_text();
        assert_eq!(text, "field Q\n2 2\n0 1 -2\n3 -2 6\n");
        let back = PointConfig::from_text(&text).unwrap();
        assert_eq!(back, pts);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn text_errors() {
        assert!(PointConfig::from_text("").is_err());
        assert!(PointConfig::from_text("field 12\n1 1\n1 0\n").is_err());
        assert!(PointConfig::from_text("field 7\n1 2\n1 0\n").is_err());
        assert!(PointConfig::from_text("field 7\n1 1\n1 x\n").is_err());
        assert!(PointConfig::from_text("fld 7\n1 1\n1 0\n").is_err());
        assert!(PointConfig::from_text("field 7\n1 1\n1 0\n0 1\n").is_err());
    }
}
