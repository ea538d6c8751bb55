use std::collections::BTreeMap;
use std::fmt;

use super::field::{add_mod, inv_mod, mul_mod, pow_mod, sub_mod, Field, Scalar};
use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

/// All exponent vectors of total degree `m` in `v` variables, in graded
/// lexicographic order: `x0^m` first, `x_{v-1}^m` last.
///
/// The count is `C(v-1+m, m)`. Every evaluation matrix and every quadratic
/// embedding in the crate indexes its columns by this order.
pub fn monomials(v: usize, m: u32) -> Vec<Exponent> {
    fn rec(v: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if prefix.len() + 1 == v {
            prefix.push(m);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=m).rev() {
            prefix.push(e);
            rec(v, m - e, prefix, out);
            prefix.pop();
        }
    }
    assert!(v >= 1, "monomials need at least one variable");
    let mut out = Vec::new();
    rec(v, m, &mut Vec::with_capacity(v), &mut out);
    out
}

/// Values of each monomial at a point over `GF(p)`, via per-variable power tables.
pub fn eval_monomials_mod(monos: &[Exponent], point: &[u64], p: u64) -> Vec<u64> {
    let max_e = monos
        .iter()
        .flat_map(|e| e.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let powers: Vec<Vec<u64>> = point
        .iter()
        .map(|&x| {
            let mut t = Vec::with_capacity(max_e + 1);
            let mut acc = 1 % p;
            for _ in 0..=max_e {
                t.push(acc);
                acc = mul_mod(acc, x, p);
            }
            t
        })
        .collect();
    monos
        .iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .fold(1 % p, |acc, (i, &k)| mul_mod(acc, powers[i][k as usize], p))
        })
        .collect()
}

/// Values of each monomial at a point over any field.
pub fn eval_monomials(monos: &[Exponent], point: &[Scalar]) -> Vec<Scalar> {
    let field = point[0].field();
    if let Field::Prime(m) = field {
        let pt: Vec<u64> = point.iter().map(|s| s.as_residue().unwrap()).collect();
        return eval_monomials_mod(monos, &pt, m.get())
            .into_iter()
            .map(|v| Scalar::residue(field, v))
            .collect();
    }
    let max_e = monos
        .iter()
        .flat_map(|e| e.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let powers: Vec<Vec<Scalar>> = point
        .iter()
        .map(|x| {
            let mut t = Vec::with_capacity(max_e + 1);
            let mut acc = Scalar::one(field);
            for _ in 0..=max_e {
                t.push(acc.clone());
                acc = &acc * x;
            }
            t
        })
        .collect();
    monos
        .iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .fold(Scalar::one(field), |acc, (i, &k)| {
                    &acc * &powers[i][k as usize]
                })
        })
        .collect()
}

/// Sparse multivariate polynomial. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Exponent, Scalar>,
}

impl MPoly {
    pub fn zero(field: Field, nvars: usize) -> MPoly {
        MPoly {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar, nvars: usize) -> MPoly {
        let field = c.field();
        let mut p = MPoly::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(field: Field, nvars: usize, i: usize) -> MPoly {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::monomial(e, Scalar::one(field))
    }

    pub fn monomial(exp: Exponent, coeff: Scalar) -> MPoly {
        let field = coeff.field();
        let nvars = exp.len();
        let mut p = MPoly::zero(field, nvars);
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms(
        field: Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponent, Scalar)>,
    ) -> Result<MPoly> {
        let mut p = MPoly::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Malformed(format!(
                    "exponent of length {} in {nvars} variables",
                    e.len()
                )));
            }
            field.check_same(c.field())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in the variables `vars` jointly, if homogeneous there.
    pub fn block_degree(&self, vars: std::ops::Range<usize>) -> Option<u32> {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e[vars.clone()].iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn check(&self, rhs: &MPoly) -> Result<()> {
        self.field.check_same(rhs.field)?;
        if self.nvars != rhs.nvars {
            return Err(Error::Malformed(format!(
                "polynomials in {} and {} variables",
                self.nvars, rhs.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &MPoly) -> Result<MPoly> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &MPoly) -> Result<MPoly> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<MPoly> {
        self.field.check_same(s.field())?;
        let mut out = MPoly::zero(self.field, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &MPoly) -> Result<MPoly> {
        self.check(rhs)?;
        let mut out = MPoly::zero(self.field, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::constant(Scalar::one(self.field), self.nvars);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// `sum_i coeffs[i] * polys[i]`.
    pub fn linear_combination(coeffs: &[Scalar], polys: &[MPoly]) -> Result<MPoly> {
        let first = polys
            .first()
            .ok_or_else(|| Error::Malformed("empty combination".into()))?;
        if coeffs.len() != polys.len() {
            return Err(Error::Malformed("coefficient count mismatch".into()));
        }
        let mut out = MPoly::zero(first.field, first.nvars);
        for (c, p) in coeffs.iter().zip(polys) {
            out.check(p)?;
            first.field.check_same(c.field())?;
            if c.is_zero() {
                continue;
            }
            for (e, pc) in &p.terms {
                out.add_term(e.clone(), c * pc);
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::Malformed(format!(
                "point of length {} for {} variables",
                point.len(),
                self.nvars
            )));
        }
        for x in point {
            self.field.check_same(x.field())?;
        }
        if let Field::Prime(m) = self.field {
            let pt: Vec<u64> = point.iter().map(|s| s.as_residue().unwrap()).collect();
            return Ok(Scalar::residue(self.field, self.eval_mod(&pt, m.get())));
        }
        let mut acc = Scalar::zero(self.field);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Evaluation on residues; the polynomial must live over `GF(p)`.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> u64 {
        let mut acc = 0;
        for (e, c) in &self.terms {
            let mut t = c.as_residue().expect("prime-field polynomial");
            for (&x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = mul_mod(t, pow_mod(x, k as u64, p), p);
                }
            }
            acc = add_mod(acc, t, p);
        }
        acc
    }

    /// Formal partial derivative in variable `var`.
    pub fn diff(&self, var: usize) -> MPoly {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = MPoly::zero(self.field, self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c * &Scalar::from_i64(self.field, k as i64));
        }
        out
    }

    /// Substitutes a value for one variable, keeping the variable count.
    pub fn substitute(&self, var: usize, value: &Scalar) -> MPoly {
        let mut out = MPoly::zero(self.field, self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[var];
            e2[var] = 0;
            out.add_term(e2, c * &value.pow(k));
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{i}")
                    } else {
                        format!("x{i}^{k}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial over `GF(p)`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

impl UniPolyFp {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> UniPolyFp {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut u = UniPolyFp { p, coeffs };
        u.trim();
        u
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    pub fn derivative(&self) -> UniPolyFp {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect();
        UniPolyFp::new(p, coeffs)
    }

    pub fn mul(&self, rhs: &UniPolyFp) -> UniPolyFp {
        if self.is_zero() || rhs.is_zero() {
            return UniPolyFp::new(self.p, vec![]);
        }
        let p = self.p;
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        UniPolyFp::new(p, out)
    }

    pub fn sub(&self, rhs: &UniPolyFp) -> UniPolyFp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n)
            .map(|i| {
                sub_mod(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *rhs.coeffs.get(i).unwrap_or(&0),
                    self.p,
                )
            })
            .collect();
        UniPolyFp::new(self.p, out)
    }

    pub fn rem(&self, divisor: &UniPolyFp) -> UniPolyFp {
        let dd = divisor.degree().expect("division by zero polynomial");
        let p = self.p;
        let lead_inv = inv_mod(divisor.coeffs[dd], p);
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = mul_mod(r[top], lead_inv, p);
            if f != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let k = top - dd + i;
                    r[k] = sub_mod(r[k], mul_mod(f, c, p), p);
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        UniPolyFp::new(p, r)
    }

    pub fn monic(&self) -> UniPolyFp {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = inv_mod(lead, self.p);
                UniPolyFp::new(
                    self.p,
                    self.coeffs
                        .iter()
                        .map(|&c| mul_mod(c, inv, self.p))
                        .collect(),
                )
            }
        }
    }

    pub fn gcd(&self, rhs: &UniPolyFp) -> UniPolyFp {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when the polynomial has no repeated root over the algebraic closure.
    /// Inseparable cases (derivative zero) count as not squarefree.
    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        if d.is_zero() {
            return self.degree().unwrap_or(0) == 0;
        }
        self.gcd(&d).degree() == Some(0)
    }

    /// `x^e mod self`.
    fn x_pow_mod(&self, mut e: u64) -> UniPolyFp {
        let p = self.p;
        let mut acc = UniPolyFp::new(p, vec![1]).rem(self);
        let mut base = UniPolyFp::new(p, vec![0, 1]).rem(self);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(self);
            }
            base = base.mul(&base).rem(self);
            e >>= 1;
        }
        acc
    }

    /// Number of distinct roots in `GF(p)`: the degree of `gcd(f, x^p - x)`.
    pub fn count_distinct_roots(&self) -> usize {
        match self.degree() {
            None => self.p as usize,
            Some(0) => 0,
            Some(_) => {
                let xp = self.x_pow_mod(self.p);
                let x = UniPolyFp::new(self.p, vec![0, 1]);
                let h = xp.sub(&x);
                self.gcd(&h).degree().unwrap_or(0)
            }
        }
    }
}
