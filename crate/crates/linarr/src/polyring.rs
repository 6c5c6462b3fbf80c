//! Sparse homogeneous polynomials in K[x,y,z] and K[y,z], and derivations
//! presented as polynomial triples.
//!
//! All values are homogeneous. The zero polynomial carries an explicit
//! degree tag so that graded containers stay well typed. The term order is
//! graded lexicographic with x > y > z; within one degree this is plain
//! lexicographic order on exponent vectors.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{residue_terms, Field, FieldScalar, Rational};

/// Exponent vector (x, y, z). Bivariate polynomials keep slot 0 at zero.
pub type Exp = [u16; 3];

pub const VAR_X: usize = 0;
pub const VAR_Y: usize = 1;
pub const VAR_Z: usize = 2;

/// Exponent vectors of the monomial basis of S_k, in lexicographic order
/// with x > y > z (for 2 variables: y > z).
pub fn monomials(nvars: usize, k: usize) -> Vec<Exp> {
    assert!(nvars == 2 || nvars == 3);
    let k = k as u16;
    let mut out = Vec::new();
    if nvars == 3 {
        for ex in (0..=k).rev() {
            for ey in (0..=k - ex).rev() {
                out.push([ex, ey, k - ex - ey]);
            }
        }
    } else {
        for ey in (0..=k).rev() {
            out.push([0, ey, k - ey]);
        }
    }
    out
}

/// dim S_k: C(k+2,2) in three variables, k+1 in two.
pub fn dim_sk(nvars: usize, k: isize) -> usize {
    if k < 0 {
        return 0;
    }
    let k = k as usize;
    if nvars == 3 {
        (k + 1) * (k + 2) / 2
    } else {
        k + 1
    }
}

/// A sparse homogeneous polynomial over a number field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPoly {
    field: Field,
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Exp, FieldScalar>,
}

impl HomPoly {
    pub fn zero(field: &Field, nvars: usize, degree: usize) -> Self {
        assert!(nvars == 2 || nvars == 3);
        HomPoly {
            field: field.clone(),
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, nvars: usize, value: FieldScalar) -> Self {
        let mut p = Self::zero(field, nvars, 0);
        if !value.is_zero() {
            p.terms.insert([0, 0, 0], value);
        }
        p
    }

    pub fn one(field: &Field, nvars: usize) -> Self {
        Self::constant(field, nvars, FieldScalar::one(field))
    }

    /// Builds a polynomial from (exponent, coefficient) pairs. All
    /// exponents must sum to the same degree; zero coefficients are dropped.
    pub fn from_terms(
        field: &Field,
        nvars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Exp, FieldScalar)>,
    ) -> Self {
        let mut map: BTreeMap<Exp, FieldScalar> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(
                e.iter().map(|&v| v as usize).sum::<usize>(),
                degree,
                "non-homogeneous term"
            );
            assert!(nvars == 3 || e[0] == 0, "x exponent in bivariate polynomial");
            if c.is_zero() {
                continue;
            }
            match map.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let s = o.get().try_add(&c).expect("field mismatch");
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
            }
        }
        HomPoly {
            field: field.clone(),
            nvars,
            degree,
            terms: map,
        }
    }

    /// The monomial c * x^e0 y^e1 z^e2.
    pub fn monomial(field: &Field, nvars: usize, e: Exp, c: FieldScalar) -> Self {
        let degree = e.iter().map(|&v| v as usize).sum();
        Self::from_terms(field, nvars, degree, [(e, c)])
    }

    /// The variable with the given index, as a degree-1 polynomial.
    pub fn variable(field: &Field, nvars: usize, var: usize) -> Self {
        let mut e = [0u16; 3];
        e[var] = 1;
        Self::monomial(field, nvars, e, FieldScalar::one(field))
    }

    /// A linear form a*x + b*y + c*z.
    pub fn linear(field: &Field, coeffs: [FieldScalar; 3]) -> Self {
        Self::from_terms(
            field,
            3,
            1,
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut e = [0u16; 3];
                    e[i] = 1;
                    (e, c)
                }),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &FieldScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &Exp) -> FieldScalar {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| FieldScalar::zero(&self.field))
    }

    /// Leading term in the fixed term order.
    pub fn leading(&self) -> Option<(&Exp, &FieldScalar)> {
        self.terms.iter().next_back()
    }

    /// Coefficient vector on the monomial basis of S_degree.
    pub fn coeff_vector(&self) -> Vec<FieldScalar> {
        monomials(self.nvars, self.degree)
            .iter()
            .map(|e| self.coefficient(e))
            .collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            if self.is_zero() {
                return Ok(other.clone());
            }
            if other.is_zero() {
                return Ok(self.clone());
            }
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(Self::from_terms(
            &self.field,
            self.nvars,
            self.degree,
            self.terms
                .iter()
                .map(|(e, c)| (*e, c.clone()))
                .chain(other.terms.iter().map(|(e, c)| (*e, c.clone()))),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&(-other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let degree = self.degree + other.degree;
        let mut map: BTreeMap<Exp, FieldScalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let prod = ca.try_mul(cb)?;
                match map.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().try_add(&prod)?;
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
        }
        Ok(HomPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            degree,
            terms: map,
        })
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field, self.nvars, self.degree);
        }
        HomPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.try_mul(c).expect("field mismatch")))
                .collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        HomPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, v)| (*e, v.scale(r))).collect(),
        }
    }

    /// Partial derivative; the degree tag drops by one (never below zero).
    pub fn partial(&self, var: usize) -> Self {
        let degree = self.degree.saturating_sub(1);
        Self::from_terms(
            &self.field,
            self.nvars,
            degree,
            self.terms.iter().filter_map(|(e, c)| {
                if e[var] == 0 {
                    None
                } else {
                    let mut d = *e;
                    d[var] -= 1;
                    Some((d, c.scale(&Rational::from_integer((e[var] as i64).into()))))
                }
            }),
        )
    }

    /// Evaluation at a projective representative (u, v, w). Well defined up
    /// to lambda^degree; consumers only test zero or take ratios.
    pub fn eval(&self, point: &[FieldScalar; 3]) -> FieldScalar {
        let mut acc = FieldScalar::zero(&self.field);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (var, p) in point.iter().enumerate() {
                if e[var] > 0 {
                    term = &term * &p.pow(e[var] as usize);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Exact quotient p/q, by long division on leading terms, verified by
    /// re-multiplication. Fails with `NotDivisible` when no quotient exists.
    pub fn exact_div(&self, q: &Self) -> Result<Self> {
        self.check_compatible(q)?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(
                &self.field,
                self.nvars,
                self.degree.saturating_sub(q.degree),
            ));
        }
        if self.degree < q.degree {
            return Err(Error::NotDivisible);
        }
        let qdeg = self.degree - q.degree;
        let (qe, qc) = q.leading().unwrap();
        let (qe, qc) = (*qe, qc.clone());
        let qc_inv = qc.invert().map_err(|_| Error::NotDivisible)?;
        let mut rem = self.clone();
        let mut quo = Self::zero(&self.field, self.nvars, qdeg);
        while let Some((re, rc)) = rem.leading() {
            if re[0] < qe[0] || re[1] < qe[1] || re[2] < qe[2] {
                return Err(Error::NotDivisible);
            }
            let me = [re[0] - qe[0], re[1] - qe[1], re[2] - qe[2]];
            let mc = rc.try_mul(&qc_inv)?;
            let mono = Self::monomial(&self.field, self.nvars, me, mc);
            quo = quo.try_add(&mono)?;
            rem = rem.try_sub(&mono.try_mul(q)?)?;
        }
        let check = quo.try_mul(q)?;
        if &check != self {
            return Err(Error::Internal(
                "exact division re-multiplication failed".into(),
            ));
        }
        Ok(quo)
    }

    /// Substitution x_i -> sum_j M[i][j] x_j; satisfies
    /// (p o M) o N = p o (M*N) and respects products.
    pub fn substitute_linear(&self, m: &Mat3) -> Result<Self> {
        if self.nvars != 3 {
            return Err(Error::VariableMismatch);
        }
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<HomPoly> = (0..3)
            .map(|i| {
                HomPoly::linear(
                    &self.field,
                    [m.entries[i][0].clone(), m.entries[i][1].clone(), m.entries[i][2].clone()],
                )
            })
            .collect();
        // cache powers of each image
        let mut powers: Vec<Vec<HomPoly>> = images
            .iter()
            .map(|im| vec![HomPoly::one(&self.field, 3), im.clone()])
            .collect();
        let need: [u16; 3] = self.terms.keys().fold([0, 0, 0], |acc, e| {
            [acc[0].max(e[0]), acc[1].max(e[1]), acc[2].max(e[2])]
        });
        for var in 0..3 {
            while powers[var].len() <= need[var] as usize {
                let next = powers[var].last().unwrap().try_mul(&images[var])?;
                powers[var].push(next);
            }
        }
        let mut acc = Self::zero(&self.field, 3, self.degree);
        for (e, c) in &self.terms {
            let mut term = HomPoly::constant(&self.field, 3, c.clone());
            for var in 0..3 {
                if e[var] > 0 {
                    term = term.try_mul(&powers[var][e[var] as usize])?;
                }
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Restriction to the line x = 0, as a bivariate polynomial in (y, z).
    pub fn restrict_x0(&self) -> Self {
        assert_eq!(self.nvars, 3);
        Self::from_terms(
            &self.field,
            2,
            self.degree,
            self.terms
                .iter()
                .filter(|(e, _)| e[0] == 0)
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    /// Promotes a bivariate polynomial to three variables (x does not occur).
    pub fn extend_to_3(&self) -> Self {
        assert_eq!(self.nvars, 2);
        HomPoly {
            field: self.field.clone(),
            nvars: 3,
            degree: self.degree,
            terms: self.terms.clone(),
        }
    }

    /// True when other = c * self for a nonzero constant c (both nonzero),
    /// or both are zero.
    pub fn proportional(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.nvars != other.nvars
            || self.degree != other.degree
            || self.terms.len() != other.terms.len()
        {
            return false;
        }
        let (e0, c0) = self.leading().unwrap();
        let d0 = match other.terms.get(e0) {
            Some(c) => c,
            None => return false,
        };
        // other = (d0/c0) * self
        let ratio = match d0.try_div(c0) {
            Ok(r) => r,
            Err(_) => return false,
        };
        self.terms.iter().all(|(e, c)| {
            other
                .terms
                .get(e)
                .map_or(false, |d| d == &c.try_mul(&ratio).unwrap())
        })
    }

    /// The constant c with other = c * self, when it exists.
    pub fn proportionality_constant(&self, other: &Self) -> Option<FieldScalar> {
        if !self.proportional(other) {
            return None;
        }
        if self.is_zero() {
            return Some(FieldScalar::one(&self.field));
        }
        let (e0, c0) = self.leading().unwrap();
        Some(other.terms.get(e0).unwrap().try_div(c0).unwrap())
    }

    /// Number of distinct projective roots of a nonzero binary form,
    /// via deg p - deg gcd(p, p') on the dehomogenisation, with the root at
    /// z = 0 counted from the degree drop.
    pub fn binary_distinct_roots(&self) -> Result<usize> {
        if self.nvars != 2 {
            return Err(Error::VariableMismatch);
        }
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.degree;
        // u(y) = p(y, 1), dense low-first
        let mut u = vec![FieldScalar::zero(&self.field); n + 1];
        for (e, c) in &self.terms {
            u[e[1] as usize] = c.clone();
        }
        let u = scalar_poly_trim(u);
        let maxdeg = u.len() - 1;
        let infinity_root = maxdeg < n; // z divides p
        let du: Vec<FieldScalar> = (1..u.len())
            .map(|i| u[i].scale(&Rational::from_integer((i as i64).into())))
            .collect();
        let du = scalar_poly_trim(du);
        let g = if du.is_empty() {
            // u constant: p = c * z^n
            vec![]
        } else {
            scalar_poly_gcd(u.clone(), du)
        };
        let gdeg = if g.is_empty() { 0 } else { g.len() - 1 };
        Ok(maxdeg - gdeg + usize::from(infinity_root))
    }
}

fn scalar_poly_trim(mut v: Vec<FieldScalar>) -> Vec<FieldScalar> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Monic gcd of dense univariate polynomials over K by the Euclidean
/// algorithm, remainders normalised at each step.
fn scalar_poly_gcd(mut a: Vec<FieldScalar>, mut b: Vec<FieldScalar>) -> Vec<FieldScalar> {
    while !b.is_empty() {
        let r = scalar_poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        let inv = lead.invert().expect("leading coefficient invertible");
        for c in &mut a {
            *c = &*c * &inv;
        }
    }
    a
}

fn scalar_poly_rem(a: &[FieldScalar], b: &[FieldScalar]) -> Vec<FieldScalar> {
    let db = b.len() - 1;
    let lead_inv = b[db].invert().expect("leading coefficient invertible");
    let mut rem = a.to_vec();
    while rem.len() > db {
        let dr = rem.len() - 1;
        let factor = &rem[dr] * &lead_inv;
        if !factor.is_zero() {
            let shift = dr - db;
            for (j, cb) in b.iter().enumerate() {
                let t = &factor * cb;
                rem[j + shift] = &rem[j + shift] - &t;
            }
        }
        rem.pop();
        rem = scalar_poly_trim(rem);
        if rem.len() <= db {
            break;
        }
    }
    scalar_poly_trim(rem)
}

impl std::ops::Neg for &HomPoly {
    type Output = HomPoly;
    fn neg(self) -> HomPoly {
        HomPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["x", "y", "z"];
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = (0..3)
                .filter(|&v| e[v] > 0)
                .map(|v| {
                    if e[v] == 1 {
                        names[v].to_string()
                    } else {
                        format!("{}^{}", names[v], e[v])
                    }
                })
                .collect();
            let mono = mono.join("*");
            let cs = c.to_string();
            let (sign, body) = if residue_terms(c) == 1 {
                if let Some(stripped) = cs.strip_prefix('-') {
                    ("-", stripped.to_string())
                } else {
                    ("+", cs)
                }
            } else {
                ("+", format!("({cs})"))
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{body}*{mono}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// 3x3 matrices over K, for coordinate changes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3 {
    pub field: Field,
    pub entries: [[FieldScalar; 3]; 3],
}

impl Mat3 {
    pub fn identity(field: &Field) -> Self {
        let z = || FieldScalar::zero(field);
        let o = || FieldScalar::one(field);
        Mat3 {
            field: field.clone(),
            entries: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]],
        }
    }

    pub fn from_rows(field: &Field, rows: [[FieldScalar; 3]; 3]) -> Self {
        Mat3 {
            field: field.clone(),
            entries: rows,
        }
    }

    pub fn det(&self) -> FieldScalar {
        let e = &self.entries;
        let m = |i: usize, j: usize| &e[i][j];
        let t1 = &(m(1, 1) * m(2, 2)) - &(m(1, 2) * m(2, 1));
        let t2 = &(m(1, 0) * m(2, 2)) - &(m(1, 2) * m(2, 0));
        let t3 = &(m(1, 0) * m(2, 1)) - &(m(1, 1) * m(2, 0));
        &(&(m(0, 0) * &t1) - &(m(0, 1) * &t2)) + &(m(0, 2) * &t3)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let z = FieldScalar::zero(&self.field);
        let mut out = [[z.clone(), z.clone(), z.clone()], [z.clone(), z.clone(), z.clone()], [z.clone(), z.clone(), z]];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = FieldScalar::zero(&self.field);
                for k in 0..3 {
                    acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                }
                out[i][j] = acc;
            }
        }
        Mat3 {
            field: self.field.clone(),
            entries: out,
        }
    }

    pub fn apply(&self, v: &[FieldScalar; 3]) -> [FieldScalar; 3] {
        let mut out = [
            FieldScalar::zero(&self.field),
            FieldScalar::zero(&self.field),
            FieldScalar::zero(&self.field),
        ];
        for (i, row) in self.entries.iter().enumerate() {
            let mut acc = FieldScalar::zero(&self.field);
            for (k, e) in row.iter().enumerate() {
                acc = &acc + &(e * &v[k]);
            }
            out[i] = acc;
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let inv = det.invert()?;
        let e = &self.entries;
        let cof = |i: usize, j: usize| {
            let (r0, r1) = match i {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (c0, c1) = match j {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let minor = &(&e[r0][c0] * &e[r1][c1]) - &(&e[r0][c1] * &e[r1][c0]);
            if (i + j) % 2 == 0 {
                minor
            } else {
                -&minor
            }
        };
        let mut out = Mat3::identity(&self.field);
        for i in 0..3 {
            for j in 0..3 {
                // adjugate transposes the cofactor matrix
                out.entries[i][j] = &cof(j, i) * &inv;
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Derivations
// ---------------------------------------------------------------------------

/// A derivation a d_x + b d_y + c d_z with homogeneous components of equal
/// degree; identified with the syzygy (a, b, c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub a: HomPoly,
    pub b: HomPoly,
    pub c: HomPoly,
}

impl Derivation {
    pub fn new(a: HomPoly, b: HomPoly, c: HomPoly) -> Self {
        assert_eq!(a.degree(), b.degree());
        assert_eq!(a.degree(), c.degree());
        Derivation { a, b, c }
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// The Euler derivation E = x d_x + y d_y + z d_z.
    pub fn euler(field: &Field) -> Self {
        Derivation {
            a: HomPoly::variable(field, 3, VAR_X),
            b: HomPoly::variable(field, 3, VAR_Y),
            c: HomPoly::variable(field, 3, VAR_Z),
        }
    }

    pub fn components(&self) -> [&HomPoly; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Applies the derivation to a polynomial: a g_x + b g_y + c g_z.
    pub fn apply(&self, g: &HomPoly) -> HomPoly {
        let gx = g.partial(VAR_X);
        let gy = g.partial(VAR_Y);
        let gz = g.partial(VAR_Z);
        let t1 = self.a.try_mul(&gx).expect("mul");
        let t2 = self.b.try_mul(&gy).expect("mul");
        let t3 = self.c.try_mul(&gz).expect("mul");
        t1.try_add(&t2).and_then(|s| s.try_add(&t3)).expect("add")
    }

    pub fn kills(&self, f: &HomPoly) -> bool {
        self.apply(f).is_zero()
    }

    /// Evaluates all three coefficients at a point representative.
    pub fn eval(&self, point: &[FieldScalar; 3]) -> [FieldScalar; 3] {
        [self.a.eval(point), self.b.eval(point), self.c.eval(point)]
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Derivation {
            a: self.a.try_add(&other.a)?,
            b: self.b.try_add(&other.b)?,
            c: self.c.try_add(&other.c)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(Derivation {
            a: self.a.try_sub(&other.a)?,
            b: self.b.try_sub(&other.b)?,
            c: self.c.try_sub(&other.c)?,
        })
    }

    /// Multiplies every component by a polynomial.
    pub fn mul_poly(&self, h: &HomPoly) -> Self {
        Derivation {
            a: self.a.try_mul(h).expect("mul"),
            b: self.b.try_mul(h).expect("mul"),
            c: self.c.try_mul(h).expect("mul"),
        }
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        Derivation {
            a: self.a.scale(c),
            b: self.b.scale(c),
            c: self.c.scale(c),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        Derivation {
            a: self.a.scale_rat(r),
            b: self.b.scale_rat(r),
            c: self.c.scale_rat(r),
        }
    }

    /// Concatenated coefficient vector on (S_k)^3, the ambient space used by
    /// the exact rank computations.
    pub fn coeff_vector(&self) -> Vec<FieldScalar> {
        let mut v = self.a.coeff_vector();
        v.extend(self.b.coeff_vector());
        v.extend(self.c.coeff_vector());
        v
    }

    /// Pushforward along the substitution v = M w: the result kills g o M
    /// whenever self kills g. Component j is sum_i Minv[j][i] (comp_i o M).
    pub fn change_coordinates(&self, m: &Mat3, m_inv: &Mat3) -> Result<Derivation> {
        let subs: Vec<HomPoly> = self
            .components()
            .iter()
            .map(|c| c.substitute_linear(m))
            .collect::<Result<_>>()?;
        let mut out: Vec<HomPoly> = Vec::with_capacity(3);
        for j in 0..3 {
            let mut acc = HomPoly::zero(self.field(), 3, self.degree());
            for (i, s) in subs.iter().enumerate() {
                acc = acc.try_add(&s.scale(&m_inv.entries[j][i]))?;
            }
            out.push(acc);
        }
        let mut it = out.into_iter();
        Ok(Derivation::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ))
    }

    pub fn proportional(&self, other: &Self) -> bool {
        // cross ratios on the first nonzero component must extend to all three
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let mine = [&self.a, &self.b, &self.c];
        let theirs = [&other.a, &other.b, &other.c];
        let mut ratio: Option<FieldScalar> = None;
        for (p, q) in mine.iter().zip(theirs.iter()) {
            match (p.is_zero(), q.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return false,
                (false, false) => {
                    match p.proportionality_constant(q) {
                        None => return false,
                        Some(c) => match &ratio {
                            None => ratio = Some(c),
                            Some(r) => {
                                if *r != c {
                                    return false;
                                }
                            }
                        },
                    }
                }
            }
        }
        true
    }
}

impl std::ops::Neg for &Derivation {
    type Output = Derivation;
    fn neg(self) -> Derivation {
        Derivation {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A derivation B d_y + C d_z on the line x = 0, with bivariate components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiDerivation {
    pub b: HomPoly,
    pub c: HomPoly,
}

impl BiDerivation {
    pub fn new(b: HomPoly, c: HomPoly) -> Self {
        assert_eq!(b.nvars(), 2);
        assert_eq!(c.nvars(), 2);
        assert_eq!(b.degree(), c.degree());
        BiDerivation { b, c }
    }

    pub fn degree(&self) -> usize {
        self.b.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    pub fn apply(&self, g: &HomPoly) -> HomPoly {
        let gy = g.partial(VAR_Y);
        let gz = g.partial(VAR_Z);
        self.b
            .try_mul(&gy)
            .and_then(|t| t.try_add(&self.c.try_mul(&gz)?))
            .expect("apply")
    }

    pub fn kills(&self, f: &HomPoly) -> bool {
        self.apply(f).is_zero()
    }

    pub fn coeff_vector(&self) -> Vec<FieldScalar> {
        let mut v = self.b.coeff_vector();
        v.extend(self.c.coeff_vector());
        v
    }

    pub fn proportional(&self, other: &Self) -> bool {
        let d1 = Derivation::new(
            HomPoly::zero(self.b.field(), 2, self.degree()).extend_to_3(),
            self.b.extend_to_3(),
            self.c.extend_to_3(),
        );
        let d2 = Derivation::new(
            HomPoly::zero(other.b.field(), 2, other.degree()).extend_to_3(),
            other.b.extend_to_3(),
            other.c.extend_to_3(),
        );
        d1.proportional(&d2)
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        BiDerivation {
            b: self.b.scale_rat(r),
            c: self.c.scale_rat(r),
        }
    }
}

impl fmt::Display for BiDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.b, self.c)
    }
}

/// A linear substitution with memoised monomial images, for transforming
/// many polynomials through the same coordinate change.
pub struct LinearSubstitution {
    images: [HomPoly; 3],
    m_inv: Mat3,
    cache: std::collections::HashMap<Exp, HomPoly>,
}

impl LinearSubstitution {
    pub fn new(m: &Mat3) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let field = &m.field;
        let images = [
            HomPoly::linear(field, m.entries[0].clone()),
            HomPoly::linear(field, m.entries[1].clone()),
            HomPoly::linear(field, m.entries[2].clone()),
        ];
        let m_inv = m.inverse()?;
        let mut cache = std::collections::HashMap::new();
        cache.insert([0u16, 0, 0], HomPoly::one(field, 3));
        Ok(LinearSubstitution {
            images,
            m_inv,
            cache,
        })
    }

    fn monomial_image(&mut self, e: Exp) -> HomPoly {
        if let Some(p) = self.cache.get(&e) {
            return p.clone();
        }
        let var = (0..3).find(|&v| e[v] > 0).expect("nonconstant monomial");
        let mut prev = e;
        prev[var] -= 1;
        let below = self.monomial_image(prev);
        let image = below.try_mul(&self.images[var]).expect("mul");
        self.cache.insert(e, image.clone());
        image
    }

    pub fn apply(&mut self, p: &HomPoly) -> HomPoly {
        assert_eq!(p.nvars(), 3);
        let field = p.field().clone();
        let mut acc = HomPoly::zero(&field, 3, p.degree());
        for (e, c) in p.terms.clone() {
            let image = self.monomial_image(e);
            acc = acc.try_add(&image.scale(&c)).expect("add");
        }
        acc
    }

    /// Pushforward of a derivation: component j of the image is
    /// sum_i Minv[j][i] (comp_i o M).
    pub fn push_derivation(&mut self, delta: &Derivation) -> Derivation {
        let field = delta.field().clone();
        let subs: Vec<HomPoly> = delta.components().iter().map(|c| self.apply(c)).collect();
        let mut out: Vec<HomPoly> = Vec::with_capacity(3);
        for j in 0..3 {
            let mut acc = HomPoly::zero(&field, 3, delta.degree());
            for (i, s) in subs.iter().enumerate() {
                acc = acc
                    .try_add(&s.scale(&self.m_inv.entries[j][i]))
                    .expect("add");
            }
            out.push(acc);
        }
        let mut it = out.into_iter();
        Derivation::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap())
    }
}

/// Determinant of the 3x3 matrix with rows (x, y, z), rho, rho2.
pub fn syzygy_determinant(rho: &Derivation, rho2: &Derivation) -> HomPoly {
    let field = rho.field();
    let x = HomPoly::variable(field, 3, VAR_X);
    let y = HomPoly::variable(field, 3, VAR_Y);
    let z = HomPoly::variable(field, 3, VAR_Z);
    let m = [
        [&x, &y, &z],
        [&rho.a, &rho.b, &rho.c],
        [&rho2.a, &rho2.b, &rho2.c],
    ];
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
        let p1 = m[r0][c0].try_mul(m[r1][c1]).expect("mul");
        let p2 = m[r0][c1].try_mul(m[r1][c0]).expect("mul");
        p1.try_sub(&p2).expect("sub")
    };
    let t0 = m[0][0].try_mul(&minor(1, 2, 1, 2)).expect("mul");
    let t1 = m[0][1].try_mul(&minor(1, 2, 0, 2)).expect("mul");
    let t2 = m[0][2].try_mul(&minor(1, 2, 0, 1)).expect("mul");
    t0.try_sub(&t1).and_then(|s| s.try_add(&t2)).expect("det")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, NumberFieldSpec};
    use proptest::prelude::*;

    fn q() -> Field {
        NumberFieldSpec::rationals()
    }

    fn var(field: &Field, v: usize) -> HomPoly {
        HomPoly::variable(field, 3, v)
    }

    #[test]
    fn monomial_bases() {
        assert_eq!(monomials(3, 0), vec![[0, 0, 0]]);
        assert_eq!(monomials(3, 1), vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(2, 4).len(), 5);
    }

    #[test]
    fn product_of_linear_forms() {
        let f = q();
        let x = var(&f, VAR_X);
        let y = var(&f, VAR_Y);
        let sum = x.try_add(&y).unwrap();
        let diff = x.try_sub(&y).unwrap();
        let prod = sum.try_mul(&diff).unwrap();
        let x2 = x.try_mul(&x).unwrap();
        let y2 = y.try_mul(&y).unwrap();
        assert_eq!(prod, x2.try_sub(&y2).unwrap());
    }

    #[test]
    fn multiplicative_identity() {
        let f = q();
        let p = var(&f, VAR_X).try_mul(&var(&f, VAR_Z)).unwrap();
        assert_eq!(p.try_mul(&HomPoly::one(&f, 3)).unwrap(), p);
    }

    #[test]
    fn bivariate_product() {
        let f = q();
        let y = HomPoly::variable(&f, 2, VAR_Y);
        let z = HomPoly::variable(&f, 2, VAR_Z);
        let p = y.try_sub(&z).unwrap().try_mul(&y.try_add(&z).unwrap()).unwrap();
        let expect = y.try_mul(&y).unwrap().try_sub(&z.try_mul(&z).unwrap()).unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn partials() {
        let f = q();
        let xyz = var(&f, VAR_X)
            .try_mul(&var(&f, VAR_Y))
            .unwrap()
            .try_mul(&var(&f, VAR_Z))
            .unwrap();
        let yz = var(&f, VAR_Y).try_mul(&var(&f, VAR_Z)).unwrap();
        assert_eq!(xyz.partial(VAR_X), yz);
        let x3 = var(&f, VAR_X).try_mul(&var(&f, VAR_X)).unwrap().try_mul(&var(&f, VAR_X)).unwrap();
        assert!(x3.partial(VAR_Y).is_zero());
    }

    #[test]
    fn euler_identity_on_xyz() {
        let f = q();
        let xyz = var(&f, VAR_X)
            .try_mul(&var(&f, VAR_Y))
            .unwrap()
            .try_mul(&var(&f, VAR_Z))
            .unwrap();
        let e = Derivation::euler(&f);
        assert_eq!(e.apply(&xyz), xyz.scale_rat(&rat(3)));
    }

    #[test]
    fn evaluation() {
        let f = q();
        let xyz = var(&f, VAR_X)
            .try_mul(&var(&f, VAR_Y))
            .unwrap()
            .try_mul(&var(&f, VAR_Z))
            .unwrap();
        let one = FieldScalar::one(&f);
        let zero = FieldScalar::zero(&f);
        assert!(xyz
            .eval(&[one.clone(), one.clone(), one.clone()])
            .is_one());
        assert!(xyz.eval(&[one.clone(), one.clone(), zero]).is_zero());
        let xmy = var(&f, VAR_X).try_sub(&var(&f, VAR_Y)).unwrap();
        assert!(xmy.eval(&[one.clone(), one.clone(), one]).is_zero());
    }

    #[test]
    fn exact_division() {
        let f = q();
        let x = var(&f, VAR_X);
        let y = var(&f, VAR_Y);
        let sum = x.try_add(&y).unwrap();
        let diff = x.try_sub(&y).unwrap();
        let prod = sum.try_mul(&diff).unwrap();
        assert_eq!(prod.exact_div(&diff).unwrap(), sum);
        assert_eq!(prod.exact_div(&prod).unwrap(), HomPoly::one(&f, 3));
        let xyz = x.try_mul(&y).unwrap().try_mul(&var(&f, VAR_Z)).unwrap();
        assert!(matches!(
            xyz.exact_div(&sum).unwrap_err(),
            Error::NotDivisible
        ));
    }

    #[test]
    fn substitution_identity_and_swap() {
        let f = q();
        let x = var(&f, VAR_X);
        let y = var(&f, VAR_Y);
        let p = x.try_sub(&y).unwrap();
        let id = Mat3::identity(&f);
        assert_eq!(p.substitute_linear(&id).unwrap(), p);
        // swap x and y
        let z = |v: i64| FieldScalar::from_int(&f, v);
        let swap = Mat3::from_rows(
            &f,
            [
                [z(0), z(1), z(0)],
                [z(1), z(0), z(0)],
                [z(0), z(0), z(1)],
            ],
        );
        let swapped = p.substitute_linear(&swap).unwrap();
        assert_eq!(swapped, y.try_sub(&x).unwrap());
    }

    #[test]
    fn singular_substitution_fails() {
        let f = q();
        let z = |v: i64| FieldScalar::from_int(&f, v);
        let m = Mat3::from_rows(
            &f,
            [
                [z(1), z(1), z(0)],
                [z(1), z(1), z(0)],
                [z(0), z(0), z(1)],
            ],
        );
        let p = var(&f, VAR_X);
        assert!(matches!(
            p.substitute_linear(&m).unwrap_err(),
            Error::SingularMatrix
        ));
    }

    #[test]
    fn binary_root_counts() {
        let f = q();
        let y = HomPoly::variable(&f, 2, VAR_Y);
        let z = HomPoly::variable(&f, 2, VAR_Z);
        let y2z = y.try_mul(&y).unwrap().try_mul(&z).unwrap();
        assert_eq!(y2z.binary_distinct_roots().unwrap(), 2);
        let ymz = y.try_sub(&z).unwrap();
        let yzymz = y.try_mul(&z).unwrap().try_mul(&ymz).unwrap();
        assert_eq!(yzymz.binary_distinct_roots().unwrap(), 3);
        let cube = ymz.try_mul(&ymz).unwrap().try_mul(&ymz).unwrap();
        assert_eq!(cube.binary_distinct_roots().unwrap(), 1);
    }

    #[test]
    fn determinant_with_repeated_row_vanishes() {
        let f = q();
        let rho = Derivation::new(var(&f, VAR_X), var(&f, VAR_Y), var(&f, VAR_Z));
        assert!(syzygy_determinant(&rho, &rho).is_zero());
        let m = HomPoly::variable(&f, 3, VAR_Y);
        let scaled = rho.mul_poly(&m);
        assert!(syzygy_determinant(&rho, &scaled).is_zero());
    }

    fn arb_poly(degree: usize) -> impl Strategy<Value = HomPoly> {
        let f = q();
        let monos = monomials(3, degree);
        proptest::collection::vec(-8i64..8, monos.len()).prop_map(move |coeffs| {
            HomPoly::from_terms(
                &f,
                3,
                degree,
                monos
                    .iter()
                    .zip(coeffs)
                    .map(|(e, c)| (*e, FieldScalar::from_int(&f, c))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn euler_relation(p in arb_poly(3)) {
            let e = Derivation::euler(p.field());
            prop_assert_eq!(e.apply(&p), p.scale_rat(&rat(3)));
        }

        #[test]
        fn division_inverts_multiplication(p in arb_poly(2), d in arb_poly(1)) {
            prop_assume!(!d.is_zero());
            let prod = p.try_mul(&d).unwrap();
            prop_assert_eq!(prod.exact_div(&d).unwrap(), p);
        }

        #[test]
        fn substitution_respects_products(p in arb_poly(2), r in arb_poly(1)) {
            let f = q();
            let s = |v: i64| FieldScalar::from_int(&f, v);
            let m = Mat3::from_rows(&f, [
                [s(1), s(2), s(0)],
                [s(0), s(1), s(3)],
                [s(1), s(0), s(1)],
            ]);
            prop_assume!(!m.det().is_zero());
            let lhs = p.try_mul(&r).unwrap().substitute_linear(&m).unwrap();
            let rhs = p.substitute_linear(&m).unwrap().try_mul(&r.substitute_linear(&m).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn substitution_composition(p in arb_poly(2)) {
            let f = q();
            let s = |v: i64| FieldScalar::from_int(&f, v);
            let m = Mat3::from_rows(&f, [
                [s(1), s(1), s(0)],
                [s(0), s(1), s(0)],
                [s(2), s(0), s(1)],
            ]);
            let n = Mat3::from_rows(&f, [
                [s(1), s(0), s(3)],
                [s(1), s(1), s(0)],
                [s(0), s(0), s(1)],
            ]);
            let lhs = p.substitute_linear(&m).unwrap().substitute_linear(&n).unwrap();
            let rhs = p.substitute_linear(&m.mul(&n)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
