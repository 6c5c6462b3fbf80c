//! Exact scalar arithmetic over Q and over number fields K = Q[t]/(m(t)).
//!
//! Every coefficient in the toolkit is a [`FieldScalar`]: a residue
//! polynomial in `t` with rational coefficients, reduced modulo a monic
//! modulus `m(t)`. Degree-one moduli present Q itself; cyclotomic moduli
//! give the fields Q(zeta_n) needed for monomial and Hessian arrangements.
//!
//! Values are immutable after construction and safe to share across threads.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the underlying representation.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, used for modulus arithmetic only.
// Coefficient lists are low-degree-first and trimmed of trailing zeros.
// ---------------------------------------------------------------------------

fn uni_trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn uni_deg(v: &[Rational]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn uni_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    uni_trim(out)
}

fn uni_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    uni_trim(out)
}

/// Quotient and remainder of a by b, with b nonzero.
fn uni_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = uni_deg(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem: Vec<Rational> = a.to_vec();
    rem = uni_trim(rem);
    let mut quo = vec![Rational::zero(); a.len().saturating_sub(db)];
    while let Some(dr) = uni_deg(&rem) {
        if dr < db {
            break;
        }
        let factor = &rem[dr] / &lead;
        let shift = dr - db;
        quo[shift] = factor.clone();
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                let t = &factor * cb;
                rem[j + shift] -= t;
            }
        }
        rem = uni_trim(rem);
    }
    (uni_trim(quo), rem)
}

/// Monic gcd together with a Bezout cofactor u such that u*a = g mod b.
fn uni_half_xgcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    // Invariants: r0 = u0*a mod m, r1 = u1*a mod m for the original modulus m=b.
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut u0 = vec![Rational::one()];
    let mut u1: Vec<Rational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = uni_divrem(&r0, &r1);
        let u = uni_sub(&u0, &uni_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    (r0, u0)
}

fn uni_to_string(p: &[Rational]) -> String {
    render_residue(p)
}

// ---------------------------------------------------------------------------
// Number field specification
// ---------------------------------------------------------------------------

/// A number field K = Q[t]/(m(t)) presented by a monic modulus of degree >= 1.
///
/// Degree one means K = Q. Irreducibility of a user-supplied modulus is not
/// verified up front; a reducible modulus is detected lazily when an
/// inversion meets a nonconstant gcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberFieldSpec {
    /// Dense coefficients of m(t), low degree first; leading coefficient 1.
    modulus: Vec<Rational>,
    /// Residues of t^(deg), t^(deg+1), ..., t^(2*deg-2) modulo m(t),
    /// precomputed for reduction after products.
    reduction: Vec<Vec<Rational>>,
}

pub type Field = Arc<NumberFieldSpec>;

impl NumberFieldSpec {
    pub fn new(modulus: Vec<Rational>) -> Result<Field> {
        let modulus = uni_trim(modulus);
        let deg = match uni_deg(&modulus) {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::Parse("modulus must have degree >= 1".into())),
        };
        if !modulus[deg].is_one() {
            return Err(Error::Parse("modulus must be monic".into()));
        }
        let mut reduction = Vec::with_capacity(deg.saturating_sub(1));
        // t^deg = -(m - t^deg); higher powers by shifting and re-reducing.
        let mut cur: Vec<Rational> = modulus[..deg].iter().map(|c| -c.clone()).collect();
        cur = uni_trim(cur);
        for _ in 0..deg.saturating_sub(1) {
            reduction.push({
                let mut v = cur.clone();
                v.resize(deg, Rational::zero());
                v
            });
            // multiply by t, reduce the possible t^deg term
            let mut next = vec![Rational::zero(); deg + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            let top = next.pop().unwrap();
            if !top.is_zero() {
                for (i, c) in modulus[..deg].iter().enumerate() {
                    let t = &top * c;
                    next[i] -= t;
                }
            }
            cur = uni_trim(next);
        }
        Ok(Arc::new(NumberFieldSpec {
            modulus,
            reduction,
        }))
    }

    /// The rational field Q, presented as Q[t]/(t).
    pub fn rationals() -> Field {
        NumberFieldSpec::new(vec![Rational::zero(), Rational::one()]).unwrap()
    }

    /// The n-th cyclotomic field Q(zeta_n), with modulus Phi_n computed by
    /// the recursive division formula Phi_n(t) = (t^n - 1) / prod_{d|n, d<n} Phi_d(t).
    pub fn cyclotomic(n: usize) -> Field {
        assert!(n >= 1, "cyclotomic index must be positive");
        NumberFieldSpec::new(cyclotomic_polynomial(n)).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        uni_to_string(&self.modulus)
    }
}

/// Dense coefficients of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: usize) -> Vec<Rational> {
    assert!(n >= 1);
    if n == 1 {
        return vec![-Rational::one(), Rational::one()];
    }
    // t^n - 1
    let mut num = vec![Rational::zero(); n + 1];
    num[0] = -Rational::one();
    num[n] = Rational::one();
    let mut den = vec![Rational::one()];
    for d in 1..n {
        if n % d == 0 {
            den = uni_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    let (q, r) = uni_divrem(&num, &den);
    debug_assert!(r.is_empty(), "cyclotomic division must be exact");
    q
}

// ---------------------------------------------------------------------------
// Field elements
// ---------------------------------------------------------------------------

/// An element of a number field: a residue polynomial in t of degree < deg(m).
#[derive(Debug, Clone)]
pub struct FieldScalar {
    field: Field,
    /// Exactly deg(m) coordinates, low degree first.
    coords: Vec<Rational>,
}

impl PartialEq for FieldScalar {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}
impl Eq for FieldScalar {}

impl std::hash::Hash for FieldScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for FieldScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FieldScalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl FieldScalar {
    pub fn from_residue(field: &Field, coords: Vec<Rational>) -> Self {
        let deg = field.degree();
        let mut coords = uni_trim(coords);
        if coords.len() > deg {
            let (_, r) = uni_divrem(&coords, &field.modulus);
            coords = r;
        }
        coords.resize(deg, Rational::zero());
        FieldScalar {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_rational(field: &Field, value: Rational) -> Self {
        Self::from_residue(field, vec![value])
    }

    pub fn from_int(field: &Field, value: i64) -> Self {
        Self::from_rational(field, rat(value))
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: &Field) -> Self {
        Self::from_int(field, 1)
    }

    /// The residue class of t, a primitive root when the modulus is Phi_n.
    pub fn generator(field: &Field) -> Self {
        Self::from_residue(field, vec![Rational::zero(), Rational::one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// As a rational number, when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.modulus == other.field.modulus
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::FieldMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldScalar {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::FieldMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldScalar {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::FieldMismatch);
        }
        let deg = self.field.degree();
        if deg == 1 {
            return Ok(FieldScalar {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &other.coords[0]],
            });
        }
        // schoolbook product, then fold powers >= deg through the table
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut coords: Vec<Rational> = prod[..deg].to_vec();
        for (k, c) in prod[deg..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, r) in self.field.reduction[k].iter().enumerate() {
                if !r.is_zero() {
                    coords[i] += c * r;
                }
            }
        }
        Ok(FieldScalar {
            field: self.field.clone(),
            coords,
        })
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on
    /// (residue, modulus). A nonconstant gcd witnesses a reducible modulus.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = uni_trim(self.coords.clone());
        let (g, u) = uni_half_xgcd(&a, &self.field.modulus);
        let dg = uni_deg(&g).expect("gcd of nonzero inputs");
        if dg > 0 {
            return Err(Error::ReducibleModulus(dg));
        }
        let scale = g[0].recip();
        let coords = u.iter().map(|c| c * &scale).collect();
        Ok(Self::from_residue(&self.field, coords))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.invert()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldScalar {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// A size heuristic used for pivot selection: total bit length of all
    /// numerators and denominators.
    pub fn weight(&self) -> u64 {
        self.coords
            .iter()
            .map(|c| c.numer().bits() + c.denom().bits())
            .sum()
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: &FieldScalar) -> FieldScalar {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl std::ops::$trait for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$checked(&rhs).expect("field mismatch")
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Scalar literal syntax: rationals as "p/q" or "p", field elements as
// polynomials in t such as "1/2*t^2 - 3".
// ---------------------------------------------------------------------------

fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_residue(coords: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in coords.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign_neg = c.is_negative();
        if out.is_empty() {
            if sign_neg {
                out.push('-');
            }
        } else if sign_neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let tpart = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if k == 0 {
            out.push_str(&render_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&tpart);
        } else {
            out.push_str(&render_rational(&mag));
            out.push('*');
            out.push_str(&tpart);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_residue(&self.coords))
    }
}

/// Number of nonzero residue coordinates, used by renderers to decide on
/// parenthesisation.
pub fn residue_terms(s: &FieldScalar) -> usize {
    s.coords().iter().filter(|c| !c.is_zero()).count()
}

/// Parses the scalar literal syntax into residue coordinates (any degree;
/// the caller reduces into its field).
pub fn parse_residue(input: &str) -> Result<Vec<Rational>> {
    let mut coords: Vec<Rational> = Vec::new();
    let s: Vec<char> = input.chars().collect();
    let mut i = 0usize;
    let n = s.len();
    let err = |msg: &str| Error::Parse(format!("{msg} in scalar literal {input:?}"));

    fn skip_ws(s: &[char], i: &mut usize) {
        while *i < s.len() && s[*i].is_whitespace() {
            *i += 1;
        }
    }
    fn parse_uint(s: &[char], i: &mut usize) -> Option<BigInt> {
        let start = *i;
        while *i < s.len() && s[*i].is_ascii_digit() {
            *i += 1;
        }
        if *i == start {
            return None;
        }
        let digits: String = s[start..*i].iter().collect();
        digits.parse::<BigInt>().ok()
    }

    skip_ws(&s, &mut i);
    if i == n {
        return Err(err("empty input"));
    }
    let mut first = true;
    while i < n {
        skip_ws(&s, &mut i);
        if i == n {
            break;
        }
        let mut sign = 1i64;
        if s[i] == '+' || s[i] == '-' {
            if s[i] == '-' {
                sign = -1;
            }
            i += 1;
            skip_ws(&s, &mut i);
        } else if !first {
            return Err(err("expected '+' or '-' between terms"));
        }
        first = false;
        // coefficient
        let mut coef = Rational::from_integer(BigInt::from(sign));
        let mut saw_number = false;
        if let Some(numer) = parse_uint(&s, &mut i) {
            saw_number = true;
            let mut value = Rational::from_integer(numer);
            skip_ws(&s, &mut i);
            if i < n && s[i] == '/' {
                i += 1;
                skip_ws(&s, &mut i);
                let denom = parse_uint(&s, &mut i).ok_or_else(|| err("expected denominator"))?;
                if denom.is_zero() {
                    return Err(err("zero denominator"));
                }
                value = Rational::new(value.numer().clone(), denom);
            }
            coef *= value;
        }
        skip_ws(&s, &mut i);
        let mut power = 0usize;
        let mut saw_t = false;
        if i < n && s[i] == '*' {
            if !saw_number {
                return Err(err("unexpected '*'"));
            }
            i += 1;
            skip_ws(&s, &mut i);
        }
        if i < n && s[i] == 't' {
            saw_t = true;
            power = 1;
            i += 1;
            skip_ws(&s, &mut i);
            if i < n && s[i] == '^' {
                i += 1;
                skip_ws(&s, &mut i);
                let e = parse_uint(&s, &mut i).ok_or_else(|| err("expected exponent"))?;
                power = e
                    .try_into()
                    .map_err(|_| err("exponent out of range"))?;
            }
        }
        if !saw_number && !saw_t {
            return Err(err("expected a term"));
        }
        if coords.len() <= power {
            coords.resize(power + 1, Rational::zero());
        }
        coords[power] += coef;
        skip_ws(&s, &mut i);
    }
    Ok(coords)
}

/// Parses a scalar literal into an element of the given field.
pub fn parse_scalar(field: &Field, input: &str) -> Result<FieldScalar> {
    Ok(FieldScalar::from_residue(field, parse_residue(input)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Field {
        NumberFieldSpec::rationals()
    }

    fn zeta3() -> Field {
        NumberFieldSpec::cyclotomic(3)
    }

    #[test]
    fn cyclotomic_base_case_is_t_minus_one() {
        assert_eq!(cyclotomic_polynomial(1), vec![rat(-1), rat(1)]);
    }

    #[test]
    fn cyclotomic_three() {
        // divide t^3 - 1 by Phi_1 = t - 1
        assert_eq!(cyclotomic_polynomial(3), vec![rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn cyclotomic_four() {
        // (t^4 - 1)/((t - 1)(t + 1))
        assert_eq!(cyclotomic_polynomial(4), vec![rat(1), rat(0), rat(1)]);
    }

    #[test]
    fn cyclotomic_roots_have_exact_order() {
        // t^n = 1 mod Phi_n, while t^k != 1 for proper divisors k of n
        for n in [1usize, 2, 3, 4, 5, 6, 8, 9, 12] {
            let field = NumberFieldSpec::cyclotomic(n);
            let t = FieldScalar::generator(&field);
            assert!(t.pow(n).is_one(), "t^{n} must be 1 mod Phi_{n}");
            for k in 1..n {
                if n % k == 0 {
                    assert!(!t.pow(k).is_one(), "t^{k} must not be 1 mod Phi_{n}");
                }
            }
        }
    }

    #[test]
    fn zeta3_square_reduces() {
        let field = zeta3();
        let t = FieldScalar::generator(&field);
        let sq = &t * &t;
        // t^2 = -t - 1 mod t^2 + t + 1
        assert_eq!(
            sq.coords(),
            &[rat(-1), rat(-1)],
            "t*t must reduce to -t - 1"
        );
    }

    #[test]
    fn rational_product() {
        let field = q();
        let a = FieldScalar::from_rational(&field, rat_frac(2, 3));
        let b = FieldScalar::from_rational(&field, rat_frac(3, 4));
        assert_eq!(&a * &b, FieldScalar::from_rational(&field, rat_frac(1, 2)));
    }

    #[test]
    fn additive_identity() {
        let field = zeta3();
        let x = FieldScalar::from_residue(&field, vec![rat_frac(5, 7), rat(3)]);
        let z = FieldScalar::zero(&field);
        assert_eq!(x.try_add(&z).unwrap(), x);
    }

    #[test]
    fn invert_unit() {
        let field = q();
        let one = FieldScalar::one(&field);
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn invert_generator_in_zeta3() {
        let field = zeta3();
        let t = FieldScalar::generator(&field);
        let inv = t.invert().unwrap();
        // t*(-t - 1) = 1 mod t^2 + t + 1
        assert_eq!(inv.coords(), &[rat(-1), rat(-1)]);
        assert!((&t * &inv).is_one());
    }

    #[test]
    fn invert_zero_fails() {
        let field = zeta3();
        let err = FieldScalar::zero(&field).invert().unwrap_err();
        assert!(matches!(err, Error::DivisionByZero));
        assert_eq!(err.to_string(), "division by zero");
    }

    #[test]
    fn reducible_modulus_is_witnessed() {
        // t^2 - 1 = (t-1)(t+1); inverting t - 1 must fail with the witness
        let field = NumberFieldSpec::new(vec![rat(-1), rat(0), rat(1)]).unwrap();
        let a = FieldScalar::from_residue(&field, vec![rat(-1), rat(1)]);
        let err = a.invert().unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(1)));
    }

    #[test]
    fn mismatched_fields_error() {
        let a = FieldScalar::one(&q());
        let b = FieldScalar::one(&zeta3());
        let err = a.try_add(&b).unwrap_err();
        assert_eq!(err.to_string(), "field mismatch");
    }

    #[test]
    fn literal_round_trip() {
        let field = zeta3();
        for text in ["1/2*t - 3", "t", "-t", "0", "5", "-2/7", "t + 1"] {
            let v = parse_scalar(&field, text).unwrap();
            let back = parse_scalar(&field, &v.to_string()).unwrap();
            assert_eq!(v, back, "round trip failed for {text}");
        }
    }

    #[test]
    fn literal_parse_values() {
        let field = NumberFieldSpec::cyclotomic(5);
        let v = parse_scalar(&field, "1/2*t^2 - 3").unwrap();
        assert_eq!(v.coords()[0], rat(-3));
        assert_eq!(v.coords()[1], rat(0));
        assert_eq!(v.coords()[2], rat_frac(1, 2));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| rat_frac(n, d))
    }

    fn arb_zeta3_scalar() -> impl Strategy<Value = FieldScalar> {
        (arb_rational(), arb_rational()).prop_map(|(a, b)| {
            FieldScalar::from_residue(&NumberFieldSpec::cyclotomic(3), vec![a, b])
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms_hold(a in arb_zeta3_scalar(), b in arb_zeta3_scalar(), c in arb_zeta3_scalar()) {
            let ab_c = &(&a + &b) + &c;
            let a_bc = &a + &(&b + &c);
            prop_assert_eq!(&ab_c, &a_bc);
            let m_ab_c = &(&a * &b) * &c;
            let m_a_bc = &a * &(&b * &c);
            prop_assert_eq!(&m_ab_c, &m_a_bc);
            let dist_l = &a * &(&b + &c);
            let dist_r = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(&dist_l, &dist_r);
            prop_assert_eq!(&(&a * &b), &(&b * &a));
            if !a.is_zero() {
                let inv = a.invert().unwrap();
                prop_assert!((&a * &inv).is_one());
            }
        }
    }
}
