//! Line arrangements in the projective plane, their intersection lattice,
//! and the purely combinatorial invariants derived from it.
//!
//! Points and forms are canonicalised so the first nonzero coordinate is 1;
//! incidence tests are exact zero tests, never approximate.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::HomPoly;
use crate::scalars::{parse_residue, parse_scalar, Field, FieldScalar, NumberFieldSpec};

/// A projective line alpha*x + beta*y + gamma*z = 0 in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: [FieldScalar; 3],
}

impl LinearForm {
    pub fn new(coeffs: [FieldScalar; 3]) -> Result<Self> {
        canonicalize(coeffs).map(|coeffs| LinearForm { coeffs })
    }

    pub fn from_ints(field: &Field, a: i64, b: i64, c: i64) -> Self {
        Self::new([
            FieldScalar::from_int(field, a),
            FieldScalar::from_int(field, b),
            FieldScalar::from_int(field, c),
        ])
        .expect("nonzero coefficients")
    }

    pub fn coeffs(&self) -> &[FieldScalar; 3] {
        &self.coeffs
    }

    pub fn field(&self) -> &Field {
        self.coeffs[0].field()
    }

    /// Evaluates the form at a point representative.
    pub fn eval(&self, p: &ProjPoint) -> FieldScalar {
        let mut acc = FieldScalar::zero(self.field());
        for (c, u) in self.coeffs.iter().zip(p.coords()) {
            acc = &acc + &(c * u);
        }
        acc
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn to_poly(&self) -> HomPoly {
        HomPoly::linear(self.field(), self.coeffs.clone())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// A point of the projective plane in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [FieldScalar; 3],
}

impl ProjPoint {
    pub fn new(coords: [FieldScalar; 3]) -> Result<Self> {
        canonicalize(coords).map(|coords| ProjPoint { coords })
    }

    pub fn from_ints(field: &Field, u: i64, v: i64, w: i64) -> Self {
        Self::new([
            FieldScalar::from_int(field, u),
            FieldScalar::from_int(field, v),
            FieldScalar::from_int(field, w),
        ])
        .expect("nonzero coordinates")
    }

    pub fn coords(&self) -> &[FieldScalar; 3] {
        &self.coords
    }

    pub fn field(&self) -> &Field {
        self.coords[0].field()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

fn canonicalize(mut v: [FieldScalar; 3]) -> Result<[FieldScalar; 3]> {
    let lead = v.iter().position(|c| !c.is_zero());
    let Some(lead) = lead else {
        return Err(Error::Parse("zero coordinate vector".into()));
    };
    let inv = v[lead].invert()?;
    for c in v.iter_mut() {
        if !c.is_zero() {
            *c = &*c * &inv;
        }
    }
    Ok(v)
}

fn cross(a: &[FieldScalar; 3], b: &[FieldScalar; 3]) -> [FieldScalar; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// Intersection point of two distinct projective lines.
pub fn intersect(l1: &LinearForm, l2: &LinearForm) -> Result<ProjPoint> {
    let c = cross(&l1.coeffs, &l2.coeffs);
    ProjPoint::new(c).map_err(|_| Error::ProportionalForms)
}

/// The line joining two distinct points.
pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<LinearForm> {
    let c = cross(&p.coords, &q.coords);
    LinearForm::new(c).map_err(|_| Error::IdenticalPoints)
}

/// A finite set of distinct projective lines; the defining polynomial is
/// the squarefree product of the linear forms.
#[derive(Debug, Clone)]
pub struct Arrangement {
    field: Field,
    lines: Vec<LinearForm>,
    poly: std::sync::OnceLock<HomPoly>,
}

impl PartialEq for Arrangement {
    fn eq(&self, other: &Self) -> bool {
        self.lines == other.lines
    }
}
impl Eq for Arrangement {}

impl Arrangement {
    pub fn new(field: &Field, lines: Vec<LinearForm>) -> Result<Self> {
        if lines.len() < 2 {
            return Err(Error::Parse("an arrangement needs at least 2 lines".into()));
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if lines[i] == lines[j] {
                    return Err(Error::Parse(format!(
                        "duplicate line {} (positions {i} and {j})",
                        lines[i]
                    )));
                }
            }
        }
        Ok(Arrangement {
            field: field.clone(),
            lines,
            poly: std::sync::OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lines(&self) -> &[LinearForm] {
        &self.lines
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn line_index(&self, l: &LinearForm) -> Option<usize> {
        self.lines.iter().position(|m| m == l)
    }

    pub fn contains_line(&self, l: &LinearForm) -> bool {
        self.line_index(l).is_some()
    }

    /// Product of the defining linear forms (memoised).
    pub fn defining_poly(&self) -> HomPoly {
        self.poly
            .get_or_init(|| {
                let mut f = HomPoly::one(&self.field, 3);
                for l in &self.lines {
                    f = f.try_mul(&l.to_poly()).expect("mul");
                }
                f
            })
            .clone()
    }

    /// Multiplicity of an arbitrary point: the number of lines through it.
    pub fn multiplicity(&self, p: &ProjPoint) -> usize {
        self.lines.iter().filter(|l| l.contains(p)).count()
    }

    /// All pairwise intersections grouped by canonical point.
    pub fn lattice(&self) -> Lattice {
        let d = self.lines.len();
        let mut groups: HashMap<ProjPoint, Vec<usize>> = HashMap::new();
        for i in 0..d {
            for j in i + 1..d {
                let p = intersect(&self.lines[i], &self.lines[j])
                    .expect("distinct lines always meet");
                let entry = groups.entry(p).or_default();
                for k in [i, j] {
                    if !entry.contains(&k) {
                        entry.push(k);
                    }
                }
            }
        }
        let mut points: Vec<LatticePoint> = groups
            .into_iter()
            .map(|(point, mut incident)| {
                incident.sort_unstable();
                LatticePoint {
                    multiplicity: incident.len(),
                    point,
                    incident,
                }
            })
            .collect();
        points.sort_by(|a, b| a.point.cmp(&b.point));
        let lat = Lattice { points };
        // sum_p C(m_p, 2) = C(d, 2): every pair of lines meets in exactly one point
        let pair_total: usize = lat.points.iter().map(|p| binom2(p.multiplicity)).sum();
        assert_eq!(
            pair_total,
            binom2(d),
            "lattice pair count must equal C(d,2)"
        );
        lat
    }

    /// True when all lines pass through a single point.
    pub fn is_pencil(&self) -> bool {
        self.lattice().points.len() == 1
    }

    /// The splitting f = f1p * f2p into lines through / avoiding the point.
    pub fn split_at(&self, p: &LatticePoint) -> Result<(HomPoly, HomPoly)> {
        if p.multiplicity == self.lines.len() {
            return Err(Error::Pencil(p.point.to_string()));
        }
        let mut through = HomPoly::one(&self.field, 3);
        let mut avoiding = HomPoly::one(&self.field, 3);
        for (i, l) in self.lines.iter().enumerate() {
            let target = if p.incident.contains(&i) {
                &mut through
            } else {
                &mut avoiding
            };
            *target = target.try_mul(&l.to_poly()).expect("mul");
        }
        Ok((through, avoiding))
    }

    /// True when the joining line of two distinct points belongs to the
    /// arrangement.
    pub fn connected(&self, p: &ProjPoint, q: &ProjPoint) -> Result<bool> {
        let join = line_through(p, q)?;
        Ok(self.contains_line(&join))
    }
}

/// An intersection point together with its multiplicity and incident lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePoint {
    pub point: ProjPoint,
    pub multiplicity: usize,
    pub incident: Vec<usize>,
}

/// The multiset of intersection points of an arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    pub points: Vec<LatticePoint>,
}

impl Lattice {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn find(&self, p: &ProjPoint) -> Option<usize> {
        self.points.iter().position(|lp| &lp.point == p)
    }

    /// Indices of lattice points lying on the given line.
    pub fn on_line(&self, line: usize) -> Vec<usize> {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, lp)| lp.incident.contains(&line))
            .map(|(i, _)| i)
            .collect()
    }

    /// Maximal multiplicity m(A).
    pub fn max_multiplicity(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).max().unwrap_or(0)
    }

    /// Global Tjurina number: sum of (m_p - 1)^2.
    pub fn tjurina(&self) -> usize {
        self.points
            .iter()
            .map(|p| (p.multiplicity - 1) * (p.multiplicity - 1))
            .sum()
    }
}

pub fn binom2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// tau(A), the global Tjurina number.
pub fn tau(lattice: &Lattice) -> usize {
    lattice.tjurina()
}

/// Lattice points connected to every other lattice point by a line of A.
pub fn modular_points(arr: &Arrangement, lattice: &Lattice) -> Result<Vec<usize>> {
    if arr.num_lines() < 3 {
        return Err(Error::HypothesisNotMet("need at least 3 lines".into()));
    }
    if lattice.len() == 1 {
        return Err(Error::Pencil(lattice.points[0].point.to_string()));
    }
    let mut out = Vec::new();
    'outer: for (i, p) in lattice.points.iter().enumerate() {
        for (j, q) in lattice.points.iter().enumerate() {
            if i == j {
                continue;
            }
            if !arr.connected(&p.point, &q.point)? {
                continue 'outer;
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// Rank-3 criterion: supersolvable iff some lattice point is modular.
pub fn is_supersolvable(arr: &Arrangement, lattice: &Lattice) -> Result<bool> {
    Ok(!modular_points(arr, lattice)?.is_empty())
}

/// Euler number of the complement, computed by two independent formulas
/// which must agree: 3 - (2 - (d-1)(d-2) + tau) and 3 - (2d - sum (m_p - 1)).
pub fn euler_complement(arr: &Arrangement, lattice: &Lattice) -> Result<i64> {
    let d = arr.num_lines() as i64;
    let t = lattice.tjurina() as i64;
    let by_tjurina = 3 - (2 - (d - 1) * (d - 2) + t);
    let sum_m1: i64 = lattice
        .points
        .iter()
        .map(|p| p.multiplicity as i64 - 1)
        .sum();
    let by_strata = 3 - (2 * d - sum_m1);
    if by_tjurina != by_strata {
        return Err(Error::Internal(format!(
            "Euler formulas disagree: {by_tjurina} vs {by_strata}"
        )));
    }
    Ok(by_tjurina)
}

// ---------------------------------------------------------------------------
// Text file format:
//   line 1: `field: <monic polynomial in t>`
//   then one line per linear form: `alpha, beta, gamma`
//   `#` starts a comment.
// ---------------------------------------------------------------------------

pub fn parse_arrangement(input: &str) -> Result<Arrangement> {
    let mut field: Option<Field> = None;
    let mut lines: Vec<LinearForm> = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        if field.is_none() {
            let Some(modulus) = content.strip_prefix("field:") else {
                return Err(Error::Parse(format!(
                    "line {}: expected `field: <monic polynomial in t>`",
                    lineno + 1
                )));
            };
            field = Some(NumberFieldSpec::new(parse_residue(modulus.trim())?)?);
            continue;
        }
        let f = field.as_ref().unwrap();
        let parts: Vec<&str> = content.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "line {}: expected three comma-separated coefficients",
                lineno + 1
            )));
        }
        let coeffs = [
            parse_scalar(f, parts[0])?,
            parse_scalar(f, parts[1])?,
            parse_scalar(f, parts[2])?,
        ];
        lines.push(LinearForm::new(coeffs).map_err(|_| {
            Error::Parse(format!("line {}: zero linear form", lineno + 1))
        })?);
    }
    let field = field.ok_or_else(|| Error::Parse("missing field line".into()))?;
    Arrangement::new(&field, lines)
}

pub fn render_arrangement(arr: &Arrangement) -> String {
    let mut out = format!("field: {}\n", arr.field().modulus_string());
    for l in arr.lines() {
        let c = l.coeffs();
        out.push_str(&format!("{}, {}, {}\n", c[0], c[1], c[2]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Mat3};

    fn q() -> Field {
        NumberFieldSpec::rationals()
    }

    pub fn triangle() -> Arrangement {
        let f = q();
        Arrangement::new(
            &f,
            vec![
                LinearForm::from_ints(&f, 1, 0, 0),
                LinearForm::from_ints(&f, 0, 1, 0),
                LinearForm::from_ints(&f, 0, 0, 1),
            ],
        )
        .unwrap()
    }

    pub fn full_f3() -> Arrangement {
        let f = q();
        Arrangement::new(
            &f,
            vec![
                LinearForm::from_ints(&f, 1, 0, 0),
                LinearForm::from_ints(&f, 0, 1, 0),
                LinearForm::from_ints(&f, 0, 0, 1),
                LinearForm::from_ints(&f, 1, -1, 0),
                LinearForm::from_ints(&f, 0, 1, -1),
                LinearForm::from_ints(&f, 1, 0, -1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn intersections() {
        let f = q();
        let x = LinearForm::from_ints(&f, 1, 0, 0);
        let y = LinearForm::from_ints(&f, 0, 1, 0);
        assert_eq!(intersect(&x, &y).unwrap(), ProjPoint::from_ints(&f, 0, 0, 1));
        let xmy = LinearForm::from_ints(&f, 1, -1, 0);
        let ymz = LinearForm::from_ints(&f, 0, 1, -1);
        assert_eq!(
            intersect(&xmy, &ymz).unwrap(),
            ProjPoint::from_ints(&f, 1, 1, 1)
        );
        assert!(matches!(
            intersect(&x, &x).unwrap_err(),
            Error::ProportionalForms
        ));
    }

    #[test]
    fn triangle_lattice() {
        let arr = triangle();
        let lat = arr.lattice();
        assert_eq!(lat.len(), 3);
        assert!(lat.points.iter().all(|p| p.multiplicity == 2));
        assert_eq!(tau(&lat), 3);
    }

    #[test]
    fn f3_lattice_has_four_triples_and_three_doubles() {
        let arr = full_f3();
        let lat = arr.lattice();
        let triples = lat.points.iter().filter(|p| p.multiplicity == 3).count();
        let doubles = lat.points.iter().filter(|p| p.multiplicity == 2).count();
        assert_eq!((triples, doubles), (4, 3));
        assert_eq!(tau(&lat), 19);
    }

    #[test]
    fn defining_polynomials() {
        let arr = triangle();
        let f = arr.defining_poly();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.num_terms(), 1);
        assert_eq!(full_f3().defining_poly().degree(), 6);
    }

    #[test]
    fn split_at_point() {
        let arr = triangle();
        let lat = arr.lattice();
        let field = q();
        let p = &lat.points[lat.find(&ProjPoint::from_ints(&field, 1, 0, 0)).unwrap()];
        let (f1, f2) = arr.split_at(p).unwrap();
        assert_eq!(f1.degree(), 2); // yz
        assert_eq!(f2.degree(), 1); // x
        let f = arr.defining_poly();
        assert_eq!(f1.try_mul(&f2).unwrap(), f);
    }

    #[test]
    fn split_at_pencil_point_fails() {
        let f = q();
        let pencil = Arrangement::new(
            &f,
            vec![
                LinearForm::from_ints(&f, 1, 0, 0),
                LinearForm::from_ints(&f, 0, 1, 0),
                LinearForm::from_ints(&f, 1, -1, 0),
            ],
        )
        .unwrap();
        let lat = pencil.lattice();
        assert_eq!(lat.len(), 1);
        assert!(matches!(
            pencil.split_at(&lat.points[0]).unwrap_err(),
            Error::Pencil(_)
        ));
    }

    #[test]
    fn connectivity_in_f3() {
        let arr = full_f3();
        let field = q();
        let p = ProjPoint::from_ints(&field, 1, 0, 0);
        let q2 = ProjPoint::from_ints(&field, 0, 1, 0);
        assert!(arr.connected(&p, &q2).unwrap());
        let a = ProjPoint::from_ints(&field, 1, 1, 0);
        let b = ProjPoint::from_ints(&field, 1, 0, 1);
        assert!(!arr.connected(&a, &b).unwrap());
        // the pair from the worked double-point example
        let c = ProjPoint::from_ints(&field, 0, 1, 1);
        let e = ProjPoint::from_ints(&field, 1, 0, 1);
        assert!(!arr.connected(&c, &e).unwrap());
        assert!(matches!(
            arr.connected(&p, &p).unwrap_err(),
            Error::IdenticalPoints
        ));
    }

    #[test]
    fn f3_triple_points_are_modular() {
        let arr = full_f3();
        let lat = arr.lattice();
        let mods = modular_points(&arr, &lat).unwrap();
        let mod_mults: Vec<usize> = mods.iter().map(|&i| lat.points[i].multiplicity).collect();
        assert_eq!(mods.len(), 4);
        assert!(mod_mults.iter().all(|&m| m == 3));
        assert!(is_supersolvable(&arr, &lat).unwrap());
    }

    #[test]
    fn generic_four_lines_not_supersolvable() {
        let f = q();
        let arr = Arrangement::new(
            &f,
            vec![
                LinearForm::from_ints(&f, 1, 0, 0),
                LinearForm::from_ints(&f, 0, 1, 0),
                LinearForm::from_ints(&f, 0, 0, 1),
                LinearForm::from_ints(&f, 1, 1, 1),
            ],
        )
        .unwrap();
        let lat = arr.lattice();
        assert_eq!(lat.max_multiplicity(), 2);
        assert!(!is_supersolvable(&arr, &lat).unwrap());
    }

    #[test]
    fn euler_complement_values() {
        let arr = triangle();
        assert_eq!(euler_complement(&arr, &arr.lattice()).unwrap(), 0);
        let arr = full_f3();
        assert_eq!(euler_complement(&arr, &arr.lattice()).unwrap(), 2);
    }

    #[test]
    fn euler_and_tau_invariant_under_coordinate_change() {
        let arr = full_f3();
        let f = q();
        let s = |v: i64| FieldScalar::from_int(&f, v);
        let m = Mat3::from_rows(
            &f,
            [
                [s(1), s(2), s(0)],
                [s(0), s(1), s(1)],
                [s(1), s(0), s(1)],
            ],
        );
        assert!(!m.det().is_zero());
        let minv = m.inverse().unwrap();
        // transform each line: l o M^{-1}; membership-level invariants survive
        let new_lines: Vec<LinearForm> = arr
            .lines()
            .iter()
            .map(|l| {
                let c = l.coeffs();
                let v = [c[0].clone(), c[1].clone(), c[2].clone()];
                // row vector times M^{-1}: use transpose action
                let mt = Mat3::from_rows(
                    &f,
                    [
                        [minv.entries[0][0].clone(), minv.entries[1][0].clone(), minv.entries[2][0].clone()],
                        [minv.entries[0][1].clone(), minv.entries[1][1].clone(), minv.entries[2][1].clone()],
                        [minv.entries[0][2].clone(), minv.entries[1][2].clone(), minv.entries[2][2].clone()],
                    ],
                );
                LinearForm::new(mt.apply(&v)).unwrap()
            })
            .collect();
        let moved = Arrangement::new(&f, new_lines).unwrap();
        let lat = moved.lattice();
        assert_eq!(tau(&lat), 19);
        assert_eq!(euler_complement(&moved, &lat).unwrap(), 2);
    }

    #[test]
    fn file_round_trip() {
        let arr = full_f3();
        let text = render_arrangement(&arr);
        let back = parse_arrangement(&text).unwrap();
        assert_eq!(arr, back);
        assert_eq!(render_arrangement(&back), text);
    }

    #[test]
    fn file_with_comments_and_field() {
        let text = "# a hexagonal example\nfield: t^2 + t + 1\n1, 0, 0\n0, 1, t\n";
        let arr = parse_arrangement(text).unwrap();
        assert_eq!(arr.num_lines(), 2);
        assert_eq!(arr.field().degree(), 2);
    }

    #[test]
    fn duplicate_lines_rejected() {
        let f = q();
        // 2x = 0 and x = 0 canonicalise to the same line
        let l1 = LinearForm::from_ints(&f, 2, 0, 0);
        let l2 = LinearForm::from_ints(&f, 1, 0, 0);
        assert_eq!(l1, l2);
        assert!(Arrangement::new(&f, vec![l1, l2]).is_err());
    }
}
