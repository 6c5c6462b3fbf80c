//! Deletion-restriction of the syzygy module along a line: the exact
//! sequence relating D_0 of the deleted arrangement, the full arrangement
//! and the multirestriction on the line, with the explicit lift and
//! restriction maps and the ideal-inclusion argument behind the span
//! theorem in degree d-2.
//!
//! All checks work in coordinates where the chosen line is x = 0; the
//! coordinate change is produced here and verified by substitution.

use crate::arrangement::{Arrangement, Lattice, LinearForm, ProjPoint};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::localder::local_derivation;
use crate::polyring::{dim_sk, monomials, BiDerivation, Derivation, HomPoly, Mat3};
use crate::report::{Check, CheckStatus};
use crate::scalars::{FieldScalar, Rational};
use crate::syzygy::SyzygyModule;

/// An invertible coordinate change moving the chosen line to x = 0, with
/// the transformed arrangement. Lattice invariants are preserved.
pub fn move_line_to_x(arr: &Arrangement, line_idx: usize) -> Result<(Arrangement, Mat3)> {
    let field = arr.field();
    let l = &arr.lines()[line_idx];
    let c = l.coeffs();
    let i0 = c.iter().position(|e| !e.is_zero()).expect("nonzero form");
    // columns: e_{i0}, and the two kernel vectors l_{i0} e_j - l_j e_{i0}
    let mut cols: Vec<[FieldScalar; 3]> = Vec::with_capacity(3);
    let mut e0 = [
        FieldScalar::zero(field),
        FieldScalar::zero(field),
        FieldScalar::zero(field),
    ];
    e0[i0] = FieldScalar::one(field);
    cols.push(e0);
    for j in 0..3 {
        if j == i0 {
            continue;
        }
        let mut v = [
            FieldScalar::zero(field),
            FieldScalar::zero(field),
            FieldScalar::zero(field),
        ];
        v[j] = c[i0].clone();
        v[i0] = -&c[j];
        cols.push(v);
    }
    let m = Mat3::from_rows(
        field,
        [
            [cols[0][0].clone(), cols[1][0].clone(), cols[2][0].clone()],
            [cols[0][1].clone(), cols[1][1].clone(), cols[2][1].clone()],
            [cols[0][2].clone(), cols[1][2].clone(), cols[2][2].clone()],
        ],
    );
    if m.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    // each line transforms by its coefficient row times M
    let mt = Mat3::from_rows(
        field,
        [
            [
                m.entries[0][0].clone(),
                m.entries[1][0].clone(),
                m.entries[2][0].clone(),
            ],
            [
                m.entries[0][1].clone(),
                m.entries[1][1].clone(),
                m.entries[2][1].clone(),
            ],
            [
                m.entries[0][2].clone(),
                m.entries[1][2].clone(),
                m.entries[2][2].clone(),
            ],
        ],
    );
    let new_lines: Vec<LinearForm> = arr
        .lines()
        .iter()
        .map(|line| LinearForm::new(mt.apply(line.coeffs())))
        .collect::<Result<_>>()?;
    let moved = Arrangement::new(field, new_lines)?;
    let x_line = LinearForm::from_ints(field, 1, 0, 0);
    if moved.lines()[line_idx] != x_line {
        return Err(Error::Internal(
            "coordinate change failed to move the line to x = 0".into(),
        ));
    }
    Ok((moved, m))
}

/// The lift of a syzygy of f' = f/x to a syzygy of f:
/// delta = (a,b,c) maps to x*delta - (a/d) E.
pub fn lift_syzygy(delta: &Derivation, d: usize) -> Derivation {
    let field = delta.field();
    let x = HomPoly::variable(field, 3, 0);
    let y = HomPoly::variable(field, 3, 1);
    let z = HomPoly::variable(field, 3, 2);
    let scale = Rational::new(1.into(), (d as i64).into());
    let q = delta.a.scale_rat(&scale);
    Derivation::new(
        delta
            .a
            .try_mul(&x)
            .and_then(|t| t.try_sub(&q.try_mul(&x)?))
            .expect("lift"),
        delta
            .b
            .try_mul(&x)
            .and_then(|t| t.try_sub(&q.try_mul(&y)?))
            .expect("lift"),
        delta
            .c
            .try_mul(&x)
            .and_then(|t| t.try_sub(&q.try_mul(&z)?))
            .expect("lift"),
    )
}

/// The restriction of a syzygy of f = x f' to the multirestriction on
/// x = 0: delta = (x a_1, b, c) maps to (b, c) restricted plus
/// (a_1 restricted / (d-1)) (y, z). Fails when the first component is not
/// divisible by x, which means the input was not a syzygy of f.
pub fn restrict_syzygy(delta: &Derivation, d: usize) -> Result<BiDerivation> {
    let field = delta.field();
    let a1 = if delta.a.is_zero() {
        HomPoly::zero(field, 3, delta.a.degree().saturating_sub(1))
    } else {
        let x = HomPoly::variable(field, 3, 0);
        delta
            .a
            .exact_div(&x)
            .map_err(|_| Error::NotASyzygy("first component is not divisible by x".into()))?
    };
    let scale = Rational::new(1.into(), (d as i64 - 1).into());
    let a1bar = a1.restrict_x0().scale_rat(&scale);
    let y = HomPoly::variable(field, 2, 1);
    let z = HomPoly::variable(field, 2, 2);
    let b = delta.b.restrict_x0().try_add(&a1bar.try_mul(&y)?)?;
    let c = delta.c.restrict_x0().try_add(&a1bar.try_mul(&z)?)?;
    Ok(BiDerivation::new(b, c))
}

/// One restriction point on the line x = 0: the point (0 : -gamma : beta),
/// its multiplicity in the full arrangement, and the bivariate form
/// beta y + gamma z vanishing at it.
#[derive(Debug, Clone)]
pub struct ProfileEntry {
    pub point: ProjPoint,
    pub beta: FieldScalar,
    pub gamma: FieldScalar,
    pub mult: usize,
    /// Index of the point in the lattice of the moved arrangement.
    pub lattice_index: usize,
}

impl ProfileEntry {
    pub fn form(&self, field: &crate::scalars::Field) -> HomPoly {
        HomPoly::from_terms(
            field,
            2,
            1,
            [
                ([0u16, 1, 0], self.beta.clone()),
                ([0u16, 0, 1], self.gamma.clone()),
            ],
        )
    }
}

/// The multirestriction of an arrangement to one of its lines: the points
/// on the line with multiplicities, and f'' = f'(0,y,z) as a product of
/// the point forms with exponents m_i - 1.
#[derive(Debug, Clone)]
pub struct RestrictionProfile {
    pub entries: Vec<ProfileEntry>,
    /// f'(0, y, z), the multirestriction polynomial of degree d-1.
    pub f_dd: HomPoly,
    pub d: usize,
}

impl RestrictionProfile {
    pub fn k(&self) -> usize {
        self.entries.len()
    }
}

/// Computes the restriction profile of the moved arrangement (line x = 0 at
/// `line_idx`). Fails on pencils, where the restriction has a single point.
pub fn restriction_profile(
    moved: &Arrangement,
    lattice: &Lattice,
    line_idx: usize,
) -> Result<RestrictionProfile> {
    let field = moved.field();
    let d = moved.num_lines();
    let on_line = lattice.on_line(line_idx);
    if on_line.len() < 2 {
        return Err(Error::Pencil(lattice.points[on_line[0]].point.to_string()));
    }
    let mut entries = Vec::new();
    for idx in on_line {
        let lp = &lattice.points[idx];
        let coords = lp.point.coords();
        if !coords[0].is_zero() {
            return Err(Error::Internal(
                "restriction point off the line x=0".into(),
            ));
        }
        // p = (0 : -gamma : beta)
        let beta = coords[2].clone();
        let gamma = -&coords[1];
        entries.push(ProfileEntry {
            point: lp.point.clone(),
            beta,
            gamma,
            mult: lp.multiplicity,
            lattice_index: idx,
        });
    }
    // f' = product of the other lines; f'' is its restriction to x = 0
    let mut f_prime = HomPoly::one(field, 3);
    for (i, l) in moved.lines().iter().enumerate() {
        if i != line_idx {
            f_prime = f_prime.try_mul(&l.to_poly())?;
        }
    }
    let f_dd = f_prime.restrict_x0();
    // sum (m_i - 1) = d - 1
    let total: usize = entries.iter().map(|e| e.mult - 1).sum();
    if total != d - 1 {
        return Err(Error::Internal(format!(
            "restriction multiplicities sum to {total}, expected d-1 = {}",
            d - 1
        )));
    }
    // f'' equals the product of point forms with exponents m_i - 1 up to a
    // nonzero constant
    let mut prod = HomPoly::one(field, 2);
    for e in &entries {
        let form = e.form(field);
        for _ in 0..e.mult - 1 {
            prod = prod.try_mul(&form)?;
        }
    }
    if !prod.proportional(&f_dd) {
        return Err(Error::Internal(
            "multirestriction does not factor through the point forms".into(),
        ));
    }
    Ok(RestrictionProfile { entries, f_dd, d })
}

/// The generating syzygy of the multirestriction module: the reduced Koszul
/// derivation, in the closed form
/// sum_i (m_i - 1) (prod_{s != i} l_s) (gamma_i d_y - beta_i d_z).
pub fn restriction_generator(profile: &RestrictionProfile) -> Result<BiDerivation> {
    let field = profile.f_dd.field().clone();
    let k = profile.k();
    let mut b_total = HomPoly::zero(&field, 2, k - 1);
    let mut c_total = HomPoly::zero(&field, 2, k - 1);
    for (i, e) in profile.entries.iter().enumerate() {
        let mut prod = HomPoly::one(&field, 2);
        for (s, other) in profile.entries.iter().enumerate() {
            if s != i {
                prod = prod.try_mul(&other.form(&field))?;
            }
        }
        let weight = Rational::from_integer(((e.mult - 1) as i64).into());
        let prod = prod.scale_rat(&weight);
        b_total = b_total.try_add(&prod.scale(&e.gamma))?;
        c_total = c_total.try_sub(&prod.scale(&e.beta))?;
    }
    let gen = BiDerivation::new(b_total, c_total);
    if !gen.kills(&profile.f_dd) {
        return Err(Error::Internal(
            "restriction generator does not annihilate the multirestriction".into(),
        ));
    }
    if gen.degree() != k - 1 {
        return Err(Error::Internal(format!(
            "restriction generator degree {} != k-1 = {}",
            gen.degree(),
            k - 1
        )));
    }
    Ok(gen)
}

/// Everything needed to verify the deletion-restriction identities along
/// one line of an arrangement.
pub struct DeletionContext {
    pub moved: Arrangement,
    pub matrix: Mat3,
    pub matrix_inv: Mat3,
    pub line_idx: usize,
    pub lattice: Lattice,
    pub deleted: Arrangement,
    pub deleted_lattice: Lattice,
    /// The same arrangements in their original coordinates, where the
    /// defining polynomials stay sparse; kernels are computed there and
    /// pushed forward.
    pub original: Arrangement,
    pub original_deleted: Arrangement,
    pub f: HomPoly,
    pub f_prime: HomPoly,
    pub d: usize,
}

impl DeletionContext {
    pub fn new(arr: &Arrangement, line_idx: usize) -> Result<Self> {
        let d = arr.num_lines();
        if d < 3 {
            return Err(Error::HypothesisNotMet("need at least 3 lines".into()));
        }
        let (moved, matrix) = move_line_to_x(arr, line_idx)?;
        let matrix_inv = matrix.inverse()?;
        let lattice = moved.lattice();
        if lattice.len() == 1 {
            return Err(Error::Pencil(lattice.points[0].point.to_string()));
        }
        let deleted_lines: Vec<LinearForm> = moved
            .lines()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != line_idx)
            .map(|(_, l)| l.clone())
            .collect();
        let deleted = Arrangement::new(arr.field(), deleted_lines)?;
        let deleted_lattice = deleted.lattice();
        let original_deleted_lines: Vec<LinearForm> = arr
            .lines()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != line_idx)
            .map(|(_, l)| l.clone())
            .collect();
        let original_deleted = Arrangement::new(arr.field(), original_deleted_lines)?;
        let f = moved.defining_poly();
        let f_prime = deleted.defining_poly();
        Ok(DeletionContext {
            moved,
            matrix,
            matrix_inv,
            line_idx,
            lattice,
            deleted,
            deleted_lattice,
            original: arr.clone(),
            original_deleted,
            f,
            f_prime,
            d,
        })
    }

    pub fn profile(&self) -> Result<RestrictionProfile> {
        restriction_profile(&self.moved, &self.lattice, self.line_idx)
    }

    fn full_index(&self, p: &ProjPoint) -> Option<usize> {
        self.lattice.find(p)
    }
}

/// Exactness of the deletion-restriction sequence in every degree up to
/// k_max: the lift is injective, the composite vanishes, and the kernel of
/// the restriction has the dimension of the shifted deleted module.
///
/// The graded kernels are computed on the sparse original coordinates and
/// pushed forward into the frame where the line is x = 0; `full` must be
/// the syzygy module of the arrangement in its original coordinates.
pub fn exactness_checks(
    ctx: &DeletionContext,
    k_max: usize,
    full: &mut SyzygyModule,
) -> Result<Vec<Check>> {
    let field = ctx.moved.field();
    if full.f() != &ctx.original.defining_poly() {
        return Err(Error::Internal(
            "exactness needs the syzygy module of the original coordinates".into(),
        ));
    }
    let mut del = SyzygyModule::new(ctx.original_deleted.defining_poly());
    let mut subst = crate::polyring::LinearSubstitution::new(&ctx.matrix)?;
    let mut checks = Vec::new();
    for k in 0..=k_max {
        let below: Vec<Derivation> = if k == 0 {
            Vec::new()
        } else {
            del.basis(k - 1)
                .elements
                .iter()
                .map(|delta| subst.push_derivation(delta))
                .collect()
        };
        // injectivity of the lift and vanishing of the composite
        let ambient = 3 * dim_sk(3, k as isize);
        let mut ech = Echelon::new(field, ambient);
        let mut composite_zero = true;
        let mut lift_lands = true;
        for delta in &below {
            let lifted = lift_syzygy(delta, ctx.d);
            if !lifted.kills(&ctx.f) {
                lift_lands = false;
            }
            ech.insert(lifted.coeff_vector());
            let v = restrict_syzygy(&lifted, ctx.d)?;
            if !v.is_zero() {
                composite_zero = false;
            }
        }
        checks.push(Check::assert(
            format!("thm1G.inj.k={k}"),
            lift_lands && ech.rank() == below.len(),
            format!(
                "lift injective on dim {} piece (rank {})",
                below.len(),
                ech.rank()
            ),
        ));
        checks.push(Check::assert(
            format!("thm1G.comp.k={k}"),
            composite_zero,
            "restriction of every lifted syzygy vanishes".to_string(),
        ));
        // kernel dimension of the restriction on D_0(f)_k
        let basis_k = full.basis(k);
        let bi_ambient = 2 * (k + 1);
        let mut rows = Vec::with_capacity(basis_k.dim());
        let f_dd = ctx.f_prime.restrict_x0();
        for delta_orig in &basis_k.elements {
            let delta = subst.push_derivation(delta_orig);
            let v = restrict_syzygy(&delta, ctx.d)?;
            if !v.is_zero() && !v.kills(&f_dd) {
                return Err(Error::Internal(
                    "restricted syzygy does not annihilate the multirestriction".into(),
                ));
            }
            rows.push(v.coeff_vector());
        }
        let rank = crate::linalg::rank(field, rows, bi_ambient);
        let ker = basis_k.dim() - rank;
        checks.push(Check::assert(
            format!("thm1G.ker.k={k}"),
            ker == below.len(),
            format!(
                "dim ker restriction = {ker}, dim deleted piece = {}",
                below.len()
            ),
        ));
    }
    Ok(checks)
}

/// Behaviour of local derivations under the lift: for a multiple point of
/// the deleted arrangement, the lift of its local derivation is x times
/// (p on the line) or exactly (p off the line) the local derivation in the
/// full arrangement.
pub fn lift_local_checks(ctx: &DeletionContext) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let x = HomPoly::variable(ctx.moved.field(), 3, 0);
    for (i, p) in ctx.deleted_lattice.points.iter().enumerate() {
        let ld_del = local_derivation(&ctx.deleted, &ctx.deleted_lattice, i)?;
        let lifted = lift_syzygy(&ld_del.deriv, ctx.d);
        let full_idx = ctx.full_index(&p.point).ok_or_else(|| {
            Error::Internal("multiple point of the deleted arrangement left the lattice".into())
        })?;
        let ld_full = local_derivation(&ctx.moved, &ctx.lattice, full_idx)?;
        let on_line = p.point.coords()[0].is_zero();
        let expected = if on_line {
            ld_full.deriv.mul_poly(&x)
        } else {
            ld_full.deriv.clone()
        };
        checks.push(Check::assert(
            format!("propG1.p={}", p.point),
            lifted == expected,
            format!(
                "lift of the deleted local derivation is {} the full one",
                if on_line { "x times" } else { "exactly" }
            ),
        ));
    }
    if checks.is_empty() {
        checks.push(Check::hypothesis_not_met(
            "propG1",
            "deleted arrangement has no multiple points".to_string(),
        ));
    }
    Ok(checks)
}

/// Behaviour of local derivations under the restriction: the displayed
/// closed formula with the exact constant 1/(d-1) for points on the line,
/// and exact vanishing for points off the line.
pub fn restrict_local_checks(ctx: &DeletionContext) -> Result<Vec<Check>> {
    let field = ctx.moved.field();
    let mut checks = Vec::new();
    let scale = Rational::new(1.into(), (ctx.d as i64 - 1).into());
    for (i, p) in ctx.lattice.points.iter().enumerate() {
        let ld = local_derivation(&ctx.moved, &ctx.lattice, i)?;
        let v = restrict_syzygy(&ld.deriv, ctx.d)?;
        let on_line = p.point.coords()[0].is_zero();
        if !on_line {
            checks.push(Check::assert(
                format!("propG2.off.p={}", p.point),
                v.is_zero(),
                "restriction of an off-line local derivation vanishes".to_string(),
            ));
            continue;
        }
        // p = (0 : -gamma : beta); f2 = lines avoiding p
        let beta = p.point.coords()[2].clone();
        let gamma = -&p.point.coords()[1];
        let (_f1, f2) = ctx.moved.split_at(p)?;
        let f2bar = f2.restrict_x0();
        let a_p = f2bar
            .partial(1)
            .scale(&gamma)
            .try_sub(&f2bar.partial(2).scale(&beta))?;
        let y = HomPoly::variable(field, 2, 1);
        let z = HomPoly::variable(field, 2, 2);
        let dm1 = Rational::from_integer((ctx.d as i64 - 1).into());
        let expected_b = y
            .try_mul(&a_p)?
            .try_sub(&f2bar.scale(&gamma).scale_rat(&dm1))?
            .scale_rat(&scale);
        let expected_c = z
            .try_mul(&a_p)?
            .try_add(&f2bar.scale(&beta).scale_rat(&dm1))?
            .scale_rat(&scale);
        checks.push(Check::assert(
            format!("propG2.on.p={}", p.point),
            v.b == expected_b && v.c == expected_c,
            "restriction matches the closed formula with constant 1/(d-1)".to_string(),
        ));
    }
    Ok(checks)
}

/// Proportionality of the restricted local derivations to the products
/// g_i * delta'': for each point p_i on the line, with
/// g_i = prod_{s != i} l_s^{m_s - 2}.
pub fn eqg7_checks(ctx: &DeletionContext) -> Result<Vec<Check>> {
    let field = ctx.moved.field();
    let profile = ctx.profile()?;
    let gen = restriction_generator(&profile)?;
    let mut checks = Vec::new();
    for (i, e) in profile.entries.iter().enumerate() {
        let ld = local_derivation(&ctx.moved, &ctx.lattice, e.lattice_index)?;
        let v = restrict_syzygy(&ld.deriv, ctx.d)?;
        let mut g_i = HomPoly::one(field, 2);
        for (s, other) in profile.entries.iter().enumerate() {
            if s == i {
                continue;
            }
            let form = other.form(field);
            for _ in 0..other.mult.saturating_sub(2) {
                g_i = g_i.try_mul(&form)?;
            }
        }
        let target = BiDerivation::new(g_i.try_mul(&gen.b)?, g_i.try_mul(&gen.c)?);
        checks.push(Check::assert(
            format!("eqG7.p={}", e.point),
            !v.is_zero() && v.proportional(&target),
            format!(
                "restricted local derivation proportional to g_i * generator (deg g_i = {})",
                g_i.degree()
            ),
        ));
    }
    Ok(checks)
}

/// The monomial ideal inclusion behind the span theorem: every monomial in
/// y, z of degree d-2-k lies in the ideal spanned by the g_i.
pub fn eqg8_check(ctx: &DeletionContext) -> Result<Check> {
    let field = ctx.moved.field();
    let profile = ctx.profile()?;
    let k = profile.k();
    let d = ctx.d;
    if d < 2 + k {
        return Ok(Check::pass(
            "eqG8",
            format!("d-2-k = {} < 0: inclusion vacuous", d as i64 - 2 - k as i64),
        ));
    }
    let target_deg = d - 2 - k;
    let mut ech = Echelon::new(field, dim_sk(2, target_deg as isize));
    for (i, _e) in profile.entries.iter().enumerate() {
        let mut g_i = HomPoly::one(field, 2);
        for (s, other) in profile.entries.iter().enumerate() {
            if s == i {
                continue;
            }
            let form = other.form(field);
            for _ in 0..other.mult.saturating_sub(2) {
                g_i = g_i.try_mul(&form)?;
            }
        }
        if g_i.degree() > target_deg {
            continue;
        }
        for mono in monomials(2, target_deg - g_i.degree()) {
            let h = HomPoly::monomial(field, 2, mono, FieldScalar::one(field));
            ech.insert(g_i.try_mul(&h)?.coeff_vector());
        }
    }
    let full = dim_sk(2, target_deg as isize);
    Ok(Check::assert(
        "eqG8",
        ech.rank() == full,
        format!(
            "(y,z)^{target_deg} lies in the ideal of the g_i (rank {} of {full})",
            ech.rank()
        ),
    ))
}

/// Isomorphism range and maximal-exponent bound for adding a line to any
/// reduced curve: with r the number of points of the curve on the line,
/// dimensions agree up to degree r-2 and some generator of the union has
/// degree at least r-1.
pub fn added_line_checks(f_prime_input: &HomPoly, line: &LinearForm) -> Result<Vec<Check>> {
    let field = f_prime_input.field().clone();
    // move the line to x = 0 via a two-line scratch arrangement
    let tmp = Arrangement::new(&field, vec![line.clone(), synthetic_second_line(line)?])?;
    let (_, m) = move_line_to_x(&tmp, 0)?;
    let f_prime = f_prime_input.substitute_linear(&m)?;
    let restricted = f_prime.restrict_x0();
    if restricted.is_zero() {
        return Err(Error::NotASyzygy(
            "the line is a component of the curve".into(),
        ));
    }
    let r = restricted.binary_distinct_roots()?;
    let x = HomPoly::variable(&field, 3, 0);
    let f = f_prime.try_mul(&x)?;
    let d = f.degree();
    let mut full = SyzygyModule::new(f);
    let mut del = SyzygyModule::new(f_prime);
    let mut checks = Vec::new();
    for k in 0..=r.saturating_sub(2) {
        let dim_full = full.dim(k as isize);
        let dim_del = del.dim(k as isize - 1);
        checks.push(Check::assert(
            format!("cor1G.iso.k={k}"),
            dim_full == dim_del,
            format!("dim D_0(f)_{k} = {dim_full} matches shifted deleted dim {dim_del}"),
        ));
    }
    // max generator degree of the union: sweep to the curve regularity bound
    let (gen_degrees, _) = full.generators(2 * d - 3);
    let ds = *gen_degrees.last().expect("at least one generator");
    checks.push(Check::assert(
        "cor1G.ds",
        ds >= r - 1,
        format!("max generator degree {ds} >= r-1 = {}", r - 1),
    ));
    Ok(checks)
}

/// Any coordinate line distinct from the given one, to host a coordinate
/// change of a bare curve.
fn synthetic_second_line(line: &LinearForm) -> Result<LinearForm> {
    let field = line.field();
    for (a, b, c) in [(1i64, 0i64, 0i64), (0, 1, 0), (0, 0, 1)] {
        let cand = LinearForm::from_ints(field, a, b, c);
        if &cand != line {
            return Ok(cand);
        }
    }
    unreachable!("three candidate lines cannot all coincide")
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != CheckStatus::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat_frac, Field, NumberFieldSpec};

    fn q() -> Field {
        NumberFieldSpec::rationals()
    }

    fn triangle() -> Arrangement {
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

    fn full_f3() -> Arrangement {
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
    fn moving_lines_to_x() {
        let arr = full_f3();
        // already x: identity-like change
        let (moved, _) = move_line_to_x(&arr, 0).unwrap();
        assert_eq!(moved.lines()[0], LinearForm::from_ints(&q(), 1, 0, 0));
        // a coordinate swap case and generic cases
        for idx in [1, 3, 4] {
            let (moved, m) = move_line_to_x(&arr, idx).unwrap();
            assert!(!m.det().is_zero());
            assert_eq!(moved.lines()[idx], LinearForm::from_ints(&q(), 1, 0, 0));
            let lat = moved.lattice();
            assert_eq!(crate::arrangement::tau(&lat), 19);
        }
    }

    #[test]
    fn lift_of_the_basic_syzygy() {
        // f' = yz, delta' = (1, 0, 0): the lift is ((2/3)x, -y/3, -z/3)
        let f = q();
        let one = HomPoly::one(&f, 3);
        let delta = Derivation::new(one, HomPoly::zero(&f, 3, 0), HomPoly::zero(&f, 3, 0));
        let lifted = lift_syzygy(&delta, 3);
        let x = HomPoly::variable(&f, 3, 0);
        let y = HomPoly::variable(&f, 3, 1);
        let z = HomPoly::variable(&f, 3, 2);
        assert_eq!(lifted.a, x.scale_rat(&rat_frac(2, 3)));
        assert_eq!(lifted.b, y.scale_rat(&rat_frac(-1, 3)));
        assert_eq!(lifted.c, z.scale_rat(&rat_frac(-1, 3)));
        let xyz = x.try_mul(&y).unwrap().try_mul(&z).unwrap();
        assert!(lifted.kills(&xyz));
        // zero maps to zero
        let zero = Derivation::new(
            HomPoly::zero(&f, 3, 0),
            HomPoly::zero(&f, 3, 0),
            HomPoly::zero(&f, 3, 0),
        );
        assert!(lift_syzygy(&zero, 3).is_zero());
    }

    #[test]
    fn restriction_of_the_lift_vanishes() {
        let f = q();
        let one = HomPoly::one(&f, 3);
        let delta = Derivation::new(one, HomPoly::zero(&f, 3, 0), HomPoly::zero(&f, 3, 0));
        let lifted = lift_syzygy(&delta, 3);
        let v = restrict_syzygy(&lifted, 3).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn restriction_of_a_genuine_syzygy() {
        // triangle, delta = y d_y - E/3 = (-x/3, 2y/3, -z/3): restriction is
        // (y/2, -z/2), and it annihilates the multirestriction yz
        let f = q();
        let x = HomPoly::variable(&f, 3, 0);
        let y = HomPoly::variable(&f, 3, 1);
        let z = HomPoly::variable(&f, 3, 2);
        let delta = Derivation::new(
            x.scale_rat(&rat_frac(-1, 3)),
            y.scale_rat(&rat_frac(2, 3)),
            z.scale_rat(&rat_frac(-1, 3)),
        );
        let v = restrict_syzygy(&delta, 3).unwrap();
        let yy = HomPoly::variable(&f, 2, 1);
        let zz = HomPoly::variable(&f, 2, 2);
        assert_eq!(v.b, yy.scale_rat(&rat_frac(1, 2)));
        assert_eq!(v.c, zz.scale_rat(&rat_frac(-1, 2)));
        let yz = yy.try_mul(&zz).unwrap();
        assert!(v.kills(&yz));
    }

    #[test]
    fn triangle_profile() {
        let arr = triangle();
        let ctx = DeletionContext::new(&arr, 0).unwrap();
        let profile = ctx.profile().unwrap();
        assert_eq!(profile.k(), 2);
        assert!(profile.entries.iter().all(|e| e.mult == 2));
        let gen = restriction_generator(&profile).unwrap();
        assert_eq!(gen.degree(), 1);
        let y = HomPoly::variable(&q(), 2, 1);
        let z = HomPoly::variable(&q(), 2, 2);
        let expected = BiDerivation::new(y, -&z);
        assert!(gen.proportional(&expected));
    }

    #[test]
    fn f3_profile_on_z() {
        let arr = full_f3();
        let ctx = DeletionContext::new(&arr, 2).unwrap();
        let profile = ctx.profile().unwrap();
        assert_eq!(profile.k(), 3);
        assert_eq!(profile.f_dd.degree(), 5);
        let gen = restriction_generator(&profile).unwrap();
        assert_eq!(gen.degree(), 2);
    }

    #[test]
    fn exactness_on_triangle_and_f3() {
        for (arr, kmax) in [(triangle(), 3usize), (full_f3(), 5usize)] {
            let mut full = SyzygyModule::new(arr.defining_poly());
            for idx in 0..arr.num_lines() {
                let ctx = DeletionContext::new(&arr, idx).unwrap();
                let checks = exactness_checks(&ctx, kmax, &mut full).unwrap();
                assert!(all_pass(&checks), "line {idx}: {checks:?}");
            }
        }
    }

    #[test]
    fn lift_and_restrict_local_derivations_on_f3() {
        let arr = full_f3();
        for idx in 0..arr.num_lines() {
            let ctx = DeletionContext::new(&arr, idx).unwrap();
            let checks = lift_local_checks(&ctx).unwrap();
            assert!(all_pass(&checks), "line {idx}: {checks:?}");
            let checks = restrict_local_checks(&ctx).unwrap();
            assert!(all_pass(&checks), "line {idx}: {checks:?}");
        }
    }

    #[test]
    fn eqg7_on_triangle_and_f3() {
        for arr in [triangle(), full_f3()] {
            for idx in 0..arr.num_lines() {
                let ctx = DeletionContext::new(&arr, idx).unwrap();
                let checks = eqg7_checks(&ctx).unwrap();
                assert!(all_pass(&checks), "line {idx}: {checks:?}");
            }
        }
    }

    #[test]
    fn eqg8_on_triangle_and_f3() {
        for arr in [triangle(), full_f3()] {
            for idx in 0..arr.num_lines() {
                let ctx = DeletionContext::new(&arr, idx).unwrap();
                let check = eqg8_check(&ctx).unwrap();
                assert_eq!(check.status, CheckStatus::Pass, "line {idx}: {check:?}");
            }
        }
    }

    #[test]
    fn triangle_as_line_added_to_two_lines() {
        // yz plus the line x: r = 2 points on the added line
        let f = q();
        let y = HomPoly::variable(&f, 3, 1);
        let z = HomPoly::variable(&f, 3, 2);
        let f_prime = y.try_mul(&z).unwrap();
        let line = LinearForm::from_ints(&f, 1, 0, 0);
        let checks = added_line_checks(&f_prime, &line).unwrap();
        assert!(all_pass(&checks), "{checks:?}");
        let ds = checks.iter().find(|c| c.id == "cor1G.ds").unwrap();
        assert!(ds.detail.contains(">= r-1 = 1"), "{ds:?}");
    }

    #[test]
    fn smooth_conic_with_transversal_line() {
        // x^2 + y^2 + z^2 meets x = 0 in two points
        let f = q();
        let x = HomPoly::variable(&f, 3, 0);
        let y = HomPoly::variable(&f, 3, 1);
        let z = HomPoly::variable(&f, 3, 2);
        let conic = x
            .try_mul(&x)
            .unwrap()
            .try_add(&y.try_mul(&y).unwrap())
            .unwrap()
            .try_add(&z.try_mul(&z).unwrap())
            .unwrap();
        let line = LinearForm::from_ints(&f, 1, 0, 0);
        let checks = added_line_checks(&conic, &line).unwrap();
        assert!(all_pass(&checks), "{checks:?}");
    }
}
