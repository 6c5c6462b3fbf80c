//! Local derivations attached to multiple points, the determinant map into
//! the Bourbaki ideal, and the span and freeness checks built from them.
//!
//! To a point p of multiplicity m_p the arrangement associates the degree
//! d - m_p derivation f_2p * D_p - (D_p(f_2p)/d) * E, where D_p is the
//! constant derivation with the coordinates of p, f_2p the product of lines
//! avoiding p, and E the Euler derivation. These derivations annihilate f,
//! do not vanish at their own point, and span the module in high degrees.

use crate::arrangement::{binom2, line_through, Arrangement, Lattice, LinearForm, ProjPoint};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::polyring::{dim_sk, monomials, Derivation, HomPoly};
use crate::report::{Check, CheckStatus};
use crate::scalars::{FieldScalar, Rational};
use crate::syzygy::SyzygyModule;

/// The local derivation of a lattice point, together with its index.
#[derive(Debug, Clone)]
pub struct LocalDerivation {
    pub point_index: usize,
    pub deriv: Derivation,
}

/// Builds the local derivation of lattice point `p_idx`. Fails on pencils
/// (m_p = d); asserts exactly that the result annihilates f and does not
/// vanish at its own point.
pub fn local_derivation(
    arr: &Arrangement,
    lattice: &Lattice,
    p_idx: usize,
) -> Result<LocalDerivation> {
    let field = arr.field();
    let d = arr.num_lines();
    let p = &lattice.points[p_idx];
    if p.multiplicity >= d {
        return Err(Error::Pencil(p.point.to_string()));
    }
    let (_f1, f2) = arr.split_at(p)?;
    let [u, v, w] = p.point.coords().clone();
    // D_p(f_2p) = u f2_x + v f2_y + w f2_z
    let dpf2 = f2
        .partial(0)
        .scale(&u)
        .try_add(&f2.partial(1).scale(&v))
        .and_then(|s| s.try_add(&f2.partial(2).scale(&w)))
        .expect("add");
    let q = dpf2.scale_rat(&Rational::new(1.into(), (d as i64).into()));
    let x = HomPoly::variable(field, 3, 0);
    let y = HomPoly::variable(field, 3, 1);
    let z = HomPoly::variable(field, 3, 2);
    let deriv = Derivation::new(
        f2.scale(&u).try_sub(&q.try_mul(&x).expect("mul"))?,
        f2.scale(&v).try_sub(&q.try_mul(&y).expect("mul"))?,
        f2.scale(&w).try_sub(&q.try_mul(&z).expect("mul"))?,
    );
    if deriv.degree() != d - p.multiplicity {
        return Err(Error::Internal(format!(
            "local derivation degree {} != d - m_p = {}",
            deriv.degree(),
            d - p.multiplicity
        )));
    }
    let f = arr.defining_poly();
    if !deriv.kills(&f) {
        return Err(Error::Internal(format!(
            "local derivation at {} does not annihilate f",
            p.point
        )));
    }
    let at_p = deriv.eval(p.point.coords());
    if at_p.iter().all(|c| c.is_zero()) {
        return Err(Error::Internal(format!(
            "local derivation vanishes at its own point {}",
            p.point
        )));
    }
    Ok(LocalDerivation {
        point_index: p_idx,
        deriv,
    })
}

/// Multiplicity of a point within an explicit set of lines.
fn multiplicity_in(lines: &[&LinearForm], q: &ProjPoint) -> usize {
    lines.iter().filter(|l| l.contains(q)).count()
}

/// Order of vanishing check: all partials of every coefficient up to the
/// given order vanish at q.
fn vanishes_to_order(deriv: &Derivation, q: &ProjPoint, order: usize) -> bool {
    for comp in deriv.components() {
        let mut layer = vec![comp.clone()];
        for _ in 0..order {
            if layer.iter().any(|p| !p.eval(q.coords()).is_zero()) {
                return false;
            }
            layer = layer
                .iter()
                .flat_map(|p| (0..3).map(|v| p.partial(v)))
                .collect();
        }
        if layer.iter().any(|p| !p.eval(q.coords()).is_zero()) {
            return false;
        }
    }
    true
}

/// Deterministic sample of a point on the given line satisfying a
/// predicate (used to find simple points of a sub-arrangement).
fn point_on_line_where(
    line: &LinearForm,
    mut accept: impl FnMut(&ProjPoint) -> bool,
) -> Option<ProjPoint> {
    let field = line.field();
    let c = line.coeffs();
    // two independent points on the line
    let (p1, p2) = if !c[0].is_zero() {
        (
            [-&c[1], c[0].clone(), FieldScalar::zero(field)],
            [-&c[2], FieldScalar::zero(field), c[0].clone()],
        )
    } else if !c[1].is_zero() {
        (
            [
                FieldScalar::one(field),
                FieldScalar::zero(field),
                FieldScalar::zero(field),
            ],
            [FieldScalar::zero(field), -&c[2], c[1].clone()],
        )
    } else {
        (
            [
                FieldScalar::one(field),
                FieldScalar::zero(field),
                FieldScalar::zero(field),
            ],
            [
                FieldScalar::zero(field),
                FieldScalar::one(field),
                FieldScalar::zero(field),
            ],
        )
    };
    for t in 0..64i64 {
        let tt = FieldScalar::from_int(field, t);
        let coords = [
            &p1[0] + &(&p2[0] * &tt),
            &p1[1] + &(&p2[1] * &tt),
            &p1[2] + &(&p2[2] * &tt),
        ];
        if let Ok(q) = ProjPoint::new(coords) {
            if accept(&q) {
                return Some(q);
            }
        }
    }
    None
}

/// Exact checks of the defining properties of a local derivation:
/// degree and annihilation, non-vanishing at p with the evaluation identity
/// tilde D_p(p) = (m_p/d) f_2p(p) (u,v,w), vanishing order m_q - 2 at other
/// multiple points, and the exact vanishing locus criterion.
pub fn check_local_properties(
    arr: &Arrangement,
    lattice: &Lattice,
    p_idx: usize,
) -> Result<Vec<Check>> {
    let d = arr.num_lines();
    let p = &lattice.points[p_idx];
    let ld = local_derivation(arr, lattice, p_idx)?;
    let mut checks = Vec::new();
    checks.push(Check::pass(
        format!("thm1.kills.p={}", p.point),
        format!("degree {} derivation annihilates f", ld.deriv.degree()),
    ));

    // evaluation identity at p: value = (m_p/d) f_2p(p) (u,v,w)
    let (_f1, f2) = arr.split_at(p)?;
    let scale = f2.eval(p.point.coords()).scale(&Rational::new(
        (p.multiplicity as i64).into(),
        (d as i64).into(),
    ));
    let expected = [
        &p.point.coords()[0] * &scale,
        &p.point.coords()[1] * &scale,
        &p.point.coords()[2] * &scale,
    ];
    let actual = ld.deriv.eval(p.point.coords());
    checks.push(Check::assert(
        format!("thm1.eval.p={}", p.point),
        actual == expected && !scale.is_zero(),
        "value at p is (m_p/d) f_2p(p) (u:v:w), nonzero".to_string(),
    ));

    // vanishing order at the other multiple points
    for q in &lattice.points {
        if q.point == p.point || q.multiplicity < 3 {
            continue;
        }
        let ok = vanishes_to_order(&ld.deriv, &q.point, q.multiplicity - 3);
        checks.push(Check::assert(
            format!("thm1.order.p={}.q={}", p.point, q.point),
            ok,
            format!(
                "coefficients vanish at q to order >= {}",
                q.multiplicity - 2
            ),
        ));
    }

    // vanishing locus: tilde D_p(q) = 0 iff q is a multiple point of the
    // avoiding sub-arrangement
    let avoiding: Vec<&LinearForm> = arr
        .lines()
        .iter()
        .enumerate()
        .filter(|(i, _)| !p.incident.contains(i))
        .map(|(_, l)| l)
        .collect();
    let mut locus_ok = true;
    for q in &lattice.points {
        if q.point == p.point {
            continue;
        }
        let mult2 = multiplicity_in(&avoiding, &q.point);
        let vanishes = ld
            .deriv
            .eval(q.point.coords())
            .iter()
            .all(|c| c.is_zero());
        if vanishes != (mult2 >= 2) {
            locus_ok = false;
        }
    }
    // simple points of the avoiding sub-arrangement must give nonzero values
    for line in &avoiding {
        if let Some(q) = point_on_line_where(line, |q| multiplicity_in(&avoiding, q) == 1) {
            let vanishes = ld.deriv.eval(q.coords()).iter().all(|c| c.is_zero());
            if vanishes {
                locus_ok = false;
            }
        }
    }
    // and a point off the sub-arrangement entirely
    'outer: for j in 0..8i64 {
        for k in 0..8i64 {
            let q = ProjPoint::from_ints(arr.field(), 1, j, k);
            if multiplicity_in(&avoiding, &q) == 0 {
                let vanishes = ld.deriv.eval(q.coords()).iter().all(|c| c.is_zero());
                if vanishes {
                    locus_ok = false;
                }
                break 'outer;
            }
        }
    }
    checks.push(Check::assert(
        format!("thm1.locus.p={}", p.point),
        locus_ok,
        "vanishing locus is exactly the multiple points of the avoiding lines".to_string(),
    ));
    Ok(checks)
}

/// Direct-sum span of S_{m_p-3} tilde D_p over points of multiplicity >= 3
/// inside D_0(f)_{d-3}: the vectors are independent and fill the space.
pub fn span_deg_dm3(
    arr: &Arrangement,
    lattice: &Lattice,
    module: &mut SyzygyModule,
) -> Result<Check> {
    let d = arr.num_lines();
    if d < 3 {
        return Err(Error::HypothesisNotMet("need d >= 3".into()));
    }
    let ambient = 3 * dim_sk(3, d as isize - 3);
    let mut ech = Echelon::new(arr.field(), ambient);
    let mut count = 0usize;
    let mut independent = true;
    for (i, p) in lattice.points.iter().enumerate() {
        if p.multiplicity < 3 {
            continue;
        }
        let ld = local_derivation(arr, lattice, i)?;
        for mono in monomials(3, p.multiplicity - 3) {
            let h = HomPoly::monomial(arr.field(), 3, mono, FieldScalar::one(arr.field()));
            count += 1;
            if !ech.insert(ld.deriv.mul_poly(&h).coeff_vector()) {
                independent = false;
            }
        }
    }
    let expected: usize = lattice
        .points
        .iter()
        .filter(|p| p.multiplicity >= 3)
        .map(|p| binom2(p.multiplicity - 1))
        .sum();
    let dim = module.dim(d as isize - 3);
    let ok = independent && ech.rank() == count && count == expected && ech.rank() == dim;
    Ok(Check::assert(
        "thm2.direct-sum",
        ok,
        format!(
            "{count} multiples of local derivations have rank {} in D_0(f)_{} of dim {dim}",
            ech.rank(),
            d - 3
        ),
    ))
}

/// Direct-sum containment of three local-derivation blocks in D_0(f)_{d-2},
/// valid when the three points are non-collinear, of multiplicity >= 3, and
/// joined pairwise by at most two lines of the arrangement.
pub fn span_triple_dm2(
    arr: &Arrangement,
    lattice: &Lattice,
    indices: [usize; 3],
) -> Result<Check> {
    let d = arr.num_lines();
    let pts: Vec<&ProjPoint> = indices
        .iter()
        .map(|&i| &lattice.points[i].point)
        .collect();
    let mults: Vec<usize> = indices
        .iter()
        .map(|&i| lattice.points[i].multiplicity)
        .collect();
    if mults.iter().any(|&m| m < 3) {
        return Err(Error::Undefined(
            "triple span",
            "all three points need multiplicity >= 3".into(),
        ));
    }
    // non-collinear: the coordinate matrix has rank 3
    let field = arr.field();
    let rows: Vec<Vec<FieldScalar>> = pts.iter().map(|p| p.coords().to_vec()).collect();
    if crate::linalg::rank(field, rows, 3) < 3 {
        return Err(Error::Undefined(
            "triple span",
            "points are collinear".into(),
        ));
    }
    let mut joins_in_a = 0usize;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if arr.contains_line(&line_through(pts[i], pts[j])?) {
            joins_in_a += 1;
        }
    }
    if joins_in_a > 2 {
        return Ok(Check::hypothesis_not_met(
            "thm3.triple",
            format!("all three joining lines lie in the arrangement ({joins_in_a})"),
        ));
    }
    let ambient = 3 * dim_sk(3, d as isize - 2);
    let mut ech = Echelon::new(field, ambient);
    let mut count = 0usize;
    for &i in &indices {
        let p = &lattice.points[i];
        let ld = local_derivation(arr, lattice, i)?;
        for mono in monomials(3, p.multiplicity - 2) {
            let h = HomPoly::monomial(field, 3, mono, FieldScalar::one(field));
            ech.insert(ld.deriv.mul_poly(&h).coeff_vector());
            count += 1;
        }
    }
    Ok(Check::assert(
        "thm3.triple",
        ech.rank() == count,
        format!(
            "triple at {}, {}, {}: rank {} of {count} vectors in degree {}",
            pts[0],
            pts[1],
            pts[2],
            ech.rank(),
            d - 2
        ),
    ))
}

/// Span of all local-derivation multiples at degree d-2: they generate the
/// whole of D_0(f)_{d-2} (the sum need not be direct).
pub fn span_all_dm2(
    arr: &Arrangement,
    lattice: &Lattice,
    module: &mut SyzygyModule,
) -> Result<Check> {
    let d = arr.num_lines();
    if lattice.len() == 1 {
        return Err(Error::Pencil(lattice.points[0].point.to_string()));
    }
    let field = arr.field();
    let ambient = 3 * dim_sk(3, d as isize - 2);
    let mut ech = Echelon::new(field, ambient);
    for (i, p) in lattice.points.iter().enumerate() {
        let ld = local_derivation(arr, lattice, i)?;
        for mono in monomials(3, p.multiplicity - 2) {
            let h = HomPoly::monomial(field, 3, mono, FieldScalar::one(field));
            ech.insert(ld.deriv.mul_poly(&h).coeff_vector());
        }
    }
    let dim = module.dim(d as isize - 2);
    Ok(Check::assert(
        "thmG.span",
        ech.rank() == dim,
        format!(
            "local derivations span rank {} of dim D_0(f)_{} = {dim}",
            ech.rank(),
            d - 2
        ),
    ))
}

/// The image of a local derivation under the determinant map, computed
/// twice: Delta(tilde D_p)/f and Delta_p/f_1p, which must agree.
pub fn bourbaki_poly(
    arr: &Arrangement,
    lattice: &Lattice,
    rho: &Derivation,
    p_idx: usize,
) -> Result<HomPoly> {
    let field = arr.field();
    let p = &lattice.points[p_idx];
    let ld = local_derivation(arr, lattice, p_idx)?;
    let f = arr.defining_poly();
    let delta = crate::polyring::syzygy_determinant(rho, &ld.deriv);
    let g1 = if delta.is_zero() {
        HomPoly::zero(
            field,
            3,
            (rho.degree() + 1).saturating_sub(p.multiplicity),
        )
    } else {
        delta.exact_div(&f).map_err(|_| {
            Error::NotASyzygy(
                "determinant with a local derivation is not divisible by f".into(),
            )
        })?
    };
    // second route: constant third row from the coordinates of p
    let [u, v, w] = p.point.coords().clone();
    let const_row = Derivation::new(
        HomPoly::constant(field, 3, u),
        HomPoly::constant(field, 3, v),
        HomPoly::constant(field, 3, w),
    );
    let delta_p = crate::polyring::syzygy_determinant(rho, &const_row);
    let (f1, _f2) = arr.split_at(p)?;
    let g2 = if delta_p.is_zero() {
        HomPoly::zero(field, 3, g1.degree())
    } else {
        delta_p.exact_div(&f1).map_err(|_| {
            Error::NotASyzygy("point determinant is not divisible by the lines through p".into())
        })?
    };
    if g1 != g2 {
        return Err(Error::Internal(
            "the two Bourbaki quotients disagree".into(),
        ));
    }
    if !g1.is_zero() && g1.degree() != rho.degree() + 1 - p.multiplicity {
        return Err(Error::Internal(format!(
            "Bourbaki polynomial degree {} != d_1 + 1 - m_p = {}",
            g1.degree(),
            rho.degree() + 1 - p.multiplicity
        )));
    }
    Ok(g1)
}

/// Defining polynomial of the lines containing neither p nor q, together
/// with the joining line when p and q are not connected in the arrangement.
/// The line count is always d - m_p - m_q + 1.
pub fn avoiding_poly(
    arr: &Arrangement,
    lattice: &Lattice,
    q_idx: usize,
    p_idx: usize,
) -> Result<HomPoly> {
    if p_idx == q_idx {
        return Err(Error::IdenticalPoints);
    }
    let p = &lattice.points[p_idx];
    let q = &lattice.points[q_idx];
    let field = arr.field();
    let mut h = HomPoly::one(field, 3);
    let mut count = 0usize;
    for (i, l) in arr.lines().iter().enumerate() {
        if p.incident.contains(&i) || q.incident.contains(&i) {
            continue;
        }
        h = h.try_mul(&l.to_poly())?;
        count += 1;
    }
    if !arr.connected(&p.point, &q.point)? {
        let join = line_through(&p.point, &q.point)?;
        h = h.try_mul(&join.to_poly())?;
        count += 1;
    }
    let expected = arr.num_lines() + 1 - p.multiplicity - q.multiplicity;
    if count != expected {
        return Err(Error::Internal(format!(
            "|B_p| = {count}, expected d - m_p - m_q + 1 = {expected}"
        )));
    }
    Ok(h)
}

/// When the maximal multiplicity m exceeds d/2, the local derivation of a
/// maximal point is a minimal-degree syzygy, and with that choice every
/// Bourbaki polynomial g_p (m_p >= 3) is a constant multiple of the
/// avoiding-lines polynomial h_p.
pub fn verify_prop40(
    arr: &Arrangement,
    lattice: &Lattice,
    module: &mut SyzygyModule,
) -> Result<Vec<Check>> {
    let d = arr.num_lines();
    let m = lattice.max_multiplicity();
    if 2 * m <= d {
        return Ok(vec![Check::hypothesis_not_met(
            "prop40",
            format!("maximal multiplicity {m} <= d/2"),
        )]);
    }
    let mut checks = Vec::new();
    let mdr = module.mdr();
    for (q_idx, q) in lattice.points.iter().enumerate() {
        if q.multiplicity != m {
            continue;
        }
        let rho = local_derivation(arr, lattice, q_idx)?.deriv;
        checks.push(Check::assert(
            format!("prop40.mindeg.q={}", q.point),
            rho.degree() == mdr && mdr == d - m,
            format!("tilde D_q has degree {} = mdr = d - m", rho.degree()),
        ));
        for (p_idx, p) in lattice.points.iter().enumerate() {
            if p_idx == q_idx || p.multiplicity < 3 {
                continue;
            }
            let g = bourbaki_poly(arr, lattice, &rho, p_idx)?;
            let h = avoiding_poly(arr, lattice, q_idx, p_idx)?;
            let connected = arr.connected(&p.point, &q.point)?;
            checks.push(Check::assert(
                format!("prop40.q={}.p={}", q.point, p.point),
                !g.is_zero() && g.proportional(&h),
                format!(
                    "g_p proportional to h_p ({} case)",
                    if connected { "connected" } else { "unconnected" }
                ),
            ));
        }
    }
    Ok(checks)
}

/// The degree trichotomy on the minimal relation degree and the exact
/// empty-zero-set freeness referee.
pub fn freeness_checks(
    arr: &Arrangement,
    lattice: &Lattice,
    module: &mut SyzygyModule,
) -> Result<Vec<Check>> {
    let d = arr.num_lines();
    let m = lattice.max_multiplicity();
    let tau = lattice.tjurina();
    let profile = module.profile(tau)?;
    let d1 = profile.mdr;
    let mut checks = Vec::new();

    if 2 * m > d {
        let tau_target = (d - 1) * (d - 1) - (d - m) * (m - 1);
        checks.push(Check::assert(
            "thm4.1.mdr",
            d1 == d - m,
            format!("m > d/2 forces d_1 = d - m: d_1 = {d1}, d - m = {}", d - m),
        ));
        checks.push(Check::assert(
            "thm4.1.tau",
            (tau == tau_target) == profile.free,
            format!(
                "tau = {tau} vs free value {tau_target}; free = {}",
                profile.free
            ),
        ));
    } else {
        let branch_a = d1 == m - 1 && profile.free && profile.exponents == Some((m - 1, d - m));
        let branch_b = m <= d1 && d1 <= d - m;
        checks.push(Check::assert(
            "thm4.2.range",
            branch_a || branch_b,
            format!("m <= d/2: d_1 = {d1} with m = {m} satisfies the trichotomy"),
        ));
    }

    if !(2 <= m && m <= d - 2) {
        checks.push(Check::hypothesis_not_met(
            "thm4.3",
            format!("needs 2 <= m <= d-2, have m = {m}, d = {d}"),
        ));
        return Ok(checks);
    }

    // ideal spanned by the Bourbaki polynomials of mid-range points
    let rho = module.minimal_syzygy();
    let mut gens: Vec<HomPoly> = Vec::new();
    for (i, p) in lattice.points.iter().enumerate() {
        if p.multiplicity >= 3 && 2 * p.multiplicity <= d + 1 {
            let g = bourbaki_poly(arr, lattice, &rho, i)?;
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    let verdict = if gens.is_empty() {
        // zero ideal: the zero set is the whole plane
        Some(false)
    } else {
        let field = arr.field();
        let max_deg = gens.iter().map(|g| g.degree()).max().unwrap();
        let cap = 2 * max_deg + d;
        let mut empty = None;
        for k in gens.iter().map(|g| g.degree()).min().unwrap()..=cap {
            let mut ech = Echelon::new(field, dim_sk(3, k as isize));
            for g in &gens {
                if g.degree() > k {
                    continue;
                }
                for mono in monomials(3, k - g.degree()) {
                    let h = HomPoly::monomial(field, 3, mono, FieldScalar::one(field));
                    ech.insert(g.try_mul(&h)?.coeff_vector());
                }
            }
            if ech.rank() == dim_sk(3, k as isize) {
                empty = Some(true);
                break;
            }
        }
        empty
    };
    match verdict {
        Some(empty) => {
            checks.push(Check::assert(
                "thm4.3.referee",
                empty == profile.free,
                format!(
                    "empty zero set = {empty}, s = 2 freeness = {} ({} Bourbaki generators)",
                    profile.free,
                    gens.len()
                ),
            ));
        }
        None => {
            // stalled positive without a certificate: treated as nonempty
            if profile.free {
                checks.push(Check::fail(
                    "thm4.3.referee",
                    "Hilbert values stalled positive but the arrangement is free".to_string(),
                ));
            } else {
                checks.push(Check::inconclusive(
                    "thm4.3.referee",
                    "Hilbert values stalled positive; treated as nonempty, matching non-freeness"
                        .to_string(),
                ));
            }
        }
    }
    Ok(checks)
}

/// Tangency facts of a single syzygy: each line divides its own contraction,
/// evaluation at a lattice point is proportional to the point, and the
/// Bourbaki polynomial of p vanishes at unconnected multiple points.
pub fn tangency_checks(
    arr: &Arrangement,
    lattice: &Lattice,
    rho: &Derivation,
) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut all_div = true;
    for l in arr.lines() {
        let c = l.coeffs();
        let contraction = rho
            .a
            .scale(&c[0])
            .try_add(&rho.b.scale(&c[1]))
            .and_then(|s| s.try_add(&rho.c.scale(&c[2])))?;
        let divisible = contraction.is_zero() || contraction.exact_div(&l.to_poly()).is_ok();
        if !divisible {
            all_div = false;
        }
    }
    checks.push(Check::assert(
        "propthm10.1",
        all_div,
        "the contraction along each line is divisible by that line".to_string(),
    ));

    let mut all_prop = true;
    for p in &lattice.points {
        let val = rho.eval(p.point.coords());
        let coords = p.point.coords();
        // cross product of the value and the point must vanish
        let cr = [
            &(&val[1] * &coords[2]) - &(&val[2] * &coords[1]),
            &(&val[2] * &coords[0]) - &(&val[0] * &coords[2]),
            &(&val[0] * &coords[1]) - &(&val[1] * &coords[0]),
        ];
        if !cr.iter().all(|c| c.is_zero()) {
            all_prop = false;
        }
    }
    checks.push(Check::assert(
        "propthm10.2",
        all_prop,
        "evaluation at every lattice point is zero or proportional to the point".to_string(),
    ));

    let mut all_vanish = true;
    let mut pairs = 0usize;
    for (p_idx, p) in lattice.points.iter().enumerate() {
        let mut g: Option<HomPoly> = None;
        for q in &lattice.points {
            if q.point == p.point || arr.connected(&p.point, &q.point)? {
                continue;
            }
            if g.is_none() {
                g = Some(bourbaki_poly(arr, lattice, rho, p_idx)?);
            }
            let gp = g.as_ref().unwrap();
            pairs += 1;
            if !gp.eval(q.point.coords()).is_zero() {
                all_vanish = false;
            }
        }
    }
    checks.push(Check::assert(
        "propthm10.3",
        all_vanish,
        format!("g_p vanishes at q for all {pairs} unconnected multiple pairs"),
    ));
    Ok(checks)
}

/// Runs the local-property checks for every lattice point.
pub fn check_all_local_properties(arr: &Arrangement, lattice: &Lattice) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for i in 0..lattice.len() {
        checks.extend(check_local_properties(arr, lattice, i)?);
    }
    Ok(checks)
}

/// Runs the triple-span check over all qualifying triples; reports
/// hypothesis-not-met when no triple qualifies.
pub fn all_triple_checks(arr: &Arrangement, lattice: &Lattice) -> Result<Vec<Check>> {
    let idx: Vec<usize> = lattice
        .points
        .iter()
        .enumerate()
        .filter(|(_, p)| p.multiplicity >= 3)
        .map(|(i, _)| i)
        .collect();
    let mut checks = Vec::new();
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            for c in b + 1..idx.len() {
                match span_triple_dm2(arr, lattice, [idx[a], idx[b], idx[c]]) {
                    Ok(check) => checks.push(check),
                    Err(Error::Undefined(_, _)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    if checks.is_empty() {
        checks.push(Check::hypothesis_not_met(
            "thm3.triple",
            "no triple of non-collinear points of multiplicity >= 3".to_string(),
        ));
    }
    Ok(checks)
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != CheckStatus::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;
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

    fn ld_at(arr: &Arrangement, lattice: &Lattice, pt: &ProjPoint) -> LocalDerivation {
        let i = lattice.find(pt).unwrap();
        local_derivation(arr, lattice, i).unwrap()
    }

    #[test]
    fn triangle_local_derivations_match_closed_form() {
        let arr = triangle();
        let lat = arr.lattice();
        let f = q();
        // at (1:0:0): x d_x - E/3 = (2x/3, -y/3, -z/3)
        let ld = ld_at(&arr, &lat, &ProjPoint::from_ints(&f, 1, 0, 0));
        let x = HomPoly::variable(&f, 3, 0);
        let e = Derivation::euler(&f);
        let expected =
            Derivation::new(x.clone(), HomPoly::zero(&f, 3, 1), HomPoly::zero(&f, 3, 1))
                .try_sub(&e.scale_rat(&rat_frac(1, 3)))
                .unwrap();
        assert_eq!(ld.deriv, expected);
        // at (0:1:0): y d_y - E/3
        let ld2 = ld_at(&arr, &lat, &ProjPoint::from_ints(&f, 0, 1, 0));
        let y = HomPoly::variable(&f, 3, 1);
        let expected2 = Derivation::new(HomPoly::zero(&f, 3, 1), y, HomPoly::zero(&f, 3, 1))
            .try_sub(&e.scale_rat(&rat_frac(1, 3)))
            .unwrap();
        assert_eq!(ld2.deriv, expected2);
    }

    #[test]
    fn f3_local_derivation_degree_three() {
        let arr = full_f3();
        let lat = arr.lattice();
        let f = q();
        let ld = ld_at(&arr, &lat, &ProjPoint::from_ints(&f, 0, 0, 1));
        assert_eq!(ld.deriv.degree(), 3);
        assert!(ld.deriv.kills(&arr.defining_poly()));
    }

    #[test]
    fn f3_local_derivations_vanish_at_far_triple_point() {
        let arr = full_f3();
        let lat = arr.lattice();
        let f = q();
        let far = ProjPoint::from_ints(&f, 1, 1, 1);
        for pt in [
            ProjPoint::from_ints(&f, 1, 0, 0),
            ProjPoint::from_ints(&f, 0, 1, 0),
            ProjPoint::from_ints(&f, 0, 0, 1),
        ] {
            let ld = ld_at(&arr, &lat, &pt);
            let val = ld.deriv.eval(far.coords());
            assert!(val.iter().all(|c| c.is_zero()), "expected vanishing at q");
        }
    }

    #[test]
    fn thm1_checks_pass_on_f3() {
        let arr = full_f3();
        let lat = arr.lattice();
        let checks = check_all_local_properties(&arr, &lat).unwrap();
        assert!(all_pass(&checks), "{checks:?}");
    }

    #[test]
    fn thm2_span_on_f3() {
        let arr = full_f3();
        let lat = arr.lattice();
        let mut module = SyzygyModule::new(arr.defining_poly());
        let check = span_deg_dm3(&arr, &lat, &mut module).unwrap();
        assert_eq!(check.status, CheckStatus::Pass, "{check:?}");
        // 4 vectors fill the 4-dimensional degree-3 piece
        assert!(check.detail.contains("4 multiples"));
    }

    #[test]
    fn thm2_span_empty_on_nodal() {
        let arr = triangle();
        let lat = arr.lattice();
        let mut module = SyzygyModule::new(arr.defining_poly());
        let check = span_deg_dm3(&arr, &lat, &mut module).unwrap();
        assert_eq!(check.status, CheckStatus::Pass);
        assert!(check.detail.contains("0 multiples"));
    }

    #[test]
    fn thm3_hypothesis_fails_on_f3_coordinate_triple() {
        let arr = full_f3();
        let lat = arr.lattice();
        let f = q();
        let idx = [
            lat.find(&ProjPoint::from_ints(&f, 1, 0, 0)).unwrap(),
            lat.find(&ProjPoint::from_ints(&f, 0, 1, 0)).unwrap(),
            lat.find(&ProjPoint::from_ints(&f, 0, 0, 1)).unwrap(),
        ];
        let check = span_triple_dm2(&arr, &lat, idx).unwrap();
        assert_eq!(check.status, CheckStatus::HypothesisNotMet);
    }

    #[test]
    fn thm3_low_multiplicity_triple_is_an_error() {
        let arr = full_f3();
        let lat = arr.lattice();
        let doubles: Vec<usize> = lat
            .points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.multiplicity == 2)
            .map(|(i, _)| i)
            .collect();
        let err =
            span_triple_dm2(&arr, &lat, [doubles[0], doubles[1], doubles[2]]).unwrap_err();
        assert!(matches!(err, Error::Undefined(_, _)));
    }

    #[test]
    fn thmg_span_on_triangle_and_f3() {
        for arr in [triangle(), full_f3()] {
            let lat = arr.lattice();
            let mut module = SyzygyModule::new(arr.defining_poly());
            let check = span_all_dm2(&arr, &lat, &mut module).unwrap();
            assert_eq!(check.status, CheckStatus::Pass, "{check:?}");
        }
    }

    #[test]
    fn triangle_determinant_of_local_derivations() {
        // cofactor expansion of the two coordinate local derivations gives
        // exactly the defining polynomial xyz
        let arr = triangle();
        let lat = arr.lattice();
        let f = q();
        let r1 = ld_at(&arr, &lat, &ProjPoint::from_ints(&f, 1, 0, 0)).deriv;
        let r2 = ld_at(&arr, &lat, &ProjPoint::from_ints(&f, 0, 1, 0)).deriv;
        let det = crate::polyring::syzygy_determinant(&r1, &r2);
        assert_eq!(det, arr.defining_poly());
    }

    #[test]
    fn bourbaki_polynomial_of_proportional_rows_is_zero() {
        let arr = triangle();
        let lat = arr.lattice();
        let f = q();
        let p_idx = lat.find(&ProjPoint::from_ints(&f, 1, 0, 0)).unwrap();
        let rho = local_derivation(&arr, &lat, p_idx).unwrap().deriv;
        let g = bourbaki_poly(&arr, &lat, &rho, p_idx).unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn triangle_tangency() {
        let arr = triangle();
        let lat = arr.lattice();
        let f = q();
        let rho = ld_at(&arr, &lat, &ProjPoint::from_ints(&f, 1, 0, 0)).deriv;
        let checks = tangency_checks(&arr, &lat, &rho).unwrap();
        assert!(all_pass(&checks), "{checks:?}");
    }

    #[test]
    fn f3_tangency_at_all_points() {
        let arr = full_f3();
        let lat = arr.lattice();
        let mut module = SyzygyModule::new(arr.defining_poly());
        let rho = module.minimal_syzygy();
        let checks = tangency_checks(&arr, &lat, &rho).unwrap();
        assert!(all_pass(&checks), "{checks:?}");
    }

    #[test]
    fn f3_freeness_referee() {
        let arr = full_f3();
        let lat = arr.lattice();
        let mut module = SyzygyModule::new(arr.defining_poly());
        let checks = freeness_checks(&arr, &lat, &mut module).unwrap();
        assert!(all_pass(&checks), "{checks:?}");
        assert!(checks.iter().any(|c| c.id == "thm4.3.referee"));
    }

    #[test]
    fn nodal_freeness_referee_not_free() {
        // four generic lines: nodal, never free, the Bourbaki ideal is zero
        let f = q();
        let arr = Arrangement::new(
            &f,
            vec![
                LinearForm::from_ints(&f, 1, 0, 0),
                LinearForm::from_ints(&f, 0, 1, 0),
                LinearForm::from_ints(&f, 0, 0, 1),
                LinearForm::from_ints(&f, 1, 2, 3),
            ],
        )
        .unwrap();
        let lat = arr.lattice();
        let mut module = SyzygyModule::new(arr.defining_poly());
        let checks = freeness_checks(&arr, &lat, &mut module).unwrap();
        assert!(all_pass(&checks), "{checks:?}");
        let referee = checks.iter().find(|c| c.id == "thm4.3.referee").unwrap();
        assert!(referee.detail.contains("empty zero set = false"));
    }
}
