//! Catalog of named arrangements, randomized inputs, and the orchestration
//! that runs verification suites and assembles analysis reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{
    euler_complement, is_supersolvable, line_through, Arrangement, Lattice, LinearForm,
};
use crate::cover::{self, CoverResult};
use crate::delres::{self, DeletionContext};
use crate::error::{Error, Result};
use crate::localder;
use crate::polyring::HomPoly;
use crate::report::{Check, CheckStatus, VerifyReport};
use crate::scalars::{Field, FieldScalar, NumberFieldSpec};
use crate::syzygy::{dims_checks, nhilbert_checks, SyzygyModule, SyzygyProfile};

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Known invariants of a catalog entry, asserted on every analysis.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub free: Option<bool>,
    pub exponents: Option<Vec<usize>>,
    pub mdr: Option<usize>,
    pub tau: Option<usize>,
    pub cover_n: Option<usize>,
    pub cover_n0_min: Option<usize>,
    pub supersolvable: Option<bool>,
}

pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    /// None marks the slot that only accepts externally supplied coordinates.
    pub builder: Option<fn() -> Result<Arrangement>>,
    pub expected: Expected,
}

fn qq() -> Field {
    NumberFieldSpec::rationals()
}

pub fn triangle() -> Result<Arrangement> {
    let f = qq();
    Arrangement::new(
        &f,
        vec![
            LinearForm::from_ints(&f, 1, 0, 0),
            LinearForm::from_ints(&f, 0, 1, 0),
            LinearForm::from_ints(&f, 0, 0, 1),
        ],
    )
}

pub fn full_monomial_3() -> Result<Arrangement> {
    let f = qq();
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
}

/// The 3m lines x = zeta^j y, y = zeta^j z, x = zeta^j z over Q(zeta_m).
pub fn monomial_arrangement(m: usize) -> Result<Arrangement> {
    if m < 2 {
        return Err(Error::Parse("monomial arrangement needs m >= 2".into()));
    }
    let field = NumberFieldSpec::cyclotomic(m);
    let zeta = FieldScalar::generator(&field);
    let one = FieldScalar::one(&field);
    let zero = FieldScalar::zero(&field);
    let mut lines = Vec::new();
    for j in 0..m {
        let zj = zeta.pow(j);
        lines.push(LinearForm::new([one.clone(), -&zj, zero.clone()])?);
    }
    for j in 0..m {
        let zj = zeta.pow(j);
        lines.push(LinearForm::new([zero.clone(), one.clone(), -&zj])?);
    }
    for j in 0..m {
        let zj = zeta.pow(j);
        lines.push(LinearForm::new([one.clone(), zero.clone(), -&zj])?);
    }
    Arrangement::new(&field, lines)
}

/// The monomial arrangement with the extra line x = 0.
pub fn monomial_with_axis(k: usize) -> Result<Arrangement> {
    let base = monomial_arrangement(k)?;
    let field = base.field().clone();
    let mut lines = base.lines().to_vec();
    lines.push(LinearForm::new([
        FieldScalar::one(&field),
        FieldScalar::zero(&field),
        FieldScalar::zero(&field),
    ])?);
    Arrangement::new(&field, lines)
}

/// The twelve lines of the Hessian configuration over Q(zeta_3): the three
/// coordinate lines and x + zeta^a y + zeta^b z. The product of the forms
/// is checked against xyz((x^3+y^3+z^3)^3 - 27 x^3 y^3 z^3) exactly.
pub fn hessian() -> Result<Arrangement> {
    let field = NumberFieldSpec::cyclotomic(3);
    let zeta = FieldScalar::generator(&field);
    let one = FieldScalar::one(&field);
    let zero = FieldScalar::zero(&field);
    let mut lines = vec![
        LinearForm::new([one.clone(), zero.clone(), zero.clone()])?,
        LinearForm::new([zero.clone(), one.clone(), zero.clone()])?,
        LinearForm::new([zero.clone(), zero.clone(), one.clone()])?,
    ];
    for a in 0..3 {
        for b in 0..3 {
            lines.push(LinearForm::new([one.clone(), zeta.pow(a), zeta.pow(b)])?);
        }
    }
    let arr = Arrangement::new(&field, lines)?;
    // hard check of the closed-form product
    let x = HomPoly::variable(&field, 3, 0);
    let y = HomPoly::variable(&field, 3, 1);
    let z = HomPoly::variable(&field, 3, 2);
    let cube = |p: &HomPoly| p.try_mul(p).and_then(|q| q.try_mul(p));
    let sum3 = cube(&x)?.try_add(&cube(&y)?)?.try_add(&cube(&z)?)?;
    let xyz = x.try_mul(&y)?.try_mul(&z)?;
    let displayed = cube(&sum3)?
        .try_sub(&cube(&xyz)?.scale_rat(&crate::scalars::rat(27)))?
        .try_mul(&xyz)?;
    if !arr.defining_poly().proportional(&displayed) {
        return Err(Error::Internal(
            "Hessian line product does not match the displayed polynomial".into(),
        ));
    }
    Ok(arr)
}

/// xyz(x-y)(x+y)(y-z): supersolvable with a point of multiplicity 4.
pub fn ssv() -> Result<Arrangement> {
    let f = qq();
    Arrangement::new(
        &f,
        vec![
            LinearForm::from_ints(&f, 1, 0, 0),
            LinearForm::from_ints(&f, 0, 1, 0),
            LinearForm::from_ints(&f, 0, 0, 1),
            LinearForm::from_ints(&f, 1, -1, 0),
            LinearForm::from_ints(&f, 1, 1, 0),
            LinearForm::from_ints(&f, 0, 1, -1),
        ],
    )
}

/// Two generic pencils: n1 lines through (0:0:1) and n2 lines through
/// (1:0:0), in general position otherwise.
pub fn pencils(n1: usize, n2: usize) -> Result<Arrangement> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::Parse("each pencil needs at least 2 lines".into()));
    }
    let f = qq();
    let mut lines = Vec::new();
    for i in 1..=n1 {
        lines.push(LinearForm::from_ints(&f, 1, -(i as i64), 0));
    }
    for j in 1..=n2 {
        lines.push(LinearForm::from_ints(&f, 0, 1, -(j as i64)));
    }
    Arrangement::new(&f, lines)
}

/// The default catalog. Parameterized names such as MONO(5) or
/// PENCILS(3,5) are accepted by `build_by_name` beyond this list.
pub fn catalog() -> Vec<CatalogEntry> {
    fn entry(
        name: &str,
        description: &str,
        builder: Option<fn() -> Result<Arrangement>>,
        expected: Expected,
    ) -> CatalogEntry {
        CatalogEntry {
            name: name.into(),
            description: description.into(),
            builder,
            expected,
        }
    }
    vec![
        entry(
            "TRIANGLE",
            "the three coordinate lines xyz",
            Some(|| triangle()),
            Expected {
                free: Some(true),
                exponents: Some(vec![1, 1]),
                mdr: Some(1),
                tau: Some(3),
                cover_n: Some(2),
                ..Default::default()
            },
        ),
        entry(
            "F3",
            "full monomial arrangement xyz(x-y)(y-z)(x-z)",
            Some(|| full_monomial_3()),
            Expected {
                free: Some(true),
                exponents: Some(vec![2, 3]),
                mdr: Some(2),
                tau: Some(19),
                cover_n: Some(3),
                supersolvable: Some(true),
                ..Default::default()
            },
        ),
        entry(
            "MONO(3)",
            "monomial arrangement of order 3 over Q(zeta_3)",
            Some(|| monomial_arrangement(3)),
            Expected {
                free: Some(true),
                ..Default::default()
            },
        ),
        entry(
            "MONO(4)",
            "monomial arrangement of order 4 over Q(zeta_4)",
            Some(|| monomial_arrangement(4)),
            Expected {
                free: Some(true),
                mdr: Some(5),
                exponents: Some(vec![5, 6]),
                ..Default::default()
            },
        ),
        entry(
            "AKX(2)",
            "monomial arrangement of order 2 plus the line x",
            Some(|| monomial_with_axis(2)),
            Expected {
                free: Some(true),
                mdr: Some(3),
                cover_n: Some(3),
                ..Default::default()
            },
        ),
        entry(
            "AKX(3)",
            "monomial arrangement of order 3 plus the line x",
            Some(|| monomial_with_axis(3)),
            Expected {
                free: Some(true),
                mdr: Some(4),
                cover_n: Some(4),
                ..Default::default()
            },
        ),
        entry(
            "HESSIAN",
            "the twelve lines of the Hessian configuration over Q(zeta_3)",
            Some(|| hessian()),
            Expected {
                free: Some(true),
                exponents: Some(vec![4, 7]),
                mdr: Some(4),
                tau: Some(93),
                cover_n: Some(5),
                cover_n0_min: Some(6),
                ..Default::default()
            },
        ),
        entry(
            "SSV",
            "supersolvable arrangement xyz(x^2-y^2)(y-z)",
            Some(|| ssv()),
            Expected {
                free: Some(true),
                supersolvable: Some(true),
                mdr: Some(2),
                ..Default::default()
            },
        ),
        entry(
            "PENCILS(2,2)",
            "two generic pencils of 2 and 2 lines",
            Some(|| pencils(2, 2)),
            Expected {
                free: Some(false),
                mdr: Some(2),
                tau: Some(6),
                ..Default::default()
            },
        ),
        entry(
            "PENCILS(2,4)",
            "two generic pencils of 2 and 4 lines",
            Some(|| pencils(2, 4)),
            Expected {
                free: Some(false),
                mdr: Some(2),
                ..Default::default()
            },
        ),
        entry(
            "PENCILS(3,4)",
            "two generic pencils of 3 and 4 lines",
            Some(|| pencils(3, 4)),
            Expected {
                free: Some(false),
                mdr: Some(3),
                ..Default::default()
            },
        ),
        entry(
            "ZIEGLER",
            "slot for an externally supplied pair of 9-line arrangements \
             with equal combinatorics and different degree-5 syzygy spaces",
            None,
            Expected::default(),
        ),
    ]
}

/// Builds a catalog arrangement by name, accepting parameterized forms
/// MONO(m), AKX(k) and PENCILS(n1,n2).
pub fn build_by_name(name: &str) -> Result<Arrangement> {
    match name {
        "TRIANGLE" => return triangle(),
        "F3" => return full_monomial_3(),
        "HESSIAN" => return hessian(),
        "SSV" => return ssv(),
        "ZIEGLER" => {
            return Err(Error::Undefined(
                "ZIEGLER",
                "external data: supply the coordinates as arrangement files".into(),
            ))
        }
        _ => {}
    }
    let parse_args = |name: &str, prefix: &str| -> Option<Vec<usize>> {
        let rest = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
        rest.split(',')
            .map(|s| s.trim().parse::<usize>().ok())
            .collect()
    };
    if let Some(args) = parse_args(name, "MONO") {
        if args.len() == 1 {
            return monomial_arrangement(args[0]);
        }
    }
    if let Some(args) = parse_args(name, "AKX") {
        if args.len() == 1 {
            return monomial_with_axis(args[0]);
        }
    }
    if let Some(args) = parse_args(name, "PENCILS") {
        if args.len() == 2 {
            return pencils(args[0], args[1]);
        }
    }
    Err(Error::UnknownSuite(format!("catalog entry {name}")))
}

/// Deterministic random arrangement: d distinct lines with integer
/// coefficients in [-max_coeff, max_coeff], rejection-sampled until the
/// lines are distinct and (for d >= 3) not a pencil.
pub fn random_arrangement(seed: u64, d: usize, max_coeff: i64) -> Result<Arrangement> {
    assert!(d >= 3, "random arrangements need at least 3 lines");
    assert!(max_coeff >= 1);
    let field = qq();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut lines: Vec<LinearForm> = Vec::with_capacity(d);
        while lines.len() < d {
            let coeffs: [i64; 3] = [
                rng.gen_range(-max_coeff..=max_coeff),
                rng.gen_range(-max_coeff..=max_coeff),
                rng.gen_range(-max_coeff..=max_coeff),
            ];
            if coeffs == [0, 0, 0] {
                continue;
            }
            let form = LinearForm::from_ints(&field, coeffs[0], coeffs[1], coeffs[2]);
            if !lines.contains(&form) {
                lines.push(form);
            }
        }
        let arr = Arrangement::new(&field, lines)?;
        if arr.lattice().len() > 1 {
            return Ok(arr);
        }
    }
}

// ---------------------------------------------------------------------------
// Analyzer: one arrangement with cached derived data
// ---------------------------------------------------------------------------

pub struct Analyzer {
    pub name: String,
    pub arr: Arrangement,
    pub lattice: Lattice,
    pub module: SyzygyModule,
    profile: Option<SyzygyProfile>,
    cover: Option<CoverResult>,
}

impl Analyzer {
    pub fn new(name: impl Into<String>, arr: Arrangement) -> Self {
        let lattice = arr.lattice();
        let module = SyzygyModule::new(arr.defining_poly());
        Analyzer {
            name: name.into(),
            arr,
            lattice,
            module,
            profile: None,
            cover: None,
        }
    }

    pub fn d(&self) -> usize {
        self.arr.num_lines()
    }

    pub fn tau(&self) -> usize {
        self.lattice.tjurina()
    }

    pub fn is_pencil(&self) -> bool {
        self.lattice.len() == 1
    }

    pub fn profile(&mut self) -> Result<&SyzygyProfile> {
        if self.profile.is_none() {
            let tau = self.tau();
            self.profile = Some(self.module.profile(tau)?);
        }
        Ok(self.profile.as_ref().unwrap())
    }

    pub fn cover(&mut self) -> Result<&CoverResult> {
        if self.cover.is_none() {
            self.cover = Some(cover::min_cover(&self.arr, &self.lattice)?);
        }
        Ok(self.cover.as_ref().unwrap())
    }
}

// ---------------------------------------------------------------------------
// Suite dispatch
// ---------------------------------------------------------------------------

pub const SUITE_IDS: &[&str] = &[
    "thmD", "thm1", "thm2", "thm3", "thmG-span", "thm4", "prop40", "propthm10", "thm1G-exact",
    "propG1", "propG2", "eqG7", "eqG8", "cor1G", "conj10", "thm1000", "thm100", "rkex10", "lem10",
    "full",
];

/// Isomorphism range and maximal-exponent bound for deleting one line of an
/// arrangement, using the cached profile for the generator bound.
fn cor1g_arrangement_checks(analyzer: &mut Analyzer, line_idx: usize) -> Result<Vec<Check>> {
    let r = analyzer.lattice.on_line(line_idx).len();
    let field = analyzer.arr.field().clone();
    let mut f_prime = HomPoly::one(&field, 3);
    for (i, l) in analyzer.arr.lines().iter().enumerate() {
        if i != line_idx {
            f_prime = f_prime.try_mul(&l.to_poly())?;
        }
    }
    let mut del = SyzygyModule::new(f_prime);
    let mut checks = Vec::new();
    for k in 0..=r.saturating_sub(2) {
        let dim_full = analyzer.module.dim(k as isize);
        let dim_del = del.dim(k as isize - 1);
        checks.push(Check::assert(
            format!("cor1G.iso.L={line_idx}.k={k}"),
            dim_full == dim_del,
            format!("dim D_0(f)_{k} = {dim_full} matches shifted deleted dim {dim_del}"),
        ));
    }
    let ds = *analyzer.profile()?.gen_degrees.last().unwrap();
    checks.push(Check::assert(
        format!("cor1G.ds.L={line_idx}"),
        ds >= r - 1,
        format!("max generator degree {ds} >= r-1 = {}", r - 1),
    ));
    Ok(checks)
}

/// Bezout bound checks at every point with unconnected companions, using
/// the carrier line when two or more, and all lines through the single
/// companion otherwise.
fn bezout_suite(analyzer: &mut Analyzer) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let arr = analyzer.arr.clone();
    let lattice = analyzer.lattice.clone();
    for p_idx in 0..lattice.len() {
        let mut q_indices = Vec::new();
        for (i, q) in lattice.points.iter().enumerate() {
            if i != p_idx && !arr.connected(&lattice.points[p_idx].point, &q.point)? {
                q_indices.push(i);
            }
        }
        if q_indices.is_empty() {
            continue;
        }
        if q_indices.len() >= 2 {
            // carrier exists only when the points are collinear
            let rows: Vec<Vec<FieldScalar>> = q_indices
                .iter()
                .map(|&i| lattice.points[i].point.coords().to_vec())
                .collect();
            if crate::linalg::rank(arr.field(), rows, 3) <= 2 {
                let carrier = line_through(
                    &lattice.points[q_indices[0]].point,
                    &lattice.points[q_indices[1]].point,
                )?;
                checks.push(cover::bezout_bound_check(
                    &arr, &lattice, p_idx, &carrier,
                )?);
            }
            continue;
        }
        // single companion: every line of A through it, plus the join
        let q = &lattice.points[q_indices[0]];
        for &li in &q.incident {
            checks.push(cover::bezout_bound_check(
                &arr,
                &lattice,
                p_idx,
                &arr.lines()[li].clone(),
            )?);
        }
        let join = line_through(&lattice.points[p_idx].point, &q.point)?;
        checks.push(cover::bezout_bound_check(&arr, &lattice, p_idx, &join)?);
    }
    if checks.is_empty() {
        checks.push(Check::hypothesis_not_met(
            "rkex10",
            "every pair of multiple points is connected".to_string(),
        ));
    }
    Ok(checks)
}

/// Runs one verification suite on an analyzed arrangement.
pub fn verify(analyzer: &mut Analyzer, suite: &str) -> Result<VerifyReport> {
    let started = std::time::Instant::now();
    let mut report = VerifyReport::new(suite, analyzer.name.clone());
    if analyzer.is_pencil() {
        return Err(Error::Pencil(
            analyzer.lattice.points[0].point.to_string(),
        ));
    }
    let arr = analyzer.arr.clone();
    let lattice = analyzer.lattice.clone();
    match suite {
        "thmD" => {
            report.extend(dims_checks(&mut analyzer.module, &lattice));
            let profile = analyzer.profile()?.clone();
            report.extend(nhilbert_checks(&profile)?);
            // the two Euler formulas must agree; report the value
            let euler = euler_complement(&arr, &lattice)?;
            report.push(Check::pass(
                "euler",
                format!("Euler number of the complement = {euler}"),
            ));
        }
        "thm1" => report.extend(localder::check_all_local_properties(&arr, &lattice)?),
        "thm2" => report.push(localder::span_deg_dm3(&arr, &lattice, &mut analyzer.module)?),
        "thm3" => report.extend(localder::all_triple_checks(&arr, &lattice)?),
        "thmG-span" => report.push(localder::span_all_dm2(&arr, &lattice, &mut analyzer.module)?),
        "thm4" => report.extend(localder::freeness_checks(
            &arr,
            &lattice,
            &mut analyzer.module,
        )?),
        "prop40" => report.extend(localder::verify_prop40(
            &arr,
            &lattice,
            &mut analyzer.module,
        )?),
        "propthm10" => {
            let rho = analyzer.module.minimal_syzygy();
            report.extend(localder::tangency_checks(&arr, &lattice, &rho)?);
        }
        "thm1G-exact" => {
            for li in 0..arr.num_lines() {
                let ctx = DeletionContext::new(&arr, li)?;
                report.extend(delres::exactness_checks(
                    &ctx,
                    arr.num_lines() - 2,
                    &mut analyzer.module,
                )?);
            }
        }
        "propG1" => {
            for li in 0..arr.num_lines() {
                let ctx = DeletionContext::new(&arr, li)?;
                report.extend(delres::lift_local_checks(&ctx)?);
            }
        }
        "propG2" => {
            for li in 0..arr.num_lines() {
                let ctx = DeletionContext::new(&arr, li)?;
                report.extend(delres::restrict_local_checks(&ctx)?);
            }
        }
        "eqG7" => {
            for li in 0..arr.num_lines() {
                let ctx = DeletionContext::new(&arr, li)?;
                report.extend(delres::eqg7_checks(&ctx)?);
            }
        }
        "eqG8" => {
            for li in 0..arr.num_lines() {
                let ctx = DeletionContext::new(&arr, li)?;
                report.push(delres::eqg8_check(&ctx)?);
            }
        }
        "cor1G" => {
            for li in 0..arr.num_lines() {
                report.extend(cor1g_arrangement_checks(analyzer, li)?);
            }
        }
        "conj10" => {
            let d1 = analyzer.module.mdr();
            let result = analyzer.cover()?.clone();
            report.push(cover::conjecture_check(&result, d1));
        }
        "thm1000" => {
            for p_idx in 0..lattice.len() {
                let r = cover::thm1000_report(&arr, &lattice, &mut analyzer.module, p_idx)?;
                report.extend(r.checks);
            }
        }
        "thm100" => {
            let result = analyzer.cover()?.clone();
            report.extend(cover::cover_case_checks(
                &arr,
                &lattice,
                &mut analyzer.module,
                &result,
            )?);
        }
        "rkex10" => report.extend(bezout_suite(analyzer)?),
        "lem10" => {
            let max = lattice.max_multiplicity();
            for (i, p) in lattice.points.iter().enumerate() {
                if p.multiplicity == max {
                    report.extend(cover::projection_euler_checks(&arr, &lattice, i)?);
                }
            }
        }
        "full" => {
            for id in SUITE_IDS.iter().filter(|&&s| s != "full") {
                let sub = verify(analyzer, id)?;
                report.extend(sub.checks);
            }
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    report.millis = started.elapsed().as_millis();
    Ok(report)
}

/// Asserts the recorded invariants of a catalog entry against the analysis.
pub fn expected_checks(analyzer: &mut Analyzer, expected: &Expected) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    if let Some(tau) = expected.tau {
        checks.push(Check::assert(
            "expected.tau",
            analyzer.tau() == tau,
            format!("tau = {}, expected {tau}", analyzer.tau()),
        ));
    }
    if expected.free.is_some() || expected.exponents.is_some() || expected.mdr.is_some() {
        let profile = analyzer.profile()?;
        if let Some(free) = expected.free {
            checks.push(Check::assert(
                "expected.free",
                profile.free == free,
                format!("free = {}, expected {free}", profile.free),
            ));
        }
        if let Some(exponents) = &expected.exponents {
            let got: Vec<usize> = profile.gen_degrees.clone();
            checks.push(Check::assert(
                "expected.exponents",
                &got == exponents,
                format!("exponents {got:?}, expected {exponents:?}"),
            ));
        }
        if let Some(mdr) = expected.mdr {
            checks.push(Check::assert(
                "expected.mdr",
                profile.mdr == mdr,
                format!("mdr = {}, expected {mdr}", profile.mdr),
            ));
        }
    }
    if expected.cover_n.is_some() || expected.cover_n0_min.is_some() {
        let result = analyzer.cover()?.clone();
        if let Some(n) = expected.cover_n {
            checks.push(Check::assert(
                "expected.cover-n",
                result.n == n,
                format!("N = {}, expected {n}", result.n),
            ));
        }
        if let Some(n0_min) = expected.cover_n0_min {
            checks.push(Check::assert(
                "expected.cover-n0",
                result.n0 >= n0_min,
                format!("N0 = {} >= {n0_min}", result.n0),
            ));
        }
    }
    if let Some(ss) = expected.supersolvable {
        checks.push(Check::assert(
            "expected.supersolvable",
            is_supersolvable(&analyzer.arr, &analyzer.lattice)? == ss,
            format!("supersolvable expected {ss}"),
        ));
    }
    Ok(checks)
}

/// External-data check for a supplied pair of arrangements with equal
/// combinatorics whose syzygy dimensions differ in degree d-4.
pub fn ziegler_checks(a: &Arrangement, b: &Arrangement) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let (da, db) = (a.num_lines(), b.num_lines());
    checks.push(Check::assert(
        "ziegler.degree",
        da == 9 && db == 9,
        format!("external data: expected two 9-line arrangements, got {da} and {db}"),
    ));
    if da != 9 || db != 9 {
        return Ok(checks);
    }
    let mut ma = SyzygyModule::new(a.defining_poly());
    let mut mb = SyzygyModule::new(b.defining_poly());
    let (va, vb) = (ma.dim(5), mb.dim(5));
    checks.push(Check::assert(
        "ziegler.dim5",
        va != 0 && vb == 0,
        format!("external data: dim D_0(f)_5 = {va} vs {vb} (expected nonzero vs zero)"),
    ));
    Ok(checks)
}

// ---------------------------------------------------------------------------
// Analysis report
// ---------------------------------------------------------------------------

/// One document with the lattice summary, the graded profile, the Hilbert
/// function of N(f), the local derivation table, the cover optima and the
/// conjecture status.
pub struct AnalysisReport {
    pub target: String,
    pub facts: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl AnalysisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("analysis of {}\n", self.target);
        let width = self
            .facts
            .iter()
            .map(|(k, _)| k.len())
            .max()
            .unwrap_or(0);
        for (k, v) in &self.facts {
            out.push_str(&format!("  {k:<width$}  {v}\n"));
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                out.push_str(&format!(
                    "  [{:>18}] {}  {}\n",
                    c.status.to_string(),
                    c.id,
                    c.detail
                ));
            }
        }
        out
    }

    pub fn render_records(&self) -> String {
        let mut out = format!("target={}\n", self.target);
        for (k, v) in &self.facts {
            out.push_str(&format!("{}={}\n", k.replace(' ', "-"), v));
        }
        for c in &self.checks {
            out.push_str(&format!("check.{}={}\n", c.id, c.status));
        }
        out.push_str(&format!("passed={}\n", self.passed()));
        out
    }
}

/// Computes the full analysis document for one arrangement.
pub fn analyze(analyzer: &mut Analyzer, max_degree: Option<usize>) -> Result<AnalysisReport> {
    let mut facts = Vec::new();
    let mut checks = Vec::new();
    let d = analyzer.d();
    facts.push(("lines".into(), d.to_string()));
    facts.push((
        "field".into(),
        analyzer.arr.field().modulus_string(),
    ));
    let mut mult_counts: std::collections::BTreeMap<usize, usize> = Default::default();
    for p in &analyzer.lattice.points {
        *mult_counts.entry(p.multiplicity).or_default() += 1;
    }
    facts.push((
        "lattice".into(),
        mult_counts
            .iter()
            .map(|(m, c)| format!("{c} point(s) of multiplicity {m}"))
            .collect::<Vec<_>>()
            .join(", "),
    ));
    facts.push(("tau".into(), analyzer.tau().to_string()));
    facts.push((
        "euler".into(),
        euler_complement(&analyzer.arr, &analyzer.lattice)?.to_string(),
    ));
    if analyzer.is_pencil() {
        facts.push(("pencil".into(), "true".into()));
        return Ok(AnalysisReport {
            target: analyzer.name.clone(),
            facts,
            checks,
        });
    }
    facts.push((
        "supersolvable".into(),
        is_supersolvable(&analyzer.arr, &analyzer.lattice)?.to_string(),
    ));
    let profile = analyzer.profile()?.clone();
    let kmax = max_degree.unwrap_or(d - 1).min(d - 1);
    for k in 0..=kmax {
        facts.push((format!("dim.{k}"), profile.dims[k].to_string()));
    }
    facts.push(("mdr".into(), profile.mdr.to_string()));
    facts.push((
        "generators".into(),
        format!("{:?}", profile.gen_degrees),
    ));
    facts.push((
        "relations".into(),
        format!("{:?}", profile.rel_degrees),
    ));
    facts.push(("epsilons".into(), format!("{:?}", profile.epsilons)));
    facts.push(("free".into(), profile.free.to_string()));
    if let Some((e1, e2)) = profile.exponents {
        facts.push(("exponents".into(), format!("({e1},{e2})")));
    }
    if let Some(sigma) = profile.sigma {
        facts.push(("sigma".into(), sigma.to_string()));
    }
    let nh = profile.n_hilbert()?;
    facts.push((
        "nhilbert".into(),
        format!("{:?} on [0,{}]", nh.values, nh.t_max),
    ));
    // local derivations and their Bourbaki images
    let rho = analyzer.module.minimal_syzygy();
    for (i, p) in analyzer.lattice.points.iter().enumerate() {
        let g = localder::bourbaki_poly(&analyzer.arr, &analyzer.lattice, &rho, i)?;
        facts.push((
            format!("point.{}", p.point),
            format!(
                "multiplicity {}, local derivation degree {}, g_p = {}",
                p.multiplicity,
                d - p.multiplicity,
                g
            ),
        ));
    }
    let result = analyzer.cover()?.clone();
    facts.push(("cover.N".into(), result.n.to_string()));
    facts.push(("cover.N0".into(), result.n0.to_string()));
    facts.push((
        "cover.witness".into(),
        result
            .witness_n
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("; "),
    ));
    facts.push((
        "cover.witness0".into(),
        result
            .witness_n0
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join("; "),
    ));
    checks.push(cover::conjecture_check(&result, profile.mdr));
    checks.extend(dims_checks(&mut analyzer.module, &analyzer.lattice));
    checks.extend(nhilbert_checks(&profile)?);
    Ok(AnalysisReport {
        target: analyzer.name.clone(),
        facts,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_enough_entries() {
        let entries = catalog();
        assert!(entries.len() >= 8);
        assert!(entries.iter().any(|e| e.builder.is_none()));
    }

    #[test]
    fn catalog_builders_produce_valid_arrangements() {
        for entry in catalog() {
            if let Some(b) = entry.builder {
                let arr = b().unwrap();
                let lat = arr.lattice();
                assert!(lat.len() >= 1, "{}", entry.name);
            }
        }
    }

    #[test]
    fn f3_lattice_shape() {
        let arr = build_by_name("F3").unwrap();
        let lat = arr.lattice();
        let triples = lat.points.iter().filter(|p| p.multiplicity == 3).count();
        let doubles = lat.points.iter().filter(|p| p.multiplicity == 2).count();
        assert_eq!((triples, doubles), (4, 3));
    }

    #[test]
    fn hessian_lattice_shape() {
        let arr = hessian().unwrap();
        let lat = arr.lattice();
        let quads = lat.points.iter().filter(|p| p.multiplicity == 4).count();
        let doubles = lat.points.iter().filter(|p| p.multiplicity == 2).count();
        assert_eq!((quads, doubles), (9, 12));
        assert_eq!(lat.tjurina(), 93);
    }

    #[test]
    fn monomial_lattice_shape() {
        let arr = monomial_arrangement(3).unwrap();
        let lat = arr.lattice();
        // 3 coordinate vertices of multiplicity m plus m^2 triple points
        let verts = lat.points.iter().filter(|p| p.multiplicity == 3).count();
        assert_eq!(verts, 3 + 9);
        assert_eq!(lat.len(), 12);
    }

    #[test]
    fn random_arrangements_are_deterministic_and_valid() {
        let a = random_arrangement(1, 5, 3).unwrap();
        let b = random_arrangement(1, 5, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.num_lines(), 5);
        assert!(a.lattice().len() > 1);
        let c = random_arrangement(2, 7, 5).unwrap();
        assert_eq!(c.num_lines(), 7);
    }

    #[test]
    fn verify_dispatch_on_f3() {
        let mut analyzer = Analyzer::new("F3", build_by_name("F3").unwrap());
        let report = verify(&mut analyzer, "thm2").unwrap();
        assert!(report.passed());
        let report = verify(&mut analyzer, "thm3").unwrap();
        assert!(report
            .checks
            .iter()
            .all(|c| c.status == CheckStatus::HypothesisNotMet));
        let err = verify(&mut analyzer, "bogus").unwrap_err();
        assert!(matches!(err, Error::UnknownSuite(_)));
    }

    #[test]
    fn analyze_triangle() {
        let mut analyzer = Analyzer::new("TRIANGLE", triangle().unwrap());
        let report = analyze(&mut analyzer, None).unwrap();
        assert!(report.passed());
        let text = report.render_text();
        assert!(text.contains("tau"));
        let records = report.render_records();
        assert!(records.contains("cover.N=2"));
        assert!(records.contains("passed=true"));
    }

    #[test]
    fn pencils22_expected_values() {
        let mut analyzer = Analyzer::new("PENCILS(2,2)", pencils(2, 2).unwrap());
        let expected = Expected {
            free: Some(false),
            mdr: Some(2),
            tau: Some(6),
            ..Default::default()
        };
        let checks = expected_checks(&mut analyzer, &expected).unwrap();
        assert!(checks.iter().all(|c| c.status == CheckStatus::Pass), "{checks:?}");
        let profile = analyzer.profile().unwrap();
        assert_eq!(profile.gen_degrees, vec![2, 2, 2]);
    }
}
