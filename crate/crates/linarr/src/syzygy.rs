//! The graded module D_0(f) of Jacobian syzygies of a reduced plane curve:
//! exact graded pieces, minimal generator and relation degrees, freeness,
//! and the Hilbert function of the Jacobian cokernel N(f).
//!
//! Dimensions are found as exact kernels of the multiplication map
//! (a,b,c) -> a f_x + b f_y + c f_z on each graded piece; no Groebner bases
//! and no modular arithmetic anywhere.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::arrangement::{binom2, Lattice};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Echelon};
use crate::polyring::{dim_sk, monomials, Derivation, Exp, HomPoly};
use crate::report::Check;
use crate::scalars::{Field, FieldScalar};

/// A basis of the degree-k piece of D_0(f). Every element is checked to
/// annihilate f exactly at construction time.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    pub degree: usize,
    pub elements: Vec<Derivation>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

/// Degreewise summary of D_0(f) for an arrangement: dimensions up to d-1,
/// minimal generator and relation degrees, and the freeness verdict.
#[derive(Debug, Clone)]
pub struct SyzygyProfile {
    pub d: usize,
    pub tau: usize,
    /// dim D_0(f)_k for 0 <= k <= d-1.
    pub dims: Vec<usize>,
    pub mdr: usize,
    /// Minimal generator degrees, ascending with multiplicity.
    pub gen_degrees: Vec<usize>,
    /// Minimal relation degrees d_{j+2} + eps_j, ascending.
    pub rel_degrees: Vec<usize>,
    pub epsilons: Vec<usize>,
    /// Initial degree of N(f); None for free arrangements.
    pub sigma: Option<usize>,
    pub free: bool,
    pub exponents: Option<(usize, usize)>,
}

/// Hilbert function of N(f), supported in [0, T] with T = 3d-6.
#[derive(Debug, Clone)]
pub struct NHilbert {
    pub t_max: usize,
    pub values: Vec<usize>,
}

impl NHilbert {
    pub fn value(&self, j: isize) -> usize {
        if j < 0 || j as usize > self.t_max {
            0
        } else {
            self.values[j as usize]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn initial_degree(&self) -> Option<usize> {
        self.values.iter().position(|&v| v > 0)
    }
}

/// Binomial coefficient C(n,2) as the polynomial n(n-1)/2 over all integers,
/// the convention under which the dimension identities hold verbatim.
pub fn binom2_poly(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// The combinatorial dimension value tau + 3*C(j+2,2) - C(d+j+1,2), exact
/// for every j >= d-3.
pub fn dim_high_formula(d: usize, tau: usize, j: i64) -> i64 {
    tau as i64 + 3 * binom2_poly(j + 2) - binom2_poly(d as i64 + j + 1)
}

/// D_0(f) of a fixed squarefree homogeneous polynomial, with cached graded
/// pieces. Graded pieces for distinct degrees are independent computations.
pub struct SyzygyModule {
    f: HomPoly,
    partials: [HomPoly; 3],
    d: usize,
    bases: BTreeMap<usize, Arc<GradedBasis>>,
}

impl SyzygyModule {
    pub fn new(f: HomPoly) -> Self {
        assert!(f.degree() >= 2, "curve degree must be at least 2");
        assert_eq!(f.nvars(), 3);
        let partials = [f.partial(0), f.partial(1), f.partial(2)];
        let d = f.degree();
        SyzygyModule {
            f,
            partials,
            d,
            bases: BTreeMap::new(),
        }
    }

    pub fn f(&self) -> &HomPoly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> &Field {
        self.f.field()
    }

    /// Exact kernel basis of (S_k)^3 -> S_{k+d-1}, (a,b,c) -> a f_x + b f_y + c f_z.
    pub fn basis(&mut self, k: usize) -> Arc<GradedBasis> {
        if let Some(b) = self.bases.get(&k) {
            return b.clone();
        }
        let basis = Arc::new(self.compute_basis(k));
        self.bases.insert(k, basis.clone());
        basis
    }

    fn compute_basis(&self, k: usize) -> GradedBasis {
        let field = self.f.field().clone();
        let src = monomials(3, k);
        let cols = 3 * src.len();
        let target_deg = k + self.d - 1;
        let target = monomials(3, target_deg);
        let index: HashMap<Exp, usize> =
            target.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut rows = vec![vec![FieldScalar::zero(&field); cols]; target.len()];
        for (comp, partial) in self.partials.iter().enumerate() {
            for (ci, mono) in src.iter().enumerate() {
                let col = comp * src.len() + ci;
                for (e, c) in partial.terms() {
                    let e2 = [e[0] + mono[0], e[1] + mono[1], e[2] + mono[2]];
                    let r = index[&e2];
                    rows[r][col] = c.clone();
                }
            }
        }
        let kernel = kernel_basis(&field, rows, cols);
        let elements: Vec<Derivation> = kernel
            .iter()
            .map(|v| {
                let n = src.len();
                let mk = |chunk: &[FieldScalar]| {
                    HomPoly::from_terms(
                        &field,
                        3,
                        k,
                        src.iter().zip(chunk).map(|(e, c)| (*e, c.clone())),
                    )
                };
                Derivation::new(mk(&v[..n]), mk(&v[n..2 * n]), mk(&v[2 * n..]))
            })
            .collect();
        for delta in &elements {
            assert!(
                delta.kills(&self.f),
                "kernel element must annihilate f exactly"
            );
        }
        GradedBasis {
            degree: k,
            elements,
        }
    }

    pub fn dim(&mut self, k: isize) -> usize {
        if k < 0 {
            0
        } else {
            self.basis(k as usize).dim()
        }
    }

    /// Minimal degree of a Jacobian relation; at most d-2 for arrangements
    /// and at most d-1 in general (the reduced Koszul syzygies).
    pub fn mdr(&mut self) -> usize {
        for k in 0..self.d {
            if self.dim(k as isize) > 0 {
                return k;
            }
        }
        unreachable!("a reduced curve has a syzygy of degree <= d-1")
    }

    /// A deterministic minimal-degree syzygy: the first kernel basis vector
    /// in degree mdr under the fixed monomial order.
    pub fn minimal_syzygy(&mut self) -> Derivation {
        let k = self.mdr();
        self.basis(k).elements[0].clone()
    }

    /// Minimal generator degrees with explicit lifted generators, computed
    /// degreewise: new generators in degree k span D_0(f)_k over S_1 * D_0(f)_{k-1}.
    pub fn generators(&mut self, max_degree: usize) -> (Vec<usize>, Vec<Derivation>) {
        let field = self.f.field().clone();
        let mut degrees = Vec::new();
        let mut gens: Vec<Derivation> = Vec::new();
        for k in 0..=max_degree {
            let basis_k = self.basis(k);
            if basis_k.dim() == 0 {
                continue;
            }
            let ambient = 3 * dim_sk(3, k as isize);
            let mut ech = Echelon::new(&field, ambient);
            if k >= 1 {
                let below = self.basis(k - 1);
                for delta in &below.elements {
                    for var in 0..3 {
                        let v = HomPoly::variable(&field, 3, var);
                        ech.insert(delta.mul_poly(&v).coeff_vector());
                    }
                }
            }
            for delta in &basis_k.elements {
                if ech.insert(delta.coeff_vector()) {
                    degrees.push(k);
                    gens.push(delta.clone());
                }
            }
        }
        (degrees, gens)
    }

    /// Minimal relation degrees among the given generators, computed by the
    /// same degreewise method inside the free module sum_i S(-d_i). The
    /// sweep runs to d-1, the Castelnuovo-Mumford bound for arrangements.
    pub fn relation_degrees(
        &mut self,
        gen_degrees: &[usize],
        gens: &[Derivation],
    ) -> Result<Vec<usize>> {
        let field = self.f.field().clone();
        let d = self.d;
        let s = gens.len();
        if s < 2 {
            return Err(Error::Internal(format!(
                "a rank-2 syzygy module needs at least 2 generators, found {s}"
            )));
        }
        let mut rel_degrees: Vec<usize> = Vec::new();
        let mut prev_kernel: Vec<Vec<FieldScalar>> = Vec::new();
        let mut prev_t = 0usize;
        let start = gen_degrees[0];
        for t in start..=d.saturating_sub(1) {
            // block layout for degree t: per generator i, monomials of S_{t-d_i}
            let blocks: Vec<Vec<Exp>> = gen_degrees
                .iter()
                .map(|&di| {
                    if t >= di {
                        monomials(3, t - di)
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            let offsets: Vec<usize> = blocks
                .iter()
                .scan(0usize, |acc, b| {
                    let o = *acc;
                    *acc += b.len();
                    Some(o)
                })
                .collect();
            let cols: usize = blocks.iter().map(|b| b.len()).sum();
            if cols == 0 {
                continue;
            }
            let target = monomials(3, t);
            let tindex: HashMap<Exp, usize> =
                target.iter().enumerate().map(|(i, e)| (*e, i)).collect();
            let nrows = 3 * target.len();
            let mut rows = vec![vec![FieldScalar::zero(&field); cols]; nrows];
            for (i, gen) in gens.iter().enumerate() {
                for (ci, mono) in blocks[i].iter().enumerate() {
                    let col = offsets[i] + ci;
                    for (comp, part) in gen.components().iter().enumerate() {
                        for (e, c) in part.terms() {
                            let e2 = [e[0] + mono[0], e[1] + mono[1], e[2] + mono[2]];
                            let r = comp * target.len() + tindex[&e2];
                            rows[r][col] = c.clone();
                        }
                    }
                }
            }
            let kernel = kernel_basis(&field, rows, cols);
            // embed S_1 * (kernel at t-1) into the degree-t coordinates
            let mut ech = Echelon::new(&field, cols);
            if t == prev_t + 1 && !prev_kernel.is_empty() {
                let prev_blocks: Vec<Vec<Exp>> = gen_degrees
                    .iter()
                    .map(|&di| {
                        if t - 1 >= di {
                            monomials(3, t - 1 - di)
                        } else {
                            Vec::new()
                        }
                    })
                    .collect();
                let block_index: Vec<HashMap<Exp, usize>> = blocks
                    .iter()
                    .map(|b| b.iter().enumerate().map(|(i, e)| (*e, i)).collect())
                    .collect();
                for rel in &prev_kernel {
                    for var in 0..3 {
                        let mut v = vec![FieldScalar::zero(&field); cols];
                        let mut off = 0usize;
                        for (i, pb) in prev_blocks.iter().enumerate() {
                            for (ci, mono) in pb.iter().enumerate() {
                                let coeff = &rel[off + ci];
                                if coeff.is_zero() {
                                    continue;
                                }
                                let mut e2 = *mono;
                                e2[var] += 1;
                                let target_ci = block_index[i][&e2];
                                let slot = &mut v[offsets[i] + target_ci];
                                *slot = &*slot + coeff;
                            }
                            off += pb.len();
                        }
                        ech.insert(v);
                    }
                }
            }
            let new_count = kernel.len() - ech.rank();
            for _ in 0..new_count {
                rel_degrees.push(t);
            }
            prev_kernel = kernel;
            prev_t = t;
        }
        if rel_degrees.len() != s - 2 {
            return Err(Error::Internal(format!(
                "expected {} minimal relations, found {} up to degree {}",
                s - 2,
                rel_degrees.len(),
                d - 1
            )));
        }
        Ok(rel_degrees)
    }

    /// Full profile for an arrangement with global Tjurina number tau.
    /// The degreewise data live in 0..=d-1; freeness is decided by s = 2 and
    /// cross-checked against the Tjurina criterion, which must agree.
    pub fn profile(&mut self, tau: usize) -> Result<SyzygyProfile> {
        let d = self.d;
        let dims: Vec<usize> = (0..d).map(|k| self.dim(k as isize)).collect();
        let mdr = self.mdr();
        if mdr > d - 2 {
            return Err(Error::Internal(format!(
                "arrangement mdr {mdr} exceeds d-2 = {}",
                d - 2
            )));
        }
        let (gen_degrees, gens) = self.generators(d - 2);
        let s = gens.len();
        let free = s == 2;
        let free_by_tau =
            tau == (d - 1) * (d - 1) - mdr * (d - 1 - mdr);
        if free != free_by_tau {
            return Err(Error::Internal(format!(
                "freeness tests disagree: s = {s} but tau-criterion says {free_by_tau}"
            )));
        }
        let rel_degrees = self.relation_degrees(&gen_degrees, &gens)?;
        let mut epsilons = Vec::new();
        for (j, &r) in rel_degrees.iter().enumerate() {
            let dj2 = gen_degrees[j + 2];
            if r < dj2 + 1 {
                return Err(Error::Internal(format!(
                    "relation degree {r} below generator degree {dj2} + 1"
                )));
            }
            epsilons.push(r - dj2);
        }
        let sigma = if free {
            None
        } else {
            Some(2 * (d - 1) - rel_degrees.last().copied().unwrap())
        };
        let exponents = if free {
            let (e1, e2) = (gen_degrees[0], gen_degrees[1]);
            if e1 + e2 != d - 1 {
                return Err(Error::Internal(format!(
                    "free exponents ({e1},{e2}) do not sum to d-1"
                )));
            }
            Some((e1, e2))
        } else {
            None
        };
        Ok(SyzygyProfile {
            d,
            tau,
            dims,
            mdr,
            gen_degrees,
            rel_degrees,
            epsilons,
            sigma,
            free,
            exponents,
        })
    }
}

impl SyzygyProfile {
    pub fn s(&self) -> usize {
        self.gen_degrees.len()
    }

    pub fn dim(&self, k: isize) -> i64 {
        if k < 0 {
            0
        } else if (k as usize) < self.dims.len() {
            self.dims[k as usize] as i64
        } else {
            dim_high_formula(self.d, self.tau, k as i64)
        }
    }

    /// sigma(A) = 2(d-1) - max relation degree; defined only when N(f) != 0.
    pub fn sigma_from_resolution(&self) -> Result<usize> {
        self.sigma.ok_or_else(|| {
            Error::Undefined("sigma", "N(f) = 0 for a free arrangement".into())
        })
    }

    /// Hilbert function of N(f) from the degreewise dimension identity.
    pub fn n_hilbert(&self) -> Result<NHilbert> {
        let d = self.d as i64;
        let t_max = 3 * d - 6;
        let mut values = Vec::with_capacity(t_max as usize + 1);
        for j in 0..=t_max {
            let lhs = self.dim((j - d + 1) as isize) + self.dim((2 * d - 5 - j) as isize);
            let rhs = self.tau as i64 + 3 * binom2_poly(j - d + 3) - binom2_poly(j + 2);
            let n = lhs - rhs;
            if n < 0 {
                return Err(Error::Internal(format!(
                    "negative Hilbert value n_{j} = {n}"
                )));
            }
            values.push(n as usize);
        }
        Ok(NHilbert {
            t_max: t_max as usize,
            values,
        })
    }
}

/// Dimension identities at j in {d-3, d-2, d-1} plus the double-point
/// specialisations and the lower bound over high-multiplicity points.
pub fn dims_checks(module: &mut SyzygyModule, lattice: &Lattice) -> Vec<Check> {
    let d = module.degree();
    let tau = lattice.tjurina();
    let mut checks = Vec::new();
    for j in [d as i64 - 3, d as i64 - 2, d as i64 - 1] {
        if j < 0 {
            continue;
        }
        let direct = module.dim(j as isize) as i64;
        let formula = dim_high_formula(d, tau, j);
        checks.push(Check::assert(
            format!("thmD.dim.{j}"),
            direct == formula,
            format!("dim D_0(f)_{j} = {direct}, combinatorial value {formula}"),
        ));
    }
    let cord1: usize = lattice
        .points
        .iter()
        .filter(|p| p.multiplicity >= 3)
        .map(|p| binom2(p.multiplicity - 1))
        .sum();
    if d >= 3 {
        let dim_d3 = module.dim(d as isize - 3);
        checks.push(Check::assert(
            "corD.1",
            dim_d3 == cord1,
            format!("dim D_0(f)_{} = {dim_d3}, point-count value {cord1}", d - 3),
        ));
        let only_doubles = lattice.points.iter().all(|p| p.multiplicity == 2);
        checks.push(Check::assert(
            "corD.1.doubles",
            (dim_d3 == 0) == only_doubles,
            format!("dim = 0 iff only double points (dim {dim_d3}, only doubles {only_doubles})"),
        ));
    }
    if d >= 2 {
        let dim_d2 = module.dim(d as isize - 2);
        checks.push(Check::assert(
            "corD.2",
            dim_d2 == cord1 + d - 1,
            format!(
                "dim D_0(f)_{} = {dim_d2}, point-count value {}",
                d - 2,
                cord1 + d - 1
            ),
        ));
    }
    for j in 4..=d {
        let bound: usize = lattice
            .points
            .iter()
            .filter(|p| p.multiplicity >= j)
            .map(|p| binom2(p.multiplicity - j + 2))
            .sum();
        if bound == 0 {
            continue;
        }
        let dim = module.dim((d - j) as isize);
        checks.push(Check::assert(
            format!("cor20.j={j}"),
            dim >= bound,
            format!("dim D_0(f)_{} = {dim} >= {bound}", d - j),
        ));
    }
    checks
}

/// Structural checks on the Hilbert function of N(f): symmetry, the
/// unimodality chain, vanishing at 2d-4, and the initial degree matching
/// the resolution value of sigma.
pub fn nhilbert_checks(profile: &SyzygyProfile) -> Result<Vec<Check>> {
    let nh = profile.n_hilbert()?;
    let t = nh.t_max;
    let mut checks = Vec::new();
    let dual = (0..=t).all(|k| nh.values[k] == nh.values[t - k]);
    checks.push(Check::assert(
        "nhilbert.duality",
        dual,
        format!("n_k = n_(T-k) for T = {t}"),
    ));
    let mid = t.div_ceil(2);
    let rising = (0..mid).all(|k| nh.values[k] <= nh.values[k + 1]);
    let falling = (mid..t).all(|k| nh.values[k] >= nh.values[k + 1]);
    checks.push(Check::assert(
        "nhilbert.unimodal",
        rising && falling,
        format!("unimodal about T/2 = {mid}"),
    ));
    let at_2d4 = nh.value(2 * profile.d as isize - 4);
    checks.push(Check::assert(
        "nhilbert.vanish.2d-4",
        at_2d4 == 0,
        format!("n_(2d-4) = {at_2d4}"),
    ));
    if profile.free {
        checks.push(Check::assert(
            "nhilbert.free-zero",
            nh.is_zero(),
            "N(f) vanishes identically for a free arrangement".to_string(),
        ));
    } else {
        let sigma = profile.sigma_from_resolution()?;
        let indeg = nh.initial_degree();
        checks.push(Check::assert(
            "nhilbert.sigma",
            indeg == Some(sigma),
            format!("initial degree {indeg:?} vs sigma = {sigma}"),
        ));
        checks.push(Check::assert(
            "sigma.lower-bound",
            sigma >= profile.d - 1,
            format!("sigma = {sigma} >= d-1 = {}", profile.d - 1),
        ));
    }
    for (j, &e) in profile.epsilons.iter().enumerate() {
        checks.push(Check::assert(
            format!("epsilon.{}", j + 1),
            e >= 1,
            format!("epsilon_{} = {e} >= 1", j + 1),
        ));
    }
    if let Some(&ds) = profile.gen_degrees.last() {
        checks.push(Check::assert(
            "castelnuovo.ds",
            ds <= profile.d - 2,
            format!("d_s = {ds} <= d-2"),
        ));
    }
    if let Some(&rmax) = profile.rel_degrees.last() {
        checks.push(Check::assert(
            "castelnuovo.rel",
            rmax <= profile.d - 1,
            format!("max relation degree {rmax} <= d-1"),
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{Arrangement, LinearForm};
    use crate::scalars::NumberFieldSpec;

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

    /// Two generic pencils of 2 lines each: exponents (2,2,2).
    fn pencils22() -> Arrangement {
        let f = q();
        Arrangement::new(
            &f,
            vec![
                LinearForm::from_ints(&f, 1, -1, 0),
                LinearForm::from_ints(&f, 1, -2, 0),
                LinearForm::from_ints(&f, 0, 1, -1),
                LinearForm::from_ints(&f, 0, 1, -2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn triangle_graded_pieces() {
        let mut m = SyzygyModule::new(triangle().defining_poly());
        assert_eq!(m.dim(0), 0);
        assert_eq!(m.dim(1), 2);
        assert_eq!(m.mdr(), 1);
    }

    #[test]
    fn f3_dimension_nine_in_degree_four() {
        let mut m = SyzygyModule::new(full_f3().defining_poly());
        assert_eq!(m.dim(4), 9);
        assert_eq!(m.mdr(), 2);
    }

    #[test]
    fn dims_vanish_below_mdr() {
        let mut m = SyzygyModule::new(full_f3().defining_poly());
        assert_eq!(m.dim(0), 0);
        assert_eq!(m.dim(1), 0);
    }

    #[test]
    fn nodal_four_lines_mdr_is_d_minus_2() {
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
        let mut m = SyzygyModule::new(arr.defining_poly());
        assert_eq!(m.mdr(), 2);
    }

    #[test]
    fn f3_profile_free_with_exponents_2_3() {
        let arr = full_f3();
        let lat = arr.lattice();
        let mut m = SyzygyModule::new(arr.defining_poly());
        let p = m.profile(lat.tjurina()).unwrap();
        assert!(p.free);
        assert_eq!(p.exponents, Some((2, 3)));
        assert_eq!(p.gen_degrees, vec![2, 3]);
        assert!(p.rel_degrees.is_empty());
        assert!(matches!(
            p.sigma_from_resolution().unwrap_err(),
            Error::Undefined("sigma", _)
        ));
        let nh = p.n_hilbert().unwrap();
        assert!(nh.is_zero());
    }

    #[test]
    fn two_pencils_profile() {
        let arr = pencils22();
        let lat = arr.lattice();
        assert_eq!(lat.tjurina(), 6);
        let mut m = SyzygyModule::new(arr.defining_poly());
        let p = m.profile(6).unwrap();
        assert!(!p.free);
        assert_eq!(p.gen_degrees, vec![2, 2, 2]);
        // single relation in degree 3: forced by the Castelnuovo bound
        assert_eq!(p.rel_degrees, vec![3]);
        assert_eq!(p.epsilons, vec![1]);
        assert_eq!(p.sigma_from_resolution().unwrap(), 3);
        let nh = p.n_hilbert().unwrap();
        // support concentrated at j = 3 = sigma, with duality about T = 6
        assert_eq!(nh.initial_degree(), Some(3));
        assert_eq!(nh.value(3), 1);
        assert!(nhilbert_checks(&p)
            .unwrap()
            .iter()
            .all(|c| c.status == crate::report::CheckStatus::Pass));
    }

    #[test]
    fn f3_dims_match_combinatorial_formula() {
        let arr = full_f3();
        let lat = arr.lattice();
        let mut m = SyzygyModule::new(arr.defining_poly());
        // j = 3: tau - C(d,2) = 19 - 15 = 4 and point-count sum = 4
        assert_eq!(m.dim(3), 4);
        let checks = dims_checks(&mut m, &lat);
        assert!(
            checks
                .iter()
                .all(|c| c.status == crate::report::CheckStatus::Pass),
            "{checks:?}"
        );
    }

    #[test]
    fn triangle_dims_checks() {
        let arr = triangle();
        let lat = arr.lattice();
        let mut m = SyzygyModule::new(arr.defining_poly());
        assert_eq!(m.dim(0), 0);
        assert_eq!(m.dim(1), 2); // d-1 = 2 for a nodal arrangement
        let checks = dims_checks(&mut m, &lat);
        assert!(checks
            .iter()
            .all(|c| c.status == crate::report::CheckStatus::Pass));
    }
}
