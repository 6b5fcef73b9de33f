//! The concrete centralizer of the diagonal U_q(sl2) action on a triple
//! tensor product: commutant dimension and basis, surjectivity of the
//! Casimir map, minimal polynomials, and evaluation of the AW relations on
//! the Casimir matrices.
//!
//! The commutant is computed through a verified change of basis rather than
//! one flat elimination: columns of P are F-orbits of highest-weight vectors
//! (nullspaces of E per weight). After checking that P is invertible and
//! that the conjugated generators are block diagonal with repeated blocks,
//! the commutation system decouples into small intertwiner systems whose
//! nullities are computed honestly. Conjugation preserves nullity, so the
//! reported dimension is the dimension of the solution space of the
//! commutation system itself — no representation-theoretic value is assumed.
//! The flat brute-force system is retained (`commutant_system`) and used as
//! the oracle on small products.

use crate::aw;
use crate::halfint::SpinTriple;
use crate::matrices::{nullspace, rank_of, ExactMatrix, Field, Matrix, Mode};
use crate::quantum::{self, CasimirSet, Gen};
use crate::scalars::{Rat, SampleGen, Scalar};
use crate::spins;
use crate::{Error, Result};

/// Hard cap on the product dimension (the paper's cases stay at 64).
const DIM_CAP: usize = 4096;

// ---------------------------------------------------------------------------
// Flat commutant system (oracle)
// ---------------------------------------------------------------------------

/// The linear system [M, X] = 0 for all X in `gens`, flattened over the N^2
/// unknowns M[a][b] (row-major). One block of N^2 equations per generator.
pub fn commutant_system<F: Field>(gens: &[&Matrix<F>]) -> Matrix<F> {
    let n = gens[0].rows;
    let mut sys: Matrix<F> = Matrix::zeros(gens.len() * n * n, n * n);
    for (g, x) in gens.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = g * n * n + i * n + j;
                // sum_k X[i,k] M[k,j] - M[i,k] X[k,j]
                for k in 0..n {
                    if !x[(i, k)].is_zero() {
                        let e = sys[(row, k * n + j)].add_ref(&x[(i, k)]);
                        sys[(row, k * n + j)] = e;
                    }
                    if !x[(k, j)].is_zero() {
                        let e = sys[(row, i * n + k)].sub_ref(&x[(k, j)]);
                        sys[(row, i * n + k)] = e;
                    }
                }
            }
        }
    }
    sys
}

// ---------------------------------------------------------------------------
// Orbit decomposition
// ---------------------------------------------------------------------------

struct OrbitDecomp<F: Field> {
    /// Orbit lengths in column order of P.
    orbit_lens: Vec<usize>,
    /// Class id of each orbit (orbits with equal conjugated blocks share one).
    orbit_class: Vec<usize>,
    /// Per class: the three block matrices (E, F, K) and the multiplicity.
    class_blocks: Vec<[Matrix<F>; 3]>,
    class_mult: Vec<usize>,
    p: Matrix<F>,
    p_inv: Matrix<F>,
}

fn vec_is_zero<F: Field>(v: &[F]) -> bool {
    v.iter().all(|e| e.is_zero())
}

/// Decompose the module into F-orbits of highest-weight vectors and verify
/// the block structure of the conjugated generators.
fn orbit_decompose<F: Field>(
    e: &Matrix<F>,
    f: &Matrix<F>,
    k: &Matrix<F>,
    weights: &[i64],
) -> Result<OrbitDecomp<F>> {
    let n = e.rows;
    let mut distinct: Vec<i64> = weights.to_vec();
    distinct.sort_unstable();
    distinct.dedup();

    // highest-weight vectors per weight: nullspace of E restricted to the
    // weight's coordinate block
    let mut columns: Vec<Vec<F>> = vec![];
    let mut orbit_lens = vec![];
    for &w in distinct.iter().rev() {
        let idx: Vec<usize> = (0..n).filter(|&i| weights[i] == w).collect();
        if idx.is_empty() {
            continue;
        }
        let mut sub: Matrix<F> = Matrix::zeros(n, idx.len());
        for (c, &i) in idx.iter().enumerate() {
            for r in 0..n {
                sub[(r, c)] = e[(r, i)].clone();
            }
        }
        for nv in nullspace(&sub) {
            // scatter back to full coordinates
            let mut u = vec![F::f_zero(); n];
            for (c, &i) in idx.iter().enumerate() {
                u[i] = nv[c].clone();
            }
            // F-orbit
            let mut orbit = vec![u.clone()];
            let mut cur = u;
            loop {
                let next = f.apply(&cur);
                if vec_is_zero(&next) {
                    break;
                }
                orbit.push(next.clone());
                cur = next;
                if orbit.len() > n {
                    return Err(Error::Unsupported("F-orbit did not terminate".into()));
                }
            }
            orbit_lens.push(orbit.len());
            columns.extend(orbit);
        }
    }
    if columns.len() != n {
        return Err(Error::Unsupported(format!(
            "orbit basis has {} vectors, expected {}",
            columns.len(),
            n
        )));
    }
    let mut p: Matrix<F> = Matrix::zeros(n, n);
    for (c, col) in columns.iter().enumerate() {
        for r in 0..n {
            p[(r, c)] = col[r].clone();
        }
    }
    let p_inv = p.inverse()?;

    // conjugate and slice into blocks
    let mut starts = vec![0usize];
    for &l in &orbit_lens {
        let last = *starts.last().unwrap();
        starts.push(last + l);
    }
    let mut per_orbit: Vec<[Matrix<F>; 3]> = vec![];
    for x in [e, f, k] {
        let hat = p_inv.mul(&x.mul(&p));
        // verify block-diagonal shape wrt orbit ranges
        for (oi, &s) in starts[..orbit_lens.len()].iter().enumerate() {
            let len = orbit_lens[oi];
            for r in 0..n {
                for c in s..s + len {
                    let inside = r >= s && r < s + len;
                    if !inside && !hat[(r, c)].is_zero() {
                        return Err(Error::Unsupported(
                            "conjugated generator is not block diagonal".into(),
                        ));
                    }
                }
            }
        }
        for (oi, &s) in starts[..orbit_lens.len()].iter().enumerate() {
            let len = orbit_lens[oi];
            let mut blk: Matrix<F> = Matrix::zeros(len, len);
            for r in 0..len {
                for c in 0..len {
                    blk[(r, c)] = hat[(s + r, s + c)].clone();
                }
            }
            if per_orbit.len() <= oi {
                per_orbit.push([blk.clone(), blk.clone(), blk.clone()]);
            }
            let slot = match x as *const _ {
                _ if std::ptr::eq(x, e) => 0,
                _ if std::ptr::eq(x, f) => 1,
                _ => 2,
            };
            per_orbit[oi][slot] = blk;
        }
    }

    // group orbits into classes by equal block triples
    let mut class_blocks: Vec<[Matrix<F>; 3]> = vec![];
    let mut class_mult: Vec<usize> = vec![];
    let mut orbit_class = vec![0usize; orbit_lens.len()];
    for (oi, blocks) in per_orbit.iter().enumerate() {
        let found = class_blocks.iter().position(|cb| {
            cb[0] == blocks[0] && cb[1] == blocks[1] && cb[2] == blocks[2]
        });
        match found {
            Some(ci) => {
                class_mult[ci] += 1;
                orbit_class[oi] = ci;
            }
            None => {
                class_blocks.push(blocks.clone());
                class_mult.push(1);
                orbit_class[oi] = class_blocks.len() - 1;
            }
        }
    }
    Ok(OrbitDecomp { orbit_lens, orbit_class, class_blocks, class_mult, p, p_inv })
}

/// Nullity of the intertwiner system { X_c M = M X_d : X in blocks }.
fn intertwiner_nullity<F: Field>(c: &[Matrix<F>; 3], d: &[Matrix<F>; 3]) -> usize {
    let a = c[0].rows;
    let b = d[0].rows;
    let mut sys: Matrix<F> = Matrix::zeros(3 * a * b, a * b);
    for (g, (xc, xd)) in c.iter().zip(d.iter()).enumerate() {
        for i in 0..a {
            for j in 0..b {
                let row = g * a * b + i * b + j;
                for t in 0..a {
                    if !xc[(i, t)].is_zero() {
                        let e = sys[(row, t * b + j)].add_ref(&xc[(i, t)]);
                        sys[(row, t * b + j)] = e;
                    }
                }
                for t in 0..b {
                    if !xd[(t, j)].is_zero() {
                        let e = sys[(row, i * b + t)].sub_ref(&xd[(t, j)]);
                        sys[(row, i * b + t)] = e;
                    }
                }
            }
        }
    }
    a * b - rank_of(&sys)
}

fn commutant_core<F: Field>(
    e: &Matrix<F>,
    f: &Matrix<F>,
    k: &Matrix<F>,
    weights: &[i64],
    want_basis: bool,
) -> Result<(usize, Vec<Matrix<F>>)> {
    let dec = orbit_decompose(e, f, k, weights)?;
    let ncls = dec.class_blocks.len();
    let mut dim = 0usize;
    let mut nu = vec![vec![0usize; ncls]; ncls];
    for a in 0..ncls {
        for b in 0..ncls {
            nu[a][b] = intertwiner_nullity(&dec.class_blocks[a], &dec.class_blocks[b]);
            dim += dec.class_mult[a] * dec.class_mult[b] * nu[a][b];
        }
    }
    let mut basis = vec![];
    if want_basis {
        let n = e.rows;
        let mut starts = vec![0usize];
        for &l in &dec.orbit_lens {
            let last = *starts.last().unwrap();
            starts.push(last + l);
        }
        // solution bases of the small systems, then lift through P
        for (o1, &c1) in dec.orbit_class.iter().enumerate() {
            for (o2, &c2) in dec.orbit_class.iter().enumerate() {
                if nu[c1][c2] == 0 {
                    continue;
                }
                let sols = intertwiner_solutions(&dec.class_blocks[c1], &dec.class_blocks[c2]);
                for s in sols {
                    let a = dec.orbit_lens[o1];
                    let b = dec.orbit_lens[o2];
                    let mut hat: Matrix<F> = Matrix::zeros(n, n);
                    for i in 0..a {
                        for j in 0..b {
                            hat[(starts[o1] + i, starts[o2] + j)] = s[i * b + j].clone();
                        }
                    }
                    basis.push(dec.p.mul(&hat).mul(&dec.p_inv));
                }
            }
        }
        // verify every basis element commutes with all three generators
        for m in &basis {
            for x in [e, f, k] {
                if !m.commutator(x).is_zero() {
                    return Err(Error::Unsupported(
                        "constructed commutant element fails to commute".into(),
                    ));
                }
            }
        }
        if basis.len() != dim {
            return Err(Error::Unsupported(format!(
                "basis count {} != computed dimension {}",
                basis.len(),
                dim
            )));
        }
    }
    Ok((dim, basis))
}

fn intertwiner_solutions<F: Field>(c: &[Matrix<F>; 3], d: &[Matrix<F>; 3]) -> Vec<Vec<F>> {
    let a = c[0].rows;
    let b = d[0].rows;
    let mut sys: Matrix<F> = Matrix::zeros(3 * a * b, a * b);
    for (g, (xc, xd)) in c.iter().zip(d.iter()).enumerate() {
        for i in 0..a {
            for j in 0..b {
                let row = g * a * b + i * b + j;
                for t in 0..a {
                    if !xc[(i, t)].is_zero() {
                        let e = sys[(row, t * b + j)].add_ref(&xc[(i, t)]);
                        sys[(row, t * b + j)] = e;
                    }
                }
                for t in 0..b {
                    if !xd[(t, j)].is_zero() {
                        let e = sys[(row, i * b + t)].sub_ref(&xd[(t, j)]);
                        sys[(row, i * b + t)] = e;
                    }
                }
            }
        }
    }
    nullspace(&sys)
}

// ---------------------------------------------------------------------------
// Public commutant API
// ---------------------------------------------------------------------------

/// Commutant of the diagonal action, with the basis kept only in EXACT mode.
#[derive(Debug)]
pub struct CommutantBasis {
    pub spins: SpinTriple,
    pub mode: String,
    pub dim: usize,
    /// Dimensions observed per sample point (SAMPLED); all must agree.
    pub sample_dims: Vec<usize>,
    pub samples: Vec<Rat>,
    pub basis: Vec<ExactMatrix>,
}

impl CommutantBasis {
    pub fn samples_agree(&self) -> bool {
        self.sample_dims.iter().all(|&d| d == self.dim)
    }
}

/// Twice-weights of the standard basis, read off the diagonal of Delta2(K).
fn twice_weights(k: &ExactMatrix) -> Result<Vec<i64>> {
    let mut out = vec![];
    for i in 0..k.rows {
        let e = &k[(i, i)];
        if e.is_zero() || !e.den().is_one() || e.num().term_count() != 1 {
            return Err(Error::Unsupported("K image is not a weight grading".into()));
        }
        out.push(e.num().min_exp().unwrap());
    }
    Ok(out)
}

/// Compute the commutant of {Delta2(E), Delta2(F), Delta2(qH)}.
///
/// EXACT mode returns a symbolic basis; SAMPLED mode evaluates at
/// `nsamples` points and reports the per-sample dimensions.
pub fn commutant(t: &SpinTriple, mode: &Mode, nsamples: usize) -> Result<CommutantBasis> {
    if t.product_dim() > DIM_CAP {
        return Err(Error::ResourceLimit(format!(
            "product dimension {} exceeds cap {DIM_CAP}",
            t.product_dim()
        )));
    }
    let e = quantum::delta2_image(Gen::E, t.0, t.1, t.2)?;
    let f = quantum::delta2_image(Gen::F, t.0, t.1, t.2)?;
    let k = quantum::delta2_image(Gen::K, t.0, t.1, t.2)?;
    let weights = twice_weights(&k)?;
    match mode {
        Mode::Exact => {
            let (dim, basis) = commutant_core(&e, &f, &k, &weights, true)?;
            Ok(CommutantBasis {
                spins: *t,
                mode: "EXACT".into(),
                dim,
                sample_dims: vec![],
                samples: vec![],
                basis,
            })
        }
        Mode::Sampled(gen) => {
            let mut gen = gen.clone();
            let mut sample_dims = vec![];
            let mut samples = vec![];
            for _ in 0..nsamples.max(1) {
                // resample on pole
                let mut done = false;
                for _ in 0..8 {
                    let p = gen.next_point();
                    let (es, fs, ks) = match (
                        e.eval_v(&p.value),
                        f.eval_v(&p.value),
                        k.eval_v(&p.value),
                    ) {
                        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                        _ => continue,
                    };
                    let (dim, _) = commutant_core(&es, &fs, &ks, &weights, false)?;
                    sample_dims.push(dim);
                    samples.push(p.value.clone());
                    done = true;
                    break;
                }
                if !done {
                    return Err(Error::PoleAtSample);
                }
            }
            Ok(CommutantBasis {
                spins: *t,
                mode: "SAMPLED".into(),
                dim: sample_dims[0],
                sample_dims,
                samples,
                basis: vec![],
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Surjectivity
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct SurjectivityOutcome {
    pub spins: SpinTriple,
    pub mode: String,
    pub generated_dim: usize,
    pub expected: usize,
    pub sample_dims: Vec<usize>,
    pub pass: bool,
}

/// Incrementally reduced span of flattened matrices.
struct Span<F: Field> {
    rows: Vec<(usize, Vec<F>)>, // (pivot, monic row)
}

impl<F: Field> Span<F> {
    fn new() -> Self {
        Span { rows: vec![] }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce and insert; true when the vector enlarged the span.
    fn insert(&mut self, mut v: Vec<F>) -> bool {
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let c = v[*piv].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a = a.sub_ref(&b.mul_ref(&c));
                    }
                }
            }
        }
        if let Some(piv) = v.iter().position(|e| !e.is_zero()) {
            let inv = v[piv].inv().unwrap();
            for e in v.iter_mut() {
                if !e.is_zero() {
                    *e = e.mul_ref(&inv);
                }
            }
            self.rows.push((piv, v));
            true
        } else {
            false
        }
    }
}

fn generated_algebra_dim<F: Field>(gens: &[Matrix<F>], max_rounds: usize) -> usize {
    let flat = |m: &Matrix<F>| -> Vec<F> { m.entries().to_vec() };
    let mut span = Span::new();
    let mut reps: Vec<Matrix<F>> = vec![];
    for g in gens {
        if span.insert(flat(g)) {
            reps.push(g.clone());
        }
    }
    let mut frontier: Vec<Matrix<F>> = reps.clone();
    for _ in 0..max_rounds {
        let mut new_mats = vec![];
        for a in &frontier {
            for b in &reps {
                for prod in [a.mul(b), b.mul(a)] {
                    if span.insert(flat(&prod)) {
                        new_mats.push(prod);
                    }
                }
            }
        }
        if new_mats.is_empty() {
            break;
        }
        reps.extend(new_mats.iter().cloned());
        frontier = new_mats;
    }
    span.dim()
}

/// PASS iff the unital algebra generated by {C12, C23, C123} has the
/// centralizer dimension.
pub fn verify_surjectivity(t: &SpinTriple, mode: &Mode, nsamples: usize) -> Result<SurjectivityOutcome> {
    let cs = quantum::casimir_matrices(t)?;
    let expected = spins::centralizer_dim(t);
    let n = t.product_dim();
    let ident: ExactMatrix = Matrix::identity(n);
    let gens = [ident, cs.c12.clone(), cs.c23.clone(), cs.c123.clone()];
    match mode {
        Mode::Exact => {
            let dim = generated_algebra_dim(&gens, 10);
            Ok(SurjectivityOutcome {
                spins: *t,
                mode: "EXACT".into(),
                generated_dim: dim,
                expected,
                sample_dims: vec![],
                pass: dim == expected,
            })
        }
        Mode::Sampled(gen) => {
            let mut gen = gen.clone();
            let mut sample_dims = vec![];
            for _ in 0..nsamples.max(1) {
                let mut done = false;
                for _ in 0..8 {
                    let p = gen.next_point();
                    let evald: Result<Vec<_>> = gens.iter().map(|m| m.eval_v(&p.value)).collect();
                    let Ok(gs) = evald else { continue };
                    sample_dims.push(generated_algebra_dim(&gs, 10));
                    done = true;
                    break;
                }
                if !done {
                    return Err(Error::PoleAtSample);
                }
            }
            let dim = sample_dims[0];
            let pass = sample_dims.iter().all(|&d| d == expected);
            Ok(SurjectivityOutcome {
                spins: *t,
                mode: "SAMPLED".into(),
                generated_dim: dim,
                expected,
                sample_dims,
                pass,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Minimal polynomials
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct MinimalPolyOutcome {
    pub spins: SpinTriple,
    pub checks: Vec<(String, bool)>,
}

impl MinimalPolyOutcome {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Check, with minimality, the annihilating polynomials of C12, C23, C123
/// over their J sets, of C13^(0), C13^(1) over J(j1,j3), and of
/// C123 - X over the M sets.
pub fn verify_minimal_polys(t: &SpinTriple, gen: &mut SampleGen) -> Result<MinimalPolyOutcome> {
    let cs = quantum::casimir_matrices(t)?;
    let sets = spins::build_sets(t);
    let chi_of = |js: &[crate::halfint::HalfInt]| -> Vec<Scalar> {
        js.iter().map(|&j| crate::scalars::chi(j)).collect()
    };
    let mut checks = vec![];
    let mut run = |label: &str, m: ExactMatrix, roots: &[Scalar], gen: &mut SampleGen| {
        let ok = crate::matrices::check_annihilating(&m, roots, true, gen);
        checks.push((label.to_string(), ok));
    };
    run("minpoly-C12-J12", cs.c12.clone(), &chi_of(&sets.j12), gen);
    run("minpoly-C23-J23", cs.c23.clone(), &chi_of(&sets.j23), gen);
    run("minpoly-C123-J123", cs.c123.clone(), &chi_of(&sets.j123), gen);
    run("minpoly-C13_0-J13", cs.c13_0.clone(), &chi_of(&sets.j13), gen);
    run("minpoly-C13_1-J13", cs.c13_1.clone(), &chi_of(&sets.j13), gen);
    run(
        "minpoly-C123-C12-M123",
        cs.c123.sub(&cs.c12),
        &sets.m123,
        gen,
    );
    run(
        "minpoly-C123-C23-M231",
        cs.c123.sub(&cs.c23),
        &sets.m231,
        gen,
    );
    run(
        "minpoly-C123-C13_0-M132",
        cs.c123.sub(&cs.c13_0),
        &sets.m132,
        gen,
    );
    run(
        "minpoly-C123-C13_1-M132",
        cs.c123.sub(&cs.c13_1),
        &sets.m132,
        gen,
    );
    Ok(MinimalPolyOutcome { spins: *t, checks })
}

// ---------------------------------------------------------------------------
// AW image
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct AwImageOutcome {
    pub spins: SpinTriple,
    pub relation_results: Vec<(String, bool)>,
    pub d_matches: bool,
    pub dprime_matches: bool,
    pub phi_omega_ok: bool,
    pub c13_consistent: bool,
    pub convention_id: u8,
}

impl AwImageOutcome {
    pub fn pass(&self) -> bool {
        self.relation_results.iter().all(|(_, ok)| *ok)
            && self.d_matches
            && self.dprime_matches
            && self.phi_omega_ok
            && self.c13_consistent
    }
}

/// Substitute the Casimir matrices into every relation of
/// awbar_relations(spins), and verify phi(D) = C13^(0), phi(D') = C13^(1)
/// and the phi(Omega) identity.
pub fn verify_aw_image(t: &SpinTriple, gen: &mut SampleGen) -> Result<AwImageOutcome> {
    let cs = quantum::casimir_matrices(t)?;
    let rels = aw::awbar_relations(t);
    let mut relation_results = vec![];
    for rel in &rels.relations {
        let ok = aw::relation_vanishes(rel, &cs, gen);
        relation_results.push((rel.label.clone(), ok));
    }
    Ok(AwImageOutcome {
        spins: *t,
        relation_results,
        d_matches: cs.d_matrix() == cs.c13_0,
        dprime_matches: cs.dprime_matrix() == cs.c13_1,
        phi_omega_ok: aw::phi_omega_identity(&cs),
        c13_consistent: cs.c13_0_consistent && cs.c13_1_consistent,
        convention_id: cs.convention_id,
    })
}

/// The commutant contains C12, C23, C123, C13^(0), C13^(1): all commute with
/// the three Delta2 generators.
pub fn casimirs_centralize(cs: &CasimirSet) -> Result<bool> {
    let t = cs.spins;
    let e = quantum::delta2_image(Gen::E, t.0, t.1, t.2)?;
    let f = quantum::delta2_image(Gen::F, t.0, t.1, t.2)?;
    let k = quantum::delta2_image(Gen::K, t.0, t.1, t.2)?;
    for m in [&cs.c12, &cs.c23, &cs.c123, &cs.c13_0, &cs.c13_1] {
        for x in [&e, &f, &k] {
            if !m.commutator(x).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::half;
    use crate::matrices::nullspace_dim;
    use crate::quantum::coproduct_image;

    fn trip(a: i64, b: i64, c: i64) -> SpinTriple {
        SpinTriple::from_twice(a, b, c)
    }

    #[test]
    fn bruteforce_oracle_two_sites() {
        // commutant of Delta on M_{1/2} ⊗ M_{1/2}: dim = 1 + 1 = 2
        let e = coproduct_image(Gen::E, half(1), half(1)).unwrap();
        let f = coproduct_image(Gen::F, half(1), half(1)).unwrap();
        let k = coproduct_image(Gen::K, half(1), half(1)).unwrap();
        let sys = commutant_system(&[&e, &f, &k]);
        assert_eq!(nullspace_dim(&sys, &Mode::Exact).unwrap(), 2);
    }

    #[test]
    fn commutant_matches_bruteforce_small() {
        // (1/2)^3: decomposition method vs flat nullspace, EXACT
        let t = trip(1, 1, 1);
        let e = quantum::delta2_image(Gen::E, t.0, t.1, t.2).unwrap();
        let f = quantum::delta2_image(Gen::F, t.0, t.1, t.2).unwrap();
        let k = quantum::delta2_image(Gen::K, t.0, t.1, t.2).unwrap();
        let sys = commutant_system(&[&e, &f, &k]);
        let brute = nullspace_dim(&sys, &Mode::Exact).unwrap();
        assert_eq!(brute, 5);
        let cb = commutant(&t, &Mode::Exact, 0).unwrap();
        assert_eq!(cb.dim, brute);
        assert_eq!(cb.basis.len(), 5);
    }

    #[test]
    fn commutant_exact_contains_casimirs() {
        let t = trip(1, 1, 1);
        let cb = commutant(&t, &Mode::Exact, 0).unwrap();
        let cs = quantum::casimir_matrices(&t).unwrap();
        // every Casimir-type element lies in the commutant span
        let mut span = Span::new();
        for m in &cb.basis {
            assert!(span.insert(m.entries().to_vec()));
        }
        for m in [&cs.c12, &cs.c23, &cs.c123, &cs.c13_0, &cs.c13_1] {
            let mut s2 = Span { rows: span.rows.clone() };
            assert!(!s2.insert(m.entries().to_vec()), "Casimir escaped the commutant");
        }
        assert!(casimirs_centralize(&cs).unwrap());
    }

    #[test]
    fn commutant_sampled_dims() {
        for (t, expect) in [
            (trip(1, 1, 1), 5usize),
            (trip(2, 1, 1), 6),
            (trip(2, 2, 2), 15),
        ] {
            let cb = commutant(&t, &Mode::sampled(17), 3).unwrap();
            assert_eq!(cb.dim, expect, "spins {t}");
            assert!(cb.samples_agree());
        }
    }

    #[test]
    fn commutant_is_algebra_small() {
        // products of basis elements stay in the span
        let t = trip(1, 1, 1);
        let cb = commutant(&t, &Mode::Exact, 0).unwrap();
        let mut span = Span::new();
        for m in &cb.basis {
            span.insert(m.entries().to_vec());
        }
        for a in &cb.basis {
            for b in &cb.basis {
                let mut s2 = Span { rows: span.rows.clone() };
                assert!(!s2.insert(a.mul(b).entries().to_vec()));
            }
        }
    }

    #[test]
    fn surjectivity_small() {
        let out = verify_surjectivity(&trip(1, 1, 1), &Mode::Exact, 0).unwrap();
        assert!(out.pass && out.generated_dim == 5);
        let out = verify_surjectivity(&trip(3, 0, 0), &Mode::Exact, 0).unwrap();
        assert!(out.pass && out.generated_dim == 1);
        let out = verify_surjectivity(&trip(2, 1, 1), &Mode::sampled(23), 2).unwrap();
        assert!(out.pass && out.generated_dim == 6);
    }

    #[test]
    fn minimal_polys_small() {
        let mut gen = SampleGen::new(31);
        let out = verify_minimal_polys(&trip(1, 1, 1), &mut gen).unwrap();
        assert!(out.pass(), "failed: {:?}", out.checks);
        // (j,0,0): single-root annihilating polynomials everywhere
        let out = verify_minimal_polys(&trip(2, 0, 0), &mut gen).unwrap();
        assert!(out.pass(), "failed: {:?}", out.checks);
    }

    #[test]
    fn aw_image_small() {
        let mut gen = SampleGen::new(37);
        let out = verify_aw_image(&trip(1, 1, 1), &mut gen).unwrap();
        assert!(out.pass(), "failed: {:?}", out.relation_results);
        assert_eq!(out.relation_results.len(), 12);
    }
}
