//! Finite irreducible representations of U_q(sl2), coproduct images, the
//! R-matrix and the seven Casimir-type matrices on a threefold tensor
//! product.
//!
//! Basis of the spin-j module: |j,m> with m = j, j-1, ..., -j (descending),
//! E|m> = [j-m]_q |m+1>, F|m> = [j+m]_q |m-1>, q^H = diag(q^m). This
//! square-root-free normalization keeps every entry in Q(v).

use crate::halfint::{HalfInt, SpinTriple};
use crate::matrices::{embed_sites, flip_two_site, ExactMatrix, Matrix};
use crate::scalars::{qfact, qint, qminus, qplus, Rat, Scalar};
use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Generators of U_q(sl2) (q^H abbreviated K).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    E,
    F,
    K,
    Kinv,
}

impl Gen {
    pub fn parse(s: &str) -> Result<Gen> {
        match s {
            "E" => Ok(Gen::E),
            "F" => Ok(Gen::F),
            "qH" | "K" => Ok(Gen::K),
            "qHinv" | "Kinv" => Ok(Gen::Kinv),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

/// The spin-j irreducible representation.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub j: HalfInt,
    pub dim: usize,
    pub e: ExactMatrix,
    pub f: ExactMatrix,
    pub k: ExactMatrix,
    pub kinv: ExactMatrix,
}

impl Irrep {
    pub fn gen_mat(&self, g: Gen) -> &ExactMatrix {
        match g {
            Gen::E => &self.e,
            Gen::F => &self.f,
            Gen::K => &self.k,
            Gen::Kinv => &self.kinv,
        }
    }
}

/// Build the spin-j irrep (memoized process-wide).
pub fn irrep(j: HalfInt) -> Result<Arc<Irrep>> {
    if !j.is_nonneg() {
        return Err(Error::InvalidSpin(format!("spin {j}")));
    }
    static MEMO: OnceLock<Mutex<HashMap<i64, Arc<Irrep>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = memo.lock().unwrap().get(&j.twice()) {
        return Ok(r.clone());
    }
    let d = (j.twice() + 1) as usize;
    let mut e: ExactMatrix = Matrix::zeros(d, d);
    let mut f: ExactMatrix = Matrix::zeros(d, d);
    let mut k: ExactMatrix = Matrix::zeros(d, d);
    let mut kinv: ExactMatrix = Matrix::zeros(d, d);
    for i in 0..d {
        // m_i = j - i, stored as twice-value
        let m2 = j.twice() - 2 * i as i64;
        k[(i, i)] = Scalar::v_pow(m2);
        kinv[(i, i)] = Scalar::v_pow(-m2);
        if i > 0 {
            // E |m_i> = [j - m_i]_q |m_{i-1}>
            e[(i - 1, i)] = qint(HalfInt::from_int(i as i64));
        }
        if i + 1 < d {
            // F |m_i> = [j + m_i]_q |m_{i+1}>
            f[(i + 1, i)] = qint(HalfInt::from_twice(j.twice() + m2));
        }
    }
    let rep = Arc::new(Irrep {
        j,
        dim: d,
        e: e.with_site_dims(vec![d]),
        f: f.with_site_dims(vec![d]),
        k: k.with_site_dims(vec![d]),
        kinv: kinv.with_site_dims(vec![d]),
    });
    memo.lock().unwrap().insert(j.twice(), rep.clone());
    Ok(rep)
}

/// Casimir from representation matrices:
/// C = (q - q^{-1})^2 F E + q K^2 + q^{-1} K^{-2}.
pub fn casimir_from(
    e: &ExactMatrix,
    f: &ExactMatrix,
    k: &ExactMatrix,
    kinv: &ExactMatrix,
) -> ExactMatrix {
    let q = Scalar::v_pow(2);
    let qi = Scalar::v_pow(-2);
    f.mul(e)
        .scale(&qminus().pow(2))
        .add(&k.mul(k).scale(&q))
        .add(&kinv.mul(kinv).scale(&qi))
}

/// Matrix of Delta(x) on M_{j1} ⊗ M_{j2}:
/// Delta(E) = E ⊗ K^{-1} + K ⊗ E (same shape for F), Delta(K) = K ⊗ K.
pub fn coproduct_image(x: Gen, j1: HalfInt, j2: HalfInt) -> Result<ExactMatrix> {
    let a = irrep(j1)?;
    let b = irrep(j2)?;
    Ok(match x {
        Gen::E => a.e.kron(&b.kinv).add(&a.k.kron(&b.e)),
        Gen::F => a.f.kron(&b.kinv).add(&a.k.kron(&b.f)),
        Gen::K => a.k.kron(&b.k),
        Gen::Kinv => a.kinv.kron(&b.kinv),
    })
}

/// Matrix of Delta^(2)(x) on the triple product (three-term symmetric form).
pub fn delta2_image(x: Gen, j1: HalfInt, j2: HalfInt, j3: HalfInt) -> Result<ExactMatrix> {
    let a = irrep(j1)?;
    let b = irrep(j2)?;
    let c = irrep(j3)?;
    Ok(match x {
        Gen::E => a
            .e
            .kron(&b.kinv)
            .kron(&c.kinv)
            .add(&a.k.kron(&b.e).kron(&c.kinv))
            .add(&a.k.kron(&b.k).kron(&c.e)),
        Gen::F => a
            .f
            .kron(&b.kinv)
            .kron(&c.kinv)
            .add(&a.k.kron(&b.f).kron(&c.kinv))
            .add(&a.k.kron(&b.k).kron(&c.f)),
        Gen::K => a.k.kron(&b.k).kron(&c.k),
        Gen::Kinv => a.kinv.kron(&b.kinv).kron(&c.kinv),
    })
}

/// Two-site Casimir image (pi_{ja} ⊗ pi_{jb})(Delta(C)).
pub fn casimir2(ja: HalfInt, jb: HalfInt) -> Result<ExactMatrix> {
    let e = coproduct_image(Gen::E, ja, jb)?;
    let f = coproduct_image(Gen::F, ja, jb)?;
    let k = coproduct_image(Gen::K, ja, jb)?;
    let kinv = coproduct_image(Gen::Kinv, ja, jb)?;
    Ok(casimir_from(&e, &f, &k, &kinv))
}

// ---------------------------------------------------------------------------
// R-matrix
// ---------------------------------------------------------------------------

/// A validated R-matrix on M_{j1} ⊗ M_{j2}.
///
/// The defining contract is the intertwining identity
/// Delta(x) R = R Delta^op(x) for x = E, F, q^H; the truncated series below
/// only generates candidates. `convention_id` records which candidate passed.
#[derive(Clone, Debug)]
pub struct RMatrix {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub mat: ExactMatrix,
    pub inv: ExactMatrix,
    pub convention_id: u8,
}

fn theta(j1: HalfInt, j2: HalfInt, sign: i64) -> ExactMatrix {
    let d1 = (j1.twice() + 1) as usize;
    let d2 = (j2.twice() + 1) as usize;
    let mut out: ExactMatrix = Matrix::zeros(d1 * d2, d1 * d2);
    for i1 in 0..d1 {
        let t1 = j1.twice() - 2 * i1 as i64; // 2 m1
        for i2 in 0..d2 {
            let t2 = j2.twice() - 2 * i2 as i64; // 2 m2
            // q^{2 m1 m2} = v^{4 m1 m2} = v^{t1 t2}
            out[(i1 * d2 + i2, i1 * d2 + i2)] = Scalar::v_pow(sign * t1 * t2);
        }
    }
    out.with_site_dims(vec![d1, d2])
}

fn r_candidate(j1: HalfInt, j2: HalfInt, variant: u8) -> Result<ExactMatrix> {
    let a = irrep(j1)?;
    let b = irrep(j2)?;
    let nmax = j1.twice().min(j2.twice());
    let (x1, x2, sign, mirror) = match variant {
        1 => (a.e.mul(&a.k), b.f.mul(&b.kinv), 1i64, false),
        2 => (a.e.mul(&a.kinv), b.f.mul(&b.k), -1, true),
        3 => (a.k.mul(&a.e), b.kinv.mul(&b.f), 1, false),
        4 => (a.kinv.mul(&a.e), b.k.mul(&b.f), -1, true),
        _ => unreachable!(),
    };
    let total = a.dim * b.dim;
    let mut s: ExactMatrix = Matrix::identity(total);
    let mut p1: ExactMatrix = Matrix::identity(a.dim);
    let mut p2: ExactMatrix = Matrix::identity(b.dim);
    for n in 1..=nmax {
        p1 = p1.mul(&x1);
        p2 = p2.mul(&x2);
        let gap = if mirror { qminus().neg() } else { qminus() };
        let cart = Scalar::v_pow(sign * n * (n + 1)); // q^{± n(n+1)/2}
        let coeff = cart.mul(&gap.pow(n as u32)).div(&qfact(n))?;
        s = s.add(&p1.kron(&p2).scale(&coeff));
    }
    Ok(theta(j1, j2, sign).mul(&s).with_site_dims(vec![a.dim, b.dim]))
}

/// Delta^op(x) on M_{j1} ⊗ M_{j2} (factors of Delta swapped).
pub fn coproduct_op_image(x: Gen, j1: HalfInt, j2: HalfInt) -> Result<ExactMatrix> {
    let a = irrep(j1)?;
    let b = irrep(j2)?;
    Ok(match x {
        Gen::E => a.kinv.kron(&b.e).add(&a.e.kron(&b.k)),
        Gen::F => a.kinv.kron(&b.f).add(&a.f.kron(&b.k)),
        Gen::K => a.k.kron(&b.k),
        Gen::Kinv => a.kinv.kron(&b.kinv),
    })
}

fn intertwines(r: &ExactMatrix, j1: HalfInt, j2: HalfInt) -> Result<bool> {
    for x in [Gen::E, Gen::F, Gen::K] {
        let lhs = coproduct_image(x, j1, j2)?.mul(r);
        let rhs = r.mul(&coproduct_op_image(x, j1, j2)?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Build the R-matrix on M_{j1} ⊗ M_{j2} (memoized process-wide).
///
/// Candidates are tried in order; the first one satisfying the intertwining
/// identity on all generators is returned.
pub fn rmatrix(j1: HalfInt, j2: HalfInt) -> Result<Arc<RMatrix>> {
    static MEMO: OnceLock<Mutex<HashMap<(i64, i64), Arc<RMatrix>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = memo.lock().unwrap().get(&(j1.twice(), j2.twice())) {
        return Ok(r.clone());
    }
    for variant in 1..=4u8 {
        let mat = r_candidate(j1, j2, variant)?;
        if intertwines(&mat, j1, j2)? {
            let inv = mat.inverse()?;
            let r = Arc::new(RMatrix { j1, j2, mat, inv, convention_id: variant });
            memo.lock()
                .unwrap()
                .insert((j1.twice(), j2.twice()), r.clone());
            return Ok(r);
        }
    }
    Err(Error::ConventionNotFound(j1, j2))
}

// ---------------------------------------------------------------------------
// Casimir matrices on three sites
// ---------------------------------------------------------------------------

/// The seven Casimir-type matrices of a spin triple plus the conjugated
/// C_13 variants.
#[derive(Clone, Debug)]
pub struct CasimirSet {
    pub spins: SpinTriple,
    pub dims: Vec<usize>,
    pub c1: ExactMatrix,
    pub c2: ExactMatrix,
    pub c3: ExactMatrix,
    pub c12: ExactMatrix,
    pub c23: ExactMatrix,
    pub c123: ExactMatrix,
    /// The naive (non-centralizing) two-site coupling of sites 1 and 3.
    pub c13: ExactMatrix,
    pub c13_0: ExactMatrix,
    pub c13_1: ExactMatrix,
    pub convention_id: u8,
    /// R_12 C13 R_12^{-1} = R_32^{-1} C13 R_32 held.
    pub c13_0_consistent: bool,
    /// R_23 C13 R_23^{-1} = R_21^{-1} C13 R_21 held.
    pub c13_1_consistent: bool,
}

impl CasimirSet {
    /// (C1 C3 + C2 C123)/(q + q^{-1}) - [C12, C23]_q / (q^2 - q^{-2}),
    /// the image of the AW(3) element D.
    pub fn d_matrix(&self) -> ExactMatrix {
        let q2m = Scalar::v_pow(4).sub(&Scalar::v_pow(-4));
        self.c1
            .mul(&self.c3)
            .add(&self.c2.mul(&self.c123))
            .scale(&qplus().inv().unwrap())
            .sub(&self.c12.qcommutator(&self.c23).scale(&q2m.inv().unwrap()))
    }

    /// Same with [C23, C12]_q: the image of D'.
    pub fn dprime_matrix(&self) -> ExactMatrix {
        let q2m = Scalar::v_pow(4).sub(&Scalar::v_pow(-4));
        self.c1
            .mul(&self.c3)
            .add(&self.c2.mul(&self.c123))
            .scale(&qplus().inv().unwrap())
            .sub(&self.c23.qcommutator(&self.c12).scale(&q2m.inv().unwrap()))
    }
}

/// Build every Casimir-type matrix for the triple (memoized process-wide).
pub fn casimir_matrices(t: &SpinTriple) -> Result<Arc<CasimirSet>> {
    static MEMO: OnceLock<Mutex<HashMap<(i64, i64, i64), Arc<CasimirSet>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (t.0.twice(), t.1.twice(), t.2.twice());
    if let Some(r) = memo.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let dims = t.site_dims();
    let total = t.product_dim();
    let ident: ExactMatrix = Matrix::identity(total);
    let c1 = ident
        .scale(&crate::scalars::chi(t.0))
        .with_site_dims(dims.clone());
    let c2 = ident
        .scale(&crate::scalars::chi(t.1))
        .with_site_dims(dims.clone());
    let c3 = ident
        .scale(&crate::scalars::chi(t.2))
        .with_site_dims(dims.clone());

    let c12 = embed_sites(&casimir2(t.0, t.1)?, &[0, 1], &dims)?;
    let c23 = embed_sites(&casimir2(t.1, t.2)?, &[1, 2], &dims)?;
    let c13 = embed_sites(&casimir2(t.0, t.2)?, &[0, 2], &dims)?;

    let e = delta2_image(Gen::E, t.0, t.1, t.2)?;
    let f = delta2_image(Gen::F, t.0, t.1, t.2)?;
    let k = delta2_image(Gen::K, t.0, t.1, t.2)?;
    let kinv = delta2_image(Gen::Kinv, t.0, t.1, t.2)?;
    let c123 = casimir_from(&e, &f, &k, &kinv);

    let r12 = rmatrix(t.0, t.1)?;
    let r23 = rmatrix(t.1, t.2)?;
    let r32 = rmatrix(t.2, t.1)?;
    let r21 = rmatrix(t.1, t.0)?;

    let r12_full = embed_sites(&r12.mat, &[0, 1], &dims)?;
    let r12_inv = embed_sites(&r12.inv, &[0, 1], &dims)?;
    let r23_full = embed_sites(&r23.mat, &[1, 2], &dims)?;
    let r23_inv = embed_sites(&r23.inv, &[1, 2], &dims)?;
    let r32_full = embed_sites(&flip_two_site(&r32.mat, dims[2], dims[1]), &[1, 2], &dims)?;
    let r32_inv = embed_sites(&flip_two_site(&r32.inv, dims[2], dims[1]), &[1, 2], &dims)?;
    let r21_full = embed_sites(&flip_two_site(&r21.mat, dims[1], dims[0]), &[0, 1], &dims)?;
    let r21_inv = embed_sites(&flip_two_site(&r21.inv, dims[1], dims[0]), &[0, 1], &dims)?;

    let c13_0 = r12_full.mul(&c13).mul(&r12_inv);
    let c13_0_alt = r32_inv.mul(&c13).mul(&r32_full);
    let c13_1 = r23_full.mul(&c13).mul(&r23_inv);
    let c13_1_alt = r21_inv.mul(&c13).mul(&r21_full);

    let set = Arc::new(CasimirSet {
        spins: *t,
        dims,
        c1,
        c2,
        c3,
        c12,
        c23,
        c123,
        c13,
        c13_0_consistent: c13_0 == c13_0_alt,
        c13_1_consistent: c13_1 == c13_1_alt,
        c13_0,
        c13_1,
        convention_id: r12.convention_id,
    });
    memo.lock().unwrap().insert(key, set.clone());
    Ok(set)
}

/// (Delta(K)^2 - Delta(K)^{-2})/(q - q^{-1}), the image of [2H]_q on a pair.
pub fn coproduct_2h(j1: HalfInt, j2: HalfInt) -> Result<ExactMatrix> {
    let k = coproduct_image(Gen::K, j1, j2)?;
    let kinv = coproduct_image(Gen::Kinv, j1, j2)?;
    Ok(k.mul(&k)
        .sub(&kinv.mul(&kinv))
        .scale(&qminus().inv().unwrap()))
}

/// Rank deficiency of (M - lambda I) at a sample point: the eigenvalue
/// multiplicity at that sample.
pub fn sampled_eigen_multiplicity(m: &ExactMatrix, lambda: &Scalar, p: &Rat) -> Result<usize> {
    let shifted = m.sub(&Matrix::identity(m.rows).scale(lambda));
    let rm = shifted.eval_v(p)?;
    Ok(rm.cols - crate::matrices::rank_of(&rm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::half;
    use crate::scalars::{chi, rat, SampleGen};

    #[test]
    fn irrep_half_matches_convention() {
        let r = irrep(half(1)).unwrap();
        // E = [[0,1],[0,0]], F = [[0,0],[1,0]], K = diag(v, v^{-1})
        assert!(r.e[(0, 1)].is_one() && r.e[(0, 0)].is_zero());
        assert!(r.f[(1, 0)].is_one());
        assert_eq!(r.k[(0, 0)], Scalar::v_pow(1));
        assert_eq!(r.k[(1, 1)], Scalar::v_pow(-1));
    }

    #[test]
    fn irrep_zero_is_trivial() {
        let r = irrep(half(0)).unwrap();
        assert_eq!(r.dim, 1);
        assert!(r.e.is_zero() && r.f.is_zero());
        assert!(r.k[(0, 0)].is_one());
        assert!(irrep(half(-1)).is_err());
    }

    #[test]
    fn irrep_relations() {
        let q = Scalar::v_pow(2);
        let qi = Scalar::v_pow(-2);
        for t in 0..=5 {
            let j = half(t);
            let r = irrep(j).unwrap();
            // K E = q E K, K F = q^{-1} F K
            assert_eq!(r.k.mul(&r.e), r.e.mul(&r.k).scale(&q));
            assert_eq!(r.k.mul(&r.f), r.f.mul(&r.k).scale(&qi));
            // [E, F] = [2H]_q = diag([2m]_q)
            let comm = r.e.commutator(&r.f);
            for i in 0..r.dim {
                let m2 = j.twice() - 2 * i as i64;
                assert_eq!(comm[(i, i)], qint(HalfInt::from_twice(2 * m2)));
            }
            // Casimir acts as chi_j
            let cas = casimir_from(&r.e, &r.f, &r.k, &r.kinv);
            let expect: ExactMatrix = Matrix::identity(r.dim).scale(&chi(j));
            assert_eq!(cas, expect);
        }
    }

    #[test]
    fn coproduct_homomorphism() {
        let (j1, j2) = (half(1), half(1));
        let de = coproduct_image(Gen::E, j1, j2).unwrap();
        let df = coproduct_image(Gen::F, j1, j2).unwrap();
        // [Delta(E), Delta(F)] = Delta([2H]_q)
        assert_eq!(de.commutator(&df), coproduct_2h(j1, j2).unwrap());
        // trivial left factor
        let e = coproduct_image(Gen::E, half(0), half(3)).unwrap();
        assert_eq!(e, irrep(half(3)).unwrap().e);
    }

    #[test]
    fn delta2_coassociative() {
        for spins in [[1i64, 1, 1], [2, 1, 1]] {
            let (j1, j2, j3) = (half(spins[0]), half(spins[1]), half(spins[2]));
            let r1 = irrep(j1).unwrap();
            let r3 = irrep(j3).unwrap();
            for x in [Gen::E, Gen::F, Gen::K] {
                let direct = delta2_image(x, j1, j2, j3).unwrap();
                let left = match x {
                    Gen::E => coproduct_image(Gen::E, j1, j2)
                        .unwrap()
                        .kron(&r3.kinv)
                        .add(&coproduct_image(Gen::K, j1, j2).unwrap().kron(&r3.e)),
                    Gen::F => coproduct_image(Gen::F, j1, j2)
                        .unwrap()
                        .kron(&r3.kinv)
                        .add(&coproduct_image(Gen::K, j1, j2).unwrap().kron(&r3.f)),
                    _ => coproduct_image(Gen::K, j1, j2).unwrap().kron(&r3.k),
                };
                let right = match x {
                    Gen::E => r1
                        .e
                        .kron(&coproduct_image(Gen::Kinv, j2, j3).unwrap())
                        .add(&r1.k.kron(&coproduct_image(Gen::E, j2, j3).unwrap())),
                    Gen::F => r1
                        .f
                        .kron(&coproduct_image(Gen::Kinv, j2, j3).unwrap())
                        .add(&r1.k.kron(&coproduct_image(Gen::F, j2, j3).unwrap())),
                    _ => r1.k.kron(&coproduct_image(Gen::K, j2, j3).unwrap()),
                };
                assert_eq!(direct, left);
                assert_eq!(direct, right);
            }
        }
        assert!(delta2_image(Gen::E, half(0), half(0), half(0))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn rmatrix_trivial_and_half() {
        let r = rmatrix(half(0), half(3)).unwrap();
        assert_eq!(r.mat, Matrix::identity(4));
        let r = rmatrix(half(1), half(1)).unwrap();
        assert_eq!(r.convention_id, 1);
        // explicit 4x4: Theta = diag(v, 1/v, 1/v, v), plus (q - q^{-1})/v at (1,2)
        assert_eq!(r.mat[(0, 0)], Scalar::v_pow(1));
        assert_eq!(r.mat[(3, 3)], Scalar::v_pow(1));
        assert_eq!(r.mat[(1, 2)], qminus().mul(&Scalar::v_pow(-1)));
        assert!(r.mat.mul(&r.inv) == Matrix::identity(4));
    }

    #[test]
    fn rmatrix_mixed_spins_intertwines() {
        // intertwining is validated during construction; exercise unequal spins
        for (a, b) in [(2i64, 1i64), (1, 2), (3, 1)] {
            let r = rmatrix(half(a), half(b)).unwrap();
            assert_eq!(r.convention_id, 1);
        }
    }

    #[test]
    fn yang_baxter_small() {
        let t = SpinTriple::from_twice(1, 1, 1);
        let dims = t.site_dims();
        let r12 = embed_sites(&rmatrix(t.0, t.1).unwrap().mat, &[0, 1], &dims).unwrap();
        let r13 = embed_sites(&rmatrix(t.0, t.2).unwrap().mat, &[0, 2], &dims).unwrap();
        let r23 = embed_sites(&rmatrix(t.1, t.2).unwrap().mat, &[1, 2], &dims).unwrap();
        assert_eq!(r12.mul(&r13).mul(&r23), r23.mul(&r13).mul(&r12));
    }

    #[test]
    fn casimir_set_half_cubed() {
        let t = SpinTriple::from_twice(1, 1, 1);
        let cs = casimir_matrices(&t).unwrap();
        assert!(cs.c13_0_consistent && cs.c13_1_consistent);
        // C12 eigenvalue multiplicities {chi0: 2, chi1: 6} from Eq. 3.4 counts
        let p = rat(7, 3);
        assert_eq!(
            sampled_eigen_multiplicity(&cs.c12, &chi(half(0)), &p).unwrap(),
            2
        );
        assert_eq!(
            sampled_eigen_multiplicity(&cs.c12, &chi(half(2)), &p).unwrap(),
            6
        );
        // C13 conjugates annihilated by the product over J(j1,j3) = {0,1}
        let roots = vec![chi(half(0)), chi(half(2))];
        let mut gen = SampleGen::new(11);
        assert!(crate::matrices::check_annihilating(
            &cs.c13_0, &roots, false, &mut gen
        ));
        assert!(crate::matrices::check_annihilating(
            &cs.c13_1, &roots, false, &mut gen
        ));
        // phi(D) = C13^(0), phi(D') = C13^(1)
        assert_eq!(cs.d_matrix(), cs.c13_0);
        assert_eq!(cs.dprime_matrix(), cs.c13_1);
        // naive C13 does not centralize; C13^(0) does
        let e = delta2_image(Gen::E, t.0, t.1, t.2).unwrap();
        assert!(!cs.c13.commutator(&e).is_zero());
        assert!(cs.c13_0.commutator(&e).is_zero());
    }

    #[test]
    fn casimir_trivial_factors() {
        // C123 for (j, 0, 0) = chi_j I
        let t = SpinTriple::from_twice(3, 0, 0);
        let cs = casimir_matrices(&t).unwrap();
        let expect: ExactMatrix = Matrix::identity(4).scale(&chi(half(3)));
        assert_eq!(cs.c123, expect);
        // qcommutator(C12, C23) nonzero for (1/2)^3
        let cs2 = casimir_matrices(&SpinTriple::from_twice(1, 1, 1)).unwrap();
        assert!(!cs2.c12.qcommutator(&cs2.c23).is_zero());
    }
}
