//! Explicit irreducible modules of the quotients: the tridiagonal
//! construction (A diagonal, B tridiagonal) and the classification search
//! over the V_n(a,b,c) parameters.

use crate::aw;
use crate::halfint::{HalfInt, SpinTriple};
use crate::matrices::{ExactMatrix, Matrix};
use crate::scalars::{chi, qint, qminus, Scalar};
use crate::spins;
use crate::{Error, Result};
use num::Zero;

/// The d_l-dimensional module with A = diag(chi_j | j in S^l) and B
/// tridiagonal; K acts as the constant chi_l.
#[derive(Clone, Debug)]
pub struct TridiagonalModule {
    pub spins: SpinTriple,
    pub l: HalfInt,
    pub dim: usize,
    pub amat: ExactMatrix,
    pub bmat: ExactMatrix,
    pub kval: Scalar,
    /// The off-diagonal products alpha_{j-1,j} alpha_{j,j-1}, j > jmin.
    pub offdiag_products: Vec<Scalar>,
}

/// alpha_{j,j} = (fc chi_j - fb chi_0)/(chi_j^2 - chi_0^2), with the special
/// value chi_{j1} chi_{j3} / chi_0 at j = 0.
fn alpha_diag(t: &SpinTriple, l: HalfInt, j: HalfInt) -> Scalar {
    let chi0 = chi(HalfInt::ZERO);
    if j == HalfInt::ZERO {
        return chi(t.0).mul(&chi(t.2)).div(&chi0).unwrap();
    }
    let fb = chi(t.1).mul(&chi(t.2)).add(&chi(t.0).mul(&chi(l)));
    let fc = chi(t.0).mul(&chi(t.2)).add(&chi(t.1).mul(&chi(l)));
    let cj = chi(j);
    fc.mul(&cj)
        .sub(&fb.mul(&chi0))
        .div(&cj.pow(2).sub(&chi0.pow(2)))
        .unwrap()
}

/// alpha_{j-1,j} alpha_{j,j-1} =
/// prod_i [j - r_i]_q [j + r_i]_q / ([2j-1]_q [2j]_q^2 [2j+1]_q) (q-q^{-1})^4
/// with r = (j1 - j2, j3 - l, j1 + j2 + 1, l + j3 + 1).
fn offdiag_product(t: &SpinTriple, l: HalfInt, j: HalfInt) -> Scalar {
    let rs = [
        t.0 - t.1,
        t.2 - l,
        t.0 + t.1 + HalfInt::from_int(1),
        l + t.2 + HalfInt::from_int(1),
    ];
    let mut num = Scalar::one();
    for r in rs {
        num = num.mul(&qint(j - r)).mul(&qint(j + r));
    }
    let two_j = HalfInt::from_twice(2 * j.twice());
    let den = qint(two_j - HalfInt::from_int(1))
        .mul(&qint(two_j).pow(2))
        .mul(&qint(two_j + HalfInt::from_int(1)));
    num.div(&den).unwrap().mul(&qminus().pow(4))
}

/// Build the tridiagonal module for l in J(j1,j2,j3) and verify that it
/// satisfies all relations of AWbar^l(j1,j2,j3).
pub fn tridiagonal_module(t: &SpinTriple, l: HalfInt) -> Result<TridiagonalModule> {
    let s = spins::s_set_checked(t, l, [0, 1, 2])?;
    let d = s.len();
    let mut amat: ExactMatrix = Matrix::zeros(d, d);
    let mut bmat: ExactMatrix = Matrix::zeros(d, d);
    let mut offdiag_products = vec![];
    for (i, &j) in s.iter().enumerate() {
        amat[(i, i)] = chi(j);
        bmat[(i, i)] = alpha_diag(t, l, j);
        if i > 0 {
            let prod = offdiag_product(t, l, j);
            if prod.is_zero() {
                return Err(Error::Unsupported(format!(
                    "off-diagonal product vanishes inside S^l at j = {j} (module not irreducible)"
                )));
            }
            // basis rescaling freedom: alpha_{j,j-1} = 1 carries the product
            // entirely on the other off-diagonal
            bmat[(i - 1, i)] = Scalar::one();
            bmat[(i, i - 1)] = prod.clone();
            offdiag_products.push(prod);
        }
    }
    // the eigenvalues of A are pairwise distinct by construction of S^l;
    // make that checkable rather than assumed
    for i in 1..d {
        if amat[(i, i)] == amat[(i - 1, i - 1)] {
            return Err(Error::Unsupported("repeated A eigenvalue".into()));
        }
    }
    let module = TridiagonalModule {
        spins: *t,
        l,
        dim: d,
        amat,
        bmat,
        kval: chi(l),
        offdiag_products,
    };
    let rels = aw::awbar_k_relations(t, l)?;
    if let Some(label) = module.failing_relation(&rels) {
        return Err(Error::Unsupported(format!(
            "tridiagonal module violates {label} of AWbar^l"
        )));
    }
    Ok(module)
}

impl TridiagonalModule {
    /// First relation of the set that the module fails, if any.
    pub fn failing_relation(&self, rels: &aw::RelationSet) -> Option<String> {
        let ident: ExactMatrix = Matrix::identity(self.dim);
        for rel in &rels.relations {
            let ok = match &rel.form {
                aw::RelForm::Direct(p) => p
                    .eval_matrices(&[&self.amat, &self.bmat], &ident)
                    .is_zero(),
                aw::RelForm::Annihilating { base_poly, roots, .. } => {
                    let base = base_poly.eval_matrices(&[&self.amat, &self.bmat], &ident);
                    let mut prod = ident.clone();
                    for r in roots {
                        prod = prod.mul(&base.sub(&ident.scale(r)));
                        if prod.is_zero() {
                            break;
                        }
                    }
                    prod.is_zero()
                }
            };
            if !ok {
                return Some(rel.label.clone());
            }
        }
        None
    }

    /// The three-term recurrence
    /// [2j+3] a_{j,j+1} a_{j+1,j} - [2j-1] a_{j-1,j} a_{j,j-1}
    ///   = (fc - chi_j a_{jj}) a_{jj} / chi_0 + chi_0 chi_j - fa
    /// holds at every admissible j.
    pub fn recurrence_holds(&self) -> bool {
        let t = &self.spins;
        let s = spins::s_set(t.0, t.1, t.2, self.l);
        let fa = chi(t.0).mul(&chi(t.1)).add(&chi(t.2).mul(&chi(self.l)));
        let fc = chi(t.0).mul(&chi(t.2)).add(&chi(t.1).mul(&chi(self.l)));
        let chi0 = chi(HalfInt::ZERO);
        for (i, &j) in s.iter().enumerate() {
            let two_j = HalfInt::from_twice(2 * j.twice());
            let up = if i + 1 < s.len() {
                offdiag_product(t, self.l, s[i + 1])
            } else {
                Scalar::zero()
            };
            let down = if i > 0 {
                offdiag_product(t, self.l, j)
            } else {
                Scalar::zero()
            };
            let lhs = qint(two_j + HalfInt::from_int(3))
                .mul(&up)
                .sub(&qint(two_j - HalfInt::from_int(1)).mul(&down));
            let ajj = alpha_diag(t, self.l, j);
            let rhs = fc
                .sub(&chi(j).mul(&ajj))
                .mul(&ajj)
                .div(&chi0)
                .unwrap()
                .add(&chi0.mul(&chi(j)))
                .sub(&fa);
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

/// Boundary vanishing of the off-diagonal product formula: at j = jmin
/// (when jmin > 0) and at j = jmax + 1 the product is zero.
pub fn boundary_products_vanish(t: &SpinTriple, l: HalfInt) -> Result<bool> {
    let s = spins::s_set_checked(t, l, [0, 1, 2])?;
    let jmin = s[0];
    let jmax = *s.last().unwrap();
    if jmin > HalfInt::ZERO && !offdiag_product(t, l, jmin).is_zero() {
        return Ok(false);
    }
    Ok(offdiag_product(t, l, jmax + HalfInt::from_int(1)).is_zero())
}

// ---------------------------------------------------------------------------
// Classification of irreducible modules (V_n(a,b,c) parameters)
// ---------------------------------------------------------------------------

/// One parameter tuple that passes to the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationSolution {
    pub l: HalfInt,
    pub n: i64,
    pub x: HalfInt,
    pub y: HalfInt,
    pub z: HalfInt,
    /// Closed-form family tag (sol1..sol4 up to permutation of x,y,z), or
    /// "other".
    pub family: String,
}

fn chi_at(h: HalfInt) -> Scalar {
    chi(h)
}

/// The four constraint equations (the fourth is the Casimir one).
fn solves(t: &SpinTriple, l: HalfInt, n: i64, x: HalfInt, y: HalfInt, z: HalfInt, use_omega: bool) -> bool {
    let half_n = HalfInt::from_twice(n);
    let cn = chi_at(half_n);
    let cx = chi_at(x + half_n);
    let cy = chi_at(y + half_n);
    let cz = chi_at(z + half_n);
    let c1 = chi_at(t.0);
    let c2 = chi_at(t.1);
    let c3 = chi_at(t.2);
    let cl = chi_at(l);
    let eq1 = cn.mul(&cx).add(&cy.mul(&cz)) == c1.mul(&c2).add(&c3.mul(&cl));
    if !eq1 {
        return false;
    }
    let eq2 = cn.mul(&cy).add(&cz.mul(&cx)) == c2.mul(&c3).add(&c1.mul(&cl));
    if !eq2 {
        return false;
    }
    let eq3 = cn.mul(&cz).add(&cx.mul(&cy)) == c1.mul(&c3).add(&c2.mul(&cl));
    if !eq3 {
        return false;
    }
    if use_omega {
        let lhs = cn
            .pow(2)
            .add(&cx.pow(2))
            .add(&cy.pow(2))
            .add(&cz.pow(2))
            .add(&cn.mul(&cx).mul(&cy).mul(&cz));
        let rhs = c1
            .pow(2)
            .add(&c2.pow(2))
            .add(&c3.pow(2))
            .add(&cl.pow(2))
            .add(&c1.mul(&c2).mul(&c3).mul(&cl));
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn family_tag(t: &SpinTriple, l: HalfInt, n: i64, x: HalfInt, y: HalfInt, z: HalfInt) -> String {
    if t.0 != t.1 || t.1 != t.2 {
        return "other".to_string();
    }
    let s = t.0;
    let mut xyz = [x, y, z];
    xyz.sort();
    let all = |v: HalfInt| [v, v, v];
    let two_of_zero = |v: HalfInt| {
        let mut a = [HalfInt::ZERO, HalfInt::ZERO, v];
        a.sort();
        a
    };
    if l <= s && n == l.twice() && xyz == all(s - l) {
        return "sol1".into();
    }
    if l > s && n == (3 * s.twice() - l.twice()) / 2 && xyz == all(l - s) {
        return "sol2".into();
    }
    if l < s && n == (s.twice() + l.twice()) / 2 && xyz == two_of_zero(s - l) {
        return "sol3".into();
    }
    if l <= s - HalfInt::from_int(1)
        && n == (s.twice() - l.twice()) / 2 - 1
        && xyz == two_of_zero(s + l + HalfInt::from_int(1))
    {
        return "sol4".into();
    }
    "other".to_string()
}

fn half_range(lo: HalfInt, hi: HalfInt) -> Vec<HalfInt> {
    let mut out = vec![];
    let mut t = lo.twice();
    while t <= hi.twice() {
        out.push(HalfInt::from_twice(t));
        t += 1;
    }
    out
}

/// Enumerate (l, n, x, y, z) within the paper bounds solving the constraint
/// equations as exact identities in q.
pub fn classify(t: &SpinTriple, use_omega: bool) -> Result<Vec<ClassificationSolution>> {
    for j in t.spins() {
        if j.twice() > 12 {
            return Err(Error::ResourceLimit(format!("spin {j} above classify cap")));
        }
    }
    let nmax = [
        (t.0 + t.1 - (t.0 - t.1).abs()).twice() / 2,
        (t.1 + t.2 - (t.1 - t.2).abs()).twice() / 2,
        (t.0 + t.2 - (t.0 - t.2).abs()).twice() / 2,
    ]
    .into_iter()
    .min()
    .unwrap();
    let mut out = vec![];
    for l in spins::j_triple(t) {
        for n in 0..=nmax {
            let nh = HalfInt::from_int(n);
            for x in half_range((t.0 - t.1).abs(), t.0 + t.1 - nh) {
                for y in half_range((t.1 - t.2).abs(), t.1 + t.2 - nh) {
                    for z in half_range((t.0 - t.2).abs(), t.0 + t.2 - nh) {
                        if solves(t, l, n, x, y, z, use_omega) {
                            out.push(ClassificationSolution {
                                l,
                                n,
                                x,
                                y,
                                z,
                                family: family_tag(t, l, n, x, y, z),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// For identical spins (s,s,s): apply the S-set refinement bounds
/// (s - l <= x,y,z <= s + l - n below the middle, l - s <= x,y,z <= 2s - n
/// above) and return the surviving solutions.
pub fn filtered_solutions(t: &SpinTriple) -> Result<Vec<ClassificationSolution>> {
    if t.0 != t.1 || t.1 != t.2 {
        return Err(Error::Unsupported(
            "filtered dimension sum established for identical spins only".into(),
        ));
    }
    let s = t.0;
    let sols = classify(t, true)?;
    Ok(sols
        .into_iter()
        .filter(|sol| {
            let nh = HalfInt::from_twice(2 * sol.n);
            let (lo, hi) = if sol.l <= s {
                (s - sol.l, s + sol.l - nh)
            } else {
                (sol.l - s, s + s - nh)
            };
            [sol.x, sol.y, sol.z]
                .iter()
                .all(|&v| lo <= v && v <= hi)
        })
        .collect())
}

/// Sum of (n+1)^2 over the refined solutions; equals
/// (2s+1)((2s+1)^2 + 1)/2 for the verified spins.
pub fn filtered_dimension_sum(t: &SpinTriple) -> Result<usize> {
    let sols = filtered_solutions(t)?;
    Ok(sols.iter().map(|s| ((s.n + 1) * (s.n + 1)) as usize).sum())
}

/// Raw advisory count over an explicit enumeration domain: l in J(s,s,s),
/// 0 <= n <= 4s, x,y,z half-integers in [-(2s+2), 2s+2], all four equations
/// exact. The paper's own search domain is not fully specified, so this
/// count is reported, not asserted.
pub fn raw_solution_count(t: &SpinTriple) -> Result<usize> {
    for j in t.spins() {
        if j.twice() > 4 {
            return Err(Error::ResourceLimit("raw count cap".into()));
        }
    }
    let bound = HalfInt::from_twice(t.0.twice().max(t.1.twice()).max(t.2.twice()) * 2 + 4);
    let mut count = 0usize;
    // sampled prefilter: a tuple failing at the sample fails exactly
    let p = crate::scalars::rat(22, 7);
    let chi_s = |h: HalfInt| chi(h).eval_v(&p).unwrap();
    for l in spins::j_triple(t) {
        for n in 0..=(2 * t.0.twice()) {
            let half_n = HalfInt::from_twice(n);
            let cn_s = chi_s(half_n);
            for x in half_range(-bound, bound) {
                let cx_s = chi_s(x + half_n);
                for y in half_range(-bound, bound) {
                    let cy_s = chi_s(y + half_n);
                    for z in half_range(-bound, bound) {
                        let cz_s = chi_s(z + half_n);
                        let e1 = &cn_s * &cx_s + &cy_s * &cz_s
                            - (chi_s(t.0) * chi_s(t.1) + chi_s(t.2) * chi_s(l));
                        if !e1.is_zero() {
                            continue;
                        }
                        if solves(t, l, n, x, y, z, true) {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

/// Helper for the suite: expected dimension-sum formula.
pub fn dimension_sum_formula(s: HalfInt) -> usize {
    let n = (s.twice() + 1) as usize;
    n * (n * n + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::half;
    use crate::scalars::qplus;

    fn trip(a: i64, b: i64, c: i64) -> SpinTriple {
        SpinTriple::from_twice(a, b, c)
    }

    #[test]
    fn tridiagonal_small_cases() {
        // (1/2)^3, l = 3/2: one-dimensional, A = (chi_1)
        let m = tridiagonal_module(&trip(1, 1, 1), half(3)).unwrap();
        assert_eq!(m.dim, 1);
        assert_eq!(m.amat[(0, 0)], chi(half(2)));

        // (1/2)^3, l = 1/2: 2-dimensional; product = [3](q-q^{-1})^4/[2]^2
        let m = tridiagonal_module(&trip(1, 1, 1), half(1)).unwrap();
        assert_eq!(m.dim, 2);
        let expect = qint(half(6))
            .mul(&qminus().pow(4))
            .div(&qint(half(4)).pow(2))
            .unwrap();
        assert_eq!(m.offdiag_products[0], expect);
        assert!(m.recurrence_holds());

        // (s,s,s), l = s: alpha_{0,0} = chi_s^2/chi_0
        for s in [1i64, 2, 3] {
            let m = tridiagonal_module(&trip(s, s, s), half(s)).unwrap();
            let expect = chi(half(s))
                .pow(2)
                .div(&chi(HalfInt::ZERO))
                .unwrap();
            assert_eq!(m.bmat[(0, 0)], expect);
        }
        // invalid l rejected
        assert!(tridiagonal_module(&trip(1, 1, 1), half(5)).is_err());
    }

    #[test]
    fn boundary_vanishing() {
        for (t, l) in [
            (trip(1, 1, 1), half(1)),
            (trip(2, 2, 2), half(2)),
            (trip(3, 3, 3), half(3)),
            (trip(4, 1, 1), half(4)),
        ] {
            assert!(boundary_products_vanish(&t, l).unwrap(), "{t} l={l}");
        }
    }

    #[test]
    fn classify_half() {
        // s = 1/2: l = 1/2 gives n = 1, l = 3/2 gives n = 0
        let sols = classify(&trip(1, 1, 1), true).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols
            .iter()
            .any(|s| s.l == half(1) && s.n == 1 && s.family == "sol1"));
        assert!(sols
            .iter()
            .any(|s| s.l == half(3) && s.n == 0 && s.family == "sol2"));
        // omega equation changes nothing at this size
        let sols2 = classify(&trip(1, 1, 1), false).unwrap();
        assert_eq!(sols.len(), sols2.len());
    }

    #[test]
    fn classify_spin_one() {
        let sols = classify(&trip(2, 2, 2), true).unwrap();
        // raw bounded solutions include sol3/sol4 shapes; filtered keeps
        // exactly sol1/sol2 with dimension sum 15
        let filtered = filtered_solutions(&trip(2, 2, 2)).unwrap();
        assert_eq!(filtered.len(), 4);
        for s in &filtered {
            assert!(s.family == "sol1" || s.family == "sol2", "{s:?}");
        }
        assert_eq!(filtered_dimension_sum(&trip(2, 2, 2)).unwrap(), 15);
        assert!(sols.len() >= filtered.len());
        let _ = qplus();
    }

    #[test]
    fn dimension_sums() {
        assert_eq!(filtered_dimension_sum(&trip(1, 1, 1)).unwrap(), 5);
        assert_eq!(dimension_sum_formula(half(1)), 5);
        assert_eq!(dimension_sum_formula(half(2)), 15);
        assert_eq!(dimension_sum_formula(half(3)), 34);
        assert!(filtered_dimension_sum(&trip(2, 1, 1)).is_err());
    }
}
