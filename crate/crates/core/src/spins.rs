//! Index sets and counts attached to a spin triple: J(j1,j2), J(j1,j2,j3),
//! the difference sets M, the sets S^l and J^k, degeneracies and the
//! centralizer dimension.

use crate::halfint::{HalfInt, SpinTriple};
use crate::scalars::{chi, Scalar};
use crate::{Error, Result};

/// J(ja, jb) = { |ja - jb|, |ja - jb| + 1, ..., ja + jb }
pub fn j_pair(ja: HalfInt, jb: HalfInt) -> Vec<HalfInt> {
    let lo = (ja - jb).abs();
    let hi = ja + jb;
    let mut out = vec![];
    let mut t = lo.twice();
    while t <= hi.twice() {
        out.push(HalfInt::from_twice(t));
        t += 2;
    }
    out
}

/// J(j1, j2, j3) = union over j in J(j1,j2) of J(j, j3); no repeats, sorted.
pub fn j_triple(t: &SpinTriple) -> Vec<HalfInt> {
    let mut out: Vec<HalfInt> = vec![];
    for j in j_pair(t.0, t.1) {
        for l in j_pair(j, t.2) {
            if !out.contains(&l) {
                out.push(l);
            }
        }
    }
    out.sort();
    out
}

/// M(ja, jb, jc) = union over j in J(ja,jb) of { chi_l - chi_j | l in J(j,jc) },
/// deduplicated by canonical equality, in generation order.
pub fn m_set(ja: HalfInt, jb: HalfInt, jc: HalfInt) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = vec![];
    for j in j_pair(ja, jb) {
        let cj = chi(j);
        for l in j_pair(j, jc) {
            let m = chi(l).sub(&cj);
            if !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out
}

/// S^l(ja, jb, jc) = { j in J(ja,jb) | l in J(j,jc) } = { jmin, ..., jmax }.
pub fn s_set(ja: HalfInt, jb: HalfInt, jc: HalfInt, l: HalfInt) -> Vec<HalfInt> {
    let jmin = (ja - jb).abs().max((jc - l).abs());
    let jmax = (ja + jb).min(jc + l);
    let mut out = vec![];
    let mut t = jmin.twice();
    while t <= jmax.twice() {
        out.push(HalfInt::from_twice(t));
        t += 2;
    }
    out
}

/// J^k(ja, jb, jc) = { j in J(ja,jb) | chi_j in { chi_k - m | m in M(ja,jb,jc) } }.
pub fn jk_set(ja: HalfInt, jb: HalfInt, jc: HalfInt, k: HalfInt) -> Vec<HalfInt> {
    let targets: Vec<Scalar> = m_set(ja, jb, jc)
        .iter()
        .map(|m| chi(k).sub(m))
        .collect();
    j_pair(ja, jb)
        .into_iter()
        .filter(|&j| targets.contains(&chi(j)))
        .collect()
}

/// All derived sets for one triple.
#[derive(Clone, Debug)]
pub struct SpinSets {
    pub spins: SpinTriple,
    pub j12: Vec<HalfInt>,
    pub j23: Vec<HalfInt>,
    pub j13: Vec<HalfInt>,
    pub j123: Vec<HalfInt>,
    /// M(j1,j2,j3), M(j2,j3,j1), M(j1,j3,j2)
    pub m123: Vec<Scalar>,
    pub m231: Vec<Scalar>,
    pub m132: Vec<Scalar>,
    /// l -> d_l = |S^l|
    pub degeneracies: Vec<(HalfInt, usize)>,
}

/// Populate every set for the triple.
pub fn build_sets(t: &SpinTriple) -> SpinSets {
    let j123 = j_triple(t);
    let degeneracies = j123
        .iter()
        .map(|&l| (l, s_set(t.0, t.1, t.2, l).len()))
        .collect();
    SpinSets {
        spins: *t,
        j12: j_pair(t.0, t.1),
        j23: j_pair(t.1, t.2),
        j13: j_pair(t.0, t.2),
        j123,
        m123: m_set(t.0, t.1, t.2),
        m231: m_set(t.1, t.2, t.0),
        m132: m_set(t.0, t.2, t.1),
        degeneracies,
    }
}

/// S^l for a given ordering of the triple; Err when l is not in J(j1,j2,j3).
pub fn s_set_checked(t: &SpinTriple, l: HalfInt, ordering: [usize; 3]) -> Result<Vec<HalfInt>> {
    if !j_triple(t).contains(&l) {
        return Err(Error::NotInJ123(l));
    }
    let js = t.spins();
    Ok(s_set(js[ordering[0]], js[ordering[1]], js[ordering[2]], l))
}

/// J^k for a given ordering; Err when k is not in J(j1,j2,j3).
pub fn jk_set_checked(t: &SpinTriple, k: HalfInt, ordering: [usize; 3]) -> Result<Vec<HalfInt>> {
    if !j_triple(t).contains(&k) {
        return Err(Error::NotInJ123(k));
    }
    let js = t.spins();
    Ok(jk_set(js[ordering[0]], js[ordering[1]], js[ordering[2]], k))
}

/// Degeneracy d_l = |S^l|.
pub fn degeneracy(t: &SpinTriple, l: HalfInt) -> usize {
    s_set(t.0, t.1, t.2, l).len()
}

/// dim C_{j1,j2,j3} = sum over l in J(j1,j2,j3) of d_l^2.
pub fn centralizer_dim(t: &SpinTriple) -> usize {
    j_triple(t)
        .iter()
        .map(|&l| {
            let d = degeneracy(t, l);
            d * d
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::half;

    fn trip(a: i64, b: i64, c: i64) -> SpinTriple {
        SpinTriple::from_twice(a, b, c)
    }

    #[test]
    fn j_sets_basic() {
        assert_eq!(j_pair(half(1), half(1)), vec![half(0), half(2)]);
        assert_eq!(j_triple(&trip(1, 1, 1)), vec![half(1), half(3)]);
        // J(j, 1/2) = {j - 1/2, j + 1/2}
        for t in 1..8 {
            assert_eq!(j_pair(half(t), half(1)), vec![half(t - 1), half(t + 1)]);
        }
        // |J(j1,j2)| = 2 min(j1,j2) + 1 for spins <= 5
        for a in 0..=10 {
            for b in 0..=10 {
                if (a - b) % 2 != 0 {
                    continue;
                }
                assert_eq!(j_pair(half(a), half(b)).len() as i64, a.min(b) + 1);
            }
        }
    }

    #[test]
    fn j123_permutation_invariant() {
        let perms: [[i64; 3]; 6] = [
            [3, 2, 1],
            [3, 1, 2],
            [2, 3, 1],
            [2, 1, 3],
            [1, 3, 2],
            [1, 2, 3],
        ];
        let base = j_triple(&trip(3, 2, 1));
        for p in perms {
            assert_eq!(j_triple(&trip(p[0], p[1], p[2])), base);
        }
    }

    #[test]
    fn m_set_111() {
        // M(1,1,1) = {chi1-chi2, chi0-chi1, 0, chi1-chi0, chi2-chi1, chi3-chi2}
        let m = m_set(half(2), half(2), half(2));
        assert_eq!(m.len(), 6);
        let expect = [
            chi(half(2)).sub(&chi(half(4))),
            chi(half(0)).sub(&chi(half(2))),
            Scalar::zero(),
            chi(half(2)).sub(&chi(half(0))),
            chi(half(4)).sub(&chi(half(2))),
            chi(half(6)).sub(&chi(half(4))),
        ];
        for e in &expect {
            assert!(m.contains(e), "missing {e}");
        }
        // M(ja,jb,jc) = M(jb,ja,jc)
        let a = m_set(half(3), half(2), half(1));
        let b = m_set(half(2), half(3), half(1));
        assert_eq!(a.len(), b.len());
        for e in &a {
            assert!(b.contains(e));
        }
    }

    #[test]
    fn s_sets_and_degeneracies() {
        // S^{3/2}((1/2)^3) = {1}
        assert_eq!(s_set(half(1), half(1), half(1), half(3)), vec![half(2)]);
        // S^{1/2}((1/2)^3) = {0, 1}, d = 2
        assert_eq!(
            s_set(half(1), half(1), half(1), half(1)),
            vec![half(0), half(2)]
        );
        // d_1(1,1,1) = 3
        assert_eq!(s_set(half(2), half(2), half(2), half(2)).len(), 3);
        // cardinality independent of ordering, for every l
        let t = trip(3, 2, 1);
        for l in j_triple(&t) {
            let d0 = s_set(t.0, t.1, t.2, l).len();
            assert_eq!(s_set(t.1, t.2, t.0, l).len(), d0);
            assert_eq!(s_set(t.0, t.2, t.1, l).len(), d0);
        }
    }

    #[test]
    fn jk_sets() {
        // J^{3/2}((1/2)^3) = {1}
        assert_eq!(jk_set(half(1), half(1), half(1), half(3)), vec![half(2)]);
        // S^k ⊆ J^k everywhere on a mixed triple
        let t = trip(3, 2, 1);
        for k in j_triple(&t) {
            let s = s_set(t.0, t.1, t.2, k);
            let jk = jk_set(t.0, t.1, t.2, k);
            for j in &s {
                assert!(jk.contains(j), "S^k not inside J^k at k={k}");
            }
        }
    }

    #[test]
    fn jk_minus_s_for_identical_spins() {
        // s integer: J^l \ S^l = {l} iff l < s/2, else empty; s half-integer: always equal
        for s2 in 1..=8 {
            let t = trip(s2, s2, s2);
            for l in j_triple(&t) {
                let s: Vec<HalfInt> = s_set(t.0, t.1, t.2, l);
                let jk = jk_set(t.0, t.1, t.2, l);
                let diff: Vec<HalfInt> = jk.iter().copied().filter(|j| !s.contains(j)).collect();
                if s2 % 2 == 0 && l.twice() * 2 < s2 {
                    assert_eq!(diff, vec![l], "s2={s2} l={l}");
                } else {
                    assert!(diff.is_empty(), "s2={s2} l={l}");
                }
            }
        }
    }

    #[test]
    fn centralizer_dims() {
        assert_eq!(centralizer_dim(&trip(1, 1, 1)), 5);
        assert_eq!(centralizer_dim(&trip(2, 2, 2)), 15);
        assert_eq!(centralizer_dim(&trip(3, 3, 3)), 34);
        for j in [2i64, 3, 4, 6] {
            assert_eq!(centralizer_dim(&trip(j, 1, 1)), 6);
        }
        // (s,s,s): dim = (2s+1)((2s+1)^2+1)/2 for 2s = 1..8
        for s2 in 1..=8 {
            let n = s2 + 1;
            assert_eq!(
                centralizer_dim(&trip(s2, s2, s2)) as i64,
                n * (n * n + 1) / 2
            );
        }
    }

    #[test]
    fn dimension_count_identity() {
        // sum (2l+1) d_l = (2j1+1)(2j2+1)(2j3+1)
        for t in [trip(1, 1, 1), trip(2, 2, 2), trip(3, 2, 1), trip(4, 1, 1)] {
            let total: i64 = j_triple(&t)
                .iter()
                .map(|&l| (l.twice() + 1) * degeneracy(&t, l) as i64)
                .sum();
            assert_eq!(total, t.product_dim() as i64);
        }
    }
}
