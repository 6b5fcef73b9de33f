//! Words and noncommutative polynomials over a finite letter alphabet with
//! one central letter K, with coefficients in Q(v).
//!
//! The same machinery carries the Askey-Wilson quotients (letters A, B) and
//! the diagram-algebra presentations (letters sigma_i, s_i, ...); K-degree is
//! simply zero for the latter.

use crate::matrices::{ExactMatrix, Matrix};
use crate::scalars::Scalar;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Letter names for display; index = letter id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: &[&str]) -> Self {
        Alphabet { names: names.iter().map(|s| s.to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// K^kpow * letters, in normal form (K is central).
///
/// Ordered by A/B-length first, then lexicographically (letter ids
/// ascending), then by K-degree — the fixed admissible order of the engine.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pub kpow: u32,
    pub letters: Vec<u8>,
}

impl Word {
    pub fn one() -> Self {
        Word { kpow: 0, letters: vec![] }
    }

    pub fn letter(id: u8) -> Self {
        Word { kpow: 0, letters: vec![id] }
    }

    pub fn k() -> Self {
        Word { kpow: 1, letters: vec![] }
    }

    pub fn from_letters(letters: &[u8]) -> Self {
        Word { kpow: 0, letters: letters.to_vec() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty() && self.kpow == 0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { kpow: self.kpow + other.kpow, letters }
    }

    pub fn display(&self, alpha: &Alphabet) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut parts = vec![];
        if self.kpow == 1 {
            parts.push("K".to_string());
        } else if self.kpow > 1 {
            parts.push(format!("K^{}", self.kpow));
        }
        for &l in &self.letters {
            parts.push(alpha.names[l as usize].clone());
        }
        parts.join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.kpow.cmp(&other.kpow))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kpow > 0 {
            write!(f, "K^{}.", self.kpow)?;
        }
        for &l in &self.letters {
            write!(f, "{}", (b'A' + l) as char)?;
        }
        if self.is_empty() {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Linear combination of words with Scalar coefficients; no zero terms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    pub terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NCPoly::from_word(Word::one())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Scalar::one());
        NCPoly { terms }
    }

    pub fn letter(id: u8) -> Self {
        NCPoly::from_word(Word::letter(id))
    }

    pub fn k() -> Self {
        NCPoly::from_word(Word::k())
    }

    pub fn constant(c: Scalar) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        let mut terms = BTreeMap::new();
        terms.insert(Word::one(), c);
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    /// self -= c * other, in place.
    pub fn axpy_sub(&mut self, c: &Scalar, other: &Self) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), c.mul(x).neg());
        }
    }

    pub fn neg(&self) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = NCPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Leading (largest) word in the term order.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Longest letter length appearing in the support.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn max_kpow(&self) -> u32 {
        self.terms.keys().map(|w| w.kpow).max().unwrap_or(0)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => NCPoly::zero(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading")),
        }
    }

    /// Replace each letter by `letter_map[id]` and K by `k_map`, and expand.
    pub fn substitute(&self, letter_map: &[NCPoly], k_map: &NCPoly) -> NCPoly {
        let mut kpow_cache: Vec<NCPoly> = vec![NCPoly::one()];
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            while kpow_cache.len() <= w.kpow as usize {
                let next = kpow_cache.last().unwrap().mul(k_map);
                kpow_cache.push(next);
            }
            let mut acc = kpow_cache[w.kpow as usize].clone();
            for &l in &w.letters {
                acc = acc.mul(&letter_map[l as usize]);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Evaluate on matrices: letters to `mats[id]`, K to `kmat`.
    pub fn eval_matrices(&self, mats: &[&ExactMatrix], kmat: &ExactMatrix) -> ExactMatrix {
        let n = kmat.rows;
        let mut out: ExactMatrix = Matrix::zeros(n, n);
        let mut cache: HashMap<Word, ExactMatrix> = HashMap::new();
        cache.insert(Word::one(), Matrix::identity(n));
        for (w, c) in &self.terms {
            let m = eval_word(w, mats, kmat, &mut cache);
            out = out.add(&m.scale(c));
        }
        out
    }

    /// Canonical text form: terms in ascending word order.
    pub fn display(&self, alpha: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| format!("({}) {}", c, w.display(alpha)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn eval_word(
    w: &Word,
    mats: &[&ExactMatrix],
    kmat: &ExactMatrix,
    cache: &mut HashMap<Word, ExactMatrix>,
) -> ExactMatrix {
    if let Some(m) = cache.get(w) {
        return m.clone();
    }
    // peel the last letter (or one K) so prefixes get shared
    let m = if !w.letters.is_empty() {
        let mut prefix = w.clone();
        let last = prefix.letters.pop().unwrap();
        let pm = eval_word(&prefix, mats, kmat, cache);
        pm.mul(mats[last as usize])
    } else {
        let mut prefix = w.clone();
        prefix.kpow -= 1;
        let pm = eval_word(&prefix, mats, kmat, cache);
        pm.mul(kmat)
    };
    cache.insert(w.clone(), m.clone());
    m
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) {w:?}")?;
        }
        Ok(())
    }
}

/// q X Y - q^{-1} Y X
pub fn qcomm(x: &NCPoly, y: &NCPoly) -> NCPoly {
    let q = Scalar::v_pow(2);
    let qi = Scalar::v_pow(-2);
    x.mul(y).scale(&q).sub(&y.mul(x).scale(&qi))
}

/// X Y + Y X
pub fn anticomm(x: &NCPoly, y: &NCPoly) -> NCPoly {
    x.mul(y).add(&y.mul(x))
}

/// prod_r (base - r), expanded.
pub fn annihilating_product(base: &NCPoly, roots: &[Scalar]) -> NCPoly {
    let mut out = NCPoly::one();
    for r in roots {
        out = out.mul(&base.sub(&NCPoly::constant(r.clone())));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qminus;

    const A: u8 = 0;
    const B: u8 = 1;

    #[test]
    fn word_order_graded_lex() {
        let a = Word::letter(A);
        let b = Word::letter(B);
        let ab = a.concat(&b);
        let ba = b.concat(&a);
        assert!(a < b);
        assert!(b < ab); // graded: length first
        assert!(ab < ba);
        // K-degree is the last tiebreaker
        let ka = Word { kpow: 1, letters: vec![A] };
        assert!(a < ka);
        assert!(ka < ab);
    }

    #[test]
    fn ring_axioms_spot_checks() {
        let a = NCPoly::letter(A);
        let b = NCPoly::letter(B);
        let k = NCPoly::k();
        // K central by normal form: K*A = A*K as words
        assert_eq!(k.mul(&a), a.mul(&k));
        // (A + B)^2 = A^2 + AB + BA + B^2
        let lhs = a.add(&b).pow(2);
        let rhs = a
            .mul(&a)
            .add(&a.mul(&b))
            .add(&b.mul(&a))
            .add(&b.mul(&b));
        assert_eq!(lhs, rhs);
        // A*B != B*A
        assert_ne!(a.mul(&b), b.mul(&a));
        // qcomm(X, X) = (q - q^{-1}) X^2
        assert_eq!(qcomm(&a, &a), a.mul(&a).scale(&qminus()));
    }

    #[test]
    fn substitution_and_eval() {
        let a = NCPoly::letter(A);
        let b = NCPoly::letter(B);
        let p = qcomm(&a, &b); // q AB - q^{-1} BA
        // substitute A -> B, B -> A: q BA - q^{-1} AB
        let swapped = p.substitute(&[b.clone(), a.clone()], &NCPoly::k());
        assert_eq!(swapped, qcomm(&b, &a));
        // evaluate on matrices: A = E, B = F on spin-1/2
        let rep = crate::quantum::irrep(crate::halfint::half(1)).unwrap();
        let m = p.eval_matrices(&[&rep.e, &rep.f], &rep.k);
        assert_eq!(m, rep.e.qcommutator(&rep.f));
    }

    #[test]
    fn annihilating_product_expansion() {
        // (A - 1)(A - 2) = A^2 - 3A + 2
        let a = NCPoly::letter(A);
        let p = annihilating_product(&a, &[Scalar::from_int(1), Scalar::from_int(2)]);
        let expect = a
            .pow(2)
            .sub(&a.scale(&Scalar::from_int(3)))
            .add(&NCPoly::constant(Scalar::from_int(2)));
        assert_eq!(p, expect);
    }
}
