//! Dimension upper bounds and spanning-set certification for finitely
//! presented quotients: truncated two-sided ideal construction, linear
//! reduction, and closure certificates.
//!
//! The truncated ideal is the row space of all padded relation products
//! u * r * v supported on words of letter-length <= L (K-degree bounded by
//! kmax), kept as an inter-reduced echelon dictionary leading-word -> row.
//! Membership tests against it are sound: a reduction to zero proves ideal
//! membership; the converse is never claimed. A closure certificate for a
//! candidate spanning set therefore certifies dim <= |candidate|
//! unconditionally.
//!
//! The central letter K is handled by an eager rewrite: a monic univariate
//! annihilating polynomial for K (when present among the relations) turns
//! K^kappa into lower powers, so all rows live within K-degree kappa - 1.

use crate::matrices::{ExactMatrix, Matrix};
use crate::nc::{Alphabet, NCPoly, Word};
use crate::scalars::Scalar;
use crate::{Error, Result};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};

/// Default cap on the number of echelon rows.
pub const DEFAULT_ROW_CAP: usize = 200_000;

#[derive(Clone, Debug)]
struct KRewrite {
    /// K^kappa = sum_{t < kappa} coeffs[t] K^t
    kappa: u32,
    base: Vec<Scalar>,
}

impl KRewrite {
    /// Expansion of K^t over K^0..K^{kappa-1}.
    fn expand(&self, t: u32) -> Vec<Scalar> {
        let kappa = self.kappa as usize;
        let mut cur: Vec<Scalar> = vec![Scalar::zero(); kappa];
        if (t as usize) < kappa {
            cur[t as usize] = Scalar::one();
            return cur;
        }
        cur.clone_from_slice(&self.base);
        for _ in 0..(t - self.kappa) {
            // multiply by K: shift up, fold the overflow through the base
            let top = cur[kappa - 1].clone();
            for i in (1..kappa).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Scalar::zero();
            if !top.is_zero() {
                for (i, b) in self.base.iter().enumerate() {
                    cur[i] = cur[i].add(&top.mul(b));
                }
            }
        }
        cur
    }
}

/// A truncated two-sided ideal as an inter-reduced row dictionary.
pub struct TruncatedIdeal {
    pub num_letters: u8,
    pub max_len: usize,
    pub kmax: u32,
    k_rewrite: Option<KRewrite>,
    /// leading word -> monic row; tails never contain another leading word.
    rows: BTreeMap<Word, NCPoly>,
    /// word -> leadings of rows whose support contains that word.
    containing: HashMap<Word, BTreeSet<Word>>,
    /// Relations whose support exceeded the truncation and were left out
    /// (their absence can only weaken bounds, never break soundness).
    pub skipped: Vec<String>,
}

impl TruncatedIdeal {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of words of letter-length <= L with K-degree <= kmax.
    pub fn word_count(&self) -> usize {
        let mut words: usize = 0;
        let mut pow = 1usize;
        for _ in 0..=self.max_len {
            words += pow;
            pow *= self.num_letters as usize;
        }
        words * (self.kmax as usize + 1)
    }

    /// Word count minus rank: an upper bound for the quotient dimension at
    /// this truncation (only certified meaningful by `certify_span`).
    pub fn dim_bound(&self) -> usize {
        self.word_count() - self.rank()
    }

    fn k_reduce(&self, p: &NCPoly) -> NCPoly {
        let Some(rw) = &self.k_rewrite else {
            return p.clone();
        };
        let mut out = NCPoly::zero();
        for (w, c) in &p.terms {
            if w.kpow < rw.kappa {
                out.add_term(w.clone(), c.clone());
            } else {
                for (t, coef) in rw.expand(w.kpow).into_iter().enumerate() {
                    if !coef.is_zero() {
                        let nw = Word { kpow: t as u32, letters: w.letters.clone() };
                        out.add_term(nw, c.mul(&coef));
                    }
                }
            }
        }
        out
    }

    /// Fully reduce against the dictionary (sound normal form).
    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        let mut p = self.k_reduce(p);
        loop {
            let hit = p
                .terms
                .iter()
                .rev()
                .find(|(w, _)| self.rows.contains_key(*w))
                .map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = hit else {
                return p;
            };
            p.terms.remove(&w);
            let row = &self.rows[&w];
            for (rw, rc) in &row.terms {
                if rw == &w {
                    continue;
                }
                p.add_term(rw.clone(), c.mul(rc).neg());
            }
        }
    }

    /// True iff p reduces to zero (sound, not complete).
    pub fn contains(&self, p: &NCPoly) -> bool {
        self.reduce(p).is_zero()
    }

    fn unindex_row(&mut self, lead: &Word) {
        if let Some(row) = self.rows.get(lead) {
            let words: Vec<Word> = row.terms.keys().cloned().collect();
            for w in words {
                if let Some(s) = self.containing.get_mut(&w) {
                    s.remove(lead);
                }
            }
        }
    }

    fn index_row(&mut self, lead: &Word) {
        let words: Vec<Word> = self.rows[lead].terms.keys().cloned().collect();
        for w in words {
            self.containing.entry(w).or_default().insert(lead.clone());
        }
    }

    /// Insert a fully reduced, nonzero row; maintains inter-reduction.
    fn insert(&mut self, p: NCPoly) {
        let p = p.monic();
        let lead = p.leading().unwrap().0.clone();
        // back-substitute into rows whose tails contain the new leading word
        let holders: Vec<Word> = self
            .containing
            .get(&lead)
            .map(|s| s.iter().cloned().collect())
            .unwrap_or_default();
        for h in holders {
            if h == lead {
                continue;
            }
            let c = self.rows[&h].terms.get(&lead).cloned();
            if let Some(c) = c {
                self.unindex_row(&h);
                let mut newrow = self.rows.remove(&h).unwrap();
                newrow.axpy_sub(&c, &p);
                self.rows.insert(h.clone(), newrow);
                self.index_row(&h);
            }
        }
        self.rows.insert(lead.clone(), p);
        self.index_row(&lead);
    }
}

/// Detect a monic univariate annihilating polynomial for K.
fn detect_k_rewrite(polys: &[NCPoly]) -> Option<(usize, KRewrite)> {
    for (i, p) in polys.iter().enumerate() {
        if p.is_zero() || !p.terms.keys().all(|w| w.letters.is_empty()) {
            continue;
        }
        let (lead, lc) = p.leading().unwrap();
        if lead.kpow == 0 {
            continue;
        }
        let kappa = lead.kpow;
        let mut base = vec![Scalar::zero(); kappa as usize];
        let lcinv = lc.inv().unwrap();
        for (w, c) in &p.terms {
            if w.kpow < kappa {
                base[w.kpow as usize] = c.mul(&lcinv).neg();
            }
        }
        return Some((i, KRewrite { kappa, base }));
    }
    None
}

/// Build the truncated ideal of the given relations by saturation: every
/// inserted row is re-multiplied by the generators (within bounds) and the
/// products are reduced and inserted until the row space stabilizes.
pub fn truncated_ideal(
    polys: &[NCPoly],
    num_letters: u8,
    max_len: usize,
    kmax: Option<u32>,
) -> Result<TruncatedIdeal> {
    let detected = detect_k_rewrite(polys);
    let (rewrite_idx, k_rewrite) = match detected {
        Some((i, rw)) => (Some(i), Some(rw)),
        None => (None, None),
    };
    let kmax = match (&k_rewrite, kmax) {
        (Some(rw), Some(k)) => {
            if k + 1 < rw.kappa {
                return Err(Error::Unsupported(format!(
                    "kmax {k} below K-annihilating degree {} - 1",
                    rw.kappa
                )));
            }
            rw.kappa - 1
        }
        (Some(rw), None) => rw.kappa - 1,
        (None, Some(k)) => k,
        (None, None) => polys.iter().map(|p| p.max_kpow()).max().unwrap_or(0),
    };
    let mut ideal = TruncatedIdeal {
        num_letters,
        max_len,
        kmax,
        k_rewrite,
        rows: BTreeMap::new(),
        containing: HashMap::new(),
        skipped: vec![],
    };
    // smallest leading word first: later reductions then hit fully reduced
    // rows and the cascades stay short
    let mut queue: BinaryHeap<Reverse<QueueItem>> = BinaryHeap::new();
    let mut seq = 0u64;
    let mut push = |queue: &mut BinaryHeap<Reverse<QueueItem>>, seq: &mut u64, p: NCPoly| {
        if let Some((lead, _)) = p.leading() {
            let lead = lead.clone();
            *seq += 1;
            queue.push(Reverse(QueueItem { lead, seq: *seq, poly: p }));
        }
    };
    for (i, p) in polys.iter().enumerate() {
        if Some(i) == rewrite_idx {
            continue;
        }
        let p = ideal.k_reduce(p);
        if p.max_len() > max_len {
            ideal
                .skipped
                .push(format!("relation {i} (support length {})", p.max_len()));
            continue;
        }
        if p.max_kpow() > kmax {
            ideal
                .skipped
                .push(format!("relation {i} (K-degree {})", p.max_kpow()));
            continue;
        }
        push(&mut queue, &mut seq, p);
    }
    while let Some(Reverse(item)) = queue.pop() {
        let p = ideal.reduce(&item.poly);
        if p.is_zero() {
            continue;
        }
        if ideal.rank() >= DEFAULT_ROW_CAP {
            return Err(Error::ResourceLimit(format!(
                "row cap {DEFAULT_ROW_CAP} reached"
            )));
        }
        // enqueue generator multiples before inserting (p is owned)
        if p.max_len() + 1 <= max_len {
            for g in 0..num_letters {
                let gp = NCPoly::letter(g);
                push(&mut queue, &mut seq, gp.mul(&p));
                push(&mut queue, &mut seq, p.mul(&gp));
            }
        }
        if kmax >= 1 {
            let kp = ideal.k_reduce(&NCPoly::k().mul(&p));
            if kp.max_kpow() <= kmax {
                push(&mut queue, &mut seq, kp);
            }
        }
        ideal.insert(p);
    }
    Ok(ideal)
}

struct QueueItem {
    lead: Word,
    seq: u64,
    poly: NCPoly,
}

impl PartialEq for QueueItem {
    fn eq(&self, other: &Self) -> bool {
        self.lead == other.lead && self.seq == other.seq
    }
}
impl Eq for QueueItem {}
impl PartialOrd for QueueItem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for QueueItem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lead.cmp(&other.lead).then(self.seq.cmp(&other.seq))
    }
}

/// Certificate that a candidate word set spans the quotient.
pub struct SpanCertificate {
    pub basis_words: Vec<Word>,
    /// Left-multiplication action of each generator on the span
    /// (generator label, matrix in the candidate basis).
    pub actions: Vec<(String, ExactMatrix)>,
    pub closed: bool,
}

/// Echelon of normal forms with coordinate tracking over the candidate set.
struct NfSolver {
    /// (normal form, its coordinates over the candidate words)
    rows: Vec<(NCPoly, Vec<Scalar>)>,
}

impl NfSolver {
    fn new() -> Self {
        NfSolver { rows: vec![] }
    }

    /// Reduce p against the stored rows, tracking coordinates.
    fn reduce(&self, p: &NCPoly, mut aug: Vec<Scalar>) -> (NCPoly, Vec<Scalar>) {
        let mut p = p.clone();
        loop {
            let Some((lw, lc)) = p.leading().map(|(w, c)| (w.clone(), c.clone())) else {
                return (p, aug);
            };
            let hit = self
                .rows
                .iter()
                .find(|(r, _)| r.leading().map(|(w, _)| w) == Some(&lw));
            let Some((row, raug)) = hit else {
                return (p, aug);
            };
            let f = lc.div(row.leading().unwrap().1).unwrap();
            p.axpy_sub(&f, row);
            for (a, b) in aug.iter_mut().zip(raug) {
                *a = a.sub(&b.mul(&f));
            }
        }
    }

    /// Insert the i-th candidate's normal form.
    fn insert(&mut self, nf: NCPoly, i: usize, n: usize) {
        let mut aug = vec![Scalar::zero(); n];
        aug[i] = Scalar::one();
        let (p, aug) = self.reduce(&nf, aug);
        if !p.is_zero() {
            self.rows.push((p, aug));
        }
    }

    /// Express p over the candidate words, when possible.
    fn solve(&self, p: &NCPoly, n: usize) -> Option<Vec<Scalar>> {
        let (rem, aug) = self.reduce(p, vec![Scalar::zero(); n]);
        if rem.is_zero() {
            // p - sum aug_j cand_j = 0, so p = sum (-aug_j) cand_j
            Some(aug.iter().map(|c| c.neg()).collect())
        } else {
            None
        }
    }
}

/// Reduce g*w for every generator g and candidate word w; closed iff every
/// normal form lies in the span of the candidates' normal forms. On success
/// the certificate proves dim <= |candidate|.
pub fn certify_span(
    ideal: &TruncatedIdeal,
    candidate: &[Word],
    alphabet: &Alphabet,
) -> Result<SpanCertificate> {
    if !candidate.iter().any(|w| w.is_empty()) {
        return Err(Error::Unsupported("candidate must contain the unit word".into()));
    }
    let d = candidate.len();
    let mut solver = NfSolver::new();
    for (i, w) in candidate.iter().enumerate() {
        let nf = ideal.reduce(&NCPoly::from_word(w.clone()));
        solver.insert(nf, i, d);
    }
    let mut gens: Vec<(String, Word)> = (0..ideal.num_letters)
        .map(|g| (alphabet.names[g as usize].clone(), Word::letter(g)))
        .collect();
    if ideal.kmax >= 1 || ideal.k_rewrite.is_some() {
        gens.push(("K".to_string(), Word::k()));
    }
    let mut actions = vec![];
    for (label, g) in &gens {
        let mut mat: ExactMatrix = Matrix::zeros(d, d);
        for (col, w) in candidate.iter().enumerate() {
            let prod = NCPoly::from_word(g.concat(w));
            let nf = ideal.reduce(&prod);
            let Some(coords) = solver.solve(&nf, d) else {
                return Err(Error::NotClosedAtTruncation {
                    generator: label.clone(),
                    word: w.display(alphabet),
                });
            };
            for (row, c) in coords.into_iter().enumerate() {
                mat[(row, col)] = c;
            }
        }
        actions.push((label.clone(), mat));
    }
    Ok(SpanCertificate {
        basis_words: candidate.to_vec(),
        actions,
        closed: true,
    })
}

impl SpanCertificate {
    /// Matrix for a generator label.
    pub fn action(&self, label: &str) -> Option<&ExactMatrix> {
        self.actions
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, m)| m)
    }

    /// The regular-action matrices must themselves satisfy the relations.
    pub fn actions_satisfy(&self, rels: &crate::aw::RelationSet) -> bool {
        let d = self.basis_words.len();
        let ident: ExactMatrix = Matrix::identity(d);
        let amat = self.action("A").cloned().unwrap_or_else(|| ident.clone());
        let bmat = self.action("B").cloned().unwrap_or_else(|| ident.clone());
        let kmat = self.action("K").cloned().unwrap_or_else(|| {
            // AWbar^k quotients: K acts as the constant chi_k
            match rels.k {
                Some(k) => ident.scale(&crate::scalars::chi(k)),
                None => ident.clone(),
            }
        });
        let mats = [&amat, &bmat];
        for rel in &rels.relations {
            let ok = match &rel.form {
                crate::aw::RelForm::Direct(p) => p.eval_matrices(&mats, &kmat).is_zero(),
                crate::aw::RelForm::Annihilating { base_poly, roots, .. } => {
                    let base = base_poly.eval_matrices(&mats, &kmat);
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
                return false;
            }
        }
        true
    }
}


// ---------------------------------------------------------------------------
// Staged certification (relations whose support exceeds the truncation)
// ---------------------------------------------------------------------------

/// All words of the truncation universe that are not leading words of the
/// ideal; reduction maps everything into their span, so they carry the
/// quotient-at-truncation coordinates.
pub fn normal_words(ideal: &TruncatedIdeal, cap: usize) -> Result<Vec<Word>> {
    let mut out = vec![];
    // enumerate universe in graded order
    let mut level: Vec<Vec<u8>> = vec![vec![]];
    for len in 0..=ideal.max_len {
        for letters in &level {
            for kpow in 0..=ideal.kmax {
                let w = Word { kpow, letters: letters.clone() };
                if !ideal.rows.contains_key(&w) {
                    out.push(w);
                    if out.len() > cap {
                        return Err(Error::ResourceLimit(format!(
                            "more than {cap} normal words at truncation"
                        )));
                    }
                }
            }
        }
        if len < ideal.max_len {
            let mut next = vec![];
            for letters in &level {
                for g in 0..ideal.num_letters {
                    let mut l2 = letters.clone();
                    l2.push(g);
                    next.push(l2);
                }
            }
            level = next;
        }
    }
    out.sort();
    Ok(out)
}

/// Coordinates of reduce(p) over the normal words.
fn coords(ideal: &TruncatedIdeal, pos: &HashMap<Word, usize>, p: &NCPoly) -> Vec<Scalar> {
    let nf = ideal.reduce(p);
    let mut v = vec![Scalar::zero(); pos.len()];
    for (w, c) in &nf.terms {
        v[pos[w]] = c.clone();
    }
    v
}

/// Incrementally reduced span of coordinate vectors.
struct VecSpan {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl VecSpan {
    fn new() -> Self {
        VecSpan { rows: vec![] }
    }

    fn reduce_vec(&self, v: &mut Vec<Scalar>) {
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let c = v[*piv].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a = a.sub(&c.mul(b));
                    }
                }
            }
        }
    }

    /// Reduce and insert; true when the span grew.
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce_vec(&mut v);
        if let Some(piv) = v.iter().position(|e| !e.is_zero()) {
            let inv = v[piv].inv().unwrap();
            for e in v.iter_mut() {
                if !e.is_zero() {
                    *e = e.mul(&inv);
                }
            }
            self.rows.push((piv, v));
            true
        } else {
            false
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// A relation in factored annihilating form for the staged pass.
pub struct LongRelation {
    pub label: String,
    pub base: NCPoly,
    pub roots: Vec<Scalar>,
}

/// Certify a candidate span for the quotient by the ideal's relations PLUS
/// factored relations whose expanded support exceeds the truncation.
///
/// The truncated quotient is carried on its normal words; left and right
/// multiplication act there by honest reductions. Each long relation is
/// evaluated through the left action, its two-sided orbit is saturated into
/// a subspace W of honest ideal-member coordinates, and the candidate is
/// certified inside the quotient space modulo W. The certified dimension is
/// |candidate| and the argument is sound: dim(quotient) <= (normal words)
/// - dim W <= |candidate| once closure holds.
pub fn certify_span_staged(
    ideal: &TruncatedIdeal,
    long: &[LongRelation],
    candidate: &[Word],
    alphabet: &Alphabet,
) -> Result<(SpanCertificate, usize)> {
    if long.is_empty() {
        let cert = certify_span(ideal, candidate, alphabet)?;
        return Ok((cert, ideal.dim_bound()));
    }
    let nw = normal_words(ideal, 4096)?;
    let n = nw.len();
    let pos: HashMap<Word, usize> = nw.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

    // generators: letters, plus K when it is a live letter
    let mut gens: Vec<(String, Word)> = (0..ideal.num_letters)
        .map(|g| (alphabet.names[g as usize].clone(), Word::letter(g)))
        .collect();
    let has_k = ideal.kmax >= 1 || ideal.k_rewrite.is_some();
    if has_k {
        gens.push(("K".to_string(), Word::k()));
    }
    let mut left = vec![];
    let mut right = vec![];
    for (_, g) in &gens {
        let mut lm: ExactMatrix = Matrix::zeros(n, n);
        let mut rm: ExactMatrix = Matrix::zeros(n, n);
        for (col, w) in nw.iter().enumerate() {
            for (r, c) in coords(ideal, &pos, &NCPoly::from_word(g.concat(w)))
                .into_iter()
                .enumerate()
            {
                lm[(r, col)] = c;
            }
            for (r, c) in coords(ideal, &pos, &NCPoly::from_word(w.concat(g)))
                .into_iter()
                .enumerate()
            {
                rm[(r, col)] = c;
            }
        }
        left.push(lm);
        right.push(rm);
    }
    let letter_left: Vec<ExactMatrix> = left[..ideal.num_letters as usize].to_vec();
    let k_left = if has_k {
        left.last().unwrap().clone()
    } else {
        Matrix::identity(n)
    };

    // W: two-sided orbit of the long relations' coordinate vectors
    let mut w_span = VecSpan::new();
    let mut frontier: Vec<Vec<Scalar>> = vec![];
    let unit = coords(ideal, &pos, &NCPoly::one());
    for rel in long {
        let refs: Vec<&ExactMatrix> = letter_left.iter().collect();
        let base_l = rel.base.eval_matrices(&refs, &k_left);
        let mut v = unit.clone();
        for m in &rel.roots {
            let mut next = base_l.apply(&v);
            for (a, b) in next.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *a = a.sub(&m.mul(b));
                }
            }
            v = next;
        }
        if w_span.insert(v.clone()) {
            frontier.push(v);
        }
    }
    while let Some(v) = frontier.pop() {
        for m in left.iter().chain(right.iter()) {
            let img = m.apply(&v);
            if w_span.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }
    let staged_bound = n - w_span.dim();

    // candidate coordinates in V/W, with coefficient tracking
    let d = candidate.len();
    if !candidate.iter().any(|w| w.is_empty()) {
        return Err(Error::Unsupported("candidate must contain the unit word".into()));
    }
    let mut solver_rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)> = vec![]; // (pivot, vec, aug)
    let reduce2 = |v: &mut Vec<Scalar>, aug: &mut Vec<Scalar>,
                   rows: &Vec<(usize, Vec<Scalar>, Vec<Scalar>)>| {
        for (piv, row, raug) in rows {
            if !v[*piv].is_zero() {
                let c = v[*piv].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a = a.sub(&c.mul(b));
                    }
                }
                for (a, b) in aug.iter_mut().zip(raug) {
                    *a = a.sub(&c.mul(b));
                }
            }
        }
    };
    for (i, w) in candidate.iter().enumerate() {
        let mut v = coords(ideal, &pos, &NCPoly::from_word(w.clone()));
        w_span.reduce_vec(&mut v);
        let mut aug = vec![Scalar::zero(); d];
        aug[i] = Scalar::one();
        reduce2(&mut v, &mut aug, &solver_rows);
        if let Some(piv) = v.iter().position(|e| !e.is_zero()) {
            let inv = v[piv].inv().unwrap();
            for e in v.iter_mut() {
                if !e.is_zero() {
                    *e = e.mul(&inv);
                }
            }
            for e in aug.iter_mut() {
                if !e.is_zero() {
                    *e = e.mul(&inv);
                }
            }
            solver_rows.push((piv, v, aug));
        }
    }
    let mut actions = vec![];
    for ((label, _), lm) in gens.iter().zip(&left) {
        let mut mat: ExactMatrix = Matrix::zeros(d, d);
        for (col, w) in candidate.iter().enumerate() {
            let mut v = lm.apply(&coords(ideal, &pos, &NCPoly::from_word(w.clone())));
            w_span.reduce_vec(&mut v);
            let mut aug = vec![Scalar::zero(); d];
            reduce2(&mut v, &mut aug, &solver_rows);
            if v.iter().any(|e| !e.is_zero()) {
                return Err(Error::NotClosedAtTruncation {
                    generator: label.clone(),
                    word: w.display(alphabet),
                });
            }
            for (row, c) in aug.into_iter().enumerate() {
                mat[(row, col)] = c.neg();
            }
        }
        actions.push((label.clone(), mat));
    }
    Ok((
        SpanCertificate { basis_words: candidate.to_vec(), actions, closed: true },
        staged_bound,
    ))
}

/// Convenience: parse candidate words like "1", "A", "AB", "KAB" over the
/// given alphabet (single-character letter names only).
pub fn parse_words(alphabet: &Alphabet, specs: &[&str]) -> Vec<Word> {
    specs
        .iter()
        .map(|s| {
            let mut w = Word::one();
            for ch in s.chars() {
                if ch == '1' {
                    continue;
                }
                if ch == 'K' {
                    w.kpow += 1;
                    continue;
                }
                let id = alphabet
                    .names
                    .iter()
                    .position(|n| n == &ch.to_string())
                    .expect("unknown letter");
                w.letters.push(id as u8);
            }
            w
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aw;
    use crate::halfint::SpinTriple;
    use crate::nc::annihilating_product;
    use crate::scalars::{qint_i, qplus};
    use rand::{Rng, SeedableRng};

    fn trip(a: i64, b: i64, c: i64) -> SpinTriple {
        SpinTriple::from_twice(a, b, c)
    }

    #[test]
    fn idempotent_like_rewrite() {
        // rels = {A^2 - [2]_q A}, L = 4: A^p reduces to [2]^{p-1} A
        let a = NCPoly::letter(0);
        let rel = a.pow(2).sub(&a.scale(&qplus()));
        let ideal = truncated_ideal(&[rel], 1, 4, None).unwrap();
        for p in 2..=4u32 {
            let nf = ideal.reduce(&a.pow(p));
            let expect = a.scale(&qplus().pow(p - 1));
            assert_eq!(nf, expect, "A^{p}");
        }
    }

    #[test]
    fn awbar_half_cubed_bound_is_five() {
        let rels = aw::awbar_relations(&trip(1, 1, 1));
        let ideal = truncated_ideal(&rels.polys(), 2, 6, None).unwrap();
        assert!(ideal.skipped.is_empty());
        assert_eq!(ideal.kmax, 1);
        assert_eq!(ideal.dim_bound(), 5);
        // bound is nonincreasing in L
        let ideal7 = truncated_ideal(&rels.polys(), 2, 7, None).unwrap();
        assert!(ideal7.dim_bound() <= ideal.dim_bound());
        assert_eq!(ideal7.dim_bound(), 5);
    }

    #[test]
    fn certify_half_cubed_basis() {
        let rels = aw::awbar_relations(&trip(1, 1, 1));
        let alpha = aw::aw_alphabet();
        let ideal = truncated_ideal(&rels.polys(), 2, 6, None).unwrap();
        let basis = parse_words(&alpha, &["1", "A", "B", "AB", "BA"]);
        let cert = certify_span(&ideal, &basis, &alpha).unwrap();
        assert!(cert.closed);
        assert!(cert.actions_satisfy(&rels));
        // failing candidate: {1, A} is not closed (B*1 leaves the span)
        let small = parse_words(&alpha, &["1", "A"]);
        match certify_span(&ideal, &small, &alpha) {
            Err(Error::NotClosedAtTruncation { .. }) => {}
            Err(e) => panic!("expected NotClosedAtTruncation, got {e:?}"),
            Ok(_) => panic!("expected NotClosedAtTruncation, got a certificate"),
        }
    }

    #[test]
    fn awbar_k_trivial_quotient() {
        // AWbar^{9/2}((3/2)^3): everything is constant; dim bound 1
        let rels = aw::awbar_k_relations(&trip(3, 3, 3), crate::halfint::half(9)).unwrap();
        let ideal = truncated_ideal(&rels.polys(), 2, 4, None).unwrap();
        assert_eq!(ideal.dim_bound(), 1);
        let alpha = aw::aw_alphabet();
        let cert = certify_span(&ideal, &parse_words(&alpha, &["1"]), &alpha).unwrap();
        assert!(cert.closed);
        assert!(cert.actions_satisfy(&rels));
    }

    #[test]
    fn soundness_random_products() {
        // u * r * v always reduces to zero
        let rels = aw::awbar_relations(&trip(1, 1, 1));
        let polys = rels.polys();
        let ideal = truncated_ideal(&polys, 2, 6, None).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        while checked < 20 {
            let r = &polys[rng.gen_range(0..polys.len())];
            let ul = rng.gen_range(0..=2);
            let vl = rng.gen_range(0..=2);
            let mut u = Word::one();
            for _ in 0..ul {
                u.letters.push(rng.gen_range(0..2));
            }
            let mut v = Word::one();
            for _ in 0..vl {
                v.letters.push(rng.gen_range(0..2));
            }
            let p = NCPoly::from_word(u).mul(r).mul(&NCPoly::from_word(v));
            let p = ideal.k_reduce(&p);
            if p.max_len() > ideal.max_len || p.max_kpow() > ideal.kmax {
                continue;
            }
            assert!(ideal.contains(&p), "u r v not recognized as a member");
            checked += 1;
        }
    }

    #[test]
    fn alt_presentation_members() {
        // A + [D',B]_q/(q^2-q^{-2}) - (a1 a2 + a3 K)/(q+q^{-1}) and its
        // partner lie in the ideal of the two defining relations
        let t = trip(2, 1, 1);
        let al = [
            crate::scalars::chi(t.0),
            crate::scalars::chi(t.1),
            crate::scalars::chi(t.2),
        ];
        let k = NCPoly::k();
        let rels = aw::aw3_defining_relations(&t);
        let ideal = truncated_ideal(&rels.polys(), 2, 6, Some(3)).unwrap();
        let a = NCPoly::letter(aw::A);
        let b = NCPoly::letter(aw::B);
        let dp = aw::dprime_poly(&al, &k);
        let q2m = Scalar::v_pow(4).sub(&Scalar::v_pow(-4));
        let alt1 = a
            .add(&crate::nc::qcomm(&dp, &b).scale(&q2m.inv().unwrap()))
            .sub(
                &NCPoly::constant(al[0].mul(&al[1]))
                    .add(&k.scale(&al[2]))
                    .scale(&qplus().inv().unwrap()),
            );
        let alt2 = b
            .add(&crate::nc::qcomm(&a, &dp).scale(&q2m.inv().unwrap()))
            .sub(
                &NCPoly::constant(al[1].mul(&al[2]))
                    .add(&k.scale(&al[0]))
                    .scale(&qplus().inv().unwrap()),
            );
        assert!(ideal.contains(&alt1), "Eq-2.25-style relation not a member");
        assert!(ideal.contains(&alt2), "Eq-2.26-style relation not a member");
        // zero polynomial trivially a member
        assert!(ideal.contains(&NCPoly::zero()));
        let _ = annihilating_product(&a, &[qint_i(2)]);
    }
}

#[cfg(test)]
mod bench_experiment {
    use super::*;
    use crate::aw;
    use crate::halfint::SpinTriple;

    #[test]
    #[ignore]
    fn awbar_111_bound() {
        let t0 = std::time::Instant::now();
        let rels = aw::awbar_relations(&SpinTriple::from_twice(2, 2, 2));
        let polys = rels.polys();
        println!("expanded in {:?}", t0.elapsed());
        let ideal = truncated_ideal(&polys, 2, 8, None).unwrap();
        println!(
            "built in {:?}; rank {}, words {}, bound {}, skipped {:?}",
            t0.elapsed(),
            ideal.rank(),
            ideal.word_count(),
            ideal.dim_bound(),
            ideal.skipped
        );
        let alpha = aw::aw_alphabet();
        let basis = parse_words(
            &alpha,
            &[
                "1", "A", "B", "AA", "AB", "BA", "BB", "AAB", "ABA", "ABB", "BAA", "BAB", "AABB",
                "ABAB", "BABA",
            ],
        );
        let cert = certify_span(&ideal, &basis, &alpha).unwrap();
        println!("certified in {:?}: closed = {}", t0.elapsed(), cert.closed);
    }
}
