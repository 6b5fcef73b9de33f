//! Machine-readable verification reports and the named check suites.
//!
//! Every suite produces a deterministic, check_id-ordered list of
//! `VerificationReport`s; the CLI serializes them as one JSON document.

use crate::aw;
use crate::centralizer;
use crate::diagram;
use crate::halfint::{half, HalfInt, SpinTriple};
use crate::matrices::{ExactMatrix, Matrix, Mode};
use crate::quantum::{self, Gen};
use crate::quotient::{certify_span_staged, parse_words, truncated_ideal, LongRelation};
use crate::representations;
use crate::scalars::{qminus, qplus, SampleGen};
use crate::spins;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

/// Default seed: "AW3" read as base 36.
pub const DEFAULT_SEED: u64 = 14115;
pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Advisory,
    Unsupported,
}

/// Structured outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spins: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_or_ell: Option<String>,
    pub mode: String,
    pub samples: Vec<String>,
    pub status: Status,
    pub details: Value,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Advisory)
    }
}

/// Resolved configuration for a run.
#[derive(Clone, Debug, Serialize)]
pub struct Config {
    /// Triples to verify; None means each suite's default list.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spins: Option<Vec<SpinTriple>>,
    /// Force EXACT or SAMPLED; None means the per-check policy.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    pub samples: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_word_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kmax: Option<u32>,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            spins: None,
            mode: None,
            samples: 5,
            seed: DEFAULT_SEED,
            max_word_len: None,
            kmax: None,
            timings: false,
        }
    }
}

impl Config {
    fn gen(&self, salt: u64) -> SampleGen {
        SampleGen::new(self.seed.wrapping_add(salt.wrapping_mul(0x9e3779b97f4a7c15)))
    }

    fn sampled_mode(&self, salt: u64) -> Mode {
        Mode::Sampled(self.gen(salt))
    }
}

fn finish(
    check_id: String,
    spins: Option<SpinTriple>,
    k: Option<HalfInt>,
    mode: &str,
    samples: Vec<String>,
    ok: bool,
    details: Value,
    started: Instant,
    timings: bool,
) -> VerificationReport {
    VerificationReport {
        check_id,
        spins: spins.map(|t| t.to_string()),
        k_or_ell: k.map(|k| k.to_string()),
        mode: mode.to_string(),
        samples,
        status: if ok { Status::Pass } else { Status::Fail },
        details,
        wall_time_ms: if timings {
            started.elapsed().as_millis() as u64
        } else {
            0
        },
    }
}

/// Deterministic salt per check id, so parallel execution order cannot
/// change which sample points a check consumes.
fn salt_of(id: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in id.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

// ---------------------------------------------------------------------------
// Default spin lists
// ---------------------------------------------------------------------------

/// The 20 multisets from {0, 1/2, 1, 3/2} plus (2, 1/2, 1/2).
pub fn homomorphism_triples() -> Vec<SpinTriple> {
    let mut out = vec![];
    for a in 0..=3i64 {
        for b in a..=3 {
            for c in b..=3 {
                out.push(SpinTriple::from_twice(a, b, c));
            }
        }
    }
    out.push(SpinTriple::from_twice(4, 1, 1));
    out
}

/// Criterion-2 family: the three identical triples and (j, 1/2, 1/2).
pub fn centralizer_triples() -> Vec<SpinTriple> {
    vec![
        SpinTriple::from_twice(1, 1, 1),
        SpinTriple::from_twice(2, 2, 2),
        SpinTriple::from_twice(3, 3, 3),
        SpinTriple::from_twice(2, 1, 1),
        SpinTriple::from_twice(3, 1, 1),
        SpinTriple::from_twice(4, 1, 1),
    ]
}

fn chosen_triples(cfg: &Config, default: Vec<SpinTriple>) -> Vec<SpinTriple> {
    cfg.spins.clone().unwrap_or(default)
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

fn check_aw_homomorphism(t: &SpinTriple, cfg: &Config) -> VerificationReport {
    let id = format!("aw-homomorphism/{t}");
    let started = Instant::now();
    let mut gen = cfg.gen(salt_of(&id));
    match centralizer::verify_aw_image(t, &mut gen) {
        Ok(out) => {
            let failed: Vec<String> = out
                .relation_results
                .iter()
                .filter(|(_, ok)| !ok)
                .map(|(l, _)| l.clone())
                .collect();
            let details = json!({
                "relations": out.relation_results.len(),
                "failed_relations": failed,
                "phi_D_is_C13_0": out.d_matches,
                "phi_Dprime_is_C13_1": out.dprime_matches,
                "phi_omega_identity": out.phi_omega_ok,
                "c13_conjugation_consistent": out.c13_consistent,
                "r_convention_id": out.convention_id,
            });
            finish(id, Some(*t), None, "EXACT", vec![], out.pass(), details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(*t), e, started, cfg.timings),
    }
}

fn error_report(
    check_id: String,
    spins: Option<SpinTriple>,
    e: Error,
    started: Instant,
    timings: bool,
) -> VerificationReport {
    VerificationReport {
        check_id,
        spins: spins.map(|t| t.to_string()),
        k_or_ell: None,
        mode: "EXACT".into(),
        samples: vec![],
        status: Status::Fail,
        details: json!({ "error": e.to_string() }),
        wall_time_ms: if timings {
            started.elapsed().as_millis() as u64
        } else {
            0
        },
    }
}

fn check_rmatrix_contract(t: &SpinTriple, cfg: &Config) -> VerificationReport {
    let id = format!("rmatrix-contract/{t}");
    let started = Instant::now();
    let run = || -> Result<(bool, Value)> {
        let dims = t.site_dims();
        let r12 = quantum::rmatrix(t.0, t.1)?;
        let r13 = quantum::rmatrix(t.0, t.2)?;
        let r23 = quantum::rmatrix(t.1, t.2)?;
        // intertwining is the construction contract; recheck explicitly
        let mut inter_ok = true;
        for (r, (a, b)) in [(&r12, (t.0, t.1)), (&r13, (t.0, t.2)), (&r23, (t.1, t.2))] {
            for x in [Gen::E, Gen::F, Gen::K] {
                let lhs = quantum::coproduct_image(x, a, b)?.mul(&r.mat);
                let rhs = r.mat.mul(&quantum::coproduct_op_image(x, a, b)?);
                if lhs != rhs {
                    inter_ok = false;
                }
            }
        }
        let e12 = crate::matrices::embed_sites(&r12.mat, &[0, 1], &dims)?;
        let e13 = crate::matrices::embed_sites(&r13.mat, &[0, 2], &dims)?;
        let e23 = crate::matrices::embed_sites(&r23.mat, &[1, 2], &dims)?;
        let ybe_ok = e12.mul(&e13).mul(&e23) == e23.mul(&e13).mul(&e12);
        let cs = quantum::casimir_matrices(t)?;
        let cross_ok = cs.d_matrix() == cs.c13_0 && cs.dprime_matrix() == cs.c13_1;
        let details = json!({
            "intertwining": inter_ok,
            "yang_baxter": ybe_ok,
            "eq_2_14_agreement": cs.c13_0_consistent,
            "eq_2_15_agreement": cs.c13_1_consistent,
            "d_cross_check": cross_ok,
            "convention_id": r12.convention_id,
        });
        let ok = inter_ok && ybe_ok && cs.c13_0_consistent && cs.c13_1_consistent && cross_ok;
        Ok((ok, details))
    };
    match run() {
        Ok((ok, details)) => {
            finish(id, Some(*t), None, "EXACT", vec![], ok, details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(*t), e, started, cfg.timings),
    }
}

fn check_centralizer_dim(t: &SpinTriple, cfg: &Config) -> VerificationReport {
    let id = format!("centralizer-dim/{t}");
    let started = Instant::now();
    let expected = spins::centralizer_dim(t);
    let mode = cfg.sampled_mode(salt_of(&id));
    match centralizer::commutant(t, &mode, cfg.samples) {
        Ok(cb) => {
            let ok = cb.dim == expected && cb.samples_agree();
            let details = json!({
                "expected": expected,
                "dim": cb.dim,
                "sample_dims": cb.sample_dims,
            });
            let samples = cb.samples.iter().map(|r| r.to_string()).collect();
            finish(id, Some(*t), None, "SAMPLED", samples, ok, details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(*t), e, started, cfg.timings),
    }
}

fn check_surjectivity(t: &SpinTriple, cfg: &Config) -> VerificationReport {
    let id = format!("surjectivity/{t}");
    let started = Instant::now();
    let mode = cfg.sampled_mode(salt_of(&id));
    match centralizer::verify_surjectivity(t, &mode, cfg.samples) {
        Ok(out) => {
            let details = json!({
                "expected": out.expected,
                "generated_dim": out.generated_dim,
                "sample_dims": out.sample_dims,
            });
            finish(id, Some(*t), None, "SAMPLED", vec![], out.pass, details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(*t), e, started, cfg.timings),
    }
}

fn check_minimal_polys(t: &SpinTriple, cfg: &Config) -> VerificationReport {
    let id = format!("minimal-polys/{t}");
    let started = Instant::now();
    let mut gen = cfg.gen(salt_of(&id));
    match centralizer::verify_minimal_polys(t, &mut gen) {
        Ok(out) => {
            let failed: Vec<String> = out
                .checks
                .iter()
                .filter(|(_, ok)| !ok)
                .map(|(l, _)| l.clone())
                .collect();
            let details = json!({ "checks": out.checks.len(), "failed": failed });
            finish(id, Some(*t), None, "EXACT", vec![], out.pass(), details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(*t), e, started, cfg.timings),
    }
}

/// One certified quotient-dimension case.
struct QuotientCase {
    spins: SpinTriple,
    k: Option<HalfInt>,
    max_len: usize,
    basis: Vec<&'static str>,
}

fn quotient_cases() -> Vec<QuotientCase> {
    vec![
        QuotientCase {
            spins: SpinTriple::from_twice(1, 1, 1),
            k: None,
            max_len: 6,
            basis: vec!["1", "A", "B", "AB", "BA"],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(2, 2, 2),
            k: None,
            max_len: 8,
            basis: vec![
                "1", "A", "B", "AA", "AB", "BA", "BB", "AAB", "ABA", "ABB", "BAA", "BAB", "AABB",
                "ABAB", "BABA",
            ],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(3, 3, 3),
            k: Some(half(9)),
            max_len: 4,
            basis: vec!["1"],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(3, 3, 3),
            k: Some(half(7)),
            max_len: 6,
            basis: vec!["1", "A", "B", "AB"],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(3, 3, 3),
            k: Some(half(5)),
            max_len: 8,
            basis: vec!["1", "A", "B", "AA", "AB", "BA", "BB", "ABB", "BAA"],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(3, 3, 3),
            k: Some(half(3)),
            max_len: 8,
            basis: vec![
                "1", "A", "B", "AA", "AB", "BA", "BB", "AAA", "ABA", "ABB", "BAA", "BAB", "BBB",
                "AAAB", "AABB", "ABBB",
            ],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(3, 3, 3),
            k: Some(half(1)),
            max_len: 6,
            basis: vec!["1", "A", "B", "AB"],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(2, 1, 1),
            k: None,
            max_len: 8,
            basis: vec!["1", "A", "B", "AB", "BA", "ABA"],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(3, 1, 1),
            k: None,
            max_len: 8,
            basis: vec!["1", "A", "B", "AB", "BA", "ABA"],
        },
        QuotientCase {
            spins: SpinTriple::from_twice(4, 1, 1),
            k: None,
            max_len: 8,
            basis: vec!["1", "A", "B", "AB", "BA", "ABA"],
        },
    ]
}

fn check_quotient_case(case: &QuotientCase, cfg: &Config) -> VerificationReport {
    let id = match case.k {
        Some(k) => format!("quotient-dim/{}@k={k}", case.spins),
        None => format!("quotient-dim/{}", case.spins),
    };
    let started = Instant::now();
    let run = || -> Result<(bool, Value)> {
        let rels = match case.k {
            Some(k) => aw::awbar_k_relations(&case.spins, k)?,
            None => aw::awbar_relations(&case.spins),
        };
        let max_len = cfg.max_word_len.unwrap_or(case.max_len);
        // relations whose expanded support exceeds the truncation feed the
        // staged pass instead of the row space
        let mut short_polys = vec![];
        let mut long = vec![];
        for rel in &rels.relations {
            match &rel.form {
                aw::RelForm::Annihilating { base_poly, roots, .. }
                    if base_poly.max_len() * roots.len() > max_len =>
                {
                    long.push(LongRelation {
                        label: rel.label.clone(),
                        base: base_poly.clone(),
                        roots: roots.clone(),
                    });
                }
                _ => short_polys.push(rel.expanded()),
            }
        }
        let ideal = truncated_ideal(&short_polys, 2, max_len, cfg.kmax)?;
        let alpha = aw::aw_alphabet();
        let basis = parse_words(&alpha, &case.basis);
        let expected = match case.k {
            Some(k) => {
                let d = spins::degeneracy(&case.spins, k);
                d * d
            }
            None => spins::centralizer_dim(&case.spins),
        };
        let (cert, staged_bound) = certify_span_staged(&ideal, &long, &basis, &alpha)?;
        let actions_ok = cert.actions_satisfy(&rels);
        let ok = cert.closed && basis.len() == expected && actions_ok && staged_bound <= expected;
        let details = json!({
            "certified_dim": basis.len(),
            "expected": expected,
            "rank": ideal.rank(),
            "word_count": ideal.word_count(),
            "bound_at_truncation": ideal.dim_bound(),
            "staged_bound": staged_bound,
            "max_len": max_len,
            "kmax": ideal.kmax,
            "actions_satisfy_relations": actions_ok,
            "staged_relations": long.iter().map(|l| l.label.clone()).collect::<Vec<_>>(),
            "skipped_relations": ideal.skipped,
            "basis": case.basis,
        });
        Ok((ok, details))
    };
    match run() {
        Ok((ok, details)) => finish(
            id,
            Some(case.spins),
            case.k,
            "EXACT",
            vec![],
            ok,
            details,
            started,
            cfg.timings,
        ),
        Err(e) => error_report(id, Some(case.spins), e, started, cfg.timings),
    }
}

/// ADVISORY: is the Omega relation already in the ideal of the other
/// eleven relations of AWbar(1/2,1/2,1/2) at the working truncation?
fn check_omega_independence(cfg: &Config) -> VerificationReport {
    let id = "quotient-dim/omega-independence-advisory".to_string();
    let started = Instant::now();
    let t = SpinTriple::from_twice(1, 1, 1);
    let rels = aw::awbar_relations(&t);
    let run = || -> Result<Value> {
        let mut others = vec![];
        let mut omega = None;
        for r in &rels.relations {
            if r.label == "omega" {
                omega = Some(r.expanded());
            } else {
                others.push(r.expanded());
            }
        }
        let ideal = truncated_ideal(&others, 2, 6, None)?;
        let member = ideal.contains(&omega.unwrap());
        Ok(json!({
            "omega_in_ideal_of_rest_at_L6": member,
            "note": "informative only; the quotient always includes the Omega relation",
        }))
    };
    match run() {
        Ok(details) => VerificationReport {
            check_id: id,
            spins: Some(t.to_string()),
            k_or_ell: None,
            mode: "EXACT".into(),
            samples: vec![],
            status: Status::Advisory,
            details,
            wall_time_ms: if cfg.timings {
                started.elapsed().as_millis() as u64
            } else {
                0
            },
        },
        Err(e) => error_report(id, Some(t), e, started, cfg.timings),
    }
}

fn check_classify(s: HalfInt, cfg: &Config) -> VerificationReport {
    let id = format!("classify/s={s}");
    let started = Instant::now();
    let t = SpinTriple(s, s, s);
    let run = || -> Result<(bool, Value)> {
        let filtered = representations::filtered_solutions(&t)?;
        let families_ok = filtered
            .iter()
            .all(|sol| sol.family == "sol1" || sol.family == "sol2");
        // one solution per l, matching the closed forms
        let mut closed_form_ok = true;
        for l in spins::j_triple(&t) {
            let expect_n = if l <= s {
                l.twice()
            } else {
                (3 * s.twice() - l.twice()) / 2
            };
            let hits: Vec<_> = filtered.iter().filter(|sol| sol.l == l).collect();
            if hits.len() != 1 || hits[0].n != expect_n {
                closed_form_ok = false;
            }
        }
        let sum = representations::filtered_dimension_sum(&t)?;
        let expected = representations::dimension_sum_formula(s);
        let with_omega = representations::classify(&t, true)?;
        let without_omega = representations::classify(&t, false)?;
        let omega_neutral = with_omega == without_omega;
        let ok = families_ok && closed_form_ok && sum == expected && omega_neutral;
        Ok((
            ok,
            json!({
                "filtered_solutions": filtered.len(),
                "families_ok": families_ok,
                "closed_form_ok": closed_form_ok,
                "dimension_sum": sum,
                "expected_sum": expected,
                "omega_equation_neutral": omega_neutral,
            }),
        ))
    };
    match run() {
        Ok((ok, details)) => {
            finish(id, Some(t), None, "EXACT", vec![], ok, details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(t), e, started, cfg.timings),
    }
}

fn check_raw_count(cfg: &Config) -> VerificationReport {
    let id = "classify/raw-count-advisory".to_string();
    let started = Instant::now();
    let run = || -> Result<Value> {
        let mut counts = vec![];
        for s2 in [1i64, 2] {
            let t = SpinTriple::from_twice(s2, s2, s2);
            counts.push(json!({
                "s": HalfInt::from_twice(s2).to_string(),
                "count": representations::raw_solution_count(&t)?,
            }));
        }
        Ok(json!({
            "domain": "l in J(s,s,s), 0 <= n <= 4s, x,y,z in [-(2s+2), 2s+2] half-integer steps",
            "counts": counts,
            "note": "reported, not asserted: the reference search domain is under-specified",
        }))
    };
    match run() {
        Ok(details) => VerificationReport {
            check_id: id,
            spins: None,
            k_or_ell: None,
            mode: "EXACT".into(),
            samples: vec![],
            status: Status::Advisory,
            details,
            wall_time_ms: if cfg.timings {
                started.elapsed().as_millis() as u64
            } else {
                0
            },
        },
        Err(e) => error_report(id, None, e, started, cfg.timings),
    }
}

fn check_tridiagonal(t: &SpinTriple, cfg: &Config) -> VerificationReport {
    let id = format!("tridiagonal/{t}");
    let started = Instant::now();
    let run = || -> Result<(bool, Value)> {
        let mut per_l = vec![];
        let mut all_ok = true;
        for l in spins::j_triple(t) {
            // constructor re-verifies every AWbar^l relation
            match representations::tridiagonal_module(t, l) {
                Ok(m) => {
                    let rec = m.recurrence_holds();
                    let bounds = representations::boundary_products_vanish(t, l)?;
                    let nonzero = m.offdiag_products.iter().all(|p| !p.is_zero());
                    all_ok &= rec && bounds && nonzero;
                    per_l.push(json!({
                        "l": l.to_string(),
                        "dim": m.dim,
                        "recurrence": rec,
                        "boundary_vanishing": bounds,
                        "irreducible": nonzero,
                    }));
                }
                Err(e) => {
                    all_ok = false;
                    per_l.push(json!({ "l": l.to_string(), "error": e.to_string() }));
                }
            }
        }
        Ok((all_ok, json!({ "modules": per_l })))
    };
    match run() {
        Ok((ok, details)) => {
            finish(id, Some(*t), None, "EXACT", vec![], ok, details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(*t), e, started, cfg.timings),
    }
}

fn check_tl(cfg: &Config) -> VerificationReport {
    let id = "diagram-iso/TL".to_string();
    let started = Instant::now();
    match diagram::verify_tl_iso() {
        Ok(out) => {
            let details = json!({
                "matrix_relations": out.matrix_relations_ok,
                "prop61_in_awbar": out.prop61_in_awbar,
                "awbar_in_prop61": out.awbar_in_prop61,
                "awbar_dim": out.awbar_dim,
                "tl_dim": out.tl_dim,
                "failed": out.failed,
            });
            finish(
                id,
                Some(SpinTriple::from_twice(1, 1, 1)),
                None,
                "EXACT",
                vec![],
                out.pass(),
                details,
                started,
                cfg.timings,
            )
        }
        Err(e) => error_report(id, None, e, started, cfg.timings),
    }
}

fn check_bmw(cfg: &Config) -> VerificationReport {
    let id = "diagram-iso/BMW".to_string();
    let started = Instant::now();
    match diagram::verify_bmw_iso() {
        Ok(out) => {
            let details = json!({
                "braid": out.braid_ok,
                "e_s": out.e_s_ok,
                "e_s_e": out.e_s_e_ok,
                "round_trip": out.round_trip_ok,
                "s_invertible": out.s_invertible,
                "bmw_dim": out.bmw_dim,
                "failed": out.failed,
            });
            finish(
                id,
                Some(SpinTriple::from_twice(2, 2, 2)),
                None,
                "EXACT",
                vec![],
                out.pass(),
                details,
                started,
                cfg.timings,
            )
        }
        Err(e) => error_report(id, None, e, started, cfg.timings),
    }
}

fn check_1btl(j: HalfInt, cfg: &Config) -> VerificationReport {
    let id = format!("diagram-iso/1bTL@j={j}");
    let started = Instant::now();
    match diagram::verify_1btl_iso(j) {
        Ok(out) => {
            let details = json!({
                "matrix_relations": out.matrix_relations_ok,
                "prop91_in_awbar": out.prop91_in_awbar,
                "awbar_in_prop91": out.awbar_in_prop91,
                "mapping_to_1btl": out.mapping_ok,
                "awbar_dim": out.awbar_dim,
                "onebtl_dim": out.onebtl_dim,
                "failed": out.failed,
            });
            finish(
                id,
                Some(SpinTriple(j, half(1), half(1))),
                None,
                "EXACT",
                vec![],
                out.pass(),
                details,
                started,
                cfg.timings,
            )
        }
        Err(e) => error_report(id, None, e, started, cfg.timings),
    }
}

fn check_permutation(t: &SpinTriple, cfg: &Config) -> VerificationReport {
    let id = format!("permutation-invariance/{t}");
    let started = Instant::now();
    let run = || -> Result<(bool, Value)> {
        let cs = quantum::casimir_matrices(t)?;
        let out = aw::permutation_check(t, &cs);
        Ok((
            out.ok(),
            json!({
                "phi1_relations": out.phi1_relations_ok,
                "phi2_relations": out.phi2_relations_ok,
                "phi1_omega": out.phi1_omega_ok,
                "phi2_omega": out.phi2_omega_ok,
                "failed": out.failed,
            }),
        ))
    };
    match run() {
        Ok((ok, details)) => {
            finish(id, Some(*t), None, "EXACT", vec![], ok, details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(*t), e, started, cfg.timings),
    }
}

fn check_q1_limit(t: &SpinTriple, cfg: &Config) -> VerificationReport {
    let id = format!("q1-limit/{t}");
    let started = Instant::now();
    let run = || -> Result<(bool, Value)> {
        let cs = quantum::casimir_matrices(t)?;
        let sum = cs
            .c1
            .add(&cs.c2)
            .add(&cs.c3)
            .add(&cs.c123)
            .sub(&cs.c12)
            .sub(&cs.c23)
            .sub(&cs.c13);
        // sum of tilde-transformed terms = (sum - (q+q^{-1}) I)/(q-q^{-1})^2
        let ident: ExactMatrix = Matrix::identity(cs.c123.rows);
        let tilde = sum
            .sub(&ident.scale(&qplus()))
            .scale(&qminus().pow(2).inv().unwrap());
        let generically_nonzero = !tilde.is_zero();
        let at_one = tilde.limit_q_to_1()?;
        let vanishes = at_one.entries().iter().all(num::Zero::is_zero);
        Ok((
            vanishes && generically_nonzero,
            json!({
                "vanishes_at_q_1": vanishes,
                "nonzero_at_generic_q": generically_nonzero,
            }),
        ))
    };
    match run() {
        Ok((ok, details)) => {
            finish(id, Some(*t), None, "EXACT", vec![], ok, details, started, cfg.timings)
        }
        Err(e) => error_report(id, Some(*t), e, started, cfg.timings),
    }
}

/// Two-way presentation equivalences (Prop 6.1 / Prop 9.1) as standalone
/// checks; the heavy lifting is shared with the diagram verifications.
fn check_presentation_equivalence(which: &str, cfg: &Config) -> VerificationReport {
    let started = Instant::now();
    match which {
        "TL" => {
            let id = "presentation-equivalence/TL".to_string();
            match diagram::verify_tl_iso() {
                Ok(out) => {
                    let ok = out.prop61_in_awbar && out.awbar_in_prop61;
                    let details = json!({
                        "prop61_in_awbar": out.prop61_in_awbar,
                        "awbar_in_prop61": out.awbar_in_prop61,
                        "failed": out.failed,
                    });
                    finish(
                        id,
                        Some(SpinTriple::from_twice(1, 1, 1)),
                        None,
                        "EXACT",
                        vec![],
                        ok,
                        details,
                        started,
                        cfg.timings,
                    )
                }
                Err(e) => error_report(id, None, e, started, cfg.timings),
            }
        }
        j => {
            let j = HalfInt::parse(j).unwrap();
            let id = format!("presentation-equivalence/1bTL@j={j}");
            match diagram::verify_1btl_iso(j) {
                Ok(out) => {
                    let ok = out.prop91_in_awbar && out.awbar_in_prop91;
                    let details = json!({
                        "prop91_in_awbar": out.prop91_in_awbar,
                        "awbar_in_prop91": out.awbar_in_prop91,
                        "failed": out.failed,
                    });
                    finish(
                        id,
                        Some(SpinTriple(j, half(1), half(1))),
                        None,
                        "EXACT",
                        vec![],
                        ok,
                        details,
                        started,
                        cfg.timings,
                    )
                }
                Err(e) => error_report(id, None, e, started, cfg.timings),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

pub const SUITES: &[&str] = &[
    "aw-homomorphism",
    "centralizer-dims",
    "minimal-polys",
    "quotient-dims",
    "classify",
    "isomorphisms",
    "permutation-invariance",
    "q1-limit",
    "all",
];

/// Run a named suite; reports come back sorted by check_id.
pub fn run_suite(name: &str, cfg: &Config) -> Result<Vec<VerificationReport>> {
    let mut reports = match name {
        "aw-homomorphism" => {
            let triples = chosen_triples(cfg, homomorphism_triples());
            let mut tasks: Vec<Task> = vec![];
            for t in triples {
                tasks.push(Box::new(move |cfg: &Config| check_aw_homomorphism(&t, cfg)));
            }
            for t in [SpinTriple::from_twice(1, 1, 1), SpinTriple::from_twice(2, 1, 1)] {
                tasks.push(Box::new(move |cfg: &Config| check_rmatrix_contract(&t, cfg)));
            }
            run_tasks(tasks, cfg)
        }
        "centralizer-dims" => {
            let triples = chosen_triples(cfg, centralizer_triples());
            let mut tasks: Vec<Task> = vec![];
            for t in triples {
                tasks.push(Box::new(move |cfg: &Config| check_centralizer_dim(&t, cfg)));
                tasks.push(Box::new(move |cfg: &Config| check_surjectivity(&t, cfg)));
            }
            run_tasks(tasks, cfg)
        }
        "minimal-polys" => {
            let triples = chosen_triples(cfg, centralizer_triples());
            let tasks: Vec<Task> = triples
                .into_iter()
                .map(|t| Box::new(move |cfg: &Config| check_minimal_polys(&t, cfg)) as Task)
                .collect();
            run_tasks(tasks, cfg)
        }
        "quotient-dims" => {
            let mut tasks: Vec<Task> = quotient_cases()
                .into_iter()
                .map(|case| {
                    Box::new(move |cfg: &Config| check_quotient_case(&case, cfg)) as Task
                })
                .collect();
            tasks.push(Box::new(|cfg: &Config| check_omega_independence(cfg)));
            run_tasks(tasks, cfg)
        }
        "classify" => {
            let mut tasks: Vec<Task> = vec![];
            for s2 in [1i64, 2, 3] {
                let s = HalfInt::from_twice(s2);
                tasks.push(Box::new(move |cfg: &Config| check_classify(s, cfg)));
            }
            for t in homomorphism_triples() {
                if t.spins().iter().all(|j| j.twice() <= 3) {
                    tasks.push(Box::new(move |cfg: &Config| check_tridiagonal(&t, cfg)));
                }
            }
            tasks.push(Box::new(|cfg: &Config| check_raw_count(cfg)));
            run_tasks(tasks, cfg)
        }
        "isomorphisms" => {
            let mut tasks: Vec<Task> = vec![
                Box::new(|cfg: &Config| check_tl(cfg)),
                Box::new(|cfg: &Config| check_bmw(cfg)),
                Box::new(|cfg: &Config| check_presentation_equivalence("TL", cfg)),
            ];
            for j2 in [2i64, 3, 4] {
                let j = HalfInt::from_twice(j2);
                tasks.push(Box::new(move |cfg: &Config| check_1btl(j, cfg)));
                let label = j.to_string();
                tasks.push(Box::new(move |cfg: &Config| {
                    check_presentation_equivalence(&label, cfg)
                }));
            }
            run_tasks(tasks, cfg)
        }
        "permutation-invariance" => {
            let triples = chosen_triples(
                cfg,
                vec![
                    SpinTriple::from_twice(2, 1, 1),
                    SpinTriple::from_twice(1, 2, 1),
                    SpinTriple::from_twice(1, 1, 2),
                ],
            );
            let tasks: Vec<Task> = triples
                .into_iter()
                .map(|t| Box::new(move |cfg: &Config| check_permutation(&t, cfg)) as Task)
                .collect();
            run_tasks(tasks, cfg)
        }
        "q1-limit" => {
            let triples = chosen_triples(
                cfg,
                vec![SpinTriple::from_twice(1, 1, 1), SpinTriple::from_twice(2, 1, 1)],
            );
            let tasks: Vec<Task> = triples
                .into_iter()
                .map(|t| Box::new(move |cfg: &Config| check_q1_limit(&t, cfg)) as Task)
                .collect();
            run_tasks(tasks, cfg)
        }
        "all" => {
            let mut all = vec![];
            for s in SUITES.iter().filter(|s| **s != "all") {
                all.extend(run_suite(s, cfg)?);
            }
            all
        }
        other => {
            return Err(Error::Unsupported(format!(
                "unknown suite `{other}`; expected one of {SUITES:?}"
            )))
        }
    };
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(reports)
}

type Task = Box<dyn Fn(&Config) -> VerificationReport + Send + Sync>;

fn run_tasks(tasks: Vec<Task>, cfg: &Config) -> Vec<VerificationReport> {
    tasks.par_iter().map(|t| t(cfg)).collect()
}

/// The full report document written by the CLI.
#[derive(Serialize)]
pub struct ReportDocument {
    pub version: String,
    pub config: Config,
    pub reports: Vec<VerificationReport>,
}

impl ReportDocument {
    pub fn new(config: Config, reports: Vec<VerificationReport>) -> Self {
        ReportDocument { version: REPORT_VERSION.to_string(), config, reports }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&format!("{:11}  {}\n", format!("{:?}", r.status), r.check_id));
        }
        let pass = self.reports.iter().filter(|r| r.passed()).count();
        out.push_str(&format!("{pass}/{} checks passed\n", self.reports.len()));
        out
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_rejected() {
        assert!(run_suite("nope", &Config::default()).is_err());
    }

    #[test]
    fn q1_limit_suite() {
        let cfg = Config::default();
        let reports = run_suite("q1-limit", &cfg).unwrap();
        assert_eq!(reports.len(), 2);
        assert!(reports.iter().all(|r| r.passed()), "{reports:?}");
    }

    #[test]
    fn homomorphism_triples_count() {
        assert_eq!(homomorphism_triples().len(), 21);
    }

    #[test]
    fn reports_deterministic() {
        let cfg = Config::default();
        let a = run_suite("q1-limit", &cfg).unwrap();
        let b = run_suite("q1-limit", &cfg).unwrap();
        let da = ReportDocument::new(cfg.clone(), a).to_json();
        let db = ReportDocument::new(cfg, b).to_json();
        assert_eq!(da, db);
    }
}
