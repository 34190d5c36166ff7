//! Seeded verification suites.
//!
//! Deterministic checks compare the computed algebra against a golden
//! structure table; randomized checks draw `cases` inputs per check from
//! [`crate::random`]. A report passes only if every check passes.

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::frontend::{parse_algebra, parse_scalar, parse_vector, render_alg_text, render_vector_text};
use crate::pbw::rewrite::{multiply_letters, normalize_word, Strategy};
use crate::pbw::{ad_apply, casimir, casimir_word, AlgElement};
use crate::qlie::{
    basis_pairs, check_qantisymmetry, classical_limit, structure_table, Basis, Embedding, QLieVector,
    StructureTable,
};
use crate::qrep::{builtin_rep2, verify_representation, RepMatrix};
use crate::random;
use crate::scalar::{h_series, ExtScalar, HSeries, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Closure,
    Antisym,
    Twist,
    Rep,
    Classical,
    Kernel,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Closure, Suite::Antisym, Suite::Twist, Suite::Rep, Suite::Classical, Suite::Kernel];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Closure => "closure",
            Suite::Antisym => "antisym",
            Suite::Twist => "twist",
            Suite::Rep => "rep",
            Suite::Classical => "classical",
            Suite::Kernel => "kernel",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub cases: u64,
    /// Reference structure constants for the standard and twisted embeddings.
    pub golden: StructureTable,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, cases: 100, golden: StructureTable::quantum_sl2() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub seed: u64,
    pub cases: u64,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> VerificationReport {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let checks: Vec<Check> = suites.into_iter().flat_map(|s| run_one(s, cfg)).collect();
    VerificationReport { suite, seed: cfg.seed, cases: cfg.cases, pass: checks.iter().all(|c| c.pass), checks }
}

fn run_one(suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    let mut ctx = Ctx { suite, cfg, out: Vec::new() };
    match suite {
        Suite::Closure => closure(&mut ctx),
        Suite::Antisym => antisym(&mut ctx),
        Suite::Twist => twist(&mut ctx),
        Suite::Rep => rep(&mut ctx),
        Suite::Classical => classical(&mut ctx),
        Suite::Kernel => kernel(&mut ctx),
        Suite::All => unreachable!("expanded by run"),
    }
    ctx.out
}

struct Ctx<'a> {
    suite: Suite,
    cfg: &'a VerifyConfig,
    out: Vec<Check>,
}

impl Ctx<'_> {
    fn push(&mut self, name: &str, result: Result<String, String>) {
        let (pass, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.out.push(Check { suite: self.suite, name: name.into(), pass, detail });
    }

    /// Runs `f` on `cases` seeded inputs in parallel; reports the lowest failing case.
    fn cases<F>(&mut self, name: &str, f: F)
    where
        F: Fn(&mut ChaCha8Rng) -> Result<(), String> + Sync,
    {
        let seed = self.cfg.seed ^ salt(name);
        let failure = (0..self.cfg.cases)
            .into_par_iter()
            .filter_map(|i| f(&mut random::case_rng(seed, i)).err().map(|e| (i, e)))
            .min_by_key(|(i, _)| *i);
        let result = match failure {
            None => Ok(format!("{} cases", self.cfg.cases)),
            Some((i, e)) => Err(format!("case {i}: {e}")),
        };
        self.push(name, result);
    }
}

/// FNV-1a, so each check draws from its own family of streams.
fn salt(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn table_against(t: &StructureTable, golden: &StructureTable) -> Result<String, String> {
    let diff = t.diff(golden);
    if diff.is_empty() {
        return Ok("all 9 entries match".into());
    }
    let (a, b) = diff[0];
    Err(format!(
        "{} entries differ; first [{}, {}]_h = {}, expected {}",
        diff.len(),
        a.name(),
        b.name(),
        render_vector_text(t.entry(a, b)),
        render_vector_text(golden.entry(a, b))
    ))
}

fn vec_text(v: &QLieVector) -> String {
    render_vector_text(v)
}

fn closure(ctx: &mut Ctx) {
    let e = Embedding::standard();
    let golden = ctx.cfg.golden.clone();
    match structure_table(&e) {
        Ok(t) => ctx.push("standard table", table_against(&t, &golden)),
        Err(err) => ctx.push("standard table", Err(err.to_string())),
    }
    ctx.cases("random brackets close and are bilinear", |rng| {
        let (a, b) = (random::vector(rng), random::vector(rng));
        let got = e.bracket(&a, &b).map_err(|err| err.to_string())?;
        let expected = golden.bracket(&a, &b);
        if got == expected {
            Ok(())
        } else {
            Err(format!("[{}, {}]_h = {}, table gives {}", vec_text(&a), vec_text(&b), vec_text(&got), vec_text(&expected)))
        }
    });

    let c = casimir();
    let gens = [("E", AlgElement::e()), ("F", AlgElement::f()), ("K", AlgElement::k())];
    let bad: Vec<_> = gens.iter().filter(|(_, g)| !c.commutator(g).is_zero()).map(|(n, _)| *n).collect();
    ctx.push(
        "Casimir is central",
        if bad.is_empty() { Ok("commutes with E, F, K".into()) } else { Err(format!("fails to commute with {bad:?}")) },
    );
    let cw = casimir_word();
    let moved: Vec<_> = Basis::ALL.iter().filter(|&&b| ad_apply(&cw, e.image(b)) != *e.image(b)).collect();
    ctx.push(
        "ad_C fixes the embedded basis",
        if moved.is_empty() {
            Ok("ad_C acts as 1".into())
        } else {
            Err(format!("moved {:?}", moved.iter().map(|b| b.name()).collect::<Vec<_>>()))
        },
    );
}

fn antisym(ctx: &mut Ctx) {
    let e = Embedding::standard();
    let failing: Vec<String> = basis_pairs()
        .filter_map(|(a, b)| match check_qantisymmetry(&QLieVector::basis(a), &QLieVector::basis(b), &e) {
            Ok(r) if r.pass => None,
            Ok(_) => Some(format!("({}, {})", a.name(), b.name())),
            Err(err) => Some(format!("({}, {}): {err}", a.name(), b.name())),
        })
        .collect();
    ctx.push(
        "basis pairs",
        if failing.is_empty() { Ok("9 pairs".into()) } else { Err(failing.join("; ")) },
    );

    let golden = ctx.cfg.golden.clone();
    let bad: Vec<_> = basis_pairs()
        .filter(|&(a, b)| {
            let (va, vb) = (QLieVector::basis(a), QLieVector::basis(b));
            golden.bracket(&va, &vb).qconj() != -golden.bracket(&vb.qconj(), &va.qconj())
        })
        .map(|(a, b)| format!("({}, {})", a.name(), b.name()))
        .collect();
    ctx.push(
        "golden table is q-antisymmetric",
        if bad.is_empty() { Ok("9 pairs".into()) } else { Err(bad.join("; ")) },
    );

    ctx.cases("random pairs", |rng| {
        let (a, b) = (random::vector(rng), random::vector(rng));
        let r = check_qantisymmetry(&a, &b, &e).map_err(|err| err.to_string())?;
        if r.pass {
            Ok(())
        } else {
            Err(format!("a = {}, b = {}: {} vs {}", vec_text(&a), vec_text(&b), vec_text(&r.left), vec_text(&r.right)))
        }
    });
}

fn twist_text(p: &[ExtScalar]) -> String {
    format!("[{}]", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
}

fn twist(ctx: &mut Ctx) {
    let golden = ctx.cfg.golden.clone();
    let fixed: Vec<Vec<ExtScalar>> = vec![
        vec![ExtScalar::one()],
        vec![ExtScalar::zero(), ExtScalar::one()],
        vec![ExtScalar::ratio(1, 2), ExtScalar::ratio(1, 2)],
        vec![ExtScalar::from_int(-1), ExtScalar::from_int(2)],
    ];
    let results: Vec<_> = fixed
        .par_iter()
        .map(|p| {
            let r = Embedding::twisted(p)
                .and_then(|e| structure_table(&e))
                .map_err(|err| err.to_string())
                .and_then(|t| table_against(&t, &golden));
            (twist_text(p), r)
        })
        .collect();
    for (name, r) in results {
        ctx.push(&format!("twist {name}"), r);
    }

    // A handful of random degree-1 twists; each is a full table computation.
    let random_twists = ctx.cfg.cases.div_ceil(50).min(4);
    let cfg = VerifyConfig { cases: random_twists, ..ctx.cfg.clone() };
    let mut sub = Ctx { suite: ctx.suite, cfg: &cfg, out: Vec::new() };
    sub.cases("random twists [c, 1 - c]", |rng| {
        let c = random::scalar(rng);
        let p = vec![c.clone(), &ExtScalar::one() - &c];
        match Embedding::twisted(&p) {
            Ok(e) => {
                let t = structure_table(&e).map_err(|err| format!("{}: {err}", twist_text(&p)))?;
                table_against(&t, &golden).map(|_| ()).map_err(|err| format!("{}: {err}", twist_text(&p)))
            }
            Err(err) => Err(format!("{}: {err}", twist_text(&p))),
        }
    });
    ctx.out.extend(sub.out);

    let bad = Embedding::twisted(&[ExtScalar::one(), ExtScalar::one()]);
    ctx.push(
        "twist coefficients must sum to 1",
        match bad {
            Err(crate::qlie::QLieError::TwistSum(_)) => Ok("[1, 1] rejected".into()),
            other => Err(format!("[1, 1] gave {other:?}")),
        },
    );
}

fn rep(ctx: &mut Ctx) {
    let golden = ctx.cfg.golden.clone();
    let r = builtin_rep2();
    let report = verify_representation(&r, &golden);
    let fails = report.failing_pairs();
    ctx.push(
        "builtin 2-dim: basis pairs",
        if fails.is_empty() {
            Ok("9 pairs".into())
        } else {
            Err(format!(
                "failing pairs {}",
                fails.iter().map(|(a, b)| format!("({}, {})", a.name(), b.name())).collect::<Vec<_>>().join(", ")
            ))
        },
    );
    ctx.push(
        "builtin 2-dim: conjugation",
        if report.involution.iter().all(|x| x.2) && report.q_linearity.iter().all(|x| x.2) {
            Ok("involutive and q-linear on all units".into())
        } else {
            Err("conjugation is not an involutive q-linear map".into())
        },
    );
    ctx.push(
        "builtin 2-dim: compatibility",
        if report.compatibility.iter().all(|x| x.1) {
            Ok("pi(b)~ = pi(b~)".into())
        } else {
            Err("pi(b)~ differs from pi(b~)".into())
        },
    );

    let mut corrupted = r.clone();
    corrupted
        .set_pi_basis(Basis::H, RepMatrix::diag(&[ExtScalar::q(), ExtScalar::q_pow(-1)]))
        .expect("same dimension");
    let cr = verify_representation(&corrupted, &golden);
    ctx.push(
        "corrupted representation is rejected",
        if cr.pass() {
            Err("pi(H_h) = diag(q, q^-1) passed".into())
        } else {
            Ok(format!("{} failing pairs", cr.failing_pairs().len()))
        },
    );

    let classical = r.eval_q1().map(|c| verify_representation(&c, &StructureTable::classical_sl2()));
    ctx.push(
        "builtin 2-dim at q = 1 represents sl2",
        match classical {
            Ok(rep) if rep.pairs.iter().all(|p| p.pass) => Ok("9 pairs".into()),
            Ok(rep) => Err(format!("{} failing pairs", rep.failing_pairs().len())),
            Err(err) => Err(err.to_string()),
        },
    );
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn series_check(x: &ExtScalar, expected: &[Rational]) -> Result<String, String> {
    let order = expected.len() - 1;
    let got = h_series(x, order).map_err(|err| err.to_string())?;
    let want = HSeries::from_coeffs(expected.to_vec(), order);
    if got == want {
        Ok(got.to_string())
    } else {
        Err(format!("got {got}, expected {want}"))
    }
}

fn classical(ctx: &mut Ctx) {
    let result = structure_table(&Embedding::standard()).map_err(|err| err.to_string()).and_then(|t| {
        classical_limit(&t).map(|l| (t, l)).map_err(|err| err.to_string())
    });
    let (t, limit) = match result {
        Ok(x) => x,
        Err(err) => {
            ctx.push("classical limit", Err(err));
            return;
        }
    };
    ctx.push("limit equals sl2", if limit.matches_sl2 { Ok("9 entries".into()) } else { Err("differs from sl2".into()) });
    ctx.push("limit antisymmetric", if limit.antisymmetric { Ok("9 pairs".into()) } else { Err("fails".into()) });
    ctx.push("limit satisfies Jacobi", if limit.jacobi { Ok("27 triples".into()) } else { Err("fails".into()) });

    let mut bad = Vec::new();
    for (a, b) in basis_pairs() {
        for k in Basis::ALL {
            let c = &t.entry(a, b)[k];
            match h_series(c, 0) {
                Ok(s) if *s.coeff(0) == limit.table.entries[a.index()][b.index()][k.index()] => {}
                Ok(s) => bad.push(format!("[{}, {}] {}: {}", a.name(), b.name(), k.name(), s)),
                Err(err) => bad.push(format!("[{}, {}] {}: {err}", a.name(), b.name(), k.name())),
            }
        }
    }
    ctx.push("order-0 series match q = 1", if bad.is_empty() { Ok("27 constants".into()) } else { Err(bad.join("; ")) });

    let two_q = &ExtScalar::from_int(2) * &ExtScalar::q();
    ctx.push("series of 2q", series_check(&two_q, &[rat(2, 1), rat(2, 1), rat(1, 1), rat(1, 3), rat(1, 12)]));
    let two_diff = &ExtScalar::from_int(2) * &(&ExtScalar::q() - &ExtScalar::q_pow(-1));
    ctx.push(
        "series of 2(q - q^-1)",
        series_check(&two_diff, &[rat(0, 1), rat(4, 1), rat(0, 1), rat(2, 3), rat(0, 1)]),
    );

    ctx.cases("q = 1 evaluation is a ring map", |rng| {
        let (x, y) = (random::scalar(rng), random::scalar(rng));
        let ev = |z: &ExtScalar| z.eval_q1().map_err(|err| format!("{z}: {err}"));
        let (ex, ey) = (ev(&x)?, ev(&y)?);
        if ev(&(&x * &y))? != &ex * &ey || ev(&(&x + &y))? != &ex + &ey {
            return Err(format!("x = {x}, y = {y}"));
        }
        let s0 = h_series(&x, 2).map_err(|err| err.to_string())?;
        if *s0.coeff(0) != ex {
            return Err(format!("series of {x} starts with {}, value is {ex}", s0.coeff(0)));
        }
        Ok(())
    });
}

fn kernel(ctx: &mut Ctx) {
    ctx.cases("PBW associativity", |rng| {
        let (x, y, z) = (random::alg_element(rng), random::alg_element(rng), random::alg_element(rng));
        if &(&x * &y) * &z == &x * &(&y * &z) {
            Ok(())
        } else {
            Err(format!("x = {}, y = {}, z = {}", render_alg_text(&x), render_alg_text(&y), render_alg_text(&z)))
        }
    });
    ctx.cases("rewrite confluence", |rng| {
        let w = random::letter_word(rng);
        let left = normalize_word(&w, Strategy::Leftmost);
        let right = normalize_word(&w, Strategy::Rightmost);
        let direct = multiply_letters(&w);
        if left == right && left == direct {
            Ok(())
        } else {
            Err(format!("word {w:?}"))
        }
    });
    ctx.cases("field axioms", |rng| {
        let (x, y, z) = (random::rational_scalar(rng), random::rational_scalar(rng), random::rational_scalar(rng));
        let ok = &(&x + &y) * &z == &(&x * &z) + &(&y * &z)
            && &(&x * &y) * &z == &x * &(&y * &z)
            && &x * &y == &y * &x
            && (x.is_zero() || (&x * &x.inv().map_err(|err| err.to_string())?).is_one())
            && x.qconj().qconj() == x
            && (&x * &y).qconj() == &x.qconj() * &y.qconj();
        if ok {
            Ok(())
        } else {
            Err(format!("x = {x}, y = {y}, z = {z}"))
        }
    });
    ctx.cases("parser round trip", |rng| {
        let x = random::rational_scalar(rng);
        if parse_scalar(&x.to_string()).as_ref() != Ok(&x) {
            return Err(format!("scalar {x}"));
        }
        let a = random::alg_element(rng);
        let text = render_alg_text(&a);
        if parse_algebra(&text).as_ref() != Ok(&a) {
            return Err(format!("algebra {text}"));
        }
        let v = random::vector(rng);
        let text = render_vector_text(&v);
        if parse_vector(&text).as_ref() != Ok(&v) {
            return Err(format!("vector {text}"));
        }
        Ok(())
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(cases: u64) -> VerifyConfig {
        VerifyConfig { seed: 7, cases, ..Default::default() }
    }

    #[test]
    fn every_suite_passes() {
        let report = run(Suite::All, &cfg(4));
        let failures: Vec<_> = report.failures().collect();
        assert!(report.pass, "{failures:#?}");
        for s in Suite::EACH {
            assert!(report.checks.iter().any(|c| c.suite == s));
        }
    }

    #[test]
    fn corrupted_golden_fails() {
        let mut golden = StructureTable::quantum_sl2();
        golden.entries[2][0] = QLieVector::along(Basis::Xp, ExtScalar::from_int(2));
        let c = VerifyConfig { golden, ..cfg(2) };
        for s in [Suite::Closure, Suite::Twist, Suite::Rep] {
            assert!(!run(s, &c).pass, "{s:?}");
        }
    }

    #[test]
    fn salts_differ() {
        assert_ne!(salt("field axioms"), salt("parser round trip"));
    }
}
