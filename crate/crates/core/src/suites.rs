//! Verification suites: each runs a family of checks up to a rank bound and
//! returns a [`VerificationReport`].

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bmw::{
    build_bmw, consistent_third_root, default_specializations, expected_bmw_dimension, formal_unitarity_report,
    hecke_quotient, verify_cubic_all, verify_hecke_surjection,
};
use crate::brauer::{gram_positivity, p_lambda_weights, AlgebraElement, BrauerAlgebra};
use crate::cells::{cell_dimension, irreducible_labels, is_irr_prime, verify_branching, CellRep};
use crate::diagrams::{enumerate, BrauerDiagram};
use crate::error::{Error, Result};
use crate::lie::{
    tabulated_sum_table, exceptional_sets, exceptional_sets_from_tables, verify_dimension_arithmetic,
    verify_nonisomorphism, verify_theorem_brauer, Affine, CheckRole, TheoremOptions,
};
use crate::report::{CheckRecord, VerificationReport};
use crate::scalars::{Rational, RationalFunction, Ring};
use crate::specht::{
    alt_square_contains_sign, is_hyperbolic, partitions, sign_twisted_form, sym_square_contains_sign, witt_index,
    SpechtRep,
};

/// Parameters shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Largest rank to check.
    pub n: usize,
    /// Specialization of `m`.
    pub m: Rational,
    pub seed: u64,
    /// Enables the expensive cases (Gram form at `n = 5`, closures at `n = 6`).
    pub big: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n: 4, m: crate::default_m(), seed: 0, big: false }
    }
}

/// Names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: [&str; 16] = [
    "diagrams",
    "relations",
    "trace",
    "positivity",
    "dimensions",
    "spectra",
    "cells",
    "theorem-brauer",
    "hecke",
    "nonisomorphism",
    "exceptional",
    "arithmetic",
    "bmw",
    "cubic",
    "unitarity",
    "hyperbolicity",
];

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(name, opts.seed);
    report.parameters.insert("n".into(), opts.n.to_string());
    report.parameters.insert("m".into(), opts.m.to_string());
    report.parameters.insert("big".into(), opts.big.to_string());
    if name == "all" {
        for s in SUITES {
            report.checks.extend(checks(s, opts)?);
        }
    } else {
        report.checks = checks(name, opts)?;
    }
    report.millis = start.elapsed().as_millis();
    Ok(report)
}

fn checks(name: &str, o: &SuiteOptions) -> Result<Vec<CheckRecord>> {
    Ok(match name {
        "diagrams" => diagrams(o),
        "relations" => relations(),
        "trace" => trace(o),
        "positivity" => positivity(o),
        "dimensions" => dimensions(),
        "spectra" => spectra(o),
        "cells" => cells(o),
        "theorem-brauer" => theorem(o),
        "hecke" => hecke(o),
        "nonisomorphism" => nonisomorphism(o),
        "exceptional" => exceptional(),
        "arithmetic" => arithmetic(),
        "bmw" => bmw(o),
        "cubic" => cubic(o),
        "unitarity" => unitarity(o),
        "hyperbolicity" => hyperbolicity(o),
        other => return Err(Error::Parse(format!("unknown suite {other:?}; expected one of {SUITES:?} or all"))),
    })
}

fn double_factorial(n: usize) -> u128 {
    (1..2 * n as u128).step_by(2).product()
}

fn diagrams(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 1..=o.n.min(5) {
        out.push(CheckRecord::new(&format!("diagrams.count.{n}"), "|Br_n diagrams| = (2n-1)!!").param("n", n).run(|| {
            let count = enumerate(n)?.len() as u128;
            Ok((count == double_factorial(n), Some(count.to_string())))
        }));
    }
    let n = o.n.clamp(2, 4);
    out.push(
        CheckRecord::new("diagrams.associativity", "(ab)c = a(bc) with matching loop counts")
            .param("n", n)
            .param("samples", 200)
            .run(|| {
                let all = enumerate(n)?;
                let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
                for _ in 0..200 {
                    let (a, b, c) = (pick(&all, &mut rng), pick(&all, &mut rng), pick(&all, &mut rng));
                    let (ab, l1) = a.compose(b)?;
                    let (ab_c, l2) = ab.compose(c)?;
                    let (bc, l3) = b.compose(c)?;
                    let (a_bc, l4) = a.compose(&bc)?;
                    if ab_c != a_bc || l1 + l2 != l3 + l4 {
                        return Ok((false, Some(format!("a={a} b={b} c={c}"))));
                    }
                }
                Ok((true, None))
            }),
    );
    out.push(CheckRecord::new("diagrams.p_squared", "p_12 p_12 = m p_12").run(|| {
        let p = BrauerDiagram::p(2, 0, 1)?;
        let (d, loops) = p.compose(&p)?;
        Ok((d == p && loops == 1, None))
    }));
    out
}

fn pick<'a, T>(xs: &'a [T], rng: &mut ChaCha8Rng) -> &'a T {
    xs.choose(rng).expect("nonempty")
}

fn relations() -> Vec<CheckRecord> {
    type RF = RationalFunction;
    let alg = BrauerAlgebra::new(2, RF::m());
    let t_relations = || -> Result<(AlgebraElement<RF>, AlgebraElement<RF>, AlgebraElement<RF>)> {
        let t = alg.t(0, 1)?;
        let lhs = alg.multiply(&t, &t)?.sub(&alg.one())?;
        let rhs = alg.p(0, 1)?.scale(&RF::m().sub(&RF::from_int(2)));
        let third = t.add(&alg.one().scale(&RF::m().sub(&RF::one())))?;
        Ok((lhs, rhs, third))
    };
    vec![
        CheckRecord::new("relations.t_squared", "t^2 - 1 = (m-2) p_12 in Br_2 over Q(m)").run(|| {
            let (lhs, rhs, _) = t_relations()?;
            Ok((lhs == rhs, None))
        }),
        CheckRecord::new("relations.t_cubic", "(t^2 - 1)(t + m - 1) = 0 in Br_2 over Q(m)").run(|| {
            let (lhs, _, third) = t_relations()?;
            Ok((alg.multiply(&lhs, &third)?.is_zero(), None))
        }),
    ]
}

fn random_element(all: &[BrauerDiagram], rng: &mut ChaCha8Rng) -> AlgebraElement<RationalFunction> {
    let mut x = AlgebraElement::zero(all[0].n());
    for _ in 0..rng.gen_range(1..=3) {
        let c = RationalFunction::from_int(rng.gen_range(-3..=3));
        x = x.add(&AlgebraElement::from_term(pick(all, rng).clone(), c)).expect("same rank");
    }
    x
}

fn trace(o: &SuiteOptions) -> Vec<CheckRecord> {
    type RF = RationalFunction;
    let mut out = Vec::new();
    for n in 2..=o.n.min(4) {
        out.push(
            CheckRecord::new(&format!("trace.axioms.{n}"), "trace and form identities over Q(m)")
                .param("n", n)
                .param("pairs", 500)
                .run(|| {
                    let alg = BrauerAlgebra::new(n, RF::m());
                    let all = enumerate(n)?;
                    let perms: Vec<&BrauerDiagram> = all.iter().filter(|d| d.through_strands() == n).collect();
                    let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ n as u64);
                    for k in 0..500 {
                        let (a, b) = (random_element(&all, &mut rng), random_element(&all, &mut rng));
                        let w = AlgebraElement::from_diagram((*pick(&perms, &mut rng)).clone());
                        let i = rng.gen_range(0..n - 1);
                        let j = rng.gen_range(i + 1..n);
                        let p = alg.p(i, j)?;
                        let fail = |what: &str| Ok((false, Some(format!("pair {k}: {what} fails for a={a}, b={b}"))));
                        if alg.markov_trace(&alg.multiply(&a, &b)?)? != alg.markov_trace(&alg.multiply(&b, &a)?)? {
                            return fail("tr(ab) = tr(ba)");
                        }
                        if alg.markov_trace(&b.tau())? != alg.markov_trace(&b)? {
                            return fail("tr(τ b) = tr(b)");
                        }
                        let ab = alg.form(&a, &b)?;
                        if ab != alg.form(&b, &a)? {
                            return fail("<a,b> = <b,a>");
                        }
                        if alg.form(&alg.multiply(&w, &a)?, &alg.multiply(&w, &b)?)? != ab {
                            return fail("<wa,wb> = <a,b>");
                        }
                        if alg.form(&alg.multiply(&p, &a)?, &b)? != alg.form(&a, &alg.multiply(&p, &b)?)? {
                            return fail("<p a, b> = <a, p b>");
                        }
                    }
                    Ok((true, None))
                }),
        );
    }
    out
}

fn positivity(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 1..=o.n.min(5) {
        let rec = CheckRecord::new(&format!("positivity.gram.{n}"), "Gram matrix of <,> is positive definite")
            .param("n", n)
            .param("m", &o.m);
        if n == 5 && !o.big {
            out.push(rec.skip("n = 5 needs --big"));
            continue;
        }
        out.push(rec.run(|| {
            let r = gram_positivity(n, &o.m)?;
            Ok((r.positive_definite, r.failing_pivot_index.map(|i| format!("pivot {i} = {}", r.pivots[i]))))
        }));
    }
    if o.n >= 4 {
        out.push(CheckRecord::new("positivity.weights.4", "every P_λ(m)/m^n weight is positive").param("m", &o.m).run(|| {
            let w = p_lambda_weights(4, &o.m)?;
            let bad: Vec<String> = w.iter().filter(|(_, x)| !x.is_positive()).map(|(l, x)| format!("{l}: {x}")).collect();
            Ok((bad.is_empty(), (!bad.is_empty()).then(|| bad.join("; "))))
        }));
    }
    out
}

fn dimensions() -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for (n, parts, expected) in [(5, vec![1], 15u128), (7, vec![1], 105), (9, vec![1], 945), (5, vec![2, 1], 20)] {
        let lambda = crate::specht::Partition::new(parts);
        out.push(
            CheckRecord::new(&format!("dimensions.{lambda}_{n}"), "cell module dimension")
                .param("expected", expected)
                .run(|| {
                    let d = cell_dimension(n, &lambda)?;
                    Ok((d == expected, Some(d.to_string())))
                }),
        );
    }
    for n in 1..=6 {
        out.push(CheckRecord::new(&format!("dimensions.sum_squares.{n}"), "Σ (dim λ)^2 = (2n-1)!!").run(|| {
            let total: u128 = irreducible_labels(n).iter().map(|l| cell_dimension(n, l).map(|d| d * d)).sum::<Result<_>>()?;
            Ok((total == double_factorial(n), Some(total.to_string())))
        }));
    }
    out
}

fn spectra(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 2..=o.n.min(5) {
        out.push(
            CheckRecord::new(&format!("spectra.{n}"), "Sp ρ(t_12) is {-1,1} on Specht modules and {-1,1,1-m} on Irr'")
                .param("m", &o.m)
                .run(|| {
                    let one = Rational::one();
                    for l in irreducible_labels(n) {
                        let rep = CellRep::new(n, l.clone(), o.m.clone())?;
                        if rep.dim() == 1 {
                            continue;
                        }
                        let mut expected = vec![-&one, one.clone()];
                        if is_irr_prime(n, &l) {
                            expected.push(&one - &o.m);
                        }
                        expected.sort();
                        let got = rep.spectrum_t()?;
                        if got != expected {
                            return Ok((false, Some(format!("{l}: {got:?}"))));
                        }
                    }
                    Ok((true, None))
                }),
        );
    }
    out
}

fn cells(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 2..=o.n.min(4) {
        out.push(CheckRecord::new(&format!("cells.relations.{n}"), "cell modules satisfy the Br_n relations").run(|| {
            for l in irreducible_labels(n) {
                CellRep::new(n, l, o.m.clone())?.verify_relations()?;
            }
            Ok((true, None))
        }));
        out.push(CheckRecord::new(&format!("cells.branching.{n}"), "restriction to Br_{n-1} follows the branching rule").run(|| {
            for l in irreducible_labels(n) {
                let r = verify_branching(n, &l, &o.m)?;
                if !r.ok {
                    return Ok((false, Some(format!("{l}: {:?}", r.constituents))));
                }
            }
            Ok((true, None))
        }));
    }
    out
}

fn theorem(o: &SuiteOptions) -> Vec<CheckRecord> {
    let top = if o.big { o.n.min(6) } else { o.n.min(5) };
    let mut out = Vec::new();
    for n in 2..=top {
        let start = Instant::now();
        match verify_theorem_brauer(n, &o.m, &TheoremOptions::for_rank(n)) {
            Err(e) => out.push(CheckRecord::new(&format!("theorem.{n}"), "closure of t'_ij").run(|| Err(e))),
            Ok(rep) => {
                for r in rep.rows.iter().filter(|r| r.irr_prime) {
                    let mut rec = CheckRecord::new(&format!("theorem.{n}.{}", r.lambda), "closure of {t'_ij} is sl(V_λ)")
                        .param("m", &o.m)
                        .run(|| {
                            Ok((r.ok, Some(format!("dim {} ({}), expected {}, {:?}", r.closure_dim, r.kind, r.expected_dim, r.certificate))))
                        });
                    rec.millis = start.elapsed().as_millis();
                    out.push(rec);
                }
                if let (Some(g), Some(c)) = (rep.global_dim, rep.center_dim) {
                    out.push(
                        CheckRecord::new(&format!("theorem.{n}.global"), "faithful sum: predicted dimension and center k·T")
                            .run(|| {
                                let ok = g == rep.expected_global_dim && c == 1 && rep.center_is_casimir == Some(true);
                                Ok((ok, Some(format!("dim {g} (expected {}), center {c}", rep.expected_global_dim))))
                            }),
                    );
                }
            }
        }
    }
    out
}

fn hecke(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 3..=o.n.min(5) {
        let rep = match verify_theorem_brauer(n, &o.m, &TheoremOptions { global: false }) {
            Ok(r) => r,
            Err(e) => {
                out.push(CheckRecord::new(&format!("hecke.{n}"), "Hecke decomposition").run(|| Err(e)));
                continue;
            }
        };
        for r in rep.rows.iter().filter(|r| !r.irr_prime && r.module_dim > 1) {
            out.push(
                CheckRecord::new(&format!("hecke.{n}.{}", r.lambda), "image of the infinitesimal Hecke algebra")
                    .run(|| {
                        let mut w = format!("{} (expected {})", r.kind, r.expected_kind);
                        if r.lambda.is_self_conjugate() {
                            let s = SpechtRep::new(r.lambda.clone())?;
                            let (sym, alt) = (sym_square_contains_sign(&s)?, alt_square_contains_sign(&s)?);
                            w.push_str(&format!("; ε ⊂ S²: {sym}, ε ⊂ Λ²: {alt}"));
                        }
                        Ok((r.ok, Some(w)))
                    }),
            );
        }
    }
    out
}

fn nonisomorphism(o: &SuiteOptions) -> Vec<CheckRecord> {
    (2..=o.n.min(4))
        .map(|n| {
            CheckRecord::new(&format!("nonisomorphism.{n}"), "restrictions to the derived algebra are pairwise non-isomorphic, duals only for λ, λ'")
                .run(|| {
                    let r = verify_nonisomorphism(n, &o.m)?;
                    let bad: Vec<String> = r.pairs.iter().filter(|p| !p.ok).map(|p| format!("{} vs {}", p.first, p.second)).collect();
                    Ok((r.ok, (!bad.is_empty()).then(|| bad.join("; "))))
                })
        })
        .collect()
}

fn fmt_set(s: &std::collections::BTreeSet<Rational>) -> String {
    let v: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn exceptional() -> Vec<CheckRecord> {
    let expected_s = "{-2,0,1,2,4}";
    let expected_s_star = "{-2,0,1,2,3,4}";
    let x = [Affine::new(1, 0), Affine::new(-1, 0), Affine::new(-1, 1)];
    let sets = exceptional_sets(&x);
    let from_table = exceptional_sets_from_tables(&[], &tabulated_sum_table());
    vec![
        CheckRecord::new("exceptional.s", "S for X = {1,-1,m-1} matches the expected set").run(|| {
            let got = fmt_set(&sets.s);
            Ok((got == expected_s, Some(got)))
        }),
        CheckRecord::new("exceptional.s_star", "S* for X = {1,-1,m-1} matches the expected set").run(|| {
            let got = fmt_set(&sets.s_star);
            Ok((got == expected_s_star, Some(format!("{got}; the tabulated sums give {}", fmt_set(&from_table.s_star)))))
        }),
    ]
}

fn arithmetic() -> Vec<CheckRecord> {
    let report = match verify_dimension_arithmetic(5..=12) {
        Ok(r) => r,
        Err(e) => return vec![CheckRecord::new("arithmetic", "dimension arithmetic").run(|| Err(e))],
    };
    let summary = |role: CheckRole| {
        let failing: Vec<String> = report
            .checks
            .iter()
            .filter(|c| c.role == role && !c.ok)
            .map(|c| format!("{} at n={} ({}): {} vs {}", c.name, c.n, c.detail, c.lhs, c.rhs))
            .collect();
        let total = report.checks.iter().filter(|c| c.role == role).count();
        (failing.is_empty(), Some(if failing.is_empty() { format!("{total} checks") } else { failing.join("; ") }))
    };
    vec![
        CheckRecord::new("arithmetic.headline", "C(n,k) recursion, C(n,k) > (n-2)binom(n-1,k-1), dim λ >= n(n-1)/2")
            .param("n", "5..=12")
            .run(|| Ok(summary(CheckRole::Headline))),
        CheckRecord::new("arithmetic.intermediate", "strict intermediate inequalities of the induction step")
            .param("n", "5..=12")
            .run(|| Ok(summary(CheckRole::Intermediate))),
    ]
}

fn bmw(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 2..=o.n.min(4) {
        for (s, a) in default_specializations() {
            out.push(
                CheckRecord::new(&format!("bmw.dim.{n}"), "BMW_n(s, α) has dimension (2n-1)!! and is associative")
                    .param("s", &s)
                    .param("alpha", &a)
                    .run(|| {
                        let b = build_bmw(n, &s, &a)?;
                        let ok = b.algebra.dim == expected_bmw_dimension(n) && b.algebra.check_associativity(100, o.seed);
                        let delta = b.delta.as_ref().map_or("none".into(), ToString::to_string);
                        Ok((ok, Some(format!("dim {}, {} cubic, δ = {delta}", b.algebra.dim, b.convention))))
                    }),
            );
        }
        let (s, a) = default_specializations()[0].clone();
        out.push(
            CheckRecord::new(&format!("bmw.hecke.{n}"), "H_n(s) has dimension n! and is a quotient of BMW_n")
                .param("s", &s)
                .run(|| {
                    let h = hecke_quotient(n, &s)?;
                    let b = build_bmw(n, &s, &a)?;
                    let surj = verify_hecke_surjection(&b, &h, 50, o.seed)?;
                    Ok((surj && h.dim == (1..=n).product::<usize>(), Some(format!("dim {}", h.dim))))
                }),
        );
    }
    out
}

fn cubic(o: &SuiteOptions) -> Vec<CheckRecord> {
    (2..=o.n.min(4))
        .map(|n| {
            CheckRecord::new(&format!("cubic.{n}"), "ρ(s_12)exp(hρ(t_12)) satisfies one cubic on every cell module")
                .param("m", &o.m)
                .param("K", 8)
                .run(|| {
                    let reports = verify_cubic_all(n, &o.m, 8)?;
                    let root = consistent_third_root(&reports);
                    let ok = reports.iter().all(|r| r.ok) && root.is_some();
                    let w = root.map_or("no common third root".into(), |r| format!("third root {r}"));
                    Ok((ok, Some(w)))
                })
        })
        .collect()
}

fn unitarity(o: &SuiteOptions) -> Vec<CheckRecord> {
    (1..=o.n.min(5))
        .map(|n| {
            CheckRecord::new(&format!("unitarity.{n}"), "G-selfadjoint t_ij, G-orthogonal permutations, formally unitary monodromy")
                .param("m", &o.m)
                .run(|| {
                    for l in irreducible_labels(n) {
                        let r = formal_unitarity_report(n, &l, &o.m, 8)?;
                        if !r.ok {
                            return Ok((false, Some(format!("{l}: {r:?}"))));
                        }
                    }
                    Ok((true, None))
                })
        })
        .collect()
}

fn hyperbolicity(o: &SuiteOptions) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 2..=o.n.min(6) {
        for l in partitions(n).into_iter().filter(|l| l.is_self_conjugate()) {
            out.push(
                CheckRecord::new(&format!("hyperbolicity.{l}"), "β_λ is hyperbolic when ε ⊂ S²R_λ").run(|| {
                    let rep = SpechtRep::new(l.clone())?;
                    if !sym_square_contains_sign(&rep)? {
                        return Ok((true, Some("ε ⊄ S²: no claim".into())));
                    }
                    let beta = sign_twisted_form(&rep)?.ok_or_else(|| Error::Verification("no sign-twisted form".into()))?;
                    let index = witt_index(&beta)?;
                    Ok((is_hyperbolic(&beta)?, Some(format!("Witt index {index} of {}", beta.rows()))))
                }),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank_suites_pass() {
        let o = SuiteOptions { n: 3, ..SuiteOptions::default() };
        for s in ["diagrams", "relations", "trace", "dimensions", "spectra", "cells", "theorem-brauer", "cubic"] {
            let r = run_suite(s, &o).unwrap();
            assert!(r.passed(), "{}", r.table());
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let o = SuiteOptions { n: 3, seed: 11, ..SuiteOptions::default() };
        let strip = |mut r: VerificationReport| {
            r.millis = 0;
            r.checks.iter_mut().for_each(|c| c.millis = 0);
            r
        };
        assert_eq!(strip(run_suite("trace", &o).unwrap()), strip(run_suite("trace", &o).unwrap()));
    }
}
