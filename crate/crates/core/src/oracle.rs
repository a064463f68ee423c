//! Brute-force reference implementations, kept numerically independent of
//! the estimators they validate: plain linear-domain products, direct
//! summation, and grid search with golden-section refinement. Every number
//! the acceptance suite relies on is double-computed through this module.

use std::fmt::Write as _;

use crate::field::{count_property, Distribution, FieldModel, LanguageTable, Property};
use crate::grammar::{Dag, Derivation};
use crate::induction::ExactContext;
use crate::scfg::CfModel;

/// One double-computed quantity with its tolerance verdict.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub quantity: String,
    pub oracle: f64,
    pub subject: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
}

impl OracleReport {
    pub fn compare(quantity: &str, oracle: f64, subject: f64, tol: f64) -> OracleReport {
        let abs_err = (oracle - subject).abs();
        let rel_err = if oracle.abs() > 0.0 {
            abs_err / oracle.abs()
        } else {
            abs_err
        };
        OracleReport {
            quantity: quantity.to_string(),
            oracle,
            subject,
            abs_err,
            rel_err,
            tol,
            pass: abs_err <= tol,
        }
    }
}

/// Renders reports as a TSV table with a header row.
pub fn render_reports(reports: &[OracleReport]) -> String {
    let mut out = String::from("quantity\toracle\tsubject\tabs_err\trel_err\ttol\tpass\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{}\t{:.12e}\t{:.12e}\t{:.3e}\t{:.3e}\t{:.1e}\t{}",
            r.quantity,
            r.oracle,
            r.subject,
            r.abs_err,
            r.rel_err,
            r.tol,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    out
}

/// Expectation of `f` under the model distribution by full enumeration;
/// ground truth for every sampled estimate. Truncated enumerations are a
/// fault because the oracle must be exact.
pub fn exact_expectation(m: &FieldModel, table: &LanguageTable, f: impl Fn(&Dag) -> f64) -> f64 {
    assert!(
        !table.truncated,
        "oracle expectation requires an untruncated language"
    );
    let dist = brute_force_distribution(m, table);
    table.dags.iter().zip(&dist).map(|(x, &q)| q * f(x)).sum()
}

/// The field distribution recomputed from scratch: per-dag products in the
/// linear domain, no log space, no caches.
pub fn brute_force_distribution(m: &FieldModel, table: &LanguageTable) -> Vec<f64> {
    let mut weights = Vec::with_capacity(table.len());
    for (i, x) in table.dags.iter().enumerate() {
        let mut w = table.initial_probability(i);
        for (p, b) in m.properties().iter().zip(m.beta()) {
            let f = count_property(p, x);
            for _ in 0..f {
                w *= b.value();
            }
        }
        weights.push(w);
    }
    let z: f64 = weights.iter().sum();
    weights.into_iter().map(|w| w / z).collect()
}

/// Unnormalized total mass (the normalizer) by direct linear products.
pub fn brute_force_normalizer(m: &FieldModel, table: &LanguageTable) -> f64 {
    let mut z = 0.0;
    for (i, x) in table.dags.iter().enumerate() {
        let mut w = table.initial_probability(i);
        for (p, b) in m.properties().iter().zip(m.beta()) {
            for _ in 0..count_property(p, x) {
                w *= b.value();
            }
        }
        z += w;
    }
    z
}

/// Kullback-Leibler divergence by direct summation over parallel slices.
pub fn brute_force_kl(p: &[f64], q: &[f64]) -> f64 {
    assert_eq!(p.len(), q.len());
    let mut total = 0.0;
    for (&pi, &qi) in p.iter().zip(q) {
        if pi > 0.0 {
            total += pi * (pi / qi).ln();
        }
    }
    total
}

/// Most probable parse by naive linear-domain products; returns the index.
pub fn brute_force_disambiguation(m: &CfModel, parses: &[Derivation]) -> usize {
    let mut best = 0;
    let mut best_p = -1.0;
    for (i, d) in parses.iter().enumerate() {
        let mut p = 1.0;
        for r in d.rule_sequence() {
            p *= m.weight(r).value();
        }
        let better = p > best_p + 1e-15
            || ((p - best_p).abs() <= 1e-15 && d.rule_sequence() < parses[best].rule_sequence());
        if better {
            best = i;
            best_p = p;
        }
    }
    best
}

/// Best weight for a candidate property by log-spaced grid search with
/// golden-section refinement of the best bracket; minimizes the divergence
/// directly rather than solving the expectation condition.
pub fn grid_search_best_weight(ctx: &ExactContext<'_>, candidate: &Property) -> f64 {
    let counts: Vec<u64> = ctx
        .table
        .dags
        .iter()
        .map(|x| count_property(candidate, x))
        .collect();
    let divergence = |ln_beta: f64| -> f64 {
        let beta = ln_beta.exp();
        let mut z = 0.0;
        let mut weights = Vec::with_capacity(counts.len());
        for (&q, &f) in ctx.q_old.iter().zip(&counts) {
            let mut w = q;
            for _ in 0..f {
                w *= beta;
            }
            weights.push(w);
            z += w;
        }
        let mut d = 0.0;
        for ((&p, &q0), w) in ctx.p_tilde.iter().zip(&ctx.q_old).zip(weights) {
            let _ = q0;
            if p > 0.0 {
                d += p * (p / (w / z)).ln();
            }
        }
        d
    };
    let grid: Vec<f64> = (0..=600).map(|i| -30.0 + i as f64 * 0.1).collect();
    let mut best_i = 0;
    let mut best_d = f64::INFINITY;
    for (i, &lb) in grid.iter().enumerate() {
        let d = divergence(lb);
        if d < best_d {
            best_d = d;
            best_i = i;
        }
    }
    let mut lo = grid[best_i.saturating_sub(1)];
    let mut hi = grid[(best_i + 1).min(grid.len() - 1)];
    // Golden-section refinement.
    let phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - phi * (hi - lo);
    let mut d = lo + phi * (hi - lo);
    let mut fc = divergence(c);
    let mut fd = divergence(d);
    while hi - lo > 1e-12 {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - phi * (hi - lo);
            fc = divergence(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + phi * (hi - lo);
            fd = divergence(d);
        }
    }
    (0.5 * (lo + hi)).exp()
}

/// Exact transition kernel assembled from first principles (fresh linear
/// products for the field weights) plus its balance and stationarity
/// diagnostics and the implied stationary distribution check.
pub struct KernelReport {
    pub kernel: Vec<Vec<f64>>,
    pub max_balance_violation: f64,
    pub max_stationarity_residual: f64,
    pub rows_sum_to_one: f64,
}

pub fn exhaustive_kernel(m: &FieldModel, table: &LanguageTable) -> KernelReport {
    let n = table.len();
    let q = brute_force_distribution(m, table);
    let p: Vec<f64> = (0..n).map(|i| table.initial_probability(i)).collect();
    let field_weight = |x: usize| -> f64 {
        let mut w = 1.0;
        for (prop, b) in m.properties().iter().zip(m.beta()) {
            for _ in 0..count_property(prop, &table.dags[x]) {
                w *= b.value();
            }
        }
        w
    };
    let f: Vec<f64> = (0..n).map(field_weight).collect();
    let mut kernel = vec![vec![0.0; n]; n];
    for x in 0..n {
        let mut off = 0.0;
        for y in 0..n {
            if x == y {
                continue;
            }
            let a = (f[y] / f[x]).min(1.0);
            kernel[x][y] = p[y] * a;
            off += kernel[x][y];
        }
        kernel[x][x] = 1.0 - off;
    }
    let mut max_balance_violation = 0.0f64;
    for x in 0..n {
        for y in (x + 1)..n {
            max_balance_violation =
                max_balance_violation.max((q[x] * kernel[x][y] - q[y] * kernel[y][x]).abs());
        }
    }
    let mut max_stationarity_residual = 0.0f64;
    for y in 0..n {
        let mass: f64 = (0..n).map(|x| q[x] * kernel[x][y]).sum();
        max_stationarity_residual = max_stationarity_residual.max((mass - q[y]).abs());
    }
    let rows_sum_to_one = kernel
        .iter()
        .map(|row| (row.iter().sum::<f64>() - 1.0).abs())
        .fold(0.0, f64::max);
    KernelReport {
        kernel,
        max_balance_violation,
        max_stationarity_residual,
        rows_sum_to_one,
    }
}

/// Distribution helpers for comparing against subject results.
pub fn distribution_as_slice(d: &Distribution) -> &[f64] {
    &d.probs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{empirical_from_corpus, CountSemantics, FieldModel, InitialMode};
    use crate::fixtures::{av_corpus, av_grammar, demo_model, demo_weights, uniformizing_weights};
    use crate::grammar::{cf_analogue, parse_dags, NodeLabel};
    use crate::induction::{rule_local_tree_properties, solve_initial_weight, ExactContext};
    use crate::weight::Weight;

    fn uniform_field(properties: Vec<Property>, beta: Vec<Weight>) -> FieldModel {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        FieldModel::new(g, initial, InitialMode::Uniform, properties, beta).unwrap()
    }

    #[test]
    fn brute_distribution_agrees_with_normalize_exact() {
        let m = uniform_field(rule_local_tree_properties(&av_grammar()), demo_weights());
        let table = m.language(10).unwrap();
        let subject = m.normalize_exact(&table).unwrap();
        let oracle = brute_force_distribution(&m, &table);
        for (s, o) in subject.probs.iter().zip(&oracle) {
            assert!((s - o).abs() < 1e-14);
        }
        let z = brute_force_normalizer(&m, &table);
        assert!((z - 7.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn exact_expectation_of_constant_is_constant() {
        let m = uniform_field(vec![], vec![]);
        let table = m.language(10).unwrap();
        assert!((exact_expectation(&m, &table, |_| 2.5) - 2.5).abs() < 1e-15);
    }

    #[test]
    fn exact_expectations_match_hand_values() {
        // Under the matched field distribution (1/3, 1/6, 1/4, 1/4) the
        // shared-daughter pattern has expectation 2/3 and the flat marker
        // has 1/2.
        let pattern = Property::new(
            Dag::build(
                vec![NodeLabel::Category("A".into()), NodeLabel::Atom("a".into())],
                vec![(0, "1".into(), 1)],
                0,
            )
            .unwrap(),
            CountSemantics::Embeddings,
        );
        let marker = Property::atom(NodeLabel::Category("B".into()), CountSemantics::Embeddings);
        let m = uniform_field(
            vec![pattern.clone(), marker.clone()],
            vec![
                Weight::from_f64(std::f64::consts::SQRT_2),
                Weight::from_ratio(3, 2),
            ],
        );
        let table = m.language(10).unwrap();
        let e1 = exact_expectation(&m, &table, |x| count_property(&pattern, x) as f64);
        let e2 = exact_expectation(&m, &table, |x| count_property(&marker, x) as f64);
        assert!((e1 - 2.0 / 3.0).abs() < 1e-12);
        assert!((e2 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn cf_model_expectation_by_enumeration() {
        // Rule-frequency expectation of the first rule under the demo
        // model: mass of the three twin-A trees.
        let g = crate::fixtures::cf_grammar();
        let m = FieldModel::new(g, demo_model(), InitialMode::Scfg, vec![], vec![]).unwrap();
        let table = m.language(10).unwrap();
        let uses_pair_rule = |x: &Dag| {
            if x.canonical().starts_with("S[1:A") {
                1.0
            } else {
                0.0
            }
        };
        let e = exact_expectation(&m, &table, uses_pair_rule);
        assert!((e - 0.5).abs() < 1e-12);
    }

    #[test]
    fn grid_search_agrees_with_bisection() {
        let m = uniform_field(vec![], vec![]);
        let table = m.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&m, &table, &emp).unwrap();
        let a = Property::atom(NodeLabel::Atom("a".into()), CountSemantics::Presence);
        let by_grid = grid_search_best_weight(&ctx, &a);
        assert!((by_grid - 1.4).abs() < 1e-6, "grid found {by_grid}");
        let by_bisect = solve_initial_weight(&ctx, &a, 1e-10).best_beta;
        assert!((by_grid - by_bisect).abs() < 1e-6);

        let b = Property::atom(NodeLabel::Atom("b".into()), CountSemantics::Presence);
        let grid_b = grid_search_best_weight(&ctx, &b);
        let bisect_b = solve_initial_weight(&ctx, &b, 1e-10).best_beta;
        assert!((grid_b - bisect_b).abs() < 1e-6);
    }

    #[test]
    fn degenerate_candidate_grid_weight_is_one() {
        let m = uniform_field(vec![], vec![]);
        let table = m.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&m, &table, &emp).unwrap();
        let s = Property::atom(NodeLabel::Category("S".into()), CountSemantics::Presence);
        let w = grid_search_best_weight(&ctx, &s);
        // Divergence is flat in the weight; any grid point ties, and the
        // refinement stays within the bracket containing 1.
        let counts: Vec<u64> = ctx
            .table
            .dags
            .iter()
            .map(|x| count_property(&s, x))
            .collect();
        assert!(counts.iter().all(|&c| c == 1));
        let d_at = |beta: f64| {
            let z: f64 = ctx
                .q_old
                .iter()
                .zip(&counts)
                .map(|(&q, &f)| q * beta.powi(f as i32))
                .sum();
            ctx.q_old
                .iter()
                .zip(&counts)
                .zip(&ctx.p_tilde)
                .filter(|(_, &p)| p > 0.0)
                .map(|((&q, &f), &p)| p * (p / (q * beta.powi(f as i32) / z)).ln())
                .sum::<f64>()
        };
        assert!((d_at(w) - d_at(1.0)).abs() < 1e-12);
    }

    #[test]
    fn brute_kl_matches_subject_kl() {
        let corpus = av_corpus();
        let p_tilde = empirical_from_corpus(&corpus);
        let m = uniform_field(rule_local_tree_properties(&av_grammar()), demo_weights());
        let table = m.language(10).unwrap();
        let q = m.normalize_exact(&table).unwrap();
        let subject = crate::field::kl_divergence(&p_tilde, &q).unwrap();
        let q_aligned: Vec<f64> = p_tilde
            .support
            .iter()
            .map(|x| q.probability_of(x).unwrap())
            .collect();
        let oracle = brute_force_kl(&p_tilde.probs, &q_aligned);
        assert!((subject - oracle).abs() < 1e-12);
        assert!((oracle - 0.0669).abs() < 5e-3);
    }

    #[test]
    fn brute_disambiguation_agrees() {
        let g = crate::fixtures::cf_grammar();
        let m = demo_model();
        let parses: Vec<Derivation> = parse_dags(&g, &["a", "a"], 10)
            .into_iter()
            .map(|(_, d)| d)
            .collect();
        let idx = brute_force_disambiguation(&m, &parses);
        let subject = crate::scfg::disambiguate(&m, &parses);
        assert_eq!(&parses[idx], subject);
        assert_eq!(parses[idx].rule_sequence(), vec![2, 5]);
    }

    #[test]
    fn exhaustive_kernel_is_stochastic_and_balanced() {
        let pattern = Property::new(
            Dag::build(
                vec![NodeLabel::Category("A".into()), NodeLabel::Atom("a".into())],
                vec![(0, "1".into(), 1)],
                0,
            )
            .unwrap(),
            CountSemantics::Embeddings,
        );
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let m = FieldModel::new(
            g,
            initial,
            InitialMode::Scfg,
            vec![
                pattern,
                Property::atom(NodeLabel::Category("B".into()), CountSemantics::Embeddings),
            ],
            vec![
                Weight::from_f64(std::f64::consts::SQRT_2),
                Weight::from_ratio(3, 2),
            ],
        )
        .unwrap();
        let table = m.language(10).unwrap();
        let report = exhaustive_kernel(&m, &table);
        assert!(report.rows_sum_to_one < 1e-12);
        assert!(report.max_balance_violation < 1e-12);
        assert!(report.max_stationarity_residual < 1e-12);
        // Agreement with the subject-side kernel diagnostics.
        let subject = crate::mcmc::detailed_balance_check(&m, &table).unwrap();
        assert!((report.max_balance_violation - subject.max_balance_violation).abs() < 1e-12);
    }

    #[test]
    fn null_field_kernel_is_the_proposal_matrix() {
        let g = av_grammar();
        let m = FieldModel::new(g, demo_model(), InitialMode::Scfg, vec![], vec![]).unwrap();
        let table = m.language(10).unwrap();
        let report = exhaustive_kernel(&m, &table);
        for (x, row) in report.kernel.iter().enumerate() {
            for (y, &k) in row.iter().enumerate() {
                if x != y {
                    assert!((k - table.initial_probability(y)).abs() < 1e-15);
                }
            }
        }
        assert!(report.max_stationarity_residual < 1e-15);
    }

    #[test]
    fn report_rendering_and_verdicts() {
        let r = OracleReport::compare("demo", 1.0, 1.0 + 1e-9, 1e-6);
        assert!(r.pass);
        let bad = OracleReport::compare("demo", 1.0, 1.1, 1e-6);
        assert!(!bad.pass);
        let text = render_reports(&[r, bad]);
        assert!(text.contains("PASS"));
        assert!(text.contains("FAIL"));
        assert_eq!(text.lines().count(), 3);
    }
}
