//! Weighted context-free models over a grammar backbone: tree probability,
//! most-probable-parse disambiguation, expected-rule-frequency estimation,
//! and stochastic derivation sampling (which doubles as the chain proposal).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use thiserror::Error;

use crate::grammar::{
    derivation_from_bracketed, derive_dag, AvGrammar, CfSkeleton, Dag, Derivation, GrammarError,
    RhsItem,
};
use crate::weight::Weight;

#[derive(Debug, Error)]
pub enum ScfgError {
    #[error("rule group `{lhs}` weights sum to {sum}, expected 1")]
    NotProper { lhs: String, sum: f64 },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("weights must be positive; rule {rule} has weight {weight}")]
    NonPositive { rule: usize, weight: f64 },
    #[error("corpus line {line}: {msg}")]
    Corpus { line: usize, msg: String },
    #[error("sampling exhausted its resample budget ({budget}) at depth cap {max_depth}; {attempts} attempts")]
    ResampleBudget {
        budget: usize,
        max_depth: usize,
        attempts: usize,
    },
    #[error(transparent)]
    Grammar(#[from] GrammarError),
}

const PROPER_TOL: f64 = 1e-9;

/// A context-free skeleton with one positive weight per rule. `proper`
/// models have per-left-hand-side weights summing to one.
#[derive(Debug, Clone)]
pub struct CfModel {
    pub skeleton: CfSkeleton,
    theta: Vec<Weight>,
    proper: bool,
}

impl CfModel {
    /// Builds a model and checks that every lhs group sums to one.
    pub fn proper(skeleton: CfSkeleton, theta: Vec<Weight>) -> Result<CfModel, ScfgError> {
        let m = CfModel::improper(skeleton, theta)?;
        let mut sums: BTreeMap<&str, f64> = BTreeMap::new();
        for r in &m.skeleton.rules {
            *sums.entry(r.lhs.as_str()).or_insert(0.0) += m.theta[r.id - 1].value();
        }
        for (lhs, sum) in sums {
            if (sum - 1.0).abs() > PROPER_TOL {
                return Err(ScfgError::NotProper {
                    lhs: lhs.to_string(),
                    sum,
                });
            }
        }
        Ok(CfModel { proper: true, ..m })
    }

    /// Builds a model without the properness check.
    pub fn improper(skeleton: CfSkeleton, theta: Vec<Weight>) -> Result<CfModel, ScfgError> {
        if theta.len() != skeleton.rules.len() {
            return Err(ScfgError::WeightCount {
                expected: skeleton.rules.len(),
                got: theta.len(),
            });
        }
        for (i, w) in theta.iter().enumerate() {
            if w.value() <= 0.0 {
                return Err(ScfgError::NonPositive {
                    rule: i + 1,
                    weight: w.value(),
                });
            }
        }
        Ok(CfModel {
            skeleton,
            theta,
            proper: false,
        })
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn theta(&self) -> &[Weight] {
        &self.theta
    }

    pub fn weight(&self, rule: usize) -> &Weight {
        &self.theta[rule - 1]
    }

    /// Product of the weights of the rules used in `d`, accumulated in log
    /// space and exponentiated once.
    pub fn tree_probability(&self, d: &Derivation) -> f64 {
        self.tree_log_probability(d).exp()
    }

    pub fn tree_log_probability(&self, d: &Derivation) -> f64 {
        d.rule_sequence()
            .iter()
            .map(|&r| self.theta[r - 1].ln())
            .sum()
    }

    /// Exact rational probability when every weight used carries one.
    pub fn tree_probability_exact(&self, d: &Derivation) -> Option<BigRational> {
        let mut acc = BigRational::new(BigInt::from(1), BigInt::from(1));
        for r in d.rule_sequence() {
            acc *= self.theta[r - 1].exact()?;
        }
        Some(acc)
    }
}

/// Per-rule usage counts of a derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleFrequencies(pub Vec<u64>);

impl RuleFrequencies {
    pub fn count(&self, rule: usize) -> u64 {
        self.0[rule - 1]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// How often each of the `n_rules` rules is used in `d`.
pub fn rule_frequencies(n_rules: usize, d: &Derivation) -> RuleFrequencies {
    let mut counts = vec![0u64; n_rules];
    for r in d.rule_sequence() {
        counts[r - 1] += 1;
    }
    RuleFrequencies(counts)
}

/// The maximum-probability parse; ties go to the lowest rule-id sequence.
pub fn disambiguate<'a>(m: &CfModel, parses: &'a [Derivation]) -> &'a Derivation {
    assert!(
        !parses.is_empty(),
        "disambiguate requires at least one parse"
    );
    let mut best = &parses[0];
    let mut best_ln = m.tree_log_probability(best);
    for d in &parses[1..] {
        let ln = m.tree_log_probability(d);
        if ln > best_ln + 1e-12
            || ((ln - best_ln).abs() <= 1e-12 && d.rule_sequence() < best.rule_sequence())
        {
            best = d;
            best_ln = ln;
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

/// One corpus record: a dag type, the derivation it came from, and a count.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub dag: Dag,
    pub derivation: Derivation,
    pub count: u64,
}

/// Relative frequencies of dag types in a training corpus. Entries are
/// merged by dag equality and kept in first-seen order.
#[derive(Debug, Clone)]
pub struct EmpiricalDistribution {
    pub entries: Vec<CorpusEntry>,
    pub total: u64,
}

impl EmpiricalDistribution {
    pub fn from_entries(entries: Vec<(Derivation, Dag, u64)>) -> EmpiricalDistribution {
        let mut merged: Vec<CorpusEntry> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut total = 0;
        for (derivation, dag, count) in entries {
            assert!(count > 0, "corpus counts must be positive");
            total += count;
            match index.get(dag.canonical()) {
                Some(&i) => merged[i].count += count,
                None => {
                    index.insert(dag.canonical().to_string(), merged.len());
                    merged.push(CorpusEntry {
                        dag,
                        derivation,
                        count,
                    });
                }
            }
        }
        EmpiricalDistribution {
            entries: merged,
            total,
        }
    }

    /// Reads `<count> <bracketed tree>` records; `#` starts a comment.
    /// Malformed records are rejected with their line number.
    pub fn parse(
        g: &AvGrammar,
        text: &str,
        max_depth: usize,
    ) -> Result<EmpiricalDistribution, ScfgError> {
        let mut raw = Vec::new();
        for (idx, line_raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match line_raw.find('#') {
                Some(p) => &line_raw[..p],
                None => line_raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (count_part, tree_part) =
                line.split_once(char::is_whitespace)
                    .ok_or(ScfgError::Corpus {
                        line: line_no,
                        msg: "expected `<count> <bracketed tree>`".into(),
                    })?;
            let count: u64 = count_part.parse().map_err(|_| ScfgError::Corpus {
                line: line_no,
                msg: format!("bad count `{count_part}`"),
            })?;
            if count == 0 {
                return Err(ScfgError::Corpus {
                    line: line_no,
                    msg: "count must be positive".into(),
                });
            }
            let derivation =
                derivation_from_bracketed(g, tree_part.trim()).map_err(|e| ScfgError::Corpus {
                    line: line_no,
                    msg: e.to_string(),
                })?;
            if derivation.depth() > max_depth {
                return Err(ScfgError::Corpus {
                    line: line_no,
                    msg: format!("tree deeper than the depth bound {max_depth}"),
                });
            }
            let dag = derive_dag(g, &derivation).map_err(|f| ScfgError::Corpus {
                line: line_no,
                msg: format!("tree does not unify: {f}"),
            })?;
            raw.push((derivation, dag, count));
        }
        Ok(EmpiricalDistribution::from_entries(raw))
    }

    /// p̃(x) for each entry, exact.
    pub fn probability_exact(&self, i: usize) -> BigRational {
        BigRational::new(
            BigInt::from(self.entries[i].count),
            BigInt::from(self.total),
        )
    }

    pub fn probability(&self, i: usize) -> f64 {
        self.entries[i].count as f64 / self.total as f64
    }

    /// Empirical expectation of an arbitrary dag function.
    pub fn expectation(&self, f: impl Fn(&Dag) -> f64) -> f64 {
        self.entries
            .iter()
            .map(|e| e.count as f64 * f(&e.dag))
            .sum::<f64>()
            / self.total as f64
    }

    /// Empirical expectation of a per-rule frequency, exact.
    pub fn rule_expectation_exact(&self, n_rules: usize, rule: usize) -> BigRational {
        let used: u64 = self
            .entries
            .iter()
            .map(|e| e.count * rule_frequencies(n_rules, &e.derivation).count(rule))
            .sum();
        BigRational::new(BigInt::from(used), BigInt::from(self.total))
    }

    pub fn render(&self, g: &AvGrammar) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "{} {}", e.count, e.derivation.bracketed(g));
        }
        out
    }
}

/// Expectation of `f` under an explicit distribution over dags.
/// The probabilities must sum to one (tolerance 1e-9).
pub fn expectation(dist: &[(Dag, f64)], f: impl Fn(&Dag) -> f64) -> f64 {
    let total: f64 = dist.iter().map(|(_, p)| p).sum();
    assert!(
        (total - 1.0).abs() < 1e-9,
        "distribution sums to {total}, expected 1"
    );
    dist.iter().map(|(x, p)| p * f(x)).sum()
}

// ---------------------------------------------------------------------------
// ERF estimation
// ---------------------------------------------------------------------------

/// Sets each rule weight proportional to its expected frequency in the
/// corpus, normalized within every left-hand-side group. Groups whose total
/// expectation is zero fall back to uniform weights.
pub fn erf_estimate(
    skeleton: &CfSkeleton,
    corpus: &EmpiricalDistribution,
) -> Result<CfModel, ScfgError> {
    let n = skeleton.rules.len();
    let mut expect: Vec<BigRational> = (1..=n)
        .map(|r| corpus.rule_expectation_exact(n, r))
        .collect();
    let mut group_total: BTreeMap<&str, BigRational> = BTreeMap::new();
    for r in &skeleton.rules {
        *group_total
            .entry(r.lhs.as_str())
            .or_insert_with(BigRational::zero) += &expect[r.id - 1];
    }
    for r in &skeleton.rules {
        let total = &group_total[r.lhs.as_str()];
        if total.is_zero() {
            let size = skeleton.rules.iter().filter(|q| q.lhs == r.lhs).count();
            expect[r.id - 1] = BigRational::new(BigInt::from(1), BigInt::from(size as u64));
        } else {
            expect[r.id - 1] = &expect[r.id - 1] / total;
        }
    }
    CfModel::proper(
        skeleton.clone(),
        expect.into_iter().map(Weight::from_exact).collect(),
    )
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Depth cap and resample budget for stochastic derivations.
#[derive(Debug, Clone, Copy)]
pub struct SampleLimits {
    pub max_depth: usize,
    pub resample_budget: usize,
}

impl Default for SampleLimits {
    fn default() -> Self {
        SampleLimits {
            max_depth: 50,
            resample_budget: 1000,
        }
    }
}

/// Top-down stochastic derivation: each nonterminal expands by a rule drawn
/// with probability theta. Derivations that exceed the depth cap are
/// discarded and resampled; exhausting the budget is a fault.
pub fn sample_derivation<R: Rng>(
    m: &CfModel,
    rng: &mut R,
    limits: SampleLimits,
) -> Result<(Derivation, usize), ScfgError> {
    assert!(m.is_proper(), "sampling requires a proper model");
    for attempt in 0..limits.resample_budget {
        match try_expand(m, &m.skeleton.start, limits.max_depth, rng) {
            Some(d) => return Ok((d, attempt)),
            None => continue,
        }
    }
    Err(ScfgError::ResampleBudget {
        budget: limits.resample_budget,
        max_depth: limits.max_depth,
        attempts: limits.resample_budget,
    })
}

fn try_expand<R: Rng>(m: &CfModel, symbol: &str, budget: usize, rng: &mut R) -> Option<Derivation> {
    if budget == 0 {
        return None;
    }
    let rules: Vec<_> = m.skeleton.rules_for(symbol).collect();
    debug_assert!(!rules.is_empty());
    let mut draw: f64 = rng.random();
    let mut chosen = rules[rules.len() - 1];
    for r in &rules {
        let w = m.theta[r.id - 1].value();
        if draw < w {
            chosen = r;
            break;
        }
        draw -= w;
    }
    let mut children = Vec::with_capacity(chosen.rhs.len());
    for item in &chosen.rhs {
        match item {
            RhsItem::Terminal(t) => children.push(Derivation::Leaf(t.clone())),
            RhsItem::Nonterminal(nt) => children.push(try_expand(m, nt, budget - 1, rng)?),
        }
    }
    Some(Derivation::Apply {
        rule: chosen.id,
        children,
    })
}

// ---------------------------------------------------------------------------
// Weights files
// ---------------------------------------------------------------------------

/// Renders `rule <id> <weight>` lines.
pub fn render_weights(m: &CfModel) -> String {
    let mut out = String::new();
    for r in &m.skeleton.rules {
        let _ = writeln!(out, "rule {} {}", r.id, m.theta[r.id - 1]);
    }
    out
}

/// Parses `rule <id> <weight>` lines against a skeleton.
pub fn parse_weights(skeleton: &CfSkeleton, text: &str) -> Result<Vec<Weight>, ScfgError> {
    let mut theta: Vec<Option<Weight>> = vec![None; skeleton.rules.len()];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (kw, id, w) = (parts.next(), parts.next(), parts.next());
        let (Some("rule"), Some(id), Some(w), None) = (kw, id, w, parts.next()) else {
            return Err(ScfgError::Corpus {
                line: line_no,
                msg: "expected `rule <id> <weight>`".into(),
            });
        };
        let id: usize = id.parse().map_err(|_| ScfgError::Corpus {
            line: line_no,
            msg: format!("bad rule id `{id}`"),
        })?;
        if id == 0 || id > theta.len() {
            return Err(ScfgError::Corpus {
                line: line_no,
                msg: format!("rule id {id} out of range"),
            });
        }
        let w = Weight::parse(w).map_err(|e| ScfgError::Corpus {
            line: line_no,
            msg: e,
        })?;
        theta[id - 1] = Some(w);
    }
    theta
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            w.ok_or(ScfgError::Corpus {
                line: 0,
                msg: format!("missing weight for rule {}", i + 1),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{av_corpus, av_grammar, cf_corpus, cf_grammar, demo_model, demo_weights};
    use crate::grammar::{cf_analogue, enumerate_language, parse_dags};
    use num_traits::ToPrimitive;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn frequencies_count_rule_usage() {
        let g = cf_grammar();
        let d = derivation_from_bracketed(&g, "(S (A a) (A a))").unwrap();
        let f = rule_frequencies(6, &d);
        assert_eq!(f.0, vec![1, 0, 2, 0, 0, 0]);
        let flat = derivation_from_bracketed(&g, "(S (B a a))").unwrap();
        assert_eq!(rule_frequencies(6, &flat).0, vec![0, 1, 0, 0, 1, 0]);
        let single: AvGrammar = "start S\nrule 1: S -> 'a'\n".parse().unwrap();
        let d = derivation_from_bracketed(&single, "(S a)").unwrap();
        assert_eq!(rule_frequencies(1, &d).0, vec![1]);
    }

    #[test]
    fn tree_probability_matches_hand_products() {
        let g = cf_grammar();
        let m = demo_model();
        let twin = derivation_from_bracketed(&g, "(S (A a) (A a))").unwrap();
        assert_eq!(m.tree_probability_exact(&twin).unwrap(), ratio(2, 9));
        assert!((m.tree_probability(&twin) - 2.0 / 9.0).abs() < 1e-15);
        let flat = derivation_from_bracketed(&g, "(S (B a a))").unwrap();
        assert_eq!(m.tree_probability_exact(&flat).unwrap(), ratio(1, 4));
    }

    #[test]
    fn all_ones_improper_model_gives_probability_one() {
        let g = cf_grammar();
        let m = CfModel::improper(cf_analogue(&g), vec![Weight::one(); 6]).unwrap();
        for (_, d) in enumerate_language(&g, 10).items {
            assert!((m.tree_probability(&d) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn log_domain_consistency() {
        let g = cf_grammar();
        let m = demo_model();
        for (_, d) in enumerate_language(&g, 10).items {
            let f = rule_frequencies(6, &d);
            let via_freq: f64 = (0..6).map(|i| f.0[i] as f64 * m.theta()[i].ln()).sum();
            assert!((m.tree_probability(&d) - via_freq.exp()).abs() < 1e-12);
        }
    }

    #[test]
    fn proper_model_mass_sums_to_one_on_cf_language() {
        let g = cf_grammar();
        let m = demo_model();
        let total: f64 = enumerate_language(&g, 10)
            .items
            .iter()
            .map(|(_, d)| m.tree_probability(d))
            .sum();
        assert!((total - 1.0).abs() < 1e-12, "mass {total}");

        // On the constrained language the same weights lose the mass of the
        // failing derivations: 1 - 2/9 = 7/9.
        let av = av_grammar();
        let constrained: f64 = enumerate_language(&av, 10)
            .items
            .iter()
            .map(|(_, d)| m.tree_probability(d))
            .sum();
        assert!(constrained <= 1.0 + 1e-12);
        assert!((constrained - 7.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn disambiguation_prefers_the_flat_analysis() {
        let g = cf_grammar();
        let m = demo_model();
        let parses: Vec<Derivation> = parse_dags(&g, &["a", "a"], 10)
            .into_iter()
            .map(|(_, d)| d)
            .collect();
        let best = disambiguate(&m, &parses);
        assert_eq!(best.rule_sequence(), vec![2, 5]); // 1/4 beats 2/9
    }

    #[test]
    fn disambiguation_single_parse_and_ties() {
        let g = cf_grammar();
        let m = demo_model();
        let parses = vec![derivation_from_bracketed(&g, "(S (A a) (A b))").unwrap()];
        assert_eq!(disambiguate(&m, &parses), &parses[0]);

        // Equal-weight grammar with two parses of the same shape.
        let tie: AvGrammar =
            "start S\nrule 1: S -> A\nrule 2: S -> B\nrule 3: A -> 'x'\nrule 4: B -> 'x'\n"
                .parse()
                .unwrap();
        let tm = CfModel::proper(
            cf_analogue(&tie),
            vec![
                Weight::from_ratio(1, 2),
                Weight::from_ratio(1, 2),
                Weight::one(),
                Weight::one(),
            ],
        )
        .unwrap();
        let parses: Vec<Derivation> = parse_dags(&tie, &["x"], 10)
            .into_iter()
            .map(|(_, d)| d)
            .collect();
        assert_eq!(parses.len(), 2);
        assert_eq!(disambiguate(&tm, &parses).rule_sequence(), vec![1, 3]);
    }

    #[test]
    fn erf_recovers_demo_weights_from_corpus() {
        let g = cf_grammar();
        let m = erf_estimate(&cf_analogue(&g), &cf_corpus()).unwrap();
        let expected = demo_weights();
        for (got, want) in m.theta().iter().zip(&expected) {
            assert_eq!(got.exact().unwrap(), want.exact().unwrap());
        }
    }

    #[test]
    fn erf_on_av_corpus_gives_identical_weights() {
        let g = av_grammar();
        let m = erf_estimate(&cf_analogue(&g), &av_corpus()).unwrap();
        for (got, want) in m.theta().iter().zip(&demo_weights()) {
            assert_eq!(got.exact().unwrap(), want.exact().unwrap());
        }
    }

    #[test]
    fn erf_uniform_within_groups_when_each_rule_used_once() {
        let g: AvGrammar = "start S\nrule 1: S -> A A\nrule 2: A -> 'a'\nrule 3: A -> 'b'\n"
            .parse()
            .unwrap();
        let d = derivation_from_bracketed(&g, "(S (A a) (A b))").unwrap();
        let dag = derive_dag(&g, &d).unwrap();
        let corpus = EmpiricalDistribution::from_entries(vec![(d, dag, 1)]);
        let m = erf_estimate(&cf_analogue(&g), &corpus).unwrap();
        assert_eq!(m.weight(1).exact().unwrap(), &ratio(1, 1));
        assert_eq!(m.weight(2).exact().unwrap(), &ratio(1, 2));
        assert_eq!(m.weight(3).exact().unwrap(), &ratio(1, 2));
    }

    #[test]
    fn empirical_expectations_match_hand_table() {
        let corpus = cf_corpus();
        assert_eq!(corpus.rule_expectation_exact(6, 1), ratio(1, 2));
        assert_eq!(corpus.rule_expectation_exact(6, 3), ratio(2, 3));
        assert_eq!(corpus.rule_expectation_exact(6, 5), ratio(1, 4));
        // Generic expectation plumbing.
        let dist: Vec<(Dag, f64)> = corpus
            .entries
            .iter()
            .map(|e| (e.dag.clone(), e.count as f64 / corpus.total as f64))
            .collect();
        assert_eq!(expectation(&dist, |_| 0.0), 0.0);
        let f5 = |x: &Dag| {
            // one embedding of the flat-a analysis
            if x.canonical().contains("B[1:'a'") {
                1.0
            } else {
                0.0
            }
        };
        assert!((expectation(&dist, f5) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn corpus_merges_duplicate_trees() {
        let g = cf_grammar();
        let text = "1 (S (A a) (A a))\n2 (S (A a) (A a))\n1 (S (B a a))\n";
        let c = EmpiricalDistribution::parse(&g, text, 10).unwrap();
        assert_eq!(c.entries.len(), 2);
        assert_eq!(c.entries[0].count, 3);
        assert_eq!(c.total, 4);
    }

    #[test]
    fn corpus_rejects_malformed_lines_with_numbers() {
        let g = cf_grammar();
        let err = EmpiricalDistribution::parse(&g, "1 (S (A a) (A a))\nbogus\n", 10).unwrap_err();
        assert!(matches!(err, ScfgError::Corpus { line: 2, .. }), "{err}");
        let err = EmpiricalDistribution::parse(&g, "0 (S (B a a))\n", 10).unwrap_err();
        assert!(matches!(err, ScfgError::Corpus { line: 1, .. }));
    }

    #[test]
    fn sampled_frequencies_converge_to_tree_probabilities() {
        let m = demo_model();
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let n = 100_000;
        let mut twin_a = 0u32;
        let mut twin_b = 0u32;
        for _ in 0..n {
            let (d, _) = sample_derivation(&m, &mut rng, SampleLimits::default()).unwrap();
            match d.rule_sequence().as_slice() {
                [1, 3, 3] => twin_a += 1,
                [1, 4, 4] => twin_b += 1,
                _ => {}
            }
        }
        assert!((twin_a as f64 / n as f64 - 2.0 / 9.0).abs() < 0.01);
        assert!((twin_b as f64 / n as f64 - 1.0 / 18.0).abs() < 0.01);
    }

    #[test]
    fn deterministic_grammar_always_samples_its_tree() {
        let g: AvGrammar = "start S\nrule 1: S -> A\nrule 2: A -> 'a'\n"
            .parse()
            .unwrap();
        let m = CfModel::proper(cf_analogue(&g), vec![Weight::one(), Weight::one()]).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(0);
        for _ in 0..50 {
            let (d, retries) = sample_derivation(&m, &mut rng, SampleLimits::default()).unwrap();
            assert_eq!(d.rule_sequence(), vec![1, 2]);
            assert_eq!(retries, 0);
        }
    }

    #[test]
    fn resample_budget_exhaustion_is_reported() {
        // A grammar that cannot terminate within the depth cap.
        let g: AvGrammar = "start S\nrule 1: S -> S\n".parse().unwrap();
        let m = CfModel::proper(cf_analogue(&g), vec![Weight::one()]).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(0);
        let err = sample_derivation(
            &m,
            &mut rng,
            SampleLimits {
                max_depth: 5,
                resample_budget: 3,
            },
        )
        .unwrap_err();
        assert!(matches!(err, ScfgError::ResampleBudget { budget: 3, .. }));
    }

    #[test]
    fn erf_consistency_on_sampled_corpora() {
        let g = cf_grammar();
        let m = demo_model();
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let mut entries = Vec::new();
        for _ in 0..10_000 {
            let (d, _) = sample_derivation(&m, &mut rng, SampleLimits::default()).unwrap();
            let dag = derive_dag(&g, &d).unwrap();
            entries.push((d, dag, 1));
        }
        let corpus = EmpiricalDistribution::from_entries(entries);
        let est = erf_estimate(&m.skeleton, &corpus).unwrap();
        let max_err = est
            .theta()
            .iter()
            .zip(m.theta())
            .map(|(a, b)| (a.value() - b.value()).abs())
            .fold(0.0f64, f64::max)
            .to_f64()
            .unwrap();
        assert!(max_err < 0.03, "max weight error {max_err}");
    }

    #[test]
    fn weights_file_round_trip() {
        let m = demo_model();
        let text = render_weights(&m);
        assert!(text.contains("rule 3 2/3"));
        let theta = parse_weights(&m.skeleton, &text).unwrap();
        for (a, b) in theta.iter().zip(m.theta()) {
            assert_eq!(a.exact(), b.exact());
        }
    }

    #[test]
    fn proper_check_rejects_bad_groups() {
        let g = cf_grammar();
        let mut theta = demo_weights();
        theta[0] = Weight::from_ratio(1, 3);
        assert!(matches!(
            CfModel::proper(cf_analogue(&g), theta),
            Err(ScfgError::NotProper { .. })
        ));
    }
}
