//! Metropolis-Hastings sampling from a field distribution. The proposal is
//! the context-free analogue's derivation sampler with failed derivations
//! discarded, i.e. an independence sampler for the initial distribution;
//! the acceptance ratio then collapses to a ratio of field weights because
//! the normalizer and the proposal probability cancel.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{count_property, FieldModel, InitialMode, LanguageTable, Property};
use crate::grammar::{derive_dag, Dag};
use crate::scfg::{sample_derivation, SampleLimits, ScfgError};

#[derive(Debug, Error)]
pub enum McmcError {
    #[error("chain proposals need an scfg initial distribution")]
    UniformInitial,
    #[error("proposal sampler exhausted its budget after {failures} unification failures")]
    ProposalBudget { failures: usize },
    #[error(transparent)]
    Scfg(#[from] ScfgError),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

/// Chain length, burn-in, thinning and seeding. `length` counts the
/// post-burn-in steps; every `thinning`-th of them is retained.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(default, rename_all = "camelCase")]
pub struct ChainConfig {
    pub burn_in: usize,
    pub length: usize,
    pub seed: u64,
    pub thinning: usize,
    pub proposal_resample_budget: usize,
    pub max_depth: usize,
}

impl Default for ChainConfig {
    fn default() -> Self {
        ChainConfig {
            burn_in: 5_000,
            length: 200_000,
            seed: 0,
            thinning: 1,
            proposal_resample_budget: 100_000,
            max_depth: 50,
        }
    }
}

/// A proposed dag together with its derivation weight (up to the constant
/// renormalizer over successful derivations, which cancels in ratios).
#[derive(Debug, Clone)]
pub struct Proposal {
    pub dag: Dag,
    pub ln_weight: f64,
    /// Unification failures consumed before this success.
    pub failures: usize,
}

/// Samples derivations until one maps to a consistent dag, discarding the
/// failures. Exhausting the budget is a fault carrying the failure count.
pub fn propose_dag<R: Rng>(
    m: &FieldModel,
    rng: &mut R,
    config: &ChainConfig,
) -> Result<Proposal, McmcError> {
    if m.mode != InitialMode::Scfg {
        return Err(McmcError::UniformInitial);
    }
    let limits = SampleLimits {
        max_depth: config.max_depth,
        resample_budget: config.proposal_resample_budget,
    };
    let mut failures = 0;
    while failures < config.proposal_resample_budget {
        let (deriv, _) = sample_derivation(&m.initial, rng, limits)?;
        match derive_dag(&m.grammar, &deriv) {
            Ok(dag) => {
                let ln_weight = m.initial.tree_log_probability(&deriv);
                return Ok(Proposal {
                    dag,
                    ln_weight,
                    failures,
                });
            }
            Err(_) => failures += 1,
        }
    }
    Err(McmcError::ProposalBudget { failures })
}

/// `min(1, F(proposed)/F(current))`: the normalizer and the proposal
/// probability cancel exactly against the target, leaving the field
/// weights.
pub fn acceptance_probability(m: &FieldModel, current: &Dag, proposed: &Dag) -> f64 {
    let ln_ratio = m.field_log_weight(proposed) - m.field_log_weight(current);
    ln_ratio.exp().min(1.0)
}

/// The textbook form `min(1, q(y)p(x) / (q(x)p(y)))` computed from an
/// explicit language table; used to assert the cancellation.
pub fn acceptance_probability_unsimplified(
    m: &FieldModel,
    table: &LanguageTable,
    current: &Dag,
    proposed: &Dag,
) -> Result<f64, McmcError> {
    let dist = m.normalize_exact(table)?;
    let ix = table.position(current).ok_or_else(|| {
        McmcError::Field(crate::field::FieldError::NotInLanguage(
            current.canonical().to_string(),
        ))
    })?;
    let iy = table.position(proposed).ok_or_else(|| {
        McmcError::Field(crate::field::FieldError::NotInLanguage(
            proposed.canonical().to_string(),
        ))
    })?;
    let ratio = dist.probs[iy] * table.initial_probability(ix)
        / (dist.probs[ix] * table.initial_probability(iy));
    Ok(ratio.min(1.0))
}

/// Everything a finished chain reports: the retained sample multiset,
/// acceptance statistics and per-property estimates.
#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(rename_all = "camelCase")]
pub struct ChainSummary {
    /// Canonical dag string -> retained count.
    pub counts: BTreeMap<String, u64>,
    pub retained: u64,
    pub accepted: u64,
    pub steps: u64,
    pub acceptance_rate: f64,
    pub proposal_failures: u64,
    pub expectations: Vec<f64>,
    pub histograms: Vec<Vec<f64>>,
    pub seed: u64,
    pub config: ChainConfig,
    #[serde(skip)]
    dags: BTreeMap<String, Dag>,
}

impl ChainSummary {
    /// Retained sample as `(dag, count)` pairs in canonical order.
    pub fn sample_counts(&self) -> Vec<(Dag, f64)> {
        self.counts
            .iter()
            .map(|(k, &c)| (self.dags[k].clone(), c as f64))
            .collect()
    }

    /// Empirical distribution of the retained sample.
    pub fn empirical(&self) -> crate::field::Distribution {
        let total: u64 = self.counts.values().sum();
        let mut support = Vec::new();
        let mut probs = Vec::new();
        for (k, &c) in &self.counts {
            support.push(self.dags[k].clone());
            probs.push(c as f64 / total as f64);
        }
        crate::field::Distribution {
            support,
            probs,
            exact: None,
            z: 1.0,
        }
    }
}

/// Runs the Metropolis-Hastings loop: propose from the initial
/// distribution, accept with the field-weight ratio, copy the current dag
/// on rejection. The first successful proposal seeds the chain.
pub fn run_chain(m: &FieldModel, config: &ChainConfig) -> Result<ChainSummary, McmcError> {
    assert!(config.length > 0, "chain length must be positive");
    assert!(config.thinning > 0, "thinning must be positive");
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    let mut proposal_failures = 0u64;

    let first = propose_dag(m, &mut rng, config)?;
    proposal_failures += first.failures as u64;
    let mut current = first.dag;
    let mut current_ln_f = m.field_log_weight(&current);

    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut dags: BTreeMap<String, Dag> = BTreeMap::new();
    let mut accepted = 0u64;
    let total_steps = config.burn_in + config.length;
    let mut retained = 0u64;
    for step in 0..total_steps {
        let proposal = propose_dag(m, &mut rng, config)?;
        proposal_failures += proposal.failures as u64;
        let ln_f = m.field_log_weight(&proposal.dag);
        let draw: f64 = rng.random();
        if draw.ln() < ln_f - current_ln_f {
            current = proposal.dag;
            current_ln_f = ln_f;
            accepted += 1;
        }
        if step >= config.burn_in && (step - config.burn_in).is_multiple_of(config.thinning) {
            retained += 1;
            let key = current.canonical().to_string();
            *counts.entry(key.clone()).or_insert(0) += 1;
            dags.entry(key).or_insert_with(|| current.clone());
        }
    }

    let mut summary = ChainSummary {
        counts,
        retained,
        accepted,
        steps: total_steps as u64,
        acceptance_rate: accepted as f64 / total_steps as f64,
        proposal_failures,
        expectations: Vec::new(),
        histograms: Vec::new(),
        seed: config.seed,
        config: config.clone(),
        dags,
    };
    let (expectations, histograms) = estimate_expectations(&summary, m.properties());
    summary.expectations = expectations;
    summary.histograms = histograms;
    Ok(summary)
}

/// Per-property means and count histograms over a retained sample.
pub fn estimate_expectations(
    summary: &ChainSummary,
    properties: &[Property],
) -> (Vec<f64>, Vec<Vec<f64>>) {
    let samples = summary.sample_counts();
    let total: f64 = samples.iter().map(|(_, c)| c).sum();
    let mut means = Vec::with_capacity(properties.len());
    let mut histograms = Vec::with_capacity(properties.len());
    for p in properties {
        let counts: Vec<u64> = samples.iter().map(|(x, _)| count_property(p, x)).collect();
        let mean = counts
            .iter()
            .zip(&samples)
            .map(|(&f, (_, c))| f as f64 * c)
            .sum::<f64>()
            / total;
        let kmax = counts.iter().copied().max().unwrap_or(0) as usize;
        let mut hist = vec![0.0; kmax + 1];
        for (&f, (_, c)) in counts.iter().zip(&samples) {
            hist[f as usize] += c / total;
        }
        means.push(mean);
        histograms.push(hist);
    }
    (means, histograms)
}

/// Exact-kernel diagnostics over a fully enumerated language.
#[derive(Debug, Clone, Copy)]
pub struct BalanceReport {
    /// `max_{x != y} |q(x) K(y|x) - q(y) K(x|y)|`
    pub max_balance_violation: f64,
    /// `max_y |sum_x q(x) K(y|x) - q(y)|`
    pub max_stationarity_residual: f64,
}

/// Builds the exact transition kernel (off-diagonal `p(y) A(y|x)`, diagonal
/// the remaining mass) and measures detailed balance and stationarity of
/// the field distribution under it.
#[allow(clippy::needless_range_loop)]
pub fn detailed_balance_check(
    m: &FieldModel,
    table: &LanguageTable,
) -> Result<BalanceReport, McmcError> {
    let n = table.len();
    let q = m.normalize_exact(table)?;
    let p: Vec<f64> = (0..n).map(|i| table.initial_probability(i)).collect();
    let mut kernel = vec![vec![0.0f64; n]; n];
    for x in 0..n {
        let mut off_diagonal = 0.0;
        for y in 0..n {
            if x == y {
                continue;
            }
            let a = acceptance_probability(m, &table.dags[x], &table.dags[y]);
            kernel[x][y] = p[y] * a;
            off_diagonal += kernel[x][y];
        }
        kernel[x][x] = 1.0 - off_diagonal;
    }
    let mut max_balance_violation = 0.0f64;
    for x in 0..n {
        for y in (x + 1)..n {
            let flow = q.probs[x] * kernel[x][y] - q.probs[y] * kernel[y][x];
            max_balance_violation = max_balance_violation.max(flow.abs());
        }
    }
    let mut max_stationarity_residual = 0.0f64;
    for y in 0..n {
        let mass: f64 = (0..n).map(|x| q.probs[x] * kernel[x][y]).sum();
        max_stationarity_residual = max_stationarity_residual.max((mass - q.probs[y]).abs());
    }
    Ok(BalanceReport {
        max_balance_violation,
        max_stationarity_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CountSemantics, Distribution, FieldModel, InitialMode, Property};
    use crate::fixtures::{av_grammar, demo_model, uniformizing_weights};
    use crate::grammar::{cf_analogue, NodeLabel};
    use crate::scfg::CfModel;
    use crate::weight::Weight;

    fn pattern_a_under_a() -> Property {
        Property::new(
            Dag::build(
                vec![NodeLabel::Category("A".into()), NodeLabel::Atom("a".into())],
                vec![(0, "1".into(), 1)],
                0,
            )
            .unwrap(),
            CountSemantics::Embeddings,
        )
    }

    /// Field over the AV grammar whose initial distribution is uniform on
    /// the four dags (via rule weights) and whose two properties rebuild
    /// the corpus distribution (1/3, 1/6, 1/4, 1/4).
    fn matched_field() -> FieldModel {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        FieldModel::new(
            g,
            initial,
            InitialMode::Scfg,
            vec![
                pattern_a_under_a(),
                Property::atom(NodeLabel::Category("B".into()), CountSemantics::Embeddings),
            ],
            vec![
                Weight::from_f64(std::f64::consts::SQRT_2),
                Weight::from_ratio(3, 2),
            ],
        )
        .unwrap()
    }

    fn null_scfg_field() -> FieldModel {
        let g = av_grammar();
        FieldModel::new(g, demo_model(), InitialMode::Scfg, vec![], vec![]).unwrap()
    }

    fn short_config(seed: u64, length: usize) -> ChainConfig {
        ChainConfig {
            burn_in: 1_000,
            length,
            seed,
            ..ChainConfig::default()
        }
    }

    #[test]
    fn proposals_only_land_in_the_language() {
        let m = null_scfg_field();
        let table = m.language(10).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let cfg = ChainConfig::default();
        for _ in 0..2000 {
            let p = propose_dag(&m, &mut rng, &cfg).unwrap();
            assert!(table.position(&p.dag).is_some());
        }
    }

    #[test]
    fn constraint_free_grammar_never_discards() {
        let g = crate::fixtures::cf_grammar();
        let m = FieldModel::new(g, demo_model(), InitialMode::Scfg, vec![], vec![]).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        let cfg = ChainConfig::default();
        for _ in 0..500 {
            assert_eq!(propose_dag(&m, &mut rng, &cfg).unwrap().failures, 0);
        }
    }

    #[test]
    fn proposal_frequencies_match_renormalized_weights() {
        let m = null_scfg_field();
        let table = m.language(10).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(9);
        let cfg = ChainConfig::default();
        let n = 100_000;
        let mut hits = vec![0u32; table.len()];
        for _ in 0..n {
            let p = propose_dag(&m, &mut rng, &cfg).unwrap();
            hits[table.position(&p.dag).unwrap()] += 1;
        }
        // Derivation mass (2/9, 1/18, 1/4, 1/4) renormalized by 7/9.
        let expected = [2.0 / 7.0, 1.0 / 14.0, 9.0 / 28.0, 9.0 / 28.0];
        for (h, e) in hits.iter().zip(expected) {
            assert!((*h as f64 / n as f64 - e).abs() < 0.01);
        }
    }

    #[test]
    fn acceptance_clamps_at_one_and_tracks_field_ratios() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        // F = (2, 1, 3/2, 3/2): moving toward higher weight always accepts.
        let up = acceptance_probability(&m, &table.dags[1], &table.dags[0]);
        assert_eq!(up, 1.0);
        let down = acceptance_probability(&m, &table.dags[0], &table.dags[2]);
        assert!((down - 0.75).abs() < 1e-12);
    }

    #[test]
    fn null_field_accepts_everything() {
        let m = null_scfg_field();
        let table = m.language(10).unwrap();
        for x in &table.dags {
            for y in &table.dags {
                assert_eq!(acceptance_probability(&m, x, y), 1.0);
            }
        }
    }

    #[test]
    fn simplified_and_unsimplified_acceptance_agree() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        for x in &table.dags {
            for y in &table.dags {
                let simple = acceptance_probability(&m, x, y);
                let full = acceptance_probability_unsimplified(&m, &table, x, y).unwrap();
                assert!(
                    (simple - full).abs() < 1e-12,
                    "{x} -> {y}: {simple} vs {full}"
                );
            }
        }
    }

    #[test]
    fn chain_converges_to_the_field_distribution() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        let exact = m.normalize_exact(&table).unwrap();
        let summary = run_chain(&m, &short_config(42, 200_000)).unwrap();
        let l1 = summary.empirical().l1_distance(&exact);
        assert!(l1 < 0.02, "L1 distance {l1}");
        assert_eq!(summary.retained, 200_000);
    }

    #[test]
    fn null_field_chain_reproduces_the_proposal() {
        let m = null_scfg_field();
        let table = m.language(10).unwrap();
        let p = Distribution::from_probs(
            table.dags.clone(),
            (0..table.len())
                .map(|i| table.initial_probability(i))
                .collect(),
        );
        let summary = run_chain(&m, &short_config(7, 100_000)).unwrap();
        assert_eq!(summary.accepted, summary.steps);
        let l1 = summary.empirical().l1_distance(&p);
        assert!(l1 < 0.02, "L1 distance {l1}");
    }

    #[test]
    fn length_one_chain_has_one_state() {
        let m = matched_field();
        let summary = run_chain(&m, &short_config(1, 1)).unwrap();
        assert_eq!(summary.retained, 1);
        assert_eq!(summary.counts.values().sum::<u64>(), 1);
    }

    #[test]
    fn retained_count_ignores_acceptance_rate() {
        let m = matched_field();
        let summary = run_chain(&m, &short_config(13, 5_000)).unwrap();
        assert!(summary.acceptance_rate < 1.0);
        assert_eq!(summary.retained, 5_000);
    }

    #[test]
    fn thinning_divides_the_retained_count() {
        let m = matched_field();
        let cfg = ChainConfig {
            thinning: 4,
            ..short_config(3, 8_000)
        };
        let summary = run_chain(&m, &cfg).unwrap();
        assert_eq!(summary.retained, 2_000);
    }

    #[test]
    fn per_property_expectations_approach_exact_values() {
        let m = matched_field();
        let summary = run_chain(&m, &short_config(42, 200_000)).unwrap();
        // Exact expectations under (1/3, 1/6, 1/4, 1/4): counts (2,0,0,0)
        // and (0,0,1,1).
        assert!((summary.expectations[0] - 2.0 / 3.0).abs() < 0.02);
        assert!((summary.expectations[1] - 0.5).abs() < 0.02);
        // Histogram masses sum to one.
        for h in &summary.histograms {
            assert!((h.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn constant_property_has_unit_mean() {
        let m = null_scfg_field();
        let summary = run_chain(&m, &short_config(2, 2_000)).unwrap();
        let root = Property::atom(NodeLabel::Category("S".into()), CountSemantics::Presence);
        let (means, hists) = estimate_expectations(&summary, &[root]);
        assert_eq!(means[0], 1.0);
        assert_eq!(hists[0], vec![0.0, 1.0]);
    }

    #[test]
    fn chain_error_shrinks_as_length_quadruples() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        let exact = m.normalize_exact(&table).unwrap();
        let err = |length: usize| -> f64 {
            let s = run_chain(&m, &short_config(42, length)).unwrap();
            s.empirical().l1_distance(&exact)
        };
        let (e1, e2, e3) = (err(12_500), err(50_000), err(200_000));
        assert!(e3 < e1, "12.5k: {e1}, 50k: {e2}, 200k: {e3}");
        assert!(e2 < e1 * 1.5);
    }

    #[test]
    fn identical_seeds_give_identical_summaries() {
        let m = matched_field();
        let a = run_chain(&m, &short_config(99, 20_000)).unwrap();
        let b = run_chain(&m, &short_config(99, 20_000)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn detailed_balance_and_stationarity_hold_exactly() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        let report = detailed_balance_check(&m, &table).unwrap();
        assert!(report.max_balance_violation < 1e-12);
        assert!(report.max_stationarity_residual < 1e-12);
    }

    #[test]
    fn null_field_kernel_rows_equal_the_proposal() {
        let m = null_scfg_field();
        let table = m.language(10).unwrap();
        let report = detailed_balance_check(&m, &table).unwrap();
        assert!(report.max_balance_violation < 1e-15);
        assert!(report.max_stationarity_residual < 1e-15);
    }

    #[test]
    fn uniform_mode_cannot_propose() {
        let g = av_grammar();
        let m = FieldModel::new(g, demo_model(), InitialMode::Uniform, vec![], vec![]).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(0);
        assert!(matches!(
            propose_dag(&m, &mut rng, &ChainConfig::default()),
            Err(McmcError::UniformInitial)
        ));
    }
}
