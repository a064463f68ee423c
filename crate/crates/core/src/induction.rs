//! Field induction: grow a random field one property at a time, scoring
//! candidates by the divergence reduction their optimal initial weight
//! buys, then readjust all weights by iterative scaling. Expectations come
//! from exhaustive enumeration when the language is small enough and from
//! Metropolis-Hastings samples otherwise.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{
    count_property, empirical_from_corpus, kl_divergence, CountSemantics, Distribution, FieldError,
    FieldModel, InitialMode, LanguageTable, Property,
};
use crate::grammar::{AvGrammar, Dag, NodeLabel, RhsItem};
use crate::mcmc::{run_chain, ChainConfig, McmcError};
use crate::scfg::EmpiricalDistribution;
use crate::weight::Weight;

#[derive(Debug, Error)]
pub enum InductionError {
    #[error("corpus dag `{0}` is not in the grammar's language")]
    CorpusOutsideLanguage(String),
    #[error("field has no properties to adjust")]
    NoProperties,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Mcmc(#[from] McmcError),
}

/// Weights are clamped away from zero when an empirical expectation of zero
/// drives them toward it.
pub const BETA_FLOOR: f64 = 1e-9;
const BETA_CEIL: f64 = 1e9;
/// Bisection range for `ln beta`.
const LN_RANGE: f64 = 30.0;
/// Two candidate scores within this distance count as tied and fall through
/// to the structural tie-break.
const SCORE_TIE: f64 = 1e-9;

/// Which counting modes candidate patterns are generated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum CandidatePool {
    Embeddings,
    Presence,
    #[default]
    Both,
}

impl CandidatePool {
    fn modes(self) -> &'static [CountSemantics] {
        match self {
            CandidatePool::Embeddings => &[CountSemantics::Embeddings],
            CandidatePool::Presence => &[CountSemantics::Presence],
            CandidatePool::Both => &[CountSemantics::Embeddings, CountSemantics::Presence],
        }
    }
}

/// How a solved update factor is applied to the current weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum UpdateRule {
    /// `gamma_i <- gamma_i * beta_i`; the fixpoint `beta_i = 1` coincides
    /// with matched expectations.
    #[default]
    Multiplicative,
    /// `gamma_i <- beta_i` verbatim.
    Assign,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, rename_all = "camelCase")]
pub struct InductionConfig {
    pub max_properties: usize,
    /// Stop when no candidate improves the divergence by more than this.
    pub score_tolerance: f64,
    /// Bisection interval tolerance on `ln beta` for the initial weight.
    pub initial_weight_tolerance: f64,
    /// Convergence threshold on update factors: stop when all are within
    /// this distance of 1.
    pub scaling_tolerance: f64,
    pub max_scaling_iterations: usize,
    /// Languages at most this large use exhaustive enumeration; larger ones
    /// fall back to chain sampling.
    pub exact_threshold: usize,
    pub max_depth: usize,
    pub semantics: CandidatePool,
    pub update_rule: UpdateRule,
    pub chain: ChainConfig,
}

impl Default for InductionConfig {
    fn default() -> Self {
        InductionConfig {
            max_properties: 12,
            score_tolerance: 1e-7,
            initial_weight_tolerance: 1e-10,
            scaling_tolerance: 1e-9,
            max_scaling_iterations: 2000,
            exact_threshold: 10_000,
            max_depth: 10,
            semantics: CandidatePool::default(),
            update_rule: UpdateRule::default(),
            chain: ChainConfig::default(),
        }
    }
}

/// Estimated masses of `q_old[f = k]` for `k = 0..=kmax`.
#[derive(Debug, Clone)]
pub struct Histogram {
    pub buckets: Vec<f64>,
}

impl Histogram {
    pub fn from_samples(counts: &[u64], weights: &[f64]) -> Histogram {
        let kmax = counts.iter().copied().max().unwrap_or(0) as usize;
        // Two guard buckets beyond the largest observed value.
        let mut buckets = vec![0.0; kmax + 3];
        let total: f64 = weights.iter().sum();
        for (&k, &w) in counts.iter().zip(weights) {
            buckets[k as usize] += w / total;
        }
        Histogram { buckets }
    }

    pub fn mass(&self) -> f64 {
        self.buckets.iter().sum()
    }
}

// ---------------------------------------------------------------------------
// Candidate generation
// ---------------------------------------------------------------------------

/// Atomic (single-node) candidates plus one-arc combinations of field
/// properties with each other or with atoms.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub atoms: Vec<Property>,
    pub combos: Vec<Property>,
}

impl CandidateSet {
    pub fn all(&self) -> impl Iterator<Item = &Property> {
        self.atoms.iter().chain(self.combos.iter())
    }

    pub fn len(&self) -> usize {
        self.atoms.len() + self.combos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Arc shapes `(parent label, edge label, child label)` observed in a set of
/// dags; candidate arcs are restricted to these.
pub fn observed_arcs(dags: &[Dag]) -> BTreeSet<(NodeLabel, String, NodeLabel)> {
    let mut arcs = BTreeSet::new();
    for x in dags {
        for (f, l, t) in x.edges() {
            arcs.insert((x.label(*f).clone(), l.clone(), x.label(*t).clone()));
        }
    }
    arcs
}

pub fn generate_candidates(
    field: &FieldModel,
    sample_dags: &[Dag],
    pool: CandidatePool,
) -> CandidateSet {
    let arcs = observed_arcs(sample_dags);
    let in_field: BTreeSet<String> = field.properties().iter().map(Property::describe).collect();
    let mut seen: BTreeSet<String> = in_field.clone();

    let mut atoms = Vec::new();
    let atom_patterns: Vec<Dag> = field
        .grammar
        .symbols
        .all_labels()
        .into_iter()
        .map(Dag::single)
        .collect();
    for pat in &atom_patterns {
        for &sem in pool.modes() {
            let p = Property::new(pat.clone(), sem);
            if seen.insert(p.describe()) {
                atoms.push(p);
            }
        }
    }

    // Connect a field property with a field property or an atom by one arc.
    // The arc must target the partner's root so the result stays a rooted
    // dag, and its shape must occur in the observed language.
    let mut combos = Vec::new();
    let field_patterns: Vec<&Dag> = field.properties().iter().map(|p| &p.pattern).collect();
    let mut partner_patterns: Vec<&Dag> = field_patterns.clone();
    partner_patterns.extend(atom_patterns.iter());
    for left in &field_patterns {
        for right in &partner_patterns {
            for (host, guest) in [(*left, *right), (*right, *left)] {
                // Arc from a host node to the guest's root.
                for u in 0..host.node_count() {
                    for (from_label, edge, to_label) in &arcs {
                        if host.label(u) != from_label || guest.label(guest.root()) != to_label {
                            continue;
                        }
                        if host.out_edges(u).any(|(l, _)| l == edge.as_str()) {
                            continue;
                        }
                        let mut nodes: Vec<NodeLabel> = host.nodes().to_vec();
                        let offset = nodes.len();
                        nodes.extend(guest.nodes().iter().cloned());
                        let mut edges: Vec<(usize, String, usize)> = host.edges().to_vec();
                        edges.extend(
                            guest
                                .edges()
                                .iter()
                                .map(|(f, l, t)| (f + offset, l.clone(), t + offset)),
                        );
                        edges.push((u, edge.clone(), guest.root() + offset));
                        let Ok(pattern) = Dag::build(nodes, edges, host.root()) else {
                            continue;
                        };
                        for &sem in pool.modes() {
                            let p = Property::new(pattern.clone(), sem);
                            if seen.insert(p.describe()) {
                                combos.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    CandidateSet { atoms, combos }
}

/// One pattern per grammar rule, built from its local tree (left-hand side
/// over its right-hand-side labels with positional edges), in embeddings
/// mode. These reproduce per-rule weighting inside a field.
pub fn rule_local_tree_properties(g: &AvGrammar) -> Vec<Property> {
    g.rules
        .iter()
        .map(|r| {
            let mut nodes = vec![NodeLabel::Category(r.lhs.clone())];
            let mut edges = Vec::new();
            for (i, item) in r.rhs.iter().enumerate() {
                nodes.push(match item {
                    RhsItem::Nonterminal(nt) => NodeLabel::Category(nt.clone()),
                    RhsItem::Terminal(t) => NodeLabel::Atom(t.clone()),
                });
                edges.push((0, (i + 1).to_string(), i + 1));
            }
            Property::new(
                Dag::build(nodes, edges, 0).unwrap(),
                CountSemantics::Embeddings,
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Exact evaluation context
// ---------------------------------------------------------------------------

/// Everything candidate scoring needs, precomputed over the enumerated
/// language: current field distribution and empirical masses per dag.
pub struct ExactContext<'a> {
    pub table: &'a LanguageTable,
    /// Current field distribution q_old over the language.
    pub q_old: Vec<f64>,
    /// Empirical mass per language dag (zero off the corpus support).
    pub p_tilde: Vec<f64>,
    pub old_divergence: f64,
}

impl<'a> ExactContext<'a> {
    pub fn build(
        field: &FieldModel,
        table: &'a LanguageTable,
        corpus: &Distribution,
    ) -> Result<ExactContext<'a>, InductionError> {
        let q = field.normalize_exact(table)?;
        let mut p_tilde = vec![0.0; table.len()];
        for (x, &px) in corpus.support.iter().zip(&corpus.probs) {
            let i = table
                .position(x)
                .ok_or_else(|| InductionError::CorpusOutsideLanguage(x.canonical().to_string()))?;
            p_tilde[i] = px;
        }
        let emp = Distribution::from_probs(corpus.support.clone(), corpus.probs.clone());
        let old_divergence = kl_divergence(&emp, &q)?;
        Ok(ExactContext {
            table,
            q_old: q.probs,
            p_tilde,
            old_divergence,
        })
    }

    fn empirical_expectation(&self, counts: &[u64]) -> f64 {
        counts
            .iter()
            .zip(&self.p_tilde)
            .map(|(&f, &p)| f as f64 * p)
            .sum()
    }

    /// D(p̃ ‖ q_new) where q_new scales q_old by `beta^{f(x)}`.
    fn divergence_at(&self, counts: &[u64], beta: f64) -> f64 {
        let z: f64 = self
            .q_old
            .iter()
            .zip(counts)
            .map(|(&q, &f)| q * beta.powi(f as i32))
            .sum();
        self.q_old
            .iter()
            .zip(counts)
            .zip(&self.p_tilde)
            .filter(|(_, &p)| p > 0.0)
            .map(|((&q, &f), &p)| {
                let qn = q * beta.powi(f as i32) / z;
                p * (p / qn).ln()
            })
            .sum()
    }
}

// ---------------------------------------------------------------------------
// Initial weight (property selection)
// ---------------------------------------------------------------------------

/// A scored candidate: its optimal initial weight, the divergence the
/// extended field reaches, and the reduction relative to the old field.
#[derive(Debug, Clone)]
pub struct CandidateScore {
    pub property: Property,
    pub best_beta: f64,
    pub new_divergence: f64,
    pub score: f64,
    /// Set when the candidate is constant over the language or its target
    /// expectation sits on the boundary of the attainable range.
    pub degenerate: bool,
}

/// Solves the expectation-matching condition for a new property's weight:
/// the expectation of `f` under the reweighted field must equal its
/// empirical expectation. The left-hand side is strictly monotone in
/// `ln beta`, so bisection is exact to tolerance.
pub fn solve_initial_weight(
    ctx: &ExactContext<'_>,
    candidate: &Property,
    initial_weight_tolerance: f64,
) -> CandidateScore {
    let counts: Vec<u64> = ctx
        .table
        .dags
        .iter()
        .map(|x| count_property(candidate, x))
        .collect();
    let target = ctx.empirical_expectation(&counts);
    score_from_counts(ctx, candidate, &counts, target, initial_weight_tolerance)
}

fn score_from_counts(
    ctx: &ExactContext<'_>,
    candidate: &Property,
    counts: &[u64],
    target: f64,
    initial_weight_tolerance: f64,
) -> CandidateScore {
    let fmin = counts.iter().copied().min().unwrap_or(0);
    let fmax = counts.iter().copied().max().unwrap_or(0);
    if fmin == fmax {
        return CandidateScore {
            property: candidate.clone(),
            best_beta: 1.0,
            new_divergence: ctx.old_divergence,
            score: 0.0,
            degenerate: true,
        };
    }
    let expectation_at = |ln_beta: f64| -> f64 {
        let beta = ln_beta.exp();
        let mut num = 0.0;
        let mut den = 0.0;
        for (&q, &f) in ctx.q_old.iter().zip(counts) {
            let w = q * beta.powi(f as i32);
            num += w * f as f64;
            den += w;
        }
        num / den
    };
    let (beta, clamped) = bisect_monotone(expectation_at, target, initial_weight_tolerance);
    let beta = beta.clamp(BETA_FLOOR, BETA_CEIL);
    let new_divergence = ctx.divergence_at(counts, beta);
    CandidateScore {
        property: candidate.clone(),
        best_beta: beta,
        new_divergence,
        score: ctx.old_divergence - new_divergence,
        degenerate: clamped,
    }
}

/// Sampled-mode variant: the expectation over `q_old` is replaced by its
/// histogram estimate `q_old[f = k]`.
pub fn solve_initial_weight_sampled(
    histogram: &Histogram,
    empirical_target: f64,
    initial_weight_tolerance: f64,
) -> (f64, bool) {
    let expectation_at = |ln_beta: f64| -> f64 {
        let beta = ln_beta.exp();
        let mut num = 0.0;
        let mut den = 0.0;
        for (k, &mass) in histogram.buckets.iter().enumerate() {
            let w = mass * beta.powi(k as i32);
            num += w * k as f64;
            den += w;
        }
        num / den
    };
    let (beta, clamped) =
        bisect_monotone(expectation_at, empirical_target, initial_weight_tolerance);
    (beta.clamp(BETA_FLOOR, BETA_CEIL), clamped)
}

/// Bisection on `ln beta` over `[-LN_RANGE, LN_RANGE]` for a monotone
/// increasing function; returns the clamp flag when the target is outside
/// the attainable range.
fn bisect_monotone(eval: impl Fn(f64) -> f64, target: f64, tol: f64) -> (f64, bool) {
    let (mut lo, mut hi) = (-LN_RANGE, LN_RANGE);
    let flo = eval(lo);
    let fhi = eval(hi);
    if target <= flo {
        return (lo.exp(), true);
    }
    if target >= fhi {
        return (hi.exp(), true);
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if eval(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (0.5f64.mul_add(lo, 0.5 * hi).exp(), false)
}

/// Scores every candidate and returns the best, or `None` (the stop signal)
/// when no score clears `score_tolerance`. Near-ties are broken by node
/// count, then canonical pattern order, then counting mode.
pub fn select_property(
    ctx: &ExactContext<'_>,
    candidates: &CandidateSet,
    config: &InductionConfig,
) -> Option<CandidateScore> {
    let mut best: Option<CandidateScore> = None;
    for cand in candidates.all() {
        let scored = solve_initial_weight(ctx, cand, config.initial_weight_tolerance);
        best = Some(match best {
            None => scored,
            Some(cur) if beats(&scored, &cur) => scored,
            Some(cur) => cur,
        });
    }
    best.filter(|b| b.score > config.score_tolerance && !b.degenerate_zero())
}

/// Higher score wins; near-ties (within `SCORE_TIE`) fall through to the
/// structural preference.
fn beats(challenger: &CandidateScore, incumbent: &CandidateScore) -> bool {
    challenger.score > incumbent.score + SCORE_TIE
        || ((challenger.score - incumbent.score).abs() <= SCORE_TIE
            && prefer(&challenger.property, &incumbent.property))
}

impl CandidateScore {
    fn degenerate_zero(&self) -> bool {
        self.degenerate && self.score <= 0.0
    }
}

fn prefer(a: &Property, b: &Property) -> bool {
    let ka = (
        a.pattern.node_count(),
        a.pattern.canonical().to_string(),
        a.semantics,
    );
    let kb = (
        b.pattern.node_count(),
        b.pattern.canonical().to_string(),
        b.semantics,
    );
    ka < kb
}

// ---------------------------------------------------------------------------
// Weight readjustment (iterative scaling)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct AdjustReport {
    pub rounds: usize,
    pub converged: bool,
    pub final_divergence: f64,
    /// Divergence after every round, starting with the pre-update value.
    pub divergence_log: Vec<f64>,
    /// Properties whose weight hit the floor because their empirical
    /// expectation vanished.
    pub floored: Vec<usize>,
}

/// Iteratively rescales every property weight: each round solves, per
/// property, the total-count-damped expectation-matching equation for an
/// update factor, applies all factors simultaneously, and repeats until the
/// factors settle at 1. The divergence is non-increasing across rounds.
pub fn adjust_weights(
    field: &mut FieldModel,
    table: &LanguageTable,
    corpus: &Distribution,
    config: &InductionConfig,
) -> Result<AdjustReport, InductionError> {
    if field.properties().is_empty() {
        return Err(InductionError::NoProperties);
    }
    let counts: Vec<Vec<u64>> = table
        .dags
        .iter()
        .map(|x| {
            field
                .properties()
                .iter()
                .map(|p| count_property(p, x))
                .collect()
        })
        .collect();
    let f_total: Vec<u64> = counts.iter().map(|c| c.iter().sum()).collect();
    let mut p_tilde = vec![0.0; table.len()];
    for (x, &px) in corpus.support.iter().zip(&corpus.probs) {
        let i = table
            .position(x)
            .ok_or_else(|| InductionError::CorpusOutsideLanguage(x.canonical().to_string()))?;
        p_tilde[i] = px;
    }
    let targets: Vec<f64> = (0..field.properties().len())
        .map(|i| {
            counts
                .iter()
                .zip(&p_tilde)
                .map(|(c, &p)| c[i] as f64 * p)
                .sum()
        })
        .collect();
    let initial_p: Vec<f64> = (0..table.len())
        .map(|i| table.initial_probability(i))
        .collect();

    let mut gamma: Vec<f64> = field.beta().iter().map(Weight::value).collect();
    let mut floored = BTreeSet::new();
    let q_of = |gamma: &[f64]| -> Vec<f64> {
        let mut q: Vec<f64> = counts
            .iter()
            .zip(&initial_p)
            .map(|(c, &p0)| {
                let ln: f64 = c.iter().zip(gamma).map(|(&f, g)| f as f64 * g.ln()).sum();
                ln.exp() * p0
            })
            .collect();
        let z: f64 = q.iter().sum();
        for v in &mut q {
            *v /= z;
        }
        q
    };
    let divergence_of = |q: &[f64]| -> f64 {
        p_tilde
            .iter()
            .zip(q)
            .filter(|(&p, _)| p > 0.0)
            .map(|(&p, &qx)| p * (p / qx).ln())
            .sum()
    };

    let mut q = q_of(&gamma);
    let mut divergence = divergence_of(&q);
    let mut divergence_log = vec![divergence];
    let mut rounds = 0;
    let mut converged = false;
    while rounds < config.max_scaling_iterations {
        rounds += 1;
        let mut factors = Vec::with_capacity(gamma.len());
        for i in 0..gamma.len() {
            if targets[i] <= 0.0 {
                // No empirical mass: drive the weight to the floor.
                floored.insert(i);
                factors.push((BETA_FLOOR / gamma[i]).clamp(BETA_FLOOR / BETA_CEIL, 1.0));
                continue;
            }
            let eval = |ln_b: f64| -> f64 {
                let b = ln_b.exp();
                q.iter()
                    .zip(&counts)
                    .zip(&f_total)
                    .map(|((&qx, c), &ft)| qx * c[i] as f64 * b.powi(ft as i32))
                    .sum()
            };
            let (factor, _) =
                bisect_monotone(eval, targets[i], config.scaling_tolerance.min(1e-10));
            factors.push(factor);
        }
        match config.update_rule {
            UpdateRule::Multiplicative => {
                for (g, f) in gamma.iter_mut().zip(&factors) {
                    *g = (*g * f).clamp(BETA_FLOOR, BETA_CEIL);
                }
            }
            UpdateRule::Assign => {
                for (g, f) in gamma.iter_mut().zip(&factors) {
                    *g = f.clamp(BETA_FLOOR, BETA_CEIL);
                }
            }
        }
        let q_new = q_of(&gamma);
        let d_new = divergence_of(&q_new);
        debug_assert!(
            d_new <= divergence + 1e-10,
            "iterative scaling increased divergence: {divergence} -> {d_new}"
        );
        let max_dev = factors
            .iter()
            .map(|f| (f - 1.0).abs())
            .fold(0.0f64, f64::max);
        // Secondary exit for optima the factor criterion cannot certify:
        // the divergence has stopped moving and the factors are near 1.
        let stalled = (divergence - d_new).abs() < 1e-16 && max_dev < 1e-7;
        q = q_new;
        divergence = d_new;
        divergence_log.push(divergence);
        if max_dev < config.scaling_tolerance || stalled {
            converged = true;
            break;
        }
    }
    field.set_weights(gamma.into_iter().map(Weight::from_f64).collect());
    Ok(AdjustReport {
        rounds,
        converged,
        final_divergence: divergence,
        divergence_log,
        floored: floored.into_iter().collect(),
    })
}

/// Sampled-mode weight readjustment: the expectations in each round's
/// update equation are estimated from a fresh Metropolis-Hastings
/// mini-corpus drawn under the current weights (seed advanced per round, so
/// the whole run stays reproducible). The language table is used only to
/// report divergences, never to solve.
pub fn adjust_weights_sampled(
    field: &mut FieldModel,
    table: &LanguageTable,
    corpus: &Distribution,
    config: &InductionConfig,
) -> Result<AdjustReport, InductionError> {
    if field.properties().is_empty() {
        return Err(InductionError::NoProperties);
    }
    let n_props = field.properties().len();
    let targets: Vec<f64> = (0..n_props)
        .map(|i| {
            corpus
                .support
                .iter()
                .zip(&corpus.probs)
                .map(|(x, &p)| p * count_property(&field.properties()[i], x) as f64)
                .sum()
        })
        .collect();
    let divergence_of = |field: &FieldModel| -> f64 {
        let q = field.normalize_exact(table).expect("language enumerated");
        corpus
            .support
            .iter()
            .zip(&corpus.probs)
            .filter(|(_, &p)| p > 0.0)
            .map(|(x, &p)| p * (p / q.probability_of(x).unwrap_or(f64::MIN_POSITIVE)).ln())
            .sum()
    };

    let mut floored = BTreeSet::new();
    let mut divergence = divergence_of(field);
    let mut divergence_log = vec![divergence];
    let mut rounds = 0;
    let mut converged = false;
    while rounds < config.max_scaling_iterations {
        rounds += 1;
        let mut chain = config.chain.clone();
        chain.seed = config.chain.seed.wrapping_add(rounds as u64);
        let summary = run_chain(field, &chain)?;
        let samples = summary.sample_counts();
        let total: f64 = samples.iter().map(|(_, c)| c).sum();
        // Count matrix over the distinct sampled dags.
        let counts: Vec<Vec<u64>> = samples
            .iter()
            .map(|(x, _)| {
                field
                    .properties()
                    .iter()
                    .map(|p| count_property(p, x))
                    .collect()
            })
            .collect();
        let f_total: Vec<u64> = counts.iter().map(|c| c.iter().sum()).collect();

        let mut gamma: Vec<f64> = field.beta().iter().map(Weight::value).collect();
        let mut factors = Vec::with_capacity(n_props);
        for i in 0..n_props {
            if targets[i] <= 0.0 {
                floored.insert(i);
                factors.push((BETA_FLOOR / gamma[i]).clamp(BETA_FLOOR / BETA_CEIL, 1.0));
                continue;
            }
            let eval = |ln_b: f64| -> f64 {
                let b = ln_b.exp();
                samples
                    .iter()
                    .zip(&counts)
                    .zip(&f_total)
                    .map(|(((_, w), c), &ft)| w / total * c[i] as f64 * b.powi(ft as i32))
                    .sum()
            };
            let (factor, _) =
                bisect_monotone(eval, targets[i], config.scaling_tolerance.min(1e-10));
            factors.push(factor);
        }
        match config.update_rule {
            UpdateRule::Multiplicative => {
                for (g, f) in gamma.iter_mut().zip(&factors) {
                    *g = (*g * f).clamp(BETA_FLOOR, BETA_CEIL);
                }
            }
            UpdateRule::Assign => {
                for (g, f) in gamma.iter_mut().zip(&factors) {
                    *g = f.clamp(BETA_FLOOR, BETA_CEIL);
                }
            }
        }
        field.set_weights(gamma.into_iter().map(Weight::from_f64).collect());
        divergence = divergence_of(field);
        divergence_log.push(divergence);
        let max_dev = factors
            .iter()
            .map(|f| (f - 1.0).abs())
            .fold(0.0f64, f64::max);
        if max_dev < config.scaling_tolerance {
            converged = true;
            break;
        }
    }
    Ok(AdjustReport {
        rounds,
        converged,
        final_divergence: divergence,
        divergence_log,
        floored: floored.into_iter().collect(),
    })
}

// ---------------------------------------------------------------------------
// The induction loop
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub pattern: String,
    pub beta: f64,
    pub divergence: f64,
    pub mode: &'static str,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct InductionTrace {
    pub steps: Vec<TraceStep>,
    pub initial_divergence: f64,
    pub final_divergence: f64,
    pub converged: bool,
}

impl InductionTrace {
    /// Tab-separated rendering: step, pattern, beta, divergence, mode.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("step\tpattern\tbeta\tdivergence\tmode\n");
        for s in &self.steps {
            let _ = writeln!(
                out,
                "{}\t{}\t{:.12e}\t{:.12e}\t{}",
                s.step, s.pattern, s.beta, s.divergence, s.mode
            );
        }
        out
    }
}

/// Runs the full loop: start from the null field, repeatedly add the best
/// candidate at its optimal initial weight and readjust all weights, until
/// no candidate clears the score tolerance or the property budget is spent.
pub fn induce_field(
    grammar: &AvGrammar,
    initial: crate::scfg::CfModel,
    mode: InitialMode,
    corpus: &EmpiricalDistribution,
    config: &InductionConfig,
) -> Result<(FieldModel, InductionTrace), InductionError> {
    let mut field = FieldModel::new(grammar.clone(), initial, mode, Vec::new(), Vec::new())?;
    let table = field.language(config.max_depth)?;
    let emp = empirical_from_corpus(corpus);
    for x in &emp.support {
        if table.position(x).is_none() {
            return Err(InductionError::CorpusOutsideLanguage(
                x.canonical().to_string(),
            ));
        }
    }
    let exact = table.len() <= config.exact_threshold;
    let mode_tag = if exact { "exact" } else { "sampled" };
    let mut trace = InductionTrace::default();
    let ctx = ExactContext::build(&field, &table, &emp)?;
    trace.initial_divergence = ctx.old_divergence;
    trace.final_divergence = ctx.old_divergence;
    trace.converged = true;
    let mut divergence = ctx.old_divergence;

    for step in 1..=config.max_properties {
        let chosen = {
            let ctx = ExactContext::build(&field, &table, &emp)?;
            let candidates = generate_candidates(&field, &table.dags, config.semantics);
            if candidates.is_empty() {
                None
            } else if exact {
                select_property(&ctx, &candidates, config)
            } else {
                select_property_sampled(&field, &ctx, &candidates, &emp, config)?
            }
        };
        let Some(best) = chosen else {
            break;
        };
        field.push_property(best.property.clone(), Weight::from_f64(best.best_beta));
        let report = if exact {
            adjust_weights(&mut field, &table, &emp, config)?
        } else {
            adjust_weights_sampled(&mut field, &table, &emp, config)?
        };
        if !report.converged {
            trace.converged = false;
        }
        // Divergence must strictly decrease across accepted steps (exact
        // mode; sampled estimates may wobble within noise).
        debug_assert!(!exact || report.final_divergence < divergence + 1e-12);
        divergence = report.final_divergence;
        trace.steps.push(TraceStep {
            step,
            pattern: best.property.describe(),
            beta: best.best_beta,
            divergence,
            mode: mode_tag,
        });
        trace.final_divergence = divergence;
    }
    Ok((field, trace))
}

/// Sampled-mode property selection: expectations of candidate counts under
/// the current field are estimated from a Metropolis-Hastings mini-corpus
/// instead of the enumerated language.
fn select_property_sampled(
    field: &FieldModel,
    ctx: &ExactContext<'_>,
    candidates: &CandidateSet,
    emp: &Distribution,
    config: &InductionConfig,
) -> Result<Option<CandidateScore>, InductionError> {
    let summary = run_chain(field, &config.chain)?;
    let samples: Vec<(Dag, f64)> = summary.sample_counts();
    let mut best: Option<CandidateScore> = None;
    for cand in candidates.all() {
        let counts: Vec<u64> = samples
            .iter()
            .map(|(x, _)| count_property(cand, x))
            .collect();
        let weights: Vec<f64> = samples.iter().map(|(_, w)| *w).collect();
        let hist = Histogram::from_samples(&counts, &weights);
        let target = emp
            .support
            .iter()
            .zip(&emp.probs)
            .map(|(x, &p)| p * count_property(cand, x) as f64)
            .sum();
        let (beta, clamped) =
            solve_initial_weight_sampled(&hist, target, config.initial_weight_tolerance);
        // Divergence is still evaluated exactly on the (available) table;
        // the histogram only replaced the weight solve.
        let exact_counts: Vec<u64> = ctx
            .table
            .dags
            .iter()
            .map(|x| count_property(cand, x))
            .collect();
        let new_divergence = ctx.divergence_at(&exact_counts, beta);
        let scored = CandidateScore {
            property: cand.clone(),
            best_beta: beta,
            new_divergence,
            score: ctx.old_divergence - new_divergence,
            degenerate: clamped,
        };
        best = Some(match best {
            None => scored,
            Some(cur) if beats(&scored, &cur) => scored,
            Some(cur) => cur,
        });
    }
    Ok(best.filter(|b| b.score > config.score_tolerance && !b.degenerate_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{empirical_from_corpus, CountSemantics};
    use crate::fixtures::{av_corpus, av_grammar, cf_corpus, cf_grammar, uniformizing_weights};
    use crate::grammar::cf_analogue;
    use crate::scfg::CfModel;

    fn null_uniform_field() -> FieldModel {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        FieldModel::new(g, initial, InitialMode::Uniform, vec![], vec![]).unwrap()
    }

    fn atom(label: NodeLabel, sem: CountSemantics) -> Property {
        Property::atom(label, sem)
    }

    #[test]
    fn atoms_cover_the_symbol_table() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        let cands = generate_candidates(&field, &table.dags, CandidatePool::Presence);
        let names: BTreeSet<String> = cands
            .atoms
            .iter()
            .map(|p| p.pattern.canonical().to_string())
            .collect();
        assert_eq!(
            names,
            ["A", "B", "S", "'a'", "'b'"]
                .iter()
                .map(|s| s.to_string())
                .collect()
        );
        assert!(cands.combos.is_empty());
    }

    #[test]
    fn combos_extend_field_properties_by_one_arc() {
        let mut field = null_uniform_field();
        field.push_property(
            atom(NodeLabel::Atom("a".into()), CountSemantics::Presence),
            Weight::one(),
        );
        let table = field.language(10).unwrap();
        let cands = generate_candidates(&field, &table.dags, CandidatePool::Presence);
        let combo_names: BTreeSet<String> = cands
            .combos
            .iter()
            .map(|p| p.pattern.canonical().to_string())
            .collect();
        assert!(combo_names.contains("A[1:'a']"), "{combo_names:?}");
        assert!(combo_names.contains("B[1:'a']"));
        assert!(combo_names.contains("B[2:'a']"));
        // The already-present atom is excluded from candidates.
        assert!(cands.atoms.iter().all(|p| p.pattern.canonical() != "'a'"));
    }

    #[test]
    fn combos_only_when_arcs_exist() {
        let mut field = null_uniform_field();
        // Terminal atoms have no outgoing arcs, and no observed arc targets S.
        field.push_property(
            atom(NodeLabel::Category("S".into()), CountSemantics::Presence),
            Weight::one(),
        );
        let table = field.language(10).unwrap();
        let cands = generate_candidates(&field, &table.dags, CandidatePool::Presence);
        for c in &cands.combos {
            assert!(
                c.pattern.canonical().starts_with('S'),
                "{}",
                c.pattern.canonical()
            );
        }
    }

    #[test]
    fn initial_weight_for_atom_a_presence() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&field, &table, &emp).unwrap();
        assert!((ctx.old_divergence - 0.0283165).abs() < 5e-3);

        let a = solve_initial_weight(
            &ctx,
            &atom(NodeLabel::Atom("a".into()), CountSemantics::Presence),
            1e-10,
        );
        assert!((a.best_beta - 1.4).abs() < 1e-6, "beta = {}", a.best_beta);
        assert!((a.new_divergence - 0.0143626).abs() < 5e-3);

        let b = solve_initial_weight(
            &ctx,
            &atom(NodeLabel::Category("B".into()), CountSemantics::Presence),
            1e-10,
        );
        assert!((b.best_beta - 1.0).abs() < 1e-6);
        assert!((b.new_divergence - ctx.old_divergence).abs() < 1e-9);
    }

    #[test]
    fn already_matched_candidate_gets_weight_one() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        // An empirical distribution equal to the field itself.
        let uniform = Distribution::from_probs(table.dags.clone(), vec![0.25; 4]);
        let ctx = ExactContext::build(&field, &table, &uniform).unwrap();
        let s = solve_initial_weight(
            &ctx,
            &atom(NodeLabel::Atom("a".into()), CountSemantics::Presence),
            1e-10,
        );
        assert!((s.best_beta - 1.0).abs() < 1e-6);
        assert!(s.score.abs() < 1e-9);
    }

    #[test]
    fn selection_prefers_the_splitting_atom() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&field, &table, &emp).unwrap();
        let cands = generate_candidates(&field, &table.dags, CandidatePool::Both);
        let best =
            select_property(&ctx, &cands, &InductionConfig::default()).expect("positive score");
        assert_eq!(best.property.pattern.canonical(), "'a'");
        assert_eq!(best.property.semantics, CountSemantics::Presence);
        assert!((best.best_beta - 1.4).abs() < 1e-6);
    }

    #[test]
    fn selection_stops_when_field_matches_corpus() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        let uniform = Distribution::from_probs(table.dags.clone(), vec![0.25; 4]);
        let ctx = ExactContext::build(&field, &table, &uniform).unwrap();
        let cands = generate_candidates(&field, &table.dags, CandidatePool::Both);
        assert!(select_property(&ctx, &cands, &InductionConfig::default()).is_none());
    }

    #[test]
    fn constant_candidates_are_degenerate() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&field, &table, &emp).unwrap();
        let s = solve_initial_weight(
            &ctx,
            &atom(NodeLabel::Category("S".into()), CountSemantics::Presence),
            1e-10,
        );
        assert!(s.degenerate);
        assert_eq!(s.best_beta, 1.0);
        assert_eq!(s.score, 0.0);
    }

    #[test]
    fn score_is_never_negative() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&field, &table, &emp).unwrap();
        for cand in generate_candidates(&field, &table.dags, CandidatePool::Both).all() {
            let s = solve_initial_weight(&ctx, cand, 1e-10);
            assert!(
                s.score >= -1e-10,
                "{} scored {}",
                s.property.describe(),
                s.score
            );
        }
    }

    #[test]
    fn solved_weight_satisfies_the_expectation_condition() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&field, &table, &emp).unwrap();
        for cand in generate_candidates(&field, &table.dags, CandidatePool::Both).all() {
            let s = solve_initial_weight(&ctx, cand, 1e-10);
            if s.degenerate {
                continue;
            }
            let counts: Vec<u64> = table.dags.iter().map(|x| count_property(cand, x)).collect();
            let target: f64 = counts
                .iter()
                .zip(&ctx.p_tilde)
                .map(|(&f, &p)| f as f64 * p)
                .sum();
            let mut num = 0.0;
            let mut den = 0.0;
            for (&q, &f) in ctx.q_old.iter().zip(&counts) {
                let w = q * s.best_beta.powi(f as i32);
                num += w * f as f64;
                den += w;
            }
            assert!(
                (num / den - target).abs() < 1e-8,
                "{}",
                s.property.describe()
            );
        }
    }

    #[test]
    fn divergence_is_convex_in_log_weight() {
        let field = null_uniform_field();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&field, &table, &emp).unwrap();
        let cand = atom(NodeLabel::Atom("a".into()), CountSemantics::Presence);
        let counts: Vec<u64> = table
            .dags
            .iter()
            .map(|x| count_property(&cand, x))
            .collect();
        let scored = solve_initial_weight(&ctx, &cand, 1e-10);
        let grid: Vec<f64> = (-40..=40).map(|i| i as f64 * 0.1).collect();
        let d: Vec<f64> = grid
            .iter()
            .map(|&ln_b| ctx.divergence_at(&counts, ln_b.exp()))
            .collect();
        for w in d.windows(3) {
            assert!(w[2] - 2.0 * w[1] + w[0] >= -1e-8);
        }
        // The solver's weight must be a grid minimum within one step.
        let (gi, _) =
            d.iter().enumerate().fold(
                (0, f64::INFINITY),
                |acc, (i, &v)| {
                    if v < acc.1 {
                        (i, v)
                    } else {
                        acc
                    }
                },
            );
        assert!((grid[gi] - scored.best_beta.ln()).abs() <= 0.1 + 1e-9);
    }

    #[test]
    fn single_presence_property_closed_form() {
        // For one presence property over a uniform field the solved weight
        // has the closed form (p/(1-p)) * ((N-n)/n).
        let mut field = null_uniform_field();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&field, &table, &emp).unwrap();
        let cand = atom(NodeLabel::Atom("a".into()), CountSemantics::Presence);
        let s = solve_initial_weight(&ctx, &cand, 1e-10);
        let p = 7.0 / 12.0;
        let (n_total, n_match) = (4.0, 2.0);
        let closed = (p / (1.0 - p)) * ((n_total - n_match) / n_match);
        assert!((s.best_beta - closed).abs() < 1e-9);
        assert!((closed - 1.4).abs() < 1e-12);

        // Iterative scaling from weight 1 lands on the same value (at the
        // resolution the factor-based stop criterion can certify).
        field.push_property(cand, Weight::one());
        let report = adjust_weights(&mut field, &table, &emp, &InductionConfig::default()).unwrap();
        assert!(report.converged);
        assert!((field.beta()[0].value() - closed).abs() < 1e-7);
    }

    #[test]
    fn adjust_weights_is_a_fixpoint_at_the_optimum() {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let pattern = crate::field::Property::new(
            Dag::build(
                vec![NodeLabel::Category("A".into()), NodeLabel::Atom("a".into())],
                vec![(0, "1".into(), 1)],
                0,
            )
            .unwrap(),
            CountSemantics::Embeddings,
        );
        let mut field = FieldModel::new(
            g,
            initial,
            InitialMode::Uniform,
            vec![
                pattern,
                atom(NodeLabel::Category("B".into()), CountSemantics::Embeddings),
            ],
            vec![
                Weight::from_f64(std::f64::consts::SQRT_2),
                Weight::from_ratio(3, 2),
            ],
        )
        .unwrap();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let before: Vec<f64> = field.beta().iter().map(Weight::value).collect();
        let report = adjust_weights(&mut field, &table, &emp, &InductionConfig::default()).unwrap();
        assert!(report.converged);
        assert!(report.rounds <= 2);
        for (a, b) in field.beta().iter().zip(before) {
            assert!((a.value() - b).abs() < 1e-7);
        }
        assert!(report.final_divergence < 1e-12);
    }

    #[test]
    fn rule_tree_scaling_reaches_the_exact_optimum() {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let mut field = FieldModel::new(
            g.clone(),
            initial,
            InitialMode::Uniform,
            rule_local_tree_properties(&g),
            vec![Weight::one(); 6],
        )
        .unwrap();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let report = adjust_weights(&mut field, &table, &emp, &InductionConfig::default()).unwrap();
        assert!(
            report.final_divergence < 1e-6,
            "terminal divergence {}",
            report.final_divergence
        );
    }

    #[test]
    fn induction_fits_the_av_corpus() {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let (field, trace) = induce_field(
            &g,
            initial,
            InitialMode::Uniform,
            &av_corpus(),
            &InductionConfig::default(),
        )
        .unwrap();
        assert!(
            trace.final_divergence < 1e-4,
            "terminal divergence {}",
            trace.final_divergence
        );
        assert!(
            field.properties().len() <= 4,
            "used {} properties",
            field.properties().len()
        );
        let mut last = trace.initial_divergence;
        for s in &trace.steps {
            assert!(s.divergence < last);
            last = s.divergence;
        }
    }

    #[test]
    fn induction_on_uniform_corpus_stops_immediately() {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let table = FieldModel::new(
            g.clone(),
            initial.clone(),
            InitialMode::Uniform,
            vec![],
            vec![],
        )
        .unwrap()
        .language(10)
        .unwrap();
        let entries: Vec<_> = table
            .dags
            .iter()
            .zip(&table.derivations)
            .map(|(dag, d)| (d.clone(), dag.clone(), 1))
            .collect();
        let corpus = EmpiricalDistribution::from_entries(entries);
        let (field, trace) = induce_field(
            &g,
            initial,
            InitialMode::Uniform,
            &corpus,
            &InductionConfig::default(),
        )
        .unwrap();
        assert!(field.properties().is_empty());
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn induction_fits_the_cf_corpus_too() {
        // Even for a context-free language the field can express the
        // twin dependency the rule weights cannot.
        let g = cf_grammar();
        let initial = crate::scfg::erf_estimate(&cf_analogue(&g), &cf_corpus()).unwrap();
        // The optimum sits on the boundary (two weights drift toward zero),
        // so the scaling loop needs a longer leash than the default.
        let config = InductionConfig {
            max_properties: 16,
            max_scaling_iterations: 20_000,
            ..InductionConfig::default()
        };
        let (_, trace) =
            induce_field(&g, initial, InitialMode::Uniform, &cf_corpus(), &config).unwrap();
        assert!(
            trace.final_divergence < 1e-4,
            "terminal divergence {}",
            trace.final_divergence
        );
    }

    #[test]
    fn trace_tsv_has_one_line_per_step() {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let (_, trace) = induce_field(
            &g,
            initial,
            InitialMode::Uniform,
            &av_corpus(),
            &InductionConfig::default(),
        )
        .unwrap();
        let tsv = trace.to_tsv();
        assert_eq!(tsv.lines().count(), trace.steps.len() + 1);
        assert!(tsv.starts_with("step\tpattern\tbeta\tdivergence\tmode"));
    }

    #[test]
    fn sampled_weight_solve_agrees_with_exact() {
        // Estimate q_old[f = k] from a 50k chain and solve the same
        // expectation-matching condition; the weight must land within 0.05
        // of the exact solution for every nondegenerate atomic candidate.
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let field = FieldModel::new(g, initial, InitialMode::Scfg, vec![], vec![]).unwrap();
        let table = field.language(10).unwrap();
        let emp = empirical_from_corpus(&av_corpus());
        let ctx = ExactContext::build(&field, &table, &emp).unwrap();
        let chain = crate::mcmc::ChainConfig {
            burn_in: 2_000,
            length: 50_000,
            seed: 21,
            ..crate::mcmc::ChainConfig::default()
        };
        let summary = crate::mcmc::run_chain(&field, &chain).unwrap();
        let samples = summary.sample_counts();
        for cand in generate_candidates(&field, &table.dags, CandidatePool::Both).all() {
            let exact = solve_initial_weight(&ctx, cand, 1e-10);
            if exact.degenerate {
                continue;
            }
            let counts: Vec<u64> = samples
                .iter()
                .map(|(x, _)| count_property(cand, x))
                .collect();
            let weights: Vec<f64> = samples.iter().map(|(_, w)| *w).collect();
            let hist = Histogram::from_samples(&counts, &weights);
            assert!((hist.mass() - 1.0).abs() < 1e-9);
            let target = emp
                .support
                .iter()
                .zip(&emp.probs)
                .map(|(x, &p)| p * count_property(cand, x) as f64)
                .sum();
            let (beta, _) = solve_initial_weight_sampled(&hist, target, 1e-10);
            assert!(
                (beta - exact.best_beta).abs() < 0.05,
                "{}: sampled {beta} vs exact {}",
                cand.describe(),
                exact.best_beta
            );
        }
    }

    #[test]
    fn sampled_induction_tracks_the_corpus() {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let config = InductionConfig {
            max_properties: 4,
            exact_threshold: 0, // force the sampled machinery
            scaling_tolerance: 1e-3,
            max_scaling_iterations: 20,
            score_tolerance: 1e-3,
            chain: crate::mcmc::ChainConfig {
                burn_in: 1_000,
                length: 10_000,
                seed: 3,
                ..crate::mcmc::ChainConfig::default()
            },
            ..InductionConfig::default()
        };
        let (field, trace) =
            induce_field(&g, initial, InitialMode::Scfg, &av_corpus(), &config).unwrap();
        assert!(!field.properties().is_empty());
        assert!(
            trace.final_divergence < 5e-3,
            "sampled-mode terminal divergence {}",
            trace.final_divergence
        );
        assert!(trace.steps.iter().all(|s| s.mode == "sampled"));
    }

    #[test]
    fn corpus_outside_language_is_rejected() {
        let g = av_grammar();
        let cf = cf_grammar();
        // A mixed tree parses under the CF grammar but not the AV one.
        let corpus = EmpiricalDistribution::parse(&cf, "1 (S (A a) (A b))\n", 10).unwrap();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        let err = induce_field(
            &g,
            initial,
            InitialMode::Uniform,
            &corpus,
            &InductionConfig::default(),
        );
        assert!(matches!(err, Err(InductionError::CorpusOutsideLanguage(_))));
    }
}
