//! Random-field models over the dag language of a grammar: a dag's
//! unnormalized weight is the product of property weights raised to property
//! counts, times an initial distribution, and the normalizer is a sum over
//! the language.

use std::path::{Path, PathBuf};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grammar::{enumerate_language, AvGrammar, Dag, Derivation, GrammarError, NodeLabel};
use crate::scfg::{CfModel, EmpiricalDistribution, ScfgError};
use crate::weight::Weight;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("dag is not in the enumerated language: {0}")]
    NotInLanguage(String),
    #[error("normalization needs a nonempty language")]
    EmptyLanguage,
    #[error("distribution support mismatch: `{0}` carries empirical mass but no model mass")]
    DivergenceInfinite(String),
    #[error("model has {properties} properties but {weights} weights")]
    WeightCount { properties: usize, weights: usize },
    #[error("property weights must be positive, got {0}")]
    NonPositiveWeight(f64),
    #[error("model file: {0}")]
    ModelFile(String),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    #[error(transparent)]
    Scfg(#[from] ScfgError),
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

/// How occurrences of a pattern are counted in a dag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountSemantics {
    /// Number of injective label- and edge-label-preserving maps.
    Embeddings,
    /// One if at least one embedding exists, else zero.
    Presence,
}

/// A labelled subdag pattern with a counting mode.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Property {
    pub pattern: Dag,
    pub semantics: CountSemantics,
}

impl Property {
    pub fn new(pattern: Dag, semantics: CountSemantics) -> Property {
        // Rooted dags are connected; the constructor enforces the rest.
        Property { pattern, semantics }
    }

    pub fn atom(label: NodeLabel, semantics: CountSemantics) -> Property {
        Property::new(Dag::single(label), semantics)
    }

    /// `<semantics-tag><canonical pattern>`, used in traces and summaries.
    pub fn describe(&self) -> String {
        let tag = match self.semantics {
            CountSemantics::Embeddings => "#",
            CountSemantics::Presence => "?",
        };
        format!("{tag}{}", self.pattern.canonical())
    }
}

/// Counts occurrences of the property's pattern in `x`: the number of
/// distinct injective maps from pattern nodes to dag nodes preserving node
/// labels and labelled edges (presence mode collapses that to 0/1).
pub fn count_property(p: &Property, x: &Dag) -> u64 {
    let pat = &p.pattern;
    let n = pat.node_count();
    // Matching order: start at the pattern root, then any node adjacent to an
    // already-placed one (patterns are connected, so this covers all nodes).
    let mut order: Vec<usize> = vec![pat.root()];
    let mut placed = vec![false; n];
    placed[pat.root()] = true;
    while order.len() < n {
        let next = (0..n)
            .find(|&v| {
                !placed[v]
                    && pat
                        .edges()
                        .iter()
                        .any(|(f, _, t)| (*f == v && placed[*t]) || (*t == v && placed[*f]))
            })
            .expect("pattern is connected");
        placed[next] = true;
        order.push(next);
    }

    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; x.node_count()];
    let mut count = 0u64;
    backtrack(p, x, &order, 0, &mut assignment, &mut used, &mut count);
    match p.semantics {
        CountSemantics::Embeddings => count,
        CountSemantics::Presence => count.min(1),
    }
}

fn backtrack(
    p: &Property,
    x: &Dag,
    order: &[usize],
    step: usize,
    assignment: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    count: &mut u64,
) {
    if step == order.len() {
        *count += 1;
        return;
    }
    if p.semantics == CountSemantics::Presence && *count > 0 {
        return;
    }
    let v = order[step];
    let pat = &p.pattern;
    // Candidate dag nodes, constrained by one already-placed neighbour when
    // possible, otherwise every node (only happens for the root).
    let candidates: Vec<usize> = {
        let mut anchored: Option<Vec<usize>> = None;
        for (f, l, t) in pat.edges() {
            if *t == v {
                if let Some(img) = assignment[*f] {
                    anchored = Some(x.child(img, l).into_iter().collect());
                    break;
                }
            }
            if *f == v {
                if let Some(img) = assignment[*t] {
                    anchored = Some(
                        x.in_edges(img)
                            .filter(|(_, xl)| *xl == l.as_str())
                            .map(|(xf, _)| xf)
                            .collect(),
                    );
                    break;
                }
            }
        }
        anchored.unwrap_or_else(|| (0..x.node_count()).collect())
    };
    'cand: for c in candidates {
        if used[c] || x.label(c) != pat.label(v) {
            continue;
        }
        // Every pattern edge with both endpoints placed must exist in x.
        for (f, l, t) in pat.edges() {
            let (fi, ti) = (
                if *f == v { Some(c) } else { assignment[*f] },
                if *t == v { Some(c) } else { assignment[*t] },
            );
            if let (Some(fi), Some(ti)) = (fi, ti) {
                if x.child(fi, l) != Some(ti) {
                    continue 'cand;
                }
            }
        }
        assignment[v] = Some(c);
        used[c] = true;
        backtrack(p, x, order, step + 1, assignment, used, count);
        assignment[v] = None;
        used[c] = false;
    }
}

// ---------------------------------------------------------------------------
// Field models
// ---------------------------------------------------------------------------

/// Where the field's initial distribution `p` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InitialMode {
    /// `p` is constant over the (finite) language; the unnormalized weight
    /// of a dag is just its field weight.
    Uniform,
    /// `p` is the context-free analogue's derivation distribution with
    /// failed derivations discarded and the remainder renormalized.
    Scfg,
}

/// Initial distribution, properties and weights over a grammar's language.
#[derive(Debug)]
pub struct FieldModel {
    pub grammar: AvGrammar,
    pub initial: CfModel,
    pub mode: InitialMode,
    properties: Vec<Property>,
    beta: Vec<Weight>,
    version: u64,
    z_cache: RwLock<Option<ZCacheEntry>>,
    // Per-dag log field weights, keyed by canonical string; valid for the
    // version stored alongside.
    f_cache: RwLock<(u64, std::collections::BTreeMap<String, f64>)>,
}

#[derive(Debug, Clone)]
struct ZCacheEntry {
    version: u64,
    language_key: u64,
    z: f64,
    z_exact: Option<BigRational>,
}

impl Clone for FieldModel {
    fn clone(&self) -> Self {
        FieldModel {
            grammar: self.grammar.clone(),
            initial: self.initial.clone(),
            mode: self.mode,
            properties: self.properties.clone(),
            beta: self.beta.clone(),
            version: self.version,
            z_cache: RwLock::new(self.z_cache.read().unwrap().clone()),
            f_cache: RwLock::new(self.f_cache.read().unwrap().clone()),
        }
    }
}

impl FieldModel {
    pub fn new(
        grammar: AvGrammar,
        initial: CfModel,
        mode: InitialMode,
        properties: Vec<Property>,
        beta: Vec<Weight>,
    ) -> Result<FieldModel, FieldError> {
        if properties.len() != beta.len() {
            return Err(FieldError::WeightCount {
                properties: properties.len(),
                weights: beta.len(),
            });
        }
        for b in &beta {
            if b.value() <= 0.0 {
                return Err(FieldError::NonPositiveWeight(b.value()));
            }
        }
        Ok(FieldModel {
            grammar,
            initial,
            mode,
            properties,
            beta,
            version: 0,
            z_cache: RwLock::new(None),
            f_cache: RwLock::new((0, std::collections::BTreeMap::new())),
        })
    }

    /// The field with no properties over a uniform initial distribution.
    pub fn null_field(grammar: AvGrammar, initial: CfModel) -> FieldModel {
        FieldModel::new(
            grammar,
            initial,
            InitialMode::Uniform,
            Vec::new(),
            Vec::new(),
        )
        .unwrap()
    }

    pub fn properties(&self) -> &[Property] {
        &self.properties
    }

    pub fn beta(&self) -> &[Weight] {
        &self.beta
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    fn bump(&mut self) {
        self.version += 1;
        *self.z_cache.write().unwrap() = None;
        *self.f_cache.write().unwrap() = (self.version, std::collections::BTreeMap::new());
    }

    pub fn push_property(&mut self, property: Property, weight: Weight) {
        assert!(weight.value() > 0.0, "property weights must be positive");
        self.properties.push(property);
        self.beta.push(weight);
        self.bump();
    }

    pub fn set_weight(&mut self, index: usize, weight: Weight) {
        assert!(weight.value() > 0.0, "property weights must be positive");
        self.beta[index] = weight;
        self.bump();
    }

    pub fn set_weights(&mut self, beta: Vec<Weight>) {
        assert_eq!(beta.len(), self.properties.len());
        assert!(beta.iter().all(|b| b.value() > 0.0));
        self.beta = beta;
        self.bump();
    }

    /// Property count vector `f(x)`.
    pub fn counts(&self, x: &Dag) -> Vec<u64> {
        self.properties
            .iter()
            .map(|p| count_property(p, x))
            .collect()
    }

    /// Field weight `F(x)`: the product of property weights raised to
    /// property counts. The empty product is 1.
    pub fn field_weight(&self, x: &Dag) -> f64 {
        self.field_log_weight(x).exp()
    }

    pub fn field_log_weight(&self, x: &Dag) -> f64 {
        {
            let guard = self.f_cache.read().unwrap();
            if guard.0 == self.version {
                if let Some(&ln) = guard.1.get(x.canonical()) {
                    return ln;
                }
            }
        }
        let ln: f64 = self
            .properties
            .iter()
            .zip(&self.beta)
            .map(|(p, b)| count_property(p, x) as f64 * b.ln())
            .sum();
        let mut guard = self.f_cache.write().unwrap();
        if guard.0 != self.version {
            *guard = (self.version, std::collections::BTreeMap::new());
        }
        guard.1.insert(x.canonical().to_string(), ln);
        ln
    }

    pub fn field_weight_exact(&self, x: &Dag) -> Option<BigRational> {
        let mut acc = BigRational::one();
        for (p, b) in self.properties.iter().zip(&self.beta) {
            acc *= b.pow(count_property(p, x)).exact()?;
        }
        Some(acc)
    }

    /// Enumerates the language and the per-dag initial weights.
    pub fn language(&self, max_depth: usize) -> Result<LanguageTable, FieldError> {
        LanguageTable::build(self, max_depth)
    }

    /// Unnormalized weight of `x`: `F(x) * p(x)` with `p` the (renormalized)
    /// initial distribution, or just `F(x)` in uniform mode.
    pub fn unnormalized(&self, x: &Dag, table: &LanguageTable) -> Result<f64, FieldError> {
        let idx = table
            .position(x)
            .ok_or_else(|| FieldError::NotInLanguage(x.canonical().to_string()))?;
        Ok(self.field_weight(x) * table.initial_probability(idx))
    }

    /// Exact distribution over the full language, with the normalizer
    /// cached against the model version and the language it was summed over.
    pub fn normalize_exact(&self, table: &LanguageTable) -> Result<Distribution, FieldError> {
        if table.dags.is_empty() {
            return Err(FieldError::EmptyLanguage);
        }
        let weights: Vec<f64> = table
            .dags
            .iter()
            .enumerate()
            .map(|(i, x)| self.field_weight(x) * table.initial_probability(i))
            .collect();
        let exact: Option<Vec<BigRational>> = table
            .dags
            .iter()
            .enumerate()
            .map(|(i, x)| {
                self.field_weight_exact(x)
                    .zip(table.initial_probability_exact(i))
                    .map(|(f, p)| f * p)
            })
            .collect();
        let cached = self
            .z_cache
            .read()
            .unwrap()
            .as_ref()
            .filter(|e| e.version == self.version && e.language_key == table.key)
            .map(|e| (e.z, e.z_exact.clone()));
        let (z, z_exact) = match cached {
            Some(hit) => hit,
            None => {
                let z: f64 = weights.iter().sum();
                let z_exact = exact
                    .as_ref()
                    .map(|v| v.iter().fold(BigRational::zero(), |a, b| a + b));
                *self.z_cache.write().unwrap() = Some(ZCacheEntry {
                    version: self.version,
                    language_key: table.key,
                    z,
                    z_exact: z_exact.clone(),
                });
                (z, z_exact)
            }
        };
        Ok(Distribution {
            support: table.dags.clone(),
            probs: weights.iter().map(|w| w / z).collect(),
            exact: exact.map(|v| {
                let z = z_exact.unwrap();
                v.into_iter().map(|w| w / &z).collect()
            }),
            z,
        })
    }

    /// The cached normalizer, if one matching the current version exists.
    pub fn cached_z(&self) -> Option<(f64, Option<BigRational>)> {
        let guard = self.z_cache.read().unwrap();
        guard
            .as_ref()
            .filter(|e| e.version == self.version)
            .map(|e| (e.z, e.z_exact.clone()))
    }
}

/// The enumerated language plus everything the initial distribution needs:
/// per-dag derivation weights and the mass lost to unification failures.
#[derive(Debug, Clone)]
pub struct LanguageTable {
    pub dags: Vec<Dag>,
    pub derivations: Vec<Derivation>,
    /// Initial probability per dag (renormalized over successes).
    p: Vec<f64>,
    p_exact: Option<Vec<BigRational>>,
    pub truncated: bool,
    key: u64,
}

impl LanguageTable {
    fn build(m: &FieldModel, max_depth: usize) -> Result<LanguageTable, FieldError> {
        let e = enumerate_language(&m.grammar, max_depth);
        if e.items.is_empty() {
            return Err(FieldError::EmptyLanguage);
        }
        let dags: Vec<Dag> = e.items.iter().map(|(d, _)| d.clone()).collect();
        let derivations: Vec<Derivation> = e.items.iter().map(|(_, d)| d.clone()).collect();
        let (p, p_exact) = match m.mode {
            InitialMode::Uniform => {
                // Constant initial factor 1: the field weight alone drives
                // the distribution, and normalization absorbs the constant.
                let p = vec![1.0; dags.len()];
                let exact = Some(vec![BigRational::one(); dags.len()]);
                (p, exact)
            }
            InitialMode::Scfg => {
                // Sum derivation weights per dag, renormalize over successes.
                let mut per_dag = vec![0.0f64; dags.len()];
                let mut per_dag_exact: Option<Vec<BigRational>> =
                    Some(vec![BigRational::zero(); dags.len()]);
                for (deriv, dag) in &e.derivations {
                    let i = dags.iter().position(|d| d == dag).expect("dag indexed");
                    per_dag[i] += m.initial.tree_probability(deriv);
                    per_dag_exact = match (per_dag_exact, m.initial.tree_probability_exact(deriv)) {
                        (Some(mut v), Some(q)) => {
                            v[i] += q;
                            Some(v)
                        }
                        _ => None,
                    };
                }
                let total: f64 = per_dag.iter().sum();
                let p: Vec<f64> = per_dag.iter().map(|w| w / total).collect();
                let p_exact = per_dag_exact.map(|v| {
                    let t = v.iter().fold(BigRational::zero(), |a, b| a + b);
                    v.into_iter().map(|w| w / &t).collect()
                });
                (p, p_exact)
            }
        };
        let mut hasher = std::hash::DefaultHasher::new();
        use std::hash::{Hash, Hasher};
        for d in &dags {
            d.canonical().hash(&mut hasher);
        }
        Ok(LanguageTable {
            dags,
            derivations,
            p,
            p_exact,
            truncated: e.truncated,
            key: hasher.finish(),
        })
    }

    pub fn position(&self, dag: &Dag) -> Option<usize> {
        self.dags.iter().position(|d| d == dag)
    }

    pub fn initial_probability(&self, i: usize) -> f64 {
        self.p[i]
    }

    pub fn initial_probability_exact(&self, i: usize) -> Option<BigRational> {
        self.p_exact.as_ref().map(|v| v[i].clone())
    }

    pub fn len(&self) -> usize {
        self.dags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dags.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Distributions and divergence
// ---------------------------------------------------------------------------

/// A probability distribution over a deduplicated dag support.
#[derive(Debug, Clone)]
pub struct Distribution {
    pub support: Vec<Dag>,
    pub probs: Vec<f64>,
    pub exact: Option<Vec<BigRational>>,
    /// Normalizer the probabilities were produced with (1 when built
    /// directly from relative frequencies).
    pub z: f64,
}

impl Distribution {
    pub fn from_probs(support: Vec<Dag>, probs: Vec<f64>) -> Distribution {
        let total: f64 = probs.iter().sum();
        assert!((total - 1.0).abs() < 1e-9, "probabilities sum to {total}");
        Distribution {
            support,
            probs,
            exact: None,
            z: 1.0,
        }
    }

    pub fn probability_of(&self, dag: &Dag) -> Option<f64> {
        self.support
            .iter()
            .position(|d| d == dag)
            .map(|i| self.probs[i])
    }

    pub fn exact_of(&self, dag: &Dag) -> Option<&BigRational> {
        let i = self.support.iter().position(|d| d == dag)?;
        self.exact.as_ref().map(|v| &v[i])
    }

    /// Expectation of `f` under this distribution.
    pub fn expectation(&self, f: impl Fn(&Dag) -> f64) -> f64 {
        self.support
            .iter()
            .zip(&self.probs)
            .map(|(x, p)| p * f(x))
            .sum()
    }

    /// L1 distance against another distribution over any support.
    pub fn l1_distance(&self, other: &Distribution) -> f64 {
        let mut keys: Vec<&Dag> = self.support.iter().chain(other.support.iter()).collect();
        keys.sort();
        keys.dedup();
        keys.iter()
            .map(|k| {
                (self.probability_of(k).unwrap_or(0.0) - other.probability_of(k).unwrap_or(0.0))
                    .abs()
            })
            .sum()
    }
}

/// Kullback-Leibler divergence `D(p̃ ‖ q)` in nats. Terms with zero
/// empirical mass contribute nothing; zero model mass at a supported point
/// is reported as an error carrying the offending dag.
pub fn kl_divergence(p_tilde: &Distribution, q: &Distribution) -> Result<f64, FieldError> {
    let mut d = 0.0;
    for (x, &px) in p_tilde.support.iter().zip(&p_tilde.probs) {
        if px == 0.0 {
            continue;
        }
        let qx = q.probability_of(x).unwrap_or(0.0);
        if qx <= 0.0 {
            return Err(FieldError::DivergenceInfinite(x.canonical().to_string()));
        }
        d += px * (px / qx).ln();
    }
    Ok(d.max(-1e-12))
}

/// The empirical distribution of a corpus, merged by dag equality.
pub fn empirical_from_corpus(corpus: &EmpiricalDistribution) -> Distribution {
    let support: Vec<Dag> = corpus.entries.iter().map(|e| e.dag.clone()).collect();
    let probs: Vec<f64> = (0..corpus.entries.len())
        .map(|i| corpus.probability(i))
        .collect();
    let exact: Vec<BigRational> = (0..corpus.entries.len())
        .map(|i| corpus.probability_exact(i))
        .collect();
    Distribution {
        support,
        probs,
        exact: Some(exact),
        z: 1.0,
    }
}

// ---------------------------------------------------------------------------
// Model files
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct PatternFile {
    nodes: Vec<String>,
    edges: Vec<(usize, String, usize)>,
    semantics: CountSemantics,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct ZCacheFile {
    z: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    z_exact: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct FieldModelFile {
    grammar: PathBuf,
    initial_mode: InitialMode,
    theta: Vec<Weight>,
    properties: Vec<PatternFile>,
    beta: Vec<Weight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z_cache: Option<ZCacheFile>,
}

fn node_label_to_text(l: &NodeLabel) -> String {
    l.to_string()
}

fn node_label_from_text(s: &str) -> NodeLabel {
    match s.strip_prefix('\'').and_then(|r| r.strip_suffix('\'')) {
        Some(atom) => NodeLabel::Atom(atom.to_string()),
        None => NodeLabel::Category(s.to_string()),
    }
}

impl FieldModel {
    /// Serializes to the JSON model format; the grammar itself stays in its
    /// own file, referenced by path.
    pub fn to_json(&self, grammar_path: &Path) -> String {
        let file = FieldModelFile {
            grammar: grammar_path.to_path_buf(),
            initial_mode: self.mode,
            theta: self.initial.theta().to_vec(),
            properties: self
                .properties
                .iter()
                .map(|p| PatternFile {
                    nodes: p.pattern.nodes().iter().map(node_label_to_text).collect(),
                    edges: p.pattern.edges().to_vec(),
                    semantics: p.semantics,
                })
                .collect(),
            beta: self.beta.clone(),
            z_cache: self.cached_z().map(|(z, ze)| ZCacheFile {
                z,
                z_exact: ze.map(|q| format!("{}/{}", q.numer(), q.denom())),
            }),
        };
        serde_json::to_string_pretty(&file).expect("model serializes")
    }

    /// Loads a model file; the grammar path resolves relative to `base_dir`.
    pub fn from_json(text: &str, base_dir: &Path) -> Result<FieldModel, FieldError> {
        let file: FieldModelFile =
            serde_json::from_str(text).map_err(|e| FieldError::ModelFile(e.to_string()))?;
        let grammar_path = if file.grammar.is_absolute() {
            file.grammar.clone()
        } else {
            base_dir.join(&file.grammar)
        };
        let grammar_text = std::fs::read_to_string(&grammar_path).map_err(|e| {
            FieldError::ModelFile(format!(
                "cannot read grammar `{}`: {e}",
                grammar_path.display()
            ))
        })?;
        let grammar: AvGrammar = grammar_text.parse()?;
        let initial = CfModel::proper(crate::grammar::cf_analogue(&grammar), file.theta)?;
        let properties: Vec<Property> = file
            .properties
            .into_iter()
            .map(|p| {
                let nodes: Vec<NodeLabel> =
                    p.nodes.iter().map(|s| node_label_from_text(s)).collect();
                Dag::build(nodes, p.edges, 0)
                    .map(|pattern| Property::new(pattern, p.semantics))
                    .map_err(FieldError::from)
            })
            .collect::<Result<_, _>>()?;
        FieldModel::new(grammar, initial, file.initial_mode, properties, file.beta)
    }
}

/// `q(x)` as exact rationals when the weights allow; used by tests that pin
/// fraction-valued results.
pub fn exact_probabilities(dist: &Distribution) -> Option<&[BigRational]> {
    dist.exact.as_deref()
}

/// Exact rational from small integers, for pinned expectations.
pub fn big_ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{av_corpus, av_grammar, demo_model, demo_weights, uniformizing_weights};
    use crate::grammar::cf_analogue;
    use crate::scfg::CfModel;
    use proptest::prelude::*;

    fn pattern_a_under_a() -> Dag {
        Dag::build(
            vec![NodeLabel::Category("A".into()), NodeLabel::Atom("a".into())],
            vec![(0, "1".into(), 1)],
            0,
        )
        .unwrap()
    }

    fn uniform_field(properties: Vec<Property>, beta: Vec<Weight>) -> FieldModel {
        let g = av_grammar();
        let initial = CfModel::proper(cf_analogue(&g), uniformizing_weights()).unwrap();
        FieldModel::new(g, initial, InitialMode::Uniform, properties, beta).unwrap()
    }

    /// The two-property field matching the corpus exactly.
    fn matched_field() -> FieldModel {
        uniform_field(
            vec![
                Property::new(pattern_a_under_a(), CountSemantics::Embeddings),
                Property::atom(NodeLabel::Category("B".into()), CountSemantics::Embeddings),
            ],
            vec![
                Weight::from_f64(std::f64::consts::SQRT_2),
                Weight::from_ratio(3, 2),
            ],
        )
    }

    #[test]
    fn pattern_counts_on_the_four_dags() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        let counts: Vec<Vec<u64>> = table.dags.iter().map(|x| m.counts(x)).collect();
        assert_eq!(counts, vec![vec![2, 0], vec![0, 0], vec![0, 1], vec![0, 1]]);
    }

    #[test]
    fn presence_is_capped_embedding_count() {
        let g = av_grammar();
        let table = FieldModel::null_field(g, demo_model())
            .language(10)
            .unwrap();
        let atom_a = |sem| Property::atom(NodeLabel::Atom("a".into()), sem);
        let flat_a = &table.dags[2];
        assert_eq!(
            count_property(&atom_a(CountSemantics::Embeddings), flat_a),
            2
        );
        assert_eq!(count_property(&atom_a(CountSemantics::Presence), flat_a), 1);
    }

    #[test]
    fn root_presence_pattern_matches_every_dag() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        let p = Property::atom(NodeLabel::Category("S".into()), CountSemantics::Presence);
        for x in &table.dags {
            assert_eq!(count_property(&p, x), 1);
        }
    }

    #[test]
    fn field_weights_match_hand_values() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        let f: Vec<f64> = table.dags.iter().map(|x| m.field_weight(x)).collect();
        assert!((f[0] - 2.0).abs() < 1e-12);
        assert!((f[1] - 1.0).abs() < 1e-12);
        assert!((f[2] - 1.5).abs() < 1e-12);
        assert!((f[3] - 1.5).abs() < 1e-12);
    }

    #[test]
    fn null_field_weight_is_one_everywhere() {
        let g = av_grammar();
        let m = FieldModel::null_field(g, demo_model());
        let table = m.language(10).unwrap();
        for x in &table.dags {
            assert_eq!(m.field_weight(x), 1.0);
        }
        let dist = m.normalize_exact(&table).unwrap();
        assert_eq!(dist.z, 4.0);
        for p in &dist.probs {
            assert!((p - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn erf_field_normalizes_to_the_known_fractions() {
        let m = uniform_field(demo_rule_properties(), demo_weights());
        let table = m.language(10).unwrap();
        let dist = m.normalize_exact(&table).unwrap();
        assert!((dist.z - 7.0 / 9.0).abs() < 1e-15);
        let exact = dist.exact.as_ref().unwrap();
        assert_eq!(exact[0], big_ratio(2, 7));
        assert_eq!(exact[1], big_ratio(1, 14));
        assert_eq!(exact[2], big_ratio(9, 28));
        assert_eq!(exact[3], big_ratio(9, 28));
        let (z, z_exact) = m.cached_z().unwrap();
        assert_eq!(z, dist.z);
        assert_eq!(z_exact.unwrap(), big_ratio(7, 9));
    }

    /// One pattern per rule's local tree, embeddings counting.
    fn demo_rule_properties() -> Vec<Property> {
        crate::induction::rule_local_tree_properties(&av_grammar())
    }

    #[test]
    fn matched_field_reproduces_the_corpus_distribution() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        let dist = m.normalize_exact(&table).unwrap();
        assert!((dist.z - 6.0).abs() < 1e-12);
        let expected = [1.0 / 3.0, 1.0 / 6.0, 0.25, 0.25];
        for (p, e) in dist.probs.iter().zip(expected) {
            assert!((p - e).abs() < 1e-12);
        }
    }

    #[test]
    fn unnormalized_faults_outside_the_language() {
        let m = matched_field();
        let table = m.language(10).unwrap();
        let foreign = Dag::single(NodeLabel::Atom("z".into()));
        assert!(matches!(
            m.unnormalized(&foreign, &table),
            Err(FieldError::NotInLanguage(_))
        ));
        assert!((m.unnormalized(&table.dags[0], &table).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn kl_divergence_known_values() {
        let corpus = av_corpus();
        let p_tilde = empirical_from_corpus(&corpus);
        // Model distribution from the demo weights, normalized over the
        // four dags.
        let m = uniform_field(demo_rule_properties(), demo_weights());
        let table = m.language(10).unwrap();
        let q = m.normalize_exact(&table).unwrap();
        let d = kl_divergence(&p_tilde, &q).unwrap();
        assert!((d - 0.0669426).abs() < 5e-3, "D = {d}");
        // Self-divergence is zero.
        assert_eq!(kl_divergence(&p_tilde, &p_tilde).unwrap(), 0.0);
    }

    #[test]
    fn kl_divergence_reports_offending_dag_on_zero_mass() {
        let corpus = av_corpus();
        let p_tilde = empirical_from_corpus(&corpus);
        let mut q = p_tilde.clone();
        q.probs[0] = 0.0;
        q.probs[1] += p_tilde.probs[0];
        q.exact = None;
        let err = kl_divergence(&p_tilde, &q).unwrap_err();
        assert!(matches!(err, FieldError::DivergenceInfinite(_)));
    }

    #[test]
    fn empirical_from_corpus_matches_counts() {
        let corpus = av_corpus();
        let d = empirical_from_corpus(&corpus);
        assert_eq!(d.probs.len(), 4);
        assert_eq!(d.exact.as_ref().unwrap()[0], big_ratio(1, 3));
        assert_eq!(d.exact.as_ref().unwrap()[1], big_ratio(1, 6));
        // Point mass corpus.
        let g = av_grammar();
        let single = EmpiricalDistribution::parse(&g, "5 (S (B a a))\n", 10).unwrap();
        let d = empirical_from_corpus(&single);
        assert_eq!(d.probs, vec![1.0]);
    }

    #[test]
    fn model_json_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let gpath = dir.path().join("twins_av.grammar");
        std::fs::write(&gpath, crate::fixtures::AV_GRAMMAR).unwrap();
        let m = matched_field();
        let table = m.language(10).unwrap();
        let _ = m.normalize_exact(&table).unwrap();
        let json = m.to_json(Path::new("twins_av.grammar"));
        let back = FieldModel::from_json(&json, dir.path()).unwrap();
        assert_eq!(back.properties(), m.properties());
        assert_eq!(back.mode, m.mode);
        let back_dist = back.normalize_exact(&back.language(10).unwrap()).unwrap();
        assert!((back_dist.z - 6.0).abs() < 1e-12);
    }

    #[test]
    fn empty_language_is_a_fault() {
        let g: crate::grammar::AvGrammar = "start S\nrule 1: S -> S\n".parse().unwrap();
        let initial =
            CfModel::proper(crate::grammar::cf_analogue(&g), vec![Weight::one()]).unwrap();
        let m = FieldModel::null_field(g, initial);
        assert!(matches!(m.language(5), Err(FieldError::EmptyLanguage)));
    }

    #[test]
    fn scfg_mode_renormalizes_over_successes() {
        let g = av_grammar();
        let m = FieldModel::new(g, demo_model(), InitialMode::Scfg, vec![], vec![]).unwrap();
        let table = m.language(10).unwrap();
        // Derivation weights (2/9, 1/18, 1/4, 1/4) renormalized by 7/9.
        let expected = [
            big_ratio(2, 7),
            big_ratio(1, 14),
            big_ratio(9, 28),
            big_ratio(9, 28),
        ];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(table.initial_probability_exact(i).unwrap(), *e);
        }
        let dist = m.normalize_exact(&table).unwrap();
        for (p, e) in dist.exact.as_ref().unwrap().iter().zip(&expected) {
            assert_eq!(p, e);
        }
    }

    proptest! {
        /// Scaling one weight multiplies each unnormalized value by
        /// `c^{f_i(x)}` exactly (up to float rounding in the log domain).
        #[test]
        fn beta_scaling_acts_through_counts(c in 0.25f64..4.0, idx in 0usize..2) {
            let mut m = matched_field();
            let table = m.language(10).unwrap();
            let before: Vec<f64> = table.dags.iter().map(|x| m.field_weight(x)).collect();
            let counts: Vec<u64> = table.dags.iter().map(|x| count_property(&m.properties()[idx], x)).collect();
            let old = m.beta()[idx].clone();
            m.set_weight(idx, Weight::from_f64(old.value() * c));
            for ((x, b), f) in table.dags.iter().zip(before).zip(counts) {
                let expected = b * c.powi(f as i32);
                let got = m.field_weight(x);
                prop_assert!((got - expected).abs() <= 1e-9 * expected.max(1.0));
            }
        }

        /// KL divergence is nonnegative and zero only at equality.
        #[test]
        fn kl_nonnegative(a in 1u32..50, b in 1u32..50, c in 1u32..50, d in 1u32..50) {
            let corpus = av_corpus();
            let p = empirical_from_corpus(&corpus);
            let total = (a + b + c + d) as f64;
            let q = Distribution::from_probs(
                p.support.clone(),
                vec![a as f64 / total, b as f64 / total, c as f64 / total, d as f64 / total],
            );
            let div = kl_divergence(&p, &q).unwrap();
            prop_assert!(div >= -1e-12);
            let same = p.probs.iter().zip(&q.probs).all(|(x, y)| (x - y).abs() < 1e-12);
            if div.abs() < 1e-12 {
                prop_assert!(same);
            }
            if same {
                prop_assert!(div.abs() < 1e-12);
            }
        }

        /// Presence equals the capped embedding count on arbitrary language
        /// dags and atom patterns.
        #[test]
        fn presence_caps_embeddings(label_idx in 0usize..5) {
            let g = av_grammar();
            let labels = g.symbols.all_labels();
            let label = labels[label_idx].clone();
            let table = FieldModel::null_field(g, demo_model()).language(10).unwrap();
            for x in &table.dags {
                let e = count_property(&Property::atom(label.clone(), CountSemantics::Embeddings), x);
                let p = count_property(&Property::atom(label.clone(), CountSemantics::Presence), x);
                prop_assert_eq!(p, e.min(1));
            }
        }
    }
}
