//! Command-line interface: estimation, induction, sampling, disambiguation
//! and reporting over the text formats (grammar files, corpus files, weight
//! files, JSON models).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::field::{empirical_from_corpus, kl_divergence, FieldError, FieldModel, InitialMode};
use crate::grammar::{cf_analogue, AvGrammar, GrammarError};
use crate::induction::{induce_field, CandidatePool, InductionConfig, InductionError};
use crate::mcmc::{run_chain, ChainConfig, McmcError};
use crate::oracle;
use crate::scfg::{
    erf_estimate, parse_weights, render_weights, CfModel, EmpiricalDistribution, ScfgError,
};
use crate::weight::Weight;

/// Exit codes: 0 success, 2 input error, 3 non-convergence, 4 no parse.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("induction did not converge: {0}")]
    NonConvergence(String),
    #[error("no parse for sentence `{0}`")]
    NoParse(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::NonConvergence(_) => 3,
            CliError::NoParse(_) => 4,
        }
    }
}

impl From<GrammarError> for CliError {
    fn from(e: GrammarError) -> Self {
        CliError::Input(e.to_string())
    }
}
impl From<ScfgError> for CliError {
    fn from(e: ScfgError) -> Self {
        CliError::Input(e.to_string())
    }
}
impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Input(e.to_string())
    }
}
impl From<McmcError> for CliError {
    fn from(e: McmcError) -> Self {
        CliError::Input(e.to_string())
    }
}
impl From<InductionError> for CliError {
    fn from(e: InductionError) -> Self {
        CliError::Input(e.to_string())
    }
}
impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "avfield",
    version,
    about = "Random-field models over attribute-value grammars"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum InitialArg {
    Uniform,
    Scfg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SemanticsArg {
    Embeddings,
    Presence,
    Both,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Grammar file.
    #[arg(long)]
    pub grammar: Option<PathBuf>,
    /// Corpus file (`<count> <bracketed tree>` per line).
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Model file (JSON).
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Random seed (printed in all outputs).
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Force exhaustive enumeration for expectations.
    #[arg(long, conflicts_with = "sampled")]
    pub exact: bool,
    /// Force chain sampling for expectations.
    #[arg(long)]
    pub sampled: bool,
    /// Initial distribution mode.
    #[arg(long, value_enum)]
    pub initial: Option<InitialArg>,
    /// Counting semantics for candidate properties.
    #[arg(long, value_enum)]
    pub semantics: Option<SemanticsArg>,
    /// Derivation depth bound (default 10; 50 for chain proposals).
    #[arg(long)]
    pub max_depth: Option<usize>,
    /// JSON config file; explicit flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl CommonArgs {
    fn depth(&self) -> usize {
        self.max_depth.unwrap_or(10)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate expected-rule-frequency weights from a corpus.
    EstimateErf {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Induce a random field: property selection plus weight scaling.
    Induce {
        #[command(flatten)]
        common: CommonArgs,
        /// Trace output path (defaults to `<out>.trace.tsv`).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Sample dags from a field model with a Metropolis-Hastings chain.
    Sample {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 200_000)]
        length: usize,
        #[arg(long, default_value_t = 5_000)]
        burn_in: usize,
        #[arg(long, default_value_t = 1)]
        thinning: usize,
    },
    /// Most probable analysis of a sentence under a model.
    Disambiguate {
        #[command(flatten)]
        common: CommonArgs,
        /// Weights file for a plain rule-weight model.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// The sentence; tokens separated by whitespace (a single unbroken
        /// token is split into known atoms).
        sentence: String,
    },
    /// Divergence report of a model against a corpus.
    Kl {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// List the language of a grammar up to the depth bound.
    Enumerate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run every estimator against its brute-force oracle and print a TSV
    /// report.
    OracleCheck {
        #[command(flatten)]
        common: CommonArgs,
    },
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::EstimateErf { common } => cmd_estimate_erf(&common),
        Command::Induce { common, trace } => cmd_induce(&common, trace.as_deref()),
        Command::Sample {
            common,
            length,
            burn_in,
            thinning,
        } => cmd_sample(&common, length, burn_in, thinning),
        Command::Disambiguate {
            common,
            weights,
            sentence,
        } => cmd_disambiguate(&common, weights.as_deref(), &sentence),
        Command::Kl { common } => cmd_kl(&common),
        Command::Enumerate { common } => cmd_enumerate(&common),
        Command::OracleCheck { common } => cmd_oracle_check(&common),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read `{}`: {e}", path.display())))
}

fn load_grammar(common: &CommonArgs) -> Result<(AvGrammar, PathBuf), CliError> {
    let path = common
        .grammar
        .as_ref()
        .ok_or_else(|| CliError::Input("missing --grammar".into()))?;
    let g: AvGrammar = read(path)?.parse()?;
    Ok((g, path.clone()))
}

fn load_corpus(common: &CommonArgs, g: &AvGrammar) -> Result<EmpiricalDistribution, CliError> {
    let path = common
        .corpus
        .as_ref()
        .ok_or_else(|| CliError::Input("missing --corpus".into()))?;
    let corpus = EmpiricalDistribution::parse(g, &read(path)?, common.depth())?;
    if corpus.entries.is_empty() {
        return Err(CliError::Input(format!(
            "corpus `{}` is empty",
            path.display()
        )));
    }
    Ok(corpus)
}

fn load_model(common: &CommonArgs) -> Result<FieldModel, CliError> {
    let path = common
        .model
        .as_ref()
        .ok_or_else(|| CliError::Input("missing --model".into()))?;
    let base = path.parent().unwrap_or(Path::new("."));
    Ok(FieldModel::from_json(&read(path)?, base)?)
}

fn write_or_print(
    out: &Option<PathBuf>,
    content: &str,
    header: &mut String,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            let _ = writeln!(header, "# wrote {}", path.display());
            Ok(())
        }
        None => {
            header.push_str(content);
            Ok(())
        }
    }
}

fn cmd_estimate_erf(common: &CommonArgs) -> Result<String, CliError> {
    let (g, _) = load_grammar(common)?;
    let corpus = load_corpus(common, &g)?;
    let skeleton = cf_analogue(&g);
    let model = erf_estimate(&skeleton, &corpus)?;
    let mut out = format!("# seed {}\n", common.seed);
    let weights_text = render_weights(&model);

    // Divergence of the raw per-rule product weights (context-free style).
    let p_tilde = empirical_from_corpus(&corpus);
    let raw_probs: Vec<f64> = corpus
        .entries
        .iter()
        .map(|e| model.tree_probability(&e.derivation))
        .collect();
    let d_raw: f64 = p_tilde
        .probs
        .iter()
        .zip(&raw_probs)
        .map(|(&p, &q)| if p > 0.0 { p * (p / q).ln() } else { 0.0 })
        .sum();

    // Divergence after normalizing the same weights over the language.
    let field = FieldModel::new(
        g.clone(),
        model.clone(),
        InitialMode::Uniform,
        crate::induction::rule_local_tree_properties(&g),
        model.theta().to_vec(),
    )?;
    let table = field.language(common.depth())?;
    let q = field.normalize_exact(&table)?;
    let d_normalized = kl_divergence(&p_tilde, &q)?;

    write_or_print(&common.out, &weights_text, &mut out)?;
    let _ = writeln!(out, "# divergence raw-products {d_raw:.6}");
    let _ = writeln!(
        out,
        "# divergence normalized {d_normalized:.6} (Z = {:.12})",
        q.z
    );
    Ok(out)
}

fn induction_config(common: &CommonArgs) -> Result<InductionConfig, CliError> {
    let mut config: InductionConfig = match &common.config {
        Some(path) => serde_json::from_str(&read(path)?)
            .map_err(|e| CliError::Input(format!("bad config `{}`: {e}", path.display())))?,
        None => InductionConfig::default(),
    };
    config.max_depth = common.depth();
    config.chain.seed = common.seed;
    if let Some(sem) = common.semantics {
        config.semantics = match sem {
            SemanticsArg::Embeddings => CandidatePool::Embeddings,
            SemanticsArg::Presence => CandidatePool::Presence,
            SemanticsArg::Both => CandidatePool::Both,
        };
    }
    if common.exact {
        config.exact_threshold = usize::MAX;
    }
    if common.sampled {
        config.exact_threshold = 0;
    }
    Ok(config)
}

fn cmd_induce(common: &CommonArgs, trace_path: Option<&Path>) -> Result<String, CliError> {
    let (g, grammar_path) = load_grammar(common)?;
    let corpus = load_corpus(common, &g)?;
    let config = induction_config(common)?;
    let mode = match common.initial.unwrap_or(InitialArg::Uniform) {
        InitialArg::Uniform => InitialMode::Uniform,
        InitialArg::Scfg => InitialMode::Scfg,
    };
    let initial = erf_estimate(&cf_analogue(&g), &corpus)?;
    let (field, trace) = induce_field(&g, initial, mode, &corpus, &config)?;

    let model_json = field.to_json(&grammar_path);
    let mut out = format!("# seed {}\n", common.seed);
    write_or_print(&common.out, &model_json, &mut out)?;
    let trace_tsv = trace.to_tsv();
    let trace_path = trace_path.map(PathBuf::from).or_else(|| {
        common.out.as_ref().map(|p| {
            let mut t = p.as_os_str().to_owned();
            t.push(".trace.tsv");
            PathBuf::from(t)
        })
    });
    if let Some(tp) = trace_path {
        std::fs::write(&tp, &trace_tsv)?;
        let _ = writeln!(out, "# wrote {}", tp.display());
    } else {
        out.push_str(&trace_tsv);
    }
    let _ = writeln!(
        out,
        "# divergence {:.6e} with {} properties",
        trace.final_divergence,
        field.properties().len()
    );
    if !trace.converged {
        return Err(CliError::NonConvergence(format!(
            "weight scaling hit the iteration cap; partial model {}",
            common
                .out
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_else(|| "printed above".into())
        )));
    }
    Ok(out)
}

fn cmd_sample(
    common: &CommonArgs,
    length: usize,
    burn_in: usize,
    thinning: usize,
) -> Result<String, CliError> {
    let model = load_model(common)?;
    let config = ChainConfig {
        burn_in,
        length,
        thinning,
        seed: common.seed,
        max_depth: common.max_depth.unwrap_or(ChainConfig::default().max_depth),
        ..ChainConfig::default()
    };
    let summary = run_chain(&model, &config)?;
    let mut corpus_text = String::new();
    // Enumerate at least as deep as the proposals so every retained dag can
    // be rendered back as a tree.
    let table = model.language(config.max_depth)?;
    for (dag, count) in summary.sample_counts() {
        let idx = table.position(&dag).ok_or_else(|| {
            CliError::Input(format!(
                "sampled dag `{dag}` is deeper than the enumeration bound; raise --max-depth"
            ))
        })?;
        let _ = writeln!(
            corpus_text,
            "{} {}",
            count as u64,
            table.derivations[idx].bracketed(&model.grammar)
        );
    }
    let mut out = format!("# seed {}\n", common.seed);
    write_or_print(&common.out, &corpus_text, &mut out)?;
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&summary).expect("summary serializes")
    );
    Ok(out)
}

fn split_sentence(g: &AvGrammar, sentence: &str) -> Vec<String> {
    let tokens: Vec<&str> = sentence.split_whitespace().collect();
    if tokens.len() == 1 && !g.symbols.terminals.contains(tokens[0]) {
        // Convenience: split an unbroken token into known atoms.
        let mut out = Vec::new();
        let mut rest = tokens[0];
        'outer: while !rest.is_empty() {
            for len in (1..=rest.len()).rev() {
                if g.symbols.terminals.contains(&rest[..len]) {
                    out.push(rest[..len].to_string());
                    rest = &rest[len..];
                    continue 'outer;
                }
            }
            return vec![tokens[0].to_string()];
        }
        return out;
    }
    tokens.into_iter().map(str::to_string).collect()
}

fn cmd_disambiguate(
    common: &CommonArgs,
    weights: Option<&Path>,
    sentence: &str,
) -> Result<String, CliError> {
    let model = if let Some(wpath) = weights {
        let (g, _) = load_grammar(common)?;
        let skeleton = cf_analogue(&g);
        let theta: Vec<Weight> = parse_weights(&skeleton, &read(wpath)?)?;
        let initial = CfModel::proper(skeleton, theta)?;
        FieldModel::new(g, initial, InitialMode::Scfg, vec![], vec![])?
    } else {
        load_model(common)?
    };
    let tokens = split_sentence(&model.grammar, sentence);
    let token_refs: Vec<&str> = tokens.iter().map(String::as_str).collect();
    let parses = crate::grammar::parse_dags(&model.grammar, &token_refs, common.depth());
    if parses.is_empty() {
        return Err(CliError::NoParse(sentence.to_string()));
    }
    let table = model.language(common.depth())?;
    // Rank by unnormalized field probability; the normalizer cancels in
    // comparisons so it is never computed.
    let mut best: Option<(f64, &crate::grammar::Dag, &crate::grammar::Derivation)> = None;
    for (dag, deriv) in &parses {
        let score = model.unnormalized(dag, &table)?;
        let better = match &best {
            None => true,
            Some((b, bd, _)) => {
                score > *b + 1e-15
                    || ((score - *b).abs() <= 1e-15 && dag.canonical() < bd.canonical())
            }
        };
        if better {
            best = Some((score, dag, deriv));
        }
    }
    let (score, dag, deriv) = best.expect("nonempty parses");
    let mut out = format!("# seed {}\n", common.seed);
    let _ = writeln!(out, "{}", deriv.bracketed(&model.grammar));
    let _ = writeln!(out, "# dag {dag}");
    let _ = writeln!(out, "# unnormalized-weight {score:.12e}");
    let _ = writeln!(out, "# parses {}", parses.len());
    Ok(out)
}

fn cmd_kl(common: &CommonArgs) -> Result<String, CliError> {
    let model = load_model(common)?;
    let corpus = load_corpus(common, &model.grammar)?;
    let p_tilde = empirical_from_corpus(&corpus);
    let table = model.language(common.depth())?;
    let q = model.normalize_exact(&table)?;
    let mut out = format!("# seed {}\ndag\tq\tp\tratio\tcontribution\n", common.seed);
    for (x, &px) in p_tilde.support.iter().zip(&p_tilde.probs) {
        let qx = q.probability_of(x).unwrap_or(0.0);
        let (ratio, contrib) = if qx > 0.0 {
            (qx / px, px * (px / qx).ln())
        } else {
            (0.0, f64::INFINITY)
        };
        let _ = writeln!(out, "{x}\t{qx:.6}\t{px:.6}\t{ratio:.3}\t{contrib:.6}");
    }
    match kl_divergence(&p_tilde, &q) {
        Ok(d) => {
            let _ = writeln!(out, "total\t\t\t\t{d:.6}");
        }
        Err(FieldError::DivergenceInfinite(dag)) => {
            let _ = writeln!(out, "total\t\t\t\tinf (no model mass at {dag})");
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

fn cmd_enumerate(common: &CommonArgs) -> Result<String, CliError> {
    let (g, _) = load_grammar(common)?;
    let e = crate::grammar::enumerate_language(&g, common.depth());
    let mut out = format!("# seed {}\n", common.seed);
    for (dag, deriv) in &e.items {
        let _ = writeln!(
            out,
            "{}\t{}\t{}",
            dag,
            deriv.bracketed(&g),
            deriv.terminal_yield().join(" ")
        );
    }
    let _ = writeln!(out, "# dags {}", e.items.len());
    let _ = writeln!(out, "# truncated {}", e.truncated);
    let mut header = String::new();
    write_or_print(&common.out, &out, &mut header)?;
    Ok(if header.is_empty() { out } else { header })
}

fn cmd_oracle_check(common: &CommonArgs) -> Result<String, CliError> {
    let reports = standard_oracle_reports(common.seed)?;
    let text = oracle::render_reports(&reports);
    let mut out = format!("# seed {}\n", common.seed);
    write_or_print(&common.out, &text, &mut out)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    let _ = writeln!(out, "# {} checks, {} failed", reports.len(), failed);
    if failed > 0 {
        return Err(CliError::Input(format!("{failed} oracle checks failed")));
    }
    Ok(out)
}

/// The standard cross-check table over the built-in worked example: every
/// estimator in the crate against its brute-force oracle.
pub fn standard_oracle_reports(seed: u64) -> Result<Vec<oracle::OracleReport>, CliError> {
    use crate::field::{CountSemantics, Property};
    use crate::fixtures;
    use crate::grammar::NodeLabel;
    use crate::induction::{rule_local_tree_properties, solve_initial_weight, ExactContext};

    let mut reports = Vec::new();
    let cf = fixtures::cf_grammar();
    let av = fixtures::av_grammar();
    let cf_corpus = fixtures::cf_corpus();
    let av_corpus = fixtures::av_corpus();
    let demo = fixtures::demo_model();

    // Tree probability, double-computed.
    let twin = crate::grammar::derivation_from_bracketed(&cf, "(S (A a) (A a))")?;
    reports.push(oracle::OracleReport::compare(
        "tree-probability/twin-a",
        2.0 / 9.0,
        demo.tree_probability(&twin),
        1e-12,
    ));

    // Disambiguation subject vs oracle.
    let parses: Vec<crate::grammar::Derivation> = crate::grammar::parse_dags(&cf, &["a", "a"], 10)
        .into_iter()
        .map(|(_, d)| d)
        .collect();
    let subject_idx = parses
        .iter()
        .position(|d| d == crate::scfg::disambiguate(&demo, &parses))
        .unwrap();
    let oracle_idx = oracle::brute_force_disambiguation(&demo, &parses);
    reports.push(oracle::OracleReport::compare(
        "disambiguation/aa-index",
        oracle_idx as f64,
        subject_idx as f64,
        0.0,
    ));

    // ERF weights against hand normalization.
    let est = erf_estimate(&cf_analogue(&cf), &cf_corpus)?;
    for (i, expected) in [(1, 0.5), (3, 2.0 / 3.0), (5, 0.5)] {
        reports.push(oracle::OracleReport::compare(
            &format!("erf-weight/rule-{i}"),
            expected,
            est.weight(i).value(),
            1e-12,
        ));
    }

    // Divergence of the demo weights on the CF corpus, subject vs oracle.
    let p_tilde = empirical_from_corpus(&cf_corpus);
    let q_probs: Vec<f64> = cf_corpus
        .entries
        .iter()
        .map(|e| demo.tree_probability(&e.derivation))
        .collect();
    let d_oracle = oracle::brute_force_kl(&p_tilde.probs, &q_probs);
    reports.push(oracle::OracleReport::compare(
        "kl/cf-demo-weights",
        0.31826,
        d_oracle,
        5e-3,
    ));

    // Normalized field over the AV language at the same weights.
    let erf_field = FieldModel::new(
        av.clone(),
        est.clone(),
        InitialMode::Uniform,
        rule_local_tree_properties(&av),
        est.theta().to_vec(),
    )?;
    let table = erf_field.language(10)?;
    let q = erf_field.normalize_exact(&table)?;
    let z_oracle = oracle::brute_force_normalizer(&erf_field, &table);
    reports.push(oracle::OracleReport::compare(
        "z/erf-field",
        z_oracle,
        q.z,
        1e-14,
    ));
    reports.push(oracle::OracleReport::compare(
        "z/erf-field-value",
        7.0 / 9.0,
        q.z,
        1e-14,
    ));
    let brute = oracle::brute_force_distribution(&erf_field, &table);
    let max_err = q
        .probs
        .iter()
        .zip(&brute)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    reports.push(oracle::OracleReport::compare(
        "distribution/erf-field-max-err",
        0.0,
        max_err,
        1e-14,
    ));
    let emp_av = empirical_from_corpus(&av_corpus);
    let d_norm = kl_divergence(&emp_av, &q).map_err(|e| CliError::Input(e.to_string()))?;
    reports.push(oracle::OracleReport::compare(
        "kl/erf-field-normalized",
        0.0669,
        d_norm,
        5e-3,
    ));

    // Initial-weight solver vs grid search on the two atomic candidates.
    let uniform_initial = CfModel::proper(cf_analogue(&av), fixtures::uniformizing_weights())?;
    let null = FieldModel::new(
        av.clone(),
        uniform_initial.clone(),
        InitialMode::Uniform,
        vec![],
        vec![],
    )?;
    let null_table = null.language(10)?;
    let ctx = ExactContext::build(&null, &null_table, &emp_av)
        .map_err(|e| CliError::Input(e.to_string()))?;
    for (name, label) in [
        ("atom-a", NodeLabel::Atom("a".into())),
        ("atom-B", NodeLabel::Category("B".into())),
    ] {
        let cand = Property::atom(label, CountSemantics::Presence);
        let bisect = solve_initial_weight(&ctx, &cand, 1e-10).best_beta;
        let grid = oracle::grid_search_best_weight(&ctx, &cand);
        reports.push(oracle::OracleReport::compare(
            &format!("weight-solve/{name}"),
            grid,
            bisect,
            1e-6,
        ));
    }

    // Chain expectations vs exact enumeration (seeded).
    let pattern = Property::new(
        crate::grammar::Dag::build(
            vec![NodeLabel::Category("A".into()), NodeLabel::Atom("a".into())],
            vec![(0, "1".into(), 1)],
            0,
        )
        .map_err(|e| CliError::Input(e.to_string()))?,
        CountSemantics::Embeddings,
    );
    let marker = Property::atom(NodeLabel::Category("B".into()), CountSemantics::Embeddings);
    let chain_field = FieldModel::new(
        av.clone(),
        uniform_initial,
        InitialMode::Scfg,
        vec![pattern.clone(), marker.clone()],
        vec![
            Weight::from_f64(std::f64::consts::SQRT_2),
            Weight::from_ratio(3, 2),
        ],
    )?;
    let chain_table = chain_field.language(10)?;
    let config = ChainConfig {
        burn_in: 2_000,
        length: 50_000,
        seed,
        ..ChainConfig::default()
    };
    let summary = run_chain(&chain_field, &config)?;
    let e1_exact = oracle::exact_expectation(&chain_field, &chain_table, |x| {
        crate::field::count_property(&pattern, x) as f64
    });
    let e2_exact = oracle::exact_expectation(&chain_field, &chain_table, |x| {
        crate::field::count_property(&marker, x) as f64
    });
    reports.push(oracle::OracleReport::compare(
        "chain/expectation-shared",
        e1_exact,
        summary.expectations[0],
        0.02,
    ));
    reports.push(oracle::OracleReport::compare(
        "chain/expectation-flat",
        e2_exact,
        summary.expectations[1],
        0.02,
    ));

    // Kernel diagnostics, subject vs oracle.
    let subject_balance = crate::mcmc::detailed_balance_check(&chain_field, &chain_table)?;
    let oracle_kernel = oracle::exhaustive_kernel(&chain_field, &chain_table);
    reports.push(oracle::OracleReport::compare(
        "kernel/balance-violation",
        oracle_kernel.max_balance_violation,
        subject_balance.max_balance_violation,
        1e-12,
    ));
    reports.push(oracle::OracleReport::compare(
        "kernel/stationarity-residual",
        oracle_kernel.max_stationarity_residual,
        subject_balance.max_stationarity_residual,
        1e-12,
    ));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_reports_are_green() {
        let reports = standard_oracle_reports(17).unwrap();
        for r in &reports {
            assert!(
                r.pass,
                "{} failed: oracle {} subject {}",
                r.quantity, r.oracle, r.subject
            );
        }
        assert!(reports.len() >= 12);
    }

    #[test]
    fn sentence_splitting() {
        let g = crate::fixtures::cf_grammar();
        assert_eq!(
            split_sentence(&g, "a a"),
            vec!["a".to_string(), "a".to_string()]
        );
        assert_eq!(
            split_sentence(&g, "aa"),
            vec!["a".to_string(), "a".to_string()]
        );
        assert_eq!(
            split_sentence(&g, "ab"),
            vec!["a".to_string(), "b".to_string()]
        );
        assert_eq!(split_sentence(&g, "zz"), vec!["zz".to_string()]);
    }
}
