//! The small worked example used throughout the guide and the test suite: a
//! six-rule context-free grammar, its attribute-value variant whose paired
//! daughters must rewrite identically, and a twelve-tree corpus exhibiting
//! exactly that dependency.

use crate::grammar::AvGrammar;
use crate::scfg::{CfModel, EmpiricalDistribution};
use crate::weight::Weight;

/// Context-free demo grammar (six rules, six trees).
pub const CF_GRAMMAR: &str = "\
start S
rule 1: S -> A A
rule 2: S -> B
rule 3: A -> 'a'
rule 4: A -> 'b'
rule 5: B -> 'a' 'a'
rule 6: B -> 'b' 'b'
";

/// Attribute-value variant: the two A daughters share their value, so mixed
/// expansions fail unification and the language shrinks to four dags.
pub const AV_GRAMMAR: &str = "\
start S
rule 1: S -> A A | eq 1.1 = 2.1
rule 2: S -> B
rule 3: A -> 'a'
rule 4: A -> 'b'
rule 5: B -> 'a' 'a'
rule 6: B -> 'b' 'b'
";

/// Twelve trees over four types; the twin-A trees always agree, which no
/// context-free weighting can express.
pub const TWIN_CORPUS: &str = "\
4 (S (A a) (A a))
2 (S (A b) (A b))
3 (S (B a a))
3 (S (B b b))
";

pub fn cf_grammar() -> AvGrammar {
    CF_GRAMMAR.parse().expect("fixture grammar parses")
}

pub fn av_grammar() -> AvGrammar {
    AV_GRAMMAR.parse().expect("fixture grammar parses")
}

/// The demo rule weights `(1/2, 1/2, 2/3, 1/3, 1/2, 1/2)`.
pub fn demo_weights() -> Vec<Weight> {
    vec![
        Weight::from_ratio(1, 2),
        Weight::from_ratio(1, 2),
        Weight::from_ratio(2, 3),
        Weight::from_ratio(1, 3),
        Weight::from_ratio(1, 2),
        Weight::from_ratio(1, 2),
    ]
}

/// The demo model: CF backbone plus [`demo_weights`].
pub fn demo_model() -> CfModel {
    CfModel::proper(crate::grammar::cf_analogue(&cf_grammar()), demo_weights())
        .expect("proper demo model")
}

/// Rule weights making every successful dag of the AV grammar equally likely
/// after failed derivations are discarded.
pub fn uniformizing_weights() -> Vec<Weight> {
    vec![
        Weight::from_ratio(2, 3),
        Weight::from_ratio(1, 3),
        Weight::from_ratio(1, 2),
        Weight::from_ratio(1, 2),
        Weight::from_ratio(1, 2),
        Weight::from_ratio(1, 2),
    ]
}

/// The corpus read against the CF grammar (trees).
pub fn cf_corpus() -> EmpiricalDistribution {
    EmpiricalDistribution::parse(&cf_grammar(), TWIN_CORPUS, 10).expect("fixture corpus parses")
}

/// The corpus read against the AV grammar (dags).
pub fn av_corpus() -> EmpiricalDistribution {
    EmpiricalDistribution::parse(&av_grammar(), TWIN_CORPUS, 10).expect("fixture corpus parses")
}
