//! Attribute-value grammars: a context-free backbone whose rules may carry
//! path equations forcing two positions of a local tree to denote the same
//! node. Derivations therefore map to rooted dags rather than trees, and a
//! derivation whose equations clash is a unification failure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GrammarError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error("line {line}: {msg}")]
    Corpus { line: usize, msg: String },
}

/// Node payload: grammar category or terminal atom. The two namespaces are
/// disjoint, so matching compares both kind and name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeLabel {
    Category(String),
    Atom(String),
}

impl NodeLabel {
    pub fn name(&self) -> &str {
        match self {
            NodeLabel::Category(s) | NodeLabel::Atom(s) => s,
        }
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeLabel::Category(s) => write!(f, "{s}"),
            NodeLabel::Atom(s) => write!(f, "'{s}'"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    pub nonterminals: BTreeSet<String>,
    pub terminals: BTreeSet<String>,
    pub start: String,
}

impl SymbolTable {
    fn validate(&self) -> Result<(), GrammarError> {
        if !self.nonterminals.contains(&self.start) {
            return Err(GrammarError::Invalid(format!(
                "start symbol `{}` has no rule",
                self.start
            )));
        }
        if let Some(shared) = self.nonterminals.intersection(&self.terminals).next() {
            return Err(GrammarError::Invalid(format!(
                "label `{shared}` used both as category and atom"
            )));
        }
        if self
            .nonterminals
            .iter()
            .chain(self.terminals.iter())
            .any(|s| s.is_empty())
        {
            return Err(GrammarError::Invalid("empty label".into()));
        }
        Ok(())
    }

    /// Every category and atom label, categories first, in sorted order.
    pub fn all_labels(&self) -> Vec<NodeLabel> {
        self.nonterminals
            .iter()
            .map(|s| NodeLabel::Category(s.clone()))
            .chain(self.terminals.iter().map(|s| NodeLabel::Atom(s.clone())))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RhsItem {
    Nonterminal(String),
    Terminal(String),
}

impl RhsItem {
    pub fn label(&self) -> NodeLabel {
        match self {
            RhsItem::Nonterminal(s) => NodeLabel::Category(s.clone()),
            RhsItem::Terminal(s) => NodeLabel::Atom(s.clone()),
        }
    }
}

/// One side of a path equation: a 1-based rhs slot plus a (possibly empty)
/// sequence of edge labels descending from that slot's node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SlotPath {
    pub slot: usize,
    pub path: Vec<String>,
}

impl fmt::Display for SlotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.slot)?;
        for p in &self.path {
            write!(f, ".{p}")?;
        }
        Ok(())
    }
}

/// A path equation in canonical (sorted) form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathEq {
    pub left: SlotPath,
    pub right: SlotPath,
}

impl PathEq {
    pub fn new(a: SlotPath, b: SlotPath) -> Self {
        if a <= b {
            PathEq { left: a, right: b }
        } else {
            PathEq { left: b, right: a }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvRule {
    pub id: usize,
    pub lhs: String,
    pub rhs: Vec<RhsItem>,
    pub constraints: Vec<PathEq>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvGrammar {
    pub symbols: SymbolTable,
    pub rules: Vec<AvRule>,
}

/// The context-free backbone: same rules, constraints stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfRule {
    pub id: usize,
    pub lhs: String,
    pub rhs: Vec<RhsItem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfSkeleton {
    pub start: String,
    pub rules: Vec<CfRule>,
}

impl CfSkeleton {
    pub fn rules_for<'a>(&'a self, lhs: &'a str) -> impl Iterator<Item = &'a CfRule> + 'a {
        self.rules.iter().filter(move |r| r.lhs == lhs)
    }
}

/// Drops every path equation, keeping ids, left-hand sides and arities.
pub fn cf_analogue(g: &AvGrammar) -> CfSkeleton {
    CfSkeleton {
        start: g.symbols.start.clone(),
        rules: g
            .rules
            .iter()
            .map(|r| CfRule {
                id: r.id,
                lhs: r.lhs.clone(),
                rhs: r.rhs.clone(),
            })
            .collect(),
    }
}

impl AvGrammar {
    pub fn validate(&self) -> Result<(), GrammarError> {
        self.symbols.validate()?;
        for (i, r) in self.rules.iter().enumerate() {
            if r.id != i + 1 {
                return Err(GrammarError::Invalid(format!(
                    "rule ids must be contiguous from 1; found id {} at position {}",
                    r.id,
                    i + 1
                )));
            }
            for c in &r.constraints {
                for side in [&c.left, &c.right] {
                    if side.slot == 0 || side.slot > r.rhs.len() {
                        return Err(GrammarError::Invalid(format!(
                            "rule {}: constraint names slot {} but rhs has {} items",
                            r.id,
                            side.slot,
                            r.rhs.len()
                        )));
                    }
                }
            }
        }
        for nt in &self.symbols.nonterminals {
            if !self.rules.iter().any(|r| &r.lhs == nt) {
                return Err(GrammarError::Invalid(format!(
                    "category `{nt}` has no rule"
                )));
            }
        }
        Ok(())
    }

    pub fn rule(&self, id: usize) -> &AvRule {
        &self.rules[id - 1]
    }

    pub fn rules_for<'a>(&'a self, lhs: &'a str) -> impl Iterator<Item = &'a AvRule> + 'a {
        self.rules.iter().filter(move |r| r.lhs == lhs)
    }
}

// ---------------------------------------------------------------------------
// Grammar text format
// ---------------------------------------------------------------------------

impl FromStr for AvGrammar {
    type Err = GrammarError;

    /// Line-based format, `#` starts a comment:
    ///
    /// ```text
    /// start S
    /// rule 1: S -> A A | eq 1.1 = 2.1
    /// rule 3: A -> 'a'
    /// ```
    fn from_str(text: &str) -> Result<Self, GrammarError> {
        let mut start: Option<String> = None;
        let mut rules: Vec<AvRule> = Vec::new();
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
            if let Some(rest) = line.strip_prefix("start") {
                let s = rest.trim();
                if s.is_empty() {
                    return Err(GrammarError::Syntax {
                        line: line_no,
                        msg: "missing start symbol".into(),
                    });
                }
                start = Some(s.to_string());
                continue;
            }
            let rest = line
                .strip_prefix("rule")
                .ok_or_else(|| GrammarError::Syntax {
                    line: line_no,
                    msg: "expected `start ...` or `rule ...`".into(),
                })?;
            let (id_part, body) = rest.split_once(':').ok_or_else(|| GrammarError::Syntax {
                line: line_no,
                msg: "missing `:` after rule id".into(),
            })?;
            let id: usize = id_part.trim().parse().map_err(|_| GrammarError::Syntax {
                line: line_no,
                msg: format!("bad rule id `{}`", id_part.trim()),
            })?;
            let mut parts = body.split('|');
            let production = parts.next().unwrap();
            let (lhs, rhs_text) =
                production
                    .split_once("->")
                    .ok_or_else(|| GrammarError::Syntax {
                        line: line_no,
                        msg: "missing `->`".into(),
                    })?;
            let lhs = lhs.trim().to_string();
            if lhs.is_empty() {
                return Err(GrammarError::Syntax {
                    line: line_no,
                    msg: "empty left-hand side".into(),
                });
            }
            let mut rhs = Vec::new();
            for tok in rhs_text.split_whitespace() {
                if let Some(atom) = tok.strip_prefix('\'') {
                    let atom = atom
                        .strip_suffix('\'')
                        .ok_or_else(|| GrammarError::Syntax {
                            line: line_no,
                            msg: format!("unterminated atom `{tok}`"),
                        })?;
                    rhs.push(RhsItem::Terminal(atom.to_string()));
                } else {
                    rhs.push(RhsItem::Nonterminal(tok.to_string()));
                }
            }
            if rhs.is_empty() {
                return Err(GrammarError::Syntax {
                    line: line_no,
                    msg: "empty right-hand side".into(),
                });
            }
            let mut constraints = Vec::new();
            for clause in parts {
                let clause = clause.trim();
                let eq = clause
                    .strip_prefix("eq")
                    .ok_or_else(|| GrammarError::Syntax {
                        line: line_no,
                        msg: format!("expected `eq <path> = <path>`, got `{clause}`"),
                    })?;
                let (a, b) = eq.split_once('=').ok_or_else(|| GrammarError::Syntax {
                    line: line_no,
                    msg: "missing `=` in path equation".into(),
                })?;
                let parse_side =
                    |s: &str| -> Result<SlotPath, GrammarError> {
                        let mut segs = s.trim().split('.');
                        let slot: usize = segs.next().unwrap().trim().parse().map_err(|_| {
                            GrammarError::Syntax {
                                line: line_no,
                                msg: format!("bad slot in `{s}`"),
                            }
                        })?;
                        Ok(SlotPath {
                            slot,
                            path: segs.map(|p| p.trim().to_string()).collect(),
                        })
                    };
                constraints.push(PathEq::new(parse_side(a)?, parse_side(b)?));
            }
            constraints.sort();
            constraints.dedup();
            rules.push(AvRule {
                id,
                lhs,
                rhs,
                constraints,
            });
        }
        rules.sort_by_key(|r| r.id);
        let mut nonterminals = BTreeSet::new();
        let mut terminals = BTreeSet::new();
        for r in &rules {
            nonterminals.insert(r.lhs.clone());
            for item in &r.rhs {
                if let RhsItem::Terminal(t) = item {
                    terminals.insert(t.clone());
                }
            }
        }
        let start = match start {
            Some(s) => s,
            None => rules
                .first()
                .map(|r| r.lhs.clone())
                .ok_or_else(|| GrammarError::Invalid("no rules".into()))?,
        };
        let g = AvGrammar {
            symbols: SymbolTable {
                nonterminals,
                terminals,
                start,
            },
            rules,
        };
        for r in &g.rules {
            for item in &r.rhs {
                if let RhsItem::Nonterminal(nt) = item {
                    if !g.symbols.nonterminals.contains(nt) {
                        return Err(GrammarError::Invalid(format!(
                            "rule {}: category `{nt}` has no rule (quote it if it is an atom)",
                            r.id
                        )));
                    }
                }
            }
        }
        g.validate()?;
        Ok(g)
    }
}

impl fmt::Display for AvGrammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start {}", self.symbols.start)?;
        for r in &self.rules {
            write!(f, "rule {}: {} ->", r.id, r.lhs)?;
            for item in &r.rhs {
                match item {
                    RhsItem::Nonterminal(nt) => write!(f, " {nt}")?,
                    RhsItem::Terminal(t) => write!(f, " '{t}'")?,
                }
            }
            for c in &r.constraints {
                write!(f, " | eq {} = {}", c.left, c.right)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Derivations
// ---------------------------------------------------------------------------

/// A derivation tree: rule applications with terminal leaves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Derivation {
    Apply {
        rule: usize,
        children: Vec<Derivation>,
    },
    Leaf(String),
}

impl Derivation {
    pub fn apply(rule: usize, children: Vec<Derivation>) -> Self {
        Derivation::Apply { rule, children }
    }

    pub fn leaf(atom: &str) -> Self {
        Derivation::Leaf(atom.to_string())
    }

    /// Preorder sequence of rule ids.
    pub fn rule_sequence(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_rules(&mut out);
        out
    }

    fn collect_rules(&self, out: &mut Vec<usize>) {
        if let Derivation::Apply { rule, children } = self {
            out.push(*rule);
            for c in children {
                c.collect_rules(out);
            }
        }
    }

    /// Left-to-right terminal yield.
    pub fn terminal_yield(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_yield(&mut out);
        out
    }

    fn collect_yield(&self, out: &mut Vec<String>) {
        match self {
            Derivation::Leaf(a) => out.push(a.clone()),
            Derivation::Apply { children, .. } => {
                for c in children {
                    c.collect_yield(out);
                }
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Derivation::Leaf(_) => 0,
            Derivation::Apply { children, .. } => {
                1 + children.iter().map(Derivation::depth).max().unwrap_or(0)
            }
        }
    }

    /// Checks arities and categories against the grammar backbone.
    pub fn well_formed(&self, g: &AvGrammar) -> bool {
        match self {
            Derivation::Leaf(_) => true,
            Derivation::Apply { rule, children } => {
                let Some(r) = g.rules.get(rule.wrapping_sub(1)) else {
                    return false;
                };
                if r.rhs.len() != children.len() {
                    return false;
                }
                r.rhs
                    .iter()
                    .zip(children)
                    .all(|(item, child)| match (item, child) {
                        (RhsItem::Terminal(t), Derivation::Leaf(a)) => t == a,
                        (RhsItem::Nonterminal(nt), Derivation::Apply { rule, .. }) => g
                            .rules
                            .get(rule.wrapping_sub(1))
                            .is_some_and(|cr| &cr.lhs == nt),
                        _ => false,
                    })
                    && children.iter().all(|c| c.well_formed(g))
            }
        }
    }

    /// Bracketed rendering, e.g. `(S (A a) (A a))`.
    pub fn bracketed(&self, g: &AvGrammar) -> String {
        match self {
            Derivation::Leaf(a) => a.clone(),
            Derivation::Apply { rule, children } => {
                let mut s = format!("({}", g.rule(*rule).lhs);
                for c in children {
                    s.push(' ');
                    s.push_str(&c.bracketed(g));
                }
                s.push(')');
                s
            }
        }
    }
}

/// Reads a bracketed tree like `(S (A a) (A a))` back into a derivation,
/// resolving each local tree to the unique rule with that shape.
pub fn derivation_from_bracketed(g: &AvGrammar, text: &str) -> Result<Derivation, GrammarError> {
    let tokens = tokenize_bracketed(text)?;
    let (deriv, rest) = parse_bracketed(g, &tokens, 0, Some(&g.symbols.start))?;
    if rest != tokens.len() {
        return Err(GrammarError::Invalid(format!(
            "trailing input in tree `{text}`"
        )));
    }
    Ok(deriv)
}

#[derive(Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Word(String),
}

fn tokenize_bracketed(text: &str) -> Result<Vec<Tok>, GrammarError> {
    let mut toks = Vec::new();
    let mut word = String::new();
    for ch in text.chars() {
        match ch {
            '(' | ')' | ' ' | '\t' => {
                if !word.is_empty() {
                    toks.push(Tok::Word(std::mem::take(&mut word)));
                }
                match ch {
                    '(' => toks.push(Tok::Open),
                    ')' => toks.push(Tok::Close),
                    _ => {}
                }
            }
            _ => word.push(ch),
        }
    }
    if !word.is_empty() {
        toks.push(Tok::Word(word));
    }
    Ok(toks)
}

fn parse_bracketed(
    g: &AvGrammar,
    toks: &[Tok],
    pos: usize,
    expect: Option<&str>,
) -> Result<(Derivation, usize), GrammarError> {
    match toks.get(pos) {
        Some(Tok::Word(w)) => {
            if !g.symbols.terminals.contains(w) {
                return Err(GrammarError::Invalid(format!("unknown atom `{w}`")));
            }
            Ok((Derivation::Leaf(w.clone()), pos + 1))
        }
        Some(Tok::Open) => {
            let Some(Tok::Word(cat)) = toks.get(pos + 1) else {
                return Err(GrammarError::Invalid("expected category after `(`".into()));
            };
            if let Some(e) = expect {
                if e != cat {
                    return Err(GrammarError::Invalid(format!(
                        "expected category `{e}`, found `{cat}`"
                    )));
                }
            }
            let mut children = Vec::new();
            let mut p = pos + 2;
            while !matches!(toks.get(p), Some(Tok::Close)) {
                if toks.get(p).is_none() {
                    return Err(GrammarError::Invalid("unbalanced `(`".into()));
                }
                let (child, np) = parse_bracketed(g, toks, p, None)?;
                children.push(child);
                p = np;
            }
            // Resolve the rule from the local shape.
            let shape: Vec<NodeLabel> = children
                .iter()
                .map(|c| match c {
                    Derivation::Leaf(a) => NodeLabel::Atom(a.clone()),
                    Derivation::Apply { rule, .. } => {
                        NodeLabel::Category(g.rule(*rule).lhs.clone())
                    }
                })
                .collect();
            let matches: Vec<&AvRule> = g
                .rules_for(cat)
                .filter(|r| {
                    r.rhs.len() == shape.len()
                        && r.rhs.iter().zip(&shape).all(|(item, l)| &item.label() == l)
                })
                .collect();
            let rule = match matches.as_slice() {
                [r] => r.id,
                [] => {
                    return Err(GrammarError::Invalid(format!(
                        "no rule matches local tree ({cat} ...) with {} children",
                        shape.len()
                    )))
                }
                many => {
                    return Err(GrammarError::Invalid(format!(
                        "ambiguous local tree ({cat} ...): rules {:?} all match",
                        many.iter().map(|r| r.id).collect::<Vec<_>>()
                    )))
                }
            };
            Ok((Derivation::Apply { rule, children }, p + 1))
        }
        _ => Err(GrammarError::Invalid("expected `(` or atom".into())),
    }
}

// ---------------------------------------------------------------------------
// Dags
// ---------------------------------------------------------------------------

/// A rooted, acyclic, node- and edge-labelled graph with unique out-edge
/// labels per node. Nodes are stored in canonical order (preorder of the
/// label-sorted traversal from the root), so equality, ordering and hashing
/// all reduce to structural isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dag {
    nodes: Vec<NodeLabel>,
    edges: Vec<(usize, String, usize)>,
    root: usize,
    canon: String,
}

impl Dag {
    /// Builds and canonicalizes a dag, validating every invariant.
    pub fn build(
        nodes: Vec<NodeLabel>,
        edges: Vec<(usize, String, usize)>,
        root: usize,
    ) -> Result<Dag, GrammarError> {
        if nodes.is_empty() {
            return Err(GrammarError::Invalid(
                "dag must have at least one node".into(),
            ));
        }
        if root >= nodes.len() {
            return Err(GrammarError::Invalid("dag root out of range".into()));
        }
        let mut out: Vec<BTreeMap<&str, usize>> = vec![BTreeMap::new(); nodes.len()];
        for (from, label, to) in &edges {
            if *from >= nodes.len() || *to >= nodes.len() {
                return Err(GrammarError::Invalid(
                    "dag edge endpoint out of range".into(),
                ));
            }
            if out[*from].insert(label, *to).is_some() {
                return Err(GrammarError::Invalid(format!(
                    "node {from} has two out-edges labelled `{label}`"
                )));
            }
        }
        // Canonical preorder: visit children in edge-label order.
        let mut order: Vec<usize> = Vec::with_capacity(nodes.len());
        let mut index_of: Vec<Option<usize>> = vec![None; nodes.len()];
        let mut on_path = vec![false; nodes.len()];
        fn visit(
            n: usize,
            out: &[BTreeMap<&str, usize>],
            order: &mut Vec<usize>,
            index_of: &mut [Option<usize>],
            on_path: &mut [bool],
        ) -> Result<(), GrammarError> {
            if on_path[n] {
                return Err(GrammarError::Invalid("dag contains a cycle".into()));
            }
            if index_of[n].is_some() {
                return Ok(());
            }
            index_of[n] = Some(order.len());
            order.push(n);
            on_path[n] = true;
            for &child in out[n].values() {
                visit(child, out, order, index_of, on_path)?;
            }
            on_path[n] = false;
            Ok(())
        }
        visit(root, &out, &mut order, &mut index_of, &mut on_path)?;
        if order.len() != nodes.len() {
            return Err(GrammarError::Invalid(
                "dag has nodes unreachable from the root".into(),
            ));
        }
        let new_nodes: Vec<NodeLabel> = order.iter().map(|&old| nodes[old].clone()).collect();
        let mut new_edges: Vec<(usize, String, usize)> = edges
            .into_iter()
            .map(|(f, l, t)| (index_of[f].unwrap(), l, index_of[t].unwrap()))
            .collect();
        new_edges.sort();
        let mut dag = Dag {
            nodes: new_nodes,
            edges: new_edges,
            root: 0,
            canon: String::new(),
        };
        dag.canon = dag.render_canonical();
        Ok(dag)
    }

    pub fn single(label: NodeLabel) -> Dag {
        Dag::build(vec![label], vec![], 0).unwrap()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn label(&self, node: usize) -> &NodeLabel {
        &self.nodes[node]
    }

    pub fn nodes(&self) -> &[NodeLabel] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, String, usize)] {
        &self.edges
    }

    pub fn out_edges(&self, node: usize) -> impl Iterator<Item = (&str, usize)> {
        self.edges
            .iter()
            .filter(move |(f, _, _)| *f == node)
            .map(|(_, l, t)| (l.as_str(), *t))
    }

    pub fn in_edges(&self, node: usize) -> impl Iterator<Item = (usize, &str)> {
        self.edges
            .iter()
            .filter(move |(_, _, t)| *t == node)
            .map(|(f, l, _)| (*f, l.as_str()))
    }

    pub fn child(&self, node: usize, label: &str) -> Option<usize> {
        self.out_edges(node)
            .find(|(l, _)| *l == label)
            .map(|(_, t)| t)
    }

    /// Canonical serialization; equal strings iff isomorphic dags. Shared
    /// nodes appear once and are referenced as `*k` (preorder index) after.
    pub fn canonical(&self) -> &str {
        &self.canon
    }

    fn render_canonical(&self) -> String {
        let mut seen = vec![false; self.nodes.len()];
        let mut s = String::new();
        self.render_node(self.root, &mut seen, &mut s);
        s
    }

    fn render_node(&self, n: usize, seen: &mut [bool], s: &mut String) {
        if seen[n] {
            s.push('*');
            s.push_str(&n.to_string());
            return;
        }
        seen[n] = true;
        s.push_str(&self.nodes[n].to_string());
        let children: Vec<(&str, usize)> = self.out_edges(n).collect();
        if !children.is_empty() {
            s.push('[');
            for (i, (label, child)) in children.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(label);
                s.push(':');
                self.render_node(*child, seen, s);
            }
            s.push(']');
        }
    }

    /// True when every node is reachable from every other along undirected
    /// edges; single-node dags are trivially connected.
    pub fn is_connected(&self) -> bool {
        // Rooted dags are connected by construction.
        true
    }
}

impl fmt::Display for Dag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canon)
    }
}

/// Why a derivation failed to map to a dag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnificationFailure {
    /// A constraint equated nodes carrying different labels.
    LabelClash { left: NodeLabel, right: NodeLabel },
    /// A constraint path named an edge absent from the derivation tree.
    DanglingPath { rule: usize, path: String },
    /// Merging created a cycle.
    Cycle,
}

impl fmt::Display for UnificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnificationFailure::LabelClash { left, right } => {
                write!(f, "label clash: {left} = {right}")
            }
            UnificationFailure::DanglingPath { rule, path } => {
                write!(f, "rule {rule}: constraint path `{path}` does not exist")
            }
            UnificationFailure::Cycle => write!(f, "merge created a cycle"),
        }
    }
}

/// Maps a derivation to its dag: build the derivation tree, then merge every
/// pair of nodes equated by a rule constraint, closing under congruence
/// (merged nodes share children edge-label-wise). Failure is a normal
/// outcome, not a fault.
pub fn derive_dag(g: &AvGrammar, d: &Derivation) -> Result<Dag, UnificationFailure> {
    assert!(
        d.well_formed(g),
        "derivation is not well-formed for this grammar"
    );
    let mut nodes: Vec<NodeLabel> = Vec::new();
    let mut edges: Vec<(usize, String, usize)> = Vec::new();
    let mut pending: Vec<(usize, usize)> = Vec::new(); // equated node pairs

    fn build(
        g: &AvGrammar,
        d: &Derivation,
        nodes: &mut Vec<NodeLabel>,
        edges: &mut Vec<(usize, String, usize)>,
        pending: &mut Vec<(usize, usize)>,
    ) -> Result<usize, UnificationFailure> {
        match d {
            Derivation::Leaf(a) => {
                nodes.push(NodeLabel::Atom(a.clone()));
                Ok(nodes.len() - 1)
            }
            Derivation::Apply { rule, children } => {
                let r = g.rule(*rule);
                nodes.push(NodeLabel::Category(r.lhs.clone()));
                let me = nodes.len() - 1;
                let mut slots = Vec::with_capacity(children.len());
                for (i, c) in children.iter().enumerate() {
                    let child = build(g, c, nodes, edges, pending)?;
                    edges.push((me, (i + 1).to_string(), child));
                    slots.push(child);
                }
                for c in &r.constraints {
                    let resolve = |sp: &SlotPath| -> Result<usize, UnificationFailure> {
                        let mut cur = slots[sp.slot - 1];
                        for seg in &sp.path {
                            cur = edges
                                .iter()
                                .find(|(f, l, _)| *f == cur && l == seg)
                                .map(|(_, _, t)| *t)
                                .ok_or_else(|| UnificationFailure::DanglingPath {
                                    rule: r.id,
                                    path: sp.to_string(),
                                })?;
                        }
                        Ok(cur)
                    };
                    pending.push((resolve(&c.left)?, resolve(&c.right)?));
                }
                Ok(me)
            }
        }
    }

    let root = build(g, d, &mut nodes, &mut edges, &mut pending)?;

    // Union-find with congruence closure over same-labelled out-edges.
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    let mut queue = pending;
    while let Some((a, b)) = queue.pop() {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra == rb {
            continue;
        }
        if nodes[ra] != nodes[rb] {
            return Err(UnificationFailure::LabelClash {
                left: nodes[ra].clone(),
                right: nodes[rb].clone(),
            });
        }
        parent[rb] = ra;
        // Children reached by the same edge label must merge as well.
        let mut by_label: BTreeMap<String, usize> = BTreeMap::new();
        for (f, l, t) in &edges {
            if find(&mut parent, *f) == ra {
                if let Some(&other) = by_label.get(l) {
                    let rt = find(&mut parent, *t);
                    let ro = find(&mut parent, other);
                    if rt != ro {
                        queue.push((rt, ro));
                    }
                } else {
                    by_label.insert(l.clone(), *t);
                }
            }
        }
    }

    // Collapse classes to representatives and rebuild.
    let mut rep_index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut new_nodes = Vec::new();
    for i in 0..nodes.len() {
        let r = find(&mut parent, i);
        if let std::collections::btree_map::Entry::Vacant(e) = rep_index.entry(r) {
            e.insert(new_nodes.len());
            new_nodes.push(nodes[r].clone());
        }
    }
    let mut new_edges: BTreeSet<(usize, String, usize)> = BTreeSet::new();
    for (f, l, t) in edges {
        let rf = find(&mut parent, f);
        let rt = find(&mut parent, t);
        new_edges.insert((rep_index[&rf], l, rep_index[&rt]));
    }
    let new_root = rep_index[&find(&mut parent, root)];
    Dag::build(new_nodes, new_edges.into_iter().collect(), new_root)
        .map_err(|_| UnificationFailure::Cycle)
}

// ---------------------------------------------------------------------------
// Enumeration and parsing
// ---------------------------------------------------------------------------

/// All successful derivations up to `max_depth`, one entry per distinct dag.
#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Distinct dags with their lexicographically least derivation.
    pub items: Vec<(Dag, Derivation)>,
    /// Every derivation (including duplicates by dag) in lexicographic order.
    pub derivations: Vec<(Derivation, Dag)>,
    /// Set when some derivation was cut off by the depth bound.
    pub truncated: bool,
}

impl Enumeration {
    pub fn dags(&self) -> Vec<Dag> {
        self.items.iter().map(|(d, _)| d.clone()).collect()
    }

    pub fn position(&self, dag: &Dag) -> Option<usize> {
        self.items.iter().position(|(d, _)| d == dag)
    }
}

/// Depth-bounded DFS over rule choices, in rule-id order, so the output is
/// lexicographic by rule-id sequence. Dags are deduplicated by isomorphism.
pub fn enumerate_language(g: &AvGrammar, max_depth: usize) -> Enumeration {
    assert!(max_depth > 0, "max_depth must be positive");
    let mut truncated = false;
    let derivs = expand_symbol(g, &g.symbols.start, max_depth, &mut truncated);
    let mut items: Vec<(Dag, Derivation)> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut derivations = Vec::new();
    for d in derivs {
        if let Ok(dag) = derive_dag(g, &d) {
            if seen.insert(dag.canonical().to_string()) {
                items.push((dag.clone(), d.clone()));
            }
            derivations.push((d, dag));
        }
    }
    Enumeration {
        items,
        derivations,
        truncated,
    }
}

fn expand_symbol(
    g: &AvGrammar,
    symbol: &str,
    budget: usize,
    truncated: &mut bool,
) -> Vec<Derivation> {
    if budget == 0 {
        *truncated = true;
        return Vec::new();
    }
    let mut out = Vec::new();
    for r in g.rules_for(symbol) {
        let per_slot: Vec<Vec<Derivation>> = r
            .rhs
            .iter()
            .map(|item| match item {
                RhsItem::Terminal(t) => vec![Derivation::Leaf(t.clone())],
                RhsItem::Nonterminal(nt) => expand_symbol(g, nt, budget - 1, truncated),
            })
            .collect();
        if per_slot.iter().any(|v| v.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; per_slot.len()];
        loop {
            let children: Vec<Derivation> = idx
                .iter()
                .zip(&per_slot)
                .map(|(&i, v)| v[i].clone())
                .collect();
            out.push(Derivation::Apply {
                rule: r.id,
                children,
            });
            // Odometer, rightmost fastest: keeps rule-id sequences lexicographic.
            let mut k = per_slot.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < per_slot[k].len() {
                    break;
                }
                idx[k] = 0;
                if k == 0 {
                    break;
                }
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    out
}

/// The dags whose derivation yield equals `sentence`.
pub fn parse_dags(g: &AvGrammar, sentence: &[&str], max_depth: usize) -> Vec<(Dag, Derivation)> {
    enumerate_language(g, max_depth)
        .items
        .into_iter()
        .filter(|(_, d)| {
            d.terminal_yield()
                .iter()
                .map(String::as_str)
                .eq(sentence.iter().copied())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{av_grammar, cf_grammar};

    #[test]
    fn cf_analogue_matches_backbone_rule_for_rule() {
        let av = av_grammar();
        let cf = cf_grammar();
        let analogue = cf_analogue(&av);
        let direct = cf_analogue(&cf);
        assert_eq!(analogue.rules.len(), 6);
        for (a, b) in analogue.rules.iter().zip(&direct.rules) {
            assert_eq!(a.id, b.id);
            assert_eq!(a.lhs, b.lhs);
            assert_eq!(a.rhs, b.rhs);
        }
    }

    #[test]
    fn cf_analogue_of_constraint_free_grammar_is_identity() {
        let g = cf_grammar();
        let skel = cf_analogue(&g);
        for (r, s) in g.rules.iter().zip(&skel.rules) {
            assert!(r.constraints.is_empty());
            assert_eq!(r.rhs, s.rhs);
        }
    }

    #[test]
    fn cf_analogue_strips_equations_preserving_arity() {
        let g: AvGrammar = "start S\nrule 1: S -> A A | eq 1.1 = 2.1\nrule 2: A -> 'x' 'y'\nrule 3: A -> 'y' 'x'\n"
            .parse()
            .unwrap();
        let skel = cf_analogue(&g);
        assert_eq!(skel.rules.len(), 3);
        assert_eq!(skel.rules[0].rhs.len(), 2);
        assert_eq!(skel.rules[1].rhs.len(), 2);
    }

    #[test]
    fn shared_daughter_merges_into_one_node() {
        let g = av_grammar();
        let d = Derivation::apply(
            1,
            vec![
                Derivation::apply(3, vec![Derivation::leaf("a")]),
                Derivation::apply(3, vec![Derivation::leaf("a")]),
            ],
        );
        let dag = derive_dag(&g, &d).unwrap();
        // S, two A's, one shared atom.
        assert_eq!(dag.node_count(), 4);
        assert_eq!(dag.canonical(), "S[1:A[1:'a'],2:A[1:*2]]");
    }

    #[test]
    fn clashing_daughters_fail_unification() {
        let g = av_grammar();
        let d = Derivation::apply(
            1,
            vec![
                Derivation::apply(3, vec![Derivation::leaf("a")]),
                Derivation::apply(4, vec![Derivation::leaf("b")]),
            ],
        );
        match derive_dag(&g, &d) {
            Err(UnificationFailure::LabelClash { .. }) => {}
            other => panic!("expected label clash, got {other:?}"),
        }
    }

    #[test]
    fn constraint_free_branch_keeps_all_nodes() {
        let g = av_grammar();
        let d = Derivation::apply(
            2,
            vec![Derivation::apply(
                5,
                vec![Derivation::leaf("a"), Derivation::leaf("a")],
            )],
        );
        let dag = derive_dag(&g, &d).unwrap();
        assert_eq!(dag.node_count(), 4); // S, B, two separate atoms
        assert_eq!(dag.canonical(), "S[1:B[1:'a',2:'a']]");
    }

    #[test]
    fn constraint_free_grammar_never_fails_and_keeps_tree_shape() {
        let g = cf_grammar();
        for (_, d) in enumerate_language(&g, 10).items {
            let dag = derive_dag(&g, &d).unwrap();
            let tree_nodes = 1 + d.rule_sequence().len() + d.terminal_yield().len();
            // Rule applications contribute one node each plus the leaves; the
            // root is counted by its rule application.
            assert_eq!(dag.node_count(), tree_nodes - 1);
        }
    }

    #[test]
    fn derive_dag_is_deterministic() {
        let g = av_grammar();
        let d = Derivation::apply(
            1,
            vec![
                Derivation::apply(4, vec![Derivation::leaf("b")]),
                Derivation::apply(4, vec![Derivation::leaf("b")]),
            ],
        );
        let a = derive_dag(&g, &d).unwrap();
        let b = derive_dag(&g, &d).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.canonical(), b.canonical());
    }

    #[test]
    fn av_language_has_exactly_four_dags() {
        let e = enumerate_language(&av_grammar(), 10);
        assert!(!e.truncated);
        let canons: Vec<&str> = e.items.iter().map(|(d, _)| d.canonical()).collect();
        assert_eq!(
            canons,
            vec![
                "S[1:A[1:'a'],2:A[1:*2]]",
                "S[1:A[1:'b'],2:A[1:*2]]",
                "S[1:B[1:'a',2:'a']]",
                "S[1:B[1:'b',2:'b']]",
            ]
        );
    }

    #[test]
    fn cf_language_has_six_trees() {
        let e = enumerate_language(&cf_grammar(), 10);
        assert!(!e.truncated);
        assert_eq!(e.items.len(), 6);
    }

    #[test]
    fn single_rule_grammar_enumerates_one_dag() {
        let g: AvGrammar = "start S\nrule 1: S -> 'a'\n".parse().unwrap();
        let e = enumerate_language(&g, 10);
        assert_eq!(e.items.len(), 1);
        assert!(!e.truncated);
    }

    #[test]
    fn depth_bound_sets_truncation_flag() {
        let g: AvGrammar = "start S\nrule 1: S -> S\nrule 2: S -> 'a'\n"
            .parse()
            .unwrap();
        let e = enumerate_language(&g, 3);
        assert!(e.truncated);
        assert_eq!(e.items.len(), 3); // unary chains of depth 1..=3
    }

    #[test]
    fn enumerated_dags_round_trip_their_derivations() {
        let g = av_grammar();
        for (dag, d) in enumerate_language(&g, 10).items {
            assert_eq!(derive_dag(&g, &d).unwrap(), dag);
        }
    }

    #[test]
    fn parse_counts_match_for_both_grammars() {
        let cf = cf_grammar();
        assert_eq!(parse_dags(&cf, &["a", "a"], 10).len(), 2);
        let ab = parse_dags(&cf, &["a", "b"], 10);
        assert_eq!(ab.len(), 1);
        assert_eq!(ab[0].1.rule_sequence(), vec![1, 3, 4]);
        let av = av_grammar();
        assert_eq!(parse_dags(&av, &["a", "b"], 10).len(), 0);
        assert_eq!(parse_dags(&av, &["a", "a"], 10).len(), 2);
    }

    #[test]
    fn bracketed_round_trip() {
        let g = av_grammar();
        let d = derivation_from_bracketed(&g, "(S (A a) (A a))").unwrap();
        assert_eq!(d.rule_sequence(), vec![1, 3, 3]);
        assert_eq!(d.bracketed(&g), "(S (A a) (A a))");
        let flat = derivation_from_bracketed(&g, "(S (B a a))").unwrap();
        assert_eq!(flat.rule_sequence(), vec![2, 5]);
    }

    #[test]
    fn grammar_text_round_trip() {
        let g = av_grammar();
        let text = g.to_string();
        let back: AvGrammar = text.parse().unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn rejects_noncontiguous_rule_ids() {
        let err = "start S\nrule 1: S -> 'a'\nrule 3: S -> 'b'\n".parse::<AvGrammar>();
        assert!(err.is_err());
    }

    #[test]
    fn rejects_unknown_category() {
        let err = "start S\nrule 1: S -> T\n".parse::<AvGrammar>();
        assert!(err.is_err());
    }

    #[test]
    fn dag_distinguishes_sharing_from_copies() {
        // Same unfolding, different identity structure.
        let shared = Dag::build(
            vec![
                NodeLabel::Category("S".into()),
                NodeLabel::Category("A".into()),
                NodeLabel::Category("A".into()),
                NodeLabel::Atom("a".into()),
            ],
            vec![
                (0, "1".into(), 1),
                (0, "2".into(), 2),
                (1, "1".into(), 3),
                (2, "1".into(), 3),
            ],
            0,
        )
        .unwrap();
        let copied = Dag::build(
            vec![
                NodeLabel::Category("S".into()),
                NodeLabel::Category("A".into()),
                NodeLabel::Category("A".into()),
                NodeLabel::Atom("a".into()),
                NodeLabel::Atom("a".into()),
            ],
            vec![
                (0, "1".into(), 1),
                (0, "2".into(), 2),
                (1, "1".into(), 3),
                (2, "1".into(), 4),
            ],
            0,
        )
        .unwrap();
        assert_ne!(shared, copied);
    }

    #[test]
    fn dag_rejects_duplicate_out_labels_and_cycles() {
        let dup = Dag::build(
            vec![
                NodeLabel::Category("S".into()),
                NodeLabel::Atom("a".into()),
                NodeLabel::Atom("a".into()),
            ],
            vec![(0, "1".into(), 1), (0, "1".into(), 2)],
            0,
        );
        assert!(dup.is_err());
        let cyc = Dag::build(
            vec![
                NodeLabel::Category("S".into()),
                NodeLabel::Category("S".into()),
            ],
            vec![(0, "1".into(), 1), (1, "1".into(), 0)],
            0,
        );
        assert!(cyc.is_err());
    }
}
