//! Named instances and generated families, plus the verification sweep that
//! runs every applicable bound checker over them.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::aut::{automorphism_group, AUT_SEARCH_CAP};
use crate::bounds::{
    check_corollary1, check_lemma1, check_lemma3, check_lemma4, check_lemma_class,
    check_theorem_main, LocalSpec,
};
use crate::error::{Error, Result};
use crate::fixity::{relative_fixity, wreath_group};
use crate::graph::SimpleGraph;
use crate::group::{PermGroup, ELEMENT_ENUMERATION_CAP};
use crate::orbital::{orbital_digraph, OrbitalSpec};
use crate::perm::Permutation;
use crate::quotients::check_cover_rank;
use crate::report::{BoundReport, LemmaId};
use crate::structure::conjugacy_class_reps;
use crate::Rational;

/// Cayley graphs are materialized up to this many vertices.
pub const CAYLEY_CAP: u128 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Constructed,
    File,
    AutomorphismSearch,
}

/// A graph, a distinguished group acting on it, and bookkeeping for the
/// verification sweep.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub graph: SimpleGraph,
    pub group: PermGroup,
    pub provenance: Provenance,
    pub tags: BTreeSet<String>,
    /// Known graph-restrictive constant for the local group, when tagged.
    pub local: Option<LocalSpec>,
    /// Full automorphism group when it differs from `group` and was computed.
    pub aut_group: Option<PermGroup>,
}

impl CatalogEntry {
    pub fn new(
        id: &str,
        graph: SimpleGraph,
        group: PermGroup,
        provenance: Provenance,
        tags: &[&str],
    ) -> Result<CatalogEntry> {
        let entry = CatalogEntry {
            id: id.to_string(),
            graph,
            group,
            provenance,
            tags: tags.iter().map(|t| t.to_string()).collect(),
            local: None,
            aut_group: None,
        };
        entry.validate()?;
        Ok(entry)
    }

    fn with_local(mut self, local: LocalSpec) -> CatalogEntry {
        self.tags.insert(format!("local-group={}", local.name));
        self.local = Some(local);
        self
    }

    /// Revalidates the invariant `group ≤ Aut(graph)`.
    pub fn validate(&self) -> Result<()> {
        if self.group.degree() != self.graph.n_vertices() {
            return Err(Error::DegreeMismatch(
                self.group.degree(),
                self.graph.n_vertices(),
            ));
        }
        for g in self.group.generators() {
            if !self.graph.is_automorphism(g) {
                return Err(Error::NotAutomorphism);
            }
        }
        Ok(())
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }
}

/// Circulant graph on `n` vertices with the given step set. The rotation
/// group is attached as the acting group; the full automorphism group is
/// computed alongside when the search cap allows.
pub fn gen_circulant(n: usize, steps: &[usize]) -> Result<CatalogEntry> {
    if n < 3 {
        return Err(Error::Invalid("circulant needs n >= 3".into()));
    }
    if steps.is_empty() {
        return Err(Error::Invalid("step set must be nonempty".into()));
    }
    let mut normalized: BTreeSet<usize> = BTreeSet::new();
    for &s in steps {
        let s = s % n;
        if s == 0 {
            return Err(Error::Invalid("step 0 mod n is degenerate".into()));
        }
        normalized.insert(s.min(n - s));
    }
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for &s in &normalized {
            let j = (i + s) % n;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let graph = SimpleGraph::from_edges(n, &edges)?;
    let rotation = PermGroup::cyclic(n)?;
    let connected = graph.is_connected();
    let step_names: Vec<String> = normalized.iter().map(|s| s.to_string()).collect();
    let id = format!("circulant-{n}-{}", step_names.join("."));
    let mut entry = CatalogEntry::new(
        &id,
        graph,
        rotation,
        Provenance::Constructed,
        &["circulant", "vertex-transitive"],
    )?;
    entry.tags.insert(
        if connected {
            "connected"
        } else {
            "disconnected"
        }
        .to_string(),
    );
    if n <= AUT_SEARCH_CAP {
        entry.aut_group = Some(automorphism_group(&entry.graph)?);
    }
    Ok(entry)
}

/// Cayley graph of the group generated by `group_spec` with respect to an
/// inverse-closed, identity-free connection set, carrying the left-regular
/// action.
pub fn gen_cayley(
    id: &str,
    group_spec: &PermGroup,
    connection: &[Permutation],
) -> Result<CatalogEntry> {
    if connection.is_empty() {
        return Err(Error::Invalid("connection set must be nonempty".into()));
    }
    for s in connection {
        if s.is_identity() {
            return Err(Error::Invalid(
                "connection set contains the identity".into(),
            ));
        }
        if !group_spec.contains(s)? {
            return Err(Error::NotInGroup);
        }
        if !connection.contains(&s.inverse()) {
            return Err(Error::Invalid(
                "connection set is not inverse-closed".into(),
            ));
        }
    }
    let order = group_spec.order();
    if order > CAYLEY_CAP {
        return Err(Error::Capacity {
            what: "group order for Cayley graph",
            actual: order,
            cap: CAYLEY_CAP,
        });
    }
    let mut elements = group_spec.elements_capped(CAYLEY_CAP)?;
    elements.sort_unstable();
    let index = |p: &Permutation| elements.binary_search(p).expect("element of the group");
    let mut edges = BTreeSet::new();
    for (i, h) in elements.iter().enumerate() {
        for s in connection {
            let j = index(&h.prod(s));
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let graph = SimpleGraph::from_edges(elements.len(), &edges)?;
    // Left translations h -> g*h form the regular action on the vertex set.
    let mut regular_gens = Vec::new();
    for g in group_spec.generators() {
        let images: Vec<usize> = elements.iter().map(|h| index(&g.prod(h))).collect();
        regular_gens.push(Permutation::from_images(images)?);
    }
    let regular = PermGroup::new(elements.len(), regular_gens)?;
    debug_assert!(regular.is_regular());
    let mut entry = CatalogEntry::new(
        id,
        graph,
        regular,
        Provenance::Constructed,
        &["cayley", "regular-action", "semiregular"],
    )?;
    if !entry.group.is_semiregular() {
        return Err(Error::Invalid("regular action failed validation".into()));
    }
    entry.tags.insert("vertex-transitive".into());
    Ok(entry)
}

/// The lexicographic-product instance: the wreath action on `n*m` points
/// with its non-self-paired suborbit of size `m` whose orbital digraph is
/// connected. Returns the catalog entry (over the underlying undirected
/// graph) together with the orbital data.
pub fn gen_wreath_lexico(n: usize, m: usize) -> Result<(CatalogEntry, OrbitalSpec)> {
    if n < 3 || m < 2 {
        return Err(Error::Invalid(
            "lexicographic instance needs n >= 3, m >= 2".into(),
        ));
    }
    if n * m > 1000 {
        return Err(Error::Capacity {
            what: "points of the wreath action",
            actual: (n * m) as u128,
            cap: 1000,
        });
    }
    let group = wreath_group(n, m)?;
    // δ = (1, 0): the out-neighbor suborbit of ω = (0, 0) is all of layer 1.
    let spec = orbital_digraph(&group, 0, m)?;
    debug_assert_eq!(spec.suborbit.len(), m);
    debug_assert!(!spec.self_paired);
    debug_assert!(spec.is_connected());
    let edges: BTreeSet<(usize, usize)> = spec
        .arcs
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let edges: Vec<_> = edges.into_iter().collect();
    let graph = SimpleGraph::from_edges(n * m, &edges)?;
    let mut entry = CatalogEntry::new(
        &format!("wreath-{n}-{m}"),
        graph,
        group,
        Provenance::Constructed,
        &["wreath", "non-self-paired-suborbit", "vertex-transitive"],
    )?;
    entry.tags.insert("imprimitive".into());
    Ok((entry, spec))
}

fn aut_entry(id: &str, graph: SimpleGraph, tags: &[&str]) -> Result<CatalogEntry> {
    let aut = automorphism_group(&graph)?;
    CatalogEntry::new(id, graph, aut, Provenance::AutomorphismSearch, tags)
}

/// The built-in instances every sweep runs over. Groups come from
/// automorphism search for the named graphs and from constructions for the
/// regular and wreath actions; every entry is revalidated on load.
pub fn builtin_catalog() -> Result<Vec<CatalogEntry>> {
    let cubic_at = &[
        "cubic-arc-transitive",
        "arc-transitive",
        "condition-1",
        "condition-2",
    ][..];
    let mut entries = Vec::new();

    entries
        .push(aut_entry("k4", SimpleGraph::complete(4)?, cubic_at)?.with_local(LocalSpec::sym3()));
    entries.push(
        aut_entry(
            "k33",
            SimpleGraph::complete_bipartite(3, 3)?,
            &[
                "cubic-arc-transitive",
                "arc-transitive",
                "condition-1",
                "condition-2",
                "bipartite",
                "complete-bipartite",
            ],
        )?
        .with_local(LocalSpec::sym3()),
    );
    entries.push(
        aut_entry(
            "k5",
            SimpleGraph::complete(5)?,
            &["arc-transitive", "condition-2", "condition-3"],
        )?
        .with_local(LocalSpec::sym4()),
    );
    // Alt(5) on K5: arc-transitive with local group Alt(4).
    let k5 = SimpleGraph::complete(5)?;
    let alt5 = crate::structure::normal_closure(
        &PermGroup::symmetric(5)?,
        &Permutation::parse_cycles(5, "(0 1 2)")?,
    )?;
    entries.push(
        CatalogEntry::new(
            "k5-alt5",
            k5,
            alt5,
            Provenance::Constructed,
            &["arc-transitive", "condition-2", "condition-3"],
        )?
        .with_local(LocalSpec::alt4()),
    );

    for n in 5..=12 {
        let mut tags = vec!["arc-transitive", "condition-1", "condition-2", "cycle"];
        if n % 2 == 0 {
            tags.push("bipartite");
        }
        let entry = CatalogEntry::new(
            &format!("c{n}"),
            SimpleGraph::cycle(n)?,
            PermGroup::dihedral(n)?,
            Provenance::Constructed,
            &tags,
        )?;
        entries.push(entry);
    }

    entries.push(
        aut_entry("petersen", SimpleGraph::petersen(), cubic_at)?.with_local(LocalSpec::sym3()),
    );
    entries.push(
        aut_entry(
            "heawood",
            SimpleGraph::lcf(&[5, -5], 7)?,
            &[
                "cubic-arc-transitive",
                "arc-transitive",
                "condition-1",
                "condition-2",
                "bipartite",
            ],
        )?
        .with_local(LocalSpec::sym3()),
    );
    entries.push(
        aut_entry(
            "pappus",
            SimpleGraph::lcf(&[5, 7, -7, 7, -7, -5], 3)?,
            &[
                "cubic-arc-transitive",
                "arc-transitive",
                "condition-1",
                "condition-2",
                "bipartite",
            ],
        )?
        .with_local(LocalSpec::sym3()),
    );
    entries.push(
        aut_entry(
            "cube",
            SimpleGraph::lcf(&[3, -3], 4)?,
            &[
                "cubic-arc-transitive",
                "arc-transitive",
                "condition-1",
                "condition-2",
                "bipartite",
            ],
        )?
        .with_local(LocalSpec::sym3()),
    );
    entries.push(
        aut_entry(
            "dodecahedron",
            SimpleGraph::lcf(&[10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)?,
            cubic_at,
        )?
        .with_local(LocalSpec::sym3()),
    );

    for n in [3usize, 5, 6] {
        entries.push(aut_entry(
            &format!("prism{n}"),
            SimpleGraph::prism(n)?,
            &["vertex-transitive", "prism"],
        )?);
    }

    // Regular and semiregular actions for the cover-rank sweep.
    let klein = PermGroup::new(
        4,
        vec![
            Permutation::parse_cycles(4, "(0 1)(2 3)")?,
            Permutation::parse_cycles(4, "(0 2)(1 3)")?,
        ],
    )?;
    let klein_connection: Vec<Permutation> = vec![
        Permutation::parse_cycles(4, "(0 1)(2 3)")?,
        Permutation::parse_cycles(4, "(0 2)(1 3)")?,
        Permutation::parse_cycles(4, "(0 3)(1 2)")?,
    ];
    entries.push(gen_cayley("cayley-klein-k4", &klein, &klein_connection)?);

    let c6 = PermGroup::cyclic(6)?;
    let step = Permutation::from_cycles(6, &[(0..6).collect()])?;
    entries.push(gen_cayley(
        "cayley-c6",
        &c6,
        &[step.clone(), step.inverse()],
    )?);

    let s3 = PermGroup::symmetric(3)?;
    let transpositions = vec![
        Permutation::parse_cycles(3, "(0 1)")?,
        Permutation::parse_cycles(3, "(0 2)")?,
        Permutation::parse_cycles(3, "(1 2)")?,
    ];
    entries.push(gen_cayley("cayley-s3-k33", &s3, &transpositions)?);

    // Elementary abelian 2-group of rank 3 acting regularly on the cube.
    let e8: Vec<Permutation> = (0..3)
        .map(|bit| {
            Permutation::from_images((0..8).map(|v| v ^ (1 << bit)).collect()).expect("bijection")
        })
        .collect();
    let e8_group = PermGroup::new(8, e8.clone())?;
    entries.push(gen_cayley("cayley-e8-cube", &e8_group, &e8)?);

    let five_fold = Permutation::from_cycles(10, &[(0..5).collect(), (5..10).collect()])?;
    entries.push(CatalogEntry::new(
        "petersen-c5",
        SimpleGraph::petersen(),
        PermGroup::new(10, vec![five_fold.clone()])?,
        Provenance::Constructed,
        &["semiregular"],
    )?);
    entries.push(CatalogEntry::new(
        "prism5-c5",
        SimpleGraph::prism(5)?,
        PermGroup::new(10, vec![five_fold])?,
        Provenance::Constructed,
        &["semiregular"],
    )?);

    entries.push(gen_circulant(10, &[1, 3])?);
    entries.push(gen_circulant(6, &[2])?);

    for (n, m) in [(3, 3), (4, 3)] {
        let (entry, _) = gen_wreath_lexico(n, m)?;
        entries.push(entry);
    }

    for entry in &entries {
        entry.validate()?;
    }
    Ok(entries)
}

/// What `run_verification` should sweep.
#[derive(Debug, Clone)]
pub struct VerificationConfig {
    pub lemmas: BTreeSet<LemmaId>,
    pub alphas: Vec<Rational>,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            lemmas: LemmaId::ALL.into_iter().collect(),
            alphas: vec![
                Rational::new(1, 2),
                Rational::new(1, 4),
                Rational::new(1, 10),
            ],
        }
    }
}

/// An entry/lemma pair excluded because a stated hypothesis failed.
#[derive(Debug, Clone, Serialize)]
pub struct SkippedCheck {
    pub instance_id: String,
    pub lemma_id: LemmaId,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct VerificationOutcome {
    pub reports: Vec<BoundReport>,
    pub skipped: Vec<SkippedCheck>,
}

impl VerificationOutcome {
    pub fn all_hold(&self) -> bool {
        self.reports.iter().all(|r| r.holds)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", BoundReport::csv_header()).unwrap();
        for report in &self.reports {
            writeln!(out, "{}", report.csv_line()).unwrap();
        }
        out
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for report in &self.reports {
            writeln!(out, "{}", report.jsonl_line()).unwrap();
        }
        out
    }
}

/// Runs every selected checker on every entry whose hypotheses hold, in
/// catalog order; hypothesis and capacity misses are logged as skips, never
/// silently dropped.
pub fn run_verification(
    catalog: &[CatalogEntry],
    config: &VerificationConfig,
) -> Result<VerificationOutcome> {
    for entry in catalog {
        entry.validate()?;
    }
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let skip = |skipped: &mut Vec<SkippedCheck>, id: &str, lemma: LemmaId, e: &Error| {
        skipped.push(SkippedCheck {
            instance_id: id.to_string(),
            lemma_id: lemma,
            reason: e.to_string(),
        });
    };

    for entry in catalog {
        let id = entry.id.as_str();
        let group = &entry.group;

        let want_element_sweep = config.lemmas.contains(&LemmaId::L3a)
            || config.lemmas.contains(&LemmaId::L3b)
            || config.lemmas.contains(&LemmaId::Lclass);
        if want_element_sweep {
            let sweep_block: Option<Error> = if !group.is_transitive() {
                Some(Error::NotTransitive)
            } else if group.order() <= 1 {
                Some(Error::TrivialGroup)
            } else if group.order() > ELEMENT_ENUMERATION_CAP {
                Some(Error::Capacity {
                    what: "group order for element sweep",
                    actual: group.order(),
                    cap: ELEMENT_ENUMERATION_CAP,
                })
            } else {
                None
            };
            if let Some(reason) = sweep_block {
                for lemma in [LemmaId::L3a, LemmaId::L3b, LemmaId::Lclass] {
                    if config.lemmas.contains(&lemma) {
                        skip(&mut skipped, id, lemma, &reason);
                    }
                }
            } else {
                for rep in conjugacy_class_reps(group)? {
                    if rep.is_identity() {
                        continue;
                    }
                    if config.lemmas.contains(&LemmaId::L3a)
                        || config.lemmas.contains(&LemmaId::L3b)
                    {
                        let [a, b] = check_lemma3(id, group, &rep, 0)?;
                        if config.lemmas.contains(&LemmaId::L3a) {
                            reports.push(a);
                        }
                        if config.lemmas.contains(&LemmaId::L3b) {
                            reports.push(b);
                        }
                    }
                    if config.lemmas.contains(&LemmaId::Lclass) {
                        reports.push(check_lemma_class(id, group, &rep, 0)?);
                    }
                }
            }
        }

        if config.lemmas.contains(&LemmaId::L1) {
            if !group.is_transitive() {
                skip(&mut skipped, id, LemmaId::L1, &Error::NotTransitive);
            } else if group.order() > ELEMENT_ENUMERATION_CAP {
                skip(
                    &mut skipped,
                    id,
                    LemmaId::L1,
                    &Error::Capacity {
                        what: "group order for exponent",
                        actual: group.order(),
                        cap: ELEMENT_ENUMERATION_CAP,
                    },
                );
            } else {
                reports.push(check_lemma1(id, group)?);
            }
        }

        if config.lemmas.contains(&LemmaId::Cor1) {
            match check_corollary1(id, &entry.graph, group) {
                Ok(report) => reports.push(report),
                Err(e @ (Error::Hypothesis(_) | Error::Capacity { .. })) => {
                    skip(&mut skipped, id, LemmaId::Cor1, &e)
                }
                Err(e) => return Err(e),
            }
        }

        if config.lemmas.contains(&LemmaId::L4) {
            match check_lemma4(id, &entry.graph, group) {
                Ok(report) => reports.push(report),
                Err(e @ (Error::Hypothesis(_) | Error::Capacity { .. })) => {
                    skip(&mut skipped, id, LemmaId::L4, &e)
                }
                Err(e) => return Err(e),
            }
        }

        if config.lemmas.contains(&LemmaId::Lcover) {
            match check_cover_rank(id, &entry.graph, group) {
                Ok(report) => reports.push(report),
                Err(e @ (Error::Hypothesis(_) | Error::Capacity { .. })) => {
                    skip(&mut skipped, id, LemmaId::Lcover, &e)
                }
                Err(e) => return Err(e),
            }
        }

        if config.lemmas.contains(&LemmaId::ThmMain) {
            if let Some(local) = &entry.local {
                for &alpha in &config.alphas {
                    match check_theorem_main(id, &entry.graph, group, local, alpha) {
                        Ok(report) => reports.push(report),
                        Err(e @ (Error::Hypothesis(_) | Error::Capacity { .. })) => {
                            skip(&mut skipped, id, LemmaId::ThmMain, &e)
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }

    Ok(VerificationOutcome { reports, skipped })
}

/// One `id n_vertices rfx` record per entry whose relative fixity is within
/// reach, for plotting outside the tool.
pub fn rfx_scatter(catalog: &[CatalogEntry]) -> String {
    let mut out = String::new();
    writeln!(out, "# instance_id n_vertices rfx").unwrap();
    for entry in catalog {
        if let Ok(fixity) = relative_fixity(&entry.group) {
            writeln!(
                out,
                "{} {} {}",
                entry.id,
                entry.graph.n_vertices(),
                fixity.rfx
            )
            .unwrap();
        }
    }
    out
}
