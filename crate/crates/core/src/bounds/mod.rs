//! Per-lemma inequality checkers producing [`BoundReport`]s.
//!
//! Floating-point sides are nudged in the direction that favors `holds`, so a
//! failed report is a genuine counterexample and never a rounding artifact;
//! exact integer and rational arithmetic is used everywhere else.

mod special;

pub use special::{
    big_f_bound, f_bound, gamma_inverse, ln_gamma, n_threshold, nudge_down, nudge_up, order_growth,
    HugeLog,
};

use std::collections::BTreeMap;

use num::integer::gcd;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixity::{fixed_point_ratio, relative_fixity};
use crate::graph::SimpleGraph;
use crate::group::PermGroup;
use crate::orbital::{local_action, transitivity_profile};
use crate::perm::Permutation;
use crate::report::{BoundReport, LemmaId, ReportValue};
use crate::structure::{
    center, centralizer, exponent, is_primitive, normal_closure, plus_subgroup,
};
use crate::Rational;

/// A graph-restrictive local group: how to recognize it on a neighborhood
/// and the constant bounding vertex stabilizers of locally-L arc-transitive
/// actions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSpec {
    pub name: String,
    pub degree: usize,
    pub order: u128,
    pub constant: u64,
}

impl LocalSpec {
    pub fn sym3() -> LocalSpec {
        LocalSpec {
            name: "sym3".into(),
            degree: 3,
            order: 6,
            constant: 48,
        }
    }

    pub fn alt4() -> LocalSpec {
        LocalSpec {
            name: "alt4".into(),
            degree: 4,
            order: 12,
            constant: 36,
        }
    }

    pub fn sym4() -> LocalSpec {
        LocalSpec {
            name: "sym4".into(),
            degree: 4,
            order: 24,
            constant: 11664, // 2^4 * 3^6
        }
    }

    pub fn builtin(name: &str) -> Option<LocalSpec> {
        match name {
            "sym3" => Some(LocalSpec::sym3()),
            "alt4" => Some(LocalSpec::alt4()),
            "sym4" => Some(LocalSpec::sym4()),
            _ => None,
        }
    }
}

fn exact_ratio(num: u128, den: u128) -> Result<Rational> {
    let g = gcd(num, den.max(1));
    let (num, den) = (num / g, den / g);
    if num > u64::MAX as u128 || den > u64::MAX as u128 {
        return Err(Error::Capacity {
            what: "rational component",
            actual: num.max(den),
            cap: u64::MAX as u128,
        });
    }
    Ok(Rational::new(num as u64, den as u64))
}

/// Conservative `r <= x` where `x` already carries upward-rounded slack.
fn rational_le_f64(r: Rational, x: f64) -> bool {
    (*r.numer() as f64) <= nudge_up(x * (*r.denom() as f64), 4)
}

fn context_from<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.6e}")
    } else {
        "inf".to_string()
    }
}

pub(crate) fn is_normal_in(sub: &PermGroup, group: &PermGroup) -> Result<bool> {
    if !group.contains_group(sub)? {
        return Ok(false);
    }
    for n in sub.generators() {
        for x in group.generators() {
            if !sub.contains(&n.conjugate_by(x))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the group acts faithfully on each of its orbits (the pointwise
/// stabilizer of every orbit is trivial).
pub fn acts_faithfully_on_orbits(group: &PermGroup) -> Result<bool> {
    for orbit in group.orbits() {
        if !group.pointwise_stabilizer(&orbit)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both fixed-point inequalities for `g` and the normal closure `G = ⟨g^X⟩`:
/// `|Fix(g)| ≤ |C_G(g)| |Ω/G|` and, with `X` transitive,
/// `fpr(g) ≤ |G_ω| |C_G(g)| / |G|`.
pub fn check_lemma3(
    instance_id: &str,
    x: &PermGroup,
    g: &Permutation,
    omega: usize,
) -> Result<[BoundReport; 2]> {
    let sub = normal_closure(x, g)?;
    check_lemma3_with(instance_id, x, &sub, g, omega)
}

/// Same checks with an explicit normal subgroup `sub` of `x` containing `g`.
pub fn check_lemma3_with(
    instance_id: &str,
    x: &PermGroup,
    sub: &PermGroup,
    g: &Permutation,
    omega: usize,
) -> Result<[BoundReport; 2]> {
    if !x.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if omega >= x.degree() {
        return Err(Error::PointOutOfRange {
            point: omega,
            degree: x.degree(),
        });
    }
    if !is_normal_in(sub, x)? {
        return Err(Error::NotNormal);
    }
    if !sub.contains(g)? {
        return Err(Error::NotInGroup);
    }
    let cent_order = centralizer(sub, g)?.order();
    let sub_order = sub.order();
    let orbit_count = sub.num_orbits() as u128;
    let fix = g.num_fixed_points() as u128;

    let rhs_a = cent_order.checked_mul(orbit_count).ok_or(Error::Capacity {
        what: "lemma 3 right-hand side",
        actual: u128::MAX,
        cap: u128::MAX,
    })?;
    let context = context_from([
        ("|C_G(g)|", cent_order.to_string()),
        ("|G|", sub_order.to_string()),
        ("|Omega/G|", orbit_count.to_string()),
        ("|X|", x.order().to_string()),
    ]);
    let report_a = BoundReport {
        instance_id: instance_id.to_string(),
        lemma_id: LemmaId::L3a,
        lhs: ReportValue::Integer(fix),
        rhs: ReportValue::Integer(rhs_a),
        holds: fix <= rhs_a,
        context: context.clone(),
    };

    let stab_order = sub.point_stabilizer(omega)?.order();
    let lhs_b = fixed_point_ratio(g);
    let rhs_num = stab_order.checked_mul(cent_order).ok_or(Error::Capacity {
        what: "lemma 3 right-hand side",
        actual: u128::MAX,
        cap: u128::MAX,
    })?;
    let rhs_b = exact_ratio(rhs_num, sub_order)?;
    let mut context_b = context;
    context_b.insert("|G_omega|".into(), stab_order.to_string());
    context_b.insert("omega".into(), omega.to_string());
    let report_b = BoundReport {
        instance_id: instance_id.to_string(),
        lemma_id: LemmaId::L3b,
        lhs: ReportValue::rational(lhs_b),
        rhs: ReportValue::rational(rhs_b),
        holds: lhs_b <= rhs_b,
        context: context_b,
    };
    Ok([report_a, report_b])
}

/// `fpr(g) ≤ |G_ω| |X:G| f(|G:Z(G)|)` with `G = ⟨g^X⟩`; the only float is
/// `f`, and the right-hand side is rounded up.
pub fn check_lemma_class(
    instance_id: &str,
    x: &PermGroup,
    g: &Permutation,
    omega: usize,
) -> Result<BoundReport> {
    if g.is_identity() {
        return Err(Error::Hypothesis("non-identity element"));
    }
    if !x.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let sub = normal_closure(x, g)?;
    let z = center(&sub)?;
    let index_gz = sub.order() / z.order();
    let stab_order = sub.point_stabilizer(omega)?.order();
    let index_xg = x.order() / sub.order();
    let f_val = f_bound(index_gz as f64)?;
    let rhs = nudge_up((stab_order as f64) * (index_xg as f64) * f_val, 4);
    let lhs = fixed_point_ratio(g);
    let context = context_from([
        ("|G|", sub.order().to_string()),
        ("|Z(G)|", z.order().to_string()),
        ("|G:Z(G)|", index_gz.to_string()),
        ("|X:G|", index_xg.to_string()),
        ("|G_omega|", stab_order.to_string()),
        ("f", fmt_f64(f_val)),
        ("f_clamped", (index_gz < 2).to_string()),
    ]);
    Ok(BoundReport {
        instance_id: instance_id.to_string(),
        lemma_id: LemmaId::Lclass,
        lhs: ReportValue::rational(lhs),
        rhs: ReportValue::Real(rhs),
        holds: rational_le_f64(lhs, rhs),
        context,
    })
}

/// Divisibility `exp(G) | |G:Z(G)| |Ω/G⁺|` for transitive `G`.
pub fn check_lemma1(instance_id: &str, group: &PermGroup) -> Result<BoundReport> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let exp = exponent(group)?;
    let z = center(group)?;
    let index_gz = group.order() / z.order();
    let plus = plus_subgroup(group)?;
    let plus_orbits = plus.num_orbits() as u128;
    let modulus = index_gz.checked_mul(plus_orbits).ok_or(Error::Capacity {
        what: "lemma 1 modulus",
        actual: u128::MAX,
        cap: u128::MAX,
    })?;
    let context = context_from([
        ("|G|", group.order().to_string()),
        ("|Z(G)|", z.order().to_string()),
        ("|G:Z(G)|", index_gz.to_string()),
        ("|Omega/G+|", plus_orbits.to_string()),
        ("check", "divides".into()),
    ]);
    Ok(BoundReport {
        instance_id: instance_id.to_string(),
        lemma_id: LemmaId::L1,
        lhs: ReportValue::Integer(exp),
        rhs: ReportValue::Integer(modulus),
        holds: modulus.is_multiple_of(exp),
        context,
    })
}

/// Divisibility `exp(G) | 2^ε |G:Z(G)|` for a connected locally-arc-transitive
/// action, faithful on each vertex orbit, on a graph that is not complete
/// bipartite. ε is computed (bipartite and arc-transitive), never supplied.
pub fn check_corollary1(
    instance_id: &str,
    graph: &SimpleGraph,
    group: &PermGroup,
) -> Result<BoundReport> {
    if !graph.is_connected() {
        return Err(Error::Hypothesis("connected"));
    }
    let profile = transitivity_profile(graph, group)?;
    if !profile.local_arc {
        return Err(Error::Hypothesis("locally-arc-transitive"));
    }
    if graph.is_complete_bipartite() {
        return Err(Error::Hypothesis("not-complete-bipartite"));
    }
    if !acts_faithfully_on_orbits(group)? {
        return Err(Error::Hypothesis("faithful-on-vertex-orbits"));
    }
    let epsilon: u32 = (graph.is_bipartite() && profile.arc) as u32;
    let exp = exponent(group)?;
    let z = center(group)?;
    let index_gz = group.order() / z.order();
    let modulus = (1u128 << epsilon) * index_gz;
    let context = context_from([
        ("|G|", group.order().to_string()),
        ("|Z(G)|", z.order().to_string()),
        ("|G:Z(G)|", index_gz.to_string()),
        ("epsilon", epsilon.to_string()),
        ("bipartite", graph.is_bipartite().to_string()),
        ("arc_transitive", profile.arc.to_string()),
        ("check", "divides".into()),
    ]);
    Ok(BoundReport {
        instance_id: instance_id.to_string(),
        lemma_id: LemmaId::Cor1,
        lhs: ReportValue::Integer(exp),
        rhs: ReportValue::Integer(modulus),
        holds: modulus.is_multiple_of(exp),
        context,
    })
}

/// `|G:Z(G)| ≥ F(|G|)` for a connected locally-quasiprimitive action on a
/// graph that is not complete bipartite; the right-hand side is rounded
/// down.
pub fn check_lemma4(
    instance_id: &str,
    graph: &SimpleGraph,
    group: &PermGroup,
) -> Result<BoundReport> {
    if !graph.is_connected() {
        return Err(Error::Hypothesis("connected"));
    }
    let profile = transitivity_profile(graph, group)?;
    if !profile.locally_quasiprimitive {
        return Err(Error::Hypothesis("locally-quasiprimitive"));
    }
    if graph.is_complete_bipartite() {
        return Err(Error::Hypothesis("not-complete-bipartite"));
    }
    let z = center(group)?;
    let index_gz = group.order() / z.order();
    let rhs = nudge_down(big_f_bound(group.order() as f64)?, 4);
    let context = context_from([
        ("|G|", group.order().to_string()),
        ("|Z(G)|", z.order().to_string()),
        ("F", fmt_f64(rhs)),
    ]);
    Ok(BoundReport {
        instance_id: instance_id.to_string(),
        lemma_id: LemmaId::L4,
        lhs: ReportValue::Integer(index_gz),
        rhs: ReportValue::Real(rhs),
        holds: (index_gz as f64) >= rhs,
        context,
    })
}

/// Consistency of the relative fixity with the threshold `N_{L,α}`: on a
/// connected arc-transitive locally-L graph there must be no instance with
/// `|V| > N` and `rfx ≥ α` at the same time.
pub fn check_theorem_main(
    instance_id: &str,
    graph: &SimpleGraph,
    x: &PermGroup,
    local: &LocalSpec,
    alpha: Rational,
) -> Result<BoundReport> {
    if !graph.is_connected() {
        return Err(Error::Hypothesis("connected"));
    }
    let profile = transitivity_profile(graph, x)?;
    if !profile.arc {
        return Err(Error::Hypothesis("arc-transitive"));
    }
    for orbit in x.orbits() {
        let la = local_action(graph, x, orbit[0])?;
        if la.group.degree() != local.degree
            || la.group.order() != local.order
            || !is_primitive(&la.group)?
        {
            return Err(Error::Hypothesis("local-group-match"));
        }
    }
    let fixity = relative_fixity(x)?;
    let threshold = n_threshold(local.constant, alpha)?;
    let n_vertices = graph.n_vertices() as u128;
    let exceeds = threshold.exceeded_by(n_vertices);
    let rfx_ge_alpha = fixity.rfx >= alpha;
    let context = context_from([
        ("alpha", alpha.to_string()),
        ("c", local.constant.to_string()),
        ("local", local.name.clone()),
        ("n_vertices", n_vertices.to_string()),
        ("log10_N", fmt_f64(threshold.log10)),
        ("log10_log10_N", fmt_f64(threshold.log10_log10)),
        ("exceeds_threshold", exceeds.to_string()),
        ("rfx", fixity.rfx.to_string()),
    ]);
    Ok(BoundReport {
        instance_id: instance_id.to_string(),
        lemma_id: LemmaId::ThmMain,
        lhs: ReportValue::rational(fixity.rfx),
        rhs: ReportValue::rational(alpha),
        holds: !(exceeds && rfx_ge_alpha),
        context,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn lemma3_on_sym4_transposition() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let [a, b] = check_lemma3("s4", &s4, &cyc(4, "(0 1)"), 0).unwrap();
        // |Fix| = 2, C_{S4}((0 1)) has order 4, one orbit.
        assert!(matches!(a.lhs, ReportValue::Integer(2)));
        assert!(matches!(a.rhs, ReportValue::Integer(4)));
        assert!(a.holds && b.holds);
    }

    #[test]
    fn lemma3_free_action() {
        let c5 = PermGroup::cyclic(5).unwrap();
        let [a, b] = check_lemma3("c5", &c5, &cyc(5, "(0 1 2 3 4)"), 0).unwrap();
        assert!(matches!(a.lhs, ReportValue::Integer(0)));
        assert!(a.holds && b.holds);
    }

    #[test]
    fn lemma3_with_klein_inside_sym4() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let klein = PermGroup::new(4, vec![cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")]).unwrap();
        let [a, b] =
            check_lemma3_with("klein-in-s4", &s4, &klein, &cyc(4, "(0 1)(2 3)"), 0).unwrap();
        assert!(a.holds && b.holds);
        // fpr = 0 <= 1 * 4 / 4 = 1
        assert!(matches!(b.rhs, ReportValue::Rational { num: 1, den: 1 }));
        // Non-normal subgroup is rejected.
        let c2 = PermGroup::new(4, vec![cyc(4, "(0 1)")]).unwrap();
        assert!(matches!(
            check_lemma3_with("bad", &s4, &c2, &cyc(4, "(0 1)"), 0),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn lemma_class_clamp_path_on_klein_closure() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let report = check_lemma_class("s4-dt", &s4, &cyc(4, "(0 1)(2 3)"), 0).unwrap();
        assert!(report.holds);
        assert_eq!(report.context["f_clamped"], "true");
        assert_eq!(report.context["|G:Z(G)|"], "1");
    }

    #[test]
    fn lemma_class_on_sym5_transposition() {
        let s5 = PermGroup::symmetric(5).unwrap();
        let report = check_lemma_class("s5", &s5, &cyc(5, "(0 1)"), 0).unwrap();
        assert!(report.holds);
        assert_eq!(report.context["|G:Z(G)|"], "120");
        assert_eq!(report.context["f_clamped"], "false");
    }

    #[test]
    fn lemma1_examples() {
        let c6 = check_lemma1("c6", &PermGroup::cyclic(6).unwrap()).unwrap();
        assert!(c6.holds);
        assert!(matches!(c6.lhs, ReportValue::Integer(6)));
        assert!(matches!(c6.rhs, ReportValue::Integer(6)));

        let s3 = check_lemma1("s3", &PermGroup::symmetric(3).unwrap()).unwrap();
        assert!(s3.holds);
        assert!(matches!(s3.rhs, ReportValue::Integer(6)));

        let d5 = check_lemma1("d5", &PermGroup::dihedral(5).unwrap()).unwrap();
        assert!(d5.holds);
        assert!(matches!(d5.lhs, ReportValue::Integer(10)));
    }

    #[test]
    fn corollary1_on_petersen_and_k33_rejection() {
        let petersen = SimpleGraph::petersen();
        let aut = automorphism_group(&petersen).unwrap();
        let report = check_corollary1("petersen", &petersen, &aut).unwrap();
        assert!(report.holds);
        assert_eq!(report.context["epsilon"], "0");

        let k33 = SimpleGraph::complete_bipartite(3, 3).unwrap();
        let aut33 = automorphism_group(&k33).unwrap();
        assert!(matches!(
            check_corollary1("k33", &k33, &aut33),
            Err(Error::Hypothesis("not-complete-bipartite"))
        ));
    }

    #[test]
    fn corollary1_on_heawood_has_epsilon_one() {
        let heawood = SimpleGraph::lcf(&[5, -5], 7).unwrap();
        let aut = automorphism_group(&heawood).unwrap();
        assert_eq!(aut.order(), 336);
        let report = check_corollary1("heawood", &heawood, &aut).unwrap();
        assert!(report.holds);
        assert_eq!(report.context["epsilon"], "1");
    }

    #[test]
    fn lemma4_examples() {
        let petersen = SimpleGraph::petersen();
        let aut = automorphism_group(&petersen).unwrap();
        let report = check_lemma4("petersen", &petersen, &aut).unwrap();
        assert!(report.holds);
        assert!(matches!(report.lhs, ReportValue::Integer(120)));

        let k4 = SimpleGraph::complete(4).unwrap();
        let aut4 = automorphism_group(&k4).unwrap();
        assert!(check_lemma4("k4", &k4, &aut4).unwrap().holds);

        let c5 = SimpleGraph::cycle(5).unwrap();
        let d5 = PermGroup::dihedral(5).unwrap();
        assert!(check_lemma4("c5", &c5, &d5).unwrap().holds);
    }

    #[test]
    fn theorem_main_on_petersen() {
        let petersen = SimpleGraph::petersen();
        let aut = automorphism_group(&petersen).unwrap();
        let report = check_theorem_main(
            "petersen",
            &petersen,
            &aut,
            &LocalSpec::sym3(),
            Rational::new(1, 2),
        )
        .unwrap();
        assert!(report.holds);
        assert_eq!(report.context["exceeds_threshold"], "false");
        assert_eq!(report.context["rfx"], "2/5");
        // Wrong local tag is a hypothesis failure.
        assert!(matches!(
            check_theorem_main(
                "petersen",
                &petersen,
                &aut,
                &LocalSpec::sym4(),
                Rational::new(1, 2)
            ),
            Err(Error::Hypothesis("local-group-match"))
        ));
    }
}
