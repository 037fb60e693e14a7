//! Cycle shortening.
//!
//! A separating cycle that is not geodesic admits a window whose
//! endpoints have a shortcut. Splicing the shortcut against the window
//! splits the cycle into strictly shorter simple cycles, and one of them
//! keeps a quantifiable share of the original split balance. Iterating
//! until no window violates shortest-path distance yields a geodesic
//! cycle.
//!
//! Two drivers share the splice step:
//!
//! * [`shorten_cycle_to_geodesic`] always keeps the best-balanced piece
//!   and runs to full geodesicity. Balance can decay by a factor `4` per
//!   unit of length, so it is only worthwhile when the input is short or
//!   the caller accepts whatever balance survives.
//! * [`shorten_with_split_tradeoff`] scans only windows up to `10δ`,
//!   exits early through a pocket piece as soon as that piece alone
//!   meets a balance target, and otherwise keeps the long piece, whose
//!   balance never drops below target before the exit triggers.

use crate::embedding::FaceWeightedPlaneGraph;
use crate::filling::canonical_cycle;
use crate::graph::{decompose_into_simple_cycles, Graph, Vertex};
use crate::metric::{is_k_local_geodesic, LocalViolation, WalkKind};
use crate::rational::Rational;

/// Result of a full shortening run.
#[derive(Clone, Debug)]
pub struct ShortenedCycle {
    /// The final geodesic cycle, in canonical form.
    pub cycle: Vec<Vertex>,
    /// Split balance of the final cycle in the host graph.
    pub balance: Rational,
    /// Whether the input was large enough, relative to its length and
    /// starting balance, for the worst-case balance decay to stay
    /// harmless. The run proceeds either way; a `false` here means the
    /// final balance carries no a-priori guarantee.
    pub guard_ok: bool,
    /// Number of splice steps performed.
    pub steps: usize,
}

/// Result of a target-driven shortening run.
#[derive(Clone, Debug)]
pub struct TradeoffCycle {
    /// The final geodesic cycle, in canonical form.
    pub cycle: Vec<Vertex>,
    /// Split balance of the final cycle in the host graph.
    pub balance: Rational,
    /// Guard flag of the chained full shortening, if one ran.
    pub guard_ok: bool,
    /// Whether the run exited through a balanced pocket piece (or a
    /// final full shortening) rather than ending on a geodesic long
    /// piece directly.
    pub chained: bool,
    /// Number of splice steps performed, including chained ones.
    pub steps: usize,
    pub notes: Vec<String>,
}

/// `alpha · n ≥ len · 4^len`: the condition under which iterated
/// halving of a cycle with split balance `alpha` cannot exhaust the
/// balance before reaching a geodesic. Evaluated exactly in `u128`; an
/// overflowing right side means the condition fails.
fn decay_guard_holds(alpha: Rational, n: usize, len: usize) -> bool {
    if len >= 64 {
        return false;
    }
    let p = alpha.num().max(0) as u128;
    let q = alpha.den() as u128;
    let lhs = p.saturating_mul(n as u128);
    let pow = 1u128 << (2 * len);
    match q.checked_mul(len as u128).and_then(|x| x.checked_mul(pow)) {
        Some(rhs) => lhs >= rhs,
        None => false,
    }
}

fn edge_set(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> std::collections::BTreeSet<(Vertex, Vertex)> {
    pairs
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

fn walk_edges(walk: &[Vertex], closed: bool) -> Vec<(Vertex, Vertex)> {
    let steps = if closed { walk.len() } else { walk.len() - 1 };
    (0..steps)
        .map(|i| (walk[i], walk[(i + 1) % walk.len()]))
        .collect()
}

/// The two candidate pools for a splice at the given violation: simple
/// cycles of `window Δ shortcut` (the pocket side) and of
/// `(cycle ∖ window) Δ shortcut` (the long side). Every candidate is
/// strictly shorter than `cycle`.
fn splice_candidates(
    g: &Graph,
    cycle: &[Vertex],
    viol: &LocalViolation,
) -> (Vec<Vec<Vertex>>, Vec<Vec<Vertex>>) {
    let len = cycle.len();
    let l = viol.walk_dist;
    let arc: Vec<Vertex> = (0..=l).map(|t| cycle[(viol.i + t) % len]).collect();
    let path = g
        .canonical_shortest_path(cycle[viol.i], cycle[viol.j])
        .expect("violating window endpoints are connected");
    debug_assert_eq!(path.len() - 1, viol.graph_dist);

    let ce = edge_set(walk_edges(cycle, true));
    let ae = edge_set(walk_edges(&arc, false));
    let pe = edge_set(walk_edges(&path, false));
    let pocket: Vec<(Vertex, Vertex)> = ae.symmetric_difference(&pe).copied().collect();
    let rest: Vec<(Vertex, Vertex)> = ce
        .difference(&ae)
        .copied()
        .collect::<std::collections::BTreeSet<_>>()
        .symmetric_difference(&pe)
        .copied()
        .collect();

    let keep_short = |cycles: Vec<Vec<Vertex>>| -> Vec<Vec<Vertex>> {
        cycles
            .into_iter()
            .filter(|c| c.len() >= 3 && c.len() < len)
            .map(|c| canonical_cycle(&c))
            .collect()
    };
    (
        keep_short(decompose_into_simple_cycles(&pocket)),
        keep_short(decompose_into_simple_cycles(&rest)),
    )
}

/// Picks the candidate with the largest split balance; ties go to the
/// shorter cycle, then the lexicographically smaller canonical form.
fn best_candidate<'a>(
    fwp: &FaceWeightedPlaneGraph,
    original_n: usize,
    cands: impl IntoIterator<Item = &'a Vec<Vertex>>,
) -> Option<(Vec<Vertex>, Rational)> {
    let mut best: Option<(Vec<Vertex>, Rational)> = None;
    for c in cands {
        let b = fwp.split_balance(c, original_n);
        let better = match &best {
            None => true,
            Some((bc, bb)) => {
                b > *bb || (b == *bb && (c.len() < bc.len() || (c.len() == bc.len() && *c < *bc)))
            }
        };
        if better {
            best = Some((c.clone(), b));
        }
    }
    best
}

/// Shortens a separating cycle to a geodesic cycle of the host graph,
/// keeping the best-balanced piece at every splice.
///
/// Never fails: if the decay guard does not hold the run continues and
/// simply reports `guard_ok: false`. Each splice strictly shortens the
/// cycle, so the loop ends after fewer than `|cycle|` steps.
pub fn shorten_cycle_to_geodesic(
    fwp: &FaceWeightedPlaneGraph,
    cycle: &[Vertex],
    original_n: usize,
) -> ShortenedCycle {
    let g = fwp.plane.graph();
    let mut cur = canonical_cycle(cycle);
    let guard_ok = decay_guard_holds(fwp.split_balance(&cur, original_n), original_n, cur.len());
    let mut steps = 0usize;
    loop {
        let viol = is_k_local_geodesic(g, &cur, WalkKind::Cycle, cur.len())
            .expect("cycle edges exist in the host graph");
        let Some(v) = viol else { break };
        let (pocket, rest) = splice_candidates(g, &cur, &v);
        let picked = best_candidate(fwp, original_n, pocket.iter().chain(rest.iter()))
            .expect("a violating splice always yields a shorter cycle");
        cur = picked.0;
        steps += 1;
    }
    let balance = fwp.split_balance(&cur, original_n);
    ShortenedCycle { cycle: cur, balance, guard_ok, steps }
}

/// Shortens a cycle scanning only windows up to `10·delta`, exiting
/// through the pocket side as soon as a pocket piece alone has split
/// balance at least `target`.
///
/// While no pocket piece reaches the target, the long piece keeps all
/// but the pocket's share of the weight, so its balance cannot fall
/// below the target either; the final cycle is then shortened fully.
pub fn shorten_with_split_tradeoff(
    fwp: &FaceWeightedPlaneGraph,
    cycle: &[Vertex],
    delta: usize,
    target: Rational,
    original_n: usize,
) -> TradeoffCycle {
    let g = fwp.plane.graph();
    let k = 10 * delta.max(1);
    let mut cur = canonical_cycle(cycle);
    let mut steps = 0usize;
    let mut notes = Vec::new();
    loop {
        let viol = is_k_local_geodesic(g, &cur, WalkKind::Cycle, k)
            .expect("cycle edges exist in the host graph");
        match viol {
            None => {
                // Locally geodesic at scale 10δ. Certify globally, or
                // hand the remainder to the full shortener.
                let full = is_k_local_geodesic(g, &cur, WalkKind::Cycle, cur.len())
                    .expect("cycle edges exist in the host graph");
                if full.is_none() {
                    let balance = fwp.split_balance(&cur, original_n);
                    return TradeoffCycle {
                        cycle: cur,
                        balance,
                        guard_ok: true,
                        chained: false,
                        steps,
                        notes,
                    };
                }
                notes.push(format!(
                    "{}-local geodesic of length {} still had a longer-range shortcut",
                    k,
                    cur.len()
                ));
                let fin = shorten_cycle_to_geodesic(fwp, &cur, original_n);
                return TradeoffCycle {
                    cycle: fin.cycle,
                    balance: fin.balance,
                    guard_ok: fin.guard_ok,
                    chained: true,
                    steps: steps + fin.steps,
                    notes,
                };
            }
            Some(v) => {
                let (pocket, rest) = splice_candidates(g, &cur, &v);
                if let Some((pc, pb)) = best_candidate(fwp, original_n, pocket.iter()) {
                    if pb >= target {
                        notes.push(format!(
                            "pocket piece of length {} met the balance target",
                            pc.len()
                        ));
                        let fin = shorten_cycle_to_geodesic(fwp, &pc, original_n);
                        return TradeoffCycle {
                            cycle: fin.cycle,
                            balance: fin.balance,
                            guard_ok: fin.guard_ok,
                            chained: true,
                            steps: steps + 1 + fin.steps,
                            notes,
                        };
                    }
                }
                let (rc, _) = best_candidate(fwp, original_n, rest.iter())
                    .expect("the long side always yields a shorter cycle");
                cur = rc;
                steps += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cylinder, wheel};

    fn unweighted(p: crate::embedding::PlaneGraph) -> FaceWeightedPlaneGraph {
        FaceWeightedPlaneGraph::unweighted(p)
    }

    #[test]
    fn geodesic_cycle_is_returned_unchanged() {
        let fwp = unweighted(cylinder(4, 10).unwrap());
        let ring: Vec<Vertex> = vec![16, 17, 18, 19];
        let out = shorten_cycle_to_geodesic(&fwp, &ring, 40);
        assert_eq!(out.cycle, ring);
        assert_eq!(out.steps, 0);
        assert_eq!(out.balance, Rational::new(1, 2));
    }

    #[test]
    fn wheel_rim_shortens_through_the_hub() {
        // The 8-rim of the 9-wheel is far from geodesic: the hub
        // shortcuts every window of three or more rim edges. The run
        // ends on a hub triangle.
        let fwp = unweighted(wheel(9).unwrap());
        let rim: Vec<Vertex> = (0..8).collect();
        let out = shorten_cycle_to_geodesic(&fwp, &rim, 9);
        assert_eq!(out.cycle.len(), 3);
        assert!(out.cycle.contains(&8), "final triangle uses the hub");
        assert_eq!(out.balance, Rational::new(1, 3));
        assert!(!out.guard_ok, "an 8-cycle in a 9-vertex graph is far too small for the decay guard");
        let fin = is_k_local_geodesic(fwp.plane.graph(), &out.cycle, WalkKind::Cycle, 3).unwrap();
        assert!(fin.is_none());
    }

    #[test]
    fn wiggly_cylinder_cycle_converges_to_girth() {
        // A zig-zag separating cycle across rings 4 and 5 of the
        // (4, 10)-cylinder; shortening straightens it to a ring — a
        // geodesic cycle of length 4, the circumference — in two
        // splices.
        let fwp = unweighted(cylinder(4, 10).unwrap());
        let wiggly: Vec<Vertex> = vec![16, 17, 21, 22, 18, 19, 23, 20];
        let out = shorten_cycle_to_geodesic(&fwp, &wiggly, 40);
        assert_eq!(out.cycle, vec![16, 17, 18, 19]);
        assert_eq!(out.steps, 2);
        assert_eq!(out.balance, Rational::new(1, 2));
        assert!(!out.guard_ok);
    }

    #[test]
    fn tradeoff_exits_through_the_first_balanced_pocket() {
        // With a tiny target the very first pocket (a single quad face,
        // balance 1/10) is good enough.
        let fwp = unweighted(cylinder(4, 10).unwrap());
        let wiggly: Vec<Vertex> = vec![16, 17, 21, 22, 18, 19, 23, 20];
        let out = shorten_with_split_tradeoff(&fwp, &wiggly, 4, Rational::new(1, 100), 40);
        assert!(out.chained);
        assert_eq!(out.cycle, vec![17, 18, 22, 21]);
        assert_eq!(out.balance, Rational::new(1, 10));
    }

    #[test]
    fn tradeoff_keeps_the_long_side_until_the_target_is_met() {
        // With target 1/4 the quad pocket (1/10) is skipped; the next
        // pocket is the ring itself at balance 1/2.
        let fwp = unweighted(cylinder(4, 10).unwrap());
        let wiggly: Vec<Vertex> = vec![16, 17, 21, 22, 18, 19, 23, 20];
        let out = shorten_with_split_tradeoff(&fwp, &wiggly, 4, Rational::new(1, 4), 40);
        assert!(out.chained);
        assert_eq!(out.cycle, vec![16, 17, 18, 19]);
        assert_eq!(out.balance, Rational::new(1, 2));
        assert_eq!(out.steps, 2);
    }
}
