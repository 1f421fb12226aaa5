//! Case solvers for one guessed split `⟨Z_L, Z_R⟩` of the modulator.
//!
//! Every candidate partition is first checked in the working graph against
//! the remaining budget, then lifted through the contraction trace and
//! checked again on the original graph with the original `k`.

use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicBool, Ordering};

use super::context::{apply_branching_rule_1, apply_preprocessing_rule_1, CaseContext};
use super::stats::FptStats;
use crate::certify::{check_partition, Bipartition};
use crate::graph::{Graph, Vertex, VertexSet};

pub(crate) struct Search<'a> {
    pub original: &'a Graph,
    pub k: usize,
    pub balanced: bool,
    pub stats: &'a FptStats,
    pub node_limit: Option<u64>,
    pub aborted: AtomicBool,
}

impl<'a> Search<'a> {
    pub fn new(
        original: &'a Graph,
        k: usize,
        balanced: bool,
        stats: &'a FptStats,
        node_limit: Option<u64>,
    ) -> Self {
        Search {
            original,
            k,
            balanced,
            stats,
            node_limit,
            aborted: AtomicBool::new(false),
        }
    }

    /// Counts a search node; false once the node limit has been hit.
    fn tick(&self) -> bool {
        let n = self.stats.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.node_limit.is_some_and(|limit| n > limit) {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    pub fn is_aborted(&self) -> bool {
        self.aborted.load(Ordering::Relaxed)
    }

    fn accept(
        &self,
        ctx: &CaseContext,
        left: &VertexSet,
        right: &VertexSet,
    ) -> Option<Bipartition> {
        if ctx.budget < 0 {
            return None;
        }
        FptStats::bump(&self.stats.candidates);
        let local = Bipartition::new(left.clone(), right.clone());
        let ok = check_partition(&ctx.graph, &local, ctx.budget as usize, self.balanced)
            .expect("candidate covers the working graph")
            .is_valid();
        if !ok {
            return None;
        }
        let lifted = ctx.lift(left, right);
        let verdict = check_partition(self.original, &lifted, self.k, self.balanced)
            .expect("lifted candidate covers the input graph");
        debug_assert!(
            verdict.is_valid(),
            "working-graph check disagrees after lifting"
        );
        verdict.is_valid().then_some(lifted)
    }

    /// `X ∪ Y = ∅`: the split of `Z` is the whole partition.
    pub fn case_z_only(&self, ctx: &CaseContext) -> Option<Bipartition> {
        self.accept(ctx, &ctx.z_left, &ctx.z_right)
    }

    /// `X = ∅`, `Y` on one side.
    pub fn case_1a(&self, ctx: &CaseContext) -> Option<Bipartition> {
        self.accept(ctx, &ctx.z_left, &ctx.z_right.union(&ctx.y))
    }

    /// `X = ∅`: exhaustive branching and preprocessing, then the exact
    /// terminal step. Decides every placement of `Y`, split or not.
    pub fn case_1b(&self, ctx: CaseContext) -> Option<Bipartition> {
        debug_assert!(ctx.x.is_empty());
        if !self.tick() || ctx.budget < ctx.lower_bound() as i64 {
            return None;
        }
        if let Some(v) = ctx.branching_candidate() {
            FptStats::bump(&self.stats.branching_rule);
            let (left, right) =
                apply_branching_rule_1(&ctx, v).expect("candidate satisfies the rule");
            return self.case_1b(left).or_else(|| self.case_1b(right));
        }
        let mut ctx = ctx;
        while let Some(v) = ctx.preprocessing_candidate() {
            FptStats::bump(&self.stats.preprocessing_rule);
            ctx = apply_preprocessing_rule_1(&ctx, v).expect("candidate satisfies the rule");
        }
        if ctx.budget < ctx.lower_bound() as i64 {
            return None;
        }
        self.terminal(&ctx)
    }

    /// `X` on one side (say `L`), `Y` on one side.
    pub fn case_2a(&self, ctx: &CaseContext) -> Option<Bipartition> {
        let left_x = ctx.z_left.union(&ctx.x);
        self.accept(ctx, &left_x, &ctx.z_right.union(&ctx.y))
            .or_else(|| self.accept(ctx, &left_x.union(&ctx.y), &ctx.z_right))
    }

    /// `X ⊆ L`, `Y` split: guess `y ∈ Y ∩ L`. It is adjacent to all of `X`,
    /// so `{y} ∪ X ∪ (N(y) ∩ Z_L)` is one connected piece of `L`.
    pub fn case_2b(&self, ctx: &CaseContext) -> Option<Bipartition> {
        ctx.y.iter().find_map(|y| {
            let targets = ctx
                .x
                .union(&ctx.graph.neighbors(y).intersection(&ctx.z_left));
            let mut next = ctx.clone();
            next.contract_star(y, &targets, true);
            debug_assert!(next.x.is_empty());
            self.case_1b(next)
        })
    }

    /// `X` split, `Y ⊆ R`: guess `x ∈ X ∩ R` and merge it with `Y` and its
    /// `Z_R` neighbors; the rest of `X` becomes the free set.
    pub fn case_3a(&self, ctx: &CaseContext) -> Option<Bipartition> {
        ctx.x.iter().find_map(|x| {
            let targets = ctx
                .y
                .union(&ctx.graph.neighbors(x).intersection(&ctx.z_right));
            let mut next = ctx.clone();
            next.contract_star(x, &targets, false);
            debug_assert!(next.y.is_empty());
            next.y = std::mem::take(&mut next.x);
            self.case_1b(next)
        })
    }

    fn terminal(&self, ctx: &CaseContext) -> Option<Bipartition> {
        FptStats::bump(&self.stats.terminals);
        let g = &ctx.graph;
        let (y_left, y_right): (VertexSet, VertexSet) = {
            let mut l = VertexSet::new();
            let mut r = VertexSet::new();
            for y in &ctx.y {
                if g.neighbors(y).is_subset(&ctx.z_left) {
                    l.insert(y);
                } else {
                    debug_assert!(g.neighbors(y).is_subset(&ctx.z_right));
                    r.insert(y);
                }
            }
            (l, r)
        };
        // Every free vertex beside its own side of the modulator.
        if let Some(p) = self.accept(
            ctx,
            &ctx.z_left.union(&y_left),
            &ctx.z_right.union(&y_right),
        ) {
            return Some(p);
        }
        // Otherwise some free vertex of one side sits alone on the other.
        // Then every free vertex of the other side stays home.
        for a_is_left in [true, false] {
            let (z_a, y_a, z_b, y_b) = if a_is_left {
                (&ctx.z_left, &y_left, &ctx.z_right, &y_right)
            } else {
                (&ctx.z_right, &y_right, &ctx.z_left, &y_left)
            };
            if y_a.is_empty() {
                continue;
            }
            let orient = |a: VertexSet, b: VertexSet| if a_is_left { (a, b) } else { (b, a) };
            let comps = g.components(z_a);
            let base_b = z_b.union(y_b);

            // Several components on side A: guess the block `z'` of `Z_A`
            // lying in the component of the first `Z_A` component.
            if comps.len() >= 2 {
                let p = comps.len();
                assert!(p < 64, "too many modulator components");
                for mask in (1u64..(1 << p) - 1).filter(|m| m & 1 == 1) {
                    let block: VertexSet = (0..p)
                        .filter(|i| mask >> i & 1 == 1)
                        .flat_map(|i| comps[i].iter())
                        .collect();
                    let mut stay = z_a.clone();
                    let mut leave = base_b.clone();
                    let mut any_leave = false;
                    for y in y_a {
                        let n = g.neighbors(y);
                        if n.is_subset(&block) || !n.intersects(&block) {
                            stay.insert(y);
                        } else {
                            leave.insert(y);
                            any_leave = true;
                        }
                    }
                    if !any_leave {
                        continue;
                    }
                    let (l, r) = orient(stay, leave);
                    if let Some(found) = self.accept(ctx, &l, &r) {
                        return Some(found);
                    }
                }
            }

            // Side A is a single component: pick a smallest set of free
            // vertices joining the components of `Z_A`.
            if let Some(found) = self.single_block(ctx, z_a, y_a, &base_b, &comps, &orient) {
                return Some(found);
            }
        }
        None
    }

    fn single_block(
        &self,
        ctx: &CaseContext,
        z_a: &VertexSet,
        y_a: &VertexSet,
        base_b: &VertexSet,
        comps: &[VertexSet],
        orient: &dyn Fn(VertexSet, VertexSet) -> (VertexSet, VertexSet),
    ) -> Option<Bipartition> {
        let g = &ctx.graph;
        let sf_b = g.sf_size(base_b) as i64;
        let max_s = ctx.budget - sf_b - (z_a.len() as i64 - 1);
        if max_s < 0 {
            return None;
        }
        let touches: Vec<(Vertex, u64)> = y_a
            .iter()
            .map(|y| {
                let n = g.neighbors(y);
                let m = comps
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.intersects(n))
                    .fold(0u64, |m, (i, _)| m | 1 << i);
                (y, m)
            })
            .collect();
        let mut chosen = min_connector(&touches, comps.len(), max_s as usize)?;
        if self.balanced {
            // One component on side A, so side B needs exactly one.
            let c_b = g.component_count(base_b);
            if c_b > 1 {
                return None;
            }
            let want = y_a.len() - (1 - c_b);
            if chosen.len() > want {
                return None;
            }
            for y in y_a {
                if chosen.len() == want {
                    break;
                }
                chosen.insert(y);
            }
        }
        let stay = z_a.union(&chosen);
        let leave = base_b.union(&y_a.difference(&chosen));
        let (l, r) = orient(stay, leave);
        self.accept(ctx, &l, &r)
    }
}

/// Fewest free vertices whose component masks connect all `p` components,
/// using at most `max` of them. Breadth-first over reached masks.
fn min_connector(touches: &[(Vertex, u64)], p: usize, max: usize) -> Option<VertexSet> {
    assert!(p < 64);
    let full = if p == 0 { 0 } else { (1u64 << p) - 1 };
    let start = if p == 0 { 0 } else { 1 };
    let mut parent: HashMap<u64, (u64, Vertex)> = HashMap::new();
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut seen = std::collections::HashSet::from([start]);
    while let Some((mask, depth)) = queue.pop_front() {
        if mask == full {
            let mut out = VertexSet::new();
            let mut cur = mask;
            while let Some(&(prev, y)) = parent.get(&cur) {
                out.insert(y);
                cur = prev;
            }
            return Some(out);
        }
        if depth == max {
            continue;
        }
        for &(y, t) in touches {
            if t & mask != 0 && t & !mask != 0 {
                let next = mask | t;
                if seen.insert(next) {
                    parent.insert(next, (mask, y));
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn connector_is_minimum() {
        // Components 0..4; vertex 10 touches {0,1}, 11 {1,2}, 12 {2,3}, 13 {0,1,2,3}.
        let touches = [(10, 0b0011), (11, 0b0110), (12, 0b1100), (13, 0b1111)];
        assert_eq!(min_connector(&touches, 4, 3), Some(set(&[13])));
        assert_eq!(min_connector(&touches[..3], 4, 3), Some(set(&[10, 11, 12])));
        assert_eq!(min_connector(&touches[..3], 4, 2), None);
        assert_eq!(min_connector(&[], 1, 0), Some(VertexSet::new()));
        assert_eq!(min_connector(&touches[..2], 4, 5), None);
    }
}
