//! Dominant sets, the top cycle and related structure of a majority relation.

use crate::majority::MajorityRelation;
use crate::set::ChoiceSet;

/// Every member of `set` strictly beats every non-member. `A` is always dominant.
pub fn is_dominant(rel: &MajorityRelation, set: ChoiceSet) -> bool {
    debug_assert!(!set.is_empty());
    rel.set_beats(set, set.complement(rel.m()))
}

/// Alternatives reachable from `x` along `≿` edges without leaving `domain`
/// (including `x` itself).
fn weak_reach(rel: &MajorityRelation, x: usize, domain: ChoiceSet) -> ChoiceSet {
    let mut seen = ChoiceSet::singleton(x);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = ChoiceSet::EMPTY;
        for y in frontier.iter() {
            next = next.union(rel.weak_successors(y));
        }
        frontier = next.intersection(domain).difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

fn strict_reach(rel: &MajorityRelation, x: usize, domain: ChoiceSet) -> ChoiceSet {
    let mut seen = ChoiceSet::EMPTY;
    let mut frontier = ChoiceSet::singleton(x);
    while !frontier.is_empty() {
        let mut next = ChoiceSet::EMPTY;
        for y in frontier.iter() {
            next = next.union(rel.dominion(y));
        }
        frontier = next.intersection(domain).difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// Top cycle of the relation restricted to `domain`: the members that reach
/// every other member of `domain` through `≿` (ties usable both ways).
pub fn top_cycle_within(rel: &MajorityRelation, domain: ChoiceSet) -> ChoiceSet {
    domain.iter().filter(|&x| domain.is_subset(weak_reach(rel, x, domain))).collect()
}

/// The ⊆-minimal dominant set, computed as the maximal elements of the
/// transitive closure of `≿`.
pub fn top_cycle(rel: &MajorityRelation) -> ChoiceSet {
    top_cycle_within(rel, rel.alternatives())
}

/// Schwartz set on `domain`: maximal elements of the transitive closure of `≻`.
pub fn schwartz_set_within(rel: &MajorityRelation, domain: ChoiceSet) -> ChoiceSet {
    let reach: Vec<(usize, ChoiceSet)> = domain.iter().map(|x| (x, strict_reach(rel, x, domain))).collect();
    domain
        .iter()
        .filter(|&x| {
            let own = reach.iter().find(|(y, _)| *y == x).unwrap().1;
            reach.iter().all(|&(y, r)| !r.contains(x) || own.contains(y))
        })
        .collect()
}

pub fn schwartz_set(rel: &MajorityRelation) -> ChoiceSet {
    schwartz_set_within(rel, rel.alternatives())
}

/// All dominant sets in strictly increasing order; the first is the top cycle
/// and the last is `A`.
pub fn dominant_chain(rel: &MajorityRelation) -> Vec<ChoiceSet> {
    let all = rel.alternatives();
    let mut chain = Vec::new();
    let mut covered = ChoiceSet::EMPTY;
    while covered != all {
        let rest = all.difference(covered);
        covered = covered.union(top_cycle_within(rel, rest));
        chain.push(covered);
    }
    chain
}

/// A relation restricted to a subset, with alternatives renumbered densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub relation: MajorityRelation,
    /// `members[i]` is the original index of restricted alternative `i`.
    pub members: Vec<usize>,
}

impl Restriction {
    /// Maps a set over the restricted indices back to original indices.
    pub fn lift(&self, set: ChoiceSet) -> ChoiceSet {
        set.iter().map(|i| self.members[i]).collect()
    }
}

pub fn restrict(rel: &MajorityRelation, subset: ChoiceSet) -> Restriction {
    assert!(!subset.is_empty(), "restriction to the empty set");
    let members: Vec<usize> = subset.iter().collect();
    let relation = MajorityRelation::from_weak(members.len(), |i, j| rel.weakly(members[i], members[j]));
    Restriction { relation, members }
}

/// Connected set `A_x`: members of the top cycle that drop out of it when `x`
/// is removed (excluding `x` itself). Empty when `x` is not a connector.
pub fn connected_set(rel: &MajorityRelation, x: usize) -> ChoiceSet {
    let all = rel.alternatives();
    if rel.m() <= 1 {
        return ChoiceSet::EMPTY;
    }
    let tc = top_cycle(rel);
    if !tc.contains(x) {
        return ChoiceSet::EMPTY;
    }
    let reduced = top_cycle_within(rel, all.without(x));
    tc.difference(reduced.with(x))
}

/// A Hamiltonian cycle of the top cycle inside `≿`, or `None` when the top
/// cycle is a single Condorcet winner.
///
/// Starts from any cycle inside the top cycle and grows it one or two
/// alternatives at a time: an outside alternative `z` is spliced between
/// consecutive `a_k ≿ z ≿ a_{k+1}`; if no such `z` exists, the outside
/// alternatives split into those beating the whole cycle and those beaten by
/// it, and a pair `x2 ≿ x1` across the split is spliced after `a_1`.
pub fn covering_cycle(rel: &MajorityRelation) -> Option<Vec<usize>> {
    let tc = top_cycle(rel);
    if tc.len() < 2 {
        return None;
    }
    let mut cycle = initial_cycle(rel, tc);
    loop {
        let on_cycle: ChoiceSet = cycle.iter().copied().collect();
        let outside = tc.difference(on_cycle);
        if outside.is_empty() {
            return Some(cycle);
        }
        if let Some((pos, z)) = single_insertion(rel, &cycle, outside) {
            cycle.insert(pos + 1, z);
            continue;
        }
        let above: ChoiceSet = outside.iter().filter(|&z| rel.set_beats(ChoiceSet::singleton(z), on_cycle)).collect();
        let below = outside.difference(above);
        let (x2, x1) = below
            .iter()
            .find_map(|x2| above.iter().find(|&x1| rel.weakly(x2, x1)).map(|x1| (x2, x1)))
            .expect("top cycle admits a back edge from below the cycle to above it");
        // a_1 ≻ x2 ≿ x1 ≻ a_2
        cycle.splice(1..1, [x2, x1]);
    }
}

fn single_insertion(rel: &MajorityRelation, cycle: &[usize], outside: ChoiceSet) -> Option<(usize, usize)> {
    let len = cycle.len();
    outside.iter().find_map(|z| {
        (0..len)
            .find(|&k| rel.weakly(cycle[k], z) && rel.weakly(z, cycle[(k + 1) % len]))
            .map(|k| (k, z))
    })
}

/// Some simple cycle inside `tc` through its smallest member.
fn initial_cycle(rel: &MajorityRelation, tc: ChoiceSet) -> Vec<usize> {
    let start = tc.first().unwrap();
    // Some other top-cycle member weakly beats `start`, otherwise `start`
    // would be a Condorcet winner.
    let back = tc
        .without(start)
        .iter()
        .find(|&y| rel.weakly(y, start))
        .expect("no Condorcet winner inside a top cycle of size >= 2");
    let mut parent = vec![usize::MAX; rel.m()];
    let mut seen = ChoiceSet::singleton(start);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u == back {
            break;
        }
        for v in rel.weak_successors(u).intersection(tc).difference(seen).iter() {
            seen = seen.with(v);
            parent[v] = u;
            queue.push_back(v);
        }
    }
    let mut path = vec![back];
    while *path.last().unwrap() != start {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// Checks that `cycle` visits each member of `set` exactly once and that
/// consecutive entries (wrapping around) satisfy `≿`.
pub fn is_covering_cycle(rel: &MajorityRelation, cycle: &[usize], set: ChoiceSet) -> bool {
    let visited: ChoiceSet = cycle.iter().copied().collect();
    visited == set
        && visited.len() == cycle.len()
        && cycle.len() >= 2
        && (0..cycle.len()).all(|k| rel.weakly(cycle[k], cycle[(k + 1) % cycle.len()]))
}
