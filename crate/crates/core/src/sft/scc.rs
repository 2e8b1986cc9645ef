use std::collections::VecDeque;

use num_integer::Integer;

use super::system::TransitionSystem;

/// A strongly connected component of a transition system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// State indices, ascending.
    pub states: Vec<usize>,
    /// More than one state, or a single state with a self-loop.
    pub nontrivial: bool,
}

impl Component {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

const UNVISITED: u32 = u32::MAX;

/// Tarjan's algorithm, iterative. Components come out in topological order
/// of the condensation (sources first).
pub fn sccs(ts: &TransitionSystem) -> Vec<Component> {
    let n = ts.state_count();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    let mut next_index = 0u32;
    // (node, successors already tried)
    let mut call: Vec<(usize, u8)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut tried)) = call.last_mut() {
            if *tried < 2 {
                let slot = *tried as usize;
                *tried += 1;
                let Some(w) = ts.successor_pair(v)[slot] else {
                    continue;
                };
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut states = Vec::new();
                loop {
                    let x = stack.pop().expect("tarjan stack");
                    on_stack[x] = false;
                    states.push(x);
                    if x == v {
                        break;
                    }
                }
                states.sort_unstable();
                let nontrivial = states.len() > 1 || ts.successors(v).any(|s| s == v);
                out.push(Component { states, nontrivial });
            }
        }
    }
    out.reverse();
    out
}

/// gcd of the cycle lengths inside a nontrivial component.
pub fn period(ts: &TransitionSystem, comp: &Component) -> usize {
    let n = ts.state_count();
    let mut member = vec![false; n];
    for &s in &comp.states {
        member[s] = true;
    }
    let mut dist = vec![usize::MAX; n];
    let root = comp.states[0];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut g = 0usize;
    while let Some(v) = queue.pop_front() {
        for w in ts.successors(v) {
            if !member[w] {
                continue;
            }
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            } else {
                g = g.gcd(&(dist[v] + 1).abs_diff(dist[w]));
            }
        }
    }
    g
}

/// Exactly one nontrivial component, and it is aperiodic. States outside it
/// are transient (on no cycle).
pub fn is_primitive(ts: &TransitionSystem) -> bool {
    let comps = sccs(ts);
    let mut nontrivial = comps.iter().filter(|c| c.nontrivial);
    match (nontrivial.next(), nontrivial.next()) {
        (Some(c), None) => period(ts, c) == 1,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sft::build_sft;
    use crate::word::w;

    #[test]
    fn two_cycle_component() {
        let ts = build_sft(&w("01")).unwrap();
        let comps = sccs(&ts);
        assert_eq!(comps.len(), 1);
        assert!(comps[0].nontrivial);
        assert_eq!(comps[0].len(), 2);
        assert_eq!(period(&ts, &comps[0]), 2);
        assert!(!is_primitive(&ts));
    }

    #[test]
    fn golden_is_strongly_connected_and_primitive() {
        let ts = build_sft(&w("001")).unwrap();
        let comps = sccs(&ts);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 6);
        assert!(is_primitive(&ts));
    }

    #[test]
    fn topological_order() {
        let ts = build_sft(&w("00011")).unwrap();
        let comps = sccs(&ts);
        let mut position = vec![0; ts.state_count()];
        for (k, c) in comps.iter().enumerate() {
            for &s in &c.states {
                position[s] = k;
            }
        }
        for (a, b) in ts.edges() {
            assert!(position[a] <= position[b]);
        }
    }

    #[test]
    fn periodic_orbit_of_the_word_is_its_own_component() {
        // (000111)^∞ sits in a 6-cycle apart from the golden core
        let ts = build_sft(&w("000111")).unwrap();
        let nontrivial: Vec<_> = sccs(&ts).into_iter().filter(|c| c.nontrivial).collect();
        assert_eq!(nontrivial.len(), 2);
        let mut sizes: Vec<_> = nontrivial.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, [6, 26]);
        assert!(!is_primitive(&ts));
    }
}
