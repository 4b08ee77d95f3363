//! Equality in the free double semigroup by closure under moves.
//!
//! Two terms are equal exactly when they are connected by interchange moves.
//! [`equal_exhaustive`] grows breadth-first closures from both sides and
//! stitches a certificate when they meet.

use std::collections::HashMap;

use crate::rewrite::{apply_move, enumerate_moves, invert_move, Move, ProofScript};
use crate::term::{leaf_multiset, Path, Term, TermError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A script replaying from the first term to the second.
    Equal(ProofScript),
    /// The closure of one side was exhausted without meeting the other.
    Distinct { closure_size: usize },
    /// More than `budget` distinct terms would have been visited.
    Unknown { explored: usize, budget: usize },
}

struct Node {
    term: Term,
    /// Index of the node this one was reached from and the move applied there.
    parent: Option<(usize, Move)>,
}

struct Side {
    nodes: Vec<Node>,
    index: HashMap<Term, usize>,
    frontier: Vec<usize>,
}

impl Side {
    fn new(root: &Term) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Side {
            nodes: vec![Node {
                term: root.clone(),
                parent: None,
            }],
            index,
            frontier: vec![0],
        }
    }

    /// Moves leading from the root to node `id`.
    fn moves_from_root(&self, mut id: usize) -> Vec<Move> {
        let mut moves = Vec::new();
        while let Some((parent, m)) = &self.nodes[id].parent {
            moves.push(m.clone());
            id = *parent;
        }
        moves.reverse();
        moves
    }

    /// Moves leading from node `id` back to the root.
    fn moves_to_root(&self, mut id: usize) -> Vec<Move> {
        let mut moves = Vec::new();
        while let Some((parent, m)) = &self.nodes[id].parent {
            let back = invert_move(&self.nodes[*parent].term, m).expect("recorded move is applicable");
            moves.push(back);
            id = *parent;
        }
        moves
    }
}

enum Step {
    Met { own: usize, other: usize },
    Exhausted,
    OverBudget,
    Continue,
}

/// Decides `t1 = t2` by bidirectional breadth-first search, visiting at most
/// `budget` distinct terms across both sides.
pub fn equal_exhaustive(t1: &Term, t2: &Term, budget: usize) -> Verdict {
    if t1 == t2 {
        return Verdict::Equal(ProofScript::new(t1.clone()));
    }
    if leaf_multiset(t1) != leaf_multiset(t2) {
        return Verdict::Distinct { closure_size: 1 };
    }
    let mut sides = [Side::new(t1), Side::new(t2)];
    let unknown = |explored| Verdict::Unknown { explored, budget };
    if 2 > budget {
        return unknown(2);
    }
    loop {
        let which = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        let (own, other) = if which == 0 {
            let (a, b) = sides.split_at_mut(1);
            (&mut a[0], &b[0])
        } else {
            let (a, b) = sides.split_at_mut(1);
            (&mut b[0], &a[0])
        };
        let visited_other = other.nodes.len();
        match expand(own, other, visited_other, budget) {
            Step::Continue => {}
            Step::Exhausted => {
                return Verdict::Distinct {
                    closure_size: sides[which].nodes.len(),
                }
            }
            Step::OverBudget => return unknown(sides[0].nodes.len() + sides[1].nodes.len()),
            Step::Met { own, other } => {
                let (fwd, fwd_id, bwd, bwd_id) = if which == 0 {
                    (&sides[0], own, &sides[1], other)
                } else {
                    (&sides[0], other, &sides[1], own)
                };
                let mut moves = fwd.moves_from_root(fwd_id);
                moves.extend(bwd.moves_to_root(bwd_id));
                let mut script = ProofScript::new(t1.clone());
                script.moves = moves;
                return Verdict::Equal(script);
            }
        }
    }
}

/// Expands one full breadth-first level of `own`.
fn expand(own: &mut Side, other: &Side, visited_other: usize, budget: usize) -> Step {
    if own.frontier.is_empty() {
        return Step::Exhausted;
    }
    let frontier = std::mem::take(&mut own.frontier);
    let mut next = Vec::new();
    for id in frontier {
        let term = own.nodes[id].term.clone();
        for m in enumerate_moves(&term) {
            let succ = apply_move(&term, &m).expect("enumerated move applies");
            if own.index.contains_key(&succ) {
                continue;
            }
            if let Some(&hit) = other.index.get(&succ) {
                let new_id = own.nodes.len();
                own.nodes.push(Node {
                    term: succ,
                    parent: Some((id, m)),
                });
                return Step::Met { own: new_id, other: hit };
            }
            if own.nodes.len() + visited_other + 1 > budget {
                return Step::OverBudget;
            }
            let new_id = own.nodes.len();
            own.index.insert(succ.clone(), new_id);
            own.nodes.push(Node {
                term: succ,
                parent: Some((id, m)),
            });
            next.push(new_id);
        }
    }
    own.frontier = next;
    if own.frontier.is_empty() {
        Step::Exhausted
    } else {
        Step::Continue
    }
}

/// Looks for a script from `t` to `t` with the leaves at the two paths exchanged.
///
/// Returns the verdict alongside so callers can tell `Distinct` from `Unknown`.
pub fn find_swap_proof(
    t: &Term,
    leaf_1: &Path,
    leaf_2: &Path,
    budget: usize,
) -> Result<(Option<ProofScript>, Verdict), TermError> {
    let target = t.swap_leaves(leaf_1, leaf_2)?;
    let verdict = equal_exhaustive(t, &target, budget);
    let script = match &verdict {
        Verdict::Equal(s) => Some(s.clone()),
        _ => None,
    };
    Ok((script, verdict))
}

/// Every term reachable from `t`, in breadth-first order; `None` past `limit`.
pub fn closure(t: &Term, limit: usize) -> Option<Vec<Term>> {
    let mut seen = HashMap::new();
    let mut order = vec![t.clone()];
    seen.insert(t.clone(), ());
    let mut i = 0;
    while i < order.len() {
        let cur = order[i].clone();
        for m in enumerate_moves(&cur) {
            let succ = apply_move(&cur, &m).expect("enumerated move applies");
            if seen.insert(succ.clone(), ()).is_none() {
                if order.len() >= limit {
                    return None;
                }
                order.push(succ);
            }
        }
        i += 1;
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::replay;
    use crate::term::parse_term;

    fn p(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn reflexive() {
        let t = p("(a|b)/(c|d)");
        match equal_exhaustive(&t, &t, 1) {
            Verdict::Equal(s) => assert!(s.moves.is_empty()),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn swap_in_two_by_two_is_distinct() {
        let v = equal_exhaustive(&p("(a|b)/(c|d)"), &p("(b|a)/(c|d)"), 1000);
        assert_eq!(v, Verdict::Distinct { closure_size: 2 });
    }

    #[test]
    fn different_multisets_rejected_fast() {
        assert!(matches!(
            equal_exhaustive(&p("a|b"), &p("a|c"), 1),
            Verdict::Distinct { .. }
        ));
    }

    #[test]
    fn one_step_equality_has_a_certificate() {
        let t1 = p("(a|b)/(c|d)");
        let t2 = p("(a/c)|(b/d)");
        match equal_exhaustive(&t1, &t2, 10) {
            Verdict::Equal(s) => assert_eq!(replay(&s).unwrap().last().unwrap(), &t2),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn longer_certificates_replay() {
        let t1 = p("(a|b|c)/(d|e|f)/(g|h|i)");
        let t2 = p("(a/d/g)|(b/e/h)|(c/f/i)");
        match equal_exhaustive(&t1, &t2, 100_000) {
            Verdict::Equal(s) => {
                assert!(!s.moves.is_empty());
                assert_eq!(replay(&s).unwrap().last().unwrap(), &t2);
            }
            v => panic!("{v:?}"),
        }
        match equal_exhaustive(&t2, &t1, 100_000) {
            Verdict::Equal(s) => assert_eq!(replay(&s).unwrap().last().unwrap(), &t1),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let t1 = p("(a|b|c)/(d|e|f)/(g|h|i)");
        let t2 = p("(a/d/g)|(b/e/h)|(c/f/i)");
        assert!(matches!(equal_exhaustive(&t1, &t2, 3), Verdict::Unknown { budget: 3, .. }));
    }

    #[test]
    fn swap_proofs() {
        let t = p("(a|b)/(c|d)");
        let (script, verdict) = find_swap_proof(&t, &Path(vec![1, 1]), &Path(vec![1, 2]), 100).unwrap();
        assert!(script.is_none());
        assert_eq!(verdict, Verdict::Distinct { closure_size: 2 });

        let same = p("(a|a)/(c|d)");
        let (script, _) = find_swap_proof(&same, &Path(vec![1, 1]), &Path(vec![1, 2]), 1).unwrap();
        assert_eq!(script.unwrap().moves, vec![]);

        assert!(find_swap_proof(&t, &Path(vec![1]), &Path(vec![2, 1]), 10).is_err());
    }

    #[test]
    fn closure_of_two_by_two() {
        let c = closure(&p("(a|b)/(c|d)"), 100).unwrap();
        assert_eq!(c, vec![p("(a|b)/(c|d)"), p("(a/c)|(b/d)")]);
        assert!(closure(&p("(a|b)/(c|d)"), 1).is_none());
    }
}
