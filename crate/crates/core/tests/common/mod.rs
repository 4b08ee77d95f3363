//! Independent reference implementations used by the integration tests.
//!
//! Nothing here goes through the library's smart constructors or move
//! machinery: terms are built as raw `Term::H`/`Term::V` nodes and the
//! one-step relation is computed on binary bracketings.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::Rng;
use tileproof::{Label, Term};

pub fn label(s: &str) -> Label {
    Label::new(s).unwrap()
}

pub fn labels(names: &[&str]) -> Vec<Label> {
    names.iter().map(|s| label(s)).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    H,
    V,
}

/// Ways to cut `0..n` into `k >= 2` nonempty contiguous blocks.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if acc.len() >= 2 {
                out.push(acc.clone());
            }
            return;
        }
        for first in 1..=rest {
            acc.push(first);
            go(rest - first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

fn rooted(dir: Dir, seq: &[Label]) -> Vec<Term> {
    let mut out = Vec::new();
    for comp in compositions(seq.len()) {
        let mut parts: Vec<Vec<Term>> = vec![Vec::new()];
        let mut at = 0;
        for len in comp {
            let block = &seq[at..at + len];
            at += len;
            let options = not_rooted(dir, block);
            parts = parts
                .into_iter()
                .flat_map(|p| {
                    options.iter().map(move |o| {
                        let mut q = p.clone();
                        q.push(o.clone());
                        q
                    })
                })
                .collect();
        }
        for children in parts {
            out.push(match dir {
                Dir::H => Term::H(children),
                Dir::V => Term::V(children),
            });
        }
    }
    out
}

fn not_rooted(dir: Dir, seq: &[Label]) -> Vec<Term> {
    if seq.len() == 1 {
        return vec![Term::Leaf(seq[0].clone())];
    }
    rooted(if dir == Dir::H { Dir::V } else { Dir::H }, seq)
}

/// Every flattened term whose leaves, read depth-first, are `seq`.
pub fn all_shapes(seq: &[Label]) -> Vec<Term> {
    if seq.len() == 1 {
        return vec![Term::Leaf(seq[0].clone())];
    }
    let mut out = rooted(Dir::H, seq);
    out.extend(rooted(Dir::V, seq));
    out
}

/// Every flattened term over the given leaf multiset (all orderings).
pub fn all_terms_over(multiset: &[Label]) -> Vec<Term> {
    let mut seqs = BTreeSet::new();
    permutations(multiset.to_vec(), 0, &mut seqs);
    seqs.into_iter().flat_map(|s| all_shapes(&s)).collect()
}

fn permutations(mut v: Vec<Label>, k: usize, out: &mut BTreeSet<Vec<Label>>) {
    if k == v.len() {
        out.insert(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v.clone(), k + 1, out);
        v.swap(k, i);
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Bin {
    Leaf(Label),
    Node(Dir, Box<Bin>, Box<Bin>),
}

fn bracketings(dir: Dir, kids: &[Vec<Bin>]) -> Vec<Bin> {
    if kids.len() == 1 {
        return kids[0].clone();
    }
    let mut out = Vec::new();
    for cut in 1..kids.len() {
        let left = bracketings(dir, &kids[..cut]);
        let right = bracketings(dir, &kids[cut..]);
        for l in &left {
            for r in &right {
                out.push(Bin::Node(dir, Box::new(l.clone()), Box::new(r.clone())));
            }
        }
    }
    out
}

fn unflatten(t: &Term) -> Vec<Bin> {
    match t {
        Term::Leaf(l) => vec![Bin::Leaf(l.clone())],
        Term::H(cs) => bracketings(Dir::H, &cs.iter().map(unflatten).collect::<Vec<_>>()),
        Term::V(cs) => bracketings(Dir::V, &cs.iter().map(unflatten).collect::<Vec<_>>()),
    }
}

fn flatten(b: &Bin) -> Term {
    fn collect(b: &Bin, dir: Dir, out: &mut Vec<Term>) {
        match b {
            Bin::Node(d, l, r) if *d == dir => {
                collect(l, dir, out);
                collect(r, dir, out);
            }
            other => out.push(flatten(other)),
        }
    }
    match b {
        Bin::Leaf(l) => Term::Leaf(l.clone()),
        Bin::Node(dir, _, _) => {
            let mut kids = Vec::new();
            collect(b, *dir, &mut kids);
            match dir {
                Dir::H => Term::H(kids),
                Dir::V => Term::V(kids),
            }
        }
    }
}

/// `(x o y) p (z o w)  ->  (x p z) o (y p w)` wherever it matches.
fn rewrites(b: &Bin, out: &mut Vec<Bin>) {
    if let Bin::Node(outer, l, r) = b {
        if let (Bin::Node(il, x, y), Bin::Node(ir, z, w)) = (l.as_ref(), r.as_ref()) {
            if il == ir && il != outer {
                out.push(Bin::Node(
                    *il,
                    Box::new(Bin::Node(*outer, x.clone(), z.clone())),
                    Box::new(Bin::Node(*outer, y.clone(), w.clone())),
                ));
            }
        }
        let mut left = Vec::new();
        rewrites(l, &mut left);
        for nl in left {
            out.push(Bin::Node(*outer, Box::new(nl), r.clone()));
        }
        let mut right = Vec::new();
        rewrites(r, &mut right);
        for nr in right {
            out.push(Bin::Node(*outer, l.clone(), Box::new(nr)));
        }
    }
}

/// One-step interchange neighbours of `t`, excluding `t` itself, keyed by [`show`].
pub fn oracle_step(t: &Term) -> BTreeMap<String, Term> {
    let mut out = BTreeMap::new();
    for b in unflatten(t) {
        let mut next = Vec::new();
        rewrites(&b, &mut next);
        for n in next {
            let f = flatten(&n);
            if &f != t {
                out.insert(show(&f), f);
            }
        }
    }
    out
}

pub fn oracle_neighbours(t: &Term) -> BTreeSet<String> {
    oracle_step(t).into_keys().collect()
}

/// Size of the set reachable from `t` under the oracle relation.
pub fn oracle_closure_size(t: &Term) -> usize {
    let mut seen = BTreeSet::from([show(t)]);
    let mut frontier = vec![t.clone()];
    while let Some(u) = frontier.pop() {
        for (key, n) in oracle_step(&u) {
            if seen.insert(key) {
                frontier.push(n);
            }
        }
    }
    seen.len()
}

/// Canonical text for a raw term, independent of the library printer.
pub fn show(t: &Term) -> String {
    match t {
        Term::Leaf(l) => l.as_str().to_string(),
        Term::H(cs) => format!("H({})", cs.iter().map(show).collect::<Vec<_>>().join(",")),
        Term::V(cs) => format!("V({})", cs.iter().map(show).collect::<Vec<_>>().join(",")),
    }
}

/// Equivalence classes of `terms` under the oracle relation.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let p = self.parent[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.parent[x] = r;
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Class representative for each term, connecting oracle neighbours.
pub fn oracle_classes(terms: &[Term]) -> Vec<usize> {
    let index: HashMap<String, usize> = terms.iter().enumerate().map(|(i, t)| (show(t), i)).collect();
    let mut uf = UnionFind::new(terms.len());
    for (i, t) in terms.iter().enumerate() {
        for n in oracle_neighbours(t) {
            uf.union(i, index[&n]);
        }
    }
    (0..terms.len()).map(|i| uf.find(i)).collect()
}

/// Random flattened term with `1..=max_leaves` leaves drawn from `alphabet`.
pub fn random_term<R: Rng>(rng: &mut R, max_leaves: usize, alphabet: &[Label]) -> Term {
    let n = rng.gen_range(1..=max_leaves);
    random_sized(rng, n, alphabet)
}

fn random_sized<R: Rng>(rng: &mut R, n: usize, alphabet: &[Label]) -> Term {
    if n == 1 {
        return Term::Leaf(alphabet[rng.gen_range(0..alphabet.len())].clone());
    }
    let cut = rng.gen_range(1..n);
    let l = random_sized(rng, cut, alphabet);
    let r = random_sized(rng, n - cut, alphabet);
    if rng.gen_bool(0.5) {
        Term::h(vec![l, r])
    } else {
        Term::v(vec![l, r])
    }
}
