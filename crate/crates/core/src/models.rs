//! Finite double semigroups as pairs of Cayley tables.
//!
//! Elements are `0..n`. `h(x, y)` is `x *_h y` and `v(x, y)` is `x *_v y`,
//! where `v` composes top over bottom.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest order the enumerator accepts at all.
pub const HARD_MAX_ORDER: usize = 4;
/// Order cap used when nothing else is configured.
pub const DEFAULT_MAX_ORDER: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("carrier size must be at least 1")]
    EmptyCarrier,
    #[error("table {table} has wrong shape: expected {n}x{n}")]
    BadShape { table: &'static str, n: usize },
    #[error("table {table} entry at ({x},{y}) is {value}, outside 0..{n}")]
    EntryOutOfRange {
        table: &'static str,
        x: usize,
        y: usize,
        value: usize,
        n: usize,
    },
    #[error("not a double semigroup: {0}")]
    NotDoubleSemigroup(AxiomReport),
    #[error("inverse maps violate {identity} in the {op} operation at x={x}, y={y}")]
    InverseAxiom {
        op: Op,
        identity: &'static str,
        x: usize,
        y: usize,
    },
    #[error("order {n} outside the configured range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    H,
    V,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::H => "horizontal",
            Op::V => "vertical",
        })
    }
}

/// A carrier with two multiplication tables, entries range-checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyPair {
    n: usize,
    h: Vec<usize>,
    v: Vec<usize>,
}

impl CayleyPair {
    pub fn new(n: usize, h: Vec<Vec<usize>>, v: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        let flatten = |table: &'static str, rows: Vec<Vec<usize>>| {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(ModelError::BadShape { table, n });
            }
            Ok(rows.into_iter().flatten().collect::<Vec<_>>())
        };
        if n == 0 {
            return Err(ModelError::EmptyCarrier);
        }
        let h = flatten("h", h)?;
        let v = flatten("v", v)?;
        Self::from_flat(n, h, v)
    }

    /// Tables given row-major as flat vectors of length `n * n`.
    pub fn from_flat(n: usize, h: Vec<usize>, v: Vec<usize>) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::EmptyCarrier);
        }
        for (table, data) in [("h", &h), ("v", &v)] {
            if data.len() != n * n {
                return Err(ModelError::BadShape { table, n });
            }
            if let Some(i) = data.iter().position(|&e| e >= n) {
                return Err(ModelError::EntryOutOfRange {
                    table,
                    x: i / n,
                    y: i % n,
                    value: data[i],
                    n,
                });
            }
        }
        Ok(CayleyPair { n, h, v })
    }

    /// Both operations `x * y = x`.
    pub fn k_combinator(n: usize) -> Self {
        let t: Vec<usize> = (0..n * n).map(|i| i / n).collect();
        CayleyPair { n, h: t.clone(), v: t }
    }

    /// Both operations addition mod `n`.
    pub fn cyclic_group(n: usize) -> Self {
        let t: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        CayleyPair { n, h: t.clone(), v: t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn h(&self, x: usize, y: usize) -> usize {
        self.h[x * self.n + y]
    }

    #[inline]
    pub fn v(&self, x: usize, y: usize) -> usize {
        self.v[x * self.n + y]
    }

    #[inline]
    pub fn op(&self, op: Op, x: usize, y: usize) -> usize {
        match op {
            Op::H => self.h(x, y),
            Op::V => self.v(x, y),
        }
    }

    pub fn table(&self, op: Op) -> Vec<Vec<usize>> {
        let flat = match op {
            Op::H => &self.h,
            Op::V => &self.v,
        };
        flat.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// The same carrier with the two operations exchanged.
    pub fn transposed(&self) -> Self {
        CayleyPair {
            n: self.n,
            h: self.v.clone(),
            v: self.h.clone(),
        }
    }
}

/// First failing instance of each axiom, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub assoc_h: Option<[usize; 3]>,
    pub assoc_v: Option<[usize; 3]>,
    pub interchange: Option<[usize; 4]>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.assoc_h.is_none() && self.assoc_v.is_none() && self.interchange.is_none()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some([x, y, z]) = self.assoc_h {
            parts.push(format!("horizontal associativity fails at ({x},{y},{z})"));
        }
        if let Some([x, y, z]) = self.assoc_v {
            parts.push(format!("vertical associativity fails at ({x},{y},{z})"));
        }
        if let Some([x, y, z, w]) = self.interchange {
            parts.push(format!("interchange fails at ({x},{y},{z},{w})"));
        }
        if parts.is_empty() {
            f.write_str("all axioms hold")
        } else {
            f.write_str(&parts.join("; "))
        }
    }
}

fn first_assoc_failure(m: &CayleyPair, op: Op) -> Option<[usize; 3]> {
    let n = m.n;
    for x in 0..n {
        for y in 0..n {
            let xy = m.op(op, x, y);
            for z in 0..n {
                if m.op(op, xy, z) != m.op(op, x, m.op(op, y, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

fn first_interchange_failure(m: &CayleyPair) -> Option<[usize; 4]> {
    let n = m.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    if m.v(m.h(x, y), m.h(z, w)) != m.h(m.v(x, z), m.v(y, w)) {
                        return Some([x, y, z, w]);
                    }
                }
            }
        }
    }
    None
}

/// Exhaustive check of both associativity laws and the interchange law.
pub fn check_axioms(m: &CayleyPair) -> AxiomReport {
    AxiomReport {
        assoc_h: first_assoc_failure(m, Op::H),
        assoc_v: first_assoc_failure(m, Op::V),
        interchange: first_interchange_failure(m),
    }
}

fn require_axioms(m: &CayleyPair) -> Result<(), ModelError> {
    let report = check_axioms(m);
    if report.passes() {
        Ok(())
    } else {
        Err(ModelError::NotDoubleSemigroup(report))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Commutativity {
    pub comm_h: bool,
    pub comm_v: bool,
    pub ops_coincide: bool,
}

impl Commutativity {
    pub fn both(&self) -> bool {
        self.comm_h && self.comm_v
    }
}

fn commutative_op(m: &CayleyPair, op: Op) -> bool {
    (0..m.n).all(|x| (0..m.n).all(|y| m.op(op, x, y) == m.op(op, y, x)))
}

fn commutativity_of(m: &CayleyPair) -> Commutativity {
    Commutativity {
        comm_h: commutative_op(m, Op::H),
        comm_v: commutative_op(m, Op::V),
        ops_coincide: m.h == m.v,
    }
}

pub fn is_commutative(m: &CayleyPair) -> Result<Commutativity, ModelError> {
    require_axioms(m)?;
    Ok(commutativity_of(m))
}

/// Multiplication by `c` on all four sides is injective.
fn cancellable(m: &CayleyPair, c: usize) -> bool {
    let n = m.n;
    let injective = |f: &dyn Fn(usize) -> usize| {
        let mut seen = vec![false; n];
        (0..n).all(|x| !std::mem::replace(&mut seen[f(x)], true))
    };
    injective(&|x| m.h(x, c))
        && injective(&|x| m.h(c, x))
        && injective(&|x| m.v(x, c))
        && injective(&|x| m.v(c, x))
}

fn cancellative(m: &CayleyPair) -> bool {
    (0..m.n).all(|c| cancellable(m, c))
}

pub fn is_cancellative(m: &CayleyPair) -> Result<bool, ModelError> {
    require_axioms(m)?;
    Ok(cancellative(m))
}

/// Distinct powers `c, c*c, c*c*c, ...` under one operation.
fn powers(m: &CayleyPair, op: Op, c: usize) -> Vec<usize> {
    let mut out = vec![c];
    let mut p = c;
    loop {
        p = m.op(op, p, c);
        if out.contains(&p) {
            return out;
        }
        out.push(p);
    }
}

fn bicancellable(m: &CayleyPair) -> Option<usize> {
    (0..m.n).find(|&c| {
        powers(m, Op::H, c)
            .into_iter()
            .chain(powers(m, Op::V, c))
            .all(|p| cancellable(m, p))
    })
}

/// Least element that is cancellable together with all its horizontal and
/// vertical powers.
pub fn has_bicancellable_element(m: &CayleyPair) -> Result<Option<usize>, ModelError> {
    require_axioms(m)?;
    Ok(bicancellable(m))
}

/// Unique semigroup inverses for both operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseStructure {
    pub inv_h: Vec<usize>,
    pub inv_v: Vec<usize>,
}

fn unique_inverses(m: &CayleyPair, op: Op) -> Option<Vec<usize>> {
    let n = m.n;
    (0..n)
        .map(|x| {
            let mut found = (0..n).filter(|&y| {
                m.op(op, m.op(op, x, y), x) == x && m.op(op, m.op(op, y, x), y) == y
            });
            match (found.next(), found.next()) {
                (Some(y), None) => Some(y),
                _ => None,
            }
        })
        .collect()
}

/// Checks `(xy)^-1 = y^-1 x^-1` and `x x^-1 y y^-1 = y y^-1 x x^-1`.
fn check_inverse_axioms(m: &CayleyPair, op: Op, inv: &[usize]) -> Result<(), ModelError> {
    let mul = |a, b| m.op(op, a, b);
    for x in 0..m.n {
        for y in 0..m.n {
            if inv[mul(x, y)] != mul(inv[y], inv[x]) {
                return Err(ModelError::InverseAxiom {
                    op,
                    identity: "(xy)^-1 = y^-1 x^-1",
                    x,
                    y,
                });
            }
            let ex = mul(x, inv[x]);
            let ey = mul(y, inv[y]);
            if mul(ex, ey) != mul(ey, ex) {
                return Err(ModelError::InverseAxiom {
                    op,
                    identity: "x x^-1 y y^-1 = y y^-1 x x^-1",
                    x,
                    y,
                });
            }
        }
    }
    Ok(())
}

fn inverse_of(m: &CayleyPair) -> Result<Option<InverseStructure>, ModelError> {
    let (Some(inv_h), Some(inv_v)) = (unique_inverses(m, Op::H), unique_inverses(m, Op::V)) else {
        return Ok(None);
    };
    check_inverse_axioms(m, Op::H, &inv_h)?;
    check_inverse_axioms(m, Op::V, &inv_v)?;
    Ok(Some(InverseStructure { inv_h, inv_v }))
}

/// Both inverse maps when every element has exactly one inverse under each
/// operation. A violation of the inverse-semigroup identities by the
/// computed maps is reported as an error.
pub fn inverse_structure(m: &CayleyPair) -> Result<Option<InverseStructure>, ModelError> {
    require_axioms(m)?;
    inverse_of(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Units {
    pub unit_h: Option<usize>,
    pub unit_v: Option<usize>,
}

fn unit(m: &CayleyPair, op: Op) -> Option<usize> {
    (0..m.n).find(|&e| (0..m.n).all(|x| m.op(op, e, x) == x && m.op(op, x, e) == x))
}

fn units_of(m: &CayleyPair) -> Units {
    Units {
        unit_h: unit(m, Op::H),
        unit_v: unit(m, Op::V),
    }
}

pub fn unit_report(m: &CayleyPair) -> Result<Units, ModelError> {
    require_axioms(m)?;
    Ok(units_of(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Constraint {
    /// Both operations commutative.
    Commutative,
    Cancellative,
    /// Both operations are inverse semigroups.
    Inverse,
    /// Both operations have a two-sided unit.
    Unital,
}

impl Constraint {
    pub const ALL: [Constraint; 4] = [
        Constraint::Commutative,
        Constraint::Cancellative,
        Constraint::Inverse,
        Constraint::Unital,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constraint::Commutative => "commutative",
            Constraint::Cancellative => "cancellative",
            Constraint::Inverse => "inverse",
            Constraint::Unital => "unital",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Assumes `m` is a double semigroup.
    pub fn holds(self, m: &CayleyPair) -> bool {
        match self {
            Constraint::Commutative => commutativity_of(m).both(),
            Constraint::Cancellative => cancellative(m),
            Constraint::Inverse => matches!(inverse_of(m), Ok(Some(_))),
            Constraint::Unital => {
                let u = units_of(m);
                u.unit_h.is_some() && u.unit_v.is_some()
            }
        }
    }
}

/// Upper bound on the order the enumerator will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderLimit(usize);

impl OrderLimit {
    pub fn new(max: usize) -> Result<Self, ModelError> {
        if (1..=HARD_MAX_ORDER).contains(&max) {
            Ok(OrderLimit(max))
        } else {
            Err(ModelError::OrderOutOfRange {
                n: max,
                max: HARD_MAX_ORDER,
            })
        }
    }

    pub fn max(self) -> usize {
        self.0
    }

    fn check(self, n: usize) -> Result<(), ModelError> {
        if (1..=self.0).contains(&n) {
            Ok(())
        } else {
            Err(ModelError::OrderOutOfRange { n, max: self.0 })
        }
    }
}

impl Default for OrderLimit {
    fn default() -> Self {
        OrderLimit(DEFAULT_MAX_ORDER)
    }
}

/// All labeled double semigroups of order `n` satisfying `constraints`, in
/// lexicographic order of `(h, v)` read row-major.
pub fn enumerate_models(
    n: usize,
    constraints: &[Constraint],
    limit: OrderLimit,
) -> Result<ModelStream, ModelError> {
    limit.check(n)?;
    Ok(ModelStream::new(n, constraints.to_vec()))
}

/// Backtracking search over table cells: all of `h`, then all of `v`.
/// Associativity and interchange are checked as soon as every entry an
/// instance mentions is assigned.
pub struct ModelStream {
    n: usize,
    cells: Vec<Option<usize>>,
    pos: usize,
    started: bool,
    done: bool,
    constraints: Vec<Constraint>,
}

impl ModelStream {
    fn new(n: usize, constraints: Vec<Constraint>) -> Self {
        ModelStream {
            n,
            cells: vec![None; 2 * n * n],
            pos: 0,
            started: false,
            done: false,
            constraints,
        }
    }

    fn get(&self, op: Op, x: usize, y: usize) -> Option<usize> {
        let base = match op {
            Op::H => 0,
            Op::V => self.n * self.n,
        };
        self.cells[base + x * self.n + y]
    }

    fn assoc_ok(&self, op: Op) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(op, x, y) else { continue };
                for z in 0..n {
                    let (Some(l), Some(yz)) = (self.get(op, xy, z), self.get(op, y, z)) else {
                        continue;
                    };
                    if let Some(r) = self.get(op, x, yz) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn interchange_ok(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let hxy = self.get(Op::H, x, y).expect("h complete");
                for z in 0..n {
                    let Some(vxz) = self.get(Op::V, x, z) else { continue };
                    for w in 0..n {
                        let hzw = self.get(Op::H, z, w).expect("h complete");
                        let (Some(l), Some(vyw)) = (self.get(Op::V, hxy, hzw), self.get(Op::V, y, w)) else {
                            continue;
                        };
                        if l != self.get(Op::H, vxz, vyw).expect("h complete") {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn consistent(&self, pos: usize) -> bool {
        if pos < self.n * self.n {
            self.assoc_ok(Op::H)
        } else {
            self.assoc_ok(Op::V) && self.interchange_ok()
        }
    }

    /// Advances to the next complete consistent assignment.
    fn advance(&mut self) -> bool {
        let len = self.cells.len();
        if self.started {
            // resume from the last cell of the previous solution
            self.pos = len - 1;
        }
        self.started = true;
        loop {
            let next = self.cells[self.pos].map_or(0, |v| v + 1);
            if next >= self.n {
                self.cells[self.pos] = None;
                if self.pos == 0 {
                    return false;
                }
                self.pos -= 1;
                continue;
            }
            self.cells[self.pos] = Some(next);
            if self.consistent(self.pos) {
                if self.pos + 1 == len {
                    return true;
                }
                self.pos += 1;
            }
        }
    }

    fn current(&self) -> CayleyPair {
        let nn = self.n * self.n;
        let vals: Vec<usize> = self.cells.iter().map(|c| c.expect("complete")).collect();
        CayleyPair {
            n: self.n,
            h: vals[..nn].to_vec(),
            v: vals[nn..].to_vec(),
        }
    }
}

impl Iterator for ModelStream {
    type Item = CayleyPair;

    fn next(&mut self) -> Option<CayleyPair> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            let m = self.current();
            if self.constraints.iter().all(|c| c.holds(&m)) {
                return Some(m);
            }
        }
        None
    }
}

/// Outcome of one theorem over the enumerated models.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    /// Models satisfying the hypothesis.
    pub instances: usize,
    pub counterexample: Option<ModelDoc>,
}

/// Serialized form of a [`CayleyPair`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct ModelDoc {
    pub n: usize,
    pub h: Vec<Vec<usize>>,
    pub v: Vec<Vec<usize>>,
}

impl From<&CayleyPair> for ModelDoc {
    fn from(m: &CayleyPair) -> Self {
        ModelDoc {
            n: m.n,
            h: m.table(Op::H),
            v: m.table(Op::V),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub order: usize,
    pub double_semigroups: usize,
    pub unital: usize,
    pub commutative: usize,
    pub cancellative: usize,
    pub bicancellable: usize,
    pub inverse: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimsReport {
    pub min_order: usize,
    pub max_order: usize,
    pub all_passed: bool,
    pub claims: Vec<ClaimResult>,
    pub counts: Vec<OrderCounts>,
}

struct ClaimTracker {
    result: ClaimResult,
}

impl ClaimTracker {
    fn new(id: &'static str, statement: &'static str) -> Self {
        ClaimTracker {
            result: ClaimResult {
                id,
                statement,
                passed: true,
                instances: 0,
                counterexample: None,
            },
        }
    }

    /// Records one model where the hypothesis holds.
    fn record(&mut self, m: &CayleyPair, conclusion: bool) {
        self.result.instances += 1;
        if !conclusion && self.result.passed {
            self.result.passed = false;
            self.result.counterexample = Some(ModelDoc::from(m));
        }
    }
}

fn lemma_inverses_commute(inv: &InverseStructure) -> bool {
    (0..inv.inv_h.len()).all(|a| inv.inv_v[inv.inv_h[a]] == inv.inv_h[inv.inv_v[a]])
}

/// `AB A'B' AB = AB` and `A'B' AB A'B' = A'B'` where juxtaposition is `op`,
/// `A` is the inverse of `a` for the other operation and `'` the inverse
/// for `op`.
fn inverse_claims_hold(m: &CayleyPair, op: Op, inv_op: &[usize], inv_other: &[usize]) -> bool {
    let mul = |x, y| m.op(op, x, y);
    let n = m.n;
    (0..n).all(|a| {
        (0..n).all(|b| {
            let (big_a, big_b) = (inv_other[a], inv_other[b]);
            let ab = mul(big_a, big_b);
            let ab_inv = mul(inv_op[big_a], inv_op[big_b]);
            mul(mul(ab, ab_inv), ab) == ab && mul(mul(ab_inv, ab), ab_inv) == ab_inv
        })
    })
}

/// Checks the commutativity theorems over every labeled model of order
/// `1..=n_max`.
pub fn verify_claims(n_max: usize, limit: OrderLimit) -> Result<ClaimsReport, ModelError> {
    limit.check(n_max)?;
    let mut eh = ClaimTracker::new(
        "EH",
        "unital double semigroups: units coincide, operations coincide and are commutative",
    );
    let mut c1 = ClaimTracker::new("C1", "cancellative double semigroups are commutative");
    let mut c2 = ClaimTracker::new(
        "C2",
        "a cancellable element with cancellable powers in both directions forces commutativity",
    );
    let mut lemma = ClaimTracker::new(
        "L",
        "in inverse double semigroups the horizontal and vertical inverses commute",
    );
    let mut prop = ClaimTracker::new(
        "P",
        "inverse double semigroups are commutative and satisfy AB A^-1B^-1 AB = AB in both operations",
    );
    let mut counts = Vec::new();
    for n in 1..=n_max {
        let mut c = OrderCounts {
            order: n,
            ..OrderCounts::default()
        };
        for m in ModelStream::new(n, Vec::new()) {
            c.double_semigroups += 1;
            let comm = commutativity_of(&m);
            if comm.both() {
                c.commutative += 1;
            }
            let units = units_of(&m);
            if let (Some(uh), Some(uv)) = (units.unit_h, units.unit_v) {
                c.unital += 1;
                eh.record(&m, uh == uv && comm.ops_coincide && comm.both());
            }
            if cancellative(&m) {
                c.cancellative += 1;
                c1.record(&m, comm.both());
            }
            if bicancellable(&m).is_some() {
                c.bicancellable += 1;
                c2.record(&m, comm.both());
            }
            match inverse_of(&m) {
                Ok(Some(inv)) => {
                    c.inverse += 1;
                    lemma.record(&m, lemma_inverses_commute(&inv));
                    let identities = inverse_claims_hold(&m, Op::H, &inv.inv_h, &inv.inv_v)
                        && inverse_claims_hold(&m, Op::V, &inv.inv_v, &inv.inv_h);
                    prop.record(&m, comm.both() && identities);
                }
                Ok(None) => {}
                // unique inverses that break the inverse-semigroup identities
                Err(_) => {
                    c.inverse += 1;
                    prop.record(&m, false);
                }
            }
        }
        counts.push(c);
    }
    let claims: Vec<ClaimResult> = [eh, c1, c2, lemma, prop].into_iter().map(|t| t.result).collect();
    Ok(ClaimsReport {
        min_order: 1,
        max_order: n_max,
        all_passed: claims.iter().all(|c| c.passed),
        claims,
        counts,
    })
}
