//! Branch-and-bound searches for extremal sets: the maximum sizes R(g,n)
//! over [1, n] and C(g,n) over Z_n, the least containers admitting k
//! elements, and complete enumeration of shortest Sidon sets.
//!
//! Every search walks candidate elements in increasing order holding an
//! incremental pair-sum count array, rejects a placement the moment any sum
//! count would pass g, and cuts translation and reflection symmetry where a
//! class representative is cheap to force. Work is metered in node
//! expansions (attempted placements) against a caller-supplied budget, so
//! truncated runs are reproducible; exhausted = false marks every result
//! that is a bound rather than a proof.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{AnySet, CyclicSet, IntegerSet};

/// Containers larger than this are refused up front.
pub const MAX_SEARCH_N: u64 = 1 << 20;
const MAX_SEARCH_G: u64 = 1 << 30;
/// Certificates store at most this many witnesses; witness_count keeps the
/// true number of distinct classes seen.
pub const WITNESS_CAP: usize = 64;
/// Node budget used when a caller has no reason to pick one.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Which extremal function a certificate speaks about: R works inside the
/// integer interval [1, n], C inside Z_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Problem {
    #[serde(rename = "R")]
    Linear,
    #[serde(rename = "C")]
    Cyclic,
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Problem::Linear => "R",
            Problem::Cyclic => "C",
        })
    }
}

/// Outcome of one search. With exhausted = true the value is proven
/// optimal. With exhausted = false the value is only what the truncated run
/// established: the best size found so far for maximum searches, or the
/// largest container proven infeasible for minimum-container searches.
///
/// witnesses holds at most [`WITNESS_CAP`] sets, deduplicated up to
/// translation and reflection; witness_count is the number of distinct
/// classes actually seen. Maximum-size searches sample witnesses (the
/// bound-based pruning discards ties); enumerate_shortest_sidon lists every
/// class.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchCertificate {
    pub problem: Problem,
    pub g: u64,
    pub parameter: u64,
    pub value: u64,
    pub witnesses: Vec<AnySet>,
    pub witness_count: u64,
    pub nodes_explored: u64,
    pub exhausted: bool,
}

struct Meter {
    nodes: u64,
    budget: u64,
    truncated: bool,
}

impl Meter {
    fn tick(&mut self) -> bool {
        if self.truncated || self.nodes >= self.budget {
            self.truncated = true;
            return false;
        }
        self.nodes += 1;
        true
    }
}

enum Attempt {
    Placed,
    Rejected,
    OutOfBudget,
}

trait Placer {
    fn attempt(&mut self, s: u32) -> Attempt;
    fn retract(&mut self);
    fn chosen(&self) -> &[u32];
    fn truncated(&self) -> bool;
    fn nodes(&self) -> u64;
}

/// Placement engine over the integers: sums are indexed directly.
struct IntPlacer {
    g: u32,
    counts: Vec<u32>,
    chosen: Vec<u32>,
    meter: Meter,
}

impl IntPlacer {
    fn new(g: u32, max_element: u32, nodes_so_far: u64, budget: u64) -> IntPlacer {
        IntPlacer {
            g,
            counts: vec![0; 2 * max_element as usize + 1],
            chosen: Vec::new(),
            meter: Meter {
                nodes: nodes_so_far,
                budget,
                truncated: false,
            },
        }
    }
}

impl Placer for IntPlacer {
    fn attempt(&mut self, s: u32) -> Attempt {
        if !self.meter.tick() {
            return Attempt::OutOfBudget;
        }
        let mut placed = 0;
        let mut ok = true;
        while placed < self.chosen.len() {
            let idx = (s + self.chosen[placed]) as usize;
            self.counts[idx] += 2;
            placed += 1;
            if self.counts[idx] > self.g {
                ok = false;
                break;
            }
        }
        if ok {
            let idx = 2 * s as usize;
            self.counts[idx] += 1;
            if self.counts[idx] > self.g {
                self.counts[idx] -= 1;
                ok = false;
            }
        }
        if !ok {
            for i in 0..placed {
                self.counts[(s + self.chosen[i]) as usize] -= 2;
            }
            return Attempt::Rejected;
        }
        self.chosen.push(s);
        Attempt::Placed
    }

    fn retract(&mut self) {
        let s = self.chosen.pop().expect("retract without a placement");
        self.counts[2 * s as usize] -= 1;
        for &t in &self.chosen {
            self.counts[(s + t) as usize] -= 2;
        }
    }

    fn chosen(&self) -> &[u32] {
        &self.chosen
    }

    fn truncated(&self) -> bool {
        self.meter.truncated
    }

    fn nodes(&self) -> u64 {
        self.meter.nodes
    }
}

/// Placement engine over Z_n: sums are reduced mod n.
struct CycPlacer {
    g: u32,
    n: u32,
    counts: Vec<u32>,
    chosen: Vec<u32>,
    meter: Meter,
}

impl CycPlacer {
    fn new(g: u32, n: u32, nodes_so_far: u64, budget: u64) -> CycPlacer {
        CycPlacer {
            g,
            n,
            counts: vec![0; n as usize],
            chosen: Vec::new(),
            meter: Meter {
                nodes: nodes_so_far,
                budget,
                truncated: false,
            },
        }
    }

    fn reduce(&self, sum: u32) -> usize {
        if sum >= self.n {
            (sum - self.n) as usize
        } else {
            sum as usize
        }
    }
}

impl Placer for CycPlacer {
    fn attempt(&mut self, s: u32) -> Attempt {
        if !self.meter.tick() {
            return Attempt::OutOfBudget;
        }
        let mut placed = 0;
        let mut ok = true;
        while placed < self.chosen.len() {
            let idx = self.reduce(s + self.chosen[placed]);
            self.counts[idx] += 2;
            placed += 1;
            if self.counts[idx] > self.g {
                ok = false;
                break;
            }
        }
        if ok {
            let idx = self.reduce(2 * s);
            self.counts[idx] += 1;
            if self.counts[idx] > self.g {
                self.counts[idx] -= 1;
                ok = false;
            }
        }
        if !ok {
            for i in 0..placed {
                let idx = self.reduce(s + self.chosen[i]);
                self.counts[idx] -= 2;
            }
            return Attempt::Rejected;
        }
        self.chosen.push(s);
        Attempt::Placed
    }

    fn retract(&mut self) {
        let s = self.chosen.pop().expect("retract without a placement");
        let idx = self.reduce(2 * s);
        self.counts[idx] -= 1;
        for i in 0..self.chosen.len() {
            let idx = self.reduce(s + self.chosen[i]);
            self.counts[idx] -= 2;
        }
    }

    fn chosen(&self) -> &[u32] {
        &self.chosen
    }

    fn truncated(&self) -> bool {
        self.meter.truncated
    }

    fn nodes(&self) -> u64 {
        self.meter.nodes
    }
}

/// Witness accumulator keyed by canonical form; stores a representative
/// per class up to the cap while counting every class.
struct WitnessStore {
    seen: BTreeMap<Vec<u64>, Vec<u64>>,
    total: u64,
}

impl WitnessStore {
    fn new() -> WitnessStore {
        WitnessStore {
            seen: BTreeMap::new(),
            total: 0,
        }
    }

    fn clear(&mut self) {
        self.seen.clear();
        self.total = 0;
    }

    fn record(&mut self, key: Vec<u64>, repr: Vec<u64>) {
        if self.seen.contains_key(&key) {
            return;
        }
        self.total += 1;
        if self.seen.len() < WITNESS_CAP {
            self.seen.insert(key, repr);
        }
    }

    fn is_empty(&self) -> bool {
        self.total == 0
    }
}

type Canon<'a> = dyn Fn(&[u32]) -> (Vec<u64>, Vec<u64>) + 'a;

struct MaxTracker {
    best: usize,
    store: WitnessStore,
}

impl MaxTracker {
    fn observe(&mut self, chosen: &[u32], canon: &Canon) {
        let len = chosen.len();
        if len < self.best {
            return;
        }
        if len > self.best {
            self.best = len;
            self.store.clear();
        }
        let (key, repr) = canon(chosen);
        self.store.record(key, repr);
    }
}

fn dfs_max<P: Placer, K: Fn(usize, u32, u32) -> u32>(
    p: &mut P,
    start: u32,
    cap: u32,
    kid_cap: &K,
    tracker: &mut MaxTracker,
    canon: &Canon,
) {
    let mut s = start;
    while s <= cap {
        // even taking every remaining candidate cannot beat the best
        if p.chosen().len() + (cap - s + 1) as usize <= tracker.best {
            return;
        }
        match p.attempt(s) {
            Attempt::OutOfBudget => return,
            Attempt::Rejected => {}
            Attempt::Placed => {
                tracker.observe(p.chosen(), canon);
                let child_cap = kid_cap(p.chosen().len(), s, cap);
                dfs_max(p, s + 1, child_cap, kid_cap, tracker, canon);
                p.retract();
                if p.truncated() {
                    return;
                }
            }
        }
        s += 1;
    }
}

/// Returns true when the chosen set reached k elements; the placements are
/// left in place so the caller can read the witness.
fn dfs_fill<P: Placer, K: Fn(usize, u32, u32) -> u32>(
    p: &mut P,
    start: u32,
    cap: u32,
    k: usize,
    kid_cap: &K,
) -> bool {
    if p.chosen().len() == k {
        return true;
    }
    let need = k - p.chosen().len();
    let mut s = start;
    while s <= cap {
        if ((cap - s + 1) as usize) < need {
            return false;
        }
        match p.attempt(s) {
            Attempt::OutOfBudget => return false,
            Attempt::Rejected => {}
            Attempt::Placed => {
                let child_cap = kid_cap(p.chosen().len(), s, cap);
                if dfs_fill(p, s + 1, child_cap, k, kid_cap) {
                    return true;
                }
                p.retract();
                if p.truncated() {
                    return false;
                }
            }
        }
        s += 1;
    }
    false
}

fn dfs_enum<P: Placer, K: Fn(usize, u32, u32) -> u32>(
    p: &mut P,
    start: u32,
    cap: u32,
    k: usize,
    kid_cap: &K,
    canon: &Canon,
    store: &mut WitnessStore,
) {
    if p.chosen().len() == k {
        let (key, repr) = canon(p.chosen());
        store.record(key, repr);
        return;
    }
    let need = k - p.chosen().len();
    let mut s = start;
    while s <= cap {
        if ((cap - s + 1) as usize) < need {
            return;
        }
        match p.attempt(s) {
            Attempt::OutOfBudget => return,
            Attempt::Rejected => {}
            Attempt::Placed => {
                let child_cap = kid_cap(p.chosen().len(), s, cap);
                dfs_enum(p, s + 1, child_cap, k, kid_cap, canon, store);
                p.retract();
                if p.truncated() {
                    return;
                }
            }
        }
        s += 1;
    }
}

fn sorted_u64(chosen: &[u32]) -> Vec<u64> {
    let mut v: Vec<u64> = chosen.iter().map(|&x| x as u64).collect();
    v.sort_unstable();
    v
}

fn check_g(g: u64) -> Result<u32> {
    if g < 1 {
        return Err(Error::InvalidInput("need g >= 1".into()));
    }
    if g > MAX_SEARCH_G {
        return Err(Error::InvalidInput(format!(
            "g = {g} is beyond the searchable range"
        )));
    }
    Ok(g as u32)
}

fn check_container(n: u64) -> Result<u32> {
    if n < 1 {
        return Err(Error::InvalidInput("need n >= 1".into()));
    }
    if n > MAX_SEARCH_N {
        return Err(Error::InvalidInput(format!(
            "containers cap at {MAX_SEARCH_N}, got {n}"
        )));
    }
    Ok(n as u32)
}

fn check_k(k: u64) -> Result<usize> {
    if k < 1 {
        return Err(Error::InvalidInput("need k >= 1".into()));
    }
    if k > 1 << 10 {
        return Err(Error::InvalidInput(format!(
            "target sizes cap at {}, got {k}",
            1 << 10
        )));
    }
    Ok(k as usize)
}

fn verify_witnesses(witnesses: &[AnySet], g: u64) {
    for w in witnesses {
        assert!(
            w.g_value() <= g,
            "internal error: search produced witness {w} with g-value above {g}"
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn certify(
    problem: Problem,
    g: u64,
    parameter: u64,
    value: u64,
    witnesses: Vec<AnySet>,
    witness_count: u64,
    nodes_explored: u64,
    exhausted: bool,
) -> SearchCertificate {
    verify_witnesses(&witnesses, g);
    SearchCertificate {
        problem,
        g,
        parameter,
        value,
        witnesses,
        witness_count,
        nodes_explored,
        exhausted,
    }
}

fn integer_witnesses(store: WitnessStore, lo: u64, hi: u64) -> (Vec<AnySet>, u64) {
    let total = store.total;
    let sets = store
        .seen
        .into_values()
        .map(|v| {
            debug_assert!(v.first().is_some_and(|&x| x >= lo) && v.last().is_some_and(|&x| x <= hi));
            AnySet::Integer(IntegerSet::new(&v).expect("witness elements are sorted and distinct"))
        })
        .collect();
    (sets, total)
}

fn cyclic_witnesses(store: WitnessStore, n: u64) -> (Vec<AnySet>, u64) {
    let total = store.total;
    let sets = store
        .seen
        .into_values()
        .map(|v| {
            AnySet::Cyclic(CyclicSet::new(n, &v).expect("witness elements are residues mod n"))
        })
        .collect();
    (sets, total)
}

/// R(g,n): the largest subset of [1, n] with g-value at most g. Witnesses
/// are reported as found, anchored at 1 by translation symmetry.
pub fn max_size_linear(g: u64, n: u64, budget: u64) -> Result<SearchCertificate> {
    let g32 = check_g(g)?;
    let n32 = check_container(n)?;
    let mut p = IntPlacer::new(g32, n32, 0, budget);
    let canon = |chosen: &[u32]| {
        let raw = sorted_u64(chosen);
        let key = IntegerSet::new(&raw)
            .expect("chosen elements are distinct")
            .canonicalize()
            .elements()
            .to_vec();
        (key, raw)
    };
    let mut tracker = MaxTracker {
        best: 0,
        store: WitnessStore::new(),
    };
    match p.attempt(1) {
        Attempt::OutOfBudget => {}
        Attempt::Rejected => unreachable!("a singleton fits any g >= 1"),
        Attempt::Placed => {
            tracker.observe(p.chosen(), &canon);
            dfs_max(&mut p, 2, n32, &|_, _, cap| cap, &mut tracker, &canon);
        }
    }
    let exhausted = !p.truncated();
    let value = tracker.best as u64;
    let (witnesses, count) = integer_witnesses(tracker.store, 1, n);
    Ok(certify(
        Problem::Linear,
        g,
        n,
        value,
        witnesses,
        count,
        p.nodes(),
        exhausted,
    ))
}

/// C(g,n): the largest subset of Z_n with g-value at most g. Witnesses are
/// reported in canonical form. Translation symmetry anchors 0; after the
/// second element s the reflection through 0 caps all later elements at
/// n - s, which keeps one representative per symmetry class.
pub fn max_size_cyclic(g: u64, n: u64, budget: u64) -> Result<SearchCertificate> {
    let g32 = check_g(g)?;
    let n32 = check_container(n)?;
    let mut p = CycPlacer::new(g32, n32, 0, budget);
    let canon = move |chosen: &[u32]| {
        let raw = sorted_u64(chosen);
        let key = CyclicSet::new(n, &raw)
            .expect("chosen elements are residues")
            .canonical()
            .elements()
            .to_vec();
        (key.clone(), key)
    };
    let mut tracker = MaxTracker {
        best: 0,
        store: WitnessStore::new(),
    };
    let kid_cap = move |len: usize, s: u32, cap: u32| {
        if len == 2 {
            cap.min(n32 - s)
        } else {
            cap
        }
    };
    match p.attempt(0) {
        Attempt::OutOfBudget => {}
        Attempt::Rejected => unreachable!("a singleton fits any g >= 1"),
        Attempt::Placed => {
            tracker.observe(p.chosen(), &canon);
            dfs_max(&mut p, 1, n32 - 1, &kid_cap, &mut tracker, &canon);
        }
    }
    let exhausted = !p.truncated();
    let value = tracker.best as u64;
    let (witnesses, count) = cyclic_witnesses(tracker.store, n);
    Ok(certify(
        Problem::Cyclic,
        g,
        n,
        value,
        witnesses,
        count,
        p.nodes(),
        exhausted,
    ))
}

fn check_min_n_args(g: u64, k: u64) -> Result<()> {
    if k >= 2 && g < 2 {
        return Err(Error::InvalidInput(
            "no container admits two elements with g-value 1: an ordered pair sum \
             a+b = b+a always counts twice"
                .into(),
        ));
    }
    Ok(())
}

/// min { n : R(g,n) >= k }. Iterates n upward from the pigeonhole bound
/// k^2 <= g(2n-1); at the least feasible n every witness class has a
/// representative touching both 1 and n, so the search pins the endpoints
/// and fills middles in increasing order, capping them at n + 1 - m after
/// the first middle m (reflection through the pinned interval).
///
/// On budget exhaustion the certificate carries the largest n proven
/// infeasible; the true answer is strictly larger.
pub fn min_n_linear(g: u64, k: u64, budget: u64) -> Result<SearchCertificate> {
    let g32 = check_g(g)?;
    let k_us = check_k(k)?;
    check_min_n_args(g, k)?;
    if k == 1 {
        let w = AnySet::Integer(IntegerSet::new(&[1]).unwrap());
        return Ok(certify(Problem::Linear, g, k, 1, vec![w], 1, 0, true));
    }
    let c = (k * k + g - 1) / g;
    let n0 = (c / 2 + 1).max(k);
    let mut nodes = 0u64;
    let mut n = n0;
    loop {
        if n > MAX_SEARCH_N {
            return Ok(certify(
                Problem::Linear,
                g,
                k,
                n - 1,
                Vec::new(),
                0,
                nodes,
                false,
            ));
        }
        let n32 = n as u32;
        let mut p = IntPlacer::new(g32, n32, nodes, budget);
        let pins_ok = matches!(p.attempt(1), Attempt::Placed)
            && matches!(p.attempt(n32), Attempt::Placed);
        let found = pins_ok && {
            let kid_cap = move |len: usize, s: u32, cap: u32| {
                if len == 3 {
                    cap.min(n32 + 1 - s)
                } else {
                    cap
                }
            };
            dfs_fill(&mut p, 2, n32 - 1, k_us, &kid_cap)
        };
        nodes = p.nodes();
        if found {
            let w = AnySet::Integer(IntegerSet::new(&sorted_u64(p.chosen())).unwrap());
            return Ok(certify(Problem::Linear, g, k, n, vec![w], 1, nodes, true));
        }
        if p.truncated() {
            return Ok(certify(
                Problem::Linear,
                g,
                k,
                n - 1,
                Vec::new(),
                0,
                nodes,
                false,
            ));
        }
        n += 1;
    }
}

/// min { n : C(g,n) >= k }, iterating n upward from k^2 <= gn with 0
/// anchored and the reflection cap of [`max_size_cyclic`]. Budget
/// exhaustion reports the largest n proven infeasible.
pub fn min_n_cyclic(g: u64, k: u64, budget: u64) -> Result<SearchCertificate> {
    let g32 = check_g(g)?;
    let k_us = check_k(k)?;
    check_min_n_args(g, k)?;
    if k == 1 {
        let w = AnySet::Cyclic(CyclicSet::new(1, &[0]).unwrap());
        return Ok(certify(Problem::Cyclic, g, k, 1, vec![w], 1, 0, true));
    }
    let n0 = ((k * k + g - 1) / g).max(k);
    let mut nodes = 0u64;
    let mut n = n0;
    loop {
        if n > MAX_SEARCH_N {
            return Ok(certify(
                Problem::Cyclic,
                g,
                k,
                n - 1,
                Vec::new(),
                0,
                nodes,
                false,
            ));
        }
        let n32 = n as u32;
        let mut p = CycPlacer::new(g32, n32, nodes, budget);
        let kid_cap = move |len: usize, s: u32, cap: u32| {
            if len == 2 {
                cap.min(n32 - s)
            } else {
                cap
            }
        };
        let found = matches!(p.attempt(0), Attempt::Placed)
            && dfs_fill(&mut p, 1, n32 - 1, k_us, &kid_cap);
        nodes = p.nodes();
        if found {
            let w = CyclicSet::new(n, &sorted_u64(p.chosen())).unwrap().canonical();
            return Ok(certify(
                Problem::Cyclic,
                g,
                k,
                n,
                vec![AnySet::Cyclic(w)],
                1,
                nodes,
                true,
            ));
        }
        if p.truncated() {
            return Ok(certify(
                Problem::Cyclic,
                g,
                k,
                n - 1,
                Vec::new(),
                0,
                nodes,
                false,
            ));
        }
        n += 1;
    }
}

/// Minimal span of a k-element Sidon set (g-value at most 2) together with
/// every witness, canonical up to translation and reflection. Spans are
/// tried upward from the k(k-1)/2 difference bound with 0 and the span
/// pinned; at a feasible span the whole tree is walked so the witness list
/// is complete.
pub fn enumerate_shortest_sidon(k: u64, budget: u64) -> Result<SearchCertificate> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "shortest-set enumeration starts at k = 2, got {k}"
        )));
    }
    let k_us = check_k(k)?;
    let g = 2u64;
    let m0 = k * (k - 1) / 2;
    let mut nodes = 0u64;
    let mut m = m0;
    loop {
        if m > MAX_SEARCH_N {
            return Ok(certify(
                Problem::Linear,
                g,
                k,
                m - 1,
                Vec::new(),
                0,
                nodes,
                false,
            ));
        }
        let m32 = m as u32;
        let mut p = IntPlacer::new(g as u32, m32, nodes, budget);
        let canon = |chosen: &[u32]| {
            let raw = sorted_u64(chosen);
            let key = IntegerSet::new(&raw)
                .expect("chosen elements are distinct")
                .canonicalize()
                .elements()
                .to_vec();
            (key.clone(), key)
        };
        let mut store = WitnessStore::new();
        let pins_ok = matches!(p.attempt(0), Attempt::Placed)
            && matches!(p.attempt(m32), Attempt::Placed);
        if pins_ok {
            let kid_cap = move |len: usize, s: u32, cap: u32| {
                if len == 3 {
                    cap.min(m32 - s)
                } else {
                    cap
                }
            };
            dfs_enum(&mut p, 1, m32 - 1, k_us, &kid_cap, &canon, &mut store);
        }
        nodes = p.nodes();
        let truncated = p.truncated();
        if !store.is_empty() {
            let (witnesses, count) = integer_witnesses(store, 0, m);
            return Ok(certify(
                Problem::Linear,
                g,
                k,
                m,
                witnesses,
                count,
                nodes,
                !truncated,
            ));
        }
        if truncated {
            return Ok(certify(
                Problem::Linear,
                g,
                k,
                m - 1,
                Vec::new(),
                0,
                nodes,
                false,
            ));
        }
        m += 1;
    }
}
