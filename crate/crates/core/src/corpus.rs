//! Deterministic corpora of small matroids.
//!
//! Randomness comes from `ChaCha8Rng` seeded from `CorpusSpec::seed`, so a given spec always
//! yields the same instances in the same order on a given build.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{json_int, Int};
use crate::bounds::{m_rnk, rank2_matroid, MrnkParams};
use crate::error::{MatxError, Result};
use crate::graph::{complete_graph, cycle_graph, theta_graph, wheel_graph, Graph};
use crate::matroid::{parallel_connection, series_connection, Matroid, PointedMatroid};
use crate::set::k_subsets;
use crate::tutte::beta_invariant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Landmarks,
    Uniform,
    Graphs,
    RandomGraphs,
    Rank2,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Landmarks, Family::Uniform, Family::Graphs, Family::RandomGraphs, Family::Rank2];

    pub fn name(self) -> &'static str {
        match self {
            Family::Landmarks => "landmarks",
            Family::Uniform => "uniform",
            Family::Graphs => "graphs",
            Family::RandomGraphs => "random_graphs",
            Family::Rank2 => "rank2",
        }
    }
}

impl FromStr for Family {
    type Err = MatxError;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| MatxError::Input(format!("unknown family '{s}'")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub max_n: usize,
    pub families: Vec<Family>,
    pub closure_depth: usize,
    /// Number of random connected multigraphs to draw.
    pub random_graphs: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { seed: 42, max_n: 12, families: Family::ALL.to_vec(), closure_depth: 1, random_graphs: 40 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tags {
    pub n: usize,
    pub rank: usize,
    pub connected: bool,
    pub loopless: bool,
    pub coloop_free: bool,
    pub components: usize,
    /// `None` when there are no cocircuits (rank 0).
    pub min_cocircuit: Option<usize>,
    /// Largest `k` with `Δ(M)` k-CM, which equals the smallest cocircuit size.
    pub kcm_level: Option<usize>,
    #[serde(serialize_with = "json_int::serialize")]
    pub beta: Int,
}

impl Tags {
    pub fn of(m: &Matroid) -> Self {
        let min_cocircuit = m.min_cocircuit_size();
        Tags {
            n: m.n(),
            rank: m.rank(),
            connected: m.is_connected(),
            loopless: m.loops().is_empty(),
            coloop_free: m.coloops().is_empty(),
            components: m.num_components(),
            min_cocircuit,
            kcm_level: min_cocircuit,
            beta: beta_invariant(m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub matroid: Matroid,
    pub provenance: String,
    pub tags: Tags,
}

struct Builder {
    max_n: usize,
    seen: HashSet<(usize, Vec<u32>)>,
    ids: HashSet<String>,
    out: Vec<Instance>,
}

impl Builder {
    fn push(&mut self, id: String, provenance: String, m: Matroid) -> bool {
        if m.n() > self.max_n || m.n() == 0 {
            return false;
        }
        if !self.seen.insert((m.n(), m.basis_masks().to_vec())) {
            return false;
        }
        let mut id = id;
        if self.ids.contains(&id) {
            id = (2..).map(|c| format!("{id}~{c}")).find(|x| !self.ids.contains(x)).expect("unbounded");
        }
        self.ids.insert(id.clone());
        let tags = Tags::of(&m);
        self.out.push(Instance { id, matroid: m, provenance, tags });
        true
    }

    fn push_simple(&mut self, id: &str, m: Result<Matroid>) {
        if let Ok(m) = m {
            self.push(id.to_string(), id.to_string(), m);
        }
    }
}

/// The second matroid with the same broken circuit complex as [`twin_m1`].
pub fn twin_m2() -> Matroid {
    named_triples_except(&[0b000111, 0b110001])
}

/// All triples of six elements except `{e1,e2,e3}` and `{e4,e5,e6}`.
pub fn twin_m1() -> Matroid {
    named_triples_except(&[0b000111, 0b111000])
}

fn named_triples_except(excluded: &[u32]) -> Matroid {
    let labels = (1..=6).map(|i| format!("e{i}")).collect();
    Matroid::from_basis_masks(labels, k_subsets(6, 3).filter(|b| !excluded.contains(b)).collect())
        .expect("a valid paving matroid")
}

/// `U_{2,β+2}` in parallel connection with `lines` three-point lines.
pub fn line_chain(beta: usize, lines: usize) -> Result<Matroid> {
    let mut acc = PointedMatroid::new(Matroid::uniform(2, beta + 2)?, 0)?;
    for _ in 0..lines {
        let line = PointedMatroid::new(Matroid::uniform(2, 3)?, 0)?;
        let joined = parallel_connection(&acc, &line)?;
        // move the basepoint to the newest element so the lines fan out
        let m = joined.into_matroid();
        let last = m.n() - 1;
        acc = PointedMatroid::new(m, last)?;
    }
    Ok(acc.into_matroid())
}

/// `U_{1,hr+1} ⊕ U_{1,2}^{⊕(r-1)}`.
pub fn ind_by_r_family(hr: usize, r: usize) -> Result<Matroid> {
    let mut m = Matroid::uniform(1, hr + 1)?;
    for _ in 1..r {
        m = m.direct_sum(&Matroid::uniform(1, 2)?)?;
    }
    Ok(m)
}

pub fn landmark_instances() -> Vec<Instance> {
    let mut b = Builder { max_n: 24, seen: HashSet::new(), ids: HashSet::new(), out: Vec::new() };
    add_landmarks(&mut b);
    b.out
}

fn add_landmarks(b: &mut Builder) {
    b.push_simple("landmark-m1", Ok(twin_m1()));
    b.push_simple("landmark-m2", Ok(twin_m2()));
    b.push_simple("landmark-theta", theta_graph(3, 2).map(|g| g.cycle_matroid()));
    let u13 = Matroid::uniform(1, 3).expect("valid");
    b.push_simple("landmark-u13-cubed", u13.direct_sum(&u13).and_then(|m| m.direct_sum(&u13)));
    b.push_simple("landmark-m-3-9-3", MrnkParams::new(3, 9, 3).and_then(m_rnk));
    b.push_simple("landmark-rank2-221", rank2_matroid(&[2, 2, 1]));
    for beta in 1..=3 {
        for lines in 1..=3 {
            b.push_simple(&format!("landmark-line-chain-b{beta}-l{lines}"), line_chain(beta, lines));
        }
    }
    for hr in 1..=3 {
        for r in 1..=4 {
            b.push_simple(&format!("landmark-indr-h{hr}-r{r}"), ind_by_r_family(hr, r));
        }
    }
}

fn partitions(n: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(acc.clone());
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        acc.push(p);
        partitions(n - p, p, acc, out);
        acc.pop();
    }
}

/// All partitions of `n`, parts in nonincreasing order.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut out);
    out
}

fn random_multigraph(rng: &mut ChaCha8Rng, max_edges: usize) -> Option<Graph> {
    let v = rng.gen_range(2..=7usize);
    if max_edges < v - 1 {
        return None;
    }
    let e = rng.gen_range(v - 1..=max_edges);
    let mut pairs = Vec::with_capacity(e);
    for _ in 0..e {
        let a = rng.gen_range(0..v);
        // rare self-loops keep loops in the corpus
        let b = if rng.gen_ratio(1, 20) { a } else { rng.gen_range(0..v) };
        pairs.push((a, b));
    }
    let g = Graph::from_pairs(&pairs).ok()?;
    (g.num_vertices() == v && g.is_connected()).then_some(g)
}

pub fn generate(spec: &CorpusSpec) -> Result<Vec<Instance>> {
    if spec.max_n > crate::set::MAX_ELEMENTS {
        return Err(MatxError::TooLarge(spec.max_n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut b = Builder { max_n: spec.max_n, seen: HashSet::new(), ids: HashSet::new(), out: Vec::new() };
    let max_n = spec.max_n;
    for fam in &spec.families {
        match fam {
            Family::Landmarks => add_landmarks(&mut b),
            Family::Uniform => {
                for n in 1..=max_n {
                    for r in 0..=n {
                        b.push_simple(&format!("uniform-r{r}-n{n}"), Matroid::uniform(r, n));
                    }
                }
            }
            Family::Graphs => {
                for n in 3..=max_n {
                    b.push_simple(&format!("cycle-{n}"), cycle_graph(n).map(|g| g.cycle_matroid()));
                }
                for n in 4..=5 {
                    b.push_simple(&format!("complete-{n}"), complete_graph(n).map(|g| g.cycle_matroid()));
                }
                for paths in 2..=4 {
                    for len in 1..=4 {
                        if paths * len <= max_n {
                            let id = format!("theta-{paths}x{len}");
                            b.push_simple(&id, theta_graph(paths, len).map(|g| g.cycle_matroid()));
                        }
                    }
                }
                for spokes in 3..=6 {
                    b.push_simple(&format!("wheel-{spokes}"), wheel_graph(spokes).map(|g| g.cycle_matroid()));
                }
            }
            Family::RandomGraphs => {
                let mut made = 0;
                let mut attempts = 0;
                while made < spec.random_graphs && attempts < spec.random_graphs * 50 {
                    attempts += 1;
                    if let Some(g) = random_multigraph(&mut rng, max_n.min(12)) {
                        let id = format!("random-{made:03}");
                        if b.push(id.clone(), format!("random connected multigraph #{made}"), g.cycle_matroid()) {
                            made += 1;
                        }
                    }
                }
            }
            Family::Rank2 => {
                for n in 2..=max_n {
                    for parts in integer_partitions(n).into_iter().filter(|p| p.len() >= 2) {
                        let tag = parts.iter().map(usize::to_string).collect::<Vec<_>>().join(".");
                        b.push_simple(&format!("rank2-{tag}"), rank2_matroid(&parts));
                    }
                }
            }
        }
    }

    let mut frontier: Vec<usize> = (0..b.out.len()).collect();
    for depth in 1..=spec.closure_depth {
        let start = b.out.len();
        for &idx in &frontier {
            let (id, m) = (b.out[idx].id.clone(), b.out[idx].matroid.clone());
            let tag = |op: &str| format!("{op}({id})");
            b.push(format!("d{depth}-dual-{id}"), tag("dual"), m.dual());
            let n = m.n();
            if n >= 2 {
                let e = rng.gen_range(0..n);
                if let Ok(x) = m.delete_element(e) {
                    b.push(format!("d{depth}-del{e}-{id}"), tag(&format!("delete {}", m.labels()[e])), x);
                }
                let e = rng.gen_range(0..n);
                if let Ok(x) = m.contract_element(e) {
                    b.push(format!("d{depth}-con{e}-{id}"), tag(&format!("contract {}", m.labels()[e])), x);
                }
            }
            if n < max_n && n >= 1 {
                let e = rng.gen_range(0..n);
                let label = m.fresh_label("s");
                if let Ok(x) = m.series_extension(e, &label) {
                    b.push(format!("d{depth}-ser{e}-{id}"), tag(&format!("series extend {}", m.labels()[e])), x);
                }
                if let Ok(x) = m.free_coextension() {
                    b.push(format!("d{depth}-fcx-{id}"), tag("free coextension"), x);
                }
            }
        }
        // binary operations on sampled pairs of small instances
        let small: Vec<usize> = frontier.iter().copied().filter(|&i| b.out[i].matroid.n() <= max_n / 2).collect();
        let pairs = (frontier.len() / 6).max(1);
        for _ in 0..pairs {
            let (Some(&x), Some(&y)) = (small.choose(&mut rng), small.choose(&mut rng)) else { break };
            let (a, c) = (b.out[x].matroid.clone(), b.out[y].matroid.clone());
            let (ia, ic) = (b.out[x].id.clone(), b.out[y].id.clone());
            if let Ok(s) = a.direct_sum(&c) {
                b.push(format!("d{depth}-sum-{ia}-{ic}"), format!("direct_sum({ia}, {ic})"), s);
            }
            let pa = pointed_random(&a, &mut rng);
            let pc = pointed_random(&c, &mut rng);
            if let (Some(pa), Some(pc)) = (pa, pc) {
                if let Ok(s) = parallel_connection(&pa, &pc) {
                    b.push(format!("d{depth}-par-{ia}-{ic}"), format!("parallel_connection({ia}, {ic})"), s.into_matroid());
                }
                if let Ok(s) = series_connection(&pa, &pc) {
                    b.push(format!("d{depth}-ser-{ia}-{ic}"), format!("series_connection({ia}, {ic})"), s.into_matroid());
                }
            }
        }
        frontier = (start..b.out.len()).collect();
    }
    Ok(b.out)
}

fn pointed_random(m: &Matroid, rng: &mut ChaCha8Rng) -> Option<PointedMatroid> {
    let blocked = m.loops().bits() | m.coloops().bits();
    let choices: Vec<usize> = (0..m.n()).filter(|e| blocked >> e & 1 == 0).collect();
    let &e = choices.choose(rng)?;
    PointedMatroid::new(m.clone(), e).ok()
}
