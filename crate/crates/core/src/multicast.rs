//! Constructive solvers: edge-disjoint path finding, the Jaggi–Sanders
//! greedy multicast construction with restricted coefficient sets, lifting of
//! scalar solutions into group-code ideals, the rotate-and-add construction,
//! and standard test-network generators.

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::gf::{is_prime, mult_order, Embedding, Field, FieldElement};
use crate::group::Group;
use crate::ideal::{ideal_from_t, GroupCode};
use crate::linalg::Mat;
use crate::network::{
    reduce_code_degree, verify_solution, Coefficient, DemandSpec, EdgeSpec, MessageSpec,
    ModuleContext, Network, NetworkCode, NetworkSpec,
};
use crate::spectral::{decompose, Spectrum};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// A multicast problem: h messages (one per source node) and a set of sinks
/// each demanding all h messages.
#[derive(Debug, Clone)]
pub struct MulticastInstance {
    pub network: Network,
    pub h: usize,
    pub sinks: Vec<usize>,
}

impl MulticastInstance {
    pub fn new(network: Network) -> Result<MulticastInstance> {
        let h = network.messages().len();
        let sinks = network.sinks();
        for &sink in &sinks {
            for mi in 0..h {
                if !network.demands().contains(&(sink, mi)) {
                    return Err(Error::Precondition(format!(
                        "sink '{}' does not demand every message",
                        network.node_name(sink)
                    )));
                }
            }
        }
        Ok(MulticastInstance { network, h, sinks })
    }

    /// Number of sinks N_rx.
    pub fn num_sinks(&self) -> usize {
        self.sinks.len()
    }
}

/// A scalar linear solution together with the coefficient set it was built
/// from.
#[derive(Debug, Clone)]
pub struct ScalarSolution {
    pub code: NetworkCode,
    pub field: Field,
    pub allowed: Vec<FieldElement>,
}

// ---- edge-disjoint paths via unit-capacity max-flow ----

struct FlowGraph {
    /// arcs stored in pairs: arc 2i is forward, 2i+1 its residual
    to: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl FlowGraph {
    fn new(nodes: usize) -> FlowGraph {
        FlowGraph {
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, u: usize, v: usize) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(1);
        self.adj[u].push(id);
        self.to.push(u);
        self.cap.push(0);
        self.adj[v].push(id + 1);
        id
    }

    /// One BFS augmentation from s to t; true if a unit of flow was pushed.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let n = self.adj.len();
        let mut prev_arc = vec![usize::MAX; n];
        let mut visited = vec![false; n];
        visited[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !visited[v] {
                    visited[v] = true;
                    prev_arc[v] = a;
                    queue.push_back(v);
                }
            }
        }
        if !visited[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let a = prev_arc[v];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            v = self.to[a ^ 1];
        }
        true
    }
}

/// h edge-disjoint paths to the sink, one starting at each message's source
/// (paths[i] is the edge-index list for message i). Errors when the combined
/// min-cut is below h.
pub fn edge_disjoint_paths(net: &Network, sink: usize) -> Result<Vec<Vec<usize>>> {
    let h = net.messages().len();
    let n = net.node_count();
    let super_src = n;
    let mut fg = FlowGraph::new(n + 1);
    let msg_arcs: Vec<usize> = net
        .messages()
        .iter()
        .map(|&(_, src)| fg.add_arc(super_src, src))
        .collect();
    let edge_arcs: Vec<usize> = net
        .edges()
        .iter()
        .map(|e| fg.add_arc(e.tail, e.head))
        .collect();
    let mut flow = 0usize;
    while flow < h && fg.augment(super_src, sink) {
        flow += 1;
    }
    if flow < h {
        return Err(Error::InsufficientMinCut {
            need: h,
            found: flow,
        });
    }
    // decompose the flow into one path per message
    let mut used: Vec<bool> = net
        .edges()
        .iter()
        .enumerate()
        .map(|(i, _)| fg.cap[edge_arcs[i]] == 0)
        .collect();
    let mut paths = Vec::with_capacity(h);
    for (mi, &arc) in msg_arcs.iter().enumerate() {
        assert_eq!(fg.cap[arc], 0, "max flow saturates every message arc");
        let mut cur = net.messages()[mi].1;
        let mut path = Vec::new();
        while cur != sink {
            let e = net
                .out_edges(cur)
                .iter()
                .copied()
                .find(|&e| used[e])
                .expect("flow conservation yields an outgoing saturated edge");
            used[e] = false;
            path.push(e);
            cur = net.edges()[e].head;
        }
        paths.push(path);
    }
    Ok(paths)
}

// ---- Jaggi–Sanders construction ----

fn unit_vec(field: &Field, h: usize, i: usize) -> Vec<FieldElement> {
    let mut v = vec![field.zero(); h];
    v[i] = field.one();
    v
}

fn full_rank(field: &Field, rows: &[Vec<FieldElement>]) -> bool {
    let m = Mat::from_rows(field, rows.to_vec());
    m.rank() == rows.len()
}

/// Greedy scalar multicast construction. Coefficients are drawn from
/// `allowed` (None = the whole field) in a fixed order, taking the first
/// choice that keeps every affected sink's frontier full-rank; the result is
/// accepted only if it passes full verification.
pub fn jaggi_sanders(
    instance: &MulticastInstance,
    field: &Field,
    allowed: Option<&[FieldElement]>,
) -> Result<ScalarSolution> {
    let net = &instance.network;
    let h = instance.h;
    let allowed: Vec<FieldElement> = match allowed {
        Some(a) => {
            if a.iter().any(|x| x.field() != field) {
                return Err(Error::FieldMismatch);
            }
            a.to_vec()
        }
        None => field.elements().collect(),
    };
    if allowed.is_empty() {
        return Err(Error::Precondition("empty coefficient set".to_string()));
    }

    let paths: Vec<Vec<Vec<usize>>> = instance
        .sinks
        .iter()
        .map(|&sink| edge_disjoint_paths(net, sink))
        .collect::<Result<_>>()?;

    // uses[e] = (sink position, path index, predecessor edge) for every
    // non-initial occurrence of e on a path
    let mut uses: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); net.edges().len()];
    for (si, sink_paths) in paths.iter().enumerate() {
        for (pi, path) in sink_paths.iter().enumerate() {
            for w in path.windows(2) {
                uses[w[1]].push((si, pi, w[0]));
            }
        }
    }

    // coding vectors: source out-edges carry the unit vector of their message
    let mut cv: Vec<Option<Vec<FieldElement>>> = vec![None; net.edges().len()];
    for (i, e) in net.edges().iter().enumerate() {
        if let Some(mi) = net.message_at(e.tail) {
            cv[i] = Some(unit_vec(field, h, mi));
        }
    }
    // per-sink frontier: one coding vector per path, starting at the units
    let mut frontier: Vec<Vec<Vec<FieldElement>>> = (0..instance.sinks.len())
        .map(|_| (0..h).map(|i| unit_vec(field, h, i)).collect())
        .collect();

    let mut code = NetworkCode::new(ModuleContext::Scalar(field.clone()));

    for &v in net.topological_order() {
        if net.message_at(v).is_some() {
            continue;
        }
        for &e in net.out_edges(v) {
            if uses[e].is_empty() {
                continue;
            }
            let mut preds: Vec<usize> = uses[e].iter().map(|&(_, _, d)| d).collect();
            preds.sort_unstable();
            preds.dedup();
            let pred_vecs: Vec<&Vec<FieldElement>> = preds
                .iter()
                .map(|&d| cv[d].as_ref().expect("predecessor already processed"))
                .collect();
            // odometer over allowed^{|preds|}, lexicographic in `allowed` order
            let mut choice = vec![0usize; preds.len()];
            let committed = 'search: loop {
                let mut cand = vec![field.zero(); h];
                for (ci, pv) in choice.iter().zip(&pred_vecs) {
                    let k = &allowed[*ci];
                    for (x, y) in cand.iter_mut().zip(pv.iter()) {
                        *x = x.add(&k.mul(y));
                    }
                }
                let ok = uses[e].iter().all(|&(si, pi, _)| {
                    let mut rows = frontier[si].clone();
                    rows[pi] = cand.clone();
                    full_rank(field, &rows)
                });
                if ok {
                    break 'search Some((choice.clone(), cand));
                }
                let mut i = 0;
                loop {
                    if i == choice.len() {
                        break 'search None;
                    }
                    choice[i] += 1;
                    if choice[i] < allowed.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
            };
            let (choice, cand) = committed.ok_or_else(|| {
                Error::ConstructionFailed(format!(
                    "no coefficient choice keeps all sinks decodable at edge '{}'",
                    net.edges()[e].id
                ))
            })?;
            for (ci, &d) in choice.iter().zip(&preds) {
                let k = allowed[*ci].clone();
                if !k.is_zero() {
                    code.set_encoding(net, d, e, Coefficient::Scalar(k))?;
                }
            }
            for &(si, pi, _) in &uses[e] {
                frontier[si][pi] = cand.clone();
            }
            cv[e] = Some(cand);
        }
    }

    // decoding: per sink solve C^T k = u_i over the final path edges
    for (si, &sink) in instance.sinks.iter().enumerate() {
        let finals: Vec<usize> = paths[si].iter().map(|p| *p.last().unwrap()).collect();
        let c = Mat::from_rows(field, frontier[si].clone());
        let ct = c.transpose();
        for mi in 0..h {
            let k = ct.solve(&unit_vec(field, h, mi)).ok_or_else(|| {
                Error::ConstructionFailed(format!(
                    "frontier of sink '{}' is singular",
                    net.node_name(sink)
                ))
            })?;
            for (j, &fe) in finals.iter().enumerate() {
                if !k[j].is_zero() {
                    code.set_decoding(net, sink, fe, mi, Coefficient::Scalar(k[j].clone()))?;
                }
            }
        }
    }

    if !verify_solution(net, &code)? {
        return Err(Error::ConstructionFailed(
            "constructed code failed verification".to_string(),
        ));
    }
    Ok(ScalarSolution {
        code,
        field: field.clone(),
        allowed,
    })
}

// ---- lifting scalar solutions into ideals ----

fn scalar_coeff(c: Option<&Coefficient>) -> FieldElement {
    match c {
        Some(Coefficient::Scalar(x)) => x.clone(),
        _ => unreachable!("scalar solutions hold scalar coefficients"),
    }
}

/// Lifts per-component scalar solutions through Phi^{-1} into a network code
/// over the ideal M, then degree-reduces every coefficient. `sols` maps each
/// component k in T(M) to a scalar solution over GF(q_k).
pub fn lift_scalar_to_ideal(
    net: &Network,
    m: &Arc<GroupCode>,
    sols: &BTreeMap<usize, &ScalarSolution>,
) -> Result<NetworkCode> {
    let d = m
        .decomposition()
        .ok_or_else(|| Error::Precondition("ideal lacks spectral data".to_string()))?
        .clone();
    let t_set = m
        .support()
        .ok_or_else(|| Error::Precondition("ideal lacks a spectral support".to_string()))?
        .clone();
    let mut embeddings = BTreeMap::new();
    for &k in &t_set {
        let sol = sols.get(&k).ok_or_else(|| {
            Error::Precondition(format!("no scalar solution supplied for component {k}"))
        })?;
        if sol.field.order() != d.component_size(k) {
            return Err(Error::FieldMismatch);
        }
        embeddings.insert(k, Embedding::new(&sol.field, d.splitting_field())?);
    }

    let t = d.num_components();
    let lift = |get: &dyn Fn(&ScalarSolution) -> FieldElement| -> Result<Coefficient> {
        let mut components = vec![d.splitting_field().zero(); t];
        for &k in &t_set {
            let x = get(sols[&k]);
            components[k - 1] = embeddings[&k].apply(&x)?;
        }
        let a = d.phi_inverse(&Spectrum { components })?;
        Ok(Coefficient::Algebra(a))
    };

    let mut enc_keys = BTreeSet::new();
    let mut dec_keys = BTreeSet::new();
    for &k in &t_set {
        enc_keys.extend(sols[&k].code.encoding().keys().copied());
        dec_keys.extend(sols[&k].code.decoding().keys().copied());
    }

    let mut out = NetworkCode::new(ModuleContext::Code(m.clone()));
    for &(di, ei) in &enc_keys {
        let c = lift(&|s: &ScalarSolution| scalar_coeff(s.code.encoding_coeff(di, ei)))?;
        out.set_encoding(net, di, ei, c)?;
    }
    for &(sink, di, mi) in &dec_keys {
        let c = lift(&|s: &ScalarSolution| scalar_coeff(s.code.decoding_coeff(sink, di, mi)))?;
        out.set_decoding(net, sink, di, mi, c)?;
    }
    reduce_code_degree(&out)
}

/// Lifts one scalar solution into M, reusing it for every component of T(M);
/// all components must then have the same field size.
pub fn lift_with_single_solution(
    net: &Network,
    m: &Arc<GroupCode>,
    sol: &ScalarSolution,
) -> Result<NetworkCode> {
    let t_set = m
        .support()
        .ok_or_else(|| Error::Precondition("ideal lacks a spectral support".to_string()))?;
    let sols: BTreeMap<usize, &ScalarSolution> =
        t_set.iter().map(|&k| (k, sol)).collect();
    lift_scalar_to_ideal(net, m, &sols)
}

/// Lifts a base-field scalar solution to the whole algebra F_q[G] through the
/// unital embedding a -> a * 1e (rate-1 direction of the scalar/ideal
/// equivalence).
pub fn lift_identity(
    net: &Network,
    sol: &ScalarSolution,
    m: &Arc<GroupCode>,
) -> Result<NetworkCode> {
    if m.dimension() != m.length() {
        return Err(Error::Precondition(
            "identity lifting targets the whole algebra".to_string(),
        ));
    }
    if &sol.field != m.field() {
        return Err(Error::FieldMismatch);
    }
    let one = AlgebraElement::one(m.group(), m.field());
    let lift = |c: &Coefficient| -> Coefficient {
        match c {
            Coefficient::Scalar(x) => Coefficient::Algebra(one.scale(x)),
            Coefficient::Algebra(_) => unreachable!("scalar solution"),
        }
    };
    let mut out = NetworkCode::new(ModuleContext::Code(m.clone()));
    for (&(d, e), c) in sol.code.encoding() {
        out.set_encoding(net, d, e, lift(c))?;
    }
    for (&(sink, d, mi), c) in sol.code.decoding() {
        out.set_decoding(net, sink, d, mi, lift(c))?;
    }
    Ok(out)
}

/// Collapses a code over the whole algebra F_q[G] to a scalar code over F_q
/// via the augmentation map sum a_g g -> sum a_g (the converse direction).
pub fn collapse_to_scalar(net: &Network, code: &NetworkCode) -> Result<NetworkCode> {
    let m = code.context.group_code()?;
    let field = m.field().clone();
    let collapse = |c: &Coefficient| -> Coefficient {
        match c {
            Coefficient::Algebra(a) => Coefficient::Scalar(
                a.coeffs()
                    .iter()
                    .fold(field.zero(), |acc, x| acc.add(x)),
            ),
            Coefficient::Scalar(_) => unreachable!("group-code context"),
        }
    };
    let mut out = NetworkCode::new(ModuleContext::Scalar(field.clone()));
    for (&(d, e), c) in code.encoding() {
        out.set_encoding(net, d, e, collapse(c))?;
    }
    for (&(sink, d, mi), c) in code.decoding() {
        out.set_decoding(net, sink, d, mi, collapse(c))?;
    }
    Ok(out)
}

// ---- rotate-and-add construction ----

/// The rotate-and-add construction: for odd prime n with 2 primitive mod n and at
/// most n sinks, builds a circular-shift solution of rate (n-1)/n in which
/// every encoding coefficient is a single rotation (weight 1) and every
/// decoding coefficient has weight at most (n-1)/2.
pub fn rotate_and_add(instance: &MulticastInstance, n: u64) -> Result<NetworkCode> {
    if !is_prime(n) || n == 2 {
        return Err(Error::Precondition(format!("n = {n} is not an odd prime")));
    }
    if mult_order(2, n)? != n - 1 {
        return Err(Error::Precondition(format!("2 is not primitive mod {n}")));
    }
    if instance.num_sinks() as u64 > n {
        return Err(Error::Precondition(format!(
            "{} sinks exceed the bound n = {n}",
            instance.num_sinks()
        )));
    }
    let group = Group::new(&[n])?;
    let d = decompose(&group, 2)?;
    debug_assert_eq!(d.num_components(), 2);
    let t_set: BTreeSet<usize> = [2usize].into_iter().collect();
    let m = Arc::new(ideal_from_t(&d, &t_set)?);

    let field = d.splitting_field().clone(); // GF(2^{n-1})
    let alpha = field.primitive().pow((field.order() - 1) / n);
    let allowed: Vec<FieldElement> = (0..n).map(|i| alpha.pow(i)).collect();
    let sol = jaggi_sanders(instance, &field, Some(&allowed))?;

    let net = &instance.network;
    let dlog = |x: &FieldElement| -> usize {
        (0..n as usize)
            .find(|&i| alpha.pow(i as u64) == *x)
            .expect("coefficients are powers of alpha")
    };
    let mut out = NetworkCode::new(ModuleContext::Code(m.clone()));
    // encoding alpha^i -> the single rotation 1 * y^i
    for (&(di, ei), c) in sol.code.encoding() {
        let i = dlog(&scalar_coeff(Some(c)));
        let coeff = AlgebraElement::basis(&group, m.field(), i);
        out.set_encoding(net, di, ei, Coefficient::Algebra(coeff))?;
    }
    // decoding through Phi^{-1}((0, k)) followed by degree reduction
    for (&(sink, di, mi), c) in sol.code.decoding() {
        let k = scalar_coeff(Some(c));
        let spectrum = Spectrum {
            components: vec![field.zero(), k],
        };
        let a = m.degree_reduce(&d.phi_inverse(&spectrum)?)?;
        out.set_decoding(net, sink, di, mi, Coefficient::Algebra(a))?;
    }
    if !verify_solution(net, &out)? {
        return Err(Error::ConstructionFailed(
            "rotate-and-add code failed verification".to_string(),
        ));
    }
    Ok(out)
}

// ---- standard generators ----

/// The classic 2-message butterfly (sources s1, s2; bottleneck u -> w; sinks
/// t1, t2 demanding both messages).
pub fn build_butterfly() -> MulticastInstance {
    let spec = NetworkSpec {
        nodes: ["s1", "s2", "u", "w", "t1", "t2"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        edges: vec![
            edge("e1", "s1", "t1"),
            edge("e2", "s1", "u"),
            edge("e3", "s2", "u"),
            edge("e4", "s2", "t2"),
            edge("e5", "u", "w"),
            edge("e6", "w", "t1"),
            edge("e7", "w", "t2"),
        ],
        messages: vec![
            MessageSpec { id: "Z1".into(), source: "s1".into() },
            MessageSpec { id: "Z2".into(), source: "s2".into() },
        ],
        demands: ["t1", "t2"]
            .iter()
            .flat_map(|t| {
                ["Z1", "Z2"].iter().map(|z| DemandSpec {
                    sink: t.to_string(),
                    message: z.to_string(),
                })
            })
            .collect(),
    };
    let network = Network::from_spec(&spec).expect("butterfly is well-formed");
    MulticastInstance::new(network).expect("butterfly is multicast")
}

fn edge(id: &str, tail: &str, head: &str) -> EdgeSpec {
    EdgeSpec {
        id: id.into(),
        tail: tail.into(),
        head: head.into(),
    }
}

fn subsets_of_size(n: usize, h: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..h).collect();
    loop {
        out.push(cur.clone());
        let mut i = h;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - h {
                cur[i] += 1;
                for j in i + 1..h {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// The C(N, h) combination network: h message sources feed a hub, the hub
/// feeds N relays, and each h-subset of relays feeds one sink demanding all
/// h messages.
pub fn build_combination(n: usize, h: usize) -> Result<MulticastInstance> {
    if h == 0 || h > n {
        return Err(Error::Precondition(format!(
            "need 1 <= h <= N, got h = {h}, N = {n}"
        )));
    }
    let mut nodes: Vec<String> = (1..=h).map(|i| format!("s{i}")).collect();
    nodes.push("hub".to_string());
    nodes.extend((1..=n).map(|j| format!("r{j}")));
    let mut edges = Vec::new();
    for i in 1..=h {
        edges.push(edge(&format!("in{i}"), &format!("s{i}"), "hub"));
    }
    for j in 1..=n {
        edges.push(edge(&format!("mid{j}"), "hub", &format!("r{j}")));
    }
    let mut demands = Vec::new();
    for subset in subsets_of_size(n, h) {
        let name = format!(
            "t{}",
            subset
                .iter()
                .map(|j| (j + 1).to_string())
                .collect::<Vec<_>>()
                .join("_")
        );
        for &j in &subset {
            edges.push(edge(
                &format!("out{}_{name}", j + 1),
                &format!("r{}", j + 1),
                &name,
            ));
        }
        for i in 1..=h {
            demands.push(DemandSpec {
                sink: name.clone(),
                message: format!("Z{i}"),
            });
        }
        nodes.push(name);
    }
    let messages = (1..=h)
        .map(|i| MessageSpec {
            id: format!("Z{i}"),
            source: format!("s{i}"),
        })
        .collect();
    let spec = NetworkSpec {
        nodes,
        edges,
        messages,
        demands,
    };
    MulticastInstance::new(Network::from_spec(&spec)?)
}
