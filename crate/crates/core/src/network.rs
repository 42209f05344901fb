//! Directed-acyclic-multigraph network model, execution of linear network
//! codes over a module (field scalar or group-code ideal), solution
//! verification, code-degree accounting, annihilator perturbation, and
//! whole-code degree reduction.

use crate::algebra::{AlgebraElement, EdgeVector};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::ideal::{ideal_from_t, GroupCode};
use crate::group::Group;
use crate::spectral::decompose;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

// ---- network topology ----

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub id: String,
    pub tail: String,
    pub head: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MessageSpec {
    pub id: String,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemandSpec {
    pub sink: String,
    pub message: String,
}

/// Serialized network shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkSpec {
    pub nodes: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    pub messages: Vec<MessageSpec>,
    pub demands: Vec<DemandSpec>,
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// A validated acyclic network with one source node per message.
#[derive(Debug, Clone)]
pub struct Network {
    nodes: Vec<String>,
    edges: Vec<Edge>,
    /// (message id, source node) per message.
    messages: Vec<(String, usize)>,
    /// (sink node, message index) per demand.
    demands: Vec<(usize, usize)>,
    in_edges: Vec<Vec<usize>>,
    out_edges: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl Network {
    pub fn from_spec(spec: &NetworkSpec) -> Result<Network> {
        let mut node_index = HashMap::new();
        for (i, id) in spec.nodes.iter().enumerate() {
            if node_index.insert(id.clone(), i).is_some() {
                return Err(Error::BadNetwork(format!("duplicate node '{id}'")));
            }
        }
        let look = |id: &str| -> Result<usize> {
            node_index
                .get(id)
                .copied()
                .ok_or_else(|| Error::BadNetwork(format!("unknown node '{id}'")))
        };
        let mut edges = Vec::with_capacity(spec.edges.len());
        let mut edge_ids = HashMap::new();
        for e in &spec.edges {
            if edge_ids.insert(e.id.clone(), edges.len()).is_some() {
                return Err(Error::BadNetwork(format!("duplicate edge '{}'", e.id)));
            }
            edges.push(Edge {
                id: e.id.clone(),
                tail: look(&e.tail)?,
                head: look(&e.head)?,
            });
        }
        let mut messages = Vec::with_capacity(spec.messages.len());
        let mut msg_index = HashMap::new();
        let mut source_of = HashMap::new();
        for m in &spec.messages {
            if msg_index.insert(m.id.clone(), messages.len()).is_some() {
                return Err(Error::BadNetwork(format!("duplicate message '{}'", m.id)));
            }
            let src = look(&m.source)?;
            if source_of.insert(src, m.id.clone()).is_some() {
                return Err(Error::BadNetwork(format!(
                    "node '{}' is the source of more than one message",
                    m.source
                )));
            }
            messages.push((m.id.clone(), src));
        }
        let mut demands = Vec::with_capacity(spec.demands.len());
        for d in &spec.demands {
            let sink = look(&d.sink)?;
            let mi = *msg_index
                .get(&d.message)
                .ok_or_else(|| Error::BadNetwork(format!("unknown message '{}'", d.message)))?;
            demands.push((sink, mi));
        }
        let n = spec.nodes.len();
        let mut in_edges = vec![Vec::new(); n];
        let mut out_edges = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.tail].push(i);
            in_edges[e.head].push(i);
        }
        // sources have no incoming edges
        for &(_, src) in &messages {
            if !in_edges[src].is_empty() {
                return Err(Error::BadNetwork(format!(
                    "source node '{}' has incoming edges",
                    spec.nodes[src]
                )));
            }
        }
        // Kahn topological sort
        let mut indeg: Vec<usize> = in_edges.iter().map(|v| v.len()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &e in &out_edges[v] {
                let h = edges[e].head;
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    queue.push(h);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CycleDetected);
        }
        Ok(Network {
            nodes: spec.nodes.clone(),
            edges,
            messages,
            demands,
            in_edges,
            out_edges,
            topo,
        })
    }

    pub fn to_spec(&self) -> NetworkSpec {
        NetworkSpec {
            nodes: self.nodes.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    id: e.id.clone(),
                    tail: self.nodes[e.tail].clone(),
                    head: self.nodes[e.head].clone(),
                })
                .collect(),
            messages: self
                .messages
                .iter()
                .map(|(id, src)| MessageSpec {
                    id: id.clone(),
                    source: self.nodes[*src].clone(),
                })
                .collect(),
            demands: self
                .demands
                .iter()
                .map(|&(sink, mi)| DemandSpec {
                    sink: self.nodes[sink].clone(),
                    message: self.messages[mi].0.clone(),
                })
                .collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
    pub fn node_name(&self, v: usize) -> &str {
        &self.nodes[v]
    }
    pub fn node_by_name(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == name)
    }
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }
    pub fn messages(&self) -> &[(String, usize)] {
        &self.messages
    }
    pub fn message_by_id(&self, id: &str) -> Option<usize> {
        self.messages.iter().position(|(m, _)| m == id)
    }
    pub fn demands(&self) -> &[(usize, usize)] {
        &self.demands
    }
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }
    /// Topological order of the nodes.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }
    /// The message index whose source is node v, if any.
    pub fn message_at(&self, v: usize) -> Option<usize> {
        self.messages.iter().position(|&(_, s)| s == v)
    }
    /// Sink nodes in demand order, deduplicated.
    pub fn sinks(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &(s, _) in &self.demands {
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out
    }
}

// ---- module context, coefficients, symbols ----

/// The module the network code operates over: a plain field (scalar linear
/// network coding) or an ideal M of a group algebra.
#[derive(Debug, Clone)]
pub enum ModuleContext {
    Scalar(Field),
    Code(Arc<GroupCode>),
}

/// A coding coefficient: ring element of the context's coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coefficient {
    Scalar(FieldElement),
    Algebra(AlgebraElement),
}

impl Coefficient {
    pub fn weight(&self) -> usize {
        match self {
            Coefficient::Scalar(c) => usize::from(!c.is_zero()),
            Coefficient::Algebra(a) => a.weight(),
        }
    }
}

/// A module element: a message value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleElement {
    Scalar(FieldElement),
    Code(AlgebraElement),
}

/// The symbol carried on an edge: tau of a module element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Symbol {
    Scalar(FieldElement),
    Vector(EdgeVector),
}

impl ModuleContext {
    /// Dimension of the message space over the base field (1 for scalar).
    pub fn message_dim(&self) -> usize {
        match self {
            ModuleContext::Scalar(_) => 1,
            ModuleContext::Code(m) => m.dimension(),
        }
    }

    pub fn group_code(&self) -> Result<&Arc<GroupCode>> {
        match self {
            ModuleContext::Scalar(_) => Err(Error::ScalarContext),
            ModuleContext::Code(m) => Ok(m),
        }
    }

    fn zero_symbol(&self) -> Symbol {
        match self {
            ModuleContext::Scalar(f) => Symbol::Scalar(f.zero()),
            ModuleContext::Code(m) => {
                Symbol::Vector(EdgeVector::zero(m.field(), m.length()))
            }
        }
    }

    pub fn zero_element(&self) -> ModuleElement {
        match self {
            ModuleContext::Scalar(f) => ModuleElement::Scalar(f.zero()),
            ModuleContext::Code(m) => {
                ModuleElement::Code(AlgebraElement::zero(m.group(), m.field()))
            }
        }
    }

    pub fn zero_coefficient(&self) -> Coefficient {
        match self {
            ModuleContext::Scalar(f) => Coefficient::Scalar(f.zero()),
            ModuleContext::Code(m) => {
                Coefficient::Algebra(AlgebraElement::zero(m.group(), m.field()))
            }
        }
    }

    /// Base-field basis of the message space.
    pub fn message_basis(&self) -> Vec<ModuleElement> {
        match self {
            ModuleContext::Scalar(f) => vec![ModuleElement::Scalar(f.one())],
            ModuleContext::Code(m) => m
                .basis()
                .iter()
                .map(|b| ModuleElement::Code(b.clone()))
                .collect(),
        }
    }

    /// tau of a module element, with membership check for code contexts.
    pub fn message_symbol(&self, z: &ModuleElement) -> Result<Symbol> {
        match (self, z) {
            (ModuleContext::Scalar(f), ModuleElement::Scalar(x)) => {
                if x.field() != f {
                    return Err(Error::FieldMismatch);
                }
                Ok(Symbol::Scalar(x.clone()))
            }
            (ModuleContext::Code(m), ModuleElement::Code(a)) => {
                if !m.contains(a)? {
                    return Err(Error::MessageOutsideModule);
                }
                Ok(Symbol::Vector(a.tau_nat()))
            }
            _ => Err(Error::ContextMismatch),
        }
    }

    fn apply_coeff(&self, c: &Coefficient, x: &Symbol) -> Result<Symbol> {
        match (c, x) {
            (Coefficient::Scalar(c), Symbol::Scalar(x)) => Ok(Symbol::Scalar(c.mul(x))),
            (Coefficient::Algebra(a), Symbol::Vector(v)) => Ok(Symbol::Vector(a.apply(v)?)),
            _ => Err(Error::ContextMismatch),
        }
    }

    fn add_symbols(&self, a: &Symbol, b: &Symbol) -> Result<Symbol> {
        match (a, b) {
            (Symbol::Scalar(x), Symbol::Scalar(y)) => Ok(Symbol::Scalar(x.add(y))),
            (Symbol::Vector(x), Symbol::Vector(y)) => Ok(Symbol::Vector(x.add(y)?)),
            _ => Err(Error::ContextMismatch),
        }
    }
}

// ---- network codes ----

/// Encoding coefficients k^{d,e} for adjacent edge pairs and decoding
/// coefficients k^{d,i} for sink in-edges; absent entries are zero.
#[derive(Debug, Clone)]
pub struct NetworkCode {
    pub context: ModuleContext,
    encoding: BTreeMap<(usize, usize), Coefficient>,
    decoding: BTreeMap<(usize, usize, usize), Coefficient>,
}

impl NetworkCode {
    pub fn new(context: ModuleContext) -> NetworkCode {
        NetworkCode {
            context,
            encoding: BTreeMap::new(),
            decoding: BTreeMap::new(),
        }
    }

    fn check_coeff(&self, c: &Coefficient) -> Result<()> {
        match (&self.context, c) {
            (ModuleContext::Scalar(f), Coefficient::Scalar(x)) => {
                if x.field() != f {
                    return Err(Error::FieldMismatch);
                }
            }
            (ModuleContext::Code(m), Coefficient::Algebra(a)) => {
                if a.group() != m.group() || a.field() != m.field() {
                    return Err(Error::ContextMismatch);
                }
            }
            _ => return Err(Error::ContextMismatch),
        }
        Ok(())
    }

    /// Sets k^{d,e}; (d, e) must be adjacent through a common node.
    pub fn set_encoding(
        &mut self,
        net: &Network,
        d: usize,
        e: usize,
        coeff: Coefficient,
    ) -> Result<()> {
        if net.edges()[d].head != net.edges()[e].tail {
            return Err(Error::BadNetwork(format!(
                "edges '{}' and '{}' are not adjacent",
                net.edges()[d].id,
                net.edges()[e].id
            )));
        }
        self.check_coeff(&coeff)?;
        self.encoding.insert((d, e), coeff);
        Ok(())
    }

    /// Sets the decoding coefficient k^{d,i} at a sink.
    pub fn set_decoding(
        &mut self,
        net: &Network,
        sink: usize,
        d: usize,
        msg: usize,
        coeff: Coefficient,
    ) -> Result<()> {
        if net.edges()[d].head != sink {
            return Err(Error::BadNetwork(format!(
                "edge '{}' does not enter node '{}'",
                net.edges()[d].id,
                net.node_name(sink)
            )));
        }
        if msg >= net.messages().len() {
            return Err(Error::BadNetwork(format!("unknown message index {msg}")));
        }
        self.check_coeff(&coeff)?;
        self.decoding.insert((sink, d, msg), coeff);
        Ok(())
    }

    pub fn encoding(&self) -> &BTreeMap<(usize, usize), Coefficient> {
        &self.encoding
    }
    pub fn decoding(&self) -> &BTreeMap<(usize, usize, usize), Coefficient> {
        &self.decoding
    }

    pub fn encoding_coeff(&self, d: usize, e: usize) -> Option<&Coefficient> {
        self.encoding.get(&(d, e))
    }
    pub fn decoding_coeff(&self, sink: usize, d: usize, msg: usize) -> Option<&Coefficient> {
        self.decoding.get(&(sink, d, msg))
    }
}

/// The computed state of one execution: every edge symbol and every decoded
/// demand value.
#[derive(Debug, Clone)]
pub struct ExecutionTrace {
    pub edge_symbols: Vec<Symbol>,
    /// (sink node, message index) -> decoded symbol.
    pub decoded: BTreeMap<(usize, usize), Symbol>,
}

/// Forward pass in topological order, then sink decoding.
pub fn execute(
    net: &Network,
    code: &NetworkCode,
    messages: &[ModuleElement],
) -> Result<ExecutionTrace> {
    if messages.len() != net.messages().len() {
        return Err(Error::LengthMismatch {
            expected: net.messages().len(),
            got: messages.len(),
        });
    }
    let ctx = &code.context;
    let source_symbols: Vec<Symbol> = messages
        .iter()
        .map(|z| ctx.message_symbol(z))
        .collect::<Result<_>>()?;
    let mut edge_symbols: Vec<Symbol> = vec![ctx.zero_symbol(); net.edges().len()];
    for &v in net.topological_order() {
        if let Some(mi) = net.message_at(v) {
            // assumption (iii): sources replicate their message verbatim
            for &e in net.out_edges(v) {
                edge_symbols[e] = source_symbols[mi].clone();
            }
            continue;
        }
        for &e in net.out_edges(v) {
            let mut acc = ctx.zero_symbol();
            for &d in net.in_edges(v) {
                if let Some(k) = code.encoding_coeff(d, e) {
                    let term = ctx.apply_coeff(k, &edge_symbols[d])?;
                    acc = ctx.add_symbols(&acc, &term)?;
                }
            }
            edge_symbols[e] = acc;
        }
    }
    let mut decoded = BTreeMap::new();
    for &(sink, mi) in net.demands() {
        let mut acc = ctx.zero_symbol();
        for &d in net.in_edges(sink) {
            if let Some(k) = code.decoding_coeff(sink, d, mi) {
                let term = ctx.apply_coeff(k, &edge_symbols[d])?;
                acc = ctx.add_symbols(&acc, &term)?;
            }
        }
        decoded.insert((sink, mi), acc);
    }
    Ok(ExecutionTrace {
        edge_symbols,
        decoded,
    })
}

/// First failing (message index, basis index) pair, or None when the code is
/// a solution. Checking base-field basis tuples suffices by linearity.
pub fn find_counterexample(net: &Network, code: &NetworkCode) -> Result<Option<(usize, usize)>> {
    let ctx = &code.context;
    let basis = ctx.message_basis();
    let s = net.messages().len();
    for mi in 0..s {
        for (bi, b) in basis.iter().enumerate() {
            let mut messages = vec![ctx.zero_element(); s];
            messages[mi] = b.clone();
            let trace = execute(net, code, &messages)?;
            for &(sink, di) in net.demands() {
                let expected = ctx.message_symbol(&messages[di])?;
                if trace.decoded[&(sink, di)] != expected {
                    return Ok(Some((mi, bi)));
                }
            }
        }
    }
    Ok(None)
}

/// True iff every sink recovers each of its demanded messages exactly.
pub fn verify_solution(net: &Network, code: &NetworkCode) -> Result<bool> {
    Ok(find_counterexample(net, code)?.is_none())
}

/// Max coefficient weight (Definition-1 degree). Scalar contexts have no
/// degree.
pub fn code_degree(code: &NetworkCode) -> Result<usize> {
    code.context.group_code()?;
    Ok(code
        .encoding
        .values()
        .chain(code.decoding.values())
        .map(|c| c.weight())
        .max()
        .unwrap_or(0))
}

/// Adds the given annihilator elements to the chosen coefficients. Each pick
/// is membership-checked against Ann(M); edge symbols are provably unchanged.
pub fn perturb_with_annihilator(
    net: &Network,
    code: &NetworkCode,
    enc_picks: &BTreeMap<(usize, usize), AlgebraElement>,
    dec_picks: &BTreeMap<(usize, usize, usize), AlgebraElement>,
) -> Result<NetworkCode> {
    let m = code.context.group_code()?;
    let ann = m.annihilator();
    let perturb = |c: Option<&Coefficient>, a: &AlgebraElement| -> Result<Coefficient> {
        if !ann.contains(a)? {
            return Err(Error::NotInAnnihilator);
        }
        let base = match c {
            Some(Coefficient::Algebra(k)) => k.clone(),
            None => AlgebraElement::zero(m.group(), m.field()),
            Some(Coefficient::Scalar(_)) => return Err(Error::ContextMismatch),
        };
        Ok(Coefficient::Algebra(base.add(a)?))
    };
    let mut out = code.clone();
    for (&(d, e), a) in enc_picks {
        let c = perturb(code.encoding_coeff(d, e), a)?;
        out.set_encoding(net, d, e, c)?;
    }
    for (&(sink, d, mi), a) in dec_picks {
        let c = perturb(code.decoding_coeff(sink, d, mi), a)?;
        out.set_decoding(net, sink, d, mi, c)?;
    }
    Ok(out)
}

/// Degree-reduces every encoding and decoding coefficient against Ann(M).
pub fn reduce_code_degree(code: &NetworkCode) -> Result<NetworkCode> {
    let m = code.context.group_code()?.clone();
    let reduce = |c: &Coefficient| -> Result<Coefficient> {
        match c {
            Coefficient::Algebra(a) => Ok(Coefficient::Algebra(m.degree_reduce(a)?)),
            Coefficient::Scalar(_) => Err(Error::ContextMismatch),
        }
    };
    let mut out = NetworkCode::new(code.context.clone());
    for (&k, c) in &code.encoding {
        out.encoding.insert(k, reduce(c)?);
    }
    for (&k, c) in &code.decoding {
        out.decoding.insert(k, reduce(c)?);
    }
    Ok(out)
}

/// dim(M)/n (or dim(M)/(n-1) under bit truncation); 1 for scalar contexts.
pub fn network_rate(code: &NetworkCode, truncate: bool) -> Ratio<u64> {
    match &code.context {
        ModuleContext::Scalar(_) => Ratio::new(1, 1),
        ModuleContext::Code(m) => {
            let n = m.length() as u64;
            let denom = if truncate { n - 1 } else { n };
            Ratio::new(m.dimension() as u64, denom)
        }
    }
}

// ---- serialization of codes ----

/// Serialized module context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ContextSpec {
    Scalar { q: u64 },
    Code { group: String, q: u64, support: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodingEntry {
    pub in_edge: String,
    pub out_edge: String,
    pub coeff: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodingEntry {
    pub sink: String,
    pub in_edge: String,
    pub message: String,
    pub coeff: Vec<u64>,
}

/// Serialized network code; coefficients are element-index lists (length 1
/// for scalar contexts, length n for group-code contexts).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkCodeSpec {
    pub context: ContextSpec,
    pub encoding: Vec<EncodingEntry>,
    pub decoding: Vec<DecodingEntry>,
}

pub fn context_from_spec(spec: &ContextSpec) -> Result<ModuleContext> {
    match spec {
        ContextSpec::Scalar { q } => Ok(ModuleContext::Scalar(Field::of_size(*q)?)),
        ContextSpec::Code { group, q, support } => {
            let g = Group::parse(group)?;
            let d = decompose(&g, *q)?;
            let t_set = support.iter().copied().collect();
            Ok(ModuleContext::Code(Arc::new(ideal_from_t(&d, &t_set)?)))
        }
    }
}

pub fn context_to_spec(ctx: &ModuleContext) -> Result<ContextSpec> {
    match ctx {
        ModuleContext::Scalar(f) => Ok(ContextSpec::Scalar { q: f.order() }),
        ModuleContext::Code(m) => {
            let support = m
                .support()
                .ok_or_else(|| {
                    Error::Precondition(
                        "only spectrally-constructed ideals serialize".to_string(),
                    )
                })?
                .iter()
                .copied()
                .collect();
            Ok(ContextSpec::Code {
                group: m.group().to_string(),
                q: m.field().order(),
                support,
            })
        }
    }
}

impl NetworkCode {
    fn coeff_to_indices(&self, c: &Coefficient) -> Vec<u64> {
        match c {
            Coefficient::Scalar(x) => vec![x.index()],
            Coefficient::Algebra(a) => a.coeffs().iter().map(|x| x.index()).collect(),
        }
    }

    fn coeff_from_indices(&self, idxs: &[u64]) -> Result<Coefficient> {
        match &self.context {
            ModuleContext::Scalar(f) => {
                if idxs.len() != 1 {
                    return Err(Error::LengthMismatch {
                        expected: 1,
                        got: idxs.len(),
                    });
                }
                Ok(Coefficient::Scalar(f.element_from_index(idxs[0])))
            }
            ModuleContext::Code(m) => {
                let coeffs = idxs
                    .iter()
                    .map(|&i| m.field().element_from_index(i))
                    .collect();
                Ok(Coefficient::Algebra(AlgebraElement::new(
                    m.group(),
                    m.field(),
                    coeffs,
                )?))
            }
        }
    }

    pub fn to_spec(&self, net: &Network) -> Result<NetworkCodeSpec> {
        let encoding = self
            .encoding
            .iter()
            .map(|(&(d, e), c)| EncodingEntry {
                in_edge: net.edges()[d].id.clone(),
                out_edge: net.edges()[e].id.clone(),
                coeff: self.coeff_to_indices(c),
            })
            .collect();
        let decoding = self
            .decoding
            .iter()
            .map(|(&(sink, d, mi), c)| DecodingEntry {
                sink: net.node_name(sink).to_string(),
                in_edge: net.edges()[d].id.clone(),
                message: net.messages()[mi].0.clone(),
                coeff: self.coeff_to_indices(c),
            })
            .collect();
        Ok(NetworkCodeSpec {
            context: context_to_spec(&self.context)?,
            encoding,
            decoding,
        })
    }

    pub fn from_spec(net: &Network, spec: &NetworkCodeSpec) -> Result<NetworkCode> {
        let context = context_from_spec(&spec.context)?;
        let mut code = NetworkCode::new(context);
        for e in &spec.encoding {
            let d = net
                .edge_by_id(&e.in_edge)
                .ok_or_else(|| Error::BadNetwork(format!("unknown edge '{}'", e.in_edge)))?;
            let o = net
                .edge_by_id(&e.out_edge)
                .ok_or_else(|| Error::BadNetwork(format!("unknown edge '{}'", e.out_edge)))?;
            let c = code.coeff_from_indices(&e.coeff)?;
            code.set_encoding(net, d, o, c)?;
        }
        for dent in &spec.decoding {
            let sink = net
                .node_by_name(&dent.sink)
                .ok_or_else(|| Error::BadNetwork(format!("unknown node '{}'", dent.sink)))?;
            let d = net
                .edge_by_id(&dent.in_edge)
                .ok_or_else(|| Error::BadNetwork(format!("unknown edge '{}'", dent.in_edge)))?;
            let mi = net
                .message_by_id(&dent.message)
                .ok_or_else(|| Error::BadNetwork(format!("unknown message '{}'", dent.message)))?;
            let c = code.coeff_from_indices(&dent.coeff)?;
            code.set_decoding(net, sink, d, mi, c)?;
        }
        Ok(code)
    }
}
