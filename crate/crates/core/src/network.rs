//! Hamiltonians of spin networks and of their coupling to baths.
//!
//! Two system models are supported on a weighted coupling graph:
//!
//! - the qudit swap network `H_A = Σ_edges J S_{kk'}`, and
//! - the qubit XXZ chain `H_A = Σ_edges (J/2)(σˣσˣ + σʸσʸ + Δ σᶻσᶻ)`.
//!
//! Each edge of the graph is counted once (unordered pairs). At `d = 2` and
//! `Δ = 1` the two models differ by the constant `Σ_edges J/2`, which only
//! contributes a global phase to a collision.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qmath::{check_normalized, embed, pauli_x, pauli_y, pauli_z, ComplexMatrix, SubsystemShape};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub coupling: f64,
}

/// Sites and weighted undirected edges, at most one per pair.
#[derive(Clone, Debug, PartialEq)]
pub struct CouplingGraph {
    n_sites: usize,
    edges: Vec<Edge>,
}

impl CouplingGraph {
    pub fn new(n_sites: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        if n_sites == 0 {
            return Err(Error::Argument("a coupling graph needs at least one site".into()));
        }
        let mut out: Vec<Edge> = Vec::new();
        for (a, b, coupling) in edges {
            if a >= n_sites || b >= n_sites {
                return Err(Error::Argument(format!(
                    "edge ({a}, {b}) references a site outside 0..{n_sites}"
                )));
            }
            if a == b {
                return Err(Error::Argument(format!("self-loop at site {a}")));
            }
            if !coupling.is_finite() {
                return Err(Error::Argument(format!("edge ({a}, {b}) has coupling {coupling}")));
            }
            if out.iter().any(|e| (e.a, e.b) == (a, b) || (e.a, e.b) == (b, a)) {
                return Err(Error::Argument(format!("duplicate edge between {a} and {b}")));
            }
            out.push(Edge { a, b, coupling });
        }
        Ok(Self { n_sites, edges: out })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Same graph with every site `k` renamed to `perm[k]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n_sites)?;
        Self::new(
            self.n_sites,
            self.edges.iter().map(|e| (perm[e.a], perm[e.b], e.coupling)),
        )
    }
}

/// Open nearest-neighbour chain with uniform coupling `j`.
pub fn chain_graph(n: usize, j: f64) -> Result<CouplingGraph> {
    if n == 0 {
        return Err(Error::Argument("chain needs at least one site".into()));
    }
    CouplingGraph::new(n, (0..n - 1).map(|k| (k, k + 1, j)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Model {
    SwapNetwork,
    Xxz { delta: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct BathAttachment {
    pub label: String,
    pub site: usize,
}

/// A coupling graph together with its local model and bath attachment sites.
#[derive(Clone, Debug, PartialEq)]
pub struct NetworkSpec {
    graph: CouplingGraph,
    local_dim: usize,
    model: Model,
    baths: Vec<BathAttachment>,
}

impl NetworkSpec {
    pub fn new(
        graph: CouplingGraph,
        local_dim: usize,
        model: Model,
        baths: Vec<BathAttachment>,
    ) -> Result<Self> {
        if local_dim < 2 {
            return Err(Error::Argument(format!("local dimension {local_dim} < 2")));
        }
        if let Model::Xxz { delta } = model {
            if local_dim != 2 {
                return Err(Error::Model(format!(
                    "the XXZ model needs qubits, got local dimension {local_dim}"
                )));
            }
            if !delta.is_finite() {
                return Err(Error::Model(format!("anisotropy {delta} is not finite")));
            }
        }
        for (i, bath) in baths.iter().enumerate() {
            if bath.site >= graph.n_sites() {
                return Err(Error::Argument(format!(
                    "bath `{}` attached to site {} outside 0..{}",
                    bath.label,
                    bath.site,
                    graph.n_sites()
                )));
            }
            if baths[..i].iter().any(|other| other.site == bath.site) {
                return Err(Error::Argument(format!(
                    "more than one bath attached to site {}",
                    bath.site
                )));
            }
        }
        Ok(Self {
            graph,
            local_dim,
            model,
            baths,
        })
    }

    pub fn graph(&self) -> &CouplingGraph {
        &self.graph
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn baths(&self) -> &[BathAttachment] {
        &self.baths
    }

    pub fn n_sites(&self) -> usize {
        self.graph.n_sites()
    }

    pub fn system_dim(&self) -> usize {
        self.local_dim.pow(self.n_sites() as u32)
    }

    pub fn system_shape(&self) -> SubsystemShape {
        SubsystemShape::uniform(self.n_sites(), self.local_dim).expect("validated dimensions")
    }

    /// Sites followed by one factor per bath, in bath order.
    pub fn joint_shape(&self) -> SubsystemShape {
        SubsystemShape::uniform(self.n_sites() + self.baths.len(), self.local_dim)
            .expect("validated dimensions")
    }

    /// System Hamiltonian for the configured model.
    pub fn hamiltonian(&self) -> Result<ComplexMatrix> {
        match self.model {
            Model::SwapNetwork => swap_network_hamiltonian(self),
            Model::Xxz { .. } => xxz_hamiltonian(self),
        }
    }

    /// Swap coupling of bath `index` to its site, on [`Self::joint_shape`].
    pub fn bath_interaction(&self, index: usize) -> Result<ComplexMatrix> {
        let bath = self
            .baths
            .get(index)
            .ok_or_else(|| Error::Argument(format!("no bath with index {index}")))?;
        interaction_hamiltonian(&self.joint_shape(), &[(self.n_sites() + index, bath.site)])
    }

    /// Swap coupling of bath `index` alone, on sites plus that single bath factor.
    pub fn single_bath_interaction(&self, index: usize) -> Result<ComplexMatrix> {
        let bath = self
            .baths
            .get(index)
            .ok_or_else(|| Error::Argument(format!("no bath with index {index}")))?;
        let shape = self.system_shape().extended(&[self.local_dim])?;
        interaction_hamiltonian(&shape, &[(self.n_sites(), bath.site)])
    }
}

/// Permutation matrix exchanging factors `i` and `j`.
pub fn swap_operator(shape: &SubsystemShape, i: usize, j: usize) -> Result<ComplexMatrix> {
    shape.check_factor(i)?;
    shape.check_factor(j)?;
    if i == j {
        return Err(Error::Argument(format!("swap of factor {i} with itself")));
    }
    let dims = shape.dims();
    if dims[i] != dims[j] {
        return Err(Error::Argument(format!(
            "cannot swap factors of dimension {} and {}",
            dims[i], dims[j]
        )));
    }
    let mut perm: Vec<usize> = (0..dims.len()).collect();
    perm.swap(i, j);
    permutation_operator(shape, &perm)
}

/// Unitary `P` moving the content of factor `k` to factor `perm[k]`.
///
/// Every factor must have the same dimension as its destination.
pub fn permutation_operator(shape: &SubsystemShape, perm: &[usize]) -> Result<ComplexMatrix> {
    check_permutation(perm, shape.len())?;
    let dims = shape.dims();
    if perm.iter().enumerate().any(|(k, &p)| dims[k] != dims[p]) {
        return Err(Error::Argument("permutation mixes factors of different dimension".into()));
    }
    let total = shape.total();
    let mut out = ComplexMatrix::zeros(total, total);
    let mut target = vec![0; dims.len()];
    for source in 0..total {
        let digits = shape.digits(source);
        for (k, &p) in perm.iter().enumerate() {
            target[p] = digits[k];
        }
        out[(shape.index_of(&target), source)] = Complex64::new(1.0, 0.0);
    }
    Ok(out)
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Argument(format!("permutation of length {} for {n} items", perm.len())));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Argument(format!("{perm:?} is not a permutation of 0..{n}")));
        }
    }
    Ok(())
}

pub fn swap_network_hamiltonian(spec: &NetworkSpec) -> Result<ComplexMatrix> {
    if spec.model != Model::SwapNetwork {
        return Err(Error::Model("swap_network_hamiltonian needs the swap-network model".into()));
    }
    let shape = spec.system_shape();
    let mut h = ComplexMatrix::zeros(shape.total(), shape.total());
    for e in spec.graph.edges() {
        h += &swap_operator(&shape, e.a, e.b)?.scale_real(e.coupling);
    }
    Ok(h)
}

pub fn xxz_hamiltonian(spec: &NetworkSpec) -> Result<ComplexMatrix> {
    let Model::Xxz { delta } = spec.model else {
        return Err(Error::Model("xxz_hamiltonian needs the XXZ model".into()));
    };
    if spec.local_dim != 2 {
        return Err(Error::Model("the XXZ model needs qubits".into()));
    }
    let shape = spec.system_shape();
    let (x, y, z) = (pauli_x(), pauli_y(), pauli_z());
    let mut h = ComplexMatrix::zeros(shape.total(), shape.total());
    for e in spec.graph.edges() {
        let xx = embed(&shape, &[(e.a, &x), (e.b, &x)])?;
        let yy = embed(&shape, &[(e.a, &y), (e.b, &y)])?;
        let zz = embed(&shape, &[(e.a, &z), (e.b, &z)])?;
        let mut term = &xx + &yy;
        term += &zz.scale_real(delta);
        h += &term.scale_real(e.coupling / 2.0);
    }
    Ok(h)
}

/// `Σ S_{ancilla, site}` over the given `(ancilla factor, system site)` pairs,
/// with unit coupling. An empty list gives the zero operator.
pub fn interaction_hamiltonian(
    shape: &SubsystemShape,
    pairs: &[(usize, usize)],
) -> Result<ComplexMatrix> {
    let total = shape.total();
    let mut h = ComplexMatrix::zeros(total, total);
    for &(ancilla, site) in pairs {
        h += &swap_operator(shape, ancilla, site)?;
    }
    Ok(h)
}

/// `M = −Σ_k |φ⟩⟨φ|_k` over every factor of `shape`.
///
/// Its eigenvalues are minus the number of factors found in `|φ⟩`.
pub fn excitation_observable(phi: &[Complex64], shape: &SubsystemShape) -> Result<ComplexMatrix> {
    check_normalized(phi)?;
    if shape.dims().iter().any(|&d| d != phi.len()) {
        return Err(Error::Argument(format!(
            "φ has dimension {} but the shape is {:?}",
            phi.len(),
            shape.dims()
        )));
    }
    let projector = ComplexMatrix::outer(phi, phi);
    let total = shape.total();
    let mut m = ComplexMatrix::zeros(total, total);
    for k in 0..shape.len() {
        m += &embed(shape, &[(k, &projector)])?;
    }
    Ok(-&m)
}
