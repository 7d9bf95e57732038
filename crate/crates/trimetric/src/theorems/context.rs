//! Per-graph memoization for theorem checks: each auxiliary invariant is
//! computed at most once no matter how many statements ask for it.
//!
//! Callers guarantee the graph is connected with n >= 3; the capped
//! searches surface their caps as `None` so the registry can report
//! `InapplicableCap` instead of failing a sweep.

use crate::domination::{domination_number, DominationVariant};
use crate::error::Error;
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::iso::are_isomorphic;
use crate::metrics::{
    chromatic_number, girth, has_triangle, is_hamiltonian, is_vertex_transitive,
    srg_parameters, vertex_connectivity, wiener_from, DistanceMatrix, SrgParams,
};
use crate::triameter::triameter;

/// What a check needs to know about the complement.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CompInfo {
    pub connected: bool,
    /// `None` when the complement is disconnected.
    pub tr: Option<u32>,
    /// `None` when the complement is disconnected.
    pub diam: Option<u32>,
    pub has_triangle: bool,
}

pub(crate) struct CheckContext<'g> {
    pub g: &'g Graph,
    dm: Option<DistanceMatrix>,
    tri: Option<u32>,
    rad_diam: Option<(u32, u32)>,
    girth: Option<Option<u32>>,
    wiener: Option<u64>,
    chromatic: Option<Option<u32>>,
    kappa: Option<Option<u32>>,
    hamiltonian: Option<Option<bool>>,
    vertex_transitive: Option<Option<bool>>,
    srg: Option<Option<SrgParams>>,
    gamma: Option<Option<u32>>,
    gamma_c: Option<Option<u32>>,
    gamma_t: Option<Option<u32>>,
    comp: Option<CompInfo>,
    product_tr: Option<(u32, u32)>,
    grid_match: Option<Option<(usize, usize)>>,
}

/// Maps a capped exact search onto `Option`, letting real errors panic:
/// the admissibility gate has already excluded them.
fn capped<T>(r: Result<T, Error>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => panic!("unexpected invariant failure on an admissible graph: {e}"),
    }
}

impl<'g> CheckContext<'g> {
    pub(crate) fn new(g: &'g Graph) -> CheckContext<'g> {
        CheckContext {
            g,
            dm: None,
            tri: None,
            rad_diam: None,
            girth: None,
            wiener: None,
            chromatic: None,
            kappa: None,
            hamiltonian: None,
            vertex_transitive: None,
            srg: None,
            gamma: None,
            gamma_c: None,
            gamma_t: None,
            comp: None,
            product_tr: None,
            grid_match: None,
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.g.n()
    }

    pub(crate) fn is_tree(&self) -> bool {
        // Connectivity is guaranteed, so the edge count decides.
        self.g.m() == self.g.n() - 1
    }

    pub(crate) fn is_cyclic(&self) -> bool {
        self.g.m() >= self.g.n()
    }

    fn dm(&mut self) -> &DistanceMatrix {
        if self.dm.is_none() {
            self.dm = Some(DistanceMatrix::compute(self.g));
        }
        self.dm.as_ref().unwrap()
    }

    pub(crate) fn tri(&mut self) -> u32 {
        if self.tri.is_none() {
            self.tri = Some(
                triameter(self.g)
                    .expect("triameter is defined on admissible graphs")
                    .value,
            );
        }
        self.tri.unwrap()
    }

    pub(crate) fn rad_diam(&mut self) -> (u32, u32) {
        if self.rad_diam.is_none() {
            let ecc = self.dm().eccentricities();
            let rad = *ecc.iter().min().expect("n >= 1") as u32;
            let diam = *ecc.iter().max().expect("n >= 1") as u32;
            self.rad_diam = Some((rad, diam));
        }
        self.rad_diam.unwrap()
    }

    pub(crate) fn girth(&mut self) -> Option<u32> {
        if self.girth.is_none() {
            self.girth = Some(girth(self.g));
        }
        self.girth.unwrap()
    }

    pub(crate) fn wiener(&mut self) -> u64 {
        if self.wiener.is_none() {
            let w = wiener_from(self.dm()).expect("admissible graphs are connected");
            self.wiener = Some(w);
        }
        self.wiener.unwrap()
    }

    pub(crate) fn min_max_degree(&self) -> (usize, usize) {
        let degrees = self.g.degrees();
        (
            *degrees.iter().min().expect("n >= 1"),
            *degrees.iter().max().expect("n >= 1"),
        )
    }

    pub(crate) fn chromatic(&mut self) -> Option<u32> {
        if self.chromatic.is_none() {
            self.chromatic = Some(capped(chromatic_number(self.g)));
        }
        self.chromatic.unwrap()
    }

    pub(crate) fn kappa(&mut self) -> Option<u32> {
        if self.kappa.is_none() {
            self.kappa = Some(capped(vertex_connectivity(self.g)));
        }
        self.kappa.unwrap()
    }

    pub(crate) fn hamiltonian(&mut self) -> Option<bool> {
        if self.hamiltonian.is_none() {
            self.hamiltonian = Some(capped(is_hamiltonian(self.g)));
        }
        self.hamiltonian.unwrap()
    }

    pub(crate) fn vertex_transitive(&mut self) -> Option<bool> {
        if self.vertex_transitive.is_none() {
            self.vertex_transitive = Some(is_vertex_transitive(self.g));
        }
        self.vertex_transitive.unwrap()
    }

    pub(crate) fn srg(&mut self) -> Option<SrgParams> {
        if self.srg.is_none() {
            self.srg = Some(srg_parameters(self.g));
        }
        self.srg.unwrap()
    }

    pub(crate) fn gamma(&mut self) -> Option<u32> {
        if self.gamma.is_none() {
            self.gamma =
                Some(capped(domination_number(self.g, DominationVariant::Plain)).map(|r| r.size));
        }
        self.gamma.unwrap()
    }

    pub(crate) fn gamma_c(&mut self) -> Option<u32> {
        if self.gamma_c.is_none() {
            self.gamma_c = Some(
                capped(domination_number(self.g, DominationVariant::Connected)).map(|r| r.size),
            );
        }
        self.gamma_c.unwrap()
    }

    pub(crate) fn gamma_t(&mut self) -> Option<u32> {
        if self.gamma_t.is_none() {
            self.gamma_t =
                Some(capped(domination_number(self.g, DominationVariant::Total)).map(|r| r.size));
        }
        self.gamma_t.unwrap()
    }

    pub(crate) fn comp(&mut self) -> CompInfo {
        if self.comp.is_none() {
            let c = self.g.complement();
            let connected = c.is_connected();
            let (tr, diam) = if connected && c.n() >= 3 {
                let dm = DistanceMatrix::compute(&c);
                let diam = *dm.eccentricities().iter().max().expect("n >= 1") as u32;
                let tr = triameter(&c).expect("connected, n >= 3").value;
                (Some(tr), Some(diam))
            } else {
                (None, None)
            };
            self.comp = Some(CompInfo {
                connected,
                tr,
                diam,
                has_triangle: has_triangle(&c),
            });
        }
        self.comp.unwrap()
    }

    /// Triameters of the products with the fixed partners P_3 and C_4.
    pub(crate) fn product_tr(&mut self) -> (u32, u32) {
        if self.product_tr.is_none() {
            let g = self.g;
            let p3 = FamilySpec::Path { n: 3 }.generate().expect("static spec");
            let c4 = FamilySpec::Cycle { n: 4 }.generate().expect("static spec");
            let tr_of = |h: &Graph| {
                let prod = g.cartesian_product(h).expect("small product");
                triameter(&prod).expect("product of connected graphs").value
            };
            self.product_tr = Some((tr_of(&p3), tr_of(&c4)));
        }
        self.product_tr.unwrap()
    }

    /// The (rows, cols) with rows <= cols making the graph a grid, if any.
    pub(crate) fn grid_match(&mut self) -> Option<(usize, usize)> {
        if self.grid_match.is_none() {
            let n = self.n();
            let mut found = None;
            for rows in 1..=n {
                if rows * rows > n {
                    break;
                }
                if !n.is_multiple_of(rows) {
                    continue;
                }
                let cols = n / rows;
                let grid = FamilySpec::Grid { rows, cols }
                    .generate()
                    .expect("rows, cols >= 1");
                if grid.m() == self.g.m() && are_isomorphic(self.g, &grid) {
                    found = Some((rows, cols));
                    break;
                }
            }
            self.grid_match = Some(found);
        }
        self.grid_match.unwrap()
    }
}
