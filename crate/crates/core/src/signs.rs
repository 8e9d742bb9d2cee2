use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::BoundPresentation;
use crate::quiver::ArrowId;

/// Sign functions on arrows, each value +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignAssignment {
    pub sigma: Vec<i8>,
    pub epsilon: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignEntry {
    pub arrow: String,
    pub sigma: i8,
    pub epsilon: i8,
}

// Node 2a is sigma(a), node 2a+1 is epsilon(a). Every constraint says two
// nodes carry different values, so a valid assignment is a 2-colouring.
fn constraint_graph(pres: &BoundPresentation) -> Vec<Vec<usize>> {
    let q = pres.quiver();
    let n = q.arrow_count();
    let mut adj = vec![Vec::new(); 2 * n];
    let mut link = |x: usize, y: usize| {
        adj[x].push(y);
        adj[y].push(x);
    };
    for v in 0..q.vertex_count() {
        let outs = q.out_arrows(v);
        for i in 0..outs.len() {
            for j in i + 1..outs.len() {
                link(2 * outs[i], 2 * outs[j]);
            }
        }
        let ins = q.in_arrows(v);
        for i in 0..ins.len() {
            for j in i + 1..ins.len() {
                link(2 * ins[i] + 1, 2 * ins[j] + 1);
            }
        }
    }
    for a in 0..n {
        for b in q.out_arrows(q.target(a)) {
            if !pres.path_in_ideal(&[a, b]) {
                link(2 * b, 2 * a + 1);
            }
        }
    }
    adj
}

fn colour_from(adj: &[Vec<usize>], values: &mut [i8], root: usize, value: i8) -> Result<()> {
    values[root] = value;
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if values[y] == 0 {
                values[y] = -values[x];
                stack.push(y);
            } else if values[y] == values[x] {
                return Err(Error::SignsInfeasible(format!(
                    "odd constraint cycle through node {}",
                    y
                )));
            }
        }
    }
    Ok(())
}

fn from_values(values: Vec<i8>) -> SignAssignment {
    SignAssignment {
        sigma: values.iter().step_by(2).copied().collect(),
        epsilon: values.iter().skip(1).step_by(2).copied().collect(),
    }
}

/// Deterministic choice: each connected component of the constraint graph
/// is fixed greedily so that 2-relations, taken in declared order, land in
/// the gentle part when still possible; leftover components get +1.
pub fn compute_sign_functions(pres: &BoundPresentation) -> Result<SignAssignment> {
    let adj = constraint_graph(pres);
    let mut probe = vec![0i8; adj.len()];
    let mut comp = vec![usize::MAX; adj.len()];
    let mut roots = 0;
    for root in 0..adj.len() {
        if probe[root] == 0 {
            colour_from(&adj, &mut probe, root, 1)?;
            for (n, c) in comp.iter_mut().enumerate() {
                if *c == usize::MAX && probe[n] != 0 {
                    *c = roots;
                }
            }
            roots += 1;
        }
    }
    let mut choice = vec![0i8; roots];
    for r in pres.relations().iter().filter(|r| r.len() == 2) {
        let (x, y) = (2 * r.0[1], 2 * r.0[0] + 1);
        let (cx, cy) = (comp[x], comp[y]);
        if cx == cy {
            continue;
        }
        match (choice[cx], choice[cy]) {
            (0, 0) => {
                choice[cx] = 1;
                choice[cy] = probe[x] * probe[y];
            }
            (0, v) => choice[cx] = probe[x] * probe[y] * v,
            (v, 0) => choice[cy] = probe[x] * probe[y] * v,
            _ => {}
        }
    }
    let values = (0..adj.len())
        .map(|n| probe[n] * if choice[comp[n]] == 0 { 1 } else { choice[comp[n]] })
        .collect();
    Ok(from_values(values))
}

/// Every valid assignment, up to `limit` of them. Each connected component
/// of the constraint graph contributes one binary choice.
pub fn all_sign_assignments(pres: &BoundPresentation, limit: usize) -> Result<Vec<SignAssignment>> {
    let adj = constraint_graph(pres);
    let mut roots = Vec::new();
    let mut probe = vec![0i8; adj.len()];
    for root in 0..adj.len() {
        if probe[root] == 0 {
            colour_from(&adj, &mut probe, root, 1)?;
            roots.push(root);
        }
    }
    let mut out = Vec::new();
    let total: u128 = if roots.len() >= 64 {
        u128::MAX
    } else {
        1u128 << roots.len()
    };
    let mut mask: u128 = 0;
    while mask < total && out.len() < limit {
        let mut values = vec![0i8; adj.len()];
        for (k, &r) in roots.iter().enumerate() {
            let v = if mask >> k & 1 == 1 { -1 } else { 1 };
            colour_from(&adj, &mut values, r, v)?;
        }
        out.push(from_values(values));
        mask += 1;
    }
    Ok(out)
}

impl SignAssignment {
    pub fn sigma(&self, a: ArrowId) -> i8 {
        self.sigma[a]
    }

    pub fn epsilon(&self, a: ArrowId) -> i8 {
        self.epsilon[a]
    }

    /// Exhaustive re-check of the three defining constraints.
    pub fn check(&self, pres: &BoundPresentation) -> Result<()> {
        let q = pres.quiver();
        let n = q.arrow_count();
        if self.sigma.len() != n || self.epsilon.len() != n {
            return Err(Error::InvalidSigns("wrong number of arrows".into()));
        }
        let name = |a: ArrowId| q.arrow(a).name.clone();
        for a in 0..n {
            if self.sigma[a].abs() != 1 || self.epsilon[a].abs() != 1 {
                return Err(Error::InvalidSigns(format!("{} has a value other than +1/-1", name(a))));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && q.source(a) == q.source(b) && self.sigma[a] == self.sigma[b] {
                    return Err(Error::InvalidSigns(format!("sigma({}) = sigma({})", name(a), name(b))));
                }
                if a != b && q.target(a) == q.target(b) && self.epsilon[a] == self.epsilon[b] {
                    return Err(Error::InvalidSigns(format!(
                        "epsilon({}) = epsilon({})",
                        name(a),
                        name(b)
                    )));
                }
                if q.target(a) == q.source(b) && !pres.path_in_ideal(&[a, b]) && self.sigma[b] != -self.epsilon[a] {
                    return Err(Error::InvalidSigns(format!(
                        "sigma({}) != -epsilon({}) although {}{} is not in the ideal",
                        name(b),
                        name(a),
                        name(a),
                        name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_entries(&self, pres: &BoundPresentation) -> Vec<SignEntry> {
        let q = pres.quiver();
        (0..q.arrow_count())
            .map(|a| SignEntry {
                arrow: q.arrow(a).name.clone(),
                sigma: self.sigma[a],
                epsilon: self.epsilon[a],
            })
            .collect()
    }

    pub fn from_entries(pres: &BoundPresentation, entries: &[SignEntry]) -> Result<Self> {
        let n = pres.quiver().arrow_count();
        let mut s = SignAssignment {
            sigma: vec![0; n],
            epsilon: vec![0; n],
        };
        for e in entries {
            let a = pres.quiver().arrow_id(&e.arrow)?;
            s.sigma[a] = e.sigma;
            s.epsilon[a] = e.epsilon;
        }
        s.check(pres)?;
        Ok(s)
    }

    /// Signs for the opposite presentation: sigma and epsilon swap roles.
    pub fn opposite(&self) -> SignAssignment {
        SignAssignment {
            sigma: self.epsilon.clone(),
            epsilon: self.sigma.clone(),
        }
    }
}
