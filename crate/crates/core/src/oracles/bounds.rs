//! Falsification harnesses for the Ramsey-type vertex bound and the
//! biclique-or-sparse dichotomy.

use serde::Serialize;

use super::biclique::find_biclique_subgraph;
use super::clique::clique_number;
use super::stable::{find_induced_double_star, find_stable_set};
use super::OracleError;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyReport {
    pub n: usize,
    pub omega: usize,
    pub s: usize,
    /// False when `g` has a stable set of size `s`; nothing is claimed then.
    pub applicable: bool,
    /// `ω^{s-1} + ⋯ + ω`.
    pub sum_bound: u128,
    pub sum_holds: bool,
    /// The strict form `n < ω^s` only applies when `ω > 1`.
    pub strict_applicable: bool,
    pub strict_holds: bool,
}

impl RamseyReport {
    pub fn holds(&self) -> bool {
        !self.applicable || (self.sum_holds && (!self.strict_applicable || self.strict_holds))
    }
}

pub fn check_ramsey_bound(g: &Graph, s: usize) -> RamseyReport {
    let omega = clique_number(g).value;
    let applicable = find_stable_set(g, &g.vertices(), s).is_none();
    let w = omega as u128;
    let sum_bound: u128 = (1..s).map(|e| w.saturating_pow(e as u32)).fold(0, u128::saturating_add);
    let n = g.n() as u128;
    let strict_applicable = applicable && omega > 1;
    RamseyReport {
        n: g.n(),
        omega,
        s,
        applicable,
        sum_bound,
        sum_holds: !applicable || n <= sum_bound,
        strict_applicable,
        strict_holds: !strict_applicable || n < w.saturating_pow(s as u32),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum KstBranch {
    Biclique { left: Vec<usize>, right: Vec<usize> },
    Degeneracy { degeneracy: usize, cap: u128 },
    /// Neither alternative held: `(t, c)` is falsified on this graph.
    Neither { degeneracy: usize, cap: u128 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KstReport {
    pub s: usize,
    pub t: usize,
    pub c: u32,
    pub branch: KstBranch,
}

impl KstReport {
    pub fn holds(&self) -> bool {
        !matches!(self.branch, KstBranch::Neither { .. })
    }
}

/// Either `K_{t,t} ⊆ G` or `degeneracy(G) < t^c`, on an `H_s`-free input.
pub fn check_kst_dichotomy(g: &Graph, s: usize, t: usize, c: u32) -> Result<KstReport, OracleError> {
    if let Some(w) = find_induced_double_star(g, s) {
        return Err(OracleError::NotHsFree { s, witness: w });
    }
    let branch = if let Some(b) = find_biclique_subgraph(g, t) {
        KstBranch::Biclique {
            left: b.left.to_vec(),
            right: b.right.to_vec(),
        }
    } else {
        let degeneracy = g.degeneracy_order().1;
        let cap = (t as u128).saturating_pow(c);
        if (degeneracy as u128) < cap {
            KstBranch::Degeneracy { degeneracy, cap }
        } else {
            KstBranch::Neither { degeneracy, cap }
        }
    };
    Ok(KstReport { s, t, c, branch })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn ramsey_examples() {
        let r = check_ramsey_bound(&complete(5), 2);
        assert!(r.applicable && r.sum_holds && r.strict_holds);
        assert_eq!(r.sum_bound, 5);
        let r = check_ramsey_bound(&cycle(5), 2);
        assert!(!r.applicable && r.holds());
        // s = 0: the empty set is always stable.
        assert!(!check_ramsey_bound(&complete(3), 0).applicable);
    }

    #[test]
    fn kst_examples() {
        // C5 contains P4 = H_1, so use s = 2 where it is H_s-free.
        assert!(matches!(
            check_kst_dichotomy(&cycle(5), 1, 2, 2),
            Err(OracleError::NotHsFree { s: 1, .. })
        ));
        let r = check_kst_dichotomy(&cycle(5), 2, 2, 2).unwrap();
        assert_eq!(r.branch, KstBranch::Degeneracy { degeneracy: 2, cap: 4 });
        let r = check_kst_dichotomy(&complete_multipartite(&[9, 9]), 1, 3, 2).unwrap();
        assert!(matches!(r.branch, KstBranch::Biclique { .. }));
        let r = check_kst_dichotomy(&Graph::empty(6), 1, 2, 1).unwrap();
        assert_eq!(r.branch, KstBranch::Degeneracy { degeneracy: 0, cap: 2 });
    }
}
