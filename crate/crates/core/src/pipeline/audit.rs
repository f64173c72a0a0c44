//! Exact evaluation of every numeric inequality the correctness argument
//! chains together, at given `(s, c, ω, d)` under the asymptotic constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::profile::{ProfileSpec, ThresholdProfile};

type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub name: String,
    pub statement: String,
    pub hypothesis: bool,
    pub lhs: String,
    pub relation: Relation,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub s: u32,
    pub c: u32,
    pub omega: u64,
    pub d: u32,
    pub rows: Vec<AuditRow>,
}

impl AuditReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.rows.iter().filter(|r| r.hypothesis).all(|r| r.holds)
    }

    pub fn inequalities_hold(&self) -> bool {
        self.rows.iter().filter(|r| !r.hypothesis).all(|r| r.holds)
    }

    pub fn failing(&self) -> Vec<&AuditRow> {
        self.rows.iter().filter(|r| !r.holds).collect()
    }

    pub fn row(&self, name: &str) -> Option<&AuditRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

fn q(x: u64) -> Q {
    Q::from_integer(BigInt::from(x))
}

struct Table {
    rows: Vec<AuditRow>,
}

impl Table {
    fn add(&mut self, hypothesis: bool, name: &str, statement: &str, lhs: Q, relation: Relation, rhs: Q) {
        let holds = match relation {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        };
        self.rows.push(AuditRow {
            name: name.into(),
            statement: statement.into(),
            hypothesis,
            lhs: lhs.to_string(),
            relation,
            rhs: rhs.to_string(),
            holds,
        });
    }
}

/// `d` defaults to `(c+1)(s+7)+1`.
pub fn bound_audit(s: u32, c: u32, omega: u64, d: Option<u32>) -> AuditReport {
    use Relation::*;
    let d = d.unwrap_or((c + 1) * (s + 7) + 1);
    let w = q(omega);
    let wp = |e: u32| -> Q { Q::from_integer(BigInt::from(omega).pow(e)) };
    let sq = q(s as u64);
    let m = q(s as u64 + 1) * wp(s);
    let n = wp(s + 2);
    let mut t = Table { rows: Vec::new() };

    t.add(true, "hyp.omega_at_least_200", "ω ≥ 200", w.clone(), Ge, q(200));
    t.add(true, "hyp.omega_squared", "ω² > s+1", wp(2), Gt, sq.clone() + Q::one());
    t.add(true, "hyp.omega_cubed", "ω³ > ω + s/7", wp(3), Gt, w.clone() + sq.clone() / q(7));
    t.add(true, "hyp.omega_at_least_15", "ω ≥ 15", w.clone(), Ge, q(15));
    t.add(true, "hyp.c_at_least_2s", "c ≥ 2s", q(c as u64), Ge, q(2 * s as u64));
    t.add(true, "hyp.d_large", "d ≥ (c+1)(s+7)+1", q(d as u64), Ge, q(((c + 1) * (s + 7) + 1) as u64));

    t.add(false, "transversal.room", "ω^{s+3}·ω < ω^{s+5}", wp(s + 3) * &w, Lt, wp(s + 5));
    t.add(false, "length.zero", "7ω^{s+5}·ω < 28ω^{s+6}", q(7) * wp(s + 5) * &w, Lt, q(28) * wp(s + 6));
    t.add(
        false,
        "length.one",
        "14ω^{s+6} + 7ω^{s+5}(ω−1) + ω^{s+5} < 28ω^{s+6}",
        q(14) * wp(s + 6) + q(7) * wp(s + 5) * (&w - Q::one()) + wp(s + 5),
        Lt,
        q(28) * wp(s + 6),
    );
    t.add(false, "part_floor.shrink", "5ω^{s+5} − ω^{s+4} ≥ ω^{s+5}", q(5) * wp(s + 5) - wp(s + 4), Ge, wp(s + 5));
    t.add(false, "part_floor.absorb", "ω^{s+5} + 1 > ω·ω^{s+4}", wp(s + 5) + Q::one(), Gt, &w * wp(s + 4));
    t.add(false, "nonnbrs.shrink", "5ω^{s+5} − ω^{s+3} ≥ ω^{s+5}", q(5) * wp(s + 5) - wp(s + 3), Ge, wp(s + 5));
    t.add(
        false,
        "nonnbrs.promote",
        "7ω^{s+5} − 1 − (ω−1)ω^{s+3} ≥ 4ω^{s+5}",
        q(7) * wp(s + 5) - Q::one() - (&w - Q::one()) * wp(s + 3),
        Ge,
        q(4) * wp(s + 5),
    );
    t.add(false, "linked.nonedges", "2ω^{s+5} − ω^{s+3} ≥ ω^{s+5}", q(2) * wp(s + 5) - wp(s + 3), Ge, wp(s + 5));
    t.add(
        false,
        "linked.pigeonhole",
        "ω^{s+5}·14ω^{s+1} ≥ 14ω^{s+6}·ω^s",
        wp(s + 5) * q(14) * wp(s + 1),
        Ge,
        q(14) * wp(s + 6) * wp(s),
    );
    t.add(false, "linked.ratio", "14ω^{s+3} < ω^{s+5}", q(14) * wp(s + 3), Lt, wp(s + 5));
    t.add(false, "linked.split", "ω^{s+5} > ω^{s+3} + 14ω^{s+3}", wp(s + 5), Gt, q(15) * wp(s + 3));
    t.add(false, "linked.final", "3ω^{s+5} − ω^{s+3} ≥ ω^s", q(3) * wp(s + 5) - wp(s + 3), Ge, wp(s));
    t.add(
        false,
        "dense.shrink",
        "5ω^{s+5} − 7ω^{s+5}/2 ≥ ω^{s+5}",
        q(5) * wp(s + 5) - q(7) * wp(s + 5) / q(2),
        Ge,
        wp(s + 5),
    );
    t.add(false, "dense.append", "2ω + 1/7 > ω", q(2) * &w + Q::one() / q(7), Gt, w.clone());

    t.add(false, "types.linked_size", "ω^{s+2}/14 ≥ 14ω^{s+1}", wp(s + 2) / q(14), Ge, q(14) * wp(s + 1));
    t.add(false, "types.part_size", "ω^{s+5} > 2ω^{s+3}", wp(s + 5), Gt, q(2) * wp(s + 3));
    t.add(false, "types.pendant", "4ω^{s+5} − 2ω^{s+3} ≥ ω^s", q(4) * wp(s + 5) - q(2) * wp(s + 3), Ge, wp(s));
    t.add(false, "types.pure", "ω^{s+5} > 3ω^{s+3}", wp(s + 5), Gt, q(3) * wp(s + 3));
    let fourteen = |e: u32| Q::from_integer(BigInt::from(14).pow(e));
    t.add(
        false,
        "pendant.count",
        "ω²(14ω^{s+6})^{s+2}ω^s ≤ 14^{s+2}ω^{s²+9s+14}",
        wp(2) * fourteen(s + 2) * wp((s + 6) * (s + 2)) * wp(s),
        Le,
        fourteen(s + 2) * wp(s * s + 9 * s + 14),
    );
    t.add(
        false,
        "semidense.shrink",
        "5ω^{s+5} − ω^{s+3} − 2ω^{s+5} ≥ ω^{s+5}",
        q(5) * wp(s + 5) - wp(s + 3) - q(2) * wp(s + 5),
        Ge,
        wp(s + 5),
    );
    t.add(
        false,
        "semidense.nonedges",
        "(ω^{s+2}/14)·14ω^{s+6}/ω^{s+3} ≤ ω^{s+5}",
        wp(s + 2) / q(14) * q(14) * wp(s + 6) / wp(s + 3),
        Le,
        wp(s + 5),
    );
    let per_slot = (wp(s + 3) + q(2) * wp(s + 5)).max(q(7) * wp(s + 5));
    t.add(
        false,
        "semidense.value",
        "14ω^{s+6} + (ω−1)·max(ω^{s+3}+2ω^{s+5}, 7ω^{s+5}) < 28ω^{s+6}",
        q(14) * wp(s + 6) + (&w - Q::one()) * per_slot,
        Lt,
        q(28) * wp(s + 6),
    );

    t.add(false, "incomp.part_size", "ω^{s+5} ≥ ω^{s+3} + ω^s", wp(s + 5), Ge, wp(s + 3) + wp(s));
    t.add(
        false,
        "smallchi.total",
        "2ω(m + ω^{s+1}) ≤ (2s+2)ω^{s+1} + 2ω^{s+2}",
        q(2) * &w * (&m + wp(s + 1)),
        Le,
        q(2 * s as u64 + 2) * wp(s + 1) + q(2) * wp(s + 2),
    );
    t.add(false, "nested.part_s", "sω^{s+2}/7 < ω^{s+5}", &sq * wp(s + 2) / q(7), Lt, wp(s + 5));
    t.add(
        false,
        "nested.part_t",
        "ω^{s+3} + sω^{s+2}/7 < ω^{s+5}",
        wp(s + 3) + &sq * wp(s + 2) / q(7),
        Lt,
        wp(s + 5),
    );
    t.add(false, "nested.ramsey", "m ≥ ω^s", m.clone(), Ge, wp(s));
    if s > 0 {
        t.add(false, "nested.neighbours", "(m − ω^s)/s ≥ ω^s", (&m - wp(s)) / &sq, Ge, wp(s));
    }
    t.add(false, "largechi.clique", "(ω^{s+2}/7)·ω < ω^{s+5}", wp(s + 2) / q(7) * &w, Lt, wp(s + 5));
    t.add(false, "largechi.peel", "ω^{s+2} > ω·ω^s·(ω−1)", n.clone(), Gt, &w * wp(s) * (&w - Q::one()));
    let ns = Q::from_integer(n.to_integer().pow(s));
    t.add(
        false,
        "largechi.excluded",
        "(ω·ω^s)(n^s ω^s)ω ≤ n^s ω^{2s+2}",
        &w * wp(s) * &ns * wp(s) * &w,
        Le,
        &ns * wp(2 * s + 2),
    );
    let dd = d;
    let worst_split = (1..omega.max(1))
        .map(|x| q(x).pow(dd as i32) + q(omega - x).pow(dd as i32))
        .max()
        .unwrap_or_else(Q::zero);
    t.add(
        false,
        "largechi.split",
        "max over 1≤t≤ω−1 of t^d + (ω−t)^d ≤ (ω−1)^d + 1",
        worst_split,
        Le,
        (&w - Q::one()).pow(d as i32) + Q::one(),
    );
    t.add(
        false,
        "largechi.total",
        "nω + n^s ω^{2s+2} ≤ ω^{s+3} + ω^{s²+4s+2}",
        &n * &w + &ns * wp(2 * s + 2),
        Le,
        wp(s + 3) + wp(s * s + 4 * s + 2),
    );
    t.add(false, "nbrchi.template_size", "ω·14ω^{s+6} ≤ 14ω^{s+7}", &w * q(14) * wp(s + 6), Le, q(14) * wp(s + 7));
    let k_rest = q(14) * wp(s + 7)
        + fourteen(s + 2) * wp(s * s + 9 * s + 14)
        + (q(14) * wp(s + 6)).pow((c + 1) as i32) * &w
        + wp(s * s + 4 * s + 2)
        + wp(s + 3)
        + Q::one()
        + q(2 * s as u64 + 2) * wp(s + 1)
        + q(2) * wp(s + 2);
    t.add(
        false,
        "nbrchi.total",
        "14ω^{s+7} + 14^{s+2}ω^{s²+9s+14} + (14ω^{s+6})^{c+1}ω + ω^{s²+4s+2} + ω^{s+3} + 1 + (2s+2)ω^{s+1} + 2ω^{s+2} ≤ ω^{(c+1)(s+7)}",
        k_rest,
        Le,
        wp((c + 1) * (s + 7)),
    );

    t.add(false, "outnbrs.z_size", "ω + 14ω^{s+6} + ω^s < ω^{s+7}", &w + q(14) * wp(s + 6) + wp(s), Lt, wp(s + 7));
    t.add(false, "outnbrs.ramsey", "ω^{s+2}/4 ≥ ω^s", wp(s + 2) / q(4), Ge, wp(s));
    t.add(false, "outnbrs.part_size", "ω^{s+5} ≥ ω^{s+2}/4", wp(s + 5), Ge, wp(s + 2) / q(4));
    t.add(
        false,
        "outnbrs.common",
        "sω^{s+3} + ω^s + ω^{s+3} < ω^{s+5}",
        &sq * wp(s + 3) + wp(s) + wp(s + 3),
        Lt,
        wp(s + 5),
    );
    t.add(
        false,
        "main.step",
        "(ω−1)^d + ω^{(c+1)(s+7)} ≤ ω^d",
        (&w - Q::one()).pow(d as i32) + wp((c + 1) * (s + 7)),
        Le,
        wp(d),
    );
    t.add(false, "main.residual", "(14ω^{s+6})^c ≤ ω^d", (q(14) * wp(s + 6)).pow(c as i32), Le, wp(d));
    t.add(
        false,
        "main.defect",
        "ω^{s+7}(ω−1) + ω^{s+7} ≤ ω^{s+8}",
        wp(s + 7) * (&w - Q::one()) + wp(s + 7),
        Le,
        wp(s + 8),
    );

    AuditReport {
        s,
        c,
        omega,
        d,
        rows: t.rows,
    }
}

/// Audits a `paper`-kind profile; desk profiles have no formulas to audit.
pub fn bound_audit_profile(profile: &ThresholdProfile, omega: u64) -> Option<AuditReport> {
    match &profile.spec {
        ProfileSpec::Paper(p) => Some(bound_audit(p.s as u32, p.c, omega, p.d)),
        ProfileSpec::Desk(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypotheses() {
        let r = bound_audit(1, 2, 200, None);
        assert_eq!(r.d, 25);
        assert!(r.row("hyp.omega_cubed").unwrap().holds);
        assert!(r.hypotheses_hold());
        let r = bound_audit(1, 2, 14, None);
        assert!(!r.row("hyp.omega_at_least_200").unwrap().holds);
        assert!(!r.row("hyp.omega_at_least_15").unwrap().holds);
    }

    #[test]
    fn main_step_holds_at_200() {
        let r = bound_audit(1, 2, 200, None);
        assert!(r.row("main.step").unwrap().holds);
        assert!(r.row("main.residual").unwrap().holds);
        assert!(r.row("largechi.split").unwrap().holds);
    }

    #[test]
    fn neighbourhood_total_needs_larger_c_when_s_is_one() {
        // With s = 1 and c = 2 the exponents of 14^{s+2}ω^{s²+9s+14} and
        // ω^{(c+1)(s+7)} coincide, so the coefficient 14³ breaks the sum.
        let r = bound_audit(1, 2, 200, None);
        assert!(!r.row("nbrchi.total").unwrap().holds);
        let r = bound_audit(1, 3, 200, None);
        assert!(r.inequalities_hold(), "{:?}", r.failing());
        let r = bound_audit(2, 4, 200, None);
        assert!(r.inequalities_hold(), "{:?}", r.failing());
    }

    #[test]
    fn desk_profiles_have_no_audit() {
        assert!(bound_audit_profile(&ThresholdProfile::desk(1), 200).is_none());
        assert!(bound_audit_profile(&ThresholdProfile::paper(1, 2), 200).is_some());
    }
}
