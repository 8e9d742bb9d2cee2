//! Cross-validation of the combinatorial layer against the linear-algebra
//! oracle and of the surface model against the module category.

use serde::{Deserialize, Serialize};

use crate::oracle::Oracle;
use crate::strings::StringAlgebra;
use crate::surface::{crossings_m, crossings_r, ArcKind, ArcValue, TiledSurface};
use crate::tautilt::verify_geometric;
use crate::word::StringWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.lines.iter().all(|l| l.ok)
    }

    fn push(&mut self, name: &str, ok: bool, detail: String) {
        self.lines.push(CheckLine {
            name: name.to_string(),
            ok,
            detail,
        });
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Length bound for the pairwise sweeps.
    pub sweep_len: usize,
    /// Length bound for support tau-tilting enumeration.
    pub tilt_len: usize,
    pub band_bound: usize,
    /// Hom dimensions to report, with an optional expected value.
    pub hom_examples: Vec<(StringWord, StringWord, Option<usize>)>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            sweep_len: 4,
            tilt_len: 6,
            band_bound: 8,
            hom_examples: Vec::new(),
        }
    }
}

/// Sweep mismatches, each recorded as a short witness.
#[derive(Debug, Default)]
struct Tally {
    total: usize,
    bad: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.total += 1;
        if !ok && self.bad.len() < 5 {
            self.bad.push(witness());
        } else if !ok {
            self.bad.push(String::new());
        }
    }

    fn detail(&self) -> String {
        let shown: Vec<&String> = self.bad.iter().filter(|s| !s.is_empty()).collect();
        if self.bad.is_empty() {
            format!("{} cases", self.total)
        } else {
            format!("{} of {} cases fail, e.g. {:?}", self.bad.len(), self.total, shown)
        }
    }
}

pub fn run_checks(alg: &StringAlgebra, ts: &TiledSurface, opts: &CheckOptions) -> CheckReport {
    let q = alg.quiver();
    let o = Oracle::new(alg.pres());
    let mut report = CheckReport::default();

    let (arrows, rels) = ts.induced_presentation();
    let want: Vec<_> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| (a.source, a.target, k))
        .collect();
    let mut want_rels: Vec<Vec<usize>> = alg.pres().relations().iter().map(|r| r.0.clone()).collect();
    want_rels.sort();
    let inv = ts.invariants();
    report.push(
        "surface round trip",
        arrows == want && rels == want_rels,
        format!(
            "genus {}, {} boundary components, {} punctures, {} boundary marked points",
            inv.genus,
            inv.boundary_components,
            inv.m_punctures + inv.r_punctures,
            inv.boundary_m_points
        ),
    );

    for (v, w, want) in &opts.hom_examples {
        let h = alg.hom_dim(v, w);
        let oh = o.hom(&o.string_rep(v), &o.string_rep(w));
        report.push(
            "hom example",
            h == oh && want.is_none_or(|x| x == h),
            format!("hom_dim({}, {}) = {}", v.display(q), w.display(q), h),
        );
    }

    let ws = alg.enumerate_strings(opts.sweep_len);
    let reps: Vec<_> = ws.iter().map(|w| o.string_rep(w)).collect();
    let taus: Vec<StringWord> = ws.iter().map(|w| alg.tau(w)).collect();
    let r_arcs: Vec<_> = ws
        .iter()
        .map(|w| ts.realize_arc(alg, w, ArcKind::R).expect("strings realize"))
        .collect();
    let m_arcs: Vec<_> = ws
        .iter()
        .map(|w| ts.realize_arc(alg, w, ArcKind::ClockwiseM).expect("strings realize"))
        .collect();

    let mut tau_tally = Tally::default();
    for (i, w) in ws.iter().enumerate() {
        let want = o.tau(&reps[i]);
        let ok = if taus[i].is_zero() {
            want.dims.iter().all(|&d| d == 0)
        } else {
            o.same_module(alg, &o.string_rep(&taus[i]), &want, opts.sweep_len)
        };
        tau_tally.record(ok, || w.display(q));
    }
    report.push(
        "tau agrees with the oracle",
        tau_tally.bad.is_empty(),
        tau_tally.detail(),
    );

    let mut hom = Tally::default();
    let mut ci = Tally::default();
    let mut cx = Tally::default();
    for i in 0..ws.len() {
        for j in 0..ws.len() {
            let oh = o.hom(&reps[i], &reps[j]);
            let h = alg.hom_dim(&ws[i], &ws[j]);
            let pair = || format!("{} {}", ws[i].display(q), ws[j].display(q));
            hom.record(h == oh, pair);
            let r = crossings_r(ts, &r_arcs[i], &r_arcs[j]);
            let delta = usize::from(alg.same_string(&ws[i], &ws[j]));
            ci.record(r.c_forward + r.i_forward == oh + delta, pair);
            let ht = if taus[j].is_zero() {
                0
            } else {
                o.hom(&reps[i], &o.string_rep(&taus[j]))
            };
            let m = crossings_m(ts, alg, &m_arcs[i], &m_arcs[j]);
            cx.record(m.c_forward as i64 - m.good_forward as i64 == ht as i64, pair);
        }
    }
    report.push("hom_dim agrees with the oracle", hom.bad.is_empty(), hom.detail());
    report.push("C + I - delta = dim Hom(M, N)", ci.bad.is_empty(), ci.detail());
    report.push("C - X = dim Hom(M, tau N)", cx.bad.is_empty(), cx.detail());

    let mut ar = Tally::default();
    let mut pivots = Tally::default();
    for w in &ws {
        let fs = alg.f_s(w);
        let ft = alg.f_t(w);
        if !alg.is_injective(w) && !fs.is_zero() && !ft.is_zero() {
            let ti = alg.tau_inverse(w);
            let lhs: Vec<usize> = fs
                .dimension_vector(q)
                .iter()
                .zip(ft.dimension_vector(q))
                .map(|(a, b)| a + b)
                .collect();
            let rhs: Vec<usize> = w
                .dimension_vector(q)
                .iter()
                .zip(ti.dimension_vector(q))
                .map(|(a, b)| a + b)
                .collect();
            ar.record(lhs == rhs, || w.display(q));
        }
        let arc = ts
            .realize_arc(alg, w, ArcKind::AnticlockwiseM)
            .expect("strings realize");
        let word = |v: ArcValue| match v {
            ArcValue::Arc(r) => r.word,
            _ => StringWord::Zero,
        };
        let ok = word(ts.pivot_fs(alg, &arc)) == fs && word(ts.pivot_ft(alg, &arc)) == ft;
        pivots.record(ok, || w.display(q));
    }
    report.push("AR sequences are additive", ar.bad.is_empty(), ar.detail());
    report.push("pivot moves match f_s and f_t", pivots.bad.is_empty(), pivots.detail());

    let tc = verify_geometric(ts, alg, opts.tilt_len, opts.band_bound);
    report.push(
        "algebraic and geometric support tau-tilting agree",
        tc.agree,
        format!("{} algebraic, {} geometric", tc.algebraic, tc.geometric),
    );
    report
}
