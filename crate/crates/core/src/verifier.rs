//! Per-graph checks of the gap bound `alpha_f - alpha <= (n-2)/6` and the ratio bound
//! `alpha_f / alpha <= 3n/(2n+2)` for connected graphs with `n >= 5`, and of the
//! `n/6` and `3/2` bounds for arbitrary graphs, together with the extremal classifier and
//! certificates that replay each case of the two arguments on measured values.
//!
//! Every comparison is an exact integer cross-multiplication.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fracmatch::{
    alpha_f_halves, canonical_stats, canonicalize, extract_half_integral, frac_deficiency_witness,
};
use crate::graph::{components, has_hamiltonian_cycle, Graph, VertexSet};
use crate::graph6::encode_graph6;
use crate::matching::{matching_number, tutte_berge_witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ExtremalClass {
    NotExtremal,
    C5Type,
    K2K3Type,
    TriangleStar,
    DisjointTriangles,
}

impl ExtremalClass {
    /// Classes that attain the connected bounds.
    pub fn is_connected_extremal(self) -> bool {
        matches!(
            self,
            ExtremalClass::C5Type | ExtremalClass::K2K3Type | ExtremalClass::TriangleStar
        )
    }
}

impl fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Which pair of bounds a record is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Connected graphs with `n >= 5`: `(n-2)/6` and `3n/(2n+2)`.
    Connected,
    /// Any graph: `n/6` and `3/2`.
    Union,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapRatioRecord {
    pub graph6: String,
    pub n: usize,
    pub alpha: usize,
    pub alpha_f_halves: usize,
    /// `6 (alpha_f - alpha)`.
    pub gap_sixths: i64,
    pub regime: Regime,
    pub gap_ok: bool,
    pub ratio_ok: bool,
    pub equality_gap: bool,
    pub equality_ratio: bool,
    pub class: ExtremalClass,
}

/// Evaluates `g` against the connected bounds when it is connected with `n >= 5`,
/// otherwise against the union bounds.
pub fn evaluate(g: &Graph) -> GapRatioRecord {
    let regime = if g.n() >= 5 && g.is_connected() {
        Regime::Connected
    } else {
        Regime::Union
    };
    evaluate_in(g, regime)
}

pub fn evaluate_in(g: &Graph, regime: Regime) -> GapRatioRecord {
    let n = g.n() as i64;
    let alpha = matching_number(g);
    let halves = alpha_f_halves(g);
    let (a, h) = (alpha as i64, halves as i64);
    let gap_sixths = 3 * h - 6 * a;
    let (gap_bound, ratio_cmp) = match regime {
        // halves * (n + 1) versus 3 n alpha
        Regime::Connected => (n - 2, (h * (n + 1)).cmp(&(3 * n * a))),
        // halves versus 3 alpha
        Regime::Union => (n, h.cmp(&(3 * a))),
    };
    let has_ratio = alpha > 0;
    GapRatioRecord {
        graph6: encode_graph6(g).unwrap_or_default(),
        n: g.n(),
        alpha,
        alpha_f_halves: halves,
        gap_sixths,
        regime,
        gap_ok: gap_sixths <= gap_bound,
        ratio_ok: !has_ratio || ratio_cmp != Ordering::Greater,
        equality_gap: gap_sixths == gap_bound,
        equality_ratio: has_ratio && ratio_cmp == Ordering::Equal,
        class: classify_extremal(g),
    }
}

fn is_triangle(g: &Graph, comp: &VertexSet) -> bool {
    comp.len() == 3 && {
        let s = comp.as_slice();
        g.has_edge(s[0], s[1]) && g.has_edge(s[0], s[2]) && g.has_edge(s[1], s[2])
    }
}

/// A vertex whose removal leaves only triangles and exactly one isolated vertex, with at
/// least one triangle.
pub fn triangle_star_center(g: &Graph) -> Option<usize> {
    if g.n() < 5 || (g.n() - 2) % 3 != 0 || !g.is_connected() {
        return None;
    }
    (0..g.n()).find(|&v| {
        let profile = components(g, &VertexSet::from_iter([v]));
        profile.isolated == 1
            && profile
                .components
                .iter()
                .filter(|c| c.len() != 1)
                .all(|c| is_triangle(g, c))
    })
}

/// Assigns the extremal family. At `n = 5` the subgraph classes take precedence,
/// `C5Type` before `K2K3Type` before `TriangleStar`.
pub fn classify_extremal(g: &Graph) -> ExtremalClass {
    let n = g.n();
    if n > 0 {
        let profile = components(g, &VertexSet::empty());
        if profile.components.iter().all(|c| is_triangle(g, c)) {
            return ExtremalClass::DisjointTriangles;
        }
    }
    if !g.is_connected() {
        return ExtremalClass::NotExtremal;
    }
    if n == 5 {
        let adj = g.adjacency_masks();
        if has_hamiltonian_cycle(&adj, 0b11111) {
            return ExtremalClass::C5Type;
        }
        let contains_k2_k3 = (0..5).any(|a| {
            (a + 1..5).any(|b| {
                (b + 1..5).any(|c| {
                    let rest: Vec<usize> = (0..5).filter(|&x| x != a && x != b && x != c).collect();
                    g.has_edge(a, b)
                        && g.has_edge(a, c)
                        && g.has_edge(b, c)
                        && g.has_edge(rest[0], rest[1])
                })
            })
        });
        if contains_k2_k3 {
            return ExtremalClass::K2K3Type;
        }
    }
    if triangle_star_center(g).is_some() {
        return ExtremalClass::TriangleStar;
    }
    ExtremalClass::NotExtremal
}

/// A nonnegative-denominator fraction compared by cross-multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: i64,
    pub den: i64,
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den > 0, "denominator must be positive");
        Frac { num, den }
    }

    pub fn int(v: i64) -> Self {
        Frac { num: v, den: 1 }
    }

    pub fn compare(self, other: Frac) -> Ordering {
        (i128::from(self.num) * i128::from(other.den))
            .cmp(&(i128::from(other.num) * i128::from(self.den)))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    fn holds(self, ord: Ordering) -> bool {
        match self {
            Relation::Lt => ord == Ordering::Less,
            Relation::Le => ord != Ordering::Greater,
            Relation::Eq => ord == Ordering::Equal,
            Relation::Ge => ord != Ordering::Less,
        }
    }
}

/// One displayed inequality, evaluated on measured values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub claim: &'static str,
    pub lhs: Frac,
    pub relation: Relation,
    pub rhs: Frac,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    Gap,
    Ratio,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProofCase {
    /// Gap bound with an empty deficiency set.
    EmptySet,
    One,
    Two,
    Three,
    Four,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseCertificate {
    pub bound: Bound,
    pub case: ProofCase,
    pub values: BTreeMap<&'static str, i64>,
    pub steps: Vec<ChainStep>,
    pub chain_holds: bool,
}

struct Chain {
    steps: Vec<ChainStep>,
}

impl Chain {
    fn new() -> Self {
        Chain { steps: Vec::new() }
    }

    fn check(&mut self, claim: &'static str, lhs: Frac, relation: Relation, rhs: Frac) {
        let holds = relation.holds(lhs.compare(rhs));
        self.steps.push(ChainStep {
            claim,
            lhs,
            relation,
            rhs,
            holds,
        });
    }

    fn ints(&mut self, claim: &'static str, lhs: i64, relation: Relation, rhs: i64) {
        self.check(claim, Frac::int(lhs), relation, Frac::int(rhs));
    }

    fn finish(
        self,
        g: &Graph,
        bound: Bound,
        case: ProofCase,
        values: BTreeMap<&'static str, i64>,
    ) -> Result<CaseCertificate> {
        if let Some(bad) = self.steps.iter().find(|s| !s.holds) {
            return Err(Error::TheoremFalsified {
                graph6: encode_graph6(g).unwrap_or_default(),
                detail: format!(
                    "{:?} case {:?}: {} fails ({} {:?} {})",
                    bound, case, bad.claim, bad.lhs, bad.relation, bad.rhs
                ),
            });
        }
        Ok(CaseCertificate {
            bound,
            case,
            values,
            steps: self.steps,
            chain_holds: true,
        })
    }
}

fn require_connected_five(g: &Graph) -> Result<()> {
    if g.n() < 5 || !g.is_connected() {
        return Err(Error::Precondition(format!(
            "certificates need a connected graph with n >= 5 (got n={}, connected={})",
            g.n(),
            g.is_connected()
        )));
    }
    Ok(())
}

/// Replays the deficiency argument for the gap bound: take the largest maximum-deficiency
/// set `S`, let `x` count isolated vertices and `y` the larger odd components of `G - S`,
/// and check each inequality of the case selected by `S` and `x`.
pub fn case_certificate_gap(g: &Graph) -> Result<CaseCertificate> {
    require_connected_five(g)?;
    let n = g.n() as i64;
    let witness = tutte_berge_witness(g)?;
    let def_f = frac_deficiency_witness(g)?.value;
    let alpha = matching_number(g) as i64;
    let halves = alpha_f_halves(g) as i64;
    let profile = components(g, &witness.set);
    let s = witness.set.len() as i64;
    let x = profile.isolated as i64;
    let y = profile.odd_nontrivial as i64;
    let def = witness.value;
    let gap_sixths = 3 * halves - 6 * alpha;
    let sixths = |v: i64| Frac::new(v, 6);

    let mut chain = Chain::new();
    chain.ints("2 alpha = n - def(S)", 2 * alpha, Relation::Eq, n - def);
    chain.ints("2 alpha_f = n - def_f(G)", halves, Relation::Eq, n - def_f);
    chain.ints(
        "G - S has no even component",
        profile.even() as i64,
        Relation::Eq,
        0,
    );
    chain.ints("def(S) = x + y - |S|", def, Relation::Eq, x + y - s);
    chain.ints("n >= |S| + x + 3y", n, Relation::Ge, s + x + 3 * y);
    chain.ints(
        "6 gap = 3 (def(S) - def_f(G))",
        gap_sixths,
        Relation::Eq,
        3 * (def - def_f),
    );

    let case = if s == 0 {
        chain.ints("def(S) <= 1 for S empty", def, Relation::Le, 1);
        chain.check(
            "gap <= def(S)/2",
            sixths(gap_sixths),
            Relation::Le,
            sixths(3 * def),
        );
        chain.check("def(S)/2 <= 1/2", sixths(3 * def), Relation::Le, sixths(3));
        chain.check("1/2 <= (n-2)/6", sixths(3), Relation::Le, sixths(n - 2));
        ProofCase::EmptySet
    } else if x == 0 {
        chain.ints("def_f(G) >= 0", def_f, Relation::Ge, 0);
        chain.check(
            "gap <= (y - |S|)/2",
            sixths(gap_sixths),
            Relation::Le,
            sixths(3 * (y - s)),
        );
        chain.check(
            "(y - |S|)/2 <= (n - 4|S|)/6",
            sixths(3 * (y - s)),
            Relation::Le,
            sixths(n - 4 * s),
        );
        chain.check(
            "(n - 4|S|)/6 <= (n-4)/6",
            sixths(n - 4 * s),
            Relation::Le,
            sixths(n - 4),
        );
        chain.check(
            "(n-4)/6 < (n-2)/6",
            sixths(n - 4),
            Relation::Lt,
            sixths(n - 2),
        );
        ProofCase::One
    } else {
        chain.ints("def_f(G) >= x - |S|", def_f, Relation::Ge, x - s);
        chain.check(
            "gap <= y/2",
            sixths(gap_sixths),
            Relation::Le,
            sixths(3 * y),
        );
        chain.check(
            "y/2 <= (n - x - |S|)/6",
            sixths(3 * y),
            Relation::Le,
            sixths(n - x - s),
        );
        chain.check(
            "(n - x - |S|)/6 <= (n-2)/6",
            sixths(n - x - s),
            Relation::Le,
            sixths(n - 2),
        );
        ProofCase::Two
    };

    let values = BTreeMap::from([
        ("n", n),
        ("s", s),
        ("x", x),
        ("y", y),
        ("def", def),
        ("def_f", def_f),
        ("alpha", alpha),
        ("alpha_f_halves", halves),
        ("gap_sixths", gap_sixths),
    ]);
    chain.finish(g, Bound::Gap, case, values)
}

/// Replays the canonical-matching argument for the ratio bound on the statistics
/// `(w0, w1, c)` of the canonical optimum.
pub fn case_certificate_ratio(g: &Graph) -> Result<CaseCertificate> {
    require_connected_five(g)?;
    let n = g.n() as i64;
    let f = canonicalize(g, &extract_half_integral(g))?;
    let stats = canonical_stats(g, &f)?;
    let alpha = matching_number(g) as i64;
    let halves = f.size_halves() as i64;
    let w0 = stats.w0 as i64;
    let w1 = stats.w1 as i64;
    let cycles = stats.cycle_count() as i64;
    let lower = stats.matching_lower_bound() as i64;
    let ratio = Frac::new(halves, 2 * alpha);
    let target = Frac::new(3 * n, 2 * n + 2);

    let mut values = BTreeMap::from([
        ("n", n),
        ("alpha", alpha),
        ("alpha_f_halves", halves),
        ("w0", w0),
        ("w1", w1),
        ("sum_c", cycles),
    ]);

    let mut chain = Chain::new();
    chain.ints(
        "n = w0 + 2 w1 + sum (2i+1) c_i",
        n,
        Relation::Eq,
        stats.vertex_total() as i64,
    );
    chain.ints(
        "2 alpha_f = 2 w1 + sum (2i+1) c_i",
        halves,
        Relation::Eq,
        stats.size_halves() as i64,
    );
    chain.ints(
        "2 alpha_f is optimal",
        halves,
        Relation::Eq,
        alpha_f_halves(g) as i64,
    );
    chain.ints("alpha >= w1 + sum i c_i", alpha, Relation::Ge, lower);

    let case = match (w0, w1) {
        (0, 0) => {
            let (&i, &c_i) = stats
                .cycles
                .iter()
                .next()
                .expect("a graph without unweighted vertices or 1-edges has a cycle");
            let i = i as i64;
            values.insert("i", i);
            chain.ints("exactly one half-weight cycle", cycles, Relation::Eq, 1);
            chain.ints("i >= 2", i, Relation::Ge, 2);
            chain.ints("alpha = i c_i", alpha, Relation::Eq, i * c_i as i64);
            chain.check(
                "ratio <= 1 + 1/(2i)",
                ratio,
                Relation::Le,
                Frac::new(2 * i + 1, 2 * i),
            );
            chain.check(
                "1 + 1/(2i) <= 5/4",
                Frac::new(2 * i + 1, 2 * i),
                Relation::Le,
                Frac::new(5, 4),
            );
            chain.check("5/4 <= 3n/(2n+2)", Frac::new(5, 4), Relation::Le, target);
            ProofCase::One
        }
        (_, 0) => {
            return Err(Error::TheoremFalsified {
                graph6: encode_graph6(g).unwrap_or_default(),
                detail: format!("ratio case 2 reached: w0={w0} >= 1 with w1=0"),
            });
        }
        (0, _) => {
            let via_stats = Frac::new(stats.size_halves() as i64, 2 * lower);
            chain.check(
                "ratio <= (w1 + sum (2i+1)/2 c_i)/(w1 + sum i c_i)",
                ratio,
                Relation::Le,
                via_stats,
            );
            chain.check(
                "... = n/(n - sum c_i)",
                via_stats,
                Relation::Eq,
                Frac::new(n, n - cycles),
            );
            chain.ints(
                "3 sum c_i <= n - 2 w1",
                3 * cycles,
                Relation::Le,
                n - 2 * w1,
            );
            chain.check(
                "n/(n - sum c_i) <= 3n/(2n + 2 w1)",
                Frac::new(n, n - cycles),
                Relation::Le,
                Frac::new(3 * n, 2 * n + 2 * w1),
            );
            chain.check(
                "3n/(2n + 2 w1) <= 3n/(2n+2)",
                Frac::new(3 * n, 2 * n + 2 * w1),
                Relation::Le,
                target,
            );
            ProofCase::Three
        }
        _ => {
            let via_stats = Frac::new(stats.size_halves() as i64, 2 * lower);
            let reduced = Frac::new(n - w0, n - w0 - cycles);
            let relaxed = Frac::new(3 * (n - w0), 2 * (n + w1 - w0));
            let shifted = Frac::new(3 * n, 2 * (n + w1));
            chain.check(
                "ratio <= (w1 + sum (2i+1)/2 c_i)/(w1 + sum i c_i)",
                ratio,
                Relation::Le,
                via_stats,
            );
            chain.check(
                "... = (n - w0)/(n - w0 - sum c_i)",
                via_stats,
                Relation::Eq,
                reduced,
            );
            chain.ints(
                "3 sum c_i <= n - 2 w1 - w0",
                3 * cycles,
                Relation::Le,
                n - 2 * w1 - w0,
            );
            chain.check(
                "(n - w0)/(n - w0 - sum c_i) <= 3(n - w0)/(2(n + w1 - w0))",
                reduced,
                Relation::Le,
                relaxed,
            );
            chain.check(
                "3(n - w0)/(2(n + w1 - w0)) < 3n/(2(n + w1))",
                relaxed,
                Relation::Lt,
                shifted,
            );
            chain.check(
                "3n/(2(n + w1)) <= 3n/(2(n+1))",
                shifted,
                Relation::Le,
                target,
            );
            ProofCase::Four
        }
    };
    chain.finish(g, Bound::Ratio, case, values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusMode {
    /// Connected graphs with `n >= 5` against the connected bounds and their equality classes.
    ConnectedTheorems,
    /// Arbitrary graphs against the `n/6` and `3/2` bounds, equality only for disjoint triangles.
    UnionCorollaries,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub total: usize,
    /// graph6 strings violating a bound.
    pub violations: Vec<String>,
    /// graph6 strings whose equality flags disagree with their class.
    pub mismatches: Vec<String>,
    /// Inputs outside the mode's domain, as `index: reason`.
    pub input_errors: Vec<String>,
    pub class_counts: BTreeMap<String, usize>,
    pub equality_gap: Vec<String>,
    pub equality_ratio: Vec<String>,
    #[serde(skip)]
    pub records: Vec<GapRatioRecord>,
}

impl VerificationReport {
    /// `0` when everything holds, `1` on a violation or mismatch, `2` on input errors only.
    pub fn exit_code(&self) -> i32 {
        if !self.violations.is_empty() || !self.mismatches.is_empty() {
            1
        } else if !self.input_errors.is_empty() {
            2
        } else {
            0
        }
    }
}

/// Evaluates every graph (in parallel) and reduces the records in input order.
pub fn verify_corpus(graphs: &[Graph], mode: CorpusMode) -> VerificationReport {
    let outcomes: Vec<std::result::Result<GapRatioRecord, String>> = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| match mode {
            CorpusMode::ConnectedTheorems => {
                if g.n() < 5 || !g.is_connected() {
                    Err(format!(
                        "{idx}: connected mode needs a connected graph with n >= 5"
                    ))
                } else {
                    Ok(evaluate_in(g, Regime::Connected))
                }
            }
            CorpusMode::UnionCorollaries => {
                if g.n() == 0 {
                    Err(format!("{idx}: empty graph"))
                } else {
                    Ok(evaluate_in(g, Regime::Union))
                }
            }
        })
        .collect();

    let mut report = VerificationReport::default();
    for outcome in outcomes {
        let record = match outcome {
            Ok(r) => r,
            Err(e) => {
                report.input_errors.push(e);
                continue;
            }
        };
        report.total += 1;
        *report
            .class_counts
            .entry(record.class.to_string())
            .or_default() += 1;
        if !record.gap_ok || !record.ratio_ok {
            report.violations.push(record.graph6.clone());
        }
        let expected = match mode {
            CorpusMode::ConnectedTheorems => record.class.is_connected_extremal(),
            CorpusMode::UnionCorollaries => record.class == ExtremalClass::DisjointTriangles,
        };
        let ratio_expected = expected && record.alpha > 0;
        if record.equality_gap != expected || record.equality_ratio != ratio_expected {
            report.mismatches.push(record.graph6.clone());
        }
        if record.equality_gap {
            report.equality_gap.push(record.graph6.clone());
        }
        if record.equality_ratio {
            report.equality_ratio.push(record.graph6.clone());
        }
        report.records.push(record);
    }
    report.equality_gap.sort();
    report.equality_ratio.sort();
    report
}
