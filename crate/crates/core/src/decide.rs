//! The seven properties, decided from the inertia and kernels of `A⁺`,
//! `A_λ`, `A_ρ` and `H`, each `yes` backed by a solution of the BKN
//! equation whenever one can be built from the spectral data.
//!
//! Every decider validates its input and orients it so that some charge
//! is positive. Witness solutions are returned for the graph as given:
//! reversing the orientation negates charges, so angles are negated back.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bkn::{
    classify, compatibility_conditions, component_witness, deformation_witness, residual_norm,
    witness_from_kernel, witness_from_weak_singularity, BknSolution, KernelMode,
};
use crate::cohomology::CohomologyBasis;
use crate::error::{Error, Result};
use crate::exactla::{inertia, is_supersingular, is_weakly_singular, Inertia, DEFAULT_SUBSET_CAP};
use crate::graph::LabeledGraph;
use crate::json::rational_vec_to_value;
use crate::operators::{
    admissible_s_functions, build_a_lambda, build_a_plus, build_h, sign_components,
    SFunction, SignDecomposition,
};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Undetermined,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// π₁-injective immersed surface
    I,
    /// horizontal immersed surface
    HI,
    /// embedded surface
    E,
    /// virtually embedded surface
    VE,
    /// fibering over the circle
    F,
    /// virtual fibering
    VF,
    /// nonpositively curved metric
    NPC,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::I,
        Property::HI,
        Property::E,
        Property::VE,
        Property::F,
        Property::VF,
        Property::NPC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::I => "I",
            Property::HI => "HI",
            Property::E => "E",
            Property::VE => "VE",
            Property::F => "F",
            Property::VF => "VF",
            Property::NPC => "NPC",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Property::ALL.into_iter().find(|p| p.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The implication diagram: every `(A, B)` reads "A implies B".
pub const IMPLICATIONS: [(Property, Property); 10] = [
    (Property::F, Property::E),
    (Property::F, Property::VF),
    (Property::E, Property::VE),
    (Property::NPC, Property::VE),
    (Property::NPC, Property::VF),
    (Property::VE, Property::I),
    (Property::VF, Property::HI),
    (Property::VF, Property::VE),
    (Property::I, Property::HI),
    (Property::HI, Property::I),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    /// Largest dimension for the weak-singularity subset search.
    pub subset_cap: usize,
    /// Bracket width at which the deformation bisection stops.
    pub deformation_tol: Rational,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            subset_cap: DEFAULT_SUBSET_CAP,
            deformation_tol: rational::ratio(1, 1 << 20),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    /// `a ≡ 1, γ ≡ 0` when every charge vanishes.
    ZeroCharges,
    /// Length concentrated at a zero-charge vertex.
    ZeroChargeVertex,
    KernelAPlus,
    KernelH,
    KernelARho,
    WeakSingularity,
    /// Kernel of `A⁺_t = D⁺ - tJ`, possibly approximate.
    Deformation,
    /// Kernel or deformation on a single sign component.
    SignComponent,
}

impl WitnessSource {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessSource::ZeroCharges => "zero_charges",
            WitnessSource::ZeroChargeVertex => "zero_charge_vertex",
            WitnessSource::KernelAPlus => "kernel_aplus",
            WitnessSource::KernelH => "kernel_h",
            WitnessSource::KernelARho => "kernel_arho",
            WitnessSource::WeakSingularity => "weak_singularity",
            WitnessSource::Deformation => "deformation",
            WitnessSource::SignComponent => "sign_component",
        }
    }
}

/// Evidence for a `yes`: a BKN solution of the graph as given, plus the
/// spectral data it came from (expressed for the oriented graph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub source: WitnessSource,
    pub vector: Option<Vec<Rational>>,
    /// Cohomology class index, for `E`.
    pub class_index: Option<usize>,
    pub s: Option<SFunction>,
    pub t: Option<Rational>,
    pub solution: BknSolution,
    /// Exact bound on the residual; zero for exact witnesses.
    pub residual_bound: Rational,
}

impl Witness {
    fn exact(source: WitnessSource, solution: BknSolution) -> Self {
        Witness {
            source,
            vector: None,
            class_index: None,
            s: None,
            t: None,
            solution,
            residual_bound: Rational::zero(),
        }
    }

    fn with_vector(mut self, x: Vec<Rational>) -> Self {
        self.vector = Some(x);
        self
    }

    fn with_s(mut self, s: SFunction) -> Self {
        self.s = Some(s);
        self
    }

    pub fn is_exact(&self) -> bool {
        self.residual_bound.is_zero()
    }

    fn reoriented(mut self) -> Self {
        for g in &mut self.solution.gamma {
            *g = -&*g;
        }
        self
    }

    pub fn to_value(&self, g: &LabeledGraph, float: bool) -> Value {
        let mut obj = Map::new();
        obj.insert("source".into(), json!(self.source.as_str()));
        obj.insert("exact".into(), json!(self.is_exact()));
        obj.insert(
            "residual_bound".into(),
            json!(rational::format(&self.residual_bound)),
        );
        obj.insert("solution".into(), self.solution.to_value());
        if let Some(x) = &self.vector {
            obj.insert("vector".into(), rational_vec_to_value(x));
        }
        if let Some(c) = self.class_index {
            obj.insert("class".into(), json!(c));
        }
        if let Some(s) = &self.s {
            obj.insert("s".into(), json!(s.values()));
        }
        if let Some(t) = &self.t {
            obj.insert("t".into(), json!(rational::format(t)));
        }
        if let Ok(c) = classify(g, &self.solution) {
            obj.insert("classification".into(), serde_json::to_value(c).unwrap());
        }
        if float {
            let approx = |v: &[Rational]| v.iter().map(rational::approx).collect::<Vec<_>>();
            obj.insert(
                "float".into(),
                json!({
                    "note": "decimal approximations, not authoritative",
                    "a": approx(&self.solution.a),
                    "gamma": approx(&self.solution.gamma),
                    "residual_bound": rational::approx(&self.residual_bound),
                }),
            );
        }
        Value::Object(obj)
    }
}

/// Whether `w` certifies `p` on `g`: exact witnesses must meet the
/// matching BKN-level clause exactly; approximate ones must meet every
/// condition except the equation, with residual within their bound.
pub fn witness_satisfies(g: &LabeledGraph, p: Property, w: &Witness) -> Result<bool> {
    let sol = &w.solution;
    let c = classify(g, sol)?;
    let one = Rational::one();
    if w.is_exact() {
        return Ok(match p {
            Property::I => c.compatible,
            Property::HI => c.compatible && c.positive_length,
            Property::E => c.compatible && c.symmetric && c.e_shaped,
            Property::VE => c.compatible && c.symmetric,
            Property::F => c.compatible && c.f_shaped == Some(true),
            Property::VF => c.compatible && c.symmetric && c.positive_length,
            Property::NPC => c.npc,
        });
    }
    if residual_norm(g, sol)? > w.residual_bound || !compatibility_conditions(g, sol)? {
        return Ok(false);
    }
    let open = sol.gamma.iter().all(|x| x.abs() < one);
    Ok(match p {
        Property::I => true,
        Property::HI => c.positive_length,
        Property::VE => c.symmetric,
        Property::VF => c.symmetric && c.positive_length,
        Property::NPC => c.symmetric && c.positive_length && open,
        Property::E | Property::F => false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl Decision {
    fn no() -> Self {
        Decision {
            verdict: Verdict::No,
            witness: None,
            notes: Vec::new(),
        }
    }

    fn yes(witness: Option<Witness>) -> Self {
        Decision {
            verdict: Verdict::Yes,
            witness,
            notes: Vec::new(),
        }
    }

    fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }
}

/// Spectral data of `H` for one admissible `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SAnalysis {
    pub s: SFunction,
    pub h_inertia: Inertia,
    pub h_supersingular: Option<Vec<Rational>>,
    pub h_kernel: Vec<Vec<Rational>>,
}

impl SAnalysis {
    fn ve(&self) -> bool {
        self.h_inertia.has_nonpositive()
    }

    fn vf(&self) -> bool {
        self.h_inertia.has_negative()
            || (self.h_inertia.is_positive_semidefinite() && self.h_supersingular.is_some())
    }

    fn npc(&self) -> bool {
        self.h_inertia.has_negative() || self.s.is_zero()
    }
}

/// The oriented graph together with the data shared by the deciders.
struct Prepared {
    g: LabeledGraph,
    flipped: bool,
    signs: SignDecomposition,
    analyses: Vec<SAnalysis>,
}

impl Prepared {
    fn new(input: &LabeledGraph) -> Result<Self> {
        input.require_decidable()?;
        let (g, flipped) = input.normalize_orientation();
        let signs = sign_components(&g);
        let analyses = admissible_s_functions(&signs)
            .into_iter()
            .map(|s| {
                let h = build_h(&g, &s)?;
                Ok(SAnalysis {
                    h_inertia: inertia(&h),
                    h_supersingular: is_supersingular(&h),
                    h_kernel: h.kernel_basis(),
                    s,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Prepared {
            g,
            flipped,
            signs,
            analyses,
        })
    }

    fn all_zero(&self) -> bool {
        self.g.charges().iter().all(Zero::is_zero)
    }

    fn single_component(&self) -> bool {
        self.signs.components().len() == 1
    }

    fn first_zero_vertex(&self) -> Option<usize> {
        (0..self.g.n_vertices()).find(|&v| self.g.charge(v).is_zero())
    }

    fn finish(&self, mut d: Decision) -> Decision {
        if self.flipped {
            d.witness = d.witness.map(Witness::reoriented);
        }
        d
    }

    /// Verdict over all admissible `s`, with a note when they disagree.
    fn quantify(&self, p: Property, f: impl Fn(&SAnalysis) -> bool) -> (bool, Option<String>) {
        let holds: Vec<bool> = self.analyses.iter().map(f).collect();
        let any = holds.iter().any(|&b| b);
        let note = (any && !holds.iter().all(|&b| b)).then(|| {
            let list = |want: bool| {
                self.analyses
                    .iter()
                    .zip(&holds)
                    .filter(|(_, &h)| h == want)
                    .map(|(a, _)| format!("{:?}", a.s.values()))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            format!(
                "{p}: admissible s-functions disagree; criterion holds for {} and fails for {}",
                list(true),
                list(false)
            )
        });
        (any, note)
    }

    fn deformation(&self, tol: &Rational) -> Result<Witness> {
        let dw = deformation_witness(&self.g, tol)?;
        Ok(Witness {
            source: WitnessSource::Deformation,
            vector: None,
            class_index: None,
            s: None,
            t: Some(dw.t),
            solution: dw.solution,
            residual_bound: dw.residual_bound,
        })
    }

    fn decide_i(&self, opts: &DecideOptions) -> Result<Decision> {
        let g = &self.g;
        let a_plus = build_a_plus(g)?;
        let inr = inertia(&a_plus);
        let one_sign = !g.charges().iter().any(|k| k.is_negative());
        let case1 = one_sign && inr.is_positive_semidefinite() && inr.is_singular();
        let case2 = inr.has_negative();
        if !(case1 || case2) {
            return Ok(Decision::no());
        }
        let witness = if self.all_zero() {
            Witness::exact(WitnessSource::ZeroCharges, BknSolution::unit_lengths(g))
        } else if one_sign && inr.is_singular() {
            let x = a_plus.kernel_basis().swap_remove(0);
            let sol = witness_from_kernel(g, &KernelMode::APlus, &x)?;
            Witness::exact(WitnessSource::KernelAPlus, sol).with_vector(x)
        } else if let Some(v) = self.first_zero_vertex() {
            Witness::exact(WitnessSource::ZeroChargeVertex, BknSolution::point(g, v))
        } else {
            self.deformation(&opts.deformation_tol)?
        };
        Ok(Decision::yes(Some(witness)))
    }

    fn decide_e(&self, opts: &DecideOptions) -> Result<Decision> {
        let g = &self.g;
        let basis = CohomologyBasis::new(g)?;
        for index in 0..basis.class_count()? {
            let lambda = basis.representative(index)?;
            let a = build_a_lambda(g, &lambda)?;
            if let Some(x) = is_weakly_singular(&a, opts.subset_cap)? {
                let sol = witness_from_weak_singularity(g, &lambda, &x)?;
                let mut w = Witness::exact(WitnessSource::WeakSingularity, sol).with_vector(x);
                w.class_index = Some(index);
                return Ok(Decision::yes(Some(w)));
            }
        }
        Ok(Decision::no())
    }

    fn h_kernel_witness(&self, a: &SAnalysis, prefer_full: bool) -> Option<Witness> {
        if a.s.is_zero() {
            return None;
        }
        let x = match (&a.h_supersingular, prefer_full) {
            (Some(x), _) => x.clone(),
            (None, true) => return None,
            (None, false) => a.h_kernel.first()?.clone(),
        };
        let sol = witness_from_kernel(&self.g, &KernelMode::H(a.s.clone()), &x).ok()?;
        Some(
            Witness::exact(WitnessSource::KernelH, sol)
                .with_vector(x)
                .with_s(a.s.clone()),
        )
    }

    fn component_witness(&self, tol: &Rational) -> Result<Option<Witness>> {
        let mut approx = None;
        for u in 0..self.signs.components().len() {
            let Some(cw) = component_witness(&self.g, &self.signs, u, tol)? else {
                continue;
            };
            let source = if self.signs.components()[u].len() == 1
                && self.g.charge(self.signs.components()[u][0]).is_zero()
            {
                WitnessSource::ZeroChargeVertex
            } else {
                WitnessSource::SignComponent
            };
            let w = Witness {
                source,
                vector: None,
                class_index: None,
                s: None,
                t: cw.t,
                solution: cw.solution,
                residual_bound: cw.residual_bound,
            };
            if w.is_exact() {
                return Ok(Some(w));
            }
            approx.get_or_insert(w);
        }
        Ok(approx)
    }

    fn decide_ve(&self, opts: &DecideOptions) -> Result<Decision> {
        let (holds, note) = self.quantify(Property::VE, SAnalysis::ve);
        let mut d = if !holds {
            Decision::no()
        } else if self.all_zero() {
            Decision::yes(Some(Witness::exact(
                WitnessSource::ZeroCharges,
                BknSolution::unit_lengths(&self.g),
            )))
        } else {
            let from_kernel = self
                .analyses
                .iter()
                .filter(|a| a.h_inertia.is_singular())
                .find_map(|a| self.h_kernel_witness(a, false));
            let w = match from_kernel {
                Some(w) => Some(w),
                None => self.component_witness(&opts.deformation_tol)?,
            };
            let missing = w.is_none();
            let d = Decision::yes(w);
            if missing {
                d.note("VE: no witness constructed from kernels or single sign components")
            } else {
                d
            }
        };
        d.notes.extend(note);
        Ok(d)
    }

    fn decide_f(&self) -> Result<Decision> {
        let g = &self.g;
        let Some(rho) = g.rho() else {
            return Ok(Decision {
                verdict: Verdict::Undetermined,
                witness: None,
                notes: vec!["F: undetermined because the form rho is absent".into()],
            });
        };
        let a_rho = build_a_lambda(g, rho)?;
        Ok(match is_supersingular(&a_rho) {
            Some(x) => {
                let sol = witness_from_kernel(g, &KernelMode::ARho, &x)?;
                Decision::yes(Some(
                    Witness::exact(WitnessSource::KernelARho, sol).with_vector(x),
                ))
            }
            None => Decision::no(),
        })
    }

    /// Positive solution with symmetric angles `|γ| = t < 1` when the whole
    /// graph is one sign component and `A⁺ = H` has a negative eigenvalue.
    fn single_component_deformation(&self, opts: &DecideOptions) -> Result<Option<Witness>> {
        if self.all_zero() || !self.single_component() {
            return Ok(None);
        }
        if !inertia(&build_a_plus(&self.g)?).has_negative() {
            return Ok(None);
        }
        self.deformation(&opts.deformation_tol).map(Some)
    }

    fn decide_vf(&self, opts: &DecideOptions) -> Result<Decision> {
        let (holds, note) = self.quantify(Property::VF, SAnalysis::vf);
        let mut d = if !holds {
            Decision::no()
        } else if self.all_zero() {
            Decision::yes(Some(Witness::exact(
                WitnessSource::ZeroCharges,
                BknSolution::unit_lengths(&self.g),
            )))
        } else {
            let w = match self
                .analyses
                .iter()
                .find_map(|a| self.h_kernel_witness(a, true))
            {
                Some(w) => Some(w),
                None => self.single_component_deformation(opts)?,
            };
            let missing = w.is_none();
            let d = Decision::yes(w);
            if missing {
                d.note("VF: no positive witness constructed from kernels or deformation")
            } else {
                d
            }
        };
        d.notes.extend(note);
        Ok(d)
    }

    fn decide_npc(&self, opts: &DecideOptions) -> Result<Decision> {
        let (holds, note) = self.quantify(Property::NPC, SAnalysis::npc);
        let mut d = if !holds {
            Decision::no()
        } else if self.all_zero() {
            Decision::yes(Some(Witness::exact(
                WitnessSource::ZeroCharges,
                BknSolution::unit_lengths(&self.g),
            )))
        } else {
            let w = self.single_component_deformation(opts)?;
            let missing = w.is_none();
            let d = Decision::yes(w);
            if missing {
                d.note("NPC: no witness constructed; the criterion is decided spectrally")
            } else {
                d
            }
        };
        d.notes.extend(note);
        Ok(d)
    }

    fn decide(&self, p: Property, opts: &DecideOptions) -> Result<Decision> {
        let d = match p {
            Property::I => self.decide_i(opts)?,
            Property::HI => return Ok(hi_from_i(self.decide(Property::I, opts)?)),
            Property::E => self.decide_e(opts)?,
            Property::VE => self.decide_ve(opts)?,
            Property::F => self.decide_f()?,
            Property::VF => self.decide_vf(opts)?,
            Property::NPC => self.decide_npc(opts)?,
        };
        Ok(self.finish(d))
    }
}

/// A compatible solution exists iff `A⁺` has a negative eigenvalue, or
/// the charges share one sign and `A⁺` is positive semidefinite and
/// singular.
pub fn decide_i(g: &LabeledGraph, opts: &DecideOptions) -> Result<Decision> {
    Prepared::new(g)?.decide(Property::I, opts)
}

/// `A_λ` is weakly singular for some class `λ ∈ H¹(Γ; Z₂)`.
pub fn decide_e(g: &LabeledGraph, opts: &DecideOptions) -> Result<Decision> {
    Prepared::new(g)?.decide(Property::E, opts)
}

/// `H` has a nonpositive eigenvalue for some admissible `s`.
pub fn decide_ve(g: &LabeledGraph, opts: &DecideOptions) -> Result<Decision> {
    Prepared::new(g)?.decide(Property::VE, opts)
}

/// `A_ρ` is supersingular; undetermined without `ρ`.
pub fn decide_f(g: &LabeledGraph, opts: &DecideOptions) -> Result<Decision> {
    Prepared::new(g)?.decide(Property::F, opts)
}

/// `H` has a negative eigenvalue, or is positive semidefinite and
/// supersingular, for some admissible `s`.
pub fn decide_vf(g: &LabeledGraph, opts: &DecideOptions) -> Result<Decision> {
    Prepared::new(g)?.decide(Property::VF, opts)
}

/// `H` has a negative eigenvalue for some admissible `s`, or `s ≡ 0`.
pub fn decide_npc(g: &LabeledGraph, opts: &DecideOptions) -> Result<Decision> {
    Prepared::new(g)?.decide(Property::NPC, opts)
}

/// All seven verdicts with witnesses and the implication check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub decisions: BTreeMap<Property, Decision>,
    pub orientation_flipped: bool,
    pub a_plus_inertia: Inertia,
    pub s_analyses: Vec<SAnalysis>,
    /// Violated implications, as `"A => B"`.
    pub violations: Vec<String>,
}

impl PropertyReport {
    pub fn verdict(&self, p: Property) -> Verdict {
        self.decisions[&p].verdict
    }

    pub fn witness(&self, p: Property) -> Option<&Witness> {
        self.decisions[&p].witness.as_ref()
    }

    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn notes(&self) -> Vec<String> {
        let mut notes: Vec<String> = Property::ALL
            .iter()
            .flat_map(|p| self.decisions[p].notes.iter().cloned())
            .collect();
        notes.dedup();
        notes
    }

    /// JSON with sorted keys. Witness details appear with `witnesses`,
    /// per-`s` spectral data with `all_s`.
    pub fn to_value(&self, g: &LabeledGraph, witnesses: bool, all_s: bool, float: bool) -> Value {
        let mut obj = Map::new();
        for p in Property::ALL {
            obj.insert(p.name().into(), json!(self.verdict(p).as_str()));
        }
        let mut wmap = Map::new();
        for p in Property::ALL {
            if let Some(w) = self.witness(p) {
                let v = if witnesses {
                    w.to_value(g, float)
                } else {
                    json!({"source": w.source.as_str(), "exact": w.is_exact()})
                };
                wmap.insert(p.name().into(), v);
            }
        }
        obj.insert("witnesses".into(), Value::Object(wmap));
        obj.insert(
            "consistency".into(),
            if self.is_consistent() {
                json!("ok")
            } else {
                json!({ "violations": self.violations })
            },
        );
        obj.insert("notes".into(), json!(self.notes()));
        obj.insert("orientation_flipped".into(), json!(self.orientation_flipped));
        obj.insert("aplus_inertia".into(), inertia_value(&self.a_plus_inertia));
        if all_s {
            let rows: Vec<Value> = self
                .s_analyses
                .iter()
                .map(|a| {
                    json!({
                        "s": a.s.values(),
                        "h_inertia": inertia_value(&a.h_inertia),
                        "h_supersingular": a.h_supersingular.is_some(),
                        "VE": a.ve(),
                        "VF": a.vf(),
                        "NPC": a.npc(),
                    })
                })
                .collect();
            obj.insert("s_functions".into(), Value::Array(rows));
        }
        Value::Object(obj)
    }
}

pub fn inertia_value(i: &Inertia) -> Value {
    json!({"positive": i.positive, "zero": i.zero, "negative": i.negative})
}

/// Implications of the diagram violated by the determined verdicts.
pub fn consistency_violations(verdict: impl Fn(Property) -> Verdict) -> Vec<String> {
    IMPLICATIONS
        .iter()
        .filter(|&&(a, b)| verdict(a) == Verdict::Yes && verdict(b) == Verdict::No)
        .map(|(a, b)| format!("{a} => {b}"))
        .collect()
}

/// HI has the verdict of I; the I witness is reused when its lengths
/// are positive.
fn hi_from_i(i: Decision) -> Decision {
    let hi_witness = i
        .witness
        .filter(|w| w.solution.a.iter().all(|x| x.is_positive()));
    let mut hi = Decision {
        verdict: i.verdict,
        witness: hi_witness,
        notes: Vec::new(),
    };
    if hi.verdict == Verdict::Yes && hi.witness.is_none() {
        hi.notes
            .push("HI: equal to I; the I witness does not have positive lengths".into());
    }
    hi
}

/// Decides the listed properties, sharing the spectral preprocessing.
pub fn decide_properties(
    g: &LabeledGraph,
    props: &[Property],
    opts: &DecideOptions,
) -> Result<Vec<(Property, Decision)>> {
    let prep = Prepared::new(g)?;
    props
        .iter()
        .map(|&p| prep.decide(p, opts).map(|d| (p, d)))
        .collect()
}

pub fn decide_all(g: &LabeledGraph, opts: &DecideOptions) -> Result<PropertyReport> {
    let prep = Prepared::new(g)?;
    let mut decisions = BTreeMap::new();
    for p in [
        Property::I,
        Property::E,
        Property::VE,
        Property::F,
        Property::VF,
        Property::NPC,
    ] {
        decisions.insert(p, prep.decide(p, opts)?);
    }
    let mut hi = hi_from_i(decisions[&Property::I].clone());
    if hi.verdict == Verdict::Yes && hi.witness.is_none() {
        // any positive witness of a stronger property certifies HI
        let borrowed = [Property::VF, Property::NPC, Property::VE, Property::F]
            .iter()
            .filter_map(|p| decisions[p].witness.as_ref())
            .find(|w| w.solution.a.iter().all(|x| x.is_positive()))
            .cloned();
        if borrowed.is_some() {
            hi.witness = borrowed;
            hi.notes.clear();
        }
    }
    decisions.insert(Property::HI, hi);
    let violations = consistency_violations(|p| decisions[&p].verdict);
    Ok(PropertyReport {
        decisions,
        orientation_flipped: prep.flipped,
        a_plus_inertia: inertia(&build_a_plus(&prep.g)?),
        s_analyses: prep.analyses,
        violations,
    })
}

/// Error returned by callers that want a consistent report or nothing.
pub fn require_consistent(report: &PropertyReport) -> Result<()> {
    if report.is_consistent() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "implication diagram violated: {}",
            report.violations.join(", ")
        )))
    }
}
