//! The theorem registry: each theorem runs as a pipeline that verifies its
//! hypotheses on an instance, performs the construction and checks every
//! conclusion.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::*;
use crate::discovery::catalogue::*;
use crate::error::{Error, Result};
use crate::exactlin::{bilinear_equal, commute_law, is_morphism, s, LinearMap, Tensor2};
use crate::structures::{
    check_bihom_associative, check_bihom_dendriform, check_derivation, check_hom_novikov,
    check_hom_prelie, check_inf_hom_bialgebra, check_rota_baxter, BiHomAlgebra, BiHomDendriform,
    DerivationKind, HomAlgebra, HomLie, InfHomBialgebra, RotaBaxterKind,
};
use crate::verdict::{CheckVerdict, Witness};

/// Identifier of a registered theorem.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TheoremId {
    /// Yau twists of associative, dendriform and infinitesimal bialgebra
    /// structures.
    T1,
    /// Sum and circle products of a BiHom-dendriform algebra.
    T2,
    /// Dendriform algebra from a (σ,τ)-Rota-Baxter operator.
    T3,
    /// A bijective map is a (τ,σ)-derivation iff its inverse is a
    /// (σ,τ)-Rota-Baxter operator.
    T4,
    /// (σ,τ)- and {σ⁻¹,τ⁻¹}-Rota-Baxter operators coincide.
    T5,
    /// `R∘σ` is a {σ,σ}-Rota-Baxter operator for `μ` and `σ∘μ`.
    T6,
    /// BiHom-dendriform algebra from a {σ,τ}-Rota-Baxter operator.
    T7,
    /// Hom-pre-Lie product from a Rota-Baxter operator on a Hom-Lie algebra.
    T8,
    /// Rota-Baxter operator from a Yang-Baxter solution.
    T9,
    /// Novikov and pre-Lie products from derivations and infinitesimal
    /// Hom-bialgebras.
    T10,
    /// The bullet product commutes with Yau twisting.
    T11,
    /// The bullet product of `Δ_r` equals the circle product of the
    /// Yang-Baxter operator.
    T12,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
    ];
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(text))
            .ok_or_else(|| Error::UnknownTheorem(text.to_string()))
    }
}

/// Inputs for a theorem pipeline. Each theorem reads the fields it needs and
/// reports [`Error::MissingInput`] for absent required ones.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Instance {
    pub description: String,
    pub algebra: Option<BiHomAlgebra>,
    pub bialgebra: Option<InfHomBialgebra>,
    pub lie: Option<HomLie>,
    pub dendriform: Option<BiHomDendriform>,
    /// The Rota-Baxter operator or derivation under study.
    pub operator: Option<LinearMap>,
    /// First twisting map; also the structure map of a Yau twist.
    pub sigma: Option<LinearMap>,
    /// Second twisting map.
    pub tau: Option<LinearMap>,
    pub eta: Option<LinearMap>,
    pub r: Option<Tensor2>,
    /// The exponent `n` or `k` of `α^n`-operators and `α^k`-derivations.
    pub power: u32,
}

impl Instance {
    pub fn new(description: impl Into<String>) -> Self {
        Instance {
            description: description.into(),
            ..Default::default()
        }
    }

    pub fn with_algebra(mut self, a: BiHomAlgebra) -> Self {
        self.algebra = Some(a);
        self
    }

    pub fn with_bialgebra(mut self, b: InfHomBialgebra) -> Self {
        self.bialgebra = Some(b);
        self
    }

    pub fn with_lie(mut self, l: HomLie) -> Self {
        self.lie = Some(l);
        self
    }

    pub fn with_dendriform(mut self, d: BiHomDendriform) -> Self {
        self.dendriform = Some(d);
        self
    }

    pub fn with_operator(mut self, f: LinearMap) -> Self {
        self.operator = Some(f);
        self
    }

    pub fn with_sigma(mut self, f: LinearMap) -> Self {
        self.sigma = Some(f);
        self
    }

    pub fn with_tau(mut self, f: LinearMap) -> Self {
        self.tau = Some(f);
        self
    }

    pub fn with_eta(mut self, f: LinearMap) -> Self {
        self.eta = Some(f);
        self
    }

    pub fn with_r(mut self, r: Tensor2) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_power(mut self, n: u32) -> Self {
        self.power = n;
        self
    }

    /// Replaces `r` by `−r`, for the opposite sign convention of `Δ_r`.
    pub fn negate_r(mut self) -> Self {
        self.r = self.r.map(|r| r.neg());
        self
    }

    fn dim(&self) -> Option<usize> {
        self.algebra
            .as_ref()
            .map(BiHomAlgebra::dim)
            .or_else(|| self.bialgebra.as_ref().map(InfHomBialgebra::dim))
            .or_else(|| self.lie.as_ref().map(HomLie::dim))
            .or_else(|| self.dendriform.as_ref().map(BiHomDendriform::dim))
    }

    fn identity(&self) -> Result<LinearMap> {
        let d = self
            .dim()
            .ok_or_else(|| Error::MissingInput("a structure".into()))?;
        Ok(LinearMap::identity(d))
    }

    fn sigma_or_id(&self) -> Result<LinearMap> {
        self.sigma.clone().map_or_else(|| self.identity(), Ok)
    }

    fn tau_or_id(&self) -> Result<LinearMap> {
        self.tau.clone().map_or_else(|| self.identity(), Ok)
    }

    /// The Hom-associative algebra of the instance: the algebra when its two
    /// structure maps agree, otherwise the algebra of the bialgebra.
    fn hom_algebra(&self) -> Result<HomAlgebra> {
        match (&self.algebra, &self.bialgebra) {
            (Some(a), _) => a
                .as_hom()
                .ok_or_else(|| Error::InvalidParameter("the algebra needs α = β".into())),
            (None, Some(b)) => Ok(b.algebra()),
            (None, None) => Err(Error::MissingInput("algebra".into())),
        }
    }
}

fn need<'a, T>(field: &'a Option<T>, what: &str) -> Result<&'a T> {
    field
        .as_ref()
        .ok_or_else(|| Error::MissingInput(what.to_string()))
}

/// Outcome of one theorem pipeline on one instance.
#[derive(Clone, PartialEq, Debug)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub instance_description: String,
    /// Conclusions (and, on failure, the failed hypothesis); the report
    /// passes iff all of them pass.
    pub sub_verdicts: Vec<(String, CheckVerdict)>,
    /// Informational verdicts that are not conclusions, such as the two
    /// sides of an equivalence.
    pub observations: Vec<(String, CheckVerdict)>,
    pub failed_precondition: Option<String>,
    pub passed: bool,
}

impl TheoremReport {
    fn new(theorem_id: TheoremId, description: &str) -> Self {
        TheoremReport {
            theorem_id,
            instance_description: description.to_string(),
            sub_verdicts: Vec::new(),
            observations: Vec::new(),
            failed_precondition: None,
            passed: true,
        }
    }

    fn conclude(&mut self, name: impl Into<String>, verdict: CheckVerdict) {
        self.passed &= verdict.passed;
        self.sub_verdicts.push((name.into(), verdict));
    }

    fn observe(&mut self, name: impl Into<String>, verdict: CheckVerdict) {
        self.observations.push((name.into(), verdict));
    }

    pub fn verdict(&self, name: &str) -> Option<&CheckVerdict> {
        self.sub_verdicts
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }
}

/// A failing verdict for a condition that has no basis-tuple witness.
fn flag(law: &str, holds: bool) -> CheckVerdict {
    if holds {
        CheckVerdict::pass()
    } else {
        CheckVerdict::fail(Witness {
            law: law.to_string(),
            indices: Vec::new(),
            lhs: Vec::new(),
            rhs: Vec::new(),
        })
    }
}

/// Runs theorem `id` on `instance`. Hypothesis failures and internal
/// inconsistencies become failing reports; missing inputs and shape
/// mismatches are errors.
pub fn verify_theorem(id: TheoremId, instance: &Instance) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(id, &instance.description);
    let outcome = match id {
        TheoremId::T1 => yau_twists(instance, &mut report),
        TheoremId::T2 => sum_and_circle(instance, &mut report),
        TheoremId::T3 => paren_dendriform(instance, &mut report),
        TheoremId::T4 => derivation_duality(instance, &mut report),
        TheoremId::T5 => inverse_twist_duality(instance, &mut report),
        TheoremId::T6 => composed_with_sigma(instance, &mut report),
        TheoremId::T7 => brace_dendriform(instance, &mut report),
        TheoremId::T8 => lie_prelie(instance, &mut report),
        TheoremId::T9 => yang_baxter_operator(instance, &mut report),
        TheoremId::T10 => novikov_and_bullet(instance, &mut report),
        TheoremId::T11 => twist_compatibility(instance, &mut report),
        TheoremId::T12 => coincidence(instance, &mut report),
    };
    match outcome {
        Ok(()) => {}
        Err(Error::Precondition {
            hypothesis,
            verdict,
        }) => {
            report.conclude(format!("precondition: {hypothesis}"), *verdict);
            report.failed_precondition = Some(hypothesis);
        }
        Err(Error::InvalidParameter(message)) => {
            report.conclude(format!("precondition: {message}"), flag(&message, false));
            report.failed_precondition = Some(message);
        }
        Err(Error::NotInvertible) => {
            report.conclude("precondition: bijective", flag("bijective", false));
            report.failed_precondition = Some("bijective".into());
        }
        Err(Error::Inconsistent(message)) => report.conclude("consistency", flag(&message, false)),
        Err(other) => return Err(other),
    }
    Ok(report)
}

/// Runs `id` on every instance in parallel; results keep instance order.
pub fn verify_instances(id: TheoremId, instances: &[Instance]) -> Vec<Result<TheoremReport>> {
    instances
        .par_iter()
        .map(|inst| verify_theorem(id, inst))
        .collect()
}

fn yau_twists(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let alpha = inst.sigma_or_id()?;
    let beta = inst.tau.clone().unwrap_or_else(|| alpha.clone());
    let mut any = false;
    if let Some(a) = &inst.algebra {
        let t = yau_twist_assoc(&a.mu, &alpha, &beta)?;
        report.conclude("bihom-associative", check_bihom_associative(&t)?);
        any = true;
    }
    if let Some(d) = &inst.dendriform {
        let t = yau_twist_dendriform(d, &alpha, &beta)?;
        report.conclude("bihom-dendriform", check_bihom_dendriform(&t)?);
        any = true;
    }
    if let Some(b) = &inst.bialgebra {
        let t = yau_twist_inf_bialgebra(&b.mu, &b.delta, &alpha)?;
        report.conclude("inf-hom-bialgebra", check_inf_hom_bialgebra(&t)?);
        any = true;
    }
    if !any {
        return Err(Error::MissingInput(
            "algebra, dendriform or bialgebra".into(),
        ));
    }
    Ok(())
}

fn sum_and_circle(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let d = need(&inst.dendriform, "dendriform")?;
    let sum = dendriform_sum(d)?;
    report.conclude("bihom-associative", check_bihom_associative(&sum)?);
    if d.alpha == d.beta {
        let circ = dendriform_circ(d)?;
        report.conclude("hom-pre-lie", check_hom_prelie(&circ)?);
    }
    Ok(())
}

fn paren_dendriform(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let a = need(&inst.algebra, "algebra")?;
    let r = need(&inst.operator, "operator")?;
    let d = dendriform_from_paren_rb(&a.mu, &inst.sigma_or_id()?, &inst.tau_or_id()?, r)?;
    report.conclude("dendriform", check_bihom_dendriform(&d)?);
    Ok(())
}

fn derivation_duality(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let a = need(&inst.algebra, "algebra")?;
    let d = need(&inst.operator, "operator")?;
    let (sigma, tau) = (inst.sigma_or_id()?, inst.tau_or_id()?);
    require_algebra_map("σ is an algebra map", &sigma, &a.mu)?;
    require_algebra_map("τ is an algebra map", &tau, &a.mu)?;
    let r = d.invert()?;
    let derivation = check_derivation(
        d,
        &a.mu,
        &DerivationKind::Twisted {
            tau: tau.clone(),
            sigma: sigma.clone(),
        },
    )?;
    let rota_baxter = check_rota_baxter(&r, &a.mu, &RotaBaxterKind::Paren { sigma, tau })?;
    let agree = derivation.passed == rota_baxter.passed;
    report.observe("(τ,σ)-derivation", derivation);
    report.observe("inverse is (σ,τ)-Rota-Baxter", rota_baxter);
    report.conclude("equivalence", flag("equivalence", agree));
    Ok(())
}

fn inverse_twist_duality(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let a = need(&inst.algebra, "algebra")?;
    let r = need(&inst.operator, "operator")?;
    let (sigma, tau) = (inst.sigma_or_id()?, inst.tau_or_id()?);
    require_algebra_map("σ is an algebra map", &sigma, &a.mu)?;
    require_algebra_map("τ is an algebra map", &tau, &a.mu)?;
    let (sigma_inv, tau_inv) = (sigma.invert()?, tau.invert()?);
    require_pairwise_commuting(&[("R", r), ("σ", &sigma)])?;
    require_pairwise_commuting(&[("R", r), ("τ", &tau)])?;
    let paren = check_rota_baxter(r, &a.mu, &RotaBaxterKind::Paren { sigma, tau })?;
    let brace = check_rota_baxter(
        r,
        &a.mu,
        &RotaBaxterKind::Brace {
            sigma: sigma_inv,
            tau: tau_inv,
        },
    )?;
    let agree = paren.passed == brace.passed;
    report.observe("(σ,τ)-Rota-Baxter", paren);
    report.observe("{σ⁻¹,τ⁻¹}-Rota-Baxter", brace);
    report.conclude("equivalence", flag("equivalence", agree));
    Ok(())
}

fn composed_with_sigma(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let a = need(&inst.algebra, "algebra")?;
    let r = need(&inst.operator, "operator")?;
    let sigma = inst.sigma_or_id()?;
    require_algebra_map("σ is an algebra map", &sigma, &a.mu)?;
    require(
        "Rota-Baxter operator",
        check_rota_baxter(r, &a.mu, &RotaBaxterKind::ordinary(a.dim()))?,
    )?;
    require_pairwise_commuting(&[("R", r), ("σ", &sigma)])?;
    let r_sigma = r.compose(&sigma)?;
    let kind = RotaBaxterKind::Brace {
        sigma: sigma.clone(),
        tau: sigma.clone(),
    };
    report.conclude(
        "{σ,σ}-Rota-Baxter for μ",
        check_rota_baxter(&r_sigma, &a.mu, &kind)?,
    );
    let twisted = a.mu.then_map(&sigma)?;
    report.conclude(
        "{σ,σ}-Rota-Baxter for σ∘μ",
        check_rota_baxter(&r_sigma, &twisted, &kind)?,
    );
    Ok(())
}

fn brace_dendriform(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let a = need(&inst.algebra, "algebra")?;
    let r = need(&inst.operator, "operator")?;
    let (sigma, tau) = (inst.sigma_or_id()?, inst.tau_or_id()?);
    let d = simprop_dendriform(a, &sigma, &tau, inst.eta.as_ref(), r)?;
    report.conclude("bihom-dendriform", check_bihom_dendriform(&d)?);
    let eta_trivial = inst.eta.as_ref().is_none_or(LinearMap::is_identity);
    if a.is_classical() && eta_trivial {
        let sum = dendriform_sum(&d)?;
        report.conclude("sum is bihom-associative", check_bihom_associative(&sum)?);
        let twist = a.mu.precompose(&sigma, &tau)?;
        report.conclude(
            "morphism to the Yau twist",
            is_morphism(r, &sum.mu, &twist)?,
        );
    }
    Ok(())
}

fn lie_prelie(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let l = need(&inst.lie, "Hom-Lie algebra")?;
    let r = need(&inst.operator, "operator")?;
    let p = analoglie_prelie(l, inst.power, r)?;
    report.conclude("hom-pre-lie", check_hom_prelie(&p)?);
    Ok(())
}

fn yang_baxter_operator(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let a = need(&inst.algebra, "algebra")?;
    let r = need(&inst.r, "tensor r")?;
    let op = abrb_operator(a, r)?;
    report.conclude("closed forms agree", CheckVerdict::pass());
    report.conclude(
        "commutes with α",
        commute_law("commutes-with-alpha", &op, &a.alpha).check(),
    );
    report.conclude(
        "commutes with β",
        commute_law("commutes-with-beta", &op, &a.beta).check(),
    );
    let kind = RotaBaxterKind::AlphaBeta {
        alpha: a.alpha.clone(),
        beta: a.beta.clone(),
    };
    report.conclude("αβ-Rota-Baxter", check_rota_baxter(&op, &a.mu, &kind)?);
    if a.is_hom() {
        let kind = RotaBaxterKind::AlphaPower {
            alpha: a.alpha.clone(),
            n: 2,
        };
        report.conclude("α²-Rota-Baxter", check_rota_baxter(&op, &a.mu, &kind)?);
    }
    for (name, verdict) in invariance_identities(a, r)? {
        report.conclude(name, verdict);
    }
    Ok(())
}

fn novikov_and_bullet(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let mut any = false;
    if let (Some(a), Some(d)) = (&inst.algebra, &inst.operator) {
        let h = a
            .as_hom()
            .ok_or_else(|| Error::InvalidParameter("the algebra needs α = β".into()))?;
        let p = gengd_novikov(&h, inst.power, d)?;
        report.conclude("hom-novikov", check_hom_novikov(&p)?);
        any = true;
    }
    if let Some(b) = &inst.bialgebra {
        let d = mu_delta_map(b)?;
        let kind = DerivationKind::AlphaPower {
            alpha: b.alpha.clone(),
            k: 2,
        };
        report.conclude(
            "μ∘Δ is an α²-derivation",
            check_derivation(&d, &b.mu, &kind)?,
        );
        let bullet = infprelie_bullet(b)?;
        report.conclude("bullet forms agree", CheckVerdict::pass());
        report.conclude("bullet is hom-pre-lie", check_hom_prelie(&bullet)?);
        if crate::structures::check_commutative(&b.mu).passed {
            let novikov = gengd_novikov(&b.algebra(), 2, &d)?;
            report.conclude("bullet is hom-novikov", check_hom_novikov(&novikov)?);
            report.conclude(
                "bullet equals α²(x)D(y)",
                bilinear_equal(&bullet.mu, &novikov.mu)?,
            );
        }
        any = true;
    }
    if !any {
        return Err(Error::MissingInput(
            "bialgebra, or algebra with a derivation".into(),
        ));
    }
    Ok(())
}

fn twist_compatibility(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let b = need(&inst.bialgebra, "bialgebra")?;
    let alpha = inst.sigma_or_id()?;
    let twist = yau_twist_inf_bialgebra(&b.mu, &b.delta, &alpha)?;
    report.conclude(
        "twist is inf-hom-bialgebra",
        check_inf_hom_bialgebra(&twist)?,
    );
    let bullet = infprelie_bullet(&twist)?;
    report.conclude("bullet is hom-pre-lie", check_hom_prelie(&bullet)?);
    let aguiar = aguiar_bullet(&b.mu, &b.delta)?;
    let alpha3 = alpha.pow(3)?;
    let expected = aguiar.mu.then_map(&alpha3)?;
    report.conclude(
        "bullet of twist equals α³-twisted bullet",
        bilinear_equal(&bullet.mu, &expected)?,
    );
    Ok(())
}

fn coincidence(inst: &Instance, report: &mut TheoremReport) -> Result<()> {
    let h = inst.hom_algebra()?;
    let r = need(&inst.r, "tensor r")?;
    let delta = delta_r(&h, r)?;
    let b = InfHomBialgebra::new(h.mu.clone(), delta, h.alpha.clone());
    require(
        "Δ_r gives an infinitesimal Hom-bialgebra",
        check_inf_hom_bialgebra(&b)?,
    )?;
    let bullet = infprelie_bullet(&b)?;
    let op = abrb_operator(&h.to_bihom(), r)?;
    let triple = moregendend_triple(&h, 2, &op)?;
    report.conclude(
        "bullet equals circle",
        bilinear_equal(&bullet.mu, &triple.circ.mu)?,
    );
    report.conclude(
        "structure maps agree",
        flag("structure maps agree", bullet.alpha == triple.circ.alpha),
    );
    report.conclude("circle is hom-pre-lie", check_hom_prelie(&triple.circ)?);
    Ok(())
}

/// Instances built from the catalogue for `id`.
pub fn catalogue_instances(id: TheoremId) -> Vec<Instance> {
    let id2 = || LinearMap::identity(2);
    let id4 = || LinearMap::identity(4);
    let xx = Tensor2::elementary(2, 1, 1, s(1));
    let dx2_twisted = || {
        BiHomAlgebra::hom(
            dx2_product().then_map(&neg_x()).expect("square map"),
            neg_x(),
        )
    };
    match id {
        TheoremId::T1 => vec![
            Instance::new("n2 twisted by (id, id)").with_algebra(n2()),
            Instance::new("n2 twisted by (sgn, sgn)")
                .with_algebra(n2())
                .with_sigma(sgn())
                .with_tau(sgn()),
            Instance::new("dx2 twisted by (neg-x, id)")
                .with_algebra(dx2())
                .with_sigma(neg_x())
                .with_tau(id2()),
            Instance::new("m2 twisted by (conj-d, conj-d)")
                .with_algebra(m2())
                .with_sigma(conj_d())
                .with_tau(conj_d()),
            Instance::new("m2 twisted by (conj-d, id)")
                .with_algebra(m2())
                .with_sigma(conj_d())
                .with_tau(id4()),
            Instance::new("dx2-infbialg twisted by kill-x")
                .with_bialgebra(dx2_infbialg())
                .with_sigma(kill_x()),
        ],
        TheoremId::T2 => {
            let n2_dend = dendriform_from_paren_rb(&n2_product(), &id2(), &id2(), &r_n2())
                .expect("R_N2 is Rota-Baxter");
            let m2_dend =
                simprop_dendriform(&m2(), &id4(), &id4(), Some(&conj_d()), &m2_sandwich())
                    .expect("the sandwich operator commutes with conj-d");
            vec![
                Instance::new("dendriform of r-n2 on n2").with_dendriform(n2_dend),
                Instance::new("m2 sandwich dendriform with η = conj-d").with_dendriform(m2_dend),
            ]
        }
        TheoremId::T3 => vec![
            Instance::new("n2 with r-n2")
                .with_algebra(n2())
                .with_operator(r_n2()),
            Instance::new("m2 with m2-sandwich")
                .with_algebra(m2())
                .with_operator(m2_sandwich()),
        ],
        TheoremId::T4 => vec![
            Instance::new("n2 with D = diag(1, 2)")
                .with_algebra(n2())
                .with_operator(LinearMap::diagonal_ints(&[1, 2])),
            Instance::new("n2 with D = id")
                .with_algebra(n2())
                .with_operator(id2()),
        ],
        TheoremId::T5 => vec![
            Instance::new("dx2 with kill-x, σ = τ = id")
                .with_algebra(dx2())
                .with_operator(kill_x()),
            Instance::new("n2 with r-n2, σ = τ = sgn")
                .with_algebra(n2())
                .with_operator(r_n2())
                .with_sigma(sgn())
                .with_tau(sgn()),
        ],
        TheoremId::T6 => vec![
            Instance::new("n2 with r-n2, σ = sgn")
                .with_algebra(n2())
                .with_operator(r_n2())
                .with_sigma(sgn()),
            Instance::new("m2 with m2-sandwich, σ = conj-d")
                .with_algebra(m2())
                .with_operator(m2_sandwich())
                .with_sigma(conj_d()),
        ],
        TheoremId::T7 => vec![
            Instance::new("n2 with r-n2")
                .with_algebra(n2())
                .with_operator(r_n2()),
            Instance::new("n2 with r-n2, σ = τ = sgn")
                .with_algebra(n2())
                .with_operator(r_n2())
                .with_sigma(sgn())
                .with_tau(sgn()),
            Instance::new("m2 with m2-sandwich, η = conj-d")
                .with_algebra(m2())
                .with_operator(m2_sandwich())
                .with_eta(conj_d()),
        ],
        TheoremId::T8 => vec![Instance::new("m2-lie with m2-sandwich")
            .with_lie(m2_lie())
            .with_operator(m2_sandwich())],
        TheoremId::T9 => vec![
            Instance::new("dx2 with r = x⊗x")
                .with_algebra(dx2())
                .with_r(xx.clone()),
            Instance::new("m2 with r = e12⊗e12")
                .with_algebra(m2())
                .with_r(m2_qt_r()),
            Instance::new("dx2 twisted by neg-x with r = x⊗x")
                .with_algebra(dx2_twisted())
                .with_r(xx),
        ],
        TheoremId::T10 => vec![
            Instance::new("n2 with D = diag(1, 2)")
                .with_algebra(n2())
                .with_operator(LinearMap::diagonal_ints(&[1, 2])),
            Instance::new("dx2-infbialg").with_bialgebra(dx2_infbialg()),
            Instance::new("m2-qt").with_bialgebra(m2_qt().expect("catalogue instance")),
        ],
        TheoremId::T11 => vec![
            Instance::new("dx2-infbialg with α = id").with_bialgebra(dx2_infbialg()),
            Instance::new("dx2-infbialg with α = kill-x")
                .with_bialgebra(dx2_infbialg())
                .with_sigma(kill_x()),
        ],
        TheoremId::T12 => vec![Instance::new("m2-qt").with_algebra(m2()).with_r(m2_qt_r())],
    }
}
