//! Violation reports shared by all axiom checkers.
//!
//! Every checker enumerates identities over all basis tuples and records each
//! failure as a witness: which law broke, at which basis indices, and the
//! nonzero defect vector (lhs - rhs in codomain coordinates). Reports always
//! contain the full list of violations, never just the first, so hand-entered
//! structure constants can be debugged in one pass.

use crate::exactlin::{format_scalar, Scalar};
use num_traits::Zero;
use std::fmt;

/// Which of the two products (or actions, brackets, operators) a law refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::First => write!(f, "1"),
            Side::Second => write!(f, "2"),
        }
    }
}

/// The identity that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Law {
    /// alpha(a . b) = alpha(a) . alpha(b)
    TwistMultiplicative(Side),
    /// (a . b) . alpha(c) = alpha(a) . (b . c)
    HomAssociative(Side),
    /// (a .1 b) .2 alpha(c) + (a .2 b) .1 alpha(c)
    ///   = alpha(a) .1 (b .2 c) + alpha(a) .2 (b .1 c)
    ProductCompatibility,
    /// phi(a . b) = phi(a) .' phi(b)
    MorphismProduct(Side),
    /// phi . alpha = alpha' . phi
    MorphismTwist,
    /// beta(a <| m) = alpha(a) <| beta(m), and the right-action twin
    ActionTwistLeft(Side),
    ActionTwistRight(Side),
    /// (a . b) <| beta(m) = alpha(a) <| (b <| m)
    BimoduleLeft(Side),
    /// (a <| m) |> alpha(b) = alpha(a) <| (m |> b)
    BimoduleMiddle(Side),
    /// (m |> a) |> alpha(b) = beta(m) |> (a . b)
    BimoduleRight(Side),
    /// mixed two-product bimodule identities
    BimoduleMixedLeft,
    BimoduleMixedMiddle,
    BimoduleMixedRight,
    /// [x, y] = -[y, x]
    BracketAntisymmetry(Side),
    /// twisted Jacobi identity
    HomJacobi(Side),
    /// six-term two-bracket compatibility
    BracketCompatibility,
    /// rho(alpha(x)) . beta = beta . rho(x)
    RepresentationTwist(Side),
    /// rho([x, y]) . beta = rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x)
    RepresentationBracket(Side),
    /// mixed two-bracket representation identity
    RepresentationCompatibility,
    /// N . alpha = alpha . N (and R, S alike)
    OperatorTwistCommute,
    /// N(a) N(b) = N(N(a) b + a N(b) - N(a b))
    NijenhuisLaw,
    /// R(a) R(b) = R(R(a) b + a R(b))
    RotaBaxterLaw(Side),
    /// compatibility of a pair of Rota-Baxter operators
    RotaBaxterPair,
    /// deformation identity at a given t-order
    DeformAssociative(Side, usize),
    DeformCompatible(usize),
    DeformMultiplicative(Side, usize),
    /// abelian-extension structural laws
    ExtensionExactness,
    ExtensionAbelian,
    ExtensionSection,
    /// induced bimodule actions disagree with the declared ones
    ExtensionInducedAction,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::TwistMultiplicative(s) => write!(f, "twist-multiplicative(mu{s})"),
            Law::HomAssociative(s) => write!(f, "hom-associative(mu{s})"),
            Law::ProductCompatibility => write!(f, "product-compatibility"),
            Law::MorphismProduct(s) => write!(f, "morphism-product(mu{s})"),
            Law::MorphismTwist => write!(f, "morphism-twist"),
            Law::ActionTwistLeft(s) => write!(f, "action-twist-left({s})"),
            Law::ActionTwistRight(s) => write!(f, "action-twist-right({s})"),
            Law::BimoduleLeft(s) => write!(f, "bimodule-left({s})"),
            Law::BimoduleMiddle(s) => write!(f, "bimodule-middle({s})"),
            Law::BimoduleRight(s) => write!(f, "bimodule-right({s})"),
            Law::BimoduleMixedLeft => write!(f, "bimodule-mixed-left"),
            Law::BimoduleMixedMiddle => write!(f, "bimodule-mixed-middle"),
            Law::BimoduleMixedRight => write!(f, "bimodule-mixed-right"),
            Law::BracketAntisymmetry(s) => write!(f, "bracket-antisymmetry({s})"),
            Law::HomJacobi(s) => write!(f, "hom-jacobi({s})"),
            Law::BracketCompatibility => write!(f, "bracket-compatibility"),
            Law::RepresentationTwist(s) => write!(f, "representation-twist({s})"),
            Law::RepresentationBracket(s) => write!(f, "representation-bracket({s})"),
            Law::RepresentationCompatibility => write!(f, "representation-compatibility"),
            Law::OperatorTwistCommute => write!(f, "operator-twist-commute"),
            Law::NijenhuisLaw => write!(f, "nijenhuis-law"),
            Law::RotaBaxterLaw(s) => write!(f, "rota-baxter-law({s})"),
            Law::RotaBaxterPair => write!(f, "rota-baxter-pair"),
            Law::DeformAssociative(s, n) => write!(f, "deform-associative(mu{s}, order {n})"),
            Law::DeformCompatible(n) => write!(f, "deform-compatible(order {n})"),
            Law::DeformMultiplicative(s, n) => {
                write!(f, "deform-multiplicative(mu{s}, order {n})")
            }
            Law::ExtensionExactness => write!(f, "extension-exactness"),
            Law::ExtensionAbelian => write!(f, "extension-abelian"),
            Law::ExtensionSection => write!(f, "extension-section"),
            Law::ExtensionInducedAction => write!(f, "extension-induced-action"),
        }
    }
}

/// One failed identity instance: basis indices plus the defect vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub indices: Vec<usize>,
    pub defect: Vec<Scalar>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let defect: Vec<String> = self.defect.iter().map(format_scalar).collect();
        write!(
            f,
            "{} at {:?}: defect [{}]",
            self.law,
            self.indices,
            defect.join(", ")
        )
    }
}

/// Result of an exhaustive axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn ok_report() -> Self {
        CheckReport {
            violations: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: Law, indices: &[usize], defect: Vec<Scalar>) {
        if defect.iter().any(|x| !x.is_zero()) {
            self.violations.push(Violation {
                law,
                indices: indices.to_vec(),
                defect,
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "ok")
        } else {
            writeln!(f, "{} violation(s):", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}
