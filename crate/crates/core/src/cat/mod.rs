//! Algebras in the monoidal categories attached to a quasi-Hopf algebra:
//! module algebras, comodule algebras, bimodule and bicomodule algebras,
//! Yetter–Drinfeld algebras — one container, one axiom table per kind.

pub mod axioms;
pub mod twist;
pub mod yd;

use std::sync::Arc;

use crate::algebra::{Elem, Hom, Space};
use crate::error::Result;
use crate::quasi_hopf::HRef;

/// The monoidal category a twisting map or morphism lives in; fixes the
/// associator used in every axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoryTag {
    /// Plain vector spaces: trivial associator.
    Vect,
    /// Left H-modules: a(x) = Φ·x.
    LeftH,
    /// Right H-modules: a(x) = x·Φ⁻¹.
    RightH,
    /// H-bimodules: a(x) = Φ·x·Φ⁻¹.
    BiH,
    /// Left Yetter–Drinfeld modules: associator as in LeftH.
    Yd,
}

/// Which axiom suite applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    /// Associative unital algebra, no H-structure.
    PlainAssociative,
    LeftModuleAlgebra,
    RightModuleAlgebra,
    BimoduleAlgebra,
    RightComoduleAlgebra,
    LeftComoduleAlgebra,
    BicomoduleAlgebra,
    YdAlgebra,
}

impl StructureKind {
    pub fn tag(&self) -> CategoryTag {
        match self {
            StructureKind::PlainAssociative
            | StructureKind::RightComoduleAlgebra
            | StructureKind::LeftComoduleAlgebra
            | StructureKind::BicomoduleAlgebra => CategoryTag::Vect,
            StructureKind::LeftModuleAlgebra => CategoryTag::LeftH,
            StructureKind::RightModuleAlgebra => CategoryTag::RightH,
            StructureKind::BimoduleAlgebra => CategoryTag::BiH,
            StructureKind::YdAlgebra => CategoryTag::Yd,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            StructureKind::PlainAssociative => "associative",
            StructureKind::LeftModuleAlgebra => "left-module-algebra",
            StructureKind::RightModuleAlgebra => "right-module-algebra",
            StructureKind::BimoduleAlgebra => "bimodule-algebra",
            StructureKind::RightComoduleAlgebra => "right-comodule-algebra",
            StructureKind::LeftComoduleAlgebra => "left-comodule-algebra",
            StructureKind::BicomoduleAlgebra => "bicomodule-algebra",
            StructureKind::YdAlgebra => "yd-algebra",
        }
    }
}

/// A reassociator element together with its exact inverse.
#[derive(Clone)]
pub struct Reassoc {
    pub elem: Elem,
    pub inv: Elem,
}

impl Reassoc {
    pub fn new(elem: Elem) -> Result<Self> {
        let inv = elem.algebra_inverse()?;
        Ok(Reassoc { elem, inv })
    }

    pub fn with_inverse(elem: Elem, inv: Elem) -> Self {
        Reassoc { elem, inv }
    }
}

/// A carrier algebra plus whatever H-structure its kind demands. The
/// carrier may be nonassociative; strict associativity is an axiom only for
/// the kinds whose category is Vect.
pub struct CatAlgebra {
    pub name: String,
    pub base: HRef,
    pub carrier: Space,
    pub kind: StructureKind,
    /// H ⊗ A → A
    pub left_action: Option<Hom>,
    /// A ⊗ H → A
    pub right_action: Option<Hom>,
    /// A → H ⊗ A
    pub left_coaction: Option<Hom>,
    /// A → A ⊗ H
    pub right_coaction: Option<Hom>,
    /// Φ_λ ∈ H⊗H⊗A
    pub phi_left: Option<Reassoc>,
    /// Φ_ρ ∈ A⊗H⊗H
    pub phi_right: Option<Reassoc>,
    /// Φ_{λ,ρ} ∈ H⊗A⊗H
    pub phi_mixed: Option<Reassoc>,
}

pub type CatRef = Arc<CatAlgebra>;

impl CatAlgebra {
    pub fn plain(name: impl Into<String>, base: HRef, carrier: Space) -> CatRef {
        Arc::new(CatAlgebra {
            name: name.into(),
            base,
            carrier,
            kind: StructureKind::PlainAssociative,
            left_action: None,
            right_action: None,
            left_coaction: None,
            right_coaction: None,
            phi_left: None,
            phi_right: None,
            phi_mixed: None,
        })
    }

    pub fn left_module(name: impl Into<String>, base: HRef, carrier: Space, action: Hom) -> CatRef {
        Arc::new(CatAlgebra {
            name: name.into(),
            base,
            carrier,
            kind: StructureKind::LeftModuleAlgebra,
            left_action: Some(action),
            right_action: None,
            left_coaction: None,
            right_coaction: None,
            phi_left: None,
            phi_right: None,
            phi_mixed: None,
        })
    }

    pub fn right_module(name: impl Into<String>, base: HRef, carrier: Space, action: Hom) -> CatRef {
        Arc::new(CatAlgebra {
            name: name.into(),
            base,
            carrier,
            kind: StructureKind::RightModuleAlgebra,
            left_action: None,
            right_action: Some(action),
            left_coaction: None,
            right_coaction: None,
            phi_left: None,
            phi_right: None,
            phi_mixed: None,
        })
    }

    pub fn bimodule(
        name: impl Into<String>,
        base: HRef,
        carrier: Space,
        left: Hom,
        right: Hom,
    ) -> CatRef {
        Arc::new(CatAlgebra {
            name: name.into(),
            base,
            carrier,
            kind: StructureKind::BimoduleAlgebra,
            left_action: Some(left),
            right_action: Some(right),
            left_coaction: None,
            right_coaction: None,
            phi_left: None,
            phi_right: None,
            phi_mixed: None,
        })
    }

    pub fn right_comodule(
        name: impl Into<String>,
        base: HRef,
        carrier: Space,
        rho: Hom,
        phi_rho: Reassoc,
    ) -> CatRef {
        Arc::new(CatAlgebra {
            name: name.into(),
            base,
            carrier,
            kind: StructureKind::RightComoduleAlgebra,
            left_action: None,
            right_action: None,
            left_coaction: None,
            right_coaction: Some(rho),
            phi_left: None,
            phi_right: Some(phi_rho),
            phi_mixed: None,
        })
    }

    pub fn left_comodule(
        name: impl Into<String>,
        base: HRef,
        carrier: Space,
        lambda: Hom,
        phi_lambda: Reassoc,
    ) -> CatRef {
        Arc::new(CatAlgebra {
            name: name.into(),
            base,
            carrier,
            kind: StructureKind::LeftComoduleAlgebra,
            left_action: None,
            right_action: None,
            left_coaction: Some(lambda),
            right_coaction: None,
            phi_left: Some(phi_lambda),
            phi_right: None,
            phi_mixed: None,
        })
    }

    #[allow(clippy::too_many_arguments)]
    pub fn bicomodule(
        name: impl Into<String>,
        base: HRef,
        carrier: Space,
        lambda: Hom,
        rho: Hom,
        phi_lambda: Reassoc,
        phi_rho: Reassoc,
        phi_mixed: Reassoc,
    ) -> CatRef {
        Arc::new(CatAlgebra {
            name: name.into(),
            base,
            carrier,
            kind: StructureKind::BicomoduleAlgebra,
            left_action: None,
            right_action: None,
            left_coaction: Some(lambda),
            right_coaction: Some(rho),
            phi_left: Some(phi_lambda),
            phi_right: Some(phi_rho),
            phi_mixed: Some(phi_mixed),
        })
    }

    pub fn yd_algebra(
        name: impl Into<String>,
        base: HRef,
        carrier: Space,
        action: Hom,
        coaction: Hom,
    ) -> CatRef {
        Arc::new(CatAlgebra {
            name: name.into(),
            base,
            carrier,
            kind: StructureKind::YdAlgebra,
            left_action: Some(action),
            right_action: None,
            left_coaction: Some(coaction),
            right_coaction: None,
            phi_left: None,
            phi_right: None,
            phi_mixed: None,
        })
    }

    pub fn act(&self) -> &Hom {
        self.left_action.as_ref().expect("left action present")
    }

    pub fn ract(&self) -> &Hom {
        self.right_action.as_ref().expect("right action present")
    }

    pub fn lcoact(&self) -> &Hom {
        self.left_coaction.as_ref().expect("left coaction present")
    }

    pub fn rcoact(&self) -> &Hom {
        self.right_coaction.as_ref().expect("right coaction present")
    }

    pub fn phi_l(&self) -> &Reassoc {
        self.phi_left.as_ref().expect("Φ_λ present")
    }

    pub fn phi_r(&self) -> &Reassoc {
        self.phi_right.as_ref().expect("Φ_ρ present")
    }

    pub fn phi_lr(&self) -> &Reassoc {
        self.phi_mixed.as_ref().expect("Φ_{λ,ρ} present")
    }

    pub fn unit_elem(&self) -> Elem {
        Elem::unit(&[self.carrier.clone()])
    }

    /// p̃_ρ = x̃¹_ρ ⊗ x̃²_ρ β S(x̃³_ρ) ∈ A ⊗ H (right comodule algebras).
    pub fn p_tilde(&self) -> Elem {
        let s = &self.base.antipode;
        self.phi_r()
            .inv
            .ap(s, 2)
            .mul_const_right(&[1], &self.base.beta)
            .mul_adjacent(1)
    }

    /// q̃_ρ = X̃¹_ρ ⊗ S⁻¹(α X̃³_ρ) X̃²_ρ ∈ A ⊗ H.
    pub fn q_tilde(&self) -> Elem {
        self.phi_r()
            .elem
            .mul_const_left(&[2], &self.base.alpha)
            .ap(&self.base.antipode_inv, 2)
            .mul_into(2, 1, true)
    }

    /// A left module algebra viewed as a bimodule algebra with trivial
    /// right action (and symmetrically).
    pub fn as_bimodule(self: &Arc<Self>) -> CatRef {
        match self.kind {
            StructureKind::BimoduleAlgebra => self.clone(),
            StructureKind::LeftModuleAlgebra | StructureKind::YdAlgebra => CatAlgebra::bimodule(
                self.name.clone(),
                self.base.clone(),
                self.carrier.clone(),
                self.act().clone(),
                trivial_right_action(&self.base, &self.carrier),
            ),
            StructureKind::RightModuleAlgebra => CatAlgebra::bimodule(
                self.name.clone(),
                self.base.clone(),
                self.carrier.clone(),
                trivial_left_action(&self.base, &self.carrier),
                self.ract().clone(),
            ),
            _ => panic!("as_bimodule on {:?}", self.kind),
        }
    }
}

impl std::fmt::Debug for CatAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CatAlgebra({}, {}, dim {})", self.name, self.kind.as_str(), self.carrier.dim)
    }
}

/// h·a = ε(h)a.
pub fn trivial_left_action(base: &HRef, carrier: &Space) -> Hom {
    let h = base.carrier();
    Hom::from_fn(&[h, carrier.clone()], &[carrier.clone()], |e| {
        e.ap(&base.bi.counit, 0)
    })
}

/// a·h = ε(h)a.
pub fn trivial_right_action(base: &HRef, carrier: &Space) -> Hom {
    let h = base.carrier();
    Hom::from_fn(&[carrier.clone(), h], &[carrier.clone()], |e| {
        e.ap(&base.bi.counit, 1)
    })
}

/// H acting on itself by multiplication (left regular action).
pub fn left_regular_action(base: &HRef) -> Hom {
    let h = base.carrier();
    Hom::from_fn(&[h.clone(), h.clone()], &[h], |e| e.mul_adjacent(0))
}
