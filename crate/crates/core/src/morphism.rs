//! Morphisms between categorical algebras, with checked flag reports.
//!
//! A morphism advertised as an isomorphism in its category carries an exact
//! two-sided inverse and a report in which every category-relevant flag
//! passed. Verification is always exhaustive over basis tuples.

use crate::algebra::{Elem, Hom};
use crate::cat::axioms;
use crate::cat::{CatRef, StructureKind};
use crate::checks;
use crate::error::{Error, Result};
use crate::report::{AxiomResult, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flag {
    Unital,
    Multiplicative,
    LeftLinear,
    RightLinear,
    LeftColinear,
    RightColinear,
    Bijective,
}

/// The flags that make a map an isomorphism in the category its source
/// lives in.
pub fn iso_flags(kind: StructureKind) -> Vec<Flag> {
    use Flag::*;
    match kind {
        StructureKind::PlainAssociative => vec![Unital, Multiplicative, Bijective],
        StructureKind::LeftModuleAlgebra => vec![Unital, Multiplicative, LeftLinear, Bijective],
        StructureKind::RightModuleAlgebra => vec![Unital, Multiplicative, RightLinear, Bijective],
        StructureKind::BimoduleAlgebra => {
            vec![Unital, Multiplicative, LeftLinear, RightLinear, Bijective]
        }
        StructureKind::LeftComoduleAlgebra => vec![Unital, Multiplicative, LeftColinear, Bijective],
        StructureKind::RightComoduleAlgebra => {
            vec![Unital, Multiplicative, RightColinear, Bijective]
        }
        StructureKind::BicomoduleAlgebra => {
            vec![Unital, Multiplicative, LeftColinear, RightColinear, Bijective]
        }
        StructureKind::YdAlgebra => {
            vec![Unital, Multiplicative, LeftLinear, LeftColinear, Bijective]
        }
    }
}

pub struct Morphism {
    pub name: String,
    pub map: Hom,
    pub inverse: Option<Hom>,
    pub source: CatRef,
    pub target: CatRef,
    pub report: Report,
}

impl Morphism {
    pub fn is_verified_iso(&self) -> bool {
        self.report.all_pass() && self.inverse.is_some()
    }
}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Morphism({}: {} → {})", self.name, self.source.name, self.target.name)
    }
}

/// Runs the requested flag checks for `map : source → target`. When
/// `Bijective` is requested the exact inverse is computed (or taken from
/// `inverse_hint`) and verified two-sided.
pub fn check_morphism(
    name: impl Into<String>,
    map: &Hom,
    source: &CatRef,
    target: &CatRef,
    flags: &[Flag],
    inverse_hint: Option<&Hom>,
) -> Result<Morphism> {
    let name = name.into();
    let mut report = Report::new(format!("morphism {name}: {} → {}", source.name, target.name));
    let mut inverse = None;
    for flag in flags {
        let result = match flag {
            Flag::Unital => AxiomResult::from_witness(
                "unital",
                checks::unital_witness(map, &source.carrier, &target.carrier),
            ),
            Flag::Multiplicative => AxiomResult::from_witness(
                "multiplicative",
                checks::multiplicative_witness(map, &source.carrier),
            ),
            Flag::LeftLinear => AxiomResult::from_witness(
                "left H-linear",
                axioms::intertwines_left_action(map, source, target),
            ),
            Flag::RightLinear => AxiomResult::from_witness(
                "right H-linear",
                axioms::intertwines_right_action(map, source, target),
            ),
            Flag::LeftColinear => AxiomResult::from_witness(
                "left colinear",
                axioms::intertwines_left_coaction(map, source, target),
            ),
            Flag::RightColinear => AxiomResult::from_witness(
                "right colinear",
                axioms::intertwines_right_coaction(map, source, target),
            ),
            Flag::Bijective => {
                let inv = match inverse_hint {
                    Some(h) => Ok(h.clone()),
                    None => map.invert(),
                };
                match inv {
                    Err(_) => AxiomResult::from_witness("bijective", Some(Default::default())),
                    Ok(inv) => {
                        let id_s = Hom::identity(&[source.carrier.clone()]);
                        let id_t = Hom::identity(&[target.carrier.clone()]);
                        let two_sided = inv.compose(map) == id_s && map.compose(&inv) == id_t;
                        if two_sided {
                            inverse = Some(inv);
                            AxiomResult::pass("bijective")
                        } else {
                            AxiomResult::from_witness("bijective", Some(Default::default()))
                        }
                    }
                }
            }
        };
        report.push(result);
    }
    Ok(Morphism {
        name,
        map: map.clone(),
        inverse,
        source: source.clone(),
        target: target.clone(),
        report,
    })
}

/// Unital + multiplicative only (plain algebra morphism).
pub fn check_algebra_morphism(
    name: impl Into<String>,
    map: &Hom,
    source: &CatRef,
    target: &CatRef,
) -> Result<Morphism> {
    check_morphism(name, map, source, target, &[Flag::Unital, Flag::Multiplicative], None)
}

/// Full isomorphism check in the source's own category.
pub fn check_iso(
    name: impl Into<String>,
    map: &Hom,
    source: &CatRef,
    target: &CatRef,
) -> Result<Morphism> {
    check_morphism(name, map, source, target, &iso_flags(source.kind), None)
}

/// Certifies that a stated map is an algebra map before it is used as an
/// input to a construction; returns a refusal naming the witness otherwise.
pub fn require_algebra_map(what: &str, map: &Hom, source: &CatRef, target: &CatRef) -> Result<()> {
    if let Some(w) = checks::multiplicative_witness(map, &source.carrier) {
        return Err(Error::refused(
            what,
            format!("map is not multiplicative at basis pair {:?}", w.as_slice()),
        ));
    }
    let one_src = Elem::unit(&[source.carrier.clone()]);
    let one_tgt = Elem::unit(&[target.carrier.clone()]);
    if map.apply_all(&one_src) != one_tgt {
        return Err(Error::refused(what, "map is not unital".to_string()));
    }
    Ok(())
}
