//! Quasi-bialgebras and quasi-Hopf algebras: data, axiom suites (q1)–(q6),
//! gauge twisting, the Drinfeld twist f with its γ/δ ingredients, and the
//! canonical elements p_R, q_R.

use std::sync::{Arc, OnceLock};

use crate::algebra::{Elem, Hom, Space};
use crate::checks;
use crate::error::{Error, Result};
use crate::report::{AxiomResult, Report};
use crate::scalar::{FieldSpec, Scalar};

/// Quasi-bialgebra: associative unital algebra H with algebra maps Δ, ε and
/// an invertible reassociator Φ ∈ H⊗H⊗H controlling coassociativity.
#[derive(Clone)]
pub struct QuasiBialgebra {
    pub carrier: Space,
    pub delta: Hom,
    pub counit: Hom,
    pub phi: Elem,
    pub phi_inv: Elem,
}

/// Quasi-Hopf algebra: a quasi-bialgebra with an anti-automorphism S and
/// distinguished elements α, β. α and β are normalized to ε(α) = ε(β) = 1 at
/// load time; loading fails when ε(α)ε(β) = 0.
pub struct QuasiHopf {
    pub name: String,
    pub bi: QuasiBialgebra,
    pub antipode: Hom,
    pub antipode_inv: Hom,
    pub alpha: Elem,
    pub beta: Elem,
    twist: OnceLock<DrinfeldTwist>,
    pairs: OnceLock<CanonicalPairs>,
}

pub type HRef = Arc<QuasiHopf>;

/// The Drinfeld twist f with its ingredients: the H^{⊗4} elements feeding
/// γ and δ, and f, f⁻¹ themselves.
#[derive(Clone)]
pub struct DrinfeldTwist {
    pub a_quad: Elem,
    pub b_quad: Elem,
    pub gamma: Elem,
    pub delta: Elem,
    pub f: Elem,
    pub f_inv: Elem,
}

/// p_R = x¹ ⊗ x²βS(x³) and q_R = X¹ ⊗ S⁻¹(αX³)X².
#[derive(Clone)]
pub struct CanonicalPairs {
    pub p_r: Elem,
    pub q_r: Elem,
}

/// An invertible counital element F ∈ H⊗H.
#[derive(Clone)]
pub struct GaugeTransformation {
    pub f: Elem,
    pub f_inv: Elem,
}

impl GaugeTransformation {
    pub fn new(h: &QuasiHopf, f: Elem) -> Result<Self> {
        let one = h.unit_elem();
        let left = f.ap(&h.bi.counit, 0);
        let right = f.ap(&h.bi.counit, 1);
        if left != one || right != one {
            return Err(Error::refused(
                "gauge transformation",
                "counit normalization (ε⊗id)(F) = (id⊗ε)(F) = 1 fails",
            ));
        }
        let f_inv = f.algebra_inverse()?;
        Ok(GaugeTransformation { f, f_inv })
    }

    pub fn identity(h: &QuasiHopf) -> Self {
        let one2 = Elem::unit(&[h.carrier(), h.carrier()]);
        GaugeTransformation { f: one2.clone(), f_inv: one2 }
    }
}

impl QuasiHopf {
    /// Assembles and normalizes a quasi-Hopf algebra. `phi_inv` may be
    /// supplied (constructions often know it exactly); otherwise it is
    /// computed by exact inversion in H^{⊗3}. S⁻¹ is always computed by
    /// matrix inversion; failure is a hard error.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        carrier: Space,
        delta: Hom,
        counit: Hom,
        phi: Elem,
        phi_inv: Option<Elem>,
        antipode: Hom,
        alpha: Elem,
        beta: Elem,
    ) -> Result<HRef> {
        let name = name.into();
        let phi_inv = match phi_inv {
            Some(p) => p,
            None => phi.algebra_inverse()?,
        };
        let antipode_inv = antipode
            .invert()
            .map_err(|_| Error::NotInvertible(format!("antipode of {name} is singular")))?;
        let eps_a = alpha.ap(&counit, 0).data.as_scalar();
        let eps_b = beta.ap(&counit, 0).data.as_scalar();
        if eps_a.mul(&eps_b).is_zero() {
            return Err(Error::refused(
                format!("load of {name}"),
                "ε(α)ε(β) = 0; cannot normalize to ε(α) = ε(β) = 1",
            ));
        }
        let alpha = alpha.scale(&eps_a.inv().expect("nonzero"));
        let beta = beta.scale(&eps_b.inv().expect("nonzero"));
        Ok(Arc::new(QuasiHopf {
            name,
            bi: QuasiBialgebra { carrier, delta, counit, phi, phi_inv },
            antipode,
            antipode_inv,
            alpha,
            beta,
            twist: OnceLock::new(),
            pairs: OnceLock::new(),
        }))
    }

    pub fn carrier(&self) -> Space {
        self.bi.carrier.clone()
    }

    pub fn dim(&self) -> usize {
        self.bi.carrier.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.bi.carrier.field
    }

    pub fn unit_elem(&self) -> Elem {
        Elem::unit(&[self.carrier()])
    }

    pub fn unit_n(&self, n: usize) -> Elem {
        Elem::unit(&vec![self.carrier(); n])
    }

    pub fn eps(&self, e: &Elem) -> Scalar {
        debug_assert_eq!(e.legs.len(), 1);
        e.ap(&self.bi.counit, 0).data.as_scalar()
    }

    /// H ⊗ H → H multiplication as a map.
    pub fn mul_hom(&self) -> Hom {
        let h = self.carrier();
        Hom::from_fn(&[h.clone(), h.clone()], &[h.clone()], |e| e.mul_adjacent(0))
    }

    /// Is the reassociator 1⊗1⊗1 and α = β = 1 (the Hopf degeneration)?
    pub fn is_hopf_degeneration(&self) -> bool {
        self.bi.phi == self.unit_n(3) && self.alpha == self.unit_elem() && self.beta == self.unit_elem()
    }

    // ------------------------------------------------------------------
    // Axiom suites
    // ------------------------------------------------------------------

    /// Axioms of a quasi-bialgebra: underlying algebra, Δ and ε algebra
    /// maps, (q1)–(q4), Φ invertibility.
    pub fn verify_quasi_bialgebra(&self) -> Report {
        let mut rep = Report::new(format!("quasi-bialgebra axioms for {}", self.name));
        let h = self.carrier();
        let hh = [h.clone(), h.clone()];
        let d = &self.bi.delta;
        let eps = &self.bi.counit;

        rep.push(AxiomResult::from_witness("assoc", checks::associativity_witness(&h)));
        rep.push(AxiomResult::from_witness("unit", checks::unit_witness(&h)));

        // Δ is an algebra map.
        let delta_mul = Hom::from_fn(&hh, &hh, |e| e.mul_adjacent(0).ap(d, 0));
        let mul_delta = Hom::from_fn(&hh, &hh, |e| {
            let t = e.ap(d, 0).ap(d, 2); // h1a h1b h2a h2b
            t.permute(&[0, 2, 1, 3]).mul_adjacent(0).mul_adjacent(1)
        });
        rep.push(checks::homs_equal("Δ multiplicative", &delta_mul, &mul_delta));
        rep.push(checks::elems_equal(
            "Δ unital",
            &self.unit_elem().ap(d, 0),
            &self.unit_n(2),
        ));

        // ε is an algebra map.
        let eps_mul = Hom::from_fn(&hh, &[], |e| e.mul_adjacent(0).ap(eps, 0));
        let mul_eps = Hom::from_fn(&hh, &[], |e| e.ap(eps, 0).ap(eps, 0));
        rep.push(checks::homs_equal("ε multiplicative", &eps_mul, &mul_eps));
        rep.push(AxiomResult::from_witness(
            "ε unital",
            if self.eps(&self.unit_elem()).is_one() { None } else { Some(Default::default()) },
        ));

        // (q1): (id⊗Δ)(Δh) = Φ·(Δ⊗id)(Δh)·Φ⁻¹
        let lhs = Hom::from_fn(&[h.clone()], &[h.clone(), h.clone(), h.clone()], |e| {
            e.ap(d, 0).ap(d, 1)
        });
        let rhs = Hom::from_fn(&[h.clone()], &[h.clone(), h.clone(), h.clone()], |e| {
            let t = e.ap(d, 0).ap(d, 0);
            self.bi.phi.mul(&t).mul(&self.bi.phi_inv)
        });
        rep.push(checks::homs_equal("q1", &lhs, &rhs));

        // (q2): (id⊗ε)Δ = id = (ε⊗id)Δ
        let id_h = Hom::identity(&[h.clone()]);
        let right_counit = Hom::from_fn(&[h.clone()], &[h.clone()], |e| e.ap(d, 0).ap(eps, 1));
        let left_counit = Hom::from_fn(&[h.clone()], &[h.clone()], |e| e.ap(d, 0).ap(eps, 0));
        rep.push(AxiomResult::from_witness(
            "q2",
            right_counit
                .first_differing_input(&id_h)
                .or_else(|| left_counit.first_differing_input(&id_h)),
        ));

        // (q3): (1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) = (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ)
        let one = self.unit_elem();
        let lhs = one
            .tensor(&self.bi.phi)
            .mul(&self.bi.phi.ap(d, 1))
            .mul(&self.bi.phi.tensor(&one));
        let rhs = self.bi.phi.ap(d, 2).mul(&self.bi.phi.ap(d, 0));
        rep.push(checks::elems_equal("q3", &lhs, &rhs));

        // (q4): counit kills Φ on every leg.
        let two = self.unit_n(2);
        let q4 = [0usize, 1, 2]
            .iter()
            .map(|&leg| self.bi.phi.ap(eps, leg))
            .all(|t| t == two);
        rep.push(AxiomResult::from_witness("q4", if q4 { None } else { Some(Default::default()) }));

        // Φ invertible (the stored inverse is exact on both sides).
        let three = self.unit_n(3);
        let inv_ok =
            self.bi.phi.mul(&self.bi.phi_inv) == three && self.bi.phi_inv.mul(&self.bi.phi) == three;
        rep.push(AxiomResult::from_witness(
            "Φ invertible",
            if inv_ok { None } else { Some(Default::default()) },
        ));
        rep
    }

    /// Quasi-Hopf axioms on top of the quasi-bialgebra suite: S an
    /// anti-automorphism, (q5), (q6), and the ε-normalizations.
    pub fn verify_quasi_hopf(&self) -> Report {
        let mut rep = self.verify_quasi_bialgebra();
        rep.subject = format!("quasi-Hopf axioms for {}", self.name);
        let h = self.carrier();
        let hh = [h.clone(), h.clone()];
        let d = &self.bi.delta;
        let s = &self.antipode;

        // S(hh') = S(h')S(h), S(1) = 1, S bijective.
        let s_mul = Hom::from_fn(&hh, &[h.clone()], |e| e.mul_adjacent(0).ap(s, 0));
        let mul_s_flip =
            Hom::from_fn(&hh, &[h.clone()], |e| e.ap(s, 0).ap(s, 1).permute(&[1, 0]).mul_adjacent(0));
        rep.push(checks::homs_equal("S anti-automorphism", &s_mul, &mul_s_flip));
        rep.push(checks::elems_equal("S unital", &self.unit_elem().ap(s, 0), &self.unit_elem()));
        let s_bij = self.antipode.compose(&self.antipode_inv) == Hom::identity(&[h.clone()])
            && self.antipode_inv.compose(&self.antipode) == Hom::identity(&[h.clone()]);
        rep.push(AxiomResult::from_witness(
            "S invertible",
            if s_bij { None } else { Some(Default::default()) },
        ));

        // (q5): S(h₁)αh₂ = ε(h)α and h₁βS(h₂) = ε(h)β.
        let lhs_a = Hom::from_fn(&[h.clone()], &[h.clone()], |e| {
            e.ap(d, 0).ap(s, 0).mul_const_left(&[1], &self.alpha).mul_adjacent(0)
        });
        let rhs_a = Hom::from_fn(&[h.clone()], &[h.clone()], |e| {
            self.alpha.scale(&self.eps(e))
        });
        let lhs_b = Hom::from_fn(&[h.clone()], &[h.clone()], |e| {
            e.ap(d, 0).ap(s, 1).mul_const_right(&[0], &self.beta).mul_adjacent(0)
        });
        let rhs_b = Hom::from_fn(&[h.clone()], &[h.clone()], |e| self.beta.scale(&self.eps(e)));
        rep.push(AxiomResult::from_witness(
            "q5",
            lhs_a
                .first_differing_input(&rhs_a)
                .or_else(|| lhs_b.first_differing_input(&rhs_b)),
        ));

        // (q6): X¹βS(X²)αX³ = 1 and S(x¹)αx²βS(x³) = 1.
        let q6_first = self
            .bi
            .phi
            .ap(s, 1)
            .mul_const_right(&[0], &self.beta)
            .mul_const_left(&[2], &self.alpha)
            .mul_adjacent(0)
            .mul_adjacent(0);
        let q6_second = self
            .bi
            .phi_inv
            .ap(s, 0)
            .ap(s, 2)
            .mul_const_left(&[1], &self.alpha)
            .mul_const_right(&[1], &self.beta)
            .mul_adjacent(0)
            .mul_adjacent(0);
        let one = self.unit_elem();
        rep.push(AxiomResult::from_witness(
            "q6",
            q6_first
                .data
                .first_difference(&one.data)
                .or_else(|| q6_second.data.first_difference(&one.data)),
        ));

        // Normalizations.
        let norm = self.eps(&self.alpha).is_one() && self.eps(&self.beta).is_one();
        rep.push(AxiomResult::from_witness(
            "ε(α)=ε(β)=1",
            if norm { None } else { Some(Default::default()) },
        ));
        let eps_s = Hom::from_fn(&[h.clone()], &[], |e| e.ap(s, 0).ap(&self.bi.counit, 0));
        let eps_plain = Hom::from_fn(&[h.clone()], &[], |e| e.ap(&self.bi.counit, 0));
        rep.push(checks::homs_equal("ε∘S=ε", &eps_s, &eps_plain));
        rep
    }

    // ------------------------------------------------------------------
    // Gauge twisting
    // ------------------------------------------------------------------

    /// The twisted quasi-Hopf algebra H_F: same multiplication, unit,
    /// counit and antipode; Δ_F = FΔ(·)F⁻¹, Φ_F per the pentagon-compatible
    /// formula, α_F = S(G¹)αG², β_F = F¹βS(F²).
    pub fn gauge_twist(&self, g: &GaugeTransformation) -> Result<HRef> {
        let h = self.carrier();
        let d = &self.bi.delta;
        let s = &self.antipode;
        let delta_f = Hom::from_fn(&[h.clone()], &[h.clone(), h.clone()], |e| {
            g.f.mul(&e.ap(d, 0)).mul(&g.f_inv)
        });
        let one = self.unit_elem();
        let phi_f = one
            .tensor(&g.f)
            .mul(&g.f.ap(d, 1))
            .mul(&self.bi.phi)
            .mul(&g.f_inv.ap(d, 0))
            .mul(&g.f_inv.tensor(&one));
        let phi_f_inv = g
            .f
            .tensor(&one)
            .mul(&g.f.ap(d, 0))
            .mul(&self.bi.phi_inv)
            .mul(&g.f_inv.ap(d, 1))
            .mul(&one.tensor(&g.f_inv));
        let alpha_f = g
            .f_inv
            .ap(s, 0)
            .mul_const_left(&[1], &self.alpha)
            .mul_adjacent(0);
        let beta_f = g
            .f
            .ap(s, 1)
            .mul_const_right(&[0], &self.beta)
            .mul_adjacent(0);
        QuasiHopf::new(
            format!("{}_F", self.name),
            h,
            delta_f,
            self.bi.counit.clone(),
            phi_f,
            Some(phi_f_inv),
            self.antipode.clone(),
            alpha_f,
            beta_f,
        )
    }

    // ------------------------------------------------------------------
    // Drinfeld twist
    // ------------------------------------------------------------------

    /// Computes the Drinfeld twist f together with its ingredients.
    pub fn drinfeld_twist(&self) -> &DrinfeldTwist {
        self.twist.get_or_init(|| {
            let d = &self.bi.delta;
            let s = &self.antipode;
            let one = self.unit_elem();

            // A¹⊗A²⊗A³⊗A⁴ = (Φ⊗1)(Δ⊗id⊗id)(Φ⁻¹)
            let a_quad = self.bi.phi.tensor(&one).mul(&self.bi.phi_inv.ap(d, 0));
            // B¹⊗B²⊗B³⊗B⁴ = (Δ⊗id⊗id)(Φ)(Φ⁻¹⊗1)
            let b_quad = self.bi.phi.ap(d, 0).mul(&self.bi.phi_inv.tensor(&one));

            // γ = S(A²)αA³ ⊗ S(A¹)αA⁴
            let gamma = a_quad
                .ap(s, 0)
                .ap(s, 1)
                .mul_const_left(&[2, 3], &self.alpha.tensor(&self.alpha))
                .mul_adjacent(1) // S(A²)·(αA³)
                .mul_into(0, 2, true) // S(A¹)·(αA⁴)
                ;
            // legs now: (S(A²)αA³, S(A¹)αA⁴)
            // δ = B¹βS(B⁴) ⊗ B²βS(B³)
            let delta_el = b_quad
                .ap(s, 2)
                .ap(s, 3)
                .mul_const_right(&[0, 1], &self.beta.tensor(&self.beta))
                .mul_into(3, 0, false) // (B¹β)·S(B⁴)
                .mul_adjacent(1) // (B²β)·S(B³)
                ;

            // f = (S⊗S)(Δ^cop(x¹)) γ Δ(x²βS(x³))
            let w = self
                .bi
                .phi_inv
                .ap(s, 2)
                .mul_const_right(&[1], &self.beta)
                .mul_adjacent(1) // (x¹, x²βS(x³))
                .ap(d, 1) // (x¹, w₁, w₂)
                .ap(d, 0) // (x¹₁, x¹₂, w₁, w₂)
                .ap(s, 0)
                .ap(s, 1)
                .permute(&[1, 0, 2, 3]); // (S(x¹₂), S(x¹₁), w₁, w₂)
            let f = w
                .mul_const_right(&[0, 1], &gamma) // (S(x¹₂)γ¹, S(x¹₁)γ², w₁, w₂)
                .mul_into(2, 0, false)
                .mul_into(2, 1, false);

            // f⁻¹ = Δ(S(x¹)αx²) δ (S⊗S)(Δ^cop(x³))
            let u = self
                .bi
                .phi_inv
                .ap(s, 0)
                .mul_const_left(&[1], &self.alpha)
                .mul_adjacent(0) // (S(x¹)αx², x³)
                .ap(d, 0) // (u₁, u₂, x³)
                .ap(d, 2) // (u₁, u₂, x³₁, x³₂)
                .ap(s, 2)
                .ap(s, 3)
                .permute(&[0, 1, 3, 2]); // (u₁, u₂, S(x³₂), S(x³₁))
            let f_inv = u
                .mul_const_right(&[0, 1], &delta_el) // (u₁δ¹, u₂δ², S(x³₂), S(x³₁))
                .mul_into(2, 0, false)
                .mul_into(2, 1, false);

            DrinfeldTwist { a_quad, b_quad, gamma, delta: delta_el, f, f_inv }
        })
    }

    /// Verifies every stored invariant of the Drinfeld twist data:
    /// f·f⁻¹ = f⁻¹·f = 1⊗1, (ca), (moref), (muchmoref), (relg).
    pub fn verify_drinfeld_twist(&self) -> Report {
        let mut rep = Report::new(format!("Drinfeld twist invariants for {}", self.name));
        let t = self.drinfeld_twist().clone();
        let h = self.carrier();
        let d = &self.bi.delta;
        let s = &self.antipode;
        let two = self.unit_n(2);

        rep.push(AxiomResult::from_witness(
            "f invertible",
            if t.f.mul(&t.f_inv) == two && t.f_inv.mul(&t.f) == two {
                None
            } else {
                Some(Default::default())
            },
        ));

        // (ca): fΔ(S(h))f⁻¹ = (S⊗S)(Δ^cop(h))
        let lhs = Hom::from_fn(&[h.clone()], &[h.clone(), h.clone()], |e| {
            t.f.mul(&e.ap(s, 0).ap(d, 0)).mul(&t.f_inv)
        });
        let rhs = Hom::from_fn(&[h.clone()], &[h.clone(), h.clone()], |e| {
            e.ap(d, 0).ap(s, 0).ap(s, 1).permute(&[1, 0])
        });
        rep.push(checks::homs_equal("ca", &lhs, &rhs));

        // (moref): fΔ(α) = γ and Δ(β)f⁻¹ = δ
        rep.push(AxiomResult::from_witness(
            "moref",
            t.f.mul(&self.alpha.ap(d, 0))
                .data
                .first_difference(&t.gamma.data)
                .or_else(|| {
                    self.beta.ap(d, 0).mul(&t.f_inv).data.first_difference(&t.delta.data)
                }),
        ));

        // (muchmoref): Φ_f = S(X³)⊗S(X²)⊗S(X¹)
        let gauge = GaugeTransformation { f: t.f.clone(), f_inv: t.f_inv.clone() };
        let one = self.unit_elem();
        let phi_f = one
            .tensor(&gauge.f)
            .mul(&gauge.f.ap(d, 1))
            .mul(&self.bi.phi)
            .mul(&gauge.f_inv.ap(d, 0))
            .mul(&gauge.f_inv.tensor(&one));
        let s_phi_rev = self.bi.phi.ap(s, 0).ap(s, 1).ap(s, 2).permute(&[2, 1, 0]);
        rep.push(checks::elems_equal("muchmoref", &phi_f, &s_phi_rev));

        // (relg): S⁻¹(αg²)g¹ = β
        let relg = t
            .f_inv
            .mul_const_left(&[1], &self.alpha)
            .ap(&self.antipode_inv, 1)
            .mul_into(0, 1, false);
        rep.push(checks::elems_equal("relg", &relg, &self.beta));
        rep
    }

    // ------------------------------------------------------------------
    // Canonical pairs
    // ------------------------------------------------------------------

    pub fn canonical_pairs(&self) -> &CanonicalPairs {
        self.pairs.get_or_init(|| {
            let s = &self.antipode;
            // p_R = x¹ ⊗ x²βS(x³)
            let p_r = self
                .bi
                .phi_inv
                .ap(s, 2)
                .mul_const_right(&[1], &self.beta)
                .mul_adjacent(1);
            // q_R = X¹ ⊗ S⁻¹(αX³)X²
            let q_r = self
                .bi
                .phi
                .mul_const_left(&[2], &self.alpha)
                .ap(&self.antipode_inv, 2)
                .mul_into(2, 1, true);
            CanonicalPairs { p_r, q_r }
        })
    }

    /// The relations (relatiep) and (relatieq) satisfied by p_R and q_R.
    pub fn verify_canonical_pairs(&self) -> Report {
        let mut rep = Report::new(format!("canonical pair relations for {}", self.name));
        let pairs = self.canonical_pairs().clone();
        let d = &self.bi.delta;
        let s = &self.antipode;

        // (relatiep): T¹p¹₁ ⊗ T²p¹₂ ⊗ T³p² = y¹ ⊗ y²₁p¹ ⊗ y²₂p²S(y³)
        let lhs = self
            .bi
            .phi
            .tensor(&pairs.p_r)
            .ap(d, 3) // T¹ T² T³ p¹₁ p¹₂ p²
            .permute(&[0, 3, 1, 4, 2, 5])
            .mul_adjacent(0)
            .mul_adjacent(1)
            .mul_adjacent(2);
        let rhs = self
            .bi
            .phi_inv
            .tensor(&pairs.p_r)
            .ap(d, 1) // y¹ y²₁ y²₂ y³ p¹ p²
            .ap(s, 3) // y¹ y²₁ y²₂ S(y³) p¹ p²
            .permute(&[0, 1, 4, 2, 5, 3]) // y¹ | y²₁ p¹ | y²₂ p² S(y³)
            .mul_adjacent(1)
            .mul_adjacent(2)
            .mul_adjacent(2);
        rep.push(checks::elems_equal("relatiep", &lhs, &rhs));

        // (relatieq): Y¹Z¹ ⊗ q¹Y²₁Z² ⊗ S(q²Y²₂Z³)Y³ = q¹₁ ⊗ q¹₂ ⊗ S(q²)
        let lhs = self
            .bi
            .phi
            .tensor(&self.bi.phi)
            .tensor(&pairs.q_r)
            .ap(d, 1) // Y¹ Y²₁ Y²₂ Y³ Z¹ Z² Z³ q¹ q²
            .permute(&[0, 4, 7, 1, 5, 8, 2, 6, 3]) // Y¹ Z¹ | q¹ Y²₁ Z² | q² Y²₂ Z³ Y³
            .mul_adjacent(0) // Y¹Z¹ | q¹ Y²₁ Z² | q² Y²₂ Z³ Y³
            .mul_adjacent(1)
            .mul_adjacent(1) // Y¹Z¹ | q¹Y²₁Z² | q² Y²₂ Z³ Y³
            .mul_adjacent(2)
            .mul_adjacent(2); // Y¹Z¹ | q¹Y²₁Z² | q²Y²₂Z³ | Y³
        let lhs = lhs.ap(s, 2).mul_adjacent(2);
        let rhs = pairs.q_r.ap(d, 0).ap(s, 2);
        rep.push(checks::elems_equal("relatieq", &lhs, &rhs));
        rep
    }
}

impl std::fmt::Debug for QuasiHopf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuasiHopf({}, dim {})", self.name, self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::FieldSpec;
    use crate::tensor::TensorBuilder;
    use smallvec::smallvec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// F = 1⊗1 − 2p₁⊗p₁ on H2: counital and self-inverse.
    pub(crate) fn h2_self_inverse_gauge(h: &QuasiHopf) -> GaugeTransformation {
        let legs = [h.carrier(), h.carrier()];
        let mut b = TensorBuilder::new(h.field(), vec![h.carrier().axis(), h.carrier().axis()]);
        for i in 0..2u16 {
            for j in 0..2u16 {
                let v = if i == 1 && j == 1 { h.field().from_i64(-1) } else { h.field().one() };
                b.add(smallvec![i, j], v);
            }
        }
        let f = Elem::from_tensor(&legs, b.finish());
        GaugeTransformation::new(h, f).unwrap()
    }

    #[test]
    fn drinfeld_twist_invariants_h2() {
        let h = catalog::h2(q()).unwrap();
        let rep = h.verify_drinfeld_twist();
        assert!(rep.all_pass(), "{rep}");
        let rep = h.verify_canonical_pairs();
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn drinfeld_twist_invariants_h8() {
        let h = catalog::h8(q()).unwrap();
        let t0 = std::time::Instant::now();
        let rep = h.verify_drinfeld_twist();
        assert!(rep.all_pass(), "{rep}");
        let rep = h.verify_canonical_pairs();
        assert!(rep.all_pass(), "{rep}");
        assert!(t0.elapsed().as_secs() < 10, "took {:?}", t0.elapsed());
    }

    #[test]
    fn drinfeld_twist_invariants_sweedler() {
        let h = catalog::sweedler4(q()).unwrap();
        let rep = h.verify_drinfeld_twist();
        assert!(rep.all_pass(), "{rep}");
        let rep = h.verify_canonical_pairs();
        assert!(rep.all_pass(), "{rep}");
    }

    fn same_quasi_hopf(a: &QuasiHopf, b: &QuasiHopf) -> bool {
        a.bi.delta == b.bi.delta
            && a.bi.phi == b.bi.phi
            && a.alpha == b.alpha
            && a.beta == b.beta
            && a.antipode == b.antipode
    }

    #[test]
    fn identity_gauge_twist_is_identity() {
        let h = catalog::h2(q()).unwrap();
        let hf = h.gauge_twist(&GaugeTransformation::identity(&h)).unwrap();
        assert!(same_quasi_hopf(&h, &hf));
    }

    #[test]
    fn self_inverse_gauge_twist_h2() {
        let h = catalog::h2(q()).unwrap();
        let g = h2_self_inverse_gauge(&h);
        assert_eq!(g.f, g.f_inv);
        let hf = h.gauge_twist(&g).unwrap();
        let rep = hf.verify_quasi_hopf();
        assert!(rep.all_pass(), "{rep}");
        // Twisting back by the pushed-forward inverse recovers H entrywise.
        let g_back = GaugeTransformation { f: g.f_inv.clone(), f_inv: g.f.clone() };
        let back = hf.gauge_twist(&g_back).unwrap();
        assert!(same_quasi_hopf(&h, &back));
    }

    #[test]
    fn non_counital_gauge_is_refused() {
        let h = catalog::h2(q()).unwrap();
        let legs = [h.carrier(), h.carrier()];
        let two = Elem::unit(&legs).scale(&q().from_i64(2));
        assert!(GaugeTransformation::new(&h, two).is_err());
        // Singular candidate: p₁⊗p₁ alone is not invertible.
        let mut b = TensorBuilder::new(q(), vec![h.carrier().axis(), h.carrier().axis()]);
        b.add(smallvec![1, 1], q().one());
        let f = Elem::from_tensor(&legs, b.finish());
        assert!(matches!(
            GaugeTransformation::new(&h, f),
            Err(crate::error::Error::Refused { .. }) | Err(crate::error::Error::NotInvertible(_))
        ));
    }

    #[test]
    fn h2_with_trivial_phi_still_passes() {
        // H2's algebra is commutative and cocommutative, so replacing Φ by
        // 1⊗1⊗1 (keeping Δ) still satisfies (q1)–(q6) with β = 1.
        let h = catalog::h2(q()).unwrap();
        let one3 = h.unit_n(3);
        let one = h.unit_elem();
        let trivial = QuasiHopf::new(
            "H2-trivial-phi",
            h.carrier(),
            h.bi.delta.clone(),
            h.bi.counit.clone(),
            one3.clone(),
            Some(one3),
            h.antipode.clone(),
            one.clone(),
            one,
        )
        .unwrap();
        let rep = trivial.verify_quasi_bialgebra();
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn non_cocycle_phi_fails_q3_with_witness() {
        let h = catalog::h2(q()).unwrap();
        // Φ with a 2 at (1,1,1): invertible and counital but not a 3-cocycle.
        let legs = [h.carrier(), h.carrier(), h.carrier()];
        let mut b = TensorBuilder::new(q(), legs.iter().map(|l| l.axis()).collect());
        for i in 0..2u16 {
            for j in 0..2u16 {
                for k in 0..2u16 {
                    let v = if (i, j, k) == (1, 1, 1) { q().from_i64(2) } else { q().one() };
                    b.add(smallvec![i, j, k], v);
                }
            }
        }
        let phi = Elem::from_tensor(&legs, b.finish());
        let bad = QuasiHopf::new(
            "H2-bad-phi",
            h.carrier(),
            h.bi.delta.clone(),
            h.bi.counit.clone(),
            phi,
            None,
            h.antipode.clone(),
            h.alpha.clone(),
            h.beta.clone(),
        )
        .unwrap();
        let rep = bad.verify_quasi_bialgebra();
        let q3 = rep.get("q3").unwrap();
        assert!(!q3.pass);
        assert!(q3.witness.is_some());
        for label in ["q1", "q2", "q4"] {
            assert!(rep.get(label).unwrap().pass, "{label} should still pass");
        }
    }

    #[test]
    fn z2_with_alpha_g_fails_q6() {
        // kZ2 with α := g: with Φ trivial the first (q6) identity evaluates
        // to βα = g ≠ 1.
        let h = catalog::k_z2(q()).unwrap();
        let g_elem = Elem::basis(&h.carrier(), 1);
        let bad = QuasiHopf::new(
            "kZ2-alpha-g",
            h.carrier(),
            h.bi.delta.clone(),
            h.bi.counit.clone(),
            h.bi.phi.clone(),
            Some(h.bi.phi_inv.clone()),
            h.antipode.clone(),
            g_elem,
            h.beta.clone(),
        )
        .unwrap();
        let rep = bad.verify_quasi_hopf();
        assert!(!rep.get("q6").unwrap().pass);
        assert!(rep.get("q5").unwrap().pass);
    }

    #[test]
    fn timing_axiom_suites() {
        let t0 = std::time::Instant::now();
        let h = catalog::h2(q()).unwrap();
        let rep = h.verify_quasi_hopf();
        assert!(rep.all_pass());
        assert!(t0.elapsed().as_millis() < 1000, "H2 suite took {:?}", t0.elapsed());

        let t0 = std::time::Instant::now();
        let h = catalog::h8(q()).unwrap();
        let rep = h.verify_quasi_hopf();
        assert!(rep.all_pass());
        assert!(t0.elapsed().as_secs() < 60, "H8 suite took {:?}", t0.elapsed());
    }
}
