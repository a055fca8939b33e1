//! Yetter–Drinfeld tensor structure and the (pre)braiding.

use crate::algebra::Hom;
use crate::quasi_hopf::HRef;

use super::CatAlgebra;

/// Diagonal left action on a pair of module carriers:
/// h·(m⊗n) = h₁·m ⊗ h₂·n, as a map [H, M, N] → [M, N].
pub fn diag_action_pair(m: &CatAlgebra, n: &CatAlgebra) -> Hom {
    let h = m.base.carrier();
    let delta = m.base.bi.delta.clone();
    let (am, an) = (m.act().clone(), n.act().clone());
    let src = [h, m.carrier.clone(), n.carrier.clone()];
    let tgt = [m.carrier.clone(), n.carrier.clone()];
    Hom::from_fn(&src, &tgt, move |e| {
        e.ap(&delta, 0) // h₁ h₂ m n
            .move_leg(1, 2) // h₁ m h₂ n
            .ap(&am, 0)
            .ap(&an, 1)
    })
}

/// The coaction on M⊗N in the Yetter–Drinfeld category:
/// λ(m⊗n) = X¹(x¹Y¹·m)₍₋₁₎x²(Y²·n)₍₋₁₎Y³ ⊗ X²·(x¹Y¹·m)₍₀₎ ⊗ X³x³·(Y²·n)₍₀₎
/// as a map [M, N] → [H, M, N].
pub fn yd_pair_coaction(m: &CatAlgebra, n: &CatAlgebra) -> Hom {
    let base: HRef = m.base.clone();
    let h = base.carrier();
    let phi = base.bi.phi.clone();
    let phi_inv = base.bi.phi_inv.clone();
    let (am, an) = (m.act().clone(), n.act().clone());
    let (lm, ln) = (m.lcoact().clone(), n.lcoact().clone());
    let src = [m.carrier.clone(), n.carrier.clone()];
    let tgt = [h, m.carrier.clone(), n.carrier.clone()];
    Hom::from_fn(&src, &tgt, move |e| {
        phi.tensor(&phi_inv) // X¹ X² X³ x¹ x² x³
            .tensor(&phi) // + Y¹ Y² Y³
            .tensor(e) // + m n
            .mul_into(6, 3, false) // X¹ X² X³ x¹Y¹ x² x³ Y² Y³ m n
            .move_leg(3, 7) // X¹ X² X³ x² x³ Y² Y³ x¹Y¹ m n
            .ap(&am, 7) // X¹ X² X³ x² x³ Y² Y³ u n      (u = x¹Y¹·m)
            .ap(&lm, 7) // X¹ X² X³ x² x³ Y² Y³ u₋₁ u₀ n
            .move_leg(5, 8) // X¹ X² X³ x² x³ Y³ u₋₁ u₀ Y² n
            .ap(&an, 8) // X¹ X² X³ x² x³ Y³ u₋₁ u₀ v     (v = Y²·n)
            .ap(&ln, 8) // X¹ X² X³ x² x³ Y³ u₋₁ u₀ v₋₁ v₀
            .mul_into(6, 0, false) // X¹u₋₁ X² X³ x² x³ Y³ u₀ v₋₁ v₀
            .mul_into(3, 0, false) // X¹u₋₁x² X² X³ x³ Y³ u₀ v₋₁ v₀
            .mul_into(6, 0, false) // X¹u₋₁x²v₋₁ X² X³ x³ Y³ u₀ v₀
            .mul_into(4, 0, false) // out₀ X² X³ x³ u₀ v₀
            .move_leg(1, 3) // out₀ X³ x³ X² u₀ v₀
            .ap(&am, 3) // out₀ X³ x³ X²u₀ v₀
            .mul_adjacent(1) // out₀ X³x³ X²u₀ v₀
            .move_leg(1, 2) // out₀ X²u₀ X³x³ v₀
            .ap(&an, 2) // out₀ X²u₀ X³x³·v₀
    })
}

/// The (pre)braiding c_{M,N}(m⊗n) = m₍₋₁₎·n ⊗ m₍₀₎ as [M, N] → [N, M].
/// M must carry the YD structure; N only needs the action.
pub fn braiding(m: &CatAlgebra, n: &CatAlgebra) -> Hom {
    let lm = m.lcoact().clone();
    let an = n.act().clone();
    let src = [m.carrier.clone(), n.carrier.clone()];
    let tgt = [n.carrier.clone(), m.carrier.clone()];
    Hom::from_fn(&src, &tgt, move |e| {
        e.ap(&lm, 0) // m₋₁ m₀ n
            .move_leg(2, 1) // m₋₁ n m₀
            .ap(&an, 0)
    })
}

/// c is a morphism of H-modules (a consequence of yd3); recorded as a check
/// since the braiding of a quasi-Hopf YD category is only a pre-braiding.
pub fn braiding_h_linear(m: &CatAlgebra, n: &CatAlgebra) -> bool {
    let c = braiding(m, n);
    let h = m.base.carrier();
    let src = [h.clone(), m.carrier.clone(), n.carrier.clone()];
    let act_pair_src = diag_action_pair(m, n);
    let act_pair_tgt = diag_action_pair(n, m);
    let lhs = Hom::from_fn(&src, &c.target, |e| e.ap(&act_pair_src, 0).ap(&c, 0));
    let rhs = Hom::from_fn(&src, &c.target, |e| e.ap(&c, 1).ap(&act_pair_tgt, 0));
    lhs.first_differing_input(&rhs).is_none()
}

/// Whether the braiding is invertible (informational: the category is only
/// pre-braided in general).
pub fn braiding_invertible(m: &CatAlgebra, n: &CatAlgebra) -> bool {
    braiding(m, n).is_bijective()
}
