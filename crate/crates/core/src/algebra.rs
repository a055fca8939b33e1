//! Algebras given by structure constants, elements of tensor products of
//! their carriers, and typed linear maps between such products.
//!
//! Everything the formulas in this crate manipulate is either an [`Elem`]
//! (an element of `A₁ ⊗ … ⊗ Aₖ`) or a [`Hom`] (a linear map between two such
//! products). Sweedler-style expressions become chains of a handful of
//! primitive operations: tensor, leg permutation, componentwise product,
//! multiplying two adjacent legs into one, and applying a structure map to
//! a block of legs.

use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::linear::{LinearMap, MultiIndexIter};
use crate::scalar::{FieldSpec, Scalar};
use crate::tensor::{Axis, Index, Tensor, TensorBuilder};

pub type Space = Arc<Algebra>;

/// A finite-dimensional algebra with unit, given by structure constants.
/// The carrier may be nonassociative; whether associativity is an axiom is
/// decided by the verification suite of whatever structure wraps it.
pub struct Algebra {
    pub name: Arc<str>,
    pub dim: usize,
    pub field: FieldSpec,
    /// Multiplication tensor, axes `[out, left, right]`.
    pub mul: Tensor,
    /// Unit element, one axis.
    pub unit: Tensor,
    /// For carriers built as flattened tensor products: the factor spaces.
    pub factors: Vec<Space>,
    /// Row index: `rows[i·dim + j]` is the sparse product `eᵢ·eⱼ`.
    rows: Vec<SmallVec<[(u16, Scalar); 2]>>,
}

impl Algebra {
    pub fn new(
        name: impl AsRef<str>,
        field: FieldSpec,
        mul: Tensor,
        unit: Tensor,
    ) -> Result<Space> {
        Self::with_factors(name, field, mul, unit, Vec::new())
    }

    pub fn with_factors(
        name: impl AsRef<str>,
        field: FieldSpec,
        mul: Tensor,
        unit: Tensor,
        factors: Vec<Space>,
    ) -> Result<Space> {
        let dim = unit.axes().first().map(|a| a.dim).ok_or_else(|| {
            Error::structural(format!("unit of `{}` must have exactly one axis", name.as_ref()))
        })?;
        let dims: Vec<usize> = mul.axes().iter().map(|a| a.dim).collect();
        if dims != [dim, dim, dim] {
            return Err(Error::structural(format!(
                "multiplication tensor of `{}` has shape {dims:?}, expected [{dim},{dim},{dim}]",
                name.as_ref()
            )));
        }
        if !factors.is_empty() {
            let prod: usize = factors.iter().map(|f| f.dim).product();
            if prod != dim {
                return Err(Error::structural(format!(
                    "factors of `{}` multiply to {prod}, carrier dim is {dim}",
                    name.as_ref()
                )));
            }
        }
        let mut rows = vec![SmallVec::new(); dim * dim];
        for (idx, s) in mul.iter() {
            rows[idx[1] as usize * dim + idx[2] as usize].push((idx[0], s.clone()));
        }
        for r in rows.iter_mut() {
            r.sort_by_key(|(k, _)| *k);
        }
        Ok(Arc::new(Algebra { name: Arc::from(name.as_ref()), dim, field, mul, unit, factors, rows }))
    }

    /// Constructs an algebra by evaluating a bilinear multiplication formula
    /// on every pair of basis elements of the flattened product of `legs`.
    /// `f` receives and returns elements over the factor legs.
    pub fn from_bilinear<F>(
        name: impl AsRef<str>,
        legs: &[Space],
        unit: &Elem,
        f: F,
    ) -> Result<Space>
    where
        F: Fn(&Elem, &Elem) -> Elem + Sync,
    {
        use rayon::prelude::*;
        let field = legs[0].field;
        let dims: Vec<usize> = legs.iter().map(|l| l.dim).collect();
        let dim: usize = dims.iter().product();
        let indices: Vec<Index> = MultiIndexIter::new(&dims).collect();
        let pairs: Vec<(usize, usize)> =
            (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).collect();
        let label: Arc<str> = Arc::from(name.as_ref());
        let results: Vec<(usize, usize, Tensor)> = pairs
            .into_par_iter()
            .map(|(i, j)| {
                let a = Elem::basis_multi(legs, &indices[i]);
                let b = Elem::basis_multi(legs, &indices[j]);
                let out = f(&a, &b);
                (i, j, out.data.group_axes(0, legs.len(), label.clone()))
            })
            .collect();
        let axis = Axis { label: label.clone(), dim };
        let mut mb = TensorBuilder::new(field, vec![axis.clone(), axis.clone(), axis.clone()]);
        for (i, j, out) in results {
            for (idx, s) in out.iter() {
                mb.add(smallvec::smallvec![idx[0], i as u16, j as u16], s.clone());
            }
        }
        let unit_t = unit.data.group_axes(0, legs.len(), label.clone());
        Algebra::with_factors(name, field, mb.finish(), unit_t, legs.to_vec())
    }

    pub fn axis(&self) -> Axis {
        Axis { label: self.name.clone(), dim: self.dim }
    }

    pub fn row(&self, i: u16, j: u16) -> &[(u16, Scalar)] {
        &self.rows[i as usize * self.dim + j as usize]
    }

    pub fn same_space(&self, other: &Algebra) -> bool {
        self.name == other.name && self.dim == other.dim
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name, self.dim)
    }
}

pub fn axes_of(legs: &[Space]) -> Vec<Axis> {
    legs.iter().map(|l| l.axis()).collect()
}

/// An element of the tensor product of the carrier spaces of `legs`.
#[derive(Clone)]
pub struct Elem {
    pub legs: Vec<Space>,
    pub data: Tensor,
}

impl Elem {
    pub fn zero(legs: &[Space]) -> Elem {
        let field = legs.first().map(|l| l.field).unwrap_or(FieldSpec::Rationals);
        Elem { legs: legs.to_vec(), data: Tensor::zero(field, axes_of(legs)) }
    }

    pub fn from_tensor(legs: &[Space], data: Tensor) -> Elem {
        debug_assert_eq!(data.rank(), legs.len());
        debug_assert!(legs.iter().zip(data.axes()).all(|(l, a)| l.dim == a.dim));
        Elem { legs: legs.to_vec(), data }
    }

    pub fn basis(leg: &Space, i: usize) -> Elem {
        Elem::basis_multi(std::slice::from_ref(leg), &[i as u16])
    }

    pub fn basis_multi(legs: &[Space], idx: &[u16]) -> Elem {
        let field = legs[0].field;
        let mut b = TensorBuilder::new(field, axes_of(legs));
        b.add(Index::from_slice(idx), field.one());
        Elem { legs: legs.to_vec(), data: b.finish() }
    }

    /// 1 ⊗ … ⊗ 1 across all legs.
    pub fn unit(legs: &[Space]) -> Elem {
        let field = legs[0].field;
        let mut out = Elem {
            legs: Vec::new(),
            data: Tensor::scalar(field.one()),
        };
        for l in legs {
            out = out.tensor(&Elem::from_tensor(std::slice::from_ref(l), l.unit.clone()));
        }
        out
    }

    pub fn scalar(field: FieldSpec, s: Scalar) -> Elem {
        let _ = field;
        Elem { legs: Vec::new(), data: Tensor::scalar(s) }
    }

    pub fn rank(&self) -> usize {
        self.legs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_zero()
    }

    pub fn add(&self, other: &Elem) -> Elem {
        Elem { legs: self.legs.clone(), data: self.data.add(&other.data) }
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        Elem { legs: self.legs.clone(), data: self.data.sub(&other.data) }
    }

    pub fn scale(&self, c: &Scalar) -> Elem {
        Elem { legs: self.legs.clone(), data: self.data.scale(c) }
    }

    pub fn tensor(&self, other: &Elem) -> Elem {
        let mut legs = self.legs.clone();
        legs.extend(other.legs.iter().cloned());
        Elem { legs, data: self.data.tensor(&other.data) }
    }

    pub fn permute(&self, perm: &[usize]) -> Elem {
        let legs = perm.iter().map(|&p| self.legs[p].clone()).collect();
        Elem { legs, data: self.data.permute(perm).expect("Elem::permute") }
    }

    /// Moves leg `from` so it ends up at position `to`, others keeping order.
    pub fn move_leg(&self, from: usize, to: usize) -> Elem {
        let n = self.legs.len();
        let mut order: Vec<usize> = (0..n).filter(|&k| k != from).collect();
        order.insert(to, from);
        self.permute(&order)
    }

    /// Componentwise product in the tensor-product algebra: every leg pair
    /// is multiplied in its own algebra.
    pub fn mul(&self, other: &Elem) -> Elem {
        debug_assert_eq!(self.legs.len(), other.legs.len());
        debug_assert!(self.legs.iter().zip(&other.legs).all(|(a, b)| a.same_space(b)));
        let n = self.legs.len();
        let mut b = TensorBuilder::new(self.data.field, axes_of(&self.legs));
        let mut stack: Vec<(Index, Scalar)> = Vec::new();
        for (i, s) in self.data.iter() {
            for (j, t) in other.data.iter() {
                let coeff = s.mul(t);
                if coeff.is_zero() {
                    continue;
                }
                // Expand per-leg structure constants, depth-first.
                stack.clear();
                stack.push((Index::new(), coeff));
                for k in 0..n {
                    let row = self.legs[k].row(i[k], j[k]);
                    if row.is_empty() {
                        stack.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(stack.len() * row.len());
                    for (idx, c) in stack.drain(..) {
                        for (out, sc) in row {
                            let mut nidx = idx.clone();
                            nidx.push(*out);
                            next.push((nidx, c.mul(sc)));
                        }
                    }
                    stack = next;
                }
                for (idx, c) in stack.drain(..) {
                    b.add(idx, c);
                }
            }
        }
        Elem { legs: self.legs.clone(), data: b.finish() }
    }

    /// Multiplies legs `at` and `at+1` (same algebra) into a single leg.
    pub fn mul_adjacent(&self, at: usize) -> Elem {
        debug_assert!(self.legs[at].same_space(&self.legs[at + 1]));
        let alg = &self.legs[at];
        let mut legs = self.legs.clone();
        legs.remove(at + 1);
        let mut b = TensorBuilder::new(self.data.field, axes_of(&legs));
        for (idx, s) in self.data.iter() {
            for (out, sc) in alg.row(idx[at], idx[at + 1]) {
                let mut nidx: Index = idx[..at].iter().copied().collect();
                nidx.push(*out);
                nidx.extend_from_slice(&idx[at + 2..]);
                b.add(nidx, s.mul(sc));
            }
        }
        Elem { legs, data: b.finish() }
    }

    /// Multiplies leg `from` into leg `to` from the left (`to` ← from·to) or
    /// the right (`to` ← to·from), removing `from`.
    pub fn mul_into(&self, from: usize, to: usize, from_left: bool) -> Elem {
        debug_assert_ne!(from, to);
        let moved = if from_left {
            // place `from` immediately before `to`
            let pos = if from < to { to - 1 } else { to };
            self.move_leg(from, pos)
        } else {
            let pos = if from < to { to } else { to + 1 };
            self.move_leg(from, pos)
        };
        let at = if from_left {
            if from < to {
                to - 1
            } else {
                to
            }
        } else if from < to {
            to - 1
        } else {
            to
        };
        moved.mul_adjacent(at)
    }

    /// Multiplies the legs of the constant `c` into the given legs of
    /// `self`, from the left (`target ← c·target`) or right. `targets[t]`
    /// receives leg `t` of `c`. The workhorse for word formulas like
    /// `X¹hS(x¹X²)αx²X³₁h'S(x³X³₂)`: constants are tensored in and folded
    /// leg by leg.
    pub fn mul_const(&self, targets: &[usize], c: &Elem, from_left: bool) -> Elem {
        debug_assert_eq!(targets.len(), c.legs.len());
        let n = self.legs.len();
        debug_assert!(targets.iter().all(|&t| t < n));
        let mut cur = self.tensor(c);
        for &t in targets {
            cur = cur.mul_into(n, t, from_left);
        }
        cur
    }

    pub fn mul_const_left(&self, targets: &[usize], c: &Elem) -> Elem {
        self.mul_const(targets, c, true)
    }

    pub fn mul_const_right(&self, targets: &[usize], c: &Elem) -> Elem {
        self.mul_const(targets, c, false)
    }

    /// Acts with the constant `c` ∈ H^{⊗k} on k legs of `self` through the
    /// given left actions: leg `targets[t].0` is hit by component `t` of `c`
    /// via the action `targets[t].1` (a map H⊗V → V).
    pub fn act_const_left(&self, targets: &[(usize, &Hom)], c: &Elem) -> Elem {
        debug_assert_eq!(targets.len(), c.legs.len());
        let k = c.legs.len();
        let mut cur = c.tensor(self);
        for i in (0..k).rev() {
            let (tgt, act) = targets[i];
            let tgt_pos = i + 1 + tgt;
            cur = cur.move_leg(i, tgt_pos - 1).ap(act, tgt_pos - 1);
        }
        cur
    }

    /// Right-handed version of [`Elem::act_const_left`]: actions V⊗H → V.
    pub fn act_const_right(&self, targets: &[(usize, &Hom)], c: &Elem) -> Elem {
        debug_assert_eq!(targets.len(), c.legs.len());
        let k = c.legs.len();
        let mut cur = c.tensor(self);
        for i in (0..k).rev() {
            let (tgt, act) = targets[i];
            let tgt_pos = i + 1 + tgt;
            cur = cur.move_leg(i, tgt_pos).ap(act, tgt_pos - 1);
        }
        cur
    }

    /// Applies a structure map to the contiguous legs starting at `at`.
    pub fn ap(&self, m: &Hom, at: usize) -> Elem {
        debug_assert!(
            m.source
                .iter()
                .zip(&self.legs[at..at + m.source.len()])
                .all(|(a, b)| a.same_space(b)),
            "Hom source mismatch applying {:?} at {at} to {:?}",
            m.source.iter().map(|l| l.name.clone()).collect::<Vec<_>>(),
            self.legs.iter().map(|l| l.name.clone()).collect::<Vec<_>>()
        );
        let data = m.lin.apply(&self.data, at);
        let mut legs: Vec<Space> = self.legs[..at].to_vec();
        legs.extend(m.target.iter().cloned());
        legs.extend(self.legs[at + m.source.len()..].iter().cloned());
        Elem { legs, data }
    }

    /// Splits the flattened product leg `at` back into its factor legs.
    pub fn split_leg(&self, at: usize) -> Elem {
        let factors = self.legs[at].factors.clone();
        assert!(!factors.is_empty(), "split_leg on atomic algebra {}", self.legs[at].name);
        let data = self.data.split_axis(at, &axes_of(&factors));
        let mut legs: Vec<Space> = self.legs[..at].to_vec();
        legs.extend(factors);
        legs.extend(self.legs[at + 1..].iter().cloned());
        Elem { legs, data }
    }

    /// Flattens legs `[at, at+len)` into the given product algebra's carrier.
    pub fn group_legs(&self, at: usize, len: usize, product: &Space) -> Elem {
        debug_assert_eq!(product.factors.len(), len);
        debug_assert!(product
            .factors
            .iter()
            .zip(&self.legs[at..at + len])
            .all(|(a, b)| a.same_space(b)));
        let data = self.data.group_axes(at, len, product.name.clone());
        let mut legs: Vec<Space> = self.legs[..at].to_vec();
        legs.push(product.clone());
        legs.extend(self.legs[at + len..].iter().cloned());
        Elem { legs, data }
    }

    /// Inverse inside the (associative) tensor-product algebra of the legs,
    /// by exact linear solve against the left-regular representation.
    pub fn algebra_inverse(&self) -> Result<Elem> {
        let legs = self.legs.clone();
        let left_mul = Hom::from_fn(&legs, &legs, |b| self.mul(b));
        let unit = Elem::unit(&legs);
        let inv_data = left_mul.lin.solve(&unit.data).map_err(|e| match e {
            Error::NoSolution { .. } | Error::NotUnique { .. } => Error::NotInvertible(format!(
                "singular left-regular representation in {}",
                legs.iter().map(|l| l.name.to_string()).collect::<Vec<_>>().join("⊗")
            )),
            other => other,
        })?;
        let inv = Elem::from_tensor(&legs, inv_data);
        if inv.mul(self) != unit {
            return Err(Error::NotInvertible("left inverse is not a right inverse".into()));
        }
        Ok(inv)
    }
}

impl PartialEq for Elem {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl Eq for Elem {}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Elem[{}] {:?}",
            self.legs.iter().map(|l| l.name.to_string()).collect::<Vec<_>>().join("⊗"),
            self.data
        )
    }
}

/// A linear map between tensor products of algebra carriers.
#[derive(Clone)]
pub struct Hom {
    pub source: Vec<Space>,
    pub target: Vec<Space>,
    pub lin: LinearMap,
}

impl Hom {
    pub fn new(source: Vec<Space>, target: Vec<Space>, lin: LinearMap) -> Self {
        Hom { source, target, lin }
    }

    pub fn identity(spaces: &[Space]) -> Hom {
        let field = spaces[0].field;
        Hom {
            source: spaces.to_vec(),
            target: spaces.to_vec(),
            lin: LinearMap::identity(field, axes_of(spaces)),
        }
    }

    /// Builds the map by evaluating `f` on every basis element of the source.
    pub fn from_fn<F>(source: &[Space], target: &[Space], f: F) -> Hom
    where
        F: Fn(&Elem) -> Elem + Sync,
    {
        let field = source.first().map(|l| l.field).unwrap_or_else(|| target[0].field);
        let src = source.to_vec();
        let lin = LinearMap::from_fn(axes_of(source), axes_of(target), field, |idx| {
            let e = Elem::basis_multi(&src, idx);
            let out = f(&e);
            out.data
        });
        Hom { source: source.to_vec(), target: target.to_vec(), lin }
    }

    /// The counit-style map induced by a rank-1 functional is not needed
    /// generically; this builds a constant map `k → target` from an element.
    pub fn constant(target_elem: &Elem) -> Hom {
        Hom {
            source: Vec::new(),
            target: target_elem.legs.clone(),
            lin: LinearMap::new(Vec::new(), axes_of(&target_elem.legs), target_elem.data.clone()),
        }
    }

    pub fn compose(&self, other: &Hom) -> Hom {
        debug_assert!(self
            .source
            .iter()
            .zip(&other.target)
            .all(|(a, b)| a.same_space(b)));
        Hom {
            source: other.source.clone(),
            target: self.target.clone(),
            lin: self.lin.compose(&other.lin),
        }
    }

    pub fn tensor(&self, other: &Hom) -> Hom {
        let mut source = self.source.clone();
        source.extend(other.source.iter().cloned());
        let mut target = self.target.clone();
        target.extend(other.target.iter().cloned());
        Hom { source, target, lin: self.lin.tensor(&other.lin) }
    }

    pub fn apply(&self, e: &Elem, at: usize) -> Elem {
        e.ap(self, at)
    }

    pub fn apply_all(&self, e: &Elem) -> Elem {
        debug_assert_eq!(e.legs.len(), self.source.len());
        e.ap(self, 0)
    }

    pub fn invert(&self) -> Result<Hom> {
        Ok(Hom { source: self.target.clone(), target: self.source.clone(), lin: self.lin.invert()? })
    }

    pub fn rank(&self) -> usize {
        self.lin.rank()
    }

    pub fn sub(&self, other: &Hom) -> Hom {
        Hom { source: self.source.clone(), target: self.target.clone(), lin: self.lin.sub(&other.lin) }
    }

    pub fn is_zero(&self) -> bool {
        self.lin.is_zero()
    }

    pub fn first_differing_input(&self, other: &Hom) -> Option<Index> {
        self.lin.first_differing_input(&other.lin)
    }

    pub fn is_bijective(&self) -> bool {
        self.lin.source_dim() == self.lin.target_dim() && self.lin.rank() == self.lin.source_dim()
    }
}

impl PartialEq for Hom {
    fn eq(&self, other: &Self) -> bool {
        self.lin == other.lin
    }
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hom[{} → {}]",
            self.source.iter().map(|l| l.name.to_string()).collect::<Vec<_>>().join("⊗"),
            self.target.iter().map(|l| l.name.to_string()).collect::<Vec<_>>().join("⊗")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// Group algebra of ℤ₂: basis {1, g}, g² = 1.
    pub fn z2_group_algebra() -> Space {
        let ax = Axis::new("kZ2", 2);
        let mut mb = TensorBuilder::new(q(), vec![ax.clone(), ax.clone(), ax.clone()]);
        for i in 0..2u16 {
            for j in 0..2u16 {
                mb.add(smallvec![i ^ j, i, j], q().one());
            }
        }
        let mut ub = TensorBuilder::new(q(), vec![ax]);
        ub.add(smallvec![0], q().one());
        Algebra::new("kZ2", q(), mb.finish(), ub.finish()).unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let h = z2_group_algebra();
        let legs = vec![h.clone(), h.clone()];
        let one = Elem::unit(&legs);
        let g_g = Elem::basis_multi(&legs, &[1, 1]);
        assert_eq!(one.mul(&g_g), g_g);
        assert_eq!(g_g.mul(&one), g_g);
        assert_eq!(g_g.mul(&g_g), one);
    }

    #[test]
    fn mul_adjacent_matches_componentwise() {
        let h = z2_group_algebra();
        let legs = vec![h.clone(), h.clone()];
        let e = Elem::basis_multi(&legs, &[1, 1]);
        let m = e.mul_adjacent(0);
        assert_eq!(m, Elem::basis(&h, 0));
    }

    #[test]
    fn inverse_in_group_algebra() {
        let h = z2_group_algebra();
        // (1+g)/2 is idempotent hence not invertible; 1/2·(1 - g) + 1 is invertible.
        let half = q().parse_scalar("1/2").unwrap();
        let idem = Elem::basis(&h, 0).add(&Elem::basis(&h, 1)).scale(&half);
        assert!(idem.algebra_inverse().is_err());
        let g = Elem::basis(&h, 1);
        let inv = g.algebra_inverse().unwrap();
        assert_eq!(inv, g);
        let one = Elem::unit(std::slice::from_ref(&h));
        assert_eq!(one.algebra_inverse().unwrap(), one);
        assert!(Elem::zero(std::slice::from_ref(&h)).algebra_inverse().is_err());
    }

    #[test]
    fn hom_from_fn_and_compose() {
        let h = z2_group_algebra();
        let legs = [h.clone()];
        let swap_basis = Hom::from_fn(&legs, &legs, |e| {
            // linear extension of 1 ↔ g
            let mut out = Elem::zero(&legs);
            for (idx, s) in e.data.iter() {
                out = out.add(&Elem::basis(&h, 1 - idx[0] as usize).scale(s));
            }
            out
        });
        let id = Hom::identity(&legs);
        assert_eq!(swap_basis.compose(&swap_basis), id);
        assert!(swap_basis.is_bijective());
    }

    #[test]
    fn move_leg_and_mul_into() {
        let h = z2_group_algebra();
        let legs = vec![h.clone(), h.clone(), h.clone()];
        let e = Elem::basis_multi(&legs, &[1, 0, 1]);
        let moved = e.move_leg(2, 0);
        assert_eq!(moved.data.get(&[1, 1, 0]).cloned(), Some(q().one()));
        // multiply leg 2 into leg 0 from the left: g·g = 1 on leg 0
        let m = e.mul_into(2, 0, true);
        assert_eq!(m, Elem::basis_multi(&[h.clone(), h.clone()], &[0, 0]));
    }
}
