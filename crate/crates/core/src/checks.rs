//! Low-level exhaustive checks shared by every axiom suite.
//!
//! All witnesses are the lexicographically first failing basis tuple, and
//! parallel runs reduce with `min`, so results are identical regardless of
//! thread count.

use rayon::prelude::*;
use smallvec::SmallVec;

use crate::algebra::{Elem, Hom, Space};
use crate::report::AxiomResult;
use crate::scalar::Scalar;
use crate::tensor::Index;

/// Strict associativity of a carrier on all basis triples.
pub fn associativity_witness(a: &Space) -> Option<Index> {
    let dim = a.dim as u16;
    (0..dim)
        .into_par_iter()
        .filter_map(|i| {
            for j in 0..dim {
                let ij = a.row(i, j).to_vec();
                for k in 0..dim {
                    let lhs = mul_vec_basis(a, &ij, k);
                    let jk = a.row(j, k);
                    let rhs = mul_basis_vec(a, i, jk);
                    if lhs != rhs {
                        return Some(Index::from_slice(&[i, j, k]));
                    }
                }
            }
            None
        })
        .min()
}

/// `v · e_k` for a sparse element `v`.
pub fn mul_vec_basis(a: &Space, v: &[(u16, Scalar)], k: u16) -> Vec<(u16, Scalar)> {
    let mut acc: Vec<Scalar> = vec![a.field.zero(); a.dim];
    for (r, c) in v {
        for (out, sc) in a.row(*r, k) {
            acc[*out as usize] = acc[*out as usize].add(&c.mul(sc));
        }
    }
    collect_sparse(acc)
}

/// `e_i · v` for a sparse element `v`.
pub fn mul_basis_vec(a: &Space, i: u16, v: &[(u16, Scalar)]) -> Vec<(u16, Scalar)> {
    let mut acc: Vec<Scalar> = vec![a.field.zero(); a.dim];
    for (r, c) in v {
        for (out, sc) in a.row(i, *r) {
            acc[*out as usize] = acc[*out as usize].add(&c.mul(sc));
        }
    }
    collect_sparse(acc)
}

fn collect_sparse(acc: Vec<Scalar>) -> Vec<(u16, Scalar)> {
    acc.into_iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(k, s)| (k as u16, s))
        .collect()
}

/// Unit neutrality on every basis element.
pub fn unit_witness(a: &Space) -> Option<Index> {
    let space = [a.clone()];
    let one = Elem::unit(&space);
    (0..a.dim as u16)
        .into_par_iter()
        .filter_map(|i| {
            let e = Elem::basis(a, i as usize);
            if one.mul(&e) != e || e.mul(&one) != e {
                Some(Index::from_slice(&[i]))
            } else {
                None
            }
        })
        .min()
}

/// Equality of two linear maps, reported under `label`.
pub fn homs_equal(label: &str, lhs: &Hom, rhs: &Hom) -> AxiomResult {
    AxiomResult::from_witness(label, lhs.first_differing_input(rhs))
}

/// Equality of two elements, reported under `label`; the witness is the
/// first differing component index.
pub fn elems_equal(label: &str, lhs: &Elem, rhs: &Elem) -> AxiomResult {
    AxiomResult::from_witness(label, lhs.data.first_difference(&rhs.data))
}

/// Runs closures producing a witness tuple per first basis index in
/// parallel, reducing to the lexicographically first witness.
pub fn scan_first_index<F>(dim: usize, f: F) -> Option<Index>
where
    F: Fn(u16) -> Option<Index> + Sync + Send,
{
    (0..dim as u16).into_par_iter().filter_map(f).min()
}

/// Multiplicativity of a map between two carriers: `m(xy) = m(x)m(y)`.
pub fn multiplicative_witness(m: &Hom, src: &Space) -> Option<Index> {
    let dim = src.dim as u16;
    scan_first_index(src.dim, |i| {
        let mi = m.apply_all(&Elem::basis(src, i as usize));
        for j in 0..dim {
            let e = Elem::basis_multi(&[src.clone(), src.clone()], &[i, j]);
            let lhs = m.apply_all(&e.mul_adjacent(0));
            let mj = m.apply_all(&Elem::basis(src, j as usize));
            if lhs != mi.mul(&mj) {
                return Some(Index::from_slice(&[i, j]));
            }
        }
        None
    })
}

/// Unitality of a map between carriers.
pub fn unital_witness(m: &Hom, src: &Space, tgt: &Space) -> Option<Index> {
    let one_src = Elem::unit(&[src.clone()]);
    let one_tgt = Elem::unit(&[tgt.clone()]);
    if m.apply_all(&one_src) == one_tgt {
        None
    } else {
        Some(SmallVec::new())
    }
}
