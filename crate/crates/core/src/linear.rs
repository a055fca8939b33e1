//! Linear maps between tensor-product spaces, and exact linear solving.
//!
//! A [`LinearMap`] keeps its matrix as a [`Tensor`] whose axes are the target
//! axes followed by the source axes. Solving is sparse fraction-free-ish
//! Gauss–Jordan elimination with structural pivoting; everything is exact,
//! so "singular", "inconsistent" and "not unique" are certified outcomes,
//! not numerical judgements.

use std::collections::BTreeMap;

use rayon::prelude::*;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};
use crate::tensor::{Axis, Index, Tensor, TensorBuilder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source: Vec<Axis>,
    pub target: Vec<Axis>,
    /// Axes: target ++ source.
    pub matrix: Tensor,
}

impl LinearMap {
    pub fn new(source: Vec<Axis>, target: Vec<Axis>, matrix: Tensor) -> Self {
        debug_assert_eq!(matrix.rank(), source.len() + target.len());
        LinearMap { source, target, matrix }
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field
    }

    pub fn identity(field: FieldSpec, axes: Vec<Axis>) -> Self {
        let mut m_axes = axes.clone();
        m_axes.extend(axes.iter().cloned());
        let mut b = TensorBuilder::new(field, m_axes);
        let dims: Vec<usize> = axes.iter().map(|a| a.dim).collect();
        for idx in MultiIndexIter::new(&dims) {
            let mut full = idx.clone();
            full.extend_from_slice(&idx);
            b.add(full, field.one());
        }
        LinearMap { source: axes.clone(), target: axes, matrix: b.finish() }
    }

    pub fn source_dim(&self) -> usize {
        self.source.iter().map(|a| a.dim).product()
    }

    pub fn target_dim(&self) -> usize {
        self.target.iter().map(|a| a.dim).product()
    }

    /// Builds a map column-by-column: `f` receives each source basis
    /// multi-index and returns the image as a tensor over the target axes.
    /// Columns are evaluated in parallel; assembly order is fixed.
    pub fn from_fn<F>(source: Vec<Axis>, target: Vec<Axis>, field: FieldSpec, f: F) -> Self
    where
        F: Fn(&[u16]) -> Tensor + Sync,
    {
        let dims: Vec<usize> = source.iter().map(|a| a.dim).collect();
        let indices: Vec<Index> = MultiIndexIter::new(&dims).collect();
        let columns: Vec<(Index, Tensor)> =
            indices.into_par_iter().map(|idx| (idx.clone(), f(&idx))).collect();
        let mut m_axes = target.clone();
        m_axes.extend(source.iter().cloned());
        let mut b = TensorBuilder::new(field, m_axes);
        for (src_idx, col) in columns {
            debug_assert_eq!(col.rank(), target.len());
            for (tgt_idx, s) in col.iter() {
                let mut full = tgt_idx.clone();
                full.extend_from_slice(&src_idx);
                b.add(full, s.clone());
            }
        }
        LinearMap { source, target, matrix: b.finish() }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        debug_assert_eq!(
            self.source.iter().map(|a| a.dim).collect::<Vec<_>>(),
            other.target.iter().map(|a| a.dim).collect::<Vec<_>>(),
            "composition shape mismatch"
        );
        let nt = self.target.len();
        let ns = self.source.len();
        let pairs: Vec<(usize, usize)> = (0..ns).map(|i| (nt + i, i)).collect();
        let matrix = self
            .matrix
            .contract(&other.matrix, &pairs)
            .expect("composition dims checked above");
        LinearMap { source: other.source.clone(), target: self.target.clone(), matrix }
    }

    /// Parallel (tensor) product of maps.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let t = self.matrix.tensor(&other.matrix);
        // Current order: t1 s1 t2 s2 → want t1 t2 s1 s2.
        let (t1, s1, t2, s2) = (self.target.len(), self.source.len(), other.target.len(), other.source.len());
        let mut perm = Vec::with_capacity(t1 + s1 + t2 + s2);
        perm.extend(0..t1);
        perm.extend(t1 + s1..t1 + s1 + t2);
        perm.extend(t1..t1 + s1);
        perm.extend(t1 + s1 + t2..t1 + s1 + t2 + s2);
        let matrix = t.permute(&perm).expect("permutation computed from shapes");
        let mut source = self.source.clone();
        source.extend(other.source.iter().cloned());
        let mut target = self.target.clone();
        target.extend(other.target.iter().cloned());
        LinearMap { source, target, matrix }
    }

    /// Applies the map to axes `[at, at + source.len())` of `t`, splicing the
    /// target axes in at the same position.
    pub fn apply(&self, t: &Tensor, at: usize) -> Tensor {
        let ns = self.source.len();
        let nt = self.target.len();
        debug_assert!(at + ns <= t.rank());
        let pairs: Vec<(usize, usize)> = (0..ns).map(|i| (self.target.len() + i, at + i)).collect();
        let contracted = self.matrix.contract(t, &pairs).expect("apply dims");
        // Axes now: target ++ (t axes with [at..at+ns) removed); move target into place.
        let others = t.rank() - ns;
        let mut perm = Vec::with_capacity(nt + others);
        perm.extend(nt..nt + at); // leading kept axes of t
        perm.extend(0..nt); // the spliced target axes
        perm.extend(nt + at..nt + others); // trailing kept axes
        contracted.permute(&perm).expect("apply permutation")
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix),
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.sub(&other.matrix),
        }
    }

    /// Lexicographically first source tuple on which the maps differ.
    pub fn first_differing_input(&self, other: &LinearMap) -> Option<Index> {
        let diff = self.matrix.sub(&other.matrix);
        let nt = self.target.len();
        diff.iter().map(|(idx, _)| Index::from_slice(&idx[nt..])).min()
    }

    /// Flattened (rows, cols, sparse rows) view of the matrix.
    fn as_rows(&self) -> (usize, usize, Vec<BTreeMap<usize, Scalar>>) {
        let rows = self.target_dim();
        let cols = self.source_dim();
        let tgt_dims: Vec<usize> = self.target.iter().map(|a| a.dim).collect();
        let src_dims: Vec<usize> = self.source.iter().map(|a| a.dim).collect();
        let mut data = vec![BTreeMap::new(); rows];
        for (idx, s) in self.matrix.iter() {
            let r = flatten(&idx[..tgt_dims.len()], &tgt_dims);
            let c = flatten(&idx[tgt_dims.len()..], &src_dims);
            data[r].insert(c, s.clone());
        }
        (rows, cols, data)
    }

    pub fn rank(&self) -> usize {
        let (_, cols, rows) = self.as_rows();
        let mut elim = Eliminator::new(rows, Vec::new(), cols);
        elim.run();
        elim.pivots.len()
    }

    /// Exact solve of `self · x = rhs`; certifies inconsistency and
    /// non-uniqueness.
    pub fn solve(&self, rhs: &Tensor) -> Result<Tensor> {
        debug_assert_eq!(
            rhs.axes().iter().map(|a| a.dim).collect::<Vec<_>>(),
            self.target.iter().map(|a| a.dim).collect::<Vec<_>>()
        );
        let (rows, cols, data) = self.as_rows();
        let tgt_dims: Vec<usize> = self.target.iter().map(|a| a.dim).collect();
        let mut rhs_rows = vec![BTreeMap::new(); rows];
        for (idx, s) in rhs.iter() {
            rhs_rows[flatten(&idx, &tgt_dims)].insert(0usize, s.clone());
        }
        let mut elim = Eliminator::new(data, rhs_rows, cols);
        elim.run();
        if let Some(cert) = elim.inconsistent_row() {
            return Err(Error::NoSolution { certificate: cert });
        }
        if let Some(&c) = elim.free_columns.first() {
            return Err(Error::NotUnique { column: c });
        }
        let src_dims: Vec<usize> = self.source.iter().map(|a| a.dim).collect();
        let mut b = TensorBuilder::new(self.matrix.field, self.source.clone());
        for (col, row_i) in &elim.pivots {
            if let Some(v) = elim.rhs[*row_i].get(&0) {
                b.add(unflatten(*col, &src_dims), v.clone());
            }
        }
        Ok(b.finish())
    }

    /// Two-sided inverse; requires a square bijective map.
    pub fn invert(&self) -> Result<LinearMap> {
        let (rows, cols, data) = self.as_rows();
        if rows != cols {
            return Err(Error::NotInvertible(format!("non-square map {rows}×{cols}")));
        }
        let mut rhs = vec![BTreeMap::new(); rows];
        for (i, row) in rhs.iter_mut().enumerate() {
            row.insert(i, self.matrix.field.one());
        }
        let mut elim = Eliminator::new(data, rhs, cols);
        elim.run();
        if elim.pivots.len() != cols {
            return Err(Error::NotInvertible(format!(
                "rank {} map on dimension {cols}",
                elim.pivots.len()
            )));
        }
        let src_dims: Vec<usize> = self.source.iter().map(|a| a.dim).collect();
        let tgt_dims: Vec<usize> = self.target.iter().map(|a| a.dim).collect();
        let mut m_axes = self.source.clone();
        m_axes.extend(self.target.iter().cloned());
        let mut b = TensorBuilder::new(self.matrix.field, m_axes);
        for (col, row_i) in &elim.pivots {
            for (rhs_col, v) in &elim.rhs[*row_i] {
                let mut full = unflatten(*col, &src_dims);
                full.extend_from_slice(&unflatten(*rhs_col, &tgt_dims));
                b.add(full, v.clone());
            }
        }
        Ok(LinearMap { source: self.target.clone(), target: self.source.clone(), matrix: b.finish() })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

pub fn flatten(idx: &[u16], dims: &[usize]) -> usize {
    let mut acc = 0usize;
    for (i, d) in idx.iter().zip(dims) {
        acc = acc * d + *i as usize;
    }
    acc
}

pub fn unflatten(mut flat: usize, dims: &[usize]) -> Index {
    let mut idx: Index = SmallVec::with_capacity(dims.len());
    for &d in dims.iter().rev() {
        idx.push((flat % d) as u16);
        flat /= d;
    }
    idx.reverse();
    idx
}

/// Iterates all multi-indices of the given dims in lexicographic order.
pub struct MultiIndexIter {
    dims: Vec<usize>,
    next: Option<Index>,
}

impl MultiIndexIter {
    pub fn new(dims: &[usize]) -> Self {
        let start = if dims.iter().any(|&d| d == 0) {
            None
        } else {
            Some(dims.iter().map(|_| 0u16).collect())
        };
        MultiIndexIter { dims: dims.to_vec(), next: start }
    }
}

impl Iterator for MultiIndexIter {
    type Item = Index;

    fn next(&mut self) -> Option<Index> {
        let cur = self.next.clone()?;
        let mut succ = cur.clone();
        let mut k = self.dims.len();
        loop {
            if k == 0 {
                self.next = None;
                break;
            }
            k -= 1;
            succ[k] += 1;
            if (succ[k] as usize) < self.dims[k] {
                self.next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(cur)
    }
}

/// Sparse Gauss–Jordan over an exact field with structural pivoting
/// (fewest-nonzeros row first; ties by row index, for determinism).
struct Eliminator {
    rows: Vec<BTreeMap<usize, Scalar>>,
    rhs: Vec<BTreeMap<usize, Scalar>>,
    cols: usize,
    used: Vec<bool>,
    /// (column, row) pairs in elimination order.
    pivots: Vec<(usize, usize)>,
    free_columns: Vec<usize>,
}

impl Eliminator {
    fn new(rows: Vec<BTreeMap<usize, Scalar>>, rhs: Vec<BTreeMap<usize, Scalar>>, cols: usize) -> Self {
        let n = rows.len();
        let rhs = if rhs.is_empty() { vec![BTreeMap::new(); n] } else { rhs };
        Eliminator { rows, rhs, cols, used: vec![false; n], pivots: Vec::new(), free_columns: Vec::new() }
    }

    fn run(&mut self) {
        for col in 0..self.cols {
            let pivot = (0..self.rows.len())
                .filter(|&r| !self.used[r] && self.rows[r].contains_key(&col))
                .min_by_key(|&r| (self.rows[r].len(), r));
            let Some(p) = pivot else {
                self.free_columns.push(col);
                continue;
            };
            self.used[p] = true;
            self.pivots.push((col, p));
            let inv = self.rows[p][&col].inv().expect("pivot is nonzero");
            scale_row(&mut self.rows[p], &inv);
            scale_row(&mut self.rhs[p], &inv);
            let prow = self.rows[p].clone();
            let prhs = self.rhs[p].clone();
            for r in 0..self.rows.len() {
                if r == p {
                    continue;
                }
                if let Some(f) = self.rows[r].get(&col).cloned() {
                    axpy_row(&mut self.rows[r], &prow, &f);
                    axpy_row(&mut self.rhs[r], &prhs, &f);
                }
            }
        }
    }

    /// A row with empty left-hand side but nonzero right-hand side.
    fn inconsistent_row(&self) -> Option<String> {
        for (r, row) in self.rows.iter().enumerate() {
            if !self.used[r] && row.is_empty() && !self.rhs[r].is_empty() {
                return Some(format!("row {r} reduces to 0 = {:?}", self.rhs[r]));
            }
        }
        None
    }
}

fn scale_row(row: &mut BTreeMap<usize, Scalar>, c: &Scalar) {
    for v in row.values_mut() {
        *v = v.mul(c);
    }
}

/// row -= f · other
fn axpy_row(row: &mut BTreeMap<usize, Scalar>, other: &BTreeMap<usize, Scalar>, f: &Scalar) {
    for (c, v) in other {
        let delta = f.mul(v);
        match row.entry(*c) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let nv = e.get().sub(&delta);
                if nv.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = nv;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if !delta.is_zero() {
                    e.insert(delta.neg());
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::smallvec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn vec2(a: i64, b: i64) -> Tensor {
        let mut t = TensorBuilder::new(q(), vec![Axis::new("v", 2)]);
        t.add(smallvec![0], q().from_i64(a));
        t.add(smallvec![1], q().from_i64(b));
        t.finish()
    }

    fn map2(rows: [[i64; 2]; 2]) -> LinearMap {
        let mut b = TensorBuilder::new(q(), vec![Axis::new("v", 2), Axis::new("v", 2)]);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                b.add(smallvec![i as u16, j as u16], q().from_i64(*v));
            }
        }
        LinearMap::new(vec![Axis::new("v", 2)], vec![Axis::new("v", 2)], b.finish())
    }

    #[test]
    fn identity_solves_to_rhs() {
        let id = LinearMap::identity(q(), vec![Axis::new("v", 2)]);
        let rhs = vec2(3, -5);
        assert_eq!(id.solve(&rhs).unwrap(), rhs);
    }

    #[test]
    fn invert_and_compose() {
        let m = map2([[1, 1], [0, 2]]);
        let inv = m.invert().unwrap();
        let id = LinearMap::identity(q(), vec![Axis::new("v", 2)]);
        assert_eq!(m.compose(&inv), id);
        assert_eq!(inv.compose(&m), id);
    }

    #[test]
    fn rank_deficient_incompatible_rhs() {
        let m = map2([[1, 2], [2, 4]]);
        assert_eq!(m.rank(), 1);
        let err = m.solve(&vec2(1, 0)).unwrap_err();
        assert!(matches!(err, Error::NoSolution { .. }), "{err}");
        assert!(m.invert().is_err());
    }

    #[test]
    fn underdetermined_reports_free_column() {
        let m = map2([[1, 2], [2, 4]]);
        let err = m.solve(&vec2(1, 2)).unwrap_err();
        assert!(matches!(err, Error::NotUnique { column: 1 }), "{err}");
    }

    #[test]
    fn from_fn_matches_manual() {
        let swap = LinearMap::from_fn(
            vec![Axis::new("v", 2)],
            vec![Axis::new("v", 2)],
            q(),
            |idx| {
                let mut b = TensorBuilder::new(q(), vec![Axis::new("v", 2)]);
                b.add(smallvec![1 - idx[0]], q().one());
                b.finish()
            },
        );
        assert_eq!(swap, map2([[0, 1], [1, 0]]));
        assert_eq!(swap.compose(&swap), LinearMap::identity(q(), vec![Axis::new("v", 2)]));
    }

    #[test]
    fn apply_splices_target_axes() {
        let swap = map2([[0, 1], [1, 0]]);
        let t = vec2(1, 0).tensor(&vec2(0, 1)); // e0 ⊗ e1
        let r = swap.apply(&t, 1); // swap on second leg → e0 ⊗ e0
        assert_eq!(r, vec2(1, 0).tensor(&vec2(1, 0)));
    }

    #[test]
    fn multi_index_iter_is_lexicographic() {
        let v: Vec<Index> = MultiIndexIter::new(&[2, 3]).collect();
        assert_eq!(v.len(), 6);
        assert_eq!(v[0].as_slice(), &[0, 0]);
        assert_eq!(v[1].as_slice(), &[0, 1]);
        assert_eq!(v[5].as_slice(), &[1, 2]);
    }
}
