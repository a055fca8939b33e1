//! Sparse multi-index tensors over an exact field.
//!
//! A [`Tensor`] is a multi-index array with labeled axes, stored in canonical
//! sparse form (no explicit zeros) with a dense fallback once a quarter of
//! the slots are occupied. It is the carrier for everything in this crate:
//! elements of H^{⊗n}, structure constants, linear maps, axiom witnesses.
//!
//! Axis labels are purely diagnostic: contraction requires matching
//! dimensions but not labels, and logs a warning on a label mismatch, which
//! is a cheap way to catch leg-ordering mistakes in long product formulas.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Multi-index into a tensor. Axis dimensions stay small (≤ a few thousand).
pub type Index = SmallVec<[u16; 6]>;

/// One labeled axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    pub label: Arc<str>,
    pub dim: usize,
}

impl Axis {
    pub fn new(label: impl AsRef<str>, dim: usize) -> Self {
        Axis { label: Arc::from(label.as_ref()), dim }
    }
}

/// Above this fill ratio (and below the slot cap) storage switches to dense.
const DENSE_FILL_NUM: usize = 1;
const DENSE_FILL_DEN: usize = 4;
const DENSE_SLOT_CAP: usize = 1 << 21;

#[derive(Clone)]
enum Storage {
    Sparse(HashMap<Index, Scalar>),
    /// Row-major; zeros stored explicitly, skipped on iteration.
    Dense(Vec<Scalar>),
}

#[derive(Clone)]
pub struct Tensor {
    pub field: FieldSpec,
    axes: Vec<Axis>,
    storage: Storage,
}

impl Tensor {
    pub fn zero(field: FieldSpec, axes: Vec<Axis>) -> Self {
        Tensor { field, axes, storage: Storage::Sparse(HashMap::new()) }
    }

    /// Rank-0 tensor holding a single scalar.
    pub fn scalar(value: Scalar) -> Self {
        let mut b = TensorBuilder::new(value.field(), Vec::new());
        b.add(Index::new(), value);
        b.finish()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn rank(&self) -> usize {
        self.axes.len()
    }

    pub fn total_slots(&self) -> usize {
        self.axes.iter().map(|a| a.dim).product()
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Sparse(m) => m.len(),
            Storage::Dense(v) => v.iter().filter(|s| !s.is_zero()).count(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Sparse(m) => m.is_empty(),
            Storage::Dense(v) => v.iter().all(|s| s.is_zero()),
        }
    }

    fn strides(&self) -> SmallVec<[usize; 6]> {
        let mut s: SmallVec<[usize; 6]> = SmallVec::with_capacity(self.axes.len());
        let mut acc = 1usize;
        for a in self.axes.iter().rev() {
            s.push(acc);
            acc *= a.dim;
        }
        s.reverse();
        s
    }

    fn offset(&self, idx: &[u16]) -> usize {
        let strides = self.strides();
        idx.iter().zip(strides.iter()).map(|(&i, &s)| i as usize * s).sum()
    }

    pub fn get(&self, idx: &[u16]) -> Option<&Scalar> {
        debug_assert_eq!(idx.len(), self.axes.len());
        match &self.storage {
            Storage::Sparse(m) => m.get(idx),
            Storage::Dense(v) => {
                let s = &v[self.offset(idx)];
                if s.is_zero() {
                    None
                } else {
                    Some(s)
                }
            }
        }
    }

    /// Iterates nonzero entries in unspecified order.
    pub fn iter(&self) -> TensorIter<'_> {
        match &self.storage {
            Storage::Sparse(m) => TensorIter::Sparse(m.iter()),
            Storage::Dense(v) => {
                TensorIter::Dense { values: v, pos: 0, dims: self.axes.iter().map(|a| a.dim).collect() }
            }
        }
    }

    /// Nonzero entries sorted lexicographically by index — the canonical
    /// order used by serialization and witness selection.
    pub fn sorted_entries(&self) -> Vec<(Index, Scalar)> {
        let mut v: Vec<(Index, Scalar)> = self.iter().map(|(i, s)| (i, s.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.field, self.axes.clone());
        }
        let mut b = TensorBuilder::new(self.field, self.axes.clone());
        for (idx, s) in self.iter() {
            b.add(idx, s.mul(c));
        }
        b.finish()
    }

    pub fn neg(&self) -> Tensor {
        self.scale(&self.field.from_i64(-1))
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims(), other.dims(), "adding tensors of different shape");
        let mut b = TensorBuilder::new(self.field, self.axes.clone());
        for (idx, s) in self.iter() {
            b.add(idx, s.clone());
        }
        for (idx, s) in other.iter() {
            b.add(idx, s.clone());
        }
        b.finish()
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.neg())
    }

    fn dims(&self) -> SmallVec<[usize; 6]> {
        self.axes.iter().map(|a| a.dim).collect()
    }

    /// Tensor (outer) product; axes of `self` then axes of `other`.
    pub fn tensor(&self, other: &Tensor) -> Tensor {
        let mut axes = self.axes.clone();
        axes.extend(other.axes.iter().cloned());
        let mut b = TensorBuilder::new(self.field, axes);
        for (i, s) in self.iter() {
            for (j, t) in other.iter() {
                let mut idx = i.clone();
                idx.extend_from_slice(&j);
                b.add(idx, s.mul(t));
            }
        }
        b.finish()
    }

    /// Relocates axes: output axis `j` is input axis `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor> {
        if perm.len() != self.axes.len() {
            return Err(Error::structural(format!(
                "permutation of length {} applied to rank-{} tensor",
                perm.len(),
                self.axes.len()
            )));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::structural(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let axes: Vec<Axis> = perm.iter().map(|&p| self.axes[p].clone()).collect();
        let mut b = TensorBuilder::new(self.field, axes);
        for (idx, s) in self.iter() {
            let new_idx: Index = perm.iter().map(|&p| idx[p]).collect();
            b.add(new_idx, s.clone());
        }
        Ok(b.finish())
    }

    /// Contracts paired axes: `pairs` lists `(axis of self, axis of other)`.
    /// Result axes are the unpaired axes of `self` followed by those of
    /// `other`, in order.
    pub fn contract(&self, other: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor> {
        for &(i, j) in pairs {
            if i >= self.axes.len() || j >= other.axes.len() {
                return Err(Error::structural(format!(
                    "contraction pair ({i},{j}) out of range for ranks {} and {}",
                    self.axes.len(),
                    other.axes.len()
                )));
            }
            let (a, b) = (&self.axes[i], &other.axes[j]);
            if a.dim != b.dim {
                return Err(Error::AxisMismatch {
                    left: a.label.to_string(),
                    left_dim: a.dim,
                    right: b.label.to_string(),
                    right_dim: b.dim,
                });
            }
            if a.label != b.label {
                log::warn!(
                    "contracting axes with different labels: `{}` against `{}`",
                    a.label,
                    b.label
                );
            }
        }
        let left_paired: Vec<usize> = pairs.iter().map(|&(i, _)| i).collect();
        let right_paired: Vec<usize> = pairs.iter().map(|&(_, j)| j).collect();
        let left_keep: Vec<usize> =
            (0..self.axes.len()).filter(|i| !left_paired.contains(i)).collect();
        let right_keep: Vec<usize> =
            (0..other.axes.len()).filter(|j| !right_paired.contains(j)).collect();

        let mut axes: Vec<Axis> = left_keep.iter().map(|&i| self.axes[i].clone()).collect();
        axes.extend(right_keep.iter().map(|&j| other.axes[j].clone()));

        // Hash-join on the paired sub-index.
        let mut groups: HashMap<Index, Vec<(Index, &Scalar)>> = HashMap::new();
        for (idx, s) in other.iter() {
            let key: Index = right_paired.iter().map(|&j| idx[j]).collect();
            let keep: Index = right_keep.iter().map(|&j| idx[j]).collect();
            groups.entry(key).or_default().push((keep, s));
        }
        let mut b = TensorBuilder::new(self.field, axes);
        for (idx, s) in self.iter() {
            let key: Index = left_paired.iter().map(|&i| idx[i]).collect();
            if let Some(matches) = groups.get(&key) {
                let keep: Index = left_keep.iter().map(|&i| idx[i]).collect();
                for (rkeep, t) in matches {
                    let mut full = keep.clone();
                    full.extend_from_slice(rkeep);
                    b.add(full, s.mul(t));
                }
            }
        }
        Ok(b.finish())
    }

    /// Flattens axes `[start, start+len)` into a single axis (row-major).
    pub fn group_axes(&self, start: usize, len: usize, label: impl AsRef<str>) -> Tensor {
        assert!(start + len <= self.axes.len());
        let grouped_dim: usize = self.axes[start..start + len].iter().map(|a| a.dim).product();
        let mut axes: Vec<Axis> = self.axes[..start].to_vec();
        axes.push(Axis::new(label, grouped_dim));
        axes.extend(self.axes[start + len..].iter().cloned());
        let mut b = TensorBuilder::new(self.field, axes);
        for (idx, s) in self.iter() {
            let mut flat = 0usize;
            for (k, a) in self.axes[start..start + len].iter().enumerate() {
                flat = flat * a.dim + idx[start + k] as usize;
            }
            let mut new_idx: Index = idx[..start].iter().copied().collect();
            new_idx.push(flat as u16);
            new_idx.extend_from_slice(&idx[start + len..]);
            b.add(new_idx, s.clone());
        }
        b.finish()
    }

    /// Splits axis `at` into the given axes (row-major); inverse of
    /// [`Tensor::group_axes`].
    pub fn split_axis(&self, at: usize, parts: &[Axis]) -> Tensor {
        let total: usize = parts.iter().map(|a| a.dim).product();
        assert_eq!(total, self.axes[at].dim, "split shape mismatch");
        let mut axes: Vec<Axis> = self.axes[..at].to_vec();
        axes.extend(parts.iter().cloned());
        axes.extend(self.axes[at + 1..].iter().cloned());
        let mut b = TensorBuilder::new(self.field, axes);
        for (idx, s) in self.iter() {
            let mut rem = idx[at] as usize;
            let mut split: SmallVec<[u16; 6]> = SmallVec::with_capacity(parts.len());
            for a in parts.iter().rev() {
                split.push((rem % a.dim) as u16);
                rem /= a.dim;
            }
            split.reverse();
            let mut new_idx: Index = idx[..at].iter().copied().collect();
            new_idx.extend_from_slice(&split);
            new_idx.extend_from_slice(&idx[at + 1..]);
            b.add(new_idx, s.clone());
        }
        b.finish()
    }

    /// The single entry of a rank-0 tensor.
    pub fn as_scalar(&self) -> Scalar {
        assert!(self.axes.is_empty(), "as_scalar on rank-{} tensor", self.axes.len());
        self.get(&[]).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Lexicographically first index where the two tensors differ.
    pub fn first_difference(&self, other: &Tensor) -> Option<Index> {
        let diff = self.sub(other);
        diff.iter().map(|(i, _)| i).min()
    }

    pub fn relabel(&self, labels: &[&str]) -> Tensor {
        assert_eq!(labels.len(), self.axes.len());
        let mut t = self.clone();
        for (a, l) in t.axes.iter_mut().zip(labels) {
            a.label = Arc::from(*l);
        }
        t
    }
}

impl PartialEq for Tensor {
    fn eq(&self, other: &Self) -> bool {
        if self.dims() != other.dims() {
            return false;
        }
        if self.nnz() != other.nnz() {
            return false;
        }
        self.iter().all(|(idx, s)| other.get(&idx) == Some(s))
    }
}

impl Eq for Tensor {}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor[")?;
        for (k, a) in self.axes.iter().enumerate() {
            if k > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{}({})", a.label, a.dim)?;
        }
        write!(f, "]{{")?;
        for (n, (idx, s)) in self.sorted_entries().into_iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            if n > 16 {
                write!(f, "…")?;
                break;
            }
            write!(f, "{idx:?}: {s}")?;
        }
        write!(f, "}}")
    }
}

pub enum TensorIter<'a> {
    Sparse(std::collections::hash_map::Iter<'a, Index, Scalar>),
    Dense { values: &'a [Scalar], pos: usize, dims: SmallVec<[usize; 6]> },
}

impl<'a> Iterator for TensorIter<'a> {
    type Item = (Index, &'a Scalar);

    fn next(&mut self) -> Option<Self::Item> {
        match self {
            TensorIter::Sparse(it) => it.next().map(|(i, s)| (i.clone(), s)),
            TensorIter::Dense { values, pos, dims } => {
                while *pos < values.len() {
                    let p = *pos;
                    *pos += 1;
                    if !values[p].is_zero() {
                        let mut idx: Index = SmallVec::with_capacity(dims.len());
                        let mut rem = p;
                        for &d in dims.iter().rev() {
                            idx.push((rem % d) as u16);
                            rem /= d;
                        }
                        idx.reverse();
                        return Some((idx, &values[p]));
                    }
                }
                None
            }
        }
    }
}

/// Accumulating constructor; sums repeated indices and drops zeros, then
/// picks sparse or dense storage by fill ratio.
pub struct TensorBuilder {
    field: FieldSpec,
    axes: Vec<Axis>,
    map: HashMap<Index, Scalar>,
}

impl TensorBuilder {
    pub fn new(field: FieldSpec, axes: Vec<Axis>) -> Self {
        TensorBuilder { field, axes, map: HashMap::new() }
    }

    pub fn add(&mut self, idx: Index, s: Scalar) {
        if s.is_zero() {
            return;
        }
        debug_assert_eq!(idx.len(), self.axes.len());
        debug_assert!(idx.iter().zip(&self.axes).all(|(&i, a)| (i as usize) < a.dim));
        match self.map.entry(idx) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&s);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(s);
            }
        }
    }

    pub fn finish(self) -> Tensor {
        let total: usize = self.axes.iter().map(|a| a.dim).product();
        let nnz = self.map.len();
        if total <= DENSE_SLOT_CAP && nnz * DENSE_FILL_DEN > total * DENSE_FILL_NUM && !self.axes.is_empty()
        {
            let mut t = Tensor { field: self.field, axes: self.axes, storage: Storage::Dense(Vec::new()) };
            let mut values = vec![self.field.zero(); total];
            for (idx, s) in self.map {
                values[t.offset(&idx)] = s;
            }
            t.storage = Storage::Dense(values);
            t
        } else {
            Tensor { field: self.field, axes: self.axes, storage: Storage::Sparse(self.map) }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn t2(entries: &[(u16, u16, i64)]) -> Tensor {
        let mut b = TensorBuilder::new(q(), vec![Axis::new("a", 2), Axis::new("b", 2)]);
        for &(i, j, v) in entries {
            b.add(smallvec::smallvec![i, j], q().from_i64(v));
        }
        b.finish()
    }

    #[test]
    fn builder_cancels_to_zero() {
        let t = t2(&[(0, 1, 3), (0, 1, -3)]);
        assert!(t.is_zero());
        assert_eq!(t.nnz(), 0);
    }

    #[test]
    fn identity_contraction_is_identity() {
        let id = t2(&[(0, 0, 1), (1, 1, 1)]);
        let v = t2(&[(0, 1, 5), (1, 0, -2)]);
        let r = id.contract(&v, &[(1, 0)]).unwrap();
        assert_eq!(r, v);
    }

    #[test]
    fn contract_dimension_mismatch() {
        let a = t2(&[(0, 0, 1)]);
        let mut b3 = TensorBuilder::new(q(), vec![Axis::new("c", 3)]);
        b3.add(smallvec::smallvec![2], q().one());
        let b3 = b3.finish();
        let err = a.contract(&b3, &[(0, 0)]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("a") && msg.contains("c"), "{msg}");
    }

    #[test]
    fn permute_roundtrip() {
        let t = t2(&[(0, 1, 7), (1, 0, 2), (1, 1, 4)]);
        let p = t.permute(&[1, 0]).unwrap();
        assert_eq!(p.permute(&[1, 0]).unwrap(), t);
        assert_eq!(p.get(&[1, 0]), Some(&q().from_i64(7)));
        assert!(t.permute(&[0]).is_err());
        assert!(t.permute(&[0, 0]).is_err());
    }

    #[test]
    fn group_split_roundtrip() {
        let t = t2(&[(0, 1, 7), (1, 1, -1)]);
        let g = t.group_axes(0, 2, "ab");
        assert_eq!(g.rank(), 1);
        assert_eq!(g.get(&[1]), Some(&q().from_i64(7)));
        let s = g.split_axis(0, &[Axis::new("a", 2), Axis::new("b", 2)]);
        assert_eq!(s, t);
    }

    #[test]
    fn dense_promotion_keeps_semantics() {
        let mut b = TensorBuilder::new(q(), vec![Axis::new("x", 4), Axis::new("y", 4)]);
        for i in 0..4u16 {
            for j in 0..4u16 {
                b.add(smallvec::smallvec![i, j], q().from_i64((i * 4 + j) as i64));
            }
        }
        let dense = b.finish();
        assert!(matches!(dense.storage, Storage::Dense(_)));
        assert_eq!(dense.nnz(), 15); // (0,0) slot is zero
        let sparse = t2(&[]).tensor(&t2(&[])); // unrelated; just exercise zero path
        assert!(sparse.is_zero());
        let round: Vec<_> = dense.sorted_entries();
        assert_eq!(round.len(), 15);
        assert_eq!(dense.get(&[2, 3]), Some(&q().from_i64(11)));
    }
}
