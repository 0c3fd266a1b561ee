//! Cochains on pairs plus one single argument, the graded bracket on them,
//! and the classical coboundary with coefficients in a representation.
//!
//! A degree-`p` cochain takes `p` pair arguments `(x_i, y_i)` (skew within each
//! pair, no symmetry across pairs) and one single argument `z`.

use std::collections::BTreeSet;

use num_rational::BigRational;

use crate::algebra::{SkewTriple, ThreeLieAlgebra};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::index;
use crate::linalg::{add_scaled, column_kernel, is_zero_vector, SparseEchelon, SparseVec};
use crate::rep::{check_representation, Representation};
use crate::scalar::{ParameterAssignment, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    dim: usize,
    codim: usize,
    data: Vec<Scalar>,
}

pub(crate) fn signed(c: &Scalar, s: i32) -> Scalar {
    if s >= 0 {
        c.clone()
    } else {
        -c
    }
}

fn parity(k: usize) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Cochain {
    pub fn zeros(degree: usize, dim: usize, codim: usize) -> Self {
        let tuples = index::num_pairs(dim).pow(degree as u32) * dim;
        Cochain {
            degree,
            dim,
            codim,
            data: vec![Scalar::zero(); tuples * codim],
        }
    }

    pub fn from_coordinates(degree: usize, dim: usize, codim: usize, data: Vec<Scalar>) -> Result<Self> {
        let c = Cochain::zeros(degree, dim, codim);
        if data.len() != c.data.len() {
            return Err(Error::DimensionMismatch {
                context: "cochain coordinates",
                expected: c.data.len(),
                found: data.len(),
            });
        }
        Ok(Cochain { data, ..c })
    }

    /// The cochain with a single coordinate equal to one.
    pub fn unit(degree: usize, dim: usize, codim: usize, coordinate: usize) -> Self {
        let mut c = Cochain::zeros(degree, dim, codim);
        c.data[coordinate] = Scalar::one();
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn num_tuples(&self) -> usize {
        self.data.len() / self.codim.max(1)
    }

    pub fn coordinates(&self) -> &[Scalar] {
        &self.data
    }

    /// Tuple index of sorted pair ids and a single slot.
    pub fn tuple_index(&self, pair_ids: &[usize], single: usize) -> usize {
        let p = index::num_pairs(self.dim);
        pair_ids.iter().fold(0, |acc, &q| acc * p + q) * self.dim + single
    }

    /// Sorted pairs and single slot of a tuple index.
    pub fn decode(&self, t: usize) -> (Vec<(usize, usize)>, usize) {
        decode_tuple(&index::pairs(self.dim), self.dim, self.degree, t)
    }

    pub fn block(&self, t: usize) -> &[Scalar] {
        &self.data[t * self.codim..(t + 1) * self.codim]
    }

    fn locate(&self, pairs: &[(usize, usize)], single: usize) -> Option<(i32, usize)> {
        let p = index::num_pairs(self.dim);
        let mut sign = 1;
        let mut t = 0;
        for &(a, b) in pairs {
            let (s, id) = index::signed_pair(self.dim, a, b)?;
            sign *= s;
            t = t * p + id;
        }
        Some((sign, t * self.dim + single))
    }

    /// `(sign, stored value)` on ordered arguments, `None` when a pair repeats an index.
    pub fn lookup(&self, pairs: &[(usize, usize)], single: usize) -> Option<(i32, &[Scalar])> {
        debug_assert_eq!(pairs.len(), self.degree);
        self.locate(pairs, single).map(|(s, t)| (s, self.block(t)))
    }

    pub fn value(&self, pairs: &[(usize, usize)], single: usize) -> Vec<Scalar> {
        match self.lookup(pairs, single) {
            Some((s, v)) => v.iter().map(|x| signed(x, s)).collect(),
            None => vec![Scalar::zero(); self.codim],
        }
    }

    fn check_args(&self, pairs: &[(usize, usize)], single: usize) -> Result<(i32, usize)> {
        if pairs.len() != self.degree {
            return Err(Error::IncompatibleSignature(format!(
                "{} pair arguments given to a degree {} cochain",
                pairs.len(),
                self.degree
            )));
        }
        let in_range = pairs.iter().all(|&(a, b)| a < self.dim && b < self.dim) && single < self.dim;
        if !in_range {
            return Err(Error::Invalid("cochain argument index out of range".into()));
        }
        self.locate(pairs, single)
            .ok_or_else(|| Error::Invalid("repeated index inside a pair argument".into()))
    }

    pub fn set(&mut self, pairs: &[(usize, usize)], single: usize, value: &[Scalar]) -> Result<()> {
        if value.len() != self.codim {
            return Err(Error::DimensionMismatch {
                context: "cochain value",
                expected: self.codim,
                found: value.len(),
            });
        }
        let (s, t) = self.check_args(pairs, single)?;
        let codim = self.codim;
        for (dst, v) in self.data[t * codim..(t + 1) * codim].iter_mut().zip(value) {
            *dst = signed(v, s);
        }
        Ok(())
    }

    pub fn add_component(&mut self, pairs: &[(usize, usize)], single: usize, l: usize, c: &Scalar) -> Result<()> {
        let (s, t) = self.check_args(pairs, single)?;
        if l >= self.codim {
            return Err(Error::Invalid(format!("component {} out of range", l + 1)));
        }
        let slot = &mut self.data[t * self.codim + l];
        *slot += signed(c, s);
        Ok(())
    }

    /// Nonzero coordinates as `(sorted pairs, single, component, value)`.
    pub fn nonzero_entries(&self) -> Vec<(Vec<(usize, usize)>, usize, usize, &Scalar)> {
        let pairs = index::pairs(self.dim);
        let mut out = Vec::new();
        for t in 0..self.num_tuples() {
            let block = self.block(t);
            if is_zero_vector(block) {
                continue;
            }
            let (ps, s) = decode_tuple(&pairs, self.dim, self.degree, t);
            for (l, c) in block.iter().enumerate() {
                if !c.is_zero() {
                    out.push((ps.clone(), s, l, c));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if (self.degree, self.dim, self.codim) != (other.degree, other.dim, other.codim) {
            return Err(Error::IncompatibleSignature(format!(
                "degree {} on {}->{} vs degree {} on {}->{}",
                self.degree, self.dim, self.codim, other.degree, other.dim, other.codim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        Ok(self.with_data(self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        Ok(self.with_data(self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        self.with_data(self.data.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&Scalar::int(-1))
    }

    fn with_data(&self, data: Vec<Scalar>) -> Cochain {
        Cochain {
            degree: self.degree,
            dim: self.dim,
            codim: self.codim,
            data,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(Scalar::is_rational)
    }

    pub fn parameters(&self) -> BTreeSet<String> {
        self.data.iter().flat_map(|v| v.parameters()).collect()
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<Cochain> {
        Ok(self.with_data(self.data.iter().map(|v| v.instantiate(values)).collect::<Result<_>>()?))
    }

    pub fn to_sparse(&self) -> Result<SparseVec> {
        to_sparse(&self.data)
    }

    fn check_bracket_shape(&self, other: &Cochain) -> Result<()> {
        let n = self.dim;
        if other.dim != n || self.codim != n || other.codim != n {
            return Err(Error::IncompatibleSignature(format!(
                "graded bracket needs cochains on one space W -> W; got {}->{} and {}->{}",
                self.dim, self.codim, other.dim, other.codim
            )));
        }
        Ok(())
    }

    /// The composition product `self o other`, inserting `other` into every
    /// argument of `self` with unshuffle signs.
    pub fn compose(&self, other: &Cochain, exec: Exec) -> Result<Cochain> {
        self.check_bracket_shape(other)?;
        let (alpha, beta) = (self, other);
        let p = alpha.degree;
        let q = beta.degree;
        let deg = p + q;
        let n = alpha.dim;
        let pairs = index::pairs(n);
        let splits: Vec<(Vec<usize>, Vec<usize>, i32)> = index::subsets(deg + 1, q + 1)
            .into_iter()
            .map(|j| {
                let i: Vec<usize> = (0..=deg).filter(|x| !j.contains(x)).collect();
                let s = index::concat_sign(&j, &i);
                (j, i, s)
            })
            .collect();
        let shape = Cochain::zeros(deg, n, n);
        let blocks = exec.map(shape.num_tuples(), |t| {
            let (xs, x) = decode_tuple(&pairs, n, deg, t);
            let mut out = vec![Scalar::zero(); n];
            let mut bpairs: Vec<(usize, usize)> = Vec::with_capacity(q);
            let mut apairs: Vec<(usize, usize)> = Vec::with_capacity(p);
            for (jset, iset, s0) in &splits {
                let last = jset[q];
                bpairs.clear();
                bpairs.extend(jset[..q].iter().map(|&j| xs[j]));
                if last < deg {
                    // insert into a component of the pair at position `last`
                    let (a, b) = xs[last];
                    let k = iset.iter().filter(|&&i| i < last).count();
                    let sign = s0 * parity(k);
                    apairs.clear();
                    apairs.extend(iset[..p - 1].iter().map(|&i| xs[i]));
                    apairs.insert(k, (0, 0));
                    for (slot, other_end, first) in [(a, b, true), (b, a, false)] {
                        let Some((sb, u)) = beta.lookup(&bpairs, slot) else {
                            continue;
                        };
                        for (l, ul) in u.iter().enumerate() {
                            if ul.is_zero() {
                                continue;
                            }
                            apairs[k] = if first { (l, other_end) } else { (other_end, l) };
                            if let Some((sa, av)) = alpha.lookup(&apairs, x) {
                                add_scaled(&mut out, &signed(ul, sign * sb * sa), av);
                            }
                        }
                    }
                } else {
                    let sign = s0 * parity(p);
                    apairs.clear();
                    apairs.extend(iset.iter().map(|&i| xs[i]));
                    let Some((sb, u)) = beta.lookup(&bpairs, x) else {
                        continue;
                    };
                    for (l, ul) in u.iter().enumerate() {
                        if ul.is_zero() {
                            continue;
                        }
                        if let Some((sa, av)) = alpha.lookup(&apairs, l) {
                            add_scaled(&mut out, &signed(ul, sign * sb * sa), av);
                        }
                    }
                }
            }
            out
        });
        Ok(Cochain {
            data: blocks.into_iter().flatten().collect(),
            ..shape
        })
    }

    /// `[[a, b]] = (-1)^{pq} a o b - b o a`.
    pub fn graded_bracket(&self, other: &Cochain, exec: Exec) -> Result<Cochain> {
        let ab = self.compose(other, exec)?;
        let ba = other.compose(self, exec)?;
        let ab = if (self.degree * other.degree).is_multiple_of(2) {
            ab
        } else {
            ab.neg()
        };
        ab.sub(&ba)
    }

    /// Whether a degree-1 cochain is antisymmetric in all three arguments.
    pub fn is_fully_skew(&self) -> bool {
        self.to_skew_triple().is_ok()
    }

    /// The fully skew triple represented by a degree-1 cochain.
    pub fn to_skew_triple(&self) -> Result<SkewTriple> {
        if self.degree != 1 {
            return Err(Error::IncompatibleSignature(format!(
                "degree {} cochain is not a triple",
                self.degree
            )));
        }
        let n = self.dim;
        let mut t = SkewTriple::zeros(n, self.codim);
        for (a, b) in index::pairs(n) {
            for c in [a, b] {
                if !is_zero_vector(&self.value(&[(a, b)], c)) {
                    return Err(Error::Invalid(format!(
                        "nonzero value with repeated argument ({}, {}, {})",
                        a + 1,
                        b + 1,
                        c + 1
                    )));
                }
            }
        }
        for [i, j, k] in index::triples(n) {
            let v = self.value(&[(i, j)], k);
            let cyc1 = self.value(&[(j, k)], i);
            let cyc2 = self.value(&[(k, i)], j);
            if v != cyc1 || v != cyc2 {
                return Err(Error::Invalid(format!(
                    "not antisymmetric across the pair and single slot at ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            t.set(i, j, k, &v)?;
        }
        Ok(t)
    }
}

impl SkewTriple {
    /// The degree-1 cochain `((a, b), c) -> T(a, b, c)`.
    pub fn to_cochain(&self) -> Cochain {
        let n = self.dim();
        let mut c = Cochain::zeros(1, n, self.codim());
        let pairs = index::pairs(n);
        let codim = self.codim();
        for (pid, &(a, b)) in pairs.iter().enumerate() {
            for z in 0..n {
                if let Some((s, v)) = self.lookup(a, b, z) {
                    let t = pid * n + z;
                    for (dst, x) in c.data[t * codim..(t + 1) * codim].iter_mut().zip(v) {
                        *dst = signed(x, s);
                    }
                }
            }
        }
        c
    }
}

pub(crate) fn decode_tuple(
    pairs: &[(usize, usize)],
    dim: usize,
    degree: usize,
    t: usize,
) -> (Vec<(usize, usize)>, usize) {
    let single = t % dim;
    let mut rest = t / dim;
    let p = pairs.len();
    let mut out = vec![(0, 0); degree];
    for slot in (0..degree).rev() {
        out[slot] = pairs[rest % p];
        rest /= p;
    }
    (out, single)
}

pub(crate) fn to_sparse(v: &[Scalar]) -> Result<SparseVec> {
    let mut entries: Vec<(usize, BigRational)> = Vec::new();
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let q = x.as_rational().ok_or(Error::ParametricEntries)?;
        entries.push((i, q.clone()));
    }
    Ok(SparseVec::from_entries(entries))
}

/// Dimensions of cocycles, coboundaries and cohomology in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    /// Cocycles whose classes form a basis of cohomology, as coordinate vectors.
    pub representatives: Option<Vec<Vec<Scalar>>>,
}

/// Ranks from the columns of `d_prev: C^{p-2} -> C^{p-1}` and `d: C^{p-1} -> C^p`.
pub(crate) fn cohomology_from_columns(
    degree: usize,
    dim_cochains: usize,
    prev: &[SparseVec],
    cur: &[SparseVec],
    rows_cur: usize,
    want_representatives: bool,
) -> CohomologyReport {
    // rank of d_prev
    let mut image = SparseEchelon::new(dim_cochains);
    for col in prev {
        image.insert(col.clone());
    }
    let dim_b = image.rank();
    let (rank, kernel) = column_kernel(rows_cur, cur);
    let dim_z = dim_cochains - rank;
    let representatives = want_representatives.then(|| {
        let mut span = image.clone();
        kernel
            .into_iter()
            .filter(|z| span.insert(z.clone()))
            .map(|z| {
                z.to_dense(dim_cochains)
                    .into_iter()
                    .map(Scalar::from_rational)
                    .collect()
            })
            .collect()
    });
    CohomologyReport {
        degree,
        dim_cochains,
        dim_z,
        dim_b,
        dim_h: dim_z.saturating_sub(dim_b),
        representatives,
    }
}

/// The classical cochain complex of an algebra with coefficients in a representation.
#[derive(Clone, Debug)]
pub struct ClassicalComplex<'a> {
    algebra: &'a ThreeLieAlgebra,
    rep: &'a Representation,
}

impl<'a> ClassicalComplex<'a> {
    pub fn new(algebra: &'a ThreeLieAlgebra, rep: &'a Representation) -> Result<Self> {
        let report = check_representation(algebra, rep)?;
        if let Some(f) = report.failures.first() {
            return Err(Error::NotARepresentation(f.to_string()));
        }
        Ok(ClassicalComplex { algebra, rep })
    }

    /// Skip the representation check; used to probe invalid data.
    pub fn new_unchecked(algebra: &'a ThreeLieAlgebra, rep: &'a Representation) -> Self {
        ClassicalComplex { algebra, rep }
    }

    /// Coboundary of a cochain with `p - 1` pair slots; the result has `p`.
    pub fn delta(&self, alpha: &Cochain, exec: Exec) -> Result<Cochain> {
        let n = self.algebra.dim();
        let m = self.rep.dim_v();
        if alpha.dim() != n || alpha.codim() != m {
            return Err(Error::IncompatibleSignature(format!(
                "cochain on {}->{} for an algebra of dim {} and module of dim {}",
                alpha.dim(),
                alpha.codim(),
                n,
                m
            )));
        }
        let p = alpha.degree() + 1;
        let pairs = index::pairs(n);
        let shape = Cochain::zeros(p, n, m);
        let br = self.algebra.structure();
        let blocks = exec.map(shape.num_tuples(), |t| {
            let (xs, z) = decode_tuple(&pairs, n, p, t);
            let mut out = vec![Scalar::zero(); m];
            let without = |j: usize| -> Vec<(usize, usize)> {
                xs.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &x)| x)
                    .collect()
            };
            // [X_j, X_k]_F placed at the position of X_k
            for j in 0..p {
                let sign = parity(j + 1);
                let (a, b) = xs[j];
                for k in j + 1..p {
                    let (c, d) = xs[k];
                    let mut args = without(j);
                    let pos = k - 1;
                    let u = br.get(a, b, c);
                    let w = br.get(a, b, d);
                    for l in 0..n {
                        if !u[l].is_zero() {
                            args[pos] = (l, d);
                            if let Some((s, v)) = alpha.lookup(&args, z) {
                                add_scaled(&mut out, &signed(&u[l], sign * s), v);
                            }
                        }
                        if !w[l].is_zero() {
                            args[pos] = (c, l);
                            if let Some((s, v)) = alpha.lookup(&args, z) {
                                add_scaled(&mut out, &signed(&w[l], sign * s), v);
                            }
                        }
                    }
                }
            }
            // alpha(..., [X_j, z])
            for j in 0..p {
                let sign = parity(j + 1);
                let (a, b) = xs[j];
                let args = without(j);
                let u = br.get(a, b, z);
                for (l, ul) in u.iter().enumerate() {
                    if ul.is_zero() {
                        continue;
                    }
                    if let Some((s, v)) = alpha.lookup(&args, l) {
                        add_scaled(&mut out, &signed(ul, sign * s), v);
                    }
                }
            }
            // rho(X_j) alpha(..., z)
            for j in 0..p {
                let sign = parity(j);
                let (a, b) = xs[j];
                let args = without(j);
                let val = alpha.value(&args, z);
                if is_zero_vector(&val) {
                    continue;
                }
                let acted = self.rep.apply(a, b, &val);
                add_scaled(&mut out, &Scalar::int(sign as i64), &acted);
            }
            // final term on the last pair
            let (xp, yp) = xs[p - 1];
            let head = &xs[..p - 1];
            let sign = Scalar::int(parity(p + 1) as i64);
            let v1 = alpha.value(head, xp);
            let v2 = alpha.value(head, yp);
            add_scaled(&mut out, &sign, &self.rep.apply(yp, z, &v1));
            add_scaled(&mut out, &sign, &self.rep.apply(z, xp, &v2));
            out
        });
        Ok(Cochain {
            data: blocks.into_iter().flatten().collect(),
            ..shape
        })
    }

    fn columns(&self, degree: usize, exec: Exec) -> Result<Vec<SparseVec>> {
        let n = self.algebra.dim();
        let m = self.rep.dim_v();
        let size = Cochain::zeros(degree, n, m).coordinates().len();
        exec.map(size, |c| {
            self.delta(&Cochain::unit(degree, n, m, c), Exec::Sequential)?
                .to_sparse()
        })
        .into_iter()
        .collect()
    }

    /// Cohomology in degree `p >= 1`: cocycles among cochains with `p - 1`
    /// pair slots, modulo coboundaries of cochains with `p - 2`.
    pub fn cohomology(&self, p: usize, want_representatives: bool, exec: Exec) -> Result<CohomologyReport> {
        if p == 0 {
            return Err(Error::Invalid("cohomology degree starts at 1".into()));
        }
        if !self.algebra.is_rational() || !self.rep.is_rational() {
            return Err(Error::ParametricEntries);
        }
        let n = self.algebra.dim();
        let m = self.rep.dim_v();
        let dim_c = Cochain::zeros(p - 1, n, m).coordinates().len();
        let rows = Cochain::zeros(p, n, m).coordinates().len();
        let cur = self.columns(p - 1, exec)?;
        let prev = if p >= 2 { self.columns(p - 2, exec)? } else { Vec::new() };
        Ok(cohomology_from_columns(
            p,
            dim_c,
            &prev,
            &cur,
            rows,
            want_representatives,
        ))
    }
}

/// Whether `[[pi, pi]] = 0` for a triple on one space.
pub fn is_canonical(pi: &SkewTriple, exec: Exec) -> Result<bool> {
    let c = pi.to_cochain();
    Ok(c.graded_bracket(&c, exec)?.is_zero())
}
