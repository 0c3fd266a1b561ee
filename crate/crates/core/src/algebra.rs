//! Fully skew trilinear maps, 3-Lie algebras given by structure constants,
//! the Fundamental Identity and the bracket on fundamental objects.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::index::{self, TripleTable};
use crate::linalg::{add_scaled, is_zero_vector, Matrix};
use crate::rep::Representation;
use crate::scalar::{ParameterAssignment, Scalar};

/// A trilinear map `W x W x W -> U`, totally antisymmetric, stored on
/// sorted triples `i < j < k`.
#[derive(Clone, Debug)]
pub struct SkewTriple {
    dim: usize,
    codim: usize,
    values: Vec<Scalar>,
    table: Arc<TripleTable>,
}

impl PartialEq for SkewTriple {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.codim == other.codim && self.values == other.values
    }
}

impl Eq for SkewTriple {}

impl SkewTriple {
    pub fn zeros(dim: usize, codim: usize) -> Self {
        SkewTriple {
            dim,
            codim,
            values: vec![Scalar::zero(); index::num_triples(dim) * codim],
            table: Arc::new(TripleTable::new(dim)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Value on the sorted triple with the given id.
    pub fn block(&self, id: usize) -> &[Scalar] {
        &self.values[id * self.codim..(id + 1) * self.codim]
    }

    fn block_mut(&mut self, id: usize) -> &mut [Scalar] {
        &mut self.values[id * self.codim..(id + 1) * self.codim]
    }

    /// `(sign, stored value)` for an arbitrary ordered triple; `None` on repeats.
    pub fn lookup(&self, i: usize, j: usize, k: usize) -> Option<(i32, &[Scalar])> {
        self.table.lookup(i, j, k).map(|(s, id)| (s, self.block(id)))
    }

    /// Value on basis elements `e_i, e_j, e_k`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        match self.lookup(i, j, k) {
            Some((1, v)) => v.to_vec(),
            Some((_, v)) => v.iter().map(|x| -x).collect(),
            None => vec![Scalar::zero(); self.codim],
        }
    }

    fn check_indices(&self, i: usize, j: usize, k: usize) -> Result<(i32, usize)> {
        for x in [i, j, k] {
            if x >= self.dim {
                return Err(Error::Invalid(format!(
                    "basis index {} out of range for dimension {}",
                    x + 1,
                    self.dim
                )));
            }
        }
        self.table
            .lookup(i, j, k)
            .ok_or_else(|| Error::Invalid(format!("repeated index in triple ({}, {}, {})", i + 1, j + 1, k + 1)))
    }

    /// Set the value on `(e_i, e_j, e_k)`; the other orderings follow by skewness.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: &[Scalar]) -> Result<()> {
        if value.len() != self.codim {
            return Err(Error::DimensionMismatch {
                context: "skew triple value",
                expected: self.codim,
                found: value.len(),
            });
        }
        let (s, id) = self.check_indices(i, j, k)?;
        for (dst, v) in self.block_mut(id).iter_mut().zip(value) {
            *dst = if s == 1 { v.clone() } else { -v };
        }
        Ok(())
    }

    /// Add `value` to component `l` of the value on `(e_i, e_j, e_k)`.
    pub fn add_component(&mut self, i: usize, j: usize, k: usize, l: usize, value: &Scalar) -> Result<()> {
        let (s, id) = self.check_indices(i, j, k)?;
        let codim = self.codim;
        if l >= codim {
            return Err(Error::Invalid(format!("component {} out of range", l + 1)));
        }
        let slot = &mut self.block_mut(id)[l];
        if s == 1 {
            *slot += value;
        } else {
            *slot -= value;
        }
        Ok(())
    }

    /// `T(e_a, e_b, u)` for a vector `u`.
    pub fn apply(&self, a: usize, b: usize, u: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.codim];
        for (l, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some((s, v)) = self.lookup(a, b, l) {
                let c = if s == 1 { c.clone() } else { -c };
                add_scaled(&mut out, &c, v);
            }
        }
        out
    }

    /// `T(x, y, z)` for arbitrary vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.codim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() || a == b {
                    continue;
                }
                let xy = xa * yb;
                let inner = self.apply(a, b, z);
                add_scaled(&mut out, &xy, &inner);
            }
        }
        out
    }

    /// Nonzero values on sorted triples.
    pub fn entries(&self) -> impl Iterator<Item = ([usize; 3], &[Scalar])> + '_ {
        index::triples(self.dim)
            .into_iter()
            .enumerate()
            .map(move |(id, t)| (t, self.block(id)))
            .filter(|(_, v)| !is_zero_vector(v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    fn zip_with(&self, other: &SkewTriple, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<SkewTriple> {
        if (self.dim, self.codim) != (other.dim, other.codim) {
            return Err(Error::IncompatibleSignature(format!(
                "triples on {}->{} and {}->{}",
                self.dim, self.codim, other.dim, other.codim
            )));
        }
        Ok(SkewTriple {
            dim: self.dim,
            codim: self.codim,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
            table: self.table.clone(),
        })
    }

    pub fn add(&self, other: &SkewTriple) -> Result<SkewTriple> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SkewTriple) -> Result<SkewTriple> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> SkewTriple {
        SkewTriple {
            values: self.values.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(Scalar::is_rational)
    }

    pub fn parameters(&self) -> BTreeSet<String> {
        self.values.iter().flat_map(|v| v.parameters()).collect()
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<SkewTriple> {
        Ok(SkewTriple {
            values: self
                .values
                .iter()
                .map(|v| v.instantiate(values))
                .collect::<Result<_>>()?,
            ..self.clone()
        })
    }

    /// Re-embed into larger spaces: slot index `i` goes to `slot_map[i]`,
    /// output component `l` to `out_offset + l`.
    pub fn embed(&self, dim: usize, codim: usize, slot_map: &[usize], out_offset: usize) -> SkewTriple {
        let mut out = SkewTriple::zeros(dim, codim);
        for ([i, j, k], v) in self.entries() {
            for (l, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    out.add_component(slot_map[i], slot_map[j], slot_map[k], out_offset + l, c)
                        .expect("embedding keeps indices distinct");
                }
            }
        }
        out
    }
}

/// A finite-dimensional algebra with a totally antisymmetric ternary bracket.
/// The Fundamental Identity is checked by [`ThreeLieAlgebra::check_fi`], not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeLieAlgebra {
    names: Vec<String>,
    structure: SkewTriple,
}

/// Basis 5-tuple on which the Fundamental Identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiWitness {
    pub indices: [usize; 5],
    pub defect: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiReport {
    pub witness: Option<FiWitness>,
}

impl FiReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl ThreeLieAlgebra {
    pub fn new(names: Vec<String>, structure: SkewTriple) -> Result<Self> {
        if structure.dim() != structure.codim() {
            return Err(Error::DimensionMismatch {
                context: "bracket codomain",
                expected: structure.dim(),
                found: structure.codim(),
            });
        }
        if names.len() != structure.dim() {
            return Err(Error::DimensionMismatch {
                context: "basis names",
                expected: structure.dim(),
                found: names.len(),
            });
        }
        Ok(ThreeLieAlgebra { names, structure })
    }

    pub fn from_structure(structure: SkewTriple) -> Result<Self> {
        let names = default_names("x", structure.dim());
        Self::new(names, structure)
    }

    pub fn abelian(n: usize) -> Self {
        ThreeLieAlgebra {
            names: default_names("x", n),
            structure: SkewTriple::zeros(n, n),
        }
    }

    /// Build from brackets `[e_i, e_j, e_k] = sum value_l e_l` (0-based).
    pub fn from_brackets(n: usize, brackets: &[([usize; 3], Vec<(usize, Scalar)>)]) -> Result<Self> {
        let mut t = SkewTriple::zeros(n, n);
        for ([i, j, k], terms) in brackets {
            for (l, c) in terms {
                t.add_component(*i, *j, *k, *l, c)?;
            }
        }
        Self::from_structure(t)
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &SkewTriple {
        &self.structure
    }

    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        self.structure.get(i, j, k)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        for v in [x, y, z] {
            self.check_vector(v)?;
        }
        Ok(self.structure.eval(x, y, z))
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "algebra element",
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn fi_defect(&self, x: [&[Scalar]; 5]) -> Result<Vec<Scalar>> {
        for v in x {
            self.check_vector(v)?;
        }
        let [x1, x2, x3, x4, x5] = x;
        let br = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| self.structure.eval(a, b, c);
        let mut out = br(x1, x2, &br(x3, x4, x5));
        for t in [
            br(&br(x1, x2, x3), x4, x5),
            br(x3, &br(x1, x2, x4), x5),
            br(x3, x4, &br(x1, x2, x5)),
        ] {
            for (o, v) in out.iter_mut().zip(&t) {
                *o -= v;
            }
        }
        Ok(out)
    }

    /// Defect of the Fundamental Identity on basis elements.
    pub fn fi_defect_basis(&self, [a1, a2, a3, a4, a5]: [usize; 5]) -> Vec<Scalar> {
        let t = &self.structure;
        let mut out = t.apply(a1, a2, &t.get(a3, a4, a5));
        let terms = [
            t.apply(a4, a5, &t.get(a1, a2, a3)),
            t.apply(a5, a3, &t.get(a1, a2, a4)),
            t.apply(a3, a4, &t.get(a1, a2, a5)),
        ];
        for term in &terms {
            for (o, v) in out.iter_mut().zip(term) {
                *o -= v;
            }
        }
        out
    }

    /// Check the Fundamental Identity on basis tuples. The identity is skew in
    /// its first two and in its last three arguments, so sorted tuples suffice.
    pub fn check_fi(&self, exec: Exec) -> FiReport {
        let n = self.dim();
        let pairs = index::pairs(n);
        let triples = index::triples(n);
        let witness = exec.find_first(pairs.len() * triples.len(), |t| {
            let (a1, a2) = pairs[t / triples.len()];
            let [a3, a4, a5] = triples[t % triples.len()];
            let defect = self.fi_defect_basis([a1, a2, a3, a4, a5]);
            (!is_zero_vector(&defect)).then_some(FiWitness {
                indices: [a1, a2, a3, a4, a5],
                defect,
            })
        });
        FiReport { witness }
    }

    pub fn is_three_lie(&self) -> bool {
        self.check_fi(Exec::default()).holds()
    }

    /// Rank of the span of all basis brackets.
    pub fn derived_dim(&self) -> Result<usize> {
        let cols: Vec<Vec<Scalar>> = (0..index::num_triples(self.dim()))
            .map(|id| self.structure.block(id).to_vec())
            .collect();
        Matrix::from_columns(self.dim(), &cols).rank()
    }

    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.dim() > 0 && self.derived_dim()? == self.dim())
    }

    /// `ad(e_i, e_j) y = [e_i, e_j, y]`.
    pub fn adjoint_rep(&self) -> Result<Representation> {
        if let Some(w) = self.check_fi(Exec::default()).witness {
            return Err(Error::NotAThreeLie(self.describe_witness(&w)));
        }
        Ok(self.adjoint_map())
    }

    /// The adjoint map without checking the Fundamental Identity.
    pub fn adjoint_map(&self) -> Representation {
        let n = self.dim();
        let mut rep = Representation::zero(n, n);
        for (i, j) in index::pairs(n) {
            let cols: Vec<Vec<Scalar>> = (0..n).map(|k| self.bracket_basis(i, j, k)).collect();
            rep.set(i, j, Matrix::from_columns(n, &cols))
                .expect("pair indices are in range");
        }
        rep
    }

    pub fn describe_witness(&self, w: &FiWitness) -> String {
        let names: Vec<&str> = w.indices.iter().map(|&i| self.names[i].as_str()).collect();
        format!(
            "Fundamental Identity fails at ({}), defect {}",
            names.join(", "),
            format_vector(&w.defect, &self.names)
        )
    }

    pub fn fundamental_bracket(&self, x: &FundamentalObject, y: &FundamentalObject) -> Result<FundamentalObject> {
        let n = self.dim();
        for f in [x, y] {
            if f.dim != n {
                return Err(Error::DimensionMismatch {
                    context: "fundamental object",
                    expected: n,
                    found: f.dim,
                });
            }
        }
        let pairs = index::pairs(n);
        let mut out = FundamentalObject::zero(n);
        for (p, &(a, b)) in pairs.iter().enumerate() {
            let cx = &x.coeffs[p];
            if cx.is_zero() {
                continue;
            }
            for (q, &(c, d)) in pairs.iter().enumerate() {
                let cy = &y.coeffs[q];
                if cy.is_zero() {
                    continue;
                }
                let f = cx * cy;
                // [a,b,c] ^ d + c ^ [a,b,d]
                let u = self.bracket_basis(a, b, c);
                let w = self.bracket_basis(a, b, d);
                for l in 0..n {
                    if !u[l].is_zero() {
                        out.add_basis(l, d, &(&f * &u[l]));
                    }
                    if !w[l].is_zero() {
                        out.add_basis(c, l, &(&f * &w[l]));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[X,[Y,Z]] - [[X,Y],Z] - [Y,[X,Z]]` for the bracket on fundamental objects.
    pub fn leibniz_defect(
        &self,
        x: &FundamentalObject,
        y: &FundamentalObject,
        z: &FundamentalObject,
    ) -> Result<FundamentalObject> {
        let yz = self.fundamental_bracket(y, z)?;
        let xy = self.fundamental_bracket(x, y)?;
        let xz = self.fundamental_bracket(x, z)?;
        let a = self.fundamental_bracket(x, &yz)?;
        let b = self.fundamental_bracket(&xy, z)?;
        let c = self.fundamental_bracket(y, &xz)?;
        Ok(a.sub(&b).sub(&c))
    }

    pub fn is_rational(&self) -> bool {
        self.structure.is_rational()
    }

    pub fn parameters(&self) -> BTreeSet<String> {
        self.structure.parameters()
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<ThreeLieAlgebra> {
        Ok(ThreeLieAlgebra {
            names: self.names.clone(),
            structure: self.structure.instantiate(values)?,
        })
    }
}

/// An element of the exterior square, `sum a_ij e_i ^ e_j` over `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalObject {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl FundamentalObject {
    pub fn zero(dim: usize) -> Self {
        FundamentalObject {
            dim,
            coeffs: vec![Scalar::zero(); index::num_pairs(dim)],
        }
    }

    /// `e_a ^ e_b`.
    pub fn basis(dim: usize, a: usize, b: usize) -> Self {
        let mut f = Self::zero(dim);
        f.add_basis(a, b, &Scalar::one());
        f
    }

    pub fn wedge(x: &[Scalar], y: &[Scalar]) -> Self {
        let n = x.len();
        let mut f = Self::zero(n);
        for (a, b) in index::pairs(n) {
            f.coeffs[index::pair_id(n, a, b)] = &(&x[a] * &y[b]) - &(&x[b] * &y[a]);
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_a ^ e_b` with the antisymmetric convention.
    pub fn coeff(&self, a: usize, b: usize) -> Scalar {
        match index::signed_pair(self.dim, a, b) {
            Some((1, id)) => self.coeffs[id].clone(),
            Some((_, id)) => -&self.coeffs[id],
            None => Scalar::zero(),
        }
    }

    /// Coefficients on sorted pairs, in pair-id order.
    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn add_basis(&mut self, a: usize, b: usize, c: &Scalar) {
        if let Some((s, id)) = index::signed_pair(self.dim, a, b) {
            if s == 1 {
                self.coeffs[id] += c;
            } else {
                self.coeffs[id] -= c;
            }
        }
    }

    pub fn add(&self, other: &FundamentalObject) -> FundamentalObject {
        FundamentalObject {
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &FundamentalObject) -> FundamentalObject {
        FundamentalObject {
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// `2*x1 - x3` style rendering of a vector in a named basis.
pub fn format_vector(v: &[Scalar], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(name.clone());
        } else if (-c).is_one() {
            parts.push(format!("-{name}"));
        } else if c.is_rational() {
            parts.push(format!("{c}*{name}"));
        } else {
            parts.push(format!("({c})*{name}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn g3() -> ThreeLieAlgebra {
        ThreeLieAlgebra::from_brackets(3, &[([0, 1, 2], vec![(0, Scalar::one())])]).unwrap()
    }

    fn broken() -> ThreeLieAlgebra {
        ThreeLieAlgebra::from_brackets(
            4,
            &[
                ([0, 1, 2], vec![(3, Scalar::one())]),
                ([0, 1, 3], vec![(0, Scalar::one())]),
            ],
        )
        .unwrap()
    }

    /// Every basis 5-tuple, no symmetry reduction.
    fn brute_force_fi(a: &ThreeLieAlgebra) -> Option<[usize; 5]> {
        let n = a.dim();
        let e: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(n, i)).collect();
        for t in 0..n.pow(5) {
            let idx = [t / n.pow(4), t / n.pow(3) % n, t / n.pow(2) % n, t / n % n, t % n];
            let d = a
                .fi_defect([&e[idx[0]], &e[idx[1]], &e[idx[2]], &e[idx[3]], &e[idx[4]]])
                .unwrap();
            if !is_zero_vector(&d) {
                return Some(idx);
            }
        }
        None
    }

    #[test]
    fn skew_storage() {
        let mut t = SkewTriple::zeros(3, 1);
        t.set(2, 0, 1, &[Scalar::int(5)]).unwrap();
        assert_eq!(t.get(0, 1, 2), vec![Scalar::int(5)]);
        assert_eq!(t.get(1, 0, 2), vec![Scalar::int(-5)]);
        assert_eq!(t.get(1, 1, 2), vec![Scalar::zero()]);
        assert!(t.set(1, 1, 2, &[Scalar::one()]).is_err());
    }

    #[test]
    fn fi_on_small_algebras() {
        assert!(ThreeLieAlgebra::abelian(4).is_three_lie());
        let g = g3();
        assert!(g.is_three_lie());
        assert_eq!(brute_force_fi(&g), None);
        let e: Vec<Vec<Scalar>> = (0..3).map(|i| unit_vector(3, i)).collect();
        let d = g.fi_defect([&e[0], &e[1], &e[2], &e[0], &e[1]]).unwrap();
        assert!(is_zero_vector(&d));
    }

    #[test]
    fn broken_algebra_has_a_witness() {
        let b = broken();
        assert!(brute_force_fi(&b).is_some());
        let report = b.check_fi(Exec::Sequential);
        let w = report.witness.expect("witness");
        assert!(!is_zero_vector(&w.defect));
        assert_eq!(b.check_fi(Exec::Parallel), b.check_fi(Exec::Sequential));
        assert!(b.adjoint_rep().is_err());
    }

    #[test]
    fn fundamental_bracket_values() {
        let g = g3();
        let e12 = FundamentalObject::basis(3, 0, 1);
        let e31 = FundamentalObject::basis(3, 2, 0);
        let e32 = FundamentalObject::basis(3, 2, 1);
        assert!(g.fundamental_bracket(&e12, &e31).unwrap().is_zero());
        assert_eq!(g.fundamental_bracket(&e12, &e32).unwrap(), e12);
        assert!(g
            .fundamental_bracket(&e12, &FundamentalObject::zero(3))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn leibniz_on_basis_pairs() {
        let pairs = |n: usize| -> Vec<FundamentalObject> {
            index::pairs(n)
                .into_iter()
                .map(|(a, b)| FundamentalObject::basis(n, a, b))
                .collect()
        };
        let g = g3();
        let ps = pairs(3);
        for x in &ps {
            for y in &ps {
                for z in &ps {
                    assert!(g.leibniz_defect(x, y, z).unwrap().is_zero());
                }
            }
        }
        let b = broken();
        let ps = pairs(4);
        let mut found = false;
        'outer: for x in &ps {
            for y in &ps {
                for z in &ps {
                    if !b.leibniz_defect(x, y, z).unwrap().is_zero() {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn derived_dimensions() {
        assert_eq!(g3().derived_dim().unwrap(), 1);
        assert!(!g3().is_perfect().unwrap());
        assert_eq!(ThreeLieAlgebra::abelian(3).derived_dim().unwrap(), 0);
    }

    #[test]
    fn adjoint_of_g3() {
        let ad = g3().adjoint_rep().unwrap();
        // ad(e2,e3): e1 -> e1, e2 -> 0, e3 -> 0
        let m = ad.matrix(1, 2);
        let mut expected = Matrix::zeros(3, 3);
        expected.set(0, 0, Scalar::one());
        assert_eq!(m, expected);
        assert!(ThreeLieAlgebra::abelian(2).adjoint_rep().unwrap().is_zero());
    }

    #[test]
    fn witness_formatting() {
        let names = default_names("x", 3);
        let v = vec![Scalar::int(2), Scalar::zero(), Scalar::int(-1)];
        assert_eq!(format_vector(&v, &names), "2*x1 - x3");
    }
}
