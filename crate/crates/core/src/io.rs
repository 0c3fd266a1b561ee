//! JSON file formats. All basis indices in files are 1-based.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{SkewTriple, ThreeLieAlgebra};
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::extension::ExtensionData;
use crate::gencohom::MixedCochain;
use crate::index;
use crate::linalg::Matrix;
use crate::rep::{GeneralizedRepresentation, NuMap, Representation};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub args: [usize; 3],
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationFile {
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    #[serde(default)]
    pub rho: Vec<RhoEntry>,
    #[serde(default)]
    pub nu: Vec<NuEntry>,
}

/// `matrix[r][c]` is the coefficient of `v_r` in `rho(x_i, x_j) v_c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhoEntry {
    pub pair: [usize; 2],
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NuEntry {
    pub index: usize,
    pub values: Vec<VectorEntry<2>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorEntry<const K: usize> {
    #[serde(with = "serde_arrays")]
    pub args: [usize; K],
    pub vector: Vec<String>,
}

mod serde_arrays {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, const K: usize>(a: &[usize; K], s: S) -> Result<S::Ok, S::Error> {
        a.as_slice().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const K: usize>(d: D) -> Result<[usize; K], D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        let len = v.len();
        v.try_into()
            .map_err(|_| serde::de::Error::custom(format!("expected {K} indices, found {len}")))
    }
}

/// An algebra given inline or as a path relative to the referring file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraFile),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtensionFile {
    pub algebra: AlgebraRef,
    #[serde(flatten)]
    pub rep: RepresentationFile,
    #[serde(default)]
    pub omega: Vec<VectorEntry<3>>,
}

/// Cochain entries list `2p + 1` indices: the pairs in order, then the single slot.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CochainFile {
    pub degree: usize,
    pub dim: usize,
    pub codim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitSignature>,
    #[serde(default)]
    pub entries: Vec<CochainEntry>,
}

/// `g + V` with `dim = g + v`; arguments `1..=g` lie in `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSignature {
    pub g: usize,
    pub v: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CochainEntry {
    pub indices: Vec<usize>,
    pub value: BTreeMap<String, String>,
}

fn scalar(s: &str) -> Result<Scalar> {
    Scalar::parse(s)
}

fn zero_based(i: usize, bound: usize, what: &str) -> Result<usize> {
    if i == 0 || i > bound {
        return Err(Error::Parse(format!("{what} index {i} outside 1..={bound}")));
    }
    Ok(i - 1)
}

fn increasing(idx: &[usize], what: &str) -> Result<()> {
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse(format!(
            "{what} indices {idx:?} must be strictly increasing"
        )));
    }
    Ok(())
}

fn vector(values: &[String], len: usize, what: &str) -> Result<Vec<Scalar>> {
    if values.len() != len {
        return Err(Error::Parse(format!(
            "{what} has {} entries, expected {len}",
            values.len()
        )));
    }
    values.iter().map(|s| scalar(s)).collect()
}

fn components(value: &BTreeMap<String, String>, len: usize, what: &str) -> Result<Vec<Scalar>> {
    let mut out = vec![Scalar::zero(); len];
    for (k, v) in value {
        let l: usize = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{what}: component key `{k}` is not an index")))?;
        out[zero_based(l, len, what)?] = scalar(v)?;
    }
    Ok(out)
}

fn component_map(v: &[Scalar]) -> BTreeMap<String, String> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(l, x)| ((l + 1).to_string(), x.to_string()))
        .collect()
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<ThreeLieAlgebra> {
        let n = self.dim;
        let mut t = SkewTriple::zeros(n, n);
        for b in &self.brackets {
            increasing(&b.args, "bracket")?;
            let [i, j, k] = b.args.map(|a| zero_based(a, n, "bracket"));
            t.set(i?, j?, k?, &components(&b.value, n, "bracket value")?)?;
        }
        let names = match &self.basis {
            Some(names) => names.clone(),
            None => crate::algebra::default_names("x", n),
        };
        ThreeLieAlgebra::new(names, t)
    }

    pub fn from_algebra(alg: &ThreeLieAlgebra) -> Self {
        let brackets = alg
            .structure()
            .entries()
            .map(|(args, v)| BracketEntry {
                args: args.map(|a| a + 1),
                value: component_map(v),
            })
            .collect();
        AlgebraFile {
            dim: alg.dim(),
            basis: Some(alg.names().to_vec()),
            brackets,
        }
    }
}

impl RepresentationFile {
    pub fn to_genrep(&self, n: usize) -> Result<GeneralizedRepresentation> {
        let m = self.dim_v;
        let mut rho = Representation::zero(n, m);
        for e in &self.rho {
            increasing(&e.pair, "rho pair")?;
            let [i, j] = e.pair.map(|a| zero_based(a, n, "rho pair"));
            if e.matrix.len() != m {
                return Err(Error::Parse(format!("rho matrix for {:?} needs {m} rows", e.pair)));
            }
            let rows: Vec<Vec<Scalar>> = e
                .matrix
                .iter()
                .map(|r| vector(r, m, "rho matrix row"))
                .collect::<Result<_>>()?;
            rho.set(i?, j?, Matrix::from_rows(rows)?)?;
        }
        let mut nu = NuMap::zero(n, m);
        for e in &self.nu {
            let i = zero_based(e.index, n, "nu")?;
            for v in &e.values {
                increasing(&v.args, "nu arguments")?;
                let [a, b] = v.args.map(|a| zero_based(a, m, "nu argument"));
                nu.set(i, a?, b?, &vector(&v.vector, m, "nu value")?)?;
            }
        }
        GeneralizedRepresentation::new(rho, nu)
    }

    pub fn from_genrep(gr: &GeneralizedRepresentation) -> Self {
        let (n, m) = (gr.dim_g(), gr.dim_v());
        let rho = index::pairs(n)
            .into_iter()
            .filter(|&(i, j)| !gr.rho.matrix(i, j).is_zero())
            .map(|(i, j)| RhoEntry {
                pair: [i + 1, j + 1],
                matrix: gr.rho.matrix(i, j).to_rows().iter().map(|r| strings(r)).collect(),
            })
            .collect();
        let nu = (0..n)
            .filter_map(|i| {
                let values: Vec<VectorEntry<2>> = index::pairs(m)
                    .into_iter()
                    .map(|(a, b)| (a, b, gr.nu.get(i, a, b)))
                    .filter(|(_, _, v)| v.iter().any(|x| !x.is_zero()))
                    .map(|(a, b, v)| VectorEntry {
                        args: [a + 1, b + 1],
                        vector: strings(&v),
                    })
                    .collect();
                (!values.is_empty()).then_some(NuEntry { index: i + 1, values })
            })
            .collect();
        RepresentationFile { dim_v: m, rho, nu }
    }
}

impl ExtensionFile {
    /// Resolve the algebra reference against `base_dir`.
    pub fn to_extension(&self, base_dir: Option<&Path>) -> Result<ExtensionData> {
        let algebra = match &self.algebra {
            AlgebraRef::Inline(a) => a.to_algebra()?,
            AlgebraRef::Path(p) => {
                let path = base_dir.map_or_else(|| PathBuf::from(p), |d| d.join(p));
                load_algebra(&path)?
            }
        };
        let n = algebra.dim();
        let gr = self.rep.to_genrep(n)?;
        let m = gr.dim_v();
        let mut omega = SkewTriple::zeros(n, m);
        for e in &self.omega {
            increasing(&e.args, "omega arguments")?;
            let [i, j, k] = e.args.map(|a| zero_based(a, n, "omega argument"));
            omega.set(i?, j?, k?, &vector(&e.vector, m, "omega value")?)?;
        }
        ExtensionData::new(algebra, gr.rho, gr.nu, omega)
    }

    pub fn from_extension(ext: &ExtensionData) -> Self {
        let omega = ext
            .omega
            .entries()
            .map(|(args, v)| VectorEntry {
                args: args.map(|a| a + 1),
                vector: strings(v),
            })
            .collect();
        ExtensionFile {
            algebra: AlgebraRef::Inline(AlgebraFile::from_algebra(&ext.algebra)),
            rep: RepresentationFile::from_genrep(&ext.genrep()),
            omega,
        }
    }
}

impl CochainFile {
    pub fn to_cochain(&self) -> Result<Cochain> {
        if let Some(s) = self.split {
            if s.g + s.v != self.dim {
                return Err(Error::Parse(format!(
                    "split {} + {} does not add up to dim {}",
                    s.g, s.v, self.dim
                )));
            }
        }
        let mut c = Cochain::zeros(self.degree, self.dim, self.codim);
        for e in &self.entries {
            if e.indices.len() != 2 * self.degree + 1 {
                return Err(Error::Parse(format!(
                    "cochain entry {:?} needs {} indices",
                    e.indices,
                    2 * self.degree + 1
                )));
            }
            let idx: Vec<usize> = e
                .indices
                .iter()
                .map(|&i| zero_based(i, self.dim, "cochain argument"))
                .collect::<Result<_>>()?;
            let pairs: Vec<(usize, usize)> = idx[..2 * self.degree].chunks(2).map(|p| (p[0], p[1])).collect();
            if pairs.iter().any(|(a, b)| a >= b) {
                return Err(Error::Parse(format!(
                    "cochain entry {:?}: each pair must be increasing",
                    e.indices
                )));
            }
            c.set(
                &pairs,
                idx[2 * self.degree],
                &components(&e.value, self.codim, "cochain value")?,
            )?;
        }
        Ok(c)
    }

    pub fn from_cochain(c: &Cochain, split: Option<SplitSignature>) -> Self {
        let pairs = index::pairs(c.dim());
        let entries = (0..c.num_tuples())
            .filter(|&t| c.block(t).iter().any(|x| !x.is_zero()))
            .map(|t| {
                let (ps, s) = crate::cochain::decode_tuple(&pairs, c.dim(), c.degree(), t);
                let mut indices: Vec<usize> = ps.iter().flat_map(|&(a, b)| [a + 1, b + 1]).collect();
                indices.push(s + 1);
                CochainEntry {
                    indices,
                    value: component_map(c.block(t)),
                }
            })
            .collect();
        CochainFile {
            degree: c.degree(),
            dim: c.dim(),
            codim: c.codim(),
            split,
            entries,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_algebra(json: &str) -> Result<ThreeLieAlgebra> {
    serde_json::from_str::<AlgebraFile>(json)?.to_algebra()
}

pub fn load_algebra(path: &Path) -> Result<ThreeLieAlgebra> {
    parse_algebra(&read(path)?)
}

pub fn algebra_to_json(alg: &ThreeLieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(alg)).expect("plain data serializes")
}

pub fn parse_genrep(json: &str, n: usize) -> Result<GeneralizedRepresentation> {
    serde_json::from_str::<RepresentationFile>(json)?.to_genrep(n)
}

pub fn load_genrep(path: &Path, n: usize) -> Result<GeneralizedRepresentation> {
    parse_genrep(&read(path)?, n)
}

pub fn genrep_to_json(gr: &GeneralizedRepresentation) -> String {
    serde_json::to_string_pretty(&RepresentationFile::from_genrep(gr)).expect("plain data serializes")
}

pub fn parse_extension(json: &str, base_dir: Option<&Path>) -> Result<ExtensionData> {
    serde_json::from_str::<ExtensionFile>(json)?.to_extension(base_dir)
}

pub fn load_extension(path: &Path) -> Result<ExtensionData> {
    parse_extension(&read(path)?, path.parent())
}

pub fn extension_to_json(ext: &ExtensionData) -> String {
    serde_json::to_string_pretty(&ExtensionFile::from_extension(ext)).expect("plain data serializes")
}

pub fn parse_cochain(json: &str) -> Result<Cochain> {
    serde_json::from_str::<CochainFile>(json)?.to_cochain()
}

pub fn cochain_to_json(c: &Cochain, split: Option<SplitSignature>) -> String {
    serde_json::to_string_pretty(&CochainFile::from_cochain(c, split)).expect("plain data serializes")
}

/// A cochain on `g + V` with values in `V`. A file over `g` alone
/// (`dim = n`, no split) is read as a cochain vanishing off `g`.
pub fn parse_mixed_cochain(json: &str, n: usize, m: usize) -> Result<MixedCochain> {
    let file: CochainFile = serde_json::from_str(json)?;
    let c = file.to_cochain()?;
    match file.split {
        Some(s) if (s.g, s.v) != (n, m) => Err(Error::IncompatibleSignature(format!(
            "cochain split {} + {} against {n} + {m}",
            s.g, s.v
        ))),
        None if file.dim == n => MixedCochain::from_g_cochain(n, m, &c),
        _ => MixedCochain::from_v_valued(n, m, &c),
    }
}

pub fn mixed_cochain_to_json(c: &MixedCochain) -> String {
    let split = SplitSignature {
        g: c.dim_g(),
        v: c.dim_v(),
    };
    cochain_to_json(&c.to_v_valued(), Some(split))
}

#[cfg(test)]
mod tests {
    use super::*;

    const G3: &str = r#"{
        "dim": 3,
        "basis": ["x1", "x2", "x3"],
        "brackets": [ { "args": [1, 2, 3], "value": { "1": "1" } } ]
    }"#;

    #[test]
    fn algebra_round_trip() {
        let alg = parse_algebra(G3).unwrap();
        assert_eq!(
            alg.bracket_basis(0, 1, 2),
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()]
        );
        assert_eq!(parse_algebra(&algebra_to_json(&alg)).unwrap(), alg);
    }

    #[test]
    fn rejects_bad_indices() {
        let bad = G3.replace("[1, 2, 3]", "[2, 1, 3]");
        assert!(matches!(parse_algebra(&bad), Err(Error::Parse(_))));
        let bad = G3.replace("[1, 2, 3]", "[1, 2, 4]");
        assert!(matches!(parse_algebra(&bad), Err(Error::Parse(_))));
        assert!(matches!(parse_algebra("{"), Err(Error::Json(_))));
    }

    #[test]
    fn representation_round_trip_with_parameters() {
        let json = r#"{
            "dimV": 2,
            "rho": [ { "pair": [1, 3], "matrix": [["s1*s2", "-s1*s2^2"], ["s1", "-s1*s2"]] } ],
            "nu": [ { "index": 3, "values": [ { "args": [1, 2], "vector": ["s3*s2", "s3"] } ] } ]
        }"#;
        let gr = parse_genrep(json, 3).unwrap();
        assert_eq!(gr.rho.matrix(0, 2).get(1, 0), &Scalar::parse("s1").unwrap());
        assert_eq!(parse_genrep(&genrep_to_json(&gr), 3).unwrap(), gr);
    }

    #[test]
    fn extension_round_trip() {
        let json =
            format!(r#"{{ "algebra": {G3}, "dimV": 1, "omega": [ {{ "args": [1, 2, 3], "vector": ["r/2"] }} ] }}"#);
        let ext = parse_extension(&json, None).unwrap();
        assert_eq!(ext.omega.get(2, 1, 0), vec![-Scalar::parse("r/2").unwrap()]);
        assert_eq!(parse_extension(&extension_to_json(&ext), None).unwrap(), ext);
    }

    #[test]
    fn cochain_round_trip() {
        let mut c = Cochain::zeros(1, 3, 2);
        c.add_component(&[(0, 2)], 1, 1, &Scalar::frac(3, 4)).unwrap();
        let json = cochain_to_json(&c, Some(SplitSignature { g: 2, v: 1 }));
        assert_eq!(parse_cochain(&json).unwrap(), c);
    }

    #[test]
    fn mixed_cochain_round_trip() {
        let mut c = MixedCochain::zeros(1, 2, 1);
        let w = Scalar::int(3);
        let mut inner = Cochain::zeros(1, 3, 1);
        inner.set(&[(0, 2)], 1, &[w]).unwrap();
        c = c.add(&MixedCochain::from_v_valued(2, 1, &inner).unwrap()).unwrap();
        let back = parse_mixed_cochain(&mixed_cochain_to_json(&c), 2, 1).unwrap();
        assert_eq!(back, c);
        assert!(parse_mixed_cochain(&mixed_cochain_to_json(&c), 1, 2).is_err());
    }
}
