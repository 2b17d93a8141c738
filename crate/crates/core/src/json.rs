//! JSON exchange formats.
//!
//! Every object has a canonical serialization: element sets are sorted
//! integer lists, lists of sets follow the canonical order of their module,
//! and field order is fixed by the structs below.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arrangement::{AffineInequality, CentralArrangement, PolyhedralCover, Rational};
use crate::catalog::{NamedInstance, Payload};
use crate::codes::{Code, CodeMorphism};
use crate::error::{Error, Result};
use crate::ideals::{Monomial, Pseudomonomial, PseudomonomialIdeal, SquarefreeMonomialIdeal};
use crate::matroid::OrientedMatroid;
use crate::sign::{ElementSet, SignedElementSet, SignedVector};
use crate::topology::SimplicialComplex;

/// `{"n": int, "codewords": [[int]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub n: usize,
    pub codewords: Vec<Vec<usize>>,
}

/// `{"n": int, "covectors": [string]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovectorsJson {
    pub n: usize,
    pub covectors: Vec<String>,
}

/// `{"n": int, "circuits": [string]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitsJson {
    pub n: usize,
    pub circuits: Vec<String>,
}

/// `{"d": int, "forms": [["p/q", …]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub d: usize,
    pub forms: Vec<Vec<String>>,
}

/// Regions as lists of inequalities `["a1", …, "ad", "b"]` meaning `a·x + b > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub d: usize,
    pub regions: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub ambient: Vec<Vec<String>>,
}

/// `{"source": code, "trunks": [[int] | null]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<CodeJson>,
    pub trunks: Vec<Option<Vec<usize>>>,
}

/// `{"n": int, "x": [[int]], "y": [[int]]}`, one entry per generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub x: Vec<Vec<usize>>,
    pub y: Vec<Vec<usize>>,
}

/// `{"n": int, "pos": [[int]], "neg": [[int]]}`, one entry per generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudomonomialIdealJson {
    pub n: usize,
    pub pos: Vec<Vec<usize>>,
    pub neg: Vec<Vec<usize>>,
}

/// `{"vertices": int, "facets": [[int]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

pub fn set_to_vec(s: ElementSet) -> Vec<usize> {
    s.to_vec()
}

pub fn vec_to_set(items: &[usize], n: usize) -> Result<ElementSet> {
    ElementSet::from_elements(items.iter().copied(), n)
}

fn vectors_to_strings(vs: &[SignedVector]) -> Vec<String> {
    vs.iter().map(|v| v.to_string()).collect()
}

fn parse_vectors(n: usize, items: &[String]) -> Result<Vec<SignedVector>> {
    items
        .iter()
        .map(|s| {
            let v: SignedVector = s.parse()?;
            if v.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: v.len(),
                });
            }
            Ok(v)
        })
        .collect()
}

fn parse_rationals(items: &[String]) -> Result<Vec<Rational>> {
    items.iter().map(|s| s.parse()).collect()
}

fn rationals_to_strings(items: &[Rational]) -> Vec<String> {
    items.iter().map(|r| r.to_string()).collect()
}

impl CodeJson {
    pub fn from_code(c: &Code) -> Self {
        CodeJson {
            n: c.n(),
            codewords: c.to_lists(),
        }
    }

    pub fn to_code(&self) -> Result<Code> {
        Code::from_lists(self.n, &self.codewords)
    }
}

impl CovectorsJson {
    pub fn from_matroid(m: &OrientedMatroid) -> Self {
        CovectorsJson {
            n: m.n(),
            covectors: vectors_to_strings(m.covectors()),
        }
    }

    pub fn vectors(&self) -> Result<Vec<SignedVector>> {
        parse_vectors(self.n, &self.covectors)
    }
}

impl CircuitsJson {
    pub fn from_matroid(m: &OrientedMatroid) -> Self {
        CircuitsJson {
            n: m.n(),
            circuits: vectors_to_strings(m.circuits()),
        }
    }

    pub fn vectors(&self) -> Result<Vec<SignedVector>> {
        parse_vectors(self.n, &self.circuits)
    }
}

impl ArrangementJson {
    pub fn from_arrangement(a: &CentralArrangement) -> Self {
        ArrangementJson {
            d: a.d(),
            forms: a.forms().iter().map(|f| rationals_to_strings(f)).collect(),
        }
    }

    pub fn to_arrangement(&self) -> Result<CentralArrangement> {
        let forms = self
            .forms
            .iter()
            .map(|f| parse_rationals(f))
            .collect::<Result<Vec<_>>>()?;
        CentralArrangement::new(self.d, forms)
    }
}

impl CoverJson {
    pub fn from_cover(p: &PolyhedralCover) -> Self {
        let ineqs = |list: &[AffineInequality]| -> Vec<Vec<String>> {
            list.iter().map(|i| rationals_to_strings(i)).collect()
        };
        CoverJson {
            d: p.d(),
            regions: p.regions().iter().map(|r| ineqs(r)).collect(),
            ambient: ineqs(p.ambient()),
        }
    }

    pub fn to_cover(&self) -> Result<PolyhedralCover> {
        let ineqs = |list: &[Vec<String>]| -> Result<Vec<AffineInequality>> {
            list.iter().map(|i| parse_rationals(i)).collect()
        };
        let regions = self
            .regions
            .iter()
            .map(|r| ineqs(r))
            .collect::<Result<Vec<_>>>()?;
        PolyhedralCover::new(self.d, regions, ineqs(&self.ambient)?)
    }
}

pub fn trunks_to_json(trunks: &[Option<ElementSet>]) -> Vec<Option<Vec<usize>>> {
    trunks.iter().map(|t| t.map(set_to_vec)).collect()
}

pub fn trunks_from_json(trunks: &[Option<Vec<usize>>], n: usize) -> Result<Vec<Option<ElementSet>>> {
    trunks
        .iter()
        .map(|t| t.as_ref().map(|s| vec_to_set(s, n)).transpose())
        .collect()
}

impl MorphismJson {
    pub fn from_morphism(f: &CodeMorphism) -> Self {
        MorphismJson {
            source: Some(CodeJson::from_code(f.source())),
            trunks: trunks_to_json(f.trunks()),
        }
    }

    /// Builds the morphism; `fallback` supplies the source code when the JSON omits it.
    pub fn to_morphism(&self, fallback: Option<&Code>) -> Result<CodeMorphism> {
        let source = match (&self.source, fallback) {
            (Some(s), _) => s.to_code()?,
            (None, Some(c)) => c.clone(),
            (None, None) => return Err(Error::argument("morphism needs a source code")),
        };
        let trunks = trunks_from_json(&self.trunks, source.n())?;
        CodeMorphism::new(source, trunks)
    }
}

impl IdealJson {
    pub fn from_ideal(j: &SquarefreeMonomialIdeal) -> Self {
        IdealJson {
            n: j.n(),
            x: j.generators().iter().map(|g| set_to_vec(g.x)).collect(),
            y: j.generators().iter().map(|g| set_to_vec(g.y)).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<SquarefreeMonomialIdeal> {
        if self.x.len() != self.y.len() {
            return Err(Error::Dimension {
                expected: self.x.len(),
                found: self.y.len(),
            });
        }
        let gens = self
            .x
            .iter()
            .zip(&self.y)
            .map(|(x, y)| Ok(Monomial::new(vec_to_set(x, self.n)?, vec_to_set(y, self.n)?)))
            .collect::<Result<Vec<_>>>()?;
        SquarefreeMonomialIdeal::new(self.n, gens)
    }
}

impl PseudomonomialIdealJson {
    pub fn from_ideal(i: &PseudomonomialIdeal) -> Self {
        PseudomonomialIdealJson {
            n: i.n(),
            pos: i.generators().iter().map(|g| set_to_vec(g.sigma)).collect(),
            neg: i.generators().iter().map(|g| set_to_vec(g.tau)).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<PseudomonomialIdeal> {
        if self.pos.len() != self.neg.len() {
            return Err(Error::Dimension {
                expected: self.pos.len(),
                found: self.neg.len(),
            });
        }
        let gens = self
            .pos
            .iter()
            .zip(&self.neg)
            .map(|(p, q)| Ok(Pseudomonomial::new(vec_to_set(p, self.n)?, vec_to_set(q, self.n)?)))
            .collect::<Result<Vec<_>>>()?;
        PseudomonomialIdeal::new(self.n, gens)
    }
}

impl ComplexJson {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        ComplexJson {
            vertices: c.vertex_count(),
            facets: c.facets().into_iter().map(set_to_vec).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| vec_to_set(f, self.vertices))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(self.vertices, facets)
    }
}

/// A signed element set as signed integers (`-3` for `3̄`).
pub fn signed_set_to_json(s: &SignedElementSet) -> Vec<i64> {
    s.to_signed_ints()
}

/// Any object accepted on input, recognised by its keys.
#[derive(Clone, Debug)]
pub enum Object {
    Code(Code),
    Matroid(OrientedMatroid),
    Arrangement(CentralArrangement),
    Cover(PolyhedralCover),
    Morphism(CodeMorphism),
    Ideal(SquarefreeMonomialIdeal),
    PseudomonomialIdeal(PseudomonomialIdeal),
    Complex(SimplicialComplex),
}

fn decode<T: for<'de> Deserialize<'de>>(value: Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::parse(e.to_string()))
}

impl Object {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        Self::from_value(value)
    }

    pub fn from_value(value: Value) -> Result<Self> {
        let Some(map) = value.as_object() else {
            return Err(Error::parse("expected a JSON object"));
        };
        let has = |k: &str| map.contains_key(k);
        if has("codewords") {
            Ok(Object::Code(decode::<CodeJson>(value)?.to_code()?))
        } else if has("covectors") {
            let j: CovectorsJson = decode(value)?;
            Ok(Object::Matroid(OrientedMatroid::from_covectors(j.n, &j.vectors()?)?))
        } else if has("circuits") {
            let j: CircuitsJson = decode(value)?;
            Ok(Object::Matroid(OrientedMatroid::from_circuits(j.n, &j.vectors()?)?))
        } else if has("forms") {
            Ok(Object::Arrangement(decode::<ArrangementJson>(value)?.to_arrangement()?))
        } else if has("regions") {
            Ok(Object::Cover(decode::<CoverJson>(value)?.to_cover()?))
        } else if has("trunks") {
            Ok(Object::Morphism(decode::<MorphismJson>(value)?.to_morphism(None)?))
        } else if has("x") && has("y") {
            Ok(Object::Ideal(decode::<IdealJson>(value)?.to_ideal()?))
        } else if has("pos") && has("neg") {
            Ok(Object::PseudomonomialIdeal(
                decode::<PseudomonomialIdealJson>(value)?.to_ideal()?,
            ))
        } else if has("facets") {
            Ok(Object::Complex(decode::<ComplexJson>(value)?.to_complex()?))
        } else {
            Err(Error::parse(
                "unrecognised object: expected keys codewords, covectors, circuits, forms, regions, trunks, x/y, pos/neg or facets",
            ))
        }
    }

    pub fn from_instance(instance: NamedInstance) -> Self {
        match instance.payload {
            Payload::Code(c) => Object::Code(c),
            Payload::Matroid(m) => Object::Matroid(m),
            Payload::Arrangement { arrangement, .. } => Object::Arrangement(arrangement),
            Payload::Affine { arrangement, .. } => Object::Arrangement(arrangement),
            Payload::Morphism(f) => Object::Morphism(f),
            Payload::Cover(p) => Object::Cover(p),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Object::Code(_) => "code",
            Object::Matroid(_) => "matroid",
            Object::Arrangement(_) => "arrangement",
            Object::Cover(_) => "cover",
            Object::Morphism(_) => "morphism",
            Object::Ideal(_) => "ideal",
            Object::PseudomonomialIdeal(_) => "pseudomonomial ideal",
            Object::Complex(_) => "complex",
        }
    }

    /// Canonical JSON of the object.
    pub fn to_value(&self) -> Value {
        let v = match self {
            Object::Code(c) => serde_json::to_value(CodeJson::from_code(c)),
            Object::Matroid(m) => serde_json::to_value(CovectorsJson::from_matroid(m)),
            Object::Arrangement(a) => serde_json::to_value(ArrangementJson::from_arrangement(a)),
            Object::Cover(p) => serde_json::to_value(CoverJson::from_cover(p)),
            Object::Morphism(f) => serde_json::to_value(MorphismJson::from_morphism(f)),
            Object::Ideal(j) => serde_json::to_value(IdealJson::from_ideal(j)),
            Object::PseudomonomialIdeal(i) => serde_json::to_value(PseudomonomialIdealJson::from_ideal(i)),
            Object::Complex(c) => serde_json::to_value(ComplexJson::from_complex(c)),
        };
        v.expect("plain data serializes")
    }
}

/// Serializes the named instance in the format of its payload, tagged by name and kind.
pub fn instance_to_value(instance: &NamedInstance) -> Value {
    let payload = match &instance.payload {
        Payload::Arrangement { arrangement, matroid } => serde_json::json!({
            "arrangement": ArrangementJson::from_arrangement(arrangement),
            "matroid": CovectorsJson::from_matroid(matroid),
        }),
        Payload::Affine { arrangement, matroid } => serde_json::json!({
            "arrangement": ArrangementJson::from_arrangement(arrangement),
            "matroid": CovectorsJson::from_matroid(matroid.base()),
            "g": matroid.g(),
        }),
        other => Object::from_instance(NamedInstance {
            name: instance.name.clone(),
            payload: other.clone(),
        })
        .to_value(),
    };
    serde_json::json!({
        "name": instance.name,
        "kind": instance.payload.kind(),
        "payload": payload,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn code_round_trip() {
        let c = catalog::fig1_code();
        let text = serde_json::to_string(&CodeJson::from_code(&c)).unwrap();
        assert_eq!(text, r#"{"n":3,"codewords":[[],[1],[2],[1,2],[2,3]]}"#);
        match Object::parse(&text).unwrap() {
            Object::Code(d) => assert_eq!(c, d),
            other => panic!("{}", other.kind()),
        }
    }

    #[test]
    fn matroid_inputs() {
        let cov = r#"{"n":3,"covectors":["000","+++","---"]}"#;
        let cir = r#"{"n":3,"circuits":["+-0","-+0","+0-","-0+","0+-","0-+"]}"#;
        let (Object::Matroid(a), Object::Matroid(b)) = (Object::parse(cov).unwrap(), Object::parse(cir).unwrap()) else {
            panic!("expected matroids")
        };
        assert_eq!(a, b);
        assert!(Object::parse(r#"{"n":2,"covectors":["00","+0"]}"#).is_err());
        assert!(Object::parse(r#"{"n":2,"covectors":["000"]}"#).is_err());
    }

    #[test]
    fn arrangement_and_cover_round_trip() {
        let text = r#"{"d":2,"forms":[["1","0"],["-1/2","0"],["0","3"]]}"#;
        let Object::Arrangement(a) = Object::parse(text).unwrap() else { panic!() };
        assert_eq!(serde_json::to_string(&ArrangementJson::from_arrangement(&a)).unwrap(), text);
        let cover = catalog::fig1_cover();
        let v = serde_json::to_value(CoverJson::from_cover(&cover)).unwrap();
        let Object::Cover(back) = Object::from_value(v).unwrap() else { panic!() };
        assert_eq!(back, cover);
    }

    #[test]
    fn morphism_and_ideal_round_trip() {
        let f = catalog::fig3_morphism();
        let v = serde_json::to_value(MorphismJson::from_morphism(&f)).unwrap();
        assert_eq!(v["trunks"], serde_json::json!([[1, 3, 5], [2, 4, 5]]));
        let Object::Morphism(g) = Object::from_value(v).unwrap() else { panic!() };
        assert_eq!(f, g);
        let text = r#"{"n":3,"x":[[1,2],[]],"y":[[],[3]]}"#;
        let Object::Ideal(j) = Object::parse(text).unwrap() else { panic!() };
        assert_eq!(serde_json::to_string(&IdealJson::from_ideal(&j)).unwrap(), r#"{"n":3,"x":[[],[1,2]],"y":[[3],[]]}"#);
        let text = r#"{"n":3,"pos":[[3],[1,3]],"neg":[[2],[]]}"#;
        let Object::PseudomonomialIdeal(i) = Object::parse(text).unwrap() else { panic!() };
        assert_eq!(i.generators().len(), 2);
    }

    #[test]
    fn null_trunks_and_bad_input() {
        let text = r#"{"source":{"n":2,"codewords":[[],[1]]},"trunks":[null,[1]]}"#;
        let Object::Morphism(f) = Object::parse(text).unwrap() else { panic!() };
        assert_eq!(f.apply(), Code::parse_compact(2, "∅ 2").unwrap());
        assert!(matches!(Object::parse("[1,2]"), Err(Error::Parse(_))));
        assert!(matches!(Object::parse("{\"foo\":1}"), Err(Error::Parse(_))));
        assert!(Object::parse(r#"{"n":2,"codewords":[[3]]}"#).is_err());
    }
}
