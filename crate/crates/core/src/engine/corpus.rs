use crate::error::arg;
use crate::freealg::{format_terms, parse_terms, MonomialSpace, OpSet, Poly, TermList};
use crate::Result;
use serde::Serialize;

/// A named polynomial identity.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityRecord {
    pub name: String,
    pub degree: usize,
    pub opset: OpSet,
    pub source: String,
    /// Canonical text: one `coefficient monomial` line per term.
    pub text: String,
    pub terms: usize,
    #[serde(skip)]
    pub list: TermList,
}

impl IdentityRecord {
    pub fn parse(name: &str, source: &str, text: &str) -> Result<Self> {
        let list = parse_terms(text)?;
        let opset = list.opset();
        let space = MonomialSpace::new(list.degree, opset)?;
        let poly = list.to_poly(&space)?;
        Ok(Self::from_poly(name, source, &space, &poly))
    }

    pub fn from_poly(name: &str, source: &str, space: &MonomialSpace, poly: &Poly) -> Self {
        let text = format_terms(poly, space);
        let list = parse_terms(&text).unwrap_or(TermList { degree: space.degree(), terms: Vec::new() });
        IdentityRecord {
            name: name.to_string(),
            degree: space.degree(),
            opset: space.opset(),
            source: source.to_string(),
            terms: poly.len(),
            text,
            list,
        }
    }

    /// The identity as a polynomial of `space` (same degree, containing its products).
    pub fn poly(&self, space: &MonomialSpace) -> Result<Poly> {
        if space.degree() != self.degree || !space.opset().contains(self.opset) {
            return arg(format!(
                "identity {} ({} degree {}) does not live in the {} degree-{} space",
                self.name, self.opset, self.degree, space.opset(), space.degree()
            ));
        }
        self.list.to_poly(space)
    }
}

const RECORDS: [(&str, &str, &str); 9] = [
    ("malcev", "Malcev identity", include_str!("../../data/malcev_deg4.txt")),
    ("mixed_jacobi", "Jacobi identity corrected by the trilinear product", include_str!("../../data/mixed_jacobi.txt")),
    ("ly_a", "cyclic sum of ([a,b],c,d)", include_str!("../../data/ly_deg4_a.txt")),
    ("ly_b", "bracket acting on the trilinear product", include_str!("../../data/ly_deg4_b.txt")),
    ("ternary_derivation", "trilinear product acting as a derivation of itself", include_str!("../../data/ternary_derivation.txt")),
    ("filippov_h", "Filippov's degree-5 identity", include_str!("../../data/filippov_h.txt")),
    ("k18", "degree-5 binary identity with 18 terms", include_str!("../../data/k18.txt")),
    ("t141", "degree-7 ternary identity with 141 terms", include_str!("../../data/t141.txt")),
    ("m31", "degree-5 mixed identity with 31 terms", include_str!("../../data/m31.txt")),
];

/// The shipped identities, in canonical form.
pub fn corpus() -> Vec<IdentityRecord> {
    RECORDS
        .iter()
        .map(|(name, source, text)| IdentityRecord::parse(name, source, text).expect("shipped identity parses"))
        .collect()
}

pub fn corpus_record(name: &str) -> Result<IdentityRecord> {
    corpus().into_iter().find(|r| r.name == name).map_or_else(
        || arg(format!("no identity named {name:?}; known: {}", RECORDS.map(|r| r.0).join(", "))),
        Ok,
    )
}
