use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, UniPoly};
use crate::planeauto::{CosetRep, PolyMap, UElement};

/// A word `w₀ w₁ … w_n` with `w₀ ∈ U` and the letters alternating between the
/// representative systems `I` and `J`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AmalgamWord {
    pub head: UElement,
    pub reps: Vec<CosetRep>,
}

impl AmalgamWord {
    /// Checked constructor: letters must alternate sides and every `J`
    /// polynomial must lie in `y²C[y] \ {0}`.
    pub fn new(head: UElement, reps: Vec<CosetRep>) -> Result<Self> {
        let w = AmalgamWord { head, reps };
        w.validate()?;
        Ok(w)
    }

    pub fn from_head(head: UElement) -> Self {
        AmalgamWord {
            head,
            reps: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for r in &self.reps {
            if let CosetRep::J(p) = r {
                CosetRep::j(p.clone())?;
            }
        }
        if let Some(k) = self
            .reps
            .windows(2)
            .position(|w| w[0].side() == w[1].side())
        {
            return Err(Error::InvalidWord(format!(
                "letters {k} and {} lie in the same factor",
                k + 1
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The diagrammatic product `head · reps[0] · … · reps[n-1]`.
    pub fn realize(&self, cap: u32) -> Result<PolyMap> {
        let mut acc = self.head.to_map();
        for r in &self.reps {
            acc = acc.then(&r.to_map(), cap)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WordJson::from(self)).expect("word serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: WordJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::InvalidWord(e.to_string()))?;
        j.try_into()
    }
}

impl fmt::Display for AmalgamWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        for r in &self.reps {
            write!(f, " · {r}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct HeadJson {
    a: GaussianRational,
    b: GaussianRational,
    e: GaussianRational,
    f: GaussianRational,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type")]
enum RepJson {
    I { lambda: GaussianRational },
    J { p: Vec<GaussianRational> },
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    head: HeadJson,
    reps: Vec<RepJson>,
}

impl From<&AmalgamWord> for WordJson {
    fn from(w: &AmalgamWord) -> Self {
        let h = &w.head;
        WordJson {
            head: HeadJson {
                a: h.a.clone(),
                b: h.b.clone(),
                e: h.e.clone(),
                f: h.f.clone(),
            },
            reps: w
                .reps
                .iter()
                .map(|r| match r {
                    CosetRep::I(l) => RepJson::I { lambda: l.clone() },
                    CosetRep::J(p) => RepJson::J {
                        p: p.coeffs().to_vec(),
                    },
                })
                .collect(),
        }
    }
}

impl TryFrom<WordJson> for AmalgamWord {
    type Error = Error;

    fn try_from(j: WordJson) -> Result<Self> {
        let head = UElement::new(j.head.a, j.head.b, j.head.e, j.head.f)
            .map_err(|_| Error::InvalidWord("head has a = 0".into()))?;
        let reps = j
            .reps
            .into_iter()
            .map(|r| match r {
                RepJson::I { lambda } => Ok(CosetRep::I(lambda)),
                RepJson::J { p } => CosetRep::j(UniPoly::from_coeffs(p)),
            })
            .collect::<Result<Vec<_>>>()?;
        AmalgamWord::new(head, reps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_layout() {
        let w = AmalgamWord::new(
            UElement::identity(),
            vec![
                CosetRep::J(UniPoly::from_ints(&[0, 0, 1])),
                CosetRep::I(GaussianRational::ratio(1, 2)),
            ],
        )
        .unwrap();
        let v = w.to_json();
        assert_eq!(v["reps"][0]["type"], "J");
        assert_eq!(v["reps"][0]["p"][2]["re"]["num"], "1");
        assert_eq!(v["reps"][1]["type"], "I");
        assert_eq!(v["reps"][1]["lambda"]["re"]["den"], "2");
        assert_eq!(v["head"]["a"]["re"]["num"], "1");
        assert_eq!(AmalgamWord::from_json(&v).unwrap(), w);
    }

    #[test]
    fn rejects_non_alternating() {
        let r = AmalgamWord::new(
            UElement::identity(),
            vec![
                CosetRep::I(GaussianRational::int(1)),
                CosetRep::I(GaussianRational::int(2)),
            ],
        );
        assert!(matches!(r, Err(Error::InvalidWord(_))));
        let bad = serde_json::json!({"head": {"a": {"re":{"num":"0","den":"1"},"im":{"num":"0","den":"1"}},
            "b": {"re":{"num":"0","den":"1"},"im":{"num":"0","den":"1"}},
            "e": {"re":{"num":"0","den":"1"},"im":{"num":"0","den":"1"}},
            "f": {"re":{"num":"0","den":"1"},"im":{"num":"0","den":"1"}}}, "reps": []});
        assert!(AmalgamWord::from_json(&bad).is_err());
    }
}
