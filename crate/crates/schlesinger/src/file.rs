use painleve_core::{Matrix, RatFunc};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pvi::{extract_pvi, PVIData};
use crate::system::SchlesingerSystem;

/// On-disk form of a normalized system together with its Painleve VI data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchlesingerFile {
    pub t: String,
    pub theta: [String; 4],
    #[serde(rename = "Q")]
    pub q: [[[String; 2]; 2]; 3],
    pub lambda: String,
    pub mu: String,
}

fn parse(text: &str) -> Result<RatFunc> {
    RatFunc::parse(text).map_err(|e| Error::Format(format!("`{text}`: {e}")))
}

pub fn to_json(s: &SchlesingerSystem) -> Result<String> {
    let d = extract_pvi(s)?;
    let q = s.residues().clone().map(|m| {
        [
            [m.get(0, 0).to_string(), m.get(0, 1).to_string()],
            [m.get(1, 0).to_string(), m.get(1, 1).to_string()],
        ]
    });
    let file = SchlesingerFile {
        t: d.t.to_string(),
        theta: d.theta.clone().map(|x| x.to_string()),
        q,
        lambda: d.lambda.to_string(),
        mu: d.mu.to_string(),
    };
    let mut text = serde_json::to_string_pretty(&file).map_err(|e| Error::Format(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

/// Parse a file and check that the stored `theta`, `lambda` and `mu` agree
/// with the residues.
pub fn from_json(text: &str) -> Result<(SchlesingerSystem, PVIData)> {
    let file: SchlesingerFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let mut residues = Vec::with_capacity(3);
    for q in &file.q {
        let rows: Vec<Vec<RatFunc>> = q
            .iter()
            .map(|row| row.iter().map(|e| parse(e)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        residues.push(Matrix::from_rows(rows)?);
    }
    let t = parse(&file.t)?;
    let theta: Vec<RatFunc> = file.theta.iter().map(|e| parse(e)).collect::<Result<_>>()?;
    let s = SchlesingerSystem::new(
        [t.clone(), parse("0")?, parse("1")?],
        residues.try_into().expect("three residues"),
    )?;
    let d = extract_pvi(&s)?;
    let stored = PVIData::new(theta.try_into().expect("four"), parse(&file.lambda)?, parse(&file.mu)?, t)?;
    if (&d.theta, &d.lambda, &d.mu) != (&stored.theta, &stored.lambda, &stored.mu) {
        return Err(Error::Format("theta, lambda or mu disagree with the residues".into()));
    }
    Ok((s, d))
}
