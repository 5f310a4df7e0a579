use painleve_core::{Matrix, RatFunc, Space, SpaceRef};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Linear system `dY/dz = A(z) Y` with its declared finite singular points.
#[derive(Clone, Debug, PartialEq)]
pub struct FuchsianSystem {
    z: usize,
    singularities: Vec<RatFunc>,
    matrix: Matrix,
}

#[derive(Serialize, Deserialize)]
struct SystemFile {
    variables: Vec<String>,
    z: String,
    singularities: Vec<String>,
    matrix: Vec<Vec<String>>,
}

impl FuchsianSystem {
    pub fn new(matrix: Matrix, z: &str, singularities: Vec<RatFunc>) -> Result<FuchsianSystem> {
        if !matrix.is_square() {
            return Err(Error::Format(format!("{}x{} matrix is not square", matrix.rows(), matrix.cols())));
        }
        let z = matrix.space().require(z)?;
        Ok(FuchsianSystem { z, singularities, matrix })
    }

    pub fn dimension(&self) -> usize {
        self.matrix.rows()
    }

    pub fn z(&self) -> usize {
        self.z
    }

    pub fn z_name(&self) -> &str {
        self.matrix.space().name(self.z)
    }

    pub fn singularities(&self) -> &[RatFunc] {
        &self.singularities
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn to_json(&self) -> String {
        let sp = self.matrix.space();
        let mut mask = self.matrix.entries().iter().fold(0u32, |m, e| m | e.var_mask());
        mask |= self.singularities.iter().fold(0u32, |m, e| m | e.var_mask());
        mask |= 1 << self.z;
        let variables = (0..sp.len()).filter(|i| mask & (1 << i) != 0).map(|i| sp.name(i).to_string()).collect();
        let file = SystemFile {
            variables,
            z: self.z_name().to_string(),
            singularities: self.singularities.iter().map(ToString::to_string).collect(),
            matrix: self.matrix.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<FuchsianSystem> {
        let file: SystemFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let space = space_for(&file.variables)?;
        let parse = |s: &str| painleve_core::parse::parse(s, &space).map_err(Error::from);
        let rows = file
            .matrix
            .iter()
            .map(|r| r.iter().map(|e| parse(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::Format("matrix must be square and nonempty".into()));
        }
        let matrix = Matrix::from_rows(rows)?;
        let singularities = file.singularities.iter().map(|e| parse(e)).collect::<Result<Vec<_>>>()?;
        FuchsianSystem::new(matrix, &file.z, singularities)
    }
}

/// The standard variables followed by any extra names listed in a file.
pub(crate) fn space_for(variables: &[String]) -> Result<SpaceRef> {
    let standard = Space::standard();
    let extra: Vec<&String> = variables.iter().filter(|v| standard.index(v).is_none()).collect();
    if extra.is_empty() {
        Ok(standard)
    } else {
        Ok(standard.extended(&extra)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use painleve_core::rf;

    #[test]
    fn json_round_trip() {
        let m = Matrix::parse(&[&["1/z", "b/(z-1)"], &["0", "(a+c)/(z*(z+b))"]]).unwrap();
        let sys = FuchsianSystem::new(m, "z", vec![rf("0"), rf("1"), rf("-b")]).unwrap();
        let text = sys.to_json();
        assert_eq!(FuchsianSystem::from_json(&text).unwrap(), sys);
        assert!(text.contains("\"variables\""));
        assert_eq!(FuchsianSystem::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn bad_files_are_rejected() {
        assert!(matches!(FuchsianSystem::from_json("{"), Err(Error::Format(_))));
        let text = r#"{"variables":["z"],"z":"z","singularities":[],"matrix":[["1/z","(z"],["0","0"]]}"#;
        assert!(matches!(FuchsianSystem::from_json(text), Err(Error::Core(_))));
        let text = r#"{"variables":["z"],"z":"z","singularities":[],"matrix":[["1/z"],["0","0"]]}"#;
        assert!(matches!(FuchsianSystem::from_json(text), Err(Error::Format(_))));
    }

    #[test]
    fn extra_variables_extend_the_space() {
        let text = r#"{"variables":["z","s"],"z":"z","singularities":["s"],"matrix":[["s/z"]]}"#;
        let sys = FuchsianSystem::from_json(text).unwrap();
        assert_eq!(sys.matrix().space().names().last().unwrap(), "s");
    }
}
