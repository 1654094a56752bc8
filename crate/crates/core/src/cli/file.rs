//! Text format for curves.
//!
//! A curve file is a TOML document:
//!
//! ```toml
//! ambient = "P4"
//! sphere_claim = true
//! degree = 2
//! # one row per coordinate x0, x1, ...; entry j multiplies s^(d-j) t^j
//! coeffs = [
//!   ["1", "0", "1"],
//!   ["1", "0", "-1"],
//!   ["0", "2", "0"],
//!   ["0", "0", "0"],
//!   ["0", "0", "0"],
//! ]
//!
//! [metadata]
//! name = "unit circle"
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::{Ambient, RationalCurve};
use crate::error::{Error, Result};
use crate::forms::{fmt_rat, parse_rat, BinaryForm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AmbientTag {
    P3,
    P4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    pub ambient: AmbientTag,
    #[serde(default)]
    pub sphere_claim: bool,
    pub degree: usize,
    pub coeffs: Vec<Vec<String>>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl CurveFile {
    pub fn from_curve(c: &RationalCurve, metadata: BTreeMap<String, String>) -> CurveFile {
        let d = c.degree();
        let coeffs = c
            .forms()
            .iter()
            .map(|f| (0..=d).map(|j| fmt_rat(f.coeff(j))).collect())
            .collect();
        CurveFile {
            ambient: if c.dim() == 3 { AmbientTag::P3 } else { AmbientTag::P4 },
            sphere_claim: c.dim() == 4 && c.is_on_sphere(),
            degree: d,
            coeffs,
            metadata,
        }
    }

    /// Builds the curve, rejecting a table of the wrong shape, a common
    /// factor of the forms, and a false sphere claim.
    pub fn to_curve(&self) -> Result<RationalCurve> {
        let ambient = match self.ambient {
            AmbientTag::P3 => Ambient::Rp3,
            AmbientTag::P4 => Ambient::Rp4,
        };
        if self.coeffs.len() != ambient.dim() + 1 {
            return Err(Error::Parse(format!(
                "expected {} coordinate rows, found {}",
                ambient.dim() + 1,
                self.coeffs.len()
            )));
        }
        let mut forms = Vec::with_capacity(self.coeffs.len());
        for (i, row) in self.coeffs.iter().enumerate() {
            if row.len() != self.degree + 1 {
                return Err(Error::Parse(format!(
                    "row {i} has {} coefficients, expected {}",
                    row.len(),
                    self.degree + 1
                )));
            }
            let c = row.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
            forms.push(BinaryForm::new(c));
        }
        let c = RationalCurve::new(forms, ambient).map_err(|e| Error::Parse(e.to_string()))?;
        if self.sphere_claim && !c.is_on_sphere() {
            return Err(Error::Parse("sphere_claim is set but the curve is not on the sphere".into()));
        }
        Ok(c)
    }

    pub fn parse(text: &str) -> Result<CurveFile> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn render(&self) -> String {
        toml::to_string(self).expect("curve files serialize")
    }

    /// Reads a file, or standard input for `-`.
    pub fn read(path: &Path) -> Result<CurveFile> {
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(format!("stdin: {e}")))?
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        };
        CurveFile::parse(&text)
    }

    pub fn name(&self) -> Option<&str> {
        self.metadata.get("name").map(String::as_str)
    }
}

pub fn load_curve(path: &Path) -> Result<RationalCurve> {
    CurveFile::read(path)?.to_curve()
}
