//! JSON form of diagrams: `{"cups": [[l, r], …], "caps": [[l, r], …]}` with
//! integer position codes. Either part may be absent.

use std::path::Path;

use khovanov_p::{CapDiagram, CircleDiagram, CupDiagram};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// A cup diagram, a cap diagram, or both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    /// Cups as `(left, right)` codes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cups: Option<Vec<(i64, i64)>>,
    /// Caps as `(left, right)` codes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Vec<(i64, i64)>>,
}

impl DiagramJson {
    /// Both parts of a circle diagram.
    pub fn from_circle(d: &CircleDiagram) -> Self {
        DiagramJson { cups: Some(d.bottom.arcs().to_vec()), caps: Some(d.top.arcs().to_vec()) }
    }

    /// A lone cup diagram.
    pub fn from_cup(c: &CupDiagram) -> Self {
        DiagramJson { cups: Some(c.arcs().to_vec()), caps: None }
    }

    /// A lone cap diagram.
    pub fn from_cap(c: &CapDiagram) -> Self {
        DiagramJson { cups: None, caps: Some(c.arcs().to_vec()) }
    }

    /// The validated cup part.
    pub fn cup(&self) -> CliResult<Option<CupDiagram>> {
        Ok(self.cups.clone().map(CupDiagram::new).transpose()?)
    }

    /// The validated cap part.
    pub fn cap(&self) -> CliResult<Option<CapDiagram>> {
        Ok(self.caps.clone().map(CapDiagram::new).transpose()?)
    }

    /// The circle diagram; both parts must be present.
    pub fn circle(&self) -> CliResult<CircleDiagram> {
        match (self.cup()?, self.cap()?) {
            (Some(a), Some(b)) => Ok(CircleDiagram::new(a, b)),
            _ => Err(CliError::Usage("a circle diagram needs both \"cups\" and \"caps\"".into())),
        }
    }
}

/// Reads a diagram from a JSON file.
pub fn read_diagram(path: &Path) -> CliResult<DiagramJson> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}
