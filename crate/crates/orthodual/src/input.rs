use std::path::Path;
use std::sync::Arc;

use orthoduality::catalog::{builtin, builtin_lattice};
use orthoduality::filters::dual_space;
use orthoduality::io::{parse_olat, parse_uvo, OlatError, UvoError};
use orthoduality::lattice::{Lattice, Ortholattice};
use orthoduality::uvo::UvoSpace;
use orthoduality::Error;
use serde_json::json;

use crate::report::Failure;

pub enum Input {
    Ortholattice(Arc<Ortholattice>),
    /// A lattice without orthocomplement (catalog `M3_lattice_only`, `N5_lattice_only`).
    Lattice(Lattice),
    Space(UvoSpace),
}

fn alias(name: &str) -> &str {
    match name {
        "2x2" | "2×2" => "TwoByTwo",
        "M3" => "M3_lattice_only",
        "N5" => "N5_lattice_only",
        other => other,
    }
}

/// A file path if it exists, otherwise a catalog name.
pub fn load(arg: &str) -> Result<Input, Failure> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
        return match path.extension().and_then(|e| e.to_str()) {
            Some("olat") => match parse_olat(&text) {
                Ok(l) => Ok(Input::Ortholattice(Arc::new(l))),
                Err(OlatError::Parse(e)) => Err(Failure::Usage(format!("{arg}:{}: {}", e.span, e.msg))),
                Err(OlatError::Validation(v)) => Err(Failure::Math {
                    message: format!("{arg}: {v}"),
                    witness: json!({ "law": v.law(), "elements": v.witness() }),
                }),
            },
            Some("uvo") => match parse_uvo(&text) {
                Ok(x) => Ok(Input::Space(x)),
                Err(UvoError::Parse(e)) => Err(Failure::Usage(format!("{arg}:{}: {}", e.span, e.msg))),
                Err(UvoError::Space { error, span }) => Err(Failure::Math {
                    message: match span {
                        Some(s) => format!("{arg}:{s}: {error}"),
                        None => format!("{arg}: {error}"),
                    },
                    witness: json!({ "law": space_law(&error), "message": error.to_string() }),
                }),
            },
            _ => Err(Failure::Usage(format!("{arg}: expected a .olat or .uvo file"))),
        };
    }
    let name = alias(arg);
    match builtin(name) {
        Ok(l) => Ok(Input::Ortholattice(Arc::new(l))),
        Err(Error::UnknownName(_)) => match builtin_lattice(name) {
            Ok(l) => Ok(Input::Lattice(l)),
            Err(_) => Err(Failure::Usage(format!("`{arg}` is neither a file nor a catalog name"))),
        },
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn space_law(e: &orthoduality::SpaceError) -> &'static str {
    use orthoduality::SpaceError::*;
    match e {
        NotAPartialOrder { .. } => "NotAPartialOrder",
        IrreflexivityViolated(_) => "IrreflexivityViolated",
        NotSymmetric(..) => "NotSymmetric",
        Malformed(_) => "Malformed",
    }
}

pub fn ortholattice(arg: &str) -> Result<Arc<Ortholattice>, Failure> {
    match load(arg)? {
        Input::Ortholattice(l) => Ok(l),
        Input::Lattice(_) => Err(Failure::Usage(format!("`{arg}` has no orthocomplement"))),
        Input::Space(_) => Err(Failure::Usage(format!("`{arg}` is a space; an ortholattice is needed"))),
    }
}

/// A space, dualizing lattices.
pub fn space(arg: &str) -> Result<UvoSpace, Failure> {
    match load(arg)? {
        Input::Ortholattice(l) => Ok(dual_space(&l).space),
        Input::Lattice(_) => Err(Failure::Usage(format!("`{arg}` has no orthocomplement"))),
        Input::Space(x) => Ok(x),
    }
}
