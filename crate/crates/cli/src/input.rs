use std::fs;
use std::path::Path;

use harmap_core::{Error, HarmonicMap, MappingSpec};
use sha2::{Digest, Sha256};

use crate::Failure;

pub struct Input {
    pub spec: MappingSpec,
    pub map: HarmonicMap,
    pub digest: String,
}

pub fn load(path: &Path) -> Result<Input, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|e| Failure::Input(format!("{}: not valid UTF-8 ({e})", path.display())))?;
    let spec = MappingSpec::parse(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => {
            Failure::Input(format!("{}:{line}:{column}: {message}", path.display()))
        }
        other => Failure::Input(format!("{}: {other}", path.display())),
    })?;
    Ok(Input {
        map: spec.to_map(),
        spec,
        digest: hex::encode(Sha256::digest(&bytes)),
    })
}
