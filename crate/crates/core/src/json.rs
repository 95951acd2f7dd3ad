//! Versioned JSON documents: every file carries `{"format": "curvact/1"}`.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const FORMAT: &str = "curvact/1";

#[derive(Serialize, Deserialize)]
struct Tagged<T> {
    format: String,
    #[serde(flatten)]
    body: T,
}

/// Pretty JSON with the format tag first and a trailing newline.
pub fn to_document<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Tagged { format: FORMAT.to_string(), body: value })?;
    s.push('\n');
    Ok(s)
}

pub fn from_document<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T> {
    let tagged: Tagged<T> = serde_json::from_str(text)
        .map_err(|e| Error::Schema { path: origin.to_string(), message: e.to_string() })?;
    if tagged.format != FORMAT {
        return Err(Error::Schema {
            path: origin.to_string(),
            message: format!("unsupported format {:?}, expected {FORMAT:?}", tagged.format),
        });
    }
    Ok(tagged.body)
}

/// Parse inline JSON or a file; the format tag is optional here but must
/// match when present.
pub fn load<T: DeserializeOwned>(arg: &str) -> Result<T> {
    let trimmed = arg.trim_start();
    let (text, origin) = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        (arg.to_string(), "<inline>".to_string())
    } else {
        (std::fs::read_to_string(arg)?, arg.to_string())
    };
    let schema = |message: String| Error::Schema { path: origin.clone(), message };
    let mut value: serde_json::Value = serde_json::from_str(&text).map_err(|e| schema(e.to_string()))?;
    if let Some(obj) = value.as_object_mut() {
        if let Some(tag) = obj.remove("format") {
            if tag != FORMAT {
                return Err(schema(format!("unsupported format {tag}, expected {FORMAT:?}")));
            }
        }
    }
    serde_json::from_value(value).map_err(|e| schema(e.to_string()))
}

pub fn read_document<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    from_document(&text, &path.display().to_string())
}

pub fn write_document<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_document(value)?)?;
    Ok(())
}
