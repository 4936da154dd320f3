//! Loading documents, with errors that name the file, the line and the label.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use softop::document::{offending_label, FunctionDocument, Space, SpaceDocument, SpaceRef};
use softop::SoftFunction;

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("{}: cannot read", path.display()))
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| anyhow!("{}:{}: {e}", path.display(), e.line()))
}

/// First line (1-based) quoting `label` as a JSON string.
fn line_of(text: &str, label: &str) -> Option<usize> {
    let quoted = format!("\"{label}\"");
    text.lines().position(|l| l.contains(&quoted)).map(|i| i + 1)
}

/// Attaches `path`, and the line of the offending label when there is one.
pub fn located<T>(path: &Path, result: softop::Result<T>) -> anyhow::Result<T> {
    result.map_err(|err| {
        let line = offending_label(&err).and_then(|label| line_of(&read(path).unwrap_or_default(), label));
        match line {
            Some(line) => anyhow!("{}:{line}: {err}", path.display()),
            None => anyhow!("{}: {err}", path.display()),
        }
    })
}

pub fn space_document(path: &Path) -> anyhow::Result<SpaceDocument> {
    parse(path)
}

pub fn space(path: &Path) -> anyhow::Result<Space> {
    let doc = space_document(path)?;
    located(path, doc.build())
}

fn resolve(reference: &SpaceRef, base: &Path, origin: &Path) -> anyhow::Result<Space> {
    match reference {
        SpaceRef::Path(rel) => {
            let full: PathBuf = base.join(rel);
            space(&full)
        }
        SpaceRef::Inline(doc) => located(origin, doc.build()),
    }
}

/// A function document with its domain and codomain. Space paths are
/// relative to the function document.
pub fn function(path: &Path) -> anyhow::Result<(SoftFunction, Space, Space)> {
    let doc: FunctionDocument = parse(path)?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let dom = resolve(&doc.domain, base, path)?;
    let cod = resolve(&doc.codomain, base, path)?;
    let f = located(path, doc.build(&dom.universe, &cod.universe))?;
    Ok((f, dom, cod))
}
