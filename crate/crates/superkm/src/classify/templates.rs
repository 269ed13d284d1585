//! Named diagrams from the 2-5 vertex tables, embedded at build time.

use crate::cartan::Diagram;
use crate::cartan::DiagramFile;
use crate::reflect::canon::canonical_exact;
use std::collections::HashMap;
use std::sync::OnceLock;

include!(concat!(env!("OUT_DIR"), "/templates.rs"));

#[derive(Debug, Clone)]
pub struct Template {
    pub file: &'static str,
    pub label: String,
    pub diagram: Diagram,
    pub canonical: String,
}

impl Template {
    /// Affine and twisted labels carry a `^(k)` suffix.
    pub fn is_finite(&self) -> bool {
        !self.label.contains("^(")
    }
}

struct Library {
    all: Vec<Template>,
    by_canonical: HashMap<String, usize>,
}

fn library() -> &'static Library {
    static LIB: OnceLock<Library> = OnceLock::new();
    LIB.get_or_init(|| {
        let mut all = Vec::new();
        let mut by_canonical = HashMap::new();
        for (file, text) in TEMPLATE_FILES {
            let f = DiagramFile::parse(text).unwrap_or_else(|e| panic!("template {file}: {e}"));
            let diagram = f
                .to_diagram()
                .unwrap_or_else(|e| panic!("template {file}: {e}"));
            let label = f
                .name
                .clone()
                .unwrap_or_else(|| panic!("template {file} has no name"));
            let canonical = canonical_exact(&diagram);
            by_canonical.entry(canonical.clone()).or_insert(all.len());
            all.push(Template {
                file,
                label,
                diagram,
                canonical,
            });
        }
        Library { all, by_canonical }
    })
}

pub fn templates() -> &'static [Template] {
    &library().all
}

pub fn lookup(canonical: &str) -> Option<&'static Template> {
    let lib = library();
    lib.by_canonical.get(canonical).map(|&i| &lib.all[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_loads() {
        let t = templates();
        assert!(t.len() > 50);
        assert!(t.iter().any(|t| t.label == "A(1,0)" && t.is_finite()));
        assert!(t.iter().any(|t| t.label == "G(3)^(1)" && !t.is_finite()));
        let a10 = Diagram::from_ints(&[&[0, 1], &[-1, 2]], &[1, 0]).unwrap();
        assert_eq!(lookup(&canonical_exact(&a10)).unwrap().label, "A(1,0)");
    }
}
