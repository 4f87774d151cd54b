//! Persistent catalog of polytopes, deduplicated by canonical form.
//!
//! Storage is append-only line-delimited JSON so diffs stay readable.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::analysis;
use crate::decomp::Verdict;
use crate::error::Result;
use crate::lattice::{build_lattice, canonical_form};
use crate::polytope::Polytope;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub canon: String,
    pub dim: usize,
    pub f_vector: Vec<usize>,
    pub facet_count: usize,
    pub excess: usize,
    pub simple: bool,
    pub semisimple: bool,
    pub pyramid_fold: usize,
    pub shephard_count: usize,
    pub provenances: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Verdict>,
}

impl CatalogEntry {
    pub fn describe(p: &Polytope) -> Result<CatalogEntry> {
        let lat = build_lattice(p)?;
        let rep = analysis::excess(p, &lat);
        let profile = analysis::facet_profile(p, &lat);
        let pyr = analysis::pyramid_structure(p)?;
        Ok(CatalogEntry {
            canon: canonical_form(p).hex(),
            dim: p.dim(),
            f_vector: lat.f_vector().counts().to_vec(),
            facet_count: p.facet_count(),
            excess: rep.total,
            simple: rep.total == 0,
            semisimple: profile.semisimple,
            pyramid_fold: pyr.fold,
            shephard_count: analysis::shephard_facets(p, &lat).len(),
            provenances: p.provenance().map(str::to_string).into_iter().collect(),
            classification: None,
        })
    }
}

/// In-memory catalog keyed by canonical form.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
}

impl Catalog {
    pub fn new() -> Catalog {
        Catalog::default()
    }

    /// Insert an entry; duplicates merge their provenance lists.
    /// Returns true when the entry was new.
    pub fn insert(&mut self, entry: CatalogEntry) -> bool {
        match self.entries.get_mut(&entry.canon) {
            Some(existing) => {
                for prov in entry.provenances {
                    if !existing.provenances.contains(&prov) {
                        existing.provenances.push(prov);
                    }
                }
                if existing.classification.is_none() {
                    existing.classification = entry.classification;
                }
                false
            }
            None => {
                self.entries.insert(entry.canon.clone(), entry);
                true
            }
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn store(&self, path: &Path) -> Result<()> {
        let mut file = std::fs::File::create(path)?;
        for entry in self.entries.values() {
            writeln!(file, "{}", serde_json::to_string(entry)?)?;
        }
        Ok(())
    }

    /// Load a catalog, skipping corrupt lines. Returns the catalog and the
    /// number of lines skipped.
    pub fn load(path: &Path) -> Result<(Catalog, usize)> {
        let file = std::fs::File::open(path)?;
        let mut catalog = Catalog::new();
        let mut skipped = 0;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CatalogEntry>(&line) {
                Ok(entry) => {
                    catalog.insert(entry);
                }
                Err(_) => skipped += 1,
            }
        }
        Ok((catalog, skipped))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families as fam;

    #[test]
    fn duplicate_insert_merges_provenances() {
        let mut cat = Catalog::new();
        let a = CatalogEntry::describe(&fam::pentasm(4).unwrap()).unwrap();
        let mut b = a.clone();
        b.provenances = vec!["trv(triplex(2,2))".into()];
        assert!(cat.insert(a));
        assert!(!cat.insert(b));
        assert_eq!(cat.len(), 1);
        let entry = cat.entries().next().unwrap();
        assert_eq!(entry.provenances.len(), 2);
    }

    #[test]
    fn store_load_roundtrip_with_corrupt_line() {
        let mut cat = Catalog::new();
        cat.insert(CatalogEntry::describe(&fam::simplex(3).unwrap()).unwrap());
        cat.insert(CatalogEntry::describe(&fam::prism(3).unwrap()).unwrap());
        let dir = std::env::temp_dir().join("polyx-catalog-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cat.jsonl");
        cat.store(&path).unwrap();
        // append a truncated line
        use std::io::Write as _;
        let mut f = std::fs::OpenOptions::new().append(true).open(&path).unwrap();
        writeln!(f, "{{\"canon\": \"dead").unwrap();
        let (loaded, skipped) = Catalog::load(&path).unwrap();
        assert_eq!(loaded.len(), 2);
        assert_eq!(skipped, 1);
        std::fs::remove_file(&path).ok();
    }
}
