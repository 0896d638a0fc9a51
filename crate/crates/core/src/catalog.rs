//! Known effective classes used as certificate components.
//!
//! The built-in entries record only what is needed for the interior
//! equations: boundary coefficients that are not pinned down are `Unknown`.
//! A JSON file can add entries or replace built-in ones, for instance to
//! supply full boundary data.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{Coefficient, DivisorClass, Space, UnmarkedClass};
use crate::pullback::{brill_noether_5, forgetful_pullback};

/// A class on either an unmarked or a marked space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogClass {
    Unmarked(UnmarkedClass),
    Marked(DivisorClass),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub class: CatalogClass,
    #[serde(default)]
    pub note: String,
}

impl CatalogEntry {
    /// The class on `space`: unmarked classes are pulled back along the
    /// forgetful map, marked ones must already live there.
    pub fn on_space(&self, space: Space) -> Result<DivisorClass> {
        match &self.class {
            CatalogClass::Unmarked(c) => {
                if c.genus() != space.g() {
                    return Err(Error::SpaceMismatch(c.genus(), 0, space.g(), space.n()));
                }
                forgetful_pullback(c, space.n())
            }
            CatalogClass::Marked(c) => {
                c.space().check_same(&space)?;
                Ok(c.clone())
            }
        }
    }

    fn interior_exact(&self) -> bool {
        match &self.class {
            CatalogClass::Unmarked(c) => c.lambda().is_exact() && c.delta(0).is_exact(),
            CatalogClass::Marked(c) => c.is_interior_exact(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Catalog {
    entries: BTreeMap<String, CatalogEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    entries: Vec<CatalogEntry>,
}

/// `λ`-coefficient `lambda`, `δ_irr`-coefficient `delta_irr`, every other
/// boundary coefficient unknown.
fn unmarked_interior(g: u32, lambda: i64, delta_irr: i64) -> UnmarkedClass {
    let mut c = UnmarkedClass::new(g).expect("stable genus");
    c.set_lambda(lambda);
    c.set_delta(0, delta_irr).expect("δ_0 always exists");
    for i in 1..=g / 2 {
        c.set_delta(i, Coefficient::Unknown).expect("i <= g/2");
    }
    c
}

impl Catalog {
    pub fn builtin() -> Self {
        let mut f12 = DivisorClass::zero(Space::new(12, 10).expect("stable"));
        f12.set_psi_all(9).set_delta_irr(-1).set_all_boundary(Coefficient::Unknown);
        let entries = [
            ("BN5_3", CatalogClass::Unmarked(brill_noether_5()), "Brill–Noether divisor of trigonal curves on M̄_5"),
            ("Z16", CatalogClass::Unmarked(unmarked_interior(16, 407, -61)), "effective divisor on M̄_16"),
            ("BN17", CatalogClass::Unmarked(unmarked_interior(17, 20, -3)), "Brill–Noether divisor on M̄_17"),
            ("D12", CatalogClass::Unmarked(unmarked_interior(12, 13245, -1926)), "effective divisor on M̄_12"),
            ("F12_10", CatalogClass::Marked(f12), "fibre divisor on M̄_{12,10}"),
        ];
        let mut catalog = Catalog::default();
        for (name, class, note) in entries {
            catalog.insert(CatalogEntry { name: name.to_string(), class, note: note.to_string() });
        }
        catalog
    }

    pub fn insert(&mut self, entry: CatalogEntry) {
        self.entries.insert(entry.name.clone(), entry);
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .get(name)
            .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Parses `{"entries": [...]}` and layers it over the built-in entries.
    pub fn with_overrides(json: &str) -> Result<Self> {
        let file: CatalogFile = serde_json::from_str(json).map_err(|e| Error::Malformed(e.to_string()))?;
        let mut catalog = Catalog::builtin();
        for entry in file.entries {
            if !entry.interior_exact() {
                return Err(Error::Malformed(format!("entry {} has an inexact interior", entry.name)));
            }
            catalog.insert(entry);
        }
        Ok(catalog)
    }
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    Catalog::builtin().get(name).cloned()
}

pub fn catalog_load(path: impl AsRef<Path>) -> Result<Catalog> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Catalog::with_overrides(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::SizeClass;

    #[test]
    fn builtin_entries() {
        let z = catalog_get("Z16").unwrap();
        let CatalogClass::Unmarked(c) = &z.class else { panic!("Z16 is unmarked") };
        assert_eq!(c.lambda(), &Coefficient::exact(407));
        assert_eq!(c.delta(0), Coefficient::exact(-61));
        assert_eq!(c.delta(3), Coefficient::Unknown);
        let f = catalog_get("F12_10").unwrap().on_space(Space::new(12, 10).unwrap()).unwrap();
        assert_eq!(f.symmetric_psi(), Some(Coefficient::exact(9)));
        assert_eq!(f.lambda(), &Coefficient::zero());
        assert_eq!(f.profile(SizeClass::new(0, 2)), Coefficient::Unknown);
        assert!(matches!(catalog_get("nope"), Err(Error::UnknownCatalogEntry(_))));
    }

    #[test]
    fn pulled_back_entries() {
        let bn = catalog_get("BN17").unwrap().on_space(Space::new(17, 8).unwrap()).unwrap();
        assert_eq!(bn.lambda(), &Coefficient::exact(20));
        assert_eq!(bn.delta_irr(), &Coefficient::exact(-3));
        assert_eq!(bn.profile(SizeClass::new(1, 0)), Coefficient::Unknown);
        assert!(catalog_get("BN17").unwrap().on_space(Space::new(16, 8).unwrap()).is_err());
    }

    #[test]
    fn overrides() {
        let json = r#"{"entries":[{"name":"Z16","class":{"unmarked":{"g":16,"lambda":{"exact":"1"},"delta":{}}}}]}"#;
        let cat = Catalog::with_overrides(json).unwrap();
        let CatalogClass::Unmarked(c) = &cat.get("Z16").unwrap().class else { panic!() };
        assert_eq!(c.lambda(), &Coefficient::exact(1));
        assert!(cat.get("BN17").is_ok());
        assert!(Catalog::with_overrides("{").is_err());
        let inexact = r#"{"entries":[{"name":"X","class":{"unmarked":{"g":4,"lambda":"unknown","delta":{}}}}]}"#;
        assert!(Catalog::with_overrides(inexact).is_err());
        assert!(matches!(catalog_load("/nonexistent/catalog.json"), Err(Error::Io(_))));
    }
}
