//! Disk cache for Macdonald bases and `∇(e_n)`, keyed by kind, degree and
//! format version. Writes go to a temporary file that is then renamed.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::coefficients::MPoly;
use crate::error::{Error, Result};
use crate::macdonald::{install_macdonald_basis, macdonald_basis, nabla, MacdonaldBasis};
use crate::symfun::SymFun;
use crate::tensor::FORMAT_VERSION;

pub const CACHE_ENV: &str = "DHARMONIC_CACHE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheStore {
    root: PathBuf,
}

impl CacheStore {
    pub fn new(root: impl Into<PathBuf>) -> CacheStore {
        CacheStore { root: root.into() }
    }

    /// Store rooted at `$DHARMONIC_CACHE`, if set and non-empty.
    pub fn from_env() -> Option<CacheStore> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(CacheStore::new)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn dir(&self) -> PathBuf {
        self.root.join(FORMAT_VERSION)
    }

    pub fn path(&self, kind: &str, n: u32) -> PathBuf {
        self.dir().join(format!("{kind}-{n}.txt"))
    }

    pub fn get(&self, kind: &str, n: u32) -> Result<Option<String>> {
        match fs::read_to_string(self.path(kind, n)) {
            Ok(s) => Ok(Some(s)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    pub fn put(&self, kind: &str, n: u32, text: &str) -> Result<()> {
        let dir = self.dir();
        fs::create_dir_all(&dir)?;
        let target = self.path(kind, n);
        static SEQ: AtomicU64 = AtomicU64::new(0);
        let seq = SEQ.fetch_add(1, Ordering::Relaxed);
        let tmp = dir.join(format!(".{kind}-{n}.{}.{seq}.tmp", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target)?;
        Ok(())
    }

    /// `(kind, n)` of every entry under the current format version.
    pub fn entries(&self) -> Result<Vec<(String, u32)>> {
        let mut out = Vec::new();
        let rd = match fs::read_dir(self.dir()) {
            Ok(rd) => rd,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(e.into()),
        };
        for entry in rd {
            let name = entry?.file_name().to_string_lossy().into_owned();
            if let Some(stem) = name.strip_suffix(".txt") {
                if let Some((kind, n)) = stem.rsplit_once('-') {
                    if let Ok(n) = n.parse() {
                        out.push((kind.to_string(), n));
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries()?;
        for (kind, n) in &entries {
            fs::remove_file(self.path(kind, *n))?;
        }
        Ok(entries.len())
    }
}

fn default_slot() -> &'static Mutex<Option<CacheStore>> {
    static SLOT: OnceLock<Mutex<Option<CacheStore>>> = OnceLock::new();
    SLOT.get_or_init(|| Mutex::new(CacheStore::from_env()))
}

/// The process-wide store: `$DHARMONIC_CACHE` unless overridden.
pub fn default_cache() -> Option<CacheStore> {
    default_slot().lock().unwrap().clone()
}

pub fn set_default_cache(store: Option<CacheStore>) {
    *default_slot().lock().unwrap() = store;
}

/// Macdonald basis, read from `store` when present (and re-verified), else
/// computed and written back.
pub fn cached_macdonald_basis(n: u32, store: Option<&CacheStore>) -> Result<Arc<MacdonaldBasis>> {
    let Some(store) = store else {
        return macdonald_basis(n);
    };
    if let Some(text) = store.get("macdonald", n)? {
        let basis = MacdonaldBasis::from_text(n, &text)?;
        return install_macdonald_basis(basis);
    }
    let basis = macdonald_basis(n)?;
    store.put("macdonald", n, &basis.to_text())?;
    Ok(basis)
}

/// `∇(e_n)` in the Schur basis, memoized per process and in the default store.
pub fn nabla_e(n: u32) -> Result<Arc<SymFun<MPoly>>> {
    static MEMO: OnceLock<Mutex<HashMap<u32, Arc<SymFun<MPoly>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = memo.lock().unwrap().get(&n) {
        return Ok(v.clone());
    }
    let store = default_cache();
    let mut value = None;
    if let Some(s) = &store {
        if let Some(text) = s.get("nabla-e", n)? {
            let f: SymFun<MPoly> = text.trim().parse()?;
            value = Some(f);
        }
    }
    let f = match value {
        Some(f) => f,
        None => {
            cached_macdonald_basis(n, store.as_ref())?;
            let en = crate::symfun::e(n).map_coeffs(|c| MPoly::constant(c.clone()));
            let f = nabla(&en)?;
            if let Some(s) = &store {
                s.put("nabla-e", n, &format!("{f}\n"))?;
            }
            f
        }
    };
    if f.degrees().iter().any(|&d| d != n) {
        return Err(Error::Internal(format!("cached nabla-e-{n} has the wrong degree")));
    }
    let f = Arc::new(f);
    Ok(memo.lock().unwrap().entry(n).or_insert(f).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp_root(tag: &str) -> PathBuf {
        let p = std::env::temp_dir().join(format!("dharmonic-cache-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&p);
        p
    }

    #[test]
    fn store_round_trip() {
        let root = temp_root("rt");
        let store = CacheStore::new(&root);
        assert_eq!(store.get("x", 3).unwrap(), None);
        store.put("x", 3, "hello\n").unwrap();
        assert_eq!(store.get("x", 3).unwrap().as_deref(), Some("hello\n"));
        assert_eq!(store.entries().unwrap(), vec![("x".to_string(), 3)]);
        assert_eq!(store.clear().unwrap(), 1);
        assert!(store.entries().unwrap().is_empty());
        fs::remove_dir_all(root).unwrap();
    }

    #[test]
    fn cached_basis_is_byte_identical() {
        let root = temp_root("mac");
        let store = CacheStore::new(&root);
        let fresh = cached_macdonald_basis(4, Some(&store)).unwrap();
        let written = store.get("macdonald", 4).unwrap().unwrap();
        assert_eq!(written, fresh.to_text());
        let again = cached_macdonald_basis(4, Some(&store)).unwrap();
        assert_eq!(again.to_text(), written);
        fs::remove_dir_all(root).unwrap();
    }

    #[test]
    fn corrupted_entry_is_rejected() {
        let b = macdonald_basis(3).unwrap();
        let text = b.to_text().replacen("(q + t)*s[2,1]", "(q + 2*t)*s[2,1]", 1);
        assert_ne!(text, b.to_text());
        let parsed = MacdonaldBasis::from_text(3, &text).unwrap();
        assert!(install_macdonald_basis(parsed).is_err());
    }
}
