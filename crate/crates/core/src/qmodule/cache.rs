//! Process-wide irrep memo with an optional content-addressed disk store.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock, RwLock};

use sha2::{Digest, Sha256};

use crate::root_data::{RootDatum, Weight};

use super::{Module, ModuleError, ModuleLabel};

pub const CACHE_DIR_ENV: &str = "HALFRIB_CACHE_DIR";

type Key = (String, Weight);

fn memo() -> &'static RwLock<HashMap<Key, Arc<Module>>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, Arc<Module>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn disk_path(key: &Key) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_DIR_ENV)?;
    let digest = Sha256::digest(format!("irrep/v1/{}/{}", key.0, key.1).as_bytes());
    Some(PathBuf::from(dir).join(format!("{}.json", hex::encode(digest))))
}

fn load(datum: &Arc<RootDatum>, key: &Key) -> Option<Arc<Module>> {
    let path = disk_path(key)?;
    let text = std::fs::read_to_string(path).ok()?;
    let value: serde_json::Value = serde_json::from_str(&text).ok()?;
    let m = Module::from_json(datum.clone(), ModuleLabel::Irrep(key.1.clone()), &value).ok()?;
    // a corrupt or stale file is ignored rather than trusted
    (m.dim() == datum.weyl_dimension(&key.1) as usize && m.check_relations().is_ok()).then_some(m)
}

fn store(key: &Key, m: &Module) {
    let Some(path) = disk_path(key) else { return };
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    let tmp = path.with_extension("tmp");
    if std::fs::write(&tmp, m.to_json().to_string()).is_ok() {
        let _ = std::fs::rename(tmp, path);
    }
}

pub(super) fn lookup_or_build(
    datum: &Arc<RootDatum>,
    lambda: &Weight,
    build: impl FnOnce() -> Result<Arc<Module>, ModuleError>,
) -> Result<Arc<Module>, ModuleError> {
    let key = (datum.name(), lambda.clone());
    if let Some(m) = memo().read().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let m = match load(datum, &key) {
        Some(m) => m,
        None => {
            let m = build()?;
            store(&key, &m);
            m
        }
    };
    let mut table = memo().write().unwrap();
    Ok(table.entry(key).or_insert(m).clone())
}
