use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

/// A thread-safe lazy cache. The lock is never held while a value is being
/// computed, so recursive lookups are fine; a race only costs a duplicate
/// computation.
pub(crate) struct Memo<K, V> {
    map: Mutex<HashMap<K, Arc<V>>>,
}

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo { map: Mutex::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn get_or_try<E>(&self, key: &K, make: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.map.lock().expect("memo lock").get(key) {
            return Ok(v.clone());
        }
        let v = Arc::new(make()?);
        Ok(self.map.lock().expect("memo lock").entry(key.clone()).or_insert(v).clone())
    }
}
