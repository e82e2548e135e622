//! Iso-class registry: ids in discovery order, lookups by iso test within
//! one dimension-vector bucket.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{is_isomorphic, DimVector, Representation};
use crate::error::Result;

#[derive(Clone, Debug, Default)]
pub struct IsoRegistry {
    items: Vec<Representation>,
    buckets: BTreeMap<DimVector, Vec<usize>>,
}

impl IsoRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, id: usize) -> &Representation {
        &self.items[id]
    }

    pub fn lookup(&self, m: &Representation) -> Result<Option<usize>> {
        if let Some(ids) = self.buckets.get(&m.dim_vector()) {
            for &id in ids {
                if is_isomorphic(&self.items[id], m)? {
                    return Ok(Some(id));
                }
            }
        }
        Ok(None)
    }

    /// Id of the class of `m`, registering it if new.
    pub fn register(&mut self, m: &Representation) -> Result<usize> {
        if let Some(id) = self.lookup(m)? {
            return Ok(id);
        }
        let id = self.items.len();
        self.items.push(m.clone());
        self.buckets.entry(m.dim_vector()).or_default().push(id);
        Ok(id)
    }
}
