//! Process-wide caches for expensive oracle values shared across grid points.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::closed_forms::gf_a_m_sum;
use crate::enumeration::smallest_multiplicity_profile;
use crate::series::LaurentSeries;

fn profiles() -> &'static Mutex<HashMap<i64, Arc<Vec<u64>>>> {
    static CELL: OnceLock<Mutex<HashMap<i64, Arc<Vec<u64>>>>> = OnceLock::new();
    CELL.get_or_init(Default::default)
}

fn sum_forms() -> &'static Mutex<HashMap<u32, Arc<LaurentSeries>>> {
    static CELL: OnceLock<Mutex<HashMap<u32, Arc<LaurentSeries>>>> = OnceLock::new();
    CELL.get_or_init(Default::default)
}

/// Enumerated `a_m(n)` for every `m` at once.
pub(crate) fn profile(n: i64) -> Arc<Vec<u64>> {
    if let Some(p) = profiles().lock().expect("memo poisoned").get(&n) {
        return Arc::clone(p);
    }
    let built = Arc::new(smallest_multiplicity_profile(n));
    profiles()
        .lock()
        .expect("memo poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

pub(crate) fn enumerated_a(m: u32, n: i64) -> u64 {
    if n < 1 {
        return 0;
    }
    profile(n).get(m as usize).copied().unwrap_or(0)
}

/// Summation-form generating function of `a_m(n)`, valid to at least `order`.
pub(crate) fn sum_form(m: u32, order: i64) -> Arc<LaurentSeries> {
    if let Some(s) = sum_forms().lock().expect("memo poisoned").get(&m) {
        if s.trunc_order() >= order {
            return Arc::clone(s);
        }
    }
    let built = Arc::new(gf_a_m_sum(m, order.max(64)));
    let mut map = sum_forms().lock().expect("memo poisoned");
    let slot = map.entry(m).or_insert_with(|| Arc::clone(&built));
    if slot.trunc_order() < built.trunc_order() {
        *slot = Arc::clone(&built);
    }
    Arc::clone(slot)
}
