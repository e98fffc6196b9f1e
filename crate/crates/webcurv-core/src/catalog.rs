//! Catalog (to come).
