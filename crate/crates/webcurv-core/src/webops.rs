//! Web operations (to come).
