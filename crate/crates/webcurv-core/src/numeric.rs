//! Dyadic interval numerics (to come).
