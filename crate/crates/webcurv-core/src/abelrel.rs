//! Abelian relations (to come).
