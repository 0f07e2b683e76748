# Computational services: forms, invariants, strata, experiments
