"""Independent matrix-level oracle: explicit realizations of g, its
representations and the Kostant chain complex, used to cross-check the
combinatorial fast path."""
