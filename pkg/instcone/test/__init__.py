"""instcone test suite."""
