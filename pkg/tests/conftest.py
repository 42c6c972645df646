# Keeps this directory importable for the shared oracles/strategies modules.
