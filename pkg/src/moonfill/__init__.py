"""Growth diagrams, RSK variants and promotion on fillings of moon polyominoes."""
