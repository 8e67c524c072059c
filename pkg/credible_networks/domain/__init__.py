"""Domain layer - contains entities, enums, exceptions and pruning rules."""
