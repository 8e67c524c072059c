"""Application layer - contains use cases and repository interfaces."""
