"""Infrastructure layer - contains file formats and numeric service implementations."""
