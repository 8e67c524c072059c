"""CLI layer - contains the argument parser, commands and run options."""
