"""Contract tests for the refuel command line and its file formats."""
