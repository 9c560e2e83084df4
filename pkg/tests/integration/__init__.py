"""Oracle suites and end-to-end runs on generated instances."""
