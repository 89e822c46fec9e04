"""Tag clouds for software artifacts."""
