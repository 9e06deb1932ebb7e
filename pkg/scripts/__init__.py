"""graphon_lab scripts."""
