"""Experiment lab: sweeps, records, slopes and figures."""
