"""Tests for graphon_lab."""
