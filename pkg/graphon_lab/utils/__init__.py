"""Initialize utils."""
