"""User interface module for Turannical."""
