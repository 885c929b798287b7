"""Tests for the AIII Steinberg orbit engine."""
