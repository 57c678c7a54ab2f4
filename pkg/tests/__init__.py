"""Tests for the wedge-casimir package."""
