"""Tests for Phase Perturbation."""
