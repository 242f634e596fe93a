"""Tests for querelle."""
