"""Test suite for the cocoblock solver and CLI."""
