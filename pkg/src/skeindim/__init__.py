"""Exact skein dimensions, Hecke sign idempotents and multisegment certificates."""
