"""Infraestrutura base do núcleo (core)."""
