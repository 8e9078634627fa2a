"""Grupo simplético real Sp(2ℓ, ℝ) e subgrupos C(ℓ), N(ℓ)."""
