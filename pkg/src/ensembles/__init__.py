"""Geradores aleatórios com semente para entradas de teste."""
