"""Integration tests for wtnps-trade."""
