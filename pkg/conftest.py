"""Pytest configuration shared by every test module."""
from hypothesis import settings

# Property tests draw from a fixed seed so reruns see the same examples.
settings.register_profile("driven_qubit", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("driven_qubit")
