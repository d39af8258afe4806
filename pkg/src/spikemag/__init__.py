"""Spike-camera micro-motion toolkit.

Simulates integrate-and-fire spike streams, reconstructs intensity frames
with self-supervised blind-spot denoising and multi-window fusion,
upsamples them with an implicit neural representation, magnifies motion,
and scores video flow quality.
"""

__version__ = "0.1.0"
