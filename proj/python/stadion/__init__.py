"""Semiclassical stadium quantization through rational polygon envelopes."""

import json

from ._core import (
    Case,
    FieldElement,
    WaveFunction,
    approximation_at,
    build_case,
    build_case_from_json,
    cos_pi16,
    energy,
    energy_over_pi2,
    min_z,
    sin_pi16,
)

__all__ = [
    "Case",
    "FieldElement",
    "WaveFunction",
    "approximation_at",
    "build_case",
    "build_case_from_json",
    "cos_pi16",
    "energy",
    "energy_over_pi2",
    "envelope",
    "min_z",
    "residual",
    "sin_pi16",
    "unfolding",
]


def envelope(case, samples=10000):
    return json.loads(case.envelope_json(samples))


def unfolding(case):
    return json.loads(case.unfold_json())


def residual(wave, eps, samples=1024, threads=1):
    return json.loads(wave.residual_json(eps, samples, threads))
