"""Seeded random instances: uniform integer p, lognormal weight factor.

Each instance draws from numpy's PCG64 generator seeded with
SeedSequence([seed, index]); p comes first, then the normal exponents.
Regenerating with the same (seed, index) reproduces the instance exactly.
"""

import numpy as np

from refuel.models.generation import GenSpec
from refuel.models.instance import Instance, InstanceMeta, Job

P_LOW = 1
P_HIGH = 100


def rng_for(seed: int, index: int) -> np.random.Generator:
    """Independent stream for instance `index` of a dataset seeded with `seed`."""
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def generate_instance(spec: GenSpec, index: int = 0) -> Instance:
    """n jobs with p uniform on 1..100 and w = 2^x · p, x ~ N(0, sigma²)."""
    rng = rng_for(spec.seed, index)
    p = rng.integers(P_LOW, P_HIGH + 1, size=spec.n)
    x = rng.normal(0.0, spec.sigma, size=spec.n)
    w = np.exp2(x) * p
    jobs = tuple(Job(i, int(p[i]), float(w[i])) for i in range(spec.n))
    return Instance(jobs, InstanceMeta(spec.n, spec.sigma, spec.seed, index))
