"""Seeded fuzz loop: generate, validate, classify, mutate, expect rejection."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .arrangement import BuildError, GeometryError, TriangleArrangement
from .mutate import (delete_blocking, delete_initial, perturb_endpoint,
                     reroute_blocking)
from .taxonomy import (TagB1, TagB2, TagB3, TagI1, TagI2, TagT, TypeTag,
                       classify, generate)
from .validator import validate

DEFAULT_POOL: Tuple[TypeTag, ...] = (
    TagB1(0, 1), TagB1(0, 2), TagB1(1, 3),
    TagB2(0, 2, 2, 2),
    TagB3((1, 1, 1)), TagB3((2, 2, 2)),
    TagI1(0, 1, 1, 0), TagI1(0, 1, 1, 2),
    TagI2(0, (1, 1), (2, 1), 0, "cross"),
    TagT(2, (0, 0, 0)),
)


def _mutant_rejected(arr: TriangleArrangement, tag: TypeTag,
                     mutate_fn) -> Optional[bool]:
    """True if the mutant fails validation or classification, None when
    the mutation could not be applied."""
    try:
        mutant = mutate_fn(arr)
    except (BuildError, GeometryError, ValueError):
        return True
    if mutant is None:
        return None
    if not validate(mutant, "STRONG").ok:
        return True
    result = classify(mutant)
    if result is None or result.tag != tag:
        return True
    return False   # an equivalent mutant


@dataclass
class FuzzSummary:
    seed: int
    iters: int
    generated: int = 0
    round_trips: int = 0
    mutants_rejected: int = 0
    mutants_redrawn: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        lines = [f"fuzz seed={self.seed} iters={self.iters}: "
                 f"{self.generated} generated, {self.round_trips} round-trips, "
                 f"{self.mutants_rejected} mutants rejected "
                 f"({self.mutants_redrawn} redrawn)"]
        lines += [f"FAILURE: {f}" for f in self.failures]
        return "\n".join(lines)


def fuzz_driver(seed: int, iters: int,
                pool: Tuple[TypeTag, ...] = DEFAULT_POOL) -> FuzzSummary:
    rng = random.Random(seed)
    summary = FuzzSummary(seed, iters)
    for _ in range(iters):
        tag = rng.choice(pool)
        gseed = rng.randrange(1 << 30)
        try:
            arr, _labels = generate(tag, gseed)
        except Exception as exc:
            summary.failures.append(f"generate({tag}, {gseed}): {exc}")
            continue
        summary.generated += 1
        result = classify(arr)
        if result is None or result.tag != tag:
            got = None if result is None else result.tag
            summary.failures.append(
                f"classify round-trip failed for {tag} seed {gseed}: got {got}")
            continue
        summary.round_trips += 1
        rejected = False
        for _attempt in range(8):
            kind = rng.randrange(4) if arr.initial else 0
            if kind == 0 and arr.blocking:
                i = rng.randrange(len(arr.blocking))
                fn = lambda a: delete_blocking(a, i)
            elif kind == 1 and arr.initial:
                i = rng.randrange(len(arr.initial))
                fn = lambda a: delete_initial(a, i)
            elif kind == 2 and arr.blocking:
                i = rng.randrange(len(arr.blocking))
                fn = lambda a: reroute_blocking(a, i, rng)
            else:
                which = "S" if arr.initial and rng.getrandbits(1) else "B"
                pool_ = arr.initial if which == "S" else arr.blocking
                if not pool_:
                    continue
                i = rng.randrange(len(pool_))
                fn = lambda a: perturb_endpoint(a, which, i, rng.getrandbits(1))
            outcome = _mutant_rejected(arr, tag, fn)
            if outcome is True:
                summary.mutants_rejected += 1
                rejected = True
                break
            summary.mutants_redrawn += 1
        if not rejected:
            summary.failures.append(
                f"no rejecting mutation found for {tag} seed {gseed}")
    return summary
