"""Motion specs: action plus optional gender/mood/weight axes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from motion_arena.errors import SpecError


class Action(str, enum.Enum):
    WALKING = "walking"
    RUNNING = "running"
    WAVING_A_HAND = "waving-a-hand"
    JUMPING_UP = "jumping-up"
    JUMPING_FORWARD = "jumping-forward"
    BOWING = "bowing"
    LYING_DOWN = "lying-down"
    SITTING_DOWN = "sitting-down"
    TURNING_AROUND = "turning-around"
    FORWARD_ROLLING = "forward-rolling"

    @property
    def phrase(self) -> str:
        """Natural-language phrase used inside prompts ("waving a hand")."""
        return self.value.replace("-", " ")


# Canonical action order; doubles as the enumeration order for benchmarks.
ACTIONS: tuple[Action, ...] = tuple(Action)

# Actions whose golden reference is a repeating cycle; the rest are one-shot
# postural transitions modelled as keyframe sequences.
CYCLIC_ACTIONS: frozenset[Action] = frozenset(
    {Action.WALKING, Action.RUNNING, Action.WAVING_A_HAND, Action.TURNING_AROUND}
)


class Gender(str, enum.Enum):
    MAN = "man"
    WOMAN = "woman"


class Mood(str, enum.Enum):
    HAPPY = "happy"
    SAD = "sad"


class Weight(str, enum.Enum):
    HEAVY = "heavy"
    LIGHT = "light"


# Signed coefficient of each attribute value when applying axis deltas.
# Coefficient 0 (axis absent) reproduces the neutral parameters exactly.
_AXIS_SIGN = {
    Gender.MAN: 1.0,
    Gender.WOMAN: -1.0,
    Mood.HAPPY: 1.0,
    Mood.SAD: -1.0,
    Weight.HEAVY: 1.0,
    Weight.LIGHT: -1.0,
}

SUPPORTED_MARKER_COUNTS = (8, 10, 15, 30)


@dataclass(frozen=True)
class MotionSpec:
    """One benchmark variant: an action plus optional attribute axes."""

    action: Action
    gender: Gender | None = None
    mood: Mood | None = None
    weight: Weight | None = None
    marker_count: int = 15

    def __post_init__(self) -> None:
        if not isinstance(self.action, Action):
            raise SpecError(f"unknown action: {self.action!r}")
        if self.marker_count not in SUPPORTED_MARKER_COUNTS:
            raise SpecError(
                f"marker_count must be one of {SUPPORTED_MARKER_COUNTS}, got {self.marker_count}"
            )

    @property
    def is_basic(self) -> bool:
        return self.gender is None and self.mood is None and self.weight is None

    @property
    def is_fine_grained(self) -> bool:
        return self.gender is not None and self.mood is not None and self.weight is not None

    @property
    def is_benchmark(self) -> bool:
        """Benchmark enumeration admits only basic or fully fine-grained specs.

        Mixed partial axes are allowed in free-form mode only.
        """
        return self.is_basic or self.is_fine_grained

    def axis_coefficients(self) -> dict[str, float]:
        """Signed coefficient per axis; 0.0 where the axis is absent."""
        return {
            "gender": _AXIS_SIGN.get(self.gender, 0.0),
            "mood": _AXIS_SIGN.get(self.mood, 0.0),
            "weight": _AXIS_SIGN.get(self.weight, 0.0),
        }

    @property
    def variant_id(self) -> str:
        """Stable id, e.g. ``walking/base`` or ``walking/man-happy-heavy``."""
        if self.is_basic:
            tail = "base"
        else:
            parts = [
                axis.value
                for axis in (self.gender, self.mood, self.weight)
                if axis is not None
            ]
            tail = "-".join(parts)
        if self.marker_count != 15:
            tail += f"-{self.marker_count}pt"
        return f"{self.action.value}/{tail}"

    @property
    def subject_phrase(self) -> str:
        """Prompt subject, e.g. "a man is walking" or
        "a happy man with heavy weight is walking"."""
        if self.is_basic:
            return f"a man is {self.action.phrase}"
        mood = f"{self.mood.value} " if self.mood else ""
        subject = self.gender.value if self.gender else "person"
        weight = f"with {self.weight.value} weight " if self.weight else ""
        return f"a {mood}{subject} {weight}is {self.action.phrase}"

    @classmethod
    def parse_variant_id(cls, variant_id: str) -> "MotionSpec":
        """Inverse of :attr:`variant_id`."""
        try:
            action_part, tail = variant_id.split("/", 1)
            action = Action(action_part)
            marker_count = 15
            parts = tail.split("-")
            if parts and parts[-1].endswith("pt") and parts[-1][:-2].isdigit():
                marker_count = int(parts.pop()[:-2])
            if parts == ["base"]:
                return cls(action=action, marker_count=marker_count)
            if len(parts) != 3:
                raise ValueError(tail)
            return cls(
                action=action,
                gender=Gender(parts[0]),
                mood=Mood(parts[1]),
                weight=Weight(parts[2]),
                marker_count=marker_count,
            )
        except ValueError:
            raise SpecError(f"malformed variant id: {variant_id!r}") from None
