"""Canonical point-light marker layouts (8, 10, 15 and 30 dots).

The 15-marker layout places dots at the major joints: both shoulders,
elbows, wrists, hips, knees and ankles, plus the sternum, the pelvis
center and the head center.  The reduced layouts keep bilateral joints
only; the 30-marker layout adds the midpoint of each skeleton segment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from motion_arena.errors import UnsupportedLayout

HEAD = "head"
STERNUM = "sternum"
PELVIS = "pelvis-center"

ROLES_15: tuple[str, ...] = (
    HEAD,
    STERNUM,
    PELVIS,
    "left-shoulder",
    "right-shoulder",
    "left-elbow",
    "right-elbow",
    "left-wrist",
    "right-wrist",
    "left-hip",
    "right-hip",
    "left-knee",
    "right-knee",
    "left-ankle",
    "right-ankle",
)

# 10 dots: bilateral joints only (drop head, sternum, pelvis center, wrists).
ROLES_10: tuple[str, ...] = (
    "left-shoulder",
    "right-shoulder",
    "left-elbow",
    "right-elbow",
    "left-hip",
    "right-hip",
    "left-knee",
    "right-knee",
    "left-ankle",
    "right-ankle",
)

# 8 dots: shoulders and the leg chain (additionally drop elbows and wrists).
ROLES_8: tuple[str, ...] = (
    "left-shoulder",
    "right-shoulder",
    "left-hip",
    "right-hip",
    "left-knee",
    "right-knee",
    "left-ankle",
    "right-ankle",
)

# Skeleton segments between 15-marker roles; the 30-marker layout inserts
# the midpoint of each.  Exactly 15 segments: the joint tree plus the
# shoulder line, whose midpoint sits at the base of the neck.
SEGMENTS: tuple[tuple[str, tuple[str, str]], ...] = (
    ("neck", (HEAD, STERNUM)),
    ("neck-base", ("left-shoulder", "right-shoulder")),
    ("abdomen", (STERNUM, PELVIS)),
    ("left-clavicle", (STERNUM, "left-shoulder")),
    ("right-clavicle", (STERNUM, "right-shoulder")),
    ("left-upper-arm", ("left-shoulder", "left-elbow")),
    ("right-upper-arm", ("right-shoulder", "right-elbow")),
    ("left-forearm", ("left-elbow", "left-wrist")),
    ("right-forearm", ("right-elbow", "right-wrist")),
    ("left-waist", (PELVIS, "left-hip")),
    ("right-waist", (PELVIS, "right-hip")),
    ("left-thigh", ("left-hip", "left-knee")),
    ("right-thigh", ("right-hip", "right-knee")),
    ("left-shin", ("left-knee", "left-ankle")),
    ("right-shin", ("right-knee", "right-ankle")),
)

ROLES_30: tuple[str, ...] = ROLES_15 + tuple(name for name, _ in SEGMENTS)

_ROLE_TABLES: dict[int, tuple[str, ...]] = {
    8: ROLES_8,
    10: ROLES_10,
    15: ROLES_15,
    30: ROLES_30,
}


@dataclass(frozen=True)
class MarkerLayout:
    """Ordered marker roles for one point-light variant."""

    marker_count: int
    roles: tuple[str, ...]
    # role -> (parent role, parent role) for derived midpoint markers
    midpoints: dict[str, tuple[str, str]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        assert len(self.roles) == self.marker_count
        assert len(set(self.roles)) == self.marker_count, "roles must be unique"

    def index(self, role: str) -> int:
        return self.roles.index(role)

    def paired_roles(self) -> list[tuple[str, str]]:
        """(left, right) role pairs, in role order."""
        pairs = []
        for role in self.roles:
            if role.startswith("left-"):
                twin = "right-" + role[len("left-"):]
                if twin in self.roles:
                    pairs.append((role, twin))
        return pairs


def build_layout(marker_count: int) -> MarkerLayout:
    """Return the canonical layout for a supported dot count."""
    roles = _ROLE_TABLES.get(marker_count)
    if roles is None:
        raise UnsupportedLayout(
            f"no canonical layout for {marker_count} markers; supported: {sorted(_ROLE_TABLES)}"
        )
    midpoints = dict(SEGMENTS) if marker_count == 30 else {}
    return MarkerLayout(marker_count=marker_count, roles=roles, midpoints=midpoints)
