"""Emit self-contained animation scripts that reproduce the golden stimuli.

The emitted script has no dependency on this package: marker positions are
embedded as literals and drawn with PIL using the same disc geometry as
:mod:`motion_arena.motion.render`, so its frames match the in-process
renderer pixel for pixel.  It is used to validate the sandbox end to end
and as the canned response of the offline stub models.
"""

from __future__ import annotations

from motion_arena.motion.gait import natural_duration, synthesize
from motion_arena.motion.render import DEFAULT_DOT_RADIUS, DEFAULT_SIZE
from motion_arena.motion.spec import MotionSpec

_TEMPLATE = '''\
# Point-light animation: {label}
from PIL import Image, ImageDraw
import os

WIDTH = {width}
HEIGHT = {height}
RADIUS = {radius}
FRAMES = {frames}

os.makedirs("frames", exist_ok=True)
for i, marks in enumerate(FRAMES):
    img = Image.new("L", (WIDTH, HEIGHT), 0)
    draw = ImageDraw.Draw(img)
    for x, y in marks:
        px = x * (WIDTH - 1)
        py = y * (HEIGHT - 1)
        draw.ellipse((px - RADIUS, py - RADIUS, px + RADIUS, py + RADIUS), fill=255)
    img.save(os.path.join("frames", "%06d.png" % i))
'''


def golden_script(
    spec: MotionSpec,
    duration: float | None = None,
    fps: float = 16.0,
    width: int = DEFAULT_SIZE,
    height: int = DEFAULT_SIZE,
    dot_radius: int = DEFAULT_DOT_RADIUS,
) -> str:
    """Standalone script rendering the golden reference for ``spec``."""
    if duration is None:
        duration = natural_duration(spec)
    traj = synthesize(spec, duration, fps)
    rows = []
    for frame in traj.frames:
        cells = ", ".join(f"({x!r}, {y!r})" for x, y in frame.positions)
        rows.append(f"    [{cells}],")
    frames_literal = "[\n" + "\n".join(rows) + "\n]"
    return _TEMPLATE.format(
        label=spec.variant_id,
        width=width,
        height=height,
        radius=dot_radius,
        frames=frames_literal,
    )
