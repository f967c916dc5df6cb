"""Rasterize marker trajectories to white-dots-on-black frame sequences."""

from __future__ import annotations

import io
import math
import subprocess
from dataclasses import dataclass, field
from pathlib import Path

from PIL import Image, ImageDraw

from motion_arena.motion.gait import MarkerTrajectory, PoseFrame, motion_for_spec, keyframe_pose, natural_duration, pose_at
from motion_arena.motion.gait import GaitParams
from motion_arena.motion.spec import MotionSpec

DEFAULT_SIZE = 512
DEFAULT_DOT_RADIUS = 5


@dataclass
class FrameSequence:
    """Rendered frames plus the geometry they were drawn with.

    Every pixel is either pure black (background) or pure white (dot).
    """

    width: int
    height: int
    dot_radius: int
    frames: list[Image.Image]
    fps: float = 30.0
    warnings: list[str] = field(default_factory=list)


def draw_pose(positions, width: int, height: int, dot_radius: int) -> Image.Image:
    """Draw one frame: filled white discs on black, no antialiasing."""
    img = Image.new("L", (width, height), 0)
    draw = ImageDraw.Draw(img)
    for x, y in positions:
        px = x * (width - 1)
        py = y * (height - 1)
        draw.ellipse(
            (px - dot_radius, py - dot_radius, px + dot_radius, py + dot_radius),
            fill=255,
        )
    return img


def render_frames(
    traj: MarkerTrajectory,
    width: int = DEFAULT_SIZE,
    height: int = DEFAULT_SIZE,
    dot_radius: int = DEFAULT_DOT_RADIUS,
) -> FrameSequence:
    """Render every pose frame to a raster frame (1:1).

    Dots that overflow the canvas are clipped and recorded as warnings,
    never errors.
    """
    if width <= 0 or height <= 0 or dot_radius <= 0:
        raise ValueError("width, height and dot_radius must be positive")
    seq = FrameSequence(width=width, height=height, dot_radius=dot_radius, frames=[], fps=traj.fps)
    for idx, frame in enumerate(traj.frames):
        for x, y in frame.positions:
            px = x * (width - 1)
            py = y * (height - 1)
            if px - dot_radius < 0 or py - dot_radius < 0 or px + dot_radius > width - 1 or py + dot_radius > height - 1:
                seq.warnings.append(f"frame {idx}: dot at ({x:.4f}, {y:.4f}) clipped")
        seq.frames.append(draw_pose(frame.positions, width, height, dot_radius))
    return seq


def reference_frame(
    spec: MotionSpec,
    phase: float = 0.0,
    width: int = DEFAULT_SIZE,
    height: int = DEFAULT_SIZE,
    dot_radius: int = DEFAULT_DOT_RADIUS,
) -> bytes:
    """Render a single frame at the given cycle phase, as PNG bytes.

    Used to attach a golden still to image+text prompts.
    """
    motion, layout = motion_for_spec(spec)
    frac = (phase / (2.0 * math.pi)) % 1.0
    if isinstance(motion, GaitParams):
        pose = pose_at(motion, layout, spec, frac * motion.period)
    else:
        pose = keyframe_pose(motion, layout, spec, frac * motion.duration)
    img = draw_pose(pose.positions, width, height, dot_radius)
    buf = io.BytesIO()
    img.save(buf, format="PNG")
    return buf.getvalue()


def golden_sequence(
    spec: MotionSpec,
    duration: float | None = None,
    fps: float = 30.0,
    width: int = DEFAULT_SIZE,
    height: int = DEFAULT_SIZE,
    dot_radius: int = DEFAULT_DOT_RADIUS,
) -> FrameSequence:
    """Synthesize and render the golden reference for a spec."""
    from motion_arena.motion.gait import synthesize

    if duration is None:
        duration = natural_duration(spec)
    return render_frames(synthesize(spec, duration, fps), width, height, dot_radius)


def save_png_sequence(seq: FrameSequence, out_dir: Path) -> list[Path]:
    """Write ``000000.png``, ``000001.png``, ... into ``out_dir``."""
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, img in enumerate(seq.frames):
        p = out_dir / f"{i:06d}.png"
        img.save(p, format="PNG")
        paths.append(p)
    return paths


def save_gif(seq: FrameSequence, path: Path, loop: int = 0) -> Path:
    """Write a looping animated GIF (the arena's playback format)."""
    path.parent.mkdir(parents=True, exist_ok=True)
    duration_ms = max(10, round(1000.0 / seq.fps))
    first, *rest = [img.convert("P") for img in seq.frames]
    first.save(
        path,
        format="GIF",
        save_all=True,
        append_images=rest,
        duration=duration_ms,
        loop=loop,
    )
    return path


def encode_video(frames_dir: Path, out_path: Path, encoder_cmd: str, fps: float = 30.0) -> Path:
    """Run the operator-configured external encoder (e.g. ffmpeg).

    ``encoder_cmd`` is a template with ``{frames}``, ``{fps}`` and ``{out}``
    placeholders, split on whitespace.
    """
    cmd = [
        part.format(frames=str(frames_dir / "%06d.png"), fps=str(fps), out=str(out_path))
        for part in encoder_cmd.split()
    ]
    subprocess.run(cmd, check=True, capture_output=True)
    return out_path
