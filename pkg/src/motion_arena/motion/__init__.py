"""Golden-reference point-light motion synthesis and rendering."""

from motion_arena.motion.layout import MarkerLayout, build_layout
from motion_arena.motion.spec import (
    ACTIONS,
    CYCLIC_ACTIONS,
    Action,
    Gender,
    Mood,
    MotionSpec,
    Weight,
)
from motion_arena.motion.gait import GaitParams, PoseFrame, MarkerTrajectory, load_motion, pose_at, synthesize
from motion_arena.motion.render import FrameSequence, reference_frame, render_frames
from motion_arena.motion.golden import golden_script

__all__ = [
    "ACTIONS",
    "CYCLIC_ACTIONS",
    "Action",
    "FrameSequence",
    "GaitParams",
    "Gender",
    "MarkerLayout",
    "MarkerTrajectory",
    "Mood",
    "MotionSpec",
    "PoseFrame",
    "Weight",
    "build_layout",
    "golden_script",
    "load_motion",
    "pose_at",
    "reference_frame",
    "render_frames",
    "synthesize",
]
