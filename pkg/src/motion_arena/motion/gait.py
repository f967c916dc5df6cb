"""Parametric gait model behind the golden-reference stimuli.

Cyclic actions (walking, running, waving, turning) are driven by a small
harmonic series per marker: ``pos(t) = mean + sum_k amp_k * sin(k*w*t + phase_k)``
evaluated component-wise, with ``w = 2*pi / period``.  One-shot actions
(bowing, jumping, lying down, ...) are keyframe sequences blended with a
cosine ease.  Both kinds live in versioned JSON data files; the
coefficients are replaceable data, not code.

Optional gender/mood/weight axes are linear offsets: each axis carries a
full set of mean and amplitude deltas, scaled by a signed coefficient
(+1/-1 for the two attribute values, 0 when the axis is absent).
"""

from __future__ import annotations

import cmath
import json
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from motion_arena.errors import ParamMismatch, SpecError
from motion_arena.motion.layout import MarkerLayout, build_layout
from motion_arena.motion.spec import Action, MotionSpec

Vec2 = tuple[float, float]

_AXES = ("gender", "mood", "weight")


@dataclass(frozen=True)
class Harmonic:
    """One frequency component: per-component amplitude and phase."""

    amp: Vec2
    phase: Vec2


@dataclass(frozen=True)
class MarkerParams:
    mean: Vec2
    harmonics: tuple[Harmonic, ...]


@dataclass(frozen=True)
class AxisDelta:
    """Signed per-marker offsets for one attribute axis.

    ``mean`` maps role -> position delta; ``amp`` maps role -> per-harmonic
    amplitude delta.  Roles without an entry have zero delta.
    """

    mean: dict[str, Vec2] = field(default_factory=dict)
    amp: dict[str, tuple[Vec2, ...]] = field(default_factory=dict)


@dataclass(frozen=True)
class GaitParams:
    """Harmonic coefficients for every marker of one layout."""

    period: float
    markers: dict[str, MarkerParams]
    axes: dict[str, AxisDelta] = field(default_factory=dict)

    @property
    def harmonic_count(self) -> int:
        return len(next(iter(self.markers.values())).harmonics)

    def validate(self, layout: MarkerLayout) -> None:
        """Check structural invariants against a layout."""
        if self.period <= 0:
            raise ParamMismatch("period must be positive")
        if set(self.markers) != set(layout.roles):
            missing = set(layout.roles) - set(self.markers)
            extra = set(self.markers) - set(layout.roles)
            raise ParamMismatch(f"marker/param mismatch: missing={sorted(missing)} extra={sorted(extra)}")
        counts = {len(mp.harmonics) for mp in self.markers.values()}
        if len(counts) != 1 or 0 in counts:
            raise ParamMismatch(f"harmonic count must be uniform and >= 1, got {sorted(counts)}")
        for left, right in layout.paired_roles():
            lp = self.markers[left].harmonics[0].phase
            rp = self.markers[right].harmonics[0].phase
            for c in (0, 1):
                if abs(rp[c] - lp[c]) != math.pi:
                    raise ParamMismatch(
                        f"{left}/{right} fundamental phases must differ by pi exactly, "
                        f"got {lp[c]} vs {rp[c]}"
                    )


@dataclass(frozen=True)
class KeyframeMotion:
    """One-shot action: timed poses blended with a cosine ease, then held."""

    duration: float
    times: tuple[float, ...]
    poses: tuple[dict[str, Vec2], ...]
    axes: dict[str, AxisDelta] = field(default_factory=dict)


@dataclass(frozen=True)
class PoseFrame:
    """All marker positions at one instant, in normalized [0,1]^2 canvas
    coordinates with the origin at the top-left."""

    phase: float
    positions: tuple[Vec2, ...]


@dataclass(frozen=True)
class MarkerTrajectory:
    spec: MotionSpec
    fps: float
    frames: tuple[PoseFrame, ...]


def _clamp01(v: float) -> float:
    return 0.0 if v < 0.0 else 1.0 if v > 1.0 else v


# ---------------------------------------------------------------------------
# data files

def _data_text(name: str) -> str:
    return resources.files("motion_arena.motion").joinpath("data").joinpath(name).read_text()


def _parse_axis(raw: dict) -> AxisDelta:
    mean = {role: (v[0], v[1]) for role, v in raw.get("mean", {}).items()}
    amp = {
        role: tuple((a[0], a[1]) for a in per_harmonic)
        for role, per_harmonic in raw.get("amp", {}).items()
    }
    return AxisDelta(mean=mean, amp=amp)


@lru_cache(maxsize=None)
def load_motion(action: Action) -> GaitParams | KeyframeMotion:
    """Load the versioned motion definition for one action."""
    doc = json.loads(_data_text(f"{action.value}.json"))
    axes = {name: _parse_axis(raw) for name, raw in doc.get("axes", {}).items()}
    if doc["kind"] == "harmonic":
        markers = {}
        for role, mp in doc["markers"].items():
            harmonics = tuple(
                Harmonic(amp=(h["amp"][0], h["amp"][1]), phase=(h["phase"][0], h["phase"][1]))
                for h in mp["harmonics"]
            )
            markers[role] = MarkerParams(mean=(mp["mean"][0], mp["mean"][1]), harmonics=harmonics)
        return GaitParams(period=doc["period"], markers=markers, axes=axes)
    if doc["kind"] == "keyframe":
        times = tuple(kf["time"] for kf in doc["keyframes"])
        poses = tuple(
            {role: (v[0], v[1]) for role, v in kf["pose"].items()} for kf in doc["keyframes"]
        )
        return KeyframeMotion(duration=doc["duration"], times=times, poses=poses, axes=axes)
    raise SpecError(f"unknown motion kind {doc['kind']!r} for action {action.value}")


# ---------------------------------------------------------------------------
# layout adaptation

def _phasor_mid(a: Harmonic, b: Harmonic) -> Harmonic:
    """Harmonic of the midpoint of two markers sharing a frequency."""
    amp: list[float] = []
    phase: list[float] = []
    for c in (0, 1):
        z = (cmath.rect(a.amp[c], a.phase[c]) + cmath.rect(b.amp[c], b.phase[c])) / 2.0
        r, phi = cmath.polar(z)
        if r < 1e-15:
            r, phi = 0.0, 0.0
        amp.append(r)
        phase.append(phi)
    return Harmonic(amp=(amp[0], amp[1]), phase=(phase[0], phase[1]))


def _mirror(h: Harmonic) -> Harmonic:
    return Harmonic(amp=h.amp, phase=(h.phase[0] + math.pi, h.phase[1] + math.pi))


def _mid_vec(a: Vec2, b: Vec2) -> Vec2:
    return ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)


def params_for_layout(base: GaitParams, layout: MarkerLayout) -> GaitParams:
    """Restrict or extend 15-marker params to another canonical layout.

    Reduced layouts keep the subset of markers.  The 30-marker layout adds
    segment midpoints: their harmonics come from phasor-averaging the two
    parent markers, and right-side midpoints are constructed as the exact
    mirror of their left twin so bilateral antiphase stays bitwise.
    Midpoint markers carry mean deltas only.
    """
    if set(layout.roles) == set(base.markers):
        return base
    if not layout.midpoints:
        markers = {role: base.markers[role] for role in layout.roles}
        axes = {
            name: AxisDelta(
                mean={r: v for r, v in d.mean.items() if r in markers},
                amp={r: v for r, v in d.amp.items() if r in markers},
            )
            for name, d in base.axes.items()
        }
        return GaitParams(period=base.period, markers=markers, axes=axes)

    markers = dict(base.markers)
    axes_mean: dict[str, dict[str, Vec2]] = {name: dict(d.mean) for name, d in base.axes.items()}
    for role, (pa, pb) in layout.midpoints.items():
        if role.startswith("right-"):
            continue
        a, b = markers[pa], markers[pb]
        derived = MarkerParams(
            mean=_mid_vec(a.mean, b.mean),
            harmonics=tuple(_phasor_mid(ha, hb) for ha, hb in zip(a.harmonics, b.harmonics)),
        )
        markers[role] = derived
        twin = "right-" + role[len("left-"):] if role.startswith("left-") else None
        if twin and twin in layout.midpoints:
            ta, tb = layout.midpoints[twin]
            markers[twin] = MarkerParams(
                mean=_mid_vec(markers[ta].mean, markers[tb].mean),
                harmonics=tuple(_mirror(h) for h in derived.harmonics),
            )
        for name, d in base.axes.items():
            da = d.mean.get(pa, (0.0, 0.0))
            db = d.mean.get(pb, (0.0, 0.0))
            if da != (0.0, 0.0) or db != (0.0, 0.0):
                axes_mean[name][role] = _mid_vec(da, db)
                if twin and twin in layout.midpoints:
                    ta, tb = layout.midpoints[twin]
                    axes_mean[name][twin] = _mid_vec(
                        d.mean.get(ta, (0.0, 0.0)), d.mean.get(tb, (0.0, 0.0))
                    )
    axes = {
        name: AxisDelta(mean=axes_mean[name], amp=dict(base.axes[name].amp))
        for name in base.axes
    }
    return GaitParams(
        period=base.period,
        markers={role: markers[role] for role in layout.roles},
        axes=axes,
    )


def keyframes_for_layout(base: KeyframeMotion, layout: MarkerLayout) -> KeyframeMotion:
    """Keyframe analogue of :func:`params_for_layout` (plain averaging)."""
    sample = base.poses[0]
    if set(layout.roles) == set(sample):
        return base
    poses = []
    for pose in base.poses:
        out = dict(pose)
        for role, (pa, pb) in layout.midpoints.items():
            out[role] = _mid_vec(pose[pa], pose[pb])
        poses.append({role: out[role] for role in layout.roles})
    axes = {}
    for name, d in base.axes.items():
        mean = {r: v for r, v in d.mean.items() if r in layout.roles}
        for role, (pa, pb) in layout.midpoints.items():
            da = d.mean.get(pa, (0.0, 0.0))
            db = d.mean.get(pb, (0.0, 0.0))
            if da != (0.0, 0.0) or db != (0.0, 0.0):
                mean[role] = _mid_vec(da, db)
        axes[name] = AxisDelta(mean=mean)
    return KeyframeMotion(duration=base.duration, times=base.times, poses=tuple(poses), axes=axes)


# ---------------------------------------------------------------------------
# evaluation

def pose_at(params: GaitParams, layout: MarkerLayout, spec: MotionSpec, t: float) -> PoseFrame:
    """Evaluate the harmonic series for every marker at time ``t``.

    Time is reduced modulo the period before evaluation, so the pose is
    bit-identical across whole-period shifts of ``t`` whenever ``t + period``
    is exactly representable.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if set(params.markers) != set(layout.roles):
        raise ParamMismatch(
            f"params define {len(params.markers)} markers, layout wants {layout.marker_count}"
        )
    coeffs = spec.axis_coefficients()
    tr = math.fmod(t, params.period)
    omega = 2.0 * math.pi / params.period
    positions = []
    for role in layout.roles:
        mp = params.markers[role]
        x, y = mp.mean
        for axis in _AXES:
            c = coeffs[axis]
            if c:
                dx, dy = params.axes.get(axis, AxisDelta()).mean.get(role, (0.0, 0.0))
                x += c * dx
                y += c * dy
        for h, harm in enumerate(mp.harmonics):
            ax, ay = harm.amp
            for axis in _AXES:
                c = coeffs[axis]
                if c:
                    damp = params.axes.get(axis, AxisDelta()).amp.get(role)
                    if damp is not None:
                        ax += c * damp[h][0]
                        ay += c * damp[h][1]
            theta = (h + 1) * omega * tr
            x += ax * math.sin(theta + harm.phase[0])
            y += ay * math.sin(theta + harm.phase[1])
        positions.append((_clamp01(x), _clamp01(y)))
    phase = omega * tr
    if phase >= 2.0 * math.pi:
        phase = 0.0
    return PoseFrame(phase=phase, positions=tuple(positions))


def keyframe_pose(motion: KeyframeMotion, layout: MarkerLayout, spec: MotionSpec, t: float) -> PoseFrame:
    """Evaluate a keyframe motion at time ``t`` (held at the ends)."""
    if t < 0:
        raise ValueError("t must be non-negative")
    coeffs = spec.axis_coefficients()
    tc = min(t, motion.times[-1])
    i = bisect_right(motion.times, tc)
    if i >= len(motion.times):
        blended = motion.poses[-1]
    else:
        t0, t1 = motion.times[i - 1], motion.times[i]
        u = (tc - t0) / (t1 - t0)
        w = (1.0 - math.cos(math.pi * u)) / 2.0
        p0, p1 = motion.poses[i - 1], motion.poses[i]
        blended = {
            role: (
                p0[role][0] + (p1[role][0] - p0[role][0]) * w,
                p0[role][1] + (p1[role][1] - p0[role][1]) * w,
            )
            for role in p0
        }
    positions = []
    for role in layout.roles:
        x, y = blended[role]
        for axis in _AXES:
            c = coeffs[axis]
            if c:
                dx, dy = motion.axes.get(axis, AxisDelta()).mean.get(role, (0.0, 0.0))
                x += c * dx
                y += c * dy
        positions.append((_clamp01(x), _clamp01(y)))
    phase = 2.0 * math.pi * min(t / motion.duration, 1.0)
    if phase >= 2.0 * math.pi:
        phase = 2.0 * math.pi - 1e-12
    return PoseFrame(phase=phase, positions=tuple(positions))


def motion_for_spec(spec: MotionSpec) -> tuple[GaitParams | KeyframeMotion, MarkerLayout]:
    """Motion definition adapted to the spec's marker count."""
    layout = build_layout(spec.marker_count)
    base = load_motion(spec.action)
    if isinstance(base, GaitParams):
        return params_for_layout(base, layout), layout
    return keyframes_for_layout(base, layout), layout


def natural_duration(spec: MotionSpec) -> float:
    """One cycle for cyclic actions, full timeline for one-shot actions."""
    motion = load_motion(spec.action)
    return motion.period if isinstance(motion, GaitParams) else motion.duration


def synthesize(spec: MotionSpec, duration: float, fps: float) -> MarkerTrajectory:
    """Sample the spec's motion at uniform intervals.

    Frame count is ``round(duration * fps)``; deterministic for a given spec.
    """
    if duration <= 0:
        raise SpecError("duration must be positive")
    if fps <= 0:
        raise SpecError("fps must be positive")
    motion, layout = motion_for_spec(spec)
    n = max(1, round(duration * fps))
    frames = []
    for i in range(n):
        t = i / fps
        if isinstance(motion, GaitParams):
            frames.append(pose_at(motion, layout, spec, t))
        else:
            frames.append(keyframe_pose(motion, layout, spec, t))
    return MarkerTrajectory(spec=spec, fps=fps, frames=tuple(frames))
