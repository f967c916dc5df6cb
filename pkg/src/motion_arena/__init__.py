"""Arena platform for rating model-generated point-light motion animations.

The package is organised around the life cycle of one benchmark run:

* :mod:`motion_arena.motion` synthesises golden-reference point-light
  stimuli and renders them to black/white frame sequences.
* :mod:`motion_arena.prompts` enumerates the benchmark variants and fills
  the prompt templates sent to models.
* :mod:`motion_arena.gateway` calls model endpoints and extracts candidate
  animation scripts from raw responses.
* :mod:`motion_arena.sandbox` executes extracted scripts under resource
  limits and captures the produced animation frames.
* :mod:`motion_arena.arena` schedules anonymised battles, ingests votes and
  maintains the Elo leaderboard on top of a write-ahead vote log.
* :mod:`motion_arena.analytics` computes win-rate matrices, both-bad rates,
  per-action breakdowns, rater agreement and score correlations.
* :mod:`motion_arena.service` exposes everything over HTTP for the voting
  UI; :mod:`motion_arena.cli` is a thin operator client.
"""

__version__ = "0.1.0"
