"""Liquid perception and closed-loop pouring on a simulated 2D desk.

Subsystems: a particle pouring simulator with labeled rendering, a small
differentiable-tensor engine, three fully-convolutional network families,
dense optical flow encoding, a morphological motion baseline, thermal-style
calibration and labeling, slack precision-recall evaluation, and an
HMM + PID pouring controller.
"""

__version__ = "0.1.0"
