"""Chern-Mather, CSM and Kazhdan-Lusztig classes of cominuscule Schubert varieties."""

from ._core import InvalidArgument, cc_irreducible, csm, euler, mather, run_cli

__all__ = ["InvalidArgument", "cc_irreducible", "csm", "euler", "mather", "run_cli"]
