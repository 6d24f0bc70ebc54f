"""Small named stacky fans used throughout the tests and notebooks."""

from __future__ import annotations

from .fan import StackyFan


def projective_line() -> StackyFan:
    return StackyFan(1, ((1,), (-1,)), ((0,), (1,)), name="P1")


def projective_plane() -> StackyFan:
    return StackyFan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2)), name="P2")


def p1_times_p1() -> StackyFan:
    return StackyFan(
        2, ((1, 0), (0, 1), (-1, 0), (0, -1)), ((0, 1), (1, 2), (2, 3), (0, 3)), name="P1xP1"
    )


def weighted_p112() -> StackyFan:
    return StackyFan(2, ((1, 0), (0, 1), (-1, -2)), ((0, 1), (1, 2), (0, 2)), name="P(1,1,2)")


def stacky_line(k: int) -> StackyFan:
    """P^1 with the marking on the positive ray multiplied by k."""
    return StackyFan(1, ((k,), (-1,)), ((0,), (1,)), name=f"P1[{k}]")


def two_quadrants() -> StackyFan:
    """First and third quadrants: P^1 x P^1 minus two points."""
    return StackyFan(2, ((1, 0), (0, 1), (-1, 0), (0, -1)), ((0, 1), (2, 3)), name="P1xP1-2pts")


def affine_plane() -> StackyFan:
    return StackyFan(2, ((1, 0), (0, 1)), ((0, 1),), name="A2")


def affine_space(rank: int = 3) -> StackyFan:
    rays = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    return StackyFan(rank, rays, (tuple(range(rank)),), name=f"A{rank}")


CORPUS = {
    "P1": projective_line,
    "P2": projective_plane,
    "P1xP1": p1_times_p1,
    "P112": weighted_p112,
    "P1_k2": lambda: stacky_line(2),
    "P1_k3": lambda: stacky_line(3),
    "P1_k4": lambda: stacky_line(4),
    "two_quadrants": two_quadrants,
    "A2": affine_plane,
}
