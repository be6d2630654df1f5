"""Pure-Python level-profile kernels.

A level profile is the list of breakpoints (t, f(t)) of the piecewise
linear function f = alpha o pi, refined so that every time at which f
crosses or touches an integer is a breakpoint.
"""

from fractions import Fraction as Q
from math import ceil, floor

ZERO, STABLE, UP, DOWN = 0, 1, 2, 3


class LevelError(ValueError):
    pass


def level_profile(f0, slopes, durations):
    t = Q(0)
    f = Q(f0)
    out = [(t, f)]
    for s, d in zip(slopes, durations):
        end = f + s * d
        if s > 0:
            n = floor(f) + 1
            while n < end:
                out.append((t + (n - f) / s, Q(n)))
                n += 1
        elif s < 0:
            n = ceil(f) - 1
            while n > end:
                out.append((t + (n - f) / s, Q(n)))
                n -= 1
        t += d
        f = end
        out.append((t, f))
    return out


def scan_sections(profile):
    """Split [0,1] into (t_a, t_b, kind, level) sections.

    First return to the starting level takes precedence (stable section);
    otherwise the stretch is directed up to the next integer level, or
    directed down to the previous one.
    """
    n = len(profile)
    m = profile[0][1]
    if m.denominator != 1:
        raise LevelError(f"starting level {m} is not an integer")
    out = []
    i = 0
    while i < n - 1:
        nxt = profile[i + 1][1]
        if nxt == m:
            j = i + 1
            while j + 1 < n and profile[j + 1][1] == m:
                j += 1
            out.append((profile[i][0], profile[j][0], ZERO, int(m)))
            i = j
        elif nxt > m:
            ret = up = None
            for j in range(i + 1, n):
                fj = profile[j][1]
                if fj == m:
                    ret = j
                    break
                if up is None and fj == m + 1:
                    up = j
            if ret is not None:
                out.append((profile[i][0], profile[ret][0], STABLE, int(m)))
                i = ret
            elif up is not None:
                out.append((profile[i][0], profile[up][0], UP, int(m)))
                i = up
                m += 1
            else:
                raise LevelError(f"path ends strictly between levels {m} and {m + 1}")
        else:
            j = i + 1
            while j < n and profile[j][1] != m - 1:
                if profile[j][1] >= m:
                    raise LevelError(f"local minimum strictly between levels {m - 1} and {m}")
                j += 1
            if j == n:
                raise LevelError(f"path ends strictly between levels {m - 1} and {m}")
            out.append((profile[i][0], profile[j][0], DOWN, int(m)))
            i = j
            m -= 1
    return out


def analyze(f0, slopes, durations):
    """Profile and sections in one pass; sections is a LevelError on failure."""
    profile = level_profile(f0, slopes, durations)
    try:
        secs = scan_sections(profile)
    except LevelError as exc:
        secs = exc
    return profile, secs
