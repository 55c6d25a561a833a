"""Dev-only: derive the 1q Clifford -> Z/X90 decomposition table.

Convention: U = Z(q_n) X90 ... X90 Z(q_0), angles are quarter-turns (k*pi/2),
rightmost factor acts first. Targets: 24 distinct Cliffords, exactly 28 X90s
total (4 zero-pulse, 12 one-pulse, 8 two-pulse).
"""
import numpy as np
import itertools

I2 = np.eye(2, dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S = np.array([[1, 0], [0, 1j]], dtype=complex)
X90 = np.array([[1, -1j], [-1j, 1]], dtype=complex) / np.sqrt(2)

def Z(k):  # Rz(k*pi/2)
    th = k * np.pi / 2
    return np.array([[np.exp(-1j * th / 2), 0], [0, np.exp(1j * th / 2)]])

def canon(m):
    mags = np.abs(m)
    mx = mags.max()
    flat = np.argwhere(mags.flatten() > mx - 1e-6).flatten()
    idx = np.unravel_index(flat[0], m.shape)
    return m * (np.abs(m[idx]) / m[idx])

def key(m):
    return tuple(np.round(canon(m).flatten(), 9).view(float))

# BFS closure from {H, S}, identity first.
cliffords = [I2]
keys = {key(I2)}
frontier = [I2]
while frontier:
    nxt = []
    for u in frontier:
        for g in (H, S):
            v = g @ u
            k = key(v)
            if k not in keys:
                keys.add(k)
                cliffords.append(canon(v))
                nxt.append(v)
    frontier = nxt
assert len(cliffords) == 24, len(cliffords)

def seq_matrix(qs):
    """qs = [q0] or [q0,q1] or [q0,q1,q2]; U = Z(q_last) X90 ... X90 Z(q0)."""
    u = Z(qs[0])
    for q in qs[1:]:
        u = Z(q) @ X90 @ u
    return u

def match(u, qs):
    v = seq_matrix(qs)
    return np.allclose(canon(u), canon(v), atol=1e-9)

table = []
for ci, u in enumerate(cliffords):
    found = None
    for a in range(4):
        if match(u, [a]):
            found = [a]; break
    if found is None:
        for a, b in itertools.product(range(4), repeat=2):
            if match(u, [a, b]):
                found = [a, b]; break
    if found is None:
        for a, b, c in itertools.product(range(4), repeat=3):
            if match(u, [a, b, c]):
                found = [a, b, c]; break
    assert found is not None
    table.append(found)

# Demote the four 1-pulse entries whose leading Z is 3 quarter-turns to an
# equivalent 2-pulse form, giving the 28-pulse convention.
for ci, qs in enumerate(table):
    if len(qs) == 2 and qs[0] == 3:
        found = None
        for a, b, c in itertools.product(range(4), repeat=3):
            if match(cliffords[ci], [a, b, c]):
                found = [a, b, c]; break
        assert found is not None
        table[ci] = found

pulses = sum(len(qs) - 1 for qs in table)
from collections import Counter
print("pulse histogram:", Counter(len(qs) - 1 for qs in table))
print("total X90:", pulses)
assert pulses == 28

# Closure check
mats = [canon(u) for u in cliffords]
def find(m):
    k = key(m)
    for i, u in enumerate(mats):
        if key(u) == k:
            return i
    return -1
for i, j in itertools.product(range(24), repeat=2):
    assert find(mats[i] @ mats[j]) >= 0
print("closure OK")

# Verify the virtual-Z compilation identity: U = Z(sum q) * prod G(p_i),
# p_i = -(accumulated Z before that pulse), G(p) = Rz(p) X90 Rz(-p).
def compile_phases(qs, frame0=0.0):
    phi = frame0
    phases = []
    for idx, q in enumerate(qs):
        phi += q * np.pi / 2
        if idx < len(qs) - 1:
            phases.append(-phi)
    return phases, phi

def G(p):
    return Z(2 * p / np.pi) @ X90 @ Z(-2 * p / np.pi)

for ci, qs in enumerate(table):
    phases, phi = compile_phases(qs)
    u = I2
    for p in phases:
        u = G(p) @ u
    u = Z(2 * phi / np.pi) @ u
    assert np.allclose(canon(u), mats[ci], atol=1e-9), ci
print("compile identity OK")

print("\nstatic constexpr int8_t kCliffordZ[24][3] = {")
for qs in table:
    row = qs + [0] * (3 - len(qs))
    print(f"    {{{row[0]}, {row[1]}, {row[2]}}},")
print("};")
print("static constexpr int8_t kCliffordPulses[24] = {")
print("    " + ", ".join(str(len(qs) - 1) for qs in table))
print("};")
