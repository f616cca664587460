#!/usr/bin/env python3
# Copyright 2026 The tritough Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes data/g0.json, the embedded component graph G0.

Layout of the 86-cycle C0 = v1..v86 (w lies on one side, the 9 chords on the
other). Slot kinds:

  S   odd,  degree 3, short spoke (joined to w)
  L   even, degree 3, long spoke end (joined to some u_i)
  o   odd,  degree 2, middle of a spoke face  w u_a L o L u_b w
  i   odd,  degree 2, one of the three on a patch face (chord-bounded)
  X/Y chord ends (odd/even)

Every patch is the 14-cycle  X L o L i L o L i L o L i Y  closed by the chord
X-Y; the remaining six chord faces are 8-cycles.  The rotation at v_i is
clockwise [chord, v_{i+1}, spoke, v_{i-1}] with absent entries dropped; w sees
its neighbours in increasing cycle order.
"""

import json
import pathlib
import sys

N_CYCLE = 86


def layout():
    kinds = {}
    chords = []

    def patch(x):
        # x .. x+13
        seq = "XLoLiLoLiLoLiY"
        for k, c in enumerate(seq):
            kinds[x + k] = c
        chords.append((x, x + 13))

    def extra_face(p):
        kinds[p], kinds[p + 1], kinds[p + 2] = "L", "o", "L"

    # Three branches with a single ring face: L D X..Y S R
    for base in (3, 23, 43):
        kinds[base] = "X"
        extra_face(base + 1)
        patch(base + 4)
        kinds[base + 18] = "S"
        kinds[base + 19] = "Y"
        chords.append((base, base + 19))
    # Branch with two ring faces: L2 D L1 D X..Y S R1 S R2 (wraps to v1, v2).
    kinds[63] = "X"
    extra_face(64)
    kinds[67] = "X"
    extra_face(68)
    patch(71)
    kinds[85] = "S"
    kinds[86] = "Y"
    kinds[1] = "S"
    kinds[2] = "Y"
    chords.append((67, 86))
    chords.append((63, 2))
    assert sorted(kinds) == list(range(1, N_CYCLE + 1))
    return kinds, chords


def main(out):
    kinds, chords = layout()
    w = 0
    v = {i: i for i in range(1, N_CYCLE + 1)}
    spokes = [i for i in range(1, N_CYCLE + 1) if kinds[i] in "SL"]
    long_ends = [i for i in spokes if kinds[i] == "L"]
    u = {k + 1: N_CYCLE + 1 + k for k in range(len(long_ends))}
    u_at = {end: u[k + 1] for k, end in enumerate(long_ends)}
    chord_of = {}
    for a, b in chords:
        chord_of[a] = b
        chord_of[b] = a

    def nxt(i):
        return i % N_CYCLE + 1

    def prv(i):
        return (i - 2) % N_CYCLE + 1

    rotation = {}
    for i in range(1, N_CYCLE + 1):
        rot = []
        if i in chord_of:
            rot.append(v[chord_of[i]])
        rot.append(v[nxt(i)])
        if kinds[i] == "L":
            rot.append(u_at[i])
        elif kinds[i] == "S":
            rot.append(w)
        rot.append(v[prv(i)])
        rotation[v[i]] = rot
    w_rot = []
    for i in spokes:
        w_rot.append(u_at[i] if kinds[i] == "L" else v[i])
    rotation[w] = w_rot
    for end, uid in u_at.items():
        rotation[uid] = [v[end], w]

    # Spoke faces (o) and patch faces (i) group their degree-2 vertices.
    groups = []
    for k in range(0, len(long_ends), 2):
        a, b = long_ends[k], long_ends[k + 1]
        assert b == a + 2 and kinds[a + 1] == "o"
        groups.append([u_at[a], v[a + 1], u_at[b]])
    for a, b in chords:
        if b - a == 13:
            groups.append([v[a + 4], v[a + 8], v[a + 12]])

    def color(i):
        if i == w:
            return "white"
        if i > N_CYCLE:
            return "gray"
        k = kinds[i]
        if k in "LY" or i % 2 == 0:
            return "white"
        if k == "o":
            return "gray"
        if k == "i":
            return "black"
        return "light_gray"

    names = {w: "w"}
    names.update({v[i]: f"v{i}" for i in v})
    names.update({u[k]: f"u{k}" for k in u})
    doc = {
        "format": "tritough-g0/1",
        "orientation": "clockwise",
        "w": w,
        "cycle": [v[i] for i in range(1, N_CYCLE + 1)],
        "u": [u[k] for k in sorted(u)],
        "vertices": [
            {"id": x, "name": names[x], "color": color(x)}
            for x in sorted(names)
        ],
        "rotation": {str(x): rotation[x] for x in sorted(rotation)},
        "s_triangle_groups": groups,
    }
    pathlib.Path(out).write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/g0.json")
