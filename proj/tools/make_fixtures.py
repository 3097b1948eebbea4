#!/usr/bin/env python3
"""Regenerates fixtures/ from layered diagram words.

A word is read bottom to top. Each op acts on the strands currently open at
the top of the picture, numbered from 0 at the left:

  s+ i   crossing of strands i, i+1; the strand moving right goes over
  s- i   crossing of strands i, i+1; the strand moving right goes under
  cap i  joins strands i and i+1
  cup i  opens two new strands at positions i, i+1
  y i    strand i splits into two (trivalent vertex)
  l i    strands i and i+1 merge (trivalent vertex)
  f i    strands i and i+1 meet at a 4-valent vertex and leave as two
"""

import argparse
import pathlib


class Layered:
    def __init__(self, m):
        self.next = 1
        self.X, self.V, self.F, self.O = [], [], [], []
        self.bottom = [self.new() for _ in range(m)]
        self.cur = list(self.bottom)
        self.thick = set()

    def new(self):
        self.next += 1
        return self.next - 1

    def rename(self, old, new):
        for lst in (self.X, self.V, self.F):
            for node in lst:
                for k, v in enumerate(node):
                    if v == old:
                        node[k] = new
        for seq in (self.bottom, self.cur):
            for k, v in enumerate(seq):
                if v == old:
                    seq[k] = new

    def apply(self, op, i):
        c = self.cur
        if op in ("s+", "s-"):
            x, y = c[i], c[i + 1]
            z, w = self.new(), self.new()
            self.X.append([y, w, z, x] if op == "s+" else [x, y, w, z])
            c[i:i + 2] = [z, w]
        elif op == "cap":
            x, y = c[i], c[i + 1]
            del c[i:i + 2]
            if x == y:
                self.O.append(x)
            else:
                self.rename(y, x)
        elif op == "cup":
            label = self.new()
            c[i:i] = [label, label]
        elif op == "y":
            x = c[i]
            left, right = self.new(), self.new()
            self.V.append([x, right, left])
            c[i:i + 1] = [left, right]
        elif op == "l":
            x, y = c[i], c[i + 1]
            o = self.new()
            self.V.append([x, y, o])
            c[i:i + 2] = [o]
        elif op == "f":
            x, y = c[i], c[i + 1]
            z, w = self.new(), self.new()
            self.F.append([x, y, w, z])
            c[i:i + 2] = [z, w]
        else:
            raise ValueError(op)

    def text(self, comment=None):
        used = sorted({v for node in self.X + self.V + self.F for v in node}
                      | set(self.O) | set(self.bottom) | set(self.cur))
        # Compact relabeling 1..N in order of first use keeps files readable.
        order = []
        for node in self.X + self.V + self.F:
            order += node
        order += self.O + self.bottom + self.cur
        ids = {}
        for v in order:
            ids.setdefault(v, len(ids) + 1)
        assert len(ids) == len(used)
        r = lambda seq: " ".join(str(ids[v]) for v in seq)
        lines = []
        if comment:
            lines.append("# " + comment)
        lines.append(f"tangle m={len(self.bottom)} n={len(self.cur)}")
        lines += ["X " + r(x) for x in self.X]
        lines += ["V " + r(v) for v in self.V]
        lines += ["F " + r(f) for f in self.F]
        lines += ["O " + str(ids[o]) for o in self.O]
        lines.append(("B " + r(self.bottom)).rstrip() + " | " + r(self.cur))
        lines[-1] = lines[-1].replace("  ", " ").rstrip()
        if self.thick:
            lines.append("T " + r(sorted(self.thick, key=lambda v: ids[v])))
        return "\n".join(lines) + "\n"


def build(m, word, thick_ops=()):
    """word: 'op i op i ...'; thick_ops: indices of ops whose new label is thick."""
    b = Layered(m)
    tokens = word.split()
    for k in range(0, len(tokens), 2):
        before = b.next
        b.apply(tokens[k], int(tokens[k + 1]))
        if k // 2 in thick_ops:
            b.thick.add(before)
    return b


def insert_kink(text, label, sign):
    """Curls edge `label`: its second occurrence moves to a new crossing."""
    lines = text.splitlines()
    nums = [int(w) for line in lines if not line.startswith(("#", "tangle"))
            for w in line.split()[1:] if w.isdigit()]
    loop, tail = max(nums) + 1, max(nums) + 2
    # Text order of occurrences: X, V, F lines, then bottom, then top.
    order = [k for prefix in "XVFB" for k, line in enumerate(lines) if line.startswith(prefix + " ")]
    seen = 0
    for k in order:
        words = lines[k].split()
        for j in range(1, len(words)):
            if words[j] == str(label):
                seen += 1
                if seen == 2:
                    words[j] = str(tail)
        lines[k] = " ".join(words)
    kink = [loop, loop, label, tail] if sign == "+" else [label, loop, loop, tail]
    header = next(k for k, line in enumerate(lines) if line.startswith("tangle"))
    lines.insert(header + 1, "X " + " ".join(map(str, kink)))
    return "\n".join(lines) + "\n"


def write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


RAW = {
    "identity11": "tangle m=1 n=1\nB 1 | 1\n",
    "identity22": "tangle m=2 n=2\nB 1 2 | 1 2\n",
    "one_crossing": "tangle m=2 n=2\nX 1 2 4 3\nB 1 2 | 3 4\n",
    "circle": "tangle m=0 n=0\nO 1\nB |\n",
    "three_circles": "tangle m=0 n=0\nO 1\nO 2\nO 3\nB |\n",
    "kink_positive": "tangle m=1 n=1\nX 3 3 1 2\nB 1 | 2\n",
    "kink_negative": "tangle m=1 n=1\nX 1 3 3 2\nB 1 | 2\n",
    "theta": "tangle m=0 n=0\nV 1 2 3\nV 3 2 1\nB |\n",
    "theta_thick2": "tangle m=0 n=0\nV 1 2 3\nV 3 2 1\nB |\nT 2\n",
    "handcuff": "tangle m=0 n=0\nV 1 1 2\nV 2 3 3\nB |\n",
    "handcuff_thick2": "tangle m=0 n=0\nV 2 1 1\nV 2 3 3\nB |\nT 2\n",
    "tetrahedron": "tangle m=0 n=0\nV 1 4 3\nV 2 5 1\nV 3 6 2\nV 4 5 6\nB |\n",
    "h_form": "tangle m=2 n=2\nV 1 2 5\nV 5 4 3\nB 1 2 | 3 4\nT 5\n",
    "i_form": "tangle m=2 n=2\nV 5 2 4\nV 5 3 1\nB 1 2 | 3 4\nT 5\n",
    "claws": "tangle m=3 n=3\nV 1 2 3\nV 6 5 4\nB 1 2 3 | 4 5 6\n",
}

LAYERED = {
    "sigma3": (2, "s+ 0 s+ 0 s+ 0"),
    "sigma_minus3": (2, "s- 0 s- 0 s- 0"),
    "trefoil": (0, "cup 0 cup 2 s+ 1 s+ 1 s+ 1 cap 0 cap 0"),
    "unlink2": (0, "cup 0 cup 2 cap 0 cap 0"),
    "bigon": (1, "y 0 l 0"),
    "ladder6": (0, "cup 0 y 0 y 2 l 1 y 1 s+ 1 l 0 l 1 cap 0"),
    "ladder8": (0, "cup 0 y 0 y 2 l 1 y 1 l 0 y 0 l 1 l 1 cap 0"),
}

# (name, move, expectation, (m, wordA), (m, wordB))
PAIRS = [
    ("r2_braid", "R2", "exact", (2, "s+ 0 s- 0"), (2, "")),
    ("r2_wide", "R2", "exact", (3, "s+ 0 s+ 1 s- 1"), (3, "s+ 0")),
    ("r2_closed", "R2", "exact", (0, "cup 0 cup 2 s- 1 s+ 1 s+ 1 cap 0 cap 0"), (0, "cup 0 cup 2 s+ 1 cap 0 cap 0")),
    ("r3_positive", "R3", "exact", (3, "s+ 0 s+ 1 s+ 0"), (3, "s+ 1 s+ 0 s+ 1")),
    ("r3_mixed", "R3", "exact", (3, "s+ 0 s+ 1 s- 0"), (3, "s- 1 s+ 0 s+ 1")),
    ("r3_in_context", "R3", "exact", (3, "s- 1 s+ 0 s+ 1 s+ 0 cap 1"), (3, "s- 1 s+ 1 s+ 0 s+ 1 cap 1")),
    ("m3_sigma3", "+3", "root", (2, "s+ 0 s+ 0 s+ 0"), (2, "")),
    ("m3_sigma_minus3", "-3", "root", (2, "s- 0 s- 0 s- 0"), (2, "")),
    ("m3_trefoil", "+3", "root", (0, "cup 0 cup 2 s+ 1 s+ 1 s+ 1 cap 0 cap 0"), (0, "cup 0 cup 2 cap 0 cap 0")),
    ("m3_wide", "+3", "root", (3, "s+ 0 s+ 1 s+ 1 s+ 1 s+ 0"), (3, "s+ 0 s+ 0")),
    ("m3_mixed_sign", "-3", "root", (4, "s+ 1 s- 0 s- 0 s- 0 s+ 2"), (4, "s+ 1 s+ 2")),
    ("r4_over", "R4", "root", (3, "s+ 0 s+ 1 l 0 y 0"), (3, "l 1 s+ 0 y 0")),
    ("r4_under", "R4", "root", (3, "s- 0 s- 1 l 0 y 0"), (3, "l 1 s- 0 y 0")),
    ("r4_split", "R4", "root", (2, "y 0 s+ 1 s+ 0 l 1"), (2, "s+ 0 y 1 l 1")),
    ("r5_plus", "R5", "root", (2, "s+ 0 l 0 y 0"), (2, "l 0 y 0")),
    ("r5_minus", "R5", "root", (2, "s- 0 l 0 y 0"), (2, "l 0 y 0")),
    ("r5_theta", "R5", "root", (0, "cup 0 y 0 s+ 0 l 1 cap 0"), (0, "cup 0 y 0 l 1 cap 0")),
    ("n4_over", "N4", "root", (3, "s+ 0 s+ 1 f 0"), (3, "f 1 s+ 0 s+ 1")),
    ("n4_under", "N4", "root", (3, "s- 0 s- 1 f 0"), (3, "f 1 s- 0 s- 1")),
    ("n5_plus", "N5", "root", (2, "s+ 0 f 0"), (2, "f 0")),
    ("n5_minus", "N5", "root", (2, "s- 0 f 0"), (2, "f 0")),
    ("n5_in_context", "N5", "root", (3, "s+ 1 s+ 1 f 1 s- 0"), (3, "f 1 s- 0")),
]

RAW_PAIRS = [
    ("r1_arc_positive", "R1", "exact", "identity11", "kink_positive"),
    ("r1_arc_negative", "R1", "exact", "identity11", "kink_negative"),
    ("r1_one_crossing", "R1", "exact", "one_crossing",
     "tangle m=2 n=2\nX 1 2 4 5\nX 6 6 3 5\nB 1 2 | 3 4\n"),
    ("r1_trefoil", "R1", "exact", "trefoil", None),
    ("ih_theta", "IH", "exact", "theta_thick2", "handcuff_thick2"),
    ("ih_h_to_i", "IH", "exact", "h_form", "i_form"),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    texts = dict(RAW)
    for name, (m, word) in LAYERED.items():
        texts[name] = build(m, word).text()
    texts["trefoil_kinked"] = insert_kink(texts["trefoil"], 1, "-")

    for name, text in texts.items():
        write(out / f"{name}.tng", text)

    manifest = ["# pair <name> <fileA> <fileB> <move> <exact|root>"]
    for name, move, expect, (ma, wa), (mb, wb) in PAIRS:
        write(out / "pairs" / f"{name}_a.tng", build(ma, wa).text())
        write(out / "pairs" / f"{name}_b.tng", build(mb, wb).text())
        manifest.append(f"pair {name} {name}_a.tng {name}_b.tng {move} {expect}")
    for name, move, expect, a, b in RAW_PAIRS:
        ta = texts.get(a, a)
        tb = texts["trefoil_kinked"] if b is None else texts.get(b, b)
        write(out / "pairs" / f"{name}_a.tng", ta)
        write(out / "pairs" / f"{name}_b.tng", tb)
        manifest.append(f"pair {name} {name}_a.tng {name}_b.tng {move} {expect}")
    write(out / "pairs" / "manifest.txt", "\n".join(manifest) + "\n")


if __name__ == "__main__":
    main()
