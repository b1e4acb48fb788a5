#!/usr/bin/env python3
"""Writes the multiplication tables in data/groups."""
import itertools
import pathlib
import sys


def perm_group(perms):
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    return [[index[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]


def symmetric(n):
    return perm_group(itertools.permutations(range(n)))


def parity(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]) % 2


def alternating(n):
    return perm_group(p for p in itertools.permutations(range(n)) if parity(p) == 0)


def dihedral(n):
    rot = [tuple((x + k) % n for x in range(n)) for k in range(n)]
    ref = [tuple((k - x) % n for x in range(n)) for k in range(n)]
    return perm_group(rot + ref)


def cyclic(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def write(out, name, table):
    lines = [f"group {name} order {len(table)}"]
    lines += [" ".join(str(v) for v in row) for row in table]
    (out / f"{name}.grp").write_text("\n".join(lines) + "\n")


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "data" / "groups")
    out.mkdir(parents=True, exist_ok=True)
    write(out, "S3", symmetric(3))
    write(out, "S4", symmetric(4))
    write(out, "A4", alternating(4))
    write(out, "D4", dihedral(4))
    for n in range(2, 8):
        write(out, f"Z{n}", cyclic(n))


if __name__ == "__main__":
    main()
