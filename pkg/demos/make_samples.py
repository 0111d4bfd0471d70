"""Regenerate the bundled sample designs, bit-exactly.

- samples/fano/fano.blk: the 7 lines of the projective plane over GF(2),
  read off the package's own subspace enumeration (points = 1-dimensional
  subspaces of GF(2)^3 in enumeration order, blocks = point sets of the
  2-dimensional subspaces). A 2-(7,3,1) design.
- samples/pairs/pairs42.blk: all 2-subsets of [4]. A 2-(4,2,1) design.
- samples/fano_complement/fano_complement.blk: complements of the Fano
  blocks in [7]. A 2-(7,4,2) design.
"""

from itertools import combinations
from pathlib import Path

from mpinc import enumerate_subspaces, intersection_dim

ROOT = Path(__file__).resolve().parent.parent / "samples"


def fano_blocks():
    points = enumerate_subspaces(3, 2, 1)
    lines = enumerate_subspaces(3, 2, 2)
    blocks = []
    for L in lines:
        blocks.append(tuple(sorted(
            i + 1 for i, P in enumerate(points) if intersection_dim(P, L) == 1
        )))
    return blocks


def write_design(path, header, blocks):
    lines = [header] if header else []
    lines.extend(" ".join(str(x) for x in block) for block in blocks)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {path} ({len(blocks)} blocks)")


def main():
    fano = fano_blocks()
    write_design(ROOT / "fano" / "fano.blk", "# 2 7 3 1", fano)
    write_design(
        ROOT / "pairs" / "pairs42.blk",
        "# 2 4 2 1",
        [tuple(p) for p in combinations(range(1, 5), 2)],
    )
    write_design(
        ROOT / "fano_complement" / "fano_complement.blk",
        "# 2 7 4 2",
        [tuple(x for x in range(1, 8) if x not in set(B)) for B in fano],
    )


if __name__ == "__main__":
    main()
