"""Line-oriented .grp data files for curated groups.

Layout:
    group <name>
    field <p> <k>
    dim <n>
    order <decimal>
    sylow <decimal>
    form <kind>            (optional; matrix block follows)
    <matrix text block>
    gen <id> rep <j>       (matrix block follows; rep 0 is the defining one)
    <matrix text block>
    central <signed letters...> order <m>
"""

from __future__ import annotations

from ..linalg import Mat


def _matrix_lines(mat: Mat):
    return mat.to_text().strip().splitlines()


def write_grp(path, *, name, field, order, sylow, reps, forms=None, central=None):
    """reps: list of generator-image lists; reps[j][i] = image of gen i."""
    lines = [
        f"group {name}",
        f"field {field.p} {field.k}",
        f"dim {reps[0][0].rows}",
        f"order {order}",
        f"sylow {sylow}",
    ]
    for kind, mat in forms or []:
        lines.append(f"form {kind}")
        lines.extend(_matrix_lines(mat))
    n_gens = len(reps[0])
    for j, images in enumerate(reps):
        if len(images) != n_gens:
            raise ValueError("rep has wrong number of generator images")
    for i in range(n_gens):
        for j, images in enumerate(reps):
            lines.append(f"gen {i} rep {j}")
            lines.extend(_matrix_lines(images[i]))
    for word, m in central or []:
        lines.append("central " + " ".join(str(l) for l in word) + f" order {m}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_grp(path):
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip() and not ln.startswith("#")]
    pos = 0

    def take():
        nonlocal pos
        ln = lines[pos]
        pos += 1
        return ln

    def take_matrix():
        nonlocal pos
        header = lines[pos]
        rows = int(header.split()[0])
        block = lines[pos : pos + rows + 1]
        pos += rows + 1
        return Mat.from_text("\n".join(block))

    meta = {}
    forms = []
    gens = {}
    central = []
    while pos < len(lines):
        ln = take()
        parts = ln.split()
        if parts[0] == "group":
            meta["name"] = ln[len("group ") :].strip()
        elif parts[0] == "field":
            meta["p"], meta["k"] = int(parts[1]), int(parts[2])
        elif parts[0] == "dim":
            meta["dim"] = int(parts[1])
        elif parts[0] == "order":
            meta["order"] = int(parts[1])
        elif parts[0] == "sylow":
            meta["sylow"] = int(parts[1])
        elif parts[0] == "form":
            forms.append((parts[1], take_matrix()))
        elif parts[0] == "gen":
            i, j = int(parts[1]), int(parts[3]) if len(parts) > 3 else 0
            gens[(i, j)] = take_matrix()
        elif parts[0] == "central":
            oidx = parts.index("order")
            word = tuple(int(x) for x in parts[1:oidx])
            central.append((word, int(parts[oidx + 1])))
        else:
            raise ValueError(f"unknown .grp directive: {ln}")
    n_gens = 1 + max(i for i, _ in gens)
    n_reps = 1 + max(j for _, j in gens)
    reps = [[gens[(i, j)] for i in range(n_gens)] for j in range(n_reps)]
    return meta, forms, reps, central
