"""The .src on-disk code format.

Canonical layout (all element codes decimal, blocks in the user's original
block order):

    srcv1
    field <p> <k> mod=<c_k,...,c_0>
    profile <n1xm1,...>
    dim <k>
    gen 1
    <block 1 matrix, rows ';'-separated>
    <blank>
    <block 2 matrix>
    gen 2
    ...

Blocks inside a stanza are separated by exactly one blank line; writing then
parsing a canonical file is the identity byte for byte.
"""

from __future__ import annotations

from .ambient import MatrixTuple, format_profile, parse_profile, profile_create
from .code import LinearCode, code_create
from .errors import ParseError
from .field import field_create
from .matq import Mat, format_mat

MAGIC = "srcv1"


def write_src_text(code: LinearCode) -> str:
    profile = code.profile
    field = code.field
    mod = ",".join(str(c) for c in reversed(field.modulus))
    lines = [MAGIC,
             f"field {field.p} {field.k} mod={mod}",
             f"profile {format_profile(profile.original_blocks)}",
             f"dim {code.k}"]
    for i, gen in enumerate(code.basis, start=1):
        lines.append(f"gen {i}")
        user_blocks = profile.to_user_order(gen.blocks)
        for j, block in enumerate(user_blocks):
            if j > 0:
                lines.append("")
            lines.append(format_mat(block))
    return "\n".join(lines) + "\n"


def write_src(code: LinearCode, path) -> None:
    with open(path, "w") as fh:
        fh.write(write_src_text(code))


def parse_src_text(text: str) -> LinearCode:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    pos = 0

    def take(expect_prefix=None):
        nonlocal pos
        if pos >= len(lines):
            raise ParseError("unexpected end of file", line=pos + 1)
        line = lines[pos]
        pos += 1
        if expect_prefix is not None and not line.startswith(expect_prefix):
            raise ParseError(f"expected {expect_prefix!r}, got {line!r}", line=pos)
        return line

    if take() != MAGIC:
        raise ParseError(f"bad magic, expected {MAGIC!r}", line=1)
    parts = take("field ").split()
    try:
        p, k = int(parts[1]), int(parts[2])
        mod_txt = parts[3]
        if not mod_txt.startswith("mod="):
            raise ValueError
        mod = [int(c) for c in mod_txt[4:].split(",")]
        mod.reverse()  # file stores c_k..c_0
    except (IndexError, ValueError):
        raise ParseError("malformed field line", line=2)
    field = field_create(p, k, mod)
    raw_blocks = parse_profile(take("profile ").removeprefix("profile "))
    profile = profile_create(field, raw_blocks)
    try:
        dim = int(take("dim ").split()[1])
    except (IndexError, ValueError):
        raise ParseError("malformed dim line", line=4)
    gens = []
    for i in range(1, dim + 1):
        header = take("gen ")
        if header != f"gen {i}":
            raise ParseError(f"expected 'gen {i}', got {header!r}", line=pos)
        user_blocks = []
        for j, (n, m) in enumerate(raw_blocks):
            if j > 0:
                blank = take()
                if blank != "":
                    raise ParseError("expected blank line between blocks",
                                     line=pos)
            mat_line = take()
            try:
                mat = Mat(field, [[int(x) for x in part.split()]
                                  for part in mat_line.split(";")])
            except Exception:
                raise ParseError(f"malformed matrix {mat_line!r}", line=pos)
            if (mat.nrows, mat.ncols) != (n, m):
                raise ParseError(
                    f"block {j + 1} of gen {i} has shape "
                    f"{mat.nrows}x{mat.ncols}, profile says {n}x{m}", line=pos)
            user_blocks.append(mat)
        gens.append(MatrixTuple(profile, profile.from_user_order(user_blocks)))
    if pos != len(lines):
        raise ParseError("trailing content after last generator", line=pos + 1)
    code = code_create(profile, gens)
    if code.k != dim:
        raise ParseError(f"generators span dimension {code.k}, header says {dim}")
    return code


def parse_src(path) -> LinearCode:
    with open(path) as fh:
        return parse_src_text(fh.read())
