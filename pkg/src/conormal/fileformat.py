"""Reading and writing the line-oriented ``corners 1`` poset format.

::

    corners 1
    n 2
    face X 0
    face H1 1 1
    face H2 1 2
    adj H1 X
    adj H2 X

``#`` starts a comment.  All ``face`` lines come before ``adj`` lines.  When
no ``adj`` line is present and some face has positive codimension, the
adjacencies are derived from the index sets.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .poset import Adjacency, CornerPoset, Face, auto_adjacency, ensure_valid

MAGIC = "corners"
VERSION = "1"


def _int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno) from None


def parse(text: str | bytes, *, check: bool = True) -> CornerPoset:
    """Parse a poset file.

    With ``check=False`` the structural validation is skipped so callers can
    inspect the violations themselves; line-level syntax is always enforced.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None

    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((lineno, tokens))
    if not lines:
        raise ParseError("empty input")

    lineno, tokens = lines[0]
    if tokens != [MAGIC, VERSION]:
        raise ParseError(f"expected header '{MAGIC} {VERSION}'", lineno)
    if len(lines) < 2 or lines[1][1][0] != "n":
        raise ParseError("expected 'n <count>' after the header", lines[1][0] if len(lines) > 1 else None)
    lineno, tokens = lines[1]
    if len(tokens) != 2:
        raise ParseError("expected 'n <count>'", lineno)
    n = _int(tokens[1], "n", lineno)
    if n < 0:
        raise ParseError("n must be >= 0", lineno)

    faces: list[Face] = []
    by_id: dict[str, Face] = {}
    adj_lines: list[tuple[int, str, str]] = []
    for lineno, tokens in lines[2:]:
        kind = tokens[0]
        if kind == "face":
            if adj_lines:
                raise ParseError("'face' line after an 'adj' line", lineno)
            if len(tokens) < 3:
                raise ParseError("expected 'face <id> <codim> <indices...>'", lineno)
            face_id = tokens[1]
            codim = _int(tokens[2], "codim", lineno)
            indices = tuple(_int(t, "index", lineno) for t in tokens[3:])
            if codim < 0:
                raise ParseError("codim must be >= 0", lineno)
            if len(indices) != codim:
                raise ParseError(f"face {face_id} has codim {codim} but {len(indices)} indices", lineno)
            if any(b <= a for a, b in zip(indices, indices[1:])):
                raise ParseError(f"indices of face {face_id} are not strictly increasing", lineno)
            if face_id in by_id:
                raise ParseError(f"duplicate face id {face_id}", lineno)
            face = Face(face_id, codim, indices)
            faces.append(face)
            by_id[face_id] = face
        elif kind == "adj":
            if len(tokens) != 3:
                raise ParseError("expected 'adj <lower-id> <upper-id>'", lineno)
            adj_lines.append((lineno, tokens[1], tokens[2]))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)

    adjacencies = set()
    for lineno, lo, up in adj_lines:
        for face_id in (lo, up):
            if face_id not in by_id:
                raise ParseError(f"unknown face id {face_id}", lineno)
        diff = set(by_id[lo].index_set) - set(by_id[up].index_set)
        if len(diff) != 1 or not set(by_id[up].index_set) <= set(by_id[lo].index_set):
            raise ParseError(f"index sets of {lo} and {up} do not differ by a single index", lineno)
        adjacencies.add(Adjacency(lo, up, diff.pop()))

    if not adj_lines and any(f.codim > 0 for f in faces):
        adjacencies = set(auto_adjacency(faces))

    poset = CornerPoset(n, faces, adjacencies)
    return ensure_valid(poset) if check else poset


def serialize(poset: CornerPoset) -> str:
    out = [f"{MAGIC} {VERSION}", f"n {poset.n}"]
    for f in poset.faces:
        out.append(" ".join(["face", f.id, str(f.codim), *map(str, f.index_set)]))
    for a in sorted(poset.adjacencies):
        out.append(f"adj {a.lower} {a.upper}")
    return "\n".join(out) + "\n"


def load(path: str | Path, *, check: bool = True) -> CornerPoset:
    return parse(Path(path).read_bytes(), check=check)


def dump(poset: CornerPoset, path: str | Path) -> None:
    Path(path).write_text(serialize(poset), encoding="utf-8")
