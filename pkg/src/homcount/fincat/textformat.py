"""Line-oriented ``.cat`` format.

::

    # comment
    obj P0
    obj P1
    mor a : P1 -> P0
    mor id_P0 : P0 -> P0
    id P0 = id_P0
    cmp a . id_P1 = a

Declarations may appear in any order.  Missing ``cmp`` entries are left
undefined in the table so that :func:`validate` can report them.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .category import UNDEFINED, FiniteCategory, Morphism


class CategoryFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<string>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def parse_category(text: str, source: str = "<string>") -> FiniteCategory:
    objects: list[str] = []
    obj_line: dict[str, int] = {}
    arrows: list[tuple[str, str, str, int]] = []
    mor_line: dict[str, int] = {}
    ids: dict[str, tuple[str, int]] = {}
    cmps: list[tuple[str, str, str, int]] = []

    def fail(msg: str, lineno: int) -> CategoryFormatError:
        return CategoryFormatError(msg, lineno, source)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kw = tok[0]
        if kw == "obj":
            if len(tok) != 2:
                raise fail("expected 'obj <name>'", lineno)
            if tok[1] in obj_line:
                raise fail(f"duplicate object {tok[1]!r}", lineno)
            obj_line[tok[1]] = lineno
            objects.append(tok[1])
        elif kw == "mor":
            if len(tok) != 6 or tok[2] != ":" or tok[4] != "->":
                raise fail("expected 'mor <name> : <dom> -> <cod>'", lineno)
            if tok[1] in mor_line:
                raise fail(f"duplicate morphism {tok[1]!r}", lineno)
            mor_line[tok[1]] = lineno
            arrows.append((tok[1], tok[3], tok[5], lineno))
        elif kw == "id":
            if len(tok) != 4 or tok[2] != "=":
                raise fail("expected 'id <obj> = <mor>'", lineno)
            if tok[1] in ids:
                raise fail(f"second identity for {tok[1]!r}", lineno)
            ids[tok[1]] = (tok[3], lineno)
        elif kw == "cmp":
            if len(tok) != 6 or tok[2] != "." or tok[4] != "=":
                raise fail("expected 'cmp <g> . <f> = <h>'", lineno)
            cmps.append((tok[1], tok[3], tok[5], lineno))
        else:
            raise fail(f"unknown keyword {kw!r}", lineno)

    obj_id = {name: i for i, name in enumerate(objects)}
    morphisms = []
    for i, (name, d, c, lineno) in enumerate(arrows):
        for end in (d, c):
            if end not in obj_id:
                raise fail(f"undeclared object {end!r}", lineno)
        morphisms.append(Morphism(i, obj_id[d], obj_id[c], name))
    mor_id = {m.label: m.index for m in morphisms}

    identity = []
    for name in objects:
        if name not in ids:
            raise fail(f"object {name!r} has no identity", obj_line[name])
        mname, lineno = ids[name]
        if mname not in mor_id:
            raise fail(f"undeclared morphism {mname!r}", lineno)
        identity.append(mor_id[mname])
    for name, (_, lineno) in ids.items():
        if name not in obj_id:
            raise fail(f"undeclared object {name!r}", lineno)

    n = len(morphisms)
    table = np.full((n, n), UNDEFINED, dtype=np.int32)
    for g, f, h, lineno in cmps:
        for m in (g, f, h):
            if m not in mor_id:
                raise fail(f"undeclared morphism {m!r}", lineno)
        gi, fi = mor_id[g], mor_id[f]
        if table[gi, fi] != UNDEFINED and table[gi, fi] != mor_id[h]:
            raise fail(f"conflicting entries for {g} . {f}", lineno)
        table[gi, fi] = mor_id[h]
    return FiniteCategory(tuple(objects), tuple(morphisms), tuple(identity), table)


def _check_name(name: str) -> str:
    if not name or "#" in name or any(ch.isspace() for ch in name):
        raise ValueError(f"name {name!r} cannot be written: needs non-empty, no whitespace, no '#'")
    return name


def dump_category(C: FiniteCategory) -> str:
    for name in C.objects + tuple(m.label for m in C.morphisms):
        _check_name(name)
    lines = [f"# {C.n_objects} objects, {C.n_morphisms} morphisms"]
    lines += [f"obj {name}" for name in C.objects]
    lines += [f"mor {m.label} : {C.objects[m.dom]} -> {C.objects[m.cod]}" for m in C.morphisms]
    lines += [f"id {C.objects[a]} = {C.label(e)}" for a, e in enumerate(C.identity)]
    for g in range(C.n_morphisms):
        for f in C.into(C.dom(g)):
            h = int(C.table[g, f])
            if h != UNDEFINED:
                lines.append(f"cmp {C.label(g)} . {C.label(int(f))} = {C.label(h)}")
    return "\n".join(lines) + "\n"


def read_category(path: str | Path) -> FiniteCategory:
    path = Path(path)
    return parse_category(path.read_text(), source=str(path))


def write_category(C: FiniteCategory, path: str | Path) -> None:
    Path(path).write_text(dump_category(C))
