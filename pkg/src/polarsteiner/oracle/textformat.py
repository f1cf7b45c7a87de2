"""Plain-text export of enumerated generators.

    # family <kind>
    # n <n>
    # q <q>
    # field <order of the field the form is defined over>
    # form <kind> <dim> <i,j,c i,j,c ...>
    # generators <count>
    <row>,<row>,...        one generator per line, RREF rows in hex

Each field element is one hex digit when the field has at most 16
elements, two otherwise.
"""

from __future__ import annotations

import os
from typing import List, Tuple

from ..schemes import SchemeSpec
from .polar import PolarSpaceInstance, from_generators


class FormatError(ValueError):
    pass


def _width(order: int) -> int:
    return 1 if order <= 16 else 2


def dumps(instance: PolarSpaceInstance) -> str:
    spec, form = instance.spec, instance.form
    w = _width(form.q)
    lines = [
        f"# family {spec.kind.value}",
        f"# n {spec.n}",
        f"# q {spec.q}",
        f"# field {form.q}",
        f"# form {form.kind} {form.dim} {form.describe()}",
        f"# generators {instance.size}",
    ]
    for g in instance.generators:
        lines.append(",".join("".join(f"{a:0{w}x}" for a in row) for row in g))
    return "\n".join(lines) + "\n"


def parse(text: str) -> Tuple[dict, List[tuple]]:
    header, gens = {}, []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(" ")
            header[key] = value
            continue
        if "field" not in header:
            raise FormatError("generator line before header")
        w = _width(int(header["field"]))
        rows = []
        for chunk in line.strip().split(","):
            if len(chunk) % w:
                raise FormatError(f"bad row {chunk!r}")
            rows.append(tuple(int(chunk[i:i + w], 16) for i in range(0, len(chunk), w)))
        gens.append(tuple(rows))
    for key in ("family", "n", "q", "field", "generators"):
        if key not in header:
            raise FormatError(f"missing header {key}")
    if int(header["generators"]) != len(gens):
        raise FormatError("generator count does not match header")
    return header, gens


def loads(text: str) -> PolarSpaceInstance:
    header, gens = parse(text)
    spec = SchemeSpec(header["family"], int(header["n"]), int(header["q"]))
    inst = from_generators(spec, gens)
    if f"{inst.form.kind} {inst.form.dim} {inst.form.describe()}" != header.get("form"):
        raise FormatError("form in header differs from the standard form")
    return inst


def cache_path(directory: str, spec: SchemeSpec) -> str:
    return os.path.join(directory, f"{spec.kind.value}_n{spec.n}_q{spec.q}.txt")


def save(instance: PolarSpaceInstance, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(instance))


def load(path: str) -> PolarSpaceInstance:
    with open(path) as fh:
        return loads(fh.read())
