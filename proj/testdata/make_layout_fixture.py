#!/usr/bin/env python3
# Copyright 2026 The Padguard Authors.
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
"""Regenerates layout_fixture.txt from fixture_structs.edl.

The expected numbers come from the host C compiler (offsetof/sizeof/
_Alignof), which keeps this fixture fully independent of the layout engine
under test. Run manually when fixture_structs.edl changes; the output file
is checked in and consumed by the test suite.

Usage: python3 make_layout_fixture.py [--cc gcc]
"""

import argparse
import os
import re
import subprocess
import sys
import tempfile

SCALARS = [
    "uint8_t", "uint16_t", "uint32_t", "uint64_t",
    "int8_t", "int16_t", "int32_t", "int64_t",
    "float", "double", "char", "int", "size_t",
]


def parse_edl(text):
    """Parses the fixture subset: pack directives + typedef struct blocks."""
    text = re.sub(r"/\*.*?\*/", "", text, flags=re.S)
    structs = []  # (name, pack, members); member = (name, type)
    pack = None
    members = None
    for raw in text.splitlines():
        line = re.sub(r"//.*", "", raw).strip()
        if not line:
            continue
        m = re.match(r"#pragma\s+pack\((\d+)\)$", line)
        if m:
            pack = int(m.group(1))
            continue
        if re.match(r"typedef\s+struct\s*{$", line):
            members = []
            continue
        m = re.match(r"}\s*(\w+)\s*;$", line)
        if m:
            structs.append((m.group(1), pack, members))
            pack = None
            members = None
            continue
        m = re.match(r"([A-Za-z_]\w*)\s*(\**)\s*([A-Za-z_]\w*)\s*((?:\[\d+\])*)\s*;$", line)
        if not m:
            sys.exit(f"unparsed line: {raw!r}")
        base, stars, name, dims = m.groups()
        if stars:
            ty = ("ptr",)
        elif base in SCALARS:
            ty = ("scalar", base)
        else:
            ty = ("ref", base)
        for count in reversed(re.findall(r"\[(\d+)\]", dims)):
            ty = ("array", ty, int(count))
        members.append((name, ty))
    return structs


def leaf_paths(ty, by_name):
    """Maximal contiguous scalar paths: scalars, pointers, and scalar arrays
    are single leaves; struct members and struct arrays recurse."""
    kind = ty[0]
    if kind in ("scalar", "ptr"):
        yield ""
        return
    if kind == "array":
        inner = ty[1]
        if inner[0] in ("scalar", "ptr") or (inner[0] == "array" and _all_scalar(inner)):
            yield ""
            return
        for i in range(ty[2]):
            for sub in leaf_paths(inner, by_name):
                yield f"[{i}]{sub}"
        return
    if kind == "ref":
        for mname, mty in by_name[ty[1]][2]:
            for sub in leaf_paths(mty, by_name):
                yield f".{mname}{sub}"
        return
    raise AssertionError(kind)


def _all_scalar(ty):
    while ty[0] == "array":
        ty = ty[1]
    return ty[0] in ("scalar", "ptr")


def emit_c(structs, by_name):
    out = ["#include <stddef.h>", "#include <stdint.h>", "#include <stdio.h>", ""]
    for name, pack, members in structs:
        if pack is not None:
            out.append(f"#pragma pack(push, {pack})")
        out.append("typedef struct {")
        for mname, mty in members:
            out.append(f"    {render_type(mty, '', mname)};")
        out.append(f"}} {name};")
        if pack is not None:
            out.append("#pragma pack(pop)")
        out.append("")
    out.append("int main(void) {")
    for name, _, members in structs:
        out.append(f'    printf("struct {name} %zu %zu\\n", sizeof({name}), _Alignof({name}));')
        for mname, _ in members:
            out.append(
                f'    printf("field {name} {mname} %zu %zu\\n", '
                f"offsetof({name}, {mname}), sizeof((({name}*)0)->{mname}));")
        for mname, mty in members:
            for path in leaf_paths(mty, by_name):
                full = mname + path
                out.append(
                    f'    printf("leaf {name} {full} %zu %zu\\n", '
                    f"offsetof({name}, {full}), sizeof((({name}*)0)->{full}));")
        out.append(f'    printf("end {name}\\n");')
    out.append("    return 0;")
    out.append("}")
    return "\n".join(out) + "\n"


def render_type(ty, prefix, name):
    dims = ""
    while ty[0] == "array":
        dims += f"[{ty[2]}]"
        ty = ty[1]
    if ty[0] == "scalar":
        base = ty[1]
    elif ty[0] == "ptr":
        base = "char*"
    else:
        base = ty[1]
    return f"{base} {name}{dims}"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cc", default="gcc")
    args = ap.parse_args()

    here = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(here, "fixture_structs.edl")) as f:
        structs = parse_edl(f.read())
    by_name = {name: (name, pack, members) for name, pack, members in structs}

    c_source = emit_c(structs, by_name)
    with tempfile.TemporaryDirectory() as tmp:
        c_path = os.path.join(tmp, "fixture.c")
        bin_path = os.path.join(tmp, "fixture")
        with open(c_path, "w") as f:
            f.write(c_source)
        subprocess.run([args.cc, "-std=c11", "-o", bin_path, c_path], check=True)
        table = subprocess.run([bin_path], check=True, capture_output=True, text=True).stdout

    cc_id = subprocess.run([args.cc, "--version"], check=True, capture_output=True,
                           text=True).stdout.splitlines()[0]
    header = (
        "# Layout reference table. Generated by make_layout_fixture.py from\n"
        f"# fixture_structs.edl using: {cc_id} (x86_64, C11 mode).\n"
        "# Lines: struct <name> <size> <align> | field <struct> <member> <offset>\n"
        "# <size> | leaf <struct> <path> <offset> <size> | end <name>.\n"
    )
    with open(os.path.join(here, "layout_fixture.txt"), "w") as f:
        f.write(header + table)
    print(f"wrote layout_fixture.txt ({len(structs)} structs)")


if __name__ == "__main__":
    main()
