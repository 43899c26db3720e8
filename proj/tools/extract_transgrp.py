#!/usr/bin/env python3
"""Convert GAP transgrp data files (transN.grp[.gz]) into .grp catalog lines.

Usage: extract_transgrp.py DEGREE FILE [--only NAME]
Writes `degree <N> id <name> gens <perm> ...` lines to stdout.
"""
import gzip
import re
import sys


def read_text(path):
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rt", encoding="latin-1") as fh:
        return fh.read()


def entries(text, degree):
    start = text.index("TRANSGRP[%d]" % degree)
    start = text.index("[", text.index(":=", start))
    depth = 0
    cur = []
    out = []
    i = start
    in_str = False
    while i < len(text):
        c = text[i]
        if in_str:
            cur.append(c)
            if c == '"':
                in_str = False
        elif c == '"':
            in_str = True
            cur.append(c)
        elif c == "[":
            depth += 1
            if depth == 2:
                cur = []
            elif depth > 2:
                cur.append(c)
        elif c == "]":
            depth -= 1
            if depth == 1:
                out.append("".join(cur))
            elif depth == 0:
                break
            else:
                cur.append(c)
        elif depth >= 2:
            cur.append(c)
        i += 1
    return out


def parse_entry(body):
    body = re.sub(r"\s+", "", body)
    name = re.search(r'"([^"]*)"', body).group(1)
    perms = re.findall(r"((?:\([0-9,]+\))+)", body[: body.index('"')])
    return name, perms


def main():
    degree = int(sys.argv[1])
    path = sys.argv[2]
    only = sys.argv[4] if len(sys.argv) > 4 and sys.argv[3] == "--only" else None
    text = read_text(path)
    for idx, body in enumerate(entries(text, degree), start=1):
        name, perms = parse_entry(body)
        gid = "T%dn%d" % (degree, idx)
        if only and name != only:
            continue
        label = name.replace(" ", "_")
        print("# %s %s" % (gid, label))
        print("degree %d id %s gens %s" % (degree, gid, " ".join(perms)))


if __name__ == "__main__":
    main()
