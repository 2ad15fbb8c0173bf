"""Regenerate the golden N-Triples files for the parser conformance snippets.

Uses rdflib as the reference parser. Terms are written with the same escaping
rules as `midarch parse`: only backslash, double quote, LF and CR are escaped.
rdflib renames blank nodes to a random prefix plus `b1`, `b2`, ... in order
of first appearance, so the n-th distinct label in the source is `bn`.

    python3 scripts/golden_ntriples.py crates/core/tests/conformance
"""

import pathlib
import re
import sys

import rdflib
from rdflib import BNode, Literal, URIRef


def escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\r", "\\r")


def term(t, labels):
    if isinstance(t, URIRef):
        return f"<{t}>"
    if isinstance(t, BNode):
        return "_:" + labels(str(t))
    if isinstance(t, Literal):
        s = f'"{escape(str(t))}"'
        if t.language:
            return s + "@" + t.language
        if t.datatype:
            return s + f"^^<{t.datatype}>"
        return s
    raise TypeError(t)


def convert(path):
    text = path.read_text(encoding="utf-8")
    order = list(dict.fromkeys(re.findall(r"_:([A-Za-z0-9_]+)", text)))

    def labels(bnode_id):
        n = int(re.search(r"b(\d+)$", bnode_id).group(1))
        return order[n - 1]

    g = rdflib.Graph()
    g.parse(data=text, format="turtle")

    lines = sorted({f"{term(s, labels)} <{p}> {term(o, labels)} ." for s, p, o in g})
    path.with_suffix(".nt").write_text("".join(l + "\n" for l in lines), encoding="utf-8")


def main():
    root = pathlib.Path(sys.argv[1])
    for path in sorted(root.glob("*.ttl")):
        convert(path)


if __name__ == "__main__":
    main()
