"""JSON and CSV forms of rank certificates.

Every number is written as an exact decimal (or p/q) string so that values
beyond 2**63 survive any JSON consumer.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from math import gcd

from .curve import Point
from .descent import RankCertificate, collinearity_check, rank2_certificate, scaled_certificate
from .normform import admissible_input
from .triples import three_triples

SCHEMA_VERSION = "1"


def fmt(x: Fraction | int) -> str:
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def point_json(p: Point) -> list[str] | str:
    return "inf" if p.is_infinity else [fmt(p.x), fmt(p.y)]


def certificate_document(cert: RankCertificate) -> dict:
    base = cert.input.solution
    s = cert.solution
    slope, _ = collinearity_check(s)
    return {
        "schema_version": SCHEMA_VERSION,
        "A": str(cert.A),
        "m": str(base.m),
        "n": str(base.n),
        "l": str(base.l),
        "k": str(base.k),
        "q": str(cert.scaling_q),
        "triples": [[fmt(t.a), fmt(t.b), fmt(t.c)] for t in three_triples(s)],
        "points": [point_json(p) for p in cert.points],
        "classes": [str(c) for c in sorted(int(c) for c in cert.classes)],
        "closure_order": cert.closure_order,
        "collinear_slope": fmt(slope),
        "checks": cert.checks(),
    }


def certify(m: int, n: int, l: int, q: int = 1) -> RankCertificate:
    """Certificate for (m, n, l) scaled by q; a non-primitive triple is treated as a scaling."""
    g = gcd(gcd(m, n), l)
    cert = rank2_certificate(admissible_input(m // g, n // g, l // g))
    return scaled_certificate(cert, g * q)


def document_from_json(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    return doc


def verify_document(doc: dict) -> bool:
    """Rebuild the certificate from the document's inputs and compare field by field."""
    cert = certify(int(doc["m"]), int(doc["n"]), int(doc["l"]), int(doc["q"]))
    rebuilt = certificate_document(cert)
    return rebuilt == doc and all(rebuilt["checks"].values())


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":"))


CSV_FIELDS = ["A", "m", "n", "l", "k", "q", "closure_order", "collinear_slope", "classes", "all_checks"]


def csv_row(doc: dict) -> dict:
    row = {f: doc[f] for f in CSV_FIELDS[:-2]}
    row["classes"] = ";".join(doc["classes"])
    row["all_checks"] = str(all(doc["checks"].values())).lower()
    return row


def to_csv(docs) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for d in docs:
        w.writerow(csv_row(d))
    return buf.getvalue()
