"""The nine rank-five curves A = klmn found by computer search, embedded as a fixture."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .arith import is_prime
from .descent import rank2_certificate
from .errors import CNForgeError
from .normform import admissible_input


@dataclass(frozen=True)
class PaperTableRow:
    A: int
    m_factors: tuple[int, ...]
    l: int
    n: int
    k: int

    @property
    def m(self) -> int:
        return prod(self.m_factors)

    def to_json(self) -> dict:
        return {"A": str(self.A), "m_factors": [str(p) for p in self.m_factors],
                "l": str(self.l), "n": str(self.n), "k": str(self.k)}

    @classmethod
    def from_json(cls, d: dict) -> PaperTableRow:
        return cls(int(d["A"]), tuple(int(p) for p in d["m_factors"]), int(d["l"]), int(d["n"]), int(d["k"]))


PAPER_TABLE = (
    PaperTableRow(237195512400, (7, 127), 464, 561, 1025),
    PaperTableRow(8813542297560, (7, 13, 37), 232, 3245, 3477),
    PaperTableRow(10280171942040, (37, 67), 741, 2024, 2765),
    PaperTableRow(81096660783600, (37, 103), 2139, 2261, 4400),
    PaperTableRow(225722120463840, (13, 19, 31), 505, 7392, 7897),
    PaperTableRow(457485316904280, (7, 31, 37), 895, 7544, 8439),
    PaperTableRow(5117352889729080, (67, 223), 1551, 14105, 15656),
    PaperTableRow(281692457452791000, (79, 409), 9064, 26811, 35875),
    PaperTableRow(24666188870481576600, (13, 31, 223), 46169, 57400, 103569),
)


def verify_row(row: PaperTableRow) -> dict[str, bool]:
    """Exact checks for one table row, ending with a rank-two certificate."""
    m, n, l, k = row.m, row.n, row.l, row.k
    ps = row.m_factors
    checks = {
        "k_is_n_plus_l": k == n + l,
        "A_is_klmn": row.A == k * l * m * n,
        "norm_identity": m * m == n * n + n * l + l * l,
        "m_factors_prime": all(is_prime(p) for p in ps),
        "m_factors_distinct": len(set(ps)) == len(ps),
        "m_factors_1_mod_6": all(p % 6 == 1 for p in ps),
        "pairwise_coprime": gcd(m, n) == gcd(m, l) == gcd(n, l) == 1,
    }
    try:
        cert = rank2_certificate(admissible_input(m, n, l))
        checks["rank2_certificate"] = cert.A == row.A and cert.verify()
    except CNForgeError:
        checks["rank2_certificate"] = False
    return checks
