"""Line-delimited JSON cache for Kronecker product expansions.

One record per unordered pair, keyed with the lex-larger operand first.
The file starts with a version header and is append-only; duplicate
keys resolve last-write-wins, which makes interrupted runs harmless.
"""

from __future__ import annotations

import json
import os

from .partitions import Partition, format_partition, parse_partition

HEADER = {"format": "kronmf-cache", "version": 1}


def _key(n: int, lam: Partition, mu: Partition) -> tuple[int, Partition, Partition]:
    if lam < mu:
        lam, mu = mu, lam
    return (n, lam, mu)


class ProductCache:
    def __init__(self, path: str):
        self.path = path
        self._records: dict[tuple[int, Partition, Partition], dict[Partition, int]] = {}
        self._dirty: list[tuple[int, Partition, Partition]] = []
        if os.path.exists(path):
            self._load()

    def _load(self) -> None:
        with open(self.path, "r", encoding="utf-8") as fh:
            first = fh.readline()
            if not first:
                return
            head = json.loads(first)
            if head.get("format") != HEADER["format"]:
                raise ValueError(f"{self.path}: not a kronmf cache file")
            if head.get("version") != HEADER["version"]:
                raise ValueError(f"{self.path}: unsupported cache version {head.get('version')}")
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                key = _key(rec["n"], parse_partition(rec["lambda"]), parse_partition(rec["mu"]))
                self._records[key] = {
                    parse_partition(p): int(m) for p, m in rec["terms"]
                }

    def get(self, n: int, lam: Partition, mu: Partition) -> dict[Partition, int] | None:
        return self._records.get(_key(n, lam, mu))

    def put(self, n: int, lam: Partition, mu: Partition, terms: dict[Partition, int]) -> None:
        key = _key(n, lam, mu)
        if key not in self._records:
            self._records[key] = dict(terms)
            self._dirty.append(key)

    def flush(self) -> None:
        if not self._dirty:
            return
        is_new = not os.path.exists(self.path) or os.path.getsize(self.path) == 0
        with open(self.path, "a", encoding="utf-8") as fh:
            if is_new:
                fh.write(json.dumps(HEADER, separators=(",", ":")) + "\n")
            for key in self._dirty:
                n, lam, mu = key
                terms = self._records[key]
                rec = {
                    "n": n,
                    "lambda": format_partition(lam),
                    "mu": format_partition(mu),
                    "terms": [
                        [format_partition(p), m]
                        for p, m in sorted(terms.items(), reverse=True)
                    ],
                }
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        self._dirty.clear()

    def __len__(self) -> int:
        return len(self._records)
