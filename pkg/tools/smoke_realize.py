import sys
import itertools
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tcreal.degseq import DegreeSequence
from tcreal import realize as rz
from tcreal import verify as vf

import os
os.environ["TCREAL_DEBUG_ASSERT"] = "1"


def all_seqs(n, maxdeg):
    for tup in itertools.combinations_with_replacement(range(maxdeg, -1, -1), n):
        yield tup


def check_one(tup, mode):
    d = DegreeSequence(tup)
    res = rz.realize_tc(d, mode)
    dec = res.decision
    if not dec.realizable:
        return None
    g, cert, lab = res.graph, res.certificate, res.labeling
    assert sorted(g.degrees(), reverse=True) == list(d.entries), (tup, mode, "degrees")
    assert g.validate(), (tup, mode, "validate")
    assert vf.is_proper(g), (tup, mode, "proper")
    if mode == "simple":
        assert vf.is_simple(g), (tup, mode, "simple")
    assert vf.validate_certificate(g, cert), (tup, mode, "cert")
    assert vf.is_tc(g), (tup, mode, "tc")
    assert lab.max_label <= 2 * len(tup) + 2 or any(
        g.eflag[e] == 0 for e in g.edge_ids()
    ), (tup, mode, "maxlabel", lab.max_label)
    return dec.reason


def main():
    count = {True: 0}
    # simple mode n <= 8
    for n in range(0, 9):
        for tup in all_seqs(n, n - 1 if n else 0):
            check_one(tup, "simple")
            count[True] += 1
        print(f"simple n={n} done")
    # multi mode n <= 5, degrees up to 8
    for n in range(0, 6):
        for tup in all_seqs(n, 8):
            if sum(tup) > 20:
                continue
            check_one(tup, "multi")
        print(f"multi n={n} done")
    # decision agreement vs oracle, simple n<=6
    mism = []
    for n in range(0, 7):
        for tup in all_seqs(n, n - 1 if n else 0):
            d = DegreeSequence(tup)
            mine = rz.check_tc_realizable(d, "simple").realizable
            try:
                orc = vf.oracle_tc_realizable_sequence(d, "simple", cap_n=6, cap_m=15)
            except vf.OracleCapError:
                continue
            if mine != orc:
                mism.append((tup, mine, orc))
    print("simple oracle mismatches:", mism)
    # multi n<=5 m<=8
    mism = []
    for n in range(0, 6):
        for tup in all_seqs(n, 8):
            if sum(tup) // 2 > 8:
                continue
            d = DegreeSequence(tup)
            mine = rz.check_tc_realizable(d, "multi").realizable
            try:
                orc = vf.oracle_tc_realizable_sequence(d, "multi", cap_n=5, cap_m=8)
            except vf.OracleCapError:
                continue
            if mine != orc:
                mism.append((tup, mine, orc))
    print("multi oracle mismatches:", mism)


if __name__ == "__main__":
    main()
