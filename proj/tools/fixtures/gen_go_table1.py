#!/usr/bin/env python3
"""Builds fixtures/go_table1.json and fixtures/go_table1_canonical.json.

Newform data (dimensions, Atkin-Lehner eigenvalues, traces) comes from
PARI/GP through cypari2. Orbits get two letterings:

  lmfdb  dimension, then the trace vector (a_1, a_2, ...) lexicographically
  table  the lettering used by the genus-3 curve table: elliptic curves
         first, in Cremona's isogeny-class order (PARI elldata), then the
         higher-dimensional orbits by dimension, Atkin-Lehner sign vector
         (+ before -, primes ascending), and traces of a_p for p not
         dividing N by absolute value

A curve is the set of orbits whose quotient of J_0(N)^new is a smooth plane
quartic. CANONICAL lists them in lmfdb letters; --detect recomputes them by
looking for the unique quartic relation among a rational basis of the
q-expansions (slow at the larger levels).

go_table1.json reads each table letter X as the LMFDB orbit N.2.a.x.
go_table1_canonical.json uses the orbits that actually give the curve.
The two differ where the letterings differ (217, 295, 329, 475, 1175, 459).

    pip install cypari2 passagemath-pari-elldata
    python3 tools/fixtures/gen_go_table1.py [--detect] [--out fixtures]
"""

import argparse
import itertools
import json
import os
import sys

import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9, silent=True)


def use_elldata():
    try:
        import sage_wheels
    except ImportError:
        sys.exit("needs the Cremona tables: pip install passagemath-pari-elldata")
    for root in sage_wheels.__path__:
        share = os.path.join(root, "share", "pari")
        if os.path.isdir(os.path.join(share, "elldata")):
            pari.default("datadir", share)
            return
    sys.exit("elldata directory not found under sage_wheels/share/pari")

SQUAREFREE = [43, 57, 65, 82, 91, 97, 109, 113, 118, 123, 127, 139, 141, 149, 151, 179, 187, 203, 217, 239, 295, 329]
P_EXACT = [475, 1175]
P_SQUARED = [99, 169, 369, 855]
REMAINING = [243, 459]

# Smooth plane quartic compositions, lmfdb letters (output of --detect).
CANONICAL = {
    43: [["a", "b"]], 57: [["a", "b", "c"]], 65: [["a", "b"], ["a", "c"]], 82: [["a", "b"]],
    91: [["a", "c"]], 97: [["a"]], 109: [["b"]], 113: [["c"]], 118: [["a", "c", "d"]],
    123: [["b", "c"]], 127: [["a"]], 139: [["b"]], 141: [["c", "d", "e"]], 149: [["a"]],
    151: [["a"]], 179: [["b"]], 187: [["e"]], 203: [["f"]], 217: [["b"]], 239: [["a"]],
    295: [["b"]], 329: [["d"]], 475: [["d"]], 1175: [["e"]], 99: [["a", "b", "d"]],
    169: [["b"]], 369: [["d"]], 855: [["h"]], 243: [["a", "d"], ["e"]], 459: [["a", "k"]],
}

TRACE_BOUND = 100


def factor(n):
    f = pari(f"factor({n})")
    return [(int(p), int(e)) for p, e in zip(f[0], f[1])]


def letter(k):
    s = ""
    k += 1
    while k > 0:
        k -= 1
        s = chr(ord("a") + k % 26) + s
        k //= 26
    return s


def orbits(n):
    pari(f"mf=mfinit([{n},2],0); E=mfeigenbasis(mf)")
    count = int(pari("#E"))
    fa = factor(n)
    al = {p: pari(f"mfatkineigenvalues(mf,{p**e})") for p, e in fa}
    out = []
    for i in range(count):
        dim = int(pari.poldegree(pari(f"mffields(mf)[{i + 1}]")))
        # trace() doubles a bare integer, so go through the coefficient field.
        tr = [int(x) for x in pari(f"my(P=mffields(mf)[{i + 1}]);"
                                   f"[if(type(c)==\"t_POLMOD\",trace(c),c*poldegree(P))|c<-mfcoefs(E[{i + 1}],{TRACE_BOUND})]")]
        signs = {}
        for p, _ in fa:
            vals = {int(x) for x in al[p][i]}
            assert len(vals) == 1, (n, i, p, vals)
            signs[p] = vals.pop()
        out.append({"idx": i, "dim": dim, "traces": tr[1:], "al": signs})
    lm = sorted(out, key=lambda o: (o["dim"], o["traces"]))
    for k, o in enumerate(lm):
        o["lmfdb"] = letter(k)
    primes = [p for p in range(2, TRACE_BOUND + 1) if int(pari.isprime(p))]
    cremona = cremona_classes(n, primes)
    for o in out:
        if o["dim"] == 1:
            ap = [o["traces"][p - 1] for p in primes]
            match = [c for c, v in cremona.items() if v == ap]
            assert len(match) == 1, (n, o["lmfdb"], match)
            o["cremona"] = match[0]
    elliptic = sorted((o for o in out if o["dim"] == 1), key=lambda o: (len(o["cremona"]), o["cremona"]))
    coprime = [p for p in primes if n % p]
    rest = sorted((o for o in out if o["dim"] > 1),
                  key=lambda o: (o["dim"], [0 if o["al"][p] == 1 else 1 for p, _ in fa],
                                 [(abs(o["traces"][p - 1]), o["traces"][p - 1] < 0) for p in coprime]))
    for k, o in enumerate(elliptic + rest):
        o["table"] = letter(k).upper()
    return fa, out


def cremona_classes(n, primes):
    """Isogeny class letter -> [a_p for p in primes]."""
    out = {}
    for name, coeffs, _ in pari(f"ellsearch({n})"):
        cls = str(name)[len(str(n)):].rstrip("0123456789")
        if cls not in out:
            e = pari.ellinit(coeffs)
            out[cls] = [int(pari.ellap(e, p)) for p in primes]
    return out


def rational_basis(idx, dim, bound):
    pari(f"v=mfcoefs(E[{idx + 1}],{bound}); v=[lift(x)|x<-v]")
    if dim == 1:
        return [pari("v")]
    return [pari(f"[polcoef(x,{j},y)|x<-v]") for j in range(dim)]


def relation_kernel(forms, degree, bound):
    ser = [pari.Ser(pari.Pol(pari.Vecrev(f), "q"), "q", bound + 1) for f in forms]
    monos = list(itertools.combinations_with_replacement(range(len(forms)), degree))
    cols = []
    for m in monos:
        s = 1
        for k in m:
            s = s * ser[k]
        cols.append([pari.polcoef(pari.truncate(s), j, "q") for j in range(bound + 1)])
    mat = pari.matrix(bound + 1, len(monos), [cols[c][j] for j in range(bound + 1) for c in range(len(monos))])
    return pari.matker(mat)


def detect(n, obs):
    index = n
    for p, _ in factor(n):
        index = index * (p + 1) // p
    small = [o for o in obs if o["dim"] <= 3]
    found = []
    for r in (1, 2, 3):
        for combo in itertools.combinations(small, r):
            if sum(o["dim"] for o in combo) != 3:
                continue
            forms = []
            for o in combo:
                forms += rational_basis(o["idx"], o["dim"], 8 * index // 12 + 5)
            if len(relation_kernel(forms, 2, 4 * index // 12 + 5)) > 0:
                continue  # hyperelliptic or degenerate
            if len(relation_kernel(forms, 4, 8 * index // 12 + 5)) == 1:
                found.append(sorted(o["lmfdb"] for o in combo))
    return sorted(found)


def newform_record(n, fa, o):
    rec = {
        "label": f"{n}.2.a.{o['lmfdb']}",
        "level": n,
        "weight": 2,
        "hecke_degree": o["dim"],
        "nebentypus_trivial": True,
        "atkin_lehner": {str(p): o["al"][p] for p, e in fa if e == 1},
        "provenance": {
            "source": "PARI/GP mfinit/mfatkineigenvalues; label by the LMFDB ordering rule",
            "url": f"https://www.lmfdb.org/ModularForm/GL2/Q/holomorphic/{n}/2/a/{o['lmfdb']}/",
            "table_letter": o["table"],
        },
    }
    pp = {str(p): o["al"][p] for p, e in fa if e > 1}
    if pp:
        rec["atkin_lehner_prime_power"] = pp
    return rec


def curve_records(n, category, obs, canonical_sets, reading):
    by_lmfdb = {o["lmfdb"]: o for o in obs}
    curves = []
    for comp in canonical_sets:
        letters = sorted(by_lmfdb[x]["table"] for x in comp)
        if reading == "letter-identity":
            members = [x.lower() for x in letters]
        else:
            members = sorted(comp)
        assert sum(by_lmfdb[m]["dim"] for m in members) == 3, (n, comp, members)
        curves.append({
            "label": f"{n}." + "".join(letters),
            "level": n,
            "genus": 3,
            "newforms": [f"{n}.2.a.{m}" for m in members],
            "category": category,
            "provenance": {
                "table": "GO Table 1",
                "table_name": f"C_{n}^{{{','.join(letters)}}}",
                "reading": reading,
                "canonical_newforms": [f"{n}.2.a.{m}" for m in sorted(comp)],
            },
        })
    single = len(curves) == 1
    for c in curves:
        letters = c["label"].split(".")[1]
        aliases = []
        if len(letters) > 1:
            aliases.append(f"{n}." + ",".join(letters))
            if single:
                aliases += [f"{n}.{x}" for x in letters]
        if aliases:
            c["aliases"] = aliases
    return curves


def certificates_459():
    src = ("transcribed from the published classification of good curves at level 459; "
           "the local components at 3 have conductor 27 and are not re-derived here")
    out = []
    for cid, triple, n in (("459-p3-bbb", ["459.2.a.b"] * 3, 1),
                           ("459-p3-bii", ["459.2.a.b", "459.2.a.i", "459.2.a.i"], 4)):
        out.append({
            "id": cid,
            "scope": {"triple": triple, "prime": 3},
            "payload": {"kind": "direct", "hom_gl2": 0, "hom_d": 1, "embedding_epsilons": [-1] * n},
            "provenance": {"source": src},
        })
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--detect", action="store_true", help="recompute the curve compositions")
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))
    args = ap.parse_args()
    use_elldata()

    levels = ([(n, "squarefree") for n in SQUAREFREE] + [(n, "p-exact") for n in P_EXACT] +
              [(n, "p-squared") for n in P_SQUARED] + [(n, "remaining") for n in REMAINING])
    newforms = []
    curves = {"letter-identity": [], "canonical": []}
    for n, category in levels:
        fa, obs = orbits(n)
        comps = CANONICAL[n]
        if args.detect:
            found = detect(n, obs)
            if found != sorted(sorted(c) for c in comps):
                sys.exit(f"level {n}: detected {found}, recorded {comps}")
        newforms += [newform_record(n, fa, o) for o in sorted(obs, key=lambda o: (len(o["lmfdb"]), o["lmfdb"]))]
        for reading in curves:
            curves[reading] += curve_records(n, category, obs, comps, reading)
        print(n, " ".join(f"{o['lmfdb']}={o['table']}" for o in sorted(obs, key=lambda o: (len(o["lmfdb"]), o["lmfdb"]))),
              file=sys.stderr)

    version = ".".join(str(x) for x in pari("version()")[:3])
    for reading, name in (("letter-identity", "go_table1.json"), ("canonical", "go_table1_canonical.json")):
        doc = {
            "meta": {
                "name": name[:-5],
                "reading": reading,
                "generator": "tools/fixtures/gen_go_table1.py",
                "pari_version": version,
                "sign_convention": "atkin_lehner holds the eigenvalue of the involution w_p",
            },
            "newforms": newforms,
            "curves": curves[reading],
            "certificates": certificates_459(),
        }
        with open(os.path.join(args.out, name), "w") as f:
            json.dump(doc, f, indent=2, sort_keys=True)
            f.write("\n")


if __name__ == "__main__":
    main()
