#!/usr/bin/env python3
"""Brute-force re-evaluation of the weighted liquid rank update.

Written independently of the C++ engine: every step is spelled out on plain
dicts and lists. Emits engine_trace_expected.hpp with each intermediate
(raw differential, normalized differential, blended, final) frozen as
hex-float literals, so the C++ test can demand bit equality.

    python3 tests/oracle/engine_trace.py > tests/oracle/engine_trace_expected.hpp
"""
import math

AGENTS = ["A", "B", "C", "D", "E"]

# (day, rater, ratee, rating or None, value)
RECORDS = [
    (1, "A", "B", 0.75, 10.2), (1, "A", "B", 0.25, 3.1), (1, "C", "B", 1.0, 4.0),
    (1, "B", "C", 0.0, 7.3), (1, "D", "E", None, 2.6), (1, "E", "A", 0.5, 1.24),
    (2, "A", "C", 1.0, 12.0), (2, "B", "A", 0.1, 5.0), (2, "C", "D", 0.5, 0.74),
    (2, "D", "B", None, 9.9), (2, "D", "B", 0.9, 1.1), (2, "E", "C", 0.0, 20.0),
    (3, "B", "E", 0.75, 6.0), (3, "C", "E", 1.0, 6.0), (3, "A", "D", 0.25, 3.75),
    (3, "E", "D", 0.5, 0.25),
]

TRACES = [
    dict(name="weighted_aggregated_downrated", mode="explicit_weighted",
         default_rank=0.4, conservatism=0.3, decayed_rank=0.1, default_rating=0.6, precision=0.5,
         weighting=True, full_norm=True, liquid=True, log_ranks=False, log_ratings=True,
         aggregation=True, downrating=True),
    dict(name="implicit_log_ranks_max_norm", mode="implicit_financial",
         default_rank=0.5, conservatism=0.6, decayed_rank=0.0, default_rating=0.5, precision=1.0,
         weighting=False, full_norm=False, liquid=True, log_ranks=True, log_ratings=False,
         aggregation=False, downrating=False),
    dict(name="unweighted_not_liquid", mode="explicit_unweighted",
         default_rank=0.5, conservatism=0.5, decayed_rank=0.2, default_rating=0.0, precision=0.01,
         weighting=False, full_norm=True, liquid=False, log_ranks=False, log_ratings=False,
         aggregation=False, downrating=True),
]


def round_half_away(x):
    a = abs(x)
    r = math.floor(a)
    if a - r >= 0.5:
        r += 1.0
    return math.copysign(r, x) if r != 0 else 0.0


def signed_log(q):
    if q < 0:
        return -math.log10(1 - q)
    return math.log10(1 + q)


def run_period(p, prev, records, day):
    implicit = p["mode"] == "implicit_financial"
    # step 3: aggregation per (rater, ratee), pairs kept in first-seen order
    if p["aggregation"]:
        pairs = []
        for rec in records:
            key = (rec[1], rec[2])
            if key not in pairs:
                pairs.append(key)
        merged = []
        for key in pairs:
            group = [r for r in records if (r[1], r[2]) == key]
            if len(group) == 1:
                merged.append(group[0])
                continue
            present = [r[3] for r in group if r[3] is not None]
            rating = None
            if present:
                s = 0.0
                for x in present:
                    s += x
                rating = s / len(present)
            vs = 0.0
            for r in group:
                vs += r[4]
            value = vs / len(group) if implicit else vs
            merged.append((group[0][0], key[0], key[1], rating, value))
        records = merged
    # steps 4-6
    prepared = []
    for (_, rater, ratee, rating, value) in records:
        q = round_half_away(value / p["precision"])
        if p["log_ratings"]:
            q = signed_log(q)
        f = None
        if not implicit:
            f = rating if rating is not None else p["default_rating"]
            if p["downrating"]:
                f = (f - 0.25) / 0.25 if f < 0.25 else (f - 0.25) / 0.75
        prepared.append((rater, ratee, f, q))
    # step 7: per rated agent, in first-rated order of the record stream
    raw = {}
    for agent in AGENTS:
        terms = [r for r in prepared if r[1] == agent]
        if not terms:
            continue
        total = 0.0
        for (rater, _, f, q) in terms:
            w = (prev.get(rater, p["default_rank"]) if p["liquid"] else 1.0)
            if p["mode"] == "implicit_financial":
                total += q * w
            elif p["mode"] == "explicit_unweighted":
                total += f * w
            else:
                total += f * q * w
        raw[agent] = total
    # step 8
    ld = {a: (signed_log(x) if p["log_ranks"] else x) for a, x in raw.items()}
    nd = {}
    if ld:
        lo, hi = min(ld.values()), max(ld.values())
        for a, x in ld.items():
            if p["full_norm"] and hi > lo:
                nd[a] = (x - lo) / (hi - lo)
            elif hi > 0:
                nd[a] = max(0.0, x / hi)
            else:
                nd[a] = 0.0
    # step 9
    c = p["conservatism"]
    blended = {}
    for a in AGENTS:
        if a in prev:
            u = nd[a] if a in nd else p["decayed_rank"]
            blended[a] = prev[a] * c + u * (1.0 - c)
        elif a in nd:
            blended[a] = p["default_rank"] * c + nd[a] * (1.0 - c)
    # step 10
    top = max(blended.values()) if blended else 0.0
    final = {a: (max(0.0, x) / top if top > 0 else 0.0) for a, x in blended.items()}
    return raw, nd, blended, final


def emit_map(m):
    return "{" + ", ".join('{"%s", %s}' % (a, float.hex(m[a])) for a in sorted(m)) + "}"


def main():
    out = []
    out.append("// Generated by tests/oracle/engine_trace.py. Do not edit.")
    out.append("#pragma once\n")
    out.append('#include "oracle/engine_trace_types.hpp"\n')
    out.append("namespace oracle {\n")
    out.append("inline const std::vector<Record>& records() {")
    out.append("  static const std::vector<Record> r = {")
    for (d, a, b, f, v) in RECORDS:
        out.append('      {%d, "%s", "%s", %s, %s},' % (d, a, b,
                   "std::nullopt" if f is None else float.hex(f), float.hex(v)))
    out.append("  };\n  return r;\n}\n")
    out.append("inline const std::vector<Trace>& traces() {")
    out.append("  static const std::vector<Trace> t = {")
    for p in TRACES:
        prev = {}
        periods = []
        for day in (1, 2, 3):
            recs = [r for r in RECORDS if r[0] == day]
            raw, nd, blended, final = run_period(p, prev, recs, day)
            periods.append((raw, nd, blended, final))
            prev = final
        out.append('      {"%s", liquidrank::RatingMode::%s,' % (p["name"], p["mode"]))
        flag = lambda k: "true" if p[k] else "false"
        out.append("       {%s, %s, %s, %s, %s, %s, %s, %s, %s, %s, %s, %s, 1}," % (
            float.hex(p["default_rank"]), float.hex(p["conservatism"]), float.hex(p["decayed_rank"]),
            float.hex(p["default_rating"]), float.hex(p["precision"]), flag("weighting"),
            flag("full_norm"), flag("liquid"), flag("log_ranks"), flag("log_ratings"),
            flag("aggregation"), flag("downrating")))
        out.append("       {")
        for (raw, nd, blended, final) in periods:
            out.append("           {%s,\n            %s,\n            %s,\n            %s}," % (
                emit_map(raw), emit_map(nd), emit_map(blended), emit_map(final)))
        out.append("       }},")
    out.append("  };\n  return t;\n}\n")
    out.append("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
