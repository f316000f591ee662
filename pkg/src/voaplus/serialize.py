"""Stable text and JSON rendering of report objects.

JSON field names are frozen; see docs/json_schema.md (schema_version 1,
additive evolution only).  Every rational is rendered as the string "p/q"
with q > 0 and gcd(p, q) = 1; integers stay JSON numbers.
"""

from fractions import Fraction

SCHEMA_VERSION = 1


def frac_str(x):
    f = Fraction(x)
    return "%d/%d" % (f.numerator, f.denominator)


def vec_json(vec):
    return [frac_str(x) for x in vec]


def vec_text(vec):
    return "(" + ", ".join(str(Fraction(x)) for x in vec) + ")"


def coset_json(coset):
    return vec_json(coset.rep)


def code_json(code):
    return {"length": code.length, "generators": code.basis_strings()}


def frame_cosets_json(fc):
    return {
        "bound": fc.bound,
        "cosets": [{"rep": coset_json(c), "count": n}
                   for c, n in zip(fc.cosets, fc.counts)],
    }


def decomposition_json(dec):
    return {
        "coset": coset_json(dec.coset),
        "frame": [vec_json(e) for e in dec.frame],
        "code": code_json(dec.code),
        "signs": list(dec.signs),
    }


def orbit_json(orbit):
    return {
        "size": orbit.size,
        "classes": [c.label() for c in orbit.classes],
        "twisted_sign": orbit.twisted_sign,
        "twisted_count": orbit.twisted_count,
        "conditions": {"len8_all_one": orbit.cond_a,
                       "len16_rm14": orbit.cond_b,
                       "e8": orbit.cond_c},
    }


def fusion_json(fusion):
    if fusion is None:
        return None
    return {"size": fusion.size, "dim": fusion.dim, "gl_order": fusion.gl_order}


def lattice_json(lat):
    return {
        "rank": lat.rank,
        "det": lat.det,
        "gram": [list(r) for r in lat.gram],
        "even": lat.is_even,
        "roots": lat.root_count if lat.is_even else None,
        "two_elementary": lat.is_2_elementary,
        "totally_even": lat.is_totally_even,
        "invariant_factors": list(lat.discriminant.invariant_factors),
    }


def aut_report_json(rep):
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "aut_report",
        "lattice": lattice_json(rep.lattice),
        "frame_cosets": frame_cosets_json(rep.frame_coset_set),
        "decompositions": [decomposition_json(d) for d in rep.decompositions],
        "conditions": {"len8_all_one": rep.cond_a,
                       "len16_rm14": rep.cond_b,
                       "e8": rep.cond_c},
        "orbit": orbit_json(rep.orbit),
        "fusion": fusion_json(rep.fusion),
        "orbit_size": rep.orbit_size,
        "index_over_stabilizer": rep.index_over_stabilizer,
        "isometry_order": rep.isometry_order,
        "stabilizer_order": rep.stabilizer_order,
        "stabilizer_reason": rep.stabilizer_reason,
        "aut_order": rep.aut_order,
        "exceeds_stabilizer": rep.exceeds_stabilizer,
        "notes": list(rep.notes),
    }


def odd_report_json(rep):
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "odd_report",
        "lattice": {"rank": rep.lattice.rank, "det": rep.lattice.det,
                    "gram": [list(r) for r in rep.lattice.gram]},
        "even_part": lattice_json(rep.even_part),
        "even_basis": [list(r) for r in rep.even_basis],
        "odd_rep": vec_json(rep.odd_rep),
        "odd_rep_norm": frac_str(rep.odd_rep_norm),
        "odd_coset": coset_json(rep.odd_coset),
        "odd_coset_in_orbit": rep.odd_coset_in_orbit,
        "aut_order": rep.aut_order,
        "even_report": aut_report_json(rep.even_report),
    }


def aut_report_text(rep):
    out = []
    w = out.append
    w("rank %d lattice, det %d, %d roots" % (rep.rank, rep.det, rep.root_count))
    w("  2-elementary: %s   totally even: %s"
      % (rep.is_2_elementary, rep.is_totally_even))
    fc = rep.frame_coset_set
    w("frame cosets (norm-2 count == %d): %d" % (fc.bound, len(fc.cosets)))
    for c, n in zip(fc.cosets, fc.counts):
        w("  %s  count %d" % (vec_text(c.rep), n))
    w("construction decompositions: %d" % len(rep.decompositions))
    for d in rep.decompositions:
        w("  coset %s -> code [%d,%d], signs %s"
          % (vec_text(d.coset.rep), d.code.length, d.code.dimension,
             "".join("+" if s > 0 else "-" for s in d.signs)))
    w("conditions: len8-all-one=%s  len16-rm14=%s  e8=%s"
      % (rep.cond_a, rep.cond_b, rep.cond_c))
    w("orbit of [0]^-: size %d" % rep.orbit_size)
    for c in rep.orbit.classes:
        w("  " + c.label())
    if rep.fusion is not None:
        w("fusion 2-group: size %d, dim %d, |GL| %d"
          % (rep.fusion.size, rep.fusion.dim, rep.fusion.gl_order))
    w("index [Aut : Stab] = %d" % rep.index_over_stabilizer)
    if rep.isometry_order is not None:
        w("|O(L)| = %d" % rep.isometry_order)
    if rep.stabilizer_order is not None:
        w("stabilizer order = %d" % rep.stabilizer_order)
        w("aut order = %d" % rep.aut_order)
    else:
        w("stabilizer order unavailable: %s" % rep.stabilizer_reason)
    w("exceeds stabilizer: %s" % rep.exceeds_stabilizer)
    for note in rep.notes:
        w("note: %s" % note)
    return "\n".join(out)


def odd_report_text(rep):
    out = []
    w = out.append
    w("odd lattice, rank %d, det %d" % (rep.lattice.rank, rep.lattice.det))
    w("even part: det %d, basis rows %s"
      % (rep.even_part.det, [list(r) for r in rep.even_basis]))
    w("odd representative %s, norm %s" % (vec_text(rep.odd_rep),
                                          rep.odd_rep_norm))
    w("its class over the even part: %s (in orbit: %s)"
      % (vec_text(rep.odd_coset.rep), rep.odd_coset_in_orbit))
    if rep.aut_order is not None:
        w("aut order = %d" % rep.aut_order)
    else:
        w("aut order unavailable (needs the even-part order and an in-orbit class)")
    w("--- even part report ---")
    w(aut_report_text(rep.even_report))
    return "\n".join(out)
