"""JSON-ready payloads for the command line tool, and their text rendering."""

from fractions import Fraction

from .characters import QuasiCharacter, is_chi_squared_trivial
from .cyclotomic import Cyclo
from .hecke import EISENSTEIN, EVEN_DERIVATIVE, full_jordan_matrix, hecke_lambda, in_window
from .lfun import cover_zeta, field_zeros, l_polynomial, zero_pairs
from .spec_io import spec_of
from .toroidal import (SPLIT, nonsplit_period, period_vanishing_order, residue_matrix, split_period,
                       toroidal_certificates, toroidal_dimension, twist_witness)


def _round(x, digits=12):
    return float(f"{x:.{digits}g}")


def encode_complex(z):
    z = complex(z)
    return [_round(z.real), _round(z.imag)]


def encode_fraction(r):
    r = Fraction(r)
    return {"num": r.numerator, "den": r.denominator}


def encode_coeff(c):
    """Rationals exactly, other cyclotomic integers as their value plus the
    exact coordinates in the power basis of zeta_m."""
    if isinstance(c, Cyclo):
        r = c.rational_value()
        if r is not None:
            return encode_fraction(r)
        return {"value": encode_complex(complex(c)), "m": c.m, "zeta_coeffs": [int(a) for a in c.c]}
    if isinstance(c, (int, Fraction)):
        return encode_fraction(c)
    return encode_complex(c)


def encode_place(P):
    if P.is_infinite:
        return {"degree": 1, "infinite": True}
    return {"degree": P.degree, "representative": list(P.representative)}


def encode_character(chi):
    if isinstance(chi, QuasiCharacter):
        return {"omega": list(chi.finite.exponents), "sign_twist": chi.finite.sign_twist,
                "shift": encode_complex(chi.shift)}
    return {"omega": list(chi.exponents), "sign_twist": chi.sign_twist}


def _lpoly(field, psi):
    lp = l_polynomial(field, psi)
    return {"character": encode_character(psi), "coefficients": [encode_coeff(c) for c in lp.coeffs],
            "principal": lp.principal}


def zeros_payload(field, include_sign_twists=False):
    chars = list(field.pic_characters)
    if include_sign_twists:
        chars += [c.twist() for c in field.pic_characters]
    rows = []
    for psi in chars:
        rows.append({"character": encode_character(psi),
                     "zeros": [{"tau": encode_complex(t), "multiplicity": m} for t, m in field_zeros(field, psi)]})
    pairs = [{"first": {"character": encode_character(p.first[0]), "tau": encode_complex(p.first[1])},
              "second": {"character": encode_character(p.second[0]), "tau": encode_complex(p.second[1])},
              "order": p.order, "multiplicity": p.multiplicity, "self_paired": p.self_paired}
             for p in zero_pairs(field, include_sign_twists)]
    return {"characters": rows, "pairs": pairs}


def analyze_payload(field, max_place_degree=None, include_sign_twists=False):
    d = max_place_degree or min(field.default_place_degree, _affordable_degree(field))
    T = field.table
    counts = {}
    for P in field.places(d):
        counts[P.degree] = counts.get(P.degree, 0) + 1
    cz = cover_zeta(field)
    rep = toroidal_dimension(field, report=True)
    return {
        "curve": spec_of(field.curve),
        "genus": field.genus,
        "q": field.q,
        "point_counts": [field.point_count(n) for n in range(1, max(field.genus, 1) + 1)],
        "places_per_degree": {str(k): v for k, v in sorted(counts.items())},
        "class_group": {"order": T.order, "invariants": list(T.invariants)},
        "l_polynomials": [_lpoly(field, psi) for psi in field.characters],
        "zeros": zeros_payload(field, include_sign_twists),
        "cover": {"coefficients": cz.integer_coeffs(), "genus": cz.degree // 2},
        "toroidal_dimension": {"dimension": rep.dimension, "expected": rep.expected,
                               "lower_bound_only": rep.lower_bound_only},
    }


def _affordable_degree(field, limit=2 ** 14):
    d = 1
    while field.q ** (d + 1) <= limit:
        d += 1
    return d


def hecke_payload(field, max_place_degree=3, n=3):
    chars = [(QuasiCharacter(psi), "character") for psi in field.characters]
    chars += [(c.chi, "certificate") for c in toroidal_certificates(field)]
    rows = []
    for chi, origin in chars:
        sq = is_chi_squared_trivial(chi, field.q)
        for P in field.places(max_place_degree):
            lam = hecke_lambda(field, chi, P, 0)
            minus = hecke_lambda(field, chi, P, 1)
            M = full_jordan_matrix(field, chi, P, n)
            rows.append({"character": encode_character(chi), "origin": origin, "place": encode_place(P),
                         "lambda": encode_complex(lam), "lambda_minus": encode_complex(minus),
                         "basis": EVEN_DERIVATIVE if sq else EISENSTEIN,
                         "minimal_polynomial_degree": M.minimal_polynomial_degree(),
                         "in_window": in_window(lam, field.q ** P.degree)})
    return {"n": n, "rows": rows}


def toroidal_payload(field):
    certs = []
    for c in toroidal_certificates(field):
        orders = {SPLIT: period_vanishing_order(split_period, field, c.chi)}
        for eta in field.quadratic_characters:
            orders[eta.label()] = period_vanishing_order(nonsplit_period, field, c.chi, eta)
        certs.append({"character": encode_character(c.chi), "tau": encode_complex(c.tau),
                      "order": c.order, "multiplicity": c.multiplicity, "tempered": c.tempered,
                      "period_vanishing_orders": orders})
    rep = toroidal_dimension(field, report=True)
    residues = [{"character": encode_character(r.omega), "entries": r.entries,
                 "has_failure": r.has_failure} for r in residue_matrix(field)]
    return {"dimension": rep.dimension, "expected": rep.expected, "cover_genus": rep.cover_genus,
            "certificates": certs, "residues": residues}


def twist_payload(field, s0, max_degree=4, omega=None, include_unramified=True, min_degree=1):
    omega = omega if omega is not None else field.trivial_character()
    rep = twist_witness(field, omega, s0, max_degree=max_degree,
                        include_unramified=include_unramified, min_degree=min_degree)
    out = {"s0": encode_complex(s0), "omega": encode_character(omega), "found": rep.found,
           "searched": len(rep.searched),
           "skipped": [{"kind": k, "twist": w, "value": encode_complex(v)} for k, w, v in rep.skipped],
           "note": rep.note()}
    if rep.found:
        w = rep.witness
        out["witness"] = {"kind": w.kind,
                          "twist": list(w.witness) if w.kind == "polynomial" else w.witness.label(),
                          "value": encode_complex(w.value), "verified": w.verified}
    return out


def verify_payload(checks):
    return {"passed": all(c.passed for c in checks),
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]}


# -- text rendering --------------------------------------------------------------

def _fmt(v):
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, float) for x in v):
        re, im = v
        return f"{re:+.6g}{im:+.6g}i"
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return str(v["num"]) if v["den"] == 1 else f"{v['num']}/{v['den']}"
    if isinstance(v, dict) and "omega" in v:
        s = "(" + ",".join(map(str, v["omega"])) + ")" + ("*sgn" if v.get("sign_twist") else "")
        if "shift" in v:
            s += f" s={_fmt(v['shift'])}"
        return s
    if isinstance(v, dict) and "value" in v:
        return _fmt(v["value"])
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def render_text(payload, indent=0):
    pad = "  " * indent
    lines = []
    for key, val in payload.items():
        if isinstance(val, dict) and not ("omega" in val or set(val) == {"num", "den"}):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict) and "omega" not in val[0] \
                and set(val[0]) != {"num", "den"}:
            lines.append(f"{pad}{key}:")
            for item in val:
                inner = render_text(item, indent + 2).lstrip()
                lines.append(f"{pad}  - {inner}")
        else:
            lines.append(f"{pad}{key}: {_fmt(val)}")
    return "\n".join(lines)


def verify_text(checks):
    return "\n".join(c.line() for c in checks)

