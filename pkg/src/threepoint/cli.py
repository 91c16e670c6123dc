"""Command-line front door.

Subcommands map one-to-one onto the library modules:

  analyze-group     group order, Sylow data, m invariant, center
  decide            good-reduction verdict for a group over a local field
  enumerate-tails   tail configurations satisfying the vanishing cycles formula
  kummer-check      normalized branch divisor tests (multiplicative type, m-th power)
  conductor         reduced Artin-Schreier conductor of a Laurent right-hand side
  classify-dvf      discrete valuation field extension taxonomy from a descriptor
  search-examples   certified PGL_m(q) example search

Every subcommand accepts --json for a canonical machine-readable report
(sorted keys, two-space indent, rationals as "num/den" strings) and
--config FILE for a TOML file mirroring the flags, either at top level
or in a per-subcommand table. Command-line flags win over config
values. The environment variable THREEPOINT_ENUM_CAP overrides the
permutation enumeration cap (default 1000000).

Exit status: 0 on success (including Inconclusive verdicts and empty
enumerations), 2 on input validation failure, 3 when an enumeration
cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

try:
    import tomllib as _toml
except ModuleNotFoundError:
    import tomli as _toml

from . import dvfclassify, kummer, pglsearch, tails
from .criterion import FieldProfile, Verdict, decide
from .errors import CapExceeded, ThreepointError
from .finitefield import FiniteField
from .groups import FamilySpec, GroupProfile, PermutationGroup, family_profile, profile
from .localfield import LaurentRepresentative, as_conductor

__all__ = ["Command", "run", "main"]

SCHEMA = "threepoint/1"

SUBCOMMANDS = (
    "analyze-group",
    "decide",
    "enumerate-tails",
    "kummer-check",
    "conductor",
    "classify-dvf",
    "search-examples",
)


@dataclass(frozen=True)
class Command:
    """A validated invocation: subcommand, merged option map, output mode."""

    subcommand: str
    options: Mapping[str, Any]
    output_mode: str

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if self.output_mode not in ("text", "json"):
            raise ValueError(f"unknown output mode {self.output_mode!r}")


# ---------------------------------------------------------------- encoding


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _encode_profile(gp: GroupProfile) -> dict:
    return {
        "label": gp.label,
        "order": gp.order,
        "p": gp.p,
        "p_valuation": gp.p_valuation,
        "sylow_cyclic": gp.sylow_cyclic,
        "m_invariant": gp.m_invariant,
        "order_p_class_count": gp.order_p_class_count,
        "center_exponent": gp.center_exponent,
    }


def _encode_verdict(v: Verdict) -> dict:
    return {
        "status": v.status,
        "tame_degree_divides": v.tame_degree_divides,
        "good_reduction_outright": v.good_reduction_outright,
        "reasons": list(v.reasons),
    }


def _encode_configuration(c: tails.TailConfiguration) -> dict:
    return {
        "r": c.r,
        "m_g": c.m_g,
        "tails": [
            {"sigma": _frac(t.sigma), "kind": t.kind, "m_b": t.m_b}
            for t in c.tails
        ],
    }


def _encode_terms(f: LaurentRepresentative) -> list[dict]:
    return [
        {"exponent": e, "coefficient": str(c)}
        for e, c in sorted(f.terms.items())
    ]


# ------------------------------------------------------------- input parsing


def _require(opts: Mapping[str, Any], *names: str) -> None:
    missing = [n for n in names if opts.get(n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise ThreepointError(f"missing required option(s): {flags}")


def _int_list(value: Any, what: str) -> list[int]:
    if isinstance(value, str):
        parts = [p for p in value.replace(" ", "").split(",") if p]
        return [int(p) for p in parts]
    if isinstance(value, (list, tuple)):
        return [int(v) for v in value]
    raise ThreepointError(f"cannot parse {what} from {value!r}")


def _load_group_file(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ThreepointError("group file must hold a JSON object")
    return data


def _family_from_options(opts: Mapping[str, Any]) -> FamilySpec:
    kind = opts["family"]
    if kind == "pgl":
        _require(opts, "m", "q", "p")
        return FamilySpec.pgl(int(opts["m"]), int(opts["q"]), int(opts["p"]))
    if kind == "semidirect":
        _require(opts, "p", "s", "m")
        return FamilySpec.semidirect(int(opts["p"]), int(opts["s"]), int(opts["m"]))
    raise ThreepointError(f"unknown family {kind!r} (choose pgl or semidirect)")


def _permutation_group(degree: int, generators: Any, label: str | None) -> PermutationGroup:
    if isinstance(generators, str):
        return PermutationGroup.from_cycles(degree, generators, label=label)
    gens = []
    for gen in generators:
        if isinstance(gen, str):
            gens.extend(PermutationGroup.from_cycles(degree, gen).generators)
        else:
            gens.append(tuple(int(i) for i in gen))
    return PermutationGroup(degree=degree, generators=tuple(gens), label=label)


def _group_profile(opts: Mapping[str, Any]) -> GroupProfile:
    """Build a profile from family flags, explicit generators, or a file."""
    if opts.get("family"):
        return family_profile(_family_from_options(opts))
    if opts.get("group_file"):
        data = _load_group_file(opts["group_file"])
        if "variant" in data:
            merged = dict(opts)
            merged.update(data)
            merged["family"] = data["variant"]
            return family_profile(_family_from_options(merged))
        _require(opts, "p")
        g = _permutation_group(
            int(data["degree"]), data["generators"], data.get("label")
        )
        return profile(g, int(opts["p"]))
    _require(opts, "degree", "generators", "p")
    g = _permutation_group(int(opts["degree"]), opts["generators"], opts.get("label"))
    return profile(g, int(opts["p"]))


def _parse_coefficient(text: str) -> int | list[int]:
    if "." in text:
        return [int(part) for part in text.split(".")]
    return int(text)


def _parse_terms(text: str) -> dict[int, int | list[int]]:
    """Parse "e:c,e:c" term lists; dotted coefficients are vectors."""
    terms: dict[int, int | list[int]] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        exp_text, _, coeff_text = chunk.partition(":")
        if not coeff_text:
            raise ThreepointError(f"malformed term {chunk!r}, expected e:c")
        exponent = int(exp_text)
        if exponent in terms:
            raise ThreepointError(f"duplicate exponent {exponent} in --terms")
        terms[exponent] = _parse_coefficient(coeff_text.strip())
    if not terms:
        raise ThreepointError("--terms parsed to an empty Laurent representative")
    return terms


def _read_divisor(path: str) -> kummer.BranchDivisor:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    for key in ("m", "p", "points"):
        if key not in data:
            raise ThreepointError(f"divisor JSON is missing {key!r}")
    field = FiniteField(int(data["p"]), int(data.get("d", 1)))
    points = []
    for entry in data["points"]:
        residue = entry["residue"]
        if isinstance(residue, list):
            element = field.element(tuple(int(c) for c in residue))
        else:
            element = field.element(int(residue))
        points.append((element, int(entry["exponent"])))
    return kummer.BranchDivisor(m=int(data["m"]), field=field, points=tuple(points))


_SEPARABLE_WORDS = {"yes": True, "no": False, "unknown": None}


def _separable_flag(value: Any) -> bool | None:
    if value is None or isinstance(value, bool):
        return value
    try:
        return _SEPARABLE_WORDS[str(value).lower()]
    except KeyError:
        raise ThreepointError(
            f"--residue-separable must be yes, no or unknown, got {value!r}"
        ) from None


def _descriptor_from_options(opts: Mapping[str, Any]) -> dvfclassify.ExtensionDescriptor:
    source: Mapping[str, Any] = opts
    if opts.get("descriptor_file"):
        with open(opts["descriptor_file"], "r", encoding="utf-8") as fh:
            data = json.load(fh)
        merged = dict(data)
        for key, value in opts.items():
            if value is not None:
                merged[key] = value
        source = merged
    _require(
        source, "p", "n", "e", "v_a",
        "residue_pth_power", "contains_zeta", "uniformizer_index",
    )
    return dvfclassify.ExtensionDescriptor(
        p=int(source["p"]),
        n=int(source["n"]),
        e_K=int(source["e"]),
        v_a=int(source["v_a"]),
        residue_is_pth_power=bool(source["residue_pth_power"]),
        contains_zeta=bool(source["contains_zeta"]),
        uniformizer_index=int(source["uniformizer_index"]),
        residue_extension_separable=_separable_flag(source.get("residue_separable")),
    )


# ------------------------------------------------------------------ handlers


def _run_analyze_group(opts: Mapping[str, Any]) -> dict:
    gp = _group_profile(opts)
    return {"schema": SCHEMA, "command": "analyze-group", "profile": _encode_profile(gp)}


def _run_decide(opts: Mapping[str, Any]) -> dict:
    gp = _group_profile(opts)
    _require(opts, "p", "e")
    fp = FieldProfile(p=int(opts["p"]), absolute_ramification_index=int(opts["e"]))
    indices = None
    if opts.get("indices") is not None:
        indices = _int_list(opts["indices"], "--indices")
    verdict = decide(gp, fp, branching_indices=indices)
    return {
        "schema": SCHEMA,
        "command": "decide",
        "profile": _encode_profile(gp),
        "field": {"p": fp.p, "absolute_ramification_index": fp.absolute_ramification_index},
        "branching_indices": indices,
        "verdict": _encode_verdict(verdict),
    }


def _run_enumerate_tails(opts: Mapping[str, Any]) -> dict:
    _require(opts, "r", "mg", "prim", "max_new")
    r, m_g = int(opts["r"]), int(opts["mg"])
    n_prim, max_new = int(opts["prim"]), int(opts["max_new"])
    configs = tails.enumerate_configurations(r, m_g, n_prim, max_new)
    return {
        "schema": SCHEMA,
        "command": "enumerate-tails",
        "params": {"r": r, "m_g": m_g, "n_prim": n_prim, "max_new": max_new},
        "configurations": [_encode_configuration(c) for c in configs],
    }


def _run_kummer_check(opts: Mapping[str, Any]) -> dict:
    _require(opts, "divisor")
    raw = _read_divisor(opts["divisor"])
    divisor = kummer.normalize(raw)
    reduction = kummer.mth_power_reduction_test(divisor)
    return {
        "schema": SCHEMA,
        "command": "kummer-check",
        "divisor": {
            "m": divisor.m,
            "p": divisor.field.p,
            "field_degree": divisor.field.degree,
            "points": [
                {"residue": str(x), "exponent": a} for x, a in divisor.points
            ],
        },
        "exponent_sum": divisor.exponent_sum(),
        "is_multiplicative_type": kummer.is_multiplicative_type(divisor),
        "is_mth_power": reduction["is_mth_power"],
        "class_sums": {str(x): s for x, s in sorted(
            reduction["class_sums"].items(), key=lambda kv: str(kv[0])
        )},
    }


def _run_conductor(opts: Mapping[str, Any]) -> dict:
    _require(opts, "p", "terms")
    p = int(opts["p"])
    degree = int(opts["field_deg"]) if opts.get("field_deg") is not None else 1
    field = FiniteField(p, degree)
    terms = {
        e: field.element(tuple(c)) if isinstance(c, list) else field.element(c)
        for e, c in _parse_terms(str(opts["terms"])).items()
    }
    f = LaurentRepresentative(field, terms)
    result = as_conductor(f)
    return {
        "schema": SCHEMA,
        "command": "conductor",
        "p": p,
        "field_degree": degree,
        "conductor": result.conductor,
        "reduced_terms": _encode_terms(result.reduced),
        "residual": result.residual,
    }


def _run_classify_dvf(opts: Mapping[str, Any]) -> dict:
    descriptor = _descriptor_from_options(opts)
    return {
        "schema": SCHEMA,
        "command": "classify-dvf",
        "descriptor": {
            "p": descriptor.p,
            "n": descriptor.n,
            "e_K": descriptor.e_K,
            "v_a": descriptor.v_a,
            "residue_is_pth_power": descriptor.residue_is_pth_power,
            "contains_zeta": descriptor.contains_zeta,
            "uniformizer_index": descriptor.uniformizer_index,
            "residue_extension_separable": descriptor.residue_extension_separable,
        },
        "classification": dvfclassify.classify(descriptor),
    }


def _run_search_examples(opts: Mapping[str, Any]) -> dict:
    _require(opts, "m", "n", "p", "qmax")
    params = pglsearch.SearchParams(
        m=int(opts["m"]), n=int(opts["n"]), p=int(opts["p"]), q_max=int(opts["qmax"])
    )
    records = pglsearch.search(params)
    return {
        "schema": SCHEMA,
        "command": "search-examples",
        "params": {"m": params.m, "n": params.n, "p": params.p, "q_max": params.q_max},
        "records": [
            {
                "q": r.q,
                "ell": r.ell,
                "d": r.d,
                "mult_order": r.mult_order,
                "sylow_order_exponent": r.sylow_order_exponent,
                "group_order": r.group_order,
                "verdict": _encode_verdict(r.verdict),
                "ramification_note": r.ramification_note,
            }
            for r in records
        ],
    }


_HANDLERS = {
    "analyze-group": _run_analyze_group,
    "decide": _run_decide,
    "enumerate-tails": _run_enumerate_tails,
    "kummer-check": _run_kummer_check,
    "conductor": _run_conductor,
    "classify-dvf": _run_classify_dvf,
    "search-examples": _run_search_examples,
}


def run(c: Command) -> dict:
    """Dispatch a validated command and return its report payload.

    The payload contains only JSON-native values, so dumping it with
    sorted keys is canonical and round-trips byte-identically.
    """
    return _HANDLERS[c.subcommand](c.options)


# ------------------------------------------------------------ text rendering


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _text_profile(profile_payload: dict, out: list[str]) -> None:
    p = profile_payload
    if p["label"]:
        out.append(f"group: {p['label']}")
    out.append(f"order: {p['order']}")
    out.append(f"p: {p['p']}  (p-valuation of order: {p['p_valuation']})")
    out.append(f"p-Sylow cyclic: {_yesno(p['sylow_cyclic'])}")
    if p["m_invariant"] is not None:
        out.append(f"m invariant: {p['m_invariant']}")
    out.append(f"order-p conjugacy classes: {p['order_p_class_count']}")
    out.append(f"center exponent: {p['center_exponent']}")


def _text_verdict(v: dict, out: list[str]) -> None:
    out.append(f"status: {v['status']}")
    if v["tame_degree_divides"] is not None:
        out.append(f"tame extension degree divides: {v['tame_degree_divides']}")
    out.append(f"good reduction outright: {_yesno(v['good_reduction_outright'])}")
    out.append("reasons:")
    for reason in v["reasons"]:
        out.append(f"  - {reason}")


def _render_text(payload: dict) -> str:
    command = payload["command"]
    out: list[str] = []
    if command == "analyze-group":
        _text_profile(payload["profile"], out)
    elif command == "decide":
        _text_profile(payload["profile"], out)
        field = payload["field"]
        out.append(
            f"field: p = {field['p']}, e(K) = {field['absolute_ramification_index']}"
        )
        if payload["branching_indices"] is not None:
            joined = ", ".join(str(i) for i in payload["branching_indices"])
            out.append(f"branching indices: {joined}")
        _text_verdict(payload["verdict"], out)
    elif command == "enumerate-tails":
        params = payload["params"]
        configs = payload["configurations"]
        out.append(
            f"{len(configs)} configuration(s) for r = {params['r']}, "
            f"m_G = {params['m_g']}, n_prim = {params['n_prim']}, "
            f"max_new = {params['max_new']}"
        )
        for i, config in enumerate(configs, start=1):
            prim = [t["sigma"] for t in config["tails"] if t["kind"] == "primitive"]
            new = [t["sigma"] for t in config["tails"] if t["kind"] == "new"]
            line = f"  [{i}] primitive: {', '.join(prim) or '(none)'}"
            if new:
                line += f"; new: {', '.join(new)}"
            out.append(line)
    elif command == "kummer-check":
        divisor = payload["divisor"]
        points = ", ".join(
            f"({pt['residue']}, {pt['exponent']})" for pt in divisor["points"]
        )
        out.append(
            f"divisor: m = {divisor['m']}, field F_{divisor['p']}"
            + (f"^{divisor['field_degree']}" if divisor["field_degree"] > 1 else "")
        )
        out.append(f"normalized points: {points or '(empty)'}")
        out.append(f"exponent sum: {payload['exponent_sum']}")
        out.append(f"multiplicative type: {_yesno(payload['is_multiplicative_type'])}")
        out.append(f"m-th power: {_yesno(payload['is_mth_power'])}")
        sums = ", ".join(f"{x} -> {s}" for x, s in payload["class_sums"].items())
        out.append(f"class sums: {sums or '(none)'}")
    elif command == "conductor":
        out.append(f"p: {payload['p']}  field degree: {payload['field_degree']}")
        out.append(f"conductor: {payload['conductor']}")
        reduced = " + ".join(
            f"{t['coefficient']}*t^{t['exponent']}" for t in payload["reduced_terms"]
        )
        out.append(f"reduced: {reduced or '0'}")
        if payload["residual"] is not None:
            out.append(f"residual extension: {payload['residual']}")
    elif command == "classify-dvf":
        out.append(f"classification: {payload['classification']}")
    elif command == "search-examples":
        params = payload["params"]
        records = payload["records"]
        out.append(
            f"{len(records)} example(s) for m = {params['m']}, n = {params['n']}, "
            f"p = {params['p']}, q_max = {params['q_max']}"
        )
        for r in records:
            verdict = r["verdict"]
            tag = "good outright" if verdict["good_reduction_outright"] else verdict["status"]
            out.append(
                f"  q = {r['q']} = {r['ell']}^{r['d']}: order {r['mult_order']} "
                f"mod p^{params['n']}, Sylow exponent {r['sylow_order_exponent']}, "
                f"|G| = {r['group_order']}, verdict: {tag}"
            )
    else:
        raise ValueError(f"no renderer for {command!r}")
    return "\n".join(out)


# -------------------------------------------------------------- arg plumbing


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=None,
                        help="emit a canonical JSON report instead of text")
    common.add_argument("--config", metavar="FILE", default=None,
                        help="TOML file mirroring the flags (flags win)")

    parser = argparse.ArgumentParser(
        prog="threepoint",
        description="Good-reduction criterion toolkit for three-point covers "
                    "with cyclic p-Sylow subgroups.",
        epilog="THREEPOINT_ENUM_CAP overrides the permutation enumeration cap.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def group_flags(sp):
        sp.add_argument("--family", choices=("pgl", "semidirect"))
        sp.add_argument("--m", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--s", type=int)
        sp.add_argument("--p", type=int)
        sp.add_argument("--degree", type=int)
        sp.add_argument("--generators", help='cycle notation, e.g. "(0 1)(2 3), (0 1 2)"')
        sp.add_argument("--label")
        sp.add_argument("--group-file", help="JSON group or tagged family description")

    sp = sub.add_parser("analyze-group", parents=[common],
                        help="profile a finite group at a prime")
    group_flags(sp)

    sp = sub.add_parser("decide", parents=[common],
                        help="run the good-reduction criterion")
    group_flags(sp)
    sp.add_argument("--e", type=int, help="absolute ramification index e(K)")
    sp.add_argument("--indices", help="branching indices, comma separated")

    sp = sub.add_parser("enumerate-tails", parents=[common],
                        help="enumerate tail configurations")
    sp.add_argument("--r", type=int, help="number of branch points")
    sp.add_argument("--mg", type=int, help="m_G, the Sylow normalizer invariant")
    sp.add_argument("--prim", type=int, help="number of primitive tails")
    sp.add_argument("--max-new", type=int, help="maximum number of new tails")

    sp = sub.add_parser("kummer-check", parents=[common],
                        help="normalize and test a branch divisor")
    sp.add_argument("divisor", nargs="?",
                    help='JSON file {"m","p","d","points":[...]} or - for stdin')

    sp = sub.add_parser("conductor", parents=[common],
                        help="reduce an Artin-Schreier right-hand side")
    sp.add_argument("--p", type=int)
    sp.add_argument("--field-deg", type=int, help="residue field degree (default 1)")
    sp.add_argument("--terms", help='Laurent terms "e:c,e:c"; dotted vectors for degree > 1')

    sp = sub.add_parser("classify-dvf", parents=[common],
                        help="classify an extension descriptor")
    sp.add_argument("--p", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--e", type=int, help="absolute ramification index e(K)")
    sp.add_argument("--v-a", type=int, help="valuation of the generator argument")
    sp.add_argument("--uniformizer-index", type=int)
    sp.add_argument("--residue-pth-power", action=argparse.BooleanOptionalAction)
    sp.add_argument("--contains-zeta", action=argparse.BooleanOptionalAction)
    sp.add_argument("--residue-separable", choices=("yes", "no", "unknown"))
    sp.add_argument("--descriptor-file", help="JSON descriptor (flags override fields)")

    sp = sub.add_parser("search-examples", parents=[common],
                        help="search for certified PGL_m(q) examples")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--qmax", type=int)

    return parser


def _load_config(path: str) -> dict:
    with open(path, "rb") as fh:
        return _toml.load(fh)


def _merge_config(subcommand: str, options: dict, config: dict) -> dict:
    """Fill None options from a per-subcommand table, then the top level."""
    scopes = []
    for key in (subcommand, subcommand.replace("-", "_")):
        table = config.get(key)
        if isinstance(table, dict):
            scopes.append(table)
            break
    scopes.append(config)
    merged = dict(options)
    for name, value in merged.items():
        if value is not None:
            continue
        for scope in scopes:
            if name in scope:
                merged[name] = scope[name]
                break
            dashed = name.replace("_", "-")
            if dashed != name and dashed in scope:
                merged[name] = scope[dashed]
                break
    return merged


def _fuse_dash_values(argv: list[str]) -> list[str]:
    """Join "--terms -9:1" into "--terms=-9:1" so leading-dash values
    are not mistaken for flags."""
    fused = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in ("--terms", "--indices") and i + 1 < len(argv):
            fused.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            fused.append(token)
            i += 1
    return fused


def _parse(argv: list[str] | None) -> Command:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    namespace = parser.parse_args(_fuse_dash_values(list(argv)))
    options = vars(namespace)
    subcommand = options.pop("subcommand")
    config_path = options.pop("config", None)
    if config_path:
        options = _merge_config(subcommand, options, _load_config(config_path))
    json_mode = options.pop("json", None)
    if subcommand == "classify-dvf":
        options["residue_separable"] = _separable_flag(options.get("residue_separable"))
    return Command(
        subcommand=subcommand,
        options=options,
        output_mode="json" if json_mode else "text",
    )


def main(argv: list[str] | None = None) -> int:
    try:
        command = _parse(argv)
        payload = run(command)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ThreepointError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if command.output_mode == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(_render_text(payload))
    return 0


if __name__ == "__main__":
    sys.exit(main())
