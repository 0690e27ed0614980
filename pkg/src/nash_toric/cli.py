"""Command-line interface: JSON in, JSON (and optionally SVG) out.

Exit status is 0 on success, 2 on domain errors and 1 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Sequence

from .cones import Cone, Fan, cone_from_json, dual_cone, is_smooth
from .curve import curve_report
from .errors import ToricError
from .gfan import groebner_cones_2d
from .groebner import Ideal, buchberger, is_reduced
from .nash import (A3, DEFAULT_POWER_RULE, POWER_RULES, calibrate_power_rule,
                   iterate_normalized_nash, nash_fan, toh_yama_cone)
from .polyalg import MonomialOrder, SemigroupRing, default_tiebreak, field_from_string, poly_from_json
from .semigroups import AffineSemigroup, hilbert_basis
from .svg import fan_to_svg

COMMANDS = ("dual", "hilbert", "smooth-check", "groebner", "gfan", "nash", "iterate",
            "toh-yama", "curve", "calibrate")
CONE_COMMANDS = {"dual", "hilbert", "smooth-check", "nash", "iterate"}
IDEAL_COMMANDS = {"groebner", "gfan"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    cone: str | None = None          # inline JSON
    input_path: str | None = None    # JSON file
    field: str = "QQ"
    n: int = 1
    power_rule: str = DEFAULT_POWER_RULE
    output_path: str | None = None
    svg_path: str | None = None
    generators: list[int] = dc_field(default_factory=list)
    up_to: int = 10
    order: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command in CONE_COMMANDS | IDEAL_COMMANDS:
            if (self.cone is None) == (self.input_path is None):
                raise UsageError(f"{self.command} needs exactly one of --cone or --input")
        if self.command == "curve" and not self.generators and self.input_path is None:
            raise UsageError("curve needs --generators or --input")
        if self.n < 1:
            raise UsageError("--n must be a positive integer")
        if self.power_rule not in POWER_RULES:
            raise UsageError(f"--power-rule must be one of {', '.join(POWER_RULES)}")
        if self.svg_path and self.command not in {"gfan", "nash", "iterate"}:
            raise UsageError("--svg is only available for gfan, nash and iterate")


def _parse_json(text: str, where: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {where} at line {exc.lineno}, "
                         f"column {exc.colno}: {exc.msg}") from None


def _load_input(config: RunConfig):
    if config.cone is not None:
        return _parse_json(config.cone, "--cone")
    try:
        text = Path(config.input_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {config.input_path}: {exc.strerror}") from None
    return _parse_json(text, config.input_path)


def _rays(c: Cone) -> list[list[int]]:
    return [list(r) for r in c.rays]


def _ideal_cone(obj) -> Cone:
    """Input of the form {"cone": {...}, "generators": [poly, ...], "order": [[...]]}."""
    if not isinstance(obj, dict) or "cone" not in obj or "generators" not in obj:
        raise ToricError('ideal input needs "cone" and "generators" entries')
    return cone_from_json(obj["cone"])


def _build_ideal(sigma: Cone, obj: dict, fld) -> Ideal:
    ring = SemigroupRing(AffineSemigroup.of_cone(sigma), fld)
    return Ideal.of(ring, [poly_from_json(ring, g) for g in obj["generators"]])


def _report(config: RunConfig) -> tuple[dict, Fan | None]:
    cmd = config.command
    fld = field_from_string(config.field)
    if cmd == "toh-yama":
        c = toh_yama_cone(config.n)
        computed = nash_fan(A3, config.n, fld, config.power_rule).fan
        return {"schema": 1, "n": config.n, "rays": _rays(c), "index": c.index(),
                "matches_computed": c in computed.maximal_cones}, None
    if cmd == "calibrate":
        return {"schema": 1, **calibrate_power_rule(field=fld)}, None
    if cmd == "curve":
        gens = config.generators
        if not gens:
            obj = _load_input(config)
            gens = obj.get("generators") if isinstance(obj, dict) else obj
            if not isinstance(gens, list):
                raise ToricError('curve input needs a "generators" list')
        return curve_report(gens, config.up_to, fld.characteristic), None

    obj = _load_input(config)
    if cmd in IDEAL_COMMANDS:
        sigma = _ideal_cone(obj)
        ideal = _build_ideal(sigma, obj, fld)
        if cmd == "groebner":
            rows = obj.get("order")
            if config.order is not None:
                rows = _parse_json(config.order, "--order")
            order = (MonomialOrder(rows) if rows
                     else default_tiebreak(ideal.ring.semigroup))
            gb = buchberger(ideal, order)
            return {"schema": 1, "field": fld.name, **gb.to_json(),
                    "reduced": is_reduced(gb)}, None
        gcs = groebner_cones_2d(ideal, sigma)
        f = Fan.of([g.cone for g in gcs], 2)
        return {"schema": 1, "field": fld.name, "fan": f.to_json(),
                "groebner_cones": [g.to_json() for g in gcs]}, f

    c = cone_from_json(obj)
    if cmd == "dual":
        return {"schema": 1, "cone": c.to_json(), "dual": dual_cone(c).to_json()}, None
    if cmd == "hilbert":
        return {"schema": 1, "cone": c.to_json(),
                "hilbert_basis": [list(v) for v in hilbert_basis(dual_cone(c))]}, None
    if cmd == "smooth-check":
        out = {"schema": 1, "smooth": is_smooth(c)}
        if c.is_simplicial:
            out["index"] = c.index()
        return out, None
    if cmd == "nash":
        rep = nash_fan(c, config.n, fld, config.power_rule)
        return rep.to_json(), rep.fan
    trace = iterate_normalized_nash(c, fld)
    return trace.to_json(), trace.final


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config.validate()
        report, fan = _report(config)
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
        if config.output_path:
            Path(config.output_path).write_text(text, encoding="utf-8")
        else:
            stdout.write(text)
        if config.svg_path:
            if fan is None or fan.dim != 2:
                raise ToricError("SVG output needs a 2D fan")
            Path(config.svg_path).write_text(fan_to_svg(fan, config.command), encoding="utf-8")
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except ToricError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nash-toric",
                description="Nash modifications of toric varieties and curve branches.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--cone", help="inline JSON (a cone, or an ideal object for groebner/gfan)")
    p.add_argument("--input", dest="input_path", help="JSON input file")
    p.add_argument("--field", default="QQ", help="QQ or a prime p (default QQ)")
    p.add_argument("--n", type=int, default=1, help="order of the Nash modification")
    p.add_argument("--power-rule", default=DEFAULT_POWER_RULE, choices=POWER_RULES)
    p.add_argument("--output", dest="output_path", help="write JSON here instead of stdout")
    p.add_argument("--svg", dest="svg_path", help="also draw the fan to this SVG file")
    p.add_argument("--generators", default="",
                   help="comma separated semigroup generators (curve)")
    p.add_argument("--up-to", type=int, default=10, help="largest order checked (curve)")
    p.add_argument("--order", help="JSON weight matrix for groebner, e.g. [[2,-1],[1,1]]")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        gens = [int(x) for x in args.generators.split(",") if x.strip()]
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError:
        print("usage error: --generators must be comma separated integers", file=sys.stderr)
        return 1
    config = RunConfig(command=args.command, cone=args.cone, input_path=args.input_path,
                       field=args.field, n=args.n, power_rule=args.power_rule,
                       output_path=args.output_path, svg_path=args.svg_path,
                       generators=gens, up_to=args.up_to, order=args.order)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
