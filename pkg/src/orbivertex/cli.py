"""Command-line interface: exact tables, series, and verification suites.

Every run echoes its full configuration and the package version into the
output so results are reproducible; all values are exact (rationals as
"num/den" strings, cyclotomic numbers as coefficient vectors over a
declared root-of-unity order).  Exit codes: 0 success, 1 usage error,
2 verification failure, 3 cost guard or internal precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .characters import chi
from .dt_vertex import (
    box_counting_series,
    r_bullet_zero,
    reduced_vertex_closed,
    correspondence_report,
    volume_counts,
)
from .gw_vertex import (
    abelian_lift,
    connected_profile_series,
    g_bullet_mu,
    mv_a1_check,
    quantum_dim_hook,
    quantum_dim_sine,
    r_bullet_tau,
    transport_back,
)
from .hurwitz import (
    PhiKernel,
    burnside_value,
    factorization_oracle,
    phi_composition_check,
)
from .localgw import (
    block_to_data,
    cap_family,
    cap_level0,
    cap_series,
    emit_table,
    glue,
    identity_block,
    run_glue_plan,
    LocalBlock,
)
from .partitions import check_partition, partitions_of, z_aut
from .series import PrecisionError

CHAR_DEGREE_LIMIT = 8
ORACLE_DEGREE_LIMIT = 4
BOX_LIMIT = 10

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_GUARD = 3

DEFAULT_CORRESPONDENCE_PAIRS = ((1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1))


class UsageError(Exception):
    """Bad flags or flag combinations."""


class GuardError(Exception):
    """A cost guard refused the requested problem size."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_partition(text: str) -> tuple:
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse partition {text!r}") from exc
    try:
        return check_partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _frac_str(value) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _partition_label(part) -> str:
    return "(" + ",".join(str(p) for p in part) + ")"


def _config_echo(args) -> dict:
    skip = {"func"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None:
            continue
        if isinstance(value, tuple):
            value = list(value)
        out[key] = value
    return out


def _write_output(text: str, out_path):
    if not text.endswith("\n"):
        text += "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, result: dict) -> int:
    payload = {
        "version": __version__,
        "config": _config_echo(args),
        "result": result,
    }
    _write_output(json.dumps(payload, sort_keys=True, indent=2), args.out)
    return EXIT_OK


def _emit_csv(args, table_text: str) -> int:
    header = (
        f"# version={__version__}\n"
        f"# config={json.dumps(_config_echo(args), sort_keys=True)}\n"
    )
    _write_output(header + table_text, args.out)
    return EXIT_OK


# -- subcommands ------------------------------------------------------------


def cmd_char(args) -> int:
    d = args.d
    if d < 1:
        raise UsageError("--d must be a positive integer")
    if d > CHAR_DEGREE_LIMIT:
        raise GuardError(f"character tables are guarded to d <= {CHAR_DEGREE_LIMIT}")
    rows = partitions_of(d)
    if args.format == "csv":
        lines = ["nu\\mu," + ",".join(_partition_label(mu) for mu in rows)]
        for nu in rows:
            lines.append(
                _partition_label(nu)
                + ","
                + ",".join(str(chi(nu, mu)) for mu in rows)
            )
        return _emit_csv(args, "\n".join(lines) + "\n")
    result = {
        "partitions": [list(p) for p in rows],
        "table": [[chi(nu, mu) for mu in rows] for nu in rows],
    }
    return _emit_json(args, result)


def cmd_hurwitz(args) -> int:
    nu = args.nu
    mu = args.mu
    if nu is None or mu is None:
        raise UsageError("hurwitz needs --nu and --mu")
    if sum(nu) != sum(mu):
        raise UsageError("profiles must have equal size")
    if sum(nu) > CHAR_DEGREE_LIMIT:
        raise GuardError(f"hurwitz values are guarded to degree {CHAR_DEGREE_LIMIT}")
    r = args.r if args.r is not None else 0
    if r < 0:
        raise UsageError("--r must be nonnegative")
    chi_euler = len(nu) + len(mu) - r
    value = burnside_value(chi_euler, nu, mu)
    result = {
        "nu": list(nu),
        "mu": list(mu),
        "r": r,
        "chi_euler": chi_euler,
        "value": _frac_str(value),
    }
    if args.enumerate is not None:
        if sum(nu) > ORACLE_DEGREE_LIMIT:
            raise GuardError(
                f"the factorization oracle is guarded to degree {ORACLE_DEGREE_LIMIT}"
            )
        result["oracle"] = _frac_str(factorization_oracle(chi_euler, nu, mu))
    return _emit_json(args, result)


def cmd_gw(args) -> int:
    if args.a is None or args.mu is None:
        raise UsageError("gw needs --a and --mu")
    lam_max = args.lambda_order if args.lambda_order is not None else 5
    x_deg_max = args.x_order if args.x_order is not None else 4
    tau = args.tau if args.tau is not None else 0
    if tau == 0:
        series = r_bullet_zero(args.a, args.mu, lam_max=lam_max, x_deg_max=x_deg_max)
    else:
        series = r_bullet_tau(args.a, args.mu, tau, lam_max=lam_max, x_deg_max=x_deg_max).series
    return _emit_json(args, {"series": series.to_data()})


def cmd_dt(args) -> int:
    if args.a is None or args.nu is None:
        raise UsageError("dt needs --a and --nu")
    result = {"vertex": reduced_vertex_closed(args.nu, args.a).to_data()}
    if args.enumerate is not None:
        n = args.enumerate
        if n < 0:
            raise UsageError("--enumerate must be nonnegative")
        if n > BOX_LIMIT:
            raise GuardError(f"box enumeration is guarded to {BOX_LIMIT} added boxes")
        result["enumerator"] = box_counting_series(args.nu, args.a, n).to_data()
        result["volume_counts"] = volume_counts(args.nu, n)
    return _emit_json(args, result)


def cmd_local_gw(args) -> int:
    lam_max = args.lambda_order if args.lambda_order is not None else 5
    x_deg_max = args.x_order if args.x_order is not None else 4
    if args.glue is not None:
        with open(args.glue, "r", encoding="utf-8") as fh:
            plan = json.load(fh)
        block = run_glue_plan(plan, lam_max=lam_max, x_deg_max=x_deg_max)
    elif args.mu is not None:
        if args.a is None:
            raise UsageError("local-gw needs --a with --mu")
        block = cap_level0(args.a, args.mu, lam_max=lam_max, x_deg_max=x_deg_max)
    elif args.d is not None:
        if args.a is None:
            raise UsageError("local-gw needs --a with --d")
        block = cap_family(args.a, args.d, lam_max=lam_max, x_deg_max=x_deg_max)
    else:
        raise UsageError("local-gw needs --mu, --d, or --glue")
    if args.format == "csv":
        return _emit_csv(args, emit_table(block, "csv"))
    return _emit_json(args, block_to_data(block))


# -- verification suites -----------------------------------------------------


def _suite_phi(args) -> list:
    d_max = args.d if args.d is not None else 6
    order = args.lambda_order if args.lambda_order is not None else 6
    checks = []
    for d in range(1, d_max + 1):
        ok = True
        for nu in partitions_of(d):
            for mu in partitions_of(d):
                expected = Fraction(1, z_aut(nu)) if nu == mu else Fraction(0)
                if PhiKernel(nu, mu).at_zero() != expected:
                    ok = False
        checks.append({"name": f"kernel-at-zero-d{d}", "passed": ok})
    for d in range(1, min(d_max, 4) + 1):
        ok = all(
            phi_composition_check(nu, mu, order)
            for nu in partitions_of(d)
            for mu in partitions_of(d)
        )
        checks.append({"name": f"kernel-composition-d{d}-order{order}", "passed": ok})
    return checks


def _suite_burnside(args) -> list:
    d_max = args.d if args.d is not None else 3
    r_max = args.r if args.r is not None else 4
    if d_max > ORACLE_DEGREE_LIMIT:
        raise GuardError(
            f"the factorization oracle is guarded to degree {ORACLE_DEGREE_LIMIT}"
        )
    checks = []
    for d in range(1, d_max + 1):
        ok = True
        table = []
        for nu in partitions_of(d):
            for mu in partitions_of(d):
                for r in range(r_max + 1):
                    chi_euler = len(nu) + len(mu) - r
                    value = burnside_value(chi_euler, nu, mu)
                    oracle = factorization_oracle(chi_euler, nu, mu)
                    if value != oracle:
                        ok = False
                    table.append(
                        {
                            "nu": list(nu),
                            "mu": list(mu),
                            "r": r,
                            "value": _frac_str(value),
                        }
                    )
        checks.append({"name": f"burnside-vs-oracle-d{d}", "passed": ok, "values": table})
    spots = (
        burnside_value(2, (1,), (1,)) == Fraction(1)
        and burnside_value(0, (2,), (2,)) == Fraction(1, 2)
    )
    checks.append({"name": "spot-values", "passed": spots})
    return checks


def _suite_correspondence(args) -> list:
    lam_max = args.lambda_order if args.lambda_order is not None else 5
    x_deg_max = args.x_order if args.x_order is not None else 4
    if args.a is not None and args.d is not None:
        pairs = ((args.a, args.d),)
    elif args.a is None and args.d is None:
        pairs = DEFAULT_CORRESPONDENCE_PAIRS
    else:
        raise UsageError("correspondence takes --a and --d together, or neither")
    checks = []
    for a, d in pairs:
        for mu, agree in correspondence_report(a, d, lam_max=lam_max, x_deg_max=x_deg_max):
            checks.append(
                {
                    "name": f"correspondence-a{a}-mu{_partition_label(mu)}",
                    "passed": agree,
                }
            )
    return checks


def _suite_mv_a1(args) -> list:
    d_max = args.d if args.d is not None else 4
    order = args.lambda_order if args.lambda_order is not None else 8
    checks = []
    for d in range(1, d_max + 1):
        for mu in partitions_of(d):
            checks.append(
                {
                    "name": f"character-sum-mu{_partition_label(mu)}-order{order}",
                    "passed": mv_a1_check(mu, lam_trunc=order),
                }
            )
    return checks


def _suite_quantum_dim(args) -> list:
    size_max = args.d if args.d is not None else 5
    order = args.lambda_order if args.lambda_order is not None else 10
    checks = []
    for d in range(1, size_max + 1):
        ok = all(
            quantum_dim_hook(nu, lam_trunc=order) == quantum_dim_sine(nu, lam_trunc=order)
            for nu in partitions_of(d)
        )
        checks.append({"name": f"hook-vs-sine-size{d}-order{order}", "passed": ok})
    return checks


def _suite_gluing(args) -> list:
    d_max = args.d if args.d is not None else 3
    checks = []
    for a in (1, 2):
        for d in range(1, d_max + 1):
            fam = cap_family(a, d, lam_max=4, x_deg_max=2)
            ident = identity_block(a, d)
            two_sided = glue(fam, ident, d) == fam and glue(ident, fam, d) == fam
            checks.append({"name": f"identity-kernel-a{a}-d{d}", "passed": two_sided})
            tensor = LocalBlock(
                d=d,
                a_list=(a, a),
                slots=2,
                data={
                    (m1, m2): fam.data[(m1,)] * fam.data[(m2,)]
                    for m1 in partitions_of(d)
                    for m2 in partitions_of(d)
                },
            )
            assoc = glue(glue(fam, tensor, d), fam, d) == glue(fam, glue(tensor, fam, d), d)
            checks.append({"name": f"associativity-a{a}-d{d}", "passed": assoc})
    from .exactnum import field_for

    i_unit = field_for(1).imaginary_unit()
    for d in range(1, d_max + 1):
        ok = True
        for mu in partitions_of(d):
            cap = cap_series(1, mu, lam_max=5)
            base = g_bullet_mu(1, mu, lam_max=5)
            scalar = i_unit ** (d - len(mu))
            shifted = {(key[0] + d,): c * scalar for key, c in base.terms.items()}
            if shifted != dict(cap.terms):
                ok = False
        checks.append({"name": f"cap-vs-framed-series-d{d}", "passed": ok})
    return checks


def _suite_abelian(args) -> list:
    d_max = args.d if args.d is not None else 3
    lam_max = args.lambda_order if args.lambda_order is not None else 4
    tau = args.tau if args.tau is not None else 0
    checks = []
    base = connected_profile_series(2, (1,), tau, d_max, lam_max=lam_max)
    names = base.ctx.names
    lam_i = names.index("lam")
    p_idx = [i for i, n in enumerate(names) if n.startswith("p")]
    lifts = {
        "cyclic4": abelian_lift((4,), (2,), ((1,),), tau, d_max, lam_max=lam_max),
        "klein4": abelian_lift((2, 2), (1, 0), ((1, 0),), tau, d_max, lam_max=lam_max),
    }
    K = 2
    for label, lift in lifts.items():
        ok = len(lift.terms) == len(base.terms)
        for key, coeff in base.terms.items():
            j = key[lam_i]
            parts = sum(key[i] for i in p_idx)
            want = coeff * Fraction(K) ** (1 + j - parts)
            if lift.terms.get(key) != want:
                ok = False
        checks.append({"name": f"term-scaling-{label}", "passed": ok})
    checks.append(
        {
            "name": "lift-independence-of-presentation",
            "passed": lifts["cyclic4"].terms == lifts["klein4"].terms,
        }
    )
    return checks


SUITES = {
    "phi": _suite_phi,
    "burnside": _suite_burnside,
    "correspondence": _suite_correspondence,
    "mv-a1": _suite_mv_a1,
    "quantum-dim": _suite_quantum_dim,
    "gluing": _suite_gluing,
    "abelian": _suite_abelian,
}


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    checks = SUITES[args.suite](args)
    passed = all(c["passed"] for c in checks)
    first_failure = next((c["name"] for c in checks if not c["passed"]), None)
    result = {"suite": args.suite, "passed": passed, "checks": checks}
    if first_failure is not None:
        result["first_failure"] = first_failure
    _emit_json(args, result)
    return EXIT_OK if passed else EXIT_VERIFY


# -- parser -------------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--a", type=int, help="cyclic quotient order")
    sub.add_argument("--d", type=int, help="degree / size bound")
    sub.add_argument("--mu", type=_parse_partition, help="partition, comma-separated parts")
    sub.add_argument("--nu", type=_parse_partition, help="partition, comma-separated parts")
    sub.add_argument("--tau", type=int, help="framing parameter")
    sub.add_argument("--r", type=int, help="number of simple branch points")
    sub.add_argument("--lambda-order", type=int, dest="lambda_order", help="series order in lam")
    sub.add_argument("--x-order", type=int, dest="x_order", help="total x-degree bound")
    sub.add_argument("--q-order", type=int, dest="q_order", help="series order in q")
    sub.add_argument("--enumerate", type=int, help="brute-force enumeration size")
    sub.add_argument("--format", choices=("json", "csv"), default="json", help="output format")
    sub.add_argument("--out", help="output file path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orbivertex", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sp = subs.add_parser("char", help="symmetric group character table")
    _add_common(sp)
    sp.set_defaults(func=cmd_char)

    sp = subs.add_parser("hurwitz", help="weighted branched-cover count")
    _add_common(sp)
    sp.set_defaults(func=cmd_hurwitz)

    sp = subs.add_parser("gw", help="framed generating series for one profile")
    _add_common(sp)
    sp.set_defaults(func=cmd_gw)

    sp = subs.add_parser("dt", help="reduced box-counting vertex in closed form")
    _add_common(sp)
    sp.set_defaults(func=cmd_dt)

    sp = subs.add_parser("local-gw", help="local invariant blocks and gluing")
    _add_common(sp)
    sp.add_argument("--glue", help="JSON gluing plan file")
    sp.set_defaults(func=cmd_local_gw)

    sp = subs.add_parser("verify", help="run a named verification suite")
    _add_common(sp)
    sp.add_argument("--suite", required=True, help=f"one of {sorted(SUITES)}")
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"cost guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (PrecisionError, ValueError, OSError) as exc:
        print(f"internal guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
