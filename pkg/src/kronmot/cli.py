"""Command-line surface.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 internal inconsistency (methods disagree), 4 resource limit.
"""

from __future__ import annotations

import json
import sys

import click

from . import central, eulerchar, selftest, tamari, wallcross
from .cache import SCHEMA, Cache
from .errors import (
    InsufficientBoundError,
    KronmotError,
    NonCoprimeError,
    ResourceLimitError,
)
from .exactalg import LaurentPoly

EXIT_VERIFY_FAIL = 1
EXIT_BAD_INPUT = 2
EXIT_INCONSISTENT = 3
EXIT_RESOURCE = 4


def _coeff_list(p: LaurentPoly) -> list[str]:
    """Coefficients in ascending exponent order, table style (step 2 when
    the exponents all share parity)."""
    if p.is_zero():
        return ["0"]
    step = 2 if all(c == 0 for c in p.coeffs[1::2]) else 1
    return [str(c) for c in p.coeffs[::step]]


def _print_poly(ctx_fmt: str, command: str, p: LaurentPoly, extra=None):
    if ctx_fmt == "json":
        result = p.to_json()
        if extra:
            result = {**extra, "motive": result}
        click.echo(json.dumps({"schema": SCHEMA, "command": command,
                               "result": result}, sort_keys=True))
    elif ctx_fmt == "csv":
        fields = list((extra or {}).values())
        click.echo(",".join(str(x) for x in fields + [p.min_exp] + _coeff_list(p)))
    else:
        for i, c in enumerate(p.coeffs):
            if c != 0:
                click.echo(f"{p.min_exp + i}: {c}")
        click.echo(",".join(_coeff_list(p)))


def _print_json_result(command: str, result):
    click.echo(json.dumps({"schema": SCHEMA, "command": command,
                           "result": result}, sort_keys=True))


@click.group()
@click.option("--format", "fmt", type=click.Choice(["plain", "json", "csv"]),
              default="plain", show_default=True)
@click.option("--cache-dir", type=click.Path(), default=None,
              help="Cache directory (or set KRONMOT_CACHE_DIR).")
@click.option("--no-cache", is_flag=True, default=False)
@click.option("--max-paths", type=int, default=tamari.DEFAULT_MAX_PATHS,
              show_default=True, help="Ballot-path enumeration cap.")
@click.pass_context
def main(ctx, fmt, cache_dir, no_cache, max_paths):
    """Exact virtual motives of Kronecker quiver moduli."""
    ctx.ensure_object(dict)
    ctx.obj["fmt"] = fmt
    ctx.obj["cache"] = Cache(cache_dir, enabled=not no_cache)
    ctx.obj["max_paths"] = max_paths


def _cached_poly(ctx, command: str, params: dict, compute) -> LaurentPoly:
    cache: Cache = ctx.obj["cache"]
    key = Cache.make_key(command, **params)
    payload = cache.get(key)
    if payload is not None:
        return LaurentPoly.from_json(payload)
    poly = compute()
    cache.put(key, poly.to_json())
    return poly


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--method", type=click.Choice(["recursion", "funceq", "wallcross",
                                             "all"]), default="recursion",
              show_default=True)
@click.pass_context
def framed(ctx, m, d, method):
    """Virtual motive of the framed moduli space K_{d,d}^(m),fr."""
    if m < 3 or d < 0:
        raise click.exceptions.Exit(_bad_input("need m >= 3 and d >= 0"))

    def by(name):
        if name == "recursion":
            return central.framed_recursion(m, d).coeffs[d].to_laurent()
        if name == "funceq":
            return central.solve_functional_eq(m, d).coeffs[d].to_laurent()
        return wallcross.framed_via_quotient(m, (1, 1), d).coeffs[d].to_laurent()

    if method == "all":
        values = {name: by(name) for name in ("recursion", "funceq", "wallcross")}
        first = values["recursion"]
        if any(v != first for v in values.values()):
            click.echo("methods disagree", err=True)
            raise click.exceptions.Exit(EXIT_INCONSISTENT)
        poly = first
    else:
        poly = _cached_poly(ctx, "framed", {"m": m, "d": d, "method": method},
                            lambda: by(method))
    _print_poly(ctx.obj["fmt"], "framed", poly, {"m": m, "d": d})


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--e", type=int, required=True)
@click.pass_context
def moduli(ctx, m, d, e):
    """Virtual motive of K_{d,e}^(m) for coprime (d,e)."""
    if m < 1 or d < 0 or e < 0 or (d, e) == (0, 0):
        raise click.exceptions.Exit(_bad_input("invalid parameters"))
    try:
        poly = _cached_poly(ctx, "moduli", {"m": m, "d": d, "e": e},
                            lambda: wallcross.moduli_motive(m, d, e))
    except NonCoprimeError:
        click.echo(
            f"({d},{e}) is not coprime; the motive is not determined by a_D. "
            "Use the `hn` subcommand for the raw wall-crossing table.",
            err=True,
        )
        raise click.exceptions.Exit(EXIT_BAD_INPUT)
    _print_poly(ctx.obj["fmt"], "moduli", poly, {"m": m, "d": d, "e": e})


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--bound", type=int, required=True)
@click.pass_context
def hn(ctx, m, bound):
    """Raw wall-crossing coefficient table a_D for d+e <= bound."""
    if m < 1 or bound < 0:
        raise click.exceptions.Exit(_bad_input("invalid parameters"))
    cache: Cache = ctx.obj["cache"]
    key = Cache.make_key("hn", m=m, bound=bound)
    records = cache.get(key)
    if records is None:
        records = wallcross.hn_extract(m, bound).export()
        cache.put(key, records)
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        _print_json_result("hn", records)
    else:
        for rec in records:
            motive = rec["motive"]
            desc = (
                ",".join(_coeff_list(LaurentPoly.from_json(motive)))
                if motive is not None
                else "-"
            )
            click.echo(f"({rec['d']},{rec['e']}) motive: {desc}")


@main.command()
@click.option("--which", type=click.Choice(["F", "G", "A"]), required=True)
@click.option("--m", type=int, required=True)
@click.option("--k", type=int, default=1, show_default=True,
              help="Slope parameter for the A series (ray (1,k)).")
@click.option("--order", type=int, required=True)
@click.pass_context
def series(ctx, which, m, k, order):
    """Truncated generating series F, G, or A^(k)."""
    if order < 0:
        raise click.exceptions.Exit(_bad_input("order must be >= 0"))
    cache: Cache = ctx.obj["cache"]
    key = Cache.make_key("series", which=which, m=m, k=k, order=order)
    payload = cache.get(key)
    if payload is None:
        try:
            if which == "F":
                ts = central.framed_recursion(m, order)
            elif which == "G":
                ts = central.extract_G(m, central.framed_recursion(m, order))
            else:
                if not 1 <= k <= m - 1:
                    raise click.exceptions.Exit(_bad_input("need 1 <= k <= m-1"))
                ts = wallcross.hn_extract(m, order * (k + 1)).ray_series((1, k), order)
        except ValueError as exc:
            raise click.exceptions.Exit(_bad_input(str(exc)))
        payload = ts.to_json()
        cache.put(key, payload)
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        _print_json_result("series", payload)
    else:
        for dd, coeff in enumerate(payload["coeffs"]):
            num = LaurentPoly.from_json(coeff["num"])
            den = LaurentPoly.from_json(coeff["den"])
            if den == LaurentPoly.one():
                click.echo(f"t^{dd}: {','.join(_coeff_list(num))}")
            else:
                click.echo(
                    f"t^{dd}: ({','.join(_coeff_list(num))}) / "
                    f"({','.join(_coeff_list(den))})"
                )


@main.command()
@click.option("--m", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--kind", type=click.Choice(["framed", "moduli"]), required=True)
@click.option("--check", is_flag=True, default=False,
              help="Compare the closed form against the motive sum.")
@click.pass_context
def euler(ctx, m, d, kind, check):
    """Euler characteristic of K_{d,d}^(m),fr or K_{d,d-1}^(m)."""
    try:
        if kind == "framed":
            value = eulerchar.chi_framed_closed(m, d)
        else:
            value = eulerchar.chi_moduli_closed(m, d)
    except ValueError as exc:
        raise click.exceptions.Exit(_bad_input(str(exc)))
    if check:
        if kind == "framed":
            motive = central.framed_recursion(m, d).coeffs[d].to_laurent()
        else:
            motive = wallcross.moduli_motive(m, d, d - 1)
        if eulerchar.chi_from_motive(motive) != value:
            click.echo("closed form and motive sum disagree", err=True)
            raise click.exceptions.Exit(EXIT_VERIFY_FAIL)
    _emit_int(ctx, "euler", value, {"m": m, "d": d, "kind": kind})


@main.command()
@click.option("--m-prime", "mprime", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--method", type=click.Choice(["brute", "formula"]),
              default="formula", show_default=True)
@click.option("--check", is_flag=True, default=False,
              help="Run both methods and compare.")
@click.pass_context
def tamari_cmd(ctx, mprime, n, method, check):
    """Interval count of the m'-Tamari lattice of index n."""
    try:
        if check:
            brute = tamari.interval_count_bruteforce(mprime, n,
                                                     ctx.obj["max_paths"])
            formula = tamari.interval_count_formula(mprime, n)
            if brute != formula:
                click.echo("brute force and formula disagree", err=True)
                raise click.exceptions.Exit(EXIT_VERIFY_FAIL)
            value = formula
        elif method == "brute":
            value = tamari.interval_count_bruteforce(mprime, n,
                                                     ctx.obj["max_paths"])
        else:
            value = tamari.interval_count_formula(mprime, n)
    except ResourceLimitError as exc:
        click.echo(str(exc), err=True)
        raise click.exceptions.Exit(EXIT_RESOURCE)
    except ValueError as exc:
        raise click.exceptions.Exit(_bad_input(str(exc)))
    _emit_int(ctx, "tamari", value, {"m_prime": mprime, "n": n})


main.add_command(tamari_cmd, name="tamari")


_VERIFIERS = {
    "maintheorem": lambda m, k, order: central.verify_main_theorem(m, order),
    "vdifference": lambda m, k, order: central.verify_vdifference(m, order),
    "funceq": lambda m, k, order: central.verify_funceq(m, order),
    "eqnew": lambda m, k, order: central.verify_eqnew(m, order),
    "corident": lambda m, k, order: central.verify_corident(m, k, order),
    "newduality": lambda m, k, order: central.verify_newduality(m, k, order),
    "dualities": lambda m, k, order: wallcross.verify_dualities(m, order),
}


@main.command()
@click.option("--identity", type=click.Choice(sorted(_VERIFIERS)), required=True)
@click.option("--m", type=int, required=True)
@click.option("--k", type=int, default=None)
@click.option("--order", type=int, required=True)
@click.pass_context
def verify(ctx, identity, m, k, order):
    """Check a series identity exactly; exit 0 iff everything passes."""
    needs_k = identity in ("corident", "newduality")
    try:
        if needs_k and k is None:
            reports = []
            for kk in range(1, m):
                reports += _VERIFIERS[identity](m, kk, order)
        else:
            reports = _VERIFIERS[identity](m, k, order)
    except ValueError as exc:
        raise click.exceptions.Exit(_bad_input(str(exc)))
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        _print_json_result("verify", reports)
    else:
        for r in reports:
            tail = "".join(
                f" {key}={r[key]}"
                for key in ("k", "order", "pair")
                if r.get(key) is not None
            )
            click.echo(f"{r['status'].upper()} {r['identity']} m={r['m']}{tail}")
    if any(r["status"] != "pass" for r in reports):
        raise click.exceptions.Exit(EXIT_VERIFY_FAIL)


@main.command()
def selftest_cmd():
    """Run the full acceptance suite (criteria 1-6)."""
    if not selftest.run(echo=click.echo):
        raise click.exceptions.Exit(EXIT_VERIFY_FAIL)


main.add_command(selftest_cmd, name="selftest")


def _emit_int(ctx, command: str, value: int, params: dict):
    fmt = ctx.obj["fmt"]
    if fmt == "json":
        _print_json_result(command, {**params, "value": value})
    elif fmt == "csv":
        click.echo(",".join(str(x) for x in list(params.values()) + [value]))
    else:
        click.echo(str(value))


def _bad_input(message: str) -> int:
    click.echo(message, err=True)
    return EXIT_BAD_INPUT


def _entry():
    try:
        rv = main(standalone_mode=False)
        sys.exit(rv if isinstance(rv, int) else 0)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_BAD_INPUT)
    except click.Abort:
        sys.exit(EXIT_BAD_INPUT)
    except InsufficientBoundError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_BAD_INPUT)
    except ResourceLimitError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_RESOURCE)
    except KronmotError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_INCONSISTENT)


if __name__ == "__main__":
    _entry()
