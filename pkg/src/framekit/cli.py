"""``framekit`` command line: load JSON, run checks, print a JSON report.

Exit codes: 0 when every check passes, 1 when a check fails or the input is
of the wrong mathematical kind, 2 when the input cannot be parsed.
"""
from __future__ import annotations

import json
import sys
import traceback
from pathlib import Path

import click

from . import io
from .corpus import enumerate_kind, random_lattices
from .duality import lattice_to_space, space_to_lattice, stone_roundtrip_check
from .errors import FramekitError, ParseError, TooLarge
from .frame import (
    coherence_report,
    frame_violation,
    has_enough_points,
    spectrum,
    to_frame,
)
from .lattice import FiniteLattice, distributivity_violation, ideal_completion
from .poset import to_dot
from .report import Report, timed
from .topology import FiniteSpace, hochster_dual, is_sober, spectral_report

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def _finish(report: Report, json_out=None, dot_out=None, payload=None, dot=None) -> None:
    if json_out and payload is not None:
        io.write_text(json_out, io.dumps(payload))
    if dot_out and dot is not None:
        io.write_text(dot_out, dot)
    click.echo(io.dumps(report.as_dict()), nl=False)
    sys.exit(EXIT_OK if report.ok else EXIT_FAIL)


def _fail(command: str, err: Exception, code: int) -> None:
    report = Report(command)
    report.add(type(err).__name__, False, str(err))
    click.echo(io.dumps(report.as_dict()), nl=False)
    click.echo(f"error: {err}", err=True)
    sys.exit(code)


def _guarded(command: str):
    """Map parse errors to exit 2 and mathematical rejections to exit 1."""

    def wrap(fn):
        def inner(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except (ParseError, TooLarge) as e:
                _fail(command, e, EXIT_INVALID)
            except FramekitError as e:
                _fail(command, e, EXIT_FAIL)
            except (SystemExit, click.exceptions.Exit, click.ClickException):
                raise
            except Exception as e:  # noqa: BLE001 - keep the exit-code contract
                traceback.print_exc()
                _fail(command, e, EXIT_FAIL)

        inner.__name__ = fn.__name__
        inner.__doc__ = fn.__doc__
        return inner

    return wrap


def _load(path, kind):
    return io.load(path, kind)


def _load_model(path):
    from .ttmodel import scenario_preset

    if not Path(path).exists():
        try:
            return scenario_preset(path)
        except FramekitError:
            pass
    return io.load(path, "scenario")


json_option = click.option("--json", "json_out", type=click.Path(dir_okay=False), help="Write the computed object as JSON.")
dot_option = click.option("--dot", "dot_out", type=click.Path(dir_okay=False), help="Write a DOT diagram.")


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Finite lattices, frames, spaces, Stone duality and a stratified support model."""


# -- check ----------------------------------------------------------------------------

LATTICE_CHECKS = ("distributive", "frame", "coherent", "enough-points")
SPACE_CHECKS = ("sober", "spectral")


@main.command()
@click.option("--distributive", "which", flag_value="distributive")
@click.option("--frame", "which", flag_value="frame")
@click.option("--coherent", "which", flag_value="coherent")
@click.option("--enough-points", "which", flag_value="enough-points")
@click.option("--sober", "which", flag_value="sober")
@click.option("--spectral", "which", flag_value="spectral")
@click.argument("path", type=click.Path())
@_guarded("check")
def check(which, path):
    """Run one structural check on a lattice or space file."""
    if which is None:
        raise click.UsageError("choose one of --distributive, --frame, --coherent, --enough-points, --sober, --spectral")
    report = Report(f"check --{which}")
    with timed(report):
        if which in LATTICE_CHECKS:
            L = _load(path, "lattice")
            if which == "distributive":
                bad = distributivity_violation(L)
                report.add("distributive", bad is None, bad)
            elif which == "frame":
                bad = frame_violation(L)
                report.add("frame", bad is None, bad)
            elif which == "coherent":
                for name, value in coherence_report(L).as_dict().items():
                    if name != "agree":
                        report.add(name, value)
            else:
                report.add("enough-points", has_enough_points(L))
        else:
            X = _load(path, "space")
            if which == "sober":
                report.add("sober", is_sober(X))
            else:
                for name, value in spectral_report(X).items():
                    report.add(name, value)
    _finish(report)


# -- constructions ------------------------------------------------------------------

@main.command("ideal-completion")
@click.argument("path", type=click.Path())
@json_option
@dot_option
@_guarded("ideal-completion")
def ideal_completion_cmd(path, json_out, dot_out):
    """Lattice of ideals of a lattice."""
    report = Report("ideal-completion")
    with timed(report):
        L = _load(path, "lattice")
        I = ideal_completion(L)
        report.add("ideal completion built", True, {"size": len(I)})
        report.data = io.lattice_to_json(I)
    _finish(report, json_out, dot_out, report.data, to_dot(I.poset, "ideals"))


@main.command("spectrum")
@click.argument("path", type=click.Path())
@json_option
@dot_option
@_guarded("spectrum")
def spectrum_cmd(path, json_out, dot_out):
    """Prime elements of a frame with the Stone topology."""
    report = Report("spectrum")
    with timed(report):
        F = to_frame(_load(path, "lattice"))
        X = spectrum(F)
        report.add("spectrum built", True, {"points": len(X)})
        report.data = io.space_to_json(X)
    _finish(report, json_out, dot_out, report.data, _space_dot(X))


def _space_dot(X: FiniteSpace):
    try:
        return io.space_to_dot(X)
    except FramekitError:
        return None


@main.command("dual")
@click.argument("path", type=click.Path())
@json_option
@dot_option
@_guarded("dual")
def dual_cmd(path, json_out, dot_out):
    """Hochster dual of a spectral space."""
    report = Report("dual")
    with timed(report):
        X = _load(path, "space")
        D = hochster_dual(X)
        report.add("hochster dual built", True)
        report.data = io.space_to_json(D)
    _finish(report, json_out, dot_out, report.data, _space_dot(D))


@main.command("stone")
@click.option("--to-space", "direction", flag_value="to-space")
@click.option("--to-lattice", "direction", flag_value="to-lattice")
@click.option("--roundtrip", "direction", flag_value="roundtrip")
@click.argument("path", type=click.Path())
@json_option
@dot_option
@_guarded("stone")
def stone_cmd(direction, path, json_out, dot_out):
    """Move between distributive lattices and spectral spaces."""
    if direction is None:
        raise click.UsageError("choose one of --to-space, --to-lattice, --roundtrip")
    report = Report(f"stone --{direction}")
    dot = None
    with timed(report):
        if direction == "to-space":
            X = lattice_to_space(_load(path, "lattice"))
            report.add("spectral space built", True, {"points": len(X)})
            report.data = io.space_to_json(X)
            dot = _space_dot(X)
        elif direction == "to-lattice":
            L = space_to_lattice(_load(path, "space"))
            report.add("lattice of quasi-compact opens built", True, {"size": len(L)})
            report.data = io.lattice_to_json(L)
            dot = to_dot(L.poset, "qc_opens")
        else:
            d = io.read_json(path)
            obj = io.load(path, io.detect_kind(d))
            if not isinstance(obj, (FiniteLattice, FiniteSpace)):
                raise ParseError("roundtrip needs a lattice or a space")
            rt = stone_roundtrip_check(obj)
            report.add(f"stone roundtrip ({rt.kind})", rt.ok, rt.witness)
    _finish(report, json_out, dot_out, report.data, dot)


# -- model ------------------------------------------------------------------------------

@main.group()
def model():
    """Stratified support model; PATH is a scenario file or a preset like chain(2)."""


@model.command("verify")
@click.argument("path")
@json_option
@_guarded("model verify")
def model_verify(path, json_out):
    """Run every model check: class laws, locality, spectra, local factors."""
    from .ttmodel import verify_scenario

    report = verify_scenario(_load_model(path))
    _finish(report, json_out, None, report.as_dict())


@model.command("spectrum")
@click.argument("path")
@json_option
@dot_option
@_guarded("model spectrum")
def model_spectrum(path, json_out, dot_out):
    """Both spectra and the comparison map between them."""
    from .ttmodel import as_primes, bousfield_lattice, sp_f, thick_lattice

    report = Report("model spectrum")
    with timed(report):
        sc = _load_model(path)
        g = sp_f(sc)
        report.add("Sp(f) bijective", g.bijective, g.map.mapping)
        report.add("Sp(f) pullback formula", g.pullback_exact)
        report.add("Bousfield spectrum discrete", g.source_discrete)
        report.add("thick spectrum homeomorphic to dual", g.target_homeomorphic_to_dual)
        report.data = {
            "bousfield_spectrum": io.space_to_json(spectrum(bousfield_lattice(sc))),
            "thick_spectrum": io.space_to_json(spectrum(thick_lattice(sc))),
            "sp_f": dict(sorted(g.map.mapping.items())),
        }
    _finish(report, json_out, dot_out, report.data, _space_dot(g.map.target))


@model.command("thick")
@click.argument("path")
@json_option
@dot_option
@_guarded("model thick")
def model_thick(path, json_out, dot_out):
    """Frame of thick classes of compacts."""
    from .ttmodel import thick_lattice, thomason_roundtrip

    report = Report("model thick")
    with timed(report):
        sc = _load_model(path)
        T = thick_lattice(sc)
        for name, value in coherence_report(T).as_dict().items():
            if name != "agree":
                report.add(name, value)
        report.add("thomason roundtrip", thomason_roundtrip(sc))
        report.data = io.lattice_to_json(T)
    _finish(report, json_out, dot_out, report.data, to_dot(T.poset, "thick"))


@model.command("balmer")
@click.argument("path")
@json_option
@_guarded("model balmer")
def model_balmer(path, json_out):
    """Prime thick classes P_p and the homeomorphism with the dual space."""
    from .ttmodel import balmer_primes

    report = Report("model balmer")
    with timed(report):
        b = balmer_primes(_load_model(path))
        report.add("primes match the frame primes", b.matches_frame_primes)
        report.add("tensor-prime criterion", b.tensor_prime)
        report.add("p -> P_p homeomorphism", b.homeomorphism)
        report.data = b.as_dict()["primes"]
    _finish(report, json_out, None, report.data)


def _prime_list(value):
    if value is None or value == "":
        return []
    return [p for p in value.split(",") if p]


@model.command("recollement")
@click.argument("path")
@click.option("--u1", default="", help="Comma-separated primes.")
@click.option("--u2", default="", help="Comma-separated primes.")
@json_option
@dot_option
@_guarded("model recollement")
def model_recollement(path, u1, u2, json_out, dot_out):
    """Four-factor splitting of the Bousfield lattice along U1 and U2."""
    from .ttmodel import recollement_decompose

    report = Report("model recollement")
    with timed(report):
        r = recollement_decompose(_load_model(path), _prime_list(u1), _prime_list(u2))
        report.add("explicit bijection", r.bijection, r.sizes)
        report.add("lattice isomorphism", r.isomorphism)
        report.add("diagram inclusions", r.diagram_ok)
        report.data = r.as_dict()
    _finish(report, json_out, dot_out, report.data, r.dot())


# -- enumerate -----------------------------------------------------------------------

@main.command("enumerate")
@click.argument("n", type=int)
@click.option("--kind", type=click.Choice(["posets", "lattices", "spaces"]), default="posets")
@click.option("--t0", is_flag=True, help="Only T0 spaces.")
@click.option("--up-to", is_flag=True, help="Include every size from 0 to N.")
@click.option("--random", "random_count", type=int, default=None, help="Emit this many random lattices instead.")
@click.option("--seed", type=int, default=0)
@click.option("--max-size", type=int, default=None, help="Size cap for random lattices.")
@json_option
@_guarded("enumerate")
def enumerate_cmd(n, kind, t0, up_to, random_count, seed, max_size, json_out):
    """Stream non-isomorphic instances as JSON lines."""
    if random_count is not None:
        items = random_lattices(random_count, seed, max_size or n)
    else:
        items = enumerate_kind(kind, n, t0=t0, up_to=up_to)
    rows = [io.to_json(x) for x in items]
    for row in rows:
        click.echo(json.dumps(row, ensure_ascii=False))
    if json_out:
        io.write_text(json_out, io.dumps(rows))
    click.echo(f"{len(rows)} instances", err=True)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
