"""
Command-line front end. Exit codes: 0 success, 1 domain answer in the negative
or domain error, 2 input that could not be read or parsed.
"""
import functools
import json
import logging
import sys
from pathlib import Path

import click
import numpy as np
from pydantic import BaseModel, ValidationError

from geo5 import config
from geo5.atlas import build_algebra, enumerate_products, find, list_entries, metadata
from geo5.classify import NotInKey, classify_solvable5, invariance_check
from geo5.curvature import curvature_report
from geo5.errors import Geo5Error, InputFormatError, PolynomialRejected
from geo5.exact import parse_poly
from geo5.groups import NilpotentModel, commutator_derivative_check, model_for_label
from geo5.isotropy import contains, dims, geometries_with_stabilizer, parse_stabilizer
from geo5.labels import parse_label
from geo5.lattices import (
    dirichlet_lattice,
    log_root_target,
    make_target,
    sol_family_model_check,
    target_for_label,
    unit_cubic_check,
)
from geo5.liealg import LieAlgebra
from geo5.schemas.atlas import AtlasEntryOut, MetadataOut, ProductOut
from geo5.schemas.classification import ClassificationResult, InvarianceOut
from geo5.schemas.curvature import CurvatureReportOut
from geo5.schemas.groups import GroupCheckOut
from geo5.schemas.isotropy import ContainsOut, GeometriesOut, StabilizerOut
from geo5.schemas.lattices import LatticeReportOut, SolSearchOut, UnitCubicOut
from geo5.schemas.lie_algebras import LieAlgebraDocument


logger = logging.getLogger(__name__)

GROUP_TOLERANCE = 1e-6


def _dumps(data) -> str:
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json")
    elif isinstance(data, list):
        data = [d.model_dump(mode="json") if isinstance(d, BaseModel) else d for d in data]
    return json.dumps(data, indent=2, ensure_ascii=False)


def _handle_errors(command):
    """
    Maps domain errors and unreadable input to the exit-code contract
    """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except Geo5Error as exc:
            click.echo(f"{type(exc).__name__}: {exc}", err=True)
            sys.exit(exc.exit_code)
        except ValidationError as exc:
            click.echo(f"InputFormatError: {exc}", err=True)
            sys.exit(InputFormatError.exit_code)
        except OSError as exc:
            click.echo(f"InputFormatError: {exc}", err=True)
            sys.exit(InputFormatError.exit_code)
    return wrapper


def load_algebra(path: str) -> LieAlgebra:
    text = Path(path).read_text(encoding="utf-8")
    return LieAlgebraDocument.model_validate_json(text).to_algebra()


@click.group()
@click.option("--log-level", default=config.LOG_LEVEL, show_default=True, help="Logging level (stderr)")
def cli(log_level: str):
    """geo5: 5-dimensional model geometries and solvable Lie algebras."""
    logging.basicConfig(level=log_level.upper(), stream=sys.stderr)


# classify

@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@click.option("--trace", is_flag=True, help="Show the witness of every decision")
@click.option("--conjugations", default=0, type=click.IntRange(0), help="Re-classify under N random basis changes")
@click.option("--seed", default=config.GEO5_SEED, type=int, show_default=True, help="Seed for basis changes")
@_handle_errors
def classify(path: str, as_json: bool, trace: bool, conjugations: int, seed: int):
    """Classify the solvable 5-dimensional algebra stored in PATH."""
    L = load_algebra(path)
    result = classify_solvable5(L)
    out = ClassificationResult.from_result(result)
    if conjugations:
        report = invariance_check(L, conjugations, np.random.default_rng(seed))
        out.invariance = InvarianceOut.from_report(report)
    if as_json:
        click.echo(_dumps(out))
    else:
        for step in out.trace:
            line = f"  {step.question}: {step.answer}"
            if trace and step.witness:
                line += f"  [{step.witness}]"
            click.echo(line)
        if isinstance(result, NotInKey):
            click.echo(f"NotInKey: {result.reason}")
            click.echo(_dumps(out.fingerprint))
        else:
            click.echo(f"{out.label} ({out.status})")
        if out.invariance is not None:
            verdict = "invariant" if out.invariance.invariant else f"{out.invariance.mismatches} mismatches"
            click.echo(f"basis changes: {out.invariance.trials}, {verdict}")
    if isinstance(result, NotInKey) or (out.invariance is not None and not out.invariance.invariant):
        sys.exit(1)


# atlas

@cli.group()
def atlas():
    """The catalog of 5-dimensional maximal model geometries."""


@atlas.command("list")
@click.option("--category", type=int, help="Category 1-8")
@click.option("--stabilizer", help="Point stabilizer, e.g. 'SO(2)'")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def atlas_list(category: int | None, stabilizer: str | None, as_json: bool):
    entries = [AtlasEntryOut.from_entry(e) for e in list_entries(category, stabilizer)]
    if as_json:
        click.echo(_dumps(entries))
        return
    for e in entries:
        click.echo(f"{e.category}  {e.label:<32} {e.stabilizer}")


@atlas.command("show")
@click.argument("label")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def atlas_show(label: str, as_json: bool):
    entry, _ = find(label)
    algebra = None
    if entry.is_lie_group and entry.constructor is not None:
        algebra = LieAlgebraDocument.from_algebra(build_algebra(label))
    out = AtlasEntryOut.from_entry(entry, algebra)
    meta = MetadataOut.from_metadata(metadata(label))
    if as_json:
        click.echo(_dumps({"entry": out.model_dump(mode="json"), "metadata": meta.model_dump(mode="json")}))
        return
    click.echo(f"{meta.label}  (category {out.category})")
    click.echo(f"  stabilizer: {meta.stabilizer} (dim {meta.stabilizer_dim})")
    if out.group:
        click.echo(f"  group: {out.group}")
    if meta.compact_quotients is not None:
        click.echo(f"  compact quotients: {'yes' if meta.compact_quotients else 'no'}")
    for note in out.notes:
        click.echo(f"  note: {note}")
    if algebra is not None:
        names = algebra.basis
        for br in algebra.brackets:
            terms = " + ".join(f"{t.q}*{names[t.k]}" for t in br.terms)
            click.echo(f"  [{names[br.i]}, {names[br.j]}] = {terms}")


@atlas.command("products")
@click.option("--json", "as_json", is_flag=True)
def atlas_products(as_json: bool):
    products = [ProductOut.from_spec(spec) for spec in enumerate_products()]
    if as_json:
        click.echo(_dumps(products))
        return
    for p in products:
        click.echo(f"{p.shape:<8} {p.name:<28} {p.stabilizer}")


# isotropy

@cli.group()
def isotropy():
    """Closed connected subgroups of SO(5)."""


@isotropy.command("contains")
@click.argument("a")
@click.argument("b")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def isotropy_contains(a: str, b: str, as_json: bool):
    out = ContainsOut(a=str(parse_stabilizer(a)), b=str(parse_stabilizer(b)), contains=contains(a, b))
    click.echo(_dumps(out) if as_json else ("yes" if out.contains else "no"))


@isotropy.command("dims")
@click.option("--json", "as_json", is_flag=True)
def isotropy_dims(as_json: bool):
    nodes = [StabilizerOut(name=name, dim=dim) for name, dim in dims().items()]
    if as_json:
        click.echo(_dumps(nodes))
        return
    for node in nodes:
        click.echo(f"{node.name:<14} {node.dim}")


@isotropy.command("geometries")
@click.argument("stabilizer")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def isotropy_geometries(stabilizer: str, as_json: bool):
    out = GeometriesOut(stabilizer=str(parse_stabilizer(stabilizer)),
                        geometries=geometries_with_stabilizer(stabilizer))
    click.echo(_dumps(out) if as_json else "\n".join(out.geometries))


# group

@cli.group()
def group():
    """Group models of the Lie-group geometries."""


@group.command("check")
@click.argument("label")
@click.option("--h", default=1e-4, type=float, show_default=True, help="Commutator step")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def group_check(label: str, h: float, as_json: bool):
    model = model_for_label(label)
    error = commutator_derivative_check(model, model.algebra, h)
    out = GroupCheckOut(
        label=model.name,
        model="nilpotent" if isinstance(model, NilpotentModel) else "semidirect",
        dim=model.dim,
        h=h,
        commutator_error=error,
        passed=error < GROUP_TOLERANCE,
    )
    click.echo(_dumps(out) if as_json else f"{out.label}: {out.model} model, error {error:.3g}")
    if not out.passed:
        sys.exit(1)


# lattice

@cli.group()
def lattice():
    """Lattice constructions and checks."""


@lattice.command("unit-check")
@click.argument("poly")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def lattice_unit_check(poly: str, as_json: bool):
    p = parse_poly(poly)
    try:
        out = UnitCubicOut.accepted_cubic(unit_cubic_check(p))
    except PolynomialRejected as exc:
        out = UnitCubicOut(poly=str(p), accepted=False, reasons=exc.reasons)
    if as_json:
        click.echo(_dumps(out))
    elif out.accepted:
        click.echo(f"{out.poly}: unit cubic, det(companion) = {out.det}")
    else:
        click.echo(f"{out.poly}: rejected: {'; '.join(out.reasons)}")
    if not out.accepted:
        sys.exit(1)


@lattice.command("dirichlet")
@click.argument("poly")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def lattice_dirichlet(poly: str, as_json: bool):
    out = LatticeReportOut.from_report(dirichlet_lattice(parse_poly(poly)))
    if as_json:
        click.echo(_dumps(out))
        return
    click.echo(f"{out.poly}: det = {out.det}{', using M^2' if out.squared else ''}")
    click.echo(f"  eigenvalue product {out.eigenvalue_product:.12g}, log sum {out.log_sum:.3g}")
    click.echo(f"  torus element ({out.torus[0]:.12g}, {out.torus[1]:.12g})")
    click.echo(f"  relation residual {out.relation_residual:.3g}")
    click.echo(f"  min displacement {out.min_displacement:.6g} over {out.words_checked} words")
    click.echo("  verified" if out.verified else "  NOT verified")


@lattice.command("sol-search")
@click.option("--bound", default=10, type=int, show_default=True, help="Coefficient bound")
@click.option("--target", "target_json", help='JSON {"degree": 3, "normalized_logs": [...]}')
@click.option("--poly", help="Polynomial whose log-roots form the target")
@click.option("--label", help="Family member label carrying root data")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def lattice_sol_search(bound: int, target_json: str | None, poly: str | None, label: str | None, as_json: bool):
    given = [x for x in (target_json, poly, label) if x is not None]
    if len(given) != 1:
        raise InputFormatError("give exactly one of --target, --poly, --label")
    if target_json is not None:
        try:
            data = json.loads(target_json)
            target = make_target(int(data["degree"]), data["normalized_logs"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"malformed target JSON: {exc}") from exc
    elif poly is not None:
        target = log_root_target(parse_poly(poly))
    else:
        target = target_for_label(parse_label(label))
    out = SolSearchOut.from_result(sol_family_model_check(target, bound))
    if as_json:
        click.echo(_dumps(out))
    elif out.witness is not None:
        click.echo(f"witness {tuple(out.witness)}: {out.polynomial}")
    else:
        click.echo(f"none in bound {out.bound} ({out.searched} polynomials)")


# curvature

@cli.command()
@click.argument("source")
@click.option("--json", "as_json", is_flag=True)
@_handle_errors
def curvature(source: str, as_json: bool):
    """Curvature of SOURCE, an algebra JSON file or an atlas label."""
    L = load_algebra(source) if Path(source).is_file() else build_algebra(source)
    out = CurvatureReportOut.from_report(curvature_report(L))
    if as_json:
        click.echo(_dumps(out))
        return
    names = L.basis_names
    for s in out.sectional:
        click.echo(f"K({names[s.i]}, {names[s.j]}) = {s.K}")
    click.echo(f"Ricci eigenvalues: {', '.join(out.ricci_eigenvalues)}")
    click.echo(f"scalar: {out.scalar}")
