"""Primitive transfers of 0-1 matrices.

Exit codes: 0 success or true, 1 false or invalid, 2 usage error or
malformed input, 3 unknown because a resource cap was hit. Indices are
0-based everywhere.

\b
Matrix file: n, then n rows of n digits 0/1; lines starting with # are comments.
    3
    010
    001
    000

\b
Transfer flags: --p is the pivot row, --M and --K are comma-separated lists.
Example, checking that row 0 of a.mat is the sum of rows 2, 3, 5, 6, 7:
    primtransfer validate a.mat --p 0 --M 2,3,5,6,7 --K ""

\b
Certificate (decompose, equivalent -o, verify): JSON with keys n, initial,
moves, final and optionally intermediates; moves are {kind, p, M, K} or
{kind, perm} with kind forward_transfer, reverse_transfer or permute.
    {"n": 2, "initial": ["00", "00"],
     "moves": [{"kind": "forward_transfer", "p": 0, "M": [1], "K": []}],
     "final": ["01", "00"]}

\b
Atlas (classify): a header, then per class a summary line, the
representative as a matrix file and a blank line.
    # atlas n=1 filter=all classes=2
    class 0 size=1 members=1 irreducible=no
    1
    0
"""

import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, cast

import click

from primtransfer.core.matrix import ZeroOneMatrix
from primtransfer.core.textio import format_matrix, read_matrix
from primtransfer.decompose.certificate import (
    dumps_certificate,
    read_certificate,
    write_certificate,
)
from primtransfer.decompose.theorem import decompose
from primtransfer.decompose.verify import verify
from primtransfer.exceptions import (
    CertificateError,
    InvalidTransferError,
    MatrixError,
    MatrixFormatError,
    SearchLimitError,
    TransferError,
)
from primtransfer.search.atlas import ATLAS_FILTERS, classify, format_atlas
from primtransfer.search.config import SearchConfig
from primtransfer.search.explorer import EquivalenceExplorer, SearchLevelEvent
from primtransfer.search.models import AtlasFilter, Verdict
from primtransfer.transfer.graph import transfer_graph
from primtransfer.transfer.models import PrimitiveTransfer
from primtransfer.transfer.operations import apply, enumerate_transfers, validate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3

MatrixPath = click.Path(exists=True, dir_okay=False, path_type=Path)
OutputPath = click.Path(dir_okay=False, writable=True, path_type=Path)


class InputError(click.ClickException):
    """Malformed input file or inconsistent flags."""

    exit_code = EXIT_USAGE


class UnknownResultError(click.ClickException):
    """A search limit stopped the command before it could decide."""

    exit_code = EXIT_UNKNOWN


def _load_matrix(path: Path) -> ZeroOneMatrix:
    try:
        return read_matrix(path)
    except MatrixFormatError as e:
        raise InputError(str(e)) from e


def _load_transfer(
    a: ZeroOneMatrix, pivot: int, summands: str, units: str
) -> PrimitiveTransfer:
    try:
        t = PrimitiveTransfer.parse(pivot, summands, units)
    except MatrixError as e:
        raise InputError(str(e)) from e
    if t.max_index >= a.n:
        raise InputError(f"index {t.max_index} out of range for a {a.n}x{a.n} matrix")
    return t


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")


def transfer_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Attach the matrix argument and the ``--p/--M/--K`` options."""
    func = click.option("--K", "units", default="", help="Unit columns K, e.g. 1,4")(func)
    func = click.option("--M", "summands", default="", help="Summand rows M, e.g. 2,3")(func)
    func = click.option(
        "--p", "pivot", type=click.IntRange(min=0), required=True, help="Pivot row p"
    )(func)
    return click.argument("matrix_file", type=MatrixPath)(func)


def _search_config(
    max_states: int | None, workers: int, allow_n5: bool = False
) -> SearchConfig:
    overrides: dict[str, object] = {"workers": workers}
    if max_states is not None:
        overrides["max_states"] = max_states
    if allow_n5:
        overrides.update(allow_n5=True, max_n=5)
    return SearchConfig.model_validate(overrides)


def _report_level(event: SearchLevelEvent) -> None:
    click.echo(
        f"depth {event.depth}: frontier {event.frontier_size}, visited {event.visited}",
        err=True,
    )


def _explorer(config: SearchConfig, verbose: int) -> EquivalenceExplorer:
    explorer = EquivalenceExplorer(config)
    if verbose:
        explorer.add_subscriber_with_callback(
            explorer.level_publication, _report_level, with_event_info=False
        )
    return explorer


@click.group(help=__doc__)
@click.option("-v", "--verbose", count=True, help="Log progress; repeat for debug.")
@click.pass_context
def cli(ctx: click.Context, verbose: int) -> None:
    levels = {0: logging.WARNING, 1: logging.INFO}
    logging.basicConfig(
        level=levels.get(verbose, logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = {"verbose": verbose}


@cli.command("validate")
@transfer_options
@click.pass_context
def validate_command(
    ctx: click.Context, matrix_file: Path, pivot: int, summands: str, units: str
) -> None:
    """Exit 0 if (p, M, K) is a primitive transfer of the matrix, 1 otherwise."""
    a = _load_matrix(matrix_file)
    valid = validate(a, _load_transfer(a, pivot, summands, units))
    click.echo("valid" if valid else "invalid")
    ctx.exit(EXIT_OK if valid else EXIT_FALSE)


@cli.command("apply")
@transfer_options
@click.option("-o", "--output", type=OutputPath, help="Write here instead of stdout.")
@click.pass_context
def apply_command(
    ctx: click.Context,
    matrix_file: Path,
    pivot: int,
    summands: str,
    units: str,
    output: Path | None,
) -> None:
    """Write the primitive transfer of the matrix at (p, M, K)."""
    a = _load_matrix(matrix_file)
    try:
        b = apply(a, _load_transfer(a, pivot, summands, units))
    except InvalidTransferError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_FALSE)
    _emit(format_matrix(b), output)


@cli.command("enumerate")
@click.argument("matrix_file", type=MatrixPath)
@click.option("--include-trivial", is_flag=True, help="Also list size-0 transfers.")
def enumerate_command(matrix_file: Path, include_trivial: bool) -> None:
    """List every primitive transfer of the matrix, one per line."""
    a = _load_matrix(matrix_file)
    for t in enumerate_transfers(a, include_trivial=include_trivial):
        click.echo(str(t))


@cli.command("graph")
@transfer_options
@click.pass_context
def graph_command(
    ctx: click.Context, matrix_file: Path, pivot: int, summands: str, units: str
) -> None:
    """Print the transfer graph: vertices, edges and weak components."""
    a = _load_matrix(matrix_file)
    try:
        graph = transfer_graph(a, _load_transfer(a, pivot, summands, units))
    except InvalidTransferError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_FALSE)
    components = ("{" + ",".join(map(str, c)) + "}" for c in graph.components)
    click.echo("vertices: " + ",".join(map(str, graph.vertices)))
    click.echo("edges: " + " ".join(f"{u}->{v}" for u, v in graph.edges))
    click.echo("components: " + " ".join(components))


@cli.command("decompose")
@transfer_options
@click.option("--embed-intermediates", is_flag=True, help="Record every matrix.")
@click.option("-o", "--output", type=OutputPath, help="Write here instead of stdout.")
@click.pass_context
def decompose_command(
    ctx: click.Context,
    matrix_file: Path,
    pivot: int,
    summands: str,
    units: str,
    embed_intermediates: bool,
    output: Path | None,
) -> None:
    """Write a certificate of size-1 moves from the matrix to its transfer."""
    a = _load_matrix(matrix_file)
    t = _load_transfer(a, pivot, summands, units)
    if not validate(a, t):
        click.echo(f"Error: {t} is not a primitive transfer of the matrix", err=True)
        ctx.exit(EXIT_FALSE)
    sequence = decompose(a, t, embed_intermediates=embed_intermediates)
    _emit(dumps_certificate(sequence), output)


@cli.command("verify")
@click.argument("certificate_file", type=MatrixPath)
@click.pass_context
def verify_command(ctx: click.Context, certificate_file: Path) -> None:
    """Exit 0 if the certificate replays from its initial to its final matrix."""
    try:
        sequence = read_certificate(certificate_file)
    except (CertificateError, MatrixError) as e:
        raise InputError(f"{certificate_file}: {e}") from e
    report = verify(sequence)
    if report:
        click.echo(f"valid: {len(sequence)} moves")
        ctx.exit(EXIT_OK)
    click.echo(f"invalid: move {report.failed_move}: {report.reason}")
    ctx.exit(EXIT_FALSE)


@cli.command("equivalent")
@click.argument("file_a", type=MatrixPath)
@click.argument("file_b", type=MatrixPath)
@click.option("--max-states", type=click.IntRange(min=1), help="Cap on visited states.")
@click.option("--workers", type=click.IntRange(1, 64), default=1, show_default=True)
@click.option("-o", "--output", type=OutputPath, help="Write the certificate here.")
@click.pass_context
def equivalent_command(
    ctx: click.Context,
    file_a: Path,
    file_b: Path,
    max_states: int | None,
    workers: int,
    output: Path | None,
) -> None:
    """Decide primitive equivalence; exit 0 equivalent, 1 not, 3 unknown."""
    a, b = _load_matrix(file_a), _load_matrix(file_b)
    explorer = _explorer(_search_config(max_states, workers), ctx.obj["verbose"])
    result = explorer.are_equivalent(a, b)
    click.echo(f"{result.verdict.value} ({result.reason})")
    if result.verdict is Verdict.UNKNOWN:
        ctx.exit(EXIT_UNKNOWN)
    if result.certificate is None:
        ctx.exit(EXIT_FALSE)
    if output is not None:
        write_certificate(output, result.certificate)
    ctx.exit(EXIT_OK)


@cli.command("classify")
@click.option("--n", "n", type=click.IntRange(1, 5), required=True, help="Dimension.")
@click.option(
    "--filter",
    "matrix_filter",
    type=click.Choice(ATLAS_FILTERS),
    default="all",
    show_default=True,
)
@click.option("--max-states", type=click.IntRange(min=1), help="Cap per class closure.")
@click.option("--workers", type=click.IntRange(1, 64), default=1, show_default=True)
@click.option("--allow-n5", is_flag=True, help="Permit n = 5, which takes hours.")
@click.option("-o", "--output", type=OutputPath, help="Write here instead of stdout.")
@click.pass_context
def classify_command(
    ctx: click.Context,
    n: int,
    matrix_filter: str,
    max_states: int | None,
    workers: int,
    allow_n5: bool,
    output: Path | None,
) -> None:
    """Partition all n x n matrices into primitive equivalence classes."""
    if n == 5 and not allow_n5:
        raise InputError("--n 5 requires --allow-n5")
    config = _search_config(max_states, workers, allow_n5)
    explorer = _explorer(config, ctx.obj["verbose"])
    try:
        atlas = classify(n, cast(AtlasFilter, matrix_filter), explorer=explorer)
    except SearchLimitError as e:
        raise UnknownResultError(str(e)) from e
    _emit(format_atlas(atlas), output)
    ctx.exit(EXIT_OK if atlas.complete else EXIT_UNKNOWN)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code."""
    args = list(argv) if argv is not None else None
    try:
        result = cli.main(args=args, prog_name="primtransfer", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FALSE
    except TransferError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_FALSE
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())
