import json
import logging
import sys

import click

from hstrata.app import get_context
from hstrata.app.documents import from_space, loads
from hstrata.app.reports import (
    analyze_document, nose_csv, nose_json, parse_partition, poset_dot, poset_json, strata_csv, strata_json,
)
from hstrata.app.verify_client import AVAILABLE_SUITES, VerifyClient
from hstrata.models.errors import HstrataError, InputError, VerificationFailure
from hstrata.models.partition import Partition
from hstrata.services.combinatorics import all_strata, nose_strata
from hstrata.services.poset import build_poset
from hstrata.services.sampling import sample_hilbert_burch

logger = logging.getLogger(__name__)

EXIT_VERIFICATION = 1
EXIT_USAGE = 2


def _exit_on_error(e: Exception):
    if isinstance(e, InputError):
        logger.error(f"Input error: {e}")
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    if isinstance(e, VerificationFailure):
        logger.error(f"Verification failed: {e}")
        click.echo(json.dumps({'error': str(e), 'counterexample': e.counterexample}, indent=2), err=True)
        sys.exit(EXIT_VERIFICATION)
    logger.error(f"{type(e).__name__}: {e}")
    click.echo(f"error: {e}", err=True)
    sys.exit(EXIT_VERIFICATION)


def _parse_degrees(text: str) -> Partition:
    try:
        return Partition.of(int(v) for v in text.split(','))
    except ValueError:
        raise InputError(f"--D expects comma-separated integers, got {text!r}")


@click.group()
@click.option('--prime', type=int, default=None, help='Prime for modular arithmetic (overrides HSTRATA_PRIME).')
@click.pass_context
def cli(ctx, prime):
    """Invariants and stratification posets of subspaces of binary forms."""
    try:
        context = get_context()
        if prime is not None:
            context = context.with_prime(prime)
    except HstrataError as e:
        _exit_on_error(e)
    ctx.obj = context


@cli.command()
@click.argument('path', type=click.File('r'))
@click.pass_obj
def analyze(context, path):
    """Full invariant report for the FormSpaceDocument at PATH ('-' for stdin)."""
    try:
        doc = loads(path.read(), context.prime)
        report = analyze_document(doc)
        click.echo(json.dumps(report.to_json(), indent=2))
    except HstrataError as e:
        _exit_on_error(e)


@cli.command('enumerate')
@click.option('--j', 'j', type=int, required=True)
@click.option('--d', 'd', type=int, required=True)
@click.option('--nose', is_flag=True, help='Enumerate the nose strata instead.')
@click.option('--format', 'fmt', type=click.Choice(['csv', 'json']), default='csv')
@click.option('--star', default=None, help='Mark the closure of the stratum with this lambda, e.g. 5,1.')
def enumerate_strata(j, d, nose, fmt, star):
    """One row per stratum of Grass(R_j, d)."""
    try:
        if nose:
            strata = nose_strata(j, d)
            click.echo(nose_csv(strata) if fmt == 'csv' else nose_json(j, d, strata), nl=False)
            return
        starred = None
        if star is not None:
            graph = build_poset(j, d)
            try:
                center = graph.by_lambda(parse_partition(star))
            except KeyError:
                raise InputError(f"no stratum of ({j},{d}) has lambda {star}")
            strata = graph.strata
            starred = {s.key for s in graph.closure_set(center)}
        else:
            strata = all_strata(j, d)
        click.echo(strata_csv(strata, starred) if fmt == 'csv' else strata_json(j, d, strata, starred), nl=False)
    except HstrataError as e:
        _exit_on_error(e)


@cli.command()
@click.option('--j', 'j', type=int, required=True)
@click.option('--d', 'd', type=int, required=True)
@click.option('--format', 'fmt', type=click.Choice(['dot', 'json']), default='dot')
def poset(j, d, fmt):
    """Closure poset of the strata; edges point from a stratum to the covers in its closure."""
    try:
        graph = build_poset(j, d)
        click.echo(poset_dot(graph) if fmt == 'dot' else poset_json(graph), nl=False)
    except HstrataError as e:
        _exit_on_error(e)


@cli.command()
@click.option('--j', 'j', type=int, required=True)
@click.option('--d', 'd', type=int, required=True)
@click.option('--D', 'degrees', required=True, help='Relation degrees, e.g. 4,2.')
@click.option('--c', 'c', type=int, default=0, show_default=True)
@click.option('--seed', type=int, required=True)
@click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_obj
def sample(context, j, d, degrees, c, seed, out):
    """Random space in the stratum with relation degrees D and base-point degree c."""
    try:
        D = _parse_degrees(degrees)
        result = sample_hilbert_burch(j, d, D, c, seed, context.field, context.max_resamples)
        doc = from_space(result.V, meta={'seed': seed, 'D': list(D), 'c': c})
        text = doc.dumps()
        if out:
            with open(out, 'w') as f:
                f.write(text)
            logger.info(f"Sample written to {out}")
        else:
            click.echo(text, nl=False)
    except HstrataError as e:
        _exit_on_error(e)


@cli.command()
@click.argument('suite', type=click.Choice(list(AVAILABLE_SUITES) + ['all']))
@click.option('--j', 'j', type=int, default=None)
@click.option('--d', 'd', type=int, default=None)
@click.option('--trials', type=int, default=None)
@click.option('--seeds', type=int, default=None, help='Independent seeds per check.')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--max-j', 'max_j', type=int, default=None)
@click.option('--max-n', 'max_n', type=int, default=None)
@click.pass_obj
def verify(context, suite, j, d, trials, seeds, seed, max_j, max_n):
    """Run a verification suite; exit 0 iff every check passes."""
    if (j is None) != (d is None):
        _exit_on_error(InputError("--j and --d go together"))
    client = VerifyClient(context)
    try:
        summary = client.run(suite, j=j, d=d, trials=trials, seeds=seeds, seed=seed, max_j=max_j, max_n=max_n)
        click.echo(json.dumps(summary, indent=2))
        if not summary['passed']:
            failures = client.failures_of(summary)
            raise VerificationFailure(f"suite {suite}: {len(failures)} failures", counterexample=failures[0])
    except HstrataError as e:
        _exit_on_error(e)


def main():
    cli(prog_name='hstrata')
