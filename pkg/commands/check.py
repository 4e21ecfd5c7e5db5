"""
Cross-check command
Compares every equivalent characterization on one program or a seeded corpus
"""

import click

from commands.options import common_options, invoke, program_argument


@click.command("crosscheck")
@program_argument(required=False)
@click.option("--seed", type=int, default=None, help="Corpus seed")
@click.option("--count", type=int, default=None, help="Number of random programs")
@click.option("--atoms", type=int, default=None, help="Most atoms per random program")
@common_options
@click.pass_context
def crosscheck(ctx, program, seed, count, atoms, **options):
    """Exit 3 when any two characterizations disagree"""
    invoke(ctx, "crosscheck", program, seed=seed, count=count, atoms=atoms, **options)


COMMANDS = [crosscheck]
