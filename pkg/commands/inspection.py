"""
Operator inspection commands
support, eval and trace at a given interpretation
"""

import click

from commands.options import at_option, common_options, invoke, program_argument


@click.command("support")
@program_argument()
@at_option()
@click.option("--trace", is_flag=True, help="Print the h-sequence")
@click.option("--oracle", is_flag=True, help="Compare with the enumeration oracles")
@common_options
@click.pass_context
def support(ctx, program, at, trace, oracle, **options):
    """Support Sp(I) of an interpretation (I_⊥k without --at)"""
    invoke(ctx, "support", program, at=at, trace=trace, oracle=oracle, **options)


@click.command("eval")
@program_argument()
@at_option()
@common_options
@click.pass_context
def evaluate(ctx, program, at, **options):
    """Φ(I) and every classification flag of I"""
    invoke(ctx, "eval", program, at=at, **options)


@click.command("trace")
@program_argument()
@at_option()
@click.option("--operator", default=None,
              type=click.Choice(["phi", "psi-prime", "support", "phi-prime"]),
              help="Iteration to dump (default phi, the Kripke-Kleene sequence)")
@common_options
@click.pass_context
def trace(ctx, program, at, operator, **options):
    """Dump every iterate of one operator"""
    invoke(ctx, "trace", program, at=at, operator=operator, **options)


COMMANDS = [support, evaluate, trace]
