"""
Semantics commands
kk, wf, stable and classify over a program file
"""

import click

from commands.options import at_option, common_options, invoke, program_argument


@click.command("kk")
@program_argument()
@click.option("--trace", is_flag=True, help="Print the Φ iteration from I_⊥k")
@common_options
@click.pass_context
def kk(ctx, program, trace, **options):
    """Kripke-Kleene model: least fixpoint of Φ under the knowledge order"""
    invoke(ctx, "kk", program, trace=trace, **options)


@click.command("wf")
@program_argument()
@click.option("--route", default=None,
              help="psi-prime, pi, pi-tilde, phi-prime, w-p, or all to run and compare every route")
@click.option("--trace", is_flag=True, help="Print the outer iteration and every nested one")
@common_options
@click.pass_context
def wf(ctx, program, route, trace, **options):
    """Well-founded model"""
    invoke(ctx, "wf", program, route=route, trace=trace, **options)


@click.command("stable")
@program_argument()
@at_option()
@click.option("--method", default=None,
              type=click.Choice(["psi-prime", "phi-prime", "kk-completion", "min-k", "gl-reduct"]),
              help="Stability characterization to use")
@common_options
@click.pass_context
def stable(ctx, program, at, method, **options):
    """Check one interpretation with --at, or list every stable model"""
    invoke(ctx, "stable", program, at=at, method=method, **options)


@click.command("classify")
@program_argument()
@click.option("--all", "all_interpretations", is_flag=True,
              help="Classify every interpretation, not only the cl-models")
@common_options
@click.pass_context
def classify(ctx, program, all_interpretations, **options):
    """Table of cl-models with supports, unfounded sets and semantic flags"""
    invoke(ctx, "classify", program, all_interpretations=all_interpretations, **options)


COMMANDS = [kk, wf, stable, classify]
