"""
bilat-lp command-line application
Main entry point with all subcommand registrations
"""

import click

import config
from commands import check, compute, inspection


class BilatGroup(click.Group):
    """Option and usage errors exit 1; exit 2 is kept for exceeded limits"""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = 1
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = 1
            raise


@click.group(name="bilat-lp", cls=BilatGroup)
@click.option("-v", "--verbose", count=True, help="Log to stderr: -v info, -vv debug")
@click.version_option("1.0.0", prog_name="bilat-lp")
def cli(verbose):
    """Kripke-Kleene, well-founded and stable semantics of logic programs over bilattices"""
    if verbose:
        config.configure_logging("DEBUG" if verbose > 1 else "INFO", config.LOG_FORMAT)


for module in (compute, inspection, check):
    for command in module.COMMANDS:
        cli.add_command(command)


if __name__ == "__main__":
    cli()
