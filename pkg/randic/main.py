import uuid
from typing import List, Optional

import click
from loguru import logger
from pydantic import ValidationError

from randic.commands import bound, canon, enumerate, gen, index, profile, verify
from randic.errors import RandicError
from randic.logging import get_logger, setup_logging
from randic.settings import LOG_LEVELS, settings


class RandicGroup(click.Group):
    """Turns library and usage errors into one `error: <code>: <message>` line and exit status 2."""

    def make_context(self, info_name, args, parent=None, **extra):
        # group options are parsed here, before invoke
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.exceptions.NoArgsIsHelpError:
            raise
        except click.UsageError as exc:
            click.echo(f"error: usage: {_one_line(exc.format_message())}", err=True)
            raise click.exceptions.Exit(2)

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except RandicError as exc:
            logger.debug(f"{exc.code}: {exc.detail}")
            click.echo(f"error: {exc.code}: {_one_line(exc.message)}", err=True)
            ctx.exit(2)
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(part) for part in first.get("loc", ())) or "input"
            click.echo(f"error: validation_error: {where}: {_one_line(first['msg'])}", err=True)
            ctx.exit(2)
        except click.UsageError as exc:
            click.echo(f"error: usage: {_one_line(exc.format_message())}", err=True)
            ctx.exit(2)


def _one_line(text: str) -> str:
    return " ".join(str(text).split())


@click.group(cls=RandicGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(settings.app_version, prog_name=settings.app_name)
@click.option("--log-level", default=None, type=click.Choice(LOG_LEVELS, case_sensitive=False),
              help="Overrides RANDIC_LOG_LEVEL.")
@click.option("--log-file", default=None, type=click.Path(dir_okay=False),
              help="Overrides RANDIC_LOG_FILE.")
@click.pass_context
def cli(ctx, log_level, log_file):
    """Zeroth-order general Randic index toolkit."""
    setup_logging(log_level, log_file)
    run_id = uuid.uuid4().hex[:12]
    logger.configure(extra={"trace_id": run_id})
    ctx.obj = {"run_id": run_id}
    get_logger(run_id).info(f"run {ctx.invoked_subcommand} | {settings.app_name} {settings.app_version}")


# COMMANDS
cli.add_command(index.index_command)
cli.add_command(gen.gen_command)
cli.add_command(bound.bound_command)
cli.add_command(enumerate.enumerate_command)
cli.add_command(verify.verify_command)
cli.add_command(canon.canon_command)
cli.add_command(profile.profile_command)


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on argv (sys.argv when None) and return its exit status."""
    try:
        cli.main(args=argv, prog_name="randic")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
