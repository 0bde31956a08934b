import click

from globals import VERSION
from helpers.debugger.logger import AbstractLogger

logger = AbstractLogger.get_instance()


@click.command(name="version", help="Mostra la versió de l'eina.")
def version_command() -> None:
    """Escriu la versió configurada en text pla."""
    logger.debug("Version check requested", module="version", metadata={"version": VERSION})
    click.echo(VERSION)
