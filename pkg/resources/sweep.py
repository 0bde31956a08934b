import click

from application.container import ServiceFactory
from globals import DEFAULT_WORKER_COUNT
from helpers.debugger.logger import AbstractLogger
from helpers.enums.sweep_mode import SweepMode
from helpers.exceptions.config_exceptions import (
    InvalidConfigKeyException,
    InvalidConfigValueException,
    OutputWriteException,
)

EXIT_CONFIG_ERROR = 2
EXIT_UNEXPECTED_ERROR = 1

MODE_HELP = {
    SweepMode.QUASIENERGIES: "Quasienergies numèriques i pertorbatives al llarg d'un eix.",
    SweepMode.SWEEP1D: "Probabilitats mitjanes de transició al llarg d'un eix.",
    SweepMode.SWEEP2D: "Mapa de probabilitats sobre dos eixos (per exemple eps1 i eps2).",
    SweepMode.GMAP: "Mapa de probabilitats sobre un biaix i l'acoblament g.",
    SweepMode.DISSIPATIVE: "Probabilitats i concurrència amb relaxació i desfasament.",
}

logger = AbstractLogger.get_instance()


def run_sweep(mode: SweepMode, config_path: str, overrides: tuple, output: str, workers: int) -> None:
    """
    Executa un escombrat complet i publica el CSV, el fitxer de metadades i la superposició.

    Codis de sortida:
    - 0: Escombrat completat (els punts fallits queden marcats a la taula).
    - 2: Configuració no vàlida; el missatge indica la clau.
    - 1: Error inesperat o d'escriptura.
    """
    factory = ServiceFactory.get_instance()
    try:
        config = factory.build_config_service().load(config_path, overrides, mode, output, workers)
    except (InvalidConfigKeyException, InvalidConfigValueException) as e:
        logger.error("Invalid sweep configuration", module="sweep", metadata=e.details())
        click.echo(f"Error de configuració [{e.key}]: {e.message}", err=True)
        raise click.exceptions.Exit(EXIT_CONFIG_ERROR)

    try:
        table = factory.build_sweep_service().run(config)
    except OutputWriteException as e:
        logger.error("Could not write sweep results", module="sweep", metadata=e.details(), error=e)
        click.echo(f"Error d'escriptura: {e.message}", err=True)
        raise click.exceptions.Exit(EXIT_UNEXPECTED_ERROR)
    except Exception as e:
        logger.error("Sweep aborted", module="sweep", metadata={"mode": mode.value}, error=e)
        click.echo(f"S'ha produït un error inesperat: {str(e)}", err=True)
        raise click.exceptions.Exit(EXIT_UNEXPECTED_ERROR)

    click.echo(f"{len(table.rows)} punts escrits a {config.output}")


def build_sweep_command(mode: SweepMode) -> click.Command:
    @click.command(name=mode.value, help=MODE_HELP[mode])
    @click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False), help="Fitxer de configuració clau = valor.")
    @click.option("--set", "overrides", multiple=True, metavar="CLAU=VALOR", help="Substitueix un valor del fitxer.")
    @click.option("--out", "output", default="results.csv", show_default=True, type=click.Path(dir_okay=False), help="Fitxer CSV de sortida.")
    @click.option("--workers", default=DEFAULT_WORKER_COUNT, show_default=True, type=click.IntRange(min=1), help="Processos de càlcul.")
    def command(config_path: str, overrides: tuple, output: str, workers: int) -> None:
        run_sweep(mode, config_path, overrides, output, workers)

    return command


SWEEP_COMMANDS = [build_sweep_command(mode) for mode in SweepMode]
