import click

from resources.sweep import SWEEP_COMMANDS
from resources.version import version_command

PROGRAM_NAME = "spectroscope"


def create_cli() -> click.Group:
    """
    Creates the command-line application.

    Returns:
        click.Group: Group with one command per sweep mode plus `version`.
    """
    @click.group(
        name=PROGRAM_NAME,
        help="Espectroscòpia multifotònica de dos qubits acoblats sota excitació periòdica.",
    )
    def cli() -> None:
        pass

    for command in SWEEP_COMMANDS:
        cli.add_command(command)
    cli.add_command(version_command)
    return cli


def main() -> None:
    create_cli()(prog_name=PROGRAM_NAME)


if __name__ == '__main__':
    main()
