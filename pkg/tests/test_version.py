from click.testing import CliRunner

from app import create_cli
from globals import VERSION


class TestVersion:
    def test_version_prints_configured_version(self):
        result = CliRunner().invoke(create_cli(), ["version"])
        assert result.exit_code == 0
        assert result.stdout.strip() == VERSION
