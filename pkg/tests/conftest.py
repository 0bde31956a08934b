import pytest

from domain.entities.system import Drive, SystemParams


@pytest.fixture
def fig1_params():
    """Reference qubit pair at an off-resonant bias with eps2 = 2 eps1."""
    return SystemParams(eps1=2.24, eps2=4.48, delta1=0.1, delta2=0.15, g=0.15)


@pytest.fixture
def fig1_drive():
    return Drive(amplitude=5.0, omega=1.0)


@pytest.fixture
def diagonal_params():
    """No tunnelling: every Floquet mode stays on its basis state."""
    return SystemParams(eps1=0.2, eps2=0.4, delta1=0.0, delta2=0.0, g=0.15)


@pytest.fixture
def write_config(tmp_path):
    """Write a key = value configuration file and return its path."""
    def _write(text: str, name: str = "sweep.cfg") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
