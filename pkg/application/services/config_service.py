from __future__ import annotations

from typing import Dict, Iterable, Optional

from marshmallow import ValidationError

from domain.entities.dissipation import Rates
from domain.entities.sweep import SweepAxis, SweepConfig
from domain.entities.system import Drive, SystemParams
from domain.services.dissipation import bath_temperature
from helpers.config_parser import parse_overrides, read_config_file
from helpers.enums.sweep_mode import SweepMode
from helpers.enums.sweep_parameter import SweepParameter
from helpers.exceptions.base import ApplicationException
from helpers.exceptions.config_exceptions import InvalidConfigKeyException, InvalidConfigValueException
from schemas import SweepConfigSchema


class ConfigService:
    """
    Turns a configuration file plus command-line overrides into a validated SweepConfig.
    """

    def __init__(self, schema: Optional[SweepConfigSchema] = None) -> None:
        self.schema = schema or SweepConfigSchema()

    def load(
        self,
        path: str,
        overrides: Iterable[str],
        mode: SweepMode,
        output: str,
        workers: int,
    ) -> SweepConfig:
        """
        Read, merge and validate a sweep configuration.
        Args:
            path (str): Configuration file.
            overrides (Iterable[str]): `key=value` pairs that replace file values.
            mode (SweepMode): Sweep mode selected on the command line.
            output (str): CSV destination.
            workers (int): Worker process count.
        Returns:
            SweepConfig: The validated configuration.
        Raises:
            InvalidConfigKeyException: For unknown keys.
            InvalidConfigValueException: For invalid values or inconsistent combinations.
        """
        raw = read_config_file(path)
        raw.update(parse_overrides(overrides))
        return self.build(raw, mode, output, workers)

    def build(self, raw: Dict[str, str], mode: SweepMode, output: str, workers: int) -> SweepConfig:
        data = self._validate(raw)
        if workers < 1:
            raise InvalidConfigValueException("Cal almenys un procés de treball.", key="workers")
        axes = self._axes(data, mode)
        try:
            params = SystemParams(
                eps1=data["eps1"], eps2=data["eps2"],
                delta1=data["delta1"], delta2=data["delta2"], g=data["g"],
            )
            drive = Drive(amplitude=data["amplitude"], omega=data["omega"], phi0=data["phi0"])
        except ApplicationException as exc:
            raise InvalidConfigValueException(exc.message, key="params") from exc
        rates = self._rates(data, mode)
        return SweepConfig(
            mode=mode,
            params=params,
            drive=drive,
            axes=axes,
            ratio=data["ratio"],
            rates=rates,
            tol=data["tol"],
            n_samples=data["n_samples"],
            k_max=data["k_max"],
            transient=data["transient"],
            overlay=data["overlay"],
            output=output,
            workers=workers,
        )

    def _validate(self, raw: Dict[str, str]) -> dict:
        try:
            return self.schema.load(raw)
        except ValidationError as exc:
            messages = exc.messages if isinstance(exc.messages, dict) else {"_schema": exc.messages}
            for key in sorted(messages):
                if key not in self.schema.fields and key != "_schema":
                    raise InvalidConfigKeyException(key=key) from exc
            key = sorted(messages)[0]
            detail = messages[key]
            text = "; ".join(detail) if isinstance(detail, list) else str(detail)
            raise InvalidConfigValueException(f"Valor no vàlid per a '{key}': {text}", key=key) from exc

    def _axes(self, data: dict, mode: SweepMode) -> tuple:
        raw_axes = [data["axis1"]] + ([data["axis2"]] if data["axis2"] else [])
        if len(raw_axes) != mode.dimensions:
            raise InvalidConfigValueException(
                f"El mode {mode.value} necessita {mode.dimensions} eix(os).", key="axis2"
            )
        axes = tuple(
            SweepAxis(
                parameter=SweepParameter(axis["parameter"]),
                minimum=axis["minimum"],
                maximum=axis["maximum"],
                n_points=axis["n_points"],
            )
            for axis in raw_axes
        )
        if mode == SweepMode.GMAP and SweepParameter.G not in {axis.parameter for axis in axes}:
            raise InvalidConfigValueException("El mode gmap ha d'escombrar l'acoblament g.", key="axis2")
        for position, axis in enumerate(axes, start=1):
            if axis.parameter in (SweepParameter.DELTA1, SweepParameter.DELTA2) and min(axis.minimum, axis.maximum) < 0:
                raise InvalidConfigValueException("Els desdoblaments no poden ser negatius.", key=f"axis{position}")
        return axes

    @staticmethod
    def _pair(data: dict, name: str) -> tuple:
        shared = data.get(name)
        return tuple(
            data.get(f"{name}{q}") if data.get(f"{name}{q}") is not None else (shared or 0.0)
            for q in (1, 2)
        )

    def _rates(self, data: dict, mode: SweepMode) -> Optional[Rates]:
        if mode != SweepMode.DISSIPATIVE:
            return None
        tau_b = data["tau_b"]
        if data["temperature_mk"] is not None:
            tau_b = bath_temperature(data["temperature_mk"] / 1000.0)
        try:
            rates = Rates(
                gamma_phi=self._pair(data, "gamma_phi"),
                gamma_down=self._pair(data, "gamma_down"),
                gamma_up=(data["gamma_up1"] or 0.0, data["gamma_up2"] or 0.0),
                tau_b=tau_b,
            )
        except ApplicationException as exc:
            raise InvalidConfigValueException(exc.message, key="gamma_down") from exc
        if not rates.relaxing:
            raise InvalidConfigValueException("El mode dissipatiu necessita una taxa de relaxació positiva.", key="gamma_down")
        if data["transient"] and not any(rate > 0 for rate in rates.gamma_phi):
            raise InvalidConfigValueException("El mode transitori necessita una taxa de desfasament positiva.", key="gamma_phi")
        return rates
