import math

from marshmallow import RAISE, Schema, ValidationError, fields, validate, validates_schema

from globals import N_SAMPLES, TOLERANCE
from helpers.enums.sweep_parameter import SweepParameter

SWEEP_PARAMETER_VALUES = [parameter.value for parameter in SweepParameter]
AXIS_DESCRIPTION = (
    "Eix d'escombrat amb el format nom:min:max:n. "
    f"Noms acceptats: {', '.join(SWEEP_PARAMETER_VALUES)}."
)

non_negative = validate.Range(min=0.0)
positive = validate.Range(min=0.0, min_inclusive=False)


def _is_power_of_two(value: int) -> bool:
    return value >= 1 and not value & (value - 1)


class AxisField(fields.Field):
    """
    Camp per a un eix d'escombrat escrit com a `nom:min:max:n`.
    """

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, dict):
            return value
        parts = str(value).split(":")
        if len(parts) != 4:
            raise ValidationError("L'eix ha de tenir el format nom:min:max:n.")
        name, minimum, maximum, n_points = (part.strip() for part in parts)
        if name not in SWEEP_PARAMETER_VALUES:
            raise ValidationError(f"Paràmetre d'eix desconegut. Valors acceptats: {', '.join(SWEEP_PARAMETER_VALUES)}.")
        try:
            bounds = float(minimum), float(maximum)
            count = int(n_points)
        except ValueError as exc:
            raise ValidationError("Els límits han de ser nombres i n un enter.") from exc
        if not all(math.isfinite(bound) for bound in bounds):
            raise ValidationError("Els límits de l'eix han de ser finits.")
        if count < 2:
            raise ValidationError("Un eix necessita almenys 2 punts.")
        return {"parameter": name, "minimum": bounds[0], "maximum": bounds[1], "n_points": count}


class SweepConfigSchema(Schema):
    """
    Esquema de validació del fitxer de configuració d'un escombrat.
    """

    class Meta:
        unknown = RAISE
        description = "Paràmetres del sistema, de l'excitació, dels eixos i de la dissipació."
        example = {
            "delta1": 0.1, "delta2": 0.15, "g": 0.15, "amplitude": 5.0, "omega": 1.0,
            "ratio": 2.0, "axis1": "eps1:0:6:600",
        }

    eps1 = fields.Float(load_default=0.0, metadata={"description": "Biaix d'energia del qubit 1."})
    eps2 = fields.Float(load_default=0.0, metadata={"description": "Biaix d'energia del qubit 2."})
    delta1 = fields.Float(load_default=0.0, validate=non_negative, metadata={"description": "Desdoblament per efecte túnel del qubit 1."})
    delta2 = fields.Float(load_default=0.0, validate=non_negative, metadata={"description": "Desdoblament per efecte túnel del qubit 2."})
    g = fields.Float(load_default=0.0, metadata={"description": "Acoblament sigma_z sigma_z (amb signe)."})
    amplitude = fields.Float(load_default=0.0, metadata={"description": "Amplitud A de l'excitació."})
    omega = fields.Float(load_default=1.0, validate=positive, metadata={"description": "Freqüència de l'excitació."})
    phi0 = fields.Float(
        load_default=0.0,
        validate=validate.Range(min=0.0, max=2 * math.pi, max_inclusive=False),
        metadata={"description": "Fase inicial de l'excitació."},
    )
    ratio = fields.Float(load_default=None, allow_none=True, metadata={"description": "Relació eps2 = ratio * eps1."})
    axis1 = AxisField(required=True, metadata={"description": AXIS_DESCRIPTION})
    axis2 = AxisField(load_default=None, allow_none=True, metadata={"description": AXIS_DESCRIPTION})

    gamma_phi = fields.Float(load_default=None, allow_none=True, validate=non_negative)
    gamma_phi1 = fields.Float(load_default=None, allow_none=True, validate=non_negative)
    gamma_phi2 = fields.Float(load_default=None, allow_none=True, validate=non_negative)
    gamma_down = fields.Float(load_default=None, allow_none=True, validate=non_negative)
    gamma_down1 = fields.Float(load_default=None, allow_none=True, validate=non_negative)
    gamma_down2 = fields.Float(load_default=None, allow_none=True, validate=non_negative)
    gamma_up1 = fields.Float(load_default=None, allow_none=True, validate=non_negative)
    gamma_up2 = fields.Float(load_default=None, allow_none=True, validate=non_negative)
    temperature_mk = fields.Float(load_default=None, allow_none=True, validate=positive, metadata={"description": "Temperatura del bany en mK."})
    tau_b = fields.Float(load_default=None, allow_none=True, validate=positive, metadata={"description": "Temperatura del bany en unitats de freqüència."})

    tol = fields.Float(load_default=TOLERANCE, validate=validate.Range(min=1e-13, max=1e-6))
    n_samples = fields.Integer(
        load_default=N_SAMPLES,
        validate=validate.Range(min=1),
    )
    k_max = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=1))
    transient = fields.Boolean(load_default=False)
    overlay = fields.Boolean(load_default=True)

    @validates_schema
    def validate_consistency(self, data, **kwargs):
        if not _is_power_of_two(data.get("n_samples", N_SAMPLES)):
            raise ValidationError("El nombre de mostres ha de ser una potència de 2.", field_name="n_samples")
        if data.get("temperature_mk") is not None and data.get("tau_b") is not None:
            raise ValidationError("Indica temperature_mk o tau_b, no tots dos.", field_name="tau_b")
        if data.get("gamma_up1") is not None or data.get("gamma_up2") is not None:
            if data.get("temperature_mk") is not None or data.get("tau_b") is not None:
                raise ValidationError(
                    "Les taxes d'excitació es deriven de la temperatura; no les fixis alhora.",
                    field_name="gamma_up1",
                )
        axis1, axis2 = data.get("axis1"), data.get("axis2")
        if axis1 and axis2 and axis1["parameter"] == axis2["parameter"]:
            raise ValidationError("Els dos eixos han d'escombrar paràmetres diferents.", field_name="axis2")
        swept = {axis["parameter"] for axis in (axis1, axis2) if axis}
        if data.get("ratio") is not None and SweepParameter.EPS2.value in swept:
            raise ValidationError("No es pot escombrar eps2 si està lligat a eps1.", field_name="ratio")
