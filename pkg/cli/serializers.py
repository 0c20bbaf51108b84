from rest_framework import serializers

from sgws.exceptions import CoefficientValidationError
from sgws.services.states import parse_coeffs, parse_scalar

COMMANDS = [
    "threshold",
    "certify",
    "decompose",
    "ppt",
    "concurrence",
    "family_scan",
    "conjecture_scan",
]
COEFFICIENT_COMMANDS = {"threshold", "certify", "decompose", "ppt", "concurrence"}
VISIBILITY_COMMANDS = {"certify", "decompose", "ppt", "concurrence"}
TABLE_COMMANDS = {"family_scan", "conjecture_scan"}


class RunConfigSerializer(serializers.Serializer):
    """One certification run, from command flags or an HTTP body"""

    command = serializers.ChoiceField(choices=COMMANDS)
    d = serializers.IntegerField(min_value=2, required=False)
    N = serializers.IntegerField(min_value=1, required=False)
    alpha = serializers.JSONField(required=False)
    theta = serializers.FloatField(required=False)
    theta_form = serializers.ChoiceField(choices=["auto", "family", "qubit"], default="auto")
    v = serializers.CharField(required=False)
    v_range = serializers.CharField(required=False)
    format = serializers.ChoiceField(choices=["json", "csv"], required=False)
    seed = serializers.IntegerField(default=0)
    samples = serializers.IntegerField(min_value=0, default=100)
    theta_steps = serializers.IntegerField(min_value=1, default=32)
    subset = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False)
    override_restriction2 = serializers.BooleanField(default=False)
    numeric_threshold = serializers.BooleanField(default=False)

    def validate_alpha(self, value):
        try:
            return parse_coeffs(value)
        except CoefficientValidationError as exc:
            raise serializers.ValidationError(str(exc))

    def validate_v(self, value):
        try:
            v = parse_scalar(value)
        except CoefficientValidationError as exc:
            raise serializers.ValidationError(str(exc))
        if not 0.0 <= v <= 1.0:
            raise serializers.ValidationError("v must lie in [0, 1]")
        return v

    def validate_v_range(self, value):
        """start,stop,steps"""
        parts = [part.strip() for part in value.split(",")]
        if len(parts) != 3:
            raise serializers.ValidationError("expected start,stop,steps")
        try:
            start, stop = parse_scalar(parts[0]), parse_scalar(parts[1])
            steps = int(parts[2])
        except (CoefficientValidationError, ValueError):
            raise serializers.ValidationError("expected start,stop,steps")
        if steps < 1:
            raise serializers.ValidationError("steps must be at least 1")
        if not (0.0 <= start <= 1.0 and 0.0 <= stop <= 1.0):
            raise serializers.ValidationError("v-range endpoints must lie in [0, 1]")
        return start, stop, steps

    def validate(self, attrs):
        command = attrs["command"]

        if command == "concurrence":
            attrs.setdefault("d", 2)
            attrs.setdefault("N", 2)
            if attrs["d"] != 2 or attrs["N"] != 2:
                raise serializers.ValidationError("concurrence is defined for two qubits: d = 2, N = 2")
        for name in ("d", "N"):
            if name not in attrs:
                raise serializers.ValidationError({name: "This field is required."})

        has_alpha, has_theta = "alpha" in attrs, "theta" in attrs
        if command in COEFFICIENT_COMMANDS and has_alpha == has_theta:
            raise serializers.ValidationError("exactly one of alpha or theta is required")
        if command not in COEFFICIENT_COMMANDS and (has_alpha or has_theta):
            raise serializers.ValidationError(f"{command} does not take alpha or theta")
        if has_alpha and len(attrs["alpha"]) != attrs["d"]:
            raise serializers.ValidationError({"alpha": f"expected {attrs['d']} coefficients for d = {attrs['d']}"})
        if has_theta and attrs["theta_form"] == "qubit" and attrs["d"] != 2:
            raise serializers.ValidationError({"theta_form": "the qubit form needs d = 2"})

        if command == "concurrence":
            if ("v" in attrs) == ("v_range" in attrs):
                raise serializers.ValidationError("exactly one of v or v_range is required")
        elif command in VISIBILITY_COMMANDS:
            if "v" not in attrs:
                raise serializers.ValidationError({"v": f"This field is required for {command}."})
            if "v_range" in attrs:
                raise serializers.ValidationError({"v_range": "only concurrence sweeps over v"})

        if "subset" in attrs and command != "ppt":
            raise serializers.ValidationError({"subset": "only ppt takes a subset"})
        if command == "ppt" and "subset" in attrs:
            subset = attrs["subset"]
            if not subset or not set(subset) < set(range(1, attrs["N"] + 1)):
                raise serializers.ValidationError(
                    {"subset": f"must be a nonempty proper subset of 1..{attrs['N']}"}
                )

        if "format" not in attrs:
            sweep = command in TABLE_COMMANDS or "v_range" in attrs
            attrs["format"] = "csv" if sweep else "json"
        if attrs["format"] == "csv" and command not in TABLE_COMMANDS and "v_range" not in attrs:
            raise serializers.ValidationError({"format": f"{command} emits a JSON report only"})
        return attrs
