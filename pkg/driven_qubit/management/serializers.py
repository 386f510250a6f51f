"""Serializers of the driven_qubit management commands.

Input serializers validate the merged RunConfig parameters of each subcommand, output serializers
render solver results as plain data for JSON.
"""
from rest_framework import serializers

from driven_qubit.constants import EXPORT_FORMATS, JSON, TARGETS, WITNESS
from driven_qubit.validators import is_finite


class PhysicalParametersValidationMixin:
    """Mixin to add common validation methods for physical parameters."""

    def validate_gamma(self, value):
        """Validate gamma field."""
        if value < 0:
            raise serializers.ValidationError("gamma must be non-negative")
        return value

    def validate_tau(self, value):
        """Validate tau field."""
        if value <= 0:
            raise serializers.ValidationError("tau must be positive")
        return value

    def validate(self, attrs):
        """Reject NaN and infinite values in every float field."""
        errors = {
            name: "must be a finite number"
            for name, value in attrs.items()
            if isinstance(self.fields[name], serializers.FloatField) and value is not None and not is_finite(value)
        }
        if errors:
            raise serializers.ValidationError(errors)
        return attrs


class DeltaWindowValidationMixin:
    """Mixin for commands taking an optional [delta_min, delta_max] window."""

    def validate_window(self, attrs):
        """delta_min and delta_max are given together and ordered."""
        bounds = (attrs.get("delta_min"), attrs.get("delta_max"))
        if (bounds[0] is None) != (bounds[1] is None):
            raise serializers.ValidationError("delta_min and delta_max must be given together")
        if bounds[0] is not None and bounds[0] >= bounds[1]:
            raise serializers.ValidationError("delta_min must be lower than delta_max")


class TraceSerializer(PhysicalParametersValidationMixin, serializers.Serializer):  # pylint: disable=abstract-method
    """Parameters of the `trace` command."""
    target = serializers.ChoiceField(choices=TARGETS, default=WITNESS)
    delta = serializers.FloatField(default=0.0)
    omega0 = serializers.FloatField(default=1.0)
    gamma = serializers.FloatField(default=0.0)
    tau_min = serializers.FloatField(default=0.0, min_value=0.0)
    tau_max = serializers.FloatField(default=15.0)
    tau_steps = serializers.IntegerField(default=301, min_value=2)
    format = serializers.ChoiceField(choices=EXPORT_FORMATS, default=JSON)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs["tau_min"] >= attrs["tau_max"]:
            raise serializers.ValidationError("tau_min must be lower than tau_max")
        return attrs


class GridSerializer(PhysicalParametersValidationMixin, serializers.Serializer):  # pylint: disable=abstract-method
    """Parameters of the `grid` command, defaulting to tau in [0.05, 15] and delta in [0, 2]."""
    target = serializers.ChoiceField(choices=TARGETS, default=WITNESS)
    tau_min = serializers.FloatField(default=0.05, min_value=0.0)
    tau_max = serializers.FloatField(default=15.0)
    tau_steps = serializers.IntegerField(default=300, min_value=2)
    delta_min = serializers.FloatField(default=0.0)
    delta_max = serializers.FloatField(default=2.0)
    delta_steps = serializers.IntegerField(default=300, min_value=2)
    omega0 = serializers.FloatField(default=1.0)
    gamma = serializers.FloatField(default=0.0)
    overlay_k_min = serializers.IntegerField(allow_null=True, default=None)
    overlay_k_max = serializers.IntegerField(allow_null=True, default=None)
    format = serializers.ChoiceField(choices=EXPORT_FORMATS, default=JSON)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs["tau_min"] >= attrs["tau_max"]:
            raise serializers.ValidationError("tau_min must be lower than tau_max")
        if attrs["delta_min"] >= attrs["delta_max"]:
            raise serializers.ValidationError("delta_min must be lower than delta_max")
        overlay = (attrs.get("overlay_k_min"), attrs.get("overlay_k_max"))
        if (overlay[0] is None) != (overlay[1] is None):
            raise serializers.ValidationError("overlay_k_min and overlay_k_max must be given together")
        if overlay[0] is not None and overlay[0] > overlay[1]:
            raise serializers.ValidationError("overlay_k_min must not exceed overlay_k_max")
        return attrs


class ExtremaSerializer(  # pylint: disable=abstract-method
    PhysicalParametersValidationMixin,
    DeltaWindowValidationMixin,
    serializers.Serializer,
):
    """Parameters of the `extrema` and `tailor` commands."""
    target = serializers.ChoiceField(choices=TARGETS, default=WITNESS)
    tau = serializers.FloatField()
    omega0 = serializers.FloatField(default=1.0)
    gamma = serializers.FloatField(default=0.0)
    delta_min = serializers.FloatField(allow_null=True, default=None)
    delta_max = serializers.FloatField(allow_null=True, default=None)
    scan_points = serializers.IntegerField(allow_null=True, default=None, min_value=2)
    root_tol = serializers.FloatField(allow_null=True, default=None, min_value=0.0)
    max_iterations = serializers.IntegerField(allow_null=True, default=None, min_value=1)

    def validate_root_tol(self, value):
        """Validate root_tol field."""
        if value is not None and value <= 0:
            raise serializers.ValidationError("root_tol must be positive")
        return value

    def validate(self, attrs):
        attrs = super().validate(attrs)
        self.validate_window(attrs)
        return attrs


class VerifySerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """Parameters of the `verify` command."""
    samples = serializers.IntegerField(default=200, min_value=1)
    seed = serializers.IntegerField(default=7, min_value=0)
    tolerance = serializers.FloatField(allow_null=True, default=None)
    step = serializers.FloatField(allow_null=True, default=None)

    def validate_tolerance(self, value):
        """Validate tolerance field."""
        if value is not None and not (is_finite(value) and value > 0):
            raise serializers.ValidationError("tolerance must be a positive finite number")
        return value

    def validate_step(self, value):
        """Validate step field."""
        if value is not None and not (is_finite(value) and value > 0):
            raise serializers.ValidationError("step must be a positive finite number")
        return value


class ExtremumSolutionSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """Output representation of an ExtremumSolution."""
    delta = serializers.FloatField()
    branch = serializers.CharField()
    k = serializers.IntegerField()
    kind = serializers.CharField()
    value = serializers.FloatField()
    tau = serializers.FloatField()


class TailorResultSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """Output representation of a TailorResult."""
    target = serializers.CharField()
    tau_star = serializers.FloatField()
    omega0 = serializers.FloatField()
    gamma = serializers.FloatField()
    delta_star = serializers.FloatField()
    target_value = serializers.FloatField()
    bound_value = serializers.FloatField()
    saturation_ratio = serializers.FloatField()
    all_extrema = ExtremumSolutionSerializer(many=True)


class VerificationReportSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """Output representation of a VerificationReport."""
    samples = serializers.IntegerField()
    seed = serializers.IntegerField()
    tolerance = serializers.FloatField()
    step = serializers.FloatField()
    worst_witness_deviation = serializers.FloatField()
    worst_steering_deviation = serializers.FloatField()
    worst_witness_case = serializers.DictField(child=serializers.FloatField())
    worst_steering_case = serializers.DictField(child=serializers.FloatField())
    passed = serializers.BooleanField()
