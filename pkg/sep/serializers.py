import jsonschema
import numpy as np
from rest_framework import serializers

from sep.exceptions import DecompositionFormatError
from sep.services.decomposition import ProductDecomposition, ProductTerm, RHO

COMPLEX_ENTRY = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}

DECOMPOSITION_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["d", "N", "terms"],
    "properties": {
        "d": {"type": "integer", "minimum": 1},
        "N": {"type": "integer", "minimum": 1},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["weight", "factors"],
                "properties": {
                    "weight": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                    "kind": {"type": "string"},
                    "factors": {
                        "type": "array",
                        "minItems": 1,
                        "items": {
                            "type": "array",
                            "minItems": 1,
                            "items": {"type": "array", "minItems": 1, "items": COMPLEX_ENTRY},
                        },
                    },
                },
            },
        },
    },
}


class ComplexMatrixField(serializers.Field):
    """A matrix as rows of [re, im] pairs"""

    def to_representation(self, value):
        matrix = np.asarray(value, dtype=np.complex128)
        return [[[float(entry.real), float(entry.imag)] for entry in row] for row in matrix]

    def to_internal_value(self, data):
        try:
            pairs = np.asarray(data, dtype=float)
        except (TypeError, ValueError):
            raise serializers.ValidationError("expected rows of [re, im] pairs")
        if pairs.ndim != 3 or pairs.shape[2] != 2:
            raise serializers.ValidationError("expected rows of [re, im] pairs")
        return pairs[..., 0] + 1j * pairs[..., 1]


class ProductTermSerializer(serializers.Serializer):
    weight = serializers.FloatField()
    kind = serializers.CharField(default=RHO)
    factors = serializers.ListField(child=ComplexMatrixField())


class ProductDecompositionSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    N = serializers.IntegerField()
    terms = ProductTermSerializer(many=True)


class DecompositionSummarySerializer(serializers.Serializer):
    d = serializers.IntegerField()
    N = serializers.IntegerField()
    term_count = serializers.SerializerMethodField()
    terms_by_kind = serializers.SerializerMethodField()
    restriction2_override = serializers.BooleanField()
    marginals = serializers.ListField(child=ComplexMatrixField(), read_only=True)

    def get_term_count(self, obj):
        return len(obj.terms)

    def get_terms_by_kind(self, obj):
        return obj.summary()["terms_by_kind"]


class VerificationRecordSerializer(serializers.Serializer):
    reconstruction_error = serializers.FloatField()
    min_factor_eig = serializers.FloatField()
    weight_sum_error = serializers.FloatField()
    passed = serializers.BooleanField()


class PptWitnessSerializer(serializers.Serializer):
    subset = serializers.ListField(child=serializers.IntegerField())
    min_eigenvalue = serializers.FloatField()


class PptThresholdSerializer(serializers.Serializer):
    subset = serializers.ListField(child=serializers.IntegerField())
    v = serializers.FloatField()
    crossed = serializers.BooleanField()


class CauchySchwarzViolationSerializer(serializers.Serializer):
    n = serializers.ListField(child=serializers.IntegerField())
    m = serializers.ListField(child=serializers.IntegerField())
    mu = serializers.ListField(child=serializers.IntegerField())
    nu = serializers.ListField(child=serializers.IntegerField())
    lhs = serializers.FloatField()
    rhs = serializers.FloatField()


class CertReportSerializer(serializers.Serializer):
    verdict = serializers.CharField()
    threshold_formula = serializers.FloatField()
    threshold_numeric = serializers.FloatField(allow_null=True)
    ppt_witness = PptWitnessSerializer(allow_null=True)
    cauchy_schwarz_witness = CauchySchwarzViolationSerializer(allow_null=True)
    decomposition = DecompositionSummarySerializer(allow_null=True)
    verification = VerificationRecordSerializer(allow_null=True)
    notes = serializers.ListField(child=serializers.CharField())


def dump_decomposition(decomp):
    return ProductDecompositionSerializer(decomp).data


def load_decomposition(document):
    """Validate a decomposition document and rebuild the decomposition"""
    try:
        jsonschema.validate(document, DECOMPOSITION_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise DecompositionFormatError(f"invalid decomposition document: {exc.message}") from exc

    d, N = document["d"], document["N"]
    field = ComplexMatrixField()
    terms = []
    for position, term in enumerate(document["terms"]):
        if len(term["factors"]) != N:
            raise DecompositionFormatError(f"term {position} has {len(term['factors'])} factors, expected {N}")
        try:
            factors = tuple(field.to_internal_value(factor) for factor in term["factors"])
        except serializers.ValidationError as exc:
            raise DecompositionFormatError(f"term {position}: {exc.detail[0]}") from exc
        if any(factor.shape != (d, d) for factor in factors):
            raise DecompositionFormatError(f"term {position} has a factor that is not {d}x{d}")
        terms.append(ProductTerm(weight=float(term["weight"]), factors=factors, kind=term.get("kind", RHO)))
    return ProductDecomposition(d=d, N=N, terms=terms)
