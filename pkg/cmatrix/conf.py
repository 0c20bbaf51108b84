"""Accessors for the numerical settings shared by every app."""

from django.conf import settings


def tolerance(name):
    return settings.SGWS_TOLERANCES[name]


def tolerances():
    """Copy of every tolerance in force, as embedded in reports"""
    return dict(settings.SGWS_TOLERANCES)


def max_dimension():
    return settings.SGWS_MAX_DIMENSION


def max_terms():
    return settings.SGWS_MAX_TERMS


def max_phase_dimension():
    return settings.SGWS_MAX_PHASE_DIMENSION


def eigensolver():
    return settings.SGWS_EIGENSOLVER


def jacobi_limits():
    return settings.SGWS_JACOBI_TOLERANCE, settings.SGWS_JACOBI_MAX_SWEEPS


def bisection_iterations():
    return settings.SGWS_BISECTION_ITERATIONS
