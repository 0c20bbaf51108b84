import json
import sys
from functools import partial
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from cli.serializers import RunConfigSerializer
from cli.services.runner import run
from cmatrix.exceptions import EXIT_VALIDATION

CONFIG_OPTIONS = [
    "d",
    "N",
    "alpha",
    "theta",
    "theta_form",
    "v",
    "v_range",
    "format",
    "seed",
    "samples",
    "theta_steps",
    "subset",
    "override_restriction2",
    "numeric_threshold",
]


def _usage_error(parser, message):
    """argparse exits with 2 on bad usage; usage problems are validation errors here"""
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(EXIT_VALIDATION, f"{parser.prog}: error: {message}\n")
    raise CommandError(f"Error: {message}", returncode=EXIT_VALIDATION)


def json_list(value):
    try:
        parsed = json.loads(value)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(parsed, list):
        raise ValueError("expected a JSON list of [re, im] pairs")
    return parsed


def int_list(value):
    return [int(part) for part in value.replace(",", " ").split()]


def format_errors(errors):
    lines = []
    for key, value in errors.items():
        label = "" if key == "non_field_errors" else f"{key}: "
        for message in value if isinstance(value, list) else [value]:
            lines.append(f"{label}{message}")
    return "; ".join(lines)


class RunCommand(BaseCommand):
    """Builds a RunConfig from flags, runs it and writes the report"""

    command_name = None

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(_usage_error, parser)
        return parser

    def add_system_arguments(self, parser, required_n=True):
        parser.add_argument("--d", type=int, required=True, help="Local dimension d >= 2")
        parser.add_argument("--N", type=int, required=required_n, help="Number of parties")

    def add_coefficient_arguments(self, parser):
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument(
            "--alpha",
            type=json_list,
            help='Coefficients as a JSON list of [re, im] pairs; entries may be "p/q" strings',
        )
        group.add_argument("--theta", type=float, help="Family angle in radians")
        parser.add_argument(
            "--theta-form",
            choices=["auto", "family", "qubit"],
            default="auto",
            help="How --theta selects alpha: qubit (sin, cos) for d = 2, the theta-family otherwise",
        )
        parser.add_argument(
            "--override-restriction2",
            action="store_true",
            help="Build decompositions even when restriction (ii) fails",
        )

    def add_visibility_arguments(self, parser):
        parser.add_argument("--v", help="Visibility in [0, 1]; rationals such as 1/3 are accepted")

    def add_output_arguments(self, parser, formats=("json",)):
        parser.add_argument("--output", help="Write the report to this path instead of stdout")
        parser.add_argument("--format", choices=list(formats), help="Report format")

    def handle(self, *args, **options):
        config = {
            key: options[key]
            for key in CONFIG_OPTIONS
            if options.get(key) is not None and options.get(key) is not False
        }
        config["command"] = self.command_name

        serializer = RunConfigSerializer(data=config)
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors), returncode=EXIT_VALIDATION)

        outcome = run(serializer.validated_data)
        if outcome.status != 0:
            raise CommandError(outcome.text, returncode=outcome.status)

        if options.get("output"):
            Path(options["output"]).write_text(outcome.text, encoding="utf-8")
            self.stderr.write(self.style.SUCCESS(f"Report written to {options['output']}"))
        else:
            self.stdout.write(outcome.text, ending="")
        if outcome.result.summary:
            self.stderr.write(self.style.SUCCESS(outcome.result.summary))
