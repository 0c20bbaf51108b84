from cli.management.commands._base import RunCommand


class Command(RunCommand):
    help = "Critical values and single-qudit eigenvalues across the theta-family"
    command_name = "family_scan"

    def add_arguments(self, parser):
        self.add_system_arguments(parser)
        parser.add_argument("--theta-steps", type=int, default=32, help="Uniform steps on [0, pi/2)")
        self.add_output_arguments(parser, formats=("csv", "json"))
