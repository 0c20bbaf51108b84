from cli.management.commands._base import RunCommand


class Command(RunCommand):
    help = "Critical visibility v_c = T / (d^N + T) of an SGWS"
    command_name = "threshold"

    def add_arguments(self, parser):
        self.add_system_arguments(parser)
        self.add_coefficient_arguments(parser)
        parser.add_argument(
            "--numeric-threshold",
            action="store_true",
            help="Also bisect the PPT boundary over every bipartition",
        )
        self.add_output_arguments(parser)
