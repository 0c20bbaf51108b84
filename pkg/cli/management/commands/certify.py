from cli.management.commands._base import RunCommand


class Command(RunCommand):
    help = "Certify full separability or entanglement of an SGWS at visibility v"
    command_name = "certify"

    def add_arguments(self, parser):
        self.add_system_arguments(parser)
        self.add_coefficient_arguments(parser)
        self.add_visibility_arguments(parser)
        parser.add_argument(
            "--numeric-threshold",
            action="store_true",
            help="Attach the bisected PPT threshold to the report",
        )
        self.add_output_arguments(parser)
