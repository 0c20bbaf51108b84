from cli.management.commands._base import RunCommand


class Command(RunCommand):
    help = "Concurrence and entanglement of formation of the two-qubit SGWS"
    command_name = "concurrence"

    def add_arguments(self, parser):
        parser.add_argument("--d", type=int, default=2, help="Must be 2")
        parser.add_argument("--N", type=int, default=2, help="Must be 2")
        self.add_coefficient_arguments(parser)
        visibility = parser.add_mutually_exclusive_group(required=True)
        visibility.add_argument("--v", help="Visibility in [0, 1]")
        visibility.add_argument("--v-range", help="Sweep as start,stop,steps")
        self.add_output_arguments(parser, formats=("json", "csv"))
