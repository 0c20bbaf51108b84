from cli.management.commands._base import RunCommand, int_list


class Command(RunCommand):
    help = "Partial-transpose minimum eigenvalues and thresholds per bipartition"
    command_name = "ppt"

    def add_arguments(self, parser):
        self.add_system_arguments(parser)
        self.add_coefficient_arguments(parser)
        self.add_visibility_arguments(parser)
        parser.add_argument(
            "--subset",
            type=int_list,
            help="1-based parties to transpose, e.g. 2,3 (default: every bipartition)",
        )
        self.add_output_arguments(parser)
